use itertools::Itertools;

use crate::error::QuandleError;

/// A finite group given by its multiplication table on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let n = mul.len();
        if n == 0 {
            return Err(QuandleError::InvalidGroup("empty table".into()));
        }
        if mul.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(QuandleError::InvalidGroup("table is not n x n over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| QuandleError::InvalidGroup("no identity".into()))?;
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[x] = (0..n)
                .find(|&y| mul[x][y] == identity && mul[y][x] == identity)
                .ok_or_else(|| QuandleError::InvalidGroup(format!("{x} has no inverse")))?;
        }
        for (a, b, c) in (0..n).cartesian_product(0..n).cartesian_product(0..n).map(|((a, b), c)| (a, b, c)) {
            if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                return Err(QuandleError::InvalidGroup(format!("not associative at ({a},{b},{c})")));
            }
        }
        Ok(Self { mul, identity, inv, perms: None })
    }

    /// `S_k` with elements in lexicographic order of their image tuples and
    /// product `(p·q)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> Self {
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mul = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&q.iter().map(|&i| p[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let mut g = Self::from_table(mul).expect("symmetric group");
        g.perms = Some(perms);
        g
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
            .expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `y^{-1} x y`.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul[self.mul[self.inv[y]][x]][y]
    }

    /// Index of a permutation (images of `0..k`) when built by [`Self::symmetric`].
    pub fn index_of_perm(&self, p: &[usize]) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    pub fn perm(&self, i: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|ps| ps[i].as_slice())
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        let s4 = FiniteGroup::symmetric(4);
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.perm(s4.identity()).unwrap(), &[0, 1, 2, 3]);
        let c = s4.index_of_perm(&[1, 2, 3, 0]).unwrap();
        assert_eq!(s4.perm(s4.inv(c)).unwrap(), &[3, 0, 1, 2]);
    }

    #[test]
    fn invalid_tables() {
        assert!(FiniteGroup::from_table(vec![]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        // has identity 0 and inverses but is not associative
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(FiniteGroup::from_table(bad).is_err());
    }
}
