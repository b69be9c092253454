use std::fmt;
use std::sync::Arc;

use crate::error::RingError;

/// A finitely generated abelian group `Z^r x Z_{n_1} x ... x Z_{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<i64>,
}

/// An element of an [`AbelianGroup`] in componentwise encoding: integers for
/// the free part followed by residues `0..n_i` for the torsion part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem(pub(crate) Vec<i64>);

impl GroupElem {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<Self, RingError> {
        if let Some(&n) = torsion.iter().find(|&&n| n < 2) {
            return Err(RingError::InvalidGroup(format!("torsion order {n} < 2")));
        }
        Ok(Self { free_rank, torsion })
    }

    /// The trivial group; its group ring is `Z`.
    pub fn trivial() -> Self {
        Self { free_rank: 0, torsion: vec![] }
    }

    /// `Z = <t>`, whose group ring is the Laurent ring `Z[t^{±1}]`.
    pub fn laurent() -> Self {
        Self { free_rank: 1, torsion: vec![] }
    }

    /// `Z_n = <u | u^n>`.
    pub fn cyclic(n: i64) -> Result<Self, RingError> {
        Self::new(0, vec![n])
    }

    pub fn arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_laurent(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    /// `Some(n)` when the group is cyclic of order `n`.
    pub fn cyclic_order(&self) -> Option<i64> {
        match (self.free_rank, self.torsion.as_slice()) {
            (0, [n]) => Some(*n),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.is_finite().then(|| self.torsion.iter().map(|&n| n as usize).product())
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.rank()])
    }

    /// Builds an element from raw coordinates, reducing the torsion part.
    pub fn elem(&self, coords: &[i64]) -> Result<GroupElem, RingError> {
        if coords.len() != self.rank() {
            return Err(RingError::InvalidGroup(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        Ok(self.reduce(coords.to_vec()))
    }

    /// The `i`-th generator (free generators first).
    pub fn generator(&self, i: usize) -> GroupElem {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.reduce(c)
    }

    fn reduce(&self, mut c: Vec<i64>) -> GroupElem {
        for (k, &n) in self.torsion.iter().enumerate() {
            let x = &mut c[self.free_rank + k];
            *x = x.rem_euclid(n);
        }
        GroupElem(c)
    }

    pub fn op(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    pub fn pow(&self, a: &GroupElem, k: i64) -> GroupElem {
        self.reduce(a.0.iter().map(|x| x * k).collect())
    }

    pub fn is_identity(&self, a: &GroupElem) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    /// All elements of a finite group in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElem>, RingError> {
        if !self.is_finite() {
            return Err(RingError::InfiniteGroup);
        }
        let mut out = vec![GroupElem(vec![])];
        for &n in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..n).map(move |r| {
                        let mut c = e.0.clone();
                        c.push(r);
                        GroupElem(c)
                    })
                })
                .collect();
        }
        Ok(out)
    }

    /// Position of an element in [`Self::elements`].
    pub fn index_of(&self, a: &GroupElem) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        let mut idx = 0usize;
        for (k, &n) in self.torsion.iter().enumerate() {
            idx = idx * n as usize + a.0[k] as usize;
        }
        Some(idx)
    }

    /// Variable names used in text: `t` / `u` for rank one, otherwise
    /// `t1..tr` for free and `u1..uk` for torsion generators.
    pub fn var_names(&self) -> Vec<String> {
        if self.rank() == 1 {
            return vec![if self.free_rank == 1 { "t" } else { "u" }.to_string()];
        }
        let free = (1..=self.free_rank).map(|i| format!("t{i}"));
        let tors = (1..=self.torsion.len()).map(|i| format!("u{i}"));
        free.chain(tors).collect()
    }

    /// Formats a group element multiplicatively, `e` for the identity.
    pub fn format_elem(&self, a: &GroupElem) -> String {
        let s = self.format_monomial(a);
        if s.is_empty() {
            "e".to_string()
        } else {
            s
        }
    }

    pub(crate) fn format_monomial(&self, a: &GroupElem) -> String {
        let names = self.var_names();
        a.0.iter()
            .zip(&names)
            .filter(|(&x, _)| x != 0)
            .map(|(&x, v)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parses `e`, `1`, or a product of `var^k` factors.
    pub fn parse_elem(&self, s: &str) -> Result<GroupElem, RingError> {
        let s = s.trim();
        if s == "e" || s == "1" {
            return Ok(self.identity());
        }
        let names = self.var_names();
        let mut c = vec![0i64; self.rank()];
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => {
                    let e = e.trim().trim_start_matches('(').trim_end_matches(')');
                    let k = e
                        .parse::<i64>()
                        .map_err(|_| RingError::Parse(format!("bad exponent in `{factor}`")))?;
                    (v.trim(), k)
                }
                None => (factor, 1),
            };
            let pos = names
                .iter()
                .position(|n| n == var)
                .ok_or_else(|| RingError::Parse(format!("unknown variable `{var}`")))?;
            c[pos] += exp;
        }
        Ok(self.reduce(c))
    }

    /// Parses a group spec such as `Z4`, `Z`, `int`, or `Z x Z4`.
    pub fn parse_spec(s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        if s == "int" || s == "1" {
            return Ok(Self::trivial());
        }
        let mut free = 0;
        let mut tors = vec![];
        for part in s.split('x').map(str::trim) {
            let rest = part
                .strip_prefix('Z')
                .ok_or_else(|| RingError::Parse(format!("bad group factor `{part}`")))?;
            let rest = rest.trim_start_matches('_');
            if rest.is_empty() {
                free += 1;
            } else {
                let n = rest
                    .parse::<i64>()
                    .map_err(|_| RingError::Parse(format!("bad group factor `{part}`")))?;
                tors.push(n);
            }
        }
        Self::new(free, tors)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "int");
        }
        let parts = std::iter::repeat("Z".to_string())
            .take(self.free_rank)
            .chain(self.torsion.iter().map(|n| format!("Z{n}")))
            .collect::<Vec<_>>();
        write!(f, "{}", parts.join(" x "))
    }
}
