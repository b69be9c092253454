use std::fmt;

use serde::Serialize;

use super::group::FiniteGroup;
use crate::error::QuandleError;

/// A violated quandle axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    /// Row `row` does not have `n` entries.
    Shape { row: usize, len: usize },
    /// `op[x][y]` is not in `0..n`.
    OutOfRange { x: usize, y: usize, value: usize },
    /// `x * x != x`.
    Idempotence { x: usize },
    /// Right translation by `y` maps two elements to `value`.
    NotBijective { y: usize, value: usize },
    /// `(x*y)*z != (x*z)*(y*z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape { row, len } => write!(f, "row {row}: has {len} entries"),
            Self::OutOfRange { x, y, value } => write!(f, "op[{x}][{y}] = {value} out of range"),
            Self::Idempotence { x } => write!(f, "Q1: {x}*{x} != {x}"),
            Self::NotBijective { y, value } => write!(f, "Q2: *{y} hits {value} twice"),
            Self::Distributivity { x, y, z } => write!(f, "Q3: ({x}*{y})*{z} != ({x}*{z})*({y}*{z})"),
        }
    }
}

/// Checks Q1–Q3 on a raw table `op[x][y] = x * y`. Empty result iff the table
/// defines a quandle.
pub fn verify_quandle_axioms(op: &[Vec<usize>]) -> Vec<AxiomViolation> {
    let n = op.len();
    let mut out = vec![];
    for (row, r) in op.iter().enumerate() {
        if r.len() != n {
            out.push(AxiomViolation::Shape { row, len: r.len() });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for x in 0..n {
        for y in 0..n {
            if op[x][y] >= n {
                out.push(AxiomViolation::OutOfRange { x, y, value: op[x][y] });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for x in 0..n {
        if op[x][x] != x {
            out.push(AxiomViolation::Idempotence { x });
        }
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for row in op {
            let v = row[y];
            if seen[v] {
                out.push(AxiomViolation::NotBijective { y, value: v });
            }
            seen[v] = true;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]] {
                    out.push(AxiomViolation::Distributivity { x, y, z });
                }
            }
        }
    }
    out
}

/// A finite quandle on `0..n` with `op[x][y] = x * y` and the dual table
/// `inv_op[x][y] = x *^{-1} y`. Construction verifies Q1–Q3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    op: Vec<Vec<usize>>,
    inv_op: Vec<Vec<usize>>,
}

impl FiniteQuandle {
    pub fn from_table(op: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let report = verify_quandle_axioms(&op);
        if !report.is_empty() {
            let msg = report.iter().take(5).map(ToString::to_string).collect::<Vec<_>>().join("; ");
            return Err(QuandleError::Axioms(msg));
        }
        let n = op.len();
        let mut inv_op = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                inv_op[op[x][y]][y] = x;
            }
        }
        Ok(Self { op, inv_op })
    }

    pub fn order(&self) -> usize {
        self.op.len()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_op[x][y]
    }

    /// `x *^{sign} y`.
    #[inline]
    pub fn act(&self, x: usize, y: usize, positive: bool) -> usize {
        if positive {
            self.op[x][y]
        } else {
            self.inv_op[x][y]
        }
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    pub fn verify(&self) -> Vec<AxiomViolation> {
        verify_quandle_axioms(&self.op)
    }

    /// Trivial quandle `x * y = x`.
    pub fn trivial(n: usize) -> Self {
        Self::from_table((0..n).map(|x| vec![x; n]).collect()).unwrap()
    }

    /// Dihedral quandle `R_n`: `i * j = 2j - i mod n`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_table((0..n).map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect()).collect())
            .unwrap()
    }

    /// Alexander quandle on `Z_n` with `x * y = a·x + (1-a)·y`, `a` a unit mod n.
    pub fn alexander(n: usize, a: usize) -> Result<Self, QuandleError> {
        let b = (1 + n - a % n) % n;
        Self::from_table((0..n).map(|x| (0..n).map(|y| (a * x + b * y) % n).collect()).collect())
    }

    /// `Conj(G)`: `x * y = y^{-1} x y`.
    pub fn conjugation(g: &FiniteGroup) -> Self {
        let n = g.order();
        let op = (0..n).map(|x| (0..n).map(|y| g.conj(x, y)).collect()).collect();
        Self::from_table(op).expect("conjugation quandle")
    }

    /// The conjugacy class of `rep` under conjugation; elements ordered by
    /// group index. Returns the quandle and the group indices of its elements.
    pub fn conjugacy_class(g: &FiniteGroup, rep: usize) -> Result<(Self, Vec<usize>), QuandleError> {
        if rep >= g.order() {
            return Err(QuandleError::OutOfRange(rep));
        }
        let mut class: Vec<usize> = (0..g.order()).map(|y| g.conj(rep, y)).collect();
        class.sort_unstable();
        class.dedup();
        let pos = |e: usize| class.binary_search(&e).unwrap();
        let op = class
            .iter()
            .map(|&x| class.iter().map(|&y| pos(g.conj(x, y))).collect())
            .collect();
        Ok((Self::from_table(op)?, class))
    }

    /// The order-4 tetrahedron quandle (right-hand 120° rotations about each vertex).
    pub fn tetrahedron() -> Self {
        Self::from_table(vec![
            vec![0, 3, 1, 2],
            vec![2, 1, 3, 0],
            vec![3, 0, 2, 1],
            vec![1, 2, 0, 3],
        ])
        .unwrap()
    }

    /// The six 4-cycles of `S_4` under conjugation.
    pub fn s4_four_cycles() -> Self {
        let s4 = FiniteGroup::symmetric(4);
        let rep = s4.index_of_perm(&[1, 2, 3, 0]).unwrap();
        Self::conjugacy_class(&s4, rep).unwrap().0
    }

    /// The right translation `*x` as a permutation of `0..n`.
    pub fn right_translation(&self, x: usize) -> Vec<usize> {
        (0..self.order()).map(|y| self.op[y][x]).collect()
    }

    /// Generators `*x` of `Inn(X)` and whether `x -> *x` is injective.
    pub fn inner_generators(&self) -> (Vec<Vec<usize>>, bool) {
        let gens: Vec<Vec<usize>> = (0..self.order()).map(|x| self.right_translation(x)).collect();
        let mut sorted = gens.clone();
        sorted.sort();
        sorted.dedup();
        let faithful = sorted.len() == gens.len();
        (gens, faithful)
    }

    pub fn is_faithful(&self) -> bool {
        self.inner_generators().1
    }

    /// Whether `f` (a map on `0..n`) is an automorphism.
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for &v in f {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..n).all(|x| (0..n).all(|y| f[self.op[x][y]] == self.op[f[x]][f[y]]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn tetrahedron_table() {
        let q = FiniteQuandle::tetrahedron();
        assert_eq!(q.op(1, 0), 2); // x2 * x1 = x3
        for i in 0..4 {
            assert_eq!(q.op(i, i), i);
            // column i is a 3-cycle fixing i
            let p = q.right_translation(i);
            assert_eq!(p[i], i);
            let j = (i + 1) % 4;
            assert_ne!(p[j], j);
            assert_eq!(p[p[p[j]]], j);
        }
        assert!(q.verify().is_empty());
        assert!(q.is_faithful());
    }

    #[test]
    fn q1_violation_reported() {
        let mut t = FiniteQuandle::tetrahedron().table().to_vec();
        t[0][0] = 1;
        let r = verify_quandle_axioms(&t);
        assert!(r.contains(&AxiomViolation::Idempotence { x: 0 }));
        assert!(FiniteQuandle::from_table(t).is_err());
    }

    #[test]
    fn shape_and_range_reported() {
        assert_eq!(
            verify_quandle_axioms(&[vec![0, 1], vec![1]]),
            vec![AxiomViolation::Shape { row: 1, len: 1 }]
        );
        assert!(matches!(
            verify_quandle_axioms(&[vec![0, 5], vec![1, 1]])[0],
            AxiomViolation::OutOfRange { .. }
        ));
    }

    #[test]
    fn dihedral_three_brute_force() {
        // 27 triples checked directly against 2j - i mod 3
        let q = FiniteQuandle::dihedral(3);
        let f = |i: usize, j: usize| (2 * j + 3 - i) % 3;
        for (x, y, z) in (0..3).cartesian_product(0..3).cartesian_product(0..3).map(|((a, b), c)| (a, b, c)) {
            assert_eq!(f(f(x, y), z), f(f(x, z), f(y, z)));
            assert_eq!(q.op(x, y), f(x, y));
        }
        assert!(q.verify().is_empty());
    }

    #[test]
    fn dual_operation() {
        for q in [FiniteQuandle::tetrahedron(), FiniteQuandle::dihedral(5), FiniteQuandle::s4_four_cycles()] {
            let n = q.order();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(q.inv_op(q.op(x, y), y), x);
                    assert_eq!(q.op(q.inv_op(x, y), y), x);
                }
            }
            for x in 0..n {
                assert!(q.is_automorphism(&q.right_translation(x)));
            }
        }
    }

    #[test]
    fn conjugation_quandles() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(FiniteQuandle::conjugation(&z4), FiniteQuandle::trivial(4));
        let s3 = FiniteGroup::symmetric(3);
        let c = FiniteQuandle::conjugation(&s3);
        assert_eq!(c.order(), 6);
        assert!(c.verify().is_empty());
        assert_eq!(FiniteQuandle::conjugation(&FiniteGroup::cyclic(1)).order(), 1);
    }

    #[test]
    fn class_quandles() {
        let s4 = FiniteGroup::symmetric(4);
        let rep = s4.index_of_perm(&[1, 2, 3, 0]).unwrap();
        let (q, _) = FiniteQuandle::conjugacy_class(&s4, rep).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.is_faithful());

        let s3 = FiniteGroup::symmetric(3);
        let t = s3.index_of_perm(&[1, 0, 2]).unwrap();
        let (q3, _) = FiniteQuandle::conjugacy_class(&s3, t).unwrap();
        let r3 = FiniteQuandle::dihedral(3);
        // brute-force isomorphism search over the 3! bijections
        let iso = (0..3).permutations(3).any(|f| {
            (0..3).all(|x| (0..3).all(|y| f[q3.op(x, y)] == r3.op(f[x], f[y])))
        });
        assert!(iso);

        let (q1, _) = FiniteQuandle::conjugacy_class(&s4, s4.identity()).unwrap();
        assert_eq!(q1, FiniteQuandle::trivial(1));
        assert!(FiniteQuandle::conjugacy_class(&s4, 99).is_err());
    }

    #[test]
    fn trivial_not_faithful() {
        assert!(!FiniteQuandle::trivial(2).is_faithful());
        assert!(FiniteQuandle::trivial(1).is_faithful());
    }
}
