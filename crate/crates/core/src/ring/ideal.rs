use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use super::elem::GroupRingElem;
use super::group::AbelianGroup;
use super::intmat::lattice_basis;
use super::matrix::RingMatrix;
use crate::error::RingError;

/// Default cap on matrix dimensions for minor enumeration.
pub const MAX_DIM: usize = 16;

/// The ideal of `Z[A]` generated by a finite list; the empty list is `(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    group: Arc<AbelianGroup>,
    generators: Vec<GroupRingElem>,
}

impl IdealGens {
    pub fn new(group: &Arc<AbelianGroup>, generators: Vec<GroupRingElem>) -> Self {
        Self { group: group.clone(), generators }
    }

    pub fn zero(group: &Arc<AbelianGroup>) -> Self {
        Self::new(group, vec![])
    }

    pub fn whole(group: &Arc<AbelianGroup>) -> Self {
        Self::new(group, vec![GroupRingElem::one(group)])
    }

    pub fn principal(g: GroupRingElem) -> Self {
        Self { group: g.group().clone(), generators: vec![g] }
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn generators(&self) -> &[GroupRingElem] {
        &self.generators
    }

    /// True when every listed generator is zero.
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(GroupRingElem::is_zero)
    }

    /// Drops zero generators and keeps the first of each class of
    /// associates under the units `±g`.
    pub fn without_associates(&self) -> Self {
        let mut kept: Vec<GroupRingElem> = vec![];
        let mut keys: Vec<GroupRingElem> = vec![];
        for g in self.generators.iter().filter(|g| !g.is_zero()) {
            let k = normalize_unit(g);
            if !keys.contains(&k) {
                keys.push(k);
                kept.push(g.clone());
            }
        }
        Self::new(&self.group, kept)
    }

    /// Row lattice in `Z^{|A|}` spanned by `{g·a}` (finite `A` only), in HNF.
    pub fn lattice(&self) -> Result<Vec<Vec<i64>>, RingError> {
        let elems = self.group.elements()?;
        let mut rows = vec![];
        for g in &self.generators {
            for a in &elems {
                rows.push(g.shift(a).coeff_vector()?);
            }
        }
        if rows.is_empty() {
            return Ok(vec![]);
        }
        lattice_basis(&rows)
    }
}

impl fmt::Display for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.without_associates();
        if gens.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", gens.generators.iter().join(", "))
    }
}

/// `E_d(M)`: all `(n-d)`-minors when `n - m <= d < n`, `(0)` when `d < n - m`,
/// the whole ring when `d >= n` (`m` rows, `n` columns). Minors are listed with
/// row and column index sets in lexicographic order.
pub fn elementary_ideal(m: &RingMatrix, d: i64, max_dim: usize) -> Result<IdealGens, RingError> {
    let (rows, cols) = (m.rows() as i64, m.cols() as i64);
    let g = m.group();
    if d >= cols {
        return Ok(IdealGens::whole(g));
    }
    if d < cols - rows {
        return Ok(IdealGens::zero(g));
    }
    let dim = m.rows().max(m.cols());
    if dim > max_dim {
        return Err(RingError::DimensionCap { dim, cap: max_dim });
    }
    let k = (cols - d) as usize;
    let mut gens = vec![];
    for rs in (0..m.rows()).combinations(k) {
        for cs in (0..m.cols()).combinations(k) {
            gens.push(m.submatrix(&rs, &cs).det()?);
        }
    }
    Ok(IdealGens::new(g, gens))
}

/// `a ⊆ b` as ideals of `Z[A]`, `A` finite.
pub fn ideal_contains_finite(b: &IdealGens, a: &IdealGens) -> Result<bool, RingError> {
    check_same(a, b)?;
    let lb = b.lattice()?;
    let mut all = lb.clone();
    all.extend(a.lattice()?);
    if all.is_empty() {
        return Ok(true);
    }
    Ok(lattice_basis(&all)? == lb)
}

/// Exact ideal equality in `Z[A]`, `A` finite, by comparing Hermite normal
/// forms of the `Z`-lattices the ideals span.
pub fn ideal_equal_finite(a: &IdealGens, b: &IdealGens) -> Result<bool, RingError> {
    check_same(a, b)?;
    Ok(a.lattice()? == b.lattice()?)
}

fn check_same(a: &IdealGens, b: &IdealGens) -> Result<(), RingError> {
    if a.group != b.group {
        return Err(RingError::GroupMismatch(a.group.to_string(), b.group.to_string()));
    }
    if !a.group.is_finite() {
        return Err(RingError::InfiniteGroup);
    }
    Ok(())
}

/// Representative of `x` modulo the units `±g` of `Z[A]`: for the Laurent
/// ring the lowest exponent is shifted to 0 and its coefficient made
/// positive; for other groups only the sign is fixed.
/// The associate of `x` under `±a` that prints shortest, preferring a
/// positive leading term. Shifts are tried only for finite groups.
pub fn readable_associate(x: &GroupRingElem) -> GroupRingElem {
    let g = x.group();
    let shifts = match g.elements() {
        Ok(e) if g.is_finite() => e,
        _ => vec![g.identity()],
    };
    shifts
        .iter()
        .flat_map(|a| [x.shift(a), x.shift(a).scale(-1)])
        .min_by_key(|c| {
            let s = c.to_string();
            (s.len(), s.starts_with('-'), s)
        })
        .unwrap()
}

pub fn normalize_unit(x: &GroupRingElem) -> GroupRingElem {
    if x.is_zero() {
        return x.clone();
    }
    let g = x.group();
    let y = if g.is_laurent() {
        let (low, _) = x.terms().next().unwrap();
        x.shift(&g.inv(low))
    } else if g.is_finite() {
        // smallest coefficient vector over all shifts, up to sign
        let elems = g.elements().unwrap();
        let mut best: Option<(Vec<i64>, GroupRingElem)> = None;
        for a in &elems {
            for s in [1, -1] {
                let c = x.shift(a).scale(s);
                let v = c.coeff_vector().unwrap();
                if best.as_ref().map_or(true, |(bv, _)| v > *bv) {
                    best = Some((v, c));
                }
            }
        }
        return best.unwrap().1;
    } else {
        x.clone()
    };
    let (_, c) = y.terms().next().unwrap();
    if c < 0 {
        -y
    } else {
        y
    }
}

/// `a = ±t^k·b` in `Z[t^{±1}]`.
pub fn principal_equal_laurent(a: &GroupRingElem, b: &GroupRingElem) -> Result<bool, RingError> {
    if !a.group().is_laurent() || !b.group().is_laurent() {
        return Err(RingError::NotLaurent);
    }
    Ok(normalize_unit(a) == normalize_unit(b))
}

/// Exact division in `Z[t^{±1}]`: `Some(q)` with `a = q·b`, if it exists.
pub fn laurent_divide(a: &GroupRingElem, b: &GroupRingElem) -> Result<Option<GroupRingElem>, RingError> {
    let g = a.group();
    if !g.is_laurent() || **b.group() != **g {
        return Err(RingError::NotLaurent);
    }
    if b.is_zero() {
        return Ok(a.is_zero().then(|| a.clone()));
    }
    let exp = |e: &super::group::GroupElem| e.coords()[0];
    let (bhi, bc) = b.terms().last().map(|(e, c)| (exp(e), c)).unwrap();
    let blo = exp(b.terms().next().unwrap().0);
    let mut r = a.clone();
    let mut q = GroupRingElem::zero(g);
    while !r.is_zero() {
        let (rhi, rc) = r.terms().last().map(|(e, c)| (exp(e), c)).unwrap();
        let rlo = exp(r.terms().next().unwrap().0);
        if rhi - rlo < bhi - blo || rc % bc != 0 {
            return Ok(None);
        }
        let step = GroupRingElem::monomial(g, g.elem(&[rhi - bhi])?, rc / bc);
        r = &r - &(&step * b);
        q = &q + &step;
    }
    Ok(Some(q))
}

/// Outcome of comparing two Laurent ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LaurentVerdict {
    Equal,
    NotEqual,
    /// Neither principal comparison nor mutual generator divisibility decided it.
    Inconclusive,
}

/// Compares ideals of `Z[t^{±1}]`. Principal ideals are decided exactly up to
/// units; otherwise equality is shown by each generator being a multiple of
/// a single generator of the other side.
pub fn compare_laurent(a: &IdealGens, b: &IdealGens) -> Result<LaurentVerdict, RingError> {
    if !a.group.is_laurent() || !b.group.is_laurent() {
        return Err(RingError::NotLaurent);
    }
    let (a, b) = (a.without_associates(), b.without_associates());
    let (ga, gb) = (a.generators(), b.generators());
    match (ga.len(), gb.len()) {
        (0, 0) => return Ok(LaurentVerdict::Equal),
        (0, _) | (_, 0) => return Ok(LaurentVerdict::NotEqual),
        (1, 1) => {
            return Ok(if principal_equal_laurent(&ga[0], &gb[0])? {
                LaurentVerdict::Equal
            } else {
                LaurentVerdict::NotEqual
            })
        }
        _ => {}
    }
    let na: Vec<_> = ga.iter().map(normalize_unit).sorted_by_key(|x| x.to_string()).collect();
    let nb: Vec<_> = gb.iter().map(normalize_unit).sorted_by_key(|x| x.to_string()).collect();
    if na == nb {
        return Ok(LaurentVerdict::Equal);
    }
    let covered = |xs: &[GroupRingElem], ys: &[GroupRingElem]| -> Result<bool, RingError> {
        for x in xs {
            let mut hit = false;
            for y in ys {
                if laurent_divide(x, y)?.is_some() {
                    hit = true;
                    break;
                }
            }
            if !hit {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if covered(ga, gb)? && covered(gb, ga)? {
        Ok(LaurentVerdict::Equal)
    } else {
        Ok(LaurentVerdict::Inconclusive)
    }
}

/// Canonical key of an ideal for grouping into multisets: the HNF lattice
/// for finite groups, sorted unit-normalized generators otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealKey {
    Lattice(Vec<Vec<i64>>),
    Generators(Vec<String>),
}

pub fn ideal_key(i: &IdealGens) -> Result<IdealKey, RingError> {
    if i.group.is_finite() {
        Ok(IdealKey::Lattice(i.lattice()?))
    } else {
        let gens = i.without_associates();
        Ok(IdealKey::Generators(
            gens.generators().iter().map(|g| normalize_unit(g).to_string()).sorted().collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Arc<AbelianGroup> {
        AbelianGroup::cyclic(4).unwrap().arc()
    }

    fn lt() -> Arc<AbelianGroup> {
        AbelianGroup::laurent().arc()
    }

    fn p(g: &Arc<AbelianGroup>, s: &str) -> GroupRingElem {
        GroupRingElem::parse(g, s).unwrap()
    }

    fn pr(g: &Arc<AbelianGroup>, s: &str) -> IdealGens {
        IdealGens::principal(p(g, s))
    }

    #[test]
    fn finite_equality_examples() {
        let g = z4();
        assert!(ideal_equal_finite(&pr(&g, "u - 1"), &pr(&g, "1 - u")).unwrap());
        assert!(!ideal_equal_finite(&pr(&g, "u - 1"), &pr(&g, "u^2 - 1")).unwrap());
        assert!(ideal_equal_finite(&pr(&g, "0"), &IdealGens::zero(&g)).unwrap());
        assert!(ideal_equal_finite(&pr(&g, "u^3 - 1"), &pr(&g, "u - 1")).unwrap());
        assert!(ideal_contains_finite(&pr(&g, "u - 1"), &pr(&g, "u^2 - 1")).unwrap());
        assert!(!ideal_contains_finite(&pr(&g, "u^2 - 1"), &pr(&g, "u - 1")).unwrap());
    }

    #[test]
    fn finite_lattice_oracle() {
        // ({u-1}) spans {x : sum of coefficients = 0}, index-1 sublattice of rank 3;
        // ({u^2-1}) spans u^k(u^2-1), rank 2.
        let g = z4();
        assert_eq!(pr(&g, "u - 1").lattice().unwrap().len(), 3);
        assert_eq!(pr(&g, "u^2 - 1").lattice().unwrap().len(), 2);
    }

    #[test]
    fn infinite_group_rejected() {
        let g = lt();
        assert_eq!(ideal_equal_finite(&pr(&g, "t"), &pr(&g, "t")), Err(RingError::InfiniteGroup));
    }

    #[test]
    fn laurent_principal() {
        let g = lt();
        assert!(principal_equal_laurent(&p(&g, "t^2 - t + 1"), &p(&g, "-t^3 + t^2 - t")).unwrap());
        assert!(!principal_equal_laurent(&p(&g, "t^2 - t + 1"), &p(&g, "t^2 + t - 1")).unwrap());
        assert!(principal_equal_laurent(&p(&g, "0"), &p(&g, "0")).unwrap());
        assert!(principal_equal_laurent(&p(&g, "1 - t^-1"), &p(&g, "t - 1")).unwrap());
    }

    #[test]
    fn laurent_not_associate_exhaustive() {
        // t^2 + t - 1 against every ±t^k (t^2 - t + 1), |k| <= 4
        let g = lt();
        let a = p(&g, "t^2 - t + 1");
        let b = p(&g, "t^2 + t - 1");
        for k in -4..=4 {
            for s in [1, -1] {
                let u = GroupRingElem::monomial(&g, g.elem(&[k]).unwrap(), s);
                assert_ne!(&u * &a, b);
            }
        }
    }

    #[test]
    fn division() {
        let g = lt();
        let a = p(&g, "t^3 - 1");
        let b = p(&g, "t - 1");
        assert_eq!(laurent_divide(&a, &b).unwrap(), Some(p(&g, "t^2 + t + 1")));
        assert_eq!(laurent_divide(&b, &a).unwrap(), None);
        assert_eq!(laurent_divide(&p(&g, "2*t + 2"), &p(&g, "t + 1")).unwrap(), Some(p(&g, "2")));
        assert_eq!(laurent_divide(&p(&g, "t + 2"), &p(&g, "2")).unwrap(), None);
    }

    #[test]
    fn compare_multi() {
        let g = lt();
        let a = IdealGens::new(&g, vec![p(&g, "2"), p(&g, "4*t")]);
        let b = IdealGens::new(&g, vec![p(&g, "2*t"), p(&g, "t - 1 + t^2 - t^2 + 1")]);
        // b = (2t, t) = (t) = whole ring, a = (2); mutual multiples fail
        assert_eq!(compare_laurent(&a, &b).unwrap(), LaurentVerdict::Inconclusive);
        let c = IdealGens::new(&g, vec![p(&g, "2"), p(&g, "2*t^5")]);
        assert_eq!(compare_laurent(&a, &c).unwrap(), LaurentVerdict::Equal);
    }

    #[test]
    fn elementary_ideal_conventions() {
        let g = z4();
        let m = RingMatrix::zeros(&g, 2, 3);
        assert_eq!(elementary_ideal(&m, 3, MAX_DIM).unwrap(), IdealGens::whole(&g));
        assert_eq!(elementary_ideal(&m, 0, MAX_DIM).unwrap(), IdealGens::zero(&g));
        let e1 = elementary_ideal(&m, 1, MAX_DIM).unwrap();
        assert_eq!(e1.generators().len(), 3); // C(2,2) * C(3,2)
        let big = RingMatrix::zeros(&g, 17, 17);
        assert!(matches!(elementary_ideal(&big, 0, MAX_DIM), Err(RingError::DimensionCap { .. })));
    }

    #[test]
    fn normalize_finite_is_class_invariant() {
        let g = z4();
        let a = p(&g, "u^2 - 2*u + 1");
        let n = normalize_unit(&a);
        for k in 0..4 {
            assert_eq!(normalize_unit(&a.shift(&g.pow(&g.generator(0), k)).scale(-1)), n);
        }
    }
}
