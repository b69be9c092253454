use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::finite::FiniteQuandle;
use super::hom::QuandleHom;
use crate::error::QuandleError;
use crate::ring::{AbelianGroup, GroupRingElem};

/// Raw tables of a candidate Alexander pair `f1, f2 : X x X -> Z[A]`.
///
/// Units are certified by `f1_inv`; entries left `None` are filled with the
/// monomial inverse when `f1` is `±g` there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTables {
    pub quandle: FiniteQuandle,
    pub group: Arc<AbelianGroup>,
    pub f1: Vec<Vec<GroupRingElem>>,
    pub f2: Vec<Vec<GroupRingElem>>,
    pub f1_inv: Vec<Vec<Option<GroupRingElem>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PairViolation {
    /// `f1(x,x) + f2(x,x) != 1`
    Diagonal { x: usize },
    /// `f1(x,y) · f1_inv(x,y) != 1`
    Unit { x: usize, y: usize },
    /// `f1(x*y,z) f1(x,y) != f1(x*z,y*z) f1(x,z)`
    First { x: usize, y: usize, z: usize },
    /// `f1(x*y,z) f2(x,y) != f2(x*z,y*z) f1(y,z)`
    Second { x: usize, y: usize, z: usize },
    /// `f2(x*y,z) != f1(x*z,y*z) f2(x,z) + f2(x*z,y*z) f2(y,z)`
    Third { x: usize, y: usize, z: usize },
}

impl fmt::Display for PairViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Diagonal { x } => write!(f, "f1({x},{x}) + f2({x},{x}) != 1"),
            Self::Unit { x, y } => write!(f, "f1({x},{y}) times its declared inverse != 1"),
            Self::First { x, y, z } => write!(f, "first identity fails at ({x},{y},{z})"),
            Self::Second { x, y, z } => write!(f, "second identity fails at ({x},{y},{z})"),
            Self::Third { x, y, z } => write!(f, "third identity fails at ({x},{y},{z})"),
        }
    }
}

impl PairTables {
    /// Same value `a`, `b` at every pair; `a_inv` certifies `a` as a unit.
    pub fn constant(q: &FiniteQuandle, a: GroupRingElem, a_inv: Option<GroupRingElem>, b: GroupRingElem) -> Self {
        let n = q.order();
        let a_inv = a_inv.or_else(|| a.monomial_inverse());
        Self {
            quandle: q.clone(),
            group: a.group().clone(),
            f1: vec![vec![a; n]; n],
            f2: vec![vec![b; n]; n],
            f1_inv: vec![vec![a_inv; n]; n],
        }
    }

    fn complete_inverses(&mut self) {
        for (row, inv_row) in self.f1.iter().zip(self.f1_inv.iter_mut()) {
            for (a, inv) in row.iter().zip(inv_row.iter_mut()) {
                if inv.is_none() {
                    *inv = a.monomial_inverse();
                }
            }
        }
    }

    fn shape_ok(&self) -> Result<(), QuandleError> {
        let n = self.quandle.order();
        let ok = |t: usize, r: &[usize]| t == n && r.iter().all(|&l| l == n);
        let lens = |t: &Vec<Vec<GroupRingElem>>| t.iter().map(Vec::len).collect::<Vec<_>>();
        if !ok(self.f1.len(), &lens(&self.f1))
            || !ok(self.f2.len(), &lens(&self.f2))
            || !ok(self.f1_inv.len(), &self.f1_inv.iter().map(Vec::len).collect::<Vec<_>>())
        {
            return Err(QuandleError::Shape(format!("pair tables must be {n}x{n}")));
        }
        for e in self.f1.iter().chain(&self.f2).flatten() {
            if **e.group() != *self.group {
                return Err(crate::error::RingError::GroupMismatch(
                    self.group.to_string(),
                    e.group().to_string(),
                )
                .into());
            }
        }
        Ok(())
    }
}

/// Checks every Alexander pair condition over all pairs and triples. Empty
/// result iff the tables form an Alexander pair.
pub fn verify_alexander_pair(p: &PairTables) -> Result<Vec<PairViolation>, QuandleError> {
    p.shape_ok()?;
    let mut p = p.clone();
    p.complete_inverses();
    let q = &p.quandle;
    let n = q.order();
    for x in 0..n {
        for y in 0..n {
            if p.f1_inv[x][y].is_none() {
                return Err(QuandleError::MissingInverse(x, y));
            }
        }
    }
    let (f1, f2) = (&p.f1, &p.f2);
    let mut out = vec![];
    for x in 0..n {
        if !(&f1[x][x] + &f2[x][x]).is_one() {
            out.push(PairViolation::Diagonal { x });
        }
        for y in 0..n {
            if !(&f1[x][y] * p.f1_inv[x][y].as_ref().unwrap()).is_one() {
                out.push(PairViolation::Unit { x, y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = q.op(x, y);
            for z in 0..n {
                let (xz, yz) = (q.op(x, z), q.op(y, z));
                if &f1[xy][z] * &f1[x][y] != &f1[xz][yz] * &f1[x][z] {
                    out.push(PairViolation::First { x, y, z });
                }
                if &f1[xy][z] * &f2[x][y] != &f2[xz][yz] * &f1[y][z] {
                    out.push(PairViolation::Second { x, y, z });
                }
                if f2[xy][z] != &(&f1[xz][yz] * &f2[x][z]) + &(&f2[xz][yz] * &f2[y][z]) {
                    out.push(PairViolation::Third { x, y, z });
                }
            }
        }
    }
    Ok(out)
}

/// A verified Alexander pair on a finite quandle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPairTable {
    tables: PairTables,
}

impl AlexanderPairTable {
    pub fn new(tables: PairTables) -> Result<Self, QuandleError> {
        let report = verify_alexander_pair(&tables)?;
        if let Some(v) = report.first() {
            return Err(QuandleError::NotAlexanderPair(format!("{v} ({} violations)", report.len())));
        }
        let mut tables = tables;
        tables.complete_inverses();
        Ok(Self { tables })
    }

    /// The pair `(t, 1 - t)` over `Z[t^{±1}]`.
    pub fn burau(q: &FiniteQuandle) -> Self {
        let g = AbelianGroup::laurent().arc();
        let t = GroupRingElem::gen_pow(&g, 0, 1);
        let one_minus_t = &GroupRingElem::one(&g) - &t;
        Self::new(PairTables::constant(q, t, None, one_minus_t)).expect("(t, 1-t) is an Alexander pair")
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.tables.quandle
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.tables.group
    }

    pub fn f1(&self, x: usize, y: usize) -> &GroupRingElem {
        &self.tables.f1[x][y]
    }

    pub fn f2(&self, x: usize, y: usize) -> &GroupRingElem {
        &self.tables.f2[x][y]
    }

    pub fn f1_inv(&self, x: usize, y: usize) -> &GroupRingElem {
        self.tables.f1_inv[x][y].as_ref().expect("verified pair has inverses")
    }

    pub fn tables(&self) -> &PairTables {
        &self.tables
    }

    /// `f∘ρ = (f1∘(ρxρ), f2∘(ρxρ))` on the source of `ρ`.
    pub fn compose_with_hom(&self, rho: &QuandleHom) -> Result<Self, QuandleError> {
        if rho.target() != self.quandle() {
            return Err(QuandleError::Shape("homomorphism target is not the pair's quandle".into()));
        }
        let src = rho.source();
        let n = src.order();
        let pull = |t: &Vec<Vec<GroupRingElem>>| -> Vec<Vec<GroupRingElem>> {
            (0..n).map(|x| (0..n).map(|y| t[rho.apply(x)][rho.apply(y)].clone()).collect()).collect()
        };
        let inv = (0..n)
            .map(|x| (0..n).map(|y| Some(self.f1_inv(rho.apply(x), rho.apply(y)).clone())).collect())
            .collect();
        Self::new(PairTables {
            quandle: src.clone(),
            group: self.tables.group.clone(),
            f1: pull(&self.tables.f1),
            f2: pull(&self.tables.f2),
            f1_inv: inv,
        })
    }
}

/// The quandle on `X x Z_n` with `(x,a) ◁ (y,b) = (x*y, f1(x,y)a + f2(x,y)b)`.
///
/// Pair entries must be integer scalars; the pair conditions are checked
/// modulo `n`, with `f1(x,y)` required to be a unit mod `n`. Element `(x, a)`
/// has index `x·n + a`.
pub fn build_module_quandle(tables: &PairTables, n: usize) -> Result<FiniteQuandle, QuandleError> {
    tables.shape_ok()?;
    if n == 0 {
        return Err(QuandleError::Shape("modulus must be positive".into()));
    }
    let q = &tables.quandle;
    let m = q.order();
    let md = n as i64;
    let scalar = |t: &Vec<Vec<GroupRingElem>>| -> Result<Vec<Vec<i64>>, QuandleError> {
        let mut out = vec![vec![0; m]; m];
        for x in 0..m {
            for y in 0..m {
                out[x][y] = t[x][y].as_scalar().ok_or(QuandleError::NonScalar(x, y))?.rem_euclid(md);
            }
        }
        Ok(out)
    };
    let f1 = scalar(&tables.f1)?;
    let f2 = scalar(&tables.f2)?;
    let r = |v: i64| v.rem_euclid(md);
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for x in 0..m {
        if r(f1[x][x] + f2[x][x]) != 1 % md {
            return Err(QuandleError::NotAlexanderPair(PairViolation::Diagonal { x }.to_string()));
        }
        for y in 0..m {
            if gcd(f1[x][y], md) != 1 {
                return Err(QuandleError::NotAlexanderPair(PairViolation::Unit { x, y }.to_string()));
            }
            let xy = q.op(x, y);
            for z in 0..m {
                let (xz, yz) = (q.op(x, z), q.op(y, z));
                let v = if r(f1[xy][z] * f1[x][y]) != r(f1[xz][yz] * f1[x][z]) {
                    Some(PairViolation::First { x, y, z })
                } else if r(f1[xy][z] * f2[x][y]) != r(f2[xz][yz] * f1[y][z]) {
                    Some(PairViolation::Second { x, y, z })
                } else if r(f2[xy][z]) != r(f1[xz][yz] * f2[x][z] + f2[xz][yz] * f2[y][z]) {
                    Some(PairViolation::Third { x, y, z })
                } else {
                    None
                };
                if let Some(v) = v {
                    return Err(QuandleError::NotAlexanderPair(v.to_string()));
                }
            }
        }
    }
    let size = m * n;
    let mut op = vec![vec![0; size]; size];
    for x in 0..m {
        for a in 0..n {
            for y in 0..m {
                for b in 0..n {
                    let c = r(f1[x][y] * a as i64 + f2[x][y] * b as i64) as usize;
                    op[x * n + a][y * n + b] = q.op(x, y) * n + c;
                }
            }
        }
    }
    FiniteQuandle::from_table(op)
}
