use rayon::prelude::*;
use serde::Serialize;

use super::derivative::DerivativeContext;
use crate::coloring::{component_invariant, enumerate_colorings, weight, Cocycle};
use crate::diagram::{LinkDiagram, Presentation};
use crate::error::TwistedError;
use crate::quandle::{AlexanderPairTable, PairTables};
use crate::ring::{
    elementary_ideal, ideal_equal_finite, ideal_key, principal_equal_laurent, readable_associate, GroupRingElem, IdealGens, IdealKey,
};

/// The pair `(f_θ, 0)` with `f_θ(x,y) = θ(x,y)` as a monomial of `Z[A]`.
pub fn cocycle_pair(theta: &Cocycle) -> AlexanderPairTable {
    let q = theta.quandle();
    let g = theta.group();
    let n = q.order();
    let mono = |x: usize, y: usize| GroupRingElem::monomial(g, theta.theta(x, y).clone(), 1);
    let f1: Vec<Vec<GroupRingElem>> = (0..n).map(|x| (0..n).map(|y| mono(x, y)).collect()).collect();
    let f1_inv = f1.iter().map(|r| r.iter().map(GroupRingElem::monomial_inverse).collect()).collect();
    AlexanderPairTable::new(PairTables {
        quandle: q.clone(),
        group: g.clone(),
        f1,
        f2: vec![vec![GroupRingElem::zero(g); n]; n],
        f1_inv,
    })
    .expect("a 2-cocycle gives an Alexander pair")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub component: usize,
    pub size: usize,
    /// `Φ_θ(D_i, c)`
    pub phi: String,
    pub det: String,
    pub expected: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub coloring: Vec<usize>,
    /// Generators of `E_0` of the twisted matrix.
    pub lhs_generators: Vec<String>,
    /// `∏ (Φ_θ(D_i, c) - 1)`
    pub rhs_generator: String,
    /// Determinant equals the product exactly.
    pub det_equal: bool,
    /// Ideal comparison: lattice HNF for finite `A`, up to `±t^k` for
    /// `Z[t^{±1}]`, absent otherwise.
    pub ideal_equal: Option<bool>,
    /// Off-block entries vanish and each block has the cyclic form.
    pub block_structure: bool,
    pub equal: bool,
    pub per_block: Vec<BlockReport>,
}

/// Compares `E_0(A(Q(L), ρ; f_θ, 0))` with `∏_i (Φ_θ(D_i, c) - 1)` for one
/// coloring. Uses the Wirtinger presentation with generators grouped by
/// component and ordered along the orientation, where the matrix is block
/// diagonal: block `i` has the crossing weights on its diagonal and `-1` at
/// each arc's successor, so its determinant is `∏ weights - 1` for every
/// block size.
pub fn verify_theorem(d: &LinkDiagram, theta: &Cocycle, coloring: &[usize], max_dim: usize) -> Result<TheoremReport, TwistedError> {
    let (p, perm) = Presentation::wirtinger_component_ordered(d);
    let mut images = vec![0; d.n_arcs()];
    for (old, &new) in perm.iter().enumerate() {
        images[new] = coloring[old];
    }
    let ctx = DerivativeContext::new(p, images, cocycle_pair(theta))?;
    let m = ctx.twisted_matrix()?;
    let g = theta.group();
    let one = GroupRingElem::one(g);
    let phis = component_invariant(d, coloring, theta)?;

    // expected matrix from crossing weights, in new arc numbering
    let n = d.n_arcs();
    let mut expected = vec![vec![GroupRingElem::zero(g); n]; n];
    for (k, c) in d.crossings().iter().enumerate() {
        let (row, next) = (perm[c.under_in], perm[c.under_out]);
        let w = GroupRingElem::monomial(g, weight(d, k, coloring, theta)?, 1);
        expected[row][row] = &expected[row][row] + &w;
        expected[row][next] = &expected[row][next] - &one;
    }
    let block_structure = (0..n).all(|i| (0..n).all(|j| m.get(i, j) == &expected[i][j]));

    let mut per_block = vec![];
    let mut rhs = one.clone();
    let mut start = 0;
    for (i, comp) in d.components().iter().enumerate() {
        let idx: Vec<usize> = (start..start + comp.len()).collect();
        start += comp.len();
        let det = m.submatrix(&idx, &idx).det()?;
        let want = &GroupRingElem::monomial(g, phis[i].clone(), 1) - &one;
        rhs = &rhs * &want;
        per_block.push(BlockReport {
            component: i,
            size: comp.len(),
            phi: g.format_elem(&phis[i]),
            det: det.to_string(),
            expected: want.to_string(),
            equal: det == want,
        });
    }

    let e0 = elementary_ideal(&m, 0, max_dim)?;
    let det_equal = e0.generators().len() == 1 && e0.generators()[0] == rhs;
    let rhs_ideal = IdealGens::principal(rhs.clone());
    let ideal_equal = if g.is_finite() {
        Some(ideal_equal_finite(&e0, &rhs_ideal)?)
    } else if g.is_laurent() {
        Some(principal_equal_laurent(&e0.generators()[0], &rhs)?)
    } else {
        None
    };
    let equal = det_equal && ideal_equal.unwrap_or(true) && block_structure && per_block.iter().all(|b| b.equal);
    Ok(TheoremReport {
        coloring: coloring.to_vec(),
        lhs_generators: e0.generators().iter().map(ToString::to_string).collect(),
        rhs_generator: rhs.to_string(),
        det_equal,
        ideal_equal,
        block_structure,
        equal,
        per_block,
    })
}

/// [`verify_theorem`] for every coloring, in coloring order.
pub fn verify_theorem_all(d: &LinkDiagram, theta: &Cocycle, max_dim: usize) -> Result<Vec<TheoremReport>, TwistedError> {
    enumerate_colorings(d, theta.quandle())
        .par_iter()
        .map(|c| verify_theorem(d, theta, c, max_dim))
        .collect()
}

/// `E_0(A(Q(L), ρ; f_θ, 0))` for the homomorphism given by `coloring`.
pub fn e0_ideal(d: &LinkDiagram, theta: &Cocycle, coloring: &[usize], max_dim: usize) -> Result<IdealGens, TwistedError> {
    let p = Presentation::wirtinger(d);
    let ctx = DerivativeContext::new(p, coloring.to_vec(), cocycle_pair(theta))?;
    ctx.twisted_ideals(0, max_dim)
}

/// Groups ideals into equality classes. Each class is shown by its shortest
/// member, with principal generators replaced by their readable associate;
/// classes are ordered by that representative.
pub fn ideal_multiset(ideals: Vec<IdealGens>) -> Result<Vec<(IdealGens, usize)>, TwistedError> {
    let readable = |i: IdealGens| match i.generators() {
        [g] => IdealGens::principal(readable_associate(g)),
        _ => i,
    };
    let rank = |i: &IdealGens| {
        let s = i.to_string();
        (s.len(), s)
    };
    let mut classes: std::collections::BTreeMap<IdealKey, (IdealGens, usize)> = Default::default();
    for i in ideals.into_iter().map(readable) {
        let key = ideal_key(&i)?;
        match classes.get_mut(&key) {
            Some((rep, k)) => {
                *k += 1;
                if rank(&i) < rank(rep) {
                    *rep = i;
                }
            }
            None => {
                classes.insert(key, (i, 1));
            }
        }
    }
    let mut out: Vec<(IdealGens, usize)> = classes.into_values().collect();
    out.sort_by_cached_key(|(i, _)| rank(i));
    Ok(out)
}

/// The `E_0` multiset over all colorings of `d`.
pub fn e0_multiset(d: &LinkDiagram, theta: &Cocycle, max_dim: usize) -> Result<Vec<(IdealGens, usize)>, TwistedError> {
    let ideals = enumerate_colorings(d, theta.quandle())
        .par_iter()
        .map(|c| e0_ideal(d, theta, c, max_dim))
        .collect::<Result<Vec<_>, _>>()?;
    ideal_multiset(ideals)
}

/// True when two ideal multisets differ as multisets of ideals.
pub fn multisets_differ(a: &[(IdealGens, usize)], b: &[(IdealGens, usize)]) -> Result<bool, TwistedError> {
    let keyed = |ms: &[(IdealGens, usize)]| -> Result<Vec<(IdealKey, usize)>, TwistedError> {
        let mut v = ms.iter().map(|(i, k)| Ok((ideal_key(i)?, *k))).collect::<Result<Vec<_>, TwistedError>>()?;
        v.sort();
        Ok(v)
    };
    Ok(keyed(a)? != keyed(b)?)
}
