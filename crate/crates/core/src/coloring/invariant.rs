use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::cocycle::Cocycle;
use crate::diagram::LinkDiagram;
use crate::error::CocycleError;
use crate::quandle::FiniteQuandle;
use crate::ring::{AbelianGroup, GroupElem};

/// Arc colors, indexed by arc.
pub type Coloring = Vec<usize>;

const UNSET: usize = usize::MAX;

/// Fills forced colors through crossings until nothing changes. Returns
/// false on a contradiction.
fn propagate(d: &LinkDiagram, q: &FiniteQuandle, colors: &mut [usize]) -> bool {
    loop {
        let mut changed = false;
        for c in d.crossings() {
            let (o, i, u) = (colors[c.over], colors[c.under_in], colors[c.under_out]);
            if o == UNSET {
                continue;
            }
            if i != UNSET {
                let v = q.act(i, o, c.positive);
                if u == UNSET {
                    colors[c.under_out] = v;
                    changed = true;
                } else if u != v {
                    return false;
                }
            } else if u != UNSET {
                colors[c.under_in] = q.act(u, o, !c.positive);
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
}

fn backtrack(d: &LinkDiagram, q: &FiniteQuandle, order: &[usize], colors: &mut [usize], out: &mut Vec<Coloring>) {
    let Some(&arc) = order.iter().find(|&&a| colors[a] == UNSET) else {
        out.push(colors.to_vec());
        return;
    };
    for x in 0..q.order() {
        let mut next = colors.to_vec();
        next[arc] = x;
        if propagate(d, q, &mut next) {
            backtrack(d, q, order, &mut next, out);
        }
    }
}

/// All `X`-colorings of `d`, sorted lexicographically by arc colors. The
/// search runs in parallel over the color of the first arc.
pub fn enumerate_colorings(d: &LinkDiagram, q: &FiniteQuandle) -> Vec<Coloring> {
    let order: Vec<usize> = d.components().iter().flatten().copied().collect();
    let first = order[0];
    let mut all: Vec<Coloring> = (0..q.order())
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut colors = vec![UNSET; d.n_arcs()];
            colors[first] = x;
            let mut out = vec![];
            if propagate(d, q, &mut colors) {
                backtrack(d, q, &order, &mut colors, &mut out);
            }
            out
        })
        .collect();
    all.sort_unstable();
    all
}

/// Weight of crossing `k`: `θ(c(under_in), c(over))` at a positive crossing
/// and `θ(c(under_out), c(over))^{-1}` at a negative one.
pub fn weight(d: &LinkDiagram, k: usize, colors: &[usize], theta: &Cocycle) -> Result<GroupElem, CocycleError> {
    let q = theta.quandle();
    let c = d.crossings()[k];
    if q.act(colors[c.under_in], colors[c.over], c.positive) != colors[c.under_out] {
        return Err(CocycleError::InvalidColoring(k));
    }
    Ok(if c.positive {
        theta.theta(colors[c.under_in], colors[c.over]).clone()
    } else {
        theta.group().inv(theta.theta(colors[c.under_out], colors[c.over]))
    })
}

/// For each component, the product of the weights of the crossings whose
/// under strand belongs to it.
pub fn component_invariant(d: &LinkDiagram, colors: &[usize], theta: &Cocycle) -> Result<Vec<GroupElem>, CocycleError> {
    let g = theta.group();
    let mut out = vec![g.identity(); d.components().len()];
    for (k, c) in d.crossings().iter().enumerate() {
        let i = d.component_of(c.under_in);
        out[i] = g.op(&out[i], &weight(d, k, colors, theta)?);
    }
    Ok(out)
}

/// Multiset of per-component weight tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantMultiset {
    group: Arc<AbelianGroup>,
    entries: BTreeMap<Vec<GroupElem>, usize>,
}

impl InvariantMultiset {
    pub fn new(group: Arc<AbelianGroup>) -> Self {
        Self { group, entries: BTreeMap::new() }
    }

    pub fn insert(&mut self, t: Vec<GroupElem>) {
        *self.entries.entry(t).or_default() += 1;
    }

    pub fn entries(&self) -> &BTreeMap<Vec<GroupElem>, usize> {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn format_tuple(&self, t: &[GroupElem]) -> String {
        format!("({})", t.iter().map(|e| self.group.format_elem(e)).collect::<Vec<_>>().join(","))
    }

    /// Parses `e:6,u:24` or, for links, `(e,u):3,(u,e):1`.
    pub fn parse(group: Arc<AbelianGroup>, s: &str) -> Result<Self, String> {
        let mut m = Self::new(group);
        let mut depth = 0;
        let mut parts = vec![];
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&s[start..]);
        for part in parts.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
            let (t, k) = part.rsplit_once(':').ok_or_else(|| format!("`{part}` needs the form elem:count"))?;
            let k: usize = k.trim().parse().map_err(|_| format!("bad count in `{part}`"))?;
            let t = t.trim();
            let inner = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
            let tuple = inner
                .split(',')
                .map(|e| m.group.parse_elem(e.trim()).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            *m.entries.entry(tuple).or_default() += k;
        }
        Ok(m)
    }
}

impl fmt::Display for InvariantMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, k) in &self.entries {
            writeln!(f, "{} x {k}", self.format_tuple(t))?;
        }
        Ok(())
    }
}

/// `Φ_θ` over all colorings of `d` by the cocycle's quandle.
pub fn cocycle_invariant(d: &LinkDiagram, theta: &Cocycle) -> InvariantMultiset {
    let mut m = InvariantMultiset::new(theta.group().clone());
    for c in enumerate_colorings(d, theta.quandle()) {
        m.insert(component_invariant(d, &c, theta).expect("enumerated colorings are valid"));
    }
    m
}
