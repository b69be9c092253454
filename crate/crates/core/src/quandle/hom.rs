use super::finite::FiniteQuandle;
use crate::error::QuandleError;

/// A quandle homomorphism between finite quandles, stored as a map table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleHom {
    source: FiniteQuandle,
    target: FiniteQuandle,
    map: Vec<usize>,
}

impl QuandleHom {
    pub fn new(source: &FiniteQuandle, target: &FiniteQuandle, map: Vec<usize>) -> Result<Self, QuandleError> {
        if map.len() != source.order() {
            return Err(QuandleError::Shape(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(QuandleError::OutOfRange(v));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(QuandleError::NotHomomorphism(x, y));
                }
            }
        }
        Ok(Self { source: source.clone(), target: target.clone(), map })
    }

    pub fn source(&self) -> &FiniteQuandle {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuandle {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

/// All homomorphisms `source -> target`, by backtracking over source
/// elements with the operation constraints checked as soon as both
/// arguments are assigned. Lexicographic order.
pub fn enumerate_homs(source: &FiniteQuandle, target: &FiniteQuandle) -> Vec<QuandleHom> {
    let n = source.order();
    let mut out = vec![];
    let mut map = vec![usize::MAX; n];
    fn consistent(s: &FiniteQuandle, t: &FiniteQuandle, map: &[usize], k: usize) -> bool {
        // check every pair involving k whose product is also assigned
        for x in 0..=k {
            for (a, b) in [(x, k), (k, x)] {
                let p = s.op(a, b);
                if p <= k && map[p] != t.op(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
    fn go(s: &FiniteQuandle, t: &FiniteQuandle, map: &mut Vec<usize>, k: usize, out: &mut Vec<QuandleHom>) {
        if k == map.len() {
            out.push(QuandleHom { source: s.clone(), target: t.clone(), map: map.clone() });
            return;
        }
        for v in 0..t.order() {
            map[k] = v;
            if consistent(s, t, map, k) {
                go(s, t, map, k + 1, out);
            }
        }
        map[k] = usize::MAX;
    }
    go(source, target, &mut map, 0, &mut out);
    out
}
