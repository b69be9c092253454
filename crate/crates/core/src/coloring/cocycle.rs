use std::fmt::{self, Write};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{CocycleError, ParseError};
use crate::quandle::FiniteQuandle;
use crate::ring::{kernel_mod, AbelianGroup, GroupElem};

/// A map `θ : X x X -> A` into a multiplicative abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    quandle: FiniteQuandle,
    group: Arc<AbelianGroup>,
    phi: Vec<Vec<GroupElem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CocycleViolation {
    /// `θ(x,x) != e`
    Diagonal { x: usize },
    /// `θ(x*y,z) θ(x,y) != θ(x*z,y*z) θ(x,z)`
    Identity { x: usize, y: usize, z: usize },
}

impl fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Diagonal { x } => write!(f, "theta({x},{x}) is not the identity"),
            Self::Identity { x, y, z } => write!(f, "cocycle identity fails at ({x},{y},{z})"),
        }
    }
}

/// Checks both cocycle conditions on every instance.
pub fn verify_cocycle(q: &FiniteQuandle, g: &AbelianGroup, phi: &[Vec<GroupElem>]) -> Vec<CocycleViolation> {
    let n = q.order();
    let mut out = vec![];
    for x in 0..n {
        if !g.is_identity(&phi[x][x]) {
            out.push(CocycleViolation::Diagonal { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = g.op(&phi[q.op(x, y)][z], &phi[x][y]);
                let r = g.op(&phi[q.op(x, z)][q.op(y, z)], &phi[x][z]);
                if l != r {
                    out.push(CocycleViolation::Identity { x, y, z });
                }
            }
        }
    }
    out
}

impl Cocycle {
    pub fn new(q: &FiniteQuandle, group: Arc<AbelianGroup>, phi: Vec<Vec<GroupElem>>) -> Result<Self, CocycleError> {
        let n = q.order();
        if phi.len() != n || phi.iter().any(|r| r.len() != n) {
            return Err(CocycleError::Shape(format!("theta must be {n}x{n}")));
        }
        if let Some(v) = verify_cocycle(q, &group, &phi).first() {
            return Err(CocycleError::NotCocycle(v.to_string()));
        }
        Ok(Self { quandle: q.clone(), group, phi })
    }

    /// `θ(x,y) = u^{exps[x][y]}` in `Z_n = <u>`.
    pub fn from_exponents(q: &FiniteQuandle, n: i64, exps: &[Vec<i64>]) -> Result<Self, CocycleError> {
        if n < 2 {
            return Err(CocycleError::Modulus(n));
        }
        let g = AbelianGroup::cyclic(n)?.arc();
        let u = g.generator(0);
        let phi = exps.iter().map(|r| r.iter().map(|&k| g.pow(&u, k)).collect()).collect();
        Self::new(q, g, phi)
    }

    /// `θ ≡ e`.
    pub fn trivial(q: &FiniteQuandle, group: Arc<AbelianGroup>) -> Self {
        let e = group.identity();
        let n = q.order();
        Self { quandle: q.clone(), group, phi: vec![vec![e; n]; n] }
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn theta(&self, x: usize, y: usize) -> &GroupElem {
        &self.phi[x][y]
    }

    pub fn table(&self) -> &[Vec<GroupElem>] {
        &self.phi
    }

    /// Exponent table when the group is cyclic.
    pub fn exponents(&self) -> Option<Vec<Vec<i64>>> {
        self.group.cyclic_order()?;
        Some(self.phi.iter().map(|r| r.iter().map(|e| e.coords()[0]).collect()).collect())
    }
}

/// Generating set of the cocycle exponent tables over `Z_n`: all `φ` with
/// `φ(x,x) = 0` and `φ(x*y,z) + φ(x,y) - φ(x*z,y*z) - φ(x,z) = 0 (mod n)`.
pub fn search_cocycles(q: &FiniteQuandle, n: i64) -> Result<Vec<Vec<Vec<i64>>>, CocycleError> {
    if n < 2 {
        return Err(CocycleError::Modulus(n));
    }
    let m = q.order();
    let var = |x: usize, y: usize| x * m + y;
    let mut rows = vec![];
    for x in 0..m {
        let mut r = vec![0i64; m * m];
        r[var(x, x)] = 1;
        rows.push(r);
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let mut r = vec![0i64; m * m];
                r[var(q.op(x, y), z)] += 1;
                r[var(x, y)] += 1;
                r[var(q.op(x, z), q.op(y, z))] -= 1;
                r[var(x, z)] -= 1;
                if r.iter().any(|&v| v.rem_euclid(n) != 0) {
                    rows.push(r);
                }
            }
        }
    }
    Ok(kernel_mod(&rows, m * m, n)
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| v.chunks(m).map(<[i64]>::to_vec).collect())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { cocycle: Cocycle, tried: u64 },
    Exhausted { tried: u64, complete: bool },
}

/// Scans combinations `Σ c_k g_k` of the generators from
/// [`search_cocycles`] in lexicographic order of `(c_1, c_2, ...)`, starting
/// from the zero table, and returns the first cocycle accepted by `pred`.
/// At most `budget` candidates are tried.
pub fn find_cocycle(
    q: &FiniteQuandle,
    n: i64,
    budget: u64,
    pred: impl Fn(&Cocycle) -> bool,
) -> Result<SearchOutcome, CocycleError> {
    let gens = search_cocycles(q, n)?;
    let m = q.order();
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    };
    let orders: Vec<i64> = gens
        .iter()
        .map(|g| n / g.iter().flatten().fold(n, |acc, &v| gcd(acc, v)))
        .collect();
    let mut coeffs = vec![0i64; gens.len()];
    let mut tried = 0u64;
    loop {
        if tried >= budget {
            return Ok(SearchOutcome::Exhausted { tried, complete: false });
        }
        tried += 1;
        let mut table = vec![vec![0i64; m]; m];
        for (c, g) in coeffs.iter().zip(&gens) {
            if *c == 0 {
                continue;
            }
            for x in 0..m {
                for y in 0..m {
                    table[x][y] = (table[x][y] + c * g[x][y]).rem_euclid(n);
                }
            }
        }
        let cocycle = Cocycle::from_exponents(q, n, &table)?;
        if pred(&cocycle) {
            return Ok(SearchOutcome::Found { cocycle, tried });
        }
        // next coefficient vector, last position varying fastest
        let mut k = coeffs.len();
        loop {
            if k == 0 {
                return Ok(SearchOutcome::Exhausted { tried, complete: true });
            }
            k -= 1;
            coeffs[k] += 1;
            if coeffs[k] < orders[k] {
                break;
            }
            coeffs[k] = 0;
        }
    }
}

/// `cocycle n over G` followed by the table. Integer entries are exponents of
/// the generator of a cyclic group; other entries are group elements such as
/// `u^2` or `e`. The cocycle conditions are not checked.
pub fn parse_cocycle_table(text: &str, q: &FiniteQuandle) -> Result<(Arc<AbelianGroup>, Vec<Vec<GroupElem>>), ParseError> {
    let mut lines = crate::quandle::io::content_lines(text);
    let (ln, head) = lines.next().ok_or_else(|| ParseError::new(1, "empty cocycle file"))?;
    let (n, group) = crate::quandle::io::parse_header(ln, head, "cocycle")?;
    if n != q.order() {
        return Err(ParseError::new(ln, format!("cocycle size {n} does not match quandle order {}", q.order())));
    }
    let group = group.ok_or_else(|| ParseError::new(ln, "header needs `over <group>`"))?;
    let g = AbelianGroup::parse_spec(&group).map_err(|e| ParseError::new(ln, e.to_string()))?;
    if !g.is_finite() {
        return Err(ParseError::new(ln, "cocycle group must be finite"));
    }
    let g = g.arc();
    let mut phi = vec![];
    for r in 0..n {
        let (ln, s) = lines
            .next()
            .ok_or_else(|| ParseError::new(text.lines().count(), format!("expected {n} rows, found {r}")))?;
        let row = s
            .split_whitespace()
            .map(|w| match (w.parse::<i64>(), g.cyclic_order()) {
                (Ok(k), Some(_)) => Ok(g.pow(&g.generator(0), k)),
                _ => g.parse_elem(w).map_err(|e| ParseError::new(ln, format!("row {}: {e}", r + 1))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(ParseError::new(ln, format!("row {}: expected {n} entries", r + 1)));
        }
        phi.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln, "unexpected content after table"));
    }
    Ok((g, phi))
}

/// [`parse_cocycle_table`] followed by verification.
pub fn parse_cocycle(text: &str, q: &FiniteQuandle) -> Result<Cocycle, CocycleParseError> {
    let (g, phi) = parse_cocycle_table(text, q)?;
    Ok(Cocycle::new(q, g, phi)?)
}

pub fn format_cocycle(c: &Cocycle) -> String {
    let mut s = format!("cocycle {} over {}\n", c.quandle.order(), c.group);
    match c.exponents() {
        Some(t) => {
            for row in t {
                let _ = writeln!(s, "{}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
        }
        None => {
            for row in &c.phi {
                let _ = writeln!(s, "{}", row.iter().map(|e| c.group.format_elem(e)).collect::<Vec<_>>().join(" "));
            }
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CocycleParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] CocycleError),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(q: &FiniteQuandle, n: i64) -> usize {
        // all exponent tables with zero diagonal
        let m = q.order();
        let free: Vec<(usize, usize)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
        let total = (n as usize).pow(free.len() as u32);
        let g = AbelianGroup::cyclic(n).unwrap();
        let u = g.generator(0);
        (0..total)
            .filter(|&code| {
                let mut phi = vec![vec![g.identity(); m]; m];
                let mut c = code;
                for &(x, y) in &free {
                    phi[x][y] = g.pow(&u, (c % n as usize) as i64);
                    c /= n as usize;
                }
                verify_cocycle(q, &g, &phi).is_empty()
            })
            .count()
    }

    /// Number of distinct tables in the Z_n-span of the generators.
    fn span_size(q: &FiniteQuandle, n: i64) -> usize {
        let gens = search_cocycles(q, n).unwrap();
        let m = q.order();
        let mut seen = std::collections::BTreeSet::new();
        let mut coeffs = vec![0i64; gens.len()];
        loop {
            let mut t = vec![0i64; m * m];
            for (c, g) in coeffs.iter().zip(&gens) {
                for (i, v) in g.iter().flatten().enumerate() {
                    t[i] = (t[i] + c * v).rem_euclid(n);
                }
            }
            seen.insert(t);
            let Some(k) = (0..coeffs.len()).rev().find(|&k| coeffs[k] + 1 < n) else {
                return seen.len();
            };
            coeffs[k] += 1;
            coeffs[k + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }

    #[test]
    fn solution_space_matches_brute_force() {
        for (q, n) in [
            (FiniteQuandle::dihedral(3), 3),
            (FiniteQuandle::dihedral(3), 2),
            (FiniteQuandle::trivial(2), 4),
            (FiniteQuandle::trivial(3), 2),
        ] {
            for g in search_cocycles(&q, n).unwrap() {
                assert!(Cocycle::from_exponents(&q, n, &g).is_ok());
            }
            assert_eq!(span_size(&q, n), brute_force_count(&q, n));
        }
    }

    #[test]
    fn trivial_and_diagonal() {
        let q = FiniteQuandle::dihedral(3);
        let g = AbelianGroup::cyclic(4).unwrap().arc();
        let triv = Cocycle::trivial(&q, g.clone());
        assert!(verify_cocycle(&q, &g, triv.table()).is_empty());
        let mut phi = triv.table().to_vec();
        phi[1][1] = g.generator(0);
        assert!(verify_cocycle(&q, &g, &phi).contains(&CocycleViolation::Diagonal { x: 1 }));
    }

    #[test]
    fn zero_cocycle_first() {
        let q = FiniteQuandle::trivial(2);
        let SearchOutcome::Found { cocycle, tried } = find_cocycle(&q, 2, 10, |_| true).unwrap() else { panic!() };
        assert_eq!(tried, 1);
        assert_eq!(cocycle.exponents().unwrap(), vec![vec![0, 0], vec![0, 0]]);
        let out = find_cocycle(&q, 2, 3, |_| false).unwrap();
        assert_eq!(out, SearchOutcome::Exhausted { tried: 3, complete: false });
    }

    #[test]
    fn file_roundtrip() {
        let q = FiniteQuandle::dihedral(3);
        let gens = search_cocycles(&q, 3).unwrap();
        let c = Cocycle::from_exponents(&q, 3, &gens[0]).unwrap();
        let text = format_cocycle(&c);
        assert!(text.starts_with("cocycle 3 over Z3\n"));
        assert_eq!(parse_cocycle(&text, &q).unwrap(), c);
        let named = "cocycle 3 over Z3\ne e e\ne e e\ne e e\n";
        assert_eq!(parse_cocycle(named, &q).unwrap(), Cocycle::trivial(&q, AbelianGroup::cyclic(3).unwrap().arc()));
        let diag = "cocycle 3 over Z3\nu e e\ne e e\ne e e\n";
        assert!(matches!(parse_cocycle(diag, &q), Err(CocycleParseError::Invalid(_))));
        assert!(matches!(parse_cocycle("cocycle 3 over Z\n", &q), Err(CocycleParseError::Syntax(_))));
        assert!(matches!(parse_cocycle("cocycle 2 over Z3\n0 0\n0 0\n", &q), Err(CocycleParseError::Syntax(_))));
    }
}
