//! Fox free differential calculus over `Z[t^{±1}]`, written independently of
//! the library's ring code. Each Wirtinger generator maps to `t^{-1}`.
#![allow(dead_code)]

use std::collections::BTreeMap;

use qalex::diagram::LinkDiagram;
use qalex::ring::GroupRingElem;

/// Laurent polynomial as exponent -> coefficient, no zero entries.
pub type Poly = BTreeMap<i64, i64>;

pub fn mono(e: i64, c: i64) -> Poly {
    let mut p = Poly::new();
    if c != 0 {
        p.insert(e, c);
    }
    p
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (&e, &c) in b {
        let v = out.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            out.remove(&e);
        }
    }
    out
}

pub fn neg(a: &Poly) -> Poly {
    a.iter().map(|(&e, &c)| (e, -c)).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e1, &c1) in a {
        for (&e2, &c2) in b {
            out = add(&out, &mono(e1 + e2, c1 * c2));
        }
    }
    out
}

/// Exact quotient `a / b` in `Z[t^{±1}]` when it exists.
pub fn divide(a: &Poly, b: &Poly) -> Option<Poly> {
    let (&bl, &bc) = b.iter().next()?;
    let mut rem = a.clone();
    let mut q = Poly::new();
    let bh = *b.keys().next_back().unwrap();
    while let Some((&rl, &rc)) = rem.iter().next() {
        if rc % bc != 0 || *rem.keys().next_back().unwrap() - rl < bh - bl {
            return None;
        }
        let m = mono(rl - bl, rc / bc);
        rem = add(&rem, &neg(&mul(&m, b)));
        q = add(&q, &m);
    }
    Some(q)
}

/// A free group word: (generator, exponent ±1).
pub type Word = Vec<(usize, i64)>;

/// `∂w/∂x_j` with `x_i ↦ t^{-1}`.
pub fn fox(w: &Word, j: usize) -> Poly {
    let mut out = Poly::new();
    let mut prefix = 0i64;
    for &(g, e) in w {
        if e > 0 {
            if g == j {
                out = add(&out, &mono(prefix, 1));
            }
            prefix -= 1;
        } else {
            prefix += 1;
            if g == j {
                out = add(&out, &mono(prefix, -1));
            }
        }
    }
    out
}

/// Group relators of the diagram: `x_o^{-1} x_i x_o x_u^{-1}` at positive
/// crossings and `x_o x_i x_o^{-1} x_u^{-1}` at negative ones.
pub fn wirtinger_words(d: &LinkDiagram) -> Vec<Word> {
    d.crossings()
        .iter()
        .map(|c| {
            let s = if c.positive { 1 } else { -1 };
            vec![(c.over, -s), (c.under_in, 1), (c.over, s), (c.under_out, -1)]
        })
        .collect()
}

pub fn fox_matrix(d: &LinkDiagram) -> Vec<Vec<Poly>> {
    wirtinger_words(d).iter().map(|w| (0..d.n_arcs()).map(|j| fox(w, j)).collect()).collect()
}

pub fn det2(m: &[Vec<Poly>], r: [usize; 2], c: [usize; 2]) -> Poly {
    add(&mul(&m[r[0]][c[0]], &m[r[1]][c[1]]), &neg(&mul(&m[r[0]][c[1]], &m[r[1]][c[0]])))
}

/// Reads a library element of `Z[t^{±1}]` as a [`Poly`].
pub fn from_elem(x: &GroupRingElem) -> Poly {
    x.terms().map(|(g, c)| (g.coords()[0], c)).collect()
}
