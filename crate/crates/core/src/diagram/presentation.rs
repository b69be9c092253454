use std::fmt;

use super::pd::LinkDiagram;
use super::term::{eval_term, parse_relator, Term};
use crate::error::ParseError;
use crate::quandle::FiniteQuandle;

/// Where a Wirtinger relator came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelatorOrigin {
    pub crossing: usize,
    /// Component of the under strand.
    pub component: usize,
    pub positive: bool,
}

/// A finite quandle presentation `<x1..xn | lhs = rhs, ...>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n_gens: usize,
    relators: Vec<(Term, Term)>,
    origins: Option<Vec<RelatorOrigin>>,
}

impl Presentation {
    pub fn new(n_gens: usize, relators: Vec<(Term, Term)>) -> Result<Self, String> {
        for (k, (l, r)) in relators.iter().enumerate() {
            let m = l.max_gen().max(r.max_gen());
            if m >= n_gens {
                return Err(format!("relator {k} uses x{} but there are {n_gens} generators", m + 1));
            }
        }
        Ok(Self { n_gens, relators, origins: None })
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn relators(&self) -> &[(Term, Term)] {
        &self.relators
    }

    pub fn origins(&self) -> Option<&[RelatorOrigin]> {
        self.origins.as_deref()
    }

    pub fn deficiency(&self) -> i64 {
        self.n_gens as i64 - self.relators.len() as i64
    }

    /// One generator per arc and the relator `(under_in *^sign over,
    /// under_out)` per crossing, in crossing order.
    pub fn wirtinger(d: &LinkDiagram) -> Self {
        let mut relators = vec![];
        let mut origins = vec![];
        for (k, c) in d.crossings().iter().enumerate() {
            relators.push((Term::op(Term::gen(c.under_in), Term::gen(c.over), c.positive), Term::gen(c.under_out)));
            origins.push(RelatorOrigin { crossing: k, component: d.component_of(c.under_in), positive: c.positive });
        }
        Self { n_gens: d.n_arcs(), relators, origins: Some(origins) }
    }

    /// Wirtinger presentation of [`LinkDiagram::component_ordered`]: the
    /// generators of each component are consecutive and follow its
    /// orientation, and relator `k` has `x_k` on its left. Returns the
    /// presentation and the arc permutation `new = perm[old]`.
    pub fn wirtinger_component_ordered(d: &LinkDiagram) -> (Self, Vec<usize>) {
        let (o, perm) = d.component_ordered();
        let mut p = Self::wirtinger(&o);
        // report crossings by their index in the input diagram
        if let Some(origins) = p.origins.as_mut() {
            for (rel, c) in origins.iter_mut().zip(o.crossings()) {
                let old_in = perm.iter().position(|&n| n == c.under_in).unwrap();
                rel.crossing = d.crossing_ending(old_in);
            }
        }
        (p, perm)
    }

    /// Index of the first relator violated by `images`, if any.
    pub fn first_failing_relator(&self, q: &FiniteQuandle, images: &[usize]) -> Option<usize> {
        self.relators
            .iter()
            .position(|(l, r)| eval_term(l, images, q) != eval_term(r, images, q))
    }

    /// Parses `gens k` followed by one relator per line.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = crate::quandle::io::content_lines(text);
        let (ln, head) = lines.next().ok_or_else(|| ParseError::new(1, "empty presentation"))?;
        let (n, group) = crate::quandle::io::parse_header(ln, head, "gens")?;
        if group.is_some() {
            return Err(ParseError::new(ln, "`gens` header takes no group"));
        }
        let mut relators = vec![];
        for (ln, s) in lines {
            let (l, r) = parse_relator(s, ln)?;
            let m = l.max_gen().max(r.max_gen());
            if m >= n {
                return Err(ParseError::new(ln, format!("x{} exceeds the {n} declared generators", m + 1)));
            }
            relators.push((l, r));
        }
        Ok(Self { n_gens: n, relators, origins: None })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.n_gens)?;
        for (l, r) in &self.relators {
            writeln!(f, "({l} , {r})")?;
        }
        Ok(())
    }
}

/// True iff the arc assignment satisfies every crossing relation, which is
/// the same as defining a homomorphism from the Wirtinger presentation.
pub fn check_coloring_correspondence(d: &LinkDiagram, q: &FiniteQuandle, images: &[usize]) -> bool {
    assert_eq!(images.len(), d.n_arcs(), "one image per arc");
    let as_coloring = d.first_bad_crossing(|x, y, p| q.act(x, y, p), images).is_none();
    let as_hom = Presentation::wirtinger(d).first_failing_relator(q, images).is_none();
    debug_assert_eq!(as_coloring, as_hom);
    as_coloring && as_hom
}
