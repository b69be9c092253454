use std::fmt;

use crate::error::ParseError;
use crate::quandle::FiniteQuandle;

/// A free quandle term: a generator, or `left * right` / `left *~ right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(usize),
    Op(Box<Term>, Box<Term>, bool),
}

impl Term {
    pub fn gen(i: usize) -> Self {
        Term::Gen(i)
    }

    pub fn op(l: Term, r: Term, positive: bool) -> Self {
        Term::Op(Box::new(l), Box::new(r), positive)
    }

    pub fn star(self, r: Term) -> Self {
        Self::op(self, r, true)
    }

    pub fn star_inv(self, r: Term) -> Self {
        Self::op(self, r, false)
    }

    /// Largest generator index appearing in the term.
    pub fn max_gen(&self) -> usize {
        match self {
            Term::Gen(i) => *i,
            Term::Op(l, r, _) => l.max_gen().max(r.max_gen()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Gen(_) => 0,
            Term::Op(l, r, _) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Parses `x1*x2`, `(x1*~x3)*x2` and so on. Generators are 1-based in
    /// text; operators associate to the left.
    pub fn parse(s: &str) -> Result<Self, String> {
        let toks = tokenize(s)?;
        let mut p = TermParser { toks: &toks, pos: 0 };
        let t = p.expr()?;
        if p.pos != toks.len() {
            return Err(format!("unexpected `{}`", toks[p.pos]));
        }
        Ok(t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(i) => write!(f, "x{}", i + 1),
            Term::Op(l, r, pos) => {
                let op = if *pos { "*" } else { "*~" };
                let side = |t: &Term| match t {
                    Term::Gen(_) => t.to_string(),
                    _ => format!("({t})"),
                };
                write!(f, "{}{op}{}", side(l), side(r))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Gen(usize),
    Star,
    StarInv,
    Open,
    Close,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Gen(i) => write!(f, "x{}", i + 1),
            Tok::Star => f.write_str("*"),
            Tok::StarInv => f.write_str("*~"),
            Tok::Open => f.write_str("("),
            Tok::Close => f.write_str(")"),
            Tok::Comma => f.write_str(","),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let b = s.as_bytes();
    let mut out = vec![];
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            c if c.is_ascii_whitespace() => i += 1,
            b'(' => {
                out.push(Tok::Open);
                i += 1;
            }
            b')' => {
                out.push(Tok::Close);
                i += 1;
            }
            b',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            b'*' if b.get(i + 1) == Some(&b'~') => {
                out.push(Tok::StarInv);
                i += 2;
            }
            b'*' => {
                out.push(Tok::Star);
                i += 1;
            }
            b'x' => {
                let j = i + 1 + b[i + 1..].iter().take_while(|c| c.is_ascii_digit()).count();
                let k: usize = s[i + 1..j].parse().map_err(|_| "generator needs an index, e.g. x1".to_string())?;
                if k == 0 {
                    return Err("generators are numbered from x1".into());
                }
                out.push(Tok::Gen(k - 1));
                i = j;
            }
            _ => return Err(format!("unexpected character `{}`", s[i..].chars().next().unwrap())),
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl TermParser<'_> {
    fn expr(&mut self) -> Result<Term, String> {
        let mut t = self.atom()?;
        while let Some(op @ (Tok::Star | Tok::StarInv)) = self.toks.get(self.pos) {
            let positive = *op == Tok::Star;
            self.pos += 1;
            t = Term::op(t, self.atom()?, positive);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, String> {
        match self.toks.get(self.pos) {
            Some(Tok::Gen(i)) => {
                self.pos += 1;
                Ok(Term::Gen(*i))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let t = self.expr()?;
                if self.toks.get(self.pos) != Some(&Tok::Close) {
                    return Err("missing `)`".into());
                }
                self.pos += 1;
                Ok(t)
            }
            Some(t) => Err(format!("unexpected `{t}`")),
            None => Err("unexpected end of term".into()),
        }
    }
}

/// Parses a relator `lhs , rhs`, optionally wrapped in one pair of parentheses.
pub fn parse_relator(s: &str, line: usize) -> Result<(Term, Term), ParseError> {
    let err = |m: String| ParseError::new(line, m);
    let toks = tokenize(s).map_err(err)?;
    let mut depth = 0i32;
    let mut comma = None;
    for (i, t) in toks.iter().enumerate() {
        match t {
            Tok::Open => depth += 1,
            Tok::Close => depth -= 1,
            Tok::Comma => {
                if comma.is_some() {
                    return Err(err("relator has more than one `,`".into()));
                }
                comma = Some((i, depth));
            }
            _ => {}
        }
    }
    let (ci, cd) = comma.ok_or_else(|| err("relator needs the form `lhs , rhs`".into()))?;
    let (lo, hi) = match cd {
        0 => (0, toks.len()),
        1 if toks.first() == Some(&Tok::Open) && toks.last() == Some(&Tok::Close) => (1, toks.len() - 1),
        _ => return Err(err("misplaced `,` in relator".into())),
    };
    let side = |ts: &[Tok]| -> Result<Term, ParseError> {
        let mut p = TermParser { toks: ts, pos: 0 };
        let t = p.expr().map_err(err)?;
        if p.pos != ts.len() {
            return Err(err(format!("unexpected `{}`", ts[p.pos])));
        }
        Ok(t)
    };
    Ok((side(&toks[lo..ci])?, side(&toks[ci + 1..hi])?))
}

/// Evaluates `t` in `q` with generator `i` sent to `images[i]`.
///
/// Panics if a generator index has no image.
pub fn eval_term(t: &Term, images: &[usize], q: &FiniteQuandle) -> usize {
    match t {
        Term::Gen(i) => images[*i],
        Term::Op(l, r, pos) => q.act(eval_term(l, images, q), eval_term(r, images, q), *pos),
    }
}

/// A letter `g^{±1}` of a free group word.
pub type Letter = (usize, bool);

fn push_reduced(w: &mut Vec<Letter>, l: Letter) {
    if w.last() == Some(&(l.0, !l.1)) {
        w.pop();
    } else {
        w.push(l);
    }
}

/// Canonical form `(a, w)` of a term in the free quandle: the element is the
/// class of `(a, w)` with `w` freely reduced and leading `a^{±1}` letters
/// removed. Two terms are equal in the free quandle iff their forms agree.
pub fn free_canonical(t: &Term) -> (usize, Vec<Letter>) {
    match t {
        Term::Gen(a) => (*a, vec![]),
        Term::Op(l, r, pos) => {
            let (a, x) = free_canonical(l);
            let (b, y) = free_canonical(r);
            let mut w = x;
            for &(g, e) in y.iter().rev() {
                push_reduced(&mut w, (g, !e));
            }
            push_reduced(&mut w, (b, *pos));
            for &l in &y {
                push_reduced(&mut w, l);
            }
            let lead = w.iter().take_while(|&&(g, _)| g == a).count();
            w.drain(..lead);
            (a, w)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t = Term::parse("((x1*x2)*x1)").unwrap();
        assert_eq!(t, Term::gen(0).star(Term::gen(1)).star(Term::gen(0)));
        assert_eq!(t.to_string(), "(x1*x2)*x1");
        assert_eq!(Term::parse("x1*x2*~x3").unwrap(), Term::gen(0).star(Term::gen(1)).star_inv(Term::gen(2)));
        assert_eq!(Term::parse(&t.to_string()).unwrap(), t);
        for bad in ["", "x0", "x1*", "(x1", "x1 x2", "y1", "x1)"] {
            assert!(Term::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn relators() {
        let (l, r) = parse_relator("((x1*x2)*x1 , x2)", 3).unwrap();
        assert_eq!(l.to_string(), "(x1*x2)*x1");
        assert_eq!(r, Term::gen(1));
        let (l, r) = parse_relator("(x1*x2)*x1, (x2)", 3).unwrap();
        assert_eq!((l.depth(), r.depth()), (2, 0));
        assert_eq!(parse_relator("x1*x2", 7).unwrap_err().line, 7);
        assert!(parse_relator("x1, x2, x3", 1).is_err());
        assert!(parse_relator("(x1, x2) * x3", 1).is_err());
    }

    #[test]
    fn evaluation() {
        let q = FiniteQuandle::tetrahedron();
        let t = Term::parse("(x1*x2)*x1").unwrap();
        assert_eq!(eval_term(&t, &[0, 1], &q), 1);
        let back = Term::parse("(x1*x2)*~x2").unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(eval_term(&back, &[a, b], &q), a);
            }
        }
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(free_canonical(&Term::gen(0)), (0, vec![]));
        assert_eq!(free_canonical(&Term::gen(0).star(Term::gen(1))), (0, vec![(1, true)]));
        assert_eq!(free_canonical(&Term::parse("(x1*x2)*~x2").unwrap()), (0, vec![]));
        // idempotence: a*a = a
        assert_eq!(free_canonical(&Term::parse("x1*x1").unwrap()), (0, vec![]));
        // right distributivity holds in the free quandle
        let l = free_canonical(&Term::parse("(x1*x2)*x3").unwrap());
        let r = free_canonical(&Term::parse("(x1*x3)*(x2*x3)").unwrap());
        assert_eq!(l, r);
        assert_ne!(free_canonical(&Term::parse("x1*x2").unwrap()), free_canonical(&Term::parse("x1*~x2").unwrap()));
    }
}
