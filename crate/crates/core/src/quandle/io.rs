//! Text formats for quandle tables and Alexander pairs.
//!
//! ```text
//! quandle 3
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! ```
//!
//! ```text
//! pair 3 over Z
//! f1
//! t, t, t
//! ...
//! f2
//! 1 - t, 1 - t, 1 - t
//! ...
//! ```
//! An optional `f1_inv` block may follow; missing inverses of monomial
//! entries are computed.

use std::fmt::Write;

use super::finite::FiniteQuandle;
use super::pair::PairTables;
use crate::error::{ParseError, QuandleError};
use crate::ring::{AbelianGroup, GroupRingElem};

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Parses a `<keyword> <n>[ over <group>]` header.
pub(crate) fn parse_header(line: usize, s: &str, keyword: &str) -> Result<(usize, Option<String>), ParseError> {
    let mut words = s.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(ParseError::new(line, format!("expected header `{keyword} <n>`")));
    }
    let n = words
        .next()
        .and_then(|w| w.parse::<usize>().ok())
        .ok_or_else(|| ParseError::new(line, format!("expected a size after `{keyword}`")))?;
    let group = match words.next() {
        None => None,
        Some("over") => {
            let rest: Vec<&str> = words.collect();
            if rest.is_empty() {
                return Err(ParseError::new(line, "expected a group after `over`"));
            }
            Some(rest.join(" "))
        }
        Some(w) => return Err(ParseError::new(line, format!("unexpected `{w}` in header"))),
    };
    Ok((n, group))
}

/// Reads `n` rows of `n` whitespace-separated integers in `0..bound`.
pub(crate) fn parse_int_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
    bound: i64,
    last_line: usize,
) -> Result<Vec<Vec<i64>>, ParseError> {
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, s) = lines
            .next()
            .ok_or_else(|| ParseError::new(last_line, format!("expected {n} rows, found {r}")))?;
        let row = s
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|_| ParseError::new(ln, format!("row {}: `{w}` is not an integer", r + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(ParseError::new(ln, format!("row {}: expected {n} entries", r + 1)));
        }
        if let Some(v) = row.iter().find(|&&v| !(0..bound).contains(&v)) {
            return Err(ParseError::new(ln, format!("row {}: entry {v} out of range", r + 1)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses a quandle file into its operation table without checking axioms.
pub fn parse_quandle_table(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = content_lines(text);
    let (ln, head) = lines.next().ok_or_else(|| ParseError::new(1, "empty quandle file"))?;
    let (n, group) = parse_header(ln, head, "quandle")?;
    if group.is_some() {
        return Err(ParseError::new(ln, "quandle header takes no group"));
    }
    let rows = parse_int_rows(&mut lines, n, n as i64, text.lines().count())?;
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln, "unexpected content after table"));
    }
    Ok(rows.into_iter().map(|r| r.into_iter().map(|v| v as usize).collect()).collect())
}

/// Parses a quandle file and verifies the axioms.
pub fn parse_quandle(text: &str) -> Result<FiniteQuandle, QuandleParseError> {
    Ok(FiniteQuandle::from_table(parse_quandle_table(text)?)?)
}

pub fn format_quandle(q: &FiniteQuandle) -> String {
    let mut s = format!("quandle {}\n", q.order());
    for row in q.table() {
        let _ = writeln!(s, "{}", row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    s
}

/// Parses a pair file against the quandle it is defined on. The tables are
/// not verified here; see [`super::verify_alexander_pair`].
pub fn parse_pair(text: &str, quandle: &FiniteQuandle) -> Result<PairTables, QuandleParseError> {
    let mut lines = content_lines(text).peekable();
    let (ln, head) = lines.next().ok_or_else(|| ParseError::new(1, "empty pair file"))?;
    let (n, group) = parse_header(ln, head, "pair")?;
    if n != quandle.order() {
        return Err(ParseError::new(ln, format!("pair size {n} does not match quandle order {}", quandle.order())).into());
    }
    let group = AbelianGroup::parse_spec(group.as_deref().unwrap_or("Z"))
        .map_err(|e| ParseError::new(ln, e.to_string()))?
        .arc();
    let mut blocks: Vec<Vec<Vec<GroupRingElem>>> = vec![];
    let labels = ["f1", "f2", "f1_inv"];
    while blocks.len() < 3 && lines.peek().is_some() {
        let label = labels[blocks.len()];
        if let Some(&(_, l)) = lines.peek() {
            if labels.contains(&l) {
                if l != label {
                    return Err(ParseError::new(lines.peek().unwrap().0, format!("expected block `{label}`")).into());
                }
                lines.next();
            }
        }
        let mut block = Vec::with_capacity(n);
        for r in 0..n {
            let (ln, s) = lines
                .next()
                .ok_or_else(|| ParseError::new(text.lines().count(), format!("{label}: expected {n} rows, found {r}")))?;
            let row = s
                .split(',')
                .map(|e| GroupRingElem::parse(&group, e.trim()).map_err(|err| ParseError::new(ln, format!("row {}: {err}", r + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != n {
                return Err(ParseError::new(ln, format!("row {}: expected {n} entries", r + 1)).into());
            }
            block.push(row);
        }
        blocks.push(block);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln, "unexpected content after tables").into());
    }
    if blocks.len() < 2 {
        return Err(ParseError::new(text.lines().count(), "expected f1 and f2 blocks").into());
    }
    let f1_inv = match blocks.get(2) {
        Some(b) => b.iter().map(|r| r.iter().cloned().map(Some).collect()).collect(),
        None => vec![vec![None; n]; n],
    };
    let mut it = blocks.into_iter();
    Ok(PairTables {
        quandle: quandle.clone(),
        group,
        f1: it.next().unwrap(),
        f2: it.next().unwrap(),
        f1_inv,
    })
}

pub fn format_pair(p: &PairTables) -> String {
    let n = p.quandle.order();
    let mut s = format!("pair {n} over {}\n", p.group);
    let block = |s: &mut String, name: &str, t: &[Vec<GroupRingElem>]| {
        let _ = writeln!(s, "{name}");
        for row in t {
            let _ = writeln!(s, "{}", row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "));
        }
    };
    block(&mut s, "f1", &p.f1);
    block(&mut s, "f2", &p.f2);
    if p.f1_inv.iter().flatten().all(Option::is_some) {
        let inv: Vec<Vec<GroupRingElem>> = p.f1_inv.iter().map(|r| r.iter().map(|e| e.clone().unwrap()).collect()).collect();
        block(&mut s, "f1_inv", &inv);
    }
    s
}

/// Either a syntax error or a semantic rejection of parsed data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] QuandleError),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quandle_roundtrip() {
        let q = FiniteQuandle::tetrahedron();
        let text = format_quandle(&q);
        assert_eq!(parse_quandle(&text).unwrap(), q);
        let commented = format!("# tetrahedron\n\n{}", text.replace('\n', "  # row\n"));
        assert_eq!(parse_quandle(&commented).unwrap(), q);
    }

    #[test]
    fn short_row_message() {
        let text = "quandle 4\n0 3 1 2\n2 1 3 0\n3 0 2\n1 2 0 3\n";
        let err = parse_quandle(text).unwrap_err();
        assert_eq!(err.to_string(), "line 4: row 3: expected 4 entries");
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(parse_quandle("quandle 2\n0 0\n0 1\n"), Err(QuandleParseError::Invalid(_))));
        assert!(matches!(parse_quandle("quandle 2\n0 5\n1 1\n"), Err(QuandleParseError::Syntax(_))));
        assert!(matches!(parse_quandle("quandl 2\n"), Err(QuandleParseError::Syntax(_))));
        assert!(matches!(parse_quandle(""), Err(QuandleParseError::Syntax(_))));
    }

    #[test]
    fn pair_roundtrip() {
        let q = FiniteQuandle::tetrahedron();
        let burau = super::super::AlexanderPairTable::burau(&q);
        let text = format_pair(burau.tables());
        assert!(text.starts_with("pair 4 over Z\nf1\nt, t, t, t\n"));
        assert_eq!(&parse_pair(&text, &q).unwrap(), burau.tables());
    }

    #[test]
    fn pair_without_inverses() {
        let q = FiniteQuandle::trivial(1);
        let p = parse_pair("pair 1 over Z4\nu\n1 - u\n", &q).unwrap();
        assert_eq!(p.f1_inv, vec![vec![None]]);
        assert!(super::super::verify_alexander_pair(&p).unwrap().is_empty());
        assert!(parse_pair("pair 1 over Z4\nf2\nu\n1 - u\n", &q).is_err());
        assert!(parse_pair("pair 2 over Z4\nu\n", &q).is_err());
    }
}
