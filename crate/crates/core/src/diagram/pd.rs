use std::collections::BTreeMap;
use std::fmt;

use crate::error::{DiagramError, ParseError};

/// One crossing: the under strand enters on `under_in`, leaves on
/// `under_out`, and passes below `over`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub positive: bool,
}

impl Crossing {
    pub fn new(over: usize, under_in: usize, under_out: usize, positive: bool) -> Self {
        Self { over, under_in, under_out, positive }
    }

    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.positive { '+' } else { '-' };
        write!(f, "X[{},{},{},{}]", self.over, self.under_in, self.under_out, s)
    }
}

/// An oriented link diagram with arcs `0..n_arcs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    successor: Vec<usize>,
    ends_at: Vec<usize>,
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl LinkDiagram {
    /// Builds a diagram from crossings over arbitrary arc labels. Labels are
    /// renumbered `0..n` in increasing order.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let mut labels: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &crossings {
            for a in [c.over, c.under_in, c.under_out] {
                labels.insert(a, 0);
            }
        }
        for (i, v) in labels.values_mut().enumerate() {
            *v = i;
        }
        let crossings: Vec<Crossing> = crossings
            .iter()
            .map(|c| Crossing::new(labels[&c.over], labels[&c.under_in], labels[&c.under_out], c.positive))
            .collect();
        let n = labels.len();
        let original: Vec<usize> = labels.keys().copied().collect();
        let mut ends_at = vec![usize::MAX; n];
        let mut starts_at = vec![usize::MAX; n];
        for (k, c) in crossings.iter().enumerate() {
            if ends_at[c.under_in] != usize::MAX {
                return Err(DiagramError::Crossing {
                    crossing: k,
                    msg: format!(
                        "arc {} already ends at crossing {}",
                        original[c.under_in], ends_at[c.under_in]
                    ),
                });
            }
            ends_at[c.under_in] = k;
            if starts_at[c.under_out] != usize::MAX {
                return Err(DiagramError::Crossing {
                    crossing: k,
                    msg: format!(
                        "arc {} already starts at crossing {} (inconsistent orientation)",
                        original[c.under_out], starts_at[c.under_out]
                    ),
                });
            }
            starts_at[c.under_out] = k;
        }
        for a in 0..n {
            if ends_at[a] == usize::MAX || starts_at[a] == usize::MAX {
                let k = crossings
                    .iter()
                    .position(|c| [c.over, c.under_in, c.under_out].contains(&a))
                    .unwrap();
                let which = if ends_at[a] == usize::MAX { "never ends" } else { "never starts" };
                return Err(DiagramError::Crossing {
                    crossing: k,
                    msg: format!("dangling arc {}: it {which} at an undercrossing", original[a]),
                });
            }
        }
        let successor: Vec<usize> = (0..n).map(|a| crossings[ends_at[a]].under_out).collect();
        let mut component_of = vec![usize::MAX; n];
        let mut components = vec![];
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let mut arcs = vec![];
            let mut a = start;
            loop {
                component_of[a] = components.len();
                arcs.push(a);
                a = successor[a];
                if a == start {
                    break;
                }
            }
            components.push(arcs);
        }
        Ok(Self { crossings, successor, ends_at, component_of, components })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn n_arcs(&self) -> usize {
        self.successor.len()
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn successor(&self, arc: usize) -> usize {
        self.successor[arc]
    }

    /// The crossing at which `arc` ends as an under strand.
    pub fn crossing_ending(&self, arc: usize) -> usize {
        self.ends_at[arc]
    }

    pub fn component_of(&self, arc: usize) -> usize {
        self.component_of[arc]
    }

    /// Arcs of each component along the orientation, starting from the
    /// smallest arc. Components are ordered by their smallest arc.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Renames arc `a` to `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, DiagramError> {
        let cs = self
            .crossings
            .iter()
            .map(|c| Crossing::new(perm[c.over], perm[c.under_in], perm[c.under_out], c.positive))
            .collect();
        Self::new(cs)
    }

    /// Relabels arcs so that components are consecutive and each is numbered
    /// along its orientation. Returns the diagram and `perm` with
    /// `new = perm[old]`. Crossings are reordered by their under-in arc.
    pub fn component_ordered(&self) -> (Self, Vec<usize>) {
        let mut perm = vec![0; self.n_arcs()];
        for (new, &old) in self.components.iter().flatten().enumerate() {
            perm[old] = new;
        }
        let mut d = self.relabel(&perm).expect("relabeling preserves validity");
        let mut cs = d.crossings.clone();
        cs.sort_by_key(|c| c.under_in);
        d = Self::new(cs).expect("reordering preserves validity");
        (d, perm)
    }

    /// Whether `colors` (one per arc) satisfies every crossing relation
    /// `colors[under_in] *^sign colors[over] = colors[under_out]`.
    pub fn first_bad_crossing(&self, act: impl Fn(usize, usize, bool) -> usize, colors: &[usize]) -> Option<usize> {
        self.crossings
            .iter()
            .position(|c| act(colors[c.under_in], colors[c.over], c.positive) != colors[c.under_out])
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `X[o,ui,uo,s]` tokens, any number per line, with `#` comments.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut crossings = vec![];
    for (ln, line) in crate::quandle::io::content_lines(text) {
        let mut rest = line;
        loop {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
            if rest.is_empty() {
                break;
            }
            let body = rest
                .strip_prefix("X[")
                .ok_or_else(|| ParseError::new(ln, format!("expected `X[` at `{rest}`")))?;
            let end = body.find(']').ok_or_else(|| ParseError::new(ln, "unterminated `X[`"))?;
            let fields: Vec<&str> = body[..end].split(',').map(str::trim).collect();
            if fields.len() != 4 {
                return Err(ParseError::new(ln, format!("crossing needs 4 fields, got {}", fields.len())).into());
            }
            let arc = |s: &str| s.parse::<usize>().map_err(|_| ParseError::new(ln, format!("`{s}` is not an arc label")));
            let positive = match fields[3] {
                "+" | "+1" => true,
                "-" | "-1" => false,
                s => return Err(ParseError::new(ln, format!("sign must be + or -, got `{s}`")).into()),
            };
            crossings.push(Crossing::new(arc(fields[0])?, arc(fields[1])?, arc(fields[2])?, positive));
            rest = &body[end + 1..];
        }
    }
    LinkDiagram::new(crossings)
}
