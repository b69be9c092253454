//! Oriented link diagrams, free quandle terms and presentations.

mod pd;
mod presentation;
mod term;

pub use pd::{parse_pd, Crossing, LinkDiagram};
pub use presentation::{check_coloring_correspondence, Presentation, RelatorOrigin};
pub use term::{eval_term, free_canonical, parse_relator, Letter, Term};
