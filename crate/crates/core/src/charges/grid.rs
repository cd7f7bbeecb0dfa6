use crate::rational::{q, Q};
use serde::Serialize;

/// Charge units indexing the grid rows; columns are their conjugates.
pub const UNITS: [&str; 5] = ["s_G", "s_B", "s_R", "w", "e"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GridLabel {
    Gluons,
    X,
    Y,
    #[serde(rename = "W+")]
    WPlus,
    #[serde(rename = "W-")]
    WMinus,
    #[serde(rename = "Z0/gamma")]
    ZGamma,
    /// The extra generator that turns SU(5) into U(5).
    Diagonal,
}

impl GridLabel {
    pub fn symbol(self) -> &'static str {
        match self {
            GridLabel::Gluons => "Gluons",
            GridLabel::X => "X",
            GridLabel::Y => "Y",
            GridLabel::WPlus => "W⁺",
            GridLabel::WMinus => "W⁻",
            GridLabel::ZGamma => "Z⁰/γ",
            GridLabel::Diagonal => "diagonal",
        }
    }
}

/// A generator as either a single off-diagonal cell or a real diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Generator {
    Cell { label: GridLabel, row: usize, col: usize },
    Diagonal { label: GridLabel, #[serde(with = "serde_q5")] weights: [Q; 5] },
}

impl Generator {
    pub fn label(&self) -> GridLabel {
        match self {
            Generator::Cell { label, .. } | Generator::Diagonal { label, .. } => *label,
        }
    }

    pub fn trace(&self) -> Q {
        match self {
            Generator::Cell { .. } => q(0),
            Generator::Diagonal { weights, .. } => weights.iter().sum(),
        }
    }
}

mod serde_q5 {
    use crate::rational::{fmt_q, Q};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &[Q; 5], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(fmt_q))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SU5Grid {
    pub extended: bool,
    pub units: [&'static str; 5],
    pub cells: [[GridLabel; 5]; 5],
    pub generators: Vec<Generator>,
}

impl SU5Grid {
    pub fn count(&self) -> usize {
        self.generators.len()
    }

    pub fn cell(&self, row: &str, col: &str) -> Option<GridLabel> {
        let find = |u: &str| UNITS.iter().position(|x| *x == u.trim_end_matches('~').trim_end_matches('\u{304}'));
        Some(self.cells[find(row)?][find(col)?])
    }
}

fn label(r: usize, c: usize) -> GridLabel {
    match (r, c) {
        (0..=2, 0..=2) => GridLabel::Gluons,
        (0..=2, 3) | (3, 0..=2) => GridLabel::Y,
        (0..=2, 4) | (4, 0..=2) => GridLabel::X,
        (3, 4) => GridLabel::WMinus,
        (4, 3) => GridLabel::WPlus,
        _ => GridLabel::ZGamma,
    }
}

fn diag(w: [i64; 5]) -> [Q; 5] {
    w.map(q)
}

pub fn su5_grid(extended: bool) -> SU5Grid {
    let cells: [[GridLabel; 5]; 5] = std::array::from_fn(|r| std::array::from_fn(|c| label(r, c)));
    let mut generators = Vec::new();
    for r in 0..5 {
        for c in 0..5 {
            if r != c {
                generators.push(Generator::Cell { label: cells[r][c], row: r, col: c });
            }
        }
    }
    // colourless gluons, then the two neutral electroweak combinations
    generators.push(Generator::Diagonal { label: GridLabel::Gluons, weights: diag([1, -1, 0, 0, 0]) });
    generators.push(Generator::Diagonal { label: GridLabel::Gluons, weights: diag([1, 1, -2, 0, 0]) });
    generators.push(Generator::Diagonal { label: GridLabel::ZGamma, weights: diag([0, 0, 0, 1, -1]) });
    generators.push(Generator::Diagonal { label: GridLabel::ZGamma, weights: diag([2, 2, 2, -3, -3]) });
    if extended {
        generators.push(Generator::Diagonal { label: GridLabel::Diagonal, weights: diag([1, 1, 1, 1, 1]) });
    }
    SU5Grid { extended, units: UNITS, cells, generators }
}
