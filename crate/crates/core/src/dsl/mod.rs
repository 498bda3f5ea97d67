//! The `.qwc` circuit language.
//!
//! ```text
//! # three steps of the gray-box walk
//! source R 0
//! repeat 3 { qwp 0 hwp 22.5 qp 0.5 spinflip }
//! measure -3..3
//! ```
//!
//! Grammar:
//!
//! ```text
//! program := source stmt* measure?
//! source  := "source" ( spin int | "super" "(" complex "," complex ")" int )
//! spin    := "R" | "L"
//! stmt    := element | "repeat" int "{" stmt* "}"
//! element := "qwp" angle_deg | "hwp" angle_deg | "qp" charge | "spinflip"
//!          | "holo" int | "hadamard"
//! measure := "measure" int ".." int
//! complex := "(" real "," real ")"
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Angles are in
//! degrees. Repeat counts are at least 1 and repeats nest at most
//! [`MAX_REPEAT_DEPTH`] deep.

mod eval;
mod format;
mod parser;

use num_complex::Complex64;

use crate::elements::{Hologram, OpticalElement, QPlate};
use crate::error::Result;
use crate::polarization::{hadamard_rl, PlateKind, WavePlate};
use crate::state::Spin;

pub use eval::{evaluate, Evaluation};
pub use format::serialize;
pub use parser::{parse, ParseError};

pub const MAX_REPEAT_DEPTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    Basis { spin: Spin, m: i64 },
    /// Raw `(a_R, a_L)` coefficients at OAM `m`; normalized on evaluation.
    Superposition { r: Complex64, l: Complex64, m: i64 },
}

/// A circuit element as written. Wave-plate angles stay in degrees so that
/// serialization reproduces the source text exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element {
    Qwp { degrees: f64 },
    Hwp { degrees: f64 },
    QPlate(QPlate),
    SpinFlip,
    Hologram(i64),
    Hadamard,
}

impl Element {
    pub fn to_optical(&self) -> Result<OpticalElement> {
        Ok(match *self {
            Element::Qwp { degrees } => {
                OpticalElement::WavePlate(WavePlate::from_degrees(PlateKind::Quarter, degrees)?)
            }
            Element::Hwp { degrees } => {
                OpticalElement::WavePlate(WavePlate::from_degrees(PlateKind::Half, degrees)?)
            }
            Element::QPlate(q) => OpticalElement::QPlate(q),
            Element::SpinFlip => OpticalElement::SpinFlip,
            Element::Hologram(delta_m) => OpticalElement::Hologram(Hologram { delta_m }),
            Element::Hadamard => OpticalElement::AbstractCoin(hadamard_rl()),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Element(Element),
    Repeat { count: u32, body: Vec<Stmt> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureWindow {
    pub m_min: i64,
    pub m_max: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub source: Source,
    pub body: Vec<Stmt>,
    pub measure: Option<MeasureWindow>,
}

impl Circuit {
    /// The element sequence with every repeat block unrolled.
    pub fn flatten(&self) -> Vec<Element> {
        fn walk(stmts: &[Stmt], out: &mut Vec<Element>) {
            for stmt in stmts {
                match stmt {
                    Stmt::Element(e) => out.push(*e),
                    Stmt::Repeat { count, body } => {
                        for _ in 0..*count {
                            walk(body, out);
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.body, &mut out);
        out
    }

    /// Number of elements after unrolling, without materializing them.
    pub fn flattened_len(&self) -> u128 {
        fn count(stmts: &[Stmt]) -> u128 {
            stmts
                .iter()
                .map(|s| match s {
                    Stmt::Element(_) => 1,
                    Stmt::Repeat { count: n, body } => u128::from(*n) * count(body),
                })
                .sum()
        }
        count(&self.body)
    }
}
