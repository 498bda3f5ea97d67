//! Canonical text form of a [`Circuit`].

use std::fmt::Write as _;

use num_complex::Complex64;

use super::{Circuit, Element, Source, Stmt};
use crate::state::Spin;

// `Display` for f64 prints the shortest decimal that parses back to the same value.
fn complex(z: Complex64) -> String {
    format!("({},{})", z.re, z.im)
}

fn element(e: &Element) -> String {
    match e {
        Element::Qwp { degrees } => format!("qwp {degrees}"),
        Element::Hwp { degrees } => format!("hwp {degrees}"),
        Element::QPlate(q) => format!("qp {}", q.charge()),
        Element::SpinFlip => "spinflip".to_string(),
        Element::Hologram(dm) => format!("holo {dm}"),
        Element::Hadamard => "hadamard".to_string(),
    }
}

fn stmts(body: &[Stmt], indent: usize, out: &mut String) {
    for stmt in body {
        let pad = "  ".repeat(indent);
        match stmt {
            Stmt::Element(e) => writeln!(out, "{pad}{}", element(e)).unwrap(),
            Stmt::Repeat { count, body } => {
                writeln!(out, "{pad}repeat {count} {{").unwrap();
                stmts(body, indent + 1, out);
                writeln!(out, "{pad}}}").unwrap();
            }
        }
    }
}

/// One statement per line, repeat bodies indented by two spaces.
pub fn serialize(circuit: &Circuit) -> String {
    let mut out = String::new();
    match circuit.source {
        Source::Basis { spin, m } => {
            let s = match spin {
                Spin::R => "R",
                Spin::L => "L",
            };
            writeln!(out, "source {s} {m}").unwrap();
        }
        Source::Superposition { r, l, m } => {
            writeln!(out, "source super({},{}) {m}", complex(r), complex(l)).unwrap();
        }
    }
    stmts(&circuit.body, 0, &mut out);
    if let Some(w) = circuit.measure {
        writeln!(out, "measure {}..{}", w.m_min, w.m_max).unwrap();
    }
    out
}
