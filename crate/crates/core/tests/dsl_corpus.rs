mod common;

use common::corpus::{INVALID, VALID};
use qwalk::dsl::{evaluate, parse, serialize, Circuit};

#[test]
fn round_trip_corpus() {
    assert!(VALID.len() >= 20);
    for &text in VALID {
        let first = parse(text).unwrap_or_else(|e| panic!("{text:?}: {e}"));
        let text2 = serialize(&first);
        let second = parse(&text2).unwrap_or_else(|e| panic!("{text2:?}: {e}"));
        assert_eq!(first, second, "{text:?}");
        // canonical text is a fixed point
        assert_eq!(serialize(&second), text2);
    }
}

#[test]
fn negative_corpus_has_positioned_errors() {
    assert!(INVALID.len() >= 10);
    for &(text, line, column, token) in INVALID {
        let err = parse(text).expect_err(text);
        assert_eq!((err.line, err.column, err.token.as_str()), (line, column, token), "{text:?}: {err}");
        // the position lands on the reported token in the source
        let src_line = text.lines().nth(line - 1).unwrap();
        let at: String = src_line.chars().skip(column - 1).collect();
        assert!(at.starts_with(token), "{text:?}: {at:?} vs {token:?}");
    }
}

#[test]
fn repeat_equals_literal_copies() {
    let bodies = [
        "qwp 0 hwp 22.5 qp 0.5 spinflip",
        "hadamard qp 0.5 spinflip",
        "hadamard holo 2 qp 1.5 hwp 10",
    ];
    for body in bodies {
        for k in 1..=6usize {
            let repeated: Circuit =
                parse(&format!("source super((1,0),(0,1)) 0 repeat {k} {{ {body} }} measure -30..30")).unwrap();
            let literal: Circuit =
                parse(&format!("source super((1,0),(0,1)) 0 {} measure -30..30", format!("{body} ").repeat(k))).unwrap();
            assert_eq!(repeated.flatten(), literal.flatten());
            assert_eq!(evaluate(&repeated).unwrap(), evaluate(&literal).unwrap());
        }
    }
}

#[test]
fn flattened_length_counts_nested_repeats() {
    let c = parse("source R 0 repeat 3 { hadamard repeat 4 { holo 1 spinflip } } qp 0.5").unwrap();
    assert_eq!(c.flattened_len(), 3 * (1 + 4 * 2) + 1);
    assert_eq!(c.flatten().len() as u128, c.flattened_len());
}
