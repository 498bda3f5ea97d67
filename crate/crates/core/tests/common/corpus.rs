//! DSL corpora shared by the parser tests and the acceptance suite.

#![allow(dead_code)]

pub const VALID: &[&str] = &[
    "source R 0",
    "source L -5",
    "source R 0\nrepeat 3 { qwp 0 hwp 22.5 qp 0.5 spinflip }\nmeasure -3..3",
    "source R 0 hadamard",
    "source R 0 repeat 10 { hadamard qp 0.5 spinflip } measure -10..10",
    "source super((1,0),(0,1)) 0 repeat 4 { hadamard qp 0.5 spinflip }",
    "source super((0.6,0),(0,-0.8)) 3 qwp 45 hwp -22.5 qwp 90",
    "source L 2 qp 1 qp 1.5 qp 2 qp 0.5",
    "source R 0 holo 3 holo -3 holo 0",
    "source R 0 spinflip spinflip",
    "# comment only line\nsource R 0 # trailing\nhadamard # coin\n",
    "source R 0\r\nhadamard\r\nmeasure 0..0\r\n",
    "source R 0 repeat 2 { repeat 3 { hadamard } holo 1 }",
    "source R 0 repeat 1 { repeat 1 { repeat 1 { repeat 1 { repeat 1 { repeat 1 { repeat 1 { repeat 1 { hadamard } } } } } } } }",
    "source R 0 qwp 0.1 hwp 0.30000000000000004 qwp 1e-3 hwp 2.5E2",
    "source R 0 qwp -0 hwp 359.999",
    "source L 0 repeat 5 { } measure -1..1",
    "source super((1e-3,2),(3,-4.5)) -17 hadamard",
    "source R 1000000 holo -1000000 measure -2..2",
    "source R 0 repeat 2 { qwp 0 hwp 22.5 qp 0.5 spinflip } repeat 1 { hadamard } measure -4..4",
    "source L -1 hadamard qp 0.5 hwp 0 measure -100..100",
    "   source    R\n\n\t0   hadamard",
];

/// Malformed programs with the expected (line, column, token) of the error.
pub const INVALID: &[(&str, usize, usize, &str)] = &[
    ("source R 0\nqp 0.3", 2, 4, "0.3"),
    ("source R 0\nqp 0", 2, 4, "0"),
    ("source R 0\n  mirror 2", 2, 3, "mirror"),
    ("source X 0", 1, 8, "X"),
    ("hadamard", 1, 1, "hadamard"),
    ("source R 0\nhwp 2.x", 2, 5, "2.x"),
    ("source R 0\nholo 1.5", 2, 6, "1.5"),
    ("source R 0\nrepeat 2 {\n  hadamard\n", 2, 10, "{"),
    ("source R 0\nhadamard\n}", 3, 1, "}"),
    ("source R 0\nrepeat 0 { hadamard }", 2, 8, "0"),
    ("source R 0\nmeasure 3..-3", 2, 12, "-3"),
    ("source R 0\nmeasure -3..3 hadamard", 2, 15, "hadamard"),
    ("source R 0 qwp ( 1", 1, 16, "("),
    ("source R 0\nholo 5 @", 2, 8, "@"),
    ("source super((0,0),(0,0)) 0", 1, 8, "super"),
    ("source R 99999999999999999999", 1, 10, "99999999999999999999"),
    ("source R 0 hwp 1e999", 1, 16, "1e999"),
    ("source R 0 repeat 3 hadamard", 1, 21, "hadamard"),
    ("source R 0 measure -1.2", 1, 20, "-1.2"),
];
