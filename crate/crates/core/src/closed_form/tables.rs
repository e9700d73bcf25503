//! Printed piecewise code tables for the three polytope families.
//!
//! Each table gives, per layer and per range of ring positions `l`, the four
//! code entries as affine expressions in `l` and `g` (where `n = 2g` or
//! `n = 2g + 1`). Rows are transcribed as printed, anomalies included; the
//! row number inside its layer is what reports cite. Layers whose codes are
//! stated as "another layer plus (1,1,1,1)" are stored as shifts.

use std::fmt;

use crate::families::Family;

use super::Parity;

/// `l * l_coef + g * g_coef + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub l: i64,
    pub g: i64,
    pub c: i64,
}

impl Affine {
    pub fn eval(&self, l: i64, g: i64) -> i64 {
        self.l * l + self.g * g + self.c
    }
}

const fn e(l: i64, g: i64, c: i64) -> Affine {
    Affine { l, g, c }
}

/// A range bound depending on `g` only.
const fn b(g: i64, c: i64) -> Affine {
    Affine { l: 0, g, c }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = [(self.l, "l"), (self.g, "g")];
        // Lead with a positive variable term when there is one.
        terms.sort_by_key(|&(k, _)| k <= 0);
        let mut first = true;
        for (k, name) in terms {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = k.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "{}", self.c)
        } else if self.c > 0 {
            write!(f, "+{}", self.c)
        } else if self.c < 0 {
            write!(f, "{}", self.c)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedRow {
    pub lo: Affine,
    pub hi: Affine,
    pub entries: [Affine; 4],
}

impl PrintedRow {
    pub fn applies(&self, l: i64, g: i64) -> bool {
        self.lo.eval(l, g) <= l && l <= self.hi.eval(l, g)
    }

    /// The printed range condition, e.g. `2<=l<=g+1` or `l=g+2`.
    pub fn condition(&self) -> String {
        if self.lo == self.hi {
            format!("l={}", self.lo)
        } else {
            format!("{}<=l<={}", self.lo, self.hi)
        }
    }

    pub fn eval(&self, l: i64, g: i64) -> [i64; 4] {
        self.entries.map(|a| a.eval(l, g))
    }
}

const fn row(lo: Affine, hi: Affine, entries: [Affine; 4]) -> PrintedRow {
    PrintedRow { lo, hi, entries }
}

const fn at(pos: Affine, entries: [Affine; 4]) -> PrintedRow {
    PrintedRow {
        lo: pos,
        hi: pos,
        entries,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerSource {
    Printed(&'static [PrintedRow]),
    /// Codes equal those of layer `base` plus `offset`.
    Shifted {
        base: usize,
        offset: [i64; 4],
    },
}

const PLUS_ONE: [i64; 4] = [1, 1, 1, 1];

// Double antiprism, n = 2g, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+2}_1.
const A_EVEN_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, -1)]),
    row(
        b(0, 2),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 1), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 2)],
    ),
    row(
        b(1, 3),
        b(2, 0),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, -1), e(1, -1, -2)],
    ),
];
const A_EVEN_2: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 0), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 0), e(1, 0, -1), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 1),
        [e(-1, 2, 1), e(1, 0, -1), e(1, -1, 0), e(-1, 1, 2)],
    ),
    row(
        b(1, 2),
        b(2, 0),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, 0), e(1, -1, -1)],
    ),
];
const A_EVEN_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 1), e(-1, 1, 2)]),
    row(
        b(0, 2),
        b(1, -1),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(b(1, 0), [e(1, 0, 1), e(1, 0, 0), e(0, 0, 2), e(-1, 1, 2)]),
    at(b(1, 1), [e(-1, 2, 1), e(1, 0, 2), e(1, -1, 1), e(0, 0, 2)]),
    row(
        b(1, 2),
        b(2, -1),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, 1), e(1, -1, 0)],
    ),
    at(b(2, 0), [e(0, 0, 2), e(-1, 2, 2), e(1, -1, 1), e(1, -1, 0)]),
];

// Double antiprism, n = 2g + 1, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+3}_1.
const A_ODD_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, -1)]),
    at(b(0, 2), [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 3),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 3)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 2), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 3)],
    ),
    at(
        b(1, 3),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, -1), e(-1, 1, 3)],
    ),
    row(
        b(1, 4),
        b(2, 1),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, -1), e(1, -1, -3)],
    ),
];
const A_ODD_2: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 0), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 0), e(1, 0, -1), e(-1, 1, 1), e(-1, 1, 3)],
    ),
    at(
        b(1, 1),
        [e(-1, 2, 2), e(1, 0, -1), e(1, -1, 0), e(-1, 1, 3)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 0), e(-1, 1, 3)],
    ),
    row(
        b(1, 3),
        b(2, 1),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 0), e(1, -1, -2)],
    ),
];
const A_ODD_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 1), e(0, 1, 1)]),
    row(
        b(0, 2),
        b(1, -1),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 1), e(-1, 1, 3)],
    ),
    at(b(1, 0), [e(1, 0, 1), e(1, 0, 0), e(0, 0, 2), e(-1, 1, 3)]),
    at(b(1, 1), [e(-1, 2, 2), e(1, 0, 0), e(1, -1, 1), e(-1, 1, 3)]),
    at(b(1, 1), [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 1), e(0, 0, 2)]),
    row(
        b(1, 2),
        b(2, 0),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 1), e(1, -1, -1)],
    ),
    at(b(2, 1), [e(0, 0, 2), e(-1, 2, 3), e(0, 1, 1), e(1, -1, -1)]),
];

// S_n, n = 2g, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+2}_1.
const S_EVEN_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, -1)]),
    row(
        b(0, 2),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 1), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 2)],
    ),
    row(
        b(1, 3),
        b(2, 0),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, -1), e(1, -1, -2)],
    ),
];
const S_EVEN_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 2), e(0, 1, 1)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 2), e(-1, 1, 3)],
    ),
    at(b(1, 1), [e(-1, 2, 2), e(1, 0, 0), e(1, -1, 1), e(-1, 1, 3)]),
    row(
        b(1, 2),
        b(2, 0),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 1), e(1, -1, 0)],
    ),
];

// S_n, n = 2g + 1, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+2}_1.
const S_ODD_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 2), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 2)],
    ),
    row(
        b(1, 3),
        b(2, 1),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, -1), e(1, -1, -2)],
    ),
];
const S_ODD_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 2), e(-1, 1, 3)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 2), e(-1, 1, 3)],
    ),
    at(b(1, 1), [e(-1, 2, 3), e(1, 0, 0), e(1, -1, 1), e(-1, 1, 3)]),
    row(
        b(1, 2),
        b(2, 1),
        [e(-1, 2, 3), e(-1, 2, 4), e(1, -1, 1), e(1, -1, 0)],
    ),
];

// T_n, n = 2g, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+2}_1.
const T_EVEN_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, -1)]),
    row(
        b(0, 2),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 1), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 2)],
    ),
    row(
        b(1, 3),
        b(2, 0),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, -1), e(1, -1, -2)],
    ),
];
const T_EVEN_2: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 0), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 0), e(1, 0, -1), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 1),
        [e(-1, 2, 1), e(1, 0, -1), e(1, -1, 0), e(-1, 1, 2)],
    ),
    row(
        b(1, 2),
        b(2, 0),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, 0), e(1, -1, -1)],
    ),
];
const T_EVEN_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 1), e(-1, 1, 2)]),
    row(
        b(0, 2),
        b(1, -1),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(b(1, 0), [e(1, 0, 1), e(1, 0, 0), e(0, 0, 2), e(-1, 1, 2)]),
    at(b(1, 1), [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, 1), e(0, 0, 2)]),
    row(
        b(1, 2),
        b(2, -1),
        [e(-1, 2, 1), e(-1, 2, 2), e(1, -1, 1), e(1, -1, 0)],
    ),
    at(b(2, 0), [e(0, 0, 2), e(-1, 2, 2), e(1, -1, 1), e(1, -1, 0)]),
];

// T_n, n = 2g + 1, landmarks j^1_1, j^2_1, j^{g+1}_1, j^{g+3}_1 (as headed).
const T_ODD_1: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, -1), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 1),
        [e(1, 0, -1), e(1, 0, -2), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 2), e(1, 0, -2), e(1, -1, -1), e(-1, 1, 2)],
    ),
    row(
        b(1, 3),
        b(2, 1),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, -1), e(1, -1, -2)],
    ),
];
const T_ODD_2: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 0), e(0, 0, 1), e(-1, 1, 1), e(0, 1, 0)]),
    row(
        b(0, 2),
        b(1, 0),
        [e(1, 0, 0), e(1, 0, -1), e(-1, 1, 1), e(-1, 1, 3)],
    ),
    at(
        b(1, 1),
        [e(-1, 2, 2), e(1, 0, -1), e(1, -1, 0), e(-1, 1, 3)],
    ),
    at(
        b(1, 2),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 0), e(-1, 1, 3)],
    ),
    row(
        b(1, 3),
        b(2, 1),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 0), e(1, -1, -2)],
    ),
];
const T_ODD_3: &[PrintedRow] = &[
    at(b(0, 1), [e(1, 0, 1), e(0, 0, 2), e(-1, 1, 1), e(-1, 1, 2)]),
    row(
        b(0, 2),
        b(1, -1),
        [e(1, 0, 1), e(1, 0, 0), e(-1, 1, 1), e(-1, 1, 2)],
    ),
    at(b(1, 0), [e(1, 0, 1), e(1, 0, 0), e(0, 0, 2), e(-1, 1, 2)]),
    at(b(1, 1), [e(-1, 2, 2), e(1, 0, 0), e(1, -1, 1), e(0, 0, 2)]),
    row(
        b(1, 2),
        b(2, 0),
        [e(-1, 2, 2), e(-1, 2, 3), e(1, -1, 1), e(1, -1, 0)],
    ),
    at(b(2, 1), [e(0, 0, 2), e(-1, 2, 3), e(0, 1, 1), e(1, -1, 0)]),
];

/// Per-layer sources for a family and parity; index 0 is layer 1.
pub fn layer_sources(family: Family, parity: Parity) -> Option<Vec<LayerSource>> {
    use LayerSource::{Printed, Shifted};
    let shift = |base| Shifted {
        base,
        offset: PLUS_ONE,
    };
    Some(match (family, parity) {
        (Family::DoubleAntiprism, Parity::Even) => {
            vec![Printed(A_EVEN_1), Printed(A_EVEN_2), Printed(A_EVEN_3)]
        }
        (Family::DoubleAntiprism, Parity::Odd) => {
            vec![Printed(A_ODD_1), Printed(A_ODD_2), Printed(A_ODD_3)]
        }
        (Family::SPoly, Parity::Even) => {
            vec![Printed(S_EVEN_1), shift(1), Printed(S_EVEN_3), shift(3)]
        }
        (Family::SPoly, Parity::Odd) => {
            vec![Printed(S_ODD_1), shift(1), Printed(S_ODD_3), shift(3)]
        }
        (Family::TPoly, Parity::Even) => vec![
            Printed(T_EVEN_1),
            Printed(T_EVEN_2),
            Printed(T_EVEN_3),
            shift(3),
        ],
        (Family::TPoly, Parity::Odd) => vec![
            Printed(T_ODD_1),
            Printed(T_ODD_2),
            Printed(T_ODD_3),
            shift(3),
        ],
        _ => return None,
    })
}
