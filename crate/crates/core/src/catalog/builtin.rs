use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{ClosedForm, IndexSpec, ReferenceEntry};
use crate::laurent::parse_laurent;
use crate::polygon::polygon;

struct Raw {
    id: u8,
    vertices: &'static [(i64, i64)],
    mmlp: &'static str,
    printed: &'static [i64],
    decay: u32,
    indices: &'static [IndexSpec<'static>],
    power: &'static str,
    numerator: &'static [&'static str],
    denominator: &'static [&'static str],
}

const fn free(name: &'static str) -> IndexSpec<'static> {
    IndexSpec { name, lower: &[], upper: None }
}

const D: &[IndexSpec<'static>] = &[free("d")];
const LM: &[IndexSpec<'static>] = &[free("l"), free("m")];

// Laurent polynomials are the unique maximally mutable ones on each polygon;
// printed sequences run up to the last printed order.
const RAW: [Raw; 10] = [
    Raw {
        id: 1,
        vertices: &[(-3, -1), (3, -1), (3, 2), (-3, 2)],
        mmlp: "x^-3*y^-1 + 3*x^-3 + 3*x^-3*y + x^-3*y^2 + 6*x^-2*y^-1 + 18*x^-2 + 18*x^-2*y + 6*x^-2*y^2 \
               + 15*x^-1*y^-1 + 45*x^-1 + 45*x^-1*y + 15*x^-1*y^2 + 20*y^-1 + 60*y + 20*y^2 + 15*x*y^-1 + 45*x \
               + 45*x*y + 15*x*y^2 + 6*x^2*y^-1 + 18*x^2 + 18*x^2*y + 6*x^2*y^2 + x^3*y^-1 + 3*x^3 + 3*x^3*y + x^3*y^2",
        printed: &[1, 0, 10260, 2021280, 618874020, 184450426560],
        decay: 60,
        indices: D,
        power: "d",
        numerator: &["6d"],
        denominator: &["d", "2d", "3d"],
    },
    Raw {
        id: 2,
        vertices: &[(-2, -1), (2, -1), (2, 1), (-2, 1)],
        mmlp: "x^-2*y^-1 + 2*x^-2 + x^-2*y + 4*x^-1*y^-1 + 8*x^-1 + 4*x^-1*y + 6*y^-1 + 6*y + 4*x*y^-1 + 8*x \
               + 4*x*y + x^2*y^-1 + 2*x^2 + x^2*y",
        printed: &[1, 0, 276, 6816, 314532, 12853440, 569409360],
        decay: 12,
        indices: D,
        power: "d",
        numerator: &["4d"],
        denominator: &["d", "d", "2d"],
    },
    Raw {
        id: 3,
        vertices: &[(-1, -1), (2, -1), (-1, 2)],
        mmlp: "x^-1*y^-1 + 3*x^-1 + 3*x^-1*y + x^-1*y^2 + 3*y^-1 + 3*y + 3*x*y^-1 + 3*x + x^2*y^-1",
        printed: &[1, 0, 54, 492, 9882, 158760, 2879640],
        decay: 6,
        indices: D,
        power: "d",
        numerator: &["3d"],
        denominator: &["d", "d", "d"],
    },
    Raw {
        id: 4,
        vertices: &[(-1, -1), (1, -1), (1, 1), (-1, 1)],
        mmlp: "x^-1*y^-1 + 2*x^-1 + x^-1*y + 2*y^-1 + 2*y + x*y^-1 + 2*x + x*y",
        printed: &[1, 0, 20, 96, 1188, 10560, 111440],
        decay: 4,
        indices: D,
        power: "d",
        numerator: &["2d", "2d"],
        denominator: &["d", "d", "d", "d"],
    },
    Raw {
        id: 5,
        vertices: &[(-1, -1), (1, -1), (1, 0), (0, 1), (-1, 1)],
        mmlp: "x^-1*y^-1 + 2*x^-1 + x^-1*y + 2*y^-1 + y + x*y^-1 + x",
        printed: &[1, 0, 10, 30, 270, 1560, 11350],
        decay: 3,
        indices: LM,
        power: "l+m",
        numerator: &["l+2m", "l+m"],
        denominator: &["l", "l", "m", "m", "m"],
    },
    Raw {
        id: 6,
        vertices: &[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
        mmlp: "x^-1*y^-1 + x^-1 + y^-1 + y + x + x*y",
        printed: &[1, 0, 6, 12, 90, 360],
        decay: 0,
        indices: &[free("a"), free("b"), free("c"), IndexSpec { name: "d", lower: &["a-c"], upper: Some("a+b") }],
        power: "a+2b+2c+d",
        numerator: &["a+2b+2c+d"],
        denominator: &["a", "b", "c", "d", "a+b-d", "c+d-a"],
    },
    Raw {
        id: 7,
        vertices: &[(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)],
        mmlp: "x^-1 + y^-1 + y + x + x*y",
        printed: &[1, 0, 4, 6, 36, 120],
        decay: 0,
        indices: &[free("l"), free("m"), IndexSpec { name: "n", lower: &["l", "m"], upper: Some("l+m") }],
        power: "l+m+n",
        numerator: &["l+m+n"],
        denominator: &["l", "m", "l+m-n", "n-l", "n-m"],
    },
    Raw {
        id: 8,
        vertices: &[(1, 0), (0, 1), (-1, -1), (0, -1)],
        mmlp: "x^-1*y^-1 + y^-1 + y + x",
        printed: &[1, 0, 2, 6, 6, 60, 110],
        decay: 0,
        indices: &[free("l"), IndexSpec { name: "m", lower: &["l"], upper: None }],
        power: "l+2m",
        numerator: &["l+2m"],
        denominator: &["l", "l", "m-l", "m"],
    },
    Raw {
        id: 9,
        vertices: &[(1, 0), (0, 1), (-1, 0), (0, -1)],
        mmlp: "x^-1 + y^-1 + y + x",
        printed: &[1, 0, 4, 0, 36, 0, 400],
        decay: 0,
        indices: LM,
        power: "2l+2m",
        numerator: &["2l+2m"],
        denominator: &["l", "l", "m", "m"],
    },
    Raw {
        id: 10,
        vertices: &[(1, 0), (0, 1), (-1, -1)],
        mmlp: "x^-1*y^-1 + y + x",
        printed: &[1, 0, 0, 1, 0, 0, 6, 0, 0, 90],
        decay: 0,
        indices: D,
        power: "3d",
        numerator: &["3d"],
        denominator: &["d", "d", "d"],
    },
];

pub(super) fn entries() -> Vec<ReferenceEntry> {
    RAW.iter()
        .map(|r| {
            let polygon = polygon(r.vertices).expect("catalog polygon");
            let mmlp = parse_laurent(r.mmlp).expect("catalog polynomial");
            let printed = r.printed.iter().map(|&c| BigInt::from(c)).collect();
            let closed_form = ClosedForm::parse(r.decay, r.indices, r.power, r.numerator, r.denominator)
                .expect("catalog closed form");
            ReferenceEntry::new(r.id, polygon, mmlp, printed, closed_form).expect("catalog entry")
        })
        .collect()
}
