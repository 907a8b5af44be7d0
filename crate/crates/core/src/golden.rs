//! Reference codes with known generators, checked end to end.

use serde::{Deserialize, Serialize};

use crate::codes::build_code;
use crate::distance::{find_low_weight, optimality_bound, BoundVerdict};
use crate::error::Result;
use crate::field::FieldCtx;
use crate::polyf3::TritPoly;

#[derive(Clone, Debug)]
pub struct ReferenceCode {
    pub label: &'static str,
    pub modulus: &'static str,
    pub zeros: &'static [u64],
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub generator: &'static str,
}

pub const REFERENCE_CODES: [ReferenceCode; 5] = [
    ReferenceCode {
        label: "C(0,1,50), m=4",
        modulus: "x^4+2x^3+2",
        zeros: &[0, 1, 50],
        n: 80,
        k: 73,
        d: 4,
        generator: "x^7+2x^6+x^5+x^3+2x+2",
    },
    ReferenceCode {
        label: "C(1,336,364), m=6",
        modulus: "x^6+2x^4+x^2+2x+2",
        zeros: &[1, 336, 364],
        n: 728,
        k: 718,
        d: 4,
        generator: "x^10+2x^9+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1",
    },
    ReferenceCode {
        label: "C(0,1,3362), m=8",
        modulus: "2,2,2,0,1,2,0,0,1",
        zeros: &[0, 1, 3362],
        n: 6560,
        k: 6547,
        d: 4,
        generator: "x^13+2x^11+2x^10+2x^8+x^7+x^5+2x^4+2x^3+2",
    },
    ReferenceCode {
        label: "C(1,82,3280), m=8",
        modulus: "2,2,2,0,1,2,0,0,1",
        zeros: &[1, 82, 3280],
        n: 6560,
        k: 6547,
        d: 4,
        generator: "x^13+2x^11+2x^10+x^7+2x^3+2x^2+2x+1",
    },
    ReferenceCode {
        label: "C(2,29), m=6",
        modulus: "x^6+2x^4+x^2+2x+2",
        zeros: &[2, 29],
        n: 728,
        k: 716,
        d: 4,
        generator: "x^12+2x^11+x^10+2x^6+2x^3+2",
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub label: String,
    pub modulus: TritPoly,
    pub zeros: Vec<u64>,
    /// `[n, k, d]` as computed; `d` is 4 only when no word of weight at
    /// most 3 exists and `d = 5` is excluded by the bound.
    pub parameters: String,
    pub expected_parameters: String,
    pub generator: String,
    pub expected_generator: String,
    pub pass: bool,
}

/// Rebuilds one reference code and compares it with the expected strings.
pub fn check_reference(r: &ReferenceCode, cap: u32) -> Result<ReferenceRow> {
    let modulus: TritPoly = r.modulus.parse()?;
    let ctx = FieldCtx::new(&modulus)?;
    let code = build_code(&ctx, r.zeros)?;
    let light = find_low_weight(&code, 3, cap)?;
    let bound = optimality_bound(code.n(), 5, code.k());
    let d = match &light {
        Some(w) => w.weight.to_string(),
        None if bound.verdict == BoundVerdict::Excluded => "4".to_string(),
        None => ">=4".to_string(),
    };
    let parameters = format!("[{},{},{}]", code.n(), code.k(), d);
    let expected_parameters = format!("[{},{},{}]", r.n, r.k, r.d);
    let generator = code.generator().to_string();
    let pass = parameters == expected_parameters && generator == r.generator;
    Ok(ReferenceRow {
        label: r.label.to_string(),
        modulus,
        zeros: r.zeros.to_vec(),
        parameters,
        expected_parameters,
        generator,
        expected_generator: r.generator.to_string(),
        pass,
    })
}
