//! Machine-readable export for `--emit=data`.
//!
//! Words are lists of 1-based generator indices, coefficients are strings in
//! the canonical scalar syntax, polynomials are lists of `[word, coeff]`
//! pairs in descending deglex order. Object keys come out sorted.

use fpalg_core::{FieldAutomorphism, NCPoly, Presentation, Word};
use serde_json::{json, Value};

pub fn word(w: &Word) -> Value {
    Value::Array(w.letters().iter().map(|&l| json!(l + 1)).collect())
}

pub fn poly(f: &NCPoly) -> Value {
    Value::Array(
        f.terms()
            .iter()
            .map(|(w, c)| json!([word(w), c.to_string()]))
            .collect(),
    )
}

pub fn presentation(p: &Presentation) -> Value {
    json!({
        "name": p.name(),
        "field": p.field().k,
        "generators": p.generators(),
        "relations": p.relations().iter().map(poly).collect::<Vec<_>>(),
    })
}

/// Images of `t1, ..., tk` under the map and under its inverse.
pub fn automorphism(s: &FieldAutomorphism) -> Value {
    let images = |v: &[fpalg_core::scalars::AffineImage]| -> Vec<String> {
        v.iter().map(|a| a.to_string()).collect()
    };
    json!({
        "forward": images(s.forward()),
        "backward": images(s.backward()),
    })
}
