//! Matrix files.
//!
//! A matrix is a JSON object
//! `{"diag": [d1, d2, d3], "o12": [8], "o13": [8], "o23": [8]}` with
//! octonion coefficients in the basis order `(1, i, j, k, kℓ, jℓ, iℓ, ℓ)`.
//! A full matrix may be given instead as `{"entries": [[o11, o12, o13], ...]}`
//! with every entry an 8-array; it is accepted only if Hermitian.
//! Numbers are written in shortest round-trip form, so
//! parse ∘ serialize is bit-exact.

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::jordan::{HermitianMatrix3, OctonionMatrix3};
use crate::octonion::Octonion;

/// Absolute tolerance for the `entries` form.
pub const INPUT_HERMITICITY_TOL: f64 = 1e-12;

#[derive(Serialize)]
struct CompactForm<'a> {
    diag: &'a [f64; 3],
    o12: &'a [f64; 8],
    o13: &'a [f64; 8],
    o23: &'a [f64; 8],
}

fn numbers(v: &Value, field: &str, len: usize) -> Result<Vec<f64>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Malformed(format!("`{field}` must be an array")))?;
    if arr.len() != len {
        return Err(Error::Malformed(format!(
            "`{field}` has {} entries, expected {len}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            let f = x
                .as_f64()
                .ok_or_else(|| Error::Malformed(format!("`{field}[{i}]` is not a number")))?;
            if f.is_finite() {
                Ok(f)
            } else {
                Err(Error::Malformed(format!("`{field}[{i}]` is not finite")))
            }
        })
        .collect()
}

fn octonion(v: &Value, field: &str) -> Result<Octonion<f64>> {
    let c = numbers(v, field, 8)?;
    Ok(Octonion::new(c.try_into().expect("length checked")))
}

fn field<'a>(obj: &'a serde_json::Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::Malformed(format!("missing field `{name}`")))
}

fn from_entries(v: &Value) -> Result<HermitianMatrix3<f64>> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 3)
        .ok_or_else(|| Error::Malformed("`entries` must be a 3x3 array".into()))?;
    let mut e = [[Octonion::zero(); 3]; 3];
    for (r, row) in rows.iter().enumerate() {
        let cols = row
            .as_array()
            .filter(|c| c.len() == 3)
            .ok_or_else(|| Error::Malformed(format!("`entries[{r}]` must have 3 entries")))?;
        for (c, x) in cols.iter().enumerate() {
            e[r][c] = octonion(x, &format!("entries[{r}][{c}]"))?;
        }
    }
    OctonionMatrix3::new(e).to_hermitian(INPUT_HERMITICITY_TOL)
}

/// Parses either input form. Structural problems are
/// [`Error::Malformed`]; a full matrix that is not Hermitian is
/// [`Error::NotHermitian`].
pub fn parse_matrix(json: &str) -> Result<HermitianMatrix3<f64>> {
    let v: Value = serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("expected a JSON object".into()))?;
    if let Some(entries) = obj.get("entries") {
        return from_entries(entries);
    }
    let d = numbers(field(obj, "diag")?, "diag", 3)?;
    Ok(HermitianMatrix3::new(
        [d[0], d[1], d[2]],
        octonion(field(obj, "o12")?, "o12")?,
        octonion(field(obj, "o13")?, "o13")?,
        octonion(field(obj, "o23")?, "o23")?,
    ))
}

/// Compact form on one line.
pub fn serialize_matrix(m: &HermitianMatrix3<f64>) -> String {
    serde_json::to_string(&CompactForm {
        diag: &m.diag,
        o12: &m.o12.coeffs,
        o13: &m.o13.coeffs,
        o23: &m.o23.coeffs,
    })
    .expect("finite numbers serialize")
}
