//! JSON serialization for matrix tuples and rational matrices.
//!
//! The document shape is `{"n": 2, "matrices": [[["p/q", ...], ...], ...]}`:
//! one square matrix per variable, entries as rational strings so exactness
//! survives the round trip.

use serde::{Deserialize, Serialize};

use crate::eigenlevel::MatrixTuple;
use crate::exactla::RatMatrix;
use crate::rat::{fmt_rat, parse_rat};

#[derive(Serialize, Deserialize)]
struct TupleDoc {
    n: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

/// Size guard: tuples bigger than this are rejected before any allocation
/// proportional to the claimed size happens.
const MAX_N: usize = 64;
const MAX_D: usize = 64;

/// Renders a matrix as rows of `p/q` strings.
pub fn matrix_to_rows(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(fmt_rat).collect())
        .collect()
}

/// Serializes a tuple to the document format.
pub fn tuple_to_json(x: &MatrixTuple) -> String {
    let doc = TupleDoc {
        n: x.n(),
        matrices: x.mats().iter().map(matrix_to_rows).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain strings always serialize")
}

/// Parses the document format, validating shape and every entry.
pub fn tuple_from_json(text: &str) -> Result<MatrixTuple, String> {
    let doc: TupleDoc =
        serde_json::from_str(text).map_err(|e| format!("malformed tuple document: {e}"))?;
    if doc.n == 0 || doc.n > MAX_N {
        return Err(format!("matrix size n = {} outside 1..={}", doc.n, MAX_N));
    }
    if doc.matrices.is_empty() || doc.matrices.len() > MAX_D {
        return Err(format!(
            "tuple must hold between 1 and {} matrices, got {}",
            MAX_D,
            doc.matrices.len()
        ));
    }
    let mut mats = Vec::with_capacity(doc.matrices.len());
    for (k, rows) in doc.matrices.iter().enumerate() {
        if rows.len() != doc.n {
            return Err(format!(
                "matrix {} has {} rows, expected {}",
                k + 1,
                rows.len(),
                doc.n
            ));
        }
        let mut parsed = Vec::with_capacity(doc.n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != doc.n {
                return Err(format!(
                    "matrix {} row {} has {} entries, expected {}",
                    k + 1,
                    i + 1,
                    row.len(),
                    doc.n
                ));
            }
            let mut out = Vec::with_capacity(doc.n);
            for (j, s) in row.iter().enumerate() {
                out.push(parse_rat(s).map_err(|e| {
                    format!("matrix {} entry ({},{}): {}", k + 1, i + 1, j + 1, e)
                })?);
            }
            parsed.push(out);
        }
        mats.push(RatMatrix::from_rows(parsed));
    }
    Ok(MatrixTuple::new(mats))
}
