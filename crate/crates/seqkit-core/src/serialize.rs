//! JSON forms shared by the CLI and fixtures.
//!
//! Series: {"order": N, "coeffs": ["p/q", ...]}; Laurent series add
//! "valuation". Matrices: {"rows": R, "cols": C, "row_offset": r0,
//! "col_offset": c0, "entries": [["p/q", ...], ...]}. Coefficients are
//! exact "numerator/denominator" decimal strings.

use serde_json::{json, Value};

use crate::laurent::LaurentSeries;
use crate::rational::{format_rat, parse_rat, Rat};
use crate::riordan::IndexedMatrix;
use crate::series::PowerSeries;

pub fn series_to_json(s: &PowerSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(format_rat).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Option<PowerSeries> {
    let order = v.get("order")?.as_u64()? as usize;
    let coeffs = rat_list(v.get("coeffs")?)?;
    if coeffs.len() != order + 1 {
        return None;
    }
    Some(PowerSeries::new(coeffs))
}

pub fn laurent_to_json(s: &LaurentSeries) -> Value {
    json!({
        "order": s.order(),
        "valuation": s.valuation(),
        "coeffs": s.coeffs().iter().map(format_rat).collect::<Vec<_>>(),
    })
}

pub fn laurent_from_json(v: &Value) -> Option<LaurentSeries> {
    let valuation = v.get("valuation")?.as_i64()?;
    let coeffs = rat_list(v.get("coeffs")?)?;
    if coeffs.is_empty() {
        return None;
    }
    Some(LaurentSeries::new(valuation, coeffs))
}

pub fn matrix_to_json(m: &IndexedMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "row_offset": m.row_offset,
        "col_offset": m.col_offset,
        "entries": m
            .entries
            .iter()
            .map(|row| row.iter().map(format_rat).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json(v: &Value) -> Option<IndexedMatrix> {
    let rows = v.get("rows")?.as_u64()? as usize;
    let cols = v.get("cols")?.as_u64()? as usize;
    let row_offset = v.get("row_offset")?.as_i64()?;
    let col_offset = v.get("col_offset")?.as_i64()?;
    let entries: Vec<Vec<Rat>> = v
        .get("entries")?
        .as_array()?
        .iter()
        .map(rat_list)
        .collect::<Option<_>>()?;
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return None;
    }
    Some(IndexedMatrix {
        row_offset,
        col_offset,
        entries,
    })
}

fn rat_list(v: &Value) -> Option<Vec<Rat>> {
    v.as_array()?
        .iter()
        .map(|c| parse_rat(c.as_str()?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn series_round_trip() {
        let s = PowerSeries::new(vec![rat(1), ratio(-3, 7), rat(0)]);
        let v = series_to_json(&s);
        assert_eq!(series_from_json(&v).unwrap(), s);
        assert_eq!(v["coeffs"][1], "-3/7");
    }

    #[test]
    fn laurent_round_trip() {
        let s = LaurentSeries::new(-2, vec![rat(1), rat(0), ratio(5, 3)]);
        let v = laurent_to_json(&s);
        assert_eq!(v["valuation"], -2);
        assert_eq!(laurent_from_json(&v).unwrap(), s);
    }

    #[test]
    fn matrix_round_trip() {
        let m = IndexedMatrix {
            row_offset: -1,
            col_offset: 0,
            entries: vec![vec![rat(1), rat(2)], vec![ratio(1, 2), rat(0)]],
        };
        let v = matrix_to_json(&m);
        assert_eq!(matrix_from_json(&v).unwrap(), m);
    }
}
