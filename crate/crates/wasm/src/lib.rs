//! Browser bindings. Every export takes plain strings and numbers and returns
//! a JSON string; failures come back as `{"error": "..."}`.

use lrcex::families::{counterexample_report, Family, ReportConfig};
use lrcex::lr::{
    enumerate_lr_fillings, fit_polynomial, lr_coefficient, stretched_values, PolynomialFit,
};
use lrcex::{Partition, SkewShape};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Enumeration cap for the page; larger shapes only report the count.
pub const MAX_ENUMERATED_BOXES: u64 = 40;
pub const MAX_FAMILY_N: u32 = 40;
pub const MAX_STRETCH: u32 = 12;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse(label: &str, text: &str) -> Result<Partition, String> {
    text.parse().map_err(|e| format!("{label}: {e}"))
}

/// `c^{outer}_{inner1,inner2}` with the LR fillings of `outer/inner1` when
/// the shape is small enough.
#[wasm_bindgen]
pub fn lr_fillings(outer: &str, inner1: &str, inner2: &str) -> String {
    respond((|| {
        let (l, m, n) = (
            parse("outer", outer)?,
            parse("inner1", inner1)?,
            parse("inner2", inner2)?,
        );
        let value = lr_coefficient(&l, &m, &n);
        let shape = SkewShape::new(l, m).map_err(|e| e.to_string())?;
        let boxes = shape.boxes();
        let fillings: Option<Vec<String>> = (boxes <= MAX_ENUMERATED_BOXES).then(|| {
            if boxes == n.size() {
                enumerate_lr_fillings(&shape, &n)
                    .iter()
                    .map(|f| f.to_string())
                    .collect()
            } else {
                Vec::new()
            }
        });
        Ok(json!({ "value": value.to_string(), "boxes": boxes, "fillings": fillings }))
    })())
}

/// Records `f(0) f(2)` against `f(1)^2` for `n = lo..=hi`.
#[wasm_bindgen]
pub fn counterexample_curve(family: &str, lo: u32, hi: u32) -> String {
    respond((|| {
        let family: Family = family.parse()?;
        if hi > MAX_FAMILY_N {
            return Err(format!("n is capped at {MAX_FAMILY_N} in the browser"));
        }
        let records = counterexample_report(family, lo, hi, &ReportConfig::minimal())
            .map_err(|e| e.to_string())?;
        let rows: Vec<Value> = records
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                    "holds": r.holds,
                    "checks_pass": r.checks_pass(),
                })
            })
            .collect();
        Ok(json!({ "family": family.name(), "records": rows }))
    })())
}

/// `N ↦ c^{Nλ}_{Nμ,Nν}` for `N = 0..=n_max` and the fitted polynomial.
#[wasm_bindgen]
pub fn stretch_table(lambda: &str, mu: &str, nu: &str, n_max: u32) -> String {
    respond((|| {
        let (l, m, n) = (parse("lambda", lambda)?, parse("mu", mu)?, parse("nu", nu)?);
        if n_max > MAX_STRETCH {
            return Err(format!("N is capped at {MAX_STRETCH} in the browser"));
        }
        let table = stretched_values(&l, &m, &n, n_max);
        let values: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
        let fit = fit_polynomial(&table.values).map_err(|e| e.to_string())?;
        let (degree, polynomial) = match &fit {
            PolynomialFit::Confirmed(p) => (json!(p.degree()), json!(p.to_string())),
            PolynomialFit::NotConfirmed { .. } => (Value::Null, Value::Null),
        };
        Ok(json!({ "values": values, "degree": degree, "polynomial": polynomial }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn fillings_of_the_small_example() {
        let v = parsed(lr_fillings("4,2,1", "3,1", "2,1"));
        assert_eq!(v["value"], "2");
        assert_eq!(v["fillings"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn large_shapes_skip_enumeration() {
        let v = parsed(lr_fillings("4^8,3^16,2^8", "3^8,2^8,1^8", "3^8,2^8,1^8"));
        assert_eq!(v["value"], "45");
        assert_eq!(v["fillings"], Value::Null);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(parsed(lr_fillings("1,2", "", "")).get("error").is_some());
        assert!(parsed(counterexample_curve("nope", 1, 2))
            .get("error")
            .is_some());
        assert!(parsed(counterexample_curve("okounkov", 3, 2))
            .get("error")
            .is_some());
    }

    #[test]
    fn curve_crosses_at_twenty_one() {
        let v = parsed(counterexample_curve("kostka", 20, 21));
        let recs = v["records"].as_array().unwrap();
        assert_eq!(recs[0]["holds"], true);
        assert_eq!(recs[1]["holds"], false);
        assert_eq!(recs[1]["lhs"], "65780");
    }

    #[test]
    fn stretch_fit() {
        let v = parsed(stretch_table("4,3,3,2", "3,2,1", "3,2,1", 5));
        assert_eq!(v["degree"], 2);
        assert_eq!(v["values"][5], "21");
        assert_eq!(v["polynomial"], "(1/2)*N^2 + (3/2)*N + 1");
    }
}
