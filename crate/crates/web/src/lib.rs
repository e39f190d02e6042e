//! Browser bindings: a handful of library calls exposed to a static page.

use wasm_bindgen::prelude::*;

use slocc_cy::arith::DEFAULT_PRIMES;
use slocc_cy::geometry::{enumerate_points, equations_of_y};
use slocc_cy::invariants::{classify, moduli_dimension};
use slocc_cy::states::catalog::four_qubit_family;
use slocc_cy::states::parse_state;

fn to_js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// Classification of a state given as state-file JSON.
pub fn classify_json(state: &str) -> Result<String, String> {
    let t = parse_state(state.as_bytes()).map_err(|e| e.to_string())?;
    serde_json::to_string_pretty(&classify(&t, &DEFAULT_PRIMES)).map_err(|e| e.to_string())
}

/// Classification of the four-qubit family member with parameters `(a,b,c,d)`.
pub fn family_json(a: i32, b: i32, c: i32, d: i32) -> String {
    let t = four_qubit_family(a.into(), b.into(), c.into(), d.into());
    serde_json::to_string_pretty(&classify(&t, &DEFAULT_PRIMES)).expect("verdicts serialize")
}

/// `F_p`-points of the model of a state, one point per entry.
pub fn points_json(state: &str, p: u32) -> Result<String, String> {
    let t = parse_state(state.as_bytes()).map_err(|e| e.to_string())?;
    let model = equations_of_y(&t).map_err(|e| e.to_string())?;
    let points = enumerate_points(&model, p).map_err(|e| e.to_string())?;
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = classifyState)]
pub fn classify_state(state: &str) -> Result<String, JsError> {
    classify_json(state).map_err(to_js)
}

#[wasm_bindgen(js_name = classifyFamily)]
pub fn classify_family(a: i32, b: i32, c: i32, d: i32) -> String {
    family_json(a, b, c, d)
}

#[wasm_bindgen(js_name = pointsModP)]
pub fn points_mod_p(state: &str, p: u32) -> Result<String, JsError> {
    points_json(state, p).map_err(to_js)
}

#[wasm_bindgen(js_name = moduliDimension)]
pub fn moduli_dimension_js(n: u32, d: u32) -> Result<i32, JsError> {
    let dim = moduli_dimension(n, d.into()).map_err(to_js)?;
    i32::try_from(dim).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const GHZ3: &str = r#"{"n":3,"d":3,"entries":[{"idx":[0,0,0],"c":"1"},{"idx":[1,1,1],"c":"1"},{"idx":[2,2,2],"c":"1"}]}"#;

    #[test]
    fn ghz_classifies_singular() {
        let v: Value = serde_json::from_str(&classify_json(GHZ3).unwrap()).unwrap();
        assert_eq!(v["status"], "SingularModel");
    }

    #[test]
    fn family_matches_frozen_j() {
        let v: Value = serde_json::from_str(&family_json(1, 2, 3, 5)).unwrap();
        assert_eq!(v["status"], "SmoothGeneric");
        assert_eq!(v["j"], serde_json::json!(["498677257", "213444"]));
        let v: Value = serde_json::from_str(&family_json(1, 1, 1, 1)).unwrap();
        assert_ne!(v["status"], "SmoothGeneric");
    }

    #[test]
    fn points_are_listed() {
        let pts: Vec<Value> = serde_json::from_str(&points_json(GHZ3, 5).unwrap()).unwrap();
        assert!(!pts.is_empty());
        assert!(pts.iter().all(|pt| pt["p"] == 5));
        assert!(points_json("{}", 5).is_err());
    }

    #[test]
    fn moduli_dimension_values() {
        assert_eq!(moduli_dimension(5, 2).unwrap(), 16);
        assert_eq!(moduli_dimension_js(3, 3).ok(), Some(2));
    }
}
