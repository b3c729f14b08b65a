use golod_wasm::{golod_json, parse_input, poincare_json, resolve_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn accepts_lists_and_documents() {
    assert_eq!(parse_input("x*y, y*z, x*z").unwrap().len(), 3);
    assert_eq!(
        parse_input(r#"{"m":3,"facets":[[1],[2],[3]]}"#)
            .unwrap()
            .len(),
        3
    );
    assert!(parse_input("x*").is_err());
    assert!(parse_input("").is_err());
}

#[test]
fn resolve_triangle() {
    let v = parse(resolve_json("x*y, y*z, x*z", "1,2,3"));
    assert_eq!(v["resolution"]["ranks"], serde_json::json!([1, 3, 2]));
    assert_eq!(
        v["matrices"][1]["entries"],
        serde_json::json!([["-z", "-z"], ["x", "0"], ["0", "y"]])
    );
    let v = parse(resolve_json("x*y, y*z, z*w, w*x", ""));
    assert_eq!(v["order"], Value::Null);
    assert!(resolve_json("x*y, y*z", "1,1").is_err());
}

#[test]
fn golod_verdicts() {
    assert_eq!(
        parse(golod_json("x*y, y*z, x*z", ""))["report"]["verdict"],
        "Golod"
    );
    assert_eq!(
        parse(golod_json("x^2, y^2", "2,1"))["report"]["verdict"],
        "NotGolod"
    );
    assert!(golod_json("a*b, b*c, c*d", "1,3,2")
        .unwrap_err()
        .contains("not minimal"));
}

#[test]
fn poincare_triangle() {
    let v = parse(poincare_json("x*y, y*z, x*z", 3));
    assert_eq!(v["bound"], serde_json::json!(["1", "3", "6", "12"]));
    assert_eq!(v["equality"], true);
    assert_eq!(parse(poincare_json("x^2, y^2", 3))["first_strict"], 3);
}
