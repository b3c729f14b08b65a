//! Browser bindings: each export takes the text typed into the demo page and
//! returns a JSON document for it to render.

use golod_core::golod::golod_verdict;
use golod_core::io::{self as docs, IdealDoc, InputDoc};
use golod_core::resolution::{betti_totals, tor_betti_via_taylor};
use golod_core::rooting::{
    certify_rooted_ring, check_order, lyubeznik_rooting, rooted_resolution, SearchStrategy,
};
use golod_core::series::poincare_report;
use golod_core::{FieldConfig, Guards, LcmLattice, MonomialIdeal};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Smaller than the command-line defaults so the page stays responsive.
fn guards() -> Guards {
    Guards {
        subsets: 12,
        orders: 7,
        bar_basis: 20_000,
        ..Guards::default()
    }
}

/// A JSON input document, or a comma-separated generator list such as `x*y, y*z`.
pub fn parse_input(text: &str) -> Result<MonomialIdeal, String> {
    let text = text.trim();
    let doc = if text.starts_with('{') {
        InputDoc::parse(text).map_err(|e| e.to_string())?
    } else {
        let gens = text
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        InputDoc::Ideal(IdealDoc::with_inferred_vars(gens))
    };
    match doc {
        InputDoc::Ideal(d) => d.to_ideal().map(|(i, _)| i),
        InputDoc::Facets(f) => f.stanley_reisner(),
    }
    .map_err(|e| e.to_string())
}

/// Empty text means "search all orders"; otherwise 1-based indices.
fn parse_order(text: &str, r: usize) -> Result<Option<Vec<usize>>, String> {
    if text.trim().is_empty() {
        return Ok(None);
    }
    let order = text
        .split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v - 1),
            _ => Err(format!("bad generator index `{}`", t.trim())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_order(&order, r).map_err(|e| e.to_string())?;
    Ok(Some(order))
}

fn rooting(
    ideal: &MonomialIdeal,
    order: &str,
    g: &Guards,
) -> Result<(Option<Vec<usize>>, Option<golod_core::rooting::RootingMap>), String> {
    let err = |e: golod_core::Error| e.to_string();
    match parse_order(order, ideal.len())? {
        Some(o) => {
            let l = LcmLattice::build(ideal, g).map_err(err)?;
            let pi = lyubeznik_rooting(ideal, &l, &o).map_err(err)?;
            Ok((Some(o), Some(pi)))
        }
        None => {
            let c =
                certify_rooted_ring(ideal, &SearchStrategy::ExhaustiveOrders, g).map_err(err)?;
            Ok((c.order, c.pi))
        }
    }
}

fn one_based(o: &Option<Vec<usize>>) -> Value {
    json!(o
        .as_ref()
        .map(|o| o.iter().map(|g| g + 1).collect::<Vec<_>>()))
}

pub fn resolve_json(input: &str, order: &str) -> Result<String, String> {
    let g = guards();
    let ideal = parse_input(input)?;
    let (order, pi) = rooting(&ideal, order, &g)?;
    let Some(pi) = pi else {
        return Ok(json!({
            "ideal": IdealDoc::from_ideal(&ideal),
            "order": Value::Null,
            "message": "no generator order gives a minimal Lyubeznik resolution",
        })
        .to_string());
    };
    let f = rooted_resolution(&ideal, &pi).map_err(|e| e.to_string())?;
    let matrices: Vec<Value> = (1..=f.top_degree())
        .map(|k| {
            let d = f.differential_matrix(k);
            json!({"k": k, "entries": d.entries, "text": d.render()})
        })
        .collect();
    Ok(json!({
        "ideal": IdealDoc::from_ideal(&ideal),
        "order": one_based(&order),
        "resolution": docs::resolution_json(&f),
        "matrices": matrices,
    })
    .to_string())
}

pub fn golod_json(input: &str, order: &str) -> Result<String, String> {
    let g = guards();
    let ideal = parse_input(input)?;
    let (order, pi) = rooting(&ideal, order, &g)?;
    let Some(pi) = pi else {
        return Ok(json!({
            "ideal": IdealDoc::from_ideal(&ideal),
            "order": Value::Null,
            "message": "not rooted by any order: criteria computed, equivalence not guaranteed",
            "gcd_condition": golod_core::golod::gcd_condition(&ideal).holds,
        })
        .to_string());
    };
    let r = golod_verdict(&ideal, &pi, FieldConfig::Rationals, &g).map_err(|e| e.to_string())?;
    Ok(json!({
        "ideal": IdealDoc::from_ideal(&ideal),
        "order": one_based(&order),
        "report": docs::golod_json(&ideal, &r),
    })
    .to_string())
}

pub fn poincare_json(input: &str, truncate: usize) -> Result<String, String> {
    let g = guards();
    let q = FieldConfig::Rationals;
    let ideal = parse_input(input)?;
    let entries = tor_betti_via_taylor(&ideal, q, &g).map_err(|e| e.to_string())?;
    let betti: Vec<u64> = betti_totals(&entries)
        .into_iter()
        .map(|b| b as u64)
        .collect();
    let r =
        poincare_report(&ideal, &betti, truncate.min(6), None, q, &g).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&r).map_err(|e| e.to_string())?;
    v["ideal"] = json!(IdealDoc::from_ideal(&ideal));
    // i128 coefficients do not survive JavaScript numbers
    v["bound"] = json!(r
        .bound
        .coefficients
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>());
    Ok(v.to_string())
}

#[wasm_bindgen]
pub fn resolve(input: &str, order: &str) -> Result<String, JsError> {
    resolve_json(input, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn golod(input: &str, order: &str) -> Result<String, JsError> {
    golod_json(input, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn poincare(input: &str, truncate: usize) -> Result<String, JsError> {
    poincare_json(input, truncate).map_err(|e| JsError::new(&e))
}
