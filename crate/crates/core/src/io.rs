//! JSON documents: ideal and facet-list inputs, user rooting maps, and the
//! records emitted by the command-line tool and the web demo.
//!
//! Faces and generator indices are 1-based in every document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ainfty::{MuRecord, StasheffReport, TransferReport};
use crate::chain::{format_laurent, TaylorElement};
use crate::error::{Error, Result};
use crate::golod::{GolodReport, PairCheck, UnitTerm};
use crate::massey::BrReport;
use crate::monomial::{LcmLattice, Monomial, MonomialIdeal, VariableContext};
use crate::resolution::{betti_totals, BettiEntry, FreeComplex};
use crate::rooting::{RootedCertificate, Rootedness, RootingMap};
use crate::simplicial::{stanley_reisner_ideal, Face};

/// `{"vars": [...], "generators": ["x*y", ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
}

impl IdealDoc {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealDoc {
            vars: ideal.ctx().names().to_vec(),
            generators: ideal.generators().iter().map(|g| ideal.format(g)).collect(),
        }
    }

    fn parsed(&self) -> Result<(VariableContext, Vec<Monomial>)> {
        let ctx = VariableContext::new(&self.vars)?;
        let gens = self
            .generators
            .iter()
            .map(|g| ctx.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Ok((ctx, gens))
    }

    /// Variables in order of first appearance in `generators`.
    pub fn with_inferred_vars(generators: Vec<String>) -> Self {
        let mut vars: Vec<String> = Vec::new();
        for g in &generators {
            for factor in g.split('*') {
                let name = factor.split('^').next().unwrap_or("").trim();
                if !name.is_empty()
                    && name.parse::<u64>().is_err()
                    && !vars.iter().any(|v| v == name)
                {
                    vars.push(name.to_string());
                }
            }
        }
        IdealDoc { vars, generators }
    }

    /// Minimalizes the list, returning the dropped generators (as written).
    pub fn to_ideal(&self) -> Result<(MonomialIdeal, Vec<String>)> {
        let (ctx, gens) = self.parsed()?;
        let ideal = MonomialIdeal::minimalize(&ctx, gens.clone())?;
        let mut kept = ideal.generators().to_vec();
        let mut dropped = Vec::new();
        for (g, text) in gens.iter().zip(&self.generators) {
            if let Some(p) = kept.iter().position(|k| k == g) {
                kept.remove(p);
            } else {
                dropped.push(text.clone());
            }
        }
        Ok((ideal, dropped))
    }

    /// The list exactly as given, even if not minimal (Taylor complex only).
    pub fn to_presentation(&self) -> Result<MonomialIdeal> {
        let (ctx, gens) = self.parsed()?;
        MonomialIdeal::from_list(&ctx, gens)
    }
}

/// `{"m": 3, "facets": [[1], [2], [3]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDoc {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl FacetDoc {
    pub fn faces(&self) -> Result<Vec<Face>> {
        self.facets
            .iter()
            .map(|f| Face::from_one_based(f, self.m))
            .collect()
    }

    /// Stanley–Reisner ideal over variables `x1, …, xm`.
    pub fn stanley_reisner(&self) -> Result<MonomialIdeal> {
        let ctx = VariableContext::numbered("x", self.m)?;
        stanley_reisner_ideal(&self.faces()?, self.m, &ctx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDoc {
    Ideal(IdealDoc),
    Facets(FacetDoc),
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
        let decode = |e: serde_json::Error| Error::InvalidInput(e.to_string());
        if obj.contains_key("generators") {
            Ok(InputDoc::Ideal(serde_json::from_value(v).map_err(decode)?))
        } else if obj.contains_key("facets") {
            Ok(InputDoc::Facets(serde_json::from_value(v).map_err(decode)?))
        } else {
            Err(Error::InvalidInput(
                "expected {\"vars\", \"generators\"} or {\"m\", \"facets\"}".into(),
            ))
        }
    }
}

/// A user rooting map `{"x*y*z": 1, ...}` (values are 1-based generator indices).
pub fn parse_rooting(
    text: &str,
    ideal: &MonomialIdeal,
    lattice: &LcmLattice,
) -> Result<RootingMap> {
    let raw: BTreeMap<String, usize> = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed rooting map: {e}")))?;
    let mut pairs = Vec::with_capacity(raw.len());
    for (k, v) in raw {
        if v == 0 {
            return Err(Error::InvalidRooting(
                "generator indices are 1-based".into(),
            ));
        }
        pairs.push((ideal.ctx().parse(&k)?, v - 1));
    }
    RootingMap::from_assignment(ideal, lattice, pairs)
}

pub fn rooting_json(ideal: &MonomialIdeal, pi: &RootingMap) -> Value {
    let map: BTreeMap<String, usize> = pi
        .entries()
        .map(|(m, g)| (ideal.format(m), g + 1))
        .collect();
    json!(map)
}

fn face_json(f: Face) -> Value {
    json!(f.one_based())
}

pub fn element_json(ideal: &MonomialIdeal, e: &TaylorElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(face, exps, c)| {
            let mono = format_laurent(exps, ideal.ctx());
            let coeff = match (c.unsigned_abs(), mono.as_str()) {
                (1, m) => m.to_string(),
                (k, "1") => k.to_string(),
                (k, m) => format!("{k}*{m}"),
            };
            json!({"coeff": coeff, "face": face.one_based(), "sign": c.signum()})
        })
        .collect();
    json!(terms)
}

pub fn mu_record_json(ideal: &MonomialIdeal, r: &MuRecord) -> Value {
    json!({
        "n": r.n,
        "args": r.args.iter().map(|f| f.one_based()).collect::<Vec<_>>(),
        "value": element_json(ideal, &r.value),
    })
}

pub fn betti_records(ideal: &MonomialIdeal, entries: &[BettiEntry]) -> Vec<Value> {
    entries
        .iter()
        .map(|e| json!({"multidegree": ideal.format(&e.multidegree), "j": e.j, "rank": e.rank}))
        .collect()
}

pub fn betti_totals_json(entries: &[BettiEntry]) -> Value {
    json!({"totals": betti_totals(entries)})
}

pub fn certificate_json(c: &RootedCertificate) -> Value {
    let faces: Vec<Vec<usize>> = c
        .resolution
        .as_ref()
        .map(|f| f.faces().iter().map(|x| x.one_based()).collect())
        .unwrap_or_default();
    json!({
        "rooted": matches!(c.rooted, Rootedness::Rooted),
        "lyubeznik": c.lyubeznik,
        "order": c.order.as_ref().map(|o| o.iter().map(|g| g + 1).collect::<Vec<_>>()),
        "rooted_faces": faces,
        "candidates": c.candidates,
    })
}

pub fn resolution_json(f: &FreeComplex) -> Value {
    let m = f.minimality();
    json!({
        "ranks": f.ranks(),
        "faces": f.faces().iter().map(|x| x.one_based()).collect::<Vec<_>>(),
        "minimal": m.verdict,
        "minimality_witness": m.witness.map(|(a, b)| json!({"face": a.one_based(), "facet": b.one_based()})),
    })
}

pub fn matrix_json(f: &FreeComplex, k: usize) -> Value {
    let d = f.differential_matrix(k);
    json!({
        "k": k,
        "rows": d.rows.iter().map(|x| x.one_based()).collect::<Vec<_>>(),
        "cols": d.cols.iter().map(|x| x.one_based()).collect::<Vec<_>>(),
        "entries": d.entries,
    })
}

fn pair_json(ideal: &MonomialIdeal, p: &PairCheck) -> Value {
    json!({
        "holds": p.holds,
        "witness": p.witness.map(|(i, j)| json!({
            "indices": [i + 1, j + 1],
            "generators": [ideal.format(ideal.generator(i)), ideal.format(ideal.generator(j))],
        })),
    })
}

fn unit_term_json(ideal: &MonomialIdeal, w: &UnitTerm) -> Value {
    let args: Vec<String> = w.args.iter().map(|f| format!("u{f}")).collect();
    json!({
        "n": w.n,
        "args": w.args.iter().map(|f| f.one_based()).collect::<Vec<_>>(),
        "face": w.face.one_based(),
        "scalar": w.scalar,
        "text": format!(
            "mu_{}({}) has unit coefficient {} on u{} (label {})",
            w.n,
            args.join(", "),
            w.scalar,
            w.face,
            ideal.format(&ideal.lcm_of_mask(w.face.bits()))
        ),
    })
}

pub fn golod_json(ideal: &MonomialIdeal, r: &GolodReport) -> Value {
    json!({
        "verdict": r.verdict.as_str(),
        "gcd_condition": pair_json(ideal, &r.gcd_condition),
        "pi_gcd": pair_json(ideal, &r.pi_gcd),
        "product_vanishes": {
            "holds": r.product_vanishes.holds,
            "witness": r.product_vanishes.witness.map(|(a, b)| json!([a.one_based(), b.one_based()])),
            "koszul_holds": r.product_vanishes.koszul_holds,
            "koszul_witness_classes": r.product_vanishes.koszul_witness.map(|(a, b)| json!([a + 1, b + 1])),
        },
        "mu_minimal": {
            "holds": r.mu_minimal.minimal,
            "n_max": r.mu_minimal.n_max,
            "witness": r.mu_minimal.witness.as_ref().map(|w| unit_term_json(ideal, w)),
        },
        "warnings": r.warnings,
    })
}

pub fn transfer_json(r: &TransferReport) -> Value {
    json!({
        "identities": r.identities.iter().map(|c| json!({
            "name": c.name,
            "checked": c.checked,
            "holds": c.passed(),
            "witness": c.witness.map(face_json),
        })).collect::<Vec<_>>(),
        "all_hold": r.all_passed(),
    })
}

pub fn stasheff_json(r: &StasheffReport) -> Value {
    json!({
        "levels": r.levels.iter().map(|l| json!({
            "n": l.n,
            "tensors": l.tensors,
            "holds": l.witness.is_none(),
            "witness": l.witness.as_ref().map(|w| w.iter().map(|f| f.one_based()).collect::<Vec<_>>()),
        })).collect::<Vec<_>>(),
        "all_hold": r.all_passed(),
    })
}

pub fn br_json(r: &BrReport) -> Value {
    json!({
        "r_max": r.r_max,
        "holds": r.holds,
        "levels": r.levels.iter().map(|l| json!({"k": l.k, "tuples": l.tuples, "solved": l.solved})).collect::<Vec<_>>(),
        "failure": r.failure.as_ref().map(|f| json!({
            "k": f.k,
            "classes": f.classes.iter().map(|c| c + 1).collect::<Vec<_>>(),
            "kind": format!("{:?}", f.kind),
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_inputs() {
        let d = InputDoc::parse(r#"{"vars":["x","y"],"generators":["x^2","x^2*y","y"]}"#).unwrap();
        let InputDoc::Ideal(doc) = d else { panic!() };
        let inferred = IdealDoc::with_inferred_vars(vec!["b*a^2".into(), "c".into(), "a*2".into()]);
        assert_eq!(inferred.vars, vec!["b", "a", "c"]);

        let (i, dropped) = doc.to_ideal().unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(dropped, vec!["x^2*y"]);
        assert_eq!(IdealDoc::from_ideal(&i).generators, vec!["x^2", "y"]);

        let d = InputDoc::parse(r#"{"m":3,"facets":[[1],[2],[3]]}"#).unwrap();
        let InputDoc::Facets(doc) = d else { panic!() };
        let sr = doc.stanley_reisner().unwrap();
        assert_eq!(
            IdealDoc::from_ideal(&sr).generators,
            vec!["x1*x2", "x1*x3", "x2*x3"]
        );

        assert!(InputDoc::parse("[1,2]").is_err());
        assert!(InputDoc::parse(r#"{"vars":["x"],"generators":["x"],"extra":1}"#).is_err());
        assert!(InputDoc::parse(r#"{"m":2,"facets":[[3]]}"#)
            .and_then(|d| match d {
                InputDoc::Facets(f) => f.faces(),
                _ => unreachable!(),
            })
            .is_err());
    }

    #[test]
    fn rooting_round_trip() {
        let doc = IdealDoc {
            vars: vec!["x".into(), "y".into(), "z".into()],
            generators: vec!["x*y".into(), "y*z".into(), "x*z".into()],
        };
        let (i, _) = doc.to_ideal().unwrap();
        let l = LcmLattice::build(&i, &crate::Guards::default()).unwrap();
        let pi = crate::rooting::lyubeznik_rooting(&i, &l, &[0, 1, 2]).unwrap();
        let text = rooting_json(&i, &pi).to_string();
        assert_eq!(text, r#"{"x*y":1,"x*y*z":1,"x*z":3,"y*z":2}"#);
        assert_eq!(parse_rooting(&text, &i, &l).unwrap(), pi);
        assert!(parse_rooting(r#"{"x*y":0}"#, &i, &l).is_err());
    }
}
