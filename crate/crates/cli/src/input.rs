use std::io::Read;
use std::path::Path;

use golod_core::io::{parse_rooting, FacetDoc, IdealDoc, InputDoc};
use golod_core::rooting::{check_order, lyubeznik_rooting, RootingMap};
use golod_core::{LcmLattice, MonomialIdeal};

use crate::args::{parse_list, Common, RootingArgs};
use crate::{input_error, Failure};

fn read_source(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn split(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Exactly one of `--input` and `--gens`.
pub fn load(common: &Common) -> Result<InputDoc, Failure> {
    match (&common.input, &common.gens) {
        (Some(_), Some(_)) => Err(input_error("give either --input or --gens, not both")),
        (None, None) => Err(input_error("no input: use --input FILE or --gens LIST")),
        (Some(path), None) => {
            if common.vars.is_some() {
                return Err(input_error("--vars only applies to --gens"));
            }
            Ok(InputDoc::parse(&read_source(path)?)?)
        }
        (None, Some(gens)) => {
            let generators = split(gens);
            Ok(InputDoc::Ideal(match &common.vars {
                Some(v) => IdealDoc {
                    vars: split(v),
                    generators,
                },
                None => IdealDoc::with_inferred_vars(generators),
            }))
        }
    }
}

/// The minimal ideal of the input; facet lists become Stanley–Reisner ideals.
pub fn ideal(doc: &InputDoc, notes: &mut Vec<String>) -> Result<MonomialIdeal, Failure> {
    match doc {
        InputDoc::Ideal(d) => {
            let (ideal, dropped) = d.to_ideal()?;
            if !dropped.is_empty() {
                notes.push(format!(
                    "dropped non-minimal generators {}; generator indices refer to ({})",
                    dropped.join(", "),
                    IdealDoc::from_ideal(&ideal).generators.join(", ")
                ));
            }
            Ok(ideal)
        }
        InputDoc::Facets(f) => Ok(f.stanley_reisner()?),
    }
}

pub fn facets(doc: &InputDoc) -> Result<&FacetDoc, Failure> {
    match doc {
        InputDoc::Facets(f) => Ok(f),
        InputDoc::Ideal(_) => Err(input_error(
            "this command needs a facet list {\"m\", \"facets\"}",
        )),
    }
}

/// 1-based order list to 0-based.
pub fn order(text: &str, r: usize) -> Result<Vec<usize>, Failure> {
    let raw = parse_list(text, "--order").map_err(input_error)?;
    let mut out = Vec::with_capacity(raw.len());
    for v in raw {
        if v == 0 {
            return Err(input_error("--order: generator indices are 1-based"));
        }
        out.push(v - 1);
    }
    check_order(&out, r)?;
    Ok(out)
}

pub enum Chosen {
    Order(Vec<usize>),
    Pi,
}

/// The rooting map requested by `--order` / `--pi`, if any.
pub fn explicit_rooting(
    args: &RootingArgs,
    ideal: &MonomialIdeal,
    lattice: &LcmLattice,
) -> Result<Option<(RootingMap, Chosen)>, Failure> {
    if let Some(o) = &args.order {
        let order = order(o, ideal.len())?;
        let pi = lyubeznik_rooting(ideal, lattice, &order)?;
        return Ok(Some((pi, Chosen::Order(order))));
    }
    if let Some(path) = &args.pi {
        let pi = parse_rooting(&read_source(path)?, ideal, lattice)?;
        return Ok(Some((pi, Chosen::Pi)));
    }
    Ok(None)
}
