use std::collections::BTreeMap;
use std::sync::Arc;

use golod_core::ainfty::{AInfinity, TransferDiagram};
use golod_core::field::Field;
use golod_core::golod::{gcd_condition, golod_verdict, GolodReport, Verdict};
use golod_core::io::{self as docs, IdealDoc, InputDoc};
use golod_core::massey::{BrReport, Chain, KoszulModel, MasseyResult};
use golod_core::moment_angle::moment_angle_ranks;
use golod_core::resolution::{betti_totals, taylor_resolution, tor_betti_via_taylor, FreeComplex};
use golod_core::rooting::{
    certify_rooted_ring, lyubeznik_rooting, rooted_resolution, RootedCertificate, Rootedness,
    RootingMap, SearchStrategy,
};
use golod_core::series::{poincare_report, Relation};
use golod_core::{with_field, FieldConfig, Guards, LcmLattice, MonomialIdeal};
use serde_json::{json, Value};

use crate::args::{parse_list, Cli, Command, Kind, RootingArgs};
use crate::input::{self, Chosen};
use crate::{input_error, Failure, Report};

type Res<T> = Result<T, Failure>;

pub(crate) fn dispatch(cli: &Cli) -> Res<Report> {
    let common = &cli.common;
    let guards = common.guards();
    let field = common.field;
    let doc = input::load(common)?;
    let mut rep = Report::default();
    rep.set("command", json!(command_name(&cli.command)));
    rep.set("field", json!(field.to_string()));
    match &cli.command {
        Command::Resolve {
            kind,
            rooting,
            emit_matrices,
        } => resolve(&mut rep, &doc, *kind, rooting, *emit_matrices, &guards)?,
        Command::Golod { rooting } => golod(&mut rep, &doc, rooting, field, &guards)?,
        Command::Ainfty {
            rooting,
            max_n,
            verify,
        } => ainfty(&mut rep, &doc, rooting, *max_n, *verify, &guards)?,
        Command::Massey { classes, r_max } => {
            let ideal = input::ideal(&doc, &mut rep.notes)?;
            header(&mut rep, &ideal);
            let r_max = r_max.unwrap_or(guards.massey_arity);
            with_field!(field, f => massey(&mut rep, &ideal, f, classes.as_deref(), r_max, &guards))?
        }
        Command::Tor => tor(&mut rep, &doc, field, &guards)?,
        Command::Poincare { truncate, caps } => {
            poincare(&mut rep, &doc, *truncate, caps.as_deref(), field, &guards)?
        }
        Command::MomentAngle => moment_angle(&mut rep, &doc, field, &guards)?,
        Command::SearchOrder => search_order(&mut rep, &doc, &guards)?,
    }
    Ok(rep)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Resolve { .. } => "resolve",
        Command::Golod { .. } => "golod",
        Command::Ainfty { .. } => "ainfty",
        Command::Massey { .. } => "massey",
        Command::Tor => "tor",
        Command::Poincare { .. } => "poincare",
        Command::MomentAngle => "moment-angle",
        Command::SearchOrder => "search-order",
    }
}

fn ideal_text(ideal: &MonomialIdeal) -> String {
    format!("({})", IdealDoc::from_ideal(ideal).generators.join(", "))
}

fn header(rep: &mut Report, ideal: &MonomialIdeal) {
    rep.set("ideal", json!(IdealDoc::from_ideal(ideal)));
    rep.line(format!("ideal {}", ideal_text(ideal)));
}

fn order_text(order: &[usize]) -> String {
    order
        .iter()
        .map(|g| format!("m{}", g + 1))
        .collect::<Vec<_>>()
        .join(" < ")
}

fn one_based(order: &[usize]) -> Vec<usize> {
    order.iter().map(|g| g + 1).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// How the rooting map was obtained.
enum Rooting {
    Given(RootingMap, Chosen),
    Found(RootedCertificate),
    NotFound(RootedCertificate),
}

impl Rooting {
    fn map(&self) -> Option<&RootingMap> {
        match self {
            Rooting::Given(pi, _) => Some(pi),
            Rooting::Found(c) => c.pi.as_ref(),
            Rooting::NotFound(_) => None,
        }
    }

    fn describe(&self, ideal: &MonomialIdeal) -> (Value, String) {
        match self {
            Rooting::Given(_, Chosen::Order(o)) => (
                json!({"source": "order", "order": one_based(o)}),
                format!("Lyubeznik order {}", order_text(o)),
            ),
            Rooting::Given(pi, Chosen::Pi) => (
                json!({"source": "pi", "map": docs::rooting_json(ideal, pi)}),
                "user rooting map".into(),
            ),
            Rooting::Found(c) | Rooting::NotFound(c) => {
                let order = c.order.as_deref().unwrap_or(&[]);
                let text = if c.order.is_some() {
                    format!("Lyubeznik order {} (found by search)", order_text(order))
                } else {
                    format!(
                        "no order of {} distinct rootings gives a minimal resolution",
                        c.candidates
                    )
                };
                (
                    json!({"source": "search", "order": c.order.as_ref().map(|o| one_based(o)), "candidates": c.candidates}),
                    text,
                )
            }
        }
    }
}

fn select_rooting(ideal: &MonomialIdeal, args: &RootingArgs, guards: &Guards) -> Res<Rooting> {
    let lattice = LcmLattice::build(ideal, guards)?;
    if let Some((pi, chosen)) = input::explicit_rooting(args, ideal, &lattice)? {
        return Ok(Rooting::Given(pi, chosen));
    }
    let cert = certify_rooted_ring(ideal, &SearchStrategy::ExhaustiveOrders, guards)?;
    Ok(match cert.rooted {
        Rootedness::Rooted => Rooting::Found(cert),
        Rootedness::Unknown => Rooting::NotFound(cert),
    })
}

fn faces_text(f: &FreeComplex) -> String {
    let mut by_deg: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for face in f.faces() {
        by_deg
            .entry(face.len())
            .or_default()
            .push(format!("u{face}"));
    }
    by_deg
        .into_iter()
        .map(|(k, v)| format!("  F_{k}: {}", v.join(" ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit_resolution(rep: &mut Report, label: &str, f: &FreeComplex, matrices: bool) {
    let m = f.minimality();
    let ranks = f.ranks();
    let mut rec = docs::resolution_json(f);
    rec["kind"] = json!(label);
    rep.record("resolution", rec);
    rep.set("ranks", json!(ranks));
    rep.set("minimal", json!(m.verdict));
    rep.line(format!(
        "ranks {}",
        ranks
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    match m.witness {
        None => rep.line("minimal: yes"),
        Some((a, b)) => rep.line(format!("minimal: no (unit coefficient from u{a} to u{b})")),
    }
    rep.line(faces_text(f));
    if matrices {
        for k in 1..=f.top_degree() {
            rep.record("matrix", docs::matrix_json(f, k));
            rep.text.push_str(&f.differential_matrix(k).render());
        }
    }
}

fn resolve(
    rep: &mut Report,
    doc: &InputDoc,
    kind: Option<Kind>,
    rooting: &RootingArgs,
    matrices: bool,
    guards: &Guards,
) -> Res<()> {
    let kind = kind.unwrap_or(if rooting.order.is_some() {
        Kind::Lyubeznik
    } else {
        Kind::Rooted
    });
    rep.set("kind", json!(format!("{kind:?}").to_lowercase()));
    match kind {
        Kind::Taylor => {
            if rooting.order.is_some() || rooting.pi.is_some() {
                return Err(input_error(
                    "--order and --pi do not apply to the Taylor resolution",
                ));
            }
            // the Taylor complex accepts the generator list exactly as written
            let ideal = match doc {
                InputDoc::Ideal(d) => d.to_presentation()?,
                InputDoc::Facets(f) => f.stanley_reisner()?,
            };
            header(rep, &ideal);
            rep.line("Taylor resolution");
            let f = taylor_resolution(&ideal, guards)?;
            emit_resolution(rep, "taylor", &f, matrices);
        }
        Kind::Lyubeznik => {
            if rooting.pi.is_some() {
                return Err(input_error(
                    "--pi gives a rooted resolution; use --kind rooted",
                ));
            }
            let ideal = input::ideal(doc, &mut rep.notes)?;
            header(rep, &ideal);
            let order = match &rooting.order {
                Some(o) => input::order(o, ideal.len())?,
                None => (0..ideal.len()).collect(),
            };
            let lattice = LcmLattice::build(&ideal, guards)?;
            let pi = lyubeznik_rooting(&ideal, &lattice, &order)?;
            rep.set("order", json!(one_based(&order)));
            rep.line(format!(
                "Lyubeznik resolution, order {}",
                order_text(&order)
            ));
            let f = rooted_resolution(&ideal, &pi)?;
            emit_resolution(rep, "lyubeznik", &f, matrices);
        }
        Kind::Rooted => {
            let ideal = input::ideal(doc, &mut rep.notes)?;
            header(rep, &ideal);
            let r = select_rooting(&ideal, rooting, guards)?;
            let (v, text) = r.describe(&ideal);
            rep.set("rooting", v);
            rep.line(format!("rooted resolution, {text}"));
            if let Rooting::NotFound(c) = &r {
                rep.record("certificate", docs::certificate_json(c));
                rep.set("minimal", json!(false));
                return Ok(());
            }
            let pi = r.map().expect("rooting present");
            let f = rooted_resolution(&ideal, pi)?;
            emit_resolution(rep, "rooted", &f, matrices);
        }
    }
    Ok(())
}

fn check_line(
    rep: &mut Report,
    name: &str,
    holds: bool,
    yes: &str,
    no: &str,
    witness: Option<String>,
) {
    let state = if holds { yes } else { no };
    match witness {
        Some(w) if !holds => rep.line(format!("  {name:<28} {state} ({w})")),
        _ => rep.line(format!("  {name:<28} {state}")),
    }
}

fn golod_text(rep: &mut Report, ideal: &MonomialIdeal, g: &GolodReport) {
    let pair = |w: Option<(usize, usize)>| {
        w.map(|(i, j)| {
            format!(
                "m{} = {}, m{} = {}",
                i + 1,
                ideal.format(ideal.generator(i)),
                j + 1,
                ideal.format(ideal.generator(j))
            )
        })
    };
    check_line(
        rep,
        "gcd condition",
        g.gcd_condition.holds,
        "holds",
        "fails",
        pair(g.gcd_condition.witness),
    );
    check_line(
        rep,
        "pi-gcd condition",
        g.pi_gcd.holds,
        "holds",
        "fails",
        pair(g.pi_gcd.witness),
    );
    let p = &g.product_vanishes;
    check_line(
        rep,
        "product on Tor (mu_2 ⊗ 1)",
        p.holds,
        "vanishes",
        "nonzero",
        p.witness.map(|(a, b)| format!("u{a} · u{b}")),
    );
    check_line(
        rep,
        "product in H(T ⊗ k)",
        p.koszul_holds,
        "vanishes",
        "nonzero",
        None,
    );
    let mu = &g.mu_minimal;
    let witness = docs::golod_json(ideal, g)["mu_minimal"]["witness"]["text"]
        .as_str()
        .map(str::to_string);
    check_line(
        rep,
        &format!("mu_n minimal (n <= {})", mu.n_max),
        mu.minimal,
        "yes",
        "no",
        witness,
    );
    let agree = match g.verdict {
        Verdict::Inconsistent => "criteria disagree",
        _ => "all criteria agree",
    };
    rep.line(format!("verdict: {} ({agree})", g.verdict.as_str()));
}

fn golod(
    rep: &mut Report,
    doc: &InputDoc,
    rooting: &RootingArgs,
    field: FieldConfig,
    guards: &Guards,
) -> Res<()> {
    let ideal = input::ideal(doc, &mut rep.notes)?;
    header(rep, &ideal);
    let r = select_rooting(&ideal, rooting, guards)?;
    let (v, text) = r.describe(&ideal);
    rep.set("rooting", v);
    rep.line(format!("rooting: {text}"));
    match r.map() {
        Some(pi) => {
            let g = golod_verdict(&ideal, pi, field, guards)?;
            let j = docs::golod_json(&ideal, &g);
            rep.record("golod", j.clone());
            rep.set("verdict", json!(g.verdict.as_str()));
            rep.set("report", j);
            golod_text(rep, &ideal, &g);
            rep.notes.extend(g.warnings.iter().cloned());
            if g.verdict == Verdict::Inconsistent {
                rep.notes.push(
                    "the criteria disagree on a rooted presentation; this indicates a bug".into(),
                );
                rep.code = 1;
            }
        }
        None => {
            // outside the rooted setting the criteria are reported but not compared
            let gcd = gcd_condition(&ideal);
            let koszul = with_field!(field, f => KoszulModel::new(&ideal, f, guards)?.nonvanishing_product()?);
            let status = "criteria computed, equivalence not guaranteed";
            let rec = json!({
                "gcd_condition": {"holds": gcd.holds, "witness": gcd.witness.map(|(i, j)| [i + 1, j + 1])},
                "koszul_product_vanishes": koszul.is_none(),
                "status": status,
            });
            rep.record("golod", rec.clone());
            rep.set("verdict", Value::Null);
            rep.set("report", rec);
            check_line(rep, "gcd condition", gcd.holds, "holds", "fails", None);
            check_line(
                rep,
                "product in H(T ⊗ k)",
                koszul.is_none(),
                "vanishes",
                "nonzero",
                None,
            );
            rep.line(format!(
                "verdict: none ({status}; see `massey` and `poincare`)"
            ));
        }
    }
    Ok(())
}

fn ainfty(
    rep: &mut Report,
    doc: &InputDoc,
    rooting: &RootingArgs,
    max_n: Option<usize>,
    verify: bool,
    guards: &Guards,
) -> Res<()> {
    let ideal = input::ideal(doc, &mut rep.notes)?;
    header(rep, &ideal);
    let r = select_rooting(&ideal, rooting, guards)?;
    let (v, text) = r.describe(&ideal);
    rep.set("rooting", v);
    rep.line(format!("rooting: {text}"));
    let pi = match r.map() {
        Some(pi) => pi.clone(),
        None => {
            let identity: Vec<usize> = (0..ideal.len()).collect();
            rep.notes.push(format!(
                "no minimal rooted resolution found; using the order {} (F is not minimal)",
                order_text(&identity)
            ));
            lyubeznik_rooting(&ideal, &LcmLattice::build(&ideal, guards)?, &identity)?
        }
    };
    let diagram = Arc::new(TransferDiagram::new(&ideal, &pi, guards)?);
    let a = AInfinity::new(diagram.clone());
    let n_max = max_n.unwrap_or_else(|| a.degree_bound().max(2));
    rep.set("ranks", json!(a.f().ranks()));
    rep.set("n_max", json!(n_max));
    rep.set("degree_bound", json!(a.degree_bound()));
    rep.line(format!(
        "F ranks {}; mu_n vanishes for n > {}",
        a.f()
            .ranks()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        a.degree_bound()
    ));
    let table = a.mu_table(n_max)?;
    for m in &table {
        rep.record("mu", docs::mu_record_json(&ideal, m));
        let args: Vec<String> = m.args.iter().map(|f| format!("u{f}")).collect();
        rep.line(format!(
            "mu_{}({}) = {}",
            m.n,
            args.join(", "),
            m.value.display(ideal.ctx())
        ));
    }
    rep.set("nonzero_mu", json!(table.len()));
    if table.is_empty() {
        rep.line(format!(
            "all mu_n vanish on positive-degree tensors for 2 <= n <= {n_max}"
        ));
    }
    if verify {
        let t = diagram.verify_transfer_identities()?;
        let s = a.verify_stasheff(n_max)?;
        rep.set("transfer", docs::transfer_json(&t));
        rep.set("stasheff", docs::stasheff_json(&s));
        for c in &t.identities {
            rep.line(format!(
                "identity {}: {} ({} basis elements)",
                c.name,
                if c.passed() { "holds" } else { "FAILS" },
                c.checked
            ));
        }
        for l in &s.levels {
            rep.line(format!(
                "Stasheff n = {}: {} ({} tensors)",
                l.n,
                if l.witness.is_none() {
                    "holds"
                } else {
                    "FAILS"
                },
                l.tensors
            ));
        }
        if !t.all_passed() || !s.all_passed() {
            rep.notes
                .push("an identity failed; this indicates a bug".into());
            rep.code = 1;
        }
    }
    Ok(())
}

fn render_vector<F: Field>(f: &F, ids: &[usize], v: &[F::Elem]) -> String {
    let mut parts = Vec::new();
    for (id, x) in ids.iter().zip(v) {
        if f.is_zero(x) {
            continue;
        }
        let c = f.render(x);
        parts.push(if c == "1" {
            format!("c{}", id + 1)
        } else {
            format!("{c}*c{}", id + 1)
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn chain_json<F: Field>(f: &F, c: &Chain<F>) -> Value {
    json!(c
        .iter()
        .map(|(face, x)| json!({"face": face.one_based(), "coeff": f.render(x)}))
        .collect::<Vec<_>>())
}

fn chain_text<F: Field>(f: &F, c: &Chain<F>) -> String {
    c.iter()
        .map(|(face, x)| {
            let s = f.render(x);
            if s == "1" {
                format!("u{face}")
            } else {
                format!("{s}*u{face}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

fn massey_json<F: Field>(f: &F, ids: &[usize], r: &MasseyResult<F>) -> Value {
    let coords = |v: &Vec<F::Elem>| v.iter().map(|x| f.render(x)).collect::<Vec<_>>();
    json!({
        "arity": r.arity,
        "degree": r.degree,
        "basis": ids.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "defined": r.defined,
        "undefined_at": r.undefined_at.map(|(a, b)| [a + 1, b]),
        "representative": r.representative.as_ref().map(coords),
        "indeterminacy": r.indeterminacy.iter().map(coords).collect::<Vec<_>>(),
        "exact": r.exact,
        "contains_zero": r.contains_zero,
    })
}

fn massey<F: Field>(
    rep: &mut Report,
    ideal: &MonomialIdeal,
    f: F,
    classes: Option<&str>,
    r_max: usize,
    guards: &Guards,
) -> Res<()> {
    let model = KoszulModel::new(ideal, f.clone(), guards)?;
    rep.line("basis of Tor^S(R, k) = H(T ⊗ k):");
    for c in model.classes() {
        rep.record(
            "class",
            json!({
                "class": c.id + 1,
                "multidegree": ideal.format(&c.multidegree),
                "degree": c.degree,
                "representative": chain_json(&f, &c.representative),
            }),
        );
        rep.line(format!(
            "  c{:<3} Tor_{} at {:<12} [{}]",
            c.id + 1,
            c.degree,
            ideal.format(&c.multidegree),
            chain_text(&f, &c.representative)
        ));
    }
    rep.set("dims", json!(model.dims()));
    match classes {
        Some(list) => {
            let ids = parse_list(list, "--classes").map_err(input_error)?;
            if ids.len() < 2 {
                return Err(input_error("--classes needs at least two classes"));
            }
            let n = model.classes().len();
            let mut cycles = Vec::new();
            for &id in &ids {
                if id == 0 || id > n {
                    return Err(input_error(format!(
                        "--classes: class {id} out of range 1..={n}"
                    )));
                }
                if id == 1 {
                    return Err(input_error(
                        "--classes: c1 is the unit class; Massey products use positive classes",
                    ));
                }
                cycles.push(model.cycle_of_class(id - 1));
            }
            let r = model.massey_product(&cycles)?;
            let basis = model.class_ids_in_degree(r.degree).to_vec();
            let rec = massey_json(&f, &basis, &r);
            rep.record("massey", rec.clone());
            rep.set("massey", rec);
            let name = format!(
                "<{}>",
                ids.iter()
                    .map(|i| format!("c{i}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            if !r.defined {
                let (a, b) = r.undefined_at.unwrap_or((0, 0));
                rep.line(format!(
                    "{name} is not defined: <c{}..c{}> does not contain zero",
                    ids[a],
                    ids[b - 1]
                ));
            } else if let Some(rep_v) = &r.representative {
                let span: Vec<String> = r
                    .indeterminacy
                    .iter()
                    .map(|v| render_vector(&f, &basis, v))
                    .collect();
                let span = if span.is_empty() {
                    String::new()
                } else {
                    format!(" + span{{{}}}", span.join(", "))
                };
                rep.line(format!(
                    "{name} = {}{span}",
                    render_vector(&f, &basis, rep_v)
                ));
                rep.line(format!(
                    "contains zero: {}{}",
                    yes_no(r.contains_zero),
                    if r.exact {
                        ""
                    } else {
                        " (indeterminacy partially explored; \"no\" is not certified)"
                    }
                ));
            } else {
                rep.line(format!(
                    "{name} is defined but no defining system was found (not certified)"
                ));
            }
        }
        None => {
            let br = model.br_condition(r_max)?;
            br_text(rep, &br);
            let j = docs::br_json(&br);
            rep.record("br", j.clone());
            rep.set("br", j);
        }
    }
    Ok(())
}

fn br_text(rep: &mut Report, br: &BrReport) {
    for l in &br.levels {
        rep.line(format!(
            "  k = {}: {} tuples, {} with nonzero target",
            l.k, l.tuples, l.solved
        ));
    }
    match &br.failure {
        None => rep.line(format!(
            "(B_{}) {}: all Massey products of 2..={} positive classes contain zero",
            br.r_max,
            if br.holds { "holds" } else { "undetermined" },
            br.r_max
        )),
        Some(fl) => rep.line(format!(
            "(B_{}) fails at k = {}: <{}> {:?}",
            br.r_max,
            fl.k,
            fl.classes
                .iter()
                .map(|c| format!("c{}", c + 1))
                .collect::<Vec<_>>()
                .join(", "),
            fl.kind
        )),
    }
}

fn tor(rep: &mut Report, doc: &InputDoc, field: FieldConfig, guards: &Guards) -> Res<()> {
    let ideal = input::ideal(doc, &mut rep.notes)?;
    header(rep, &ideal);
    let entries = tor_betti_via_taylor(&ideal, field, guards)?;
    for r in docs::betti_records(&ideal, &entries) {
        rep.record("betti", r);
    }
    let totals = betti_totals(&entries);
    rep.set("totals", json!(totals));
    let mut by_j: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for e in &entries {
        let m = ideal.format(&e.multidegree);
        by_j.entry(e.j).or_default().push(if e.rank == 1 {
            m
        } else {
            format!("{m} (x{})", e.rank)
        });
    }
    for (j, ms) in by_j {
        rep.line(format!("Tor_{j} ({}): {}", totals[j], ms.join(", ")));
    }
    rep.line(format!(
        "betti {}",
        totals
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    ));
    Ok(())
}

fn poincare(
    rep: &mut Report,
    doc: &InputDoc,
    truncate: usize,
    caps: Option<&str>,
    field: FieldConfig,
    guards: &Guards,
) -> Res<()> {
    let ideal = input::ideal(doc, &mut rep.notes)?;
    header(rep, &ideal);
    let caps = caps
        .map(|c| parse_list(c, "--caps"))
        .transpose()
        .map_err(input_error)?;
    let entries = tor_betti_via_taylor(&ideal, field, guards)?;
    let betti: Vec<u64> = betti_totals(&entries)
        .into_iter()
        .map(|b| b as u64)
        .collect();
    let r = poincare_report(&ideal, &betti, truncate, caps.as_deref(), field, guards)?;
    for (c, d) in r.comparisons.iter().zip(&r.oracle) {
        let mut v = serde_json::to_value(c).expect("serializable");
        v["cap"] = json!(d.cap);
        v["dim_cap_plus"] = json!(d.dim_cap_plus);
        v["basis_size"] = json!(d.basis_size);
        rep.record("coefficient", v);
    }
    rep.set("betti", json!(r.betti));
    rep.set("truncation", json!(truncate));
    rep.set(
        "bound",
        json!(r
            .bound
            .coefficients
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()),
    );
    rep.set(
        "oracle",
        json!(r.oracle.iter().map(|d| d.dim).collect::<Vec<_>>()),
    );
    rep.set("serre_inequality", json!(r.serre_inequality));
    rep.set("equality", json!(r.equality));
    rep.set("first_strict", json!(r.first_strict));
    rep.set("oracle_stopped", json!(r.oracle_stopped));
    rep.line(format!(
        "betti {}  (m = {})",
        r.betti
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        r.nvars
    ));
    rep.line(format!(
        "{:>3} {:>12} {:>12}  {:<8} {}",
        "j", "bound", "Tor^R_j", "", "cap"
    ));
    for (c, d) in r.comparisons.iter().zip(&r.oracle) {
        let rel = match c.relation {
            Relation::Equal => "=",
            Relation::Below => "<",
            Relation::Above => "> (!)",
        };
        let flag = if c.stabilized {
            ""
        } else {
            " (not stabilized)"
        };
        rep.line(format!(
            "{:>3} {:>12} {:>12}  {:<8} {}{flag}",
            c.j, c.bound, c.oracle, rel, d.cap
        ));
    }
    if let Some(s) = &r.oracle_stopped {
        rep.line(format!("bar oracle stopped: {s}"));
        rep.notes.push(format!("bar oracle stopped early ({s})"));
    }
    match r.first_strict {
        Some(j) => rep.line(format!("first strict inequality at t^{j}: not Golod")),
        None if r.equality => rep.line("equality on the computed range (consistent with Golod)"),
        None => rep.line("no strict inequality on the computed range"),
    }
    if !r.serre_inequality {
        rep.notes.push(
            "a stabilized coefficient exceeds the bound; raise --caps or treat as a bug".into(),
        );
    }
    Ok(())
}

fn moment_angle(rep: &mut Report, doc: &InputDoc, field: FieldConfig, guards: &Guards) -> Res<()> {
    let fd = input::facets(doc)?;
    let facets = fd.faces()?;
    let ma = moment_angle_ranks(&facets, fd.m, field, guards)?;
    match &ma.ideal {
        Some(i) => {
            rep.set("stanley_reisner", json!(IdealDoc::from_ideal(i)));
            rep.line(format!("Stanley-Reisner ideal {}", ideal_text(i)));
            for r in docs::betti_records(i, &ma.tor) {
                rep.record("betti", r);
            }
        }
        None => {
            rep.set("stanley_reisner", Value::Null);
            rep.line("Stanley-Reisner ideal (0): the complex is a full simplex");
        }
    }
    let ranks: BTreeMap<String, usize> =
        ma.ranks.iter().map(|(d, r)| (d.to_string(), *r)).collect();
    rep.set("ranks", json!(ranks));
    rep.line(format!(
        "H^*(Z_K): {}",
        ma.ranks
            .iter()
            .map(|(d, r)| format!("H^{d} = {r}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(())
}

fn search_order(rep: &mut Report, doc: &InputDoc, guards: &Guards) -> Res<()> {
    let ideal = input::ideal(doc, &mut rep.notes)?;
    header(rep, &ideal);
    let c = certify_rooted_ring(&ideal, &SearchStrategy::ExhaustiveOrders, guards)?;
    rep.record("certificate", docs::certificate_json(&c));
    rep.set("rooted", json!(c.rooted == Rootedness::Rooted));
    rep.set("candidates", json!(c.candidates));
    match (&c.order, &c.resolution) {
        (Some(o), Some(f)) => {
            rep.set("order", json!(one_based(o)));
            rep.set("ranks", json!(f.ranks()));
            rep.line(format!(
                "minimal Lyubeznik resolution for {} (checked {} distinct rootings)",
                order_text(o),
                c.candidates
            ));
            rep.line(format!(
                "ranks {}",
                f.ranks()
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            rep.line(faces_text(f));
        }
        _ => {
            rep.set("order", Value::Null);
            rep.line(format!(
                "no generator order gives a minimal Lyubeznik resolution ({} distinct rootings checked)",
                c.candidates
            ));
        }
    }
    Ok(())
}
