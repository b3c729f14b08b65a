//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
//! any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use golod_core::ainfty::{AInfinity, TransferDiagram};
use golod_core::field::{FieldConfig, Rationals};
use golod_core::golod::{golod_verdict, Verdict};
use golod_core::io::InputDoc;
use golod_core::massey::{cross_check_mu, KoszulModel};
use golod_core::monomial::{Guards, LcmLattice, Monomial, MonomialIdeal, VariableContext};
use golod_core::resolution::{betti_totals, tor_betti_via_taylor};
use golod_core::rooting::{
    certify_rooted_ring, lyubeznik_rooting, rooted_resolution, RootingMap, SearchStrategy,
};
use golod_core::series::{poincare_report, Relation};
use golod_core::simplicial::{
    is_supporting_resolution, restriction_is_acyclic, Face, LabeledComplex, SimplicialComplex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDEAL_FIXTURES: &[&str] = &[
    "triangle.json",
    "two_squares.json",
    "square.json",
    "square_and_mixed.json",
    "nine_variables.json",
    "nonzero_mu3.json",
];
const FACET_FIXTURES: &[&str] = &[
    "three_points.json",
    "path.json",
    "square_boundary.json",
    "simplex.json",
];

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> Option<MonomialIdeal> {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    match InputDoc::parse(&text).unwrap() {
        InputDoc::Ideal(d) => Some(d.to_ideal().unwrap().0),
        InputDoc::Facets(f) => f.stanley_reisner().ok(),
    }
}

/// Orders named alongside the fixtures; the rest are found by search.
fn fixed_order(name: &str) -> Option<Vec<usize>> {
    match name {
        "triangle.json" => Some(vec![0, 1, 2]),
        "nine_variables.json" => Some((0..7).collect()),
        "nonzero_mu3.json" => Some(vec![2, 0, 4, 1, 3]),
        _ => None,
    }
}

/// Every fixture ideal with a rooting whose resolution is minimal.
fn rooted_fixtures() -> Vec<(String, MonomialIdeal, RootingMap)> {
    let g = Guards::default();
    let mut out = Vec::new();
    for name in IDEAL_FIXTURES.iter().chain(FACET_FIXTURES) {
        let Some(i) = load(name) else { continue };
        let pi = match fixed_order(name) {
            Some(o) => lyubeznik_rooting(&i, &LcmLattice::build(&i, &g).unwrap(), &o).unwrap(),
            None => match certify_rooted_ring(&i, &SearchStrategy::ExhaustiveOrders, &g)
                .unwrap()
                .pi
            {
                Some(pi) => pi,
                None => continue,
            },
        };
        out.push((name.to_string(), i, pi));
    }
    out
}

fn random_ideal(rng: &mut ChaCha8Rng, max_m: usize, max_r: usize) -> Option<MonomialIdeal> {
    let m = rng.gen_range(2..=max_m);
    let r = rng.gen_range(2..=max_r);
    let ctx = VariableContext::numbered("x", m).unwrap();
    let gens: Vec<Monomial> = (0..r)
        .map(|_| Monomial::from_exponents((0..m).map(|_| rng.gen_range(0..=2)).collect()).unwrap())
        .filter(|x| !x.is_one())
        .collect();
    MonomialIdeal::minimalize(&ctx, gens)
        .ok()
        .filter(|i| i.len() >= 2)
}

/// Random ideals admitting a minimal Lyubeznik resolution, with the rooting found.
fn random_rooted(seed: u64, count: usize) -> Vec<(MonomialIdeal, RootingMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Guards::default();
    let mut out = Vec::new();
    while out.len() < count {
        let Some(i) = random_ideal(&mut rng, 5, 5) else {
            continue;
        };
        if let Some(pi) = certify_rooted_ring(&i, &SearchStrategy::ExhaustiveOrders, &g)
            .unwrap()
            .pi
        {
            out.push((i, pi));
        }
    }
    out
}

fn gens(i: &MonomialIdeal) -> String {
    i.generators()
        .iter()
        .map(|g| i.format(g))
        .collect::<Vec<_>>()
        .join(", ")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2?}]", o.detail, took);
    if let Some(l) = limit {
        if took >= l {
            o.pass = false;
            o.detail = format!("{} exceeds the {:?} budget", o.detail, l);
        }
    }
    o
}

fn criterion_1() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let i = load("triangle.json").unwrap();
        let g = Guards::default();
        let pi = lyubeznik_rooting(&i, &LcmLattice::build(&i, &g).unwrap(), &[0, 1, 2]).unwrap();
        let f = rooted_resolution(&i, &pi).unwrap();
        let d1 = f.differential_matrix(1).entries;
        let d2 = f.differential_matrix(2).entries;
        let ok = f.ranks() == [1, 3, 2]
            && d1 == [["x*y", "y*z", "x*z"]]
            && d2 == [["-z", "-z"], ["x", "0"], ["0", "y"]];
        outcome(
            ok,
            format!("ranks {:?}, d1 = {d1:?}, d2 = {d2:?}", f.ranks()),
        )
    })
}

fn criterion_2() -> Outcome {
    timed(Some(Duration::from_secs(10)), || {
        let i = load("nine_variables.json").unwrap();
        let g = Guards::default();
        let pi = lyubeznik_rooting(
            &i,
            &LcmLattice::build(&i, &g).unwrap(),
            &(0..7).collect::<Vec<_>>(),
        )
        .unwrap();
        let f = rooted_resolution(&i, &pi).unwrap();
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &g).unwrap();
        let ok = f.is_minimal()
            && r.gcd_condition.holds
            && r.product_vanishes.holds
            && r.mu_minimal.minimal
            && r.verdict == Verdict::Golod;
        outcome(
            ok,
            format!(
                "minimal {} ranks {:?}, gcd {}, product vanishes {}, mu minimal {}, verdict {}",
                f.is_minimal(),
                f.ranks(),
                r.gcd_condition.holds,
                r.product_vanishes.holds,
                r.mu_minimal.minimal,
                r.verdict.as_str()
            ),
        )
    })
}

fn criterion_3() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let mut cases: Vec<(String, MonomialIdeal, RootingMap)> = rooted_fixtures();
        let nfix = cases.len();
        cases.extend(
            random_rooted(3, 100)
                .into_iter()
                .map(|(i, pi)| (gens(&i), i, pi)),
        );
        let mut disagreements = Vec::new();
        let (mut golod, mut not) = (0, 0);
        for (name, i, pi) in &cases {
            let r = golod_verdict(i, pi, FieldConfig::Rationals, &g).unwrap();
            let votes = [
                r.gcd_condition.holds,
                r.product_vanishes.holds,
                r.mu_minimal.minimal,
            ];
            if votes.iter().all(|&v| v) {
                golod += 1;
            } else if votes.iter().all(|&v| !v) {
                not += 1;
            } else {
                disagreements.push(name.clone());
            }
        }
        outcome(
            disagreements.is_empty(),
            format!(
                "{} fixtures + {} random ideals: {golod} Golod, {not} not Golod, {} disagreements {:?}",
                nfix,
                cases.len() - nfix,
                disagreements.len(),
                disagreements
            ),
        )
    })
}

fn criterion_4() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let mut cases: Vec<(String, MonomialIdeal, RootingMap)> = rooted_fixtures();
        // any valid rooting map defines the transfer data, minimal or not
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut random = 0;
        while random < 100 {
            let Some(i) = random_ideal(&mut rng, 5, 5) else {
                continue;
            };
            let l = LcmLattice::build(&i, &g).unwrap();
            let mut order: Vec<usize> = (0..i.len()).collect();
            order.rotate_left(rng.gen_range(0..i.len()));
            let pi = lyubeznik_rooting(&i, &l, &order).unwrap();
            cases.push((gens(&i), i, pi));
            random += 1;
        }
        let mut failures = Vec::new();
        let mut elements = 0;
        let mut names = Vec::new();
        for (name, i, pi) in &cases {
            let d = TransferDiagram::new(i, pi, &g).unwrap();
            let t = d.verify_transfer_identities().unwrap();
            if names.is_empty() {
                names = t.identities.iter().map(|c| c.name.clone()).collect();
            }
            elements += t.identities.first().map_or(0, |c| c.checked);
            for c in t.identities.iter().filter(|c| !c.passed()) {
                failures.push(format!("{name}: {}", c.name));
            }
        }
        outcome(
            failures.is_empty(),
            format!(
                "{} ideals, {elements} Taylor basis elements; identities {}; homotopy checked as 1 - ip = d*phi + phi*d; failures {:?}",
                cases.len(),
                names.join(" | "),
                failures
            ),
        )
    })
}

fn criterion_5() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let n_max = 4;
        let mut failures = Vec::new();
        let mut broken_by_flip = Vec::new();
        let mut tensors = 0;
        for (name, i, pi) in rooted_fixtures() {
            let d = Arc::new(TransferDiagram::new(&i, &pi, &g).unwrap());
            let s = AInfinity::new(d.clone()).verify_stasheff(n_max).unwrap();
            tensors += s.levels.iter().map(|l| l.tensors).sum::<usize>();
            if !s.all_passed() {
                failures.push(name.clone());
            }
            if !AInfinity::with_convention(d, 1)
                .verify_stasheff(n_max)
                .unwrap()
                .all_passed()
            {
                broken_by_flip.push(name);
            }
        }
        outcome(
            failures.is_empty() && !broken_by_flip.is_empty(),
            format!(
                "n <= {n_max}, {tensors} basis tensors, failures {failures:?}; flipped sign breaks {broken_by_flip:?}"
            ),
        )
    })
}

fn criterion_6() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let mut failures = Vec::new();
        let (mut defined, mut checked) = (0, 0);
        for (name, i, pi) in rooted_fixtures() {
            let a = AInfinity::new(Arc::new(TransferDiagram::new(&i, &pi, &g).unwrap()));
            let model = KoszulModel::new(&i, Rationals, &g).unwrap();
            let faces: Vec<Face> = a
                .f()
                .faces()
                .iter()
                .copied()
                .filter(|f| !f.is_empty())
                .collect();
            let mut tuples: Vec<Vec<Face>> = Vec::new();
            for &x in &faces {
                for &y in &faces {
                    tuples.push(vec![x, y]);
                    for &z in &faces {
                        tuples.push(vec![x, y, z]);
                    }
                }
            }
            for t in tuples {
                let c = cross_check_mu(&model, &a, &t).unwrap();
                checked += 1;
                defined += c.defined as usize;
                // products of two classes are single-valued with sign +1
                let ok = if t.len() == 2 {
                    c.sign == Some(1)
                } else {
                    c.passed()
                };
                if !ok {
                    failures.push(format!("{name}: {:?}", t));
                }
            }
        }
        // <[u1], [u2]> for (x^2, y^2)
        let i = load("two_squares.json").unwrap();
        let m = KoszulModel::new(&i, Rationals, &g).unwrap();
        let u = |ix: &[usize]| m.face_cycle(Face::from_one_based(ix, 2).unwrap()).unwrap();
        let r = m.massey_product(&[u(&[1]), u(&[2])]).unwrap();
        let top = m.class_of(2, &u(&[1, 2]).chain).unwrap();
        let top_ok = r.representative.as_ref() == Some(&top)
            && r.indeterminacy.is_empty()
            && !r.contains_zero;
        outcome(
            failures.is_empty() && top_ok,
            format!(
                "{checked} tuples (n = 2, 3), {defined} defined, failures {failures:?}; (x^2, y^2): <[u1],[u2]> = [u12] {top_ok}"
            ),
        )
    })
}

fn divisors(top: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &e in top.exponents() {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=e).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| Monomial::from_exponents(v).unwrap())
        .collect()
}

fn criterion_7() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let q = FieldConfig::Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (mut agree, mut total, mut supporting) = (0, 0, 0);
        while total < 150 {
            let Some(i) = random_ideal(&mut rng, 4, 4) else {
                continue;
            };
            let r = i.len();
            let faces: Vec<Face> = (0u64..1 << r)
                .map(Face::from_bits)
                .filter(|f| f.len() <= 1 || rng.gen_bool(0.5))
                .collect();
            let closed: Vec<Face> = faces
                .iter()
                .copied()
                .filter(|f| {
                    (0u64..1 << r)
                        .all(|b| b & !f.bits() != 0 || faces.contains(&Face::from_bits(b)))
                })
                .collect();
            let delta =
                LabeledComplex::new(&i, SimplicialComplex::from_faces(r, closed).unwrap()).unwrap();
            let v = is_supporting_resolution(&delta, &i, q, &g).unwrap();
            let brute = divisors(&i.lcm_of_mask((1 << r) - 1))
                .iter()
                .all(|mu| restriction_is_acyclic(&delta, mu, q));
            total += 1;
            agree += (v.verdict == brute) as usize;
            supporting += brute as usize;
        }
        let i = load("triangle.json").unwrap();
        let hollow = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110].map(Face::from_bits);
        let delta =
            LabeledComplex::new(&i, SimplicialComplex::from_facets(3, &hollow).unwrap()).unwrap();
        let v = is_supporting_resolution(&delta, &i, q, &g).unwrap();
        let witness = v.witness.as_ref().map(|w| i.format(w));
        let hollow_ok = !v.verdict && witness.as_deref() == Some("x*y*z");
        outcome(
            agree == total && hollow_ok,
            format!(
                "{agree}/{total} random complexes agree ({supporting} supporting); hollow triangle rejected with witness {witness:?}"
            ),
        )
    })
}

fn criterion_8() -> Outcome {
    timed(Some(Duration::from_secs(60)), || {
        let g = Guards::default();
        let q = FieldConfig::Rationals;
        let report = |name: &str, order: usize| {
            let i = load(name).unwrap();
            let betti: Vec<u64> = betti_totals(&tor_betti_via_taylor(&i, q, &g).unwrap())
                .into_iter()
                .map(|b| b as u64)
                .collect();
            poincare_report(&i, &betti, order, None, q, &g).unwrap()
        };
        let tri = report("triangle.json", 3);
        let tri_oracle: Vec<u64> = tri.oracle.iter().map(|d| d.dim).collect();
        let tri_ok =
            tri_oracle == [1, 3, 6, 12] && tri.bound.coefficients == [1, 3, 6, 12] && tri.equality;

        let sq = report("two_squares.json", 3);
        let at = |j: usize| sq.comparisons.iter().find(|c| c.j == j);
        let strict_t2 = at(2).is_some_and(|c| c.relation == Relation::Below);
        let one = report("square.json", 4);
        let one_ok = one.equality && one.oracle.iter().all(|d| d.dim == 1) && one.oracle.len() == 5;
        let c2 = at(2).map(|c| (c.oracle, c.bound));
        outcome(
            tri_ok && strict_t2 && one_ok,
            format!(
                "(xy,yz,xz): oracle {tri_oracle:?} bound {:?} equal {tri_ok}; (x^2,y^2) at t^2: oracle/bound {c2:?}, strict {strict_t2}, first strict at t^{:?}; (x^2): all ones for j <= 4 {one_ok}",
                tri.bound.coefficients, sq.first_strict
            ),
        )
    })
}

fn criterion_9() -> Outcome {
    timed(None, || {
        let g = Guards::default();
        let mut mismatches = Vec::new();
        let mut n = 0;
        for (name, i, pi) in rooted_fixtures() {
            let f = rooted_resolution(&i, &pi).unwrap();
            let totals =
                betti_totals(&tor_betti_via_taylor(&i, FieldConfig::Rationals, &g).unwrap());
            let dims = KoszulModel::new(&i, Rationals, &g).unwrap().dims();
            n += 1;
            if !f.is_minimal() || totals != f.ranks() || dims != totals {
                mismatches.push(format!(
                    "{name}: faces {:?} tor {totals:?} basis {dims:?}",
                    f.ranks()
                ));
            }
        }
        outcome(
            mismatches.is_empty(),
            format!("{n} rooted fixtures, mismatches {mismatches:?}"),
        )
    })
}

fn criterion_10() -> Outcome {
    timed(None, || {
        let mut jobs: Vec<Vec<String>> = Vec::new();
        for name in IDEAL_FIXTURES {
            let p = fixture_path(name);
            for cmd in [
                "resolve",
                "golod",
                "ainfty",
                "massey",
                "tor",
                "poincare",
                "search-order",
            ] {
                let mut args = vec![cmd.to_string(), "-i".into(), p.clone()];
                if cmd == "resolve" {
                    args.push("--emit-matrices".into());
                }
                if cmd == "ainfty" {
                    args.push("--verify".into());
                }
                jobs.push(args);
            }
        }
        for name in FACET_FIXTURES {
            let p = fixture_path(name);
            for cmd in ["moment-angle", "tor"] {
                jobs.push(vec![cmd.into(), "-i".into(), p.clone()]);
            }
        }
        let threads = std::thread::available_parallelism()
            .map_or(4, |n| n.get())
            .max(4)
            .to_string();
        let mut differ = Vec::new();
        for job in &jobs {
            let outs: Vec<_> = ["1", threads.as_str()]
                .iter()
                .map(|t| {
                    let mut argv: Vec<&str> = vec!["golod"];
                    argv.extend(job.iter().map(|s| s.as_str()));
                    argv.extend(["--format", "json", "--threads", t]);
                    golod_cli::run(argv)
                })
                .collect();
            if outs[0] != outs[1] {
                differ.push(job.join(" "));
            }
        }
        outcome(
            differ.is_empty(),
            format!(
                "{} structured runs, 1 vs {threads} threads; differing {differ:?}",
                jobs.len()
            ),
        )
    })
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "Lyubeznik resolution of (xy, yz, xz) and its matrices",
            criterion_1,
        ),
        ("nine-variable ideal: minimal, gcd, Golod", criterion_2),
        ("gcd <=> mu_2 (x) 1 = 0 <=> mu minimal", criterion_3),
        ("transfer identities", criterion_4),
        ("Stasheff identities and sign regression", criterion_5),
        ("mu_n (x) 1 inside Massey cosets", criterion_6),
        ("lattice support test versus brute force", criterion_7),
        ("Poincare series against the bound", criterion_8),
        ("Tor totals versus rooted faces", criterion_9),
        ("determinism across thread counts", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += !o.pass as usize;
        println!(
            "acceptance {:>2} {}: {title} -- {}",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
