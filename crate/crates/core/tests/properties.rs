use std::collections::HashSet;

use golod_core::field::{FieldConfig, Rationals};
use golod_core::golod::{gcd_condition, golod_verdict, pi_gcd, Verdict};
use golod_core::massey::KoszulModel;
use golod_core::monomial::{Guards, LcmLattice, Monomial, MonomialIdeal, VariableContext};
use golod_core::resolution::{betti_totals, tor_betti_via_taylor};
use golod_core::rooting::{
    certify_rooted_ring, lyubeznik_rooting, rooted_resolution, SearchStrategy,
};
use golod_core::simplicial::{
    is_supporting_resolution, restriction_is_acyclic, Face, LabeledComplex, SimplicialComplex,
};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

/// Every monomial dividing `top`.
fn divisors(top: &Monomial) -> Vec<Monomial> {
    top.exponents()
        .iter()
        .map(|&e| 0..=e)
        .multi_cartesian_product()
        .map(|v| Monomial::from_exponents(v).unwrap())
        .collect()
}

#[test]
fn three_criteria_agree_on_random_rooted_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let g = Guards::default();
    let (mut tested, mut golod, mut not_golod) = (0, 0, 0);
    while tested < 120 {
        let Some(i) = random_ideal(&mut rng, 5, 5) else {
            continue;
        };
        let c = certify_rooted_ring(&i, &SearchStrategy::ExhaustiveOrders, &g).unwrap();
        let Some(pi) = c.pi else { continue };
        tested += 1;
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &g).unwrap();
        assert_ne!(
            r.verdict,
            Verdict::Inconsistent,
            "{:?}: {r:?}",
            i.generators()
        );
        match r.verdict {
            Verdict::Golod => golod += 1,
            _ => not_golod += 1,
        }
    }
    // both outcomes occur, so the agreement is not vacuous
    assert!(golod > 10 && not_golod > 10, "{golod} / {not_golod}");
}

#[test]
fn gcd_condition_matches_pi_gcd_for_every_minimal_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let g = Guards::default();
    let mut multi = 0;
    let mut tested = 0;
    while tested < 80 {
        let Some(i) = random_ideal(&mut rng, 5, 5) else {
            continue;
        };
        let l = LcmLattice::build(&i, &g).unwrap();
        let mut seen = HashSet::new();
        let mut minimal = 0;
        for order in (0..i.len()).permutations(i.len()) {
            let pi = lyubeznik_rooting(&i, &l, &order).unwrap();
            if !seen.insert(format!(
                "{:?}",
                pi.entries().map(|(_, v)| v).collect::<Vec<_>>()
            )) {
                continue;
            }
            if !rooted_resolution(&i, &pi).unwrap().is_minimal() {
                continue;
            }
            minimal += 1;
            assert_eq!(
                gcd_condition(&i).holds,
                pi_gcd(&i, &pi).unwrap().holds,
                "{:?} order {order:?}",
                i.generators()
            );
        }
        if minimal > 0 {
            tested += 1;
        }
        if minimal > 1 {
            multi += 1;
        }
    }
    assert!(
        multi > 20,
        "only {multi} ideals with several minimal rootings"
    );
}

#[test]
fn lattice_support_test_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = Guards::default();
    let (mut yes, mut no) = (0, 0);
    for _ in 0..150 {
        let Some(i) = random_ideal(&mut rng, 4, 4) else {
            continue;
        };
        let r = i.len();
        // random simplicial complex on the generators containing every vertex
        let faces: Vec<Face> = (0u64..1 << r)
            .map(Face::from_bits)
            .filter(|f| f.len() <= 1 || rng.gen_bool(0.5))
            .collect();
        let closed: Vec<Face> = faces
            .iter()
            .copied()
            .filter(|f| {
                (0u64..1 << r).all(|b| b & !f.bits() != 0 || faces.contains(&Face::from_bits(b)))
            })
            .collect();
        let delta =
            LabeledComplex::new(&i, SimplicialComplex::from_faces(r, closed).unwrap()).unwrap();
        let v = is_supporting_resolution(&delta, &i, FieldConfig::Rationals, &g).unwrap();
        let top = i.lcm_of_mask((1 << r) - 1);
        let brute = divisors(&top)
            .iter()
            .all(|mu| restriction_is_acyclic(&delta, mu, FieldConfig::Rationals));
        assert_eq!(v.verdict, brute, "{:?}", i.generators());
        if brute {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 10 && no > 10, "{yes} / {no}");
}

#[test]
fn hollow_triangle_is_rejected_at_xyz() {
    let ctx = VariableContext::new(&["x", "y", "z"]).unwrap();
    let i = MonomialIdeal::parse(&ctx, &["x*y", "y*z", "x*z"]).unwrap();
    let faces = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110].map(Face::from_bits);
    let delta =
        LabeledComplex::new(&i, SimplicialComplex::from_facets(3, &faces).unwrap()).unwrap();
    let v =
        is_supporting_resolution(&delta, &i, FieldConfig::Rationals, &Guards::default()).unwrap();
    assert!(!v.verdict);
    assert_eq!(ctx.format(&v.witness.unwrap()), "x*y*z");
}

#[test]
fn tor_counts_match_minimal_rooted_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let g = Guards::default();
    let mut tested = 0;
    while tested < 60 {
        let Some(i) = random_ideal(&mut rng, 5, 5) else {
            continue;
        };
        let c = certify_rooted_ring(&i, &SearchStrategy::ExhaustiveOrders, &g).unwrap();
        let Some(f) = c.resolution else { continue };
        tested += 1;
        let totals = betti_totals(&tor_betti_via_taylor(&i, FieldConfig::Rationals, &g).unwrap());
        assert_eq!(totals, f.ranks(), "{:?}", i.generators());
        let model = KoszulModel::new(&i, Rationals, &g).unwrap();
        assert_eq!(model.dims(), totals);
        for p in [2, 3] {
            let tp = betti_totals(&tor_betti_via_taylor(&i, FieldConfig::Prime(p), &g).unwrap());
            assert_eq!(tp, totals);
        }
    }
}
