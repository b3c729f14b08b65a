//! Rooting maps on the lcm-lattice, the Lyubeznik rooting of a total order,
//! the rooted complex `RC(L, π)`, and search over orders.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::monomial::{check_permutation, Guards, LcmLattice, Monomial, MonomialIdeal};
use crate::par;
use crate::resolution::{build_chain_complex, FreeComplex};
use crate::simplicial::{Face, LabeledComplex, SimplicialComplex};

/// A choice `π(m)` of dividing generator (0-based index) for every `m ∈ L ∖ {0̂}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootingMap {
    lattice: LcmLattice,
    // aligned with lattice elements; entry 0 (the bottom) is unused
    values: Vec<usize>,
}

impl RootingMap {
    /// Builds a map from explicit pairs; every non-bottom lattice element must be assigned.
    pub fn from_assignment(
        ideal: &MonomialIdeal,
        lattice: &LcmLattice,
        pairs: impl IntoIterator<Item = (Monomial, usize)>,
    ) -> Result<Self> {
        let mut values = vec![usize::MAX; lattice.len()];
        for (m, g) in pairs {
            let k = lattice.index_of(&m).ok_or_else(|| {
                Error::InvalidRooting(format!("{} is not in the lcm-lattice", ideal.format(&m)))
            })?;
            if k == 0 {
                return Err(Error::InvalidRooting(
                    "the bottom element 1 has no root".into(),
                ));
            }
            if g >= ideal.len() {
                return Err(Error::InvalidRooting(format!(
                    "generator index {} out of range 1..={}",
                    g + 1,
                    ideal.len()
                )));
            }
            values[k] = g;
        }
        if let Some(k) = (1..values.len()).find(|&k| values[k] == usize::MAX) {
            return Err(Error::InvalidRooting(format!(
                "no value for {}",
                ideal.format(&lattice.elements()[k])
            )));
        }
        Ok(RootingMap {
            lattice: lattice.clone(),
            values,
        })
    }

    pub fn lattice(&self) -> &LcmLattice {
        &self.lattice
    }

    /// `π(m)` for a lattice element `m ≠ 1`.
    pub fn value(&self, m: &Monomial) -> Option<usize> {
        self.lattice
            .index_of(m)
            .filter(|&k| k > 0)
            .map(|k| self.values[k])
    }

    /// `π(u_J) = π(m_J)` for a nonempty face.
    pub fn of_face(&self, ideal: &MonomialIdeal, f: Face) -> usize {
        self.value(&ideal.lcm_of_mask(f.bits()))
            .expect("labels of nonempty faces lie in the lattice")
    }

    /// `(element, generator)` pairs in lattice order, bottom excluded.
    pub fn entries(&self) -> impl Iterator<Item = (&Monomial, usize)> {
        self.lattice
            .elements()
            .iter()
            .zip(&self.values)
            .skip(1)
            .map(|(m, v)| (m, *v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootingViolation {
    /// 1 for "π(m) divides m", 2 for the coherence axiom.
    pub axiom: u8,
    pub m: Monomial,
    /// The intermediate element `n` with `π(m) | n | m` and `π(n) ≠ π(m)`.
    pub n: Option<Monomial>,
}

/// Checks both rooting axioms exhaustively over the lattice.
pub fn validate_rooting_map(pi: &RootingMap, ideal: &MonomialIdeal) -> Option<RootingViolation> {
    let els = pi.lattice.elements();
    for k in 1..els.len() {
        if !ideal.generator(pi.values[k]).divides(&els[k]) {
            return Some(RootingViolation {
                axiom: 1,
                m: els[k].clone(),
                n: None,
            });
        }
    }
    for k in 1..els.len() {
        let root = ideal.generator(pi.values[k]);
        for l in 1..els.len() {
            if root.divides(&els[l]) && els[l].divides(&els[k]) && pi.values[l] != pi.values[k] {
                return Some(RootingViolation {
                    axiom: 2,
                    m: els[k].clone(),
                    n: Some(els[l].clone()),
                });
            }
        }
    }
    None
}

/// A total order on generators: `order[0] ≺ order[1] ≺ …` (0-based indices).
pub fn check_order(order: &[usize], r: usize) -> Result<()> {
    check_permutation(order, r).map_err(Error::InvalidOrder)
}

/// `π(m) = ≺-least generator dividing m`.
pub fn lyubeznik_rooting(
    ideal: &MonomialIdeal,
    lattice: &LcmLattice,
    order: &[usize],
) -> Result<RootingMap> {
    check_order(order, ideal.len())?;
    let mut values = vec![usize::MAX; lattice.len()];
    for (k, m) in lattice.elements().iter().enumerate().skip(1) {
        values[k] = *order
            .iter()
            .find(|&&g| ideal.generator(g).divides(m))
            .expect("every non-bottom element is divisible by a generator");
    }
    Ok(RootingMap {
        lattice: lattice.clone(),
        values,
    })
}

/// `RC(L, π)`: faces all of whose nonempty subsets are unbroken, grown by cardinality.
pub fn rooted_complex(ideal: &MonomialIdeal, pi: &RootingMap) -> Result<LabeledComplex> {
    if let Some(v) = validate_rooting_map(pi, ideal) {
        return Err(Error::InvalidRooting(format!(
            "axiom {} fails at {}",
            v.axiom,
            ideal.format(&v.m)
        )));
    }
    let r = ideal.len();
    let unbroken = |f: Face| f.contains(pi.of_face(ideal, f));
    let mut all: HashSet<Face> = HashSet::new();
    all.insert(Face::EMPTY);
    let mut level: Vec<Face> = (0..r)
        .map(Face::singleton)
        .filter(|f| unbroken(*f))
        .collect();
    while !level.is_empty() {
        all.extend(level.iter().copied());
        let present: HashSet<Face> = level.iter().copied().collect();
        let mut next = Vec::new();
        for f in &level {
            let start = f.max_index().map_or(0, |m| m + 1);
            for v in start..r {
                let g = f.with(v);
                if g.boundary().all(|(_, s)| present.contains(&s)) && unbroken(g) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    LabeledComplex::new(ideal, SimplicialComplex::from_faces(r, all)?)
}

/// `F_{RC(L,π)}`.
pub fn rooted_resolution(ideal: &MonomialIdeal, pi: &RootingMap) -> Result<FreeComplex> {
    build_chain_complex(&rooted_complex(ideal, pi)?, ideal)
}

#[derive(Clone, Debug)]
pub enum SearchStrategy {
    ExhaustiveOrders,
    UserSupplied(RootingMap),
}

#[derive(Clone, Debug, PartialEq, Eq, Copy)]
pub enum Rootedness {
    Rooted,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct RootedCertificate {
    pub rooted: Rootedness,
    /// Whether some Lyubeznik order works; `None` when no order search was run.
    pub lyubeznik: Option<bool>,
    pub order: Option<Vec<usize>>,
    pub pi: Option<RootingMap>,
    pub resolution: Option<FreeComplex>,
    /// Number of distinct order-induced rooting maps examined.
    pub candidates: usize,
}

/// Searches for a rooting map whose rooted resolution is minimal.
pub fn certify_rooted_ring(
    ideal: &MonomialIdeal,
    strategy: &SearchStrategy,
    guards: &Guards,
) -> Result<RootedCertificate> {
    match strategy {
        SearchStrategy::UserSupplied(pi) => {
            let f = rooted_resolution(ideal, pi)?;
            let ok = f.is_minimal();
            Ok(RootedCertificate {
                rooted: if ok {
                    Rootedness::Rooted
                } else {
                    Rootedness::Unknown
                },
                lyubeznik: None,
                order: None,
                pi: ok.then(|| pi.clone()),
                resolution: ok.then_some(f),
                candidates: 1,
            })
        }
        SearchStrategy::ExhaustiveOrders => {
            let r = ideal.len();
            if r > guards.orders {
                return Err(Error::GuardExceeded {
                    what: "generator count for exhaustive order search",
                    limit: guards.orders,
                    actual: r,
                });
            }
            let lattice = LcmLattice::build(ideal, guards)?;
            // orders inducing the same π give the same complex; keep the first of each
            let mut seen = HashMap::new();
            let mut candidates = Vec::new();
            for order in (0..r).permutations(r) {
                let pi = lyubeznik_rooting(ideal, &lattice, &order)?;
                if seen.insert(pi.values.clone(), ()).is_none() {
                    candidates.push((order, pi));
                }
            }
            let found = par::find_map_first(&candidates, |(order, pi)| {
                match rooted_resolution(ideal, pi) {
                    Ok(f) if f.is_minimal() => Some(Ok((order.clone(), pi.clone(), f))),
                    Ok(_) => None,
                    Err(e) => Some(Err(e)),
                }
            })
            .transpose()?;
            let n = candidates.len();
            Ok(match found {
                Some((order, pi, f)) => RootedCertificate {
                    rooted: Rootedness::Rooted,
                    lyubeznik: Some(true),
                    order: Some(order),
                    pi: Some(pi),
                    resolution: Some(f),
                    candidates: n,
                },
                None => RootedCertificate {
                    rooted: Rootedness::Unknown,
                    lyubeznik: Some(false),
                    order: None,
                    pi: None,
                    resolution: None,
                    candidates: n,
                },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;
    use crate::monomial::VariableContext;
    use crate::simplicial::is_supporting_resolution;
    use proptest::prelude::*;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let ctx = VariableContext::new(vars).unwrap();
        MonomialIdeal::parse(&ctx, gens).unwrap()
    }

    fn tri() -> MonomialIdeal {
        ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z"])
    }

    fn faces_of(c: &LabeledComplex) -> Vec<Vec<usize>> {
        c.faces().iter().map(|f| f.one_based()).collect()
    }

    #[test]
    fn triangle_lyubeznik() {
        let i = tri();
        let g = Guards::default();
        let l = LcmLattice::build(&i, &g).unwrap();
        let pi = lyubeznik_rooting(&i, &l, &[0, 1, 2]).unwrap();
        assert_eq!(validate_rooting_map(&pi, &i), None);
        assert_eq!(pi.value(&i.ctx().parse("x*y*z").unwrap()), Some(0));
        let rc = rooted_complex(&i, &pi).unwrap();
        assert_eq!(
            faces_of(&rc),
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3]]
        );
    }

    #[test]
    fn two_generators_give_full_simplex() {
        let i = ideal(&["x", "y"], &["x^2", "x*y"]);
        let l = LcmLattice::build(&i, &Guards::default()).unwrap();
        let pi = lyubeznik_rooting(&i, &l, &[0, 1]).unwrap();
        assert_eq!(pi.value(&i.ctx().parse("x^2*y").unwrap()), Some(0));
        assert_eq!(rooted_complex(&i, &pi).unwrap().len(), 4);
        let i = ideal(&["x", "y"], &["x^2", "y^2"]);
        let l = LcmLattice::build(&i, &Guards::default()).unwrap();
        let pi = lyubeznik_rooting(&i, &l, &[1, 0]).unwrap();
        assert_eq!(rooted_complex(&i, &pi).unwrap().len(), 4);
    }

    #[test]
    fn invalid_maps() {
        let i = tri();
        let l = LcmLattice::build(&i, &Guards::default()).unwrap();
        let p = |s: &str| i.ctx().parse(s).unwrap();
        let bad = RootingMap::from_assignment(
            &i,
            &l,
            [(p("x*y"), 0), (p("y*z"), 1), (p("x*z"), 1), (p("x*y*z"), 0)],
        )
        .unwrap();
        let v = validate_rooting_map(&bad, &i).unwrap();
        assert_eq!((v.axiom, i.format(&v.m)), (1, "x*z".to_string()));
        assert!(rooted_complex(&i, &bad).is_err());

        let lin = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        let l = LcmLattice::build(&lin, &Guards::default()).unwrap();
        let p = |s: &str| lin.ctx().parse(s).unwrap();
        let bad = RootingMap::from_assignment(
            &lin,
            &l,
            [
                (p("x"), 0),
                (p("y"), 1),
                (p("z"), 2),
                (p("x*y"), 1),
                (p("x*z"), 0),
                (p("y*z"), 1),
                (p("x*y*z"), 0),
            ],
        )
        .unwrap();
        let v = validate_rooting_map(&bad, &lin).unwrap();
        assert_eq!(v.axiom, 2);
        assert_eq!(lin.format(&v.m), "x*y*z");
        assert_eq!(lin.format(v.n.as_ref().unwrap()), "x*y");

        assert!(RootingMap::from_assignment(&lin, &l, [(p("x"), 0)]).is_err());
    }

    #[test]
    fn certify_examples() {
        let g = Guards::default();
        let c = certify_rooted_ring(&tri(), &SearchStrategy::ExhaustiveOrders, &g).unwrap();
        assert_eq!(c.rooted, Rootedness::Rooted);
        assert_eq!(c.order, Some(vec![0, 1, 2]));
        let i = ideal(&["x", "y"], &["x^2", "y^2"]);
        let c = certify_rooted_ring(&i, &SearchStrategy::ExhaustiveOrders, &g).unwrap();
        assert_eq!(c.rooted, Rootedness::Rooted);
        assert_eq!(c.resolution.unwrap().ranks(), vec![1, 2, 1]);
    }

    fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..6).prop_filter_map(
            "proper",
            |gens| {
                let ctx = VariableContext::numbered("x", 4).unwrap();
                let gens: Vec<Monomial> = gens
                    .into_iter()
                    .map(|e| Monomial::from_exponents(e).unwrap())
                    .filter(|m| !m.is_one())
                    .collect();
                MonomialIdeal::minimalize(&ctx, gens).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn lyubeznik_rootings_are_valid_and_resolve(i in random_ideal(), seed in 0usize..720) {
            let r = i.len();
            let mut order: Vec<usize> = (0..r).collect();
            let mut s = seed;
            for k in (1..r).rev() {
                order.swap(k, s % (k + 1));
                s /= k + 1;
            }
            let g = Guards::default();
            let l = LcmLattice::build(&i, &g).unwrap();
            let pi = lyubeznik_rooting(&i, &l, &order).unwrap();
            prop_assert_eq!(validate_rooting_map(&pi, &i), None);
            let rc = rooted_complex(&i, &pi).unwrap();
            for f in rc.faces() {
                if !f.is_empty() {
                    prop_assert!(f.contains(pi.of_face(&i, *f)));
                }
                // every subset is present
                let bits = f.bits();
                let mut sub = bits;
                loop {
                    prop_assert!(rc.contains(Face::from_bits(sub)));
                    if sub == 0 { break; }
                    sub = (sub - 1) & bits;
                }
            }
            prop_assert!(is_supporting_resolution(&rc, &i, FieldConfig::Rationals, &g).unwrap().verdict);
        }
    }
}
