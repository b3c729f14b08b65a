//! Golod verdicts for rooted rings: the gcd condition, its π form, vanishing
//! of the product on Tor, and minimality of the transferred `μ_n`.

use std::sync::Arc;

use crate::ainfty::{AInfinity, TransferDiagram};
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::massey::KoszulModel;
use crate::monomial::{Guards, MonomialIdeal};
use crate::par;
use crate::rooting::RootingMap;
use crate::simplicial::Face;
use crate::with_field;

/// A pass/fail check with an optional 0-based generator pair as witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

/// Every coprime pair `m_i, m_j` has a third generator dividing `lcm(m_i, m_j)`.
pub fn gcd_condition(ideal: &MonomialIdeal) -> PairCheck {
    let r = ideal.len();
    for i in 0..r {
        for j in (i + 1)..r {
            let (a, b) = (ideal.generator(i), ideal.generator(j));
            if !a.is_coprime(b) {
                continue;
            }
            let l = a.lcm(b);
            let rescued = (0..r).any(|k| k != i && k != j && ideal.generator(k).divides(&l));
            if !rescued {
                return PairCheck {
                    holds: false,
                    witness: Some((i, j)),
                };
            }
        }
    }
    PairCheck {
        holds: true,
        witness: None,
    }
}

/// `π(lcm(m_i, m_j)) ∉ {m_i, m_j}` for every coprime pair.
pub fn pi_gcd(ideal: &MonomialIdeal, pi: &RootingMap) -> Result<PairCheck> {
    let r = ideal.len();
    for i in 0..r {
        for j in (i + 1)..r {
            let (a, b) = (ideal.generator(i), ideal.generator(j));
            if !a.is_coprime(b) {
                continue;
            }
            let v = pi.value(&a.lcm(b)).ok_or_else(|| {
                Error::InvalidRooting("lcm of a pair is missing from the lattice".into())
            })?;
            if v == i || v == j {
                return Ok(PairCheck {
                    holds: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(PairCheck {
        holds: true,
        witness: None,
    })
}

/// A term of `μ_n(args)` whose coefficient is a unit of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitTerm {
    pub n: usize,
    pub args: Vec<Face>,
    pub face: Face,
    pub scalar: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuMinimality {
    pub minimal: bool,
    /// Highest `n` inspected.
    pub n_max: usize,
    pub witness: Option<UnitTerm>,
}

fn first_unit_term(a: &AInfinity, n: usize, field: FieldConfig) -> Result<Option<UnitTerm>> {
    let tensors = a.positive_tensors(n);
    par::find_map_first(&tensors, |args| match a.mu(args) {
        Err(e) => Some(Err(e)),
        Ok(v) => v
            .terms()
            .find(|(_, e, c)| e.iter().all(|x| *x == 0) && !field.integer_is_zero(*c))
            .map(|(face, _, c)| {
                Ok(UnitTerm {
                    n,
                    args: args.clone(),
                    face,
                    scalar: c,
                })
            }),
    })
    .transpose()
}

/// Whether every `μ_n`, `2 ≤ n ≤ n_max`, maps positive-degree basis tensors
/// into `(x_1, …, x_m)F`. `μ_1 = d` is minimal exactly when `F` is.
pub fn mu_minimality_report(
    a: &AInfinity,
    n_max: usize,
    field: FieldConfig,
) -> Result<MuMinimality> {
    if let Some((face, facet)) = a.f().minimality().witness {
        return Ok(MuMinimality {
            minimal: false,
            n_max,
            witness: Some(UnitTerm {
                n: 1,
                args: vec![face],
                face: facet,
                scalar: 1,
            }),
        });
    }
    for n in 2..=n_max {
        if let Some(w) = first_unit_term(a, n, field)? {
            return Ok(MuMinimality {
                minimal: false,
                n_max,
                witness: Some(w),
            });
        }
    }
    Ok(MuMinimality {
        minimal: true,
        n_max,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCheck {
    pub holds: bool,
    /// Faces of `F` with `(μ_2 ⊗ 1)(u_I, u_J) ≠ 0`.
    pub witness: Option<(Face, Face)>,
    /// Agreement of the same test run on `H(T ⊗ k)` with its own basis.
    pub koszul_holds: bool,
    /// Class ids of a nonzero product in `H(T ⊗ k)`.
    pub koszul_witness: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Golod,
    NotGolod,
    /// The criteria disagree; this signals a bug, never a property of the ring.
    Inconsistent,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Golod => "Golod",
            Verdict::NotGolod => "NotGolod",
            Verdict::Inconsistent => "Inconsistent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolodReport {
    pub gcd_condition: PairCheck,
    pub pi_gcd: PairCheck,
    pub product_vanishes: ProductCheck,
    pub mu_minimal: MuMinimality,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

/// Three-way Golod test for the ring presented by `(I, π)`. Requires the
/// rooted resolution to be minimal.
pub fn golod_verdict(
    ideal: &MonomialIdeal,
    pi: &RootingMap,
    field: FieldConfig,
    guards: &Guards,
) -> Result<GolodReport> {
    let diagram = Arc::new(TransferDiagram::new(ideal, pi, guards)?);
    if let Some((face, facet)) = diagram.f().minimality().witness {
        return Err(Error::NotMinimalResolution {
            face: face.to_string(),
            facet: facet.to_string(),
        });
    }
    let a = AInfinity::new(diagram);
    golod_verdict_with(&a, field, guards)
}

/// As [`golod_verdict`], reusing an existing `A∞` structure.
pub fn golod_verdict_with(
    a: &AInfinity,
    field: FieldConfig,
    guards: &Guards,
) -> Result<GolodReport> {
    let ideal = a.diagram().ideal();
    let pi = a.diagram().rooting();
    if let Some((face, facet)) = a.f().minimality().witness {
        return Err(Error::NotMinimalResolution {
            face: face.to_string(),
            facet: facet.to_string(),
        });
    }
    let gcd = gcd_condition(ideal);
    let pig = pi_gcd(ideal, pi)?;

    let mu2 = first_unit_term(a, 2, field)?;
    let koszul =
        with_field!(field, f => KoszulModel::new(ideal, f, guards)?.nonvanishing_product()?);
    let product = ProductCheck {
        holds: mu2.is_none(),
        witness: mu2.map(|w| (w.args[0], w.args[1])),
        koszul_holds: koszul.is_none(),
        koszul_witness: koszul,
    };
    let mu = mu_minimality_report(a, a.degree_bound(), field)?;

    let votes = [
        gcd.holds,
        pig.holds,
        product.holds,
        product.koszul_holds,
        mu.minimal,
    ];
    let verdict = if votes.iter().all(|&v| v) {
        Verdict::Golod
    } else if votes.iter().all(|&v| !v) {
        Verdict::NotGolod
    } else {
        Verdict::Inconsistent
    };

    let mut warnings = Vec::new();
    let linear: Vec<String> = ideal
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.degree() == 1)
        .map(|(i, g)| format!("m{} = {}", i + 1, ideal.format(g)))
        .collect();
    if !linear.is_empty() {
        warnings.push(format!(
            "generators of degree 1 ({}): the ideal is not inside the square of the maximal ideal",
            linear.join(", ")
        ));
    }
    Ok(GolodReport {
        gcd_condition: gcd,
        pi_gcd: pig,
        product_vanishes: product,
        mu_minimal: mu,
        verdict,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{LcmLattice, VariableContext};
    use crate::rooting::lyubeznik_rooting;

    fn setup(vars: &[&str], gens: &[&str], order: &[usize]) -> (MonomialIdeal, RootingMap) {
        let ctx = VariableContext::new(vars).unwrap();
        let i = MonomialIdeal::parse(&ctx, gens).unwrap();
        let l = LcmLattice::build(&i, &Guards::default()).unwrap();
        let pi = lyubeznik_rooting(&i, &l, order).unwrap();
        (i, pi)
    }

    fn face(ix: &[usize]) -> Face {
        Face::from_one_based(ix, 64).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let (tri, pi) = setup(&["x", "y", "z"], &["x*y", "y*z", "x*z"], &[0, 1, 2]);
        assert!(gcd_condition(&tri).holds);
        assert!(pi_gcd(&tri, &pi).unwrap().holds);
        let (two, pi) = setup(&["x", "y"], &["x^2", "y^2"], &[1, 0]);
        assert_eq!(gcd_condition(&two).witness, Some((0, 1)));
        assert_eq!(pi_gcd(&two, &pi).unwrap().witness, Some((0, 1)));
    }

    #[test]
    fn triangle_is_golod() {
        let (i, pi) = setup(&["x", "y", "z"], &["x*y", "y*z", "x*z"], &[0, 1, 2]);
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &Guards::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Golod);
        assert!(r.warnings.is_empty());
        assert_eq!(r.mu_minimal.n_max, 2);
    }

    #[test]
    fn two_squares_are_not_golod() {
        let (i, pi) = setup(&["x", "y"], &["x^2", "y^2"], &[0, 1]);
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &Guards::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotGolod);
        let w = r.mu_minimal.witness.unwrap();
        assert_eq!(
            (w.n, w.args, w.face, w.scalar),
            (2, vec![face(&[1]), face(&[2])], face(&[1, 2]), 1)
        );
        assert_eq!(r.product_vanishes.witness, Some((face(&[1]), face(&[2]))));
    }

    #[test]
    fn mixed_generators() {
        let (i, pi) = setup(&["x", "y"], &["x^2", "x*y"], &[0, 1]);
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &Guards::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Golod);
    }

    #[test]
    fn linear_generator_warning() {
        let (i, pi) = setup(&["x", "y"], &["x", "y^2"], &[0, 1]);
        let r = golod_verdict(&i, &pi, FieldConfig::Rationals, &Guards::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotGolod);
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("m1 = x"));
    }

    #[test]
    fn non_minimal_rooting_is_rejected() {
        // The triangle is minimal under every rotation of the order.
        let ctx = VariableContext::new(&["x", "y", "z"]).unwrap();
        let i = MonomialIdeal::parse(&ctx, &["x*y", "y*z", "x*z"]).unwrap();
        let l = LcmLattice::build(&i, &Guards::default()).unwrap();
        for order in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
            let pi = lyubeznik_rooting(&i, &l, &order).unwrap();
            assert!(golod_verdict(&i, &pi, FieldConfig::Rationals, &Guards::default()).is_ok());
        }
        let ctx = VariableContext::new(&["a", "b", "c", "d"]).unwrap();
        let path = MonomialIdeal::parse(&ctx, &["a*b", "b*c", "c*d"]).unwrap();
        let l = LcmLattice::build(&path, &Guards::default()).unwrap();
        // bc last: {ab, cd} stays rooted and the whole Taylor complex survives.
        let pi = lyubeznik_rooting(&path, &l, &[0, 2, 1]).unwrap();
        let err =
            golod_verdict(&path, &pi, FieldConfig::Rationals, &Guards::default()).unwrap_err();
        assert!(matches!(err, Error::NotMinimalResolution { .. }));
    }
}
