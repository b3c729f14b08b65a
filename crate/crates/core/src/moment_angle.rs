//! Cohomology ranks of moment-angle complexes through
//! `H^*(Z_Δ; k) ≅ Tor^S(k[Δ], k)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::monomial::{Guards, MonomialIdeal, VariableContext};
use crate::resolution::{tor_betti_via_taylor, BettiEntry};
use crate::simplicial::{stanley_reisner_ideal, Face};

#[derive(Clone, Debug)]
pub struct MomentAngle {
    /// `None` when Δ is a full simplex (the Stanley–Reisner ideal is zero).
    pub ideal: Option<MonomialIdeal>,
    pub tor: Vec<BettiEntry>,
    /// `(cohomological degree, rank)`, ascending, nonzero ranks only.
    pub ranks: Vec<(usize, usize)>,
}

/// A class of `Tor_j` in squarefree multidegree with support size `s` sits in
/// `H^{2s − j}(Z_Δ)`.
pub fn moment_angle_ranks(
    facets: &[Face],
    m: usize,
    field: FieldConfig,
    guards: &Guards,
) -> Result<MomentAngle> {
    let ctx = VariableContext::numbered("x", m)?;
    let ideal = match stanley_reisner_ideal(facets, m, &ctx) {
        Ok(i) => i,
        Err(Error::NoNonFaces) => {
            return Ok(MomentAngle {
                ideal: None,
                tor: Vec::new(),
                ranks: vec![(0, 1)],
            })
        }
        Err(e) => return Err(e),
    };
    let tor = tor_betti_via_taylor(&ideal, field, guards)?;
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &tor {
        if !e.multidegree.is_squarefree() {
            return Err(Error::Internal(
                "non-squarefree multidegree in a Stanley–Reisner Tor".into(),
            ));
        }
        let s = e.multidegree.support_size();
        let deg = (2 * s)
            .checked_sub(e.j)
            .ok_or_else(|| Error::Internal("Tor degree exceeds twice the support".into()))?;
        *ranks.entry(deg).or_default() += e.rank;
    }
    Ok(MomentAngle {
        ideal: Some(ideal),
        tor,
        ranks: ranks.into_iter().filter(|(_, r)| *r > 0).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{reduced_homology_ranks, SimplicialComplex};

    fn face(ix: &[usize]) -> Face {
        Face::from_one_based(ix, 64).unwrap()
    }

    fn ranks(facets: &[&[usize]], m: usize) -> Vec<(usize, usize)> {
        let fs: Vec<Face> = facets.iter().map(|f| face(f)).collect();
        moment_angle_ranks(&fs, m, FieldConfig::Rationals, &Guards::default())
            .unwrap()
            .ranks
    }

    #[test]
    fn examples() {
        assert_eq!(ranks(&[&[1], &[2], &[3]], 3), vec![(0, 1), (3, 3), (4, 2)]);
        assert_eq!(ranks(&[&[1, 2, 3]], 3), vec![(0, 1)]);
        assert_eq!(ranks(&[&[1, 2], &[2, 3]], 3), vec![(0, 1), (3, 1)]);
        // boundary of a square: Z = S^3 × S^3
        assert_eq!(
            ranks(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 4),
            vec![(0, 1), (3, 2), (6, 1)]
        );
    }

    // Hochster: Tor_j(k[Δ], k) in squarefree degree W ≅ H̃^{|W|−j−1}(Δ_W).
    #[test]
    fn agrees_with_hochster() {
        let cases: Vec<(Vec<Face>, usize)> = vec![
            (vec![face(&[1]), face(&[2]), face(&[3])], 3),
            (
                vec![
                    face(&[1, 2]),
                    face(&[2, 3]),
                    face(&[3, 4]),
                    face(&[4, 5]),
                    face(&[1, 5]),
                ],
                5,
            ),
            (
                vec![
                    face(&[1, 2, 3]),
                    face(&[3, 4]),
                    face(&[4, 5]),
                    face(&[2, 5]),
                ],
                5,
            ),
            (vec![face(&[1, 2]), face(&[3, 4])], 4),
        ];
        for (facets, m) in cases {
            let q = FieldConfig::Rationals;
            let ma = moment_angle_ranks(&facets, m, q, &Guards::default()).unwrap();
            let complex = SimplicialComplex::from_facets(m, &facets).unwrap();
            let mut expected: BTreeMap<usize, usize> = BTreeMap::new();
            for bits in 0..(1u64 << m) {
                let w = Face::from_bits(bits);
                let h = reduced_homology_ranks(&complex.induced(w), q);
                // h[i + 1] = H̃_i; Tor_j at W comes from i = |W| − j − 1
                for (idx, &rank) in h.iter().enumerate() {
                    if rank == 0 {
                        continue;
                    }
                    let i = idx as isize - 1;
                    let j = w.len() as isize - i - 1;
                    let deg = 2 * w.len() as isize - j;
                    *expected.entry(deg as usize).or_default() += rank;
                }
            }
            let expected: Vec<(usize, usize)> = expected.into_iter().collect();
            assert_eq!(ma.ranks, expected, "{facets:?}");
        }
    }
}
