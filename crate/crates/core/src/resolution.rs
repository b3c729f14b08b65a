//! The chain complex `F_Δ` of a labeled complex, the Taylor resolution with
//! its dga product, minimality, and multigraded Tor via `T ⊗ k`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::chain::{laurent_of, laurent_quotient, TaylorElement};
use crate::error::{Error, Result};
use crate::field::{Field, FieldConfig};
use crate::linalg;
use crate::monomial::{Guards, Monomial, MonomialIdeal};
use crate::par;
use crate::simplicial::{full_simplex, Face, LabeledComplex};
use crate::with_field;

/// One entry of `d(u_J)`: `sign · coeff · u_target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub sign: i64,
    pub coeff: Monomial,
    pub target: Face,
}

/// `F_Δ` with `d(u_J) = Σ (−1)^{i+1} (m_J / m_{J^i}) u_{J^i}`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    ideal: MonomialIdeal,
    complex: LabeledComplex,
    diff: Vec<Vec<Incidence>>,
}

impl FreeComplex {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn complex(&self) -> &LabeledComplex {
        &self.complex
    }

    pub fn faces(&self) -> &[Face] {
        self.complex.faces()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.complex.contains(f)
    }

    pub fn label(&self, f: Face) -> Option<&Monomial> {
        self.complex.label(f)
    }

    /// Incidences of `d(u_face)`, in deletion order.
    pub fn incidences(&self, f: Face) -> Option<&[Incidence]> {
        self.complex
            .complex()
            .index_of(f)
            .map(|i| &self.diff[i][..])
    }

    /// Free ranks by homological degree `0..=top`.
    pub fn ranks(&self) -> Vec<usize> {
        self.complex.complex().f_vector()
    }

    pub fn top_degree(&self) -> usize {
        self.complex.top_degree()
    }

    /// `d` extended S-linearly; faces outside the complex are rejected.
    pub fn d(&self, u: &TaylorElement) -> Result<TaylorElement> {
        u.map_linear(|f| {
            let inc = self
                .incidences(f)
                .ok_or_else(|| Error::InvalidInput(format!("face {f} not in the complex")))?;
            let mut out = TaylorElement::zero(self.ideal.nvars());
            for i in inc {
                out.add_term(i.sign, laurent_of(&i.coeff), i.target)?;
            }
            Ok(out)
        })
    }

    /// Matrix of `d_k : F_k → F_{k−1}`; rows and columns follow the face order.
    pub fn differential_matrix(&self, k: usize) -> DenseMatrix {
        let cols: Vec<Face> = self.complex.complex().faces_of_size(k).collect();
        let rows: Vec<Face> = if k == 0 {
            Vec::new()
        } else {
            self.complex.complex().faces_of_size(k - 1).collect()
        };
        let mut entries = vec![vec![String::from("0"); cols.len()]; rows.len()];
        let row_of: HashMap<Face, usize> = rows.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        for (c, f) in cols.iter().enumerate() {
            for inc in self.incidences(*f).unwrap() {
                let mono = self.ideal.format(&inc.coeff);
                entries[row_of[&inc.target]][c] = if inc.sign < 0 {
                    format!("-{mono}")
                } else {
                    mono
                };
            }
        }
        DenseMatrix {
            k,
            rows,
            cols,
            entries,
        }
    }

    /// First incidence with a unit coefficient, if any.
    pub fn minimality(&self) -> MinimalityVerdict {
        for (idx, f) in self.faces().iter().enumerate() {
            for inc in &self.diff[idx] {
                if inc.coeff.is_one() {
                    return MinimalityVerdict {
                        verdict: false,
                        witness: Some((*f, inc.target)),
                    };
                }
            }
        }
        MinimalityVerdict {
            verdict: true,
            witness: None,
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.minimality().verdict
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub verdict: bool,
    /// `(J, J^i)` whose coefficient is 1.
    pub witness: Option<(Face, Face)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseMatrix {
    pub k: usize,
    #[serde(skip)]
    pub rows: Vec<Face>,
    #[serde(skip)]
    pub cols: Vec<Face>,
    pub entries: Vec<Vec<String>>,
}

impl DenseMatrix {
    /// Bracketed rows with aligned columns, one row per line.
    pub fn render(&self) -> String {
        let ncols = self.cols.len();
        let widths: Vec<usize> = (0..ncols)
            .map(|c| self.entries.iter().map(|r| r[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = format!("d_{} =", self.k);
        if self.entries.is_empty() || ncols == 0 {
            out.push_str(" 0\n");
            return out;
        }
        out.push('\n');
        for row in &self.entries {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(e, w)| format!("{e:>w$}"))
                .collect();
            out.push_str(&format!("  [ {} ]\n", cells.join("  ")));
        }
        out
    }
}

/// Assembles `F_Δ` and checks `d² = 0` over S.
pub fn build_chain_complex(delta: &LabeledComplex, ideal: &MonomialIdeal) -> Result<FreeComplex> {
    delta.check_labels(ideal)?;
    let mut diff = Vec::with_capacity(delta.len());
    for (f, label) in delta.faces().iter().zip(delta.labels()) {
        let mut inc = Vec::new();
        for (sign, sub) in f.boundary() {
            let sub_label = delta
                .label(sub)
                .ok_or_else(|| Error::LabelMismatch(format!("{sub} missing below {f}")))?;
            let coeff = label.div(sub_label).ok_or_else(|| {
                Error::LabelMismatch(format!("label of {sub} does not divide label of {f}"))
            })?;
            inc.push(Incidence {
                sign,
                coeff,
                target: sub,
            });
        }
        diff.push(inc);
    }
    let fc = FreeComplex {
        ideal: ideal.clone(),
        complex: delta.clone(),
        diff,
    };
    check_d_squared(&fc)?;
    Ok(fc)
}

fn check_d_squared(fc: &FreeComplex) -> Result<()> {
    for f in fc.faces() {
        let u = TaylorElement::basis(*f, fc.ideal.nvars());
        let dd = fc.d(&fc.d(&u)?)?;
        if !dd.is_zero() {
            return Err(Error::Internal(format!("d∘d ≠ 0 on u{f}")));
        }
    }
    Ok(())
}

/// `T`: the chain complex of the full simplex on the generators.
pub fn taylor_resolution(ideal: &MonomialIdeal, guards: &Guards) -> Result<FreeComplex> {
    build_chain_complex(&full_simplex(ideal, guards)?, ideal)
}

/// Taylor differential of an arbitrary element, computed from labels directly.
pub fn taylor_d(ideal: &MonomialIdeal, u: &TaylorElement) -> Result<TaylorElement> {
    u.map_linear(|f| {
        let m = ideal.lcm_of_mask(f.bits());
        let mut out = TaylorElement::zero(ideal.nvars());
        for (s, g) in f.boundary() {
            let c = laurent_quotient(&m, &ideal.lcm_of_mask(g.bits()))?;
            out.add_term(s, c, g)?;
        }
        Ok(out)
    })
}

/// `u_I · u_J = sgn(I,J) (m_I m_J / m_{I∪J}) u_{I∪J}`, zero when `I ∩ J ≠ ∅`.
pub fn taylor_basis_product(
    ideal: &MonomialIdeal,
    a: Face,
    b: Face,
) -> Result<Option<(i64, Monomial, Face)>> {
    let Some((s, u)) = a.wedge(b) else {
        return Ok(None);
    };
    let num = ideal
        .lcm_of_mask(a.bits())
        .mul(&ideal.lcm_of_mask(b.bits()))?;
    let coeff = num
        .div(&ideal.lcm_of_mask(u.bits()))
        .ok_or_else(|| Error::Internal("lcm does not divide the product".into()))?;
    Ok(Some((s, coeff, u)))
}

/// Bilinear extension of the Taylor product.
pub fn taylor_product(
    ideal: &MonomialIdeal,
    a: &TaylorElement,
    b: &TaylorElement,
) -> Result<TaylorElement> {
    let n = ideal.nvars();
    let mut out = TaylorElement::zero(n);
    for (fa, ea, sa) in a.terms() {
        for (fb, eb, sb) in b.terms() {
            if let Some((s, coeff, u)) = taylor_basis_product(ideal, fa, fb)? {
                let scalar = sa
                    .checked_mul(sb)
                    .and_then(|v| v.checked_mul(s))
                    .ok_or(Error::CoefficientOverflow)?;
                let mut e = laurent_of(&coeff);
                for ((x, y), z) in e.iter_mut().zip(ea).zip(eb) {
                    *x = x
                        .checked_add(*y)
                        .and_then(|v| v.checked_add(*z))
                        .ok_or(Error::ExponentOverflow)?;
                }
                out.add_term(scalar, e, u)?;
            }
        }
    }
    Ok(out)
}

/// Faces of the Taylor complex sharing one label; the differential of
/// `T ⊗ k` keeps exactly the incidences inside a strand.
#[derive(Clone, Debug)]
pub struct Strand {
    pub label: Monomial,
    /// Faces grouped by cardinality, each group in face order.
    pub faces: BTreeMap<usize, Vec<Face>>,
}

impl Strand {
    pub fn faces_of(&self, k: usize) -> &[Face] {
        self.faces.get(&k).map_or(&[], |v| &v[..])
    }

    /// Matrix (rows = faces of size k−1, columns = faces of size k) of the
    /// strand differential over `f`.
    pub fn boundary_rows<F: Field>(&self, f: &F, k: usize) -> Vec<Vec<F::Elem>> {
        let src = self.faces_of(k);
        let dst = if k == 0 {
            &[][..]
        } else {
            self.faces_of(k - 1)
        };
        let row_of: HashMap<Face, usize> = dst.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let mut rows = vec![vec![f.zero(); src.len()]; dst.len()];
        for (c, face) in src.iter().enumerate() {
            for (s, g) in face.boundary() {
                if let Some(&r) = row_of.get(&g) {
                    rows[r][c] = f.from_i64(s);
                }
            }
        }
        rows
    }
}

/// All strands of `T ⊗ k`, ordered by label.
pub fn koszul_strands(ideal: &MonomialIdeal, guards: &Guards) -> Result<Vec<Strand>> {
    guards.check_subsets(ideal.len())?;
    let r = ideal.len();
    let mut by_label: BTreeMap<Monomial, BTreeMap<usize, Vec<Face>>> = BTreeMap::new();
    for bits in 0..(1u64 << r) {
        let f = Face::from_bits(bits);
        by_label
            .entry(ideal.lcm_of_mask(bits))
            .or_default()
            .entry(f.len())
            .or_default()
            .push(f);
    }
    Ok(by_label
        .into_iter()
        .map(|(label, mut faces)| {
            for v in faces.values_mut() {
                v.sort();
            }
            Strand { label, faces }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiEntry {
    pub multidegree: Monomial,
    pub j: usize,
    pub rank: usize,
}

/// Multigraded Betti numbers `dim Tor_j^S(S/I, k)_μ`, sorted by multidegree then `j`.
pub fn tor_betti_via_taylor(
    ideal: &MonomialIdeal,
    field: FieldConfig,
    guards: &Guards,
) -> Result<Vec<BettiEntry>> {
    let strands = koszul_strands(ideal, guards)?;
    let per_strand = par::map(
        &strands,
        |s| with_field!(field, f => strand_homology_dims(&f, s)),
    );
    let mut out = Vec::new();
    for (s, dims) in strands.iter().zip(per_strand) {
        for (j, rank) in dims {
            if rank > 0 {
                out.push(BettiEntry {
                    multidegree: s.label.clone(),
                    j,
                    rank,
                });
            }
        }
    }
    Ok(out)
}

/// `(degree, dim H)` for each degree present in the strand.
pub fn strand_homology_dims<F: Field>(f: &F, s: &Strand) -> Vec<(usize, usize)> {
    let degrees: Vec<usize> = s.faces.keys().copied().collect();
    let mut rank_of = HashMap::new();
    for &k in &degrees {
        if k > 0 && s.faces.contains_key(&(k - 1)) {
            let rows = s.boundary_rows(f, k);
            rank_of.insert(k, linalg::rank(f, &rows, s.faces_of(k).len()));
        }
    }
    degrees
        .iter()
        .map(|&k| {
            let n = s.faces_of(k).len();
            let out_rank = rank_of.get(&k).copied().unwrap_or(0);
            let in_rank = rank_of.get(&(k + 1)).copied().unwrap_or(0);
            (k, n - out_rank - in_rank)
        })
        .collect()
}

/// Total Betti numbers `β_j = Σ_μ β_{j,μ}`.
pub fn betti_totals(entries: &[BettiEntry]) -> Vec<usize> {
    let top = entries.iter().map(|e| e.j).max().unwrap_or(0);
    let mut v = vec![0; top + 1];
    for e in entries {
        v[e.j] += e.rank;
    }
    v
}
