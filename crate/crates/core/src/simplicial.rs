//! Simplicial complexes on generator indices, reduced homology over a field,
//! the acyclicity criterion for simplicial resolutions, and Stanley-Reisner ideals.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldConfig};
use crate::linalg;
use crate::monomial::{Guards, LcmLattice, Monomial, MonomialIdeal, VariableContext};
use crate::par;
use crate::with_field;

/// A set of vertex indices stored as a bitmask (bit `i` is vertex `i + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        Face(1 << i)
    }

    pub fn from_zero_based(indices: &[usize]) -> Self {
        Face(indices.iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    /// Builds a face from 1-based indices, rejecting out-of-range or repeated entries.
    pub fn from_one_based(indices: &[usize], bound: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i == 0 || i > bound || i > 64 {
                return Err(Error::FaceOutOfRange { index: i, bound });
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Err(Error::InvalidInput(format!("repeated vertex {i} in face")));
            }
            bits |= b;
        }
        Ok(Face(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Face {
        Face(self.0 & !(1 << i))
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn one_based(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// The codimension-one faces `J^i` with the simplicial sign `(-1)^(i+1)`
    /// (`i` counted from 1 along the increasing order).
    pub fn boundary(self) -> impl Iterator<Item = (i64, Face)> {
        self.indices().enumerate().map(move |(pos, v)| {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            (sign, self.without(v))
        })
    }

    /// Number of elements of `self` strictly greater than `i`.
    fn count_above(self, i: usize) -> u32 {
        if i >= 63 {
            return 0;
        }
        (self.0 >> (i + 1)).count_ones()
    }

    /// Sign of the shuffle sorting the concatenation `self ++ other`; both must be disjoint.
    pub fn merge_sign(self, other: Face) -> i64 {
        debug_assert!(self.is_disjoint(other));
        let inversions: u32 = other.indices().map(|j| self.count_above(j)).sum();
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Exterior product `u_self * u_other` as a signed face, or `None` when they overlap.
    pub fn wedge(self, other: Face) -> Option<(i64, Face)> {
        if !self.is_disjoint(other) {
            return None;
        }
        Some((self.merge_sign(other), self.union(other)))
    }
}

/// Faces compare by size, then lexicographically on their increasing index sequences.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// A finite, subset-closed family of faces. The empty face is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nverts: usize,
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
}

impl SimplicialComplex {
    /// Accepts a subset-closed family; the empty face is added if missing.
    pub fn from_faces(nverts: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut set: HashSet<Face> = faces.into_iter().collect();
        set.insert(Face::EMPTY);
        for f in &set {
            if let Some(m) = f.max_index() {
                if m >= nverts {
                    return Err(Error::FaceOutOfRange {
                        index: m + 1,
                        bound: nverts,
                    });
                }
            }
            for (_, sub) in f.boundary() {
                if !set.contains(&sub) {
                    return Err(Error::InvalidInput(format!(
                        "face {f} present but its subface {sub} is missing"
                    )));
                }
            }
        }
        Ok(Self::from_closed_set(nverts, set))
    }

    fn from_closed_set(nverts: usize, set: HashSet<Face>) -> Self {
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort();
        let index = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        SimplicialComplex {
            nverts,
            faces,
            index,
        }
    }

    /// Closure of the given facets under taking subsets.
    pub fn from_facets(nverts: usize, facets: &[Face]) -> Result<Self> {
        let mut set = HashSet::new();
        set.insert(Face::EMPTY);
        for &f in facets {
            if let Some(m) = f.max_index() {
                if m >= nverts {
                    return Err(Error::FaceOutOfRange {
                        index: m + 1,
                        bound: nverts,
                    });
                }
            }
            if f.len() > 24 {
                return Err(Error::GuardExceeded {
                    what: "facet size",
                    limit: 24,
                    actual: f.len(),
                });
            }
            // enumerate submasks
            let bits = f.bits();
            let mut sub = bits;
            loop {
                set.insert(Face::from_bits(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        Ok(Self::from_closed_set(nverts, set))
    }

    pub fn full_simplex(nverts: usize) -> Self {
        let set = (0..(1u64 << nverts)).map(Face::from_bits).collect();
        Self::from_closed_set(nverts, set)
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    /// Faces sorted by size, then lexicographically.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains(&self, f: Face) -> bool {
        self.index.contains_key(&f)
    }

    pub fn index_of(&self, f: Face) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the largest face (`-1` for `{∅}`).
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    /// True when only the empty face is present.
    pub fn is_void(&self) -> bool {
        self.faces.iter().all(|f| f.is_empty())
    }

    pub fn faces_of_size(&self, k: usize) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied().filter(move |f| f.len() == k)
    }

    /// Count of faces by size `0..=dim+1`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = (self.dim() + 1) as usize;
        let mut v = vec![0; top + 1];
        for f in &self.faces {
            v[f.len()] += 1;
        }
        v
    }

    pub fn filter(&self, keep: impl Fn(Face) -> bool) -> Self {
        let set = self.faces.iter().copied().filter(|f| keep(*f)).collect();
        Self::from_closed_set(self.nverts, set)
    }

    /// Induced subcomplex on the vertex set `w`.
    pub fn induced(&self, w: Face) -> Self {
        self.filter(|f| f.is_subset(w))
    }

    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|f| (0..self.nverts).all(|v| f.contains(v) || !self.contains(f.with(v))))
            .collect()
    }
}

/// Reduced homology ranks `H̃_i` for `i = -1, …, dim` (vector index `i + 1`).
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldConfig) -> Vec<usize> {
    with_field!(field, f => reduced_homology_ranks_in(&f, complex))
}

fn reduced_homology_ranks_in<F: Field>(f: &F, complex: &SimplicialComplex) -> Vec<usize> {
    let sizes = complex.f_vector();
    let top = sizes.len() - 1;
    let by_size: Vec<Vec<Face>> = (0..=top)
        .map(|k| complex.faces_of_size(k).collect())
        .collect();
    // rank of the boundary map from faces of size k to size k-1
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let targets: HashMap<Face, usize> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let mut rows = vec![vec![f.zero(); by_size[k].len()]; by_size[k - 1].len()];
        for (c, face) in by_size[k].iter().enumerate() {
            for (s, sub) in face.boundary() {
                rows[targets[&sub]][c] = f.from_i64(s);
            }
        }
        ranks[k] = linalg::rank(f, &rows, by_size[k].len());
    }
    (0..=top)
        .map(|k| sizes[k] - ranks[k] - ranks[k + 1])
        .collect()
}

/// Simplicial complex on generator indices with faces labelled by lcm of their generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    complex: SimplicialComplex,
    labels: Vec<Monomial>,
}

impl LabeledComplex {
    pub fn new(ideal: &MonomialIdeal, complex: SimplicialComplex) -> Result<Self> {
        if complex.nverts() != ideal.len() {
            return Err(Error::LabelMismatch(format!(
                "complex on {} vertices but ideal has {} generators",
                complex.nverts(),
                ideal.len()
            )));
        }
        let labels = complex
            .faces()
            .iter()
            .map(|f| ideal.lcm_of_mask(f.bits()))
            .collect();
        Ok(LabeledComplex { complex, labels })
    }

    /// Checks the stored labels against the ideal.
    pub fn check_labels(&self, ideal: &MonomialIdeal) -> Result<()> {
        if self.complex.nverts() != ideal.len() {
            return Err(Error::LabelMismatch("vertex count differs".into()));
        }
        for (f, l) in self.complex.faces().iter().zip(&self.labels) {
            if *l != ideal.lcm_of_mask(f.bits()) {
                return Err(Error::LabelMismatch(format!("label of {f} is not the lcm")));
            }
        }
        Ok(())
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn faces(&self) -> &[Face] {
        self.complex.faces()
    }

    pub fn label(&self, f: Face) -> Option<&Monomial> {
        self.complex.index_of(f).map(|i| &self.labels[i])
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn contains(&self, f: Face) -> bool {
        self.complex.contains(f)
    }

    pub fn len(&self) -> usize {
        self.complex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    /// `Δ_μ`: faces whose label divides `mu`.
    pub fn restrict_to_multidegree(&self, mu: &Monomial) -> LabeledComplex {
        let keep: HashSet<Face> = self
            .complex
            .faces()
            .iter()
            .zip(&self.labels)
            .filter(|(_, l)| l.divides(mu))
            .map(|(f, _)| *f)
            .collect();
        let complex = self.complex.filter(|f| keep.contains(&f));
        let labels = complex
            .faces()
            .iter()
            .map(|f| self.labels[self.complex.index_of(*f).unwrap()].clone())
            .collect();
        LabeledComplex { complex, labels }
    }

    /// Largest face size.
    pub fn top_degree(&self) -> usize {
        self.complex.faces().last().map_or(0, |f| f.len())
    }
}

/// The full simplex on the generators of `ideal`.
pub fn full_simplex(ideal: &MonomialIdeal, guards: &Guards) -> Result<LabeledComplex> {
    guards.check_subsets(ideal.len())?;
    LabeledComplex::new(ideal, SimplicialComplex::full_simplex(ideal.len()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportVerdict {
    pub verdict: bool,
    pub witness: Option<Monomial>,
}

/// Whether `F_Δ` resolves `S/I`: every `Δ_μ` for `μ` in the lcm-lattice must be
/// void or acyclic. A generator missing from the vertex set fails with that generator.
pub fn is_supporting_resolution(
    delta: &LabeledComplex,
    ideal: &MonomialIdeal,
    field: FieldConfig,
    guards: &Guards,
) -> Result<SupportVerdict> {
    delta.check_labels(ideal)?;
    for i in 0..ideal.len() {
        if !delta.contains(Face::singleton(i)) {
            return Ok(SupportVerdict {
                verdict: false,
                witness: Some(ideal.generator(i).clone()),
            });
        }
    }
    let lattice = LcmLattice::build(ideal, guards)?;
    let witness = par::find_map_first(lattice.elements(), |mu| {
        (!restriction_is_acyclic(delta, mu, field)).then(|| mu.clone())
    });
    Ok(SupportVerdict {
        verdict: witness.is_none(),
        witness,
    })
}

/// `Δ_μ` is void or has vanishing reduced homology.
pub fn restriction_is_acyclic(delta: &LabeledComplex, mu: &Monomial, field: FieldConfig) -> bool {
    let sub = delta.restrict_to_multidegree(mu);
    sub.complex().is_void()
        || reduced_homology_ranks(sub.complex(), field)
            .iter()
            .all(|&h| h == 0)
}

/// Ideal of minimal non-faces of the complex generated by `facets` on vertices `1..=m`.
pub fn stanley_reisner_ideal(
    facets: &[Face],
    m: usize,
    ctx: &VariableContext,
) -> Result<MonomialIdeal> {
    if ctx.len() != m {
        return Err(Error::InvalidContext(format!(
            "{m} vertices need {m} variables, found {}",
            ctx.len()
        )));
    }
    if m > 63 {
        return Err(Error::GuardExceeded {
            what: "vertex count",
            limit: 63,
            actual: m,
        });
    }
    let complex = SimplicialComplex::from_facets(m, facets)?;
    let nonfaces = minimal_nonfaces(&complex);
    if nonfaces.is_empty() {
        return Err(Error::NoNonFaces);
    }
    let gens = nonfaces
        .into_iter()
        .map(|f| {
            let mut e = vec![0u32; m];
            for i in f.indices() {
                e[i] = 1;
            }
            Monomial::from_exponents(e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_minimal(ctx, gens)
}

pub fn minimal_nonfaces(complex: &SimplicialComplex) -> Vec<Face> {
    let mut out = HashSet::new();
    for &f in complex.faces() {
        for v in 0..complex.nverts() {
            if f.contains(v) {
                continue;
            }
            let g = f.with(v);
            if !complex.contains(g) && g.boundary().all(|(_, s)| complex.contains(s)) {
                out.insert(g);
            }
        }
    }
    let mut out: Vec<Face> = out.into_iter().collect();
    out.sort();
    out
}
