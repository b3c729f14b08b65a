//! Massey products on `Tor^S(R, k) = H(T ⊗ k)`, computed from defining
//! systems in the dga `T ⊗ k`, together with the `(B_r)` check and the
//! comparison against the transferred operations `μ_n ⊗ 1`.
//!
//! Elements of `T ⊗ k` are sparse maps from faces to field elements. All
//! linear solves happen inside a single strand (faces sharing one label),
//! where the differential is a small matrix of ±1 entries.

use std::collections::{BTreeMap, HashMap};

use crate::ainfty::AInfinity;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Basis};
use crate::monomial::{Guards, Monomial, MonomialIdeal};
use crate::par;
use crate::resolution::{koszul_strands, taylor_basis_product, Strand};
use crate::simplicial::Face;

/// An element of `T ⊗ k`.
pub type Chain<F> = BTreeMap<Face, <F as Field>::Elem>;

/// A cycle of `T ⊗ k` together with its homological degree (needed for signs
/// even when the chain is zero).
#[derive(Clone, Debug)]
pub struct Cycle<F: Field> {
    pub degree: usize,
    pub chain: Chain<F>,
}

#[derive(Clone, Debug)]
struct DegreeData<F: Field> {
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
    /// Columns of `d: C_k → C_{k−1}`.
    d_columns: Vec<Vec<F::Elem>>,
    /// Boundaries first, then the chosen representatives.
    class_basis: Basis<F>,
    boundary_rank: usize,
    /// Global class ids of the representatives.
    class_ids: Vec<usize>,
}

#[derive(Clone, Debug)]
struct StrandData<F: Field> {
    label: Monomial,
    degrees: BTreeMap<usize, DegreeData<F>>,
}

/// A basis element of `Tor^S(R, k)`.
#[derive(Clone, Debug)]
pub struct HomologyClass<F: Field> {
    pub id: usize,
    pub multidegree: Monomial,
    pub degree: usize,
    pub representative: Chain<F>,
}

/// `T ⊗ k` with a chosen homology basis: per strand and degree, cycle
/// representatives completing a basis of the boundaries.
#[derive(Clone, Debug)]
pub struct KoszulModel<F: Field> {
    ideal: MonomialIdeal,
    field: F,
    guards: Guards,
    strands: Vec<StrandData<F>>,
    strand_of: HashMap<Monomial, usize>,
    classes: Vec<HomologyClass<F>>,
    /// Class ids of each homological degree, in id order.
    by_degree: BTreeMap<usize, Vec<usize>>,
    /// Position of a class inside its degree.
    slot: Vec<usize>,
}

impl<F: Field> KoszulModel<F> {
    pub fn new(ideal: &MonomialIdeal, field: F, guards: &Guards) -> Result<Self> {
        let strands = koszul_strands(ideal, guards)?;
        let built = par::map(&strands, |s| strand_data(&field, s));
        let mut strand_data: Vec<StrandData<F>> = built;

        // Classes sorted by degree, then by the leading face of the representative.
        let mut pending = Vec::new();
        for (si, s) in strand_data.iter().enumerate() {
            for (&k, dd) in &s.degrees {
                for (ri, v) in dd.class_basis.vectors()[dd.boundary_rank..]
                    .iter()
                    .enumerate()
                {
                    let chain = to_chain(&field, &dd.faces, v);
                    let lead = *chain.keys().next().expect("representatives are nonzero");
                    pending.push((k, lead, si, ri, chain));
                }
            }
        }
        pending.sort_by_key(|a| (a.0, a.1, a.2, a.3));

        let mut classes = Vec::with_capacity(pending.len());
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut slot = Vec::with_capacity(pending.len());
        for (k, _, si, ri, chain) in pending {
            let id = classes.len();
            let dd = strand_data[si].degrees.get_mut(&k).expect("degree present");
            if dd.class_ids.len() <= ri {
                dd.class_ids.resize(ri + 1, usize::MAX);
            }
            dd.class_ids[ri] = id;
            let list = by_degree.entry(k).or_default();
            slot.push(list.len());
            list.push(id);
            classes.push(HomologyClass {
                id,
                multidegree: strand_data[si].label.clone(),
                degree: k,
                representative: chain,
            });
        }
        let strand_of = strand_data
            .iter()
            .enumerate()
            .map(|(i, s)| (s.label.clone(), i))
            .collect();
        Ok(KoszulModel {
            ideal: ideal.clone(),
            field,
            guards: *guards,
            strands: strand_data,
            strand_of,
            classes,
            by_degree,
            slot,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn classes(&self) -> &[HomologyClass<F>] {
        &self.classes
    }

    /// Classes of positive homological degree (`Tor_{≥1}`).
    pub fn positive_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.degree > 0)
            .map(|c| c.id)
            .collect()
    }

    pub fn class_ids_in_degree(&self, k: usize) -> &[usize] {
        self.by_degree.get(&k).map_or(&[], |v| &v[..])
    }

    /// `dim Tor_k` summed over multidegrees, indexed by `k`.
    pub fn dims(&self) -> Vec<usize> {
        let top = self.by_degree.keys().copied().max().unwrap_or(0);
        (0..=top)
            .map(|k| self.class_ids_in_degree(k).len())
            .collect()
    }

    /// `(multidegree, degree, dim)` for every nonzero graded piece.
    pub fn graded_dims(&self) -> Vec<(Monomial, usize, usize)> {
        let mut out = Vec::new();
        for s in &self.strands {
            for (&k, dd) in &s.degrees {
                if !dd.class_ids.is_empty() {
                    out.push((s.label.clone(), k, dd.class_ids.len()));
                }
            }
        }
        out
    }

    pub fn cycle_of_class(&self, id: usize) -> Cycle<F> {
        let c = &self.classes[id];
        Cycle {
            degree: c.degree,
            chain: c.representative.clone(),
        }
    }

    /// `u_J` as an element of `T ⊗ k`.
    pub fn face_cycle(&self, face: Face) -> Result<Cycle<F>> {
        let mut chain = Chain::<F>::new();
        chain.insert(face, self.field.one());
        if !self.d(&chain).is_empty() {
            return Err(Error::InvalidInput(format!(
                "u{face} is not a cycle of T ⊗ k"
            )));
        }
        Ok(Cycle {
            degree: face.len(),
            chain,
        })
    }

    fn label(&self, f: Face) -> Monomial {
        self.ideal.lcm_of_mask(f.bits())
    }

    /// Differential of `T ⊗ k`: only label-preserving incidences survive.
    pub fn d(&self, x: &Chain<F>) -> Chain<F> {
        let f = &self.field;
        let mut out = Chain::<F>::new();
        for (face, c) in x {
            let m = self.label(*face);
            for (s, g) in face.boundary() {
                if self.label(g) == m {
                    add_into(f, &mut out, g, &f.mul(&f.from_i64(s), c));
                }
            }
        }
        out
    }

    /// Product of `T ⊗ k`: `u_I u_J = sgn(I,J) u_{I∪J}` when `I ∩ J = ∅` and
    /// `m_I m_J = m_{I∪J}`, and zero otherwise.
    pub fn product(&self, x: &Chain<F>, y: &Chain<F>) -> Result<Chain<F>> {
        let f = &self.field;
        let mut out = Chain::<F>::new();
        for (a, ca) in x {
            for (b, cb) in y {
                if let Some((s, coeff, u)) = taylor_basis_product(&self.ideal, *a, *b)? {
                    if coeff.is_one() {
                        let v = f.mul(&f.from_i64(s), &f.mul(ca, cb));
                        add_into(f, &mut out, u, &v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of the class of the cycle `z` (all faces of size `k`) in
    /// the basis of `Tor_k`.
    pub fn class_of(&self, k: usize, z: &Chain<F>) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let ids = self.class_ids_in_degree(k);
        let mut out = vec![f.zero(); ids.len()];
        for (label, part) in self.split_by_label(k, z)? {
            let Some(&si) = self.strand_of.get(&label) else {
                return Err(Error::Internal("label outside the lcm lattice".into()));
            };
            let dd = &self.strands[si].degrees[&k];
            let v = dense(f, dd, &part);
            let coords = dd
                .class_basis
                .coordinates(&v)
                .ok_or_else(|| Error::Internal("class_of applied to a non-cycle".into()))?;
            for (c, &id) in coords[dd.boundary_rank..].iter().zip(&dd.class_ids) {
                out[self.slot[id]] = c.clone();
            }
        }
        Ok(out)
    }

    /// Some `x` with `d x = y`, where `y` has all faces of size `k − 1`.
    pub fn solve_boundary(&self, k: usize, y: &Chain<F>) -> Result<Option<Chain<F>>> {
        let f = &self.field;
        let mut out = Chain::<F>::new();
        if k == 0 {
            return Ok(if y.is_empty() { Some(out) } else { None });
        }
        for (label, part) in self.split_by_label(k - 1, y)? {
            let Some(&si) = self.strand_of.get(&label) else {
                return Err(Error::Internal("label outside the lcm lattice".into()));
            };
            let s = &self.strands[si];
            let (Some(src), Some(dst)) = (s.degrees.get(&k), s.degrees.get(&(k - 1))) else {
                return Ok(None);
            };
            let b = dense(f, dst, &part);
            let Some(x) = linalg::solve(f, &src.d_columns, &b) else {
                return Ok(None);
            };
            for (face, c) in src.faces.iter().zip(x) {
                if !f.is_zero(&c) {
                    out.insert(*face, c);
                }
            }
        }
        Ok(Some(out))
    }

    fn split_by_label(&self, k: usize, z: &Chain<F>) -> Result<BTreeMap<Monomial, Chain<F>>> {
        let mut parts: BTreeMap<Monomial, Chain<F>> = BTreeMap::new();
        for (face, c) in z {
            if face.len() != k {
                return Err(Error::Internal(format!("u{face} is not of degree {k}")));
            }
            if !self.field.is_zero(c) {
                parts
                    .entry(self.label(*face))
                    .or_default()
                    .insert(*face, c.clone());
            }
        }
        Ok(parts)
    }

    fn bar(&self, degree: usize, x: &Chain<F>) -> Chain<F> {
        if degree % 2 == 1 {
            x.clone()
        } else {
            let f = &self.field;
            x.iter().map(|(k, v)| (*k, f.neg(v))).collect()
        }
    }

    /// `⟨α₁, …, α_n⟩` for the classes of the given cycles.
    pub fn massey_product(&self, cycles: &[Cycle<F>]) -> Result<MasseyResult<F>> {
        let n = cycles.len();
        if n < 2 {
            return Err(Error::InvalidInput(
                "a Massey product needs at least two classes".into(),
            ));
        }
        if n > self.guards.massey_arity {
            return Err(Error::GuardExceeded {
                what: "Massey product arity",
                limit: self.guards.massey_arity,
                actual: n,
            });
        }
        for c in cycles {
            if !self.d(&c.chain).is_empty() {
                return Err(Error::InvalidInput("Massey products need cycles".into()));
            }
        }
        let mut memo = HashMap::new();
        self.massey_range(cycles, 0, n, &mut memo)
    }

    fn massey_range(
        &self,
        cycles: &[Cycle<F>],
        lo: usize,
        hi: usize,
        memo: &mut HashMap<(usize, usize), MasseyResult<F>>,
    ) -> Result<MasseyResult<F>> {
        if let Some(r) = memo.get(&(lo, hi)) {
            return Ok(r.clone());
        }
        let r = self.massey_uncached(&cycles[lo..hi], lo, memo, cycles)?;
        memo.insert((lo, hi), r.clone());
        Ok(r)
    }

    fn massey_uncached(
        &self,
        cs: &[Cycle<F>],
        offset: usize,
        memo: &mut HashMap<(usize, usize), MasseyResult<F>>,
        all: &[Cycle<F>],
    ) -> Result<MasseyResult<F>> {
        let f = &self.field;
        let n = cs.len();
        let degree = cs.iter().map(|c| c.degree).sum::<usize>() + n - 2;
        if n == 2 {
            let v = self.product(&cs[0].chain, &cs[1].chain)?;
            let rep = self.class_of(degree, &v)?;
            let contains_zero = rep.iter().all(|x| f.is_zero(x));
            return Ok(MasseyResult {
                arity: 2,
                degree,
                defined: true,
                undefined_at: None,
                representative: Some(rep),
                indeterminacy: Vec::new(),
                exact: true,
                contains_zero,
            });
        }

        // Every proper consecutive sub-product must be defined and contain zero.
        for len in 2..n {
            for i in 0..=(n - len) {
                let sub = self.massey_range(all, offset + i, offset + i + len, memo)?;
                if !(sub.defined && sub.contains_zero) {
                    return Ok(MasseyResult::undefined(n, degree, (i, i + len)));
                }
            }
        }

        // deg a_ij = Σ_{i<k≤j} deg α_k + (j − i − 1)
        let deg = |i: usize, j: usize| -> usize {
            cs[i..j].iter().map(|c| c.degree).sum::<usize>() + (j - i - 1)
        };
        let mut a: HashMap<(usize, usize), Chain<F>> = HashMap::new();
        for (i, c) in cs.iter().enumerate() {
            a.insert((i, i + 1), c.chain.clone());
        }
        let rhs = |a: &HashMap<(usize, usize), Chain<F>>, i: usize, j: usize| -> Result<Chain<F>> {
            let mut out = Chain::<F>::new();
            for k in (i + 1)..j {
                let p = self.product(&self.bar(deg(i, k), &a[&(i, k)]), &a[&(k, j)])?;
                add_chain(f, &mut out, &p);
            }
            Ok(out)
        };

        for len in 2..=n {
            let entries: Vec<(usize, usize)> = if len == n {
                vec![(0, n)]
            } else {
                (0..=(n - len)).map(|i| (i, i + len)).collect()
            };
            let mut base: Vec<Chain<F>> = entries
                .iter()
                .map(|&(i, j)| rhs(&a, i, j))
                .collect::<Result<_>>()?;

            // Free cycles of the previous level shift these right-hand sides affinely.
            let mut effects: Vec<((usize, usize), usize, Vec<Chain<F>>)> = Vec::new();
            if len >= 3 {
                for p in 0..=(n - len + 1) {
                    let e = (p, p + len - 1);
                    let de = deg(e.0, e.1);
                    for &cid in self.class_ids_in_degree(de) {
                        let h = &self.classes[cid].representative;
                        let mut per_entry = Vec::with_capacity(entries.len());
                        for &(i, j) in &entries {
                            let mut v = Chain::<F>::new();
                            if e == (i + 1, j) {
                                add_chain(
                                    f,
                                    &mut v,
                                    &self.product(&self.bar(deg(i, i + 1), &a[&(i, i + 1)]), h)?,
                                );
                            }
                            if e == (i, j - 1) {
                                add_chain(
                                    f,
                                    &mut v,
                                    &self.product(&self.bar(de, h), &a[&(j - 1, j)])?,
                                );
                            }
                            per_entry.push(v);
                        }
                        effects.push((e, cid, per_entry));
                    }
                }
            }

            let target_degrees: Vec<usize> = entries.iter().map(|&(i, j)| deg(i, j) - 1).collect();
            let stack = |chains: &[Chain<F>]| -> Result<Vec<F::Elem>> {
                let mut v = Vec::new();
                for (c, &k) in chains.iter().zip(&target_degrees) {
                    v.extend(self.class_of(k, c)?);
                }
                Ok(v)
            };
            let b = stack(&base)?;
            let columns: Vec<Vec<F::Elem>> = effects
                .iter()
                .map(|(_, _, per)| stack(per))
                .collect::<Result<_>>()?;

            if len == n {
                let mut span = Basis::new(f.clone(), b.len());
                for c in &columns {
                    span.insert(c.clone());
                }
                let contains_zero = span.contains(&b);
                return Ok(MasseyResult {
                    arity: n,
                    degree,
                    defined: true,
                    undefined_at: None,
                    representative: Some(b),
                    indeterminacy: span.vectors().to_vec(),
                    exact: n == 3,
                    contains_zero,
                });
            }

            if len >= 3 {
                let neg_b: Vec<F::Elem> = b.iter().map(|x| f.neg(x)).collect();
                let Some(x) = linalg::solve(f, &columns, &neg_b) else {
                    return Ok(MasseyResult::no_system(n, degree));
                };
                for ((e, cid, per), xi) in effects.iter().zip(&x) {
                    if f.is_zero(xi) {
                        continue;
                    }
                    let h = &self.classes[*cid].representative;
                    let entry = a.get_mut(e).expect("previous level is filled");
                    add_chain(f, entry, &scale(f, xi, h));
                    for (bv, pv) in base.iter_mut().zip(per) {
                        add_chain(f, bv, &scale(f, xi, pv));
                    }
                }
            }
            for ((i, j), r) in entries.iter().zip(&base) {
                let Some(x) = self.solve_boundary(deg(*i, *j), r)? else {
                    if len == 2 {
                        return Err(Error::Internal(
                            "a vanishing product is not a boundary".into(),
                        ));
                    }
                    return Ok(MasseyResult::no_system(n, degree));
                };
                a.insert((*i, *j), x);
            }
        }
        unreachable!("the loop returns at len == n")
    }

    /// First pair of positive-degree basis classes with nonzero product.
    pub fn nonvanishing_product(&self) -> Result<Option<(usize, usize)>> {
        let pos = self.positive_classes();
        let pairs: Vec<(usize, usize)> = pos
            .iter()
            .flat_map(|&i| pos.iter().map(move |&j| (i, j)))
            .collect();
        let found = par::find_map_first(&pairs, |&(i, j)| {
            let p = self.product(
                &self.classes[i].representative,
                &self.classes[j].representative,
            );
            match p {
                Ok(p) if p.is_empty() => None,
                Ok(p) => {
                    let k = self.classes[i].degree + self.classes[j].degree;
                    match self.class_of(k, &p) {
                        Ok(c) if c.iter().all(|x| self.field.is_zero(x)) => None,
                        Ok(_) => Some(Ok((i, j))),
                        Err(e) => Some(Err(e)),
                    }
                }
                Err(e) => Some(Err(e)),
            }
        });
        found.transpose()
    }

    /// Condition `(B_r)` on the positive-degree classes: every k-fold Massey
    /// product, `k ≤ r_max`, is defined and equal to `{0}`.
    ///
    /// Levels are checked in order, so when level `k` runs `(B_{k−1})` already
    /// holds and the product is a single class (May's lemma). That class is
    /// homogeneous of multidegree `∏ m(α_i)`, so tuples whose target graded
    /// piece of `Tor` is zero hold without a solve.
    pub fn br_condition(&self, r_max: usize) -> Result<BrReport> {
        let pos = self.positive_classes();
        if pos.len() > self.guards.massey_classes {
            return Err(Error::GuardExceeded {
                what: "Massey classes",
                limit: self.guards.massey_classes,
                actual: pos.len(),
            });
        }
        if r_max > self.guards.massey_arity {
            return Err(Error::GuardExceeded {
                what: "Massey product arity",
                limit: self.guards.massey_arity,
                actual: r_max,
            });
        }
        let mut levels = Vec::new();
        for k in 2..=r_max {
            let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..k {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        pos.iter().map(move |&c| {
                            let mut t = t.clone();
                            t.push(c);
                            t
                        })
                    })
                    .collect();
            }
            let total = tuples.len();
            let live: Vec<Vec<usize>> = tuples
                .into_iter()
                .filter(|t| self.target_nonzero(t))
                .collect();
            let failure = par::find_map_first(&live, |t| {
                let cycles: Vec<Cycle<F>> = t.iter().map(|&c| self.cycle_of_class(c)).collect();
                match self.massey_product(&cycles) {
                    Err(e) => Some(Err(e)),
                    Ok(r) => {
                        let reason = if !r.defined {
                            Some(BrFailureKind::Undefined)
                        } else if r.representative.is_none() {
                            Some(BrFailureKind::NoDefiningSystem)
                        } else if !r.is_zero_set(&self.field) {
                            Some(BrFailureKind::Nonzero)
                        } else {
                            None
                        };
                        reason.map(|kind| {
                            Ok(BrFailure {
                                k,
                                classes: t.clone(),
                                kind,
                            })
                        })
                    }
                }
            })
            .transpose()?;
            levels.push(BrLevel {
                k,
                tuples: total,
                solved: live.len(),
            });
            if let Some(fail) = failure {
                return Ok(BrReport {
                    r_max,
                    holds: false,
                    levels,
                    failure: Some(fail),
                });
            }
        }
        Ok(BrReport {
            r_max,
            holds: true,
            levels,
            failure: None,
        })
    }

    fn target_nonzero(&self, tuple: &[usize]) -> bool {
        let mut m = Monomial::one(self.ideal.nvars());
        for &c in tuple {
            match m.mul(&self.classes[c].multidegree) {
                Ok(p) => m = p,
                Err(_) => return false,
            }
        }
        let k = tuple.iter().map(|&c| self.classes[c].degree).sum::<usize>() + tuple.len() - 2;
        self.strand_of
            .get(&m)
            .and_then(|&si| self.strands[si].degrees.get(&k))
            .is_some_and(|dd| !dd.class_ids.is_empty())
    }
}

fn strand_data<F: Field>(f: &F, s: &Strand) -> StrandData<F> {
    let mut degrees = BTreeMap::new();
    let ks: Vec<usize> = s.faces.keys().copied().collect();
    let mut columns: HashMap<usize, Vec<Vec<F::Elem>>> = HashMap::new();
    for &k in &ks {
        let rows = s.boundary_rows(f, k);
        let n = s.faces_of(k).len();
        let cols = (0..n)
            .map(|c| rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        columns.insert(k, cols);
    }
    for &k in &ks {
        let faces = s.faces_of(k).to_vec();
        let n = faces.len();
        let mut class_basis = Basis::new(f.clone(), n);
        if let Some(cols) = columns.get(&(k + 1)) {
            for c in cols {
                class_basis.insert(c.clone());
            }
        }
        let boundary_rank = class_basis.len();
        let rows = s.boundary_rows(f, k);
        let cycles = if rows.is_empty() {
            (0..n)
                .map(|i| {
                    let mut v = vec![f.zero(); n];
                    v[i] = f.one();
                    v
                })
                .collect()
        } else {
            linalg::nullspace(f, &rows, n)
        };
        for z in cycles {
            class_basis.insert(z);
        }
        let index = faces.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        degrees.insert(
            k,
            DegreeData {
                faces,
                index,
                d_columns: columns.remove(&k).unwrap_or_default(),
                class_basis,
                boundary_rank,
                class_ids: Vec::new(),
            },
        );
    }
    StrandData {
        label: s.label.clone(),
        degrees,
    }
}

fn to_chain<F: Field>(f: &F, faces: &[Face], v: &[F::Elem]) -> Chain<F> {
    faces
        .iter()
        .zip(v)
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(g, c)| (*g, c.clone()))
        .collect()
}

fn dense<F: Field>(f: &F, dd: &DegreeData<F>, x: &Chain<F>) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); dd.faces.len()];
    for (g, c) in x {
        v[dd.index[g]] = c.clone();
    }
    v
}

fn add_into<F: Field>(f: &F, out: &mut Chain<F>, face: Face, c: &F::Elem) {
    if f.is_zero(c) {
        return;
    }
    let e = out.entry(face).or_insert_with(|| f.zero());
    *e = f.add(e, c);
    if f.is_zero(e) {
        out.remove(&face);
    }
}

fn add_chain<F: Field>(f: &F, out: &mut Chain<F>, x: &Chain<F>) {
    for (g, c) in x {
        add_into(f, out, *g, c);
    }
}

fn scale<F: Field>(f: &F, k: &F::Elem, x: &Chain<F>) -> Chain<F> {
    x.iter()
        .map(|(g, c)| (*g, f.mul(k, c)))
        .filter(|(_, c)| !f.is_zero(c))
        .collect()
}

/// A Massey set `representative + span(indeterminacy)` inside `Tor_degree`,
/// in coordinates of the homology basis of that degree.
#[derive(Clone, Debug)]
pub struct MasseyResult<F: Field> {
    pub arity: usize,
    pub degree: usize,
    /// Whether every proper consecutive sub-product is defined and contains zero.
    pub defined: bool,
    /// 0-based half-open range of the first offending sub-product.
    pub undefined_at: Option<(usize, usize)>,
    /// `None` when defined but no compatible defining system was found.
    pub representative: Option<Vec<F::Elem>>,
    /// Basis of the (computed part of the) indeterminacy.
    pub indeterminacy: Vec<Vec<F::Elem>>,
    /// True when `indeterminacy` is the full indeterminacy (`n ≤ 3`).
    pub exact: bool,
    /// `representative ∈ span(indeterminacy)`. For inexact results `false`
    /// means "not certified".
    pub contains_zero: bool,
}

impl<F: Field> MasseyResult<F> {
    fn undefined(arity: usize, degree: usize, at: (usize, usize)) -> Self {
        MasseyResult {
            arity,
            degree,
            defined: false,
            undefined_at: Some(at),
            representative: None,
            indeterminacy: Vec::new(),
            exact: true,
            contains_zero: false,
        }
    }

    fn no_system(arity: usize, degree: usize) -> Self {
        MasseyResult {
            arity,
            degree,
            defined: true,
            undefined_at: None,
            representative: None,
            indeterminacy: Vec::new(),
            exact: false,
            contains_zero: false,
        }
    }

    /// Whether the set is exactly `{0}` (the indeterminacy is taken as computed).
    pub fn is_zero_set(&self, f: &F) -> bool {
        self.defined
            && self.indeterminacy.is_empty()
            && self
                .representative
                .as_ref()
                .is_some_and(|r| r.iter().all(|x| f.is_zero(x)))
    }

    /// Whether `v` lies in `representative + span(indeterminacy)`.
    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        let Some(rep) = &self.representative else {
            return false;
        };
        let diff: Vec<F::Elem> = v.iter().zip(rep).map(|(a, b)| f.sub(a, b)).collect();
        Basis::from_vectors(f.clone(), diff.len(), self.indeterminacy.iter().cloned())
            .contains(&diff)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BrFailureKind {
    Undefined,
    NoDefiningSystem,
    Nonzero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrFailure {
    pub k: usize,
    /// Class ids, in product order.
    pub classes: Vec<usize>,
    pub kind: BrFailureKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrLevel {
    pub k: usize,
    /// All k-tuples of positive classes.
    pub tuples: usize,
    /// Tuples whose target graded piece is nonzero, hence actually solved.
    pub solved: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrReport {
    pub r_max: usize,
    pub holds: bool,
    pub levels: Vec<BrLevel>,
    pub failure: Option<BrFailure>,
}

/// Outcome of comparing `(μ_n ⊗ 1)(u_{J_1}, …, u_{J_n})` with `⟨[u_{J_1}], …, [u_{J_n}]⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub args: Vec<Face>,
    pub defined: bool,
    pub mu_is_zero: bool,
    /// The sign `ε` with `ε·μ_n ⊗ 1` in the Massey set, if any.
    pub sign: Option<i64>,
}

impl CrossCheck {
    /// Vacuous when the Massey product is undefined.
    pub fn passed(&self) -> bool {
        !self.defined || self.sign.is_some()
    }
}

/// Compares `μ_n ⊗ 1` on faces of a minimal `F` with the Massey product of
/// their classes in `T ⊗ k`.
pub fn cross_check_mu<F: Field>(
    model: &KoszulModel<F>,
    a: &AInfinity,
    args: &[Face],
) -> Result<CrossCheck> {
    let fc = a.f();
    if let Some((face, facet)) = fc.minimality().witness {
        return Err(Error::NotMinimalResolution {
            face: face.to_string(),
            facet: facet.to_string(),
        });
    }
    let f = model.field();
    let cycles: Vec<Cycle<F>> = args
        .iter()
        .map(|&j| model.face_cycle(j))
        .collect::<Result<_>>()?;
    let r = model.massey_product(&cycles)?;
    let mu = a.mu(args)?.reduce_mod_variables();
    let mut chain = Chain::<F>::new();
    for (face, c) in mu.terms() {
        add_into(f, &mut chain, face, &f.from_i64(c));
    }
    let v = model.class_of(r.degree, &chain)?;
    let mu_is_zero = v.iter().all(|x| f.is_zero(x));
    let sign = if !r.defined {
        None
    } else if r.contains(f, &v) {
        Some(1)
    } else {
        let neg: Vec<F::Elem> = v.iter().map(|x| f.neg(x)).collect();
        r.contains(f, &neg).then_some(-1)
    };
    Ok(CrossCheck {
        args: args.to_vec(),
        defined: r.defined,
        mu_is_zero,
        sign,
    })
}
