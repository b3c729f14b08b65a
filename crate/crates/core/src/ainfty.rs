//! The transfer diagram `F ⇄ T` of a rooting map (inclusion `i`, projection
//! `p`, homotopy `φ`) and the A∞-structure `μ_n = p λ_n i^{⊗n}` obtained
//! from Merkulov's recursion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::chain::{laurent_of, FaceChain, TaylorElement};
use crate::error::{Error, Result};
use crate::monomial::{Guards, MonomialIdeal};
use crate::par::{self, OnceMap};
use crate::resolution::{taylor_d, taylor_product, FreeComplex};
use crate::rooting::{rooted_resolution, RootingMap};
use crate::simplicial::Face;

/// `F = F_{RC(L,π)}` inside the Taylor resolution `T`, with the maps built from `π`.
pub struct TransferDiagram {
    ideal: MonomialIdeal,
    pi: RootingMap,
    f: FreeComplex,
    guards: Guards,
    pi_of: OnceMap<Face, usize>,
    p_prime: OnceMap<Face, FaceChain>,
    phi_prime: OnceMap<Face, FaceChain>,
    p: OnceMap<Face, TaylorElement>,
    phi: OnceMap<Face, TaylorElement>,
}

impl TransferDiagram {
    pub fn new(ideal: &MonomialIdeal, pi: &RootingMap, guards: &Guards) -> Result<Self> {
        guards.check_subsets(ideal.len())?;
        let f = rooted_resolution(ideal, pi)?;
        Ok(TransferDiagram {
            ideal: ideal.clone(),
            pi: pi.clone(),
            f,
            guards: *guards,
            pi_of: OnceMap::default(),
            p_prime: OnceMap::default(),
            phi_prime: OnceMap::default(),
            p: OnceMap::default(),
            phi: OnceMap::default(),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn rooting(&self) -> &RootingMap {
        &self.pi
    }

    /// The rooted resolution `F`.
    pub fn f(&self) -> &FreeComplex {
        &self.f
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// Generator index of `π(u_J)`.
    pub fn pi_vertex(&self, face: Face) -> usize {
        *self
            .pi_of
            .get_or_try_insert(&face, || Ok::<_, Error>(self.pi.of_face(&self.ideal, face)))
            .expect("infallible")
    }

    /// `[u] = Σ (α_k / m_{J_k}) u_{J_k}`.
    pub fn bracket(&self, u: &TaylorElement) -> Result<TaylorElement> {
        u.map_linear(|face| {
            let inv: Vec<i32> = laurent_of(&self.ideal.lcm_of_mask(face.bits()))
                .iter()
                .map(|e| -e)
                .collect();
            Ok(TaylorElement::term(1, inv.into(), face))
        })
    }

    /// `p′(u_J) = Σ_σ sgn(σ) π(u_{σI_1}) ⋯ π(u_{σI_k})`, summed over all orderings of `J`.
    pub fn p_prime(&self, face: Face) -> Result<Arc<FaceChain>> {
        self.p_prime.get_or_try_insert(&face, || {
            let k = face.len();
            if k > self.guards.perms {
                return Err(Error::GuardExceeded {
                    what: "face size for the permutation sum",
                    limit: self.guards.perms,
                    actual: k,
                });
            }
            let mut out = FaceChain::new();
            let mut memo = HashMap::new();
            self.p_prime_dfs(face, Face::EMPTY, Face::EMPTY, 0, &mut memo, &mut out);
            for g in out.support() {
                if !self.f.contains(g) {
                    return Err(Error::Internal(format!(
                        "p′(u{face}) hits unrooted face {g}"
                    )));
                }
            }
            Ok(out)
        })
    }

    // `parity` accumulates inversions of the ordering plus inversions of the π-sequence.
    fn p_prime_dfs(
        &self,
        face: Face,
        prefix: Face,
        used: Face,
        parity: u32,
        memo: &mut HashMap<Face, usize>,
        out: &mut FaceChain,
    ) {
        if prefix == face {
            out.add(used, if parity.is_multiple_of(2) { 1 } else { -1 });
            return;
        }
        for v in face.indices().filter(|v| !prefix.contains(*v)) {
            let next = prefix.with(v);
            let w = *memo
                .entry(next)
                .or_insert_with(|| self.pi.of_face(&self.ideal, next));
            if used.contains(w) {
                continue;
            }
            let inv_v = prefix.indices().filter(|&x| x > v).count() as u32;
            let inv_w = used.indices().filter(|&x| x > w).count() as u32;
            self.p_prime_dfs(face, next, used.with(w), parity + inv_v + inv_w, memo, out);
        }
    }

    /// `φ′_k(u) = π(u)(u − φ′_{k−1}(∂u))` with `φ′_0 = φ′_1 = 0`.
    pub fn phi_prime(&self, face: Face) -> Result<Arc<FaceChain>> {
        self.phi_prime.get_or_try_insert(&face, || {
            if face.len() <= 1 {
                return Ok(FaceChain::new());
            }
            if face.len() > self.guards.perms {
                return Err(Error::GuardExceeded {
                    what: "face size for the homotopy recursion",
                    limit: self.guards.perms,
                    actual: face.len(),
                });
            }
            let mut inner = FaceChain::basis(face);
            for (s, g) in face.boundary() {
                inner.add_chain(-s, &*self.phi_prime(g)?);
            }
            Ok(inner.wedge_left(self.pi_vertex(face)))
        })
    }

    fn rescale(&self, face: Face, chain: &FaceChain, what: &str) -> Result<TaylorElement> {
        let mut plain = TaylorElement::zero(self.nvars());
        for (g, c) in chain.terms() {
            plain.add_term(c, crate::chain::laurent_one(self.nvars()), g)?;
        }
        let mut out = TaylorElement::zero(self.nvars());
        let m = laurent_of(&self.ideal.lcm_of_mask(face.bits()));
        out.add_scaled(1, &m, &self.bracket(&plain)?)?;
        out.ensure_effective(what)?;
        Ok(out)
    }

    /// `p(u_J) = m_J [p′(u_J)]`.
    pub fn p_face(&self, face: Face) -> Result<Arc<TaylorElement>> {
        self.p
            .get_or_try_insert(&face, || self.rescale(face, &*self.p_prime(face)?, "p"))
    }

    /// `φ(u_J) = m_J [φ′(u_J)]`.
    pub fn phi_face(&self, face: Face) -> Result<Arc<TaylorElement>> {
        self.phi
            .get_or_try_insert(&face, || self.rescale(face, &*self.phi_prime(face)?, "φ"))
    }

    pub fn p_map(&self, u: &TaylorElement) -> Result<TaylorElement> {
        let out = u.map_linear(|f| Ok((*self.p_face(f)?).clone()))?;
        out.ensure_effective("p")?;
        Ok(out)
    }

    pub fn phi_map(&self, u: &TaylorElement) -> Result<TaylorElement> {
        let out = u.map_linear(|f| Ok((*self.phi_face(f)?).clone()))?;
        out.ensure_effective("φ")?;
        Ok(out)
    }

    /// Coefficient-free `p′` extended linearly.
    pub fn p_prime_chain(&self, c: &FaceChain) -> Result<FaceChain> {
        let mut out = FaceChain::new();
        for (f, k) in c.terms() {
            out.add_chain(k, &*self.p_prime(f)?);
        }
        Ok(out)
    }

    /// Every face of the Taylor complex, in face order.
    pub fn taylor_faces(&self) -> Vec<Face> {
        let mut v: Vec<Face> = (0..(1u64 << self.ideal.len()))
            .map(Face::from_bits)
            .collect();
        v.sort();
        v
    }

    /// Checks the transfer identities on every Taylor basis element.
    pub fn verify_transfer_identities(&self) -> Result<TransferReport> {
        let faces = self.taylor_faces();
        let n = self.nvars();
        let basis = |f: Face| TaylorElement::basis(f, n);

        let results = par::map(&faces, |&face| -> Result<[bool; 8]> {
            let u = basis(face);
            let p_u = self.p_map(&u)?;
            let phi_u = self.phi_map(&u)?;
            let du = taylor_d(&self.ideal, &u)?;

            let pi_ok = !self.f.contains(face) || p_u == u;
            let homotopy =
                u.sub(&p_u)? == taylor_d(&self.ideal, &phi_u)?.add(&self.phi_map(&du)?)?;
            let chain = self.f.d(&p_u)? == self.p_map(&du)?;
            let pp = FaceChain::basis(face);
            let pprime_chain =
                self.p_prime_chain(&pp)?.boundary() == self.p_prime_chain(&pp.boundary())?;
            let root = face.is_empty()
                || self
                    .p_prime_chain(&pp.boundary())?
                    .wedge_left(self.pi_vertex(face))
                    == *self.p_prime(face)?;
            // side conditions, reported only
            let phi_sq = self.phi_map(&phi_u)?.is_zero();
            let p_phi = self.p_map(&phi_u)?.is_zero();
            let phi_i = !self.f.contains(face) || phi_u.is_zero();
            Ok([
                pi_ok,
                homotopy,
                chain,
                pprime_chain,
                root,
                phi_sq,
                p_phi,
                phi_i,
            ])
        });
        let names = [
            "p∘i = 1",
            "1 − i∘p = dφ + φd",
            "d∘p = p∘d",
            "∂p′ = p′∂",
            "π(u)·i p′ ∂u = i p′ u",
            "φ∘φ = 0",
            "p∘φ = 0",
            "φ∘i = 0",
        ];
        let mut checks: Vec<IdentityCheck> = names
            .iter()
            .map(|n| IdentityCheck {
                name: n.to_string(),
                checked: 0,
                witness: None,
            })
            .collect();
        for (face, res) in faces.iter().zip(results) {
            let flags = res?;
            for (c, ok) in checks.iter_mut().zip(flags) {
                c.checked += 1;
                if !ok && c.witness.is_none() {
                    c.witness = Some(*face);
                }
            }
        }
        let side = checks.split_off(5);
        Ok(TransferReport {
            identities: checks,
            side_conditions: side,
        })
    }

    /// For Taylor faces with `gcd(m_I, m_J) ≠ 1`, `p λ₂(u_I, u_J)` has no unit coefficient.
    /// Returns the first offending pair.
    pub fn plambda2_noncoprime_violation(&self) -> Result<Option<(Face, Face)>> {
        let faces = self.taylor_faces();
        let n = self.nvars();
        let pairs: Vec<(Face, Face)> = faces
            .iter()
            .flat_map(|a| faces.iter().map(move |b| (*a, *b)))
            .filter(|(a, b)| {
                let ma = self.ideal.lcm_of_mask(a.bits());
                let mb = self.ideal.lcm_of_mask(b.bits());
                !ma.is_coprime(&mb)
            })
            .collect();
        par::find_map_first(&pairs, |&(a, b)| {
            let prod = taylor_product(
                &self.ideal,
                &TaylorElement::basis(a, n),
                &TaylorElement::basis(b, n),
            );
            match prod.and_then(|x| self.p_map(&x)) {
                Ok(v) if v.reduce_mod_variables().is_zero() => None,
                Ok(_) => Some(Ok((a, b))),
                Err(e) => Some(Err(e)),
            }
        })
        .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub checked: usize,
    /// First Taylor face where the identity fails.
    pub witness: Option<Face>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct TransferReport {
    pub identities: Vec<IdentityCheck>,
    /// `φ² = 0`, `pφ = 0`, `φi = 0`: not required, reported as observed.
    pub side_conditions: Vec<IdentityCheck>,
}

impl TransferReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|c| c.passed())
    }
}

/// The operations `μ_n` on `F`, with a selectable convention for the
/// `s = 1`/`t = 1` terms of the recursion (`φλ₁ = sign · id`).
pub struct AInfinity {
    diagram: Arc<TransferDiagram>,
    phi_lambda_one: i64,
    lambda: OnceMap<Vec<Face>, TaylorElement>,
    mu: OnceMap<Vec<Face>, TaylorElement>,
}

impl AInfinity {
    /// Uses `φλ₁ = −id`.
    pub fn new(diagram: Arc<TransferDiagram>) -> Self {
        Self::with_convention(diagram, -1)
    }

    pub fn with_convention(diagram: Arc<TransferDiagram>, phi_lambda_one: i64) -> Self {
        assert!(phi_lambda_one == 1 || phi_lambda_one == -1);
        AInfinity {
            diagram,
            phi_lambda_one,
            lambda: OnceMap::default(),
            mu: OnceMap::default(),
        }
    }

    pub fn diagram(&self) -> &TransferDiagram {
        &self.diagram
    }

    pub fn f(&self) -> &FreeComplex {
        self.diagram.f()
    }

    fn nvars(&self) -> usize {
        self.diagram.ideal.nvars()
    }

    fn top_t(&self) -> usize {
        self.diagram.ideal.len()
    }

    /// `λ_n(u_{J_1}, …, u_{J_n})` on Taylor basis faces, `n ≥ 2`.
    pub fn lambda(&self, args: &[Face]) -> Result<Arc<TaylorElement>> {
        let n = args.len();
        assert!(n >= 2, "λ_n needs n ≥ 2");
        let deg: usize = args.iter().map(|f| f.len()).sum::<usize>() + n - 2;
        if deg > self.top_t() {
            return Ok(Arc::new(TaylorElement::zero(self.nvars())));
        }
        self.lambda.get_or_try_insert(&args.to_vec(), || {
            let ideal = &self.diagram.ideal;
            if n == 2 {
                return taylor_product(
                    ideal,
                    &TaylorElement::basis(args[0], self.nvars()),
                    &TaylorElement::basis(args[1], self.nvars()),
                );
            }
            let one = crate::chain::laurent_one(self.nvars());
            let mut out = TaylorElement::zero(self.nvars());
            let mut left_deg = 0usize;
            for s in 1..n {
                left_deg += args[s - 1].len();
                let t = n - s;
                let sign = if (s + 1 + (t - 1) * left_deg).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                let left = self.phi_lambda(&args[..s])?;
                if left.is_zero() {
                    continue;
                }
                let right = self.phi_lambda(&args[s..])?;
                if right.is_zero() {
                    continue;
                }
                out.add_scaled(sign, &one, &taylor_product(ideal, &left, &right)?)?;
            }
            Ok(out)
        })
    }

    fn phi_lambda(&self, args: &[Face]) -> Result<TaylorElement> {
        if args.len() == 1 {
            return TaylorElement::basis(args[0], self.nvars()).scale(self.phi_lambda_one);
        }
        self.diagram.phi_map(&*self.lambda(args)?)
    }

    /// `μ_1 = d`, `μ_n = p ∘ λ_n` for `n ≥ 2`, on basis faces of `F`.
    pub fn mu(&self, args: &[Face]) -> Result<Arc<TaylorElement>> {
        let f = self.diagram.f();
        if args.is_empty() {
            return Err(Error::InvalidInput("μ_0 is not defined".into()));
        }
        if let Some(bad) = args.iter().find(|a| !f.contains(**a)) {
            return Err(Error::InvalidInput(format!(
                "u{bad} is not a basis element of F"
            )));
        }
        let n = args.len();
        let deg = args.iter().map(|a| a.len()).sum::<usize>() + n;
        if deg < 2 || deg - 2 > f.top_degree() {
            return Ok(Arc::new(TaylorElement::zero(self.nvars())));
        }
        self.mu.get_or_try_insert(&args.to_vec(), || {
            if n == 1 {
                return f.d(&TaylorElement::basis(args[0], self.nvars()));
            }
            self.diagram.p_map(&*self.lambda(args)?)
        })
    }

    /// Largest `n` with `2n − 2 ≤ top degree of F`: beyond it `μ_n` vanishes on
    /// inputs of positive degree.
    pub fn degree_bound(&self) -> usize {
        (self.f().top_degree() + 2) / 2
    }

    /// Basis tensors of length `n` whose Stasheff expression can be nonzero.
    pub fn stasheff_tensors(&self, n: usize) -> Vec<Vec<Face>> {
        let faces = self.f().faces();
        let top = self.f().top_degree();
        // output degree Σ|J| + n − 3 must lie in 0..=top
        let max_sum = (top + 3).saturating_sub(n);
        let min_sum = 3usize.saturating_sub(n);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        tuples(faces, n, max_sum, min_sum, &mut cur, 0, &mut out);
        out
    }

    /// `Σ (−1)^{r+st} μ_u(1^{⊗r} ⊗ μ_s ⊗ 1^{⊗t})(a_1 ⊗ ⋯ ⊗ a_n)` with Koszul signs.
    pub fn stasheff_value(&self, args: &[Face]) -> Result<TaylorElement> {
        let n = args.len();
        let mut out = TaylorElement::zero(self.nvars());
        let mut left_deg = 0usize;
        for r in 0..n {
            if r > 0 {
                left_deg += args[r - 1].len();
            }
            for s in 1..=(n - r) {
                let t = n - r - s;
                let exponent = r + s * t + s * left_deg;
                let sign = if exponent.is_multiple_of(2) { 1 } else { -1 };
                let inner = self.mu(&args[r..r + s])?;
                for (face, e, c) in inner.terms() {
                    let mut outer_args = Vec::with_capacity(r + 1 + t);
                    outer_args.extend_from_slice(&args[..r]);
                    outer_args.push(face);
                    outer_args.extend_from_slice(&args[r + s..]);
                    let outer = self.mu(&outer_args)?;
                    out.add_scaled(sign * c, e, &outer)?;
                }
            }
        }
        Ok(out)
    }

    /// Checks the Stasheff identities for every `n ≤ n_max` on all admissible basis tensors.
    pub fn verify_stasheff(&self, n_max: usize) -> Result<StasheffReport> {
        let mut per_n = Vec::new();
        for n in 1..=n_max {
            let tensors = self.stasheff_tensors(n);
            let witness = par::find_map_first(&tensors, |args| match self.stasheff_value(args) {
                Ok(v) if v.is_zero() => None,
                Ok(_) => Some(Ok(args.clone())),
                Err(e) => Some(Err(e)),
            })
            .transpose()?;
            per_n.push(StasheffLevel {
                n,
                tensors: tensors.len(),
                witness,
            });
        }
        Ok(StasheffReport { levels: per_n })
    }

    /// Nonzero values of `μ_n` for `2 ≤ n ≤ n_max` on basis tensors of positive-degree faces.
    pub fn mu_table(&self, n_max: usize) -> Result<Vec<MuRecord>> {
        let mut out = Vec::new();
        for n in 2..=n_max {
            let tensors = self.positive_tensors(n);
            let values = par::map(&tensors, |args| self.mu(args));
            for (args, v) in tensors.into_iter().zip(values) {
                let v = v?;
                if !v.is_zero() {
                    out.push(MuRecord {
                        n,
                        args,
                        value: (*v).clone(),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Tensors of `n` positive-degree faces whose `μ_n` lands in a nonzero degree of `F`.
    pub fn positive_tensors(&self, n: usize) -> Vec<Vec<Face>> {
        let faces: Vec<Face> = self
            .f()
            .faces()
            .iter()
            .copied()
            .filter(|f| !f.is_empty())
            .collect();
        let top = self.f().top_degree();
        let max_sum = (top + 2).saturating_sub(n);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        tuples(&faces, n, max_sum, 0, &mut cur, 0, &mut out);
        out
    }

    /// Strict unitality of `u_∅` observed on admissible tensors up to `n_max`.
    pub fn unitality(&self, n_max: usize) -> Result<Option<Vec<Face>>> {
        let n = self.nvars();
        for k in 1..=n_max {
            for args in self.stasheff_tensors(k) {
                if !args.iter().any(|f| f.is_empty()) {
                    continue;
                }
                let v = self.mu(&args)?;
                let expected = if k == 2 {
                    let other = if args[0].is_empty() { args[1] } else { args[0] };
                    TaylorElement::basis(other, n)
                } else {
                    TaylorElement::zero(n)
                };
                if *v != expected {
                    return Ok(Some(args));
                }
            }
        }
        Ok(None)
    }
}

fn tuples(
    faces: &[Face],
    n: usize,
    max_sum: usize,
    min_sum: usize,
    cur: &mut Vec<Face>,
    sum: usize,
    out: &mut Vec<Vec<Face>>,
) {
    if cur.len() == n {
        if sum >= min_sum {
            out.push(cur.clone());
        }
        return;
    }
    for f in faces {
        if sum + f.len() > max_sum {
            continue;
        }
        cur.push(*f);
        tuples(faces, n, max_sum, min_sum, cur, sum + f.len(), out);
        cur.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StasheffLevel {
    pub n: usize,
    pub tensors: usize,
    pub witness: Option<Vec<Face>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StasheffReport {
    pub levels: Vec<StasheffLevel>,
}

impl StasheffReport {
    pub fn all_passed(&self) -> bool {
        self.levels.iter().all(|l| l.witness.is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuRecord {
    pub n: usize,
    pub args: Vec<Face>,
    pub value: TaylorElement,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{LcmLattice, VariableContext};
    use crate::rooting::lyubeznik_rooting;

    fn diagram(vars: &[&str], gens: &[&str], order: &[usize]) -> Arc<TransferDiagram> {
        let ctx = VariableContext::new(vars).unwrap();
        let i = MonomialIdeal::parse(&ctx, gens).unwrap();
        let g = Guards::default();
        let l = LcmLattice::build(&i, &g).unwrap();
        let pi = lyubeznik_rooting(&i, &l, order).unwrap();
        Arc::new(TransferDiagram::new(&i, &pi, &g).unwrap())
    }

    fn tri() -> Arc<TransferDiagram> {
        diagram(&["x", "y", "z"], &["x*y", "y*z", "x*z"], &[0, 1, 2])
    }

    fn f(ix: &[usize]) -> Face {
        Face::from_one_based(ix, 64).unwrap()
    }

    fn show(d: &TransferDiagram, u: &TaylorElement) -> String {
        u.display(d.ideal().ctx()).to_string()
    }

    #[test]
    fn bracket_examples() {
        let d = tri();
        let b = d.bracket(&TaylorElement::basis(f(&[1, 2]), 3)).unwrap();
        let terms: Vec<_> = b.terms().map(|(g, e, c)| (g, e.to_vec(), c)).collect();
        assert_eq!(terms, vec![(f(&[1, 2]), vec![-1, -1, -1], 1)]);
        let alpha = TaylorElement::term(1, vec![1, 1, 1].into(), f(&[1, 2]));
        assert_eq!(
            d.bracket(&alpha).unwrap(),
            TaylorElement::basis(f(&[1, 2]), 3)
        );
        // d[u_J] = [∂u_J]
        for face in d.taylor_faces() {
            let u = TaylorElement::basis(face, 3);
            let lhs = taylor_d(d.ideal(), &d.bracket(&u).unwrap()).unwrap();
            let mut boundary = TaylorElement::zero(3);
            for (s, g) in face.boundary() {
                boundary.add_term(s, vec![0, 0, 0].into(), g).unwrap();
            }
            assert_eq!(lhs, d.bracket(&boundary).unwrap());
        }
    }

    #[test]
    fn p_prime_examples() {
        let d = tri();
        let p = d.p_prime(f(&[2, 3])).unwrap();
        assert_eq!(
            p.terms().collect::<Vec<_>>(),
            vec![(f(&[1, 2]), -1), (f(&[1, 3]), 1)]
        );
        assert_eq!(*d.p_prime(f(&[1])).unwrap(), FaceChain::basis(f(&[1])));
        // on a rooted pair p′ is the identity: u_1 π − u_2 π with π = u_1
        assert_eq!(
            *d.p_prime(f(&[1, 2])).unwrap(),
            FaceChain::basis(f(&[1, 2]))
        );
    }

    #[test]
    fn phi_prime_examples() {
        let d = tri();
        assert_eq!(
            *d.phi_prime(f(&[2, 3])).unwrap(),
            FaceChain::basis(f(&[1, 2, 3]))
        );
        assert!(d.phi_prime(f(&[1, 2])).unwrap().is_zero());
        assert!(d.phi_prime(f(&[2])).unwrap().is_zero());
    }

    #[test]
    fn p_and_phi_examples() {
        let d = tri();
        let p = d.p_face(f(&[2, 3])).unwrap();
        assert_eq!(show(&d, &p), "-u{1,2} + u{1,3}");
        let phi = d.phi_face(f(&[2, 3])).unwrap();
        assert_eq!(show(&d, &phi), "u{1,2,3}");
        for face in d.f().faces() {
            assert_eq!(*d.p_face(*face).unwrap(), TaylorElement::basis(*face, 3));
        }
        // (1 − ip)(u23) = dφ(u23)
        let u = TaylorElement::basis(f(&[2, 3]), 3);
        let lhs = u.sub(&p).unwrap();
        assert_eq!(show(&d, &lhs), "u{1,2} - u{1,3} + u{2,3}");
        assert_eq!(lhs, taylor_d(d.ideal(), &phi).unwrap());
    }

    #[test]
    fn mu_examples() {
        let d = tri();
        let a = AInfinity::new(d.clone());
        let v = a.mu(&[f(&[2]), f(&[3])]).unwrap();
        assert_eq!(show(&d, &v), "-z*u{1,2} + z*u{1,3}");

        let d2 = diagram(&["x", "y"], &["x^2", "y^2"], &[0, 1]);
        let a2 = AInfinity::new(d2.clone());
        assert_eq!(show(&d2, &a2.mu(&[f(&[1]), f(&[2])]).unwrap()), "u{1,2}");

        let d3 = diagram(&["x", "y"], &["x^2", "x*y"], &[0, 1]);
        let a3 = AInfinity::new(d3.clone());
        assert_eq!(show(&d3, &a3.mu(&[f(&[1]), f(&[2])]).unwrap()), "x*u{1,2}");
    }

    #[test]
    fn transfer_identities_hold() {
        for d in [
            tri(),
            diagram(&["x"], &["x^2"], &[0]),
            diagram(&["x", "y"], &["x^2", "x*y"], &[0, 1]),
            diagram(&["x", "y"], &["x^2", "y^2"], &[1, 0]),
        ] {
            let rep = d.verify_transfer_identities().unwrap();
            assert!(rep.all_passed(), "{:?}", rep.identities);
            assert_eq!(d.plambda2_noncoprime_violation().unwrap(), None);
        }
    }

    #[test]
    fn stasheff_holds_on_triangle() {
        let a = AInfinity::new(tri());
        let rep = a.verify_stasheff(4).unwrap();
        assert!(rep.all_passed(), "{rep:?}");
    }

    #[test]
    fn perm_guard() {
        let ctx = VariableContext::numbered("x", 3).unwrap();
        let i = MonomialIdeal::parse(&ctx, &["x1", "x2", "x3"]).unwrap();
        let g = Guards {
            perms: 2,
            ..Guards::default()
        };
        let l = LcmLattice::build(&i, &g).unwrap();
        let pi = lyubeznik_rooting(&i, &l, &[0, 1, 2]).unwrap();
        let d = TransferDiagram::new(&i, &pi, &g).unwrap();
        assert!(d.p_prime(f(&[1, 2, 3])).unwrap_err().is_guard());
    }
}
