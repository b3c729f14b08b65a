//! Elements of free modules on face bases: integer scalars times Laurent
//! monomials times `u_J`, plus coefficient-free face chains.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableContext};
use crate::simplicial::Face;

/// Exponent vector that may carry negative entries.
pub type Laurent = Box<[i32]>;

pub fn laurent_of(m: &Monomial) -> Laurent {
    m.exponents().iter().map(|&e| e as i32).collect()
}

pub fn laurent_one(nvars: usize) -> Laurent {
    vec![0; nvars].into_boxed_slice()
}

fn laurent_mul(a: &[i32], b: &[i32]) -> Result<Laurent> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow))
        .collect()
}

fn laurent_div(a: &[i32], b: &[i32]) -> Result<Laurent> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(Error::ExponentOverflow))
        .collect()
}

fn checked(v: Option<i64>) -> Result<i64> {
    v.ok_or(Error::CoefficientOverflow)
}

/// Finite sum `Σ c · x^e · u_J` with `c` a nonzero integer and `e` a Laurent exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TaylorElement {
    nvars: usize,
    terms: BTreeMap<(Face, Laurent), i64>,
}

impl TaylorElement {
    pub fn zero(nvars: usize) -> Self {
        TaylorElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `u_J` with coefficient 1.
    pub fn basis(face: Face, nvars: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.terms.insert((face, laurent_one(nvars)), 1);
        e
    }

    pub fn term(scalar: i64, coeff: Laurent, face: Face) -> Self {
        let mut e = Self::zero(coeff.len());
        if scalar != 0 {
            e.terms.insert((face, coeff), scalar);
        }
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (face, exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (Face, &[i32], i64)> {
        self.terms.iter().map(|((f, e), c)| (*f, &e[..], *c))
    }

    pub fn add_term(&mut self, scalar: i64, coeff: Laurent, face: Face) -> Result<()> {
        if scalar == 0 {
            return Ok(());
        }
        debug_assert_eq!(coeff.len(), self.nvars);
        let key = (face, coeff);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = checked(c.checked_add(scalar))?;
                if *c == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, scalar);
            }
        }
        Ok(())
    }

    /// `self += k · x^e · other`.
    pub fn add_scaled(&mut self, k: i64, e: &[i32], other: &TaylorElement) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        for ((f, c), s) in &other.terms {
            self.add_term(checked(s.checked_mul(k))?, laurent_mul(c, e)?, *f)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &TaylorElement) -> Result<TaylorElement> {
        let mut out = self.clone();
        out.add_scaled(1, &laurent_one(self.nvars), other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &TaylorElement) -> Result<TaylorElement> {
        let mut out = self.clone();
        out.add_scaled(-1, &laurent_one(self.nvars), other)?;
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<TaylorElement> {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(k, &laurent_one(self.nvars), self)?;
        Ok(out)
    }

    pub fn neg(&self) -> TaylorElement {
        TaylorElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    /// Applies an S-linear map given on basis faces.
    pub fn map_linear(
        &self,
        mut f: impl FnMut(Face) -> Result<TaylorElement>,
    ) -> Result<TaylorElement> {
        let mut out = Self::zero(self.nvars);
        for ((face, e), s) in &self.terms {
            let image = f(*face)?;
            out.add_scaled(*s, e, &image)?;
        }
        Ok(out)
    }

    /// No negative exponent anywhere.
    pub fn is_effective(&self) -> bool {
        self.terms.keys().all(|(_, e)| e.iter().all(|&x| x >= 0))
    }

    pub fn ensure_effective(&self, what: &str) -> Result<()> {
        if self.is_effective() {
            Ok(())
        } else {
            Err(Error::NegativeExponent(format!("{what}: {self:?}")))
        }
    }

    /// The faces carrying a nonzero term.
    pub fn support(&self) -> impl Iterator<Item = Face> + '_ {
        let mut last = None;
        self.terms.keys().filter_map(move |(f, _)| {
            if last == Some(*f) {
                None
            } else {
                last = Some(*f);
                Some(*f)
            }
        })
    }

    /// Image under `⊗_S k`: only terms with a unit coefficient survive.
    pub fn reduce_mod_variables(&self) -> FaceChain {
        let mut out = FaceChain::new();
        for ((f, e), s) in &self.terms {
            if e.iter().all(|&x| x == 0) {
                out.add(*f, *s);
            }
        }
        out
    }

    /// Homogeneous of the given face cardinality (true for zero).
    pub fn has_degree(&self, deg: usize) -> bool {
        self.terms.keys().all(|(f, _)| f.len() == deg)
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> ElementDisplay<'a> {
        ElementDisplay { elem: self, ctx }
    }
}

pub fn format_laurent(e: &[i32], ctx: &VariableContext) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(ctx.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ctx.names()[i], x)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Debug for TaylorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((face, e), s)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}*{e:?}*u{face}")?;
        }
        Ok(())
    }
}

pub struct ElementDisplay<'a> {
    elem: &'a TaylorElement,
    ctx: &'a VariableContext,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (k, (face, e, s)) in self.elem.terms().enumerate() {
            let coeff = format_laurent(e, self.ctx);
            let mag = s.unsigned_abs();
            match (k, s < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            if coeff != "1" {
                write!(f, "{coeff}*")?;
            }
            write!(f, "u{face}")?;
        }
        Ok(())
    }
}

/// Integer combination of faces with no monomial coefficients; the home of
/// the exterior-algebra computations behind `p′` and `φ′`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FaceChain {
    terms: BTreeMap<Face, i64>,
}

impl FaceChain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(face: Face) -> Self {
        let mut c = Self::new();
        c.terms.insert(face, 1);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Face, i64)> + '_ {
        self.terms.iter().map(|(f, c)| (*f, *c))
    }

    pub fn coefficient(&self, f: Face) -> i64 {
        self.terms.get(&f).copied().unwrap_or(0)
    }

    /// Adds `c · u_face`. Coefficients here stay tiny (sums of ±1 over
    /// permutations), so plain arithmetic with a debug overflow check suffices.
    pub fn add(&mut self, face: Face, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(face).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&face);
        }
    }

    pub fn add_chain(&mut self, k: i64, other: &FaceChain) {
        for (f, c) in other.terms() {
            self.add(f, k * c);
        }
    }

    pub fn neg(&self) -> FaceChain {
        FaceChain {
            terms: self.terms.iter().map(|(f, c)| (*f, -c)).collect(),
        }
    }

    /// Coefficient-free simplicial boundary `∂u_J = Σ (−1)^{i+1} u_{J^i}`.
    pub fn boundary(&self) -> FaceChain {
        let mut out = FaceChain::new();
        for (f, c) in self.terms() {
            for (s, g) in f.boundary() {
                out.add(g, s * c);
            }
        }
        out
    }

    /// Exterior product `u_v ∧ self` for a single vertex `v` on the left.
    pub fn wedge_left(&self, v: usize) -> FaceChain {
        let left = Face::singleton(v);
        let mut out = FaceChain::new();
        for (f, c) in self.terms() {
            if let Some((s, g)) = left.wedge(f) {
                out.add(g, s * c);
            }
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = Face> + '_ {
        self.terms.keys().copied()
    }
}

pub(crate) fn laurent_quotient(a: &Monomial, b: &Monomial) -> Result<Laurent> {
    laurent_div(&laurent_of(a), &laurent_of(b))
}
