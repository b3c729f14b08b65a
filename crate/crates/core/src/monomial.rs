//! Exponent-vector monomials, monomial ideals with minimal generators, and
//! the lcm-lattice of an ideal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// Enumeration limits shared by the combinatorial constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Largest generator count for which subsets are enumerated (lattice, Taylor complex).
    pub subsets: usize,
    /// Largest face size fed to the permutation sum defining `p'`.
    pub perms: usize,
    /// Largest generator count for exhaustive order search.
    pub orders: usize,
    /// Largest total positive Tor dimension for Massey tuple enumeration.
    pub massey_classes: usize,
    /// Largest arity for Massey tuple enumeration.
    pub massey_arity: usize,
    /// Largest number of basis tuples in one bar-complex degree.
    pub bar_basis: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            subsets: 20,
            perms: 10,
            orders: 8,
            massey_classes: 24,
            massey_arity: 4,
            bar_basis: 200_000,
        }
    }
}

impl Guards {
    pub fn check_subsets(&self, r: usize) -> Result<()> {
        // faces are u64 bitmasks
        let limit = self.subsets.min(63);
        if r > limit {
            return Err(Error::GuardExceeded {
                what: "generator count for subset enumeration",
                limit,
                actual: r,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidContext("no variables".into()));
        }
        let mut index = HashMap::new();
        let mut owned = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref().trim();
            if !is_identifier(n) {
                return Err(Error::InvalidContext(format!("`{n}` is not an identifier")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(Error::InvalidContext(format!("duplicate variable `{n}`")));
            }
            owned.push(n.to_string());
        }
        Ok(VariableContext {
            names: owned,
            index,
        })
    }

    /// Variables `prefix1, …, prefixm`.
    pub fn numbered(prefix: &str, m: usize) -> Result<Self> {
        let names: Vec<String> = (1..=m).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.len())
    }

    pub fn parse(&self, text: &str) -> Result<Monomial> {
        parse_monomial(text, self)
    }

    pub fn format(&self, m: &Monomial) -> String {
        m.display(self).to_string()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial `x^a` stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial(vec![0; m].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial(exps.into_boxed_slice()))
    }

    pub fn variable(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of variables with a positive exponent.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    fn check_ctx(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::ContextMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        Ok(())
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ctx(other)?;
        Ok(self.lcm(other))
    }

    pub fn try_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ctx(other)?;
        Ok(self.gcd(other))
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ctx(other)?;
        Ok(self.divides(other))
    }

    /// Componentwise max. Panics on a variable-count mismatch.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len(), "monomial context mismatch");
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len(), "monomial context mismatch");
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ctx(other)?;
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            let s = a.checked_add(*b).filter(|s| *s <= MAX_EXPONENT);
            out.push(s.ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(out.into_boxed_slice()))
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }
}

/// Graded order: total degree first, then larger exponents on earlier variables first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ctx.names()[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `term ("*" term)*` with `term = var | var "^" n`; `1` is the unit monomial.
pub fn parse_monomial(text: &str, ctx: &VariableContext) -> Result<Monomial> {
    let malformed = || Error::MalformedMonomial(text.to_string());
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(malformed());
    }
    let mut exps = vec![0u32; ctx.len()];
    if trimmed == "1" {
        return Ok(Monomial(exps.into_boxed_slice()));
    }
    for term in trimmed.split('*') {
        let term = term.trim();
        let (name, power) = match term.split_once('^') {
            Some((n, p)) => {
                let p = p.trim();
                if p.is_empty() || !p.chars().all(|c| c.is_ascii_digit()) {
                    return Err(malformed());
                }
                let v: u64 = p.parse().map_err(|_| Error::ExponentOverflow)?;
                if v == 0 {
                    return Err(malformed());
                }
                if v > MAX_EXPONENT as u64 {
                    return Err(Error::ExponentOverflow);
                }
                (n.trim(), v as u32)
            }
            None => (term, 1),
        };
        if !is_identifier(name) {
            return Err(malformed());
        }
        let i = ctx
            .position(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        exps[i] = exps[i]
            .checked_add(power)
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or(Error::ExponentOverflow)?;
    }
    Ok(Monomial(exps.into_boxed_slice()))
}

/// Monomial ideal given by an ordered list of minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: VariableContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops duplicates and generators divisible by another generator, keeping
    /// the original order of the survivors.
    pub fn minimalize(ctx: &VariableContext, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.nvars() != ctx.len() {
                return Err(Error::ContextMismatch {
                    left: ctx.len(),
                    right: g.nvars(),
                });
            }
        }
        let mut keep: Vec<Monomial> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
            if !redundant {
                keep.push(g.clone());
            }
        }
        Ok(MonomialIdeal {
            ctx: ctx.clone(),
            gens: keep,
        })
    }

    /// Accepts the list only if it is already a minimal generating set.
    pub fn from_minimal(ctx: &VariableContext, gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.len();
        let ideal = Self::minimalize(ctx, gens.clone())?;
        if ideal.gens.len() != n {
            for (i, g) in gens.iter().enumerate() {
                for (j, h) in gens.iter().enumerate() {
                    if i != j && h.divides(g) {
                        return Err(Error::NotMinimalGenerators(format!(
                            "generator {} ({}) is divisible by generator {} ({})",
                            i + 1,
                            ctx.format(g),
                            j + 1,
                            ctx.format(h)
                        )));
                    }
                }
            }
        }
        Ok(ideal)
    }

    /// Takes the list as given, even when some generator divides another.
    /// Only the Taylor complex is meaningful for such presentations.
    pub fn from_list(ctx: &VariableContext, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.nvars() != ctx.len() {
                return Err(Error::ContextMismatch {
                    left: ctx.len(),
                    right: g.nvars(),
                });
            }
        }
        Ok(MonomialIdeal {
            ctx: ctx.clone(),
            gens,
        })
    }

    /// True when no generator divides another.
    pub fn is_minimal(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, g)| {
            self.gens
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || !h.divides(g))
        })
    }

    pub fn parse<S: AsRef<str>>(ctx: &VariableContext, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| parse_monomial(g.as_ref(), ctx))
            .collect::<Result<Vec<_>>>()?;
        Self::from_minimal(ctx, gens)
    }

    pub fn ctx(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &Monomial {
        &self.gens[i]
    }

    /// Number of minimal generators `r`.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// lcm of the generators whose (0-based) indices are set in `mask`.
    pub fn lcm_of_mask(&self, mask: u64) -> Monomial {
        let mut exps = vec![0u32; self.nvars()];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            for (e, g) in exps.iter_mut().zip(self.gens[i].exponents()) {
                *e = (*e).max(*g);
            }
        }
        Monomial(exps.into_boxed_slice())
    }

    /// Bitmask of generators dividing `m`.
    pub fn dividing_mask(&self, m: &Monomial) -> u64 {
        self.gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.divides(m))
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    pub fn format(&self, m: &Monomial) -> String {
        self.ctx.format(m)
    }

    pub fn has_linear_generator(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 1)
    }

    /// Same generators in a new order; `perm[k]` is the old index placed at position `k`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.len()).map_err(Error::InvalidOrder)?;
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: perm.iter().map(|&i| self.gens[i].clone()).collect(),
        })
    }
}

pub(crate) fn check_permutation(perm: &[usize], r: usize) -> std::result::Result<(), String> {
    if perm.len() != r {
        return Err(format!("expected {r} entries, found {}", perm.len()));
    }
    let mut seen = vec![false; r];
    for &p in perm {
        if p >= r || seen[p] {
            return Err(format!("not a permutation of 1..={r}"));
        }
        seen[p] = true;
    }
    Ok(())
}

/// The lcm-lattice `L(I)`: every lcm of a nonempty generator subset, plus `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
    tags: Vec<u64>,
    index: HashMap<Monomial, usize>,
}

impl LcmLattice {
    pub fn build(ideal: &MonomialIdeal, guards: &Guards) -> Result<Self> {
        guards.check_subsets(ideal.len())?;
        let mut set: HashMap<Monomial, ()> = HashMap::new();
        let mut frontier: Vec<Monomial> = Vec::new();
        for g in ideal.generators() {
            if set.insert(g.clone(), ()).is_none() {
                frontier.push(g.clone());
            }
        }
        // closing under lcm with single generators reaches every subset lcm
        while let Some(m) = frontier.pop() {
            for g in ideal.generators() {
                let l = m.lcm(g);
                if !set.contains_key(&l) {
                    set.insert(l.clone(), ());
                    frontier.push(l);
                }
            }
        }
        let mut elements: Vec<Monomial> = set.into_keys().collect();
        elements.push(ideal.ctx().one());
        elements.sort();
        elements.dedup();
        let tags = elements.iter().map(|e| ideal.dividing_mask(e)).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(LcmLattice {
            elements,
            tags,
            index,
        })
    }

    /// Elements in graded order; index 0 is `0̂ = 1`.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generators dividing element `i`, as a bitmask.
    pub fn tags(&self, i: usize) -> u64 {
        self.tags[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn bottom(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice has at least 0̂")
    }

    /// `lcm(m, generators)` of the generators dividing `m`; the smallest lattice
    /// element through which every label dividing `m` factors.
    pub fn floor(&self, ideal: &MonomialIdeal, m: &Monomial) -> Monomial {
        ideal.lcm_of_mask(ideal.dividing_mask(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> VariableContext {
        VariableContext::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parse_examples() {
        let ctx = xyz();
        assert_eq!(ctx.parse("x*y").unwrap().exponents(), &[1, 1, 0]);
        let c3 = VariableContext::new(&["x1", "x2", "x3"]).unwrap();
        assert_eq!(c3.parse("x1^2*x3").unwrap().exponents(), &[2, 0, 1]);
        let cx = VariableContext::new(&["x"]).unwrap();
        assert_eq!(cx.parse("x*x").unwrap().exponents(), &[2]);
        assert_eq!(ctx.parse(" x ^ 2 * z ").unwrap().exponents(), &[2, 0, 1]);
        assert!(ctx.parse("1").unwrap().is_one());
    }

    #[test]
    fn parse_errors() {
        let ctx = xyz();
        assert_eq!(ctx.parse("w"), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(ctx.parse("x^"), Err(Error::MalformedMonomial(_))));
        assert!(matches!(ctx.parse("x^0"), Err(Error::MalformedMonomial(_))));
        assert!(matches!(
            ctx.parse("x^-1"),
            Err(Error::MalformedMonomial(_))
        ));
        assert!(matches!(
            ctx.parse("x**y"),
            Err(Error::MalformedMonomial(_))
        ));
        assert!(matches!(ctx.parse(""), Err(Error::MalformedMonomial(_))));
        assert_eq!(ctx.parse("x^2147483648"), Err(Error::ExponentOverflow));
        assert_eq!(ctx.parse("x^2147483647*x"), Err(Error::ExponentOverflow));
        assert!(ctx.parse("x^2147483647").is_ok());
    }

    #[test]
    fn context_validation() {
        assert!(VariableContext::new::<&str>(&[]).is_err());
        assert!(VariableContext::new(&["x", "x"]).is_err());
        assert!(VariableContext::new(&["2x"]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let ctx = xyz();
        let p = |s: &str| ctx.parse(s).unwrap();
        assert_eq!(p("x*y").lcm(&p("y*z")), p("x*y*z"));
        assert!(p("x^2").gcd(&p("y^2")).is_one());
        assert!(p("x*y").divides(&p("x*y*z")));
        assert!(!p("x*y*z").divides(&p("x*y")));
        let other = VariableContext::new(&["x"]).unwrap().parse("x").unwrap();
        assert!(matches!(
            p("x").try_lcm(&other),
            Err(Error::ContextMismatch { .. })
        ));
        assert_eq!(ctx.format(&p("x^2*z")), "x^2*z");
        assert_eq!(ctx.format(&ctx.one()), "1");
    }

    #[test]
    fn minimalize_examples() {
        let ctx = VariableContext::new(&["x", "y"]).unwrap();
        let p = |s: &str| ctx.parse(s).unwrap();
        let i = MonomialIdeal::minimalize(&ctx, vec![p("x^2"), p("x^2*y"), p("y")]).unwrap();
        assert_eq!(i.generators(), &[p("x^2"), p("y")]);
        let i = MonomialIdeal::minimalize(&ctx, vec![p("x"), p("x"), p("x^2")]).unwrap();
        assert_eq!(i.generators(), &[p("x")]);
        let c3 = xyz();
        let q = |s: &str| c3.parse(s).unwrap();
        let i = MonomialIdeal::minimalize(&c3, vec![q("x*y"), q("y*z"), q("x*z")]).unwrap();
        assert_eq!(i.len(), 3);
        assert_eq!(
            MonomialIdeal::minimalize(&ctx, vec![]),
            Err(Error::EmptyGenerators)
        );
        assert!(matches!(
            MonomialIdeal::parse(&ctx, &["x", "x*y"]),
            Err(Error::NotMinimalGenerators(_))
        ));
    }

    #[test]
    fn lattice_examples() {
        let ctx = xyz();
        let g = Guards::default();
        let tri = MonomialIdeal::parse(&ctx, &["x*y", "y*z", "x*z"]).unwrap();
        let l = LcmLattice::build(&tri, &g).unwrap();
        let got: Vec<String> = l.elements().iter().map(|m| ctx.format(m)).collect();
        assert_eq!(got, vec!["1", "x*y", "x*z", "y*z", "x*y*z"]);
        assert_eq!(
            l.tags(l.index_of(&ctx.parse("x*y*z").unwrap()).unwrap()),
            0b111
        );

        let i = MonomialIdeal::parse(&ctx, &["x^2"]).unwrap();
        assert_eq!(LcmLattice::build(&i, &g).unwrap().len(), 2);
        let i = MonomialIdeal::parse(&ctx, &["x^2", "y^2"]).unwrap();
        let l = LcmLattice::build(&i, &g).unwrap();
        let got: Vec<String> = l.elements().iter().map(|m| ctx.format(m)).collect();
        assert_eq!(got, vec!["1", "x^2", "y^2", "x^2*y^2"]);

        let tight = Guards {
            subsets: 2,
            ..Guards::default()
        };
        assert!(LcmLattice::build(&tri, &tight).unwrap_err().is_guard());
    }

    fn small_monomial(m: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, m).prop_map(|e| Monomial::from_exponents(e).unwrap())
    }

    fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(small_monomial(3), 1..7).prop_filter_map("nonzero", |gens| {
            let ctx = xyz();
            let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_one()).collect();
            MonomialIdeal::minimalize(&ctx, gens).ok()
        })
    }

    proptest! {
        #[test]
        fn lcm_gcd_laws(a in small_monomial(3), b in small_monomial(3), c in small_monomial(3)) {
            let one = Monomial::one(3);
            prop_assert_eq!(a.lcm(&b), b.lcm(&a));
            prop_assert_eq!(a.gcd(&b), b.gcd(&a));
            prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
            prop_assert_eq!(a.gcd(&b).gcd(&c), a.gcd(&b.gcd(&c)));
            prop_assert_eq!(a.lcm(&a), a.clone());
            prop_assert_eq!(a.gcd(&a), a.clone());
            prop_assert_eq!(a.lcm(&one), a.clone());
            prop_assert_eq!(a.gcd(&one), one.clone());
            prop_assert!(a.divides(&a.lcm(&b)));
            prop_assert!(a.gcd(&b).divides(&a));
        }

        #[test]
        fn lattice_is_subset_lcms(ideal in small_ideal()) {
            let l = LcmLattice::build(&ideal, &Guards::default()).unwrap();
            let r = ideal.len();
            let mut brute: Vec<Monomial> = (1u64..(1 << r)).map(|s| ideal.lcm_of_mask(s)).collect();
            brute.push(Monomial::one(3));
            brute.sort();
            brute.dedup();
            prop_assert_eq!(l.elements(), &brute[..]);
            prop_assert!(l.len() <= (1 << r) + 1);
            for (k, e) in l.elements().iter().enumerate() {
                for (i, g) in ideal.generators().iter().enumerate() {
                    prop_assert_eq!(g.divides(e), l.tags(k) & (1 << i) != 0);
                }
            }
        }

        #[test]
        fn display_round_trips(a in small_monomial(3)) {
            let ctx = xyz();
            prop_assert_eq!(ctx.parse(&ctx.format(&a)).unwrap(), a);
        }
    }
}
