//! Poincaré series: the Golod bound `(1+t)^m / (1 − t(Σ β_j t^j − 1))` as a
//! truncated power series, and `dim Tor^R_j(k, k)` from the normalized bar
//! complex of `R = S/I`.
//!
//! The bar complex is multigraded by monomials, so its homology is computed one
//! multidegree at a time and is exact there. The only approximation is which
//! multidegrees are included: those of total degree at most a per-`j` cap.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldConfig};
use crate::linalg;
use crate::monomial::{Guards, Monomial, MonomialIdeal};
use crate::par;
use crate::with_field;

/// `Σ_{n ≤ N} c_n t^n` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coefficients: Vec<i128>,
}

impl PowerSeries {
    /// Truncation order `N` (the series has `N + 1` coefficients).
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn from_polynomial(coeffs: &[i128], order: usize) -> Self {
        let mut c = vec![0; order + 1];
        for (i, v) in coeffs.iter().enumerate().take(order + 1) {
            c[i] = *v;
        }
        PowerSeries { coefficients: c }
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let n = self.order().min(other.order());
        let mut c = vec![0i128; n + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(n + 1) {
            for (j, b) in other.coefficients.iter().enumerate().take(n + 1 - i) {
                let p = a.checked_mul(*b).ok_or(Error::CoefficientOverflow)?;
                c[i + j] = c[i + j].checked_add(p).ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(PowerSeries { coefficients: c })
    }

    /// `self / other`; `other` must have constant term 1.
    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if other.coefficients.first() != Some(&1) {
            return Err(Error::InvalidInput(
                "divisor must have constant term 1".into(),
            ));
        }
        let n = self.order().min(other.order());
        let mut q = vec![0i128; n + 1];
        for k in 0..=n {
            let mut v = self.coefficients[k];
            for i in 1..=k {
                let p = other.coefficients[i]
                    .checked_mul(q[k - i])
                    .ok_or(Error::CoefficientOverflow)?;
                v = v.checked_sub(p).ok_or(Error::CoefficientOverflow)?;
            }
            q[k] = v;
        }
        Ok(PowerSeries { coefficients: q })
    }
}

/// The Serre–Golod bound for `betti = (β_0, β_1, …)` and `m` variables, to order `N`.
pub fn golod_bound_series(betti: &[u64], m: usize, order: usize) -> Result<PowerSeries> {
    if betti.first() != Some(&1) {
        return Err(Error::InvalidInput(
            "the Betti sequence must start with 1".into(),
        ));
    }
    // (1 + t)^m
    let mut num = vec![0i128; order + 1];
    num[0] = 1;
    for _ in 0..m {
        for k in (1..=order).rev() {
            num[k] = num[k]
                .checked_add(num[k - 1])
                .ok_or(Error::CoefficientOverflow)?;
        }
    }
    // 1 − Σ_{j≥1} β_j t^{j+1}
    let mut den = vec![0i128; order + 1];
    den[0] = 1;
    for (j, &b) in betti.iter().enumerate().skip(1) {
        if j < order {
            den[j + 1] = -(b as i128);
        }
    }
    PowerSeries { coefficients: num }.div(&PowerSeries { coefficients: den })
}

/// Default internal-degree cap for `Tor^R_j(k, k)`: `j · max(D − 1, 1)` with `D`
/// the largest generator degree.
pub fn default_cap(ideal: &MonomialIdeal, j: usize) -> usize {
    let d = ideal
        .generators()
        .iter()
        .map(|g| g.degree())
        .max()
        .unwrap_or(1) as usize;
    j * d.saturating_sub(1).max(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarTorDim {
    pub j: usize,
    pub cap: usize,
    /// `dim Tor^R_j(k,k)` over multidegrees of total degree ≤ cap.
    pub dim: u64,
    /// Dimensions at `cap + 1` and `cap + 2`.
    pub dim_cap_plus: [u64; 2],
    /// Heuristic: the dimension did not change over the two extra cap steps.
    pub stabilized: bool,
    pub basis_size: usize,
}

/// Standard monomials of `R` of total degree in `1..=max_deg`, by degree then exponents.
fn standard_monomials(
    ideal: &MonomialIdeal,
    max_deg: usize,
    limit: usize,
) -> Result<Vec<Monomial>> {
    let m = ideal.nvars();
    let mut out = Vec::new();
    let mut layer = vec![Monomial::one(m)];
    for _ in 1..=max_deg {
        let mut next = std::collections::BTreeSet::new();
        for mono in &layer {
            for v in 0..m {
                let e = mono.mul(&Monomial::variable(m, v))?;
                if !ideal.contains(&e) {
                    next.insert(e);
                }
            }
        }
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
        if out.len() > limit {
            return Err(Error::GuardExceeded {
                what: "bar complex basis",
                limit,
                actual: out.len(),
            });
        }
    }
    Ok(out)
}

struct BarData {
    monos: Vec<Monomial>,
    degree: Vec<usize>,
    index: HashMap<Monomial, u32>,
}

impl BarData {
    /// Tuples of length `len` with total degree ≤ `budget`, grouped by multidegree.
    fn tuples(
        &self,
        len: usize,
        budget: usize,
        limit: usize,
    ) -> Result<HashMap<Monomial, Vec<Vec<u32>>>> {
        let mut out: HashMap<Monomial, Vec<Vec<u32>>> = HashMap::new();
        let mut count = 0usize;
        let mut cur = Vec::with_capacity(len);
        self.extend(len, budget, &mut cur, &mut out, &mut count, limit)?;
        Ok(out)
    }

    fn extend(
        &self,
        len: usize,
        budget: usize,
        cur: &mut Vec<u32>,
        out: &mut HashMap<Monomial, Vec<Vec<u32>>>,
        count: &mut usize,
        limit: usize,
    ) -> Result<()> {
        if cur.len() == len {
            let m = self.monos.first().map_or(0, |x| x.nvars());
            let mut prod = Monomial::one(m);
            for &i in cur.iter() {
                prod = prod.mul(&self.monos[i as usize])?;
            }
            out.entry(prod).or_default().push(cur.clone());
            *count += 1;
            if *count > limit {
                return Err(Error::GuardExceeded {
                    what: "bar complex basis",
                    limit,
                    actual: *count,
                });
            }
            return Ok(());
        }
        // every remaining slot needs degree ≥ 1
        let remaining = len - cur.len() - 1;
        for (i, &d) in self.degree.iter().enumerate() {
            if d + remaining > budget {
                break;
            }
            cur.push(i as u32);
            self.extend(len, budget - d, cur, out, count, limit)?;
            cur.pop();
        }
        Ok(())
    }
}

/// Matrix of `b: B_len → B_{len−1}` restricted to one multidegree.
fn bar_rows<F: Field>(
    f: &F,
    data: &BarData,
    ideal: &MonomialIdeal,
    src: &[Vec<u32>],
    dst: &[Vec<u32>],
) -> Result<Vec<Vec<F::Elem>>> {
    let row_of: HashMap<&[u32], usize> = dst.iter().enumerate().map(|(i, t)| (&t[..], i)).collect();
    let mut rows = vec![vec![f.zero(); src.len()]; dst.len()];
    for (c, t) in src.iter().enumerate() {
        for i in 0..t.len().saturating_sub(1) {
            let p = data.monos[t[i] as usize].mul(&data.monos[t[i + 1] as usize])?;
            if ideal.contains(&p) {
                continue;
            }
            let Some(&pi) = data.index.get(&p) else {
                return Err(Error::Internal(
                    "bar product outside the enumerated range".into(),
                ));
            };
            let mut target = Vec::with_capacity(t.len() - 1);
            target.extend_from_slice(&t[..i]);
            target.push(pi);
            target.extend_from_slice(&t[i + 2..]);
            let r = *row_of
                .get(&target[..])
                .ok_or_else(|| Error::Internal("bar face outside the enumerated range".into()))?;
            // (−1)^{i+1} for merging positions i, i+1 (0-based)
            let s = if i % 2 == 0 { -1 } else { 1 };
            rows[r][c] = f.add(&rows[r][c], &f.from_i64(s));
        }
    }
    Ok(rows)
}

fn bar_tor_dim_generic<F: Field>(
    f: &F,
    ideal: &MonomialIdeal,
    j: usize,
    cap: usize,
    guards: &Guards,
) -> Result<BarTorDim> {
    if j == 0 {
        return Ok(BarTorDim {
            j,
            cap,
            dim: 1,
            dim_cap_plus: [1, 1],
            stabilized: true,
            basis_size: 1,
        });
    }
    let budget = cap + 2;
    let limit = guards.bar_basis;
    let monos = standard_monomials(ideal, budget, limit)?;
    let degree: Vec<usize> = monos.iter().map(|m| m.degree() as usize).collect();
    let index = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let data = BarData {
        monos,
        degree,
        index,
    };

    let lower = if j >= 2 {
        data.tuples(j - 1, budget, limit)?
    } else {
        HashMap::new()
    };
    let middle = data.tuples(j, budget, limit)?;
    let upper = data.tuples(j + 1, budget, limit)?;
    let basis_size = lower
        .values()
        .chain(middle.values())
        .chain(upper.values())
        .map(Vec::len)
        .sum();

    let mut keys: Vec<&Monomial> = middle.keys().collect();
    keys.sort();
    let empty: Vec<Vec<u32>> = Vec::new();
    let per_degree = par::map(&keys, |mu| -> Result<(usize, u64)> {
        let mid = &middle[*mu];
        let low = if j == 1 {
            &empty
        } else {
            lower.get(*mu).unwrap_or(&empty)
        };
        let up = upper.get(*mu).unwrap_or(&empty);
        let r_out = if j == 1 {
            // B_0 = k in multidegree 1 only; b_1 = 0 on R_+.
            0
        } else {
            linalg::rank(f, &bar_rows(f, &data, ideal, mid, low)?, mid.len())
        };
        let r_in = if up.is_empty() {
            0
        } else {
            linalg::rank(f, &bar_rows(f, &data, ideal, up, mid)?, up.len())
        };
        Ok((mu.degree() as usize, (mid.len() - r_out - r_in) as u64))
    });
    let mut dims = [0u64; 3];
    for r in per_degree {
        let (d, h) = r?;
        for (k, slot) in dims.iter_mut().enumerate() {
            if d <= cap + k {
                *slot += h;
            }
        }
    }
    Ok(BarTorDim {
        j,
        cap,
        dim: dims[0],
        dim_cap_plus: [dims[1], dims[2]],
        stabilized: dims[0] == dims[1] && dims[1] == dims[2],
        basis_size,
    })
}

/// `dim Tor^R_j(k, k)` for `j ≤ j_max`; `caps[j]` overrides the default cap.
pub fn bar_tor_dims(
    ideal: &MonomialIdeal,
    j_max: usize,
    caps: Option<&[usize]>,
    field: FieldConfig,
    guards: &Guards,
) -> Result<Vec<BarTorDim>> {
    (0..=j_max)
        .map(|j| {
            let cap = caps
                .and_then(|c| c.get(j).copied())
                .unwrap_or_else(|| default_cap(ideal, j));
            with_field!(field, f => bar_tor_dim_generic(&f, ideal, j, cap, guards))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Equal,
    Below,
    /// The oracle exceeds the bound: impossible for a stabilized value.
    Above,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientComparison {
    pub j: usize,
    pub bound: i128,
    pub oracle: u64,
    pub relation: Relation,
    pub stabilized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareReport {
    pub betti: Vec<u64>,
    pub nvars: usize,
    pub bound: PowerSeries,
    pub oracle: Vec<BarTorDim>,
    pub comparisons: Vec<CoefficientComparison>,
    /// Why the oracle stopped before the truncation order, if it did.
    pub oracle_stopped: Option<String>,
    /// Coefficient-wise oracle ≤ bound on the computed range.
    pub serre_inequality: bool,
    /// Equality on every computed coefficient.
    pub equality: bool,
    /// Smallest `j` with strict inequality, if any.
    pub first_strict: Option<usize>,
}

/// Bound series from `betti`, compared with bar-complex dimensions up to
/// `order` (or as far as the guards allow).
pub fn poincare_report(
    ideal: &MonomialIdeal,
    betti: &[u64],
    order: usize,
    caps: Option<&[usize]>,
    field: FieldConfig,
    guards: &Guards,
) -> Result<PoincareReport> {
    let bound = golod_bound_series(betti, ideal.nvars(), order)?;
    let mut oracle = Vec::new();
    let mut stopped = None;
    for j in 0..=order {
        let cap = caps
            .and_then(|c| c.get(j).copied())
            .unwrap_or_else(|| default_cap(ideal, j));
        match with_field!(field, f => bar_tor_dim_generic(&f, ideal, j, cap, guards)) {
            Ok(d) => oracle.push(d),
            Err(e) if e.is_guard() => {
                stopped = Some(format!("j = {j}: {e}"));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let comparisons: Vec<CoefficientComparison> = oracle
        .iter()
        .map(|d| {
            let b = bound.coefficients[d.j];
            let o = d.dim as i128;
            CoefficientComparison {
                j: d.j,
                bound: b,
                oracle: d.dim,
                relation: match o.cmp(&b) {
                    std::cmp::Ordering::Equal => Relation::Equal,
                    std::cmp::Ordering::Less => Relation::Below,
                    std::cmp::Ordering::Greater => Relation::Above,
                },
                stabilized: d.stabilized,
            }
        })
        .collect();
    let serre_inequality = comparisons.iter().all(|c| c.relation != Relation::Above);
    let equality = comparisons.iter().all(|c| c.relation == Relation::Equal);
    let first_strict = comparisons
        .iter()
        .find(|c| c.relation == Relation::Below)
        .map(|c| c.j);
    Ok(PoincareReport {
        betti: betti.to_vec(),
        nvars: ideal.nvars(),
        bound,
        oracle,
        comparisons,
        oracle_stopped: stopped,
        serre_inequality,
        equality,
        first_strict,
    })
}
