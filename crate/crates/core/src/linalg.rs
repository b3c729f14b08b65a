//! Dense exact linear algebra over a [`Field`]. Matrices here are small
//! per-strand blocks, so rows are plain vectors.

use crate::field::Field;

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form in place,
/// dropping zero rows. Returns the pivot column of each remaining row.
pub fn rref<F: Field>(f: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = f.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut rows = rows.to_vec();
    rref(f, &mut rows, ncols).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows.
pub fn nullspace<F: Field>(f: &F, a: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut rows = a.to_vec();
    let pivots = rref(f, &mut rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (i, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(i);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(&rows[i][free]);
        }
        out.push(v);
    }
    out
}

/// Incrementally built basis that can express vectors of its span in terms
/// of the accepted input vectors.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    field: F,
    dim: usize,
    vectors: Vec<Vec<F::Elem>>,
    // rows kept in reduced echelon form; row i = sum_k transform[i][k] * vectors[k]
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<F::Elem>>,
}

impl<F: Field> Basis<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Basis {
            field,
            dim,
            vectors: Vec::new(),
            rows: Vec::new(),
            pivots: Vec::new(),
            transform: Vec::new(),
        }
    }

    pub fn from_vectors(field: F, dim: usize, vs: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut b = Self::new(field, dim);
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vec<F::Elem>] {
        &self.vectors
    }

    /// Residual of `v` after clearing every pivot, with the coefficients used.
    fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut res = v.to_vec();
        let mut ys = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let y = res[p].clone();
            if !f.is_zero(&y) {
                for (x, r) in res.iter_mut().zip(row.iter()) {
                    if !f.is_zero(r) {
                        *x = f.sub(x, &f.mul(&y, r));
                    }
                }
            }
            ys.push(y);
        }
        (res, ys)
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let f = self.field.clone();
        let (mut res, ys) = self.reduce(&v);
        let Some(p) = res.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let k = self.vectors.len();
        for t in self.transform.iter_mut() {
            t.push(f.zero());
        }
        // new row = (v - sum ys_i rows_i) / res[p]
        let mut t = vec![f.zero(); k + 1];
        t[k] = f.one();
        for (y, ti) in ys.iter().zip(&self.transform) {
            if f.is_zero(y) {
                continue;
            }
            for (a, b) in t.iter_mut().zip(ti.iter()) {
                *a = f.sub(a, &f.mul(y, b));
            }
        }
        let inv = f.inv(&res[p]);
        for x in res.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for x in t.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (row, tr) in self.rows.iter_mut().zip(self.transform.iter_mut()) {
            let c = row[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(res.iter()) {
                *x = f.sub(x, &f.mul(&c, y));
            }
            for (x, y) in tr.iter_mut().zip(t.iter()) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        self.vectors.push(v);
        self.rows.push(res);
        self.pivots.push(p);
        self.transform.push(t);
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let (res, _) = self.reduce(v);
        res.iter().all(|x| self.field.is_zero(x))
    }

    /// Coefficients `c` with `v = sum c_k vectors[k]`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let (res, ys) = self.reduce(v);
        if !res.iter().all(|x| f.is_zero(x)) {
            return None;
        }
        let mut c = vec![f.zero(); self.vectors.len()];
        for (y, t) in ys.iter().zip(&self.transform) {
            if f.is_zero(y) {
                continue;
            }
            for (a, b) in c.iter_mut().zip(t.iter()) {
                *a = f.add(a, &f.mul(y, b));
            }
        }
        Some(c)
    }
}

/// A particular solution of `A x = b` where `A` is given by its columns.
pub fn solve<F: Field>(f: &F, columns: &[Vec<F::Elem>], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let mut basis = Basis::new(f.clone(), b.len());
    let mut kept = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        if basis.insert(c.clone()) {
            kept.push(j);
        }
    }
    let coords = basis.coordinates(b)?;
    let mut x = vec![f.zero(); columns.len()];
    for (c, j) in coords.into_iter().zip(kept) {
        x[j] = c;
    }
    Some(x)
}
