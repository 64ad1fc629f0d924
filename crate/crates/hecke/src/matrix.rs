use std::fmt;

use crate::error::{HeckeError, Result};
use crate::field::PrimeField;
use crate::poly::Poly;

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix over F_{} ({}x{})", self.field.p(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        Self::scalar(field, n, 1)
    }

    pub fn scalar(field: PrimeField, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % field.p();
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, v) in row.iter().enumerate() {
                m.data[r * cols + c] = v % field.p();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, *v);
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(*a, *b)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = self.field;
        Matrix {
            data: self.data.iter().map(|a| f.mul(*a, c)).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.field.p();
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = (out.data[idx] + a * other.get(k, c)) % p;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p();
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (a, b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0)
    }

    /// `Some(c)` when the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<u64> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { 0 } else { self.get(0, 0) };
        (*self == Self::scalar(self.field, self.rows, c)).then_some(c)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a == 0 {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r * other.rows + r2,
                            c * other.cols + c2,
                            self.field.mul(a, other.get(r2, c2)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
            for c in 0..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(HeckeError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(HeckeError::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        let mut m = self.clone();
        let mut det = 1;
        for col in 0..m.cols {
            let Some(piv) = (col..m.rows).find(|&r| m.get(r, col) != 0) else {
                return 0;
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..m.rows {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// `A^k` for `k >= 0`.
    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `f(A)` by Horner's rule.
    pub fn eval_poly(&self, poly: &Poly) -> Matrix {
        let mut acc = Self::zeros(self.field, self.rows, self.cols);
        for c in poly.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::scalar(self.field, self.rows, *c));
        }
        acc
    }

    /// Characteristic polynomial `det(tI - A)`, via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            h.swap_rows(piv, m);
            h.swap_cols(piv, m);
            let inv = f.inv(h.get(m, m - 1)).expect("nonzero pivot");
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(i, c), f.mul(u, h.get(m, c)));
                    h.set(i, c, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        // p_{k+1} = (t - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
        let mut polys = vec![Poly::one(f)];
        for k in 0..n {
            let t_minus = Poly::new(f, vec![f.neg(h.get(k, k)), 1]);
            let mut next = polys[k].mul(&t_minus);
            let mut sub_diag = 1;
            for i in (0..k).rev() {
                sub_diag = f.mul(sub_diag, h.get(i + 1, i));
                let coeff = f.mul(h.get(i, k), sub_diag);
                if coeff != 0 {
                    next = next.sub(&polys[i].scale(coeff));
                }
            }
            polys.push(next);
        }
        polys.pop().expect("nonempty")
    }
}

/// Echelonized subspace of `F_p^d`, kept in reduced form for membership
/// tests.
#[derive(Debug, Clone)]
pub struct Subspace {
    field: PrimeField,
    dim: usize,
    // each basis row has a leading 1 at pivots[i] and zeros at other pivots
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Subspace {
            field,
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut w = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c != 0 {
                for (x, y) in w.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        w
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|x| *x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for b in self.basis.iter_mut() {
            let c = b[pc];
            if c != 0 {
                for (x, y) in b.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        self.basis.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|x| *x == 0)
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `gens`.
pub fn spin(field: PrimeField, seeds: &[Vec<u64>], gens: &[Matrix]) -> Subspace {
    let dim = gens.first().map_or_else(|| seeds.first().map_or(0, Vec::len), Matrix::rows);
    let mut space = Subspace::new(field, dim);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for s in seeds {
        if space.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if space.dim() == dim {
            break;
        }
        for g in gens {
            let w = g.apply(&v);
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    space
}
