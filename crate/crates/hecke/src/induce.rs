use std::collections::HashMap;

use crate::algebra::HeckeAlgebra;
use crate::error::{HeckeError, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::module::{char_z, HeckeModule};
use crate::perm::{coset_representatives, parabolic_decomposition, Perm};

/// The outer tensor product of the factors as a module over `H_α`:
/// global generator matrices for the `X_j` and for the `S_i` inside blocks.
struct ParabolicModule {
    field: PrimeField,
    dim: usize,
    s: Vec<Option<Matrix>>,
    x: Vec<Matrix>,
    x_inv: Vec<Matrix>,
}

impl ParabolicModule {
    fn tensor(factors: &[HeckeModule]) -> Self {
        let field = factors[0].field();
        let dims: Vec<usize> = factors.iter().map(HeckeModule::dim).collect();
        let dim = dims.iter().product();
        let embed = |k: usize, m: &Matrix| {
            let before: usize = dims[..k].iter().product();
            let after: usize = dims[k + 1..].iter().product();
            Matrix::identity(field, before)
                .kron(m)
                .kron(&Matrix::identity(field, after))
        };
        let (mut s, mut x, mut x_inv) = (Vec::new(), Vec::new(), Vec::new());
        for (k, m) in factors.iter().enumerate() {
            if k > 0 {
                s.push(None);
            }
            for i in 1..m.rank() {
                s.push(Some(embed(k, m.s(i))));
            }
            for j in 1..=m.rank() {
                x.push(embed(k, m.x(j)));
                x_inv.push(embed(k, m.x_inv(j)));
            }
        }
        ParabolicModule {
            field,
            dim,
            s,
            x,
            x_inv,
        }
    }

    /// Action of `X^λ T_u` for `u` in the Young subgroup.
    fn act(&self, lambda: &[i64], u: &Perm) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dim);
        for (j, &e) in lambda.iter().enumerate() {
            let g = if e >= 0 { &self.x[j] } else { &self.x_inv[j] };
            m = m.mul(&g.pow(e.unsigned_abs()));
        }
        for i in u.reduced_word() {
            m = m.mul(self.s[i].as_ref().expect("letter inside a block"));
        }
        m
    }
}

/// `Hom_{H_α}(H_n, m_1 ⊗ ⋯ ⊗ m_r)` with `(h·f)(x) = f(x h)`, realized on the
/// values `f(T_d)` at the minimal coset representatives `d` of `W_α \ W`.
/// Basis vector `(d, v)` has index `pos(d) · dim(V) + v`.
pub fn induce(alpha: &[usize], factors: &[HeckeModule]) -> Result<HeckeModule> {
    if alpha.len() != factors.len() || alpha.is_empty() {
        return Err(HeckeError::CompositionMismatch(format!(
            "{} parts for {} factors",
            alpha.len(),
            factors.len()
        )));
    }
    for (k, (&a, m)) in alpha.iter().zip(factors).enumerate() {
        if a != m.rank() {
            return Err(HeckeError::CompositionMismatch(format!(
                "part {k} is {a} but the factor has rank {}",
                m.rank()
            )));
        }
        if !m.same_parameters(&factors[0]) {
            return Err(HeckeError::FieldMismatch);
        }
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let field = factors[0].field();
    let xi = factors[0].xi();
    let n: usize = alpha.iter().sum();
    let alg = HeckeAlgebra::new(n, field, xi)?;
    let v = ParabolicModule::tensor(factors);
    let reps = coset_representatives(alpha);
    let index: HashMap<Perm, usize> = reps.iter().cloned().enumerate().map(|(k, d)| (d, k)).collect();
    let big = reps.len() * v.dim;
    let mut cache: HashMap<(Vec<i64>, Perm), Matrix> = HashMap::new();

    let mut image_of = |g: &crate::algebra::HeckeElement| -> Result<Matrix> {
        let mut out = Matrix::zeros(field, big, big);
        for (row, d) in reps.iter().enumerate() {
            let product = alg.multiply(&alg.t(d)?, g)?;
            for ((lambda, w), c) in product.terms() {
                let (u, d2) = parabolic_decomposition(alpha, w);
                let col = index[&d2];
                let block = cache
                    .entry((lambda.clone(), u.clone()))
                    .or_insert_with(|| v.act(lambda, &u));
                for r in 0..v.dim {
                    for cc in 0..v.dim {
                        let val = block.get(r, cc);
                        if val != 0 {
                            let (gr, gc) = (row * v.dim + r, col * v.dim + cc);
                            out.set(gr, gc, field.add(out.get(gr, gc), field.mul(*c, val)));
                        }
                    }
                }
            }
        }
        Ok(out)
    };

    let s = (1..n).map(|i| image_of(&alg.s(i)?)).collect::<Result<Vec<_>>>()?;
    let x = (1..=n).map(|j| image_of(&alg.x(j, 1)?)).collect::<Result<Vec<_>>>()?;
    let x_inv = (1..=n).map(|j| image_of(&alg.x(j, -1)?)).collect::<Result<Vec<_>>>()?;
    HeckeModule::with_inverses(field, xi, s, x, x_inv)
}

/// `𝒮(a,b)`: induced from the restriction of `𝒵(a,b)` to the Laurent
/// subalgebra, of dimension `n!`.
pub fn standard_module(field: PrimeField, xi: u64, a: i64, b: i64) -> Result<HeckeModule> {
    let chi = char_z(field, xi, a, b, 1)?;
    let points = chi
        .x
        .iter()
        .map(|&z| point_module(field, xi, z))
        .collect::<Result<Vec<_>>>()?;
    induce(&vec![1; points.len()], &points)
}

/// Rank-one module `X_1 ↦ z`.
pub fn point_module(field: PrimeField, xi: u64, z: u64) -> Result<HeckeModule> {
    HeckeModule::new(field, xi, vec![], vec![Matrix::from_rows(field, &[vec![z]])])
}
