use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::central::central_character;
use crate::error::{HeckeError, Result};
use crate::field::PrimeField;
use crate::matrix::{spin, Matrix, Subspace};
use crate::module::HeckeModule;

/// Dimension bound below which irreducible verdicts are cross-checked by
/// computing the enveloping algebra.
pub const BURNSIDE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Dimension one.
    Trivial,
    /// A vector spun to a proper submodule of this dimension.
    Submodule { dim: usize },
    /// A vector of the dual module spun to a proper submodule, so the module
    /// has a proper quotient of dimension `dim`.
    Quotient { dim: usize },
    /// Norton's criterion held for an irreducible factor of this degree.
    Norton { factor_degree: usize, attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    pub irreducible: bool,
    pub certificate: Certificate,
    /// `Some(true)` when the enveloping algebra is the full matrix algebra;
    /// only computed for irreducible verdicts in small dimension.
    pub burnside: Option<bool>,
}

pub fn is_irreducible(m: &HeckeModule, seed: u64) -> bool {
    meataxe(m, seed).irreducible
}

pub fn meataxe(m: &HeckeModule, seed: u64) -> Irreducibility {
    let gens = m.algebra_generators();
    let mut report = meataxe_matrices(m.field(), m.dim(), &gens, seed);
    if report.irreducible && m.dim() > 1 && m.dim() <= BURNSIDE_LIMIT {
        report.burnside = Some(enveloping_dimension(m.field(), m.dim(), &gens) == m.dim() * m.dim());
    }
    report
}

/// Holt–Rees style Las Vegas test on the algebra generated by `gens`.
pub fn meataxe_matrices(field: PrimeField, dim: usize, gens: &[Matrix], seed: u64) -> Irreducibility {
    let verdict = |irreducible, certificate| Irreducibility {
        irreducible,
        certificate,
        burnside: None,
    };
    if dim <= 1 {
        return verdict(true, Certificate::Trivial);
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Matrix> = gens.to_vec();
    let mut attempts = 0;
    loop {
        attempts += 1;
        let theta = random_element(field, dim, &mut pool, &mut rng);
        for factor in theta.charpoly().irreducible_factors(&mut rng) {
            let deg = factor.degree().unwrap_or(0);
            let kernel = theta.eval_poly(&factor).nullspace();
            if kernel.is_empty() {
                continue;
            }
            let v = random_combination(field, &kernel, &mut rng);
            let sub = spin(field, &[v], gens).dim();
            if sub < dim {
                return verdict(false, Certificate::Submodule { dim: sub });
            }
            let dual_kernel = theta.transpose().eval_poly(&factor).nullspace();
            let w = random_combination(field, &dual_kernel, &mut rng);
            let dual_sub = spin(field, &[w], &transposed).dim();
            if dual_sub < dim {
                return verdict(false, Certificate::Quotient { dim: dim - dual_sub });
            }
            if kernel.len() == deg {
                return verdict(
                    true,
                    Certificate::Norton {
                        factor_degree: deg,
                        attempts,
                    },
                );
            }
        }
    }
}

fn random_combination<R: Rng>(field: PrimeField, basis: &[Vec<u64>], rng: &mut R) -> Vec<u64> {
    loop {
        let mut v = vec![0; basis[0].len()];
        for b in basis {
            let c = rng.gen_range(0..field.p());
            for (x, y) in v.iter_mut().zip(b) {
                *x = field.add(*x, field.mul(c, *y));
            }
        }
        if v.iter().any(|x| *x != 0) {
            return v;
        }
    }
}

/// Random linear combination over a pool grown by random products.
fn random_element<R: Rng>(field: PrimeField, dim: usize, pool: &mut Vec<Matrix>, rng: &mut R) -> Matrix {
    const POOL_CAP: usize = 24;
    let a = rng.gen_range(0..pool.len());
    let b = rng.gen_range(0..pool.len());
    let product = pool[a].mul(&pool[b]);
    if pool.len() < POOL_CAP {
        pool.push(product);
    } else {
        let slot = rng.gen_range(0..pool.len());
        pool[slot] = product;
    }
    let mut theta = Matrix::zeros(field, dim, dim);
    for m in pool.iter() {
        let c = rng.gen_range(0..field.p());
        if c != 0 {
            theta = theta.add(&m.scale(c));
        }
    }
    theta
}

/// Dimension of the algebra spanned by all words in `gens`.
pub fn enveloping_dimension(field: PrimeField, dim: usize, gens: &[Matrix]) -> usize {
    let flat = |m: &Matrix| -> Vec<u64> { m.to_rows().concat() };
    let mut space = Subspace::new(field, dim * dim);
    let id = Matrix::identity(field, dim);
    space.insert(&flat(&id));
    let mut queue = vec![id];
    while let Some(w) = queue.pop() {
        for g in gens {
            let next = g.mul(&w);
            if space.insert(&flat(&next)) {
                queue.push(next);
            }
        }
    }
    space.dim()
}

/// Dimension of `Hom_H(M, N)`, solved exactly as the nullspace of the
/// intertwining equations `X A_M = A_N X`.
pub fn hom_dimension(m: &HeckeModule, n: &HeckeModule) -> Result<usize> {
    if !m.same_parameters(n) || m.rank() != n.rank() {
        return Err(HeckeError::FieldMismatch);
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let gm = m.algebra_generators();
    let gn = n.algebra_generators();
    let mut rows = Vec::with_capacity(gm.len() * unknowns);
    for (am, an) in gm.iter().zip(&gn) {
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![0; unknowns];
                for k in 0..dn {
                    let v = an.get(r, k);
                    row[k * dm + c] = f.add(row[k * dm + c], v);
                }
                for k in 0..dm {
                    let v = am.get(k, c);
                    row[r * dm + k] = f.sub(row[r * dm + k], v);
                }
                rows.push(row);
            }
        }
    }
    Ok(Matrix::from_rows(f, &rows).nullspace().len())
}

/// Isomorphism of two irreducible modules: equal dimension, equal central
/// character when it is defined, and a nonzero intertwiner.
pub fn are_isomorphic(m: &HeckeModule, n: &HeckeModule) -> Result<bool> {
    if !m.same_parameters(n) || m.rank() != n.rank() {
        return Err(HeckeError::FieldMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if let (Ok(a), Ok(b)) = (central_character(m), central_character(n)) {
        if a != b {
            return Ok(false);
        }
    }
    Ok(hom_dimension(m, n)? > 0)
}
