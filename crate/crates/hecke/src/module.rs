use serde::Serialize;

use crate::algebra::HeckeElement;
use crate::error::{HeckeError, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// Finite-dimensional left `H_n(ξ)`-module given by generator matrices
/// acting on column vectors. Every defining relation is checked at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeModule {
    field: PrimeField,
    xi: u64,
    n: usize,
    dim: usize,
    s: Vec<Matrix>,
    x: Vec<Matrix>,
    x_inv: Vec<Matrix>,
}

impl HeckeModule {
    /// Builds a module from `S_1..S_{n-1}` and `X_1..X_n`; the `X_j` must be
    /// invertible.
    pub fn new(field: PrimeField, xi: u64, s: Vec<Matrix>, x: Vec<Matrix>) -> Result<Self> {
        let x_inv = x.iter().map(Matrix::inverse).collect::<Result<Vec<_>>>()?;
        Self::with_inverses(field, xi, s, x, x_inv)
    }

    pub fn with_inverses(
        field: PrimeField,
        xi: u64,
        s: Vec<Matrix>,
        x: Vec<Matrix>,
        x_inv: Vec<Matrix>,
    ) -> Result<Self> {
        let xi = xi % field.p();
        if xi == 0 {
            return Err(HeckeError::ZeroParameter);
        }
        let n = x.len();
        if n == 0 || s.len() + 1 != n || x_inv.len() != n {
            return Err(HeckeError::DimensionMismatch(format!(
                "{} S-matrices, {} X-matrices, {} inverses",
                s.len(),
                n,
                x_inv.len()
            )));
        }
        let dim = x[0].rows();
        if s.iter().chain(&x).chain(&x_inv).any(|m| {
            m.rows() != dim || m.cols() != dim || m.field() != field
        }) {
            return Err(HeckeError::DimensionMismatch("generator shapes differ".into()));
        }
        let module = HeckeModule {
            field,
            xi,
            n,
            dim,
            s,
            x,
            x_inv,
        };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let f = self.field;
        let id = Matrix::identity(f, self.dim);
        let fail = |name: String| Err(HeckeError::RelationFailed(name));
        for (i, si) in self.s.iter().enumerate() {
            let lhs = si.add(&id).mul(&si.sub(&id.scale(self.xi)));
            if !lhs.is_zero() {
                return fail(format!("(S{0}+1)(S{0}-xi) = 0", i + 1));
            }
            for (j, sj) in self.s.iter().enumerate().skip(i + 2) {
                if si.mul(sj) != sj.mul(si) {
                    return fail(format!("S{} S{} = S{1} S{0}", i + 1, j + 1));
                }
            }
            if let Some(next) = self.s.get(i + 1) {
                if si.mul(next).mul(si) != next.mul(si).mul(next) {
                    return fail(format!("braid S{} S{}", i + 1, i + 2));
                }
            }
            for (j, xj) in self.x.iter().enumerate() {
                if j != i && j != i + 1 && xj.mul(si) != si.mul(xj) {
                    return fail(format!("X{} S{} = S{1} X{0}", j + 1, i + 1));
                }
            }
            if si.mul(&self.x[i]).mul(si) != self.x[i + 1].scale(self.xi) {
                return fail(format!("S{0} X{0} S{0} = xi X{1}", i + 1, i + 2));
            }
        }
        for (j, xj) in self.x.iter().enumerate() {
            if xj.mul(&self.x_inv[j]) != id || self.x_inv[j].mul(xj) != id {
                return fail(format!("X{0} X{0}^-1 = 1", j + 1));
            }
            for xk in &self.x[j + 1..] {
                if xj.mul(xk) != xk.mul(xj) {
                    return fail("X commute".into());
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn xi(&self) -> u64 {
        self.xi
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `S_i`, `1 <= i <= n-1`.
    pub fn s(&self, i: usize) -> &Matrix {
        &self.s[i - 1]
    }

    /// `X_j`, `1 <= j <= n`.
    pub fn x(&self, j: usize) -> &Matrix {
        &self.x[j - 1]
    }

    pub fn x_inv(&self, j: usize) -> &Matrix {
        &self.x_inv[j - 1]
    }

    /// Every generator, `S` first then `X` then `X^{-1}`.
    pub fn generators(&self) -> Vec<Matrix> {
        self.s
            .iter()
            .chain(&self.x)
            .chain(&self.x_inv)
            .cloned()
            .collect()
    }

    /// Generators that suffice to span the action (the inverses are
    /// polynomials in the `X_j`).
    pub fn algebra_generators(&self) -> Vec<Matrix> {
        self.s.iter().chain(&self.x).cloned().collect()
    }

    /// Matrix of an algebra element: `X^λ T_w` acts as
    /// `∏ X_j^{λ_j} · S_{i1} ⋯ S_{ik}`.
    pub fn act(&self, h: &HeckeElement) -> Result<Matrix> {
        if h.rank() != self.n {
            return Err(HeckeError::RankMismatch {
                expected: self.n,
                found: h.rank(),
            });
        }
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for ((lambda, w), c) in h.terms() {
            let mut m = Matrix::scalar(self.field, self.dim, *c);
            for (j, &e) in lambda.iter().enumerate() {
                let g = if e >= 0 { &self.x[j] } else { &self.x_inv[j] };
                m = m.mul(&g.pow(e.unsigned_abs()));
            }
            for i in w.reduced_word() {
                m = m.mul(&self.s[i]);
            }
            out = out.add(&m);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> HeckeModule {
        let t = |v: &[Matrix]| v.iter().map(Matrix::transpose).collect();
        HeckeModule {
            s: t(&self.s),
            x: t(&self.x),
            x_inv: t(&self.x_inv),
            ..self.clone()
        }
    }

    /// `Some(χ)` when the module is one-dimensional.
    pub fn as_character(&self) -> Option<Character> {
        (self.dim == 1).then(|| Character {
            s: self.s.iter().map(|m| m.get(0, 0)).collect(),
            x: self.x.iter().map(|m| m.get(0, 0)).collect(),
        })
    }

    pub fn same_parameters(&self, other: &HeckeModule) -> bool {
        self.field == other.field && self.xi == other.xi
    }
}

/// One-dimensional module: the scalars by which `S_i` and `X_j` act.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    pub s: Vec<u64>,
    pub x: Vec<u64>,
}

impl Character {
    pub fn rank(&self) -> usize {
        self.x.len()
    }

    pub fn to_module(&self, field: PrimeField, xi: u64) -> Result<HeckeModule> {
        let one = |v: &u64| Matrix::from_rows(field, &[vec![*v]]);
        HeckeModule::new(field, xi, self.s.iter().map(one).collect(), self.x.iter().map(one).collect())
    }
}

fn segment_rank(a: i64, b: i64) -> Result<usize> {
    if a > b {
        return Err(HeckeError::EmptySegment(a, b));
    }
    Ok((b - a + 1) as usize)
}

fn xi_power(field: PrimeField, xi: u64, z: u64, e: i64) -> Result<u64> {
    let power = field.zpow(xi, e).ok_or(HeckeError::ZeroParameter)?;
    Ok(field.mul(z, power))
}

/// `𝒵(a,b)` twisted by `z`: `S_i ↦ ξ`, `X_j ↦ z ξ^{a+j-1}`.
pub fn char_z(field: PrimeField, xi: u64, a: i64, b: i64, z: u64) -> Result<Character> {
    let n = segment_rank(a, b)?;
    Ok(Character {
        s: vec![xi % field.p(); n - 1],
        x: (1..=n as i64)
            .map(|j| xi_power(field, xi, z, a + j - 1))
            .collect::<Result<_>>()?,
    })
}

/// `ℒ(a,b)` twisted by `z`: `S_i ↦ -1`, `X_j ↦ z ξ^{b-j+1}`.
pub fn char_l(field: PrimeField, xi: u64, a: i64, b: i64, z: u64) -> Result<Character> {
    let n = segment_rank(a, b)?;
    Ok(Character {
        s: vec![field.neg(1); n - 1],
        x: (1..=n as i64)
            .map(|j| xi_power(field, xi, z, b - j + 1))
            .collect::<Result<_>>()?,
    })
}

/// Whether `𝒵(a,b) = ℒ(a,b)` for a segment of rank `n`: `n = 1`, or
/// `ξ = -1` with `n` odd, or characteristic 2.
pub fn z_equals_l(field: PrimeField, xi: u64, n: usize) -> bool {
    n == 1 || field.p() == 2 || (xi % field.p() == field.neg(1) && n % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn characters_from_examples() {
        let z = char_z(f7(), 2, 0, 1, 1).unwrap();
        assert_eq!(z, Character { s: vec![2], x: vec![1, 2] });
        let l = char_l(f7(), 2, 0, 1, 1).unwrap();
        assert_eq!(l, Character { s: vec![6], x: vec![2, 1] });
        assert_eq!(char_z(f7(), 2, 3, 3, 1), char_l(f7(), 2, 3, 3, 1));
        assert_eq!(char_z(f7(), 2, 1, 0, 1), Err(HeckeError::EmptySegment(1, 0)));
    }

    #[test]
    fn characters_are_modules() {
        for p in [2, 3, 5, 7, 11] {
            let f = PrimeField::new(p).unwrap();
            for xi in f.nonzero() {
                for (a, b) in [(0, 0), (0, 1), (-1, 2), (2, 5)] {
                    for z in [1, p - 1] {
                        char_z(f, xi, a, b, z).unwrap().to_module(f, xi).unwrap();
                        char_l(f, xi, a, b, z).unwrap().to_module(f, xi).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn equality_criterion_matches_evaluation() {
        for p in [2, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            for xi in f.nonzero() {
                for len in 1..6 {
                    for a in -2..3 {
                        let b = a + len - 1;
                        let same = char_z(f, xi, a, b, 1).unwrap() == char_l(f, xi, a, b, 1).unwrap();
                        assert_eq!(same, z_equals_l(f, xi, len as usize), "p={p} xi={xi} [{a},{b}]");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_broken_relations() {
        let f = f7();
        let m = |v: u64| Matrix::from_rows(f, &[vec![v]]);
        // S ↦ 3 does not satisfy the quadratic relation for ξ = 2
        assert!(matches!(
            HeckeModule::new(f, 2, vec![m(3)], vec![m(1), m(2)]),
            Err(HeckeError::RelationFailed(_))
        ));
        // twisted relation fails: 2·1·2 = 4 but ξ·X2 = 2·1
        assert!(matches!(
            HeckeModule::new(f, 2, vec![m(2)], vec![m(1), m(1)]),
            Err(HeckeError::RelationFailed(_))
        ));
        assert_eq!(
            HeckeModule::new(f, 2, vec![], vec![m(0)]),
            Err(HeckeError::Singular)
        );
    }
}
