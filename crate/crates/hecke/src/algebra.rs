use std::collections::BTreeMap;
use std::fmt;

use crate::error::{HeckeError, Result};
use crate::field::PrimeField;
use crate::perm::Perm;

/// Basis monomial `X^λ T_w`.
pub type Monomial = (Vec<i64>, Perm);

/// Element of the affine Hecke algebra in the basis `X^λ T_w`, where `T_w`
/// is the product of generators `S_i` along the lexicographically minimal
/// reduced word of `w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((lambda, w), c)| format!("{c}*X{lambda:?}T{:?}", w.reduced_word()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &[i64], w: &Perm) -> u64 {
        self.terms
            .get(&(lambda.to_vec(), w.clone()))
            .copied()
            .unwrap_or(0)
    }

    fn add_term(&mut self, field: PrimeField, key: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = field.add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

/// `H_n(ξ)` over a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeckeAlgebra {
    n: usize,
    field: PrimeField,
    xi: u64,
}

impl HeckeAlgebra {
    pub fn new(n: usize, field: PrimeField, xi: u64) -> Result<Self> {
        let xi = xi % field.p();
        if xi == 0 {
            return Err(HeckeError::ZeroParameter);
        }
        if n == 0 {
            return Err(HeckeError::RankMismatch { expected: 1, found: 0 });
        }
        Ok(HeckeAlgebra { n, field, xi })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn xi(&self) -> u64 {
        self.xi
    }

    fn check(&self, h: &HeckeElement) -> Result<()> {
        if h.n != self.n {
            return Err(HeckeError::RankMismatch {
                expected: self.n,
                found: h.n,
            });
        }
        Ok(())
    }

    pub fn monomial(&self, lambda: Vec<i64>, w: Perm, c: u64) -> Result<HeckeElement> {
        if lambda.len() != self.n {
            return Err(HeckeError::RankMismatch {
                expected: self.n,
                found: lambda.len(),
            });
        }
        if w.n() != self.n {
            return Err(HeckeError::RankMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        let mut h = HeckeElement::zero(self.n);
        h.add_term(self.field, (lambda, w), c % self.field.p());
        Ok(h)
    }

    pub fn scalar(&self, c: u64) -> HeckeElement {
        self.monomial(vec![0; self.n], Perm::identity(self.n), c)
            .expect("shapes match")
    }

    pub fn one(&self) -> HeckeElement {
        self.scalar(1)
    }

    /// `S_i` for `1 <= i <= n-1`.
    pub fn s(&self, i: usize) -> Result<HeckeElement> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::GeneratorOutOfRange(i));
        }
        self.monomial(vec![0; self.n], Perm::simple(self.n, i - 1), 1)
    }

    /// `X_j^{power}` for `1 <= j <= n`.
    pub fn x(&self, j: usize, power: i64) -> Result<HeckeElement> {
        if j == 0 || j > self.n {
            return Err(HeckeError::GeneratorOutOfRange(j));
        }
        let mut lambda = vec![0; self.n];
        lambda[j - 1] = power;
        self.monomial(lambda, Perm::identity(self.n), 1)
    }

    /// `T_w`.
    pub fn t(&self, w: &Perm) -> Result<HeckeElement> {
        self.monomial(vec![0; self.n], w.clone(), 1)
    }

    pub fn add(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.clone();
        for (k, c) in &b.terms {
            out.add_term(self.field, k.clone(), *c);
        }
        Ok(out)
    }

    pub fn scale(&self, a: &HeckeElement, c: u64) -> HeckeElement {
        let mut out = HeckeElement::zero(a.n);
        for (k, v) in &a.terms {
            out.add_term(self.field, k.clone(), self.field.mul(*v, c));
        }
        out
    }

    pub fn sub(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.add(a, &self.scale(b, self.field.neg(1)))
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = HeckeElement::zero(self.n);
        for ((lambda, w), c) in &a.terms {
            let mut acc = b.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = self.left_mul_s(i, &acc);
            }
            for ((mu, v), d) in acc.terms {
                let shifted: Vec<i64> = lambda.iter().zip(&mu).map(|(x, y)| x + y).collect();
                out.add_term(self.field, (shifted, v), self.field.mul(*c, d));
            }
        }
        Ok(out)
    }

    /// `S_{i+1} · h` (0-based `i`).
    pub(crate) fn left_mul_s(&self, i: usize, h: &HeckeElement) -> HeckeElement {
        let f = self.field;
        let xi_minus = f.sub(self.xi, 1);
        let mut out = HeckeElement::zero(self.n);
        for ((lambda, w), c) in &h.terms {
            let mut swapped = lambda.clone();
            swapped.swap(i, i + 1);
            // X^{sλ} S_i T_w
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                out.add_term(f, (swapped.clone(), w.clone()), f.mul(*c, xi_minus));
                out.add_term(f, (swapped, sw), f.mul(*c, self.xi));
            } else {
                out.add_term(f, (swapped, sw), *c);
            }
            // (ξ-1) X_{i+1} (X^λ - X^{sλ}) / (X_{i+1} - X_i) · T_w
            for (mu, sign) in commutation_correction(lambda, i) {
                let coeff = f.mul(*c, xi_minus);
                let coeff = if sign < 0 { f.neg(coeff) } else { coeff };
                out.add_term(f, (mu, w.clone()), coeff);
            }
        }
        out
    }
}

/// Monomials with signs in `X_{i+1} (X^λ - X^{s_i λ}) / (X_{i+1} - X_i)`.
fn commutation_correction(lambda: &[i64], i: usize) -> Vec<(Vec<i64>, i64)> {
    let (a, b) = (lambda[i], lambda[i + 1]);
    let with = |x: i64, y: i64| {
        let mut mu = lambda.to_vec();
        mu[i] = x;
        mu[i + 1] = y;
        mu
    };
    if a > b {
        (0..a - b).map(|k| (with(b + k, a - k), -1)).collect()
    } else {
        (0..b - a).map(|k| (with(a + k, b - k), 1)).collect()
    }
}
