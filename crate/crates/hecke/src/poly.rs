use std::fmt;

use rand::Rng;

use crate::field::PrimeField;

/// Polynomial over `F_p`, coefficients from the constant term up, with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?} mod {}", self.coeffs, self.field.p())
    }
}

impl Poly {
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut p = Poly {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.p()).collect(),
        };
        p.trim();
        p
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::new(field, vec![1])
    }

    /// The monomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Poly::new(field, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, c| f.add(f.mul(acc, x), *c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                f.add(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *other.coeffs.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|a| f.mul(*a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(*a, *b));
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = f.inv(divisor.lead()).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = f.mul(*rem.last().expect("nonempty"), inv);
            quot[k] = c;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, *d));
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(*c, i as u64 % f.p()))
            .collect();
        Poly::new(f, coeffs)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// The distinct monic irreducible factors, sorted by degree then
    /// coefficients.
    pub fn irreducible_factors<R: Rng>(&self, rng: &mut R) -> Vec<Poly> {
        let mut out = Vec::new();
        self.monic().collect_factors(rng, &mut out);
        out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        out.dedup();
        out
    }

    fn collect_factors<R: Rng>(&self, rng: &mut R, out: &mut Vec<Poly>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let d = self.derivative();
        if d.is_zero() {
            // f = g(x^p) = g^{(p)}(x)^p, and coefficients are their own p-th roots
            let p = self.field.p() as usize;
            let root = Poly::new(self.field, self.coeffs.iter().step_by(p).copied().collect());
            root.collect_factors(rng, out);
            return;
        }
        let g = self.gcd(&d);
        let squarefree = self.divrem(&g).0;
        for (deg, chunk) in squarefree.distinct_degree() {
            chunk.equal_degree(deg, rng, out);
        }
        g.collect_factors(rng, out);
    }

    /// Splits a squarefree monic polynomial into products of irreducibles of
    /// equal degree.
    pub fn distinct_degree(&self) -> Vec<(usize, Poly)> {
        let f = self.field;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = Poly::x(f);
        let mut h = x.clone();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            h = h.powmod(f.p() as u128, &rest);
            let g = h.sub(&x).gcd(&rest);
            if g.degree().unwrap_or(0) > 0 {
                out.push((d, g.clone()));
                rest = rest.divrem(&g).0;
                h = h.rem(&rest);
            }
            d += 1;
        }
        if let Some(deg) = rest.degree().filter(|d| *d > 0) {
            out.push((deg, rest));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
    /// degree `deg`.
    fn equal_degree<R: Rng>(&self, deg: usize, rng: &mut R, out: &mut Vec<Poly>) {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return;
        }
        if n == deg {
            out.push(self.monic());
            return;
        }
        let f = self.field;
        let p = f.p() as u128;
        loop {
            let a = Poly::new(f, (0..n).map(|_| rng.gen_range(0..f.p())).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let probe = if p == 2 {
                // trace map a + a^2 + ... + a^{2^{deg-1}}
                let mut term = a.rem(self);
                let mut acc = term.clone();
                for _ in 1..deg {
                    term = term.mul(&term).rem(self);
                    acc = acc.add(&term);
                }
                acc
            } else {
                a.powmod((p.pow(deg as u32) - 1) / 2, self).sub(&Poly::one(f))
            };
            let g = probe.gcd(self);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                g.equal_degree(deg, rng, out);
                self.divrem(&g).0.equal_degree(deg, rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn is_irreducible_brute(p: &Poly, field: PrimeField) -> bool {
        // no monic divisor of degree 1..=deg/2, checked by enumeration
        let n = p.degree().unwrap();
        for d in 1..=n / 2 {
            let count = field.p().pow(d as u32);
            for code in 0..count {
                let mut coeffs = Vec::new();
                let mut c = code;
                for _ in 0..d {
                    coeffs.push(c % field.p());
                    c /= field.p();
                }
                coeffs.push(1);
                if p.rem(&Poly::new(field, coeffs)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn divrem_reconstructs() {
        let f = PrimeField::new(7).unwrap();
        let a = Poly::new(f, vec![3, 0, 5, 1, 2]);
        let b = Poly::new(f, vec![1, 4, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn factors_are_irreducible_divisors() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..40 {
                let deg = rng.gen_range(1..9);
                let mut coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                coeffs.push(1);
                let poly = Poly::new(f, coeffs);
                let factors = poly.irreducible_factors(&mut rng);
                let mut rest = poly.clone();
                for g in &factors {
                    assert!(is_irreducible_brute(g, f), "{g:?}");
                    assert!(poly.rem(g).is_zero());
                    while rest.rem(g).is_zero() {
                        rest = rest.divrem(g).0;
                    }
                }
                assert_eq!(rest.degree(), Some(0), "{poly:?} leaves {rest:?}");
            }
        }
    }

    #[test]
    fn frobenius_power_shape() {
        let f = PrimeField::new(3).unwrap();
        // (x + 1)^3 = x^3 + 1 in characteristic 3
        let cube = Poly::new(f, vec![1, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(cube.irreducible_factors(&mut rng), vec![Poly::new(f, vec![1, 1])]);
    }
}
