use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{HeckeAlgebra, HeckeElement};
use crate::error::Result;
use crate::field::PrimeField;
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub p: u64,
    pub xi: u64,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Recorder {
    checks: Vec<RelationCheck>,
}

impl Recorder {
    fn identity(&mut self, name: String, lhs: &HeckeElement, rhs: &HeckeElement) {
        let passed = lhs == rhs;
        self.checks.push(RelationCheck {
            witness: (!passed).then(|| format!("{lhs:?} != {rhs:?}")),
            name,
            passed,
        });
    }
}

/// Checks every defining relation as a normal-form identity, then compares
/// `S_i · X^λ` against letter-by-letter relation chasing on `trials` random
/// monomials, and spot-checks associativity.
pub fn check_relations(n: usize, field: PrimeField, xi: u64, trials: usize, seed: u64) -> Result<RelationReport> {
    let h = HeckeAlgebra::new(n, field, xi)?;
    let xi = h.xi();
    let mut rec = Recorder { checks: Vec::new() };
    let s: Vec<HeckeElement> = (1..n).map(|i| h.s(i)).collect::<Result<_>>()?;
    let x: Vec<HeckeElement> = (1..=n).map(|j| h.x(j, 1)).collect::<Result<_>>()?;
    let x_inv: Vec<HeckeElement> = (1..=n).map(|j| h.x(j, -1)).collect::<Result<_>>()?;
    let mul = |a: &HeckeElement, b: &HeckeElement| h.multiply(a, b);

    for (k, si) in s.iter().enumerate() {
        let plus = h.add(si, &h.one())?;
        let minus = h.sub(si, &h.scalar(xi))?;
        rec.identity(format!("quadratic S{}", k + 1), &mul(&plus, &minus)?, &HeckeElement::zero(n));
    }
    for a in 0..s.len() {
        for b in a + 2..s.len() {
            rec.identity(
                format!("commute S{} S{}", a + 1, b + 1),
                &mul(&s[a], &s[b])?,
                &mul(&s[b], &s[a])?,
            );
        }
    }
    for a in 0..s.len().saturating_sub(1) {
        let lhs = mul(&mul(&s[a], &s[a + 1])?, &s[a])?;
        let rhs = mul(&mul(&s[a + 1], &s[a])?, &s[a + 1])?;
        rec.identity(format!("braid S{} S{}", a + 1, a + 2), &lhs, &rhs);
    }
    for a in 0..n {
        for b in 0..n {
            rec.identity(
                format!("commute X{} X{}", a + 1, b + 1),
                &mul(&x[a], &x[b])?,
                &mul(&x[b], &x[a])?,
            );
        }
        rec.identity(format!("inverse X{}", a + 1), &mul(&x[a], &x_inv[a])?, &h.one());
        rec.identity(format!("inverse' X{}", a + 1), &mul(&x_inv[a], &x[a])?, &h.one());
    }
    for (i, si) in s.iter().enumerate() {
        for j in 0..n {
            if j != i && j != i + 1 {
                rec.identity(
                    format!("commute X{} S{}", j + 1, i + 1),
                    &mul(&x[j], si)?,
                    &mul(si, &x[j])?,
                );
            }
        }
        let lhs = mul(&mul(si, &x[i])?, si)?;
        rec.identity(format!("twist S{0} X{0} S{0}", i + 1), &lhs, &h.scale(&x[i + 1], xi));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n >= 2 {
        for t in 0..trials {
            let i = rng.gen_range(0..n - 1);
            let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let mono = h.monomial(lambda.clone(), Perm::identity(n), 1)?;
            let fast = mul(&s[i], &mono)?;
            let slow = chase(&h, i, &lambda, &mut rng)?;
            rec.identity(format!("commutation trial {t}: S{} X^{lambda:?}", i + 1), &fast, &slow);
        }
    }
    for t in 0..trials.min(20) {
        let a = random_element(&h, &mut rng)?;
        let b = random_element(&h, &mut rng)?;
        let c = random_element(&h, &mut rng)?;
        let lhs = mul(&mul(&a, &b)?, &c)?;
        let rhs = mul(&a, &mul(&b, &c)?)?;
        rec.identity(format!("associativity trial {t}"), &lhs, &rhs);
    }
    Ok(RelationReport {
        n,
        p: field.p(),
        xi,
        checks: rec.checks,
    })
}

/// `S_{i+1} · X^λ` by pushing `S` through one letter `X_j^{±1}` at a time,
/// using only the single-letter consequences of the quadratic and twisted
/// relations:
///   S X_i      = X_{i+1} S − (ξ−1) X_{i+1}
///   S X_{i+1}  = X_i S + (ξ−1) X_{i+1}
///   S X_i^-1   = X_{i+1}^-1 S + (ξ−1) X_i^-1
///   S X_{i+1}^-1 = X_i^-1 S − (ξ−1) X_i^-1
/// Letters are processed in random order since the `X_j` commute.
fn chase<R: Rng>(h: &HeckeAlgebra, i: usize, lambda: &[i64], rng: &mut R) -> Result<HeckeElement> {
    let n = h.rank();
    let f = h.field();
    let xm = f.sub(h.xi(), 1);
    let mut letters: Vec<(usize, i64)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(j, &e)| std::iter::repeat((j, e.signum())).take(e.unsigned_abs() as usize))
        .collect();
    letters.shuffle(rng);

    // (exponent to the left of S, whether S is still present) -> coefficient
    let mut state: BTreeMap<(Vec<i64>, bool), u64> = BTreeMap::new();
    state.insert((vec![0; n], true), 1);
    let bump = |mu: &[i64], j: usize, e: i64| {
        let mut v = mu.to_vec();
        v[j] += e;
        v
    };
    for (j, e) in letters {
        let mut next: BTreeMap<(Vec<i64>, bool), u64> = BTreeMap::new();
        let mut put = |k: (Vec<i64>, bool), c: u64| {
            let slot = next.entry(k).or_insert(0);
            *slot = f.add(*slot, c);
        };
        for ((mu, has_s), c) in state {
            if !has_s || (j != i && j != i + 1) {
                put((bump(&mu, j, e), has_s), c);
                continue;
            }
            let other = if j == i { i + 1 } else { i };
            put((bump(&mu, other, e), true), c);
            let (target, sign) = match (j == i, e > 0) {
                (true, true) => (i + 1, -1),
                (false, true) => (i + 1, 1),
                (true, false) => (i, 1),
                (false, false) => (i, -1),
            };
            let coeff = f.mul(c, xm);
            put((bump(&mu, target, e), false), if sign < 0 { f.neg(coeff) } else { coeff });
        }
        state = next;
    }
    let mut out = HeckeElement::zero(n);
    for ((mu, has_s), c) in state {
        let w = if has_s { Perm::simple(n, i) } else { Perm::identity(n) };
        out = h.add(&out, &h.monomial(mu, w, c)?)?;
    }
    Ok(out)
}

fn random_element<R: Rng>(h: &HeckeAlgebra, rng: &mut R) -> Result<HeckeElement> {
    let n = h.rank();
    let perms = Perm::all(n);
    let mut out = HeckeElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        let w = perms.choose(rng).expect("nonempty").clone();
        let c = rng.gen_range(1..h.field().p());
        out = h.add(&out, &h.monomial(lambda, w, c)?)?;
    }
    Ok(out)
}
