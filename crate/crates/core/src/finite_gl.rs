//! Symbolic labels for irreducible representations of finite general linear
//! groups with a given cuspidal support `n·[σ]`: `z(σ, μ)`, `st(σ, n)` and
//! the cuspidal tower `st_r(σ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{cuspidal_lengths, Cardinal, Characteristic};
use crate::partition::{partition_count, Partition};

/// A cuspidal representation `σ`, carried only as a label plus its `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteCuspidal {
    pub label: String,
    pub e: Cardinal,
    pub characteristic: Characteristic,
}

impl FiniteCuspidal {
    pub fn new(label: impl Into<String>, e: Cardinal, characteristic: Characteristic) -> Result<Self> {
        match (characteristic.is_zero(), e) {
            (true, Cardinal::Finite(_)) | (false, Cardinal::Infinite) => {
                Err(Error::InconsistentInvariants(format!(
                    "e = {e} does not fit characteristic {}",
                    characteristic.value()
                )))
            }
            (_, Cardinal::Finite(v)) if v < 2 => Err(Error::InconsistentInvariants(
                "e is at least 2".into(),
            )),
            _ => Ok(FiniteCuspidal {
                label: label.into(),
                e,
                characteristic,
            }),
        }
    }
}

/// `z(σ, μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JamesLabel {
    pub base: FiniteCuspidal,
    pub shape: Partition,
}

impl JamesLabel {
    /// `st(σ, n) = z(σ, (1^n))`.
    pub fn steinberg(base: FiniteCuspidal, n: u64) -> Self {
        JamesLabel {
            base,
            shape: Partition::column(n),
        }
    }
}

/// Whether `st(σ, n)` is cuspidal: `n = 1` or `n = e(σ) l^r`.
pub fn st_is_cuspidal(sigma: &FiniteCuspidal, n: u64) -> bool {
    cuspidal_lengths(sigma.e, sigma.characteristic, n)
}

/// `st_r(σ) = st(σ, e(σ) l^r)`, the level-`r` cuspidal non-supercuspidal label.
pub fn cuspidal_label(sigma: &FiniteCuspidal, r: u32) -> Result<JamesLabel> {
    if sigma.characteristic.is_zero() {
        return Err(Error::CharacteristicZero);
    }
    let e = sigma.e.finite().ok_or(Error::InfiniteOrder)?;
    Ok(JamesLabel::steinberg(
        sigma.clone(),
        e * sigma.characteristic.value().pow(r),
    ))
}

/// Shapes `ν` that can label subquotients of the induced representation
/// attached to `μ`: same size and `μ ⊴ ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubquotientFilter {
    shape: Partition,
}

impl SubquotientFilter {
    pub fn admits(&self, nu: &Partition) -> bool {
        self.shape.dominated_by(nu).unwrap_or(false)
    }

    /// `z(σ, μ)` itself occurs with multiplicity one.
    pub fn multiplicity_one(&self, nu: &Partition) -> bool {
        *nu == self.shape
    }
}

pub fn subquotient_filter(mu: &Partition) -> SubquotientFilter {
    SubquotientFilter { shape: mu.clone() }
}

/// `z(σ, μ)` is a quotient of the induced representation iff `μ` is
/// `e(σ)`-regular.
pub fn is_quotient_label(mu: &Partition, sigma: &FiniteCuspidal) -> bool {
    mu.is_e_regular(sigma.e)
}

/// `l(σ, n) = st(σ, n)` iff `n < e(σ)`.
pub fn st_equals_l(sigma: &FiniteCuspidal, n: u64) -> bool {
    sigma.e.cmp_u64(n).is_gt()
}

/// Number of irreducible labels with supercuspidal support `n·[σ]`.
pub fn count_by_scusp(n: u64) -> u64 {
    partition_count(n)
}
