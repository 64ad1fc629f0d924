use mseg_core::segment::linked;
use mseg_core::{CuspidalLine, Level, Segment};
use serde::Serialize;

use crate::error::Result;
use crate::field::PrimeField;
use crate::induce::induce;
use crate::meataxe::{meataxe, Certificate};
use crate::module::char_z;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub first: (i64, i64),
    pub second: (i64, i64),
    pub order: u64,
    pub e: u64,
    pub linked: bool,
    pub induced_dim: usize,
    pub induced_irreducible: bool,
    pub certificate: Certificate,
}

impl BridgeReport {
    /// The two sides agree: linked exactly when the induced module is
    /// reducible.
    pub fn consistent(&self) -> bool {
        self.linked != self.induced_irreducible
    }
}

/// The line `ξ^ℤ` as a cuspidal line: order `o(ξ)` in characteristic `p`.
pub fn xi_line(field: PrimeField, xi: u64) -> Result<CuspidalLine> {
    let order = field.order(xi).ok_or(crate::error::HeckeError::ZeroParameter)?;
    Ok(CuspidalLine::cyclic(field.p(), order)?)
}

/// Linkage of `[a,b]` and `[a',b']` on the `ξ`-line against irreducibility
/// of the module induced from `𝒵(a,b) ⊗ 𝒵(a',b')`.
pub fn linkage_bridge(
    field: PrimeField,
    xi: u64,
    first: (i64, i64),
    second: (i64, i64),
    seed: u64,
) -> Result<BridgeReport> {
    let line = xi_line(field, xi)?;
    let s1 = Segment::new(&line, Level::Sc, first.0, first.1)?;
    let s2 = Segment::new(&line, Level::Sc, second.0, second.1)?;
    let z1 = char_z(field, xi, first.0, first.1, 1)?.to_module(field, xi)?;
    let z2 = char_z(field, xi, second.0, second.1, 1)?.to_module(field, xi)?;
    let induced = induce(&[z1.rank(), z2.rank()], &[z1, z2])?;
    let verdict = meataxe(&induced, seed);
    Ok(BridgeReport {
        first,
        second,
        order: field.order(xi).unwrap_or(0),
        e: field.e_invariant(xi),
        linked: linked(&line, &s1, &s2),
        induced_dim: induced.dim(),
        induced_irreducible: verdict.irreducible,
        certificate: verdict.certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_points() {
        let f = PrimeField::new(7).unwrap();
        let r = linkage_bridge(f, 2, (0, 0), (1, 1), 0).unwrap();
        assert!(r.linked);
        assert!(!r.induced_irreducible);
        assert_eq!(r.induced_dim, 2);
    }

    #[test]
    fn self_adjacent_order_three() {
        let f = PrimeField::new(7).unwrap();
        let r = linkage_bridge(f, 2, (0, 0), (3, 3), 0).unwrap();
        assert!(r.consistent(), "{r:?}");
    }

    #[test]
    fn trivial_parameter() {
        let f = PrimeField::new(3).unwrap();
        let r = linkage_bridge(f, 1, (0, 0), (0, 0), 0).unwrap();
        assert!(r.linked);
        assert!(!r.induced_irreducible);
        assert_eq!(r.e, 3);
    }
}
