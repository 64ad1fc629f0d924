//! Arithmetic context of cuspidal lines and supercuspidal towers.
//!
//! A line is the orbit of a cuspidal class under its unramified twist. It is
//! modelled by its order `o` (the number of classes on the line, or infinity)
//! together with the characteristic of the coefficient field. A tower is a
//! supercuspidal line together with its cuspidal levels `r = 0, 1, 2, ...`,
//! each of which is a line of order one.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive integer or infinity. `Infinite` compares above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cardinal {
    Finite(u64),
    Infinite,
}

impl Cardinal {
    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinal::Finite(v) => Some(v),
            Cardinal::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Cardinal::Infinite
    }

    /// Compares against a plain integer, with infinity above everything.
    pub fn cmp_u64(self, other: u64) -> Ordering {
        match self {
            Cardinal::Finite(v) => v.cmp(&other),
            Cardinal::Infinite => Ordering::Greater,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(v) => write!(f, "{v}"),
            Cardinal::Infinite => f.write_str("inf"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Characteristic of the coefficient field: zero or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(value: u64) -> Result<Self> {
        if value == 0 || is_prime(value) {
            Ok(Characteristic(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A cuspidal line: characteristic, order `o` and degree of its base point.
///
/// In characteristic zero the order is infinite; in positive characteristic it
/// is finite. `dual` marks the contragredient line, which has the same
/// parameters but is a different line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuspidalLine {
    characteristic: Characteristic,
    order: Cardinal,
    degree: u64,
    dual: bool,
}

impl CuspidalLine {
    pub fn new(characteristic: Characteristic, order: Cardinal, degree: u64) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidLine("degree must be positive".into()));
        }
        match (characteristic.is_zero(), order) {
            (true, Cardinal::Finite(_)) => {
                return Err(Error::InvalidLine(
                    "characteristic 0 lines have infinite order".into(),
                ))
            }
            (false, Cardinal::Infinite) => {
                return Err(Error::InvalidLine(
                    "lines in positive characteristic have finite order".into(),
                ))
            }
            (_, Cardinal::Finite(0)) => {
                return Err(Error::InvalidLine("order must be positive".into()))
            }
            _ => {}
        }
        Ok(CuspidalLine {
            characteristic,
            order,
            degree,
            dual: false,
        })
    }

    /// The characteristic-zero line `Z` of degree one.
    pub fn integers() -> Self {
        CuspidalLine {
            characteristic: Characteristic::ZERO,
            order: Cardinal::Infinite,
            degree: 1,
            dual: false,
        }
    }

    /// A degree-one line of finite order `o` in characteristic `ell`.
    pub fn cyclic(ell: u64, o: u64) -> Result<Self> {
        Self::new(Characteristic::new(ell)?, Cardinal::Finite(o), 1)
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn order(&self) -> Cardinal {
        self.order
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn dual(&self) -> Self {
        CuspidalLine {
            dual: !self.dual,
            ..*self
        }
    }

    pub fn e(&self) -> Cardinal {
        effective_e(self)
    }

    /// Canonical representative of the class `i` on this line.
    pub fn class(&self, i: i64) -> i64 {
        match self.order {
            Cardinal::Infinite => i,
            Cardinal::Finite(o) => i.rem_euclid(o as i64),
        }
    }
}

/// The invariant `e` of a line: `l` when `o = 1`, `o` when `o >= 2`, and
/// infinity in characteristic zero.
pub fn effective_e(line: &CuspidalLine) -> Cardinal {
    e_from(line.characteristic, line.order)
}

fn e_from(characteristic: Characteristic, order: Cardinal) -> Cardinal {
    if characteristic.is_zero() {
        return Cardinal::Infinite;
    }
    match order {
        Cardinal::Finite(1) => Cardinal::Finite(characteristic.value()),
        other => other,
    }
}

/// Index of a line inside a tower: the supercuspidal line or cuspidal level `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    Sc,
    Cusp(u32),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Sc => f.write_str("sc"),
            Level::Cusp(r) => write!(f, "c{r}"),
        }
    }
}

/// A supercuspidal line together with its cuspidal levels.
///
/// Level `r` is the line of `St(rho, e * l^r)`: order one, `e = l`, and base
/// degree multiplied by `e(base) * l^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tower {
    base: CuspidalLine,
}

impl Tower {
    pub fn new(base: CuspidalLine) -> Self {
        Tower { base }
    }

    /// `tower(o0=<o0>, l=<ell>)` with base degree one. `ell = 0` means
    /// characteristic zero, in which case `o0` must be infinite.
    pub fn from_params(o0: Cardinal, ell: u64) -> Result<Self> {
        Ok(Tower {
            base: CuspidalLine::new(Characteristic::new(ell)?, o0, 1)?,
        })
    }

    pub fn base(&self) -> &CuspidalLine {
        &self.base
    }

    pub fn ell(&self) -> u64 {
        self.base.characteristic.value()
    }

    pub fn o0(&self) -> Cardinal {
        self.base.order
    }

    pub fn e(&self) -> Cardinal {
        self.base.e()
    }

    pub fn is_dual(&self) -> bool {
        self.base.dual
    }

    pub fn dual(&self) -> Self {
        Tower {
            base: self.base.dual(),
        }
    }

    /// `e(base) * l^r`, the number of supercuspidal shifts making up level `r`.
    pub fn period_length(&self, r: u32) -> Result<u64> {
        if self.base.characteristic.is_zero() {
            return Err(Error::CharacteristicZero);
        }
        let e = self.e().finite().ok_or(Error::InfiniteOrder)?;
        Ok(e * self.ell().pow(r))
    }

    pub fn line(&self, level: Level) -> Result<CuspidalLine> {
        match level {
            Level::Sc => Ok(self.base),
            Level::Cusp(r) => Ok(CuspidalLine {
                characteristic: self.base.characteristic,
                order: Cardinal::Finite(1),
                degree: self.base.degree * self.period_length(r)?,
                dual: self.base.dual,
            }),
        }
    }

    /// Degree of a point on the given level.
    pub fn point_degree(&self, level: Level) -> u64 {
        match level {
            Level::Sc => self.base.degree,
            Level::Cusp(r) => self.base.degree * self.period_length(r).unwrap_or(0),
        }
    }

    pub fn class(&self, level: Level, i: i64) -> i64 {
        match level {
            Level::Sc => self.base.class(i),
            Level::Cusp(_) => 0,
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tower(o0={}, l={})", self.o0(), self.ell())?;
        if self.is_dual() {
            f.write_str("^")?;
        }
        Ok(())
    }
}

/// The numerical invariants `n, f, o, e, b, s` of a cuspidal class. The
/// residue field size is carried only through its exponent `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuspidalInvariants {
    pub n: u64,
    pub f: u64,
    pub o: Cardinal,
    pub e: Cardinal,
    pub b: u64,
    pub s: u64,
}

/// Invariants of `St(rho, e * l^r)` from those of `rho`.
pub fn st_invariants(inv: &CuspidalInvariants, ell: u64, r: u32) -> Result<CuspidalInvariants> {
    let characteristic = Characteristic::new(ell)?;
    if characteristic.is_zero() {
        return Err(Error::CharacteristicZero);
    }
    let o = inv.o.finite().ok_or(Error::InfiniteOrder)?;
    if o == 0 {
        return Err(Error::InconsistentInvariants("o must be positive".into()));
    }
    let expected = e_from(characteristic, inv.o);
    if inv.e != expected {
        return Err(Error::InconsistentInvariants(format!(
            "e = {} but (o, l) = ({}, {ell}) forces e = {expected}",
            inv.e, inv.o
        )));
    }
    let e = expected.finite().expect("finite order gives finite e");
    Ok(CuspidalInvariants {
        n: inv.n * o,
        f: inv.f * e * ell.pow(r),
        o: Cardinal::Finite(1),
        e: Cardinal::Finite(ell),
        b: inv.b,
        s: inv.s,
    })
}

/// Whether `n` is a length at which a cuspidal non-supercuspidal class can
/// appear: `n = 1` or `n = e * l^r`.
pub fn cuspidal_lengths(e: Cardinal, characteristic: Characteristic, n: u64) -> bool {
    if n == 1 {
        return true;
    }
    let (Some(e), false) = (e.finite(), characteristic.is_zero()) else {
        return false;
    };
    let ell = characteristic.value();
    let mut len = e;
    while len <= n {
        if len == n {
            return true;
        }
        len = match len.checked_mul(ell) {
            Some(v) => v,
            None => return false,
        };
    }
    false
}
