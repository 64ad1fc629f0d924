//! Combinatorics of segments and multisegments over cuspidal lines.
//!
//! The crate models lines of cuspidal classes and their supercuspidal towers
//! ([`params`]), partitions ([`partition`]), segments and linkage
//! ([`segment`]), multisegments with their derived sequences, periods and the
//! supercuspidal/aperiodic correspondence ([`multisegment`], [`enumerate`]),
//! and symbolic labels on the finite-group side ([`finite_gl`]).

pub mod enumerate;
pub mod error;
pub mod finite_gl;
pub mod multisegment;
pub mod params;
pub mod partition;
pub mod segment;

pub use error::{Error, Result};
pub use multisegment::{ClassificationKeys, Multisegment, Support};
pub use params::{Cardinal, Characteristic, CuspidalInvariants, CuspidalLine, Level, Tower};
pub use partition::Partition;
pub use segment::Segment;
