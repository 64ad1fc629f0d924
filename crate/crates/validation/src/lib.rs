//! Host crate for the `acceptance` test target, which checks the release
//! criteria of `mseg-core` and `mseg-hecke` end to end. It has no library
//! API of its own.
