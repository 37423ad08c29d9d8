//! Exact-arithmetic replay of the elementary five-stage proof that the
//! central binomial coefficient C(2p, p) is congruent to 2 modulo p^3 for
//! every prime p >= 5, plus a fast scanner for the congruence itself.
//!
//! The crate is organized along the stages of the proof:
//!
//! - [`exact`]: unbounded naturals/integers, factorials, binomials.
//! - [`symfun`]: product-shift expansions over finite index sets and the
//!   integer witnesses R and T they define.
//! - [`residue`]: modular arithmetic mod p and mod p^m, primality, and the
//!   Wilson/Fermat/power-sum identity suite.
//! - [`harmonic`]: erased factorials, the pairing identity, and the
//!   divisibility p^2 | S1 of the integer harmonic sum.
//! - [`certificate`]: assembles one prime's full replay into a
//!   serializable, independently re-checkable document.
//! - [`scanner`]: high-throughput residue computation of C(2p, p) mod p^m
//!   over prime ranges, including Wolstenholme-prime detection mod p^4.

pub mod certificate;
pub mod exact;
pub mod harmonic;
pub mod residue;
pub mod scanner;
pub mod symfun;

pub use certificate::{
    build_certificate, serialize_certificate, verify_certificate, CertificateError,
    WolstenholmeCertificate,
};
pub use residue::PrimeContext;
pub use scanner::{scan, ScanRecord};
pub use symfun::IndexSet;
