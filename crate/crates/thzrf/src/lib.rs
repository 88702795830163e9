//! Error-rate analysis toolkit for a dual-hop mixed THz-RF decode-and-forward
//! relay link.
//!
//! The first hop is a THz link impaired by free-space path loss, molecular
//! absorption, generalized alpha-mu multipath fading and antenna-misalignment
//! (pointing error) fading; the second hop is an RF link with Nakagami-m
//! fading. The toolkit provides
//!
//! - [`specfun`]: the special functions behind the closed forms (gamma
//!   family, confluent/Gauss hypergeometric, Meijer-G and multivariate Fox-H
//!   via Mellin-Barnes contour quadrature) plus adaptive quadrature,
//! - [`channel`]: deterministic link-budget gains and per-hop fading
//!   distributions, including the composite THz envelope CDF/PDF,
//! - [`linkstats`]: end-to-end SNR statistics (CDF, MGF, asymptotic CDF,
//!   diversity order),
//! - [`aser`]: exact and asymptotic average symbol error rates for
//!   RQAM/SQAM/BPSK, HQAM and M-ary noncoherent FSK, each paired with an
//!   independent numerical-integration oracle,
//! - [`mcsim`]: a reproducible Monte Carlo link simulator (conditional and
//!   symbol-level modes) with partitioned parallel random streams.
//!
//! All evaluators are pure: the same inputs produce bit-identical outputs,
//! and everything may be called concurrently.

pub mod aser;
pub mod channel;
pub mod linkstats;
pub mod mcsim;
pub mod specfun;

pub use channel::{AlphaMuFading, NakagamiFading, PointingError, PowerNoise, RfHopConfig, ThzHopConfig};
