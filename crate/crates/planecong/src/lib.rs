//! Congruences of plane-partition counting functions, checked by finite
//! computation.
//!
//! The `k`-component plane-partition function `pl_k(n)` counts plane
//! partitions of `n` with at most `k` layers; its generating series is
//! `prod_n 1/(1-q^n)^min(k,n)`. Reduced mod a prime `l`, statements like
//! `pl_l(l*n+r) ≡ pl_l(l*n+s) (mod l)` for all `n` become decidable: the
//! relevant series is the product of a periodic head factor and a tail
//! supported on multiples of `l`, so checking finitely many progressions
//! (one minimal period of the head) settles the statement for every `n`.
//!
//! The crate is organized around that reduction:
//!
//! * [`modseries`]: dense truncated power series over `Z/mZ` and integer
//!   polynomials, with the two-term-power multiplication and division
//!   routines everything else builds on.
//! * [`partitions`]: the generating-series builders (plane, head factor,
//!   multipartition, restricted, tail) plus brute-force enumeration
//!   oracles that recount every coefficient independently.
//! * [`periodicity`]: minimal periods of restricted partition series mod
//!   prime powers, as closed-form [`PeriodCertificate`]s cross-checked by
//!   direct window comparison.
//! * [`congruence`]: canonical [`CongruenceStatement`]s and the checkers:
//!   the bounded proof, the head-coefficient variant, the plain horizon
//!   scan, prime-power witness polynomials, and the multipartition route
//!   mod 5.
//! * [`search`]: enumeration of all small statements for a prime with
//!   proof filtering, and a zero scan over residue classes of small
//!   primes.
//! * [`cli`]: the `planecong` binary surface over all of the above.
//!
//! Coefficients are `u64` residues; moduli up to `2^32` are accepted so
//! products of residues never overflow.

mod arith;

pub mod cli;
pub mod congruence;
pub mod error;
pub mod modseries;
pub mod partitions;
pub mod periodicity;
pub mod search;

pub use congruence::{
    alpha_check, empirical_check, kiming_olsson_holds, legendre, pl2_mod5_via_multipartition,
    prime_power_witness, verify_bounded, CongruenceStatement, Counterexample, Method, Verdict,
    VerificationReport, WitnessCase, WitnessReport,
};
pub use error::{Error, Result};
pub use modseries::{binomial_poly, DensePoly, ResidueSeries};
pub use partitions::{
    beta_series, enum_multi, enum_plane, enum_restricted, f_series, multipartition_series,
    pl_series, restricted_series, s_k_multiset, ColoredPartMultiset, OracleLimit,
};
pub use periodicity::{detect_min_period, f_ell_period, kwong_period, PeriodCertificate};
pub use search::{enumerate_and_verify, zero_scan, ScanRun, SearchConfig, SearchRun, ZeroScanRow};
