//! Congruence statements about plane-partition counts on arithmetic
//! progressions, and the reports produced by checking them.
//!
//! A [`CongruenceStatement`] is the claim
//! `sum_i pl_k(step*n + a_i) == sum_j pl_k(step*n + b_j) (mod m)` for all
//! `n >= 0`, held in a canonical form so that equivalent claims compare
//! equal. An empty right-hand side means the left-hand sum vanishes.
//! Checkers live in the submodules: the bounded proof paths
//! ([`verify_bounded`], [`alpha_check`]), the horizon fallback
//! ([`empirical_check`]), finite polynomial witnesses for the prime-power
//! families ([`prime_power_witness`]), and the multipartition route to the
//! two-component congruences modulo 5 ([`pl2_mod5_via_multipartition`]).

mod multipartition;
mod verify;
mod witness;

pub use multipartition::{kiming_olsson_holds, legendre, pl2_mod5_via_multipartition};
pub use verify::{
    alpha_check, alpha_check_with, empirical_check, empirical_check_with, verify_bounded,
    verify_bounded_with,
};
pub use witness::{prime_power_witness, WitnessCase, WitnessReport};

use crate::error::{Error, Result};
use crate::modseries::ResidueSeries;
use crate::partitions::{f_series, pl_series};
use crate::periodicity::PeriodCertificate;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// A canonical congruence claim over an arithmetic progression
/// `step*n + r` of plane-partition counts with `components` layers,
/// taken modulo `modulus`.
///
/// Canonical form: residues reduced into `[0, step)`, both sides sorted,
/// residues common to both sides cancelled, and the sides oriented so the
/// nonempty side (or the lexicographically smaller one) comes first. A
/// claim whose sides cancel completely is trivially true and reports
/// [`is_trivial`](Self::is_trivial).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStatement", into = "RawStatement")]
pub struct CongruenceStatement {
    components: u64,
    modulus: u64,
    step: u64,
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

impl CongruenceStatement {
    /// Canonicalizes a raw claim. Residues may be arbitrary nonnegative
    /// integers; they are reduced mod `step`. Empty sides are allowed: an
    /// empty input `lhs` swaps with a nonempty `rhs`, and two empty (or
    /// fully cancelling) sides make the trivial claim `0 ≡ 0`.
    ///
    /// # Errors
    ///
    /// Rejects `components = 0`, `modulus < 2`, and `step = 0`.
    pub fn new(
        components: u64,
        modulus: u64,
        step: u64,
        lhs: impl IntoIterator<Item = u64>,
        rhs: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        if components == 0 {
            return Err(Error::ZeroComponents);
        }
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if step == 0 {
            return Err(Error::ZeroStep);
        }
        let mut lhs: Vec<u64> = lhs.into_iter().map(|r| r % step).collect();
        let mut rhs: Vec<u64> = rhs.into_iter().map(|r| r % step).collect();
        lhs.sort_unstable();
        rhs.sort_unstable();
        cancel_common(&mut lhs, &mut rhs);
        let swap = if lhs.is_empty() || rhs.is_empty() {
            lhs.is_empty() && !rhs.is_empty()
        } else {
            (&lhs, &rhs) > (&rhs, &lhs)
        };
        if swap {
            std::mem::swap(&mut lhs, &mut rhs);
        }
        Ok(Self {
            components,
            modulus,
            step,
            lhs,
            rhs,
        })
    }

    /// Claim with `components = modulus = step = ell`, the shape the
    /// bounded verifier proves.
    pub fn prime(
        ell: u64,
        lhs: impl IntoIterator<Item = u64>,
        rhs: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        Self::new(ell, ell, ell, lhs, rhs)
    }

    pub fn components(&self) -> u64 {
        self.components
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Stride of the arithmetic progressions; residues live in `[0, step)`.
    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn lhs(&self) -> &[u64] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[u64] {
        &self.rhs
    }

    /// True when both sides cancelled completely; the claim holds vacuously.
    pub fn is_trivial(&self) -> bool {
        self.lhs.is_empty()
    }

    /// True for claims `sum_i pl(step*n + a_i) == 0`.
    pub fn is_zero_form(&self) -> bool {
        !self.lhs.is_empty() && self.rhs.is_empty()
    }
}

/// Removes the common multiset part of two sorted residue lists.
fn cancel_common(a: &mut Vec<u64>, b: &mut Vec<u64>) {
    let mut keep_a = Vec::with_capacity(a.len());
    let mut keep_b = Vec::with_capacity(b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                keep_a.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                keep_b.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    keep_a.extend_from_slice(&a[i..]);
    keep_b.extend_from_slice(&b[j..]);
    *a = keep_a;
    *b = keep_b;
}

impl fmt::Display for CongruenceStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(f, self.components, self.step, &self.lhs)?;
        write!(f, " ≡ ")?;
        write_side(f, self.components, self.step, &self.rhs)?;
        write!(f, " (mod {})", self.modulus)
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, k: u64, step: u64, side: &[u64]) -> fmt::Result {
    if side.is_empty() {
        return write!(f, "0");
    }
    for (i, r) in side.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        if *r == 0 {
            write!(f, "pl_{k}({step}n)")?;
        } else {
            write!(f, "pl_{k}({step}n+{r})")?;
        }
    }
    Ok(())
}

/// Wire form of a statement: the canonical type serializes through this
/// mirror and canonicalizes again on the way in. `step` defaults to `m`.
#[derive(Serialize, Deserialize)]
struct RawStatement {
    k: u64,
    m: u64,
    #[serde(default)]
    step: Option<u64>,
    lhs: Vec<u64>,
    rhs: Vec<u64>,
}

impl From<CongruenceStatement> for RawStatement {
    fn from(st: CongruenceStatement) -> Self {
        RawStatement {
            k: st.components,
            m: st.modulus,
            step: Some(st.step),
            lhs: st.lhs,
            rhs: st.rhs,
        }
    }
}

impl TryFrom<RawStatement> for CongruenceStatement {
    type Error = Error;

    fn try_from(raw: RawStatement) -> Result<Self> {
        let step = raw.step.unwrap_or(raw.m);
        CongruenceStatement::new(raw.k, raw.m, step, raw.lhs, raw.rhs)
    }
}

/// How a report's verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Plane-partition counts checked over one full period block.
    TheoremBound,
    /// Head-factor coefficients checked over one full period block.
    AlphaBeta,
    /// Plane-partition counts checked up to a horizon, proving nothing
    /// beyond it.
    Empirical,
    /// Two-component counts reduced to multipartition counts.
    Multipartition,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::TheoremBound => "theorem-bound",
            Method::AlphaBeta => "alpha-beta",
            Method::Empirical => "empirical",
            Method::Multipartition => "multipartition",
        };
        f.write_str(s)
    }
}

/// Outcome of checking a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Finitely many checks passed and a periodicity certificate extends
    /// them to every `n`.
    ProvedForAllN,
    /// Every examined `n` passed; nothing is claimed beyond the horizon.
    HoldsToHorizon,
    /// Some `n` fails; the report carries it.
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ProvedForAllN => "proved-for-all-n",
            Verdict::HoldsToHorizon => "holds-to-horizon",
            Verdict::Refuted => "refuted",
        };
        f.write_str(s)
    }
}

/// A failing progression index with the two side sums at that index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: u64,
    pub lhs_value: u64,
    pub rhs_value: u64,
}

/// Result of checking one statement: what was checked, how far, and the
/// outcome, plus the period certificate when the verdict is a proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: CongruenceStatement,
    pub method: Method,
    /// Progression indices a full pass examines: the period block count
    /// for the proof paths, the horizon otherwise.
    pub bound: u64,
    /// Progression indices actually examined; `< bound` only on refutation.
    pub checks: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<PeriodCertificate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum SeriesKind {
    Plane,
    Head,
}

type SeriesMap = HashMap<(SeriesKind, u64, u64, usize), Arc<ResidueSeries>>;

/// Shared store of built series, keyed by builder, component count,
/// modulus, and order. Population is idempotent: racing builders compute
/// identical coefficients, and the first insert wins.
#[derive(Debug, Default)]
pub struct SeriesCache {
    entries: Mutex<SeriesMap>,
}

impl SeriesCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Plane-partition series for `components` layers mod `modulus`.
    pub fn plane(&self, components: u64, modulus: u64, order: usize) -> Result<Arc<ResidueSeries>> {
        self.get_or_build(SeriesKind::Plane, components, modulus, order)
    }

    /// Head-factor series (finite product of the first `components - 1`
    /// inverse factors) mod `modulus`.
    pub fn head(&self, components: u64, modulus: u64, order: usize) -> Result<Arc<ResidueSeries>> {
        self.get_or_build(SeriesKind::Head, components, modulus, order)
    }

    fn get_or_build(
        &self,
        kind: SeriesKind,
        components: u64,
        modulus: u64,
        order: usize,
    ) -> Result<Arc<ResidueSeries>> {
        let key = (kind, components, modulus, order);
        if let Some(hit) = self.lock().get(&key) {
            return Ok(hit.clone());
        }
        // Built outside the lock so slow builds do not serialize readers.
        let built = Arc::new(match kind {
            SeriesKind::Plane => pl_series(components, modulus, order)?,
            SeriesKind::Head => f_series(components, modulus, order)?,
        });
        Ok(self.lock().entry(key).or_insert(built).clone())
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, SeriesMap> {
        self.entries.lock().expect("series cache lock poisoned")
    }
}
