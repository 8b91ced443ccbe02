//! Dense truncated power series over Z/m.
//!
//! [`ResidueSeries`] holds the first `order` coefficients of a power series
//! with all values reduced into `[0, modulus)`. [`DensePoly`] is the finite
//! companion type for explicit polynomial factors. Infinite products such as
//! the plane-partition generating functions are assembled by repeatedly
//! dividing by `(1 - q^j)^e`, which [`ResidueSeries::apply_inverse_factor`]
//! performs as `e` strided prefix-sum passes, each `O(order)`.

use crate::error::{Error, Result};

/// Largest permitted modulus. Residues stay below `2^32`, so sums of two
/// residues and products of two residues both fit in `u64` with no overflow.
const MAX_MODULUS: u64 = 1 << 32;

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall(modulus));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(modulus));
    }
    Ok(())
}

/// A power series truncated to its first `order` coefficients, over Z/m.
///
/// Invariants: `order >= 1`, `coeffs.len() == order`, and every stored
/// coefficient is already reduced into `[0, modulus)`. The truncation order is
/// fixed at construction; operations never extend it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSeries {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ResidueSeries {
    /// The constant series `1`, truncated to `order` terms.
    ///
    /// # Errors
    ///
    /// Rejects `modulus < 2`, `modulus > 2^32`, and `order < 1`.
    pub fn one(modulus: u64, order: usize) -> Result<Self> {
        check_modulus(modulus)?;
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut coeffs = vec![0u64; order];
        coeffs[0] = 1;
        Ok(ResidueSeries { modulus, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of retained coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// All retained coefficients, each in `[0, modulus)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `q^n`.
    ///
    /// # Errors
    ///
    /// Rejects `n >= order`; truncated coefficients are never invented.
    pub fn coeff_at(&self, n: usize) -> Result<u64> {
        self.coeffs
            .get(n)
            .copied()
            .ok_or(Error::CoefficientOutOfRange {
                index: n,
                order: self.coeffs.len(),
            })
    }

    /// Multiplies by `1 / (1 - q^stride)^exponent`.
    ///
    /// Each exponent step is one in-place strided prefix sum
    /// (`c[n] += c[n - stride]` for ascending `n`), so the cost is
    /// `exponent * (order - stride)` additions. A stride at or beyond the
    /// truncation order leaves the series unchanged.
    ///
    /// # Panics
    ///
    /// Panics if `stride == 0`.
    pub fn apply_inverse_factor(mut self, stride: usize, exponent: u32) -> Self {
        assert!(stride >= 1, "inverse factor stride must be positive");
        let m = self.modulus;
        for _ in 0..exponent {
            for n in stride..self.coeffs.len() {
                let sum = self.coeffs[n] + self.coeffs[n - stride];
                self.coeffs[n] = if sum >= m { sum - m } else { sum };
            }
        }
        self
    }

    /// Multiplies by a finite polynomial, truncating to this series' order.
    ///
    /// Linear in the polynomial argument and order-preserving.
    ///
    /// # Errors
    ///
    /// Rejects a polynomial over a different modulus.
    pub fn mul_poly(&self, poly: &DensePoly) -> Result<Self> {
        if poly.modulus != self.modulus {
            return Err(Error::ModulusMismatch(self.modulus, poly.modulus));
        }
        let m = self.modulus;
        let order = self.coeffs.len();
        let mut out = vec![0u64; order];
        for (i, &p) in poly.coeffs.iter().enumerate() {
            if p == 0 || i >= order {
                continue;
            }
            for (n, o) in out.iter_mut().enumerate().skip(i) {
                // p and the source coefficient are both < 2^32, so the
                // product fits in u64.
                *o = (*o + p * self.coeffs[n - i]) % m;
            }
        }
        Ok(ResidueSeries {
            modulus: m,
            coeffs: out,
        })
    }
}

/// A dense polynomial over Z/m with reduced coefficients and no trailing
/// zero (the zero polynomial stores no coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl DensePoly {
    /// Builds a polynomial from raw coefficients (constant term first),
    /// reducing each and trimming trailing zeros.
    ///
    /// # Errors
    ///
    /// Rejects `modulus < 2` and `modulus > 2^32`.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_modulus(modulus)?;
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(DensePoly { modulus, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, constant term first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// The expansion of `(1 - q^stride)^exponent` over Z/m.
///
/// Coefficients are alternating-sign binomials `(-1)^i C(e, i)` at exponents
/// `stride * i`, computed by iterating Pascal's rule modulo m. That keeps the
/// computation exact for composite moduli such as 4 and 8, where a
/// divide-by-factorial scheme would break.
///
/// # Errors
///
/// Rejects the same moduli as [`DensePoly::new`] and `stride == 0`.
pub fn binomial_poly(modulus: u64, stride: usize, exponent: u32) -> Result<DensePoly> {
    check_modulus(modulus)?;
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    let row = pascal_row(modulus, exponent);
    let mut coeffs = vec![0u64; stride * exponent as usize + 1];
    for (i, &b) in row.iter().enumerate() {
        let signed = if i % 2 == 0 {
            b
        } else {
            (modulus - b) % modulus
        };
        coeffs[stride * i] = signed;
    }
    // The leading entry is (-1)^e, never 0 mod m, so no trimming can occur.
    DensePoly::new(modulus, coeffs)
}

/// Row `e` of Pascal's triangle reduced mod m: `C(e, 0) .. C(e, e)`.
fn pascal_row(modulus: u64, e: u32) -> Vec<u64> {
    let mut row = vec![1u64 % modulus];
    for _ in 0..e {
        let mut next = vec![0u64; row.len() + 1];
        next[0] = row[0];
        for i in 1..row.len() {
            let sum = row[i - 1] + row[i];
            next[i] = if sum >= modulus { sum - modulus } else { sum };
        }
        next[row.len()] = row[row.len() - 1];
        row = next;
    }
    row
}
