//! Exact integer/rational evaluation of the binomial quantities behind the
//! degree bounds, and exact checkers for the two combinatorial identities
//! the bounds rest on.
//!
//! Everything here is arbitrary precision; no floating point. The binomial
//! coefficient follows the zero-extension convention: `binom(n, k) = 0`
//! whenever `n < k` or `k < 0`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("uniformity k must be at least 2, got {0}")]
    KTooSmall(i64),
    #[error("index s = {s} out of range 1..={n}")]
    SOutOfRange { s: i64, n: i64 },
    #[error("identity requires {requirement}, got n = {n}, s = {s}, k = {k}")]
    PreconditionViolated {
        requirement: &'static str,
        n: i64,
        s: i64,
        k: i64,
    },
}

/// Binomial coefficient under the zero-extension convention: `n!/(k!(n-k)!)`
/// for `n >= k >= 0`, and `0` when `n < k` or `k < 0`. Total on all integer
/// pairs.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    // multiplicative form with running exact division; k! never needs to be
    // materialized and every intermediate quotient is an integer
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Coefficient `A1 = C(n-2, k-2) / (k-1)`: the common weight every bound
/// places on a neighbour's contribution. Zero when `n < k`.
pub fn a1(n: i64, k: i64) -> Result<BigRational, ExactError> {
    if k < 2 {
        return Err(ExactError::KTooSmall(k));
    }
    Ok(BigRational::new(binom(n - 2, k - 2), BigInt::from(k - 1)))
}

/// Coefficient `A2 = sum_{r=0}^{k-2} (r+1)/(k-1) C(s-1, r+1) C(n-s, k-r-2)`,
/// the total weight the bound at index `s` subtracts for the high-degree
/// block. Evaluated exactly under the zero-extension convention.
pub fn a2(n: i64, k: i64, s: i64) -> Result<BigRational, ExactError> {
    if k < 2 {
        return Err(ExactError::KTooSmall(k));
    }
    if s < 1 || s > n {
        return Err(ExactError::SOutOfRange { s, n });
    }
    let mut total = BigInt::zero();
    for r in 0..=(k - 2) {
        total += BigInt::from(r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2);
    }
    Ok(BigRational::new(total, BigInt::from(k - 1)))
}

/// Exact evaluation of the three expressions of the first identity.
///
/// The outer two expressions agree on every instance; the middle one does
/// not (for example n=5, s=3, k=3 gives 5 against 3), so its equality flag
/// is reported as data rather than asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: i64,
    pub s: i64,
    pub k: i64,
    pub first: BigInt,
    pub middle: BigInt,
    pub third: BigInt,
    pub first_equals_third: bool,
    pub middle_equals_third: bool,
}

/// Checks `sum_r C(s-3, k-r-2) C(n-s+1, r) = sum_p C(s-2, p-1) C(n-p, k-p-1)
/// = C(n-2, k-2)` exactly, reporting all three values and both equality
/// flags. Requires `n > s >= 3` and `k >= 2`.
pub fn check_identity_eq2(n: i64, s: i64, k: i64) -> Result<IdentityReport, ExactError> {
    if !(n > s && s >= 3) || k < 2 {
        return Err(ExactError::PreconditionViolated {
            requirement: "n > s >= 3 and k >= 2",
            n,
            s,
            k,
        });
    }
    let mut first = BigInt::zero();
    for r in 0..=(k - 2) {
        first += binom(s - 3, k - r - 2) * binom(n - s + 1, r);
    }
    let mut middle = BigInt::zero();
    for p in 1..=(k - 1) {
        middle += binom(s - 2, p - 1) * binom(n - p, k - p - 1);
    }
    let third = binom(n - 2, k - 2);
    Ok(IdentityReport {
        n,
        s,
        k,
        first_equals_third: first == third,
        middle_equals_third: middle == third,
        first,
        middle,
        third,
    })
}

/// Both exact sides of the second identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityEq3 {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// Checks `sum_r (r+1) C(s-1, r+1) C(n-s, k-r-2)` against
/// `sum_r (k-1-r) C(s-2, k-r-1) C(n-s+1, r) + C(n-2, k-2)` exactly.
/// Requires `n >= s >= 3` and `k >= 2`.
pub fn check_identity_eq3(n: i64, s: i64, k: i64) -> Result<IdentityEq3, ExactError> {
    if !(n >= s && s >= 3) || k < 2 {
        return Err(ExactError::PreconditionViolated {
            requirement: "n >= s >= 3 and k >= 2",
            n,
            s,
            k,
        });
    }
    let mut lhs = BigInt::zero();
    let mut rhs = BigInt::zero();
    for r in 0..=(k - 2) {
        lhs += BigInt::from(r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2);
        rhs += BigInt::from(k - 1 - r) * binom(s - 2, k - r - 1) * binom(n - s + 1, r);
    }
    rhs += binom(n - 2, k - 2);
    Ok(IdentityEq3 {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Square root of a nonnegative rational when it is a perfect square; the
/// bound evaluators use this to keep collapsing discriminants exact.
pub fn sqrt_if_square(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num_root = x.numer().sqrt();
    let den_root = x.denom().sqrt();
    if &(&num_root * &num_root) == x.numer() && &(&den_root * &den_root) == x.denom() {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}
