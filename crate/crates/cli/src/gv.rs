//! Gilbert-Varshamov existence condition, exact in big integers.

use crate::codefile::prime_power;
use crate::error::CliError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct GvReport {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
    /// The ball-volume sum over i = 0..d-2 of C(n-1,i)(q-1)^i.
    pub lhs: String,
    /// q^(n-k).
    pub rhs: String,
    pub satisfied: bool,
}

/// Checks the GV condition: a code with the given parameters exists when
/// sum_{i=0}^{d-2} C(n-1,i) (q-1)^i < q^(n-k).
pub fn gv_check(n: u64, k: u64, d: u64, q: u64) -> Result<GvReport, CliError> {
    if k < 1 || k > n || d < 1 || d > n {
        return Err(CliError::Malformed(format!(
            "invalid parameters: need 1 <= k <= n and 1 <= d <= n, got n={n} k={k} d={d}"
        )));
    }
    if prime_power(q).is_none() {
        return Err(CliError::Malformed(format!(
            "invalid parameters: q = {q} is not a prime power"
        )));
    }
    let qm1 = BigInt::from(q - 1);
    let mut lhs = BigInt::zero();
    let mut binom = BigInt::one(); // C(n-1, 0)
    let mut power = BigInt::one(); // (q-1)^0
    for i in 0..=d.saturating_sub(2) {
        if d < 2 {
            break;
        }
        lhs += &binom * &power;
        // advance to C(n-1, i+1) and (q-1)^(i+1)
        binom = binom * BigInt::from(n - 1 - i) / BigInt::from(i + 1);
        power *= &qm1;
    }
    let rhs = BigInt::from(q).pow((n - k) as u32);
    Ok(GvReport {
        n,
        k,
        d,
        q,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        satisfied: lhs < rhs,
    })
}
