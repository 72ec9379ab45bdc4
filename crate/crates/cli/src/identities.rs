//! Sweep driver for the exact combinatorial identity checks.

use hyperbounds::exact;
use num::bigint::BigInt;

/// One (n, s, k) triple: the three expressions of the first identity with
/// both equality flags, and both sides of the second identity.
#[derive(Debug, Clone)]
pub struct IdentityRow {
    pub n: i64,
    pub s: i64,
    pub k: i64,
    pub first: BigInt,
    pub middle: BigInt,
    pub third: BigInt,
    pub first_eq_third: bool,
    pub middle_eq_third: bool,
    pub eq3_lhs: BigInt,
    pub eq3_rhs: BigInt,
    pub eq3_holds: bool,
}

/// All rows for 3 <= s < n <= n_max, 2 <= k <= k_max, in (n, s, k) order.
pub fn sweep(n_max: i64, k_max: i64) -> Vec<IdentityRow> {
    let mut rows = Vec::new();
    for n in 4..=n_max {
        for s in 3..n {
            for k in 2..=k_max {
                let eq2 = exact::check_identity_eq2(n, s, k).expect("sweep range is valid");
                let eq3 = exact::check_identity_eq3(n, s, k).expect("sweep range is valid");
                rows.push(IdentityRow {
                    n,
                    s,
                    k,
                    first: eq2.first,
                    middle: eq2.middle,
                    third: eq2.third,
                    first_eq_third: eq2.first_equals_third,
                    middle_eq_third: eq2.middle_equals_third,
                    eq3_lhs: eq3.lhs,
                    eq3_rhs: eq3.rhs,
                    eq3_holds: eq3.holds,
                });
            }
        }
    }
    rows
}

/// The exit-code condition: the outer equality of the first identity and
/// the second identity hold on every row. Middle-expression mismatches are
/// reported data and do not count.
pub fn all_pass(rows: &[IdentityRow]) -> bool {
    rows.iter().all(|r| r.first_eq_third && r.eq3_holds)
}
