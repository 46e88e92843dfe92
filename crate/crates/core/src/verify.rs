//! Family verification: instantiate a closed-form family at a prime, run the
//! brute-force pipeline, and certify that the two star forests agree.

use serde::Serialize;

use crate::bigraph::{closed_form_forest, star_forest, Family};
use crate::group::is_prime;
use crate::report::analyze_group;
use crate::Result;

/// The outcome of checking one (family, prime) instance. `verdict` is
/// `"pass"` exactly when the closed-form and brute-force multisets are
/// equal.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationCertificate {
    pub schema: u32,
    pub family: &'static str,
    pub prime: u64,
    pub order: u64,
    pub expected: Vec<u64>,
    pub computed: Vec<u64>,
    pub verdict: &'static str,
}

impl VerificationCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// Certifies one family instance. The brute-force side is the full pipeline
/// on the constructed group; the expected side is pure arithmetic on `p`.
pub fn verify_family(
    family: Family,
    p: u64,
    cap: u64,
    threads: usize,
) -> Result<VerificationCertificate> {
    let expected = closed_form_forest(family, p)?;
    let analysis = analyze_group(&family.group_spec(p), cap, threads)?;
    let computed = star_forest(&analysis.degrees);
    let verdict = if computed == expected { "pass" } else { "fail" };
    Ok(VerificationCertificate {
        schema: 1,
        family: family.name(),
        prime: p,
        order: family.order(p),
        expected: expected.stars().to_vec(),
        computed: computed.stars().to_vec(),
        verdict,
    })
}

/// Primes in the inclusive range `[lo, hi]`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}
