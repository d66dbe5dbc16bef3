//! Modular arithmetic and the parameter validators for the two metacyclic
//! family clauses.

use crate::{Error, Result};
use serde::Serialize;

pub fn gcd(a: u64, b: u64) -> u64 {
    crate::group::gcd_u64(a, b)
}

/// b^e mod m by square-and-multiply; m >= 1, with 128-bit intermediates.
pub fn powmod(b: u64, e: u64, m: u64) -> u64 {
    assert!(m >= 1);
    let mut base = (b % m) as u128;
    let mut acc: u128 = 1 % m as u128;
    let mut e = e;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors_u64(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// `a ≡ b (mod m)` with the m = 1 convention that everything is congruent.
fn congruent(a: u64, b: u64, m: u64) -> bool {
    a % m == b % m
}

/// Validation outcome for metacyclic parameters: whether the presentation
/// is realizable at all, and whether the arithmetic CCS condition holds on
/// top of it. `reasons` lists the failed constraints.
#[derive(Debug, Clone, Serialize)]
pub struct ParamVerdict {
    pub valid_presentation: bool,
    pub ccs_condition: bool,
    pub canonical_k: u64,
    pub reasons: Vec<String>,
}

impl ParamVerdict {
    fn new(canonical_k: u64) -> Self {
        ParamVerdict {
            valid_presentation: true,
            ccs_condition: true,
            canonical_k,
            reasons: Vec::new(),
        }
    }

    fn fail_presentation(&mut self, tag: &str) {
        self.valid_presentation = false;
        self.ccs_condition = false;
        self.reasons.push(tag.to_string());
    }

    fn fail_ccs(&mut self, tag: &str) {
        self.ccs_condition = false;
        self.reasons.push(tag.to_string());
    }
}

fn p_smallest_prime(m: u64, p: u64) -> bool {
    prime_factors_u64(m).into_iter().all(|q| q > p)
}

/// Parameters for ⟨x,y | x^{mp} = y^p = 1, yxy^{-1} = x^k⟩.
///
/// The presentation is realizable iff p is prime, (m,p) = 1, p is below
/// every prime of m, k^p ≡ 1 (mod mp) and k ≢ 1 (mod mp). The CCS condition
/// additionally requires gcd(k−1, m) = 1. k is canonicalized mod mp.
pub fn validate_vi(m: u64, p: u64, k: u64) -> ParamVerdict {
    let modulus = m.saturating_mul(p).max(1);
    let k = k % modulus;
    let mut v = ParamVerdict::new(k);
    if m < 1 {
        v.fail_presentation("m-not-positive");
        return v;
    }
    if !is_prime(p) {
        v.fail_presentation("p-not-prime");
        return v;
    }
    if gcd(m, p) != 1 {
        v.fail_presentation("m-p-not-coprime");
    }
    if !p_smallest_prime(m, p) {
        v.fail_presentation("p-not-smallest-prime");
    }
    if !v.valid_presentation {
        return v;
    }
    if !congruent(powmod(k, p, modulus), 1, modulus) {
        v.fail_presentation("k-pow-p-not-1-mod-mp");
    }
    if congruent(k, 1, modulus) {
        v.fail_presentation("k-congruent-1-mod-mp");
    }
    if !v.valid_presentation {
        return v;
    }
    if gcd(k.wrapping_sub(1), m) != 1 {
        v.fail_ccs("gcd-k-minus-1-m-not-1");
    }
    v
}

/// Parameters for ⟨x,y | x^m = y^{p^α} = 1, yxy^{-1} = x^k⟩.
///
/// Realizable iff p prime, α ≥ 1, (m,p) = 1, p below every prime of m,
/// (m,k) = 1 and k^{p^α} ≡ 1 (mod m). The CCS condition further requires
/// gcd(m, k−1) = 1, k^p ≡ 1 (mod m) and k ≢ 1 (mod m); the last excludes
/// the abelian (cyclic) case. The condition is gcd(k−1, m) = 1, not the
/// transposed gcd(m−1, k) = 1. k is canonicalized mod m.
pub fn validate_vii(m: u64, p: u64, alpha: u32, k: u64) -> ParamVerdict {
    let k = if m == 0 { k } else { k % m };
    let mut v = ParamVerdict::new(k);
    if m < 1 {
        v.fail_presentation("m-not-positive");
        return v;
    }
    if !is_prime(p) {
        v.fail_presentation("p-not-prime");
        return v;
    }
    if alpha < 1 {
        v.fail_presentation("alpha-not-positive");
        return v;
    }
    if gcd(m, p) != 1 {
        v.fail_presentation("m-p-not-coprime");
    }
    if !p_smallest_prime(m, p) {
        v.fail_presentation("p-not-smallest-prime");
    }
    if gcd(m, k) != 1 {
        v.fail_presentation("m-k-not-coprime");
    }
    if !v.valid_presentation {
        return v;
    }
    let pa = p.checked_pow(alpha).unwrap_or(u64::MAX);
    if !congruent(powmod(k, pa, m), 1, m) {
        v.fail_presentation("k-pow-p-alpha-not-1-mod-m");
        return v;
    }
    if gcd(m, k.wrapping_sub(1)) != 1 {
        v.fail_ccs("gcd-k-minus-1-m-not-1");
    }
    if !congruent(powmod(k, p, m), 1, m) {
        v.fail_ccs("k-pow-p-not-1-mod-m");
    }
    if congruent(k, 1, m) {
        v.fail_ccs("k-congruent-1-mod-m");
    }
    v
}

/// Both sides of the gcd equivalence: lhs = [(k−1, m) = 1] and
/// rhs = [(k^u − 1, m) = 1 for all u in 1..p]. The hypotheses — p prime and
/// below every prime of m, (m,k) = 1, k ≢ 1 (mod m), k^p ≡ 1 (mod m) — are
/// mandatory and violations are domain errors.
pub fn gcd_power_equivalence(m: u64, p: u64, k: u64) -> Result<(bool, bool)> {
    if m < 1 {
        return Err(Error::domain("m must be positive"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("p = {p} is not prime")));
    }
    if !p_smallest_prime(m, p) {
        return Err(Error::domain(format!(
            "p = {p} is not below every prime divisor of m = {m}"
        )));
    }
    if gcd(m, k) != 1 {
        return Err(Error::domain(format!("gcd(m, k) = {} != 1", gcd(m, k))));
    }
    if congruent(k, 1, m) {
        return Err(Error::domain("k ≡ 1 (mod m)"));
    }
    if !congruent(powmod(k, p, m), 1, m) {
        return Err(Error::domain("k^p ≢ 1 (mod m)"));
    }
    let lhs = gcd((k % m + m - 1) % m, m) == 1;
    let rhs = (1..p).all(|u| {
        let ku = powmod(k, u, m);
        gcd((ku + m - 1) % m, m) == 1
    });
    Ok((lhs, rhs))
}
