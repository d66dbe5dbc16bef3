//! The standard verification corpus: named instances of every family,
//! shared by the verification suites and the acceptance checks.

use crate::constructors::{GroupSpec, Sign};
use crate::group::GroupTable;
use crate::numberth;
use crate::{Bounds, Result};

pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub table: GroupTable,
}

fn entry(spec: GroupSpec, bounds: &Bounds) -> Result<CorpusEntry> {
    Ok(CorpusEntry {
        name: spec.render(),
        table: spec.build(bounds)?,
        spec,
    })
}

/// Metacyclic clause parameters, used both by the corpus and the CLI scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseParams {
    Vi { m: u64, p: u64, k: u64 },
    Vii { m: u64, p: u64, alpha: u32, k: u64 },
}

impl ClauseParams {
    pub fn to_spec(self) -> GroupSpec {
        match self {
            ClauseParams::Vi { m, p, k } => GroupSpec::Metacyclic6 { m, p, k },
            ClauseParams::Vii { m, p, alpha, k } => GroupSpec::Metacyclic7 { m, p, alpha, k },
        }
    }

    pub fn order(self) -> u64 {
        match self {
            ClauseParams::Vi { m, p, .. } => m * p * p,
            ClauseParams::Vii { m, p, alpha, .. } => m * p.pow(alpha),
        }
    }
}

fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| numberth::is_prime(p)).collect()
}

/// Every clause-(vi) parameter triple with group order at most `order_max`
/// whose presentation is realizable; `require_ccs` further restricts to the
/// arithmetic CCS condition.
pub fn enumerate_vi(order_max: u64, require_ccs: bool) -> Vec<ClauseParams> {
    let mut out = Vec::new();
    for p in primes_upto((order_max as f64).sqrt() as u64 + 1) {
        if p * p > order_max {
            break;
        }
        for m in 1..=order_max / (p * p) {
            for k in 0..m * p {
                let v = numberth::validate_vi(m, p, k);
                if v.valid_presentation && (!require_ccs || v.ccs_condition) {
                    out.push(ClauseParams::Vi { m, p, k });
                }
            }
        }
    }
    out
}

/// Every clause-(vii) parameter tuple with group order at most `order_max`;
/// alpha ranges as far as the order bound allows unless capped.
pub fn enumerate_vii(order_max: u64, alpha_max: Option<u32>, require_ccs: bool) -> Vec<ClauseParams> {
    let mut out = Vec::new();
    for p in primes_upto(order_max) {
        let mut alpha = 1u32;
        while p.pow(alpha) <= order_max {
            if alpha_max.is_none_or(|cap| alpha <= cap) {
                let pa = p.pow(alpha);
                for m in 1..=order_max / pa {
                    for k in 0..m.max(1) {
                        let v = numberth::validate_vii(m, p, alpha, k);
                        if v.valid_presentation && (!require_ccs || v.ccs_condition) {
                            out.push(ClauseParams::Vii { m, p, alpha, k });
                        }
                    }
                }
            }
            alpha += 1;
        }
    }
    out
}

/// The standard corpus: every family at desk scale, including the designated
/// non-CCS specimens (semidihedral groups, exponent-p² odd extraspecials,
/// the order-16 central product, and metacyclic parameter choices violating
/// the arithmetic condition).
pub fn standard_corpus(bounds: &Bounds) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in [1u64, 2, 3, 4, 5, 6, 8, 12] {
        out.push(entry(GroupSpec::Cyclic(n), bounds)?);
    }
    for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (5, 2)] {
        out.push(entry(GroupSpec::ElemAb { p, k }, bounds)?);
    }
    for order in (6..=64u64).step_by(2) {
        out.push(entry(GroupSpec::Dihedral { order }, bounds)?);
    }
    for n in 2..=16u64 {
        out.push(entry(GroupSpec::Dicyclic { n }, bounds)?);
    }
    for order in [16u64, 32, 64] {
        out.push(entry(GroupSpec::Semidihedral { order }, bounds)?);
    }
    for (p, n, sign) in [
        (2u64, 1u32, Sign::Plus),
        (2, 1, Sign::Minus),
        (2, 2, Sign::Plus),
        (2, 2, Sign::Minus),
        (3, 1, Sign::Plus),
        (3, 1, Sign::Minus),
        (5, 1, Sign::Plus),
    ] {
        out.push(entry(GroupSpec::Extraspecial { p, n, sign }, bounds)?);
    }
    out.push(entry(GroupSpec::Pauli { n: 1 }, bounds)?);
    out.push(entry(GroupSpec::Pauli { n: 2 }, bounds)?);
    for params in enumerate_vi(200, true) {
        out.push(entry(params.to_spec(), bounds)?);
    }
    for params in enumerate_vii(200, None, true) {
        out.push(entry(params.to_spec(), bounds)?);
    }
    // metacyclic parameters that are realizable but fail the CCS condition
    out.push(entry(
        GroupSpec::Metacyclic7 {
            m: 15,
            p: 2,
            alpha: 1,
            k: 4,
        },
        bounds,
    )?);
    out.push(entry(
        GroupSpec::Metacyclic7 {
            m: 5,
            p: 2,
            alpha: 2,
            k: 2,
        },
        bounds,
    )?);
    out.push(entry(GroupSpec::Sl25, bounds)?);
    out.push(entry(GroupSpec::A5, bounds)?);
    Ok(out)
}
