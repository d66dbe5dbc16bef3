//! The CCS predicate — every proper characteristic subgroup cyclic — and the
//! classifier that assigns each CCS group its structural family.

use crate::aut::{automorphism_count, characteristic_subgroups, normal_subgroups, surviving_under_aut};
use crate::group::{ElementSet, GroupTable};
use crate::structure::{
    center, derived_subgroup, fitting, frattini, is_cyclic, is_cyclic_set, is_maximal_subgroup,
    is_nilpotent, is_perfect, prime_factors, prime_power, sylow_subgroup,
};
use crate::{Bounds, Error, Result};
use serde::Serialize;
use serde_json::json;

/// Family labels of the classification. The spelling `iix` for the perfect
/// clause is kept verbatim in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Clause {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
    Vii,
    Iix,
    NotApplicable,
}

impl Clause {
    pub fn label(&self) -> &'static str {
        match self {
            Clause::I => "i",
            Clause::Ii => "ii",
            Clause::Iii => "iii",
            Clause::Iv => "iv",
            Clause::V => "v",
            Clause::Vi => "vi",
            Clause::Vii => "vii",
            Clause::Iix => "iix",
            Clause::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcsReason {
    Ccs,
    Cyclic,
    CharacteristicallySimple,
    NoncyclicWitness,
}

impl CcsReason {
    pub fn label(&self) -> &'static str {
        match self {
            CcsReason::Ccs => "ccs",
            CcsReason::Cyclic => "cyclic",
            CcsReason::CharacteristicallySimple => "characteristically-simple",
            CcsReason::NoncyclicWitness => "noncyclic-characteristic-witness",
        }
    }
}

/// Diagnostic facts gathered during classification.
#[derive(Debug, Clone)]
pub struct Detail {
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: Option<usize>,
    pub fitting_order: Option<usize>,
    pub aut_order: Option<u64>,
    pub nilpotent: bool,
    pub perfect: bool,
    /// Every clause profile the group matches; the canonical one is first.
    pub also_matches: Vec<Clause>,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub is_ccs: bool,
    pub clause: Clause,
    pub reason: CcsReason,
    /// A noncyclic proper nontrivial characteristic subgroup, when that is
    /// what disqualifies the group.
    pub witness: Option<ElementSet>,
    pub witness_is_cyclic: Option<bool>,
    pub detail: Detail,
}

impl ClassificationReport {
    /// Stable JSON shape; object keys serialize sorted.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "is_ccs": self.is_ccs,
            "clause": self.clause.label(),
            "reason": self.reason.label(),
            "witness_order": self.witness.as_ref().map(|w| w.len()),
            "witness_is_cyclic": self.witness_is_cyclic,
            "center_order": self.detail.center_order,
            "derived_order": self.detail.derived_order,
            "frattini_order": self.detail.frattini_order,
            "fitting_order": self.detail.fitting_order,
            "aut_order": self.detail.aut_order,
        })
    }
}

fn smallest_prime(n: usize) -> Option<usize> {
    prime_factors(n).into_iter().min()
}

/// Verdict of the CCS definition: non-cyclic, not characteristically simple,
/// and every proper characteristic subgroup cyclic.
///
/// Abelian groups are decided definitionally (the elements of order dividing
/// p form a characteristic subgroup); otherwise the noncyclic proper normal
/// subgroups are the only possible disqualifiers and are checked against the
/// streamed automorphism search, which stops as soon as all are moved.
fn ccs_verdict(
    g: &GroupTable,
    bounds: &Bounds,
) -> Result<(bool, CcsReason, Option<ElementSet>)> {
    let n = g.order();
    if is_cyclic(g) {
        return Ok((false, CcsReason::Cyclic, None));
    }
    let z = center(g);
    if z.len() == n {
        // abelian and noncyclic
        if let Some((p, _)) = prime_power(n) {
            if g.exponent() == p as u64 {
                return Ok((false, CcsReason::CharacteristicallySimple, None));
            }
        }
        // Ω1 of a noncyclic primary part: characteristic, noncyclic, proper
        for p in prime_factors(n) {
            let members: Vec<usize> =
                (0..n).filter(|&x| p % g.elt_order(x) == 0).collect();
            if members.len() > p {
                let w = ElementSet::from_indices(n, &members);
                debug_assert!(w.is_subgroup(g) && w.len() < n);
                return Ok((false, CcsReason::NoncyclicWitness, Some(w)));
            }
        }
        unreachable!("noncyclic abelian group with all primary parts cyclic");
    }
    let normals = normal_subgroups(g, bounds)?;
    let proper: Vec<ElementSet> = normals
        .iter()
        .filter(|s| s.len() > 1 && s.len() < n)
        .cloned()
        .collect();
    if proper.is_empty() {
        return Ok((false, CcsReason::CharacteristicallySimple, None));
    }
    // fingerprint-unique normal subgroups are characteristic outright
    let certified = crate::aut::certified_characteristic(g, &proper, &normals);
    let mut certified_cyclic = false;
    for (s, &cert) in proper.iter().zip(&certified) {
        if cert {
            if !is_cyclic_set(g, s) {
                return Ok((false, CcsReason::NoncyclicWitness, Some(s.clone())));
            }
            certified_cyclic = true;
        }
    }
    let der = derived_subgroup(g);
    let have_certificate = certified_cyclic
        || (z.len() > 1 && z.len() < n)
        || (der.len() > 1 && der.len() < n)
        || proper.iter().any(|s| is_normal_sylow(g, s));
    // certified noncyclic candidates returned above, so these are all
    // undetermined
    let noncyclic: Vec<ElementSet> = proper
        .iter()
        .filter(|s| !is_cyclic_set(g, s))
        .cloned()
        .collect();
    if have_certificate {
        if noncyclic.is_empty() {
            return Ok((true, CcsReason::Ccs, None));
        }
        let status = surviving_under_aut(g, &noncyclic, bounds)?;
        if let Some(i) = status.iter().position(|&kept| kept) {
            return Ok((
                false,
                CcsReason::NoncyclicWitness,
                Some(noncyclic[i].clone()),
            ));
        }
        Ok((true, CcsReason::Ccs, None))
    } else {
        // no cheap nonempty certificate: track every proper normal subgroup
        let status = surviving_under_aut(g, &proper, bounds)?;
        let mut any_survivor = false;
        for (s, kept) in proper.iter().zip(&status) {
            if *kept {
                any_survivor = true;
                if !is_cyclic_set(g, s) {
                    return Ok((false, CcsReason::NoncyclicWitness, Some(s.clone())));
                }
            }
        }
        if any_survivor {
            Ok((true, CcsReason::Ccs, None))
        } else {
            Ok((false, CcsReason::CharacteristicallySimple, None))
        }
    }
}

/// Whether a normal subgroup is a (necessarily unique, hence characteristic)
/// normal Sylow subgroup: full p-part order, all elements of p-power order.
fn is_normal_sylow(g: &GroupTable, s: &ElementSet) -> bool {
    let n = g.order();
    if let Some((p, _)) = prime_power(s.len()) {
        n.is_multiple_of(s.len())
            && !(n / s.len()).is_multiple_of(p)
            && s.iter().all(|x| {
                let o = g.elt_order(x);
                o == 1 || prime_power(o).is_some_and(|(q, _)| q == p)
            })
    } else {
        false
    }
}

/// True iff the only characteristic subgroups are the trivial one and the
/// whole group.
pub fn is_characteristically_simple(g: &GroupTable, bounds: &Bounds) -> Result<bool> {
    let n = g.order();
    if n == 1 {
        return Ok(true);
    }
    if center(g).len() == n {
        // abelian: characteristically simple iff elementary abelian
        if let Some((p, _)) = prime_power(n) {
            return Ok(g.exponent() == p as u64);
        }
        return Ok(false);
    }
    let z = center(g);
    if z.len() > 1 && z.len() < n {
        return Ok(false);
    }
    let der = derived_subgroup(g);
    if der.len() > 1 && der.len() < n {
        return Ok(false);
    }
    let normals = normal_subgroups(g, bounds)?;
    let candidates: Vec<ElementSet> = normals
        .iter()
        .filter(|s| s.len() > 1 && s.len() < n)
        .cloned()
        .collect();
    if candidates.is_empty() {
        return Ok(true);
    }
    if crate::aut::certified_characteristic(g, &candidates, &normals)
        .iter()
        .any(|&c| c)
    {
        return Ok(false);
    }
    let status = surviving_under_aut(g, &candidates, bounds)?;
    Ok(status.iter().all(|&kept| !kept))
}

fn is_dihedral_shape(g: &GroupTable) -> bool {
    let n = g.order();
    if n < 4 || !n.is_multiple_of(2) {
        return false;
    }
    let half = n / 2;
    if let Some(x) = (0..n).find(|&x| g.elt_order(x) == half) {
        let xs = g.generated_subgroup(&[x]);
        return (0..n).any(|y| !xs.contains(y) && g.mul(y, y) == 0 && g.conj(y, x) == g.inv(x));
    }
    false
}

fn is_dicyclic_shape(g: &GroupTable) -> bool {
    let n = g.order();
    if n < 8 || !n.is_multiple_of(4) {
        return false;
    }
    let half = n / 2;
    if let Some(a) = (0..n).find(|&a| g.elt_order(a) == half) {
        let asub = g.generated_subgroup(&[a]);
        let an = g.pow(a, n / 4);
        return (0..n)
            .any(|b| !asub.contains(b) && g.mul(b, b) == an && g.conj(b, a) == g.inv(a));
    }
    false
}

fn is_extraspecial(g: &GroupTable, bounds: &Bounds) -> Result<bool> {
    let Some((p, _)) = prime_power(g.order()) else {
        return Ok(false);
    };
    let z = center(g);
    if z.len() != p {
        return Ok(false);
    }
    if derived_subgroup(g) != z {
        return Ok(false);
    }
    Ok(frattini(g, bounds)? == z)
}

fn matches_clause(g: &GroupTable, clause: Clause, bounds: &Bounds) -> Result<bool> {
    let n = g.order();
    Ok(match clause {
        Clause::I => {
            matches!(prime_power(n), Some((p, _)) if p > 2 && g.exponent() == p as u64)
                && is_extraspecial(g, bounds)?
        }
        Clause::Ii => {
            matches!(prime_power(n), Some((2, _))) && is_extraspecial(g, bounds)?
        }
        Clause::Iii => {
            if !matches!(prime_power(n), Some((2, _))) {
                false
            } else {
                let z = center(g);
                let ok = z.len() == 4
                    && is_cyclic_set(g, &z)
                    && derived_subgroup(g).len() == 2
                    && frattini(g, bounds)?.len() == 2;
                if !ok {
                    false
                } else {
                    let (q, _) = g.quotient(&z, bounds)?;
                    (0..q.order()).all(|x| q.elt_order(x) <= 2)
                }
            }
        }
        Clause::Iv => is_dihedral_shape(g),
        Clause::V => is_dicyclic_shape(g),
        Clause::Vi | Clause::Vii => {
            if is_nilpotent(g) || is_perfect(g) {
                false
            } else {
                let p = smallest_prime(n).unwrap();
                let syl = sylow_subgroup(g, p);
                if clause == Clause::Vi {
                    syl.len() == p * p && syl.iter().all(|x| g.elt_order(x) <= p)
                } else {
                    is_cyclic_set(g, &syl)
                }
            }
        }
        Clause::Iix => is_perfect(g) && perfect_ccs_check(g, bounds)?,
        Clause::NotApplicable => false,
    })
}

fn assign_clause(g: &GroupTable, bounds: &Bounds) -> Result<(Clause, Vec<Clause>)> {
    let nilpotent = is_nilpotent(g);
    let order: &[Clause] = if nilpotent {
        &[Clause::Iv, Clause::V, Clause::Ii, Clause::Iii, Clause::I]
    } else if is_perfect(g) {
        &[Clause::Iix]
    } else {
        &[Clause::Iv, Clause::V, Clause::Vi, Clause::Vii]
    };
    let mut matches = Vec::new();
    for &c in order {
        if matches_clause(g, c, bounds)? {
            matches.push(c);
        }
    }
    match matches.first() {
        Some(&first) => Ok((first, matches)),
        None => Err(Error::ClassificationFailure(format!(
            "CCS group of order {} matches no clause",
            g.order()
        ))),
    }
}

fn base_detail(g: &GroupTable) -> Detail {
    Detail {
        center_order: center(g).len(),
        derived_order: derived_subgroup(g).len(),
        frattini_order: None,
        fitting_order: None,
        aut_order: None,
        nilpotent: is_nilpotent(g),
        perfect: is_perfect(g),
        also_matches: Vec::new(),
    }
}

/// The CCS verdict, with the clause filled in whenever the verdict is true.
pub fn is_ccs(g: &GroupTable, bounds: &Bounds) -> Result<ClassificationReport> {
    let (verdict, reason, witness) = ccs_verdict(g, bounds)?;
    let mut detail = base_detail(g);
    let clause = if verdict {
        let (c, all) = assign_clause(g, bounds)?;
        detail.also_matches = all;
        c
    } else {
        Clause::NotApplicable
    };
    let witness_is_cyclic = witness.as_ref().map(|w| is_cyclic_set(g, w));
    Ok(ClassificationReport {
        is_ccs: verdict,
        clause,
        reason,
        witness,
        witness_is_cyclic,
        detail,
    })
}

/// Full classification: the verdict plus the enriched diagnostic detail
/// (Frattini/Fitting orders and the automorphism count, when within bounds).
pub fn classify_ccs(g: &GroupTable, bounds: &Bounds) -> Result<ClassificationReport> {
    let mut report = is_ccs(g, bounds)?;
    if g.order() <= bounds.max_order {
        report.detail.frattini_order = frattini(g, bounds).ok().map(|s| s.len());
        report.detail.fitting_order = fitting(g, bounds).ok().map(|s| s.len());
        report.detail.aut_order = automorphism_count(g, bounds).ok();
    }
    Ok(report)
}

/// The perfect-case criterion: the center is cyclic, nontrivial, and every
/// proper characteristic subgroup lies inside it.
pub fn perfect_ccs_check(g: &GroupTable, bounds: &Bounds) -> Result<bool> {
    if !is_perfect(g) {
        return Err(Error::domain("perfect_ccs_check requires a perfect group"));
    }
    let z = center(g);
    if z.len() == 1 || !is_cyclic_set(g, &z) {
        return Ok(false);
    }
    let chars = characteristic_subgroups(g, bounds)?;
    Ok(chars
        .iter()
        .filter(|s| s.len() < g.order())
        .all(|s| s.is_subset(&z)))
}

/// Frobenius test against a designated kernel: the centralizer of every
/// nonidentity element of N must lie inside N.
pub fn is_frobenius_with_kernel(g: &GroupTable, n: &ElementSet) -> Result<bool> {
    if !n.is_subgroup(g) || !g.is_normal(n) {
        return Err(Error::domain("kernel must be a normal subgroup"));
    }
    for x in n.iter() {
        if x == 0 {
            continue;
        }
        for y in 0..g.order() {
            if g.mul(y, x) == g.mul(x, y) && !n.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Fitting-subgroup shape of a non-nilpotent CCS group with proper derived
/// subgroup: F(G) cyclic, of index the smallest prime, and maximal.
pub fn prime_index_cyclic_fitting(g: &GroupTable, bounds: &Bounds) -> Result<bool> {
    if is_nilpotent(g) {
        return Err(Error::domain("requires a non-nilpotent group"));
    }
    if derived_subgroup(g).len() == g.order() {
        return Err(Error::domain("requires G' < G"));
    }
    let report = is_ccs(g, bounds)?;
    if !report.is_ccs {
        return Err(Error::domain("requires a CCS group"));
    }
    let f = fitting(g, bounds)?;
    let p = smallest_prime(g.order()).unwrap();
    Ok(g.order() / f.len() == p && is_cyclic_set(g, &f) && is_maximal_subgroup(g, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors as cons;
    use crate::structure::sylow_subgroup;

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn dihedral_is_ccs() {
        let report = is_ccs(&cons::dihedral(8, &b()).unwrap(), &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Iv);
        assert_eq!(report.reason, CcsReason::Ccs);
        // D8 is also extraspecial; the overlap is reported
        assert!(report.detail.also_matches.contains(&Clause::Ii));
    }

    #[test]
    fn cyclic_groups_are_not_ccs() {
        let report = is_ccs(&cons::cyclic(12, &b()).unwrap(), &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::Cyclic);
        assert_eq!(report.clause, Clause::NotApplicable);
        let report = is_ccs(&cons::cyclic(1, &b()).unwrap(), &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::Cyclic);
    }

    #[test]
    fn semidihedral_16_fails_with_noncyclic_witness() {
        let report = is_ccs(&cons::semidihedral(16, &b()).unwrap(), &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::NoncyclicWitness);
        let w = report.witness.unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(report.witness_is_cyclic, Some(false));
    }

    #[test]
    fn extraspecial_27_signs() {
        let plus = cons::extraspecial(3, 1, cons::Sign::Plus, &b()).unwrap();
        let report = is_ccs(&plus, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::I);
        let minus = cons::extraspecial(3, 1, cons::Sign::Minus, &b()).unwrap();
        let report = is_ccs(&minus, &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.witness.as_ref().unwrap().len(), 9);
        assert_eq!(report.witness_is_cyclic, Some(false));
    }

    #[test]
    fn metacyclic_clause_assignment() {
        let g63 = cons::metacyclic6(7, 3, 4, &b()).unwrap();
        let report = classify_ccs(&g63, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Vi);
        let h63 = cons::metacyclic7(7, 3, 2, 2, &b()).unwrap();
        let report = classify_ccs(&h63, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Vii);
        let g21 = cons::metacyclic7(7, 3, 1, 2, &b()).unwrap();
        let report = is_ccs(&g21, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Vii);
    }

    #[test]
    fn sl25_is_perfect_clause() {
        let s = cons::sl25(&b()).unwrap();
        let report = classify_ccs(&s, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Iix);
        assert!(report.detail.perfect);
        assert_eq!(report.detail.aut_order, Some(120));
        assert!(perfect_ccs_check(&s, &b()).unwrap());
    }

    #[test]
    fn perfect_check_rejects_char_simple() {
        let a5 = cons::a5(&b()).unwrap();
        assert!(!perfect_ccs_check(&a5, &b()).unwrap());
        assert!(is_characteristically_simple(&a5, &b()).unwrap());
        let report = is_ccs(&a5, &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::CharacteristicallySimple);
        // non-perfect input is a domain error
        assert!(perfect_ccs_check(&cons::dihedral(8, &b()).unwrap(), &b()).is_err());
    }

    #[test]
    fn char_simple_examples() {
        let v4 = cons::elementary_abelian(2, 2, &b()).unwrap();
        assert!(is_characteristically_simple(&v4, &b()).unwrap());
        let d8 = cons::dihedral(8, &b()).unwrap();
        assert!(!is_characteristically_simple(&d8, &b()).unwrap());
        let c6 = cons::cyclic(6, &b()).unwrap();
        assert!(!is_characteristically_simple(&c6, &b()).unwrap());
    }

    #[test]
    fn abelian_noncyclic_witness() {
        let g = cons::direct_product(
            &cons::cyclic(4, &b()).unwrap(),
            &cons::cyclic(2, &b()).unwrap(),
            &b(),
        )
        .unwrap();
        let report = is_ccs(&g, &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::NoncyclicWitness);
        assert_eq!(report.witness.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn pauli_1_has_a_characteristic_q8() {
        // The unique Q8 inside D8∘C4 is characteristic and noncyclic, so the
        // order-16 central product is not a CCS group.
        let p1 = cons::pauli(1, &b()).unwrap();
        let report = is_ccs(&p1, &b()).unwrap();
        assert!(!report.is_ccs);
        assert_eq!(report.reason, CcsReason::NoncyclicWitness);
        let w = report.witness.unwrap();
        assert_eq!(w.len(), 8);
        // witness is the quaternion maximal: one involution, six order-4
        let orders: Vec<usize> = w.iter().map(|x| p1.elt_order(x)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        let (wt, _) = p1.subgroup_table(&w, &b()).unwrap();
        let q8 = cons::quaternion(8, &b()).unwrap();
        assert!(crate::structure::is_isomorphic(&wt, &q8, &b()).unwrap());
    }

    #[test]
    fn pauli_2_is_ccs_clause_iii() {
        let p2 = cons::pauli(2, &b()).unwrap();
        let report = is_ccs(&p2, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::Iii);
    }

    #[test]
    fn extraspecial_32_is_clause_ii() {
        for sign in [cons::Sign::Plus, cons::Sign::Minus] {
            let g = cons::extraspecial(2, 2, sign, &b()).unwrap();
            let report = is_ccs(&g, &b()).unwrap();
            assert!(report.is_ccs);
            assert_eq!(report.clause, Clause::Ii);
        }
    }

    #[test]
    fn quaternion_clause_v() {
        let q8 = cons::quaternion(8, &b()).unwrap();
        let report = is_ccs(&q8, &b()).unwrap();
        assert!(report.is_ccs);
        assert_eq!(report.clause, Clause::V);
        assert!(report.detail.also_matches.contains(&Clause::Ii));
        let q32 = cons::quaternion(32, &b()).unwrap();
        assert_eq!(is_ccs(&q32, &b()).unwrap().clause, Clause::V);
    }

    #[test]
    fn frobenius_kernel_examples() {
        let g21 = cons::metacyclic7(7, 3, 1, 2, &b()).unwrap();
        let syl7 = sylow_subgroup(&g21, 7);
        assert!(is_frobenius_with_kernel(&g21, &syl7).unwrap());
        let d8 = cons::dihedral(8, &b()).unwrap();
        let rot = d8.generated_subgroup(&[2]);
        assert!(!is_frobenius_with_kernel(&d8, &rot).unwrap()); // r^2 is central
        assert!(is_frobenius_with_kernel(&d8, &d8.full_set()).unwrap()); // vacuous
        let refl = d8.generated_subgroup(&[1]);
        assert!(is_frobenius_with_kernel(&d8, &refl).is_err()); // not normal
    }

    #[test]
    fn prime_index_cyclic_fitting_examples() {
        assert!(prime_index_cyclic_fitting(&cons::dihedral(12, &b()).unwrap(), &b()).unwrap());
        assert!(prime_index_cyclic_fitting(&cons::metacyclic6(7, 3, 4, &b()).unwrap(), &b()).unwrap());
        assert!(prime_index_cyclic_fitting(&cons::dicyclic(3, &b()).unwrap(), &b()).unwrap());
        // preconditions enforced
        assert!(prime_index_cyclic_fitting(&cons::dihedral(8, &b()).unwrap(), &b()).is_err());
        assert!(prime_index_cyclic_fitting(&cons::a5(&b()).unwrap(), &b()).is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = classify_ccs(&cons::dihedral(8, &b()).unwrap(), &b()).unwrap();
        let v = report.to_json();
        assert_eq!(v["is_ccs"], true);
        assert_eq!(v["clause"], "iv");
        assert_eq!(v["center_order"], 2);
        assert_eq!(v["frattini_order"], 2);
        assert_eq!(v["witness_order"], serde_json::Value::Null);
    }
}
