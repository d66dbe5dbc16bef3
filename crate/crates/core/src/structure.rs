//! Structural computations on group tables: center, derived series, Ω/℧,
//! Frattini and Fitting subgroups, solvability-style predicates, subgroup
//! enumeration, and table isomorphism.

use crate::group::{ElementSet, GroupTable};
use crate::{gensearch, Bounds, Error, Result};
use std::collections::HashSet;

/// Elements commuting with everything. Commuting with a generating set
/// suffices, which keeps this linear in the order.
pub fn center(g: &GroupTable) -> ElementSet {
    let gens: Vec<usize> = g.generators().iter().map(|&x| x as usize).collect();
    let mut s = ElementSet::empty(g.order());
    for z in 0..g.order() {
        if gens.iter().all(|&x| g.mul(z, x) == g.mul(x, z)) {
            s.insert(z);
        }
    }
    s
}

/// The commutator subgroup, computed as the normal closure of the pairwise
/// commutators of a generating set. Equal to the subgroup generated by all
/// commutators (cross-checked against that definition in the tests).
pub fn derived_subgroup(g: &GroupTable) -> ElementSet {
    let gens: Vec<usize> = g.generators().iter().map(|&x| x as usize).collect();
    let mut comms: Vec<usize> = Vec::new();
    for &x in &gens {
        for &y in &gens {
            comms.push(g.commutator(x, y));
        }
    }
    g.normal_closure(&comms)
}

/// Factors n as p^k, if it is a prime power with n > 1.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

pub fn prime_factors(n: usize) -> Vec<usize> {
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

fn require_p_group(g: &GroupTable) -> Result<usize> {
    prime_power(g.order())
        .map(|(p, _)| p)
        .ok_or_else(|| Error::domain(format!("order {} is not a prime power", g.order())))
}

/// Ω_i: subgroup generated by the elements of order dividing p^i.
pub fn omega(g: &GroupTable, i: u32) -> Result<ElementSet> {
    let p = require_p_group(g)?;
    let bound = (p as u64).pow(i);
    let seeds: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let o = g.elt_order(x) as u64;
            bound.is_multiple_of(o)
        })
        .collect();
    Ok(g.generated_subgroup(&seeds))
}

/// ℧_i: subgroup generated by the p^i-th powers.
pub fn agemo(g: &GroupTable, i: u32) -> Result<ElementSet> {
    let p = require_p_group(g)?;
    let e = (p as usize).pow(i);
    let seeds: Vec<usize> = (0..g.order()).map(|x| g.pow(x, e)).collect();
    Ok(g.generated_subgroup(&seeds))
}

pub fn is_cyclic(g: &GroupTable) -> bool {
    (0..g.order()).any(|x| g.elt_order(x) == g.order())
}

/// Cyclicity of a subgroup, read off the parent's element orders.
pub fn is_cyclic_set(g: &GroupTable, s: &ElementSet) -> bool {
    s.iter().any(|x| g.elt_order(x) == s.len())
}

pub fn is_abelian(g: &GroupTable) -> bool {
    center(g).len() == g.order()
}

/// Lower central series G = γ1 ≥ γ2 ≥ …, with γ_{i+1} = [γ_i, G].
pub fn lower_central_series(g: &GroupTable) -> Vec<ElementSet> {
    let gens: Vec<usize> = g.generators().iter().map(|&x| x as usize).collect();
    let mut series = vec![g.full_set()];
    loop {
        let cur = series.last().unwrap();
        let cur_gens = g.subgroup_generators(cur);
        let mut comms = Vec::new();
        for &x in &cur_gens {
            for &y in &gens {
                comms.push(g.commutator(x, y));
            }
        }
        let next = g.normal_closure(&comms);
        if next.len() == cur.len() {
            break;
        }
        series.push(next);
    }
    series
}

/// Number of steps for the lower central series to hit the identity, or
/// None when the series stabilizes above it.
pub fn nilpotency_class(g: &GroupTable) -> Option<usize> {
    let series = lower_central_series(g);
    if series.last().unwrap().len() == 1 {
        Some(series.len() - 1)
    } else {
        None
    }
}

pub fn is_nilpotent(g: &GroupTable) -> bool {
    nilpotency_class(g).is_some()
}

pub fn is_perfect(g: &GroupTable) -> bool {
    derived_subgroup(g).len() == g.order()
}

/// Supersolvability by backtracking: a chain 1 = G_0 ⊴ … ⊴ G_k = G where
/// every term is normal in G and each factor has prime order. Terms normal
/// in a quotient G/N correspond to terms normal in G containing N, so the
/// search recurses through quotients by prime-order normal subgroups.
pub fn is_supersolvable(g: &GroupTable, bounds: &Bounds) -> bool {
    if g.order() == 1 {
        return true;
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    for x in 1..g.order() {
        let o = g.elt_order(x);
        if prime_power(o) != Some((o, 1)) {
            continue;
        }
        let s = g.generated_subgroup(&[x]);
        if s.len() != o || !seen.insert(s.blocks().to_vec()) {
            continue;
        }
        if g.is_normal(&s) {
            let (q, _) = g
                .quotient(&s, bounds)
                .expect("normal subgroup quotient cannot fail");
            if is_supersolvable(&q, bounds) {
                return true;
            }
        }
    }
    false
}

/// Regularity of a p-group: for all g,h there is k in ⟨g,h⟩' with
/// g^p h^p = (gh)^p k^p. The witness k is searched only inside the derived
/// subgroup of ⟨g,h⟩.
pub fn is_regular_p_group(g: &GroupTable) -> Result<bool> {
    let p = require_p_group(g)?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if g.mul(a, b) == g.mul(b, a) {
                // abelian pair: k = identity works
                continue;
            }
            let h = g.generated_subgroup(&[a, b]);
            let der = derived_of_pair(g, &h, a, b);
            let lhs = g.mul(g.pow(a, p), g.pow(b, p));
            let abp = g.pow(g.mul(a, b), p);
            let ok = der.iter().any(|k| g.mul(abp, g.pow(k, p)) == lhs);
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Derived subgroup of the subgroup H = ⟨a,b⟩, computed inside the parent:
/// closure of the conjugation orbit (by a, b) of [a,b], inside H.
fn derived_of_pair(g: &GroupTable, h: &ElementSet, a: usize, b: usize) -> ElementSet {
    let mut orbit = vec![g.commutator(a, b)];
    let mut inorb = ElementSet::empty(g.order());
    inorb.insert(orbit[0]);
    let mut qi = 0;
    while qi < orbit.len() {
        let x = orbit[qi];
        qi += 1;
        for &c in &[a, b] {
            let y = g.conj(c, x);
            if inorb.insert(y) {
                orbit.push(y);
            }
        }
    }
    debug_assert!(orbit.iter().all(|&x| h.contains(x)));
    g.generated_subgroup(&orbit)
}

/// Every subgroup, exactly once, sorted by (size, bitset). Cyclic subgroups
/// are grown first, then pairwise joins are closed to a fixpoint.
pub fn all_subgroups(g: &GroupTable, bounds: &Bounds) -> Result<Vec<ElementSet>> {
    bounds.check_order("all_subgroups", g.order())?;
    let mut initial = vec![g.trivial_set()];
    for x in 1..g.order() {
        initial.push(g.generated_subgroup(&[x]));
    }
    Ok(join_closure(g, initial))
}

/// Fixpoint of pairwise joins, deduped by bitset. Every pair of distinct
/// incomparable subgroups eventually gets joined. Sorted by (size, bitset).
pub(crate) fn join_closure(g: &GroupTable, initial: Vec<ElementSet>) -> Vec<ElementSet> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut subs: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    for s in initial {
        if seen.insert(s.blocks().to_vec()) {
            let gens = g.subgroup_generators(&s);
            subs.push((s, gens));
        }
    }
    let mut work: Vec<usize> = (0..subs.len()).collect();
    while let Some(i) = work.pop() {
        let mut new_subs: Vec<(ElementSet, Vec<usize>)> = Vec::new();
        for j in 0..subs.len() {
            let (a, agens) = &subs[i];
            let (b, bgens) = &subs[j];
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let mut seeds: Vec<usize> = agens.clone();
            seeds.extend_from_slice(bgens);
            let join = g.generated_subgroup(&seeds);
            if seen.insert(join.blocks().to_vec()) {
                let gens = g.subgroup_generators(&join);
                new_subs.push((join, gens));
            }
        }
        for ns in new_subs {
            subs.push(ns);
            work.push(subs.len() - 1);
        }
    }
    let mut out: Vec<ElementSet> = subs.into_iter().map(|(s, _)| s).collect();
    out.sort_by_key(|a| a.sort_key());
    out
}

/// Intersection of all maximal subgroups.
pub fn frattini(g: &GroupTable, bounds: &Bounds) -> Result<ElementSet> {
    let subs = all_subgroups(g, bounds)?;
    let proper: Vec<&ElementSet> = subs.iter().filter(|s| s.len() < g.order()).collect();
    let mut phi = g.full_set();
    for s in &proper {
        let maximal = !proper
            .iter()
            .any(|t| s.len() < t.len() && s.is_subset(t));
        if maximal {
            phi = phi.intersection(s);
        }
    }
    Ok(phi)
}

/// The unique largest nilpotent normal subgroup (join of all of them).
pub fn fitting(g: &GroupTable, bounds: &Bounds) -> Result<ElementSet> {
    let normals = crate::aut::normal_subgroups(g, bounds)?;
    let mut seeds: Vec<usize> = Vec::new();
    for n in &normals {
        let (t, _) = g.subgroup_table(n, bounds)?;
        if is_nilpotent(&t) {
            seeds.extend(g.subgroup_generators(n));
        }
    }
    let f = g.generated_subgroup(&seeds);
    debug_assert!({
        let (t, _) = g.subgroup_table(&f, bounds)?;
        is_nilpotent(&t)
    });
    Ok(f)
}

/// True when no subgroup lies strictly between `s` and the whole group.
pub fn is_maximal_subgroup(g: &GroupTable, s: &ElementSet) -> bool {
    if s.len() == g.order() {
        return false;
    }
    let base = g.subgroup_generators(s);
    for x in 0..g.order() {
        if s.contains(x) {
            continue;
        }
        let mut seeds = base.clone();
        seeds.push(x);
        if g.generated_subgroup(&seeds).len() != g.order() {
            return false;
        }
    }
    true
}

/// One Sylow p-subgroup, grown through normalizers.
pub fn sylow_subgroup(g: &GroupTable, p: usize) -> ElementSet {
    let mut ppart = 1usize;
    while g.order().is_multiple_of(ppart * p) {
        ppart *= p;
    }
    let mut s = g.trivial_set();
    while s.len() < ppart {
        // an element outside S normalizing S whose p-th power falls in S
        let mut extended = false;
        for y in 0..g.order() {
            if s.contains(y) || !s.contains(g.pow(y, p)) {
                continue;
            }
            if s.iter().all(|x| s.contains(g.conj(y, x))) {
                let mut seeds = g.subgroup_generators(&s);
                // strip y to its p-part so the extension stays a p-group
                let o = g.elt_order(y);
                let mut m = o;
                while m.is_multiple_of(p) {
                    m /= p;
                }
                let z = g.pow(y, m);
                debug_assert!(!s.contains(z));
                seeds.push(z);
                s = g.generated_subgroup(&seeds);
                extended = true;
                break;
            }
        }
        assert!(extended, "Sylow growth stalled; table is not a group");
    }
    s
}

/// Table isomorphism via generating-tuple image search.
pub fn is_isomorphic(a: &GroupTable, b: &GroupTable, bounds: &Bounds) -> Result<bool> {
    bounds.check_order("is_isomorphic", a.order().max(b.order()))?;
    if a.order() != b.order() {
        return Ok(false);
    }
    let mut oa: Vec<usize> = (0..a.order()).map(|x| a.elt_order(x)).collect();
    let mut ob: Vec<usize> = (0..b.order()).map(|x| b.elt_order(x)).collect();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return Ok(false);
    }
    Ok(gensearch::find_isomorphism(a, b).is_some())
}
