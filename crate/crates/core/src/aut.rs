//! Automorphisms, conjugacy classes, normal subgroups, characteristic
//! subgroups.

use crate::gensearch::Search;
use crate::group::{ElementSet, GroupTable};
use crate::{structure, Bounds, Error, Result};
use std::ops::ControlFlow;

/// Automorphisms of a group as permutations of element indices.
///
/// `complete` is true when `maps` is the whole automorphism group rather
/// than just a generating set.
#[derive(Debug, Clone)]
pub struct AutSet {
    pub maps: Vec<Vec<u16>>,
    pub complete: bool,
}

impl AutSet {
    /// Checks the stored maps: identity fixed, homomorphism law exhaustive,
    /// pairwise distinct, bijective.
    pub fn verify(&self, g: &GroupTable) -> bool {
        let n = g.order();
        for m in &self.maps {
            if m.len() != n || m[0] != 0 {
                return false;
            }
            let mut seen = vec![false; n];
            for &v in m {
                if (v as usize) >= n || seen[v as usize] {
                    return false;
                }
                seen[v as usize] = true;
            }
            for x in 0..n {
                for y in 0..n {
                    if m[g.mul(x, y)] != g.mul(m[x] as usize, m[y] as usize) as u16 {
                        return false;
                    }
                }
            }
        }
        let mut sorted: Vec<&Vec<u16>> = self.maps.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// Orbits of the conjugation action, ascending by least member; the class
/// of the identity comes first.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    g.conj_classes()
        .members
        .iter()
        .map(|c| c.iter().map(|&x| x as usize).collect())
        .collect()
}

/// The full automorphism group, materialized. Aborts with a size-limit
/// error beyond `max_aut` maps rather than silently degrading.
pub fn automorphisms(g: &GroupTable, bounds: &Bounds) -> Result<AutSet> {
    bounds.check_order("automorphisms", g.order())?;
    let search = Search::new(g, g);
    let mut maps: Vec<Vec<u16>> = Vec::new();
    let mut over_cap = false;
    search.run(&mut |phi| {
        if maps.len() >= bounds.max_aut {
            over_cap = true;
            return ControlFlow::Break(());
        }
        maps.push(phi.to_vec());
        ControlFlow::Continue(())
    });
    if over_cap {
        return Err(Error::SizeLimit {
            what: "automorphism enumeration",
            size: bounds.max_aut + 1,
            limit: bounds.max_aut,
        });
    }
    Ok(AutSet {
        maps,
        complete: true,
    })
}

/// Number of automorphisms, counted without materializing the maps.
pub fn automorphism_count(g: &GroupTable, bounds: &Bounds) -> Result<u64> {
    bounds.check_order("automorphisms", g.order())?;
    let search = Search::new(g, g);
    let mut count: u64 = 0;
    let exhausted = search.run(&mut |_| {
        count += 1;
        if count > bounds.max_aut as u64 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if !exhausted {
        return Err(Error::SizeLimit {
            what: "automorphism enumeration",
            size: count as usize,
            limit: bounds.max_aut,
        });
    }
    Ok(count)
}

/// Which of the given subgroups are fixed setwise by every automorphism.
///
/// Streams the automorphism search, dropping a candidate as soon as some
/// automorphism moves it, and stopping early once none survive. Exhausting
/// the search certifies the survivors; if the visit cap is hit while
/// candidates remain undetermined, a size-limit error is returned.
pub(crate) fn surviving_under_aut(
    g: &GroupTable,
    candidates: &[ElementSet],
    bounds: &Bounds,
) -> Result<Vec<bool>> {
    let mut alive: Vec<usize> = (0..candidates.len()).collect();
    if alive.is_empty() {
        return Ok(Vec::new());
    }
    let search = Search::new(g, g);
    let mut visits: u64 = 0;
    let mut capped = false;
    let exhausted = search.run(&mut |phi| {
        alive.retain(|&i| {
            candidates[i]
                .iter()
                .all(|x| candidates[i].contains(phi[x] as usize))
        });
        if alive.is_empty() {
            return ControlFlow::Break(());
        }
        visits += 1;
        if visits > bounds.max_aut as u64 {
            capped = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if capped && !alive.is_empty() {
        return Err(Error::SizeLimit {
            what: "automorphism enumeration",
            size: visits as usize,
            limit: bounds.max_aut,
        });
    }
    let _ = exhausted;
    let mut status = vec![false; candidates.len()];
    for i in alive {
        status[i] = true;
    }
    Ok(status)
}

/// Invariant fingerprint of a subgroup: (order, sorted element-order
/// multiset). Automorphisms permute the normal subgroups preserving this, so
/// a normal subgroup alone in its fingerprint class is characteristic.
pub(crate) fn subgroup_fingerprint(g: &GroupTable, s: &ElementSet) -> (usize, Vec<u16>) {
    let mut orders: Vec<u16> = s.iter().map(|x| g.elt_order(x) as u16).collect();
    orders.sort_unstable();
    (s.len(), orders)
}

/// For each candidate, whether it is certified characteristic by being the
/// unique normal subgroup with its fingerprint.
pub(crate) fn certified_characteristic(
    g: &GroupTable,
    candidates: &[ElementSet],
    normals: &[ElementSet],
) -> Vec<bool> {
    let fps: Vec<(usize, Vec<u16>)> = normals
        .iter()
        .map(|s| subgroup_fingerprint(g, s))
        .collect();
    candidates
        .iter()
        .map(|c| {
            let fp = subgroup_fingerprint(g, c);
            fps.iter().filter(|&other| *other == fp).count() == 1
        })
        .collect()
}

/// Exactly the normal subgroups: join-closure of the subgroups generated by
/// single conjugacy classes, plus the trivial subgroup. Sorted by
/// (size, bitset).
pub fn normal_subgroups(g: &GroupTable, bounds: &Bounds) -> Result<Vec<ElementSet>> {
    bounds.check_order("normal_subgroups", g.order())?;
    let classes = g.conj_classes();
    let mut atoms: Vec<ElementSet> = vec![g.trivial_set()];
    for c in &classes.members {
        let seeds: Vec<usize> = c.iter().map(|&x| x as usize).collect();
        atoms.push(g.generated_subgroup(&seeds));
    }
    let subs = structure::join_closure(g, atoms);
    debug_assert!(subs.iter().all(|s| g.is_normal(s)));
    Ok(subs)
}

/// All characteristic subgroups, including the trivial subgroup and the
/// whole group: the normal subgroups fixed setwise by every automorphism.
///
/// Candidates certified by fingerprint uniqueness skip the automorphism
/// search; the rest are streamed.
pub fn characteristic_subgroups(g: &GroupTable, bounds: &Bounds) -> Result<Vec<ElementSet>> {
    let normals = normal_subgroups(g, bounds)?;
    let candidates: Vec<ElementSet> = normals
        .iter()
        .filter(|s| s.len() > 1 && s.len() < g.order())
        .cloned()
        .collect();
    let certified = certified_characteristic(g, &candidates, &normals);
    let undetermined: Vec<ElementSet> = candidates
        .iter()
        .zip(&certified)
        .filter(|(_, &c)| !c)
        .map(|(s, _)| s.clone())
        .collect();
    let streamed = surviving_under_aut(g, &undetermined, bounds)?;
    let mut streamed_iter = streamed.into_iter();
    let mut out = vec![g.trivial_set()];
    for (s, cert) in candidates.into_iter().zip(certified) {
        // streamed results line up with the non-certified candidates only
        let keep = if cert { true } else { streamed_iter.next().unwrap() };
        if keep {
            out.push(s);
        }
    }
    if g.order() > 1 {
        out.push(g.full_set());
    }
    Ok(out)
}

/// True iff every automorphism fixes `s` setwise.
pub fn is_characteristic(g: &GroupTable, s: &ElementSet, bounds: &Bounds) -> Result<bool> {
    if !s.is_subgroup(g) {
        return Err(Error::domain("not a subgroup"));
    }
    if s.len() == 1 || s.len() == g.order() {
        return Ok(true);
    }
    if !g.is_normal(s) {
        // moved by an inner automorphism
        return Ok(false);
    }
    let normals = normal_subgroups(g, bounds)?;
    if certified_characteristic(g, std::slice::from_ref(s), &normals)[0] {
        return Ok(true);
    }
    let status = surviving_under_aut(g, std::slice::from_ref(s), bounds)?;
    Ok(status[0])
}
