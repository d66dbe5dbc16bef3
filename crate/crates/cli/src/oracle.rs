//! Independent oracles used by the verification suites: deliberately naive
//! recomputations that share no code path with the pruned implementations
//! they cross-check.

use ccs_core::{aut, structure, Bounds, ElementSet, GroupTable, Result};

/// Automorphisms by depth-first search over all identity-fixing bijections,
/// pruning only on partial homomorphism inconsistency. No generating-tuple
/// restriction, no order or class-size fingerprints.
pub fn automorphisms_naive(g: &GroupTable) -> Vec<Vec<u16>> {
    let n = g.order();
    // pairs to verify once index i is assigned: max(x, y, xy) == i
    let mut checks: Vec<Vec<(u16, u16, u16)>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            let p = g.mul(x, y);
            let level = x.max(y).max(p);
            checks[level].push((x as u16, y as u16, p as u16));
        }
    }
    let mut phi = vec![u16::MAX; n];
    let mut used = vec![false; n];
    phi[0] = 0;
    used[0] = true;
    let mut out = Vec::new();
    rec(g, 1, &checks, &mut phi, &mut used, &mut out);
    out
}

fn rec(
    g: &GroupTable,
    i: usize,
    checks: &[Vec<(u16, u16, u16)>],
    phi: &mut Vec<u16>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<u16>>,
) {
    let n = g.order();
    if i == n {
        out.push(phi.clone());
        return;
    }
    for c in 0..n {
        if used[c] {
            continue;
        }
        phi[i] = c as u16;
        used[c] = true;
        let consistent = checks[i].iter().all(|&(x, y, p)| {
            phi[p as usize] as usize == g.mul(phi[x as usize] as usize, phi[y as usize] as usize)
        });
        if consistent {
            rec(g, i + 1, checks, phi, used, out);
        }
        used[c] = false;
        phi[i] = u16::MAX;
    }
}

/// Normal subgroups as the conjugation-invariant members of the full
/// subgroup lattice — the second route for the join-closure enumeration.
pub fn normal_subgroups_by_filter(g: &GroupTable, bounds: &Bounds) -> Result<Vec<ElementSet>> {
    let subs = structure::all_subgroups(g, bounds)?;
    Ok(subs
        .into_iter()
        .filter(|s| {
            s.iter()
                .all(|x| (0..g.order()).all(|c| s.contains(g.conj(c, x))))
        })
        .collect())
}

/// The CCS definition applied directly: enumerate every subgroup, filter by
/// invariance under the materialized automorphism set, and test cyclicity of
/// the proper members. Independent of the streaming path in `ccs::is_ccs`.
pub fn is_ccs_definitional(g: &GroupTable, bounds: &Bounds) -> Result<bool> {
    if structure::is_cyclic(g) {
        return Ok(false);
    }
    let subs = structure::all_subgroups(g, bounds)?;
    let auts = aut::automorphisms(g, bounds)?;
    let char_subs: Vec<&ElementSet> = subs
        .iter()
        .filter(|s| {
            auts.maps
                .iter()
                .all(|m| s.iter().all(|x| s.contains(m[x] as usize)))
        })
        .collect();
    let proper_nontrivial: Vec<&&ElementSet> = char_subs
        .iter()
        .filter(|s| s.len() > 1 && s.len() < g.order())
        .collect();
    Ok(!proper_nontrivial.is_empty()
        && proper_nontrivial
            .iter()
            .all(|s| structure::is_cyclic_set(g, s)))
}
