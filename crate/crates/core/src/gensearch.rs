//! Backtracking search over generator images, shared by the automorphism
//! enumerator and the isomorphism test.
//!
//! A greedy generating tuple of the source group is fixed; candidate images
//! are filtered by (element order, conjugacy-class size); each candidate
//! prefix is extended through the closure of the generated prefix subgroup,
//! rejecting on the first multiplication inconsistency or image collision.
//! Checking the products x·g for every element x and tuple generator g is
//! sufficient: a map respecting those extends multiplicatively to all words.

use crate::group::GroupTable;
use std::ops::ControlFlow;

struct Level {
    /// (element, parent, gen index): element = parent * tuple[gen], first
    /// reached at this level. The first entry is always the level's own
    /// generator, (tuple[level], 0, level).
    defs: Vec<(u32, u32, u32)>,
    /// (element, gen index, product): a product falling back into the known
    /// set, to be verified against the image.
    rels: Vec<(u32, u32, u32)>,
}

pub(crate) struct Search<'a> {
    a: &'a GroupTable,
    b: &'a GroupTable,
    tuple: Vec<usize>,
    levels: Vec<Level>,
    cands: Vec<Vec<u16>>,
}

impl<'a> Search<'a> {
    pub fn new(a: &'a GroupTable, b: &'a GroupTable) -> Search<'a> {
        let n = a.order();
        let tuple: Vec<usize> = a.generators().iter().map(|&g| g as usize).collect();
        let t = tuple.len();
        let mut known = vec![false; n];
        known[0] = true;
        let mut known_list: Vec<u32> = vec![0];
        let mut handled = vec![false; n * t.max(1)];
        let mut levels = Vec::with_capacity(t);
        for i in 0..t {
            let mut defs = Vec::new();
            let mut qi = 0;
            while qi < known_list.len() {
                let x = known_list[qi] as usize;
                qi += 1;
                for j in 0..=i {
                    let y = a.mul(x, tuple[j]);
                    if !known[y] {
                        known[y] = true;
                        known_list.push(y as u32);
                        defs.push((y as u32, x as u32, j as u32));
                        handled[x * t + j] = true;
                    }
                }
            }
            debug_assert!(defs.first().is_none_or(|&(y, x, j)| {
                y as usize == tuple[i] && x == 0 && j as usize == i
            }));
            let mut rels = Vec::new();
            for &xu in &known_list {
                let x = xu as usize;
                for j in 0..=i {
                    if !handled[x * t + j] {
                        handled[x * t + j] = true;
                        rels.push((xu, j as u32, a.mul(x, tuple[j]) as u32));
                    }
                }
            }
            levels.push(Level { defs, rels });
        }
        // candidate images, filtered by (order, class size), ascending
        let ca = a.conj_classes();
        let cb = b.conj_classes();
        let cands = tuple
            .iter()
            .map(|&g| {
                let fp = (a.elt_order(g), ca.sizes[ca.class_of[g] as usize]);
                (0..b.order())
                    .filter(|&y| (b.elt_order(y), cb.sizes[cb.class_of[y] as usize]) == fp)
                    .map(|y| y as u16)
                    .collect()
            })
            .collect();
        Search {
            a,
            b,
            tuple,
            levels,
            cands,
        }
    }

    /// Runs the search, invoking `visit` on every completed bijective
    /// homomorphism (as a full image table). Returns true when the search
    /// space was exhausted, false when the visitor broke out early.
    pub fn run(&self, visit: &mut dyn FnMut(&[u16]) -> ControlFlow<()>) -> bool {
        let n = self.a.order();
        if self.b.order() != n {
            return true;
        }
        let mut phi = vec![u16::MAX; n];
        let mut used = vec![false; n];
        phi[0] = 0;
        used[0] = true;
        self.rec(0, &mut phi, &mut used, visit).is_continue()
    }

    fn rec(
        &self,
        level: usize,
        phi: &mut [u16],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[u16]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if level == self.tuple.len() {
            return visit(phi);
        }
        let lv = &self.levels[level];
        for &cand in &self.cands[level] {
            if used[cand as usize] {
                continue;
            }
            let mut assigned: Vec<u32> = Vec::with_capacity(lv.defs.len());
            let mut ok = true;
            for (idx, &(y, x, j)) in lv.defs.iter().enumerate() {
                let img = if idx == 0 {
                    cand as usize
                } else {
                    self.b.mul(
                        phi[x as usize] as usize,
                        phi[self.tuple[j as usize]] as usize,
                    )
                };
                if used[img] {
                    ok = false;
                    break;
                }
                phi[y as usize] = img as u16;
                used[img] = true;
                assigned.push(y);
            }
            if ok {
                for &(x, j, prod) in &lv.rels {
                    let img = self.b.mul(
                        phi[x as usize] as usize,
                        phi[self.tuple[j as usize]] as usize,
                    );
                    if phi[prod as usize] as usize != img {
                        ok = false;
                        break;
                    }
                }
            }
            let flow = if ok {
                self.rec(level + 1, phi, used, visit)
            } else {
                ControlFlow::Continue(())
            };
            for &y in assigned.iter().rev() {
                used[phi[y as usize] as usize] = false;
                phi[y as usize] = u16::MAX;
            }
            if flow.is_break() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }
}

/// First isomorphism found, as an image table indexed by elements of `a`.
pub(crate) fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<u16>> {
    let search = Search::new(a, b);
    let mut found: Option<Vec<u16>> = None;
    search.run(&mut |phi| {
        found = Some(phi.to_vec());
        ControlFlow::Break(())
    });
    found
}
