//! Finite groups as explicit multiplication tables, and subgroup handles.

use crate::{Bounds, Error, Result};
use std::sync::OnceLock;

/// A finite group of order `n` on element indices `0..n`, with the identity
/// fixed at index 0. The multiplication table is stored row-major; inverses
/// and element orders are computed at construction.
///
/// Tables are immutable once built and safe to share across threads; the only
/// interior state is a lazily computed conjugacy-class cache.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elt_order: Vec<u16>,
    gens: Vec<u16>,
    classes: OnceLock<ConjClasses>,
}

#[derive(Debug, Clone)]
pub(crate) struct ConjClasses {
    pub class_of: Vec<u32>,
    pub sizes: Vec<u32>,
    pub members: Vec<Vec<u32>>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}
impl Eq for GroupTable {}

impl GroupTable {
    /// Builds a table from explicit rows, checking the group axioms.
    ///
    /// Identity/inverse/latin-square checks always run; associativity is
    /// checked exhaustively only for orders up to `assoc_check` (the cubic
    /// cost is prohibitive above that, and the structured constructors are
    /// correct by construction).
    pub fn from_mul_table(rows: Vec<Vec<u16>>, bounds: &Bounds) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        if n > bounds.closure_limit {
            return Err(Error::SizeLimit {
                what: "group table construction",
                size: n,
                limit: bounds.closure_limit,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!("row {i} has length {}", row.len())));
            }
            for &v in row {
                if (v as usize) >= n {
                    return Err(Error::BadTable(format!("entry {v} out of range in row {i}")));
                }
            }
            mul.extend_from_slice(row);
        }
        Self::from_flat(n, mul, bounds)
    }

    pub(crate) fn from_flat(n: usize, mul: Vec<u16>, bounds: &Bounds) -> Result<GroupTable> {
        debug_assert_eq!(mul.len(), n * n);
        // identity law at index 0
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::BadTable(format!("index 0 is not an identity at {x}")));
            }
        }
        // latin square rows/columns
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                let v = mul[x * n + y] as usize;
                if seen[v] {
                    return Err(Error::BadTable(format!("row {x} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }
        for y in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = mul[x * n + y] as usize;
                if seen[v] {
                    return Err(Error::BadTable(format!("column {y} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }
        // inverses
        let mut inv = vec![0u16; n];
        for x in 0..n {
            let mut found = false;
            for y in 0..n {
                if mul[x * n + y] == 0 {
                    inv[x] = y as u16;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::BadTable(format!("no inverse for {x}")));
            }
        }
        for x in 0..n {
            if mul[inv[x] as usize * n + x] != 0 {
                return Err(Error::BadTable(format!("one-sided inverse at {x}")));
            }
        }
        if n <= bounds.assoc_check {
            for x in 0..n {
                for y in 0..n {
                    let xy = mul[x * n + y] as usize;
                    for z in 0..n {
                        if mul[xy * n + z] != mul[x * n + mul[y * n + z] as usize] {
                            return Err(Error::BadTable(format!(
                                "associativity fails at ({x},{y},{z})"
                            )));
                        }
                    }
                }
            }
        }
        let mut elt_order = vec![0u16; n];
        for x in 0..n {
            let mut k = 1u32;
            let mut y = x;
            while y != 0 {
                y = mul[y * n + x] as usize;
                k += 1;
            }
            elt_order[x] = k as u16;
        }
        let mut table = GroupTable {
            order: n,
            mul,
            inv,
            elt_order,
            gens: Vec::new(),
            classes: OnceLock::new(),
        };
        table.gens = table.greedy_generators();
        Ok(table)
    }

    /// Closure of a set of permutations of `0..degree` under composition.
    ///
    /// Element 0 of the result is the identity permutation; the rest appear
    /// in breadth-first order, so numbering is deterministic.
    pub fn from_generators(degree: usize, perms: &[Vec<usize>], bounds: &Bounds) -> Result<GroupTable> {
        for (i, p) in perms.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree {
                return Err(Error::domain(format!(
                    "permutation {i} has length {} but degree is {degree}",
                    p.len()
                )));
            }
            for &v in p {
                if v >= degree || seen[v] {
                    return Err(Error::domain(format!("permutation {i} is not a bijection")));
                }
                seen[v] = true;
            }
        }
        let ident: Vec<usize> = (0..degree).collect();
        let mut index = std::collections::HashMap::new();
        let mut elems: Vec<Vec<usize>> = vec![ident.clone()];
        index.insert(ident, 0usize);
        let mut qi = 0;
        while qi < elems.len() {
            let cur = elems[qi].clone();
            qi += 1;
            for g in perms {
                // right action: (cur * g)(i) = g(cur(i))
                let next: Vec<usize> = (0..degree).map(|i| g[cur[i]]).collect();
                if !index.contains_key(&next) {
                    if elems.len() >= bounds.closure_limit {
                        return Err(Error::SizeLimit {
                            what: "permutation closure",
                            size: elems.len() + 1,
                            limit: bounds.closure_limit,
                        });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
        }
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let pb = &elems[b];
                let pa = &elems[a];
                let prod: Vec<usize> = (0..degree).map(|i| pb[pa[i]]).collect();
                mul[a * n + b] = index[&prod] as u16;
            }
        }
        Self::from_flat(n, mul, bounds)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    /// g x g^{-1}
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// x^{-1} y^{-1} x y
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for x in 0..self.order {
            let o = self.elt_order(x) as u64;
            e = e / gcd_u64(e, o) * o;
        }
        e
    }

    /// A small generating set, grown greedily by lowest index. Deterministic.
    pub fn generators(&self) -> &[u16] {
        &self.gens
    }

    fn greedy_generators(&self) -> Vec<u16> {
        let mut gens: Vec<u16> = Vec::new();
        let mut cur = self.generated_subgroup(&[]);
        while cur.len() < self.order {
            let g = (0..self.order).find(|&x| !cur.contains(x)).unwrap();
            gens.push(g as u16);
            let seeds: Vec<usize> = gens.iter().map(|&x| x as usize).collect();
            cur = self.generated_subgroup(&seeds);
        }
        gens
    }

    /// Smallest subgroup containing `seeds`: breadth-first closure from the
    /// identity under right multiplication by the seeds.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        set.insert(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Smallest normal subgroup of the whole group containing `seeds`:
    /// the subgroup generated by the conjugation orbit of the seeds.
    pub fn normal_closure(&self, seeds: &[usize]) -> ElementSet {
        let mut inorb = vec![false; self.order];
        let mut orbit: Vec<usize> = Vec::new();
        for &s in seeds {
            if !inorb[s] {
                inorb[s] = true;
                orbit.push(s);
            }
        }
        let gens: Vec<usize> = self.gens.iter().map(|&g| g as usize).collect();
        let mut qi = 0;
        while qi < orbit.len() {
            let x = orbit[qi];
            qi += 1;
            for &g in &gens {
                let c = self.conj(g, x);
                if !inorb[c] {
                    inorb[c] = true;
                    orbit.push(c);
                }
            }
        }
        self.generated_subgroup(&orbit)
    }

    /// Greedy small generating set of a subgroup (lowest-index tie-break).
    pub fn subgroup_generators(&self, s: &ElementSet) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut cur = self.generated_subgroup(&[]);
        while cur.len() < s.len() {
            let g = s.iter().find(|&x| !cur.contains(x)).unwrap();
            gens.push(g);
            cur = self.generated_subgroup(&gens);
        }
        gens
    }

    pub(crate) fn conj_classes(&self) -> &ConjClasses {
        self.classes.get_or_init(|| {
            let n = self.order;
            let mut class_of = vec![u32::MAX; n];
            let mut members: Vec<Vec<u32>> = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let ci = members.len() as u32;
                let mut orbit = Vec::new();
                for g in 0..n {
                    let y = self.conj(g, x);
                    if class_of[y] == u32::MAX {
                        class_of[y] = ci;
                        orbit.push(y as u32);
                    }
                }
                orbit.sort_unstable();
                members.push(orbit);
            }
            let sizes = members.iter().map(|m| m.len() as u32).collect();
            ConjClasses {
                class_of,
                sizes,
                members,
            }
        })
    }

    /// Quotient by a normal subgroup, plus the coset map (element -> coset).
    ///
    /// Cosets are numbered by their least element, so the identity coset is 0.
    pub fn quotient(&self, n: &ElementSet, bounds: &Bounds) -> Result<(GroupTable, Vec<u16>)> {
        if n.parent_order() != self.order {
            return Err(Error::domain("subgroup belongs to a different group"));
        }
        if !n.is_subgroup(self) {
            return Err(Error::domain("not a subgroup"));
        }
        if !self.is_normal(n) {
            return Err(Error::domain("subgroup is not normal"));
        }
        let mut coset_of = vec![u16::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..self.order {
            if coset_of[x] == u16::MAX {
                let c = reps.len() as u16;
                reps.push(x);
                for h in n.iter() {
                    coset_of[self.mul(x, h)] = c;
                }
            }
        }
        let k = reps.len();
        let mut mul = vec![0u16; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = coset_of[self.mul(reps[a], reps[b])];
            }
        }
        let q = GroupTable::from_flat(k, mul, bounds)?;
        Ok((q, coset_of))
    }

    /// Reindexes a subgroup as a standalone table. Returns the table and the
    /// embedding (new index -> parent index). The identity stays at 0.
    pub fn subgroup_table(&self, s: &ElementSet, bounds: &Bounds) -> Result<(GroupTable, Vec<usize>)> {
        if !s.is_subgroup(self) {
            return Err(Error::domain("not a subgroup"));
        }
        let elems: Vec<usize> = s.iter().collect();
        let mut pos = vec![u16::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i as u16;
        }
        let k = elems.len();
        let mut mul = vec![0u16; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = pos[self.mul(elems[a], elems[b])];
            }
        }
        let t = GroupTable::from_flat(k, mul, bounds)?;
        Ok((t, elems))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        let gens: Vec<usize> = self.gens.iter().map(|&g| g as usize).collect();
        for x in s.iter() {
            for &g in &gens {
                if !s.contains(self.conj(g, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// The whole group as an ElementSet.
    pub fn full_set(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        for x in 0..self.order {
            s.insert(x);
        }
        s
    }

    pub fn trivial_set(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        s.insert(0);
        s
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A subgroup handle: a bitset of element indices of some parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<u64>,
    parent_order: usize,
    len: usize,
}

impl ElementSet {
    pub fn empty(parent_order: usize) -> ElementSet {
        ElementSet {
            bits: vec![0u64; parent_order.div_ceil(64)],
            parent_order,
            len: 0,
        }
    }

    pub fn from_indices(parent_order: usize, indices: &[usize]) -> ElementSet {
        let mut s = ElementSet::empty(parent_order);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.bits[i >> 6] & (1u64 << (i & 63)) != 0
    }

    /// Inserts and reports whether the element was new.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.parent_order);
        let w = &mut self.bits[i >> 6];
        let m = 1u64 << (i & 63);
        if *w & m == 0 {
            *w |= m;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a | b)
            .collect();
        let len = bits.iter().map(|w| w.count_ones() as usize).sum();
        ElementSet {
            bits,
            parent_order: self.parent_order,
            len,
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let len = bits.iter().map(|w| w.count_ones() as usize).sum();
        ElementSet {
            bits,
            parent_order: self.parent_order,
            len,
        }
    }

    /// Image under an index permutation.
    pub fn map_through(&self, phi: &[u16]) -> ElementSet {
        let mut out = ElementSet::empty(self.parent_order);
        for x in self.iter() {
            out.insert(phi[x] as usize);
        }
        out
    }

    /// Dedicated closure check: contains the identity and is closed under
    /// multiplication and inverses.
    pub fn is_subgroup(&self, g: &GroupTable) -> bool {
        if self.parent_order != g.order() || !self.contains(0) {
            return false;
        }
        let elems: Vec<usize> = self.iter().collect();
        for &x in &elems {
            if !self.contains(g.inv(x)) {
                return false;
            }
            for &y in &elems {
                if !self.contains(g.mul(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical sort key: (size, raw bits).
    pub fn sort_key(&self) -> (usize, Vec<u64>) {
        (self.len, self.bits.clone())
    }

    pub(crate) fn blocks(&self) -> &[u64] {
        &self.bits
    }
}
