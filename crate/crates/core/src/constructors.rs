//! Builders for the group families under study. Every family is realized as
//! a structured element set with an explicit multiplication law (pairs,
//! tuples, matrices, permutations) — no presentation solving — and every
//! output passes the table construction checks.

use crate::group::{ElementSet, GroupTable};
use crate::numberth;
use crate::structure::center;
use crate::{Bounds, Error, Result};
use serde::Serialize;

/// Extraspecial type selector: for odd p, exponent p (+) or p² (−); for
/// p = 2, the central-product decomposition with all-D8 factors (+) or one
/// Q8 factor (−).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Groups on pairs (i mod m_ord, j mod p_ord) with
/// (i,j)·(i',j') = (i + mult[j]·i', j + j'), index = i·p_ord + j.
/// Requires mult[j] = mult[1]^j and mult to wrap around at p_ord.
#[allow(clippy::needless_range_loop)]
fn pair_group(m_ord: usize, p_ord: usize, mult: &[usize], bounds: &Bounds) -> Result<GroupTable> {
    let n = m_ord
        .checked_mul(p_ord)
        .ok_or_else(|| Error::domain("order overflow"))?;
    if n > bounds.closure_limit {
        return Err(Error::SizeLimit {
            what: "group construction",
            size: n,
            limit: bounds.closure_limit,
        });
    }
    let mut mul = vec![0u16; n * n];
    for i in 0..m_ord {
        for j in 0..p_ord {
            let a = i * p_ord + j;
            for i2 in 0..m_ord {
                let step = (mult[j] * i2) % m_ord;
                for j2 in 0..p_ord {
                    let b = i2 * p_ord + j2;
                    let ii = (i + step) % m_ord;
                    let jj = if j + j2 >= p_ord { j + j2 - p_ord } else { j + j2 };
                    mul[a * n + b] = (ii * p_ord + jj) as u16;
                }
            }
        }
    }
    GroupTable::from_flat(n, mul, bounds)
}

pub fn cyclic(n: u64, bounds: &Bounds) -> Result<GroupTable> {
    if n < 1 {
        return Err(Error::domain("cyclic group order must be positive"));
    }
    pair_group(n as usize, 1, &[1], bounds)
}

pub fn elementary_abelian(p: u64, k: u32, bounds: &Bounds) -> Result<GroupTable> {
    if !numberth::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if k < 1 {
        return Err(Error::domain("rank must be positive"));
    }
    let n = (p as usize)
        .checked_pow(k)
        .filter(|&n| n <= bounds.closure_limit)
        .ok_or(Error::SizeLimit {
            what: "group construction",
            size: usize::MAX,
            limit: bounds.closure_limit,
        })?;
    let p = p as usize;
    let k = k as usize;
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let (mut x, mut y, mut out, mut place) = (a, b, 0usize, 1usize);
            for _ in 0..k {
                out += (x % p + y % p) % p * place;
                x /= p;
                y /= p;
                place *= p;
            }
            mul[a * n + b] = out as u16;
        }
    }
    GroupTable::from_flat(n, mul, bounds)
}

pub fn direct_product(a: &GroupTable, b: &GroupTable, bounds: &Bounds) -> Result<GroupTable> {
    let n = a
        .order()
        .checked_mul(b.order())
        .filter(|&n| n <= bounds.closure_limit)
        .ok_or(Error::SizeLimit {
            what: "direct product",
            size: usize::MAX,
            limit: bounds.closure_limit,
        })?;
    let bo = b.order();
    let mut mul = vec![0u16; n * n];
    for i in 0..a.order() {
        for j in 0..bo {
            let x = i * bo + j;
            for i2 in 0..a.order() {
                let ai = a.mul(i, i2) * bo;
                for j2 in 0..bo {
                    mul[x * n + i2 * bo + j2] = (ai + b.mul(j, j2)) as u16;
                }
            }
        }
    }
    GroupTable::from_flat(n, mul, bounds)
}

pub fn direct_power(s: &GroupTable, t: u32, bounds: &Bounds) -> Result<GroupTable> {
    if t < 1 {
        return Err(Error::domain("power must be positive"));
    }
    let mut acc = s.clone();
    for _ in 1..t {
        acc = direct_product(&acc, s, bounds)?;
    }
    Ok(acc)
}

/// Dihedral group of the given (even) order, on pairs (rotation, flip).
/// The rotation x sits at index 2 and the reflection y at index 1.
pub fn dihedral(order: u64, bounds: &Bounds) -> Result<GroupTable> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "dihedral order must be even and at least 4, got {order}"
        )));
    }
    let half = (order / 2) as usize;
    pair_group(half, 2, &[1, half - 1], bounds)
}

/// Dicyclic group of order 4n: ⟨a,b | a^{2n} = 1, b² = aⁿ, bab⁻¹ = a⁻¹⟩ on
/// pairs (i mod 2n, j ∈ {0,1}), index 2i + j; a is index 2, b is index 1.
pub fn dicyclic(n: u64, bounds: &Bounds) -> Result<GroupTable> {
    if n < 1 {
        return Err(Error::domain("dicyclic parameter must be positive"));
    }
    let n = n as usize;
    let two_n = 2 * n;
    let order = 4 * n;
    if order > bounds.closure_limit {
        return Err(Error::SizeLimit {
            what: "group construction",
            size: order,
            limit: bounds.closure_limit,
        });
    }
    let mut mul = vec![0u16; order * order];
    for i in 0..two_n {
        for j in 0..2usize {
            let x = i * 2 + j;
            for i2 in 0..two_n {
                for j2 in 0..2usize {
                    let y = i2 * 2 + j2;
                    let mut ii = if j == 0 {
                        (i + i2) % two_n
                    } else {
                        (i + two_n - i2) % two_n
                    };
                    if j == 1 && j2 == 1 {
                        ii = (ii + n) % two_n;
                    }
                    mul[x * order + y] = (ii * 2 + (j ^ j2)) as u16;
                }
            }
        }
    }
    GroupTable::from_flat(order, mul, bounds)
}

/// Generalized quaternion group of 2-power order ≥ 8.
pub fn quaternion(order: u64, bounds: &Bounds) -> Result<GroupTable> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::domain(format!(
            "quaternion order must be a power of two, at least 8, got {order}"
        )));
    }
    dicyclic(order / 4, bounds)
}

/// Semidihedral group of 2-power order ≥ 16:
/// ⟨r,s | r^{2^{n-1}} = s² = 1, srs = r^{2^{n-2}-1}⟩, with r at index 2 and
/// s at index 1 in the (i,j) → 2i+j pair encoding.
pub fn semidihedral(order: u64, bounds: &Bounds) -> Result<GroupTable> {
    if order < 16 || !order.is_power_of_two() {
        return Err(Error::domain(format!(
            "semidihedral order must be a power of two, at least 16, got {order}"
        )));
    }
    let half = (order / 2) as usize;
    let t = (order / 4 - 1) as usize;
    pair_group(half, 2, &[1, t], bounds)
}

/// Heisenberg-type construction: odd-p extraspecial of exponent p and order
/// p^{1+2n}, on tuples (a⃗, b⃗, c) over the field with p elements with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b').
fn heisenberg(p: usize, nfac: usize, bounds: &Bounds) -> Result<GroupTable> {
    let dims = 2 * nfac + 1;
    let mut order = 1usize;
    for _ in 0..dims {
        order = order
            .checked_mul(p)
            .filter(|&n| n <= bounds.closure_limit)
            .ok_or(Error::SizeLimit {
                what: "group construction",
                size: usize::MAX,
                limit: bounds.closure_limit,
            })?;
    }
    let digits = |mut r: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(dims);
        for _ in 0..dims {
            v.push(r % p);
            r /= p;
        }
        v
    };
    let mut mul = vec![0u16; order * order];
    for x in 0..order {
        let vx = digits(x);
        for y in 0..order {
            let vy = digits(y);
            let mut out = 0usize;
            let mut place = 1usize;
            let mut dot = 0usize;
            for i in 0..nfac {
                dot += vx[i] * vy[nfac + i];
            }
            for i in 0..dims {
                let extra = if i == dims - 1 { dot } else { 0 };
                out += (vx[i] + vy[i] + extra) % p * place;
                place *= p;
            }
            mul[x * order + y] = out as u16;
        }
    }
    GroupTable::from_flat(order, mul, bounds)
}

/// Odd-p extraspecial p³ of exponent p²: C_{p²} ⋊ C_p with the generator of
/// C_p acting as x ↦ x^{1+p}.
fn extraspecial_p3_minus(p: usize, bounds: &Bounds) -> Result<GroupTable> {
    let psq = p * p;
    let mut mult = Vec::with_capacity(p);
    let mut m = 1usize;
    for _ in 0..p {
        mult.push(m);
        m = m * (1 + p) % psq;
    }
    pair_group(psq, p, &mult, bounds)
}

/// Extraspecial group of order p^{1+2n}. For odd p, sign selects exponent p
/// or p²; for p = 2, sign + is the iterated central product of n copies of
/// D8 and sign − replaces one factor by Q8.
pub fn extraspecial(p: u64, n: u32, sign: Sign, bounds: &Bounds) -> Result<GroupTable> {
    if !numberth::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if n < 1 {
        return Err(Error::domain("extraspecial parameter n must be positive"));
    }
    let pu = p as usize;
    if p == 2 {
        let mut acc = match sign {
            Sign::Plus => dihedral(8, bounds)?,
            Sign::Minus => quaternion(8, bounds)?,
        };
        for _ in 1..n {
            let d8 = dihedral(8, bounds)?;
            acc = central_product_cyclic_centers(&acc, &d8, bounds)?;
        }
        Ok(acc)
    } else {
        match sign {
            Sign::Plus => heisenberg(pu, n as usize, bounds),
            Sign::Minus => {
                let mut acc = extraspecial_p3_minus(pu, bounds)?;
                if n > 1 {
                    let rest = heisenberg(pu, n as usize - 1, bounds)?;
                    acc = central_product_cyclic_centers(&acc, &rest, bounds)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Central product identifying Z(A) with the unique subgroup of the same
/// order inside Z(B); both centers must be cyclic and |Z(A)| must divide
/// |Z(B)|. Pairing matches canonical generator powers.
pub fn central_product_cyclic_centers(
    a: &GroupTable,
    b: &GroupTable,
    bounds: &Bounds,
) -> Result<GroupTable> {
    let za = center(a);
    let zb = center(b);
    let ga = za
        .iter()
        .find(|&x| a.elt_order(x) == za.len())
        .ok_or_else(|| Error::domain("Z(A) is not cyclic"))?;
    let gb_full = zb
        .iter()
        .find(|&x| b.elt_order(x) == zb.len())
        .ok_or_else(|| Error::domain("Z(B) is not cyclic"))?;
    if !zb.len().is_multiple_of(za.len()) {
        return Err(Error::domain(format!(
            "|Z(A)| = {} does not divide |Z(B)| = {}",
            za.len(),
            zb.len()
        )));
    }
    let gb = b.pow(gb_full, zb.len() / za.len());
    let target = b.generated_subgroup(&[gb]);
    let mut pairing = Vec::with_capacity(za.len());
    let (mut xa, mut xb) = (0usize, 0usize);
    for _ in 0..za.len() {
        pairing.push((xa, xb));
        xa = a.mul(xa, ga);
        xb = b.mul(xb, gb);
    }
    central_product(a, b, &za, &target, &pairing, bounds)
}

/// External central product (A×B)/N with N = {(g, θ(g)) : g ∈ zA}, where θ
/// is the supplied pairing isomorphism zA → zB.
pub fn central_product(
    a: &GroupTable,
    b: &GroupTable,
    za: &ElementSet,
    zb: &ElementSet,
    pairing: &[(usize, usize)],
    bounds: &Bounds,
) -> Result<GroupTable> {
    let ca = center(a);
    let cb = center(b);
    if !za.is_subgroup(a) || !za.is_subset(&ca) {
        return Err(Error::domain("zA is not a central subgroup of A"));
    }
    if !zb.is_subgroup(b) || !zb.is_subset(&cb) {
        return Err(Error::domain("zB is not a central subgroup of B"));
    }
    if pairing.len() != za.len() || za.len() != zb.len() {
        return Err(Error::domain("pairing size mismatch"));
    }
    let mut theta = vec![usize::MAX; a.order()];
    let mut image_seen = ElementSet::empty(b.order());
    for &(x, y) in pairing {
        if !za.contains(x) || !zb.contains(y) || theta[x] != usize::MAX || !image_seen.insert(y) {
            return Err(Error::domain("pairing is not a bijection zA -> zB"));
        }
        theta[x] = y;
    }
    for x in za.iter() {
        for y in za.iter() {
            if theta[a.mul(x, y)] != b.mul(theta[x], theta[y]) {
                return Err(Error::domain("pairing is not an isomorphism"));
            }
        }
    }
    let product = direct_product(a, b, bounds)?;
    let n_elems: Vec<usize> = za.iter().map(|g| g * b.order() + theta[g]).collect();
    let nset = product.generated_subgroup(&n_elems);
    debug_assert_eq!(nset.len(), za.len());
    let (q, _) = product.quotient(&nset, bounds)?;
    Ok(q)
}

/// The named central product 2^{1+2n}_+ ∘ C4.
pub fn pauli(n: u32, bounds: &Bounds) -> Result<GroupTable> {
    let e = extraspecial(2, n, Sign::Plus, bounds)?;
    let c4 = cyclic(4, bounds)?;
    let ze = center(&e);
    let omega1 = c4.generated_subgroup(&[2]); // the order-2 subgroup of C4
    let ga = ze.iter().find(|&x| e.elt_order(x) == 2).unwrap();
    let pairing = vec![(0usize, 0usize), (ga, 2usize)];
    central_product(&e, &c4, &ze, &omega1, &pairing, bounds)
}

/// ⟨x,y | x^{mp} = y^p = 1, yxy⁻¹ = x^k⟩ on pairs (i mod mp, j mod p).
/// Rejects parameters under which the presentation would collapse; the
/// arithmetic CCS condition is deliberately NOT required.
pub fn metacyclic6(m: u64, p: u64, k: u64, bounds: &Bounds) -> Result<GroupTable> {
    let v = numberth::validate_vi(m, p, k);
    if !v.valid_presentation {
        return Err(Error::domain(format!(
            "invalid metacyclic parameters (m={m}, p={p}, k={k}): {}",
            v.reasons.join(", ")
        )));
    }
    let modulus = (m * p) as usize;
    let k = v.canonical_k as usize;
    let mut mult = Vec::with_capacity(p as usize);
    let mut cur = 1usize;
    for _ in 0..p {
        mult.push(cur);
        cur = cur * k % modulus;
    }
    pair_group(modulus, p as usize, &mult, bounds)
}

/// ⟨x,y | x^m = y^{p^α} = 1, yxy⁻¹ = x^k⟩ on pairs (i mod m, j mod p^α).
pub fn metacyclic7(m: u64, p: u64, alpha: u32, k: u64, bounds: &Bounds) -> Result<GroupTable> {
    let v = numberth::validate_vii(m, p, alpha, k);
    if !v.valid_presentation {
        return Err(Error::domain(format!(
            "invalid metacyclic parameters (m={m}, p={p}, alpha={alpha}, k={k}): {}",
            v.reasons.join(", ")
        )));
    }
    let pa = (p as usize).pow(alpha);
    let m = m as usize;
    let k = (v.canonical_k as usize) % m.max(1);
    let mut mult = Vec::with_capacity(pa);
    let mut cur = 1usize % m;
    for _ in 0..pa {
        mult.push(cur);
        cur = cur * k % m;
    }
    pair_group(m, pa, &mult, bounds)
}

/// SL(2,5): closure of [[1,1],[0,1]] and [[0,1],[-1,0]] over the field with
/// five elements. Order 120, unique involution −I.
pub fn sl25(bounds: &Bounds) -> Result<GroupTable> {
    type Mat = [u8; 4];
    fn mmul(x: Mat, y: Mat) -> Mat {
        let m = |i: usize| x[i] as u16;
        let n = |i: usize| y[i] as u16;
        [
            ((m(0) * n(0) + m(1) * n(2)) % 5) as u8,
            ((m(0) * n(1) + m(1) * n(3)) % 5) as u8,
            ((m(2) * n(0) + m(3) * n(2)) % 5) as u8,
            ((m(2) * n(1) + m(3) * n(3)) % 5) as u8,
        ]
    }
    let gens: [Mat; 2] = [[1, 1, 0, 1], [0, 1, 4, 0]];
    let ident: Mat = [1, 0, 0, 1];
    let mut index = std::collections::HashMap::new();
    let mut elems: Vec<Mat> = vec![ident];
    index.insert(ident, 0usize);
    let mut qi = 0;
    while qi < elems.len() {
        let cur = elems[qi];
        qi += 1;
        for g in gens {
            let next = mmul(cur, g);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(next) {
                e.insert(elems.len());
                elems.push(next);
            }
        }
    }
    let n = elems.len();
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = index[&mmul(elems[x], elems[y])] as u16;
        }
    }
    GroupTable::from_flat(n, mul, bounds)
}

/// A5 as the even permutations of five points, generated by a 5-cycle and a
/// 3-cycle.
pub fn a5(bounds: &Bounds) -> Result<GroupTable> {
    GroupTable::from_generators(5, &[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], bounds)
}

/// Parsed description of a group to build: a family tag with parameters,
/// possibly nested under direct products, powers, or central products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    ElemAb { p: u64, k: u32 },
    Dihedral { order: u64 },
    Dicyclic { n: u64 },
    Quaternion { order: u64 },
    Semidihedral { order: u64 },
    Extraspecial { p: u64, n: u32, sign: Sign },
    Pauli { n: u32 },
    Metacyclic6 { m: u64, p: u64, k: u64 },
    Metacyclic7 { m: u64, p: u64, alpha: u32, k: u64 },
    Sl25,
    A5,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    DirectPower(Box<GroupSpec>, u32),
    Central(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self, bounds: &Bounds) -> Result<GroupTable> {
        match self {
            GroupSpec::Cyclic(n) => cyclic(*n, bounds),
            GroupSpec::ElemAb { p, k } => elementary_abelian(*p, *k, bounds),
            GroupSpec::Dihedral { order } => dihedral(*order, bounds),
            GroupSpec::Dicyclic { n } => dicyclic(*n, bounds),
            GroupSpec::Quaternion { order } => quaternion(*order, bounds),
            GroupSpec::Semidihedral { order } => semidihedral(*order, bounds),
            GroupSpec::Extraspecial { p, n, sign } => extraspecial(*p, *n, *sign, bounds),
            GroupSpec::Pauli { n } => pauli(*n, bounds),
            GroupSpec::Metacyclic6 { m, p, k } => metacyclic6(*m, *p, *k, bounds),
            GroupSpec::Metacyclic7 { m, p, alpha, k } => metacyclic7(*m, *p, *alpha, *k, bounds),
            GroupSpec::Sl25 => sl25(bounds),
            GroupSpec::A5 => a5(bounds),
            GroupSpec::DirectProduct(a, b) => {
                let (ta, tb) = (a.build(bounds)?, b.build(bounds)?);
                direct_product(&ta, &tb, bounds)
            }
            GroupSpec::DirectPower(s, t) => {
                let ts = s.build(bounds)?;
                direct_power(&ts, *t, bounds)
            }
            GroupSpec::Central(a, b) => {
                let (ta, tb) = (a.build(bounds)?, b.build(bounds)?);
                central_product_cyclic_centers(&ta, &tb, bounds)
            }
        }
    }

    /// Canonical textual form, the inverse of the CLI parser.
    pub fn render(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("cyclic:{n}"),
            GroupSpec::ElemAb { p, k } => format!("elemab:{p}:{k}"),
            GroupSpec::Dihedral { order } => format!("dihedral:{order}"),
            GroupSpec::Dicyclic { n } => format!("dicyclic:{n}"),
            GroupSpec::Quaternion { order } => format!("quaternion:{order}"),
            GroupSpec::Semidihedral { order } => format!("semidihedral:{order}"),
            GroupSpec::Extraspecial { p, n, sign } => format!("extraspecial:{p}:{n}:{sign}"),
            GroupSpec::Pauli { n } => format!("pauli:{n}"),
            GroupSpec::Metacyclic6 { m, p, k } => format!("metacyclic6:{m}:{p}:{k}"),
            GroupSpec::Metacyclic7 { m, p, alpha, k } => {
                format!("metacyclic7:{m}:{p}:{alpha}:{k}")
            }
            GroupSpec::Sl25 => "sl25".into(),
            GroupSpec::A5 => "a5".into(),
            GroupSpec::DirectProduct(a, b) => format!("dp({},{})", a.render(), b.render()),
            GroupSpec::DirectPower(s, t) => format!("power({},{t})", s.render()),
            GroupSpec::Central(a, b) => format!("central({},{})", a.render(), b.render()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{
        self, center, derived_subgroup, frattini, is_cyclic, is_isomorphic, is_nilpotent,
        omega,
    };

    fn b() -> Bounds {
        Bounds::default()
    }

    fn order_census(g: &GroupTable, o: usize) -> usize {
        (0..g.order()).filter(|&x| g.elt_order(x) == o).count()
    }

    #[test]
    fn basic_family_orders() {
        assert_eq!(cyclic(1, &b()).unwrap().order(), 1);
        assert_eq!(elementary_abelian(2, 2, &b()).unwrap().order(), 4);
        assert_eq!(dihedral(8, &b()).unwrap().order(), 8);
        assert_eq!(dicyclic(3, &b()).unwrap().order(), 12);
        assert_eq!(quaternion(16, &b()).unwrap().order(), 16);
        assert_eq!(semidihedral(32, &b()).unwrap().order(), 32);
        assert_eq!(sl25(&b()).unwrap().order(), 120);
        assert_eq!(a5(&b()).unwrap().order(), 60);
    }

    #[test]
    fn klein_group_from_small_dihedral() {
        let d4 = dihedral(4, &b()).unwrap();
        assert!((1..4).all(|x| d4.elt_order(x) == 2));
    }

    #[test]
    fn elementary_abelian_has_exponent_p() {
        let e = elementary_abelian(2, 2, &b()).unwrap();
        assert!((1..4).all(|x| e.elt_order(x) == 2));
        let e = elementary_abelian(3, 2, &b()).unwrap();
        assert!((1..9).all(|x| e.elt_order(x) == 3));
    }

    #[test]
    fn dihedral_order_censuses() {
        let d8 = dihedral(8, &b()).unwrap();
        assert_eq!(order_census(&d8, 4), 2);
        let d12 = dihedral(12, &b()).unwrap();
        assert!(!is_nilpotent(&d12));
    }

    #[test]
    fn dihedral_derived_subgroup_is_rotation_squares() {
        for order in [8u64, 12, 16, 20, 24] {
            let d = dihedral(order, &b()).unwrap();
            let half = (order / 2) as usize;
            let der = derived_subgroup(&d);
            // <x^2> where x is the rotation at index 2
            let x2 = d.mul(2, 2);
            assert_eq!(der, d.generated_subgroup(&[x2]));
            assert_eq!(der.len(), half / crate::numberth::gcd(half as u64, 2) as usize);
        }
    }

    #[test]
    fn quaternion_unique_involution() {
        let q8 = quaternion(8, &b()).unwrap();
        assert_eq!(order_census(&q8, 2), 1);
        assert_eq!(order_census(&q8, 4), 6);
        let dic3 = dicyclic(3, &b()).unwrap();
        assert_eq!(order_census(&dic3, 2), 1);
        // b^2 = a^n is the unique involution
        let a_n = dic3.pow(2, 3);
        assert_eq!(dic3.mul(1, 1), a_n);
    }

    #[test]
    fn dicyclic_two_power_is_quaternion() {
        let dic4 = dicyclic(4, &b()).unwrap();
        let q16 = quaternion(16, &b()).unwrap();
        assert!(is_isomorphic(&dic4, &q16, &b()).unwrap());
    }

    #[test]
    fn semidihedral_has_one_cyclic_maximal() {
        let sd = semidihedral(16, &b()).unwrap();
        // exactly one subgroup of index 2 is cyclic
        let subs = structure::all_subgroups(&sd, &b()).unwrap();
        let cyclic_maximals = subs
            .iter()
            .filter(|s| s.len() == 8 && structure::is_cyclic_set(&sd, s))
            .count();
        assert_eq!(cyclic_maximals, 1);
        assert!(semidihedral(8, &b()).is_err());
    }

    #[test]
    fn extraspecial_invariants() {
        for (p, n, sign) in [
            (2, 1, Sign::Plus),
            (2, 1, Sign::Minus),
            (2, 2, Sign::Plus),
            (2, 2, Sign::Minus),
            (3, 1, Sign::Plus),
            (3, 1, Sign::Minus),
            (5, 1, Sign::Plus),
        ] {
            let g = extraspecial(p, n, sign, &b()).unwrap();
            let pu = p as usize;
            assert_eq!(g.order(), pu.pow(1 + 2 * n));
            assert_eq!(center(&g).len(), pu, "p={p} n={n} {sign}");
            assert_eq!(derived_subgroup(&g).len(), pu);
            assert_eq!(frattini(&g, &b()).unwrap().len(), pu);
        }
    }

    #[test]
    fn extraspecial_odd_exponents() {
        let plus = extraspecial(3, 1, Sign::Plus, &b()).unwrap();
        assert_eq!(plus.exponent(), 3);
        let minus = extraspecial(3, 1, Sign::Minus, &b()).unwrap();
        assert_eq!(minus.exponent(), 9);
        let om = omega(&minus, 1).unwrap();
        assert_eq!(om.len(), 9);
        assert!(!structure::is_cyclic_set(&minus, &om));
        let plus5 = extraspecial(5, 1, Sign::Plus, &b()).unwrap();
        assert_eq!(plus5.exponent(), 5);
    }

    #[test]
    fn extraspecial_two_signs_differ_by_involution_census() {
        let plus = extraspecial(2, 2, Sign::Plus, &b()).unwrap();
        let minus = extraspecial(2, 2, Sign::Minus, &b()).unwrap();
        assert_eq!(order_census(&plus, 2), 19);
        assert_eq!(order_census(&minus, 2), 11);
        assert!(!is_isomorphic(&plus, &minus, &b()).unwrap());
    }

    #[test]
    fn central_product_examples() {
        let d8 = dihedral(8, &b()).unwrap();
        let q8 = quaternion(8, &b()).unwrap();
        let c4 = cyclic(4, &b()).unwrap();
        let p1 = central_product_cyclic_centers(&d8, &c4, &b()).unwrap();
        assert_eq!(p1.order(), 16);
        let dd = central_product_cyclic_centers(&d8, &d8, &b()).unwrap();
        let qq = central_product_cyclic_centers(&q8, &q8, &b()).unwrap();
        assert!(is_isomorphic(&dd, &qq, &b()).unwrap());
    }

    #[test]
    fn central_product_rejects_bad_pairing() {
        let d8 = dihedral(8, &b()).unwrap();
        let c4 = cyclic(4, &b()).unwrap();
        let za = center(&d8);
        let zb = c4.generated_subgroup(&[2]);
        // maps both elements to the identity: not a bijection
        let bad = vec![(0usize, 0usize), (za.iter().nth(1).unwrap(), 0usize)];
        assert!(central_product(&d8, &c4, &za, &zb, &bad, &b()).is_err());
        // non-central subgroup on the A side
        let refl = d8.generated_subgroup(&[1]);
        let pair = vec![(0usize, 0usize), (1usize, 2usize)];
        assert!(central_product(&d8, &c4, &refl, &zb, &pair, &b()).is_err());
    }

    #[test]
    fn pauli_groups() {
        let p1 = pauli(1, &b()).unwrap();
        assert_eq!(p1.order(), 16);
        let z = center(&p1);
        assert_eq!(z.len(), 4);
        assert!(structure::is_cyclic_set(&p1, &z));
        let p2 = pauli(2, &b()).unwrap();
        assert_eq!(p2.order(), 64);
        assert_eq!(center(&p2).len(), 4);
    }

    #[test]
    fn metacyclic_examples() {
        let g21 = metacyclic7(7, 3, 1, 2, &b()).unwrap();
        assert_eq!(g21.order(), 21);
        let syl7 = structure::sylow_subgroup(&g21, 7);
        assert!(g21.is_normal(&syl7));

        let g63 = metacyclic6(7, 3, 4, &b()).unwrap();
        assert_eq!(g63.order(), 63);
        assert!((0..63).any(|x| g63.elt_order(x) == 21));

        // k = 1 gives the abelian direct product, cyclic since (m, p) = 1
        let ab = metacyclic7(7, 3, 2, 1, &b()).unwrap();
        assert!(is_cyclic(&ab));
        assert_eq!(ab.order(), 63);
    }

    #[test]
    fn metacyclic_rejects_collapsing_presentation() {
        assert!(metacyclic6(7, 3, 2, &b()).is_err()); // 2^3 ≢ 1 mod 21
        assert!(metacyclic6(6, 3, 4, &b()).is_err()); // gcd(m, p) != 1
        assert!(metacyclic7(15, 3, 1, 2, &b()).is_err()); // 3 divides 15
    }

    #[test]
    fn metacyclic_presented_orders() {
        // x = (1,0) at index p_ord, y = (0,1) at index 1
        let g = metacyclic6(7, 3, 4, &b()).unwrap();
        assert_eq!(g.elt_order(3), 21); // x has order mp
        assert_eq!(g.elt_order(1), 3); // y has order p
        let h = metacyclic7(7, 3, 2, 2, &b()).unwrap();
        assert_eq!(h.elt_order(9), 7); // x has order m
        assert_eq!(h.elt_order(1), 9); // y has order p^alpha
    }

    #[test]
    fn sl25_structure() {
        let s = sl25(&b()).unwrap();
        assert_eq!(s.order(), 120);
        assert_eq!(order_census(&s, 2), 1);
        assert!(structure::is_perfect(&s));
        let z = center(&s);
        assert_eq!(z.len(), 2);
        let (q, _) = s.quotient(&z, &b()).unwrap();
        let alt = a5(&b()).unwrap();
        assert!(is_isomorphic(&q, &alt, &b()).unwrap());
    }

    #[test]
    fn a5_is_simple() {
        let alt = a5(&b()).unwrap();
        assert_eq!(crate::aut::normal_subgroups(&alt, &b()).unwrap().len(), 2);
    }

    #[test]
    fn direct_power_order() {
        let alt = a5(&b()).unwrap();
        let sq = direct_power(&alt, 2, &b()).unwrap();
        assert_eq!(sq.order(), 3600);
    }

    #[test]
    fn spec_build_and_render_round_trip() {
        let spec = GroupSpec::DirectProduct(
            Box::new(GroupSpec::Dihedral { order: 8 }),
            Box::new(GroupSpec::Cyclic(3)),
        );
        assert_eq!(spec.render(), "dp(dihedral:8,cyclic:3)");
        assert_eq!(spec.build(&b()).unwrap().order(), 24);
        let es = GroupSpec::Extraspecial {
            p: 3,
            n: 1,
            sign: Sign::Minus,
        };
        assert_eq!(es.render(), "extraspecial:3:1:-");
        assert_eq!(es.build(&b()).unwrap().order(), 27);
    }
}
