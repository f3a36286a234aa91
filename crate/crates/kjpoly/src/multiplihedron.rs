//! The polytope family J^a(n) with the delta operator algebra, special
//! faces, embeddings, and the sweep decomposition.
//!
//! J^a(n) lives in the nonnegative orthant of R^n: prefix sums are bounded
//! by v_1 + ... + v_j <= j - 1 + a for j < n and the full sum equals
//! n - 1 + a. J^0(n) = K(n); J^1(n) is K(n+1) with the forced leading zero
//! dropped. The plain name J(n) means a = 1/2.

use crate::associahedron::KPoint;
use crate::ratgeom::{rat, Rat, RatVec};
use crate::{Error, HRep, Result};
use num_traits::{One, Zero};
use std::fmt;

/// A validated point of J^a(n).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JPoint {
    a: Rat,
    v: RatVec,
}

impl JPoint {
    pub fn new(a: Rat, v: RatVec) -> Result<Self> {
        if a < Rat::zero() || a > Rat::one() {
            return Err(Error::Domain(format!("parameter {a} outside [0, 1]")));
        }
        let n = v.len();
        if n == 0 {
            return Err(Error::Domain("J point needs at least one coordinate".into()));
        }
        for (i, c) in v.iter().enumerate() {
            if c < &Rat::zero() {
                return Err(Error::Domain(format!(
                    "coordinate {} of {} is negative",
                    i + 1,
                    v
                )));
            }
        }
        let prefixes = v.prefix_sums();
        for j in 1..n {
            if prefixes[j - 1] > rat(j as i64 - 1, 1) + &a {
                return Err(Error::Domain(format!(
                    "prefix sum {} at position {} exceeds {}",
                    prefixes[j - 1],
                    j,
                    rat(j as i64 - 1, 1) + &a
                )));
            }
        }
        if prefixes[n - 1] != rat(n as i64 - 1, 1) + &a {
            return Err(Error::Domain(format!(
                "total of {} is {}, expected {}",
                v,
                prefixes[n - 1],
                rat(n as i64 - 1, 1) + &a
            )));
        }
        Ok(JPoint { a, v })
    }

    /// The unique point (a) of J^a(1).
    pub fn single(a: Rat) -> Result<Self> {
        Self::new(a.clone(), RatVec(vec![a]))
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn param(&self) -> &Rat {
        &self.a
    }

    pub fn coords(&self) -> &RatVec {
        &self.v
    }

    pub fn into_coords(self) -> RatVec {
        self.v
    }
}

impl fmt::Display for JPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// Identifier of a boundary piece of J^a(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JFace {
    /// Image of J(r) x K(t) inserted at position j (r + t = n + 1, t >= 2).
    DeltaInsertion { j: usize, r: usize, t: usize },
    /// Image of K(t) x J(n_1) x ... x J(n_t), n_i summing to n, t >= 2.
    Graft { parts: Vec<usize> },
    /// v_j = 0 for 1 <= j < n.
    CoordZero { j: usize },
    /// Some prefix sum is tight: v_1 + ... + v_i = i - 1 + a, 1 <= i < n.
    SpecialZero,
    /// Delta insertion whose outer factor itself lies on the special face.
    DeltaInsertionZero { j: usize, r: usize, t: usize },
}

/// The defining halfspace system of J^a(n).
pub fn j_hrep(n: usize, a: &Rat) -> Result<HRep> {
    if n == 0 {
        return Err(Error::Domain("J(0) does not exist".into()));
    }
    if a < &Rat::zero() || a > &Rat::one() {
        return Err(Error::Domain(format!("parameter {a} outside [0, 1]")));
    }
    let mut h = HRep::new(n);
    for i in 0..n {
        let mut normal = RatVec::zeros(n);
        normal.0[i] = rat(-1, 1);
        h.push_ineq(normal, Rat::zero());
    }
    for j in 1..n {
        let mut normal = RatVec::zeros(n);
        for e in normal.0.iter_mut().take(j) {
            *e = rat(1, 1);
        }
        h.push_ineq(normal, rat(j as i64 - 1, 1) + a);
    }
    let total = RatVec(vec![rat(1, 1); n]);
    h.push_eq(total, rat(n as i64 - 1, 1) + a);
    Ok(h)
}

/// Embed J^a(n) into K(n+1): prepend 0 and pad the last coordinate.
pub fn embed_in_k(p: &JPoint) -> KPoint {
    let n = p.n();
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rat::zero());
    out.extend_from_slice(&p.coords().0[..n - 1]);
    out.push(&p.coords()[n - 1] + Rat::one() - p.param());
    KPoint::new(RatVec(out)).expect("embedding preserves the defining system")
}

/// Insert the K factor `tau` into `rho` at position j, exactly the boundary
/// insertion shape. A K(1) factor acts as the identity.
pub fn delta_insert(rho: &JPoint, tau: &KPoint, j: usize) -> Result<JPoint> {
    let r = rho.n();
    let t = tau.n();
    if j == 0 || j > r {
        return Err(Error::IndexRange { index: j, max: r });
    }
    let v = &rho.coords().0;
    let u = &tau.coords().0;
    let mut out = Vec::with_capacity(r + t - 1);
    out.extend_from_slice(&v[..j - 1]);
    out.extend_from_slice(&u[..t - 1]);
    out.push(&u[t - 1] + &v[j - 1]);
    out.extend_from_slice(&v[j..]);
    JPoint::new(rho.param().clone(), RatVec(out))
}

/// Graft the J blocks under the K factor `tau`: concatenate the blocks and
/// add (1 - a) u_i to the last coordinate of block i.
pub fn delta_graft(tau: &KPoint, rhos: &[JPoint]) -> Result<JPoint> {
    let t = tau.n();
    if rhos.len() != t {
        return Err(Error::Domain(format!(
            "graft needs {t} blocks, got {}",
            rhos.len()
        )));
    }
    let a = rhos[0].param().clone();
    if rhos.iter().any(|r| r.param() != &a) {
        return Err(Error::Domain("graft blocks disagree on the parameter".into()));
    }
    let scale = Rat::one() - &a;
    let mut out = Vec::new();
    for (rho, u_i) in rhos.iter().zip(tau.coords().iter()) {
        let m = rho.n();
        out.extend_from_slice(&rho.coords().0[..m - 1]);
        out.push(&rho.coords()[m - 1] + &scale * u_i);
    }
    JPoint::new(a, RatVec(out))
}

/// Relative graft: the outer factor is a J point at its own parameter r',
/// and the result lives at b = a + r'(1 - a).
pub fn delta_rel(outer: &JPoint, rhos: &[JPoint]) -> Result<JPoint> {
    let t = outer.n();
    if rhos.len() != t {
        return Err(Error::Domain(format!(
            "relative graft needs {t} blocks, got {}",
            rhos.len()
        )));
    }
    let a = rhos[0].param().clone();
    if rhos.iter().any(|r| r.param() != &a) {
        return Err(Error::Domain("graft blocks disagree on the parameter".into()));
    }
    if a >= Rat::one() {
        return Err(Error::Domain(
            "relative graft needs block parameter below 1".into(),
        ));
    }
    let scale = Rat::one() - &a;
    let b = &a + outer.param() * &scale;
    let mut out = Vec::new();
    for (rho, u_i) in rhos.iter().zip(outer.coords().iter()) {
        let m = rho.n();
        out.extend_from_slice(&rho.coords().0[..m - 1]);
        out.push(&rho.coords()[m - 1] + &scale * u_i);
    }
    JPoint::new(b, RatVec(out))
}

/// Try to peel the K block of length t starting at position j out of `p`.
pub fn j_decompose_at(p: &JPoint, j: usize, t: usize) -> Option<(JPoint, KPoint)> {
    let n = p.n();
    if t < 1 || j < 1 || j + t - 1 > n {
        return None;
    }
    let r = n + 1 - t;
    if j > r {
        return None;
    }
    let v = &p.coords().0;
    let block_sum: Rat = v[j - 1..j + t - 2]
        .iter()
        .fold(Rat::zero(), |acc, x| acc + x);
    let tail = rat(t as i64 - 1, 1) - block_sum;
    if tail < Rat::zero() {
        return None;
    }
    let mut inner = v[j - 1..j + t - 2].to_vec();
    inner.push(tail.clone());
    let tau = KPoint::new(RatVec(inner)).ok()?;
    let residue = &v[j + t - 2] - &tail;
    if residue < Rat::zero() {
        return None;
    }
    let mut outer = v[..j - 1].to_vec();
    outer.push(residue);
    outer.extend_from_slice(&v[j + t - 1..]);
    let rho = JPoint::new(p.param().clone(), RatVec(outer)).ok()?;
    Some((rho, tau))
}

/// Try to split `p` as a graft over the given composition of n.
pub fn graft_decompose_at(p: &JPoint, parts: &[usize]) -> Option<(KPoint, Vec<JPoint>)> {
    let a = p.param();
    if a >= &Rat::one() {
        return None;
    }
    let n: usize = parts.iter().sum();
    if n != p.n() || parts.iter().any(|&m| m == 0) {
        return None;
    }
    let scale = Rat::one() - a;
    let mut u = Vec::with_capacity(parts.len());
    let mut blocks = Vec::with_capacity(parts.len());
    let mut start = 0usize;
    for &m in parts {
        let block = &p.coords().0[start..start + m];
        let block_sum: Rat = block.iter().fold(Rat::zero(), |acc, x| acc + x);
        let u_i = (block_sum - rat(m as i64 - 1, 1) - a) / &scale;
        if u_i < Rat::zero() {
            return None;
        }
        let mut coords = block[..m - 1].to_vec();
        coords.push(&block[m - 1] - &scale * &u_i);
        let rho = JPoint::new(a.clone(), RatVec(coords)).ok()?;
        u.push(u_i);
        blocks.push(rho);
        start += m;
    }
    let tau = KPoint::new(RatVec(u)).ok()?;
    Some((tau, blocks))
}

/// Try to split `p` as a relative graft over the given composition with the
/// blocks at parameter `c`; the outer factor comes back at (param - c)/(1 - c).
pub fn rel_graft_decompose_at(p: &JPoint, c: &Rat, parts: &[usize]) -> Option<(JPoint, Vec<JPoint>)> {
    if c > p.param() || c >= &Rat::one() || c < &Rat::zero() {
        return None;
    }
    if parts.iter().sum::<usize>() != p.n() || parts.iter().any(|&m| m == 0) {
        return None;
    }
    let (u, blocks) = graft_candidate(p, c, parts)?;
    let r_rel = (p.param() - c) / (Rat::one() - c);
    let outer = JPoint::new(r_rel, RatVec(u)).ok()?;
    Some((outer, blocks))
}

/// Exact membership in a named face of J^a(n).
pub fn j_face_membership(p: &JPoint, which: &JFace) -> Result<bool> {
    let n = p.n();
    match which {
        JFace::DeltaInsertion { j, r, t } => {
            if r + t != n + 1 || *j == 0 || j > r || *t < 2 {
                return Err(Error::Domain(format!(
                    "face (j={j}, r={r}, t={t}) is not a face of J({n})"
                )));
            }
            Ok(j_decompose_at(p, *j, *t).is_some())
        }
        JFace::Graft { parts } => {
            if parts.len() < 2 || parts.iter().sum::<usize>() != n {
                return Err(Error::Domain(format!(
                    "composition {parts:?} is not a graft shape for J({n})"
                )));
            }
            Ok(graft_decompose_at(p, parts).is_some())
        }
        JFace::CoordZero { j } => {
            if *j == 0 || *j >= n {
                return Err(Error::IndexRange { index: *j, max: n });
            }
            Ok(p.coords()[*j - 1].is_zero())
        }
        JFace::SpecialZero => {
            let prefixes = p.coords().prefix_sums();
            Ok((1..n).any(|i| prefixes[i - 1] == rat(i as i64 - 1, 1) + p.param()))
        }
        JFace::DeltaInsertionZero { j, r, t } => {
            if r + t != n + 1 || *j == 0 || j > r || *t < 2 {
                return Err(Error::Domain(format!(
                    "face (j={j}, r={r}, t={t}) is not a face of J({n})"
                )));
            }
            match j_decompose_at(p, *j, *t) {
                None => Ok(false),
                Some((outer, _)) => j_face_membership(&outer, &JFace::SpecialZero),
            }
        }
    }
}

/// True when p lies on the boundary of J^a(n).
pub fn j_is_boundary(p: &JPoint) -> bool {
    let n = p.n();
    if n < 2 {
        return false;
    }
    let v = p.coords();
    if (1..n).any(|j| v[j - 1].is_zero()) {
        return true;
    }
    let prefixes = v.prefix_sums();
    (1..n).any(|i| prefixes[i - 1] == rat(i as i64 - 1, 1) + p.param())
}

/// Reinterpret p at the larger parameter b by padding the last coordinate.
pub fn shift_embed(p: &JPoint, b: &Rat) -> Result<JPoint> {
    if b < p.param() {
        return Err(Error::Domain(format!(
            "cannot shift parameter downward from {} to {}",
            p.param(),
            b
        )));
    }
    let n = p.n();
    let mut out = p.coords().0.clone();
    out[n - 1] = &out[n - 1] + (b - p.param());
    JPoint::new(b.clone(), RatVec(out))
}

/// Result of sweeping a J^b point against a smaller parameter a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepDecomposition {
    /// p is the shift of a J^a point.
    InJa(JPoint),
    /// p is a relative graft of J^a blocks under a J^{(b-a)/(1-a)} outer factor.
    Graft { outer: JPoint, blocks: Vec<JPoint> },
}

/// Exhibit p in J^b(n) as either a shifted J^a point or a relative graft of
/// J^a factors; recomposition returns p exactly.
pub fn sweep_decompose(p: &JPoint, a: &Rat) -> Result<SweepDecomposition> {
    let b = p.param();
    if a > b {
        return Err(Error::Domain(format!(
            "sweep parameter {a} exceeds the point's parameter {b}"
        )));
    }
    let n = p.n();
    // Shift branch: valid whenever the J^a prefix bounds hold.
    {
        let mut coords = p.coords().0.clone();
        coords[n - 1] = &coords[n - 1] - (b - a);
        if let Ok(q) = JPoint::new(a.clone(), RatVec(coords)) {
            return Ok(SweepDecomposition::InJa(q));
        }
    }
    if a >= &Rat::one() {
        return Err(Error::Domain("sweep needs a < 1 to form grafts".into()));
    }
    let r_rel = (b - a) / (Rat::one() - a);
    for t in 2..=n {
        for parts in compositions(n, t) {
            let Some((tau_coords, blocks)) = graft_candidate(p, a, &parts) else {
                continue;
            };
            if let Ok(outer) = JPoint::new(r_rel.clone(), RatVec(tau_coords)) {
                return Ok(SweepDecomposition::Graft { outer, blocks });
            }
        }
    }
    Err(Error::Domain(format!(
        "{p} admits no sweep decomposition against parameter {a}"
    )))
}

/// Like graft_decompose_at but the outer weights must total to the relative
/// parameter's budget rather than form a K point.
fn graft_candidate(p: &JPoint, a: &Rat, parts: &[usize]) -> Option<(Vec<Rat>, Vec<JPoint>)> {
    let scale = Rat::one() - a;
    let mut u = Vec::with_capacity(parts.len());
    let mut blocks = Vec::with_capacity(parts.len());
    let mut start = 0usize;
    for &m in parts {
        let block = &p.coords().0[start..start + m];
        let block_sum: Rat = block.iter().fold(Rat::zero(), |acc, x| acc + x);
        let u_i = (block_sum - rat(m as i64 - 1, 1) - a) / &scale;
        if u_i < Rat::zero() {
            return None;
        }
        let mut coords = block[..m - 1].to_vec();
        coords.push(&block[m - 1] - &scale * &u_i);
        let rho = JPoint::new(a.clone(), RatVec(coords)).ok()?;
        u.push(u_i);
        blocks.push(rho);
        start += m;
    }
    Some((u, blocks))
}

/// All compositions of n into t positive parts, lexicographically.
pub fn compositions(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, t: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if t == 1 {
            if n >= 1 {
                acc.push(n);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for first in 1..=n.saturating_sub(t - 1) {
            acc.push(first);
            rec(n - first, t - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if t >= 1 && n >= t {
        rec(n, t, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn half() -> Rat {
        rat(1, 2)
    }

    fn jp(a: Rat, coords: &[Rat]) -> JPoint {
        JPoint::new(a, RatVec(coords.to_vec())).unwrap()
    }

    #[test]
    fn hrep_examples() {
        let h1 = j_hrep(1, &half()).unwrap();
        let vs = h1.vertex_enum().unwrap();
        assert_eq!(vs.into_iter().collect::<Vec<_>>(), vec![RatVec(vec![half()])]);

        let h2 = j_hrep(2, &half()).unwrap();
        let vs = h2.vertex_enum().unwrap();
        let expect: BTreeSet<RatVec> = [
            RatVec(vec![rat(0, 1), rat(3, 2)]),
            RatVec(vec![half(), rat(1, 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(vs, expect);

        let h3 = j_hrep(3, &half()).unwrap();
        let vs = h3.vertex_enum().unwrap();
        let expect: BTreeSet<RatVec> = [
            RatVec(vec![rat(0, 1), rat(0, 1), rat(5, 2)]),
            RatVec(vec![rat(0, 1), rat(3, 2), rat(1, 1)]),
            RatVec(vec![half(), rat(1, 1), rat(1, 1)]),
            RatVec(vec![half(), rat(0, 1), rat(2, 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(vs, expect);

        assert!(j_hrep(2, &rat(3, 2)).is_err());
    }

    #[test]
    fn parameter_zero_is_k() {
        let h = j_hrep(4, &Rat::zero()).unwrap();
        let k = crate::associahedron::k_hrep(4).unwrap();
        assert_eq!(h, k);
    }

    #[test]
    fn embedding_examples() {
        let p = JPoint::single(half()).unwrap();
        assert_eq!(embed_in_k(&p).coords(), &RatVec::from_ints(&[0, 1]));
        let q = jp(half(), &[rat(0, 1), rat(3, 2)]);
        assert_eq!(embed_in_k(&q).coords(), &RatVec::from_ints(&[0, 0, 2]));
        // Parameter 1: the embedding only prepends the forced zero.
        let r = jp(Rat::one(), &[rat(1, 1), rat(1, 1)]);
        assert_eq!(embed_in_k(&r).coords(), &RatVec::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn delta_insert_examples() {
        let rho = jp(half(), &[half(), rat(1, 1)]);
        let b = KPoint::binary();
        assert_eq!(
            delta_insert(&rho, &b, 1).unwrap(),
            jp(half(), &[rat(0, 1), rat(3, 2), rat(1, 1)])
        );
        assert_eq!(
            delta_insert(&rho, &b, 2).unwrap(),
            jp(half(), &[half(), rat(0, 1), rat(2, 1)])
        );
        let rho1 = JPoint::single(half()).unwrap();
        assert_eq!(
            delta_insert(&rho1, &b, 1).unwrap(),
            jp(half(), &[rat(0, 1), rat(3, 2)])
        );
        // K(1) factor is the identity.
        assert_eq!(delta_insert(&rho, &KPoint::unit(), 2).unwrap(), rho);
        assert!(delta_insert(&rho, &b, 3).is_err());
    }

    #[test]
    fn delta_graft_examples() {
        let b = KPoint::binary();
        let beta1 = JPoint::single(half()).unwrap();
        assert_eq!(
            delta_graft(&b, &[beta1.clone(), beta1.clone()]).unwrap(),
            jp(half(), &[half(), rat(1, 1)])
        );
        let q = jp(half(), &[rat(0, 1), rat(3, 2)]);
        assert_eq!(
            delta_graft(&b, &[beta1.clone(), q]).unwrap(),
            jp(half(), &[half(), rat(0, 1), rat(2, 1)])
        );
        // All-singleton blocks: a + (1-a) tau componentwise.
        let tau = KPoint::from_ints(&[0, 1, 1]).unwrap();
        let grafted = delta_graft(&tau, &[beta1.clone(), beta1.clone(), beta1.clone()]).unwrap();
        assert_eq!(grafted, jp(half(), &[half(), rat(1, 1), rat(1, 1)]));
        assert!(delta_graft(&b, &[beta1]).is_err());
    }

    #[test]
    fn delta_rel_examples() {
        // Outer (s, 2-s) at parameter 1 over two singleton blocks at 1/2.
        let s = half();
        let outer = jp(Rat::one(), &[s.clone(), rat(2, 1) - &s]);
        let beta1 = JPoint::single(half()).unwrap();
        let out = delta_rel(&outer, &[beta1.clone(), beta1.clone()]).unwrap();
        assert_eq!(out.param(), &Rat::one());
        assert_eq!(out, jp(Rat::one(), &[rat(3, 4), rat(5, 4)]));
        // Relative parameter 0 recovers the plain graft.
        let tau = KPoint::binary();
        let outer0 = JPoint::new(Rat::zero(), tau.coords().clone()).unwrap();
        assert_eq!(
            delta_rel(&outer0, &[beta1.clone(), beta1.clone()]).unwrap(),
            delta_graft(&tau, &[beta1.clone(), beta1]).unwrap()
        );
    }

    #[test]
    fn membership_examples() {
        let p = jp(half(), &[half(), rat(1, 1)]);
        assert!(j_face_membership(&p, &JFace::SpecialZero).unwrap());
        let q = jp(half(), &[rat(0, 1), rat(3, 2)]);
        assert!(j_face_membership(&q, &JFace::CoordZero { j: 1 }).unwrap());
        let mid = jp(half(), &[rat(1, 4), rat(5, 4)]);
        assert!(!j_is_boundary(&mid));
        assert!(j_is_boundary(&p));
    }

    #[test]
    fn shift_examples() {
        let q = jp(half(), &[rat(0, 1), rat(3, 2)]);
        assert_eq!(
            shift_embed(&q, &Rat::one()).unwrap(),
            jp(Rat::one(), &[rat(0, 1), rat(2, 1)])
        );
        let p = jp(half(), &[half(), rat(1, 1)]);
        assert_eq!(
            shift_embed(&p, &Rat::one()).unwrap(),
            jp(Rat::one(), &[half(), rat(3, 2)])
        );
        assert_eq!(shift_embed(&p, &half()).unwrap(), p);
        assert!(shift_embed(&p, &Rat::zero()).is_err());
    }

    #[test]
    fn sweep_examples() {
        let p = jp(Rat::one(), &[rat(3, 4), rat(5, 4)]);
        match sweep_decompose(&p, &half()).unwrap() {
            SweepDecomposition::Graft { outer, blocks } => {
                assert_eq!(outer, jp(Rat::one(), &[half(), rat(3, 2)]));
                assert_eq!(blocks, vec![
                    JPoint::single(half()).unwrap(),
                    JPoint::single(half()).unwrap()
                ]);
                assert_eq!(delta_rel(&outer, &blocks).unwrap(), p);
            }
            other => panic!("expected a graft, got {other:?}"),
        }

        let q = jp(Rat::one(), &[rat(0, 1), rat(2, 1)]);
        match sweep_decompose(&q, &half()).unwrap() {
            SweepDecomposition::InJa(inner) => {
                assert_eq!(inner, jp(half(), &[rat(0, 1), rat(3, 2)]));
                assert_eq!(shift_embed(&inner, &Rat::one()).unwrap(), q);
            }
            other => panic!("expected the shift branch, got {other:?}"),
        }

        match sweep_decompose(&q, &Rat::one()).unwrap() {
            SweepDecomposition::InJa(inner) => assert_eq!(inner, q),
            other => panic!("expected identity, got {other:?}"),
        }
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
    }
}
