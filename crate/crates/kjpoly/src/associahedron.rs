//! The polytopes K(n) with boundary insertion, face structure, and the
//! associative product on points.
//!
//! K(n) lives in the nonnegative orthant of R^n: prefix sums are bounded by
//! u_1 + ... + u_j <= j - 1 for j < n and the full sum equals n - 1. The
//! first coordinate is forced to zero and the last is at least 1 for n >= 2.

use crate::ratgeom::{rat, Rat, RatVec};
use crate::{Error, HRep, Result};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// A validated point of K(n).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KPoint {
    u: RatVec,
}

impl KPoint {
    /// Validate coordinates against the defining system of K(n).
    pub fn new(u: RatVec) -> Result<Self> {
        let n = u.len();
        if n == 0 {
            return Err(Error::Domain("K point needs at least one coordinate".into()));
        }
        for (i, c) in u.iter().enumerate() {
            if c < &Rat::zero() {
                return Err(Error::Domain(format!(
                    "coordinate {} of {} is negative",
                    i + 1,
                    u
                )));
            }
        }
        let prefixes = u.prefix_sums();
        for j in 1..n {
            if prefixes[j - 1] > rat(j as i64 - 1, 1) {
                return Err(Error::Domain(format!(
                    "prefix sum {} at position {} exceeds {}",
                    prefixes[j - 1],
                    j,
                    j - 1
                )));
            }
        }
        if prefixes[n - 1] != rat(n as i64 - 1, 1) {
            return Err(Error::Domain(format!(
                "total of {} is {}, expected {}",
                u,
                prefixes[n - 1],
                n - 1
            )));
        }
        Ok(KPoint { u })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(RatVec::from_ints(coords))
    }

    /// The unique point (0) of K(1); the identity for insertion.
    pub fn unit() -> Self {
        KPoint {
            u: RatVec::zeros(1),
        }
    }

    /// The unique point (0, 1) of K(2).
    pub fn binary() -> Self {
        KPoint {
            u: RatVec::from_ints(&[0, 1]),
        }
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn coords(&self) -> &RatVec {
        &self.u
    }

    pub fn into_coords(self) -> RatVec {
        self.u
    }
}

impl fmt::Display for KPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.u)
    }
}

/// Identifier of a codimension-one piece of the boundary of K(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KFace {
    /// The image of K(r) x K(t) inserted at position j (r + t = n + 1).
    Insertion { j: usize, r: usize, t: usize },
    /// u_j = 0 for an interior index 1 < j < n.
    CoordZero { j: usize },
    /// Some proper prefix sum is tight: u_1 + ... + u_t = t - 1, 1 < t < n.
    TightPrefix,
}

/// The defining halfspace system of K(n).
pub fn k_hrep(n: usize) -> Result<HRep> {
    if n == 0 {
        return Err(Error::Domain("K(0) does not exist".into()));
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
        h.push_ineq(normal, rat(j as i64 - 1, 1));
    }
    let total = RatVec(vec![rat(1, 1); n]);
    h.push_eq(total, rat(n as i64 - 1, 1));
    Ok(h)
}

/// All integer points of K(n), enumerated straight from the inequality
/// system (no trees involved). These are the 0-cells of the combinatorial
/// face structure; the extreme points of the polytope form a subset.
pub fn k_integer_points(n: usize) -> Result<BTreeSet<RatVec>> {
    if n == 0 {
        return Err(Error::Domain("K(0) does not exist".into()));
    }
    if n > 10 {
        return Err(Error::SizeLimit(format!(
            "integer point enumeration limited to n = 10, got {n}"
        )));
    }
    let mut out = BTreeSet::new();
    let mut partial: Vec<i64> = vec![0];
    fn rec(n: usize, partial: &mut Vec<i64>, out: &mut BTreeSet<RatVec>) {
        let j = partial.len() + 1;
        let prefix: i64 = partial.iter().sum();
        if j == n {
            let last = n as i64 - 1 - prefix;
            if last >= 0 {
                let mut coords = partial.clone();
                coords.push(last);
                out.insert(RatVec::from_ints(&coords));
            }
            return;
        }
        for u in 0..=(j as i64 - 1 - prefix) {
            partial.push(u);
            rec(n, partial, out);
            partial.pop();
        }
    }
    if n == 1 {
        out.insert(RatVec::from_ints(&[0]));
    } else {
        rec(n, &mut partial, &mut out);
    }
    Ok(out)
}

/// Insert `tau` into `rho` at position j:
/// (v_1,...,v_{j-1}, u_1,...,u_{t-1}, u_t + v_j, v_{j+1},...,v_r).
/// A factor of arity 1 acts as the identity.
pub fn boundary_insert(rho: &KPoint, tau: &KPoint, j: usize) -> Result<KPoint> {
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
    KPoint::new(RatVec(out))
}

/// The dual insertion: position counted from the right.
pub fn boundary_insert_dual(rho: &KPoint, tau: &KPoint, j: usize) -> Result<KPoint> {
    let r = rho.n();
    if j == 0 || j > r {
        return Err(Error::IndexRange { index: j, max: r });
    }
    boundary_insert(rho, tau, r - j + 1)
}

/// Try to peel the block of length t starting at position j out of `p`.
/// Returns (outer, inner) on success.
pub fn decompose_at(p: &KPoint, j: usize, t: usize) -> Option<(KPoint, KPoint)> {
    let n = p.n();
    if t < 1 || j < 1 || j + t - 1 > n {
        return None;
    }
    let r = n + 1 - t;
    if j > r {
        return None;
    }
    let u = &p.coords().0;
    let block_sum: Rat = u[j - 1..j + t - 2]
        .iter()
        .fold(Rat::zero(), |acc, x| acc + x);
    let tail = rat(t as i64 - 1, 1) - block_sum;
    if tail < Rat::zero() {
        return None;
    }
    let mut inner = u[j - 1..j + t - 2].to_vec();
    inner.push(tail.clone());
    let tau = KPoint::new(RatVec(inner)).ok()?;
    let residue = &u[j + t - 2] - &tail;
    if residue < Rat::zero() {
        return None;
    }
    let mut outer = u[..j - 1].to_vec();
    outer.push(residue);
    outer.extend_from_slice(&u[j + t - 1..]);
    let rho = KPoint::new(RatVec(outer)).ok()?;
    Some((rho, tau))
}

/// Exact membership in a named face.
pub fn face_membership(p: &KPoint, which: &KFace) -> Result<bool> {
    let n = p.n();
    match *which {
        KFace::Insertion { j, r, t } => {
            if r + t != n + 1 || j == 0 || j > r || r < 2 || t < 2 {
                return Err(Error::Domain(format!(
                    "face (j={j}, r={r}, t={t}) is not a face of K({n})"
                )));
            }
            Ok(decompose_at(p, j, t).is_some())
        }
        KFace::CoordZero { j } => {
            if j <= 1 || j >= n {
                return Err(Error::IndexRange { index: j, max: n });
            }
            Ok(p.coords()[j - 1].is_zero())
        }
        KFace::TightPrefix => {
            let prefixes = p.coords().prefix_sums();
            Ok((2..n).any(|t| prefixes[t - 1] == rat(t as i64 - 1, 1)))
        }
    }
}

/// True when p lies on the boundary of K(n).
pub fn is_boundary(p: &KPoint) -> bool {
    let n = p.n();
    if n < 3 {
        return false;
    }
    let u = p.coords();
    if (2..n).any(|j| u[j - 1].is_zero()) {
        return true;
    }
    let prefixes = u.prefix_sums();
    (2..n).any(|t| prefixes[t - 1] == rat(t as i64 - 1, 1))
}

/// Decompose a boundary point as an insertion image. Scans positions j in
/// increasing order and block lengths t in decreasing order, returning the
/// first exact factorization; every boundary point of K(n) has one.
pub fn face_decompose(p: &KPoint) -> Result<(usize, usize, usize, KPoint, KPoint)> {
    let n = p.n();
    if n < 3 {
        return Err(Error::Domain(format!(
            "K({n}) has no decomposable boundary"
        )));
    }
    for j in 1..n {
        let t_max = if j == 1 { n - 1 } else { n + 1 - j };
        for t in (2..=t_max).rev() {
            if let Some((rho, tau)) = decompose_at(p, j, t) {
                return Ok((j, n + 1 - t, t, rho, tau));
            }
        }
    }
    Err(Error::Domain(format!(
        "{p} admits no boundary decomposition (interior point)"
    )))
}

/// Every admissible factorization of a boundary point, all (j, t) pairs.
pub fn enumerate_decompositions(p: &KPoint) -> Vec<(usize, usize, usize, KPoint, KPoint)> {
    let n = p.n();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for j in 1..n {
        let t_max = if j == 1 { n - 1 } else { n + 1 - j };
        for t in (2..=t_max).rev() {
            if let Some((rho, tau)) = decompose_at(p, j, t) {
                out.push((j, n + 1 - t, t, rho, tau));
            }
        }
    }
    out
}

/// The associative product: insert `rho` into `sigma` at the first slot.
/// Both factors must have arity >= 2.
pub fn monoid_product(rho: &KPoint, sigma: &KPoint) -> Result<KPoint> {
    if rho.n() < 2 || sigma.n() < 2 {
        return Err(Error::Domain(
            "product factors must have arity at least 2".into(),
        ));
    }
    boundary_insert(sigma, rho, 1)
}

/// Vertex set of K(n): the integer shadow lattice of the binary trees.
pub fn k_vertices(n: usize) -> Result<BTreeSet<KPoint>> {
    let lattice = crate::trees::k_lattice(n)?;
    lattice.into_iter().map(KPoint::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(coords: &[i64]) -> KPoint {
        KPoint::from_ints(coords).unwrap()
    }

    #[test]
    fn validation() {
        assert!(KPoint::from_ints(&[0]).is_ok());
        assert!(KPoint::from_ints(&[0, 1]).is_ok());
        assert!(KPoint::from_ints(&[1, 0]).is_err()); // first coordinate forced to 0
        assert!(KPoint::from_ints(&[0, 2, 0]).is_err()); // prefix bound
        assert!(KPoint::from_ints(&[0, 1, 2]).is_err()); // wrong total
        let halves = RatVec::new(vec![rat(0, 1), rat(1, 2), rat(3, 2)]);
        assert!(KPoint::new(halves).is_ok());
    }

    #[test]
    fn hrep_small() {
        let h1 = k_hrep(1).unwrap();
        assert_eq!(
            h1.vertex_enum().unwrap().into_iter().collect::<Vec<_>>(),
            vec![RatVec::from_ints(&[0])]
        );
        let h3 = k_hrep(3).unwrap();
        let vs = h3.vertex_enum().unwrap();
        assert_eq!(vs.len(), 2);
        assert!(vs.contains(&RatVec::from_ints(&[0, 0, 2])));
        assert!(vs.contains(&RatVec::from_ints(&[0, 1, 1])));
        assert!(k_hrep(0).is_err());
    }

    #[test]
    fn hrep_pentagon() {
        // The five 0-cells of K(4). Geometrically (0,0,1,2) lies on the
        // segment between (0,0,0,3) and (0,0,2,1): the pentagon has one
        // flat corner in this realization, so the polytope has only four
        // extreme points.
        let cells: BTreeSet<RatVec> = [
            RatVec::from_ints(&[0, 0, 2, 1]),
            RatVec::from_ints(&[0, 0, 1, 2]),
            RatVec::from_ints(&[0, 0, 0, 3]),
            RatVec::from_ints(&[0, 1, 0, 2]),
            RatVec::from_ints(&[0, 1, 1, 1]),
        ]
        .into_iter()
        .collect();
        let h4 = k_hrep(4).unwrap();
        for c in &cells {
            assert!(h4.contains(c).unwrap());
        }
        assert_eq!(k_integer_points(4).unwrap(), cells);

        let extreme = h4.vertex_enum().unwrap();
        assert_eq!(extreme.len(), 4);
        assert!(extreme.is_subset(&cells));
        assert!(!extreme.contains(&RatVec::from_ints(&[0, 0, 1, 2])));
    }

    #[test]
    fn integer_points_match_catalan() {
        for (n, expect) in [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)] {
            assert_eq!(k_integer_points(n).unwrap().len(), expect);
        }
        assert!(k_integer_points(11).is_err());
    }

    #[test]
    fn insertion_examples() {
        let b = KPoint::binary();
        assert_eq!(boundary_insert(&b, &b, 1).unwrap(), kp(&[0, 1, 1]));
        assert_eq!(boundary_insert(&b, &b, 2).unwrap(), kp(&[0, 0, 2]));
        assert_eq!(
            boundary_insert(&b, &kp(&[0, 1, 1]), 1).unwrap(),
            kp(&[0, 1, 1, 1])
        );
        // Arity-1 factors act as the identity.
        let one = KPoint::unit();
        assert_eq!(boundary_insert(&b, &one, 2).unwrap(), b);
        assert_eq!(boundary_insert(&one, &b, 1).unwrap(), b);
        assert!(boundary_insert(&b, &b, 3).is_err());
    }

    #[test]
    fn dual_insertion() {
        let b = KPoint::binary();
        assert_eq!(
            boundary_insert_dual(&b, &b, 2).unwrap(),
            boundary_insert(&b, &b, 1).unwrap()
        );
        assert_eq!(
            boundary_insert_dual(&b, &b, 1).unwrap(),
            boundary_insert(&b, &b, 2).unwrap()
        );
    }

    #[test]
    fn membership_examples() {
        assert!(face_membership(&kp(&[0, 0, 2]), &KFace::CoordZero { j: 2 }).unwrap());
        assert!(face_membership(&kp(&[0, 1, 1]), &KFace::TightPrefix).unwrap());
        let mid = KPoint::new(RatVec::new(vec![rat(0, 1), rat(1, 2), rat(3, 2)])).unwrap();
        assert!(!is_boundary(&mid));
        assert!(face_membership(
            &kp(&[0, 1, 1]),
            &KFace::Insertion { j: 1, r: 2, t: 2 }
        )
        .unwrap());
    }

    #[test]
    fn decompose_examples() {
        let (j, r, t, rho, tau) = face_decompose(&kp(&[0, 1, 1])).unwrap();
        assert_eq!((j, r, t), (1, 2, 2));
        assert_eq!(rho, KPoint::binary());
        assert_eq!(tau, KPoint::binary());

        let (j, r, t, rho, tau) = face_decompose(&kp(&[0, 0, 2])).unwrap();
        assert_eq!((j, r, t), (2, 2, 2));
        assert_eq!(rho, KPoint::binary());
        assert_eq!(tau, KPoint::binary());

        let (j, r, t, rho, tau) = face_decompose(&kp(&[0, 1, 1, 1])).unwrap();
        assert_eq!((j, r, t), (1, 2, 3));
        assert_eq!(rho, KPoint::binary());
        assert_eq!(tau, kp(&[0, 1, 1]));

        let mid = KPoint::new(RatVec::new(vec![rat(0, 1), rat(1, 2), rat(3, 2)])).unwrap();
        assert!(face_decompose(&mid).is_err());
    }

    #[test]
    fn decompose_recompose_round_trip() {
        for p in [
            kp(&[0, 1, 1, 1]),
            kp(&[0, 0, 2, 1]),
            kp(&[0, 1, 0, 2]),
            kp(&[0, 0, 0, 3]),
        ] {
            for (j, _, _, rho, tau) in enumerate_decompositions(&p) {
                assert_eq!(boundary_insert(&rho, &tau, j).unwrap(), p);
            }
            assert!(!enumerate_decompositions(&p).is_empty());
        }
    }

    #[test]
    fn product_examples() {
        let b = KPoint::binary();
        let bb = monoid_product(&b, &b).unwrap();
        assert_eq!(bb, kp(&[0, 1, 1]));
        let left = monoid_product(&bb, &b).unwrap();
        let right = monoid_product(&b, &bb).unwrap();
        assert_eq!(left, kp(&[0, 1, 1, 1]));
        assert_eq!(
            monoid_product(&monoid_product(&b, &b).unwrap(), &b).unwrap(),
            monoid_product(&b, &monoid_product(&b, &b).unwrap()).unwrap()
        );
        assert_eq!(left, right);
        assert!(monoid_product(&KPoint::unit(), &b).is_err());
    }

    #[test]
    fn insertion_is_affine() {
        let rho1 = kp(&[0, 1, 1]);
        let rho2 = kp(&[0, 0, 2]);
        let tau = KPoint::binary();
        let lam = rat(1, 3);
        let mixed = KPoint::new(rho1.coords().convex(rho2.coords(), &lam)).unwrap();
        let lhs = boundary_insert(&mixed, &tau, 2).unwrap();
        let a = boundary_insert(&rho1, &tau, 2).unwrap();
        let b = boundary_insert(&rho2, &tau, 2).unwrap();
        let rhs = a.coords().convex(b.coords(), &lam);
        assert_eq!(lhs.coords(), &rhs);
    }
}
