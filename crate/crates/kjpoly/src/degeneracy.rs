//! The shift-one map xi and the canonical degeneracy operators on K(n) and
//! J^a(n), plus convex interpolation between two degeneracy families.
//!
//! xi removes a total of at most one unit from a nonnegative vector, front
//! to back, and is the engine behind every degeneracy: d_1 drops the head
//! of xi(whole), d_k for k >= 2 applies xi to the tail starting at k and
//! merges the freed head into position k - 1.

use crate::associahedron::KPoint;
use crate::multiplihedron::JPoint;
use crate::ratgeom::{rat, Rat, RatVec};
use crate::{Error, Result};
use num_traits::Zero;

/// Shift-one map on nonnegative vectors, evaluated exactly.
pub fn xi(t: &RatVec) -> Result<RatVec> {
    let n = t.len();
    if n == 0 {
        return Err(Error::Domain("xi needs a nonempty vector".into()));
    }
    for (i, c) in t.iter().enumerate() {
        if c < &Rat::zero() {
            return Err(Error::Domain(format!(
                "xi input has negative coordinate {} at position {}",
                c,
                i + 1
            )));
        }
    }
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    let mut prefix = Rat::zero();
    let mut out_sum = Rat::zero();
    let mut running_max = Rat::zero(); // holds Max_{1<=j<=k} (sum_{i<=j} t_i - j)
    for k in 0..n {
        prefix += &t.0[k];
        let cand = &prefix - rat(k as i64 + 1, 1);
        let v = if k == 0 {
            running_max = cand;
            let shifted = &t.0[0] - rat(1, 1);
            if shifted > Rat::zero() {
                shifted
            } else {
                Rat::zero()
            }
        } else {
            if cand > running_max {
                running_max = cand;
            }
            let bound = &running_max - &out_sum + rat(k as i64, 1);
            if t.0[k] < bound {
                t.0[k].clone()
            } else {
                bound
            }
        };
        out_sum += &v;
        out.push(v);
    }
    Ok(RatVec(out))
}

/// Core coordinate formula shared by the K and J degeneracies.
fn degeneracy_coords(t: &RatVec, j: usize) -> Result<RatVec> {
    let n = t.len();
    if n < 2 {
        return Err(Error::Domain(
            "degeneracy needs at least two coordinates".into(),
        ));
    }
    if j == 0 || j > n {
        return Err(Error::IndexRange { index: j, max: n });
    }
    if j == 1 {
        let shifted = xi(t)?;
        Ok(RatVec(shifted.0[1..].to_vec()))
    } else {
        let tail = xi(&RatVec(t.0[j - 1..].to_vec()))?;
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&t.0[..j - 2]);
        out.push(&t.0[j - 2] + &tail.0[0]);
        out.extend_from_slice(&tail.0[1..]);
        Ok(RatVec(out))
    }
}

/// Degeneracy d_j : K(n) -> K(n-1), 1 <= j <= n.
pub fn d_k(j: usize, sigma: &KPoint) -> Result<KPoint> {
    KPoint::new(degeneracy_coords(sigma.coords(), j)?)
}

/// Degeneracy d_j : J^a(n) -> J^a(n-1), 1 <= j <= n; the parameter a is
/// preserved.
pub fn d_j(j: usize, rho: &JPoint) -> Result<JPoint> {
    JPoint::new(
        rho.param().clone(),
        degeneracy_coords(rho.coords(), j)?,
    )
}

/// Convex interpolation (1-u) d + u d' between two degeneracy families,
/// evaluated at index j on sigma. Both families must send K(n) to K(n-1);
/// the result then satisfies the same boundary case table for every u.
pub fn interpolate_degeneracy<F, G>(
    u: &Rat,
    j: usize,
    d: F,
    d_prime: G,
    sigma: &KPoint,
) -> Result<KPoint>
where
    F: Fn(usize, &KPoint) -> Result<KPoint>,
    G: Fn(usize, &KPoint) -> Result<KPoint>,
{
    if u < &Rat::zero() || u > &rat(1, 1) {
        return Err(Error::Domain(format!(
            "interpolation parameter {u} outside [0,1]"
        )));
    }
    let first = d(j, sigma)?;
    let second = d_prime(j, sigma)?;
    if first.n() != second.n() {
        return Err(Error::DimensionMismatch {
            expected: first.n(),
            got: second.n(),
        });
    }
    KPoint::new(second.coords().convex(first.coords(), u))
}
