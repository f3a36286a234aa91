//! Exact rational linear geometry: vectors, halfspace systems, membership,
//! ray-boundary intersection, and small-scale vertex enumeration.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Exact rational scalar. Always normalized: positive denominator, gcd 1.
pub type Rat = num_rational::BigRational;

/// Build a rational from an integer pair. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Domain(format!("bad rational {s:?}: {e}")))
}

/// Render a rational as "p" or "p/q" (never a decimal).
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

/// Fixed-length vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVec(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Rat::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.len(), other.len());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        debug_assert_eq!(self.len(), other.len());
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|a| a * c).collect())
    }

    /// t*self + (1-t)*other, exactly.
    pub fn convex(&self, other: &RatVec, t: &Rat) -> RatVec {
        let one_minus = Rat::one() - t;
        RatVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * t + b * &one_minus)
                .collect(),
        )
    }

    pub fn sum(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |acc, a| acc + a)
    }

    /// Prefix sums s_1..s_n with s_j = x_1 + ... + x_j.
    pub fn prefix_sums(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.len());
        let mut acc = Rat::zero();
        for x in &self.0 {
            acc += x;
            out.push(acc.clone());
        }
        out
    }

    pub fn reversed(&self) -> RatVec {
        RatVec(self.0.iter().rev().cloned().collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::ops::Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

/// Halfspace representation: inequalities `normal . x <= offset` plus
/// equalities `normal . x = offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<(RatVec, Rat)>,
    pub eqs: Vec<(RatVec, Rat)>,
}

impl HRep {
    pub fn new(dim: usize) -> Self {
        HRep {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn push_ineq(&mut self, normal: RatVec, offset: Rat) {
        debug_assert_eq!(normal.len(), self.dim);
        self.ineqs.push((normal, offset));
    }

    pub fn push_eq(&mut self, normal: RatVec, offset: Rat) {
        debug_assert_eq!(normal.len(), self.dim);
        self.eqs.push((normal, offset));
    }

    /// Exact membership test.
    pub fn contains(&self, p: &RatVec) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        for (a, b) in &self.ineqs {
            if a.dot(p) > *b {
                return Ok(false);
            }
        }
        for (a, b) in &self.eqs {
            if a.dot(p) != *b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Shoot the ray from `center` through `through` and return the boundary
    /// exit point together with the convex weight t in [0,1) satisfying
    /// `through = t*center + (1-t)*exit`.
    ///
    /// `center` must not be tight on any inequality that the ray direction
    /// increases (it may sit on faces parallel to the ray, which is how the
    /// forced first coordinate of K(n) behaves).
    pub fn ray_exit(&self, center: &RatVec, through: &RatVec) -> Result<(RatVec, Rat)> {
        if !self.contains(center)? {
            return Err(Error::Domain("ray center outside the polytope".into()));
        }
        if !self.contains(through)? {
            return Err(Error::Domain("ray target outside the polytope".into()));
        }
        if center == through {
            return Err(Error::Domain("ray target equals the center".into()));
        }
        let w = through.sub(center);
        let mut lambda: Option<Rat> = None;
        for (a, b) in &self.ineqs {
            let aw = a.dot(&w);
            if aw > Rat::zero() {
                let slack = b - a.dot(center);
                if slack.is_zero() {
                    return Err(Error::Domain(
                        "ray center lies on the boundary in the exit direction".into(),
                    ));
                }
                let cand = slack / aw;
                lambda = Some(match lambda {
                    Some(l) if l <= cand => l,
                    _ => cand,
                });
            }
        }
        let lambda = lambda
            .ok_or_else(|| Error::Domain("ray never exits (unbounded direction)".into()))?;
        let exit = center.add(&w.scale(&lambda));
        let t = (&lambda - Rat::one()) / &lambda;
        Ok((exit, t))
    }

    /// Exact vertex enumeration for bounded systems of ambient dimension <= 8.
    /// Equalities are substituted out first; the remaining space is scanned by
    /// basic solutions (all maximal tight inequality subsets).
    pub fn vertex_enum(&self) -> Result<BTreeSet<RatVec>> {
        if self.dim > 8 {
            return Err(Error::SizeLimit(format!(
                "vertex enumeration limited to dimension 8, got {}",
                self.dim
            )));
        }
        if !self.is_bounded() {
            return Err(Error::Domain("vertex enumeration of an unbounded system".into()));
        }
        let mut out = BTreeSet::new();
        let Some(red) = self.reduce_equalities() else {
            return Ok(out); // inconsistent equalities: empty polytope
        };
        let f = red.free_dim;
        if f == 0 {
            let p = RatVec(red.particular.clone());
            if self.contains(&p)? {
                out.insert(p);
            }
            return Ok(out);
        }
        let rows: Vec<(Vec<Rat>, Rat)> = red.ineqs.clone();
        let m = rows.len();
        if m < f {
            return Err(Error::Domain(
                "vertex enumeration of an unbounded system".into(),
            ));
        }
        for subset in combinations(m, f) {
            let mat: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
            let rhs: Vec<Rat> = subset.iter().map(|&i| rows[i].1.clone()).collect();
            let Some(y) = solve_square(mat, rhs) else {
                continue;
            };
            if rows
                .iter()
                .all(|(a, b)| dot_slice(a, &y) <= *b)
            {
                out.insert(red.lift(&y));
            }
        }
        Ok(out)
    }

    /// True when the feasible set has trivial recession cone.
    pub fn is_bounded(&self) -> bool {
        // Recession cone: A w <= 0, E w = 0. Reduce the equalities, then look
        // for a nonzero ray by pinning one coordinate to +-1 at a time.
        let hom = HRep {
            dim: self.dim,
            ineqs: self
                .ineqs
                .iter()
                .map(|(a, _)| (a.clone(), Rat::zero()))
                .collect(),
            eqs: self
                .eqs
                .iter()
                .map(|(a, _)| (a.clone(), Rat::zero()))
                .collect(),
        };
        let Some(red) = hom.reduce_equalities() else {
            return true; // cone empty except the origin handling below
        };
        let f = red.free_dim;
        if f == 0 {
            return true;
        }
        for i in 0..f {
            for sign in [1i64, -1] {
                // System: red.ineqs with y_i = sign, feasibility via FM.
                let mut sys: Vec<(Vec<Rat>, Rat)> = Vec::new();
                for (a, b) in &red.ineqs {
                    let mut a2 = a.clone();
                    let pinned = a2.remove(i);
                    let b2 = b - pinned * rat(sign, 1);
                    sys.push((a2, b2));
                }
                if fm_feasible(sys, f - 1) {
                    return false;
                }
            }
        }
        true
    }

    fn reduce_equalities(&self) -> Option<Reduced> {
        let dim = self.dim;
        // Augmented RREF of the equality system.
        let mut rows: Vec<Vec<Rat>> = self
            .eqs
            .iter()
            .map(|(a, b)| {
                let mut r = a.0.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let pivots = rref(&mut rows, dim);
        for row in &rows {
            if row[..dim].iter().all(Rat::is_zero) && !row[dim].is_zero() {
                return None;
            }
        }
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..dim).filter(|c| !pivot_set.contains(c)).collect();
        // Particular solution: free vars zero.
        let mut particular = vec![Rat::zero(); dim];
        for (r, &pc) in pivots.iter().enumerate() {
            particular[pc] = rows[r][dim].clone();
        }
        // Null-space basis: one column per free var.
        let mut basis: Vec<Vec<Rat>> = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rat::zero(); dim];
            v[fc] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][fc].clone();
            }
            basis.push(v);
        }
        // Transform inequalities into the free coordinates.
        let ineqs = self
            .ineqs
            .iter()
            .map(|(a, b)| {
                let coeffs: Vec<Rat> = basis.iter().map(|col| dot_slice(&a.0, col)).collect();
                let off = b - dot_slice(&a.0, &particular);
                (coeffs, off)
            })
            .collect();
        Some(Reduced {
            particular,
            basis,
            free_dim: free.len(),
            ineqs,
        })
    }
}

struct Reduced {
    particular: Vec<Rat>,
    basis: Vec<Vec<Rat>>,
    free_dim: usize,
    ineqs: Vec<(Vec<Rat>, Rat)>,
}

impl Reduced {
    fn lift(&self, y: &[Rat]) -> RatVec {
        let mut x = self.particular.clone();
        for (col, yi) in self.basis.iter().zip(y) {
            for (xe, ce) in x.iter_mut().zip(col) {
                *xe += ce * yi;
            }
        }
        RatVec(x)
    }
}

fn dot_slice(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Row-reduce `rows` over the first `ncols` columns (extra columns ride
/// along); returns the pivot column indices.
fn rref(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for e in rows[r].iter_mut() {
            *e *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let (head, tail) = rows.split_at_mut(std::cmp::max(i, r));
                let (src, dst) = if i < r {
                    (&tail[0], &mut head[i])
                } else {
                    (&head[r], &mut tail[0])
                };
                for (de, se) in dst.iter_mut().zip(src.iter()) {
                    *de -= &factor * se;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solve a square system exactly; None when singular.
fn solve_square(mat: Vec<Vec<Rat>>, rhs: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = rhs.len();
    let mut rows: Vec<Vec<Rat>> = mat
        .into_iter()
        .zip(rhs)
        .map(|(mut r, b)| {
            r.push(b);
            r
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[r][n].clone();
    }
    Some(x)
}

/// Fourier-Motzkin feasibility for `a . x <= b` systems.
fn fm_feasible(mut sys: Vec<(Vec<Rat>, Rat)>, dim: usize) -> bool {
    for _ in 0..dim {
        let mut pos: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut neg: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut rest: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
        for (mut a, b) in sys {
            let lead = a.pop().expect("dimension bookkeeping");
            if lead.is_zero() {
                if a.iter().all(Rat::is_zero) {
                    if b.is_negative() {
                        return false;
                    }
                } else {
                    rest.insert(normalize_row(a, b));
                }
            } else if lead.is_positive() {
                pos.push((a, b / lead));
            } else {
                let scale = -lead;
                neg.push((
                    a.iter().map(|c| c / &scale).collect(),
                    b / scale,
                ));
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                // x_v <= pb - pa.x and -x_v <= nb - na.x combine to
                // -(nb - na.x) <= pb - pa.x.
                let a: Vec<Rat> = pa.iter().zip(na).map(|(p, q)| p + q).collect();
                let b = pb + nb;
                if a.iter().all(Rat::is_zero) {
                    if b.is_negative() {
                        return false;
                    }
                } else {
                    rest.insert(normalize_row(a, b));
                }
            }
        }
        sys = rest.into_iter().collect();
    }
    sys.iter().all(|(_, b)| !b.is_negative())
}

fn normalize_row(a: Vec<Rat>, b: Rat) -> (Vec<Rat>, Rat) {
    let Some(first) = a.iter().find(|c| !c.is_zero()) else {
        return (a, b);
    };
    let scale = first.abs();
    (
        a.iter().map(|c| c / &scale).collect(),
        b / scale,
    )
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    itertools::Itertools::combinations(0..n, k)
}
