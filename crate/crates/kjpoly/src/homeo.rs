//! Special points alpha/beta, the radial maps omega and eta onto the zero
//! face of J^a(n), the Stasheff degeneracies d^S, and the parameter
//! rescalings f_{a,b} with their pointwise projection pi.
//!
//! omega and d_s are both defined by a radial rule: a point is written as a
//! convex combination of a fixed interior center and a boundary exit point,
//! the exit point is factored through a boundary insertion, and the rule is
//! applied recursively to the factors. Exact rational arithmetic makes the
//! recursion reproducible, and well-definedness across different boundary
//! factorizations is covered by tests.

use crate::associahedron::{boundary_insert, face_decompose, k_hrep, KPoint};
use crate::multiplihedron::{
    compositions, delta_graft, delta_insert, delta_rel, embed_in_k, rel_graft_decompose_at,
    JPoint,
};
use crate::ratgeom::{rat, Rat, RatVec};
use crate::{Error, Result};
use num_traits::{One, Zero};

fn check_param(a: &Rat) -> Result<()> {
    if a < &Rat::zero() || a > &Rat::one() {
        return Err(Error::Domain(format!("parameter {a} outside [0, 1]")));
    }
    Ok(())
}

/// The radial center alpha_a(n) = (0, 1 - a/2, 1, ..., 1, 1 + a/2) of K(n),
/// interior for n >= 3 and 0 < a <= 1. K(2) is a single point, so
/// alpha_a(2) = (0, 1) regardless of a.
pub fn alpha(a: &Rat, n: usize) -> Result<KPoint> {
    check_param(a)?;
    if n < 2 {
        return Err(Error::Domain(
            "the radial center needs arity at least 2".into(),
        ));
    }
    if n == 2 {
        return Ok(KPoint::binary());
    }
    let half = a / rat(2, 1);
    let mut coords = Vec::with_capacity(n);
    coords.push(Rat::zero());
    coords.push(Rat::one() - &half);
    coords.extend(std::iter::repeat(Rat::one()).take(n - 3));
    coords.push(Rat::one() + &half);
    KPoint::new(RatVec(coords))
}

/// The cone point beta_a(n) = (a, 1, ..., 1) of the zero face of J^a(n).
pub fn beta(a: &Rat, n: usize) -> Result<JPoint> {
    check_param(a)?;
    if n == 0 {
        return Err(Error::Domain("beta needs arity at least 1".into()));
    }
    let mut coords = Vec::with_capacity(n);
    coords.push(a.clone());
    coords.extend(std::iter::repeat(Rat::one()).take(n - 1));
    JPoint::new(a.clone(), RatVec(coords))
}

/// omega^a_n : K(n) -> J^a_0(n), the radial map sending alpha_a(n) to
/// beta_a(n) and a boundary insertion del_k(tau)(rho) to
/// delta^a_k(tau)(omega^a(rho)); interior points follow the convex rule
/// omega(t alpha + (1-t) e) = t beta + (1-t) omega(e).
pub fn omega(a: &Rat, sigma: &KPoint) -> Result<JPoint> {
    check_param(a)?;
    let n = sigma.n();
    if a.is_zero() {
        return JPoint::new(Rat::zero(), sigma.coords().clone());
    }
    if n == 1 {
        return JPoint::single(a.clone());
    }
    if n == 2 {
        return beta(a, 2);
    }
    let center = alpha(a, n)?;
    if sigma == &center {
        return beta(a, n);
    }
    let (exit, t) = k_hrep(n)?.ray_exit(center.coords(), sigma.coords())?;
    let exit = KPoint::new(exit)?;
    let (k, _, _, rho, tau) = face_decompose(&exit)?;
    let boundary_value = delta_insert(&omega(a, &rho)?, &tau, k)?;
    let target = beta(a, n)?;
    JPoint::new(
        a.clone(),
        target.coords().convex(boundary_value.coords(), &t),
    )
}

/// The sweep eta^a_n(t, sigma) = omega^{at}_n(sigma), a path from the
/// parameter-0 copy of sigma at t = 0 to its omega^a image at t = 1.
pub fn eta(a: &Rat, t: &Rat, sigma: &KPoint) -> Result<JPoint> {
    check_param(a)?;
    if t < &Rat::zero() || t > &Rat::one() {
        return Err(Error::Domain(format!("sweep time {t} outside [0, 1]")));
    }
    omega(&(a * t), sigma)
}

/// The arity-raising sweep eta^1_n(t, sigma) in K(n+1): the omega^t image
/// pushed through the embedding of J^t(n) into K(n+1).
pub fn eta1(t: &Rat, sigma: &KPoint) -> Result<KPoint> {
    if t < &Rat::zero() || t > &Rat::one() {
        return Err(Error::Domain(format!("sweep time {t} outside [0, 1]")));
    }
    Ok(embed_in_k(&omega(t, sigma)?))
}

/// The Stasheff degeneracy d^S_j : K(n) -> K(n-1), defined radially from
/// alpha(n) = alpha_1(n) with boundary values forced by the insertion case
/// table: the slot j is pushed into whichever factor of the exit point's
/// factorization carries it.
pub fn d_s(j: usize, sigma: &KPoint) -> Result<KPoint> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::Domain(
            "no degeneracies below arity 2".into(),
        ));
    }
    if j == 0 || j > n {
        return Err(Error::IndexRange { index: j, max: n });
    }
    if n == 2 {
        return Ok(KPoint::unit());
    }
    let one = Rat::one();
    let center = alpha(&one, n)?;
    if sigma == &center {
        return alpha(&one, n - 1);
    }
    let (exit, t) = k_hrep(n)?.ray_exit(center.coords(), sigma.coords())?;
    let exit = KPoint::new(exit)?;
    let boundary_value = d_s_boundary(j, &exit)?;
    let target = alpha(&one, n - 1)?;
    KPoint::new(target.coords().convex(boundary_value.coords(), &t))
}

fn d_s_boundary(j: usize, p: &KPoint) -> Result<KPoint> {
    let (k, _, t, rho, tau) = face_decompose(p)?;
    if j < k {
        boundary_insert(&d_s(j, &rho)?, &tau, k - 1)
    } else if j < k + t {
        boundary_insert(&rho, &d_s(j - k + 1, &tau)?, k)
    } else {
        boundary_insert(&d_s(j - t + 1, &rho)?, &tau, k)
    }
}

/// A formal delta-decomposition of a J point. Rescaling acts on these
/// expressions rather than on raw coordinates, because the defining equation
/// of f_{a,b} transforms decompositions, not points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormalJExpr {
    /// A leaf point used as-is.
    BasePoint(JPoint),
    /// delta insertion of a K factor at slot j into the inner expression.
    DeltaJ {
        j: usize,
        inner: Box<FormalJExpr>,
        factor: KPoint,
    },
    /// Graft of the blocks (each at the composite's own parameter) under a
    /// K outer factor.
    DeltaGraft {
        outer: KPoint,
        blocks: Vec<FormalJExpr>,
    },
    /// Relative graft: the outer factor is itself a J expression at the
    /// residual parameter.
    DeltaRel {
        outer: Box<FormalJExpr>,
        blocks: Vec<FormalJExpr>,
    },
}

impl FormalJExpr {
    /// Evaluate the expression to the J point it denotes.
    pub fn eval(&self) -> Result<JPoint> {
        match self {
            FormalJExpr::BasePoint(p) => Ok(p.clone()),
            FormalJExpr::DeltaJ { j, inner, factor } => {
                delta_insert(&inner.eval()?, factor, *j)
            }
            FormalJExpr::DeltaGraft { outer, blocks } => {
                let bs = blocks.iter().map(|b| b.eval()).collect::<Result<Vec<_>>>()?;
                delta_graft(outer, &bs)
            }
            FormalJExpr::DeltaRel { outer, blocks } => {
                let bs = blocks.iter().map(|b| b.eval()).collect::<Result<Vec<_>>>()?;
                delta_rel(&outer.eval()?, &bs)
            }
        }
    }
}

/// beta_a(n) as a formal graft of singleton leaves over beta_0(n); every
/// leaf has arity 1, so the expression stays rescalable.
pub fn beta_expr(a: &Rat, n: usize) -> Result<FormalJExpr> {
    check_param(a)?;
    if n == 0 {
        return Err(Error::Domain("beta needs arity at least 1".into()));
    }
    if n == 1 {
        return Ok(FormalJExpr::BasePoint(JPoint::single(a.clone())?));
    }
    let mut coords = vec![Rat::zero()];
    coords.extend(std::iter::repeat(Rat::one()).take(n - 1));
    let outer = KPoint::new(RatVec(coords))?;
    let blocks = (0..n)
        .map(|_| Ok(FormalJExpr::BasePoint(JPoint::single(a.clone())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FormalJExpr::DeltaGraft { outer, blocks })
}

/// Rescale a formal decomposition from parameter a to parameter b: every
/// sweep parameter epsilon in the expression is multiplied by b/a, and
/// relative outer factors are moved to the residual parameter that keeps the
/// composite at b.
pub fn f_ab(a: &Rat, b: &Rat, expr: &FormalJExpr) -> Result<FormalJExpr> {
    if a <= &Rat::zero() || a >= &Rat::one() {
        return Err(Error::Domain(format!(
            "rescaling source parameter {a} must lie strictly between 0 and 1"
        )));
    }
    check_param(b)?;
    let p = expr.eval()?;
    if p.param() != a {
        return Err(Error::Domain(format!(
            "expression evaluates at parameter {}, not {a}",
            p.param()
        )));
    }
    rescale(a, b, expr)
}

fn rescale(a: &Rat, b: &Rat, expr: &FormalJExpr) -> Result<FormalJExpr> {
    if a == b {
        return Ok(expr.clone());
    }
    if a.is_zero() {
        return Err(Error::Domain(
            "a parameter-0 factor cannot be rescaled to a nonzero parameter".into(),
        ));
    }
    match expr {
        FormalJExpr::BasePoint(p) => {
            if p.n() == 1 {
                Ok(FormalJExpr::BasePoint(JPoint::single(b.clone())?))
            } else {
                Err(Error::Domain(
                    "an opaque factor of arity > 1 cannot be rescaled; decompose it first"
                        .into(),
                ))
            }
        }
        FormalJExpr::DeltaJ { j, inner, factor } => Ok(FormalJExpr::DeltaJ {
            j: *j,
            inner: Box::new(rescale(a, b, inner)?),
            factor: factor.clone(),
        }),
        FormalJExpr::DeltaGraft { outer, blocks } => Ok(FormalJExpr::DeltaGraft {
            outer: outer.clone(),
            blocks: blocks
                .iter()
                .map(|e| rescale(a, b, e))
                .collect::<Result<Vec<_>>>()?,
        }),
        FormalJExpr::DeltaRel { outer, blocks } => {
            let first = blocks.first().ok_or_else(|| {
                Error::Domain("a relative graft needs at least one block".into())
            })?;
            let eps = first.eval()?.param().clone();
            let eps_new = &eps * b / a;
            let r_old = outer.eval()?.param().clone();
            let denom = Rat::one() - &eps_new;
            let r_new = if denom.is_zero() {
                Rat::zero()
            } else {
                (b - &eps_new) / denom
            };
            Ok(FormalJExpr::DeltaRel {
                outer: Box::new(rescale(&r_old, &r_new, outer)?),
                blocks: blocks
                    .iter()
                    .map(|e| rescale(&eps, &eps_new, e))
                    .collect::<Result<Vec<_>>>()?,
            })
        }
    }
}

/// The pointwise projection pi : J^a(n) -> K(n) (the b = 0 rescaling). The
/// point is sliced at its maximal prefix excess: excess zero means the point
/// is a K point with the parameter padded onto the last coordinate, and
/// otherwise the point splits as a relative graft whose blocks sit exactly
/// at the excess, with the recursion grafting the images back together.
pub fn pi_geometric(p: &JPoint) -> Result<KPoint> {
    let a = p.param();
    if a.is_zero() || a >= &Rat::one() {
        return Err(Error::Domain(format!(
            "projection needs a parameter strictly between 0 and 1, got {a}"
        )));
    }
    pi_inner(p)
}

fn pi_inner(p: &JPoint) -> Result<KPoint> {
    let n = p.n();
    let prefixes = p.coords().prefix_sums();
    let mut eps = Rat::zero();
    for j in 1..n {
        let e = &prefixes[j - 1] - rat(j as i64 - 1, 1);
        if e > eps {
            eps = e;
        }
    }
    if eps.is_zero() {
        let mut coords = p.coords().0.clone();
        coords[n - 1] = &coords[n - 1] - p.param();
        return KPoint::new(RatVec(coords));
    }
    for t in 2..=n {
        for parts in compositions(n, t) {
            let Some((outer, blocks)) = rel_graft_decompose_at(p, &eps, &parts) else {
                continue;
            };
            let tau = pi_inner(&outer)?;
            let kblocks = blocks
                .iter()
                .map(|b| pi_inner(b).and_then(|k| JPoint::new(Rat::zero(), k.into_coords())))
                .collect::<Result<Vec<_>>>()?;
            let grafted = delta_graft(&tau, &kblocks)?;
            return KPoint::new(grafted.into_coords());
        }
    }
    Err(Error::Domain(format!(
        "{p} admits no graft decomposition at its maximal prefix excess"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associahedron::{enumerate_decompositions, k_vertices};
    use crate::degeneracy::{d_j, d_k, interpolate_degeneracy};
    use crate::multiplihedron::{j_face_membership, shift_embed, JFace};
    use crate::trees::j_lattice;
    use std::collections::BTreeSet;

    fn kp(coords: &[(i64, i64)]) -> KPoint {
        KPoint::new(RatVec(coords.iter().map(|&(n, d)| rat(n, d)).collect())).unwrap()
    }

    fn jp(a: (i64, i64), coords: &[(i64, i64)]) -> JPoint {
        JPoint::new(
            rat(a.0, a.1),
            RatVec(coords.iter().map(|&(n, d)| rat(n, d)).collect()),
        )
        .unwrap()
    }

    fn half() -> Rat {
        rat(1, 2)
    }

    /// Rational interior-ish samples of K(n): convex mixes of lattice cells.
    fn k_samples(n: usize) -> Vec<KPoint> {
        let cells: Vec<KPoint> = k_vertices(n).unwrap().into_iter().collect();
        let mut out = cells.clone();
        let weights = [rat(1, 3), rat(2, 5), rat(4, 7)];
        for (i, w) in weights.iter().enumerate() {
            let x = &cells[i % cells.len()];
            let y = &cells[(i + 1) % cells.len()];
            out.push(KPoint::new(x.coords().convex(y.coords(), w)).unwrap());
        }
        out
    }

    #[test]
    fn special_points() {
        assert_eq!(alpha(&Rat::one(), 3).unwrap(), kp(&[(0, 1), (1, 2), (3, 2)]));
        assert_eq!(
            alpha(&half(), 4).unwrap(),
            kp(&[(0, 1), (3, 4), (1, 1), (5, 4)])
        );
        assert_eq!(alpha(&half(), 2).unwrap(), kp(&[(0, 1), (1, 1)]));
        assert!(alpha(&rat(3, 2), 3).is_err());
        assert!(alpha(&half(), 1).is_err());
        for n in 3..=6 {
            let a = alpha(&Rat::one(), n).unwrap();
            assert!(!crate::associahedron::is_boundary(&a), "alpha({n}) interior");
        }
        assert_eq!(beta(&half(), 2).unwrap(), jp((1, 2), &[(1, 2), (1, 1)]));
        assert_eq!(beta(&half(), 1).unwrap(), JPoint::single(half()).unwrap());
        assert_eq!(
            beta(&Rat::zero(), 4).unwrap().coords(),
            kp(&[(0, 1), (1, 1), (1, 1), (1, 1)]).coords()
        );
    }

    #[test]
    fn omega_examples() {
        let a = half();
        assert_eq!(omega(&a, &KPoint::binary()).unwrap(), beta(&a, 2).unwrap());
        assert_eq!(
            omega(&a, &kp(&[(0, 1), (1, 1), (1, 1)])).unwrap(),
            jp((1, 2), &[(0, 1), (3, 2), (1, 1)])
        );
        // omega^0 is the identity on coordinates.
        for sigma in k_samples(4) {
            let img = omega(&Rat::zero(), &sigma).unwrap();
            assert_eq!(img.coords(), sigma.coords());
        }
        // The center goes to the cone point.
        for n in 3..=5 {
            let c = alpha(&a, n).unwrap();
            assert_eq!(omega(&a, &c).unwrap(), beta(&a, n).unwrap());
        }
        // Images land on the zero face.
        for n in 3..=4 {
            for sigma in k_samples(n) {
                let img = omega(&a, &sigma).unwrap();
                assert!(
                    j_face_membership(&img, &JFace::SpecialZero).unwrap(),
                    "omega({sigma}) = {img} off the zero face"
                );
            }
        }
    }

    #[test]
    fn omega_respects_boundary_insertion() {
        // omega(del_k(tau)(rho)) = delta_k(tau)(omega(rho)) on every
        // admissible factorization of every lattice boundary point.
        for a in [rat(1, 4), half(), Rat::one()] {
            for n in [3usize, 4] {
                for sigma in k_vertices(n).unwrap() {
                    if !crate::associahedron::is_boundary(&sigma) {
                        continue;
                    }
                    let img = omega(&a, &sigma).unwrap();
                    for (k, _, _, rho, tau) in enumerate_decompositions(&sigma) {
                        let rhs = delta_insert(&omega(&a, &rho).unwrap(), &tau, k).unwrap();
                        assert_eq!(img, rhs, "omega mismatch at {sigma}, slot {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn omega_injective_on_lattice() {
        let a = half();
        for n in 3..=4 {
            let cells = k_vertices(n).unwrap();
            let lattice = j_lattice(n).unwrap();
            let mut images = BTreeSet::new();
            for sigma in &cells {
                let img = omega(&a, sigma).unwrap();
                assert!(
                    lattice.contains(img.coords()),
                    "omega({sigma}) = {img} is not a lattice cell of J({n})"
                );
                images.insert(img);
            }
            assert_eq!(images.len(), cells.len(), "omega collides on K_L({n})");
        }
    }

    #[test]
    fn eta_endpoints() {
        let a = half();
        for sigma in k_samples(3) {
            // t = 0 lands at the parameter-0 copy of sigma.
            let at0 = eta(&a, &Rat::zero(), &sigma).unwrap();
            assert_eq!(at0.coords(), sigma.coords());
            assert!(at0.param().is_zero());
            // t = 1 is the omega image.
            assert_eq!(eta(&a, &Rat::one(), &sigma).unwrap(), omega(&a, &sigma).unwrap());
            // eta1 at t = 0 is the plain embedding with a unit pad.
            let e0 = eta1(&Rat::zero(), &sigma).unwrap();
            let mut expect = vec![Rat::zero()];
            expect.extend_from_slice(&sigma.coords().0[..sigma.n() - 1]);
            expect.push(&sigma.coords()[sigma.n() - 1] + Rat::one());
            assert_eq!(e0.coords(), &RatVec(expect));
        }
        assert!(eta(&a, &rat(3, 2), &KPoint::binary()).is_err());
    }

    #[test]
    fn ds_examples() {
        let one = Rat::one();
        for n in 3..=5 {
            let c = alpha(&one, n).unwrap();
            for j in 1..=n {
                assert_eq!(d_s(j, &c).unwrap(), alpha(&one, n - 1).unwrap());
            }
        }
        assert_eq!(d_s(1, &kp(&[(0, 1), (1, 1), (1, 1)])).unwrap(), KPoint::binary());
        // On K(3) the endpoints are pure boundary points, where d^S and d^K
        // are forced to the same case table.
        for sigma in [kp(&[(0, 1), (1, 1), (1, 1)]), kp(&[(0, 1), (0, 1), (2, 1)])] {
            for j in 1..=3 {
                assert_eq!(d_s(j, &sigma).unwrap(), d_k(j, &sigma).unwrap());
            }
        }
        assert_eq!(d_s(1, &KPoint::binary()).unwrap(), KPoint::unit());
        assert!(d_s(5, &kp(&[(0, 1), (1, 1), (1, 1)])).is_err());
    }

    #[test]
    fn ds_well_defined_on_factorizations() {
        // Boundary values of d^S agree across every factorization of the
        // exit point, not just the scanned one.
        for n in [4usize, 5] {
            for sigma in k_vertices(n).unwrap() {
                if !crate::associahedron::is_boundary(&sigma) {
                    continue;
                }
                for j in 1..=n {
                    let via_scan = d_s(j, &sigma).unwrap();
                    for (k, _, t, rho, tau) in enumerate_decompositions(&sigma) {
                        let direct = if j < k {
                            boundary_insert(&d_s(j, &rho).unwrap(), &tau, k - 1).unwrap()
                        } else if j < k + t {
                            boundary_insert(&rho, &d_s(j - k + 1, &tau).unwrap(), k).unwrap()
                        } else {
                            boundary_insert(&d_s(j - t + 1, &rho).unwrap(), &tau, k).unwrap()
                        };
                        assert_eq!(via_scan, direct, "d^S_{j} differs at {sigma} via slot {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn ds_interpolates_with_dk() {
        // The two degeneracy sets span an exact affine family.
        let sigma = kp(&[(0, 1), (1, 2), (1, 2), (2, 1)]);
        for j in 1..=4 {
            let at_k = interpolate_degeneracy(&Rat::zero(), j, d_k, d_s, &sigma).unwrap();
            assert_eq!(at_k, d_k(j, &sigma).unwrap());
            let at_s = interpolate_degeneracy(&Rat::one(), j, d_k, d_s, &sigma).unwrap();
            assert_eq!(at_s, d_s(j, &sigma).unwrap());
            let mid = interpolate_degeneracy(&half(), j, d_k, d_s, &sigma).unwrap();
            let expect = d_s(j, &sigma)
                .unwrap()
                .coords()
                .convex(d_k(j, &sigma).unwrap().coords(), &half());
            assert_eq!(mid.coords(), &expect);
        }
    }

    #[test]
    fn omega_intertwines_degeneracies() {
        // d^{J,a}_j compose omega = omega compose d^S_j for 2 <= j <= n-1, and
        // the arity-raising version shifts the slot by one. The top slot j = n
        // genuinely fails: at sigma = (0,1,1) the right side is forced through
        // the one-point K(2) while d^J_n is not constant on the matching face.
        for a in [rat(1, 4), half()] {
            for n in [3usize, 4] {
                for sigma in k_samples(n) {
                    for j in 2..n {
                        let lhs = d_j(j, &omega(&a, &sigma).unwrap()).unwrap();
                        let rhs = omega(&a, &d_s(j, &sigma).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "slot {j} at {sigma}, a = {a}");
                    }
                }
            }
        }
        // The raising version fails at both end slots: j = 1 mirrors the d_1
        // exception of the unit-interval family, j = n collapses as above.
        for n in [3usize, 4] {
            for sigma in k_samples(n) {
                for j in 2..n {
                    let lhs = d_k(j + 1, &eta1(&Rat::one(), &sigma).unwrap()).unwrap();
                    let rhs = eta1(&Rat::one(), &d_s(j, &sigma).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "raised slot {j} at {sigma}");
                }
            }
        }
    }

    #[test]
    fn pi_examples() {
        let a = half();
        for n in 2..=5 {
            let b = beta(&a, n).unwrap();
            let mut expect = vec![Rat::zero()];
            expect.extend(std::iter::repeat(Rat::one()).take(n - 1));
            assert_eq!(pi_geometric(&b).unwrap().coords(), &RatVec(expect));
        }
        // Shifted K points come straight back.
        for n in [3usize, 4] {
            for kappa in k_samples(n) {
                let p = shift_embed(
                    &JPoint::new(Rat::zero(), kappa.coords().clone()).unwrap(),
                    &a,
                )
                .unwrap();
                assert_eq!(pi_geometric(&p).unwrap(), kappa);
            }
        }
        assert!(pi_geometric(&jp((0, 1), &[(0, 1), (1, 1), (1, 1)])).is_err());
    }

    #[test]
    fn pi_collapses_beta_grafts() {
        // pi(delta^a(beta, ..., beta)(tau)) = tau.
        for a in [rat(1, 4), half(), rat(3, 4)] {
            for n in [3usize, 4] {
                for tau in k_samples(n) {
                    let blocks: Vec<JPoint> =
                        (0..n).map(|_| JPoint::single(a.clone()).unwrap()).collect();
                    let p = delta_graft(&tau, &blocks).unwrap();
                    assert_eq!(pi_geometric(&p).unwrap(), tau, "a = {a}");
                }
            }
        }
    }

    #[test]
    fn pi_intertwines_delta_and_degeneracies() {
        let a = half();
        // Sample J points: omega images and delta composites over them.
        let mut samples: Vec<JPoint> = Vec::new();
        for n in [2usize, 3] {
            for sigma in k_samples(n) {
                samples.push(omega(&a, &sigma).unwrap());
            }
        }
        samples.push(jp((1, 2), &[(1, 4), (1, 1), (5, 4)]));
        samples.push(jp((1, 2), &[(0, 1), (1, 2), (2, 1)]));
        for rho in &samples {
            let r = rho.n();
            for j in 1..=r {
                for tau in [KPoint::binary(), kp(&[(0, 1), (1, 1), (1, 1)])] {
                    let lhs = pi_geometric(&delta_insert(rho, &tau, j).unwrap()).unwrap();
                    let rhs =
                        boundary_insert(&pi_geometric(rho).unwrap(), &tau, j).unwrap();
                    assert_eq!(lhs, rhs, "insertion slot {j} at {rho}");
                }
            }
            if r >= 2 {
                for k in 1..=r {
                    let lhs = d_k(k, &pi_geometric(rho).unwrap()).unwrap();
                    let rhs = pi_geometric(&d_j(k, rho).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "degeneracy slot {k} at {rho}");
                }
            }
        }
    }

    #[test]
    fn pi_independent_of_decomposition_choice() {
        // Every admissible relative-graft split at the maximal excess yields
        // the same projection.
        let points = [
            jp((1, 2), &[(1, 2), (1, 1), (1, 1)]),
            jp((1, 2), &[(1, 4), (1, 1), (5, 4)]),
            jp((3, 4), &[(1, 2), (1, 1), (5, 4), (1, 1)]),
        ];
        for p in &points {
            let n = p.n();
            let reference = pi_geometric(p).unwrap();
            let prefixes = p.coords().prefix_sums();
            let mut eps = Rat::zero();
            for j in 1..n {
                let e = &prefixes[j - 1] - rat(j as i64 - 1, 1);
                if e > eps {
                    eps = e;
                }
            }
            assert!(!eps.is_zero());
            let mut found = 0;
            for t in 2..=n {
                for parts in compositions(n, t) {
                    let Some((outer, blocks)) = rel_graft_decompose_at(p, &eps, &parts)
                    else {
                        continue;
                    };
                    found += 1;
                    let tau = if outer.param().is_zero() {
                        KPoint::new(outer.coords().clone()).unwrap()
                    } else {
                        pi_geometric(&outer).unwrap()
                    };
                    let kblocks = blocks
                        .iter()
                        .map(|b| {
                            let k = if b.param().is_zero() {
                                KPoint::new(b.coords().clone()).unwrap()
                            } else {
                                pi_geometric(b).unwrap()
                            };
                            JPoint::new(Rat::zero(), k.into_coords()).unwrap()
                        })
                        .collect::<Vec<_>>();
                    let assembled =
                        KPoint::new(delta_graft(&tau, &kblocks).unwrap().into_coords())
                            .unwrap();
                    assert_eq!(assembled, reference, "split {parts:?} of {p}");
                }
            }
            assert!(found >= 1, "no admissible split for {p}");
        }
    }

    #[test]
    fn f_ab_examples() {
        let a = half();
        // b = a leaves the evaluation unchanged.
        let e = beta_expr(&a, 3).unwrap();
        assert_eq!(f_ab(&a, &a, &e).unwrap().eval().unwrap(), e.eval().unwrap());
        // b = 0 collapses a beta graft to its outer K factor.
        for tau in k_samples(3) {
            let blocks = (0..3).map(|_| beta_expr(&a, 1).unwrap()).collect();
            let g = FormalJExpr::DeltaGraft {
                outer: tau.clone(),
                blocks,
            };
            let collapsed = f_ab(&a, &Rat::zero(), &g).unwrap().eval().unwrap();
            assert_eq!(collapsed.coords(), tau.coords());
            assert!(collapsed.param().is_zero());
        }
        // Rescaling a beta expression gives the beta at the new parameter.
        for n in [1usize, 2, 4] {
            let out = f_ab(&a, &rat(1, 4), &beta_expr(&a, n).unwrap()).unwrap();
            assert_eq!(out.eval().unwrap(), beta(&rat(1, 4), n).unwrap());
        }
        // Opaque interior leaves cannot be rescaled.
        let opaque = FormalJExpr::BasePoint(jp((1, 2), &[(1, 4), (1, 1), (5, 4)]));
        assert!(f_ab(&a, &rat(1, 4), &opaque).is_err());
    }

    #[test]
    fn f_ab_respects_insertions_and_grafts() {
        let a = half();
        let b = rat(1, 4);
        // Insertion factors pass through untouched.
        let inner = beta_expr(&a, 2).unwrap();
        let e = FormalJExpr::DeltaJ {
            j: 1,
            inner: Box::new(inner.clone()),
            factor: KPoint::binary(),
        };
        let lhs = f_ab(&a, &b, &e).unwrap().eval().unwrap();
        let rhs = delta_insert(
            &f_ab(&a, &b, &inner).unwrap().eval().unwrap(),
            &KPoint::binary(),
            1,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        // Graft blocks rescale individually.
        let tau = kp(&[(0, 1), (1, 1), (1, 1)]);
        let blocks: Vec<FormalJExpr> = vec![
            beta_expr(&a, 1).unwrap(),
            beta_expr(&a, 2).unwrap(),
            beta_expr(&a, 1).unwrap(),
        ];
        let g = FormalJExpr::DeltaGraft {
            outer: tau.clone(),
            blocks: blocks.clone(),
        };
        let lhs = f_ab(&a, &b, &g).unwrap().eval().unwrap();
        let rescaled: Vec<JPoint> = blocks
            .iter()
            .map(|e| f_ab(&a, &b, e).unwrap().eval().unwrap())
            .collect();
        assert_eq!(lhs, delta_graft(&tau, &rescaled).unwrap());
    }

    #[test]
    fn f_ab_functorial_on_relative_grafts() {
        // f_{b,c} after f_{a,b} equals f_{a,c}, including the relative-outer
        // parameter bookkeeping.
        let a = half();
        let b = rat(1, 4);
        let c = rat(3, 4);
        let eps = rat(1, 4);
        // Composite at a: blocks at eps under an outer at (a-eps)/(1-eps).
        let r_rel = (&a - &eps) / (Rat::one() - &eps);
        let outer = beta_expr(&r_rel, 2).unwrap();
        let blocks = vec![beta_expr(&eps, 2).unwrap(), beta_expr(&eps, 1).unwrap()];
        let e = FormalJExpr::DeltaRel {
            outer: Box::new(outer),
            blocks,
        };
        assert_eq!(e.eval().unwrap().param(), &a);
        let via_b = f_ab(&b, &c, &f_ab(&a, &b, &e).unwrap()).unwrap();
        let direct = f_ab(&a, &c, &e).unwrap();
        assert_eq!(via_b.eval().unwrap(), direct.eval().unwrap());
        assert_eq!(via_b, direct);
        // And the b = 0 evaluation matches the pointwise projection.
        let projected = f_ab(&a, &Rat::zero(), &e).unwrap().eval().unwrap();
        assert_eq!(
            KPoint::new(projected.into_coords()).unwrap(),
            pi_geometric(&e.eval().unwrap()).unwrap()
        );
    }

    #[test]
    fn f_a0_matches_pi_on_expressions() {
        let a = half();
        let mut exprs: Vec<FormalJExpr> = vec![
            beta_expr(&a, 3).unwrap(),
            beta_expr(&a, 4).unwrap(),
        ];
        for tau in k_samples(3).into_iter().take(3) {
            exprs.push(FormalJExpr::DeltaGraft {
                outer: tau,
                blocks: vec![
                    beta_expr(&a, 2).unwrap(),
                    beta_expr(&a, 1).unwrap(),
                    beta_expr(&a, 1).unwrap(),
                ],
            });
        }
        exprs.push(FormalJExpr::DeltaJ {
            j: 2,
            inner: Box::new(beta_expr(&a, 2).unwrap()),
            factor: KPoint::binary(),
        });
        for e in &exprs {
            let p = e.eval().unwrap();
            let via_f = f_ab(&a, &Rat::zero(), e).unwrap().eval().unwrap();
            assert_eq!(
                KPoint::new(via_f.into_coords()).unwrap(),
                pi_geometric(&p).unwrap(),
                "expression over {p}"
            );
        }
    }
}
