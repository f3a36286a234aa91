//! Operadic categories built on the polytope families.
//!
//! A morphism is a tuple of polytope points, one factor per source slot,
//! optionally preceded by a strictly increasing list of degeneracy indices.
//! Composition rewrites any formal product back into that normal form:
//! tuples compose by slotwise insertion (or grafting, across the plain and
//! primed sides), degeneracy indices push through tuples by the case split
//! below, and two index lists merge by a shift rule.  Six canonical carrier
//! representations act on K(n+2) / J(n+2) points by operator chains and give
//! an independent check of every composition law.

use crate::associahedron::{boundary_insert, KPoint};
use crate::degeneracy::{d_j, d_k};
use crate::multiplihedron::{delta_graft, delta_insert, j_face_membership, JFace, JPoint};
use crate::ratgeom::rat;
use crate::{Error, Rat, Result};

/// Tuple morphism with K factors: `source + 2` factors whose arities sum to
/// `target + 2`.  Composition inserts the outer tuple's factors into the
/// inner tuple's slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMorphism {
    source: usize,
    target: usize,
    factors: Vec<KPoint>,
}

impl KMorphism {
    pub fn new(factors: Vec<KPoint>) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::Domain(format!(
                "a factor tuple needs at least two entries, got {}",
                factors.len()
            )));
        }
        let source = factors.len() - 2;
        let total: usize = factors.iter().map(|f| f.n()).sum();
        Ok(KMorphism {
            source,
            target: total - 2,
            factors,
        })
    }

    /// The identity on level `m`: m + 2 arity-1 factors.
    pub fn identity(m: usize) -> Self {
        KMorphism {
            source: m,
            target: m,
            factors: vec![KPoint::unit(); m + 2],
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn factors(&self) -> &[KPoint] {
        &self.factors
    }
}

/// Tuple morphism with J factors, always from a plain level to a primed one.
/// All factors share a single parameter (1/2 in the canonical category).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JMorphism {
    source: usize,
    target: usize,
    factors: Vec<JPoint>,
}

impl JMorphism {
    pub fn new(factors: Vec<JPoint>) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::Domain(format!(
                "a factor tuple needs at least two entries, got {}",
                factors.len()
            )));
        }
        let param = factors[0].param().clone();
        if factors.iter().any(|f| f.param() != &param) {
            return Err(Error::Domain(
                "all factors of a J tuple must share one parameter".into(),
            ));
        }
        let source = factors.len() - 2;
        let total: usize = factors.iter().map(|f| f.n()).sum();
        Ok(JMorphism {
            source,
            target: total - 2,
            factors,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn factors(&self) -> &[JPoint] {
        &self.factors
    }

    pub fn param(&self) -> &Rat {
        self.factors[0].param()
    }
}

/// Splits `outer` into consecutive blocks sized by the arities of `inner`'s
/// factors and hands each (inner factor, block) pair to `glue`.
fn blockwise<P, Q, F>(outer: &[Q], inner: &[P], arity: impl Fn(&P) -> usize, mut glue: F) -> Result<Vec<P>>
where
    F: FnMut(&P, &[Q]) -> Result<P>,
{
    let mut out = Vec::with_capacity(inner.len());
    let mut pos = 0usize;
    for rho in inner {
        let r = arity(rho);
        out.push(glue(rho, &outer[pos..pos + r])?);
        pos += r;
    }
    debug_assert_eq!(pos, outer.len());
    Ok(out)
}

/// Composition of K tuples: each factor of `f` receives a consecutive block
/// of `g`'s factors, inserted slot by slot from the right.
pub fn compose_k(g: &KMorphism, f: &KMorphism) -> Result<KMorphism> {
    if f.target != g.source {
        return Err(Error::Compose(format!(
            "inner target {} does not match outer source {}",
            f.target, g.source
        )));
    }
    let factors = blockwise(&g.factors, &f.factors, KPoint::n, |rho, block| {
        let mut acc = rho.clone();
        for slot in (1..=block.len()).rev() {
            acc = boundary_insert(&acc, &block[slot - 1], slot)?;
        }
        Ok(acc)
    })?;
    KMorphism::new(factors)
}

/// K tuple (primed to primed) after a J tuple: the K factors are inserted
/// into the J factors' slots.
pub fn compose_j(g: &KMorphism, f: &JMorphism) -> Result<JMorphism> {
    if f.target != g.source {
        return Err(Error::Compose(format!(
            "inner target {} does not match outer source {}",
            f.target, g.source
        )));
    }
    let factors = blockwise(&g.factors, &f.factors, JPoint::n, |rho, block| {
        let mut acc = rho.clone();
        for slot in (1..=block.len()).rev() {
            acc = delta_insert(&acc, &block[slot - 1], slot)?;
        }
        Ok(acc)
    })?;
    JMorphism::new(factors)
}

/// J tuple after a K tuple: each K factor of `f` becomes the base of a graft
/// whose blocks are the matching J factors of `g`.
pub fn compose_mixed(g: &JMorphism, f: &KMorphism) -> Result<JMorphism> {
    if f.target != g.source {
        return Err(Error::Compose(format!(
            "inner target {} does not match outer source {}",
            f.target, g.source
        )));
    }
    let mut out = Vec::with_capacity(f.factors.len());
    let mut pos = 0usize;
    for rho in &f.factors {
        let r = rho.n();
        out.push(delta_graft(rho, &g.factors[pos..pos + r])?);
        pos += r;
    }
    debug_assert_eq!(pos, g.factors.len());
    JMorphism::new(out)
}

/// Strictly increasing degeneracy indices, applied closest to the source.
/// A list of q indices lowers the level by q.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegIndexList(Vec<usize>);

impl DegIndexList {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain(format!(
                    "degeneracy indices must increase strictly, got {indices:?}"
                )));
            }
        }
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(Error::Domain("degeneracy indices start at 1".into()));
        }
        Ok(DegIndexList(indices))
    }

    pub fn empty() -> Self {
        DegIndexList(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Merge of two index lists, `upper` acting after `lower`: every upper index
/// i shifts to i + b, where b counts the lower indices in whose window it
/// falls (sentinels: a zeroth lower index 0 and an unbounded last window).
pub fn compose_deg(upper: &DegIndexList, lower: &DegIndexList) -> Result<DegIndexList> {
    let js = lower.indices();
    let mut merged = js.to_vec();
    for &i in upper.indices() {
        let mut b = 0usize;
        while b < js.len() && i >= js[b] - b {
            b += 1;
        }
        merged.push(i + b);
    }
    merged.sort_unstable();
    for w in merged.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Compose(format!(
                "degeneracy merge produced a duplicate index {}",
                w[0]
            )));
        }
    }
    DegIndexList::new(merged)
}

/// The case split shared by the K and J push rules: locate the factor whose
/// letter window contains i + 1, then either degenerate it in place or, on an
/// arity-1 factor, delete it and emit the residual block index.
fn push_deg_gen<P: Clone>(
    i: usize,
    factors: &[P],
    target: usize,
    arity: impl Fn(&P) -> usize,
    deg: impl Fn(usize, &P) -> Result<P>,
) -> Result<(Vec<P>, Option<usize>)> {
    if i == 0 || i > target {
        return Err(Error::IndexRange {
            index: i,
            max: target,
        });
    }
    let mut before = 0usize;
    for (j, factor) in factors.iter().enumerate() {
        let a = arity(factor);
        if i + 1 <= before + a {
            let slot = i + 1 - before;
            let mut out = factors.to_vec();
            return if a > 1 {
                out[j] = deg(slot, factor)?;
                Ok((out, None))
            } else {
                out.remove(j);
                debug_assert!(j >= 1 && j + 1 < factors.len());
                Ok((out, Some(j)))
            };
        }
        before += a;
    }
    unreachable!("index {i} within 1..={target} always lands in a factor window");
}

/// Push one degeneracy index through a K tuple.  Returns the rewritten tuple
/// and, when an arity-1 factor was deleted, the residual index that now acts
/// before it.
pub fn push_deg(i: usize, m: &KMorphism) -> Result<(KMorphism, Option<usize>)> {
    let (factors, residual) = push_deg_gen(i, &m.factors, m.target, KPoint::n, |s, f| d_k(s, f))?;
    Ok((KMorphism::new(factors)?, residual))
}

/// J-tuple version of [`push_deg`].
pub fn push_deg_j(i: usize, m: &JMorphism) -> Result<(JMorphism, Option<usize>)> {
    let (factors, residual) = push_deg_gen(i, &m.factors, m.target, JPoint::n, |s, f| d_j(s, f))?;
    Ok((JMorphism::new(factors)?, residual))
}

/// The tuple part of a morphism: K factors (level-preserving sides) or J
/// factors (plain source, primed target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorTuple {
    K(KMorphism),
    J(JMorphism),
}

impl FactorTuple {
    fn source(&self) -> usize {
        match self {
            FactorTuple::K(t) => t.source(),
            FactorTuple::J(t) => t.source(),
        }
    }

    fn target(&self) -> usize {
        match self {
            FactorTuple::K(t) => t.target(),
            FactorTuple::J(t) => t.target(),
        }
    }

    fn push(&self, i: usize) -> Result<(FactorTuple, Option<usize>)> {
        match self {
            FactorTuple::K(t) => {
                let (t, r) = push_deg(i, t)?;
                Ok((FactorTuple::K(t), r))
            }
            FactorTuple::J(t) => {
                let (t, r) = push_deg_j(i, t)?;
                Ok((FactorTuple::J(t), r))
            }
        }
    }
}

/// Normal-form morphism of the unital categories: a degeneracy list followed
/// by a factor tuple, together with the plain/primed typing of both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    degs: DegIndexList,
    tuple: FactorTuple,
    src_primed: bool,
    dst_primed: bool,
}

impl Morphism {
    /// A K tuple on the plain side (`primed = false`) or the primed side.
    pub fn from_k(tuple: KMorphism, primed: bool) -> Self {
        Morphism {
            degs: DegIndexList::empty(),
            tuple: FactorTuple::K(tuple),
            src_primed: primed,
            dst_primed: primed,
        }
    }

    /// A J tuple, always plain to primed, at the canonical parameter 1/2.
    pub fn from_j(tuple: JMorphism) -> Result<Self> {
        if tuple.param() != &rat(1, 2) {
            return Err(Error::Domain(format!(
                "the canonical category uses parameter 1/2, got {}",
                tuple.param()
            )));
        }
        Ok(Morphism {
            degs: DegIndexList::empty(),
            tuple: FactorTuple::J(tuple),
            src_primed: false,
            dst_primed: true,
        })
    }

    /// Prepend a degeneracy list; its indices live on the enlarged source.
    pub fn with_degs(mut self, degs: DegIndexList) -> Result<Self> {
        let source = self.tuple.source() + degs.len();
        if let Some(&max) = degs.indices().last() {
            if max > source {
                return Err(Error::IndexRange {
                    index: max,
                    max: source,
                });
            }
        }
        self.degs = degs;
        Ok(self)
    }

    pub fn identity(n: usize, primed: bool) -> Self {
        Morphism::from_k(KMorphism::identity(n), primed)
    }

    pub fn source(&self) -> usize {
        self.tuple.source() + self.degs.len()
    }

    pub fn target(&self) -> usize {
        self.tuple.target()
    }

    pub fn source_primed(&self) -> bool {
        self.src_primed
    }

    pub fn target_primed(&self) -> bool {
        self.dst_primed
    }

    pub fn degs(&self) -> &DegIndexList {
        &self.degs
    }

    pub fn tuple(&self) -> &FactorTuple {
        &self.tuple
    }
}

/// Composition in the unital categories.  The outer degeneracy list is pushed
/// through the inner tuple index by index (largest first), residual indices
/// merge into the inner list, and the two tuples compose by their typed rule.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.target() != g.source() || f.dst_primed != g.src_primed {
        return Err(Error::Compose(format!(
            "cannot compose: inner ends at level {}{}, outer starts at level {}{}",
            f.target(),
            if f.dst_primed { "'" } else { "" },
            g.source(),
            if g.src_primed { "'" } else { "" },
        )));
    }
    let mut inner_tuple = f.tuple.clone();
    let mut residuals = DegIndexList::empty();
    for &i in g.degs.indices().iter().rev() {
        let (pushed, residual) = inner_tuple.push(i)?;
        inner_tuple = pushed;
        if let Some(r) = residual {
            residuals = compose_deg(&DegIndexList::new(vec![r])?, &residuals)?;
        }
    }
    let degs = compose_deg(&residuals, &f.degs)?;
    let tuple = match (&g.tuple, &inner_tuple) {
        (FactorTuple::K(gt), FactorTuple::K(ft)) => FactorTuple::K(compose_k(gt, ft)?),
        (FactorTuple::K(gt), FactorTuple::J(ft)) => FactorTuple::J(compose_j(gt, ft)?),
        (FactorTuple::J(gt), FactorTuple::K(ft)) => FactorTuple::J(compose_mixed(gt, ft)?),
        (FactorTuple::J(_), FactorTuple::J(_)) => {
            return Err(Error::Compose(
                "two J tuples can never be adjacent: no morphisms leave a primed level".into(),
            ))
        }
    };
    Ok(Morphism {
        degs,
        tuple,
        src_primed: f.src_primed,
        dst_primed: g.dst_primed,
    })
}

/// The six canonical carrier representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rep {
    /// K(n+2) carriers; tuples act by slotwise boundary insertion.
    KCarrier,
    /// Special-face J(n+2) carriers; K tuples act by slotwise delta insertion.
    JZeroCarrier,
    /// K(n+2) on plain levels, J(n+2) on primed; J tuples act by grafting.
    MixedCarrier,
    /// [`Rep::KCarrier`] extended to degeneracy lists.
    KCarrierUnital,
    /// [`Rep::JZeroCarrier`] extended to degeneracy lists.
    JZeroCarrierUnital,
    /// [`Rep::MixedCarrier`] extended to degeneracy lists.
    MixedCarrierUnital,
}

impl Rep {
    fn unital(self) -> bool {
        matches!(
            self,
            Rep::KCarrierUnital | Rep::JZeroCarrierUnital | Rep::MixedCarrierUnital
        )
    }

    fn mixed(self) -> bool {
        matches!(self, Rep::MixedCarrier | Rep::MixedCarrierUnital)
    }

    fn j_zero(self) -> bool {
        matches!(self, Rep::JZeroCarrier | Rep::JZeroCarrierUnital)
    }
}

/// A point of a representation carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    K(KPoint),
    J(JPoint),
}

fn check_carrier(rep: Rep, level: usize, primed: bool, x: &Element) -> Result<()> {
    let want = level + 2;
    match x {
        Element::K(p) => {
            if rep.j_zero() || (rep.mixed() && primed) {
                return Err(Error::Domain(
                    "this carrier holds J points, got a K point".into(),
                ));
            }
            if p.n() != want {
                return Err(Error::DimensionMismatch {
                    expected: want,
                    got: p.n(),
                });
            }
        }
        Element::J(p) => {
            if !rep.j_zero() && !(rep.mixed() && primed) {
                return Err(Error::Domain(
                    "this carrier holds K points, got a J point".into(),
                ));
            }
            if p.n() != want {
                return Err(Error::DimensionMismatch {
                    expected: want,
                    got: p.n(),
                });
            }
            if p.param() != &rat(1, 2) {
                return Err(Error::Domain(format!(
                    "carriers live at parameter 1/2, got {}",
                    p.param()
                )));
            }
            if rep.j_zero() && !j_face_membership(p, &JFace::SpecialZero)? {
                return Err(Error::Domain(format!(
                    "{p} lies outside the special face carrier"
                )));
            }
        }
    }
    Ok(())
}

/// Left action of a morphism on a carrier point: the degeneracy chain first
/// (largest index innermost), then the factor tuple's operator chain.
pub fn rep_apply(rep: Rep, m: &Morphism, x: &Element) -> Result<Element> {
    if !rep.unital() && !m.degs.is_empty() {
        return Err(Error::Compose(
            "degeneracy indices act only through the unital representations".into(),
        ));
    }
    if !rep.mixed() {
        if m.src_primed || m.dst_primed {
            return Err(Error::Compose(
                "primed levels act only through the mixed representations".into(),
            ));
        }
        if matches!(m.tuple, FactorTuple::J(_)) {
            return Err(Error::Compose(
                "J tuples act only through the mixed representations".into(),
            ));
        }
    }
    check_carrier(rep, m.source(), m.src_primed, x)?;
    let mut x = x.clone();
    for &i in m.degs.indices().iter().rev() {
        x = match x {
            Element::K(p) => Element::K(d_k(i + 1, &p)?),
            Element::J(p) => Element::J(d_j(i + 1, &p)?),
        };
    }
    let out = match (&m.tuple, x) {
        (FactorTuple::K(t), Element::K(mut p)) => {
            for slot in (1..=t.factors.len()).rev() {
                p = boundary_insert(&p, &t.factors[slot - 1], slot)?;
            }
            Element::K(p)
        }
        (FactorTuple::K(t), Element::J(mut p)) => {
            for slot in (1..=t.factors.len()).rev() {
                p = delta_insert(&p, &t.factors[slot - 1], slot)?;
            }
            Element::J(p)
        }
        (FactorTuple::J(t), Element::K(p)) => Element::J(delta_graft(&p, &t.factors)?),
        (FactorTuple::J(_), Element::J(_)) => {
            return Err(Error::Compose(
                "a J tuple starts on a plain level, where the carrier holds K points".into(),
            ))
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::associahedron::k_vertices;
    use crate::homeo::omega;
    use crate::ratgeom::RatVec;
    use crate::trees::j_lattice;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn kp(coords: &[(i64, i64)]) -> KPoint {
        KPoint::new(RatVec(coords.iter().map(|&(p, q)| rat(p, q)).collect())).unwrap()
    }

    fn jp(param: (i64, i64), coords: &[(i64, i64)]) -> JPoint {
        JPoint::new(
            rat(param.0, param.1),
            RatVec(coords.iter().map(|&(p, q)| rat(p, q)).collect()),
        )
        .unwrap()
    }

    fn k_pool(n: usize) -> Vec<KPoint> {
        let mut pool: Vec<KPoint> = k_vertices(n).unwrap().into_iter().collect();
        if pool.len() >= 2 {
            let mix = pool[0]
                .coords()
                .convex(pool[pool.len() - 1].coords(), &rat(1, 3));
            pool.push(KPoint::new(mix).unwrap());
        }
        pool
    }

    fn j_pool(n: usize) -> Vec<JPoint> {
        let mut pool: Vec<JPoint> = j_lattice(n)
            .unwrap()
            .into_iter()
            .map(|v| JPoint::new(rat(1, 2), v).unwrap())
            .collect();
        if pool.len() >= 2 {
            let mix = pool[0]
                .coords()
                .convex(pool[pool.len() - 1].coords(), &rat(2, 5));
            pool.push(JPoint::new(rat(1, 2), mix).unwrap());
        }
        pool
    }

    /// Random composition of `total` into `parts` positive summands.
    fn rand_parts(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
        let mut cuts: Vec<usize> = (1..total).collect();
        cuts.shuffle(rng);
        cuts.truncate(parts - 1);
        cuts.sort_unstable();
        let mut out = Vec::with_capacity(parts);
        let mut prev = 0;
        for c in cuts {
            out.push(c - prev);
            prev = c;
        }
        out.push(total - prev);
        out
    }

    fn rand_k_tuple(rng: &mut ChaCha8Rng, source: usize, target: usize) -> KMorphism {
        let parts = rand_parts(rng, target + 2, source + 2);
        let factors = parts
            .iter()
            .map(|&a| k_pool(a).choose(rng).unwrap().clone())
            .collect();
        KMorphism::new(factors).unwrap()
    }

    fn rand_j_tuple(rng: &mut ChaCha8Rng, source: usize, target: usize) -> JMorphism {
        let parts = rand_parts(rng, target + 2, source + 2);
        let factors = parts
            .iter()
            .map(|&a| j_pool(a).choose(rng).unwrap().clone())
            .collect();
        JMorphism::new(factors).unwrap()
    }

    fn rand_degs(rng: &mut ChaCha8Rng, mid: usize, extra: usize) -> DegIndexList {
        let source = mid + extra;
        let mut all: Vec<usize> = (1..=source).collect();
        all.shuffle(rng);
        all.truncate(extra);
        all.sort_unstable();
        DegIndexList::new(all).unwrap()
    }

    #[test]
    fn tuple_bookkeeping() {
        let f = KMorphism::new(vec![KPoint::unit(), kp(&[(0, 1), (1, 1)])]).unwrap();
        assert_eq!((f.source(), f.target()), (0, 1));
        let id = KMorphism::identity(3);
        assert_eq!((id.source(), id.target()), (3, 3));
        assert!(KMorphism::new(vec![KPoint::unit()]).is_err());
        let j = JMorphism::new(vec![
            jp((1, 2), &[(1, 2)]),
            jp((1, 2), &[(0, 1), (3, 2)]),
        ])
        .unwrap();
        assert_eq!((j.source(), j.target()), (0, 1));
        assert!(JMorphism::new(vec![
            jp((1, 2), &[(1, 2)]),
            jp((1, 4), &[(1, 4)]),
        ])
        .is_err());
    }

    #[test]
    fn compose_k_identities_and_example() {
        let f = KMorphism::new(vec![KPoint::unit(), kp(&[(0, 1), (1, 1)])]).unwrap();
        assert_eq!(compose_k(&KMorphism::identity(1), &f).unwrap(), f);
        assert_eq!(compose_k(&f, &KMorphism::identity(0)).unwrap(), f);
        // A binary factor passes through an arity-1 slot and picks up the
        // block that lands in its own slots.
        let g = KMorphism::new(vec![kp(&[(0, 1), (1, 1)]), KPoint::unit(), KPoint::unit()])
            .unwrap();
        let gf = compose_k(&g, &f).unwrap();
        let expect =
            KMorphism::new(vec![kp(&[(0, 1), (1, 1)]), kp(&[(0, 1), (1, 1)])]).unwrap();
        assert_eq!(gf, expect);
        assert!(compose_k(&f, &f).is_err());
    }

    #[test]
    fn compose_j_and_mixed_examples() {
        // K factors insert into J slots.
        let f = JMorphism::new(vec![jp((1, 2), &[(1, 2)]), jp((1, 2), &[(1, 2), (1, 1)])])
            .unwrap();
        let g = KMorphism::new(vec![kp(&[(0, 1), (1, 1)]), KPoint::unit(), KPoint::unit()])
            .unwrap();
        let gf = compose_j(&g, &f).unwrap();
        let expect = JMorphism::new(vec![
            jp((1, 2), &[(0, 1), (3, 2)]),
            jp((1, 2), &[(1, 2), (1, 1)]),
        ])
        .unwrap();
        assert_eq!(gf, expect);
        // J blocks graft onto K bases; arity-1 bases are transparent.
        let h = compose_mixed(&f, &KMorphism::identity(0)).unwrap();
        assert_eq!(h, f);
    }

    #[test]
    fn compose_deg_examples() {
        let single = |i| DegIndexList::new(vec![i]).unwrap();
        let got = compose_deg(&single(1), &single(2)).unwrap();
        assert_eq!(got.indices(), &[1, 2]);
        let got = compose_deg(&single(2), &single(2)).unwrap();
        assert_eq!(got.indices(), &[2, 3]);
        let upper = DegIndexList::new(vec![1, 3]).unwrap();
        let got = compose_deg(&upper, &single(2)).unwrap();
        assert_eq!(got.indices(), &[1, 2, 4]);
        let l = DegIndexList::new(vec![2, 5]).unwrap();
        assert_eq!(compose_deg(&DegIndexList::empty(), &l).unwrap(), l);
        assert_eq!(compose_deg(&l, &DegIndexList::empty()).unwrap(), l);
        assert!(DegIndexList::new(vec![3, 3]).is_err());
        assert!(DegIndexList::new(vec![0, 1]).is_err());
    }

    /// Direct deletion semantics: an index list deletes positions; the upper
    /// list's entries name survivors of the lower deletion.
    fn deg_oracle(upper: &[usize], lower: &[usize], n: usize) -> Vec<usize> {
        let mut out: Vec<usize> = lower.to_vec();
        let survivors: Vec<usize> = (1..=n).filter(|p| !lower.contains(p)).collect();
        for &i in upper {
            out.push(survivors[i - 1]);
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn compose_deg_matches_deletion_semantics() {
        let mut rng = ChaCha8Rng::seed_from_u64(1105);
        for _ in 0..2000 {
            let n = rng.random_range(2..=12);
            let q1 = rng.random_range(0..n);
            let lower = rand_degs(&mut rng, n - q1, q1);
            let m = n - q1;
            let q2 = rng.random_range(0..m);
            let upper = rand_degs(&mut rng, m - q2, q2);
            let got = compose_deg(&upper, &lower).unwrap();
            let want = deg_oracle(upper.indices(), lower.indices(), n);
            assert_eq!(got.indices(), &want[..]);
        }
    }

    #[test]
    fn push_deg_cases() {
        let t = KMorphism::new(vec![
            kp(&[(0, 1), (1, 1)]),
            KPoint::unit(),
            kp(&[(0, 1), (1, 1)]),
        ])
        .unwrap();
        // Slot falls in a wide factor: degenerate it in place.
        let (t1, r1) = push_deg(1, &t).unwrap();
        assert_eq!(r1, None);
        assert_eq!(
            t1.factors(),
            &[KPoint::unit(), KPoint::unit(), kp(&[(0, 1), (1, 1)])]
        );
        // Slot falls on an arity-1 factor: delete it, emit its block index.
        let (t2, r2) = push_deg(2, &t).unwrap();
        assert_eq!(r2, Some(1));
        assert_eq!(t2.factors(), &[kp(&[(0, 1), (1, 1)]), kp(&[(0, 1), (1, 1)])]);
        assert_eq!((t2.source(), t2.target()), (0, 2));
        // First slot of a later factor: the drop degeneracy fires.
        let (t3, r3) = push_deg(3, &t).unwrap();
        assert_eq!(r3, None);
        assert_eq!(
            t3.factors(),
            &[kp(&[(0, 1), (1, 1)]), KPoint::unit(), KPoint::unit()]
        );
        assert!(push_deg(4, &t).is_err());
        assert!(push_deg(0, &t).is_err());

        let tj = JMorphism::new(vec![
            jp((1, 2), &[(1, 2), (1, 1)]),
            jp((1, 2), &[(1, 2)]),
            jp((1, 2), &[(1, 2), (1, 1)]),
        ])
        .unwrap();
        let (tj1, rj1) = push_deg_j(1, &tj).unwrap();
        assert_eq!(rj1, None);
        assert_eq!(tj1.factors()[0], jp((1, 2), &[(1, 2)]));
        let (tj2, rj2) = push_deg_j(2, &tj).unwrap();
        assert_eq!(rj2, Some(1));
        assert_eq!((tj2.source(), tj2.target()), (0, 2));
    }

    #[test]
    fn unital_compose_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(2211);
        for _ in 0..50 {
            let target = rng.random_range(1..=4);
            let mid = rng.random_range(0..=target.min(2));
            let extra = rng.random_range(0..=2);
            let m = Morphism::from_k(rand_k_tuple(&mut rng, mid, target), false)
                .with_degs(rand_degs(&mut rng, mid, extra))
                .unwrap();
            let left = compose(&Morphism::identity(m.target(), false), &m).unwrap();
            let right = compose(&m, &Morphism::identity(m.source(), false)).unwrap();
            assert_eq!(left, m);
            assert_eq!(right, m);
        }
    }

    #[test]
    fn unital_compose_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3317);
        for _ in 0..400 {
            // f : a -> b, g : b -> c, h : c -> d, all with degeneracy parts.
            let d = rng.random_range(2..=4);
            let c_mid = rng.random_range(0..=2.min(d));
            let c_extra = rng.random_range(0..=1);
            let h = Morphism::from_k(rand_k_tuple(&mut rng, c_mid, d), false)
                .with_degs(rand_degs(&mut rng, c_mid, c_extra))
                .unwrap();
            let c = h.source();
            let b_mid = rng.random_range(0..=c.min(2));
            let b_extra = c - b_mid.min(c); // keep targets matched
            let b_extra = b_extra.min(1);
            let g = Morphism::from_k(rand_k_tuple(&mut rng, b_mid, c), false)
                .with_degs(rand_degs(&mut rng, b_mid, b_extra))
                .unwrap();
            let b = g.source();
            let a_mid = rng.random_range(0..=b.min(2));
            let a_extra = rng.random_range(0..=1);
            let f = Morphism::from_k(rand_k_tuple(&mut rng, a_mid, b), false)
                .with_degs(rand_degs(&mut rng, a_mid, a_extra))
                .unwrap();
            let left = compose(&compose(&h, &g).unwrap(), &f).unwrap();
            let right = compose(&h, &compose(&g, &f).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn mixed_compose_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4421);
        for _ in 0..200 {
            // f : a -> b plain, g : b -> c', h : c' -> d'.
            let d = rng.random_range(2..=4);
            let c_mid = rng.random_range(0..=2.min(d));
            let c_extra = rng.random_range(0..=1);
            let h = Morphism::from_k(rand_k_tuple(&mut rng, c_mid, d), true)
                .with_degs(rand_degs(&mut rng, c_mid, c_extra))
                .unwrap();
            let c = h.source();
            let b_mid = rng.random_range(0..=c.min(2));
            let b_extra = rng.random_range(0..=1);
            let g = Morphism::from_j(rand_j_tuple(&mut rng, b_mid, c))
                .unwrap()
                .with_degs(rand_degs(&mut rng, b_mid, b_extra))
                .unwrap();
            let b = g.source();
            let a_mid = rng.random_range(0..=b.min(2));
            let a_extra = rng.random_range(0..=1);
            let f = Morphism::from_k(rand_k_tuple(&mut rng, a_mid, b), false)
                .with_degs(rand_degs(&mut rng, a_mid, a_extra))
                .unwrap();
            let left = compose(&compose(&h, &g).unwrap(), &f).unwrap();
            let right = compose(&h, &compose(&g, &f).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn typing_discipline() {
        let j = Morphism::from_j(
            JMorphism::new(vec![jp((1, 2), &[(1, 2)]), jp((1, 2), &[(1, 2), (1, 1)])])
                .unwrap(),
        )
        .unwrap();
        // Nothing leaves a primed level for a plain one.
        let plain = Morphism::identity(j.target(), false);
        assert!(compose(&plain, &j).is_err());
        let primed = Morphism::identity(j.target(), true);
        assert!(compose(&primed, &j).is_ok());
        // Degeneracy indices must fit the enlarged source.
        let bad = Morphism::identity(1, false).with_degs(DegIndexList::new(vec![3]).unwrap());
        assert!(bad.is_err());
        // J tuples reject the off-parameter family.
        assert!(Morphism::from_j(
            JMorphism::new(vec![jp((1, 4), &[(1, 4)]), jp((1, 4), &[(1, 4), (1, 1)])])
                .unwrap()
        )
        .is_err());
    }

    fn carrier_elements(rep: Rep, level: usize, primed: bool) -> Vec<Element> {
        if rep.j_zero() {
            // Special-face points are images of the radial homeomorphism.
            k_pool(level + 2)
                .into_iter()
                .map(|k| Element::J(omega(&rat(1, 2), &k).unwrap()))
                .collect()
        } else if rep.mixed() && primed {
            j_pool(level + 2).into_iter().map(Element::J).collect()
        } else {
            k_pool(level + 2).into_iter().map(Element::K).collect()
        }
    }

    /// Random morphism with the requested target primedness: a plain target
    /// forces a plain K tuple, a primed target allows either a primed K
    /// tuple or a J tuple from the plain side.
    fn rand_morphism(
        rng: &mut ChaCha8Rng,
        rep: Rep,
        target_primed: bool,
        mid: usize,
        target: usize,
        extra: usize,
    ) -> Morphism {
        let base = if !target_primed {
            Morphism::from_k(rand_k_tuple(rng, mid, target), false)
        } else if rng.random_bool(0.5) {
            Morphism::from_j(rand_j_tuple(rng, mid, target)).unwrap()
        } else {
            Morphism::from_k(rand_k_tuple(rng, mid, target), true)
        };
        let extra = if rep.unital() { extra } else { 0 };
        base.with_degs(rand_degs(rng, mid, extra)).unwrap()
    }

    #[test]
    fn rep_functoriality_all_six() {
        let reps = [
            Rep::KCarrier,
            Rep::JZeroCarrier,
            Rep::MixedCarrier,
            Rep::KCarrierUnital,
            Rep::JZeroCarrierUnital,
            Rep::MixedCarrierUnital,
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(5525);
        for rep in reps {
            for _ in 0..60 {
                let c = rng.random_range(1..=3);
                let b_mid = rng.random_range(0..=c.min(2));
                let g_target_primed = rep.mixed() && rng.random_bool(0.5);
                let g_extra = rng.random_range(0..=1);
                let g = rand_morphism(&mut rng, rep, g_target_primed, b_mid, c, g_extra);
                let b = g.source();
                let a_mid = rng.random_range(0..=b.min(2));
                let f_extra = if rep.unital() {
                    rng.random_range(0..=1)
                } else {
                    0
                };
                // The inner target's primedness must match the outer source.
                let f = rand_morphism(&mut rng, rep, g.source_primed(), a_mid, b, f_extra);
                let gf = compose(&g, &f).unwrap();
                for x in carrier_elements(rep, f.source(), f.source_primed()) {
                    let direct = rep_apply(rep, &gf, &x).unwrap();
                    let staged =
                        rep_apply(rep, &g, &rep_apply(rep, &f, &x).unwrap()).unwrap();
                    assert_eq!(direct, staged, "rep {rep:?}");
                }
            }
        }
    }

    #[test]
    fn rep_examples_and_carrier_checks() {
        // Identity acts trivially.
        let x = Element::K(kp(&[(0, 1), (1, 1), (1, 1)]));
        let id = Morphism::identity(1, false);
        assert_eq!(rep_apply(Rep::KCarrier, &id, &x).unwrap(), x);
        // A lone binary factor in the middle slot is a plain insertion.
        let m = Morphism::from_k(
            KMorphism::new(vec![KPoint::unit(), kp(&[(0, 1), (1, 1)]), KPoint::unit()])
                .unwrap(),
            false,
        );
        let got = rep_apply(Rep::KCarrier, &m, &x).unwrap();
        let direct = boundary_insert(
            &kp(&[(0, 1), (1, 1), (1, 1)]),
            &kp(&[(0, 1), (1, 1)]),
            2,
        )
        .unwrap();
        assert_eq!(got, Element::K(direct));
        // A single degeneracy index acts one slot up.
        let sigma = kp(&[(0, 1), (0, 1), (2, 1), (1, 1)]);
        let dm = Morphism::identity(1, false)
            .with_degs(DegIndexList::new(vec![1]).unwrap())
            .unwrap();
        let got = rep_apply(Rep::KCarrierUnital, &dm, &Element::K(sigma.clone())).unwrap();
        assert_eq!(got, Element::K(d_k(2, &sigma).unwrap()));
        // Carrier mismatches are rejected.
        assert!(rep_apply(Rep::KCarrier, &id, &Element::K(KPoint::binary())).is_err());
        assert!(rep_apply(Rep::JZeroCarrier, &id, &x).is_err());
        assert!(rep_apply(Rep::KCarrier, &dm, &Element::K(sigma.clone())).is_err());
        // The special-face carrier rejects interior points.
        let interior = Element::J(jp((1, 2), &[(1, 4), (5, 4)]));
        assert!(rep_apply(Rep::JZeroCarrier, &Morphism::identity(0, false), &interior).is_err());
        // Restricting the mixed representation to either inclusion of the
        // plain category reproduces the K and delta chains verbatim.
        let t = Morphism::from_k(
            KMorphism::new(vec![KPoint::unit(), kp(&[(0, 1), (1, 1)]), KPoint::unit()])
                .unwrap(),
            false,
        );
        assert_eq!(
            rep_apply(Rep::MixedCarrier, &t, &x).unwrap(),
            rep_apply(Rep::KCarrier, &t, &x).unwrap()
        );
        let tp = Morphism::from_k(
            KMorphism::new(vec![KPoint::unit(), kp(&[(0, 1), (1, 1)]), KPoint::unit()])
                .unwrap(),
            true,
        );
        let w = Element::J(omega(&rat(1, 2), &kp(&[(0, 1), (1, 1), (1, 1)])).unwrap());
        assert_eq!(
            rep_apply(Rep::MixedCarrier, &tp, &w).unwrap(),
            rep_apply(
                Rep::JZeroCarrier,
                &Morphism::from_k(
                    KMorphism::new(vec![
                        KPoint::unit(),
                        kp(&[(0, 1), (1, 1)]),
                        KPoint::unit()
                    ])
                    .unwrap(),
                    false
                ),
                &w
            )
            .unwrap()
        );
    }

    #[test]
    fn push_respects_rep_action() {
        // (i) after a tuple equals the normalized pair, measured on carriers.
        let mut rng = ChaCha8Rng::seed_from_u64(6633);
        for _ in 0..200 {
            let target = rng.random_range(2..=4);
            let mid = rng.random_range(0..=2.min(target));
            let t = rand_k_tuple(&mut rng, mid, target);
            let i = rng.random_range(1..=target);
            let single = Morphism::identity(target - 1, false)
                .with_degs(DegIndexList::new(vec![i]).unwrap())
                .unwrap();
            let m = Morphism::from_k(t, false);
            let composed = compose(&single, &m).unwrap();
            for x in carrier_elements(Rep::KCarrierUnital, m.source(), false) {
                let staged = rep_apply(
                    Rep::KCarrierUnital,
                    &single,
                    &rep_apply(Rep::KCarrierUnital, &m, &x).unwrap(),
                )
                .unwrap();
                let direct = rep_apply(Rep::KCarrierUnital, &composed, &x).unwrap();
                assert_eq!(staged, direct);
            }
        }
    }
}
