//! Runtime verification suites over seeded random samples.
//!
//! Every suite re-checks a family of algebraic identities, case tables or
//! counting facts exposed by the crate, always in exact rational arithmetic.
//! A failing check reports the first counterexample it hits, fully printed.
//! The `verify` subcommand of the CLI is a thin shell over [`run_suite`].

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::associahedron::{
    boundary_insert, boundary_insert_dual, enumerate_decompositions, face_decompose, is_boundary,
    k_hrep, k_vertices, monoid_product, KPoint,
};
use crate::barcx::{
    build_bar, euler, face_step, forget_left, induced_cell, monoid_hom, normal_form, primed_model,
    projective_filtration, unit_step, BarCell, Carrier, EndSpec, FiniteMonoid, Model,
};
use crate::degeneracy::{d_j, d_k, interpolate_degeneracy, xi};
use crate::homeo::{alpha, beta, beta_expr, d_s, eta, eta1, f_ab, omega, pi_geometric, FormalJExpr};
use crate::multiplihedron::{
    compositions, delta_graft, delta_insert, embed_in_k, graft_decompose_at, j_decompose_at,
    j_face_membership, j_hrep, j_is_boundary, JFace, JPoint,
};
use crate::operadcat::{
    compose, compose_deg, push_deg, rep_apply, DegIndexList, Element, JMorphism, KMorphism,
    Morphism, Rep,
};
use crate::ratgeom::{rat, Rat, RatVec};
use crate::trees::{
    bearded_word, bearded_word_primed, catalan, count_bearded_composition,
    count_bearded_recursive, enum_bearded, enum_trivalent, j_lattice, k_lattice, parse_bearded,
    parse_bearded_primed, parse_word, parse_word_primed, shadow_a, v_coords, word, word_primed,
};
use crate::Error;

impl From<Error> for String {
    fn from(e: Error) -> String {
        e.to_string()
    }
}

/// Knobs shared by every suite.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Largest polytope arity the suite may touch.
    pub n_max: usize,
    /// Random instances per identity case.
    pub cases: usize,
    /// Seed for the per-suite generators; equal seeds give equal reports.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: 6,
            cases: 1000,
            seed: 0,
        }
    }
}

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    /// Instances verified before the check ended (all of them on success).
    pub cases: usize,
    pub failure: Option<String>,
}

/// Outcome of a whole suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn total_cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.passed() {
            out.push_str(&format!(
                "suite {}: {} checks passed ({} cases)\n",
                self.suite,
                self.checks.len(),
                self.total_cases()
            ));
        } else {
            out.push_str(&format!("suite {}: FAILED\n", self.suite));
        }
        for c in &self.checks {
            match &c.failure {
                None => out.push_str(&format!("  ok   {} ({} cases)\n", c.name, c.cases)),
                Some(msg) => out.push_str(&format!(
                    "  FAIL {} after {} cases: {}\n",
                    c.name, c.cases, msg
                )),
            }
        }
        for line in &self.notes {
            out.push_str(&format!("  note {line}\n"));
        }
        out
    }
}

type Check = std::result::Result<(), String>;

struct SuiteBuilder {
    report: SuiteReport,
}

impl SuiteBuilder {
    fn new(name: &str) -> Self {
        SuiteBuilder {
            report: SuiteReport {
                suite: name.to_owned(),
                checks: Vec::new(),
                notes: Vec::new(),
            },
        }
    }

    fn check<F: FnOnce(&mut usize) -> Check>(&mut self, name: &str, body: F) {
        let mut cases = 0usize;
        let failure = body(&mut cases).err();
        self.report.checks.push(CheckResult {
            name: name.to_owned(),
            cases,
            failure,
        });
    }

    fn note(&mut self, line: String) {
        self.report.notes.push(line);
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

macro_rules! fail {
    ($($t:tt)*) => { return Err(format!($($t)*)) };
}

macro_rules! expect {
    ($cond:expr, $($t:tt)*) => {
        if !$cond { fail!($($t)*); }
    };
}

macro_rules! expect_eq {
    ($l:expr, $r:expr, $($t:tt)*) => {{
        let l = &$l;
        let r = &$r;
        if l != r {
            return Err(format!("{}: got {l}, expected {r}", format!($($t)*)));
        }
    }};
}

fn salted(seed: u64, salt: u64) -> u64 {
    seed.wrapping_add(salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn total(xs: &[Rat]) -> Rat {
    xs.iter().fold(Rat::zero(), |a, b| a + b)
}

/// Seeded point and index source.  Vertices are cached per polytope, points
/// are random convex mixtures of up to three vertices.
struct Sampler {
    rng: ChaCha8Rng,
    k_cache: BTreeMap<usize, Vec<KPoint>>,
    j_cache: BTreeMap<(usize, Rat), Vec<JPoint>>,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            k_cache: BTreeMap::new(),
            j_cache: BTreeMap::new(),
        }
    }

    fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    fn flip(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// A rational in [0, 1] with denominator 8, endpoints included.
    fn unit(&mut self) -> Rat {
        rat(self.rng.random_range(0..=8), 8)
    }

    /// A small nonnegative rational with denominator 1, 2 or 4.
    fn small_nonneg(&mut self) -> Rat {
        let den = [1i64, 2, 4][self.rng.random_range(0..3)];
        rat(self.rng.random_range(0..=2 * den), den)
    }

    fn nonneg_vec(&mut self, len: usize) -> RatVec {
        RatVec::new((0..len).map(|_| self.small_nonneg()).collect())
    }

    fn k_point(&mut self, n: usize) -> std::result::Result<KPoint, String> {
        if !self.k_cache.contains_key(&n) {
            let vs: Vec<KPoint> = k_vertices(n)?.into_iter().collect();
            self.k_cache.insert(n, vs);
        }
        let len = self.k_cache[&n].len();
        let count = 1 + self.rng.random_range(0..=2);
        let mut picks: Vec<KPoint> = Vec::with_capacity(count);
        for _ in 0..count {
            let i = self.rng.random_range(0..len);
            picks.push(self.k_cache[&n][i].clone());
        }
        let mut p = picks[0].clone();
        for q in &picks[1..] {
            let t = self.unit();
            p = KPoint::new(p.coords().convex(q.coords(), &t))?;
        }
        Ok(p)
    }

    fn j_point(&mut self, n: usize, a: &Rat) -> std::result::Result<JPoint, String> {
        let key = (n, a.clone());
        if !self.j_cache.contains_key(&key) {
            let vs: Vec<JPoint> = if a == &rat(1, 2) {
                j_lattice(n)?
                    .into_iter()
                    .map(|v| JPoint::new(a.clone(), v))
                    .collect::<crate::Result<Vec<_>>>()?
            } else {
                j_hrep(n, a)?
                    .vertex_enum()?
                    .into_iter()
                    .map(|v| JPoint::new(a.clone(), v))
                    .collect::<crate::Result<Vec<_>>>()?
            };
            self.j_cache.insert(key.clone(), vs);
        }
        let len = self.j_cache[&key].len();
        let count = 1 + self.rng.random_range(0..=2);
        let mut picks: Vec<JPoint> = Vec::with_capacity(count);
        for _ in 0..count {
            let i = self.rng.random_range(0..len);
            picks.push(self.j_cache[&key][i].clone());
        }
        let mut p = picks[0].clone();
        for q in &picks[1..] {
            let t = self.unit();
            p = JPoint::new(a.clone(), p.coords().convex(q.coords(), &t))?;
        }
        Ok(p)
    }

    /// `blocks` positive integers summing to `total`.
    fn parts(&mut self, blocks: usize, total: usize) -> Vec<usize> {
        let mut out = vec![1usize; blocks];
        for _ in 0..total - blocks {
            let i = self.rng.random_range(0..blocks);
            out[i] += 1;
        }
        out
    }
}

fn mix_k(p: &KPoint, q: &KPoint, t: &Rat) -> std::result::Result<KPoint, String> {
    Ok(KPoint::new(p.coords().convex(q.coords(), t))?)
}

fn mix_j(p: &JPoint, q: &JPoint, t: &Rat) -> std::result::Result<JPoint, String> {
    expect!(
        p.param() == q.param(),
        "cannot mix points at parameters {} and {}",
        p.param(),
        q.param()
    );
    Ok(JPoint::new(p.param().clone(), p.coords().convex(q.coords(), t))?)
}

/// Contraction image of a K point, with the forced leading zero dropped.
fn xi_tail_k(p: &KPoint) -> std::result::Result<KPoint, String> {
    let v = xi(p.coords())?;
    expect!(
        v.0[0].is_zero(),
        "contraction of {p} has nonzero leading entry {}",
        v.0[0]
    );
    Ok(KPoint::new(RatVec::new(v.0[1..].to_vec()))?)
}

/// Contraction image of a J point, with the forced leading zero dropped.
fn xi_tail_j(p: &JPoint) -> std::result::Result<JPoint, String> {
    let v = xi(p.coords())?;
    expect!(
        v.0[0].is_zero(),
        "contraction of {p} has nonzero leading entry {}",
        v.0[0]
    );
    Ok(JPoint::new(p.param().clone(), RatVec::new(v.0[1..].to_vec()))?)
}

/// All vertices, a batch of edge midpoints and the vertex centroid of K(n).
fn point_pool(n: usize, mid_cap: usize) -> std::result::Result<Vec<KPoint>, String> {
    let verts: Vec<KPoint> = k_vertices(n)?.into_iter().collect();
    let mut pool = verts.clone();
    let mut mids = 0usize;
    'outer: for i in 0..verts.len() {
        for j in (i + 1)..verts.len() {
            if mids >= mid_cap {
                break 'outer;
            }
            pool.push(mix_k(&verts[i], &verts[j], &rat(1, 2))?);
            mids += 1;
        }
    }
    if verts.len() > 1 {
        let mut acc = RatVec::zeros(n);
        for v in &verts {
            acc = acc.add(v.coords());
        }
        pool.push(KPoint::new(acc.scale(&rat(1, verts.len() as i64)))?);
    }
    Ok(pool)
}

// ---------------------------------------------------------------------------
// trees
// ---------------------------------------------------------------------------

fn suite_trees(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("trees");
    let top8 = opts.n_max.min(8);

    b.check("trivalent-count-is-catalan", |cases| {
        for n in 1..=top8 {
            let trees = enum_trivalent(n)?;
            let lattice = k_lattice(n)?;
            let want = catalan(n - 1) as usize;
            expect_eq!(trees.len(), want, "trivalent tree count at n = {n}");
            expect_eq!(lattice.len(), want, "vertex label count at n = {n}");
            for t in &trees {
                let v = shadow_a(t);
                expect!(
                    lattice.contains(&v),
                    "tree coordinate {v} missing from the vertex set at n = {n}"
                );
                KPoint::new(v)?;
                *cases += 1;
            }
        }
        Ok(())
    });

    b.check("halfspace-vertices-match-tree-corners", |cases| {
        for n in 1..=opts.n_max.min(6) {
            let from_trees = k_lattice(n)?;
            let from_hrep = k_hrep(n)?.vertex_enum()?;
            if from_trees != from_hrep {
                let witness = from_trees
                    .symmetric_difference(&from_hrep)
                    .next()
                    .expect("nonequal sets have a witness");
                fail!("vertex sets disagree at n = {n}: {witness} is on one side only");
            }
            *cases += from_hrep.len();
        }
        Ok(())
    });

    b.check("bearded-profile-sums-and-prefixes", |cases| {
        let half = rat(1, 2);
        for n in 1..=top8 {
            for t in enum_bearded(n)? {
                let v = v_coords(&t);
                expect_eq!(
                    v.sum(),
                    rat(2 * n as i64 - 1, 2),
                    "coordinate total of a bearded tree at n = {n}"
                );
                let prefixes = v.prefix_sums();
                for i in 1..n {
                    expect!(
                        prefixes[i - 1] <= rat(2 * i as i64 - 1, 2),
                        "prefix {} too large at position {i} for {v} (n = {n})",
                        prefixes[i - 1]
                    );
                }
                JPoint::new(half.clone(), v)?;
                *cases += 1;
            }
        }
        Ok(())
    });

    b.check("bearded-count-oracles-agree", |cases| {
        for n in 1..=top8 {
            let listed = enum_bearded(n)?.len() as u64;
            expect_eq!(
                listed,
                count_bearded_recursive(n),
                "recursive bearded count at n = {n}"
            );
            expect_eq!(
                listed,
                count_bearded_composition(n),
                "composition bearded count at n = {n}"
            );
            expect_eq!(
                j_lattice(n)?.len() as u64,
                listed,
                "bearded vertex label count at n = {n}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("trivalent-word-round-trip", |cases| {
        for n in 1..=opts.n_max.min(7) {
            let trees = enum_trivalent(n)?;
            let words: BTreeSet<String> = trees.iter().map(word).collect();
            expect_eq!(words.len(), trees.len(), "duplicate trivalent words at n = {n}");
            for t in &trees {
                let w = word(t);
                expect!(&parse_word(&w)? == t, "word {w} did not round-trip at n = {n}");
                let wp = word_primed(t);
                expect!(
                    &parse_word_primed(&wp)? == t,
                    "mirrored word {wp} did not round-trip at n = {n}"
                );
                *cases += 2;
            }
        }
        Ok(())
    });

    b.check("bearded-word-round-trip", |cases| {
        for n in 1..=opts.n_max.min(6) {
            let trees = enum_bearded(n)?;
            let words: BTreeSet<String> = trees.iter().map(bearded_word).collect();
            expect_eq!(words.len(), trees.len(), "duplicate bearded words at n = {n}");
            for t in &trees {
                let w = bearded_word(t);
                expect!(
                    &parse_bearded(&w)? == t,
                    "bearded word {w} did not round-trip at n = {n}"
                );
                let wp = bearded_word_primed(t);
                expect!(
                    &parse_bearded_primed(&wp)? == t,
                    "mirrored bearded word {wp} did not round-trip at n = {n}"
                );
                *cases += 2;
            }
        }
        Ok(())
    });

    b.check("malformed-words-rejected", |cases| {
        let bad_trivalent = [
            "", "x1@", "x1x2", "x1x2@@", "x2x1@", "x1x3@", "x1x2@x3", "x1x2@x3@x4", "x1x2@@@",
        ];
        for w in bad_trivalent {
            expect!(
                parse_word(w).is_err(),
                "malformed word {w:?} was accepted"
            );
            *cases += 1;
        }
        for w in ["x0x1@", "x1y@"] {
            match parse_word(w) {
                Err(Error::WordParse { position, .. }) => {
                    expect!(position >= 1, "parse error for {w:?} lacks a token position");
                }
                Err(other) => fail!("{w:?} rejected without a token position: {other}"),
                Ok(_) => fail!("malformed word {w:?} was accepted"),
            }
            *cases += 1;
        }
        for w in ["", "x1x2#", "x1nx2n", "x1nb"] {
            expect!(
                parse_bearded(w).is_err(),
                "malformed bearded word {w:?} was accepted"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// boundary
// ---------------------------------------------------------------------------

type Insert = fn(&KPoint, &KPoint, usize) -> crate::Result<KPoint>;

/// One random instance of the three-case composition law for an insertion
/// operator family (plain or mirrored).
fn insertion_compose_case(
    s: &mut Sampler,
    rounds: usize,
    cap: usize,
    case: u8,
    ins: Insert,
    cases: &mut usize,
) -> Check {
    if cap < 4 {
        return Ok(());
    }
    for _ in 0..rounds {
        let totalar = s.range(6, cap + 2);
        let r = s.range(2, totalar - 4);
        let t = s.range(2, totalar - r - 2);
        let sz = totalar - r - t;
        let (j, k) = match case {
            1 => {
                let j = s.range(2, r);
                (j, s.range(1, j - 1))
            }
            2 => {
                let j = s.range(1, r);
                (j, s.range(j, j + t - 1))
            }
            _ => {
                if r < 2 {
                    continue;
                }
                let j = s.range(1, r - 1);
                (j, s.range(j + t, r + t - 1))
            }
        };
        let rho = s.k_point(r)?;
        let tau = s.k_point(t)?;
        let sig = s.k_point(sz)?;
        let lhs = ins(&ins(&rho, &tau, j)?, &sig, k)?;
        let rhs = match case {
            1 => ins(&ins(&rho, &sig, k)?, &tau, j + sz - 1)?,
            2 => ins(&rho, &ins(&tau, &sig, k - j + 1)?, j)?,
            _ => ins(&ins(&rho, &sig, k - t + 1)?, &tau, j)?,
        };
        expect!(
            lhs == rhs,
            "composition case {case} fails: rho = {rho}, tau = {tau}, sigma = {sig}, j = {j}, k = {k}: {lhs} vs {rhs}"
        );
        *cases += 1;
    }
    Ok(())
}

fn suite_boundary(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("boundary");
    let mut s = Sampler::new(salted(opts.seed, 2));
    let cap = opts.n_max.min(7);

    b.check("insertion-compose-disjoint-left", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 1, boundary_insert, cases)
    });
    b.check("insertion-compose-nested", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 2, boundary_insert, cases)
    });
    b.check("insertion-compose-disjoint-right", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 3, boundary_insert, cases)
    });
    b.check("mirrored-insertion-compose-disjoint-left", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 1, boundary_insert_dual, cases)
    });
    b.check("mirrored-insertion-compose-nested", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 2, boundary_insert_dual, cases)
    });
    b.check("mirrored-insertion-compose-disjoint-right", |cases| {
        insertion_compose_case(&mut s, opts.cases, cap, 3, boundary_insert_dual, cases)
    });

    b.check("insertion-affine-in-both-slots", |cases| {
        if cap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(2, cap - 1);
            let t = s.range(2, cap + 1 - r);
            let j = s.range(1, r);
            let rho1 = s.k_point(r)?;
            let rho2 = s.k_point(r)?;
            let tau1 = s.k_point(t)?;
            let tau2 = s.k_point(t)?;
            let lam = s.unit();
            let left = boundary_insert(&mix_k(&rho1, &rho2, &lam)?, &tau1, j)?;
            let right = mix_k(
                &boundary_insert(&rho1, &tau1, j)?,
                &boundary_insert(&rho2, &tau1, j)?,
                &lam,
            )?;
            expect!(
                left == right,
                "insertion is not affine in the outer slot: {rho1}, {rho2}, {tau1}, j = {j}"
            );
            let left = boundary_insert(&rho1, &mix_k(&tau1, &tau2, &lam)?, j)?;
            let right = mix_k(
                &boundary_insert(&rho1, &tau1, j)?,
                &boundary_insert(&rho1, &tau2, j)?,
                &lam,
            )?;
            expect!(
                left == right,
                "insertion is not affine in the inner slot: {rho1}, {tau1}, {tau2}, j = {j}"
            );
            *cases += 2;
        }
        Ok(())
    });

    b.check("boundary-face-covering", |cases| {
        for n in 3..=opts.n_max.min(5) {
            for t in 2..n {
                let r = n + 1 - t;
                for j in 1..=r {
                    for _ in 0..3 {
                        let p = boundary_insert(&s.k_point(r)?, &s.k_point(t)?, j)?;
                        expect!(is_boundary(&p), "constructed face point {p} not on the boundary");
                        let decs = enumerate_decompositions(&p);
                        expect!(!decs.is_empty(), "boundary point {p} has no decomposition");
                        let mut seen = false;
                        for (jj, _rr, tt, rho, tau) in &decs {
                            let back = boundary_insert(rho, tau, *jj)?;
                            expect!(
                                back == p,
                                "decomposition at slot {jj} does not recompose {p}"
                            );
                            if (*jj, *tt) == (j, t) {
                                seen = true;
                            }
                            *cases += 1;
                        }
                        expect!(
                            seen,
                            "face slot {j} with inner arity {t} missing among decompositions of {p}"
                        );
                        let (fj, _fr, _ft, rho, tau) = face_decompose(&p)?;
                        expect!(
                            boundary_insert(&rho, &tau, fj)? == p,
                            "canonical decomposition does not recompose {p}"
                        );
                    }
                }
            }
            for v in k_vertices(n)? {
                let decs = enumerate_decompositions(&v);
                expect!(!decs.is_empty(), "vertex {v} has no decomposition");
                for (jj, _rr, _tt, rho, tau) in &decs {
                    expect!(
                        boundary_insert(rho, tau, *jj)? == v,
                        "vertex decomposition at slot {jj} does not recompose {v}"
                    );
                    *cases += 1;
                }
            }
            let verts: Vec<KPoint> = k_vertices(n)?.into_iter().collect();
            let mut acc = RatVec::zeros(n);
            for v in &verts {
                acc = acc.add(v.coords());
            }
            let centroid = KPoint::new(acc.scale(&rat(1, verts.len() as i64)))?;
            expect!(
                !is_boundary(&centroid),
                "vertex centroid {centroid} flagged as a boundary point at n = {n}"
            );
            expect!(
                enumerate_decompositions(&centroid).is_empty(),
                "interior point {centroid} claims a decomposition"
            );
        }
        Ok(())
    });

    let arity_hi = opts.n_max.clamp(2, 6);
    b.check("monoid-product-associative", |cases| {
        for _ in 0..opts.cases {
            let np = s.range(2, arity_hi);
            let nq = s.range(2, arity_hi);
            let nw = s.range(2, arity_hi);
            let p = s.k_point(np)?;
            let q = s.k_point(nq)?;
            let w = s.k_point(nw)?;
            let left = monoid_product(&monoid_product(&p, &q)?, &w)?;
            let right = monoid_product(&p, &monoid_product(&q, &w)?)?;
            expect!(
                left == right,
                "product is not associative on {p}, {q}, {w}: {left} vs {right}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("monoid-product-insertion-left", |cases| {
        for _ in 0..opts.cases {
            let r = s.range(1, arity_hi - 1);
            let rho = s.k_point(r + 1)?;
            let nsig = s.range(2, arity_hi);
            let ntau = s.range(2, arity_hi);
            let sig = s.k_point(nsig)?;
            let tau = s.k_point(ntau)?;
            let k = s.range(1, r);
            let lhs = monoid_product(&boundary_insert(&rho, &sig, k + 1)?, &tau)?;
            let rhs = boundary_insert(&monoid_product(&rho, &tau)?, &sig, k + 1)?;
            expect!(
                lhs == rhs,
                "left insertion compatibility fails: rho = {rho}, sigma = {sig}, tau = {tau}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("monoid-product-insertion-right", |cases| {
        for _ in 0..opts.cases {
            let r = s.range(1, arity_hi - 1);
            let rho = s.k_point(r + 1)?;
            let nsig = s.range(2, arity_hi);
            let sig = s.k_point(nsig)?;
            let t_arity = s.range(2, arity_hi);
            let tau = s.k_point(t_arity)?;
            let k = s.range(1, r);
            let lhs = monoid_product(&tau, &boundary_insert(&rho, &sig, k + 1)?)?;
            let rhs = boundary_insert(&monoid_product(&tau, &rho)?, &sig, k + t_arity)?;
            expect!(
                lhs == rhs,
                "right insertion compatibility fails: rho = {rho}, sigma = {sig}, tau = {tau}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// delta
// ---------------------------------------------------------------------------

/// One case of the composition law for parametrized insertions.
fn delta_compose_case(
    s: &mut Sampler,
    opts: &SuiteOptions,
    case: u8,
    cases: &mut usize,
) -> Check {
    let cap = opts.n_max.min(7);
    if cap < 4 {
        return Ok(());
    }
    for i in 0..opts.cases {
        let a = if i % 4 == 3 { rat(1, 4) } else { rat(1, 2) };
        let cap_here = if a == rat(1, 2) { cap } else { cap.min(5) };
        let totalar = s.range(6, cap_here + 2);
        let r = s.range(2, totalar - 4);
        let t = s.range(2, totalar - r - 2);
        let sz = totalar - r - t;
        let (j, k) = match case {
            1 => {
                let j = s.range(2, r);
                (j, s.range(1, j - 1))
            }
            2 => {
                let j = s.range(1, r);
                (j, s.range(j, j + t - 1))
            }
            _ => {
                let j = s.range(1, r - 1);
                (j, s.range(j + t, r + t - 1))
            }
        };
        let rho = s.j_point(r, &a)?;
        let tau = s.k_point(t)?;
        let sig = s.k_point(sz)?;
        let lhs = delta_insert(&delta_insert(&rho, &tau, j)?, &sig, k)?;
        let rhs = match case {
            1 => delta_insert(&delta_insert(&rho, &sig, k)?, &tau, j + sz - 1)?,
            2 => delta_insert(&rho, &boundary_insert(&tau, &sig, k - j + 1)?, j)?,
            _ => delta_insert(&delta_insert(&rho, &sig, k - t + 1)?, &tau, j)?,
        };
        expect!(
            lhs == rhs,
            "parametrized composition case {case} fails at a = {a}: rho = {rho}, tau = {tau}, sigma = {sig}, j = {j}, k = {k}: {lhs} vs {rhs}"
        );
        *cases += 1;
    }
    Ok(())
}

fn suite_delta(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("delta");
    let mut s = Sampler::new(salted(opts.seed, 3));
    let half = rat(1, 2);

    b.check("delta-compose-disjoint-left", |cases| {
        delta_compose_case(&mut s, opts, 1, cases)
    });
    b.check("delta-compose-nested", |cases| {
        delta_compose_case(&mut s, opts, 2, cases)
    });
    b.check("delta-compose-disjoint-right", |cases| {
        delta_compose_case(&mut s, opts, 3, cases)
    });

    b.check("delta-into-graft-block", |cases| {
        if opts.n_max < 4 {
            return Ok(());
        }
        for i in 0..opts.cases {
            let a = if i % 4 == 3 { rat(3, 4) } else { half.clone() };
            let t = s.range(2, 4);
            let parts: Vec<usize> = (0..t).map(|_| s.range(1, 3)).collect();
            let tau = s.k_point(t)?;
            let mut rhos = Vec::with_capacity(t);
            for &r in &parts {
                rhos.push(s.j_point(r, &a)?);
            }
            let jblk = s.range(1, t);
            let kp = s.range(1, parts[jblk - 1]);
            let k: usize = parts[..jblk - 1].iter().sum::<usize>() + kp;
            let nsig = s.range(2, 3);
            let sig = s.k_point(nsig)?;
            let lhs = delta_insert(&delta_graft(&tau, &rhos)?, &sig, k)?;
            let mut blocks = rhos.clone();
            blocks[jblk - 1] = delta_insert(&rhos[jblk - 1], &sig, kp)?;
            let rhs = delta_graft(&tau, &blocks)?;
            expect!(
                lhs == rhs,
                "insertion into a graft fails at a = {a}, block {jblk}, inner slot {kp}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("graft-absorbs-insertion", |cases| {
        if opts.n_max < 4 {
            return Ok(());
        }
        for i in 0..opts.cases {
            let a = if i % 4 == 3 { rat(1, 4) } else { half.clone() };
            let sz = s.range(2, 3);
            let t_outer = s.range(2, 3);
            let t = t_outer + sz - 1;
            let j = s.range(1, t_outer);
            let mut rhos = Vec::with_capacity(t);
            for _ in 0..t {
                let r = s.range(1, 2);
                rhos.push(s.j_point(r, &a)?);
            }
            let sig = s.k_point(sz)?;
            let tau = s.k_point(t_outer)?;
            let lhs = delta_graft(&boundary_insert(&tau, &sig, j)?, &rhos)?;
            let inner = delta_graft(&sig, &rhos[j - 1..j - 1 + sz])?;
            let mut blocks: Vec<JPoint> = rhos[..j - 1].to_vec();
            blocks.push(inner);
            blocks.extend_from_slice(&rhos[j - 1 + sz..]);
            let rhs = delta_graft(&tau, &blocks)?;
            expect!(
                lhs == rhs,
                "graft does not absorb an inner insertion at a = {a}, slot {j}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("delta-affine-in-both-slots", |cases| {
        let cap = opts.n_max.min(6);
        if cap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(1, cap - 2);
            let t = s.range(2, cap + 1 - r);
            let j = s.range(1, r);
            let rho1 = s.j_point(r, &half)?;
            let rho2 = s.j_point(r, &half)?;
            let tau1 = s.k_point(t)?;
            let tau2 = s.k_point(t)?;
            let lam = s.unit();
            let left = delta_insert(&mix_j(&rho1, &rho2, &lam)?, &tau1, j)?;
            let right = mix_j(
                &delta_insert(&rho1, &tau1, j)?,
                &delta_insert(&rho2, &tau1, j)?,
                &lam,
            )?;
            expect!(
                left == right,
                "parametrized insertion is not affine in the outer slot at slot {j}"
            );
            let left = delta_insert(&rho1, &mix_k(&tau1, &tau2, &lam)?, j)?;
            let right = mix_j(
                &delta_insert(&rho1, &tau1, j)?,
                &delta_insert(&rho1, &tau2, j)?,
                &lam,
            )?;
            expect!(
                left == right,
                "parametrized insertion is not affine in the inner slot at slot {j}"
            );
            *cases += 2;
        }
        Ok(())
    });

    b.check("j-boundary-face-covering", |cases| {
        for n in 2..=opts.n_max.min(5) {
            let a_values = if n <= 3 {
                vec![half.clone(), rat(1, 4)]
            } else {
                vec![half.clone()]
            };
            for a in &a_values {
                for t in 2..=n {
                    let r = n + 1 - t;
                    for j in 1..=r {
                        for _ in 0..2 {
                            let p = delta_insert(&s.j_point(r, a)?, &s.k_point(t)?, j)?;
                            expect!(
                                j_is_boundary(&p),
                                "constructed insertion face point {p} not on the boundary"
                            );
                            expect!(
                                j_face_membership(&p, &JFace::DeltaInsertion { j, r, t })?,
                                "{p} fails its own face membership (j = {j}, t = {t})"
                            );
                            let mut hit = false;
                            for tt in 2..=n {
                                for jj in 1..=(n + 1 - tt) {
                                    if let Some((rho, tau)) = j_decompose_at(&p, jj, tt) {
                                        expect!(
                                            delta_insert(&rho, &tau, jj)? == p,
                                            "insertion decomposition ({jj}, {tt}) does not recompose {p}"
                                        );
                                        if (jj, tt) == (j, t) {
                                            hit = true;
                                        }
                                        *cases += 1;
                                    }
                                }
                            }
                            expect!(
                                hit,
                                "constructed face (j = {j}, t = {t}) not recovered from {p}"
                            );
                        }
                    }
                    for parts in compositions(n, t) {
                        let tau = s.k_point(t)?;
                        let mut rhos = Vec::with_capacity(t);
                        for &r in &parts {
                            rhos.push(s.j_point(r, a)?);
                        }
                        let p = delta_graft(&tau, &rhos)?;
                        expect!(
                            j_is_boundary(&p),
                            "constructed graft face point {p} not on the boundary"
                        );
                        expect!(
                            j_face_membership(&p, &JFace::Graft { parts: parts.clone() })?,
                            "{p} fails graft face membership for parts {parts:?}"
                        );
                        match graft_decompose_at(&p, &parts) {
                            None => fail!("graft face point {p} does not decompose at {parts:?}"),
                            Some((outer, blocks)) => {
                                expect!(
                                    delta_graft(&outer, &blocks)? == p,
                                    "graft decomposition at {parts:?} does not recompose {p}"
                                );
                            }
                        }
                        *cases += 1;
                    }
                }
                // interior witness: the average of all corners
                let verts: Vec<JPoint> = if a == &half {
                    j_lattice(n)?
                        .into_iter()
                        .map(|v| JPoint::new(half.clone(), v))
                        .collect::<crate::Result<Vec<_>>>()?
                } else {
                    j_hrep(n, a)?
                        .vertex_enum()?
                        .into_iter()
                        .map(|v| JPoint::new(a.clone(), v))
                        .collect::<crate::Result<Vec<_>>>()?
                };
                let mut acc = RatVec::zeros(n);
                for v in &verts {
                    acc = acc.add(v.coords());
                }
                let centroid = JPoint::new(a.clone(), acc.scale(&rat(1, verts.len() as i64)))?;
                expect!(
                    !j_is_boundary(&centroid),
                    "corner average {centroid} flagged as boundary at n = {n}, a = {a}"
                );
            }
        }
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// degeneracy
// ---------------------------------------------------------------------------

fn suite_degeneracy(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("degeneracy");
    let mut s = Sampler::new(salted(opts.seed, 4));
    let half = rat(1, 2);
    let len_cap = opts.n_max.min(7).max(2);

    b.check("contraction-bounds", |cases| {
        let run = |v: RatVec, cases: &mut usize| -> Check {
            let out = xi(&v)?;
            let mut deficit = Rat::zero();
            for i in 0..v.len() {
                expect!(
                    out.0[i] >= Rat::zero(),
                    "contracted entry negative at position {} of {v}",
                    i + 1
                );
                expect!(
                    out.0[i] <= v.0[i],
                    "contracted entry exceeds the original at position {} of {v}",
                    i + 1
                );
                deficit += &v.0[i] - &out.0[i];
                expect!(
                    deficit <= Rat::one(),
                    "prefix deficit {deficit} exceeds 1 at position {} of {v}",
                    i + 1
                );
            }
            *cases += 1;
            Ok(())
        };
        for _ in 0..opts.cases {
            let len = s.range(2, len_cap);
            let v = s.nonneg_vec(len);
            run(v, cases)?;
        }
        run(RatVec::zeros(4), cases)?;
        run(RatVec::from_ints(&[5, 0, 0, 0]), cases)?;
        run(RatVec::from_ints(&[0, 0, 0, 5]), cases)?;
        Ok(())
    });

    b.check("contraction-locks-tail-after-full-deficit", |cases| {
        for i in 0..opts.cases {
            let len = s.range(2, len_cap);
            let mut v = s.nonneg_vec(len);
            if i % 2 == 0 {
                // force a full deficit at the first entry
                v.0[0] = &v.0[0] + Rat::one();
            }
            let out = xi(&v)?;
            let mut deficit = Rat::zero();
            let mut locked = None;
            for k in 0..len {
                deficit += &v.0[k] - &out.0[k];
                if locked.is_none() && deficit == Rat::one() {
                    locked = Some(k);
                }
            }
            if let Some(kk) = locked {
                for k in kk + 1..len {
                    expect!(
                        out.0[k] == v.0[k],
                        "entry {} changed after the deficit filled at {} in {v}",
                        k + 1,
                        kk + 1
                    );
                }
                *cases += 1;
            }
        }
        Ok(())
    });

    b.check("contraction-drops-head", |cases| {
        for _ in 0..opts.cases {
            let len = s.range(2, len_cap);
            let mut v = s.nonneg_vec(len);
            v.0[0] = &v.0[0] + Rat::one();
            let out = xi(&v)?;
            expect!(
                out.0[0] == &v.0[0] - Rat::one(),
                "head entry of {v} contracted to {}, expected {}",
                out.0[0],
                &v.0[0] - Rat::one()
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-respects-bounded-prefixes", |cases| {
        let a_pool = [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
        for i in 0..opts.cases {
            let len = s.range(2, len_cap);
            let s_win = s.range(2, len);
            let a = a_pool[i % a_pool.len()].clone();
            let mut v: Vec<Rat> = Vec::with_capacity(len);
            let mut prefix = Rat::zero();
            for jj in 1..=s_win {
                let headroom = rat(jj as i64 - 1, 1) + &a - &prefix;
                let entry = headroom * s.unit();
                prefix += &entry;
                v.push(entry);
            }
            for _ in s_win..len {
                v.push(s.small_nonneg());
            }
            let v = RatVec::new(v);
            let out = xi(&v)?;
            expect!(
                out.0[0].is_zero(),
                "bounded-prefix vector {v} contracted with nonzero head {}",
                out.0[0]
            );
            for k in 2..=s_win {
                let partial = total(&out.0[1..k]);
                expect!(
                    partial <= rat(k as i64 - 2, 1) + &a,
                    "contracted prefix {partial} exceeds its bound at position {k} of {v} (a = {a})"
                );
            }
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-splits-at-window-end", |cases| {
        let a_pool = [rat(0, 1), rat(1, 4), rat(1, 2), rat(1, 1)];
        for i in 0..opts.cases {
            let len = s.range(2, len_cap);
            let s_win = s.range(2, len);
            let a = a_pool[i % a_pool.len()].clone();
            let mut v: Vec<Rat> = Vec::with_capacity(len);
            let mut prefix = Rat::zero();
            for jj in 1..s_win {
                let headroom = rat(jj as i64 - 1, 1) + &a - &prefix;
                let entry = headroom * s.unit();
                prefix += &entry;
                v.push(entry);
            }
            let tbar = rat(s_win as i64 - 1, 1) + &a - &prefix;
            let extra = s.small_nonneg();
            v.push(&tbar + &extra);
            for _ in s_win..len {
                v.push(s.small_nonneg());
            }
            let v = RatVec::new(v);
            let out = xi(&v)?;
            let deficit = total(&v.0[..s_win]) - total(&out.0[..s_win]);
            expect!(
                deficit == Rat::one(),
                "window deficit of {v} is {deficit}, expected 1 (a = {a}, s = {s_win})"
            );
            for k in s_win..len {
                expect!(
                    out.0[k] == v.0[k],
                    "entry {} beyond the window changed in {v}",
                    k + 1
                );
            }
            let mut short = v.0[..s_win - 1].to_vec();
            short.push(tbar.clone());
            let short_out = xi(&RatVec::new(short))?;
            for k in 0..s_win - 1 {
                expect!(
                    short_out.0[k] == out.0[k],
                    "window factorization disagrees at entry {} of {v}",
                    k + 1
                );
            }
            expect!(
                out.0[s_win - 1] == &extra + &short_out.0[s_win - 1],
                "window-end split fails for {v}: {} vs {} + {}",
                out.0[s_win - 1],
                extra,
                short_out.0[s_win - 1]
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-splits-interior-window", |cases| {
        if len_cap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let len = s.range(3, len_cap);
            let k_off = s.range(2, len - 1);
            let s_win = s.range(2, len - k_off + 1);
            let mut v: Vec<Rat> = Vec::with_capacity(len);
            for _ in 1..k_off {
                v.push(s.small_nonneg());
            }
            let mut wprefix = Rat::zero();
            v.push(Rat::zero());
            for ll in 2..s_win {
                let headroom = rat(ll as i64 - 1, 1) - &wprefix;
                let entry = headroom * s.unit();
                wprefix += &entry;
                v.push(entry);
            }
            let tbar = rat(s_win as i64 - 1, 1) - &wprefix;
            let extra = s.small_nonneg();
            v.push(&tbar + &extra);
            for _ in k_off + s_win - 1..len {
                v.push(s.small_nonneg());
            }
            let v = RatVec::new(v);
            let out = xi(&v)?;
            for ll in 0..s_win - 1 {
                expect!(
                    out.0[k_off - 1 + ll] == v.0[k_off - 1 + ll],
                    "window entry {} changed in {v} (k = {k_off}, s = {s_win})",
                    k_off + ll
                );
            }
            let mut contracted = v.0[..k_off - 1].to_vec();
            contracted.push(extra.clone());
            contracted.extend_from_slice(&v.0[k_off + s_win - 1..]);
            let cout = xi(&RatVec::new(contracted))?;
            for k in 0..k_off - 1 {
                expect!(
                    cout.0[k] == out.0[k],
                    "contracted-window image disagrees at entry {} of {v}",
                    k + 1
                );
            }
            expect!(
                cout.0[k_off - 1] == &out.0[k_off + s_win - 2] - &tbar,
                "window split value mismatch for {v}: {} vs {} - {}",
                cout.0[k_off - 1],
                out.0[k_off + s_win - 2],
                tbar
            );
            for k in 0..len - k_off - s_win + 1 {
                expect!(
                    cout.0[k_off + k] == out.0[k_off + s_win - 1 + k],
                    "contracted-window tail disagrees at offset {} of {v}",
                    k + 1
                );
            }
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-preserves-polytopes", |cases| {
        for i in 0..opts.cases {
            let n = s.range(2, len_cap);
            match i % 3 {
                0 => {
                    let p = s.k_point(n)?;
                    let tail = xi_tail_k(&p)?;
                    expect_eq!(tail.n(), n - 1, "contracted arity of {p}");
                }
                1 => {
                    let p = s.j_point(n, &half)?;
                    let tail = xi_tail_j(&p)?;
                    expect_eq!(tail.n(), n - 1, "contracted arity of {p}");
                }
                _ => {
                    let a = if i % 2 == 0 { rat(1, 4) } else { rat(3, 4) };
                    let m = n.min(5);
                    let p = s.j_point(m, &a)?;
                    let tail = xi_tail_j(&p)?;
                    expect_eq!(tail.n(), m - 1, "contracted arity of {p}");
                }
            }
            *cases += 1;
        }
        Ok(())
    });

    // contraction of an inserted point, by branch
    let bcap = opts.n_max.min(6);

    b.check("contraction-after-insertion-shifted", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(3, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let k = s.range(2, r);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = xi_tail_k(&boundary_insert(&rho, &tau, k)?)?;
            let rhs = boundary_insert(&xi_tail_k(&rho)?, &tau, k - 1)?;
            expect!(
                lhs == rhs,
                "contraction after insertion (k = {k} > 1) fails: rho = {rho}, tau = {tau}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-insertion-inner", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(3, bcap - 1);
            let r = s.range(2, bcap + 1 - t);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = xi_tail_k(&boundary_insert(&rho, &tau, 1)?)?;
            let rhs = boundary_insert(&rho, &xi_tail_k(&tau)?, 1)?;
            expect!(
                lhs == rhs,
                "contraction after first-slot insertion fails: rho = {rho}, tau = {tau}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-insertion-outer-binary", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(2, bcap - 1);
            let tau = s.k_point(t)?;
            let lhs = xi_tail_k(&boundary_insert(&KPoint::binary(), &tau, 2)?)?;
            expect!(
                lhs == tau,
                "binary outer contraction fails: tau = {tau}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-insertion-inner-binary", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(2, bcap - 1);
            let rho = s.k_point(r)?;
            let lhs = xi_tail_k(&boundary_insert(&rho, &KPoint::binary(), 1)?)?;
            expect!(
                lhs == rho,
                "binary inner contraction fails: rho = {rho}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-delta-insertion-shifted", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for i in 0..opts.cases {
            let a = if i % 3 == 2 { rat(1, 4) } else { half.clone() };
            let r = s.range(2, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let k = s.range(2, r);
            let rho = s.j_point(r, &a)?;
            let tau = s.k_point(t)?;
            let lhs = xi_tail_j(&delta_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&xi_tail_j(&rho)?, &tau, k - 1)?;
            expect!(
                lhs == rhs,
                "contraction after parametrized insertion (k = {k}) fails at a = {a}: rho = {rho}, tau = {tau}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-delta-insertion-inner", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for i in 0..opts.cases {
            let a = if i % 3 == 2 { rat(1, 4) } else { half.clone() };
            let t = s.range(3, bcap);
            let r = s.range(1, bcap + 1 - t);
            let rho = s.j_point(r, &a)?;
            let tau = s.k_point(t)?;
            let lhs = xi_tail_j(&delta_insert(&rho, &tau, 1)?)?;
            let rhs = delta_insert(&rho, &xi_tail_k(&tau)?, 1)?;
            expect!(
                lhs == rhs,
                "contraction after first-slot parametrized insertion fails at a = {a}: rho = {rho}, tau = {tau}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("contraction-after-delta-insertion-inner-binary", |cases| {
        if bcap < 2 {
            return Ok(());
        }
        for i in 0..opts.cases {
            let a = if i % 3 == 2 { rat(3, 4) } else { half.clone() };
            let r = s.range(1, bcap - 1);
            let rho = s.j_point(r, &a)?;
            let lhs = xi_tail_j(&delta_insert(&rho, &KPoint::binary(), 1)?)?;
            expect!(
                lhs == rho,
                "binary parametrized contraction fails at a = {a}: rho = {rho}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-case-left", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(3, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let k = s.range(2, r);
            let j = s.range(1, k - 1);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = d_k(j, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = boundary_insert(&d_k(j, &rho)?, &tau, k - 1)?;
            expect!(
                lhs == rhs,
                "degeneracy left of an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-case-middle", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(3, bcap - 1);
            let r = s.range(2, bcap + 1 - t);
            let k = s.range(1, r);
            let j = s.range(k, k + t - 1);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = d_k(j, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = boundary_insert(&rho, &d_k(j - k + 1, &tau)?, k)?;
            expect!(
                lhs == rhs,
                "degeneracy inside an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-case-right", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(3, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let n = r + t - 1;
            let k = s.range(1, r - 1);
            if k + t > n {
                continue;
            }
            let j = s.range(k + t, n);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = d_k(j, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = boundary_insert(&d_k(j - t + 1, &rho)?, &tau, k)?;
            expect!(
                lhs == rhs,
                "degeneracy right of an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-collapse-inner", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(2, bcap - 1);
            let k = s.range(1, r);
            let rho = s.k_point(r)?;
            let lhs = d_k(k, &boundary_insert(&rho, &KPoint::binary(), k)?)?;
            expect!(
                lhs == rho,
                "collapsing a binary insertion fails: rho = {rho}, k = {k}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-collapse-outer", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(2, bcap - 1);
            let k = s.range(1, 2);
            let tau = s.k_point(t)?;
            let lhs = d_k(k + 1, &boundary_insert(&KPoint::binary(), &tau, k)?)?;
            expect!(
                lhs == tau,
                "collapsing a binary outer factor fails: tau = {tau}, k = {k}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-insertion-collapse-outer-end", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(2, bcap - 1);
            let tau = s.k_point(t)?;
            let lhs = d_k(t + 1, &boundary_insert(&KPoint::binary(), &tau, 1)?)?;
            expect!(
                lhs == tau,
                "collapsing the end slot of a binary outer factor fails: tau = {tau}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("j-degeneracy-insertion-case-left", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(2, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let k = s.range(2, r);
            let j = s.range(1, k - 1);
            let rho = s.j_point(r, &half)?;
            let tau = s.k_point(t)?;
            let lhs = d_j(j, &delta_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&d_j(j, &rho)?, &tau, k - 1)?;
            expect!(
                lhs == rhs,
                "parametrized degeneracy left of an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("j-degeneracy-insertion-case-middle", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(3, bcap);
            let r = s.range(1, bcap + 1 - t);
            let k = s.range(1, r);
            let j = s.range(k, k + t - 1);
            let rho = s.j_point(r, &half)?;
            let tau = s.k_point(t)?;
            let lhs = d_j(j, &delta_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&rho, &d_k(j - k + 1, &tau)?, k)?;
            expect!(
                lhs == rhs,
                "parametrized degeneracy inside an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("j-degeneracy-insertion-case-right", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(2, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let n = r + t - 1;
            let k = s.range(1, r - 1);
            let j = s.range(k + t, n);
            let rho = s.j_point(r, &half)?;
            let tau = s.k_point(t)?;
            let lhs = d_j(j, &delta_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&d_j(j - t + 1, &rho)?, &tau, k)?;
            expect!(
                lhs == rhs,
                "parametrized degeneracy right of an insertion fails: rho = {rho}, tau = {tau}, j = {j}, k = {k}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("j-degeneracy-insertion-collapse", |cases| {
        if bcap < 2 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r = s.range(1, bcap - 1);
            let k = s.range(1, r);
            let rho = s.j_point(r, &half)?;
            let lhs = d_j(k, &delta_insert(&rho, &KPoint::binary(), k)?)?;
            expect!(
                lhs == rho,
                "collapsing a binary parametrized insertion fails: rho = {rho}, k = {k}, got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("graft-degeneracy-case-block", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(2, 4);
            let mut parts: Vec<usize> = (0..t).map(|_| s.range(1, 2)).collect();
            let big = s.range(1, t);
            parts[big - 1] = s.range(2, 3);
            let tau = s.k_point(t)?;
            let mut rhos = Vec::with_capacity(t);
            for &r in &parts {
                rhos.push(s.j_point(r, &half)?);
            }
            let prefix: usize = parts[..big - 1].iter().sum();
            let inner = s.range(1, parts[big - 1]);
            let j = prefix + inner;
            let lhs = d_j(j, &delta_graft(&tau, &rhos)?)?;
            let mut blocks = rhos.clone();
            blocks[big - 1] = d_j(inner, &rhos[big - 1])?;
            let rhs = delta_graft(&tau, &blocks)?;
            expect!(
                lhs == rhs,
                "graft degeneracy inside block {big} fails (j = {j}): {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("graft-degeneracy-case-singleton", |cases| {
        if bcap < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let t = s.range(3, 4);
            let mut parts: Vec<usize> = (0..t).map(|_| s.range(1, 2)).collect();
            let single = s.range(1, t);
            parts[single - 1] = 1;
            let tau = s.k_point(t)?;
            let mut rhos = Vec::with_capacity(t);
            for &r in &parts {
                rhos.push(s.j_point(r, &half)?);
            }
            let j: usize = parts[..single].iter().sum();
            let lhs = d_j(j, &delta_graft(&tau, &rhos)?)?;
            let mut blocks = rhos.clone();
            blocks.remove(single - 1);
            let rhs = delta_graft(&d_k(single, &tau)?, &blocks)?;
            expect!(
                lhs == rhs,
                "graft degeneracy at singleton block {single} fails (j = {j}): {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("graft-degeneracy-left-end", |cases| {
        if bcap < 2 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r2 = s.range(1, bcap - 1);
            let tau = s.k_point(2)?;
            let rhos = vec![JPoint::single(half.clone())?, s.j_point(r2, &half)?];
            let lhs = d_j(1, &delta_graft(&tau, &rhos)?)?;
            expect!(
                lhs == rhos[1],
                "left-end graft degeneracy fails: expected {}, got {lhs}",
                rhos[1]
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("graft-degeneracy-right-end", |cases| {
        if bcap < 2 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let r1 = s.range(1, bcap - 1);
            let n = r1 + 1;
            let tau = s.k_point(2)?;
            let rhos = vec![s.j_point(r1, &half)?, JPoint::single(half.clone())?];
            let lhs = d_j(n, &delta_graft(&tau, &rhos)?)?;
            expect!(
                lhs == rhos[0],
                "right-end graft degeneracy fails: expected {}, got {lhs}",
                rhos[0]
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-affine-at-cone-point", |cases| {
        let cap = opts.n_max.min(6);
        for _ in 0..opts.cases {
            let n = s.range(2, cap);
            let lam = s.unit();
            // apex of the K cone: (0, 1, ..., 1)
            let mut apex = vec![Rat::zero()];
            apex.extend(std::iter::repeat(Rat::one()).take(n - 1));
            let apex = KPoint::new(RatVec::new(apex))?;
            let mut apex_small = vec![Rat::zero()];
            apex_small.extend(std::iter::repeat(Rat::one()).take(n - 2));
            let apex_small = KPoint::new(RatVec::new(apex_small))?;
            let sigma = s.k_point(n)?;
            for j in 1..=n {
                let lhs = d_k(j, &mix_k(&apex, &sigma, &lam)?)?;
                let rhs = mix_k(&apex_small, &d_k(j, &sigma)?, &lam)?;
                expect!(
                    lhs == rhs,
                    "degeneracy {j} is not affine toward the cone apex at n = {n}: {lhs} vs {rhs}"
                );
                *cases += 1;
            }
            let japex = beta(&half, n)?;
            let japex_small = beta(&half, n - 1)?;
            let rho = s.j_point(n, &half)?;
            for j in 2..=n {
                let lhs = d_j(j, &mix_j(&japex, &rho, &lam)?)?;
                let rhs = mix_j(&japex_small, &d_j(j, &rho)?, &lam)?;
                expect!(
                    lhs == rhs,
                    "parametrized degeneracy {j} is not affine toward its cone apex at n = {n}: {lhs} vs {rhs}"
                );
                *cases += 1;
            }
            if n >= 2 {
                let sapex = alpha(&Rat::one(), n)?;
                let sapex_small = if n - 1 >= 2 {
                    alpha(&Rat::one(), n - 1)?
                } else {
                    KPoint::unit()
                };
                for j in 1..=n {
                    let lhs = d_s(j, &mix_k(&sapex, &sigma, &lam)?)?;
                    let rhs = mix_k(&sapex_small, &d_s(j, &sigma)?, &lam)?;
                    expect!(
                        lhs == rhs,
                        "scaled degeneracy {j} is not affine toward its apex at n = {n}: {lhs} vs {rhs}"
                    );
                    *cases += 1;
                }
            }
        }
        Ok(())
    });

    b.check("interpolated-degeneracy-family", |cases| {
        if bcap < 4 {
            return Ok(());
        }
        let u_pool = [rat(0, 1), rat(1, 4), rat(3, 4), rat(1, 1)];
        for i in 0..opts.cases {
            let u = u_pool[i % u_pool.len()].clone();
            let dt = |j: usize, p: &KPoint| interpolate_degeneracy(&u, j, d_k, d_s, p);
            // endpoint agreement
            let n = s.range(2, bcap);
            let sigma = s.k_point(n)?;
            let j0 = s.range(1, n);
            if u.is_zero() {
                expect!(
                    dt(j0, &sigma)? == d_k(j0, &sigma)?,
                    "interpolation at 0 is not the canonical degeneracy"
                );
            }
            if u.is_one() {
                expect!(
                    dt(j0, &sigma)? == d_s(j0, &sigma)?,
                    "interpolation at 1 is not the scaled degeneracy"
                );
            }
            // case table, same family on both sides
            let r = s.range(3, bcap - 1);
            let t = s.range(2, bcap + 1 - r);
            let n2 = r + t - 1;
            let k = s.range(2, r);
            let jl = s.range(1, k - 1);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = dt(jl, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = boundary_insert(&dt(jl, &rho)?, &tau, k - 1)?;
            expect!(
                lhs == rhs,
                "interpolated family (u = {u}) breaks the left case: {lhs} vs {rhs}"
            );
            if t > 2 {
                let k2 = s.range(1, r);
                let jm = s.range(k2, k2 + t - 1);
                let lhs = dt(jm, &boundary_insert(&rho, &tau, k2)?)?;
                let rhs = boundary_insert(&rho, &dt(jm - k2 + 1, &tau)?, k2)?;
                expect!(
                    lhs == rhs,
                    "interpolated family (u = {u}) breaks the middle case: {lhs} vs {rhs}"
                );
            }
            let k3 = s.range(1, r - 1);
            if k3 + t <= n2 {
                let jr = s.range(k3 + t, n2);
                let lhs = dt(jr, &boundary_insert(&rho, &tau, k3)?)?;
                let rhs = boundary_insert(&dt(jr - t + 1, &rho)?, &tau, k3)?;
                expect!(
                    lhs == rhs,
                    "interpolated family (u = {u}) breaks the right case: {lhs} vs {rhs}"
                );
            }
            let k4 = s.range(1, r);
            let lhs = dt(k4, &boundary_insert(&rho, &KPoint::binary(), k4)?)?;
            expect!(
                lhs == rho,
                "interpolated family (u = {u}) breaks the binary collapse: got {lhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// omega
// ---------------------------------------------------------------------------

fn suite_omega(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("omega");
    let mut s = Sampler::new(salted(opts.seed, 5));
    let half = rat(1, 2);
    let one = Rat::one();
    let cap = opts.n_max.min(5);

    b.check("radial-map-at-zero-is-identity", |cases| {
        for _ in 0..opts.cases {
            let n = s.range(1, opts.n_max.min(6));
            let sigma = s.k_point(n)?;
            let img = omega(&Rat::zero(), &sigma)?;
            expect!(
                img.coords() == sigma.coords() && img.param().is_zero(),
                "radial map at 0 moved {sigma} to {img}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("radial-map-respects-insertion", |cases| {
        if cap < 3 {
            return Ok(());
        }
        let a_pool = [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
        for i in 0..opts.cases {
            let a = a_pool[i % a_pool.len()].clone();
            let r = s.range(2, cap - 1);
            let t = s.range(2, cap + 1 - r);
            let k = s.range(1, r);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = omega(&a, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&omega(&a, &rho)?, &tau, k)?;
            expect!(
                lhs == rhs,
                "radial map breaks insertion at a = {a}, slot {k}: rho = {rho}, tau = {tau}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("insertion-image-independent-of-decomposition", |cases| {
        let a_pool = [rat(1, 4), rat(1, 2), rat(1, 1)];
        for n in 3..=cap {
            let pool = point_pool(n, 40)?;
            for p in &pool {
                let decs = enumerate_decompositions(p);
                if decs.is_empty() {
                    continue;
                }
                for a in &a_pool {
                    let img = omega(a, p)?;
                    for (k, _r, _t, rho, tau) in &decs {
                        let via = delta_insert(&omega(a, rho)?, tau, *k)?;
                        expect!(
                            via == img,
                            "radial image of {p} depends on its decomposition (slot {k}, a = {a}): {via} vs {img}"
                        );
                        *cases += 1;
                    }
                }
            }
        }
        Ok(())
    });

    b.check("radial-map-intertwines-degeneracies", |cases| {
        if opts.n_max < 3 {
            return Ok(());
        }
        let a_pool = [rat(1, 4), rat(1, 2)];
        for i in 0..opts.cases {
            let a = a_pool[i % a_pool.len()].clone();
            let n = s.range(3, opts.n_max.min(6));
            let j = s.range(2, n - 1);
            let sigma = s.k_point(n)?;
            let lhs = d_j(j, &omega(&a, &sigma)?)?;
            let rhs = omega(&a, &d_s(j, &sigma)?)?;
            expect!(
                lhs == rhs,
                "radial map breaks the degeneracy exchange at a = {a}, j = {j}, sigma = {sigma}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("raising-map-intertwines-degeneracies", |cases| {
        if opts.n_max < 3 {
            return Ok(());
        }
        for _ in 0..opts.cases {
            let n = s.range(3, opts.n_max.min(6));
            let j = s.range(2, n - 1);
            let sigma = s.k_point(n)?;
            let lhs = d_k(j + 1, &eta1(&one, &sigma)?)?;
            let rhs = eta1(&one, &d_s(j, &sigma)?)?;
            expect!(
                lhs == rhs,
                "raising map breaks the degeneracy exchange at j = {j}, sigma = {sigma}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("radial-map-injective-on-vertices", |cases| {
        for n in 1..=cap {
            let lattice = j_lattice(n)?;
            let mut images = BTreeSet::new();
            for v in k_vertices(n)? {
                let img = omega(&half, &v)?;
                expect!(
                    n == 1 || j_face_membership(&img, &JFace::SpecialZero)?,
                    "radial image {img} of {v} misses the special face"
                );
                expect!(
                    lattice.contains(img.coords()),
                    "radial image {img} of {v} is not a half-parameter vertex"
                );
                expect!(
                    images.insert(img.coords().clone()),
                    "radial map repeats the image {img} at n = {n}"
                );
                *cases += 1;
            }
        }
        Ok(())
    });

    b.check("sweep-endpoints", |cases| {
        for _ in 0..opts.cases {
            let n = s.range(1, opts.n_max.min(6));
            let sigma = s.k_point(n)?;
            let a = s.unit();
            let at0 = eta(&a, &Rat::zero(), &sigma)?;
            expect!(
                at0.coords() == sigma.coords() && at0.param().is_zero(),
                "sweep at 0 moved {sigma} to {at0}"
            );
            let at1 = eta(&a, &one, &sigma)?;
            expect!(
                at1 == omega(&a, &sigma)?,
                "sweep at 1 disagrees with the radial map at a = {a}"
            );
            let raised0 = eta1(&Rat::zero(), &sigma)?;
            let mut padded = vec![Rat::zero()];
            padded.extend(sigma.coords().0[..n - 1].iter().cloned());
            padded.push(&sigma.coords().0[n - 1] + Rat::one());
            expect!(
                raised0.coords() == &RatVec::new(padded),
                "raised sweep at 0 is not the padded embedding of {sigma}"
            );
            let raised1 = eta1(&one, &sigma)?;
            expect!(
                raised1 == embed_in_k(&omega(&one, &sigma)?),
                "raised sweep at 1 disagrees with the embedded radial image of {sigma}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("projection-intertwines-insertions", |cases| {
        if cap < 3 {
            return Ok(());
        }
        let a_pool = [rat(1, 4), rat(1, 2), rat(3, 4)];
        for i in 0..opts.cases {
            let a = a_pool[i % a_pool.len()].clone();
            let r = s.range(1, cap - 1);
            let t = s.range(2, cap + 1 - r);
            let k = s.range(1, r);
            let rho = s.j_point(r, &a)?;
            let sig = s.k_point(t)?;
            let lhs = pi_geometric(&delta_insert(&rho, &sig, k)?)?;
            let rhs = boundary_insert(&pi_geometric(&rho)?, &sig, k)?;
            expect!(
                lhs == rhs,
                "projection breaks insertion at a = {a}, slot {k}: rho = {rho}, sigma = {sig}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("projection-collapses-unit-grafts", |cases| {
        let a_pool = [rat(1, 4), rat(1, 2), rat(3, 4)];
        for i in 0..opts.cases {
            let a = a_pool[i % a_pool.len()].clone();
            let t = s.range(2, opts.n_max.clamp(2, 6));
            let tau = s.k_point(t)?;
            let blocks: Vec<JPoint> = (0..t)
                .map(|_| JPoint::single(a.clone()))
                .collect::<crate::Result<Vec<_>>>()?;
            let lhs = pi_geometric(&delta_graft(&tau, &blocks)?)?;
            expect!(
                lhs == tau,
                "projection of a unit graft is not the outer factor at a = {a}: {lhs} vs {tau}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("projection-intertwines-degeneracies", |cases| {
        if opts.n_max < 2 {
            return Ok(());
        }
        let a_pool = [rat(1, 4), rat(1, 2), rat(3, 4)];
        for i in 0..opts.cases {
            let a = a_pool[i % a_pool.len()].clone();
            let n = s.range(2, cap);
            let k = s.range(1, n);
            let rho = s.j_point(n, &a)?;
            let lhs = d_k(k, &pi_geometric(&rho)?)?;
            let rhs = pi_geometric(&d_j(k, &rho)?)?;
            expect!(
                lhs == rhs,
                "projection breaks the degeneracy exchange at a = {a}, k = {k}, rho = {rho}: {lhs} vs {rhs}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("rescaling-composes", |cases| {
        let params = [rat(1, 4), rat(1, 2), rat(3, 4)];
        for i in 0..opts.cases {
            let a = params[i % 3].clone();
            let bb = params[(i + 1) % 3].clone();
            let c = params[(i + 2) % 3].clone();
            let expr = match i % 3 {
                0 => beta_expr(&a, s.range(1, 4))?,
                1 => {
                    let r = s.range(1, 3);
                    let t = s.range(2, 3);
                    FormalJExpr::DeltaJ {
                        j: s.range(1, r),
                        inner: Box::new(beta_expr(&a, r)?),
                        factor: s.k_point(t)?,
                    }
                }
                _ => {
                    let t = s.range(2, 3);
                    let blocks = (0..t)
                        .map(|_| beta_expr(&a, s.range(1, 2)))
                        .collect::<crate::Result<Vec<_>>>()?;
                    FormalJExpr::DeltaGraft {
                        outer: s.k_point(t)?,
                        blocks,
                    }
                }
            };
            let direct = f_ab(&a, &c, &expr)?;
            let via = f_ab(&bb, &c, &f_ab(&a, &bb, &expr)?)?;
            expect!(
                direct == via,
                "rescaling {a} -> {bb} -> {c} differs from {a} -> {c} on {expr:?}"
            );
            expect!(
                direct.eval()?.param() == &c,
                "rescaled expression does not evaluate at the target parameter {c}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("rescaling-to-zero-is-projection", |cases| {
        let params = [rat(1, 4), rat(1, 2), rat(3, 4)];
        for i in 0..opts.cases {
            let a = params[i % 3].clone();
            let expr = if i % 2 == 0 {
                beta_expr(&a, s.range(1, 4))?
            } else {
                let r = s.range(1, 3);
                let t = s.range(2, 3);
                FormalJExpr::DeltaJ {
                    j: s.range(1, r),
                    inner: Box::new(beta_expr(&a, r)?),
                    factor: s.k_point(t)?,
                }
            };
            let scaled = f_ab(&a, &Rat::zero(), &expr)?.eval()?;
            let projected = pi_geometric(&expr.eval()?)?;
            expect!(
                scaled.coords() == projected.coords() && scaled.param().is_zero(),
                "zero rescaling {scaled} differs from the projection {projected}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// operad
// ---------------------------------------------------------------------------

const REPS: [Rep; 6] = [
    Rep::KCarrier,
    Rep::KCarrierUnital,
    Rep::JZeroCarrier,
    Rep::JZeroCarrierUnital,
    Rep::MixedCarrier,
    Rep::MixedCarrierUnital,
];

fn deg_list(s: &mut Sampler, m: usize, allow: bool) -> std::result::Result<DegIndexList, String> {
    let q = if allow { s.range(0, m.min(2)) } else { 0 };
    let mut set = BTreeSet::new();
    while set.len() < q {
        let i = s.range(1, m);
        set.insert(i);
    }
    Ok(DegIndexList::new(set.into_iter().collect())?)
}

fn k_tuple(s: &mut Sampler, src: usize, tgt: usize) -> std::result::Result<KMorphism, String> {
    let parts = s.parts(src + 2, tgt + 2);
    let mut factors = Vec::with_capacity(parts.len());
    for r in parts {
        factors.push(s.k_point(r)?);
    }
    Ok(KMorphism::new(factors)?)
}

fn j_tuple(s: &mut Sampler, src: usize, tgt: usize) -> std::result::Result<JMorphism, String> {
    let half = rat(1, 2);
    let parts = s.parts(src + 2, tgt + 2);
    let mut factors = Vec::with_capacity(parts.len());
    for r in parts {
        factors.push(s.j_point(r, &half)?);
    }
    Ok(JMorphism::new(factors)?)
}

/// Random plain-side or primed-side K morphism from level `m`.
fn plain_morphism(
    s: &mut Sampler,
    m: usize,
    cap: usize,
    primed: bool,
    with_degs: bool,
) -> std::result::Result<Morphism, String> {
    let degs = deg_list(s, m, with_degs)?;
    let tsrc = m - degs.len();
    let tgt = s.range(tsrc, cap.max(tsrc));
    let tuple = k_tuple(s, tsrc, tgt)?;
    Ok(Morphism::from_k(tuple, primed).with_degs(degs)?)
}

/// Random crossing morphism (plain level to primed level) from level `m`.
fn crossing_morphism(
    s: &mut Sampler,
    m: usize,
    cap: usize,
    with_degs: bool,
) -> std::result::Result<Morphism, String> {
    let degs = deg_list(s, m, with_degs)?;
    let tsrc = m - degs.len();
    let tgt = s.range(tsrc, cap.max(tsrc));
    let tuple = j_tuple(s, tsrc, tgt)?;
    Ok(Morphism::from_j(tuple)?.with_degs(degs)?)
}

fn apply_k_tuple(t: &KMorphism, x: &KPoint) -> std::result::Result<KPoint, String> {
    match rep_apply(
        Rep::KCarrier,
        &Morphism::from_k(t.clone(), false),
        &Element::K(x.clone()),
    )? {
        Element::K(p) => Ok(p),
        Element::J(_) => fail!("a K tuple produced a parametrized point"),
    }
}

/// Independent model of degeneracy-list merging: a list marks the deleted
/// slots i + 1; the outer list picks among the survivors.
fn survivor_merge(
    upper: &DegIndexList,
    lower: &DegIndexList,
) -> std::result::Result<DegIndexList, String> {
    let deleted: BTreeSet<usize> = lower.indices().iter().map(|&i| i + 1).collect();
    let bound = lower.indices().last().copied().unwrap_or(0)
        + upper.indices().last().copied().unwrap_or(0)
        + lower.len()
        + upper.len()
        + 4;
    let survivors: Vec<usize> = (1..=bound).filter(|slot| !deleted.contains(slot)).collect();
    let mut merged = deleted;
    for &i in upper.indices() {
        merged.insert(survivors[i]);
    }
    Ok(DegIndexList::new(merged.into_iter().map(|slot| slot - 1).collect())?)
}

fn suite_operad(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("operad");
    let mut s = Sampler::new(salted(opts.seed, 6));
    let half = rat(1, 2);
    let cap = opts.n_max.min(4).max(1);

    b.check("composition-associative", |cases| {
        for i in 0..opts.cases {
            let mixed = i % 2 == 1;
            let m0 = s.range(0, cap.min(3));
            let f = plain_morphism(&mut s, m0, cap, false, true)?;
            let g = if mixed {
                crossing_morphism(&mut s, f.target(), cap, true)?
            } else {
                plain_morphism(&mut s, f.target(), cap, false, true)?
            };
            let h = plain_morphism(&mut s, g.target(), cap, g.target_primed(), true)?;
            let left = compose(&h, &compose(&g, &f)?)?;
            let right = compose(&compose(&h, &g)?, &f)?;
            expect!(
                left == right,
                "composition is not associative:\n  f = {f:?}\n  g = {g:?}\n  h = {h:?}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("representations-functorial", |cases| {
        for i in 0..opts.cases {
            let rep = REPS[i % REPS.len()];
            let unital = matches!(
                rep,
                Rep::KCarrierUnital | Rep::JZeroCarrierUnital | Rep::MixedCarrierUnital
            );
            let m0 = s.range(0, cap.min(3));
            let (f, g, x) = match rep {
                Rep::KCarrier | Rep::KCarrierUnital => {
                    let f = plain_morphism(&mut s, m0, cap, false, unital)?;
                    let g = plain_morphism(&mut s, f.target(), cap, false, unital)?;
                    let x = Element::K(s.k_point(m0 + 2)?);
                    (f, g, x)
                }
                Rep::JZeroCarrier | Rep::JZeroCarrierUnital => {
                    let f = plain_morphism(&mut s, m0, cap, false, unital)?;
                    let g = plain_morphism(&mut s, f.target(), cap, false, unital)?;
                    let x = Element::J(omega(&half, &s.k_point(m0 + 2)?)?);
                    (f, g, x)
                }
                Rep::MixedCarrier | Rep::MixedCarrierUnital => match (i / REPS.len()) % 3 {
                    0 => {
                        let f = plain_morphism(&mut s, m0, cap, false, unital)?;
                        let g = plain_morphism(&mut s, f.target(), cap, false, unital)?;
                        let x = Element::K(s.k_point(m0 + 2)?);
                        (f, g, x)
                    }
                    1 => {
                        let f = plain_morphism(&mut s, m0, cap, false, unital)?;
                        let g = crossing_morphism(&mut s, f.target(), cap, unital)?;
                        let x = Element::K(s.k_point(m0 + 2)?);
                        (f, g, x)
                    }
                    _ => {
                        let f = crossing_morphism(&mut s, m0, cap, unital)?;
                        let g = plain_morphism(&mut s, f.target(), cap, true, unital)?;
                        let x = Element::K(s.k_point(m0 + 2)?);
                        (f, g, x)
                    }
                },
            };
            let lhs = rep_apply(rep, &compose(&g, &f)?, &x)?;
            let rhs = rep_apply(rep, &g, &rep_apply(rep, &f, &x)?)?;
            expect!(
                lhs == rhs,
                "representation {rep:?} is not functorial:\n  f = {f:?}\n  g = {g:?}\n  x = {x:?}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-merge-matches-deletion", |cases| {
        for _ in 0..opts.cases {
            let base = s.range(0, 2);
            let upper_len = s.range(0, 2);
            let lower_len = s.range(0, 2);
            let upper = {
                let mut set = BTreeSet::new();
                while set.len() < upper_len {
                    let i = s.range(1, base + upper_len);
                    set.insert(i);
                }
                DegIndexList::new(set.into_iter().collect())?
            };
            let lower = {
                let mut set = BTreeSet::new();
                while set.len() < lower_len {
                    let i = s.range(1, base + upper_len + lower_len);
                    set.insert(i);
                }
                DegIndexList::new(set.into_iter().collect())?
            };
            let merged = compose_deg(&upper, &lower)?;
            let oracle = survivor_merge(&upper, &lower)?;
            expect!(
                merged == oracle,
                "merged list {merged:?} differs from the deletion model {oracle:?} for upper {upper:?}, lower {lower:?}"
            );
            // the merged chain acts like the two chains in sequence
            let x = s.k_point(base + upper_len + lower_len + 2)?;
            let mut seq = x.clone();
            for &i in lower.indices().iter().rev() {
                seq = d_k(i + 1, &seq)?;
            }
            for &i in upper.indices().iter().rev() {
                seq = d_k(i + 1, &seq)?;
            }
            let mut direct = x.clone();
            for &i in merged.indices().iter().rev() {
                direct = d_k(i + 1, &direct)?;
            }
            expect!(
                seq == direct,
                "merged degeneracy chain acts differently on {x}: {seq} vs {direct}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("degeneracy-pushes-through-tuples", |cases| {
        for _ in 0..opts.cases {
            let tsrc = s.range(0, 2);
            let tgt = s.range(tsrc, 3);
            let tuple = k_tuple(&mut s, tsrc, tgt)?;
            let i = s.range(1, tgt + 1);
            let (pushed, residual) = push_deg(i, &tuple)?;
            let x = s.k_point(tsrc + 2)?;
            let direct = d_k(i + 1, &apply_k_tuple(&tuple, &x)?)?;
            let mut m = Morphism::from_k(pushed, false);
            if let Some(r) = residual {
                m = m.with_degs(DegIndexList::new(vec![r])?)?;
            }
            let via = rep_apply(Rep::KCarrierUnital, &m, &Element::K(x.clone()))?;
            expect!(
                via == Element::K(direct.clone()),
                "pushed degeneracy acts differently on {x}: {via:?} vs {direct}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("identity-laws", |cases| {
        for _ in 0..opts.cases.min(300) {
            let m0 = s.range(0, cap.min(3));
            let primed = s.flip();
            let f = plain_morphism(&mut s, m0, cap, primed, true)?;
            let before = Morphism::identity(f.source(), f.source_primed());
            let after = Morphism::identity(f.target(), f.target_primed());
            expect!(
                compose(&after, &f)? == f,
                "post-composition with the identity changed {f:?}"
            );
            expect!(
                compose(&f, &before)? == f,
                "pre-composition with the identity changed {f:?}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("typing-rejections", |cases| {
        let plain = Morphism::identity(2, false);
        let primed = Morphism::identity(2, true);
        expect!(
            compose(&primed, &plain).is_err(),
            "composition across mismatched sides was accepted"
        );
        *cases += 1;
        let j1 = Morphism::from_j(JMorphism::new(vec![
            JPoint::single(half.clone())?,
            JPoint::single(half.clone())?,
        ])?)?;
        expect!(
            compose(&j1, &j1.clone()).is_err(),
            "two crossing morphisms composed"
        );
        *cases += 1;
        let with_deg = Morphism::identity(1, false).with_degs(DegIndexList::new(vec![1])?)?;
        expect!(
            rep_apply(
                Rep::KCarrier,
                &with_deg,
                &Element::K(KPoint::new(RatVec::from_ints(&[0, 1, 1, 1]))?)
            )
            .is_err(),
            "a degeneracy acted through a non-unital representation"
        );
        *cases += 1;
        expect!(
            rep_apply(
                Rep::KCarrier,
                &primed,
                &Element::K(KPoint::new(RatVec::from_ints(&[0, 1, 1, 1]))?)
            )
            .is_err(),
            "a primed morphism acted through the plain representation"
        );
        *cases += 1;
        expect!(
            rep_apply(
                Rep::KCarrier,
                &Morphism::identity(1, false),
                &Element::K(KPoint::new(RatVec::from_ints(&[0, 1, 1, 1]))?)
            )
            .is_err(),
            "an element of the wrong arity was accepted"
        );
        *cases += 1;
        let off_face = JPoint::new(half.clone(), RatVec::new(vec![rat(1, 4), rat(1, 2), rat(7, 4)]))?;
        expect!(
            rep_apply(
                Rep::JZeroCarrier,
                &Morphism::identity(1, false),
                &Element::J(off_face)
            )
            .is_err(),
            "an interior point was accepted by the special-face carrier"
        );
        *cases += 1;
        Ok(())
    });

    b.finish()
}

// ---------------------------------------------------------------------------
// bar
// ---------------------------------------------------------------------------

fn label_rows(alphabet: usize, rank: usize) -> Vec<Vec<usize>> {
    let mut rows = vec![Vec::new()];
    for _ in 0..rank {
        rows = rows
            .into_iter()
            .flat_map(|prefix| {
                (0..alphabet).map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    rows
}

fn collapse_all(x: &FiniteMonoid, cell: &BarCell) -> (BarCell, Vec<usize>) {
    let mut labels = cell.labels().to_vec();
    let mut slots = Vec::new();
    loop {
        match labels.iter().position(|&id| id == x.unit()) {
            Some(pos) => {
                slots.push(pos + 2);
                labels.remove(pos);
            }
            None => break,
        }
    }
    (BarCell::new(cell.left(), labels, cell.right()), slots)
}

fn suite_bar(opts: &SuiteOptions) -> SuiteReport {
    let mut b = SuiteBuilder::new("bar");
    let mut s = Sampler::new(salted(opts.seed, 7));
    let half = rat(1, 2);
    let c2 = FiniteMonoid::builtin("c2").expect("builtin monoid");
    let c3 = FiniteMonoid::builtin("c3").expect("builtin monoid");
    let triv = FiniteMonoid::builtin("triv").expect("builtin monoid");

    let mut chi_line = String::new();
    b.check("strict-two-sided-counts", |cases| {
        let mut eulers = Vec::new();
        for n in 0..=opts.n_max.min(8) {
            let bc = build_bar(EndSpec::Star, &c2, EndSpec::Star, n, Model::Strict)?;
            let counts = bc.counts();
            expect!(
                counts == vec![1; n + 1],
                "strict one-generator complex at level {n} has counts {counts:?}"
            );
            let chi = euler(&bc);
            let want = if n % 2 == 0 { 1 } else { 0 };
            expect_eq!(chi, want, "alternating cell count at level {n}");
            eulers.push(chi.to_string());
            *cases += 1;
        }
        chi_line = eulers.join(" ");
        Ok(())
    });

    b.check("strict-two-letter-counts", |cases| {
        for n in 0..=opts.n_max.min(6) {
            let bc = build_bar(EndSpec::Star, &c3, EndSpec::Star, n, Model::Strict)?;
            let counts = bc.counts();
            let want: Vec<usize> = (0..=n).map(|r| 2usize.pow(r as u32)).collect();
            expect!(
                counts == want,
                "strict two-letter complex at level {n} has counts {counts:?}, expected {want:?}"
            );
            let chi = euler(&bc);
            let mut alt = 0i64;
            for (r, c) in want.iter().enumerate() {
                alt += if r % 2 == 0 { *c as i64 } else { -(*c as i64) };
            }
            expect_eq!(chi, alt, "alternating cell count at level {n}");
            *cases += 1;
        }
        Ok(())
    });

    b.check("trivial-monoid-cells", |cases| {
        for n in 0..=opts.n_max.min(6) {
            let strict = build_bar(EndSpec::Star, &triv, EndSpec::Star, n, Model::Strict)?;
            expect_eq!(strict.total_cells(), 1, "strict trivial complex at level {n}");
            let hopf = build_bar(EndSpec::Star, &triv, EndSpec::Star, n, Model::Hopf)?;
            expect!(
                hopf.counts() == vec![1; n + 1],
                "relaxed trivial complex at level {n} has counts {:?}",
                hopf.counts()
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("hopf-model-counts", |cases| {
        for n in 0..=opts.n_max.min(6) {
            let bc = build_bar(EndSpec::Star, &c2, EndSpec::Star, n, Model::Hopf)?;
            let want: Vec<usize> = (0..=n).map(|r| 2usize.pow(r as u32)).collect();
            expect!(
                bc.counts() == want,
                "relaxed complex at level {n} has counts {:?}, expected {want:?}",
                bc.counts()
            );
            let marked = build_bar(EndSpec::Marked, &c2, EndSpec::Star, n, Model::Hopf)?;
            let want2: Vec<usize> = want.iter().map(|c| 2 * c).collect();
            expect!(
                marked.counts() == want2,
                "marked relaxed complex at level {n} has counts {:?}, expected {want2:?}",
                marked.counts()
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("normal-form-confluent-exhaustive", |cases| {
        for rank in 0..=opts.n_max.min(3) {
            let pool = point_pool(rank + 2, 12)?;
            for row in label_rows(c2.len(), rank) {
                for left in [None, Some(1)] {
                    let cell = BarCell::new(left, row.clone(), None);
                    for model in [Model::Strict, Model::Hopf] {
                        for p in &pool {
                            let target = normal_form(&c2, model, p, &cell)?;
                            if model == Model::Strict {
                                for (pos, &id) in cell.labels().iter().enumerate() {
                                    if id == c2.unit() {
                                        let p2 = d_k(pos + 2, p)?;
                                        let c2cell = unit_step(&c2, &cell, pos + 1)?;
                                        let nf = normal_form(&c2, model, &p2, &c2cell)?;
                                        expect!(
                                            nf == target,
                                            "unit collapse at slot {} diverges for {}",
                                            pos + 1,
                                            cell.describe(&c2)
                                        );
                                        *cases += 1;
                                    }
                                }
                            }
                            for (j, _r, t, rho, _tau) in enumerate_decompositions(p) {
                                let stepped = face_step(&c2, &cell, j, t)?;
                                let nf = normal_form(&c2, model, &rho, &stepped)?;
                                expect!(
                                    nf == target,
                                    "face step (j = {j}, t = {t}) diverges for {} at {p}",
                                    cell.describe(&c2)
                                );
                                *cases += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });

    b.check("normal-form-confluent-random", |cases| {
        if opts.n_max < 4 {
            return Ok(());
        }
        for rank in 4..=opts.n_max.min(5) {
            let verts: Vec<KPoint> = k_vertices(rank + 2)?.into_iter().collect();
            for _ in 0..40 {
                let row: Vec<usize> = (0..rank).map(|_| s.range(0, c3.len() - 1)).collect();
                let cell = BarCell::new(None, row, None);
                let i = s.range(0, verts.len() - 1);
                let jx = s.range(0, verts.len() - 1);
                let lam = s.unit();
                let p = mix_k(&verts[i], &verts[jx], &lam)?;
                for model in [Model::Strict, Model::Hopf] {
                    let target = normal_form(&c3, model, &p, &cell)?;
                    for (j, _r, t, rho, _tau) in enumerate_decompositions(&p) {
                        let stepped = face_step(&c3, &cell, j, t)?;
                        let nf = normal_form(&c3, model, &rho, &stepped)?;
                        expect!(
                            nf == target,
                            "face step (j = {j}, t = {t}) diverges for {} at {p}",
                            cell.describe(&c3)
                        );
                        *cases += 1;
                    }
                }
            }
        }
        Ok(())
    });

    b.check("attachment-records-consistent", |cases| {
        for (x, n_top) in [(&c2, opts.n_max.min(4)), (&c3, opts.n_max.min(3))] {
            for model in [Model::Strict, Model::Hopf] {
                for n in 0..=n_top {
                    let right = if n % 2 == 0 { EndSpec::Star } else { EndSpec::Marked };
                    let bc = build_bar(EndSpec::Star, x, right, n, model)?;
                    for rank in 1..=n {
                        for (ci, cell) in bc.cells(rank).iter().enumerate() {
                            let atts = bc.attachments(rank, ci);
                            let expected = (rank + 1) * (rank + 2) / 2 - 1;
                            expect_eq!(
                                atts.len(),
                                expected,
                                "attachment count for {}",
                                cell.describe(x)
                            );
                            for att in atts {
                                let stepped = face_step(x, cell, att.face_j, att.face_t)?;
                                let (target, collapses) = match model {
                                    Model::Strict => collapse_all(x, &stepped),
                                    Model::Hopf => (stepped, Vec::new()),
                                };
                                expect!(
                                    collapses == att.collapses,
                                    "recorded collapses {:?} differ from {collapses:?} for {}",
                                    att.collapses,
                                    cell.describe(x)
                                );
                                expect!(
                                    bc.find(&target) == Some((att.target_rank, att.target_index)),
                                    "attachment target of {} at (j = {}, t = {}) is misindexed",
                                    cell.describe(x),
                                    att.face_j,
                                    att.face_t
                                );
                                *cases += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });

    b.check("primed-complex-mirrors-plain", |cases| {
        let n = opts.n_max.min(5);
        let bc = build_bar(EndSpec::Star, &c2, EndSpec::Star, n, Model::Strict)?;
        let pm = primed_model(&bc);
        expect!(bc.carrier() == Carrier::Plain, "plain complex mislabeled");
        expect!(pm.carrier() == Carrier::Primed, "primed complex mislabeled");
        expect!(
            pm.counts() == bc.counts(),
            "primed complex changed cell counts: {:?} vs {:?}",
            pm.counts(),
            bc.counts()
        );
        for rank in 1..=n {
            for ci in 0..bc.cells(rank).len() {
                expect!(
                    bc.attachments(rank, ci) == pm.attachments(rank, ci),
                    "primed complex changed attachments at rank {rank}"
                );
                *cases += 1;
            }
        }
        // carrier compatibility: the radial map sends each plain face
        // identification to the matching one on the special-face side
        for _ in 0..opts.cases.min(200) {
            let r = s.range(2, 4);
            let t = s.range(2, 4);
            let k = s.range(1, r);
            let rho = s.k_point(r)?;
            let tau = s.k_point(t)?;
            let lhs = omega(&half, &boundary_insert(&rho, &tau, k)?)?;
            let rhs = delta_insert(&omega(&half, &rho)?, &tau, k)?;
            expect!(
                lhs == rhs,
                "radial map breaks a primed-carrier face identification at slot {k}"
            );
            *cases += 1;
        }
        Ok(())
    });

    b.check("induced-map-commutes-with-normal-form", |cases| {
        let hom = monoid_hom(&c2, &triv, vec![0, 0])?;
        for rank in 0..=opts.n_max.min(3) {
            let pool = point_pool(rank + 2, 8)?;
            for row in label_rows(c2.len(), rank) {
                let cell = BarCell::new(None, row, None);
                for model in [Model::Strict, Model::Hopf] {
                    for p in &pool {
                        let (p1, c1) = normal_form(&c2, model, p, &cell)?;
                        let route_a = normal_form(&triv, model, &p1, &induced_cell(&hom, &c1))?;
                        let route_b = normal_form(&triv, model, p, &induced_cell(&hom, &cell))?;
                        expect!(
                            route_a == route_b,
                            "induced map does not commute with normalization for {}",
                            cell.describe(&c2)
                        );
                        *cases += 1;
                    }
                }
            }
        }
        expect!(
            monoid_hom(&c3, &c2, vec![0, 1, 0]).is_err(),
            "a non-multiplicative element map was accepted"
        );
        expect!(
            monoid_hom(&c2, &triv, vec![0]).is_err(),
            "an element map of the wrong length was accepted"
        );
        Ok(())
    });

    b.check("projective-filtration-shape", |cases| {
        for lv in 0..=opts.n_max.min(3) {
            let pf = projective_filtration(&c2, lv)?;
            let want_p: Vec<usize> = (0..=lv).map(|r| 2usize.pow(r as u32)).collect();
            expect!(
                pf.p.counts() == want_p,
                "free part at level {lv} has counts {:?}, expected {want_p:?}",
                pf.p.counts()
            );
            if lv == 0 {
                expect!(pf.e.is_none(), "level 0 filtration has a lower part");
            } else {
                let e = pf.e.as_ref().expect("filtration part");
                let want_e: Vec<usize> = (0..lv).map(|r| 2 * 2usize.pow(r as u32)).collect();
                expect!(
                    e.counts() == want_e,
                    "marked part at level {lv} has counts {:?}, expected {want_e:?}",
                    e.counts()
                );
            }
            expect_eq!(
                pf.d_cells.len(),
                2usize.pow(lv as u32),
                "distinguished cell count at level {lv}"
            );
            for (cell, atts) in pf.d_cells.iter().zip(&pf.d_attachments) {
                expect!(
                    cell.left() == Some(c2.unit()) && cell.right().is_none(),
                    "distinguished cell {} has the wrong ends",
                    cell.describe(&c2)
                );
                expect_eq!(cell.rank(), lv, "distinguished cell rank at level {lv}");
                if lv >= 1 {
                    let e = pf.e.as_ref().expect("filtration part");
                    let expected = (lv + 1) * (lv + 2) / 2 - 1;
                    expect_eq!(
                        atts.len(),
                        expected,
                        "distinguished attachment count at level {lv}"
                    );
                    for att in atts {
                        expect!(
                            att.collapses.is_empty(),
                            "distinguished attachment carries collapses at level {lv}"
                        );
                        let stepped = face_step(&c2, cell, att.face_j, att.face_t)?;
                        expect!(
                            e.find(&stepped) == Some((att.target_rank, att.target_index)),
                            "distinguished attachment of {} at (j = {}, t = {}) is misindexed",
                            cell.describe(&c2),
                            att.face_j,
                            att.face_t
                        );
                        expect!(
                            att.target_rank < lv,
                            "distinguished attachment does not lower the rank at level {lv}"
                        );
                    }
                }
                *cases += 1;
            }
            if let Some(e) = &pf.e {
                for rank in 0..=e.level() {
                    for cell in e.cells(rank) {
                        expect!(
                            pf.p.find(&forget_left(cell)).is_some(),
                            "forgetting the mark of {} leaves the free part",
                            cell.describe(&c2)
                        );
                    }
                }
            }
        }
        Ok(())
    });

    b.note(format!(
        "alternating cell counts, strict one-generator model, levels 0..={}: {}",
        opts.n_max.min(8),
        chi_line
    ));
    b.finish()
}

// ---------------------------------------------------------------------------
// runner
// ---------------------------------------------------------------------------

/// Names accepted by [`run_suite`], in execution order of `all`.
pub const SUITE_NAMES: [&str; 7] = [
    "trees",
    "boundary",
    "delta",
    "degeneracy",
    "omega",
    "operad",
    "bar",
];

/// Runs one named suite, or all of them for `"all"`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> crate::Result<Vec<SuiteReport>> {
    fn one(name: &str, opts: &SuiteOptions) -> crate::Result<SuiteReport> {
        Ok(match name {
            "trees" => suite_trees(opts),
            "boundary" => suite_boundary(opts),
            "delta" => suite_delta(opts),
            "degeneracy" => suite_degeneracy(opts),
            "omega" => suite_omega(opts),
            "operad" => suite_operad(opts),
            "bar" => suite_bar(opts),
            other => {
                return Err(Error::Domain(format!(
                    "unknown suite '{other}': expected one of {} or all",
                    SUITE_NAMES.join(", ")
                )))
            }
        })
    }
    if name == "all" {
        SUITE_NAMES.iter().map(|n| one(n, opts)).collect()
    } else {
        Ok(vec![one(name, opts)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_a_small_budget() {
        let opts = SuiteOptions {
            n_max: 4,
            cases: 60,
            seed: 1,
        };
        let reports = run_suite("all", &opts).expect("known suite");
        assert_eq!(reports.len(), SUITE_NAMES.len());
        for r in &reports {
            assert!(r.passed(), "{}", r.render());
        }
    }

    #[test]
    fn reports_are_deterministic_per_seed() {
        let opts = SuiteOptions {
            n_max: 4,
            cases: 25,
            seed: 7,
        };
        let a: Vec<String> = run_suite("boundary", &opts)
            .unwrap()
            .iter()
            .map(SuiteReport::render)
            .collect();
        let b: Vec<String> = run_suite("boundary", &opts)
            .unwrap()
            .iter()
            .map(SuiteReport::render)
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nonsense", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn tiny_budget_passes_quickly() {
        let opts = SuiteOptions {
            n_max: 2,
            cases: 30,
            seed: 0,
        };
        for r in run_suite("all", &opts).expect("known suite") {
            assert!(r.passed(), "{}", r.render());
        }
    }
}
