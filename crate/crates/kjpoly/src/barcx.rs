//! Two-sided bar constructions over finite monoids, as explicit cell
//! complexes.
//!
//! A rank-r cell carries the polytope K(r+2) and a label row: an optional
//! left mark, r interior labels, an optional right mark.  Boundary faces are
//! identified with lower cells by multiplying the spanned labels (ends absorb
//! or discard, star ends project away); the strict-unit model additionally
//! collapses unit labels along degeneracies.  Everything here is finite and
//! exact, so the identification relations can be checked point by point.

use std::collections::BTreeMap;

use crate::associahedron::{face_decompose, is_boundary, KPoint};
use crate::degeneracy::d_k;
use crate::{Error, Result};

/// A finite monoid given by its full multiplication table.  The unit is
/// derived from the table and associativity is checked on every triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    unit: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteMonoid {
    fn validate(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Monoid("no elements listed".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::Monoid(format!("duplicate element name '{name}'")));
            }
        }
        if table.len() != n {
            return Err(Error::Monoid(format!(
                "expected {n} table rows, got {}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Monoid(format!(
                    "table row for '{}' has {} entries, expected {n}",
                    names[i],
                    row.len()
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = table[table[a][b]][c];
                    let right = table[a][table[b][c]];
                    if left != right {
                        return Err(Error::Monoid(format!(
                            "associativity fails: ({x}*{y})*{z} gives {l}, {x}*({y}*{z}) gives {r}",
                            x = names[a],
                            y = names[b],
                            z = names[c],
                            l = names[left],
                            r = names[right],
                        )));
                    }
                }
            }
        }
        let unit = (0..n)
            .find(|&u| (0..n).all(|i| table[u][i] == i && table[i][u] == i))
            .ok_or_else(|| Error::Monoid("no two-sided unit element".into()))?;
        Ok(FiniteMonoid { names, unit, table })
    }

    /// Parses the plain-text table format:
    /// `elements: e g` on one part, `table: e g / g e` rows split by `/`.
    pub fn parse(text: &str) -> Result<Self> {
        let elems_at = text
            .find("elements:")
            .ok_or_else(|| Error::Monoid("missing 'elements:' section".into()))?;
        let table_at = text
            .find("table:")
            .ok_or_else(|| Error::Monoid("missing 'table:' section".into()))?;
        if table_at < elems_at {
            return Err(Error::Monoid(
                "'elements:' must come before 'table:'".into(),
            ));
        }
        let names: Vec<String> = text[elems_at + "elements:".len()..table_at]
            .split_whitespace()
            .map(str::to_owned)
            .collect();
        let lookup = |token: &str, row: usize, col: usize| -> Result<usize> {
            names
                .iter()
                .position(|n| n == token)
                .ok_or_else(|| {
                    Error::Monoid(format!(
                        "table entry '{token}' at row {}, column {} is not an element",
                        row + 1,
                        col + 1
                    ))
                })
        };
        let table = text[table_at + "table:".len()..]
            .split('/')
            .enumerate()
            .map(|(r, row)| {
                row.split_whitespace()
                    .enumerate()
                    .map(|(c, tok)| lookup(tok, r, c))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        FiniteMonoid::validate(names, table)
    }

    /// Built-in tables: `triv`, `c2`, `c3`.
    pub fn builtin(name: &str) -> Result<Self> {
        let (names, table): (Vec<&str>, Vec<Vec<usize>>) = match name {
            "triv" => (vec!["e"], vec![vec![0]]),
            "c2" => (vec!["e", "g"], vec![vec![0, 1], vec![1, 0]]),
            "c3" => (
                vec!["e", "g", "h"],
                vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            ),
            other => {
                return Err(Error::Monoid(format!(
                    "unknown builtin monoid '{other}' (try triv, c2, c3)"
                )))
            }
        };
        FiniteMonoid::validate(names.into_iter().map(str::to_owned).collect(), table)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Product of a sequence of element ids, left to right; empty gives the
    /// unit.
    pub fn product<I: IntoIterator<Item = usize>>(&self, ids: I) -> usize {
        ids.into_iter().fold(self.unit, |acc, i| self.mul(acc, i))
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn check_id(&self, id: usize) -> Result<()> {
        if id >= self.len() {
            return Err(Error::Monoid(format!(
                "label index {id} out of range for a {}-element monoid",
                self.len()
            )));
        }
        Ok(())
    }
}

/// Which identification relations are in force: `Strict` collapses unit
/// labels along degeneracies, `Hopf` keeps them as honest cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Strict,
    Hopf,
}

/// Shape of an end of the bar construction: a bare point or a monoid-marked
/// end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndSpec {
    Star,
    Marked,
}

/// Geometric carrier family of a complex: K(r+2) cells or their images in
/// the special zero-face family under the radial homeomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Plain,
    Primed,
}

/// One cell: optional end marks and the interior label row.  The rank equals
/// the number of interior labels; the carrier is K(rank+2).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarCell {
    left: Option<usize>,
    labels: Vec<usize>,
    right: Option<usize>,
}

impl BarCell {
    pub fn new(left: Option<usize>, labels: Vec<usize>, right: Option<usize>) -> Self {
        BarCell {
            left,
            labels,
            right,
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn left(&self) -> Option<usize> {
        self.left
    }

    pub fn right(&self) -> Option<usize> {
        self.right
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn describe(&self, x: &FiniteMonoid) -> String {
        let end = |e: Option<usize>| match e {
            None => "*".to_owned(),
            Some(id) => x.name(id).to_owned(),
        };
        let mid: Vec<&str> = self.labels.iter().map(|&id| x.name(id)).collect();
        format!("({} | {} | {})", end(self.left), mid.join(" "), end(self.right))
    }

    fn check(&self, x: &FiniteMonoid) -> Result<()> {
        for &id in self.left.iter().chain(&self.right).chain(&self.labels) {
            x.check_id(id)?;
        }
        Ok(())
    }
}

/// One face-identification step on the label row: the face at slot `j` with
/// inner arity `t` multiplies the spanned labels.  The first slot absorbs
/// into the left end (a star end discards), the last slot into the right
/// end, and an interior slot replaces `t` labels by their product.
pub fn face_step(x: &FiniteMonoid, cell: &BarCell, j: usize, t: usize) -> Result<BarCell> {
    let m = cell.rank();
    if t < 2 || t > m + 1 {
        return Err(Error::Domain(format!(
            "face arity {t} out of range for a rank-{m} cell"
        )));
    }
    let outer = m + 3 - t;
    if j < 1 || j > outer {
        return Err(Error::IndexRange {
            index: j,
            max: outer,
        });
    }
    cell.check(x)?;
    let labels = &cell.labels;
    let cell = if j == 1 {
        let left = cell
            .left
            .map(|y| x.product(std::iter::once(y).chain(labels[..t - 1].iter().copied())));
        BarCell::new(left, labels[t - 1..].to_vec(), cell.right)
    } else if j == outer {
        let right = cell
            .right
            .map(|z| x.product(labels[m + 1 - t..].iter().copied().chain(std::iter::once(z))));
        BarCell::new(cell.left, labels[..m + 1 - t].to_vec(), right)
    } else {
        let product = x.product(labels[j - 2..j + t - 2].iter().copied());
        let mut out = labels[..j - 2].to_vec();
        out.push(product);
        out.extend_from_slice(&labels[j + t - 2..]);
        BarCell::new(cell.left, out, cell.right)
    };
    Ok(cell)
}

/// One strict-unit step: removes the unit label at 1-based position `i`.
/// The matching carrier map is the degeneracy at slot `i + 1`.
pub fn unit_step(x: &FiniteMonoid, cell: &BarCell, i: usize) -> Result<BarCell> {
    if i < 1 || i > cell.rank() {
        return Err(Error::IndexRange {
            index: i,
            max: cell.rank(),
        });
    }
    if cell.labels[i - 1] != x.unit() {
        return Err(Error::Domain(format!(
            "label at position {i} is '{}', not the unit",
            x.name(cell.labels[i - 1])
        )));
    }
    let mut labels = cell.labels.clone();
    labels.remove(i - 1);
    Ok(BarCell::new(cell.left, labels, cell.right))
}

/// Removes all unit labels, leftmost first; returns the cleaned cell and the
/// degeneracy slots applied to the carrier, in application order.
fn collapse_units(x: &FiniteMonoid, cell: &BarCell) -> (BarCell, Vec<usize>) {
    let mut cell = cell.clone();
    let mut slots = Vec::new();
    while let Some(pos) = cell.labels.iter().position(|&id| id == x.unit()) {
        slots.push(pos + 2);
        cell.labels.remove(pos);
    }
    (cell, slots)
}

/// Rewrites a (carrier point, cell) pair to its normal form: unit labels
/// collapse first (strict model only), then boundary points peel off their
/// face identification; repeats until the point is interior and, in the
/// strict model, no label is the unit.  The result is independent of the
/// rewrite order, which the tests check rather than assume.
pub fn normal_form(
    x: &FiniteMonoid,
    model: Model,
    point: &KPoint,
    cell: &BarCell,
) -> Result<(KPoint, BarCell)> {
    cell.check(x)?;
    if point.n() != cell.rank() + 2 {
        return Err(Error::DimensionMismatch {
            expected: cell.rank() + 2,
            got: point.n(),
        });
    }
    let mut p = point.clone();
    let mut c = cell.clone();
    loop {
        if model == Model::Strict {
            if let Some(pos) = c.labels.iter().position(|&id| id == x.unit()) {
                p = d_k(pos + 2, &p)?;
                c.labels.remove(pos);
                continue;
            }
        }
        if is_boundary(&p) {
            let (j, _outer, t, rho, _tau) = face_decompose(&p)?;
            c = face_step(x, &c, j, t)?;
            p = rho;
            continue;
        }
        break;
    }
    Ok((p, c))
}

/// Attachment record for one boundary face of a cell: the face slot and
/// inner arity, the normal-form target cell, and the degeneracy slots the
/// strict model applied after the face step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub face_j: usize,
    pub face_t: usize,
    pub target_rank: usize,
    pub target_index: usize,
    pub collapses: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
struct RankLayer {
    cells: Vec<BarCell>,
    index: BTreeMap<BarCell, usize>,
    attachments: Vec<Vec<Attachment>>,
}

/// A filtration level of a two-sided bar construction: cells by rank with
/// their attachment records.
#[derive(Debug, Clone)]
pub struct BarComplex {
    level: usize,
    model: Model,
    carrier: Carrier,
    left: EndSpec,
    right: EndSpec,
    ranks: Vec<RankLayer>,
}

fn tuples(alphabet: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

/// Builds the level-`n` filtration of the two-sided bar construction with
/// the given end shapes.  The strict model enumerates unit-free label rows;
/// the hopf model keeps every label row and identifies only along faces.
pub fn build_bar(
    left: EndSpec,
    x: &FiniteMonoid,
    right: EndSpec,
    n: usize,
    model: Model,
) -> Result<BarComplex> {
    if n > 8 {
        return Err(Error::SizeLimit(format!(
            "bar filtration level {n} exceeds the supported 8"
        )));
    }
    let alphabet: Vec<usize> = match model {
        Model::Strict => (0..x.len()).filter(|&id| id != x.unit()).collect(),
        Model::Hopf => (0..x.len()).collect(),
    };
    let end_values = |spec: EndSpec| -> Vec<Option<usize>> {
        match spec {
            EndSpec::Star => vec![None],
            EndSpec::Marked => (0..x.len()).map(Some).collect(),
        }
    };
    let lefts = end_values(left);
    let rights = end_values(right);
    let mut ranks: Vec<RankLayer> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let mut layer = RankLayer::default();
        for &l in &lefts {
            for row in tuples(&alphabet, r) {
                for &z in &rights {
                    let cell = BarCell::new(l, row.clone(), z);
                    layer.index.insert(cell.clone(), layer.cells.len());
                    layer.cells.push(cell);
                }
            }
        }
        layer.attachments = vec![Vec::new(); layer.cells.len()];
        ranks.push(layer);
    }
    for m in 1..=n {
        for ci in 0..ranks[m].cells.len() {
            let cell = ranks[m].cells[ci].clone();
            let mut records = Vec::new();
            for t in 2..=m + 1 {
                let outer = m + 3 - t;
                for j in 1..=outer {
                    let faced = face_step(x, &cell, j, t)?;
                    let (target, collapses) = match model {
                        Model::Strict => collapse_units(x, &faced),
                        Model::Hopf => (faced, Vec::new()),
                    };
                    let target_rank = target.rank();
                    debug_assert!(target_rank < m);
                    let target_index = *ranks[target_rank]
                        .index
                        .get(&target)
                        .ok_or_else(|| {
                            Error::Domain(format!(
                                "attachment target {} missing from the complex",
                                target.describe(x)
                            ))
                        })?;
                    records.push(Attachment {
                        face_j: j,
                        face_t: t,
                        target_rank,
                        target_index,
                        collapses,
                    });
                }
            }
            ranks[m].attachments[ci] = records;
        }
    }
    Ok(BarComplex {
        level: n,
        model,
        carrier: Carrier::Plain,
        left,
        right,
        ranks,
    })
}

impl BarComplex {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn left_spec(&self) -> EndSpec {
        self.left
    }

    pub fn right_spec(&self) -> EndSpec {
        self.right
    }

    pub fn cells(&self, rank: usize) -> &[BarCell] {
        self.ranks.get(rank).map_or(&[], |l| &l.cells)
    }

    pub fn attachments(&self, rank: usize, index: usize) -> &[Attachment] {
        &self.ranks[rank].attachments[index]
    }

    pub fn find(&self, cell: &BarCell) -> Option<(usize, usize)> {
        let rank = cell.rank();
        self.ranks
            .get(rank)
            .and_then(|l| l.index.get(cell))
            .map(|&i| (rank, i))
    }

    pub fn counts(&self) -> Vec<usize> {
        self.ranks.iter().map(|l| l.cells.len()).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.ranks.iter().map(|l| l.cells.len()).sum()
    }
}

/// Alternating sum of cell counts over ranks.
pub fn euler(bc: &BarComplex) -> i64 {
    bc.counts()
        .iter()
        .enumerate()
        .map(|(r, &c)| if r % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// The carrier-swapped twin of a complex: same cells and attachments, with
/// each K(r+2) replaced by the special zero-face of the half-parameter
/// polytope, matched pointwise by the radial homeomorphism.
pub fn primed_model(bc: &BarComplex) -> BarComplex {
    let mut out = bc.clone();
    out.carrier = Carrier::Primed;
    out
}

/// Forgets the left end mark; realizes the projections from marked-end
/// complexes to the star-ended ones.
pub fn forget_left(cell: &BarCell) -> BarCell {
    BarCell::new(None, cell.labels.clone(), cell.right)
}

/// The level-`n` stage of the projective filtration: the marked-end complex
/// (empty at level 0), the star-ended complex, and the distinguished top
/// cells whose left mark is the unit, attached into the marked-end complex.
#[derive(Debug, Clone)]
pub struct ProjectiveFiltration {
    pub level: usize,
    pub e: Option<BarComplex>,
    pub p: BarComplex,
    pub d_cells: Vec<BarCell>,
    pub d_attachments: Vec<Vec<Attachment>>,
}

pub fn projective_filtration(x: &FiniteMonoid, n: usize) -> Result<ProjectiveFiltration> {
    let e = if n == 0 {
        None
    } else {
        Some(build_bar(EndSpec::Marked, x, EndSpec::Star, n - 1, Model::Hopf)?)
    };
    let p = build_bar(EndSpec::Star, x, EndSpec::Star, n, Model::Hopf)?;
    let alphabet: Vec<usize> = (0..x.len()).collect();
    let mut d_cells = Vec::new();
    let mut d_attachments = Vec::new();
    for row in tuples(&alphabet, n) {
        let cell = BarCell::new(Some(x.unit()), row, None);
        let mut records = Vec::new();
        if n >= 1 {
            let e = e.as_ref().expect("marked-end complex exists for n >= 1");
            for t in 2..=n + 1 {
                let outer = n + 3 - t;
                for j in 1..=outer {
                    let target = face_step(x, &cell, j, t)?;
                    let (target_rank, target_index) = e.find(&target).ok_or_else(|| {
                        Error::Domain(format!(
                            "distinguished-cell face target {} missing",
                            target.describe(x)
                        ))
                    })?;
                    records.push(Attachment {
                        face_j: j,
                        face_t: t,
                        target_rank,
                        target_index,
                        collapses: Vec::new(),
                    });
                }
            }
        }
        d_cells.push(cell);
        d_attachments.push(records);
    }
    Ok(ProjectiveFiltration {
        level: n,
        e,
        p,
        d_cells,
        d_attachments,
    })
}

/// A monoid homomorphism by element images; unit preservation and
/// multiplicativity are table-checked.
#[derive(Debug, Clone)]
pub struct MonoidHom {
    map: Vec<usize>,
}

pub fn monoid_hom(src: &FiniteMonoid, dst: &FiniteMonoid, map: Vec<usize>) -> Result<MonoidHom> {
    if map.len() != src.len() {
        return Err(Error::Monoid(format!(
            "homomorphism map has {} entries for a {}-element monoid",
            map.len(),
            src.len()
        )));
    }
    for &id in &map {
        dst.check_id(id)?;
    }
    if map[src.unit()] != dst.unit() {
        return Err(Error::Monoid("homomorphism does not preserve the unit".into()));
    }
    for a in 0..src.len() {
        for b in 0..src.len() {
            let lhs = map[src.mul(a, b)];
            let rhs = dst.mul(map[a], map[b]);
            if lhs != rhs {
                return Err(Error::Monoid(format!(
                    "homomorphism is not multiplicative on ({}, {}): image of product is {}, product of images is {}",
                    src.name(a),
                    src.name(b),
                    dst.name(lhs),
                    dst.name(rhs),
                )));
            }
        }
    }
    Ok(MonoidHom { map })
}

impl MonoidHom {
    pub fn apply(&self, id: usize) -> usize {
        self.map[id]
    }
}

/// Label-wise application of a homomorphism to a cell.
pub fn induced_cell(hom: &MonoidHom, cell: &BarCell) -> BarCell {
    BarCell::new(
        cell.left.map(|y| hom.apply(y)),
        cell.labels.iter().map(|&id| hom.apply(id)).collect(),
        cell.right.map(|z| hom.apply(z)),
    )
}
