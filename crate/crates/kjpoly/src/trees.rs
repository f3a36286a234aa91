//! Tree combinatorics: trivalent (rooted planar binary) trees, bearded
//! trees, their shadow/lattice coordinates, and the Polish-notation word
//! languages with parser and printer.
//!
//! Words use ASCII tokens: "x<i>" for leaves, "@" for trivalent nodes, and
//! "#", "n", "b" for the bearded alphabet (sharp, natural, flat). The parser
//! also accepts the typographic forms U+266F/U+266E/U+266D.

use crate::ratgeom::{rat, Rat, RatVec};
use crate::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

/// Rooted planar binary tree with implicitly numbered leaves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrivalentTree {
    Leaf,
    Node(Box<TrivalentTree>, Box<TrivalentTree>),
}

impl TrivalentTree {
    pub fn leaves(&self) -> usize {
        match self {
            TrivalentTree::Leaf => 1,
            TrivalentTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn node(l: TrivalentTree, r: TrivalentTree) -> Self {
        TrivalentTree::Node(Box::new(l), Box::new(r))
    }

    /// Left-right mirror image.
    pub fn mirror(&self) -> TrivalentTree {
        match self {
            TrivalentTree::Leaf => TrivalentTree::Leaf,
            TrivalentTree::Node(l, r) => TrivalentTree::node(r.mirror(), l.mirror()),
        }
    }
}

/// Trivalent tree with beard marks so that every leaf-to-root path meets
/// exactly one beard: either the whole tree hangs below one beard, or an
/// unbearded node joins two bearded subtrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BeardedTree {
    Beard(TrivalentTree),
    Node(Box<BeardedTree>, Box<BeardedTree>),
}

impl BeardedTree {
    pub fn leaves(&self) -> usize {
        match self {
            BeardedTree::Beard(t) => t.leaves(),
            BeardedTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn node(l: BeardedTree, r: BeardedTree) -> Self {
        BeardedTree::Node(Box::new(l), Box::new(r))
    }

    pub fn beards(&self) -> usize {
        match self {
            BeardedTree::Beard(_) => 1,
            BeardedTree::Node(l, r) => l.beards() + r.beards(),
        }
    }

    /// Nodes below the beard line.
    pub fn lower_nodes(&self) -> usize {
        match self {
            BeardedTree::Beard(_) => 0,
            BeardedTree::Node(l, r) => 1 + l.lower_nodes() + r.lower_nodes(),
        }
    }

    pub fn mirror(&self) -> BeardedTree {
        match self {
            BeardedTree::Beard(t) => BeardedTree::Beard(t.mirror()),
            BeardedTree::Node(l, r) => BeardedTree::node(r.mirror(), l.mirror()),
        }
    }
}

/// Word tokens over both alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    At,
    Sharp,
    Flat,
    Natural,
    Leaf(usize),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::At => write!(f, "@"),
            Token::Sharp => write!(f, "#"),
            Token::Flat => write!(f, "b"),
            Token::Natural => write!(f, "n"),
            Token::Leaf(i) => write!(f, "x{i}"),
        }
    }
}

pub fn tokens_to_string(tokens: &[Token]) -> String {
    tokens.iter().map(Token::to_string).collect()
}

/// Tokenize a word; positions are 1-based token ordinals.
pub fn tokenize(word: &str) -> Result<Vec<Token>> {
    let mut chars = word.chars().peekable();
    let mut tokens = Vec::new();
    while let Some(&c) = chars.peek() {
        let position = tokens.len() + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '@' => {
                chars.next();
                tokens.push(Token::At);
            }
            '#' | '\u{266F}' => {
                chars.next();
                tokens.push(Token::Sharp);
            }
            'b' | '\u{266D}' => {
                chars.next();
                tokens.push(Token::Flat);
            }
            'n' | '\u{266E}' => {
                chars.next();
                tokens.push(Token::Natural);
            }
            'x' => {
                chars.next();
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(Error::WordParse {
                        position,
                        message: "leaf token x must carry an index".into(),
                    });
                }
                let idx: usize = digits.parse().map_err(|_| Error::WordParse {
                    position,
                    message: format!("leaf index {digits} too large"),
                })?;
                if idx == 0 {
                    return Err(Error::WordParse {
                        position,
                        message: "leaf indices start at 1".into(),
                    });
                }
                tokens.push(Token::Leaf(idx));
            }
            other => {
                return Err(Error::WordParse {
                    position,
                    message: format!("unexpected character {other:?}"),
                });
            }
        }
    }
    Ok(tokens)
}

fn check_leaf_order(tokens: &[Token]) -> Result<usize> {
    let mut expect = 1usize;
    for (i, tok) in tokens.iter().enumerate() {
        if let Token::Leaf(idx) = tok {
            if *idx != expect {
                return Err(Error::WordParse {
                    position: i + 1,
                    message: format!("expected leaf x{expect}, found x{idx}"),
                });
            }
            expect += 1;
        }
    }
    Ok(expect - 1)
}

/// Postfix word of a trivalent tree: leaves in order, "@" after each node's
/// two subwords.
pub fn word(t: &TrivalentTree) -> String {
    tokens_to_string(&word_tokens(t))
}

pub fn word_tokens(t: &TrivalentTree) -> Vec<Token> {
    fn rec(t: &TrivalentTree, next: &mut usize, out: &mut Vec<Token>) {
        match t {
            TrivalentTree::Leaf => {
                out.push(Token::Leaf(*next));
                *next += 1;
            }
            TrivalentTree::Node(l, r) => {
                rec(l, next, out);
                rec(r, next, out);
                out.push(Token::At);
            }
        }
    }
    let mut out = Vec::new();
    rec(t, &mut 1, &mut out);
    out
}

/// Prefix word of a trivalent tree: "@" before each node's two subwords.
pub fn word_primed(t: &TrivalentTree) -> String {
    fn rec(t: &TrivalentTree, next: &mut usize, out: &mut String) {
        match t {
            TrivalentTree::Leaf => {
                out.push_str(&format!("x{next}"));
                *next += 1;
            }
            TrivalentTree::Node(l, r) => {
                out.push('@');
                rec(l, next, out);
                rec(r, next, out);
            }
        }
    }
    let mut out = String::new();
    rec(t, &mut 1, &mut out);
    out
}

/// Parse a postfix trivalent word.
pub fn parse_word(word: &str) -> Result<TrivalentTree> {
    let tokens = tokenize(word)?;
    check_leaf_order(&tokens)?;
    let mut stack: Vec<TrivalentTree> = Vec::new();
    for (i, tok) in tokens.iter().enumerate() {
        match tok {
            Token::Leaf(_) => stack.push(TrivalentTree::Leaf),
            Token::At => {
                let Some(r) = stack.pop() else {
                    return Err(Error::WordParse {
                        position: i + 1,
                        message: "node mark with no subtrees on the stack".into(),
                    });
                };
                let Some(l) = stack.pop() else {
                    return Err(Error::WordParse {
                        position: i + 1,
                        message: "node mark with a single subtree on the stack".into(),
                    });
                };
                stack.push(TrivalentTree::node(l, r));
            }
            other => {
                return Err(Error::WordParse {
                    position: i + 1,
                    message: format!("token {other} is not part of the trivalent alphabet"),
                });
            }
        }
    }
    match stack.len() {
        0 => Err(Error::WordParse {
            position: 1,
            message: "empty word".into(),
        }),
        1 => Ok(stack.pop().expect("length checked")),
        k => Err(Error::WordParse {
            position: tokens.len(),
            message: format!("word leaves {k} disconnected subtrees"),
        }),
    }
}

/// Parse a prefix trivalent word.
pub fn parse_word_primed(word: &str) -> Result<TrivalentTree> {
    let tokens = tokenize(word)?;
    check_leaf_order(&tokens)?;
    fn rec(tokens: &[Token], pos: &mut usize) -> Result<TrivalentTree> {
        match tokens.get(*pos) {
            Some(Token::Leaf(_)) => {
                *pos += 1;
                Ok(TrivalentTree::Leaf)
            }
            Some(Token::At) => {
                *pos += 1;
                let l = rec(tokens, pos)?;
                let r = rec(tokens, pos)?;
                Ok(TrivalentTree::node(l, r))
            }
            Some(other) => Err(Error::WordParse {
                position: *pos + 1,
                message: format!("token {other} is not part of the trivalent alphabet"),
            }),
            None => Err(Error::WordParse {
                position: *pos,
                message: "word ends inside a node".into(),
            }),
        }
    }
    let mut pos = 0usize;
    let t = rec(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::WordParse {
            position: pos + 1,
            message: "trailing tokens after a complete tree".into(),
        });
    }
    Ok(t)
}

/// All trivalent trees with n leaves, sorted by their postfix words.
pub fn enum_trivalent(n: usize) -> Result<Vec<TrivalentTree>> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one leaf".into()));
    }
    if n > 12 {
        return Err(Error::SizeLimit(format!(
            "trivalent enumeration limited to 12 leaves, got {n}"
        )));
    }
    fn build(n: usize, memo: &mut Vec<Option<Vec<TrivalentTree>>>) -> Vec<TrivalentTree> {
        if let Some(v) = &memo[n] {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push(TrivalentTree::Leaf);
        } else {
            for k in 1..n {
                let lefts = build(k, memo);
                let rights = build(n - k, memo);
                for l in &lefts {
                    for r in &rights {
                        out.push(TrivalentTree::node(l.clone(), r.clone()));
                    }
                }
            }
        }
        memo[n] = Some(out.clone());
        out
    }
    let mut memo = vec![None; n + 1];
    let mut trees = build(n, &mut memo);
    trees.sort_by_key(word_tokens);
    Ok(trees)
}

/// a-shadow: a_i counts the internal nodes whose rightmost leaf is x_i.
pub fn shadow_a(t: &TrivalentTree) -> RatVec {
    let n = t.leaves();
    let mut counts = vec![0i64; n];
    fn rec(t: &TrivalentTree, next: &mut usize, counts: &mut [i64]) -> usize {
        match t {
            TrivalentTree::Leaf => {
                let idx = *next;
                *next += 1;
                idx
            }
            TrivalentTree::Node(l, r) => {
                rec(l, next, counts);
                let rightmost = rec(r, next, counts);
                counts[rightmost] += 1;
                rightmost
            }
        }
    }
    rec(t, &mut 0, &mut counts);
    RatVec::from_ints(&counts)
}

/// b-shadow: b_i counts the internal nodes whose leftmost leaf is x_i.
pub fn shadow_b(t: &TrivalentTree) -> RatVec {
    let n = t.leaves();
    let mut counts = vec![0i64; n];
    fn rec(t: &TrivalentTree, next: &mut usize, counts: &mut [i64]) -> usize {
        match t {
            TrivalentTree::Leaf => {
                let idx = *next;
                *next += 1;
                idx
            }
            TrivalentTree::Node(l, r) => {
                let leftmost = rec(l, next, counts);
                rec(r, next, counts);
                counts[leftmost] += 1;
                leftmost
            }
        }
    }
    rec(t, &mut 0, &mut counts);
    RatVec::from_ints(&counts)
}

/// All bearded trees with n leaves, sorted by their words.
pub fn enum_bearded(n: usize) -> Result<Vec<BeardedTree>> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one leaf".into()));
    }
    if n > 9 {
        return Err(Error::SizeLimit(format!(
            "bearded enumeration limited to 9 leaves, got {n}"
        )));
    }
    fn build(
        n: usize,
        memo: &mut Vec<Option<Vec<BeardedTree>>>,
    ) -> Result<Vec<BeardedTree>> {
        if let Some(v) = &memo[n] {
            return Ok(v.clone());
        }
        let mut out: Vec<BeardedTree> = enum_trivalent(n)?
            .into_iter()
            .map(BeardedTree::Beard)
            .collect();
        for k in 1..n {
            let lefts = build(k, memo)?;
            let rights = build(n - k, memo)?;
            for l in &lefts {
                for r in &rights {
                    out.push(BeardedTree::node(l.clone(), r.clone()));
                }
            }
        }
        memo[n] = Some(out.clone());
        Ok(out)
    }
    let mut memo = vec![None; n + 1];
    let mut trees = build(n, &mut memo)?;
    trees.sort_by_key(bearded_word_tokens);
    Ok(trees)
}

/// Count bearded trees by the direct recursion
/// B(n) = C_{n-1} + sum_k B(k) B(n-k).
pub fn count_bearded_recursive(n: usize) -> u64 {
    fn rec(n: usize, memo: &mut Vec<Option<u64>>) -> u64 {
        if let Some(v) = memo[n] {
            return v;
        }
        let mut total = catalan(n - 1);
        for k in 1..n {
            total += rec(k, memo) * rec(n - k, memo);
        }
        memo[n] = Some(total);
        total
    }
    let mut memo = vec![None; n + 1];
    rec(n, &mut memo)
}

/// Independent count: choose the lower tree with t leaves (Catalan many) and
/// a composition of n into t upper-tree sizes (Catalan many each).
pub fn count_bearded_composition(n: usize) -> u64 {
    let mut total = 0u64;
    for t in 1..=n {
        let lower = catalan(t - 1);
        let mut comp_sum = 0u64;
        for parts in crate::multiplihedron::compositions(n, t) {
            comp_sum += parts.iter().map(|&m| catalan(m - 1)).product::<u64>();
        }
        total += lower * comp_sum;
    }
    total
}

pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k {
        c = c * 2 * (2 * i as u64 + 1) / (i as u64 + 2);
    }
    c
}

/// Postfix bearded word: upper trees use "#" for nodes, "n" closes a beard,
/// "b" joins two bearded subtrees below the beard line.
pub fn bearded_word(t: &BeardedTree) -> String {
    tokens_to_string(&bearded_word_tokens(t))
}

pub fn bearded_word_tokens(t: &BeardedTree) -> Vec<Token> {
    fn upper(t: &TrivalentTree, next: &mut usize, out: &mut Vec<Token>) {
        match t {
            TrivalentTree::Leaf => {
                out.push(Token::Leaf(*next));
                *next += 1;
            }
            TrivalentTree::Node(l, r) => {
                upper(l, next, out);
                upper(r, next, out);
                out.push(Token::Sharp);
            }
        }
    }
    fn rec(t: &BeardedTree, next: &mut usize, out: &mut Vec<Token>) {
        match t {
            BeardedTree::Beard(u) => {
                upper(u, next, out);
                out.push(Token::Natural);
            }
            BeardedTree::Node(l, r) => {
                rec(l, next, out);
                rec(r, next, out);
                out.push(Token::Flat);
            }
        }
    }
    let mut out = Vec::new();
    rec(t, &mut 1, &mut out);
    out
}

/// Prefix bearded word: "#" before a node inside an upper tree, "n" before
/// the upper tree of a beard, "b" before two bearded subwords.
pub fn bearded_word_primed(t: &BeardedTree) -> String {
    fn upper(t: &TrivalentTree, next: &mut usize, out: &mut String) {
        match t {
            TrivalentTree::Leaf => {
                out.push_str(&format!("x{next}"));
                *next += 1;
            }
            TrivalentTree::Node(l, r) => {
                out.push('#');
                upper(l, next, out);
                upper(r, next, out);
            }
        }
    }
    fn rec(t: &BeardedTree, next: &mut usize, out: &mut String) {
        match t {
            BeardedTree::Beard(u) => {
                out.push('n');
                upper(u, next, out);
            }
            BeardedTree::Node(l, r) => {
                out.push('b');
                rec(l, next, out);
                rec(r, next, out);
            }
        }
    }
    let mut out = String::new();
    rec(t, &mut 1, &mut out);
    out
}

/// Parse a postfix bearded word.
pub fn parse_bearded(word: &str) -> Result<BeardedTree> {
    let tokens = tokenize(word)?;
    check_leaf_order(&tokens)?;
    enum Item {
        Upper(TrivalentTree),
        Bearded(BeardedTree),
    }
    let mut stack: Vec<Item> = Vec::new();
    for (i, tok) in tokens.iter().enumerate() {
        let position = i + 1;
        match tok {
            Token::Leaf(_) => stack.push(Item::Upper(TrivalentTree::Leaf)),
            Token::Sharp => {
                let (Some(Item::Upper(r)), Some(Item::Upper(l))) = (stack.pop(), stack.pop())
                else {
                    return Err(Error::WordParse {
                        position,
                        message: "sharp needs two upper subtrees on the stack".into(),
                    });
                };
                stack.push(Item::Upper(TrivalentTree::node(l, r)));
            }
            Token::Natural => {
                let Some(Item::Upper(u)) = stack.pop() else {
                    return Err(Error::WordParse {
                        position,
                        message: "natural needs an upper subtree on the stack".into(),
                    });
                };
                stack.push(Item::Bearded(BeardedTree::Beard(u)));
            }
            Token::Flat => {
                let (Some(Item::Bearded(r)), Some(Item::Bearded(l))) =
                    (stack.pop(), stack.pop())
                else {
                    return Err(Error::WordParse {
                        position,
                        message: "flat needs two bearded subtrees on the stack".into(),
                    });
                };
                stack.push(Item::Bearded(BeardedTree::node(l, r)));
            }
            Token::At => {
                return Err(Error::WordParse {
                    position,
                    message: "@ is not part of the bearded alphabet".into(),
                });
            }
        }
    }
    match (stack.len(), stack.pop()) {
        (1, Some(Item::Bearded(t))) => Ok(t),
        (1, Some(Item::Upper(_))) => Err(Error::WordParse {
            position: tokens.len(),
            message: "word ends above the beard line (missing natural?)".into(),
        }),
        (0, _) => Err(Error::WordParse {
            position: 1,
            message: "empty word".into(),
        }),
        (k, _) => Err(Error::WordParse {
            position: tokens.len(),
            message: format!("word leaves {k} disconnected subtrees"),
        }),
    }
}

/// Parse a prefix bearded word.
pub fn parse_bearded_primed(word: &str) -> Result<BeardedTree> {
    let tokens = tokenize(word)?;
    check_leaf_order(&tokens)?;
    fn upper(tokens: &[Token], pos: &mut usize) -> Result<TrivalentTree> {
        match tokens.get(*pos) {
            Some(Token::Leaf(_)) => {
                *pos += 1;
                Ok(TrivalentTree::Leaf)
            }
            Some(Token::Sharp) => {
                *pos += 1;
                let l = upper(tokens, pos)?;
                let r = upper(tokens, pos)?;
                Ok(TrivalentTree::node(l, r))
            }
            Some(other) => Err(Error::WordParse {
                position: *pos + 1,
                message: format!("expected an upper subtree, found {other}"),
            }),
            None => Err(Error::WordParse {
                position: *pos,
                message: "word ends inside an upper subtree".into(),
            }),
        }
    }
    fn rec(tokens: &[Token], pos: &mut usize) -> Result<BeardedTree> {
        match tokens.get(*pos) {
            Some(Token::Natural) => {
                *pos += 1;
                Ok(BeardedTree::Beard(upper(tokens, pos)?))
            }
            Some(Token::Flat) => {
                *pos += 1;
                let l = rec(tokens, pos)?;
                let r = rec(tokens, pos)?;
                Ok(BeardedTree::node(l, r))
            }
            Some(other) => Err(Error::WordParse {
                position: *pos + 1,
                message: format!("expected a bearded subtree, found {other}"),
            }),
            None => Err(Error::WordParse {
                position: *pos,
                message: "word ends inside a bearded subtree".into(),
            }),
        }
    }
    let mut pos = 0usize;
    let t = rec(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::WordParse {
            position: pos + 1,
            message: "trailing tokens after a complete tree".into(),
        });
    }
    Ok(t)
}

/// Half-integer coordinates of a bearded tree, decoded from the segments of
/// its postfix word: after x_i a run of k sharps contributes k, and a
/// natural followed by l flats contributes (l + 1)/2 more.
pub fn v_coords(t: &BeardedTree) -> RatVec {
    let tokens = bearded_word_tokens(t);
    let n = t.leaves();
    let mut out = Vec::with_capacity(n);
    let mut i = 0usize;
    // Skip to the first leaf (the postfix word always starts with one).
    while !matches!(tokens.get(i), Some(Token::Leaf(_))) {
        i += 1;
    }
    for _ in 0..n {
        i += 1; // step past the leaf
        let mut val = Rat::zero();
        while let Some(tok) = tokens.get(i) {
            match tok {
                Token::Sharp => {
                    val += rat(1, 1);
                    i += 1;
                }
                Token::Natural => {
                    i += 1;
                    let mut flats = 0i64;
                    while matches!(tokens.get(i), Some(Token::Flat)) {
                        flats += 1;
                        i += 1;
                    }
                    val += rat(flats + 1, 2);
                    break;
                }
                Token::Leaf(_) => break,
                Token::Flat | Token::At => break,
            }
        }
        out.push(val);
    }
    RatVec(out)
}

/// Dual coordinates via the mirror image: u(t) = reverse(v(mirror(t))).
pub fn u_coords(t: &BeardedTree) -> RatVec {
    v_coords(&t.mirror()).reversed()
}

/// u-coordinates decoded directly from the prefix word: before x_i a run of
/// k sharps contributes k, and l flats followed by a natural contribute
/// (l + 1)/2 more.
pub fn u_coords_from_primed_word(word: &str) -> Result<RatVec> {
    let tokens = tokenize(word)?;
    let t = parse_bearded_primed(word)?;
    let n = t.leaves();
    let mut out = Vec::with_capacity(n);
    let mut i = 0usize;
    for _ in 0..n {
        let mut val = Rat::zero();
        let mut flats = 0i64;
        while let Some(tok) = tokens.get(i) {
            match tok {
                Token::Flat => {
                    flats += 1;
                    i += 1;
                }
                Token::Natural => {
                    val += rat(flats + 1, 2);
                    flats = 0;
                    i += 1;
                }
                Token::Sharp => {
                    val += rat(1, 1);
                    i += 1;
                }
                Token::Leaf(_) => {
                    i += 1;
                    break;
                }
                Token::At => break,
            }
        }
        out.push(val);
    }
    Ok(RatVec(out))
}

/// Integer lattice vertex set of K(n): all a-shadows.
pub fn k_lattice(n: usize) -> Result<BTreeSet<RatVec>> {
    Ok(enum_trivalent(n)?.iter().map(shadow_a).collect())
}

/// Reversed lattice: all b-shadows.
pub fn k_lattice_dual(n: usize) -> Result<BTreeSet<RatVec>> {
    Ok(enum_trivalent(n)?.iter().map(shadow_b).collect())
}

/// Half-integer lattice vertex set of J(n): all v-coordinate vectors.
pub fn j_lattice(n: usize) -> Result<BTreeSet<RatVec>> {
    Ok(enum_bearded(n)?.iter().map(v_coords).collect())
}

/// Dual half-integer lattice: all u-coordinate vectors.
pub fn j_lattice_dual(n: usize) -> Result<BTreeSet<RatVec>> {
    Ok(enum_bearded(n)?.iter().map(u_coords).collect())
}
