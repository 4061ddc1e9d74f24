//! Plane forests with signed labelings and their linear extensions.
//!
//! The partial order has roots on top: `x <_F y` when `y` is a proper ancestor
//! of `x`. A linear extension therefore lists every vertex after all of its
//! descendants.
//!
//! Vertices are numbered in depth-first preorder, trees left to right. In the
//! two-vertex forest `F_n` the root of the `i`-th tree (1-based) is vertex
//! `2(i-1)` and its child is `2(i-1)+1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::genfunc::Polynomial;
use crate::signedperm::{des_b_count, SignedWord};

/// Shape of one plane tree: a vertex with an ordered list of subtrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tree {
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree::default()
    }

    pub fn with_children(children: Vec<Tree>) -> Self {
        Tree { children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }
}

/// An ordered sequence of plane trees, stored as a preorder-indexed arena.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
    tree_of: Vec<usize>,
}

impl PlaneForest {
    pub fn empty() -> Self {
        PlaneForest::from_trees(&[])
    }

    pub fn from_trees(trees: &[Tree]) -> Self {
        fn push(f: &mut PlaneForest, t: &Tree, parent: Option<usize>, tree: usize) -> usize {
            let id = f.parent.len();
            f.parent.push(parent);
            f.children.push(Vec::new());
            f.tree_of.push(tree);
            for c in &t.children {
                let child = push(f, c, Some(id), tree);
                f.children[id].push(child);
            }
            id
        }
        let mut f = PlaneForest {
            parent: Vec::new(),
            children: Vec::new(),
            roots: Vec::new(),
            tree_of: Vec::new(),
        };
        for (k, t) in trees.iter().enumerate() {
            let r = push(&mut f, t, None, k);
            f.roots.push(r);
        }
        f
    }

    /// Nested shapes of the trees, left to right.
    pub fn trees(&self) -> Vec<Tree> {
        fn shape(f: &PlaneForest, v: usize) -> Tree {
            Tree { children: f.children[v].iter().map(|&c| shape(f, c)).collect() }
        }
        self.roots.iter().map(|&r| shape(self, r)).collect()
    }

    /// `F_n`: `n` trees, each a root with a single child.
    pub fn two_vertex_trees(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(Self::pairs(n))
    }

    fn pairs(n: usize) -> Self {
        let pair = Tree::with_children(vec![Tree::leaf()]);
        PlaneForest::from_trees(&vec![pair; n])
    }

    /// `F'_n`: `F_{n-1}` followed by a single isolated vertex.
    pub fn two_vertex_trees_plus_singleton(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(Self::pairs(n - 1).concat(&PlaneForest::from_trees(&[Tree::leaf()])))
    }

    /// The trees of `self` followed by the trees of `other`.
    pub fn concat(&self, other: &PlaneForest) -> PlaneForest {
        let mut trees = self.trees();
        trees.extend(other.trees());
        PlaneForest::from_trees(&trees)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn num_trees(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v].is_none()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Index of the tree containing `v`.
    pub fn tree_index(&self, v: usize) -> usize {
        self.tree_of[v]
    }

    /// Proper ancestors of `v`, nearest first.
    pub fn ancestors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        core::iter::successors(self.parent[v], move |&a| self.parent[a])
    }

    /// `x >_F y`: `x` is a proper ancestor of `y`.
    pub fn is_above(&self, x: usize, y: usize) -> bool {
        self.ancestors(y).any(|a| a == x)
    }

    /// Number of vertices in the subtree rooted at `v`.
    pub fn subtree_size(&self, v: usize) -> usize {
        1 + self.children[v].iter().map(|&c| self.subtree_size(c)).sum::<usize>()
    }

    /// The forest made of one tree of `self`, reindexed from 0.
    pub fn component(&self, k: usize) -> PlaneForest {
        PlaneForest::from_trees(&self.trees()[k..=k])
    }

    /// Vertex ids of tree `k`, in preorder.
    pub fn component_vertices(&self, k: usize) -> core::ops::Range<usize> {
        let r = self.roots[k];
        r..r + self.subtree_size(r)
    }

    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }
}

/// Nested parentheses: a forest is a sequence of trees and a tree is `(`, its
/// children forest, then `)`. So `()()` is two isolated vertices and
/// `(()())` a root with two children.
impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_tree(forest: &PlaneForest, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("(")?;
            for &c in forest.children(v) {
                write_tree(forest, c, f)?;
            }
            f.write_str(")")
        }
        for &r in &self.roots {
            write_tree(self, r, f)?;
        }
        Ok(())
    }
}

impl FromStr for PlaneForest {
    type Err = Error;

    /// Whitespace is ignored anywhere.
    fn from_str(s: &str) -> Result<Self> {
        let mut stack: Vec<Vec<Tree>> = vec![Vec::new()];
        for (pos, b) in s.bytes().enumerate() {
            match b {
                b'(' => stack.push(Vec::new()),
                b')' => {
                    if stack.len() < 2 {
                        return Err(Error::ForestSyntax(pos));
                    }
                    let children = stack.pop().unwrap();
                    stack.last_mut().unwrap().push(Tree { children });
                }
                b if b.is_ascii_whitespace() => {}
                _ => return Err(Error::ForestSyntax(pos)),
            }
        }
        if stack.len() != 1 {
            return Err(Error::ForestSyntax(s.len()));
        }
        Ok(PlaneForest::from_trees(&stack[0]))
    }
}

/// Backtracking stream of linear extensions (as vertex sequences).
///
/// At each step the smallest-index vertex whose children are all placed is
/// tried first, so output order is deterministic.
#[derive(Clone, Debug)]
pub struct LinearExtensions<'a> {
    forest: &'a PlaneForest,
    order: Vec<usize>,
    placed: Vec<bool>,
    pending: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    pub fn new(forest: &'a PlaneForest) -> Self {
        let n = forest.len();
        LinearExtensions {
            forest,
            order: Vec::with_capacity(n),
            placed: vec![false; n],
            pending: forest.children.iter().map(Vec::len).collect(),
            started: false,
            done: false,
        }
    }

    fn available_from(&self, start: usize) -> Option<usize> {
        (start..self.placed.len()).find(|&v| !self.placed[v] && self.pending[v] == 0)
    }

    fn place(&mut self, v: usize) {
        self.placed[v] = true;
        self.order.push(v);
        if let Some(p) = self.forest.parent[v] {
            self.pending[p] -= 1;
        }
    }

    fn fill(&mut self) {
        while self.order.len() < self.placed.len() {
            let v = self.available_from(0).expect("a forest always has an available vertex");
            self.place(v);
        }
    }

    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(&self.order);
        }
        while let Some(v) = self.order.pop() {
            self.placed[v] = false;
            if let Some(p) = self.forest.parent[v] {
                self.pending[p] += 1;
            }
            if let Some(next) = self.available_from(v + 1) {
                self.place(next);
                self.fill();
                return Some(&self.order);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// Assignment of nonzero signed labels to the vertices of a forest, indexed
/// by vertex id. Absolute values are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedLabeling(Vec<i32>);

impl SignedLabeling {
    pub fn new(forest: &PlaneForest, labels: Vec<i32>) -> Result<Self> {
        if labels.len() != forest.len() {
            return Err(Error::IncompleteLabeling { labels: labels.len(), vertices: forest.len() });
        }
        let mut abs: Vec<u32> = labels.iter().map(|a| a.unsigned_abs()).collect();
        abs.sort_unstable();
        if abs.first() == Some(&0) || abs.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidLabeling);
        }
        Ok(SignedLabeling(labels))
    }

    /// Labeling of `F_n` (or of `F'_n` when `singleton` is given) from one
    /// type per two-vertex tree.
    pub fn from_types(types: &[LabelingType], singleton: Option<i32>) -> SignedLabeling {
        let mut labels = Vec::with_capacity(2 * types.len() + 1);
        for (k, t) in types.iter().enumerate() {
            let (root, child) = t.labels(k + 1);
            labels.push(root);
            labels.push(child);
        }
        labels.extend(singleton);
        SignedLabeling(labels)
    }

    pub fn label(&self, v: usize) -> i32 {
        self.0[v]
    }

    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    /// Labels of tree `k`'s vertices.
    pub fn restrict(&self, forest: &PlaneForest, k: usize) -> SignedLabeling {
        SignedLabeling(self.0[forest.component_vertices(k)].to_vec())
    }
}

/// The four labelings of the `i`-th two-vertex tree (root `u_i`, child `v_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelingType {
    /// `u = 2i`, `v = 2i-1`
    Type1,
    /// `u = 2i`, `v = -(2i-1)`
    Type2,
    /// `u = -2i`, `v = 2i-1`
    Type3,
    /// `u = -(2i-1)`, `v = -2i`
    Type4,
}

impl LabelingType {
    pub const ALL: [LabelingType; 4] =
        [LabelingType::Type1, LabelingType::Type2, LabelingType::Type3, LabelingType::Type4];

    /// `(w(u_i), w(v_i))` for the 1-based tree index `i`.
    pub fn labels(self, i: usize) -> (i32, i32) {
        let even = 2 * i as i32;
        let odd = even - 1;
        match self {
            LabelingType::Type1 => (even, odd),
            LabelingType::Type2 => (even, -odd),
            LabelingType::Type3 => (-even, odd),
            LabelingType::Type4 => (-odd, -even),
        }
    }
}

/// Families of labeled forests built from two-vertex trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelingFamily {
    /// `L(F_n)`: any type on each of the `n` trees; generates `F_n(x)`.
    Pairs,
    /// `L(F'_n)`: types on `n-1` trees, singleton `-(2n-1)`; generates `F'_n(x)`.
    PairsNegativeSingleton,
    /// `L̄(F'_n)`: types on `n-1` trees, singleton `±(2n-1)`; generates `G_n(x)`.
    PairsSignedSingleton,
}

impl LabelingFamily {
    pub fn forest(self, n: usize) -> Result<PlaneForest> {
        match self {
            LabelingFamily::Pairs => PlaneForest::two_vertex_trees(n),
            _ => PlaneForest::two_vertex_trees_plus_singleton(n),
        }
    }

    pub fn labelings(self, n: usize) -> Result<Labelings> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let (pairs, singleton_signs) = match self {
            LabelingFamily::Pairs => (n, 0),
            LabelingFamily::PairsNegativeSingleton => (n - 1, 1),
            LabelingFamily::PairsSignedSingleton => (n - 1, 2),
        };
        Ok(Labelings { digits: vec![0; pairs], sign: 0, singleton_signs, n, done: false })
    }

    /// Number of labelings in the family.
    pub fn count(self, n: usize) -> u64 {
        match self {
            LabelingFamily::Pairs => 4u64.pow(n as u32),
            LabelingFamily::PairsNegativeSingleton => 4u64.pow(n.saturating_sub(1) as u32),
            LabelingFamily::PairsSignedSingleton => 2 * 4u64.pow(n.saturating_sub(1) as u32),
        }
    }
}

/// Stream of labelings of a [`LabelingFamily`]: a base-4 counter over the
/// tree types (last tree fastest), with the singleton sign as the least
/// significant digit, negative first.
#[derive(Clone, Debug)]
pub struct Labelings {
    digits: Vec<u8>,
    sign: u8,
    singleton_signs: u8,
    n: usize,
    done: bool,
}

impl Iterator for Labelings {
    type Item = SignedLabeling;

    fn next(&mut self) -> Option<SignedLabeling> {
        if self.done {
            return None;
        }
        let types: Vec<LabelingType> =
            self.digits.iter().map(|&d| LabelingType::ALL[d as usize]).collect();
        let odd = 2 * self.n as i32 - 1;
        let singleton = match self.singleton_signs {
            0 => None,
            _ if self.sign == 0 => Some(-odd),
            _ => Some(odd),
        };
        let out = SignedLabeling::from_types(&types, singleton);

        // increment
        if self.sign + 1 < self.singleton_signs {
            self.sign += 1;
            return Some(out);
        }
        self.sign = 0;
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < 4 {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Linear extensions of `(F, w)` as signed words.
#[derive(Clone, Debug)]
pub struct LabeledExtensions<'a> {
    extensions: LinearExtensions<'a>,
    labeling: &'a SignedLabeling,
    word: Vec<i32>,
}

impl LabeledExtensions<'_> {
    pub fn advance(&mut self) -> Option<&[i32]> {
        let order = self.extensions.advance()?;
        for (slot, &v) in self.word.iter_mut().zip(order) {
            *slot = self.labeling.0[v];
        }
        Some(&self.word)
    }
}

impl Iterator for LabeledExtensions<'_> {
    type Item = SignedWord;

    fn next(&mut self) -> Option<SignedWord> {
        let w = self.advance()?.to_vec();
        Some(SignedWord::new(w).expect("labels are nonzero"))
    }
}

pub fn linear_extensions_labeled<'a>(
    forest: &'a PlaneForest,
    labeling: &'a SignedLabeling,
) -> Result<LabeledExtensions<'a>> {
    if labeling.0.len() != forest.len() {
        return Err(Error::IncompleteLabeling { labels: labeling.0.len(), vertices: forest.len() });
    }
    Ok(LabeledExtensions {
        extensions: forest.linear_extensions(),
        labeling,
        word: vec![0; forest.len()],
    })
}

/// Sends each letter `±(2i-1)` or `±2i` to `±i`, keeping its sign.
///
/// Requires the absolute values to be exactly `{1, ..., 2n}` for some `n`.
pub fn phi(sigma: &[i32]) -> Result<SignedWord> {
    let len = sigma.len();
    let mut seen = vec![false; len + 1];
    for &a in sigma {
        let v = a.unsigned_abs() as usize;
        if len % 2 == 1 || v == 0 || v > len || seen[v] {
            return Err(Error::NotSignedPermutation(len));
        }
        seen[v] = true;
    }
    let tau = sigma
        .iter()
        .map(|&a| {
            let m = (a.unsigned_abs() as i32 + 1) / 2;
            if a < 0 {
                -m
            } else {
                m
            }
        })
        .collect();
    SignedWord::new(tau)
}

/// `des_B` distribution over the linear extensions of one labeled forest.
pub fn labeled_forest_distribution(
    forest: &PlaneForest,
    labeling: &SignedLabeling,
) -> Result<Distribution> {
    let mut words = linear_extensions_labeled(forest, labeling)?;
    let mut dist = Distribution::new();
    while let Some(w) = words.advance() {
        dist.record(des_b_count(w));
    }
    Ok(dist)
}

/// `sum over w in the family, sum over sigma in L(F, w) of x^{des_B(sigma)}`:
/// `F_n(x)`, `F'_n(x)` or `G_n(x)`.
pub fn forest_descent_polynomial(family: LabelingFamily, n: usize) -> Result<Polynomial> {
    let forest = family.forest(n)?;
    let mut dist = Distribution::new();
    for w in family.labelings(n)? {
        dist.merge(&labeled_forest_distribution(&forest, &w)?);
    }
    Ok(dist.to_polynomial())
}
