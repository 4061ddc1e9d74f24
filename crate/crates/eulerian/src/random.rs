//! Seeded random plane forests with random signed labelings.

use eulerian_core::forest::{PlaneForest, SignedLabeling, Tree};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random plane tree on `size >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, size: usize) -> Tree {
    let mut rest = size - 1;
    let mut children = Vec::new();
    while rest > 0 {
        let k = rng.gen_range(1..=rest);
        children.push(random_tree(rng, k));
        rest -= k;
    }
    Tree::with_children(children)
}

/// A random forest on `1..=max_vertices` vertices, labeled by a random
/// signed permutation of `1..=|V|`.
pub fn random_labeled_forest<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
) -> (PlaneForest, SignedLabeling) {
    let n = rng.gen_range(1..=max_vertices);
    let mut rest = n;
    let mut trees = Vec::new();
    while rest > 0 {
        let k = rng.gen_range(1..=rest);
        trees.push(random_tree(rng, k));
        rest -= k;
    }
    let forest = PlaneForest::from_trees(&trees);
    let mut labels: Vec<i32> = (1..=n as i32).collect();
    labels.shuffle(rng);
    for a in labels.iter_mut() {
        if rng.gen_bool(0.5) {
            *a = -*a;
        }
    }
    let w = SignedLabeling::new(&forest, labels).expect("signed permutation labels are valid");
    (forest, w)
}
