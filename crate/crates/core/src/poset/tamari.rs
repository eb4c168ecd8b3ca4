//! Tamari lattice on binary trees ordered by right rotation.
//! Deliberately shares nothing with the cluster code: it is the oracle the
//! linear type-A tilting posets are compared against.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use super::FinitePoset;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    /// All binary trees with `n` internal nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for size in 1..=n {
            let mut trees = Vec::new();
            for left in 0..size {
                for l in &table[left] {
                    for r in &table[size - 1 - left] {
                        trees.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(trees);
        }
        table.swap_remove(n)
    }

    /// Every tree reachable by one right rotation `(A B) C -> A (B C)`
    /// at some node.
    pub fn right_rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(a, b) = l.as_ref() {
                out.push(BinaryTree::node((**a).clone(), BinaryTree::node((**b).clone(), (**r).clone())));
            }
            for l2 in l.right_rotations() {
                out.push(BinaryTree::node(l2, (**r).clone()));
            }
            for r2 in r.right_rotations() {
                out.push(BinaryTree::node((**l).clone(), r2));
            }
        }
        out
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// The Tamari lattice matched with linearly oriented `A_n`: binary trees
/// with `n + 1` internal nodes (`n + 2` leaves), Catalan(`n + 1`) elements,
/// ordered by the reflexive-transitive closure of right rotation.
pub fn tamari(n: usize) -> FinitePoset<BinaryTree> {
    let trees = BinaryTree::all(n + 1);
    let index: HashMap<&BinaryTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let moves: Vec<Vec<usize>> = trees.iter().map(|t| t.right_rotations().iter().map(|u| index[u]).collect()).collect();
    let reach: Vec<BTreeSet<usize>> = (0..trees.len())
        .map(|start| {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for &u in &moves[t] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            seen
        })
        .collect();
    FinitePoset::from_fn(trees.clone(), |a, b| reach[a].contains(&b)).expect("rotation order is a partial order")
}
