//! Shared fixtures: the two A3 quivers and the hand-transcribed diagrams of
//! their tilting posets.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use cluster_poset::Quiver;

pub fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/quivers").join(name)
}

pub fn load(name: &str) -> Quiver {
    Quiver::parse(&std::fs::read_to_string(data_file(name)).expect("bundled quiver file")).expect("valid quiver")
}

/// `"00-1"` -> `[0, 0, -1]`.
pub fn root(code: &str) -> Vec<i64> {
    let mut out = Vec::new();
    let mut negative = false;
    for ch in code.chars() {
        match ch {
            '-' => negative = true,
            '0' | '1' => {
                let v = i64::from(ch == '1');
                out.push(if negative { -v } else { v });
                negative = false;
            }
            _ => panic!("bad root code {code}"),
        }
    }
    out
}

pub struct Node {
    pub roots: [&'static str; 3],
    pub bold: bool,
}

const fn node(roots: [&'static str; 3], bold: bool) -> Node {
    Node { roots, bold }
}

pub struct Diagram {
    pub nodes: Vec<Node>,
    /// 1-based node numbers, as drawn.
    pub edges: Vec<(usize, usize)>,
    pub minimum: usize,
    pub maximum: usize,
}

impl Diagram {
    pub fn object(&self, i: usize) -> BTreeSet<Vec<i64>> {
        self.nodes[i - 1].roots.iter().map(|c| root(c)).collect()
    }

    pub fn objects(&self) -> BTreeSet<BTreeSet<Vec<i64>>> {
        (1..=self.nodes.len()).map(|i| self.object(i)).collect()
    }

    pub fn bold(&self) -> BTreeSet<BTreeSet<Vec<i64>>> {
        (1..=self.nodes.len()).filter(|&i| self.nodes[i - 1].bold).map(|i| self.object(i)).collect()
    }

    /// Unoriented edges between objects.
    pub fn edge_set(&self) -> BTreeSet<BTreeSet<BTreeSet<Vec<i64>>>> {
        self.edges.iter().map(|&(a, b)| [self.object(a), self.object(b)].into_iter().collect()).collect()
    }
}

/// `1 -> 2 -> 3`.
pub fn top() -> Diagram {
    Diagram {
        nodes: vec![
            node(["010", "011", "111"], false),
            node(["010", "110", "111"], false),
            node(["001", "011", "111"], true),
            node(["100", "110", "111"], false),
            node(["010", "110", "00-1"], false),
            node(["001", "100", "111"], true),
            node(["100", "110", "00-1"], false),
            node(["010", "011", "-100"], false),
            node(["100", "0-10", "00-1"], false),
            node(["010", "00-1", "-100"], false),
            node(["001", "100", "0-10"], true),
            node(["001", "011", "-100"], true),
            node(["-100", "0-10", "00-1"], false),
            node(["001", "0-10", "-100"], true),
        ],
        edges: vec![
            (1, 2),
            (1, 8),
            (2, 4),
            (2, 5),
            (3, 1),
            (3, 6),
            (3, 12),
            (4, 7),
            (5, 7),
            (5, 10),
            (6, 4),
            (6, 11),
            (7, 9),
            (8, 10),
            (9, 13),
            (10, 13),
            (11, 9),
            (11, 14),
            (12, 8),
            (12, 14),
            (14, 13),
        ],
        minimum: 3,
        maximum: 13,
    }
}

/// `1 -> 2 <- 3`.
pub fn bottom() -> Diagram {
    Diagram {
        nodes: vec![
            node(["011", "010", "110"], false),
            node(["011", "111", "110"], false),
            node(["00-1", "010", "110"], true),
            node(["100", "111", "110"], false),
            node(["011", "111", "001"], false),
            node(["00-1", "100", "110"], true),
            node(["100", "111", "001"], false),
            node(["011", "010", "-100"], false),
            node(["100", "0-10", "001"], false),
            node(["011", "001", "-100"], false),
            node(["00-1", "100", "0-10"], true),
            node(["00-1", "010", "-100"], true),
            node(["-100", "0-10", "001"], false),
            node(["-100", "0-10", "00-1"], true),
        ],
        edges: vec![
            (1, 3),
            (1, 2),
            (1, 8),
            (2, 4),
            (2, 5),
            (3, 6),
            (3, 12),
            (4, 6),
            (4, 7),
            (5, 7),
            (5, 10),
            (6, 11),
            (7, 9),
            (8, 12),
            (8, 10),
            (9, 11),
            (9, 13),
            (10, 13),
            (11, 14),
            (12, 14),
            (13, 14),
        ],
        minimum: 1,
        maximum: 14,
    }
}

/// Every orientation of `A_n`.
pub fn type_a(n: usize) -> Vec<Quiver> {
    Quiver::linear_a(n).orientations()
}

/// Every orientation of `D_4` (centre `2`).
pub fn type_d4() -> Vec<Quiver> {
    Quiver::new(&["1", "2", "3", "4"], &[("1", "2"), ("3", "2"), ("4", "2")]).unwrap().orientations()
}
