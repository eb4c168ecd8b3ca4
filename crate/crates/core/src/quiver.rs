//! Finite quivers without oriented cycles, their Dynkin classification and
//! the root-system data used everywhere else (Euler form, simple
//! reflections, positive roots).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("quiver file is not valid JSON: {0}")]
    Json(String),
    #[error("quiver has no vertices")]
    Empty,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("arrow endpoint `{0}` is not a vertex")]
    DanglingArrow(String),
    #[error("quiver has an oriented cycle through `{0}`")]
    Cycle(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` is neither a sink nor a source")]
    NotTerminal(String),
    #[error("vertex `{0}` is not a sink")]
    NotSink(String),
    #[error("vertex `{0}` is not a source")]
    NotSource(String),
    #[error("quiver is not of Dynkin type (not representation-finite)")]
    NotRepresentationFinite,
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
}

/// On-disk shape: `{"vertices":[...],"arrows":[[src,tgt],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

/// A finite quiver without oriented cycles.
///
/// Vertices are addressed by their position in the input order; that order is
/// the coordinate order of every dimension vector and matrix built on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    Sink,
    Source,
}

impl Quiver {
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S)]) -> Result<Self, QuiverError> {
        if vertices.is_empty() {
            return Err(QuiverError::Empty);
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        let lookup =
            |s: &S| index.get(s.as_ref()).copied().ok_or_else(|| QuiverError::DanglingArrow(s.as_ref().to_string()));
        let arrows =
            arrows.iter().map(|(s, t)| Ok((lookup(s)?, lookup(t)?))).collect::<Result<Vec<_>, QuiverError>>()?;
        let labels = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_indices(labels, arrows)
    }

    /// Builds a quiver from labels and index pairs, checking acyclicity.
    pub fn from_indices(labels: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        let q = Quiver { labels, arrows };
        q.topological_order()?;
        Ok(q)
    }

    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let file: QuiverFile = serde_json::from_str(text).map_err(|e| QuiverError::Json(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &QuiverFile) -> Result<Self, QuiverError> {
        let arrows: Vec<(&str, &str)> = file.arrows.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
        let vertices: Vec<&str> = file.vertices.iter().map(String::as_str).collect();
        Self::new(&vertices, &arrows)
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            vertices: self.labels.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (self.labels[s].clone(), self.labels[t].clone())).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("quiver serializes")
    }

    /// The linearly oriented quiver `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_indices(labels, arrows).expect("a path is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex(&self, label: &str) -> Result<usize, QuiverError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| QuiverError::UnknownVertex(label.to_string()))
    }

    fn topological_order(&self) -> Result<Vec<usize>, QuiverError> {
        let n = self.labels.len();
        let mut indegree = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indegree[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).expect("some vertex left");
            return Err(QuiverError::Cycle(self.labels[stuck].clone()));
        }
        Ok(order)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// Sinks (no outgoing arrows) or sources (no incoming arrows), in vertex order.
    pub fn terminal_vertices(&self, kind: Terminal) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| match kind {
                Terminal::Sink => self.is_sink(v),
                Terminal::Source => self.is_source(v),
            })
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        self.terminal_vertices(Terminal::Sink)
    }

    pub fn sources(&self) -> Vec<usize> {
        self.terminal_vertices(Terminal::Source)
    }

    /// BGP reflection: reverse every arrow incident to the sink or source `x`.
    /// Arrow indices are preserved.
    pub fn reflect(&self, x: usize) -> Result<Quiver, QuiverError> {
        if !self.is_sink(x) && !self.is_source(x) {
            return Err(QuiverError::NotTerminal(self.labels[x].clone()));
        }
        let arrows = self.arrows.iter().map(|&(s, t)| if s == x || t == x { (t, s) } else { (s, t) }).collect();
        Ok(Quiver { labels: self.labels.clone(), arrows })
    }

    /// Full subquiver on all vertices except `x`.
    pub fn delete_vertex(&self, x: usize) -> Quiver {
        let reindex = |v: usize| if v > x { v - 1 } else { v };
        let labels = self.labels.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, l)| l.clone()).collect();
        let arrows =
            self.arrows.iter().filter(|&&(s, t)| s != x && t != x).map(|&(s, t)| (reindex(s), reindex(t))).collect();
        Quiver { labels, arrows }
    }

    /// Neighbours of `v` in the underlying graph, with multiplicity.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter_map(move |&(s, t)| {
            if s == v {
                Some(t)
            } else if t == v {
                Some(s)
            } else {
                None
            }
        })
    }

    /// Every orientation of the underlying graph, enumerated by flipping
    /// subsets of arrows. Arrow `i` is flipped when bit `i` of the mask is set.
    pub fn orientations(&self) -> Vec<Quiver> {
        let m = self.arrows.len();
        assert!(m < 20, "too many arrows to enumerate orientations");
        (0u32..(1 << m))
            .filter_map(|mask| {
                let arrows = self
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(i, &(s, t))| if mask & (1 << i) != 0 { (t, s) } else { (s, t) })
                    .collect();
                Quiver::from_indices(self.labels.clone(), arrows).ok()
            })
            .collect()
    }

    pub fn zero_vector(&self) -> DimensionVector {
        DimensionVector(vec![0; self.vertex_count()])
    }

    pub fn unit_vector(&self, v: usize) -> DimensionVector {
        let mut e = self.zero_vector();
        e.0[v] = 1;
        e
    }

    fn check_len(&self, d: &DimensionVector) -> Result<(), QuiverError> {
        if d.len() != self.vertex_count() {
            return Err(QuiverError::DimensionMismatch { expected: self.vertex_count(), got: d.len() });
        }
        Ok(())
    }

    /// Euler form of the path algebra:
    /// `<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j`.
    pub fn euler_form(&self, d: &DimensionVector, e: &DimensionVector) -> i64 {
        assert_eq!(d.len(), self.vertex_count());
        assert_eq!(e.len(), self.vertex_count());
        let diagonal: i64 = d.0.iter().zip(&e.0).map(|(a, b)| a * b).sum();
        let arrows: i64 = self.arrows.iter().map(|&(s, t)| d.0[s] * e.0[t]).sum();
        diagonal - arrows
    }

    /// The simple reflection `s_x`: the entry at `x` becomes
    /// `(sum of neighbour entries) - d_x`, everything else is unchanged.
    pub fn simple_reflection(&self, x: usize, d: &DimensionVector) -> DimensionVector {
        assert_eq!(d.len(), self.vertex_count());
        let around: i64 = self.neighbours(x).map(|y| d.0[y]).sum();
        let mut out = d.clone();
        out.0[x] = around - d.0[x];
        out
    }

    pub fn classify_dynkin(&self) -> Classification {
        classify(self)
    }

    pub fn is_representation_finite(&self) -> bool {
        !matches!(self.classify_dynkin(), Classification::NotRepresentationFinite)
    }

    /// All positive roots, sorted by total degree and then by descending
    /// lexicographic order (so `e_1` precedes `e_2`).
    pub fn positive_roots(&self) -> Result<Vec<DimensionVector>, QuiverError> {
        if !self.is_representation_finite() {
            return Err(QuiverError::NotRepresentationFinite);
        }
        let n = self.vertex_count();
        let mut seen: BTreeSet<DimensionVector> = (0..n).map(|v| self.unit_vector(v)).collect();
        let mut queue: VecDeque<DimensionVector> = seen.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for x in 0..n {
                let s = self.simple_reflection(x, &r);
                if s.is_nonnegative() && !s.is_zero() && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<DimensionVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| b.cmp(a)));
        Ok(roots)
    }

    pub fn dimension_vector(&self, entries: Vec<i64>) -> Result<DimensionVector, QuiverError> {
        let d = DimensionVector(entries);
        self.check_len(&d)?;
        Ok(d)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> =
            self.arrows.iter().map(|&(s, t)| format!("{}->{}", self.labels[s], self.labels[t])).collect();
        write!(f, "[{}] {{{}}}", self.labels.join(","), arrows.join(", "))
    }
}

/// Integer vector indexed by the quiver's vertices in canonical order.
/// Negative entries only occur in the almost-positive-root encoding of
/// shifted projectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(pub Vec<i64>);

impl DimensionVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `Some(v)` when this is the unit vector `e_v`.
    pub fn simple_vertex(&self) -> Option<usize> {
        let mut hit = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if hit.is_none() => hit = Some(i),
                _ => return None,
            }
        }
        hit
    }

    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    pub fn add(&self, other: &DimensionVector) -> DimensionVector {
        DimensionVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: DynkinFamily,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: DynkinFamily, rank: usize) -> Option<Self> {
        let ok = match family {
            DynkinFamily::A => rank >= 1,
            DynkinFamily::D => rank >= 4,
            DynkinFamily::E => (6..=8).contains(&rank),
        };
        ok.then_some(DynkinType { family, rank })
    }

    pub fn coxeter_number(&self) -> usize {
        match (self.family, self.rank) {
            (DynkinFamily::A, n) => n + 1,
            (DynkinFamily::D, n) => 2 * n - 2,
            (DynkinFamily::E, 6) => 12,
            (DynkinFamily::E, 7) => 18,
            (DynkinFamily::E, _) => 30,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Dynkin(DynkinType),
    /// Disconnected quiver whose components are all Dynkin.
    DynkinUnion(Vec<DynkinType>),
    NotRepresentationFinite,
}

fn classify(q: &Quiver) -> Classification {
    let n = q.vertex_count();
    let mut edges = BTreeSet::new();
    for &(s, t) in q.arrows() {
        if !edges.insert((s.min(t), s.max(t))) {
            // parallel arrows: Kronecker-like, never ADE
            return Classification::NotRepresentationFinite;
        }
    }
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }

    let mut component = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &w in &adjacency[v] {
                if component[w] == usize::MAX {
                    component[w] = id;
                    members.push(w);
                }
            }
            i += 1;
        }
        components.push(members);
    }

    let mut types = Vec::new();
    for members in &components {
        match classify_tree(members, &adjacency) {
            Some(t) => types.push(t),
            None => return Classification::NotRepresentationFinite,
        }
    }
    if types.len() == 1 {
        Classification::Dynkin(types[0])
    } else {
        types.sort();
        Classification::DynkinUnion(types)
    }
}

fn classify_tree(members: &[usize], adjacency: &[Vec<usize>]) -> Option<DynkinType> {
    let n = members.len();
    let edge_count: usize = members.iter().map(|&v| adjacency[v].len()).sum::<usize>() / 2;
    if edge_count + 1 != n {
        return None;
    }
    let branch: Vec<usize> = members.iter().copied().filter(|&v| adjacency[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => DynkinType::new(DynkinFamily::A, n),
        [b] if adjacency[*b].len() == 3 => {
            let mut arms: Vec<usize> = adjacency[*b]
                .iter()
                .map(|&start| {
                    // walk the arm away from the branch point
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next: Vec<usize> = adjacency[cur].iter().copied().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => break len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => unreachable!("single branch point"),
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => DynkinType::new(DynkinFamily::D, c + 3),
                [1, 2, 2] => DynkinType::new(DynkinFamily::E, 6),
                [1, 2, 3] => DynkinType::new(DynkinFamily::E, 7),
                [1, 2, 4] => DynkinType::new(DynkinFamily::E, 8),
                _ => None,
            }
        }
        _ => None,
    }
}
