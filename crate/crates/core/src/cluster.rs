//! Cluster-category indecomposables, cluster tilting objects and their
//! torsion-class order.
//!
//! For a Dynkin quiver the indecomposables are the positive roots (modules)
//! together with one shifted projective `P_y[1]` per vertex, rendered as the
//! negative simple root `-e_y`. A [`ClusterCategory`] materializes every
//! indecomposable module once and answers compatibility, mutation and
//! `fac`-inclusion questions from those explicit matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use crate::poset::{FinitePoset, PosetError};
use crate::quiver::{Classification, DimensionVector, Quiver, QuiverError};
use crate::repr::{self, ReprError, Representation};

/// Bitmasks over indecomposables and roots are `u128`.
pub const MAX_INDECOMPOSABLES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("{0} indecomposables exceed the supported maximum of {MAX_INDECOMPOSABLES}")]
    TooLarge(usize),
    #[error("{0} is not an indecomposable of this cluster category")]
    UnknownIndecomposable(String),
    #[error("{0} is not a summand of the cluster tilting object")]
    NotASummand(String),
    #[error("mutation found {0} candidate complements instead of exactly one")]
    MutationCandidates(usize),
    #[error("maximal compatible set of size {size}, expected {expected}")]
    WrongSize { size: usize, expected: usize },
    #[error("not a cluster tilting object: {0}")]
    NotClusterTilting(String),
    #[error("two cluster tilting objects share a torsion class: {0} and {1}")]
    FingerprintCollision(String, String),
    #[error("vertex `{0}` is not a sink")]
    NotSink(String),
    #[error("vertex `{0}` is not a source")]
    NotSource(String),
    #[error("{object} does not contain {summand}")]
    MissingSummand { object: String, summand: String },
}

/// An indecomposable object of the cluster category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClusterIndec {
    /// An indecomposable module, identified by its dimension vector.
    Module(DimensionVector),
    /// The shifted projective `P_y[1]`.
    Shifted(usize),
}

impl ClusterIndec {
    /// Almost-positive-root encoding: shifted projectives become `-e_y`.
    pub fn almost_positive_root(&self, rank: usize) -> Vec<i64> {
        match self {
            ClusterIndec::Module(d) => d.0.clone(),
            ClusterIndec::Shifted(y) => {
                let mut v = vec![0; rank];
                v[*y] = -1;
                v
            }
        }
    }

    pub fn from_almost_positive_root(root: &[i64]) -> Option<ClusterIndec> {
        if root.iter().all(|&c| c >= 0) && root.iter().any(|&c| c > 0) {
            return Some(ClusterIndec::Module(DimensionVector(root.to_vec())));
        }
        let negatives: Vec<usize> = (0..root.len()).filter(|&i| root[i] != 0).collect();
        match negatives.as_slice() {
            [y] if root[*y] == -1 => Some(ClusterIndec::Shifted(*y)),
            _ => None,
        }
    }

    pub fn is_module(&self) -> bool {
        matches!(self, ClusterIndec::Module(_))
    }

    fn render(&self, rank: usize) -> String {
        format!("{:?}", self.almost_positive_root(rank))
    }
}

/// A cluster tilting object: `n` pairwise compatible indecomposables, kept
/// sorted by their almost-positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClusterTilting {
    summands: Vec<ClusterIndec>,
    rank: usize,
}

impl ClusterTilting {
    fn new(mut summands: Vec<ClusterIndec>, rank: usize) -> Self {
        summands.sort_by_key(|s| s.almost_positive_root(rank));
        ClusterTilting { summands, rank }
    }

    pub fn summands(&self) -> &[ClusterIndec] {
        &self.summands
    }

    pub fn contains(&self, c: &ClusterIndec) -> bool {
        self.summands.contains(c)
    }

    /// `T-hat`: the module summands.
    pub fn module_part(&self) -> Vec<&DimensionVector> {
        self.summands
            .iter()
            .filter_map(|s| match s {
                ClusterIndec::Module(d) => Some(d),
                ClusterIndec::Shifted(_) => None,
            })
            .collect()
    }

    pub fn roots(&self) -> Vec<Vec<i64>> {
        self.summands.iter().map(|s| s.almost_positive_root(self.rank)).collect()
    }

    /// JSON export: sorted list of almost-positive roots.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self.roots()).expect("integer arrays serialize")
    }

    /// Support of `T-hat`.
    pub fn module_support(&self) -> BTreeSet<usize> {
        self.module_part().iter().flat_map(|d| (0..d.len()).filter(|&v| d.get(v) > 0)).collect()
    }
}

impl fmt::Display for ClusterTilting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.roots()).expect("serializes"))
    }
}

impl PartialOrd for ClusterTilting {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClusterTilting {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.roots().cmp(&other.roots())
    }
}

/// The indecomposables in `fac T`, as dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionFingerprint(pub BTreeSet<DimensionVector>);

impl TorsionFingerprint {
    pub fn contains(&self, d: &DimensionVector) -> bool {
        self.0.contains(d)
    }

    pub fn is_superset(&self, other: &TorsionFingerprint) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummandKind {
    /// Objects containing the projective `P_x`.
    Projective(usize),
    /// Objects containing the shifted projective `P_x[1]`.
    ShiftedProjective(usize),
}

/// Cluster category of a Dynkin quiver with all indecomposables materialized.
pub struct ClusterCategory {
    quiver: Quiver,
    roots: Vec<DimensionVector>,
    modules: Vec<Representation>,
    indecs: Vec<ClusterIndec>,
    ext: Vec<Vec<usize>>,
    compatible: Vec<u128>,
    objects: OnceLock<Result<Vec<ClusterTilting>, ClusterError>>,
    fingerprints: OnceLock<Vec<u128>>,
}

impl fmt::Debug for ClusterCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClusterCategory")
            .field("quiver", &self.quiver.to_string())
            .field("indecomposables", &self.indecs.len())
            .finish()
    }
}

impl ClusterCategory {
    pub fn new(quiver: &Quiver) -> Result<Self, ClusterError> {
        let roots = quiver.positive_roots()?;
        let n = quiver.vertex_count();
        let total = roots.len() + n;
        if total > MAX_INDECOMPOSABLES {
            return Err(ClusterError::TooLarge(total));
        }
        let modules =
            roots.par_iter().map(|d| repr::indecomposable_of_root(quiver, d)).collect::<Result<Vec<_>, _>>()?;
        let indecs: Vec<ClusterIndec> =
            roots.iter().cloned().map(ClusterIndec::Module).chain((0..n).map(ClusterIndec::Shifted)).collect();

        // Ext^1 between modules, computed once per ordered pair
        let module_ext: Vec<Vec<usize>> = (0..roots.len())
            .into_par_iter()
            .map(|i| (0..roots.len()).map(|j| repr::ext1_dim(&modules[i], &modules[j])).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let ext: Vec<Vec<usize>> = (0..total)
            .map(|a| {
                (0..total)
                    .map(|b| match (&indecs[a], &indecs[b]) {
                        (ClusterIndec::Module(_), ClusterIndec::Module(_)) => module_ext[a][b] + module_ext[b][a],
                        (ClusterIndec::Module(d), ClusterIndec::Shifted(y))
                        | (ClusterIndec::Shifted(y), ClusterIndec::Module(d)) => d.get(*y) as usize,
                        (ClusterIndec::Shifted(_), ClusterIndec::Shifted(_)) => 0,
                    })
                    .collect()
            })
            .collect();
        let compatible = (0..total)
            .map(|a| (0..total).filter(|&b| b != a && ext[a][b] == 0).fold(0u128, |m, b| m | (1 << b)))
            .collect();

        Ok(ClusterCategory {
            quiver: quiver.clone(),
            roots,
            modules,
            indecs,
            ext,
            compatible,
            objects: OnceLock::new(),
            fingerprints: OnceLock::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn classification(&self) -> Classification {
        self.quiver.classify_dynkin()
    }

    pub fn positive_roots(&self) -> &[DimensionVector] {
        &self.roots
    }

    pub fn indecomposables(&self) -> &[ClusterIndec] {
        &self.indecs
    }

    /// Explicit indecomposable module for a positive root.
    pub fn module(&self, d: &DimensionVector) -> Option<&Representation> {
        self.root_index(d).map(|i| &self.modules[i])
    }

    pub fn root_index(&self, d: &DimensionVector) -> Option<usize> {
        self.roots.iter().position(|r| r == d)
    }

    pub fn index_of(&self, c: &ClusterIndec) -> Result<usize, ClusterError> {
        self.indecs
            .iter()
            .position(|x| x == c)
            .ok_or_else(|| ClusterError::UnknownIndecomposable(c.render(self.rank())))
    }

    pub fn projective_root(&self, x: usize) -> DimensionVector {
        Representation::projective(&self.quiver, x).dim_vector()
    }

    /// `dim Ext^1` in the cluster category (symmetric).
    pub fn ext1_cluster(&self, a: &ClusterIndec, b: &ClusterIndec) -> Result<usize, ClusterError> {
        Ok(self.ext[self.index_of(a)?][self.index_of(b)?])
    }

    fn mask_of(&self, t: &ClusterTilting) -> Result<u128, ClusterError> {
        t.summands.iter().try_fold(0u128, |m, c| Ok(m | (1 << self.index_of(c)?)))
    }

    fn object_from_mask(&self, mask: u128) -> ClusterTilting {
        let summands =
            (0..self.indecs.len()).filter(|&i| mask & (1 << i) != 0).map(|i| self.indecs[i].clone()).collect();
        ClusterTilting::new(summands, self.rank())
    }

    fn is_compatible_set(&self, mask: u128) -> bool {
        (0..self.indecs.len())
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| self.ext[i][i] == 0 && (mask & !(1 << i)) & !self.compatible[i] == 0)
    }

    /// Validates a set of almost-positive roots as a cluster tilting object.
    pub fn object_from_roots(&self, roots: &[Vec<i64>]) -> Result<ClusterTilting, ClusterError> {
        let summands = roots
            .iter()
            .map(|r| {
                let c = ClusterIndec::from_almost_positive_root(r)
                    .ok_or_else(|| ClusterError::UnknownIndecomposable(format!("{r:?}")))?;
                self.index_of(&c)?;
                Ok(c)
            })
            .collect::<Result<Vec<_>, ClusterError>>()?;
        let t = ClusterTilting::new(summands, self.rank());
        self.check_cluster_tilting(&t)?;
        Ok(t)
    }

    pub fn check_cluster_tilting(&self, t: &ClusterTilting) -> Result<(), ClusterError> {
        let mask = self.mask_of(t)?;
        if mask.count_ones() as usize != self.rank() || t.summands.len() != self.rank() {
            return Err(ClusterError::NotClusterTilting(t.to_string()));
        }
        if !self.is_compatible_set(mask) {
            return Err(ClusterError::NotClusterTilting(t.to_string()));
        }
        Ok(())
    }

    /// All cluster tilting objects, sorted by their rendered roots.
    pub fn enumerate(&self) -> Result<&[ClusterTilting], ClusterError> {
        self.objects.get_or_init(|| self.enumerate_uncached()).as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }

    fn enumerate_uncached(&self) -> Result<Vec<ClusterTilting>, ClusterError> {
        let all = if self.indecs.len() == 128 { u128::MAX } else { (1u128 << self.indecs.len()) - 1 };
        // rigid indecomposables only; always all of them in the Dynkin case
        let candidates = (0..self.indecs.len()).filter(|&i| self.ext[i][i] == 0).fold(0u128, |m, i| m | (1 << i));
        let mut cliques = Vec::new();
        bron_kerbosch(&self.compatible, 0, candidates & all, 0, &mut cliques);
        let mut objects = Vec::with_capacity(cliques.len());
        for mask in cliques {
            let size = mask.count_ones() as usize;
            if size != self.rank() {
                return Err(ClusterError::WrongSize { size, expected: self.rank() });
            }
            objects.push(self.object_from_mask(mask));
        }
        objects.sort();
        Ok(objects)
    }

    /// The unique other completion of `T` minus `m`.
    pub fn mutate(&self, t: &ClusterTilting, m: &ClusterIndec) -> Result<ClusterTilting, ClusterError> {
        if !t.contains(m) {
            return Err(ClusterError::NotASummand(m.render(self.rank())));
        }
        let mi = self.index_of(m)?;
        let rest = self.mask_of(t)? & !(1 << mi);
        let candidates: Vec<usize> = (0..self.indecs.len())
            .filter(|&c| c != mi && rest & (1 << c) == 0 && self.ext[c][c] == 0 && rest & !self.compatible[c] == 0)
            .collect();
        match candidates.as_slice() {
            [c] => Ok(self.object_from_mask(rest | (1 << c))),
            other => Err(ClusterError::MutationCandidates(other.len())),
        }
    }

    /// Bitmask over positive roots of the indecomposables in `fac` of the
    /// given module sum (empty sum gives the zero torsion class).
    fn fac_mask_of_modules(&self, root_indices: &[usize]) -> Result<u128, ClusterError> {
        if root_indices.is_empty() {
            return Ok(0);
        }
        let parts: Vec<&Representation> = root_indices.iter().map(|&i| &self.modules[i]).collect();
        let sum = Representation::direct_sum(&self.quiver, &parts);
        let mut mask = 0u128;
        for (i, n) in self.modules.iter().enumerate() {
            if repr::in_fac(n, &sum)? {
                mask |= 1 << i;
            }
        }
        Ok(mask)
    }

    fn module_indices(&self, t: &ClusterTilting) -> Result<Vec<usize>, ClusterError> {
        t.module_part()
            .into_iter()
            .map(|d| self.root_index(d).ok_or_else(|| ClusterError::UnknownIndecomposable(d.to_string())))
            .collect()
    }

    fn mask_to_fingerprint(&self, mask: u128) -> TorsionFingerprint {
        TorsionFingerprint(
            (0..self.roots.len()).filter(|&i| mask & (1 << i) != 0).map(|i| self.roots[i].clone()).collect(),
        )
    }

    /// `ind fac T-hat`.
    pub fn fac_fingerprint(&self, t: &ClusterTilting) -> Result<TorsionFingerprint, ClusterError> {
        if let Ok(objects) = self.enumerate() {
            if let Ok(pos) = objects.binary_search(t) {
                return Ok(self.mask_to_fingerprint(self.fingerprint_masks()?[pos]));
            }
        }
        let mask = self.fac_mask_of_modules(&self.module_indices(t)?)?;
        Ok(self.mask_to_fingerprint(mask))
    }

    /// `ind fac` of an arbitrary sum of indecomposable modules.
    pub fn fac_of_modules(&self, roots: &[DimensionVector]) -> Result<TorsionFingerprint, ClusterError> {
        let idx = roots
            .iter()
            .map(|d| self.root_index(d).ok_or_else(|| ClusterError::UnknownIndecomposable(d.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.mask_to_fingerprint(self.fac_mask_of_modules(&idx)?))
    }

    fn fingerprint_masks(&self) -> Result<&[u128], ClusterError> {
        if let Some(f) = self.fingerprints.get() {
            return Ok(f);
        }
        let objects = self.enumerate()?;
        let masks = objects
            .par_iter()
            .map(|t| self.fac_mask_of_modules(&self.module_indices(t)?))
            .collect::<Result<Vec<_>, ClusterError>>()?;
        Ok(self.fingerprints.get_or_init(|| masks))
    }

    /// `T <= T'` iff `fac T` contains `fac T'`.
    pub fn leq(&self, t: &ClusterTilting, t2: &ClusterTilting) -> Result<bool, ClusterError> {
        Ok(self.fac_fingerprint(t)?.is_superset(&self.fac_fingerprint(t2)?))
    }

    /// The poset of all cluster tilting objects. Elements appear in
    /// enumeration order.
    pub fn tilting_poset(&self) -> Result<FinitePoset<ClusterTilting>, ClusterError> {
        let objects = self.enumerate()?;
        let masks = self.fingerprint_masks()?;
        let mut seen = std::collections::HashMap::new();
        for (i, &m) in masks.iter().enumerate() {
            if let Some(j) = seen.insert(m, i) {
                return Err(ClusterError::FingerprintCollision(objects[j].to_string(), objects[i].to_string()));
            }
        }
        let poset = FinitePoset::from_fn(objects.to_vec(), |a, b| masks[a] & masks[b] == masks[b])?;
        Ok(poset)
    }

    /// Cluster tilting objects containing `P_x` or `P_x[1]`.
    pub fn subset_containing(&self, which: SummandKind) -> Result<Vec<ClusterTilting>, ClusterError> {
        let target = self.summand_for(which);
        Ok(self.enumerate()?.iter().filter(|t| t.contains(&target)).cloned().collect())
    }

    pub fn summand_for(&self, which: SummandKind) -> ClusterIndec {
        match which {
            SummandKind::Projective(x) => ClusterIndec::Module(self.projective_root(x)),
            SummandKind::ShiftedProjective(x) => ClusterIndec::Shifted(x),
        }
    }

    /// Mutation at the simple projective `S_x` of a sink `x`.
    pub fn f_map(&self, x: usize, t: &ClusterTilting) -> Result<ClusterTilting, ClusterError> {
        if !self.quiver.is_sink(x) {
            return Err(ClusterError::NotSink(self.quiver.label(x).to_string()));
        }
        let s = self.summand_for(SummandKind::Projective(x));
        if !t.contains(&s) {
            return Err(ClusterError::MissingSummand { object: t.to_string(), summand: s.render(self.rank()) });
        }
        self.mutate(t, &s)
    }

    /// Mutation at the shifted projective `P_x[1]` of a source `x`.
    pub fn g_map(&self, x: usize, t: &ClusterTilting) -> Result<ClusterTilting, ClusterError> {
        if !self.quiver.is_source(x) {
            return Err(ClusterError::NotSource(self.quiver.label(x).to_string()));
        }
        let s = ClusterIndec::Shifted(x);
        if !t.contains(&s) {
            return Err(ClusterError::MissingSummand { object: t.to_string(), summand: s.render(self.rank()) });
        }
        self.mutate(t, &s)
    }

    /// Rigid module sets with `n - 1` summands (almost complete tilting
    /// modules), as sorted lists of positive roots.
    pub fn almost_complete_tilting_modules(&self) -> Vec<Vec<DimensionVector>> {
        let n = self.rank();
        let module_count = self.roots.len();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend_rigid(0, n.saturating_sub(1), module_count, &mut chosen, &mut out);
        out.into_iter().map(|idx| idx.into_iter().map(|i| self.roots[i].clone()).collect()).collect()
    }

    fn extend_rigid(
        &self,
        start: usize,
        want: usize,
        limit: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == want {
            out.push(chosen.clone());
            return;
        }
        for i in start..limit {
            if self.ext[i][i] == 0 && chosen.iter().all(|&c| self.ext[c][i] == 0) {
                chosen.push(i);
                self.extend_rigid(i + 1, want, limit, chosen, out);
                chosen.pop();
            }
        }
    }

    /// Indecomposable modules `M` not in `U` with `M (+) U` a tilting module.
    pub fn module_complements(&self, u: &[DimensionVector]) -> Result<Vec<DimensionVector>, ClusterError> {
        let idx = u
            .iter()
            .map(|d| self.root_index(d).ok_or_else(|| ClusterError::UnknownIndecomposable(d.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((0..self.roots.len())
            .filter(|i| !idx.contains(i))
            .filter(|&i| self.ext[i][i] == 0 && idx.iter().all(|&j| self.ext[i][j] == 0))
            .map(|i| self.roots[i].clone())
            .collect())
    }
}

/// Bron-Kerbosch with pivoting on bitmasks; the pivot maximizes
/// `|P ∩ N(u)|` with ties broken towards the lowest index, and branching
/// follows ascending index, so the output order is deterministic.
fn bron_kerbosch(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let px = p | x;
    let pivot = (0..adj.len())
        .filter(|&u| px & (1 << u) != 0)
        .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let branch = p & !adj[pivot];
    for v in 0..adj.len() {
        if branch & (1 << v) == 0 {
            continue;
        }
        bron_kerbosch(adj, r | (1 << v), p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
