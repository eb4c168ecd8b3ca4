//! BGP reflection functors on explicit representations and the induced
//! bijection `rho` between cluster tilting objects of `Q` and of the quiver
//! reflected at a sink.

use crate::cluster::{ClusterCategory, ClusterError, ClusterIndec, ClusterTilting};
use crate::linalg::Matrix;
use crate::quiver::QuiverError;
use crate::repr::{self, Morphism, ReprError, Representation};

/// Output of `F^+` at a sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionResult {
    /// `F^+ M`, a representation of the reflected quiver.
    pub image: Representation,
    /// Multiplicity of `S'_x` in `R^1 F^+ M`.
    pub r1_part: usize,
}

/// Arrows incident to `x`, in arrow-index order, with their other endpoint.
fn incident(m: &Representation, x: usize) -> Vec<(usize, usize)> {
    m.quiver()
        .arrows()
        .iter()
        .enumerate()
        .filter_map(|(a, &(s, t))| match (s == x, t == x) {
            (true, false) => Some((a, t)),
            (false, true) => Some((a, s)),
            _ => None,
        })
        .collect()
}

/// `F^+` at the sink `x`: the new space at `x` is the kernel of
/// `(M(a_1) | ... | M(a_k)): (+) M(y_i) -> M(x)`, and the reversed arrows are
/// the kernel inclusion followed by the coordinate projections.
pub fn reflect_plus(m: &Representation, x: usize) -> Result<ReflectionResult, ReprError> {
    let q = m.quiver();
    if !q.is_sink(x) {
        return Err(QuiverError::NotSink(q.label(x).to_string()).into());
    }
    let arrows = incident(m, x);
    let parts: Vec<&Matrix> = arrows.iter().map(|&(a, _)| m.map(a)).collect();
    let stacked = Matrix::hstack(m.dim(x), &parts);
    let kernel = stacked.kernel_matrix();
    let new_dim = kernel.cols();
    let r1_part = m.dim(x) - stacked.rank();

    let mut dims = m.dims().to_vec();
    dims[x] = new_dim;
    let mut maps: Vec<Matrix> = (0..q.arrows().len()).map(|a| m.map(a).clone()).collect();
    let mut offset = 0;
    for &(a, y) in &arrows {
        maps[a] = kernel.block(offset, offset + m.dim(y), 0, new_dim);
        offset += m.dim(y);
    }
    let image = repr::from_parts(q.reflect(x)?, dims, maps);
    Ok(ReflectionResult { image, r1_part })
}

/// `F^-` at the source `x`: the new space at `x` is the cokernel of
/// `M(x) -> (+) M(y_i)`, and the reversed arrows are the coordinate
/// inclusions followed by the cokernel projection.
pub fn reflect_minus(m: &Representation, x: usize) -> Result<Representation, ReprError> {
    let q = m.quiver();
    if !q.is_source(x) {
        return Err(QuiverError::NotSource(q.label(x).to_string()).into());
    }
    let arrows = incident(m, x);
    let parts: Vec<&Matrix> = arrows.iter().map(|&(a, _)| m.map(a)).collect();
    let stacked = Matrix::vstack(m.dim(x), &parts);
    let projection = stacked.cokernel_projection();
    let new_dim = projection.rows();

    let mut dims = m.dims().to_vec();
    dims[x] = new_dim;
    let mut maps: Vec<Matrix> = (0..q.arrows().len()).map(|a| m.map(a).clone()).collect();
    let mut offset = 0;
    for &(a, y) in &arrows {
        maps[a] = projection.block(0, new_dim, offset, offset + m.dim(y));
        offset += m.dim(y);
    }
    Ok(repr::from_parts(q.reflect(x)?, dims, maps))
}

/// `F^-` on a morphism `phi: M -> N` at the source `x`. The component at `x`
/// is the map induced on cokernels; elsewhere `phi` is unchanged.
pub fn reflect_minus_morphism(
    phi: &Morphism,
    from: &Representation,
    to: &Representation,
    x: usize,
) -> Result<Morphism, ReprError> {
    if from.quiver() != to.quiver() {
        return Err(ReprError::QuiverMismatch);
    }
    let q = from.quiver();
    if !q.is_source(x) {
        return Err(QuiverError::NotSource(q.label(x).to_string()).into());
    }
    let arrows = incident(from, x);
    let coker = |m: &Representation| {
        let parts: Vec<&Matrix> = arrows.iter().map(|&(a, _)| m.map(a)).collect();
        Matrix::vstack(m.dim(x), &parts).cokernel_projection()
    };
    let p_from = coker(from);
    let p_to = coker(to);
    let blocks: Vec<&Matrix> = arrows.iter().map(|&(_, y)| &phi.components[y]).collect();
    let middle = Matrix::direct_sum(&blocks);
    // p_from has full row rank, so p_from^T (p_from p_from^T)^-1 is a right inverse
    let gram = &p_from * &p_from.transpose();
    let right_inverse = &p_from.transpose() * &gram.inverse().expect("full row rank");
    let induced = &(&p_to * &middle) * &right_inverse;
    let mut components = phi.components.clone();
    components[x] = induced;
    Ok(Morphism { components })
}

/// The quiver `Q` with a sink `x` together with `Q'` (reflected at `x`), and
/// the bijection `rho` between their cluster tilting objects.
#[derive(Debug, Clone, Copy)]
pub struct BgpPair<'a> {
    x: usize,
    source: &'a ClusterCategory,
    target: &'a ClusterCategory,
}

impl<'a> BgpPair<'a> {
    pub fn new(source: &'a ClusterCategory, target: &'a ClusterCategory, x: usize) -> Result<Self, ClusterError> {
        let q = source.quiver();
        if x >= q.vertex_count() || !q.is_sink(x) {
            let label = q.labels().get(x).cloned().unwrap_or_else(|| x.to_string());
            return Err(ClusterError::NotSink(label));
        }
        if &q.reflect(x)? != target.quiver() {
            return Err(ClusterError::Repr(ReprError::QuiverMismatch));
        }
        Ok(BgpPair { x, source, target })
    }

    pub fn vertex(&self) -> usize {
        self.x
    }

    pub fn source(&self) -> &'a ClusterCategory {
        self.source
    }

    pub fn target(&self) -> &'a ClusterCategory {
        self.target
    }

    /// `rho` on a single indecomposable of `C_Q`.
    pub fn rho_indec(&self, c: &ClusterIndec) -> ClusterIndec {
        let x = self.x;
        match c {
            ClusterIndec::Module(d) if d.simple_vertex() == Some(x) => ClusterIndec::Shifted(x),
            ClusterIndec::Module(d) => ClusterIndec::Module(self.source.quiver().simple_reflection(x, d)),
            ClusterIndec::Shifted(y) if *y == x => ClusterIndec::Module(self.target.quiver().unit_vector(x)),
            ClusterIndec::Shifted(y) => ClusterIndec::Shifted(*y),
        }
    }

    /// Inverse of [`Self::rho_indec`], on indecomposables of `C_Q'`.
    pub fn rho_inv_indec(&self, c: &ClusterIndec) -> ClusterIndec {
        let x = self.x;
        match c {
            ClusterIndec::Module(d) if d.simple_vertex() == Some(x) => ClusterIndec::Shifted(x),
            ClusterIndec::Module(d) => ClusterIndec::Module(self.target.quiver().simple_reflection(x, d)),
            ClusterIndec::Shifted(y) if *y == x => ClusterIndec::Module(self.source.quiver().unit_vector(x)),
            ClusterIndec::Shifted(y) => ClusterIndec::Shifted(*y),
        }
    }

    /// Summand-wise image; the result is checked to be cluster tilting in `C_Q'`.
    pub fn rho(&self, t: &ClusterTilting) -> Result<ClusterTilting, ClusterError> {
        self.source.check_cluster_tilting(t)?;
        let roots: Vec<Vec<i64>> =
            t.summands().iter().map(|c| self.rho_indec(c).almost_positive_root(self.target.rank())).collect();
        self.target.object_from_roots(&roots)
    }

    pub fn rho_inv(&self, t: &ClusterTilting) -> Result<ClusterTilting, ClusterError> {
        self.target.check_cluster_tilting(t)?;
        let roots: Vec<Vec<i64>> =
            t.summands().iter().map(|c| self.rho_inv_indec(c).almost_positive_root(self.source.rank())).collect();
        self.source.object_from_roots(&roots)
    }
}
