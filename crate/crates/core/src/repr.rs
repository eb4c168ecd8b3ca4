//! Explicit representations of a quiver over the rationals.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::functors;
use crate::linalg::{Matrix, Scalar};
use crate::quiver::{DimensionVector, Quiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("{0} is not a positive root of the quiver")]
    NotPositiveRoot(DimensionVector),
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error("map for arrow {arrow} has shape {got:?}, expected {expected:?}")]
    Shape { arrow: usize, expected: (usize, usize), got: (usize, usize) },
    #[error("reflection sequence for {0} did not reach a simple root")]
    NoTermination(DimensionVector),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Simple,
    Projective,
}

/// A representation: one vector space `k^dims[v]` per vertex and one matrix
/// per arrow (rows = target dimension, columns = source dimension).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A family of linear maps `M(v) -> N(v)`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub components: Vec<Matrix>,
}

impl Morphism {
    /// Checks `N(a) phi_i = phi_j M(a)` for every arrow `a: i -> j`.
    pub fn is_morphism(&self, from: &Representation, to: &Representation) -> bool {
        from.quiver
            .arrows()
            .iter()
            .enumerate()
            .all(|(a, &(i, j))| &to.maps[a] * &self.components[i] == &self.components[j] * &from.maps[a])
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }
}

impl Representation {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, ReprError> {
        assert_eq!(dims.len(), quiver.vertex_count());
        assert_eq!(maps.len(), quiver.arrows().len());
        for (a, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if (m.rows(), m.cols()) != (dims[t], dims[s]) {
                return Err(ReprError::Shape { arrow: a, expected: (dims[t], dims[s]), got: (m.rows(), m.cols()) });
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { quiver: quiver.clone(), dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn dim_vector(&self) -> DimensionVector {
        DimensionVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices with a nonzero space.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    pub fn direct_sum(quiver: &Quiver, parts: &[&Representation]) -> Representation {
        let dims = (0..quiver.vertex_count()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..quiver.arrows().len())
            .map(|a| Matrix::direct_sum(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Representation { quiver: quiver.clone(), dims, maps }
    }

    /// `S_x`, or `P_x` with basis the paths starting at `x`.
    pub fn standard(quiver: &Quiver, kind: StandardKind, x: usize) -> Representation {
        match kind {
            StandardKind::Simple => {
                let mut dims = vec![0; quiver.vertex_count()];
                dims[x] = 1;
                let maps = quiver.arrows().iter().map(|&(s, t)| Matrix::zeros(dims[t], dims[s])).collect();
                Representation { quiver: quiver.clone(), dims, maps }
            }
            StandardKind::Projective => projective(quiver, x),
        }
    }

    pub fn simple(quiver: &Quiver, x: usize) -> Representation {
        Self::standard(quiver, StandardKind::Simple, x)
    }

    pub fn projective(quiver: &Quiver, x: usize) -> Representation {
        Self::standard(quiver, StandardKind::Projective, x)
    }

    /// `j^{-1}`: drop vertex `x` and its arrows.
    pub fn restrict_delete(&self, x: usize) -> Representation {
        let quiver = self.quiver.delete_vertex(x);
        let dims = self.dims.iter().enumerate().filter(|&(v, _)| v != x).map(|(_, &d)| d).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .filter(|(&(s, t), _)| s != x && t != x)
            .map(|(_, m)| m.clone())
            .collect();
        Representation { quiver, dims, maps }
    }

    /// `j_!`: extend a representation of `target` minus `x` by zero at `x`.
    pub fn extend_by_zero(&self, target: &Quiver, x: usize) -> Result<Representation, ReprError> {
        if target.delete_vertex(x) != self.quiver {
            return Err(ReprError::QuiverMismatch);
        }
        let old = |v: usize| if v > x { v - 1 } else { v };
        let dims: Vec<usize> = (0..target.vertex_count()).map(|v| if v == x { 0 } else { self.dims[old(v)] }).collect();
        let mut inner = self.maps.iter();
        let maps = target
            .arrows()
            .iter()
            .map(|&(s, t)| {
                if s == x || t == x {
                    Matrix::zeros(dims[t], dims[s])
                } else {
                    inner.next().expect("arrow count matches").clone()
                }
            })
            .collect();
        Ok(Representation { quiver: target.clone(), dims, maps })
    }
}

fn projective(quiver: &Quiver, x: usize) -> Representation {
    // paths from x, each recorded as (endpoint, arrow sequence), in DFS order
    let mut paths: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut stack = vec![(x, Vec::new())];
    while let Some((end, path)) = stack.pop() {
        for (a, &(s, t)) in quiver.arrows().iter().enumerate().rev() {
            if s == end {
                let mut longer = path.clone();
                longer.push(a);
                stack.push((t, longer));
            }
        }
        paths.push((end, path));
    }
    let n = quiver.vertex_count();
    let mut basis: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); n];
    for (end, path) in &paths {
        basis[*end].push(path);
    }
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let maps = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for (col, p) in basis[s].iter().enumerate() {
                let mut extended = (*p).clone();
                extended.push(a);
                let row = basis[t].iter().position(|q| **q == extended).expect("extended path is a basis path");
                m[(row, col)] = Scalar::one();
            }
            m
        })
        .collect();
    Representation { quiver: quiver.clone(), dims, maps }
}

/// The intertwiner system `phi -> (N(a) phi_i - phi_j M(a))_a` as a matrix.
/// Columns index the entries of `(phi_v)_v`, rows index arrow equations.
fn intertwiner_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let q = &m.quiver;
    let mut offsets = Vec::with_capacity(q.vertex_count() + 1);
    let mut total = 0;
    for v in 0..q.vertex_count() {
        offsets.push(total);
        total += n.dims[v] * m.dims[v];
    }
    offsets.push(total);
    let rows: usize = q.arrows().iter().map(|&(i, j)| n.dims[j] * m.dims[i]).sum();
    let mut sys = Matrix::zeros(rows, total);
    let mut row = 0;
    for (a, &(i, j)) in q.arrows().iter().enumerate() {
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // unknown (v, r, c) sits at offsets[v] + r * dim M(v) + c
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                for k in 0..n.dims[i] {
                    let coeff = &na[(r, k)];
                    if !coeff.is_zero() {
                        sys[(row, offsets[i] + k * m.dims[i] + c)] += coeff;
                    }
                }
                for k in 0..m.dims[j] {
                    let coeff = &ma[(k, c)];
                    if !coeff.is_zero() {
                        sys[(row, offsets[j] + r * m.dims[j] + k)] -= coeff;
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offsets)
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>, ReprError> {
    if m.quiver != n.quiver {
        return Err(ReprError::QuiverMismatch);
    }
    let (sys, offsets) = intertwiner_system(m, n);
    Ok(sys
        .kernel_basis()
        .into_iter()
        .map(|sol| {
            let components = (0..m.quiver.vertex_count())
                .map(|v| Matrix::from_fn(n.dims[v], m.dims[v], |r, c| sol[offsets[v] + r * m.dims[v] + c].clone()))
                .collect();
            Morphism { components }
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize, ReprError> {
    if m.quiver != n.quiver {
        return Err(ReprError::QuiverMismatch);
    }
    let (sys, _) = intertwiner_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// `dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>` (path algebras are hereditary).
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize, ReprError> {
    let hom = hom_dim(m, n)? as i64;
    let euler = m.quiver.euler_form(&m.dim_vector(), &n.dim_vector());
    let ext = hom - euler;
    assert!(ext >= 0, "negative Ext dimension: hom {hom}, euler {euler}");
    Ok(ext as usize)
}

/// Is `N` a quotient of a finite sum of copies of `X`? Holds exactly when the
/// trace of `X` in `N` (sum of images of all maps `X -> N`) is all of `N`.
pub fn in_fac(n: &Representation, x: &Representation) -> Result<bool, ReprError> {
    let basis = hom_basis(x, n)?;
    Ok((0..n.quiver.vertex_count()).all(|v| {
        if n.dims[v] == 0 {
            return true;
        }
        let parts: Vec<&Matrix> = basis.iter().map(|phi| &phi.components[v]).collect();
        Matrix::hstack(n.dims[v], &parts).rank() == n.dims[v]
    }))
}

/// The indecomposable with dimension vector `d` (a positive root).
///
/// Reflects at the first sink of the current quiver until the vector is
/// simple, then pulls the simple back through `F^-` along the reversed
/// sequence.
pub fn indecomposable_of_root(q: &Quiver, d: &DimensionVector) -> Result<Representation, ReprError> {
    let roots = q.positive_roots()?;
    if !roots.contains(d) {
        return Err(ReprError::NotPositiveRoot(d.clone()));
    }
    let limit = 2 * q.vertex_count() * (roots.len() + 1);
    let mut current_q = q.clone();
    let mut current_d = d.clone();
    let mut steps: Vec<(Quiver, usize)> = Vec::new();
    while current_d.simple_vertex().is_none() {
        if steps.len() > limit {
            return Err(ReprError::NoTermination(d.clone()));
        }
        let x = current_q.sinks()[0];
        let next_d = current_q.simple_reflection(x, &current_d);
        debug_assert!(next_d.is_nonnegative(), "only a simple at the sink leaves the positive cone");
        let next_q = current_q.reflect(x)?;
        steps.push((current_q, x));
        current_q = next_q;
        current_d = next_d;
    }
    let v = current_d.simple_vertex().expect("loop exit");
    let mut rep = Representation::simple(&current_q, v);
    for (_, x) in steps.iter().rev() {
        rep = functors::reflect_minus(&rep, *x)?;
    }
    debug_assert_eq!(&rep.quiver, q);
    debug_assert_eq!(&rep.dim_vector(), d);
    Ok(rep)
}

pub(crate) fn from_parts(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
    Representation::new(quiver, dims, maps).expect("constructed with consistent shapes")
}
