//! Finite posets: construction with axiom checks, Hasse diagrams, flip-flop
//! gluings, Coxeter polynomials of incidence algebras, isomorphism search
//! and the Tamari lattice.

mod iso;
mod tamari;

use std::fmt;

use thiserror::Error;

use crate::linalg::{int, LinalgError, Matrix, Polynomial};

pub use iso::{are_isomorphic, find_isomorphism, is_order_isomorphism};
pub use tamari::{tamari, BinaryTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric on elements {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive on elements {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("map is not order preserving: {0} <= {1} but images are not comparable that way")]
    NotOrderPreserving(usize, usize),
    #[error("map has {got} entries, domain has {expected} elements")]
    DomainMismatch { expected: usize, got: usize },
    #[error("map sends {0} outside the codomain")]
    OutOfRange(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite poset over opaque keys; `le[a][b]` means `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset<K> {
    elements: Vec<K>,
    le: Vec<Vec<bool>>,
}

impl<K> FinitePoset<K> {
    pub fn from_fn(elements: Vec<K>, le: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let n = elements.len();
        let le = (0..n).map(|a| (0..n).map(|b| le(a, b)).collect()).collect();
        Self::from_relation(elements, le)
    }

    pub fn from_relation(elements: Vec<K>, le: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        let p = FinitePoset { elements, le };
        p.check_axioms()?;
        Ok(p)
    }

    /// Reflexive-transitive closure of the given cover pairs `(a, b)`, `a < b`.
    pub fn from_covers(elements: Vec<K>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = elements.len();
        let mut le = vec![vec![false; n]; n];
        for (a, row) in le.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in covers {
            le[a][b] = true;
        }
        // Warshall
        for k in 0..n {
            let through = le[k].clone();
            for row in le.iter_mut().filter(|row| row[k]) {
                for (cell, &kb) in row.iter_mut().zip(&through) {
                    *cell |= kb;
                }
            }
        }
        Self::from_relation(elements, le)
    }

    fn check_axioms(&self) -> Result<(), PosetError> {
        let n = self.len();
        for a in 0..n {
            if !self.le[a][a] {
                return Err(PosetError::NotReflexive(a));
            }
            for b in (a + 1)..n {
                if self.le[a][b] && self.le[b][a] {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.le[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.le[b][c] && !self.le[a][c] {
                        return Err(PosetError::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn index_of(&self, k: &K) -> Option<usize>
    where
        K: PartialEq,
    {
        self.elements.iter().position(|e| e == k)
    }

    /// Cover relations `(a, b)` with `a < b` and nothing strictly between,
    /// sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| !(0..self.len()).any(|a| self.lt(a, b))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| self.lt(a, b))).collect()
    }

    /// Induced subposet on `indices`, in that order.
    pub fn restrict(&self, indices: &[usize]) -> FinitePoset<K>
    where
        K: Clone,
    {
        FinitePoset {
            elements: indices.iter().map(|&i| self.elements[i].clone()).collect(),
            le: indices.iter().map(|&a| indices.iter().map(|&b| self.le[a][b]).collect()).collect(),
        }
    }

    pub fn dual(&self) -> FinitePoset<K>
    where
        K: Clone,
    {
        let n = self.len();
        FinitePoset {
            elements: self.elements.clone(),
            le: (0..n).map(|a| (0..n).map(|b| self.le[b][a]).collect()).collect(),
        }
    }

    pub fn map_keys<L>(&self, f: impl Fn(&K) -> L) -> FinitePoset<L> {
        FinitePoset { elements: self.elements.iter().map(f).collect(), le: self.le.clone() }
    }

    fn upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.le[a][c] && self.le[b][c]).collect()
    }

    fn lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.le[c][a] && self.le[c][b]).collect()
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub = self.upper_bounds(a, b);
        ub.iter().copied().find(|&c| ub.iter().all(|&d| self.le[c][d]))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb = self.lower_bounds(a, b);
        lb.iter().copied().find(|&c| lb.iter().all(|&d| self.le[d][c]))
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a..n).all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some()))
    }

    /// Incidence matrix `C` with `C[i][j] = 1` iff `i <= j`.
    pub fn incidence_matrix(&self) -> Matrix {
        Matrix::from_fn(self.len(), self.len(), |i, j| int(self.le[i][j] as i64))
    }

    /// Characteristic polynomial of the Coxeter transformation
    /// `-C^{-T} C` of the incidence algebra.
    pub fn coxeter_polynomial(&self) -> Result<Polynomial, PosetError> {
        let c = self.incidence_matrix();
        let phi = (&c.transpose().inverse()? * &c).scale(&int(-1));
        Ok(phi.char_poly()?)
    }

    /// Graphviz rendering of the Hasse diagram, edges from smaller to larger.
    pub fn to_dot(&self, name: &str, label: impl Fn(&K) -> String) -> String {
        let mut out = format!("digraph \"{}\" {{\n", escape(name));
        for (i, e) in self.elements.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(&label(e))));
        }
        for (a, b) in self.hasse() {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// An order-preserving map between two finite posets, stored as indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMap {
    assignment: Vec<usize>,
}

impl OrderMap {
    pub fn new<A, B>(
        domain: &FinitePoset<A>,
        codomain: &FinitePoset<B>,
        assignment: Vec<usize>,
    ) -> Result<Self, PosetError> {
        if assignment.len() != domain.len() {
            return Err(PosetError::DomainMismatch { expected: domain.len(), got: assignment.len() });
        }
        if let Some(i) = assignment.iter().position(|&t| t >= codomain.len()) {
            return Err(PosetError::OutOfRange(i));
        }
        for a in 0..domain.len() {
            for b in 0..domain.len() {
                if domain.le(a, b) && !codomain.le(assignment[a], assignment[b]) {
                    return Err(PosetError::NotOrderPreserving(a, b));
                }
            }
        }
        Ok(OrderMap { assignment })
    }

    pub fn image(&self, a: usize) -> usize {
        self.assignment[a]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipFlopSign {
    /// `x <= y` iff `f(x) <= y`.
    Plus,
    /// `y <= x` iff `y <= f(x)`.
    Minus,
}

/// Element of a disjoint union `X ⊔ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side<A, B> {
    X(A),
    Y(B),
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Side<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X(a) => write!(f, "{a}"),
            Side::Y(b) => write!(f, "{b}"),
        }
    }
}

/// Glue `X` and `Y` along `f: X -> Y`. Elements of `X` come first, then `Y`.
/// The internal orders are kept and the only cross relations are the ones
/// given by the sign; the result is re-checked against the poset axioms.
pub fn flip_flop<A: Clone, B: Clone>(
    x: &FinitePoset<A>,
    y: &FinitePoset<B>,
    f: &OrderMap,
    sign: FlipFlopSign,
) -> Result<FinitePoset<Side<A, B>>, PosetError> {
    // re-validate in case the map was built against other posets
    let f = OrderMap::new(x, y, f.assignment.clone())?;
    let nx = x.len();
    let elements = x.elements().iter().cloned().map(Side::X).chain(y.elements().iter().cloned().map(Side::Y)).collect();
    FinitePoset::from_fn(elements, |a, b| match (a < nx, b < nx) {
        (true, true) => x.le(a, b),
        (false, false) => y.le(a - nx, b - nx),
        (true, false) => sign == FlipFlopSign::Plus && y.le(f.image(a), b - nx),
        (false, true) => sign == FlipFlopSign::Minus && y.le(a - nx, f.image(b)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn chain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_fn((0..n).collect(), |a, b| a <= b).unwrap()
    }

    pub(crate) fn antichain(n: usize) -> FinitePoset<usize> {
        FinitePoset::from_fn((0..n).collect(), |a, b| a == b).unwrap()
    }

    #[test]
    fn axioms_are_checked() {
        assert_eq!(FinitePoset::from_fn(vec![0, 1], |a, b| a != b).unwrap_err(), PosetError::NotReflexive(0));
        assert_eq!(FinitePoset::from_fn(vec![0, 1], |_, _| true).unwrap_err(), PosetError::NotAntisymmetric(0, 1));
        let rel = |a: usize, b: usize| a == b || (a, b) == (0, 1) || (a, b) == (1, 2);
        assert_eq!(FinitePoset::from_fn(vec![0, 1, 2], rel).unwrap_err(), PosetError::NotTransitive(0, 1, 2));
    }

    #[test]
    fn flip_flop_examples() {
        let x = chain(2);
        let y = FinitePoset::from_fn(vec!["c"], |_, _| true).unwrap();
        let f = OrderMap::new(&x, &y, vec![0, 0]).unwrap();
        let plus = flip_flop(&x, &y, &f, FlipFlopSign::Plus).unwrap();
        assert!(are_isomorphic(&plus, &chain(3)));
        assert_eq!(plus.hasse(), vec![(0, 1), (1, 2)]);
        let minus = flip_flop(&x, &y, &f, FlipFlopSign::Minus).unwrap();
        assert_eq!(minus.hasse(), vec![(0, 1), (2, 0)]);
    }

    #[test]
    fn order_map_rejects_non_monotone() {
        let x = chain(2);
        let y = chain(2);
        assert_eq!(OrderMap::new(&x, &y, vec![1, 0]).unwrap_err(), PosetError::NotOrderPreserving(0, 1));
        assert_eq!(OrderMap::new(&x, &y, vec![0]).unwrap_err(), PosetError::DomainMismatch { expected: 2, got: 1 });
        assert_eq!(OrderMap::new(&x, &y, vec![0, 5]).unwrap_err(), PosetError::OutOfRange(1));
    }

    #[test]
    fn hasse_examples() {
        assert_eq!(chain(3).hasse().len(), 2);
        assert!(antichain(4).hasse().is_empty());
    }

    #[test]
    fn coxeter_examples() {
        assert_eq!(chain(2).coxeter_polynomial().unwrap(), Polynomial::from_coeffs(&[1, 1, 1]));
        assert_eq!(chain(1).coxeter_polynomial().unwrap(), Polynomial::from_coeffs(&[1, 1]));
        // antichain: C = I, Phi = -I
        assert_eq!(antichain(2).coxeter_polynomial().unwrap(), Polynomial::from_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn lattice_checks() {
        assert!(chain(4).is_lattice());
        assert!(!antichain(2).is_lattice());
        let diamond = FinitePoset::from_covers(vec![0, 1, 2, 3], &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(diamond.is_lattice());
        assert_eq!(diamond.join(1, 2), Some(3));
        assert_eq!(diamond.meet(1, 2), Some(0));
    }

    #[test]
    fn dot_export() {
        let dot = chain(2).to_dot("c", |k| format!("[{k}]"));
        assert_eq!(dot, "digraph \"c\" {\n  n0 [label=\"[0]\"];\n  n1 [label=\"[1]\"];\n  n0 -> n1;\n}\n");
    }

    fn random_poset() -> impl Strategy<Value = FinitePoset<usize>> {
        (1usize..7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                // only pairs a < b in index order: acyclic by construction
                let covers: Vec<(usize, usize)> =
                    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| bits[a * n + b]).collect();
                FinitePoset::from_covers((0..n).collect(), &covers).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn flip_flop_keeps_parts(x in random_poset(), y in random_poset(), seed in any::<u64>(), plus in any::<bool>()) {
            // order-preserving map: send everything to a maximal element of Y
            // when plus; mix with a constant otherwise
            let top = y.maximal_elements()[(seed as usize) % y.maximal_elements().len()];
            let f = OrderMap::new(&x, &y, vec![top; x.len()]).unwrap();
            let sign = if plus { FlipFlopSign::Plus } else { FlipFlopSign::Minus };
            let z = flip_flop(&x, &y, &f, sign).unwrap();
            let nx = x.len();
            prop_assert_eq!(z.restrict(&(0..nx).collect::<Vec<_>>()).map_keys(|_| ()), x.map_keys(|_| ()));
            prop_assert_eq!(z.restrict(&(nx..z.len()).collect::<Vec<_>>()).map_keys(|_| ()), y.map_keys(|_| ()));
            for a in 0..nx {
                for b in nx..z.len() {
                    if plus {
                        prop_assert!(!z.le(b, a));
                    } else {
                        prop_assert!(!z.le(a, b));
                    }
                }
            }
        }

        #[test]
        fn coxeter_invariant_under_relabeling(
            (p, perm) in random_poset().prop_flat_map(|p| {
                let n = p.len();
                (Just(p), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            })
        ) {
            let n = p.len();
            let q = FinitePoset::from_fn((0..n).collect::<Vec<_>>(), |a, b| p.le(perm[a], perm[b])).unwrap();
            prop_assert_eq!(p.coxeter_polynomial().unwrap(), q.coxeter_polynomial().unwrap());
            prop_assert!(are_isomorphic(&p, &q));
        }

        #[test]
        fn isomorphism_is_symmetric(p in random_poset(), q in random_poset()) {
            prop_assert!(are_isomorphic(&p, &p));
            prop_assert_eq!(are_isomorphic(&p, &q), are_isomorphic(&q, &p));
            if let Some(w) = find_isomorphism(&p, &q) {
                prop_assert!(is_order_isomorphism(&p, &q, &w));
            }
        }
    }
}
