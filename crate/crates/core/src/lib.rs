//! Cluster tilting objects of Dynkin quivers, their torsion-class order, and
//! the flip-flop relation between the posets of a quiver and its BGP
//! reflection at a sink.
//!
//! Everything is computed exactly: representations are explicit matrices over
//! the rationals, and the poset-level code works on dimension vectors.

pub mod cluster;
pub mod functors;
pub mod linalg;
pub mod poset;
pub mod quiver;
pub mod repr;
pub mod verify;

pub use cluster::{ClusterCategory, ClusterError, ClusterIndec, ClusterTilting, SummandKind, TorsionFingerprint};
pub use functors::{reflect_minus, reflect_plus, BgpPair, ReflectionResult};
pub use linalg::{Matrix, Polynomial};
pub use poset::{are_isomorphic, find_isomorphism, flip_flop, tamari, FinitePoset, FlipFlopSign, OrderMap};
pub use quiver::{Classification, DimensionVector, DynkinFamily, DynkinType, Quiver, QuiverError};
pub use repr::{ReprError, Representation};
pub use verify::{CheckReport, Status};
