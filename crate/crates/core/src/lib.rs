//! Exact computations on matroids and oriented matroids given by circuits:
//! orientation enumeration, circuit determination parameters, covering
//! parameters and certified covering constructions for hypercubes and
//! complete graphs.

pub mod budget;
pub mod certificate;
pub mod chirotope;
pub mod constructions;
pub mod coverings;
pub mod determination;
pub mod element_set;
pub mod error;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod oriented;
pub mod repro;
pub mod search;

pub use budget::Budget;
pub use element_set::ElementSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use matroid::Matroid;
pub use oriented::{OrientationSpace, OrientedMatroid, SignedSet};
