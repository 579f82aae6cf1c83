//! Finite Coxeter groups, reflection graphs and percolating sequences.
//!
//! The group engine enumerates `W / W_I` by coset enumeration over the
//! Coxeter presentation; everything downstream (incidence graphs, folding
//! maps, certificates, extremal reports) is table-driven and exact.

pub mod audit;
pub mod catalog;
pub mod cosets;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod group;
pub mod homdensity;
pub mod incidence;
pub mod percolation;
pub mod search;
pub mod system;

pub use audit::AuditReport;
pub use cosets::{CosetTable, DEFAULT_CAP};
pub use error::{Error, Result};
pub use extremal::{Exact, ExtremalReport};
pub use graph::BipartiteGraph;
pub use group::{CoxeterGroup, GroupElement, Reflection};
pub use incidence::{IncidenceGraph, ReflectionSides, Side};
pub use percolation::{CertificateKind, Direction, FoldStep, PercolationCertificate};
pub use search::{SearchMode, SearchOutcome};
pub use system::{CoxeterSystem, GenSet};
