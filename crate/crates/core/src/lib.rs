//! Simplicial complexes, higher-order adjacency, multi combinatorial
//! Laplacians and centrality measures on simplices.

pub mod adjacency;
pub mod centrality;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod spectral;
pub mod walks;

pub use adjacency::{AdjacencyFamily, AdjacencyKind, DegreeQuery, DegreeReport};
pub use centrality::{CentralityReport, ClosenessVariant, Flag, Rational, Score, Value, WalkScope};
pub use complex::{ChainBasis, Complex, Simplex, VertexId, VertexTable};
pub use error::{Error, Result};
pub use io::{Format, GeneratorConfig, Model, Report};
pub use spectral::{EigenResult, LaplacianBundle, TheoremFamily};
pub use walks::{Distance, NearnessGraph, WalkSemantics};
