//! Group-subgroup pair graphs.
//!
//! Build the pair graph of a finite group `G`, a subgroup `H` and a subset
//! `S`, then analyse its coset degree structure, connected components,
//! bipartiteness and adjacency spectrum, and search for Ramanujan examples
//! in the index-two regime.

pub mod actions;
pub mod descriptor;
pub mod eigen;
pub mod error;
pub mod export;
pub mod graph;
pub mod group;
pub mod search;
pub mod spectral;
pub mod structure;

pub use actions::Automorphism;
pub use descriptor::{ElementRef, GroupDescriptor, SetDescriptor, SubgroupDescriptor};
pub use error::{Error, Result};
pub use graph::{BitMatrix, PairGraph};
pub use group::{Elem, FiniteGroup, GeneratingSet, GroupRef, Subgroup};
pub use search::{SearchConfig, SearchMode, SearchOutcome, TrialResult};
pub use spectral::{Cluster, Spectrum};
pub use structure::ComponentDecomposition;
