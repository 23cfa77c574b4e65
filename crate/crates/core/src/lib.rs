//! Enumeration of every chordless (induced) cycle of an undirected simple
//! graph, each exactly once.
//!
//! Two engines share one compact graph and one degree labeling:
//!
//! * [`sequential`]: depth-first expansion of label-ordered triplets;
//! * [`parallel`]: a triplet kernel followed by rounds of a path-expansion
//!   kernel over a bitmap path store, run by persistent workers.
//!
//! [`oracle`] holds a brute-force enumerator used to check both.
//!
//! ```
//! use chordless::generate::{generate, Family};
//! use chordless::parallel::{host_enumerate, KernelConfig};
//! use chordless::sequential::enumerate_sequential;
//!
//! let g = generate(Family::Grid(5, 6)).unwrap();
//! let seq = enumerate_sequential(&g);
//! let par = host_enumerate(&g, KernelConfig::default()).unwrap();
//! assert_eq!(seq.chordless_count(), 749);
//! assert_eq!(seq.sorted(), par.cycles.sorted());
//! ```

pub mod bitset;
pub mod cycles;
pub mod error;
pub mod foodweb;
pub mod generate;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod parallel;
pub mod sequential;

/// Vertex index. 32 bits wide.
pub type VertexId = u32;

pub use cycles::{canonicalize, CanonicalCycle, CycleSet};
pub use error::{Error, Result};
pub use graph::{build_compact, CompactGraph};
pub use labeling::{degree_labeling, Labeling};
