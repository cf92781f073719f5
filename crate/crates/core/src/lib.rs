//! Exact controllability analysis for undirected leader-follower consensus
//! networks `x' = -L x + B u`.
//!
//! For a connected network the crate computes three numbers:
//!
//! * a lower bound from the hop distances of every node to every leader
//!   ([`bounds::lower_bound`]),
//! * the exact rank of the controllability matrix over arbitrary-precision
//!   integers ([`controllability::controllability_matrix`]),
//! * an upper bound from the maximal leader-invariant external equitable
//!   partition ([`partition::upper_bound`]).
//!
//! ```
//! use lfnet::{bounds::bounds_report, gen};
//!
//! let star = gen::star(5, &[0]).unwrap();
//! let report = bounds_report(&star).unwrap();
//! assert_eq!((report.lower, report.rank, report.upper), (2, 2, 2));
//! ```

pub mod bounds;
pub mod cli;
pub mod controllability;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod partition;
pub mod sim;

pub use bounds::{bounds_report, BoundsReport, DistanceSequence, SequenceEntry};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Network};
pub use linalg::BigIntMatrix;
pub use partition::Partition;
