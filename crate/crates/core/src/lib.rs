//! Exact graph metrics (closeness centrality, mean distance, betweenness)
//! together with evaluators for a family of analytic bounds on the average
//! closeness centrality of a connected graph, and a corpus harness that
//! asserts the bounds that hold and audits the ones that do not.
//!
//! All distance-derived quantities are exact rationals; floating point is
//! confined to the Laplacian spectrum and the asymptotic closed forms.

pub mod asymptotics;
pub mod bounds;
pub mod closed_forms;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod metrics;
pub mod rational;
pub mod spectral;

mod error;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, StructuralSummary};
pub use rational::Rational;
