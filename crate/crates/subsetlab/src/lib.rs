//! Finite subset spaces of concrete metric spaces under the Hausdorff
//! metric, and a lab for probing how far maps between them stretch
//! distances.
//!
//! The space X(n) of nonempty subsets of X with at most n points inherits
//! a metric from X via the Hausdorff distance. This crate implements that
//! world for concrete carriers — Euclidean and p-norm spaces, the circle,
//! intervals, and the tripod tree — together with the constructions that
//! make retractions X(n) → X(k) tractable to study numerically:
//!
//! - [`space`]: distances, geodesics, comparison-inequality residuals, and
//!   nearest-point segment projections;
//! - [`subset`]: canonical finite subsets, Hausdorff distance, minimum
//!   separation, one-point reductions, pinned membership, exact k-center
//!   oracles on the line and circle, and the rotational circle k-cover;
//! - [`retraction`]: point maps, induced subset maps, candidate
//!   retractions, and retraction transfer along section/retraction pairs;
//! - [`pipeline`]: interval normalization, pinned truncation, far-pin
//!   adjoining, and norming-functional clamps;
//! - [`john`]: maximum-area inscribed ellipses of planar gauges and the
//!   √2-distortion coordinate changes they certify;
//! - [`lab`]: Lipschitz lower-bound certificates found by seeded
//!   adversarial search, displacement residuals, and theoretical bound
//!   tables;
//! - [`suites`]: the named property suites behind `subsetlab verify`.
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! ```text
//! cargo run --example hausdorff      # spaces, points, Hausdorff distance
//! cargo run --example geodesics      # geodesics and comparison residuals
//! cargo run --example reduce         # minimum separation and reductions
//! cargo run --example kcenter        # exact k-center oracles
//! cargo run --example circle_cover   # the rotational circle cover
//! cargo run --example john           # inscribed-ellipse transforms
//! cargo run --example transfer       # induced maps and transfer
//! cargo run --example pipeline       # normalization pipelines
//! cargo run --example estimate       # adversarial Lipschitz search
//! cargo run --example bounds         # theoretical bound tables
//! ```
//!
//! The `subsetlab` binary wraps the same functionality as a reproducible
//! experiment runner (`verify`, `bounds`, `estimate`, `cover`, `kcenter`).

pub mod error;
pub mod john;
pub mod lab;
pub mod pipeline;
pub mod report;
pub mod retraction;
pub mod sample;
pub mod space;
pub mod subset;
pub mod suites;

pub use error::{Error, Result};
pub use lab::{
    corollary_bound, displacement_residual, estimate_lipschitz, lipschitz_ratio,
    theoretical_bounds, BoundTableRow, LipschitzCertificate, SearchConfig, SubsetMap,
};
pub use retraction::{transfer_retraction, PointMap, RetractionCandidate};
pub use sample::DomainSampler;
pub use space::{CircleMetric, Exponent, Geodesic, Point, Space, DEFAULT_TOL};
pub use subset::{FiniteSubset, KCenterResult, PinnedSpec, ReduceMode};
