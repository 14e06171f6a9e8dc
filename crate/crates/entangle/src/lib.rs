//! Geometric entanglement measures for open and closed polygonal chains in
//! 3-space, plus the Monte Carlo machinery to study how those measures scale
//! with chain length.
//!
//! The crate is organized around a single exact primitive, the Gauss
//! integral of one pair of straight segments, from which writhe, linking
//! number, self-linking number and average crossing number are assembled.
//! Random chain models (uniform confined walks and polygons, equilateral
//! walks), a reproducible keyed-stream ensemble runner, two-parameter
//! least-squares scaling fits, and slow independent oracles round out the
//! library.

pub mod chains;
pub mod ensemble;
pub mod fitting;
pub mod geometry;
pub mod measures;
pub mod oracle;

pub use chains::{Chain, ChainModel, ChainSpec, RngStream, StreamKey};
pub use geometry::{Direction, Point3, Segment, Vec3};
pub use measures::{MeasureKind, MeasureValue};
