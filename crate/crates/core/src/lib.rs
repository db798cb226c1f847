//! Certified real sample points on compact smooth hypersurfaces.
//!
//! Given a rational polynomial `f` whose real zero set is a compact smooth
//! hypersurface, the pipeline computes the critical points of a generic
//! linear projection (the zero-dimensional polar variety), describes them by a
//! univariate representation `q, p1..pn`, isolates and Thom-encodes the real
//! roots of `q`, and returns one certified point per real root. Every
//! connected component of the hypersurface receives at least one point.
//!
//! Module map:
//! - [`circuit`]: straight-line programs, parsing, derivative circuits.
//! - [`poly`], [`univariate`]: exact polynomial arithmetic.
//! - [`polysys`]: coordinate changes and polar systems.
//! - [`groebner`], [`eliminate`]: saturation, dimension, univariate representation, degrees.
//! - [`realroots`]: Sturm counting, isolation, Tarski queries, Thom encodings.
//! - [`factor`], [`realdegree`]: rational factorization and real-part certificates.
//! - [`pipeline`], [`report`]: orchestration and JSON/text reports.

pub mod circuit;
pub mod eliminate;
pub mod error;
pub mod factor;
pub mod groebner;
pub mod interval;
pub mod pipeline;
pub mod poly;
pub mod polysys;
pub mod rational;
pub mod realdegree;
pub mod realroots;
pub mod report;
pub mod univariate;

pub use error::{Error, Result};
