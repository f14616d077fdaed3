//! Exact intersection theory on Grassmannians: Schubert calculus,
//! characteristic classes and Hirzebruch-Riemann-Roch, plus a mechanical
//! replay of the classification of rank-two Fano bundles on G(1,4).

pub mod charclass;
pub mod chow;
pub mod cli;
pub mod error;
pub mod hrr;
pub mod partitions;
pub mod pipeline;
pub mod rational;
mod series;

pub use chow::{ChowClass, GrassmannRing};
pub use error::{Error, Result};
pub use partitions::{BoxShape, Partition};
pub use rational::Rational;
