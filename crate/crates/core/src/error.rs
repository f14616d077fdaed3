use thiserror::Error;

use crate::partitions::{BoxShape, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("partition {partition} does not fit in the {shape} box")]
    OutsideBox {
        partition: Partition,
        shape: BoxShape,
    },

    #[error("Chern class c_{degree} is not homogeneous of degree {degree}")]
    InhomogeneousChernClass { degree: usize },

    #[error("invalid Grassmannian G({k},{n}): need k < n")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("classes live in different rings: G({0},{1}) vs G({2},{3})")]
    RingMismatch(usize, usize, usize, usize),

    #[error("operation requires {expected}, got G({k},{n})")]
    WrongRing {
        expected: &'static str,
        k: usize,
        n: usize,
    },

    #[error("Omega({i},{j}) is undefined on G(1,{n}): need 0 <= i < j <= n")]
    InvalidOmega { i: i64, j: i64, n: usize },

    #[error("invalid projective dimension n = {0}: need n >= 2")]
    InvalidAmbient(i64),

    #[error("rank-two data with e = {0} is not normalized: need e in {{0, -1}}")]
    NotNormalized(i64),

    #[error("{step}: {detail}")]
    ReplayMismatch { step: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
