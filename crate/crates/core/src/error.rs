use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Invalid arguments: wrong rank, empty grids, radius out of range.
    Usage,
    /// The point or parameter lies outside the domain of an evaluator.
    Domain,
    /// The spectral parameter hits the resonance set of the series recurrence.
    Resonance,
    /// The multiplicity lies in the polar set.
    Polar,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero vector is not a root")]
    ZeroRoot,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resonance at mu = {mu:?}: |<mu, mu - 2 lambda>| = {divisor:e} is below tolerance")]
    Resonance { mu: Vec<u32>, divisor: f64 },

    #[error("point is not inside the positive chamber: min alpha(X) = {min_root_value}")]
    Chamber { min_root_value: f64 },

    #[error("log-gamma evaluated at the pole {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("multiplicity ({m_s}, {m_m}, {m_l}): c~(rho, m) is {reason}")]
    PolarMultiplicity {
        m_s: f64,
        m_m: f64,
        m_l: f64,
        reason: &'static str,
    },

    #[error("c~(lambda, m) has a pole at this spectral parameter")]
    SpectralPole,

    #[error("indicial collision at order {order}: the normalized solution needs a logarithmic term")]
    IndicialCollision { order: usize },

    #[error("outside the evaluator domain: {0}")]
    Domain(String),

    #[error("hypergeometric parameter c = {0} is a nonpositive integer")]
    ParameterPole(f64),

    #[error("operator cannot act on this representation: {0}")]
    Representation(String),

    #[error("weight singularity at s = {0}")]
    WeightSingularity(f64),

    #[error("eta^- factor vanishes at this point")]
    VanishingFactor,

    #[error("weight factor with negative exponent vanishes on a wall")]
    WallSingularity,

    #[error("bump radius {0} is outside (0, pi/2)")]
    InvalidRadius(f64),

    #[error("transform vanishes or is not finite on {bad} of {total} grid points")]
    DegenerateFit { bad: usize, total: usize },

    #[error("multiplicity is not positive: ({0}, {1}, {2})")]
    NotPositive(f64, f64, f64),

    #[error("Weyl term {index}: {source}")]
    InWeylTerm {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Resonance { .. } => ErrorKind::Resonance,
            Error::PolarMultiplicity { .. } => ErrorKind::Polar,
            Error::InWeylTerm { source, .. } => source.kind(),
            Error::ZeroRank
            | Error::DimensionMismatch { .. }
            | Error::InvalidArgument(_)
            | Error::InvalidRadius(_)
            | Error::NotPositive(..) => ErrorKind::Usage,
            _ => ErrorKind::Domain,
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::ZeroRank => "zero_rank",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroRoot => "zero_root",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Resonance { .. } => "resonance",
            Error::Chamber { .. } => "chamber",
            Error::Pole { .. } => "pole",
            Error::PolarMultiplicity { .. } => "polar_multiplicity",
            Error::SpectralPole => "spectral_pole",
            Error::IndicialCollision { .. } => "indicial_collision",
            Error::Domain(_) => "domain",
            Error::ParameterPole(_) => "parameter_pole",
            Error::Representation(_) => "representation",
            Error::WeightSingularity(_) => "weight_singularity",
            Error::VanishingFactor => "vanishing_factor",
            Error::WallSingularity => "wall_singularity",
            Error::InvalidRadius(_) => "invalid_radius",
            Error::DegenerateFit { .. } => "degenerate_fit",
            Error::NotPositive(..) => "not_positive",
            Error::InWeylTerm { source, .. } => source.tag(),
        }
    }

    /// Index of the Weyl group element whose term failed, if any.
    pub fn weyl_index(&self) -> Option<usize> {
        match self {
            Error::InWeylTerm { index, .. } => Some(*index),
            _ => None,
        }
    }
}
