//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A denominator linear form vanishes at the requested parameter point.
    #[error("pole: denominator factor {factor} vanishes at (k0, k1) = ({k0}, {k1})")]
    Pole { factor: String, k0: String, k1: String },

    /// A Pochhammer factor in a denominator is identically the zero polynomial.
    #[error("degenerate denominator: factor {factor} is identically zero")]
    DegenerateDenominator { factor: String },

    /// The evaluation point is too close to a reflection mirror for the
    /// divided differences in the definitional Dunkl operator.
    #[error("evaluation point within {dist:e} of reflection mirror {mirror}")]
    MirrorProximity { mirror: usize, dist: f64 },

    /// The parameter pair lies on the rejected singular locus.
    #[error("singular parameters: {reason}")]
    SingularParameter { reason: String },

    /// The defining linear system for the intertwining operator has no
    /// solution; indicates a bug or a singular parameter slipping through.
    #[error("inconsistent linear system while building V at degree {degree}")]
    InconsistentSystem { degree: u32 },

    /// An epsilon factor survived in a denominator where the grouped
    /// expansion should have cancelled it.
    #[error("unpaired pole: epsilon remains in denominator of {context}")]
    UnpairedPole { context: String },

    /// Malformed input to a parser or CLI surface.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
