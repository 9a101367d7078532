use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("logarithm undefined at -identity (principal branch point)")]
    BranchPoint,

    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(usize),

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },

    #[error("holonomy count {found} does not match genus {genus} (expected {expected})")]
    HolonomyCount {
        genus: usize,
        expected: usize,
        found: usize,
    },

    #[error("commutator solve did not converge (residual {residual:e})")]
    Convergence { residual: f64 },

    #[error("representation is not flat: relator defect {defect:e} exceeds {tolerance:e}")]
    NotFlat { defect: f64, tolerance: f64 },

    #[error("rank decision ambiguous: singular value {value:e} within the window around cutoff {cutoff:e}")]
    RankAmbiguity { value: f64, cutoff: f64 },

    #[error("cochain is not a cocycle: coboundary norm {norm:e}")]
    NotCocycle { norm: f64 },

    #[error("cochain degree {found} not allowed here (expected {expected})")]
    CochainDegree { expected: &'static str, found: usize },

    #[error("cochain has {found} values but the complex has {expected} cells in degree {degree}")]
    CochainSize {
        degree: usize,
        expected: usize,
        found: usize,
    },

    #[error("grid too small: {found} < {minimum}")]
    GridTooSmall { minimum: usize, found: usize },

    #[error("plaquette ({i}, {j}) phase {phase} lies within {margin:e} of the branch cut")]
    Admissibility {
        i: usize,
        j: usize,
        phase: f64,
        margin: f64,
    },

    #[error("lattice phase sum {value} is not an integer multiple of 2pi")]
    NonIntegerChern { value: f64 },

    #[error("holonomy branch tracking failed: {0}")]
    BranchTracking(String),

    #[error("degree {upstairs} is not divisible by covering degree {covering}")]
    NonIntegralDegree { upstairs: i64, covering: i64 },

    #[error("value lies within {distance:e} of a branch image")]
    BranchProximity { distance: f64 },

    #[error("preimage counts disagree across samples: {0:?}")]
    InconsistentCount(Vec<usize>),

    #[error("empty path")]
    EmptyPath,

    #[error("invalid input: {0}")]
    Invalid(String),
}
