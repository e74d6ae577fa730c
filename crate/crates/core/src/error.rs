use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    BadMatrixShape { rows: usize, cols: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("point lies outside the cone")]
    PointOutsideCone,
    #[error("not a rational number: {0:?}")]
    BadNumber(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(
        "a nonzero nonnegative combination {combination:?} of generator degrees vanishes, \
         so the degree-zero part would not be a field (A_0 = k is required)"
    )]
    NotPositive { combination: Vec<num_bigint::BigInt> },
    #[error("exponent cone of the generators is not pointed")]
    ExponentConeNotPointed,
    #[error("generator {index} has zero exponent vector")]
    ZeroExponent { index: usize },
    #[error("grading map does not send exponent vector {index} to its declared degree")]
    DegreeMismatch { index: usize },
    #[error("{found} generators given, at most {max} supported")]
    TooManyGenerators { found: usize, max: usize },
    #[error("expected {expected} names, found {found}")]
    BadNames { expected: usize, found: usize },
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("ideals belong to different rings")]
    DifferentRings,
    #[error("sublattice basis must consist of {n} independent vectors of length {n}")]
    BadSublattice { n: usize },
    #[error("no multiple of extreme ray {ray:?} up to {limit} lies in the restricted semigroup")]
    RestrictionFailed { ray: Vec<num_bigint::BigInt>, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("the ray ideal is zero: the point lies outside the degree cone")]
    ZeroIdeal,
    #[error("the degree cone must be the nonnegative orthant, found {0}")]
    NotOrthant(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("invalid fan: {}", .0.join("; "))]
    InvalidFan(Vec<String>),
    #[error("invalid divisor data: {}", .0.join("; "))]
    InvalidDivisors(Vec<String>),
    #[error("the fan is not complete")]
    Incomplete,
    #[error("the polytope of sections at degree {0:?} is unbounded")]
    UnboundedPolytope(Vec<num_bigint::BigInt>),
    #[error("the round trip needs a polynomial ring")]
    NotPolynomial,
    #[error("the degree map must have full rank with image Z^n (Smith invariants {0:?})")]
    DegreeLattice(Vec<num_bigint::BigInt>),
    #[error("the quotient is zero-dimensional: every Q-divisor on a point is 0")]
    ZeroDimensional,
    #[error("{0} is not a full-dimensional maximal ray-ideal cone")]
    NotAChamber(String),
    #[error(
        "minimal prime {0} of the chamber ideal has height one; the graded ring is only \
         a restriction R(X;D)_tau of a multi-section ring"
    )]
    HeightOne(String),
}
