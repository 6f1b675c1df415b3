use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor class has {found} exceptional coefficients but the surface has {expected}")]
    DeltaMismatch { expected: usize, found: usize },
    #[error("integer overflow while evaluating an intersection number")]
    Overflow,
    #[error(
        "class must live on F_n itself (no exceptional part), found {0} exceptional coefficients"
    )]
    NotOnBase(usize),
    #[error("point coordinates required: surface blows up {delta} points but none were given")]
    MissingPoints { delta: usize },
    #[error("expected {expected} points, got {found}")]
    PointCount { expected: usize, found: usize },
    #[error("points {0} and {1} lie on the same fiber")]
    SameFiber(usize, usize),
    #[error("point {0} is not in the dense torus (t and s must be nonzero)")]
    OffTorus(usize),
    #[error("negative vanishing order {0}")]
    NegativeMultiplicity(i64),
    #[error(
        "candidate-curve analysis needs points off C0 on distinct fibers; genericity not declared"
    )]
    Inconclusive,
    #[error("operation requires exactly one blown-up point, surface has {0}")]
    NotOneNodal(usize),
    #[error("geometric genus {0} is below 2")]
    GenusTooSmall(i128),
    #[error("target surface must differ from the source surface (m = n = {0})")]
    SameSurface(u32),
    #[error("wedge dimension {wedge} exceeds budget {budget}")]
    BudgetExceeded { wedge: usize, budget: usize },
}
