use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("points {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("points {0} and {1} share an x-coordinate")]
    DuplicateX(usize, usize),
    #[error("point set is not a Horton set")]
    NotHorton,
    #[error("address {address} is too deep for a Horton set of {n} points")]
    AddressTooDeep { address: String, n: usize },
    #[error("enumeration needs about {required} predicate calls, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("malformed coloring: {0}")]
    MalformedColoring(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coordinate overflow while building a Horton set of {0} points")]
    CoordinateOverflow(usize),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
}
