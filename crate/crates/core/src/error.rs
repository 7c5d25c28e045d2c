use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("parts must be nonnegative: {0:?}")]
    NegativePart(Vec<i64>),
    #[error("inner shape {inner:?} does not fit inside outer shape {outer:?}")]
    InnerExceedsOuter { outer: Vec<usize>, inner: Vec<usize> },
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse { what: &'static str, input: String, reason: String },
    #[error("invalid corner encoding: {0}")]
    InvalidEncoding(String),
    #[error("corner index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("border strip ({i},{j}) is not removable: {reason}")]
    NotRemovable { i: usize, j: usize, reason: String },
    #[error("border strip pairs violate nesting i_1 < .. < i_m <= j_m < .. < j_1: {0:?}")]
    NotNested(Vec<(usize, usize)>),
    #[error("expected a strictly increasing set of positive integers, got {0:?}")]
    InvalidSet(Vec<i64>),
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid minor selection: {0}")]
    InvalidMinor(String),
    #[error("jacobi-trudi method needs a straight shape, inner is {0:?}")]
    SkewJacobiTrudi(Vec<usize>),
    #[error("malformed path family: {0}")]
    MalformedFamily(String),
    #[error("invalid two-coloured graph: {0}")]
    InvalidGraph(String),
    #[error("no changing trail starts at {0}")]
    NoTrail(String),
    #[error("trails share edge instances: {0}")]
    OverlappingTrails(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("orbit closure exceeded {0} quadruples without terminating")]
    OrbitDiverged(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
