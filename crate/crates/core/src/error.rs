use thiserror::Error;

/// Errors raised while building or querying groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    EmptyTable,
    #[error("not closed: entry ({row}, {col}) = {value} is outside 0..{order}")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("size cap exceeded: group order exceeds {cap}")]
    CapExceeded { cap: usize },
    #[error("subgroup is not normal: conjugating {element} by {by} leaves the subgroup")]
    NotNormal { element: usize, by: usize },
    #[error("action of element {h} is not an automorphism: {reason}")]
    NotAutomorphism { h: usize, reason: String },
    #[error("action is not a homomorphism at ({h1}, {h2})")]
    ActionNotHomomorphism { h1: usize, h2: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    #[error("no prime p dividing k = {k} satisfies 0 < n_p(G) <= n_k(G)")]
    NoSuchPrime { k: u64 },
    #[error("element index {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
