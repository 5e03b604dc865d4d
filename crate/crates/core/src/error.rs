//! Error and diagnostic types shared across the crate.

use thiserror::Error;

/// A single violated semiring axiom, with a witness.
///
/// Validation reports every violation it finds, not just the first, so a
/// caller (in particular the enumerator's diagnostics) can see the whole
/// failure picture of a candidate table pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AxiomViolation {
    /// `add` and `mul` were given with different orders.
    OrderMismatch { add_order: usize, mul_order: usize },
    /// `(a+b)+c != a+(b+c)`.
    AddNotAssociative { a: usize, b: usize, c: usize },
    /// `(a*b)*c != a*(b*c)`.
    MulNotAssociative { a: usize, b: usize, c: usize },
    /// `a*(b+c) != a*b + a*c`.
    LeftDistributivity { a: usize, b: usize, c: usize },
    /// `(a+b)*c != a*c + b*c`.
    RightDistributivity { a: usize, b: usize, c: usize },
    /// A supplied pseudo-inverse row has the wrong length.
    InverseLength { len: usize, order: usize },
    /// A supplied pseudo-inverse fails one of the unary laws at `x`.
    InverseLaw { law: &'static str, x: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AxiomViolation::OrderMismatch {
                add_order,
                mul_order,
            } => write!(f, "order mismatch: add has order {add_order}, mul {mul_order}"),
            AxiomViolation::AddNotAssociative { a, b, c } => {
                write!(f, "add not associative at ({a},{b},{c})")
            }
            AxiomViolation::MulNotAssociative { a, b, c } => {
                write!(f, "mul not associative at ({a},{b},{c})")
            }
            AxiomViolation::LeftDistributivity { a, b, c } => {
                write!(f, "left distributivity fails at ({a},{b},{c})")
            }
            AxiomViolation::RightDistributivity { a, b, c } => {
                write!(f, "right distributivity fails at ({a},{b},{c})")
            }
            AxiomViolation::InverseLength { len, order } => {
                write!(f, "inverse row has {len} entries, expected {order}")
            }
            AxiomViolation::InverseLaw { law, x } => {
                write!(f, "inverse law {law} fails at x={x}")
            }
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semiring axioms violated: {}", format_violations(.0))]
    Axioms(Vec<AxiomViolation>),
    #[error("table entry {value} at ({row},{col}) is outside the carrier 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table has {len} entries, expected {expected} for order {order}")]
    BadTableShape {
        len: usize,
        expected: usize,
        order: usize,
    },
    #[error("operation table is not associative, witness ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verified claim fails on this instance: {0}")]
    TheoremViolation(String),
    #[error("order {order} exceeds the configured bound {cap}")]
    OrderBound { order: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("term uses the pseudo-inverse but the semiring has none")]
    MissingInverse,
    #[error("assignment does not cover variable #{0}")]
    UnboundVariable(usize),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl From<Vec<AxiomViolation>> for Error {
    fn from(v: Vec<AxiomViolation>) -> Self {
        Error::Axioms(v)
    }
}

fn format_violations(v: &[AxiomViolation]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    items.join("; ")
}
