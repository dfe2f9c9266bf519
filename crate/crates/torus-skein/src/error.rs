use std::fmt;

/// Every failure the library can report.
///
/// The errors split into two families, mirrored by the CLI exit codes:
/// syntax problems in the expression front-end (`Syntax`, `KindMismatch`,
/// exit code 2) and domain violations in the algebra itself (everything
/// else, exit code 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division was requested by a Laurent polynomial that is not a unit.
    /// Units of Z[t, t^-1] are exactly the monomials with coefficient +/-1.
    NotAUnit,
    /// Evaluation of a Laurent polynomial at t = 0, where negative powers
    /// of t are undefined.
    ZeroEvaluationPoint,
    /// An element of the noncommutative torus was not invariant under the
    /// index-negation involution, so it has no preimage in the skein
    /// algebra.
    NotSymmetric,
    /// A curve index that must be primitive (gcd(p, q) = 1) was not.
    NotPrimitive { p: i64, q: i64 },
    /// A gluing matrix whose determinant is not -1.
    BadDeterminant { det: i64 },
    /// A gluing matrix with p < 1 in its second column; the reduction
    /// algorithm only supports lens spaces L(p, q) with p >= 1.
    UnsupportedGluing { p: i64 },
    /// No decomposition n = m*a + k*p exists. Unreachable for determinant
    /// -1 matrices (then gcd(a, p) = 1); kept as a defensive check.
    NoDecomposition,
    /// A Jones-Wenzl idempotent index outside 0..=r-2 was evaluated at the
    /// root of unity t = e^{i*pi/(2r)}, where the idempotent is undefined.
    IdempotentUndefined { n: u64, r: u64 },
    /// Malformed expression text; `column` is 1-based.
    Syntax { column: usize, message: String },
    /// An atom of one element kind appeared in an expression declared as a
    /// different kind (e.g. `e(1,0)` inside a skein expression).
    KindMismatch { column: usize },
}

impl Error {
    /// True for errors raised while reading input text, false for domain
    /// errors raised by the algebra. The CLI maps these to exit codes 2
    /// and 3 respectively.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::KindMismatch { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit => write!(f, "divisor is not a unit of Z[t, t^-1]"),
            Error::ZeroEvaluationPoint => write!(f, "cannot evaluate at t = 0"),
            Error::NotSymmetric => {
                write!(f, "element is not symmetric under e(p,q) -> e(-p,-q)")
            }
            Error::NotPrimitive { p, q } => {
                write!(f, "curve index ({p},{q}) is not primitive")
            }
            Error::BadDeterminant { det } => {
                write!(f, "gluing matrix determinant is {det}, expected -1")
            }
            Error::UnsupportedGluing { p } => {
                write!(f, "gluing matrix has p = {p}; only p >= 1 is supported")
            }
            Error::NoDecomposition => write!(f, "no decomposition n = m*a + k*p exists"),
            Error::IdempotentUndefined { n, r } => {
                write!(f, "idempotent index {n} is undefined at r = {r} (need n <= r-2)")
            }
            Error::Syntax { column, message } => {
                write!(f, "syntax error at column {column}: {message}")
            }
            Error::KindMismatch { column } => {
                write!(f, "atom at column {column} does not belong to the declared element kind")
            }
        }
    }
}

impl std::error::Error for Error {}
