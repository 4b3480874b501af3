use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Variants ending in `Violation` signal that a structural identity which
/// should hold for every input did not; they carry enough context to
/// reproduce the failing case.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime (or exceeds 65521)")]
    NotPrime(u32),
    #[error("division by zero in F_{0}")]
    ZeroDivisor(u32),
    #[error("operands live in different fields: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("residues have different moduli")]
    RingMismatch,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("empty input")]
    EmptyInput,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial has zero constant term")]
    NotInvertibleAtZero,
    #[error("p = {p} divides m = {m}")]
    NotCoprime { p: u32, m: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point {0} appears more than once")]
    NotAPermutation(usize),
    #[error("point {point} is outside 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("module element does not match the cycle type of the permutation")]
    CycleTypeMismatch,
    #[error("cyclic shifts of block {cycle} are linearly dependent")]
    BlockDependence { cycle: usize },
    #[error("code is not invariant under the permutation")]
    InvarianceViolation,
    #[error("the zero code has no proper annihilator")]
    ZeroCode,
    #[error("residue modulus is not of the form Y^m - 1")]
    WrongModulus,
    #[error("shape mismatch between module elements")]
    ShapeMismatch,
    #[error("orbit orthogonality ({orbit}) and hermitian vanishing ({hermitian}) disagree")]
    EquivalenceViolation { orbit: bool, hermitian: bool },
    #[error("euclidean self-duality ({euclidean}) and hermitian self-duality ({hermitian}) disagree")]
    CorollaryViolation { euclidean: bool, hermitian: bool },
    #[error("component-wise self-duality ({structural}) disagrees with the direct check ({direct})")]
    TheoremViolation { structural: bool, direct: bool },
}

pub type Result<T> = std::result::Result<T, Error>;
