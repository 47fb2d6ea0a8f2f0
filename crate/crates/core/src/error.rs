use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two groups: input or hypothesis violations, which are
/// the caller's to fix, and numerical failures of an algorithm on valid input.
/// [`Error::is_hypothesis`] tells them apart.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("both polynomials are constant")]
    BothConstant,
    #[error("polynomials have a common root (reciprocal condition {rcond:?})")]
    CommonRoots { rcond: Option<f64> },
    #[error("point is not a root: |p(u)| = {residual:e}")]
    NotARoot { residual: f64 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("interpolation nodes are not distinct")]
    DuplicateNodes,
    #[error("invalid Hermite data: {0}")]
    InvalidHermiteData(String),
    #[error("coefficient norm {norm} exceeds 1")]
    NormTooLarge { norm: f64 },
    #[error("vector {index} has norm {norm} < 1")]
    VectorTooShort { index: usize, norm: f64 },
    #[error("empty input")]
    EmptyInput,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("combined polynomial vanishes at a root of A")]
    CommonRootsAfterCombination,
    #[error("plank certificate failed: achieved {achieved} < bound {bound}")]
    PlankCertificateFailed { achieved: f64, bound: f64 },
    #[error("not in the Schur class: sup |b| = {sup} on the circle")]
    NotSchurClass { sup: f64 },
    #[error("b is a finite Blaschke product")]
    BlaschkeProduct,
    #[error("unimodular root {root} has odd multiplicity {multiplicity} in 1 - |b|^2")]
    OddCircleMultiplicity { root: String, multiplicity: usize },
    #[error("spectral factorization failed: {0}")]
    FactorizationFailed(String),
    #[error("index {index} out of range ({len} boundary roots)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("sample {0} lies outside the open unit disk")]
    SampleOutsideDisk(String),
    #[error("need at least {need} sweep points, got {got}")]
    NotEnoughPoints { got: usize, need: usize },
    #[error("root finder failed: {0}")]
    RootFindingFailed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// `true` for input and hypothesis violations, `false` for numerical
    /// failures on otherwise valid input.
    pub fn is_hypothesis(&self) -> bool {
        !matches!(
            self,
            Error::CommonRootsAfterCombination
                | Error::PlankCertificateFailed { .. }
                | Error::OddCircleMultiplicity { .. }
                | Error::FactorizationFailed(_)
                | Error::RootFindingFailed(_)
        )
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BothConstant => "BothConstant",
            Error::CommonRoots { .. } => "CommonRoots",
            Error::NotARoot { .. } => "NotARoot",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::DuplicateNodes => "DuplicateNodes",
            Error::InvalidHermiteData(_) => "InvalidHermiteData",
            Error::NormTooLarge { .. } => "NormTooLarge",
            Error::VectorTooShort { .. } => "VectorTooShort",
            Error::EmptyInput => "EmptyInput",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::CommonRootsAfterCombination => "CommonRootsAfterCombination",
            Error::PlankCertificateFailed { .. } => "PlankCertificateFailed",
            Error::NotSchurClass { .. } => "NotSchurClass",
            Error::BlaschkeProduct => "BlaschkeProduct",
            Error::OddCircleMultiplicity { .. } => "OddCircleMultiplicity",
            Error::FactorizationFailed(_) => "FactorizationFailed",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::SampleOutsideDisk(_) => "SampleOutsideDisk",
            Error::NotEnoughPoints { .. } => "NotEnoughPoints",
            Error::RootFindingFailed(_) => "RootFindingFailed",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
