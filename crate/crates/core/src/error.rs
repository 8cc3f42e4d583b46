use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector is zero within tolerance")]
    ZeroVector,
    #[error("vector is not null: Q(x) = {q:e} exceeds tolerance {bound:e}")]
    NotNull { q: f64, bound: f64 },
    #[error("index {0} out of range 1..=6")]
    IndexOutOfRange(usize),
    #[error("operator is not a real combination of the gamma matrices (residual {residual:e})")]
    NotInGammaSpan { residual: f64 },
    #[error("grades {0} + {1} exceed 4")]
    GradeOverflow(usize, usize),
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("grade {0} out of range 0..=4")]
    InvalidGrade(usize),
    #[error("bivector is not self-dual (deviation {deviation:e})")]
    NotSelfDual { deviation: f64 },
    #[error("self-dual bivector is not a real combination of E_alpha (residual {residual:e})")]
    NotRealCombination { residual: f64 },
    #[error("vector not normalized: Q(x) = {q}, expected +1 or -1")]
    NotNormalized { q: f64 },
    #[error("pair mixes signatures: Q(x) = {q1}, Q(x') = {q2}")]
    MixedSignPair { q1: f64, q2: f64 },
    #[error("matrix is not in SU(2,2)")]
    NotSu22,
    #[error("transformed operator left the gamma span (residual {residual:e})")]
    ActionLeavesSpan { residual: f64 },
    #[error("{what}: expected dimension {expected}, found {found}")]
    RankFailure {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("spinor is not isotropic: (v|v) = {norm:e}")]
    NotIsotropicSpinor { norm: f64 },
    #[error("invalid spinor plane: {0}")]
    InvalidSpinorPlane(&'static str),
    #[error("invalid isotropic plane: {0}")]
    InvalidIsotropicPlane(&'static str),
    #[error("invalid entity: {0}")]
    InvalidEntity(&'static str),
    #[error("null line matches no point, sphere, plane or infinity normal form")]
    Unclassifiable,
}
