use alloc::string::String;
use core::fmt;

/// Errors shared across all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A symbol appears in a bracket but not in the basis declaration.
    UnknownSymbol(String),
    /// Two basis elements share a name.
    DuplicateBasisName(String),
    /// Vector or matrix sizes do not match the algebra dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// The given subspace is not an ideal of the Lie algebra.
    NotAnIdeal,
    /// The complement seed F is linearly dependent modulo the ideal.
    DependentModuloIdeal,
    /// Operands belong to algebras of different dimension.
    AlgebraMismatch,
    /// The weight function is not additive on nonzero brackets.
    WeightsNotAdditive { i: usize, j: usize, k: usize },
    /// Generator images do not satisfy the bracket relations as commutators.
    ImagesNotALieMorphism { i: usize, j: usize },
    /// exp is only defined on elements with counit zero.
    NonzeroConstantTerm,
    /// log is only defined on elements with counit one.
    CounitNotOne,
    /// An argument is required to be primitive but is not.
    NotPrimitive,
    /// Span closure did not stabilize within the iteration cap.
    ClosureExceedsBound { cap: usize },
    /// Floating re-expansion left a residual above tolerance.
    ResultOutsideAlgebra,
    /// Tower ideal chain is not decreasing.
    ChainNotDecreasing { stage: usize },
    /// No ideal of the chain is contained in the kernel of the morphism.
    NoStageContained,
    /// Threads live over different towers or have the wrong stage count.
    StageMismatch,
    /// The base Lie algebra is required to be abelian.
    NotAbelian,
    /// The algebra is required to be commutative.
    NotCommutative,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownSymbol(s) => write!(f, "unknown basis symbol `{s}`"),
            Error::DuplicateBasisName(s) => write!(f, "duplicate basis name `{s}`"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotAnIdeal => write!(f, "subspace is not an ideal"),
            Error::DependentModuloIdeal => {
                write!(f, "seed family is linearly dependent modulo the ideal")
            }
            Error::AlgebraMismatch => write!(f, "operands belong to different algebras"),
            Error::WeightsNotAdditive { i, j, k } => write!(
                f,
                "weights not additive on bracket: c_({i},{j})^{k} nonzero but w_{k} != w_{i}+w_{j}"
            ),
            Error::ImagesNotALieMorphism { i, j } => {
                write!(f, "images violate bracket relation on basis pair ({i},{j})")
            }
            Error::NonzeroConstantTerm => write!(f, "exp requires counit zero"),
            Error::CounitNotOne => write!(f, "log requires counit one"),
            Error::NotPrimitive => write!(f, "argument is not primitive"),
            Error::ClosureExceedsBound { cap } => {
                write!(f, "span closure exceeded iteration cap {cap}")
            }
            Error::ResultOutsideAlgebra => {
                write!(
                    f,
                    "matrix exponential does not re-expand in the algebra within tolerance"
                )
            }
            Error::ChainNotDecreasing { stage } => {
                write!(f, "ideal chain not decreasing at stage {stage}")
            }
            Error::NoStageContained => {
                write!(
                    f,
                    "no chain ideal is contained in the kernel of the morphism"
                )
            }
            Error::StageMismatch => write!(f, "threads do not share a tower shape"),
            Error::NotAbelian => write!(f, "base Lie algebra must be abelian"),
            Error::NotCommutative => write!(f, "algebra must be commutative"),
        }
    }
}
