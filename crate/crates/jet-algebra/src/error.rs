#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("jet orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("square root needs a positive constant term")]
    NonPositiveSqrt,
    #[error("inner series of a composition must vanish at 0")]
    ComposeNonzeroConstant,
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("reversion needs f(0) = 0 and f'(0) != 0")]
    ReversionDegenerate,
    #[error("root of the constant term is not representable exactly")]
    InexactRoot,
    #[error("series is not divisible by s^{0}")]
    NotDivisible(usize),
    #[error("leading exponent must be 2 or 4, got {0}")]
    BadLeadingExponent(usize),
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("requested coefficient {0} exceeds the truncation order {1}")]
    BeyondOrder(usize, usize),
}
