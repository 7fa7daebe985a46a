use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A closed interval with `a > b`.
    InvertedInterval,
    /// An open interval with `a >= b`.
    EmptyOpenInterval,
    NonPositiveScale,
    /// A family parameter outside its admissible range.
    InvalidFamily(&'static str),
    /// A centered removal longer than the nondegenerate interval it is cut from.
    RemovalExceedsInterval { stage: u32 },
    DepthOverCap { depth: u32, cap: u32 },
    /// Two IFS images intersect, so the union is not disjoint.
    OverlappingImages,
    /// An IFS map whose scale is not in `(0, 1)`.
    InvalidMap,
    OutsideUnitInterval,
    InvalidBase(u32),
    /// The point is not in the limit set the operation is defined on.
    NotInSet,
    /// The family has no digit characterization (membership in the limit set
    /// is only decidable exactly for digit families).
    NoDigitCharacterization,
    /// The family's stages collapse to finitely many points.
    DegenerateLimit,
    InvalidArgument(&'static str),
    ParseRational,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvertedInterval => f.write_str("closed interval has a > b"),
            Error::EmptyOpenInterval => f.write_str("open interval has a >= b"),
            Error::NonPositiveScale => f.write_str("scale must be positive"),
            Error::InvalidFamily(why) => write!(f, "invalid family: {why}"),
            Error::RemovalExceedsInterval { stage } => {
                write!(f, "removal at stage {stage} is longer than the interval it is cut from")
            }
            Error::DepthOverCap { depth, cap } => {
                write!(f, "depth {depth} exceeds the enumeration cap {cap}")
            }
            Error::OverlappingImages => f.write_str("IFS images overlap"),
            Error::InvalidMap => f.write_str("IFS map scale must lie in (0, 1)"),
            Error::OutsideUnitInterval => f.write_str("value lies outside [0, 1]"),
            Error::InvalidBase(b) => write!(f, "invalid base {b}; need base >= 2"),
            Error::NotInSet => f.write_str("point is not in the limit set"),
            Error::NoDigitCharacterization => {
                f.write_str("family has no digit-set characterization")
            }
            Error::DegenerateLimit => f.write_str("limit set is a finite set of points"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::ParseRational => f.write_str("expected a rational of the form p/q"),
        }
    }
}

impl core::error::Error for Error {}
