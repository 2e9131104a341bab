use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("side ({tri}, slot {slot}) appears on more than one edge")]
    DuplicateSide { tri: String, slot: u8 },
    #[error("side ({tri}, slot {slot}) is not glued to any edge")]
    MissingSide { tri: String, slot: u8 },
    #[error("edge {0} glues a triangle to itself")]
    SelfFolded(String),
    #[error("euler characteristic {0} is not negative")]
    NonNegativeEuler(i64),
    #[error("dual graph of the triangulation is disconnected")]
    Disconnected,
    #[error("pair ({0}, {1}) is not the dot pair of any strand counts")]
    NotRepresentable(i64, i64),
    #[error("corner {corner} has no letters at positions {position} and {}", position + 1)]
    OutOfRange { corner: usize, position: usize },
    #[error("corner {corner} has equal letters at positions {position} and {}", position + 1)]
    EqualLetters { corner: usize, position: usize },
    #[error("point is not in the Knutson-Tao cone")]
    NotInCone,
    #[error("expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("strand counts disagree across edge {0}")]
    Incompatible(String),
    #[error("edge-dot gluing identity fails on edge {0}")]
    GluingIdentity(String),
    #[error("square face is no longer present")]
    StaleSquare,
    #[error("web is elliptic")]
    Elliptic,
    #[error("local web contents differ on triangle {0}")]
    ContentMismatch(String),
    #[error("traveler correspondence conflict: {0}")]
    CorrespondenceConflict(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
