use thiserror::Error;

/// Errors surfaced by the library.
///
/// Shape mismatches in raw matrix arithmetic are programming errors and
/// panic instead; everything a caller can trigger with bad input (genus,
/// indices, module requests, group tables) comes through here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    Genus(u32),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("unknown generator {0} for this representation")]
    UnknownGenerator(String),

    #[error("matrix is not invertible over the integers")]
    NotUnimodular,

    #[error("membership failure: {0}")]
    Membership(String),

    #[error("module derivation failed: {0}")]
    Block(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("invalid module action: {0}")]
    InvalidAction(String),

    #[error("invalid ring: {0}")]
    Ring(String),

    #[error("cannot parse word: {0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
