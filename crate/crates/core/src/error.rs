use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 {
        offset: usize,
        kind: Graph6ErrorKind,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is trivial (a single vertex)")]
    TrivialGraph,

    #[error("combined order {0} exceeds the supported maximum of 64")]
    OrderOverflow(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("distance to an empty vertex set is undefined")]
    EmptyPart,

    #[error("part count {k} out of range for {n} vertices")]
    PartCountOutOfRange { n: usize, k: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("invalid family spec: {0}")]
    Family(String),

    #[error("canonical forms are computed for n <= 10 only, got n = {0}")]
    CanonicalOrder(usize),

    #[error(
        "built-in enumeration covers orders 2..=8, got {0}; supply a corpus file for larger orders"
    )]
    UnsupportedOrder(usize),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What went wrong while decoding a graph6 byte stream.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,

    #[error("malformed length prefix")]
    BadLengthPrefix,

    #[error("order 0 is not supported")]
    ZeroOrder,

    #[error("order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),

    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    NonPrintable(u8),

    #[error("input has {got} bytes, expected {want}")]
    WrongLength { got: usize, want: usize },

    #[error("trailing padding bits are not zero")]
    TrailingBits,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
