use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("byte {byte:#04x} ({}) at offset {offset} is not in the alphabet", char::from(*byte).escape_default())]
    SymbolNotInAlphabet { byte: u8, offset: usize },

    #[error("alphabet lists byte {0:#04x} more than once")]
    DuplicateSymbol(u8),

    #[error("alphabet has {0} symbols, at most 256 are supported")]
    AlphabetTooLarge(usize),

    #[error("symbol index {index} is outside an alphabet of size {size}")]
    SymbolIndexOutOfRange { index: usize, size: usize },

    #[error("window [{start}, {start}+{length}) does not fit a string of length {len} (positions are 1-based)")]
    WindowOutOfRange { start: usize, length: usize, len: usize },

    #[error("window size {window} is outside [1, {text}]")]
    WindowSizeOutOfRange { window: usize, text: usize },

    #[error("pattern of length {pattern} is longer than text of length {text}")]
    PatternTooLong { pattern: usize, text: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("query Parikh vector sums to {found}, index window size is {expected}")]
    ParikhSumMismatch { expected: usize, found: usize },

    #[error("invalid prime code {code} at alphabet index {index}")]
    InvalidPrimeCode { index: usize, code: u64 },

    #[error("state needs {required} qubits, cap is {available}")]
    QubitCapExceeded { required: usize, available: usize },

    #[error("text length {0} is not a power of two (required in full mode)")]
    NotPowerOfTwo(usize),

    #[error("state is not normalized: squared norm {norm_sqr}")]
    Unnormalized { norm_sqr: f64 },

    #[error("position {position} is outside [1, {max}]")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("register {register} is outside [1, {registers}]")]
    RegisterOutOfRange { register: usize, registers: usize },

    #[error("qubit {qubit} does not fit circuit width {width}")]
    QubitOutOfRange { qubit: usize, width: usize },

    #[error("gate controls and targets overlap on qubit {0}")]
    OverlappingQubits(usize),

    #[error("no marked positions; optimal iteration count is undefined for t = 0")]
    NoMarkedItems,

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
