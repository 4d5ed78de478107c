use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("matrix data has length {found}, expected {rows}x{cols}")]
    BadLength {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("entry {value} is not a residue modulo {modulus}")]
    EntryOutOfRange { value: u32, modulus: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("image of the source subspace is not contained in the target subspace")]
    NotInvariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("directed cycle through vertex {0}")]
    CycleError(String),
    #[error("unsupported quiver shape: {0}")]
    UnsupportedShape(String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("arrow {arrow}: expected a {rows}x{cols} matrix, got {found_rows}x{found_cols}")]
    Shape {
        arrow: String,
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    #[error("dimension vector has {found} entries, quiver has {expected} vertices")]
    DimLength { expected: usize, found: usize },
    #[error("arrow {0} uses a different modulus")]
    Modulus(String),
    #[error("representations live on different quivers or fields")]
    Mismatch,
    #[error("unknown simple {0}")]
    UnknownSimple(usize),
    #[error("vector does not span an embedded copy of the simple")]
    NotEmbedding,
    #[error("composition factor of dimension {dim} is not split over F_p")]
    NonSplitFactor { dim: usize },
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("cover #{0} does not join to one")]
    InvalidCover(usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("axiom {0} has no {1} column")]
    InvalidAxiom(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpenError {
    #[error("flavors differ: {0} vs {1}")]
    FlavorMismatch(String, String),
    #[error("cofinite letters are only meaningful for the one-loop model")]
    CofiniteNotAllowed,
    #[error("letter refers to unknown simple {0}")]
    UnknownSimple(usize),
    #[error("too many simples ({0}) for the letter encoding")]
    TooManySimples(usize),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("composition monoid is only defined for quivers without oriented cycles")]
    UnsupportedShape,
    #[error("relation {0} changes length or generator multiset")]
    Unbalanced(String),
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("cannot parse monoid word {0:?}")]
    Parse(String),
    #[error("word letters must be single simples")]
    NotSingleton,
    #[error("prefix rewriting needs a one-sided flavor")]
    ScatteredFlavor,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Open(#[from] OpenError),
}
