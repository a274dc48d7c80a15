use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed braid token {0:?}: expected a nonzero integer")]
    MalformedToken(String),
    #[error("generator {generator} out of range for {strands} strands (need 1..={max})", max = .strands.saturating_sub(1))]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },
    #[error("color must be at least 2, got {0}")]
    ColorTooSmall(u32),
    #[error("braid word is not positive: letter {0} is negative")]
    NotPositive(usize),
    #[error("strand {strand} out of range for {strands} strands")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("q-binomial ({n} {k}) undefined: k out of range")]
    BinomialRange { n: i64, k: i64 },
    #[error("cannot parse polynomial {0:?}")]
    PolynomialSyntax(String),
    #[error("pipelines disagree: walks gave {walks}, quantum determinant gave {qdet}")]
    PipelineMismatch { walks: String, qdet: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
