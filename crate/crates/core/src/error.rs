use alloc::string::String;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ring order must be at least 2, got {0}")]
    InvalidOrder(usize),
    #[error("product needs at least 2 factors, got {0}")]
    InvalidArity(usize),
    #[error("truncation exponent must be at least 1, got {0}")]
    InvalidExponent(usize),
    #[error("order {order} exceeds the cap of {cap} for this operation")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("ring axiom failed: {law} at ({a}, {b}, {c})")]
    RingAxiom {
        law: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("element code {code} out of range for ring of order {order}")]
    ElementRange { code: usize, order: usize },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("ideal is the whole ring but a proper ideal is required")]
    NotProper,
    #[error("ring is not quasi-local (maximal ideal count is {0})")]
    NotQuasiLocal(usize),
    #[error("expansion table has no entry for ideal {0}")]
    IncompleteTable(String),
    #[error("expansion table entry for {0} is not an ideal")]
    TableEntryNotIdeal(String),
    #[error("expansion axiom violated: {0}")]
    ExpansionAxiom(String),
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("set is not multiplicatively closed (missing {product} = {a}*{b})")]
    NotMultiplicativelyClosed { a: usize, b: usize, product: usize },
    #[error("multiplicative set must contain 1")]
    MissingIdentity,
    #[error("multiplicative set contains 0, localization would be the zero ring")]
    ZeroInMultiplicativeSet,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("kernel of the homomorphism is not contained in the ideal")]
    KernelNotContained,
    #[error("map is not a ring homomorphism: {0}")]
    NotAHomomorphism(&'static str),
    #[error("ring is not a product ring")]
    NotAProduct,
    #[error("ideal is not weakly delta-semiprimary; dual-zero elements are undefined")]
    NotWeaklyDeltaSemiprimary,
    #[error("characteristic {0} is not prime")]
    CharacteristicNotPrime(u64),
    #[error("polynomial context mismatch (variables or characteristic differ)")]
    ContextMismatch,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("internal invariant broken: {0}")]
    Internal(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
