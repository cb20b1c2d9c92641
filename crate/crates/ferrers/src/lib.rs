//! Hilbert functions of bigraded algebras in `k[x1,x2,y1,y2]`, where
//! `deg(xi) = (1,0)` and `deg(yj) = (0,1)`.
//!
//! The central question this crate answers: given a finite rectangle of
//! natural numbers `H(i,j)`, is `H` the Hilbert function of some bigraded
//! quotient of the ring? The decision procedure searches for a compatible
//! family of box-bounded partitions (a *Ferrers witness*), one partition of
//! `H(i,j)` with sides `(i+1, j+1)` per cell, linked by two lift maps. A
//! witness is constructive: it realizes a monomial ideal whose Hilbert
//! table reproduces the input exactly.
//!
//! The main pieces:
//!
//! - [`partition`]: partitions of a number with prescribed sides, their meet,
//!   componentwise order, the two lifts, and bounded enumeration.
//! - [`monomial`] / [`ideal`]: bigraded monomials, bilex sets, monomial
//!   ideals, Hilbert values, and the partition/monomial dictionary.
//! - [`table`]: the `HilbertTable` rectangle and its difference table.
//! - [`engine`]: necessary-condition filters, the witness search
//!   ([`engine::is_ferrers`]), ideal realization, and admissibility.
//! - [`macaulay`]: binomial-representation growth bounds for diagonal sums.
//! - [`oracle`]: an independent brute-force realizability check used to
//!   cross-validate the engine on small rectangles.
//! - [`sampling`]: seeded generators for randomized suites.

pub mod engine;
pub mod ideal;
pub mod macaulay;
pub mod monomial;
pub mod oracle;
pub mod partition;
pub mod sampling;
pub mod table;

pub use engine::{FailureCertificate, FerrersDecision, FerrersWitness};
pub use ideal::MonomialBiIdeal;
pub use monomial::{BiDegree, BiMonomial};
pub use partition::SidedPartition;
pub use table::{DeltaTable, HilbertTable};

use thiserror::Error;

/// Errors shared across the crate. Domain verdicts that are expected
/// outcomes (filter violations, failure certificates, admissibility
/// reports) have their own types in [`engine`]; `Error` is for misuse of
/// an operation or malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("sides ({l1},{l2}) require exactly {l2} entries, got {got}")]
    WrongEntryCount { l1: usize, l2: usize, got: usize },
    #[error("entry {entry} exceeds the side bound {l1}")]
    EntryTooLarge { entry: usize, l1: usize },
    #[error("sides mismatch: ({0},{1}) vs ({2},{3})")]
    SideMismatch(usize, usize, usize, usize),
    #[error("partition has no entries (second side is 0)")]
    EmptyPartition,
    #[error("dictionary coordinates ({p},{q}) out of range for bidegree ({a},{b})")]
    TCoordsOutOfRange {
        p: usize,
        q: usize,
        a: usize,
        b: usize,
    },
    #[error("partition sides ({0},{1}) do not correspond to a bidegree")]
    NoBidegreeForSides(usize, usize),
    #[error("monomial {monomial} has bidegree {got}, expected {expected}")]
    MixedBidegree {
        monomial: monomial::BiMonomial,
        got: monomial::BiDegree,
        expected: monomial::BiDegree,
    },
    #[error("slice at {at} is not bilex: {detail}")]
    NonBilexSlice {
        at: monomial::BiDegree,
        detail: String,
    },
    #[error("slices not closed under multiplication: {variable} * {monomial} missing at {at}")]
    ClosureViolation {
        monomial: monomial::BiMonomial,
        variable: monomial::Variable,
        at: monomial::BiDegree,
    },
    #[error("witness invalid for the table: {0}")]
    InvalidWitness(String),
    #[error("oracle limit exceeded: {0}")]
    OracleLimit(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
