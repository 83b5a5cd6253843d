use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Identifier of a hyperring law checked by validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddIdentity,
    AddInverse,
    AddAssociative,
    AddCommutative,
    HmulAssociative,
    HmulCommutative,
    DistributiveLeft,
    DistributiveRight,
    SignCompatibility,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::AddIdentity,
        Axiom::AddInverse,
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::HmulAssociative,
        Axiom::HmulCommutative,
        Axiom::DistributiveLeft,
        Axiom::DistributiveRight,
        Axiom::SignCompatibility,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::AddIdentity => "add-identity",
            Axiom::AddInverse => "add-inverse",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::HmulAssociative => "hmul-associative",
            Axiom::HmulCommutative => "hmul-commutative",
            Axiom::DistributiveLeft => "distributive-left",
            Axiom::DistributiveRight => "distributive-right",
            Axiom::SignCompatibility => "sign-compatibility",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failed law with the lexicographically least witness triple.
///
/// Laws with fewer than three free variables pad the triple with zeros.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: [usize; 3],
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.witness;
        write!(f, "{} fails at ({a}, {b}, {c})", self.axiom)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element index {index} out of range in {field} (size {size})")]
    IndexOutOfRange {
        field: String,
        index: usize,
        size: usize,
    },
    #[error("hmul[{0}][{1}] is empty: the hyperproduct {0} o {1} must be nonempty")]
    EmptyHyperproduct(usize, usize),
    #[error("axiom violations: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    AxiomViolations(Vec<AxiomViolation>),
    #[error("carrier size {size} exceeds the cap {cap}")]
    CapExceeded { cap: usize, size: usize },
    #[error("the hyperring has no identity element")]
    NoIdentity,
    #[error("expected a nonempty subset")]
    EmptySet,
    #[error("{0} is not a hyperideal")]
    NotHyperideal(String),
    #[error("the ideal meets the subset it must avoid")]
    NotDisjoint,
    #[error("quotient hyperproduct depends on representatives: {0}")]
    IllFormedQuotient(String),
    #[error("fundamental ring operations depend on representatives: {0}")]
    IllDefinedQuotient(String),
    #[error("map is not additive at ({0}, {1})")]
    NotAdditive(usize, usize),
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("invalid definition file: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
