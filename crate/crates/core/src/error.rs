use thiserror::Error;

/// Every failure the library can report.
///
/// Variants carry enough context (witnessing elements, indices, sizes) for a
/// caller to print a useful message without re-running the computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square or contains an index out of range: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("unknown group name: {0}")]
    UnknownName(String),
    #[error("bad semidirect product action: {0}")]
    BadSemidirectAction(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("map is not a group automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("subgroup is not abelian and normal")]
    NotAbelianNormal,
    #[error("class function is not an irreducible character")]
    NotIrreducible,

    #[error("linear algebra budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("cocycle identity fails at ({a}, {b}, {c})")]
    NotACocycle { a: usize, b: usize, c: usize },
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("pairing is degenerate")]
    Degenerate,
    #[error("character is not of the form <., s> for any s")]
    NoSuchElement,

    #[error("Verlinde sum N[{i}][{j}][{k}] is not a non-negative integer")]
    NonIntegralFusion { i: usize, j: usize, k: usize },

    #[error("cocycle twist is not a linear character on the centralizer of element {element}")]
    TwistNotCharacter { element: usize },
    #[error("cocycle class has no conjugation-invariant representative")]
    NotLazy,
    #[error("no equivariant nondegenerate self-pairing supplied or found")]
    NotSelfDual,
    #[error("subgroup pair is not a semidirect decomposition")]
    NoComplement,
    #[error("partial map has no extension preserving the modular data")]
    NoExtension,
    #[error("mappings act on different sets of simple objects ({0} vs {1})")]
    DomainMismatch(usize, usize),
    #[error("bimodule condition failed: {0}")]
    ConditionFailed(String),
    #[error("object mapping does not preserve the modular data: {0}")]
    NotBraided(String),
    #[error("provenance does not describe a single construction: {0}")]
    NotAConstruction(String),
    #[error("could not identify the target simple object: {0}")]
    Unidentified(String),

    #[error("object mapping is not additive on labels")]
    NotAdditive,
    #[error("matrix does not preserve the form")]
    NotFormPreserving,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no factorization b*e*r_d found")]
    NoFactorization,
}

pub type Result<T> = std::result::Result<T, Error>;
