//! Finite rings given by Cayley tables, their one-sided and two-sided
//! ideals, and exhaustive checks of prime, weakly prime and almost prime
//! ideal conditions.

pub mod bits;
pub mod constructions;
pub mod corpus;
pub mod homs;
pub mod ideal;
pub mod predicates;
pub mod ring;
pub mod ringfile;
pub mod theorems;

pub use bits::BitSet;
pub use constructions::{
    builtin_example, direct_product, find_isomorphism, matrix_ring, quotient, subring, upper_triangular, zmod,
    ConstructionError, PaperExample, ProductRing, QuotientDescriptor,
};
pub use corpus::{default_corpus, load_corpus_dir, Corpus, CorpusRing, GeneratorSpec};
pub use homs::{enumerate_epimorphisms, validate_hom, HomError, RingHom};
pub use ideal::{
    colon, enumerate_ideals, enumerate_ideals_oracle, ideal_product, principal, ColonSide, ElementSubset, IdealError,
    IdealHandle, IdealKind,
};
pub use predicates::{
    classify_ring, is_almost_prime, is_fully_almost_prime, is_prime, is_weakly_prime, Flavor, Universe,
};
pub use ring::{validate_ring, FiniteRing, RawRing, Ring, RingError, RingProperties, DEFAULT_MAX_ORDER};
pub use ringfile::{parse_ring_str, read_ring_file, write_ring_file, RingFile, RingFileError};
pub use theorems::{
    explain_report, explain_violation, parse_selection, run_checks, CheckOptions, Mutation, SuiteReport, TheoremId,
    TheoremReport, Violation,
};
