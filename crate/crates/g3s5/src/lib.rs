//! A proof engine for the modal logic S5 built on a zoned (semicolon)
//! sequent calculus: backward proof search, derivation checking, the
//! admissible structural transformations including cut elimination, a
//! brute-force Kripke-semantics oracle, and a bridge from axiomatic
//! proofs.

pub mod formula;
pub mod hilbert;
pub mod kernel;
pub mod kripke;
pub mod multiset;
pub mod search;
pub mod sequent;
pub mod transform;

pub use formula::{modal_cnf, modal_dnf, parse, render, Formula, ModalClause, Style};
pub use kernel::{
    check, check_derivation, check_general, rule_instances, Derivation, Mode, Principal, RuleId,
    Variant,
};
pub use kripke::{decide_validity, sequent_valid, KripkeModel, Verdict};
pub use multiset::Multiset;
pub use search::{prove, prove_variant_suite, SearchConfig, SearchResult};
pub use sequent::{Block, BlockKind, PlainSequent, ZonedSequent};
