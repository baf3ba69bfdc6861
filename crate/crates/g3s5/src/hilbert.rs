//! Axiomatic S5 proofs and their translation into sequent derivations.
