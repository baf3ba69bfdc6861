//! Modal-aware disjunctive and conjunctive normal forms.
//!
//! Maximal modal subformulas are treated as opaque literals: negation is
//! pushed down to atoms and modal literals but never inside ◇ or □. Each
//! clause is a multiset of literals of the four shapes p, ¬q, B, ¬C with
//! B and C modal-rooted.

use super::Formula;
use crate::multiset::Multiset;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One conjunction of a DNF (or disjunction of a CNF).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModalClause {
    pub pos_atoms: Multiset<String>,
    pub neg_atoms: Multiset<String>,
    /// Positive modal literals; every member is ◇- or □-rooted.
    pub pos_modals: Multiset<Formula>,
    /// Negated modal literals, stored without the negation.
    pub neg_modals: Multiset<Formula>,
}

impl ModalClause {
    fn merge(&self, other: &ModalClause) -> ModalClause {
        ModalClause {
            pos_atoms: self.pos_atoms.union(&other.pos_atoms),
            neg_atoms: self.neg_atoms.union(&other.neg_atoms),
            pos_modals: self.pos_modals.union(&other.pos_modals),
            neg_modals: self.neg_modals.union(&other.neg_modals),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.pos_atoms.is_empty()
            && self.neg_atoms.is_empty()
            && self.pos_modals.is_empty()
            && self.neg_modals.is_empty()
    }

    /// Literals in canonical order: p₁…pₙ, ¬q₁…¬qₘ, B₁…Bₖ, ¬C₁…¬Cₗ.
    pub fn literals(&self) -> Vec<Formula> {
        let mut lits: Vec<Formula> = Vec::new();
        lits.extend(self.pos_atoms.iter().map(|a| Formula::atom(a.clone())));
        lits.extend(
            self.neg_atoms
                .iter()
                .map(|a| Formula::not(Formula::atom(a.clone()))),
        );
        lits.extend(self.pos_modals.iter().cloned());
        lits.extend(self.neg_modals.iter().map(|m| Formula::not(m.clone())));
        lits
    }

    /// The clause read as a conjunction; the empty clause is ⊤.
    pub fn as_conjunction(&self) -> Formula {
        let lits = self.literals();
        if lits.is_empty() {
            Formula::Top
        } else {
            Formula::conj_of(lits)
        }
    }

    /// The clause read as a disjunction; the empty clause is ⊥.
    pub fn as_disjunction(&self) -> Formula {
        let lits = self.literals();
        if lits.is_empty() {
            Formula::Bottom
        } else {
            Formula::disj_of(lits)
        }
    }
}

fn cross(left: &[ModalClause], right: &[ModalClause]) -> Vec<ModalClause> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            out.push(a.merge(b));
        }
    }
    out
}

/// Clauses of the DNF of `f` under the given polarity. Positive ⊥ yields
/// no clause, positive ⊤ the empty clause.
fn dnf_clauses(f: &Formula, positive: bool) -> Vec<ModalClause> {
    match (f, positive) {
        (Formula::Atom(name), true) => vec![ModalClause {
            pos_atoms: Multiset::singleton(name.clone()),
            ..Default::default()
        }],
        (Formula::Atom(name), false) => vec![ModalClause {
            neg_atoms: Multiset::singleton(name.clone()),
            ..Default::default()
        }],
        (Formula::Bottom, true) | (Formula::Top, false) => vec![],
        (Formula::Bottom, false) | (Formula::Top, true) => vec![ModalClause::default()],
        (Formula::Diamond(_) | Formula::Box(_), true) => vec![ModalClause {
            pos_modals: Multiset::singleton(f.clone()),
            ..Default::default()
        }],
        (Formula::Diamond(_) | Formula::Box(_), false) => vec![ModalClause {
            neg_modals: Multiset::singleton(f.clone()),
            ..Default::default()
        }],
        (Formula::Not(a), pol) => dnf_clauses(a, !pol),
        (Formula::And(a, b), true) => cross(&dnf_clauses(a, true), &dnf_clauses(b, true)),
        (Formula::And(a, b), false) => {
            let mut out = dnf_clauses(a, false);
            out.extend(dnf_clauses(b, false));
            out
        }
        (Formula::Or(a, b), true) => {
            let mut out = dnf_clauses(a, true);
            out.extend(dnf_clauses(b, true));
            out
        }
        (Formula::Or(a, b), false) => cross(&dnf_clauses(a, false), &dnf_clauses(b, false)),
        (Formula::Implies(a, b), true) => {
            let mut out = dnf_clauses(a, false);
            out.extend(dnf_clauses(b, true));
            out
        }
        (Formula::Implies(a, b), false) => cross(&dnf_clauses(a, true), &dnf_clauses(b, false)),
    }
}

/// Disjunctive normal form with modal subformulas as opaque literals.
/// Clauses are deduplicated but not minimized.
pub fn modal_dnf(f: &Formula) -> BTreeSet<ModalClause> {
    dnf_clauses(f, true).into_iter().collect()
}

/// Conjunctive normal form, dual to [`modal_dnf`]: each clause is read as
/// a disjunction. Computed as the De Morgan dual of the DNF of ¬f.
pub fn modal_cnf(f: &Formula) -> BTreeSet<ModalClause> {
    dnf_clauses(f, false)
        .into_iter()
        .map(|c| ModalClause {
            // A DNF clause of ¬f, negated, is a CNF clause of f.
            pos_atoms: c.neg_atoms,
            neg_atoms: c.pos_atoms,
            pos_modals: c.neg_modals,
            neg_modals: c.pos_modals,
        })
        .collect()
}

/// Rebuilds the formula a DNF denotes: the disjunction of its clauses.
pub fn dnf_formula(clauses: &BTreeSet<ModalClause>) -> Formula {
    if clauses.is_empty() {
        return Formula::Bottom;
    }
    Formula::disj_of(clauses.iter().map(ModalClause::as_conjunction).collect())
}

/// Rebuilds the formula a CNF denotes: the conjunction of its clauses.
pub fn cnf_formula(clauses: &BTreeSet<ModalClause>) -> Formula {
    if clauses.is_empty() {
        return Formula::Top;
    }
    Formula::conj_of(clauses.iter().map(ModalClause::as_disjunction).collect())
}

/// True iff `f` is a propositional tautology once maximal modal
/// subformulas are abstracted as fresh letters. This is the check behind
/// the axiomatic system's tautology schema: □p→p is not of this kind,
/// □p∨¬□p is.
pub fn skeleton_tautology(f: &Formula) -> bool {
    // The CNF of the skeleton is tautologous iff every clause contains a
    // complementary pair (the modal literals are independent letters).
    modal_cnf(f).iter().all(|c| {
        c.pos_atoms.keys().any(|a| c.neg_atoms.contains(a))
            || c.pos_modals.keys().any(|m| c.neg_modals.contains(m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn clause(
        pos_atoms: &[&str],
        neg_atoms: &[&str],
        pos_modals: &[&str],
        neg_modals: &[&str],
    ) -> ModalClause {
        ModalClause {
            pos_atoms: pos_atoms.iter().map(|s| s.to_string()).collect(),
            neg_atoms: neg_atoms.iter().map(|s| s.to_string()).collect(),
            pos_modals: pos_modals.iter().map(|s| parse(s).unwrap()).collect(),
            neg_modals: neg_modals.iter().map(|s| parse(s).unwrap()).collect(),
        }
    }

    #[test]
    fn dnf_of_implication() {
        // p → □q becomes ¬p ∨ □q
        let f = parse("p -> []q").unwrap();
        let got = modal_dnf(&f);
        let want: BTreeSet<_> = [clause(&[], &["p"], &[], &[]), clause(&[], &[], &["[]q"], &[])]
            .into_iter()
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn dnf_of_atom_and_negated_conjunction() {
        let got = modal_dnf(&parse("p").unwrap());
        assert_eq!(got, [clause(&["p"], &[], &[], &[])].into_iter().collect());

        let f = parse("~([]r & q)").unwrap();
        let want: BTreeSet<_> = [clause(&[], &[], &[], &["[]r"]), clause(&[], &["q"], &[], &[])]
            .into_iter()
            .collect();
        assert_eq!(modal_dnf(&f), want);
    }

    #[test]
    fn cnf_examples() {
        let f = parse("p & <>q").unwrap();
        let want: BTreeSet<_> = [clause(&["p"], &[], &[], &[]), clause(&[], &[], &["<>q"], &[])]
            .into_iter()
            .collect();
        assert_eq!(modal_cnf(&f), want);

        assert_eq!(
            modal_cnf(&parse("p").unwrap()),
            [clause(&["p"], &[], &[], &[])].into_iter().collect()
        );

        let g = parse("[]p -> q").unwrap();
        let want: BTreeSet<_> = [clause(&["q"], &[], &[], &["[]p"])].into_iter().collect();
        assert_eq!(modal_cnf(&g), want);
    }

    #[test]
    fn clause_shape_is_literal_only() {
        let f = parse("~(p -> <>(q | r)) | ([]p & ~q)").unwrap();
        for c in modal_dnf(&f).iter().chain(modal_cnf(&f).iter()) {
            assert!(c.pos_modals.all(|m| m.is_modal_rooted()));
            assert!(c.neg_modals.all(|m| m.is_modal_rooted()));
        }
    }

    #[test]
    fn skeleton_tautologies() {
        assert!(skeleton_tautology(&parse("[]p | ~[]p").unwrap()));
        assert!(skeleton_tautology(&parse("p -> (q -> p)").unwrap()));
        assert!(!skeleton_tautology(&parse("[]p -> p").unwrap()));
        assert!(skeleton_tautology(&parse("top").unwrap()));
        assert!(!skeleton_tautology(&parse("bot").unwrap()));
    }
}
