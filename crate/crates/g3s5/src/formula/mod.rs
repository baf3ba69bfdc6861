//! S5 formulas: syntax tree, parsing, printing, and modal normal forms.

mod nf;
mod parse;
mod print;

pub use nf::{cnf_formula, dnf_formula, modal_cnf, modal_dnf, skeleton_tautology, ModalClause};
pub use parse::{parse, ParseError};
pub use print::Style;

use serde::{Deserialize, Serialize};
use std::fmt;

/// A formula of modal propositional logic over atoms, constants, the
/// propositional connectives, and the two modal operators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Formula {
    Atom(String),
    Bottom,
    Top,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Diamond(Box<Formula>),
    Box(Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(std::boxed::Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(std::boxed::Box::new(a), std::boxed::Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(std::boxed::Box::new(a), std::boxed::Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(std::boxed::Box::new(a), std::boxed::Box::new(b))
    }

    pub fn dia(f: Formula) -> Formula {
        Formula::Diamond(std::boxed::Box::new(f))
    }

    pub fn boxed(f: Formula) -> Formula {
        Formula::Box(std::boxed::Box::new(f))
    }

    /// ⊤ in the normalized spelling ¬⊥ used by the calculus.
    pub fn top_normalized() -> Formula {
        Formula::not(Formula::Bottom)
    }

    /// True iff the outermost constructor is ◇ or □.
    pub fn is_modal_rooted(&self) -> bool {
        matches!(self, Formula::Diamond(_) | Formula::Box(_))
    }

    /// Modal in the literal-class sense: ◇A, □A, or a negation of such.
    pub fn is_modal(&self) -> bool {
        match self {
            Formula::Diamond(_) | Formula::Box(_) => true,
            Formula::Not(inner) => inner.is_modal_rooted(),
            _ => false,
        }
    }

    /// Atom, ⊥, or ⊤.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(_) | Formula::Bottom | Formula::Top)
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Formula::Atom(name) => Some(name),
            _ => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Atom names occurring in the formula, in order, deduplicated.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(name) => {
                if !out.iter().any(|a| a == name) {
                    out.push(name.clone());
                }
            }
            Formula::Bottom | Formula::Top => {}
            Formula::Not(a) | Formula::Diamond(a) | Formula::Box(a) => a.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of ◇ and □ occurrences; drives the small-model world bound.
    pub fn modal_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 0,
            Formula::Not(a) => a.modal_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.modal_count() + b.modal_count()
            }
            Formula::Diamond(a) | Formula::Box(a) => 1 + a.modal_count(),
        }
    }

    /// Nesting depth of modal operators.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 0,
            Formula::Not(a) => a.modal_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.modal_depth().max(b.modal_depth())
            }
            Formula::Diamond(a) | Formula::Box(a) => 1 + a.modal_depth(),
        }
    }

    /// Connective count, used as a complexity measure in inductions.
    pub fn complexity(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 0,
            Formula::Not(a) | Formula::Diamond(a) | Formula::Box(a) => 1 + a.complexity(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.complexity() + b.complexity()
            }
        }
    }

    /// Total node count.
    pub fn size(&self) -> usize {
        self.complexity() + self.leaf_count()
    }

    fn leaf_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom | Formula::Top => 1,
            Formula::Not(a) | Formula::Diamond(a) | Formula::Box(a) => a.leaf_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.leaf_count() + b.leaf_count()
            }
        }
    }

    /// Right-nested conjunction of a nonempty list.
    pub fn conj_of(mut parts: Vec<Formula>) -> Formula {
        assert!(!parts.is_empty(), "conjunction of an empty list");
        let last = parts.pop().unwrap();
        parts
            .into_iter()
            .rev()
            .fold(last, |acc, f| Formula::and(f, acc))
    }

    /// Right-nested disjunction of a nonempty list.
    pub fn disj_of(mut parts: Vec<Formula>) -> Formula {
        assert!(!parts.is_empty(), "disjunction of an empty list");
        let last = parts.pop().unwrap();
        parts
            .into_iter()
            .rev()
            .fold(last, |acc, f| Formula::or(f, acc))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print::render(self, Style::Unicode))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", print::render(self, Style::Ascii))
    }
}

pub fn render(f: &Formula, style: Style) -> String {
    print::render(f, style)
}
