//! The inference rules of the zoned sequent calculus: derivation trees,
//! step checking, and backward rule-instance generation.
//!
//! Step checking comes in two modes. `Strict` is the calculus proper: the
//! four storage rules (L◇, R□ and their semicolon versions) move atoms
//! only, and move all of them. `General` additionally accepts the
//! admissible general forms of those rules, in which arbitrary formulas
//! travel between the outer zones and blocks; the structural
//! transformation suite produces such steps and they are sound, but
//! backward search never generates them.

pub mod instances;
pub mod render;

pub use instances::{rule_instances, RuleInstance};

use crate::formula::Formula;
use crate::multiset::Multiset;
use crate::sequent::{Block, BlockKind, ZonedSequent};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    Ax,
    AxBot,
    LNeg,
    RNeg,
    LAnd,
    RAnd,
    LOr,
    ROr,
    LImp,
    RImp,
    LDia,
    RDia,
    LBox,
    RBox,
    LDiaSemi,
    RBoxSemi,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ax => "Ax",
            RuleId::AxBot => "Ax⊥",
            RuleId::LNeg => "L~",
            RuleId::RNeg => "R~",
            RuleId::LAnd => "L&",
            RuleId::RAnd => "R&",
            RuleId::LOr => "L|",
            RuleId::ROr => "R|",
            RuleId::LImp => "L->",
            RuleId::RImp => "R->",
            RuleId::LDia => "L<>",
            RuleId::RDia => "R<>",
            RuleId::LBox => "L[]",
            RuleId::RBox => "R[]",
            RuleId::LDiaSemi => "L<>;",
            RuleId::RBoxSemi => "R[];",
        }
    }

    pub fn is_axiom(self) -> bool {
        matches!(self, RuleId::Ax | RuleId::AxBot)
    }

    /// The rules whose premises may rearrange blocks.
    pub fn is_storage(self) -> bool {
        matches!(
            self,
            RuleId::LDia | RuleId::RBox | RuleId::LDiaSemi | RuleId::RBoxSemi
        )
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The restricted storage-rule sets of the completeness counterexamples,
/// plus the full system. Variants alter only L◇ and R□.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[default]
    Full,
    /// Premise stores one ◇p per left atom and one □q per right atom.
    Variant1,
    /// As Variant1 but arbitrary formulas travel.
    Variant2,
    /// Premise stores ◇⋀P and □⋁Q, no polarity mixing.
    Variant3,
    /// As Variant3 but arbitrary formulas travel.
    Variant4,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Full => write!(f, "full"),
            Variant::Variant1 => write!(f, "variant1"),
            Variant::Variant2 => write!(f, "variant2"),
            Variant::Variant3 => write!(f, "variant3"),
            Variant::Variant4 => write!(f, "variant4"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Strict,
    General,
}

/// What a rule instance acts on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Principal {
    /// A formula occurrence in the left outer zone.
    Left(Formula),
    /// A formula occurrence in the right outer zone.
    Right(Formula),
    /// A block, by index into the conclusion's sorted block list.
    Block(usize),
    None,
}

impl fmt::Display for Principal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Principal::Left(x) => write!(f, "left {:?}", x),
            Principal::Right(x) => write!(f, "right {:?}", x),
            Principal::Block(i) => write!(f, "block #{}", i),
            Principal::None => write!(f, "-"),
        }
    }
}

/// A rule-labelled tree of zoned sequents. Axioms are zero-premise rule
/// applications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub conclusion: ZonedSequent,
    pub rule: RuleId,
    pub principal: Principal,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn axiom(conclusion: ZonedSequent, principal: Principal) -> Derivation {
        Derivation {
            conclusion,
            rule: RuleId::Ax,
            principal,
            premises: Vec::new(),
        }
    }

    pub fn axiom_bot(conclusion: ZonedSequent) -> Derivation {
        Derivation {
            conclusion,
            rule: RuleId::AxBot,
            principal: Principal::None,
            premises: Vec::new(),
        }
    }

    pub fn infer(
        conclusion: ZonedSequent,
        rule: RuleId,
        principal: Principal,
        premises: Vec<Derivation>,
    ) -> Derivation {
        Derivation {
            conclusion,
            rule,
            principal,
            premises,
        }
    }

    /// Leaves have height 1.
    pub fn height(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::height)
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(Derivation::node_count).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    PremiseCount,
    NotAxiom,
    PrincipalMismatch,
    WrongZone,
    BlockArithmetic,
    NonModalInContext,
    NonAtomicInMiddle,
    MalformedSequent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, detail: impl Into<String>) -> Violation {
        Violation {
            kind,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

/// A violation located by its path of premise indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocatedViolation {
    pub path: Vec<usize>,
    pub violation: Violation,
}

impl fmt::Display for LocatedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ")?;
        if self.path.is_empty() {
            write!(f, "root")?;
        } else {
            write!(
                f,
                "root.{}",
                self.path
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            )?;
        }
        write!(f, ": {}", self.violation)
    }
}

fn expect_premises(n: usize, premises: &[&ZonedSequent]) -> Result<(), Violation> {
    if premises.len() == n {
        Ok(())
    } else {
        Err(Violation::new(
            ViolationKind::PremiseCount,
            format!("expected {} premise(s), found {}", n, premises.len()),
        ))
    }
}

fn take_left(seq: &ZonedSequent, f: &Formula) -> Result<Multiset<Formula>, Violation> {
    seq.left.without_one(f).ok_or_else(|| {
        Violation::new(
            ViolationKind::PrincipalMismatch,
            format!("principal {:?} not in left outer zone", f),
        )
    })
}

fn take_right(seq: &ZonedSequent, f: &Formula) -> Result<Multiset<Formula>, Violation> {
    seq.right.without_one(f).ok_or_else(|| {
        Violation::new(
            ViolationKind::PrincipalMismatch,
            format!("principal {:?} not in right outer zone", f),
        )
    })
}

fn same_sequent(expected: &ZonedSequent, got: &ZonedSequent) -> Result<(), Violation> {
    if expected == got {
        Ok(())
    } else {
        Err(Violation::new(
            ViolationKind::WrongZone,
            format!("premise should be `{}`, found `{}`", expected, got),
        ))
    }
}

fn modal_context(ms: &Multiset<Formula>, side: &str) -> Result<(), Violation> {
    match ms.keys().find(|f| !f.is_modal()) {
        None => Ok(()),
        Some(f) => Err(Violation::new(
            ViolationKind::NonModalInContext,
            format!("non-modal formula {:?} kept in {} zone", f, side),
        )),
    }
}

/// The one extra block a storage-rule premise may have relative to the
/// persisting blocks.
fn extra_blocks(
    premise: &ZonedSequent,
    persisting: &Multiset<Block>,
) -> Result<Vec<Block>, Violation> {
    let prem = premise.blocks_multiset();
    if !persisting.is_submultiset_of(&prem) {
        return Err(Violation::new(
            ViolationKind::BlockArithmetic,
            "a block of the conclusion does not persist into the premise",
        ));
    }
    Ok(prem.difference(persisting).iter().cloned().collect())
}

fn one_extra_of_kind(
    extras: Vec<Block>,
    kind: BlockKind,
) -> Result<(Multiset<Formula>, Multiset<Formula>), Violation> {
    match extras.len() {
        0 => Ok((Multiset::new(), Multiset::new())),
        1 => {
            let b = &extras[0];
            if b.kind != kind {
                return Err(Violation::new(
                    ViolationKind::BlockArithmetic,
                    format!("stored block has kind {:?}, expected {:?}", b.kind, kind),
                ));
            }
            Ok((b.left.clone(), b.right.clone()))
        }
        n => Err(Violation::new(
            ViolationKind::BlockArithmetic,
            format!("premise adds {} blocks, at most one allowed", n),
        )),
    }
}

fn atoms_only(ms: &Multiset<Formula>, what: &str) -> Result<(), Violation> {
    match ms.keys().find(|f| !f.is_atom()) {
        None => Ok(()),
        Some(f) => Err(Violation::new(
            ViolationKind::NonAtomicInMiddle,
            format!("non-atomic formula {:?} in {}", f, what),
        )),
    }
}

/// How a restricted variant splits an outer zone into the kept modal
/// part and the moved part. None when a formula can neither stay nor
/// move (a compound non-modal under the atoms-only variants).
pub(crate) fn variant_split(
    variant: Variant,
    ms: &Multiset<Formula>,
) -> Option<(Multiset<Formula>, Multiset<Formula>)> {
    let (modal, rest) = ms.partition(Formula::is_modal);
    match variant {
        Variant::Full | Variant::Variant1 | Variant::Variant3 => {
            if rest.all(Formula::is_atom) {
                Some((modal, rest))
            } else {
                None
            }
        }
        Variant::Variant2 | Variant::Variant4 => Some((modal, rest)),
    }
}

/// The storage formulas a restricted variant puts back into the outer
/// zones: one ◇f/□f per moved formula for (1)-(2), ◇⋀/□⋁ of all moved
/// formulas for (3)-(4).
pub(crate) fn variant_storage(
    variant: Variant,
    moved: &Multiset<Formula>,
    diamond_side: bool,
) -> Multiset<Formula> {
    let wrap = |f: Formula| {
        if diamond_side {
            Formula::dia(f)
        } else {
            Formula::boxed(f)
        }
    };
    match variant {
        Variant::Full => unreachable!("full system stores blocks, not formulas"),
        Variant::Variant1 | Variant::Variant2 => moved.iter().cloned().map(wrap).collect(),
        Variant::Variant3 | Variant::Variant4 => {
            if moved.is_empty() {
                Multiset::new()
            } else {
                // The schema takes an n-ary ⋀/⋁ over the moved multiset;
                // flattening nested spines keeps the reading canonical,
                // so re-stored material does not pile up fresh brackets.
                let mut parts: Vec<Formula> = Vec::new();
                for f in moved.iter() {
                    if diamond_side {
                        flatten_conj(f, &mut parts);
                    } else {
                        flatten_disj(f, &mut parts);
                    }
                }
                parts.sort();
                parts.dedup();
                let body = if diamond_side {
                    Formula::conj_of(parts)
                } else {
                    Formula::disj_of(parts)
                };
                Multiset::singleton(wrap(body))
            }
        }
    }
}

fn flatten_conj(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::And(a, b) => {
            flatten_conj(a, out);
            flatten_conj(b, out);
        }
        other => out.push(other.clone()),
    }
}

fn flatten_disj(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::Or(a, b) => {
            flatten_disj(a, out);
            flatten_disj(b, out);
        }
        other => out.push(other.clone()),
    }
}

/// Checks the storage shape of an L◇/R□ premise under the full system
/// and returns the moved multisets (left zone, right zone).
fn storage_shape(
    extras: Vec<Block>,
    mode: Mode,
    own_kind: BlockKind,
) -> Result<(Multiset<Formula>, Multiset<Formula>), Violation> {
    let (l, r) = one_extra_of_kind(extras, own_kind)?;
    if mode == Mode::Strict {
        atoms_only(&l, "stored block")?;
        atoms_only(&r, "stored block")?;
    }
    Ok((l, r))
}

/// Verifies that `(conclusion, rule, principal, premises)` is an instance
/// of the named rule, including all zone and block bookkeeping.
pub fn check_step(
    conclusion: &ZonedSequent,
    rule: RuleId,
    principal: &Principal,
    premises: &[&ZonedSequent],
    variant: Variant,
    mode: Mode,
) -> Result<(), Violation> {
    conclusion
        .validate()
        .map_err(|e| Violation::new(ViolationKind::MalformedSequent, e.to_string()))?;
    for p in premises {
        p.validate()
            .map_err(|e| Violation::new(ViolationKind::MalformedSequent, e.to_string()))?;
    }
    match rule {
        RuleId::Ax => {
            expect_premises(0, premises)?;
            let witness = match principal {
                Principal::Left(f @ Formula::Atom(_)) => {
                    conclusion.left.contains(f) && conclusion.right.contains(f)
                }
                Principal::None => conclusion
                    .left
                    .keys()
                    .any(|f| f.is_atom() && conclusion.right.contains(f)),
                _ => false,
            };
            if witness {
                Ok(())
            } else {
                Err(Violation::new(
                    ViolationKind::NotAxiom,
                    "no atom occurs in both outer zones",
                ))
            }
        }
        RuleId::AxBot => {
            expect_premises(0, premises)?;
            if conclusion.left.contains(&Formula::Bottom) {
                Ok(())
            } else {
                Err(Violation::new(
                    ViolationKind::NotAxiom,
                    "⊥ not in the left outer zone",
                ))
            }
        }
        RuleId::LNeg => {
            expect_premises(1, premises)?;
            let f = principal_left(principal)?;
            let inner = match f {
                Formula::Not(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "¬A")),
            };
            let rest = take_left(conclusion, f)?;
            let mut exp = conclusion.clone();
            exp.left = rest;
            exp.right.insert(inner);
            same_sequent(&exp, premises[0])
        }
        RuleId::RNeg => {
            expect_premises(1, premises)?;
            let f = principal_right(principal)?;
            let inner = match f {
                Formula::Not(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "¬A")),
            };
            let rest = take_right(conclusion, f)?;
            let mut exp = conclusion.clone();
            exp.right = rest;
            exp.left.insert(inner);
            same_sequent(&exp, premises[0])
        }
        RuleId::LAnd => {
            expect_premises(1, premises)?;
            let f = principal_left(principal)?;
            let (a, b) = match f {
                Formula::And(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A∧B")),
            };
            let mut exp = conclusion.clone();
            exp.left = take_left(conclusion, f)?;
            exp.left.insert(a);
            exp.left.insert(b);
            same_sequent(&exp, premises[0])
        }
        RuleId::ROr => {
            expect_premises(1, premises)?;
            let f = principal_right(principal)?;
            let (a, b) = match f {
                Formula::Or(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A∨B")),
            };
            let mut exp = conclusion.clone();
            exp.right = take_right(conclusion, f)?;
            exp.right.insert(a);
            exp.right.insert(b);
            same_sequent(&exp, premises[0])
        }
        RuleId::RAnd => {
            expect_premises(2, premises)?;
            let f = principal_right(principal)?;
            let (a, b) = match f {
                Formula::And(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A∧B")),
            };
            let rest = take_right(conclusion, f)?;
            let mut exp_a = conclusion.clone();
            exp_a.right = rest.clone();
            exp_a.right.insert(a);
            let mut exp_b = conclusion.clone();
            exp_b.right = rest;
            exp_b.right.insert(b);
            same_sequent(&exp_a, premises[0])?;
            same_sequent(&exp_b, premises[1])
        }
        RuleId::LOr => {
            expect_premises(2, premises)?;
            let f = principal_left(principal)?;
            let (a, b) = match f {
                Formula::Or(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A∨B")),
            };
            let rest = take_left(conclusion, f)?;
            let mut exp_a = conclusion.clone();
            exp_a.left = rest.clone();
            exp_a.left.insert(a);
            let mut exp_b = conclusion.clone();
            exp_b.left = rest;
            exp_b.left.insert(b);
            same_sequent(&exp_a, premises[0])?;
            same_sequent(&exp_b, premises[1])
        }
        RuleId::LImp => {
            expect_premises(2, premises)?;
            let f = principal_left(principal)?;
            let (a, b) = match f {
                Formula::Implies(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A→B")),
            };
            let rest = take_left(conclusion, f)?;
            let mut exp_a = conclusion.clone();
            exp_a.left = rest.clone();
            exp_a.right.insert(a);
            let mut exp_b = conclusion.clone();
            exp_b.left = rest;
            exp_b.left.insert(b);
            same_sequent(&exp_a, premises[0])?;
            same_sequent(&exp_b, premises[1])
        }
        RuleId::RImp => {
            expect_premises(1, premises)?;
            let f = principal_right(principal)?;
            let (a, b) = match f {
                Formula::Implies(a, b) => ((**a).clone(), (**b).clone()),
                _ => return Err(principal_shape(f, "A→B")),
            };
            let mut exp = conclusion.clone();
            exp.right = take_right(conclusion, f)?;
            exp.left.insert(a);
            exp.right.insert(b);
            same_sequent(&exp, premises[0])
        }
        RuleId::LBox => {
            expect_premises(1, premises)?;
            let f = principal_left(principal)?;
            let a = match f {
                Formula::Box(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "□A")),
            };
            take_left(conclusion, f)?;
            // □A is retained: Γ, A, □A ⊢ Δ.
            let mut exp = conclusion.clone();
            exp.left.insert(a);
            same_sequent(&exp, premises[0])
        }
        RuleId::RDia => {
            expect_premises(1, premises)?;
            let f = principal_right(principal)?;
            let a = match f {
                Formula::Diamond(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "◇A")),
            };
            take_right(conclusion, f)?;
            // ◇A is retained: Γ ⊢ Δ, ◇A, A.
            let mut exp = conclusion.clone();
            exp.right.insert(a);
            same_sequent(&exp, premises[0])
        }
        RuleId::LDia => {
            expect_premises(1, premises)?;
            let f = principal_left(principal)?;
            let a = match f {
                Formula::Diamond(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "◇A")),
            };
            let rest_left = take_left(conclusion, f)?;
            let premise = premises[0];
            if variant != Variant::Full {
                let (m, moved_l) = variant_split(variant, &rest_left).ok_or_else(|| {
                    Violation::new(
                        ViolationKind::NonAtomicInMiddle,
                        "this variant moves atoms only",
                    )
                })?;
                let (n, moved_r) = variant_split(variant, &conclusion.right).ok_or_else(|| {
                    Violation::new(
                        ViolationKind::NonAtomicInMiddle,
                        "this variant moves atoms only",
                    )
                })?;
                let mut exp = conclusion.clone();
                exp.left = m
                    .union(&variant_storage(variant, &moved_l, true));
                exp.left.insert(a);
                exp.right = variant_storage(variant, &moved_r, false).union(&n);
                return same_sequent(&exp, premise);
            }
            let extras = extra_blocks(premise, &conclusion.blocks_multiset())?;
            let (moved_l, moved_r) = storage_shape(extras, mode, BlockKind::Box)?;
            check_move(&rest_left, &conclusion.right, &moved_l, &moved_r)?;
            let m = rest_left.difference(&moved_l);
            let n = conclusion.right.difference(&moved_r);
            let mut exp_left = m;
            exp_left.insert(a);
            if premise.left != exp_left || premise.right != n {
                return Err(Violation::new(
                    ViolationKind::WrongZone,
                    format!(
                        "L<> premise outer zones should be `{:?} |- {:?}`, found `{:?} |- {:?}`",
                        exp_left, n, premise.left, premise.right
                    ),
                ));
            }
            Ok(())
        }
        RuleId::RBox => {
            expect_premises(1, premises)?;
            let f = principal_right(principal)?;
            let a = match f {
                Formula::Box(a) => (**a).clone(),
                _ => return Err(principal_shape(f, "□A")),
            };
            let rest_right = take_right(conclusion, f)?;
            let premise = premises[0];
            if variant != Variant::Full {
                let (m, moved_l) = variant_split(variant, &conclusion.left).ok_or_else(|| {
                    Violation::new(
                        ViolationKind::NonAtomicInMiddle,
                        "this variant moves atoms only",
                    )
                })?;
                let (n, moved_r) = variant_split(variant, &rest_right).ok_or_else(|| {
                    Violation::new(
                        ViolationKind::NonAtomicInMiddle,
                        "this variant moves atoms only",
                    )
                })?;
                let mut exp = conclusion.clone();
                exp.left = m.union(&variant_storage(variant, &moved_l, true));
                exp.right = variant_storage(variant, &moved_r, false).union(&n);
                exp.right.insert(a);
                return same_sequent(&exp, premise);
            }
            let extras = extra_blocks(premise, &conclusion.blocks_multiset())?;
            let (moved_l, moved_r) = storage_shape(extras, mode, BlockKind::Diamond)?;
            check_move(&conclusion.left, &rest_right, &moved_l, &moved_r)?;
            let m = conclusion.left.difference(&moved_l);
            let n = rest_right.difference(&moved_r);
            let mut exp_right = n;
            exp_right.insert(a);
            if premise.left != m || premise.right != exp_right {
                return Err(Violation::new(
                    ViolationKind::WrongZone,
                    format!(
                        "R[] premise outer zones should be `{:?} |- {:?}`, found `{:?} |- {:?}`",
                        m, exp_right, premise.left, premise.right
                    ),
                ));
            }
            Ok(())
        }
        RuleId::LDiaSemi | RuleId::RBoxSemi => {
            expect_premises(1, premises)?;
            let idx = match principal {
                Principal::Block(i) => *i,
                _ => {
                    return Err(Violation::new(
                        ViolationKind::PrincipalMismatch,
                        "semicolon rules take a block principal",
                    ))
                }
            };
            let block = conclusion.blocks.get(idx).ok_or_else(|| {
                Violation::new(
                    ViolationKind::PrincipalMismatch,
                    format!("no block #{} in conclusion", idx),
                )
            })?;
            let (want_kind, stored_kind) = match rule {
                RuleId::LDiaSemi => (BlockKind::Diamond, BlockKind::Box),
                _ => (BlockKind::Box, BlockKind::Diamond),
            };
            if block.kind != want_kind {
                return Err(Violation::new(
                    ViolationKind::PrincipalMismatch,
                    format!("principal block has kind {:?}, rule wants {:?}", block.kind, want_kind),
                ));
            }
            if mode == Mode::Strict && !block.is_atomic() {
                return Err(Violation::new(
                    ViolationKind::NonAtomicInMiddle,
                    "principal block contains a non-atomic formula",
                ));
            }
            let mut persisting = conclusion.blocks_multiset();
            persisting.remove_one(block);
            let premise = premises[0];
            let extras = extra_blocks(premise, &persisting)?;
            let (moved_l, moved_r) = one_extra_of_kind(extras, stored_kind)?;
            if mode == Mode::Strict {
                atoms_only(&moved_l, "stored block")?;
                atoms_only(&moved_r, "stored block")?;
            }
            check_move(&conclusion.left, &conclusion.right, &moved_l, &moved_r)?;
            let m = conclusion.left.difference(&moved_l);
            let n = conclusion.right.difference(&moved_r);
            let exp_left = m.union(&block.left);
            let exp_right = block.right.union(&n);
            if premise.left != exp_left || premise.right != exp_right {
                return Err(Violation::new(
                    ViolationKind::WrongZone,
                    format!(
                        "semicolon premise outer zones should be `{:?} |- {:?}`, found `{:?} |- {:?}`",
                        exp_left, exp_right, premise.left, premise.right
                    ),
                ));
            }
            Ok(())
        }
    }
}

/// Moved parts must come from the outer zones, and whatever stays must
/// be modal. Since atoms are not modal, nothing atomic may stay behind:
/// the full move of the outer atoms is forced.
fn check_move(
    avail_left: &Multiset<Formula>,
    avail_right: &Multiset<Formula>,
    moved_l: &Multiset<Formula>,
    moved_r: &Multiset<Formula>,
) -> Result<(), Violation> {
    if !moved_l.is_submultiset_of(avail_left) || !moved_r.is_submultiset_of(avail_right) {
        return Err(Violation::new(
            ViolationKind::BlockArithmetic,
            "stored block content does not come from the outer zones",
        ));
    }
    modal_context(&avail_left.difference(moved_l), "left context")?;
    modal_context(&avail_right.difference(moved_r), "right context")
}

fn principal_left<'a>(p: &'a Principal) -> Result<&'a Formula, Violation> {
    match p {
        Principal::Left(f) => Ok(f),
        other => Err(Violation::new(
            ViolationKind::PrincipalMismatch,
            format!("expected a left principal, got {}", other),
        )),
    }
}

fn principal_right<'a>(p: &'a Principal) -> Result<&'a Formula, Violation> {
    match p {
        Principal::Right(f) => Ok(f),
        other => Err(Violation::new(
            ViolationKind::PrincipalMismatch,
            format!("expected a right principal, got {}", other),
        )),
    }
}

fn principal_shape(f: &Formula, want: &str) -> Violation {
    Violation::new(
        ViolationKind::PrincipalMismatch,
        format!("principal {:?} does not have shape {}", f, want),
    )
}

/// Checks every node of a derivation; reports the first violation with
/// its path from the root.
pub fn check_derivation(d: &Derivation, variant: Variant, mode: Mode) -> Result<(), LocatedViolation> {
    let mut path = Vec::new();
    check_node(d, variant, mode, &mut path)
}

fn check_node(
    d: &Derivation,
    variant: Variant,
    mode: Mode,
    path: &mut Vec<usize>,
) -> Result<(), LocatedViolation> {
    let premise_seqs: Vec<&ZonedSequent> = d.premises.iter().map(|p| &p.conclusion).collect();
    check_step(
        &d.conclusion,
        d.rule,
        &d.principal,
        &premise_seqs,
        variant,
        mode,
    )
    .map_err(|violation| LocatedViolation {
        path: path.clone(),
        violation,
    })?;
    for (i, premise) in d.premises.iter().enumerate() {
        path.push(i);
        check_node(premise, variant, mode, path)?;
        path.pop();
    }
    Ok(())
}

/// Strict check under the full rule set: the headline checker.
pub fn check(d: &Derivation) -> Result<(), LocatedViolation> {
    check_derivation(d, Variant::Full, Mode::Strict)
}

/// Check accepting the admissible general storage-rule forms.
pub fn check_general(d: &Derivation) -> Result<(), LocatedViolation> {
    check_derivation(d, Variant::Full, Mode::General)
}
