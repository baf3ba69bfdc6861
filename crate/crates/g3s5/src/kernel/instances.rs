//! Backward rule-instance generation: every way a rule can have produced
//! a goal sequent, with the premises it requires.

use super::{variant_split, variant_storage, Mode, Principal, RuleId, Variant};
use crate::formula::Formula;
use crate::multiset::Multiset;
use crate::sequent::{Block, BlockKind, ZonedSequent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleId,
    pub principal: Principal,
    pub premises: Vec<ZonedSequent>,
}

/// Outer zones split into their modal part and their atoms; None when a
/// compound non-modal formula blocks the storage rules.
fn split_outer(ms: &Multiset<Formula>) -> Option<(Multiset<Formula>, Multiset<Formula>)> {
    let (modal, rest) = ms.partition(Formula::is_modal);
    if rest.all(Formula::is_atom) {
        Some((modal, rest))
    } else {
        None
    }
}

/// Enumerates every backward-applicable rule instance for `goal`. Each
/// returned instance passes `check_step` under the same variant.
pub fn rule_instances(goal: &ZonedSequent, variant: Variant) -> Vec<RuleInstance> {
    let mut out = Vec::new();

    // Axioms.
    for f in goal.left.keys() {
        if f.is_atom() && goal.right.contains(f) {
            out.push(RuleInstance {
                rule: RuleId::Ax,
                principal: Principal::Left(f.clone()),
                premises: vec![],
            });
        }
    }
    if goal.left.contains(&Formula::Bottom) {
        out.push(RuleInstance {
            rule: RuleId::AxBot,
            principal: Principal::None,
            premises: vec![],
        });
    }

    // Left logical rules.
    for f in goal.left.keys().cloned().collect::<Vec<_>>() {
        let rest = goal.left.without_one(&f).unwrap();
        match &f {
            Formula::Not(a) => {
                let mut p = goal.clone();
                p.left = rest;
                p.right.insert((**a).clone());
                out.push(RuleInstance {
                    rule: RuleId::LNeg,
                    principal: Principal::Left(f.clone()),
                    premises: vec![p],
                });
            }
            Formula::And(a, b) => {
                let mut p = goal.clone();
                p.left = rest;
                p.left.insert((**a).clone());
                p.left.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::LAnd,
                    principal: Principal::Left(f.clone()),
                    premises: vec![p],
                });
            }
            Formula::Or(a, b) => {
                let mut pa = goal.clone();
                pa.left = rest.clone();
                pa.left.insert((**a).clone());
                let mut pb = goal.clone();
                pb.left = rest;
                pb.left.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::LOr,
                    principal: Principal::Left(f.clone()),
                    premises: vec![pa, pb],
                });
            }
            Formula::Implies(a, b) => {
                let mut pa = goal.clone();
                pa.left = rest.clone();
                pa.right.insert((**a).clone());
                let mut pb = goal.clone();
                pb.left = rest;
                pb.left.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::LImp,
                    principal: Principal::Left(f.clone()),
                    premises: vec![pa, pb],
                });
            }
            Formula::Box(a) => {
                let mut p = goal.clone();
                p.left.insert((**a).clone());
                out.push(RuleInstance {
                    rule: RuleId::LBox,
                    principal: Principal::Left(f.clone()),
                    premises: vec![p],
                });
            }
            _ => {}
        }
    }

    // Right logical rules.
    for f in goal.right.keys().cloned().collect::<Vec<_>>() {
        let rest = goal.right.without_one(&f).unwrap();
        match &f {
            Formula::Not(a) => {
                let mut p = goal.clone();
                p.right = rest;
                p.left.insert((**a).clone());
                out.push(RuleInstance {
                    rule: RuleId::RNeg,
                    principal: Principal::Right(f.clone()),
                    premises: vec![p],
                });
            }
            Formula::And(a, b) => {
                let mut pa = goal.clone();
                pa.right = rest.clone();
                pa.right.insert((**a).clone());
                let mut pb = goal.clone();
                pb.right = rest;
                pb.right.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::RAnd,
                    principal: Principal::Right(f.clone()),
                    premises: vec![pa, pb],
                });
            }
            Formula::Or(a, b) => {
                let mut p = goal.clone();
                p.right = rest;
                p.right.insert((**a).clone());
                p.right.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::ROr,
                    principal: Principal::Right(f.clone()),
                    premises: vec![p],
                });
            }
            Formula::Implies(a, b) => {
                let mut p = goal.clone();
                p.right = rest;
                p.left.insert((**a).clone());
                p.right.insert((**b).clone());
                out.push(RuleInstance {
                    rule: RuleId::RImp,
                    principal: Principal::Right(f.clone()),
                    premises: vec![p],
                });
            }
            Formula::Diamond(a) => {
                let mut p = goal.clone();
                p.right.insert((**a).clone());
                out.push(RuleInstance {
                    rule: RuleId::RDia,
                    principal: Principal::Right(f.clone()),
                    premises: vec![p],
                });
            }
            _ => {}
        }
    }

    // L◇: one instance per ◇A occurrence kind on the left. Under the
    // full system the movable outer atoms enter a fresh box block; under
    // the restricted variants the storage formulas rejoin the outer
    // zones.
    for f in goal.left.keys().cloned().collect::<Vec<_>>() {
        if let Formula::Diamond(a) = &f {
            let rest = goal.left.without_one(&f).unwrap();
            if let (Some((m, moved_l)), Some((n, moved_r))) =
                (variant_split(variant, &rest), variant_split(variant, &goal.right))
            {
                let mut p = ZonedSequent::new(m, goal.blocks.clone(), n);
                p.left.insert((**a).clone());
                if variant == Variant::Full {
                    p = p.with_block(Block::new(BlockKind::Box, moved_l, moved_r));
                } else {
                    p.left = p.left.union(&variant_storage(variant, &moved_l, true));
                    p.right = p.right.union(&variant_storage(variant, &moved_r, false));
                }
                out.push(RuleInstance {
                    rule: RuleId::LDia,
                    principal: Principal::Left(f.clone()),
                    premises: vec![p],
                });
            }
        }
    }

    // R□, dual.
    for f in goal.right.keys().cloned().collect::<Vec<_>>() {
        if let Formula::Box(a) = &f {
            let rest = goal.right.without_one(&f).unwrap();
            if let (Some((m, moved_l)), Some((n, moved_r))) =
                (variant_split(variant, &goal.left), variant_split(variant, &rest))
            {
                let mut p = ZonedSequent::new(m, goal.blocks.clone(), n);
                p.right.insert((**a).clone());
                if variant == Variant::Full {
                    p = p.with_block(Block::new(BlockKind::Diamond, moved_l, moved_r));
                } else {
                    p.left = p.left.union(&variant_storage(variant, &moved_l, true));
                    p.right = p.right.union(&variant_storage(variant, &moved_r, false));
                }
                out.push(RuleInstance {
                    rule: RuleId::RBox,
                    principal: Principal::Right(f.clone()),
                    premises: vec![p],
                });
            }
        }
    }

    // Semicolon rules: one instance per block of the right kind, with the
    // full move of the outer atoms into the fresh block.
    for (idx, block) in goal.blocks.iter().enumerate() {
        let (rule, stored_kind) = match block.kind {
            BlockKind::Diamond => (RuleId::LDiaSemi, BlockKind::Box),
            BlockKind::Box => (RuleId::RBoxSemi, BlockKind::Diamond),
        };
        if !block.is_atomic() {
            continue;
        }
        if let (Some((m, moved_l)), Some((n, moved_r))) =
            (split_outer(&goal.left), split_outer(&goal.right))
        {
            let mut rest_blocks = goal.blocks.clone();
            rest_blocks.remove(idx);
            let mut p = ZonedSequent::new(
                m.union(&block.left),
                rest_blocks,
                block.right.union(&n),
            );
            let nb = Block::new(stored_kind, moved_l, moved_r);
            if !nb.is_empty() {
                p = p.with_block(nb);
            }
            out.push(RuleInstance {
                rule,
                principal: Principal::Block(idx),
                premises: vec![p],
            });
        }
    }

    out
}

/// True when `rule_instances` would also be exhaustive for checking: kept
/// for tests pairing generation against `check_step`.
pub(crate) fn instance_checks(goal: &ZonedSequent, inst: &RuleInstance, variant: Variant) -> bool {
    let premise_refs: Vec<&ZonedSequent> = inst.premises.iter().collect();
    super::check_step(
        goal,
        inst.rule,
        &inst.principal,
        &premise_refs,
        variant,
        Mode::Strict,
    )
    .is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::sequent::PlainSequent;

    fn ms(items: &[&str]) -> Multiset<Formula> {
        items.iter().map(|s| parse(s).unwrap()).collect()
    }

    fn goal(ant: &[&str], suc: &[&str]) -> ZonedSequent {
        ZonedSequent::embed(&PlainSequent::new(ms(ant), ms(suc)))
    }

    #[test]
    fn identity_goal_has_axiom_instance() {
        let g = goal(&["p"], &["p"]);
        let insts = rule_instances(&g, Variant::Full);
        assert!(insts
            .iter()
            .any(|i| i.rule == RuleId::Ax && i.premises.is_empty()));
    }

    #[test]
    fn ldia_moves_outer_atoms_into_box_storage() {
        // ◇¬p, □p ⊢  — the worked introduction example's L◇ state.
        let g = goal(&["<>~p", "[]p"], &[]);
        let insts = rule_instances(&g, Variant::Full);
        let ldia = insts
            .iter()
            .find(|i| i.rule == RuleId::LDia && i.principal == Principal::Left(parse("<>~p").unwrap()))
            .expect("L<> instance");
        let p = &ldia.premises[0];
        assert_eq!(p.left, ms(&["~p", "[]p"]));
        assert!(p.right.is_empty());
        // No outer atoms existed, so no block was stored.
        assert!(p.blocks.is_empty());
    }

    #[test]
    fn semicolon_instance_restores_block_atoms() {
        // ; r,p,q ⊢ ◇(p∧q) with one diamond block {r,p,q|}.
        let g = ZonedSequent::new(
            Multiset::new(),
            vec![Block::diamond(ms(&["r", "p", "q"]), Multiset::new())],
            ms(&["<>(p & q)"]),
        );
        let insts = rule_instances(&g, Variant::Full);
        let semi = insts
            .iter()
            .find(|i| i.rule == RuleId::LDiaSemi)
            .expect("L<>; instance");
        let p = &semi.premises[0];
        assert_eq!(p.left, ms(&["r", "p", "q"]));
        assert_eq!(p.right, ms(&["<>(p & q)"]));
        assert!(p.blocks.is_empty());
    }

    #[test]
    fn every_generated_instance_checks() {
        let goals = [
            goal(&["<>~p", "[]p"], &[]),
            goal(&["p & q", "~r"], &["<>p", "[](q | r)"]),
            goal(&["p"], &["p", "q -> p"]),
        ];
        for v in [
            Variant::Full,
            Variant::Variant1,
            Variant::Variant2,
            Variant::Variant3,
            Variant::Variant4,
        ] {
            for g in &goals {
                for inst in rule_instances(g, v) {
                    assert!(
                        instance_checks(g, &inst, v),
                        "instance {:?} of `{}` fails check under {:?}",
                        inst.rule,
                        g,
                        v
                    );
                }
            }
        }
    }

    #[test]
    fn variant_storage_shapes() {
        let g = goal(&["<>r", "p"], &["q"]);
        let prem = |v: Variant| {
            rule_instances(&g, v)
                .into_iter()
                .find(|i| i.rule == RuleId::LDia)
                .map(|i| i.premises[0].clone())
        };
        // Full: one mixed box block {p|q}.
        let full = prem(Variant::Full).unwrap();
        assert_eq!(full.blocks, vec![Block::boxed(ms(&["p"]), ms(&["q"]))]);
        assert_eq!(full.left, ms(&["r"]));
        // Variant1: singleton ◇p and □q storage rejoin the outer zones.
        let v1 = prem(Variant::Variant1).unwrap();
        assert!(v1.blocks.is_empty());
        assert_eq!(v1.left, ms(&["r", "<>p"]));
        assert_eq!(v1.right, ms(&["[]q"]));
        // Variant3: ◇⋀ of the left atoms and □⋁ of the right atoms.
        let v3 = prem(Variant::Variant3).unwrap();
        assert!(v3.blocks.is_empty());
        assert_eq!(v3.left, ms(&["r", "<>p"]));
        assert_eq!(v3.right, ms(&["[]q"]));
    }
}
