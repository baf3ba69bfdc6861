//! Backward proof search with invertible-first ordering, repeated-state
//! pruning, and a global depth bound.
//!
//! Under the full rule set the propositional rules together with L□ and
//! R◇ are invertible, so they are tried before the storage branch
//! points. Termination comes from the depth bound; states repeating
//! modulo multiset-to-set collapse are pruned through a failure cache
//! keyed by collapsed state and remaining depth, which also stops the
//! search from re-exploring shared subgoals across branches. Under the
//! restricted variants invertibility fails (that failure is the point of
//! the variants), so their searches use plain enumeration order.

use crate::formula::Formula;
use crate::kernel::{rule_instances, Derivation, Principal, RuleId, Variant};
use crate::kripke;
use crate::sequent::{BlockKind, PlainSequent, ZonedSequent};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_DEPTH_BOUND: usize = 24;

/// Environment variable consulted by the CLI for the default bound.
pub const DEPTH_BOUND_ENV: &str = "G3S5_DEPTH_BOUND";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub variant: Variant,
    pub depth_bound: usize,
    /// Try invertible rules first.
    pub saturation: bool,
    pub trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            variant: Variant::Full,
            depth_bound: DEFAULT_DEPTH_BOUND,
            saturation: true,
            trace: false,
        }
    }
}

impl SearchConfig {
    pub fn with_variant(variant: Variant) -> SearchConfig {
        SearchConfig {
            variant,
            saturation: variant == Variant::Full,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    Proved(Box<Derivation>),
    NoProofWithinBound(usize),
}

impl SearchResult {
    pub fn is_proved(&self) -> bool {
        matches!(self, SearchResult::Proved(_))
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            SearchResult::Proved(d) => Some(d),
            SearchResult::NoProofWithinBound(_) => None,
        }
    }
}

/// A sequent with multiplicities collapsed, the loop-check granularity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct CollapsedState {
    left: BTreeSet<Formula>,
    right: BTreeSet<Formula>,
    blocks: BTreeSet<(BlockKind, BTreeSet<Formula>, BTreeSet<Formula>)>,
}

fn collapse(seq: &ZonedSequent) -> CollapsedState {
    CollapsedState {
        left: seq.left.keys().cloned().collect(),
        right: seq.right.keys().cloned().collect(),
        blocks: seq
            .blocks
            .iter()
            .map(|b| {
                (
                    b.kind,
                    b.left.keys().cloned().collect(),
                    b.right.keys().cloned().collect(),
                )
            })
            .collect(),
    }
}

struct Searcher {
    cfg: SearchConfig,
    trace_lines: Vec<String>,
    /// Collapsed states known unprovable, with the largest remaining
    /// depth at which they were exhausted. Searching shallower than a
    /// recorded failure cannot succeed.
    failed: BTreeMap<CollapsedState, usize>,
    /// Proofs already found, by exact sequent.
    proved: BTreeMap<ZonedSequent, Derivation>,
}

impl Searcher {
    fn trace(&mut self, depth: usize, rule: RuleId, principal: &Principal, seq: &ZonedSequent) {
        if self.cfg.trace {
            self.trace_lines
                .push(format!("{:>3}  {:<5} {}  {}", depth, rule.name(), principal, seq));
        }
    }

    fn search(&mut self, goal: &ZonedSequent, depth: usize) -> Option<Derivation> {
        if depth >= self.cfg.depth_bound {
            return None;
        }
        let remaining = self.cfg.depth_bound - depth;
        let state = collapse(goal);
        if let Some(&r) = self.failed.get(&state) {
            if r >= remaining {
                return None;
            }
        }
        if let Some(d) = self.proved.get(goal) {
            return Some(d.clone());
        }

        let mut instances = rule_instances(goal, self.cfg.variant);

        // Axioms close immediately.
        if let Some(inst) = instances.iter().find(|i| i.rule.is_axiom()) {
            self.trace(depth, inst.rule, &inst.principal, goal);
            return Some(Derivation::infer(
                goal.clone(),
                inst.rule,
                inst.principal.clone(),
                vec![],
            ));
        }

        if self.cfg.saturation {
            // Stable: keeps the leftmost-principal enumeration order
            // inside each band.
            instances.sort_by_key(|i| if i.rule.is_storage() { 1 } else { 0 });
        }

        let mut found = None;
        'instances: for inst in &instances {
            // L□/R◇ retain their principal; re-adding a body that is
            // already present set-wise gains nothing.
            match (&inst.rule, &inst.principal) {
                (RuleId::LBox, Principal::Left(Formula::Box(a))) => {
                    if goal.left.contains(a) {
                        continue;
                    }
                }
                (RuleId::RDia, Principal::Right(Formula::Diamond(a))) => {
                    if goal.right.contains(a) {
                        continue;
                    }
                }
                _ => {}
            }
            self.trace(depth, inst.rule, &inst.principal, goal);
            let mut premises = Vec::with_capacity(inst.premises.len());
            for p in &inst.premises {
                match self.search(p, depth + 1) {
                    Some(d) => premises.push(d),
                    None => continue 'instances,
                }
            }
            found = Some(Derivation::infer(
                goal.clone(),
                inst.rule,
                inst.principal.clone(),
                premises,
            ));
            break;
        }

        match found {
            Some(d) => {
                self.proved.insert(goal.clone(), d.clone());
                Some(d)
            }
            None => {
                let entry = self.failed.entry(state).or_insert(0);
                *entry = (*entry).max(remaining);
                None
            }
        }
    }
}

/// Backward proof search for a plain-sequent goal. Deterministic: the
/// same goal and configuration always yield the same verdict and, when
/// proved, the same derivation.
pub fn prove(goal: &PlainSequent, cfg: &SearchConfig) -> SearchResult {
    let (result, _trace) = prove_traced(goal, cfg);
    result
}

pub fn prove_traced(goal: &PlainSequent, cfg: &SearchConfig) -> (SearchResult, Vec<String>) {
    let zoned = ZonedSequent::embed(goal);
    let mut searcher = Searcher {
        cfg: cfg.clone(),
        trace_lines: Vec::new(),
        failed: BTreeMap::new(),
        proved: BTreeMap::new(),
    };
    let result = match searcher.search(&zoned, 0) {
        Some(d) => SearchResult::Proved(Box::new(d)),
        None => SearchResult::NoProofWithinBound(cfg.depth_bound),
    };
    (result, searcher.trace_lines)
}

pub fn prove_formula(goal: &Formula, cfg: &SearchConfig) -> SearchResult {
    prove(
        &PlainSequent::new(
            crate::multiset::Multiset::new(),
            crate::multiset::Multiset::singleton(goal.clone()),
        ),
        cfg,
    )
}

/// One row of the restricted-variant reproduction matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantOutcome {
    pub variant: Variant,
    pub goal_name: String,
    pub goal: String,
    pub proved: bool,
    pub depth_bound: usize,
}

/// The named goals of the variant matrix: (a), (b), (c), the two-sided
/// sequent the stronger variants still miss, and its one-formula form.
pub fn variant_goals() -> Vec<(String, PlainSequent)> {
    let parse = |s: &str| crate::formula::parse(s).unwrap();
    let embed = |f: Formula| {
        PlainSequent::new(
            crate::multiset::Multiset::new(),
            crate::multiset::Multiset::singleton(f),
        )
    };
    vec![
        ("(a)".to_string(), embed(parse("p -> (q -> []<>(p & q))"))),
        ("(b)".to_string(), embed(parse("(p & q) -> []<>(p & q)"))),
        ("(c)".to_string(), embed(parse("<>[](p | q) -> (p | q)"))),
        (
            "(d)".to_string(),
            PlainSequent::new(
                [parse("<>[](~p | q)"), parse("p")].into_iter().collect(),
                crate::multiset::Multiset::singleton(parse("q")),
            ),
        ),
        ("(e)".to_string(), embed(parse("(<>[](~p | q) & p) -> q"))),
    ]
}

/// Runs every named goal under every rule-set variant and the full
/// system, at the default depth bound.
pub fn prove_variant_suite() -> Vec<VariantOutcome> {
    let mut out = Vec::new();
    for variant in [
        Variant::Variant1,
        Variant::Variant2,
        Variant::Variant3,
        Variant::Variant4,
        Variant::Full,
    ] {
        let cfg = SearchConfig::with_variant(variant);
        for (name, goal) in variant_goals() {
            let res = prove(&goal, &cfg);
            out.push(VariantOutcome {
                variant,
                goal_name: name,
                goal: format!("{}", goal),
                proved: res.is_proved(),
                depth_bound: cfg.depth_bound,
            });
        }
    }
    out
}

/// Oracle-validity of a zoned sequent's expansion.
pub fn expansion_valid(seq: &ZonedSequent) -> bool {
    let plain = seq.expand().expect("well-formed sequent");
    kripke::sequent_valid(plain.antecedent.iter(), plain.succedent.iter())
        .map(|v| v.is_valid())
        .unwrap_or(false)
}
