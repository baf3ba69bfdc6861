//! Finite Kripke models for S5 and a brute-force validity decision
//! procedure used as the ground-truth oracle.
//!
//! The accessibility relation is stored as a partition of the worlds into
//! clusters, which makes reflexivity, symmetry, and transitivity
//! structural. Validity is decided over universal (single-cluster)
//! models, for which S5 is complete: duplicating a world's valuation never
//! changes any truth value, so it suffices to range over *sets* of
//! distinct valuations of bounded size.

use crate::formula::Formula;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeModel {
    pub num_worlds: usize,
    /// Partition of 0..num_worlds into equivalence classes.
    pub clusters: Vec<Vec<usize>>,
    /// Atoms not mentioned are false everywhere.
    pub valuation: BTreeMap<String, BTreeSet<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    UnknownWorld { world: usize, num_worlds: usize },
    BadPartition,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::UnknownWorld { world, num_worlds } => {
                write!(f, "world {} out of range (model has {})", world, num_worlds)
            }
            ModelError::BadPartition => write!(f, "clusters do not partition the worlds"),
        }
    }
}

impl std::error::Error for ModelError {}

impl KripkeModel {
    /// Single-cluster model: every world sees every world.
    pub fn universal(num_worlds: usize, valuation: BTreeMap<String, BTreeSet<usize>>) -> Self {
        KripkeModel {
            num_worlds,
            clusters: vec![(0..num_worlds).collect()],
            valuation,
        }
    }

    pub fn check_partition(&self) -> Result<(), ModelError> {
        let mut seen = vec![false; self.num_worlds];
        for cluster in &self.clusters {
            for &w in cluster {
                if w >= self.num_worlds || seen[w] {
                    return Err(ModelError::BadPartition);
                }
                seen[w] = true;
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(ModelError::BadPartition)
        }
    }

    fn cluster_of(&self, w: usize) -> &[usize] {
        self.clusters
            .iter()
            .find(|c| c.contains(&w))
            .map(|c| c.as_slice())
            .expect("world in some cluster")
    }

    fn atom_true_at(&self, name: &str, w: usize) -> bool {
        self.valuation.get(name).is_some_and(|s| s.contains(&w))
    }

    /// The satisfaction relation, clause by clause.
    pub fn evaluate(&self, w: usize, f: &Formula) -> Result<bool, ModelError> {
        if w >= self.num_worlds {
            return Err(ModelError::UnknownWorld {
                world: w,
                num_worlds: self.num_worlds,
            });
        }
        Ok(self.eval(w, f))
    }

    fn eval(&self, w: usize, f: &Formula) -> bool {
        match f {
            Formula::Atom(name) => self.atom_true_at(name, w),
            Formula::Bottom => false,
            Formula::Top => true,
            Formula::Not(a) => !self.eval(w, a),
            Formula::And(a, b) => self.eval(w, a) && self.eval(w, b),
            Formula::Or(a, b) => self.eval(w, a) || self.eval(w, b),
            Formula::Implies(a, b) => !self.eval(w, a) || self.eval(w, b),
            Formula::Diamond(a) => self.cluster_of(w).iter().any(|&v| self.eval(v, a)),
            Formula::Box(a) => self.cluster_of(w).iter().all(|&v| self.eval(v, a)),
        }
    }

    /// World/valuation table, one row per world.
    pub fn table(&self, atoms: &[String]) -> String {
        let mut out = String::new();
        out.push_str("world");
        for a in atoms {
            out.push_str(&format!("  {}", a));
        }
        out.push('\n');
        for w in 0..self.num_worlds {
            out.push_str(&format!("w{}", w));
            for a in atoms {
                out.push_str(&format!(
                    "  {}",
                    if self.atom_true_at(a, w) { "1" } else { "0" }
                ));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid { model: KripkeModel, world: usize },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub needed: u128,
    pub budget: u128,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "model enumeration needs {} candidates, budget is {}",
            self.needed, self.budget
        )
    }
}

impl std::error::Error for BudgetExceeded {}

pub const DEFAULT_BUDGET: u128 = 5_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Decides S5-validity by enumerating universal models over the atoms of
/// `f` with at most `modal_count(f) + 1` worlds of pairwise-distinct
/// valuation. Returns a falsifying model and world when one exists.
pub fn decide_validity_with_budget(f: &Formula, budget: u128) -> Result<Verdict, BudgetExceeded> {
    let atoms = f.atoms();
    let n = atoms.len();
    let distinct: u128 = 1u128 << n.min(60);
    let max_worlds = ((f.modal_count() + 1) as u128).min(distinct) as usize;

    let space: u128 = (1..=max_worlds as u128)
        .map(|k| binomial(distinct, k))
        .sum();
    if space > budget {
        return Err(BudgetExceeded {
            needed: space,
            budget,
        });
    }

    let mut chosen: Vec<u64> = Vec::new();
    if let Some((model, world)) =
        search_models(f, &atoms, distinct as u64, max_worlds, 0, &mut chosen)
    {
        Ok(Verdict::Invalid { model, world })
    } else {
        Ok(Verdict::Valid)
    }
}

pub fn decide_validity(f: &Formula) -> Result<Verdict, BudgetExceeded> {
    decide_validity_with_budget(f, DEFAULT_BUDGET)
}

fn model_from_masks(atoms: &[String], masks: &[u64]) -> KripkeModel {
    let mut valuation: BTreeMap<String, BTreeSet<usize>> = BTreeMap::new();
    for (i, a) in atoms.iter().enumerate() {
        let worlds: BTreeSet<usize> = masks
            .iter()
            .enumerate()
            .filter(|(_, m)| *m & (1 << i) != 0)
            .map(|(w, _)| w)
            .collect();
        if !worlds.is_empty() {
            valuation.insert(a.clone(), worlds);
        }
    }
    KripkeModel::universal(masks.len(), valuation)
}

fn search_models(
    f: &Formula,
    atoms: &[String],
    distinct: u64,
    max_worlds: usize,
    next: u64,
    chosen: &mut Vec<u64>,
) -> Option<(KripkeModel, usize)> {
    if !chosen.is_empty() {
        let model = model_from_masks(atoms, chosen);
        for w in 0..chosen.len() {
            if !model.eval(w, f) {
                return Some((model, w));
            }
        }
    }
    if chosen.len() == max_worlds {
        return None;
    }
    for mask in next..distinct {
        chosen.push(mask);
        let hit = search_models(f, atoms, distinct, max_worlds, mask + 1, chosen);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Validity of Γ ⊢ Δ read as ⋀Γ → ⋁Δ, with the empty conjunction ⊤ and
/// the empty disjunction ⊥.
pub fn sequent_formula<'a>(
    gamma: impl IntoIterator<Item = &'a Formula>,
    delta: impl IntoIterator<Item = &'a Formula>,
) -> Formula {
    let gs: Vec<Formula> = gamma.into_iter().cloned().collect();
    let ds: Vec<Formula> = delta.into_iter().cloned().collect();
    let ant = if gs.is_empty() {
        Formula::Top
    } else {
        Formula::conj_of(gs)
    };
    let suc = if ds.is_empty() {
        Formula::Bottom
    } else {
        Formula::disj_of(ds)
    };
    Formula::implies(ant, suc)
}

pub fn sequent_valid<'a>(
    gamma: impl IntoIterator<Item = &'a Formula>,
    delta: impl IntoIterator<Item = &'a Formula>,
) -> Result<Verdict, BudgetExceeded> {
    decide_validity(&sequent_formula(gamma, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn v(pairs: &[(&str, &[usize])]) -> BTreeMap<String, BTreeSet<usize>> {
        pairs
            .iter()
            .map(|(a, ws)| (a.to_string(), ws.iter().copied().collect()))
            .collect()
    }

    #[test]
    fn box_on_singleton_and_two_world_models() {
        let one = KripkeModel::universal(1, v(&[("p", &[0])]));
        assert_eq!(one.evaluate(0, &parse("[]p").unwrap()), Ok(true));

        let two = KripkeModel::universal(2, v(&[("p", &[0])]));
        assert_eq!(two.evaluate(0, &parse("[]p").unwrap()), Ok(false));
        assert_eq!(two.evaluate(1, &parse("<>p").unwrap()), Ok(true));

        assert!(two.evaluate(2, &parse("p").unwrap()).is_err());
    }

    #[test]
    fn diamond_constant_across_cluster() {
        // Two clusters {0,1} and {2}: ◇p agrees inside a cluster only.
        let m = KripkeModel {
            num_worlds: 3,
            clusters: vec![vec![0, 1], vec![2]],
            valuation: v(&[("p", &[1])]),
        };
        let dia_p = parse("<>p").unwrap();
        assert_eq!(m.evaluate(0, &dia_p), Ok(true));
        assert_eq!(m.evaluate(1, &dia_p), Ok(true));
        assert_eq!(m.evaluate(2, &dia_p), Ok(false));
    }

    #[test]
    fn validity_of_the_s5_axioms() {
        for s in [
            "<>p -> []<>p",
            "[]p -> p",
            "[](p -> q) -> ([]p -> []q)",
            "[]p -> [][]p",
            "p -> []<>p",
        ] {
            assert_eq!(decide_validity(&parse(s).unwrap()), Ok(Verdict::Valid), "{s}");
        }
    }

    #[test]
    fn invalidity_with_two_world_witness() {
        let f = parse("p -> []p").unwrap();
        match decide_validity(&f).unwrap() {
            Verdict::Invalid { model, world } => {
                assert_eq!(model.num_worlds, 2);
                assert_eq!(model.evaluate(world, &f), Ok(false));
            }
            Verdict::Valid => panic!("p -> []p should be invalid"),
        }
    }

    #[test]
    fn sequent_validity_examples() {
        let p = parse("p").unwrap();
        assert!(sequent_valid([&p], [&p]).unwrap().is_valid());

        // ⊢ p, □¬□p
        let boxed = parse("[]~[]p").unwrap();
        assert!(sequent_valid([], [&p, &boxed]).unwrap().is_valid());

        let g = parse("<>[](~p | q)").unwrap();
        assert!(!sequent_valid([&g], [&p]).unwrap().is_valid());
    }

    #[test]
    fn empty_sides_read_as_top_and_bottom() {
        assert!(!sequent_valid([], []).unwrap().is_valid());
        let taut = parse("p | ~p").unwrap();
        assert!(sequent_valid([], [&taut]).unwrap().is_valid());
    }

    #[test]
    fn budget_is_enforced() {
        let f = parse("p & q & r & s & t & u & v").unwrap();
        assert!(decide_validity_with_budget(&f, 10).is_err());
    }
}
