//! Zoned sequents Γ;P⊢Q;Δ with a block partition of the middle zones,
//! plain sequents, and the expansion between them.
//!
//! The middle zones are stored *as* the partition: each block holds its
//! left-zone and right-zone occurrences, so "every occurrence lies in
//! exactly one block" is structural. A diamond block X stands for the
//! antecedent formula ◇⋀X′ with X′ = X_left ∪ ¬X_right; a box block Y for
//! the succedent formula □⋁Y′ with Y′ = ¬Y_left ∪ Y_right.
//!
//! Block entries are atoms everywhere the calculus itself is concerned;
//! the structural transformations pass through transient states whose
//! blocks hold compound formulas, so the type does not forbid them.

use crate::formula::Formula;
use crate::multiset::Multiset;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    Diamond,
    Box,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    pub left: Multiset<Formula>,
    pub right: Multiset<Formula>,
}

impl Block {
    pub fn new(kind: BlockKind, left: Multiset<Formula>, right: Multiset<Formula>) -> Block {
        Block { kind, left, right }
    }

    pub fn diamond(left: Multiset<Formula>, right: Multiset<Formula>) -> Block {
        Block::new(BlockKind::Diamond, left, right)
    }

    pub fn boxed(left: Multiset<Formula>, right: Multiset<Formula>) -> Block {
        Block::new(BlockKind::Box, left, right)
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    pub fn union(&self, other: &Block) -> Block {
        Block {
            kind: self.kind,
            left: self.left.union(&other.left),
            right: self.right.union(&other.right),
        }
    }

    /// The formula the block stands for in the expansion.
    pub fn corresponding_formula(&self) -> Formula {
        match self.kind {
            BlockKind::Diamond => {
                let mut lits: Vec<Formula> = self.left.iter().cloned().collect();
                lits.extend(self.right.iter().map(|q| Formula::not(q.clone())));
                Formula::dia(Formula::conj_of(lits))
            }
            BlockKind::Box => {
                let mut lits: Vec<Formula> =
                    self.left.iter().map(|p| Formula::not(p.clone())).collect();
                lits.extend(self.right.iter().cloned());
                Formula::boxed(Formula::disj_of(lits))
            }
        }
    }

    pub fn is_atomic(&self) -> bool {
        self.left.all(Formula::is_atom) && self.right.all(Formula::is_atom)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlainSequent {
    pub antecedent: Multiset<Formula>,
    pub succedent: Multiset<Formula>,
}

impl PlainSequent {
    pub fn new(antecedent: Multiset<Formula>, succedent: Multiset<Formula>) -> PlainSequent {
        PlainSequent {
            antecedent,
            succedent,
        }
    }

    pub fn from_slices(ant: &[Formula], suc: &[Formula]) -> PlainSequent {
        PlainSequent {
            antecedent: ant.iter().cloned().collect(),
            succedent: suc.iter().cloned().collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZonedSequent {
    /// Γ, the left outer zone.
    pub left: Multiset<Formula>,
    /// The middle zones, as their partition into blocks, kept sorted.
    pub blocks: Vec<Block>,
    /// Δ, the right outer zone.
    pub right: Multiset<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequentError {
    EmptyBlock,
}

impl fmt::Display for SequentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequentError::EmptyBlock => write!(f, "malformed partition: empty block"),
        }
    }
}

impl std::error::Error for SequentError {}

impl ZonedSequent {
    pub fn new(left: Multiset<Formula>, blocks: Vec<Block>, right: Multiset<Formula>) -> Self {
        let mut s = ZonedSequent {
            left,
            blocks,
            right,
        };
        s.normalize();
        s
    }

    /// Blocks are kept in a canonical order so sequent equality ignores
    /// the order blocks were listed in.
    pub fn normalize(&mut self) {
        self.blocks.sort();
    }

    pub fn validate(&self) -> Result<(), SequentError> {
        if self.blocks.iter().any(Block::is_empty) {
            Err(SequentError::EmptyBlock)
        } else {
            Ok(())
        }
    }

    /// P, the middle-left occurrences across all blocks.
    pub fn mid_left(&self) -> Multiset<Formula> {
        self.blocks
            .iter()
            .fold(Multiset::new(), |acc, b| acc.union(&b.left))
    }

    /// Q, the middle-right occurrences across all blocks.
    pub fn mid_right(&self) -> Multiset<Formula> {
        self.blocks
            .iter()
            .fold(Multiset::new(), |acc, b| acc.union(&b.right))
    }

    pub fn blocks_multiset(&self) -> Multiset<Block> {
        self.blocks.iter().cloned().collect()
    }

    /// Adds a block unless it is empty.
    pub fn with_block(mut self, block: Block) -> Self {
        if !block.is_empty() {
            self.blocks.push(block);
            self.normalize();
        }
        self
    }

    pub fn without_block(mut self, index: usize) -> Self {
        self.blocks.remove(index);
        self
    }

    /// All block entries are atoms: the shape the calculus operates on.
    pub fn has_atomic_middle(&self) -> bool {
        self.blocks.iter().all(Block::is_atomic)
    }

    /// Γ;P⊢Q;Δ read back as the plain sequent it denotes.
    pub fn expand(&self) -> Result<PlainSequent, SequentError> {
        self.validate()?;
        let mut ant = self.left.clone();
        let mut suc = Multiset::new();
        for b in &self.blocks {
            match b.kind {
                BlockKind::Diamond => ant.insert(b.corresponding_formula()),
                BlockKind::Box => suc.insert(b.corresponding_formula()),
            }
        }
        Ok(PlainSequent {
            antecedent: ant,
            succedent: suc.union(&self.right),
        })
    }

    /// A plain sequent as a zoned sequent with empty middle.
    pub fn embed(plain: &PlainSequent) -> ZonedSequent {
        ZonedSequent {
            left: plain.antecedent.clone(),
            blocks: Vec::new(),
            right: plain.succedent.clone(),
        }
    }
}

fn fmt_formula_list(ms: &Multiset<Formula>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for x in ms.iter() {
        if !first {
            write!(f, ", ")?;
        }
        first = false;
        write!(f, "{:?}", x)?;
    }
    Ok(())
}

impl fmt::Display for PlainSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_formula_list(&self.antecedent, f)?;
        if !self.antecedent.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "|-")?;
        if !self.succedent.is_empty() {
            write!(f, " ")?;
        }
        fmt_formula_list(&self.succedent, f)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            BlockKind::Diamond => "X",
            BlockKind::Box => "Y",
        };
        write!(f, "<{}:{{", tag)?;
        fmt_formula_list(&self.left, f)?;
        write!(f, "|")?;
        fmt_formula_list(&self.right, f)?;
        write!(f, "}}>")
    }
}

impl fmt::Display for ZonedSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_formula_list(&self.left, f)?;
        write!(f, " ; ")?;
        fmt_formula_list(&self.mid_left(), f)?;
        write!(f, " |- ")?;
        fmt_formula_list(&self.mid_right(), f)?;
        write!(f, " ; ")?;
        fmt_formula_list(&self.right, f)?;
        if !self.blocks.is_empty() {
            write!(f, "  [blocks: ")?;
            for (i, b) in self.blocks.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", b)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

pub mod text {
    //! Text parsing for plain and zoned sequents.

    use super::*;
    use crate::formula::{parse as parse_formula, ParseError};

    fn parse_formula_list(text: &str) -> Result<Multiset<Formula>, ParseError> {
        let mut out = Multiset::new();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(out);
        }
        for part in split_top_level_commas(trimmed) {
            out.insert(parse_formula(part.trim())?);
        }
        Ok(out)
    }

    // Formulas contain no commas, so a plain split suffices; kept as a
    // helper in case the grammar ever grows one.
    fn split_top_level_commas(text: &str) -> Vec<&str> {
        text.split(',').collect()
    }

    /// `A, B |- C, D`
    pub fn parse_plain(text: &str) -> Result<PlainSequent, String> {
        let (ant, suc) = text
            .split_once("|-")
            .ok_or_else(|| "sequent must contain |-".to_string())?;
        Ok(PlainSequent {
            antecedent: parse_formula_list(ant).map_err(|e| e.to_string())?,
            succedent: parse_formula_list(suc).map_err(|e| e.to_string())?,
        })
    }

    /// `Γ ; P |- Q ; Δ  [blocks: <X:{p|q}>, <Y:{|r}>]`, with the middle
    /// zones checked against the block contents.
    pub fn parse_zoned(text: &str) -> Result<ZonedSequent, String> {
        let (body, blocks_part) = match text.find("[blocks:") {
            Some(i) => (&text[..i], Some(&text[i..])),
            None => (text, None),
        };
        let (lhs, rhs) = body
            .split_once("|-")
            .ok_or_else(|| "sequent must contain |-".to_string())?;
        let (gamma, p_zone) = match lhs.rsplit_once(';') {
            Some((g, p)) => (g, p),
            None => (lhs, ""),
        };
        let (q_zone, delta) = match rhs.split_once(';') {
            Some((q, d)) => (q, d),
            None => ("", rhs),
        };
        let left = parse_formula_list(gamma).map_err(|e| e.to_string())?;
        let right = parse_formula_list(delta).map_err(|e| e.to_string())?;
        let p = parse_formula_list(p_zone).map_err(|e| e.to_string())?;
        let q = parse_formula_list(q_zone).map_err(|e| e.to_string())?;

        let mut blocks = Vec::new();
        if let Some(bp) = blocks_part {
            let inner = bp
                .trim()
                .strip_prefix("[blocks:")
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| "expected [blocks: ...]".to_string())?;
            // Blocks end in `}>`; formulas contain neither brace, so this
            // split is unambiguous even with `->` and `<>` inside.
            for chunk in inner.split("}>") {
                let chunk = chunk.trim().trim_start_matches(',').trim();
                if chunk.is_empty() {
                    continue;
                }
                let chunk = chunk
                    .strip_prefix('<')
                    .ok_or_else(|| format!("expected <X:{{...}}, got {:?}", chunk))?;
                let (tag, rest) = chunk
                    .split_once(':')
                    .ok_or_else(|| "expected kind tag in block".to_string())?;
                let kind = match tag.trim() {
                    "X" => BlockKind::Diamond,
                    "Y" => BlockKind::Box,
                    other => return Err(format!("unknown block kind {:?}", other)),
                };
                let body = rest
                    .trim()
                    .strip_prefix('{')
                    .ok_or_else(|| "expected {...|...} in block".to_string())?;
                let (l, r) = body
                    .split_once('|')
                    .ok_or_else(|| "expected | inside block".to_string())?;
                blocks.push(Block::new(
                    kind,
                    parse_formula_list(l).map_err(|e| e.to_string())?,
                    parse_formula_list(r).map_err(|e| e.to_string())?,
                ));
            }
        }

        let seq = ZonedSequent::new(left, blocks, right);
        if seq.mid_left() != p || seq.mid_right() != q {
            return Err("middle zones do not match block contents".to_string());
        }
        seq.validate().map_err(|e| e.to_string())?;
        Ok(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn ms(items: &[&str]) -> Multiset<Formula> {
        items.iter().map(|s| parse(s).unwrap()).collect()
    }

    #[test]
    fn expand_listing_one() {
        // Γ,◇q; q ⊢ r; Δ with one diamond block {q|r} expands to
        // Γ,◇q,◇(q∧¬r) ⊢ Δ (listing (1) pattern with Γ = g, Δ = □r,d).
        let seq = ZonedSequent::new(
            ms(&["g", "<>q"]),
            vec![Block::diamond(ms(&["q"]), ms(&["r"]))],
            ms(&["[]r", "d"]),
        );
        let plain = seq.expand().unwrap();
        assert_eq!(plain.antecedent, ms(&["g", "<>q", "<>(q & ~r)"]));
        assert_eq!(plain.succedent, ms(&["[]r", "d"]));
    }

    #[test]
    fn expand_empty_middle() {
        let seq = ZonedSequent::new(Multiset::new(), vec![], ms(&["p"]));
        let plain = seq.expand().unwrap();
        assert_eq!(plain, PlainSequent::new(Multiset::new(), ms(&["p"])));
    }

    #[test]
    fn expand_listing_four() {
        // Γ; q,p,q,q ⊢ r,r,r,r; Δ with blocks X₁={q|r}, X₂={q|},
        // Y₁={q|r}, Y₂={p|r}, Y₃={|r}.
        let seq = ZonedSequent::new(
            ms(&["g"]),
            vec![
                Block::diamond(ms(&["q"]), ms(&["r"])),
                Block::diamond(ms(&["q"]), Multiset::new()),
                Block::boxed(ms(&["q"]), ms(&["r"])),
                Block::boxed(ms(&["p"]), ms(&["r"])),
                Block::boxed(Multiset::new(), ms(&["r"])),
            ],
            ms(&["d"]),
        );
        assert_eq!(seq.mid_left(), ms(&["q", "p", "q", "q"]));
        assert_eq!(seq.mid_right(), ms(&["r", "r", "r", "r"]));
        let plain = seq.expand().unwrap();
        assert_eq!(plain.antecedent, ms(&["g", "<>(q & ~r)", "<>q"]));
        assert_eq!(plain.succedent, ms(&["[](~q | r)", "[](~p | r)", "[]r", "d"]));
    }

    #[test]
    fn embed_then_expand_is_identity() {
        for (ant, suc) in [
            (vec!["p"], vec!["p"]),
            (vec!["<>p"], vec!["[]q"]),
            (vec![], vec![]),
        ] {
            let plain = PlainSequent::new(
                ant.iter().map(|s| parse(s).unwrap()).collect(),
                suc.iter().map(|s| parse(s).unwrap()).collect(),
            );
            let zoned = ZonedSequent::embed(&plain);
            assert!(zoned.blocks.is_empty());
            assert_eq!(zoned.expand().unwrap(), plain);
        }
    }

    #[test]
    fn block_order_is_canonical() {
        let b1 = Block::diamond(ms(&["q"]), Multiset::new());
        let b2 = Block::boxed(ms(&["p"]), ms(&["r"]));
        let s1 = ZonedSequent::new(Multiset::new(), vec![b1.clone(), b2.clone()], Multiset::new());
        let s2 = ZonedSequent::new(Multiset::new(), vec![b2, b1], Multiset::new());
        assert_eq!(s1, s2);
        assert_eq!(s1.expand().unwrap(), s2.expand().unwrap());
    }

    #[test]
    fn empty_block_is_malformed() {
        let seq = ZonedSequent {
            left: Multiset::new(),
            blocks: vec![Block::diamond(Multiset::new(), Multiset::new())],
            right: Multiset::new(),
        };
        assert_eq!(seq.expand(), Err(SequentError::EmptyBlock));
    }

    #[test]
    fn text_round_trip() {
        let seq = ZonedSequent::new(
            ms(&["[]p"]),
            vec![
                Block::diamond(ms(&["q"]), ms(&["r"])),
                Block::boxed(Multiset::new(), ms(&["r"])),
            ],
            ms(&["p -> q"]),
        );
        let printed = format!("{}", seq);
        let reparsed = text::parse_zoned(&printed).unwrap();
        assert_eq!(reparsed, seq);

        let plain = text::parse_plain("p, <>q |- [](p | q)").unwrap();
        assert_eq!(plain.antecedent, ms(&["p", "<>q"]));
        assert_eq!(plain.succedent, ms(&["[](p | q)"]));
    }

    #[test]
    fn mismatched_middle_zones_rejected() {
        assert!(text::parse_zoned("; p |- ;  [blocks: <X:{q|}>]").is_err());
    }
}
