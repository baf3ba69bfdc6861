//! Derivation rendering: indented text and paper-style stacked LaTeX.

use super::{Derivation, RuleId};
use crate::formula::{render as render_formula, Formula, Style};
use crate::multiset::Multiset;
use crate::sequent::{BlockKind, ZonedSequent};

fn list(ms: &Multiset<Formula>, style: Style) -> String {
    ms.iter()
        .map(|f| render_formula(f, style))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn sequent_line(seq: &ZonedSequent, style: Style) -> String {
    let turnstile = match style {
        Style::Ascii => "|-",
        Style::Unicode => "⊢",
        Style::Latex => "\\vdash",
    };
    let mut s = String::new();
    s.push_str(&list(&seq.left, style));
    if !seq.blocks.is_empty() {
        s.push_str(" ; ");
        s.push_str(&list(&seq.mid_left(), style));
        s.push(' ');
        s.push_str(turnstile);
        s.push(' ');
        s.push_str(&list(&seq.mid_right(), style));
        s.push_str(" ; ");
    } else {
        if !seq.left.is_empty() {
            s.push(' ');
        }
        s.push_str(turnstile);
        s.push(' ');
    }
    s.push_str(&list(&seq.right, style));
    s.trim().to_string()
}

/// One line per node, premises indented above their conclusion.
pub fn text_tree(d: &Derivation, style: Style) -> String {
    let mut out = String::new();
    fn walk(d: &Derivation, depth: usize, style: Style, out: &mut String) {
        for p in &d.premises {
            walk(p, depth + 1, style, out);
        }
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!(
            "{}  [{}]\n",
            sequent_line(&d.conclusion, style),
            d.rule.name()
        ));
    }
    walk(d, 0, style, &mut out);
    out
}

fn latex_rule_label(rule: RuleId) -> &'static str {
    match rule {
        RuleId::Ax => "Ax",
        RuleId::AxBot => "Ax$\\bot$",
        RuleId::LNeg => "L$\\neg$",
        RuleId::RNeg => "R$\\neg$",
        RuleId::LAnd => "L$\\wedge$",
        RuleId::RAnd => "R$\\wedge$",
        RuleId::LOr => "L$\\vee$",
        RuleId::ROr => "R$\\vee$",
        RuleId::LImp => "L$\\rightarrow$",
        RuleId::RImp => "R$\\rightarrow$",
        RuleId::LDia => "L$\\Diamond$",
        RuleId::RDia => "R$\\Diamond$",
        RuleId::LBox => "L$\\Box$",
        RuleId::RBox => "R$\\Box$",
        RuleId::LDiaSemi => "L$\\Diamond^;$",
        RuleId::RBoxSemi => "R$\\Box^;$",
    }
}

fn latex_sequent(seq: &ZonedSequent) -> String {
    let mut s = String::new();
    s.push_str(&list(&seq.left, Style::Latex));
    if !seq.blocks.is_empty() {
        s.push_str(" ; ");
        s.push_str(&list(&seq.mid_left(), Style::Latex));
        s.push_str(" \\vdash ");
        s.push_str(&list(&seq.mid_right(), Style::Latex));
        s.push_str(" ; ");
    } else {
        s.push_str(" \\vdash ");
    }
    s.push_str(&list(&seq.right, Style::Latex));
    s
}

/// Stacked-inference LaTeX in the bussproofs style.
pub fn latex_tree(d: &Derivation) -> String {
    let mut out = String::from("\\begin{prooftree}\n");
    fn walk(d: &Derivation, out: &mut String) {
        match d.premises.len() {
            0 => {
                out.push_str("\\AxiomC{}\n");
                out.push_str(&format!("\\RightLabel{{{}}}\n", latex_rule_label(d.rule)));
                out.push_str(&format!("\\UnaryInfC{{${}$}}\n", latex_sequent(&d.conclusion)));
            }
            1 => {
                walk(&d.premises[0], out);
                out.push_str(&format!("\\RightLabel{{{}}}\n", latex_rule_label(d.rule)));
                out.push_str(&format!("\\UnaryInfC{{${}$}}\n", latex_sequent(&d.conclusion)));
            }
            2 => {
                walk(&d.premises[0], out);
                walk(&d.premises[1], out);
                out.push_str(&format!("\\RightLabel{{{}}}\n", latex_rule_label(d.rule)));
                out.push_str(&format!("\\BinaryInfC{{${}$}}\n", latex_sequent(&d.conclusion)));
            }
            _ => unreachable!("no rule has more than two premises"),
        }
    }
    walk(d, &mut out);
    out.push_str("\\end{prooftree}\n");
    out
}

/// Blocks rendered with their kinds, for the machine-readable text forms.
pub fn block_summary(seq: &ZonedSequent, style: Style) -> String {
    seq.blocks
        .iter()
        .map(|b| {
            let tag = match b.kind {
                BlockKind::Diamond => "X",
                BlockKind::Box => "Y",
            };
            format!("<{}:{{{}|{}}}>", tag, list(&b.left, style), list(&b.right, style))
        })
        .collect::<Vec<_>>()
        .join(", ")
}
