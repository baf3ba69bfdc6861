//! Formula rendering in ASCII (round-trips through the parser), Unicode,
//! and LaTeX.

use super::Formula;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Style {
    Ascii,
    Unicode,
    Latex,
}

// Precedence levels: -> is 1, | is 2, & is 3, unary is 4.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

pub fn render(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    go(f, style, 0, &mut out);
    out
}

fn go(f: &Formula, style: Style, min_prec: u8, out: &mut String) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Bottom => out.push_str(match style {
            Style::Ascii => "bot",
            Style::Unicode => "⊥",
            Style::Latex => "\\bot",
        }),
        Formula::Top => out.push_str(match style {
            Style::Ascii => "top",
            Style::Unicode => "⊤",
            Style::Latex => "\\top",
        }),
        Formula::Not(a) => unary(
            match style {
                Style::Ascii => "~",
                Style::Unicode => "¬",
                Style::Latex => "\\neg",
            },
            a,
            style,
            min_prec,
            out,
        ),
        Formula::Diamond(a) => unary(
            match style {
                Style::Ascii => "<>",
                Style::Unicode => "◇",
                Style::Latex => "\\Diamond",
            },
            a,
            style,
            min_prec,
            out,
        ),
        Formula::Box(a) => unary(
            match style {
                Style::Ascii => "[]",
                Style::Unicode => "□",
                Style::Latex => "\\Box",
            },
            a,
            style,
            min_prec,
            out,
        ),
        Formula::And(a, b) => binary(
            f,
            a,
            b,
            PREC_AND,
            true,
            match style {
                Style::Ascii => " & ",
                Style::Unicode => " ∧ ",
                Style::Latex => "\\wedge ",
            },
            style,
            min_prec,
            out,
        ),
        Formula::Or(a, b) => binary(
            f,
            a,
            b,
            PREC_OR,
            true,
            match style {
                Style::Ascii => " | ",
                Style::Unicode => " ∨ ",
                Style::Latex => "\\vee ",
            },
            style,
            min_prec,
            out,
        ),
        Formula::Implies(a, b) => binary(
            f,
            a,
            b,
            PREC_IMP,
            false,
            match style {
                Style::Ascii => " -> ",
                Style::Unicode => " → ",
                Style::Latex => "\\rightarrow ",
            },
            style,
            min_prec,
            out,
        ),
    }
}

fn unary(op: &str, operand: &Formula, style: Style, min_prec: u8, out: &mut String) {
    // Unary operators never need parentheses themselves.
    let _ = min_prec;
    out.push_str(op);
    let mut inner = String::new();
    go(operand, style, PREC_UNARY, &mut inner);
    // LaTeX macros need a separator before a following letter.
    if style == Style::Latex && inner.starts_with(|c: char| c.is_ascii_alphanumeric()) {
        out.push(' ');
    }
    out.push_str(&inner);
}

#[allow(clippy::too_many_arguments)]
fn binary(
    _whole: &Formula,
    a: &Formula,
    b: &Formula,
    prec: u8,
    left_assoc: bool,
    op: &str,
    style: Style,
    min_prec: u8,
    out: &mut String,
) {
    let parens = prec < min_prec;
    if parens {
        out.push('(');
    }
    let (lmin, rmin) = if left_assoc {
        (prec, prec + 1)
    } else {
        (prec + 1, prec)
    };
    let mut lhs = String::new();
    go(a, style, lmin, &mut lhs);
    out.push_str(&lhs);
    if style == Style::Latex && lhs.ends_with(|c: char| c.is_ascii_alphanumeric() || c == '\'') {
        // e.g. "\neg p" + "\vee q": the macro boundary is unambiguous.
    }
    out.push_str(op);
    go(b, style, rmin, out);
    if parens {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn unicode_and_latex_examples() {
        let f = Formula::dia(Formula::and(
            Formula::atom("p"),
            Formula::not(Formula::atom("q")),
        ));
        assert_eq!(render(&f, Style::Unicode), "◇(p ∧ ¬q)");
        let g = Formula::boxed(Formula::or(
            Formula::not(Formula::atom("p")),
            Formula::atom("q"),
        ));
        assert_eq!(render(&g, Style::Latex), "\\Box(\\neg p\\vee q)");
        assert_eq!(render(&Formula::atom("p"), Style::Ascii), "p");
    }

    #[test]
    fn ascii_round_trips() {
        for s in [
            "<>p -> []<>p",
            "(p -> q) -> p -> q",
            "~(p & (q | r))",
            "[]([]~p | p) -> [](~p | []p)",
            "bot | ~bot",
        ] {
            let f = parse(s).unwrap();
            assert_eq!(parse(&render(&f, Style::Ascii)).unwrap(), f);
        }
    }

    #[test]
    fn parens_track_associativity() {
        let f = Formula::and(
            Formula::atom("a"),
            Formula::and(Formula::atom("b"), Formula::atom("c")),
        );
        assert_eq!(render(&f, Style::Ascii), "a & (b & c)");
        let g = Formula::implies(
            Formula::implies(Formula::atom("a"), Formula::atom("b")),
            Formula::atom("c"),
        );
        assert_eq!(render(&g, Style::Ascii), "(a -> b) -> c");
    }
}
