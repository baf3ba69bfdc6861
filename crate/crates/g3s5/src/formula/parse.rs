//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Connectives: `~` `&` `|` `->` `<>` `[]`, constants `bot` and `top`,
//! atoms as identifiers. Precedence `~`/`<>`/`[]` > `&` > `|` > `->`,
//! with `->` right-associative. `top` is normalized to `~bot` so the
//! calculus only ever deals with the spelled-out constant.

use super::Formula;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Bot,
    Top,
    Not,
    And,
    Or,
    Imp,
    Dia,
    BoxOp,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '~' => {
                toks.push((i, Tok::Not));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::And));
                i += 1;
            }
            '|' => {
                toks.push((i, Tok::Or));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Imp));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected '->'".into(),
                    });
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((i, Tok::Dia));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected '<>'".into(),
                    });
                }
            }
            '[' => {
                if bytes.get(i + 1) == Some(&b']') {
                    toks.push((i, Tok::BoxOp));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected '[]'".into(),
                    });
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..i];
                let tok = match word {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((start, tok));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {:?}", c),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Tok::Imp) {
            self.bump();
            let rhs = self.implication()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Dia) => {
                self.bump();
                Ok(Formula::dia(self.unary()?))
            }
            Some(Tok::BoxOp) => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            Some(Tok::Bot) => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Some(Tok::Top) => {
                self.bump();
                Ok(Formula::top_normalized())
            }
            Some(Tok::Ident(_)) => {
                if let Tok::Ident(name) = self.bump() {
                    Ok(Formula::Atom(name))
                } else {
                    unreachable!()
                }
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.implication()?;
                if self.peek() == Some(&Tok::RParen) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(_) => Err(self.err("expected a formula")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.implication()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{render, Style};

    #[test]
    fn parses_axiom_five() {
        // ◇A→□◇A at A = p
        let f = parse("<>p -> []<>p").unwrap();
        assert_eq!(
            f,
            Formula::implies(
                Formula::dia(Formula::atom("p")),
                Formula::boxed(Formula::dia(Formula::atom("p")))
            )
        );
    }

    #[test]
    fn parses_single_atom() {
        assert_eq!(parse("p").unwrap(), Formula::atom("p"));
    }

    #[test]
    fn parses_worked_example_goal() {
        let f = parse("[]([]~p | p) -> [](~p | []p)").unwrap();
        let p = || Formula::atom("p");
        let expected = Formula::implies(
            Formula::boxed(Formula::or(Formula::boxed(Formula::not(p())), p())),
            Formula::boxed(Formula::or(Formula::not(p()), Formula::boxed(p()))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p -> q -> r").unwrap(),
            Formula::implies(
                Formula::atom("p"),
                Formula::implies(Formula::atom("q"), Formula::atom("r"))
            )
        );
        assert_eq!(
            parse("~p & q | r").unwrap(),
            Formula::or(
                Formula::and(Formula::not(Formula::atom("p")), Formula::atom("q")),
                Formula::atom("r")
            )
        );
        assert_eq!(parse("<>p & q").unwrap(), parse("(<>p) & q").unwrap());
    }

    #[test]
    fn top_normalizes_to_negated_bottom() {
        assert_eq!(parse("top").unwrap(), Formula::not(Formula::Bottom));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("p & (q | ").unwrap_err();
        assert_eq!(e.position, 9);
        assert!(parse("").is_err());
        let e = parse("p -? q").unwrap_err();
        assert_eq!(e.position, 2);
    }

    #[test]
    fn render_parse_examples() {
        for s in ["p", "~(p & q) -> <>r", "[](p | bot) -> ~~p'"] {
            let f = parse(s).unwrap();
            assert_eq!(parse(&render(&f, Style::Ascii)).unwrap(), f);
        }
    }
}
