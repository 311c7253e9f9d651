//! Ideal-file reader and report writer.
//!
//! ```text
//! file   := header stmt+
//! header := "vars" ident ("," ident)* ";"
//! stmt   := expr ";" | "assume" "pure_dimensional" ";"
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := base ("^" nat)?
//! base   := ident | number | "(" expr ")" | "-" factor
//! number := nat ("/" nat)?
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::bounds::GermReport;
use crate::polyring::{var_list, MonomialOrder, Polynomial, VarList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown identifier `{name}` at {line}:{col}")]
    UnknownIdentifier { name: String, line: usize, col: usize },
    #[error("duplicate variable `{name}` at {line}:{col}")]
    DuplicateVariable { name: String, line: usize, col: usize },
    #[error("generator at {line}:{col} is identically zero")]
    ZeroGenerator { line: usize, col: usize },
    #[error("the ideal has no generators")]
    NoGenerators,
}

/// A parsed ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: VarList,
    pub generators: Vec<Polynomial>,
    pub assume_pure_dimensional: bool,
}

impl IdealFile {
    pub fn new(vars: VarList, generators: Vec<Polynomial>) -> Self {
        IdealFile {
            vars,
            generators,
            assume_pure_dimensional: false,
        }
    }
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {};", self.vars.join(", "))?;
        if self.assume_pure_dimensional {
            writeln!(f, "assume pure_dimensional;")?;
        }
        for g in &self.generators {
            writeln!(f, "{g};")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    Semi,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Nat(n) => write!(f, "number `{n}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            Tok::Nat(s.parse().expect("digits"))
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                other => {
                    return Err(ParseError::Syntax {
                        line: tl,
                        col: tc,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            };
            bump(&mut chars);
            t
        };
        out.push(Spanned {
            tok,
            line: tl,
            col: tc,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    vars: VarList,
}

const ORDER: MonomialOrder = MonomialOrder::Grevlex;

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            col: t.col,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned, ParseError> {
        if self.peek().tok == want {
            Ok(self.next())
        } else {
            Err(self.error_here(format!("expected {want}, found {}", self.peek().tok)))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let t = self.next();
                Ok((s, t.line, t.col))
            }
            other => Err(self.error_here(format!("expected identifier, found {other}"))),
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().tok.clone() {
            Tok::Nat(n) => {
                self.next();
                Ok(n)
            }
            other => Err(self.error_here(format!("expected a natural number, found {other}"))),
        }
    }

    fn header(&mut self) -> Result<(), ParseError> {
        match self.peek().tok {
            Tok::Ident(ref s) if s == "vars" => {
                self.next();
            }
            _ => return Err(self.error_here("expected `vars` header")),
        }
        let mut names: Vec<String> = Vec::new();
        loop {
            let (name, line, col) = self.ident()?;
            if is_keyword(&name) {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    message: format!("`{name}` is reserved"),
                });
            }
            if names.contains(&name) {
                return Err(ParseError::DuplicateVariable { name, line, col });
            }
            names.push(name);
            if self.peek().tok == Tok::Comma {
                self.next();
            } else {
                break;
            }
        }
        self.expect(Tok::Semi)?;
        self.vars = var_list(&names);
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let at = self.peek().clone();
            let e = self.nat()?;
            let e = e.to_u32().ok_or(ParseError::Syntax {
                line: at.line,
                col: at.col,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.next();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(self.vars.clone(), ORDER, i)),
                    None => Err(ParseError::UnknownIdentifier {
                        name,
                        line: t.line,
                        col: t.col,
                    }),
                }
            }
            Tok::Nat(n) => {
                self.next();
                let mut value = BigRational::from_integer(n);
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let at = self.peek().clone();
                    let d = self.nat()?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax {
                            line: at.line,
                            col: at.col,
                            message: "zero denominator".into(),
                        });
                    }
                    value /= BigRational::from_integer(d);
                }
                Ok(Polynomial::constant(self.vars.clone(), ORDER, value))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Minus => {
                self.next();
                Ok(-self.factor()?)
            }
            other => Err(self.error_here(format!("expected an operand, found {other}"))),
        }
    }
}

fn is_keyword(s: &str) -> bool {
    matches!(s, "vars" | "assume")
}

/// Parses the ideal-file format.
pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        vars: var_list::<&str>(&[]),
    };
    p.header()?;
    let mut generators = Vec::new();
    let mut assume_pure_dimensional = false;
    while p.peek().tok != Tok::Eof {
        if matches!(p.peek().tok, Tok::Ident(ref s) if s == "assume") {
            p.next();
            match p.ident()? {
                (ref s, _, _) if s == "pure_dimensional" => {}
                (s, line, col) => {
                    return Err(ParseError::Syntax {
                        line,
                        col,
                        message: format!("unknown directive `assume {s}`"),
                    })
                }
            }
            p.expect(Tok::Semi)?;
            assume_pure_dimensional = true;
            continue;
        }
        let start = p.peek().clone();
        let g = p.expr()?;
        p.expect(Tok::Semi)?;
        if g.is_zero() {
            return Err(ParseError::ZeroGenerator {
                line: start.line,
                col: start.col,
            });
        }
        generators.push(g);
    }
    if generators.is_empty() {
        return Err(ParseError::NoGenerators);
    }
    Ok(IdealFile {
        vars: p.vars,
        generators,
        assume_pure_dimensional,
    })
}

/// Serializes a report as pretty-printed JSON with a fixed key order.
pub fn emit_report(report: &GermReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cusp() {
        let f = parse_ideal("vars x,y;\n x^2 - y^3;").unwrap();
        assert_eq!(f.vars.len(), 2);
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.generators[0].to_string(), "-y^3 + x^2");
        assert!(!f.assume_pure_dimensional);
    }

    #[test]
    fn parses_worked_example() {
        let text = "vars x,y,z;\n x*(x-z^3)*(x-2*z^2);\n y*(y-z^3)*(y-2*z^2);\n (x+y)*(x+y-z^3);";
        let f = parse_ideal(text).unwrap();
        let degs: Vec<_> = f.generators.iter().map(|g| g.total_degree().unwrap()).collect();
        assert_eq!(degs, vec![6, 6, 4]);
    }

    #[test]
    fn dangling_plus_is_a_syntax_error() {
        match parse_ideal("vars x;\n x + ;") {
            Err(ParseError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 6)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier() {
        assert!(matches!(
            parse_ideal("vars x;\n x + y;"),
            Err(ParseError::UnknownIdentifier { ref name, line: 2, col: 6 }) if name == "y"
        ));
    }

    #[test]
    fn no_generators() {
        assert_eq!(parse_ideal("vars x;\n"), Err(ParseError::NoGenerators));
        assert_eq!(
            parse_ideal("vars x;\nassume pure_dimensional;\n"),
            Err(ParseError::NoGenerators)
        );
    }

    #[test]
    fn juxtaposition_is_rejected() {
        assert!(matches!(
            parse_ideal("vars x,y;\n 2x;"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn foreign_characters_are_rejected() {
        assert!(parse_ideal("vars x;\n x.5;").is_err());
        assert!(parse_ideal("vars x;\n x = 1;").is_err());
    }

    #[test]
    fn comments_directive_and_rationals() {
        let text = "# a comment\nvars x, y; # trailing\nassume pure_dimensional;\n3/4*x^2 - -y;\n";
        let f = parse_ideal(text).unwrap();
        assert!(f.assume_pure_dimensional);
        assert_eq!(f.generators[0].to_string(), "3/4*x^2 + y");
    }

    #[test]
    fn unary_minus_binds_to_factor() {
        let f = parse_ideal("vars x;\n -x^2;").unwrap();
        assert_eq!(f.generators[0].to_string(), "-x^2");
    }

    #[test]
    fn display_round_trips() {
        let text = "vars x,y,z;\nassume pure_dimensional;\n(x+y)^3 - 1/3*z;\nx*y - 7;\n";
        let f = parse_ideal(text).unwrap();
        assert_eq!(parse_ideal(&f.to_string()).unwrap(), f);
    }
}
