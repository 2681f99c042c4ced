//! Infix polynomial expressions: `+ - * ^`, unary minus, parentheses,
//! integer literals and rational literals `a/b`. Exponents are integers.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt, BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            let mut den = BigInt::from(1);
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let s = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let d: String = chars[s..i].iter().collect();
                den = d.parse().unwrap();
                if den == BigInt::from(0) {
                    return Err(Error::Parse {
                        col,
                        msg: "zero denominator".into(),
                    });
                }
            }
            out.push((Tok::Num(num.parse().unwrap(), den), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Parse {
                col,
                msg: format!("unexpected character '{}'", c),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
    end_col: usize,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            col: self.col(),
            msg: msg.into(),
        })
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((Tok::Sym(s), _)) if *s == c)
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.unary()?;
        while self.peek_sym('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<F>> {
        if self.peek_sym('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((Tok::Num(n, d), _)) if *d == BigInt::from(1) => {
                    let e: u32 = match n.try_into() {
                        Ok(e) if e <= 10_000 => e,
                        _ => return self.err("exponent out of range"),
                    };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of expression");
        };
        match tok {
            Tok::Num(n, d) => {
                let den = F::from_bigint(&d);
                if den.is_zero() {
                    return self.err(format!("denominator {} vanishes in {}", d, F::descriptor()));
                }
                self.pos += 1;
                let c = F::from_bigint(&n) / den;
                Ok(Poly::constant(self.nvars(), c))
            }
            Tok::Ident(name) => match self.names.iter().position(|n| *n == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(self.nvars(), i))
                }
                None => self.err(format!("unknown variable '{}'", name)),
            },
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.peek_sym(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Sym(c) => self.err(format!("unexpected '{}'", c)),
        }
    }
}

/// Parse `text` as a polynomial in the variables `names`. Error columns are
/// 1-based positions within `text`.
pub fn parse_poly<F: Field>(text: &str, names: &[String]) -> Result<Poly<F>> {
    let toks = tokenize(text)?;
    let mut p = Parser::<F> {
        toks,
        pos: 0,
        names,
        end_col: text.chars().count() + 1,
        _f: std::marker::PhantomData,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse a parenthesised, comma-separated list of polynomials such as
/// `(t, -s)`. Error columns are 1-based positions within `text`.
pub fn parse_tuple<F: Field>(text: &str, names: &[String]) -> Result<Vec<Poly<F>>> {
    let chars: Vec<char> = text.chars().collect();
    let open = chars.iter().position(|c| !c.is_whitespace());
    let close = chars.iter().rposition(|c| !c.is_whitespace());
    let (open, close) = match (open, close) {
        (Some(o), Some(c)) if chars[o] == '(' && chars[c] == ')' && o < c => (o, c),
        (Some(o), _) => {
            return Err(Error::Parse {
                col: o + 1,
                msg: "expected a parenthesised list".into(),
            })
        }
        _ => {
            return Err(Error::Parse {
                col: 1,
                msg: "expected a parenthesised list".into(),
            })
        }
    };
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = open + 1;
    for i in open + 1..=close {
        let c = chars[i];
        if c == '(' {
            depth += 1;
        } else if c == ')' && i < close {
            if depth == 0 {
                return Err(Error::Parse {
                    col: i + 1,
                    msg: "unbalanced ')'".into(),
                });
            }
            depth -= 1;
        } else if (c == ',' && depth == 0) || i == close {
            let piece: String = chars[start..i].iter().collect();
            if piece.trim().is_empty() {
                if i == close && out.is_empty() {
                    return Ok(out);
                }
                return Err(Error::Parse {
                    col: i + 1,
                    msg: "empty entry".into(),
                });
            }
            let p = parse_poly(&piece, names).map_err(|e| match e {
                Error::Parse { col, msg } => Error::Parse {
                    col: col + start,
                    msg,
                },
                other => other,
            })?;
            out.push(p);
            start = i + 1;
        }
    }
    if depth != 0 {
        return Err(Error::Parse {
            col: close + 1,
            msg: "unbalanced '('".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn names() -> Vec<String> {
        vec!["s".into(), "t".into(), "u'".into()]
    }

    #[test]
    fn precedence_and_round_trip() {
        let n = names();
        let p: Poly<Rational> = parse_poly("-(s - t)^2 + 3/4*s*u' - 2", &n).unwrap();
        let printed = p.display(&n).to_string();
        assert_eq!(printed, "-s^2 + 2*s*t - t^2 + 3/4*s*u' - 2");
        let again: Poly<Rational> = parse_poly(&printed, &n).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn power_binds_tighter_than_unary_minus() {
        let n = names();
        let a: Poly<Rational> = parse_poly("-s^2", &n).unwrap();
        assert_eq!(a.display(&n).to_string(), "-s^2");
    }

    #[test]
    fn errors_carry_columns() {
        let n = names();
        match parse_poly::<Rational>("s + w", &n) {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{:?}", other),
        }
        assert!(parse_poly::<Rational>("s^t", &n).is_err());
        assert!(parse_poly::<Rational>("(s", &n).is_err());
        assert!(parse_poly::<Rational>("1/0", &n).is_err());
    }

    #[test]
    fn tuples() {
        let n = names();
        let v: Vec<Poly<Rational>> = parse_tuple(" (t, -(s + 1)*t, 0) ", &n).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[1].display(&n).to_string(), "-s*t - t");
        assert!(parse_tuple::<Rational>("()", &n).unwrap().is_empty());
        match parse_tuple::<Rational>("(t, w)", &n) {
            Err(Error::Parse { col, .. }) => assert_eq!(col, 5),
            other => panic!("{:?}", other),
        }
        assert!(parse_tuple::<Rational>("t, s", &n).is_err());
        assert!(parse_tuple::<Rational>("(t,)", &n).is_err());
    }

    #[test]
    fn modular_literals_reduce() {
        let n = names();
        let p: Poly<Fp<5>> = parse_poly("7*s + 1/2", &n).unwrap();
        assert!(parse_poly::<Fp<5>>("s/5", &n).is_err());
        assert!(parse_poly::<Fp<5>>("1/10", &n).is_err());
        assert_eq!(p.display(&n).to_string(), "2*s - 2");
    }
}
