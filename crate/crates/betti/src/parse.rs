//! Expression parser for homogeneous polynomials.
//!
//! Grammar: terms separated by `+`/`-`; a term is an optional rational
//! coefficient (`3`, `1/2`) followed by variable factors (`x1^2*x2`, `x*y`).
//! Variables are `x1..x9` or the single letters `x,y,z,w,u,v`; implicit
//! multiplication between coefficient and variable is allowed.

use num_traits::One;

use crate::oracle::{HomogeneousIdeal, HomogeneousPolynomial, Monomial};
use crate::rational::Rational;
use crate::{Error, Result};

const LETTER_VARS: [char; 6] = ['x', 'y', 'z', 'w', 'u', 'v'];

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.text[char_byte(self.text, start)..char_byte(self.text, self.pos)]
            .parse()
            .ok()
    }
}

fn char_byte(s: &str, char_idx: usize) -> usize {
    s.char_indices()
        .nth(char_idx)
        .map(|(b, _)| b)
        .unwrap_or(s.len())
}

/// Parses a homogeneous polynomial in `n` declared variables.
pub fn parse_polynomial(text: &str, n: usize) -> Result<HomogeneousPolynomial> {
    let mut s = Scanner::new(text);
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    s.skip_ws();
    if s.peek().is_none() {
        return Err(Error::SyntaxError(0, "empty polynomial".into()));
    }
    let mut first = true;
    loop {
        s.skip_ws();
        let sign = if s.eat('-') {
            -1
        } else if s.eat('+') {
            1
        } else if first {
            1
        } else if s.peek().is_none() {
            break;
        } else {
            return Err(Error::SyntaxError(
                s.pos,
                format!("expected '+' or '-', found {:?}", s.peek().unwrap()),
            ));
        };
        first = false;
        s.skip_ws();
        let (monomial, coeff) = parse_term(&mut s, n)?;
        terms.push((monomial, coeff * Rational::from_integer(sign.into())));
        s.skip_ws();
        if s.peek().is_none() {
            break;
        }
    }
    HomogeneousPolynomial::new(n, terms).map_err(|e| match e {
        Error::NotHomogeneous => Error::InhomogeneousPolynomial,
        other => other,
    })
}

fn parse_term(s: &mut Scanner<'_>, n: usize) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut exponents = vec![0u32; n];
    let mut saw_factor = false;

    if s.peek().is_some_and(|c| c.is_ascii_digit()) {
        let pos = s.pos;
        let numer = s
            .integer()
            .ok_or_else(|| Error::SyntaxError(pos, "bad integer".into()))?;
        let denom = if s.eat('/') {
            let pos = s.pos;
            let d = s
                .integer()
                .ok_or_else(|| Error::SyntaxError(pos, "expected denominator".into()))?;
            if d == 0 {
                return Err(Error::SyntaxError(pos, "zero denominator".into()));
            }
            d
        } else {
            1
        };
        coeff = crate::rational::rat(numer, denom);
        saw_factor = true;
        s.skip_ws();
        s.eat('*');
    }

    loop {
        s.skip_ws();
        match s.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let pos = s.pos;
                s.bump();
                let var = if c == 'x' && s.peek().is_some_and(|d| d.is_ascii_digit()) {
                    let d = s.bump().unwrap().to_digit(10).unwrap() as usize;
                    if d == 0 {
                        return Err(Error::UnknownVariable(pos, "x0".into()));
                    }
                    d - 1
                } else {
                    match LETTER_VARS.iter().position(|&l| l == c) {
                        Some(k) => k,
                        None => return Err(Error::UnknownVariable(pos, c.to_string())),
                    }
                };
                if var >= n {
                    return Err(Error::UnknownVariable(
                        pos,
                        format!("variable index {} exceeds declared count {n}", var + 1),
                    ));
                }
                let exp = if s.eat('^') {
                    let pos = s.pos;
                    let e = s
                        .integer()
                        .ok_or_else(|| Error::SyntaxError(pos, "expected exponent".into()))?;
                    if e < 0 {
                        return Err(Error::SyntaxError(pos, "negative exponent".into()));
                    }
                    e as u32
                } else {
                    1
                };
                exponents[var] += exp;
                saw_factor = true;
                s.skip_ws();
                s.eat('*');
            }
            _ => break,
        }
    }

    if !saw_factor {
        return Err(Error::SyntaxError(
            s.pos,
            format!("expected a term, found {:?}", s.peek()),
        ));
    }
    Ok((Monomial::new(exponents), coeff))
}

/// Parses a comma-separated generator list into a homogeneous ideal.
pub fn parse_ideal(text: &str, n: usize) -> Result<HomogeneousIdeal> {
    let generators = text
        .split(',')
        .map(|g| parse_polynomial(g, n))
        .collect::<Result<Vec<_>>>()?;
    HomogeneousIdeal::new(n, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn simple_monomial() {
        let p = parse_polynomial("x1*x2", 3).unwrap();
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(m.exponents(), &[1, 1, 0]);
        assert_eq!(c, &int(1));
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn difference_of_squares() {
        let p = parse_polynomial("x1^2 - x2^2", 3).unwrap();
        assert_eq!(p.degree(), 2);
        let terms: Vec<_> = p.terms().collect();
        assert_eq!(terms.len(), 2);
    }

    #[test]
    fn inhomogeneous_is_rejected() {
        assert!(matches!(
            parse_polynomial("x1^2 + x2", 3),
            Err(Error::InhomogeneousPolynomial)
        ));
    }

    #[test]
    fn letters_coefficients_and_implicit_mul() {
        let p = parse_polynomial("3x*y", 2).unwrap();
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(m.exponents(), &[1, 1]);
        assert_eq!(c, &int(3));

        let p = parse_polynomial("1/2 x^2 - 2y^2", 2).unwrap();
        let mut terms: Vec<_> = p
            .terms()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
            .collect();
        terms.sort();
        assert_eq!(
            terms,
            vec![(vec![0, 2], int(-2)), (vec![2, 0], rat(1, 2))]
        );
    }

    #[test]
    fn unknown_variable_and_syntax_errors() {
        assert!(matches!(
            parse_polynomial("x1*q", 3),
            Err(Error::UnknownVariable(..))
        ));
        assert!(matches!(
            parse_polynomial("x4", 3),
            Err(Error::UnknownVariable(..))
        ));
        assert!(matches!(
            parse_polynomial("x1 +", 3),
            Err(Error::SyntaxError(..))
        ));
        assert!(matches!(
            parse_polynomial("", 3),
            Err(Error::SyntaxError(..))
        ));
    }

    #[test]
    fn ideal_list() {
        let ideal = parse_ideal("x1*x2, x2*x3, x1*x3", 3).unwrap();
        assert_eq!(ideal.generators().len(), 3);
        assert!(ideal.is_monomial());
    }
}
