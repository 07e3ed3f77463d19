//! Text grammars for polynomials and monomial maps.
//!
//! Offsets in errors count characters, not bytes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial, Rat, VarStyle};
use crate::quadrics::{Component, HyperquadricSignature, MonomialMap, Slot};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        for w in word.chars() {
            if self.chars.get(self.pos) != Some(&w) {
                return Err(Error::Syntax { offset: start, message: format!("expected '{word}'") });
            }
            self.pos += 1;
        }
        Ok(())
    }

    /// Digits immediately at the cursor (no leading whitespace skip).
    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        match self.digits() {
            Some(s) => Ok(s.parse().expect("ascii digits")),
            None => self.error("expected a number"),
        }
    }

    fn small(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        let s = match self.digits() {
            Some(s) => s,
            None => return self.error(format!("expected {what}")),
        };
        s.parse().map_err(|_| Error::Syntax { offset: at, message: format!("{what} too large") })
    }

    /// `a` or `a/b`.
    fn rational(&mut self) -> Result<Rat> {
        let num = self.number()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.number()?;
            if den.is_zero() {
                return Err(Error::Syntax { offset: at, message: "zero denominator".into() });
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

struct RawTerm {
    coeff: Rat,
    vars: Vec<(usize, u32)>,
}

/// Parse with the variable count inferred from the highest index used.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    parse_polynomial_with(text, None)
}

/// Parse `x1..xn` (affine) or `X0..Xn` (projective) polynomials. With
/// `n_vars = None` the count is the highest index used.
pub fn parse_polynomial_with(text: &str, n_vars: Option<usize>) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut style: Option<VarStyle> = None;
    let mut terms: Vec<RawTerm> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rat::one();
        match cur.peek() {
            None if first => return cur.error("empty polynomial"),
            None => return cur.error("expected a term after the sign"),
            Some(c) if c == '+' || is_minus(c) => {
                cur.pos += 1;
                if is_minus(c) {
                    sign = -sign;
                }
            }
            Some(_) if first => {}
            Some(c) => return cur.error(format!("expected '+' or '-', found '{c}'")),
        }
        first = false;
        terms.push(parse_term(&mut cur, &mut style, sign)?);
        if cur.peek().is_none() {
            break;
        }
    }
    let style = style.unwrap_or(VarStyle::Affine);
    let max_index = terms.iter().flat_map(|t| t.vars.iter().map(|v| v.0)).max();
    let needed = match (style, max_index) {
        (VarStyle::Affine, Some(i)) => i,
        (VarStyle::Projective, Some(i)) => i + 1,
        (_, None) => 1,
    };
    let n = match n_vars {
        Some(n) if n < needed => {
            return Err(Error::Input(format!("polynomial uses {needed} variables but {n} were declared")))
        }
        Some(n) => n,
        None => needed,
    };
    let offset = if style == VarStyle::Affine { 1 } else { 0 };
    Ok(Polynomial::from_terms(
        n,
        style,
        terms.into_iter().map(|t| {
            let mut e = vec![0u32; n];
            for (v, k) in t.vars {
                e[v - offset] += k;
            }
            (MultiIndex(e), t.coeff)
        }),
    ))
}

fn parse_term(cur: &mut Cursor, style: &mut Option<VarStyle>, sign: Rat) -> Result<RawTerm> {
    let mut coeff = sign;
    let mut vars = Vec::new();
    let mut any = false;
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff *= cur.rational()?;
            }
            Some(c) if c == 'x' || c == 'X' => {
                let at = cur.pos;
                cur.pos += 1;
                let this = if c == 'x' { VarStyle::Affine } else { VarStyle::Projective };
                match style {
                    Some(s) if *s != this => {
                        return Err(Error::Syntax { offset: at, message: "cannot mix x1.. and X0.. variables".into() })
                    }
                    _ => *style = Some(this),
                }
                let idx = match cur.digits() {
                    Some(s) => s.parse::<usize>().map_err(|_| Error::Syntax { offset: at, message: "variable index too large".into() })?,
                    None => return Err(Error::Syntax { offset: at, message: format!("unknown variable '{c}' (expected {c} followed by an index)") }),
                };
                if this == VarStyle::Affine && idx == 0 {
                    return Err(Error::Syntax { offset: at, message: "unknown variable x0 (affine variables start at x1)".into() });
                }
                let mut e = 1;
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    e = cur.small("an exponent")?;
                }
                vars.push((idx, e));
            }
            Some('*') if any => {
                cur.pos += 1;
                continue;
            }
            Some(c) if c.is_alphabetic() => return cur.error(format!("unknown variable '{c}'")),
            _ => break,
        }
        any = true;
    }
    if !any {
        return match cur.peek() {
            Some(c) => cur.error(format!("expected a coefficient or variable, found '{c}'")),
            None => cur.error("expected a coefficient or variable, found end of input"),
        };
    }
    Ok(RawTerm { coeff, vars })
}

/// `map source=Q(a,b) target=Q(c,d) [ z0^1 z2^1 : +1 ; ... ]`, where each
/// entry is a monomial (or `1`), then the slot sign and `|C|^2`.
pub fn parse_map(text: &str) -> Result<MonomialMap> {
    let mut cur = Cursor::new(text);
    cur.expect_word("map")?;
    cur.expect_word("source=")?;
    let source = parse_signature(&mut cur)?;
    cur.expect_word("target=")?;
    let target = parse_signature(&mut cur)?;
    cur.expect('[')?;
    let n = source.coords();
    let mut components = Vec::new();
    loop {
        if cur.peek() == Some(']') && components.is_empty() {
            return cur.error("a map needs at least one component");
        }
        let mut e = vec![0u32; n];
        let mut any = false;
        loop {
            match cur.peek() {
                Some('z') => {
                    let at = cur.pos;
                    cur.pos += 1;
                    let idx: usize = match cur.digits() {
                        Some(s) => s.parse().map_err(|_| Error::Syntax { offset: at, message: "index too large".into() })?,
                        None => return Err(Error::Syntax { offset: at, message: "expected z followed by an index".into() }),
                    };
                    if idx >= n {
                        return Err(Error::Syntax { offset: at, message: format!("z{idx} is not a source coordinate (z0..z{})", n - 1) });
                    }
                    let mut k = 1;
                    if cur.peek() == Some('^') {
                        cur.pos += 1;
                        k = cur.small("an exponent")?;
                    }
                    e[idx] += k;
                    any = true;
                }
                Some('1') if !any => {
                    cur.pos += 1;
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return cur.error("expected a monomial in z0..");
        }
        cur.expect(':')?;
        let slot = match cur.bump() {
            Some('+') => Slot::Positive,
            Some(c) if is_minus(c) => Slot::Negative,
            _ => {
                cur.pos = cur.pos.saturating_sub(1);
                return cur.error("expected '+' or '-' before the weight");
            }
        };
        let weight = cur.rational()?;
        components.push(Component { weight, exponent: e, slot });
        match cur.bump() {
            Some(';') => continue,
            Some(']') => break,
            _ => {
                cur.pos = cur.pos.saturating_sub(1);
                return cur.error("expected ';' or ']'");
            }
        }
    }
    if let Some(c) = cur.peek() {
        return cur.error(format!("unexpected '{c}' after the map"));
    }
    MonomialMap::new(source, target, components)
}

fn parse_signature(cur: &mut Cursor) -> Result<HyperquadricSignature> {
    cur.expect('Q')?;
    cur.expect('(')?;
    let a = cur.small("a count")? as usize;
    cur.expect(',')?;
    let b = cur.small("a count")? as usize;
    cur.expect(')')?;
    HyperquadricSignature::new(a, b)
}
