//! Text forms for polynomials, Laurent symbols, and exact rationals.
//!
//! Grammar (ASCII, whitespace-insensitive):
//! - rationals: `3`, `-3`, `1/2`, `0.5` (decimals are exact);
//! - polynomials in `x`: sums of terms `c`, `x`, `c x^k`, `c*x^k`, plus the
//!   Chebyshev shorthand `T3` (optionally with a coefficient);
//! - symbols: `{-1: 1, 0: 3, 2: 1/2}` maps Fourier degree to coefficient.
//!
//! Printers invert the parsers exactly: `parse(print(v)) == v`.

use anyhow::{bail, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use boe_core::laurent::LaurentPoly;
use boe_core::poly::{chebyshev_t, RealPoly};

struct Scanner<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.bump() {
            Some(got) if got == b => Ok(()),
            _ => bail!(
                "expected '{}' at byte {} of {:?}",
                b as char,
                self.pos.saturating_sub(1),
                self.text
            ),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn fail(&self, what: &str) -> anyhow::Error {
        anyhow::anyhow!("{} at byte {} of {:?}", what, self.pos, self.text)
    }

    /// Unsigned integer digits.
    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected digits"));
        }
        Ok(&self.text[start..self.pos])
    }

    /// Signed integer.
    fn integer(&mut self) -> Result<BigInt> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits = self.digits()?;
        let mut v: BigInt = digits.parse().expect("digit string");
        if negative {
            v = -v;
        }
        Ok(v)
    }

    /// Rational: integer, `a/b`, or exact decimal.
    fn rational(&mut self) -> Result<BigRational> {
        let numer = self.integer()?;
        match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                let denom = self.integer()?;
                if denom.is_zero() {
                    return Err(self.fail("zero denominator"));
                }
                Ok(BigRational::new(numer, denom))
            }
            Some(b'.') => {
                self.pos += 1;
                let frac = self.digits()?;
                let scale = BigInt::from(10u32).pow(frac.len() as u32);
                let frac_int: BigInt = frac.parse().expect("digit string");
                let signed_frac = if numer.is_negative() { -frac_int } else { frac_int };
                Ok(BigRational::new(numer * &scale + signed_frac, scale))
            }
            _ => Ok(BigRational::from(numer)),
        }
    }

    /// Does a rational start here? (digit, or minus/dot followed by digit)
    fn starts_rational(&mut self) -> bool {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => true,
            Some(b'-') => matches!(self.bytes.get(self.pos + 1), Some(d) if d.is_ascii_digit()),
            _ => false,
        }
    }
}

/// Exact rational from text (`3`, `-1/2`, `0.25`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut sc = Scanner::new(text);
    let v = sc.rational()?;
    if !sc.at_end() {
        return Err(sc.fail("trailing input"));
    }
    Ok(v)
}

/// One additive term: optional coefficient, optional `*`, then `x`, `x^k`,
/// or `Tk`; at least one of coefficient/variable present.
fn term(sc: &mut Scanner) -> Result<RealPoly<BigRational>> {
    let coeff = if sc.starts_rational() { Some(sc.rational()?) } else { None };
    if coeff.is_some() && sc.peek() == Some(b'*') {
        sc.pos += 1;
    }
    let var: Option<RealPoly<BigRational>> = match sc.peek() {
        Some(b'x') => {
            sc.pos += 1;
            let power = if sc.peek() == Some(b'^') {
                sc.pos += 1;
                let digits = sc.digits()?;
                digits.parse::<usize>().map_err(|_| sc.fail("exponent too large"))?
            } else {
                1
            };
            Some(RealPoly::monomial(power))
        }
        Some(b'T') => {
            sc.pos += 1;
            let digits = sc.digits()?;
            let k = digits.parse::<usize>().map_err(|_| sc.fail("Chebyshev index too large"))?;
            Some(chebyshev_t(k))
        }
        _ => None,
    };
    match (coeff, var) {
        (Some(c), Some(v)) => Ok(v.scale(&c)),
        (Some(c), None) => Ok(RealPoly::constant(c)),
        (None, Some(v)) => Ok(v),
        (None, None) => Err(sc.fail("expected a term")),
    }
}

/// Polynomial in `x` with exact rational coefficients; `T<k>` expands to the
/// Chebyshev polynomial of the first kind.
pub fn parse_polynomial(text: &str) -> Result<RealPoly<BigRational>> {
    let mut sc = Scanner::new(text);
    let mut total: RealPoly<BigRational> = RealPoly::zero();
    let mut negate = match sc.peek() {
        Some(b'+') => {
            sc.pos += 1;
            false
        }
        Some(b'-') => {
            sc.pos += 1;
            true
        }
        Some(_) => false,
        None => return Err(sc.fail("empty polynomial")),
    };
    loop {
        let t = term(&mut sc)?;
        total = if negate { total.sub(&t) } else { total.add(&t) };
        match sc.peek() {
            Some(b'+') => {
                sc.pos += 1;
                negate = false;
            }
            Some(b'-') => {
                sc.pos += 1;
                negate = true;
            }
            None => return Ok(total),
            Some(_) => return Err(sc.fail("expected '+', '-', or end")),
        }
    }
}

/// Laurent symbol from a `{degree: coefficient, …}` map. Duplicate degrees
/// are rejected; `{}` is the zero symbol.
pub fn parse_symbol(text: &str) -> Result<LaurentPoly<BigRational>> {
    let mut sc = Scanner::new(text);
    sc.expect(b'{')?;
    let mut pairs: Vec<(i64, BigRational)> = Vec::new();
    if sc.peek() == Some(b'}') {
        sc.pos += 1;
    } else {
        loop {
            let degree_big = sc.integer()?;
            let degree = i64::try_from(&degree_big).map_err(|_| sc.fail("degree out of range"))?;
            sc.expect(b':')?;
            let coeff = sc.rational()?;
            if pairs.iter().any(|(k, _)| *k == degree) {
                return Err(sc.fail("duplicate degree"));
            }
            pairs.push((degree, coeff));
            match sc.bump() {
                Some(b',') => continue,
                Some(b'}') => break,
                _ => return Err(sc.fail("expected ',' or '}'")),
            }
        }
    }
    if !sc.at_end() {
        return Err(sc.fail("trailing input"));
    }
    Ok(LaurentPoly::from_pairs(pairs))
}

/// `3`, `-1/2` — denominator shown only when it is not 1.
pub fn rational_string(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Inverse of [`parse_polynomial`] (monomial form, highest degree first).
pub fn print_polynomial(p: &RealPoly<BigRational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for k in (0..=p.degree()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coeff_text = rational_string(&magnitude);
        if k == 0 {
            out.push_str(&coeff_text);
        } else {
            if !magnitude.is_one() {
                out.push_str(&coeff_text);
            }
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    out
}

/// Inverse of [`parse_symbol`] (degrees ascending).
pub fn print_symbol(s: &LaurentPoly<BigRational>) -> String {
    let entries: Vec<String> =
        s.support().map(|(k, c)| format!("{k}: {}", rational_string(c))).collect();
    format!("{{{}}}", entries.join(", "))
}

/// Comma-separated list of integers (`"200,400,800"`).
pub fn parse_integer_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| anyhow::anyhow!("bad integer {:?} in list {:?}", part, text))
        })
        .collect()
}

/// Comma-separated list of rationals (`"1,1/2"`).
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    text.split(',').map(|part| parse_rational(part.trim())).collect()
}
