//! Text formats: matrix CSV, and polynomial JSON and text forms.
//!
//! Every number is written exactly, as an integer or `p/q`. Decimal notation
//! is rejected on input.
//!
//! Polynomials are written term by term in canonical monomial order (total
//! degree, then x-exponent, ascending). The text form is
//! `c1*x^a1*y^b1 + c2*x^a2*y^b2 + ...` where a zero exponent drops its
//! factor and the zero polynomial is `0`. The JSON form is an array of
//! `{"xexp", "yexp", "num", "den"}` records.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::grid::RatMatrix;
use crate::poly::{BiPoly, Monomial};
use crate::{Error, Rational, Result};

pub fn rational_to_string(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `n`, `-n`, `p/q` or `-p/q` with `q > 0`. `line` and `column` are
/// only used to locate errors.
pub fn parse_rational_at(token: &str, line: usize, column: usize) -> Result<Rational> {
    let t = token.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(Error::parse(
            line,
            column,
            format!("'{t}': decimal notation is not accepted, write p/q"),
        ));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (body, None),
    };
    let Some(mut num) = parse_digits(num.trim()) else {
        return Err(Error::parse(
            line,
            column,
            format!("'{t}' is not a rational"),
        ));
    };
    let den = match den {
        None => BigInt::one(),
        Some(q) => match parse_digits(q.trim()) {
            Some(q) if q.is_positive() => q,
            Some(_) => {
                return Err(Error::parse(
                    line,
                    column,
                    format!("'{t}': zero denominator"),
                ))
            }
            None => {
                return Err(Error::parse(
                    line,
                    column,
                    format!("'{t}': denominator must be a positive integer"),
                ))
            }
        },
    };
    if neg {
        num = -num;
    }
    Ok(Rational::new(num, den))
}

pub fn parse_rational(token: &str) -> Result<Rational> {
    parse_rational_at(token, 1, 1)
}

/// Cells of a matrix CSV where `None` marks a `?` placeholder.
pub type HoledRows = Vec<Vec<Option<Rational>>>;

fn parse_rows(text: &str, allow_holes: bool) -> Result<HoledRows> {
    let mut rows: HoledRows = Vec::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        last_line = lineno;
        let mut row = Vec::new();
        for (cidx, tok) in line.split(',').enumerate() {
            let tok = tok.trim();
            if tok == "?" {
                if !allow_holes {
                    return Err(Error::parse(
                        lineno,
                        cidx + 1,
                        "'?' placeholders are only accepted by completion",
                    ));
                }
                row.push(None);
            } else if tok.is_empty() {
                return Err(Error::parse(lineno, cidx + 1, "empty entry"));
            } else {
                row.push(Some(parse_rational_at(tok, lineno, cidx + 1)?));
            }
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::parse(
                    lineno,
                    row.len().min(first.len()) + 1,
                    format!(
                        "ragged row: {} entries, expected {}",
                        row.len(),
                        first.len()
                    ),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(1, 1, "empty matrix"));
    }
    if rows.len() != rows[0].len() {
        return Err(Error::parse(
            last_line,
            1,
            format!(
                "matrix is not square: {} rows of {} entries",
                rows.len(),
                rows[0].len()
            ),
        ));
    }
    Ok(rows)
}

/// Parses a square matrix CSV: one row per line, integer or `p/q` entries,
/// whitespace ignored, blank lines skipped.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let rows = parse_rows(text, false)?;
    RatMatrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(|v| v.expect("holes rejected")).collect())
            .collect(),
    )
}

/// Like [`parse_matrix`] but also accepts `?` cells.
pub fn parse_matrix_with_holes(text: &str) -> Result<HoledRows> {
    parse_rows(text, true)
}

pub fn matrix_to_csv(m: &RatMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(rational_to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn term_to_text(m: &Monomial, c: &Rational) -> String {
    let mut s = rational_to_string(c);
    if m.x > 0 {
        s.push_str(&format!("*x^{}", m.x));
    }
    if m.y > 0 {
        s.push_str(&format!("*y^{}", m.y));
    }
    s
}

pub fn poly_to_text(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.terms()
        .map(|(m, c)| term_to_text(m, c))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn parse_exponent(factor: &str, var: char, column: usize) -> Result<u32> {
    let rest = &factor[var.len_utf8()..];
    if rest.is_empty() {
        return Ok(1);
    }
    let Some(e) = rest.strip_prefix('^') else {
        return Err(Error::parse(1, column, format!("bad factor '{factor}'")));
    };
    e.trim()
        .parse()
        .map_err(|_| Error::parse(1, column, format!("bad exponent in '{factor}'")))
}

/// Parses the text form written by [`poly_to_text`]. Coefficients may be
/// omitted (`x^2*y`), and repeated monomials are summed.
pub fn poly_from_text(text: &str) -> Result<BiPoly> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse(1, 1, "empty polynomial"));
    }
    let mut p = BiPoly::zero();
    let mut offset = 0;
    for term in text.split('+') {
        let column = offset + 1;
        offset += term.len() + 1;
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(1, column, "empty term"));
        }
        let mut coeff: Option<Rational> = None;
        let (mut a, mut b) = (0u32, 0u32);
        for factor in term.split('*') {
            let mut factor = factor.trim();
            if let Some(rest) = factor.strip_prefix('-') {
                if rest.starts_with(['x', 'y']) && coeff.is_none() {
                    coeff = Some(-Rational::one());
                    factor = rest;
                }
            }
            if factor.starts_with('x') {
                a += parse_exponent(factor, 'x', column)?;
            } else if factor.starts_with('y') {
                b += parse_exponent(factor, 'y', column)?;
            } else if coeff.is_none() {
                coeff = Some(parse_rational_at(factor, 1, column)?);
            } else {
                return Err(Error::parse(
                    1,
                    column,
                    format!("two coefficients in '{term}'"),
                ));
            }
        }
        p.add_term(Monomial::new(a, b), coeff.unwrap_or_else(Rational::one));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub xexp: u32,
    pub yexp: u32,
    pub num: String,
    pub den: String,
}

pub fn poly_to_records(p: &BiPoly) -> Vec<TermRecord> {
    p.terms()
        .map(|(m, c)| TermRecord {
            xexp: m.x,
            yexp: m.y,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn poly_to_json(p: &BiPoly) -> String {
    serde_json::to_string(&poly_to_records(p)).expect("term records serialize")
}

pub fn poly_from_records(records: &[TermRecord]) -> Result<BiPoly> {
    let mut p = BiPoly::zero();
    for (k, r) in records.iter().enumerate() {
        let c = parse_rational_at(&format!("{}/{}", r.num, r.den), 1, k + 1)?;
        p.add_term(Monomial::new(r.xexp, r.yexp), c);
    }
    Ok(p)
}

pub fn poly_from_json(text: &str) -> Result<BiPoly> {
    let records: Vec<TermRecord> = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            e.line(),
            e.column(),
            format!("invalid polynomial JSON: {e}"),
        )
    })?;
    poly_from_records(&records)
}

/// Reads either polynomial format, choosing JSON when the text starts with
/// `[`.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    if text.trim_start().starts_with('[') {
        poly_from_json(text)
    } else {
        poly_from_text(text)
    }
}
