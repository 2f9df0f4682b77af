//! Exact dense linear algebra over the rationals.
//!
//! Rows are first scaled to integers, then reduced with fraction-free
//! (Bareiss) elimination so intermediate entries stay integral and bounded by
//! minors of the input. Pivots are chosen as the first nonzero entry in row
//! order, which makes every result a deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// A dense system `A x = b`, or `A x = 0` when `rhs` is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinSystem {
    pub coefficients: Vec<Vec<Rational>>,
    pub rhs: Option<Vec<Rational>>,
}

impl LinSystem {
    pub fn new(coefficients: Vec<Vec<Rational>>, rhs: Option<Vec<Rational>>) -> Result<Self> {
        let cols = coefficients.first().map_or(0, Vec::len);
        if coefficients.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged coefficient rows".into()));
        }
        if let Some(b) = &rhs {
            if b.len() != coefficients.len() {
                return Err(Error::Dimension(format!(
                    "{} equations but right-hand side of length {}",
                    coefficients.len(),
                    b.len()
                )));
            }
        }
        Ok(LinSystem { coefficients, rhs })
    }

    /// Unique solution of a square system; a homogeneous system is solved
    /// with a zero right-hand side.
    pub fn solve(&self) -> Result<Vec<Rational>> {
        match &self.rhs {
            Some(b) => solve(&self.coefficients, b),
            None => solve(
                &self.coefficients,
                &vec![Rational::zero(); self.coefficients.len()],
            ),
        }
    }

    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        nullspace(&self.coefficients)
    }
}

/// Multiplies a row by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Fraction-free row echelon form. Only the first `pivot_cols` columns are
/// eligible as pivots. Returns the reduced rows and the pivot column of each
/// leading row.
fn bareiss_echelon(m: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact unique solution of the square system `a x = b`.
///
/// Fails with [`Error::Singular`] (carrying the rank found) when `a` is
/// singular, whether or not `b` happens to lie in its column space.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!("{n}-row system is not square")));
    }
    if b.len() != n {
        return Err(Error::Dimension(format!(
            "system of order {n} with right-hand side of length {}",
            b.len()
        )));
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut full = row.clone();
            full.push(bi.clone());
            integer_row(&full)
        })
        .collect();
    let pivots = bareiss_echelon(&mut m, n);
    if pivots.len() < n {
        return Err(Error::Singular {
            order: n,
            rank: pivots.len(),
        });
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    bareiss_echelon(&mut m, cols).len()
}

/// Scales a vector to coprime integers with its first nonzero entry positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g * &sign))
        .collect()
}

/// Basis of the kernel of `a`.
///
/// One vector per free column, in column order, each the reduced-echelon
/// kernel vector for that free variable scaled to primitive integers with a
/// positive first nonzero entry. Empty iff `a` has full column rank.
pub fn nullspace(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    nullspace_with_columns(a, cols)
}

/// [`nullspace`] for a matrix whose column count is given explicitly, so a
/// matrix with no rows still has a well-defined kernel.
pub fn nullspace_with_columns(a: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    let pivots = bareiss_echelon(&mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in p + 1..cols {
                    if !m[row][j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(m[row][j].clone()) * &v[j];
                    }
                }
                v[p] = -acc / Rational::from_integer(m[row][p].clone());
            }
            primitive(&v)
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}
