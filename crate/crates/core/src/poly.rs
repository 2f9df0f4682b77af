//! Sparse bivariate polynomials over the rationals and the discrete Laplacian
//! acting on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::{rat, Rational};

/// Exponent pair of `x^x * y^y`.
///
/// Ordered by total degree, then by x-exponent, both ascending. This is the
/// canonical order for storage, serialization and coefficient vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    /// Position in the canonical order, counting from the constant monomial.
    pub fn index(self) -> usize {
        let d = self.degree() as usize;
        d * (d + 1) / 2 + self.x as usize
    }

    pub fn from_index(index: usize) -> Self {
        let mut d = 0usize;
        while (d + 1) * (d + 2) / 2 <= index {
            d += 1;
        }
        let x = index - d * (d + 1) / 2;
        Monomial::new(x as u32, (d - x) as u32)
    }

    /// Number of monomials of total degree at most `n`.
    pub fn count_up_to(n: u32) -> usize {
        let n = n as usize;
        (n + 1) * (n + 2) / 2
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.x).cmp(&(other.degree(), other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A bivariate polynomial with rational coefficients.
///
/// No stored coefficient is ever zero, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// `c * x^a * y^b` with a small rational coefficient.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        BiPoly::term(Monomial::new(a, b), c)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, Rational::one())
    }

    /// Builds a polynomial from `(num, den, x_exp, y_exp)` tuples; repeated
    /// monomials are summed.
    pub fn from_small_terms(terms: &[(i64, i64, u32, u32)]) -> Self {
        let mut p = BiPoly::zero();
        for &(num, den, a, b) in terms {
            p.add_term(Monomial::new(a, b), rat(num, den));
        }
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&Monomial::new(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// The polynomial with the roles of `x` and `y` exchanged.
    pub fn swap_xy(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let (max_x, max_y) = self
            .terms
            .keys()
            .fold((0, 0), |(mx, my), m| (mx.max(m.x), my.max(m.y)));
        let xp = powers(x, max_x);
        let yp = powers(y, max_y);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            acc += c * &xp[m.x as usize] * &yp[m.y as usize];
        }
        acc
    }

    pub fn eval_int(&self, x: i64, y: i64) -> Rational {
        self.eval(
            &Rational::from_integer(x.into()),
            &Rational::from_integer(y.into()),
        )
    }

    /// Coefficients as a dense vector over the monomials of degree at most
    /// `n`, in canonical order. Terms above degree `n` are ignored.
    pub fn to_vector(&self, n: u32) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); Monomial::count_up_to(n)];
        for (m, c) in &self.terms {
            if m.degree() <= n {
                v[m.index()] = c.clone();
            }
        }
        v
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        BiPoly::from_terms(
            v.iter()
                .enumerate()
                .map(|(i, c)| (Monomial::from_index(i), c.clone())),
        )
    }

    /// Largest monomial in canonical order with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

fn powers(v: &Rational, n: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    for k in 1..=n as usize {
        let next = &out[k - 1] * v;
        out.push(next);
    }
    out
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), ca * cb);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::poly_to_text(self))
    }
}

/// Which variable a univariate monomial lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients of the one-dimensional stencil `2v^n - (v-1)^n - (v+1)^n` as
/// `(exponent, coefficient)` pairs.
fn laplacian_monomial_coeffs(n: u32) -> Vec<(u32, BigInt)> {
    if n < 2 {
        return Vec::new();
    }
    // Only exponents of the same parity as n, strictly below n, survive.
    let start = n % 2;
    (start..n)
        .step_by(2)
        .map(|k| (k, BigInt::from(-2) * binomial(n, k)))
        .collect()
}

/// Discrete Laplacian of the single-variable monomial `v^n`, as its
/// contribution `2v^n - (v-1)^n - (v+1)^n` to the two-dimensional stencil.
pub fn laplacian_monomial(n: u32, var: Var) -> BiPoly {
    BiPoly::from_terms(laplacian_monomial_coeffs(n).into_iter().map(|(k, c)| {
        let m = match var {
            Var::X => Monomial::new(k, 0),
            Var::Y => Monomial::new(0, k),
        };
        (m, Rational::from_integer(c))
    }))
}

/// The five-point discrete Laplacian applied to a polynomial as a function on
/// the whole plane.
pub fn discrete_laplacian_poly(p: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (m, c) in p.terms() {
        for (k, lc) in laplacian_monomial_coeffs(m.y) {
            out.add_term(Monomial::new(m.x, k), c * Rational::from_integer(lc));
        }
        for (k, lc) in laplacian_monomial_coeffs(m.x) {
            out.add_term(Monomial::new(k, m.y), c * Rational::from_integer(lc));
        }
    }
    out
}

pub fn is_discrete_harmonic(p: &BiPoly) -> bool {
    discrete_laplacian_poly(p).is_zero()
}

/// A graded basis of the discrete harmonic polynomials of degree at most
/// `max_degree`: one constant, then two elements per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DHBasis {
    pub max_degree: u32,
    pub elements: Vec<BiPoly>,
}

impl DHBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of exact degree `k`.
    pub fn of_degree(&self, k: u32) -> Vec<&BiPoly> {
        self.elements
            .iter()
            .filter(|p| p.degree() == k as i64)
            .collect()
    }

    /// Matrix whose columns are the coefficient vectors of the elements.
    pub fn coefficient_columns(&self) -> Vec<Vec<Rational>> {
        let vectors: Vec<Vec<Rational>> = self
            .elements
            .iter()
            .map(|p| p.to_vector(self.max_degree))
            .collect();
        let rows = Monomial::count_up_to(self.max_degree);
        (0..rows)
            .map(|r| vectors.iter().map(|v| v[r].clone()).collect())
            .collect()
    }
}

/// The matrix of the discrete Laplacian from polynomials of degree `<= n` to
/// polynomials of degree `<= n - 2`, both in canonical monomial order.
fn laplacian_operator_matrix(n: u32) -> Vec<Vec<Rational>> {
    let cols = Monomial::count_up_to(n);
    let rows = if n >= 2 {
        Monomial::count_up_to(n - 2)
    } else {
        0
    };
    let mut a = vec![vec![Rational::zero(); cols]; rows];
    for (col, row_vals) in (0..cols).map(|c| {
        let m = Monomial::from_index(c);
        (
            c,
            discrete_laplacian_poly(&BiPoly::term(m, Rational::one())),
        )
    }) {
        for (m, c) in row_vals.terms() {
            a[m.index()][col] = c.clone();
        }
    }
    a
}

/// Generates a basis of the discrete harmonic polynomials up to degree `n`.
///
/// The kernel of the Laplacian is taken in reduced echelon form with the
/// monomials ordered ascending, so each element is tagged by a distinct
/// leading monomial and the list comes out graded by degree. Every element is
/// a primitive integer polynomial with positive leading coefficient.
pub fn generate_basis(n: u32) -> DHBasis {
    let a = laplacian_operator_matrix(n);
    let cols = Monomial::count_up_to(n);
    let kernel = linalg::nullspace_with_columns(&a, cols);
    let elements = kernel
        .into_iter()
        .map(|v| {
            let p = BiPoly::from_vector(&v);
            match p.leading_term() {
                Some((_, c)) if c.is_negative() => -p,
                _ => p,
            }
        })
        .collect();
    DHBasis {
        max_degree: n,
        elements,
    }
}

/// The reference basis `U_0 .. U_18` of discrete harmonic polynomials up to
/// degree 9.
///
/// `U_15` carries `-x y^7`. With `+x y^7` its top-degree part would not be
/// harmonic and its Laplacian would be `-28xy - 140xy^3 - 84xy^5`.
pub fn appendix_basis() -> DHBasis {
    let u: Vec<&[(i64, i64, u32, u32)]> = vec![
        &[(1, 1, 0, 0)],
        &[(1, 1, 0, 1)],
        &[(1, 1, 1, 0)],
        &[(1, 1, 1, 1)],
        &[(1, 1, 2, 0), (-1, 1, 0, 2)],
        &[(-3, 1, 2, 1), (1, 1, 0, 3)],
        &[(1, 1, 3, 0), (-3, 1, 1, 2)],
        &[(1, 1, 3, 1), (-1, 1, 1, 3)],
        &[(1, 1, 4, 0), (-2, 1, 2, 0), (-6, 1, 2, 2), (1, 1, 0, 4)],
        &[(5, 1, 4, 1), (-10, 1, 2, 3), (-10, 1, 2, 1), (1, 1, 0, 5)],
        &[(1, 1, 5, 0), (-10, 1, 3, 2), (5, 1, 1, 4), (-10, 1, 1, 2)],
        &[(1, 1, 5, 1), (-10, 3, 3, 3), (-10, 3, 1, 3), (1, 1, 1, 5)],
        &[
            (-15, 1, 4, 2),
            (-10, 1, 4, 0),
            (10, 1, 2, 0),
            (15, 1, 2, 4),
            (30, 1, 2, 2),
            (-1, 1, 0, 6),
            (1, 1, 6, 0),
        ],
        &[
            (35, 1, 4, 3),
            (70, 1, 4, 1),
            (-21, 1, 2, 5),
            (-70, 1, 2, 3),
            (-70, 1, 2, 1),
            (1, 1, 0, 7),
            (-7, 1, 6, 1),
        ],
        &[
            (-21, 1, 5, 2),
            (-70, 1, 3, 2),
            (35, 1, 3, 4),
            (-7, 1, 1, 6),
            (70, 1, 1, 4),
            (-70, 1, 1, 2),
            (1, 1, 7, 0),
        ],
        &[
            (-7, 1, 5, 3),
            (7, 1, 3, 5),
            (-70, 3, 3, 3),
            (-70, 3, 1, 3),
            (-1, 1, 1, 7),
            (14, 1, 1, 5),
            (1, 1, 7, 1),
        ],
        &[
            (-140, 1, 4, 2),
            (70, 1, 4, 4),
            (-140, 1, 4, 0),
            (166, 1, 2, 0),
            (-28, 1, 2, 6),
            (280, 1, 2, 4),
            (560, 1, 2, 2),
            (1, 1, 0, 8),
            (-28, 1, 0, 6),
            (1, 1, 8, 0),
            (-28, 1, 6, 2),
        ],
        &[
            (126, 1, 5, 4),
            (-252, 1, 5, 2),
            (-84, 1, 3, 6),
            (-840, 1, 3, 2),
            (840, 1, 3, 4),
            (9, 1, 1, 8),
            (-252, 1, 1, 6),
            (1260, 1, 1, 4),
            (-1026, 1, 1, 2),
            (1, 1, 9, 0),
            (-36, 1, 7, 2),
        ],
        &[
            (840, 1, 4, 3),
            (126, 1, 4, 5),
            (1260, 1, 4, 1),
            (-252, 1, 2, 5),
            (-36, 1, 2, 7),
            (-840, 1, 2, 3),
            (-1026, 1, 2, 1),
            (1, 1, 0, 9),
            (9, 1, 8, 1),
            (-84, 1, 6, 3),
            (-252, 1, 6, 1),
        ],
    ];
    DHBasis {
        max_degree: 9,
        elements: u.into_iter().map(BiPoly::from_small_terms).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn p(terms: &[(i64, i64, u32, u32)]) -> BiPoly {
        BiPoly::from_small_terms(terms)
    }

    #[test]
    fn monomial_index_round_trip() {
        for i in 0..200 {
            assert_eq!(Monomial::from_index(i).index(), i);
        }
        assert_eq!(Monomial::new(0, 0).index(), 0);
        assert_eq!(Monomial::new(0, 1).index(), 1);
        assert_eq!(Monomial::new(1, 0).index(), 2);
        assert_eq!(Monomial::new(0, 2).index(), 3);
    }

    #[test]
    fn laplacian_of_univariate_monomials() {
        assert_eq!(laplacian_monomial(2, Var::X), BiPoly::constant(int(-2)));
        assert_eq!(laplacian_monomial(3, Var::X), p(&[(-6, 1, 1, 0)]));
        assert!(laplacian_monomial(1, Var::Y).is_zero());
        assert!(laplacian_monomial(0, Var::Y).is_zero());
        assert_eq!(
            laplacian_monomial(4, Var::Y),
            p(&[(-2, 1, 0, 0), (-12, 1, 0, 2)])
        );
    }

    #[test]
    fn laplacian_examples() {
        let u8 = p(&[(1, 1, 4, 0), (-2, 1, 2, 0), (-6, 1, 2, 2), (1, 1, 0, 4)]);
        assert!(discrete_laplacian_poly(&u8).is_zero());
        let harmonic_only = p(&[(1, 1, 4, 0), (-6, 1, 2, 2), (1, 1, 0, 4)]);
        assert_eq!(
            discrete_laplacian_poly(&harmonic_only),
            BiPoly::constant(int(-4))
        );
        assert!(is_discrete_harmonic(&p(&[(1, 1, 1, 1)])));
        assert!(!is_discrete_harmonic(&p(&[(1, 1, 3, 0), (1, 1, 0, 3)])));
        assert!(is_discrete_harmonic(&BiPoly::zero()));
    }

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(BiPoly::zero().degree(), -1);
        assert_eq!(BiPoly::constant(int(3)).degree(), 0);
        assert_eq!(p(&[(1, 1, 2, 3), (1, 1, 4, 0)]).degree(), 5);
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let a = p(&[(1, 2, 1, 1), (1, 1, 0, 0)]);
        let b = p(&[(1, 2, 1, 1)]);
        assert_eq!(&a - &b, BiPoly::constant(int(1)));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn small_bases() {
        let b0 = generate_basis(0);
        assert_eq!(b0.elements, vec![BiPoly::constant(int(1))]);
        let b1 = generate_basis(1);
        assert_eq!(b1.len(), 3);
        assert_eq!(b1.elements[1], BiPoly::y());
        assert_eq!(b1.elements[2], BiPoly::x());
        let b2 = generate_basis(2);
        assert_eq!(b2.len(), 5);
        assert_eq!(b2.elements[3], p(&[(1, 1, 1, 1)]));
        assert_eq!(b2.elements[4], p(&[(1, 1, 2, 0), (-1, 1, 0, 2)]));
    }

    #[test]
    fn basis_is_graded() {
        let b = generate_basis(9);
        assert_eq!(b.len(), 19);
        assert_eq!(b.of_degree(0).len(), 1);
        for k in 1..=9 {
            assert_eq!(b.of_degree(k).len(), 2, "degree {k}");
        }
        assert!(b.elements.iter().all(is_discrete_harmonic));
        for e in &b.elements {
            let (_, c) = e.leading_term().unwrap();
            assert!(c.is_positive());
        }
    }

    #[test]
    fn appendix_shape() {
        let u = appendix_basis();
        assert_eq!(u.len(), 19);
        assert_eq!(u.elements[0], BiPoly::constant(int(1)));
        assert_eq!(
            u.elements[11],
            p(&[(1, 1, 5, 1), (-10, 3, 3, 3), (-10, 3, 1, 3), (1, 1, 1, 5)])
        );
        for (k, e) in u.elements.iter().enumerate() {
            assert!(is_discrete_harmonic(e), "U_{k}");
        }
        let flipped = &u.elements[15] + &p(&[(2, 1, 1, 7)]);
        assert_eq!(
            discrete_laplacian_poly(&flipped),
            p(&[(-28, 1, 1, 1), (-140, 1, 1, 3), (-84, 1, 1, 5)])
        );
    }
}
