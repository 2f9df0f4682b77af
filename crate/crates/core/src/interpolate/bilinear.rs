use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::grid::RatMatrix;
use crate::poly::{BiPoly, Monomial};
use crate::Rational;

/// Coefficients (ascending powers) of the Lagrange cardinal polynomial
/// `prod_{j != h} (t - j) / (h - j)` on the nodes `0..n`.
fn cardinal(h: usize, n: usize) -> Vec<Rational> {
    let mut coeffs = vec![BigInt::one()];
    let mut denom = BigInt::one();
    for j in (0..n).filter(|&j| j != h) {
        // multiply by (t - j)
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigInt::from(j);
        }
        coeffs = next;
        denom *= BigInt::from(h as i64 - j as i64);
    }
    coeffs
        .into_iter()
        .map(|c| Rational::new(c, denom.clone()))
        .collect()
}

/// The tensor-product Lagrange interpolant of any square matrix, with the
/// value at lattice point `(h, k)` as the weight of the `(h, k)` cardinal
/// product. Degree at most `2(L-1)`; in general not discrete harmonic.
pub fn bilinear(h: &RatMatrix) -> BiPoly {
    let n = h.size();
    let cards: Vec<Vec<Rational>> = (0..n).map(|i| cardinal(i, n)).collect();
    let mut out = BiPoly::zero();
    for a in 0..n {
        for b in 0..n {
            let mut c = Rational::zero();
            for (hx, cx) in cards.iter().enumerate() {
                if cx[a].is_zero() {
                    continue;
                }
                for (ky, cy) in cards.iter().enumerate() {
                    let z = h.at(hx, ky);
                    if !z.is_zero() && !cy[b].is_zero() {
                        c += z * &cx[a] * &cy[b];
                    }
                }
            }
            out.add_term(Monomial::new(a as u32, b as u32), c);
        }
    }
    out
}
