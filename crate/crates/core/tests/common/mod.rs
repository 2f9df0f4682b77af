#![allow(dead_code)]

use discrete_harmonic::{complete, rat, BorderSpec, RatMatrix, Rational};
use proptest::prelude::*;
use rand::Rng;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-30..=30), rng.gen_range(1..=9))
}

pub fn random_border<R: Rng>(size: usize, rng: &mut R) -> BorderSpec {
    let values = (0..4 * size - 4).map(|_| random_rational(rng)).collect();
    BorderSpec::new(size, values).expect("valid border length")
}

/// An inner-harmonic matrix: a random rational border and its completion.
pub fn random_inner_harmonic<R: Rng>(size: usize, rng: &mut R) -> RatMatrix {
    complete(&random_border(size, rng))
}

pub fn random_matrix<R: Rng>(size: usize, rng: &mut R) -> RatMatrix {
    RatMatrix::from_lattice_fn(size, |_, _| random_rational(rng))
}

/// Five-point stencil written out directly from lattice values, returning
/// the Laplacian at every interior site as `((x, y), value)`.
pub fn naive_laplacian(h: &RatMatrix) -> Vec<((usize, usize), Rational)> {
    let l = h.size();
    let mut out = Vec::new();
    for y in 1..l - 1 {
        for x in 1..l - 1 {
            let v = h.at(x, y) * Rational::from_integer(4.into())
                - h.at(x - 1, y)
                - h.at(x + 1, y)
                - h.at(x, y - 1)
                - h.at(x, y + 1);
            out.push(((x, y), v));
        }
    }
    out
}
