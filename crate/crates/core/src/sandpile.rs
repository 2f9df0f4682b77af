//! Fixed-energy sandpile on a torus, used to check that the functionals
//! `Phi_L[f] = (sum f(x,y) z(x,y)) mod L` built from known generating
//! functions are conserved by the dynamics.
//!
//! Toppling rule: threshold 4, parallel update, periodic boundaries. Every
//! site holding at least 4 grains sheds one grain to each of its four torus
//! neighbours in the same step, so total energy is exactly conserved.

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;

use crate::grid::{evaluate_on_lattice, RatMatrix};
use crate::poly::BiPoly;
use crate::{int, Error, Rational, Result};

pub const THRESHOLD: u32 = 4;

/// Heights `z(x, y)` on the `L x L` torus, addressed by lattice point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SandConfig {
    size: usize,
    heights: Vec<u32>,
}

impl SandConfig {
    /// `heights[y * size + x]` is the height at lattice point `(x, y)`.
    pub fn new(size: usize, heights: Vec<u32>) -> Result<Self> {
        if size == 0 || heights.len() != size * size {
            return Err(Error::Size(format!(
                "{} heights cannot fill a {size}x{size} torus",
                heights.len()
            )));
        }
        Ok(SandConfig { size, heights })
    }

    pub fn uniform(size: usize, height: u32) -> Self {
        SandConfig {
            size,
            heights: vec![height; size * size],
        }
    }

    /// Independent heights drawn uniformly from `0..=max_height`.
    pub fn random<R: Rng + ?Sized>(size: usize, max_height: u32, rng: &mut R) -> Self {
        SandConfig {
            size,
            heights: (0..size * size)
                .map(|_| rng.gen_range(0..=max_height))
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.heights[y * self.size + x]
    }

    pub fn set(&mut self, x: usize, y: usize, h: u32) {
        self.heights[y * self.size + x] = h;
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn energy(&self) -> u64 {
        self.heights.iter().map(|&h| h as u64).sum()
    }

    pub fn is_stable(&self) -> bool {
        self.heights.iter().all(|&h| h < THRESHOLD)
    }

    /// One parallel toppling step.
    pub fn step(&self) -> SandConfig {
        let l = self.size;
        let mut next = self.heights.clone();
        for y in 0..l {
            for x in 0..l {
                if self.get(x, y) < THRESHOLD {
                    continue;
                }
                next[y * l + x] -= THRESHOLD;
                for (nx, ny) in [
                    ((x + l - 1) % l, y),
                    ((x + 1) % l, y),
                    (x, (y + l - 1) % l),
                    (x, (y + 1) % l),
                ] {
                    next[ny * l + nx] += 1;
                }
            }
        }
        SandConfig {
            size: l,
            heights: next,
        }
    }

    pub fn orbit(&self, steps: usize) -> Vec<SandConfig> {
        let mut out = Vec::with_capacity(steps + 1);
        out.push(self.clone());
        for _ in 0..steps {
            let next = out.last().expect("non-empty").step();
            out.push(next);
        }
        out
    }
}

/// `v mod m` as the representative in `[0, m)`.
pub fn rational_mod(v: &Rational, m: u64) -> Rational {
    let m = int(m as i64);
    let q = (v / &m).floor();
    v - q * m
}

/// `(sum f(x,y) z(x,y)) mod L`, with `f` read through the lattice
/// correspondence.
pub fn phi(f: &RatMatrix, c: &SandConfig) -> Result<Rational> {
    if f.size() != c.size() {
        return Err(Error::Size(format!(
            "generating function of size {} for a configuration of size {}",
            f.size(),
            c.size()
        )));
    }
    let l = c.size();
    let mut acc = Rational::zero();
    for y in 0..l {
        for x in 0..l {
            let h = c.get(x, y);
            if h != 0 {
                acc += f.at(x, y) * int(h as i64);
            }
        }
    }
    Ok(rational_mod(&acc, l as u64))
}

/// `phi` along the orbit `c, step(c), ..., step^steps(c)`.
pub fn phi_trace(f: &RatMatrix, c: &SandConfig, steps: usize) -> Result<Vec<Rational>> {
    let mut cur = c.clone();
    let mut out = Vec::with_capacity(steps + 1);
    out.push(phi(f, &cur)?);
    for _ in 0..steps {
        cur = cur.step();
        out.push(phi(f, &cur)?);
    }
    Ok(out)
}

/// Whether `phi` stays constant for `steps` steps.
pub fn check_conservation(f: &RatMatrix, c: &SandConfig, steps: usize) -> Result<bool> {
    let trace = phi_trace(f, c, steps)?;
    Ok(trace.windows(2).all(|w| w[0] == w[1]))
}

/// Transient length and period of the orbit of `c`, if it closes within
/// `max_steps` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cycle {
    pub transient: usize,
    pub period: usize,
}

pub fn find_cycle(c: &SandConfig, max_steps: usize) -> Option<Cycle> {
    let mut seen: HashMap<SandConfig, usize> = HashMap::new();
    let mut cur = c.clone();
    for t in 0..=max_steps {
        if let Some(&first) = seen.get(&cur) {
            return Some(Cycle {
                transient: first,
                period: t - first,
            });
        }
        let next = cur.step();
        seen.insert(cur, t);
        cur = next;
    }
    None
}

/// The generating function `f(x, y) = x`.
pub fn gf_x(size: usize) -> RatMatrix {
    evaluate_on_lattice(&BiPoly::x(), size)
}

/// The generating function `f(x, y) = y`.
pub fn gf_y(size: usize) -> RatMatrix {
    evaluate_on_lattice(&BiPoly::y(), size)
}

/// The generating function `f(x, y) = x^2 - y^2`.
pub fn gf_x2_minus_y2(size: usize) -> RatMatrix {
    evaluate_on_lattice(
        &BiPoly::from_small_terms(&[(1, 1, 2, 0), (-1, 1, 0, 2)]),
        size,
    )
}
