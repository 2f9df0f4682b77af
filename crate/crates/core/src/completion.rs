//! Unique inner-harmonic completion of a fixed rational border.
//!
//! Imposing the five-point stencil at every inner site of an `L x L` matrix
//! with a prescribed border gives the `(L-2)^2` system `A x = eta`, where
//! `A = 4I - H` is block tridiagonal (diagonal blocks `4I - T`, `T` the
//! one-dimensional nearest-neighbour hopping matrix, off-diagonal blocks
//! `-I`) and `eta_j` sums the border values adjacent to inner site `j`.
//! `A` is irreducibly diagonally dominant, hence nonsingular.

use num_traits::Zero;

use crate::grid::RatMatrix;
use crate::linalg;
use crate::{int, Error, Rational, Result};

/// The `4L - 4` border values of an `L x L` matrix, listed clockwise from the
/// top-left corner: top row left to right, right column downwards (rows
/// `2..L-1`), bottom-right corner, bottom row right to left, then the left
/// column upwards (rows `L-1..2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderSpec {
    size: usize,
    values: Vec<Rational>,
}

impl BorderSpec {
    pub fn new(size: usize, values: Vec<Rational>) -> Result<Self> {
        if size < 3 {
            return Err(Error::Size(format!(
                "border of a {size}x{size} matrix encloses no inner site"
            )));
        }
        if values.len() != 4 * size - 4 {
            return Err(Error::Size(format!(
                "a {size}x{size} border has {} values, got {}",
                4 * size - 4,
                values.len()
            )));
        }
        Ok(BorderSpec { size, values })
    }

    pub fn zero(size: usize) -> Result<Self> {
        BorderSpec::new(size, vec![Rational::zero(); (4 * size).saturating_sub(4)])
    }

    pub fn from_matrix(h: &RatMatrix) -> Result<Self> {
        let l = h.size();
        let values = border_positions(l)
            .into_iter()
            .map(|(r, c)| h.entries()[r * l + c].clone())
            .collect();
        BorderSpec::new(l, values)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// 0-based `(row, column)` display positions of the border in
/// [`BorderSpec`] order.
pub fn border_positions(size: usize) -> Vec<(usize, usize)> {
    if size < 2 {
        return (0..size).map(|k| (k, k)).collect();
    }
    let last = size - 1;
    let mut out = Vec::with_capacity(4 * size - 4);
    out.extend((0..size).map(|c| (0, c)));
    out.extend((1..last).map(|r| (r, last)));
    out.push((last, last));
    out.extend((0..last).rev().map(|c| (last, c)));
    out.extend((1..last).rev().map(|r| (r, 0)));
    out
}

/// Position of display cell `(row, column)` within the border ordering.
pub fn border_index(size: usize, row: usize, col: usize) -> Option<usize> {
    let last = size.checked_sub(1)?;
    if row > last || col > last {
        return None;
    }
    match (row, col) {
        (0, c) => Some(c),
        (r, c) if c == last && r < last => Some(last + r),
        (r, c) if r == last => Some(2 * last + (last - c)),
        (r, 0) => Some(3 * last + (last - r)),
        _ => None,
    }
}

/// The completion system for one matrix size, with the rule assembling the
/// right-hand side from a border.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionSystem {
    size: usize,
    matrix: Vec<Vec<Rational>>,
    border_neighbours: Vec<Vec<usize>>,
}

impl CompletionSystem {
    pub fn size(&self) -> usize {
        self.size
    }

    /// The `(L-2)^2 x (L-2)^2` coefficient matrix, inner sites enumerated
    /// row-major (top to bottom) over the inner minor.
    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// Border indices adjacent to each inner site.
    pub fn border_neighbours(&self) -> &[Vec<usize>] {
        &self.border_neighbours
    }

    pub fn rhs(&self, border: &BorderSpec) -> Result<Vec<Rational>> {
        if border.size() != self.size {
            return Err(Error::Size(format!(
                "border of size {} for a size-{} system",
                border.size(),
                self.size
            )));
        }
        Ok(self
            .border_neighbours
            .iter()
            .map(|ns| {
                ns.iter()
                    .fold(Rational::zero(), |acc, &k| acc + &border.values()[k])
            })
            .collect())
    }
}

/// Assembles the completion system for `L x L` matrices.
pub fn build_system(size: usize) -> Result<CompletionSystem> {
    if size < 3 {
        return Err(Error::Size(format!(
            "a {size}x{size} matrix has no inner sites"
        )));
    }
    let inner = size - 2;
    let n = inner * inner;
    let site = |r: usize, c: usize| (r - 1) * inner + (c - 1);
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    let mut border_neighbours = vec![Vec::new(); n];
    for r in 1..=inner {
        for c in 1..=inner {
            let j = site(r, c);
            matrix[j][j] = int(4);
            for (nr, nc) in [(r - 1, c), (r, c - 1), (r, c + 1), (r + 1, c)] {
                if (1..=inner).contains(&nr) && (1..=inner).contains(&nc) {
                    matrix[j][site(nr, nc)] = int(-1);
                } else {
                    let k = border_index(size, nr, nc).expect("neighbour on border");
                    border_neighbours[j].push(k);
                }
            }
        }
    }
    Ok(CompletionSystem {
        size,
        matrix,
        border_neighbours,
    })
}

/// The unique inner-harmonic matrix with the given border.
pub fn complete(border: &BorderSpec) -> RatMatrix {
    let system = build_system(border.size()).expect("BorderSpec guarantees size >= 3");
    complete_with(&system, border).expect("completion system is nonsingular")
}

/// [`complete`] reusing an already assembled system.
pub fn complete_with(system: &CompletionSystem, border: &BorderSpec) -> Result<RatMatrix> {
    let l = system.size();
    let eta = system.rhs(border)?;
    let interior = linalg::solve(system.matrix(), &eta).map_err(|e| {
        Error::Invariant(format!(
            "completion system for L = {l} failed to solve: {e}"
        ))
    })?;
    let mut entries = vec![Rational::zero(); l * l];
    for ((r, c), v) in border_positions(l).into_iter().zip(border.values()) {
        entries[r * l + c] = v.clone();
    }
    let inner = l - 2;
    for (j, v) in interior.into_iter().enumerate() {
        let (r, c) = (j / inner + 1, j % inner + 1);
        entries[r * l + c] = v;
    }
    RatMatrix::new(l, entries)
}
