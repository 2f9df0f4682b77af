//! Square rational matrices viewed as functions on the lattice `Q_L`.

use std::fmt;

use num_traits::Zero;

use crate::poly::BiPoly;
use crate::{Error, Rational, Result};

/// A point of the integer lattice. Points outside `Q_L` are legal, e.g. for
/// evaluating polynomials beyond a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn in_lattice(self, size: usize) -> bool {
        let l = size as i64;
        (0..l).contains(&self.x) && (0..l).contains(&self.y)
    }
}

/// Maps the 1-based matrix position `(i, j)` of an `size x size` matrix to its
/// lattice point `(j - 1, size - i)`.
pub fn matrix_to_lattice(i: usize, j: usize, size: usize) -> Result<LatticePoint> {
    if i == 0 || j == 0 || i > size || j > size {
        return Err(Error::Range { i, j, size });
    }
    Ok(LatticePoint::new(j as i64 - 1, (size - i) as i64))
}

/// Inverse of [`matrix_to_lattice`].
pub fn lattice_to_matrix(p: LatticePoint, size: usize) -> Result<(usize, usize)> {
    if !p.in_lattice(size) {
        return Err(Error::Range {
            i: (size as i64 - p.y).max(0) as usize,
            j: (p.x + 1).max(0) as usize,
            size,
        });
    }
    Ok((size - p.y as usize, p.x as usize + 1))
}

/// Dense square rational matrix, stored row-major in display order (row 1 is
/// the top row).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    size: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(size: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Size(format!(
                "{} entries cannot fill a {size}x{size} matrix",
                entries.len()
            )));
        }
        Ok(RatMatrix { size, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != size) {
            return Err(Error::Size(format!(
                "row {} has {} entries, expected {size}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(RatMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows; panics if not square.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::int(v)).collect())
                .collect(),
        )
        .expect("square integer matrix")
    }

    pub fn zeros(size: usize) -> Self {
        RatMatrix {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = RatMatrix::zeros(size);
        for k in 0..size {
            m.entries[k * size + k] = crate::int(1);
        }
        m
    }

    /// Builds the matrix whose lattice value at `(x, y)` is `f(x, y)`.
    pub fn from_lattice_fn(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for r in 0..size {
            let y = size - 1 - r;
            for x in 0..size {
                entries.push(f(x, y));
            }
        }
        RatMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 1-based matrix position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<&Rational> {
        if i == 0 || j == 0 || i > self.size || j > self.size {
            return Err(Error::Range {
                i,
                j,
                size: self.size,
            });
        }
        Ok(&self.entries[(i - 1) * self.size + (j - 1)])
    }

    /// Value at lattice point `(x, y)`; panics outside `Q_L`.
    pub fn at(&self, x: usize, y: usize) -> &Rational {
        assert!(
            x < self.size && y < self.size,
            "({x}, {y}) outside Q_{}",
            self.size
        );
        &self.entries[(self.size - 1 - y) * self.size + x]
    }

    pub fn set_at(&mut self, x: usize, y: usize, v: Rational) {
        assert!(
            x < self.size && y < self.size,
            "({x}, {y}) outside Q_{}",
            self.size
        );
        self.entries[(self.size - 1 - y) * self.size + x] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// The `k x k` minor anchored at the lower-left corner, i.e. the lattice
    /// points with both coordinates below `k`.
    pub fn lower_left_minor(&self, k: usize) -> Result<RatMatrix> {
        if k > self.size {
            return Err(Error::Size(format!(
                "minor of size {k} requested from a {}x{} matrix",
                self.size, self.size
            )));
        }
        Ok(RatMatrix::from_lattice_fn(k, |x, y| self.at(x, y).clone()))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            size: self.size,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.size != other.size {
            return Err(Error::Size(format!(
                "cannot add {}x{} and {}x{} matrices",
                self.size, self.size, other.size, other.size
            )));
        }
        Ok(RatMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::matrix_to_csv(self))
    }
}

/// The five-point Laplacian at every inner site, returned as an
/// `(L-2) x (L-2)` matrix over the inner sublattice (inner site `(x, y)` sits
/// at lattice position `(x-1, y-1)` of the result).
pub fn discrete_laplacian_matrix(h: &RatMatrix) -> Result<RatMatrix> {
    let l = h.size();
    if l < 3 {
        return Err(Error::Size(format!("a {l}x{l} matrix has no inner sites")));
    }
    Ok(RatMatrix::from_lattice_fn(l - 2, |u, v| {
        let (x, y) = (u + 1, v + 1);
        h.at(x, y) * crate::int(4)
            - h.at(x - 1, y)
            - h.at(x + 1, y)
            - h.at(x, y - 1)
            - h.at(x, y + 1)
    }))
}

/// Whether the Laplacian vanishes at every inner site. Matrices smaller than
/// `3 x 3` are rejected rather than vacuously accepted.
pub fn is_inner_harmonic(h: &RatMatrix) -> Result<bool> {
    Ok(discrete_laplacian_matrix(h)?.is_zero())
}

/// Restriction of `p` to `Q_L`, laid out as a matrix.
pub fn evaluate_on_lattice(p: &BiPoly, size: usize) -> RatMatrix {
    RatMatrix::from_lattice_fn(size, |x, y| p.eval_int(x as i64, y as i64))
}

/// Whether `p` reproduces every entry of `h` on `Q_L`.
pub fn interpolates(p: &BiPoly, h: &RatMatrix) -> bool {
    let l = h.size();
    (0..l).all(|x| (0..l).all(|y| &p.eval_int(x as i64, y as i64) == h.at(x, y)))
}
