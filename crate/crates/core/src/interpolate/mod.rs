//! Discrete harmonic interpolation of inner-harmonic matrices.
//!
//! The telescopic construction interpolates the lower-left `3 x 3` minor
//! exactly with a fixed eight-element basis, then grows the interpolant one
//! row and column at a time. Each growth step adds multiples of the four
//! corner polynomials of the previous size, which are zero on everything
//! already matched and so only correct the five border sites the old
//! interpolant cannot reach by harmonicity.

mod bilinear;
mod corner;

use std::sync::Arc;

use num_traits::Zero;

use crate::grid::{interpolates, is_inner_harmonic, LatticePoint, RatMatrix};
use crate::linalg;
use crate::poly::{appendix_basis, is_discrete_harmonic, BiPoly};
use crate::{Error, Rational, Result};

pub use bilinear::bilinear;
pub use corner::{build_l_polynomials, l_polynomials, LPolySet};

/// Indices into [`appendix_basis`] of the polynomials used for the `3 x 3`
/// base case: `U_0 .. U_6` and `U_8`.
pub const BASE_CASE_BASIS: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 8];

/// The eight border points of `Q_3`, in the row order of the base-case
/// system.
pub const BASE_CASE_POINTS: [(i64, i64); 8] = [
    (0, 0),
    (1, 0),
    (2, 0),
    (0, 1),
    (2, 1),
    (0, 2),
    (1, 2),
    (2, 2),
];

fn base_case_polys() -> Vec<BiPoly> {
    let u = appendix_basis();
    BASE_CASE_BASIS
        .iter()
        .map(|&k| u.elements[k].clone())
        .collect()
}

/// The `8 x 8` base-case matrix: entry `(r, c)` is basis polynomial `c` at
/// border point `r`.
pub fn base_case_matrix() -> Vec<Vec<Rational>> {
    let polys = base_case_polys();
    BASE_CASE_POINTS
        .iter()
        .map(|&(x, y)| polys.iter().map(|p| p.eval_int(x, y)).collect())
        .collect()
}

fn require_inner_harmonic(a: &RatMatrix) -> Result<()> {
    if !is_inner_harmonic(a)? {
        return Err(Error::Precondition(format!(
            "{}x{} matrix is not inner-harmonic",
            a.size(),
            a.size()
        )));
    }
    Ok(())
}

/// Coefficients of the base-case interpolant of a `3 x 3` inner-harmonic
/// matrix with respect to [`BASE_CASE_BASIS`].
pub fn base_case_coefficients(a: &RatMatrix) -> Result<Vec<Rational>> {
    if a.size() != 3 {
        return Err(Error::Size(format!(
            "base case needs a 3x3 matrix, got {}x{}",
            a.size(),
            a.size()
        )));
    }
    require_inner_harmonic(a)?;
    let rhs: Vec<Rational> = BASE_CASE_POINTS
        .iter()
        .map(|&(x, y)| a.at(x as usize, y as usize).clone())
        .collect();
    linalg::solve(&base_case_matrix(), &rhs)
}

/// Discrete harmonic polynomial of degree at most 4 interpolating a `3 x 3`
/// inner-harmonic matrix. The centre is matched automatically because the
/// completion of a border is unique.
pub fn interpolate_3x3(a: &RatMatrix) -> Result<BiPoly> {
    let alpha = base_case_coefficients(a)?;
    Ok(base_case_polys()
        .iter()
        .zip(&alpha)
        .filter(|(_, c)| !c.is_zero())
        .fold(BiPoly::zero(), |acc, (p, c)| &acc + &p.scale(c)))
}

/// Result of one growth step: the new interpolant and the weights given to
/// the four corner polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub poly: BiPoly,
    pub z: [Rational; 4],
}

/// Grows `chi`, an interpolant of the lower-left `(L-1) x (L-1)` minor of
/// `a`, into an interpolant of all of `a`, using the memoized corner
/// polynomials of size `L - 1`.
pub fn extend(chi: &BiPoly, a: &RatMatrix) -> Result<Extension> {
    let l = a.size();
    if l < 4 {
        return Err(Error::Size(format!(
            "extension needs a matrix of size at least 4, got {l}"
        )));
    }
    let set = l_polynomials(l - 1)?;
    extend_with(chi, a, &set)
}

/// [`extend`] with an explicit set of corner polynomials of size `L - 1`.
pub fn extend_with(chi: &BiPoly, a: &RatMatrix, set: &LPolySet) -> Result<Extension> {
    let l = a.size();
    if l < 4 {
        return Err(Error::Size(format!(
            "extension needs a matrix of size at least 4, got {l}"
        )));
    }
    if set.size + 1 != l {
        return Err(Error::Size(format!(
            "corner polynomials of size {} cannot extend to size {l}",
            set.size
        )));
    }
    require_inner_harmonic(a)?;
    if !is_discrete_harmonic(chi) {
        return Err(Error::Precondition(
            "polynomial to extend is not discrete harmonic".into(),
        ));
    }
    if !interpolates(chi, &a.lower_left_minor(l - 1)?) {
        return Err(Error::Precondition(format!(
            "polynomial does not interpolate the lower-left {}x{} minor",
            l - 1,
            l - 1
        )));
    }

    let m = l as i64 - 1;
    let sites = [
        LatticePoint::new(0, m),
        LatticePoint::new(m - 1, m),
        LatticePoint::new(m, m),
        LatticePoint::new(m, m - 1),
        LatticePoint::new(m, 0),
    ];
    let chi_at: Vec<Rational> = sites.iter().map(|s| chi.eval_int(s.x, s.y)).collect();
    let a_at: Vec<Rational> = sites
        .iter()
        .map(|s| a.at(s.x as usize, s.y as usize).clone())
        .collect();

    if &chi_at[1] + &chi_at[3] != &a_at[1] + &a_at[3] {
        return Err(Error::Invariant(
            "sum of the two sites beside the new corner differs between polynomial and matrix"
                .into(),
        ));
    }

    let z = [
        (&a_at[0] - &chi_at[0]) / &set.gamma[0],
        (&a_at[2] - &chi_at[2]) / &set.gamma[1],
        (&a_at[4] - &chi_at[4]) / &set.gamma[2],
        (&a_at[1] - &chi_at[1]) / &set.gamma[3],
    ];
    let poly = set
        .xi
        .iter()
        .zip(&z)
        .filter(|(_, c)| !c.is_zero())
        .fold(chi.clone(), |acc, (xi, c)| &acc + &xi.scale(c));

    if !interpolates(&poly, a) {
        return Err(Error::Invariant(format!(
            "extended polynomial fails to interpolate the {l}x{l} matrix"
        )));
    }
    Ok(Extension { poly, z })
}

/// Discrete harmonic interpolant of an inner-harmonic matrix of size
/// `L >= 3`, of degree at most `2(L-1)`.
///
/// Always descends to the `3 x 3` lower-left minor, then extends one size at
/// a time with corner polynomials of sizes `3 .. L-1`.
pub fn telescopic(h: &RatMatrix) -> Result<BiPoly> {
    telescopic_with(h, l_polynomials)
}

/// [`telescopic`] drawing the corner polynomials for each size from
/// `corner_set`.
pub fn telescopic_with<F>(h: &RatMatrix, mut corner_set: F) -> Result<BiPoly>
where
    F: FnMut(usize) -> Result<Arc<LPolySet>>,
{
    let l = h.size();
    if l < 3 {
        return Err(Error::Size(format!(
            "interpolation needs a matrix of size at least 3, got {l}"
        )));
    }
    require_inner_harmonic(h)?;
    let mut chi = interpolate_3x3(&h.lower_left_minor(3)?)?;
    for m in 4..=l {
        let minor = h.lower_left_minor(m)?;
        let set = corner_set(m - 1)?;
        chi = extend_with(&chi, &minor, &set)?.poly;
    }
    Ok(chi)
}
