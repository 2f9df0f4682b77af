//! Reference data with known exact answers, used by tests, the acceptance
//! suite and the CLI examples.
//!
//! The "worked" fixtures follow one `4 x 4` inner-harmonic matrix through the
//! whole telescopic construction: its `3 x 3` minor, the base-case
//! interpolant, that interpolant evaluated on `Q_4`, a set of corner
//! polynomials for size 3, the resulting weights, and the final degree-6
//! interpolant. The corner polynomials here use a different normalization
//! from [`crate::interpolate::build_l_polynomials`] (their designated values
//! are `-720, -720, 720, -720`).

use crate::grid::RatMatrix;
use crate::interpolate::LPolySet;
use crate::poly::BiPoly;
use crate::{int, rat, Rational};

/// A `7 x 7` integer inner-harmonic matrix with an irregular border.
pub fn seven_by_seven() -> RatMatrix {
    RatMatrix::from_int_rows(&[
        &[2, 0, 0, 1, 0, 1, 2],
        &[0, 2, 1, 2, 0, 2, 1],
        &[1, 7, 0, 6, -4, 6, 2],
        &[1, 25, -14, 26, -28, 24, 1],
        &[2, 106, -107, 140, -158, 117, 2],
        &[2, 504, -660, 799, -861, 600, 1],
        &[1, 2568, -3836, 4577, -4685, 3143, 0],
    ])
}

/// `x^3 - 3xy^2` tabulated with the row index as `x` and the column as `y`
/// (row `i`, column `j` holds the value at `(L - i, j - 1)`). Under this
/// crate's convention it is the restriction of `y^3 - 3x^2 y` to `Q_7`.
pub fn cubic_on_q7_transposed() -> RatMatrix {
    RatMatrix::from_int_rows(&[
        &[216, 198, 144, 54, -72, -234, -432],
        &[125, 110, 65, -10, -115, -250, -415],
        &[64, 52, 16, -44, -128, -236, -368],
        &[27, 18, -9, -54, -117, -198, -297],
        &[8, 2, -16, -46, -88, -142, -208],
        &[1, -2, -11, -26, -47, -74, -107],
        &[0, 0, 0, 0, 0, 0, 0],
    ])
}

/// The `4 x 4` inner-harmonic matrix of the worked example.
pub fn worked_matrix() -> RatMatrix {
    RatMatrix::from_int_rows(&[
        &[27, 18, -9, -54],
        &[8, 2, -16, -46],
        &[1, -2, -11, -26],
        &[-3, 0, 0, 0],
    ])
}

/// Lower-left `3 x 3` minor of [`worked_matrix`].
pub fn worked_minor() -> RatMatrix {
    RatMatrix::from_int_rows(&[&[8, 2, -16], &[1, -2, -11], &[-3, 0, 0]])
}

/// Base-case interpolant of [`worked_minor`].
pub fn worked_base_interpolant() -> BiPoly {
    BiPoly::from_small_terms(&[
        (-3, 1, 0, 0),
        (15, 4, 1, 0),
        (-1, 8, 2, 0),
        (-3, 4, 3, 0),
        (1, 8, 4, 0),
        (15, 4, 0, 1),
        (-27, 4, 1, 1),
        (-3, 4, 2, 1),
        (-1, 8, 0, 2),
        (9, 4, 1, 2),
        (-3, 4, 2, 2),
        (1, 4, 0, 3),
        (1, 8, 0, 4),
    ])
}

/// Coefficients of [`worked_base_interpolant`] over the base-case basis
/// `U_0 .. U_6, U_8`.
pub fn worked_base_coefficients() -> Vec<Rational> {
    vec![
        int(-3),
        rat(15, 4),
        rat(15, 4),
        rat(-27, 4),
        rat(1, 8),
        rat(1, 4),
        rat(-3, 4),
        rat(1, 8),
    ]
}

/// [`worked_base_interpolant`] evaluated on `Q_4`.
pub fn worked_lifted_matrix() -> RatMatrix {
    RatMatrix::from_int_rows(&[
        &[24, 18, -9, -57],
        &[8, 2, -16, -46],
        &[1, -2, -11, -26],
        &[-3, 0, 0, -3],
    ])
}

pub fn worked_xi1() -> BiPoly {
    BiPoly::from_small_terms(&[
        (348, 1, 1, 0),
        (-656, 1, 2, 0),
        (375, 1, 3, 0),
        (-65, 1, 4, 0),
        (-3, 1, 5, 0),
        (1, 1, 6, 0),
        (-516, 1, 0, 1),
        (332, 1, 1, 1),
        (465, 1, 2, 1),
        (-440, 1, 3, 1),
        (105, 1, 4, 1),
        (-6, 1, 5, 1),
        (776, 1, 0, 2),
        (-1095, 1, 1, 2),
        (360, 1, 2, 2),
        (30, 1, 3, 2),
        (-15, 1, 4, 2),
        (-225, 1, 0, 3),
        (460, 1, 1, 3),
        (-210, 1, 2, 3),
        (20, 1, 3, 3),
        (-55, 1, 0, 4),
        (-15, 1, 1, 4),
        (15, 1, 2, 4),
        (21, 1, 0, 5),
        (-6, 1, 1, 5),
        (-1, 1, 0, 6),
    ])
}

pub fn worked_xi2() -> BiPoly {
    BiPoly::from_small_terms(&[
        (240, 1, 1, 0),
        (-386, 1, 2, 0),
        (135, 1, 3, 0),
        (25, 1, 4, 0),
        (-15, 1, 5, 0),
        (1, 1, 6, 0),
        (-168, 1, 0, 1),
        (-152, 1, 1, 1),
        (555, 1, 2, 1),
        (-280, 1, 3, 1),
        (15, 1, 4, 1),
        (6, 1, 5, 1),
        (326, 1, 0, 2),
        (-255, 1, 1, 2),
        (-180, 1, 2, 2),
        (150, 1, 3, 2),
        (-15, 1, 4, 2),
        (-195, 1, 0, 3),
        (260, 1, 1, 3),
        (-30, 1, 2, 3),
        (-20, 1, 3, 3),
        (35, 1, 0, 4),
        (-75, 1, 1, 4),
        (15, 1, 2, 4),
        (3, 1, 0, 5),
        (6, 1, 1, 5),
        (-1, 1, 0, 6),
    ])
}

pub fn worked_xi3() -> BiPoly {
    BiPoly::from_small_terms(&[
        (516, 1, 1, 0),
        (-776, 1, 2, 0),
        (225, 1, 3, 0),
        (55, 1, 4, 0),
        (-21, 1, 5, 0),
        (1, 1, 6, 0),
        (-348, 1, 0, 1),
        (-332, 1, 1, 1),
        (1095, 1, 2, 1),
        (-460, 1, 3, 1),
        (15, 1, 4, 1),
        (6, 1, 5, 1),
        (656, 1, 0, 2),
        (-465, 1, 1, 2),
        (-360, 1, 2, 2),
        (210, 1, 3, 2),
        (-15, 1, 4, 2),
        (-375, 1, 0, 3),
        (440, 1, 1, 3),
        (-30, 1, 2, 3),
        (-20, 1, 3, 3),
        (65, 1, 0, 4),
        (-105, 1, 1, 4),
        (15, 1, 2, 4),
        (3, 1, 0, 5),
        (6, 1, 1, 5),
        (-1, 1, 0, 6),
    ])
}

pub fn worked_xi4() -> BiPoly {
    BiPoly::from_small_terms(&[
        (1644, 1, 1, 0),
        (-2852, 1, 2, 0),
        (1305, 1, 3, 0),
        (-35, 1, 4, 0),
        (-69, 1, 5, 0),
        (7, 1, 6, 0),
        (-1644, 1, 0, 1),
        (3225, 1, 2, 1),
        (-2130, 1, 3, 1),
        (345, 1, 4, 1),
        (2852, 1, 0, 2),
        (-3225, 1, 1, 2),
        (690, 1, 3, 2),
        (-105, 1, 4, 2),
        (-1305, 1, 0, 3),
        (2130, 1, 1, 3),
        (-690, 1, 2, 3),
        (35, 1, 0, 4),
        (-345, 1, 1, 4),
        (105, 1, 2, 4),
        (69, 1, 0, 5),
        (-7, 1, 0, 6),
    ])
}

/// [`worked_xi1`] with `x` coefficient 384 in place of 348. Still discrete
/// harmonic, but `36x` away from a corner polynomial: it is nonzero along the
/// whole of `Q_4` off the first column.
pub fn worked_xi1_uncorrected() -> BiPoly {
    &worked_xi1() + &BiPoly::monomial(1, 0, int(36))
}

/// The designated values of the worked corner polynomials.
pub fn worked_gamma() -> [Rational; 4] {
    [int(-720), int(-720), int(720), int(-720)]
}

/// The worked corner polynomials as a verified set for size 3.
pub fn worked_corner_polynomials() -> LPolySet {
    LPolySet::from_polynomials(3, [worked_xi1(), worked_xi2(), worked_xi3(), worked_xi4()])
        .expect("worked corner polynomials satisfy the corner invariants")
}

/// Weights of the corner polynomials in the worked growth step.
pub fn worked_corner_weights() -> [Rational; 4] {
    [rat(-1, 240), rat(-1, 240), rat(1, 240), int(0)]
}

/// The degree-6 discrete harmonic interpolant of [`worked_matrix`].
pub fn worked_interpolant() -> BiPoly {
    BiPoly::from_small_terms(&[
        (-3, 1, 0, 0),
        (69, 20, 1, 0),
        (59, 60, 2, 0),
        (-31, 16, 3, 0),
        (25, 48, 4, 0),
        (-1, 80, 5, 0),
        (-1, 240, 6, 0),
        (103, 20, 0, 1),
        (-533, 60, 1, 1),
        (-7, 16, 2, 1),
        (13, 12, 3, 1),
        (-7, 16, 4, 1),
        (1, 40, 5, 1),
        (-119, 60, 0, 2),
        (95, 16, 1, 2),
        (-3, 1, 2, 2),
        (1, 8, 3, 2),
        (1, 16, 4, 2),
        (7, 16, 0, 3),
        (-7, 6, 1, 3),
        (7, 8, 2, 3),
        (-1, 12, 3, 3),
        (23, 48, 0, 4),
        (-1, 16, 1, 4),
        (-1, 16, 2, 4),
        (-7, 80, 0, 5),
        (1, 40, 1, 5),
        (1, 240, 0, 6),
    ])
}

/// [`worked_interpolant`] with `+1/12 x^3 y^3` in place of `-1/12 x^3 y^3`.
/// Its Laplacian is `-x^3 y - x y^3`, so it is neither discrete harmonic nor
/// an interpolant of [`worked_matrix`].
pub fn worked_interpolant_uncorrected() -> BiPoly {
    &worked_interpolant() + &BiPoly::monomial(3, 3, rat(1, 6))
}

/// The tensor-product Lagrange interpolant of [`worked_matrix`].
pub fn worked_bilinear() -> BiPoly {
    BiPoly::from_small_terms(&[
        (-3, 1, 0, 0),
        (11, 2, 1, 0),
        (-3, 1, 2, 0),
        (1, 2, 3, 0),
        (11, 2, 0, 1),
        (-121, 12, 1, 1),
        (5, 2, 2, 1),
        (-11, 12, 3, 1),
        (-3, 1, 0, 2),
        (11, 2, 1, 2),
        (-3, 1, 2, 2),
        (1, 2, 3, 2),
        (3, 2, 0, 3),
        (-11, 12, 1, 3),
        (1, 2, 2, 3),
        (-1, 12, 3, 3),
    ])
}
