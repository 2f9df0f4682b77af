//! Corner polynomials: four discrete harmonic polynomials that vanish on the
//! whole of `Q_{L+1}` except at one corner of its north-east border (or, for
//! the fourth, an antisymmetric pair next to the north-east corner).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::grid::LatticePoint;
use crate::linalg;
use crate::poly::{generate_basis, is_discrete_harmonic, BiPoly};
use crate::{Error, Rational, Result};

/// The four corner polynomials for size parameter `L`, with the value each
/// takes at its designated site.
///
/// `xi[0]` is nonzero only at `(0, L)`, `xi[1]` only at `(L, L)`, `xi[2]` only
/// at `(L, 0)`, and `xi[3]` only at `(L-1, L)` and `(L, L-1)` with opposite
/// values. `gamma[k]` is `xi[k]` at the first of those sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolySet {
    pub size: usize,
    pub xi: [BiPoly; 4],
    pub gamma: [Rational; 4],
}

impl LPolySet {
    /// Designated site of `xi[k]` (the first one, for the pair).
    pub fn site(size: usize, k: usize) -> LatticePoint {
        let l = size as i64;
        match k {
            0 => LatticePoint::new(0, l),
            1 => LatticePoint::new(l, l),
            2 => LatticePoint::new(l, 0),
            3 => LatticePoint::new(l - 1, l),
            _ => panic!("corner polynomial index {k} out of range"),
        }
    }

    /// Assembles a set from four polynomials, reading the `gamma` values off
    /// them, and checks every invariant.
    pub fn from_polynomials(size: usize, xi: [BiPoly; 4]) -> Result<Self> {
        let gamma = std::array::from_fn(|k| {
            let s = LPolySet::site(size, k);
            xi[k].eval_int(s.x, s.y)
        });
        let set = LPolySet { size, xi, gamma };
        set.verify()?;
        Ok(set)
    }

    pub fn verify(&self) -> Result<()> {
        if self.size < 3 {
            return Err(Error::Size(format!(
                "corner polynomials need L >= 3, got {}",
                self.size
            )));
        }
        for k in 0..4 {
            check_pattern(&self.xi[k], self.size, k)?;
            let s = LPolySet::site(self.size, k);
            if self.xi[k].eval_int(s.x, s.y) != self.gamma[k] {
                return Err(Error::Invariant(format!(
                    "recorded gamma for corner polynomial {} does not match its value",
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

/// Checks that `p` is discrete harmonic, has degree at most `2L`, and has the
/// support pattern of corner polynomial `k` on `Q_{L+1}`.
fn check_pattern(p: &BiPoly, size: usize, k: usize) -> Result<()> {
    let fail = |why: String| {
        Err(Error::Construction(format!(
            "corner polynomial {} for L = {size}: {why}",
            k + 1
        )))
    };
    if p.degree() > 2 * size as i64 {
        return fail(format!("degree {} exceeds {}", p.degree(), 2 * size));
    }
    if !is_discrete_harmonic(p) {
        return fail("not discrete harmonic".into());
    }
    let l = size as i64;
    let target = value_at(p, LPolySet::site(size, k));
    if target.is_zero() {
        return fail("vanishes at its designated site".into());
    }
    let partner = (k == 3).then(|| LatticePoint::new(l, l - 1));
    if let Some(q) = partner {
        if value_at(p, q) != -target.clone() {
            return fail("pair values are not opposite".into());
        }
    }
    let designated = LPolySet::site(size, k);
    for x in 0..=l {
        for y in 0..=l {
            let pt = LatticePoint::new(x, y);
            if pt == designated || Some(pt) == partner {
                continue;
            }
            if !p.eval_int(x, y).is_zero() {
                return fail(format!("nonzero at ({x}, {y})"));
            }
        }
    }
    Ok(())
}

fn value_at(p: &BiPoly, s: LatticePoint) -> Rational {
    p.eval_int(s.x, s.y)
}

/// Points forced to zero, besides the border of the lower-left `L x L` minor,
/// when constructing corner polynomial `k`. The last point is swapped for
/// each alternate in turn if the primary choice fails verification.
fn extra_points(size: usize, k: usize) -> [LatticePoint; 4] {
    let l = size as i64;
    let p = LatticePoint::new;
    match k {
        0 => [p(l - 1, l), p(l, l), p(l, 0), p(l + 1, l)],
        1 => [p(0, l), p(l - 1, l), p(l, 0), p(l + 1, l)],
        3 => [p(0, l), p(l, l), p(l, 0), p(l + 1, l)],
        _ => unreachable!("the third corner polynomial is built by reflection"),
    }
}

fn alternate_fourth_points(size: usize) -> [LatticePoint; 2] {
    let l = size as i64;
    [LatticePoint::new(l, l + 1), LatticePoint::new(l + 1, l - 1)]
}

fn minor_border(size: usize) -> Vec<LatticePoint> {
    let l = size as i64;
    let mut pts = Vec::with_capacity(4 * size - 4);
    for x in 0..l {
        for y in 0..l {
            if x == 0 || y == 0 || x == l - 1 || y == l - 1 {
                pts.push(LatticePoint::new(x, y));
            }
        }
    }
    pts
}

/// Primitive integer coefficients, first nonzero coefficient (in canonical
/// monomial order) positive.
fn normalize(p: &BiPoly) -> BiPoly {
    let n = p.degree().max(0) as u32;
    BiPoly::from_vector(&linalg::primitive(&p.to_vector(n)))
}

fn construct(size: usize, k: usize, pool: &[BiPoly]) -> Result<BiPoly> {
    let border = minor_border(size);
    let primary = extra_points(size, k);
    let mut point_sets = vec![primary];
    for alt in alternate_fourth_points(size) {
        let mut pts = primary;
        pts[3] = alt;
        point_sets.push(pts);
    }
    let mut last_err = None;
    for extras in point_sets {
        let rows: Vec<Vec<Rational>> = border
            .iter()
            .chain(extras.iter())
            .map(|pt| pool.iter().map(|b| b.eval_int(pt.x, pt.y)).collect())
            .collect();
        for v in linalg::nullspace(&rows) {
            let xi = pool
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .fold(BiPoly::zero(), |acc, (b, c)| &acc + &b.scale(c));
            let xi = normalize(&xi);
            match check_pattern(&xi, size, k) {
                Ok(()) => return Ok(xi),
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::Construction(format!(
            "corner polynomial {} for L = {size}: empty kernel",
            k + 1
        ))
    }))
}

/// Builds the corner polynomials for size parameter `L >= 3`.
///
/// Each is a kernel vector of a homogeneous `4L x 4L` system over the `4L`
/// non-constant elements of [`generate_basis`]`(2L)`: zero on the border of
/// the lower-left `L x L` minor plus four extra points. The third polynomial
/// is the first reflected across the diagonal. Every result is checked
/// against the full support pattern before being returned.
pub fn build_l_polynomials(size: usize) -> Result<LPolySet> {
    if size < 3 {
        return Err(Error::Size(format!(
            "corner polynomials need L >= 3, got {size}"
        )));
    }
    let basis = generate_basis(2 * size as u32);
    let pool = &basis.elements[1..];
    debug_assert_eq!(pool.len(), 4 * size);
    let xi1 = construct(size, 0, pool)?;
    let xi2 = construct(size, 1, pool)?;
    let xi3 = normalize(&xi1.swap_xy());
    let xi4 = construct(size, 3, pool)?;
    LPolySet::from_polynomials(size, [xi1, xi2, xi3, xi4])
}

type Cache = RwLock<HashMap<usize, Arc<LPolySet>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized [`build_l_polynomials`].
pub fn l_polynomials(size: usize) -> Result<Arc<LPolySet>> {
    if let Some(set) = cache().read().expect("cache poisoned").get(&size) {
        return Ok(Arc::clone(set));
    }
    let set = Arc::new(build_l_polynomials(size)?);
    let mut map = cache().write().expect("cache poisoned");
    Ok(Arc::clone(map.entry(size).or_insert(set)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minor_border_count() {
        for l in 3..8 {
            assert_eq!(minor_border(l).len(), 4 * l - 4);
        }
    }

    #[test]
    fn construct_small_sets() {
        for l in 3..=5 {
            let set = build_l_polynomials(l).unwrap();
            assert!(set.verify().is_ok());
            for k in 0..4 {
                assert!(!set.gamma[k].is_zero());
                assert!(set.xi[k].degree() <= 2 * l as i64);
            }
        }
    }

    #[test]
    fn rejects_small_size() {
        assert!(matches!(build_l_polynomials(2), Err(Error::Size(_))));
    }

    #[test]
    fn memo_returns_same_set() {
        let a = l_polynomials(3).unwrap();
        let b = l_polynomials(3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, build_l_polynomials(3).unwrap());
    }

    #[test]
    fn verify_catches_wrong_gamma() {
        let mut set = build_l_polynomials(3).unwrap();
        set.gamma[0] = -set.gamma[0].clone();
        assert!(matches!(set.verify(), Err(Error::Invariant(_))));
    }

    #[test]
    fn verify_catches_wrong_support() {
        let mut set = build_l_polynomials(3).unwrap();
        set.xi.swap(0, 1);
        set.gamma.swap(0, 1);
        assert!(set.verify().is_err());
    }
}
