use alloc::vec::Vec;

use num_rational::Ratio;

use super::NumeratorReport;
use crate::error::{Error, Result};

type Point = (i64, i64);

/// Newton polytope of a numerator in `(q-exponent, x-exponent)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolytope {
    /// Sorted by q-exponent, then x-exponent.
    pub points: Vec<Point>,
    /// Counter-clockwise, starting at the smallest point.
    pub hull: Vec<Point>,
    /// Upper chain from the smallest point to the largest, left to right.
    pub upper_hull: Vec<Point>,
    /// Lower chain from the smallest point to the largest, left to right.
    pub lower_hull: Vec<Point>,
    /// `dq/dx` along the upper chain, up to its first vertex of maximal
    /// x-exponent.
    pub upper_hull_slopes: Vec<Ratio<i64>>,
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Monotone chain over sorted, deduplicated points; collinear points are
/// dropped.
fn chain<'a, I: Iterator<Item = &'a Point>>(pts: I) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for &p in pts {
        while out.len() >= 2 && cross(out[out.len() - 2], out[out.len() - 1], p) <= 0 {
            out.pop();
        }
        out.push(p);
    }
    out
}

impl NewtonPolytope {
    pub fn from_points(mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        points.dedup();
        let lower = chain(points.iter());
        let mut upper = chain(points.iter().rev());
        let hull = if points.len() <= 2 {
            points.clone()
        } else {
            let mut h = lower[..lower.len() - 1].to_vec();
            h.extend_from_slice(&upper[..upper.len() - 1]);
            h
        };
        upper.reverse();
        let max_x = upper.iter().map(|p| p.1).max();
        let stop = upper.iter().position(|p| Some(p.1) == max_x).map_or(0, |i| i + 1);
        let upper_hull_slopes = upper[..stop]
            .windows(2)
            .filter(|w| w[1].1 != w[0].1)
            .map(|w| Ratio::new(w[1].0 - w[0].0, w[1].1 - w[0].1))
            .collect();
        NewtonPolytope { points, hull, upper_hull: upper, lower_hull: lower, upper_hull_slopes }
    }

    /// True if every point lies inside or on the hull.
    pub fn contains_all_points(&self) -> bool {
        if self.hull.len() < 3 {
            return true;
        }
        let h = &self.hull;
        self.points
            .iter()
            .all(|&p| (0..h.len()).all(|i| cross(h[i], h[(i + 1) % h.len()], p) >= 0))
    }

    /// True if consecutive hull turns are all strictly left.
    pub fn is_convex(&self) -> bool {
        let h = &self.hull;
        h.len() < 3 || (0..h.len()).all(|i| cross(h[i], h[(i + 1) % h.len()], h[(i + 2) % h.len()]) > 0)
    }
}

/// Polytope of `r.numerator`; refuses numerators that are not polynomials.
pub fn newton_polytope(r: &NumeratorReport) -> Result<NewtonPolytope> {
    let cs = r.laurent_coeffs().filter(|_| r.is_polynomial).ok_or(Error::NotPolynomial(r.n))?;
    let points = cs
        .iter()
        .enumerate()
        .flat_map(|(xe, c)| c.terms().map(move |(qe, _)| (qe, xe as i64)))
        .collect();
    Ok(NewtonPolytope::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::numerator;
    use crate::ballot::BallotTable;
    use crate::csequence::c_theorem1;
    use alloc::vec;

    #[test]
    fn two_points() {
        let p = NewtonPolytope::from_points(vec![(1, 1), (0, 0)]);
        assert_eq!(p.hull, vec![(0, 0), (1, 1)]);
        assert_eq!(p.upper_hull_slopes, vec![Ratio::from_integer(1)]);
    }

    #[test]
    fn numerator_of_c3() {
        let mut t = BallotTable::new();
        let r = numerator(3, &c_theorem1(2, &mut t));
        let p = newton_polytope(&r).unwrap();
        assert_eq!(p.hull, vec![(0, 0), (2, 0), (4, 2), (1, 1)]);
        assert_eq!(p.upper_hull, vec![(0, 0), (1, 1), (4, 2)]);
        assert_eq!(p.lower_hull, vec![(0, 0), (2, 0), (4, 2)]);
        assert_eq!(p.upper_hull_slopes, vec![Ratio::from_integer(1), Ratio::from_integer(3)]);
        assert!(p.is_convex() && p.contains_all_points());
    }

    #[test]
    fn square_drops_collinear_points() {
        let pts = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        let p = NewtonPolytope::from_points(pts);
        assert_eq!(p.hull, vec![(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(p.points.len(), 9);
        assert!(p.contains_all_points());
    }

    #[test]
    fn rejects_non_polynomials() {
        use crate::arith::{QLaurent, QRatFunc};
        use crate::qcore::XPoly;
        let r = numerator(2, &XPoly::constant(QRatFunc::from_laurent(QLaurent::monomial_int(1, -1))));
        assert_eq!(newton_polytope(&r), Err(Error::NotPolynomial(2)));
    }
}
