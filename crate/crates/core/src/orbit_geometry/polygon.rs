//! Exact rational convex polygons in the plane (possibly degenerate: a
//! segment or a single point).

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::RayDir;

pub type Q = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Q,
    pub y: Q,
}

impl Point2 {
    pub fn new(x: Q, y: Q) -> Self {
        Point2 { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point2::new(Q::from_integer(x), Q::from_integer(y))
    }

    fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }

    fn cross(&self, o: &Point2) -> Q {
        self.x * o.y - self.y * o.x
    }

    fn dot(&self, o: &Point2) -> Q {
        self.x * o.x + self.y * o.y
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

struct Rat<'a>(&'a Q);

impl Serialize for Rat<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", self.0.numer())?;
        st.serialize_field("den", self.0.denom())?;
        st.end()
    }
}

impl Serialize for Point2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [Rat(&self.x), Rat(&self.y)].serialize(s)
    }
}

fn turn(o: &Point2, a: &Point2, b: &Point2) -> Q {
    a.sub(o).cross(&b.sub(o))
}

/// Counterclockwise vertex list of a convex polygon with no three vertices
/// collinear. One vertex is a point, two a segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polygon2 {
    vertices: Vec<Point2>,
}

/// Linear constraint `normal · x ≤ bound`.
struct HalfPlane {
    normal: Point2,
    bound: Q,
}

impl Polygon2 {
    /// Convex hull by Andrew's monotone chain, collinear points dropped.
    pub fn hull(points: &[Point2]) -> Self {
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return Polygon2 { vertices: pts };
        }
        let mut lower: Vec<Point2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Q::zero()
            {
                lower.pop();
            }
            lower.push(*p);
        }
        let mut upper: Vec<Point2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Q::zero()
            {
                upper.pop();
            }
            upper.push(*p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Polygon2 { vertices: lower }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.half_planes()
            .iter()
            .all(|h| h.normal.dot(p) <= h.bound)
    }

    fn half_planes(&self) -> Vec<HalfPlane> {
        let hp = |normal: Point2, at: &Point2| HalfPlane {
            normal,
            bound: normal.dot(at),
        };
        let neg = |p: Point2| Point2::new(-p.x, -p.y);
        match self.vertices.as_slice() {
            [] => Vec::new(),
            [p] => {
                let ex = Point2::int(1, 0);
                let ey = Point2::int(0, 1);
                vec![hp(ex, p), hp(neg(ex), p), hp(ey, p), hp(neg(ey), p)]
            }
            [p, q] => {
                let d = q.sub(p);
                let n = Point2::new(-d.y, d.x);
                vec![hp(n, p), hp(neg(n), p), hp(d, q), hp(neg(d), p)]
            }
            vs => (0..vs.len())
                .map(|i| {
                    let (p, q) = (vs[i], vs[(i + 1) % vs.len()]);
                    let d = q.sub(&p);
                    // outward normal of a ccw edge
                    hp(Point2::new(d.y, -d.x), &p)
                })
                .collect(),
        }
    }

    /// Parameters `t > 0` with `t·ν` in the polygon, as a closed interval
    /// `[lo, hi]` (with `lo = 0` meaning the interval is open at zero).
    pub fn ray_interval(&self, nu: &RayDir) -> Option<(Q, Q)> {
        let dir = Point2::int(nu.x(), nu.y());
        let mut lo = Q::zero();
        let mut hi: Option<Q> = None;
        for h in self.half_planes() {
            let c = h.normal.dot(&dir);
            if c.is_zero() {
                if h.bound.is_negative() {
                    return None;
                }
            } else if c.is_positive() {
                let t = h.bound / c;
                hi = Some(hi.map_or(t, |cur| cur.min(t)));
            } else {
                lo = lo.max(h.bound / c);
            }
        }
        let hi = hi?;
        let feasible = if lo.is_zero() {
            hi.is_positive()
        } else {
            lo <= hi
        };
        feasible.then_some((lo, hi))
    }

    /// Euclidean distance from a float point to the polygon (0 inside).
    pub fn distance_to(&self, p: (f64, f64)) -> f64 {
        let vs: Vec<(f64, f64)> = self.vertices.iter().map(Point2::to_f64).collect();
        let seg_dist = |a: (f64, f64), b: (f64, f64)| {
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let len2 = dx * dx + dy * dy;
            let t = if len2 > 0.0 {
                (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
            } else {
                0.0
            };
            ((p.0 - a.0 - t * dx).powi(2) + (p.1 - a.1 - t * dy).powi(2)).sqrt()
        };
        match vs.len() {
            0 => f64::INFINITY,
            1 => seg_dist(vs[0], vs[0]),
            2 => seg_dist(vs[0], vs[1]),
            n => {
                let inside = (0..n).all(|i| {
                    let (a, b) = (vs[i], vs[(i + 1) % n]);
                    (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) >= 0.0
                });
                if inside {
                    0.0
                } else {
                    (0..n)
                        .map(|i| seg_dist(vs[i], vs[(i + 1) % n]))
                        .fold(f64::INFINITY, f64::min)
                }
            }
        }
    }
}
