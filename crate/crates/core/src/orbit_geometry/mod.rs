//! Exact moment-polytope and transversality combinatorics.
//!
//! Each summand `(k, l)` contributes the segment `J_{k,l}` from `(k+l, l)` to
//! `(l, k+l)` and the lattice points `ν_{k,j,l} = (k-j+l, j+l)` on it. The
//! torus moment map is transverse to a ray exactly when the ray avoids every
//! `ν_{k,j,l}`, and the rays through those points cut the image cone into
//! wedges.

mod polygon;
mod ray;

pub use polygon::{Point2, Polygon2, Q};
pub use ray::RayDir;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep_model::{IndexPair, RepDescriptor};

/// Endpoints `(k+l, l)` and `(l, k+l)` of `J_{k,l}`.
pub fn segment_jkl(k: u32, l: i64) -> ((i64, i64), (i64, i64)) {
    let k = k as i64;
    ((k + l, l), (l, k + l))
}

/// `ν_{k_a,j,l_a} = (k_a - j + l_a, j + l_a)`.
pub fn critical_point(rep: &RepDescriptor, idx: IndexPair) -> (i64, i64) {
    let s = rep.summand(idx.a);
    let j = idx.j as i64;
    (s.k as i64 - j + s.l, j + s.l)
}

/// Convex hull of all `J_{k_a,l_a}` endpoints.
pub fn moment_polytope(rep: &RepDescriptor) -> Result<Polygon2> {
    if !rep.is_generic() {
        return Err(Error::NotGeneric);
    }
    Ok(polytope_unchecked(rep))
}

fn polytope_unchecked(rep: &RepDescriptor) -> Polygon2 {
    let pts: Vec<Point2> = rep
        .summands()
        .iter()
        .flat_map(|s| {
            let (p, q) = segment_jkl(s.k, s.l);
            [Point2::int(p.0, p.1), Point2::int(q.0, q.1)]
        })
        .collect();
    Polygon2::hull(&pts)
}

/// A critical ray and the coordinates whose `ν_{k_a,j,l_a}` lie on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalRay {
    pub ray: RayDir,
    pub witnesses: Vec<IndexPair>,
}

/// Critical rays in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CriticalRaySet {
    rays: Vec<CriticalRay>,
}

impl CriticalRaySet {
    pub fn rays(&self) -> &[CriticalRay] {
        &self.rays
    }

    pub fn directions(&self) -> Vec<RayDir> {
        self.rays.iter().map(|c| c.ray).collect()
    }

    pub fn witnesses(&self, nu: &RayDir) -> Option<&[IndexPair]> {
        self.rays
            .iter()
            .find(|c| c.ray == *nu)
            .map(|c| c.witnesses.as_slice())
    }
}

fn require_never_zero(rep: &RepDescriptor) -> Result<()> {
    if rep.moment_never_zero() {
        Ok(())
    } else {
        Err(Error::MomentHitsZero)
    }
}

pub fn critical_rays(rep: &RepDescriptor) -> Result<CriticalRaySet> {
    require_never_zero(rep)?;
    let mut rays: Vec<CriticalRay> = Vec::new();
    for idx in rep.index_set() {
        let (x, y) = critical_point(rep, idx);
        assert!(
            (x, y) != (0, 0),
            "nonvanishing moment excludes a zero critical point"
        );
        let ray = RayDir::new(x, y)?;
        match rays.iter_mut().find(|c| c.ray == ray) {
            Some(c) => c.witnesses.push(idx),
            None => rays.push(CriticalRay {
                ray,
                witnesses: vec![idx],
            }),
        }
    }
    // all points have traces of one sign, so they share an open half-plane
    rays.sort_by(|a, b| a.ray.angular_cmp(&b.ray));
    Ok(CriticalRaySet { rays })
}

/// Whether `R₊·ν` meets the moment polytope.
pub fn ray_meets_image(rep: &RepDescriptor, nu: &RayDir) -> Result<bool> {
    Ok(moment_polytope(rep)?.ray_interval(nu).is_some())
}

/// Transversality of a moment map to the ray `R₊·ν`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witnesses", rename_all = "snake_case")]
pub enum Verdict {
    Transverse,
    Critical(Vec<IndexPair>),
    /// The ray does not meet the image; transversality holds vacuously.
    MissesImage,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Transverse => "transverse",
            Verdict::Critical(_) => "critical",
            Verdict::MissesImage => "misses_image",
        }
    }
}

fn check_transversality_inputs(rep: &RepDescriptor) -> Result<()> {
    require_never_zero(rep)?;
    if !rep.is_generic() {
        return Err(Error::NotGeneric);
    }
    Ok(())
}

/// Verdict for the torus moment map `Ψ`.
pub fn psi_transverse(rep: &RepDescriptor, nu: &RayDir) -> Result<Verdict> {
    check_transversality_inputs(rep)?;
    let rays = critical_rays(rep)?;
    if let Some(w) = rays.witnesses(nu) {
        return Ok(Verdict::Critical(w.to_vec()));
    }
    if !ray_meets_image(rep, nu)? {
        return Ok(Verdict::MissesImage);
    }
    Ok(Verdict::Transverse)
}

/// Verdict for the full moment map `Φ` against the cone over the coadjoint
/// orbit of `i·diag(ν)`. Defined only off the diagonal `ν1 = ν2`.
pub fn phi_transverse(rep: &RepDescriptor, nu: &RayDir) -> Result<Verdict> {
    check_transversality_inputs(rep)?;
    if nu.x() == nu.y() {
        return Err(Error::DiagonalRay);
    }
    psi_transverse(rep, nu)
}

/// Open sector strictly between two consecutive critical rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Wedge {
    pub lo: RayDir,
    pub hi: RayDir,
}

impl Wedge {
    pub fn contains_strictly(&self, nu: &RayDir) -> bool {
        self.lo.cross(nu) > 0 && nu.cross(&self.hi) > 0
    }

    pub fn contains_closed(&self, nu: &RayDir) -> bool {
        self.lo.cross(nu) >= 0 && nu.cross(&self.hi) >= 0 && self.lo.dot(nu) + self.hi.dot(nu) > 0
    }
}

pub fn wedges(rep: &RepDescriptor) -> Result<Vec<Wedge>> {
    check_transversality_inputs(rep)?;
    let dirs = critical_rays(rep)?.directions();
    // the extreme critical rays pass through polytope vertices, so every
    // consecutive sector lies inside the image cone
    Ok(dirs
        .windows(2)
        .map(|w| Wedge { lo: w[0], hi: w[1] })
        .collect())
}

/// Index of the wedge whose interior contains `ν`.
pub fn wedge_of(rep: &RepDescriptor, nu: &RayDir) -> Result<usize> {
    match psi_transverse(rep, nu)? {
        Verdict::Critical(_) => Err(Error::OnBoundary),
        Verdict::MissesImage => Err(Error::OutsideImage),
        Verdict::Transverse => wedges(rep)?
            .iter()
            .position(|w| w.contains_strictly(nu))
            .ok_or(Error::OutsideImage),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(raw: &[(i64, i64)]) -> RepDescriptor {
        RepDescriptor::validate(raw).unwrap()
    }

    fn ray(x: i64, y: i64) -> RayDir {
        RayDir::new(x, y).unwrap()
    }

    fn p(a: usize, j: usize) -> IndexPair {
        IndexPair::new(a, j)
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segment_jkl(2, 0), ((2, 0), (0, 2)));
        assert_eq!(segment_jkl(2, 1), ((3, 1), (1, 3)));
        assert_eq!(segment_jkl(0, 5), ((5, 5), (5, 5)));
    }

    #[test]
    fn polytope_examples() {
        let poly = moment_polytope(&rep(&[(0, 2)])).unwrap();
        assert_eq!(poly.vertices(), &[Point2::int(0, 2), Point2::int(2, 0)]);
        let poly = moment_polytope(&rep(&[(1, 0)])).unwrap();
        assert_eq!(poly.vertices(), &[Point2::int(1, 1)]);
        assert_eq!(moment_polytope(&rep(&[(0, 1)])), Err(Error::NotGeneric));
    }

    #[test]
    fn polytope_matches_brute_force_hull() {
        // oracle: a candidate is a vertex iff it is not a convex combination
        // of the other candidates; with four points, check every triangle and segment
        let cands = [(1, 0), (0, 1), (3, 1), (1, 3)];
        let inside_tri = |p: (i64, i64), a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
            let s = |u: (i64, i64), v: (i64, i64), w: (i64, i64)| {
                (v.0 - u.0) * (w.1 - u.1) - (v.1 - u.1) * (w.0 - u.0)
            };
            let (d1, d2, d3) = (s(a, b, p), s(b, c, p), s(c, a, p));
            !((d1 < 0 || d2 < 0 || d3 < 0) && (d1 > 0 || d2 > 0 || d3 > 0))
        };
        let mut expected: Vec<(i64, i64)> = cands
            .iter()
            .copied()
            .filter(|&p| {
                let others: Vec<_> = cands.iter().copied().filter(|&q| q != p).collect();
                !inside_tri(p, others[0], others[1], others[2])
            })
            .collect();
        expected.sort();
        let poly = moment_polytope(&rep(&[(0, 1), (0, 1), (1, 2)])).unwrap();
        let mut got: Vec<(i64, i64)> = poly
            .vertices()
            .iter()
            .map(|v| (v.x.to_integer(), v.y.to_integer()))
            .collect();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(got, vec![(0, 1), (1, 0), (1, 3), (3, 1)]);
    }

    #[test]
    fn critical_ray_examples() {
        let dirs = critical_rays(&rep(&[(0, 2)])).unwrap().directions();
        assert_eq!(dirs, vec![ray(1, 0), ray(1, 1), ray(0, 1)]);
        let dirs = critical_rays(&rep(&[(0, 1), (0, 1)])).unwrap().directions();
        assert_eq!(dirs, vec![ray(1, 0), ray(0, 1)]);
        let set = critical_rays(&rep(&[(1, 2)])).unwrap();
        assert_eq!(set.directions(), vec![ray(3, 1), ray(1, 1), ray(1, 3)]);
        assert_eq!(set.witnesses(&ray(1, 1)), Some(&[p(1, 1)][..]));
        assert_eq!(critical_rays(&rep(&[(-1, 2)])), Err(Error::MomentHitsZero));
    }

    #[test]
    fn witnesses_grouped_across_summands() {
        let set = critical_rays(&rep(&[(0, 2), (1, 0)])).unwrap();
        assert_eq!(set.witnesses(&ray(1, 1)), Some(&[p(1, 1), p(2, 0)][..]));
    }

    #[test]
    fn negative_trace_reps_sort_consistently() {
        let set = critical_rays(&rep(&[(-2, 1), (-2, 1)])).unwrap();
        assert_eq!(set.directions(), vec![ray(-2, -1), ray(-1, -2)]);
        assert_eq!(wedges(&rep(&[(-2, 1), (-2, 1)])).unwrap().len(), 1);
    }

    #[test]
    fn ray_meets_image_examples() {
        let mu2 = rep(&[(0, 2)]);
        assert!(ray_meets_image(&mu2, &ray(1, 1)).unwrap());
        assert!(!ray_meets_image(&mu2, &ray(1, -1)).unwrap());
        assert!(ray_meets_image(&mu2, &ray(5, 1)).unwrap());
    }

    #[test]
    fn psi_examples() {
        let mu2 = rep(&[(0, 2)]);
        assert_eq!(
            psi_transverse(&mu2, &ray(1, 1)).unwrap(),
            Verdict::Critical(vec![p(1, 1)])
        );
        assert_eq!(
            psi_transverse(&mu2, &ray(3, 1)).unwrap(),
            Verdict::Transverse
        );
        assert_eq!(
            psi_transverse(&mu2, &ray(1, -1)).unwrap(),
            Verdict::MissesImage
        );
        assert_eq!(
            psi_transverse(&rep(&[(0, 1)]), &ray(3, 1)),
            Err(Error::NotGeneric)
        );
        assert_eq!(
            psi_transverse(&rep(&[(-1, 2)]), &ray(3, 1)),
            Err(Error::MomentHitsZero)
        );
    }

    #[test]
    fn phi_examples() {
        let mu2 = rep(&[(0, 2)]);
        assert_eq!(
            phi_transverse(&mu2, &ray(3, 1)).unwrap(),
            Verdict::Transverse
        );
        assert_eq!(phi_transverse(&mu2, &ray(1, 1)), Err(Error::DiagonalRay));
        assert_eq!(
            phi_transverse(&rep(&[(0, 1), (0, 1)]), &ray(2, 1)).unwrap(),
            Verdict::Transverse
        );
    }

    #[test]
    fn wedge_examples() {
        let w = wedges(&rep(&[(0, 2)])).unwrap();
        assert_eq!(
            w,
            vec![
                Wedge {
                    lo: ray(1, 0),
                    hi: ray(1, 1)
                },
                Wedge {
                    lo: ray(1, 1),
                    hi: ray(0, 1)
                }
            ]
        );
        let w = wedges(&rep(&[(0, 1), (0, 1)])).unwrap();
        assert_eq!(
            w,
            vec![Wedge {
                lo: ray(1, 0),
                hi: ray(0, 1)
            }]
        );
        let w = wedges(&rep(&[(1, 2)])).unwrap();
        assert_eq!(
            w,
            vec![
                Wedge {
                    lo: ray(3, 1),
                    hi: ray(1, 1)
                },
                Wedge {
                    lo: ray(1, 1),
                    hi: ray(1, 3)
                }
            ]
        );
        assert!(wedges(&rep(&[(1, 0)])).unwrap().is_empty());
    }

    #[test]
    fn wedge_of_examples() {
        let mu2 = rep(&[(0, 2)]);
        assert_eq!(wedge_of(&mu2, &ray(3, 1)), Ok(0));
        assert_eq!(wedge_of(&mu2, &ray(1, 3)), Ok(1));
        assert_eq!(wedge_of(&mu2, &ray(1, 1)), Err(Error::OnBoundary));
        assert_eq!(wedge_of(&mu2, &ray(-1, 3)), Err(Error::OutsideImage));
    }
}
