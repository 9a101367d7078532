//! The Weyl quotient of the torus `T×T = ℝ²/ℤ²` by `(a, b) ↦ (−a, −b)`.
//!
//! The quotient is embedded in ℝ³ by the invariants
//! `(u, v, w) = (cos 2πa, cos 2πb, sin 2πa · sin 2πb)`, whose image is the
//! surface `(1 − u²)(1 − v²) = w²`. The quotient map is a branched double
//! cover with branch points at the 2-torsion points `{0, ½}²`.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::chern::CurvatureSampler;
use crate::error::{Error, Result};
use crate::prequantum::TorusModuliPoint;

/// Minimum distance of an admissible regular value from every branch image.
pub const BRANCH_EXCLUSION: f64 = 1e-3;
const SAME_POINT_TOL: f64 = 1e-9;
const MAX_RESAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PillowcasePoint {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

impl PillowcasePoint {
    /// `|(1 − u²)(1 − v²) − w²|`.
    pub fn relation_defect(&self) -> f64 {
        ((1.0 - self.u * self.u) * (1.0 - self.v * self.v) - self.w * self.w).abs()
    }

    pub fn distance(&self, other: &PillowcasePoint) -> f64 {
        ((self.u - other.u).powi(2) + (self.v - other.v).powi(2) + (self.w - other.w).powi(2)).sqrt()
    }
}

fn reduce(x: f64) -> f64 {
    let r = x - x.floor();
    if r > 1.0 - SAME_POINT_TOL {
        0.0
    } else {
        r
    }
}

fn reduced(p: TorusModuliPoint) -> TorusModuliPoint {
    TorusModuliPoint::new(reduce(p.a), reduce(p.b))
}

/// Distance on `ℝ²/ℤ²`.
pub fn torus_distance(p: &TorusModuliPoint, q: &TorusModuliPoint) -> f64 {
    let wrap = |d: f64| {
        let r = d - d.round();
        r.abs()
    };
    wrap(p.a - q.a).hypot(wrap(p.b - q.b))
}

/// `{p, −p}` reduced to `[0,1)²`; a single point exactly at the fixed points.
pub fn weyl_orbit(p: &TorusModuliPoint) -> Vec<TorusModuliPoint> {
    let first = reduced(*p);
    let second = reduced(TorusModuliPoint::new(-p.a, -p.b));
    if torus_distance(&first, &second) < SAME_POINT_TOL {
        vec![first]
    } else {
        vec![first, second]
    }
}

pub fn fixed_points() -> [TorusModuliPoint; 4] {
    [
        TorusModuliPoint::new(0.0, 0.0),
        TorusModuliPoint::new(0.0, 0.5),
        TorusModuliPoint::new(0.5, 0.0),
        TorusModuliPoint::new(0.5, 0.5),
    ]
}

pub fn quotient_map(p: &TorusModuliPoint) -> PillowcasePoint {
    let (sa, ca) = (2.0 * PI * p.a).sin_cos();
    let (sb, cb) = (2.0 * PI * p.b).sin_cos();
    PillowcasePoint {
        u: ca,
        v: cb,
        w: sa * sb,
    }
}

pub fn branch_images() -> [PillowcasePoint; 4] {
    fixed_points().map(|p| quotient_map(&p))
}

/// Distance from `q` to the nearest branch image.
pub fn branch_distance(q: &PillowcasePoint) -> f64 {
    branch_images()
        .iter()
        .map(|b| b.distance(q))
        .fold(f64::INFINITY, f64::min)
}

/// All torus points over `q`, without the branch-proximity check.
///
/// Inverting the cosines gives `a ≡ ±α`, `b ≡ ±β` with `α, β ∈ [0, ½]`; the
/// sign of `w` selects the pair `{(α, β), (−α, −β)}` or `{(α, −β), (−α, β)}`.
pub fn solve_preimages(q: &PillowcasePoint) -> Result<Vec<TorusModuliPoint>> {
    if q.relation_defect() > 1e-8 || q.u.abs() > 1.0 + 1e-12 || q.v.abs() > 1.0 + 1e-12 {
        return Err(Error::Invalid(format!("{q:?} is not on the pillowcase")));
    }
    let alpha = q.u.clamp(-1.0, 1.0).acos() / (2.0 * PI);
    let beta = q.v.clamp(-1.0, 1.0).acos() / (2.0 * PI);
    let candidates = if q.w >= 0.0 {
        [(alpha, beta), (-alpha, -beta)]
    } else {
        [(alpha, -beta), (-alpha, beta)]
    };
    let mut out: Vec<TorusModuliPoint> = Vec::with_capacity(2);
    for (a, b) in candidates {
        let p = reduced(TorusModuliPoint::new(a, b));
        if !out.iter().any(|o| torus_distance(o, &p) < SAME_POINT_TOL) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Preimages of a regular value; rejects values near a branch image.
pub fn regular_preimages(q: &PillowcasePoint) -> Result<Vec<TorusModuliPoint>> {
    let distance = branch_distance(q);
    if distance < BRANCH_EXCLUSION {
        return Err(Error::BranchProximity { distance });
    }
    solve_preimages(q)
}

/// Preimage count at random regular values; the count must be the same at
/// every sample.
pub fn covering_degree<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<usize> {
    if samples == 0 {
        return Err(Error::Invalid("at least one sample is required".into()));
    }
    let mut counts = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut attempt = 0;
        let count = loop {
            let p = TorusModuliPoint::new(rng.gen(), rng.gen());
            match regular_preimages(&quotient_map(&p)) {
                Ok(pre) => break pre.len(),
                Err(Error::BranchProximity { distance }) => {
                    attempt += 1;
                    if attempt >= MAX_RESAMPLES {
                        return Err(Error::BranchProximity { distance });
                    }
                }
                Err(e) => return Err(e),
            }
        };
        counts.push(count);
    }
    if counts.iter().any(|c| *c != counts[0]) {
        return Err(Error::InconsistentCount(counts));
    }
    Ok(counts[0])
}

/// `max |Ω(−p) − Ω(p)|` over random points.
pub fn weyl_invariance_defect<S, R>(sampler: &S, samples: usize, rng: &mut R) -> f64
where
    S: CurvatureSampler + ?Sized,
    R: Rng + ?Sized,
{
    (0..samples)
        .map(|_| {
            let p = TorusModuliPoint::new(rng.gen(), rng.gen());
            let q = TorusModuliPoint::new(-p.a, -p.b);
            (sampler.density(q) - sampler.density(p)).norm()
        })
        .fold(0.0, f64::max)
}
