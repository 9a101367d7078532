//! First Chern numbers of a line bundle over the unit cell `[0,1]²` of the
//! `(a, b)` plane, by three independent routes:
//!
//! - [`chern_weil`]: midpoint quadrature of the curvature, divided by `−2πi`;
//! - [`lattice_chern`]: U(1) link variables from parallel transport and the
//!   principal-branch plaquette phases;
//! - [`holonomy_degree`]: winding of the parallel transport phase around the
//!   cell boundary, with the branch tracked step by step.
//!
//! All three take callbacks so they can be run on synthetic connections.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::prequantum::{curvature, segment_log_transport, TorusModuliPoint};

/// Margin from `±π` inside which a plaquette phase is rejected.
pub const ADMISSIBILITY_MARGIN: f64 = 1e-6;
/// Tolerance for the lattice phase sum to count as an integer.
pub const INTEGRALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// Counterclockwise in the `(a, b)` plane, i.e. `da∧db > 0`.
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(&self) -> f64 {
        match self {
            Orientation::Positive => 1.0,
            Orientation::Negative => -1.0,
        }
    }
}

/// Curvature density `Ω(∂_a, ∂_b)` at a point; purely imaginary.
pub trait CurvatureSampler {
    fn density(&self, p: TorusModuliPoint) -> Complex64;
}

impl<F: Fn(TorusModuliPoint) -> Complex64> CurvatureSampler for F {
    fn density(&self, p: TorusModuliPoint) -> Complex64 {
        self(p)
    }
}

/// Parallel transport along the straight segment `from → to`.
pub trait TransportOracle {
    fn segment(&self, from: TorusModuliPoint, to: TorusModuliPoint) -> Complex64;
}

impl<F: Fn(TorusModuliPoint, TorusModuliPoint) -> Complex64> TransportOracle for F {
    fn segment(&self, from: TorusModuliPoint, to: TorusModuliPoint) -> Complex64 {
        self(from, to)
    }
}

/// The prequantum bundle over the torus family (curvature `−4πi`).
#[derive(Debug, Clone, Copy, Default)]
pub struct PrequantumBundle;

impl CurvatureSampler for PrequantumBundle {
    fn density(&self, p: TorusModuliPoint) -> Complex64 {
        curvature(&p)
    }
}

impl TransportOracle for PrequantumBundle {
    fn segment(&self, from: TorusModuliPoint, to: TorusModuliPoint) -> Complex64 {
        Complex64::from_polar(1.0, segment_log_transport(&from, &to))
    }
}

/// The trivial bundle with the product connection.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialBundle;

impl CurvatureSampler for TrivialBundle {
    fn density(&self, _p: TorusModuliPoint) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
}

impl TransportOracle for TrivialBundle {
    fn segment(&self, _from: TorusModuliPoint, _to: TorusModuliPoint) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
}

/// Connection given by an imaginary 1-form `(ω_a, ω_b)`; transport
/// `exp(−∫ω)` by 8-point Gauss–Legendre quadrature on each segment.
pub struct FormConnection<F> {
    form: F,
}

impl<F> FormConnection<F>
where
    F: Fn(TorusModuliPoint) -> (Complex64, Complex64),
{
    pub fn new(form: F) -> Self {
        FormConnection { form }
    }
}

const GL8_NODES: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL8_WEIGHTS: [f64; 8] = [
    0.101_228_536_290_376_3,
    0.222_381_034_453_374_5,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362,
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

impl<F> TransportOracle for FormConnection<F>
where
    F: Fn(TorusModuliPoint) -> (Complex64, Complex64),
{
    fn segment(&self, from: TorusModuliPoint, to: TorusModuliPoint) -> Complex64 {
        let (da, db) = (to.a - from.a, to.b - from.b);
        let integral: Complex64 = GL8_NODES
            .iter()
            .zip(GL8_WEIGHTS)
            .map(|(x, w)| {
                let s = 0.5 * (x + 1.0);
                let p = TorusModuliPoint::new(from.a + s * da, from.b + s * db);
                let (wa, wb) = (self.form)(p);
                0.5 * w * (wa * da + wb * db)
            })
            .sum();
        (-integral).exp()
    }
}

fn require_grid(n: usize, minimum: usize) -> Result<()> {
    if n < minimum {
        return Err(Error::GridTooSmall { minimum, found: n });
    }
    Ok(())
}

/// Midpoint-rule integral of the curvature over the unit cell.
pub fn curvature_integral<S: CurvatureSampler + ?Sized>(
    sampler: &S,
    n: usize,
    orientation: Orientation,
) -> Result<Complex64> {
    require_grid(n, 1)?;
    let h = 1.0 / n as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let p = TorusModuliPoint::new((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
            total += sampler.density(p);
        }
    }
    Ok(total * (h * h * orientation.sign()))
}

/// `(1/−2πi)·∫Ω`.
pub fn chern_weil<S: CurvatureSampler + ?Sized>(
    sampler: &S,
    n: usize,
    orientation: Orientation,
) -> Result<f64> {
    require_grid(n, 2)?;
    let c = curvature_integral(sampler, n, orientation)? / Complex64::new(0.0, -2.0 * PI);
    Ok(c.re)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticeChern {
    pub value: i64,
    /// Plaquette phases, row-major with `b` index outer: `phases[j * n + i]`.
    pub phases: Vec<f64>,
    pub phase_sum: f64,
}

/// Plaquette-phase Chern number on an `n × n` grid of the unit cell.
///
/// Each plaquette phase is the principal argument of the product of the four
/// oriented link variables; the Chern number is `(1/2π)·Σ phases`.
pub fn lattice_chern<T: TransportOracle + ?Sized>(
    transport: &T,
    n: usize,
    orientation: Orientation,
) -> Result<LatticeChern> {
    require_grid(n, 2)?;
    let node = |i: usize, j: usize| TorusModuliPoint::new(i as f64 / n as f64, j as f64 / n as f64);
    // horizontal links (i,j)→(i+1,j) and vertical links (i,j)→(i,j+1)
    let mut horizontal = vec![Complex64::new(1.0, 0.0); n * (n + 1)];
    let mut vertical = vec![Complex64::new(1.0, 0.0); (n + 1) * n];
    for j in 0..=n {
        for i in 0..n {
            horizontal[j * n + i] = transport.segment(node(i, j), node(i + 1, j));
        }
    }
    for j in 0..n {
        for i in 0..=n {
            vertical[j * (n + 1) + i] = transport.segment(node(i, j), node(i, j + 1));
        }
    }
    let mut phases = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let u = horizontal[j * n + i]
                * vertical[j * (n + 1) + i + 1]
                * horizontal[(j + 1) * n + i].conj()
                * vertical[j * (n + 1) + i].conj();
            let u = if orientation == Orientation::Negative { u.conj() } else { u };
            let phase = u.arg();
            if PI - phase.abs() < ADMISSIBILITY_MARGIN {
                return Err(Error::Admissibility {
                    i,
                    j,
                    phase,
                    margin: ADMISSIBILITY_MARGIN,
                });
            }
            phases.push(phase);
        }
    }
    let phase_sum: f64 = phases.iter().sum();
    let raw = phase_sum / (2.0 * PI);
    let value = raw.round();
    if (raw - value).abs() > INTEGRALITY_TOL {
        return Err(Error::NonIntegerChern { value: raw });
    }
    Ok(LatticeChern {
        value: value as i64,
        phases,
        phase_sum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryRefinement {
    /// Steps per side of the cell on the first pass.
    pub initial_steps: usize,
    /// How many times the step count may be doubled.
    pub max_doublings: usize,
    /// Agreement required between consecutive passes.
    pub tolerance: f64,
}

impl Default for BoundaryRefinement {
    fn default() -> Self {
        BoundaryRefinement {
            initial_steps: 4,
            max_doublings: 12,
            tolerance: 1e-9,
        }
    }
}

/// Unwrapped transport phase around the cell boundary with `steps` per side,
/// or `None` if some step turns by `π/2` or more (branch not resolved).
fn boundary_winding<T: TransportOracle + ?Sized>(
    transport: &T,
    steps: usize,
    orientation: Orientation,
) -> Option<f64> {
    let mut corners = [
        TorusModuliPoint::new(0.0, 0.0),
        TorusModuliPoint::new(1.0, 0.0),
        TorusModuliPoint::new(1.0, 1.0),
        TorusModuliPoint::new(0.0, 1.0),
        TorusModuliPoint::new(0.0, 0.0),
    ];
    if orientation == Orientation::Negative {
        corners.reverse();
    }
    let mut total = 0.0;
    for side in corners.windows(2) {
        let (p, q) = (side[0], side[1]);
        for k in 0..steps {
            let s0 = k as f64 / steps as f64;
            let s1 = (k + 1) as f64 / steps as f64;
            let from = TorusModuliPoint::new(p.a + s0 * (q.a - p.a), p.b + s0 * (q.b - p.b));
            let to = TorusModuliPoint::new(p.a + s1 * (q.a - p.a), p.b + s1 * (q.b - p.b));
            let step = transport.segment(from, to).arg();
            if step.abs() >= 0.5 * PI {
                return None;
            }
            total += step;
        }
    }
    Some(total)
}

/// Degree from the winding of the boundary transport phase, `Φ/2π`.
///
/// The step count is doubled until two consecutive passes agree to
/// `refine.tolerance`, with every step phase below `π/2`.
pub fn holonomy_degree<T: TransportOracle + ?Sized>(
    transport: &T,
    refine: BoundaryRefinement,
    orientation: Orientation,
) -> Result<f64> {
    if refine.initial_steps == 0 {
        return Err(Error::GridTooSmall { minimum: 1, found: 0 });
    }
    let mut steps = refine.initial_steps;
    let mut previous: Option<f64> = None;
    for _ in 0..=refine.max_doublings {
        let current = boundary_winding(transport, steps, orientation);
        if let (Some(prev), Some(cur)) = (previous, current) {
            if (prev - cur).abs() <= refine.tolerance * 2.0 * PI {
                return Ok(cur / (2.0 * PI));
            }
        }
        previous = current;
        steps *= 2;
    }
    Err(Error::BranchTracking(format!(
        "boundary winding not stable after {} doublings (last: {:?})",
        refine.max_doublings, previous
    )))
}

/// `deg(L) = deg(f*L) / deg(f)`, exact.
pub fn degree_from_covering(upstairs: i64, covering: i64) -> Result<i64> {
    if covering <= 0 {
        return Err(Error::Invalid(format!(
            "covering degree must be positive, got {covering}"
        )));
    }
    if upstairs % covering != 0 {
        return Err(Error::NonIntegralDegree { upstairs, covering });
    }
    Ok(upstairs / covering)
}

/// JSON record for one Chern-number computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodReport {
    pub method: String,
    pub grid: usize,
    pub value: f64,
    pub admissible: bool,
    pub runtime_ms: f64,
}
