//! The prequantum line bundle over the abelian torus family of flat
//! connections on the genus-1 surface.
//!
//! A point `(a, b)` stands for the connection `A = X(a dx + b dy)` on the
//! torus with coordinates `x, y ∈ [0, 2π)`, whose holonomies are
//! `exp(2πaX), exp(2πbX)`. The lattice character `(m, n)` is the gauge
//! transformation `g = exp((mx + ny)X)`, which shifts `(a, b)` by `(m, n)`.
//! One unit of `a` corresponds to `2π` in the angular parametrization.
//!
//! Conventions, fixed together so that they are mutually consistent:
//!
//! - gauge cocycle `Θ((a,b),(m,n)) = exp(−2πi(mb − na))`;
//! - connection form `ω′ = −2πi(a db − b da)`, curvature `dω′ = −4πi da∧db`;
//! - parallel transport `exp(−∫ω′)`;
//! - `ω′(p + c) = ω′(p) + Θ⁻¹dΘ`, so transporting a translated path picks up
//!   `Θ(start)/Θ(end)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lie::{bracket, trace_form, Su2Vector};

/// Minimum slab grid size along each axis.
pub const MIN_SLAB_GRID: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusModuliPoint {
    pub a: f64,
    pub b: f64,
}

impl TorusModuliPoint {
    pub const fn new(a: f64, b: f64) -> Self {
        TorusModuliPoint { a, b }
    }

    pub fn distance(&self, other: &TorusModuliPoint) -> f64 {
        (self.a - other.a).hypot(self.b - other.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylFlag {
    Identity,
    Reflection,
}

impl WeylFlag {
    pub fn sign(&self) -> f64 {
        match self {
            WeylFlag::Identity => 1.0,
            WeylFlag::Reflection => -1.0,
        }
    }

    fn compose(self, other: WeylFlag) -> WeylFlag {
        if self == other {
            WeylFlag::Identity
        } else {
            WeylFlag::Reflection
        }
    }
}

/// Element `(m, n, w)` of the lattice ⋊ Weyl group acting by
/// `p ↦ w·p + (m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugeCharacter {
    pub m: i64,
    pub n: i64,
    pub weyl: WeylFlag,
}

impl GaugeCharacter {
    pub const fn lattice(m: i64, n: i64) -> Self {
        GaugeCharacter {
            m,
            n,
            weyl: WeylFlag::Identity,
        }
    }

    pub const fn with_reflection(m: i64, n: i64) -> Self {
        GaugeCharacter {
            m,
            n,
            weyl: WeylFlag::Reflection,
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &GaugeCharacter) -> GaugeCharacter {
        let s = self.weyl.sign() as i64;
        GaugeCharacter {
            m: s * first.m + self.m,
            n: s * first.n + self.n,
            weyl: self.weyl.compose(first.weyl),
        }
    }

    fn require_lattice(&self) -> Result<()> {
        if self.weyl == WeylFlag::Reflection {
            return Err(Error::Invalid(
                "the gauge cocycle is only defined for lattice characters".into(),
            ));
        }
        Ok(())
    }
}

pub fn gauge_action(p: &TorusModuliPoint, c: &GaugeCharacter) -> TorusModuliPoint {
    let s = c.weyl.sign();
    TorusModuliPoint::new(s * p.a + c.m as f64, s * p.b + c.n as f64)
}

/// An su(2)-valued 1-form `A_t dt + A_x dx + A_y dy` sampled at cell midpoints
/// of the slab `[0,1] × [0,2π)²`, stored t-major, then x, then y.
#[derive(Debug, Clone, PartialEq)]
pub struct CSField {
    nt: usize,
    nx: usize,
    ny: usize,
    values: Vec<[Su2Vector; 3]>,
}

impl CSField {
    pub fn zeros(nt: usize, nx: usize, ny: usize) -> Self {
        CSField {
            nt,
            nx,
            ny,
            values: vec![[Su2Vector::ZERO; 3]; nt * nx * ny],
        }
    }

    /// Samples `f(t, x, y) = [A_t, A_x, A_y]` at the cell midpoints.
    pub fn sample<F>(nt: usize, nx: usize, ny: usize, f: F) -> Self
    where
        F: Fn(f64, f64, f64) -> [Su2Vector; 3],
    {
        let mut values = Vec::with_capacity(nt * nx * ny);
        for i in 0..nt {
            let t = (i as f64 + 0.5) / nt as f64;
            for j in 0..nx {
                let x = 2.0 * PI * (j as f64 + 0.5) / nx as f64;
                for k in 0..ny {
                    let y = 2.0 * PI * (k as f64 + 0.5) / ny as f64;
                    values.push(f(t, x, y));
                }
            }
        }
        CSField { nt, nx, ny, values }
    }

    /// The linear interpolation `A + t·g⁻¹dg` between the connection at `p`
    /// and its gauge transform by the lattice character `c`.
    pub fn slab_interpolation(
        p: &TorusModuliPoint,
        c: &GaugeCharacter,
        grid: (usize, usize, usize),
    ) -> Self {
        let x = Su2Vector::torus_generator();
        let (a, b, m, n) = (p.a, p.b, c.m as f64, c.n as f64);
        CSField::sample(grid.0, grid.1, grid.2, |t, _, _| {
            [Su2Vector::ZERO, (a + t * m) * x, (b + t * n) * x]
        })
    }

    pub fn grid(&self) -> (usize, usize, usize) {
        (self.nt, self.nx, self.ny)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.nx + j) * self.ny + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> [Su2Vector; 3] {
        self.values[self.idx(i, j, k)]
    }

    /// `∂_axis A_comp` at a sample: centered differences, periodic in x and y,
    /// one-sided at the two t faces.
    fn derivative(&self, axis: usize, comp: usize, i: usize, j: usize, k: usize) -> Su2Vector {
        let at = |i: usize, j: usize, k: usize| self.values[self.idx(i, j, k)][comp];
        match axis {
            0 => {
                let h = 1.0 / self.nt as f64;
                if self.nt == 1 {
                    Su2Vector::ZERO
                } else if i == 0 {
                    (1.0 / h) * (at(1, j, k) - at(0, j, k))
                } else if i == self.nt - 1 {
                    (1.0 / h) * (at(i, j, k) - at(i - 1, j, k))
                } else {
                    (0.5 / h) * (at(i + 1, j, k) - at(i - 1, j, k))
                }
            }
            1 => {
                let h = 2.0 * PI / self.nx as f64;
                let (jp, jm) = ((j + 1) % self.nx, (j + self.nx - 1) % self.nx);
                (0.5 / h) * (at(i, jp, k) - at(i, jm, k))
            }
            _ => {
                let h = 2.0 * PI / self.ny as f64;
                let (kp, km) = ((k + 1) % self.ny, (k + self.ny - 1) % self.ny);
                (0.5 / h) * (at(i, j, kp) - at(i, j, km))
            }
        }
    }

    /// CSV dump: `it,ix,iy` followed by the nine components of `A_t, A_x, A_y`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("it,ix,iy,at1,at2,at3,ax1,ax2,ax3,ay1,ay2,ay3\n");
        for i in 0..self.nt {
            for j in 0..self.nx {
                for k in 0..self.ny {
                    let _ = write!(out, "{i},{j},{k}");
                    for v in self.get(i, j, k) {
                        for c in v.components() {
                            let _ = write!(out, ",{c:e}");
                        }
                    }
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<Self> {
        let mut rows: Vec<([usize; 3], [Su2Vector; 3])> = Vec::new();
        for (line_no, line) in s.lines().enumerate().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 12 {
                return Err(Error::Invalid(format!(
                    "line {}: expected 12 fields, got {}",
                    line_no + 1,
                    fields.len()
                )));
            }
            let bad = |e: String| Error::Invalid(format!("line {}: {}", line_no + 1, e));
            let mut ix = [0usize; 3];
            for (d, f) in ix.iter_mut().zip(&fields[..3]) {
                *d = f.trim().parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?;
            }
            let mut c = [0.0f64; 9];
            for (d, f) in c.iter_mut().zip(&fields[3..]) {
                *d = f.trim().parse().map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?;
            }
            rows.push((
                ix,
                [
                    Su2Vector::new(c[0], c[1], c[2]),
                    Su2Vector::new(c[3], c[4], c[5]),
                    Su2Vector::new(c[6], c[7], c[8]),
                ],
            ));
        }
        let dims = rows.iter().fold([0usize; 3], |acc, (ix, _)| {
            [acc[0].max(ix[0] + 1), acc[1].max(ix[1] + 1), acc[2].max(ix[2] + 1)]
        });
        let mut field = CSField::zeros(dims[0], dims[1], dims[2]);
        if rows.len() != field.values.len() {
            return Err(Error::Invalid(format!(
                "{} rows do not fill a {}x{}x{} grid",
                rows.len(),
                dims[0],
                dims[1],
                dims[2]
            )));
        }
        let mut seen = vec![false; rows.len()];
        for ([i, j, k], v) in rows {
            let idx = field.idx(i, j, k);
            if seen[idx] {
                return Err(Error::Invalid(format!("duplicate grid index ({i},{j},{k})")));
            }
            seen[idx] = true;
            field.values[idx] = v;
        }
        Ok(field)
    }
}

/// `CS(𝐀) = (1/4π) ∫ Tr(𝐀 d𝐀 + ⅔ 𝐀³)` over the slab, by the midpoint rule.
///
/// In components the integrand (coefficient of `dt∧dx∧dy`) is
/// `Σ ε^{ijk} Tr(A_i ∂_j A_k) + 2 Tr(A_t [A_x, A_y])`.
pub fn cs_functional(f: &CSField) -> Result<f64> {
    let (nt, nx, ny) = f.grid();
    let smallest = nt.min(nx).min(ny);
    if smallest < MIN_SLAB_GRID {
        return Err(Error::GridTooSmall {
            minimum: MIN_SLAB_GRID,
            found: smallest,
        });
    }
    // (i, j, k, sign) for the six permutations of (t, x, y)
    const EPS: [(usize, usize, usize, f64); 6] = [
        (0, 1, 2, 1.0),
        (1, 2, 0, 1.0),
        (2, 0, 1, 1.0),
        (0, 2, 1, -1.0),
        (2, 1, 0, -1.0),
        (1, 0, 2, -1.0),
    ];
    let mut total = 0.0;
    for i in 0..nt {
        for j in 0..nx {
            for k in 0..ny {
                let a = f.get(i, j, k);
                let mut density = 0.0;
                for &(p, q, r, s) in &EPS {
                    density += s * trace_form(&a[p], &f.derivative(q, r, i, j, k));
                }
                density += 2.0 * trace_form(&a[0], &bracket(&a[1], &a[2]));
                total += density;
            }
        }
    }
    let cell = (1.0 / nt as f64) * (2.0 * PI / nx as f64) * (2.0 * PI / ny as f64);
    Ok(total * cell / (4.0 * PI))
}

/// `Θ = exp(i·CS)` of the slab interpolation between `A` and `A^g`.
pub fn cocycle_numeric(
    p: &TorusModuliPoint,
    c: &GaugeCharacter,
    grid: (usize, usize, usize),
) -> Result<Complex64> {
    c.require_lattice()?;
    let cs = cs_functional(&CSField::slab_interpolation(p, c, grid))?;
    Ok(Complex64::from_polar(1.0, cs))
}

/// `Θ((a,b),(m,n)) = exp(−2πi(mb − na))`.
pub fn cocycle_exact(p: &TorusModuliPoint, c: &GaugeCharacter) -> Result<Complex64> {
    c.require_lattice()?;
    Ok(cocycle_value(p, c.m, c.n))
}

fn cocycle_value(p: &TorusModuliPoint, m: i64, n: i64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI * (m as f64 * p.b - n as f64 * p.a))
}

/// Components `(ω′(∂_a), ω′(∂_b)) = (2πi·b, −2πi·a)`.
pub fn connection_form(p: &TorusModuliPoint) -> (Complex64, Complex64) {
    (
        Complex64::new(0.0, 2.0 * PI * p.b),
        Complex64::new(0.0, -2.0 * PI * p.a),
    )
}

/// `Ω′(∂_a, ∂_b)`, constant `−4πi`.
pub fn curvature(_p: &TorusModuliPoint) -> Complex64 {
    Complex64::new(0.0, -4.0 * PI)
}

/// Polyline in the `(a, b)` plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinePath {
    points: Vec<TorusModuliPoint>,
}

impl LinePath {
    pub fn new(points: Vec<TorusModuliPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPath);
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("consecutive path points coincide".into()));
        }
        Ok(LinePath { points })
    }

    /// Counterclockwise boundary of `[a0, a1] × [b0, b1]`.
    pub fn rectangle(a0: f64, b0: f64, a1: f64, b1: f64) -> Result<Self> {
        LinePath::new(vec![
            TorusModuliPoint::new(a0, b0),
            TorusModuliPoint::new(a1, b0),
            TorusModuliPoint::new(a1, b1),
            TorusModuliPoint::new(a0, b1),
            TorusModuliPoint::new(a0, b0),
        ])
    }

    pub fn points(&self) -> &[TorusModuliPoint] {
        &self.points
    }

    pub fn start(&self) -> TorusModuliPoint {
        self.points[0]
    }

    pub fn end(&self) -> TorusModuliPoint {
        self.points[self.points.len() - 1]
    }

    pub fn reversed(&self) -> LinePath {
        LinePath {
            points: self.points.iter().rev().copied().collect(),
        }
    }

    pub fn mapped(&self, c: &GaugeCharacter) -> LinePath {
        LinePath {
            points: self.points.iter().map(|p| gauge_action(p, c)).collect(),
        }
    }
}

/// `−∫ω′` along the straight segment `p → q`, which is exactly
/// `2πi(a_p b_q − a_q b_p)`.
pub fn segment_log_transport(p: &TorusModuliPoint, q: &TorusModuliPoint) -> f64 {
    2.0 * PI * (p.a * q.b - q.a * p.b)
}

/// `exp(−∫_path ω′)`.
pub fn parallel_transport(path: &LinePath) -> Complex64 {
    let phase: f64 = path
        .points
        .windows(2)
        .map(|w| segment_log_transport(&w[0], &w[1]))
        .sum();
    Complex64::from_polar(1.0, phase)
}

/// Defect of the bundle identification along a gauge image of `path`:
/// `|T(c·γ) · Θ(q_end) − Θ(q_start) · T(γ)|`, where `q` is the Weyl image of
/// the endpoint and `Θ` is the lattice part of `c`. The Weyl reflection
/// contributes the trivial multiplier.
pub fn equivariance_check(c: &GaugeCharacter, path: &LinePath) -> f64 {
    let w = c.weyl.sign();
    let reflect = |p: TorusModuliPoint| TorusModuliPoint::new(w * p.a, w * p.b);
    let theta_start = cocycle_value(&reflect(path.start()), c.m, c.n);
    let theta_end = cocycle_value(&reflect(path.end()), c.m, c.n);
    let moved = parallel_transport(&path.mapped(c));
    (moved * theta_end - theta_start * parallel_transport(path)).norm()
}
