//! Simplicial cochains on the coned polygon with coefficients in su(2) twisted
//! by `Ad∘ρ`, and the cup-product symplectic pairing on H¹.
//!
//! Edge holonomies use a spanning-tree gauge: the radial edge to corner 0 is
//! the tree and carries the identity; each generator edge carries its
//! holonomy; the remaining radial edges carry prefix products of the relator,
//! so every triangle `(v₀v₁v₂)` satisfies `h(v₀v₁)·h(v₁v₂) = h(v₀v₂)`
//! (exactly up to the relator defect of ρ on the closing triangle).
//!
//! A cochain value on an ordered simplex lives in the fibre over `v₀`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lie::{adjoint, trace_form, Su2Element, Su2Vector};
use crate::repvar::Representation;
use crate::surface::{build_delta_complex, standard_presentation, DeltaSurface, EdgeKind};

/// Singular-value cutoff for rank decisions.
pub const RANK_CUTOFF: f64 = 1e-8;
/// Singular values within this factor of [`RANK_CUTOFF`] make the rank ambiguous.
pub const AMBIGUITY_FACTOR: f64 = 100.0;
/// Largest coboundary norm accepted for a cocycle.
pub const COCYCLE_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct TwistedComplex {
    delta: DeltaSurface,
    rep: Representation,
    edge_holonomy: Vec<Su2Element>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwistedCochain {
    pub degree: usize,
    pub values: Vec<Su2Vector>,
}

impl TwistedCochain {
    pub fn zero(tc: &TwistedComplex, degree: usize) -> Self {
        TwistedCochain {
            degree,
            values: vec![Su2Vector::ZERO; tc.delta.cell_count(degree)],
        }
    }

    /// Flattened coordinates, three per cell.
    pub fn to_coords(&self) -> Vec<f64> {
        self.values.iter().flat_map(|v| v.components()).collect()
    }

    pub fn from_coords(degree: usize, coords: &[f64]) -> Self {
        TwistedCochain {
            degree,
            values: coords
                .chunks_exact(3)
                .map(|c| Su2Vector::new(c[0], c[1], c[2]))
                .collect(),
        }
    }

    pub fn add(&self, other: &TwistedCochain) -> TwistedCochain {
        assert_eq!(self.degree, other.degree);
        TwistedCochain {
            degree: self.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> TwistedCochain {
        TwistedCochain {
            degree: self.degree,
            values: self.values.iter().map(|v| s * *v).collect(),
        }
    }

    /// Largest value norm over all cells.
    pub fn max_norm(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.norm()))
    }

    /// Applies `Ad_g` to every value.
    pub fn transported(&self, g: &Su2Element) -> TwistedCochain {
        TwistedCochain {
            degree: self.degree,
            values: self.values.iter().map(|v| adjoint(g, v)).collect(),
        }
    }
}

impl TwistedComplex {
    pub fn new(rep: &Representation) -> Self {
        let p = standard_presentation(rep.genus()).expect("representation has positive genus");
        let delta = build_delta_complex(&p);
        let mut edge_holonomy = vec![Su2Element::IDENTITY; delta.edges.len()];
        for (j, h) in rep.holonomies().iter().enumerate() {
            edge_holonomy[delta.generator_edge(j)] = *h;
        }
        let mut prefix = Su2Element::IDENTITY;
        let n = delta.boundary_word.len();
        for k in 0..n - 1 {
            let l = delta.boundary_word[k];
            let h = rep.holonomy(l.generator);
            prefix = prefix.multiply(&if l.inverse { h.inverse() } else { h });
            edge_holonomy[delta.radial_edge(k + 1)] = prefix;
        }
        TwistedComplex {
            delta,
            rep: rep.clone(),
            edge_holonomy,
        }
    }

    pub fn delta(&self) -> &DeltaSurface {
        &self.delta
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn edge_holonomy(&self, edge: usize) -> Su2Element {
        self.edge_holonomy[edge]
    }

    /// Holonomy of `edge` traversed against its orientation.
    pub fn reversed_edge_holonomy(&self, edge: usize) -> Su2Element {
        self.edge_holonomy[edge].inverse()
    }

    /// `max_T ‖h(v₀v₁)h(v₁v₂) − h(v₀v₂)‖`.
    pub fn triangle_defect(&self) -> f64 {
        self.delta
            .triangles
            .iter()
            .map(|t| {
                let [e01, e12, e02] = t.edges;
                self.edge_holonomy[e01]
                    .multiply(&self.edge_holonomy[e12])
                    .distance(&self.edge_holonomy[e02])
            })
            .fold(0.0, f64::max)
    }

    fn check_size(&self, c: &TwistedCochain) -> Result<()> {
        let expected = self.delta.cell_count(c.degree);
        if c.values.len() != expected {
            return Err(Error::CochainSize {
                degree: c.degree,
                expected,
                found: c.values.len(),
            });
        }
        Ok(())
    }

    pub fn coboundary(&self, c: &TwistedCochain) -> Result<TwistedCochain> {
        self.check_size(c)?;
        match c.degree {
            0 => Ok(TwistedCochain {
                degree: 1,
                values: self
                    .delta
                    .edges
                    .iter()
                    .zip(&self.edge_holonomy)
                    .map(|(e, h)| adjoint(h, &c.values[e.head]) - c.values[e.tail])
                    .collect(),
            }),
            1 => Ok(TwistedCochain {
                degree: 2,
                values: self
                    .delta
                    .triangles
                    .iter()
                    .map(|t| {
                        let [e01, e12, e02] = t.edges;
                        adjoint(&self.edge_holonomy[e01], &c.values[e12]) - c.values[e02]
                            + c.values[e01]
                    })
                    .collect(),
            }),
            d => Err(Error::CochainDegree {
                expected: "0 or 1",
                found: d,
            }),
        }
    }

    /// Dense matrix of the coboundary out of `degree`, three coordinates per cell.
    pub fn coboundary_matrix(&self, degree: usize) -> Result<DMatrix<f64>> {
        if degree > 1 {
            return Err(Error::CochainDegree {
                expected: "0 or 1",
                found: degree,
            });
        }
        let cols = 3 * self.delta.cell_count(degree);
        let rows = 3 * self.delta.cell_count(degree + 1);
        let mut m = DMatrix::zeros(rows, cols);
        let mut unit = vec![0.0; cols];
        for j in 0..cols {
            unit[j] = 1.0;
            let img = self.coboundary(&TwistedCochain::from_coords(degree, &unit))?;
            for (i, x) in img.to_coords().into_iter().enumerate() {
                m[(i, j)] = x;
            }
            unit[j] = 0.0;
        }
        Ok(m)
    }

    /// Orthonormal basis of `ker d¹ ∩ (im d⁰)^⊥ ≅ H¹`.
    pub fn cohomology_basis(&self) -> Result<CohomologyBasis> {
        let d0 = self.coboundary_matrix(0)?;
        let d1 = self.coboundary_matrix(1)?;
        let n = d1.ncols();
        let rows = (d1.nrows() + d0.ncols()).max(n);
        let mut stacked = DMatrix::<f64>::zeros(rows, n);
        stacked.view_mut((0, 0), (d1.nrows(), n)).copy_from(&d1);
        stacked
            .view_mut((d1.nrows(), 0), (d0.ncols(), n))
            .copy_from(&d0.transpose());

        let svd = stacked.svd(false, true);
        let v_t = svd.v_t.expect("right singular vectors requested");
        let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
        for &s in &sv {
            if s > RANK_CUTOFF / AMBIGUITY_FACTOR && s < RANK_CUTOFF * AMBIGUITY_FACTOR {
                return Err(Error::RankAmbiguity {
                    value: s,
                    cutoff: RANK_CUTOFF,
                });
            }
        }
        let vectors: Vec<TwistedCochain> = sv
            .iter()
            .enumerate()
            .filter(|(_, s)| **s <= RANK_CUTOFF)
            .map(|(i, _)| {
                let row: Vec<f64> = v_t.row(i).iter().copied().collect();
                TwistedCochain::from_coords(1, &row)
            })
            .collect();
        let above = sv.iter().copied().filter(|s| *s > RANK_CUTOFF).fold(f64::INFINITY, f64::min);
        let below = sv.iter().copied().filter(|s| *s <= RANK_CUTOFF).fold(0.0, f64::max);
        // null singular values can come out exactly zero; floor them at roundoff
        let floor = f64::EPSILON * sv.iter().copied().fold(0.0, f64::max);
        let gap = above / below.max(floor).max(f64::MIN_POSITIVE);
        Ok(CohomologyBasis {
            vectors,
            singular_values: sv,
            gap,
        })
    }

    fn require_cocycle(&self, c: &TwistedCochain) -> Result<()> {
        if c.degree != 1 {
            return Err(Error::CochainDegree {
                expected: "1",
                found: c.degree,
            });
        }
        let norm = self.coboundary(c)?.max_norm();
        if norm > COCYCLE_TOL {
            return Err(Error::NotCocycle { norm });
        }
        Ok(())
    }

    /// `⟨α ∪ β, [Σ]⟩ = Σ_T sign(T) · Tr(α(v₀v₁) · Ad_{h(v₀v₁)} β(v₁v₂))`.
    pub fn cup_pairing(&self, alpha: &TwistedCochain, beta: &TwistedCochain) -> Result<f64> {
        self.require_cocycle(alpha)?;
        self.require_cocycle(beta)?;
        Ok(self.cup_unchecked(alpha, beta))
    }

    fn cup_unchecked(&self, alpha: &TwistedCochain, beta: &TwistedCochain) -> f64 {
        self.delta
            .triangles
            .iter()
            .map(|t| {
                let [e01, e12, _] = t.edges;
                let moved = adjoint(&self.edge_holonomy[e01], &beta.values[e12]);
                t.sign as f64 * trace_form(&alpha.values[e01], &moved)
            })
            .sum()
    }

    /// `(i/2π) · ∫_Σ Tr(α ∧ β)`, purely imaginary.
    pub fn goldman_form(&self, alpha: &TwistedCochain, beta: &TwistedCochain) -> Result<Complex64> {
        Ok(Complex64::new(0.0, self.cup_pairing(alpha, beta)? / (2.0 * PI)))
    }

    /// Cup pairings between all members of `basis`.
    pub fn pairing_matrix(&self, basis: &[TwistedCochain]) -> Result<DMatrix<f64>> {
        for c in basis {
            self.require_cocycle(c)?;
        }
        let n = basis.len();
        Ok(DMatrix::from_fn(n, n, |i, j| {
            self.cup_unchecked(&basis[i], &basis[j])
        }))
    }

    /// Cocycle tangent to a deformation of the generator holonomies.
    ///
    /// `tangents[j]` is `δρ(j)·ρ(j)⁻¹`. Generator edges take these values and
    /// the radial edges are filled in triangle by triangle from the cocycle
    /// condition; the closing triangle is consistent exactly when the
    /// deformation solves the linearized relator.
    pub fn tangent_cocycle(&self, tangents: &[Su2Vector]) -> Result<TwistedCochain> {
        let count = self.rep.holonomies().len();
        if tangents.len() != count {
            return Err(Error::HolonomyCount {
                genus: self.rep.genus(),
                expected: count,
                found: tangents.len(),
            });
        }
        let mut c = TwistedCochain::zero(self, 1);
        for (j, u) in tangents.iter().enumerate() {
            c.values[self.delta.generator_edge(j)] = *u;
        }
        let n = self.delta.boundary_word.len();
        for k in 0..n - 1 {
            let l = self.delta.boundary_word[k];
            let u = tangents[l.generator];
            let (rk, rk1) = (self.delta.radial_edge(k), self.delta.radial_edge(k + 1));
            c.values[rk1] = if l.inverse {
                c.values[rk] - adjoint(&self.edge_holonomy[rk1], &u)
            } else {
                c.values[rk] + adjoint(&self.edge_holonomy[rk], &u)
            };
        }
        self.require_cocycle(&c)?;
        Ok(c)
    }

    pub fn is_generator_edge(&self, edge: usize) -> bool {
        matches!(self.delta.edges[edge].kind, EdgeKind::Generator(_))
    }
}

/// Result of [`TwistedComplex::cohomology_basis`].
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub vectors: Vec<TwistedCochain>,
    pub singular_values: Vec<f64>,
    /// Smallest singular value above the cutoff over the largest one below it.
    pub gap: f64,
}

impl CohomologyBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Tangent cocycles of the abelian torus family through `rho` in the
/// directions `∂_a` and `∂_b`.
///
/// The family is `(a, b) ↦ (e^{2πa n}, e^{2πb n})` for the unit axis `n` of the
/// maximal torus holding `(A₁, B₁)`; when both are central any axis will do
/// and `X` is used. The pairing is quadratic in `n`, so its sign is irrelevant.
/// For a pulled-back family the collapsed handles get zero tangent.
pub fn torus_family_tangents(tc: &TwistedComplex) -> Result<(TwistedCochain, TwistedCochain)> {
    let count = tc.rep.holonomies().len();
    let axis = [tc.rep.holonomy(0), tc.rep.holonomy(1)]
        .iter()
        .map(|h| h.vector())
        .find(|v| v.norm() > 1e-8)
        .map(|v| (1.0 / v.norm()) * v)
        .unwrap_or_else(Su2Vector::torus_generator);
    let mut ua = vec![Su2Vector::ZERO; count];
    let mut ub = vec![Su2Vector::ZERO; count];
    ua[0] = (2.0 * PI) * axis;
    ub[1] = (2.0 * PI) * axis;
    Ok((tc.tangent_cocycle(&ua)?, tc.tangent_cocycle(&ub)?))
}

/// Rows `row,col,value` for a pairing matrix.
pub fn pairing_csv(m: &DMatrix<f64>) -> String {
    let mut out = String::from("row,col,value\n");
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.push_str(&format!("{},{},{:e}\n", i, j, m[(i, j)]));
        }
    }
    out
}
