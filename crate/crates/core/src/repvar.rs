//! Representations π₁Σ_g → SU(2) given by their generator holonomies
//! `(A₁, B₁, …, A_g, B_g)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lie::{exp_map, group_commutator, rotation_between, Su2Element, Su2Vector};
use crate::surface::{collapse_map, standard_presentation};
pub use crate::surface::{Letter, Word};

/// Default bound on the relator defect for a representation to count as flat.
pub const FLATNESS_TOL: f64 = 1e-10;
/// Singular-value cutoff for the commutant rank in [`is_irreducible`].
pub const IRREDUCIBILITY_RANK_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    genus: usize,
    holonomies: Vec<Su2Element>,
}

impl Representation {
    pub fn new(genus: usize, holonomies: Vec<Su2Element>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        if holonomies.len() != 2 * genus {
            return Err(Error::HolonomyCount {
                genus,
                expected: 2 * genus,
                found: holonomies.len(),
            });
        }
        Ok(Representation { genus, holonomies })
    }

    pub fn trivial(genus: usize) -> Result<Self> {
        Self::new(genus, vec![Su2Element::IDENTITY; 2 * genus])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn holonomies(&self) -> &[Su2Element] {
        &self.holonomies
    }

    pub fn holonomy(&self, generator: usize) -> Su2Element {
        self.holonomies[generator]
    }

    pub fn is_flat(&self, tolerance: f64) -> bool {
        relator_defect(self) <= tolerance
    }
}

pub fn eval_word(rho: &Representation, w: &Word) -> Result<Su2Element> {
    let n = rho.holonomies.len();
    w.letters().iter().try_fold(Su2Element::IDENTITY, |acc, l| {
        let h = rho
            .holonomies
            .get(l.generator)
            .ok_or(Error::GeneratorOutOfRange {
                index: l.generator,
                count: n,
            })?;
        let h = if l.inverse { h.inverse() } else { *h };
        Ok(acc.multiply(&h))
    })
}

/// `‖ρ(∏[aᵢ,bᵢ]) − I‖`, zero exactly when ρ is flat.
pub fn relator_defect(rho: &Representation) -> f64 {
    let p = standard_presentation(rho.genus).expect("representation has positive genus");
    eval_word(rho, &p.relator)
        .expect("relator uses only the surface generators")
        .distance(&Su2Element::IDENTITY)
}

/// `(C e^{αX} C⁻¹, C e^{βX} C⁻¹)` as a genus-1 representation.
pub fn commuting_pair(conj: &Su2Element, alpha: f64, beta: f64) -> Representation {
    let x = Su2Vector::torus_generator();
    let a = conj.multiply(&exp_map(&(alpha * x))).multiply(&conj.inverse());
    let b = conj.multiply(&exp_map(&(beta * x))).multiply(&conj.inverse());
    Representation::new(1, vec![a, b]).expect("two holonomies for genus 1")
}

/// A random flat genus-1 representation with holonomies in a random maximal torus.
pub fn sample_commuting_pair<R: Rng + ?Sized>(rng: &mut R) -> Representation {
    let c = Su2Element::random(rng);
    let alpha = rng.gen_range(0.0..2.0 * PI);
    let beta = rng.gen_range(0.0..2.0 * PI);
    commuting_pair(&c, alpha, beta)
}

/// Rotation angle of `g` in `[0, π]`: `g` is conjugate to `exp(θX)`.
fn class_angle(g: &Su2Element) -> f64 {
    g.vector().norm().atan2(g.scalar())
}

/// Finds `(A, B)` with `A B A⁻¹ B⁻¹ = target`.
///
/// Along the family `A = exp(sX)`, `B = exp(s·iσ₁)` the class angle of the
/// commutator rises monotonically from 0 to π as `s` goes from 0 to π/2, so a
/// bisection hits every conjugacy class. The pair is then conjugated so that
/// the commutator lands on `target` itself.
pub fn solve_commutator(target: &Su2Element) -> Result<(Su2Element, Su2Element)> {
    let x = Su2Vector::torus_generator();
    let y = Su2Vector::basis(0);
    let pair = |s: f64| (exp_map(&(s * x)), exp_map(&(s * y)));
    let goal = class_angle(target);

    let (mut lo, mut hi) = (0.0_f64, 0.5 * PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (a, b) = pair(mid);
        if class_angle(&group_commutator(&a, &b)) < goal {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (a, b) = pair(0.5 * (lo + hi));
    let k = group_commutator(&a, &b);
    let g = rotation_between(&k.vector(), &target.vector());
    let (a, b) = (
        g.multiply(&a).multiply(&g.inverse()),
        g.multiply(&b).multiply(&g.inverse()),
    );
    let residual = group_commutator(&a, &b).distance(target);
    if residual > 1e-10 {
        return Err(Error::Convergence { residual });
    }
    Ok((a, b))
}

/// Random flat representation: Haar-random first `g − 1` handles, last handle
/// solved from the commutator equation.
pub fn sample_flat<R: Rng + ?Sized>(genus: usize, rng: &mut R) -> Result<Representation> {
    match genus {
        0 => Err(Error::InvalidGenus(0)),
        1 => Ok(sample_commuting_pair(rng)),
        g => {
            let mut hol = Vec::with_capacity(2 * g);
            let mut partial = Su2Element::IDENTITY;
            for _ in 0..g - 1 {
                let a = Su2Element::random(rng);
                let b = Su2Element::random(rng);
                partial = partial.multiply(&group_commutator(&a, &b));
                hol.push(a);
                hol.push(b);
            }
            let (a, b) = solve_commutator(&partial.inverse())?;
            hol.push(a);
            hol.push(b);
            Representation::new(g, hol)
        }
    }
}

/// Real linear map `M ↦ (M H − H M)_H` on 2×2 complex matrices, one block of
/// 8 rows per holonomy, 8 columns for the real and imaginary entries of `M`.
fn commutant_system(rho: &Representation) -> DMatrix<f64> {
    let hs: Vec<_> = rho.holonomies.iter().map(Su2Element::to_matrix).collect();
    let mut m = DMatrix::<f64>::zeros(8 * hs.len(), 8);
    for col in 0..8 {
        let mut e = nalgebra::Matrix2::<Complex64>::zeros();
        let (entry, imag) = (col / 2, col % 2 == 1);
        e[(entry / 2, entry % 2)] = if imag {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(1.0, 0.0)
        };
        for (k, h) in hs.iter().enumerate() {
            let c = e * h - h * e;
            for (idx, z) in c.iter().enumerate() {
                m[(8 * k + 2 * idx, col)] = z.re;
                m[(8 * k + 2 * idx + 1, col)] = z.im;
            }
        }
    }
    m
}

/// Real dimension of the commutant of the holonomy matrices.
pub fn commutant_dimension(rho: &Representation) -> usize {
    let sv = commutant_system(rho).singular_values();
    8 - sv.iter().filter(|s| **s > IRREDUCIBILITY_RANK_TOL).count()
}

/// True iff the holonomies share no common eigenvector, i.e. the commutant is
/// the complex scalars (real dimension 2).
pub fn is_irreducible(rho: &Representation) -> bool {
    commutant_dimension(rho) == 2
}

pub fn conjugate(rho: &Representation, g: &Su2Element) -> Representation {
    let gi = g.inverse();
    Representation {
        genus: rho.genus,
        holonomies: rho
            .holonomies
            .iter()
            .map(|h| g.multiply(h).multiply(&gi))
            .collect(),
    }
}

/// Pulls a flat genus-1 representation back along the collapse of the last
/// `genus − 1` handles: `(A, B, I, I, …)`.
pub fn pullback(rho1: &Representation, genus: usize) -> Result<Representation> {
    if rho1.genus != 1 {
        return Err(Error::Invalid(format!(
            "pullback source must have genus 1, got {}",
            rho1.genus
        )));
    }
    let defect = relator_defect(rho1);
    if defect > FLATNESS_TOL {
        return Err(Error::NotFlat {
            defect,
            tolerance: FLATNESS_TOL,
        });
    }
    let f = collapse_map(genus)?;
    let hol = f
        .images
        .iter()
        .map(|w| eval_word(rho1, w))
        .collect::<Result<Vec<_>>>()?;
    Representation::new(genus, hol)
}

pub fn trace_coordinates(rho: &Representation, words: &[Word]) -> Result<Vec<f64>> {
    words
        .iter()
        .map(|w| eval_word(rho, w).map(|g| g.trace()))
        .collect()
}

/// Deterministic per-sample RNG: stream `index` of the master `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationRecord {
    pub index: u64,
    /// Quaternion `(w, x, y, z)` per generator, in the order a₁, b₁, …
    pub holonomies: Vec<[f64; 4]>,
    pub defect: f64,
    pub irreducible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepresentationDataset {
    pub genus: usize,
    pub seed: u64,
    pub flatness_tolerance: f64,
    pub samples: Vec<RepresentationRecord>,
}

impl RepresentationDataset {
    /// Draws `count` flat representations, sample `i` from [`sample_rng`]`(seed, i)`.
    pub fn sample(genus: usize, count: usize, seed: u64) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let samples = (0..count as u64)
            .map(|i| {
                let mut rng = sample_rng(seed, i);
                let rho = sample_flat(genus, &mut rng)?;
                Ok(RepresentationRecord {
                    index: i,
                    holonomies: rho.holonomies.iter().map(Su2Element::quaternion).collect(),
                    defect: relator_defect(&rho),
                    irreducible: is_irreducible(&rho),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepresentationDataset {
            genus,
            seed,
            flatness_tolerance: 1e-9,
            samples,
        })
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// Parses and validates a dataset document.
    pub fn from_json(s: &str) -> Result<Self> {
        let ds: RepresentationDataset =
            serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))?;
        ds.validate()?;
        Ok(ds)
    }

    /// Re-checks unit norms, holonomy counts and flatness of every record.
    pub fn validate(&self) -> Result<()> {
        if self.genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        if self.flatness_tolerance.is_nan() || self.flatness_tolerance <= 0.0 {
            return Err(Error::Invalid("flatness tolerance must be positive".into()));
        }
        for rec in &self.samples {
            let rho = rec.representation(self.genus)?;
            let defect = relator_defect(&rho);
            if defect > self.flatness_tolerance {
                return Err(Error::NotFlat {
                    defect,
                    tolerance: self.flatness_tolerance,
                });
            }
            if (defect - rec.defect).abs() > 1e-12 {
                return Err(Error::Invalid(format!(
                    "sample {}: stored defect {:e} disagrees with recomputed {:e}",
                    rec.index, rec.defect, defect
                )));
            }
        }
        Ok(())
    }

    pub fn representations(&self) -> Result<Vec<Representation>> {
        self.samples
            .iter()
            .map(|r| r.representation(self.genus))
            .collect()
    }
}

impl RepresentationRecord {
    pub fn representation(&self, genus: usize) -> Result<Representation> {
        let hol = self
            .holonomies
            .iter()
            .map(|q| {
                let g = Su2Element::from_raw(*q);
                if !q.iter().all(|c| c.is_finite()) || g.norm_defect() > 1e-12 {
                    return Err(Error::Invalid(format!(
                        "sample {}: holonomy {:?} is not a unit quaternion",
                        self.index, q
                    )));
                }
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(genus, hol)
    }
}
