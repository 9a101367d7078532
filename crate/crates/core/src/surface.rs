//! Combinatorial models of a closed oriented genus-g surface.
//!
//! Generators are indexed `a_i = 2i`, `b_i = 2i + 1` (zero-based handle `i`).
//! The Δ-complex is the 4g-gon coned from its barycenter. All polygon corners
//! are identified to a single perimeter vertex `P` and the barycenter is `C`.
//! Edges `0..2g` are the perimeter edges (one per generator) and edges
//! `2g..6g` are the radial edges `r_k` from `C` to corner `k`. Triangle `k`
//! sits on side `k` of the polygon, whose counterclockwise traversal spells the
//! relator letter by letter.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One letter `gen^{±1}` of a word in the surface-group generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, exponent: i32) -> Self {
        assert!(exponent == 1 || exponent == -1, "exponent must be ±1");
        Letter {
            generator,
            inverse: exponent < 0,
        }
    }

    pub fn exponent(&self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Signed one-based code, `+(gen+1)` or `−(gen+1)`.
    pub fn code(&self) -> i64 {
        let c = self.generator as i64 + 1;
        if self.inverse {
            -c
        } else {
            c
        }
    }

    pub fn from_code(code: i64) -> Result<Letter> {
        if code == 0 {
            return Err(Error::Invalid("letter code 0".into()));
        }
        Ok(Letter {
            generator: (code.unsigned_abs() - 1) as usize,
            inverse: code < 0,
        })
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word and freely reduces it.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn generator(index: usize) -> Self {
        Word(vec![Letter::new(index, 1)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn codes(&self) -> Vec<i64> {
        self.0.iter().map(Letter::code).collect()
    }

    /// Cyclic reduction, used to compare relators up to conjugation.
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.clone();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverted() {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }
}

impl TryFrom<Vec<i64>> for Word {
    type Error = Error;
    fn try_from(codes: Vec<i64>) -> Result<Word> {
        let letters = codes
            .into_iter()
            .map(Letter::from_code)
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::new(letters))
    }
}

impl From<Word> for Vec<i64> {
    fn from(w: Word) -> Vec<i64> {
        w.codes()
    }
}

/// Standard one-relator presentation of π₁ of the genus-g surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfacePresentation {
    pub genus: usize,
    pub relator: Word,
}

impl SurfacePresentation {
    pub fn generator_count(&self) -> usize {
        2 * self.genus
    }

    pub fn generator_names(&self) -> Vec<String> {
        (0..self.genus)
            .flat_map(|i| [format!("a{}", i + 1), format!("b{}", i + 1)])
            .collect()
    }
}

/// `∏ᵢ aᵢ bᵢ aᵢ⁻¹ bᵢ⁻¹`.
pub fn standard_presentation(genus: usize) -> Result<SurfacePresentation> {
    if genus == 0 {
        return Err(Error::InvalidGenus(genus));
    }
    let letters = (0..genus).flat_map(|i| {
        let (a, b) = (2 * i, 2 * i + 1);
        [
            Letter::new(a, 1),
            Letter::new(b, 1),
            Letter::new(a, -1),
            Letter::new(b, -1),
        ]
    });
    let relator = Word::new(letters);
    debug_assert_eq!(relator.len(), 4 * genus);
    Ok(SurfacePresentation { genus, relator })
}

/// Index of the perimeter vertex (all polygon corners).
pub const PERIMETER_VERTEX: usize = 0;
/// Index of the cone vertex (polygon barycenter).
pub const CENTER_VERTEX: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum EdgeKind {
    /// Perimeter edge carrying a generator.
    Generator(usize),
    /// Radial edge from the center to polygon corner `k`.
    Radial(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub kind: EdgeKind,
}

/// Ordered 2-simplex `(v₀ v₁ v₂)` with its faces listed as
/// `[v₀v₁], [v₁v₂], [v₀v₂]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub edges: [usize; 3],
    /// Coefficient in the fundamental cycle.
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaSurface {
    pub genus: usize,
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
    /// Letter read along polygon side `k`.
    pub boundary_word: Vec<Letter>,
}

impl DeltaSurface {
    pub fn cell_count(&self, degree: usize) -> usize {
        match degree {
            0 => self.vertex_count,
            1 => self.edges.len(),
            2 => self.triangles.len(),
            _ => 0,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    pub fn generator_edge(&self, generator: usize) -> usize {
        generator
    }

    pub fn radial_edge(&self, corner: usize) -> usize {
        2 * self.genus + corner % (4 * self.genus)
    }

    pub fn fundamental_cycle(&self) -> Vec<i64> {
        self.triangles.iter().map(|t| t.sign as i64).collect()
    }

    /// Integer boundary matrix `∂₁` (vertices × edges).
    pub fn boundary_1(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.edges.len()]; self.vertex_count];
        for (j, e) in self.edges.iter().enumerate() {
            m[e.head][j] += 1;
            m[e.tail][j] -= 1;
        }
        m
    }

    /// Integer boundary matrix `∂₂` (edges × triangles),
    /// `∂(v₀v₁v₂) = [v₁v₂] − [v₀v₂] + [v₀v₁]`.
    pub fn boundary_2(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.triangles.len()]; self.edges.len()];
        for (j, t) in self.triangles.iter().enumerate() {
            m[t.edges[0]][j] += 1;
            m[t.edges[1]][j] += 1;
            m[t.edges[2]][j] -= 1;
        }
        m
    }

    /// Simplicial boundary of a 2-chain.
    pub fn boundary_of_chain(&self, chain: &[i64]) -> Vec<i64> {
        let d2 = self.boundary_2();
        d2.iter()
            .map(|row| row.iter().zip(chain).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(&SurfaceDocument::new(self))
    }
}

/// JSON document for a presentation together with its Δ-complex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceDocument {
    pub genus: usize,
    pub generators: Vec<String>,
    pub relator: Vec<i64>,
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

impl SurfaceDocument {
    pub fn new(d: &DeltaSurface) -> Self {
        let p = standard_presentation(d.genus).expect("complex has positive genus");
        SurfaceDocument {
            genus: d.genus,
            generators: p.generator_names(),
            relator: d.boundary_word.iter().map(Letter::code).collect(),
            vertices: d.vertex_count,
            edges: d.edges.clone(),
            triangles: d.triangles.clone(),
        }
    }

    pub fn into_surface(self) -> Result<DeltaSurface> {
        let word = self
            .relator
            .iter()
            .map(|c| Letter::from_code(*c))
            .collect::<Result<Vec<_>>>()?;
        let d = DeltaSurface {
            genus: self.genus,
            vertex_count: self.vertices,
            edges: self.edges,
            triangles: self.triangles,
            boundary_word: word,
        };
        let rebuilt = build_delta_complex(&standard_presentation(d.genus)?);
        if rebuilt != d {
            return Err(Error::Invalid(
                "surface document does not match the coned polygon complex".into(),
            ));
        }
        Ok(d)
    }
}

/// Cones the 4g-gon of `p` from its barycenter.
pub fn build_delta_complex(p: &SurfacePresentation) -> DeltaSurface {
    let g = p.genus;
    let sides = p.relator.letters().to_vec();
    let n = sides.len();
    let mut edges: Vec<Edge> = (0..2 * g)
        .map(|j| Edge {
            tail: PERIMETER_VERTEX,
            head: PERIMETER_VERTEX,
            kind: EdgeKind::Generator(j),
        })
        .collect();
    edges.extend((0..n).map(|k| Edge {
        tail: CENTER_VERTEX,
        head: PERIMETER_VERTEX,
        kind: EdgeKind::Radial(k),
    }));
    let radial = |k: usize| 2 * g + k % n;
    let triangles = sides
        .iter()
        .enumerate()
        .map(|(k, l)| {
            // The generator edge runs corner k → k+1 for a positive letter and
            // k+1 → k for an inverse one; vertex order follows the edge.
            let (first, second, sign) = if l.inverse {
                (radial(k + 1), radial(k), -1)
            } else {
                (radial(k), radial(k + 1), 1)
            };
            Triangle {
                vertices: [CENTER_VERTEX, PERIMETER_VERTEX, PERIMETER_VERTEX],
                edges: [first, l.generator, second],
                sign,
            }
        })
        .collect();
    DeltaSurface {
        genus: g,
        vertex_count: 2,
        edges,
        triangles,
        boundary_word: sides,
    }
}

/// Map on generators induced by collapsing all but the first handle.
#[derive(Debug, Clone, PartialEq)]
pub struct CollapseMap {
    pub source_genus: usize,
    /// Image word (in the genus-1 generators) of each source generator.
    pub images: Vec<Word>,
}

impl CollapseMap {
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::empty();
        for l in w.letters() {
            let img = self
                .images
                .get(l.generator)
                .ok_or(Error::GeneratorOutOfRange {
                    index: l.generator,
                    count: self.images.len(),
                })?;
            let img = if l.inverse { img.inverse() } else { img.clone() };
            out = out.concat(&img);
        }
        Ok(out)
    }
}

pub fn collapse_map(genus: usize) -> Result<CollapseMap> {
    if genus == 0 {
        return Err(Error::InvalidGenus(genus));
    }
    let images = (0..2 * genus)
        .map(|j| if j < 2 { Word::generator(j) } else { Word::empty() })
        .collect();
    Ok(CollapseMap {
        source_genus: genus,
        images,
    })
}
