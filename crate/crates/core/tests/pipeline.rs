use num_complex::Complex64;
use std::f64::consts::PI;

use csline::chern::{degree_from_covering, lattice_chern, Orientation, PrequantumBundle};
use csline::prequantum::{cs_functional, CSField, GaugeCharacter, TorusModuliPoint};
use csline::quotient::covering_degree;
use csline::repvar::{commuting_pair, sample_rng, RepresentationDataset};
use csline::surface::{build_delta_complex, standard_presentation, SurfaceDocument};
use csline::twisted::{torus_family_tangents, TwistedComplex};
use csline::lie::Su2Element;

#[test]
fn genus_one_degree_end_to_end() {
    let upstairs = lattice_chern(&PrequantumBundle, 16, Orientation::Positive).unwrap().value;
    let covering = covering_degree(50, &mut sample_rng(1, 0)).unwrap();
    assert_eq!(degree_from_covering(upstairs, covering as i64).unwrap(), 1);
}

#[test]
fn pairing_matches_curvature_density() {
    // the symplectic pairing at any point of the torus family equals the
    // constant curvature density
    for (a, b) in [(0.1, 0.2), (0.37, 0.91), (0.5, 0.5)] {
        let rho = commuting_pair(&Su2Element::IDENTITY, 2.0 * PI * a, 2.0 * PI * b);
        let tc = TwistedComplex::new(&rho);
        let (ta, tb) = torus_family_tangents(&tc).unwrap();
        let g = tc.goldman_form(&ta, &tb).unwrap();
        assert!((g - csline::prequantum::curvature(&TorusModuliPoint::new(a, b))).norm() < 1e-9);
        assert!((g - Complex64::new(0.0, -4.0 * PI)).norm() < 1e-9);
    }
}

#[test]
fn documents_round_trip() {
    for g in 1..=3 {
        let d = build_delta_complex(&standard_presentation(g).unwrap());
        let doc: SurfaceDocument = serde_json::from_str(&d.to_json().unwrap()).unwrap();
        assert_eq!(doc.into_surface().unwrap(), d);
    }
    let ds = RepresentationDataset::sample(3, 4, 11).unwrap();
    let text = ds.to_json().unwrap();
    assert_eq!(RepresentationDataset::from_json(&text).unwrap().to_json().unwrap(), text);

    let p = TorusModuliPoint::new(0.3, 0.7);
    let field = CSField::slab_interpolation(&p, &GaugeCharacter::lattice(1, -2), (8, 8, 8));
    let back = CSField::from_csv(&field.to_csv()).unwrap();
    assert_eq!(back, field);
    assert_eq!(cs_functional(&back).unwrap(), cs_functional(&field).unwrap());
}
