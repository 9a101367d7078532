//! The subcommands. Each returns a report; module errors become failed records.

use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use csline::chern::{
    chern_weil, curvature_integral, degree_from_covering, holonomy_degree, lattice_chern,
    BoundaryRefinement, CurvatureSampler, Orientation, PrequantumBundle,
};
use csline::prequantum::{
    cocycle_exact, cocycle_numeric, gauge_action, parallel_transport, GaugeCharacter, LinePath,
    TorusModuliPoint,
};
use csline::quotient::{covering_degree, fixed_points, quotient_map, regular_preimages};
use csline::repvar::{
    is_irreducible, pullback, sample_commuting_pair, sample_flat, sample_rng, RepresentationDataset,
};
use csline::twisted::{pairing_csv, torus_family_tangents, TwistedCochain, TwistedComplex};
use csline::Error;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::{CheckRecord, Comparison, VerificationReport};

const REFERENCE: &str = "reference-value";
const ORACLE: &str = "independent-oracle";
const IDENTITY: &str = "identity";

/// Independent RNG streams per check, all derived from the run seed.
mod stream {
    pub const COVERING: u64 = 0;
    pub const COCYCLE_POINTS: u64 = 1;
    pub const COCYCLE_IDENTITY: u64 = 2;
    pub const GOLDMAN: u64 = 3;
    pub const COBOUNDARY: u64 = 4;
    pub const PULLBACK: u64 = 5;
}

fn orientation(cfg: &RunConfig) -> Orientation {
    if cfg.orientation < 0 {
        Orientation::Negative
    } else {
        Orientation::Positive
    }
}

fn seed(cfg: &RunConfig) -> u64 {
    cfg.seed.expect("validated configs of randomized commands carry a seed")
}

fn log(cfg: &RunConfig, msg: impl AsRef<str>) {
    if cfg.verbosity > 0 {
        eprintln!("[{}] {}", cfg.subcommand.name(), msg.as_ref());
    }
}

fn random_point<R: Rng>(rng: &mut R) -> TorusModuliPoint {
    TorusModuliPoint::new(rng.gen(), rng.gen())
}

/// Curvature, the three Chern-number methods, the covering degree and the
/// resulting degree of the line bundle on the genus-1 moduli space.
pub fn cmd_verify_genus1(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    let mut report = VerificationReport::new(cfg);
    let sign = cfg.orientation as f64;
    let orient = orientation(cfg);
    let n = cfg.grid;

    log(cfg, format!("curvature integral on a {n}x{n} grid"));
    let expected = Complex64::new(0.0, -4.0 * PI * sign);
    report.push(match curvature_integral(&PrequantumBundle, n, orient) {
        Ok(z) => CheckRecord::within("curvature-integral", expected, z, cfg.tolerance(1e-9), REFERENCE),
        Err(e) => CheckRecord::failed("curvature-integral", expected, cfg.tolerance(1e-9), REFERENCE, e.to_string()),
    });

    report.push(match chern_weil(&PrequantumBundle, n, orient) {
        Ok(c) => CheckRecord::within("chern-weil", 2.0 * sign, c, cfg.tolerance(1e-9), REFERENCE),
        Err(e) => CheckRecord::failed("chern-weil", 2.0 * sign, cfg.tolerance(1e-9), REFERENCE, e.to_string()),
    });

    log(cfg, "lattice plaquette Chern number");
    let lattice = lattice_chern(&PrequantumBundle, n, orient);
    report.push(match &lattice {
        Ok(l) => CheckRecord::within("lattice-chern", 2.0 * sign, l.value as f64, 0.0, REFERENCE)
            .with_detail(format!("grid {n}, phase sum {:?}", l.phase_sum)),
        Err(e) => CheckRecord::failed("lattice-chern", 2.0 * sign, 0.0, REFERENCE, e.to_string()),
    });

    log(cfg, "boundary holonomy winding");
    report.push(match holonomy_degree(&PrequantumBundle, BoundaryRefinement::default(), orient) {
        Ok(d) => CheckRecord::within("holonomy-degree", 2.0 * sign, d, cfg.tolerance(1e-6), REFERENCE),
        Err(e) => CheckRecord::failed("holonomy-degree", 2.0 * sign, cfg.tolerance(1e-6), REFERENCE, e.to_string()),
    });

    for (name, (a1, b1), expected) in [
        ("unit-cell-transport", (1.0, 1.0), 1.0),
        ("half-cell-transport", (0.5, 0.5), -1.0),
    ] {
        let t = LinePath::rectangle(0.0, 0.0, a1, b1).map(|p| parallel_transport(&p));
        report.push(match t {
            Ok(z) => CheckRecord::within(name, expected, z, cfg.tolerance(1e-10), ORACLE),
            Err(e) => CheckRecord::failed(name, expected, cfg.tolerance(1e-10), ORACLE, e.to_string()),
        });
    }

    log(cfg, format!("covering degree from {} regular values", cfg.samples));
    let mut rng = sample_rng(seed(cfg), stream::COVERING);
    let covering = covering_degree(cfg.samples, &mut rng);
    report.push(match &covering {
        Ok(c) => CheckRecord::within("covering-degree", 2.0, *c as f64, 0.0, REFERENCE)
            .with_detail(format!("{} regular values", cfg.samples)),
        Err(e) => CheckRecord::failed("covering-degree", 2.0, 0.0, REFERENCE, e.to_string()),
    });
    let flagged = fixed_points()
        .iter()
        .filter(|p| matches!(regular_preimages(&quotient_map(p)), Err(Error::BranchProximity { .. })))
        .count();
    report.push(CheckRecord::within("branch-points-flagged", 4.0, flagged as f64, 0.0, IDENTITY));

    let degree = match (&lattice, &covering) {
        (Ok(l), Ok(c)) => degree_from_covering(l.value, *c as i64),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    report.final_degree = degree.as_ref().ok().copied();
    report.push(match degree {
        Ok(d) => CheckRecord::within("line-bundle-degree", sign, d as f64, 0.0, REFERENCE),
        Err(e) => CheckRecord::failed(
            "line-bundle-degree",
            sign,
            0.0,
            REFERENCE,
            format!("upstream failure: {e}"),
        ),
    });

    if orient == Orientation::Negative {
        report.note("orientation reversed: all degrees and the curvature integral change sign");
    }
    Ok(report)
}

/// Numeric Chern-Simons cocycle against the closed form, plus the cocycle identity.
pub fn cmd_cocycle_check(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    let mut report = VerificationReport::new(cfg);
    let mut rng = sample_rng(seed(cfg), stream::COCYCLE_POINTS);
    let points: Vec<TorusModuliPoint> = (0..cfg.points).map(|_| random_point(&mut rng)).collect();
    let range = -cfg.max_mn..=cfg.max_mn;

    let mut worst = (0.0f64, 0i64, 0i64);
    let mut trivial = 0.0f64;
    let mut failure = None;
    'outer: for m in range.clone() {
        for n in range.clone() {
            log(cfg, format!("character ({m},{n})"));
            let c = GaugeCharacter::lattice(m, n);
            for p in &points {
                let pair = cocycle_numeric(p, &c, cfg.slab_grid).and_then(|num| Ok((num, cocycle_exact(p, &c)?)));
                match pair {
                    Ok((num, exact)) => {
                        let err = (num - exact).norm();
                        if err > worst.0 {
                            worst = (err, m, n);
                        }
                        if m == 0 && n == 0 {
                            trivial = trivial.max((num - Complex64::new(1.0, 0.0)).norm());
                        }
                    }
                    Err(e) => {
                        failure = Some(format!("({m},{n}) at {p:?}: {e}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    let (nt, nx, ny) = cfg.slab_grid;
    match failure {
        None => {
            report.push(
                CheckRecord::within("cocycle-numeric-vs-exact", 0.0, worst.0, cfg.tolerance(1e-6), ORACLE).with_detail(
                    format!(
                        "|m|,|n| <= {}, {} points, slab grid {nt}x{nx}x{ny}, worst at ({},{})",
                        cfg.max_mn,
                        points.len(),
                        worst.1,
                        worst.2
                    ),
                ),
            );
            report.push(CheckRecord::within("cocycle-trivial-character", 0.0, trivial, 0.0, IDENTITY));
        }
        Some(msg) => report.push(CheckRecord::failed(
            "cocycle-numeric-vs-exact",
            0.0,
            cfg.tolerance(1e-6),
            ORACLE,
            msg,
        )),
    }

    let mut rng = sample_rng(seed(cfg), stream::COCYCLE_IDENTITY);
    let mut identity = 0.0f64;
    let bound = cfg.max_mn.max(1);
    for _ in 0..cfg.trials {
        let p = TorusModuliPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let g1 = GaugeCharacter::lattice(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        let g2 = GaugeCharacter::lattice(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        let lhs = cocycle_exact(&p, &g1).and_then(|a| Ok(a * cocycle_exact(&gauge_action(&p, &g1), &g2)?));
        let rhs = cocycle_exact(&p, &g2.compose(&g1));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => identity = identity.max((l - r).norm()),
            (Err(e), _) | (_, Err(e)) => {
                identity = f64::INFINITY;
                report.note(format!("cocycle identity evaluation failed: {e}"));
                break;
            }
        }
    }
    report.push(
        CheckRecord::within("cocycle-identity", 0.0, identity, cfg.tolerance(1e-12), IDENTITY)
            .with_detail(format!("{} random triples", cfg.trials)),
    );
    Ok(report)
}

/// Report and pairing-matrix CSV of [`cmd_goldman`].
#[derive(Debug, Clone, PartialEq)]
pub struct GoldmanOutput {
    pub report: VerificationReport,
    pub pairing_csv: String,
}

fn random_cochain<R: Rng>(tc: &TwistedComplex, degree: usize, rng: &mut R) -> TwistedCochain {
    let len = TwistedCochain::zero(tc, degree).to_coords().len();
    let coords: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
    TwistedCochain::from_coords(degree, &coords)
}

fn goldman_pair(tc: &TwistedComplex) -> csline::Result<Complex64> {
    let (ta, tb) = torus_family_tangents(tc)?;
    tc.goldman_form(&ta, &tb)
}

/// Twisted cohomology, the Goldman pairing and its pullback localization.
pub fn cmd_goldman(cfg: &RunConfig) -> Result<GoldmanOutput, CliError> {
    cfg.validate()?;
    let mut report = VerificationReport::new(cfg);
    let expected = Complex64::new(0.0, -4.0 * PI);
    let g = cfg.genus;
    let mut rng = sample_rng(seed(cfg), stream::GOLDMAN);
    let mut csv = String::new();

    if g == 1 {
        let rho = sample_commuting_pair(&mut rng);
        let tc = TwistedComplex::new(&rho);
        report.push(match goldman_pair(&tc) {
            Ok(z) => CheckRecord::within("goldman-genus1", expected, z, cfg.tolerance(1e-8), REFERENCE),
            Err(e) => CheckRecord::failed("goldman-genus1", expected, cfg.tolerance(1e-8), REFERENCE, e.to_string()),
        });
        match tc.cohomology_basis() {
            Ok(b) => {
                report.push(CheckRecord::within("h1-dimension", 2.0, b.dimension() as f64, 0.0, ORACLE));
                if let Ok(m) = tc.pairing_matrix(&b.vectors) {
                    csv = pairing_csv(&m);
                }
            }
            Err(Error::RankAmbiguity { value, .. }) => report.push(CheckRecord::skipped(
                "h1-dimension",
                format!("rank ambiguity at singular value {value:e}"),
            )),
            Err(e) => report.push(CheckRecord::failed("h1-dimension", 2.0, 0.0, ORACLE, e.to_string())),
        }

        log(cfg, format!("coboundary battery, {} trials", cfg.trials));
        let mut brng = sample_rng(seed(cfg), stream::COBOUNDARY);
        let battery = (|| -> csline::Result<f64> {
            let (ta, tb) = torus_family_tangents(&tc)?;
            let base = tc.goldman_form(&ta, &tb)?;
            let mut drift = 0.0f64;
            for _ in 0..cfg.trials {
                let phi = random_cochain(&tc, 0, &mut brng);
                let psi = random_cochain(&tc, 0, &mut brng);
                let pa = ta.add(&tc.coboundary(&phi)?);
                let pb = tb.add(&tc.coboundary(&psi)?);
                drift = drift.max((tc.goldman_form(&pa, &pb)? - base).norm());
            }
            Ok(drift)
        })();
        report.push(match battery {
            Ok(d) => CheckRecord::within("coboundary-drift", 0.0, d, cfg.tolerance(1e-9), IDENTITY)
                .with_detail(format!("{} trials", cfg.trials)),
            Err(e) => CheckRecord::failed("coboundary-drift", 0.0, cfg.tolerance(1e-9), IDENTITY, e.to_string()),
        });
    } else {
        let expected_dim = (6 * g - 6) as f64;
        let mut dims = Vec::new();
        let mut min_gap = f64::INFINITY;
        let mut antisym = 0.0f64;
        let mut min_sv = f64::INFINITY;
        for s in 0..cfg.samples {
            let rho = match sample_flat(g, &mut rng) {
                Ok(r) => r,
                Err(e) => {
                    report.push(CheckRecord::failed(&format!("sample-{s}"), 0.0, 0.0, ORACLE, e.to_string()));
                    continue;
                }
            };
            if !is_irreducible(&rho) {
                report.push(CheckRecord::skipped(&format!("sample-{s}"), "reducible representation".into()));
                continue;
            }
            let tc = TwistedComplex::new(&rho);
            match tc.cohomology_basis() {
                Ok(b) => {
                    dims.push(b.dimension());
                    min_gap = min_gap.min(b.gap);
                    if let Ok(m) = tc.pairing_matrix(&b.vectors) {
                        antisym = antisym.max((&m + m.transpose()).amax());
                        min_sv = min_sv.min(m.singular_values().min());
                        if csv.is_empty() {
                            csv = pairing_csv(&m);
                        }
                    }
                }
                Err(Error::RankAmbiguity { value, .. }) => report.push(CheckRecord::skipped(
                    &format!("sample-{s}"),
                    format!("rank ambiguity at singular value {value:e}"),
                )),
                Err(e) => report.push(CheckRecord::failed(&format!("sample-{s}"), 0.0, 0.0, ORACLE, e.to_string())),
            }
        }
        log(cfg, format!("{} samples with a resolved H1", dims.len()));
        report.push(CheckRecord::bound("resolved-samples", Comparison::AtLeast, 1.0, dims.len() as f64, IDENTITY));
        if !dims.is_empty() {
            let lo = *dims.iter().min().expect("non-empty") as f64;
            let hi = *dims.iter().max().expect("non-empty") as f64;
            report.push(CheckRecord::within("h1-dimension-min", expected_dim, lo, 0.0, ORACLE));
            report.push(CheckRecord::within("h1-dimension-max", expected_dim, hi, 0.0, ORACLE));
            report.push(CheckRecord::bound("singular-gap-min", Comparison::AtLeast, 1e3, min_gap, ORACLE));
            report.push(CheckRecord::bound(
                "pairing-antisymmetry",
                Comparison::AtMost,
                cfg.tolerance(1e-10),
                antisym,
                IDENTITY,
            ));
            report.push(CheckRecord::bound("pairing-nondegeneracy", Comparison::AtLeast, 1e-6, min_sv, ORACLE));
        }

        let mut prng = sample_rng(seed(cfg), stream::PULLBACK);
        let rho1 = sample_commuting_pair(&mut prng);
        let pulled = (|| -> csline::Result<(Complex64, Complex64)> {
            let base = goldman_pair(&TwistedComplex::new(&rho1))?;
            let up = goldman_pair(&TwistedComplex::new(&pullback(&rho1, g)?))?;
            Ok((base, up))
        })();
        match pulled {
            Ok((base, up)) => {
                report.push(CheckRecord::within("pullback-vs-genus1", base, up, cfg.tolerance(1e-8), ORACLE));
                report.push(CheckRecord::within("pullback-goldman", expected, up, cfg.tolerance(1e-8), REFERENCE));
            }
            Err(e) => report.push(CheckRecord::failed(
                "pullback-goldman",
                expected,
                cfg.tolerance(1e-8),
                REFERENCE,
                e.to_string(),
            )),
        }
    }
    Ok(GoldmanOutput {
        report,
        pairing_csv: csv,
    })
}

/// Samples flat representations, writes the dataset to `cfg.out` and reloads it.
pub fn cmd_sample_reps(cfg: &RunConfig) -> Result<VerificationReport, CliError> {
    cfg.validate()?;
    let path = cfg.out.as_deref().expect("validated");
    let mut report = VerificationReport::new(cfg);
    let dataset = match RepresentationDataset::sample(cfg.genus, cfg.samples, seed(cfg)) {
        Ok(d) => d,
        Err(e) => {
            report.push(CheckRecord::failed("sample", cfg.samples as f64, 0.0, IDENTITY, e.to_string()));
            return Ok(report);
        }
    };
    let text = dataset.to_json().expect("dataset serializes");
    write_file(path, &text)?;
    log(cfg, format!("wrote {} representations to {}", dataset.samples.len(), path.display()));

    let back = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    report.push(CheckRecord::within(
        "dataset-size",
        cfg.samples as f64,
        dataset.samples.len() as f64,
        0.0,
        IDENTITY,
    ));
    let worst = dataset.samples.iter().map(|r| r.defect).fold(0.0, f64::max);
    report.push(CheckRecord::bound(
        "max-relator-defect",
        Comparison::AtMost,
        dataset.flatness_tolerance,
        worst,
        IDENTITY,
    ));
    match RepresentationDataset::from_json(&back) {
        Ok(reloaded) => {
            let same = reloaded == dataset && reloaded.to_json().expect("dataset serializes") == back;
            report.push(CheckRecord::within("reload-identical", 1.0, same as u8 as f64, 0.0, IDENTITY));
        }
        Err(e) => report.push(CheckRecord::failed("reload-identical", 1.0, 0.0, IDENTITY, e.to_string())),
    }
    Ok(report)
}

/// Report and written files of [`cmd_plot_data`].
#[derive(Debug, Clone, PartialEq)]
pub struct PlotOutput {
    pub report: VerificationReport,
    pub files: Vec<PathBuf>,
}

/// Curvature grid, plaquette phases and pillowcase scatter as CSV and SVG.
pub fn cmd_plot_data(cfg: &RunConfig) -> Result<PlotOutput, CliError> {
    cfg.validate()?;
    let dir = cfg.out.as_deref().expect("validated");
    let dataset = match &cfg.input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            if text.trim().is_empty() {
                return Err(CliError::Usage(format!("input {} is empty", path.display())));
            }
            Some(
                RepresentationDataset::from_json(&text)
                    .map_err(|e| CliError::Usage(format!("input {}: {e}", path.display())))?,
            )
        }
        None => None,
    };
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut report = VerificationReport::new(cfg);
    let mut files = Vec::new();
    let n = cfg.grid;
    let h = 1.0 / n as f64;

    let mut curv = String::from("a,b,re,im\n");
    let mut spread = 0.0f64;
    let reference = PrequantumBundle.density(TorusModuliPoint::new(0.5 * h, 0.5 * h));
    for j in 0..n {
        for i in 0..n {
            let p = TorusModuliPoint::new((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
            let z = PrequantumBundle.density(p);
            spread = spread.max((z - reference).norm());
            writeln!(curv, "{:?},{:?},{:?},{:?}", p.a, p.b, z.re, z.im).expect("string write");
        }
    }
    files.push(write_file(&dir.join("curvature.csv"), &curv)?);
    report.push(CheckRecord::within("curvature-constant", 0.0, spread, 0.0, IDENTITY));

    match lattice_chern(&PrequantumBundle, n, orientation(cfg)) {
        Ok(l) => {
            let mut csv = String::from("i,j,phase\n");
            for j in 0..n {
                for i in 0..n {
                    writeln!(csv, "{i},{j},{:?}", l.phases[j * n + i]).expect("string write");
                }
            }
            files.push(write_file(&dir.join("plaquettes.csv"), &csv)?);
            files.push(write_file(&dir.join("plaquettes.svg"), &heatmap_svg(n, &l.phases))?);
            let lo = l.phases.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = l.phases.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            report.push(CheckRecord::within("plaquette-count", (n * n) as f64, l.phases.len() as f64, 0.0, IDENTITY));
            report.push(CheckRecord::within(
                "plaquette-phase-sum",
                4.0 * PI * cfg.orientation as f64,
                l.phase_sum,
                cfg.tolerance(1e-9),
                ORACLE,
            ));
            report.push(CheckRecord::bound("plaquette-phase-spread", Comparison::AtMost, 1e-12, hi - lo, IDENTITY));
        }
        Err(e) => report.push(CheckRecord::failed(
            "plaquette-phase-sum",
            4.0 * PI * cfg.orientation as f64,
            cfg.tolerance(1e-9),
            ORACLE,
            e.to_string(),
        )),
    }

    let mut scatter = String::from("a,b,u,v,w\n");
    let mut uv = Vec::with_capacity(n * n);
    let mut relation = 0.0f64;
    for j in 0..n {
        for i in 0..n {
            let p = TorusModuliPoint::new(i as f64 * h, j as f64 * h);
            let q = quotient_map(&p);
            relation = relation.max(q.relation_defect());
            uv.push((q.u, q.w));
            writeln!(scatter, "{:?},{:?},{:?},{:?},{:?}", p.a, p.b, q.u, q.v, q.w).expect("string write");
        }
    }
    files.push(write_file(&dir.join("pillowcase.csv"), &scatter)?);
    files.push(write_file(&dir.join("pillowcase.svg"), &scatter_svg(&uv))?);
    report.push(CheckRecord::bound("pillowcase-relation", Comparison::AtMost, 1e-12, relation, IDENTITY));

    if let Some(ds) = dataset {
        let mut csv = String::from("index,trace_a1,trace_b1\n");
        for r in &ds.samples {
            let rep = r
                .representation(ds.genus)
                .map_err(|e| CliError::Usage(format!("input record {}: {e}", r.index)))?;
            writeln!(
                csv,
                "{},{:?},{:?}",
                r.index,
                rep.holonomy(0).trace(),
                rep.holonomy(1).trace()
            )
            .expect("string write");
        }
        files.push(write_file(&dir.join("traces.csv"), &csv)?);
    }
    Ok(PlotOutput { report, files })
}

fn write_file(path: &Path, contents: &str) -> Result<PathBuf, CliError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))?;
    Ok(path.to_path_buf())
}

fn heatmap_svg(n: usize, values: &[f64]) -> String {
    let cell = 400.0 / n as f64;
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut svg = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n",
    );
    for j in 0..n {
        for i in 0..n {
            let t = if hi > lo { (values[j * n + i] - lo) / (hi - lo) } else { 0.5 };
            let shade = (255.0 * (1.0 - t)).round() as u8;
            writeln!(
                svg,
                "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{cell:.3}\" height=\"{cell:.3}\" fill=\"rgb(255,{shade},{shade})\"/>",
                i as f64 * cell,
                400.0 - (j + 1) as f64 * cell
            )
            .expect("string write");
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn scatter_svg(points: &[(f64, f64)]) -> String {
    let mut svg = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
    );
    for (x, y) in points {
        writeln!(svg, "<circle cx=\"{x:.6}\" cy=\"{:.6}\" r=\"0.015\"/>", -y).expect("string write");
    }
    svg.push_str("</svg>\n");
    svg
}

