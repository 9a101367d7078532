//! Acceptance criteria 1 to 9. Runs without the libtest harness so every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use csline::chern::{
    chern_weil, curvature_integral, degree_from_covering, holonomy_degree, lattice_chern,
    BoundaryRefinement, Orientation, PrequantumBundle,
};
use csline::prequantum::{
    cocycle_exact, cocycle_numeric, gauge_action, parallel_transport, GaugeCharacter, LinePath,
    TorusModuliPoint,
};
use csline::quotient::{covering_degree, fixed_points, quotient_map, regular_preimages, torus_distance};
use csline::repvar::{is_irreducible, pullback, sample_commuting_pair, sample_flat, sample_rng};
use csline::twisted::{torus_family_tangents, TwistedCochain, TwistedComplex};
use csline::Error;
use csline_cli::{cmd_verify_genus1, RunConfig, Subcommand};

/// Curvature integral over the unit cell.
const CURVATURE_INTEGRAL: Complex64 = Complex64::new(0.0, -4.0 * PI);
/// Degree of the pulled-back bundle on the torus.
const UPSTAIRS_DEGREE: i64 = 2;
/// Degree of the quotient map onto the pillowcase.
const COVERING_DEGREE: usize = 2;
/// Degree of the line bundle.
const LINE_BUNDLE_DEGREE: i64 = 1;

/// Transport of the prequantum connection along a straight segment, from the
/// closed form of the connection form integrated by hand.
fn oracle_segment(p: TorusModuliPoint, q: TorusModuliPoint) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * (p.a * q.b - q.a * p.b))
}

/// Cocycle multiplier of the lattice character `(m, n)`.
fn oracle_cocycle(p: &TorusModuliPoint, m: i64, n: i64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI * (m as f64 * p.b - n as f64 * p.a))
}

fn goldman_torus(tc: &TwistedComplex) -> Complex64 {
    let (ta, tb) = torus_family_tangents(tc).expect("torus family is tangent");
    tc.goldman_form(&ta, &tb).expect("pairing evaluates")
}

fn criterion_1() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in [1, 2, 8, 64] {
        let z = curvature_integral(&PrequantumBundle, n, Orientation::Positive).map_err(|e| e.to_string())?;
        worst = worst.max((z - CURVATURE_INTEGRAL).norm());
    }
    if worst < 1e-9 {
        Ok(format!("max |integral + 4πi| = {worst:e}"))
    } else {
        Err(format!("integral off by {worst:e}"))
    }
}

fn criterion_2() -> Result<String, String> {
    let mut cw_err = 0.0f64;
    for n in [2, 8, 64] {
        let c = chern_weil(&PrequantumBundle, n, Orientation::Positive).map_err(|e| e.to_string())?;
        cw_err = cw_err.max((c - UPSTAIRS_DEGREE as f64).abs());
    }
    if cw_err >= 1e-9 {
        return Err(format!("Chern-Weil off by {cw_err:e}"));
    }
    let mut phase_err = 0.0f64;
    for n in 4..=64usize {
        let l = lattice_chern(&PrequantumBundle, n, Orientation::Positive).map_err(|e| format!("N={n}: {e}"))?;
        if l.value != UPSTAIRS_DEGREE {
            return Err(format!("lattice N={n} gave {}", l.value));
        }
        // every plaquette carries the curvature flux 4π/N²
        let flux = 4.0 * PI / (n * n) as f64;
        phase_err = phase_err.max(l.phases.iter().map(|p| (p - flux).abs()).fold(0.0, f64::max));
        let o = lattice_chern(&oracle_segment, n, Orientation::Positive).map_err(|e| format!("oracle N={n}: {e}"))?;
        if o.value != UPSTAIRS_DEGREE {
            return Err(format!("lattice on oracle transport N={n} gave {}", o.value));
        }
    }
    if phase_err > 1e-12 {
        return Err(format!("plaquette phase off by {phase_err:e}"));
    }
    let d = holonomy_degree(&PrequantumBundle, BoundaryRefinement::default(), Orientation::Positive)
        .map_err(|e| e.to_string())?;
    let d_oracle = holonomy_degree(&oracle_segment, BoundaryRefinement::default(), Orientation::Positive)
        .map_err(|e| e.to_string())?;
    let hol_err = (d - 2.0).abs().max((d_oracle - 2.0).abs());
    if hol_err >= 1e-6 {
        return Err(format!("holonomy degree off by {hol_err:e}"));
    }
    Ok(format!(
        "Chern-Weil err {cw_err:e}, lattice = 2 for N in 4..=64, holonomy err {hol_err:e}"
    ))
}

fn criterion_3() -> Result<String, String> {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = covering_degree(1, &mut rng).map_err(|e| format!("seed {seed}: {e}"))?;
        if d != COVERING_DEGREE {
            return Err(format!("seed {seed}: degree {d}"));
        }
        // the preimages must be exactly the Weyl orbit {p, -p}
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = TorusModuliPoint::new(rng.gen(), rng.gen());
        if let Ok(pre) = regular_preimages(&quotient_map(&p)) {
            let minus = TorusModuliPoint::new(-p.a, -p.b);
            let hit = |x: &TorusModuliPoint| pre.iter().any(|y| torus_distance(x, y) < 1e-9);
            if pre.len() != 2 || !hit(&p) || !hit(&minus) {
                return Err(format!("seed {seed}: preimages {pre:?} are not the orbit of {p:?}"));
            }
        }
    }
    for f in fixed_points() {
        for (da, db) in [(0.0, 0.0), (1e-5, 0.0), (-2e-5, 3e-5)] {
            let q = quotient_map(&TorusModuliPoint::new(f.a + da, f.b + db));
            if !matches!(regular_preimages(&q), Err(Error::BranchProximity { .. })) {
                return Err(format!("no branch proximity flagged near {f:?}"));
            }
        }
    }
    Ok("degree 2 at 100 seeds, branch proximity flagged at all 4 fixed points".into())
}

fn criterion_4() -> Result<String, String> {
    let d = degree_from_covering(UPSTAIRS_DEGREE, COVERING_DEGREE as i64).map_err(|e| e.to_string())?;
    if d != LINE_BUNDLE_DEGREE {
        return Err(format!("degree from covering {d}"));
    }
    let report = cmd_verify_genus1(&RunConfig::new(Subcommand::VerifyGenus1)).map_err(|e| e.to_string())?;
    if !report.passed() {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        return Err(format!("verify-genus1 failed checks {failed:?}"));
    }
    if report.final_degree != Some(LINE_BUNDLE_DEGREE) {
        return Err(format!("final degree {:?}", report.final_degree));
    }
    Ok(format!("degree 1; verify-genus1 passed {} checks", report.summary.passed))
}

fn criterion_5() -> Result<String, String> {
    let mut rng = sample_rng(5, 0);
    let points: Vec<TorusModuliPoint> = (0..20).map(|_| TorusModuliPoint::new(rng.gen(), rng.gen())).collect();
    let mut worst = 0.0f64;
    let mut closed = 0.0f64;
    for m in -3..=3 {
        for n in -3..=3 {
            let c = GaugeCharacter::lattice(m, n);
            for p in &points {
                let num = cocycle_numeric(p, &c, (32, 8, 8)).map_err(|e| e.to_string())?;
                let exact = cocycle_exact(p, &c).map_err(|e| e.to_string())?;
                let oracle = oracle_cocycle(p, m, n);
                worst = worst.max((num - oracle).norm());
                closed = closed.max((exact - oracle).norm());
            }
        }
    }
    if worst >= 1e-6 || closed >= 1e-12 {
        return Err(format!("numeric err {worst:e}, closed-form err {closed:e}"));
    }
    let mut rng = sample_rng(5, 1);
    let mut identity = 0.0f64;
    for _ in 0..100 {
        let p = TorusModuliPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let g1 = GaugeCharacter::lattice(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let g2 = GaugeCharacter::lattice(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let lhs = cocycle_exact(&p, &g1).unwrap() * cocycle_exact(&gauge_action(&p, &g1), &g2).unwrap();
        let rhs = cocycle_exact(&p, &g2.compose(&g1)).unwrap();
        identity = identity.max((lhs - rhs).norm());
    }
    if identity >= 1e-12 {
        return Err(format!("cocycle identity err {identity:e}"));
    }
    Ok(format!("numeric err {worst:e}, identity err {identity:e}"))
}

fn criterion_6() -> Result<String, String> {
    let mut rng = sample_rng(6, 0);
    let mut worst = 0.0f64;
    let mut drift = 0.0f64;
    let rho = sample_commuting_pair(&mut rng);
    let tc = TwistedComplex::new(&rho);
    let (ta, tb) = torus_family_tangents(&tc).map_err(|e| e.to_string())?;
    let base = tc.goldman_form(&ta, &tb).map_err(|e| e.to_string())?;
    worst = worst.max((base - CURVATURE_INTEGRAL).norm());
    let len0 = TwistedCochain::zero(&tc, 0).to_coords().len();
    for _ in 0..100 {
        let mut random0 = || {
            let c: Vec<f64> = (0..len0).map(|_| rng.gen_range(-1.0..1.0)).collect();
            TwistedCochain::from_coords(0, &c)
        };
        let (phi, psi) = (random0(), random0());
        let pa = ta.add(&tc.coboundary(&phi).unwrap());
        let pb = tb.add(&tc.coboundary(&psi).unwrap());
        drift = drift.max((tc.goldman_form(&pa, &pb).unwrap() - base).norm());
    }
    for _ in 0..20 {
        let tc = TwistedComplex::new(&sample_commuting_pair(&mut rng));
        worst = worst.max((goldman_torus(&tc) - CURVATURE_INTEGRAL).norm());
    }
    if worst >= 1e-8 || drift > 1e-9 {
        return Err(format!("pairing err {worst:e}, coboundary drift {drift:e}"));
    }
    Ok(format!("pairing err {worst:e}, drift over 100 trials {drift:e}"))
}

fn criterion_7() -> Result<String, String> {
    let mut min_gap = f64::INFINITY;
    for g in [2usize, 3] {
        let mut rng = sample_rng(7, g as u64);
        let mut done = 0;
        while done < 50 {
            let rho = sample_flat(g, &mut rng).map_err(|e| e.to_string())?;
            if !is_irreducible(&rho) {
                continue;
            }
            let tc = TwistedComplex::new(&rho);
            // H⁰ = H² = 0 at irreducibles, so dim H¹ = −3χ
            let d = tc.delta();
            let chi = d.cell_count(0) as i64 - d.cell_count(1) as i64 + d.cell_count(2) as i64;
            let expected = (-3 * chi) as usize;
            let basis = tc.cohomology_basis().map_err(|e| format!("genus {g}: {e}"))?;
            if basis.dimension() != expected || expected != 6 * g - 6 {
                return Err(format!("genus {g}: dim {} expected {expected}", basis.dimension()));
            }
            min_gap = min_gap.min(basis.gap);
            done += 1;
        }
    }
    if min_gap < 1e3 {
        return Err(format!("singular gap {min_gap:e}"));
    }
    let mut rng = sample_rng(7, 1);
    for _ in 0..20 {
        let tc = TwistedComplex::new(&sample_commuting_pair(&mut rng));
        let dim = tc.cohomology_basis().map_err(|e| e.to_string())?.dimension();
        if dim != 2 {
            return Err(format!("genus 1 dim {dim}"));
        }
    }
    Ok(format!("dims 6 and 12 at 50 samples each, genus 1 dim 2, min gap {min_gap:e}"))
}

fn criterion_8() -> Result<String, String> {
    let mut rng = sample_rng(8, 0);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let rho1 = sample_commuting_pair(&mut rng);
        let base = goldman_torus(&TwistedComplex::new(&rho1));
        for g in [2, 3] {
            let up = goldman_torus(&TwistedComplex::new(&pullback(&rho1, g).map_err(|e| e.to_string())?));
            worst = worst.max((up - base).norm());
        }
    }
    if worst >= 1e-8 {
        return Err(format!("pullback err {worst:e}"));
    }
    Ok(format!("pullback err {worst:e}"))
}

fn criterion_9() -> Result<String, String> {
    let loop_transport = |a0: f64, b0: f64, a1: f64, b1: f64| {
        LinePath::rectangle(a0, b0, a1, b1).map(|p| parallel_transport(&p)).map_err(|e| e.to_string())
    };
    let unit = loop_transport(0.0, 0.0, 1.0, 1.0)?;
    let half = loop_transport(0.0, 0.0, 0.5, 0.5)?;
    let shifted = loop_transport(0.3, 0.1, 0.8, 0.6)?;
    // closed-loop transport is exp(4πi·area) for constant curvature
    let area = |x: f64| Complex64::from_polar(1.0, 4.0 * PI * x);
    let errs = [
        (unit - 1.0).norm(),
        (half + 1.0).norm(),
        (shifted + 1.0).norm(),
        (unit - area(1.0)).norm(),
        (half - area(0.25)).norm(),
    ];
    let worst = errs.iter().copied().fold(0.0, f64::max);
    if worst >= 1e-10 {
        return Err(format!("transport err {worst:e}"));
    }
    Ok(format!("unit cell {unit:.3}, half cell {half:.3}, err {worst:e}"))
}

type Criterion = fn() -> Result<String, String>;

fn main() {
    let criteria: [(u32, &str, Criterion, Duration); 9] = [
        (1, "curvature integral", criterion_1, Duration::from_secs(1)),
        (2, "upstairs degree by three methods", criterion_2, Duration::from_secs(5)),
        (3, "covering degree", criterion_3, Duration::from_secs(1)),
        (4, "line bundle degree", criterion_4, Duration::from_secs(10)),
        (5, "cocycle cross-validation", criterion_5, Duration::from_secs(30)),
        (6, "symplectic pairing", criterion_6, Duration::from_secs(30)),
        (7, "twisted cohomology dimensions", criterion_7, Duration::from_secs(60)),
        (8, "pullback localization", criterion_8, Duration::from_secs(30)),
        (9, "closed-loop transport", criterion_9, Duration::from_secs(1)),
    ];
    let mut failures = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        let ms = elapsed.as_secs_f64() * 1e3;
        match outcome {
            Ok(msg) => println!("criterion {id} PASS {name} ({ms:.0} ms): {msg}"),
            Err(msg) => {
                failures += 1;
                println!("criterion {id} FAIL {name} ({ms:.0} ms): {msg}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
