//! Acceptance checks. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any failed.

mod common;

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use common::{arb_seifert, arb_unimodular, float_signature, litherland_torus_signature, vec_times_matrix};
use knotrank::arith::cyclotomic::CircleAngle;
use knotrank::arith::hermitian::alexander_polynomial;
use knotrank::arith::poly::QPoly;
use knotrank::arith::rational::{rat, Rational};
use knotrank::instanton::{generate_family, sigma_key, verdict, verify_certificate, RankCertificate, TauOracle, Verdict, TAU_Y};
use knotrank::io::load_pattern;
use knotrank::seifert::{
    axis_self_linking, branched_cover_matrix, cobordism_form, genus1_enumerate, genus1_form, genus1_pattern,
    genus1_value, Pattern, SeifertForm,
};
use knotrank::signature::{independence_rank, jump_at, jump_spectrum, litherland_jump, tl_signature, torus_seifert};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

fn angle(a: i64, n: i64) -> CircleAngle {
    CircleAngle::new(a, n).unwrap()
}

fn timed(limit: Duration, start: Instant) -> Check {
    let spent = start.elapsed();
    ensure!(spent < limit, "took {spent:?}, limit {limit:?}");
    Ok(format!("{spent:.2?}"))
}

fn twist_family() -> Check {
    let start = Instant::now();
    for k in 0..=20i64 {
        let l = axis_self_linking(&Pattern::twist(k)).map_err(|e| e.to_string())?;
        ensure!(l.abs() == rat(2, 4 * k + 1), "k = {k}: l = {l}");
    }
    timed(Duration::from_secs(1), start)
}

fn genus1_figure() -> Check {
    let file = load_pattern(&data("patterns/genus1_figure.json")).map_err(|e| e.to_string())?;
    let l = axis_self_linking(&file).map_err(|e| e.to_string())?;
    ensure!(l == rat(12, 1), "file pattern gives l = {l}");
    let built = genus1_pattern(1, 2, 2, -1, 1).map_err(|e| e.to_string())?;
    ensure!(built.seifert.matrix() == file.seifert.matrix(), "genus-one constructor disagrees with the file");
    let quad = genus1_value(1, 2, 2, -1, 1).map_err(|e| e.to_string())?;
    let inverse = axis_self_linking(&built).map_err(|e| e.to_string())?;
    ensure!(Rational::from_integer(quad.clone()) == inverse, "quadratic form {quad} vs inverse {inverse}");
    match verdict(&file, None) {
        Verdict::InfiniteRank { mirror_used: true, .. } => Ok("l = 12, infinite rank via the mirror".into()),
        v => Err(format!("verdict {v:?}")),
    }
}

fn iterated_double() -> Check {
    let p = load_pattern(&data("patterns/iterated_double.json")).map_err(|e| e.to_string())?;
    let l = axis_self_linking(&p).map_err(|e| e.to_string())?;
    ensure!(l == rat(0, 1), "l = {l}");
    match verdict(&p, None) {
        Verdict::Inconclusive { .. } => Ok("l = 0, inconclusive".into()),
        v => Err(format!("verdict {v:?}")),
    }
}

fn whitehead_oracle() -> TauOracle {
    let mut o = TauOracle::new().with(TAU_Y, rat(1, 2)).unwrap();
    for i in 1..=4usize {
        let b = rat(1, 30 * (1 << i));
        o.insert(sigma_key('+', i), b.clone()).unwrap();
        o.insert(sigma_key('-', i), b).unwrap();
    }
    o
}

/// Every certificate obtained by perturbing exactly one rational.
fn tamperings(cert: &RankCertificate) -> Vec<(String, RankCertificate)> {
    let eps = rat(1, 1_000_000);
    let mut out = Vec::new();
    let mut c = cert.clone();
    c.l = &c.l + &eps;
    out.push(("l".to_string(), c));
    for (i, e) in cert.entries.iter().enumerate() {
        let mut c = cert.clone();
        c.entries[i].rho = &e.rho - &eps;
        out.push((format!("entry {i} rho"), c));
        for (j, t) in e.thresholds.iter().enumerate() {
            let mut c = cert.clone();
            c.entries[i].thresholds[j].value = &t.value + &eps;
            out.push((format!("entry {i} {}", t.name), c));
        }
    }
    out
}

fn whitehead_pipeline() -> Check {
    let start = Instant::now();
    let pat = load_pattern(&data("patterns/whitehead.json")).map_err(|e| e.to_string())?;
    let oracle = whitehead_oracle();
    let cert = generate_family(&pat, 5, &oracle).map_err(|e| e.to_string())?;
    ensure!(cert.entries.len() == 5, "{} entries", cert.entries.len());
    ensure!(cert.entries.windows(2).all(|w| w[1].rho < w[0].rho), "rho is not strictly decreasing");
    let first = &cert.entries[0];
    ensure!((first.r, first.s) == (2, 3) && first.rho == rat(1, 30), "first entry ({},{}) rho {}", first.r, first.s, first.rho);
    let report = verify_certificate(&cert, &oracle);
    ensure!(report.ok(), "verification failed: {:?}", report.failure);
    let perturbed = tamperings(&cert);
    for (what, bad) in &perturbed {
        ensure!(!verify_certificate(bad, &oracle).ok(), "tampering {what} went unnoticed");
    }
    let time = timed(Duration::from_secs(1), start)?;
    let family: Vec<String> = cert.entries.iter().map(|e| format!("T({},{})", e.r, e.s)).collect();
    Ok(format!("{}; {} tamperings rejected; {time}", family.join(" "), perturbed.len()))
}

fn exact_jumps(v: &SeifertForm) -> std::result::Result<Vec<(String, i64)>, String> {
    let s = jump_spectrum(v).map_err(|e| e.to_string())?;
    ensure!(s.exact_entries().len() == s.len(), "unexpected irrational roots");
    Ok(s.exact_entries().into_iter().map(|(a, d)| (a.to_string(), d)).collect())
}

/// The first `count` reduced fractions in `(0, 1/2)`, by denominator.
fn small_angles(count: usize) -> Vec<CircleAngle> {
    let mut out = Vec::new();
    for n in 3i64.. {
        for a in 1..n {
            if 2 * a < n && a.gcd(&n) == 1 {
                out.push(angle(a, n));
                if out.len() == count {
                    return out;
                }
            }
        }
    }
    unreachable!()
}

/// Compares exact signatures, the jump spectrum and the float oracle at 200
/// angles, skipping roots of `Δ`.
fn cross_validate(name: &str, v: &SeifertForm) -> std::result::Result<usize, String> {
    let spectrum = jump_spectrum(v).map_err(|e| e.to_string())?;
    let exact = spectrum.exact_entries();
    let mut compared = 0;
    for t in small_angles(200) {
        let tr = t.to_rational();
        if exact.iter().any(|(a, _)| a.to_rational() == tr) {
            continue;
        }
        let s = tl_signature(v, &t).map_err(|e| format!("{name} at {t}: {e}"))?;
        let from_jumps: i64 = 2 * exact.iter().filter(|(a, _)| a.to_rational() < tr).map(|(_, d)| d).sum::<i64>();
        let float = float_signature(v.matrix(), t.numer() as f64 / t.denom() as f64);
        ensure!(float == Some(s), "{name} at {t}: exact {s}, float {float:?}");
        ensure!(from_jumps == s, "{name} at {t}: exact {s}, from jumps {from_jumps}");
        compared += 1;
    }
    Ok(compared)
}

fn torus_alexander(r: usize, s: usize) -> QPoly {
    let xm1 = |k: usize| &QPoly::monomial(Rational::one(), k) - &QPoly::one();
    (&xm1(r * s) * &xm1(1)).div_exact(&(&xm1(r) * &xm1(s))).unwrap()
}

fn signature_suite() -> Check {
    let t23 = torus_seifert(2, 3).map_err(|e| e.to_string())?;
    let t25 = torus_seifert(2, 5).map_err(|e| e.to_string())?;
    let half = tl_signature(&t23, &angle(1, 2)).map_err(|e| e.to_string())?;
    ensure!(half == -2, "sigma_T23(-1) = {half}");
    let j23 = exact_jumps(&t23)?;
    ensure!(j23 == vec![("1/6".to_string(), -1)], "T(2,3) spectrum {j23:?}");
    let j25 = exact_jumps(&t25)?;
    ensure!(j25 == vec![("1/10".to_string(), -1), ("3/10".to_string(), -1)], "T(2,5) spectrum {j25:?}");
    let compared = cross_validate("T(2,3)", &t23)? + cross_validate("T(2,5)", &t25)?;

    let mut checked = 0;
    for r in 2..=15usize {
        for s in r + 1..=15usize {
            if r * s > 30 || r.gcd(&s) != 1 {
                continue;
            }
            let v = torus_seifert(r as i64, s as i64).map_err(|e| e.to_string())?;
            let (d, _) = alexander_polynomial(v.matrix()).map_err(|e| e.to_string())?.strip_x_power();
            let expect = torus_alexander(r, s);
            ensure!(d == expect || d == -&expect, "T({r},{s}) Alexander polynomial");
            for (a, n) in [(1, 2), (1, 3), (1, 5), (2, 7), (3, 8), (5, 11)] {
                if let Ok(sig) = tl_signature(&v, &angle(a, n)) {
                    let lattice = litherland_torus_signature(r as i64, s as i64, a, n);
                    ensure!(sig == lattice, "T({r},{s}) at {a}/{n}: {sig} vs lattice count {lattice}");
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} torus knots, {compared} float comparisons"))
}

/// Rank of the signature functions sampled at many angles, in floating point.
fn brute_force_rank(knots: &[SeifertForm]) -> usize {
    let samples: Vec<f64> = (1..2000).map(|k| k as f64 / 4000.0 + 1.0 / 9973.0).collect();
    let mut m = DMatrix::<f64>::zeros(knots.len(), samples.len());
    for (i, v) in knots.iter().enumerate() {
        for (j, t) in samples.iter().enumerate() {
            m[(i, j)] = float_signature(v.matrix(), *t).expect("sample angle avoids roots") as f64;
        }
    }
    m.rank(1e-6)
}

fn litherland_independence() -> Check {
    let patterns = [Pattern::twist(0), Pattern::twist(3), Pattern::twist(-2), load_pattern(&data("patterns/genus1_figure.json")).unwrap()];
    let companions = [
        torus_seifert(2, 3).unwrap(),
        torus_seifert(3, 4).unwrap(),
        SeifertForm::from_rows(&[vec![-2, 1], vec![0, -1]]).unwrap(),
    ];
    let mut angles = 0;
    for p in &patterns {
        for k in &companions {
            for n in 2..=60i64 {
                for a in 1..n {
                    if a.gcd(&n) != 1 {
                        continue;
                    }
                    let t = angle(a, n);
                    let sat = litherland_jump(p, k, &t).map_err(|e| e.to_string())?;
                    let own = jump_at(&p.seifert, &t).map_err(|e| e.to_string())?;
                    ensure!(sat == own, "{} over {:?} at {t}: {sat} vs {own}", p.name, k.name());
                    angles += 1;
                }
            }
        }
    }

    let t23 = torus_seifert(2, 3).unwrap();
    let t25 = torus_seifert(2, 5).unwrap();
    let t34 = torus_seifert(3, 4).unwrap();
    let three = vec![t23.clone(), t25.clone(), t34];
    let rank3 = independence_rank(&three).map_err(|e| e.to_string())?;
    ensure!(rank3 == 3, "rank {rank3} for T23, T25, T34");
    let mut four = three.clone();
    four.push(t23.connected_sum(&t25));
    let rank4 = independence_rank(&four).map_err(|e| e.to_string())?;
    ensure!(rank4 == 3, "rank {rank4} after adding T23#T25");
    let (b3, b4) = (brute_force_rank(&three), brute_force_rank(&four));
    ensure!((b3, b4) == (3, 3), "brute-force ranks {b3}, {b4}");
    Ok(format!("{angles} angle checks; ranks 3 and 3"))
}

fn run_property<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>) -> std::result::Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn pattern_with_axis(g: usize) -> impl Strategy<Value = Pattern> {
    (arb_seifert(g, 3), prop::collection::vec(-3i64..=3, 2 * g)).prop_map(|(s, v)| {
        let v: Vec<BigInt> = v.iter().take(s.dim()).map(|&x| BigInt::from(x)).collect();
        Pattern::new("random", s, 0, v).unwrap()
    })
}

fn property_suites(battery_start: Instant) -> Check {
    let start = Instant::now();
    let with_basis = pattern_with_axis(3).prop_flat_map(|p| {
        let n = p.seifert.dim();
        (Just(p), arb_unimodular(n, 12))
    });
    run_property(200, with_basis, |(p, u)| {
        let moved = Pattern::new("moved", p.seifert.change_basis(&u).unwrap(), 0, vec_times_matrix(&p.axis_linking, &u.transpose())).unwrap();
        prop_assert_eq!(axis_self_linking(&moved).unwrap(), axis_self_linking(&p).unwrap());
        Ok(())
    })
    .map_err(|e| format!("basis change: {e}"))?;

    run_property(100, pattern_with_axis(3), |p| {
        prop_assert_eq!(axis_self_linking(&p.mirror()).unwrap(), -axis_self_linking(&p).unwrap());
        Ok(())
    })
    .map_err(|e| format!("mirror l: {e}"))?;

    run_property(50, arb_seifert(2, 3), |v| {
        prop_assert!(jump_spectrum(&v.mirror()).unwrap().equivalent(&jump_spectrum(&v).unwrap().negate()).unwrap());
        Ok(())
    })
    .map_err(|e| format!("mirror spectrum: {e}"))?;

    run_property(100, arb_seifert(4, 4), |v| {
        prop_assert!(branched_cover_matrix(&v).unwrap().det().unwrap().is_odd());
        Ok(())
    })
    .map_err(|e| format!("parity: {e}"))?;

    let triples = genus1_enumerate(6, 10);
    ensure!(triples.len() >= 100, "only {} Alexander-one triples", triples.len());
    for &(n, m, l) in triples.iter().take(100) {
        let d = genus1_form(n, m, l).unwrap().det().unwrap();
        ensure!(d == BigInt::from(-1), "det G = {d} for ({n},{m},{l})");
    }

    run_property(100, (1i64..20, 1i64..20, -400i64..400, 1i64..40), |(p, q, a, b)| {
        let l = rat(a, b);
        prop_assert_eq!(cobordism_form(p, q, &l).unwrap().is_negative(), l < -rat(p, q));
        Ok(())
    })
    .map_err(|e| format!("cobordism sign: {e}"))?;

    let suite = start.elapsed();
    let total = battery_start.elapsed();
    ensure!(total < Duration::from_secs(60), "acceptance battery took {total:?}");
    Ok(format!("property suites {suite:.2?}, acceptance battery {total:.2?}"))
}

fn main() {
    let battery = Instant::now();
    let criteria: Vec<Criterion> = vec![
        ("twist-knot family: |l| = 2/(4k+1), k = 0..20, under 1 s", Box::new(twist_family)),
        ("genus-one figure: l = 12, infinite rank via the mirror, both paths agree", Box::new(genus1_figure)),
        ("iterated doubles: l = 0, inconclusive", Box::new(iterated_double)),
        ("whitehead pipeline: 5 certified torus knots, tamper-evident, under 1 s", Box::new(whitehead_pipeline)),
        ("signature suite: T(2,3), T(2,5) spectra, float oracle, torus Alexander identity", Box::new(signature_suite)),
        ("litherland formula and independence rank", Box::new(litherland_independence)),
        ("property suites", Box::new(move || property_suites(battery))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check));
        match outcome {
            Ok(Ok(detail)) => println!("PASS  {name} ({detail})"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {name}: panicked");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
