//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Every check is exact (booleans and integers); no tolerances apply.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use planarlab::designs::{build_rds, verify_rds};
use planarlab::field::{FieldCtx, FieldElem};
use planarlab::irreducibility::{
    bruteforce_bivariate_irreducible, build_h, capelli_for_h, multiplicity_profile,
};
use planarlab::is_power_of_two;
use planarlab::planarity::{
    is_planar, monomial_table, remark_threshold, scan_monomials, AMode, MonomialSpec, TRange,
};
use planarlab::weil::{
    counterexample_report, inequality_chain_check, weil_consistency_check, Cubic, TernaryForm,
};
use planarlab::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(r: u32) -> FieldCtx {
    FieldCtx::new(r).expect("valid degree")
}

fn theorem_small() -> Outcome {
    let mut details = Vec::new();
    for r in [4, 8, 12] {
        let f = field(r);
        let v = scan_monomials(&f, TRange::Theorem, AMode::All).map_err(|e| e.to_string())?;
        let expected: BTreeSet<(u64, FieldElem)> = (1..=v.t_max)
            .filter(|&t| is_power_of_two(t))
            .flat_map(|t| f.nonzero_elements().map(move |a| (t, a)))
            .collect();
        let got: BTreeSet<(u64, FieldElem)> = v.planar_pairs().collect();
        ensure(got == expected, || format!("r={r}: planar pairs differ"))?;
        ensure(v.theorem_consistent, || format!("r={r}: theorem_consistent=false"))?;
        details.push(format!("r={r}: {} pairs", got.len()));
    }
    Ok(details.join(", "))
}

const SAMPLE_SEED: u64 = 20_240_601;

fn theorem_sampled() -> Outcome {
    let f = field(16);
    let mode = AMode::Sampled { count: 64, seed: SAMPLE_SEED };
    let v = scan_monomials(&f, TRange::Explicit { lo: 1, hi: 16 }, mode).map_err(|e| e.to_string())?;
    for t in 1..=16u64 {
        let rows: Vec<_> = v.verdicts.iter().filter(|x| x.t == t).collect();
        ensure(rows.len() == 64, || format!("t={t}: {} coefficients", rows.len()))?;
        let planar = rows.iter().filter(|x| x.planar).count();
        let want = if is_power_of_two(t) { 64 } else { 0 };
        ensure(planar == want, || format!("t={t}: {planar} of 64 planar"))?;
    }
    ensure(v.theorem_consistent, || "theorem_consistent=false".into())?;
    Ok(format!("planar exactly at t in {{1,2,4,8,16}}, seed {SAMPLE_SEED}"))
}

fn multiplicities() -> Outcome {
    let f = field(1);
    let mut n = 0;
    for t in (3..=256u64).filter(|&t| !is_power_of_two(t)) {
        let p = multiplicity_profile(&f, t).map_err(|e| e.to_string())?;
        ensure(p.identity_holds(), || {
            format!("t={t}: m={} mult0={} mult1={}", p.m, p.mult_at_0, p.mult_at_1)
        })?;
        n += 1;
    }
    Ok(format!("{n} exponents"))
}

fn capelli_vs_bruteforce() -> Outcome {
    let (mut agreed, mut skipped) = (0, 0);
    let mut skipped_list = Vec::new();
    for r in 1..=3u32 {
        let f = field(r);
        let mut coeffs = vec![FieldElem::ONE, f.primitive_element()];
        coeffs.dedup();
        for t in [3u64, 5, 6, 7, 9, 10, 11, 12] {
            for &a in &coeffs {
                let capelli = capelli_for_h(&f, a, t).map_err(|e| e.to_string())?;
                let h = build_h(&f, a, t).map_err(|e| e.to_string())?;
                let mut reducible_somewhere = false;
                let mut complete = true;
                let mut levels = 0;
                for ext in 1..=(t - 2) as u32 {
                    match bruteforce_bivariate_irreducible(&f, &h, ext) {
                        Ok(irr) => {
                            reducible_somewhere |= !irr;
                            levels += 1;
                        }
                        Err(Error::Capacity(_)) => {
                            // Work only grows with the extension degree.
                            complete = false;
                            break;
                        }
                        Err(e) => return Err(e.to_string()),
                    }
                }
                // A factor found anywhere contradicts absolute irreducibility;
                // the converse needs every extension level.
                if capelli.abs_irreducible {
                    ensure(!reducible_somewhere, || format!("r={r} t={t} a={a}: factor found"))?;
                } else if complete {
                    ensure(reducible_somewhere, || format!("r={r} t={t} a={a}: no factor found"))?;
                }
                if complete {
                    agreed += 1;
                } else {
                    skipped += 1;
                    skipped_list.push(format!("q={} t={t} a={a}: ext 1..={levels} of {}", f.q(), t - 2));
                }
            }
        }
    }
    Ok(format!(
        "{agreed} instances fully checked, {skipped} partially checked (budget): [{}]",
        skipped_list.join("; ")
    ))
}

fn lemma_two() -> Outcome {
    let mut n = 0;
    for r in [4, 6, 8, 10] {
        let f = field(r);
        for t in [3u64, 5, 6, 7] {
            for a in f.nonzero_elements() {
                let abs = capelli_for_h(&f, a, t).map_err(|e| e.to_string())?.abs_irreducible;
                ensure(abs, || format!("r={r} t={t} a={a}: not absolutely irreducible"))?;
                let h = build_h(&f, a, t).map_err(|e| e.to_string())?;
                let rep = weil_consistency_check(&f, &h, abs).map_err(|e| e.to_string())?;
                ensure(rep.satisfied == Some(true), || {
                    format!("r={r} t={t} a={a}: N={} below bound", rep.count.n)
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} instances"))
}

fn inequality_chain() -> Outcome {
    for t in 3..=10_000u64 {
        let q = ((t as u128).pow(4)).next_power_of_two() as u64;
        let c = inequality_chain_check(t, q).map_err(|e| e.to_string())?;
        ensure(c.passes(), || format!("t={t} q={q}: {c:?}"))?;
    }
    Ok("t in 3..=10000".into())
}

/// Counts projective zeros as nonzero affine zeros of the cone over `(q - 1)`.
fn cone_count(f: &FieldCtx, form: &TernaryForm) -> u64 {
    let mut zeros = 0u64;
    for x in f.elements() {
        for y in f.elements() {
            for z in f.elements() {
                let nonzero = !(x.is_zero() && y.is_zero() && z.is_zero());
                if nonzero && form.eval(f, [x, y, z]).is_zero() {
                    zeros += 1;
                }
            }
        }
    }
    zeros / (f.q() as u64 - 1)
}

fn counterexamples() -> Outcome {
    let f = field(1);
    let mut parts = Vec::new();
    for (curve, pinned) in [(Cubic::First, 2u64), (Cubic::Second, 4)] {
        let oracle = cone_count(&f, &curve.form());
        let rep = counterexample_report(curve).map_err(|e| e.to_string())?;
        let got = rep.counts[0].points;
        ensure(oracle == pinned && got == pinned, || {
            format!("{curve:?}: oracle {oracle}, report {got}, expected {pinned}")
        })?;
        parts.push(format!("{curve:?}={got}"));
    }
    Ok(parts.join(", "))
}

fn rds_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1ff);
    let mut n = 0;
    for r in 1..=5 {
        let f = field(r);
        let mut tables: Vec<Vec<FieldElem>> = Vec::new();
        for t in 1..f.q() as u64 {
            for a in f.nonzero_elements() {
                let spec = MonomialSpec::new(&f, a, t).map_err(|e| e.to_string())?;
                tables.push(monomial_table(&f, &spec));
            }
        }
        for _ in 0..100 {
            tables.push((0..f.q()).map(|_| FieldElem::from_bits(rng.gen_range(0..f.q()))).collect());
        }
        for table in &tables {
            let cert = verify_rds(&f, &build_rds(&f, table).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let planar = is_planar(&f, table, 1).map_err(|e| e.to_string())?.planar;
            ensure(cert.valid == planar, || format!("q={}: rds {} planar {planar}", f.q(), cert.valid))?;
            n += 1;
        }
    }
    Ok(format!("{n} tables over q <= 32"))
}

fn threshold() -> Outcome {
    for t in 3..=100u64 {
        let rep = remark_threshold(t).map_err(|e| e.to_string())?;
        ensure(rep.min_r <= rep.plain_r, || format!("t={t}: {} > {}", rep.min_r, rep.plain_r))?;
        // min_r is minimal: 2^((min_r - 1)/2) <= B(t) in floating point away from ties.
        let below = 2f64.powf((rep.min_r - 1) as f64 / 2.0);
        ensure(rep.min_r == 1 || below <= rep.bound_approx + 1e-9, || format!("t={t}: not minimal"))?;
    }
    let t3 = remark_threshold(3).map_err(|e| e.to_string())?.min_r;
    ensure(t3 == 2, || format!("t=3 gives {t3}"))?;
    Ok("t in 3..=100, t=3 -> r=2".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_planarlab");
    let mut outputs = Vec::new();
    for workers in ["1", "1", "1", "4", "4", "4"] {
        let out = Command::new(bin)
            .args(["scan", "--r", "8", "--a-mode", "all", "--no-timing"])
            .env("PLANARLAB_WORKERS", workers)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
        outputs.push(out.stdout);
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || "outputs differ".into())?;
    Ok(format!("6 runs, {} bytes each", outputs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("power-of-two characterization, r in {4,8,12}, all a", theorem_small),
        ("power-of-two characterization, r = 16, 64 sampled a", theorem_sampled),
        ("root multiplicities at 0 and 1, t <= 256", multiplicities),
        ("binomial criterion vs factor search", capelli_vs_bruteforce),
        ("Weil-type lower bound on zeros of H", lemma_two),
        ("integer inequality chain, t <= 10^4", inequality_chain),
        ("singular cubic point counts", counterexamples),
        ("difference sets vs planarity, q <= 32", rds_equivalence),
        ("sharper threshold on r, t <= 100", threshold),
        ("scan output independent of run and workers", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
