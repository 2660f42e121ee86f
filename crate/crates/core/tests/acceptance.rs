//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p tsum-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rug::float::Constant;
use rug::{Float, Rational};
use tsum::reducer::Family;
use tsum::series::{double_t, euler_t_sum, HarmonicOffset, Sign, SumSpec};
use tsum::special::{alt_zeta, single_t, ttilde_bar, KernelKind, ZetaConvention};
use tsum::suite::{
    build_cases, parse_families, render_run, run_cases, run_suite, CaseRecord, Format, SuiteCase, SuiteConfig,
};
use tsum::verify::{
    residue_terms, verify_sec_pair, verify_sec_rational, verify_tan_pair, verify_tan_pair_with, verify_tan_rational,
    IdentityId, PartialFractionRational,
};

const PREC: u32 = 192;

fn tol(s: &str) -> Float {
    Float::with_val(PREC, Float::parse(s).unwrap())
}

fn gap(a: &Float, b: &Float) -> Float {
    Float::with_val(PREC, a - b).abs()
}

fn r(n: i32, d: i32) -> Rational {
    Rational::from((n, d))
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Runs a suite configuration and reports the worst gap among its cases.
fn suite_outcome(config: &SuiteConfig, limit: Duration) -> Outcome {
    let start = Instant::now();
    let record = match run_suite(config) {
        Ok(rec) => rec,
        Err(e) => return outcome(false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    let worst = record
        .cases
        .iter()
        .map(|c| match c {
            CaseRecord::Identity(r) => r.absolute_gap.to_f64(),
            CaseRecord::Reduction(r) => r.absolute_gap.to_f64(),
        })
        .fold(0.0, f64::max);
    let failed: Vec<String> = record.cases.iter().filter(|c| !c.passed()).map(|c| c.case_id()).collect();
    outcome(
        failed.is_empty() && elapsed <= limit,
        format!(
            "{} cases, worst gap {worst:.3e}, {:.1} s{}",
            record.summary.total,
            elapsed.as_secs_f64(),
            if failed.is_empty() { String::new() } else { format!(", failed: {}", failed.join(" ")) }
        ),
    )
}

fn parametric_identities() -> Outcome {
    let config = SuiteConfig {
        families: parse_families("thm3_1,thm3_4,cor3_2,cor3_3,cor3_5,cor3_6").unwrap(),
        tolerance: "1e-40".into(),
        precision_bits: PREC,
        p_max: 5,
        ..Default::default()
    };
    suite_outcome(&config, Duration::from_secs(600))
}

fn residue_theorems() -> Outcome {
    let config = SuiteConfig {
        families: parse_families("thm3_6,thm3_7").unwrap(),
        tolerance: "1e-35".into(),
        precision_bits: PREC,
        ..Default::default()
    };
    let cases = build_cases(&config).unwrap();
    let mut counts = [0usize; 2];
    let mut orders = std::collections::BTreeSet::new();
    for c in &cases {
        if let SuiteCase::Identity(i) = c {
            counts[usize::from(i.identity == IdentityId::SecRational)] += 1;
            if let tsum::verify::CaseParams::Rational { r, .. } = &i.params {
                orders.insert(r.max_order());
            }
        }
    }
    let coverage = counts.iter().all(|&c| c >= 6) && orders.iter().copied().eq(1..=3);
    let run = suite_outcome(&config, Duration::from_secs(600));

    // r(z) = 1/((z+a)(z+b)): the four-group sums reproduce the pair
    // identities' left-hand sides once the t̃(p)-weighted parts are removed.
    let t = tol("1e-35");
    let mut worst = Float::new(PREC);
    let mut ok = true;
    for (a, b) in [(r(1, 4), r(1, 3)), (r(1, 5), r(2, 5)), (r(1, 7), r(-1, 7))] {
        let rat = PartialFractionRational::shifted_product(&a, &b).unwrap();
        let (na, nb) = (Rational::from(-&a), Rational::from(-&b));
        for p in 1..=3u32 {
            let sgn = if p % 2 == 0 { 1 } else { -1 };
            let tt = tsum::special::ttilde(p, PREC + 32).unwrap();
            let w = |sigma, x: &Rational, y: &Rational| {
                euler_t_sum(&SumSpec::new(vec![], vec![1, 1], vec![x.clone(), y.clone()], sigma, HarmonicOffset::Current), PREC + 32)
                    .unwrap()
                    .value
            };
            // tan kernel
            let terms = residue_terms(KernelKind::PiTan, p, &rat, PREC).unwrap();
            let halves = Float::with_val(PREC + 32, &terms.forward_half + &terms.backward_half);
            let weights = Float::with_val(PREC + 32, w(Sign::Plus, &a, &b) + w(Sign::Plus, &na, &nb));
            let from_residues = -halves - Float::with_val(PREC + 32, &tt * &weights) * sgn;
            let pair = verify_tan_pair(p, &a, &b, PREC, &t).unwrap();
            let g = gap(&from_residues, &pair.lhs);
            ok &= g <= t && pair.passed && verify_tan_rational(p, &rat, PREC, &t).unwrap().passed;
            worst = worst.max(&g);
            // secant kernel
            let terms = residue_terms(KernelKind::PiOverCos, p, &rat, PREC).unwrap();
            let halves = Float::with_val(PREC + 32, &terms.forward_half + &terms.backward_half);
            let weights = Float::with_val(PREC + 32, w(Sign::Minus, &a, &b) - w(Sign::Minus, &na, &nb));
            let from_residues = halves - Float::with_val(PREC + 32, &tt * &weights) * sgn;
            let pair = verify_sec_pair(p, &a, &b, PREC, &t).unwrap();
            let g = gap(&from_residues, &pair.lhs);
            ok &= g <= t && pair.passed && verify_sec_rational(p, &rat, PREC, &t).unwrap().passed;
            worst = worst.max(&g);
        }
    }
    outcome(
        coverage && run.passed && ok,
        format!(
            "{} tan and {} sec cases, pole orders {:?}; {}; product specialization worst gap {:.3e}",
            counts[0],
            counts[1],
            orders,
            run.detail,
            worst.to_f64()
        ),
    )
}

fn kernel_expansions() -> Outcome {
    let config = SuiteConfig {
        families: parse_families("lemma2_3,lemma2_4").unwrap(),
        tolerance: "1e-40".into(),
        precision_bits: PREC,
        expansion_order: 6,
        ..Default::default()
    };
    suite_outcome(&config, Duration::from_secs(600))
}

fn reductions() -> Outcome {
    let config = SuiteConfig {
        families: Family::ALL.into_iter().map(tsum::suite::Selection::Reduction).collect(),
        tolerance: "1e-30".into(),
        precision_bits: PREC,
        weight_max: 11,
        ..Default::default()
    };
    suite_outcome(&config, Duration::from_secs(900))
}

fn stuffle() -> Outcome {
    let t = tol("1e-35");
    let mut worst = Float::new(PREC);
    for s1 in 2..=5u32 {
        for s2 in s1..=5u32 {
            let lhs = single_t(s1, PREC).unwrap() * single_t(s2, PREC).unwrap();
            let mut rhs = double_t(s1, s2, false, PREC).unwrap().value;
            rhs += double_t(s2, s1, false, PREC).unwrap().value;
            rhs += single_t(s1 + s2, PREC).unwrap();
            worst = worst.max(&gap(&lhs, &rhs));
        }
    }
    outcome(worst <= t, format!("worst gap {:.3e}", worst.to_f64()))
}

fn classical_constants() -> Outcome {
    let p = PREC + 32;
    let pi = Float::with_val(p, Constant::Pi);
    let pi2 = Float::with_val(p, &pi * &pi);
    let zeta3 = Float::with_val(p, Float::zeta_u(3));
    let log2 = Float::with_val(p, Constant::Log2);
    let checks = [
        ("t(2)", single_t(2, PREC).unwrap(), pi2 / 8u32),
        ("t(3)", single_t(3, PREC).unwrap(), zeta3 * 7u32 / 8u32),
        ("zeta_bar(1)", alt_zeta(1, PREC).unwrap(), log2),
        ("ttilde_bar(1)", ttilde_bar(1, PREC).unwrap(), -pi / 2u32),
    ];
    let t = tol("1e-45");
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, got, want) in checks {
        let g = gap(&got, &want);
        ok &= g <= t;
        parts.push(format!("{name} {:.1e}", g.to_f64()));
    }
    outcome(ok, parts.join(", "))
}

fn negative_control() -> Outcome {
    let t = tol("1e-40");
    let rep = verify_tan_pair_with(2, &r(1, 4), &r(1, 3), PREC, &t, ZetaConvention::disabled()).unwrap();
    let standard = verify_tan_pair(2, &r(1, 4), &r(1, 3), PREC, &t).unwrap();
    let big = rep.absolute_gap > tol("1e-6");
    outcome(
        big && !rep.passed && standard.passed,
        format!("gap without the convention {:.3e}", rep.absolute_gap.to_f64()),
    )
}

fn determinism() -> Outcome {
    let config = SuiteConfig {
        omit_timing: true,
        ..Default::default()
    };
    let cases = build_cases(&config).unwrap();
    let render = |workers| {
        let c = SuiteConfig { workers, ..config.clone() };
        render_run(&run_cases(&c, &cases).unwrap(), Format::Json).unwrap()
    };
    let first = render(1);
    let second = render(1);
    let eight = render(8);
    outcome(
        first == second && first == eight,
        format!("{} cases, {} bytes per report", cases.len(), first.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("parametric identities and corollaries, p 1..5, gap <= 1e-40", parametric_identities),
        ("residue theorems, orders 1..3, |total| <= 1e-35, product specialization", residue_theorems),
        ("kernel expansions through order 6, gap <= 1e-40", kernel_expansions),
        ("reduction certificates through weight 11, gap <= 1e-30", reductions),
        ("stuffle for 2 <= s1 <= s2 <= 5, gap <= 1e-35", stuffle),
        ("classical constants, gap <= 1e-45", classical_constants),
        ("negative control, gap > 1e-6", negative_control),
        ("determinism across reruns and worker counts", determinism),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.passed;
        println!(
            "{} criterion {}: {name} [{}] ({:.1} s)",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
