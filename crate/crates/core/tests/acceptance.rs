//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use symdeg::andor::{f_to_assignment, substitute, XPolynomial};
use symdeg::degreelp::{approx_degree, build_lp, solve_lp, sweep, sweep_csv};
use symdeg::oracle::{
    enumerate_functions, full_basis_eps_min, normalized_monomials, verify_approximation,
    verify_range_invariance, Approximant,
};
use symdeg::rangexfer::{extend, restrict};
use symdeg::rational::{int, ratio};
use symdeg::symmetrize::{
    average_oracle, class_average_oracle, monomial_expectation, symmetrize_monomial,
};
use symdeg::sympoly::{partitions_of, partitions_up_to};
use symdeg::{Budget, FrequencyVector, Property, Rational, SymPolynomial, YMonomial, YPolynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn third() -> Rational {
    ratio(1, 3)
}

fn ac1_range_invariance() -> Outcome {
    let cases: [(Property, &[u32]); 3] = [
        (Property::ElementDistinctness, &[2, 3, 4, 5]),
        (Property::Collision, &[2, 4]),
        (Property::ModifiedElementDistinctness, &[3, 4, 5]),
    ];
    let mut cells = 0;
    let mut summary = Vec::new();
    for (prop, ns) in &cases {
        for &n in *ns {
            let report = verify_range_invariance(prop, n, n + 3, &third()).map_err(|e| e.to_string())?;
            cells += report.table.len();
            let degrees: Vec<u32> = report.table.iter().map(|r| r.degree).collect();
            ensure(report.pass, || format!("{} n={n}: degrees {degrees:?}", prop.name()))?;
            summary.push(format!("{}@{n}={}", short(prop), degrees[0]));
        }
    }
    Ok(format!("{cells} (N, M) cells flat; {}", summary.join(" ")))
}

fn short(p: &Property) -> &'static str {
    match p {
        Property::ElementDistinctness => "ED",
        Property::Collision => "COL",
        Property::ModifiedElementDistinctness => "MED",
        Property::AlwaysOne => "ONE",
        Property::Custom(_) => "CUSTOM",
    }
}

/// Product with the denominator exactly as first printed, `N - l - 1` for
/// `l >= 2` (first factor `z/N`). `None` when a denominator vanishes.
fn printed_denominator_expectation(mono: &YMonomial, n: u32, z: &[u32]) -> Option<Rational> {
    let mut acc = Rational::from_integer(1.into());
    for (idx, &(_, j)) in mono.factors().iter().enumerate() {
        let l = idx as i64 + 1;
        let seen = mono.factors()[..idx].iter().filter(|f| f.1 == j).count() as i64;
        let den = if l == 1 { n as i64 } else { n as i64 - l - 1 };
        if den == 0 {
            return None;
        }
        acc *= ratio(z[(j - 1) as usize] as i64 - seen, den);
    }
    Some(acc)
}

fn ordered_vectors(n: u32, m: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=n).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().sum::<u32>() == n);
    out
}

fn ac2_symmetrization_oracle() -> Outcome {
    let budget = Budget::default();
    let (mut class_checks, mut ordered_checks, mut printed_mismatch) = (0, 0, 0);
    for n in 1..=4u32 {
        for m in 1..=3u32 {
            let classes = partitions_of(n, n.min(m) as usize);
            let vectors = ordered_vectors(n, m);
            for mono in normalized_monomials(n, m, 3) {
                let p = YPolynomial::from_terms(n, m, [(mono.clone(), int(1))]).map_err(|e| e.to_string())?;
                let sym = symmetrize_monomial(&mono, n, m).map_err(|e| e.to_string())?;
                for class in &classes {
                    let z = FrequencyVector::from_partition(m, class).unwrap();
                    let closed = sym.eval(&z).unwrap();
                    let brute = class_average_oracle(&p, &z, budget).map_err(|e| e.to_string())?;
                    ensure(closed == brute, || format!("{mono} n={n} m={m} class {z}: {closed} vs {brute}"))?;
                    class_checks += 1;
                }
                let named = monomial_expectation(&mono, n, m).unwrap();
                for z in &vectors {
                    let closed = named.eval(z).unwrap();
                    let brute = average_oracle(&p, z, budget).map_err(|e| e.to_string())?;
                    ensure(closed == brute, || format!("{mono} n={n} m={m} z={z:?}: {closed} vs {brute}"))?;
                    ordered_checks += 1;
                    if printed_denominator_expectation(&mono, n, z).as_ref() != Some(&brute) {
                        printed_mismatch += 1;
                    }
                }
            }
        }
    }
    ensure(printed_mismatch > 0, || "N-l-1 denominator never disagreed".into())?;
    Ok(format!(
        "{class_checks} class + {ordered_checks} ordered checks exact; N-l-1 variant disagrees on {printed_mismatch}"
    ))
}

fn ac3_extend_restrict() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for trial in 0..100 {
        let n = rng.gen_range(1..=4u32);
        let m = rng.gen_range(n..=n + 3);
        let keys = partitions_up_to(n + 1, n as usize);
        let terms = (0..rng.gen_range(0..8)).map(|_| {
            let k = rng.gen_range(0..keys.len());
            (keys[k].clone(), ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9)))
        });
        let q = SymPolynomial::from_terms(n, terms.collect::<Vec<_>>());
        let back = restrict(&extend(&q, m).unwrap(), n).unwrap();
        ensure(back.coeffs() == q.coeffs() && back.m() == q.m(), || {
            format!("trial {trial}: n={n} m={m}: {q} -> {back}")
        })?;
    }
    Ok("100 random coefficient maps identical".into())
}

fn ac4_known_degrees() -> Outcome {
    let ed = approx_degree(&Property::ElementDistinctness, 2, 2, &third()).map_err(|e| e.to_string())?;
    ensure(ed.degree == 2, || format!("d*(ED,2,2) = {}", ed.degree))?;
    ensure(ed.eps_min(1) == Some(&ratio(1, 2)), || format!("eps_min(1) = {:?}", ed.eps_min(1)))?;
    let col = approx_degree(&Property::Collision, 2, 3, &third()).map_err(|e| e.to_string())?;
    ensure(col.degree == 2, || format!("d*(collision,2,3) = {}", col.degree))?;
    Ok("d*(ED,2,2)=2, eps_min(1)=1/2, d*(collision,2,3)=2".into())
}

fn ac5_wlog_symmetry() -> Outcome {
    let mut rows = Vec::new();
    for prop in [Property::ElementDistinctness, Property::Collision] {
        for d in 0..=2 {
            let sym = solve_lp(&build_lp(&prop, 2, 2, d).unwrap()).map_err(|e| e.to_string())?.eps_min;
            let full = full_basis_eps_min(&prop, 2, 2, d, Budget::default()).map_err(|e| e.to_string())?;
            ensure(sym == full, || format!("{} d={d}: symmetric {sym} vs full {full}", prop.name()))?;
            rows.push(format!("{}:d{d}={sym}", short(&prop)));
        }
    }
    Ok(rows.join(" "))
}

fn ac6_andor_soundness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut checks = 0;
    for n in 2..=3u32 {
        let vars = n * n;
        for trial in 0..50 {
            let terms: Vec<(Vec<u32>, Rational)> = (0..rng.gen_range(1..=8))
                .map(|_| {
                    let deg = rng.gen_range(0..=2);
                    let mono = (0..deg).map(|_| rng.gen_range(1..=vars)).collect();
                    (mono, ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
                })
                .collect();
            let p = XPolynomial::from_terms(n, terms).unwrap();
            let y = substitute(&p).unwrap();
            for f in enumerate_functions(n, n, Budget::default()).unwrap() {
                let lhs = y.eval(&f).unwrap();
                let rhs = p.eval(&f_to_assignment(&f).unwrap()).unwrap();
                ensure(lhs == rhs, || format!("n={n} trial {trial} f={:?}: {lhs} vs {rhs}", f.values()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (polynomial, function) pairs equal"))
}

fn ac7_growth_and_certificates() -> Outcome {
    let budget = Budget::default();
    let mut series = Vec::new();
    for (prop, ns) in [
        (Property::ElementDistinctness, vec![2, 3, 4, 5, 6]),
        (Property::Collision, vec![2, 4, 6]),
    ] {
        let mut last = 0;
        let mut degrees = Vec::new();
        for n in ns {
            let cert = approx_degree(&prop, n, n, &third()).map_err(|e| e.to_string())?;
            ensure(cert.degree >= last, || format!("{} dropped to {} at n={n}", prop.name(), cert.degree))?;
            last = cert.degree;
            degrees.push(cert.degree);
            let q = cert.polynomial();
            let r = verify_approximation(Approximant::Sym(q), &prop, n, n, &third(), budget).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("{} n={n} certificate fails class check", prop.name()))?;
            if n <= 4 {
                let p = symdeg::symmetrize::desymmetrize(q, n, n).map_err(|e| e.to_string())?;
                let r = verify_approximation(Approximant::Y(&p), &prop, n, n, &third(), budget).map_err(|e| e.to_string())?;
                ensure(r.pass, || format!("{} n={n} certificate fails function check", prop.name()))?;
            }
        }
        series.push(format!("{} {degrees:?}", short(&prop)));
    }
    Ok(format!("non-decreasing: {}", series.join(", ")))
}

fn ac8_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_symdeg");
    let run = || {
        Command::new(bin)
            .args(["sweep", "--property", "collision", "--n", "4", "--m", "4..6"])
            .output()
            .expect("spawn symdeg")
    };
    let a = run();
    let b = run();
    ensure(a.status.success() && b.status.success(), || "sweep exited non-zero".into())?;
    ensure(a.stdout == b.stdout, || "sweep output differs between runs".into())?;
    let lib = || sweep_csv(&sweep(&Property::ElementDistinctness, 3, 3..=6, &third()).unwrap()).unwrap();
    ensure(lib() == lib(), || "library sweep differs between runs".into())?;
    ensure(!a.stdout.is_empty() && a.stdout.iter().filter(|&&c| c == b'\n').count() == 4, || {
        "expected header + 3 rows".into()
    })?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 range invariance of d*", ac1_range_invariance),
        ("AC2 symmetrization equals enumeration", ac2_symmetrization_oracle),
        ("AC3 extend/restrict round trip", ac3_extend_restrict),
        ("AC4 known small degrees", ac4_known_degrees),
        ("AC5 symmetric LP matches full indicator LP", ac5_wlog_symmetry),
        ("AC6 AND-OR substitution soundness", ac6_andor_soundness),
        ("AC7 degree growth and certificate checks", ac7_growth_and_certificates),
        ("AC8 sweep output is deterministic", ac8_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({secs:.2}s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
