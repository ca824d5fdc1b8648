//! Acceptance battery. Prints one PASS/FAIL line per criterion and exits
//! nonzero if a criterion fails that is not listed in `KNOWN_FAILURES`, or if
//! a listed one unexpectedly passes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::{json, Value};

use subdepth::chars::{induction_matrix_routes, CharacterTable};
use subdepth::depth::{bratteli_power, depth_quad, DepthQuad};
use subdepth::exact::{dominated_by, mat_mul, rat, support, IntMatrix, SupportPattern};
use subdepth::green::h_depth_via_q;
use subdepth::hopf::{
    drinfeld_double, generalized_smash, group_algebra, group_pair_quotient, heisenberg_double, AlgData, HopfData,
    SubalgebraEmbedding, VerifyReport,
};
use subdepth::perm::{named_group, parse_subgroup};
use subdepth::pipelines::{
    bimodule_mult_matrix, bimodule_mult_matrix_of_power, default_battery, scenario, theta_instance, DepthReport,
    Scenario,
};
use subdepth::tensor::{depth_iso_check, relative_tensor_power, theta, DEFAULT_TENSOR_BUDGET};

/// Criteria whose stated expectation disagrees with the derived value. The
/// harness still runs them and prints FAIL with both values.
const KNOWN_FAILURES: &[u32] = &[10];

const PAIRS: [(&str, &str); 6] =
    [("S3", "[[1,2]]"), ("S3", "A3"), ("S4", "S3"), ("S3", "[[1,2,3]]"), ("A4", "V4"), ("D4", "[[2,4]]")];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn quad4(q: &DepthQuad) -> (usize, usize, usize, usize) {
    (q.d_odd, q.d_ev, q.d_min, q.d_h)
}

fn run(s: Scenario) -> Result<DepthReport, String> {
    scenario(&s).map_err(err)
}

fn table(name: &str) -> CharacterTable {
    CharacterTable::compute(&named_group(name).expect("named group")).expect("table")
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    match (out, limit) {
        (Ok(msg), Some(l)) if took > l => (Err(format!("{msg}; took {took:.2?}, limit {l:?}")), took),
        (out, _) => (out, took),
    }
}

fn c1() -> Outcome {
    let m = IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1]]).map_err(err)?;
    let q = quad4(&depth_quad(&m).map_err(err)?);
    ensure(q == (3, 4, 3, 5), format!("C2<=S3 matrix gave {q:?}"))?;
    let r = run(Scenario::pair("S3", "A3"))?;
    ensure(r.quad.d_min == 2, format!("A3<S3 d_min {}", r.quad.d_min))?;
    ensure(r.check("is_normal") == Some(&json!(true)), "A3<S3 not reported normal")?;
    let c = run(Scenario::pair("C4", "[[[1,3],[2,4]]]"))?;
    ensure(c.quad.d_min == 1, format!("C2<=C4 d_min {}", c.quad.d_min))?;
    Ok(format!("C2<=S3 {q:?}, A3<S3 d_min 2 normal, C2<=C4 d_min 1"))
}

fn c2() -> Outcome {
    let mut got = Vec::new();
    let start = Instant::now();
    for n in 1..=8 {
        let r = run(Scenario::Sym { n })?;
        ensure(r.quad.d_min == 2 * n - 1, format!("sym {n}: d_min {}", r.quad.d_min))?;
        let claim = r.claim("C1").ok_or("sym report lacks C1")?;
        ensure(claim.lhs == json!(2 * n - 1) && claim.rhs == json!(2 * n + 1), "C1 values not recorded")?;
        if n >= 2 {
            ensure(!claim.passed(), format!("C1 passed at n = {n}"))?;
        }
        got.push(r.quad.d_min);
    }
    let series = start.elapsed();
    ensure(series < Duration::from_secs(10), format!("n = 1..8 took {series:.2?}"))?;
    let start = Instant::now();
    let big = run(Scenario::Sym { n: 25 })?;
    let took = start.elapsed();
    ensure(big.quad.d_min == 49, format!("sym 25: d_min {}", big.quad.d_min))?;
    ensure(took < Duration::from_secs(60), format!("sym 25 took {took:.2?}"))?;
    Ok(format!("d_min {got:?} against claimed 2n+1 (C1 FAIL recorded) in {series:.2?}; sym 25 d_min 49 in {took:.2?}"))
}

fn c3() -> Outcome {
    let mut out = Vec::new();
    for (g, h) in PAIRS {
        let gg = named_group(g).map_err(err)?;
        let hh = parse_subgroup(h, &gg).map_err(err)?;
        let bridge =
            h_depth_via_q(&CharacterTable::compute(&hh).map_err(err)?, &CharacterTable::compute(&gg).map_err(err)?)
                .map_err(err)?;
        ensure(bridge.agrees(), format!("{h}<={g}: 2d(Q)+1 = {} but d_h = {}", bridge.via_q, bridge.via_matrix))?;
        out.push(format!("{h}<={g}:{}", bridge.via_q));
    }
    Ok(out.join(" "))
}

fn c4() -> Outcome {
    let mut out = Vec::new();
    for (g, h) in PAIRS {
        let r = run(Scenario::pair(g, h))?;
        let c = r.claim("C2").ok_or("pair report lacks C2")?;
        ensure(c.passed(), format!("{}: normal {} but d_min {}", c.instance, c.lhs, r.quad.d_min))?;
        out.push(format!("{h}<={g}:{}", r.quad.d_min));
    }
    Ok(out.join(" "))
}

fn c5() -> Outcome {
    let mut battery = default_battery();
    battery.push(Scenario::pair("C4", "[[[1,3],[2,4]]]"));
    battery
        .push(Scenario::Matrix { matrix: IntMatrix::from_rows(&[[1, 0, 1], [0, 1, 1]]).map_err(err)?, source: None });
    let mut count = 0;
    for s in battery {
        let r = run(s)?;
        ensure(r.quad.chain_holds(), format!("{}: quad {:?}", r.scenario.instance(), quad4(&r.quad)))?;
        count += 1;
    }
    Ok(format!("{count} scenarios including drinfeld(S3) and gensmash(S3, C2)"))
}

fn negative(report: VerifyReport, what: &str) -> Result<(), String> {
    let fail = report.first_failure().ok_or(format!("corrupted {what} verified"))?;
    ensure(fail.witness.is_some(), format!("corrupted {what}: no witness"))
}

fn c6() -> Outcome {
    let s3 = named_group("S3").map_err(err)?;
    let c2 = named_group("C2").map_err(err)?;
    let kg = group_algebra(&s3);
    let mut checked = Vec::new();
    let mut check = |name: &str, r: VerifyReport| {
        checked.push(name.to_string());
        ensure(r.passed(), format!("{name}: {:?}", r.first_failure()))
    };
    check("kS3", kg.verify())?;
    check("(kS3)*", kg.dual().verify())?;
    check("(kS3)*cop", kg.dual().cop().map_err(err)?.verify())?;
    let heis = heisenberg_double(&kg).map_err(err)?;
    let mut r = heis.alg.verify();
    r.extend(heis.psi.verify(&heis.a, &heis.b));
    check("kS3#kS3*", r)?;
    let h = parse_subgroup("[[1,2]]", &s3).map_err(err)?;
    let (kg2, _, q) = group_pair_quotient(&s3, &h).map_err(err)?;
    let x = generalized_smash(&kg2, &q).map_err(err)?;
    ensure(x.alg.dim() == 18, format!("generalized smash has dim {}", x.alg.dim()))?;
    let mut r = x.alg.verify();
    r.extend(q.verify(&kg2));
    check("Q*op#kS3", r)?;
    let d2 = drinfeld_double(&group_algebra(&c2)).map_err(err)?;
    ensure(d2.hopf.dim() == 4 && d2.hopf.alg().is_commutative(), "D(kC2) not 4-dim commutative")?;
    check("D(kC2)", d2.hopf.verify())?;
    let d6 = drinfeld_double(&kg).map_err(err)?;
    ensure(d6.hopf.dim() == 36, "D(kS3) not 36-dim")?;
    check("D(kS3)", d6.hopf.verify())?;

    let mut bad = kg.to_json();
    bad["mult"][1][2][0] = json!("1/2");
    negative(HopfData::from_json(&bad).map_err(err)?.verify(), "kS3 product")?;
    let mut bad = d2.hopf.to_json();
    bad["counit"][1] = json!("2");
    negative(HopfData::from_json(&bad).map_err(err)?.verify(), "D(kC2) counit")?;
    let mut bad = heis.alg.to_json();
    let flipped = if bad["mult"][3][5][0] == json!("0") { "1" } else { "0" };
    bad["mult"][3][5][0] = json!(flipped);
    negative(AlgData::from_json(&bad).map_err(err)?.verify(), "Heisenberg product")?;
    Ok(format!("{} verified, 3 corrupted controls rejected with witnesses", checked.join(", ")))
}

fn c7() -> Outcome {
    let c2 = named_group("C2").map_err(err)?;
    let mut out = Vec::new();
    for name in ["flip", "heisenberg", "smash"] {
        let s = theta_instance(name, &c2).map_err(err)?;
        for n in 1..=3 {
            let t = theta(&s, n, DEFAULT_TENSOR_BUDGET).map_err(err)?;
            let expected = s.dim_a.pow(n as u32) * s.dim_b;
            ensure(t.theta_ok(), format!("{name} n={n}: theta failed"))?;
            ensure(t.relative_dim == expected, format!("{name} n={n}: dim {} vs {expected}", t.relative_dim))?;
        }
        out.push(name);
    }
    Ok(format!("{} for n = 1..3", out.join(", ")))
}

fn c8() -> Outcome {
    let s3 = named_group("S3").map_err(err)?;
    let mut out = Vec::new();
    for sub in ["[[1,2]]", "A3"] {
        let h = parse_subgroup(sub, &s3).map_err(err)?;
        let (kg, emb, q) = group_pair_quotient(&s3, &h).map_err(err)?;
        for n in 1..=2 {
            let r = depth_iso_check(&kg, &emb, &q, n, DEFAULT_TENSOR_BUDGET).map_err(err)?;
            let expected = 6 * q.dim().pow(n as u32);
            ensure(r.bijective(), format!("{sub}<=S3 n={n}: not bijective ({:?})", r))?;
            ensure(r.lhs_dim == expected, format!("{sub}<=S3 n={n}: dim {} vs {expected}", r.lhs_dim))?;
            out.push(format!("{sub}<=S3 n={n}: {}", r.lhs_dim));
        }
    }
    Ok(out.join(", "))
}

fn c9() -> Outcome {
    let r = run(Scenario::GenSmash { group: "S3".into(), subgroup: "[[1,2]]".into() })?;
    let c = r.claim("C6").ok_or("gensmash report lacks C6")?;
    ensure(c.lhs == json!(5) && c.rhs == json!(5) && c.passed(), format!("C6: {} vs {}", c.lhs, c.rhs))?;
    Ok("d_odd by traces 5 = d_h(kC2, kS3) 5".into())
}

fn c10() -> Outcome {
    let mut notes = Vec::new();
    for g in ["C2", "C3", "S3"] {
        let r = run(Scenario::Drinfeld { group: g.into() })?;
        let c7 = r.claim("C7").ok_or("drinfeld report lacks C7")?;
        let abelian = g != "S3";
        ensure(c7.passed() != abelian, format!("{g}: C7 verdict {:?}", c7.verdict))?;
        ensure(r.check("bimodule_matrix_equals_md_t_md") == Some(&json!(true)), format!("{g}: T != M_D^T M_D"))?;
        if abelian {
            ensure(r.quad.d_min == 1, format!("{g}: d_min {}", r.quad.d_min))?;
        } else {
            // the derived quad, pinned
            ensure(quad4(&r.quad) == (3, 4, 3, 5), format!("S3: quad {:?}", quad4(&r.quad)))?;
        }
        notes.push(format!("{g} {:?}", quad4(&r.quad)));
    }
    let stated = (5, 4, 4, 3);
    Err(format!(
        "expected drinfeld(S3) = {stated:?}, computed {}; C7 FAIL for C2, C3 and PASS for S3, T = M_D^T M_D on all three",
        notes.join(", ")
    ))
}

fn c11() -> Outcome {
    let r = run(Scenario::Heisenberg { group: "C2".into() })?;
    ensure(r.quad.d_min == 2 && r.quad.d_h == 1, format!("heisenberg(C2) quad {:?}", quad4(&r.quad)))?;
    let c = r.claim("C5").ok_or("heisenberg report lacks C5")?;
    ensure(!c.passed() && c.lhs == json!(2), format!("C5: {:?} with {}", c.verdict, c.lhs))?;
    let start = Instant::now();
    let s3 = run(Scenario::Heisenberg { group: "S3".into() })?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), format!("heisenberg(S3) took {took:.2?}"))?;
    ensure(s3.quad.chain_holds(), "heisenberg(S3) breaks the chain inequality")?;
    Ok(format!("C2 d_min 2 d_h 1, C5 FAIL (2 vs 3); S3 {:?} in {took:.2?}", quad4(&s3.quad)))
}

fn c12() -> Outcome {
    let r = run(Scenario::pair("A5", "A4"))?;
    let c = r.claim("C8").ok_or("pair(A5, A4) lacks C8")?;
    ensure(c.rhs == json!(5) && c.passed(), format!("C8: {} <= {}", c.lhs, c.rhs))?;
    Ok(format!("d(A4, A5) = {} <= 5", r.quad.d_min))
}

fn valid_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..5, 1usize..5)
        .prop_flat_map(|(r, s)| proptest::collection::vec(0i64..3, r * s).prop_map(move |v| (r, s, v)))
        .prop_map(|(r, s, mut v)| {
            for i in 0..r.max(s) {
                let (a, b) = (i % r, i % s);
                if v[a * s + b] == 0 {
                    v[a * s + b] = 1;
                }
            }
            IntMatrix::new(r, s, v.into_iter().map(BigInt::from).collect()).expect("shape")
        })
}

fn proptest_suite<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn supp(m: &IntMatrix) -> SupportPattern {
    support(m).expect("nonnegative")
}

fn c13() -> Outcome {
    proptest_suite("support monotonicity", valid_matrix(), |m| {
        for j in 0..6 {
            let (a, b) = (bratteli_power(&m, j).unwrap(), bratteli_power(&m, j + 2).unwrap());
            prop_assert!(supp(&a).is_subset_of(&supp(&b)), "P_{} not inside P_{}", j, j + 2);
        }
        Ok(())
    })?;
    let pair = (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
        let cell = proptest::collection::vec(0i64..3, r * c);
        (cell.clone(), cell).prop_map(move |(x, y)| {
            let mk = |v: Vec<i64>| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap();
            (mk(x), mk(y))
        })
    });
    proptest_suite("domination", pair, |(x, y)| {
        prop_assert_eq!(dominated_by(&x, &y).unwrap(), supp(&x).is_subset_of(&supp(&y)));
        Ok(())
    })?;

    let groups = ["C2", "C3", "C4", "V4", "S3", "D4", "Q8", "A4", "S4", "A5"];
    for g in groups {
        ensure(table(g).check_orthogonality(), format!("{g}: table not orthogonal"))?;
    }
    for (g, h) in PAIRS.iter().copied().chain([("A5", "A4")]) {
        let gg = named_group(g).map_err(err)?;
        let hh = parse_subgroup(h, &gg).map_err(err)?;
        let (ind, res) = induction_matrix_routes(
            &CharacterTable::compute(&hh).map_err(err)?,
            &CharacterTable::compute(&gg).map_err(err)?,
        )
        .map_err(err)?;
        ensure(ind == res, format!("{h}<={g}: induction and restriction disagree"))?;
    }

    // X = Heisenberg double of kC2 as a kC2-bimodule through kC2 ≅ k^{C2}
    let x = heisenberg_double(&group_algebra(&named_group("C2").map_err(err)?)).map_err(err)?;
    let (d0, d1) = (&x.embed_b.images[0], &x.embed_b.images[1]);
    let (mut one, mut sign) = (d0.clone(), d0.clone());
    one.axpy(&rat(1), d1);
    sign.axpy(&rat(-1), d1);
    let emb = SubalgebraEmbedding { base_dim: 2, ambient_dim: 4, images: vec![one, sign] };
    let t = table("C2");
    let t1 = bimodule_mult_matrix(&x.alg, &emb, &t).map_err(err)?.matrix;
    let sq = relative_tensor_power(&x.alg, &emb, 2, DEFAULT_TENSOR_BUDGET).map_err(err)?;
    let t2 = bimodule_mult_matrix_of_power(&sq, &emb, &t).map_err(err)?.matrix;
    ensure(t2 == mat_mul(&t1, &t1).map_err(err)?, "T(X (x)_B X) != T(X)^2")?;
    Ok(format!(
        "supports, domination, {} tables orthogonal, {} pairs with equal M routes, composition law on Heisenberg kC2",
        groups.len(),
        PAIRS.len() + 1
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "matrix engine battery", Some(1), c1),
        (2, "symmetric group series", None, c2),
        (3, "h-depth equals 2 module depth of Q plus 1", Some(30), c3),
        (4, "normality iff depth at most 2", None, c4),
        (5, "chain inequality on every scenario", None, c5),
        (6, "Hopf kernel verification", Some(60), c6),
        (7, "theta maps for factorization algebras", None, c7),
        (8, "depth isomorphism bijectivity", None, c8),
        (9, "odd depth of the generalized smash product", Some(30), c9),
        (10, "Drinfeld double scenarios", None, c10),
        (11, "Heisenberg double audit", None, c11),
        (12, "alternating group bound", None, c12),
        (13, "property suites", None, c13),
    ];
    let mut unexpected = Vec::new();
    for (id, title, limit, f) in criteria {
        let (out, took) = timed(limit.map(Duration::from_secs), f);
        let (tag, detail) = match &out {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} criterion {id} ({title}) [{took:.2?}]: {detail}");
        if out.is_ok() == KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    let summary: Value = json!({ "known_failures": KNOWN_FAILURES, "unexpected": unexpected });
    println!("acceptance summary: {summary}");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
