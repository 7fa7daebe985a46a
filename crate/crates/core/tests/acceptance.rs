//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Randomized checks use a fixed ChaCha seed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cantor_core::*;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x00C4_A707;

type Check = std::result::Result<(), String>;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn listing(pairs: &[(i64, i64, i64, i64)]) -> Vec<ClosedInterval> {
    pairs
        .iter()
        .map(|&(a, b, c, d)| ClosedInterval::new(r(a, b), r(c, d)).unwrap())
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, started: Instant) -> Check {
    let took = started.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn stage_regression() -> Check {
    let t = Instant::now();
    let c3 = iterate(&FamilySpec::ternary(), 3).map_err(|e| e.to_string())?;
    let want = listing(&[
        (0, 1, 1, 27),
        (2, 27, 1, 9),
        (2, 9, 7, 27),
        (8, 27, 1, 3),
        (2, 3, 19, 27),
        (20, 27, 7, 9),
        (8, 9, 25, 27),
        (26, 27, 1, 1),
    ]);
    ensure(c3.intervals() == want.as_slice(), || format!("C_3 = {c3:?}"))?;

    let v = FamilySpec::power(4).unwrap();
    let v2 = iterate(&v, 2).unwrap();
    let want = listing(&[(0, 1, 5, 32), (7, 32, 3, 8), (5, 8, 25, 32), (27, 32, 1, 1)]);
    ensure(v2.intervals() == want.as_slice(), || format!("SVC(4)_2 = {v2:?}"))?;

    let v3 = iterate(&v, 3).unwrap();
    let want = listing(&[
        (0, 1, 9, 128),
        (11, 128, 5, 32),
        (7, 32, 37, 128),
        (39, 128, 3, 8),
        (5, 8, 89, 128),
        (91, 128, 25, 32),
        (27, 32, 117, 128),
        (119, 128, 1, 1),
    ]);
    ensure(v3.intervals() == want.as_slice(), || format!("SVC(4)_3 = {v3:?}"))?;
    within(Duration::from_secs(1), t)
}

fn measures() -> Check {
    let t = Instant::now();
    let lm = |f: FamilySpec| limit_measure(&f).unwrap();
    ensure(lm(FamilySpec::power(4).unwrap()) == r(1, 2), || "SVC(4) measure".into())?;
    for n in 3..=6u32 {
        let got = lm(FamilySpec::power(n).unwrap());
        let want = r(i64::from(n) - 3, i64::from(n) - 2);
        ensure(got == want, || format!("SVC({n}) measure {got}, want {want}"))?;
    }
    for lambda in [r(1, 4), r(1, 2), r(1, 1)] {
        let got = lm(FamilySpec::lambda(lambda.clone()).unwrap());
        ensure(got == Rational::one() - &lambda, || format!("C_lambda measure at {lambda}: {got}"))?;
    }
    for alpha in [r(1, 3), r(1, 2), r(1, 4), r(3, 4)] {
        let got = lm(FamilySpec::proportional(alpha.clone()).unwrap());
        ensure(got.is_zero(), || format!("proportional {alpha} measure {got}"))?;
    }
    ensure(lm(FamilySpec::digit_set(5, vec![0, 2, 4]).unwrap()).is_zero(), || "C^5 measure".into())?;
    within(Duration::from_secs(1), t)
}

fn dimensions() -> Check {
    let t = Instant::now();
    let dim = |f: FamilySpec| similarity_dimension(&f).unwrap().value;
    let near = |got: f64, want: f64, tol: f64, what: &str| {
        ensure((got - want).abs() <= tol, || format!("{what}: {got} vs {want} (tol {tol})"))
    };
    near(dim(FamilySpec::proportional(r(1, 3)).unwrap()), 0.630930, 1e-6, "C")?;
    near(dim(FamilySpec::proportional(r(1, 2)).unwrap()), 0.5, 1e-6, "C^1/2")?;
    near(dim(FamilySpec::proportional(r(1, 4)).unwrap()), 0.706695, 1e-6, "C^1/4")?;
    near(dim(FamilySpec::proportional(r(3, 4)).unwrap()), 1.0 / 3.0, 1e-6, "C^3/4")?;
    let c5 = dim(FamilySpec::digit_set(5, vec![0, 2, 4]).unwrap());
    near(c5, 3f64.ln() / 5f64.ln(), 1e-6, "C^5 exact")?;
    near(c5, 0.6826, 1e-4, "C^5 reported")?;

    let v = FamilySpec::power(4).unwrap();
    let est = dimension_estimates(&v, 3).unwrap();
    for (&(k, got), want) in est.sequence.iter().zip([0.706695, 0.746806, 0.783274]) {
        near(got, want, 1e-6, &format!("SVC(4) d_{k}"))?;
    }
    let long = dimension_estimates(&v, 40).unwrap();
    ensure(long.sequence.windows(2).all(|w| w[1].1 > w[0].1), || "SVC(4) estimates not increasing".into())?;
    ensure(long.value > 0.95 && long.value < 1.0, || format!("SVC(4) d_40 = {}", long.value))?;
    within(Duration::from_secs(1), t)
}

fn counterexample_table() -> Check {
    let t = Instant::now();
    let v = FamilySpec::power(4).unwrap();
    ensure(tail_measure(&v, 0).unwrap() == r(1, 2), || "tail(0)".into())?;
    for g in 1..=10u32 {
        let end = (1usize << g) - 1;
        let got = tail_measure(&v, end).unwrap();
        let want = Rational::one() / Rational::from_integer(BigUint::from(2u32).pow(g + 1));
        ensure(got == want, || format!("tail at generation {g}: {got}, want {want}"))?;
    }
    let families = [
        v.clone(),
        FamilySpec::power(3).unwrap(),
        FamilySpec::lambda(r(1, 2)).unwrap(),
        FamilySpec::ternary(),
        FamilySpec::digit_set(5, vec![0, 2, 4]).unwrap(),
    ];
    for f in &families {
        for k in 0..=8 {
            let removed: Rational = removed_intervals(f, k).unwrap().iter().map(OpenInterval::length).sum();
            let total = removed + measure_at_depth(f, k).unwrap();
            ensure(total == Rational::one(), || format!("{f:?} k={k}: removed + measure = {total}"))?;
        }
    }
    within(Duration::from_secs(1), t)
}

fn random_family(rng: &mut ChaCha8Rng) -> (FamilySpec, u32) {
    match rng.gen_range(0..4) {
        0 => {
            let q = rng.gen_range(2..10);
            let p = rng.gen_range(1..q);
            (FamilySpec::proportional(r(p, q)).unwrap(), rng.gen_range(0..8))
        }
        1 => (FamilySpec::power(rng.gen_range(2..8)).unwrap(), rng.gen_range(0..8)),
        2 => {
            let n = rng.gen_range(3..8u32);
            let mut digits: Vec<u32> = (1..n - 1).filter(|_| rng.gen_bool(0.4)).collect();
            if digits.len() == n as usize - 2 {
                digits.remove(rng.gen_range(0..digits.len()));
            }
            digits.extend([0, n - 1]);
            let f = FamilySpec::digit_set(n, digits).unwrap();
            let depth = if n > 5 { 3 } else { 5 };
            (f, rng.gen_range(0..depth))
        }
        _ => (FamilySpec::lambda(r(rng.gen_range(1..=12), 12)).unwrap(), rng.gen_range(0..8)),
    }
}

fn random_unit_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    r(rng.gen_range(0..=q), q)
}

fn random_digit_member(rng: &mut ChaCha8Rng, n: u32, digits: &[u32]) -> Rational {
    let pre: Vec<u32> = (0..rng.gen_range(0..6)).map(|_| *digits.choose(rng).unwrap()).collect();
    let per: Vec<u32> = (0..rng.gen_range(0..6)).map(|_| *digits.choose(rng).unwrap()).collect();
    ExpansionRecord::new(n, pre, per).unwrap().to_rational()
}

const CASES: usize = 500;

fn property_suites() -> Check {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    for _ in 0..CASES {
        let (f, k) = random_family(&mut rng);
        let outer = iterate(&f, k).unwrap();
        let inner = iterate(&f, k + 1).unwrap();
        ensure(inner.is_subset_of(&outer), || format!("nesting: {f:?} k={k}"))?;
        for iv in outer.iter() {
            ensure(inner.contains_point(iv.a()) && inner.contains_point(iv.b()), || {
                format!("endpoint persistence: {f:?} k={k} {iv:?}")
            })?;
        }
    }

    let mut symmetric = 0;
    while symmetric < CASES {
        let (f, k) = random_family(&mut rng);
        if !f.is_symmetric() {
            continue;
        }
        symmetric += 1;
        let s = iterate(&f, k).unwrap();
        let x = random_unit_rational(&mut rng, 500);
        let mirrored = Rational::one() - &x;
        ensure(s.contains_point(&x) == s.contains_point(&mirrored), || format!("symmetry: {f:?} k={k} x={x}"))?;
    }

    let alphas = [r(1, 3), r(1, 2), r(3, 4)];
    for _ in 0..CASES {
        let alpha = alphas.choose(&mut rng).unwrap().clone();
        let k = rng.gen_range(0..=8);
        let digit = digit_equivalent(&alpha).ok_or("no digit equivalent")?;
        let prop = FamilySpec::proportional(alpha.clone()).unwrap();
        ensure(iterate(&prop, k).unwrap() == iterate(&digit, k).unwrap(), || {
            format!("digit/proportional equality: alpha={alpha} k={k}")
        })?;
    }

    let ternary = FamilySpec::ternary();
    let maps = IfsMaps::ternary();
    for _ in 0..CASES {
        let k = rng.gen_range(0..=10);
        let stepped = ifs_step(&iterate(&ternary, k).unwrap(), &maps).unwrap();
        ensure(stepped == iterate(&ternary, k + 1).unwrap(), || format!("IFS step: k={k}"))?;
    }

    let digit_families: Vec<(u32, Vec<u32>)> =
        vec![(3, vec![0, 2]), (5, vec![0, 2, 4]), (4, vec![0, 3]), (8, vec![0, 7]), (5, vec![0, 1, 4])];
    let mut decisive = 0;
    for i in 0..2 * CASES {
        let (n, digits) = digit_families.choose(&mut rng).unwrap().clone();
        let f = FamilySpec::digit_set(n, digits.clone()).unwrap();
        let x = if i % 2 == 0 {
            random_unit_rational(&mut rng, 1_000_000)
        } else {
            random_digit_member(&mut rng, n, &digits)
        };
        let limit = member_limit(&x, &f).unwrap();
        let deep = member_at_depth(&x, &f, 40).unwrap();
        if !deep {
            decisive += 1;
            ensure(!limit, || format!("membership: {x} rejected at depth 40 but in limit of {f:?}"))?;
        }
        if limit {
            ensure(deep, || format!("membership: {x} in limit but not at depth 40 of {f:?}"))?;
        }
        if i % 2 == 1 {
            ensure(limit, || format!("membership: constructed member {x} of {f:?} rejected"))?;
        }
    }
    ensure(decisive > 0, || "membership: no decisive depth-40 verdicts".into())?;

    for _ in 0..CASES {
        let x = random_unit_rational(&mut rng, 100_000);
        let base = rng.gen_range(2..=16);
        let rec = base_expansion(&x, base).unwrap();
        ensure(rec.to_rational() == x, || format!("expansion round trip: {x} base {base}"))?;
    }

    let mut members: Vec<Rational> = (0..200).map(|_| random_digit_member(&mut rng, 3, &[0, 2])).collect();
    members.sort();
    let values: Vec<Rational> = members.iter().map(|x| cantor_function(x).unwrap()).collect();
    ensure(values.windows(2).all(|w| w[0] <= w[1]), || "cantor function not monotone".into())?;
    ensure(cantor_function(&r(1, 4)).unwrap() == r(1, 3), || "f(1/4)".into())?;
    ensure(cantor_function(&r(1, 3)).unwrap() == r(1, 2), || "f(1/3)".into())?;
    ensure(cantor_function(&r(2, 3)).unwrap() == r(1, 2), || "f(2/3)".into())?;

    within(Duration::from_secs(30), t)
}

fn scale_check() -> Check {
    let f = FamilySpec::ternary();
    let t = Instant::now();
    let s = iterate(&f, 20).unwrap();
    let took = t.elapsed();
    ensure(s.len() == 1 << 20, || format!("{} intervals", s.len()))?;
    let width = Rational::one() / Rational::from_integer(3i64.pow(20));
    ensure(s.iter().all(|iv| iv.length() == width), || "unequal stage-20 lengths".into())?;
    ensure(s.intervals()[1].a() == &(&width * Rational::from_integer(2)), || "second interval".into())?;
    ensure(took < Duration::from_secs(10), || format!("enumeration took {took:?}"))?;

    let t = Instant::now();
    let m = measure_at_depth(&f, 20).unwrap();
    let took = t.elapsed();
    ensure(m == r(2, 3).pow(20), || format!("measure {m}"))?;
    ensure(took < Duration::from_millis(1), || format!("recurrence took {took:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 6] = [
        ("1 stage regression (exact listings)", stage_regression),
        ("2 limit measures (exact)", measures),
        ("3 dimensions and SVC(4) estimates", dimensions),
        ("4 counterexample tails and partition identity", counterexample_table),
        ("5 randomized property suites", property_suites),
        ("6 scale check: 2^20 intervals, O(k) measure", scale_check),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS  criterion {name}  ({:?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
