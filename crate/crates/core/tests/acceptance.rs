//! Acceptance suite.
//!
//! Runs each acceptance criterion against oracles written here from the
//! definitions (integer arithmetic for ordinal scales, threshold sums for
//! Choquet integrals), prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symsugeno::generate::random_capacity;
use symsugeno::prelude::*;

const RANDOM_INSTANCES: usize = 10_000;

struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Verdict { ok, detail: detail.into() }
    }
}

/// A failed check with its description.
type Check = Result<(), String>;

fn verdict(checks: Vec<(&str, Check)>, summary: String) -> Verdict {
    let failures: Vec<_> = checks
        .into_iter()
        .filter_map(|(name, c)| c.err().map(|e| format!("{name}: {e}")))
        .collect();
    if failures.is_empty() {
        Verdict::new(true, summary)
    } else {
        Verdict::new(false, failures.join(" | "))
    }
}

fn ensure(condition: bool, detail: impl FnOnce() -> String) -> Check {
    if condition {
        Ok(())
    } else {
        Err(detail())
    }
}

// Integer model of Levels(K): magnitudes 0..=K, signed as i32.

fn int_sym_max(a: i32, b: i32) -> i32 {
    if b == -a {
        0
    } else if a.abs() >= b.abs() {
        a
    } else {
        b
    }
}

fn int_sym_min(a: i32, b: i32) -> i32 {
    a.signum() * b.signum() * a.abs().min(b.abs())
}

fn ambiguous(values: &[i32]) -> bool {
    match (values.iter().max(), values.iter().min()) {
        (Some(&hi), Some(&lo)) => hi == -lo && hi != 0,
        _ => false,
    }
}

/// Plain fold, valid once no opposite extremes remain.
fn int_fold(values: &[i32]) -> i32 {
    values.iter().fold(0, |acc, &x| int_sym_max(acc, x))
}

fn int_floor(values: &[i32]) -> i32 {
    let gains = values.iter().copied().filter(|&x| x >= 0).max().unwrap_or(0);
    let losses = values.iter().copied().filter(|&x| x < 0).min().unwrap_or(0);
    int_sym_max(gains, losses)
}

fn int_ceil(values: &[i32]) -> i32 {
    let mut rest = values.to_vec();
    rest.sort();
    while ambiguous(&rest) {
        rest.pop();
        rest.remove(0);
    }
    int_fold(&rest)
}

fn int_angle(values: &[i32]) -> i32 {
    let mut rest = values.to_vec();
    while ambiguous(&rest) {
        let hi = *rest.iter().max().unwrap();
        rest.retain(|&x| x != hi && x != -hi);
    }
    int_fold(&rest)
}

fn lv(x: i32) -> ScaleValue<Level> {
    ScaleValue::with_sign(x < 0, Level(x.unsigned_abs()))
}

fn to_int(x: ScaleValue<Level>) -> i32 {
    let m = x.magnitude().0 as i32;
    if x.is_negative() {
        -m
    } else {
        m
    }
}

/// Capacity table over masks.
type Table = Vec<i32>;

fn capacity(k: u32, table: &Table) -> Capacity<Levels> {
    let n = table.len().trailing_zeros() as usize;
    Capacity::from_table(Levels::new(k).unwrap(), n, table.iter().map(|&x| lv(x)).collect()).unwrap()
}

fn table_of(v: &Capacity<Levels>) -> Table {
    v.magnitudes().iter().map(|m| m.0 as i32).collect()
}

fn profile(f: &[i32]) -> Profile<Level> {
    Profile::new(f.iter().map(|&x| lv(x)).collect())
}

fn set_function(n: usize, table: &[i32]) -> SetFunction<Level> {
    SetFunction::new(n, table.iter().map(|&x| lv(x)).collect()).unwrap()
}

/// `⋁ᵢ fᵢ ∧ v({j : fⱼ ≥ fᵢ})` for `f ≥ 0`; needs no sorting.
fn oracle_sugeno(v: &Table, f: &[i32]) -> i32 {
    (0..f.len())
        .map(|i| {
            let level_set = (0..f.len()).filter(|&j| f[j] >= f[i]).fold(0, |m, j| m | 1 << j);
            f[i].min(v[level_set])
        })
        .max()
        .unwrap_or(0)
        .max(0)
}

fn oracle_symmetric(v: &Table, f: &[i32]) -> i32 {
    let plus: Vec<_> = f.iter().map(|&x| x.max(0)).collect();
    let minus: Vec<_> = f.iter().map(|&x| (-x).max(0)).collect();
    int_sym_max(oracle_sugeno(v, &plus), -oracle_sugeno(v, &minus))
}

/// `v(A)` where `v(A) > v(A∖i)` for every `i ∈ A`, else 0.
fn oracle_lower(v: &Table) -> Table {
    (0..v.len())
        .map(|a| {
            let strict = a != 0 && (0..32).filter(|i| a >> i & 1 == 1).all(|i| v[a] > v[a & !(1 << i)]);
            if strict {
                v[a]
            } else {
                0
            }
        })
        .collect()
}

fn is_plain_solution(v: &Table, m: &Table) -> bool {
    (0..v.len()).all(|a| (0..v.len()).filter(|&b| b & !a == 0).map(|b| m[b]).max() == Some(v[a]))
}

/// All tables `m` over `0..=k` with `v(A) = max_{B⊆A} m(B)`, found by a
/// pruned search in mask order.
fn brute_solutions(v: &Table, k: i32) -> Vec<Table> {
    fn go(mask: usize, v: &Table, k: i32, m: &mut Table, out: &mut Vec<Table>) {
        if mask == v.len() {
            out.push(m.clone());
            return;
        }
        let below = (0..mask).filter(|&b| b & !mask == 0).map(|b| m[b]).max().unwrap_or(0);
        for c in 0..=k {
            if below.max(c) == v[mask] {
                m[mask] = c;
                go(mask + 1, v, k, m, out);
            }
        }
    }
    let mut out = Vec::new();
    go(0, v, k, &mut vec![0; v.len()], &mut out);
    out
}

/// Every capacity table on two players over `0..=k`.
fn two_player_tables(k: i32) -> Vec<Table> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            out.push(vec![0, a, b, k]);
        }
    }
    out
}

fn signed_profiles(k: i32, n: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-k..=k).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Members of `[lower, upper]` on `0..=k`: all when at most `cap`, else both
/// ends and `extra` random ones.
fn members(lower: &Table, upper: &Table, cap: u64, extra: usize, rng: &mut ChaCha8Rng) -> Vec<Table> {
    let size: u64 = lower.iter().zip(upper).map(|(l, u)| (u - l + 1) as u64).product();
    if size <= cap {
        let mut out = vec![vec![]];
        for (l, u) in lower.iter().zip(upper) {
            out = out
                .into_iter()
                .flat_map(|p: Table| {
                    (*l..=*u).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        return out;
    }
    let mut out = vec![lower.clone(), upper.clone()];
    for _ in 0..extra {
        out.push(lower.iter().zip(upper).map(|(l, u)| rng.gen_range(*l..=*u)).collect());
    }
    out
}

/// The two families used by the ordinal suites: every capacity on two
/// players over `{0..K}` for `K ≤ 3`, and random three-player capacities
/// over `{0..3}`.
fn ordinal_families(seed: u64) -> Vec<(i32, Table)> {
    let mut out: Vec<(i32, Table)> = (1..=3).flat_map(|k| two_player_tables(k).into_iter().map(move |t| (k, t))).collect();
    let scale = Levels::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..RANDOM_INSTANCES).map(|_| (3, table_of(&random_capacity(&scale, 3, &mut rng)))));
    out
}

fn show(table: &[i32]) -> String {
    format!("{table:?}")
}

fn criterion_1() -> Verdict {
    let unit = Unit::new();
    let q = |t: &str| unit.parse_value(t).unwrap();
    let table = ["0", "0.3", "0.25", "0.4", "0.2", "0.3", "0.6", "1"];
    let v = Capacity::from_table(unit.clone(), 3, table.iter().map(|t| q(t)).collect()).unwrap();
    let f = Profile::new(vec![q("-1"), q("0.3"), q("1")]);
    let lower = ordinal_mobius_interval(&v).lower;
    let s = sugeno_symmetric(&v, &f).unwrap();
    let s1 = sugeno_variant1(&lower, &f).unwrap();
    let s2 = sugeno_variant2(&v, &f).unwrap();

    // Same instance scaled by 100 on the integer model.
    let int_v: Table = vec![0, 30, 25, 40, 20, 30, 60, 100];
    let int_f = [-100, 30, 100];
    let oracle_s = oracle_symmetric(&int_v, &int_f);
    let low = oracle_lower(&int_v);
    let (plus, minus): (Vec<_>, Vec<_>) = int_f.iter().map(|&x| (x.max(0), (-x).max(0))).unzip();
    let v1_terms: Vec<i32> = (1..8usize)
        .map(|a| {
            let members = || (0..3).filter(move |i| a >> i & 1 == 1);
            let inner = int_sym_max(members().map(|i| plus[i]).min().unwrap(), -members().map(|i| minus[i]).min().unwrap());
            int_sym_min(low[a], inner)
        })
        .collect();
    let v2_terms = vec![int_sym_min(-100, 30), int_sym_min(30, 60), int_sym_min(100, 20)];
    let checks = vec![
        ("symmetric", ensure(s == q("0") && oracle_s == 0, || unit.format_value(&s))),
        ("variant 1", ensure(s1 == q("0.25") && int_angle(&v1_terms) == 25, || unit.format_value(&s1))),
        ("variant 2", ensure(s2 == q("0.2") && int_angle(&v2_terms) == 20, || unit.format_value(&s2))),
    ];
    verdict(
        checks,
        format!(
            "symmetric={} v1={} v2={}",
            unit.format_value(&s),
            unit.format_value(&s1),
            unit.format_value(&s2)
        ),
    )
}

fn criterion_2() -> Verdict {
    let unit = Unit::new();
    let q = |t: &str| unit.parse_value(t).unwrap();
    let table = ["0", "0.3", "0.25", "0.4", "0.2", "0.3", "0.6", "1"];
    let v = Capacity::from_table(unit.clone(), 3, table.iter().map(|t| q(t)).collect()).unwrap();
    let interval = ordinal_mobius_interval(&v);
    let slack = interval.slack();
    let one_three: Coalition = "{1,3}".parse().unwrap();
    let degenerate_elsewhere = Coalition::all(3)
        .filter(|&a| a != one_three)
        .all(|a| interval.lower.get(a) == v.value(a) && interval.upper.get(a) == v.value(a));
    let checks = vec![
        ("slack", ensure(slack == vec![one_three], || format!("{slack:?}"))),
        (
            "{1,3}",
            ensure(interval.lower.get(one_three) == q("0") && interval.upper.get(one_three) == q("0.3"), || {
                format!(
                    "[{}, {}]",
                    unit.format_value(&interval.lower.get(one_three)),
                    unit.format_value(&interval.upper.get(one_three))
                )
            }),
        ),
        ("degenerate", ensure(degenerate_elsewhere, || "interval not degenerate off {1,3}".into())),
    ];
    verdict(checks, "[m]({1,3}) = [0, 0.3], degenerate elsewhere".into())
}

/// `k/d` on the unit scale.
fn unit_fraction(k: i64, d: i64) -> ScaleValue<Rational> {
    ScaleValue::with_sign(k < 0, Rational::new(k.abs(), d))
}

fn criterion_3() -> Verdict {
    let raw: [i32; 9] = [3, 3, 3, 2, 1, 0, -2, -3, -3];
    let values: Vec<_> = raw.iter().map(|&k| unit_fraction(k.into(), 3)).collect();
    let results: Vec<_> = [AggregationRule::Floor, AggregationRule::Ceil, AggregationRule::Angle]
        .iter()
        .map(|&r| fold_sym_max(&values, r))
        .collect();
    let expected = [unit_fraction(0, 3), unit_fraction(3, 3), unit_fraction(1, 3)];
    let oracle = [int_floor(&raw), int_ceil(&raw), int_angle(&raw)];
    let checks = vec![
        ("library", ensure(results == expected, || format!("{results:?}"))),
        ("oracle", ensure(oracle == [0, 3, 1], || format!("{oracle:?}"))),
    ];
    verdict(checks, "floor 0, ceil 3, angle 1 (scaled by 1/3)".into())
}

fn criterion_4() -> Verdict {
    let a = [-5, -5, -1, 2, 5];
    let b = [-5, -4, -1, 2, 5];
    let fold = |xs: &[i64]| {
        let values: Vec<_> = xs.iter().map(|&k| unit_fraction(k, 5)).collect();
        fold_sym_max(&values, AggregationRule::Angle)
    };
    let as_i32 = |xs: &[i64]| xs.iter().map(|&x| x as i32).collect::<Vec<_>>();
    let checks = vec![
        ("a", ensure(fold(&a) == unit_fraction(2, 5), || format!("{:?}", fold(&a)))),
        ("b", ensure(fold(&b) == unit_fraction(-4, 5), || format!("{:?}", fold(&b)))),
        ("oracle", ensure(int_angle(&as_i32(&a)) == 2 && int_angle(&as_i32(&b)) == -4, String::new)),
        ("order", ensure(a.iter().zip(&b).all(|(x, y)| x <= y), String::new)),
    ];
    verdict(checks, "<a> = 2 > <b> = -4 with a ≤ b (scaled by 1/5)".into())
}

fn criterion_5() -> Verdict {
    let mut checks = Vec::new();
    let mut witnesses = Vec::new();
    let mut count = 0u64;
    for k in 1..=3i32 {
        let all: Vec<i32> = (-k..=k).collect();
        let mut failures = Vec::new();
        let mut fail = |what: &str, vals: &[i32]| failures.push(format!("K={k} {what} at {vals:?}"));
        let (smax, smin) = (|a: i32, b: i32| to_int(sym_max(lv(a), lv(b))), |a: i32, b: i32| to_int(sym_min(lv(a), lv(b))));
        for &a in &all {
            count += 1;
            // (iii)
            if smax(a, -a) != 0 {
                fail("a ⊚∨ -a", &[a]);
            }
            for &b in &all {
                count += 1;
                if smax(a, b) != int_sym_max(a, b) || smin(a, b) != int_sym_min(a, b) {
                    fail("oracle", &[a, b]);
                }
                // (i), (vi)
                if smax(a, b) != smax(b, a) || smin(a, b) != smin(b, a) {
                    fail("commutativity", &[a, b]);
                }
                // (iv)
                if -smax(a, b) != smax(-a, -b) {
                    fail("reflection", &[a, b]);
                }
                for &c in &all {
                    count += 1;
                    let triple = [a, b, c];
                    // (v): all orders and bracketings.
                    let orders = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
                    let results: BTreeSet<i32> = orders
                        .iter()
                        .flat_map(|&[x, y, z]| [smax(smax(x, y), z), smax(x, smax(y, z))])
                        .collect();
                    let max = *triple.iter().max().unwrap();
                    let min = *triple.iter().min().unwrap();
                    if max != -min && results.len() != 1 {
                        fail("associativity", &triple);
                    }
                    if max == -min && results.len() > 1 && witnesses.len() < 3 {
                        witnesses.push(format!(
                            "K={k} ({a} ⊚∨ {b}) ⊚∨ {c} = {} vs {a} ⊚∨ ({b} ⊚∨ {c}) = {}",
                            smax(smax(a, b), c),
                            smax(a, smax(b, c))
                        ));
                    }
                    // (viii)
                    if smin(smin(a, b), c) != smin(a, smin(b, c)) {
                        fail("⊚∧ associativity", &triple);
                    }
                    // (ix)
                    let same_half = triple.iter().all(|&x| x >= 0) || triple.iter().all(|&x| x <= 0);
                    if same_half && smin(a, smax(b, c)) != smax(smin(a, b), smin(a, c)) {
                        fail("distributivity", &triple);
                    }
                }
            }
        }
        // (ii), (vii)
        let neutral_max: Vec<_> = all.iter().copied().filter(|&e| all.iter().all(|&a| smax(e, a) == a)).collect();
        let absorbing_min: Vec<_> = all.iter().copied().filter(|&e| all.iter().all(|&a| smin(e, a) == e)).collect();
        let neutral_min: Vec<_> = all.iter().copied().filter(|&e| all.iter().all(|&a| smin(e, a) == a)).collect();
        let absorbing_max: Vec<_> = all
            .iter()
            .copied()
            .filter(|&e| all.iter().filter(|&&a| a != -e).all(|&a| smax(e, a) == e))
            .filter(|&e| e >= 0)
            .collect();
        if neutral_max != [0] || absorbing_min != [0] {
            fail("zero as neutral/absorbing", &[]);
        }
        if neutral_min != [k] || absorbing_max != [k] {
            fail("top as neutral/absorbing", &[]);
        }
        checks.push(("laws", if failures.is_empty() { Ok(()) } else { Err(failures.join(", ")) }));
    }
    checks.push(("non-associativity witness", ensure(!witnesses.is_empty(), || "none found".into())));
    verdict(
        checks,
        format!("{count} cases on K=1..3; witness {}", witnesses.first().cloned().unwrap_or_default()),
    )
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut checked_members = 0u64;
    let mut checked_solutions = 0u64;
    let mut failure: Option<String> = None;
    for (k, table) in ordinal_families(6) {
        let n = table.len().trailing_zeros() as usize;
        let v = capacity(k as u32, &table);
        let interval = ordinal_mobius_interval(&v);
        let lower = oracle_lower(&table);
        if interval.lower != set_function(n, &lower) || interval.upper != set_function(n, &table) {
            failure = Some(format!("interval of {}", show(&table)));
            break;
        }
        // Soundness: members of the interval solve the equation.
        for m in members(&lower, &table, 4096, 64, &mut rng) {
            checked_members += 1;
            if !is_solution(&set_function(n, &m), &v, AggregationRule::Floor) || !is_plain_solution(&table, &m) {
                failure = Some(format!("member {} of v={}", show(&m), show(&table)));
                break;
            }
        }
        // Completeness: brute-force solutions lie in the interval.
        let size: u64 = lower.iter().zip(&table).map(|(l, u)| (u - l + 1) as u64).product();
        let solutions = brute_solutions(&table, k);
        checked_solutions += solutions.len() as u64;
        if let Some(m) = solutions.iter().find(|m| !interval.contains(&set_function(n, m))) {
            failure = Some(format!("solution {} outside interval of v={}", show(m), show(&table)));
        } else if solutions.len() as u64 != size {
            failure = Some(format!("{} solutions for {} members, v={}", solutions.len(), size, show(&table)));
        }
        if failure.is_some() {
            break;
        }
    }
    // Exhaustive brute force without pruning on two players.
    if failure.is_none() {
        'outer: for k in 1..=3 {
            for table in two_player_tables(k) {
                let interval = ordinal_mobius_interval(&capacity(k as u32, &table));
                for code in 0..(k + 1).pow(4) {
                    let m: Table = (0..4).map(|slot| code / (k + 1).pow(slot) % (k + 1)).collect();
                    if is_plain_solution(&table, &m) != interval.contains(&set_function(2, &m)) {
                        failure = Some(format!("unpruned search disagrees at m={} v={}", show(&m), show(&table)));
                        break 'outer;
                    }
                }
            }
        }
    }
    match failure {
        None => Verdict::new(
            true,
            format!(
                "48 exhaustive + {RANDOM_INSTANCES} random capacities; {checked_members} members solve, {checked_solutions} solutions all inside"
            ),
        ),
        Some(f) => Verdict::new(false, f),
    }
}

fn nonnegative_profiles(k: i32, n: usize) -> Vec<Vec<i32>> {
    signed_profiles(k, n).into_iter().filter(|f| f.iter().all(|&x| x >= 0)).collect()
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut checked = 0u64;
    for (k, table) in ordinal_families(7) {
        let n = table.len().trailing_zeros() as usize;
        let v = capacity(k as u32, &table);
        let lower = oracle_lower(&table);
        if even_odd_mobius(&v) != set_function(n, &lower) {
            return Verdict::new(false, format!("even/odd form differs from lower bound for v={}", show(&table)));
        }
        let profiles = if n == 2 {
            nonnegative_profiles(k, 2)
        } else {
            (0..4).map(|_| (0..n).map(|_| rng.gen_range(0..=k)).collect()).collect()
        };
        let reps = members(&lower, &table, 256, 32, &mut rng);
        for f in &profiles {
            let expected = oracle_sugeno(&table, f);
            if to_int(sugeno(&v, &profile(f)).unwrap()) != expected {
                return Verdict::new(false, format!("sugeno on v={} f={f:?}", show(&table)));
            }
            for m in &reps {
                checked += 1;
                if sugeno_mobius(&set_function(n, m), &profile(f)).map(to_int) != Ok(expected) {
                    return Verdict::new(false, format!("m={} v={} f={f:?}", show(m), show(&table)));
                }
            }
        }
    }
    Verdict::new(true, format!("{checked} (member, profile) pairs agree with the direct integral"))
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut checked = 0u64;
    for (k, table) in ordinal_families(8) {
        let n = table.len().trailing_zeros() as usize;
        let v = capacity(k as u32, &table);
        let profiles = if n == 2 {
            signed_profiles(k, 2)
        } else {
            vec![(0..n).map(|_| rng.gen_range(-k..=k)).collect()]
        };
        let reps = members(&oracle_lower(&table), &table, 64, 8, &mut rng);
        for f in &profiles {
            checked += 1;
            let expected = oracle_symmetric(&table, f);
            let g = profile(f);
            let value = to_int(sugeno_symmetric(&v, &g).unwrap());
            let explicit = to_int(sugeno_symmetric_explicit(&v, &g).unwrap());
            let reflected = to_int(sugeno_symmetric(&v, &g.reflect()).unwrap());
            if value != expected || explicit != expected || reflected != -expected {
                return Verdict::new(
                    false,
                    format!("v={} f={f:?}: oracle {expected}, direct {value}, explicit {explicit}, at -f {reflected}", show(&table)),
                );
            }
            for m in &reps {
                let blocks = sugeno_symmetric_mobius(&set_function(n, m), &g).unwrap();
                if to_int(blocks.total) != expected || !blocks.mixed.is_zero() {
                    return Verdict::new(false, format!("Möbius form with m={} v={} f={f:?}", show(m), show(&table)));
                }
            }
        }
    }
    Verdict::new(true, format!("{checked} instances: direct = explicit = Möbius form, odd under reflection"))
}

type Integral = fn(&Capacity<Levels>, &Profile<Level>) -> Result<ScaleValue<Level>, IntegralError>;

/// Pairs `f ≤ f'` from the ordinal families: every ordered pair on two
/// players, four random raises per random three-player instance.
fn first_violation(integral: Integral, seed: u64) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = 0u64;
    for (k, table) in ordinal_families(9) {
        let n = table.len().trailing_zeros() as usize;
        let v = capacity(k as u32, &table);
        let candidates: Vec<(Vec<i32>, Vec<i32>)> = if n == 2 {
            let all = signed_profiles(k, 2);
            all.iter()
                .flat_map(|f| all.iter().filter(move |g| f.iter().zip(*g).all(|(x, y)| x <= y)).map(move |g| (f.clone(), g.clone())))
                .collect()
        } else {
            let f: Vec<i32> = (0..n).map(|_| rng.gen_range(-k..=k)).collect();
            (0..4)
                .map(|_| {
                    let g = f.iter().map(|&x| if rng.gen_bool(0.5) { rng.gen_range(x..=k) } else { x }).collect();
                    (f.clone(), g)
                })
                .collect()
        };
        for (f, g) in candidates {
            pairs += 1;
            let (at_f, at_g) = (integral(&v, &profile(&f)).unwrap(), integral(&v, &profile(&g)).unwrap());
            if at_f > at_g {
                return (
                    pairs,
                    Some(format!("v={} f={f:?} ≤ f'={g:?} but {} > {}", show(&table), to_int(at_f), to_int(at_g))),
                );
            }
        }
    }
    (pairs, None)
}

fn criterion_9() -> Verdict {
    let (pairs_s, violation_s) = first_violation(sugeno_symmetric, 91);
    let (pairs_s3, violation_s3) = first_violation(sugeno_variant3, 91);
    let (_, violation_s2) = first_violation(sugeno_variant2, 91);
    // Pinned: v({1}) = 0, v(N) = 3, v = 2 elsewhere; tie-free profiles.
    let pinned: Table = vec![0, 0, 2, 2, 2, 2, 2, 3];
    let v = capacity(3, &pinned);
    let (f, g) = ([-3, -2, 2], [-1, -2, 2]);
    let s2 = |x: &[i32]| to_int(sugeno_variant2(&v, &profile(x)).unwrap());
    let pinned_holds = s2(&f) == 0 && s2(&g) == -1;
    let checks = vec![
        ("symmetric monotone", violation_s.clone().map_or(Ok(()), Err)),
        ("ceil variant monotone", violation_s3.clone().map_or(Ok(()), Err)),
        ("angle variant violation found", ensure(violation_s2.is_some(), || "none found".into())),
        ("angle variant pinned witness", ensure(pinned_holds, || format!("{} vs {}", s2(&f), s2(&g)))),
    ];
    verdict(
        checks,
        format!(
            "{pairs_s} pairs monotone for both; angle variant witness {}",
            violation_s2.unwrap_or_default()
        ),
    )
    .with_prefix(format!("{pairs_s} + {pairs_s3} pairs checked"))
}

impl Verdict {
    fn with_prefix(mut self, prefix: String) -> Self {
        if !self.ok {
            self.detail = format!("{prefix}; {}", self.detail);
        }
        self
    }
}

fn big(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `Σⱼ (tⱼ - tⱼ₋₁) v({f ≥ tⱼ})` over the distinct positive values of `f ≥ 0`.
fn oracle_choquet(v: &[BigRational], f: &[BigRational]) -> BigRational {
    let zero = big(0, 1);
    let mut levels: Vec<BigRational> = f.iter().filter(|x| **x > zero).cloned().collect();
    levels.sort();
    levels.dedup();
    let mut total = zero.clone();
    let mut previous = zero;
    for t in levels {
        let set = (0..f.len()).filter(|&j| f[j] >= t).fold(0usize, |m, j| m | 1 << j);
        total += (&t - &previous) * &v[set];
        previous = t;
    }
    total
}

fn criterion_10() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    let unit = Unit::with_grid(20);
    let zero = big(0, 1);
    for trial in 0..RANDOM_INSTANCES {
        let n = 1 + trial % 4;
        let cap = random_capacity(&unit, n, &mut rng);
        let real = cap.to_real();
        let table: Vec<BigRational> = real.values().to_vec();
        let full = (1usize << n) - 1;
        let conj_table: Vec<BigRational> = (0..=full).map(|a| big(1, 1) - &table[full & !a]).collect();
        let conj = RealSetFunction::new(n, conj_table.clone()).unwrap();
        let dens = [1, 2, 3, 4, 5, 7, 10, 12];
        let f: Vec<BigRational> = (0..n)
            .map(|_| {
                let d = *dens.choose(&mut rng).unwrap();
                big(rng.gen_range(-d..=d), d)
            })
            .collect();
        let plus: Vec<_> = f.iter().map(|x| x.clone().max(zero.clone())).collect();
        let minus: Vec<_> = f.iter().map(|x| (-x).max(zero.clone())).collect();
        let neg: Vec<_> = f.iter().map(|x| -x).collect();
        let sym = oracle_choquet(&table, &plus) - oracle_choquet(&table, &minus);
        let asym = oracle_choquet(&table, &plus) - oracle_choquet(&conj_table, &minus);
        let m = classical_mobius(&real);
        let results = [
            ("choquet", choquet(&real, &plus).unwrap() == oracle_choquet(&table, &plus)),
            ("mobius form", choquet_mobius(&m, &plus).unwrap() == oracle_choquet(&table, &plus)),
            ("symmetric", choquet_symmetric(&real, &f).unwrap() == sym),
            ("signed mobius form", sipos_mobius(&m, &f).unwrap() == sym),
            ("explicit", choquet_symmetric_explicit(&real, &f).unwrap() == sym),
            ("asymmetric", choquet_asymmetric(&real, &f).unwrap() == asym),
            ("asymmetric reflection", choquet_asymmetric(&real, &neg).unwrap() == -choquet_asymmetric(&conj, &f).unwrap()),
            ("symmetric reflection", choquet_symmetric(&real, &neg).unwrap() == -sym.clone()),
        ];
        if let Some((name, _)) = results.iter().find(|(_, ok)| !ok) {
            let fs: Vec<_> = f.iter().map(ToString::to_string).collect();
            let vs: Vec<_> = table.iter().map(ToString::to_string).collect();
            return Verdict::new(false, format!("{name}: v={vs:?} f={fs:?}"));
        }
    }
    Verdict::new(true, format!("{RANDOM_INSTANCES} random instances, n = 1..4, exact equality"))
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Option<Duration>, fn() -> Verdict);
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 10] = [
        (1, "worked instance values", secs(1), criterion_1),
        (2, "Möbius interval of the worked capacity", None, criterion_2),
        (3, "rules on the integer multiset", None, criterion_3),
        (4, "angle rule non-monotonicity", None, criterion_4),
        (5, "symmetric operation laws", secs(10), criterion_5),
        (6, "Möbius interval soundness and completeness", secs(60), criterion_6),
        (7, "Möbius form of the Sugeno integral", secs(60), criterion_7),
        (8, "symmetric integral equivalences", secs(60), criterion_8),
        (9, "monotonicity", secs(60), criterion_9),
        (10, "Choquet reference", secs(60), criterion_10),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let late = limit.is_some_and(|l| elapsed >= l);
        let ok = verdict.ok && !late;
        if !ok {
            failed += 1;
        }
        let budget = limit.map_or(String::new(), |l| format!(" < {}s", l.as_secs()));
        let timing = if late { " TIME LIMIT EXCEEDED" } else { "" };
        println!(
            "criterion {id:>2} {} {title} [{:.2}s{budget}]{timing}: {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            verdict.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
