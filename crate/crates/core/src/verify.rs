//! Executable law suites.
//!
//! Each law checks one algebraic or structural property over a family of
//! instances: every capacity and profile on a small ordinal scale
//! ([`Mode::Exhaustive`]), or a seeded random sample of them
//! ([`Mode::Sampled`]). Instances are checked in parallel and merged by
//! index, so a report depends only on the configuration.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::capacity::{Capacity, PossibilityDistribution};
use crate::coalition::Coalition;
use crate::generate::{
    all_capacities, all_in_interval, all_profiles, covers, interval_grid_size,
    random_capacity, random_in_interval, random_profile, random_raise, seeded_rng, visit_nonnegative_solutions,
};
use crate::integrals::{
    choquet, choquet_asymmetric, choquet_mobius, choquet_symmetric, choquet_symmetric_explicit, sipos_mobius,
    sugeno, sugeno_mobius, sugeno_symmetric, sugeno_symmetric_explicit, sugeno_symmetric_mobius, sugeno_variant1,
    sugeno_variant2, sugeno_variant3, Profile,
};
use crate::mobius::{
    canonical_ordinal_mobius, classical_mobius, classical_zeta, conjugate_reconstruct, even_odd_mobius, is_solution,
    mobius_necessity, mobius_possibility, ordinal_mobius_interval, reconstruct, MobiusInterval, RealSetFunction,
    SetFunction,
};
use crate::rules::{fold_sym_max, is_fold_unambiguous, AggregationRule};
use crate::scale::{signed_rational, sym_max, sym_min, Level, Levels, Rational, Scale, ScaleValue, Unit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A property known not to hold; the report carries the witness.
    ExpectedFail,
    /// An observation that is reported but not asserted.
    Info,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedFail => "expected-fail",
            Status::Info => "info",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub status: Status,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Counterexample, witness or observation.
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Number of players.
    pub n: usize,
    /// Size `K` of the scale `{0, …, K}`.
    pub levels: u32,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown law `{0}`; run with --list to see the available laws")]
    UnknownLaw(String),
    #[error("{0}")]
    BadConfig(String),
}

/// Largest player count accepted in exhaustive mode.
pub const MAX_EXHAUSTIVE_PLAYERS: usize = 3;
/// Largest player count accepted in sampled mode.
pub const MAX_SAMPLED_PLAYERS: usize = 8;
pub const MAX_LEVELS: u32 = 32;

type LawFn = fn(&Context) -> LawReport;

/// Name, one-line summary, check.
const LAWS: &[(&str, &str, LawFn)] = &[
    ("involution", "reflect(reflect(a)) = a", law_involution),
    ("de-morgan", "(-a) ∨ (-b) = -(a ∧ b) and dually", law_de_morgan),
    ("marichal", "sign/magnitude formulation on a rational grid", law_marichal),
    ("commutativity", "both symmetric operations commute", law_commutativity),
    ("neutral-absorbing", "neutral and absorbing elements", law_neutral_absorbing),
    ("opposite-cancels", "a ⊚∨ -a = 0", law_opposite_cancels),
    ("reflection", "-(a ⊚∨ b) = (-a) ⊚∨ (-b)", law_reflection),
    ("max-associativity", "⊚∨ associative unless max = -min, with a witness", law_max_associativity),
    ("min-associativity", "⊚∧ associative", law_min_associativity),
    ("distributivity", "⊚∧ distributes over ⊚∨ on each half", law_distributivity),
    ("rule-agreement", "all rules agree on unambiguous folds", law_rule_agreement),
    ("rule-symmetry", "fold(-x) = -fold(x) for every rule", law_rule_symmetry),
    ("rule-monotone", "floor and ceil folds are monotone", law_rule_monotone),
    ("angle-monotonic", "angle fold is not monotone (pinned witness)", law_angle_monotonic),
    ("rule-singleton", "fold of one value is that value", law_rule_singleton),
    ("conjugate-involution", "conjugate of conjugate is the capacity", law_conjugate_involution),
    ("possibility-maxitive", "possibility measures are maxitive", law_possibility_maxitive),
    ("named-valid", "unanimity, possibility and necessity validate", law_named_valid),
    ("classical-roundtrip", "zeta inverts the classical Möbius transform", law_classical_roundtrip),
    ("mobius-interval", "nonnegative solutions are exactly the interval", law_mobius_interval),
    ("even-odd", "even/odd form equals the lower bound", law_even_odd),
    ("canonical", "canonical transform of a capacity is the lower bound", law_canonical),
    ("reconstruction", "every interval member rebuilds the capacity", law_reconstruction),
    ("conjugate-reconstruction", "capacity rebuilt from the conjugate's transform", law_conjugate_reconstruction),
    ("focal-structure", "possibility on singletons, necessity on a chain", law_focal_structure),
    ("mobius-nonlinear", "the ordinal transform is not linear", law_mobius_nonlinear),
    ("sugeno-mobius", "Möbius form of the Sugeno integral", law_sugeno_mobius),
    ("symmetric-equivalence", "three forms of the symmetric integral agree", law_symmetric_equivalence),
    ("symmetry", "V(-f) = -V(f) for all symmetric variants", law_symmetry),
    ("monotone", "symmetric integral is monotone", law_monotone),
    ("s3-monotone", "ceil variant is monotone", law_s3_monotone),
    ("s2-monotonic", "angle variant is not monotone (witness)", law_s2_monotonic),
    ("choquet-reference", "Choquet family cross-checks", law_choquet_reference),
    ("distinct-variants", "the variants differ on a worked instance", law_distinct_variants),
    ("variant1-representative", "dependence of the Möbius variant on the representative", law_variant1_representative),
];

pub fn law_names() -> impl Iterator<Item = &'static str> {
    LAWS.iter().map(|(name, _, _)| *name)
}

/// Every law with its one-line summary.
pub fn laws() -> impl Iterator<Item = (&'static str, &'static str)> {
    LAWS.iter().map(|(name, summary, _)| (*name, *summary))
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n == 0 {
            return Err(VerifyError::BadConfig("--n must be at least 1".into()));
        }
        if self.levels == 0 || self.levels > MAX_LEVELS {
            return Err(VerifyError::BadConfig(format!("--levels must be in 1..={MAX_LEVELS}")));
        }
        match self.mode {
            Mode::Exhaustive if self.n > MAX_EXHAUSTIVE_PLAYERS => Err(VerifyError::BadConfig(format!(
                "exhaustive mode supports at most {MAX_EXHAUSTIVE_PLAYERS} players"
            ))),
            Mode::Sampled { samples: 0, .. } => Err(VerifyError::BadConfig("--samples must be positive".into())),
            Mode::Sampled { .. } if self.n > MAX_SAMPLED_PLAYERS => Err(VerifyError::BadConfig(format!(
                "sampled mode supports at most {MAX_SAMPLED_PLAYERS} players"
            ))),
            _ => Ok(()),
        }
    }
}

/// Runs every law, or only `only` when given.
pub fn run(config: &VerifyConfig, only: Option<&str>) -> Result<Vec<LawReport>, VerifyError> {
    config.validate()?;
    let selected: Vec<_> = match only {
        Some(name) => {
            let law = LAWS
                .iter()
                .find(|(law, _, _)| *law == name)
                .ok_or_else(|| VerifyError::UnknownLaw(name.to_string()))?;
            vec![law]
        }
        None => LAWS.iter().collect(),
    };
    let ctx = Context::new(config);
    Ok(selected.into_iter().map(|(_, _, check)| check(&ctx)).collect())
}

/// Instances shared by the laws of one run.
struct Context {
    n: usize,
    mode: Mode,
    scale: Levels,
    alphabet: Vec<ScaleValue<Level>>,
    capacities: Vec<Capacity<Levels>>,
    profiles: Profiles<Level>,
    unit: Unit,
    unit_alphabet: Vec<ScaleValue<Rational>>,
    unit_capacities: Vec<Capacity<Unit>>,
    unit_profiles: Profiles<Rational>,
    seed: u64,
}

/// Exhaustive runs pair every capacity with every profile; sampled runs
/// pair capacity `i` with profile `i`.
enum Profiles<M> {
    Shared(Vec<Profile<M>>),
    Paired(Vec<Profile<M>>),
}

impl<M> Profiles<M> {
    fn for_capacity(&self, index: usize) -> &[Profile<M>] {
        match self {
            Profiles::Shared(all) => all,
            Profiles::Paired(each) => std::slice::from_ref(&each[index]),
        }
    }
}

impl Context {
    fn new(config: &VerifyConfig) -> Self {
        let scale = Levels::new(config.levels).expect("validated level count");
        let alphabet = scale.symmetric_grid();
        let unit = Unit::with_grid(config.levels as i64);
        let unit_alphabet = unit.symmetric_grid();
        let n = config.n;
        match config.mode {
            Mode::Exhaustive => Context {
                n,
                mode: config.mode,
                capacities: all_capacities(&scale, n),
                profiles: Profiles::Shared(all_profiles(&alphabet, n)),
                unit_capacities: all_capacities(&unit, n),
                unit_profiles: Profiles::Shared(all_profiles(&unit_alphabet, n)),
                scale,
                alphabet,
                unit,
                unit_alphabet,
                seed: 0,
            },
            Mode::Sampled { samples, seed } => {
                let mut rng = seeded_rng(seed);
                let mut capacities = Vec::with_capacity(samples as usize);
                let mut profiles = Vec::with_capacity(samples as usize);
                for _ in 0..samples {
                    capacities.push(random_capacity(&scale, n, &mut rng));
                    profiles.push(random_profile(&alphabet, n, &mut rng));
                }
                let mut unit_capacities = Vec::with_capacity(samples as usize);
                let mut unit_profiles = Vec::with_capacity(samples as usize);
                for _ in 0..samples {
                    unit_capacities.push(random_capacity(&unit, n, &mut rng));
                    unit_profiles.push(random_profile(&unit_alphabet, n, &mut rng));
                }
                Context {
                    n,
                    mode: config.mode,
                    capacities,
                    profiles: Profiles::Paired(profiles),
                    unit_capacities,
                    unit_profiles: Profiles::Paired(unit_profiles),
                    scale,
                    alphabet,
                    unit,
                    unit_alphabet,
                    seed,
                }
            }
        }
    }

    fn exhaustive(&self) -> bool {
        self.mode == Mode::Exhaustive
    }

    /// Runs `check` on every capacity with its profiles, in parallel.
    fn per_capacity<F>(&self, check: F) -> Outcome
    where
        F: Fn(usize, &Capacity<Levels>, &[Profile<Level>]) -> Outcome + Sync,
    {
        self.capacities
            .par_iter()
            .enumerate()
            .map(|(i, v)| check(i, v, self.profiles.for_capacity(i)))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Outcome::default(), Outcome::merge)
    }

    /// Runs `check` on every (capacity, profile) instance.
    fn per_instance<F>(&self, check: F) -> Outcome
    where
        F: Fn(&Capacity<Levels>, &Profile<Level>) -> Result<u64, String> + Sync,
    {
        self.per_capacity(|_, v, profiles| {
            let mut out = Outcome::default();
            for f in profiles {
                out = out.merge(Outcome::from_check(check(v, f)));
                if out.failure.is_some() {
                    break;
                }
            }
            out
        })
    }

    /// Interval members to test: all of them when few, else both ends and
    /// a seeded random selection.
    fn representatives(&self, index: usize, interval: &MobiusInterval<Level>) -> Vec<SetFunction<Level>> {
        if interval_grid_size(&self.scale, interval) <= 64 {
            return all_in_interval(&self.scale, interval);
        }
        let mut rng = seeded_rng(self.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut out = vec![interval.lower.clone(), interval.upper.clone()];
        out.extend((0..30).map(|_| random_in_interval(&self.scale, interval, &mut rng)));
        out
    }

    fn show(&self, value: &ScaleValue<Level>) -> String {
        self.scale.format_value(value)
    }

    fn show_profile(&self, f: &Profile<Level>) -> String {
        show_profile(&self.scale, f)
    }

    fn show_capacity(&self, v: &Capacity<Levels>) -> String {
        show_table(&self.scale, &v.to_set_function())
    }

    fn pairs(&self) -> impl Iterator<Item = (ScaleValue<Level>, ScaleValue<Level>)> + '_ {
        self.alphabet
            .iter()
            .flat_map(move |&a| self.alphabet.iter().map(move |&b| (a, b)))
    }

    fn triples(&self) -> impl Iterator<Item = [ScaleValue<Level>; 3]> + '_ {
        self.pairs()
            .flat_map(move |(a, b)| self.alphabet.iter().map(move |&c| [a, b, c]))
    }
}

#[derive(Default)]
struct Outcome {
    checked: u64,
    failure: Option<String>,
}

impl Outcome {
    fn from_check(result: Result<u64, String>) -> Self {
        match result {
            Ok(checked) => Outcome { checked, failure: None },
            Err(detail) => Outcome {
                checked: 1,
                failure: Some(detail),
            },
        }
    }

    /// Keeps the earliest failure.
    fn merge(self, later: Outcome) -> Outcome {
        Outcome {
            checked: self.checked + later.checked,
            failure: self.failure.or(later.failure),
        }
    }

    fn report(self, law: &'static str) -> LawReport {
        match self.failure {
            None => LawReport {
                law,
                status: Status::Pass,
                checked: self.checked,
                detail: String::new(),
            },
            Some(detail) => LawReport {
                law,
                status: Status::Fail,
                checked: self.checked,
                detail,
            },
        }
    }
}

/// Checks `ok` on each item, stopping at the first failure.
fn check_all<T, I, F>(items: I, mut ok: F) -> Outcome
where
    I: IntoIterator<Item = T>,
    F: FnMut(&T) -> Result<(), String>,
{
    let mut out = Outcome::default();
    for item in items {
        out.checked += 1;
        if let Err(detail) = ok(&item) {
            out.failure = Some(detail);
            break;
        }
    }
    out
}

fn ensure(condition: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(detail())
    }
}

pub fn show_profile<S: Scale>(scale: &S, f: &Profile<S::Mag>) -> String {
    let parts: Vec<_> = f.values().iter().map(|x| scale.format_value(x)).collect();
    format!("f=({})", parts.join(", "))
}

pub fn show_table<S: Scale>(scale: &S, g: &SetFunction<S::Mag>) -> String {
    let parts: Vec<_> = Coalition::all(g.n())
        .skip(1)
        .map(|a| format!("{a}:{}", scale.format_value(&g.get(a))))
        .collect();
    parts.join(" ")
}

fn show_values<S: Scale>(scale: &S, values: &[ScaleValue<S::Mag>]) -> String {
    let parts: Vec<_> = values.iter().map(|x| scale.format_value(x)).collect();
    format!("({})", parts.join(", "))
}

fn sequences<T: Copy>(alphabet: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

/// Sequence lengths whose full enumeration stays under a million items.
fn lengths_up_to(alphabet_len: usize, max_len: usize) -> impl Iterator<Item = usize> {
    (1..=max_len).take_while(move |&len| alphabet_len.checked_pow(len as u32).is_some_and(|c| c <= 1_000_000))
}

fn law_involution(ctx: &Context) -> LawReport {
    check_all(ctx.alphabet.iter().copied(), |&a| {
        ensure(a.reflect().reflect() == a && -(-a) == a, || format!("a={}", ctx.show(&a)))
    })
    .report("involution")
}

fn law_de_morgan(ctx: &Context) -> LawReport {
    check_all(ctx.pairs(), |&(a, b)| {
        ensure((-a).max(-b) == -(a.min(b)) && (-a).min(-b) == -(a.max(b)), || {
            format!("a={} b={}", ctx.show(&a), ctx.show(&b))
        })
    })
    .report("de-morgan")
}

fn law_marichal(ctx: &Context) -> LawReport {
    let sign = |q: Rational| -> Rational {
        use num_traits::Signed;
        q.signum()
    };
    let grid = &ctx.unit_alphabet;
    let pairs = grid.iter().flat_map(|&a| grid.iter().map(move |&b| (a, b)));
    check_all(pairs, |&(a, b)| {
        let (x, y) = (signed_rational(&a), signed_rational(&b));
        let max_mag = a.magnitude().max(b.magnitude());
        let min_mag = a.magnitude().min(b.magnitude());
        let expected_max = sign(x + y) * max_mag;
        let expected_min = sign(x * y) * min_mag;
        ensure(
            signed_rational(&sym_max(a, b)) == expected_max && signed_rational(&sym_min(a, b)) == expected_min,
            || format!("a={} b={}", ctx.unit.format_value(&a), ctx.unit.format_value(&b)),
        )
    })
    .report("marichal")
}

fn law_commutativity(ctx: &Context) -> LawReport {
    check_all(ctx.pairs(), |&(a, b)| {
        ensure(sym_max(a, b) == sym_max(b, a) && sym_min(a, b) == sym_min(b, a), || {
            format!("a={} b={}", ctx.show(&a), ctx.show(&b))
        })
    })
    .report("commutativity")
}

fn law_neutral_absorbing(ctx: &Context) -> LawReport {
    let all = &ctx.alphabet;
    let zero = ScaleValue::zero();
    let one = ctx.scale.one();
    let find = |pred: &dyn Fn(ScaleValue<Level>) -> bool| -> Vec<ScaleValue<Level>> {
        all.iter().copied().filter(|&e| pred(e)).collect()
    };
    let max_neutral = find(&|e| all.iter().all(|&a| sym_max(e, a) == a && sym_max(a, e) == a));
    let min_absorbing = find(&|e| all.iter().all(|&a| sym_min(e, a) == e && sym_min(a, e) == e));
    let min_neutral = find(&|e| all.iter().all(|&a| sym_min(e, a) == a && sym_min(a, e) == a));
    // 𝟙 ⊚∨ -𝟙 = 𝟘, so absorption by 𝟙 can only hold away from its opposite.
    let max_absorbing_total = find(&|e| all.iter().all(|&a| sym_max(e, a) == e));
    let one_absorbs = all.iter().filter(|&&a| a != -one).all(|&a| sym_max(one, a) == one);
    let checked = (all.len() * all.len() * 4) as u64;
    let mut problems = Vec::new();
    if max_neutral != [zero] {
        problems.push(format!("neutral elements of ⊚∨: {}", show_values(&ctx.scale, &max_neutral)));
    }
    if min_absorbing != [zero] {
        problems.push(format!("absorbing elements of ⊚∧: {}", show_values(&ctx.scale, &min_absorbing)));
    }
    if min_neutral != [one] {
        problems.push(format!("neutral elements of ⊚∧: {}", show_values(&ctx.scale, &min_neutral)));
    }
    if !one_absorbs || !max_absorbing_total.is_empty() {
        problems.push("absorption by the top element of ⊚∨ fails".to_string());
    }
    LawReport {
        law: "neutral-absorbing",
        status: if problems.is_empty() { Status::Pass } else { Status::Fail },
        checked,
        detail: if problems.is_empty() {
            "top absorbs every value except its opposite under ⊚∨".to_string()
        } else {
            problems.join("; ")
        },
    }
}

fn law_opposite_cancels(ctx: &Context) -> LawReport {
    check_all(ctx.alphabet.iter().copied(), |&a| {
        ensure(sym_max(a, -a).is_zero(), || format!("a={}", ctx.show(&a)))
    })
    .report("opposite-cancels")
}

fn law_reflection(ctx: &Context) -> LawReport {
    check_all(ctx.pairs(), |&(a, b)| {
        ensure(-sym_max(a, b) == sym_max(-a, -b), || {
            format!("a={} b={}", ctx.show(&a), ctx.show(&b))
        })
    })
    .report("reflection")
}

/// Every order and bracketing of a three-operand `⊚∨`.
fn max_bracketings(t: &[ScaleValue<Level>; 3]) -> Vec<ScaleValue<Level>> {
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    ORDERS
        .iter()
        .flat_map(|&[i, j, k]| {
            [
                sym_max(sym_max(t[i], t[j]), t[k]),
                sym_max(t[i], sym_max(t[j], t[k])),
            ]
        })
        .collect()
}

fn law_max_associativity(ctx: &Context) -> LawReport {
    let mut witness = None;
    let outcome = check_all(ctx.triples(), |t| {
        let results = max_bracketings(t);
        let agree = results.iter().all(|r| *r == results[0]);
        if is_fold_unambiguous(t) {
            ensure(agree, || format!("triple {} has disagreeing bracketings", show_values(&ctx.scale, t)))
        } else {
            if !agree && witness.is_none() {
                let (a, b, c) = (t[0], t[1], t[2]);
                witness = Some(format!(
                    "({} ⊚∨ {}) ⊚∨ {} = {} but {} ⊚∨ ({} ⊚∨ {}) = {}",
                    ctx.show(&a),
                    ctx.show(&b),
                    ctx.show(&c),
                    ctx.show(&sym_max(sym_max(a, b), c)),
                    ctx.show(&a),
                    ctx.show(&b),
                    ctx.show(&c),
                    ctx.show(&sym_max(a, sym_max(b, c))),
                ));
            }
            Ok(())
        }
    });
    let mut report = outcome.report("max-associativity");
    if report.status == Status::Pass {
        match witness {
            Some(w) => report.detail = format!("non-associativity witness: {w}"),
            None => {
                report.status = Status::Fail;
                report.detail = "no non-associative triple found".to_string();
            }
        }
    }
    report
}

fn law_min_associativity(ctx: &Context) -> LawReport {
    check_all(ctx.triples(), |&[a, b, c]| {
        ensure(sym_min(sym_min(a, b), c) == sym_min(a, sym_min(b, c)), || {
            format!("a={} b={} c={}", ctx.show(&a), ctx.show(&b), ctx.show(&c))
        })
    })
    .report("min-associativity")
}

fn law_distributivity(ctx: &Context) -> LawReport {
    let same_half = |t: &[ScaleValue<Level>; 3]| t.iter().all(|x| !x.is_negative()) || t.iter().all(|x| !x.is_positive());
    check_all(ctx.triples().filter(same_half), |&[a, b, c]| {
        ensure(sym_min(a, sym_max(b, c)) == sym_max(sym_min(a, b), sym_min(a, c)), || {
            format!("a={} b={} c={}", ctx.show(&a), ctx.show(&b), ctx.show(&c))
        })
    })
    .report("distributivity")
}

fn law_rule_agreement(ctx: &Context) -> LawReport {
    let mut out = Outcome::default();
    for len in lengths_up_to(ctx.alphabet.len(), 5) {
        out = out.merge(check_all(
            sequences(&ctx.alphabet, len).into_iter().filter(|s| is_fold_unambiguous(s)),
            |s| {
                let floor = fold_sym_max(s, AggregationRule::Floor);
                ensure(AggregationRule::ALL.iter().all(|&r| fold_sym_max(s, r) == floor), || {
                    format!("rules disagree on {}", show_values(&ctx.scale, s))
                })
            },
        ));
        if out.failure.is_some() {
            break;
        }
    }
    out.report("rule-agreement")
}

fn law_rule_symmetry(ctx: &Context) -> LawReport {
    let mut out = Outcome::default();
    for len in lengths_up_to(ctx.alphabet.len(), 5) {
        out = out.merge(check_all(sequences(&ctx.alphabet, len), |s| {
            let negated: Vec<_> = s.iter().map(|&x| -x).collect();
            match AggregationRule::ALL
                .iter()
                .find(|&&r| fold_sym_max(&negated, r) != -fold_sym_max(s, r))
            {
                None => Ok(()),
                Some(r) => Err(format!("{r} fold of {}", show_values(&ctx.scale, s))),
            }
        }));
        if out.failure.is_some() {
            break;
        }
    }
    out.report("rule-symmetry")
}

fn law_rule_monotone(ctx: &Context) -> LawReport {
    let mut out = Outcome::default();
    for len in lengths_up_to(ctx.alphabet.len(), 4) {
        out = out.merge(check_all(sequences(&ctx.alphabet, len), |s| {
            let lower = Profile::new(s.clone());
            for up in covers(&lower, &ctx.alphabet) {
                for rule in [AggregationRule::Floor, AggregationRule::Ceil] {
                    if fold_sym_max(s, rule) > fold_sym_max(up.values(), rule) {
                        return Err(format!(
                            "{rule}: {} ≤ {} but {} > {}",
                            show_values(&ctx.scale, s),
                            show_values(&ctx.scale, up.values()),
                            ctx.show(&fold_sym_max(s, rule)),
                            ctx.show(&fold_sym_max(up.values(), rule)),
                        ));
                    }
                }
            }
            Ok(())
        }));
        if out.failure.is_some() {
            break;
        }
    }
    out.report("rule-monotone")
}

/// The integer sequences `a ≤ b` with `⟨a⟩ = 2 > ⟨b⟩ = -4`.
pub fn angle_witness() -> ([i64; 5], [i64; 5]) {
    ([-5, -5, -1, 2, 5], [-5, -4, -1, 2, 5])
}

fn law_angle_monotonic(_: &Context) -> LawReport {
    let int = |x: i64| ScaleValue::with_sign(x < 0, Rational::from_integer(x.abs()));
    let (a, b) = angle_witness();
    let a: Vec<_> = a.into_iter().map(int).collect();
    let b: Vec<_> = b.into_iter().map(int).collect();
    let (fa, fb) = (fold_sym_max(&a, AggregationRule::Angle), fold_sym_max(&b, AggregationRule::Angle));
    let pointwise = a.iter().zip(&b).all(|(x, y)| x <= y);
    let detail = format!(
        "a=(-5,-5,-1,2,5) ≤ b=(-5,-4,-1,2,5) but <a>={} > <b>={}",
        signed_rational(&fa),
        signed_rational(&fb)
    );
    let holds = pointwise && fa == int(2) && fb == int(-4);
    LawReport {
        law: "angle-monotonic",
        status: if holds { Status::ExpectedFail } else { Status::Fail },
        checked: 1,
        detail,
    }
}

fn law_rule_singleton(ctx: &Context) -> LawReport {
    check_all(ctx.alphabet.iter().copied(), |&a| {
        ensure(AggregationRule::ALL.iter().all(|&r| fold_sym_max(&[a], r) == a), || {
            format!("a={}", ctx.show(&a))
        })
    })
    .report("rule-singleton")
}

fn law_conjugate_involution(ctx: &Context) -> LawReport {
    ctx.per_capacity(|_, v, _| {
        let conj = v.conjugate();
        let valid = Capacity::from_table(ctx.scale.clone(), v.n(), conj.to_set_function().values().to_vec()).is_ok();
        Outcome::from_check(
            ensure(valid && conj.conjugate() == *v, || format!("v: {}", ctx.show_capacity(v))).map(|_| 1),
        )
    })
    .report("conjugate-involution")
}

/// Normalized possibility distributions: all of them, or a seeded sample.
fn distributions(ctx: &Context) -> Vec<PossibilityDistribution<Levels>> {
    let grid: Vec<_> = ctx.scale.grid().into_iter().map(ScaleValue::positive).collect();
    let candidates = match ctx.mode {
        Mode::Exhaustive => sequences(&grid, ctx.n),
        Mode::Sampled { samples, seed } => {
            let mut rng = seeded_rng(seed ^ 0x5eed);
            (0..samples)
                .map(|_| {
                    let mut pi: Vec<_> = (0..ctx.n).map(|_| grid[rng.gen_range(0..grid.len())]).collect();
                    let top = rng.gen_range(0..ctx.n);
                    pi[top] = ctx.scale.one();
                    pi
                })
                .collect()
        }
    };
    candidates
        .into_iter()
        .filter_map(|pi| PossibilityDistribution::new(ctx.scale.clone(), pi).ok())
        .collect()
}

fn show_pi(ctx: &Context, pi: &PossibilityDistribution<Levels>) -> String {
    let values: Vec<_> = (0..pi.n()).map(|i| ScaleValue::positive(pi.get(i))).collect();
    format!("π={}", show_values(&ctx.scale, &values))
}

fn law_possibility_maxitive(ctx: &Context) -> LawReport {
    check_all(distributions(ctx), |pi| {
        let poss = pi.possibility();
        ensure(poss.is_maxitive() && poss.is_k_maxitive(1), || show_pi(ctx, pi))
    })
    .report("possibility-maxitive")
}

fn law_named_valid(ctx: &Context) -> LawReport {
    let revalidate =
        |v: &Capacity<Levels>| Capacity::from_table(ctx.scale.clone(), v.n(), v.to_set_function().values().to_vec()).is_ok();
    let unanimity = check_all(Coalition::all(ctx.n), |&b| {
        ensure(revalidate(&Capacity::unanimity(ctx.scale.clone(), ctx.n, b)), || format!("unanimity game of {b}"))
    });
    let named = check_all(distributions(ctx), |pi| {
        ensure(revalidate(&pi.possibility()) && revalidate(&pi.necessity()), || show_pi(ctx, pi))
    });
    unanimity.merge(named).report("named-valid")
}

fn law_classical_roundtrip(ctx: &Context) -> LawReport {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let count = match ctx.mode {
        Mode::Exhaustive => 1000,
        Mode::Sampled { samples, .. } => samples,
    };
    let mut rng = seeded_rng(ctx.seed ^ 0xc1a5);
    let n = ctx.n.min(6);
    let tables: Vec<RealSetFunction> = (0..count)
        .map(|_| {
            RealSetFunction::from_fn(n, |_| {
                BigRational::new(BigInt::from(rng.gen_range(-50i64..=50)), BigInt::from(rng.gen_range(1i64..=12)))
            })
        })
        .collect();
    let capacity_tables = ctx.unit_capacities.iter().map(Capacity::to_real);
    check_all(tables.into_iter().chain(capacity_tables), |g| {
        ensure(classical_zeta(&classical_mobius(g)) == *g && classical_mobius(&classical_zeta(g)) == *g, || {
            format!("table {:?}", g.values().iter().map(ToString::to_string).collect::<Vec<_>>())
        })
    })
    .report("classical-roundtrip")
}

/// Intervals with more grid members than this are checked on a sample of
/// members instead of by enumerating every solution.
const MAX_ENUMERATED_SOLUTIONS: u64 = 10_000;

fn law_mobius_interval(ctx: &Context) -> LawReport {
    let grid = ctx.scale.grid();
    let sampled_only = std::sync::atomic::AtomicU64::new(0);
    let mut report = ctx
        .per_capacity(|i, v, _| {
            let interval = ordinal_mobius_interval(v);
            let expected = interval_grid_size(&ctx.scale, &interval);
            let rejected = |m: &SetFunction<Level>| {
                format!("v: {}; rejected member {}", ctx.show_capacity(v), show_table(&ctx.scale, m))
            };
            if expected > MAX_ENUMERATED_SOLUTIONS {
                sampled_only.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                return check_all(ctx.representatives(i, &interval), |m| {
                    ensure(is_solution(m, v, AggregationRule::Floor), || rejected(m))
                });
            }
            // Independent search: plain maxima over subsets, no rule machinery.
            let mut out = Outcome::default();
            let mut found = 0u64;
            visit_nonnegative_solutions(v, &grid, |m| {
                found += 1;
                out.checked += 1;
                if !interval.contains(m) {
                    out.failure = Some(format!(
                        "v: {}; solution outside the interval: {}",
                        ctx.show_capacity(v),
                        show_table(&ctx.scale, m)
                    ));
                } else if !is_solution(m, v, AggregationRule::Floor) {
                    out.failure = Some(rejected(m));
                }
                out.failure.is_none()
            });
            if out.failure.is_none() && found != expected {
                out.failure = Some(format!(
                    "v: {}; {} grid functions in the interval but {} solutions",
                    ctx.show_capacity(v),
                    expected,
                    found
                ));
            }
            out
        })
        .report("mobius-interval");
    let sampled_only = sampled_only.into_inner();
    if sampled_only > 0 && report.status == Status::Pass {
        report.detail = format!("{sampled_only} capacities with large intervals checked on sampled members only");
    }
    report
}

fn law_even_odd(ctx: &Context) -> LawReport {
    ctx.per_capacity(|_, v, _| {
        Outcome::from_check(
            ensure(even_odd_mobius(v) == ordinal_mobius_interval(v).lower, || format!("v: {}", ctx.show_capacity(v)))
                .map(|_| 1),
        )
    })
    .report("even-odd")
}

fn law_canonical(ctx: &Context) -> LawReport {
    ctx.per_capacity(|_, v, _| {
        let lower = ordinal_mobius_interval(v).lower;
        let g = v.to_set_function();
        let ok = [AggregationRule::Floor, AggregationRule::Angle]
            .iter()
            .all(|&r| canonical_ordinal_mobius(&g, r).as_ref() == Ok(&lower));
        Outcome::from_check(ensure(ok, || format!("v: {}", ctx.show_capacity(v))).map(|_| 2))
    })
    .report("canonical")
}

fn law_reconstruction(ctx: &Context) -> LawReport {
    ctx.per_capacity(|i, v, _| {
        let interval = ordinal_mobius_interval(v);
        check_all(ctx.representatives(i, &interval), |m| {
            match Coalition::all(v.n()).find(|&a| reconstruct(m, a) != v.value(a)) {
                None => Ok(()),
                Some(a) => Err(format!(
                    "v: {}; m: {}; fails at {a}",
                    ctx.show_capacity(v),
                    show_table(&ctx.scale, m)
                )),
            }
        })
    })
    .report("reconstruction")
}

fn law_conjugate_reconstruction(ctx: &Context) -> LawReport {
    ctx.per_capacity(|_, v, _| {
        check_all(Coalition::all(v.n()), |&a| {
            ensure(conjugate_reconstruct(v, a) == v.value(a), || {
                format!("v: {}; fails at {a}", ctx.show_capacity(v))
            })
        })
    })
    .report("conjugate-reconstruction")
}

fn law_focal_structure(ctx: &Context) -> LawReport {
    check_all(distributions(ctx), |pi| {
        let (poss, nec) = (pi.possibility(), pi.necessity());
        let m_poss = mobius_possibility(pi);
        let m_nec = mobius_necessity(pi);
        let singletons = m_poss.support().iter().all(|a| a.len() == 1);
        let focal = m_nec.support();
        let nested = focal
            .iter()
            .all(|a| focal.iter().all(|b| a.is_subset_of(*b) || b.is_subset_of(*a)));
        ensure(
            singletons
                && nested
                && is_solution(&m_poss, &poss, AggregationRule::Floor)
                && is_solution(&m_nec, &nec, AggregationRule::Floor)
                && m_nec == ordinal_mobius_interval(&nec).lower,
            || show_pi(ctx, pi),
        )
    })
    .report("focal-structure")
}

fn law_mobius_nonlinear(_: &Context) -> LawReport {
    let scale = Levels::new(1).expect("two-level scale");
    let one = scale.one();
    let full = Coalition::full(2);
    let g1 = SetFunction::from_fn(2, |a| if a == full { one } else { ScaleValue::zero() });
    let g2 = SetFunction::from_fn(2, |a| if a.is_empty() { ScaleValue::zero() } else { one });
    let lower = |g: &SetFunction<Level>| canonical_ordinal_mobius(g, AggregationRule::Floor).expect("floor rule");
    let joined = g1.pointwise_sym_max(&g2);
    let transformed = lower(&g1).pointwise_sym_max(&lower(&g2));
    let holds = joined == g2 && transformed != lower(&g2);
    LawReport {
        law: "mobius-nonlinear",
        status: if holds { Status::Pass } else { Status::Fail },
        checked: 1,
        detail: format!(
            "g1 ⊚∨ g2 = g2 but m(g1) ⊚∨ m(g2) = [{}] differs from m(g2) = [{}]",
            show_table(&scale, &transformed),
            show_table(&scale, &lower(&g2))
        ),
    }
}

fn law_sugeno_mobius(ctx: &Context) -> LawReport {
    ctx.per_capacity(|i, v, profiles| {
        let interval = ordinal_mobius_interval(v);
        let reps = ctx.representatives(i, &interval);
        let mut out = Outcome::default();
        for f in profiles {
            for g in [f.positive_part(), f.negative_part()] {
                let expected = sugeno(v, &g).expect("nonnegative profile");
                out = out.merge(check_all(&reps, |m| {
                    ensure(sugeno_mobius(m, &g) == Ok(expected), || {
                        format!(
                            "v: {}; m: {}; {}",
                            ctx.show_capacity(v),
                            show_table(&ctx.scale, m),
                            ctx.show_profile(&g)
                        )
                    })
                }));
                if out.failure.is_some() {
                    return out;
                }
            }
        }
        out
    })
    .report("sugeno-mobius")
}

fn law_symmetric_equivalence(ctx: &Context) -> LawReport {
    ctx.per_capacity(|i, v, profiles| {
        let interval = ordinal_mobius_interval(v);
        let reps = ctx.representatives(i, &interval);
        let mut out = Outcome::default();
        for f in profiles {
            let value = sugeno_symmetric(v, f).expect("dimensions");
            let explicit = sugeno_symmetric_explicit(v, f).expect("dimensions");
            let describe = || format!("v: {}; {}", ctx.show_capacity(v), ctx.show_profile(f));
            out = out.merge(Outcome::from_check(ensure(explicit == value, describe).map(|_| 1)));
            out = out.merge(check_all(&reps, |m| {
                let blocks = sugeno_symmetric_mobius(m, f).expect("dimensions");
                ensure(blocks.total == value && blocks.mixed.is_zero(), || {
                    format!("{}; m: {}", describe(), show_table(&ctx.scale, m))
                })
            }));
            if out.failure.is_some() {
                break;
            }
        }
        out
    })
    .report("symmetric-equivalence")
}

fn law_symmetry(ctx: &Context) -> LawReport {
    ctx.per_instance(|v, f| {
        let lower = ordinal_mobius_interval(v).lower;
        let g = f.reflect();
        let checks = [
            ("symmetric", sugeno_symmetric(v, f), sugeno_symmetric(v, &g)),
            ("variant 1", sugeno_variant1(&lower, f), sugeno_variant1(&lower, &g)),
            ("variant 2", sugeno_variant2(v, f), sugeno_variant2(v, &g)),
            ("variant 3", sugeno_variant3(v, f), sugeno_variant3(v, &g)),
        ];
        for (name, at_f, at_g) in checks {
            let (at_f, at_g) = (at_f.expect("dimensions"), at_g.expect("dimensions"));
            if at_g != -at_f {
                return Err(format!(
                    "{name}: v: {}; {}; V(f)={} V(-f)={}",
                    ctx.show_capacity(v),
                    ctx.show_profile(f),
                    ctx.show(&at_f),
                    ctx.show(&at_g)
                ));
            }
        }
        Ok(4)
    })
    .report("symmetry")
}

/// Profiles above `f` to compare against: the covers when exhaustive, a few
/// random raises otherwise.
fn raised(ctx: &Context, f: &Profile<Level>, salt: u64) -> Vec<Profile<Level>> {
    if ctx.exhaustive() {
        covers(f, &ctx.alphabet)
    } else {
        let mut rng = seeded_rng(ctx.seed ^ salt.wrapping_mul(0xA076_1D64_78BD_642F));
        (0..4).map(|_| random_raise(f, &ctx.alphabet, &mut rng)).collect()
    }
}

type SugenoFn = fn(&Capacity<Levels>, &Profile<Level>) -> Result<ScaleValue<Level>, crate::integrals::IntegralError>;

/// First pair `f ≤ f'` with `V(f) > V(f')`.
fn monotonicity_violation(ctx: &Context, integral: SugenoFn) -> Outcome {
    ctx.per_capacity(|i, v, profiles| {
        let mut out = Outcome::default();
        for (j, f) in profiles.iter().enumerate() {
            let at_f = integral(v, f).expect("dimensions");
            out = out.merge(check_all(raised(ctx, f, (i * profiles.len() + j) as u64), |g| {
                let at_g = integral(v, g).expect("dimensions");
                ensure(at_f <= at_g, || {
                    format!(
                        "v: {}; {} ≤ {} but {} > {}",
                        ctx.show_capacity(v),
                        ctx.show_profile(f),
                        ctx.show_profile(g),
                        ctx.show(&at_f),
                        ctx.show(&at_g)
                    )
                })
            }));
            if out.failure.is_some() {
                break;
            }
        }
        out
    })
}

fn law_monotone(ctx: &Context) -> LawReport {
    monotonicity_violation(ctx, sugeno_symmetric).report("monotone")
}

fn law_s3_monotone(ctx: &Context) -> LawReport {
    monotonicity_violation(ctx, sugeno_variant3).report("s3-monotone")
}

fn level(x: i32) -> ScaleValue<Level> {
    ScaleValue::with_sign(x < 0, Level(x.unsigned_abs()))
}

/// A three-player capacity on `{0, …, 3}` with `v({1}) = 0`, `v(N) = 3` and
/// `v(A) = high` elsewhere.
fn lopsided_capacity(high: i32) -> Capacity<Levels> {
    let scale = Levels::new(3).expect("four levels");
    let table = (0..8)
        .map(|mask| match mask {
            0 | 1 => level(0),
            7 => level(3),
            _ => level(high),
        })
        .collect();
    Capacity::from_table(scale, 3, table).expect("valid capacity")
}

/// A pinned capacity and tie-free profiles `f ≤ f'` with `Š²(f) > Š²(f')`.
pub fn s2_witness() -> (Capacity<Levels>, Profile<Level>, Profile<Level>) {
    let f = Profile::new(vec![level(-3), level(-2), level(2)]);
    let g = Profile::new(vec![level(-1), level(-2), level(2)]);
    (lopsided_capacity(2), f, g)
}

/// A pinned capacity and tie-free profiles `f ≤ f'` with `Š³(f) > Š³(f')`.
/// Raising the first score reorders the players, and the lowest-ranked one
/// now meets a larger capacity value.
pub fn s3_witness() -> (Capacity<Levels>, Profile<Level>, Profile<Level>) {
    let f = Profile::new(vec![level(-3), level(-2), level(1)]);
    let g = Profile::new(vec![level(-1), level(-2), level(1)]);
    (lopsided_capacity(1), f, g)
}

fn law_s2_monotonic(ctx: &Context) -> LawReport {
    let (v, f, g) = s2_witness();
    let pinned = sugeno_variant2(&v, &f).expect("dimensions") > sugeno_variant2(&v, &g).expect("dimensions")
        && f.values().iter().zip(g.values()).all(|(a, b)| a <= b);
    let scale = v.scale().clone();
    let pinned_text = format!(
        "pinned: v: {}; {} ≤ {} but {} > {}",
        show_table(&scale, &v.to_set_function()),
        show_profile(&scale, &f),
        show_profile(&scale, &g),
        scale.format_value(&sugeno_variant2(&v, &f).expect("dimensions")),
        scale.format_value(&sugeno_variant2(&v, &g).expect("dimensions")),
    );
    let search = monotonicity_violation(ctx, sugeno_variant2);
    let found = match &search.failure {
        Some(w) => format!("found in this run: {w}"),
        None => "no violation in this run's instances".to_string(),
    };
    LawReport {
        law: "s2-monotonic",
        status: if pinned { Status::ExpectedFail } else { Status::Fail },
        checked: search.checked + 1,
        detail: format!("{pinned_text}; {found}"),
    }
}

fn law_choquet_reference(ctx: &Context) -> LawReport {
    ctx.unit_capacities
        .par_iter()
        .enumerate()
        .map(|(i, v)| {
            let real = v.to_real();
            let conj = real.conjugate();
            let m = classical_mobius(&real);
            check_all(ctx.unit_profiles.for_capacity(i), |f| {
                let x = f.to_real();
                let neg: Vec<_> = x.iter().map(|q| -q).collect();
                let plus = f.positive_part().to_real();
                let sym = choquet_symmetric(&real, &x).expect("dimensions");
                let ok = choquet_mobius(&m, &plus) == choquet(&real, &plus)
                    && sipos_mobius(&m, &x).as_ref() == Ok(&sym)
                    && choquet_symmetric_explicit(&real, &x).as_ref() == Ok(&sym)
                    && choquet_asymmetric(&real, &neg).map(|q| -q) == choquet_asymmetric(&conj, &x)
                    && choquet_symmetric(&real, &neg).map(|q| -q).as_ref() == Ok(&sym);
                ensure(ok, || {
                    format!(
                        "v: {}; {}",
                        show_table(&ctx.unit, &v.to_set_function()),
                        show_profile(&ctx.unit, f)
                    )
                })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Outcome::default(), Outcome::merge)
        .report("choquet-reference")
}

/// The worked instance: a three-player capacity on `[0, 1]` and the profile
/// `(-1, 0.3, 1)`.
pub fn worked_instance() -> (Capacity<Unit>, Profile<Rational>) {
    let scale = Unit::new();
    let entries = [
        ("{1}", "0.3"),
        ("{2}", "0.25"),
        ("{3}", "0.2"),
        ("{1,2}", "0.4"),
        ("{1,3}", "0.3"),
        ("{2,3}", "0.6"),
        ("{}", "0"),
        ("{1,2,3}", "1"),
    ];
    let v = Capacity::from_entries(
        scale.clone(),
        3,
        entries
            .iter()
            .map(|(a, x)| (a.parse().expect("subset"), scale.parse_value(x).expect("value"))),
    )
    .expect("valid capacity");
    let f = Profile::new(["-1", "0.3", "1"].iter().map(|x| scale.parse_value(x).expect("value")).collect());
    (v, f)
}

fn law_distinct_variants(_: &Context) -> LawReport {
    let (v, f) = worked_instance();
    let scale = v.scale().clone();
    let lower = ordinal_mobius_interval(&v).lower;
    let s = sugeno_symmetric(&v, &f).expect("dimensions");
    let s1 = sugeno_variant1(&lower, &f).expect("dimensions");
    let s2 = sugeno_variant2(&v, &f).expect("dimensions");
    let s3 = sugeno_variant3(&v, &f).expect("dimensions");
    let show = |x: &ScaleValue<Rational>| scale.format_value(x);
    let expected = |x: &ScaleValue<Rational>, text: &str| *x == scale.parse_value(text).expect("value");
    let holds = expected(&s, "0") && expected(&s1, "0.25") && expected(&s2, "0.2") && expected(&s3, "0.2");
    LawReport {
        law: "distinct-variants",
        status: if holds && s != s1 && s1 != s2 && s != s2 { Status::Pass } else { Status::Fail },
        checked: 4,
        detail: format!("symmetric={} v1={} v2={} v3={}", show(&s), show(&s1), show(&s2), show(&s3)),
    }
}

fn law_variant1_representative(ctx: &Context) -> LawReport {
    let outcome = ctx.per_capacity(|i, v, profiles| {
        let interval = ordinal_mobius_interval(v);
        let reps = ctx.representatives(i, &interval);
        check_all(profiles, |f| {
            let base = sugeno_variant1(&interval.lower, f).expect("dimensions");
            match reps.iter().find(|m| sugeno_variant1(m, f).expect("dimensions") != base) {
                None => Ok(()),
                Some(m) => Err(format!(
                    "v: {}; {}; lower gives {} but m: {} gives {}",
                    ctx.show_capacity(v),
                    ctx.show_profile(f),
                    ctx.show(&base),
                    show_table(&ctx.scale, m),
                    ctx.show(&sugeno_variant1(m, f).expect("dimensions"))
                )),
            }
        })
    });
    LawReport {
        law: "variant1-representative",
        status: Status::Info,
        checked: outcome.checked,
        detail: match outcome.failure {
            None => "independent of the representative on every instance checked".to_string(),
            Some(w) => format!("depends on the representative: {w}"),
        },
    }
}
