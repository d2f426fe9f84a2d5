//! Instance generators for exhaustive and randomized checks.
//!
//! Everything here is grid-valued: capacities and Möbius candidates take
//! their magnitudes from [`Scale::grid`], profiles from a caller-supplied
//! alphabet of signed values.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::capacity::Capacity;
use crate::coalition::Coalition;
use crate::integrals::Profile;
use crate::mobius::{MobiusInterval, SetFunction};
use crate::scale::{Magnitude, Scale, ScaleValue};

/// Deterministic generator for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn grid_position<M: Magnitude>(grid: &[M], m: M) -> usize {
    grid.binary_search(&m).expect("value on the grid")
}

/// Every grid-valued capacity on `n` players.
pub fn all_capacities<S: Scale>(scale: &S, n: usize) -> Vec<Capacity<S>> {
    let grid = scale.grid();
    let top = grid.len() - 1;
    let size = 1usize << n;
    let mut out = Vec::new();
    let mut table = vec![0usize; size];
    table[size - 1] = top;

    fn descend<S: Scale>(
        mask: usize,
        n: usize,
        table: &mut Vec<usize>,
        grid: &[S::Mag],
        scale: &S,
        out: &mut Vec<Capacity<S>>,
    ) {
        let size = table.len();
        if mask + 1 >= size {
            let values = table.iter().map(|&i| grid[i]).collect();
            out.push(Capacity::from_magnitudes_unchecked(scale.clone(), n, values));
            return;
        }
        let a = Coalition::from_bits(mask as u32);
        let lo = a.players().map(|i| table[a.without(i).index()]).max().unwrap_or(0);
        for level in lo..grid.len() {
            table[mask] = level;
            descend(mask + 1, n, table, grid, scale, out);
        }
    }

    if n == 0 {
        // N = ∅ must be both 𝟘 and 𝟙, which no scale allows.
        return out;
    }
    descend(1, n, &mut table, &grid, scale, &mut out);
    out
}

/// A random grid-valued capacity. Values are drawn upward from the largest
/// value already assigned to a one-smaller subset, skewed low so that ties
/// (and therefore slack in the Möbius interval) are common.
pub fn random_capacity<S: Scale, R: Rng + ?Sized>(scale: &S, n: usize, rng: &mut R) -> Capacity<S> {
    assert!(n >= 1);
    let grid = scale.grid();
    let top = grid.len() - 1;
    let size = 1usize << n;
    let mut table = vec![0usize; size];
    for mask in 1..size - 1 {
        let a = Coalition::from_bits(mask as u32);
        let lo = a.players().map(|i| table[a.without(i).index()]).max().unwrap_or(0);
        let first = rng.gen_range(lo..=top);
        table[mask] = if rng.gen_bool(0.5) {
            first.min(rng.gen_range(lo..=top))
        } else {
            first
        };
    }
    table[size - 1] = top;
    let values = table.iter().map(|&i| grid[i]).collect();
    Capacity::from_magnitudes_unchecked(scale.clone(), n, values)
}

/// Every profile of length `n` over `alphabet`.
pub fn all_profiles<M: Magnitude>(alphabet: &[ScaleValue<M>], n: usize) -> Vec<Profile<M>> {
    let mut out: Vec<Vec<ScaleValue<M>>> = vec![Vec::with_capacity(n)];
    for _ in 0..n {
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
    out.into_iter().map(Profile::new).collect()
}

pub fn random_profile<M: Magnitude, R: Rng + ?Sized>(alphabet: &[ScaleValue<M>], n: usize, rng: &mut R) -> Profile<M> {
    Profile::new((0..n).map(|_| *alphabet.choose(rng).expect("nonempty alphabet")).collect())
}

/// Profiles obtained by raising one score of `f` to the next value of the
/// ascending `alphabet`. Monotonicity over these covers implies monotonicity
/// over every pointwise-ordered pair.
pub fn covers<M: Magnitude>(f: &Profile<M>, alphabet: &[ScaleValue<M>]) -> Vec<Profile<M>> {
    (0..f.n())
        .filter_map(|i| {
            let pos = alphabet.iter().position(|&a| a == f.get(i))?;
            let next = *alphabet.get(pos + 1)?;
            let mut values = f.values().to_vec();
            values[i] = next;
            Some(Profile::new(values))
        })
        .collect()
}

/// A random profile pointwise above `f`.
pub fn random_raise<M: Magnitude, R: Rng + ?Sized>(f: &Profile<M>, alphabet: &[ScaleValue<M>], rng: &mut R) -> Profile<M> {
    let values = f
        .values()
        .iter()
        .map(|&x| {
            let pos = alphabet.iter().position(|&a| a == x).expect("value in alphabet");
            if rng.gen_bool(0.5) {
                alphabet[rng.gen_range(pos..alphabet.len())]
            } else {
                x
            }
        })
        .collect();
    Profile::new(values)
}

/// Grid values allowed at `a` by the interval.
fn interval_choices<S: Scale>(scale: &S, interval: &MobiusInterval<S::Mag>, a: Coalition) -> Vec<ScaleValue<S::Mag>> {
    let (lo, hi) = (interval.lower.get(a), interval.upper.get(a));
    let mut choices: Vec<_> = scale
        .grid()
        .into_iter()
        .map(ScaleValue::positive)
        .filter(|&m| lo <= m && m <= hi)
        .collect();
    // Interval ends need not lie on a dense grid.
    for end in [lo, hi] {
        if !choices.contains(&end) {
            choices.push(end);
        }
    }
    choices.sort();
    choices
}

/// Number of grid-valued functions inside the interval.
pub fn interval_grid_size<S: Scale>(scale: &S, interval: &MobiusInterval<S::Mag>) -> u64 {
    Coalition::all(interval.lower.n())
        .map(|a| interval_choices(scale, interval, a).len() as u64)
        .product()
}

/// Every grid-valued function inside the interval.
pub fn all_in_interval<S: Scale>(scale: &S, interval: &MobiusInterval<S::Mag>) -> Vec<SetFunction<S::Mag>> {
    let n = interval.lower.n();
    let choices: Vec<_> = Coalition::all(n).map(|a| interval_choices(scale, interval, a)).collect();
    let mut out = vec![interval.lower.clone()];
    for (idx, options) in choices.iter().enumerate() {
        let a = Coalition::from_bits(idx as u32);
        out = out
            .into_iter()
            .flat_map(|m| {
                options.iter().map(move |&value| {
                    let mut next = m.clone();
                    next.set(a, value);
                    next
                })
            })
            .collect();
    }
    out
}

/// A random grid-valued function inside the interval.
pub fn random_in_interval<S: Scale, R: Rng + ?Sized>(
    scale: &S,
    interval: &MobiusInterval<S::Mag>,
    rng: &mut R,
) -> SetFunction<S::Mag> {
    SetFunction::from_fn(interval.lower.n(), |a| {
        *interval_choices(scale, interval, a).choose(rng).expect("nonempty")
    })
}

/// Every nonnegative function `m` with values in `candidates` that solves
/// `v(A) = ⋁_{B⊆A} m(B)` for all `A`, found by depth-first search in mask
/// order with pruning at each coalition.
pub fn all_nonnegative_solutions<S: Scale>(
    v: &Capacity<S>,
    candidates: &[S::Mag],
) -> Vec<SetFunction<S::Mag>> {
    let mut out = Vec::new();
    visit_nonnegative_solutions(v, candidates, |m| {
        out.push(m.clone());
        true
    });
    out
}

/// Calls `visit` on each solution found by the same search as
/// [`all_nonnegative_solutions`] until it returns `false`. Returns whether
/// the search ran to completion.
pub fn visit_nonnegative_solutions<S, F>(v: &Capacity<S>, candidates: &[S::Mag], mut visit: F) -> bool
where
    S: Scale,
    F: FnMut(&SetFunction<S::Mag>) -> bool,
{
    fn descend<S: Scale, F: FnMut(&SetFunction<S::Mag>) -> bool>(
        mask: usize,
        v: &Capacity<S>,
        candidates: &[S::Mag],
        current: &mut SetFunction<S::Mag>,
        visit: &mut F,
    ) -> bool {
        if mask == 1 << v.n() {
            return visit(current);
        }
        let a = Coalition::from_bits(mask as u32);
        let below = a
            .subsets()
            .filter(|&b| b != a)
            .map(|b| current.get(b).magnitude())
            .max()
            .unwrap_or_else(S::Mag::bottom);
        for &c in candidates {
            if below.max(c) == v.magnitude(a) {
                current.set(a, ScaleValue::positive(c));
                if !descend(mask + 1, v, candidates, current, visit) {
                    return false;
                }
            }
        }
        true
    }

    let mut current = SetFunction::zero(v.n());
    descend(0, v, candidates, &mut current, &mut visit)
}

/// The candidate grid for solution search: the values of `v` plus `𝟘`, `𝟙`.
pub fn solution_candidates<S: Scale>(v: &Capacity<S>) -> Vec<S::Mag> {
    let mut values: Vec<S::Mag> = v.magnitudes().to_vec();
    values.push(S::Mag::bottom());
    values.push(v.scale().top());
    values.sort();
    values.dedup();
    values
}

#[doc(hidden)]
pub fn grid_index<M: Magnitude>(grid: &[M], m: M) -> usize {
    grid_position(grid, m)
}
