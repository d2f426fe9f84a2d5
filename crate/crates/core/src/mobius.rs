//! Möbius transforms on the Boolean lattice `2ᴺ`.
//!
//! The classical transform inverts `v(A) = Σ_{B⊆A} m(B)` over exact
//! rationals. The ordinal transform inverts `v(A) = ⊚∨_{B⊆A} m(B)` on a
//! symmetric scale; for a capacity its nonnegative solutions form the
//! interval `[m_*, m^*]` with `m^* = v` and
//!
//! ```text
//! m_*(A) = v(A)  if v(A) > v(A \ {i}) for every i ∈ A,
//!          𝟘     otherwise.
//! ```

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::capacity::{Capacity, PossibilityDistribution};
use crate::coalition::Coalition;
use crate::rules::{fold_sym_max, AggregationRule};
use crate::scale::{sym_max, Magnitude, Scale, ScaleValue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MobiusError {
    #[error("set function has {got} entries, expected 2^{n}")]
    WrongLength { n: usize, got: usize },
    #[error("the canonical ordinal Möbius transform is only defined under the floor and angle rules")]
    UnsupportedRule(AggregationRule),
}

/// A set function on `2ᴺ` valued on the whole symmetric scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFunction<M> {
    n: usize,
    values: Vec<ScaleValue<M>>,
}

impl<M: Magnitude> SetFunction<M> {
    pub fn new(n: usize, values: Vec<ScaleValue<M>>) -> Result<Self, MobiusError> {
        if values.len() != 1 << n {
            return Err(MobiusError::WrongLength {
                n,
                got: values.len(),
            });
        }
        Ok(SetFunction { n, values })
    }

    pub fn from_fn<F: FnMut(Coalition) -> ScaleValue<M>>(n: usize, f: F) -> Self {
        SetFunction {
            n,
            values: Coalition::all(n).map(f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| ScaleValue::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Coalition) -> ScaleValue<M> {
        self.values[a.index()]
    }

    pub fn set(&mut self, a: Coalition, value: ScaleValue<M>) {
        self.values[a.index()] = value;
    }

    pub fn values(&self) -> &[ScaleValue<M>] {
        &self.values
    }

    /// Coalitions where the function is nonzero.
    pub fn support(&self) -> Vec<Coalition> {
        Coalition::all(self.n).filter(|&a| !self.get(a).is_zero()).collect()
    }

    /// Pointwise `⊚∨` of two set functions.
    pub fn pointwise_sym_max(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |a| sym_max(self.get(a), other.get(a)))
    }
}

/// A set function with exact rational values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealSetFunction {
    n: usize,
    values: Vec<BigRational>,
}

impl RealSetFunction {
    pub fn new(n: usize, values: Vec<BigRational>) -> Result<Self, MobiusError> {
        if values.len() != 1 << n {
            return Err(MobiusError::WrongLength {
                n,
                got: values.len(),
            });
        }
        Ok(RealSetFunction { n, values })
    }

    pub fn from_fn<F: FnMut(Coalition) -> BigRational>(n: usize, f: F) -> Self {
        RealSetFunction {
            n,
            values: Coalition::all(n).map(f).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Coalition) -> &BigRational {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `v̄(A) = 1 - v(Aᶜ)`.
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.n, |a| {
            BigRational::one() - self.get(a.complement(self.n))
        })
    }
}

/// `m(A) = Σ_{B⊆A} (-1)^{|A∖B|} v(B)`, computed in `O(n 2ⁿ)`.
pub fn classical_mobius(v: &RealSetFunction) -> RealSetFunction {
    let mut values = v.values.clone();
    for i in 0..v.n {
        let bit = 1usize << i;
        for mask in 0..values.len() {
            if mask & bit != 0 {
                let lower = values[mask ^ bit].clone();
                values[mask] -= lower;
            }
        }
    }
    RealSetFunction { n: v.n, values }
}

/// `v(A) = Σ_{B⊆A} m(B)`, the inverse of [`classical_mobius`].
pub fn classical_zeta(m: &RealSetFunction) -> RealSetFunction {
    let mut values = m.values.clone();
    for i in 0..m.n {
        let bit = 1usize << i;
        for mask in 0..values.len() {
            if mask & bit != 0 {
                let lower = values[mask ^ bit].clone();
                values[mask] += lower;
            }
        }
    }
    RealSetFunction { n: m.n, values }
}

/// Bounds of all nonnegative ordinal Möbius solutions of a capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusInterval<M> {
    pub lower: SetFunction<M>,
    pub upper: SetFunction<M>,
}

impl<M: Magnitude> MobiusInterval<M> {
    pub fn contains(&self, m: &SetFunction<M>) -> bool {
        m.n == self.lower.n
            && Coalition::all(m.n)
                .all(|a| self.lower.get(a) <= m.get(a) && m.get(a) <= self.upper.get(a))
    }

    pub fn representative(&self, which: MobiusRepresentative) -> &SetFunction<M> {
        match which {
            MobiusRepresentative::Lower => &self.lower,
            MobiusRepresentative::Upper => &self.upper,
        }
    }

    /// Coalitions where the two bounds differ.
    pub fn slack(&self) -> Vec<Coalition> {
        Coalition::all(self.lower.n)
            .filter(|&a| self.lower.get(a) != self.upper.get(a))
            .collect()
    }
}

/// Which end of the Möbius interval stands for `[m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MobiusRepresentative {
    #[default]
    Lower,
    Upper,
}

impl fmt::Display for MobiusRepresentative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MobiusRepresentative::Lower => "lower",
            MobiusRepresentative::Upper => "upper",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown Möbius representative `{0}` (expected lower or upper)")]
pub struct ParseRepresentativeError(String);

impl FromStr for MobiusRepresentative {
    type Err = ParseRepresentativeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lower" => Ok(MobiusRepresentative::Lower),
            "upper" => Ok(MobiusRepresentative::Upper),
            _ => Err(ParseRepresentativeError(s.to_string())),
        }
    }
}

pub fn ordinal_mobius_interval<S: Scale>(v: &Capacity<S>) -> MobiusInterval<S::Mag> {
    let lower = SetFunction::from_fn(v.n(), |a| {
        let strict = !a.is_empty()
            && a
                .players()
                .all(|i| v.magnitude(a) > v.magnitude(a.without(i)));
        if strict {
            v.value(a)
        } else {
            ScaleValue::zero()
        }
    });
    MobiusInterval {
        lower,
        upper: v.to_set_function(),
    }
}

/// `m(A) = g(A) ⊚∨ [-⊚∨_{B ≺ A} g(B)]`, where `B ≺ A` ranges over the
/// coalitions obtained by removing one player from `A` and the inner fold uses
/// `rule`.
pub fn canonical_ordinal_mobius<M: Magnitude>(
    g: &SetFunction<M>,
    rule: AggregationRule,
) -> Result<SetFunction<M>, MobiusError> {
    if rule == AggregationRule::Ceil {
        return Err(MobiusError::UnsupportedRule(rule));
    }
    let mut predecessors = Vec::with_capacity(g.n);
    Ok(SetFunction::from_fn(g.n, |a| {
        predecessors.clear();
        predecessors.extend(a.players().map(|i| g.get(a.without(i))));
        sym_max(g.get(a), -fold_sym_max(&predecessors, rule))
    }))
}

/// `m(A) = [⋁_{|A∖B| even} v(B)] ⊚∨ (-[⋁_{|A∖B| odd} v(B)])` over `B ⊆ A`.
pub fn even_odd_mobius<S: Scale>(v: &Capacity<S>) -> SetFunction<S::Mag> {
    SetFunction::from_fn(v.n(), |a| {
        let (mut even, mut odd) = (ScaleValue::zero(), ScaleValue::zero());
        for b in a.subsets() {
            let slot = if (a.len() - b.len()) % 2 == 0 {
                &mut even
            } else {
                &mut odd
            };
            *slot = (*slot).max(v.value(b));
        }
        sym_max(even, -odd)
    })
}

/// `⋁_{B ⊆ N} (m(B) ∧ u_B(A))` for a nonnegative `m`.
pub fn reconstruct<M: Magnitude>(m: &SetFunction<M>, a: Coalition) -> ScaleValue<M> {
    if a.is_empty() {
        return ScaleValue::zero();
    }
    a.subsets()
        .map(|b| m.get(b))
        .fold(ScaleValue::zero(), Ord::max)
}

/// Checks `v(A) = ⊚∨_{B⊆A} m(B)` for every `A`, folding under `rule`.
pub fn is_solution<S: Scale>(m: &SetFunction<S::Mag>, v: &Capacity<S>, rule: AggregationRule) -> bool {
    if m.n != v.n() {
        return false;
    }
    let mut terms = Vec::new();
    Coalition::all(v.n()).all(|a| {
        terms.clear();
        terms.extend(a.subsets().map(|b| m.get(b)));
        fold_sym_max(&terms, rule) == v.value(a)
    })
}

/// Closed-form Möbius transform of a possibility measure: `π` on singletons,
/// `𝟘` elsewhere.
pub fn mobius_possibility<S: Scale>(pi: &PossibilityDistribution<S>) -> SetFunction<S::Mag> {
    SetFunction::from_fn(pi.n(), |a| {
        if a.len() == 1 {
            ScaleValue::positive(pi.get(a.players().next().unwrap()))
        } else {
            ScaleValue::zero()
        }
    })
}

/// Closed-form Möbius transform of a necessity measure.
///
/// With players relabelled so that `π` ascends, the transform lives on the
/// tail sets `{i+1, …, n}` with value `n(π(i))`, and is `𝟘` on a tail whose
/// leading value ties with its predecessor. The full tail `N` uses `π(0) = 𝟘`,
/// giving `𝟙` unless the smallest possibility degree is itself `𝟘`.
pub fn mobius_necessity<S: Scale>(pi: &PossibilityDistribution<S>) -> SetFunction<S::Mag> {
    let n = pi.n();
    let scale = pi.scale();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| pi.get(i));
    let mut m = SetFunction::zero(n);
    for start in 0..n {
        let tail = Coalition::from_indices(order[start..].iter().copied());
        let previous = if start == 0 {
            S::Mag::bottom()
        } else {
            pi.get(order[start - 1])
        };
        if previous != pi.get(order[start]) {
            m.set(tail, ScaleValue::positive(scale.negate(previous)));
        }
    }
    m
}

/// `n(⋁_{B ∩ A = ∅} m_*^{v̄}(B))`, which recovers `v(A)`.
pub fn conjugate_reconstruct<S: Scale>(v: &Capacity<S>, a: Coalition) -> ScaleValue<S::Mag> {
    let lower = ordinal_mobius_interval(&v.conjugate()).lower;
    let joined = a
        .complement(v.n())
        .subsets()
        .map(|b| lower.get(b).magnitude())
        .max()
        .unwrap_or_else(S::Mag::bottom);
    ScaleValue::positive(v.scale().negate(joined))
}

impl RealSetFunction {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn classical_round_trip(n in 0usize..=4, seed in proptest::collection::vec((-50i64..=50, 1i64..=12), 16)) {
            let v = RealSetFunction::from_fn(n, |a| {
                let (p, q) = seed[a.index()];
                BigRational::new(BigInt::from(p), BigInt::from(q))
            });
            prop_assert_eq!(classical_zeta(&classical_mobius(&v)), v.clone());
            prop_assert_eq!(classical_mobius(&classical_zeta(&v)), v);
        }
    }
}
