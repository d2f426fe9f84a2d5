//! Capacities (fuzzy measures) valued on the positive half of a scale.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::mobius::{ordinal_mobius_interval, RealSetFunction, SetFunction};
use crate::scale::{Magnitude, Scale, ScaleValue, Unit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CapacityError {
    #[error("at most {MAX_PLAYERS} players are supported, got {0}")]
    TooManyPlayers(usize),
    #[error("expected {expected} table entries, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("no value given for {0}")]
    Missing(Coalition),
    #[error("more than one value given for {0}")]
    Duplicate(Coalition),
    #[error("{0} contains a player outside the ground set")]
    OutsideGround(Coalition),
    #[error("value at {0} is not in the nonnegative part of the scale")]
    NotInScale(Coalition),
    #[error("value at {{}} must be the bottom of the scale")]
    EmptySetNotBottom,
    #[error("value at the ground set must be the top of the scale")]
    GroundSetNotTop,
    #[error("monotonicity violated on edge ({smaller}, {larger})")]
    NotMonotone { smaller: Coalition, larger: Coalition },
    #[error("possibility distribution does not reach the top of the scale")]
    NotNormalized,
}

/// Every violated constraint found while validating a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationErrors(pub Vec<CapacityError>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationErrors {}

impl From<CapacityError> for ValidationErrors {
    fn from(e: CapacityError) -> Self {
        ValidationErrors(vec![e])
    }
}

/// A monotone set function `2ᴺ → L⁺` with `v(∅) = 𝟘` and `v(N) = 𝟙`.
#[derive(Clone, Debug, PartialEq)]
pub struct Capacity<S: Scale> {
    scale: S,
    n: usize,
    values: Vec<S::Mag>,
}

impl<S: Scale> Capacity<S> {
    /// Validates a dense table indexed by coalition mask.
    pub fn from_table(
        scale: S,
        n: usize,
        table: Vec<ScaleValue<S::Mag>>,
    ) -> Result<Self, ValidationErrors> {
        if n > MAX_PLAYERS {
            return Err(CapacityError::TooManyPlayers(n).into());
        }
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(CapacityError::WrongLength {
                expected,
                got: table.len(),
            }
            .into());
        }
        let mut errors = Vec::new();
        for (i, value) in table.iter().enumerate() {
            if value.is_negative() || !scale.contains_value(value) {
                errors.push(CapacityError::NotInScale(Coalition::from_bits(i as u32)));
            }
        }
        if !errors.is_empty() {
            return Err(ValidationErrors(errors));
        }
        let values: Vec<S::Mag> = table.iter().map(|v| v.magnitude()).collect();
        if !values[0].is_bottom() {
            errors.push(CapacityError::EmptySetNotBottom);
        }
        if values[expected - 1] != scale.top() {
            errors.push(CapacityError::GroundSetNotTop);
        }
        for a in Coalition::all(n) {
            for i in (0..n).filter(|&i| !a.contains(i)) {
                let b = a.with(i);
                if values[a.index()] > values[b.index()] {
                    errors.push(CapacityError::NotMonotone {
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }
        if errors.is_empty() {
            Ok(Capacity { scale, n, values })
        } else {
            Err(ValidationErrors(errors))
        }
    }

    /// Validates a sparse list of `(coalition, value)` entries that must cover
    /// every subset exactly once.
    pub fn from_entries<I>(scale: S, n: usize, entries: I) -> Result<Self, ValidationErrors>
    where
        I: IntoIterator<Item = (Coalition, ScaleValue<S::Mag>)>,
    {
        if n > MAX_PLAYERS {
            return Err(CapacityError::TooManyPlayers(n).into());
        }
        let full = Coalition::full(n);
        let mut table: Vec<Option<ScaleValue<S::Mag>>> = vec![None; 1 << n];
        let mut errors = Vec::new();
        for (coalition, value) in entries {
            if !coalition.is_subset_of(full) {
                errors.push(CapacityError::OutsideGround(coalition));
            } else if table[coalition.index()].replace(value).is_some() {
                errors.push(CapacityError::Duplicate(coalition));
            }
        }
        for a in Coalition::all(n) {
            if table[a.index()].is_none() {
                errors.push(CapacityError::Missing(a));
            }
        }
        if !errors.is_empty() {
            return Err(ValidationErrors(errors));
        }
        Self::from_table(scale, n, table.into_iter().map(Option::unwrap).collect())
    }

    pub(crate) fn from_magnitudes_unchecked(scale: S, n: usize, values: Vec<S::Mag>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        Capacity { scale, n, values }
    }

    /// The unanimity game `u_B`: `𝟙` on nonempty supersets of `B`, else `𝟘`.
    ///
    /// `u_∅` is `𝟘` at `∅` and `𝟙` everywhere else.
    pub fn unanimity(scale: S, n: usize, b: Coalition) -> Self {
        assert!(b.is_subset_of(Coalition::full(n)), "{b} is not a subset of N");
        let values = Coalition::all(n)
            .map(|a| {
                if b.is_subset_of(a) && !a.is_empty() {
                    scale.top()
                } else {
                    S::Mag::bottom()
                }
            })
            .collect();
        Capacity { scale, n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> &S {
        &self.scale
    }

    pub fn magnitude(&self, a: Coalition) -> S::Mag {
        self.values[a.index()]
    }

    pub fn value(&self, a: Coalition) -> ScaleValue<S::Mag> {
        ScaleValue::positive(self.values[a.index()])
    }

    pub fn magnitudes(&self) -> &[S::Mag] {
        &self.values
    }

    pub fn to_set_function(&self) -> SetFunction<S::Mag> {
        SetFunction::from_fn(self.n, |a| self.value(a))
    }

    /// `v̄(A) = n(v(Aᶜ))`.
    pub fn conjugate(&self) -> Self {
        let values = Coalition::all(self.n)
            .map(|a| self.scale.negate(self.magnitude(a.complement(self.n))))
            .collect();
        Capacity {
            scale: self.scale.clone(),
            n: self.n,
            values,
        }
    }

    /// `v(A ∪ B) = v(A) ∨ v(B)` for every pair of coalitions.
    pub fn is_maxitive(&self) -> bool {
        Coalition::all(self.n).all(|a| {
            Coalition::all(self.n)
                .all(|b| self.magnitude(a.union(b)) == self.magnitude(a).max(self.magnitude(b)))
        })
    }

    /// The lower ordinal Möbius transform vanishes on every coalition with
    /// more than `k` members.
    pub fn is_k_maxitive(&self, k: usize) -> bool {
        let interval = ordinal_mobius_interval(self);
        Coalition::all(self.n)
            .filter(|a| a.len() > k)
            .all(|a| interval.lower.get(a).is_zero())
    }
}

impl Capacity<Unit> {
    /// The same capacity as an exact real-valued set function.
    pub fn to_real(&self) -> RealSetFunction {
        RealSetFunction::from_fn(self.n, |a| {
            let q = self.magnitude(a);
            BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
        })
    }
}

/// A normalized possibility distribution `π: N → L⁺`.
#[derive(Clone, Debug, PartialEq)]
pub struct PossibilityDistribution<S: Scale> {
    scale: S,
    values: Vec<S::Mag>,
}

impl<S: Scale> PossibilityDistribution<S> {
    pub fn new(scale: S, values: Vec<ScaleValue<S::Mag>>) -> Result<Self, CapacityError> {
        if values.len() > MAX_PLAYERS {
            return Err(CapacityError::TooManyPlayers(values.len()));
        }
        for (i, v) in values.iter().enumerate() {
            if v.is_negative() || !scale.contains_value(v) {
                return Err(CapacityError::NotInScale(Coalition::singleton(i)));
            }
        }
        let values: Vec<S::Mag> = values.iter().map(|v| v.magnitude()).collect();
        if values.iter().max() != Some(&scale.top()) {
            return Err(CapacityError::NotNormalized);
        }
        Ok(PossibilityDistribution { scale, values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn scale(&self) -> &S {
        &self.scale
    }

    /// `π(i)` for the 0-based player `index`.
    pub fn get(&self, index: usize) -> S::Mag {
        self.values[index]
    }

    /// `Π(A) = ⋁_{i ∈ A} π(i)`.
    pub fn possibility(&self) -> Capacity<S> {
        let values = Coalition::all(self.n())
            .map(|a| {
                a.players()
                    .map(|i| self.values[i])
                    .max()
                    .unwrap_or_else(S::Mag::bottom)
            })
            .collect();
        Capacity::from_magnitudes_unchecked(self.scale.clone(), self.n(), values)
    }

    /// The necessity measure, conjugate of [`Self::possibility`].
    pub fn necessity(&self) -> Capacity<S> {
        self.possibility().conjugate()
    }
}
