//! Computation rules for folding the symmetric maximum over a multiset.
//!
//! `⊚∨` is associative on a multiset only when its maximum is not the
//! reflection of its minimum. When it is, the fold is made well defined by one
//! of three rules:
//!
//! * [`AggregationRule::Floor`] combines the nonnegative and the negative
//!   values separately, then takes `⊚∨` of the two results.
//! * [`AggregationRule::Ceil`] discards one maximal opposite pair at a time
//!   until the fold is unambiguous.
//! * [`AggregationRule::Angle`] does the same but also discards every
//!   duplicate of the maximal opposite values.

use std::fmt;
use std::str::FromStr;

use crate::scale::{sym_max, Magnitude, ScaleValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum AggregationRule {
    #[default]
    Floor,
    Ceil,
    Angle,
}

impl AggregationRule {
    pub const ALL: [AggregationRule; 3] = [
        AggregationRule::Floor,
        AggregationRule::Ceil,
        AggregationRule::Angle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AggregationRule::Floor => "floor",
            AggregationRule::Ceil => "ceil",
            AggregationRule::Angle => "angle",
        }
    }
}

impl fmt::Display for AggregationRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown computation rule `{0}` (expected floor, ceil or angle)")]
pub struct ParseRuleError(String);

impl FromStr for AggregationRule {
    type Err = ParseRuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "floor" => Ok(AggregationRule::Floor),
            "ceil" => Ok(AggregationRule::Ceil),
            "angle" => Ok(AggregationRule::Angle),
            _ => Err(ParseRuleError(s.to_string())),
        }
    }
}

/// True iff `max ≠ -min` over `values`; vacuously true for fewer than two
/// values.
pub fn is_fold_unambiguous<M: Magnitude>(values: &[ScaleValue<M>]) -> bool {
    if values.len() < 2 {
        return true;
    }
    let (min, max) = bounds(values);
    max != -min
}

/// Left-to-right fold of `⊚∨` starting from `𝟘`. Only meaningful when
/// [`is_fold_unambiguous`] holds.
pub fn fold_plain<M: Magnitude>(values: &[ScaleValue<M>]) -> ScaleValue<M> {
    values.iter().copied().fold(ScaleValue::zero(), sym_max)
}

/// Folds `⊚∨` over `values` using `rule` to settle non-associative cases.
///
/// The empty multiset folds to `𝟘`, as does any multiset of zeros.
pub fn fold_sym_max<M: Magnitude>(values: &[ScaleValue<M>], rule: AggregationRule) -> ScaleValue<M> {
    if values.iter().all(ScaleValue::is_zero) {
        return ScaleValue::zero();
    }
    match rule {
        AggregationRule::Floor => {
            let nonneg = values
                .iter()
                .copied()
                .filter(|v| !v.is_negative())
                .max()
                .unwrap_or_else(ScaleValue::zero);
            let neg = values
                .iter()
                .copied()
                .filter(ScaleValue::is_negative)
                .min()
                .unwrap_or_else(ScaleValue::zero);
            sym_max(nonneg, neg)
        }
        AggregationRule::Ceil => cancel_extremes(values.to_vec(), false),
        AggregationRule::Angle => cancel_extremes(values.to_vec(), true),
    }
}

fn cancel_extremes<M: Magnitude>(mut rest: Vec<ScaleValue<M>>, with_duplicates: bool) -> ScaleValue<M> {
    loop {
        if is_fold_unambiguous(&rest) {
            return fold_plain(&rest);
        }
        let (min, max) = bounds(&rest);
        if max.is_zero() {
            return ScaleValue::zero();
        }
        if with_duplicates {
            rest.retain(|&v| v != max && v != min);
        } else {
            let i = rest.iter().position(|&v| v == max).expect("max is present");
            rest.swap_remove(i);
            let j = rest.iter().position(|&v| v == min).expect("min is present");
            rest.swap_remove(j);
        }
    }
}

fn bounds<M: Magnitude>(values: &[ScaleValue<M>]) -> (ScaleValue<M>, ScaleValue<M>) {
    let min = values.iter().copied().min().unwrap_or_else(ScaleValue::zero);
    let max = values.iter().copied().max().unwrap_or_else(ScaleValue::zero);
    (min, max)
}
