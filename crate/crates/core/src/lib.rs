//! Symmetric ordinal aggregation.
//!
//! This crate implements the symmetric maximum and minimum on a signed
//! ordinal scale, the computation rules that make multi-operand symmetric
//! maxima well defined, classical and ordinal Möbius transforms of
//! capacities, and the Choquet and Sugeno integral families, including the
//! symmetric Sugeno integral and its rule-based variants.
//!
//! ```
//! use symsugeno::prelude::*;
//!
//! let scale = Unit::new();
//! let v = scale.parse_value("0.3").unwrap();
//! let w = scale.parse_value("-0.3").unwrap();
//! assert!(sym_max(v, w).is_zero());
//! assert_eq!(scale.format_value(&sym_min(v, w)), "-0.3");
//! ```

pub mod capacity;
pub mod coalition;
pub mod generate;
pub mod integrals;
pub mod mobius;
pub mod rules;
pub mod scale;
pub mod verify;

pub mod prelude {
    pub use crate::capacity::{Capacity, CapacityError, PossibilityDistribution, ValidationErrors};
    pub use crate::coalition::{Coalition, MAX_PLAYERS};
    pub use crate::integrals::{
        choquet, choquet_asymmetric, choquet_mobius, choquet_symmetric, choquet_symmetric_explicit,
        sipos_mobius, sugeno, sugeno_mobius, sugeno_symmetric, sugeno_symmetric_explicit,
        sugeno_symmetric_mobius, sugeno_variant1, sugeno_variant2, sugeno_variant3, IntegralError,
        Profile,
    };
    pub use crate::mobius::{
        canonical_ordinal_mobius, classical_mobius, classical_zeta, conjugate_reconstruct,
        even_odd_mobius, is_solution, mobius_necessity, mobius_possibility, ordinal_mobius_interval,
        reconstruct, MobiusInterval, MobiusRepresentative, RealSetFunction, SetFunction,
    };
    pub use crate::rules::{fold_sym_max, is_fold_unambiguous, AggregationRule};
    pub use crate::scale::{
        sym_max, sym_min, Level, Levels, Magnitude, Rational, Scale, ScaleValue, Sign, Unit,
    };
}
