//! Choquet and Sugeno integrals, including the symmetric Sugeno integral and
//! its three rule-based variants.
//!
//! The Choquet family works on exact rationals and serves as the numeric
//! reference. The Sugeno family works on any [`Scale`] and only uses the
//! lattice operations together with `⊚∨` and `⊚∧`.
//!
//! Profiles are sorted ascending with a stable sort; `p` is the number of
//! strictly negative scores, so `𝟘` entries belong to the positive block.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::capacity::Capacity;
use crate::coalition::Coalition;
use crate::mobius::{RealSetFunction, SetFunction};
use crate::rules::{fold_sym_max, AggregationRule};
use crate::scale::{signed_rational, sym_max, sym_min, Magnitude, Rational, Scale, ScaleValue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntegralError {
    #[error("profile has {profile} scores but the set function is over {expected} players")]
    DimensionMismatch { expected: usize, profile: usize },
    #[error("score of player {} is negative; this integral needs nonnegative scores", .0 + 1)]
    NegativeScore(usize),
}

/// Scores `f: N → L` of the players.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile<M> {
    values: Vec<ScaleValue<M>>,
}

impl Profile<Rational> {
    /// The scores as exact reals, for the Choquet family.
    pub fn to_real(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|x| {
                let q = signed_rational(x);
                BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
            })
            .collect()
    }
}

impl<M: Magnitude> Profile<M> {
    pub fn new(values: Vec<ScaleValue<M>>) -> Self {
        Profile { values }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, index: usize) -> ScaleValue<M> {
        self.values[index]
    }

    pub fn values(&self) -> &[ScaleValue<M>] {
        &self.values
    }

    /// `f⁺ = f ∨ 𝟘`.
    pub fn positive_part(&self) -> Self {
        Profile::new(self.values.iter().map(|v| v.positive_part()).collect())
    }

    /// `f⁻ = (-f) ∨ 𝟘`.
    pub fn negative_part(&self) -> Self {
        Profile::new(self.values.iter().map(|v| v.negative_part()).collect())
    }

    /// `-f`.
    pub fn reflect(&self) -> Self {
        Profile::new(self.values.iter().map(|&v| -v).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Player indices sorted so that scores ascend. Tied nonnegative scores
    /// keep index order and tied negative scores reverse it, so the order for
    /// `-f` is the order for `f` reversed (up to ties at zero, which no
    /// formula can see).
    pub fn ascending_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&i, &j| {
            let tie = if self.values[i].is_negative() { j.cmp(&i) } else { i.cmp(&j) };
            self.values[i].cmp(&self.values[j]).then(tie)
        });
        order
    }

    /// Number of strictly negative scores.
    pub fn split_index(&self) -> usize {
        self.values.iter().filter(|v| v.is_negative()).count()
    }

    /// Meet of the scores over a nonempty `a`.
    fn meet(&self, a: Coalition) -> ScaleValue<M> {
        a.players().map(|i| self.values[i]).min().expect("nonempty coalition")
    }
}

fn check_dims(expected: usize, profile: usize) -> Result<(), IntegralError> {
    if expected != profile {
        return Err(IntegralError::DimensionMismatch { expected, profile });
    }
    Ok(())
}

fn check_nonnegative<M: Magnitude>(f: &Profile<M>) -> Result<(), IntegralError> {
    match f.values.iter().position(|v| v.is_negative()) {
        Some(i) => Err(IntegralError::NegativeScore(i)),
        None => Ok(()),
    }
}

/// `S_v(f) = ⋁ᵢ [f₍ᵢ₎ ∧ v({(i), …, (n)})]` for `f ≥ 𝟘`.
pub fn sugeno<S: Scale>(v: &Capacity<S>, f: &Profile<S::Mag>) -> Result<ScaleValue<S::Mag>, IntegralError> {
    check_dims(v.n(), f.n())?;
    check_nonnegative(f)?;
    let order = f.ascending_order();
    Ok((0..f.n())
        .map(|i| {
            let upper_set = Coalition::from_indices(order[i..].iter().copied());
            f.get(order[i]).min(v.value(upper_set))
        })
        .fold(ScaleValue::zero(), Ord::max))
}

/// `⋁_{A ⊆ N} (⋀_{i∈A} fᵢ ∧ m(A))` for `f ≥ 𝟘`; equals [`sugeno`] for any
/// `m` in the Möbius interval of the capacity.
pub fn sugeno_mobius<M: Magnitude>(m: &SetFunction<M>, f: &Profile<M>) -> Result<ScaleValue<M>, IntegralError> {
    check_dims(m.n(), f.n())?;
    check_nonnegative(f)?;
    Ok(Coalition::all(m.n())
        .skip(1)
        .map(|a| {
            let meet = a.players().map(|i| f.get(i)).min().expect("nonempty");
            meet.min(m.get(a))
        })
        .fold(ScaleValue::zero(), Ord::max))
}

/// `Š_v(f) = S_v(f⁺) ⊚∨ (-S_v(f⁻))`.
pub fn sugeno_symmetric<S: Scale>(
    v: &Capacity<S>,
    f: &Profile<S::Mag>,
) -> Result<ScaleValue<S::Mag>, IntegralError> {
    let gains = sugeno(v, &f.positive_part())?;
    let losses = sugeno(v, &f.negative_part())?;
    Ok(sym_max(gains, -losses))
}

/// Terms of the sorted two-block form of the symmetric Sugeno integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortedTerms<M> {
    /// Player indices in ascending score order.
    pub order: Vec<usize>,
    /// Number of strictly negative scores.
    pub split: usize,
    /// `f₍ᵢ₎ ⊚∧ v({(1), …, (i)})` for `i ≤ p`.
    pub negative: Vec<ScaleValue<M>>,
    /// `f₍ᵢ₎ ⊚∧ v({(i), …, (n)})` for `i > p`.
    pub positive: Vec<ScaleValue<M>>,
}

impl<M: Magnitude> SortedTerms<M> {
    /// Both blocks as one multiset, negative block first.
    pub fn all(&self) -> Vec<ScaleValue<M>> {
        self.negative.iter().chain(&self.positive).copied().collect()
    }
}

pub fn sorted_terms<S: Scale>(v: &Capacity<S>, f: &Profile<S::Mag>) -> Result<SortedTerms<S::Mag>, IntegralError> {
    check_dims(v.n(), f.n())?;
    let order = f.ascending_order();
    let split = f.split_index();
    let negative = (0..split)
        .map(|i| {
            let lower_set = Coalition::from_indices(order[..=i].iter().copied());
            sym_min(f.get(order[i]), v.value(lower_set))
        })
        .collect();
    let positive = (split..f.n())
        .map(|i| {
            let upper_set = Coalition::from_indices(order[i..].iter().copied());
            sym_min(f.get(order[i]), v.value(upper_set))
        })
        .collect();
    Ok(SortedTerms {
        order,
        split,
        negative,
        positive,
    })
}

/// The symmetric Sugeno integral through its sorted two-block form; each
/// block is folded on its own and the two results are combined with `⊚∨`.
pub fn sugeno_symmetric_explicit<S: Scale>(
    v: &Capacity<S>,
    f: &Profile<S::Mag>,
) -> Result<ScaleValue<S::Mag>, IntegralError> {
    let terms = sorted_terms(v, f)?;
    let losses = fold_sym_max(&terms.negative, AggregationRule::Floor);
    let gains = fold_sym_max(&terms.positive, AggregationRule::Floor);
    Ok(sym_max(losses, gains))
}

/// `Š²`: every sorted term folded together under the angle rule.
pub fn sugeno_variant2<S: Scale>(v: &Capacity<S>, f: &Profile<S::Mag>) -> Result<ScaleValue<S::Mag>, IntegralError> {
    Ok(fold_sym_max(&sorted_terms(v, f)?.all(), AggregationRule::Angle))
}

/// `Š³`: every sorted term folded together under the ceil rule.
pub fn sugeno_variant3<S: Scale>(v: &Capacity<S>, f: &Profile<S::Mag>) -> Result<ScaleValue<S::Mag>, IntegralError> {
    Ok(fold_sym_max(&sorted_terms(v, f)?.all(), AggregationRule::Ceil))
}

/// `m(A) ⊚∧ [⋀_{i∈A} fᵢ⁺ ⊚∨ (-⋀_{i∈A} fᵢ⁻)]` for a nonempty `A`.
fn mobius_term<M: Magnitude>(
    m: &SetFunction<M>,
    plus: &Profile<M>,
    minus: &Profile<M>,
    a: Coalition,
) -> ScaleValue<M> {
    let inner = sym_max(plus.meet(a), -minus.meet(a));
    sym_min(m.get(a), inner)
}

/// The three blocks of the Möbius form of the symmetric Sugeno integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MobiusBlocks<M> {
    /// Fold over nonempty `A ⊆ N⁺`.
    pub positive: ScaleValue<M>,
    /// Fold over nonempty `A ⊆ N⁻`.
    pub negative: ScaleValue<M>,
    /// Fold over `A` meeting both `N⁺` and `N⁻`; always `𝟘`.
    pub mixed: ScaleValue<M>,
    /// `positive ⊚∨ negative ⊚∨ mixed`.
    pub total: ScaleValue<M>,
}

/// The symmetric Sugeno integral through the Möbius representation `m`
/// (any function in the Möbius interval of the capacity).
pub fn sugeno_symmetric_mobius<M: Magnitude>(
    m: &SetFunction<M>,
    f: &Profile<M>,
) -> Result<MobiusBlocks<M>, IntegralError> {
    check_dims(m.n(), f.n())?;
    let (plus, minus) = (f.positive_part(), f.negative_part());
    let nonneg = Coalition::from_indices((0..f.n()).filter(|&i| !f.get(i).is_negative()));
    let (mut pos_terms, mut neg_terms, mut mixed_terms) = (Vec::new(), Vec::new(), Vec::new());
    for a in Coalition::all(m.n()).skip(1) {
        let term = mobius_term(m, &plus, &minus, a);
        if a.is_subset_of(nonneg) {
            pos_terms.push(term);
        } else if a.is_disjoint(nonneg) {
            neg_terms.push(term);
        } else {
            mixed_terms.push(term);
        }
    }
    let positive = fold_sym_max(&pos_terms, AggregationRule::Floor);
    let negative = fold_sym_max(&neg_terms, AggregationRule::Floor);
    let mixed = fold_sym_max(&mixed_terms, AggregationRule::Floor);
    Ok(MobiusBlocks {
        positive,
        negative,
        mixed,
        total: sym_max(sym_max(positive, negative), mixed),
    })
}

/// Terms `m(A) ⊚∧ [⋀ f⁺ ⊚∨ (-⋀ f⁻)]` over every nonempty `A`, by mask.
pub fn variant1_terms<M: Magnitude>(m: &SetFunction<M>, f: &Profile<M>) -> Result<Vec<ScaleValue<M>>, IntegralError> {
    check_dims(m.n(), f.n())?;
    let (plus, minus) = (f.positive_part(), f.negative_part());
    Ok(Coalition::all(m.n())
        .skip(1)
        .map(|a| mobius_term(m, &plus, &minus, a))
        .collect())
}

/// `Š¹`: the Möbius terms over all nonempty `A` folded under the angle rule.
pub fn sugeno_variant1<M: Magnitude>(m: &SetFunction<M>, f: &Profile<M>) -> Result<ScaleValue<M>, IntegralError> {
    Ok(fold_sym_max(&variant1_terms(m, f)?, AggregationRule::Angle))
}

fn check_real_dims(v: &RealSetFunction, f: &[BigRational]) -> Result<(), IntegralError> {
    check_dims(v.n(), f.len())
}

fn positive_part(f: &[BigRational]) -> Vec<BigRational> {
    f.iter()
        .map(|x| if x.is_positive() { x.clone() } else { BigRational::zero() })
        .collect()
}

fn negative_part(f: &[BigRational]) -> Vec<BigRational> {
    f.iter()
        .map(|x| if x.is_negative() { -x } else { BigRational::zero() })
        .collect()
}

fn ascending(f: &[BigRational]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&i, &j| f[i].cmp(&f[j]));
    order
}

/// `C_v(f) = Σᵢ [f₍ᵢ₎ - f₍ᵢ₋₁₎] v(A₍ᵢ₎)` for `f ≥ 0`, with `f₍₀₎ = 0`.
pub fn choquet(v: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(v, f)?;
    if let Some(i) = f.iter().position(Signed::is_negative) {
        return Err(IntegralError::NegativeScore(i));
    }
    let order = ascending(f);
    let mut previous = BigRational::zero();
    let mut total = BigRational::zero();
    for (k, &i) in order.iter().enumerate() {
        let upper_set = Coalition::from_indices(order[k..].iter().copied());
        total += (&f[i] - &previous) * v.get(upper_set);
        previous = f[i].clone();
    }
    Ok(total)
}

/// `C_v(f⁺) - C_{v̄}(f⁻)`.
pub fn choquet_asymmetric(v: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(v, f)?;
    Ok(choquet(v, &positive_part(f))? - choquet(&v.conjugate(), &negative_part(f))?)
}

/// `Č_v(f) = C_v(f⁺) - C_v(f⁻)`.
pub fn choquet_symmetric(v: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(v, f)?;
    Ok(choquet(v, &positive_part(f))? - choquet(v, &negative_part(f))?)
}

/// The symmetric Choquet integral written out over the sorted profile, with
/// the negative block measured on initial segments and the nonnegative block
/// on final segments.
pub fn choquet_symmetric_explicit(v: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(v, f)?;
    let n = f.len();
    let order = ascending(f);
    let p = f.iter().filter(|x| x.is_negative()).count();
    let sorted: Vec<&BigRational> = order.iter().map(|&i| &f[i]).collect();
    let initial = |k: usize| v.get(Coalition::from_indices(order[..k].iter().copied()));
    let last = |k: usize| v.get(Coalition::from_indices(order[k..].iter().copied()));
    let mut total = BigRational::zero();
    // Positions are 0-based here: the negative block is 0..p.
    for i in 0..p.saturating_sub(1) {
        total += (sorted[i] - sorted[i + 1]) * initial(i + 1);
    }
    if p > 0 {
        total += sorted[p - 1] * initial(p);
    }
    if p < n {
        total += sorted[p] * last(p);
    }
    for i in p + 1..n {
        total += (sorted[i] - sorted[i - 1]) * last(i);
    }
    Ok(total)
}

/// `Σ_{A ⊆ N} m(A) ⋀_{i∈A} fᵢ` for `f ≥ 0`, with `m` a classical Möbius
/// transform.
pub fn choquet_mobius(m: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(m, f)?;
    if let Some(i) = f.iter().position(Signed::is_negative) {
        return Err(IntegralError::NegativeScore(i));
    }
    Ok(mobius_sum(m, f))
}

/// `Σ_{A ⊆ N} m(A) [⋀ fᵢ⁺ - ⋀ fᵢ⁻]`.
pub fn sipos_mobius(m: &RealSetFunction, f: &[BigRational]) -> Result<BigRational, IntegralError> {
    check_real_dims(m, f)?;
    Ok(mobius_sum(m, &positive_part(f)) - mobius_sum(m, &negative_part(f)))
}

fn mobius_sum(m: &RealSetFunction, f: &[BigRational]) -> BigRational {
    Coalition::all(m.n())
        .skip(1)
        .map(|a| {
            let meet = a.players().map(|i| &f[i]).min().expect("nonempty");
            m.get(a) * meet
        })
        .sum()
}
