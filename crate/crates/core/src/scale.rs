//! The symmetric linearly ordered scale.
//!
//! A scale `L = L⁻ ∪ L⁺` is built from a bounded chain `L⁺` (bottom `𝟘`, top `𝟙`)
//! and its mirror image `L⁻ = {-a | a ∈ L⁺}`, with `-𝟘` identified with `𝟘`.
//! On `L` we have the lattice operations (`Ord::max`/`Ord::min`) and the two
//! symmetric operations [`sym_max`] and [`sym_min`], which play the roles of
//! addition and multiplication.
//!
//! Two concrete chains are provided: [`Levels`], a finite chain of `K + 1`
//! levels, and [`Unit`], the rational interval `[0, 1]`. The magnitude type is
//! a type parameter, so values from different kinds of scale cannot meet in
//! one computation.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::Neg;

use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational used for magnitudes on the unit scale.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScaleError {
    #[error("a levels scale needs at least two levels, got k = {0}")]
    TooFewLevels(u32),
    #[error("invalid level labels: {0}")]
    BadLabels(String),
    #[error("cannot parse `{0}` as a scale value")]
    Parse(String),
    #[error("value `{0}` lies outside the scale")]
    OutOfRange(String),
    #[error("negation is only defined on the nonnegative half of the scale")]
    NegativeArgument,
}

/// An element of the positive half `L⁺` of a scale.
pub trait Magnitude: Copy + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// The bottom element `𝟘`.
    fn bottom() -> Self;

    fn is_bottom(&self) -> bool {
        *self == Self::bottom()
    }
}

/// Index of a level on a finite chain `0..=K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(pub u32);

impl Magnitude for Level {
    fn bottom() -> Self {
        Level(0)
    }
}

impl Magnitude for Rational {
    fn bottom() -> Self {
        Rational::zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

/// A signed element of the symmetric scale.
///
/// The representation is canonical: the sign is [`Sign::Zero`] exactly when
/// the magnitude is `𝟘`, so `-𝟘` and `𝟘` are the same value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScaleValue<M> {
    sign: Sign,
    magnitude: M,
}

impl<M: Magnitude> ScaleValue<M> {
    pub fn zero() -> Self {
        ScaleValue {
            sign: Sign::Zero,
            magnitude: M::bottom(),
        }
    }

    pub fn positive(magnitude: M) -> Self {
        Self::with_sign(false, magnitude)
    }

    pub fn negative(magnitude: M) -> Self {
        Self::with_sign(true, magnitude)
    }

    /// Builds `±magnitude`, normalizing a bottom magnitude to `𝟘`.
    pub fn with_sign(negative: bool, magnitude: M) -> Self {
        let sign = if magnitude.is_bottom() {
            Sign::Zero
        } else if negative {
            Sign::Neg
        } else {
            Sign::Pos
        };
        ScaleValue { sign, magnitude }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> M {
        self.magnitude
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Neg
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Pos
    }

    /// `a ↦ -a`.
    pub fn reflect(self) -> Self {
        let sign = match self.sign {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        };
        ScaleValue {
            sign,
            magnitude: self.magnitude,
        }
    }

    /// `|a|`, always in `L⁺`.
    pub fn abs(self) -> Self {
        ScaleValue::positive(self.magnitude)
    }

    /// Positive part `a ∨ 𝟘`.
    pub fn positive_part(self) -> Self {
        self.max(Self::zero())
    }

    /// Negative part `(-a) ∨ 𝟘`.
    pub fn negative_part(self) -> Self {
        self.reflect().max(Self::zero())
    }
}

impl<M: Magnitude> Neg for ScaleValue<M> {
    type Output = Self;

    fn neg(self) -> Self {
        self.reflect()
    }
}

impl<M: Magnitude> Ord for ScaleValue<M> {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(s: Sign) -> u8 {
            match s {
                Sign::Neg => 0,
                Sign::Zero => 1,
                Sign::Pos => 2,
            }
        }
        match rank(self.sign).cmp(&rank(other.sign)) {
            Ordering::Equal => match self.sign {
                Sign::Neg => other.magnitude.cmp(&self.magnitude),
                Sign::Zero => Ordering::Equal,
                Sign::Pos => self.magnitude.cmp(&other.magnitude),
            },
            ord => ord,
        }
    }
}

impl<M: Magnitude> PartialOrd for ScaleValue<M> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Symmetric maximum: the absolutely larger of `a` and `b`, or `𝟘` when
/// `b = -a`.
pub fn sym_max<M: Magnitude>(a: ScaleValue<M>, b: ScaleValue<M>) -> ScaleValue<M> {
    match a.magnitude.cmp(&b.magnitude) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal if a == b => a,
        Ordering::Equal => ScaleValue::zero(),
    }
}

/// Symmetric minimum: magnitude `|a| ∧ |b|`, negative iff the signs differ.
pub fn sym_min<M: Magnitude>(a: ScaleValue<M>, b: ScaleValue<M>) -> ScaleValue<M> {
    let magnitude = a.magnitude.min(b.magnitude);
    ScaleValue::with_sign(a.sign != b.sign, magnitude)
}

/// A bounded chain `L⁺` together with its negation and text format.
pub trait Scale: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Mag: Magnitude;

    /// The top element `𝟙`.
    fn top(&self) -> Self::Mag;

    fn contains(&self, magnitude: &Self::Mag) -> bool;

    /// The order-reversing involution `n` on `L⁺`.
    fn negate(&self, magnitude: Self::Mag) -> Self::Mag;

    /// All magnitudes of a finite chain, or a finite grid of a dense one,
    /// ascending from `𝟘` to `𝟙`.
    fn grid(&self) -> Vec<Self::Mag>;

    fn parse_magnitude(&self, text: &str) -> Result<Self::Mag, ScaleError>;

    fn format_magnitude(&self, magnitude: &Self::Mag) -> String;

    fn one(&self) -> ScaleValue<Self::Mag> {
        ScaleValue::positive(self.top())
    }

    fn contains_value(&self, value: &ScaleValue<Self::Mag>) -> bool {
        self.contains(&value.magnitude())
    }

    /// `-𝟙`, `𝟘` or `𝟙` according to the sign of `value`.
    fn sign_of(&self, value: &ScaleValue<Self::Mag>) -> ScaleValue<Self::Mag> {
        match value.sign() {
            Sign::Neg => -self.one(),
            Sign::Zero => ScaleValue::zero(),
            Sign::Pos => self.one(),
        }
    }

    /// Applies the negation `n` to an element of `L⁺`.
    fn negation_plus(
        &self,
        value: &ScaleValue<Self::Mag>,
    ) -> Result<ScaleValue<Self::Mag>, ScaleError> {
        if value.is_negative() {
            return Err(ScaleError::NegativeArgument);
        }
        Ok(ScaleValue::positive(self.negate(value.magnitude())))
    }

    /// Every value of the symmetric grid, ascending from `-𝟙` to `𝟙`.
    fn symmetric_grid(&self) -> Vec<ScaleValue<Self::Mag>> {
        let grid = self.grid();
        let mut out: Vec<_> = grid
            .iter()
            .rev()
            .filter(|m| !m.is_bottom())
            .map(|&m| ScaleValue::negative(m))
            .collect();
        out.extend(grid.into_iter().map(ScaleValue::positive));
        out
    }

    /// Parses `a` or `-a`; values outside the scale are rejected.
    fn parse_value(&self, text: &str) -> Result<ScaleValue<Self::Mag>, ScaleError> {
        let trimmed = text.trim();
        let (negative, body) = match trimmed.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
        };
        let magnitude = self.parse_magnitude(body)?;
        Ok(ScaleValue::with_sign(negative, magnitude))
    }

    fn format_value(&self, value: &ScaleValue<Self::Mag>) -> String {
        let body = self.format_magnitude(&value.magnitude());
        if value.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// The finite chain `0 < 1 < … < K`, optionally with a label per level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Levels {
    k: u32,
    labels: Option<Vec<String>>,
}

impl Levels {
    pub fn new(k: u32) -> Result<Self, ScaleError> {
        if k < 1 {
            return Err(ScaleError::TooFewLevels(k));
        }
        Ok(Levels { k, labels: None })
    }

    /// A chain with one label per level, lowest first.
    pub fn with_labels<I, S>(labels: I) -> Result<Self, ScaleError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(ScaleError::TooFewLevels(labels.len().saturating_sub(1) as u32));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.starts_with(['-', '+']) || label.trim() != label {
                return Err(ScaleError::BadLabels(format!("label `{label}` is not allowed")));
            }
            if labels[..i].contains(label) {
                return Err(ScaleError::BadLabels(format!("label `{label}` is repeated")));
            }
        }
        Ok(Levels {
            k: labels.len() as u32 - 1,
            labels: Some(labels),
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

impl Scale for Levels {
    type Mag = Level;

    fn top(&self) -> Level {
        Level(self.k)
    }

    fn contains(&self, magnitude: &Level) -> bool {
        magnitude.0 <= self.k
    }

    fn negate(&self, magnitude: Level) -> Level {
        Level(self.k - magnitude.0)
    }

    fn grid(&self) -> Vec<Level> {
        (0..=self.k).map(Level).collect()
    }

    fn parse_magnitude(&self, text: &str) -> Result<Level, ScaleError> {
        let level = match &self.labels {
            Some(labels) => labels
                .iter()
                .position(|l| l == text)
                .map(|i| i as u32)
                .ok_or_else(|| ScaleError::Parse(text.to_string()))?,
            None => text
                .parse::<u32>()
                .map_err(|_| ScaleError::Parse(text.to_string()))?,
        };
        if level > self.k {
            return Err(ScaleError::OutOfRange(text.to_string()));
        }
        Ok(Level(level))
    }

    fn format_magnitude(&self, magnitude: &Level) -> String {
        match &self.labels {
            Some(labels) => labels[magnitude.0 as usize].clone(),
            None => magnitude.0.to_string(),
        }
    }
}

/// The rational unit interval `[0, 1]` with negation `x ↦ 1 - x`.
///
/// `grid_denominator` only affects [`Scale::grid`]; any rational in `[0, 1]`
/// is a member of the scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    grid_denominator: i64,
}

impl Default for Unit {
    fn default() -> Self {
        Unit { grid_denominator: 10 }
    }
}

impl Unit {
    pub fn new() -> Self {
        Self::default()
    }

    /// Unit scale whose sampling grid is `{0, 1/d, …, 1}`.
    pub fn with_grid(denominator: i64) -> Self {
        Unit {
            grid_denominator: denominator.max(1),
        }
    }
}

impl Scale for Unit {
    type Mag = Rational;

    fn top(&self) -> Rational {
        Rational::one()
    }

    fn contains(&self, magnitude: &Rational) -> bool {
        !magnitude.is_negative() && *magnitude <= Rational::one()
    }

    fn negate(&self, magnitude: Rational) -> Rational {
        Rational::one() - magnitude
    }

    fn grid(&self) -> Vec<Rational> {
        (0..=self.grid_denominator)
            .map(|i| Rational::new(i, self.grid_denominator))
            .collect()
    }

    fn parse_magnitude(&self, text: &str) -> Result<Rational, ScaleError> {
        let value = parse_rational(text)?;
        if !self.contains(&value) {
            return Err(ScaleError::OutOfRange(text.to_string()));
        }
        Ok(value)
    }

    fn format_magnitude(&self, magnitude: &Rational) -> String {
        format_rational(magnitude)
    }
}

/// The signed rational denoted by a Unit-scale value.
pub fn signed_rational(value: &ScaleValue<Rational>) -> Rational {
    match value.sign() {
        Sign::Neg => -value.magnitude(),
        _ => value.magnitude(),
    }
}

/// Parses `"3"`, `"0.25"`, `".5"`, `"3/10"` (optionally signed) exactly.
pub fn parse_rational(text: &str) -> Result<Rational, ScaleError> {
    let err = || ScaleError::Parse(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let value = if let Some((num, den)) = body.split_once('/') {
        if !digits(num) || !digits(den) {
            return Err(err());
        }
        let num: i64 = num.parse().map_err(|_| err())?;
        let den: i64 = den.parse().map_err(|_| err())?;
        if den == 0 {
            return Err(err());
        }
        Rational::new(num, den)
    } else {
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if (int.is_empty() && frac.is_empty())
            || !(int.is_empty() || digits(int))
            || !(frac.is_empty() || digits(frac))
        {
            return Err(err());
        }
        let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(err)?;
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| err())? };
        let frac_val: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| err())? };
        let num = int
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(err)?;
        Rational::new(num, scale)
    };
    Ok(if negative { -value } else { value })
}

/// Formats a rational as a terminating decimal when one exists, otherwise as
/// `p/q`. The output always parses back to the same value.
pub fn format_rational(value: &Rational) -> String {
    let (num, den) = (*value.numer(), *value.denom());
    let mut rest = den;
    let (mut twos, mut fives) = (0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    let places = twos.max(fives);
    if rest != 1 || places > 30 {
        return format!("{num}/{den}");
    }
    if places == 0 {
        return num.to_string();
    }
    let scaled = num as i128 * (10i128.pow(places) / den as i128);
    let sign = if scaled < 0 { "-" } else { "" };
    let digits = format!("{:0>width$}", scaled.unsigned_abs(), width = places as usize + 1);
    let (int, frac) = digits.split_at(digits.len() - places as usize);
    format!("{sign}{int}.{frac}")
}

/// [`format_rational`] for results of exact real arithmetic.
pub fn format_big_rational(value: &BigRational) -> String {
    match (value.numer().to_i64(), value.denom().to_i64()) {
        (Some(num), Some(den)) => format_rational(&Rational::new(num, den)),
        _ => format!("{}/{}", value.numer(), value.denom()),
    }
}
