//! Problem files: a scale, players, a capacity table and a profile.
//!
//! ```json
//! {
//!   "scale": {"kind": "unit"},
//!   "n": 3,
//!   "capacity": {"{1}": "0.3", "{2}": "0.25", "{1,3}": "3/10"},
//!   "profile": ["-1", "0.3", "1"],
//!   "options": {"rule": "floor", "mobius": "lower", "outputs": ["v1", "v2"]}
//! }
//! ```
//!
//! The capacity must list every coalition except `{}` and the ground set,
//! which default to the bottom and top of the scale.

use std::collections::BTreeMap;

use serde::Deserialize;
use symsugeno::prelude::*;
use symsugeno::scale::ScaleError;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    scale: RawScale,
    #[serde(default)]
    players: Option<Vec<String>>,
    #[serde(default)]
    n: Option<usize>,
    capacity: BTreeMap<String, String>,
    profile: RawProfile,
    #[serde(default)]
    options: Options,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum RawScale {
    Levels {
        #[serde(default)]
        labels: Option<Vec<String>>,
        #[serde(default)]
        k: Option<u32>,
    },
    Unit,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawProfile {
    List(Vec<String>),
    Map(BTreeMap<String, String>),
}

/// Defaults for flags not given on the command line.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub rule: Option<String>,
    #[serde(default)]
    pub mobius: Option<String>,
    #[serde(default)]
    pub outputs: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Players(Vec<String>);

impl Players {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    /// A player by name, or by 1-based index.
    fn resolve(&self, text: &str) -> Option<usize> {
        self.0.iter().position(|p| p == text).or_else(|| {
            text.parse::<usize>().ok().filter(|&i| i >= 1 && i <= self.len()).map(|i| i - 1)
        })
    }

    pub fn subset(&self, a: Coalition) -> String {
        let names: Vec<_> = a.players().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct Instance<S: Scale> {
    pub players: Players,
    pub capacity: Capacity<S>,
    pub profile: Profile<S::Mag>,
}

#[derive(Debug, Clone)]
pub enum Problem {
    Levels(Instance<Levels>),
    Unit(Instance<Unit>),
}

pub struct ParsedProblem {
    pub problem: Problem,
    pub options: Options,
}

pub fn parse(text: &str) -> Result<ParsedProblem, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let players = players(&raw)?;
    let problem = match &raw.scale {
        RawScale::Unit => Problem::Unit(instance(Unit::new(), players, &raw)?),
        RawScale::Levels { labels, k } => {
            let scale = match (labels, k) {
                (Some(labels), None) => Levels::with_labels(labels.iter().cloned()),
                (None, Some(k)) => Levels::new(*k),
                _ => return Err(CliError::Parse("a levels scale needs exactly one of `labels` or `k`".into())),
            }
            .map_err(|e| CliError::Validation(e.to_string()))?;
            Problem::Levels(instance(scale, players, &raw)?)
        }
    };
    Ok(ParsedProblem { problem, options: raw.options })
}

fn players(raw: &RawProblem) -> Result<Players, CliError> {
    let from_profile = match &raw.profile {
        RawProfile::List(values) => Some(values.len()),
        RawProfile::Map(_) => None,
    };
    let names = match (&raw.players, raw.n) {
        (Some(names), n) => {
            if n.is_some_and(|n| n != names.len()) {
                return Err(CliError::Validation(format!("`n` is {} but {} players are named", n.unwrap(), names.len())));
            }
            names.clone()
        }
        (None, n) => {
            let n = n.or(from_profile).ok_or_else(|| CliError::Parse("give `players` or `n`".into()))?;
            (1..=n).map(|i| i.to_string()).collect()
        }
    };
    if names.is_empty() || names.len() > MAX_PLAYERS {
        return Err(CliError::Validation(format!("between 1 and {MAX_PLAYERS} players are supported")));
    }
    let mut seen = names.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != names.len() {
        return Err(CliError::Validation("player names must be distinct".into()));
    }
    Ok(Players(names))
}

fn value<S: Scale>(scale: &S, text: &str, context: &str) -> Result<ScaleValue<S::Mag>, CliError> {
    scale.parse_value(text).map_err(|e| match e {
        ScaleError::OutOfRange(_) => CliError::Validation(format!("{context}: {e}")),
        _ => CliError::Parse(format!("{context}: {e}")),
    })
}

fn instance<S: Scale>(scale: S, players: Players, raw: &RawProblem) -> Result<Instance<S>, CliError> {
    let n = players.len();
    let mut entries = Vec::with_capacity(raw.capacity.len() + 2);
    for (key, text) in &raw.capacity {
        let a = Coalition::parse_with(key, |m| players.resolve(m)).map_err(|e| CliError::Parse(e.to_string()))?;
        let v = value(&scale, text, &format!("capacity at {key}"))?;
        if v.is_negative() {
            return Err(CliError::Validation(format!("capacity at {key} is negative")));
        }
        entries.push((a, v));
    }
    for (a, default) in [(Coalition::EMPTY, ScaleValue::zero()), (Coalition::full(n), scale.one())] {
        if !entries.iter().any(|(b, _)| *b == a) {
            entries.push((a, default));
        }
    }
    let capacity = Capacity::from_entries(scale.clone(), n, entries).map_err(|e| CliError::Validation(e.to_string()))?;

    let values = match &raw.profile {
        RawProfile::List(values) => {
            if values.len() != n {
                return Err(CliError::Validation(format!("profile has {} scores for {n} players", values.len())));
            }
            values
                .iter()
                .enumerate()
                .map(|(i, t)| value(&scale, t, &format!("score of {}", players.name(i))))
                .collect::<Result<Vec<_>, _>>()?
        }
        RawProfile::Map(map) => {
            let mut values = vec![None; n];
            for (key, text) in map {
                let i = players
                    .resolve(key)
                    .ok_or_else(|| CliError::Validation(format!("profile names unknown player `{key}`")))?;
                if values[i].replace(value(&scale, text, &format!("score of {key}"))?).is_some() {
                    return Err(CliError::Validation(format!("player `{key}` scored twice")));
                }
            }
            values
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| CliError::Validation(format!("no score for {}", players.name(i)))))
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    Ok(Instance { players, capacity, profile: Profile::new(values) })
}
