use serde_json::{json, Map, Value};
use symsugeno::integrals::{sorted_terms, variant1_terms};
use symsugeno::prelude::*;
use symsugeno::scale::format_big_rational;

use crate::problem::{Instance, Players, Problem};
use crate::CliError;

/// Every output, in emission order.
pub const OUTPUTS: [&str; 9] = [
    "choquet",
    "choquet_sym",
    "choquet_asym",
    "sugeno",
    "sugeno_sym",
    "v1",
    "v2",
    "v3",
    "mobius_interval",
];

pub struct Request {
    pub outputs: Vec<&'static str>,
    /// Inapplicable outputs are reported as skipped instead of failing.
    pub lenient: bool,
    pub rule: AggregationRule,
    pub representative: MobiusRepresentative,
}

pub fn parse_outputs(names: &[String]) -> Result<Vec<&'static str>, CliError> {
    let mut wanted = Vec::new();
    for name in names {
        let name = name.trim();
        let known = OUTPUTS
            .iter()
            .find(|o| **o == name)
            .ok_or_else(|| CliError::Validation(format!("unknown output `{name}` (expected one of {})", OUTPUTS.join(", "))))?;
        wanted.push(*known);
    }
    Ok(OUTPUTS.iter().copied().filter(|o| wanted.contains(o)).collect())
}

pub fn compute(problem: &Problem, request: &Request) -> Result<Vec<Value>, CliError> {
    let mut records = Vec::new();
    for &output in &request.outputs {
        let record = match problem {
            Problem::Unit(inst) => unit_record(inst, output, request)?,
            Problem::Levels(inst) => {
                if output.starts_with("choquet") {
                    Err("the Choquet integrals need the unit scale".to_string())
                } else {
                    ordinal_record(inst, output, request)?
                }
            }
        };
        match record {
            Ok(mut body) => {
                body.insert("output".into(), json!(output));
                records.push(reorder(body));
            }
            Err(reason) if request.lenient => records.push(json!({ "output": output, "skipped": reason })),
            Err(reason) => return Err(CliError::Validation(format!("{output}: {reason}"))),
        }
    }
    Ok(records)
}

/// `output` first, then the rest in insertion order.
fn reorder(body: Map<String, Value>) -> Value {
    let mut out = Map::new();
    out.insert("output".into(), body["output"].clone());
    out.extend(body.into_iter().filter(|(k, _)| k != "output"));
    Value::Object(out)
}

type Outcome = Result<Map<String, Value>, String>;

fn unit_record(inst: &Instance<Unit>, output: &str, request: &Request) -> Result<Outcome, CliError> {
    if !output.starts_with("choquet") {
        return ordinal_record(inst, output, request);
    }
    let v = inst.capacity.to_real();
    let f = inst.profile.to_real();
    let result = match output {
        "choquet" => {
            if let Some(i) = inst.profile.values().iter().position(|x| x.is_negative()) {
                return Ok(Err(format!("score of {} is negative", inst.players.name(i))));
            }
            choquet(&v, &f)
        }
        "choquet_sym" => choquet_symmetric(&v, &f),
        _ => choquet_asymmetric(&v, &f),
    }
    .map_err(|e| CliError::Validation(e.to_string()))?;
    let mut body = Map::new();
    body.insert("value".into(), json!(format_big_rational(&result)));
    body.insert("diagnostics".into(), json!({ "order": order(&inst.players, &inst.profile) }));
    Ok(Ok(body))
}

fn ordinal_record<S: Scale>(inst: &Instance<S>, output: &str, request: &Request) -> Result<Outcome, CliError> {
    let scale = inst.capacity.scale();
    let (v, f) = (&inst.capacity, &inst.profile);
    let show = |x: &ScaleValue<S::Mag>| json!(scale.format_value(x));
    let multiset = |mut xs: Vec<ScaleValue<S::Mag>>| {
        xs.sort();
        Value::Array(xs.iter().map(show).collect())
    };
    let invalid = |e: IntegralError| CliError::Validation(e.to_string());
    let mut body = Map::new();
    match output {
        "sugeno" => {
            if let Some(i) = f.values().iter().position(|x| x.is_negative()) {
                return Ok(Err(format!("score of {} is negative", inst.players.name(i))));
            }
            body.insert("value".into(), show(&sugeno(v, f).map_err(invalid)?));
            body.insert("diagnostics".into(), json!({ "order": order(&inst.players, f) }));
        }
        "sugeno_sym" => {
            let plus = sugeno(v, &f.positive_part()).map_err(invalid)?;
            let minus = sugeno(v, &f.negative_part()).map_err(invalid)?;
            body.insert("value".into(), show(&sugeno_symmetric(v, f).map_err(invalid)?));
            body.insert("diagnostics".into(), json!({ "positive_part": show(&plus), "negative_part": show(&minus) }));
        }
        "v1" => {
            let interval = ordinal_mobius_interval(v);
            let m = interval.representative(request.representative);
            body.insert("value".into(), show(&sugeno_variant1(m, f).map_err(invalid)?));
            body.insert(
                "diagnostics".into(),
                json!({
                    "representative": request.representative.to_string(),
                    "rule": AggregationRule::Angle.name(),
                    "terms": multiset(variant1_terms(m, f).map_err(invalid)?),
                }),
            );
        }
        "v2" | "v3" => {
            let (value, rule) = if output == "v2" {
                (sugeno_variant2(v, f), AggregationRule::Angle)
            } else {
                (sugeno_variant3(v, f), AggregationRule::Ceil)
            };
            let terms = sorted_terms(v, f).map_err(invalid)?;
            body.insert("value".into(), show(&value.map_err(invalid)?));
            body.insert(
                "diagnostics".into(),
                json!({
                    "order": order(&inst.players, f),
                    "p": terms.split,
                    "rule": rule.name(),
                    "terms": multiset(terms.all()),
                }),
            );
        }
        _ => {
            let interval = ordinal_mobius_interval(v);
            body.insert(
                "value".into(),
                json!({
                    "lower": table(&inst.players, scale, &interval.lower),
                    "upper": table(&inst.players, scale, &interval.upper),
                }),
            );
            let slack: Vec<_> = interval.slack().into_iter().map(|a| inst.players.subset(a)).collect();
            let mut diagnostics = Map::new();
            diagnostics.insert("slack".into(), json!(slack));
            match canonical_ordinal_mobius(&v.to_set_function(), request.rule) {
                Ok(canonical) => {
                    diagnostics.insert("rule".into(), json!(request.rule.name()));
                    diagnostics.insert("canonical".into(), table(&inst.players, scale, &canonical));
                    diagnostics.insert("canonical_is_solution".into(), json!(is_solution(&canonical, v, request.rule)));
                }
                Err(e) => {
                    diagnostics.insert("rule".into(), json!(request.rule.name()));
                    diagnostics.insert("canonical_unavailable".into(), json!(e.to_string()));
                }
            }
            body.insert("diagnostics".into(), Value::Object(diagnostics));
        }
    }
    Ok(Ok(body))
}

pub fn table<S: Scale>(players: &Players, scale: &S, g: &SetFunction<S::Mag>) -> Value {
    let entries = Coalition::all(g.n()).map(|a| (players.subset(a), json!(scale.format_value(&g.get(a)))));
    Value::Object(entries.collect())
}

fn order<M: Magnitude>(players: &Players, f: &Profile<M>) -> Vec<String> {
    f.ascending_order().into_iter().map(|i| players.name(i).to_string()).collect()
}
