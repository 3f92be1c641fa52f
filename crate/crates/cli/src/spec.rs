//! Functional spec files: `{"m": 4, "entries": {"[4]": "1", "[3,1]": "-2/3"}}`.
//! Entry values may be strings `"p/q"` or JSON integers; missing partitions
//! have coefficient zero.

use std::collections::BTreeMap;
use std::str::FromStr;

use pontryagin::exact::Rat;
use pontryagin::partition::Partition;
use pontryagin::witness::PontryaginFunctional;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::output;

pub fn parse_partition(key: &str) -> Option<Partition> {
    let inner = key.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Partition::empty());
    }
    let parts: Option<Vec<u32>> = inner.split(',').map(|s| s.trim().parse().ok()).collect();
    Partition::new(parts?).ok()
}

fn parse_rat(v: &Value) -> Option<Rat> {
    match v {
        Value::String(s) => Rat::from_str(s.trim()).ok(),
        Value::Number(n) => n.as_i64().map(|i| Rat::from_integer(i.into())),
        _ => None,
    }
}

pub fn parse_functional(text: &str) -> CliResult<PontryaginFunctional> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| CliError::Spec(format!("not valid JSON: {e}")))?;
    let m = doc
        .get("m")
        .and_then(Value::as_u64)
        .filter(|&m| m >= 1 && m <= u32::MAX as u64)
        .ok_or_else(|| CliError::Spec("\"m\" must be a positive integer".into()))? as u32;
    let entries = doc
        .get("entries")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::Spec("\"entries\" must be an object".into()))?;
    let mut coefficients = BTreeMap::new();
    for (key, value) in entries {
        let lambda = parse_partition(key)
            .ok_or_else(|| CliError::Spec(format!("entry \"{key}\": not a partition like [3,1]")))?;
        if lambda.weight() != m {
            return Err(CliError::Spec(format!(
                "entry \"{key}\": weight {} does not match m = {m}",
                lambda.weight()
            )));
        }
        let a = parse_rat(value)
            .ok_or_else(|| CliError::Spec(format!("entry \"{key}\": {value} is not a rational \"p/q\"")))?;
        if coefficients.insert(lambda, a).is_some() {
            return Err(CliError::Spec(format!("entry \"{key}\": duplicate partition")));
        }
    }
    Ok(PontryaginFunctional::new(m, coefficients)?)
}

/// Every partition of `m`, zeros included, in canonical order.
pub fn functional_to_json(f: &PontryaginFunctional) -> Value {
    let entries: Map<String, Value> = Partition::all(f.m)
        .iter()
        .map(|l| {
            let a = f.coefficients().get(l).cloned().unwrap_or_default();
            (l.to_string(), output::rat(&a))
        })
        .collect();
    json!({ "m": f.m, "entries": entries })
}
