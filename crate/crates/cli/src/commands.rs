use pontryagin::bordism::{decompose, rewrite_without_k3, Basis, SplitPolicy};
use pontryagin::exact::Rat;
use pontryagin::genus::genus_polynomial;
use pontryagin::partition::Partition;
use pontryagin::witness::{default_sample_count, even_samples, find_witness, PontryaginFunctional};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::expr::ManifoldExpr;
use crate::output;
use crate::spec::{functional_to_json, parse_functional, parse_partition};
use crate::suites::{self, Suite, VerifyConfig};

/// A JSON document and the process exit status that goes with it.
pub struct Outcome {
    pub doc: Value,
    pub exit_code: i32,
}

impl From<Value> for Outcome {
    fn from(doc: Value) -> Self {
        Outcome { doc, exit_code: 0 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct NumbersRequest {
    pub s: bool,
    pub q: bool,
    pub partitions: Vec<String>,
}

pub fn numbers(expr: &str, req: &NumbersRequest) -> CliResult<Value> {
    let e = ManifoldExpr::parse(expr)?;
    let v = e.vector()?;
    let mut obj = Map::new();
    obj.insert("manifold".into(), Value::String(e.to_string()));
    obj.insert("dimension".into(), json!(e.dimension()));
    obj.insert("m".into(), json!(v.m));
    obj.insert("spin".into(), json!(v.is_spin));
    obj.insert("nonneg_curved".into(), json!(v.nonneg_curved));
    let mut warnings = Vec::new();
    for (n, k, c) in e.numeric_x_factors() {
        if c % 2 != 0 {
            warnings.push(format!("X({n},{k};{c}) is not spin: c is odd"));
        }
    }
    if !v.nonneg_curved {
        warnings.push("a K3 factor admits no metric of nonnegative sectional curvature".to_string());
    }
    obj.insert("warnings".into(), json!(warnings));

    let everything = !req.s && !req.q && req.partitions.is_empty();
    if req.s {
        output::put_poly(&mut obj, "s", &PontryaginFunctional::s(v.m)?.apply(&v)?);
    }
    if req.q {
        output::put_poly(&mut obj, "q", &PontryaginFunctional::q(v.m)?.apply(&v)?);
    }
    if !req.partitions.is_empty() {
        let mut values = Map::new();
        let mut coeffs = Map::new();
        for raw in &req.partitions {
            let lambda = parse_partition(raw).ok_or_else(|| {
                CliError::Usage(format!("--partition {raw}: expected a list like [1,1]"))
            })?;
            if lambda.weight() != v.m {
                return Err(CliError::Usage(format!(
                    "--partition {lambda}: weight {} but the manifold has m = {}",
                    lambda.weight(),
                    v.m
                )));
            }
            let p = v.get(&lambda);
            values.insert(lambda.to_string(), output::poly_text(&p));
            coeffs.insert(lambda.to_string(), output::poly_coeffs(&p));
        }
        obj.insert("p".into(), Value::Object(values));
        obj.insert("p_coeffs".into(), Value::Object(coeffs));
    }
    if everything {
        output::vector_numbers(&v, &mut obj);
        obj.insert("elliptic_genus".into(), output::genus_poly(&genus_polynomial(&v)));
    }
    Ok(Value::Object(obj))
}

pub fn verify(suite: Suite, cfg: &VerifyConfig) -> Outcome {
    let checks = suites::run(suite, cfg);
    let exit_code = if checks.iter().all(|c| c.pass) { 0 } else { 1 };
    Outcome {
        doc: suites::report(suite, &checks),
        exit_code,
    }
}

pub fn decompose_expr(expr: &str, c: i64, policy: SplitPolicy, no_k3: bool) -> CliResult<Value> {
    let e = ManifoldExpr::parse(expr)?;
    let v = e.vector()?.eval_at(c);
    let basis = Basis::new(policy);
    let element = decompose(&v, &basis, c)?;
    let mut doc = json!({
        "manifold": e.to_string(),
        "c": c,
        "basis": output::basis(&basis, v.m.max(1)),
        "decomposition": output::element(&element),
    });
    if no_k3 {
        doc["k3_free"] = output::element(&rewrite_without_k3(&element, &basis)?);
    }
    Ok(doc)
}

pub fn witness(
    spec_text: &str,
    policy: SplitPolicy,
    samples: Option<Vec<i64>>,
    bound: &Rat,
) -> CliResult<Value> {
    let f = parse_functional(spec_text)?;
    let samples = samples.unwrap_or_else(|| even_samples(default_sample_count(f.m)));
    let report = find_witness(&f, &Basis::new(policy), &samples)?;
    Ok(output::witness_report(&report, bound))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalKind {
    S,
    Q,
    L,
    AHat,
}

pub fn functional(kind: FunctionalKind, m: u32) -> CliResult<Value> {
    if m == 0 {
        return Err(CliError::Usage("--m must be at least 1".into()));
    }
    let f = match kind {
        FunctionalKind::S => PontryaginFunctional::s(m)?,
        FunctionalKind::Q => PontryaginFunctional::q(m)?,
        FunctionalKind::L => PontryaginFunctional::l_genus(m),
        FunctionalKind::AHat => PontryaginFunctional::a_hat(m),
    };
    Ok(functional_to_json(&f))
}

/// `"3..5"` or `"4"`.
pub fn parse_m_range(s: &str) -> CliResult<std::ops::RangeInclusive<u32>> {
    let bad = || CliError::Usage(format!("--m {s}: expected a range like 3..5"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo < 3 || hi < lo {
        return Err(CliError::Usage(format!("--m {s}: need 3 <= lo <= hi")));
    }
    Ok(lo..=hi)
}

/// `"p11,p2"`: replacement values for the HP2 Pontryagin numbers.
pub fn parse_hp2_override(s: &str) -> CliResult<pontryagin::charclass::PNumberVector> {
    let bad = || CliError::Usage(format!("--hp2-override {s}: expected two integers"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    let one_one = Partition::new(vec![1, 1]).expect("valid");
    let mut v = pontryagin::charclass::class_hp2();
    v.numbers.insert(one_one, pontryagin::exact::PolyC::from_ints(&[a]));
    v.numbers.insert(Partition::single(2), pontryagin::exact::PolyC::from_ints(&[b]));
    v.label = "HP2 (override)".into();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_of_x35() {
        let req = NumbersRequest { s: true, ..Default::default() };
        let doc = numbers("X(3,5;c)", &req).unwrap();
        assert_eq!(doc["s"], json!("30*c^3"));
        assert_eq!(doc["s_coeffs"], json!({ "3": "30" }));
    }

    #[test]
    fn odd_c_warns() {
        let doc = numbers("X(3,3;1)", &NumbersRequest::default()).unwrap();
        assert_eq!(doc["spin"], json!(false));
        assert_eq!(doc["warnings"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_m_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_m_range("4").unwrap(), 4..=4);
        assert!(parse_m_range("5..3").is_err());
        assert!(parse_m_range("1..3").is_err());
    }
}
