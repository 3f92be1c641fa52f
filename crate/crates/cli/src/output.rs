//! JSON encodings. Rationals are strings `"p/q"` (or `"p"`), polynomials in
//! `c` are printed text plus a `power ↦ coefficient` map.

use std::collections::BTreeMap;

use pontryagin::bordism::{Basis, BordismElement, SplitPolicy};
use pontryagin::charclass::PNumberVector;
use pontryagin::exact::{PolyC, Rat};
use pontryagin::genus::GenusValue;
use pontryagin::partition::Partition;
use pontryagin::witness::{Status, WitnessReport};
use serde_json::{json, Map, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub fn poly_text(p: &PolyC) -> Value {
    Value::String(p.to_string())
}

/// `{"3": "30"}` for `30*c^3`; empty for zero.
pub fn poly_coeffs(p: &PolyC) -> Value {
    Value::Object(
        p.terms()
            .map(|(i, a)| (i.to_string(), rat(a)))
            .collect(),
    )
}

/// Inserts `key` as text and `key_coeffs` as a coefficient map.
pub fn put_poly(obj: &mut Map<String, Value>, key: &str, p: &PolyC) {
    obj.insert(key.into(), poly_text(p));
    obj.insert(format!("{key}_coeffs"), poly_coeffs(p));
}

pub fn genus_value(g: &GenusValue) -> Value {
    Value::String(g.to_string())
}

pub fn partition_map<'a>(
    entries: impl IntoIterator<Item = (&'a Partition, Value)>,
) -> Value {
    Value::Object(entries.into_iter().map(|(l, v)| (l.to_string(), v)).collect())
}

pub fn vector_numbers(v: &PNumberVector, obj: &mut Map<String, Value>) {
    obj.insert(
        "numbers".into(),
        partition_map(v.numbers.iter().map(|(l, p)| (l, poly_text(p)))),
    );
    obj.insert(
        "numbers_coeffs".into(),
        partition_map(v.numbers.iter().map(|(l, p)| (l, poly_coeffs(p)))),
    );
}

pub fn split_name(policy: SplitPolicy) -> &'static str {
    match policy {
        SplitPolicy::MinN => "min-n",
        SplitPolicy::MaxN => "max-n",
    }
}

pub fn basis(b: &Basis, max_m: u32) -> Value {
    let generators: Map<String, Value> = (1..=max_m)
        .map(|i| (i.to_string(), Value::String(b.generator(i).label(pontryagin::charclass::CParam::Symbolic))))
        .collect();
    json!({ "split": split_name(b.policy), "generators": generators })
}

pub fn element(e: &BordismElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .iter()
        .map(|(mono, a)| {
            json!({
                "monomial": mono.label(pontryagin::charclass::CParam::Value(e.c)),
                "indices": mono.index_partition().to_string(),
                "coeff": rat(a),
            })
        })
        .collect();
    json!({ "m": e.m, "c": e.c, "terms": terms })
}

pub fn witness_report(r: &WitnessReport, bound: &Rat) -> Value {
    let mut obj = Map::new();
    obj.insert("status".into(), Value::String(r.status.to_string()));
    obj.insert("m".into(), json!(r.m));
    obj.insert("basis".into(), basis(&r.basis, r.m.max(1)));
    if r.status == Status::Unbounded {
        let family = r.witness.as_ref().expect("unbounded reports carry a witness");
        obj.insert("witness".into(), Value::String(family.to_string()));
        obj.insert("spin".into(), json!(r.is_spin));
        obj.insert("nonneg_curved".into(), json!(r.nonneg_curved));
        let f = r.f_poly.as_ref().expect("unbounded reports carry f");
        obj.insert("f".into(), poly_text(f));
        obj.insert("f_coeffs".into(), poly_coeffs(f));
        if let Some(k) = &r.kernel_monomial {
            obj.insert("kernel_monomial".into(), Value::String(k.to_string()));
        }
        if let Some(e) = &r.elimination {
            obj.insert("elimination".into(), element(e));
        }
        obj.insert(
            "samples".into(),
            Value::Array(
                r.samples
                    .iter()
                    .map(|(c, v)| json!({ "c": c, "value": rat(v) }))
                    .collect(),
            ),
        );
        if let Some(cert) = &r.certificate {
            let mut c_obj = Map::new();
            c_obj.insert("start".into(), json!(cert.start));
            c_obj.insert("bound".into(), rat(bound));
            match cert.witness_c(bound) {
                Ok(c) => {
                    c_obj.insert("c".into(), json!(c));
                    c_obj.insert("value".into(), rat(&cert.f_poly.eval_int(c)));
                }
                Err(e) => {
                    c_obj.insert("error".into(), Value::String(e.to_string()));
                }
            }
            obj.insert("certificate".into(), Value::Object(c_obj));
        }
    }
    Value::Object(obj)
}

pub fn genus_poly(by_power: &BTreeMap<usize, GenusValue>) -> Value {
    Value::Object(
        by_power
            .iter()
            .map(|(j, g)| (j.to_string(), genus_value(g)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use pontryagin::exact::{int, rat as mk};

    #[test]
    fn rationals_and_polynomials() {
        assert_eq!(rat(&mk(-3, 6)), json!("-1/2"));
        assert_eq!(rat(&int(7)), json!("7"));
        let p = PolyC::from_ints(&[0, 0, 0, 42, 0, -3]);
        let mut obj = Map::new();
        put_poly(&mut obj, "q", &p);
        assert_eq!(
            Value::Object(obj),
            json!({ "q": "-3*c^5 + 42*c^3", "q_coeffs": { "3": "42", "5": "-3" } })
        );
    }
}
