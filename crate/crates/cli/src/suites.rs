//! Verification suites over parameter grids. Each check records its
//! parameters and, on failure, the values that disagreed.

use std::ops::RangeInclusive;

use pontryagin::bordism::{
    decompose, eliminate_k3, monomial_vector, thom_matrix, Basis, BordismElement, Factor,
    Monomial, SplitPolicy,
};
use pontryagin::charclass::{
    class_hp2, class_k3, class_x, q_closed_formula, q_number, s_closed_formula, s_number,
    spin_check, CParam, PNumberVector,
};
use pontryagin::cohomring::{intersection_signature, RingParams};
use pontryagin::exact::{int, interpolate, rat, PolyC, Rat, RatMatrix};
use pontryagin::genus::{genus_of, genus_polynomial, GenusValue};
use pontryagin::partition::Partition;
use pontryagin::witness::{even_samples, find_witness, PontryaginFunctional, Status};
use pontryagin::Error;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Formulas,
    GenusKernel,
    NoK3,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::GenusKernel => "genus-kernel",
            Suite::NoK3 => "nok3",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl Check {
    fn new(suite: &'static str, name: &str, params: Value, failure: Option<Value>) -> Check {
        Check {
            suite,
            name: name.into(),
            params,
            pass: failure.is_none(),
            counterexample: failure,
        }
    }

    fn from_result(
        suite: &'static str,
        name: &str,
        params: Value,
        r: Result<Option<Value>, Error>,
    ) -> Check {
        let failure = r.unwrap_or_else(|e| Some(json!({ "error": e.to_string() })));
        Check::new(suite, name, params, failure)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "suite": self.suite,
            "check": self.name,
            "params": self.params,
            "pass": self.pass,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.clone();
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Bound on the complex dimension `n + k` of the grid manifolds.
    pub max_dim: u32,
    pub c_values: Vec<i64>,
    pub m_range: RangeInclusive<u32>,
    pub k3: PNumberVector,
    pub hp2: PNumberVector,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_dim: 24,
            c_values: vec![2],
            m_range: 3..=5,
            k3: class_k3(),
            hp2: class_hp2(),
        }
    }
}

/// Odd `n, k >= 3` with `n + k <= max_dim`.
pub fn grid(max_dim: u32) -> Vec<RingParams> {
    let mut out = Vec::new();
    for n in (3..max_dim.saturating_sub(2)).step_by(2) {
        for k in (3..=max_dim - n).step_by(2) {
            out.push(RingParams { n, k });
        }
    }
    out
}

type Task<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut tasks: Vec<Task> = Vec::new();
    if matches!(suite, Suite::Formulas | Suite::All) {
        formula_tasks(cfg, &mut tasks);
    }
    if matches!(suite, Suite::GenusKernel | Suite::All) {
        genus_tasks(cfg, &mut tasks);
    }
    if matches!(suite, Suite::NoK3 | Suite::All) {
        nok3_tasks(cfg, &mut tasks);
    }
    tasks.par_iter().flat_map_iter(|t| t()).collect()
}

pub fn report(suite: Suite, checks: &[Check]) -> Value {
    let failed = checks.iter().filter(|c| !c.pass).count();
    json!({
        "command": "verify",
        "suite": suite.name(),
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>(),
    })
}

fn nk(p: RingParams) -> Value {
    json!({ "n": p.n, "k": p.k })
}

fn polys(pairs: &[(&str, &PolyC)]) -> Value {
    Value::Object(
        pairs
            .iter()
            .map(|(k, p)| (k.to_string(), output::poly_text(p)))
            .collect(),
    )
}

const FORMULAS: &str = "formulas";
const GENUS: &str = "genus-kernel";
const NOK3: &str = "nok3";

fn three_way(
    p: RingParams,
    kind: &str,
    roots: PolyC,
    closed: PolyC,
    functional: PolyC,
) -> Option<Value> {
    (roots != closed || closed != functional).then(|| {
        polys(&[
            (&format!("{kind}_roots"), &roots),
            (&format!("{kind}_closed"), &closed),
            (&format!("{kind}_functional"), &functional),
        ])
    })
    .map(|mut v| {
        v["n"] = json!(p.n);
        v["k"] = json!(p.k);
        v
    })
}

fn formula_tasks<'a>(cfg: &'a VerifyConfig, tasks: &mut Vec<Task<'a>>) {
    for p in grid(cfg.max_dim) {
        tasks.push(Box::new(move || {
            let m = p.weight().expect("n + k even");
            let mut out = Vec::new();
            let x = class_x(p, CParam::Symbolic);
            out.push(Check::from_result(FORMULAS, "s_three_way", nk(p), (|| {
                let f = PontryaginFunctional::s(m)?.apply(x.as_ref().map_err(Clone::clone)?)?;
                Ok(three_way(p, "s", s_number(p)?, s_closed_formula(p)?, f))
            })()));
            out.push(Check::from_result(FORMULAS, "q_three_way", nk(p), (|| {
                let f = PontryaginFunctional::q(m)?.apply(x.as_ref().map_err(Clone::clone)?)?;
                Ok(three_way(p, "q", q_number(p)?, q_closed_formula(p)?, f))
            })()));
            if p.n == 3 {
                out.push(Check::from_result(FORMULAS, "q_linear_term_vanishes", nk(p), (|| {
                    let q = q_number(p)?;
                    Ok((!q.coeff(1).is_zero()).then(|| polys(&[("q", &q)])))
                })()));
            }
            out.push(Check::from_result(FORMULAS, "numbers_odd_degree_le_n", nk(p), (|| {
                let v = x.as_ref().map_err(Clone::clone)?;
                let bad: Vec<(&Partition, &PolyC)> = v
                    .numbers
                    .iter()
                    .filter(|(_, q)| !q.is_odd() || q.degree().unwrap_or(0) > p.n as usize)
                    .collect();
                Ok((!bad.is_empty()).then(|| {
                    output::partition_map(bad.into_iter().map(|(l, q)| (l, output::poly_text(q))))
                }))
            })()));
            out
        }));
    }
    tasks.push(Box::new(|| {
        let mut out = Vec::new();
        for n in 1..=6u32 {
            for k in 1..=6u32 {
                let mut mismatches = Vec::new();
                for c in -4..=4i64 {
                    let got = spin_check(RingParams { n, k }, c);
                    let expected = if n % 2 != k % 2 {
                        Err(Error::ParityMismatch { n, k })
                    } else {
                        Ok(n % 2 == 1 && c % 2 == 0)
                    };
                    if got != expected {
                        mismatches.push(json!({
                            "c": c,
                            "expected": format!("{expected:?}"),
                            "got": format!("{got:?}"),
                        }));
                    }
                }
                let failure = (!mismatches.is_empty()).then(|| Value::Array(mismatches));
                out.push(Check::new(FORMULAS, "spin_truth_table", json!({ "n": n, "k": k }), failure));
            }
        }
        out
    }));
}

/// `-E8 ⊕ -E8 ⊕ H ⊕ H ⊕ H`, the intersection lattice of K3.
pub fn k3_lattice() -> RatMatrix {
    const E8: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    let mut g = RatMatrix::zeros(22, 22);
    for block in 0..2 {
        let o = 8 * block;
        for i in 0..8 {
            g[(o + i, o + i)] = int(-2);
        }
        for &(i, j) in &E8 {
            g[(o + i, o + j)] = int(1);
            g[(o + j, o + i)] = int(1);
        }
    }
    for h in 0..3 {
        let o = 16 + 2 * h;
        g[(o, o + 1)] = int(1);
        g[(o + 1, o)] = int(1);
    }
    g
}

fn genus_tasks<'a>(cfg: &'a VerifyConfig, tasks: &mut Vec<Task<'a>>) {
    for p in grid(cfg.max_dim) {
        tasks.push(Box::new(move || {
            let mut out = Vec::new();
            out.push(Check::from_result(GENUS, "elliptic_genus_vanishes_symbolic", nk(p), (|| {
                let g = genus_polynomial(&class_x(p, CParam::Symbolic)?);
                Ok((!g.is_empty()).then(|| json!({ "phi_by_c_power": output::genus_poly(&g) })))
            })()));
            for &c in &cfg.c_values {
                let params = json!({ "n": p.n, "k": p.k, "c": c });
                out.push(Check::from_result(GENUS, "elliptic_genus_vanishes", params, (|| {
                    let g = genus_of(&class_x(p, CParam::Value(c))?, None)?;
                    Ok((!g.is_zero()).then(|| json!({ "phi": output::genus_value(&g) })))
                })()));
            }
            out
        }));
    }
    tasks.push(Box::new(move || {
        let mut out = Vec::new();
        let expect_genus = |label: &str, v: &PNumberVector, expected: GenusValue| {
            let r = genus_of(v, None).map(|g| {
                (g != expected).then(|| {
                    json!({ "manifold": label, "expected": output::genus_value(&expected), "got": output::genus_value(&g) })
                })
            });
            Check::from_result(GENUS, "elliptic_genus_normalization", json!({ "manifold": label }), r)
        };
        out.push(expect_genus("K3", &cfg.k3, GenusValue::delta().scale(&int(-16))));
        out.push(expect_genus("HP2", &cfg.hp2, GenusValue::epsilon()));

        let one = int(1);
        let specialized = |label: &str, name: &str, v: &PNumberVector, d: &Rat, e: &Rat, expected: Rat| {
            let r = genus_of(v, None).map(|g| {
                let got = g.specialize(d, e);
                (got != expected).then(|| {
                    json!({ "manifold": label, "expected": output::rat(&expected), "got": output::rat(&got) })
                })
            });
            Check::from_result(GENUS, name, json!({ "manifold": label }), r)
        };
        let k3_signature = k3_lattice().inertia().map(|i| i.signature()).unwrap_or(0);
        out.push(specialized("K3", "signature_matches_intersection_form", &cfg.k3, &one, &one, int(k3_signature)));
        // H^4(HP^2) is generated by u with <u^2, [HP^2]> = 1
        out.push(specialized("HP2", "signature_matches_intersection_form", &cfg.hp2, &one, &one, int(1)));
        out.push(specialized("K3", "a_hat_value", &cfg.k3, &rat(-1, 8), &int(0), int(2)));
        out.push(specialized("HP2", "a_hat_value", &cfg.hp2, &rat(-1, 8), &int(0), int(0)));
        for (n, k) in [(3, 3), (3, 5)] {
            let p = RingParams { n, k };
            let label = format!("X({n},{k};2)");
            let r = (|| {
                let sig = intersection_signature(p, 2)?;
                let got = genus_of(&class_x(p, CParam::Value(2))?, None)?.specialize(&one, &one);
                Ok((got != int(sig)).then(|| {
                    json!({ "manifold": label, "expected": sig, "got": output::rat(&got) })
                }))
            })();
            out.push(Check::from_result(GENUS, "signature_matches_intersection_form", json!({ "manifold": label }), r));
        }
        out
    }));
}

fn x(n: u32, k: u32) -> Factor {
    Factor::X { n, k }
}

/// `Y(c) = 3c^2 X(3,5;c) - 5 X(5,3;c)` at numeric `c`.
pub fn base_case_element(c: i64) -> BordismElement {
    let mut y = BordismElement::zero(4, c);
    y.add_term(Monomial::new(vec![x(3, 5)]), int(3 * c * c));
    y.add_term(Monomial::new(vec![x(5, 3)]), int(-5));
    y
}

fn nok3_tasks<'a>(cfg: &'a VerifyConfig, tasks: &mut Vec<Task<'a>>) {
    tasks.push(Box::new(|| {
        let r = (|| {
            let q4 = PontryaginFunctional::q(4)?;
            let mut points = Vec::new();
            for c in even_samples(8) {
                points.push((int(c), q4.apply(&base_case_element(c).vector())?.eval_int(c)));
            }
            let got = interpolate(&points, 5)?;
            let expected = PolyC::from_ints(&[0, 0, 0, -210, 0, 105]);
            Ok((got != expected).then(|| polys(&[("expected", &expected), ("got", &got)])))
        })();
        vec![Check::from_result(NOK3, "base_case_q4", json!({ "samples": 8 }), r)]
    }));
    for &c in &cfg.c_values {
        tasks.push(Box::new(move || {
            let r = (|| {
                let basis = Basis::default();
                let d = decompose(&base_case_element(c).vector(), &basis, c)?;
                let target = Monomial::new(vec![Factor::K3, x(3, 3)]);
                let ok = d.terms().len() == 1 && !d.coeff(&target).is_zero();
                Ok((!ok).then(|| output::element(&d)))
            })();
            vec![Check::from_result(NOK3, "base_case_decomposition", json!({ "c": c }), r)]
        }));
        for m in cfg.m_range.clone() {
            tasks.push(Box::new(move || {
                let params = json!({ "m": m, "c": c });
                let r = (|| {
                    let basis = Basis::default();
                    let mono = Monomial::new(vec![Factor::K3, basis.generator(m)]);
                    let out = eliminate_k3(&mono, &basis, c)?;
                    let same = out.vector().numbers == monomial_vector(&mono, c).numbers;
                    let k3_free = !out.contains_k3();
                    let genus = out.genus()?;
                    Ok((!same || !k3_free || !genus.is_zero()).then(|| {
                        json!({
                            "same_numbers": same,
                            "k3_free": k3_free,
                            "phi": output::genus_value(&genus),
                            "result": output::element(&out),
                        })
                    }))
                })();
                vec![Check::from_result(NOK3, "eliminate_k3", params, r)]
            }));
        }
        let max_m = cfg.m_range.end() + 1;
        for policy in [SplitPolicy::MinN, SplitPolicy::MaxN] {
            tasks.push(Box::new(move || {
                let basis = Basis::new(policy);
                (1..=max_m)
                    .map(|m| {
                        let params = json!({ "m": m, "c": c, "split": output::split_name(policy) });
                        let r = thom_matrix(m, &basis, c).map(|_| None);
                        Check::from_result(NOK3, "thom_matrix_nonsingular", params, r)
                    })
                    .collect()
            }));
        }
    }
    tasks.push(Box::new(|| {
        let samples = even_samples(8);
        let basis = Basis::default();
        let mut out = Vec::new();
        let r = (|| {
            let report = find_witness(&PontryaginFunctional::s(4)?, &basis, &samples)?;
            let bound = int(1_000_000);
            let cert_c = match &report.certificate {
                Some(cert) => Some(cert.witness_c(&bound)?),
                None => None,
            };
            let f_ok = report
                .f_poly
                .as_ref()
                .is_some_and(|f| f.is_odd() && f.degree().unwrap_or(0) >= 1);
            let cert_ok = match (&report.f_poly, cert_c) {
                (Some(f), Some(c)) => c % 2 == 0 && f.eval_int(c).abs() > bound,
                _ => false,
            };
            let ok = report.status == Status::Unbounded
                && f_ok
                && cert_ok
                && report.is_spin
                && report.nonneg_curved;
            Ok((!ok).then(|| output::witness_report(&report, &bound)))
        })();
        out.push(Check::from_result(NOK3, "s4_unbounded", json!({ "m": 4 }), r));
        for (name, f) in [
            ("l_genus_factors", PontryaginFunctional::l_genus(4)),
            ("a_hat_factors", PontryaginFunctional::a_hat(2)),
        ] {
            let r = find_witness(&f, &basis, &samples).map(|report| {
                (report.status != Status::FactorsThroughEllipticGenus)
                    .then(|| output::witness_report(&report, &int(1_000_000)))
            });
            out.push(Check::from_result(NOK3, name, json!({ "m": f.m }), r));
        }
        out
    }));
}
