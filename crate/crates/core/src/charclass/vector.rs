use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::total_pontryagin;
use crate::cohomring::{CohClass, RingParams};
use crate::error::{Error, Result};
use crate::exact::{int, PolyC};
use crate::partition::Partition;

/// The bundle parameter of an `X_n^k(c)`: left symbolic or fixed to an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CParam {
    Symbolic,
    Value(i64),
}

impl fmt::Display for CParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CParam::Symbolic => write!(f, "c"),
            CParam::Value(v) => write!(f, "{v}"),
        }
    }
}

/// All Pontryagin numbers of a closed oriented `4m`-manifold (or a family of
/// them depending polynomially on `c`), plus metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PNumberVector {
    pub m: u32,
    pub numbers: BTreeMap<Partition, PolyC>,
    pub is_spin: bool,
    pub nonneg_curved: bool,
    pub label: String,
}

impl PNumberVector {
    /// Builds a vector of constants; every partition of `m` must be present.
    pub fn from_constants(
        m: u32,
        entries: &[(&[u32], i64)],
        is_spin: bool,
        nonneg_curved: bool,
        label: &str,
    ) -> Result<Self> {
        let mut numbers = BTreeMap::new();
        for (parts, value) in entries {
            let lambda = Partition::new(parts.to_vec())?;
            if lambda.weight() != m {
                return Err(Error::WeightMismatch {
                    expected: m,
                    got: lambda.weight(),
                });
            }
            numbers.insert(lambda, PolyC::constant(int(*value)));
        }
        if numbers.len() != Partition::all(m).len() {
            return Err(Error::BadParams(format!("{label}: missing partitions of {m}")));
        }
        Ok(PNumberVector {
            m,
            numbers,
            is_spin,
            nonneg_curved,
            label: label.to_string(),
        })
    }

    /// The point, unit of the product.
    pub fn unit() -> Self {
        PNumberVector {
            m: 0,
            numbers: BTreeMap::from([(Partition::empty(), PolyC::one())]),
            is_spin: true,
            nonneg_curved: true,
            label: "pt".into(),
        }
    }

    pub fn get(&self, lambda: &Partition) -> PolyC {
        self.numbers.get(lambda).cloned().unwrap_or_default()
    }

    /// True when no entry depends on `c`.
    pub fn is_numeric(&self) -> bool {
        self.numbers.values().all(|p| p.degree().unwrap_or(0) == 0)
    }

    /// Substitutes a numeric `c` into every entry.
    pub fn eval_at(&self, c: i64) -> PNumberVector {
        PNumberVector {
            numbers: self
                .numbers
                .iter()
                .map(|(l, p)| (l.clone(), PolyC::constant(p.eval_int(c))))
                .collect(),
            ..self.clone()
        }
    }

    pub fn dimension(&self) -> u32 {
        4 * self.m
    }
}

type NumberTable = Arc<BTreeMap<Partition, PolyC>>;

fn symbolic_cache() -> &'static RwLock<HashMap<RingParams, NumberTable>> {
    static CACHE: OnceLock<RwLock<HashMap<RingParams, NumberTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All Pontryagin numbers of `X_n^k(c)` as polynomials in `c`, memoized.
fn symbolic_numbers(params: RingParams, m: u32) -> NumberTable {
    if let Some(t) = symbolic_cache().read().unwrap().get(&params) {
        return t.clone();
    }
    let classes = total_pontryagin(params);
    // products are built by extending the product for the partition minus its
    // smallest part, which has lower weight and so is already present
    let mut products: HashMap<Partition, CohClass> = HashMap::new();
    products.insert(Partition::empty(), CohClass::one(params));
    let mut table = BTreeMap::new();
    for w in 1..=m {
        for lambda in Partition::all(w) {
            let parts = lambda.parts();
            let (&last, rest) = parts.split_last().expect("nonempty partition");
            let prefix = Partition::new(rest.to_vec()).expect("positive parts");
            let class = &products[&prefix] * &classes[last as usize];
            if w == m {
                table.insert(lambda.clone(), class.evaluate_top());
            }
            products.insert(lambda, class);
        }
    }
    let table = Arc::new(table);
    symbolic_cache()
        .write()
        .unwrap()
        .insert(params, table.clone());
    table
}

/// Pontryagin-number vector of `X_n^k(c)` for odd `n, k >= 3`.
///
/// With a symbolic `c` the entries are polynomials and the vector stands for
/// the family over even `c`, so it is flagged spin.
pub fn class_x(params: RingParams, c: CParam) -> Result<PNumberVector> {
    let (n, k) = (params.n, params.k);
    if n % 2 == 0 || k % 2 == 0 || n < 3 || k < 3 {
        return Err(Error::BadParams(format!(
            "X({n},{k}): n and k must be odd and >= 3"
        )));
    }
    let m = (n + k) / 2;
    let table = symbolic_numbers(params, m);
    let label = format!("X({n},{k};{c})");
    let symbolic = PNumberVector {
        m,
        numbers: (*table).clone(),
        is_spin: true,
        nonneg_curved: true,
        label,
    };
    Ok(match c {
        CParam::Symbolic => symbolic,
        CParam::Value(v) => PNumberVector {
            is_spin: v % 2 == 0,
            ..symbolic.eval_at(v)
        },
    })
}

/// K3 surface: `p_1[K3] = 3 σ(K3) = -48`. Spin, but carries no metric of
/// nonnegative sectional curvature.
pub fn class_k3() -> PNumberVector {
    PNumberVector::from_constants(1, &[(&[1], -48)], true, false, "K3")
        .expect("K3 constants are well formed")
}

/// Quaternionic projective plane: `p_1^2 = 4`, `p_2 = 7` (from `σ = 1`,
/// `L_2 = (7 p_2 - p_1^2)/45`, and `Â = 0`, `Â_2 = (7 p_1^2 - 4 p_2)/5760`).
pub fn class_hp2() -> PNumberVector {
    PNumberVector::from_constants(2, &[(&[1, 1], 4), (&[2], 7)], true, true, "HP2")
        .expect("HP2 constants are well formed")
}

/// Ways to write `lambda` part-wise as `a + b` with `|a| = target`; each
/// choice is returned as the two sub-partitions (zero parts dropped).
fn splits(lambda: &Partition, target: u32) -> Vec<(Partition, Partition)> {
    fn go(
        parts: &[u32],
        target: u32,
        left: &mut Vec<u32>,
        right: &mut Vec<u32>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        let Some((&p, rest)) = parts.split_first() else {
            if target == 0 {
                let keep = |v: &Vec<u32>| {
                    Partition::new(v.iter().copied().filter(|&a| a > 0).collect())
                        .expect("positive parts")
                };
                out.push((keep(left), keep(right)));
            }
            return;
        };
        let remaining: u32 = rest.iter().sum();
        for a in 0..=p.min(target) {
            if target - a > remaining {
                continue;
            }
            left.push(a);
            right.push(p - a);
            go(rest, target - a, left, right, out);
            left.pop();
            right.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), target, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Pontryagin numbers of `M × N` from those of the factors, via
/// `p_i(M×N) = sum_{a+b=i} p_a(M) p_b(N)` paired in bidegree.
pub fn product(a: &PNumberVector, b: &PNumberVector) -> PNumberVector {
    let m = a.m + b.m;
    let numbers = Partition::all(m)
        .into_iter()
        .map(|lambda| {
            let mut value = PolyC::zero();
            for (la, lb) in splits(&lambda, a.m) {
                let (va, vb) = (a.get(&la), b.get(&lb));
                if !va.is_zero() && !vb.is_zero() {
                    value += &(&va * &vb);
                }
            }
            (lambda, value)
        })
        .collect();
    let label = match (a.m, b.m) {
        (0, _) => b.label.clone(),
        (_, 0) => a.label.clone(),
        _ => format!("{} * {}", a.label, b.label),
    };
    PNumberVector {
        m,
        numbers,
        is_spin: a.is_spin && b.is_spin,
        nonneg_curved: a.nonneg_curved && b.nonneg_curved,
        label,
    }
}
