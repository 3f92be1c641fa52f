//! The universal elliptic genus `φ: Ω_* -> Q[δ, ε]` and its specializations.
//!
//! The genus is fixed by its logarithm
//! `g(u) = ∫_0^u dt / sqrt(1 - 2δ t^2 + ε t^4)`. With `f = g^{-1}` the
//! characteristic series is `Q(x) = x / f(x)`, an even series, and
//! `φ(M) = <prod_i Q(x_i), [M]>` over the formal roots `x_i^2` of the
//! Pontryagin class. `(δ, ε) = (1, 1)` gives the signature, `(-1/8, 0)` the
//! Â-genus.

mod series;
mod value;

pub use series::SeriesQ;
pub use value::GenusValue;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::charclass::{power_sums, PNumberVector, SymPoly};
use crate::error::{Error, Result};
use crate::exact::{factorial, int, rat, Rat};
use crate::partition::Partition;

/// Coefficients `K_λ` with `φ(M) = sum_λ K_λ p_λ[M]` in one weight.
pub type MultiplicativeSequence = BTreeMap<Partition, GenusValue>;

/// `g(u)` through `u^order`.
pub fn elliptic_log_series(order: usize) -> SeriesQ {
    assert!(order >= 1, "series order must be at least 1");
    // integrand (1 + w)^{-1/2} with w = -2δ t^2 + ε t^4
    let w = SeriesQ::new(
        order,
        vec![
            GenusValue::zero(),
            GenusValue::zero(),
            GenusValue::delta().scale(&int(-2)),
            GenusValue::zero(),
            GenusValue::epsilon(),
        ],
    );
    let mut integrand = SeriesQ::one(order);
    let mut w_power = SeriesQ::one(order);
    let mut binom = Rat::from(int(1));
    for j in 1..=order / 2 {
        // binom(-1/2, j) = binom(-1/2, j-1) * (-1/2 - (j-1)) / j
        binom = binom * (rat(-1, 2) - int(j as i64 - 1)) / int(j as i64);
        w_power = w_power.mul(&w);
        integrand = integrand.add(&w_power.scale(&binom));
    }
    let mut coeffs = vec![GenusValue::zero()];
    for i in 0..order {
        coeffs.push(integrand.coeff(i).scale(&rat(1, i as i64 + 1)));
    }
    SeriesQ::new(order, coeffs)
}

/// Characteristic series `Q(x) = x / g^{-1}(x)` written in `z = x^2`.
pub fn characteristic_series(log: &SeriesQ) -> Result<SeriesQ> {
    let inverse = log.reversion()?;
    let q_in_x = inverse.shift_down().reciprocal()?;
    let half = q_in_x.order() / 2;
    Ok(SeriesQ::new(
        half,
        (0..=half).map(|j| q_in_x.coeff(2 * j)).collect(),
    ))
}

/// `K_λ` for all partitions of `m`.
///
/// With `ln Q(z) = sum_j a_j z^j`, `prod_i Q(z_i) = exp(sum_j a_j N_j)` where
/// `N_j` are power sums of the Pontryagin roots; the weight-`m` part is
/// `sum_{μ ⊢ m} (prod_i a_{μ_i} / prod_k mult_k!) N_μ`, and each `N_μ` is
/// rewritten in Pontryagin classes by Newton's identities.
pub fn multiplicative_sequence(log: &SeriesQ, m: u32) -> Result<MultiplicativeSequence> {
    let needed = 2 * m as usize + 1;
    if log.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            got: log.order(),
        });
    }
    let log_q = characteristic_series(&log.truncate(needed))?.ln()?;
    let sums = power_sums(m);
    let mut out: MultiplicativeSequence = Partition::all(m)
        .into_iter()
        .map(|l| (l, GenusValue::zero()))
        .collect();
    for mu in Partition::all(m) {
        let mut weight = GenusValue::one();
        for &part in mu.parts() {
            weight = &weight * &log_q.coeff(part as usize);
        }
        let denominator = mu
            .multiplicities()
            .values()
            .fold(num_bigint::BigInt::from(1), |acc, &k| acc * factorial(k as u64));
        let weight = weight.scale(&Rat::new(1.into(), denominator));
        if weight.is_zero() {
            continue;
        }
        let n_mu = mu
            .parts()
            .iter()
            .fold(SymPoly::one(), |acc, &p| &acc * &sums[p as usize]);
        for (lambda, a) in n_mu.terms() {
            let slot = out.get_mut(lambda).expect("weight-m partition");
            *slot = &*slot + &weight.scale(a);
        }
    }
    Ok(out)
}

fn sequence_cache() -> &'static RwLock<HashMap<u32, Arc<MultiplicativeSequence>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<MultiplicativeSequence>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The elliptic multiplicative sequence in weight `m`, memoized.
pub fn elliptic_sequence(m: u32) -> Arc<MultiplicativeSequence> {
    if let Some(k) = sequence_cache().read().unwrap().get(&m) {
        return k.clone();
    }
    let log = elliptic_log_series(2 * m as usize + 1);
    let k = Arc::new(multiplicative_sequence(&log, m).expect("order matches weight"));
    sequence_cache().write().unwrap().insert(m, k.clone());
    k
}

/// The sequence specialized at numeric `(δ, ε)`: a Pontryagin-number functional.
pub fn specialized_sequence(m: u32, delta: &Rat, epsilon: &Rat) -> BTreeMap<Partition, Rat> {
    elliptic_sequence(m)
        .iter()
        .map(|(l, g)| (l.clone(), g.specialize(delta, epsilon)))
        .collect()
}

/// L-genus (signature) coefficients in weight `m`.
pub fn l_genus_coefficients(m: u32) -> BTreeMap<Partition, Rat> {
    specialized_sequence(m, &int(1), &int(1))
}

/// Â-genus coefficients in weight `m`.
pub fn a_hat_coefficients(m: u32) -> BTreeMap<Partition, Rat> {
    specialized_sequence(m, &rat(-1, 8), &int(0))
}

/// `φ(v)`. Entries depending on `c` need a value for `c`.
pub fn genus_of(v: &PNumberVector, c: Option<i64>) -> Result<GenusValue> {
    let k = elliptic_sequence(v.m);
    let mut out = GenusValue::zero();
    for (lambda, coeff) in k.iter() {
        let entry = v.get(lambda);
        let value = match (entry.as_constant(), c) {
            (Some(r), _) => r,
            (None, Some(c)) => entry.eval_int(c),
            (None, None) => return Err(Error::SymbolicC),
        };
        if !value.is_zero() {
            out = &out + &coeff.scale(&value);
        }
    }
    Ok(out)
}

/// `φ(v)` for a vector depending on `c`, as `c^j ↦ coefficient`; powers with
/// zero coefficient are omitted.
pub fn genus_polynomial(v: &PNumberVector) -> BTreeMap<usize, GenusValue> {
    let k = elliptic_sequence(v.m);
    let top = v.numbers.values().filter_map(|p| p.degree()).max().unwrap_or(0);
    let mut out = BTreeMap::new();
    for j in 0..=top {
        let mut acc = GenusValue::zero();
        for (lambda, coeff) in k.iter() {
            let a = v.get(lambda).coeff(j);
            if !a.is_zero() {
                acc = &acc + &coeff.scale(&a);
            }
        }
        if !acc.is_zero() {
            out.insert(j, acc);
        }
    }
    out
}

pub fn specialize(g: &GenusValue, delta: &Rat, epsilon: &Rat) -> Rat {
    g.specialize(delta, epsilon)
}

/// True when `φ(v)` vanishes at every sampled `c` (once, if `v` is numeric).
pub fn is_in_elliptic_kernel(v: &PNumberVector, c_samples: &[i64]) -> Result<bool> {
    if v.is_numeric() {
        return Ok(genus_of(v, None)?.is_zero());
    }
    if c_samples.is_empty() {
        return Err(Error::InsufficientSamples { needed: 1, got: 0 });
    }
    for &c in c_samples {
        if !genus_of(v, Some(c))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
