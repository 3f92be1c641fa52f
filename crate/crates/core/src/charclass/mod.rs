//! Characteristic classes and Pontryagin numbers of `X_n^k(c)`.
//!
//! The total Chern class is `(1+x)^{n+1} (1+y)^k (1+y+cx)` and the total
//! Pontryagin class `(1+x^2)^{n+1} (1+y^2)^k (1+(y+cx)^2)`. Pontryagin roots
//! are therefore `x^2` (n+1 times), `y^2` (k times) and `(y+cx)^2` (once).

mod symmetric;
mod vector;

pub use symmetric::{functional_from_symmetric, power_sums, SymPoly, SymmetricKind};
pub use vector::{class_hp2, class_k3, class_x, product, CParam, PNumberVector};

use num_bigint::BigInt;

use crate::cohomring::{CohClass, RingParams};
use crate::error::{Error, Result};
use crate::exact::{binomial, PolyC, Rat};
use crate::partition::Partition;

/// Splits a class into its homogeneous parts `0..=max_degree` (x, y degree).
fn graded_parts(total: &CohClass, max_degree: u32, step: u32) -> Vec<CohClass> {
    (0..=max_degree)
        .map(|i| total.homogeneous_part(i * step))
        .collect()
}

fn y_plus_cx(params: RingParams) -> CohClass {
    &CohClass::y(params) + &CohClass::x(params).scale(&PolyC::c())
}

/// Chern classes `c_0, ..., c_{n+k}` (index = degree).
pub fn total_chern(params: RingParams) -> Vec<CohClass> {
    let one = CohClass::one(params);
    let total = &(&(&one + &CohClass::x(params)).pow(params.n + 1)
        * &(&one + &CohClass::y(params)).pow(params.k))
        * &(&one + &y_plus_cx(params));
    graded_parts(&total, params.complex_dim(), 1)
}

/// Pontryagin classes `p_0, ..., p_{floor((n+k)/2)}` (index = degree / 4).
pub fn total_pontryagin(params: RingParams) -> Vec<CohClass> {
    let roots = RootSystem::new(params);
    let one = CohClass::one(params);
    let total = roots
        .roots
        .iter()
        .fold(one.clone(), |acc, (r, mult)| &acc * &(&one + r).pow(*mult));
    graded_parts(&total, params.complex_dim() / 2, 2)
}

/// The Pontryagin roots of `X_n^k(c)` with multiplicities.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub params: RingParams,
    pub roots: Vec<(CohClass, u32)>,
}

impl RootSystem {
    pub fn new(params: RingParams) -> Self {
        let x = CohClass::x(params);
        let y = CohClass::y(params);
        let w = y_plus_cx(params);
        RootSystem {
            params,
            roots: vec![(&x * &x, params.n + 1), (&y * &y, params.k), (&w * &w, 1)],
        }
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

fn require_weight(params: RingParams) -> Result<u32> {
    params.weight().ok_or(Error::DimensionOdd {
        n: params.n,
        k: params.k,
    })
}

/// `<p_{λ1} ... p_{λr}, [X_n^k(c)]>` as a polynomial in `c`.
pub fn pontryagin_number(params: RingParams, lambda: &Partition) -> Result<PolyC> {
    let m = require_weight(params)?;
    if lambda.weight() != m {
        return Err(Error::WeightMismatch {
            expected: m,
            got: lambda.weight(),
        });
    }
    let classes = total_pontryagin(params);
    let product = lambda
        .parts()
        .iter()
        .fold(CohClass::one(params), |acc, &i| &acc * &classes[i as usize]);
    Ok(product.evaluate_top())
}

/// Milnor–Thom number `s_m = sum_i <r_i^m, [X]>` summed over the roots.
pub fn s_number(params: RingParams) -> Result<PolyC> {
    let m = require_weight(params)?;
    let roots = RootSystem::new(params);
    let sum = roots
        .roots
        .iter()
        .fold(CohClass::zero(params), |acc, (r, mult)| {
            &acc + &r.pow(m).scale(&PolyC::constant(rat_u32(*mult)))
        });
    Ok(sum.evaluate_top())
}

/// `q_m = sum_i sum_{j != i} <r_i r_j^{m-1}, [X]>` over individual roots.
pub fn q_number(params: RingParams) -> Result<PolyC> {
    let m = require_weight(params)?;
    if m < 2 {
        return Err(Error::Precondition("q_m needs m >= 2".into()));
    }
    let roots = RootSystem::new(params);
    let mut sum = CohClass::zero(params);
    for (a, (ra, mult_a)) in roots.roots.iter().enumerate() {
        for (b, (rb, mult_b)) in roots.roots.iter().enumerate() {
            // ordered pairs of distinct roots drawn from the two groups
            let pairs = if a == b {
                mult_a * (mult_a - 1)
            } else {
                mult_a * mult_b
            };
            if pairs == 0 {
                continue;
            }
            let term = ra * &rb.pow(m - 1);
            sum = &sum + &term.scale(&PolyC::constant(rat_u32(pairs)));
        }
    }
    Ok(sum.evaluate_top())
}

fn require_odd(params: RingParams, min: u32) -> Result<()> {
    if params.n % 2 == 0 || params.k % 2 == 0 || params.n < min || params.k < min {
        return Err(Error::BadParams(format!(
            "closed formula needs n, k odd and >= {min}, got n = {}, k = {}",
            params.n, params.k
        )));
    }
    Ok(())
}

fn big(n: u32) -> BigInt {
    BigInt::from(n)
}

/// `s_m(X_n^k(c)) = c^n [binom(k+n-1, n) - k]` for odd `n`, `k`.
pub fn s_closed_formula(params: RingParams) -> Result<PolyC> {
    require_odd(params, 1)?;
    let (n, k) = (params.n, params.k);
    let coeff = binomial((k + n - 1) as u64, n as u64) - big(k);
    Ok(PolyC::monomial(Rat::from_integer(coeff), n as usize))
}

/// `q_m(X_n^k(c)) = k [binom(n+k-3, n) - (k-1)] c^n
///                + (n+1) [binom(n+k-3, n-2) - k] c^{n-2}` for odd `n`, `k >= 3`.
pub fn q_closed_formula(params: RingParams) -> Result<PolyC> {
    require_odd(params, 3)?;
    let (n, k) = (params.n, params.k);
    let top = big(k) * (binomial((n + k - 3) as u64, n as u64) - big(k - 1));
    let low = big(n + 1) * (binomial((n + k - 3) as u64, (n - 2) as u64) - big(k));
    Ok(&PolyC::monomial(Rat::from_integer(top), n as usize)
        + &PolyC::monomial(Rat::from_integer(low), (n - 2) as usize))
}

/// `X_n^k(c)` is spin iff `n`, `k` are odd and `c` is even (for `n ≡ k mod 2`).
pub fn spin_check(params: RingParams, c_val: i64) -> Result<bool> {
    if params.n % 2 != params.k % 2 {
        return Err(Error::ParityMismatch {
            n: params.n,
            k: params.k,
        });
    }
    Ok(params.n % 2 == 1 && c_val % 2 == 0)
}

/// First Chern class coefficients `(coefficient of x, coefficient of y)`.
pub fn first_chern_coefficients(params: RingParams) -> (PolyC, PolyC) {
    let c1 = &total_chern(params)[1];
    let get = |e| c1.terms().get(&e).cloned().unwrap_or_default();
    (get((1, 0)), get((0, 1)))
}

/// Euler characteristic `<c_{n+k}, [X]>`.
pub fn euler_characteristic(params: RingParams) -> PolyC {
    total_chern(params)[params.complex_dim() as usize].evaluate_top()
}

fn rat_u32(n: u32) -> Rat {
    Rat::from_integer(big(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn params(n: u32, k: u32) -> RingParams {
        RingParams::new(n, k).unwrap()
    }

    #[test]
    fn first_chern_class() {
        let (cx, cy) = first_chern_coefficients(params(3, 3));
        assert_eq!(cx, PolyC::from_ints(&[4, 1]));
        assert_eq!(cy, PolyC::constant(int(4)));
        let (cx, cy) = first_chern_coefficients(params(5, 7));
        assert_eq!(cx, PolyC::from_ints(&[6, 1]));
        assert_eq!(cy, PolyC::constant(int(8)));
    }

    #[test]
    fn euler_characteristic_of_bundle() {
        for (n, k) in [(3, 3), (2, 4), (3, 5), (1, 1)] {
            assert_eq!(
                euler_characteristic(params(n, k)),
                PolyC::constant(int(((n + 1) * (k + 1)) as i64))
            );
        }
    }

    #[test]
    fn first_pontryagin_class() {
        for (n, k) in [(3, 3), (5, 3), (3, 7)] {
            let p = params(n, k);
            let p1 = &total_pontryagin(p)[1];
            let expected = CohClass::reduce(
                p,
                [
                    ((2, 0), PolyC::from_ints(&[(n + 1) as i64, 0, 1])),
                    ((0, 2), PolyC::constant(int((k + 1) as i64))),
                    ((1, 1), PolyC::from_ints(&[0, 2])),
                ],
            );
            assert_eq!(p1, &expected);
        }
    }

    #[test]
    fn pontryagin_class_at_c_zero_is_product() {
        let p = params(3, 5);
        let one = CohClass::one(p);
        let x2 = CohClass::x(p).pow(2);
        let y2 = CohClass::y(p).pow(2);
        let product = &(&one + &x2).pow(4) * &(&one + &y2).pow(6);
        let at_zero = |z: &CohClass| {
            CohClass::reduce(
                p,
                z.terms()
                    .iter()
                    .map(|(&e, c)| (e, PolyC::constant(c.eval_int(0)))),
            )
        };
        for (i, pi) in total_pontryagin(p).iter().enumerate() {
            assert_eq!(
                at_zero(pi),
                at_zero(&product.homogeneous_part(2 * i as u32)),
                "p_{i}"
            );
        }
    }

    #[test]
    fn s_numbers_from_roots() {
        assert_eq!(s_number(params(3, 5)).unwrap(), PolyC::monomial(int(30), 3));
        assert_eq!(s_number(params(5, 3)).unwrap(), PolyC::monomial(int(18), 5));
        assert_eq!(s_number(params(3, 3)).unwrap(), PolyC::monomial(int(7), 3));
    }

    #[test]
    fn s_closed_formula_values() {
        assert_eq!(s_closed_formula(params(3, 5)).unwrap(), PolyC::monomial(int(30), 3));
        assert_eq!(s_closed_formula(params(5, 3)).unwrap(), PolyC::monomial(int(18), 5));
        assert_eq!(s_closed_formula(params(3, 3)).unwrap(), PolyC::monomial(int(7), 3));
        assert!(s_closed_formula(params(2, 4)).is_err());
    }

    #[test]
    fn q_numbers() {
        let q53 = PolyC::from_ints(&[0, 0, 0, 42, 0, -3]);
        assert_eq!(q_number(params(5, 3)).unwrap(), q53);
        assert_eq!(q_closed_formula(params(5, 3)).unwrap(), q53);
        assert_eq!(q_number(params(3, 5)).unwrap(), PolyC::monomial(int(30), 3));
        assert_eq!(q_closed_formula(params(3, 5)).unwrap(), PolyC::monomial(int(30), 3));
        for k in [3, 5, 7, 9] {
            assert!(q_number(params(3, k)).unwrap().coeff(1) == int(0), "k = {k}");
        }
        assert!(q_number(params(1, 1)).is_err());
    }

    #[test]
    fn pontryagin_number_weight_check() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(matches!(
            pontryagin_number(params(3, 5), &lam),
            Err(Error::WeightMismatch { expected: 4, got: 3 })
        ));
        assert!(matches!(
            pontryagin_number(params(3, 4), &lam),
            Err(Error::DimensionOdd { .. })
        ));
    }

    #[test]
    fn spin_truth_table() {
        assert!(spin_check(params(3, 3), 2).unwrap());
        assert!(!spin_check(params(3, 3), 1).unwrap());
        assert!(spin_check(params(3, 5), 0).unwrap());
        assert!(!spin_check(params(2, 4), 2).unwrap());
        assert_eq!(
            spin_check(params(3, 4), 2),
            Err(Error::ParityMismatch { n: 3, k: 4 })
        );
    }
}
