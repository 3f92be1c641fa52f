//! The cohomology ring of `X_n^k(c)`: `Q[c][x, y] / (x^{n+1}, y^{k+1} + c x y^k)`.
//!
//! `x` is pulled back from the base `CP^n` and `y` is the first Chern class of
//! the fibrewise hyperplane bundle; both have degree 2. Coefficients are
//! polynomials in `c`, so statements about every `c` at once can be checked
//! symbolically. Classes are kept in normal form (`a <= n`, `b <= k` for each
//! monomial `x^a y^b`) after every operation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{int, PolyC, Rat, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingParams {
    pub n: u32,
    pub k: u32,
}

impl RingParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::BadParams(format!("n = {n}, k = {k}: both must be >= 1")));
        }
        Ok(RingParams { n, k })
    }

    /// Complex dimension `n + k`.
    pub fn complex_dim(&self) -> u32 {
        self.n + self.k
    }

    /// `m` with real dimension `4m`, when `n + k` is even.
    pub fn weight(&self) -> Option<u32> {
        (self.complex_dim() % 2 == 0).then(|| self.complex_dim() / 2)
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{}^{}", self.n, self.k)
    }
}

/// Exponent pair `(a, b)` of `x^a y^b`.
pub type Exponents = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    params: RingParams,
    terms: BTreeMap<Exponents, PolyC>,
}

/// Normal form of a single monomial: `coeff * x^a y^b` becomes `None` (zero)
/// or a term with `a <= n`, `b <= k`, using `y^{k+j} = (-c)^j x^j y^k`.
fn normalize_term(params: RingParams, (a, b): Exponents, coeff: &PolyC) -> Option<(Exponents, PolyC)> {
    let (a, b, coeff) = if b > params.k {
        let j = b - params.k;
        let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
        let shifted = &PolyC::monomial(sign, j as usize) * coeff;
        (a + j, params.k, shifted)
    } else {
        (a, b, coeff.clone())
    };
    (a <= params.n && !coeff.is_zero()).then_some(((a, b), coeff))
}

impl CohClass {
    pub fn zero(params: RingParams) -> Self {
        CohClass {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: RingParams) -> Self {
        Self::term(params, (0, 0), PolyC::one())
    }

    pub fn x(params: RingParams) -> Self {
        Self::term(params, (1, 0), PolyC::one())
    }

    pub fn y(params: RingParams) -> Self {
        Self::term(params, (0, 1), PolyC::one())
    }

    pub fn constant(params: RingParams, coeff: PolyC) -> Self {
        Self::term(params, (0, 0), coeff)
    }

    pub fn term(params: RingParams, exps: Exponents, coeff: PolyC) -> Self {
        Self::reduce(params, [(exps, coeff)])
    }

    /// Brings arbitrary raw terms into normal form.
    pub fn reduce<I>(params: RingParams, raw_terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, PolyC)>,
    {
        let mut out = Self::zero(params);
        for (exps, coeff) in raw_terms {
            if let Some((e, c)) = normalize_term(params, exps, &coeff) {
                out.accumulate(e, &c);
            }
        }
        out
    }

    fn accumulate(&mut self, exps: Exponents, coeff: &PolyC) {
        let slot = self.terms.entry(exps).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, PolyC> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_params(&self, other: &CohClass) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamMismatch(
                self.params.to_string(),
                other.params.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CohClass) -> Result<CohClass> {
        self.check_params(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.accumulate(e, c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &CohClass) -> Result<CohClass> {
        self.check_params(other)?;
        let mut out = Self::zero(self.params);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                if a1 + a2 > self.params.n {
                    continue;
                }
                let coeff = c1 * c2;
                if let Some((e, c)) = normalize_term(self.params, (a1 + a2, b1 + b2), &coeff) {
                    out.accumulate(e, &c);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, coeff: &PolyC) -> CohClass {
        let mut out = Self::zero(self.params);
        for (&e, c) in &self.terms {
            out.accumulate(e, &(c * coeff));
        }
        out
    }

    pub fn pow(&self, e: u32) -> CohClass {
        let mut acc = Self::one(self.params);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms of total degree `2 * degree` (that is, `a + b == degree`).
    pub fn homogeneous_part(&self, degree: u32) -> CohClass {
        CohClass {
            params: self.params,
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a + b == degree)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Pairing with the fundamental class, normalized by `<x^n y^k, [X]> = 1`.
    pub fn evaluate_top(&self) -> PolyC {
        self.terms
            .get(&(self.params.n, self.params.k))
            .cloned()
            .unwrap_or_default()
    }
}

impl<'a> Add<&'a CohClass> for &'a CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        self.try_add(rhs).expect("adding classes of different rings")
    }
}

impl<'a> Sub<&'a CohClass> for &'a CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        self + &(-rhs)
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.scale(&PolyC::constant(-Rat::one()))
    }
}

impl<'a> Mul<&'a CohClass> for &'a CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        self.try_mul(rhs).expect("multiplying classes of different rings")
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| format!("({c})*x^{a}*y^{b}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Signature of the middle-degree cup-product pairing of `X_n^k(c)` at a
/// numeric `c`, computed from the ring structure alone.
pub fn intersection_signature(params: RingParams, c_val: i64) -> Result<i64> {
    let half = params.weight().ok_or(Error::DimensionOdd {
        n: params.n,
        k: params.k,
    })?;
    let basis: Vec<Exponents> = (0..=params.n.min(half))
        .map(|a| (a, half - a))
        .filter(|&(_, b)| b <= params.k)
        .collect();
    let c = int(c_val);
    let mut pairing = RatMatrix::zeros(basis.len(), basis.len());
    for (i, &(a1, b1)) in basis.iter().enumerate() {
        for (j, &(a2, b2)) in basis.iter().enumerate() {
            let product = CohClass::term(params, (a1 + a2, b1 + b2), PolyC::one());
            pairing[(i, j)] = product.evaluate_top().eval(&c);
        }
    }
    Ok(pairing.inertia()?.signature())
}
