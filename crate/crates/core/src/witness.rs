//! Deciding whether a Pontryagin-number functional factors through the
//! elliptic genus, and otherwise exhibiting a family of nonnegatively curved
//! spin manifolds on which it is unbounded.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::bordism::{
    check_c, eliminate_k3, kernel_monomials, monomial_vector, Basis, BordismElement, Factor,
    Monomial,
};
use crate::charclass::{functional_from_symmetric, product, CParam, PNumberVector, SymmetricKind};
use crate::error::{Error, Result};
use crate::exact::{int, interpolate, PolyC, Rat};
use crate::genus::{a_hat_coefficients, l_genus_coefficients};
use crate::partition::Partition;

/// `λ ↦ coefficient` on the Pontryagin numbers of weight `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginFunctional {
    pub m: u32,
    coefficients: BTreeMap<Partition, Rat>,
}

impl PontryaginFunctional {
    /// Zero coefficients are dropped.
    pub fn new(m: u32, coefficients: BTreeMap<Partition, Rat>) -> Result<Self> {
        for lambda in coefficients.keys() {
            if lambda.weight() != m {
                return Err(Error::WeightMismatch {
                    expected: m,
                    got: lambda.weight(),
                });
            }
        }
        Ok(PontryaginFunctional {
            m,
            coefficients: coefficients.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        })
    }

    pub fn zero(m: u32) -> Self {
        PontryaginFunctional {
            m,
            coefficients: BTreeMap::new(),
        }
    }

    /// The Milnor–Thom number `s_m`.
    pub fn s(m: u32) -> Result<Self> {
        Self::new(m, functional_from_symmetric(SymmetricKind::S, m)?)
    }

    pub fn q(m: u32) -> Result<Self> {
        Self::new(m, functional_from_symmetric(SymmetricKind::Q, m)?)
    }

    pub fn l_genus(m: u32) -> Self {
        Self::new(m, l_genus_coefficients(m)).expect("weight m coefficients")
    }

    pub fn a_hat(m: u32) -> Self {
        Self::new(m, a_hat_coefficients(m)).expect("weight m coefficients")
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, Rat> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn apply(&self, v: &PNumberVector) -> Result<PolyC> {
        apply_functional(self, v)
    }
}

pub fn apply_functional(f: &PontryaginFunctional, v: &PNumberVector) -> Result<PolyC> {
    if v.m != f.m {
        return Err(Error::WeightMismatch {
            expected: f.m,
            got: v.m,
        });
    }
    let mut out = PolyC::zero();
    for (lambda, a) in &f.coefficients {
        out += &v.get(lambda).scale(a);
    }
    Ok(out)
}

/// `2, 4, ..., 2 * count`.
pub fn even_samples(count: usize) -> Vec<i64> {
    (1..=count as i64).map(|i| 2 * i).collect()
}

/// Enough samples for [`find_witness`] in weight `m` under any basis: every
/// `X(n, k)` of weight `<= m` has `n <= 2m - 3`, plus two spare points.
pub fn default_sample_count(m: u32) -> usize {
    (2 * m as usize).max(4)
}

fn validate_samples(samples: &[i64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &c in samples {
        check_c(c)?;
        if !seen.insert(c) {
            return Err(Error::InvalidSample(format!("c = {c} sampled twice")));
        }
    }
    Ok(())
}

fn c_degree_bound(mono: &Monomial) -> u32 {
    mono.factors().iter().map(Factor::c_degree_bound).sum()
}

/// Largest `c`-degree of `f` on a kernel monomial of weight `m`.
pub fn kernel_degree_bound(m: u32, basis: &Basis) -> u32 {
    kernel_monomials(m)
        .iter()
        .map(|p| c_degree_bound(&basis.monomial(p)))
        .max()
        .unwrap_or(0)
}

/// True iff `f` vanishes on the kernel of the elliptic genus in weight `f.m`.
///
/// On a kernel monomial `f` is a polynomial in `c` of bounded degree, so
/// vanishing at more sample points than that bound is conclusive.
pub fn factors_through_elliptic(
    f: &PontryaginFunctional,
    basis: &Basis,
    c_samples: &[i64],
) -> Result<bool> {
    Ok(first_nonvanishing(f, basis, c_samples)?.is_none())
}

/// First kernel monomial on which `f` is nonzero at some sample, with the
/// samples where it is nonzero (smallest `|c|` first).
fn first_nonvanishing(
    f: &PontryaginFunctional,
    basis: &Basis,
    c_samples: &[i64],
) -> Result<Option<(Monomial, Vec<i64>)>> {
    validate_samples(c_samples)?;
    let bound = kernel_degree_bound(f.m, basis) as usize;
    if !kernel_monomials(f.m).is_empty() && c_samples.len() <= bound {
        return Err(Error::InsufficientSamples {
            needed: bound + 1,
            got: c_samples.len(),
        });
    }
    let mut ordered = c_samples.to_vec();
    ordered.sort_by_key(|&c| (c.unsigned_abs(), c < 0));
    for indices in kernel_monomials(f.m) {
        let mono = basis.monomial(&indices);
        let mut nonzero = Vec::new();
        for &c in &ordered {
            if !f.apply(&monomial_vector(&mono, c))?.is_zero() {
                nonzero.push(c);
            }
        }
        if !nonzero.is_empty() {
            return Ok(Some((mono, nonzero)));
        }
    }
    Ok(None)
}

/// Rewrites `mono` without K3 at the first sample where that is possible.
fn eliminate_at_some_sample(
    mono: &Monomial,
    basis: &Basis,
    candidates: &[i64],
) -> Result<(BordismElement, i64)> {
    let mut last = None;
    for &c in candidates {
        match eliminate_k3(mono, basis, c) {
            Ok(e) => return Ok((e, c)),
            Err(e @ Error::K3Undetermined { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one candidate sample"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    FactorsThroughEllipticGenus,
    Unbounded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::FactorsThroughEllipticGenus => write!(f, "factors_through_elliptic_genus"),
            Status::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// A product of factors in which one `X` factor carries the free parameter
/// `c` and all others are pinned at `fixed_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFamily {
    pub varying: Factor,
    pub fixed: Monomial,
    pub fixed_c: i64,
}

impl WitnessFamily {
    pub fn weight(&self) -> u32 {
        self.varying.weight() + self.fixed.weight()
    }

    pub fn monomial(&self) -> Monomial {
        self.fixed.times(&Monomial::new(vec![self.varying]))
    }

    /// Pontryagin numbers, polynomial in `c` (or numeric with `Some(c)`).
    pub fn vector(&self, c: Option<i64>) -> PNumberVector {
        let param = c.map_or(CParam::Symbolic, CParam::Value);
        let varying = self.varying.vector(param);
        if self.fixed.factors().is_empty() {
            return varying;
        }
        product(&varying, &monomial_vector(&self.fixed, self.fixed_c))
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.varying.label(CParam::Symbolic))?;
        for factor in self.fixed.factors() {
            write!(f, " * {}", factor.label(CParam::Value(self.fixed_c)))?;
        }
        Ok(())
    }
}

/// For a nonconstant odd `f`, maps a bound `B` to an even `c` with `|f(c)| > B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub f_poly: PolyC,
    /// Even, and beyond every real root of `f` and `f'`: `|f|` increases from here on.
    pub start: i64,
}

/// `1 + max |a_i / a_d|` bounds the absolute value of every root.
fn cauchy_bound(p: &PolyC) -> Rat {
    let Some(d) = p.degree() else {
        return int(0);
    };
    let lead = p.coeff(d).abs();
    let max = (0..d)
        .map(|i| p.coeff(i).abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    max + int(1)
}

impl Certificate {
    pub fn new(f_poly: PolyC) -> Result<Self> {
        if f_poly.degree().unwrap_or(0) == 0 || !f_poly.is_odd() {
            return Err(Error::Precondition(format!(
                "certificate needs a nonconstant odd polynomial, got {f_poly}"
            )));
        }
        let bound = cauchy_bound(&f_poly).max(cauchy_bound(&f_poly.derivative()));
        let mut start = bound
            .ceil()
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Precondition("root bound exceeds i64".into()))?
            .max(2);
        start += start % 2;
        Ok(Certificate { f_poly, start })
    }

    fn exceeds(&self, c: i64, bound: &Rat) -> bool {
        self.f_poly.eval_int(c).abs() > *bound
    }

    /// Smallest even `c >= start` with `|f(c)| > bound`: doubling, then bisection.
    pub fn witness_c(&self, bound: &Rat) -> Result<i64> {
        if self.exceeds(self.start, bound) {
            return Ok(self.start);
        }
        let mut lo = self.start;
        let mut hi = self.start;
        while !self.exceeds(hi, bound) {
            lo = hi;
            hi = hi
                .checked_mul(2)
                .ok_or_else(|| Error::Precondition(format!("no even c in i64 exceeds {bound}")))?;
        }
        // invariant: |f(lo)| <= bound < |f(hi)|, both even
        while hi - lo > 2 {
            let mid = lo + ((hi - lo) / 4) * 2;
            if self.exceeds(mid, bound) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub status: Status,
    pub m: u32,
    pub basis: Basis,
    /// Kernel monomial on which `f` was first seen to be nonzero.
    pub kernel_monomial: Option<Monomial>,
    /// Its K3-free rewriting, when it contained K3.
    pub elimination: Option<BordismElement>,
    pub witness: Option<WitnessFamily>,
    pub is_spin: bool,
    pub nonneg_curved: bool,
    pub f_poly: Option<PolyC>,
    /// `(c, f(witness at c))` at every sample.
    pub samples: Vec<(i64, Rat)>,
    pub certificate: Option<Certificate>,
}

impl WitnessReport {
    fn factors(f: &PontryaginFunctional, basis: &Basis) -> Self {
        WitnessReport {
            status: Status::FactorsThroughEllipticGenus,
            m: f.m,
            basis: basis.clone(),
            kernel_monomial: None,
            elimination: None,
            witness: None,
            is_spin: false,
            nonneg_curved: false,
            f_poly: None,
            samples: Vec::new(),
            certificate: None,
        }
    }
}

/// Runs the unboundedness argument on `f`.
///
/// A kernel monomial with `f != 0` is found; if it contains K3 it is
/// rewritten K3-free (at the smallest sample `c` where `f != 0` and the
/// rewriting exists) and the summand with largest `|coefficient * f|` is kept.
/// Letting only its largest `X` factor vary in `c` makes `f` an odd nonzero
/// polynomial of degree at most that factor's `n`, hence unbounded.
pub fn find_witness(
    f: &PontryaginFunctional,
    basis: &Basis,
    c_samples: &[i64],
) -> Result<WitnessReport> {
    let Some((kernel_mono, nonzero_at)) = first_nonvanishing(f, basis, c_samples)? else {
        return Ok(WitnessReport::factors(f, basis));
    };

    let mut c0 = nonzero_at[0];
    let (chosen, elimination) = if kernel_mono.contains_k3() {
        let (element, c) = eliminate_at_some_sample(&kernel_mono, basis, &nonzero_at)?;
        c0 = c;
        let mut best: Option<(Rat, &Monomial)> = None;
        for (mono, coeff) in element.terms() {
            let value = (f.apply(&monomial_vector(mono, c0))?.eval_int(c0) * coeff).abs();
            // strict comparison keeps the first monomial on ties
            if !value.is_zero() && best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, mono));
            }
        }
        let (_, mono) = best.ok_or_else(|| {
            Error::Internal(format!("f vanishes on every summand of {kernel_mono}"))
        })?;
        (mono.clone(), Some(element))
    } else {
        (kernel_mono.clone(), None)
    };

    let varying = chosen
        .largest_x()
        .ok_or_else(|| Error::Internal(format!("{chosen} has no X factor")))?;
    let family = WitnessFamily {
        varying,
        fixed: chosen.without(varying).expect("factor present"),
        fixed_c: c0,
    };

    let f_poly = f.apply(&family.vector(None))?;
    let degree_bound = varying.c_degree_bound() as usize;
    if c_samples.len() < degree_bound + 3 {
        return Err(Error::InsufficientSamples {
            needed: degree_bound + 3,
            got: c_samples.len(),
        });
    }
    let mut samples = Vec::with_capacity(c_samples.len());
    for &c in c_samples {
        samples.push((c, f.apply(&family.vector(Some(c)))?.eval_int(c)));
    }
    let points: Vec<(Rat, Rat)> = samples.iter().map(|(c, v)| (int(*c), v.clone())).collect();
    let interpolated = interpolate(&points, degree_bound)?;
    if interpolated != f_poly {
        return Err(Error::Internal(format!(
            "interpolated {interpolated} disagrees with symbolic {f_poly}"
        )));
    }
    if f_poly.degree().unwrap_or(0) == 0 || !f_poly.is_odd() {
        return Err(Error::Internal(format!(
            "f on {family} is {f_poly}, not odd and nonconstant"
        )));
    }

    let flags = family.vector(Some(c0));
    let certificate = Certificate::new(f_poly.clone())?;
    Ok(WitnessReport {
        status: Status::Unbounded,
        m: f.m,
        basis: basis.clone(),
        kernel_monomial: Some(kernel_mono),
        elimination,
        witness: Some(family),
        is_spin: flags.is_spin,
        nonneg_curved: flags.nonneg_curved,
        f_poly: Some(f_poly),
        samples,
        certificate: Some(certificate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charclass::class_x;
    use crate::cohomring::RingParams;
    use crate::exact::rat;

    #[test]
    fn apply_s_and_q() {
        let x35 = class_x(RingParams { n: 3, k: 5 }, CParam::Symbolic).unwrap();
        let x53 = class_x(RingParams { n: 5, k: 3 }, CParam::Symbolic).unwrap();
        let s4 = PontryaginFunctional::s(4).unwrap();
        let q4 = PontryaginFunctional::q(4).unwrap();
        assert_eq!(s4.apply(&x35).unwrap(), PolyC::from_ints(&[0, 0, 0, 30]));
        assert_eq!(q4.apply(&x53).unwrap(), PolyC::from_ints(&[0, 0, 0, 42, 0, -3]));
        assert!(PontryaginFunctional::zero(4).apply(&x35).unwrap().is_zero());
        assert!(matches!(s4.apply(&crate::charclass::class_k3()), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn low_weights_factor() {
        let basis = Basis::default();
        for m in 1..=2 {
            assert!(factors_through_elliptic(&PontryaginFunctional::s(m).unwrap(), &basis, &[2]).unwrap());
        }
    }

    #[test]
    fn sample_validation() {
        let basis = Basis::default();
        let s4 = PontryaginFunctional::s(4).unwrap();
        assert!(matches!(
            factors_through_elliptic(&s4, &basis, &[2, 4]),
            Err(Error::InsufficientSamples { needed: 4, got: 2 })
        ));
        assert!(matches!(factors_through_elliptic(&s4, &basis, &[2, 3, 4, 6]), Err(Error::InvalidSample(_))));
        assert!(matches!(factors_through_elliptic(&s4, &basis, &[2, 2, 4, 6]), Err(Error::InvalidSample(_))));
    }

    #[test]
    fn s4_witness() {
        let s4 = PontryaginFunctional::s(4).unwrap();
        let report = find_witness(&s4, &Basis::default(), &even_samples(8)).unwrap();
        assert_eq!(report.status, Status::Unbounded);
        assert_eq!(report.witness.as_ref().unwrap().to_string(), "X(3,5;c)");
        assert_eq!(report.f_poly, Some(PolyC::from_ints(&[0, 0, 0, 30])));
        assert!(report.is_spin && report.nonneg_curved);
        let cert = report.certificate.unwrap();
        assert_eq!(cert.witness_c(&int(1_000_000)).unwrap(), 34);
    }

    #[test]
    fn certificate_respects_roots() {
        // c^3 - 100 c has roots at 0 and ±10
        let cert = Certificate::new(PolyC::from_ints(&[0, -100, 0, 1])).unwrap();
        assert!(cert.start >= 11);
        let c = cert.witness_c(&int(5)).unwrap();
        assert_eq!(c % 2, 0);
        assert!(cert.f_poly.eval_int(c).abs() > int(5));
        assert!(Certificate::new(PolyC::from_ints(&[1, 0, 1])).is_err());
        assert_eq!(cauchy_bound(&PolyC::from_ints(&[0, 0, 0, 30])), rat(1, 1));
    }

    #[test]
    fn l_genus_factors() {
        let l4 = PontryaginFunctional::l_genus(4);
        let report = find_witness(&l4, &Basis::default(), &even_samples(8)).unwrap();
        assert_eq!(report.status, Status::FactorsThroughEllipticGenus);
    }
}
