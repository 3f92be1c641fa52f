use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial in the bundle parameter `c`, lowest power first.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyC {
    coeffs: Vec<Rat>,
}

impl PolyC {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyC { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        PolyC { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::new(vec![r])
    }

    /// `coeff * c^degree`
    pub fn monomial(coeff: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(coeffs)
    }

    /// The polynomial `c`.
    pub fn c() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&a| super::int(a)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero `(power, coefficient)` pairs, lowest power first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero())
    }

    /// The constant value, if the polynomial does not depend on `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, c: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, a| acc * c + a)
    }

    pub fn eval_int(&self, c: i64) -> Rat {
        self.eval(&super::int(c))
    }

    /// True when only odd powers of `c` occur. The zero polynomial is odd.
    pub fn is_odd(&self) -> bool {
        self.terms().all(|(i, _)| i % 2 == 1)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        PolyC {
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * super::int(i as i64))
                .collect(),
        )
    }
}

impl fmt::Display for PolyC {
    /// Human form, highest power first: `-3*c^5 + 42*c^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let abs = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "c")?;
                    } else {
                        write!(f, "c^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<Rat> for PolyC {
    fn from(r: Rat) -> Self {
        Self::constant(r)
    }
}

impl<'a> Add<&'a PolyC> for &'a PolyC {
    type Output = PolyC;
    fn add(self, rhs: &PolyC) -> PolyC {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        PolyC::new(coeffs)
    }
}

impl Add for PolyC {
    type Output = PolyC;
    fn add(self, rhs: PolyC) -> PolyC {
        &self + &rhs
    }
}

impl AddAssign<&PolyC> for PolyC {
    fn add_assign(&mut self, rhs: &PolyC) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&PolyC> for PolyC {
    fn sub_assign(&mut self, rhs: &PolyC) {
        *self += &(-rhs);
    }
}

impl Neg for &PolyC {
    type Output = PolyC;
    fn neg(self) -> PolyC {
        PolyC {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for PolyC {
    type Output = PolyC;
    fn neg(self) -> PolyC {
        -&self
    }
}

impl<'a> Sub<&'a PolyC> for &'a PolyC {
    type Output = PolyC;
    fn sub(self, rhs: &PolyC) -> PolyC {
        self + &(-rhs)
    }
}

impl Sub for PolyC {
    type Output = PolyC;
    fn sub(self, rhs: PolyC) -> PolyC {
        &self - &rhs
    }
}

impl<'a> Mul<&'a PolyC> for &'a PolyC {
    type Output = PolyC;
    fn mul(self, rhs: &PolyC) -> PolyC {
        if self.is_zero() || rhs.is_zero() {
            return PolyC::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        PolyC::new(coeffs)
    }
}

impl Mul for PolyC {
    type Output = PolyC;
    fn mul(self, rhs: PolyC) -> PolyC {
        &self * &rhs
    }
}

/// Recovers the unique polynomial of degree at most `degree_bound` through
/// `points`. Every point beyond the first `degree_bound + 1` is used as a
/// consistency check.
pub fn interpolate(points: &[(Rat, Rat)], degree_bound: usize) -> Result<PolyC> {
    let distinct: BTreeSet<&Rat> = points.iter().map(|(x, _)| x).collect();
    if distinct.len() != points.len() {
        return Err(Error::InvalidSample("duplicate abscissa".into()));
    }
    if points.len() < degree_bound + 1 {
        return Err(Error::InsufficientSamples {
            needed: degree_bound + 1,
            got: points.len(),
        });
    }
    let (fit, check) = points.split_at(degree_bound + 1);

    // Newton divided differences.
    let xs: Vec<&Rat> = fit.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rat> = fit.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..table.len() {
        for i in (level..table.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut poly = PolyC::zero();
    for i in (0..table.len()).rev() {
        let shift = PolyC::new(vec![-xs[i].clone(), Rat::one()]);
        poly = &(&poly * &shift) + &PolyC::constant(table[i].clone());
    }

    if check.iter().any(|(x, y)| &poly.eval(x) != y) {
        return Err(Error::InconsistentSamples {
            bound: degree_bound,
        });
    }
    Ok(poly)
}
