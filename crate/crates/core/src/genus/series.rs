use super::GenusValue;
use crate::error::{Error, Result};
use crate::exact::{int, Rat};

/// Truncated power series with coefficients in `Q[δ, ε]`; coefficients for
/// powers `0..=order` are known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<GenusValue>,
}

impl SeriesQ {
    pub fn new(order: usize, mut coeffs: Vec<GenusValue>) -> Self {
        coeffs.resize(order + 1, GenusValue::zero());
        SeriesQ { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![GenusValue::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> GenusValue {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[GenusValue] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn mul(&self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        let mut out = vec![GenusValue::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        SeriesQ { coeffs: out }
    }

    pub fn scale(&self, r: &Rat) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect(),
        }
    }

    pub fn add(&self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        SeriesQ {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    fn unit_constant(&self) -> Result<Rat> {
        self.coeffs[0]
            .as_constant()
            .filter(|c| !num_traits::Zero::is_zero(c))
            .ok_or_else(|| Error::Precondition("series constant term must be a nonzero rational".into()))
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn reciprocal(&self) -> Result<SeriesQ> {
        let inv0 = self.unit_constant()?.recip();
        let mut out = vec![GenusValue::constant(inv0.clone())];
        for n in 1..=self.order() {
            let mut acc = GenusValue::zero();
            for i in 1..=n {
                acc = &acc + &(&self.coeffs[i] * &out[n - i]);
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// Drops the constant term and divides by the variable: `(s - s_0) / u`.
    /// The resulting order is one less.
    pub fn shift_down(&self) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Logarithm of a series with constant term 1, via
    /// `n l_n = n s_n - sum_{i=1}^{n-1} i l_i s_{n-i}`.
    pub fn ln(&self) -> Result<SeriesQ> {
        if self.unit_constant()? != int(1) {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut out = vec![GenusValue::zero()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for i in 1..n {
                acc = &acc - &(&out[i] * &self.coeffs[n - i]).scale(&int(i as i64));
            }
            out.push(acc.scale(&Rat::new(1.into(), (n as i64).into())));
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// Compositional inverse of `u + a_2 u^2 + ...` by Lagrange inversion:
    /// `[x^j] f = (1/j) [u^{j-1}] (u / g(u))^j`.
    pub fn reversion(&self) -> Result<SeriesQ> {
        if !self.coeffs[0].is_zero() || self.coeffs.get(1) != Some(&GenusValue::one()) {
            return Err(Error::Precondition("reversion needs g = u + O(u^2)".into()));
        }
        let order = self.order();
        let h = self.shift_down().reciprocal()?;
        let mut out = vec![GenusValue::zero(); order + 1];
        let mut power = SeriesQ::one(order - 1);
        for (j, slot) in out.iter_mut().enumerate().skip(1) {
            power = power.mul(&h);
            *slot = power.coeff(j - 1).scale(&Rat::new(1.into(), (j as i64).into()));
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// `self(inner(u))`, with `inner` having zero constant term.
    pub fn compose(&self, inner: &SeriesQ) -> Result<SeriesQ> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition("inner series must have zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = SeriesQ::new(order, vec![self.coeffs[order].clone()]);
        for i in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = &acc.coeffs[0] + &self.coeffs[i];
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> SeriesQ {
        SeriesQ {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.scale(&int(i as i64)))
                .collect(),
        }
    }
}
