use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exact::Rat;

/// Element of `Q[δ, ε]`; the key `(i, j)` stands for `δ^i ε^j`, of weighted
/// degree `4i + 8j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenusValue {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl GenusValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::term(0, 0, r)
    }

    pub fn delta() -> Self {
        Self::term(1, 0, Rat::one())
    }

    pub fn epsilon() -> Self {
        Self::term(0, 1, Rat::one())
    }

    /// `coeff * δ^i ε^j`
    pub fn term(i: u32, j: u32, coeff: Rat) -> Self {
        let mut out = Self::zero();
        out.accumulate((i, j), coeff);
        out
    }

    fn accumulate(&mut self, key: (u32, u32), coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    /// The value as a rational, if it has no δ or ε.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero();
        for (&k, a) in &self.terms {
            out.accumulate(k, a * r);
        }
        out
    }

    /// True when every term has weighted degree `degree` (δ: 4, ε: 8).
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|&(i, j)| 4 * i + 8 * j == degree)
    }

    pub fn specialize(&self, delta: &Rat, epsilon: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(i, j), a)| a * delta.pow(i as i32) * epsilon.pow(j as i32))
            .sum()
    }
}

impl<'a> Add<&'a GenusValue> for &'a GenusValue {
    type Output = GenusValue;
    fn add(self, rhs: &GenusValue) -> GenusValue {
        let mut out = self.clone();
        for (&k, a) in &rhs.terms {
            out.accumulate(k, a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a GenusValue> for &'a GenusValue {
    type Output = GenusValue;
    fn sub(self, rhs: &GenusValue) -> GenusValue {
        self + &(-rhs)
    }
}

impl Neg for &GenusValue {
    type Output = GenusValue;
    fn neg(self) -> GenusValue {
        self.scale(&-Rat::one())
    }
}

impl<'a> Mul<&'a GenusValue> for &'a GenusValue {
    type Output = GenusValue;
    fn mul(self, rhs: &GenusValue) -> GenusValue {
        let mut out = GenusValue::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.accumulate((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl fmt::Display for GenusValue {
    /// `3/10*delta^2 - 1/10*eps`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power of δ first
        for (idx, (&(i, j), a)) in self.terms.iter().rev().enumerate() {
            let sign = if a.is_negative() { "-" } else { "+" };
            match (idx, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mut factors = Vec::new();
            let abs = a.abs();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("delta".into()),
                _ => factors.push(format!("delta^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("eps".into()),
                _ => factors.push(format!("eps^{j}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn arithmetic_and_display() {
        let d = GenusValue::delta();
        let e = GenusValue::epsilon();
        let g = &(&d * &d).scale(&rat(3, 10)) - &e.scale(&rat(1, 10));
        assert_eq!(g.to_string(), "3/10*delta^2 - 1/10*eps");
        assert!(g.is_homogeneous(8));
        assert!(!(&g + &d).is_homogeneous(8));
        assert_eq!(d.scale(&int(-16)).to_string(), "-16*delta");
        assert_eq!(GenusValue::zero().to_string(), "0");
    }

    #[test]
    fn specialization() {
        let g = GenusValue::delta().scale(&int(-16));
        assert_eq!(g.specialize(&int(1), &int(1)), int(-16));
        assert_eq!(g.specialize(&rat(-1, 8), &int(0)), int(2));
        assert_eq!(GenusValue::zero().specialize(&int(3), &int(5)), int(0));
    }
}
