//! Symmetric functions of the Pontryagin roots written in the elementary
//! basis. The elementary symmetric functions of the roots are the Pontryagin
//! classes, so an expression `sum_λ a_λ e_λ` is the Pontryagin-number
//! functional `sum_λ a_λ p_λ[M]`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rat};
use crate::partition::Partition;

/// Polynomial in `e_1, e_2, ...`; the key `λ` stands for `e_{λ1} e_{λ2} ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<Partition, Rat>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rat::one())
    }

    pub fn monomial(lambda: Partition, coeff: Rat) -> Self {
        let mut out = Self::zero();
        out.accumulate(lambda, coeff);
        out
    }

    /// The elementary symmetric function `e_i`.
    pub fn elementary(i: u32) -> Self {
        Self::monomial(Partition::single(i), Rat::one())
    }

    fn accumulate(&mut self, lambda: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Rat> {
        self.terms
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            out.accumulate(l.clone(), a * r);
        }
        out
    }

    /// Evaluates with `e_i` replaced by `elementary[i - 1]`.
    pub fn eval(&self, elementary: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(l, a)| {
                l.parts().iter().fold(a.clone(), |acc, &p| {
                    acc * elementary.get(p as usize - 1).cloned().unwrap_or_else(Rat::zero)
                })
            })
            .sum()
    }
}

impl<'a> Add<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (l, a) in &rhs.terms {
            out.accumulate(l.clone(), a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &rhs.scale(&-Rat::one())
    }
}

impl<'a> Mul<&'a SymPoly> for &'a SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (l1, a1) in &self.terms {
            for (l2, a2) in &rhs.terms {
                out.accumulate(l1.union(l2), a1 * a2);
            }
        }
        out
    }
}

/// Power sums `N_0, ..., N_m` in the elementary basis, from Newton's identities
/// `N_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i N_{j-i} + (-1)^{j-1} j e_j`.
///
/// `N_0` is returned as zero; it never enters a Pontryagin number.
pub fn power_sums(m: u32) -> Vec<SymPoly> {
    let mut sums = vec![SymPoly::zero()];
    for j in 1..=m {
        let sign = |i: u32| if i % 2 == 1 { Rat::one() } else { -Rat::one() };
        let mut nj = SymPoly::elementary(j).scale(&(sign(j) * int(j as i64)));
        for i in 1..j {
            let term = &SymPoly::elementary(i) * &sums[(j - i) as usize];
            nj = &nj + &term.scale(&sign(i));
        }
        sums.push(nj);
    }
    sums
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetricKind {
    /// `s_m = sum_i r_i^m`
    S,
    /// `q_m = sum_i sum_{j != i} r_i r_j^{m-1} = e_1 N_{m-1} - N_m`
    Q,
}

/// Pontryagin-number coefficients of `s_m` or `q_m`, keyed by partition.
pub fn functional_from_symmetric(kind: SymmetricKind, m: u32) -> Result<BTreeMap<Partition, Rat>> {
    match kind {
        SymmetricKind::S => {
            if m == 0 {
                return Err(Error::Precondition("s_m needs m >= 1".into()));
            }
            Ok(power_sums(m).swap_remove(m as usize).into_terms())
        }
        SymmetricKind::Q => {
            if m < 2 {
                return Err(Error::Precondition("q_m needs m >= 2".into()));
            }
            let sums = power_sums(m);
            let q = &(&SymPoly::elementary(1) * &sums[(m - 1) as usize]) - &sums[m as usize];
            Ok(q.into_terms())
        }
    }
}
