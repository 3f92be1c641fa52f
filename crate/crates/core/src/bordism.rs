//! Rational spin bordism `Ω_* = Q[α_1, α_2, α_3(c), ...]` with
//! `α_1 = K3`, `α_2 = HP^2` and `α_i = X_n^k(c)` (`n + k = 2i`, both odd and
//! at least 3) for `i >= 3`.
//!
//! All linear algebra happens at a fixed even nonzero `c`. A class of
//! weight `m` is identified with its vector of Pontryagin numbers; the Thom
//! matrix (partitions of `m` against monomials of weight `m`) is square and
//! nonsingular for every basis sequence, so decomposition is a linear solve.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::charclass::{class_hp2, class_k3, class_x, product, CParam, PNumberVector};
use crate::cohomring::RingParams;
use crate::error::{Error, Result};
use crate::exact::{binomial, int, PolyC, Rat, RatMatrix};
use crate::genus::{genus_of, GenusValue};
use crate::partition::Partition;

/// A manifold that can appear as a factor of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    K3,
    Hp2,
    X { n: u32, k: u32 },
}

impl Factor {
    pub fn x(n: u32, k: u32) -> Result<Factor> {
        if n % 2 == 0 || k % 2 == 0 || n < 3 || k < 3 {
            return Err(Error::BadParams(format!(
                "X({n},{k}): n and k must be odd and >= 3"
            )));
        }
        Ok(Factor::X { n, k })
    }

    /// Real dimension divided by 4.
    pub fn weight(&self) -> u32 {
        match self {
            Factor::K3 => 1,
            Factor::Hp2 => 2,
            Factor::X { n, k } => (n + k) / 2,
        }
    }

    pub fn is_x(&self) -> bool {
        matches!(self, Factor::X { .. })
    }

    /// Sharp upper bound on the `c`-degree of its Pontryagin numbers.
    pub fn c_degree_bound(&self) -> u32 {
        match self {
            Factor::X { n, .. } => *n,
            _ => 0,
        }
    }

    pub fn vector(&self, c: CParam) -> PNumberVector {
        match *self {
            Factor::K3 => class_k3(),
            Factor::Hp2 => class_hp2(),
            Factor::X { n, k } => class_x(RingParams { n, k }, c).expect("validated on construction"),
        }
    }

    pub fn label(&self, c: CParam) -> String {
        match self {
            Factor::K3 => "K3".into(),
            Factor::Hp2 => "HP2".into(),
            Factor::X { n, k } => format!("X({n},{k};{c})"),
        }
    }
}

impl Ord for Factor {
    /// Larger weight first, then smaller `n`.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |f: &Factor| match *f {
            Factor::X { n, k } => (n, k),
            _ => (0, 0),
        };
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| key(self).cmp(&key(other)))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How a generator `α_i`, `i >= 3`, splits `2i = n + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SplitPolicy {
    /// `X(3, 2i-3)`
    #[default]
    MinN,
    /// `X(2i-3, 3)`
    MaxN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub index: u32,
    pub factor: Factor,
}

/// A basis sequence: a policy for `α_i`, `i >= 3`, plus explicit overrides.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Basis {
    pub policy: SplitPolicy,
    overrides: BTreeMap<u32, Factor>,
}

impl Basis {
    pub fn new(policy: SplitPolicy) -> Self {
        Basis {
            policy,
            overrides: BTreeMap::new(),
        }
    }

    /// Replaces `α_index`. Any `X(n, k)` of the right weight has nonzero
    /// Milnor–Thom number at even `c != 0`, so it is a valid generator.
    pub fn with_generator(&self, index: u32, factor: Factor) -> Result<Basis> {
        if factor.weight() != index {
            return Err(Error::WeightMismatch {
                expected: index,
                got: factor.weight(),
            });
        }
        let mut out = self.clone();
        out.overrides.insert(index, factor);
        Ok(out)
    }

    pub fn generator(&self, index: u32) -> Factor {
        if let Some(f) = self.overrides.get(&index) {
            return *f;
        }
        match index {
            0 => panic!("generator indices start at 1"),
            1 => Factor::K3,
            2 => Factor::Hp2,
            i => match self.policy {
                SplitPolicy::MinN => Factor::X { n: 3, k: 2 * i - 3 },
                SplitPolicy::MaxN => Factor::X { n: 2 * i - 3, k: 3 },
            },
        }
    }

    /// Product of generators indexed by the parts of `indices`.
    pub fn monomial(&self, indices: &Partition) -> Monomial {
        Monomial::new(indices.parts().iter().map(|&i| self.generator(i)).collect())
    }
}

pub fn default_basis(max_m: u32, policy: SplitPolicy) -> Vec<GeneratorSpec> {
    let basis = Basis::new(policy);
    (1..=max_m)
        .map(|index| GeneratorSpec {
            index,
            factor: basis.generator(index),
        })
        .collect()
}

/// Cartesian product of factors, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<Factor>);

impl Monomial {
    pub fn new(mut factors: Vec<Factor>) -> Self {
        factors.sort();
        Monomial(factors)
    }

    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Factor::weight).sum()
    }

    /// Generator indices (weights of the factors) as a partition.
    pub fn index_partition(&self) -> Partition {
        Partition::new(self.0.iter().map(Factor::weight).collect()).expect("positive weights")
    }

    pub fn contains_k3(&self) -> bool {
        self.0.contains(&Factor::K3)
    }

    pub fn has_x(&self) -> bool {
        self.0.iter().any(Factor::is_x)
    }

    /// X-factor of largest weight (smallest `n` on ties).
    pub fn largest_x(&self) -> Option<Factor> {
        self.0.iter().copied().find(Factor::is_x)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut f = self.0.clone();
        f.extend_from_slice(&other.0);
        Monomial::new(f)
    }

    /// Removes one copy of `factor`.
    pub fn without(&self, factor: Factor) -> Option<Monomial> {
        let pos = self.0.iter().position(|f| *f == factor)?;
        let mut f = self.0.clone();
        f.remove(pos);
        Some(Monomial(f))
    }

    pub fn label(&self, c: CParam) -> String {
        if self.0.is_empty() {
            return "pt".into();
        }
        self.0
            .iter()
            .map(|f| f.label(c))
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label(CParam::Symbolic))
    }
}

type VectorCache = RwLock<HashMap<(Monomial, i64), Arc<PNumberVector>>>;

fn vector_cache() -> &'static VectorCache {
    static CACHE: OnceLock<VectorCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Pontryagin-number vector of a product at numeric `c`, memoized.
pub fn monomial_vector(mono: &Monomial, c: i64) -> Arc<PNumberVector> {
    let key = (mono.clone(), c);
    if let Some(v) = vector_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(
        mono.0
            .iter()
            .fold(PNumberVector::unit(), |acc, f| product(&acc, &f.vector(CParam::Value(c)))),
    );
    vector_cache().write().unwrap().insert(key, v.clone());
    v
}

pub(crate) fn check_c(c: i64) -> Result<()> {
    if c == 0 || c % 2 != 0 {
        return Err(Error::InvalidSample(format!("c = {c} must be even and nonzero")));
    }
    Ok(())
}

/// Rational combination of monomials of one weight, at a fixed `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BordismElement {
    pub m: u32,
    pub c: i64,
    terms: BTreeMap<Monomial, Rat>,
}

impl BordismElement {
    pub fn zero(m: u32, c: i64) -> Self {
        BordismElement {
            m,
            c,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(mono: Monomial, c: i64) -> Self {
        let mut out = Self::zero(mono.weight(), c);
        out.add_term(mono, Rat::one());
        out
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        debug_assert_eq!(mono.weight(), self.m);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.m, self.c);
        for (mono, a) in &self.terms {
            out.add_term(mono.clone(), a * r);
        }
        out
    }

    pub fn add(&self, other: &BordismElement) -> Self {
        let mut out = self.clone();
        for (mono, a) in &other.terms {
            out.add_term(mono.clone(), a.clone());
        }
        out
    }

    /// Product with a single monomial.
    pub fn times(&self, mono: &Monomial) -> Self {
        let mut out = Self::zero(self.m + mono.weight(), self.c);
        for (m, a) in &self.terms {
            out.add_term(m.times(mono), a.clone());
        }
        out
    }

    pub fn contains_k3(&self) -> bool {
        self.terms.keys().any(Monomial::contains_k3)
    }

    /// Pontryagin numbers of the combination.
    pub fn vector(&self) -> PNumberVector {
        let mut numbers: BTreeMap<Partition, PolyC> = Partition::all(self.m)
            .into_iter()
            .map(|l| (l, PolyC::zero()))
            .collect();
        let mut is_spin = true;
        let mut nonneg_curved = true;
        for (mono, a) in &self.terms {
            let v = monomial_vector(mono, self.c);
            is_spin &= v.is_spin;
            nonneg_curved &= v.nonneg_curved;
            for (l, p) in &v.numbers {
                *numbers.get_mut(l).expect("same weight") += &p.scale(a);
            }
        }
        PNumberVector {
            m: self.m,
            numbers,
            is_spin,
            nonneg_curved,
            label: self.to_string(),
        }
    }

    pub fn genus(&self) -> Result<GenusValue> {
        genus_of(&self.vector(), None)
    }
}

impl fmt::Display for BordismElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, a)| format!("({a}) {}", mono.label(CParam::Value(self.c))))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Pontryagin numbers (rows) of all basis monomials (columns) of weight `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Monomial>,
    pub matrix: RatMatrix,
}

pub fn thom_matrix(m: u32, basis: &Basis, c: i64) -> Result<ThomMatrix> {
    check_c(c)?;
    let rows = Partition::all(m);
    let cols: Vec<Monomial> = rows.iter().map(|idx| basis.monomial(idx)).collect();
    let mut matrix = RatMatrix::zeros(rows.len(), cols.len());
    for (j, mono) in cols.iter().enumerate() {
        let v = monomial_vector(mono, c);
        for (i, lambda) in rows.iter().enumerate() {
            matrix[(i, j)] = v.get(lambda).as_constant().expect("numeric vector");
        }
    }
    if matrix.rank() < rows.len() {
        return Err(Error::SingularThomMatrix { m, c });
    }
    Ok(ThomMatrix { rows, cols, matrix })
}

/// Coordinates of `v` in the monomial basis of `basis` at `c`.
pub fn decompose(v: &PNumberVector, basis: &Basis, c: i64) -> Result<BordismElement> {
    let thom = thom_matrix(v.m, basis, c)?;
    let rhs: Vec<Rat> = thom.rows.iter().map(|l| v.get(l).eval_int(c)).collect();
    let coeffs = thom.matrix.solve(&rhs).map_err(|e| match e {
        Error::SingularMatrix => Error::SingularThomMatrix { m: v.m, c },
        other => other,
    })?;
    let mut out = BordismElement::zero(v.m, c);
    for (mono, a) in thom.cols.into_iter().zip(coeffs) {
        out.add_term(mono, a);
    }
    Ok(out)
}

/// Generator-index partitions of weight `m` with some index `>= 3`; under any
/// basis sequence these monomials span the kernel of the elliptic genus.
pub fn kernel_monomials(m: u32) -> Vec<Partition> {
    Partition::all(m)
        .into_iter()
        .filter(|p| p.parts().first().is_some_and(|&i| i >= 3))
        .collect()
}

type Memo = HashMap<Factor, BordismElement>;

/// `Z = μ c^{2j-4} X(3, 2j-1) - λ X(2j-1, 3)` with
/// `λ = binom(2j+1, 3) - (2j-1)` and `μ = binom(2j+1, 2j-1) - 3`; it has
/// vanishing `s_{j+1}`.
fn z_element(j: u32, c: i64) -> Result<BordismElement> {
    let lambda = Rat::from_integer(binomial(2 * j as u64 + 1, 3)) - int(2 * j as i64 - 1);
    let mu = Rat::from_integer(binomial(2 * j as u64 + 1, 2 * j as u64 - 1)) - int(3);
    let mut z = BordismElement::zero(j + 1, c);
    z.add_term(Monomial::new(vec![Factor::x(3, 2 * j - 1)?]), mu * int(c).pow(2 * j as i32 - 4));
    z.add_term(Monomial::new(vec![Factor::x(2 * j - 1, 3)?]), -lambda);
    Ok(z)
}

/// Further combinations of two single `X` factors of weight `j + 1` with
/// vanishing `s_{j+1}`: `s(B) X(3, 2j-1) - s(X(3, 2j-1)) B` for each other `B`.
fn extra_relations(j: u32, c: i64) -> Result<Vec<BordismElement>> {
    let w = j + 1;
    let s_of = |f: Factor| -> Result<Rat> {
        let v = monomial_vector(&Monomial::new(vec![f]), c);
        let s = crate::witness::PontryaginFunctional::s(w)?.apply(&v)?;
        Ok(s.as_constant().expect("numeric vector"))
    };
    let first = Factor::x(3, 2 * w - 3)?;
    let s_first = s_of(first)?;
    let mut out = Vec::new();
    for n in (5..2 * w - 3).step_by(2) {
        let other = Factor::x(n, 2 * w - n)?;
        let mut e = BordismElement::zero(w, c);
        e.add_term(Monomial::new(vec![first]), s_of(other)?);
        e.add_term(Monomial::new(vec![other]), -s_first.clone());
        out.push(e);
    }
    Ok(out)
}

/// The `X` factor of a monomial `K3 × z` with `z` of weight `w`.
fn same_weight_partner(mono: &Monomial, w: u32) -> Option<Factor> {
    match mono.factors() {
        [z, Factor::K3] if z.is_x() && z.weight() == w => Some(*z),
        _ => None,
    }
}

/// `K3 × X(p, q)` rewritten without K3, memoized per factor.
///
/// With `j` the weight of `X(p, q)` and a basis with `α_j = X(p, q)`, `Z`
/// decomposes over generators of weight `<= j` and its `α_1 α_j` coefficient
/// is nonzero. Rewriting the other K3 terms of that decomposition can bring
/// back `K3 × z` with `z` of weight `j` (through terms such as
/// `K3^2 α_{j-1}`), which `Z` alone does not determine; further relations of
/// the same kind are added until the products `K3 × z` that occur are solved
/// for together.
fn k3_times(x: Factor, basis: &Basis, c: i64, memo: &mut Memo) -> Result<BordismElement> {
    if let Some(e) = memo.get(&x) {
        return Ok(e.clone());
    }
    let j = x.weight();
    let local = basis.with_generator(j, x)?;
    let target = Monomial::new(vec![Factor::K3, x]);

    let z = z_element(j, c)?;
    let mut candidates = vec![z];
    let mut unknowns = vec![x];
    // each relation: sum_u a_u K3 × u = rhs, rhs K3-free
    let mut relations: Vec<(BTreeMap<Factor, Rat>, BordismElement)> = Vec::new();
    let mut extras_added = false;
    loop {
        if relations.len() == candidates.len() {
            if extras_added {
                return Err(Error::K3Undetermined { weight: j + 1, c });
            }
            candidates.extend(extra_relations(j, c)?);
            extras_added = true;
            continue;
        }
        let element = candidates[relations.len()].clone();
        let decomposition = decompose(&element.vector(), &local, c)?;
        let top = local.monomial(&Partition::single(j + 1));
        if !decomposition.coeff(&top).is_zero() {
            return Err(Error::Internal(format!("relation has nonzero s_{} at c = {c}", j + 1)));
        }
        if relations.is_empty() && decomposition.coeff(&target).is_zero() {
            return Err(Error::PivotZero {
                monomial: target.label(CParam::Value(c)),
                c,
            });
        }
        let rewritten = rewrite_k3(decomposition, basis, c, memo, Some(j))?;
        let mut coeffs = BTreeMap::new();
        let mut rest = rewritten;
        for mono in rest.terms.keys().cloned().collect::<Vec<_>>() {
            if let Some(u) = same_weight_partner(&mono, j) {
                let a = rest.coeff(&mono);
                rest.add_term(mono, -a.clone());
                coeffs.insert(u, a);
                if !unknowns.contains(&u) {
                    unknowns.push(u);
                }
            }
        }
        relations.push((coeffs, element.add(&rest.scale(&-Rat::one()))));

        // greedily pick independent relations; solve once they pin down all unknowns
        let mut picked: Vec<usize> = Vec::new();
        let mut rank = 0;
        for i in 0..relations.len() {
            let rows: Vec<Vec<Rat>> = picked
                .iter()
                .chain(std::iter::once(&i))
                .map(|&r| unknowns.iter().map(|u| relations[r].0.get(u).cloned().unwrap_or_default()).collect())
                .collect();
            let r = RatMatrix::from_rows(rows)?.rank();
            if r > rank {
                rank = r;
                picked.push(i);
            }
        }
        if rank < unknowns.len() {
            continue;
        }
        let size = unknowns.len();
        let mut system = RatMatrix::zeros(size, size);
        for (row, &r) in picked.iter().enumerate() {
            for (col, u) in unknowns.iter().enumerate() {
                system[(row, col)] = relations[r].0.get(u).cloned().unwrap_or_default();
            }
        }
        let mut solutions = vec![BordismElement::zero(j + 1, c); size];
        for (row, &r) in picked.iter().enumerate() {
            let mut unit = vec![Rat::zero(); size];
            unit[row] = Rat::one();
            let column = system.solve(&unit)?;
            for (col, sol) in solutions.iter_mut().enumerate() {
                *sol = sol.add(&relations[r].1.scale(&column[col]));
            }
        }
        for (u, sol) in unknowns.iter().zip(solutions) {
            memo.insert(*u, sol);
        }
        return Ok(memo[&x].clone());
    }
}

/// Replaces `K3 × X` pairs until no monomial contains K3, except `K3 × z`
/// with `z` of weight `frozen`.
fn rewrite_k3(
    mut elem: BordismElement,
    basis: &Basis,
    c: i64,
    memo: &mut Memo,
    frozen: Option<u32>,
) -> Result<BordismElement> {
    let is_open = |m: &Monomial| {
        m.contains_k3() && frozen.is_none_or(|w| same_weight_partner(m, w).is_none())
    };
    while let Some((mono, coeff)) = elem
        .terms
        .iter()
        .find(|(m, _)| is_open(m))
        .map(|(m, a)| (m.clone(), a.clone()))
    {
        let x = mono.largest_x().ok_or_else(|| {
            Error::Internal(format!("{mono} has a K3 factor but no X factor"))
        })?;
        let rest = mono
            .without(Factor::K3)
            .and_then(|r| r.without(x))
            .expect("factors present");
        let replacement = k3_times(x, basis, c, memo)?;
        elem.add_term(mono, -coeff.clone());
        elem = elem.add(&replacement.times(&rest).scale(&coeff));
    }
    Ok(elem)
}

/// Rewrites every monomial of `elem` containing K3 without it; each such
/// monomial needs a factor of weight `>= 3`.
pub fn rewrite_without_k3(elem: &BordismElement, basis: &Basis) -> Result<BordismElement> {
    check_c(elem.c)?;
    if let Some(bad) = elem.terms.keys().find(|m| m.contains_k3() && !m.has_x()) {
        return Err(Error::Precondition(format!(
            "{bad} contains K3 but no factor of weight >= 3"
        )));
    }
    let out = rewrite_k3(elem.clone(), basis, elem.c, &mut HashMap::new(), None)?;
    if out.vector().numbers != elem.vector().numbers {
        return Err(Error::Internal(
            "K3 elimination changed the Pontryagin numbers".into(),
        ));
    }
    Ok(out)
}

/// Rewrites a monomial containing K3 and some `X` factor as a K3-free
/// combination with the same Pontryagin numbers.
pub fn eliminate_k3(mono: &Monomial, basis: &Basis, c: i64) -> Result<BordismElement> {
    check_c(c)?;
    if !mono.contains_k3() || !mono.has_x() {
        return Err(Error::Precondition(format!(
            "{mono} must contain K3 and a factor of weight >= 3"
        )));
    }
    let mut memo = HashMap::new();
    let out = rewrite_k3(
        BordismElement::from_monomial(mono.clone(), c),
        basis,
        c,
        &mut memo,
        None,
    )?;
    if out.vector().numbers != monomial_vector(mono, c).numbers {
        return Err(Error::Internal(format!(
            "K3 elimination changed the Pontryagin numbers of {mono}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn default_generators() {
        let b = default_basis(4, SplitPolicy::MinN);
        assert_eq!(b[0].factor, Factor::K3);
        assert_eq!(b[1].factor, Factor::Hp2);
        assert_eq!(b[2].factor, Factor::X { n: 3, k: 3 });
        assert_eq!(b[3].factor, Factor::X { n: 3, k: 5 });
        let alt = default_basis(4, SplitPolicy::MaxN);
        assert_eq!(alt[3].factor, Factor::X { n: 5, k: 3 });
    }

    #[test]
    fn kernel_monomial_lists() {
        assert!(kernel_monomials(2).is_empty());
        assert_eq!(kernel_monomials(3), vec![part(&[3])]);
        assert_eq!(kernel_monomials(4), vec![part(&[4]), part(&[3, 1])]);
    }

    #[test]
    fn monomial_order_follows_index_partitions() {
        let basis = Basis::default();
        let monos: Vec<Monomial> = Partition::all(4).iter().map(|p| basis.monomial(p)).collect();
        let mut sorted = monos.clone();
        sorted.sort();
        assert_eq!(sorted, monos);
        assert_eq!(monos[1].to_string(), "X(3,3;c) * K3");
    }

    #[test]
    fn small_thom_matrices() {
        let basis = Basis::default();
        let t1 = thom_matrix(1, &basis, 2).unwrap();
        assert_eq!(t1.matrix[(0, 0)], int(-48));
        let t2 = thom_matrix(2, &basis, 2).unwrap();
        assert_eq!(t2.cols[0], Monomial::new(vec![Factor::Hp2]));
        assert_eq!(t2.cols[1], Monomial::new(vec![Factor::K3, Factor::K3]));
        assert!(!t2.matrix.determinant().unwrap().is_zero());
        assert!(matches!(thom_matrix(2, &basis, 3), Err(Error::InvalidSample(_))));
    }

    #[test]
    fn generators_decompose_to_themselves() {
        let basis = Basis::default();
        let x35 = Monomial::new(vec![Factor::x(3, 5).unwrap()]);
        let d = decompose(&monomial_vector(&x35, 2), &basis, 2).unwrap();
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.coeff(&x35), int(1));
        let k3k3 = Monomial::new(vec![Factor::K3, Factor::K3]);
        let d = decompose(&monomial_vector(&k3k3, 2), &basis, 2).unwrap();
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.coeff(&k3k3), int(1));
    }

    #[test]
    fn elimination_preconditions() {
        let basis = Basis::default();
        let k3hp2 = Monomial::new(vec![Factor::K3, Factor::Hp2]);
        assert!(matches!(eliminate_k3(&k3hp2, &basis, 2), Err(Error::Precondition(_))));
        let x33 = Monomial::new(vec![Factor::x(3, 3).unwrap()]);
        assert!(matches!(eliminate_k3(&x33, &basis, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn base_case_elimination() {
        let basis = Basis::default();
        let mono = Monomial::new(vec![Factor::K3, Factor::x(3, 3).unwrap()]);
        let out = eliminate_k3(&mono, &basis, 2).unwrap();
        assert!(!out.contains_k3());
        assert!(out.genus().unwrap().is_zero());
        let supports: Vec<String> = out.terms().keys().map(ToString::to_string).collect();
        assert_eq!(supports, ["X(3,5;c)", "X(5,3;c)"]);
    }
}
