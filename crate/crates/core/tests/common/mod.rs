//! Test-side oracles, written independently of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use pontryagin::cohomring::RingParams;
use pontryagin::exact::{int, PolyC, Rat};

/// Polynomial in `x, y` over `Q[c]`, not reduced modulo any relation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Raw(pub BTreeMap<(u32, u32), PolyC>);

impl Raw {
    pub fn monomial(a: u32, b: u32, coeff: PolyC) -> Raw {
        let mut r = Raw::default();
        r.add_term((a, b), coeff);
        r
    }

    pub fn one() -> Raw {
        Raw::monomial(0, 0, PolyC::one())
    }

    pub fn add_term(&mut self, e: (u32, u32), coeff: PolyC) {
        let slot = self.0.entry(e).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Raw) -> Raw {
        let mut out = self.clone();
        for (e, a) in &other.0 {
            out.add_term(*e, a.clone());
        }
        out
    }

    /// Product, keeping only total degree `<= max_deg`.
    pub fn mul(&self, other: &Raw, max_deg: u32) -> Raw {
        let mut out = Raw::default();
        for (&(a1, b1), p) in &self.0 {
            for (&(a2, b2), q) in &other.0 {
                if a1 + a2 + b1 + b2 <= max_deg {
                    out.add_term((a1 + a2, b1 + b2), p * q);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32, max_deg: u32) -> Raw {
        (0..e).fold(Raw::one(), |acc, _| acc.mul(self, max_deg))
    }

    pub fn degree_part(&self, d: u32) -> Raw {
        Raw(self.0.iter().filter(|((a, b), _)| a + b == d).map(|(e, p)| (*e, p.clone())).collect())
    }

    /// Terms that a single relation applies to.
    pub fn redexes(&self, params: RingParams) -> Vec<(u32, u32)> {
        self.0.keys().copied().filter(|&(a, b)| a > params.n || b > params.k).collect()
    }

    /// One rewriting step on the `pick`-th redex: `x^{n+1} = 0` or
    /// `y^{k+1} = -c x y^k`.
    pub fn rewrite_once(&self, params: RingParams, pick: usize) -> Option<Raw> {
        let redexes = self.redexes(params);
        if redexes.is_empty() {
            return None;
        }
        let (a, b) = redexes[pick % redexes.len()];
        let mut out = self.clone();
        let coeff = out.0.remove(&(a, b)).expect("present");
        if a <= params.n {
            out.add_term((a + 1, b - 1), &coeff * &PolyC::from_ints(&[0, -1]));
        }
        Some(out)
    }

    /// Normal form by repeated single steps, choosing redexes via `picks`.
    pub fn normal_form(&self, params: RingParams, mut picks: impl FnMut() -> usize) -> Raw {
        let mut cur = self.clone();
        while let Some(next) = cur.rewrite_once(params, picks()) {
            cur = next;
        }
        cur
    }

    pub fn coeff(&self, e: (u32, u32)) -> PolyC {
        self.0.get(&e).cloned().unwrap_or_default()
    }
}

/// `<x^n y^k>`-coefficient of `r` after reduction.
pub fn top_coefficient(r: &Raw, params: RingParams) -> PolyC {
    r.degree_part(params.n + params.k)
        .normal_form(params, || 0)
        .coeff((params.n, params.k))
}

/// `x^2` with multiplicity `n+1`, `y^2` with multiplicity `k`, `(y + c x)^2` once.
pub fn oracle_roots(params: RingParams) -> Vec<(Raw, u32)> {
    let x = Raw::monomial(1, 0, PolyC::one());
    let y = Raw::monomial(0, 1, PolyC::one());
    let ycx = y.add(&Raw::monomial(1, 0, PolyC::from_ints(&[0, 1])));
    let d = params.n + params.k;
    vec![(x.pow(2, d), params.n + 1), (y.pow(2, d), params.k), (ycx.pow(2, d), 1)]
}

/// `s_m` as the sum of `m`-th powers of the roots.
pub fn oracle_s(params: RingParams) -> PolyC {
    let m = (params.n + params.k) / 2;
    let d = params.n + params.k;
    let mut total = Raw::default();
    for (r, mult) in oracle_roots(params) {
        let mut p = r.pow(m, d);
        for c in p.0.values_mut() {
            *c = c.scale(&int(mult as i64));
        }
        total = total.add(&p);
    }
    top_coefficient(&total, params)
}

/// `q_m = sum_{i != j} r_i r_j^{m-1}` over the individual roots: ordered
/// pairs of root types weighted by multiplicity, minus the diagonal.
pub fn oracle_q(params: RingParams) -> PolyC {
    let m = (params.n + params.k) / 2;
    let d = params.n + params.k;
    let roots = oracle_roots(params);
    let mut total = Raw::default();
    for (ra, ma) in &roots {
        for (rb, mb) in &roots {
            let pairs = if std::ptr::eq(ra, rb) { ma * (ma - 1) } else { ma * mb };
            if pairs == 0 {
                continue;
            }
            let mut t = ra.mul(&rb.pow(m - 1, d), d);
            for c in t.0.values_mut() {
                *c = c.scale(&int(pairs as i64));
            }
            total = total.add(&t);
        }
    }
    top_coefficient(&total, params)
}

/// Basis of the null space of the rows, by reduced row echelon form.
pub fn null_space(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..ncols {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); ncols];
            v[fc] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect()
}
