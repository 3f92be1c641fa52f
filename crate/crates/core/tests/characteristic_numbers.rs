mod common;

use num_traits::Zero;
use pontryagin::charclass::{
    class_hp2, class_k3, class_x, euler_characteristic, pontryagin_number, product, q_closed_formula,
    q_number, s_closed_formula, s_number, spin_check, CParam, PNumberVector,
};
use pontryagin::cohomring::RingParams;
use pontryagin::exact::{int, PolyC};
use pontryagin::partition::Partition;
use pontryagin::witness::PontryaginFunctional;
use pontryagin::Error;
use proptest::prelude::*;

fn grid() -> Vec<RingParams> {
    let odd = [3u32, 5, 7, 9];
    let mut out = Vec::new();
    for &n in &odd {
        for &k in &odd {
            if n + k <= 20 {
                out.push(RingParams { n, k });
            }
        }
    }
    out
}

fn poly(coeffs: &[i64]) -> PolyC {
    PolyC::from_ints(coeffs)
}

#[test]
fn quoted_s_and_q_values() {
    let p35 = RingParams { n: 3, k: 5 };
    let p53 = RingParams { n: 5, k: 3 };
    assert_eq!(s_number(p35).unwrap(), poly(&[0, 0, 0, 30]));
    assert_eq!(s_number(p53).unwrap(), poly(&[0, 0, 0, 0, 0, 18]));
    assert_eq!(q_number(p53).unwrap(), poly(&[0, 0, 0, 42, 0, -3]));
    assert_eq!(q_number(p35).unwrap(), poly(&[0, 0, 0, 30]));
    assert_eq!(s_number(RingParams { n: 3, k: 3 }).unwrap(), poly(&[0, 0, 0, 7]));
}

#[test]
fn s_agrees_across_four_computations() {
    for p in grid() {
        let m = p.weight().unwrap();
        let v = class_x(p, CParam::Symbolic).unwrap();
        let functional = PontryaginFunctional::s(m).unwrap().apply(&v).unwrap();
        let roots = s_number(p).unwrap();
        assert_eq!(roots, s_closed_formula(p).unwrap(), "{p}");
        assert_eq!(roots, functional, "{p}");
        assert_eq!(roots, common::oracle_s(p), "{p}");
    }
}

#[test]
fn q_agrees_across_four_computations() {
    for p in grid() {
        let m = p.weight().unwrap();
        let v = class_x(p, CParam::Symbolic).unwrap();
        let functional = PontryaginFunctional::q(m).unwrap().apply(&v).unwrap();
        let roots = q_number(p).unwrap();
        assert_eq!(roots, q_closed_formula(p).unwrap(), "{p}");
        assert_eq!(roots, functional, "{p}");
        assert_eq!(roots, common::oracle_q(p), "{p}");
    }
}

#[test]
fn q_has_no_linear_term_for_n_3() {
    for k in [3, 5, 7, 9] {
        assert!(q_number(RingParams { n: 3, k }).unwrap().coeff(1).is_zero());
    }
}

#[test]
fn pontryagin_numbers_match_the_raw_oracle() {
    for p in grid().into_iter().filter(|p| p.n + p.k <= 10) {
        let m = p.weight().unwrap();
        let d = p.n + p.k;
        let roots = common::oracle_roots(p);
        // p_i = e_i of the roots, from the expanded product of (1 + r)
        let mut total = common::Raw::one();
        for (r, mult) in &roots {
            let factor = common::Raw::one().add(r);
            total = total.mul(&factor.pow(*mult, d), d);
        }
        for lambda in Partition::all(m) {
            let mut prod = common::Raw::one();
            for &part in lambda.parts() {
                prod = prod.mul(&total.degree_part(2 * part), d);
            }
            assert_eq!(
                pontryagin_number(p, &lambda).unwrap(),
                common::top_coefficient(&prod, p),
                "{p} {lambda}"
            );
        }
    }
}

#[test]
fn numbers_are_odd_polynomials_of_degree_at_most_n() {
    for p in grid().into_iter().filter(|p| p.n + p.k <= 10) {
        let v = class_x(p, CParam::Symbolic).unwrap();
        for (lambda, q) in &v.numbers {
            assert!(q.is_odd(), "{p} {lambda}: {q}");
            assert!(q.degree().unwrap_or(0) <= p.n as usize, "{p} {lambda}: {q}");
        }
    }
}

#[test]
fn spin_truth_table() {
    for n in 1..=6 {
        for k in 1..=6 {
            for c in -5..=5 {
                let got = spin_check(RingParams { n, k }, c);
                if n % 2 != k % 2 {
                    assert_eq!(got, Err(Error::ParityMismatch { n, k }));
                } else {
                    assert_eq!(got, Ok(n % 2 == 1 && c % 2 == 0), "n={n} k={k} c={c}");
                }
            }
        }
    }
}

#[test]
fn euler_characteristic_is_product_of_fibre_and_base() {
    for p in grid() {
        assert_eq!(euler_characteristic(p), PolyC::constant(int(((p.n + 1) * (p.k + 1)) as i64)));
    }
}

fn factor_pool() -> Vec<PNumberVector> {
    vec![
        class_k3(),
        class_hp2(),
        class_x(RingParams { n: 3, k: 3 }, CParam::Symbolic).unwrap(),
        class_x(RingParams { n: 3, k: 3 }, CParam::Value(4)).unwrap(),
        class_x(RingParams { n: 3, k: 5 }, CParam::Value(2)).unwrap(),
    ]
}

proptest! {
    #[test]
    fn products_commute_and_associate(a in 0usize..5, b in 0usize..5, c in 0usize..5) {
        let pool = factor_pool();
        let (a, b, c) = (&pool[a], &pool[b], &pool[c]);
        prop_assert_eq!(&product(a, b).numbers, &product(b, a).numbers);
        prop_assert_eq!(
            &product(&product(a, b), c).numbers,
            &product(a, &product(b, c)).numbers
        );
    }

    #[test]
    fn s_vanishes_on_products(a in 0usize..5, b in 0usize..5) {
        let pool = factor_pool();
        let v = product(&pool[a], &pool[b]);
        prop_assert!(PontryaginFunctional::s(v.m).unwrap().apply(&v).unwrap().is_zero());
    }
}

#[test]
fn q_vanishes_without_a_large_factor() {
    let k3 = class_k3();
    let k3_cubed = product(&product(&k3, &k3), &k3);
    assert!(PontryaginFunctional::q(3).unwrap().apply(&k3_cubed).unwrap().is_zero());
    let hp2_squared = product(&class_hp2(), &class_hp2());
    assert!(PontryaginFunctional::q(4).unwrap().apply(&hp2_squared).unwrap().is_zero());
    // a factor of weight m - 1 next to K3 is what q detects
    let x33 = class_x(RingParams { n: 3, k: 3 }, CParam::Symbolic).unwrap();
    let q = PontryaginFunctional::q(4).unwrap().apply(&product(&k3, &x33)).unwrap();
    // q(K3 x M) = <p_1, K3> * s_3(M) = -48 * 7c^3
    assert_eq!(q, poly(&[0, 0, 0, -336]));
}
