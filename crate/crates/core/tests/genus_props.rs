use num_traits::Zero;
use pontryagin::charclass::{class_hp2, class_k3, class_x, product, CParam, PNumberVector};
use pontryagin::cohomring::{intersection_signature, RingParams};
use pontryagin::exact::{int, rat, Rat};
use pontryagin::genus::{
    a_hat_coefficients, elliptic_log_series, genus_of, genus_polynomial, l_genus_coefficients,
    GenusValue, SeriesQ,
};
use pontryagin::partition::Partition;
use proptest::prelude::*;

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn coeffs(pairs: &[(&[u32], Rat)]) -> Vec<(Partition, Rat)> {
    pairs.iter().map(|(p, r)| (part(p), r.clone())).collect()
}

#[test]
fn log_series_solves_its_differential_equation() {
    // g'(u)^2 (1 - 2δu^2 + εu^4) = 1
    let order = 13;
    let g = elliptic_log_series(order);
    let dg = g.derivative();
    let quartic = SeriesQ::new(
        order,
        vec![
            GenusValue::one(),
            GenusValue::zero(),
            GenusValue::delta().scale(&int(-2)),
            GenusValue::zero(),
            GenusValue::epsilon(),
        ],
    );
    let lhs = dg.mul(&dg).mul(&quartic);
    assert_eq!(lhs, SeriesQ::one(order - 1));
}

#[test]
fn inverse_composes_to_identity() {
    let g = elliptic_log_series(11);
    let f = g.reversion().unwrap();
    let id = g.compose(&f).unwrap();
    let mut expected = vec![GenusValue::zero(); 12];
    expected[1] = GenusValue::one();
    assert_eq!(id, SeriesQ::new(11, expected));
}

#[test]
fn classical_l_and_a_hat_polynomials() {
    let l2 = l_genus_coefficients(2);
    for (p, r) in coeffs(&[(&[2], rat(7, 45)), (&[1, 1], rat(-1, 45))]) {
        assert_eq!(l2[&p], r);
    }
    let l3 = l_genus_coefficients(3);
    for (p, r) in coeffs(&[
        (&[3], rat(62, 945)),
        (&[2, 1], rat(-13, 945)),
        (&[1, 1, 1], rat(2, 945)),
    ]) {
        assert_eq!(l3[&p], r);
    }
    let a2 = a_hat_coefficients(2);
    for (p, r) in coeffs(&[(&[2], rat(-4, 5760)), (&[1, 1], rat(7, 5760))]) {
        assert_eq!(a2[&p], r);
    }
}

#[test]
fn normalization_on_k3_and_hp2() {
    assert_eq!(genus_of(&class_k3(), None).unwrap(), GenusValue::delta().scale(&int(-16)));
    assert_eq!(genus_of(&class_hp2(), None).unwrap(), GenusValue::epsilon());
    let sig = |v: &PNumberVector| genus_of(v, None).unwrap().specialize(&int(1), &int(1));
    let a_hat = |v: &PNumberVector| genus_of(v, None).unwrap().specialize(&rat(-1, 8), &int(0));
    assert_eq!(sig(&class_k3()), int(-16));
    assert_eq!(sig(&class_hp2()), int(1));
    assert_eq!(a_hat(&class_k3()), int(2));
    assert!(a_hat(&class_hp2()).is_zero());
}

#[test]
fn genus_vanishes_on_every_x() {
    let odd = [3u32, 5, 7, 9];
    for &n in &odd {
        for &k in &odd {
            if n + k > 16 {
                continue;
            }
            let p = RingParams { n, k };
            let v = class_x(p, CParam::Symbolic).unwrap();
            assert!(genus_polynomial(&v).is_empty(), "{p}");
            for c in [-4, 2, 6] {
                assert!(genus_of(&v, Some(c)).unwrap().is_zero(), "{p} c={c}");
            }
        }
    }
}

#[test]
fn signature_matches_intersection_form() {
    for (n, k) in [(3, 3), (3, 5), (5, 3)] {
        let p = RingParams { n, k };
        for c in [-2, 2, 4] {
            let v = class_x(p, CParam::Value(c)).unwrap();
            let sig = genus_of(&v, None).unwrap().specialize(&int(1), &int(1));
            assert_eq!(sig, int(intersection_signature(p, c).unwrap()), "{p} c={c}");
        }
    }
}

fn pool() -> Vec<PNumberVector> {
    vec![
        class_k3(),
        class_hp2(),
        class_x(RingParams { n: 3, k: 3 }, CParam::Value(2)).unwrap(),
        class_x(RingParams { n: 3, k: 5 }, CParam::Value(4)).unwrap(),
        product(&class_k3(), &class_hp2()),
    ]
}

proptest! {
    #[test]
    fn genus_is_multiplicative(a in 0usize..5, b in 0usize..5) {
        let pool = pool();
        let ab = product(&pool[a], &pool[b]);
        let lhs = genus_of(&ab, None).unwrap();
        let rhs = &genus_of(&pool[a], None).unwrap() * &genus_of(&pool[b], None).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
