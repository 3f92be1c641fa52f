use num_traits::Zero;
use pontryagin::exact::{int, interpolate, rat, PolyC, Rat, RatMatrix};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = PolyC> {
    prop::collection::vec(small_rat(), 0..6).prop_map(PolyC::new)
}

fn int_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let rows: Vec<Vec<Rat>> = v.chunks(n).map(|r| r.iter().map(|&a| int(a)).collect()).collect();
        RatMatrix::from_rows(rows).unwrap()
    })
}

fn symmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    int_matrix(n).prop_map(move |m| {
        let t = m.transpose();
        let mut s = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = &m[(i, j)] + &t[(i, j)];
            }
        }
        s
    })
}

/// Product of elementary row additions: integral with determinant 1.
fn unimodular(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
        let mut u = RatMatrix::identity(n);
        for (i, j, a) in ops {
            if i == j {
                continue;
            }
            let mut e = RatMatrix::identity(n);
            e[(i, j)] = int(a);
            u = &e * &u;
        }
        u
    })
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, PolyC::zero());
        prop_assert_eq!(&a * &PolyC::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn interpolation_recovers_samples(p in poly(), extra in 0usize..3) {
        let bound = 5;
        let points: Vec<(Rat, Rat)> = (0..(bound + 1 + extra) as i64)
            .map(|i| (int(2 * i - 3), p.eval(&int(2 * i - 3))))
            .collect();
        prop_assert_eq!(interpolate(&points, bound).unwrap(), p);
    }

    #[test]
    fn inertia_is_a_congruence_invariant(s in symmetric(4), u in unimodular(4)) {
        let congruent = &(&u.transpose() * &s) * &u;
        prop_assert!(congruent.is_symmetric());
        prop_assert_eq!(s.inertia().unwrap(), congruent.inertia().unwrap());
        prop_assert_eq!(u.determinant().unwrap(), int(1));
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        prop_assert_eq!((&a * &b).determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn solve_inverts_multiplication(a in int_matrix(3), x in prop::collection::vec(small_rat(), 3)) {
        prop_assume!(!a.determinant().unwrap().is_zero());
        let b = a.mul_vec(&x).unwrap();
        prop_assert_eq!(a.solve(&b).unwrap(), x);
    }
}

#[test]
fn inertia_counts_sum_to_size() {
    let m = RatMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]).unwrap();
    let i = m.inertia().unwrap();
    assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
}
