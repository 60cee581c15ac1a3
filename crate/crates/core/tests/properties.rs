use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use simploid::dga::rational::{frac, from_text, int, to_text};
use simploid::dga::{
    endomorphism_algebra, matrix_algebra, quasi_invertible_solve, Complex, Element, QuasiInverse,
};
use simploid::nerve::sample::random_point;
use simploid::nerve::{
    catalan_lift, degeneracy, face, inner_horn_fill, nerve_check, EdgeWithQuasiInverse, NervePoint, UAlgebra,
};

fn m2(e: &[i64]) -> Element {
    Element::homogeneous(0, e.iter().map(|&x| int(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip_through_text(p in -1000i64..1000, q in 1i64..1000) {
        let x = frac(p, q);
        prop_assert_eq!(from_text(&to_text(&x)).unwrap(), x);
    }

    #[test]
    fn matrix_horns_fill_by_composition(f in prop::collection::vec(-9i64..10, 4), g in prop::collection::vec(-9i64..10, 4)) {
        let a = matrix_algebra(2);
        let (f, g) = (m2(&f), m2(&g));
        let horn = NervePoint::new(2, [(vec![0, 1], &f - &a.one()), (vec![1, 2], &g - &a.one())]).unwrap();
        let p = inner_horn_fill(&a, 2, 1, &horn, &Element::zero()).unwrap();
        prop_assert!(nerve_check(&a, &p).unwrap().is_point);
        prop_assert_eq!(p.f(&a, 0, 2), a.mul(&f, &g));
    }

    #[test]
    fn matrices_are_quasi_invertible_exactly_when_invertible(e in prop::collection::vec(-3i64..4, 4)) {
        let a = matrix_algebra(2);
        let f = m2(&e);
        let mu01 = &f - &a.one();
        let det = e[0] * e[3] - e[1] * e[2];
        match quasi_invertible_solve(&a, &Element::zero(), &Element::zero(), &mu01).unwrap() {
            QuasiInverse::Witness { g, h, k } => {
                prop_assert_ne!(det, 0);
                prop_assert_eq!(a.mul(&f, &g), a.one());
                let edge = EdgeWithQuasiInverse { mu0: Element::zero(), mu1: Element::zero(), mu01, g, h, k };
                let l = catalan_lift(&a, &edge).unwrap();
                prop_assert!(UAlgebra::new(&a).thick_edge_check(&l.a));
            }
            _ => prop_assert_eq!(det, 0),
        }
    }

    #[test]
    fn faces_of_degeneracies_are_identities(seed in any::<u64>(), c in 0i64..2, n in 0usize..3) {
        let a = endomorphism_algebra(&Complex::two_term(c)).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let p = random_point(&a, n, &mut r).unwrap();
        prop_assert!(nerve_check(&a, &p).unwrap().is_point);
        for j in 0..=n {
            let s = degeneracy(&p, j).unwrap();
            prop_assert!(nerve_check(&a, &s).unwrap().is_point);
            prop_assert_eq!(&face(&s, j).unwrap(), &p);
            prop_assert_eq!(&face(&s, j + 1).unwrap(), &p);
        }
        if n > 0 {
            for i in 0..=n {
                prop_assert!(nerve_check(&a, &face(&p, i).unwrap()).unwrap().is_point);
            }
        }
    }
}
