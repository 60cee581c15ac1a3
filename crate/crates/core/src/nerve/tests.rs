use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::json::{nerve_from_str, nerve_to_string};
use super::sample::{random_element, random_point, random_quasi_invertible_edge, random_strict_point};
use super::*;
use crate::dga::rational::{frac, int};
use crate::dga::{
    endomorphism_algebra, is_mc, matrix_algebra, quasi_invertible_solve, tensor_dga, CochainAlgebra,
    CochainShape, Complex, DGAlgebra, Element, QuasiInverse,
};
use crate::error::Error;
use crate::simplicial::{standard_simplex, thick_simplex};

fn m2(a: i64, b: i64, c: i64, d: i64) -> Element {
    Element::homogeneous(0, vec![int(a), int(b), int(c), int(d)])
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// End(V) for `V = ℚ → ℚ` in degrees 0, 1 with differential `c`.
fn end_v(c: i64) -> DGAlgebra {
    endomorphism_algebra(&Complex::two_term(c)).unwrap()
}

/// Horn data for `Λ²₁` with `μ_{01} = f - 1`, `μ_{12} = g - 1` and zero vertices.
fn two_horn(a: &DGAlgebra, f: &Element, g: &Element) -> NervePoint {
    NervePoint::new(2, [(vec![0, 1], f - &a.one()), (vec![1, 2], g - &a.one())]).unwrap()
}

#[test]
fn composable_matrices_form_a_two_simplex() {
    let a = matrix_algebra(2);
    let (f, g) = (m2(1, 2, 0, 1), m2(0, 1, 1, 0));
    let fg = a.mul(&f, &g);
    let mut p = two_horn(&a, &f, &g);
    p.set(vec![0, 2], &fg - &a.one());
    assert!(nerve_check(&a, &p).unwrap().is_point);
    assert_eq!(p.f(&a, 0, 2), fg);
    p.set(vec![0, 2], &f - &a.one());
    let c = nerve_check(&a, &p).unwrap();
    assert!(!c.is_point);
    assert_eq!(c.first_failure(), Some(&[0, 1, 2][..]));
    assert!(nerve_check(&a, &NervePoint::zero(3)).unwrap().is_point);
}

#[test]
fn simplicial_operators_act_on_tuples() {
    let a = matrix_algebra(2);
    let f = m2(2, 0, 1, 1);
    let edge = NervePoint::new(1, [(vec![0, 1], &f - &a.one())]).unwrap();
    assert_eq!(operator_action(&[0, 1], &edge).unwrap(), edge);
    let s0 = degeneracy(&edge, 0).unwrap();
    assert_eq!(s0.f(&a, 0, 1), a.one());
    assert_eq!(s0.f(&a, 1, 2), f);
    assert_eq!(s0.f(&a, 0, 2), f);
    assert!(nerve_check(&a, &s0).unwrap().is_point);
    assert_eq!(face(&s0, 1).unwrap(), edge);
    assert_eq!(face(&s0, 0).unwrap(), edge);
    assert!(operator_action(&[1, 0], &edge).is_err());
    assert!(operator_action(&[0, 2], &edge).is_err());
}

#[test]
fn matrix_horns_fill_by_composition() {
    let a = matrix_algebra(2);
    let (f, g) = (m2(1, 1, 0, 2), m2(3, 0, -1, 1));
    let p = inner_horn_fill(&a, 2, 1, &two_horn(&a, &f, &g), &Element::zero()).unwrap();
    assert_eq!(p.f(&a, 0, 2), a.mul(&f, &g));
    let space = filler_space(&a, 2, 1, &two_horn(&a, &f, &g)).unwrap();
    assert_eq!(space, FillerSpace { exists: true, dimension: 0, expected_dimension: 0 });
}

#[test]
fn horn_filling_rejects_bad_input() {
    let a = matrix_algebra(2);
    let h = two_horn(&a, &m2(1, 0, 0, 1), &m2(1, 0, 0, 1));
    assert!(matches!(inner_horn_fill(&a, 2, 0, &h, &Element::zero()), Err(Error::InvalidArgument(_))));
    assert!(matches!(inner_horn_fill(&a, 2, 2, &h, &Element::zero()), Err(Error::InvalidArgument(_))));
    let mut filled = h.clone();
    filled.set(vec![0, 2], m2(1, 0, 0, 0));
    assert!(matches!(inner_horn_fill(&a, 2, 1, &filled, &Element::zero()), Err(Error::InvalidArgument(_))));
    let e = end_v(1);
    let bad = NervePoint::new(2, [(vec![0], e.basis_element(1, 0)), (vec![0, 1], e.basis_element(0, 0))]).unwrap();
    assert!(matches!(inner_horn_fill(&e, 2, 1, &bad, &Element::zero()), Err(Error::NotAPoint(_))));
    let x = e.basis_element(0, 0);
    let ok = NervePoint::zero(2);
    assert!(matches!(inner_horn_fill(&e, 2, 1, &ok, &x), Err(Error::DegreeMismatch { expected: -1, found: 0 })));
}

#[test]
fn endomorphism_horns_have_a_line_of_fillers() {
    for c in [0, 1] {
        let a = end_v(c);
        let mut r = rng(7 + c as u64);
        for _ in 0..5 {
            let p = random_strict_point(&a, 2, &mut r).unwrap();
            let mut h = p.clone();
            h.set(vec![0, 2], Element::zero());
            h.set(vec![0, 1, 2], Element::zero());
            let space = filler_space(&a, 2, 1, &h).unwrap();
            assert_eq!(space, FillerSpace { exists: true, dimension: 1, expected_dimension: 1 });
            let x = a.basis_element(-1, 0);
            let at = |s: i64| inner_horn_fill(&a, 2, 1, &h, &x.scaled(&int(s))).unwrap().component(&[0, 2]);
            let (p0, p1, p2) = (at(0), at(1), at(2));
            assert_eq!(&p2 - &p0, (&p1 - &p0).scaled(&int(2)));
        }
    }
}

#[test]
fn three_dimensional_horns_fill_uniquely() {
    for (a, seed) in [(matrix_algebra(2), 1), (end_v(0), 2), (end_v(1), 3)] {
        let mut r = rng(seed);
        for i in 1..=2 {
            let p = random_point(&a, 3, &mut r).unwrap();
            let mut missing: Vec<usize> = (0..=3).collect();
            missing.remove(i);
            let mut h = p.clone();
            h.set(vec![0, 1, 2, 3], Element::zero());
            h.set(missing, Element::zero());
            let space = filler_space(&a, 3, i, &h).unwrap();
            assert_eq!(space, FillerSpace { exists: true, dimension: 0, expected_dimension: 0 });
            assert_eq!(inner_horn_fill(&a, 3, i, &h, &Element::zero()).unwrap(), p);
        }
    }
}

#[test]
fn random_points_are_points() {
    let a = end_v(1);
    let mut r = rng(11);
    for n in 0..=4 {
        let p = random_point(&a, n, &mut r).unwrap();
        assert!(nerve_check(&a, &p).unwrap().is_point, "n = {n}");
    }
}

/// `x = Σ e_I ⊗ μ_I` in `C^•(Δⁿ) ⊗ A`.
fn as_cochain(c: &CochainAlgebra, p: &NervePoint) -> Element {
    let comps: Vec<(Vec<usize>, Element)> = p.components().map(|(t, x)| (t.clone(), x.clone())).collect();
    c.from_words(comps.iter().map(|(t, x)| (t.as_slice(), x)))
}

#[test]
fn nerve_residuals_match_cochain_maurer_cartan() {
    let a = end_v(1);
    let mut r = rng(5);
    for n in 1..=3 {
        let shape = CochainShape::new(&standard_simplex(n), n);
        let c = tensor_dga(&shape, &a).unwrap();
        for trial in 0..6 {
            let mut p = random_point(&a, n, &mut r).unwrap();
            if trial % 2 == 1 {
                p.set(vec![0, 1], &p.component(&[0, 1]) + &a.basis_element(0, 1));
            }
            let x = as_cochain(&c, &p);
            let mc = is_mc(&c.algebra, &x).unwrap();
            assert_eq!(mc, nerve_check(&a, &p).unwrap().is_point, "n = {n}, trial {trial}");
            let curvature = &c.algebra.d(&x) + &c.algebra.mul(&x, &x);
            for t in tuples(n, n + 1) {
                let lhs = c.component_by_word(&curvature, &t);
                let rhs = residual(&a, &p, &t);
                assert!(lhs == rhs || lhs == -&rhs, "component {t:?}");
            }
        }
    }
}

fn thick_interval(a: &DGAlgebra, top: usize) -> CochainAlgebra {
    tensor_dga(&CochainShape::new(&thick_simplex(1, top), top), a).unwrap()
}

fn word_element(c: &CochainAlgebra, w: &[usize], x: &Element) -> Element {
    c.from_words([(w, x)])
}

#[test]
fn psi_on_generators() {
    let a = end_v(1);
    let c = thick_interval(&a, 4);
    let u = UAlgebra::new(&a);
    assert_eq!(psi(&c, &c.algebra.one(), 0).unwrap(), u.identity());
    let e0 = psi(&c, &word_element(&c, &[0], &a.one()), 0).unwrap();
    assert_eq!(e0.coeff(0, 0, 0), a.one());
    assert!(e0.coeff(1, 1, 0).is_zero() && e0.coeff(0, 1, 0).is_zero());
    let x = a.basis_element(0, 1);
    let e01 = psi(&c, &word_element(&c, &[0, 1], &x), 1).unwrap();
    assert_eq!(e01.coeff(0, 1, 0), x);
    assert!(e01.coeff(0, 0, 0).is_zero() && e01.coeff(1, 1, 0).is_zero());
    let e10 = psi(&c, &word_element(&c, &[1, 0], &a.one()), 1).unwrap();
    assert_eq!(e10.coeff(1, 0, 1), a.one());
    assert!(e10.in_va());
    assert!(matches!(psi(&c, &c.algebra.one(), 9), Err(Error::InsufficientTruncation { .. })));
    let plain = tensor_dga(&CochainShape::new(&standard_simplex(1), 1), &a).unwrap();
    assert!(psi(&plain, &plain.algebra.one(), 0).is_err());
}

#[test]
fn psi_is_a_dga_isomorphism_onto_va() {
    for a in [matrix_algebra(2), end_v(0), end_v(1)] {
        let top = (4 - a.lo()) as usize;
        let c = thick_interval(&a, top);
        let u = UAlgebra::new(&a);
        let basis: Vec<(i32, Element)> =
            c.algebra.basis_elements().into_iter().filter(|(t, _, _)| *t <= 2).map(|(t, _, x)| (t, x)).collect();
        for (t, x) in &basis {
            let px = psi(&c, x, *t).unwrap();
            assert!(px.in_va());
            assert_eq!(&psi_inverse(&c, &px).unwrap(), x);
            assert!(delta_check(&c, x, *t).unwrap(), "δ on {}", c.algebra.format(x));
            for (s, y) in &basis {
                let lhs = psi(&c, &c.algebra.mul(x, y), t + s).unwrap();
                assert_eq!(lhs, u.mul(&px, &psi(&c, y, *s).unwrap()));
            }
        }
        for t in a.lo()..=2 {
            assert_eq!(u.va_basis(t).len(), c.algebra.dim(t), "degree {t}");
        }
    }
}

#[test]
fn thick_edges_square_to_u() {
    let a = matrix_algebra(2);
    let u = UAlgebra::new(&a);
    assert!(u.thick_edge_check(&u.a0()));
    assert!(!u.thick_edge_check(&u.identity()));
    let lift = |f: Element, g: Element| Matrix2U::new(1, [[vec![], vec![f]], [vec![Element::zero(), g], vec![]]]).unwrap();
    assert!(u.thick_edge_check(&lift(m2(2, 0, 0, 1), Element::homogeneous(0, vec![frac(1, 2), int(0), int(0), int(1)]))));
    assert!(!u.thick_edge_check(&lift(m2(2, 0, 0, 1), a.one())));
}

fn matrix_edge(a: &DGAlgebra, f: Element) -> EdgeWithQuasiInverse {
    let mu01 = &f - &a.one();
    let QuasiInverse::Witness { g, h, k } = quasi_invertible_solve(a, &Element::zero(), &Element::zero(), &mu01).unwrap()
    else {
        panic!("invertible matrix")
    };
    EdgeWithQuasiInverse { mu0: Element::zero(), mu1: Element::zero(), mu01, g, h, k }
}

#[test]
fn catalan_lift_of_an_invertible_matrix() {
    let a = matrix_algebra(2);
    let f = m2(1, 2, 0, 1);
    let l = catalan_lift(&a, &matrix_edge(&a, f.clone())).unwrap();
    assert_eq!(l.a.coeff(0, 1, 0), f);
    assert_eq!(l.a.coeff(1, 0, 1), m2(1, -2, 0, 1));
    assert!(l.a.coeff(0, 0, 0).is_zero() && l.a.coeff(1, 1, 0).is_zero());
    assert_eq!(l.terms, 1);
    let one = catalan_lift(&a, &matrix_edge(&a, a.one())).unwrap();
    assert_eq!(one.a.coeff(0, 1, 0), a.one());
    assert_eq!(one.a.coeff(1, 0, 1), a.one());
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[test]
fn catalan_numbers_match_the_closed_form() {
    let c = catalan(12);
    assert_eq!(&c[..4], &[1, 1, 2, 5].map(BigInt::from)[..]);
    for (n, x) in c.iter().enumerate() {
        let n = n as u64;
        assert_eq!(*x, binomial(2 * n, n) / BigInt::from(n + 1));
    }
}

#[test]
fn catalan_lifts_of_random_edges() {
    for (c, seed) in [(0, 21), (1, 22)] {
        let a = end_v(c);
        let u = UAlgebra::new(&a);
        let mut r = rng(seed);
        let mut lifted = 0;
        for _ in 0..6 {
            let Some(edge) = random_quasi_invertible_edge(&a, &mut r, 20).unwrap() else { continue };
            edge.validate(&a).unwrap();
            let l = catalan_lift(&a, &edge).unwrap();
            assert!(u.thick_edge_check(&l.a));
            assert_eq!(l.a.coeff(0, 0, 0), edge.mu0);
            assert_eq!(l.a.coeff(1, 1, 0), -&edge.mu1);
            assert_eq!(l.a.coeff(0, 1, 0), &edge.mu01 + &a.one());
            lifted += 1;
        }
        assert!(lifted >= 3);
    }
}

#[test]
fn smoothness_identities_hold_at_lifted_points() {
    let a = matrix_algebra(2);
    let l = catalan_lift(&a, &matrix_edge(&a, m2(1, 1, 0, 1))).unwrap();
    let rep = smoothness_identities(&a, &l.a, -1..=2);
    assert!(rep.holds, "{:?}", rep.first_failure());
    for (c, seed) in [(0, 31), (1, 32)] {
        let e = end_v(c);
        let mut r = rng(seed);
        for _ in 0..3 {
            let Some(edge) = random_quasi_invertible_edge(&e, &mut r, 20).unwrap() else { continue };
            let l = catalan_lift(&e, &edge).unwrap();
            let rep = smoothness_identities(&e, &l.a, -1..=2);
            assert!(rep.holds, "{:?}", rep.first_failure());
        }
    }
}

#[test]
fn smoothness_identities_fail_off_the_thick_nerve() {
    let a = matrix_algebra(2);
    let u = UAlgebra::new(&a);
    let bad = u.a0().scaled(&int(2));
    assert!(!u.thick_edge_check(&bad));
    assert!(!smoothness_identities(&a, &bad, 0..=1).holds);
}

#[test]
fn sampled_nerve_is_a_simplicial_object() {
    let a = matrix_algebra(2);
    let f = m2(1, 1, 0, 1);
    let g = m2(0, 1, 1, 0);
    let p = inner_horn_fill(&a, 2, 1, &two_horn(&a, &f, &g), &Element::zero()).unwrap();
    let s = nerve_as_simplicial_object(&a, &[p], 3).unwrap();
    assert_eq!(s.object.size(0), 1);
    assert_eq!(s.object.size(1), 4);
    let rep = sampled_horn_fills(&a, &s, 2, 1).unwrap();
    assert!(rep.holds);
    assert!(rep.horns >= 4);
    assert_eq!(rep.unique, rep.horns);
    let rep3 = sampled_horn_fills(&a, &s, 3, 1).unwrap();
    assert!(rep3.holds && rep3.horns > 0);
    let empty = nerve_as_simplicial_object(&a, &[], 2).unwrap();
    assert_eq!(empty.object.size(0), 0);
    assert_eq!(sampled_horn_fills(&a, &empty, 2, 1).unwrap().horns, 0);
    let mut bad = NervePoint::zero(2);
    bad.set(vec![0, 2], m2(1, 0, 0, 0));
    assert!(matches!(nerve_as_simplicial_object(&a, &[bad], 2), Err(Error::NotAPoint(_))));
}

#[test]
fn nerve_points_round_trip_through_json() {
    let a = end_v(1);
    let mut r = rng(3);
    let p = random_point(&a, 3, &mut r).unwrap();
    let text = nerve_to_string(&p);
    assert_eq!(nerve_from_str(&a, &text).unwrap(), p);
    assert_eq!(nerve_to_string(&nerve_from_str(&a, &text).unwrap()), text);
    assert!(nerve_from_str(&a, &text.replace("nerve.v1", "nerve.v0")).is_err());
    assert!(nerve_from_str(&a, "{").is_err());
    let q = NervePoint::new(1, [(vec![0, 1], random_element(&a, 0, &mut r))]).unwrap();
    assert_eq!(nerve_from_str(&a, &nerve_to_string(&q)).unwrap(), q);
}

/// The lift, pulled back along `ψ`, is a thick-nerve point restricting to the edge.
fn assert_lift_restricts(a: &DGAlgebra, edge: &EdgeWithQuasiInverse, l: &CatalanLift) {
    let u = UAlgebra::new(a);
    let c = thick_interval(a, (1 - a.lo()) as usize);
    let x = psi_inverse(&c, &l.a.sub(&u.a0()).unwrap()).unwrap();
    assert!(is_mc(&c.algebra, &x).unwrap());
    assert_eq!(c.component_by_word(&x, &[0]), edge.mu0);
    assert_eq!(c.component_by_word(&x, &[1]), edge.mu1);
    assert_eq!(c.component_by_word(&x, &[0, 1]), edge.mu01);
}

#[test]
fn lifts_are_thick_nerve_points_over_the_edge() {
    let a = matrix_algebra(2);
    let edge = matrix_edge(&a, m2(2, 1, 1, 1));
    let l = catalan_lift(&a, &edge).unwrap();
    assert_eq!(l.source, BetaSource::Formula);
    assert_lift_restricts(&a, &edge, &l);
    let e = end_v(0);
    let mut r = rng(41);
    let mut sources = Vec::new();
    for _ in 0..8 {
        let Some(edge) = random_quasi_invertible_edge(&e, &mut r, 20).unwrap() else { continue };
        let l = catalan_lift(&e, &edge).unwrap();
        assert_lift_restricts(&e, &edge, &l);
        sources.push(l.source);
    }
    assert!(!sources.is_empty());
}

#[test]
fn lifts_over_a_longer_complex_use_more_catalan_terms() {
    let v = Complex { lo: 0, dims: vec![1, 1, 1, 1], diff: vec![vec![vec![int(1)]], vec![vec![int(0)]], vec![vec![int(1)]]] };
    let a = endomorphism_algebra(&v).unwrap();
    assert_eq!(a.lo(), -3);
    let u = UAlgebra::new(&a);
    let mut r = rng(51);
    let mut most = 0;
    for _ in 0..6 {
        let Some(edge) = random_quasi_invertible_edge(&a, &mut r, 20).unwrap() else { continue };
        let l = catalan_lift(&a, &edge).unwrap();
        assert!(u.thick_edge_check(&l.a));
        assert_lift_restricts(&a, &edge, &l);
        for _ in 0..3 {
            let gamma = Matrix2U::new(
                -2,
                [
                    [vec![random_element(&a, -2, &mut r)], vec![random_element(&a, -3, &mut r)]],
                    [vec![random_element(&a, -1, &mut r)], vec![random_element(&a, -2, &mut r)]],
                ],
            )
            .unwrap();
            let shifted = l.beta.add(&u.twisted_d(&l.alpha, &gamma)).unwrap();
            let (series, terms) = catalan_series(&u, &l.alpha, &shifted).unwrap();
            assert!(u.thick_edge_check(&series));
            most = most.max(terms);
        }
    }
    assert_eq!(most, 2);
}
