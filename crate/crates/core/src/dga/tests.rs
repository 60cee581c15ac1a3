use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::json::{dga_from_str, dga_to_string, element_from_json, element_to_json};
use super::rational::{frac, int, sign};
use super::*;
use crate::error::Error;
use crate::simplicial::{standard_simplex, thick_simplex};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Basis element of a plain cochain algebra by vertex word.
fn e(c: &CochainAlgebra, w: &[usize]) -> Element {
    let (k, cell) = c.shape.cell_of_word(w).expect("cell");
    c.from_components([(k, cell, &c.coeff.one())])
}

#[test]
fn interval_coboundary_and_cup_products() {
    let c = cochain_dga(&standard_simplex(1), 1).unwrap();
    let a = &c.algebra;
    assert_eq!(a.d(&e(&c, &[0])), -&e(&c, &[0, 1]));
    assert_eq!(a.d(&e(&c, &[1])), e(&c, &[0, 1]));
    assert_eq!(a.mul(&e(&c, &[0]), &e(&c, &[0, 1])), e(&c, &[0, 1]));
    assert_eq!(a.mul(&e(&c, &[0, 1]), &e(&c, &[1])), e(&c, &[0, 1]));
    assert!(a.mul(&e(&c, &[0, 1]), &e(&c, &[0, 1])).is_zero());
    assert!(a.mul(&e(&c, &[1]), &e(&c, &[0, 1])).is_zero());
    assert_eq!(a.one(), &e(&c, &[0]) + &e(&c, &[1]));
}

#[test]
fn cochain_dimensions_are_binomial() {
    for n in 0..=4 {
        let c = cochain_dga(&standard_simplex(n), n).unwrap();
        for i in 0..=n {
            assert_eq!(c.algebra.dim(i as i32), binomial(n + 1, i + 1), "C^{i}(Δ^{n})");
        }
    }
}

#[test]
fn cochain_algebras_satisfy_the_invariants() {
    for n in 2..=3 {
        cochain_dga(&standard_simplex(n), n).unwrap().algebra.validate().unwrap();
    }
    for n in 1..=2 {
        let c = cochain_dga(&thick_simplex(n, 3), 3).unwrap();
        assert_eq!(c.algebra.dim(3), (n + 1) * n.pow(3));
        c.algebra.validate().unwrap();
    }
}

/// Cochains on `Δⁿ` from first principles: basis = vertex subsets,
/// `δe_S = Σ_{v∉S} (-1)^{pos(v, S∪v)} e_{S∪v}`, `e_S ∪ e_T = e_{S∪T}` when `max S = min T`.
struct SubsetOracle {
    n: usize,
}

impl SubsetOracle {
    fn coboundary(&self, s: &BTreeSet<usize>) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for v in 0..=self.n {
            if s.contains(&v) {
                continue;
            }
            let mut t = s.clone();
            t.insert(v);
            let pos = t.iter().position(|&x| x == v).unwrap();
            out.insert(t.into_iter().collect(), if pos % 2 == 0 { 1 } else { -1 });
        }
        out
    }

    fn cup(&self, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> Option<Vec<usize>> {
        (s.iter().last() == t.iter().next()).then(|| s.union(t).copied().collect())
    }
}

fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (1u32..1 << (n + 1)).map(|m| (0..=n).filter(|&v| m >> v & 1 == 1).collect()).collect()
}

#[test]
fn cochains_agree_with_the_subset_oracle() {
    for n in 2..=3 {
        let c = cochain_dga(&standard_simplex(n), n).unwrap();
        let oracle = SubsetOracle { n };
        let as_element = |m: &BTreeMap<Vec<usize>, i64>| {
            m.iter().fold(Element::zero(), |acc, (w, &k)| &acc + &e(&c, w).scaled(&int(k)))
        };
        for s in subsets(n) {
            let w: Vec<usize> = s.iter().copied().collect();
            assert_eq!(c.algebra.d(&e(&c, &w)), as_element(&oracle.coboundary(&s)), "δ on {w:?}");
            for t in subsets(n) {
                let v: Vec<usize> = t.iter().copied().collect();
                let expected = oracle.cup(&s, &t).map(|u| e(&c, &u)).unwrap_or_default();
                assert_eq!(c.algebra.mul(&e(&c, &w), &e(&c, &v)), expected, "{w:?} ∪ {v:?}");
            }
        }
    }
}

#[test]
fn tensor_algebras_satisfy_the_invariants() {
    let shape = CochainShape::new(&standard_simplex(2), 2);
    tensor_dga(&shape, &matrix_algebra(2)).unwrap().algebra.validate().unwrap();
    for c in [0, 1] {
        let end = endomorphism_algebra(&Complex::two_term(c)).unwrap();
        let t = tensor_dga(&CochainShape::new(&standard_simplex(1), 1), &end).unwrap();
        t.algebra.validate().unwrap();
        let thick = tensor_dga(&CochainShape::new(&thick_simplex(1, 3), 3), &end).unwrap();
        thick.algebra.validate().unwrap();
    }
}

#[test]
fn tensor_differential_uses_componentwise_signs() {
    // (δ(e_0 ⊗ ε))_{0} = (-1)^0 dε and (δ(e_01 ⊗ x))_{01} = (-1)^1 dx.
    let end = endomorphism_algebra(&Complex::two_term(1)).unwrap();
    let t = tensor_dga(&CochainShape::new(&standard_simplex(1), 1), &end).unwrap();
    let x = end.basis_element(0, 0);
    let dx = end.d(&x);
    assert!(!dx.is_zero());
    let on_edge = t.from_words([(&[0usize, 1][..], &x)]);
    assert_eq!(t.component_by_word(&t.algebra.d(&on_edge), &[0, 1]), -&dx);
    let on_vertex = t.from_words([(&[0usize][..], &x)]);
    let d = t.algebra.d(&on_vertex);
    assert_eq!(t.component_by_word(&d, &[0]), dx);
    assert_eq!(t.component_by_word(&d, &[0, 1]), -&x);
}

#[test]
fn maurer_cartan_residuals() {
    let m2 = matrix_algebra(2);
    assert!(is_mc(&m2, &Element::zero()).unwrap());
    assert_eq!(m2.dim(1), 0);
    let eps = dual_numbers();
    for t in [-3, 0, 7] {
        assert!(is_mc(&eps, &eps.basis_element(1, 0).scaled(&int(t))).unwrap());
    }
    let err = mc_residual(&eps, &eps.one()).unwrap_err();
    assert_eq!(err, Error::DegreeMismatch { expected: 1, found: 0 });
}

#[test]
fn twisted_differentials_square_to_zero_and_are_compatible() {
    let end = endomorphism_algebra(&Complex::two_term(1)).unwrap();
    let basis = end.basis_elements();
    let mcs: Vec<Element> = [0, 1, -2].iter().map(|&t| end.basis_element(1, 0).scaled(&int(t))).collect();
    for mu in &mcs {
        assert!(is_mc(&end, mu).unwrap());
        let dm = twisted_diff(&end, mu, mu).unwrap();
        for (_, _, x) in &basis {
            assert!(dm.apply(&end, &dm.apply(&end, x)).is_zero());
        }
    }
    let (mu, nu, la) = (&mcs[0], &mcs[1], &mcs[2]);
    let d_ml = twisted_diff(&end, mu, la).unwrap();
    let d_mn = twisted_diff(&end, mu, nu).unwrap();
    let d_nl = twisted_diff(&end, nu, la).unwrap();
    for (i, _, x) in &basis {
        for (_, _, y) in &basis {
            let lhs = d_ml.apply(&end, &end.mul(x, y));
            let rhs = &end.mul(&d_mn.apply(&end, x), y) + &end.mul(x, &d_nl.apply(&end, y)).scaled(&sign(*i as i64));
            assert_eq!(lhs, rhs);
        }
    }
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> Element {
    Element::homogeneous(0, vec![int(a), int(b), int(c), int(d)])
}

#[test]
fn quasi_inverses_in_matrices_are_inverses() {
    let a = matrix_algebra(2);
    let f = m2(2, 1, 1, 1);
    let mu01 = &f - &a.one();
    match quasi_invertible_solve(&a, &Element::zero(), &Element::zero(), &mu01).unwrap() {
        QuasiInverse::Witness { g, h, k } => {
            assert_eq!(g, m2(1, -1, -1, 2));
            assert!(h.is_zero() && k.is_zero());
        }
        other => panic!("expected a witness, got {other:?}"),
    }
    let singular = &m2(1, 2, 2, 4) - &a.one();
    let r = quasi_invertible_solve(&a, &Element::zero(), &Element::zero(), &singular).unwrap();
    assert!(matches!(r, QuasiInverse::Infeasible { rank, augmented_rank } if rank < augmented_rank));
    let id = quasi_invertible_solve(&a, &Element::zero(), &Element::zero(), &Element::zero()).unwrap();
    assert_eq!(id, QuasiInverse::Witness { g: a.one(), h: Element::zero(), k: Element::zero() });
}

#[test]
fn zero_is_quasi_invertible_exactly_on_the_acyclic_complex() {
    for (c, expected) in [(1, true), (0, false)] {
        let end = endomorphism_algebra(&Complex::two_term(c)).unwrap();
        let mu01 = -&end.one();
        let r = quasi_invertible_solve(&end, &Element::zero(), &Element::zero(), &mu01).unwrap();
        assert_eq!(r.is_witness(), expected, "differential {c}");
        if let QuasiInverse::Witness { g, h, k } = r {
            assert!(check_quasi_inverse(&end, &Element::zero(), &Element::zero(), &mu01, &g, &h, &k));
        }
    }
}

#[test]
fn edges_off_the_nerve_are_rejected() {
    let eps = dual_numbers();
    // d01 f = μ0 f - f μ1 = ε ≠ 0.
    let err = quasi_invertible_solve(&eps, &eps.basis_element(1, 0), &Element::zero(), &Element::zero()).unwrap_err();
    assert!(matches!(err, Error::NotAPoint(_)));
}

#[test]
fn json_round_trip_and_rejection() {
    for a in [matrix_algebra(2), dual_numbers(), endomorphism_algebra(&Complex::two_term(1)).unwrap()] {
        let text = dga_to_string(&a);
        let b = dga_from_str(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(dga_to_string(&b), text);
    }
    let mut v: serde_json::Value = serde_json::from_str(&dga_to_string(&matrix_algebra(2))).unwrap();
    // E00·E00 = 2·E00 breaks the unit law.
    v["prod"]["0,0"][0][3] = serde_json::json!("2");
    let err = dga_from_str(&v.to_string()).unwrap_err();
    assert!(matches!(err, Error::Invariant(ref s) if s.contains("E00")), "{err}");
    let x = Element::homogeneous(0, vec![frac(1, 3), int(0), int(-2), int(5)]);
    assert_eq!(element_from_json(&matrix_algebra(2), &element_to_json(&x)).unwrap(), x);
    assert!(dga_from_str(r#"{"format":"dga.v0","degrees":{},"unit":[]}"#).is_err());
}

#[test]
fn zero_elements_stay_canonical() {
    let a = matrix_algebra(2);
    let x = &a.one() - &a.one();
    assert_eq!(x, Element::zero());
    assert!(Element::homogeneous(0, vec![int(0); 4]).is_zero());
    assert!(a.d(&a.one()).is_zero());
    assert!(!int(1).is_zero());
}
