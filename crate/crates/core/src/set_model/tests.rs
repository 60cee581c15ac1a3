use super::json::{morphism_from_str, morphism_to_string, sobj_from_str, sobj_to_string};
use super::*;
use crate::simplicial::{boundary, horn, spine, standard_simplex, thick_simplex, FiniteSimplicialSet, SimplexRef};

fn bz(n: usize, depth: usize) -> Tso {
    FiniteCategory::cyclic_group(n).unwrap().nerve(depth)
}

/// All assignment tables filtered by the face relations.
fn naive_maps(t: &FiniteSimplicialSet, x: &Tso) -> Option<Vec<Assignment>> {
    let top = t.top_dim().unwrap_or(0);
    let cells: Vec<(usize, usize)> = t.cell_ids().into_iter().filter(|&(n, _)| n <= top).collect();
    let total: usize = cells.iter().map(|&(n, _)| x.size(n)).product();
    if total > 500 {
        return None;
    }
    let mut out = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let mut a: Assignment = (0..=t.trunc_dim()).map(|n| vec![0; t.num_cells(n)]).collect();
        for &(n, c) in &cells {
            a[n][c] = rest % x.size(n);
            rest /= x.size(n);
        }
        let ok = cells.iter().all(|&(n, c)| {
            n == 0 || (0..=n).all(|i| x.eval(&a, &t.cell(n, c).faces[i]) == x.face(n, i, a[n][c]))
        });
        if ok {
            out.push(a);
        }
    }
    out.sort();
    Some(out)
}

#[test]
fn maps_into_simplices() {
    let d2 = Tso::from_sset(&standard_simplex(2), 3, None).unwrap();
    assert_eq!(enumerate_maps(&standard_simplex(1), &d2).unwrap().len(), 6);
    for n in 0..=3 {
        let thick = Tso::from_sset(&thick_simplex(n, 3), 3, Some(0)).unwrap();
        assert_eq!(enumerate_maps(&thick_simplex(1, 2), &thick).unwrap().len(), (n + 1) * (n + 1));
    }
    assert_eq!(enumerate_maps(&FiniteSimplicialSet::empty(), &bz(2, 2)).unwrap().len(), 1);
}

#[test]
fn maps_agree_with_naive_oracle() {
    let targets = [
        bz(2, 3),
        bz(3, 3),
        FiniteCategory::idempotent_monoid().nerve(3),
        FiniteCategory::linear_order(1).nerve(3),
        Tso::from_sset(&standard_simplex(1), 3, None).unwrap(),
    ];
    let sources = [
        standard_simplex(0),
        standard_simplex(1),
        standard_simplex(2),
        boundary(2).sub,
        horn(2, 0).unwrap().sub,
        spine(3).sub,
        boundary(1).sub,
    ];
    let mut compared = 0;
    for t in &sources {
        for x in &targets {
            if let Some(naive) = naive_maps(t, x) {
                assert_eq!(enumerate_maps(t, x).unwrap(), naive);
                compared += 1;
            }
        }
    }
    assert!(compared >= 20, "{compared}");
}

#[test]
fn insufficient_truncation_is_reported() {
    let d1 = Tso::from_sset(&standard_simplex(1), 1, None).unwrap();
    let err = enumerate_maps(&standard_simplex(2), &d1).unwrap_err();
    assert!(matches!(err, crate::Error::InsufficientTruncation { .. }));
    let err = enumerate_maps(&thick_simplex(1, 3), &d1).unwrap_err();
    assert!(matches!(err, crate::Error::InsufficientTruncation { .. }));
}

#[test]
fn nerves_have_expected_sizes() {
    let x = bz(3, 4);
    assert_eq!(x.sizes(), vec![1, 3, 9, 27, 81]);
    let p = FiniteCategory::linear_order(2).nerve(3);
    assert_eq!(p.sizes(), vec![3, 6, 10, 15]);
    let prod = FiniteCategory::product(&FiniteCategory::cyclic_group(2).unwrap(), &FiniteCategory::indiscrete(2));
    assert_eq!(prod.nerve(2).sizes(), vec![2, 8, 32]);
}

#[test]
fn coskeletal_extension_matches_nerve() {
    for c in [FiniteCategory::cyclic_group(2).unwrap(), FiniteCategory::idempotent_monoid(), FiniteCategory::linear_order(2)] {
        let short = c.nerve(2).extended(4).unwrap();
        let long = c.nerve(4);
        assert_eq!(short.sizes(), long.sizes());
        for n in 0..=4 {
            assert_eq!(
                enumerate_maps(&standard_simplex(n), &short).unwrap().len(),
                enumerate_maps(&standard_simplex(n), &long).unwrap().len()
            );
        }
    }
    let x = Tso::from_sset(&standard_simplex(2), 2, None).unwrap();
    assert!(x.extended(3).is_err());
}

#[test]
fn invalid_tables_are_rejected() {
    let x = bz(2, 2);
    let text = sobj_to_string(&x);
    let back = sobj_from_str(&text).unwrap();
    assert_eq!(back, x);
    assert_eq!(sobj_to_string(&back), text);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["levels"][2]["faces"][1][1] = serde_json::json!(0);
    assert!(sobj_from_str(&v.to_string()).is_err());
}

#[test]
fn morphisms_round_trip_through_json() {
    let z4 = FiniteCategory::cyclic_group(4).unwrap();
    let z2 = FiniteCategory::cyclic_group(2).unwrap();
    let f = z4.nerve_map(&z2, &[0], &[0, 1, 0, 1], 2).unwrap();
    let text = morphism_to_string(&f);
    let back = morphism_from_str(&text).unwrap();
    assert_eq!(back, f);
    assert_eq!(morphism_to_string(&back), text);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["levels"][1][1] = serde_json::json!(0);
    assert!(morphism_from_str(&v.to_string()).is_err());
    assert!(morphism_from_str(&text.replace("omap.v1", "omap.v2")).is_err());
}

#[test]
fn categories_are_validated() {
    let bad = FiniteCategory::monoid(&["1", "a"], &[vec![0, 1], vec![1, 0]], 1);
    assert!(bad.is_err());
    assert!(FiniteCategory::poset(2, &[(0, 1), (1, 0)]).is_err());
    let m = FiniteCategory::idempotent_monoid();
    assert!(m.is_iso(0) && !m.is_iso(1));
}

#[test]
fn groupoid_and_category_verdicts() {
    let r = check_k_groupoid(&bz(2, 4), 1, 4).unwrap();
    assert!(r.holds);
    let c = r.cases.iter().find(|c| c.n == 2 && c.i == Some(1)).unwrap();
    assert_eq!((c.source_size, c.target_size, c.injective, c.surjective), (4, 4, true, true));
    let m = FiniteCategory::idempotent_monoid().nerve(4);
    let r = check_k_groupoid(&m, 1, 4).unwrap();
    assert!(!r.holds);
    assert_eq!(r.first_failure().unwrap().n, 2);
    assert!(check_k_category(&m, 1, 4).unwrap().holds);
    let pt = Tso::terminal(4);
    for k in 0..3 {
        assert!(check_k_groupoid(&pt, k, 4).unwrap().holds);
    }
    let poset = FiniteCategory::linear_order(1).nerve(4);
    let r = check_k_category(&poset, 1, 4).unwrap();
    assert!(r.holds);
    let edge = r.cases.iter().find(|c| c.case.starts_with("thick edge")).unwrap();
    assert_eq!((edge.source_size, edge.target_size), (2, 2));
    assert!(!check_k_groupoid(&poset, 1, 4).unwrap().holds);
    assert!(check_k_category(&bz(2, 4), 1, 4).unwrap().holds);
}

#[test]
fn fibrations_and_hypercovers() {
    let x = bz(2, 4);
    let f = Morphism::to_terminal(&x);
    assert!(check_fibration(&f, 4).unwrap().holds);
    // covers at n <= 1, but three loops need not bound a 2-simplex: 4 -> 8
    let r = check_hypercover(&f, 4).unwrap();
    let fail = r.first_failure().unwrap();
    assert_eq!((fail.n, fail.source_size, fail.target_size), (2, 4, 8));
    assert!(check_hypercover(&Morphism::identity(&x), 4).unwrap().holds);
    let g = FiniteCategory::cyclic_group(2).unwrap();
    let gg = FiniteCategory::product(&g, &g);
    let proj = gg.nerve_map(&g, &[0], &[0, 0, 1, 1], 3).unwrap();
    assert!(check_fibration(&proj, 3).unwrap().holds);
    assert!((0..=3).all(|n| proj.is_surjective_at(n)));
    // the fibre is the nerve of a nontrivial group
    assert_eq!(check_hypercover(&proj, 3).unwrap().first_failure().unwrap().n, 2);
    let two = FiniteCategory::discrete(2).nerve(3);
    let r = check_hypercover(&Morphism::to_terminal(&two), 3).unwrap();
    assert!(!r.holds);
    assert_eq!(r.first_failure().unwrap().n, 1);
}

#[test]
fn path_spaces() {
    let x = bz(2, 3);
    let p0 = path_space(&x, 0, 3).unwrap();
    assert_eq!(p0.sizes(), x.sizes());
    let p1 = path_space(&x, 1, 2).unwrap();
    assert_eq!(p1.size(0), 2);
    let poset = FiniteCategory::linear_order(1).nerve(3);
    assert_eq!(thick_power(&poset, 1, 2).unwrap().size(0), 2);
    assert_eq!(gg_core(&poset, 1, 3).unwrap().sizes(), vec![2, 2, 2, 2]);
}

#[test]
fn apply_operator_matches_faces_and_degeneracies() {
    let x = bz(3, 3);
    for e in 0..x.size(2) {
        assert_eq!(x.apply_operator(2, e, &[0, 2]), x.face(2, 1, e));
        assert_eq!(x.apply_operator(2, e, &[0, 1, 1, 2]), x.degen(2, 1, e));
        assert_eq!(x.apply_operator(2, e, &[0, 1, 2]), e);
    }
}

#[test]
fn brown_factorization_identities() {
    let depth = 3;
    let y = bz(2, depth);
    let cases = [Morphism::identity(&y), Morphism::from_point(&y, 0).unwrap()];
    for f in &cases {
        let b = brown_factorization(f, depth).unwrap();
        let qs = b.s.then(&b.q).unwrap();
        let ps = b.s.then(&b.p).unwrap();
        for n in 0..=depth {
            assert_eq!(qs.level(n), f.level(n));
            assert_eq!(ps.level(n), Morphism::identity(&f.source).level(n));
            assert!(b.q.is_surjective_at(n));
        }
        assert!(check_hypercover(&b.p, depth).unwrap().holds);
    }
    let two = FiniteCategory::discrete(2).nerve(depth);
    let b = brown_factorization(&Morphism::from_point(&two, 0).unwrap(), depth).unwrap();
    assert!(!b.q.is_surjective_at(0));
}

#[test]
fn weak_equivalence_examples() {
    let depth = 3;
    let y = bz(2, depth);
    let pt = Morphism::from_point(&y, 0).unwrap();
    assert!(!check_we_direct(&pt, depth).unwrap().holds);
    assert!(!check_we_path(&pt, depth).unwrap().holds);
    assert!(!check_we_cat(&pt, depth).unwrap().holds);
    let id = Morphism::identity(&y);
    assert!(check_we_direct(&id, depth).unwrap().holds);
    assert!(check_we_path(&id, depth).unwrap().holds);
    assert!(check_we_cat(&id, depth).unwrap().holds);
    let z3 = FiniteCategory::cyclic_group(3).unwrap();
    let neg = z3.nerve_map(&z3, &[0], &[0, 2, 1], depth).unwrap();
    assert!(check_we_direct(&neg, depth).unwrap().holds);
    assert!(check_we_path(&neg, depth).unwrap().holds);
}

#[test]
fn cores_of_small_nerves() {
    let poset = FiniteCategory::linear_order(1).nerve(4);
    for method in [CoreMethod::Image, CoreMethod::Spine, CoreMethod::AllEdges] {
        let g = g_core(&poset, 1, 3, method).unwrap();
        assert_eq!(g.source.sizes(), vec![2, 2, 2, 2]);
    }
    let m = FiniteCategory::idempotent_monoid().nerve(4);
    assert_eq!(quasi_invertible_edges(&m, 1).unwrap(), vec![0]);
    let g = g_core(&m, 1, 3, CoreMethod::AllEdges).unwrap();
    assert_eq!(g.source.sizes(), vec![1, 1, 1, 1]);
    // above the thick truncation the counit fills the standard simplex from its faces
    let x = bz(2, 4);
    assert!(gg_counit(&x, 1, 4).unwrap().is_iso());
}

#[test]
fn relative_maps_pair_lifts_with_targets() {
    let y = bz(2, 3);
    let f = Morphism::from_point(&y, 0).unwrap();
    let h = horn(2, 1).unwrap();
    let full = crate::simplicial::Inclusion::identity(&standard_simplex(2));
    assert_eq!(relative_maps(&h, &full, &f).unwrap().len(), 1);
    let r = SimplexRef::nondeg(0, 0);
    assert_eq!(y.eval(&vec![vec![0]], &r), 0);
}
