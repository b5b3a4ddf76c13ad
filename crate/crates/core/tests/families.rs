use proptest::prelude::*;
use tridom::embedding::{verify_triangulation, Face};
use tridom::families::{
    expected_gamma_c, family, family_base, family_from, icosa_chain, icosahedron, sum_report, max_face_hits,
    octahedron_sum, Family, DEFAULT_VERIFY_CAP,
};
use tridom::generator;
use tridom::solvers::{exact_gamma, exact_gamma_c};
use tridom::{Graph, PlaneTriangulation, VertexSet};

fn gamma_c(t: &PlaneTriangulation) -> usize {
    exact_gamma_c(&t.underlying_graph()).unwrap().value
}

fn gamma(t: &PlaneTriangulation) -> usize {
    exact_gamma(&t.underlying_graph()).unwrap().value
}

#[test]
fn octahedron_sum_adds_nine_edges() {
    let k4 = PlaneTriangulation::tetrahedron();
    for f in k4.faces() {
        let s = octahedron_sum(&k4, f).unwrap();
        assert_eq!(verify_triangulation(&s.triangulation), Ok(()));
        assert_eq!(s.triangulation.order(), 7);
        assert_eq!(s.triangulation.edge_count(), 15);
        let [a, b, c] = f.0;
        let [e, ff, g] = s.face.0;
        for (x, y) in [(a, e), (a, ff), (b, ff), (b, g), (c, e), (c, g), (e, ff), (ff, g), (g, e)] {
            assert!(s.triangulation.has_edge(x, y));
        }
        // The old face is gone, the new triangle is a face.
        assert!(!s.triangulation.is_face(f));
        assert!(s.triangulation.is_face(s.face));
    }
}

#[test]
fn sum_with_octahedron_is_a_clique_sum() {
    // The three new vertices together with a, b, c induce an octahedron.
    let t = generator::enumerate(8).unwrap().remove(3);
    let f = t.faces()[5];
    let s = octahedron_sum(&t, f).unwrap();
    let six = f.vertices() | s.face.vertices();
    let h = s.triangulation.underlying_graph().induced(six).unwrap();
    assert_eq!(h.edge_count(), 12);
    assert!((0..6).all(|v| h.degree(v) == 4));
}

#[test]
fn bases() {
    let b = family_base(Family::B).unwrap();
    assert_eq!((b.triangulation.order(), b.triangulation.edge_count()), (9, 21));
    assert_eq!((gamma(&b.triangulation), gamma_c(&b.triangulation)), (2, 3));
    // Unique among the 50 triangulations of order 9.
    let hard = generator::enumerate(9)
        .unwrap()
        .into_iter()
        .filter(|t| gamma_c(t) == 3)
        .count();
    assert_eq!(hard, 1);

    let a = family_base(Family::A).unwrap();
    assert_eq!((a.triangulation.order(), a.triangulation.edge_count()), (9, 21));
    assert_eq!(gamma_c(&a.triangulation), 2);
    assert_eq!(max_face_hits(&a.triangulation, a.face).unwrap(), 0);
}

#[test]
fn sum_report_on_family_a() {
    let base = family_base(Family::A).unwrap();
    let r = sum_report(&base.triangulation, base.face).unwrap();
    assert_eq!((r.base_gamma_c, r.result_gamma_c, r.max_face_hits), (2, 4, 0));
    assert_eq!(r.matches_prediction(), Some(true));
    let twelve = octahedron_sum(&base.triangulation, base.face).unwrap();
    let r = sum_report(&twelve.triangulation, twelve.face).unwrap();
    assert_eq!((r.base_gamma_c, r.result_gamma_c, r.max_face_hits), (4, 5, 1));
    assert_eq!(r.matches_prediction(), Some(true));
}

#[test]
fn sum_report_on_family_b_base_is_not_covered() {
    let base = family_base(Family::B).unwrap();
    let r = sum_report(&base.triangulation, base.face).unwrap();
    assert_eq!((r.base_gamma_c, r.result_gamma_c), (3, 3));
    assert!(r.max_face_hits >= 2);
    assert_eq!(r.predicted_increment(), None);
}

#[test]
fn sum_predictions_hold_along_both_families() {
    for which in [Family::A, Family::B] {
        let mut cur = family_base(which).unwrap();
        while cur.triangulation.order() <= 18 {
            let r = sum_report(&cur.triangulation, cur.face).unwrap();
            assert_ne!(r.matches_prediction(), Some(false), "family {which} at n = {}", cur.triangulation.order());
            cur = octahedron_sum(&cur.triangulation, cur.face).unwrap();
        }
    }
}

#[test]
fn family_values() {
    for (which, ks, want) in [
        (Family::A, 3..=7, vec![2, 4, 5, 6, 7]),
        (Family::B, 3..=6, vec![3, 3, 5, 6]),
    ] {
        let base = family_base(which).unwrap();
        for (k, w) in ks.zip(want) {
            let f = family_from(base.clone(), which, k, DEFAULT_VERIFY_CAP).unwrap();
            assert_eq!(f.triangulation.order(), 3 * k);
            assert_eq!(verify_triangulation(&f.triangulation), Ok(()));
            assert_eq!(gamma_c(&f.triangulation), w, "family {which}, k = {k}");
            assert_eq!(expected_gamma_c(which, k), w);
        }
    }
    assert!(family(Family::A, 2, DEFAULT_VERIFY_CAP).is_err());
}

#[test]
fn family_beyond_cap_is_unverified_but_valid() {
    let f = family(Family::B, 10, 0).unwrap();
    assert_eq!(f.triangulation.order(), 30);
    assert_eq!(verify_triangulation(&f.triangulation), Ok(()));
}

#[test]
fn icosahedron_is_face_transitive() {
    let ico = icosahedron();
    let t = &ico.triangulation;
    assert_eq!((gamma(t), gamma_c(t)), (2, 4));
    assert_eq!(t.canonical_form().automorphisms, 120);
    let code = t.canonical_code();
    for f in t.faces() {
        // Relabel so that `f` becomes `(0, 1, 2)`.
        let mut perm = vec![usize::MAX; 12];
        for (i, &v) in f.0.iter().enumerate() {
            perm[v] = i;
        }
        for (p, next) in perm.iter_mut().filter(|p| **p == usize::MAX).zip(3..) {
            *p = next;
        }
        let s = t.relabel(&perm).unwrap();
        assert!(s.is_face(Face([0, 1, 2])));
        assert_eq!(s.canonical_code(), code);
    }
}

#[test]
fn chain_values() {
    for k in 2..=3 {
        let t = icosa_chain(k).unwrap();
        assert_eq!(t.order(), 10 * k + 2);
        assert_eq!(verify_triangulation(&t), Ok(()));
        let g = t.underlying_graph();
        let gm = exact_gamma(&g).unwrap();
        let gc = exact_gamma_c(&g).unwrap();
        assert_eq!((gm.value, gc.value), (k + 1, 3 * k));
        assert_eq!(gc.value - gm.value, 2 * k - 1);
        // Some minimum dominating set uses the shared vertex u = 0.
        let with_u = subsets_of_size_dominating_with(&g, gm.value, 0);
        assert!(with_u, "k = {k}");
    }
}

/// Whether some dominating set of `size` vertices contains `u`.
fn subsets_of_size_dominating_with(g: &Graph, size: usize, u: usize) -> bool {
    fn rec(g: &Graph, from: usize, left: usize, set: VertexSet) -> bool {
        if left == 0 {
            return g.is_dominating(set);
        }
        (from..g.order()).any(|v| !set.contains(v) && rec(g, v + 1, left - 1, set.with(v)))
    }
    rec(g, 0, size - 1, VertexSet::singleton(u))
}

#[test]
fn chain_rejects_small_k() {
    assert!(icosa_chain(0).is_err());
    assert!(icosa_chain(1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn octahedron_sum_is_always_valid(n in 4usize..=10, pick in any::<prop::sample::Index>(), face in any::<prop::sample::Index>()) {
        let level = generator::enumerate(n).unwrap();
        let t = &level[pick.index(level.len())];
        let faces = t.faces();
        let f = faces[face.index(faces.len())];
        let s = octahedron_sum(t, f).unwrap();
        prop_assert_eq!(verify_triangulation(&s.triangulation), Ok(()));
        prop_assert_eq!(s.triangulation.edge_count(), t.edge_count() + 9);
        prop_assert!(s.triangulation.is_face(s.face));
        // Reversed orientation is not a face.
        let [a, b, c] = f.0;
        prop_assert!(octahedron_sum(t, Face([a, c, b])).is_err());
    }

    #[test]
    fn family_orders(k in 3usize..=12) {
        let f = family(Family::A, k, 0).unwrap();
        prop_assert_eq!(f.triangulation.order(), 3 * k);
    }
}
