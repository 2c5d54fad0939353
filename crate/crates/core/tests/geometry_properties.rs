use gorenstein::catalog::{catalog, projective_model};
use gorenstein::constructions::gfat;
use gorenstein::geometry::{
    affine_chart, affine_tangent_dim, affine_tangent_dim_direct, betti_check_low_degrees, betti_expected, degree,
    hilbert_function, is_ag, project_from_point, tangent_dim,
};
use gorenstein::linalg::random_invertible;
use gorenstein::points::{projective_points_ideal, random_points};
use gorenstein::{classify, AlgebraLabel, Atom, FieldSpec, Ideal, PolyRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn label(s: &str) -> AlgebraLabel {
    s.parse().unwrap()
}

#[test]
fn classification_is_coordinate_free() {
    let k = FieldSpec::rationals();
    for e in catalog(k).unwrap() {
        let n = e.affine_model.ring().nvars();
        for seed in 0..5u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_invertible(k, n, &mut rng, 3);
            let shift: Vec<_> = (0..n).map(|_| k.random_small(&mut rng, 4)).collect();
            let moved = e.affine_model.linear_change(&m).unwrap().translate(&shift);
            assert_eq!(classify(&moved).unwrap(), e.label, "{} seed {seed}", e.label);
        }
    }
}

fn ag_samples() -> Vec<Ideal> {
    let k = FieldSpec::rationals();
    let mut out: Vec<Ideal> = catalog(k).unwrap().into_iter().filter_map(|e| e.projective_model).collect();
    out.push(gfat(k, 5).unwrap());
    let p3 = PolyRing::indexed(k, "x", 0, 4).unwrap();
    out.push(projective_points_ideal(&p3, &random_points(&p3, 5, 9, 20)).unwrap());
    out
}

#[test]
fn artinian_reductions_of_ag_schemes_are_palindromic() {
    for x in ag_samples() {
        let rep = is_ag(&x).unwrap();
        assert!(rep.ag && rep.symmetric);
        let mut rev = rep.delta_h.clone();
        rev.reverse();
        assert_eq!(rev, rep.delta_h);
    }
    // Non-palindromic reductions are never Gorenstein.
    let k = FieldSpec::rationals();
    for (n, count) in [(3, 4), (3, 6), (4, 7), (2, 5)] {
        let r = PolyRing::indexed(k, "x", 0, n + 1).unwrap();
        let x = projective_points_ideal(&r, &random_points(&r, count, 13, 20)).unwrap();
        let rep = is_ag(&x).unwrap();
        let mut rev = rep.delta_h.clone();
        rev.reverse();
        assert!(rev != rep.delta_h && !rep.ag, "{n} {count}");
    }
}

#[test]
fn betti_counts_on_nondegenerate_models() {
    for x in ag_samples() {
        let d = degree(&x).unwrap();
        let (b1, b2) = betti_check_low_degrees(&x).unwrap();
        assert_eq!(b1, betti_expected(d, 1).unwrap(), "{d}");
        assert_eq!(b2, betti_expected(d, 2).unwrap(), "{d}");
    }
}

#[test]
fn tangent_dimension_is_coordinate_free() {
    let k = FieldSpec::default_prime();
    let g6 = gfat(k, 6).unwrap();
    let a16 = projective_model(k, &label("A1,6")).unwrap().unwrap();
    for (x, want) in [(&g6, 29), (&a16, 24)] {
        for seed in 0..5u64 {
            let m = random_invertible(k, 5, &mut ChaCha8Rng::seed_from_u64(seed), 3);
            assert_eq!(tangent_dim(&x.linear_change(&m).unwrap()).unwrap(), want, "seed {seed}");
        }
    }
}

#[test]
fn tangent_paths_agree() {
    for x in ag_samples() {
        let chart = affine_chart(&x).unwrap();
        assert_eq!(affine_tangent_dim(&chart).unwrap(), affine_tangent_dim_direct(&chart).unwrap());
    }
}

#[test]
fn projection_drops_a_simple_point() {
    let k = FieldSpec::rationals();
    let e = |i: usize| (0..5).map(|j| if i == j { k.one() } else { k.zero() }).collect::<Vec<_>>();
    // Index of the coordinate point carrying the simple summand.
    for (l, simple) in [("A3,5 + A0,1", 0), ("A2,5 + A0,1", 4), ("A1,5 + A0,1", 4)] {
        let x = projective_model(k, &label(l)).unwrap().unwrap();
        let proj = project_from_point(&x, &e(simple)).unwrap();
        assert_eq!(degree(&proj).unwrap(), 5);
        let want = label(l).without(Atom::a(0, 1).unwrap()).unwrap();
        assert_eq!(classify(&affine_chart(&proj).unwrap()).unwrap(), want, "{l}");
    }
    let r = PolyRing::indexed(FieldSpec::default_prime(), "x", 0, 5).unwrap();
    let pts = random_points(&r, 6, 4, 20);
    let six = projective_points_ideal(&r, &pts).unwrap();
    let proj = project_from_point(&six, &pts[2]).unwrap();
    assert_eq!(hilbert_function(&proj, 2).unwrap(), vec![1, 4, 5]);
    assert_eq!(classify(&affine_chart(&proj).unwrap()).unwrap(), label("5*A0,1"));
}
