use std::collections::HashMap;

use gorenstein::artinian::{analyze_local, filtration_hilbert, psi_form_ranks, socle_dim, split_rational_support};
use gorenstein::groebner::buchberger;
use gorenstein::linalg::{inverse, random_invertible};
use gorenstein::points::{affine_points_ideal, projective_points_ideal};
use gorenstein::{classify, FieldSpec, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, Ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn qq3() -> Ring {
    PolyRing::with_vars(FieldSpec::rationals(), &["x", "y", "z"]).unwrap()
}

fn fp3() -> Ring {
    PolyRing::with_vars(FieldSpec::default_prime(), &["x", "y", "z"]).unwrap()
}

type RawPoly = Vec<([u16; 3], i64)>;

fn raw_poly(max_deg: u16, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg], -9i64..=9), 1..=max_terms)
}

fn build(r: &Ring, raw: &RawPoly) -> Polynomial {
    let k = r.field();
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exps(e), k.from_i64(*c))).collect())
}

/// Two or three generators with exponents at most 1 in each variable.
fn raw_ideal() -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(raw_poly(1, 4), 2..=3)
}

fn build_ideal(r: &Ring, raw: &[RawPoly]) -> Ideal {
    Ideal::new(r, raw.iter().map(|p| build(r, p)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in raw_poly(3, 5), b in raw_poly(3, 5), c in raw_poly(3, 5)) {
        let r = qq3();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn orders_are_multiplicative(u in [0u16..5, 0..5, 0..5], v in [0u16..5, 0..5, 0..5], w in [0u16..5, 0..5, 0..5]) {
        let (u, v, w) = (Monomial::from_exps(&u), Monomial::from_exps(&v), Monomial::from_exps(&w));
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Grlex, MonomialOrder::Elimination(1)] {
            if order.cmp(&u, &v).is_lt() {
                prop_assert!(order.cmp(&u.mul(&w), &v.mul(&w)).is_lt());
            }
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(f in raw_poly(2, 4), g in raw_poly(2, 4), imgs in prop::collection::vec(raw_poly(2, 3), 3)) {
        let r = qq3();
        let (f, g) = (build(&r, &f), build(&r, &g));
        let map: HashMap<String, Polynomial> =
            ["x", "y", "z"].iter().zip(&imgs).map(|(n, p)| (n.to_string(), build(&r, p))).collect();
        let s = |p: &Polynomial| p.substitute(&map, &r).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn linear_change_inverts(gens in prop::collection::vec(raw_poly(3, 4), 1..4), seed in any::<u64>()) {
        let r = qq3();
        let k = r.field();
        let i = Ideal::new(&r, gens.iter().map(|p| build(&r, p)).collect()).unwrap();
        let m = random_invertible(k, 3, &mut ChaCha8Rng::seed_from_u64(seed), 5);
        let back = i.linear_change(&m).unwrap().linear_change(&inverse(k, &m).unwrap()).unwrap();
        prop_assert_eq!(back.gens(), i.gens());
    }

    #[test]
    fn reduced_basis_is_canonical(raw in raw_ideal(), mult in prop::collection::vec(raw_poly(1, 3), 3)) {
        let r = fp3();
        let i = build_ideal(&r, &raw);
        let mut gens = i.gens().to_vec();
        let combo = gens.iter().zip(mult.iter().cycle()).fold(Polynomial::zero(&r), |acc, (g, m)| &acc + &(g * &build(&r, m)));
        gens.push(combo);
        gens.reverse();
        let other = buchberger(&r, &gens);
        prop_assert_eq!(other.elements(), i.gb().elements());
    }

    #[test]
    fn membership_matches_normal_form(raw in raw_ideal(), mult in prop::collection::vec(raw_poly(2, 3), 3)) {
        let r = fp3();
        let i = build_ideal(&r, &raw);
        let f = i.gens().iter().zip(mult.iter().cycle()).fold(Polynomial::zero(&r), |acc, (g, m)| &acc + &(g * &build(&r, m)));
        prop_assert!(i.contains(&f));
        prop_assert!(i.normal_form(&f).unwrap().is_zero());
        if !i.is_unit() {
            prop_assert!(!i.contains(&Polynomial::one(&r)));
            prop_assert!(!i.normal_form(&Polynomial::one(&r)).unwrap().is_zero());
        }
    }

    #[test]
    fn point_sets_count_standard_monomials(coords in prop::collection::btree_set((-6i64..6, -6i64..6), 1..6)) {
        let k = FieldSpec::rationals();
        let plane = PolyRing::with_vars(k, &["x", "y"]).unwrap();
        let pts: Vec<Vec<_>> = coords.iter().map(|(a, b)| vec![k.from_i64(*a), k.from_i64(*b)]).collect();
        let aff = affine_points_ideal(&plane, &pts).unwrap();
        prop_assert!(aff.is_zero_dimensional());
        prop_assert_eq!(aff.quotient_dim().unwrap(), pts.len());
        let p2 = PolyRing::with_vars(k, &["w", "x", "y"]).unwrap();
        let proj: Vec<Vec<_>> = pts.iter().map(|p| vec![k.one(), p[0].clone(), p[1].clone()]).collect();
        let cone = projective_points_ideal(&p2, &proj).unwrap();
        prop_assert!(!cone.is_zero_dimensional());
        prop_assert_eq!(gorenstein::geometry::degree(&cone).unwrap(), pts.len());
    }

    #[test]
    fn elimination_vanishes_on_graphs(f in prop::collection::vec(prop::collection::vec(-4i64..=4, 1..=3), 2), t0 in -5i64..=5) {
        let k = FieldSpec::rationals();
        let r = PolyRing::new(k, vec!["t".into(), "y1".into(), "y2".into()], MonomialOrder::Elimination(1)).unwrap();
        let t = Polynomial::var(&r, 0);
        let param = |c: &[i64]| c.iter().enumerate().fold(Polynomial::zero(&r), |acc, (e, c)| &acc + &t.pow(e as u32 + 1).scale(&k.from_i64(*c)));
        let graph = Ideal::new(&r, vec![&Polynomial::var(&r, 1) - &param(&f[0]), &Polynomial::var(&r, 2) - &param(&f[1])]).unwrap();
        let image = graph.eliminate(1).unwrap();
        let v = |c: &[i64]| c.iter().enumerate().fold(0i64, |acc, (e, c)| acc + c * t0.pow(e as u32 + 1));
        let point = [k.from_i64(v(&f[0])), k.from_i64(v(&f[1]))];
        prop_assert!(!image.gens().is_empty() || f.iter().all(|c| c.iter().all(|x| *x == 0)));
        for g in image.gens() {
            prop_assert!(k.is_zero(&g.eval(&point)));
        }
    }

    #[test]
    fn ideal_lattice_identities(a in raw_ideal(), b in raw_ideal()) {
        let r = fp3();
        let (i, j) = (build_ideal(&r, &a), build_ideal(&r, &b));
        prop_assert!(i.is_subset_of(&i.colon(&j).unwrap()));
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.is_subset_of(&i) && meet.is_subset_of(&j));
        prop_assert!(i.is_subset_of(&i.sum(&j).unwrap()));
        let sat = i.saturate(&j).unwrap();
        prop_assert!(sat.saturate(&j).unwrap().same_as(&sat));
    }

    #[test]
    fn colon_of_coprime_monomials(e in [0u16..3, 0..3, 0..3], shift in 0usize..3) {
        let r = qq3();
        let k = r.field();
        // f uses one variable, g the other two.
        let mut fe = [0u16; 3];
        fe[shift] = e[0] + 1;
        let mut ge = [0u16; 3];
        ge[(shift + 1) % 3] = e[1];
        ge[(shift + 2) % 3] = e[2] + 1;
        let f = Polynomial::monomial(&r, Monomial::from_exps(&fe), k.one());
        let g = Polynomial::monomial(&r, Monomial::from_exps(&ge), k.one());
        let fg = Ideal::new(&r, vec![&f * &g]).unwrap();
        prop_assert!(fg.colon_poly(&f).unwrap().same_as(&Ideal::new(&r, vec![g]).unwrap()));
    }

    #[test]
    fn graded_dimension_by_two_routes(raw in prop::collection::vec(prop::collection::vec(([0u16..=2, 0..=2, 0..=2], -5i64..=5), 1..4), 1..4), t in 0u32..5) {
        let r = fp3();
        // Keep only the degree-2 part of each generator.
        let gens: Vec<Polynomial> = raw.iter().map(|p| build(&r, p).homogeneous_part(2)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let i = Ideal::new(&r, gens).unwrap();
        let total = gorenstein::monomial::monomials_of_degree(3, t).len();
        prop_assert_eq!(i.graded_component_dim(t).unwrap(), total - i.gb().count_standard_of_degree(t));
    }
}

/// Local algebras at the origin for the artinian properties.
fn local_samples() -> Vec<Ideal> {
    let k = FieldSpec::rationals();
    let mut out: Vec<Ideal> = gorenstein::catalog::catalog(k)
        .unwrap()
        .into_iter()
        .filter(|e| e.label.is_local())
        .map(|e| e.affine_model)
        .collect();
    let plane = PolyRing::with_vars(k, &["x", "y"]).unwrap();
    out.push(Ideal::maximal_at_origin(&plane).power(2));
    out.push(Ideal::parse(&plane, &["x^2", "x*y", "y^3"]).unwrap());
    out
}

#[test]
fn hilbert_functions_sum_to_dimension() {
    for i in local_samples() {
        let rep = filtration_hilbert(&i).unwrap();
        assert_eq!(rep.hilbert_fn[0], 1);
        assert_eq!(rep.hilbert_fn.iter().sum::<usize>(), rep.dim);
    }
}

#[test]
fn graded_gorenstein_is_palindromic_and_pairings_detect_socle() {
    for i in local_samples() {
        if !i.is_homogeneous() {
            continue;
        }
        let rep = analyze_local(&i).unwrap();
        if rep.gorenstein {
            let mut rev = rep.hilbert_fn.clone();
            rev.reverse();
            assert_eq!(rev, rep.hilbert_fn);
        }
        let all_nondeg = psi_form_ranks(&i).unwrap().iter().all(|p| p.nondegenerate);
        assert_eq!(all_nondeg, socle_dim(&i).unwrap() == 1, "{:?}", i.gens());
    }
}

#[test]
fn support_splitting_reassembles() {
    for e in gorenstein::catalog::catalog(FieldSpec::rationals()).unwrap() {
        let comps = split_rational_support(&e.affine_model).unwrap();
        assert_eq!(comps.iter().map(|c| c.degree).sum::<usize>(), e.affine_model.quotient_dim().unwrap());
        let k = e.affine_model.ring().field();
        let mut acc: Option<Ideal> = None;
        for c in &comps {
            let back = c.local.translate(&c.point.iter().map(|x| k.neg(x)).collect::<Vec<_>>());
            acc = Some(match acc {
                None => back,
                Some(a) => a.intersect(&back).unwrap(),
            });
        }
        assert!(acc.unwrap().same_as(&e.affine_model), "{}", e.label);
        assert_eq!(classify(&e.affine_model).unwrap(), e.label);
    }
}
