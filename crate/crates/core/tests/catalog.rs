use gorenstein::artinian::{analyze_local, split_rational_support};
use gorenstein::catalog::{
    catalog, default_placement, load_fixture, local_model, model_ideal, projective_model_labels, CatalogDoc,
    CATALOG_FIXTURE,
};
use gorenstein::families::{classify_fiber, families, family_fiber};
use gorenstein::geometry::{affine_chart, betti_check_low_degrees, degree, hilbert_function, is_ag, span_codim};
use gorenstein::points::affine_points_ideal;
use gorenstein::{classify, AlgebraLabel, Atom, FieldSpec, Ideal, PolyRing};

fn label(s: &str) -> AlgebraLabel {
    s.parse().unwrap()
}

#[test]
fn twenty_models_classify_to_their_labels() {
    let entries = catalog(FieldSpec::rationals()).unwrap();
    assert_eq!(entries.len(), 20);
    for e in &entries {
        assert_eq!(classify(&e.affine_model).unwrap(), e.label, "{}", e.label);
        let comps = split_rational_support(&e.affine_model).unwrap();
        let mut got: Vec<_> = comps.iter().map(|c| analyze_local(&c.local).unwrap()).collect();
        got.sort_by_key(|r| std::cmp::Reverse((r.dim, r.hilbert_fn.clone())));
        let mut want = e.expected.clone();
        for w in want.iter_mut() {
            w.label = None;
        }
        want.sort_by_key(|r| std::cmp::Reverse((r.dim, r.hilbert_fn.clone())));
        assert_eq!(got, want, "{}", e.label);
    }
}

#[test]
fn golden_fixture_matches_generated_catalog() {
    let doc = CatalogDoc::from_entries(&catalog(FieldSpec::rationals()).unwrap());
    let text = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    if std::env::var_os("UPDATE_FIXTURES").is_some() {
        std::fs::write(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/catalog.json"), &text).unwrap();
        return;
    }
    assert_eq!(text, CATALOG_FIXTURE);
    let loaded = load_fixture().unwrap();
    for (a, b) in loaded.iter().zip(catalog(FieldSpec::rationals()).unwrap()) {
        assert_eq!(a.label, b.label);
        assert!(a.affine_model.same_as(&b.affine_model));
    }
}

#[test]
fn projective_models_are_arithmetically_gorenstein() {
    let entries = catalog(FieldSpec::rationals()).unwrap();
    let with_model: Vec<_> = entries.iter().filter(|e| e.projective_model.is_some()).collect();
    assert_eq!(with_model.len(), projective_model_labels().len());
    assert_eq!(with_model.len(), 9);
    for e in with_model {
        let x = e.projective_model.as_ref().unwrap();
        assert_eq!(hilbert_function(x, 3).unwrap(), vec![1, 5, 6, 6], "{}", e.label);
        assert_eq!(degree(x).unwrap(), 6);
        assert_eq!(span_codim(x).unwrap(), 0);
        assert!(is_ag(x).unwrap().ag, "{}", e.label);
        assert_eq!(betti_check_low_degrees(x).unwrap(), (9, 16), "{}", e.label);
        assert_eq!(classify(&affine_chart(x).unwrap()).unwrap(), e.label);
    }
}

#[test]
fn model_ideal_examples_and_errors() {
    let k = FieldSpec::rationals();
    let r = PolyRing::indexed(k, "x", 1, 4).unwrap();
    let origin = vec![k.zero(); 4];
    let a16 = model_ideal(&r, &label("A1,6"), std::slice::from_ref(&origin)).unwrap();
    assert!(a16.same_as(&Ideal::parse(&r, &["x1^6", "x2", "x3", "x4"]).unwrap()));
    let a2sp = model_ideal(&r, &label("A2sp"), std::slice::from_ref(&origin)).unwrap();
    assert!(a2sp.same_as(&Ideal::parse(&r, &["x2^2 - x1^2", "x1^3", "x3", "x4"]).unwrap()));
    let two = default_placement(k, 4, 2);
    let pts = model_ideal(&r, &label("2*A0,1"), &two).unwrap();
    assert!(pts.same_as(&affine_points_ideal(&r, &two).unwrap()));
    assert!(model_ideal(&r, &label("2*A0,1"), &[origin.clone(), origin.clone()]).is_err());
    assert!(model_ideal(&r, &label("2*A0,1"), std::slice::from_ref(&origin)).is_err());
    assert!(local_model(&PolyRing::indexed(k, "x", 1, 1).unwrap(), Atom::A1sp).is_err());
    assert!(Atom::a(3, 4).is_err());
}

#[test]
fn family_fibers() {
    let k = FieldSpec::default_prime();
    let all = families(k).unwrap();
    assert_eq!(all.len(), 7);
    for f in &all {
        for (b, want) in &f.fibers {
            let got = classify_fiber(f, &k.from_i64(*b)).unwrap();
            assert_eq!(&got, want, "{} at b = {b}", f.name);
        }
        if f.projective {
            for (b, _) in &f.fibers {
                let x = family_fiber(f, &k.from_i64(*b)).unwrap();
                assert!(is_ag(&x).unwrap().ag, "{} at b = {b}", f.name);
                assert_eq!(degree(&x).unwrap(), 6);
            }
        }
    }
}

#[test]
fn rational_families_over_qq() {
    let k = FieldSpec::rationals();
    for f in families(k).unwrap().iter().filter(|f| !f.needs_sqrt_minus_one) {
        for (b, want) in &f.fibers {
            assert_eq!(&classify_fiber(f, &k.from_i64(*b)).unwrap(), want, "{} at b = {b}", f.name);
        }
        // A generic parameter value lands in the same class as b = 1.
        let (_, general) = f.fibers.last().unwrap();
        assert_eq!(&classify_fiber(f, &k.from_i64(3)).unwrap(), general, "{}", f.name);
    }
}
