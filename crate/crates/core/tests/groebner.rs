use gorenstein::{FieldSpec, Ideal, MonomialOrder, PolyRing, Ring};

fn qq(vars: &[&str]) -> Ring {
    PolyRing::with_vars(FieldSpec::rationals(), vars).unwrap()
}

fn lex(vars: &[&str]) -> Ring {
    PolyRing::new(FieldSpec::rationals(), vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::Lex).unwrap()
}

#[test]
fn single_monomial_basis() {
    let r = qq(&["x"]);
    let i = Ideal::parse(&r, &["x^2"]).unwrap();
    assert_eq!(i.gb().elements().len(), 1);
    assert_eq!(i.gb().elements()[0].to_string(), "x^2");
}

#[test]
fn lex_basis_contains_eliminant() {
    let r = lex(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2 - y", "y^2 - x"]).unwrap();
    let texts: Vec<String> = i.gb().elements().iter().map(|g| g.to_string()).collect();
    assert!(texts.contains(&"y^4 - y".to_string()), "{texts:?}");
    let y4 = gorenstein::parse_poly(&r, "y^4").unwrap();
    assert_eq!(i.normal_form(&y4).unwrap().to_string(), "y");
}

#[test]
fn unit_not_in_proper_ideal() {
    let r = qq(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2", "y^3"]).unwrap();
    let one = gorenstein::Polynomial::one(&r);
    assert_eq!(i.normal_form(&one).unwrap(), one);
    assert_eq!(i.quotient_dim().unwrap(), 6);
}

#[test]
fn standard_monomials_of_small_ideals() {
    let r = qq(&["x", "y"]);
    let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
    assert_eq!(i.standard_monomials().unwrap().len(), 4);
    let r1 = qq(&["x"]);
    assert_eq!(Ideal::parse(&r1, &["x^3"]).unwrap().quotient_dim().unwrap(), 3);
    let j = Ideal::parse(&r, &["x^2"]).unwrap();
    assert!(j.standard_monomials().is_err());
    assert_eq!(j.gb().standard_monomials(Some(2)).unwrap().len(), 5);
}

#[test]
fn intersection_from_degeneration_family() {
    let r = qq(&["b", "x1", "x2"]);
    let i = Ideal::parse(&r, &["x1*x2", "x1^2*b^2 - x2^2", "x1^3"]).unwrap();
    let j = Ideal::parse(&r, &["x1^2 + b^2", "x2"]).unwrap();
    let meet = i.intersect(&j).unwrap();
    let expected = Ideal::parse(&r, &["x1*x2", "x1^4 + x1^2*b^2 - x2^2"]).unwrap();
    assert!(meet.same_as(&expected), "{:?}", meet.gb());
}

#[test]
fn colon_and_saturation_basics() {
    let r = qq(&["x", "y"]);
    let xy = Ideal::parse(&r, &["x*y"]).unwrap();
    let x = Ideal::parse(&r, &["x"]).unwrap();
    assert!(xy.colon(&x).unwrap().same_as(&Ideal::parse(&r, &["y"]).unwrap()));
    let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
    let y = Ideal::parse(&r, &["y"]).unwrap();
    assert!(i.saturate(&y).unwrap().same_as(&Ideal::parse(&r, &["x^2"]).unwrap()));
    let emb = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
    let m = Ideal::maximal_at_origin(&r);
    assert!(emb.saturate(&m).unwrap().same_as(&x));
}

#[test]
fn elimination_of_graphs() {
    let r = qq(&["t", "x", "y"]);
    let i = Ideal::parse(&r, &["x - t", "y - t^2"]).unwrap();
    let e = i.eliminate(1).unwrap();
    let expected = Ideal::parse(e.ring(), &["y - x^2"]).unwrap();
    assert!(e.same_as(&expected));
    let r = qq(&["x", "y", "y0", "y1", "y2"]);
    let i = Ideal::parse(&r, &["y0 - x^2", "y1 - x*y", "y2 - y^2"]).unwrap();
    let e = i.eliminate(2).unwrap();
    assert!(e.same_as(&Ideal::parse(e.ring(), &["y1^2 - y0*y2"]).unwrap()));
}
