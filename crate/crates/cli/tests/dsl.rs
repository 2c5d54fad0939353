use gorenstein_cli::dsl::ast::{BinOp, Expr, Script, Stmt, StmtKind, FieldExpr, OrderExpr, Pos};
use gorenstein_cli::dsl::{parse_script, print_script, run_script};
use proptest::prelude::*;

#[test]
fn fat_point_script_prints_the_tangent_dimension() {
    let out = run_script("ring R = Fp(65537)[x0,x1,x2,x3,x4]; ideal I = gfat(6); print tangent(I);").unwrap();
    assert_eq!(out, vec!["29"]);
}

#[test]
fn ideal_without_ring_is_rejected_at_line_one() {
    let e = parse_script("ideal I = x^2;").unwrap_err();
    assert_eq!((e.message.as_str(), e.line, e.col), ("no ring declared", 1, 1));
    assert!(!e.runtime);
}

#[test]
fn small_characteristics_are_rejected() {
    for p in [2, 3] {
        let e = parse_script(&format!("ring R = Fp({p})[x];")).unwrap_err();
        assert_eq!(e.message, format!("characteristic {p} unsupported"));
    }
    assert!(parse_script("ring R = Fp(5)[x];").is_ok());
}

#[test]
fn errors_carry_positions() {
    let cases = [
        ("ring R = QQ[x];\nprint degree(y);", "undeclared identifier 'y'", 2, 14),
        ("ring R = QQ[x];\nlet a = frob(x);", "unknown function 'frob'", 2, 9),
        ("ring R = QQ[x]\nprint dim(x);", "expected ';', found identifier 'print'", 2, 1),
        ("ring R = QQ[x, x];", "variable 'x' declared twice", 1, 16),
        ("ring R = RR[x];", "unknown field 'RR' (expected QQ or Fp(p))", 1, 10),
        ("ring R = QQ[x];\nlet a = x @ 2;", "unexpected character '@'", 2, 11),
        ("ring R = QQ[x];\nprint x;", "print expects a function call", 2, 7),
        ("ring R = QQ[x];\nlet s = \"open;", "unterminated string", 2, 9),
        ("", "empty script", 1, 1),
    ];
    for (text, msg, line, col) in cases {
        let e = parse_script(text).unwrap_err();
        assert_eq!((e.message.as_str(), e.line, e.col), (msg, line, col), "{text:?}");
        assert_eq!(e.to_string(), format!("line {line}, column {col}: {msg}"));
    }
}

#[test]
fn runtime_errors_are_marked() {
    let e = run_script("ring R = QQ[x];\nprint tangent(x);").unwrap_err();
    assert!(e.runtime);
    assert_eq!(e.line, 2);
    assert!(e.message.contains("must be an ideal"), "{}", e.message);
    let e = run_script("ring R = QQ[x, y];\nideal I = x, y^2 - 1/0;").unwrap_err();
    assert!(e.runtime && e.message.contains("division by zero"));
}

#[test]
fn ideal_algebra_builtins() {
    let text = "
        ring R = QQ[x, y];
        ideal I = x^2, y;
        ideal J = x, y^3;
        let K = intersect(I, J);
        print gb(K);
        print dim(sum(I, J));
        print contains(K, x^2*y);
        print nf(x^3 + y, I);
        print same(colon(I, x), ideal(x, y));
        print hilbert(I);
        print socle(I);
        print dim(power(ideal(x, y), 3));
        print eliminate(ideal(x - y^2, y^3), 1);
        ring S = QQ[x1, x2];
        print classify(model(\"A2sp\"));
    ";
    let out = run_script(text).unwrap();
    assert_eq!(
        out,
        vec!["[x*y, x^2, y^3]", "1", "true", "0", "true", "[1, 1]", "1", "6", "ideal(y^3)", "A2sp"]
    );
}

#[test]
fn projective_builtins() {
    let text = "
        ring P = QQ[x0, x1, x2, x3, x4];
        ideal X = proj_model(\"A3,5 + A0,1\");
        print degree(X);
        print hfun(X, 3);
        print delta_h(X);
        print span_codim(X);
        print stratum(X);
        print betti(X);
        print classify(X);
        print classify(project(X, point(1, 0, 0, 0, 0)));
        print degree(fiber(\"g6-to-a35-a01\", 0));
    ";
    let out = run_script(text).unwrap();
    assert_eq!(
        out,
        vec![
            "6",
            "[1, 5, 6, 6]",
            "[1, 4, 1]",
            "0",
            "r=0: nondegenerate in P^4",
            "[9, 16]",
            "A3,5 + A0,1",
            "A3,5",
            "6"
        ]
    );
}

#[test]
fn scandinavian_builtin_matches_fat_point() {
    let text = "
        ring P = Fp(65537)[x0, x1, x2, x3, x4];
        let i = 256;
        ideal X = scandinavian(i*x4, x1, x2, -x1, i*x4, x3, -x2, -x3, i*x4);
        print same(X, gfat(6));
    ";
    assert_eq!(run_script(text).unwrap(), vec!["true"]);
}

#[test]
fn printed_scripts_reparse() {
    let text = "ring R = QQ[x, y] order lex; ideal I = -x^2 + 3*y/2, (x - y)^3; let a = -(x*y)^2 - (-x);\nprint gb(I);";
    let s = parse_script(text).unwrap();
    let printed = print_script(&s);
    assert_eq!(parse_script(&printed).unwrap(), s);
    assert_eq!(print_script(&parse_script(&printed).unwrap()), printed);
}

const VARS: [&str; 3] = ["x", "y", "z"];

fn arb_expr(bound: Vec<String>) -> impl Strategy<Value = Expr> {
    let mut leaves: Vec<BoxedStrategy<Expr>> = vec![
        (0u32..1000).prop_map(|n| Expr::Num(n.to_string())).boxed(),
        prop::sample::select(VARS.to_vec()).prop_map(|v| Expr::Ident(v.to_string())).boxed(),
        "[a-z]{0,4}".prop_map(Expr::Str).boxed(),
    ];
    if !bound.is_empty() {
        leaves.push(prop::sample::select(bound).prop_map(Expr::Ident).boxed());
    }
    let leaf = prop::strategy::Union::new(leaves);
    leaf.prop_recursive(4, 24, 3, |inner| {
        let op = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div]);
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), 0u32..5).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (op, inner.clone(), inner.clone()).prop_map(|(op, l, r)| Expr::Bin { op, lhs: Box::new(l), rhs: Box::new(r) }),
            (prop::sample::select(vec!["gb", "degree", "sum", "ideal"]), prop::collection::vec(inner, 0..3))
                .prop_map(|(name, args)| Expr::Call { name: name.to_string(), args }),
        ]
    })
}

fn stmt(kind: StmtKind) -> Stmt {
    Stmt { kind, pos: Pos { line: 0, col: 0 } }
}

fn arb_script() -> impl Strategy<Value = Script> {
    let field = prop_oneof![Just(FieldExpr::QQ), Just(FieldExpr::Fp(65537)), Just(FieldExpr::Fp(101))];
    let order = prop_oneof![
        Just(None),
        Just(Some(OrderExpr::Grevlex)),
        Just(Some(OrderExpr::Lex)),
        Just(Some(OrderExpr::Grlex)),
        (0usize..3).prop_map(|k| Some(OrderExpr::Elim(k))),
    ];
    let first = arb_expr(vec![]);
    let second = arb_expr(vec!["a".into()]);
    let gens = prop::collection::vec(arb_expr(vec!["a".into()]), 1..3);
    let call = (prop::sample::select(vec!["gb", "tangent", "dim"]), prop::collection::vec(arb_expr(vec!["a".into(), "I".into()]), 1..3));
    (field, order, first, gens, second, call).prop_map(|(field, order, first, gens, second, (name, args))| Script {
        stmts: vec![
            stmt(StmtKind::Ring { name: "R".into(), field, vars: VARS.iter().map(|v| v.to_string()).collect(), order }),
            stmt(StmtKind::Let { name: "a".into(), value: first }),
            stmt(StmtKind::Ideal { name: "I".into(), gens }),
            stmt(StmtKind::Let { name: "b".into(), value: second }),
            stmt(StmtKind::Print { call: Expr::Call { name: name.into(), args } }),
        ],
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_print_parse_fixpoint(script in arb_script()) {
        let printed = print_script(&script);
        let reparsed = parse_script(&printed).map_err(|e| TestCaseError::fail(format!("{e}\n{printed}")))?;
        prop_assert_eq!(&reparsed, &script, "{}", printed);
        prop_assert_eq!(print_script(&reparsed), printed);
    }
}
