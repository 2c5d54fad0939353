use super::ast::{BinOp, Expr, FieldExpr, OrderExpr, Script, Stmt, StmtKind};

/// Canonical text of a script, one statement per line.
pub fn print_script(script: &Script) -> String {
    script.stmts.iter().map(|s| print_stmt(s) + "\n").collect()
}

pub fn print_stmt(stmt: &Stmt) -> String {
    match &stmt.kind {
        StmtKind::Ring { name, field, vars, order } => {
            let field = match field {
                FieldExpr::QQ => "QQ".to_string(),
                FieldExpr::Fp(p) => format!("Fp({p})"),
            };
            let order = match order {
                None => String::new(),
                Some(OrderExpr::Grevlex) => " order grevlex".into(),
                Some(OrderExpr::Lex) => " order lex".into(),
                Some(OrderExpr::Grlex) => " order grlex".into(),
                Some(OrderExpr::Elim(k)) => format!(" order elim({k})"),
            };
            format!("ring {name} = {field}[{}]{order};", vars.join(", "))
        }
        StmtKind::Ideal { name, gens } => {
            format!("ideal {name} = {};", gens.iter().map(print_expr).collect::<Vec<_>>().join(", "))
        }
        StmtKind::Let { name, value } => format!("let {name} = {};", print_expr(value)),
        StmtKind::Print { call } => format!("print {};", print_expr(call)),
    }
}

pub fn print_expr(e: &Expr) -> String {
    with_prec(e, 0)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Neg(_) => 1,
        Expr::Bin { op: BinOp::Add | BinOp::Sub, .. } => 1,
        Expr::Bin { .. } => 2,
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

/// Writes `e` so that it re-parses to itself in a context that binds at least as tightly as `min`.
fn with_prec(e: &Expr, min: u8) -> String {
    let body = match e {
        Expr::Num(s) => s.clone(),
        Expr::Str(s) => format!("\"{s}\""),
        Expr::Ident(s) => s.clone(),
        Expr::Call { name, args } => {
            format!("{name}({})", args.iter().map(print_expr).collect::<Vec<_>>().join(", "))
        }
        Expr::Neg(x) => format!("-{}", with_prec(x, 2)),
        Expr::Bin { op, lhs, rhs } => {
            let (sym, p) = match op {
                BinOp::Add => (" + ", 1),
                BinOp::Sub => (" - ", 1),
                BinOp::Mul => ("*", 2),
                BinOp::Div => ("/", 2),
            };
            // A leading negation is only legal at the start of a sum.
            let left_min = if matches!(**lhs, Expr::Neg(_)) && p == 1 { 1 } else { p };
            format!("{}{sym}{}", with_prec(lhs, left_min), with_prec(rhs, p + 1))
        }
        Expr::Pow(b, k) => format!("{}^{k}", with_prec(b, 4)),
    };
    if prec(e) < min {
        format!("({body})")
    } else {
        body
    }
}
