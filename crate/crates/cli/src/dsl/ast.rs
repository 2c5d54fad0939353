//! Syntax tree of the script language. Positions are carried for messages but ignored by equality.

#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldExpr {
    QQ,
    Fp(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderExpr {
    Grevlex,
    Lex,
    Grlex,
    Elim(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Unsigned decimal literal.
    Num(String),
    Str(String),
    Ident(String),
    Call { name: String, args: Vec<Expr> },
    Neg(Box<Expr>),
    Bin { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Ring { name: String, field: FieldExpr, vars: Vec<String>, order: Option<OrderExpr> },
    /// A single generator may also be an ideal-valued call.
    Ideal { name: String, gens: Vec<Expr> },
    Let { name: String, value: Expr },
    Print { call: Expr },
}

#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}
