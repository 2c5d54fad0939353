use std::collections::HashSet;

use gorenstein::FieldSpec;

use super::ast::{BinOp, Expr, FieldExpr, OrderExpr, Pos, Script, Stmt, StmtKind};
use super::interp::is_builtin;
use super::lexer::{lex, Tok, Token};
use super::ScriptError;

const KEYWORDS: &[&str] = &["ring", "ideal", "let", "print", "order", "QQ", "Fp"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
    ring_vars: Option<HashSet<String>>,
    names: HashSet<String>,
}

pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let mut p = Parser { toks: lex(text)?, at: 0, ring_vars: None, names: HashSet::new() };
    let mut stmts = Vec::new();
    while p.peek() != &Tok::Eof {
        stmts.push(p.stmt()?);
    }
    if stmts.is_empty() {
        return Err(p.error_here("empty script"));
    }
    Ok(Script { stmts })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        let t = &self.toks[self.at];
        Pos { line: t.line, col: t.col }
    }

    fn error_at(&self, pos: Pos, msg: impl Into<String>) -> ScriptError {
        ScriptError::new(msg, pos.line, pos.col)
    }

    fn error_here(&self, msg: impl Into<String>) -> ScriptError {
        self.error_at(self.pos(), msg)
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ScriptError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {}, found {}", want.describe(), self.peek().describe())))
        }
    }

    fn ident(&mut self) -> Result<String, ScriptError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            other => Err(self.error_here(format!("expected an identifier, found {}", other.describe()))),
        }
    }

    fn binding_name(&mut self) -> Result<String, ScriptError> {
        let pos = self.pos();
        let name = self.ident()?;
        if KEYWORDS.contains(&name.as_str()) {
            return Err(self.error_at(pos, format!("'{name}' is a keyword")));
        }
        Ok(name)
    }

    fn uint(&mut self) -> Result<u64, ScriptError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(s) => {
                self.next();
                s.parse().map_err(|_| self.error_at(pos, format!("number {s} is too large")))
            }
            other => Err(self.error_here(format!("expected a number, found {}", other.describe()))),
        }
    }

    fn stmt(&mut self) -> Result<Stmt, ScriptError> {
        let pos = self.pos();
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            other => return Err(self.error_here(format!("expected a statement, found {}", other.describe()))),
        };
        let kind = match kw.as_str() {
            "ring" => {
                self.next();
                self.ring_decl()?
            }
            "ideal" => {
                if self.ring_vars.is_none() {
                    return Err(self.error_at(pos, "no ring declared"));
                }
                self.next();
                let name = self.binding_name()?;
                self.expect(Tok::Eq)?;
                let mut gens = vec![self.expr()?];
                while *self.peek() == Tok::Comma {
                    self.next();
                    gens.push(self.expr()?);
                }
                self.names.insert(name.clone());
                StmtKind::Ideal { name, gens }
            }
            "let" => {
                self.next();
                let name = self.binding_name()?;
                self.expect(Tok::Eq)?;
                let value = self.expr()?;
                self.names.insert(name.clone());
                StmtKind::Let { name, value }
            }
            "print" => {
                self.next();
                let at = self.pos();
                let call = self.expr()?;
                if !matches!(call, Expr::Call { .. }) {
                    return Err(self.error_at(at, "print expects a function call"));
                }
                StmtKind::Print { call }
            }
            other => return Err(self.error_at(pos, format!("unknown statement '{other}'"))),
        };
        self.expect(Tok::Semi)?;
        Ok(Stmt { kind, pos })
    }

    fn ring_decl(&mut self) -> Result<StmtKind, ScriptError> {
        let name = self.binding_name()?;
        self.expect(Tok::Eq)?;
        let fpos = self.pos();
        let field = match self.ident()?.as_str() {
            "QQ" => FieldExpr::QQ,
            "Fp" => {
                self.expect(Tok::LParen)?;
                let p = self.uint()?;
                self.expect(Tok::RParen)?;
                FieldSpec::prime(p).map_err(|e| self.error_at(fpos, e.to_string()))?;
                FieldExpr::Fp(p)
            }
            other => return Err(self.error_at(fpos, format!("unknown field '{other}' (expected QQ or Fp(p))"))),
        };
        self.expect(Tok::LBracket)?;
        let mut vars = Vec::new();
        let mut seen = HashSet::new();
        loop {
            let vpos = self.pos();
            let v = self.binding_name()?;
            if !seen.insert(v.clone()) {
                return Err(self.error_at(vpos, format!("variable '{v}' declared twice")));
            }
            vars.push(v);
            if *self.peek() == Tok::Comma {
                self.next();
            } else {
                break;
            }
        }
        self.expect(Tok::RBracket)?;
        let order = if *self.peek() == Tok::Ident("order".into()) {
            self.next();
            let opos = self.pos();
            Some(match self.ident()?.as_str() {
                "grevlex" => OrderExpr::Grevlex,
                "lex" => OrderExpr::Lex,
                "grlex" => OrderExpr::Grlex,
                "elim" => {
                    self.expect(Tok::LParen)?;
                    let k = self.uint()? as usize;
                    self.expect(Tok::RParen)?;
                    OrderExpr::Elim(k)
                }
                other => return Err(self.error_at(opos, format!("unknown order '{other}'"))),
            })
        } else {
            None
        };
        self.ring_vars = Some(seen);
        self.names.insert(name.clone());
        Ok(StmtKind::Ring { name, field, vars, order })
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.next();
                Expr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(acc),
            };
            self.next();
            acc = Expr::Bin { op, lhs: Box::new(acc), rhs: Box::new(self.term()?) };
        }
    }

    fn term(&mut self) -> Result<Expr, ScriptError> {
        let mut acc = self.power()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(acc),
            };
            self.next();
            acc = Expr::Bin { op, lhs: Box::new(acc), rhs: Box::new(self.power()?) };
        }
    }

    fn power(&mut self) -> Result<Expr, ScriptError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let pos = self.pos();
        let e = self.uint()?;
        let e = u32::try_from(e).map_err(|_| self.error_at(pos, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, ScriptError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Num(s) => {
                self.next();
                Ok(Expr::Num(s))
            }
            Tok::Str(s) => {
                self.next();
                Ok(Expr::Str(s))
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.next();
                if *self.peek() == Tok::LParen {
                    if !is_builtin(&name) {
                        return Err(self.error_at(pos, format!("unknown function '{name}'")));
                    }
                    self.next();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::RParen {
                        args.push(self.expr()?);
                        while *self.peek() == Tok::Comma {
                            self.next();
                            args.push(self.expr()?);
                        }
                    }
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Call { name, args });
                }
                let known = self.names.contains(&name) || self.ring_vars.as_ref().is_some_and(|v| v.contains(&name));
                if !known {
                    let msg = if self.ring_vars.is_none() {
                        format!("undeclared identifier '{name}' (no ring declared)")
                    } else {
                        format!("undeclared identifier '{name}'")
                    };
                    return Err(self.error_at(pos, msg));
                }
                Ok(Expr::Ident(name))
            }
            other => Err(self.error_here(format!("expected an expression, found {}", other.describe()))),
        }
    }
}
