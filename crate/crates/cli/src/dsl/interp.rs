use std::collections::HashMap;
use std::fmt;

use gorenstein::artinian::{report, socle_dim};
use gorenstein::catalog::{affine_model, projective_model};
use gorenstein::constructions::{gfat, scandinavian};
use gorenstein::families::{family, family_fiber};
use gorenstein::geometry::{
    affine_chart, betti_check_low_degrees, degree, hilbert_function, is_ag, project_from_point, span_codim, stratum,
    tangent_dim,
};
use gorenstein::{classify, AlgebraLabel, FieldSpec, Ideal, MonomialOrder, PolyRing, Polynomial, Ring, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ast::{BinOp, Expr, FieldExpr, OrderExpr, Script, StmtKind};
use super::{parse_script, ScriptError};

/// Function names accepted in calls.
pub const BUILTINS: &[&str] = &[
    "betti",
    "chart",
    "classify",
    "colon",
    "contains",
    "degree",
    "delta_h",
    "dim",
    "eliminate",
    "fiber",
    "gb",
    "gens",
    "gfat",
    "hfun",
    "hilbert",
    "ideal",
    "intersect",
    "is_ag",
    "model",
    "nf",
    "point",
    "power",
    "product",
    "proj_model",
    "project",
    "same",
    "saturate",
    "scandinavian",
    "socle",
    "span_codim",
    "stratum",
    "sum",
    "tangent",
];

pub fn is_builtin(name: &str) -> bool {
    BUILTINS.contains(&name)
}

#[derive(Clone, Debug)]
pub enum Value {
    Num(BigRational),
    Poly(Polynomial),
    Ideal(Ideal),
    Label(AlgebraLabel),
    Bool(bool),
    Str(String),
    List(Vec<Value>),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Poly(_) => "polynomial",
            Value::Ideal(_) => "ideal",
            Value::Label(_) => "label",
            Value::Bool(_) => "boolean",
            Value::Str(_) => "string",
            Value::List(_) => "list",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(q) => write!(f, "{q}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Ideal(i) => {
                let gens: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
                write!(f, "ideal({})", gens.join(", "))
            }
            Value::Label(l) => write!(f, "{l}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Str(s) => write!(f, "{s}"),
            Value::List(items) => {
                let parts: Vec<String> = items.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

type Eval<T> = std::result::Result<T, String>;

fn core<T>(r: gorenstein::Result<T>) -> Eval<T> {
    r.map_err(|e| e.to_string())
}

fn count(n: usize) -> Value {
    Value::Num(BigRational::from_integer(BigInt::from(n)))
}

#[derive(Default)]
pub struct Interpreter {
    ring: Option<Ring>,
    env: HashMap<String, Value>,
    output: Vec<String>,
}

/// Parses and runs `text`, returning the printed lines.
pub fn run_script(text: &str) -> Result<Vec<String>, ScriptError> {
    let script = parse_script(text)?;
    let mut it = Interpreter::default();
    it.run(&script)?;
    Ok(it.output)
}

impl Interpreter {
    pub fn output(&self) -> &[String] {
        &self.output
    }

    pub fn run(&mut self, script: &Script) -> Result<(), ScriptError> {
        for stmt in &script.stmts {
            self.exec(&stmt.kind).map_err(|msg| ScriptError::runtime(msg, stmt.pos.line, stmt.pos.col))?;
        }
        Ok(())
    }

    fn exec(&mut self, kind: &StmtKind) -> Eval<()> {
        match kind {
            StmtKind::Ring { name, field, vars, order } => {
                let field = match field {
                    FieldExpr::QQ => FieldSpec::rationals(),
                    FieldExpr::Fp(p) => core(FieldSpec::prime(*p))?,
                };
                let order = match order {
                    None | Some(OrderExpr::Grevlex) => MonomialOrder::Grevlex,
                    Some(OrderExpr::Lex) => MonomialOrder::Lex,
                    Some(OrderExpr::Grlex) => MonomialOrder::Grlex,
                    Some(OrderExpr::Elim(k)) => MonomialOrder::Elimination(*k),
                };
                let ring = core(PolyRing::new(field, vars.clone(), order))?;
                self.env.insert(name.clone(), Value::Str(format!("{field}{:?}", vars)));
                self.ring = Some(ring);
            }
            StmtKind::Ideal { name, gens } => {
                let ring = self.ring()?;
                let ideal = if let [single] = gens.as_slice() {
                    match self.eval(single)? {
                        Value::Ideal(i) => i,
                        other => core(Ideal::new(&ring, vec![self.as_poly(other)?]))?,
                    }
                } else {
                    let polys = gens.iter().map(|g| self.eval(g).and_then(|v| self.as_poly(v))).collect::<Eval<_>>()?;
                    core(Ideal::new(&ring, polys))?
                };
                self.env.insert(name.clone(), Value::Ideal(ideal));
            }
            StmtKind::Let { name, value } => {
                let v = self.eval(value)?;
                self.env.insert(name.clone(), v);
            }
            StmtKind::Print { call } => {
                let v = self.eval(call)?;
                self.output.push(v.to_string());
            }
        }
        Ok(())
    }

    fn ring(&self) -> Eval<Ring> {
        self.ring.clone().ok_or_else(|| "no ring declared".to_string())
    }

    fn field(&self) -> Eval<FieldSpec> {
        Ok(self.ring()?.field())
    }

    fn scalar(&self, q: &BigRational) -> Eval<Scalar> {
        core(self.field()?.from_rational(q))
    }

    fn as_poly(&self, v: Value) -> Eval<Polynomial> {
        match v {
            Value::Poly(p) => Ok(p),
            Value::Num(q) => Ok(Polynomial::constant(&self.ring()?, self.scalar(&q)?)),
            other => Err(format!("expected a polynomial, got a {}", other.kind())),
        }
    }

    fn eval(&self, e: &Expr) -> Eval<Value> {
        match e {
            Expr::Num(s) => {
                let n: BigInt = s.parse().map_err(|_| format!("bad number {s}"))?;
                Ok(Value::Num(BigRational::from_integer(n)))
            }
            Expr::Str(s) => Ok(Value::Str(s.clone())),
            Expr::Ident(name) => {
                if let Some(v) = self.env.get(name) {
                    return Ok(v.clone());
                }
                let ring = self.ring()?;
                match ring.var_index(name) {
                    Some(i) => Ok(Value::Poly(Polynomial::var(&ring, i))),
                    None => Err(format!("undeclared identifier '{name}'")),
                }
            }
            Expr::Neg(x) => match self.eval(x)? {
                Value::Num(q) => Ok(Value::Num(-q)),
                v => Ok(Value::Poly(-&self.as_poly(v)?)),
            },
            Expr::Pow(b, k) => match self.eval(b)? {
                Value::Num(q) => Ok(Value::Num(num_traits::pow(q, *k as usize))),
                Value::Ideal(i) => Ok(Value::Ideal(i.power(*k))),
                v => Ok(Value::Poly(self.as_poly(v)?.pow(*k))),
            },
            Expr::Bin { op, lhs, rhs } => self.binary(*op, self.eval(lhs)?, self.eval(rhs)?),
            Expr::Call { name, args } => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Eval<Vec<_>>>()?;
                self.call(name, vals).map_err(|m| format!("{name}: {m}"))
            }
        }
    }

    fn binary(&self, op: BinOp, a: Value, b: Value) -> Eval<Value> {
        if let (Value::Num(x), Value::Num(y)) = (&a, &b) {
            return Ok(Value::Num(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => {
                    if y.is_zero() {
                        return Err("division by zero".into());
                    }
                    x / y
                }
            }));
        }
        if op == BinOp::Div {
            let Value::Num(y) = b else {
                return Err("only division by a nonzero number is supported".into());
            };
            if y.is_zero() {
                return Err("division by zero".into());
            }
            let inv = self.scalar(&(BigRational::one() / y))?;
            return Ok(Value::Poly(self.as_poly(a)?.scale(&inv)));
        }
        let (p, q) = (self.as_poly(a)?, self.as_poly(b)?);
        Ok(Value::Poly(match op {
            BinOp::Add => &p + &q,
            BinOp::Sub => &p - &q,
            _ => &p * &q,
        }))
    }

    fn call(&self, name: &str, args: Vec<Value>) -> Eval<Value> {
        let ring = self.ring()?;
        let field = ring.field();
        let ideal_arg = |i: usize| -> Eval<Ideal> {
            match args.get(i) {
                Some(Value::Ideal(x)) => Ok(x.clone()),
                Some(other) => Err(format!("argument {} must be an ideal, got a {}", i + 1, other.kind())),
                None => Err(format!("missing argument {}", i + 1)),
            }
        };
        let uint_arg = |i: usize| -> Eval<usize> {
            match args.get(i) {
                Some(Value::Num(q)) if q.is_integer() && !q.is_negative() => {
                    q.to_integer().try_into().map_err(|_| "number too large".to_string())
                }
                Some(other) => Err(format!("argument {} must be a non-negative integer, got {other}", i + 1)),
                None => Err(format!("missing argument {}", i + 1)),
            }
        };
        let str_arg = |i: usize| -> Eval<String> {
            match args.get(i) {
                Some(Value::Str(s)) => Ok(s.clone()),
                Some(Value::Label(l)) => Ok(l.to_string()),
                Some(other) => Err(format!("argument {} must be a string, got a {}", i + 1, other.kind())),
                None => Err(format!("missing argument {}", i + 1)),
            }
        };
        let poly_arg = |i: usize| -> Eval<Polynomial> {
            match args.get(i) {
                Some(v) => self.as_poly(v.clone()),
                None => Err(format!("missing argument {}", i + 1)),
            }
        };
        let arity = |n: usize| -> Eval<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(format!("expected {n} arguments, got {}", args.len()))
            }
        };
        let into_ring = |x: Ideal| core(x.to_ring(&ring));
        let label_arg = |i: usize| -> Eval<AlgebraLabel> { str_arg(i)?.parse().map_err(|e: gorenstein::Error| e.to_string()) };
        let polys = |xs: &[Polynomial]| Value::List(xs.iter().cloned().map(Value::Poly).collect());
        let scalars = |v: &Value| -> Eval<Vec<Scalar>> {
            match v {
                Value::List(items) => items
                    .iter()
                    .map(|c| match c {
                        Value::Num(q) => self.scalar(q),
                        other => Err(format!("point coordinates must be numbers, got {other}")),
                    })
                    .collect(),
                other => Err(format!("expected a point, got a {}", other.kind())),
            }
        };
        Ok(match name {
            "gfat" => {
                arity(1)?;
                Value::Ideal(into_ring(core(gfat(field, uint_arg(0)?))?)?)
            }
            "scandinavian" => {
                arity(9)?;
                let entries = (0..9).map(poly_arg).collect::<Eval<Vec<_>>>()?;
                let m: Vec<Vec<Polynomial>> = entries.chunks(3).map(|r| r.to_vec()).collect();
                Value::Ideal(core(scandinavian(&m))?.ideal)
            }
            "model" => {
                arity(1)?;
                Value::Ideal(into_ring(core(affine_model(field, &label_arg(0)?))?)?)
            }
            "proj_model" => {
                arity(1)?;
                let l = label_arg(0)?;
                let x = core(projective_model(field, &l))?.ok_or_else(|| format!("no projective model for {l}"))?;
                Value::Ideal(into_ring(x)?)
            }
            "fiber" => {
                arity(2)?;
                let f = core(family(field, &str_arg(0)?))?;
                let Some(Value::Num(b)) = args.get(1) else {
                    return Err("argument 2 must be a number".into());
                };
                Value::Ideal(into_ring(core(family_fiber(&f, &self.scalar(b)?))?)?)
            }
            "tangent" => {
                arity(1)?;
                count(core(tangent_dim(&ideal_arg(0)?))?)
            }
            "degree" => {
                arity(1)?;
                count(core(degree(&ideal_arg(0)?))?)
            }
            "hfun" => {
                arity(2)?;
                let t = u32::try_from(uint_arg(1)?).map_err(|_| "degree bound too large".to_string())?;
                Value::List(core(hilbert_function(&ideal_arg(0)?, t))?.into_iter().map(count).collect())
            }
            "is_ag" => {
                arity(1)?;
                Value::Bool(core(is_ag(&ideal_arg(0)?))?.ag)
            }
            "delta_h" => {
                arity(1)?;
                Value::List(core(is_ag(&ideal_arg(0)?))?.delta_h.into_iter().map(count).collect())
            }
            "span_codim" => {
                arity(1)?;
                count(core(span_codim(&ideal_arg(0)?))?)
            }
            "stratum" => {
                arity(1)?;
                let x = ideal_arg(0)?;
                Value::Str(core(stratum(&x, core(degree(&x))?, false))?.label)
            }
            "betti" => {
                arity(1)?;
                let (b1, b2) = core(betti_check_low_degrees(&ideal_arg(0)?))?;
                Value::List(vec![count(b1), count(b2)])
            }
            "classify" => {
                arity(1)?;
                let x = ideal_arg(0)?;
                let x = if x.is_homogeneous() && !x.is_zero_dimensional() { core(affine_chart(&x))? } else { x };
                Value::Label(core(classify(&x))?)
            }
            "socle" => {
                arity(1)?;
                count(core(socle_dim(&ideal_arg(0)?))?)
            }
            "hilbert" => {
                arity(1)?;
                Value::List(core(report(&ideal_arg(0)?))?.hilbert_fn.into_iter().map(count).collect())
            }
            "dim" => {
                arity(1)?;
                count(core(ideal_arg(0)?.quotient_dim())?)
            }
            "gb" => {
                arity(1)?;
                polys(ideal_arg(0)?.gb().elements())
            }
            "gens" => {
                arity(1)?;
                polys(ideal_arg(0)?.gens())
            }
            "nf" => {
                arity(2)?;
                Value::Poly(core(ideal_arg(1)?.normal_form(&poly_arg(0)?))?)
            }
            "contains" => {
                arity(2)?;
                Value::Bool(ideal_arg(0)?.contains(&poly_arg(1)?))
            }
            "sum" | "product" | "intersect" | "saturate" | "same" => {
                arity(2)?;
                let (a, b) = (ideal_arg(0)?, ideal_arg(1)?);
                match name {
                    "sum" => Value::Ideal(core(a.sum(&b))?),
                    "product" => Value::Ideal(core(a.product(&b))?),
                    "intersect" => Value::Ideal(core(a.intersect(&b))?),
                    "saturate" => Value::Ideal(core(a.saturate(&b))?),
                    _ => Value::Bool(a.same_as(&b)),
                }
            }
            "colon" => {
                arity(2)?;
                let a = ideal_arg(0)?;
                match &args[1] {
                    Value::Ideal(b) => Value::Ideal(core(a.colon(b))?),
                    v => Value::Ideal(core(a.colon_poly(&self.as_poly(v.clone())?))?),
                }
            }
            "power" => {
                arity(2)?;
                let e = u32::try_from(uint_arg(1)?).map_err(|_| "exponent too large".to_string())?;
                Value::Ideal(ideal_arg(0)?.power(e))
            }
            "eliminate" => {
                arity(2)?;
                Value::Ideal(core(ideal_arg(0)?.eliminate(uint_arg(1)?))?)
            }
            "chart" => {
                arity(1)?;
                Value::Ideal(core(affine_chart(&ideal_arg(0)?))?)
            }
            "point" => {
                for (i, a) in args.iter().enumerate() {
                    if !matches!(a, Value::Num(_)) {
                        return Err(format!("argument {} must be a number", i + 1));
                    }
                }
                Value::List(args.clone())
            }
            "project" => {
                arity(2)?;
                Value::Ideal(core(project_from_point(&ideal_arg(0)?, &scalars(&args[1])?))?)
            }
            "ideal" => {
                let gens = (0..args.len()).map(poly_arg).collect::<Eval<Vec<_>>>()?;
                Value::Ideal(core(Ideal::new(&ring, gens))?)
            }
            other => return Err(format!("unknown function '{other}'")),
        })
    }
}
