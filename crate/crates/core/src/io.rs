//! JSON documents for rings, ideals and matrices of polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldKind, FieldSpec};
use crate::ideal::Ideal;
use crate::monomial::MonomialOrder;
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderDoc {
    Named(String),
    Elim { elim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub field: FieldDoc,
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: OrderDoc,
}

fn default_order() -> OrderDoc {
    OrderDoc::Named("grevlex".into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub ring: RingDoc,
    pub generators: Vec<String>,
}

/// Entries are nested lists of polynomial strings: 3×3, 5×5 or 2×2×2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub ring: RingDoc,
    pub entries: serde_json::Value,
}

impl RingDoc {
    pub fn from_ring(ring: &Ring) -> RingDoc {
        let k = ring.field();
        let field = match k.kind() {
            FieldKind::Rationals => FieldDoc::Named("QQ".into()),
            FieldKind::PrimeField => FieldDoc::Prime { p: k.characteristic() },
        };
        let order = match ring.order() {
            MonomialOrder::Elimination(k) => OrderDoc::Elim { elim: k },
            o => OrderDoc::Named(o.name()),
        };
        RingDoc { field, vars: ring.vars().to_vec(), order }
    }

    pub fn to_ring(&self) -> Result<Ring> {
        let field = match &self.field {
            FieldDoc::Named(s) if s == "QQ" => FieldSpec::rationals(),
            FieldDoc::Named(s) => return Err(Error::InvalidInput(format!("unknown field '{s}'"))),
            FieldDoc::Prime { p } => FieldSpec::prime(*p)?,
        };
        let order = match &self.order {
            OrderDoc::Named(s) => match s.as_str() {
                "grevlex" => MonomialOrder::Grevlex,
                "lex" => MonomialOrder::Lex,
                "grlex" => MonomialOrder::Grlex,
                other => return Err(Error::InvalidInput(format!("unknown order '{other}'"))),
            },
            OrderDoc::Elim { elim } => MonomialOrder::Elimination(*elim),
        };
        PolyRing::new(field, self.vars.clone(), order)
    }
}

impl IdealDoc {
    /// Writes the generators as given (not the Gröbner basis).
    pub fn from_ideal(ideal: &Ideal) -> IdealDoc {
        IdealDoc {
            ring: RingDoc::from_ring(ideal.ring()),
            generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        let ring = self.ring.to_ring()?;
        let gens = self.generators.iter().map(|g| parse_poly(&ring, g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    }
}

fn parse_entry(ring: &Ring, v: &serde_json::Value) -> Result<Polynomial> {
    match v {
        serde_json::Value::String(s) => parse_poly(ring, s),
        serde_json::Value::Number(n) => parse_poly(ring, &n.to_string()),
        _ => Err(Error::InvalidInput(format!("matrix entry must be a polynomial string, got {v}"))),
    }
}

fn as_list(v: &serde_json::Value) -> Result<&Vec<serde_json::Value>> {
    v.as_array().ok_or_else(|| Error::InvalidInput("matrix entries must be nested lists".into()))
}

impl MatrixDoc {
    pub fn ring(&self) -> Result<Ring> {
        self.ring.to_ring()
    }

    /// A rectangular matrix; every row must have the same length.
    pub fn matrix(&self) -> Result<Vec<Vec<Polynomial>>> {
        let ring = self.ring()?;
        let rows = as_list(&self.entries)?;
        let out = rows
            .iter()
            .map(|row| as_list(row)?.iter().map(|e| parse_entry(&ring, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if out.iter().any(|r| r.len() != out.len()) {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        Ok(out)
    }

    /// A 2×2×2 array indexed `[a][b][c]`.
    pub fn cube(&self) -> Result<Vec<Vec<Vec<Polynomial>>>> {
        let ring = self.ring()?;
        let out = as_list(&self.entries)?
            .iter()
            .map(|slab| {
                as_list(slab)?
                    .iter()
                    .map(|row| as_list(row)?.iter().map(|e| parse_entry(&ring, e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let ok = out.len() == 2 && out.iter().all(|s| s.len() == 2 && s.iter().all(|r| r.len() == 2));
        if !ok {
            return Err(Error::InvalidInput("expected a 2x2x2 array".into()));
        }
        Ok(out)
    }
}
