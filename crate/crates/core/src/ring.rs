use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::MonomialOrder;

/// Name of the auxiliary variable used by ideal intersection.
pub const INTERSECTION_VAR: &str = "@t";

/// A polynomial ring `k[vars]` with a fixed monomial order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if let Some(bad) = vars.iter().find(|v| !valid_name(v)) {
            if bad == INTERSECTION_VAR {
                return Err(Error::InvalidRing(format!("'{bad}' is reserved")));
            }
            return Err(Error::InvalidRing(format!("invalid variable name '{bad}'")));
        }
        Self::build(field, vars, order)
    }

    pub(crate) fn build(field: FieldSpec, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable '{v}'")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidRing(format!("cannot eliminate {k} of {} variables", vars.len())));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Grevlex ring on the given names.
    pub fn with_vars(field: FieldSpec, names: &[&str]) -> Result<Ring> {
        Self::new(field, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::Grevlex)
    }

    /// Grevlex ring on `prefix{start}..prefix{start+n-1}`.
    pub fn indexed(field: FieldSpec, prefix: &str, start: usize, n: usize) -> Result<Ring> {
        Self::new(field, (start..start + n).map(|i| format!("{prefix}{i}")).collect(), MonomialOrder::Grevlex)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Self::build(self.field, self.vars.clone(), order).expect("valid order")
    }

    /// The ring on the variables after the first `k`.
    pub fn drop_first(&self, k: usize) -> Result<Ring> {
        let order = match self.order {
            MonomialOrder::Elimination(_) => MonomialOrder::Grevlex,
            o => o,
        };
        Self::build(self.field, self.vars[k..].to_vec(), order)
    }

    pub fn without_var(&self, i: usize) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.remove(i);
        let order = match self.order {
            MonomialOrder::Elimination(_) => MonomialOrder::Grevlex,
            o => o,
        };
        Self::build(self.field, vars, order)
    }

    /// New variables in front, with the given order.
    pub fn prepend(&self, names: &[String], order: MonomialOrder) -> Result<Ring> {
        let mut vars = names.to_vec();
        vars.extend(self.vars.iter().cloned());
        Self::build(self.field, vars, order)
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
