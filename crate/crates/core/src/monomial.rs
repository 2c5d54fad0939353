//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 10]>;

/// A monomial as an exponent vector with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { degree, exps: SmallVec::from_slice(exps) }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .map(|&a| u16::try_from(a as u32 * k).expect("exponent overflow"))
            .collect();
        Monomial { degree: self.degree * k, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { degree: other.degree - self.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { degree, exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this monomial is a pure power `x_i^e` with `e >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Degree of the monomial restricted to the first `k` variables.
    pub fn block_degree(&self, k: usize) -> u32 {
        self.exps[..k].iter().map(|&e| e as u32).sum()
    }
}

/// All monomials of total degree `t` in `nvars` variables, in lexicographically decreasing order.
pub fn monomials_of_degree(nvars: usize, t: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fn rec(i: usize, left: u32, current: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == current.len() {
            current[i] = left as u16;
            out.push(Monomial::from_exps(current));
            return;
        }
        for e in (0..=left).rev() {
            current[i] = e as u16;
            rec(i + 1, left - e, current, out);
        }
        current[i] = 0;
    }
    if nvars == 0 {
        if t == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, t, &mut current, &mut out);
    out
}

/// A monomial order. `Elimination(k)` is a block order, grevlex on the first `k`
/// variables and then grevlex on the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Grlex,
    Elimination(usize),
}

fn grevlex_slices(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_slices(&a.exps, &b.exps, a.degree, b.degree),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grlex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::Elimination(k) => {
                let k = *k;
                let (da, db) = (a.block_degree(k), b.block_degree(k));
                grevlex_slices(&a.exps[..k], &b.exps[..k], da, db).then_with(|| {
                    grevlex_slices(&a.exps[k..], &b.exps[k..], a.degree - da, b.degree - db)
                })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grlex => "grlex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
