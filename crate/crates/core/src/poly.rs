//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::monomial::Monomial;
use crate::ring::{same_ring, Ring};

pub type Term = (Monomial, Scalar);

/// A polynomial with terms stored in increasing monomial order, so the leading
/// term is the last one.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index), ring.field().one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        let k = ring.field();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = k.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !k.is_zero(c));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms already sorted increasingly and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Terms from the leading one down.
    pub fn terms_desc(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter().rev()
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        self.terms.pop()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(&t.0, m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Whether the polynomial is a linear form (homogeneous of degree 1).
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.is_homogeneous() && self.terms[0].0.degree() == 1
    }

    /// Coefficients of a linear form as a vector indexed by variable.
    pub fn linear_coefficients(&self) -> Option<Vec<Scalar>> {
        if !self.is_zero() && !self.is_linear_form() {
            return None;
        }
        let k = self.field();
        let mut v = vec![k.zero(); self.ring.nvars()];
        for (m, c) in &self.terms {
            v[m.pure_power_var()?] = c.clone();
        }
        Some(v)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + scale * shift * other`; both operands are sorted, so a merge suffices.
    pub fn add_scaled(&self, other: &Polynomial, scale: &Scalar, shift: &Monomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let k = self.field();
        if k.is_zero(scale) || other.is_zero() {
            return self.clone();
        }
        let order = self.ring.order();
        let unshifted = shift.is_one();
        let unscaled = k.is_one(scale);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        let make = |t: &Term| -> Term {
            let m = if unshifted { t.0.clone() } else { t.0.mul(shift) };
            let c = if unscaled { t.1.clone() } else { k.mul(&t.1, scale) };
            (m, c)
        };
        let mut pending: Option<Term> = None;
        while i < a.len() || j < b.len() {
            if pending.is_none() && j < b.len() {
                pending = Some(make(&b[j]));
            }
            match (a.get(i), pending.as_ref()) {
                (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    Ordering::Less => {
                        out.push(ta.clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(pending.take().unwrap());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = k.add(&ta.1, &tb.1);
                        if !k.is_zero(&c) {
                            out.push((ta.0.clone(), c));
                        }
                        pending = None;
                        i += 1;
                        j += 1;
                    }
                },
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                (None, None) => break,
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let k = self.field();
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let k = self.field();
        if k.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), k.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        let k = self.field();
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), k.neg(a))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_poly(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(big, c, m);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        result
    }

    /// Arithmetic with an explicit ring check.
    pub fn checked_op(&self, other: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        let k = self.field();
        let one = Monomial::one(self.ring.nvars());
        Ok(match op {
            PolyOp::Add => self.add_scaled(other, &k.one(), &one),
            PolyOp::Sub => self.add_scaled(other, &k.from_i64(-1), &one),
            PolyOp::Mul => self.mul_poly(other),
        })
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let k = self.field();
                if k.is_one(c) {
                    self.clone()
                } else {
                    self.scale(&k.inv(c))
                }
            }
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars());
        let k = self.field();
        let mut total = k.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = k.mul(&v, &k.pow(&point[i], e as u64));
                }
            }
            total = k.add(&total, &v);
        }
        total
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(same_ring(&self.ring, &d.ring), "ring mismatch");
        let k = self.field();
        let (ld, lc) = d.leading_term()?;
        let lc_inv = k.inv(lc);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((lm, c)) = rem.leading_term() {
            let q = ld.quotient_of(lm)?;
            let coef = k.mul(c, &lc_inv);
            rem = rem.add_scaled(d, &k.neg(&coef), &q);
            quotient.push((q, coef));
        }
        quotient.reverse();
        Some(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Moves the polynomial into `target`, sending variable `i` to `index_map[i]`.
    pub fn relocate(&self, target: &Ring, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::from_exps(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves the polynomial into a ring with the same variable names (in any order).
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match target.var_index(name) {
                Some(j) => map.push(j),
                None if !self.uses_var(i) => map.push(usize::MAX),
                None => return Err(Error::MissingTargetVariable(name.clone())),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &x) in m.exps().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial::from_exps(&e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Ring homomorphism into `target`: assigned variables go to their images,
    /// the others to the variable of the same name in `target`.
    pub fn substitute(&self, assignment: &HashMap<String, Polynomial>, target: &Ring) -> Result<Polynomial> {
        for (name, image) in assignment {
            if self.ring.var_index(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
            if !same_ring(image.ring(), target) {
                return Err(Error::RingMismatch);
            }
        }
        let mut images = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.vars().iter().enumerate() {
            match assignment.get(name) {
                Some(p) => images.push(Some(p.clone())),
                None => match target.var_index(name) {
                    Some(j) => images.push(Some(Polynomial::var(target, j))),
                    None if !self.uses_var(i) => images.push(None),
                    None => return Err(Error::MissingTargetVariable(name.clone())),
                },
            }
        }
        Ok(self.substitute_images(&images, target))
    }

    /// Substitution by a full list of images (one per variable), with power caching.
    pub fn substitute_images(&self, images: &[Option<Polynomial>], target: &Ring) -> Polynomial {
        let mut cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        let one = Monomial::one(target.nvars());
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].as_ref().expect("image for used variable").pow(e as u32));
                term = term.mul_poly(p);
            }
            acc = acc.add_scaled(&term, &target.field().one(), &one);
        }
        acc
    }

    /// Sets variable `var` to 1 and drops it from the ring.
    pub fn dehomogenize(&self, var: usize) -> Result<Polynomial> {
        let target = self.ring.without_var(var)?;
        Ok(self.dehomogenize_into(var, &target))
    }

    pub(crate) fn dehomogenize_into(&self, var: usize, target: &Ring) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e: Vec<u16> = m.exps().to_vec();
                e.remove(var);
                (Monomial::from_exps(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Homogenizes into `target` using its variable `var`; the other variables of
    /// `target` must be the variables of this ring in the same order.
    pub fn homogenize(&self, target: &Ring, var: &str) -> Result<Polynomial> {
        let h = target.var_index(var).ok_or_else(|| Error::MissingTargetVariable(var.to_string()))?;
        if target.nvars() != self.ring.nvars() + 1 {
            return Err(Error::RingMismatch);
        }
        let top = self.total_degree();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e: Vec<u16> = m.exps().to_vec();
                e.insert(h, (top - m.degree()) as u16);
                (Monomial::from_exps(&e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Homogeneous part of degree `t`.
    pub fn homogeneous_part(&self, t: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == t).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_op(rhs, PolyOp::Add).expect("ring mismatch")
    }
}

impl ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_op(rhs, PolyOp::Sub).expect("ring mismatch")
    }
}

impl ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_poly(rhs)
    }
}

impl ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Replaces each variable `x_i` by `sum_j matrix[i][j] x_j`.
pub fn linear_change(gens: &[Polynomial], matrix: &[Vec<Scalar>]) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let n = ring.nvars();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput(format!("linear change needs a {n}x{n} matrix")));
    }
    let k = ring.field();
    if crate::linalg::determinant(k, matrix).map_or(true, |d| k.is_zero(&d)) {
        return Err(Error::SingularMatrix);
    }
    let images: Vec<Option<Polynomial>> = matrix
        .iter()
        .map(|row| {
            let terms = row.iter().enumerate().map(|(j, c)| (Monomial::var(n, j), c.clone())).collect();
            Some(Polynomial::from_terms(&ring, terms))
        })
        .collect();
    gens.iter()
        .map(|g| {
            if !same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            Ok(g.substitute_images(&images, &ring))
        })
        .collect()
}

/// Affine change `x_i -> x_i + shift_i`.
pub fn translate(gens: &[Polynomial], shift: &[Scalar]) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let images: Vec<Option<Polynomial>> = (0..ring.nvars())
        .map(|i| Some(&Polynomial::var(&ring, i) + &Polynomial::constant(&ring, shift[i].clone())))
        .collect();
    gens.iter().map(|g| g.substitute_images(&images, &ring)).collect()
}
