//! Ideals with a lazily computed reduced Gröbner basis, and the ideal algebra built on it.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{buchberger, GroebnerBasis, StandardMonomialBasis};
use crate::linalg::rank;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::parse::parse_poly;
use crate::poly::{linear_change, translate, Polynomial};
use crate::ring::{same_ring, PolyRing, Ring, INTERSECTION_VAR};

/// Hard stop for `saturate`.
pub const SATURATION_LIMIT: usize = 50;

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Keeps the terms of `p` (free of the first `k` variables) in `target`, the ring on the remaining variables.
fn restrict_to_tail(p: &Polynomial, k: usize, target: &Ring) -> Polynomial {
    let terms = p.terms().iter().map(|(m, c)| (Monomial::from_exps(&m.exps()[k..]), c.clone())).collect();
    Polynomial::from_terms(target, terms)
}

fn shift_into(p: &Polynomial, target: &Ring, offset: usize) -> Polynomial {
    let map: Vec<usize> = (0..p.ring().nvars()).map(|i| i + offset).collect();
    p.relocate(target, &map)
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::unchecked(ring, gens))
    }

    fn unchecked(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    fn with_gb(ring: &Ring, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Ideal {
        let ideal = Self::unchecked(ring, gens);
        let _ = ideal.gb.set(gb);
        ideal
    }

    /// The ideal generated by a Gröbner basis, with the basis cached.
    pub fn from_gb(gb: GroebnerBasis) -> Ideal {
        let ring = gb.ring().clone();
        Self::with_gb(&ring, gb.elements().to_vec(), gb)
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|g| parse_poly(ring, g)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Self::unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Self::unchecked(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by the variables (the irrelevant ideal, or the origin).
    pub fn maximal_at_origin(ring: &Ring) -> Ideal {
        Self::unchecked(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    /// Maximal ideal of the rational point `p`.
    pub fn of_point(ring: &Ring, p: &[Scalar]) -> Ideal {
        let gens = (0..ring.nvars())
            .map(|i| &Polynomial::var(ring, i) - &Polynomial::constant(ring, p[i].clone()))
            .collect();
        Self::unchecked(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.ring, &self.gens))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb().normal_form(f)
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.gb().is_zero_dimensional()
    }

    /// Same ideal (equal reduced Gröbner bases).
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.gb().same_ideal(other.gb())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn standard_monomials(&self) -> Result<StandardMonomialBasis> {
        self.gb().standard_monomials(None)
    }

    /// dim_k of the quotient ring, for zero-dimensional ideals.
    pub fn quotient_dim(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::unchecked(&self.ring, gens))
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ring, extra.to_vec())?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(Self::unchecked(&self.ring, gens))
    }

    /// `I^e`; the zeroth power is the unit ideal.
    pub fn power(&self, e: u32) -> Ideal {
        if e == 0 {
            return Ideal::unit(&self.ring);
        }
        // Products of generators without repetition: g_{i1} ... g_{ie} with i1 <= ... <= ie.
        let mut layer: Vec<(usize, Polynomial)> =
            self.gens.iter().enumerate().map(|(i, g)| (i, g.clone())).collect();
        for _ in 1..e {
            let mut next = Vec::new();
            for (last, p) in &layer {
                for (j, g) in self.gens.iter().enumerate().skip(*last) {
                    next.push((j, p * g));
                }
            }
            layer = next;
        }
        Self::unchecked(&self.ring, layer.into_iter().map(|(_, p)| p).collect())
    }

    /// `I ∩ J` through `t I + (1 - t) J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let n = self.ring.nvars();
        let big = self.ring.prepend(&[INTERSECTION_VAR.to_string()], MonomialOrder::Elimination(1))?;
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(&t * &shift_into(f, &big, 1));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &shift_into(g, &big, 1));
        }
        let gb = buchberger(&big, &gens);
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|p| restrict_to_tail(p, 1, &self.ring))
            .collect();
        debug_assert!(kept.iter().all(|p| p.ring().nvars() == n));
        Ok(self.from_restricted(kept))
    }

    /// Wraps elimination output, caching it when it is already the reduced basis for this ring's order.
    fn from_restricted(&self, kept: Vec<Polynomial>) -> Ideal {
        if self.ring.order() == MonomialOrder::Grevlex {
            let gb = GroebnerBasis::from_reduced(&self.ring, kept.clone());
            Self::with_gb(&self.ring, kept, gb)
        } else {
            Self::unchecked(&self.ring, kept)
        }
    }

    /// `I : (f)`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroColon);
        }
        let principal = Ideal::unchecked(&self.ring, vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.divide_exact(f).ok_or_else(|| Error::InexactDivision(format!("{g} by {f}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::unchecked(&self.ring, gens))
    }

    /// `I : J = ∩_j (I : f_j)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ZeroColon)?;
        let mut acc = self.colon_poly(first)?;
        for g in gens {
            acc = acc.intersect(&self.colon_poly(g)?)?;
        }
        Ok(acc)
    }

    /// Iterates `I := I : J` until it stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        for _ in 0..SATURATION_LIMIT {
            let next = current.colon(other)?;
            if next.same_as(&current) {
                return Ok(next);
            }
            current = next;
        }
        Err(Error::SaturationLimit(SATURATION_LIMIT))
    }

    /// `I ∩ k[x_{k}, ..]`, as an ideal of the ring on the remaining variables.
    pub fn eliminate(&self, first_k: usize) -> Result<Ideal> {
        let vars: Vec<usize> = (0..first_k).collect();
        self.eliminate_vars(&vars)
    }

    /// Eliminates the listed variables; the result lives in the ring without them.
    pub fn eliminate_vars(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let k = vars.len();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let names: Vec<String> = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let big = PolyRing::build(self.ring.field(), names.clone(), MonomialOrder::Elimination(k))?;
        let mut position = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            position[old] = new;
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.relocate(&big, &position)).collect();
        let gb = buchberger(&big, &gens);
        let rest_order = match self.ring.order() {
            MonomialOrder::Elimination(_) => MonomialOrder::Grevlex,
            o => o,
        };
        let rest = PolyRing::build(self.ring.field(), names[k..].to_vec(), rest_order)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.block_degree(k) == 0))
            .map(|p| restrict_to_tail(p, k, &rest))
            .collect();
        if rest_order == MonomialOrder::Grevlex {
            let gb = GroebnerBasis::from_reduced(&rest, kept.clone());
            Ok(Self::with_gb(&rest, kept, gb))
        } else {
            Ok(Self::unchecked(&rest, kept))
        }
    }

    /// dim_k of the degree-`t` part of a homogeneous ideal, by linear algebra on the generators.
    pub fn graded_component_dim(&self, t: u32) -> Result<usize> {
        if let Some(g) = self.gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        let n = self.ring.nvars();
        let k = self.ring.field();
        let basis = monomials_of_degree(n, t);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &self.gens {
            let d = g.total_degree();
            if d > t {
                continue;
            }
            for m in monomials_of_degree(n, t - d) {
                let mut row = vec![k.zero(); basis.len()];
                for (mono, c) in g.terms() {
                    row[index[&mono.mul(&m)]] = c.clone();
                }
                rows.push(row);
            }
        }
        Ok(rank(k, &rows))
    }

    /// Moves the generators into a ring with the same variable names.
    pub fn to_ring(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ok(Self::unchecked(target, gens))
    }

    pub fn map_gens(&self, target: &Ring, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<Ideal> {
        let gens = self.gens.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    pub fn substitute(&self, assignment: &HashMap<String, Polynomial>, target: &Ring) -> Result<Ideal> {
        self.map_gens(target, |g| g.substitute(assignment, target))
    }

    pub fn linear_change(&self, matrix: &[Vec<Scalar>]) -> Result<Ideal> {
        if self.gens.is_empty() {
            return Ok(self.clone());
        }
        Ok(Self::unchecked(&self.ring, linear_change(&self.gens, matrix)?))
    }

    /// `x_i -> x_i + shift_i`.
    pub fn translate(&self, shift: &[Scalar]) -> Ideal {
        Self::unchecked(&self.ring, translate(&self.gens, shift))
    }

    /// Sets variable `var` to 1.
    pub fn dehomogenize(&self, var: usize) -> Result<Ideal> {
        let target = self.ring.without_var(var)?;
        Ok(Self::unchecked(&target, self.gens.iter().map(|g| g.dehomogenize_into(var, &target)).collect()))
    }
}

/// Preimage of `target_gens` under the map sending new variable `name` to `image`; for
/// homogeneous data of a common image degree the result is saturated by the irrelevant ideal.
pub fn ring_map_kernel(source: &Ring, target_gens: &[Polynomial], images: &[(String, Polynomial)]) -> Result<Ideal> {
    if images.is_empty() {
        return Err(Error::InvalidInput("ring map needs at least one image".into()));
    }
    let n = source.nvars();
    let mut names = source.vars().to_vec();
    names.extend(images.iter().map(|(y, _)| y.clone()));
    let big = PolyRing::build(source.field(), names, MonomialOrder::Elimination(n))?;
    let ys = PolyRing::new(
        source.field(),
        images.iter().map(|(y, _)| y.clone()).collect(),
        MonomialOrder::Grevlex,
    )?;
    let identity: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    for g in target_gens {
        if !same_ring(g.ring(), source) {
            return Err(Error::RingMismatch);
        }
        gens.push(g.relocate(&big, &identity));
    }
    for (j, (_, image)) in images.iter().enumerate() {
        if !same_ring(image.ring(), source) {
            return Err(Error::RingMismatch);
        }
        gens.push(&Polynomial::var(&big, n + j) - &image.relocate(&big, &identity));
    }
    let gb = buchberger(&big, &gens);
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.block_degree(n) == 0))
        .map(|p| restrict_to_tail(p, n, &ys))
        .collect();
    let kernel = Ideal::with_gb(&ys, kept.clone(), GroebnerBasis::from_reduced(&ys, kept));
    let degrees: Vec<u32> = images.iter().map(|(_, p)| p.total_degree()).collect();
    let cone = images.iter().all(|(_, p)| p.is_homogeneous() && !p.is_zero())
        && degrees.iter().all(|&d| d == degrees[0] && d > 0)
        && target_gens.iter().all(|g| g.is_homogeneous());
    if cone {
        kernel.saturate(&Ideal::maximal_at_origin(&ys))
    } else {
        Ok(kernel)
    }
}
