//! Buchberger's algorithm, normal forms and standard monomials.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{same_ring, Ring};

/// A Gröbner basis; when `reduced`, elements are monic, inter-reduced and sorted
/// by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
}

/// Monomials outside the leading-term ideal, sorted increasingly for the ring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    pub monomials: Vec<Monomial>,
}

impl StandardMonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|x| x == m)
    }

    pub fn count_of_degree(&self, t: u32) -> usize {
        self.monomials.iter().filter(|m| m.degree() == t).count()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    index: usize,
}

fn divisor_index(basis: &[Polynomial], active: &[usize], m: &Monomial) -> Option<usize> {
    active.iter().copied().find(|&i| basis[i].leading_monomial().unwrap().divides(m))
}

/// Full reduction of `f` by the listed elements of `basis`.
fn reduce_by(f: &Polynomial, basis: &[Polynomial], active: &[usize]) -> Polynomial {
    let k = f.field();
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((lm, lc)) = p.leading_term() {
        match divisor_index(basis, active, lm) {
            Some(i) => {
                let g = &basis[i];
                let (glm, glc) = g.leading_term().unwrap();
                let shift = glm.quotient_of(lm).unwrap();
                let c = k.neg(&k.div(lc, glc));
                p = p.add_scaled(g, &c, &shift);
            }
            None => {
                remainder.push(p.pop_leading().unwrap());
            }
        }
    }
    remainder.reverse();
    Polynomial::from_sorted_terms(&ring, remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let k = f.field();
    let (fl, fc) = f.leading_term().unwrap();
    let (gl, gc) = g.leading_term().unwrap();
    let a = f.mul_term(&fl.quotient_of(lcm).unwrap(), &k.inv(fc));
    a.add_scaled(g, &k.neg(&k.inv(gc)), &gl.quotient_of(lcm).unwrap())
}

struct Builder {
    basis: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    next_pair: usize,
}

impl Builder {
    /// Gebauer–Möller update after appending `basis[h]`.
    fn update(&mut self, h: usize) {
        let lh = self.basis[h].leading_monomial().unwrap().clone();
        let candidates: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.basis[g].leading_monomial().unwrap();
                (g, lh.lcm(lg), lh.coprime(lg))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, c) in candidates.iter().enumerate() {
            let dominated = |other: &(usize, Monomial, bool)| other.1.divides(&c.1);
            let later = candidates[idx + 1..].iter().any(dominated);
            let earlier = kept.iter().any(dominated);
            if c.2 || !(later || earlier) {
                kept.push(c.clone());
            }
        }
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let li = self.basis[p.i].leading_monomial().unwrap();
            let lj = self.basis[p.j].leading_monomial().unwrap();
            let drop = lh.divides(&p.lcm) && li.lcm(&lh) != p.lcm && lj.lcm(&lh) != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm, index: self.next_pair });
                self.next_pair += 1;
            }
        }
        let basis = &self.basis;
        self.active.retain(|&g| !lh.divides(basis[g].leading_monomial().unwrap()));
        self.active.push(h);
    }

    fn take_pair(&mut self, ring: &Ring) -> Option<Pair> {
        let order = ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| pa.index.cmp(&pb.index))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Adds a polynomial after reducing it; returns true when the ideal became the unit ideal.
    fn add(&mut self, f: &Polynomial) -> bool {
        let h = reduce_by(f, &self.basis, &self.active);
        if h.is_zero() {
            return false;
        }
        let h = h.monic();
        let unit = h.is_constant();
        self.basis.push(h);
        self.update(self.basis.len() - 1);
        unit
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zeros are ignored).
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    for g in gens {
        assert!(same_ring(g.ring(), ring), "ring mismatch");
    }
    let mut b = Builder { basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), next_pair: 0 };
    let mut unit = false;
    for g in gens {
        if b.add(g) {
            unit = true;
            break;
        }
    }
    while !unit {
        let Some(pair) = b.take_pair(ring) else { break };
        let s = s_polynomial(&b.basis[pair.i], &b.basis[pair.j], &pair.lcm);
        unit = b.add(&s);
    }
    if unit {
        return GroebnerBasis { ring: ring.clone(), elements: vec![Polynomial::one(ring)], reduced: true };
    }
    let minimal: Vec<Polynomial> = b.active.iter().map(|&i| b.basis[i].clone()).collect();
    GroebnerBasis::inter_reduce(ring, minimal)
}

impl GroebnerBasis {
    fn inter_reduce(ring: &Ring, minimal: Vec<Polynomial>) -> GroebnerBasis {
        let all: Vec<usize> = (0..minimal.len()).collect();
        let mut out = Vec::with_capacity(minimal.len());
        for (i, g) in minimal.iter().enumerate() {
            let others: Vec<usize> = all.iter().copied().filter(|&j| j != i).collect();
            let mut tail = g.clone();
            let lead = tail.pop_leading().unwrap();
            let reduced_tail = reduce_by(&tail, &minimal, &others);
            let mut terms = reduced_tail.into_terms();
            terms.push(lead);
            out.push(Polynomial::from_sorted_terms(ring, terms).monic());
        }
        let order = ring.order();
        out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        GroebnerBasis { ring: ring.clone(), elements: out, reduced: true }
    }

    /// Wraps elements already known to form the reduced basis (monic, inter-reduced, sorted).
    pub(crate) fn from_reduced(ring: &Ring, elements: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis { ring: ring.clone(), elements, reduced: true }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce(f))
    }

    /// Normal form without the ring check.
    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        let all: Vec<usize> = (0..self.elements.len()).collect();
        reduce_by(f, &self.elements, &all)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    /// Whether the leading monomial of `m` is standard.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for m in self.leading_monomials() {
            if let Some(i) = m.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Standard monomials, all of them or only those of degree at most `cap`.
    pub fn standard_monomials(&self, cap: Option<u32>) -> Result<StandardMonomialBasis> {
        if cap.is_none() && !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let mut out = Vec::new();
        if !self.is_unit() {
            let mut frontier = vec![(Monomial::one(n), 0usize)];
            while let Some((m, last)) = frontier.pop() {
                if cap.is_none_or(|c| m.degree() < c) {
                    for i in last..n {
                        let next = m.mul(&Monomial::var(n, i));
                        if self.is_standard(&next) {
                            frontier.push((next, i));
                        }
                    }
                }
                out.push(m);
            }
        }
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp(a, b));
        Ok(StandardMonomialBasis { monomials: out })
    }

    /// Number of standard monomials of degree exactly `t`.
    pub fn count_standard_of_degree(&self, t: u32) -> usize {
        crate::monomial::monomials_of_degree(self.ring.nvars(), t)
            .iter()
            .filter(|m| self.is_standard(m))
            .count()
    }

    /// Compares ideals through their reduced bases.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        same_ring(&self.ring, &other.ring) && self.elements == other.elements
    }
}
