//! The finite-dimensional algebra `k[x]/I` on its standard-monomial basis.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::StandardMonomialBasis;
use crate::ideal::Ideal;
use crate::linalg::{kernel, mat_vec, Echelon, Matrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::univariate::Dense;

pub struct QuotientAlgebra {
    ideal: Ideal,
    basis: StandardMonomialBasis,
    index: HashMap<Monomial, usize>,
    /// `mult[i]` is the matrix of multiplication by `x_i`, acting on column vectors.
    mult: Vec<Matrix>,
}

impl QuotientAlgebra {
    pub fn new(ideal: &Ideal) -> Result<QuotientAlgebra> {
        if ideal.is_unit() {
            return Err(Error::EmptyScheme);
        }
        let basis = ideal.standard_monomials()?;
        let index: HashMap<Monomial, usize> =
            basis.monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let ring = ideal.ring().clone();
        let k = ring.field();
        let dim = basis.len();
        let mut mult = Vec::with_capacity(ring.nvars());
        for i in 0..ring.nvars() {
            let xi = Monomial::var(ring.nvars(), i);
            let mut m = vec![vec![k.zero(); dim]; dim];
            for (j, b) in basis.monomials.iter().enumerate() {
                let prod = b.mul(&xi);
                if let Some(&r) = index.get(&prod) {
                    m[r][j] = k.one();
                } else {
                    let nf = ideal.gb().reduce(&Polynomial::monomial(&ring, prod, k.one()));
                    for (mono, c) in nf.terms() {
                        m[index[mono]][j] = c.clone();
                    }
                }
            }
            mult.push(m);
        }
        Ok(QuotientAlgebra { ideal: ideal.clone(), basis, index, mult })
    }

    pub fn field(&self) -> FieldSpec {
        self.ideal.ring().field()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &StandardMonomialBasis {
        &self.basis
    }

    pub fn mult_matrix(&self, i: usize) -> &Matrix {
        &self.mult[i]
    }

    /// Coordinates of the class of `f`.
    pub fn coords(&self, f: &Polynomial) -> Vec<Scalar> {
        let k = self.field();
        let nf = self.ideal.gb().reduce(f);
        let mut v = vec![k.zero(); self.dim()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn unit_coords(&self) -> Vec<Scalar> {
        self.coords(&Polynomial::one(self.ideal.ring()))
    }

    /// Coordinates of the product of basis elements `j` and `l`.
    pub fn basis_product(&self, j: usize, l: usize) -> Vec<Scalar> {
        let ring = self.ideal.ring();
        let m = self.basis.monomials[j].mul(&self.basis.monomials[l]);
        self.coords(&Polynomial::monomial(ring, m, self.field().one()))
    }

    pub fn apply(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        mat_vec(self.field(), &self.mult[i], v)
    }

    /// Minimal polynomial of multiplication by `x_i`; `A` is cyclic on 1, so
    /// the Krylov sequence of 1 suffices.
    pub fn min_poly(&self, i: usize) -> Dense {
        let k = self.field();
        let n = self.dim();
        // Rows are [v_d | e_d]; the tag block records the combination of Krylov vectors.
        let width = 2 * n + 1;
        let mut ech = Echelon::empty(width);
        let mut v = self.unit_coords();
        for d in 0..=n {
            let mut row = v.clone();
            row.resize(width, k.zero());
            row[n + d] = k.one();
            let reduced = ech.reduce(k, &row);
            if reduced[..n].iter().all(|x| k.is_zero(x)) {
                return Dense::new(k, reduced[n..].to_vec()).monic();
            }
            ech.insert(k, row);
            v = self.apply(i, &v);
        }
        unreachable!("minimal polynomial degree exceeds the dimension")
    }

    fn whole_space(&self) -> Echelon {
        let k = self.field();
        let n = self.dim();
        let rows = (0..n)
            .map(|j| {
                let mut e = vec![k.zero(); n];
                e[j] = k.one();
                e
            })
            .collect();
        Echelon::new(k, rows, n)
    }

    /// The chain `A = M^0 ⊋ M^1 ⊋ ...` of powers of the ideal generated by the variables,
    /// up to the last nonzero power (or the first repeated one for non-local algebras).
    pub fn filtration(&self) -> Vec<Echelon> {
        let k = self.field();
        let n = self.dim();
        let mut levels = vec![self.whole_space()];
        loop {
            let last = levels.last().unwrap();
            let mut next = Echelon::empty(n);
            for v in &last.rows {
                for i in 0..self.mult.len() {
                    next.insert(k, self.apply(i, v));
                }
            }
            if next.rank() == 0 || next.rank() == last.rank() {
                return levels;
            }
            levels.push(next);
        }
    }

    /// `dim 0 : M`, the common kernel of all multiplication maps.
    pub fn socle_dim(&self) -> usize {
        self.socle_basis().len()
    }

    pub fn socle_basis(&self) -> Vec<Vec<Scalar>> {
        let stacked: Matrix = self.mult.iter().flat_map(|m| m.iter().cloned()).collect();
        kernel(self.field(), &stacked, self.dim())
    }
}
