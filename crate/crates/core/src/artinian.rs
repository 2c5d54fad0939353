//! Invariants and classification of zero-dimensional affine algebras.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::label::{AlgebraLabel, Atom};
use crate::linalg::{kernel, rank};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::quotient::QuotientAlgebra;
use crate::ring::PolyRing;
use crate::univariate::split_roots;

/// Largest degree covered by the classification.
pub const MAX_CLASSIFIED_DEGREE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinianReport {
    pub dim: usize,
    pub hilbert_fn: Vec<usize>,
    pub level: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
    pub label: Option<AlgebraLabel>,
}

/// The multiplication pairing between graded pieces `i` and `e - i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiForm {
    pub i: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub nondegenerate: bool,
}

/// A point of the support with its local ideal moved to the origin.
#[derive(Clone, Debug)]
pub struct SupportComponent {
    pub point: Vec<Scalar>,
    pub local: Ideal,
    pub degree: usize,
}

fn require_zero_dimensional(ideal: &Ideal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::EmptyScheme);
    }
    if !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    Ok(())
}

/// Whether every variable is nilpotent modulo the ideal.
pub fn is_local_at_origin(ideal: &Ideal) -> Result<bool> {
    require_zero_dimensional(ideal)?;
    let d = ideal.quotient_dim()? as u32;
    let ring = ideal.ring();
    Ok((0..ring.nvars()).all(|i| ideal.contains(&Polynomial::var(ring, i).pow(d))))
}

fn local_algebra(ideal: &Ideal) -> Result<QuotientAlgebra> {
    if !is_local_at_origin(ideal)? {
        return Err(Error::SupportNotAtOrigin);
    }
    QuotientAlgebra::new(ideal)
}

fn hilbert_of(algebra: &QuotientAlgebra) -> Vec<usize> {
    let levels = algebra.filtration();
    let ranks: Vec<usize> = levels.iter().map(|e| e.rank()).chain(std::iter::once(0)).collect();
    ranks.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Dimension, Hilbert function and level of a local algebra at the origin.
pub fn filtration_hilbert(ideal: &Ideal) -> Result<ArtinianReport> {
    let a = local_algebra(ideal)?;
    let h = hilbert_of(&a);
    Ok(ArtinianReport {
        dim: a.dim(),
        level: h.len() - 1,
        hilbert_fn: h,
        socle_dim: 0,
        gorenstein: false,
        label: None,
    })
}

pub fn socle_dim(ideal: &Ideal) -> Result<usize> {
    Ok(local_algebra(ideal)?.socle_dim())
}

/// Full invariants of a local algebra at the origin (without the label).
pub fn analyze_local(ideal: &Ideal) -> Result<ArtinianReport> {
    let a = local_algebra(ideal)?;
    let h = hilbert_of(&a);
    let socle = a.socle_dim();
    Ok(ArtinianReport {
        dim: a.dim(),
        level: h.len() - 1,
        gorenstein: socle == 1,
        hilbert_fn: h,
        socle_dim: socle,
        label: None,
    })
}

/// Ranks of the multiplication pairings of a graded local algebra.
pub fn psi_form_ranks(ideal: &Ideal) -> Result<Vec<PsiForm>> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let a = local_algebra(ideal)?;
    let k = a.field();
    let mons = &a.basis().monomials;
    let e = mons.iter().map(|m| m.degree()).max().unwrap_or(0) as usize;
    let of_degree = |t: usize| -> Vec<usize> { (0..mons.len()).filter(|&j| mons[j].degree() as usize == t).collect() };
    let top = of_degree(e);
    let mut out = Vec::new();
    for i in 0..=e {
        let left = of_degree(i);
        let right = of_degree(e - i);
        // Row j: the functional b_j * (-) on the complementary piece, valued in the top piece.
        let rows: Vec<Vec<Scalar>> = left
            .iter()
            .map(|&j| {
                let mut row = Vec::with_capacity(right.len() * top.len());
                for &l in &right {
                    let prod = a.basis_product(j, l);
                    row.extend(top.iter().map(|&t| prod[t].clone()));
                }
                row
            })
            .collect();
        let r = rank(k, &rows);
        out.push(PsiForm {
            i,
            rows: left.len(),
            cols: right.len(),
            rank: r,
            nondegenerate: top.len() == 1 && r == left.len() && r == right.len(),
        });
    }
    Ok(out)
}

/// For `H = (1,2,2,1)`: whether some `v` in `M \ M^2` squares to zero over the algebraic closure.
pub fn square_zero_exists(ideal: &Ideal) -> Result<bool> {
    let a = local_algebra(ideal)?;
    let h = hilbert_of(&a);
    if h != [1, 2, 2, 1] {
        return Err(Error::InvalidInput(format!("square-zero test needs H = (1,2,2,1), got {h:?}")));
    }
    let k = a.field();
    let n = a.dim();
    let one = a.basis().index_of(&Monomial::one(ideal.ring().nvars())).expect("1 is standard");
    let maximal: Vec<usize> = (0..n).filter(|&j| j != one).collect();
    let params = PolyRing::indexed(k, "c", 1, maximal.len())?;
    let c: Vec<Polynomial> = (0..maximal.len()).map(|j| Polynomial::var(&params, j)).collect();

    // v^2 = sum_{j,l} c_j c_l b_j b_l, one polynomial in c per basis coordinate.
    let mut square = vec![Polynomial::zero(&params); n];
    for (x, &j) in maximal.iter().enumerate() {
        for (y, &l) in maximal.iter().enumerate().skip(x) {
            let prod = a.basis_product(j, l);
            let weight = if x == y { k.one() } else { k.from_i64(2) };
            let cc = &c[x] * &c[y];
            for (r, coef) in prod.iter().enumerate() {
                if !k.is_zero(coef) {
                    square[r] = &square[r] + &cc.scale(&k.mul(&weight, coef));
                }
            }
        }
    }
    let squares = Ideal::new(&params, square)?;

    // Linear forms in c giving the class of v in M / M^2.
    let levels = a.filtration();
    let m2_rows = levels.get(2).map(|e| e.rows.clone()).unwrap_or_default();
    let annihilator = kernel(k, &m2_rows, n);
    let forms: Vec<Polynomial> = annihilator
        .iter()
        .map(|phi| {
            let terms = maximal
                .iter()
                .enumerate()
                .map(|(x, &j)| (Monomial::var(maximal.len(), x), phi[j].clone()))
                .collect();
            Polynomial::from_terms(&params, terms)
        })
        .filter(|f| !f.is_zero())
        .collect();
    let sat = squares.saturate(&Ideal::new(&params, forms)?)?;
    Ok(!sat.is_unit())
}

/// Splits a zero-dimensional ideal with rational support into local pieces moved to the origin.
pub fn split_rational_support(ideal: &Ideal) -> Result<Vec<SupportComponent>> {
    require_zero_dimensional(ideal)?;
    let ring = ideal.ring().clone();
    let k = ring.field();
    let mut parts: Vec<(Ideal, Vec<Scalar>)> = vec![(ideal.clone(), Vec::new())];
    for i in 0..ring.nvars() {
        let mut next = Vec::new();
        for (part, point) in parts {
            let a = QuotientAlgebra::new(&part)?;
            let roots =
                split_roots(&a.min_poly(i)).ok_or_else(|| Error::IrrationalSupport(ring.vars()[i].clone()))?;
            if roots.len() == 1 {
                let mut p = point.clone();
                p.push(roots[0].0.clone());
                next.push((part, p));
                continue;
            }
            let xi = Polynomial::var(&ring, i);
            for (c, e) in roots {
                let factor = (&xi - &Polynomial::constant(&ring, c.clone())).pow(e as u32);
                let mut p = point.clone();
                p.push(c);
                next.push((part.add_gens(&[factor])?, p));
            }
        }
        parts = next;
    }
    let mut out = Vec::with_capacity(parts.len());
    for (part, point) in parts {
        let local = part.translate(&point);
        let degree = local.quotient_dim()?;
        out.push(SupportComponent { point, local, degree });
    }
    out.sort_by(|a, b| {
        a.point
            .iter()
            .zip(b.point.iter())
            .map(|(x, y)| k.canonical_cmp(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(out)
}

/// Class of a local Gorenstein algebra at the origin.
pub fn classify_local(ideal: &Ideal) -> Result<Atom> {
    let report = analyze_local(ideal)?;
    if report.dim > MAX_CLASSIFIED_DEGREE {
        return Err(Error::DegreeTooLarge(report.dim));
    }
    if report.socle_dim != 1 {
        return Err(Error::NotGorenstein(report.socle_dim));
    }
    let h = &report.hilbert_fn;
    if h.len() == 1 {
        return Atom::a(0, 1);
    }
    if h.iter().skip(2).all(|&x| x == 1) {
        return Atom::a(h[1], report.dim).map_err(|_| Error::UnrealizableHilbertFunction(h.clone()));
    }
    if h[..] == [1, 2, 2, 1] {
        return Ok(if square_zero_exists(ideal)? { Atom::A1sp } else { Atom::A2sp });
    }
    Err(Error::UnrealizableHilbertFunction(h.clone()))
}

/// Isomorphism class over the algebraic closure of `k[x]/I`, for degree at most 6 and rational support.
pub fn classify(ideal: &Ideal) -> Result<AlgebraLabel> {
    require_zero_dimensional(ideal)?;
    let dim = ideal.quotient_dim()?;
    if dim > MAX_CLASSIFIED_DEGREE {
        return Err(Error::DegreeTooLarge(dim));
    }
    let atoms = split_rational_support(ideal)?
        .iter()
        .map(|c| classify_local(&c.local))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraLabel::new(atoms))
}

/// Local invariants with the label attached.
pub fn report(ideal: &Ideal) -> Result<ArtinianReport> {
    let mut r = analyze_local(ideal)?;
    r.label = classify_local(ideal).ok().map(AlgebraLabel::local);
    Ok(r)
}
