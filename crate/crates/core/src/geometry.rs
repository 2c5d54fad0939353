//! Zero-dimensional projective schemes: Hilbert functions, the aG test, tangent spaces, projection.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::artinian::classify;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::label::AlgebraLabel;
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::quotient::QuotientAlgebra;

/// Trials spent looking for a regular linear form.
pub const REGULAR_FORM_TRIALS: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeReport {
    pub degree: usize,
    pub hilbert_fn: Vec<usize>,
    pub span_codim: usize,
    pub stratum: String,
    #[serde(rename = "aG")]
    pub ag: bool,
    pub nondegenerate: bool,
    pub delta_h: Vec<usize>,
    pub tangent_dim: Option<usize>,
    pub label: Option<AlgebraLabel>,
}

/// Outcome of the Artinian-reduction test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgReport {
    #[serde(rename = "aG")]
    pub ag: bool,
    pub delta_h: Vec<usize>,
    pub symmetric: bool,
    pub socle_dim: usize,
    pub regular_form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub r: usize,
    pub degree: usize,
    pub ambient_dim: usize,
    pub admissible: bool,
    pub label: String,
}

fn require_homogeneous(ideal: &Ideal) -> Result<()> {
    match ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        Some(g) => Err(Error::NotHomogeneous(g.to_string())),
        None => Ok(()),
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `h(t) = dim (S/I)_t` for `t = 0..=up_to`.
pub fn hilbert_function(ideal: &Ideal, up_to: u32) -> Result<Vec<usize>> {
    require_homogeneous(ideal)?;
    let gb = ideal.gb();
    Ok((0..=up_to).map(|t| gb.count_standard_of_degree(t)).collect())
}

fn stabilization_degree(ideal: &Ideal) -> u32 {
    let maxdeg = ideal.gens().iter().map(|g| g.total_degree()).max().unwrap_or(0);
    maxdeg + ideal.ring().nvars() as u32 + 2
}

/// The stable value of the Hilbert function; requires three equal values ending at the bound.
pub fn degree(ideal: &Ideal) -> Result<usize> {
    let top = stabilization_degree(ideal);
    let h = hilbert_function(ideal, top)?;
    let n = h.len();
    if h[n - 1] == h[n - 2] && h[n - 2] == h[n - 3] {
        Ok(h[n - 1])
    } else {
        Err(Error::NoStabilization(top as usize))
    }
}

fn projective_degree(ideal: &Ideal) -> Result<usize> {
    match degree(ideal) {
        Ok(0) => Err(Error::EmptyScheme),
        Ok(d) => Ok(d),
        Err(Error::NoStabilization(_)) => Err(Error::PositiveDimensional),
        Err(e) => Err(e),
    }
}

/// Number of independent linear forms in the ideal.
pub fn span_codim(ideal: &Ideal) -> Result<usize> {
    ideal.graded_component_dim(1)
}

/// Span codimensions allowed for an aG scheme of degree `d` in `P^n`.
pub fn admissible_span_codims(d: usize, n: usize) -> Vec<usize> {
    match d {
        0 => Vec::new(),
        1 => vec![n],
        2 | 3 => n.checked_sub(1).into_iter().collect(),
        _ => {
            let mut out: Vec<usize> = (n + 2).checked_sub(d).into_iter().collect();
            if let Some(lo) = (n + 1).checked_sub(d / 2) {
                out.extend(lo..n);
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    }
}

/// The linear span codimension and its stratum; with `require_ag`, inadmissible values are errors.
pub fn stratum(ideal: &Ideal, d: usize, require_ag: bool) -> Result<Stratum> {
    let r = span_codim(ideal)?;
    let n = ideal.ring().nvars() - 1;
    let admissible = admissible_span_codims(d, n).contains(&r);
    if require_ag && !admissible {
        return Err(Error::InadmissibleStratum { r, degree: d, n });
    }
    let label = if !admissible {
        format!("r={r}: no aG scheme")
    } else if d >= 4 && r + d == n + 2 {
        format!("r={r}: nondegenerate in P^{}", n - r)
    } else {
        format!("r={r}: short, in P^{}", n - r)
    };
    Ok(Stratum { r, degree: d, ambient_dim: n, admissible, label })
}

fn is_regular(ideal: &Ideal, form: &Polynomial) -> Result<bool> {
    if form.is_zero() || ideal.contains(form) {
        return Ok(false);
    }
    Ok(ideal.colon_poly(form)?.same_as(ideal))
}

/// A linear form `l` with `I : l = I`: coordinate forms first, then seeded random ones.
pub fn regular_linear_form(ideal: &Ideal, seed: u64) -> Result<Polynomial> {
    require_homogeneous(ideal)?;
    let ring = ideal.ring();
    let k = ring.field();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..REGULAR_FORM_TRIALS {
        let form = if trial < n {
            Polynomial::var(ring, trial)
        } else {
            let terms = (0..n).map(|j| (Monomial::var(n, j), k.random_small(&mut rng, 50))).collect();
            Polynomial::from_terms(ring, terms)
        };
        if is_regular(ideal, &form)? {
            return Ok(form);
        }
    }
    Err(Error::NoRegularForm(REGULAR_FORM_TRIALS))
}

/// Artinian reduction by a regular linear form, with its socle and Hilbert function.
pub fn is_ag(ideal: &Ideal) -> Result<AgReport> {
    projective_degree(ideal)?;
    let form = regular_linear_form(ideal, 0)?;
    let reduction = ideal.add_gens(std::slice::from_ref(&form))?;
    let algebra = QuotientAlgebra::new(&reduction)?;
    let top = algebra.basis().monomials.iter().map(|m| m.degree()).max().unwrap_or(0);
    let delta_h: Vec<usize> = (0..=top).map(|t| algebra.basis().count_of_degree(t)).collect();
    let symmetric = delta_h.iter().eq(delta_h.iter().rev());
    let socle_dim = algebra.socle_dim();
    Ok(AgReport { ag: socle_dim == 1, delta_h, symmetric, socle_dim, regular_form: form.to_string() })
}

/// `beta_h = h (d-2-h) / (d-1) * C(d, h+1)`.
pub fn betti_expected(d: usize, h: usize) -> Result<usize> {
    if d < 4 || h == 0 || h + 3 > d {
        return Err(Error::BettiIndex { d, h, max: d.saturating_sub(3) });
    }
    let numer = (h * (d - 2 - h)) as u128 * binomial(d, h + 1);
    assert_eq!(numer % (d - 1) as u128, 0, "beta_h is an integer");
    Ok((numer / (d - 1) as u128) as usize)
}

/// `(dim I_2, n dim I_2 - dim I_3)` for an aG nondegenerate scheme.
pub fn betti_check_low_degrees(ideal: &Ideal) -> Result<(usize, usize)> {
    if !is_ag(ideal)?.ag {
        return Err(Error::NotArithmeticallyGorenstein);
    }
    if span_codim(ideal)? != 0 {
        return Err(Error::InvalidInput("scheme is degenerate".into()));
    }
    let i2 = ideal.graded_component_dim(2)?;
    let i3 = ideal.graded_component_dim(3)?;
    Ok((i2, ideal.ring().nvars() * i2 - i3))
}

/// Coordinates in which `form` becomes variable `p` (its first nonzero coefficient).
fn straighten(ideal: &Ideal, form: &Polynomial) -> Result<(Ideal, usize)> {
    let ring = ideal.ring();
    let k = ring.field();
    let n = ring.nvars();
    let mut c = vec![k.zero(); n];
    for (m, coef) in form.terms() {
        let j = m.pure_power_var().ok_or_else(|| Error::InvalidInput(format!("{form} is not linear")))?;
        c[j] = coef.clone();
    }
    let p = c.iter().position(|x| !k.is_zero(x)).ok_or_else(|| Error::InvalidInput("zero form".into()))?;
    let inv = k.inv(&c[p]);
    let mut a = crate::linalg::identity(k, n);
    for (j, cj) in c.iter().enumerate() {
        a[p][j] = if j == p { inv.clone() } else { k.neg(&k.mul(cj, &inv)) };
    }
    Ok((ideal.linear_change(&a)?, p))
}

/// An affine chart containing the whole support, as an ideal in one fewer variable.
pub fn affine_chart(ideal: &Ideal) -> Result<Ideal> {
    let form = regular_linear_form(ideal, 0)?;
    let (moved, p) = straighten(ideal, &form)?;
    moved.dehomogenize(p)
}

/// `dim_k A/I^2 - dim_k A/I` for a zero-dimensional affine ideal.
pub fn affine_tangent_dim(ideal: &Ideal) -> Result<usize> {
    let square = ideal.power(2);
    Ok(square.quotient_dim()? - ideal.quotient_dim()?)
}

/// `dim_k I/I^2` as the rank of the classes of `s g` for standard monomials `s` and generators `g`.
pub fn affine_tangent_dim_direct(ideal: &Ideal) -> Result<usize> {
    let ring = ideal.ring();
    let k = ring.field();
    let square = ideal.power(2);
    let target = square.standard_monomials()?;
    let index: HashMap<&Monomial, usize> = target.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = Echelon::empty(target.len());
    for s in ideal.standard_monomials()?.monomials {
        let sp = Polynomial::monomial(ring, s, k.one());
        for g in ideal.gens() {
            let nf = square.gb().reduce(&(&sp * g));
            let mut v = vec![k.zero(); target.len()];
            for (m, c) in nf.terms() {
                v[index[m]] = c.clone();
            }
            span.insert(k, v);
        }
    }
    Ok(span.rank())
}

/// Tangent space dimension of the Hilbert scheme at an aG zero-dimensional scheme.
pub fn tangent_dim(ideal: &Ideal) -> Result<usize> {
    if !is_ag(ideal)?.ag {
        return Err(Error::NotArithmeticallyGorenstein);
    }
    affine_tangent_dim(&affine_chart(ideal)?)
}

/// Projection from a reduced point `P` of the scheme; the result drops the variable at `P`'s pivot.
pub fn project_from_point(ideal: &Ideal, point: &[Scalar]) -> Result<Ideal> {
    let ring = ideal.ring();
    let k = ring.field();
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::InvalidInput(format!("point needs {n} coordinates")));
    }
    let p = point.iter().position(|x| !k.is_zero(x)).ok_or_else(|| Error::InvalidInput("zero vector".into()))?;
    if ideal.gens().iter().any(|g| !k.is_zero(&g.eval(point))) {
        return Err(Error::PointNotOnScheme);
    }
    let d = projective_degree(ideal)?;
    if !is_ag(ideal)?.ag {
        return Err(Error::NotArithmeticallyGorenstein);
    }
    // x = A y with A e_p = P.
    let mut a = crate::linalg::identity(k, n);
    for i in 0..n {
        a[i][p] = point[i].clone();
    }
    let moved = ideal.linear_change(&a)?;

    let chart = moved.dehomogenize(p)?;
    let cr = chart.ring().clone();
    let powers: Vec<Polynomial> = (0..cr.nvars()).map(|j| Polynomial::var(&cr, j).pow(d as u32)).collect();
    let local = chart.add_gens(&powers)?.quotient_dim()?;
    if local != 1 {
        return Err(Error::PointNotReduced(local));
    }

    let others: Vec<Polynomial> = (0..n).filter(|&j| j != p).map(|j| Polynomial::var(ring, j)).collect();
    let residual = moved.colon(&Ideal::new(ring, others)?)?;
    let projected = residual.eliminate_vars(&[p])?;
    let dp = projective_degree(&projected)?;
    if dp + 1 != d || !is_ag(&projected)?.ag {
        return Err(Error::Construction(format!("projection has degree {dp} or is not aG")));
    }
    Ok(projected)
}

/// `min(C(n+t, n), d)`.
pub fn general_points_hilbert(n: usize, d: usize, t: usize) -> usize {
    binomial(n + t, n).min(d as u128) as usize
}

/// All projective invariants; the tangent space is computed only for aG inputs when requested.
pub fn scheme_report(ideal: &Ideal, with_tangent: bool) -> Result<SchemeReport> {
    let d = projective_degree(ideal)?;
    let hilbert_fn = hilbert_function(ideal, stabilization_degree(ideal))?;
    let ag = is_ag(ideal)?;
    let st = stratum(ideal, d, false)?;
    let chart = affine_chart(ideal)?;
    let tangent_dim = if with_tangent && ag.ag { Some(affine_tangent_dim(&chart)?) } else { None };
    Ok(SchemeReport {
        degree: d,
        hilbert_fn,
        span_codim: st.r,
        stratum: st.label,
        ag: ag.ag,
        nondegenerate: st.r == 0,
        delta_h: ag.delta_h,
        tangent_dim,
        label: classify(&chart).ok(),
    })
}
