//! Explicit constructions of aG zero-dimensional schemes of degree 6 in `P^4`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::geometry::{degree, is_ag};
use crate::ideal::{ring_map_kernel, Ideal};
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

/// Reserved name of the unprojection variable.
pub const UNPROJECTION_VAR: &str = "s";

/// A determinantal-type output together with its dimension check.
#[derive(Clone, Debug)]
pub struct Determinantal {
    pub ideal: Ideal,
    pub zero_dimensional: bool,
}

impl Determinantal {
    fn new(ideal: Ideal) -> Determinantal {
        let zero_dimensional = matches!(degree(&ideal), Ok(d) if d > 0);
        Determinantal { ideal, zero_dimensional }
    }
}

fn det2(a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial) -> Polynomial {
    &(a * d) - &(b * c)
}

/// Determinant by cofactor expansion along the first row.
pub fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => panic!("empty matrix"),
        1 => m[0][0].clone(),
        2 => det2(&m[0][0], &m[0][1], &m[1][0], &m[1][1]),
        n => {
            let mut acc = Polynomial::zero(m[0][0].ring());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &poly_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Pfaffian of the principal 4x4 submatrix on `idx` (increasing).
fn pf4(n: &[Vec<Polynomial>], idx: [usize; 4]) -> Polynomial {
    let [a, b, c, d] = idx;
    let first = &n[a][b] * &n[c][d];
    let second = &n[a][c] * &n[b][d];
    let third = &n[a][d] * &n[b][c];
    &(&first - &second) + &third
}

fn shape_ring(entries: &[&Polynomial]) -> Result<Ring> {
    let first = entries.first().ok_or_else(|| Error::InvalidInput("empty matrix".into()))?;
    let ring = first.ring().clone();
    for e in entries {
        if !crate::ring::same_ring(e.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        if !e.is_zero() && !e.is_linear_form() {
            return Err(Error::InvalidInput(format!("entry {e} is not a linear form")));
        }
    }
    Ok(ring)
}

fn square(m: &[Vec<Polynomial>], n: usize) -> Result<Ring> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!("expected a {n}x{n} matrix")));
    }
    shape_ring(&m.iter().flatten().collect::<Vec<_>>())
}

fn check_antisymmetric(m: &[Vec<Polynomial>]) -> Result<()> {
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if *e != m[j][i].neg() {
                return Err(Error::InvalidInput(format!("matrix is not antisymmetric at ({i},{j})")));
            }
        }
    }
    Ok(())
}

fn check_symmetric(m: &[Vec<Polynomial>]) -> Result<()> {
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if *e != m[j][i] {
                return Err(Error::InvalidInput(format!("matrix is not symmetric at ({i},{j})")));
            }
        }
    }
    Ok(())
}

/// `(x_i x_j - delta_ij x_1^2)` in `k[x_0..x_{d-2}]`.
pub fn gfat(field: FieldSpec, d: usize) -> Result<Ideal> {
    if d < 4 {
        return Err(Error::InvalidInput(format!("fat point needs d >= 4, got {d}")));
    }
    let ring = PolyRing::indexed(field, "x", 0, d - 1)?;
    let x = |i: usize| Polynomial::var(&ring, i);
    let mut gens = Vec::new();
    for i in 1..=d - 2 {
        for j in i..=d - 2 {
            match (i, j) {
                (1, 1) => {}
                _ if i == j => gens.push(&x(i).pow(2) - &x(1).pow(2)),
                _ => gens.push(&x(i) * &x(j)),
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// The nine 2x2 minors of a 3x3 matrix of linear forms.
pub fn scandinavian(m: &[Vec<Polynomial>]) -> Result<Determinantal> {
    let ring = square(m, 3)?;
    let mut gens = Vec::with_capacity(9);
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            gens.push(det2(&m[r1][c1], &m[r1][c2], &m[r2][c1], &m[r2][c2]));
        }
    }
    Ok(Determinantal::new(Ideal::new(&ring, gens)?))
}

/// The twelve face determinants of a 2x2x2 array `t[i][j][h]`.
pub fn anglo_american_faces(t: &[Vec<Vec<Polynomial>>]) -> Result<Vec<Polynomial>> {
    if t.len() != 2 || t.iter().any(|p| p.len() != 2 || p.iter().any(|r| r.len() != 2)) {
        return Err(Error::InvalidInput("expected a 2x2x2 array".into()));
    }
    shape_ring(&t.iter().flatten().flatten().collect::<Vec<_>>())?;
    let at = |idx: [usize; 3]| &t[idx[0]][idx[1]][idx[2]];
    let face = |f: &dyn Fn(usize, usize) -> [usize; 3]| det2(at(f(0, 0)), at(f(0, 1)), at(f(1, 0)), at(f(1, 1)));
    let mut out = Vec::with_capacity(12);
    for pos in 0..3 {
        let (p, q) = match pos {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for v in 0..2 {
            out.push(face(&|a, b| {
                let mut idx = [0; 3];
                idx[pos] = v;
                idx[p] = a;
                idx[q] = b;
                idx
            }));
        }
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let free = 3 - a - b;
        for anti in [false, true] {
            out.push(face(&|tied, u| {
                let mut idx = [0; 3];
                idx[a] = tied;
                idx[b] = if anti { 1 - tied } else { tied };
                idx[free] = u;
                idx
            }));
        }
    }
    Ok(out)
}

pub fn anglo_american(t: &[Vec<Vec<Polynomial>>]) -> Result<Determinantal> {
    let faces = anglo_american_faces(t)?;
    let ring = t[0][0][0].ring().clone();
    Ok(Determinantal::new(Ideal::new(&ring, faces)?))
}

/// `N = [[A, S], [-S, -qA]]`.
pub fn extrasymmetric(a: &[Vec<Polynomial>], s: &[Vec<Polynomial>], q: &Scalar) -> Result<Vec<Vec<Polynomial>>> {
    square(a, 3)?;
    square(s, 3)?;
    check_antisymmetric(a)?;
    check_symmetric(s)?;
    let mut n = vec![Vec::with_capacity(6); 6];
    for i in 0..3 {
        for j in 0..3 {
            n[i].push(a[i][j].clone());
        }
        for j in 0..3 {
            n[i].push(s[i][j].clone());
        }
        for j in 0..3 {
            n[i + 3].push(s[i][j].neg());
        }
        for j in 0..3 {
            n[i + 3].push(a[i][j].scale(q).neg());
        }
    }
    Ok(n)
}

/// The fifteen order-4 pfaffians of a 6x6 antisymmetric matrix.
pub fn pfaffians4(n: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let size = n.len();
    let mut out = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            for c in b + 1..size {
                for d in c + 1..size {
                    out.push(pf4(n, [a, b, c, d]));
                }
            }
        }
    }
    out
}

pub fn british(a: &[Vec<Polynomial>], s: &[Vec<Polynomial>], q: &Scalar) -> Result<Determinantal> {
    let n = extrasymmetric(a, s, q)?;
    let ring = a[0][0].ring().clone();
    Ok(Determinantal::new(Ideal::new(&ring, pfaffians4(&n))?))
}

/// Dimension of the span of a list of quadrics.
pub fn quadric_span_dim(ring: &Ring, quadrics: &[Polynomial]) -> Result<usize> {
    Ideal::new(ring, quadrics.to_vec())?.graded_component_dim(2)
}

/// Section of the Veronese image of `(C, F) ⊂ k[x0,x1,x2]` by the hyperplane of `C`, in `k[x0..x4]`.
pub fn japanese(conic: &Polynomial, cubic: &Polynomial) -> Result<Ideal> {
    let plane = conic.ring().clone();
    if plane.nvars() != 3 || !crate::ring::same_ring(cubic.ring(), &plane) {
        return Err(Error::InvalidInput("conic and cubic must share a ring with three variables".into()));
    }
    if !conic.is_homogeneous() || conic.total_degree() != 2 || !cubic.is_homogeneous() || cubic.total_degree() != 3 {
        return Err(Error::InvalidInput("expected a conic and a cubic".into()));
    }
    let plane_ideal = Ideal::new(&plane, vec![conic.clone(), cubic.clone()])?;
    if !matches!(degree(&plane_ideal), Ok(6)) {
        return Err(Error::Construction("conic and cubic have a common component".into()));
    }
    let k = plane.field();
    let quadrics = monomials_of_degree(3, 2);
    let ynames: Vec<String> = (0..quadrics.len()).map(|j| format!("y{j}")).collect();
    let images: Vec<(String, Polynomial)> = ynames
        .iter()
        .zip(&quadrics)
        .map(|(y, m)| (y.clone(), Polynomial::monomial(&plane, m.clone(), k.one())))
        .collect();
    let veronese = ring_map_kernel(&plane, &[conic.clone(), cubic.clone()], &images)?;

    // The conic's own hyperplane: solve it for its last variable with a nonzero coefficient.
    let coeffs: Vec<Scalar> = quadrics.iter().map(|m| conic.coefficient(m)).collect();
    let solved = (0..coeffs.len()).rev().find(|&j| !k.is_zero(&coeffs[j])).expect("nonzero conic");
    let target = PolyRing::indexed(k, "x", 0, 5)?;
    let mut assignment = HashMap::new();
    let mut slot = 0;
    let mut rest = Vec::new();
    for (j, name) in ynames.iter().enumerate() {
        if j == solved {
            continue;
        }
        let xv = Polynomial::var(&target, slot);
        rest.push((j, xv.clone()));
        assignment.insert(name.clone(), xv);
        slot += 1;
    }
    let pivot = k.neg(&k.inv(&coeffs[solved]));
    let mut expr = Polynomial::zero(&target);
    for (j, xv) in &rest {
        expr = &expr + &xv.scale(&k.mul(&coeffs[*j], &pivot));
    }
    assignment.insert(ynames[solved].clone(), expr);
    veronese.substitute(&assignment, &target)
}

/// Output of the degree-5-plus-point construction.
#[derive(Clone, Debug)]
pub struct ItalianOutput {
    pub ideal: Ideal,
    /// The quadric of the residual colon, monic and reduced modulo the degree-5 ideal.
    pub f: Polynomial,
}

/// From an aG degree-5 scheme in `{x_4 = 0}` through `[1,0,0,0]` and a linear form `g` involving `x_4`.
pub fn italian(i5: &Ideal, g: &Polynomial) -> Result<ItalianOutput> {
    let small = i5.ring().clone();
    let big = g.ring().clone();
    if small.nvars() != 4 || big.nvars() != 5 {
        return Err(Error::InvalidInput("expected an ideal in 4 variables and a form in 5".into()));
    }
    if !g.is_linear_form() {
        return Err(Error::InvalidInput(format!("{g} is not a linear form")));
    }
    let extra = (0..5)
        .find(|&j| small.var_index(&big.vars()[j]).is_none())
        .ok_or_else(|| Error::InvalidInput("form ring needs one new variable".into()))?;
    if !g.uses_var(extra) {
        return Err(Error::InvalidInput(format!("{g} does not involve {}", big.vars()[extra])));
    }
    let k = small.field();
    let mut p = vec![k.zero(); 4];
    p[0] = k.one();
    if i5.gens().iter().any(|h| !k.is_zero(&h.eval(&p))) {
        return Err(Error::PointNotOnScheme);
    }
    let point = Ideal::new(&small, (1..4).map(|j| Polynomial::var(&small, j)).collect())?;
    let residual = i5.colon(&point)?;
    let f = residual
        .gb()
        .elements()
        .iter()
        .filter(|h| h.total_degree() == 2 && h.is_homogeneous())
        .map(|h| i5.gb().reduce(h))
        .find(|h| !h.is_zero())
        .ok_or_else(|| Error::Construction("the residual colon adds no quadric".into()))?
        .monic();

    let x4 = Polynomial::var(&big, extra);
    let mut gens = i5.gens().iter().map(|h| h.to_ring(&big)).collect::<Result<Vec<_>>>()?;
    for j in 1..4 {
        gens.push(&Polynomial::var(&big, big.var_index(&small.vars()[j]).expect("shared")) * &x4);
    }
    let fb = f.to_ring(&big)?;
    gens.push(&fb + &(&x4 * g));
    let ideal = Ideal::new(&big, gens)?;
    match degree(&ideal) {
        Ok(6) if is_ag(&ideal)?.ag => Ok(ItalianOutput { ideal, f }),
        _ => Err(Error::Construction("output is not aG of degree 6".into())),
    }
}

/// The 5x5 antisymmetric matrix attached to a 3x3 matrix. Unprojecting it and setting `s = m_00`
/// recovers the 2x2 minors when the lower-right block is `[[x1, x2], [x3, x4]]`; other bases of the
/// same block rescale `s` by the determinant of the change of basis.
pub fn tom_matrix(m: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
    let ring = square(m, 3)?;
    let z = Polynomial::zero(&ring);
    let upper = [
        [None, Some(&m[1][0]), Some(&m[2][0]), Some(&m[0][1]), Some(&m[0][2])],
        [None, None, None, Some(&m[1][1]), Some(&m[1][2])],
        [None, None, None, Some(&m[2][1]), Some(&m[2][2])],
        [None, None, None, None, None],
        [None, None, None, None, None],
    ];
    let mut a = vec![vec![z.clone(); 5]; 5];
    for i in 0..5 {
        for j in i + 1..5 {
            if let Some(e) = upper[i][j] {
                a[i][j] = e.clone();
                a[j][i] = e.neg();
            }
        }
    }
    Ok(a)
}

/// Linear coefficients of `form` on variables `1..=4`.
fn linear_coeffs(form: &Polynomial) -> Vec<Scalar> {
    form.linear_coefficients().expect("entries are linear")[1..].to_vec()
}

/// Unprojection ideal in `k[x_0..x_4, s]` of a 5x5 antisymmetric matrix in Tom format.
pub fn unprojection(a: &[Vec<Polynomial>]) -> Result<Ideal> {
    let ring = square(a, 5)?;
    check_antisymmetric(a)?;
    if ring.var_index(UNPROJECTION_VAR).is_some() {
        return Err(Error::InvalidRing(format!("'{UNPROJECTION_VAR}' is reserved for unprojection")));
    }
    if a[0][1].is_zero() {
        return Err(Error::InvalidInput("a_01 must be nonzero".into()));
    }
    for i in 1..5 {
        for j in i + 1..5 {
            if a[i][j].uses_var(0) {
                return Err(Error::InvalidInput(format!("entry ({i},{j}) involves {}", ring.vars()[0])));
            }
        }
    }
    let k = ring.field();
    let pf: Vec<Polynomial> = (0..5)
        .map(|i| {
            let idx: Vec<usize> = (0..5).filter(|&j| j != i).collect();
            pf4(a, [idx[0], idx[1], idx[2], idx[3]])
        })
        .collect();

    // p_i = sum_m x_m Q[m][i], expanding each pfaffian along index 0.
    let zero = Polynomial::zero(&ring);
    let mut q = vec![vec![zero.clone(); 4]; 4];
    for i in 1..5 {
        let idx: Vec<usize> = (1..5).filter(|&j| j != i).collect();
        let (b, c, d) = (idx[0], idx[1], idx[2]);
        for (sign, lead, rest) in [(1i64, b, (c, d)), (-1, c, (b, d)), (1, d, (b, c))] {
            let coeffs = linear_coeffs(&a[rest.0][rest.1]);
            for (m, coef) in coeffs.iter().enumerate() {
                if !k.is_zero(coef) {
                    let term = a[0][lead].scale(&k.mul(coef, &k.from_i64(sign)));
                    q[m][i - 1] = &q[m][i - 1] + &term;
                }
            }
        }
    }
    for i in 0..4 {
        let mut check = zero.clone();
        for m in 0..4 {
            check = &check + &(&Polynomial::var(&ring, m + 1) * &q[m][i]);
        }
        debug_assert_eq!(check, pf[i + 1]);
    }

    let mut names = ring.vars().to_vec();
    names.push(UNPROJECTION_VAR.to_string());
    let big = PolyRing::new(k, names, ring.order())?;
    let s = Polynomial::var(&big, 5);
    let mut gens = pf.iter().map(|p| p.to_ring(&big)).collect::<Result<Vec<_>>>()?;
    for m in 0..4 {
        let minor: Vec<Vec<Polynomial>> = (0..4)
            .filter(|&r| r != m)
            .map(|r| q[r][1..].to_vec())
            .collect();
        let cof = poly_det(&minor);
        let cof = if m % 2 == 0 { cof } else { cof.neg() };
        let g = cof
            .divide_exact(&a[0][1])
            .ok_or_else(|| Error::Construction(format!("cofactor {m} is not divisible by a_01")))?;
        gens.push(&(&Polynomial::var(&big, m + 1) * &s) - &g.to_ring(&big)?);
    }
    Ideal::new(&big, gens)
}

/// Unprojection followed by the hyperplane `s = s_value`.
pub fn anglo_hellenic(a: &[Vec<Polynomial>], s_value: &Polynomial) -> Result<Ideal> {
    let unp = unprojection(a)?;
    let ring = a[0][0].ring().clone();
    if !crate::ring::same_ring(s_value.ring(), &ring) || !s_value.is_linear_form() {
        return Err(Error::InvalidInput("s must be a linear form of the matrix ring".into()));
    }
    let assignment = HashMap::from([(UNPROJECTION_VAR.to_string(), s_value.clone())]);
    unp.substitute(&assignment, &ring)
}
