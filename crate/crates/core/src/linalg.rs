//! Dense exact linear algebra over a [`FieldSpec`].

use crate::field::{FieldSpec, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form of a set of row vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    width: usize,
}

impl Echelon {
    pub fn new(field: FieldSpec, rows: Vec<Vec<Scalar>>, width: usize) -> Self {
        let mut e = Echelon { rows: Vec::new(), pivots: Vec::new(), width };
        for r in rows {
            e.insert(field, r);
        }
        e
    }

    pub fn empty(width: usize) -> Self {
        Echelon { rows: Vec::new(), pivots: Vec::new(), width }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the current rows (zeroing every pivot coordinate).
    pub fn reduce(&self, field: FieldSpec, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !field.is_zero(&v[p]) {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    if !field.is_zero(r) {
                        *x = field.sub(x, &field.mul(&c, r));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, field: FieldSpec, v: &[Scalar]) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    /// Adds a vector; returns whether the rank grew. Keeps the rows fully reduced.
    pub fn insert(&mut self, field: FieldSpec, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.width);
        let mut v = self.reduce(field, &v);
        let Some(p) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[p]);
        for x in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if !field.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(v.iter()) {
                    if !field.is_zero(y) {
                        *x = field.sub(x, &field.mul(&c, y));
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }
}

pub fn rank(field: FieldSpec, rows: &[Vec<Scalar>]) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut m: Matrix = rows.to_vec();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]);
        let pivot_row: Vec<Scalar> = m[r].iter().map(|x| field.mul(x, &inv)).collect();
        for row in m.iter_mut().skip(r + 1) {
            if !field.is_zero(&row[c]) {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                    if !field.is_zero(y) {
                        *x = field.sub(x, &field.mul(&f, y));
                    }
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn kernel(field: FieldSpec, m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let e = Echelon::new(field, m.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (row, &p) in e.rows.iter().zip(e.pivots.iter()) {
                v[p] = field.neg(&row[f]);
            }
            v
        })
        .collect()
}

pub fn determinant(field: FieldSpec, m: &[Vec<Scalar>]) -> Option<Scalar> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut a: Matrix = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return Some(field.zero());
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]);
        for i in c + 1..n {
            if !field.is_zero(&a[i][c]) {
                let f = field.mul(&a[i][c], &inv);
                for j in c..n {
                    let t = field.mul(&f, &a[c][j]);
                    a[i][j] = field.sub(&a[i][j], &t);
                }
            }
        }
    }
    Some(det)
}

pub fn inverse(field: FieldSpec, m: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !field.is_zero(&a[i][c]))?;
        a.swap(p, c);
        let inv = field.inv(&a[c][c]);
        for x in a[c].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !field.is_zero(&row[c]) {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(pivot.iter()) {
                    *x = field.sub(x, &field.mul(&f, y));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn identity(field: FieldSpec, n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}

pub fn mat_mul(field: FieldSpec, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = field.zero();
                    for t in 0..inner {
                        if !field.is_zero(&row[t]) && !field.is_zero(&b[t][j]) {
                            s = field.add(&s, &field.mul(&row[t], &b[t][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(field: FieldSpec, a: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            let mut s = field.zero();
            for (x, y) in row.iter().zip(v.iter()) {
                if !field.is_zero(x) && !field.is_zero(y) {
                    s = field.add(&s, &field.mul(x, y));
                }
            }
            s
        })
        .collect()
}

/// Seeded random invertible matrix with small integer entries.
pub fn random_invertible<R: rand::Rng>(field: FieldSpec, n: usize, rng: &mut R, bound: i64) -> Matrix {
    loop {
        let m: Matrix = (0..n).map(|_| (0..n).map(|_| field.random_small(rng, bound)).collect()).collect();
        if determinant(field, &m).is_some_and(|d| !field.is_zero(&d)) {
            return m;
        }
    }
}
