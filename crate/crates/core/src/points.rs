//! Ideals of finite sets of rational points.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Homogeneous ideal of a projective point, generated by `x_j P_p - x_p P_j`.
pub fn projective_point_ideal(ring: &Ring, p: &[Scalar]) -> Result<Ideal> {
    let k = ring.field();
    if p.len() != ring.nvars() {
        return Err(Error::InvalidInput(format!("point needs {} coordinates", ring.nvars())));
    }
    let pivot = p.iter().position(|c| !k.is_zero(c)).ok_or_else(|| Error::InvalidInput("zero vector is not a point".into()))?;
    let xp = Polynomial::var(ring, pivot);
    let gens = (0..ring.nvars())
        .filter(|&j| j != pivot)
        .map(|j| &Polynomial::var(ring, j).scale(&p[pivot]) - &xp.scale(&p[j]))
        .collect();
    Ideal::new(ring, gens)
}

/// Homogeneous ideal of a finite set of distinct projective points.
pub fn projective_points_ideal(ring: &Ring, points: &[Vec<Scalar>]) -> Result<Ideal> {
    let mut iter = points.iter();
    let first = iter.next().ok_or_else(|| Error::InvalidInput("no points".into()))?;
    let mut acc = projective_point_ideal(ring, first)?;
    for p in iter {
        acc = acc.intersect(&projective_point_ideal(ring, p)?)?;
    }
    Ok(acc)
}

/// Ideal of finitely many affine points.
pub fn affine_points_ideal(ring: &Ring, points: &[Vec<Scalar>]) -> Result<Ideal> {
    let mut iter = points.iter();
    let first = iter.next().ok_or_else(|| Error::InvalidInput("no points".into()))?;
    let mut acc = Ideal::of_point(ring, first);
    for p in iter {
        acc = acc.intersect(&Ideal::of_point(ring, p))?;
    }
    Ok(acc)
}

/// `count` seeded random projective points with small integer coordinates and nonzero first coordinate.
pub fn random_points(ring: &Ring, count: usize, seed: u64, bound: i64) -> Vec<Vec<Scalar>> {
    let k = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<Scalar>> = Vec::with_capacity(count);
    while out.len() < count {
        let mut p: Vec<Scalar> = (0..ring.nvars()).map(|_| k.random_small(&mut rng, bound)).collect();
        p[0] = k.one();
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
