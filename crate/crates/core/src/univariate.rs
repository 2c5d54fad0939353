//! Dense univariate polynomials and root finding over the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{is_prime_u64, FieldSpec, Scalar};

/// Coefficients in increasing degree, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl Dense {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Dense {
        let mut d = Dense { field, coeffs };
        d.trim();
        d
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn x_minus(field: FieldSpec, c: &Scalar) -> Dense {
        Dense::new(field, vec![field.neg(c), field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Dense {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lead());
        Dense::new(self.field, self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect())
    }

    pub fn sub(&self, other: &Dense) -> Dense {
        let k = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = k.zero();
        let c = (0..n)
            .map(|i| k.sub(self.coeffs.get(i).unwrap_or(&zero), other.coeffs.get(i).unwrap_or(&zero)))
            .collect();
        Dense::new(k, c)
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        if self.is_zero() || other.is_zero() {
            return Dense::new(self.field, Vec::new());
        }
        let k = self.field;
        let mut c = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = k.add(&c[i + j], &k.mul(a, b));
            }
        }
        Dense::new(k, c)
    }

    pub fn div_rem(&self, d: &Dense) -> (Dense, Dense) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let k = self.field;
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        if r.len() < dl {
            return (Dense::new(k, Vec::new()), self.clone());
        }
        let inv = k.inv(&d.lead());
        let mut q = vec![k.zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let c = k.mul(&r[i + dl - 1], &inv);
            if k.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = k.sub(&r[i + j], &k.mul(&c, dc));
            }
            q[i] = c;
        }
        (Dense::new(k, q), Dense::new(k, r))
    }

    pub fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Dense {
        let k = self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| k.mul(&k.from_i64(i as i64), c)).collect();
        Dense::new(k, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let k = self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Dense) -> Dense {
        let mut base = self.div_rem(m).1;
        let mut acc = Dense::new(self.field, vec![self.field.one()]).div_rem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).div_rem(m).1;
            }
            base = base.mul(&base).div_rem(m).1;
            e >>= 1;
        }
        acc
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity(&self, c: &Scalar) -> usize {
        let lin = Dense::x_minus(self.field, c);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }
}

/// Distinct roots of a split squarefree polynomial over a prime field (Cantor–Zassenhaus).
fn split_prime(g: &Dense, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    let k = g.field;
    let p = k.characteristic();
    match g.degree() {
        0 => {}
        1 => {
            let g = g.monic();
            out.push(k.neg(&g.coeffs[0]));
        }
        _ => loop {
            let a = k.from_i64(rng.gen_range(0..p) as i64);
            let base = Dense::new(k, vec![a, k.one()]);
            let h = base.pow_mod((p - 1) / 2, g).sub(&Dense::new(k, vec![k.one()]));
            let f = g.gcd(&h);
            if f.degree() > 0 && f.degree() < g.degree() {
                let rest = g.div_rem(&f).0;
                split_prime(&f, rng, out);
                split_prime(&rest, rng, out);
                return;
            }
        },
    }
}

/// Distinct roots in a prime field.
fn distinct_roots_prime(f: &Dense) -> Vec<Scalar> {
    let k = f.field;
    let f = f.monic();
    if f.degree() == 0 {
        return Vec::new();
    }
    let x = Dense::new(k, vec![k.zero(), k.one()]);
    let xp = x.pow_mod(k.characteristic(), &f);
    let linear_part = f.gcd(&xp.sub(&x));
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_prime(&linear_part, &mut rng, &mut out);
    out
}

/// Smallest `a/b` congruent to `r` mod `m` with both parts below `sqrt(m/2)`.
fn rational_reconstruction(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Distinct rational roots: roots modulo a large prime, Newton lifting, rational reconstruction,
/// and exact verification.
fn distinct_roots_rational(f: &Dense) -> Vec<Scalar> {
    let q = f.field;
    let g = {
        let d = f.gcd(&f.derivative());
        f.div_rem(&d).0.monic()
    };
    if g.degree() == 0 {
        return Vec::new();
    }
    // Clear denominators into a primitive integer polynomial.
    let rats: Vec<BigRational> = g.coeffs.iter().map(|c| q.to_rational(c)).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let lc = ints.last().unwrap().abs();
    let a0 = ints.iter().find(|c| !c.is_zero()).unwrap().abs();
    let big = if lc > a0 { lc } else { a0 };
    let needed = BigInt::from(2) * &big * &big + BigInt::one();

    let mut p = (1u64 << 61) - 1;
    let (field, roots) = loop {
        if is_prime_u64(p) {
            let k = FieldSpec::prime(p).expect("large prime");
            let image = Dense::new(k, ints.iter().map(|c| k.from_bigint(c)).collect());
            if image.degree() == g.degree() && image.gcd(&image.derivative()).degree() == 0 {
                break (k, distinct_roots_prime(&image));
            }
        }
        p -= 2;
    };
    let pb = BigInt::from(field.characteristic());
    let eval = |x: &BigInt, m: &BigInt, coeffs: &[BigInt]| -> BigInt {
        coeffs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
    };
    let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let mut out = Vec::new();
    for r in roots {
        let mut x = field.to_rational(&r).numer().mod_floor(&pb);
        let mut m = pb.clone();
        while m <= needed {
            m = &m * &m;
            let fx = eval(&x, &m, &ints);
            let dfx = eval(&x, &m, &deriv);
            let inv = mod_inverse(&dfx, &m).expect("simple root stays simple");
            x = (&x - fx * inv).mod_floor(&m);
        }
        if let Some(cand) = rational_reconstruction(&x, &m) {
            let s = q.from_rational(&cand).unwrap();
            if q.is_zero(&f.eval(&s)) {
                out.push(s);
            }
        }
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Roots with multiplicities, or `None` if the polynomial does not split into linear factors over the field.
pub fn split_roots(f: &Dense) -> Option<Vec<(Scalar, usize)>> {
    let k = f.field;
    if f.is_zero() {
        return None;
    }
    let distinct = if k.is_rational() { distinct_roots_rational(f) } else { distinct_roots_prime(f) };
    let mut roots: Vec<(Scalar, usize)> = distinct.into_iter().map(|r| {
        let m = f.root_multiplicity(&r);
        (r, m)
    }).collect();
    roots.sort_by(|a, b| k.canonical_cmp(&a.0, &b.0));
    let total: usize = roots.iter().map(|r| r.1).sum();
    (total == f.degree()).then_some(roots)
}

/// Integer value of a small rational, if it is one.
pub fn small_integer(k: FieldSpec, s: &Scalar) -> Option<i64> {
    let r = k.to_rational(s);
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}
