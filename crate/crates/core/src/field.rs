//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime for fast runs; `-1` is a square modulo it.
pub const DEFAULT_PRIME: u64 = 65537;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// A coefficient field. Characteristics 2 and 3 are refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u64,
}

/// An exact field element. The variant always matches the field it was made in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { kind: FieldKind::Rationals, characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 || p == 3 {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        if p >= (1u64 << 62) || !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec { kind: FieldKind::PrimeField, characteristic: p })
    }

    pub fn default_prime() -> Self {
        FieldSpec { kind: FieldKind::PrimeField, characteristic: DEFAULT_PRIME }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.kind == FieldKind::Rationals
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::zero()),
            FieldKind::PrimeField => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::one()),
            FieldKind::PrimeField => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldKind::PrimeField => {
                let p = self.characteristic as i128;
                Scalar::Residue((v as i128).rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldKind::PrimeField => Scalar::Residue(bigint_mod(v, self.characteristic)),
        }
    }

    /// Maps a rational number into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self.kind {
            FieldKind::Rationals => Ok(Scalar::Rational(v.clone())),
            FieldKind::PrimeField => {
                let den = bigint_mod(v.denom(), self.characteristic);
                if den == 0 {
                    return Err(Error::InvalidInput(format!(
                        "denominator of {v} vanishes modulo {}",
                        self.characteristic
                    )));
                }
                let num = Scalar::Residue(bigint_mod(v.numer(), self.characteristic));
                Ok(self.mul(&num, &self.inv(&Scalar::Residue(den))))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let s = x + y;
                let p = self.characteristic;
                Scalar::Residue(if s >= p { s - p } else { s })
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                let p = self.characteristic;
                Scalar::Residue(if x >= y { x - y } else { x + p - y })
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Residue(x) => Scalar::Residue(if *x == 0 { 0 } else { self.characteristic - x }),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(mul_mod(*x, *y, self.characteristic)),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn checked_inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match a {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Residue(x) => {
                let p = self.characteristic;
                Scalar::Residue(pow_mod(*x, p - 2, p))
            }
        })
    }

    /// Inverse of a nonzero element; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        self.checked_inv(a).expect("division by zero")
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// A square root when one exists in the field (Tonelli–Shanks for `F_p`).
    pub fn sqrt(&self, a: &Scalar) -> Option<Scalar> {
        match a {
            Scalar::Rational(x) => {
                if x.is_negative() {
                    return None;
                }
                let n = x.numer().sqrt();
                let d = x.denom().sqrt();
                if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
                    Some(Scalar::Rational(BigRational::new(n, d)))
                } else {
                    None
                }
            }
            Scalar::Residue(v) => tonelli_shanks(*v, self.characteristic).map(Scalar::Residue),
        }
    }

    /// `√−1` if the field contains it.
    pub fn sqrt_minus_one(&self) -> Option<Scalar> {
        self.sqrt(&self.from_i64(-1))
    }

    /// A uniformly random integer in `[-bound, bound]` mapped into the field.
    pub fn random_small<R: Rng>(&self, rng: &mut R, bound: i64) -> Scalar {
        self.from_i64(rng.gen_range(-bound..=bound))
    }

    /// Total order used only to make outputs deterministic.
    pub fn canonical_cmp(&self, a: &Scalar, b: &Scalar) -> Ordering {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
            (Scalar::Residue(x), Scalar::Residue(y)) => x.cmp(y),
            _ => panic!("scalars from different fields"),
        }
    }

    /// Symmetric integer representative for residues, the value itself for rationals.
    pub fn to_rational(&self, a: &Scalar) -> BigRational {
        match a {
            Scalar::Rational(x) => x.clone(),
            Scalar::Residue(v) => {
                let p = self.characteristic;
                let signed = if *v > p / 2 { *v as i128 - p as i128 } else { *v as i128 };
                BigRational::from_integer(BigInt::from(signed))
            }
        }
    }

    pub fn to_i64(&self, a: &Scalar) -> Option<i64> {
        let r = self.to_rational(a);
        if r.is_integer() {
            r.numer().to_i64()
        } else {
            None
        }
    }

    /// Parses an integer or a fraction `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, text),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse { message: format!("invalid number '{text}'"), position: 0 });
            }
            Ok(s.parse::<BigInt>().expect("digits"))
        };
        let value = match body.split_once('/') {
            Some((n, d)) => {
                let n = parse_int(n.trim())?;
                let d = parse_int(d.trim())?;
                if d.is_zero() {
                    return Err(Error::Parse { message: "zero denominator".into(), position: 0 });
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(parse_int(body)?),
        };
        let value = if neg { -value } else { value };
        self.from_rational(&value)
    }

    pub fn display(&self, a: &Scalar) -> String {
        self.to_rational(a).to_string()
    }

    pub fn name(&self) -> String {
        match self.kind {
            FieldKind::Rationals => "QQ".to_string(),
            FieldKind::PrimeField => format!("Fp({})", self.characteristic),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

/// Sign of a rational, used when printing coefficients.
pub(crate) fn rational_is_negative(r: &BigRational) -> bool {
    r.numer().sign() == Sign::Minus
}
