//! Isomorphism classes of Artinian Gorenstein algebras of small degree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A local Artinian Gorenstein algebra up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `H = (1, n, 1, ..., 1)` of total degree `d`.
    A { n: usize, d: usize },
    /// Degree 6, `H = (1,2,2,1)`, with a square-zero element outside `M^2`.
    A1sp,
    /// Degree 6, `H = (1,2,2,1)`, without one.
    A2sp,
}

impl Atom {
    pub fn a(n: usize, d: usize) -> Result<Atom> {
        let ok = matches!((n, d), (0, 1) | (1, 2)) || (d >= 3 && n >= 1 && n + 2 <= d);
        if ok {
            Ok(Atom::A { n, d })
        } else {
            Err(Error::InvalidInput(format!("A{n},{d} is not realizable")))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Atom::A { d, .. } => *d,
            Atom::A1sp | Atom::A2sp => 6,
        }
    }

    /// Embedding dimension `n_1`.
    pub fn embedding_dim(&self) -> usize {
        match self {
            Atom::A { n, .. } => *n,
            Atom::A1sp | Atom::A2sp => 2,
        }
    }

    /// The Hilbert function of the maximal-ideal filtration.
    pub fn hilbert_fn(&self) -> Vec<usize> {
        match self {
            Atom::A { n: 0, .. } => vec![1],
            Atom::A { n, d } => {
                let mut h = vec![1, *n];
                h.extend(std::iter::repeat_n(1, d - n - 1));
                h
            }
            Atom::A1sp | Atom::A2sp => vec![1, 2, 2, 1],
        }
    }

    /// Sort key: larger pieces first.
    fn key(&self) -> (std::cmp::Reverse<usize>, std::cmp::Reverse<usize>, u8) {
        let tag = match self {
            Atom::A { .. } => 0,
            Atom::A1sp => 1,
            Atom::A2sp => 2,
        };
        (std::cmp::Reverse(self.degree()), std::cmp::Reverse(self.embedding_dim()), tag)
    }

    /// All local classes of degree at most `max_degree` (at most 6).
    pub fn all_up_to(max_degree: usize) -> Vec<Atom> {
        let mut out = Vec::new();
        for d in 1..=max_degree.min(6) {
            for n in 0..d {
                if let Ok(a) = Atom::a(n, d) {
                    out.push(a);
                }
            }
            if d == 6 {
                out.push(Atom::A1sp);
                out.push(Atom::A2sp);
            }
        }
        out.sort_by_key(|a| a.key());
        out
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::A { n, d } => write!(f, "A{n},{d}"),
            Atom::A1sp => f.write_str("A1sp"),
            Atom::A2sp => f.write_str("A2sp"),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Atom> {
        let s = s.trim();
        match s {
            "A1sp" => return Ok(Atom::A1sp),
            "A2sp" => return Ok(Atom::A2sp),
            _ => {}
        }
        let bad = || Error::InvalidInput(format!("unknown algebra label '{s}'"));
        let body = s.strip_prefix('A').ok_or_else(bad)?;
        let (n, d) = body.split_once(',').ok_or_else(bad)?;
        Atom::a(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?)
    }
}

/// A direct sum of local classes, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraLabel {
    summands: Vec<Atom>,
}

impl AlgebraLabel {
    pub fn new(mut summands: Vec<Atom>) -> AlgebraLabel {
        summands.sort_by_key(|a| a.key());
        AlgebraLabel { summands }
    }

    pub fn local(atom: Atom) -> AlgebraLabel {
        AlgebraLabel { summands: vec![atom] }
    }

    pub fn summands(&self) -> &[Atom] {
        &self.summands
    }

    pub fn degree(&self) -> usize {
        self.summands.iter().map(|a| a.degree()).sum()
    }

    pub fn is_local(&self) -> bool {
        self.summands.len() == 1
    }

    /// Removes one copy of `atom`, if present.
    pub fn without(&self, atom: Atom) -> Option<AlgebraLabel> {
        let pos = self.summands.iter().position(|a| *a == atom)?;
        let mut rest = self.summands.clone();
        rest.remove(pos);
        Some(AlgebraLabel { summands: rest })
    }

    /// All isomorphism classes of degree exactly `d` (at most 6).
    pub fn all_of_degree(d: usize) -> Vec<AlgebraLabel> {
        let atoms = Atom::all_up_to(d);
        let mut out = Vec::new();
        fn rec(atoms: &[Atom], start: usize, left: usize, acc: &mut Vec<Atom>, out: &mut Vec<AlgebraLabel>) {
            if left == 0 {
                out.push(AlgebraLabel::new(acc.clone()));
                return;
            }
            for i in start..atoms.len() {
                if atoms[i].degree() <= left {
                    acc.push(atoms[i]);
                    rec(atoms, i, left - atoms[i].degree(), acc, out);
                    acc.pop();
                }
            }
        }
        rec(&atoms, 0, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.summands.len() {
            let a = self.summands[i];
            let mut j = i;
            while j < self.summands.len() && self.summands[j] == a {
                j += 1;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j - i {
                1 => write!(f, "{a}")?,
                m => write!(f, "{m}*{a}")?,
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for AlgebraLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<AlgebraLabel> {
        let mut atoms = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let (count, atom) = match part.split_once('*') {
                Some((c, a)) => (
                    c.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad multiplicity in '{part}'")))?,
                    a,
                ),
                None => (1, part),
            };
            let atom: Atom = atom.parse()?;
            atoms.extend(std::iter::repeat_n(atom, count));
        }
        Ok(AlgebraLabel::new(atoms))
    }
}

impl Serialize for AlgebraLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
