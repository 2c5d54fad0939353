//! One-parameter degenerations between classes of degree 6.

use std::collections::HashMap;

use crate::artinian::classify;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::geometry::affine_chart;
use crate::ideal::Ideal;
use crate::label::AlgebraLabel;
use crate::parse::parse_polys;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

/// Name of the parameter variable of every family ring.
pub const PARAMETER_VAR: &str = "b";

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: String,
    /// `k[b, x...]`, with `b` first.
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    /// Parameter values with the class of their fiber.
    pub fibers: Vec<(i64, AlgebraLabel)>,
    /// Fibers are homogeneous ideals of schemes in projective space; they are classified on an affine chart.
    pub projective: bool,
    /// Some listed fiber has support involving a square root of -1.
    pub needs_sqrt_minus_one: bool,
}

impl FamilySpec {
    pub fn fiber_ring(&self) -> Result<Ring> {
        self.ring.without_var(0)
    }
}

/// Substitutes `b = b0`; the result lives in the ring without `b`.
pub fn family_fiber(family: &FamilySpec, b0: &Scalar) -> Result<Ideal> {
    let target = family.fiber_ring()?;
    let mut map = HashMap::new();
    map.insert(PARAMETER_VAR.to_string(), Polynomial::constant(&target, b0.clone()));
    Ideal::new(&target, family.generators.iter().map(|g| g.substitute(&map, &target)).collect::<Result<Vec<_>>>()?)
}

/// Class of the fiber over `b0`.
pub fn classify_fiber(family: &FamilySpec, b0: &Scalar) -> Result<AlgebraLabel> {
    let fiber = family_fiber(family, b0)?;
    if family.projective {
        classify(&affine_chart(&fiber)?)
    } else {
        classify(&fiber)
    }
}

struct Raw {
    name: &'static str,
    vars: &'static [&'static str],
    gens: &'static [&'static str],
    fibers: &'static [(i64, &'static str)],
    projective: bool,
    needs_i: bool,
}

const FAMILIES: &[Raw] = &[
    Raw {
        name: "a16-to-six-points",
        vars: &["x"],
        gens: &["x*(x - b)*(x - 2*b)*(x - 3*b)*(x - 4*b)*(x - 5*b)"],
        fibers: &[(0, "A1,6"), (1, "6*A0,1")],
        projective: false,
        needs_i: false,
    },
    Raw {
        name: "a24-2a01-to-a12-4a01",
        vars: &["x1", "x2"],
        gens: &["x2^2 - x1^2 - x2^4 + b*x1^6", "x1^3 - b*x1^7", "x1*x2", "b*x2"],
        fibers: &[(0, "A2,4 + 2*A0,1"), (1, "A1,2 + 4*A0,1")],
        projective: false,
        needs_i: true,
    },
    Raw {
        name: "a26-to-a24-2a01",
        vars: &["x1", "x2"],
        gens: &["x1*x2", "x1^4 + x1^2*b^2 - x2^2", "x2^3"],
        fibers: &[(0, "A2,6"), (1, "A2,4 + 2*A0,1")],
        projective: false,
        needs_i: true,
    },
    Raw {
        name: "a26-to-a24-a12",
        vars: &["x1", "x2"],
        gens: &["x1*x2", "x2^2 - x1^2*(x1 - b)^2"],
        fibers: &[(0, "A2,6"), (1, "A2,4 + A1,2")],
        projective: false,
        needs_i: false,
    },
    Raw {
        name: "a26-to-a25-a01",
        vars: &["x1", "x2"],
        gens: &["x1*x2", "x2^2 - b*x1^3 + x1^4"],
        fibers: &[(0, "A2,6"), (1, "A2,5 + A0,1")],
        projective: false,
        needs_i: false,
    },
    Raw {
        name: "a36-to-a35-a01",
        vars: &["x1", "x2", "x3"],
        gens: &["x1*x2", "x1*x3", "x2*x3", "x2^2 - x3^2", "x3^2 - b*x1^2 - x1^3"],
        fibers: &[(0, "A3,6"), (1, "A3,5 + A0,1")],
        projective: false,
        needs_i: false,
    },
    Raw {
        name: "g6-to-a35-a01",
        vars: &["x0", "x1", "x2", "x3", "x4"],
        gens: &[
            "x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x2^2 - x1^2", "x3^2 - x1^2", "x4^2 - x1^2 + b*x0*x4",
        ],
        fibers: &[(0, "A4,6"), (1, "A3,5 + A0,1")],
        projective: true,
        needs_i: false,
    },
];

pub fn families(field: FieldSpec) -> Result<Vec<FamilySpec>> {
    FAMILIES
        .iter()
        .map(|raw| {
            let mut names = vec![PARAMETER_VAR];
            names.extend_from_slice(raw.vars);
            let ring = PolyRing::with_vars(field, &names)?;
            Ok(FamilySpec {
                name: raw.name.to_string(),
                generators: parse_polys(&ring, raw.gens)?,
                ring,
                fibers: raw.fibers.iter().map(|(b, l)| Ok((*b, l.parse()?))).collect::<Result<Vec<_>>>()?,
                projective: raw.projective,
                needs_sqrt_minus_one: raw.needs_i,
            })
        })
        .collect()
}

pub fn family(field: FieldSpec, name: &str) -> Result<FamilySpec> {
    families(field)?
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown family '{name}'")))
}
