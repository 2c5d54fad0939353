//! Normal forms of the Artinian Gorenstein algebras of degree 6 and their projective models in P^4.

use serde::{Deserialize, Serialize};

use crate::artinian::ArtinianReport;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::ideal::Ideal;
use crate::io::IdealDoc;
use crate::label::{AlgebraLabel, Atom};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, Ring};

/// Catalog fixture, generated by `catalog(QQ)` and frozen.
pub const CATALOG_FIXTURE: &str = include_str!("../fixtures/catalog.json");
pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: AlgebraLabel,
    pub affine_model: Ideal,
    pub projective_model: Option<Ideal>,
    /// One report per summand, in label order.
    pub expected: Vec<ArtinianReport>,
}

/// Local normal form of `atom` at the origin, using the leading variables of `ring`.
pub fn local_model(ring: &Ring, atom: Atom) -> Result<Ideal> {
    let n = atom.embedding_dim();
    if n > ring.nvars() {
        return Err(Error::InvalidInput(format!("{atom} needs {n} variables")));
    }
    let x = |i: usize| Polynomial::var(ring, i);
    let mut gens: Vec<Polynomial> = (n..ring.nvars()).map(x).collect();
    match atom {
        Atom::A { n: 0, .. } => {}
        Atom::A { n, d } => {
            let top = x(0).pow((d - n) as u32);
            for i in 0..n {
                for j in i..n {
                    if (i, j) == (0, 0) {
                        continue;
                    }
                    let q = &x(i) * &x(j);
                    gens.push(if i == j { &q - &top } else { q });
                }
            }
            gens.push(x(0).pow((d - n + 1) as u32));
        }
        Atom::A1sp => gens.extend([x(1).pow(2), x(0).pow(3)]),
        Atom::A2sp => gens.extend([&x(1).pow(2) - &x(0).pow(2), x(0).pow(3)]),
    }
    Ideal::new(ring, gens)
}

/// Intersection of local normal forms, summand `i` moved to `placement[i]`.
pub fn model_ideal(ring: &Ring, label: &AlgebraLabel, placement: &[Vec<Scalar>]) -> Result<Ideal> {
    let atoms = label.summands();
    if placement.len() != atoms.len() {
        return Err(Error::InvalidInput(format!("{} placement points for {} summands", placement.len(), atoms.len())));
    }
    let k = ring.field();
    for (i, p) in placement.iter().enumerate() {
        if p.len() != ring.nvars() {
            return Err(Error::InvalidInput(format!("placement point needs {} coordinates", ring.nvars())));
        }
        if placement[..i].contains(p) {
            return Err(Error::InvalidInput("repeated placement point".into()));
        }
    }
    let mut acc: Option<Ideal> = None;
    for (atom, p) in atoms.iter().zip(placement) {
        let shift: Vec<Scalar> = p.iter().map(|c| k.neg(c)).collect();
        let piece = local_model(ring, *atom)?.translate(&shift);
        acc = Some(match acc {
            None => piece,
            Some(a) => a.intersect(&piece)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidInput("empty label".into()))
}

/// Number of variables used by the affine model of `label`.
pub fn model_nvars(label: &AlgebraLabel) -> usize {
    label.summands().iter().map(|a| a.embedding_dim()).max().unwrap_or(0).max(1)
}

/// Origin, then `e1, ..., en`, then `2e1, ..., 2en`, and so on.
pub fn default_placement(field: FieldSpec, nvars: usize, count: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![field.zero(); nvars]];
    let mut step = 1;
    while out.len() < count {
        for i in 0..nvars {
            if out.len() == count {
                break;
            }
            let mut p = vec![field.zero(); nvars];
            p[i] = field.from_i64(step);
            out.push(p);
        }
        step += 1;
    }
    out.truncate(count);
    out
}

/// The affine model in `k[x1..xn]` with the default placement.
pub fn affine_model(field: FieldSpec, label: &AlgebraLabel) -> Result<Ideal> {
    let n = model_nvars(label);
    let ring = PolyRing::indexed(field, "x", 1, n)?;
    model_ideal(&ring, label, &default_placement(field, n, label.summands().len()))
}

fn expected_reports(label: &AlgebraLabel) -> Vec<ArtinianReport> {
    label
        .summands()
        .iter()
        .map(|a| {
            let h = a.hilbert_fn();
            ArtinianReport {
                dim: a.degree(),
                level: h.len() - 1,
                hilbert_fn: h,
                socle_dim: 1,
                gorenstein: true,
                label: Some(AlgebraLabel::local(*a)),
            }
        })
        .collect()
}

/// Homogeneous ideals in `k[x0..x4]` of schemes of degree 6 in each listed class.
const PROJECTIVE_MODELS: &[(&str, &[&str])] = &[
    (
        "A1,6",
        &["x1*x2 - x0*x3", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2 - x0*x4", "x3^2", "x4^2"],
    ),
    (
        "A2,6",
        &["x1*x2 - x0*x3", "x1*x3 - x4^2", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2 - x4^2", "x3^2"],
    ),
    ("A3,6", &["x1*x2 - x4^2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2", "x3^2 - x4^2"]),
    ("A4,6", &["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x2^2 - x1^2", "x3^2 - x1^2", "x4^2 - x1^2"]),
    ("A1sp", &["x1*x2", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2", "x3^2", "x4^2"]),
    (
        "A2sp",
        &["x1*x2", "x1*x3 - x0*x4", "x1*x4 - x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2", "x3^2 - x0*x2", "x4^2"],
    ),
    (
        "A3,5 + A0,1",
        &["x0*x1", "x0*x2", "x0*x3", "x1*x2", "x1*x3", "x2*x3", "x1^2 - x0*x4", "x2^2 - x0*x4", "x3^2 - x0*x4"],
    ),
    (
        "A2,5 + A0,1",
        &["x1*x2", "x1*x3 - x0*x4", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x3", "x2^2 - x0*x4", "x3^2"],
    ),
    (
        "A1,5 + A0,1",
        &["x1*x2 - x0*x3", "x1*x3 - x0*x4", "x1*x4", "x2*x3", "x2*x4", "x3*x4", "x1^2 - x0*x2", "x2^2 - x0*x4", "x3^2"],
    ),
];

/// Labels with a listed projective model, in listing order.
pub fn projective_model_labels() -> Vec<AlgebraLabel> {
    PROJECTIVE_MODELS.iter().map(|(l, _)| l.parse().expect("catalog label")).collect()
}

pub fn projective_model(field: FieldSpec, label: &AlgebraLabel) -> Result<Option<Ideal>> {
    let Some((_, gens)) = PROJECTIVE_MODELS.iter().find(|(l, _)| l.parse::<AlgebraLabel>().ok().as_ref() == Some(label)) else {
        return Ok(None);
    };
    let ring = PolyRing::indexed(field, "x", 0, 5)?;
    Ideal::parse(&ring, gens).map(Some)
}

/// All 20 classes of degree 6.
pub fn catalog(field: FieldSpec) -> Result<Vec<CatalogEntry>> {
    AlgebraLabel::all_of_degree(6)
        .into_iter()
        .map(|label| {
            Ok(CatalogEntry {
                affine_model: affine_model(field, &label)?,
                projective_model: projective_model(field, &label)?,
                expected: expected_reports(&label),
                label,
            })
        })
        .collect()
}

pub fn find<'a>(entries: &'a [CatalogEntry], label: &AlgebraLabel) -> Option<&'a CatalogEntry> {
    entries.iter().find(|e| &e.label == label)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntryDoc {
    pub label: AlgebraLabel,
    pub affine_model: IdealDoc,
    pub projective_model: Option<IdealDoc>,
    pub expected: Vec<ArtinianReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub version: u32,
    pub entries: Vec<CatalogEntryDoc>,
}

impl CatalogDoc {
    pub fn from_entries(entries: &[CatalogEntry]) -> CatalogDoc {
        CatalogDoc {
            version: CATALOG_VERSION,
            entries: entries
                .iter()
                .map(|e| CatalogEntryDoc {
                    label: e.label.clone(),
                    affine_model: IdealDoc::from_ideal(&e.affine_model),
                    projective_model: e.projective_model.as_ref().map(IdealDoc::from_ideal),
                    expected: e.expected.clone(),
                })
                .collect(),
        }
    }

    pub fn entries(&self) -> Result<Vec<CatalogEntry>> {
        self.entries
            .iter()
            .map(|d| {
                Ok(CatalogEntry {
                    label: d.label.clone(),
                    affine_model: d.affine_model.to_ideal()?,
                    projective_model: d.projective_model.as_ref().map(|p| p.to_ideal()).transpose()?,
                    expected: d.expected.clone(),
                })
            })
            .collect()
    }
}

/// The catalog as shipped in the fixture file.
pub fn load_fixture() -> Result<Vec<CatalogEntry>> {
    let doc: CatalogDoc =
        serde_json::from_str(CATALOG_FIXTURE).map_err(|e| Error::InvalidInput(format!("catalog fixture: {e}")))?;
    if doc.version != CATALOG_VERSION {
        return Err(Error::InvalidInput(format!("catalog fixture version {}", doc.version)));
    }
    doc.entries()
}
