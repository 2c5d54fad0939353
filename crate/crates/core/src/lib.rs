//! Exact computations with zero-dimensional Gorenstein schemes and Artinian algebras.

pub mod artinian;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod families;
pub mod field;
pub mod geometry;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod label;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod points;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod univariate;

pub use artinian::{classify, ArtinianReport};
pub use error::{Error, Result};
pub use field::{FieldKind, FieldSpec, Scalar};
pub use groebner::{buchberger, GroebnerBasis, StandardMonomialBasis};
pub use ideal::{ring_map_kernel, Ideal};
pub use label::{AlgebraLabel, Atom};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_polys};
pub use poly::Polynomial;
pub use quotient::QuotientAlgebra;
pub use ring::{PolyRing, Ring};
