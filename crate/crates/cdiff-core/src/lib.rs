//! Exact c-differential analysis of functions over small finite fields.
//!
//! Everything here works on explicit lookup tables over an explicit
//! `F_{p^n}`, with element encodings being base-`p` digit integers in
//! `[0, p^n)`. Decisions are made in exact integer arithmetic only;
//! floating point appears solely in human-readable magnitude displays.

pub mod affine;
pub mod conway;
pub mod corpus;
pub mod ddt;
mod error;
pub mod field;
pub mod func;
pub mod methods;
mod par;
pub mod pcn;
pub mod quadratic;
pub mod reference;
pub mod shifts;
pub mod spectral;
pub mod subspace;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldSpec};
pub use func::{AffineMap, FnRepr, LinearizedPoly, Lut};

