//! Finite topological spaces: construction from open families, minimal
//! neighbourhoods or preorders, the standard operators, separation and
//! dimension properties, maps and multifunctions, interval quotients of
//! `[0, 1]`, and enumeration up to homeomorphism.
//!
//! Points are indices `0..n` with `n <= 64`; subsets are [`PointSet`] bitmasks.

pub mod enumeration;
pub mod error;
pub mod format;
pub mod hasse;
pub mod maps;
pub mod operators;
pub mod pointset;
pub mod properties;
pub mod quotient;
pub mod space;

pub use enumeration::{canonical_form, enumerate_classes, enumerate_labeled, CanonicalForm, TopologyClass};
pub use error::{Error, Result};
pub use format::{parse_space, write_space, FormatError, Style, SyntaxError};
pub use hasse::hasse_dot;
pub use maps::{Multifunction, PointFunction};
pub use operators::SetClassification;
pub use pointset::{PointSet, MAX_POINTS};
pub use properties::SpaceReport;
pub use quotient::{CotsQuotient, PiecewiseLinear, QuotientError, Rational};
pub use space::{OpenFamily, Preorder, Space};
