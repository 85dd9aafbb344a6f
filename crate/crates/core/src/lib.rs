//! Exact tools for empty rainbow polygons in colored planar point sets.
//!
//! Coordinates are rationals throughout. Enumeration runs on an integer
//! rescaling of the input (see [`frame`]), so predicate results never depend
//! on rounding.

pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod frame;
pub mod geom;
pub mod horton;
pub mod io;
pub mod plot;
pub mod point_set;
pub mod random;
pub mod scalar;

pub use enumeration::{Budget, EnumerationReport};
pub use error::Error;
pub use geom::{orient, Orientation, Point};
pub use horton::{generate_horton, HortonSet};
pub use point_set::{Color, ColoredPointSet, PolygonWitness};
pub use scalar::Scalar;
