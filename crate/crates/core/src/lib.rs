//! Hom/Ext dimension tables, Ext-quivers, perpendicular categories and
//! thick-subcategory classification for nilpotent quiver representations,
//! serial categories (linear quivers and tubes) and coherent sheaves on
//! weighted projective lines.
//!
//! Module map:
//! - [`quiver`]: finite quivers, Ext-quivers, strong-generator and Serre predicates.
//! - [`nilrep`]: matrix-level nilpotent representations; the brute-force Hom/Ext oracle.
//! - [`serial`]: arcs in `A_n` and tubes `U_n`, perpendicular categories, thick subcategories.
//! - [`lgroup`]: the rank-one grading group of a weighted projective line.
//! - [`wpl`]: line bundles and torsion sheaves, twists, collections, classification.

pub mod error;
mod linalg;
pub mod nilrep;
pub mod quiver;
pub mod lgroup;
pub mod serial;
pub mod wpl;

pub use error::{Error, Result};
pub use linalg::Matrix;
