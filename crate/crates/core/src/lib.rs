//! Tropical Fock-Goncharov coordinates for SL3 non-elliptic webs on
//! ideally triangulated punctured surfaces.
//!
//! The crate realizes the bijection between parallel-equivalence classes of
//! non-elliptic webs and integer points of the Knutson-Tao cone:
//!
//! - [`surface`]: triangulations and the dot indexing of coordinates.
//! - [`localweb`]: honeycombs and corner arcs in a single triangle.
//! - [`cone`]: rhombus numbers, cone membership and local decomposition.
//! - [`glue`]: ladder gluing, travelers, square removal and the inverse map.
//! - [`oracle`]: executable checks of the bijection.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cone;
pub mod error;
pub mod fixtures;
pub mod glue;
pub mod localweb;
pub mod oracle;
pub mod surface;

pub use cone::{GlobalConePoint, LocalConePoint, RhombusVector, Thirds};
pub use error::{Error, Result};
pub use glue::{reconstruct, GlobalWeb};
pub use localweb::{Honeycomb, HoneycombDir, Letter, LocalWebContent, StrandDir, TriangleWeb};
pub use surface::{DotIndexing, IdealTriangulation};
