//! Suzuki groups Sz(q) on the Suzuki-Tits ovoid, the rank-three chamber
//! systems and coset geometries built from triangles of sub-ovoids, and
//! regular hypermaps of type (m,m,m), with machine checks of their
//! structure: flag transitivity, residual connectedness, thinness, diagram
//! labels, trialities and the absence of dualities.

pub mod chamber;
pub mod conjugacy;
pub mod error;
pub mod export;
pub mod geometry;
pub mod gf2m;
pub mod group;
pub mod hypermap;
pub mod ovoid;
pub mod report;
pub mod triality;

pub use error::{Error, Result};
pub use gf2m::{Field, FieldElement, FieldParams};
pub use group::{EnumeratedGroup, Fingerprint, GroupElement, GroupParams, Suzuki};
pub use ovoid::{Ovoid, OvoidPoint, PointId};
