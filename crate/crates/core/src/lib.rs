pub mod algebra;
pub mod dihedral;
pub mod duality;
pub mod error;
pub mod fields;
pub mod group;
pub mod ideals;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod quaternion;
pub mod verify;
pub mod weights;

pub use algebra::{Decomposition, Metric};
pub use error::{Error, Result};
pub use fields::{Elem, Field, Subfield};
pub use group::Group;
