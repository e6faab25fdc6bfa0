//! Garside structures on braid and dihedral Artin groups and table-presented
//! monoids: normal forms, valuations, removable pairs and word reversing.

pub mod context;
pub mod disks;
pub mod element;
pub mod error;
pub mod oracle;
pub mod reversing;
pub mod table_file;
pub mod valuation;
pub mod words;

pub use context::{ContextKind, ContextSpec, GarsideContext, Side, Simple, SimpleRepr};
pub use element::{GroupElement, PositiveElement};
pub use error::{GarsideError, Result};
pub use table_file::TableFile;
pub use words::{Letter, Syntax, Transformed, Word};
