//! Enumeration, presentations and verification on top of the diagram algebra.

pub mod green;
pub mod monoid;
pub mod report;
pub mod todd_coxeter;
pub mod verify;

pub use green::{is_inverse_monoid, Green};
pub use monoid::{
    cardinality_oracle, enumerate_instar, enumerate_letters, factorizable_letters, froidure_pin,
    phi_letters, EnumeratedMonoid, DEFAULT_ELEMENT_CAP,
};
pub use report::{Report, Status};
pub use todd_coxeter::{todd_coxeter, CongruenceTable, DEFAULT_CLASS_CAP};
pub use verify::check_presentation;
