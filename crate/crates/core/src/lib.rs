//! The dual symmetric inverse monoid: block bijections, words over its
//! generators, and machine checks of its presentation.
//!
//! ```
//! use instar::{BlockBijection, Word, phi_eval};
//!
//! let x = BlockBijection::gen_x(3).unwrap();
//! let xxx = phi_eval(&"x x x".parse::<Word>().unwrap(), 3).unwrap();
//! assert_eq!(xxx, x);
//! ```

pub mod blockbij;
pub mod cli;
pub mod engine;
pub mod error;
pub mod partitions;
mod union_find;
pub mod words;

pub use blockbij::{Block, BlockBijection};
pub use error::{Error, Result};
pub use partitions::{bell, enumerate_partitions, Partition};
pub use words::{phi_eval, Letter, Presentation, Relation, Word};
