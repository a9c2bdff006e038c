//! Finite-field arithmetic and permutation-polynomial tooling: field
//! construction, polynomial and rational maps, multiplicative subgroup views,
//! the concrete families, bijection checking, and exhaustive searches.

pub mod error;
pub mod field;
mod prime_poly;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldDescriptor, FieldId};
pub mod cli;
pub mod families;
pub mod lemmas;
pub mod linear;
pub mod perm;
pub mod poly;
pub mod search;
pub mod views;
