//! Exact combinatorics for minuscule representations of classical Lie types,
//! Mumford-Tate pair decompositions, and the type classification of simple
//! adjoint Shimura pairs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dispatch_embed;
pub mod error;
pub mod lie_core;
pub mod mt_pairs;
pub mod nonspecial;
pub mod shimura_types;

pub use error::{Error, Result};
