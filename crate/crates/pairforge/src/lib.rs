//! Repeated-root cyclic codes over small finite fields, with exact minimum
//! Hamming and symbol-pair distance engines and Singleton-bound (MDS/AMDS)
//! certification of the constructed code families.

pub mod cli;
pub mod codec;
pub mod distance;
pub mod error;
pub mod families;
pub mod galois;
pub mod pairchannel;
pub mod pairmetric;
pub mod polyring;
mod symbols;

pub use error::{Error, Result};
