//! Self-conjugate partitions and their partners with distinct odd parts:
//! hook lengths by diagram walk and by closed formula, t-core decision
//! procedures, exact Hurwitz class numbers with the resulting 2-, 3-, and
//! 7-core counts, and the supernorm bijection with the positive integers.
//!
//! Everything is exact arithmetic over immutable values; the crate is
//! `no_std` (with `alloc`).

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod classnumbers;
pub mod enumeration;
mod error;
pub mod hooks;
pub mod partition;
pub mod supernorm;

pub use error::Error;
pub use hooks::{HookTable, TCoreWitness};
pub use partition::{DistinctOddPartition, FrequencyForm, Partition};
