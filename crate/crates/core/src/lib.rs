//! CMPP partitions for `k = 1`.
//!
//! The crate covers the diagram model (three grid variants plus the reflected
//! grid), the relative-height algorithm with folding, forward and backward moves,
//! base partitions, and the decomposition of an admissible partition into a base
//! partition and a vector partition. The [`qseries`] module builds the
//! multiple-series generating functions these objects are counted by, and
//! [`verify`] compares series coefficients against brute-force enumeration.
//!
//! ```
//! use cmpp::diagram::{DiagramConfig, Variant};
//! use cmpp::bijection::{base_partition, base_weight};
//! use cmpp::qseries::{HeightProfile, LinearFamily};
//!
//! let config = DiagramConfig::single(3, 2, Variant::Standard).unwrap();
//! let profile = HeightProfile::new(vec![2, 2, 2]);
//! let base = base_partition(&config, &profile).unwrap();
//! assert_eq!(base.magnitudes(), vec![1, 3, 6, 10, 15, 21]);
//! assert_eq!(base_weight(LinearFamily::Main, 3, 2, &profile).unwrap(), 56);
//! ```

pub mod bijection;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod heights;
pub mod qseries;
pub mod verify;

pub use error::{CmppError, Result};
