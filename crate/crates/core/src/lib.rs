//! Tangent spaces to monomial points of Hilbert schemes of points in
//! affine space, computed from the combinatorics of staircases.
//!
//! The library is organized bottom-up:
//!
//! - [`ideal`], [`staircase`], [`families`]: artinian monomial ideals,
//!   their standard monomials, slice tables, fibers and socles, and the
//!   named families `m^r`, `E(d)` and `J(r, i)`.
//! - [`tangent`]: `dim T(I)` graded by `Z^n` and split by signature, plus
//!   closed forms and smoothness criteria.
//! - [`oracle`]: an independent computation of `dim Hom(I, S/J)` by linear
//!   algebra over a prime field.
//! - [`census`]: enumeration of strongly stable and of all artinian
//!   ideals, batch statistics, and the verification suite.
//! - [`cli`]: the `staircase` command-line front end.
//!
//! ```
//! use staircase::{families::power_ideal, tangent::tangent_report};
//!
//! let report = tangent_report(&power_ideal(3, 2)?)?;
//! assert_eq!(report.total, 18);
//! assert_eq!(report.sig("ppn"), 5);
//! # Ok::<(), staircase::Error>(())
//! ```

pub mod binomial;
pub mod census;
pub mod cli;
mod error;
pub mod exponent;
pub mod families;
pub mod ideal;
pub mod oracle;
pub mod staircase;
pub mod tangent;
pub mod text;

pub use error::{Error, Result};
pub use exponent::{Exponent, MultiDegree, Sign, Signature};
pub use ideal::{minimalize, MonomialIdeal};
