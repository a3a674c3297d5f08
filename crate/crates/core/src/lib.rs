//! Extremal point configurations for unit distances and diameters in
//! Euclidean space of dimension four and higher.
//!
//! The crate is organised bottom-up:
//!
//! * [`geom`]: points, tolerances, distance graphs, sphere fitting and
//!   orthogonality checks, graph searches.
//! * [`formulas`]: Turán numbers, closed-form maxima of unit distances and
//!   diameters, and the discrete partition optimisers behind them.
//! * [`constructions`]: generators for circle, sphere and Lenz
//!   configurations, including the root-finding sphere construction.
//! * [`verify`]: independent recounts, Lenz structure detection and the
//!   invariant suite.
//! * [`io`] and [`cli`]: the `pointconfig/1` file format and the command
//!   line front end.
//!
//! ```
//! use lenzkit::constructions::lenz_even_unit;
//! use lenzkit::formulas::unit_formula_even;
//!
//! let report = lenz_even_unit(6, 24).unwrap();
//! assert_eq!(report.achieved_count, 216);
//! assert_eq!(unit_formula_even(6, 24).unwrap().value, 216);
//! ```

pub mod cli;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod geom;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
