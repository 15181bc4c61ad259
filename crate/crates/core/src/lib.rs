//! Exact discrete difference calculus on finitely generated commutative
//! groups.
//!
//! The crate revolves around one quantity: the functional degree of a map
//! `f: A -> B` between commutative groups, the smallest `m` such that every
//! iterated forward difference of order `m + 1` annihilates `f`. Around it
//! sit:
//!
//! - [`group`]: groups as ordered moduli lists, elements, primary (Sylow)
//!   decomposition with explicit CRT maps;
//! - [`calculus`]: dense function tables, difference operators, brute-force
//!   total/partial degrees, and the finite/infinite classification;
//! - [`polyfract`]: the binomial-basis term representation (polyfracts),
//!   discrete Taylor interpolation, symbolic shifts, and periodicity;
//! - [`bounds`]: closed-form maximal-degree and nilpotency formulas plus
//!   the indicator-of-zero coefficients computed two independent ways;
//! - [`groupring`]: group-ring convolution and a nilpotency oracle that
//!   never consults the formulas it is checked against;
//! - [`format`](mod@format): the text formats for tables and polyfracts;
//! - [`sample`]: reproducible random generators for verification sweeps.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared or sent across threads freely.

pub mod bounds;
pub mod calculus;
pub mod error;
pub mod format;
pub mod group;
pub mod groupring;
pub mod polyfract;
pub mod sample;

mod arith;

pub use calculus::{all_maps, lagrange, Classification, Degree, DegreeReport, FunctionTable, Verdict};
pub use error::{Error, Result};
pub use group::{Group, GroupElement, PrimaryDecomposition};
pub use polyfract::{interpolate_table, monofract_value, MultiIndex, PeriodicPolyfract, Polyfract};
