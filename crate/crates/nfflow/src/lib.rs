//! Exact optimization over pseudo-polynomial network-flow models with
//! strong linear relaxations.
//!
//! The solver works on an acyclic decision network whose source-sink paths
//! are the columns of a covering-style master problem. Around that core it
//! combines:
//!
//! * column(-and-row) generation for the path-flow and arc-flow views of
//!   the master, driven by a multi-path shortest-path oracle
//!   ([`colgen`]);
//! * safe dual bounds obtained by rounding LP duals onto an exact grid and
//!   re-verifying feasibility with integer arithmetic ([`colgen::safe_round`]);
//! * reduced-cost variable fixing with three dual-search strategies
//!   ([`rcvf`]);
//! * an asymmetric branching scheme over arc families whose left branches
//!   are finished off by a bundled MILP branch-and-bound ([`branching`],
//!   [`milp`]);
//! * problem adapters, generators, and brute-force oracles for the cutting
//!   stock problem and the ordered open-end bin packing problem
//!   ([`problems`]).
//!
//! Everything is self-contained: the LP relaxations are solved by the
//! bundled bounded revised simplex in [`lp`], so no external solver is
//! needed.
//!
//! ```
//! use nfflow::problems::{parse_instance, Format, Problem};
//!
//! let inst = parse_instance("2\n6\n4 1\n3 2\n", Format::Csp).unwrap();
//! let Problem::Csp(csp) = inst else { unreachable!() };
//! assert_eq!(csp.roll_width, 6);
//! assert_eq!(csp.items.len(), 2);
//! ```

pub mod branching;
pub mod colgen;
pub mod lp;
pub mod milp;
pub mod netcore;
pub mod problems;
pub mod rcvf;

#[cfg(doctest)]
mod book;

/// Dual-feasibility tolerance shared by the LP engine and the pricing
/// oracle; safe rounding snaps duals onto multiples of this grid.
pub const DUAL_EPS: f64 = 1e-9;

/// Integer scale of the dual grid: `1 / DUAL_EPS`.
pub const DUAL_SCALE: i64 = 1_000_000_000;
