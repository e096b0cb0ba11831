//! Exact symbolic engine for refined torus-knot invariants.
//!
//! The crate computes the three-variable superpolynomials of (n,m) torus
//! knots by independent routes and cross-checks them:
//!
//! * weighted sums over standard Young tableaux (chains of box removals
//!   carrying (q,t)-weights),
//! * sums over Tesler matrices with prescribed hook sums,
//! * combinatorial models: rational Dyck paths, parking functions, and
//!   m-stable affine permutations.
//!
//! Everything is computed exactly over Q(q,t) (with u adjoined as a
//! polynomial variable), so agreement between routes is literal equality
//! of canonical forms, never numerical closeness.
//!
//! Module map:
//!
//! * [`algebra`] — arbitrary-precision rationals, sparse Laurent
//!   polynomials in q, t, u, and the reduced fraction field Q(q,t).
//! * [`young`] — partitions, hook statistics, box weights, and standard
//!   tableaux as box-addition chains.
//! * [`symfunc`] — symmetric functions over Q(q,t): basis conversions,
//!   Hall/Macdonald inner products, Macdonald P/J and modified Macdonald
//!   polynomials, plethystic maps, the nabla operator, and principal
//!   evaluation.
//! * [`knots`] — the graded operator calculus on the modified Macdonald
//!   basis and every route to the superpolynomials, including colored
//!   invariants and duality.
//! * [`models`] — Dyck paths, q,t-Catalan and Schroeder sums, parking
//!   functions with the dinv statistic, the Hikita symmetric function,
//!   and affine permutation cells.

pub mod algebra;
pub mod knots;
pub mod models;
pub mod symfunc;
pub mod young;

pub use algebra::{AlgebraError, Laurent, Mono, RatQt, Substitution, UPoly};
pub use symfunc::{Basis, PlethysticMap, SymFunc, SymFuncError};
pub use young::{BoxStats, Partition, Tableau, YoungError};
