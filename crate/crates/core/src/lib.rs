//! Exact engine for graded Leinster monoids: Δ₀ combinatorics, bar and cobar
//! complexes, the modified Eilenberg–Zilber shuffle map, the B∞ structure on
//! the cobar construction and the resulting A∞ morphism, with verifiers for
//! every identity.

pub mod a_infinity;
pub mod b_infinity;
pub mod bar_cobar;
pub mod delta0;
pub mod dg_core;
pub mod em_map;
pub mod exact_linear;
pub mod leinster;
pub mod report;

pub use a_infinity::{yoneda_morphism, YonedaMorphism};
pub use b_infinity::{verify_b_infinity, BInfinityReport, BInfinityWindow, BraceSigns};
pub use bar_cobar::{BarComplex, Cobar, Word};
pub use delta0::{Delta0Error, Delta0Morphism, DeltaMorphism};
pub use dg_core::{DgAlgebra, DgBialgebra, DgCoalgebra, DgError};
pub use em_map::EmMap;
pub use exact_linear::{int, sign, FiniteComplex, LinearError, LinearMap, Scalar, SparseVector};
pub use leinster::{AlgebraMonoid, LeinsterMonoid, SharedMonoid};
pub use report::{CheckReport, Status};
