//! Fixtures shared by the benchmarks under `benches/`.

use std::sync::Arc;

use leinster_core::dg_core::AlgebraBuilder;
use leinster_core::leinster::from_dg_algebra;
use leinster_core::{DgAlgebra, SharedMonoid};

/// Dual numbers ℚ[x]/(x²) with deg x = 0.
pub fn dual_numbers() -> DgAlgebra {
    AlgebraBuilder::new().element("1", 0).unit("1").element("x", 0).build().expect("fixture")
}

/// Exterior algebra Λ(ξ) with deg ξ = 1.
pub fn exterior() -> DgAlgebra {
    AlgebraBuilder::new().element("1", 0).unit("1").element("ξ", 1).build().expect("fixture")
}

pub fn monoid(algebra: DgAlgebra, max_weight: usize) -> SharedMonoid {
    Arc::new(from_dg_algebra(algebra, max_weight).expect("unital"))
}
