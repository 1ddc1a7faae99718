//! Built-in example algebras with their known homology.

use std::collections::BTreeMap;

use leinster_core::dg_core::AlgebraBuilder;
use leinster_core::DgAlgebra;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Nonzero homology dimensions by degree.
    pub expected_homology: BTreeMap<i64, usize>,
    #[serde(skip)]
    build: fn() -> DgAlgebra,
}

impl CatalogEntry {
    pub fn algebra(&self) -> DgAlgebra {
        (self.build)()
    }
}

fn unital() -> AlgebraBuilder {
    AlgebraBuilder::new().element("1", 0).unit("1")
}

fn field() -> DgAlgebra {
    unital().build().expect("catalog algebra")
}

fn dual0() -> DgAlgebra {
    unital().element("x", 0).build().expect("catalog algebra")
}

fn ext1() -> DgAlgebra {
    unital().element("ξ", 1).build().expect("catalog algebra")
}

fn cone() -> DgAlgebra {
    unital().element("ε", -1).d("ε", "1", 1).build().expect("catalog algebra")
}

fn poly3() -> DgAlgebra {
    unital()
        .element("x", 0)
        .element("x2", 0)
        .product("x", "x", &[("x2", 1)])
        .build()
        .expect("catalog algebra")
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "k",
            description: "the ground field ℚ in degree 0",
            expected_homology: BTreeMap::from([(0, 1)]),
            build: field,
        },
        CatalogEntry {
            name: "dual0",
            description: "dual numbers ℚ[x]/(x²), deg x = 0",
            expected_homology: BTreeMap::from([(0, 2)]),
            build: dual0,
        },
        CatalogEntry {
            name: "ext1",
            description: "exterior algebra Λ(ξ), deg ξ = 1",
            expected_homology: BTreeMap::from([(0, 1), (1, 1)]),
            build: ext1,
        },
        CatalogEntry {
            name: "cone",
            description: "acyclic ℚ[ε]/(ε²), deg ε = -1, dε = 1",
            expected_homology: BTreeMap::new(),
            build: cone,
        },
        CatalogEntry {
            name: "poly3",
            description: "truncated polynomials ℚ[x]/(x³), deg x = 0",
            expected_homology: BTreeMap::from([(0, 3)]),
            build: poly3,
        },
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use leinster_core::dg_core::check_dg_algebra;
    use leinster_core::exact_linear::{nonzero_dims, FiniteComplex};

    use super::*;

    #[test]
    fn entries_are_valid_algebras_with_their_homology() {
        for e in catalog() {
            let a = e.algebra();
            assert!(check_dg_algebra(&a).iter().all(|r| r.passed()), "{}", e.name);
            let cx = FiniteComplex::new((0..a.dim()).map(|i| (i, a.degree(i))), |&i| a.d_basis(i).clone(), None).unwrap();
            assert_eq!(nonzero_dims(&cx.homology_dims().unwrap()), e.expected_homology, "{}", e.name);
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(find("ext1").unwrap().algebra().dim(), 2);
        assert!(find("nope").is_none());
    }
}
