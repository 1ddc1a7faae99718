use std::collections::BTreeMap;
use std::sync::Arc;

use leinster_core::a_infinity::{check_shift_lemma, tuples, Cochain, GradedSpace};
use leinster_core::bar_cobar::{phi_counit, Cobar};
use leinster_core::delta0::{all_morphisms, compose};
use leinster_core::dg_core::AlgebraBuilder;
use leinster_core::exact_linear::{frac, int, sign};
use leinster_core::leinster::{act, from_dg_algebra, AlgebraMonoid, SharedMonoid};
use leinster_core::{DgAlgebra, SparseVector};
use proptest::prelude::*;

fn algebra(name: &str) -> DgAlgebra {
    let b = AlgebraBuilder::new().element("1", 0).unit("1");
    match name {
        "dual0" => b.element("x", 0),
        "ext1" => b.element("ξ", 1),
        "cone" => b.element("ε", -1).d("ε", "1", 1),
        "poly3" => b
            .element("x", 0)
            .element("x2", 0)
            .product("x", "x", &[("x2", 1)]),
        _ => b,
    }
    .build()
    .unwrap()
}

fn catalog_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["k", "dual0", "ext1", "cone", "poly3"])
}

fn small_vector(dim: usize) -> impl Strategy<Value = SparseVector<usize>> {
    prop::collection::vec((0..dim, -3i64..=3), 0..4).prop_map(|terms| terms.into_iter().map(|(k, c)| (k, int(c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sparse_vectors_form_a_module(u in small_vector(5), v in small_vector(5), p in -5i64..5, q in 1i64..5) {
        let c = frac(p, q);
        prop_assert_eq!(u.clone() + v.clone(), v.clone() + u.clone());
        prop_assert!((u.clone() - u.clone()).is_zero());
        let lhs = (u.clone() + v.clone()).scaled(&c);
        let rhs = u.scaled(&c) + v.scaled(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn morphism_action_matches_direct_formula(name in catalog_name(), m in 0usize..4, n in 0usize..4, pick in any::<prop::sample::Index>(), xi in any::<prop::sample::Index>()) {
        let x = AlgebraMonoid::new(algebra(name), 4).unwrap();
        let maps = all_morphisms(m, n);
        prop_assume!(!maps.is_empty());
        let f = pick.get(&maps);
        let dim = leinster_core::leinster::LeinsterMonoid::dim(&x, n);
        let el = xi.index(dim);
        prop_assert_eq!(act(&x, f, el), x.act_direct(f, el));
    }

    #[test]
    fn action_is_contravariant(name in catalog_name(), a in 0usize..4, b in 0usize..4, c in 0usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), xi in any::<prop::sample::Index>()) {
        let x = AlgebraMonoid::new(algebra(name), 4).unwrap();
        let (fs, gs) = (all_morphisms(a, b), all_morphisms(b, c));
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let (f, g) = (i.get(&fs), j.get(&gs));
        let gf = compose(g, f).unwrap();
        let el = xi.index(leinster_core::leinster::LeinsterMonoid::dim(&x, c));
        // (g ∘ f)^* = f^* ∘ g^*
        let lhs = act(&x, &gf, el);
        let rhs = act(&x, g, el).flat_map(|&y| act(&x, f, y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cobar_words_satisfy_leibniz(name in catalog_name(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let monoid: SharedMonoid = Arc::new(from_dg_algebra(algebra(name), 4).unwrap());
        let counit = phi_counit(monoid, 4).unwrap();
        let cb = counit.cobar();
        let words: Vec<_> = cb.words().into_iter().filter(|w| cb.weight(w) < cb.max_weight()).collect();
        let u = i.get(&words);
        let fitting: Vec<_> = words.iter().filter(|v| cb.weight(u) + cb.weight(v) <= cb.max_weight()).collect();
        let v = *j.get(&fitting);
        let uv = Cobar::concat(u, v);
        let lhs = cb.d(&uv);
        let bu = SparseVector::basis(u.clone());
        let bv = SparseVector::basis(v.clone());
        let rhs = cb.mul(&cb.d(u), &bv) + cb.mul(&bu, &cb.d(v)).signed(cb.degree(u));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(cb.d_vec(&cb.d(&uv)).is_zero());
    }

    #[test]
    fn shift_lemma_on_random_cochains(name in catalog_name(), k in 1usize..=4, degree in -2i64..=2, seed in prop::collection::vec(-2i64..=2, 64)) {
        let a = algebra(name);
        let space = GradedSpace::of_algebra(&a);
        let basis: Vec<usize> = (0..a.dim()).collect();
        let args = tuples(&basis, k, |_| true);
        let mut table = BTreeMap::new();
        let mut coeffs = seed.iter().cycle();
        for t in &args {
            let target: i64 = t.iter().map(|&x| a.degree(x)).sum::<i64>() + degree;
            let value: SparseVector<usize> = basis
                .iter()
                .filter(|&&b| a.degree(b) == target)
                .map(|&b| (b, int(*coeffs.next().unwrap())))
                .collect();
            table.insert(t.clone(), value);
        }
        let psi = Cochain::from_table(k, degree, table);
        let [literal, signed] = check_shift_lemma(&space, &psi, &args, |t| format!("{t:?}"));
        prop_assert!(signed.passed(), "{:?}", signed);
        if k % 2 == 1 {
            prop_assert!(literal.passed(), "{:?}", literal);
        }
    }

    #[test]
    fn sign_is_a_character(a in -20i64..20, b in -20i64..20) {
        prop_assert_eq!(sign(a) * sign(b), sign(a + b));
    }
}
