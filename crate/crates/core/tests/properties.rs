use moncoh::{
    delta_alpha, ext_via_taylor, stanley_reisner_complex, t_complex, tor_via_taylor, Engine,
    Monomial, MonomialIdeal, MultiDegree, PrimeField, Rationals, VarSet,
};
use proptest::prelude::*;

fn squarefree_ideal(max_vars: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        let full = (1u64 << n) - 1;
        proptest::collection::vec(1..=full, 1..=max_gens).prop_map(move |bits| {
            MonomialIdeal::squarefree(n, bits.into_iter().map(VarSet::from_bits)).unwrap()
        })
    })
}

fn ideal_and_degree(
    max_vars: usize,
    max_gens: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (MonomialIdeal, MultiDegree)> {
    squarefree_ideal(max_vars, max_gens).prop_flat_map(move |b| {
        let n = b.nvars();
        (
            Just(b),
            proptest::collection::vec(lo..=hi, n).prop_map(MultiDegree::new),
        )
    })
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(proptest::collection::vec(0u32..=2, n), 1..=3)
        .prop_filter_map("nonzero", move |gens| {
            MonomialIdeal::new(n, gens.into_iter().map(Monomial::new)).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(b in squarefree_ideal(6, 6)) {
        let dual = b.alexander_dual().unwrap();
        prop_assert!(dual.is_squarefree());
        prop_assert!(dual.alexander_dual().unwrap().same_ideal(&b));
    }

    #[test]
    fn complex_faces_are_complements_of_ideal_members(b in squarefree_ideal(6, 6)) {
        let n = b.nvars();
        let delta = stanley_reisner_complex(&b).unwrap();
        for f in VarSet::full(n).subsets() {
            prop_assert_eq!(delta.contains_face(f), b.contains_squarefree(f.complement(n)));
        }
        let mut nonfaces = delta.minimal_nonfaces();
        nonfaces.sort();
        let mut dual = b.alexander_dual().unwrap().supports();
        dual.sort();
        prop_assert_eq!(nonfaces, dual);
    }

    #[test]
    fn full_subcomplexes_grow_with_the_vertex_set(b in squarefree_ideal(5, 5), x in 0u64..32, y in 0u64..32) {
        let n = b.nvars();
        let full = VarSet::full(n).bits();
        let small = VarSet::from_bits(x & y & full);
        let large = VarSet::from_bits(x & full);
        let delta = stanley_reisner_complex(&b).unwrap();
        prop_assert!(delta.full_subcomplex(small).is_subcomplex_of(&delta.full_subcomplex(large)));
    }

    #[test]
    fn nerve_and_complex_agree((b, alpha) in ideal_and_degree(5, 5, -2, 1)) {
        let e = Engine::new(Rationals);
        let n = b.nvars() as i64;
        for i in 0..=n + 1 {
            prop_assert_eq!(e.lc_piece(&b, i, &alpha).unwrap().dim, e.lc_piece_via_t(&b, i, &alpha).unwrap().dim);
        }
        prop_assert_eq!(t_complex(&b, VarSet::EMPTY).unwrap().is_void(), true);
    }

    #[test]
    fn delta_alpha_is_void_exactly_for_nonnegative_degrees((b, alpha) in ideal_and_degree(5, 4, -2, 1)) {
        prop_assert_eq!(delta_alpha(&b, &alpha).unwrap().is_void(), alpha.is_at_least(0));
    }

    #[test]
    fn ext_clamps_at_minus_one((b, alpha) in ideal_and_degree(5, 4, -3, 1)) {
        let e = Engine::new(Rationals);
        for i in 0..=b.nvars() as i64 + 1 {
            let ext = e.ext_piece(&b, i, &alpha).unwrap().dim;
            let general = e.ext_piece_general(&b, i, &alpha).unwrap().dim;
            prop_assert_eq!(ext, general);
            if !alpha.is_at_least(-1) {
                prop_assert_eq!(ext, 0);
            }
        }
    }

    #[test]
    fn general_ext_matches_taylor(b in monomial_ideal(3), alpha in proptest::collection::vec(-4i64..=1, 3)) {
        let e = Engine::new(Rationals);
        let alpha = MultiDegree::new(alpha);
        for i in 0..=4 {
            prop_assert_eq!(
                e.ext_piece_general(&b, i, &alpha).unwrap().dim,
                ext_via_taylor(&Rationals, &b, 1, i, &alpha).unwrap()
            );
        }
    }

    #[test]
    fn tor_matches_hochster(b in squarefree_ideal(5, 5)) {
        let f = PrimeField::new(32003).unwrap();
        let e = Engine::new(f);
        let n = b.nvars();
        for s in VarSet::full(n).subsets() {
            let a = MultiDegree::indicator(n, s);
            for i in 0..=n as i64 {
                prop_assert_eq!(tor_via_taylor(&f, &b, i, &a).unwrap(), e.hochster_betti(&b, i, &a).unwrap());
            }
        }
    }

    #[test]
    fn small_complexes_have_no_torsion((b, alpha) in ideal_and_degree(5, 5, -1, 0)) {
        // torsion in reduced cohomology needs at least six vertices
        let q = Engine::new(Rationals);
        let f2 = Engine::new(PrimeField::new(2).unwrap());
        for i in 0..=b.nvars() as i64 + 1 {
            prop_assert_eq!(q.lc_piece(&b, i, &alpha).unwrap().dim, f2.lc_piece(&b, i, &alpha).unwrap().dim);
        }
    }

    #[test]
    fn euler_characteristic(b in squarefree_ideal(6, 6), x in 0u64..64) {
        let n = b.nvars();
        let set = VarSet::from_bits(x & VarSet::full(n).bits());
        let complex = stanley_reisner_complex(&b).unwrap().full_subcomplex(set);
        let e = Engine::new(Rationals);
        let homological: i64 = (-1..n as i64)
            .map(|q| (if q % 2 == 0 { 1 } else { -1 }) * e.reduced_cohomology(&complex, q).dim() as i64)
            .sum();
        let faces: i64 = (-1..n as i64)
            .map(|q| (if q % 2 == 0 { 1 } else { -1 }) * complex.faces_of_dim(q).len() as i64)
            .sum();
        prop_assert_eq!(homological, faces);
    }

    #[test]
    fn minimal_primes_match_betti_criterion(b in squarefree_ideal(5, 5)) {
        let e = Engine::new(Rationals);
        for i in 0..=b.nvars() as i64 + 1 {
            let ass = e.associated_primes(&b, i).unwrap();
            prop_assert_eq!(ass.minimal(), e.minimal_associated_primes(&b, i).unwrap());
            let support = e.betti_support(&b, i).unwrap();
            prop_assert!(ass.iter().all(|p| support.contains(&p)));
        }
    }

    #[test]
    fn betti_inequality_is_never_violated(b in squarefree_ideal(5, 5)) {
        let e = Engine::new(Rationals);
        prop_assert!(e.check_betti_inequality(&b).unwrap().is_clean());
    }
}
