use cantor_dihedral::abgroups::{FGAbGroup, IntMatrix};
use cantor_dihedral::homology::{
    bar_homology, formula_homology, random_module, theorem_comp, Case, CaseEvidence, GroupValue, InvolutionModule,
};
use cantor_dihedral::systems::permutation_matrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// An involutive permutation as (perm, fixed cells, swapped pairs).
fn involution() -> impl Strategy<Value = (Vec<usize>, usize, usize)> {
    (0usize..=5, 0usize..=4)
        .prop_filter("nonempty", |(f, p)| f + p > 0)
        .prop_flat_map(|(fixed, pairs)| {
            let n = fixed + 2 * pairs;
            (Just(fixed), Just(pairs), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(fixed, pairs, order)| {
            let mut perm: Vec<usize> = (0..order.len()).collect();
            for p in 0..pairs {
                let (i, j) = (order[fixed + 2 * p], order[fixed + 2 * p + 1]);
                perm[i] = j;
                perm[j] = i;
            }
            (perm, fixed, pairs)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fixed_cells_give_odd_torsion((perm, fixed, pairs) in involution()) {
        let m = InvolutionModule::unlabelled(permutation_matrix(&perm)).unwrap();
        prop_assert_eq!(m.h_odd(), FGAbGroup::elementary_two(fixed));
        prop_assert!(m.h_even().is_trivial());
        prop_assert_eq!(m.coinvariants(), FGAbGroup::free(fixed + pairs));
        prop_assert!(m.psi_check().unwrap());
        prop_assert_eq!(m.fixed_cells().unwrap().len(), fixed);
        if fixed == 0 {
            prop_assert!(m.h_odd().is_trivial());
        }
    }

    #[test]
    fn negated_permutation_swaps_parity((perm, fixed, _) in involution()) {
        let m = InvolutionModule::unlabelled(permutation_matrix(&perm).neg()).unwrap();
        prop_assert_eq!(m.h_even(), FGAbGroup::elementary_two(fixed));
        prop_assert!(m.h_odd().is_trivial());
    }

    #[test]
    fn bar_complex_matches_formulas(seed in any::<u64>()) {
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        let bar = bar_homology(&m, 4).unwrap();
        for (n, g) in bar.iter().enumerate() {
            prop_assert_eq!(g, &formula_homology(&m, n));
        }
    }

    #[test]
    fn non_free_tables_are_two_periodic(fs in 0u64..4, fp in 0u64..4, rank in 0usize..4) {
        prop_assume!(fs + fp > 0);
        let ev = CaseEvidence {
            case: Case::NonFree,
            fix_sigma: fs,
            fix_phi_sigma: fp,
            splitting: false,
            h0: GroupValue::Finite(FGAbGroup::free(rank)),
        };
        let t = theorem_comp(&ev).unwrap();
        for n in (1..12).step_by(2) {
            prop_assert_eq!(t.degree(n), GroupValue::Finite(FGAbGroup::elementary_two((fs + fp) as usize)));
            prop_assert!(t.degree(n + 1).is_trivial());
        }
        let split = CaseEvidence { case: Case::Split, splitting: true, ..ev.clone() };
        prop_assert!(theorem_comp(&split).is_err());
    }
}

#[test]
fn rejects_non_involutions() {
    let a = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
    assert!(InvolutionModule::unlabelled(a).is_err());
}
