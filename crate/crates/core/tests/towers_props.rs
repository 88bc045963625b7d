use cantor_dihedral::amenability::OdometerCastle;
use cantor_dihedral::circle::{ClopenSet, QuadExt, Theta};
use cantor_dihedral::systems::{DenjoyFlip, DihedralSystem, DoubledSystem, Odometer};
use cantor_dihedral::towers::{first_return_castle, verify_castle, Castle};
use num_rational::BigRational;
use proptest::prelude::*;

fn theta() -> Theta {
    Theta::golden()
}

/// `A ∪ σA` for a random arc `A`.
fn invariant_base() -> impl Strategy<Value = ClopenSet> {
    (-8i64..=8, -8i64..=8).prop_filter("distinct", |(i, j)| i != j).prop_map(|(i, j)| {
        let a = ClopenSet::arc_by_index(theta(), i, j).unwrap();
        a.union(&a.flip())
    })
}

fn all_translates<S: DihedralSystem>(sys: &S, castle: &Castle<S::Set>) -> Vec<S::Set> {
    castle.towers.iter().flat_map(|t| t.shape.iter().map(|&g| sys.act(g, &t.base)).collect::<Vec<_>>()).collect()
}

fn check<S: DihedralSystem>(sys: &S, y: &S::Set) -> Result<(), TestCaseError> {
    let castle = first_return_castle(sys, y).unwrap();
    prop_assert!(verify_castle(sys, &castle).all());
    prop_assert!(sys.is_partition(&all_translates(sys, &castle)));
    let mut total = QuadExt::zero();
    for t in &castle.towers {
        prop_assert_eq!(t.shape.len() as u64, t.j);
        total = &total + &sys.measure(&t.base).scale(&BigRational::from_integer(t.j.into()));
    }
    prop_assert_eq!(total, QuadExt::integer(1));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn denjoy_castles_partition(y in invariant_base()) {
        check(&DenjoyFlip::golden(), &y)?;
    }

    #[test]
    fn doubled_castles_partition(a in invariant_base(), b in invariant_base()) {
        let sys = DoubledSystem::new(theta());
        let y = sys.set(a, b);
        let y = sys.union(&y, &sys.sigma(&y));
        check(&sys, &y)?;
    }

    #[test]
    fn odometer_castles_partition(base in 2u64..=6, levels in 1usize..=6, n in 1usize..=6) {
        let od = Odometer::geometric(base, levels).unwrap();
        prop_assume!(od.modulus(levels).unwrap() <= 100_000);
        let n = n.min(levels);
        for j in n..=levels {
            prop_assert!(OdometerCastle::build(&od, n, j).unwrap().is_partition());
        }
    }
}
