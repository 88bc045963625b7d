use cantor_dihedral::circle::{Arc, ClopenSet, CutPoint, Theta};
use cantor_dihedral::systems::{DenjoyFlip, DihedralSystem, DoubledSystem, GroupElement, Odometer, WindowPartition};
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

fn theta() -> Theta {
    Theta::golden()
}

fn set_strategy() -> impl Strategy<Value = ClopenSet> {
    prop::collection::vec((-10i64..=10, -10i64..=10), 0..=8).prop_map(|pairs| {
        let th = theta();
        let arcs: Vec<Arc> = pairs
            .into_iter()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| Arc { left: CutPoint::of(&th, i), right: CutPoint::of(&th, j) })
            .collect();
        ClopenSet::from_arcs(th, &arcs).unwrap()
    })
}

fn element() -> impl Strategy<Value = GroupElement> {
    (-20i64..=20, any::<bool>()).prop_map(|(n, s)| GroupElement::new(n, s))
}

fn check_relations<S: DihedralSystem>(
    sys: &S,
    a: &S::Set,
    g: GroupElement,
    h: GroupElement,
) -> Result<(), TestCaseError> {
    let sigma = GroupElement::sigma();
    prop_assert_eq!(&sys.sigma(&sys.sigma(a)), a);
    prop_assert_eq!(sys.sigma(&sys.phi_pow(&sys.sigma(a), 1)), sys.phi_pow(a, -1));
    prop_assert_eq!(sys.act(g, &sys.act(h, a)), sys.act(g.mul(h), a));
    prop_assert_eq!(sys.act(sigma.mul(GroupElement::phi()).mul(sigma), a), sys.phi_pow(a, -1));
    prop_assert_eq!(sys.measure(&sys.act(g, a)), sys.measure(a));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn denjoy_dihedral_relations(a in set_strategy(), g in element(), h in element()) {
        check_relations(&DenjoyFlip::golden(), &a, g, h)?;
    }

    #[test]
    fn doubled_dihedral_relations(a in set_strategy(), b in set_strategy(), g in element(), h in element()) {
        let sys = DoubledSystem::new(theta());
        check_relations(&sys, &sys.set(a, b), g, h)?;
    }

    #[test]
    fn group_laws(g in element(), h in element(), k in element()) {
        prop_assert_eq!(g.mul(h).mul(k), g.mul(h.mul(k)));
        prop_assert_eq!(g.mul(g.inverse()), GroupElement::IDENTITY);
        if g.s {
            prop_assert_eq!(g.mul(g), GroupElement::IDENTITY);
        }
    }

    #[test]
    fn odometer_relations(base in 2u64..=5, levels in 2usize..=5, g in element(), h in element(), x in any::<u64>()) {
        let od = Odometer::geometric(base, levels).unwrap();
        for level in 1..=levels {
            let n = od.modulus(level).unwrap();
            let x = x % n;
            let gh = od.act(g.mul(h), level, x).unwrap();
            prop_assert_eq!(od.act(g, level, od.act(h, level, x).unwrap()).unwrap(), gh);
            if level > 1 {
                let coarse = od.modulus(level - 1).unwrap();
                prop_assert_eq!(od.act(g, level, x).unwrap() % coarse, od.act(g, level - 1, x % coarse).unwrap());
            }
        }
    }

    #[test]
    fn fixed_fraction_bounded(chain_steps in prop::collection::vec(2u64..=4, 1..=6), g in element()) {
        let mut chain = Vec::new();
        let mut n = 1u64;
        for k in chain_steps {
            n *= k;
            chain.push(n);
        }
        let od = Odometer::new(chain).unwrap();
        for level in 1..=od.levels() {
            let n = od.modulus(level).unwrap();
            let f = od.fixed_fraction(g, level).unwrap();
            let enumerated = (0..n).filter(|&x| od.act(g, level, x).unwrap() == x).count() as u64;
            prop_assert_eq!(f, Ratio::new(enumerated, n));
            if g.s || (g.n as i128).rem_euclid(n as i128) != 0 {
                prop_assert!(f <= Ratio::new(2, n));
            }
        }
    }

    #[test]
    fn level_partitions_refine(level in 1i64..=12) {
        let sys = DenjoyFlip::golden();
        let lp = sys.level_partition(level).unwrap();
        let next = WindowPartition::new(theta(), -level - 1, level + 1);
        let r = lp.cells.refinement(&next).unwrap();
        for i in 0..r.rows() {
            let ones = (0..r.cols()).filter(|&j| r[(i, j)] == BigInt::from(1)).count();
            prop_assert_eq!(ones, 1);
        }
        for j in 0..r.cols() {
            let col: Vec<bool> = (0..r.rows()).map(|i| r[(i, j)] == BigInt::from(1)).collect();
            prop_assert_eq!(next.set_of(&col), lp.cells.cell(j));
        }
        let cells = lp.cells.cells();
        prop_assert!(cantor_dihedral::circle::is_partition(&cells));
        for (i, &j) in lp.sigma.iter().enumerate() {
            prop_assert_eq!(cells[i].flip(), cells[j].clone());
        }
        let ps = lp.phi_sigma_cells.cells();
        for (i, &j) in lp.phi_sigma.iter().enumerate() {
            prop_assert_eq!(ps[i].flip().rotate(1), ps[j].clone());
        }
    }
}
