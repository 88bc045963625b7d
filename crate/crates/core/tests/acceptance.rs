//! End-to-end checks of the headline numbers. Each test prints one summary
//! line; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use cantor_dihedral::abgroups::FGAbGroup;
use cantor_dihedral::amenability::{folner, folner_ratio, is_transversal, standard_k};
use cantor_dihedral::circle::{CirclePoint, ClopenSet, CutPoint, QuadExt};
use cantor_dihedral::homology::{
    compute_homology, denjoy_free_product, denjoy_level, oracle_check, GroupValue, Method,
};
use cantor_dihedral::systems::{DenjoyFlip, DihedralSystem, DoubledSystem, GroupElement, Odometer, System, SystemSpec};
use cantor_dihedral::towers::{
    almost_finite_certificate, certificate_to_json, first_return_castle, verify_castle, verify_certificate_json,
};
use num_rational::{BigRational, Ratio};

fn report(n: u32, what: &str, ok: bool) {
    println!("criterion {n:2} {}: {what}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {what}");
}

fn z2(k: usize) -> FGAbGroup {
    FGAbGroup::elementary_two(k)
}

fn finite(g: FGAbGroup) -> GroupValue {
    GroupValue::Finite(g)
}

fn localization(v: &GroupValue) -> Option<&str> {
    match v {
        GroupValue::Localized { descriptor, .. } => Some(&descriptor.localization),
        GroupValue::Finite(_) => None,
    }
}

#[test]
fn criterion_01_golden_flip_homology() {
    let start = Instant::now();
    let sys = SystemSpec::golden_denjoy().build().unwrap();
    let r = compute_homology(&sys, 16, Method::Comp).unwrap();
    let elapsed = start.elapsed();
    let t = &r.table;
    let level = r.provenance["comp"]["telescope"]["level"].as_u64().unwrap();
    let ok = t.degree(0) == finite(FGAbGroup::free(2))
        && [1, 3, 5].iter().all(|&n| t.degree(n) == finite(z2(3)))
        && [2, 4].iter().all(|&n| t.degree(n).is_trivial())
        && level <= 16
        && elapsed < Duration::from_secs(10);
    report(1, &format!("H0 = {}, H1 = {}, stable from level {level}, {elapsed:.2?}", t.h0, t.h1), ok);
}

#[test]
fn criterion_02_fixed_points() {
    let sys = DenjoyFlip::golden();
    let sigma: Vec<String> = sys.fixed_points(GroupElement::sigma()).unwrap().iter().map(|x| x.to_string()).collect();
    let phi_sigma = sys.fixed_points(GroupElement::phi_sigma()).unwrap();
    let expected = vec![QuadExt::theta().half(), QuadExt::from_ints(1, 1).half()];
    let free = (1..=50i64).all(|n| {
        sys.fixed_points(GroupElement::new(n, false)).unwrap().is_empty()
            && sys.fixed_points(GroupElement::new(-n, false)).unwrap().is_empty()
    });
    let ok = sigma == ["1/2"] && phi_sigma == expected && free;
    report(2, &format!("σ fixes {sigma:?}, φσ fixes {} points, rotations free for |n| ≤ 50", phi_sigma.len()), ok);
}

/// Smallest `k ≥ 0` with `φ⁻ᵏx ∈ y`.
fn steps_back(sys: &DenjoyFlip, y: &ClopenSet, x: &CirclePoint) -> u64 {
    let mut p = x.clone();
    let mut k = 0;
    while !y.contains(&p) {
        p = p.rotate(&sys.theta, -1);
        k += 1;
        assert!(k < 100, "orbit never reached the base");
    }
    k
}

#[test]
fn criterion_03_golden_castle() {
    let sys = DenjoyFlip::golden();
    let th = sys.theta;
    let y = sys.arc(-1, 1).unwrap();
    let castle = first_return_castle(&sys, &y).unwrap();
    let cut = |m, n| CutPoint::checked(&th, m, n).unwrap();
    let y1 = ClopenSet::arc(th, cut(3, -4), cut(0, 1)).unwrap();
    let y2 = ClopenSet::arc(th, cut(1, -1), cut(3, -4)).unwrap();
    let shape_ok = castle.return_times() == [3, 5] && castle.towers[0].base == y1 && castle.towers[1].base == y2;
    let scale = |k: i64| BigRational::from_integer(k.into());
    let measure_ok = &y1.measure().scale(&scale(3)) + &y2.measure().scale(&scale(5)) == QuadExt::integer(1);
    let verified = verify_castle(&sys, &castle).all();

    // orbit simulation at sample points k/10007
    let mut disagreements = 0;
    for k in 1..=10_000i64 {
        let x = CirclePoint::interior(&th, QuadExt::rational(k, 10_007)).unwrap();
        let back = steps_back(&sys, &y, &x);
        let mut base_point = x.clone();
        for _ in 0..back {
            base_point = base_point.rotate(&th, -1);
        }
        let tower = castle.towers.iter().position(|t| t.base.contains(&base_point)).unwrap();
        let t = &castle.towers[tower];
        let level_ok = back < t.j && t.base.rotate(back as i64).contains(&x);
        let hits: usize =
            castle.towers.iter().map(|t| t.shape.iter().filter(|&&g| sys.act(g, &t.base).contains(&x)).count()).sum();
        let mut p = base_point.rotate(&th, 1);
        let mut ret = 1;
        while !y.contains(&p) {
            p = p.rotate(&th, 1);
            ret += 1;
        }
        if !(level_ok && hits == 1 && ret == t.j) {
            disagreements += 1;
        }
    }
    let ok = shape_ok && measure_ok && verified && disagreements == 0;
    report(
        3,
        &format!(
            "J = {:?}, 3|Y₁| + 5|Y₂| = 1, {disagreements} orbit disagreements in 10⁴ samples",
            castle.return_times()
        ),
        ok,
    );
}

#[test]
fn criterion_04_folner_transversals() {
    let transversal = (1..=10_000i64).all(|m| is_transversal(&folner(m).unwrap(), m));
    let k = standard_k();
    let ratios = (2..=4096i64).step_by(2).all(|m| folner_ratio(&folner(m).unwrap(), &k).unwrap() == Ratio::new(2, m));
    report(4, "F_m transversal for m ≤ 10⁴, ratio 2/m for even m ≤ 4096", transversal && ratios);
}

#[test]
fn criterion_05_certificate() {
    let start = Instant::now();
    let spec = SystemSpec::golden_denjoy();
    let sys = DenjoyFlip::golden();
    let eps = Ratio::new(1, 10);
    let cert = almost_finite_certificate(&sys, &standard_k(), eps).unwrap();
    let text = certificate_to_json(&spec, &sys, &cert).unwrap().to_string();
    let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let report_ok = verify_certificate_json(&reparsed).unwrap().all();
    let ratios_ok = cert.castle.towers.iter().all(|t| folner_ratio(&t.shape, &standard_k()).unwrap() < eps);
    let min_j = cert.castle.return_times().into_iter().min().unwrap();
    let elapsed = start.elapsed();
    let ok = report_ok && ratios_ok && min_j >= 20 && elapsed < Duration::from_secs(30);
    report(5, &format!("eps = 1/10: J = {:?}, re-verified from JSON, {elapsed:.2?}", cert.castle.return_times()), ok);
}

#[test]
fn criterion_06_odometer_fixed_fractions() {
    let chain: Vec<u64> = (1..=12).map(|i| 12 << i).collect();
    let od = Odometer::new(chain).unwrap();
    let ok = (1..=od.levels()).all(|i| {
        let n = od.modulus(i).unwrap();
        od.fixed_fraction(GroupElement::sigma(), i).unwrap() == Ratio::new(2, n)
            && od.fixed_fraction(GroupElement::phi_sigma(), i).unwrap() == Ratio::new(0, 1)
    });
    report(6, "12·2^i: σ fixes 2/nᵢ, φσ fixes nothing, for i ≤ 12", ok);
}

#[test]
fn criterion_07_odometer_homology() {
    let mut ok = true;
    let mut notes = Vec::new();
    for (base, levels, odd, loc) in [(3u64, 6usize, 2usize, "Z[1/3]"), (2, 8, 1, "Z[1/2]")] {
        let od = Odometer::geometric(base, levels).unwrap();
        let r = compute_homology(&System::Odometer(od.clone()), levels, Method::Comp).unwrap();
        let ts = od.stable_fixed_count(GroupElement::sigma(), levels).unwrap();
        let tp = od.stable_fixed_count(GroupElement::phi_sigma(), levels).unwrap();
        ok &= r.table.odd == z2(odd)
            && r.table.h1 == z2(odd)
            && r.table.even.is_trivial()
            && localization(&r.table.h0) == Some(loc)
            && ts.stabilized_at <= 3
            && tp.stabilized_at <= 3;
        notes.push(format!("{base}^i: H0 = {}, H_odd = {}", r.table.h0, r.table.odd));
    }
    report(7, &notes.join("; "), ok);
}

#[test]
fn criterion_08_bar_oracle() {
    let r = oracle_check(2024, 100).unwrap();
    report(
        8,
        &format!("{} modules, degrees ≤ {}, {} mismatches", r.modules, r.degrees, r.mismatches.len()),
        r.mismatches.is_empty(),
    );
}

#[test]
fn criterion_09_two_paths() {
    let sys = DenjoyFlip::golden();
    let fp = denjoy_free_product(&sys, 16).unwrap();
    let both = compute_homology(&System::DenjoyFlip(sys), 16, Method::Both).unwrap();
    let comp = compute_homology(&System::DenjoyFlip(sys), 16, Method::Comp).unwrap();
    let levels_agree = (3..=16).all(|n| {
        let level = denjoy_level(&sys, n).unwrap();
        finite(level.h0()) == comp.table.h0 && level.h1() == comp.table.h1
    });
    let injective = fp.exact_levels == (1..=16).collect::<Vec<_>>();
    let ok = both.table == comp.table && levels_agree && injective;
    report(9, &format!("free product H0 = {}, H1 = {}, injective at N ≤ 16: {injective}", comp.table.h0, fp.h1), ok);
}

#[test]
fn criterion_10_doubled_system() {
    let sys = DoubledSystem::new(DenjoyFlip::golden().theta);
    let y = sys.splitting();
    let split = sys.phi_pow(&y, 1) == y && sys.is_partition(&[y.clone(), sys.sigma(&y)]);
    let r = compute_homology(&System::Doubled(sys), 8, Method::Comp).unwrap();
    let t = &r.table;
    let ok = split
        && t.degree(0) == finite(FGAbGroup::free(2))
        && t.degree(1) == finite(FGAbGroup::free(1))
        && (2..6).all(|n| t.degree(n).is_trivial());
    report(10, &format!("H0 = {}, H1 = {}, higher groups 0", t.h0, t.h1), ok);
}
