use critline_core::zeros::ROUNDING_TOLERANCE;
use critline_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zeta_free_height(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    loop {
        let t = rng.gen_range(lo..hi);
        if z_function(t, ZMethod::Auto).unwrap().z.abs() > 1e-3 {
            return t;
        }
    }
}

#[test]
fn backlund_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..50 {
        let a = zeta_free_height(&mut rng, 0.5, 1000.0);
        let b = zeta_free_height(&mut rng, 0.5, 1000.0);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        assert!(
            backlund_count(lo).unwrap().count <= backlund_count(hi).unwrap().count,
            "N({lo}) > N({hi})"
        );
    }
}

#[test]
fn backlund_values_sit_near_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..100 {
        let t = zeta_free_height(&mut rng, 20.0, 1000.0);
        let b = backlund_count(t).unwrap();
        assert!(b.distance < ROUNDING_TOLERANCE, "T = {t}: {}", b.distance);
    }
}

#[test]
fn sign_changes_bounded_by_argument_count_with_even_gap() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let cfg = ScanConfig::default();
    for _ in 0..20 {
        let t = zeta_free_height(&mut rng, 5.0, 600.0);
        let r = verify_equality(t, &cfg).unwrap();
        assert!(r.n0_signchanges <= r.n_argument, "T = {t}");
        assert!(r.parity_holds(), "T = {t}");
        assert_eq!(r.equal, r.n0_signchanges == r.n_argument);
    }
}

#[test]
fn zero_records_are_method_independent() {
    let scan = scan_sign_changes(990.0, 1020.0, &ScanConfig::default()).unwrap();
    assert!(scan.brackets.len() > 10);
    let first = backlund_count(990.0).unwrap().count + 1;
    let mut previous = f64::NEG_INFINITY;
    for (k, b) in scan.brackets.iter().enumerate() {
        let index = first + k as u64;
        let auto = locate_zero(b, index, ZMethod::Auto).unwrap();
        let em = locate_zero(b, index, ZMethod::EulerMaclaurin).unwrap();
        assert!(
            (auto.t - em.t).abs() < 1e-7,
            "zero {index}: {} vs {}",
            auto.t,
            em.t
        );
        assert!(auto.width <= 1e-9 && auto.residual <= 1e-6);
        assert!(auto.t > previous);
        previous = auto.t;
    }
}

#[test]
fn count_at_one_thousand() {
    let r = verify_equality(1000.0, &ScanConfig::default()).unwrap();
    assert!(r.equal);
    assert_eq!(r.n_argument, 649);
    assert!(r.unresolved.is_empty());
}

#[test]
fn coarse_grid_still_counts_correctly() {
    // Gram points alone nearly suffice below 100; refinement covers the rest
    let cfg = ScanConfig {
        base_grid: 1,
        ..ScanConfig::default()
    };
    let r = verify_equality(100.0, &cfg).unwrap();
    assert!(r.equal, "{r:?}");
}
