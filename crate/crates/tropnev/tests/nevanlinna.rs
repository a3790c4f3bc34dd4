//! Value-distribution functionals checked against quadrature oracles and
//! against each other: the closed-form counting integral versus a midpoint
//! Riemann sum, tabulation versus the standalone calls, and the growth
//! estimator on a corpus whose members all have linear characteristics.

mod support;

use support::riemann_counting;
use tropnev::{
    char_table, characteristic, corpus, counting, counting_density, fmt_gap, growth_estimate,
    jensen_residual, make_quadrature, proximity, NevanlinnaError,
};

#[test]
fn counting_matches_a_midpoint_riemann_sum_of_the_density() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    for f in corpus::standard_1d().iter().take(30) {
        for &r in &[5.0, 10.0, 32.0] {
            let closed = counting(f, r, &quad);
            let summed = riemann_counting(f, r, &quad, 8192);
            assert!(
                (closed - summed).abs() < 2e-2 * (1.0 + closed.abs()),
                "r={r}: closed {closed} vs midpoint {summed}"
            );
        }
    }
    let quad2 = make_quadrature(2, 128, 0).unwrap();
    for f in corpus::standard_2d().iter().take(6) {
        for &r in &[5.0, 10.0] {
            let closed = counting(f, r, &quad2);
            let summed = riemann_counting(f, r, &quad2, 2048);
            assert!(
                (closed - summed).abs() < 2e-2 * (1.0 + closed.abs()),
                "2-D r={r}: closed {closed} vs midpoint {summed}"
            );
        }
    }
}

#[test]
fn tabulation_matches_the_standalone_functionals() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid = [1.0, 2.0, 4.0, 8.0, 16.0];
    for f in corpus::standard_1d().iter().take(15) {
        let table = char_table(f, &grid, &quad).unwrap();
        for (i, &r) in grid.iter().enumerate() {
            let m = proximity(f, r, &quad);
            let n = counting_density(f, r, &quad);
            let big_n = counting(f, r, &quad);
            let t = characteristic(f, r, &quad);
            assert!((table.proximity[i] - m).abs() <= 1e-12 * (1.0 + m.abs()));
            assert!((table.density[i] - n).abs() <= 1e-12 * (1.0 + n.abs()));
            assert!((table.counting[i] - big_n).abs() <= 1e-12 * (1.0 + big_n.abs()));
            assert!((table.characteristic[i] - t).abs() <= 1e-12 * (1.0 + t.abs()));
        }
    }
}

#[test]
fn jensen_residual_is_rounding_level_across_the_corpus() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    for f in corpus::standard_1d().iter().take(25) {
        for &r in &[1.0, 10.0, 100.0] {
            let res = jensen_residual(f, r, &quad);
            assert!(res.abs() < 1e-10, "1-D residual {res} at r={r}");
        }
    }
    let quad2 = make_quadrature(2, 512, 0).unwrap();
    for f in corpus::standard_2d().iter().take(5) {
        for &r in &[1.0, 10.0] {
            let res = jensen_residual(f, r, &quad2);
            assert!(res.abs() < 1e-10, "2-D residual {res} at r={r}");
        }
    }
}

#[test]
fn growth_estimates_see_linear_characteristics() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid: Vec<f64> = (0..=32).map(|k| 10f64.powf(k as f64 / 8.0)).collect();
    let mut estimated = 0usize;
    for f in corpus::standard_1d().iter().take(30) {
        let t_top = characteristic(f, *grid.last().unwrap(), &quad);
        let est = growth_estimate(f, &grid, &quad).unwrap();
        assert!(est.subnormal, "piecewise-linear growth is always subnormal");
        if t_top > 1.0 {
            // T grows like (top slope) * r, so the log-log slope tends to 1.
            assert!(
                (0.85..=1.15).contains(&est.rho),
                "rho = {} for T(r_max) = {t_top}",
                est.rho
            );
            estimated += 1;
        }
    }
    assert!(estimated >= 20, "corpus should mostly have growing T");
}

#[test]
fn growth_estimation_rejects_grids_under_three_decades() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let f = &corpus::standard_1d()[0];
    let narrow: Vec<f64> = (0..=16).map(|k| 10f64.powf(k as f64 / 16.0)).collect();
    assert!(matches!(
        growth_estimate(f, &narrow, &quad),
        Err(NevanlinnaError::DegenerateGrid(_))
    ));
}

#[test]
fn pole_shift_scan_flags_offsets_at_or_above_the_floor() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let grid = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0];
    let f = &corpus::with_poles_1d()[0];
    let probe = fmt_gap(f, 0.0, &grid, &quad).unwrap();
    let floor = probe.pole_floor.expect("corpus member has poles");
    let below = fmt_gap(f, floor - 1.0, &grid, &quad).unwrap();
    assert!(!below.above_floor);
    let above = fmt_gap(f, floor + 1.0, &grid, &quad).unwrap();
    assert!(above.above_floor);
}

#[test]
fn table_renderings_expose_the_documented_columns() {
    let quad = make_quadrature(1, 2, 0).unwrap();
    let table = char_table(&corpus::standard_1d()[0], &[1.0, 2.0, 4.0], &quad).unwrap();
    let csv = table.to_csv();
    assert!(csv.lines().any(|l| l == "r,m,n,N,T"), "missing header: {csv}");
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 4);
    let doc: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
    for key in ["quad", "r", "m", "n", "N", "T"] {
        assert!(!doc[key].is_null(), "missing JSON key {key}");
    }
}
