mod support;

use nbnc_core::generators::{complete, gnp};
use nbnc_core::spectral::DenseSymmetricMatrix;
use nbnc_core::{acr, connected_components, eigenvalues, laplacian, SplitMix64};
use support::oracles::{all_graphs, small_laplacian_spectrum};

#[test]
fn trace_and_zero_multiplicity_on_random_graphs() {
    let mut rng = SplitMix64::new(7);
    for i in 0..200 {
        let n = 1 + i % 12;
        let g = gnp(n, 0.1 + 0.05 * (i % 10) as f64, &mut rng);
        let l = laplacian(&g);
        let spectrum = eigenvalues(&l).unwrap();
        assert!((spectrum.sum() - l.trace()).abs() <= 1e-8 * n as f64);
        assert_eq!(
            spectrum.zero_count(1e-6),
            connected_components(&g).component_count
        );
        assert!(spectrum.eigenvalues().iter().all(|&x| x >= -1e-9));
        assert!(spectrum.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn exhaustive_small_graphs_match_closed_forms() {
    for n in 0..=4 {
        for g in all_graphs(n) {
            let degrees: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
            let expected = small_laplacian_spectrum(&degrees);
            let got = eigenvalues(&laplacian(&g)).unwrap();
            for (x, y) in got.eigenvalues().iter().zip(&expected) {
                assert!((x - y).abs() <= 1e-8, "{g:?}: {got:?} vs {expected:?}");
            }
        }
    }
}

#[test]
fn acr_bounds_on_connected_graphs() {
    let mut rng = SplitMix64::new(99);
    let mut checked = 0;
    while checked < 200 {
        let n = 2 + checked % 10;
        let g = gnp(n, 0.6, &mut rng);
        if connected_components(&g).component_count != 1 {
            continue;
        }
        let a = acr(&g).unwrap();
        let is_complete = g.edge_count() == n * (n - 1) / 2;
        assert!(a > 0.0 && a <= 1.0);
        assert_eq!((a - 1.0).abs() < 1e-9, is_complete, "{g:?} acr {a}");
        checked += 1;
    }
    for n in 2..12 {
        assert!((acr(&complete(n)).unwrap() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn jacobi_handles_dense_general_symmetric() {
    // tridiagonal (2, -1) matrix of order 8: eigenvalues 2 - 2 cos(k pi / 9)
    let n = 8;
    let m = DenseSymmetricMatrix::from_upper(n, |i, j| {
        if i == j {
            2.0
        } else if j == i + 1 {
            -1.0
        } else {
            0.0
        }
    });
    let got = eigenvalues(&m).unwrap();
    let mut expected: Vec<f64> = (1..=n)
        .map(|k| 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n + 1) as f64).cos())
        .collect();
    expected.sort_by(f64::total_cmp);
    for (x, y) in got.eigenvalues().iter().zip(&expected) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn large_neighborhood_converges() {
    let mut rng = SplitMix64::new(5);
    let g = gnp(120, 0.3, &mut rng);
    let l = laplacian(&g);
    let spectrum = eigenvalues(&l).unwrap();
    assert!((spectrum.sum() - l.trace()).abs() <= 1e-8 * 120.0);
}
