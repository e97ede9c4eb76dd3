//! The numerics compile and behave at f32, with tolerances scaled to
//! single-precision rounding.

use coincidence_core::dfunctions::{d30_closed_form, dfunctions_from_immanants};
use coincidence_core::immanants::{immanant_set, permanent3};
use coincidence_core::rates::{coincidence_rate, DelaySpec};
use coincidence_core::su2::{hom_rate, su2_matrix, EulerSu2, HomRateParams};
use coincidence_core::su3::{amplitude_vector, su3_matrix, OmegaSu3};

#[test]
fn su2_path_at_f32() {
    let omega = EulerSu2::<f32>::new(0.3, 1.1, -0.7).unwrap();
    let m = su2_matrix(&omega);
    assert!(m.unitarity_deviation() < 1e-6);
    assert!((m.det() - 1.0).norm() < 1e-6);
    let rate = hom_rate(&HomRateParams::new(0.0f32, 1.0, omega).unwrap());
    assert!((rate - 1.1f32.cos().powi(2)).abs() < 1e-5);
}

#[test]
fn su3_and_rates_at_f32() {
    let omega = OmegaSu3::<f32>::new([0.5, 1.2, -0.7, 0.9, 2.1, 0.3, 1.0, -0.2]).unwrap();
    let r = su3_matrix(&omega);
    assert!(r.unitarity_deviation() < 1e-5);

    let a = amplitude_vector(&r);
    let set = immanant_set(&r);
    assert!((a.sum() - set.permanent).norm() < 1e-5);
    assert!((d30_closed_form(&omega) - set.permanent).norm() < 1e-4);
    let d = dfunctions_from_immanants(&set);
    assert!(d.max_mixed_imag() < 1e-5);

    let zero = DelaySpec::<f32>::new([0.0; 3], 0.5).unwrap();
    let rate = coincidence_rate(&omega, &zero);
    assert!((rate - permanent3(&r).norm_sqr()).abs() < 1e-5);
    let spread = DelaySpec::<f32>::new([0.0, 1.5, -0.8], 0.5).unwrap();
    let rate = coincidence_rate(&omega, &spread);
    assert!(rate.is_finite() && rate >= -1e-5);
}

#[test]
fn gram_and_landscape_at_f32() {
    use coincidence_core::rates::{gram_matrix, landscape, GridSpec};

    // irrational-ish arrival times so the two tau_c routes round differently
    for tau in [[0.1f32, 2.7, -1.9], [3.33, -0.07, 1.234], [-2.5, 2.5, 0.3]] {
        let m = gram_matrix(&DelaySpec::new(tau, 0.8f32).unwrap());
        assert!(m.smallest_eigenvalue() > -1e-4);
    }

    // an interferometer with a vanishing permanent: grid rates near zero
    // must clamp rather than error at single precision
    let omega = OmegaSu3::<f32>::new([
        std::f32::consts::FRAC_PI_3,
        0.0,
        std::f32::consts::PI / 5.0,
        std::f32::consts::FRAC_PI_2,
        std::f32::consts::FRAC_PI_3,
        std::f32::consts::FRAC_PI_4,
        0.0,
        0.0,
    ])
    .unwrap();
    let grid = GridSpec::new(-2.0f32, 2.0, 5).unwrap();
    let ls = landscape(&omega, 0.1f32, &grid, &grid).unwrap();
    for row in ls.rates() {
        for &v in row {
            assert!(v.is_finite() && v >= 0.0);
        }
    }
}
