//! Seeded cross-path consistency suite.
//!
//! Every quantity the crate computes has at least two independent routes:
//! closed forms against character sums, special-case rates against the
//! general quadratic form, the printed overlap matrix against a direct
//! expansion of the rate integral. This module runs all of those checks over
//! seeded random draws and reports the worst observed deviation per check,
//! so a failure is reproducible from `(trials, seed)` alone.
//!
//! Everything here is `f64`: the tolerances are double-precision statements.

use crate::dfunctions::{
    coefficient_table, d11_closed_form, d30_closed_form, dfunctions_from_immanants, dtilde_from_d,
};
use crate::immanants::{
    determinant2, determinant3, immanant_set, permanent2, permanent3, row_permuted,
};
use crate::perm::Perm3;
use crate::rates::{
    coincidence_rate, gram_matrix, grouped_amplitudes, landscape, rate_all_distinct_equal_spacing,
    rate_two_identical, tau_c_squared, DelaySpec, GridSpec, IdenticalPair,
};
use crate::su2::{hom_rate, su2_matrix, EulerSu2, HomRateParams};
use crate::su3::{amplitude_vector, su3_matrix, subgroup_factor, OmegaSu3, SubgroupKind};

/// Splitmix64 generator: tiny, seedable, stable across platforms, which is
/// all the reproducible-check use case needs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform angle in [0, 2 pi).
    pub fn angle(&mut self) -> f64 {
        self.next_f64() * std::f64::consts::TAU
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn octuple(&mut self) -> OmegaSu3<f64> {
        let mut angles = [0.0; 8];
        for a in &mut angles {
            *a = self.angle();
        }
        OmegaSu3::new(angles).expect("angles are finite")
    }

    pub fn euler2(&mut self) -> EulerSu2<f64> {
        EulerSu2::new(self.angle(), self.angle(), self.angle()).expect("angles are finite")
    }
}

/// Result of one named check: worst deviation seen against its tolerance.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub tolerance: f64,
    pub observed: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.observed.is_finite() && self.observed <= self.tolerance
    }
}

/// Suite configuration: number of random draws per check and the seed.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 1,
        }
    }
}

/// Direct expansion of the rate integral: 36 amplitude cross terms, each
/// weighted by a product of per-mode Gaussian overlaps assembled from the
/// permutation algebra. Deliberately shares no code with
/// [`gram_matrix`], which transcribes the closed overlap pattern instead.
pub fn direct_rate_expansion(omega: &OmegaSu3<f64>, spec: &DelaySpec<f64>) -> f64 {
    let a = amplitude_vector(&su3_matrix(omega));
    let tau = spec.tau();
    let s2 = spec.sigma() * spec.sigma();
    let mut total = 0.0;
    for v in Perm3::ALL {
        let vi = v.inverse();
        for w in Perm3::ALL {
            let wi = w.inverse();
            let mut sum_sq = 0.0;
            for n in 1..=3 {
                let diff = tau[wi.apply(n) - 1] - tau[vi.apply(n) - 1];
                sum_sq += diff * diff;
            }
            total += (a.get(v).conj() * a.get(w)).re * (-0.5 * s2 * sum_sq).exp();
        }
    }
    total
}

/// The grouped-amplitude rate evaluated from the 12-pair-basis functions
/// instead of the amplitudes; used to cross-check the basis change.
fn pair12_rate_via_i12(omega: &OmegaSu3<f64>, tau: f64, sigma: f64) -> f64 {
    let d = dfunctions_from_immanants(&immanant_set(&su3_matrix(omega)));
    let t = dtilde_from_d(&d);
    let third = 1.0 / 3.0;
    let s3 = 3.0f64.sqrt();
    let a = (t.sym + t.mixed_11 * 2.0) * third;
    let b = (t.sym - t.mixed_11 + t.mixed_01 * s3) * third;
    let c = (t.sym - t.mixed_11 - t.mixed_01 * s3) * third;
    let incoherent = a.norm_sqr() + b.norm_sqr() + c.norm_sqr();
    let cross = 2.0 * ((a.conj() * b).re + (a.conj() * c).re + (b.conj() * c).re);
    incoherent + (-(sigma * sigma * tau * tau)).exp() * cross
}

fn outcome(name: &'static str, tolerance: f64, observed: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        tolerance,
        observed,
    }
}

/// Runs the whole suite. Deterministic in `(trials, seed)`.
pub fn run_suite(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let trials = cfg.trials.max(1);
    let mut checks = Vec::new();
    let mut rng = SplitMix64::new(cfg.seed);

    // -- two-channel ------------------------------------------------------
    {
        let mut worst_unitary = 0.0f64;
        let mut worst_perdet = 0.0f64;
        let mut worst_dip = 0.0f64;
        let mut worst_sym = 0.0f64;
        let mut worst_monotone = 0.0f64;
        for _ in 0..trials {
            let omega = rng.euler2();
            let r = su2_matrix(&omega);
            worst_unitary = worst_unitary
                .max(r.unitarity_deviation())
                .max((r.det() - 1.0).norm());
            worst_perdet = worst_perdet
                .max((permanent2(&r).re - omega.beta().cos()).abs())
                .max(permanent2(&r).im.abs())
                .max((determinant2(&r) - 1.0).norm());

            let sigma = rng.uniform(0.2, 2.0);
            let params = HomRateParams::new(0.0, sigma, omega).unwrap();
            worst_dip = worst_dip.max((hom_rate(&params) - omega.beta().cos().powi(2)).abs());

            let delay = rng.uniform(0.0, 5.0);
            let plus = HomRateParams::new(delay, sigma, omega).unwrap();
            let minus = HomRateParams::new(-delay, sigma, omega).unwrap();
            worst_sym = worst_sym.max((hom_rate(&plus) - hom_rate(&minus)).abs());

            let mut prev = hom_rate(&params);
            for k in 1..=10 {
                let d = 0.5 * k as f64;
                let next = hom_rate(&HomRateParams::new(d, sigma, omega).unwrap());
                worst_monotone = worst_monotone.max(prev - next);
                prev = next;
            }
        }
        let balanced = EulerSu2::new(0.0, std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        worst_dip = worst_dip.max(hom_rate(&HomRateParams::new(0.0, 1.0, balanced).unwrap()).abs());
        checks.push(outcome("su2_special_unitary", 1e-12, worst_unitary));
        checks.push(outcome("su2_permanent_cos_beta", 1e-12, worst_perdet));
        checks.push(outcome("hom_zero_delay_rate", 1e-12, worst_dip));
        checks.push(outcome("hom_delay_symmetry", 0.0, worst_sym));
        checks.push(outcome("hom_monotone_in_delay", 1e-15, worst_monotone));
    }

    // -- three-channel matrix and amplitudes ------------------------------
    {
        let mut worst_unitary = 0.0f64;
        let mut worst_sum = 0.0f64;
        let mut worst_bound = 0.0f64;
        let mut worst_phase = 0.0f64;
        for _ in 0..trials {
            let omega = rng.octuple();
            let r = su3_matrix(&omega);
            worst_unitary = worst_unitary
                .max(r.unitarity_deviation())
                .max((r.det() - 1.0).norm());
            let a = amplitude_vector(&r);
            worst_sum = worst_sum.max((a.sum() - permanent3(&r)).norm());
            for p in Perm3::ALL {
                worst_bound = worst_bound.max(a.get(p).norm() - 1.0);
            }

            let phased =
                r.mul(&subgroup_factor(SubgroupKind::Phi, &[rng.angle(), rng.angle()]).unwrap());
            let b = amplitude_vector(&phased);
            for p in Perm3::ALL {
                worst_phase = worst_phase.max((a.get(p) - b.get(p)).norm());
            }
        }
        checks.push(outcome("su3_special_unitary", 1e-12, worst_unitary));
        checks.push(outcome("amplitude_sum_is_permanent", 1e-12, worst_sum));
        checks.push(outcome("amplitude_magnitude_bound", 1e-12, worst_bound));
        checks.push(outcome("column_phase_invariance", 1e-12, worst_phase));
    }

    // -- immanants ---------------------------------------------------------
    {
        let mut worst_covariant = 0.0f64;
        let mut worst_dependence = 0.0f64;
        let mut worst_rowperm = 0.0f64;
        for _ in 0..trials {
            let omega = rng.octuple();
            let r = su3_matrix(&omega);
            let a = amplitude_vector(&r);
            let set = immanant_set(&r);
            for p in Perm3::ALL {
                let rp = row_permuted(&r, p);
                let weighted = permanent3(&rp) / 6.0 + set.mixed(p) / 3.0 + determinant3(&rp) / 6.0;
                worst_covariant = worst_covariant.max((weighted - a.get(p)).norm());
                worst_rowperm = worst_rowperm
                    .max((permanent3(&rp) - set.permanent).norm())
                    .max((determinant3(&rp) - set.determinant * p.parity() as f64).norm());
            }
            worst_dependence = worst_dependence
                .max(
                    (set.mixed(Perm3::P231) + set.mixed(Perm3::P123) + set.mixed(Perm3::P312))
                        .norm(),
                )
                .max(
                    (set.mixed(Perm3::P321) + set.mixed(Perm3::P213) + set.mixed(Perm3::P132))
                        .norm(),
                );
        }
        checks.push(outcome(
            "covariant_amplitude_identity",
            1e-12,
            worst_covariant,
        ));
        checks.push(outcome(
            "immanant_linear_dependence",
            1e-12,
            worst_dependence,
        ));
        checks.push(outcome("row_permutation_per_det", 1e-12, worst_rowperm));
    }

    // -- group functions ---------------------------------------------------
    {
        let mut worst_closed = 0.0f64;
        let mut worst_real = 0.0f64;
        let mut worst_amp = 0.0f64;
        let mut worst_mixed_sum = 0.0f64;
        let mut worst_det_one = 0.0f64;
        for _ in 0..trials {
            let omega = rng.octuple();
            let r = su3_matrix(&omega);
            let set = immanant_set(&r);
            let d = dfunctions_from_immanants(&set);
            worst_closed = worst_closed.max((d30_closed_form(&omega) - set.permanent).norm());
            for j in 0..2 {
                for i in 0..2 {
                    let closed = d11_closed_form(&omega, j, i).unwrap();
                    worst_closed = worst_closed.max((closed - d.d11[j][i]).norm());
                }
            }
            worst_real = worst_real.max(d.max_mixed_imag());
            worst_det_one = worst_det_one.max((d.d00 - 1.0).norm());
            worst_mixed_sum =
                worst_mixed_sum.max((set.mixed(Perm3::P123) - (d.d11[1][1] + d.d11[0][0])).norm());
            let a = amplitude_vector(&r);
            for p in Perm3::ALL {
                let rebuilt = crate::dfunctions::amplitude_from_dfunctions(p, &d);
                worst_amp = worst_amp.max((rebuilt - a.get(p)).norm());
            }
        }
        let mut col = [0.0f64; 6];
        for row in coefficient_table::<f64>() {
            col[0] += row.sym;
            col[1] += row.mixed_11;
            col[2] += row.mixed_00;
            col[3] += row.mixed_10;
            col[4] += row.mixed_01;
            col[5] += row.antisym;
        }
        let worst_col = (col[0] - 1.0)
            .abs()
            .max(col[1..].iter().fold(0.0f64, |acc, c| acc.max(c.abs())));
        checks.push(outcome(
            "dfunctions_closed_vs_immanants",
            1e-10,
            worst_closed,
        ));
        checks.push(outcome("dfunctions_mixed_real", 1e-10, worst_real));
        checks.push(outcome("determinant_unity_on_family", 1e-12, worst_det_one));
        checks.push(outcome("mixed_123_splits_into_d11", 1e-10, worst_mixed_sum));
        checks.push(outcome("amplitudes_from_dfunctions", 1e-10, worst_amp));
        checks.push(outcome("coefficient_column_sums", 1e-12, worst_col));
    }

    // -- rates --------------------------------------------------------------
    {
        let mut worst_simultaneous = 0.0f64;
        let mut worst_translation = 0.0f64;
        let mut worst_path = 0.0f64;
        let mut worst_pairs = 0.0f64;
        let mut worst_i12 = 0.0f64;
        let mut worst_distinct = 0.0f64;
        let mut worst_asym = 0.0f64;
        let mut worst_squares = 0.0f64;
        let mut worst_cross = 0.0f64;
        let mut worst_gram = 0.0f64;
        for _ in 0..trials {
            let omega = rng.octuple();
            let r = su3_matrix(&omega);
            let a = amplitude_vector(&r);
            let sigma = rng.uniform(0.2, 1.5);
            let tau = [
                rng.uniform(-5.0, 5.0),
                rng.uniform(-5.0, 5.0),
                rng.uniform(-5.0, 5.0),
            ];
            let spec = DelaySpec::new(tau, sigma).unwrap();

            let zero = DelaySpec::new([0.0; 3], sigma).unwrap();
            worst_simultaneous = worst_simultaneous
                .max((coincidence_rate(&omega, &zero) - permanent3(&r).norm_sqr()).abs());

            let shift = rng.uniform(-5.0, 5.0);
            let shifted =
                DelaySpec::new([tau[0] + shift, tau[1] + shift, tau[2] + shift], sigma).unwrap();
            worst_translation = worst_translation
                .max((coincidence_rate(&omega, &spec) - coincidence_rate(&omega, &shifted)).abs());

            worst_path = worst_path.max(
                (coincidence_rate(&omega, &spec) - direct_rate_expansion(&omega, &spec)).abs(),
            );

            let offset = rng.uniform(-4.0, 4.0);
            for (pair, deltas) in [
                (IdenticalPair::Pair23, (offset, 0.0)),
                (IdenticalPair::Pair12, (0.0, offset)),
                (IdenticalPair::Pair13, (offset, -offset)),
            ] {
                let closed = rate_two_identical(&omega, pair, offset, sigma).unwrap();
                let general = coincidence_rate(
                    &omega,
                    &DelaySpec::from_deltas(deltas.0, deltas.1, sigma).unwrap(),
                );
                worst_pairs = worst_pairs.max((closed - general).abs());
            }

            worst_i12 = worst_i12.max(
                (pair12_rate_via_i12(&omega, offset, sigma)
                    - rate_two_identical(&omega, IdenticalPair::Pair12, offset, sigma).unwrap())
                .abs(),
            );

            let closed = rate_all_distinct_equal_spacing(&omega, offset, sigma).unwrap();
            let general = coincidence_rate(
                &omega,
                &DelaySpec::from_deltas(offset, offset, sigma).unwrap(),
            );
            worst_distinct = worst_distinct.max((closed - general).abs());

            // asymptotic backgrounds at sigma*offset = 20
            let far = 20.0 / sigma;
            let [ga, gb, gc] = grouped_amplitudes(&a, IdenticalPair::Pair23);
            let incoherent = ga.norm_sqr() + gb.norm_sqr() + gc.norm_sqr();
            let general_far =
                coincidence_rate(&omega, &DelaySpec::from_deltas(far, 0.0, sigma).unwrap());
            worst_asym = worst_asym.max((general_far - incoherent).abs());
            let distinct_far = rate_all_distinct_equal_spacing(&omega, far, sigma).unwrap();
            worst_asym = worst_asym.max((distinct_far - a.sum_norm_sqr()).abs());

            // identities tying the grouped rate to the group functions
            let d = dfunctions_from_immanants(&immanant_set(&r));
            let d01_sq = d.d11[0][1].norm_sqr();
            let d11_sq = d.d11[1][1].norm_sqr();
            let d30_sq = d.d30.norm_sqr();
            worst_squares = worst_squares
                .max((incoherent - (2.0 / 3.0 * (d01_sq + d11_sq) + d30_sq / 3.0)).abs());
            let cross = 2.0 * ((ga.conj() * gb).re + (ga.conj() * gc).re + (gb.conj() * gc).re);
            worst_cross = worst_cross
                .max((cross - (-2.0 / 3.0 * (d01_sq + d11_sq) + 2.0 / 3.0 * d30_sq)).abs());

            // gram structure
            let m = gram_matrix(&spec);
            let e = m.entries();
            for (i, row) in e.iter().enumerate() {
                worst_gram = worst_gram.max((row[i] - 1.0).abs());
                for (j, &x) in row.iter().enumerate() {
                    worst_gram = worst_gram.max((x - e[j][i]).abs());
                }
            }
            worst_gram = worst_gram.max((-m.smallest_eigenvalue()).max(0.0));
            let half_sum = 0.5
                * ((tau[0] - tau[1]).powi(2)
                    + (tau[0] - tau[2]).powi(2)
                    + (tau[1] - tau[2]).powi(2));
            worst_gram = worst_gram.max((tau_c_squared(tau) - half_sum).abs());
        }
        checks.push(outcome(
            "simultaneity_squared_permanent",
            1e-12,
            worst_simultaneous,
        ));
        checks.push(outcome(
            "rate_translation_invariance",
            1e-12,
            worst_translation,
        ));
        checks.push(outcome("rate_path_36_term_expansion", 1e-12, worst_path));
        checks.push(outcome("two_identical_match_general", 1e-10, worst_pairs));
        checks.push(outcome("pair12_rate_via_i12_functions", 1e-10, worst_i12));
        checks.push(outcome("all_distinct_match_general", 1e-10, worst_distinct));
        checks.push(outcome("asymptotic_backgrounds", 1e-10, worst_asym));
        checks.push(outcome("sum_of_squares_identity", 1e-10, worst_squares));
        checks.push(outcome("cross_terms_identity", 1e-10, worst_cross));
        checks.push(outcome("gram_symmetric_unit_psd", 1e-10, worst_gram));
    }

    // -- landscape ----------------------------------------------------------
    {
        let mut worst = 0.0f64;
        let omega = rng.octuple();
        let r = su3_matrix(&omega);
        let grid = GridSpec::new(-6.0, 6.0, 7).unwrap();
        let ls = landscape(&omega, 0.4, &grid, &grid).unwrap();
        for row in ls.rates() {
            for &rate in row {
                worst = worst.max(-rate);
            }
        }
        // center node sits at (0, 0): squared permanent
        let center = ls.rates()[3][3];
        worst = worst.max((center - permanent3(&r).norm_sqr()).abs());
        checks.push(outcome("landscape_nonnegative_center", 1e-12, worst));
    }

    checks
}
