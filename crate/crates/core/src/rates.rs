//! Three-photon coincidence rates for arbitrary arrival times, the
//! special-case closed forms, and two-delay landscape grids.
//!
//! The general rate is the quadratic form `a* M a`: `a` is the six-component
//! amplitude vector of the interferometer matrix and `M` the 6x6 Gram matrix
//! of Gaussian wavepacket overlaps between permuted arrival-time assignments.
//! Rates depend on the arrival times only through pairwise differences, so
//! the two relative delays `(delta1, delta2) = (tau2 - tau1, tau3 - tau2)`
//! parametrize everything.

use num_complex::Complex;

use crate::dfunctions::dfunctions_from_immanants;
use crate::error::{Error, Result};
use crate::immanants::immanant_set;
use crate::linalg::sym6_smallest_eigenvalue;
use crate::perm::Perm3;
use crate::su3::{amplitude_vector, su3_matrix, AmplitudeVector, OmegaSu3};
use crate::{conv, ensure_finite, ensure_sigma, Real};

/// Photon arrival times `(tau1, tau2, tau3)` and the spectral width `sigma`
/// (inverse time units). Rates depend on `tau` only through differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DelaySpec<R> {
    tau: [R; 3],
    sigma: R,
}

impl<R: Real> DelaySpec<R> {
    pub fn new(tau: [R; 3], sigma: R) -> Result<Self> {
        for (name, &t) in ["tau1", "tau2", "tau3"].iter().zip(tau.iter()) {
            ensure_finite(name, t)?;
        }
        ensure_sigma(sigma)?;
        Ok(Self { tau, sigma })
    }

    /// Arrival times `(0, delta1, delta1 + delta2)` realizing the relative
    /// delays `(delta1, delta2)`.
    pub fn from_deltas(delta1: R, delta2: R, sigma: R) -> Result<Self> {
        ensure_finite("delta1", delta1)?;
        ensure_finite("delta2", delta2)?;
        Self::new([R::zero(), delta1, delta1 + delta2], sigma)
    }

    pub fn tau(&self) -> [R; 3] {
        self.tau
    }

    pub fn sigma(&self) -> R {
        self.sigma
    }

    /// The relative delays `(tau2 - tau1, tau3 - tau2)`.
    pub fn deltas(&self) -> (R, R) {
        (self.tau[1] - self.tau[0], self.tau[2] - self.tau[1])
    }
}

/// Squared symmetric time spread entering the fully-permuted overlaps:
/// `|tau|^2 - tau2 tau3 - tau1 tau2 - tau1 tau3`, identically equal to
/// half the sum of squared pairwise differences, hence never negative.
pub fn tau_c_squared<R: Real>(tau: [R; 3]) -> R {
    let [t1, t2, t3] = tau;
    t1 * t1 + t2 * t2 + t3 * t3 - t2 * t3 - t1 * t2 - t1 * t3
}

/// The 6x6 symmetric Gram matrix of Gaussian overlaps, indexed by output
/// assignments in lexicographic order.
#[derive(Clone, Copy, Debug)]
pub struct GramMatrix6<R> {
    entries: [[R; 6]; 6],
}

impl<R: Real> GramMatrix6<R> {
    pub fn entries(&self) -> &[[R; 6]; 6] {
        &self.entries
    }

    pub fn entry(&self, v: Perm3, w: Perm3) -> R {
        self.entries[v.index()][w.index()]
    }

    /// Smallest eigenvalue; non-negative up to rounding since the matrix is
    /// a Gram matrix of wavepacket overlaps.
    pub fn smallest_eigenvalue(&self) -> R {
        sym6_smallest_eigenvalue(&self.entries)
    }
}

/// Builds the overlap matrix for a delay specification.
///
/// With `g(x) = exp(-sigma^2 x)` and `dij = (taui - tauj)^2` the matrix is
///
/// ```text
///        123        132        213        231        312        321
/// 123 [  1          g(d23)     g(d12)     g(tc)      g(tc)      g(d13) ]
/// 132 [  g(d23)     1          g(tc)      g(d13)     g(d12)     g(tc)  ]
/// 213 [  g(d12)     g(tc)      1          g(d23)     g(d13)     g(tc)  ]
/// 231 [  g(tc)      g(d13)     g(d23)     1          g(tc)      g(d12) ]
/// 312 [  g(tc)      g(d12)     g(d13)     g(tc)      1          g(d23) ]
/// 321 [  g(d13)     g(tc)      g(tc)      g(d12)     g(d23)     1      ]
/// ```
///
/// where `tc` is [`tau_c_squared`]. Symmetric with unit diagonal and
/// positive semidefinite.
///
/// # Panics
///
/// If the two algebraic routes to `tc` disagree beyond rounding, which would
/// indicate a bug rather than bad input.
pub fn gram_matrix<R: Real>(spec: &DelaySpec<R>) -> GramMatrix6<R> {
    let [t1, t2, t3] = spec.tau;
    let d12 = (t1 - t2) * (t1 - t2);
    let d13 = (t1 - t3) * (t1 - t3);
    let d23 = (t2 - t3) * (t2 - t3);
    let tc = tau_c_squared(spec.tau);
    let half_sum = conv::<R>(0.5) * (d12 + d13 + d23);
    let scale = (d12 + d13 + d23).max(R::one());
    // 1e-12 at f64; widens with epsilon for lower-precision scalars
    let tol = conv::<R>(1e-12).max(R::epsilon() * conv::<R>(8.0));
    assert!(
        (tc - half_sum).abs() <= tol * scale && tc >= -tol * scale,
        "tau_c identity violated: direct {tc}, half-sum {half_sum}"
    );
    let tc = tc.max(R::zero());

    let s2 = spec.sigma * spec.sigma;
    let g12 = (-s2 * d12).exp();
    let g13 = (-s2 * d13).exp();
    let g23 = (-s2 * d23).exp();
    let gc = (-s2 * tc).exp();
    let one = R::one();
    GramMatrix6 {
        entries: [
            [one, g23, g12, gc, gc, g13],
            [g23, one, gc, g13, g12, gc],
            [g12, gc, one, g23, g13, gc],
            [gc, g13, g23, one, gc, g12],
            [gc, g12, g13, gc, one, g23],
            [g13, gc, gc, g12, g23, one],
        ],
    }
}

fn quadratic_form<R: Real>(a: &AmplitudeVector<R>, m: &GramMatrix6<R>) -> R {
    let comps = a.as_array();
    let mut total = R::zero();
    for (v, &av) in comps.iter().enumerate() {
        for (w, &aw) in comps.iter().enumerate() {
            total += m.entries[v][w] * (av.conj() * aw).re;
        }
    }
    total
}

/// Three-photon coincidence rate `a* M a` for an interferometer octuple and
/// a delay specification. Non-negative because the Gram matrix is positive
/// semidefinite; returned unclamped, so values can sit a rounding error
/// below zero when the rate vanishes.
pub fn coincidence_rate<R: Real>(omega: &OmegaSu3<R>, spec: &DelaySpec<R>) -> R {
    let a = amplitude_vector(&su3_matrix(omega));
    quadratic_form(&a, &gram_matrix(spec))
}

/// Which two photons arrive together in the two-identical-photon rate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdenticalPair {
    /// Photons 2 and 3 together, photon 1 offset: delays `(tau, 0)`.
    Pair23,
    /// Photons 1 and 2 together, photon 3 offset: delays `(0, tau)`.
    Pair12,
    /// Photons 1 and 3 together, photon 2 offset: delays `(tau, -tau)`.
    Pair13,
}

/// The grouped amplitudes `(A, B, C)` for an identical pair: the six
/// components pair up by the label exchange that fixes the identical photons.
pub fn grouped_amplitudes<R: Real>(a: &AmplitudeVector<R>, pair: IdenticalPair) -> [Complex<R>; 3] {
    use Perm3::*;
    let groups = match pair {
        IdenticalPair::Pair23 => [(P123, P132), (P213, P231), (P321, P312)],
        IdenticalPair::Pair12 => [(P123, P213), (P132, P312), (P231, P321)],
        IdenticalPair::Pair13 => [(P123, P321), (P132, P231), (P213, P312)],
    };
    groups.map(|(x, y)| a.get(x) + a.get(y))
}

/// Coincidence rate when two photons arrive together and the third is offset
/// by `tau`:
///
/// ```text
///   |A|^2 + |B|^2 + |C|^2
///     + e^{-sigma^2 tau^2} [ (A* + B*) C + (A* + C*) B + (B* + C*) A ]
/// ```
///
/// At `tau = 0` the square completes to `|A + B + C|^2 = |per R|^2`; at
/// large `tau` only the incoherent sum survives.
pub fn rate_two_identical<R: Real>(
    omega: &OmegaSu3<R>,
    pair: IdenticalPair,
    tau: R,
    sigma: R,
) -> Result<R> {
    ensure_finite("tau", tau)?;
    ensure_sigma(sigma)?;
    let a = amplitude_vector(&su3_matrix(omega));
    let [ga, gb, gc] = grouped_amplitudes(&a, pair);
    let incoherent = ga.norm_sqr() + gb.norm_sqr() + gc.norm_sqr();
    let cross = conv::<R>(2.0) * ((ga.conj() * gb).re + (ga.conj() * gc).re + (gb.conj() * gc).re);
    let overlap = (-(sigma * sigma * tau * tau)).exp();
    Ok(incoherent + overlap * cross)
}

/// Coincidence rate for three equally spaced photons, delays
/// `(delta, delta)`:
///
/// ```text
///   C_A + 1/6 e^{-4 s} (|d30|^2 - d00^2 + C_B)
///       + 1/2 e^{-3 s} (|d30|^2 + d00^2 - 2 C_A)
///       + 1/3 e^{-s}   (|d30|^2 - d00^2 - C_B / 2)
/// ```
///
/// with `s = sigma^2 delta^2`, `C_A` the sum of squared amplitude
/// magnitudes, and `C_B` the fixed quadratic in the four mixed functions:
/// `d(0,0)^2 - 2 sqrt3 d(0,0) d(0,1) - d(0,1)^2 + d(1,0)^2
///  - 2 sqrt3 d(1,0) d(1,1) - d(1,1)^2`.
pub fn rate_all_distinct_equal_spacing<R: Real>(
    omega: &OmegaSu3<R>,
    delta: R,
    sigma: R,
) -> Result<R> {
    ensure_finite("delta", delta)?;
    ensure_sigma(sigma)?;
    let r = su3_matrix(omega);
    let a = amplitude_vector(&r);
    let d = dfunctions_from_immanants(&immanant_set(&r));

    let c_a = a.sum_norm_sqr();
    let two_s3 = conv::<R>(2.0) * conv::<R>(3.0).sqrt();
    let (m00, m01, m10, m11) = (d.d11[0][0], d.d11[0][1], d.d11[1][0], d.d11[1][1]);
    let c_b = m00.norm_sqr() - two_s3 * (m00 * m01).re - m01.norm_sqr() + m10.norm_sqr()
        - two_s3 * (m10 * m11).re
        - m11.norm_sqr();
    let d30_sq = d.d30.norm_sqr();
    let d00_sq = (d.d00 * d.d00).re;

    let s = sigma * sigma * delta * delta;
    let g1 = (-s).exp();
    let g3 = (-conv::<R>(3.0) * s).exp();
    let g4 = (-conv::<R>(4.0) * s).exp();
    Ok(c_a
        + conv::<R>(1.0 / 6.0) * g4 * (d30_sq - d00_sq + c_b)
        + conv::<R>(0.5) * g3 * (d30_sq + d00_sq - conv::<R>(2.0) * c_a)
        + conv::<R>(1.0 / 3.0) * g1 * (d30_sq - d00_sq - c_b * conv::<R>(0.5)))
}

/// Uniformly spaced axis for one landscape dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec<R> {
    pub min: R,
    pub max: R,
    pub steps: usize,
}

impl<R: Real> GridSpec<R> {
    pub fn new(min: R, max: R, steps: usize) -> Result<Self> {
        ensure_finite("grid min", min)?;
        ensure_finite("grid max", max)?;
        if steps < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 steps per axis, got {steps}"
            )));
        }
        if min >= max {
            return Err(Error::InvalidGrid(format!(
                "grid min {min} must be below max {max}"
            )));
        }
        Ok(Self { min, max, steps })
    }

    /// The axis values, inclusive of both endpoints.
    pub fn values(&self) -> Vec<R> {
        let span = self.max - self.min;
        let denom = conv::<R>((self.steps - 1) as f64);
        (0..self.steps)
            .map(|k| self.min + span * conv::<R>(k as f64) / denom)
            .collect()
    }
}

/// Coincidence rate sampled over a rectangular grid of relative delays,
/// with `rates[i][j]` at `(delta1[i], delta2[j])`.
#[derive(Clone, Debug)]
pub struct RateLandscape<R> {
    delta1: Vec<R>,
    delta2: Vec<R>,
    rates: Vec<Vec<R>>,
    omega: OmegaSu3<R>,
    sigma: R,
}

impl<R: Real> RateLandscape<R> {
    pub fn delta1(&self) -> &[R] {
        &self.delta1
    }

    pub fn delta2(&self) -> &[R] {
        &self.delta2
    }

    pub fn rates(&self) -> &[Vec<R>] {
        &self.rates
    }

    pub fn omega(&self) -> &OmegaSu3<R> {
        &self.omega
    }

    pub fn sigma(&self) -> R {
        self.sigma
    }

    /// Rate along the equal-delay locus `(d, d)` for each `d` on the first
    /// axis. Values at shared grid nodes match the full grid exactly.
    pub fn diagonal_slice(&self) -> Result<Vec<(R, R)>> {
        let a = amplitude_vector(&su3_matrix(&self.omega));
        self.delta1
            .iter()
            .map(|&d| Ok((d, eval_node(&a, d, d, self.sigma)?)))
            .collect()
    }

    /// Rate along the opposed-delay locus `(d, -d)` for each `d` on the
    /// first axis (photons 1 and 3 simultaneous).
    pub fn antidiagonal_slice(&self) -> Result<Vec<(R, R)>> {
        let a = amplitude_vector(&su3_matrix(&self.omega));
        self.delta1
            .iter()
            .map(|&d| Ok((d, eval_node(&a, d, -d, self.sigma)?)))
            .collect()
    }
}

/// Output-side clamp shared by landscape nodes and the CLI: negatives within
/// the rounding floor of a vanishing rate become zero, anything more negative
/// is an error. The floor is 1e-12 at f64, widened with epsilon for
/// lower-precision scalars.
pub fn clamp_rate<R: Real>(raw: R) -> Result<R> {
    let floor = -conv::<R>(1e-12).max(R::epsilon() * conv::<R>(16.0));
    if raw >= R::zero() {
        Ok(raw)
    } else if raw >= floor {
        Ok(R::zero())
    } else {
        Err(Error::Numerical(format!(
            "coincidence rate {raw} below the PSD floor"
        )))
    }
}

fn eval_node<R: Real>(a: &AmplitudeVector<R>, delta1: R, delta2: R, sigma: R) -> Result<R> {
    let spec = DelaySpec::from_deltas(delta1, delta2, sigma)?;
    clamp_rate(quadratic_form(a, &gram_matrix(&spec)))
}

/// Sweeps the coincidence rate over `grid1 x grid2`. The amplitude vector is
/// fixed by `omega`, so it is computed once and reused across nodes; node
/// order never affects values.
pub fn landscape<R: Real>(
    omega: &OmegaSu3<R>,
    sigma: R,
    grid1: &GridSpec<R>,
    grid2: &GridSpec<R>,
) -> Result<RateLandscape<R>> {
    ensure_sigma(sigma)?;
    GridSpec::new(grid1.min, grid1.max, grid1.steps)?;
    GridSpec::new(grid2.min, grid2.max, grid2.steps)?;
    let delta1 = grid1.values();
    let delta2 = grid2.values();
    let a = amplitude_vector(&su3_matrix(omega));
    let mut rates = Vec::with_capacity(delta1.len());
    for &d1 in &delta1 {
        let mut row = Vec::with_capacity(delta2.len());
        for &d2 in &delta2 {
            row.push(eval_node(&a, d1, d2, sigma)?);
        }
        rates.push(row);
    }
    Ok(RateLandscape {
        delta1,
        delta2,
        rates,
        omega: *omega,
        sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::immanants::permanent3;

    fn spec(tau: [f64; 3], sigma: f64) -> DelaySpec<f64> {
        DelaySpec::new(tau, sigma).unwrap()
    }

    #[test]
    fn zero_delays_give_all_ones_matrix() {
        let m = gram_matrix(&spec([0.0, 0.0, 0.0], 1.0));
        for row in m.entries() {
            for &x in row {
                assert!((x - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn widely_spaced_delays_give_identity() {
        let m = gram_matrix(&spec([0.0, 20.0, 40.0], 1.0));
        for (i, row) in m.entries().iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((x - expect).abs() < 1e-12, "entry ({i},{j}) = {x}");
            }
        }
    }

    #[test]
    fn middle_photon_offset_pattern() {
        // tau = (0, t, 0): d23 = d12 = t^2, d13 = 0, tau_c^2 = t^2.
        let t = 1.3f64;
        let m = gram_matrix(&spec([0.0, t, 0.0], 0.8));
        let g = (-(0.8f64 * 0.8) * t * t).exp();
        assert!((tau_c_squared([0.0, t, 0.0]) - t * t).abs() < 1e-14);
        assert!((m.entry(Perm3::P123, Perm3::P321) - 1.0).abs() < 1e-15); // d13
        assert!((m.entry(Perm3::P123, Perm3::P132) - g).abs() < 1e-15); // d23
        assert!((m.entry(Perm3::P123, Perm3::P213) - g).abs() < 1e-15); // d12
        assert!((m.entry(Perm3::P123, Perm3::P231) - g).abs() < 1e-15); // tau_c
    }

    #[test]
    fn gram_is_symmetric_with_unit_diagonal() {
        let m = gram_matrix(&spec([0.3, -1.2, 0.9], 0.7));
        for i in 0..6 {
            assert!((m.entries()[i][i] - 1.0).abs() < 1e-15);
            for j in 0..6 {
                assert!((m.entries()[i][j] - m.entries()[j][i]).abs() < 1e-15);
            }
        }
        assert!(m.smallest_eigenvalue() > -1e-10);
    }

    #[test]
    fn identity_interferometer_rate_is_one_everywhere() {
        let omega = OmegaSu3::<f64>::zero();
        for tau in [[0.0, 0.0, 0.0], [0.5, -2.0, 7.0], [1.0, 1.0, -1.0]] {
            let rate = coincidence_rate(&omega, &spec(tau, 1.1));
            assert!((rate - 1.0).abs() < 1e-14, "tau {tau:?}: rate {rate}");
        }
    }

    #[test]
    fn simultaneous_rate_is_squared_permanent() {
        let omega = OmegaSu3::new([0.3, 1.4, -0.5, 0.9, 2.0, 0.4, 1.1, -0.7]).unwrap();
        let rate = coincidence_rate(&omega, &spec([0.0; 3], 0.4));
        let per = permanent3(&su3_matrix(&omega));
        assert!((rate - per.norm_sqr()).abs() < 1e-13);
    }

    #[test]
    fn two_identical_at_zero_offset_is_squared_permanent() {
        let omega = OmegaSu3::new([1.0f64, 0.6, 0.2, 2.2, -0.9, 1.5, 0.0, 0.4]).unwrap();
        let per_sq = permanent3(&su3_matrix(&omega)).norm_sqr();
        for pair in [
            IdenticalPair::Pair23,
            IdenticalPair::Pair12,
            IdenticalPair::Pair13,
        ] {
            let rate = rate_two_identical(&omega, pair, 0.0, 0.9).unwrap();
            assert!((rate - per_sq).abs() < 1e-13, "{pair:?}");
        }
    }

    #[test]
    fn all_distinct_collapses_at_zero_spacing() {
        let omega = OmegaSu3::new([1.0f64, 0.6, 0.2, 2.2, -0.9, 1.5, 0.3, 0.4]).unwrap();
        let per_sq = permanent3(&su3_matrix(&omega)).norm_sqr();
        let rate = rate_all_distinct_equal_spacing(&omega, 0.0, 0.5).unwrap();
        assert!((rate - per_sq).abs() < 1e-12);
    }

    #[test]
    fn sigma_validation() {
        let omega = OmegaSu3::<f64>::zero();
        assert!(rate_two_identical(&omega, IdenticalPair::Pair23, 1.0, 0.0).is_err());
        assert!(rate_all_distinct_equal_spacing(&omega, 1.0, -2.0).is_err());
        assert!(DelaySpec::new([0.0; 3], -1.0).is_err());
        assert!(DelaySpec::new([f64::INFINITY, 0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn deltas_round_trip() {
        let s = DelaySpec::from_deltas(1.5, -0.75, 0.5).unwrap();
        assert_eq!(s.tau(), [0.0, 1.5, 0.75]);
        assert_eq!(s.deltas(), (1.5, -0.75));
        let t = DelaySpec::new([2.0, 3.5, 2.75], 0.5).unwrap();
        assert_eq!(t.deltas(), (1.5, -0.75));
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 1).is_err());
        assert!(GridSpec::new(1.0, 1.0, 5).is_err());
        assert!(GridSpec::new(2.0, -2.0, 5).is_err());
        let g = GridSpec::new(-1.0, 1.0, 3).unwrap();
        assert_eq!(g.values(), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn landscape_of_identity_interferometer() {
        let omega = OmegaSu3::<f64>::zero();
        let g = GridSpec::new(-5.0, 5.0, 3).unwrap();
        let ls = landscape(&omega, 1.0, &g, &g).unwrap();
        assert_eq!(ls.rates().len(), 3);
        for row in ls.rates() {
            for &rate in row {
                assert!((rate - 1.0).abs() < 1e-14);
            }
        }
        let diag = ls.diagonal_slice().unwrap();
        assert_eq!(diag.len(), 3);
        assert!((diag[1].1 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn slices_match_grid_nodes() {
        let omega = OmegaSu3::new([0.7, 1.9, -0.3, 1.1, 0.5, 2.6, -1.0, 0.8]).unwrap();
        let g = GridSpec::new(-4.0, 4.0, 5).unwrap();
        let ls = landscape(&omega, 0.6, &g, &g).unwrap();
        let diag = ls.diagonal_slice().unwrap();
        let anti = ls.antidiagonal_slice().unwrap();
        for (k, &d) in ls.delta1().iter().enumerate() {
            // (d, d) is the node (k, k); (d, -d) is the node (k, steps-1-k)
            assert_eq!(diag[k].1, ls.rates()[k][k], "diag node {k} at {d}");
            assert_eq!(anti[k].1, ls.rates()[k][4 - k], "anti node {k} at {d}");
        }
    }

    #[test]
    fn clamp_accepts_rounding_noise_only() {
        assert_eq!(clamp_rate(-5e-13_f64).unwrap(), 0.0);
        assert_eq!(clamp_rate(0.25_f64).unwrap(), 0.25);
        assert!(clamp_rate(-1e-9_f64).is_err());
    }
}
