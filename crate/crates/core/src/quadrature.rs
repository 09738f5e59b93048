//! Adaptive Gauss–Kronrod (10/21-point) integration on finite intervals.
//!
//! Semi-infinite integrals with an exponentially decaying weight are handled
//! by the callers, which pick a truncation point from a crude integrand bound
//! and hand the finite interval to [`integrate`].

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Abscissae of the 21-point Kronrod rule on [-1, 1] (non-negative half).
/// Odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Tolerance and limits for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<F> {
    /// Target absolute error of the integral.
    pub abs_tol: F,
    /// Hard truncation of the integration variable on semi-infinite ranges.
    pub y_max_cap: F,
    /// Maximum number of subintervals before giving up.
    pub max_subdivisions: usize,
}

impl<F: Real> QuadratureConfig<F> {
    pub fn new(abs_tol: F, y_max_cap: F, max_subdivisions: usize) -> Result<Self> {
        let cfg = QuadratureConfig {
            abs_tol,
            y_max_cap,
            max_subdivisions,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.abs_tol.is_nan() || self.abs_tol <= F::zero() {
            return Err(Error::domain(
                "abs_tol",
                self.abs_tol.as_f64(),
                "abs_tol > 0",
            ));
        }
        if !self.y_max_cap.is_finite() || self.y_max_cap <= F::zero() {
            return Err(Error::domain(
                "y_max_cap",
                self.y_max_cap.as_f64(),
                "0 < y_max_cap < inf",
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain(
                "max_subdivisions",
                0.0,
                "max_subdivisions >= 1",
            ));
        }
        Ok(())
    }
}

impl<F: Real> Default for QuadratureConfig<F> {
    /// `abs_tol` is 1e-12, raised to a few hundred ulps for `f32`.
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: F::lit(1e-12).max(F::epsilon() * F::lit(256.0)),
            y_max_cap: F::lit(50.0),
            max_subdivisions: 2000,
        }
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral<F> {
    pub value: F,
    pub abs_err: F,
    pub subdivisions: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<F> {
    lo: F,
    hi: F,
    value: F,
    err: F,
}

impl<F: Real> PartialEq for Segment<F> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<F: Real> Eq for Segment<F> {}

impl<F: Real> PartialOrd for Segment<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Real> Ord for Segment<F> {
    // Largest error first; ties broken by position so the refinement order
    // never depends on heap internals.
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .partial_cmp(&other.err)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.lo.partial_cmp(&self.lo).unwrap_or(Ordering::Equal))
    }
}

/// Single 21-point Kronrod evaluation with the embedded 10-point Gauss rule.
/// Returns `(kronrod, |kronrod - gauss|)`.
fn gauss_kronrod_21<F: Real, G: Fn(F) -> F>(f: &G, lo: F, hi: F) -> (F, F) {
    let half = F::lit(0.5);
    let center = half * (lo + hi);
    let half_len = half * (hi - lo);

    let f_center = f(center);
    let mut kronrod = f_center * F::lit(WGK[10]);
    let mut gauss = F::zero();

    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(10).enumerate() {
        let dx = half_len * F::lit(x);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + F::lit(wk) * pair;
        if j % 2 == 1 {
            gauss = gauss + F::lit(WG[j / 2]) * pair;
        }
    }

    let value = kronrod * half_len;
    let err = ((kronrod - gauss) * half_len).abs();
    (value, err)
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`.
///
/// Interior breakpoints seed the initial mesh. Subintervals are bisected in
/// order of decreasing error estimate until the summed estimate is at most
/// `abs_tol`; exceeding `max_subdivisions` intervals is an error.
pub fn integrate<F, G>(
    f: G,
    breakpoints: &[F],
    abs_tol: F,
    max_subdivisions: usize,
) -> Result<Integral<F>>
where
    F: Real,
    G: Fn(F) -> F,
{
    if breakpoints.len() < 2 {
        return Err(Error::domain(
            "breakpoints",
            breakpoints.len() as f64,
            "at least two breakpoints",
        ));
    }
    if breakpoints
        .windows(2)
        .any(|w| w[0].is_nan() || w[1].is_nan() || w[0] >= w[1])
    {
        return Err(Error::domain(
            "breakpoints",
            f64::NAN,
            "strictly increasing finite breakpoints",
        ));
    }

    let mut heap = BinaryHeap::with_capacity(max_subdivisions.max(breakpoints.len()));
    let mut evaluations = 0usize;
    for w in breakpoints.windows(2) {
        let (value, err) = gauss_kronrod_21(&f, w[0], w[1]);
        evaluations += 21;
        heap.push(Segment {
            lo: w[0],
            hi: w[1],
            value,
            err,
        });
    }

    let total_err =
        |heap: &BinaryHeap<Segment<F>>| heap.iter().fold(F::zero(), |acc, s| acc + s.err);

    let mut err = total_err(&heap);
    while err > abs_tol || !err.is_finite() {
        if heap.len() >= max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                abs_err: err.as_f64(),
                abs_tol: abs_tol.as_f64(),
                subdivisions: heap.len(),
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = F::lit(0.5) * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) {
            // interval can no longer be split in this precision
            return Err(Error::QuadratureNonConvergence {
                abs_err: err.as_f64(),
                abs_tol: abs_tol.as_f64(),
                subdivisions: heap.len() + 1,
            });
        }
        for (lo, hi) in [(worst.lo, mid), (mid, worst.hi)] {
            let (value, e) = gauss_kronrod_21(&f, lo, hi);
            evaluations += 21;
            heap.push(Segment {
                lo,
                hi,
                value,
                err: e,
            });
        }
        err = total_err(&heap);
    }

    let mut segments = heap.into_vec();
    segments.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap_or(Ordering::Equal));
    let value = segments.iter().fold(F::zero(), |acc, s| acc + s.value);
    Ok(Integral {
        value,
        abs_err: err,
        subdivisions: segments.len(),
        evaluations,
    })
}
