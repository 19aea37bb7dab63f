//! Globally adaptive Gauss–Kronrod (10/21) quadrature.
//!
//! Infinite ranges are handled by truncation at a radius where the Gaussian
//! factor of the integrand drops below [`QuadratureConfig::weight_cutoff`],
//! or by mapping `[0, ∞)` onto `[0, 1)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Truncation radius policy: the Gaussian weight must fall below this value.
    pub weight_cutoff: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            weight_cutoff: 1e-18,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::Domain("quadrature tolerances must be positive".into()));
        }
        if self.max_subdivisions < 10 {
            return Err(Error::Domain("max_subdivisions must be at least 10".into()));
        }
        if !(self.weight_cutoff > 0.0 && self.weight_cutoff < 1.0) {
            return Err(Error::Domain("weight_cutoff must lie in (0, 1)".into()));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    /// `-ln(weight_cutoff)`, the exponent the Gaussian factor must reach.
    pub fn cutoff_exponent(&self) -> f64 {
        -self.weight_cutoff.ln()
    }

    /// Radius `R` with `exp(-c R²) · R^degree · e^degree` below the cutoff.
    /// The extra `e^degree` leaves room for polynomial coefficients.
    pub fn gaussian_radius(&self, c: f64, degree: u32) -> f64 {
        let target = self.cutoff_exponent();
        let d = f64::from(degree);
        let mut r = (target / c).sqrt().max(1.0);
        for _ in 0..20 {
            let next = ((target + d * (r.ln().max(0.0) + 1.0)) / c).sqrt();
            if (next - r).abs() < 1e-9 * r {
                r = next;
                break;
            }
            r = next;
        }
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

/// Result of an integral over an unbounded range that may fail to converge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Integral {
    Converged(QuadResult),
    /// Truncated integrals kept growing with the radius.
    Divergent { radius: f64, partial: f64 },
}

impl Integral {
    pub fn value(&self) -> Option<f64> {
        match self {
            Integral::Converged(q) => Some(q.value),
            Integral::Divergent { .. } => None,
        }
    }
}

#[allow(clippy::excessive_precision)]
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

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
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

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut gauss = 0.0;
    let mut kronrod = fc * WGK[10];
    let mut abs = fc.abs() * WGK[10];
    let mut values = [(0.0f64, 0.0f64); 10];
    for (j, &node) in XGK.iter().take(10).enumerate() {
        let dx = half * node;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[10] * (fc - mean).abs();
    for (j, (f1, f2)) in values.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = kronrod * half;
    let abs = abs * half.abs();
    let asc = asc * half.abs();
    if !value.is_finite() || !abs.is_finite() {
        return Err(Error::Overflow(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    // QUADPACK-style rescaling of |K21 - G10|
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    let round = 50.0 * f64::EPSILON * abs;
    if round > error {
        error = round;
    }
    Ok(Segment {
        a,
        b,
        value,
        error,
        abs,
    })
}

/// Adaptive integral of `f` over `[a, b]`, starting from `pieces` equal segments.
///
/// Stops once the summed error estimate is below
/// `max(abs_tol, rel_tol · ∫|f|)`.
pub fn integrate_pieces<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    pieces: usize,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    cfg.validate()?;
    let pieces = pieces.max(1);
    let mut heap = BinaryHeap::with_capacity(cfg.max_subdivisions + pieces);
    let width = (b - a) / pieces as f64;
    for i in 0..pieces {
        let lo = a + width * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + width };
        heap.push(kronrod21(&f, lo, hi)?);
    }
    let mut subdivisions = 0;
    loop {
        let (value, error, abs) = heap
            .iter()
            .fold((0.0, 0.0, 0.0), |(v, e, s), seg| (v + seg.value, e + seg.error, s + seg.abs));
        let tol = cfg.abs_tol.max(cfg.rel_tol * abs);
        if error <= tol {
            return Ok(QuadResult {
                value,
                abs_error: error,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::Quadrature {
                value,
                abs_error: error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot split further in floating point; keep the estimate
            return Ok(QuadResult {
                value,
                abs_error: error,
                subdivisions,
            });
        }
        heap.push(kronrod21(&f, worst.a, mid)?);
        heap.push(kronrod21(&f, mid, worst.b)?);
        subdivisions += 1;
    }
}

pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    integrate_pieces(f, a, b, 1, cfg)
}

/// `∫_{-R}^{R} f`, split symmetrically about the origin.
pub fn integrate_symmetric<F: Fn(f64) -> f64>(
    f: F,
    radius: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    integrate_pieces(f, -radius, radius, 16, cfg)
}

/// `∫_a^∞ f` through `x = a + u/(1-u)`.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    let mapped = |u: f64| {
        let w = 1.0 - u;
        let x = a + u / w;
        let v = f(x);
        if v == 0.0 {
            0.0
        } else {
            v / (w * w)
        }
    };
    integrate_pieces(mapped, 0.0, 1.0, 8, cfg)
}

/// Integrates `f` over `[-R, R]` for doubling radii. Reports divergence when
/// the truncated value overflows or grows by more than `growth` between the
/// first and last radius; otherwise returns the last value.
pub fn probe_growth<F: Fn(f64) -> f64>(
    f: F,
    first_radius: f64,
    doublings: u32,
    growth: f64,
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    let mut first = None;
    let mut radius = first_radius;
    let mut last = None;
    for _ in 0..=doublings {
        let q = match integrate_symmetric(&f, radius, cfg) {
            Ok(q) => q,
            Err(Error::Overflow(_)) => {
                return Ok(Integral::Divergent {
                    radius,
                    partial: f64::INFINITY,
                })
            }
            Err(e) => return Err(e),
        };
        let base = *first.get_or_insert(q.value.abs().max(f64::MIN_POSITIVE));
        if q.value.abs() > growth * base {
            return Ok(Integral::Divergent {
                radius,
                partial: q.value,
            });
        }
        last = Some(q);
        radius *= 2.0;
    }
    Ok(Integral::Converged(last.expect("at least one radius is probed")))
}
