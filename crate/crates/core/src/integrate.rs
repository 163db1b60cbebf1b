//! Adaptive Gauss–Kronrod integration, semi-infinite tails and fixed Gauss–Legendre rules.

use crate::error::{Error, Result};
use crate::real::{from_usize, lit, Quantity, Real};

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

/// Result of an integration with its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<V, T> {
    pub value: V,
    pub error: T,
    pub evaluations: usize,
}

impl<T: Real, V: Quantity<T>> Estimate<V, T> {
    fn zero() -> Self {
        Self { value: V::zero(), error: T::zero(), evaluations: 0 }
    }

    fn absorb(&mut self, other: &Estimate<V, T>) {
        self.value = self.value + other.value;
        self.error = self.error + other.error;
        self.evaluations += other.evaluations;
    }
}

/// Tolerances for adaptive integration; the target is max(abs_tol, rel_tol·|I|).
#[derive(Debug, Clone, Copy)]
pub struct AdaptiveConfig<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_subdivisions: usize,
}

impl<T: Real> AdaptiveConfig<T> {
    pub fn new(tol: T, max_subdivisions: usize) -> Self {
        Self { abs_tol: tol, rel_tol: tol, max_subdivisions }
    }
}

impl<T: Real> Default for AdaptiveConfig<T> {
    fn default() -> Self {
        Self::new(lit(1e-10), 2000)
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment<V, T> {
    a: T,
    b: T,
    value: V,
    error: T,
}

/// 21-point Gauss–Kronrod rule on [a, b] with the QUADPACK error heuristic.
pub fn gk21<T, V, F>(f: &F, a: T, b: T) -> (V, T)
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
{
    let half = lit::<T>(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let abs_half = half_len.abs();
    let fc = f(center);
    let mut res_g = V::zero();
    let mut res_k = fc * lit::<T>(WGK[10]);
    let mut res_abs = fc.magnitude() * lit::<T>(WGK[10]);
    let mut fv1 = [V::zero(); 10];
    let mut fv2 = [V::zero(); 10];
    for j in 0..10 {
        let dx = half_len * lit::<T>(XGK[j]);
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let wk = lit::<T>(WGK[j]);
        res_k = res_k + (f1 + f2) * wk;
        res_abs = res_abs + (f1.magnitude() + f2.magnitude()) * wk;
        if j % 2 == 1 {
            res_g = res_g + (f1 + f2) * lit::<T>(WG[j / 2]);
        }
    }
    let mean = res_k * half;
    let mut res_asc = (fc - mean).magnitude() * lit::<T>(WGK[10]);
    for j in 0..10 {
        res_asc = res_asc + ((fv1[j] - mean).magnitude() + (fv2[j] - mean).magnitude()) * lit::<T>(WGK[j]);
    }
    let result = res_k * half_len;
    let res_abs = res_abs * abs_half;
    let res_asc = res_asc * abs_half;
    let mut err = ((res_k - res_g) * half_len).magnitude();
    if res_asc != T::zero() && err != T::zero() {
        err = res_asc * T::one().min((lit::<T>(200.0) * err / res_asc).powf(lit(1.5)));
    }
    let eps = T::epsilon();
    if res_abs > T::min_positive_value() / (lit::<T>(50.0) * eps) {
        err = err.max(lit::<T>(50.0) * eps * res_abs);
    }
    if !result.is_finite_value() {
        err = T::infinity();
    }
    (result, err)
}

/// Globally adaptive bisection over the intervals defined by `points` (sorted, at least two).
pub fn adaptive<T, V, F>(f: &F, points: &[T], cfg: &AdaptiveConfig<T>) -> Result<Estimate<V, T>>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
{
    assert!(points.len() >= 2, "adaptive integration needs at least two points");
    let mut segs: Vec<Segment<V, T>> = Vec::with_capacity(points.len() + 64);
    for w in points.windows(2) {
        if w[1] == w[0] {
            continue;
        }
        let (value, error) = gk21(f, w[0], w[1]);
        segs.push(Segment { a: w[0], b: w[1], value, error });
    }
    let mut evaluations = segs.len() * 21;
    if segs.is_empty() {
        return Ok(Estimate::zero());
    }
    let eps = T::epsilon();
    loop {
        let mut total = V::zero();
        let mut err = T::zero();
        for s in &segs {
            total = total + s.value;
            err = err + s.error;
        }
        let target = cfg.abs_tol.max(cfg.rel_tol * total.magnitude());
        if err <= target {
            return Ok(Estimate { value: total, error: err, evaluations });
        }
        // worst splittable segment
        let mut worst: Option<usize> = None;
        for (i, s) in segs.iter().enumerate() {
            let mid = lit::<T>(0.5) * (s.a + s.b);
            let width = (s.b - s.a).abs();
            let splittable = width > lit::<T>(100.0) * eps * mid.abs().max(T::min_positive_value());
            if splittable && worst.map_or(true, |w| s.error > segs[w].error) {
                worst = Some(i);
            }
        }
        let worst = match worst {
            Some(w) if segs.len() < cfg.max_subdivisions => w,
            _ => {
                if err <= lit::<T>(10.0) * target {
                    return Ok(Estimate { value: total, error: err, evaluations });
                }
                return Err(Error::NonConvergence {
                    what: "adaptive quadrature",
                    estimate: err.to_f64().unwrap_or(f64::INFINITY),
                });
            }
        };
        let s = segs[worst];
        let mid = lit::<T>(0.5) * (s.a + s.b);
        let (v1, e1) = gk21(f, s.a, mid);
        let (v2, e2) = gk21(f, mid, s.b);
        evaluations += 42;
        segs[worst] = Segment { a: s.a, b: mid, value: v1, error: e1 };
        segs.insert(worst + 1, Segment { a: mid, b: s.b, value: v2, error: e2 });
    }
}

/// ∫_a^b f by adaptive quadrature.
pub fn integrate<T, V, F>(f: &F, a: T, b: T, cfg: &AdaptiveConfig<T>) -> Result<Estimate<V, T>>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
{
    adaptive(f, &[a, b], cfg)
}

/// ∫_a^∞ f over doubling panels, stopping once two consecutive panels fall below `tail_eps`.
pub fn tail_geometric<T, V, F>(
    f: &F,
    a: T,
    tail_eps: T,
    cfg: &AdaptiveConfig<T>,
) -> Result<Estimate<V, T>>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
{
    let mut total = Estimate::zero();
    let mut lo = a;
    let mut width = a.abs().max(T::one());
    let mut quiet = 0;
    for _ in 0..400 {
        let hi = lo + width;
        let panel = adaptive(f, &[lo, hi], cfg)?;
        total.absorb(&panel);
        if panel.value.magnitude() <= tail_eps {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        width = width * lit(2.0);
        if !lo.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence { what: "semi-infinite tail", estimate: total.value.magnitude().to_f64().unwrap_or(f64::NAN) })
}

/// ∫_0^a f for integrands with an algebraic endpoint singularity at 0: substitutes t = u²
/// and splits [0, √a] at geometrically shrinking breakpoints.
pub fn from_origin<T, V, F>(f: &F, a: T, cfg: &AdaptiveConfig<T>) -> Result<Estimate<V, T>>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
{
    if !(a > T::zero()) {
        return Ok(Estimate::zero());
    }
    let ua = a.sqrt();
    let mut points: Vec<T> = (0..12).rev().map(|k| ua * lit::<T>(0.1).powi(k)).collect();
    points.insert(0, T::zero());
    let two = lit::<T>(2.0);
    let g = |u: T| f(u * u) * (two * u);
    adaptive(&g, &points, cfg)
}

/// Iterated averaging of a partial-sum sequence (repeated pairwise means).
pub fn iterated_average<T: Real, V: Quantity<T>>(sums: &[V], levels: usize) -> V {
    let mut work: Vec<V> = sums.to_vec();
    let half = lit::<T>(0.5);
    for _ in 0..levels.min(sums.len().saturating_sub(1)) {
        work = work.windows(2).map(|w| (w[0] + w[1]) * half).collect();
    }
    *work.last().unwrap()
}

/// ∫ over the panels [b_k, b_{k+1}], k = 0, 1, …, of an oscillatory integrand whose
/// consecutive panels alternate in sign; partial sums are accelerated by iterated averaging.
pub fn tail_oscillatory<T, V, F, B>(
    f: &F,
    boundary: B,
    tol: T,
    max_panels: usize,
    cfg: &AdaptiveConfig<T>,
) -> Result<Estimate<V, T>>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V + ?Sized,
    B: Fn(usize) -> T,
{
    const LEVELS: usize = 12;
    let mut sums: Vec<V> = Vec::new();
    let mut acc = V::zero();
    let mut err = T::zero();
    let mut evaluations = 0;
    let mut prev: Option<V> = None;
    let mut settled = 0;
    let mut lo = boundary(0);
    for k in 0..max_panels {
        let hi = boundary(k + 1);
        // long half periods (slow oscillation) get doubling sub-panels so that a decaying
        // integrand is not missed by the first rule
        let mut pts = vec![lo];
        let mut w = lo.abs().max(T::one());
        let mut p = lo + w;
        while p < hi {
            pts.push(p);
            w = w * lit(2.0);
            p = p + w;
        }
        pts.push(hi);
        let panel = adaptive(f, &pts, cfg)?;
        evaluations += panel.evaluations;
        err = err + panel.error;
        acc = acc + panel.value;
        sums.push(acc);
        lo = hi;
        if sums.len() > LEVELS + 2 {
            let window = &sums[sums.len() - (LEVELS + 1)..];
            let est = iterated_average::<T, V>(window, LEVELS);
            if let Some(p) = prev {
                if (est - p).magnitude() <= tol {
                    settled += 1;
                    if settled >= 2 {
                        return Ok(Estimate { value: est, error: err + (est - p).magnitude(), evaluations });
                    }
                } else {
                    settled = 0;
                }
            }
            prev = Some(est);
        }
    }
    Err(Error::NonConvergence {
        what: "oscillatory tail",
        estimate: prev.map(|p| p.magnitude().to_f64().unwrap_or(f64::NAN)).unwrap_or(f64::NAN),
    })
}

/// n-point Gauss–Legendre nodes and weights on [-1, 1], ascending.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = from_usize::<T>(n);
    for i in 0..n.div_ceil(2) {
        let mut x = (T::PI() * (from_usize::<T>(i) + lit(0.75)) / (nf + lit(0.5))).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= T::epsilon() * lit(4.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != T::zero() { d } else { dp };
        let w = lit::<T>(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    (nodes, weights)
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (T::one(), T::zero());
    }
    for k in 2..=n {
        let kf = from_usize::<T>(k);
        let p2 = ((lit::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = from_usize::<T>(n);
    (p1, nf * (x * p1 - p0) / (x * x - T::one()))
}
