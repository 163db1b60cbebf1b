//! Generalized Gauss–Laguerre rules and the singular quadrature for
//! I^α[f](x) = (1/π)·PV∫_0^∞ f(t) t^α e^{−t}/(t−x) dt.

use crate::error::{Error, Result};
use crate::gfun::bisect;
use crate::real::{from_usize, lit, to_f64, Compensated, Real};
use crate::specfun::{gamma_real, kummer_phi_scaled, laguerre_pair, ln_factorial, ln_gamma};
use std::io::Write;

/// Eigenvalues of a symmetric tridiagonal matrix (implicit QL), ascending.
/// `diag` has length n, `off` length n−1.
fn tridiagonal_eigenvalues<T: Real>(diag: &[T], off: &[T]) -> Result<Vec<T>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(T::zero());
    let two = lit::<T>(2.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::ConvergenceFailure { index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + if g >= T::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Roots of L_n^α, from the Jacobi matrix of the recurrence then Newton-polished.
pub fn laguerre_zeros<T: Real>(n: usize, alpha: T) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::Domain("Laguerre zeros need n ≥ 1".into()));
    }
    if !(alpha > -T::one()) {
        return Err(Error::Domain(format!("Laguerre order must exceed -1, got {}", alpha)));
    }
    let diag: Vec<T> = (0..n).map(|k| lit::<T>(2.0) * from_usize::<T>(k) + T::one() + alpha).collect();
    let off: Vec<T> = (1..n).map(|k| (from_usize::<T>(k) * (from_usize::<T>(k) + alpha)).sqrt()).collect();
    let mut x = tridiagonal_eigenvalues(&diag, &off)?;
    let nf = from_usize::<T>(n);
    for (i, xi) in x.iter_mut().enumerate() {
        let mut done = false;
        let mut prev = T::infinity();
        for _ in 0..50 {
            let (ln, lm) = laguerre_pair(n, alpha, *xi);
            let dl = (nf * ln - (nf + alpha) * lm) / *xi;
            let step = ln / dl;
            // stop at the rounding floor, where steps no longer shrink
            if step.abs() >= prev && step.abs() <= lit::<T>(1e-10) * xi.abs() {
                done = true;
                break;
            }
            *xi = *xi - step;
            prev = step.abs();
            if step.abs() <= lit::<T>(4.0) * T::epsilon() * xi.abs() {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::ConvergenceFailure { index: i });
        }
    }
    Ok(x)
}

/// Gauss rule for the weight t^α e^{−t} on (0, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLaguerreRule<T> {
    pub alpha: T,
    pub n: usize,
    pub nodes: Vec<T>,
    /// Christoffel coefficients A_m.
    pub weights: Vec<T>,
    /// γ_m = −x_m/((n+α) L_{n−1}^α(x_m)).
    pub gammas: Vec<T>,
}

impl<T: Real> GaussLaguerreRule<T> {
    pub fn new(n: usize, alpha: T) -> Result<Self> {
        let nodes = laguerre_zeros(n, alpha)?;
        let nf = from_usize::<T>(n);
        let lead = (ln_gamma(alpha + nf) - ln_factorial::<T>(n)).exp();
        let mut weights = Vec::with_capacity(n);
        let mut gammas = Vec::with_capacity(n);
        for &x in &nodes {
            let prev = laguerre_pair(n - 1, alpha, x).0;
            weights.push(lead * x / ((nf + alpha) * prev * prev));
            gammas.push(-x / ((nf + alpha) * prev));
        }
        Ok(Self { alpha, n, nodes, weights, gammas })
    }

    /// Σ A_m g(x_m) ≈ ∫_0^∞ g(t) t^α e^{−t} dt.
    pub fn integrate<F: Fn(T) -> T>(&self, g: F) -> T {
        let mut acc = Compensated::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * g(x));
        }
        acc.value()
    }
}

/// Q_n^α(x) = (1/π)·PV∫_0^∞ t^α e^{−t} L_n^α(t)/(t−x) dt, with its sign-change zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct QnEvaluator<T> {
    pub alpha: T,
    pub n: usize,
    pub zeros: Vec<T>,
    gamma_alpha: T,
    cot: T,
}

impl<T: Real> QnEvaluator<T> {
    /// Builds the evaluator and scans (0, 4n+20] for zeros.
    pub fn new(n: usize, alpha: T) -> Result<Self> {
        let mut q = Self::without_zeros(n, alpha)?;
        q.zeros = q.find_zeros(lit::<T>(4.0) * from_usize::<T>(n) + lit(20.0))?;
        Ok(q)
    }

    pub fn without_zeros(n: usize, alpha: T) -> Result<Self> {
        if !(alpha > -T::one()) {
            return Err(Error::Domain(format!("Laguerre order must exceed -1, got {}", alpha)));
        }
        let s = (T::PI() * alpha).sin();
        if s.abs() < lit(1e-6) {
            return Err(Error::AlphaNearInteger(to_f64(alpha)));
        }
        let cot = (T::PI() * alpha).cos() / s;
        Ok(Self { alpha, n, zeros: Vec::new(), gamma_alpha: gamma_real(alpha)?, cot })
    }

    fn check(&self, x: T) -> Result<()> {
        if !(x > T::zero()) {
            return Err(Error::Domain(format!("Q_n needs x > 0, got {}", x)));
        }
        Ok(())
    }

    /// Closed form beyond the turning point 4n+2α+2, where it is free of cancellation;
    /// inside, the three-term recurrence started at the index whose turning point is x.
    pub fn eval(&self, x: T) -> Result<T> {
        Ok(self.value_and_slope(x, false)?.0)
    }

    pub fn deriv(&self, x: T) -> Result<T> {
        Ok(self.value_and_slope(x, true)?.1)
    }

    fn value_and_slope(&self, x: T, slope: bool) -> Result<(T, T)> {
        self.check(x)?;
        let a = self.alpha;
        let k0 = ((x - lit::<T>(2.0) * a - lit(2.0)) / lit(4.0)).floor().max(T::zero()).to_usize().unwrap_or(usize::MAX);
        let closed = |k: usize| -> Result<(T, T)> {
            let d = if slope { self.closed_deriv(k, x)? } else { T::zero() };
            Ok((self.closed_form(k, x)?, d))
        };
        if self.n < 2 || k0 + 1 >= self.n {
            return closed(self.n);
        }
        let (mut prev, mut cur) = (closed(k0)?, closed(k0 + 1)?);
        for k in k0 + 1..self.n {
            let kf = from_usize::<T>(k);
            let b = lit::<T>(2.0) * kf + T::one() + a - x;
            let next = ((b * cur.0 - (kf + a) * prev.0) / (kf + T::one()), (b * cur.1 - cur.0 - (kf + a) * prev.1) / (kf + T::one()));
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// Γ(α)/π·e^{−x}Φ(−n−α, 1−α; x) − cot(πα)·x^α e^{−x} L_n^α(x).
    fn closed_form(&self, n: usize, x: T) -> Result<T> {
        let a = self.alpha;
        let nf = from_usize::<T>(n);
        let phi = kummer_phi_scaled(-nf - a, T::one() - a, x)?.value;
        let ln = laguerre_pair(n, a, x).0;
        Ok(self.gamma_alpha / T::PI() * phi - self.cot * x.powf(a) * (-x).exp() * ln)
    }

    fn closed_deriv(&self, n: usize, x: T) -> Result<T> {
        let a = self.alpha;
        let nf = from_usize::<T>(n);
        let phi0 = kummer_phi_scaled(-nf - a, T::one() - a, x)?.value;
        let phi1 = kummer_phi_scaled(-nf - a + T::one(), lit::<T>(2.0) - a, x)?.value;
        let first = self.gamma_alpha / T::PI() * ((nf + a) / (a - T::one()) * phi1 - phi0);
        let (ln, lm) = laguerre_pair(n, a, x);
        let second = x.powf(a - T::one()) * (-x).exp() * ((nf + a - x) * ln - (nf + a) * lm);
        Ok(first - self.cot * second)
    }

    /// Sign-change zeros on (0, cap], scanned with step 0.05 (geometrically refined below
    /// the first step, where the x^α term can turn the sign) and bisected.
    pub fn find_zeros(&self, cap: T) -> Result<Vec<T>> {
        let step = lit::<T>(0.05);
        let count = (cap / step).to_usize().unwrap_or(0);
        let mut grid: Vec<T> = (1..=24).rev().map(|k| step * lit::<T>(0.5).powi(k)).collect();
        grid.extend((1..=count).map(|i| step * from_usize::<T>(i)));
        let f = |x: T| self.eval(x);
        let mut out = Vec::new();
        let mut a = grid[0];
        let mut fa = f(a)?;
        for &b in &grid[1..] {
            let fb = f(b)?;
            if fa == T::zero() {
                out.push(a);
            } else if fa * fb < T::zero() {
                out.push(bisect(&f, a, b, fa)?);
            }
            a = b;
            fa = fb;
        }
        Ok(out)
    }
}

fn check_pair<T: Real>(rule: &GaussLaguerreRule<T>, q: &QnEvaluator<T>) -> Result<()> {
    if rule.n != q.n || rule.alpha != q.alpha {
        return Err(Error::Domain("rule and Q_n evaluator parameters differ".into()));
    }
    Ok(())
}

/// I^α[f](x) ≈ Σ γ_m f(x_m)(Q_n^α(x) − Q_n^α(x_m))/(x − x_m); exact for polynomials of degree < n.
/// Near a node the divided difference is replaced by the derivative.
pub fn singular_quad<T: Real, F: Fn(T) -> T>(rule: &GaussLaguerreRule<T>, q: &QnEvaluator<T>, f: F, x: T) -> Result<T> {
    check_pair(rule, q)?;
    let qx = q.eval(x)?;
    let near = lit::<T>(1e-8) * x.abs().max(T::one());
    let mut acc = Compensated::new();
    for (&xm, &g) in rule.nodes.iter().zip(&rule.gammas) {
        let term = if (x - xm).abs() < near {
            g * f(xm) * q.deriv(xm)?
        } else {
            g * f(xm) * (qx - q.eval(xm)?) / (x - xm)
        };
        acc.add(term);
    }
    Ok(acc.value())
}

/// (1/π) Σ A_m f(x_m)/(x_m − ξ) at a zero ξ of Q_n^α; exact for polynomials of degree 2n.
pub fn pv_at_xi<T: Real, F: Fn(T) -> T>(rule: &GaussLaguerreRule<T>, xi: T, f: F) -> Result<T> {
    let mut acc = Compensated::new();
    for (&xm, &a) in rule.nodes.iter().zip(&rule.weights) {
        if (xm - xi).abs() < lit::<T>(1e-10) * xi.abs().max(T::one()) {
            return Err(Error::NodeCollision { x: to_f64(xi), node: to_f64(xm) });
        }
        acc.add(a * f(xm) / (xm - xi));
    }
    Ok(acc.value() / T::PI())
}

/// Error bound 2(2Γ(α+1)/π + |Q_n^α(x)| Σ|γ_m|)·ẽ, or 4Γ(α+1)/π·ẽ at a zero of Q_n^α.
pub fn remainder_bound<T: Real>(rule: &GaussLaguerreRule<T>, q: &QnEvaluator<T>, x: T, e_tilde: T) -> Result<T> {
    check_pair(rule, q)?;
    let g1 = gamma_real(rule.alpha + T::one())?;
    if q.zeros.iter().any(|&z| (z - x).abs() <= lit::<T>(1e-10) * z.abs().max(T::one())) {
        return Ok(lit::<T>(4.0) * g1 / T::PI() * e_tilde);
    }
    let sum = rule.gammas.iter().fold(T::zero(), |s, g| s + g.abs());
    Ok(lit::<T>(2.0) * (lit::<T>(2.0) * g1 / T::PI() + q.eval(x)?.abs() * sum) * e_tilde)
}

/// CSV with columns m, x_m, A_m, gamma_m and a `#` metadata line.
pub fn write_rule_csv<T: Real, W: Write>(rule: &GaussLaguerreRule<T>, out: W) -> Result<()> {
    let mut out = out;
    writeln!(out, "# gauss-laguerre rule n={} alpha={:.16e}", rule.n, to_f64(rule.alpha))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "x_m", "A_m", "gamma_m"])?;
    for i in 0..rule.n {
        w.write_record([
            (i + 1).to_string(),
            format!("{:.16e}", to_f64(rule.nodes[i])),
            format!("{:.16e}", to_f64(rule.weights[i])),
            format!("{:.16e}", to_f64(rule.gammas[i])),
        ])?;
    }
    w.flush()?;
    Ok(())
}
