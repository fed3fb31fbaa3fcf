//! Floating-point root approximation (Aberth–Ehrlich iteration).
//!
//! This is the only inexact routine in the crate. Nothing decides an exact
//! predicate from its output.

use num_traits::ToPrimitive;

pub use num_complex::Complex64;

use super::{IntPoly, PolyError};

pub const MAX_ROOT_ITERATIONS: usize = 2000;

/// Residual bound: `|f(z)| <= RESIDUAL_SCALE * sum |c_i| |z|^i`.
const RESIDUAL_SCALE: f64 = 1e-9;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn magnitude_sum(c: &[f64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * r + a.abs())
}

/// All complex roots of `f`, with multiplicity, to relative accuracy
/// roughly `tol`. Every returned root satisfies the residual bound above
/// (after normalizing `f` to a monic floating-point polynomial).
pub fn numeric_roots(f: &IntPoly, tol: f64) -> Result<Vec<Complex64>, PolyError> {
    let n = f.degree().filter(|&d| d >= 1).ok_or(PolyError::DegreeTooSmall(1))?;
    let lc = f.leading().to_f64().unwrap_or(f64::INFINITY);
    let c: Vec<f64> = f.coeffs().iter().map(|a| a.to_f64().unwrap_or(f64::NAN) / lc).collect();
    if c.iter().any(|a| !a.is_finite()) {
        return Err(PolyError::NoConvergence(0));
    }
    // Factor out roots at zero exactly; they are common for chromatic polynomials.
    let zeros = c.iter().take_while(|a| **a == 0.0).count();
    let c = &c[zeros..];
    let m = n - zeros;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if m == 0 {
        return Ok(roots);
    }

    // Cauchy bound for the initial circle.
    let radius = 1.0 + c[..m].iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / m as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, theta)
        })
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ROOT_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..m {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..m {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < tol * 1e-3 {
            converged = true;
            break;
        }
    }
    let ok = z.iter().all(|&r| {
        let (p, _) = horner(c, r);
        p.norm() <= RESIDUAL_SCALE.max(tol * 1e-3) * magnitude_sum(c, r.norm()).max(1.0)
    });
    if !converged && !ok {
        return Err(PolyError::NoConvergence(MAX_ROOT_ITERATIONS));
    }
    roots.extend(z);
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}
