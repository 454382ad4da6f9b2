//! Polynomial root finding through the companion matrix.

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::eigen::eig;
use num_complex::Complex64 as C64;

/// Roots of sum_k coeffs[k] x^k (ascending order, complex coefficients).
///
/// The leading coefficient must carry meaningful weight relative to the
/// largest one; otherwise the degree is ill-defined and the caller's
/// extraction was rank deficient.
pub fn polynomial_roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let maxc = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if maxc == 0.0 {
        return Err(Error::Numerical("zero polynomial".into()));
    }
    let lead = coeffs.len() - 1;
    if coeffs[lead].norm() < 1e-10 * maxc {
        return Err(Error::RankDeficiency(coeffs[lead].norm() / maxc));
    }
    let deg = lead;
    if deg == 0 {
        return Ok(vec![]);
    }
    let mut comp = CMatrix::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -coeffs[i] / coeffs[deg];
    }
    let dec = eig(&comp)?;
    Ok(dec.values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn quadratic_and_known_roots() {
        // (x - 2)(x + 1) = x^2 - x - 2
        let mut roots = polynomial_roots(&[c(-2.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((roots[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((roots[1] - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn product_reconstruction() {
        // roots r_k, coefficients by expansion, recover the multiset
        let want = [c(0.3, 0.7), c(-1.1, 0.2), c(0.0, -0.9), c(2.0, 0.1)];
        let mut coeffs = vec![c(1.0, 0.0)];
        for r in want {
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (k, &cf) in coeffs.iter().enumerate() {
                next[k + 1] += cf;
                next[k] -= r * cf;
            }
            coeffs = next;
        }
        let got = polynomial_roots(&coeffs).unwrap();
        for r in want {
            let best = got.iter().map(|g| (g - r).norm()).fold(f64::INFINITY, f64::min);
            assert!(best < 1e-10, "missing root {r}");
        }
    }

    #[test]
    fn degenerate_leading_coefficient_rejected() {
        let r = polynomial_roots(&[c(1.0, 0.0), c(1.0, 0.0), c(1e-14, 0.0)]);
        assert!(matches!(r, Err(Error::RankDeficiency(_))));
    }
}
