//! Scalar functions of the spectral parameter entering the functional
//! relations: xi, delta^(s), f0, f1, their product f, and the rescale
//! factors g and gamma.

use crate::error::{Error, Result};
use crate::params::ModelParams;
use num_complex::Complex64 as C64;

pub(crate) fn sh(z: C64) -> C64 {
    z.sinh()
}

pub(crate) fn ch(z: C64) -> C64 {
    z.cosh()
}

/// Guard radius for denominators that are genuine poles of the printed
/// expressions.
pub const POLE_GUARD: f64 = 1e-12;

/// xi(u) = sh(u+eta) sh(u-eta).
pub fn xi(u: C64, params: &ModelParams) -> C64 {
    let eta = params.eta();
    sh(u + eta) * sh(u - eta)
}

/// The fusion-hierarchy scalar delta^(s)(u).
pub fn delta_s(u: C64, params: &ModelParams) -> Result<C64> {
    let eta = params.eta();
    let d1 = sh(2.0 * u + eta);
    let d2 = sh(2.0 * u + 3.0 * eta);
    if d1.norm() < POLE_GUARD || d2.norm() < POLE_GUARD {
        return Err(Error::PoleAtDenominator {
            what: "delta_s",
            u: (u.re, u.im),
        });
    }
    Ok(delta_s_no_xi(u, params) * xi_power(u, params))
}

/// [prod_{k=0}^{2s-1} xi(u + (s-k+1/2) eta)]^{2N}.
pub(crate) fn xi_power(u: C64, params: &ModelParams) -> C64 {
    let eta = params.eta();
    let mut prod = C64::new(1.0, 0.0);
    for k in 0..params.two_s {
        let off = 0.5 * (f64::from(params.two_s) - 2.0 * f64::from(k) + 1.0);
        prod *= xi(u + off * eta, params);
    }
    prod.powu(2 * params.n as u32)
}

/// delta^(s) without its xi-power prefactor; used where that factor is
/// cancelled analytically against a rescaling.
pub(crate) fn delta_s_no_xi(u: C64, params: &ModelParams) -> C64 {
    let eta = params.eta();
    let ratio = sh(2.0 * u) * sh(2.0 * u + 4.0 * eta) / (sh(2.0 * u + eta) * sh(2.0 * u + 3.0 * eta));
    ratio * 16.0 * boundary_octet(u, params)
}

/// The eight boundary factors of delta^(s).
pub(crate) fn boundary_octet(u: C64, params: &ModelParams) -> C64 {
    let eta = params.eta();
    sh(u + params.alpha_minus + eta)
        * sh(u - params.alpha_minus + eta)
        * ch(u + params.beta_minus + eta)
        * ch(u - params.beta_minus + eta)
        * sh(u + params.alpha_plus + eta)
        * sh(u - params.alpha_plus + eta)
        * ch(u + params.beta_plus + eta)
        * ch(u - params.beta_plus + eta)
}

/// f0(u): parity- and spin-resolved prefactor of the scalar function f.
pub fn f0(u: C64, params: &ModelParams) -> C64 {
    let q = f64::from(params.q);
    let n = params.n as i32;
    let four_s_n = 2 * params.two_s as u32 * params.n as u32;
    let amp = 2f64.powi(-(2.0 * f64::from(params.two_s) * (q - 1.0)) as i32 * n);
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 }; // (-1)^{N+1}
    if params.odd_r() {
        if params.two_s % 2 == 1 {
            sign * amp * sh(q * u).powu(four_s_n)
        } else {
            sign * amp * ch(q * u).powu(four_s_n)
        }
    } else {
        // (-1)^{N+2} = (-1)^N
        -sign * amp * sh(q * u).powu(four_s_n)
    }
}

/// f1(u): the three-term bracket with prefactor (-1)^{N+1} 2^{5-2q}.
pub fn f1(u: C64, params: &ModelParams) -> C64 {
    let q = f64::from(params.q);
    let n = params.n;
    let t1 = sh(q * params.alpha_minus)
        * ch(q * params.beta_minus)
        * sh(q * params.alpha_plus)
        * ch(q * params.beta_plus)
        * ch(q * u).powu(2);
    let t2 = ch(q * params.alpha_minus)
        * sh(q * params.beta_minus)
        * ch(q * params.alpha_plus)
        * sh(q * params.beta_plus)
        * sh(q * u).powu(2);
    let t3 = ch(q * (params.theta_minus - params.theta_plus)) * sh(q * u).powu(2) * ch(q * u).powu(2);
    let theta_sign = if params.odd_r() {
        if params.two_s % 2 == 1 {
            // half-odd-integer s carries (-1)^N on the theta term
            if n % 2 == 0 {
                -1.0
            } else {
                1.0
            }
        } else {
            -1.0
        }
    } else {
        1.0
    };
    let pref = if n % 2 == 0 { -1.0 } else { 1.0 }; // (-1)^{N+1}
    pref * 2f64.powi(5 - 2 * params.q as i32) * (t1 - t2 + theta_sign * t3)
}

/// f(u) = f0(u) f1(u), the scalar side of the functional relations.
pub fn f_total(u: C64, params: &ModelParams) -> C64 {
    f0(u, params) * f1(u, params)
}

/// g^{(1/2,s)}(u)^{2N} = [prod_{k=1}^{2s-1} sh(u+(s-k+1/2) eta)]^{2N};
/// the empty product for s = 1/2 is 1.
pub fn g_rescale(u: C64, params: &ModelParams) -> C64 {
    let eta = params.eta();
    let mut prod = C64::new(1.0, 0.0);
    for k in 1..params.two_s {
        let off = 0.5 * (f64::from(params.two_s) - 2.0 * f64::from(k) + 1.0);
        prod *= sh(u + off * eta);
    }
    prod.powu(2 * params.n as u32)
}

/// gamma(u) = sh(2u) sh(2u+2eta) / [sh(u) sh(u+eta)]^{2N}.
pub fn gamma_rescale(u: C64, params: &ModelParams) -> Result<C64> {
    let eta = params.eta();
    let den = (sh(u) * sh(u + eta)).powu(2 * params.n as u32);
    if den.norm() < POLE_GUARD {
        return Err(Error::PoleAtDenominator {
            what: "gamma_rescale",
            u: (u.re, u.im),
        });
    }
    Ok(sh(2.0 * u) * sh(2.0 * u + 2.0 * eta) / den)
}
