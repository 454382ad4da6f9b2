//! Model parameters: chain size, spin, anisotropy integers and boundary data.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Which two boundary parameters are left arbitrary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCase {
    /// One arbitrary beta and one arbitrary alpha; the remaining beta is
    /// pinned to eta and the remaining alpha to i*pi/2.
    AlphaBeta,
    /// Arbitrary alpha_- and alpha_+; beta_+- = eta.
    AlphaAlpha,
    /// Arbitrary beta_- and beta_+; alpha_+- = eta. Odd r only.
    BetaBeta,
}

impl BoundaryCase {
    pub fn label(self) -> &'static str {
        match self {
            BoundaryCase::AlphaBeta => "alpha_beta",
            BoundaryCase::AlphaAlpha => "alpha_alpha",
            BoundaryCase::BetaBeta => "beta_beta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Minus => "minus",
            Side::Plus => "plus",
        }
    }
}

/// Full parameter set of the open chain.
///
/// The anisotropy is always the root-of-unity value i*pi*r/q and is derived
/// from the integers on demand; it is never stored or user-supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub n: usize,
    pub two_s: u32,
    pub r: u32,
    pub q: u32,
    pub alpha_minus: C64,
    pub alpha_plus: C64,
    pub beta_minus: C64,
    pub beta_plus: C64,
    pub theta_minus: C64,
    pub theta_plus: C64,
    pub case: BoundaryCase,
    pub free_alpha_side: Side,
    pub free_beta_side: Side,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

const FIX_TOL: f64 = 1e-12;

fn close(a: C64, b: C64) -> bool {
    (a - b).norm() <= FIX_TOL * (1.0 + a.norm().max(b.norm()))
}

impl ModelParams {
    /// Validating constructor over the full field set.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: usize,
        two_s: u32,
        r: u32,
        q: u32,
        alpha_minus: C64,
        alpha_plus: C64,
        beta_minus: C64,
        beta_plus: C64,
        theta: C64,
        case: BoundaryCase,
        free_alpha_side: Side,
        free_beta_side: Side,
    ) -> Result<Self> {
        let p = Self {
            n,
            two_s,
            r,
            q,
            alpha_minus,
            alpha_plus,
            beta_minus,
            beta_plus,
            theta_minus: theta,
            theta_plus: theta,
            case,
            free_alpha_side,
            free_beta_side,
        };
        p.validate()?;
        Ok(p)
    }

    /// Case 1: one arbitrary alpha (on `alpha_side`) and one arbitrary beta
    /// (on `beta_side`); the other alpha is i*pi/2 and the other beta is eta.
    #[allow(clippy::too_many_arguments)]
    pub fn case1(
        n: usize,
        two_s: u32,
        r: u32,
        q: u32,
        alpha_side: Side,
        alpha: C64,
        beta_side: Side,
        beta: C64,
        theta: C64,
    ) -> Result<Self> {
        let eta = eta_of(r, q);
        let half_ipi = C64::new(0.0, PI / 2.0);
        let (am, ap) = match alpha_side {
            Side::Minus => (alpha, half_ipi),
            Side::Plus => (half_ipi, alpha),
        };
        let (bm, bp) = match beta_side {
            Side::Minus => (beta, eta),
            Side::Plus => (eta, beta),
        };
        Self::new(
            n,
            two_s,
            r,
            q,
            am,
            ap,
            bm,
            bp,
            theta,
            BoundaryCase::AlphaBeta,
            alpha_side,
            beta_side,
        )
    }

    /// Case 2: arbitrary alpha_-, alpha_+; beta_+- pinned to eta.
    pub fn case2(
        n: usize,
        two_s: u32,
        r: u32,
        q: u32,
        alpha_minus: C64,
        alpha_plus: C64,
        theta: C64,
    ) -> Result<Self> {
        let eta = eta_of(r, q);
        Self::new(
            n,
            two_s,
            r,
            q,
            alpha_minus,
            alpha_plus,
            eta,
            eta,
            theta,
            BoundaryCase::AlphaAlpha,
            Side::Minus,
            Side::Minus,
        )
    }

    /// Case 3: arbitrary beta_-, beta_+; alpha_+- pinned to eta. Odd r only
    /// has a Bethe-ansatz solution; even r is rejected downstream.
    pub fn case3(
        n: usize,
        two_s: u32,
        r: u32,
        q: u32,
        beta_minus: C64,
        beta_plus: C64,
        theta: C64,
    ) -> Result<Self> {
        let eta = eta_of(r, q);
        Self::new(
            n,
            two_s,
            r,
            q,
            eta,
            eta,
            beta_minus,
            beta_plus,
            theta,
            BoundaryCase::BetaBeta,
            Side::Minus,
            Side::Minus,
        )
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        if self.two_s == 0 {
            return Err(Error::InvalidParams("two_s must be positive".into()));
        }
        if self.r == 0 {
            return Err(Error::InvalidParams("r must be positive".into()));
        }
        if self.q < 3 || self.q % 2 == 0 {
            return Err(Error::InvalidParams(format!(
                "q must be an odd integer >= 3, got {}",
                self.q
            )));
        }
        if gcd(self.r, self.q) != 1 {
            return Err(Error::InvalidParams(format!(
                "r/q must be an irreducible fraction, got {}/{}",
                self.r, self.q
            )));
        }
        if !close(self.theta_minus, self.theta_plus) {
            return Err(Error::InvalidParams(
                "theta_minus and theta_plus must be equal".into(),
            ));
        }
        let eta = self.eta();
        let half_ipi = C64::new(0.0, PI / 2.0);
        match self.case {
            BoundaryCase::AlphaAlpha => {
                if !close(self.beta_minus, eta) || !close(self.beta_plus, eta) {
                    return Err(Error::InvalidParams(
                        "case alpha_alpha requires beta_-+ = eta".into(),
                    ));
                }
            }
            BoundaryCase::BetaBeta => {
                if !close(self.alpha_minus, eta) || !close(self.alpha_plus, eta) {
                    return Err(Error::InvalidParams(
                        "case beta_beta requires alpha_-+ = eta".into(),
                    ));
                }
            }
            BoundaryCase::AlphaBeta => {
                let fixed_alpha = match self.free_alpha_side {
                    Side::Minus => self.alpha_plus,
                    Side::Plus => self.alpha_minus,
                };
                let fixed_beta = match self.free_beta_side {
                    Side::Minus => self.beta_plus,
                    Side::Plus => self.beta_minus,
                };
                if !close(fixed_alpha, half_ipi) {
                    return Err(Error::InvalidParams(
                        "case alpha_beta requires the non-free alpha = i*pi/2".into(),
                    ));
                }
                if !close(fixed_beta, eta) {
                    return Err(Error::InvalidParams(
                        "case alpha_beta requires the non-free beta = eta".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Anisotropy eta = i*pi*r/q, reconstructed exactly from the integers.
    pub fn eta(&self) -> C64 {
        eta_of(self.r, self.q)
    }

    /// Spin s as a float (two_s/2).
    pub fn s(&self) -> f64 {
        f64::from(self.two_s) / 2.0
    }

    pub fn odd_r(&self) -> bool {
        self.r % 2 == 1
    }

    /// (-1)^{2sN}, the parity that flips several boundary factors.
    pub fn spin_site_sign(&self) -> f64 {
        if (self.two_s as usize * self.n) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Number of Bethe roots for one level.
    pub fn m_roots(&self) -> usize {
        let base = self.two_s as usize * self.n + self.q as usize;
        match self.case {
            BoundaryCase::AlphaAlpha => base + 1,
            BoundaryCase::AlphaBeta | BoundaryCase::BetaBeta => base - 1,
        }
    }

    /// Crossing shift sigma in the second Q factor sh((u + u_j + sigma)/2).
    pub fn crossing_shift(&self) -> C64 {
        match self.case {
            BoundaryCase::AlphaAlpha | BoundaryCase::AlphaBeta => {
                -(f64::from(self.q) - 1.0) * self.eta()
            }
            BoundaryCase::BetaBeta => self.eta(),
        }
    }

    /// Argument of the crossed h in the T-Q relation and Bethe equations.
    pub fn mirror(&self, u: C64) -> C64 {
        match self.case {
            BoundaryCase::AlphaAlpha | BoundaryCase::AlphaBeta => {
                -u + (f64::from(self.q) - 1.0) * self.eta()
            }
            BoundaryCase::BetaBeta => -u - self.eta(),
        }
    }

    /// The arbitrary alpha (Case 1; for Case 2 both are free, returns the
    /// side requested at construction).
    pub fn free_alpha(&self) -> C64 {
        match self.free_alpha_side {
            Side::Minus => self.alpha_minus,
            Side::Plus => self.alpha_plus,
        }
    }

    pub fn free_beta(&self) -> C64 {
        match self.free_beta_side {
            Side::Minus => self.beta_minus,
            Side::Plus => self.beta_plus,
        }
    }

    /// Hilbert-space dimension (2s+1)^N.
    pub fn hilbert_dim(&self) -> usize {
        (self.two_s as usize + 1).pow(self.n as u32)
    }
}

/// eta = i*pi*r/q.
pub fn eta_of(r: u32, q: u32) -> C64 {
    C64::new(0.0, PI * f64::from(r) / f64::from(q))
}

/// Reduce Im(u) into the canonical strip (-pi, pi].
pub fn reduce_to_strip(u: C64) -> C64 {
    let mut im = u.im;
    if im.is_finite() {
        im -= 2.0 * PI * ((im + PI) / (2.0 * PI)).floor();
        // floor form yields [-pi, pi); map the lower edge to the upper one
        if im <= -PI {
            im += 2.0 * PI;
        }
    }
    C64::new(u.re, im)
}
