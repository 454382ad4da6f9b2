//! Dense operator construction: R-matrix, boundary K-matrices, the
//! fundamental transfer matrix and its derivative, and the operator-level
//! functional-relation residual.

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::scalars::{self, ch, sh};
use num_complex::Complex64 as C64;

const MAX_SITES: usize = 12;

/// The 4x4 bulk R-matrix on aux (x) site, aux index slowest.
pub fn r_matrix(u: C64, params: &ModelParams) -> CMatrix {
    let eta = params.eta();
    let zero = C64::new(0.0, 0.0);
    let a = sh(u + eta);
    let b = sh(u);
    let c = sh(eta);
    CMatrix::from_rows(&[
        &[a, zero, zero, zero],
        &[zero, b, c, zero],
        &[zero, c, b, zero],
        &[zero, zero, zero, a],
    ])
}

/// Left boundary matrix K^-(u).
pub fn k_minus(u: C64, params: &ModelParams) -> CMatrix {
    k_components(
        u,
        params.alpha_minus,
        params.beta_minus,
        params.theta_minus,
    )
}

/// Right boundary matrix K^+(u) = K^-(-u-eta) under
/// (alpha_-, beta_-, theta_-) -> (-alpha_+, -beta_+, theta_+).
pub fn k_plus(u: C64, params: &ModelParams) -> CMatrix {
    k_components(
        -u - params.eta(),
        -params.alpha_plus,
        -params.beta_plus,
        params.theta_plus,
    )
}

fn k_components(u: C64, alpha: C64, beta: C64, theta: C64) -> CMatrix {
    let diag_even = 2.0 * sh(alpha) * ch(beta) * ch(u);
    let diag_odd = 2.0 * ch(alpha) * sh(beta) * sh(u);
    let off = sh(2.0 * u);
    CMatrix::from_rows(&[
        &[diag_even + diag_odd, theta.exp() * off],
        &[(-theta).exp() * off, diag_even - diag_odd],
    ])
}

/// Operator on the N-site quantum space acting as `m` on `site` (1-based;
/// site 1 occupies the fastest-varying index).
pub fn site_operator(m: &CMatrix, site: usize, n: usize) -> CMatrix {
    let d = m.dim();
    let lo = d.pow((site - 1) as u32);
    let hi = d.pow((n - site) as u32);
    CMatrix::identity(hi).kron(m).kron(&CMatrix::identity(lo))
}

/// Right-multiply `x` in place by the single-site operator `m` at `site`.
fn mul_site_right(x: &CMatrix, m: &CMatrix, site: usize, n: usize) -> CMatrix {
    let dim = 1usize << n;
    debug_assert_eq!(x.dim(), dim);
    debug_assert_eq!(m.dim(), 2);
    let bit = 1usize << (site - 1);
    let mut out = CMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let c0 = c & !bit;
            let c1 = c | bit;
            let sel = usize::from(c & bit != 0);
            out[(r, c)] = x[(r, c0)] * m[(0, sel)] + x[(r, c1)] * m[(1, sel)];
        }
    }
    out
}

/// 2x2 block matrix over the auxiliary space with operator entries.
struct AuxBlocks {
    b: [CMatrix; 4], // row-major aux blocks
}

impl AuxBlocks {
    fn from_scalar_k(k: &CMatrix, dim: usize) -> Self {
        let id = CMatrix::identity(dim);
        Self {
            b: [
                id.scale(k[(0, 0)]),
                id.scale(k[(0, 1)]),
                id.scale(k[(1, 0)]),
                id.scale(k[(1, 1)]),
            ],
        }
    }

    fn r_blocks(u: C64, params: &ModelParams) -> [CMatrix; 4] {
        let r = r_matrix(u, params);
        let mut out = [
            CMatrix::zeros(2, 2),
            CMatrix::zeros(2, 2),
            CMatrix::zeros(2, 2),
            CMatrix::zeros(2, 2),
        ];
        for a in 0..2 {
            for b in 0..2 {
                let mut blk = CMatrix::zeros(2, 2);
                for s in 0..2 {
                    for t in 0..2 {
                        blk[(s, t)] = r[(2 * a + s, 2 * b + t)];
                    }
                }
                out[2 * a + b] = blk;
            }
        }
        out
    }

    /// Monodromy R_{0,sites[0]} ... R_{0,sites[last]} as aux blocks,
    /// multiplied left to right.
    fn monodromy(u: C64, params: &ModelParams, sites: &[usize]) -> Self {
        let n = params.n;
        let dim = 1usize << n;
        let rb = Self::r_blocks(u, params);
        let first = sites[0];
        let mut acc = Self {
            b: [
                site_operator(&rb[0], first, n),
                site_operator(&rb[1], first, n),
                site_operator(&rb[2], first, n),
                site_operator(&rb[3], first, n),
            ],
        };
        for &site in &sites[1..] {
            let mut next = [
                CMatrix::zeros(dim, dim),
                CMatrix::zeros(dim, dim),
                CMatrix::zeros(dim, dim),
                CMatrix::zeros(dim, dim),
            ];
            for a in 0..2 {
                for c in 0..2 {
                    let mut acc_blk = mul_site_right(&acc.b[2 * a], &rb[c], site, n);
                    let other = mul_site_right(&acc.b[2 * a + 1], &rb[2 + c], site, n);
                    acc_blk = acc_blk.add(&other);
                    next[2 * a + c] = acc_blk;
                }
            }
            acc = Self { b: next };
        }
        acc
    }

    fn mul(&self, other: &AuxBlocks) -> AuxBlocks {
        let mut out = [
            CMatrix::zeros(self.b[0].dim(), self.b[0].dim()),
            CMatrix::zeros(self.b[0].dim(), self.b[0].dim()),
            CMatrix::zeros(self.b[0].dim(), self.b[0].dim()),
            CMatrix::zeros(self.b[0].dim(), self.b[0].dim()),
        ];
        for a in 0..2 {
            for c in 0..2 {
                out[2 * a + c] = self.b[2 * a]
                    .mul(&other.b[c])
                    .add(&self.b[2 * a + 1].mul(&other.b[2 + c]));
            }
        }
        AuxBlocks { b: out }
    }

    fn aux_trace(&self) -> CMatrix {
        self.b[0].add(&self.b[3])
    }
}

/// The fundamental transfer matrix t^(1/2,1/2)(u) on the 2^N quantum space:
/// trace over the auxiliary space of K^+ T(u) K^- T-hat(u).
pub fn transfer_half(u: C64, params: &ModelParams) -> Result<CMatrix> {
    if params.n > MAX_SITES {
        return Err(Error::DimensionTooLarge {
            dim: 1usize << params.n,
            limit: 1usize << MAX_SITES,
        });
    }
    let n = params.n;
    let dim = 1usize << n;
    let desc: Vec<usize> = (1..=n).rev().collect(); // T = R_{0N} ... R_{01}
    let asc: Vec<usize> = (1..=n).collect(); // T-hat = R_{01} ... R_{0N}
    let t_mono = AuxBlocks::monodromy(u, params, &desc);
    let t_hat = AuxBlocks::monodromy(u, params, &asc);
    let kp = AuxBlocks::from_scalar_k(&k_plus(u, params), dim);
    let km = AuxBlocks::from_scalar_k(&k_minus(u, params), dim);
    Ok(kp.mul(&t_mono).mul(&km).mul(&t_hat).aux_trace())
}

/// d/du t^(1/2,1/2)(u) at u=0 by fourth-order central differences with
/// Richardson extrapolation; two step sizes must agree.
pub fn transfer_derivative0(params: &ModelParams) -> Result<CMatrix> {
    let d1 = richardson_derivative(params, 1e-3)?;
    let d2 = richardson_derivative(params, 5e-4)?;
    let diff = d1.sub(&d2).frobenius_norm() / d1.frobenius_norm().max(1e-300);
    if diff > 1e-7 {
        return Err(Error::DerivativeUnstable(diff));
    }
    Ok(d2)
}

fn fourth_order_diff(params: &ModelParams, h: f64) -> Result<CMatrix> {
    let hh = C64::new(h, 0.0);
    let t_p2 = transfer_half(2.0 * hh, params)?;
    let t_p1 = transfer_half(hh, params)?;
    let t_m1 = transfer_half(-hh, params)?;
    let t_m2 = transfer_half(-2.0 * hh, params)?;
    let mut acc = t_p1.sub(&t_m1).scale(C64::new(8.0, 0.0));
    acc = acc.sub(&t_p2).add(&t_m2);
    Ok(acc.scale(C64::new(1.0 / (12.0 * h), 0.0)))
}

fn richardson_derivative(params: &ModelParams, h: f64) -> Result<CMatrix> {
    let d_h = fourth_order_diff(params, h)?;
    let d_h2 = fourth_order_diff(params, h / 2.0)?;
    // eliminate the O(h^4) term
    Ok(d_h2.scale(C64::new(16.0 / 15.0, 0.0)).sub(&d_h.scale(C64::new(1.0 / 15.0, 0.0))))
}

/// Frobenius-norm residual of the q-th order operator functional relation
/// against f(u) * Id, normalized by the leading t-product term. Only the
/// q = 3 and q = 5 assemblies exist in closed form.
pub fn functional_relation_operator_residual(u: C64, params: &ModelParams) -> Result<f64> {
    functional_relation_residual_with_rhs(u, params, scalars::f_total(u, params))
}

/// Same residual with a caller-supplied scalar on the right-hand side;
/// used for negative controls.
pub fn functional_relation_residual_with_rhs(
    u: C64,
    params: &ModelParams,
    rhs: C64,
) -> Result<f64> {
    if params.two_s != 1 {
        return Err(Error::UnsupportedCase(
            "operator functional relation is assembled for the spin-1/2 chain".into(),
        ));
    }
    let q = params.q;
    if q != 3 && q != 5 {
        return Err(Error::UnsupportedQ(q));
    }
    let eta = params.eta();
    let t: Vec<CMatrix> = (0..q)
        .map(|k| transfer_half(u + f64::from(k) * eta, params))
        .collect::<Result<_>>()?;
    let d = |k: i32| scalars::delta_s(u + f64::from(k) * eta, params);
    let dim = t[0].dim();
    let id = CMatrix::identity(dim);
    let (lhs, lead) = if q == 3 {
        let lead = t[0].mul(&t[1]).mul(&t[2]);
        let mut lhs = lead.clone();
        lhs.add_assign_scaled(&t[1], -d(-1)?);
        lhs.add_assign_scaled(&t[2], -d(0)?);
        lhs.add_assign_scaled(&t[0], -d(1)?);
        (lhs, lead)
    } else {
        let lead = t[0].mul(&t[1]).mul(&t[2]).mul(&t[3]).mul(&t[4]);
        let mut lhs = lead.clone();
        lhs.add_assign_scaled(&t[0], d(1)? * d(-2)?);
        lhs.add_assign_scaled(&t[4], d(0)? * d(2)?);
        lhs.add_assign_scaled(&t[3], d(1)? * d(-1)?);
        lhs.add_assign_scaled(&t[0].mul(&t[3]).mul(&t[4]), -d(1)?);
        lhs.add_assign_scaled(&t[2], d(0)? * d(-2)?);
        lhs.add_assign_scaled(&t[2].mul(&t[3]).mul(&t[4]), -d(0)?);
        lhs.add_assign_scaled(&t[1], d(-1)? * d(2)?);
        lhs.add_assign_scaled(&t[0].mul(&t[1]).mul(&t[4]), -d(2)?);
        lhs.add_assign_scaled(&t[0].mul(&t[1]).mul(&t[2]), -d(-2)?);
        lhs.add_assign_scaled(&t[1].mul(&t[2]).mul(&t[3]), -d(-1)?);
        (lhs, lead)
    };
    let resid = lhs.sub(&id.scale(rhs));
    Ok(resid.frobenius_norm() / lead.frobenius_norm().max(1e-300))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn n2_params() -> ModelParams {
        let p = presets::table1_params();
        ModelParams::case2(2, 1, p.r, p.q, p.alpha_minus, p.alpha_plus, p.theta_minus).unwrap()
    }

    #[test]
    fn r_at_zero_is_permutation() {
        let p = presets::table1_params();
        let eta = p.eta();
        let r0 = r_matrix(c(0.0, 0.0), &p);
        let mut perm = CMatrix::zeros(4, 4);
        perm[(0, 0)] = c(1.0, 0.0);
        perm[(1, 2)] = c(1.0, 0.0);
        perm[(2, 1)] = c(1.0, 0.0);
        perm[(3, 3)] = c(1.0, 0.0);
        assert!(r0.sub(&perm.scale(sh(eta))).frobenius_norm() < 1e-14);
    }

    #[test]
    fn r_unitarity_and_yang_baxter() {
        let p = presets::table1_params();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let id4 = CMatrix::identity(4);
        for _ in 0..100 {
            let u = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let want = id4.scale(-crate::scalars::xi(u, &p));
            let got = r_matrix(u, &p).mul(&r_matrix(-u, &p));
            assert!(got.sub(&want).frobenius_norm() <= 1e-12 * want.frobenius_norm());
        }
        // YBE on C2 x C2 x C2: R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)
        let id2 = CMatrix::identity(2);
        let embed = |r: &CMatrix, pos: u8| -> CMatrix {
            match pos {
                12 => r.kron(&id2),
                23 => id2.kron(r),
                13 => {
                    // swap middle and last: R13 = P23 (R12 x I) P23
                    let mut p23 = CMatrix::zeros(8, 8);
                    for a in 0..2 {
                        for b in 0..2 {
                            for cc in 0..2 {
                                p23[(4 * a + 2 * b + cc, 4 * a + 2 * cc + b)] = c(1.0, 0.0);
                            }
                        }
                    }
                    p23.mul(&r.kron(&id2)).mul(&p23)
                }
                _ => unreachable!(),
            }
        };
        for _ in 0..20 {
            let u = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let v = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let r12 = embed(&r_matrix(u - v, &p), 12);
            let r13 = embed(&r_matrix(u, &p), 13);
            let r23 = embed(&r_matrix(v, &p), 23);
            let lhs = r12.mul(&r13).mul(&r23);
            let rhs = r23.mul(&r13).mul(&r12);
            assert!(lhs.sub(&rhs).frobenius_norm() <= 1e-12 * lhs.frobenius_norm());
        }
    }

    #[test]
    fn k_minus_special_points() {
        let p = presets::table1_params();
        let k0 = k_minus(c(0.0, 0.0), &p);
        let want = CMatrix::identity(2).scale(2.0 * sh(p.alpha_minus) * ch(p.beta_minus));
        assert!(k0.sub(&want).frobenius_norm() < 1e-14);
        let ki = k_minus(c(0.0, std::f64::consts::PI / 2.0), &p);
        assert!(ki[(0, 1)].norm() < 1e-12 && ki[(1, 0)].norm() < 1e-12);
        let d = 2.0 * C64::new(0.0, 1.0) * ch(p.alpha_minus) * sh(p.beta_minus);
        assert!((ki[(0, 0)] - d).norm() < 1e-12);
        assert!((ki[(1, 1)] + d).norm() < 1e-12);
    }

    #[test]
    fn k_minus_matches_high_precision_oracle() {
        let p = presets::table1_params();
        let k = k_minus(c(0.3, 0.0), &p);
        // tools/oracles.py
        assert!((k[(0, 0)] - c(0.0, -0.80257933431070460)).norm() < 1e-14);
        assert!((k[(1, 1)] - c(0.0, 0.24055625162330871)).norm() < 1e-14);
        assert!((k[(0, 1)] - c(1.0925019158009535, 0.0)).norm() < 1e-14);
        assert!((k[(1, 0)] - c(0.37100876236452787, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn transfer_commutes_and_is_proportional_to_identity_at_zero() {
        let p = n2_params();
        let t0 = transfer_half(c(0.0, 0.0), &p).unwrap();
        let scale = t0[(0, 0)];
        let off = t0.sub(&CMatrix::identity(4).scale(scale));
        assert!(off.frobenius_norm() <= 1e-12 * t0.frobenius_norm());

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let u = c(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
            let v = c(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
            let a = transfer_half(u, &p).unwrap();
            let b = transfer_half(v, &p).unwrap();
            let comm = a.commutator_norm(&b);
            assert!(
                comm <= 1e-10 * a.frobenius_norm() * b.frobenius_norm(),
                "commutator {comm}"
            );
        }
    }

    #[test]
    fn transfer_is_two_pi_i_periodic() {
        let p = n2_params();
        let u = c(0.31, -0.22);
        let a = transfer_half(u, &p).unwrap();
        let b = transfer_half(u + c(0.0, 2.0 * std::f64::consts::PI), &p).unwrap();
        assert!(a.sub(&b).frobenius_norm() <= 1e-12 * a.frobenius_norm());
    }

    #[test]
    fn dimension_guard() {
        let p = presets::table1_params();
        let mut big = p.clone();
        big.n = 13;
        assert!(matches!(
            transfer_half(c(0.1, 0.0), &big),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn functional_relation_all_supported_configs() {
        // q в {3,5}, both parities where supported, all three cases
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let theta = c(0.7, 0.0);
        let configs: Vec<ModelParams> = vec![
            ModelParams::case2(2, 1, 1, 3, c(0.3, 0.2), c(-0.1, 0.4), theta).unwrap(),
            ModelParams::case2(2, 1, 2, 3, c(0.3, 0.2), c(-0.1, 0.4), theta).unwrap(),
            ModelParams::case1(
                2,
                1,
                1,
                5,
                crate::params::Side::Plus,
                c(0.3, 0.1),
                crate::params::Side::Minus,
                c(0.25, -0.4),
                theta,
            )
            .unwrap(),
            ModelParams::case1(
                2,
                1,
                2,
                5,
                crate::params::Side::Plus,
                c(0.3, 0.1),
                crate::params::Side::Minus,
                c(0.25, -0.4),
                theta,
            )
            .unwrap(),
            ModelParams::case3(2, 1, 1, 3, c(0.2, 0.3), c(-0.6, 0.1), theta).unwrap(),
            ModelParams::case3(2, 1, 3, 5, c(0.2, 0.3), c(-0.6, 0.1), theta).unwrap(),
        ];
        for p in configs {
            for _ in 0..3 {
                let u = c(rng.gen_range(-0.4..0.4), rng.gen_range(-0.4..0.4));
                let r = functional_relation_operator_residual(u, &p).unwrap();
                assert!(r < 1e-9, "residual {r} for case {:?} r={}", p.case, p.r);
            }
        }
    }

    #[test]
    fn functional_relation_negative_control_and_guards() {
        let p = n2_params();
        let u = c(0.2, 0.1);
        // replacing f0*f1 by f0+f1 must break the identity badly
        let wrong = crate::scalars::f0(u, &p) + crate::scalars::f1(u, &p);
        let r = functional_relation_residual_with_rhs(u, &p, wrong).unwrap();
        assert!(r > 1e-3, "negative control too small: {r}");
        let mut q7 = presets::table1_params();
        q7.q = 7;
        q7.r = 1;
        q7.beta_minus = q7.eta();
        q7.beta_plus = q7.eta();
        assert!(matches!(
            functional_relation_operator_residual(u, &q7),
            Err(Error::UnsupportedQ(7))
        ));
    }

    #[test]
    fn derivative_of_constant_vanishes_and_steps_agree() {
        // the derivative stencil itself: apply to a u-independent matrix
        let p = n2_params();
        let d = transfer_derivative0(&p).unwrap();
        // t(u) is analytic; Richardson self-check passed inside. Sanity: the
        // derivative has the same shape and finite entries.
        assert_eq!(d.dim(), 4);
        assert!(d.frobenius_norm().is_finite());
        let stencil = |f: &dyn Fn(f64) -> f64, h: f64| -> f64 {
            (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h)
        };
        let constf = |_: f64| 3.25f64;
        assert_eq!(stencil(&constf, 1e-3), 0.0);
    }
}
