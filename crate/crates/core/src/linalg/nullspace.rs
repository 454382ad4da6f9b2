//! Smallest singular direction of a rectangular complex matrix via cyclic
//! Jacobi diagonalization of the Hermitian normal matrix A^H A.

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

/// Returns (null_direction, sigma_ratio) where sigma_ratio is the ratio of
/// the two smallest singular values of `a` (well below 1 when the null
/// direction is isolated).
pub fn smallest_singular_direction(a: &CMatrix) -> Result<(Vec<C64>, f64)> {
    let m = a.cols();
    if a.rows() < m {
        return Err(Error::Numerical(
            "nullspace extraction needs at least as many rows as columns".into(),
        ));
    }
    // normal matrix B = A^H A
    let mut b = CMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let mut acc = C64::new(0.0, 0.0);
            for r in 0..a.rows() {
                acc += a[(r, i)].conj() * a[(r, j)];
            }
            b[(i, j)] = acc;
            b[(j, i)] = acc.conj();
        }
    }
    let mut v = CMatrix::identity(m);
    let scale = b.frobenius_norm().max(1e-300);
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..m {
            for q in p + 1..m {
                off += b[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let bpq = b[(p, q)];
                if bpq.norm() <= 1e-18 * scale {
                    continue;
                }
                let app = b[(p, p)].re;
                let aqq = b[(q, q)].re;
                let phase = bpq / bpq.norm();
                let tau = (aqq - app) / (2.0 * bpq.norm());
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);
                // rotate rows/cols p,q of B and columns of V
                for k in 0..m {
                    let bkp = b[(k, p)];
                    let bkq = b[(k, q)];
                    b[(k, p)] = c * bkp - s.conj() * bkq;
                    b[(k, q)] = s * bkp + c * bkq;
                }
                for k in 0..m {
                    let bpk = b[(p, k)];
                    let bqk = b[(q, k)];
                    b[(p, k)] = c * bpk - s * bqk;
                    b[(q, k)] = s.conj() * bpk + c * bqk;
                }
                for k in 0..m {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s.conj() * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut eigs: Vec<(f64, usize)> = (0..m).map(|i| (b[(i, i)].re.max(0.0), i)).collect();
    eigs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (lam0, idx0) = eigs[0];
    let (lam1, _) = eigs[1];
    let ratio = if lam1 > 0.0 {
        (lam0 / lam1).sqrt()
    } else {
        1.0
    };
    let dir: Vec<C64> = (0..m).map(|i| v[(i, idx0)]).collect();
    Ok((dir, ratio))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn recovers_known_null_direction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = 7usize;
        let rows = 20usize;
        let null: Vec<C64> = (0..m)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let nn: f64 = null.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let null: Vec<C64> = null.into_iter().map(|z| z / nn).collect();
        // rows orthogonal to `null`: r - (null^H r) null ... projected random rows
        let mut a = CMatrix::zeros(rows, m);
        for i in 0..rows {
            let r: Vec<C64> = (0..m)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let dot: C64 = null.iter().zip(r.iter()).map(|(n, x)| n.conj() * x).sum();
            for j in 0..m {
                a[(i, j)] = r[j] - dot * null[j];
            }
        }
        let (dir, ratio) = smallest_singular_direction(&a).unwrap();
        assert!(ratio < 1e-6, "ratio {ratio}");
        // dir should be parallel to null
        let overlap: C64 = null.iter().zip(dir.iter()).map(|(n, d)| n.conj() * d).sum();
        assert!(overlap.norm() > 1.0 - 1e-8, "overlap {}", overlap.norm());
    }

    #[test]
    fn full_rank_has_large_ratio() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut a = CMatrix::zeros(20, 6);
        for i in 0..20 {
            for j in 0..6 {
                a[(i, j)] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        let (_, ratio) = smallest_singular_direction(&a).unwrap();
        assert!(ratio > 0.1, "ratio {ratio}");
    }
}
