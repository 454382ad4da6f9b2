//! Dense complex eigendecomposition: balancing, Householder Hessenberg
//! reduction, implicit single-shift QR to Schur form, eigenvectors by
//! triangular back-substitution.

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

pub struct EigenDecomposition {
    pub values: Vec<C64>,
    /// Right eigenvectors as columns.
    pub vectors: CMatrix,
    /// Per-pair relative residuals ||A v - lambda v|| / ||A||_F.
    pub residuals: Vec<f64>,
}

impl EigenDecomposition {
    /// Rows of the inverse eigenvector matrix are left eigenvectors; the
    /// sandwich W A V is diagonal for any member of a commuting family.
    pub fn inverse_vectors(&self) -> Result<CMatrix> {
        self.vectors.inverse()
    }

    pub fn min_gap(&self) -> f64 {
        let n = self.values.len();
        let mut gap = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                gap = gap.min((self.values[i] - self.values[j]).norm());
            }
        }
        gap
    }
}

/// Parlett-Reinsch style balancing with powers of two; returns the diagonal
/// scale so callers can undo it on eigenvectors.
fn balance(a: &mut CMatrix) -> Vec<f64> {
    let n = a.dim();
    let mut scale = vec![1.0f64; n];
    let radix = 2.0f64;
    for _ in 0..20 {
        let mut converged = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].norm();
                    r += a[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let mut cc = c;
            let mut rr = r;
            let s = c + r;
            while cc < rr / radix {
                cc *= radix;
                rr /= radix;
                f *= radix;
            }
            while cc > rr * radix {
                cc /= radix;
                rr *= radix;
                f /= radix;
            }
            if (cc + rr) < 0.95 * s {
                converged = false;
                scale[i] *= f;
                for j in 0..n {
                    let v = a[(i, j)] / f;
                    a[(i, j)] = v;
                }
                for j in 0..n {
                    let v = a[(j, i)] * f;
                    a[(j, i)] = v;
                }
            }
        }
        if converged {
            break;
        }
    }
    scale
}

/// Householder reduction to upper Hessenberg form; accumulates the unitary
/// transform into `q`.
fn hessenberg(a: &mut CMatrix, q: &mut CMatrix) {
    let n = a.dim();
    for k in 0..n.saturating_sub(2) {
        // column k, rows k+1..n
        let mut norm2 = 0.0;
        for i in k + 1..n {
            norm2 += a[(i, k)].norm_sqr();
        }
        if norm2 == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let alpha = if x0.norm() > 0.0 {
            -(x0 / x0.norm()) * norm2.sqrt()
        } else {
            C64::new(-norm2.sqrt(), 0.0)
        };
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vn2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vn2 == 0.0 {
            continue;
        }
        // A <- P A with P = I - 2 v v^H / (v^H v), acting on rows k+1..
        for j in 0..n {
            let mut dot = ZERO;
            for (i, vi) in v.iter().enumerate() {
                dot += vi.conj() * a[(k + 1 + i, j)];
            }
            let f = 2.0 * dot / vn2;
            for (i, vi) in v.iter().enumerate() {
                let val = a[(k + 1 + i, j)] - f * vi;
                a[(k + 1 + i, j)] = val;
            }
        }
        // A <- A P on columns k+1..
        for i in 0..n {
            let mut dot = ZERO;
            for (j, vj) in v.iter().enumerate() {
                dot += a[(i, k + 1 + j)] * vj;
            }
            let f = 2.0 * dot / vn2;
            for (j, vj) in v.iter().enumerate() {
                let val = a[(i, k + 1 + j)] - f * vj.conj();
                a[(i, k + 1 + j)] = val;
            }
        }
        // Q <- Q P
        for i in 0..n {
            let mut dot = ZERO;
            for (j, vj) in v.iter().enumerate() {
                dot += q[(i, k + 1 + j)] * vj;
            }
            let f = 2.0 * dot / vn2;
            for (j, vj) in v.iter().enumerate() {
                let val = q[(i, k + 1 + j)] - f * vj.conj();
                q[(i, k + 1 + j)] = val;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
        a[(k + 1, k)] = alpha;
    }
}

struct Givens {
    c: f64,
    s: C64,
}

fn make_givens(a: C64, b: C64) -> (Givens, C64) {
    if a.norm() == 0.0 {
        return (Givens { c: 0.0, s: ONE }, b);
    }
    let t = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let c = a.norm() / t;
    let phase = a / a.norm();
    let s = phase * b.conj() / t;
    (Givens { c, s }, phase * t)
}

/// Explicit-shift QR iteration on a Hessenberg matrix; `z` accumulates the
/// Schur vectors. Each sweep computes QR(H - mu I) by Givens rotations and
/// forms RQ + mu I, a unitary similarity of H.
fn qr_to_schur(h: &mut CMatrix, z: &mut CMatrix) -> Result<()> {
    let n = h.dim();
    if n <= 1 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let mut hi = n - 1; // active block is lo..=hi
    let mut iter_this_block = 0usize;
    let mut total_iter = 0usize;
    let max_total = 60 * n.max(4);
    loop {
        // deflate small subdiagonals at the bottom of the active block
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= eps * diag.max(1e-300) {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            if hi == 0 {
                return Ok(());
            }
            hi -= 1;
            iter_this_block = 0;
            continue;
        }
        if total_iter >= max_total {
            return Err(Error::ConvergenceFailure(n));
        }
        total_iter += 1;
        iter_this_block += 1;
        let shift = if iter_this_block % 12 == 0 {
            // exceptional shift breaks rare cycling
            h[(hi, hi)] + C64::new(1.5 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            // Wilkinson: trailing 2x2 eigenvalue closer to the corner entry
            let a = h[(hi - 1, hi - 1)];
            let b = h[(hi - 1, hi)];
            let c = h[(hi, hi - 1)];
            let d = h[(hi, hi)];
            let tr2 = (a + d) * 0.5;
            let det = a * d - b * c;
            let disc = (tr2 * tr2 - det).sqrt();
            let e1 = tr2 + disc;
            let e2 = tr2 - disc;
            if (e1 - d).norm() < (e2 - d).norm() {
                e1
            } else {
                e2
            }
        };
        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        let mut rots: Vec<Givens> = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (g, r) = make_givens(h[(i, i)], h[(i + 1, i)]);
            h[(i, i)] = r;
            h[(i + 1, i)] = ZERO;
            for j in i + 1..n {
                let x = h[(i, j)];
                let y = h[(i + 1, j)];
                h[(i, j)] = g.c * x + g.s * y;
                h[(i + 1, j)] = -g.s.conj() * x + g.c * y;
            }
            rots.push(g);
        }
        for (idx, g) in rots.iter().enumerate() {
            let i = lo + idx;
            for rr in 0..n {
                let x = h[(rr, i)];
                let y = h[(rr, i + 1)];
                h[(rr, i)] = g.c * x + g.s.conj() * y;
                h[(rr, i + 1)] = -g.s * x + g.c * y;
            }
            for rr in 0..n {
                let x = z[(rr, i)];
                let y = z[(rr, i + 1)];
                z[(rr, i)] = g.c * x + g.s.conj() * y;
                z[(rr, i + 1)] = -g.s * x + g.c * y;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
}

/// Right eigenvectors of the triangular factor by back-substitution.
fn triangular_eigenvectors(t: &CMatrix) -> CMatrix {
    let n = t.dim();
    let tnorm = t.frobenius_norm().max(1e-300);
    let floor = f64::EPSILON * tnorm;
    let mut vecs = CMatrix::zeros(n, n);
    let mut y = vec![ZERO; n];
    for i in 0..n {
        for z in y.iter_mut() {
            *z = ZERO;
        }
        y[i] = ONE;
        let lam = t[(i, i)];
        for j in (0..i).rev() {
            let mut rhs = ZERO;
            for k in j + 1..=i {
                rhs += t[(j, k)] * y[k];
            }
            let mut den = t[(j, j)] - lam;
            if den.norm() < floor {
                den = C64::new(floor, 0.0);
            }
            y[j] = -rhs / den;
        }
        let norm: f64 = y[..=i].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for j in 0..=i {
            vecs[(j, i)] = y[j] / norm;
        }
    }
    vecs
}

/// Full eigendecomposition of a general square complex matrix.
pub fn eig(a: &CMatrix) -> Result<EigenDecomposition> {
    let n = a.dim();
    if n == 0 {
        return Ok(EigenDecomposition {
            values: vec![],
            vectors: CMatrix::zeros(0, 0),
            residuals: vec![],
        });
    }
    let mut h = a.clone();
    let scale = balance(&mut h);
    let mut q = CMatrix::identity(n);
    hessenberg(&mut h, &mut q);
    qr_to_schur(&mut h, &mut q)?;
    let values: Vec<C64> = (0..n).map(|i| h[(i, i)]).collect();
    let ty = triangular_eigenvectors(&h);
    let mut vectors = q.mul(&ty);
    // undo balancing: columns scale by D
    for i in 0..n {
        for j in 0..n {
            let v = vectors[(i, j)] * scale[i];
            vectors[(i, j)] = v;
        }
    }
    for j in 0..n {
        let norm: f64 = (0..n)
            .map(|i| vectors[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        for i in 0..n {
            let v = vectors[(i, j)] / norm;
            vectors[(i, j)] = v;
        }
    }
    let anorm = a.frobenius_norm().max(1e-300);
    let mut residuals = Vec::with_capacity(n);
    for j in 0..n {
        let col: Vec<C64> = (0..n).map(|i| vectors[(i, j)]).collect();
        let av = a.matvec(&col);
        let mut r2 = 0.0;
        for i in 0..n {
            r2 += (av[i] - values[j] * col[i]).norm_sqr();
        }
        residuals.push(r2.sqrt() / anorm);
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
        let mut a = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        a
    }

    #[test]
    fn diagonal_matrix() {
        let mut a = CMatrix::zeros(3, 3);
        a[(0, 0)] = c(1.0, 0.0);
        a[(1, 1)] = c(0.0, 2.0);
        a[(2, 2)] = c(-3.0, 0.0);
        let d = eig(&a).unwrap();
        let mut got: Vec<C64> = d.values.clone();
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - c(-3.0, 0.0)).norm() < 1e-12);
        assert!((got[1] - c(0.0, 2.0)).norm() < 1e-12);
        assert!((got[2] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn swap_matrix() {
        let mut a = CMatrix::zeros(2, 2);
        a[(0, 1)] = c(1.0, 0.0);
        a[(1, 0)] = c(1.0, 0.0);
        let d = eig(&a).unwrap();
        let mut res: Vec<f64> = d.values.iter().map(|z| z.re).collect();
        res.sort_by(f64::total_cmp);
        assert!((res[0] + 1.0).abs() < 1e-12 && (res[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_matrices_satisfy_characteristic_polynomial() {
        // Faddeev-LeVerrier coefficients are an implementation-independent
        // route to the characteristic polynomial; every computed eigenvalue
        // must be a root.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..6 {
            let a = random_matrix(8, &mut rng);
            let n = 8usize;
            let mut coeffs = vec![C64::new(1.0, 0.0)]; // c_n = 1, then c_{n-1}..c_0
            let mut m = CMatrix::identity(n);
            for k in 1..=n {
                m = a.mul(&m);
                let ck = -m.trace() / (k as f64);
                for i in 0..n {
                    m[(i, i)] += ck;
                }
                coeffs.push(ck);
            }
            let d = eig(&a).unwrap();
            let scale: f64 = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
            for &lam in &d.values {
                // Horner in descending powers
                let mut p = C64::new(0.0, 0.0);
                for cf in &coeffs {
                    p = p * lam + cf;
                }
                assert!(
                    p.norm() <= 1e-8 * scale * (1.0 + lam.norm().powi(n as i32)),
                    "char poly residual {} at {}",
                    p.norm(),
                    lam
                );
            }
            for &r in &d.residuals {
                assert!(r < 1e-10, "eigenpair residual {r}");
            }
        }
    }

    #[test]
    fn eigenvector_inverse_diagonalizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_matrix(10, &mut rng);
        let d = eig(&a).unwrap();
        let w = d.inverse_vectors().unwrap();
        let s = w.mul(&a).mul(&d.vectors);
        for i in 0..10 {
            for j in 0..10 {
                if i == j {
                    assert!((s[(i, j)] - d.values[i]).norm() < 1e-9);
                } else {
                    assert!(s[(i, j)].norm() < 1e-9);
                }
            }
        }
    }
}
