//! Dense complex matrix helpers shared by the algebra and group layers.

use nalgebra as na;
use num_complex::Complex64;

/// Complex scalar.
pub type C64 = Complex64;
/// Dense complex matrix.
pub type CMat = na::DMatrix<C64>;

/// The imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

/// Identity matrix of size `n`.
pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Commutator `ab - ba`.
pub fn comm(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// `Re tr(ab)` without forming the product.
pub fn re_trace_product(a: &CMat, b: &CMat) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            let x = a[(i, j)] * b[(j, i)];
            s += x.re;
        }
    }
    s
}

/// Conjugate transpose.
pub fn dagger(a: &CMat) -> CMat {
    a.adjoint()
}

/// Frobenius norm.
pub fn fro(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry modulus.
pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Distance of `u` from the unitary group, `|u u* - 1|`.
pub fn unitarity_defect(u: &CMat) -> f64 {
    fro(&(u * u.adjoint() - identity(u.nrows())))
}

/// Matrix exponential.
pub fn expm(a: &CMat) -> CMat {
    a.clone().exp()
}

/// Nearest unitary matrix (the unitary factor of the polar decomposition).
pub fn unitary_part(g: &CMat) -> CMat {
    let svd = g.clone().svd(true, true);
    let u = svd.u.expect("svd u");
    let v_t = svd.v_t.expect("svd v_t");
    u * v_t
}

/// Determinant.
pub fn det(a: &CMat) -> C64 {
    a.clone().determinant()
}

/// Logarithm of a unitary matrix with determinant one, returned as a
/// skew-Hermitian traceless matrix. Returns `None` when the Schur form is not
/// diagonal enough to read off eigenvalues, or when an eigenvalue sits within
/// `1e-6` of `-1` (the branch cut).
pub fn log_special_unitary(k: &CMat) -> Option<CMat> {
    let n = k.nrows();
    let schur = na::Schur::try_new(k.clone(), 1e-15, 10_000)?;
    let (q, t) = schur.unpack();
    let mut off = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off = off.max(t[(i, j)].norm());
            }
        }
    }
    if off > 1e-8 {
        return None;
    }
    let mut theta: Vec<f64> = (0..n).map(|i| t[(i, i)].arg()).collect();
    if (0..n).any(|i| (t[(i, i)] + C64::new(1.0, 0.0)).norm() < 1e-6) {
        return None;
    }
    let total: f64 = theta.iter().sum();
    let m = (total / (2.0 * std::f64::consts::PI)).round() as i64;
    if m != 0 {
        // Move whole turns onto the eigenvalues furthest along the offending
        // direction so the trace vanishes.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| theta[b].partial_cmp(&theta[a]).unwrap());
        if m < 0 {
            order.reverse();
        }
        for &idx in order.iter().take(m.unsigned_abs() as usize) {
            theta[idx] -= 2.0 * std::f64::consts::PI * m.signum() as f64;
        }
    }
    let d = CMat::from_diagonal(&na::DVector::from_iterator(
        n,
        theta.iter().map(|&x| C64::new(0.0, x)),
    ));
    let l = &q * d * q.adjoint();
    Some(skew_traceless(&l))
}

/// Projection onto skew-Hermitian traceless matrices.
pub fn skew_traceless(m: &CMat) -> CMat {
    let n = m.nrows();
    let mut s = (m - m.adjoint()) * C64::new(0.5, 0.0);
    let tr = s.trace() / C64::new(n as f64, 0.0);
    for i in 0..n {
        s[(i, i)] -= tr;
    }
    s
}

/// Inverse of an invertible matrix.
pub fn inverse(m: &CMat) -> Option<CMat> {
    m.clone().try_inverse()
}

/// Permutation matrix `P` with `P e_j = e_{perm[j]}`.
pub fn permutation_matrix(perm: &[usize]) -> CMat {
    let n = perm.len();
    let mut p = CMat::zeros(n, n);
    for (j, &i) in perm.iter().enumerate() {
        p[(i, j)] = C64::new(1.0, 0.0);
    }
    p
}
