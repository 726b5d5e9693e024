//! Centralizer strata of commuting diagonal triples and the splitting
//! `su(n) = Z(c) + [c,c] + c^perp`.

use rand::Rng;

use super::element::{off_diagonal_pair, LieElement};
use super::matrix::{self, CMat, C64};
use crate::error::{Error, Result};

/// Tolerance used to merge equal diagonal triples into one block.
pub const BLOCK_TOL: f64 = 1e-9;

/// A commuting diagonal triple together with its centralizer block structure.
///
/// Positions sharing a diagonal triple form one block. Blocks are listed in
/// order of first appearance; the positions of a block need not be
/// contiguous (use [`crate::implosion::weyl_face`] to sort into a chamber).
#[derive(Clone, Debug, PartialEq)]
pub struct StratumData {
    n: usize,
    tau: [LieElement; 3],
    labels: Vec<usize>,
    members: Vec<Vec<usize>>,
    zeta: f64,
    eta: f64,
}

/// Build the stratum of a commuting diagonal triple.
pub fn centralizer_blocks(tau: &[LieElement; 3]) -> Result<StratumData> {
    let n = tau[0].dim();
    for t in tau.iter() {
        if t.dim() != n {
            return Err(Error::DimensionMismatch(n, t.dim()));
        }
        if !t.is_diagonal(1e-12) {
            return Err(Error::InvalidStratum("tau must be diagonal".into()));
        }
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let c = tau[i].br(&tau[j]).max_abs();
            if c > 1e-12 {
                return Err(Error::InvalidStratum(format!("[tau_{}, tau_{}] = {c:.3e}", i + 1, j + 1)));
            }
        }
    }
    let vals: Vec<[f64; 3]> = (0..n)
        .map(|j| {
            [
                tau[0].matrix()[(j, j)].im,
                tau[1].matrix()[(j, j)].im,
                tau[2].matrix()[(j, j)].im,
            ]
        })
        .collect();
    let mut labels = vec![0usize; n];
    let mut reps: Vec<usize> = Vec::new();
    for j in 0..n {
        let found = reps.iter().position(|&r| {
            (0..3).all(|i| (vals[r][i] - vals[j][i]).abs() <= BLOCK_TOL)
        });
        match found {
            Some(b) => labels[j] = b,
            None => {
                labels[j] = reps.len();
                reps.push(j);
            }
        }
    }
    let mut members = vec![Vec::new(); reps.len()];
    for (j, &b) in labels.iter().enumerate() {
        members[b].push(j);
    }
    let mut eta = f64::INFINITY;
    for j in 0..n {
        for k in (j + 1)..n {
            if labels[j] != labels[k] {
                let d: f64 = (0..3).map(|i| (vals[j][i] - vals[k][i]).powi(2)).sum();
                eta = eta.min(d);
            }
        }
    }
    Ok(StratumData { n, tau: tau.clone(), labels, members, zeta: 2.0, eta })
}

/// Orthogonal splitting of `x` into its `Z(c)`, `[c,c]` and `c^perp` parts.
pub fn project_stratum(x: &LieElement, s: &StratumData) -> Result<(LieElement, LieElement, LieElement)> {
    if x.dim() != s.n {
        return Err(Error::DimensionMismatch(x.dim(), s.n));
    }
    Ok(s.split(x))
}

impl StratumData {
    /// Matrix size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The commuting triple.
    pub fn tau(&self) -> &[LieElement; 3] {
        &self.tau
    }

    /// Block sizes in order of first appearance.
    pub fn blocks(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }

    /// Block index of each diagonal position.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Positions belonging to block `b`.
    pub fn block_members(&self, b: usize) -> &[usize] {
        &self.members[b]
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.members.len()
    }

    /// Polynomial decay constant attached to this stratum. Defaults to the
    /// value for `sigma = 0`; see [`crate::lie::stability_constants`].
    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    /// Smallest positive eigenvalue of `-sum ad(tau_i)^2`, the bound on the
    /// exponential decay rate of `c^perp` components. Infinite when
    /// `c^perp = 0`.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Copy with a different `zeta`.
    pub fn with_zeta(mut self, zeta: f64) -> Self {
        self.zeta = zeta;
        self
    }

    /// Whether positions `j`, `k` share a block.
    pub fn same_block(&self, j: usize, k: usize) -> bool {
        self.labels[j] == self.labels[k]
    }

    /// The `(Z(c), [c,c], c^perp)` parts of `x`.
    pub fn split(&self, x: &LieElement) -> (LieElement, LieElement, LieElement) {
        let n = self.n;
        let m = x.matrix();
        let mut c = CMat::zeros(n, n);
        let mut h = CMat::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                if self.same_block(j, k) {
                    c[(j, k)] = m[(j, k)];
                } else {
                    h[(j, k)] = m[(j, k)];
                }
            }
        }
        let mut z = CMat::zeros(n, n);
        for mem in &self.members {
            let mean = mem.iter().map(|&j| m[(j, j)]).sum::<C64>() / C64::new(mem.len() as f64, 0.0);
            for &j in mem {
                z[(j, j)] = C64::new(0.0, mean.im);
            }
        }
        let d1 = &c - &z;
        (LieElement::from_raw(z), LieElement::from_raw(d1), LieElement::from_raw(h))
    }

    /// Projection onto `c`.
    pub fn proj_c(&self, x: &LieElement) -> LieElement {
        let (z, d1, _) = self.split(x);
        z + d1
    }

    /// Projection onto `Z(c)`.
    pub fn proj_z(&self, x: &LieElement) -> LieElement {
        self.split(x).0
    }

    /// Projection onto `[c,c]`.
    pub fn proj_cc(&self, x: &LieElement) -> LieElement {
        self.split(x).1
    }

    /// Projection onto `c^perp`.
    pub fn proj_perp(&self, x: &LieElement) -> LieElement {
        self.split(x).2
    }

    /// Orthonormal basis of `Z(c)`.
    pub fn basis_z(&self) -> Vec<LieElement> {
        let n = self.n;
        let mut vecs: Vec<Vec<f64>> = Vec::new();
        for mem in &self.members {
            let mut v = vec![-(mem.len() as f64) / n as f64; n];
            for &j in mem {
                v[j] += 1.0;
            }
            for w in &vecs {
                let p: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                for (a, b) in v.iter_mut().zip(w) {
                    *a -= p * b;
                }
            }
            let nv = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if nv > 1e-10 {
                vecs.push(v.iter().map(|a| a / nv).collect());
            }
        }
        vecs.iter()
            .map(|v| LieElement::diagonal(v).expect("traceless by construction"))
            .collect()
    }

    /// Orthonormal basis of `[c,c]`.
    pub fn basis_cc(&self) -> Vec<LieElement> {
        let n = self.n;
        let mut out = Vec::new();
        for mem in &self.members {
            for a in 0..mem.len() {
                for b in (a + 1)..mem.len() {
                    let (e1, e2) = off_diagonal_pair(n, mem[a], mem[b]);
                    out.push(e1);
                    out.push(e2);
                }
            }
            for k in 1..mem.len() {
                let norm = ((k * (k + 1)) as f64).sqrt();
                let mut m = CMat::zeros(n, n);
                for &j in &mem[..k] {
                    m[(j, j)] = C64::new(0.0, 1.0 / norm);
                }
                m[(mem[k], mem[k])] = C64::new(0.0, -(k as f64) / norm);
                out.push(LieElement::from_raw(m));
            }
        }
        out
    }

    /// Orthonormal basis of `c = Z(c) + [c,c]`.
    pub fn basis_c(&self) -> Vec<LieElement> {
        let mut b = self.basis_z();
        b.extend(self.basis_cc());
        b
    }

    /// Orthonormal basis of `c^perp`.
    pub fn basis_perp(&self) -> Vec<LieElement> {
        let n = self.n;
        let mut out = Vec::new();
        for j in 0..n {
            for k in (j + 1)..n {
                if !self.same_block(j, k) {
                    let (e1, e2) = off_diagonal_pair(n, j, k);
                    out.push(e1);
                    out.push(e2);
                }
            }
        }
        out
    }

    /// Real dimension of `c`.
    pub fn dim_c(&self) -> usize {
        self.members.iter().map(|m| m.len() * m.len()).sum::<usize>() - 1
    }

    /// Real dimension of `c^perp`.
    pub fn dim_perp(&self) -> usize {
        self.n * self.n - 1 - self.dim_c()
    }

    /// Random element of `Z(c)`.
    pub fn random_z<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        self.proj_z(&LieElement::random(self.n, rng))
    }

    /// Random element of `[c,c]`.
    pub fn random_cc<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        self.proj_cc(&LieElement::random(self.n, rng))
    }

    /// Random element of `c`.
    pub fn random_c<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        self.proj_c(&LieElement::random(self.n, rng))
    }

    /// Random element of `c^perp`.
    pub fn random_perp<R: Rng + ?Sized>(&self, rng: &mut R) -> LieElement {
        self.proj_perp(&LieElement::random(self.n, rng))
    }

    /// Random element of the group `C`, as `exp` of a random element of `c`.
    pub fn random_group_element<R: Rng + ?Sized>(&self, rng: &mut R) -> CMat {
        matrix::expm(self.random_c(rng).matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: &[f64]) -> [LieElement; 3] {
        let n = a.len();
        [LieElement::diagonal(a).unwrap(), LieElement::zeros(n), LieElement::zeros(n)]
    }

    #[test]
    fn non_contiguous_blocks_group_by_value() {
        let s = centralizer_blocks(&triple(&[1.0, -2.0, 1.0])).unwrap();
        assert_eq!(s.blocks(), vec![2, 1]);
        assert_eq!(s.labels(), &[0, 1, 0]);
        assert_eq!(s.dim_c(), 4);
        assert_eq!(s.basis_c().len(), 4);
        assert_eq!(s.basis_perp().len(), 4);
    }

    #[test]
    fn eta_is_smallest_root_square() {
        let s = centralizer_blocks(&triple(&[3.0, 1.0, -4.0])).unwrap();
        assert!((s.eta() - 4.0).abs() < 1e-12);
        let z = centralizer_blocks(&triple(&[0.0, 0.0])).unwrap();
        assert!(z.eta().is_infinite());
    }

    #[test]
    fn rejects_off_diagonal() {
        let mut t = triple(&[1.0, -1.0]);
        t[1] = LieElement::basis(2)[0].clone();
        assert!(centralizer_blocks(&t).is_err());
    }
}
