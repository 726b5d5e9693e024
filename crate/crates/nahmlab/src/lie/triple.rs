//! su(2)-triples: `[sigma_1, sigma_2] = -2 sigma_3` and cyclic.

use super::element::LieElement;
use super::matrix::{CMat, C64};
use super::stratum::StratumData;
use crate::error::{Error, Result};

/// Tolerance on the bracket relations and on membership in `[c,c]`.
pub const TRIPLE_TOL: f64 = 1e-10;

/// A validated su(2)-triple.
#[derive(Clone, Debug, PartialEq)]
pub struct Su2Triple {
    sigma: [LieElement; 3],
}

impl Su2Triple {
    /// Check the bracket relations entrywise to [`TRIPLE_TOL`].
    pub fn new(sigma: [LieElement; 3]) -> Result<Self> {
        let r = bracket_defect(&sigma)?;
        if r > TRIPLE_TOL {
            return Err(Error::InvalidTriple(format!("bracket relations fail by {r:.3e}")));
        }
        Ok(Su2Triple { sigma })
    }

    /// The trivial triple `(0, 0, 0)`.
    pub fn zero(n: usize) -> Self {
        Su2Triple { sigma: [LieElement::zeros(n), LieElement::zeros(n), LieElement::zeros(n)] }
    }

    /// Components.
    pub fn sigma(&self) -> &[LieElement; 3] {
        &self.sigma
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.sigma[0].dim()
    }

    /// Whether all components vanish.
    pub fn is_zero(&self) -> bool {
        self.sigma.iter().all(|s| s.max_abs() == 0.0)
    }

    /// Check that every component lies in `[c,c]` of `s`.
    pub fn check_in(&self, s: &StratumData) -> Result<()> {
        for x in &self.sigma {
            if x.dim() != s.n() {
                return Err(Error::DimensionMismatch(x.dim(), s.n()));
            }
            let (z, _, h) = s.split(x);
            let off = (z.norm_sq() + h.norm_sq()).sqrt();
            if off > TRIPLE_TOL {
                return Err(Error::OutsideCentralizer(off));
            }
        }
        Ok(())
    }

    /// Conjugate every component by a unitary matrix.
    pub fn conjugate(&self, u: &CMat) -> Su2Triple {
        Su2Triple {
            sigma: [
                self.sigma[0].ad_unitary(u),
                self.sigma[1].ad_unitary(u),
                self.sigma[2].ad_unitary(u),
            ],
        }
    }
}

/// Largest entry of `[sigma_i, sigma_j] + 2 sigma_k` over cyclic `(ijk)`.
pub fn bracket_defect(sigma: &[LieElement; 3]) -> Result<f64> {
    let mut worst = 0.0f64;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let r = &sigma[i].bracket(&sigma[j])? + &(&sigma[k] * 2.0);
        worst = worst.max(r.max_abs());
    }
    Ok(worst)
}

/// Irreducible `d`-dimensional su(2)-triple `2i (J_z, J_x, J_y)` from the
/// spin `(d - 1)/2` ladder.
pub fn irreducible_triple(d: usize) -> [CMat; 3] {
    let j = (d as f64 - 1.0) / 2.0;
    let mut jz = CMat::zeros(d, d);
    let mut jp = CMat::zeros(d, d);
    for a in 0..d {
        let m = j - a as f64;
        jz[(a, a)] = C64::new(m, 0.0);
        if a > 0 {
            // J_+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> is index a-1.
            jp[(a - 1, a)] = C64::new((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
        }
    }
    let jm = jp.adjoint();
    let jx = (&jp + &jm) * C64::new(0.5, 0.0);
    let jy = (&jp - &jm) * C64::new(0.0, -0.5);
    let two_i = C64::new(0.0, 2.0);
    [jz * two_i, jx * two_i, jy * two_i]
}

/// Build the triple attached to one partition per block of `s`, placing the
/// irreducible pieces block-diagonally on the positions of each block.
pub fn su2_triple_from_partition(s: &StratumData, parts: &[Vec<usize>]) -> Result<Su2Triple> {
    if parts.len() != s.num_blocks() {
        return Err(Error::Partition(format!(
            "{} part lists for {} blocks",
            parts.len(),
            s.num_blocks()
        )));
    }
    let n = s.n();
    let mut sigma = [CMat::zeros(n, n), CMat::zeros(n, n), CMat::zeros(n, n)];
    for (b, p) in parts.iter().enumerate() {
        let mem = s.block_members(b);
        if p.iter().sum::<usize>() != mem.len() || p.contains(&0) {
            return Err(Error::Partition(format!(
                "parts {p:?} do not partition a block of size {}",
                mem.len()
            )));
        }
        let mut off = 0;
        for &d in p {
            let irr = irreducible_triple(d);
            for (i, m) in irr.iter().enumerate() {
                for r in 0..d {
                    for c in 0..d {
                        sigma[i][(mem[off + r], mem[off + c])] = m[(r, c)];
                    }
                }
            }
            off += d;
        }
    }
    let [a, b, c] = sigma;
    let t = Su2Triple::new([LieElement::new(a)?, LieElement::new(b)?, LieElement::new(c)?])?;
    t.check_in(s)?;
    Ok(t)
}

/// All partitions of `n` in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every choice of one partition per block of `s`.
pub fn stratum_partitions(s: &StratumData) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for size in s.blocks() {
        let ps = partitions(size);
        let mut next = Vec::new();
        for prefix in &out {
            for p in &ps {
                let mut q = prefix.clone();
                q.push(p.clone());
                next.push(q);
            }
        }
        out = next;
    }
    out
}
