//! Faces of the closed positive Weyl chamber of `su(n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::roots::{root_spaces, RootSpace};
use crate::lie::stratum::{centralizer_blocks, StratumData, BLOCK_TOL};

/// A chamber point `tau_1 = i diag(a)` with `a` non-increasing, its block
/// partition and the stratum of `(tau_1, 0, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylFace {
    tau1: LieElement,
    blocks: Vec<usize>,
    stratum: StratumData,
    permutation: Vec<usize>,
    roots: Vec<RootSpace>,
}

/// Serializable summary of a face.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceSummary {
    pub diagonal: Vec<f64>,
    pub blocks: Vec<usize>,
    pub permutation: Vec<usize>,
    pub alpha_values: Vec<f64>,
}

/// Sort a diagonal element into the chamber.
///
/// Entries are sorted so that the values `-i tau_1[j][j]` are
/// non-increasing; `permutation[j]` is the input position now at `j`.
/// Values within [`BLOCK_TOL`] of each other form one block.
pub fn weyl_face(tau1_raw: &LieElement) -> Result<WeylFace> {
    if !tau1_raw.is_diagonal(1e-12) {
        return Err(Error::InvalidElement("tau_1 must be diagonal".into()));
    }
    let a = tau1_raw.diagonal_values();
    let mut permutation: Vec<usize> = (0..a.len()).collect();
    permutation.sort_by(|&x, &y| a[y].partial_cmp(&a[x]).unwrap().then(x.cmp(&y)));
    let sorted: Vec<f64> = permutation.iter().map(|&j| a[j]).collect();
    let tau1 = LieElement::diagonal(&sorted)?;
    let n = sorted.len();
    let stratum = centralizer_blocks(&[tau1.clone(), LieElement::zeros(n), LieElement::zeros(n)])?;
    let blocks = stratum.blocks();
    let roots = root_spaces(&tau1, &stratum)?;
    Ok(WeylFace { tau1, blocks, stratum, permutation, roots })
}

impl WeylFace {
    /// Face of a chamber point given by its non-increasing values.
    pub fn from_values(a: &[f64]) -> Result<WeylFace> {
        if a.windows(2).any(|w| w[1] > w[0] + BLOCK_TOL) {
            return Err(Error::Face("values must be non-increasing".into()));
        }
        weyl_face(&LieElement::diagonal(a)?)
    }

    pub fn tau1(&self) -> &LieElement {
        &self.tau1
    }

    /// Block sizes in chamber order.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn stratum(&self) -> &StratumData {
        &self.stratum
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Root spaces of `ad(tau_1)` on `c^perp`.
    pub fn roots(&self) -> &[RootSpace] {
        &self.roots
    }

    pub fn alpha_values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.alpha_value).collect()
    }

    pub fn n(&self) -> usize {
        self.tau1.dim()
    }

    /// Whether `x` lies in the open face: diagonal, non-increasing, equal
    /// within blocks and different across blocks, all to `tol`.
    pub fn contains(&self, x: &LieElement, tol: f64) -> bool {
        if x.dim() != self.n() || !x.is_diagonal(tol) {
            return false;
        }
        let a = x.diagonal_values();
        let mut start = 0;
        let mut prev_last: Option<f64> = None;
        for &d in &self.blocks {
            let blk = &a[start..start + d];
            let hi = blk.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = blk.iter().cloned().fold(f64::INFINITY, f64::min);
            if hi - lo > tol {
                return false;
            }
            if let Some(p) = prev_last {
                if !(p - hi > tol) {
                    return false;
                }
            }
            prev_last = Some(lo);
            start += d;
        }
        true
    }

    pub fn summary(&self) -> FaceSummary {
        FaceSummary {
            diagonal: self.tau1.diagonal_values(),
            blocks: self.blocks.clone(),
            permutation: self.permutation.clone(),
            alpha_values: self.alpha_values(),
        }
    }
}
