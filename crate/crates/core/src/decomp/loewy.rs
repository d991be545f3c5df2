use super::algebra::{radical, FDAlgebra};
use crate::error::Result;
use crate::fflinalg::Mat;
use crate::repmod::{Module, Subspace};

/// The image of the group algebra in `End_k(M)`.
pub fn group_algebra_image(m: &Module) -> Result<FDAlgebra> {
    FDAlgebra::from_spanning(m.field(), m.dim(), m.element_matrices())
}

/// Basis matrices of `J(kG)` acting on `M`.
fn radical_action(m: &Module) -> Result<Vec<Mat>> {
    let a = group_algebra_image(m)?;
    let j = radical(&a)?;
    Ok(j.basis().row_vectors().map(|c| a.element(c)).collect())
}

/// `rad M = J(kG) M`.
pub fn radical_submodule(m: &Module) -> Result<Subspace> {
    let f = m.field();
    let mut span = Subspace::zero(f, m.dim());
    for x in radical_action(m)? {
        span = span.sum(&Subspace::span(&x.transpose()))?;
    }
    Ok(span)
}

/// `soc M = {v : J(kG) v = 0}`.
pub fn socle(m: &Module) -> Result<Subspace> {
    let f = m.field();
    let js = radical_action(m)?;
    if js.is_empty() {
        return Ok(Subspace::full(f, m.dim()));
    }
    let mut stacked = Mat::zeros(f, 0, m.dim());
    for x in js {
        stacked = stacked.vstack(&x);
    }
    Ok(Subspace::span(&stacked.kernel_basis()))
}

/// `M / rad M`.
pub fn head(m: &Module) -> Result<Module> {
    m.quotient(&radical_submodule(m)?)
}

/// Layer dimensions of the radical and socle series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewyLayers {
    /// `dim rad^i M / rad^{i+1} M`, top first.
    pub radical_layers: Vec<usize>,
    /// `dim soc^{i+1} M / soc^i M`, bottom first.
    pub socle_layers: Vec<usize>,
}

impl LoewyLayers {
    pub fn loewy_length(&self) -> usize {
        self.radical_layers.len()
    }
}

pub fn loewy_layers(m: &Module) -> Result<LoewyLayers> {
    let mut radical_layers = Vec::new();
    let mut cur = m.clone();
    while cur.dim() > 0 {
        let r = radical_submodule(&cur)?;
        radical_layers.push(cur.dim() - r.dim());
        cur = cur.submodule(&r)?;
    }
    let mut socle_layers = Vec::new();
    let mut cur = m.clone();
    while cur.dim() > 0 {
        let s = socle(&cur)?;
        socle_layers.push(s.dim());
        cur = cur.quotient(&s)?;
    }
    Ok(LoewyLayers {
        radical_layers,
        socle_layers,
    })
}
