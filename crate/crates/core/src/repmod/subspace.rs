use crate::error::{Error, Result};
use crate::fflinalg::{axpy, Elem, Field, Mat};

/// A subspace of `F^n`, stored as the RREF rows of its basis. Equal
/// subspaces always have identical bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `rows`.
    pub fn span(rows: &Mat) -> Subspace {
        Subspace::from_rref(rows.row_space())
    }

    pub fn zero(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace::from_rref(Mat::zeros(field, 0, ambient_dim))
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace::from_rref(Mat::identity(field, ambient_dim))
    }

    fn from_rref(basis: Mat) -> Subspace {
        let pivots = basis
            .row_vectors()
            .map(|r| r.iter().position(|&e| e != 0).expect("RREF rows are nonzero"))
            .collect();
        Subspace { basis, pivots }
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the components along the basis, leaving zeros in every
    /// pivot column; returns the coordinates that were removed.
    pub fn reduce(&self, v: &mut [Elem]) -> Vec<Elem> {
        let f = self.field().clone();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            coords.push(c);
            if c != 0 {
                axpy(&f, v, f.neg(c), self.basis.row(i));
            }
        }
        coords
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&e| e == 0)
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        w.iter().all(|&e| e == 0).then_some(c)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.row_vectors().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::span(&self.basis.vstack(&other.basis)))
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient_dim());
        }
        Subspace::from_rref(self.basis.kernel_basis())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let both = self.annihilator().basis.vstack(&other.annihilator().basis);
        if both.rows() == 0 {
            return Ok(Subspace::full(self.field(), self.ambient_dim()));
        }
        Ok(Subspace::from_rref(both.kernel_basis()))
    }

    /// Columns outside the pivot set: the standard basis vectors there span
    /// a canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim()).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        if self.field() != other.field() {
            return Err(Error::field_mismatch(self.field(), other.field()));
        }
        Ok(())
    }
}
