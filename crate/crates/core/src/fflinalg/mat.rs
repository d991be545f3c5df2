//! Dense row-major matrices over a finite field.
//!
//! Vectors are rows when they span subspaces and columns when matrices act
//! on them: `A v` is the image of `v` under `A`.

use std::fmt;

use super::field::{Elem, Field};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Mat {
        assert_eq!(rows * cols, data.len(), "entry count does not match shape");
        debug_assert!(data.iter().all(|&e| e < field.order()));
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat::from_vec(field, rows.len(), cols, data)
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat::from_vec(field, rows, cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vec<Elem>]) -> Mat {
        Mat::from_fn(field, rows, cols.len(), |i, j| cols[j][i])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as Elem))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        debug_assert!(self.field == other.field);
        let f = &self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        let n = other.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    axpy(f, dst, a, &other.data[k * n..(k + 1) * n]);
                }
            }
        }
        out
    }

    /// `A v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// `v A` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.rows, v.len());
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(f, &mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Mat::from_vec(
            f,
            self.rows,
            self.cols,
            self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        )
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Mat::from_vec(
            f,
            self.rows,
            self.cols,
            self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        )
    }

    pub fn scale(&self, c: Elem) -> Mat {
        let f = &self.field;
        Mat::from_vec(f, self.rows, self.cols, self.data.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: Elem, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c != 0 {
            let f = self.field.clone();
            axpy(&f, &mut self.data, c, &other.data);
        }
    }

    /// `self += c * I`
    pub fn add_scalar_identity(&mut self, c: Elem) {
        assert!(self.is_square());
        let f = self.field.clone();
        for i in 0..self.rows {
            let v = self.get(i, i);
            self.set(i, i, f.add(v, c));
        }
    }

    pub fn trace(&self) -> Elem {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat::from_vec(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn select_rows(&self, range: std::ops::Range<usize>) -> Mat {
        Mat::from_vec(
            &self.field,
            range.len(),
            self.cols,
            self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        )
    }

    pub fn select_cols(&self, range: std::ops::Range<usize>) -> Mat {
        Mat::from_fn(&self.field, self.rows, range.len(), |i, j| self.get(i, range.start + j))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Mat) -> Mat {
        let f = &self.field;
        Mat::from_fn(f, self.rows * other.rows, self.cols * other.cols, |i, j| {
            f.mul(
                self.get(i / other.rows, j / other.cols),
                other.get(i % other.rows, j % other.cols),
            )
        })
    }

    /// Block diagonal matrix.
    pub fn block_diagonal(field: &Field, blocks: &[Mat]) -> Mat {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(None);
        Rref {
            rank: pivots.len(),
            reduced: m,
            pivots,
        }
    }

    /// In-place elimination; when `transform` is given, the same row
    /// operations are applied to it. Returns the pivot columns.
    fn rref_in_place(&mut self, mut transform: Option<&mut Mat>) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
                if let Some(t) = transform.as_deref_mut() {
                    t.swap_rows(pr, r);
                }
            }
            let inv = f.inv(self.get(r, c));
            if inv != 1 {
                self.scale_row(r, inv);
                if let Some(t) = transform.as_deref_mut() {
                    t.scale_row(r, inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor != 0 {
                    let neg = f.neg(factor);
                    self.row_axpy(i, neg, r);
                    if let Some(t) = transform.as_deref_mut() {
                        t.row_axpy(i, neg, r);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    fn scale_row(&mut self, r: usize, c: Elem) {
        let f = self.field.clone();
        for v in self.row_mut(r) {
            *v = f.mul(*v, c);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, c: Elem, src: usize) {
        let f = self.field.clone();
        let n = self.cols;
        if dst < src {
            let (head, tail) = self.data.split_at_mut(src * n);
            axpy(&f, &mut head[dst * n..(dst + 1) * n], c, &tail[..n]);
        } else {
            let (head, tail) = self.data.split_at_mut(dst * n);
            axpy(&f, &mut tail[..n], c, &head[src * n..(src + 1) * n]);
        }
    }

    /// RREF together with the invertible `T` such that `T * self` is the
    /// reduced form.
    pub fn rref_with_transform(&self) -> (Rref, Mat) {
        let mut m = self.clone();
        let mut t = Mat::identity(&self.field, self.rows);
        let pivots = m.rref_in_place(Some(&mut t));
        (
            Rref {
                rank: pivots.len(),
                reduced: m,
                pivots,
            },
            t,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis (RREF rows) of the row space.
    pub fn row_space(&self) -> Mat {
        let r = self.rref();
        r.reduced.select_rows(0..r.rank)
    }

    /// Basis of the right null space `{v : A v = 0}`, as RREF rows.
    pub fn kernel_basis(&self) -> Mat {
        let r = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut basis = Mat::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (pr, &pc) in r.pivots.iter().enumerate() {
                basis.set(k, pc, f.neg(r.reduced.get(pr, fc)));
            }
        }
        basis.row_space()
    }

    /// Basis of the column space `{A v}`, as RREF rows.
    pub fn image_basis(&self) -> Mat {
        self.transpose().row_space()
    }

    /// Solve `A x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} for a {}x{} system",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        let aug = self.hstack(&Mat::from_vec(f, self.rows, 1, b.to_vec()));
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (pr, &pc) in r.pivots.iter().enumerate() {
            x[pc] = r.reduced.get(pr, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let mut m = self.clone();
        let mut t = Mat::identity(&self.field, self.rows);
        let pivots = m.rref_in_place(Some(&mut t));
        (pivots.len() == self.rows).then_some(t)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Minimal polynomial via the first linear dependency among I, A, A², ….
    pub fn min_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
        }
        let f = &self.field;
        let n = self.rows;
        let mut echelon = Echelon::new(f, n * n);
        let mut power = Mat::identity(f, n);
        for k in 0..=n {
            if let Some(relation) = echelon.insert_tracked(power.data.clone(), k) {
                return Ok(Poly::new(f, relation).monic());
            }
            power = power.mul(self);
        }
        Err(Error::Invariant("no dependency among matrix powers".into()))
    }

    /// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    let (a, b) = (h.get(r, i), h.get(r, m));
                    h.set(r, i, b);
                    h.set(r, m, a);
                }
            }
            let pivot_inv = f.inv(h.get(m, m - 1));
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), pivot_inv);
                if u == 0 {
                    continue;
                }
                h.row_axpy(i, f.neg(u), m);
                for r in 0..n {
                    let v = f.add(h.get(r, m), f.mul(u, h.get(r, i)));
                    h.set(r, m, v);
                }
            }
        }
        let mut p: Vec<Poly> = vec![Poly::one(&f)];
        for k in 1..=n {
            let mut pk = Poly::linear(&f, h.get(k - 1, k - 1)).mul(&p[k - 1]);
            let mut t = 1;
            for i in 1..k {
                t = f.mul(t, h.get(k - i, k - i - 1));
                let c = f.mul(t, h.get(k - i - 1, k - 1));
                pk = pk.sub(&p[k - i - 1].scale(c));
            }
            p.push(pk);
        }
        Ok(p.pop().unwrap())
    }

    /// Entrywise image under the canonical embedding into `to`.
    pub fn extend_scalars(&self, to: &Field) -> Result<Mat> {
        if &self.field == to {
            return Ok(self.clone());
        }
        let table = self.field.embedding_into(to)?;
        Ok(Mat::from_vec(
            to,
            self.rows,
            self.cols,
            self.data.iter().map(|&e| table[e as usize]).collect(),
        ))
    }
}

/// `dst += c * src` over `f`.
#[inline]
pub(crate) fn axpy(f: &Field, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    debug_assert_eq!(dst.len(), src.len());
    if c == 0 {
        return;
    }
    if f.characteristic() == 2 && f.degree() == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
        return;
    }
    if c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = f.add(*d, s);
        }
        return;
    }
    let lc = f.log(c);
    for (d, &s) in dst.iter_mut().zip(src) {
        if s != 0 {
            *d = f.add(*d, f.exp(lc + f.log(s)));
        }
    }
}

/// Incremental echelon basis of row vectors. Each stored vector is kept
/// with its combination of the inserted vectors, so dependencies and
/// coordinates can be read off.
#[derive(Clone)]
pub struct Echelon {
    field: Field,
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<Elem>>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: &Field, len: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; returns the residue and the
    /// combination (over the inserted vectors) that was subtracted.
    fn reduce(&self, v: &mut [Elem], combo: &mut Vec<Elem>) {
        let f = &self.field;
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                let neg = f.neg(c);
                axpy(f, v, neg, &self.rows[k]);
                let ck = &self.combos[k];
                if combo.len() < ck.len() {
                    combo.resize(ck.len(), 0);
                }
                axpy(f, &mut combo[..ck.len()], neg, ck);
            }
        }
    }

    /// Inserts `v` (labelled as insertion index `label`). Returns `Some(c)`
    /// if `v` was dependent, where `Σ c_i v_i = 0` over inserted vectors.
    pub fn insert_tracked(&mut self, mut v: Vec<Elem>, label: usize) -> Option<Vec<Elem>> {
        assert_eq!(v.len(), self.len);
        let f = self.field.clone();
        let mut combo = vec![0; label + 1];
        combo[label] = 1;
        self.reduce(&mut v, &mut combo);
        self.inserted = self.inserted.max(label + 1);
        match v.iter().position(|&e| e != 0) {
            None => Some(combo),
            Some(pc) => {
                let inv = f.inv(v[pc]);
                for e in v.iter_mut() {
                    *e = f.mul(*e, inv);
                }
                for e in combo.iter_mut() {
                    *e = f.mul(*e, inv);
                }
                self.rows.push(v);
                self.pivots.push(pc);
                self.combos.push(combo);
                None
            }
        }
    }

    /// Inserts `v`, returning true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<Elem>) -> bool {
        let label = self.inserted;
        self.insert_tracked(v, label).is_none()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        let mut scratch = Vec::new();
        self.reduce(&mut w, &mut scratch);
        w.iter().all(|&e| e == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mat(f: &Field, r: usize, c: usize, rng: &mut ChaCha8Rng) -> Mat {
        Mat::from_fn(f, r, c, |_, _| rng.gen_range(0..f.order()))
    }

    #[test]
    fn identity_and_zero() {
        let f = Field::new(2, 1).unwrap();
        let i = Mat::identity(&f, 5);
        assert_eq!(i.rank(), 5);
        assert_eq!(i.kernel_basis().rows(), 0);
        let z = Mat::zeros(&f, 4, 4);
        assert_eq!(z.kernel_basis(), Mat::identity(&f, 4));
        assert_eq!(z.image_basis().rows(), 0);
    }

    // Independent rank oracle: elimination by counting nonzero rows after
    // plain forward elimination, without back-substitution.
    fn forward_rank(a: &Mat) -> usize {
        let f = a.field().clone();
        let mut rows: Vec<Vec<Elem>> = a.row_vectors().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for c in 0..a.cols() {
            if let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) {
                rows.swap(p, rank);
                let inv = f.inv(rows[rank][c]);
                for i in rank + 1..rows.len() {
                    let factor = f.mul(rows[i][c], inv);
                    for j in 0..a.cols() {
                        let t = f.mul(factor, rows[rank][j]);
                        rows[i][j] = f.sub(rows[i][j], t);
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn rank_nullity_gf2() {
        let f = Field::new(2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut a = random_mat(&f, 20, 20, &mut rng);
            // force some dependencies
            for j in 0..20 {
                let v = f.add(a.get(0, j), a.get(1, j));
                a.set(2, j, v);
            }
            let k = a.kernel_basis();
            assert_eq!(a.rank() + k.rows(), 20);
            assert_eq!(a.rank(), forward_rank(&a));
            for row in k.row_vectors() {
                assert!(a.mul_vec(row).iter().all(|&e| e == 0));
            }
        }
    }

    #[test]
    fn solve_and_inverse() {
        let f = Field::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = loop {
            let a = random_mat(&f, 6, 6, &mut rng);
            if a.is_invertible() {
                break a;
            }
        };
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let b: Vec<Elem> = (0..6).map(|i| i as Elem).collect();
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(a.solve(&[1]).is_err());
        let z = Mat::zeros(&f, 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
    }

    #[test]
    fn min_poly_examples() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(Mat::identity(&f, 4).min_poly().unwrap(), Poly::new(&f, vec![1, 1]));
        let mut j = Mat::zeros(&f, 3, 3);
        j.set(0, 1, 1);
        j.set(1, 2, 1);
        assert_eq!(j.min_poly().unwrap(), Poly::new(&f, vec![0, 0, 0, 1]));
        assert!(Mat::zeros(&f, 2, 3).min_poly().is_err());
    }

    #[test]
    fn cayley_hamilton_gf3() {
        let f = Field::new(3, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let a = random_mat(&f, 8, 8, &mut rng);
            let cp = a.char_poly().unwrap();
            assert_eq!(cp.degree(), Some(8));
            assert!(cp.eval_mat(&a).is_zero());
            let mp = a.min_poly().unwrap();
            assert!(mp.eval_mat(&a).is_zero());
            assert!(cp.rem(&mp).is_zero(), "min poly must divide char poly");
        }
    }

    #[test]
    fn extension_preserves_rank() {
        let f2 = Field::new(2, 1).unwrap();
        let f4 = Field::new(2, 2).unwrap();
        assert!(Mat::identity(&f2, 3).extend_scalars(&f4).unwrap().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random_mat(&f2, 7, 9, &mut rng);
            assert_eq!(a.rank(), a.extend_scalars(&f4).unwrap().rank());
        }
        let f3 = Field::new(3, 1).unwrap();
        assert!(a_over(&f3).extend_scalars(&f4).is_err());
    }

    fn a_over(f: &Field) -> Mat {
        Mat::identity(f, 2)
    }

    #[test]
    fn extension_diagonalizes_irreducible_quadratic() {
        let f3 = Field::new(3, 1).unwrap();
        let f9 = Field::new(3, 2).unwrap();
        // companion matrix of x^2 + 1
        let a = Mat::from_rows(&f3, 2, &[vec![0, 2], vec![1, 0]]);
        let mp = a.min_poly().unwrap();
        assert!(mp.is_irreducible());
        assert_eq!(f3.elements().filter(|&x| mp.eval(x) == 0).count(), 0);
        let a9 = a.extend_scalars(&f9).unwrap();
        let mp9 = a9.min_poly().unwrap();
        let roots: Vec<Elem> = f9.elements().filter(|&x| mp9.eval(x) == 0).collect();
        assert_eq!(roots.len(), 2);
        // two distinct eigenvalues in dimension 2: eigenspaces span
        let dims: usize = roots
            .iter()
            .map(|&r| {
                let mut m = a9.clone();
                m.add_scalar_identity(f9.neg(r));
                m.kernel_basis().rows()
            })
            .sum();
        assert_eq!(dims, 2);
    }

    #[test]
    fn echelon_tracks_relations() {
        let f = Field::new(3, 1).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert_tracked(vec![1, 0, 1], 0).is_none());
        assert!(e.insert_tracked(vec![0, 1, 1], 1).is_none());
        let rel = e.insert_tracked(vec![1, 1, 2], 2).unwrap();
        // a multiple of v0 + v1 - v2 = 0
        assert_eq!(rel, vec![2, 2, 1]);
        assert!(e.contains(&[2, 2, 1]));
    }
}
