use crate::error::{Error, Result};
use crate::fflinalg::{Echelon, Elem, Field, Mat};
use crate::repmod::{hom_space, Module, Subspace};

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
struct Coords {
    rows: Mat,
    pivots: Vec<usize>,
    transform: Mat,
}

impl Coords {
    fn new(rows: Mat) -> Coords {
        let (rref, t) = rows.rref_with_transform();
        assert_eq!(rref.rank, rows.rows(), "coordinate basis must be independent");
        Coords {
            rows,
            pivots: rref.pivots,
            transform: t,
        }
    }

    fn solve(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        let d: Vec<Elem> = self.pivots.iter().map(|&c| x[c]).collect();
        let c = self.transform.vec_mul(&d);
        (self.rows.vec_mul(&c) == x).then_some(c)
    }
}

/// A finite-dimensional algebra of `n×n` matrices, given by a basis whose
/// first element is the identity.
#[derive(Clone, Debug)]
pub struct FDAlgebra {
    field: Field,
    n: usize,
    basis: Vec<Mat>,
    coords: Coords,
}

impl FDAlgebra {
    /// The span of `mats` together with the identity; the identity comes
    /// first and the remaining basis elements are the independent members
    /// of `mats` in order. Fails if the span is not closed under products.
    pub fn from_spanning(field: &Field, n: usize, mats: &[Mat]) -> Result<FDAlgebra> {
        let a = FDAlgebra::from_spanning_unchecked(field, n, mats);
        a.verify_closed()?;
        Ok(a)
    }

    pub(crate) fn from_spanning_unchecked(field: &Field, n: usize, mats: &[Mat]) -> FDAlgebra {
        let mut echelon = Echelon::new(field, n * n);
        let mut basis = Vec::new();
        let id = Mat::identity(field, n);
        for m in std::iter::once(&id).chain(mats) {
            if echelon.insert(m.data().to_vec()) {
                basis.push(m.clone());
            }
        }
        let rows: Vec<Vec<Elem>> = basis.iter().map(|b| b.data().to_vec()).collect();
        let coords = Coords::new(Mat::from_rows(field, n * n, &rows));
        FDAlgebra {
            field: field.clone(),
            n,
            basis,
            coords,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn coordinates(&self, x: &Mat) -> Option<Vec<Elem>> {
        self.coords.solve(x.data())
    }

    pub fn element(&self, coords: &[Elem]) -> Mat {
        let mut x = Mat::zeros(&self.field, self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            x.add_scaled(*c, b);
        }
        x
    }

    pub fn verify_closed(&self) -> Result<()> {
        for a in &self.basis {
            for b in &self.basis {
                if self.coordinates(&a.mul(b)).is_none() {
                    return Err(Error::Invariant("algebra basis is not closed under products".into()));
                }
            }
        }
        Ok(())
    }
}

/// `End_{kG}(M)`.
pub fn end_algebra(m: &Module) -> Result<FDAlgebra> {
    let basis = hom_space(m, m)?;
    let a = FDAlgebra::from_spanning_unchecked(m.field(), m.dim(), &basis);
    if a.dim() != basis.len() {
        return Err(Error::Invariant("identity is missing from the endomorphism basis".into()));
    }
    if cfg!(debug_assertions) && a.dim() <= 64 {
        a.verify_closed()?;
    }
    Ok(a)
}

/// Restriction of scalars `GF(p^m) → GF(p)` of one matrix: each entry
/// becomes the `m×m` matrix of multiplication in the polynomial basis.
fn restrict_scalars(x: &Mat, m: usize) -> Vec<u64> {
    let f = x.field();
    let n = x.rows();
    let big = n * m;
    let mut out = vec![0u64; big * big];
    let powers: Vec<Elem> = (0..m)
        .map(|s| {
            let mut d = vec![0; m];
            d[s] = 1;
            f.from_digits(&d)
        })
        .collect();
    for r in 0..n {
        for c in 0..n {
            let v = x.get(r, c);
            if v == 0 {
                continue;
            }
            for (s, &ws) in powers.iter().enumerate() {
                let digits = f.digits(f.mul(v, ws));
                for (t, &dig) in digits.iter().enumerate().take(m) {
                    out[(r * m + t) * big + c * m + s] = dig as u64;
                }
            }
        }
    }
    out
}

fn mul_mod(a: &[u64], b: &[u64], n: usize, modulus: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            let row = &b[k * n..(k + 1) * n];
            let dst = &mut out[i * n..(i + 1) * n];
            for (d, &y) in dst.iter_mut().zip(row) {
                *d = (*d + x * y) % modulus;
            }
        }
    }
    out
}

/// `Tr(X^{p^i}) / p^i mod p` for an integer lift `X` of a matrix over GF(p).
fn trace_power_digit(x: &[u64], n: usize, p: u64, i: u32) -> Result<u64> {
    let modulus = p.pow(i + 1);
    let mut acc = x.to_vec();
    for _ in 0..i {
        // acc <- acc^p
        let base = acc.clone();
        for _ in 1..p {
            acc = mul_mod(&acc, &base, n, modulus);
        }
    }
    let tr = (0..n).map(|k| acc[k * n + k]).sum::<u64>() % modulus;
    let scale = p.pow(i);
    if !tr.is_multiple_of(scale) {
        return Err(Error::Invariant("trace of a p-power is not divisible as expected".into()));
    }
    Ok(tr / scale)
}

/// The Jacobson radical, as a subspace of coordinate space `F^dim`.
///
/// Uses the characteristic-p trace chain: over the prime field, with the
/// algebra acting on `F_p^N`, set `I_{-1} = A` and
/// `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 for all b}` where
/// `g_i(a) = Tr(â^{p^i})/p^i mod p` for an integer lift `â`; then
/// `J(A) = I_l` with `l = ⌊log_p N⌋`. Algebras over `GF(p^m)` are first
/// viewed as algebras over `GF(p)`.
pub fn radical(a: &FDAlgebra) -> Result<Subspace> {
    let fq = a.field().clone();
    let p = fq.characteristic();
    let m = fq.degree() as usize;
    let fp = Field::prime(p)?;
    let k = a.dim();
    let big_k = k * m;
    let big_n = a.matrix_size() * m;

    // F_p basis: omega^t * b_u at index u*m + t
    let omega_pows: Vec<Elem> = (0..m)
        .map(|t| {
            let mut d = vec![0; m];
            d[t] = 1;
            fq.from_digits(&d)
        })
        .collect();
    let mut lifted: Vec<Vec<u64>> = Vec::with_capacity(big_k);
    for b in a.basis() {
        for &w in &omega_pows {
            lifted.push(restrict_scalars(&b.scale(w), m));
        }
    }
    let to_fp = |v: &[u64]| -> Vec<Elem> { v.iter().map(|&e| e as Elem).collect() };
    let coord_rows: Vec<Vec<Elem>> = lifted.iter().map(|x| to_fp(x)).collect();
    let coords = Coords::new(Mat::from_rows(&fp, big_n * big_n, &coord_rows));

    // level 0: the trace form
    let nn = big_n;
    let mut gamma = Mat::zeros(&fp, big_k, big_k);
    for t in 0..big_k {
        for j in 0..big_k {
            let (x, y) = (&lifted[t], &lifted[j]);
            let mut tr = 0u64;
            for u in 0..nn {
                for v in 0..nn {
                    tr += x[u * nn + v] * y[v * nn + u];
                }
            }
            gamma.set(t, j, (tr % p as u64) as Elem);
        }
    }
    let mut ideal = Subspace::span(&gamma.transpose().kernel_basis());

    let mut level = 1u32;
    while (p as usize).pow(level) <= big_n && !ideal.is_zero() {
        let r = ideal.dim();
        let elems: Vec<Vec<u64>> = ideal
            .basis()
            .row_vectors()
            .map(|c| combine(&lifted, c, p as u64, nn))
            .collect();
        let g: Vec<u64> = elems
            .iter()
            .map(|x| trace_power_digit(x, nn, p as u64, level))
            .collect::<Result<_>>()?;
        let mut gamma = Mat::zeros(&fp, r, big_k);
        for (t, x) in elems.iter().enumerate() {
            for (j, y) in lifted.iter().enumerate() {
                let prod = mul_mod(x, y, nn, p as u64);
                let in_a = coords
                    .solve(&to_fp(&prod))
                    .ok_or_else(|| Error::Invariant("product left the algebra".into()))?;
                let in_ideal = ideal
                    .coordinates(&in_a)
                    .ok_or_else(|| Error::Invariant("trace-chain ideal is not an ideal".into()))?;
                let val = in_ideal
                    .iter()
                    .zip(&g)
                    .fold(0u64, |acc, (&c, &gv)| (acc + c as u64 * gv) % p as u64);
                gamma.set(t, j, val as Elem);
            }
        }
        let kernel = gamma.transpose().kernel_basis();
        ideal = if kernel.rows() == 0 {
            Subspace::zero(&fp, big_k)
        } else {
            Subspace::span(&kernel.mul(ideal.basis()))
        };
        level += 1;
    }

    // back to GF(p^m) coordinates
    let rows: Vec<Vec<Elem>> = ideal
        .basis()
        .row_vectors()
        .map(|c| (0..k).map(|u| fq.from_digits(&c[u * m..(u + 1) * m])).collect())
        .collect();
    let j = Subspace::span(&Mat::from_rows(&fq, k, &rows));
    if j.dim() * m != ideal.dim() {
        return Err(Error::Invariant("radical is not a subspace over the full field".into()));
    }
    if cfg!(debug_assertions) && a.matrix_size() <= 64 && k <= 64 {
        check_radical(a, &j)?;
    }
    Ok(j)
}

fn combine(lifted: &[Vec<u64>], c: &[Elem], p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for (x, &ci) in lifted.iter().zip(c) {
        if ci == 0 {
            continue;
        }
        for (o, &v) in out.iter_mut().zip(x) {
            *o = (*o + ci as u64 * v) % p;
        }
    }
    out
}

/// Sanity checks: `J` is a two-sided ideal of nilpotent elements.
fn check_radical(a: &FDAlgebra, j: &Subspace) -> Result<()> {
    let elems: Vec<Mat> = j.basis().row_vectors().map(|c| a.element(c)).collect();
    for x in &elems {
        if !x.pow(a.matrix_size() as u64).is_zero() {
            return Err(Error::Invariant("radical element is not nilpotent".into()));
        }
        for b in a.basis() {
            for y in [x.mul(b), b.mul(x)] {
                let c = a
                    .coordinates(&y)
                    .ok_or_else(|| Error::Invariant("product left the algebra".into()))?;
                if !j.contains(&c) {
                    return Err(Error::Invariant("radical is not an ideal".into()));
                }
            }
        }
    }
    Ok(())
}
