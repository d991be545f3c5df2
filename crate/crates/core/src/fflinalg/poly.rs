//! Univariate polynomials over a finite field.

use std::fmt;

use super::field::{Elem, Field};
use super::mat::Mat;

/// Polynomial with coefficients low to high; never has a zero leading
/// coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{}*x", c)?,
                (_, 1) => write!(f, "x^{}", i)?,
                _ => write!(f, "{}*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![0, 1])
    }

    /// `x - c`
    pub fn linear(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![field.neg(c), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = &self.field;
        let db = divisor.coeffs.len() - 1;
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![0; rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(rem[shift + db], lead_inv);
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b));
            }
        }
        rem.truncate(db);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_mat(&self, a: &Mat) -> Mat {
        let n = a.rows();
        let mut acc = Mat::zeros(a.field(), n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            acc.add_scalar_identity(c);
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(&self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Monic irreducible factors of a squarefree polynomial, by Berlekamp's
    /// algorithm. The output is sorted by degree, then coefficients.
    pub fn factor_squarefree(&self) -> Vec<Poly> {
        let f = &self.field;
        let target = self.monic();
        let n = match target.degree() {
            None | Some(0) => return vec![],
            Some(n) => n,
        };
        if n == 1 {
            return vec![target];
        }
        debug_assert!(target.is_squarefree(), "Berlekamp needs a squarefree input");
        let q = f.order() as u64;
        // rows: x^{q i} mod target
        let xq = Poly::x(f).pow_mod(q, &target);
        let mut berlekamp = Mat::zeros(f, n, n);
        let mut row = Poly::one(f);
        for i in 0..n {
            for j in 0..n {
                berlekamp.set(i, j, row.coeff(j));
            }
            row = row.mul(&xq).rem(&target);
        }
        for i in 0..n {
            let d = berlekamp.get(i, i);
            berlekamp.set(i, i, f.sub(d, 1));
        }
        // v (B - I) = 0  <=>  (B - I)^T v^T = 0
        let kernel = berlekamp.transpose().kernel_basis();
        let r = kernel.rows();
        let mut factors = vec![target];
        if r <= 1 {
            return factors;
        }
        for k in 0..r {
            if factors.len() == r {
                break;
            }
            let h = Poly::new(f, kernel.row(k).to_vec());
            if h.degree().unwrap_or(0) == 0 {
                continue;
            }
            let mut next = Vec::new();
            for g in factors {
                if g.degree() == Some(1) {
                    next.push(g);
                    continue;
                }
                let mut pending = vec![g];
                for c in f.elements() {
                    let mut split = Vec::new();
                    for piece in pending {
                        let d = piece.gcd(&h.sub(&Poly::constant(f, c)));
                        let dd = d.degree().unwrap_or(0);
                        if dd > 0 && dd < piece.degree().unwrap() {
                            let (quot, _) = piece.divrem(&d);
                            split.push(d);
                            split.push(quot.monic());
                        } else {
                            split.push(piece);
                        }
                    }
                    pending = split;
                }
                next.extend(pending);
            }
            factors = next;
        }
        factors.sort_by(|a, b| a.coeffs.len().cmp(&b.coeffs.len()).then(a.coeffs.cmp(&b.coeffs)));
        factors
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        let f = &self.field;
        let Some(n) = self.degree() else {
            return Poly::zero(f);
        };
        if n == 0 {
            return Poly::one(f);
        }
        let d = self.derivative();
        if d.is_zero() {
            // self = h(x^p); take p-th roots of the coefficients
            let p = f.characteristic() as usize;
            let root_exp = (f.order() / f.characteristic()) as u64;
            let coeffs = (0..=n / p).map(|i| f.pow(self.coeff(i * p), root_exp)).collect();
            return Poly::new(f, coeffs).squarefree_part();
        }
        let g = self.gcd(&d);
        let h = self.divrem(&g).0.monic();
        if g.degree() == Some(0) {
            return h;
        }
        let rg = g.squarefree_part();
        let common = h.gcd(&rg);
        h.mul(&rg).divrem(&common).0.monic()
    }

    /// The distinct monic irreducible factors, sorted as in
    /// [`Poly::factor_squarefree`].
    pub fn distinct_factors(&self) -> Vec<Poly> {
        self.squarefree_part().factor_squarefree()
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => self.is_squarefree() && self.factor_squarefree().len() == 1,
        }
    }
}
