//! Finite fields GF(p^m) with table-driven arithmetic.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `c_i` are the
//! coefficients of the polynomial representative modulo the field's
//! defining polynomial. The prime subfield is therefore `0..p`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Encoded field element.
pub type Elem = u32;

/// Largest field order supported by the table-driven arithmetic.
pub const MAX_FIELD_ORDER: u32 = 1 << 20;

const ADD_TABLE_LIMIT: u32 = 729;

struct FieldData {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<Elem>>,
}

/// Handle to a finite field. Cloning is cheap; fields with equal `(p, m)`
/// are the same field.
#[derive(Clone)]
pub struct Field {
    data: Arc<FieldData>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.data.p == other.data.p && self.data.m == other.data.m
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.data.m == 1 {
            write!(f, "GF({})", self.data.p)
        } else {
            write!(f, "GF({}^{})", self.data.p, self.data.m)
        }
    }
}

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

type EmbeddingKey = (u32, u32, u32);

fn embedding_cache() -> &'static Mutex<HashMap<EmbeddingKey, Arc<Vec<Elem>>>> {
    static CACHE: OnceLock<Mutex<HashMap<EmbeddingKey, Arc<Vec<Elem>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomial helpers over GF(p), coefficient vectors low to high.
// Only used while building tables.

fn prime_poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    prime_poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let t = c * bi % p;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        prime_poly_trim(&mut r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn decode(code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut c = code;
    (0..m)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Irreducibility by trial division over all monic polynomials of degree
/// at most `deg / 2`.
fn prime_poly_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = decode(low, p, d as u32);
            g.push(1);
            if prime_poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Least monic irreducible polynomial of degree `m` over GF(p), ordered by
/// the integer code of its lower coefficients.
fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = p.pow(m);
    for low in 0..count {
        let mut f = decode(low, p, m);
        f.push(1);
        if prime_poly_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// GF(p^m), built once and cached.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::Precondition("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        let Some(q) = q else {
            return Err(Error::ResourceCap {
                what: "field order",
                limit: MAX_FIELD_ORDER as usize,
            });
        };
        let q = q as u32;
        if let Some(f) = field_cache().lock().unwrap().get(&(p, m)) {
            return Ok(f.clone());
        }
        let field = Field {
            data: Arc::new(build_tables(p, m, q)),
        };
        let mut cache = field_cache().lock().unwrap();
        Ok(cache.entry((p, m)).or_insert(field).clone())
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.data.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.data.m
    }

    pub fn order(&self) -> u32 {
        self.data.q
    }

    /// Defining polynomial over GF(p), monic, low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.data.modulus
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.data.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let d = &*self.data;
        if d.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &d.add {
            return t[(a * d.q + b) as usize];
        }
        if d.m == 1 {
            let s = a + b;
            return if s >= d.p { s - d.p } else { s };
        }
        let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % d.p + y % d.p) % d.p) * place;
            x /= d.p;
            y /= d.p;
            place *= d.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.data.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.data;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero in {}", self);
        let d = &*self.data;
        let n = d.q - 1;
        d.exp[((n - d.log[a as usize]) % n) as usize]
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.data;
        let n = (d.q - 1) as u64;
        d.exp[((d.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Logarithm-table row helper: `log(a)` for nonzero `a`.
    #[inline]
    pub(crate) fn log(&self, a: Elem) -> u32 {
        self.data.log[a as usize]
    }

    #[inline]
    pub(crate) fn exp(&self, i: u32) -> Elem {
        self.data.exp[i as usize]
    }

    /// Coefficients of `a` over GF(p) in the power basis, low to high.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        decode(a, self.data.p, self.data.m)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Elem {
        assert!(digits.len() <= self.data.m as usize);
        encode(digits, self.data.p)
    }

    /// The class of `x`, a root of the defining polynomial.
    pub fn generator(&self) -> Elem {
        if self.data.m == 1 {
            // the prime field is generated by 1
            1
        } else {
            self.data.p
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.data.q
    }

    pub fn is_subfield_of(&self, other: &Field) -> bool {
        self.data.p == other.data.p && other.data.m.is_multiple_of(self.data.m)
    }

    /// Extension of this field of the given relative degree.
    pub fn extension(&self, relative_degree: u32) -> Result<Field> {
        Field::new(self.data.p, self.data.m * relative_degree)
    }

    /// Table of the canonical embedding `self -> to`: the generator is sent
    /// to the least root (by code) of the defining polynomial in `to`.
    pub fn embedding_into(&self, to: &Field) -> Result<Arc<Vec<Elem>>> {
        if !self.is_subfield_of(to) {
            return Err(Error::field_mismatch(self, to));
        }
        let key = (self.data.p, self.data.m, to.data.m);
        if let Some(t) = embedding_cache().lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let table: Vec<Elem> = if self.data.m == 1 {
            (0..self.data.q).collect()
        } else {
            let modulus: Vec<Elem> = self.data.modulus.clone();
            let eval = |r: Elem| {
                modulus
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| to.add(to.mul(acc, r), c))
            };
            let root = to
                .elements()
                .find(|&r| eval(r) == 0)
                .ok_or_else(|| Error::Invariant("no root of defining polynomial in extension".into()))?;
            let powers: Vec<Elem> = (0..self.data.m).map(|i| to.pow(root, i as u64)).collect();
            (0..self.data.q)
                .map(|a| {
                    self.digits(a)
                        .iter()
                        .zip(&powers)
                        .fold(0, |acc, (&c, &rp)| to.add(acc, to.mul(c, rp)))
                })
                .collect()
        };
        let table = Arc::new(table);
        embedding_cache().lock().unwrap().insert(key, table.clone());
        Ok(table)
    }
}

fn build_tables(p: u32, m: u32, q: u32) -> FieldData {
    let modulus = if m == 1 { vec![0, 1] } else { least_irreducible(p, m) };
    let slow_mul = |a: u32, b: u32| -> u32 {
        let (da, db) = (decode(a, p, m), decode(b, p, m));
        let mut prod = vec![0u32; 2 * m as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let r = prime_poly_rem(&prod, &modulus, p);
        encode(&r, p)
    };

    // find a primitive element
    let n = q - 1;
    let mut exp = vec![0u32; 2 * n as usize + 1];
    let mut log = vec![0u32; q as usize];
    'candidates: for g in 1..q {
        let mut x = 1u32;
        let mut seen = vec![false; q as usize];
        for i in 0..n {
            if seen[x as usize] {
                continue 'candidates;
            }
            seen[x as usize] = true;
            exp[i as usize] = x;
            log[x as usize] = i;
            x = slow_mul(x, g);
        }
        break;
    }
    for i in n..2 * n + 1 {
        exp[i as usize] = exp[(i - n) as usize];
    }

    let neg: Vec<u32> = (0..q)
        .map(|a| {
            let d: Vec<u32> = decode(a, p, m).into_iter().map(|c| (p - c) % p).collect();
            encode(&d, p)
        })
        .collect();

    let add = if p != 2 && m > 1 && q <= ADD_TABLE_LIMIT {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            let da = decode(a, p, m);
            for b in 0..q {
                let db = decode(b, p, m);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                t[(a * q + b) as usize] = encode(&s, p);
            }
        }
        Some(t)
    } else {
        None
    };

    FieldData {
        p,
        m,
        q,
        modulus,
        exp,
        log,
        neg,
        add,
    }
}
