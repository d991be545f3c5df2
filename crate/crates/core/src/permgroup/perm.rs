use std::fmt;

use crate::error::{Error, Result};

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 255;

/// A permutation of `0..degree`, stored as its image array.
///
/// Composition follows function notation: `a.compose(&b)` maps `i` to
/// `a(b(i))`, so groups act on the left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u8]>,
}

impl Perm {
    pub fn new(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::ResourceCap {
                what: "permutation degree",
                limit: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || seen[i] {
                return Err(Error::NotBijective { degree: n });
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&i| i as u8).collect(),
        })
    }

    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= MAX_DEGREE);
        Perm {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut acc = Perm::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::NotBijective { degree });
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
            acc = Perm::new(&images)?.compose(&acc);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm { images: inv.into() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn pow(&self, e: usize) -> Perm {
        (0..e).fold(Perm::identity(self.degree()), |acc, _| self.compose(&acc))
    }

    pub fn order(&self) -> usize {
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = self.compose(&x);
            k += 1;
        }
        k
    }

    /// `g self g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// The permutation on `offset..offset+self.degree()` inside a larger
    /// degree, fixing all other points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u8> = (0..degree).map(|i| i as u8).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset + j as usize) as u8;
        }
        Perm { images: images.into() }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Perm::new(&[0, 0, 1]).unwrap_err(), Error::NotBijective { degree: 3 });
        assert!(Perm::new(&[0, 3, 1]).is_err());
    }

    #[test]
    fn composition_is_function_composition() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.compose(&b);
        // apply b then a: 1 -> 2 -> 2, 2 -> 1 -> 0, 0 -> 0 -> 1
        assert_eq!(ab.images(), vec![1, 2, 0]);
        assert_eq!(ab.order(), 3);
        assert!(ab.compose(&ab.inverse()).is_identity());
        assert_eq!(format!("{}", ab), "(0 1 2)");
    }
}
