//! Concrete groups used by the worked examples, the catalog sweep and the
//! tests. Presentations are checked when a fixture is built.

use crate::error::{Error, Result};
use crate::fflinalg::Field;
use crate::permgroup::{group_from_generators, Group, Perm};

fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).expect("fixture permutation")
}

pub fn symmetric_group(n: usize) -> Group {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cyc(n, &[&[0, 1]]));
    }
    if n >= 3 {
        let full: Vec<usize> = (0..n).collect();
        gens.push(cyc(n, &[&full]));
    }
    group_from_generators(n, &gens).expect("symmetric group")
}

pub fn alternating_group(n: usize) -> Group {
    let gens: Vec<Perm> = (2..n).map(|k| cyc(n, &[&[0, 1, k]])).collect();
    group_from_generators(n, &gens).expect("alternating group")
}

pub fn cyclic_group(n: usize) -> Group {
    let full: Vec<usize> = (0..n).collect();
    let gens = if n >= 2 { vec![cyc(n, &[&full])] } else { vec![] };
    group_from_generators(n.max(1), &gens).expect("cyclic group")
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral_group(n: usize) -> Group {
    let full: Vec<usize> = (0..n).collect();
    let images: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let gens = vec![cyc(n, &[&full]), Perm::new(&images).unwrap()];
    group_from_generators(n, &gens).expect("dihedral group")
}

/// `GL(2,3)` acting on the 8 nonzero vectors of `F_3^2`.
pub fn gl23() -> Group {
    let vecs: Vec<(usize, usize)> = (0..9).map(|i| (i / 3, i % 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[usize; 2]; 2]| -> Perm {
        let images: Vec<usize> = vecs
            .iter()
            .map(|&(u, v)| {
                let w = ((m[0][0] * u + m[0][1] * v) % 3, (m[1][0] * u + m[1][1] * v) % 3);
                vecs.iter().position(|&x| x == w).unwrap()
            })
            .collect();
        Perm::new(&images).unwrap()
    };
    let gens = vec![act([[1, 1], [0, 1]]), act([[0, 1], [2, 0]]), act([[2, 0], [0, 1]])];
    group_from_generators(8, &gens).expect("GL(2,3)")
}

/// Images of `gens` in the left regular action of `g` on its own elements.
pub fn regular_images(g: &Group, gens: &[Perm]) -> Vec<Perm> {
    gens.iter()
        .map(|s| {
            let images: Vec<usize> = g
                .elements()
                .iter()
                .map(|x| g.index_of(&s.compose(x)).expect("generator in group"))
                .collect();
            Perm::new(&images).expect("regular action is a permutation")
        })
        .collect()
}

/// `S_4` with `P = O_2(S_4)` and `H = A_4`.
#[derive(Clone, Debug)]
pub struct SymmetricFour {
    pub g: Group,
    pub p: Group,
    pub h: Group,
}

pub fn symmetric_four() -> SymmetricFour {
    let g = symmetric_group(4);
    let p = g.o_p(2).expect("O_2");
    let h = alternating_group(4);
    SymmetricFour { g, p, h }
}

/// `D_8 × A_4` on `8 + 12` points, each factor in its regular action.
#[derive(Clone, Debug)]
pub struct DihedralTimesA4 {
    pub g: Group,
    pub a: Perm,
    pub y: Perm,
    pub z: Perm,
    pub t: Perm,
    pub b: Perm,
    pub c: Perm,
}

impl DihedralTimesA4 {
    pub fn subgroup(&self, gens: &[&Perm]) -> Group {
        let gens: Vec<Perm> = gens.iter().map(|&p| p.clone()).collect();
        self.g.subgroup(&gens).expect("fixture subgroup")
    }

    /// `D = ⟨a, y, z⟩`.
    pub fn d(&self) -> Group {
        self.subgroup(&[&self.a, &self.y, &self.z])
    }

    /// The `A_4` factor `⟨t, b, c⟩`.
    pub fn a4(&self) -> Group {
        self.subgroup(&[&self.t, &self.b, &self.c])
    }

    /// `x = ab`.
    pub fn x(&self) -> Perm {
        self.a.compose(&self.b)
    }

    /// Checks the defining relations of both factors and that the factors
    /// commute.
    pub fn verify_relations(&self) -> Result<()> {
        let (a, y, z, t, b, c) = (&self.a, &self.y, &self.z, &self.t, &self.b, &self.c);
        let conj = |u: &Perm, v: &Perm| v.inverse().compose(u).compose(v); // u^v
        let checks: Vec<(&str, bool)> = vec![
            ("a^2 = 1", a.pow(2).is_identity() && !a.is_identity()),
            ("y^2 = 1", y.pow(2).is_identity() && !y.is_identity()),
            ("z^2 = 1", z.pow(2).is_identity() && !z.is_identity()),
            ("[a,z] = 1", a.commutator(z).is_identity()),
            ("[y,z] = 1", y.commutator(z).is_identity()),
            ("[a,y] = z", &a.commutator(y) == z),
            ("t^3 = 1", t.pow(3).is_identity() && !t.is_identity()),
            ("b^2 = 1", b.pow(2).is_identity() && !b.is_identity()),
            ("c^2 = 1", c.pow(2).is_identity() && !c.is_identity()),
            ("[b,c] = 1", b.commutator(c).is_identity()),
            ("b^t = c", &conj(b, t) == c),
            ("c^t = bc", conj(c, t) == b.compose(c)),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(Error::Invariant(format!("fixture relation {} fails", name)));
            }
        }
        for u in [a, y, z] {
            for v in [t, b, c] {
                if !u.commutator(v).is_identity() {
                    return Err(Error::Invariant("factors do not commute".into()));
                }
            }
        }
        if self.d().order() != 8 || self.a4().order() != 12 || self.g.order() != 96 {
            return Err(Error::Invariant("fixture group orders are wrong".into()));
        }
        Ok(())
    }
}

pub fn dihedral_times_a4() -> Result<DihedralTimesA4> {
    // D_8 on the square's vertices
    let d4 = [cyc(4, &[&[1, 3]]), cyc(4, &[&[0, 3], &[1, 2]]), cyc(4, &[&[0, 2], &[1, 3]])];
    // A_4 on four points
    let a4 = [cyc(4, &[&[1, 3, 2]]), cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])];
    let dg = group_from_generators(4, &d4)?;
    let ag = group_from_generators(4, &a4)?;
    let dr = regular_images(&dg, &d4);
    let ar = regular_images(&ag, &a4);
    let n = dg.order() + ag.order();
    let left: Vec<Perm> = dr.iter().map(|p| p.shifted(0, n)).collect();
    let right: Vec<Perm> = ar.iter().map(|p| p.shifted(dg.order(), n)).collect();
    let mut gens = left.clone();
    gens.extend(right.iter().cloned());
    let g = group_from_generators(n, &gens)?;
    let fx = DihedralTimesA4 {
        g,
        a: left[0].clone(),
        y: left[1].clone(),
        z: left[2].clone(),
        t: right[0].clone(),
        b: right[1].clone(),
        c: right[2].clone(),
    };
    fx.verify_relations()?;
    Ok(fx)
}

/// One `(G, P, p)` instance of the catalog sweep; the module under test is
/// `Sc(G, P)` over `GF(p)`.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub g: Group,
    pub p: Group,
    pub field: Field,
}

fn entry(name: &str, g: &Group, p_gens: &[Perm], prime: u32) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        g: g.clone(),
        p: g.subgroup(p_gens).expect("catalog subgroup"),
        field: Field::prime(prime).expect("prime field"),
    }
}

/// Small `(G, P, p)` instances with `|G| ≤ 200` and `|P| ≤ 16`, covering
/// normal and non-normal `P`, Sylow and non-Sylow `P`, and `p = 2, 3, 5`.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let s3 = symmetric_group(3);
    out.push(entry("S3, P = C2", &s3, &[cyc(3, &[&[0, 1]])], 2));
    out.push(entry("S3, P = C3", &s3, &[cyc(3, &[&[0, 1, 2]])], 3));
    let s4 = symmetric_group(4);
    let v4 = s4.o_p(2).unwrap();
    out.push(entry("S4, P = O_2", &s4, v4.generators(), 2));
    out.push(entry("S4, P = C2 (transposition)", &s4, &[cyc(4, &[&[0, 1]])], 2));
    out.push(entry("S4, P = C2 (double transposition)", &s4, &[cyc(4, &[&[0, 1], &[2, 3]])], 2));
    out.push(entry("S4, P = C4", &s4, &[cyc(4, &[&[0, 1, 2, 3]])], 2));
    out.push(entry("S4, P = D8", &s4, s4.sylow(2).unwrap().generators(), 2));
    out.push(entry("S4, P = C3", &s4, &[cyc(4, &[&[0, 1, 2]])], 3));
    out.push(entry(
        "S4, P = non-normal V4",
        &s4,
        &[cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])],
        2,
    ));
    let a4 = alternating_group(4);
    out.push(entry("A4, P = V4", &a4, a4.o_p(2).unwrap().generators(), 2));
    out.push(entry("A4, P = C2", &a4, &[cyc(4, &[&[0, 1], &[2, 3]])], 2));
    out.push(entry("A4, P = C3", &a4, &[cyc(4, &[&[0, 1, 2]])], 3));
    let d8 = dihedral_group(4);
    out.push(entry("D8, P = D8", &d8, d8.generators(), 2));
    out.push(entry("D8, P = reflection", &d8, &[d8.generators()[1].clone()], 2));
    out.push(entry("D8, P = C4", &d8, &[d8.generators()[0].clone()], 2));
    let d12 = dihedral_group(6);
    out.push(entry("D12, P = C3", &d12, &[d12.generators()[0].pow(2)], 3));
    out.push(entry("D12, P = V4", &d12, &[d12.generators()[0].pow(3), d12.generators()[1].clone()], 2));
    let a5 = alternating_group(5);
    out.push(entry("A5, P = V4", &a5, &[cyc(5, &[&[0, 1], &[2, 3]]), cyc(5, &[&[0, 2], &[1, 3]])], 2));
    out.push(entry("A5, P = C3", &a5, &[cyc(5, &[&[0, 1, 2]])], 3));
    out.push(entry("A5, P = C5", &a5, &[cyc(5, &[&[0, 1, 2, 3, 4]])], 5));
    out.push(entry("A5, P = C2", &a5, &[cyc(5, &[&[0, 1], &[2, 3]])], 2));
    let s3s3 = crate::permgroup::direct_product(&s3, &s3).unwrap();
    out.push(entry(
        "S3 x S3, P = C3 x C3",
        &s3s3,
        &[cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4, 5]])],
        3,
    ));
    out.push(entry("S3 x S3, P = diagonal C3", &s3s3, &[cyc(6, &[&[0, 1, 2], &[3, 4, 5]])], 3));
    out.push(entry("S3 x S3, P = C2 x C2", &s3s3, &[cyc(6, &[&[0, 1]]), cyc(6, &[&[3, 4]])], 2));
    let c3 = cyclic_group(3);
    let c3s3 = crate::permgroup::direct_product(&c3, &s3).unwrap();
    out.push(entry("C3 x S3, P = C3 x 1", &c3s3, &[cyc(6, &[&[0, 1, 2]])], 3));
    out.push(entry("C3 x S3, P = C2", &c3s3, &[cyc(6, &[&[3, 4]])], 2));
    let gl = gl23();
    out.push(entry("GL(2,3), P = Sylow 3", &gl, gl.sylow(3).unwrap().generators(), 3));
    out.push(entry("GL(2,3), P = centre", &gl, gl.centralizer(&gl).unwrap().generators(), 2));
    let s4c2 = crate::permgroup::direct_product(&s4, &cyclic_group(2)).unwrap();
    out.push(entry("S4 x C2, P = O_2(S4) x C2", &s4c2, &{
        let mut g: Vec<Perm> = v4.generators().iter().map(|x| x.shifted(0, 6)).collect();
        g.push(cyc(6, &[&[4, 5]]));
        g
    }, 2));
    if let Ok(fx) = dihedral_times_a4() {
        let x = fx.x();
        let mut push = |name: &str, gens: &[&Perm]| {
            let gens: Vec<Perm> = gens.iter().map(|&g| g.clone()).collect();
            out.push(entry(name, &fx.g, &gens, 2));
        };
        push("D8 x A4, P = <y, z, ab>", &[&fx.y, &fx.z, &x]);
        push("D8 x A4, P = D8 x <b>", &[&fx.a, &fx.y, &fx.z, &fx.b]);
        push("D8 x A4, P = <y, z>", &[&fx.y, &fx.z]);
        push("D8 x A4, P = <z, b>", &[&fx.z, &fx.b]);
        push("D8 x A4, P = <ab>", &[&x]);
    }
    let s4s3 = crate::permgroup::direct_product(&s4, &s3).unwrap();
    out.push(entry("S4 x S3, P = C3 x C3", &s4s3, &[cyc(7, &[&[0, 1, 2]]), cyc(7, &[&[4, 5, 6]])], 3));
    out.push(entry("S4 x S3, P = O_2(S4)", &s4s3, &v4.generators().iter().map(|g| g.shifted(0, 7)).collect::<Vec<_>>(), 2));
    out.push(entry("S4 x S3, P = diagonal C2", &s4s3, &[cyc(7, &[&[0, 1], &[4, 5]])], 2));
    out.push(entry("GL(2,3), P = non-central C2", &gl, &[non_central_involution(&gl)], 2));
    let d10 = dihedral_group(5);
    out.push(entry("D10, P = C5", &d10, &[d10.generators()[0].clone()], 5));
    out.push(entry("D10, P = C2", &d10, &[d10.generators()[1].clone()], 2));
    let c3a4 = crate::permgroup::direct_product(&c3, &a4).unwrap();
    out.push(entry("C3 x A4, P = diagonal C3", &c3a4, &[cyc(7, &[&[0, 1, 2], &[3, 4, 5]])], 3));
    out.push(entry("C3 x A4, P = C2", &c3a4, &[cyc(7, &[&[3, 4], &[5, 6]])], 2));
    out
}

fn non_central_involution(g: &Group) -> Perm {
    let centre = g.centralizer(g).expect("centre");
    g.elements()
        .iter()
        .find(|x| x.order() == 2 && !centre.contains(x))
        .expect("GL(2,3) has non-central involutions")
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_orders() {
        assert_eq!(symmetric_group(4).order(), 24);
        assert_eq!(alternating_group(5).order(), 60);
        assert_eq!(dihedral_group(4).order(), 8);
        assert_eq!(gl23().order(), 48);
        assert_eq!(cyclic_group(1).order(), 1);
        let s = symmetric_four();
        assert_eq!(s.p.order(), 4);
        assert_eq!(s.h.order(), 12);
    }

    #[test]
    fn d8_times_a4_presentation_holds() {
        let fx = dihedral_times_a4().unwrap();
        assert_eq!(fx.g.order(), 96);
        assert_eq!(fx.g.degree(), 20);
        let p = fx.subgroup(&[&fx.y, &fx.z, &fx.x()]);
        assert_eq!(p.order(), 8);
        assert_eq!(p.exponent(), 4);
    }

    #[test]
    fn catalog_bounds() {
        let cat = catalog();
        assert!(cat.len() >= 20);
        for e in &cat {
            assert!(e.g.order() <= 200, "{}", e.name);
            assert!(e.p.order() <= 16, "{}", e.name);
            assert!(e.p.is_p_group(e.field.characteristic()), "{}", e.name);
        }
    }
}
