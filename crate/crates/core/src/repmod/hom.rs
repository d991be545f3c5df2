use super::module::{unit, Module};
use crate::error::Result;
use crate::fflinalg::{Echelon, Elem, Mat};

/// Spin basis of a module: vectors `w_j = A_{word} e_{seed}`, together with
/// the seed each vector descends from and how it was reached.
struct Spin {
    vectors: Vec<Vec<Elem>>,
    seed_of: Vec<usize>,
    /// `(parent, generator)` for non-seed vectors.
    origin: Vec<Option<(usize, usize)>>,
    seeds: usize,
}

fn spin(m: &Module) -> Spin {
    let d = m.dim();
    let gens = m.generator_matrices();
    let mut echelon = Echelon::new(m.field(), d);
    let mut out = Spin {
        vectors: Vec::new(),
        seed_of: Vec::new(),
        origin: Vec::new(),
        seeds: 0,
    };
    for c in 0..d {
        if echelon.rank() == d {
            break;
        }
        let e = unit(d, c);
        if !echelon.insert(e.clone()) {
            continue;
        }
        let seed = out.seeds;
        out.seeds += 1;
        let start = out.vectors.len();
        out.vectors.push(e);
        out.seed_of.push(seed);
        out.origin.push(None);
        let mut head = start;
        while head < out.vectors.len() {
            for (s, a) in gens.iter().enumerate() {
                let w = a.mul_vec(&out.vectors[head]);
                if echelon.insert(w.clone()) {
                    out.vectors.push(w);
                    out.seed_of.push(seed);
                    out.origin.push(Some((head, s)));
                }
            }
            head += 1;
        }
    }
    out
}

/// Basis of `Hom_{kG}(M, N)` as `dim N × dim M` matrices `X` with
/// `X A_g = B_g X` for every generator `g`.
///
/// The images of the spin seeds of `M` are the unknowns; every other spin
/// vector's image is determined by them, and each relation among spin
/// vectors gives a block of linear constraints.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Mat>> {
    m.check_compatible(n)?;
    let f = m.field().clone();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let sp = spin(m);
    let seeds = sp.seeds;
    let unknowns = seeds * dn;
    let bg: Vec<Mat> = m
        .group()
        .generators()
        .iter()
        .map(|g| n.element_matrix_ref(g).clone())
        .collect();
    // image(w_j) = phi[j] * L_{seed_of[j]}
    let mut phi: Vec<Mat> = Vec::with_capacity(dm);
    for j in 0..dm {
        phi.push(match sp.origin[j] {
            None => Mat::identity(&f, dn),
            Some((parent, s)) => bg[s].mul(&phi[parent]),
        });
    }
    // W has the spin vectors as columns; coordinates via W^{-1}
    let w = Mat::from_columns(&f, dm, &sp.vectors);
    let winv = w.inverse().expect("spin vectors form a basis");

    // null space of the constraints seen so far, as columns
    let mut z = Mat::identity(&f, unknowns);
    for j in 0..dm {
        for (s, a) in m.generator_matrices().iter().enumerate() {
            if z.cols() == 0 {
                return Ok(Vec::new());
            }
            if sp.origin.contains(&Some((j, s))) {
                continue;
            }
            // B_s image(w_j) - Σ c_k image(w_k), restricted to the current null space
            let coords = winv.mul_vec(&a.mul_vec(&sp.vectors[j]));
            let mut cz = project_block(&bg[s].mul(&phi[j]), &z, sp.seed_of[j], dn);
            for (k, &c) in coords.iter().enumerate() {
                if c != 0 {
                    let term = project_block(&phi[k], &z, sp.seed_of[k], dn);
                    cz.add_scaled(f.neg(c), &term);
                }
            }
            if cz.is_zero() {
                continue;
            }
            let kernel = cz.kernel_basis();
            z = z.mul(&kernel.transpose());
        }
    }
    // assemble X = [image(w_1) .. image(w_dm)] W^{-1} for each null vector
    let mut out = Vec::with_capacity(z.cols());
    for col in 0..z.cols() {
        let sol = z.column(col);
        let images: Vec<Vec<Elem>> = (0..dm)
            .map(|j| {
                let seed = sp.seed_of[j];
                phi[j].mul_vec(&sol[seed * dn..(seed + 1) * dn])
            })
            .collect();
        let x = Mat::from_columns(&f, dn, &images).mul(&winv);
        debug_assert!(m.is_homomorphism_to(n, &x));
        out.push(x);
    }
    Ok(out)
}

/// `A · Z[block rows]` where the block holds one seed's unknowns.
fn project_block(a: &Mat, z: &Mat, block: usize, dn: usize) -> Mat {
    a.mul(&z.select_rows(block * dn..(block + 1) * dn))
}

/// `dim Hom_{kG}(M, N)`.
pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}
