use std::collections::HashSet;

use scott_brauer::fflinalg::{Field, Mat};
use scott_brauer::fixtures::{alternating_group, dihedral_times_a4, symmetric_four, symmetric_group};
use scott_brauer::permgroup::{subgroups_between, Group, Perm};
use scott_brauer::repmod::{
    brauer_construction, fixed_points, hom_space, module_kernel, perm_module, regular_module,
    relative_trace_image, Module,
};

fn gf(p: u32) -> Field {
    Field::prime(p).unwrap()
}

/// Number of `Q`-orbits on the left cosets `G/H`, by direct orbit walking.
fn coset_orbits(g: &Group, h: &Group, q: &Group) -> (usize, usize) {
    let reps = g.left_coset_reps(h).unwrap();
    let coset_key = |x: &Perm| -> Vec<Perm> {
        let mut c: Vec<Perm> = h.elements().iter().map(|k| x.compose(k)).collect();
        c.sort();
        c
    };
    let keys: Vec<Vec<Perm>> = reps.iter().map(coset_key).collect();
    let mut seen = HashSet::new();
    let mut orbits = 0;
    let mut fixed = 0;
    for (i, r) in reps.iter().enumerate() {
        if seen.contains(&keys[i]) {
            continue;
        }
        orbits += 1;
        let orbit: HashSet<Vec<Perm>> = q.elements().iter().map(|u| coset_key(&u.compose(r))).collect();
        if orbit.len() == 1 {
            fixed += 1;
        }
        seen.extend(orbit);
    }
    (orbits, fixed)
}

/// `|H \ G / K|` by enumerating double cosets.
fn double_cosets(g: &Group, h: &Group, k: &Group) -> usize {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut count = 0;
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        count += 1;
        for a in h.elements() {
            for b in k.elements() {
                seen.insert(a.compose(x).compose(b));
            }
        }
    }
    count
}

/// Hom dimension from the full Kronecker system `X A_g - B_g X = 0`.
fn hom_dim_kronecker(m: &Module, n: &Module) -> usize {
    let f = m.field().clone();
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Mat::zeros(&f, 0, dm * dn);
    for (g, a) in m.group().generators().iter().zip(m.generator_matrices()) {
        let b = n.element_matrix(g).unwrap();
        // unknown X[i][j] at index i*dm + j
        let mut block = Mat::zeros(&f, dn * dm, dm * dn);
        for i in 0..dn {
            for j in 0..dm {
                let r = i * dm + j;
                for k in 0..dm {
                    let v = block.get(r, i * dm + k);
                    block.set(r, i * dm + k, f.add(v, a.get(k, j)));
                }
                for k in 0..dn {
                    let v = block.get(r, k * dm + j);
                    block.set(r, k * dm + j, f.sub(v, b.get(i, k)));
                }
            }
        }
        rows = rows.vstack(&block);
    }
    dm * dn - rows.rank()
}

#[test]
fn permutation_module_dimensions() {
    let s = symmetric_four();
    assert_eq!(perm_module(&s.g, &s.h, &gf(2)).unwrap().dim(), 2);
    assert_eq!(perm_module(&s.g, &s.g, &gf(2)).unwrap().dim(), 1);
    let a4 = alternating_group(4);
    let b = a4.subgroup(&[Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
    assert_eq!(perm_module(&a4, &b, &gf(2)).unwrap().dim(), 6);
    let t = a4.subgroup(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap()]);
    assert!(t.is_err());
}

#[test]
fn element_matrices_are_a_homomorphism() {
    let g = symmetric_group(4);
    let m = regular_module(&g, &gf(3));
    let mats = m.element_matrices();
    for i in 0..g.order() {
        for j in (0..g.order()).step_by(5) {
            let k = g.index_of(&g.element(i).compose(g.element(j))).unwrap();
            assert_eq!(mats[i].mul(&mats[j]), mats[k]);
        }
        // permutation matrices: each row sums to one
        for r in 0..m.dim() {
            assert_eq!(mats[i].row(r).iter().filter(|&&e| e == 1).count(), 1);
        }
    }
    assert!(m.element_matrix(&g.identity()).unwrap().is_identity());
    let bad = Perm::identity(5);
    assert!(m.element_matrix(&bad).is_err());
}

#[test]
fn module_constructor_rejects_non_representations() {
    let g = symmetric_group(3);
    let f = gf(3);
    // send the transposition to 2 and the 3-cycle to 1: not a homomorphism
    // because (01)(012) has order 2 but maps to 2
    let gens = vec![Mat::from_rows(&f, 1, &[vec![2]]), Mat::from_rows(&f, 1, &[vec![2]])];
    assert!(Module::new(&g, &f, 1, gens).is_err());
    let sign = vec![Mat::from_rows(&f, 1, &[vec![2]]), Mat::from_rows(&f, 1, &[vec![1]])];
    assert!(Module::new(&g, &f, 1, sign).is_ok());
}

#[test]
fn fixed_points_count_orbits() {
    let g = symmetric_group(4);
    let f = gf(2);
    let triv = Group::trivial(4);
    let p = g.sylow(2).unwrap();
    for h in [g.sylow(3).unwrap(), g.o_p(2).unwrap(), alternating_group(4)] {
        let m = perm_module(&g, &h, &f).unwrap();
        for q in subgroups_between(&triv, &p).unwrap() {
            let (orbits, fixed) = coset_orbits(&g, &h, &q);
            assert_eq!(fixed_points(&m, &q).unwrap().dim(), orbits);
            let bq = brauer_construction(&m, &q).unwrap();
            assert_eq!(bq.dim(), fixed, "fixed cosets of |Q| = {}", q.order());
            assert!(bq.dim() <= bq.fixed.dim());
        }
    }
}

#[test]
fn trivial_subgroup_quotient_is_whole_module() {
    let s = symmetric_four();
    let m = perm_module(&s.g, &s.h, &gf(2)).unwrap();
    let bq = brauer_construction(&m, &Group::trivial(4)).unwrap();
    assert_eq!(bq.dim(), 2);
    assert_eq!(bq.normalizer.order(), 24);
    let mp = brauer_construction(&m, &s.p).unwrap();
    assert_eq!(mp.dim(), 2);
}

#[test]
fn hom_dimensions_match_oracles() {
    let f = gf(2);
    let a4 = alternating_group(4);
    let b = a4.subgroup(&[Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
    let ind = perm_module(&a4, &b, &f).unwrap();
    let end = hom_space(&ind, &ind).unwrap();
    assert_eq!(end.len(), double_cosets(&a4, &b, &b));
    assert_eq!(end.len(), 4);
    let k = Module::trivial(&a4, &f);
    assert_eq!(hom_space(&k, &k).unwrap().len(), 1);
    assert_eq!(hom_space(&ind, &k).unwrap().len(), 1);
    assert_eq!(hom_space(&k, &ind).unwrap().len(), 1);
    for x in &end {
        assert!(ind.is_homomorphism_to(&ind, x));
    }
    let s4 = symmetric_group(4);
    for p in [2, 3] {
        let fp = gf(p);
        let subs = [s4.sylow(2).unwrap(), s4.sylow(3).unwrap(), alternating_group(4), s4.o_p(2).unwrap()];
        for h1 in &subs {
            for h2 in &subs {
                let m1 = perm_module(&s4, h1, &fp).unwrap();
                let m2 = perm_module(&s4, h2, &fp).unwrap();
                let d = hom_space(&m1, &m2).unwrap().len();
                assert_eq!(d, double_cosets(&s4, h2, h1));
                assert_eq!(d, hom_dim_kronecker(&m1, &m2));
            }
        }
    }
}

#[test]
fn hom_space_on_non_permutation_modules() {
    let g = symmetric_group(3);
    let f = gf(3);
    let reg = regular_module(&g, &f);
    let sign = Module::new(
        &g,
        &f,
        1,
        vec![Mat::from_rows(&f, 1, &[vec![2]]), Mat::from_rows(&f, 1, &[vec![1]])],
    )
    .unwrap();
    let sum = sign.direct_sum(&reg).unwrap();
    assert_eq!(hom_space(&sum, &sum).unwrap().len(), hom_dim_kronecker(&sum, &sum));
    assert_eq!(hom_space(&sign, &reg).unwrap().len(), 1);
    assert_eq!(hom_space(&sign, &Module::trivial(&g, &f)).unwrap().len(), 0);
}

#[test]
fn kernels() {
    let fx = dihedral_times_a4().unwrap();
    let r = fx.subgroup(&[&fx.y, &fx.z]);
    let p = fx.subgroup(&[&fx.y, &fx.z, &fx.x()]);
    let m = perm_module(&fx.g, &p, &gf(2)).unwrap();
    assert_eq!(m.dim(), 12);
    let ker = module_kernel(&m);
    assert!(r.is_subgroup_of(&ker));
    assert_eq!(module_kernel(&regular_module(&fx.a4(), &gf(2))).order(), 1);
    assert_eq!(module_kernel(&Module::trivial(&fx.g, &gf(2))).order(), 96);
}

#[test]
fn trace_basics() {
    let g = symmetric_group(4);
    let f = gf(2);
    let k = Module::trivial(&g, &f);
    let p = g.sylow(2).unwrap();
    let q = g.o_p(2).unwrap();
    // |P:Q| = 2 kills the trivial module
    assert_eq!(relative_trace_image(&k, &q, &p).unwrap().dim(), 0);
    assert_eq!(relative_trace_image(&k, &p, &p).unwrap().dim(), 1);
    let c3 = g.sylow(3).unwrap();
    let triv = Group::trivial(4);
    assert_eq!(relative_trace_image(&k, &triv, &c3).unwrap().dim(), 1);
}

#[test]
fn submodules_and_quotients() {
    let g = symmetric_group(3);
    let f = gf(3);
    let m = perm_module(&g, &Group::trivial(3).intersection(&g).unwrap(), &f).unwrap();
    let fixed = fixed_points(&m, &g).unwrap();
    assert_eq!(fixed.dim(), 1);
    let sub = m.submodule(&fixed).unwrap();
    assert_eq!(sub.dim(), 1);
    let quo = m.quotient(&fixed).unwrap();
    assert_eq!(quo.dim(), 5);
    let proj = m.quotient_projection(&fixed);
    assert!(m.is_homomorphism_to(&quo, &proj));
}
