//! Permutation groups of small degree, enumerated element by element.
//!
//! Every [`Group`] carries its full element list in lexicographic order of
//! image arrays, so membership, cosets, normalizers and subgroup lattices
//! are all plain set computations.

mod group;
mod perm;

pub use group::{
    compatible_coset_reps, conjugacy_reduce, diagonal_subgroup, direct_product,
    interval_correspondence, product_set, subgroups_between, subgroups_between_with_cap, Cosets,
    Group, SubgroupClasses, TreeLink, DEFAULT_MAX_LATTICE_ORDER, DEFAULT_MAX_ORDER,
};
pub use perm::{Perm, MAX_DEGREE};

use crate::error::Result;

pub fn group_from_generators(degree: usize, gens: &[Perm]) -> Result<Group> {
    Group::generate(degree, gens)
}

/// Degree-checked subgroup test.
pub fn is_subgroup(h: &Group, g: &Group) -> Result<bool> {
    check_same_degree(h, g)?;
    Ok(h.is_subgroup_of(g))
}

pub fn is_normal(h: &Group, g: &Group) -> Result<bool> {
    check_same_degree(h, g)?;
    Ok(h.is_normal_in(g))
}

pub fn centralizer(g: &Group, s: &Group) -> Result<Group> {
    g.centralizer(s)
}

pub fn normalizer(g: &Group, s: &Group) -> Result<Group> {
    g.normalizer(s)
}

pub fn o_p(g: &Group, p: u32) -> Result<Group> {
    g.o_p(p)
}

pub fn left_coset_reps(g: &Group, h: &Group) -> Result<Vec<Perm>> {
    g.left_coset_reps(h)
}

pub fn conjugate_subgroup(g: &Perm, h: &Group) -> Group {
    h.conjugate(g)
}

pub fn intersection(a: &Group, b: &Group) -> Result<Group> {
    a.intersection(b)
}

fn check_same_degree(a: &Group, b: &Group) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(crate::Error::DegreeMismatch {
            expected: b.degree(),
            got: a.degree(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;

    fn s4() -> Group {
        let gens = [
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ];
        group_from_generators(4, &gens).unwrap()
    }

    fn d8() -> Group {
        let gens = [
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[1, 3]]).unwrap(),
        ];
        group_from_generators(4, &gens).unwrap()
    }

    /// Brute force: all subsets closed under products, found by closing
    /// every subset of size at most 2 of generators and deduplicating.
    fn count_subgroups_brute(g: &Group) -> usize {
        let mut seen = std::collections::HashSet::new();
        let els = g.elements();
        for a in els {
            for b in els {
                let h = g.subgroup(&[a.clone(), b.clone()]).unwrap();
                seen.insert(h.elements().to_vec());
            }
        }
        seen.len()
    }

    #[test]
    fn symmetric_group_order() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(g.elements()[0].is_identity());
        assert_eq!(group_from_generators(4, &[]).unwrap().order(), 1);
    }

    #[test]
    fn tree_links_reconstruct_elements() {
        let g = s4();
        for i in 0..g.order() {
            let mut x = g.identity();
            for &s in g.word(i).iter().rev() {
                x = g.generators()[s].compose(&x);
            }
            assert_eq!(&x, g.element(i));
        }
        let pos: Vec<usize> = {
            let mut pos = vec![0; g.order()];
            for (k, &i) in g.bfs_order().iter().enumerate() {
                pos[i] = k;
            }
            pos
        };
        for i in 0..g.order() {
            if let Some(l) = g.tree_link(i) {
                assert!(pos[l.parent] < pos[i]);
            }
        }
    }

    #[test]
    fn degree_and_cap_errors() {
        let a = Perm::identity(3);
        assert!(group_from_generators(4, &[a]).is_err());
        let s4 = s4();
        let err = Group::generate_with_cap(4, s4.generators(), 10).unwrap_err();
        assert!(matches!(err, crate::Error::ResourceCap { .. }));
    }

    #[test]
    fn o_p_of_s4() {
        let g = s4();
        let v4 = o_p(&g, 2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert!(is_normal(&v4, &g).unwrap());
        assert_eq!(o_p(&g, 3).unwrap().order(), 1);
        let t = g.subgroup(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        assert!(!is_normal(&t, &g).unwrap());
    }

    #[test]
    fn lattices() {
        let d8 = d8();
        let triv = Group::trivial(4);
        let all = subgroups_between(&triv, &d8).unwrap();
        assert_eq!(all.len(), 10);
        assert_eq!(all.len(), count_subgroups_brute(&d8));
        let v4 = o_p(&s4(), 2).unwrap();
        assert_eq!(subgroups_between(&triv, &v4).unwrap().len(), 5);
        assert_eq!(subgroups_between(&v4, &v4).unwrap(), vec![v4.clone()]);
        let max = d8.maximal_subgroups(2).unwrap();
        assert_eq!(max.len(), 3);
        assert_eq!(d8.frattini(2).unwrap().order(), 2);
    }

    #[test]
    fn sylow_and_centralizers() {
        let g = s4();
        assert_eq!(g.sylow(2).unwrap().order(), 8);
        assert_eq!(g.sylow(3).unwrap().order(), 3);
        let triv = Group::trivial(4);
        assert_eq!(centralizer(&g, &triv).unwrap(), g);
        let v4 = o_p(&g, 2).unwrap();
        assert_eq!(normalizer(&g, &v4).unwrap(), g);
        let c = g.centralizer_with(&v4, Exec::Parallel).unwrap();
        assert_eq!(c, v4);
    }

    #[test]
    fn cosets_and_products() {
        let g = s4();
        let v4 = o_p(&g, 2).unwrap();
        let reps = left_coset_reps(&g, &v4).unwrap();
        assert_eq!(reps.len(), 6);
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        let t = g.subgroup(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap()]).unwrap();
        let u = g.subgroup(&[Perm::from_cycles(4, &[&[1, 2]]).unwrap()]).unwrap();
        assert!(product_set(&t, &u).is_err());
        assert_eq!(product_set(&t, &v4).unwrap().order(), 8);
        let triv = Group::trivial(4);
        assert_eq!(product_set(&triv, &v4).unwrap(), v4);
    }

    #[test]
    fn products_and_diagonals() {
        let c2 = group_from_generators(2, &[Perm::new(&[1, 0]).unwrap()]).unwrap();
        let d = diagonal_subgroup(&c2).unwrap();
        assert_eq!(d.order(), 2);
        let c2c2 = direct_product(&c2, &c2).unwrap();
        assert_eq!(c2c2.order(), 4);
        assert!(d.is_subgroup_of(&c2c2));
    }

    #[test]
    fn conjugacy_classes_of_subgroups() {
        let g = s4();
        let triv = Group::trivial(4);
        let p = g.sylow(2).unwrap();
        let subs = subgroups_between(&triv, &p).unwrap();
        let classes = conjugacy_reduce(&subs, &g, Exec::Sequential);
        // 1, <(01)>, <(01)(23)>, V4 normal, V4 non-normal, C4, D8
        assert_eq!(classes.reps.len(), 7);
        let par = conjugacy_reduce(&subs, &g, Exec::Parallel);
        assert_eq!(classes.class_of, par.class_of);
    }

    #[test]
    fn correspondence_on_d8() {
        let d8 = d8();
        let r = d8.frattini(2).unwrap();
        let q = d8.subgroup(&[Perm::from_cycles(4, &[&[1, 3]]).unwrap()]).unwrap();
        let pairs = interval_correspondence(&q, &r).unwrap();
        // Q∩R = 1, proper subgroups of Q: just 1
        assert_eq!(pairs.len(), 1);
        let k = Group::trivial(4);
        let reps = compatible_coset_reps(&q, &k, &r).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(compatible_coset_reps(&q, &q, &r).is_err());
    }
}
