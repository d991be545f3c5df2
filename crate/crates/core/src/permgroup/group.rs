use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::perm::{Perm, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Default cap on enumerated group order.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// Default cap on the order of p-groups whose subgroup lattice is enumerated.
pub const DEFAULT_MAX_LATTICE_ORDER: usize = 1 << 10;

/// Parent link in the breadth-first spanning tree of the Cayley graph:
/// `elements[i] = gens[gen] ∘ elements[parent]`.
#[derive(Clone, Copy, Debug)]
pub struct TreeLink {
    pub parent: usize,
    pub gen: usize,
}

struct GroupData {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    links: Vec<Option<TreeLink>>,
    bfs: Vec<usize>,
}

/// A permutation group with its full element list, sorted
/// lexicographically by image array.
#[derive(Clone)]
pub struct Group {
    data: Arc<GroupData>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.data.degree == other.data.degree && self.data.elements == other.data.elements
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.degree.hash(state);
        self.data.elements.hash(state);
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, gens [", self.order())?;
        for (i, g) in self.data.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "])")
    }
}

impl Group {
    /// Closure of `gens` by breadth-first search, capped at `max_order`.
    pub fn generate_with_cap(degree: usize, gens: &[Perm], max_order: usize) -> Result<Group> {
        if degree > MAX_DEGREE {
            return Err(Error::ResourceCap {
                what: "permutation degree",
                limit: MAX_DEGREE,
            });
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let mut found: Vec<Perm> = vec![Perm::identity(degree)];
        let mut links: Vec<Option<TreeLink>> = vec![None];
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        seen.insert(found[0].clone(), 0);
        let mut head = 0;
        while head < found.len() {
            for (s, g) in gens.iter().enumerate() {
                let h = g.compose(&found[head]);
                if !seen.contains_key(&h) {
                    if found.len() >= max_order {
                        return Err(Error::ResourceCap {
                            what: "group order",
                            limit: max_order,
                        });
                    }
                    seen.insert(h.clone(), found.len());
                    found.push(h);
                    links.push(Some(TreeLink { parent: head, gen: s }));
                }
            }
            head += 1;
        }
        // sort and remap the tree
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| found[a].cmp(&found[b]));
        let mut rank = vec![0; found.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let elements: Vec<Perm> = order.iter().map(|&old| found[old].clone()).collect();
        let mut sorted_links = vec![None; found.len()];
        for (old, link) in links.iter().enumerate() {
            sorted_links[rank[old]] = link.map(|l| TreeLink {
                parent: rank[l.parent],
                gen: l.gen,
            });
        }
        let bfs: Vec<usize> = (0..found.len()).map(|old| rank[old]).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(Group {
            data: Arc::new(GroupData {
                degree,
                gens: gens.to_vec(),
                elements,
                index,
                links: sorted_links,
                bfs,
            }),
        })
    }

    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Group> {
        Group::generate_with_cap(degree, gens, DEFAULT_MAX_ORDER)
    }

    pub fn trivial(degree: usize) -> Group {
        Group::generate(degree, &[]).expect("trivial group")
    }

    /// The subgroup with the given element set, with generators chosen
    /// greedily in canonical element order. Fails if the set is not closed.
    pub fn from_elements(degree: usize, elements: &[Perm]) -> Result<Group> {
        let set: HashSet<&Perm> = elements.iter().collect();
        let mut sorted: Vec<&Perm> = set.iter().copied().collect();
        sorted.sort();
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = Group::trivial(degree);
        for x in sorted {
            if current.order() == set.len() {
                break;
            }
            if !current.contains(x) {
                gens.push(x.clone());
                current = Group::generate_with_cap(degree, &gens, set.len().max(1))
                    .map_err(|_| Error::NotSubgroup("element set is not closed under products".into()))?;
            }
        }
        if current.order() != set.len() || !current.elements().iter().all(|e| set.contains(e)) {
            return Err(Error::NotSubgroup("element set is not closed under products".into()));
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.data.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.data.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.data.elements[i]
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.data.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.data.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.data.index.get(g).copied()
    }

    /// Spanning-tree link of element `i`; `None` for the identity.
    pub fn tree_link(&self, i: usize) -> Option<TreeLink> {
        self.data.links[i]
    }

    /// Element indices in breadth-first order; every element appears after
    /// its tree parent.
    pub fn bfs_order(&self) -> &[usize] {
        &self.data.bfs
    }

    /// Generator indices `w` with `element(i) = gens[w[0]] ∘ gens[w[1]] ∘ …`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some(link) = self.data.links[cur] {
            w.push(link.gen);
            cur = link.parent;
        }
        w
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree() && self.elements().iter().all(|g| other.contains(g))
    }

    fn check_degree(&self, other: &Group) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: other.degree(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_subgroup_of(&self, other: &Group, what: &str) -> Result<()> {
        self.check_degree(other)?;
        if !self.is_subgroup_of(other) {
            return Err(Error::NotSubgroup(format!(
                "{} (order {}) is not contained in group of order {}",
                what,
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// Normal in `other`: contained, and stable under conjugation by the
    /// generators of `other`.
    pub fn is_normal_in(&self, other: &Group) -> bool {
        self.is_subgroup_of(other)
            && other.generators().iter().all(|g| {
                self.generators().iter().all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    /// The subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Group> {
        for g in gens {
            if g.degree() != self.degree() {
                return Err(Error::DegreeMismatch {
                    expected: self.degree(),
                    got: g.degree(),
                });
            }
            if !self.contains(g) {
                return Err(Error::NotSubgroup(format!("generator {} is not in the group", g)));
            }
        }
        Group::generate_with_cap(self.degree(), gens, self.order())
    }

    /// The subgroup of elements satisfying `pred` (which must define a subgroup).
    pub fn filter_subgroup(&self, exec: Exec, pred: impl Fn(&Perm) -> bool + Sync + Send) -> Group {
        let kept = exec.filter(self.elements(), |g| pred(g));
        Group::from_elements(self.degree(), &kept).expect("filter predicate defines a subgroup")
    }

    pub fn is_p_group(&self, p: u32) -> bool {
        is_power_of(self.order(), p as usize)
    }

    pub fn exponent(&self) -> usize {
        self.elements().iter().map(|g| g.order()).fold(1, lcm)
    }

    pub fn intersection(&self, other: &Group) -> Result<Group> {
        self.check_degree(other)?;
        let common: Vec<Perm> = self.elements().iter().filter(|g| other.contains(g)).cloned().collect();
        Group::from_elements(self.degree(), &common)
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Perm) -> Group {
        let gens: Vec<Perm> = self.generators().iter().map(|h| h.conjugate_by(g)).collect();
        Group::generate_with_cap(self.degree(), &gens, self.order()).expect("conjugate has the same order")
    }

    /// Sorted element list of `g H g⁻¹`, without building a group.
    fn conjugate_elements(&self, g: &Perm) -> Vec<Perm> {
        let ginv = g.inverse();
        let mut els: Vec<Perm> = self.elements().iter().map(|h| g.compose(h).compose(&ginv)).collect();
        els.sort();
        els
    }

    /// `C_self(S)`.
    pub fn centralizer(&self, s: &Group) -> Result<Group> {
        self.centralizer_with(s, Exec::Sequential)
    }

    pub fn centralizer_with(&self, s: &Group, exec: Exec) -> Result<Group> {
        s.require_subgroup_of(self, "centralized subgroup")?;
        let gens = s.generators().to_vec();
        Ok(self.filter_subgroup(exec, move |g| gens.iter().all(|h| g.compose(h) == h.compose(g))))
    }

    /// `N_self(S)`.
    pub fn normalizer(&self, s: &Group) -> Result<Group> {
        self.normalizer_with(s, Exec::Sequential)
    }

    pub fn normalizer_with(&self, s: &Group, exec: Exec) -> Result<Group> {
        s.require_subgroup_of(self, "normalized subgroup")?;
        let s2 = s.clone();
        Ok(self.filter_subgroup(exec, move |g| {
            s2.generators().iter().all(|h| s2.contains(&h.conjugate_by(g)))
        }))
    }

    /// Left coset representatives of `h` in `self`: the least element of
    /// each coset, in increasing order.
    pub fn left_coset_reps(&self, h: &Group) -> Result<Vec<Perm>> {
        Ok(self.left_cosets(h)?.reps)
    }

    pub fn left_cosets(&self, h: &Group) -> Result<Cosets> {
        h.require_subgroup_of(self, "coset subgroup")?;
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for (i, g) in self.elements().iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g.clone());
            for x in h.elements() {
                let j = self.index_of(&g.compose(x)).expect("coset inside group");
                coset_of[j] = c;
            }
        }
        Ok(Cosets { reps, coset_of })
    }

    /// The normal closure of `s` in `self`.
    pub fn normal_closure(&self, s: &[Perm]) -> Result<Group> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = Group::trivial(self.degree());
        let mut queue: VecDeque<Perm> = s.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if current.contains(&x) {
                continue;
            }
            if !self.contains(&x) {
                return Err(Error::NotSubgroup(format!("{} is not in the group", x)));
            }
            gens.push(x.clone());
            current = Group::generate_with_cap(self.degree(), &gens, self.order())?;
            for g in self.generators() {
                queue.push_back(x.conjugate_by(g));
            }
        }
        Ok(current)
    }

    /// `O_p(self)`: the largest normal p-subgroup, generated by the normal
    /// closures of p-elements that are themselves p-groups.
    pub fn o_p(&self, p: u32) -> Result<Group> {
        if !crate::fflinalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut acc = Group::trivial(self.degree());
        for x in self.elements() {
            if acc.contains(x) || !is_power_of(x.order(), p as usize) {
                continue;
            }
            let closure = self.normal_closure(std::slice::from_ref(x))?;
            if closure.is_p_group(p) {
                let mut gens = acc.generators().to_vec();
                gens.extend(closure.generators().iter().cloned());
                acc = Group::generate_with_cap(self.degree(), &gens, self.order())?;
            }
        }
        Ok(acc)
    }

    /// A Sylow p-subgroup, grown one step at a time inside normalizers,
    /// taking the first suitable element in canonical order.
    pub fn sylow(&self, p: u32) -> Result<Group> {
        if !crate::fflinalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = p_part(self.order(), p as usize);
        let mut h = Group::trivial(self.degree());
        while h.order() < target {
            let n = self.normalizer(&h)?;
            let x = n
                .elements()
                .iter()
                .find(|x| !h.contains(x) && h.contains(&x.pow(p as usize)))
                .cloned()
                .ok_or_else(|| Error::Invariant("Sylow growth step found no element".into()))?;
            let mut gens = h.generators().to_vec();
            gens.push(x);
            h = Group::generate_with_cap(self.degree(), &gens, self.order())?;
        }
        Ok(h)
    }

    /// Frattini subgroup of a p-group: generated by p-th powers and the
    /// derived subgroup.
    pub fn frattini(&self, p: u32) -> Result<Group> {
        if !self.is_p_group(p) {
            return Err(Error::NotPGroup { order: self.order(), p });
        }
        let mut seeds: Vec<Perm> = Vec::new();
        for x in self.elements() {
            seeds.push(x.pow(p as usize));
        }
        let gens = self.generators();
        for a in gens {
            for b in gens {
                seeds.push(a.commutator(b));
            }
        }
        self.normal_closure(&seeds)
    }

    /// Maximal subgroups of a p-group (those of index p), canonical order.
    pub fn maximal_subgroups(&self, p: u32) -> Result<Vec<Group>> {
        if self.is_trivial() {
            return Ok(vec![]);
        }
        let phi = self.frattini(p)?;
        let all = subgroups_between_with_cap(&phi, self, DEFAULT_MAX_LATTICE_ORDER)?;
        Ok(all.into_iter().filter(|k| k.order() * p as usize == self.order()).collect())
    }

    /// Canonical key of the conjugacy class of `self` under `ambient`: the
    /// least sorted element list over all conjugates.
    pub fn conjugacy_key(&self, ambient: &Group) -> Vec<Perm> {
        ambient
            .elements()
            .iter()
            .map(|g| self.conjugate_elements(g))
            .min()
            .expect("nonempty group")
    }

    /// `g` with `g self g⁻¹ = other`, if one exists in `ambient`.
    pub fn conjugating_element(&self, other: &Group, ambient: &Group) -> Option<Perm> {
        if self.order() != other.order() {
            return None;
        }
        ambient
            .elements()
            .iter()
            .find(|g| self.conjugate_elements(g) == other.elements())
            .cloned()
    }

    pub fn is_conjugate(&self, other: &Group, ambient: &Group) -> bool {
        self.conjugating_element(other, ambient).is_some()
    }
}

/// Left cosets of a subgroup: representatives and the coset index of every
/// element of the ambient group.
#[derive(Clone, Debug)]
pub struct Cosets {
    pub reps: Vec<Perm>,
    pub coset_of: Vec<usize>,
}

pub(crate) fn is_power_of(mut n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

pub(crate) fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `QR = {qr}`; fails unless the product set is a subgroup.
pub fn product_set(q: &Group, r: &Group) -> Result<Group> {
    q.check_degree(r)?;
    let mut set: HashSet<Perm> = HashSet::new();
    for a in q.elements() {
        for b in r.elements() {
            set.insert(a.compose(b));
        }
    }
    let mut gens = q.generators().to_vec();
    gens.extend(r.generators().iter().cloned());
    let generated = Group::generate_with_cap(q.degree(), &gens, set.len())
        .map_err(|_| Error::NotNormal("product set is not closed under multiplication".into()))?;
    if generated.order() != set.len() {
        return Err(Error::NotNormal("product set is not closed under multiplication".into()));
    }
    Ok(generated)
}

/// All subgroups `K` with `lower ≤ K ≤ upper`, sorted by order then
/// element list.
pub fn subgroups_between(lower: &Group, upper: &Group) -> Result<Vec<Group>> {
    subgroups_between_with_cap(lower, upper, DEFAULT_MAX_LATTICE_ORDER)
}

pub fn subgroups_between_with_cap(lower: &Group, upper: &Group, cap: usize) -> Result<Vec<Group>> {
    lower.require_subgroup_of(upper, "lower bound")?;
    if upper.order() > cap {
        return Err(Error::ResourceCap {
            what: "subgroup lattice ambient order",
            limit: cap,
        });
    }
    let n = upper.order();
    let els = upper.elements();
    // multiplication table on indices
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = upper.index_of(&els[i].compose(&els[j])).unwrap() as u32;
        }
    }
    let closure = |start: &[bool], extra: usize| -> Vec<bool> {
        let mut member = start.to_vec();
        let mut list: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
        if !member[extra] {
            member[extra] = true;
            list.push(extra);
        }
        let mut head = 0;
        while head < list.len() {
            let a = list[head];
            let snapshot = list.len();
            for idx in 0..snapshot {
                for &(x, y) in &[(a, list[idx]), (list[idx], a)] {
                    let c = table[x * n + y] as usize;
                    if !member[c] {
                        member[c] = true;
                        list.push(c);
                    }
                }
            }
            head += 1;
        }
        member
    };

    let start: Vec<bool> = els.iter().map(|g| lower.contains(g)).collect();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut queue: VecDeque<Vec<bool>> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(h) = queue.pop_front() {
        for x in 0..n {
            if h[x] {
                continue;
            }
            let k = closure(&h, x);
            if seen.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }
    let mut out: Vec<Group> = seen
        .into_iter()
        .map(|mask| {
            let members: Vec<Perm> = (0..n).filter(|&i| mask[i]).map(|i| els[i].clone()).collect();
            Group::from_elements(upper.degree(), &members).expect("closure is a subgroup")
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(out)
}

/// External direct product acting on disjoint point sets, `g` first.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let degree = g.degree() + h.degree();
    let mut gens: Vec<Perm> = g.generators().iter().map(|x| x.shifted(0, degree)).collect();
    gens.extend(h.generators().iter().map(|x| x.shifted(g.degree(), degree)));
    Group::generate_with_cap(degree, &gens, g.order().saturating_mul(h.order()).max(1))
}

/// `ΔP = {(u, u)}` inside `P × P`, as returned by [`direct_product`].
pub fn diagonal_subgroup(p: &Group) -> Result<Group> {
    let d = p.degree();
    let degree = 2 * d;
    let gens: Vec<Perm> = p
        .generators()
        .iter()
        .map(|u| u.shifted(0, degree).compose(&u.shifted(d, degree)))
        .collect();
    Group::generate_with_cap(degree, &gens, p.order())
}

/// Classes of a subgroup list under conjugation by `ambient`.
#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    /// One representative per class: the first list member of that class.
    pub reps: Vec<Group>,
    /// Class index of every input subgroup.
    pub class_of: Vec<usize>,
}

pub fn conjugacy_reduce(list: &[Group], ambient: &Group, exec: Exec) -> SubgroupClasses {
    let keys = exec.map(list, |h| h.conjugacy_key(ambient));
    let mut by_key: HashMap<Vec<Perm>, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut class_of = Vec::with_capacity(list.len());
    for (h, key) in list.iter().zip(keys) {
        let next = reps.len();
        let c = *by_key.entry(key).or_insert(next);
        if c == next {
            reps.push(h.clone());
        }
        class_of.push(c);
    }
    SubgroupClasses { reps, class_of }
}

/// The bijection `K ↦ KR` from `{K : Q∩R ≤ K < Q}` onto `{H : R ≤ H < QR}`,
/// verified on both sides.
pub fn interval_correspondence(q: &Group, r: &Group) -> Result<Vec<(Group, Group)>> {
    let qr = product_set(q, r)?;
    if !r.is_normal_in(&qr) {
        return Err(Error::NotNormal("R must be normalized by Q".into()));
    }
    let q_cap_r = q.intersection(r)?;
    let lower: Vec<Group> = subgroups_between(&q_cap_r, q)?
        .into_iter()
        .filter(|k| k.order() < q.order())
        .collect();
    let upper: Vec<Group> = subgroups_between(r, &qr)?
        .into_iter()
        .filter(|h| h.order() < qr.order())
        .collect();
    let mut pairs = Vec::with_capacity(lower.len());
    let mut hit: HashSet<Group> = HashSet::new();
    for k in lower {
        let kr = product_set(&k, r)?;
        if !upper.contains(&kr) {
            return Err(Error::Invariant("K ↦ KR left the upper interval".into()));
        }
        if !hit.insert(kr.clone()) {
            return Err(Error::Invariant("K ↦ KR is not injective".into()));
        }
        pairs.push((k, kr));
    }
    if hit.len() != upper.len() {
        return Err(Error::Invariant("K ↦ KR is not surjective".into()));
    }
    Ok(pairs)
}

/// Elements `q_1..q_n` of `Q` with `Q = ⊔ q_i K` and `QR = ⊔ q_i KR`, for
/// `Q∩R ≤ K < Q` and `R` normalized by `Q`. Both partitions are checked by
/// enumeration.
pub fn compatible_coset_reps(q: &Group, k: &Group, r: &Group) -> Result<Vec<Perm>> {
    k.require_subgroup_of(q, "K")?;
    if k.order() == q.order() {
        return Err(Error::Precondition("K must be a proper subgroup of Q".into()));
    }
    let q_cap_r = q.intersection(r)?;
    if !q_cap_r.is_subgroup_of(k) {
        return Err(Error::Precondition("Q ∩ R must lie in K".into()));
    }
    let qr = product_set(q, r)?;
    let kr = product_set(k, r)?;
    let reps = q.left_coset_reps(k)?;
    for (outer, sub) in [(q, k), (&qr, &kr)] {
        let mut covered: HashSet<Perm> = HashSet::new();
        for t in &reps {
            for x in sub.elements() {
                if !covered.insert(t.compose(x)) {
                    return Err(Error::Invariant("coset representatives overlap".into()));
                }
            }
        }
        if covered.len() != outer.order() || !outer.elements().iter().all(|g| covered.contains(g)) {
            return Err(Error::Invariant("coset representatives do not cover".into()));
        }
    }
    Ok(reps)
}
