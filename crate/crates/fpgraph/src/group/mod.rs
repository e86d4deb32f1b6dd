//! Finite permutation groups.
//!
//! A [`PermGroup`] is given by generators acting on `{0, ..., degree-1}`.
//! Everything downstream (conjugacy classes, character tables, Sylow and
//! solvability tests) works from a complete breadth-first enumeration of the
//! elements, guarded by a configurable cap. Groups are immutable after
//! construction; expensive analyses are computed once and cached.

mod chartab;
pub mod families;
mod perm;
mod structure;

pub use chartab::CharacterTable;
pub use families::GroupSpec;
pub use perm::Perm;
pub use structure::{ActionTable, GallagherReport, SylowReport, Tristate};

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

/// Complete element list with index lookup. Index 0 is the identity.
pub struct Enumeration {
    pub elems: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inverse: Vec<u32>,
}

impl Enumeration {
    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    #[inline]
    pub fn inverse_of(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    /// Index of `elems[a] ∘ elems[b]`.
    pub fn compose(&self, a: u32, b: u32) -> u32 {
        let p = self.elems[a as usize].compose(&self.elems[b as usize]);
        self.index[&p]
    }
}

/// Conjugacy class data: representatives, sizes, membership map and
/// centralizer generators obtained from the orbit transversal.
pub struct ClassData {
    /// Element index of each class representative; class 0 is `{e}`.
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
    /// Class id of every element.
    pub class_of: Vec<u32>,
    /// Class id of the inverse class.
    pub inverse_class: Vec<u32>,
    /// Schreier generators of each centralizer `C_G(reps[i])`.
    pub centralizer_gens: Vec<Vec<Perm>>,
}

impl ClassData {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    cap: u64,
    enumeration: OnceLock<Enumeration>,
    classes: OnceLock<ClassData>,
    chartab: OnceLock<CharacterTable>,
}

impl PermGroup {
    /// Group generated by `gens`, all of the same degree. The identity is
    /// always representable, so an empty generator list gives the trivial
    /// group.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Structural(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            cap: DEFAULT_ELEMENT_CAP,
            enumeration: OnceLock::new(),
            classes: OnceLock::new(),
            chartab: OnceLock::new(),
        })
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Complete duplicate-free enumeration by breadth-first closure over the
    /// generators.
    pub fn elements(&self) -> Result<&Enumeration> {
        if let Some(e) = self.enumeration.get() {
            return Ok(e);
        }
        let mut elems = vec![self.identity()];
        let mut index = HashMap::new();
        index.insert(self.identity(), 0u32);
        let mut head = 0usize;
        while head < elems.len() {
            let current = elems[head].clone();
            head += 1;
            for g in &self.gens {
                let next = g.compose(&current);
                if !index.contains_key(&next) {
                    if elems.len() as u64 >= self.cap {
                        return Err(Error::ResourceCap {
                            what: "group enumeration",
                            value: self.cap + 1,
                            cap: self.cap,
                        });
                    }
                    index.insert(next.clone(), elems.len() as u32);
                    elems.push(next);
                }
            }
        }
        let inverse = elems
            .iter()
            .map(|p| index[&p.inverse()])
            .collect();
        let _ = self.enumeration.set(Enumeration {
            elems,
            index,
            inverse,
        });
        Ok(self.enumeration.get().unwrap())
    }

    pub fn order(&self) -> Result<u64> {
        Ok(self.elements()?.order())
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> Result<u64> {
        let elems = self.elements()?;
        Ok(elems.elems.iter().map(|p| p.order()).fold(1, num_lcm))
    }

    /// Conjugacy classes by orbit closure under generator conjugation.
    pub fn conjugacy_classes(&self) -> Result<&ClassData> {
        if let Some(c) = self.classes.get() {
            return Ok(c);
        }
        let elems = self.elements()?;
        let n = elems.elems.len();
        let gen_idx: Vec<u32> = self
            .gens
            .iter()
            .map(|g| elems.index_of(g).expect("generator enumerated"))
            .collect();

        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut centralizer_gens = Vec::new();

        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            class_of[start as usize] = id;
            // transversal[x] = index of h with h · start · h⁻¹ = x
            let mut transversal: HashMap<u32, u32> = HashMap::new();
            transversal.insert(start, 0);
            let mut orbit = vec![start];
            let mut head = 0;
            let mut schreier: Vec<Perm> = Vec::new();
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                let hx = transversal[&x];
                for (g, &gi) in self.gens.iter().zip(&gen_idx) {
                    let conj = elems.index[&g
                        .compose(&elems.elems[x as usize])
                        .compose(&elems.elems[elems.inverse_of(gi) as usize])];
                    match transversal.get(&conj) {
                        None => {
                            transversal.insert(conj, elems.compose(gi, hx));
                            class_of[conj as usize] = id;
                            orbit.push(conj);
                        }
                        Some(&hconj) => {
                            // Schreier generator of the centralizer.
                            let u = elems.compose(
                                elems.inverse_of(hconj),
                                elems.compose(gi, hx),
                            );
                            if u != 0 {
                                let p = elems.elems[u as usize].clone();
                                if !schreier.contains(&p) {
                                    schreier.push(p);
                                }
                            }
                        }
                    }
                }
            }
            sizes.push(orbit.len() as u64);
            centralizer_gens.push(schreier);
        }

        let inverse_class = reps
            .iter()
            .map(|&r| class_of[elems.inverse_of(r) as usize])
            .collect();

        let _ = self.classes.set(ClassData {
            reps,
            sizes,
            class_of,
            inverse_class,
            centralizer_gens,
        });
        Ok(self.classes.get().unwrap())
    }

    /// Set of conjugacy class sizes cs(G).
    pub fn class_size_set(&self) -> Result<Vec<u64>> {
        let classes = self.conjugacy_classes()?;
        let mut sizes: Vec<u64> = classes.sizes.clone();
        sizes.sort_unstable();
        sizes.dedup();
        Ok(sizes)
    }

    /// Centralizer of the representative of class `class_id`, as a subgroup
    /// on the same points. The Schreier generators from the class orbit
    /// generate it.
    pub fn centralizer_of_class(&self, class_id: usize) -> Result<PermGroup> {
        let classes = self.conjugacy_classes()?;
        let gens = classes.centralizer_gens[class_id].clone();
        let sub = PermGroup::new(self.degree, gens)?.with_cap(self.cap);
        let expected = self.order()? / classes.sizes[class_id];
        let got = sub.order()?;
        debug_assert_eq!(got, expected, "centralizer order certification");
        if got != expected {
            return Err(Error::Numerical(format!(
                "centralizer order {got} != |G|/|class| = {expected}"
            )));
        }
        Ok(sub)
    }

    /// Element indices of the center.
    pub fn center(&self) -> Result<Vec<u32>> {
        let elems = self.elements()?;
        let mut out = Vec::new();
        for (i, x) in elems.elems.iter().enumerate() {
            if self.gens.iter().all(|g| g.compose(x) == x.compose(g)) {
                out.push(i as u32);
            }
        }
        Ok(out)
    }

    /// Subgroup of `self` generated by the given permutations.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        PermGroup::new(self.degree, gens).map(|g| g.with_cap(self.cap))
    }

    /// Subgroup closure: element indices of the subgroup generated by the
    /// given element indices, by breadth-first products.
    pub fn subgroup_closure(&self, gens: &[u32]) -> Result<Vec<u32>> {
        let elems = self.elements()?;
        let mut in_set = vec![false; elems.elems.len()];
        in_set[0] = true;
        let mut members = vec![0u32];
        let gens: Vec<u32> = {
            let mut g: Vec<u32> = gens.iter().copied().filter(|&x| x != 0).collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        for &g in &gens {
            if !in_set[g as usize] {
                in_set[g as usize] = true;
                members.push(g);
            }
        }
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in &gens {
                let y = elems.compose(g, x);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// Element indices (in `self`'s enumeration) of the normal closure of
    /// `seed`: the smallest normal subgroup containing it. Also returns a
    /// small generating set.
    pub fn normal_closure_with_gens(&self, seed: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
        let elems = self.elements()?;
        let gen_idx: Vec<u32> = self
            .gens
            .iter()
            .map(|g| elems.index_of(g).unwrap())
            .collect();
        let mut closure_gens: Vec<u32> = seed.iter().copied().filter(|&x| x != 0).collect();
        closure_gens.sort_unstable();
        closure_gens.dedup();
        loop {
            let members = self.subgroup_closure(&closure_gens)?;
            let member_set: std::collections::HashSet<u32> = members.iter().copied().collect();
            let mut grew = false;
            'search: for &g in &gen_idx {
                let g_inv = elems.inverse_of(g);
                for &s in &closure_gens.clone() {
                    let conj = elems.compose(elems.compose(g, s), g_inv);
                    if !member_set.contains(&conj) {
                        closure_gens.push(conj);
                        grew = true;
                        break 'search;
                    }
                }
            }
            if !grew {
                return Ok((members, closure_gens));
            }
        }
    }

    pub fn normal_closure(&self, seed: &[u32]) -> Result<Vec<u32>> {
        Ok(self.normal_closure_with_gens(seed)?.0)
    }

    /// Quotient G/N as a permutation group acting on the cosets of N.
    /// `normal` holds element indices of N and must be closed.
    pub fn quotient(&self, normal: &[u32]) -> Result<PermGroup> {
        let elems = self.elements()?;
        let n = elems.elems.len();
        if !is_normal_set(self, normal)? {
            return Err(Error::InvalidParameter(
                "quotient requires a normal subgroup".into(),
            ));
        }
        // Canonical coset label: least element index in gN.
        let mut coset_key = vec![u32::MAX; n];
        for g in 0..n as u32 {
            if coset_key[g as usize] != u32::MAX {
                continue;
            }
            let mut members: Vec<u32> = normal.iter().map(|&h| elems.compose(g, h)).collect();
            members.sort_unstable();
            let key = members[0];
            for m in members {
                coset_key[m as usize] = key;
            }
        }
        let mut coset_ids: Vec<u32> = coset_key.clone();
        coset_ids.sort_unstable();
        coset_ids.dedup();
        let coset_index: HashMap<u32, u32> = coset_ids
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i as u32))
            .collect();
        let mut qgens = Vec::new();
        for g in &self.gens {
            let gi = elems.index_of(g).unwrap();
            let images = coset_ids
                .iter()
                .map(|&c| coset_index[&coset_key[elems.compose(gi, c) as usize]])
                .collect();
            qgens.push(Perm::from_images(images)?);
        }
        PermGroup::new(coset_ids.len(), qgens).map(|g| g.with_cap(self.cap))
    }
}

/// True if the element-index set (closed under the subgroup operations) is
/// normal in `g`.
pub fn is_normal_set(g: &PermGroup, members: &[u32]) -> Result<bool> {
    let elems = g.elements()?;
    let member_set: std::collections::HashSet<u32> = members.iter().copied().collect();
    for gen in g.generators() {
        let gi = elems.index_of(gen).unwrap();
        for &m in members {
            let conj = elems.compose(elems.compose(gi, m), elems.inverse_of(gi));
            if !member_set.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

pub(crate) fn num_lcm(a: u64, b: u64) -> u64 {
    a / num_gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use families::{alternating, cyclic, dihedral, psl2, semidirect_cyclic, symmetric};

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(1, vec![]).unwrap();
        assert_eq!(g.order().unwrap(), 1);
        assert_eq!(g.conjugacy_classes().unwrap().class_count(), 1);
    }

    #[test]
    fn s4_enumeration() {
        let g = symmetric(4).unwrap();
        assert_eq!(g.order().unwrap(), 24);
        assert_eq!(g.exponent().unwrap(), 12);
    }

    #[test]
    fn psl28_order_by_enumeration() {
        let g = psl2(8).unwrap();
        assert_eq!(g.order().unwrap(), 504);
    }

    #[test]
    fn enumeration_cap() {
        let g = symmetric(5).unwrap().with_cap(100);
        assert!(matches!(
            g.order(),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn abelian_class_sizes_are_all_one() {
        let g = cyclic(12).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert!(classes.sizes.iter().all(|&s| s == 1));
        assert_eq!(classes.class_count(), 12);
    }

    #[test]
    fn s3_class_sizes() {
        let g = symmetric(3).unwrap();
        assert_eq!(g.class_size_set().unwrap(), vec![1, 2, 3]);
        let classes = g.conjugacy_classes().unwrap();
        let total: u64 = classes.sizes.iter().sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn frobenius_3410_class_sizes() {
        let g = semidirect_cyclic(341, 10, 244).unwrap();
        assert_eq!(g.order().unwrap(), 3410);
        assert_eq!(g.class_size_set().unwrap(), vec![1, 10, 341]);
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.class_count(), 44);
    }

    #[test]
    fn centralizer_orders_multiply() {
        let g = alternating(5).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        for (id, &size) in classes.sizes.iter().enumerate() {
            let c = g.centralizer_of_class(id).unwrap();
            assert_eq!(c.order().unwrap() * size, 60);
        }
    }

    #[test]
    fn center_of_dihedral() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.center().unwrap().len(), 2);
        let d5 = dihedral(5).unwrap();
        assert_eq!(d5.center().unwrap().len(), 1);
    }

    #[test]
    fn quotient_s4_by_v4() {
        let g = symmetric(4).unwrap();
        let elems = g.elements().unwrap();
        // V4 = normal closure of a double transposition.
        let dt = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let seed = elems.index_of(&dt).unwrap();
        let v4 = g.normal_closure(&[seed]).unwrap();
        assert_eq!(v4.len(), 4);
        let q = g.quotient(&v4).unwrap();
        assert_eq!(q.order().unwrap(), 6);
        assert!(!q.is_abelian());
    }

    #[test]
    fn normal_closure_of_3cycle_in_s4_is_a4() {
        let g = symmetric(4).unwrap();
        let elems = g.elements().unwrap();
        let c3 = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let seed = elems.index_of(&c3).unwrap();
        assert_eq!(g.normal_closure(&[seed]).unwrap().len(), 12);
    }
}
