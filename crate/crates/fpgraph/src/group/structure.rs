//! Structural group analysis: derived and lower central series, Sylow
//! subgroup tests, quasi-Frobenius detection, the Gallagher product check
//! and group actions with their orbit data.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{is_normal_set, num_gcd, Perm, PermGroup};
use crate::error::{Error, Result};

/// Outcome of a search that may exhaust its budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tristate {
    Yes,
    No,
    Undecided,
}

impl Tristate {
    pub fn is_yes(self) -> bool {
        self == Tristate::Yes
    }
}

impl PermGroup {
    /// Derived subgroup: normal closure of the commutators of generator
    /// pairs. Returns element indices and a small generating set.
    pub fn derived_subgroup(&self) -> Result<(Vec<u32>, Vec<u32>)> {
        let gen_idx: Vec<u32> = {
            let elems = self.elements()?;
            self.generators()
                .iter()
                .map(|g| elems.index_of(g).unwrap())
                .collect()
        };
        self.commutators_closure(&gen_idx)
    }

    /// Normal closure of the commutators [g, h] with g a generator of
    /// `self` and h ranging over the given element indices.
    fn commutators_closure(&self, members: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
        let elems = self.elements()?;
        let mut seeds = Vec::new();
        for g in self.generators() {
            let gi = elems.index_of(g).unwrap();
            for &h in members {
                // [g, h] = g⁻¹ h⁻¹ g h
                let c = elems.compose(
                    elems.compose(elems.inverse_of(gi), elems.inverse_of(h)),
                    elems.compose(gi, h),
                );
                if c != 0 && !seeds.contains(&c) {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure_with_gens(&seeds)
    }

    pub fn is_solvable(&self) -> Result<bool> {
        // Derived series, tracking a small generating set of each term.
        // D(H) is the normal closure in H of commutators of H-generators;
        // since each term is normal in G, it is enough to close commutators
        // of the current generators under conjugation by all of G and
        // against each other, which commutators_closure does at the top
        // level. For lower terms we conjugate only within the subgroup.
        let elems = self.elements()?;
        let mut gens: Vec<Perm> = self.generators().to_vec();
        let mut size = elems.order();
        loop {
            if gens.is_empty() {
                return Ok(true);
            }
            let sub = self.subgroup(gens.clone())?;
            let (members, gen_idx) = sub.derived_subgroup()?;
            let next_size = members.len() as u64;
            if next_size == 1 {
                return Ok(true);
            }
            if next_size == size {
                return Ok(false);
            }
            let sub_elems = sub.elements()?;
            gens = gen_idx
                .iter()
                .map(|&i| sub_elems.elems[i as usize].clone())
                .collect();
            size = next_size;
        }
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        // Lower central series: L_{k+1} = [G, L_k].
        let elems = self.elements()?;
        let mut lk_gens: Vec<u32> = self
            .generators()
            .iter()
            .map(|g| elems.index_of(g).unwrap())
            .collect();
        let mut size = elems.order();
        loop {
            if lk_gens.is_empty() {
                return Ok(true);
            }
            let (members, gen_idx) = self.commutators_closure(&lk_gens)?;
            let next_size = members.len() as u64;
            if next_size == 1 {
                return Ok(true);
            }
            if next_size == size {
                return Ok(false);
            }
            lk_gens = gen_idx;
            size = next_size;
        }
    }

    /// A Sylow p-subgroup, via p-element seeds and a normalizer climb.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Vec<u32>> {
        let elems = self.elements()?;
        let order = elems.order();
        let mut target = 1u64;
        let mut rest = order;
        while rest % p == 0 {
            target *= p;
            rest /= p;
        }
        let mut members: Vec<u32> = vec![0];
        let mut member_set: HashSet<u32> = members.iter().copied().collect();
        while (members.len() as u64) < target {
            // Normalizer of the current p-subgroup.
            let normalizer: Vec<u32> = (0..elems.elems.len() as u32)
                .filter(|&g| {
                    members.iter().all(|&m| {
                        member_set.contains(&elems.compose(
                            elems.compose(g, m),
                            elems.inverse_of(g),
                        ))
                    })
                })
                .collect();
            // A p-element of the normalizer outside the subgroup exists
            // whenever |P| < p-part of |G|.
            let mut extended = false;
            for &z in &normalizer {
                if member_set.contains(&z) {
                    continue;
                }
                let zp = elems.elems[z as usize].clone();
                let o = zp.order();
                let mut coprime = o;
                while coprime % p == 0 {
                    coprime /= p;
                }
                // z^coprime has p-power order.
                let mut y = Perm::identity(self.degree());
                for _ in 0..coprime {
                    y = zp.compose(&y);
                }
                let yi = elems.index_of(&y).unwrap();
                if yi != 0 && !member_set.contains(&yi) {
                    members = self.subgroup_closure(&[members.clone(), vec![yi]].concat())?;
                    member_set = members.iter().copied().collect();
                    extended = true;
                    break;
                }
            }
            if !extended {
                return Err(Error::Numerical(format!(
                    "Sylow {p}-subgroup climb stalled at order {}",
                    members.len()
                )));
            }
        }
        Ok(members)
    }

    /// Central / normal-abelian Sylow p-subgroup tests.
    pub fn sylow_tests(&self, p: u64) -> Result<SylowReport> {
        let elems = self.elements()?;
        let sylow = self.sylow_subgroup(p)?;
        let central = sylow.iter().all(|&m| {
            let x = &elems.elems[m as usize];
            self.generators().iter().all(|g| g.compose(x) == x.compose(g))
        });
        let normal = is_normal_set(self, &sylow)?;
        let abelian = {
            let mut ok = true;
            'outer: for (i, &a) in sylow.iter().enumerate() {
                for &b in &sylow[i + 1..] {
                    if elems.compose(a, b) != elems.compose(b, a) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            ok
        };
        Ok(SylowReport {
            prime: p,
            sylow_order: sylow.len() as u64,
            has_central_sylow: central,
            has_normal_abelian_sylow: normal && abelian,
        })
    }

    /// Decides whether G/Z(G) is a Frobenius group with abelian kernel and
    /// abelian complement.
    ///
    /// Normal subgroups of the quotient are enumerated completely as joins
    /// of single-class normal closures. For a candidate kernel N (abelian,
    /// order coprime to its index, with C_Q(n) = N for all nonidentity
    /// n ∈ N), an abelian complement must equal the centralizer of any of
    /// its nontrivial elements, so one centralizer computation decides it.
    pub fn quasi_frobenius_abelian(&self) -> Result<Tristate> {
        const QUOTIENT_CAP: u64 = 10_000;
        const LATTICE_CAP: usize = 4096;

        let center = self.center()?;
        let storage;
        let q: &PermGroup = if center.len() == 1 {
            self
        } else {
            storage = self.quotient(&center)?;
            &storage
        };
        let q_order = match q.order() {
            Ok(o) => o,
            Err(Error::ResourceCap { .. }) => return Ok(Tristate::Undecided),
            Err(e) => return Err(e),
        };
        if q_order > QUOTIENT_CAP {
            return Ok(Tristate::Undecided);
        }
        if q_order == 1 {
            // Abelian group: no proper Frobenius quotient.
            return Ok(Tristate::No);
        }
        let elems = q.elements()?;
        let classes = q.conjugacy_classes()?;

        // All normal subgroups arise as joins of single-class normal
        // closures; track a small generating set per lattice member so
        // joins stay cheap.
        let mut lattice: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![0], vec![])];
        let mut seen: HashSet<Vec<u32>> = [vec![0u32]].into_iter().collect();
        for &rep in &classes.reps {
            let (members, gens) = q.normal_closure_with_gens(&[rep])?;
            if seen.insert(members.clone()) {
                lattice.push((members, gens));
            }
        }
        let mut head = 0;
        while head < lattice.len() {
            if lattice.len() > LATTICE_CAP {
                return Ok(Tristate::Undecided);
            }
            let (_, a_gens) = lattice[head].clone();
            head += 1;
            for i in 0..lattice.len() {
                let (_, b_gens) = &lattice[i];
                // The join of two normal subgroups is the subgroup their
                // generators generate; it is automatically normal.
                let join = q.subgroup_closure(&[a_gens.clone(), b_gens.clone()].concat())?;
                if seen.insert(join.clone()) {
                    let gens = [a_gens.clone(), b_gens.clone()].concat();
                    lattice.push((join, gens));
                }
            }
        }

        for (kernel, _) in &lattice {
            let n_order = kernel.len() as u64;
            if n_order <= 1 || n_order >= q_order {
                continue;
            }
            let index = q_order / n_order;
            if num_gcd(n_order, index) != 1 {
                continue;
            }
            let kernel_set: HashSet<u32> = kernel.iter().copied().collect();
            // Abelian kernel.
            let abelian = kernel.iter().enumerate().all(|(i, &a)| {
                kernel[i + 1..]
                    .iter()
                    .all(|&b| elems.compose(a, b) == elems.compose(b, a))
            });
            if !abelian {
                continue;
            }
            // Since N is abelian, N ⊆ C_Q(n); the kernel condition
            // C_Q(n) ⊆ N is then equivalent to |class(n)| = [Q : N].
            let kernel_condition = kernel.iter().all(|&n| {
                n == 0 || classes.sizes[classes.class_of[n as usize] as usize] == index
            });
            if !kernel_condition {
                continue;
            }
            // Abelian complement: the centralizer of any element outside N.
            let x = (0..q_order as u32)
                .find(|i| !kernel_set.contains(i))
                .expect("proper subgroup leaves elements");
            let centralizer: Vec<u32> = (0..q_order as u32)
                .filter(|&g| elems.compose(g, x) == elems.compose(x, g))
                .collect();
            if centralizer.len() as u64 != index {
                continue;
            }
            if centralizer.iter().any(|c| kernel_set.contains(c) && *c != 0) {
                continue;
            }
            let comp_abelian = centralizer.iter().enumerate().all(|(i, &a)| {
                centralizer[i + 1..]
                    .iter()
                    .all(|&b| elems.compose(a, b) == elems.compose(b, a))
            });
            if comp_abelian {
                return Ok(Tristate::Yes);
            }
        }
        Ok(Tristate::No)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowReport {
    pub prime: u64,
    pub sylow_order: u64,
    pub has_central_sylow: bool,
    pub has_normal_abelian_sylow: bool,
}

/// Action of a group on a finite point set, given by the permutation images
/// of its generators. Construction certifies the homomorphism property by
/// propagating images over the full Cayley closure and checking consistency
/// on every revisit.
pub struct ActionTable {
    pub point_count: usize,
    /// Image permutation of every group element (by enumeration index).
    pub images: Vec<Perm>,
}

impl ActionTable {
    pub fn new(group: &PermGroup, point_count: usize, gen_images: Vec<Perm>) -> Result<Self> {
        if gen_images.len() != group.generators().len() {
            return Err(Error::Structural(
                "one image permutation per generator required".into(),
            ));
        }
        if point_count == 0 {
            return Err(Error::Structural("actions need a nonempty point set".into()));
        }
        for p in &gen_images {
            if p.degree() != point_count {
                return Err(Error::Structural("action images of mixed degree".into()));
            }
        }
        let elems = group.elements()?;
        let n = elems.elems.len();
        let mut images: Vec<Option<Perm>> = vec![None; n];
        images[0] = Some(Perm::identity(point_count));
        let mut queue = vec![0u32];
        let mut head = 0;
        let gen_idx: Vec<u32> = group
            .generators()
            .iter()
            .map(|g| elems.index_of(g).unwrap())
            .collect();
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let phi_x = images[x as usize].clone().unwrap();
            for (gi, phi_g) in gen_idx.iter().zip(&gen_images) {
                let y = elems.compose(*gi, x);
                let candidate = phi_g.compose(&phi_x);
                match &images[y as usize] {
                    None => {
                        images[y as usize] = Some(candidate);
                        queue.push(y);
                    }
                    Some(existing) => {
                        if *existing != candidate {
                            return Err(Error::Validation(
                                "generator images do not define a group action".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(ActionTable {
            point_count,
            images: images.into_iter().map(|p| p.unwrap()).collect(),
        })
    }

    /// Trivial action of `group` on `points` points.
    pub fn trivial(group: &PermGroup, points: usize) -> Result<Self> {
        let id = Perm::identity(points);
        ActionTable::new(group, points, vec![id; group.generators().len()])
    }

    pub fn apply(&self, element: u32, point: u32) -> u32 {
        self.images[element as usize].apply(point)
    }

    /// Orbit partition of the point set.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.point_count];
        let mut orbits = Vec::new();
        for start in 0..self.point_count as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start as usize] = true;
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for img in &self.images {
                    let q = img.apply(p);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Multiset of orbit sizes; these partition the point count.
    pub fn orbit_sizes(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self.orbits().iter().map(|o| o.len() as u64).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Stabilizer of a point, as element indices of the acting group.
    pub fn stabilizer(&self, point: u32) -> Vec<u32> {
        (0..self.images.len() as u32)
            .filter(|&g| self.apply(g, point) == point)
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GallagherReport {
    /// (kernel-character index, irreducible-restriction character index)
    pub pairs_tested: Vec<(usize, usize)>,
    pub all_products_irreducible: bool,
    pub vacuous: bool,
}

impl PermGroup {
    /// For every irreducible ψ of `self` with `normal` in its kernel and
    /// every irreducible χ whose restriction to `normal` stays irreducible,
    /// checks that ψχ is again irreducible (norm one).
    pub fn gallagher_check(&self, normal: &[u32]) -> Result<GallagherReport> {
        let elems = self.elements()?;
        let classes = self.conjugacy_classes()?;
        let table = self.character_table()?;
        let order = elems.order();
        if !is_normal_set(self, normal)? {
            return Err(Error::InvalidParameter(
                "gallagher_check requires a normal subgroup".into(),
            ));
        }

        // Class ids met by N and how often.
        let mut n_class_count: HashMap<u32, u64> = HashMap::new();
        for &m in normal {
            *n_class_count.entry(classes.class_of[m as usize]).or_insert(0) += 1;
        }

        let tol = 1e-6;
        let irr_count = table.degrees.len();
        let mut kernel_chars = Vec::new();
        let mut stable_chars = Vec::new();
        for chi in 0..irr_count {
            let deg = table.degrees[chi] as f64;
            let contains_n = n_class_count
                .keys()
                .all(|&c| (table.values[chi][c as usize].re - deg).abs() < tol
                    && table.values[chi][c as usize].im.abs() < tol);
            if contains_n {
                kernel_chars.push(chi);
            }
            // ⟨χ|_N, χ|_N⟩ = (1/|N|) Σ_{n∈N} |χ(n)|²
            let mut ip = 0.0;
            for (&c, &count) in &n_class_count {
                ip += count as f64 * table.values[chi][c as usize].norm_sqr();
            }
            ip /= normal.len() as f64;
            let rounded = ip.round();
            if (ip - rounded).abs() > 1e-3 {
                return Err(Error::Numerical(format!(
                    "restriction norm {ip} too far from an integer"
                )));
            }
            if rounded as i64 == 1 {
                stable_chars.push(chi);
            }
        }

        let mut pairs = Vec::new();
        let mut all_ok = true;
        for &psi in &kernel_chars {
            for &chi in &stable_chars {
                // ⟨ψχ, ψχ⟩ over G by class sums.
                let mut ip = 0.0;
                for c in 0..classes.class_count() {
                    let v = table.values[psi][c] * table.values[chi][c];
                    ip += classes.sizes[c] as f64 * v.norm_sqr();
                }
                ip /= order as f64;
                let rounded = ip.round();
                if (ip - rounded).abs() > 1e-3 {
                    return Err(Error::Numerical(format!(
                        "product norm {ip} too far from an integer"
                    )));
                }
                pairs.push((psi, chi));
                if rounded as i64 != 1 {
                    all_ok = false;
                }
            }
        }
        Ok(GallagherReport {
            vacuous: pairs.is_empty(),
            pairs_tested: pairs,
            all_products_irreducible: all_ok,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::{
        alternating, cyclic, dihedral, direct_product, semidirect_cyclic, symmetric,
    };
    use super::*;

    #[test]
    fn solvability_flags() {
        assert!(!alternating(5).unwrap().is_solvable().unwrap());
        assert!(symmetric(4).unwrap().is_solvable().unwrap());
        assert!(!symmetric(4).unwrap().is_nilpotent().unwrap());
        assert!(dihedral(4).unwrap().is_nilpotent().unwrap());
        assert!(cyclic(12).unwrap().is_nilpotent().unwrap());
        assert!(!dihedral(3).unwrap().is_nilpotent().unwrap());
    }

    #[test]
    fn sylow_reports() {
        // ℤ6: both Sylows central.
        let z6 = cyclic(6).unwrap();
        assert!(z6.sylow_tests(2).unwrap().has_central_sylow);
        assert!(z6.sylow_tests(3).unwrap().has_central_sylow);

        // S3: Sylow 3 normal abelian but not central; Sylow 2 neither.
        let s3 = symmetric(3).unwrap();
        let rep3 = s3.sylow_tests(3).unwrap();
        assert!(!rep3.has_central_sylow);
        assert!(rep3.has_normal_abelian_sylow);
        let rep2 = s3.sylow_tests(2).unwrap();
        assert!(!rep2.has_central_sylow);
        assert!(!rep2.has_normal_abelian_sylow);

        // S4, p = 2: neither.
        let s4 = symmetric(4).unwrap();
        let rep = s4.sylow_tests(2).unwrap();
        assert_eq!(rep.sylow_order, 8);
        assert!(!rep.has_central_sylow);
        assert!(!rep.has_normal_abelian_sylow);
    }

    #[test]
    fn quasi_frobenius_detection() {
        let frob = semidirect_cyclic(341, 10, 244).unwrap();
        assert_eq!(frob.quasi_frobenius_abelian().unwrap(), Tristate::Yes);

        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.quasi_frobenius_abelian().unwrap(), Tristate::No);

        let ab = cyclic(12).unwrap();
        assert_eq!(ab.quasi_frobenius_abelian().unwrap(), Tristate::No);

        // S3 ≅ ℤ3 ⋊ ℤ2 is Frobenius with abelian kernel and complement.
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.quasi_frobenius_abelian().unwrap(), Tristate::Yes);

        // D4 is nilpotent, not quasi-Frobenius.
        let d4 = dihedral(4).unwrap();
        assert_eq!(d4.quasi_frobenius_abelian().unwrap(), Tristate::No);
    }

    #[test]
    fn action_validation_and_orbits() {
        // ℤ2 inverting ℤ3: orbits {0}, {1, 2}.
        let z2 = cyclic(2).unwrap();
        let inv = Perm::from_images(vec![0, 2, 1]).unwrap();
        let action = ActionTable::new(&z2, 3, vec![inv]).unwrap();
        assert_eq!(action.orbit_sizes(), vec![1, 2]);
        assert_eq!(action.stabilizer(0).len(), 2);
        assert_eq!(action.stabilizer(1), vec![0]);

        // Non-action rejected: image of an involution generator must square
        // to the identity.
        let bad = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert!(ActionTable::new(&z2, 3, vec![bad]).is_err());
    }

    #[test]
    fn free_orbits_of_frobenius_action() {
        // ℤ10 acting on ℤ341 by x ↦ 244x: 34 orbits of size 10 plus the
        // fixed origin.
        let z10 = cyclic(10).unwrap();
        let mult = Perm::from_images((0..341).map(|x| (x * 244 % 341) as u32).collect()).unwrap();
        let action = ActionTable::new(&z10, 341, vec![mult]).unwrap();
        let sizes = action.orbit_sizes();
        assert_eq!(sizes.len(), 35);
        assert_eq!(sizes[0], 1);
        assert!(sizes[1..].iter().all(|&s| s == 10));
    }

    #[test]
    fn trivial_action_all_fixed() {
        let g = symmetric(3).unwrap();
        let action = ActionTable::trivial(&g, 4).unwrap();
        assert_eq!(action.orbit_sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn gallagher_s4_over_a4() {
        let s4 = symmetric(4).unwrap();
        let elems = s4.elements().unwrap();
        let c3 = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let a4 = s4
            .normal_closure(&[elems.index_of(&c3).unwrap()])
            .unwrap();
        assert_eq!(a4.len(), 12);
        let report = s4.gallagher_check(&a4).unwrap();
        assert!(!report.vacuous);
        assert!(report.all_products_irreducible);
    }

    #[test]
    fn gallagher_vacuous_direction() {
        // Trivial normal subgroup: every χ restricts irreducibly over {e}
        // only when χ is linear, and only linear ψ contain it; products of
        // linear characters are linear, so the check passes.
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        let report = g.gallagher_check(&[0]).unwrap();
        assert!(report.all_products_irreducible);
    }
}
