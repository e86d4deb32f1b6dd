//! Dimension bookkeeping for the concrete category constructions: Rep G,
//! twisted quantum doubles, equivariantizations of pointed categories, and
//! the named fixture types.
//!
//! Only Frobenius-Perron dimension data is produced here — simple objects
//! of a double are pairs (conjugacy class, projective irreducible of the
//! centralizer), simple objects of an equivariantization of a pointed
//! category are pairs (orbit, projective irreducible of the stabilizer) —
//! never fusion rules of the constructed categories.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cohomology::{
    projective_degrees, Cocycle2, Cocycle3, ProjectiveDegrees, ProjectiveOptions,
};
use crate::error::{Error, Result};
use crate::graphs::{self, LabeledGraph};
use crate::group::{ActionTable, PermGroup};
use crate::ring::CategoryType;

/// Where a category's dimension data came from, and the group flags the
/// verifier needs to select applicable theorems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_abelian: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_nilpotent: Option<bool>,
}

impl Provenance {
    pub fn for_group(construction: &str, source: &str, group: &PermGroup) -> Result<Self> {
        Ok(Provenance {
            construction: construction.to_string(),
            source: source.to_string(),
            group_abelian: Some(group.is_abelian()),
            group_solvable: Some(group.is_solvable()?),
            group_nilpotent: Some(group.is_nilpotent()?),
        })
    }

    pub fn fixture(source: &str) -> Self {
        Provenance {
            construction: "fixture".into(),
            source: source.to_string(),
            group_abelian: None,
            group_solvable: None,
            group_nilpotent: None,
        }
    }
}

/// cd(Rep G): the irreducible character degrees with multiplicity.
pub fn rep_group_cd(group: &PermGroup) -> Result<CategoryType> {
    let table = group.character_table()?;
    CategoryType::from_multiset(&table.degree_multiset())
}

// ---- twisted quantum double ------------------------------------------------

/// Per-class spectrum of Rep D^ω(G): the simple objects over a class are
/// (class, U) with U an α_a-projective irreducible of the centralizer, of
/// dimension |class| · dim U.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DoubleClassEntry {
    pub class_rep: u32,
    pub class_size: u64,
    pub centralizer_order: u64,
    pub projective_degrees: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DoubleSpectrum {
    pub entries: Vec<DoubleClassEntry>,
    pub category_type: CategoryType,
}

impl DoubleSpectrum {
    /// Σ (|class| · d)² over all simples; must equal |G|².
    pub fn global_dimension(&self) -> u64 {
        self.category_type.total_dimension()
    }
}

/// The 2-cocycle on the centralizer of `a` cut out of a 3-cocycle:
/// α_a(x, y) = ω(a,x,y) + ω(x,y,a) − ω(x,a,y), for x, y ∈ C_G(a).
/// `members` maps centralizer enumeration indices to parent indices.
fn centralizer_two_cocycle(
    omega: &Cocycle3,
    a: u32,
    members: &[u32],
) -> Cocycle2 {
    let m = omega.modulus;
    let k = members.len();
    let mut c = Cocycle2::zero(k, m);
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            c.table[i][j] =
                (omega.value(a, x, y) + omega.value(x, y, a) + 2 * m - omega.value(x, a, y)) % m;
        }
    }
    c
}

/// Maps each element of a subgroup (by its own enumeration order) to its
/// index in the parent enumeration.
fn subgroup_member_indices(parent: &PermGroup, sub: &PermGroup) -> Result<Vec<u32>> {
    let parent_elems = parent.elements()?;
    let sub_elems = sub.elements()?;
    sub_elems
        .elems
        .iter()
        .map(|p| {
            parent_elems
                .index_of(p)
                .ok_or_else(|| Error::Structural("subgroup element outside parent".into()))
        })
        .collect()
}

/// Dimension spectrum of Rep D^ω(G). The cocycle must be a valid normalized
/// 3-cocycle on G; `None` is the untwisted double (a dense all-zero table
/// on a large group would be pointlessly huge).
pub fn double_spectrum(
    group: &PermGroup,
    omega: Option<&Cocycle3>,
    opts: &ProjectiveOptions,
) -> Result<DoubleSpectrum> {
    let elems = group.elements()?;
    let order = elems.order();
    if let Some(omega) = omega {
        if omega.order() != order as usize {
            return Err(Error::Structural(
                "3-cocycle table does not match group order".into(),
            ));
        }
        if !omega.is_zero() {
            let violations = omega.validate(group)?;
            if !violations.is_empty() {
                return Err(Error::Validation(format!(
                    "not a normalized 3-cocycle: {} violations, first {:?}",
                    violations.len(),
                    violations[0]
                )));
            }
        }
    }
    let classes = group.conjugacy_classes()?;
    let mut entries = Vec::with_capacity(classes.class_count());
    let mut dims: Vec<u64> = Vec::new();
    // Conjugate classes share centralizers up to relabeling; within one
    // group many classes literally share the same centralizer subgroup and
    // restricted cocycle, so cache on that pair.
    let mut cache: HashMap<(Vec<u32>, Vec<Vec<u64>>), ProjectiveDegrees> = HashMap::new();
    for id in 0..classes.class_count() {
        let rep = classes.reps[id];
        let centralizer = group.centralizer_of_class(id)?;
        let members = subgroup_member_indices(group, &centralizer)?;
        let alpha = match omega {
            Some(omega) => centralizer_two_cocycle(omega, rep, &members),
            None => Cocycle2::zero(members.len(), 2),
        };
        if !alpha.is_zero() {
            let violations = alpha.validate(&centralizer)?;
            if !violations.is_empty() {
                return Err(Error::Validation(format!(
                    "class {id}: restriction is not a 2-cocycle on the centralizer"
                )));
            }
        }
        let key = (members.clone(), alpha.table.clone());
        let degrees = match cache.get(&key) {
            Some(d) => d.clone(),
            None => {
                let d = projective_degrees(&centralizer, &alpha, opts).map_err(|e| {
                    Error::Numerical(format!("class {id} (rep {rep}): {e}"))
                })?;
                cache.insert(key, d.clone());
                d
            }
        };
        let centralizer_order = centralizer.order()?;
        if degrees.degree_square_sum() != centralizer_order {
            return Err(Error::Numerical(format!(
                "class {id}: Σ d² = {} but |C| = {centralizer_order}",
                degrees.degree_square_sum()
            )));
        }
        let class_size = classes.sizes[id];
        dims.extend(degrees.degrees.iter().map(|d| d * class_size));
        entries.push(DoubleClassEntry {
            class_rep: rep,
            class_size,
            centralizer_order,
            projective_degrees: degrees.degrees,
        });
    }
    let category_type = CategoryType::from_multiset(&dims)?;
    if category_type.total_dimension() != order * order {
        return Err(Error::Numerical(format!(
            "double spectrum global dimension {} ≠ |G|² = {}",
            category_type.total_dimension(),
            order * order
        )));
    }
    Ok(DoubleSpectrum {
        entries,
        category_type,
    })
}

/// Primes p such that G has a central Sylow p-subgroup but the p-part of ω
/// still twists some centralizer: the θ-restriction of ω_p to some C_G(a)
/// is not a coboundary over k*. These are exactly the extra vertices the
/// double's prime graph may acquire beyond π(cs G).
pub fn obstructed_primes(group: &PermGroup, omega: Option<&Cocycle3>) -> Result<Vec<u64>> {
    let order = group.order()?;
    let Some(omega) = omega else {
        // The trivial class lies in every kernel.
        return Ok(Vec::new());
    };
    let classes = group.conjugacy_classes()?;
    let mut out = Vec::new();
    for p in graphs::prime_set(order)? {
        if !group.sylow_tests(p)?.has_central_sylow {
            continue;
        }
        let omega_p = omega.p_part(p);
        if omega_p.is_zero() {
            continue;
        }
        let mut in_kernel_of_every_class = true;
        for id in 0..classes.class_count() {
            let rep = classes.reps[id];
            let centralizer = group.centralizer_of_class(id)?;
            let members = subgroup_member_indices(group, &centralizer)?;
            let alpha = centralizer_two_cocycle(&omega_p, rep, &members);
            if !alpha.is_coboundary(&centralizer)? {
                in_kernel_of_every_class = false;
                break;
            }
        }
        if !in_kernel_of_every_class {
            out.push(p);
        }
    }
    Ok(out)
}

// ---- equivariantizations of pointed categories ------------------------------

/// Action data for a pointed category C(A, ω) with a G-action: an action of
/// G on A by automorphisms together with the two scalar tables τ(g; a, b)
/// and α(g, h; a) compatible with ω.
pub struct TambaraDatum {
    /// The group of invertible objects (abelian).
    pub base: PermGroup,
    /// The acting group.
    pub actor: PermGroup,
    /// Action of `actor` on the element set of `base`.
    pub action: ActionTable,
    pub modulus: u64,
    /// tau[g][a][b], indexed by actor and base enumeration indices.
    pub tau: Vec<Vec<Vec<u64>>>,
    /// alpha[g][h][a].
    pub alpha: Vec<Vec<Vec<u64>>>,
    /// Associator 3-cocycle on the base group.
    pub omega: Cocycle3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionViolation {
    pub rule: String,
    pub witness: Vec<usize>,
}

impl TambaraDatum {
    fn shape_check(&self) -> Result<(usize, usize)> {
        let na = self.base.elements()?.order() as usize;
        let ng = self.actor.elements()?.order() as usize;
        if self.action.point_count != na || self.action.images.len() != ng {
            return Err(Error::Structural("action table shape mismatch".into()));
        }
        let tau_ok = self.tau.len() == ng
            && self
                .tau
                .iter()
                .all(|p| p.len() == na && p.iter().all(|r| r.len() == na));
        let alpha_ok = self.alpha.len() == ng
            && self
                .alpha
                .iter()
                .all(|p| p.len() == ng && p.iter().all(|r| r.len() == na));
        if !tau_ok || !alpha_ok {
            return Err(Error::Structural("tau/alpha table shape mismatch".into()));
        }
        if self.omega.order() != na || self.omega.modulus != self.modulus {
            return Err(Error::Structural("omega table shape/modulus mismatch".into()));
        }
        Ok((na, ng))
    }

    /// Exhaustive validation: the action is by automorphisms, the tables
    /// are normalized, ω is a 3-cocycle, and the three compatibility
    /// identities hold at every tuple.
    pub fn validate(&self) -> Result<Vec<ActionViolation>> {
        let (na, ng) = self.shape_check()?;
        let a_elems = self.base.elements()?;
        let m = self.modulus;
        let mut violations = Vec::new();

        if !self.base.is_abelian() {
            violations.push(ActionViolation {
                rule: "base-not-abelian".into(),
                witness: vec![],
            });
        }
        for v in self.omega.validate(&self.base)? {
            violations.push(ActionViolation {
                rule: format!("omega-{}", v.rule),
                witness: v.witness,
            });
        }

        // Action by automorphisms.
        for g in 0..ng as u32 {
            for a in 0..na as u32 {
                for b in 0..na as u32 {
                    let ab = a_elems.compose(a, b);
                    let ga = self.action.apply(g, a);
                    let gb = self.action.apply(g, b);
                    if self.action.apply(g, ab) != a_elems.compose(ga, gb) {
                        violations.push(ActionViolation {
                            rule: "action-not-automorphism".into(),
                            witness: vec![g as usize, a as usize, b as usize],
                        });
                    }
                }
            }
        }

        // Normalization: both tables vanish whenever any argument is an
        // identity.
        for g in 0..ng {
            for a in 0..na {
                for b in 0..na {
                    if (g == 0 || a == 0 || b == 0) && self.tau[g][a][b] != 0 {
                        violations.push(ActionViolation {
                            rule: "tau-normalization".into(),
                            witness: vec![g, a, b],
                        });
                    }
                }
            }
        }
        for g in 0..ng {
            for h in 0..ng {
                for a in 0..na {
                    if (g == 0 || h == 0 || a == 0) && self.alpha[g][h][a] != 0 {
                        violations.push(ActionViolation {
                            rule: "alpha-normalization".into(),
                            witness: vec![g, h, a],
                        });
                    }
                }
            }
        }

        // (1) ω(a,b,c) − ω(ga,gb,gc) = τ(g;ab,c) + τ(g;a,b) − τ(g;b,c) − τ(g;a,bc)
        for g in 0..ng as u32 {
            for a in 0..na as u32 {
                for b in 0..na as u32 {
                    let ab = a_elems.compose(a, b);
                    for c in 0..na as u32 {
                        let bc = a_elems.compose(b, c);
                        let lhs = (self.omega.value(a, b, c) + m
                            - self.omega.value(
                                self.action.apply(g, a),
                                self.action.apply(g, b),
                                self.action.apply(g, c),
                            ))
                            % m;
                        let rhs = (self.tau_at(g, ab, c) + self.tau_at(g, a, b) + 2 * m
                            - self.tau_at(g, b, c)
                            - self.tau_at(g, a, bc))
                            % m;
                        if lhs != rhs {
                            violations.push(ActionViolation {
                                rule: "compat-omega-tau".into(),
                                witness: vec![g as usize, a as usize, b as usize, c as usize],
                            });
                            if violations.len() > 200 {
                                return Ok(violations);
                            }
                        }
                    }
                }
            }
        }

        // (2) 0 = α(h,l;a) + α(g,hl;a) − α(gh,l;a) − α(g,h;ˡa)
        let g_elems = self.actor.elements()?;
        for g in 0..ng as u32 {
            for h in 0..ng as u32 {
                let gh = g_elems.compose(g, h);
                for l in 0..ng as u32 {
                    let hl = g_elems.compose(h, l);
                    for a in 0..na as u32 {
                        let la = self.action.apply(l, a);
                        let lhs = (self.alpha_at(h, l, a) + self.alpha_at(g, hl, a)) % m;
                        let rhs = (self.alpha_at(gh, l, a) + self.alpha_at(g, h, la)) % m;
                        if lhs != rhs {
                            violations.push(ActionViolation {
                                rule: "alpha-cocycle".into(),
                                witness: vec![g as usize, h as usize, l as usize, a as usize],
                            });
                            if violations.len() > 200 {
                                return Ok(violations);
                            }
                        }
                    }
                }
            }
        }

        // (3) τ(gh;a,b) − τ(g;ʰa,ʰb) − τ(h;a,b) = α(g,h;a) + α(g,h;b) − α(g,h;ab)
        for g in 0..ng as u32 {
            for h in 0..ng as u32 {
                let gh = g_elems.compose(g, h);
                for a in 0..na as u32 {
                    let ha = self.action.apply(h, a);
                    for b in 0..na as u32 {
                        let hb = self.action.apply(h, b);
                        let ab = a_elems.compose(a, b);
                        let lhs = (self.tau_at(gh, a, b) + 2 * m
                            - self.tau_at(g, ha, hb)
                            - self.tau_at(h, a, b))
                            % m;
                        let rhs = (self.alpha_at(g, h, a) + self.alpha_at(g, h, b) + m
                            - self.alpha_at(g, h, ab))
                            % m;
                        if lhs != rhs {
                            violations.push(ActionViolation {
                                rule: "compat-tau-alpha".into(),
                                witness: vec![g as usize, h as usize, a as usize, b as usize],
                            });
                            if violations.len() > 200 {
                                return Ok(violations);
                            }
                        }
                    }
                }
            }
        }

        Ok(violations)
    }

    #[inline]
    fn tau_at(&self, g: u32, a: u32, b: u32) -> u64 {
        self.tau[g as usize][a as usize][b as usize]
    }

    #[inline]
    fn alpha_at(&self, g: u32, h: u32, a: u32) -> u64 {
        self.alpha[g as usize][h as usize][a as usize]
    }

    /// Fixed points A^G.
    pub fn fixed_points(&self) -> Result<Vec<u32>> {
        let na = self.base.elements()?.order() as usize;
        Ok((0..na as u32)
            .filter(|&a| (0..self.action.images.len() as u32).all(|g| self.action.apply(g, a) == a))
            .collect())
    }

    /// The 2-cocycle α_a = α(·,·;a) on the stabilizer of `a`, together with
    /// the stabilizer as a group. For fixed points the stabilizer is all of
    /// the actor.
    pub fn stabilizer_cocycle(&self, a: u32) -> Result<(PermGroup, Cocycle2)> {
        let g_elems = self.actor.elements()?;
        let stab_indices = self.action.stabilizer(a);
        let gens = stab_indices
            .iter()
            .map(|&i| g_elems.elems[i as usize].clone())
            .collect();
        let stab = self.actor.subgroup(gens)?;
        let members = subgroup_member_indices(&self.actor, &stab)?;
        let k = members.len();
        let mut c = Cocycle2::zero(k, self.modulus);
        for (i, &g) in members.iter().enumerate() {
            for (j, &h) in members.iter().enumerate() {
                c.table[i][j] = self.alpha_at(g, h, a);
            }
        }
        Ok((stab, c))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub orbit_rep: u32,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    pub projective_degrees: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquivariantizationSpectrum {
    pub entries: Vec<OrbitEntry>,
    pub category_type: CategoryType,
}

/// cd of the equivariantization C(A, ω)^G: over each orbit representative
/// a, the simples have dimension |orbit| · dim U for U an α_a-projective
/// irreducible of the stabilizer. Total dimension |A|·|G| is certified.
pub fn equivariantization_spectrum(
    datum: &TambaraDatum,
    opts: &ProjectiveOptions,
) -> Result<EquivariantizationSpectrum> {
    let na = datum.base.order()?;
    let ng = datum.actor.order()?;
    let orbits = datum.action.orbits();
    let mut entries = Vec::with_capacity(orbits.len());
    let mut dims = Vec::new();
    for orbit in &orbits {
        let rep = orbit[0];
        let (stab, alpha) = datum.stabilizer_cocycle(rep)?;
        let stab_order = stab.order()?;
        if stab_order * orbit.len() as u64 != ng {
            return Err(Error::Numerical("orbit-stabilizer mismatch".into()));
        }
        if !alpha.is_zero() {
            let violations = alpha.validate(&stab)?;
            if !violations.is_empty() {
                return Err(Error::Validation(format!(
                    "α restricted to the stabilizer of {rep} is not a 2-cocycle"
                )));
            }
        }
        let degrees = projective_degrees(&stab, &alpha, opts)?;
        dims.extend(degrees.degrees.iter().map(|d| d * orbit.len() as u64));
        entries.push(OrbitEntry {
            orbit_rep: rep,
            orbit_size: orbit.len() as u64,
            stabilizer_order: stab_order,
            projective_degrees: degrees.degrees,
        });
    }
    let category_type = CategoryType::from_multiset(&dims)?;
    if category_type.total_dimension() != na * ng {
        return Err(Error::Numerical(format!(
            "equivariantization total dimension {} ≠ |A||G| = {}",
            category_type.total_dimension(),
            na * ng
        )));
    }
    Ok(EquivariantizationSpectrum {
        entries,
        category_type,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixedPointHomReport {
    pub pairs_checked: usize,
    pub exact_identity_holds: bool,
    pub all_products_cobound: bool,
}

/// On the fixed points A^G, a ↦ [α_a] is a homomorphism into H²(G, k*):
/// α_a + α_b − α_{ab} both equals the coboundary of g ↦ τ(g; a, b)
/// pointwise and is accepted by the coboundary solver.
pub fn fixed_point_homomorphism_check(datum: &TambaraDatum) -> Result<FixedPointHomReport> {
    let a_elems = datum.base.elements()?;
    let g_elems = datum.actor.elements()?;
    let ng = g_elems.order() as usize;
    let m = datum.modulus;
    let fixed = datum.fixed_points()?;
    let mut pairs = 0;
    let mut exact = true;
    let mut cobound = true;
    for &a in &fixed {
        for &b in &fixed {
            let ab = a_elems.compose(a, b);
            pairs += 1;
            let mut diff = Cocycle2::zero(ng, m);
            for g in 0..ng as u32 {
                for h in 0..ng as u32 {
                    let gh = g_elems.compose(g, h);
                    let lhs = (datum.alpha_at(g, h, a) + datum.alpha_at(g, h, b) + m
                        - datum.alpha_at(g, h, ab))
                        % m;
                    diff.table[g as usize][h as usize] = lhs;
                    // τ(gh; a, b) − τ(g; a, b) − τ(h; a, b)
                    let rhs = (datum.tau_at(gh, a, b) + 2 * m
                        - datum.tau_at(g, a, b)
                        - datum.tau_at(h, a, b))
                        % m;
                    if lhs != rhs {
                        exact = false;
                    }
                }
            }
            if !diff.is_coboundary(&datum.actor)? {
                cobound = false;
            }
        }
    }
    Ok(FixedPointHomReport {
        pairs_checked: pairs,
        exact_identity_holds: exact,
        all_products_cobound: cobound,
    })
}

// ---- datum constructors ------------------------------------------------------

/// Datum with trivial ω whose τ is a coboundary in the base direction and
/// whose α is the matching correction term; every identity holds by
/// construction, for any action by automorphisms. `phi[g][a]` is free
/// apart from normalization.
pub fn coboundary_datum(
    base: PermGroup,
    actor: PermGroup,
    action: ActionTable,
    modulus: u64,
    phi: Vec<Vec<u64>>,
) -> Result<TambaraDatum> {
    let na = base.order()? as usize;
    let ng = actor.order()? as usize;
    if phi.len() != ng || phi.iter().any(|r| r.len() != na) {
        return Err(Error::Structural("phi table shape mismatch".into()));
    }
    if phi.iter().any(|r| r[0] != 0) || phi[0].iter().any(|&v| v != 0) {
        return Err(Error::Structural("phi must be normalized".into()));
    }
    let a_elems = base.elements()?;
    let g_elems = actor.elements()?;
    let m = modulus;
    let mut tau = vec![vec![vec![0u64; na]; na]; ng];
    for g in 0..ng {
        for a in 0..na as u32 {
            for b in 0..na as u32 {
                let ab = a_elems.compose(a, b);
                tau[g][a as usize][b as usize] =
                    (phi[g][a as usize] + phi[g][b as usize] + m - phi[g][ab as usize]) % m;
            }
        }
    }
    let mut alpha = vec![vec![vec![0u64; na]; ng]; ng];
    for g in 0..ng as u32 {
        for h in 0..ng as u32 {
            let gh = g_elems.compose(g, h);
            for a in 0..na as u32 {
                let ha = action.apply(h, a);
                alpha[g as usize][h as usize][a as usize] = (phi[gh as usize][a as usize] + 2 * m
                    - phi[g as usize][ha as usize]
                    - phi[h as usize][a as usize])
                    % m;
            }
        }
    }
    Ok(TambaraDatum {
        omega: Cocycle3::zero(na, m),
        base,
        actor,
        action,
        modulus,
        tau,
        alpha,
    })
}

/// All-trivial datum for a given action.
pub fn trivial_datum(
    base: PermGroup,
    actor: PermGroup,
    action: ActionTable,
    modulus: u64,
) -> Result<TambaraDatum> {
    let na = base.order()? as usize;
    let ng = actor.order()? as usize;
    coboundary_datum(base, actor, action, modulus, vec![vec![0; na]; ng])
}

/// The pointwise-fixed ℤ₂×ℤ₂ acting on ℤ₂×ℤ₂ with α(·,·;a) in the
/// nontrivial Schur class for the two fixed points outside the kernel of
/// a₁ + a₂. (The class assignment a ↦ [α_a] must be a homomorphism, so it
/// cannot be nontrivial at all three involutions at once.)
pub fn fixed_point_z2sq_datum() -> Result<TambaraDatum> {
    use crate::cohomology::{elementary_coordinates, heisenberg_cocycle_z2_squared};
    use crate::group::families::elementary_abelian;

    let base = elementary_abelian(2, 2)?;
    let actor = elementary_abelian(2, 2)?;
    let action = ActionTable::trivial(&actor, base.order()? as usize)?;
    let na = 4usize;
    let ng = 4usize;
    let cocycle = heisenberg_cocycle_z2_squared(&actor)?;
    let coords = elementary_coordinates(&base, 2, 2)?;
    let mut alpha = vec![vec![vec![0u64; na]; ng]; ng];
    for g in 0..ng {
        for h in 0..ng {
            for (a, coord) in coords.iter().enumerate() {
                let f = (coord[0] + coord[1]) % 2;
                alpha[g][h][a] = f * cocycle.table[g][h] % 2;
            }
        }
    }
    Ok(TambaraDatum {
        omega: Cocycle3::zero(na, 2),
        tau: vec![vec![vec![0u64; na]; na]; ng],
        alpha,
        base,
        actor,
        action,
        modulus: 2,
    })
}

/// ℤ₂ inverting ℤ_n with all scalars trivial: the equivariantization of
/// C(ℤ_n) by inversion, whose type matches Rep of the dihedral group.
pub fn inversion_datum(n: u64) -> Result<TambaraDatum> {
    use crate::group::families::cyclic;
    use crate::group::Perm;

    let base = cyclic(n)?;
    let actor = cyclic(2)?;
    let a_elems = base.elements()?;
    let na = a_elems.order() as usize;
    // inversion permutation on element indices
    let inv = Perm::from_images(
        (0..na as u32)
            .map(|i| a_elems.inverse_of(i))
            .collect(),
    )?;
    let action = ActionTable::new(&actor, na, vec![inv])?;
    trivial_datum(base, actor, action, 2)
}

// ---- named fixtures -----------------------------------------------------------

/// Dimension types stored for categories whose construction is beyond this
/// crate (their types are established facts about the named categories).
pub fn fixture_type(name: &str, param: Option<u64>) -> Result<(CategoryType, Provenance)> {
    match name {
        // The rank-10 modular category attached to sl(3) at a sixth root
        // of unity: 36 = 3·1 + 6·4 + 1·9.
        "sl3-q6" => Ok((
            CategoryType::from_pairs(&[(1, 3), (2, 6), (3, 1)])?,
            Provenance::fixture("sl3-q6"),
        )),
        // The Drinfeld center of a Tambara-Yamagami category over an
        // abelian group of square order n: type (1, 2n; 2, n(n-1)/2; √n, 2n).
        "ty-center" => {
            let n = param.ok_or_else(|| {
                Error::InvalidParameter("ty-center needs the order of the base group".into())
            })?;
            let root = (n as f64).sqrt().round() as u64;
            if root * root != n {
                return Err(Error::InvalidParameter(format!(
                    "ty-center is integral only for square base order; {n} is not a square"
                )));
            }
            let mut dims = vec![1u64; 2 * n as usize];
            dims.extend(std::iter::repeat(2).take((n * (n - 1) / 2) as usize));
            dims.extend(std::iter::repeat(root).take(2 * n as usize));
            Ok((
                CategoryType::from_multiset(&dims)?,
                Provenance::fixture(&format!("ty-center-{n}")),
            ))
        }
        other => Err(Error::InvalidParameter(format!("unknown fixture '{other}'"))),
    }
}

/// Common divisor graph of the orbit sizes of an action (sizes 1 drop out).
pub fn ip_graph(action: &ActionTable) -> LabeledGraph {
    graphs::divisor_graph(&action.orbit_sizes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_carry_cocycle, trilinear_cocycle_z2_cubed};
    use crate::graphs::analyze;
    use crate::group::families::{
        cyclic, dihedral, elementary_abelian, semidirect_cyclic, symmetric,
    };
    use crate::group::Perm;
    use rand::{Rng, SeedableRng};

    fn opts() -> ProjectiveOptions {
        ProjectiveOptions::default()
    }

    #[test]
    fn rep_cd_examples() {
        let a5 = crate::group::families::alternating(5).unwrap();
        assert_eq!(
            rep_group_cd(&a5).unwrap().pairs(),
            &[(1, 1), (3, 2), (4, 1), (5, 1)]
        );
        let z8 = cyclic(8).unwrap();
        assert_eq!(rep_group_cd(&z8).unwrap().pairs(), &[(1, 8)]);
        let s3 = symmetric(3).unwrap();
        assert_eq!(rep_group_cd(&s3).unwrap().pairs(), &[(1, 2), (2, 1)]);
    }

    #[test]
    fn double_of_s3_untwisted() {
        let g = symmetric(3).unwrap();
        let spec = double_spectrum(&g, None, &opts()).unwrap();
        assert_eq!(spec.category_type.pairs(), &[(1, 2), (2, 4), (3, 2)]);
        assert_eq!(spec.global_dimension(), 36);
    }

    #[test]
    fn double_of_abelian_group_is_pointed() {
        let g = cyclic(5).unwrap();
        let spec = double_spectrum(&g, None, &opts()).unwrap();
        assert_eq!(spec.category_type.pairs(), &[(1, 25)]);
    }

    #[test]
    fn double_of_frobenius_3410() {
        let g = semidirect_cyclic(341, 10, 244).unwrap();
        let spec = double_spectrum(&g, None, &opts()).unwrap();
        let delta = spec.category_type.prime_graph().unwrap();
        let report = analyze(&delta);
        assert_eq!(report.components, vec![vec![2, 5], vec![11, 31]]);
        assert!(report.all_complete());
        assert_eq!(spec.global_dimension(), 3410 * 3410);
    }

    #[test]
    fn obstructed_primes_trivial_cocycle_empty() {
        let g = cyclic(6).unwrap();
        assert!(obstructed_primes(&g, None).unwrap().is_empty());
    }

    #[test]
    fn obstructed_primes_need_central_sylow() {
        // D4's Sylow 2-subgroup is itself, not central: no prime can ever
        // be obstructed, whatever the cocycle.
        let d4 = dihedral(4).unwrap();
        assert!(obstructed_primes(&d4, None).unwrap().is_empty());
        // ... and even with a nontrivial cocycle on it.
        let omega = {
            use crate::cohomology::inflate3;
            let z2 = cyclic(2).unwrap();
            let base = crate::cohomology::cyclic_carry_cocycle(&z2, 1).unwrap();
            // D4 → ℤ2 by the sign of the reflection part
            let elems = d4.elements().unwrap();
            let map: Vec<u32> = elems
                .elems
                .iter()
                .map(|p| {
                    // reflections reverse orientation of the 4-gon
                    let a = p.apply(0);
                    let b = p.apply(1);
                    u32::from((a + 1) % 4 != b)
                })
                .collect();
            inflate3(&d4, &z2, &map, &base).unwrap()
        };
        assert!(omega.validate(&d4).unwrap().is_empty());
        assert!(obstructed_primes(&d4, Some(&omega)).unwrap().is_empty());
    }

    #[test]
    fn trilinear_class_obstructs_two() {
        let g = elementary_abelian(2, 3).unwrap();
        let omega = trilinear_cocycle_z2_cubed(&g).unwrap();
        assert_eq!(obstructed_primes(&g, Some(&omega)).unwrap(), vec![2]);
        // The double acquires dimension-2 simples.
        let spec = double_spectrum(&g, Some(&omega), &opts()).unwrap();
        assert!(spec.category_type.dim_set().contains(&2));
        assert_eq!(spec.global_dimension(), 64);
    }

    #[test]
    fn carry_cocycles_on_cyclic_groups_never_obstruct() {
        // H² of every cyclic group is trivial over k*.
        for n in [2u64, 4, 6] {
            let g = cyclic(n).unwrap();
            let omega = cyclic_carry_cocycle(&g, 1).unwrap();
            assert!(obstructed_primes(&g, Some(&omega)).unwrap().is_empty());
            let spec = double_spectrum(&g, Some(&omega), &opts()).unwrap();
            assert_eq!(spec.category_type.pairs(), &[(1, n * n)]);
        }
    }

    #[test]
    fn inversion_equivariantization_matches_dihedral() {
        let datum = inversion_datum(3).unwrap();
        assert!(datum.validate().unwrap().is_empty());
        let spec = equivariantization_spectrum(&datum, &opts()).unwrap();
        assert_eq!(spec.category_type.pairs(), &[(1, 2), (2, 1)]);
        assert_eq!(
            spec.category_type,
            rep_group_cd(&symmetric(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn trivial_actor_gives_pointed_type() {
        let base = cyclic(5).unwrap();
        let actor = cyclic(1).unwrap();
        let action = ActionTable::trivial(&actor, 5).unwrap();
        let datum = trivial_datum(base, actor, action, 2).unwrap();
        let spec = equivariantization_spectrum(&datum, &opts()).unwrap();
        assert_eq!(spec.category_type.pairs(), &[(1, 5)]);
    }

    #[test]
    fn fixed_point_datum_type() {
        let datum = fixed_point_z2sq_datum().unwrap();
        assert!(datum.validate().unwrap().is_empty());
        let spec = equivariantization_spectrum(&datum, &opts()).unwrap();
        assert_eq!(spec.category_type.pairs(), &[(1, 8), (2, 2)]);
        assert_eq!(spec.category_type.total_dimension(), 16);
        let report = fixed_point_homomorphism_check(&datum).unwrap();
        assert!(report.exact_identity_holds);
        assert!(report.all_products_cobound);
        assert_eq!(report.pairs_checked, 16);
    }

    #[test]
    fn coboundary_data_validate_and_check(){
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        // ℤ4 acting on ℤ5 by multiplication by 2 (order 4 unit mod 5).
        let base = cyclic(5).unwrap();
        let actor = cyclic(4).unwrap();
        let a_elems = base.elements().unwrap();
        let mult = Perm::from_images(
            (0..5u32)
                .map(|i| {
                    let r = a_elems.elems[i as usize].apply(0) as u64;
                    let target = (r * 2) % 5;
                    (0..5u32)
                        .find(|&j| a_elems.elems[j as usize].apply(0) as u64 == target)
                        .unwrap()
                })
                .collect(),
        )
        .unwrap();
        let action = ActionTable::new(&actor, 5, vec![mult]).unwrap();
        let m = 12;
        let mut phi = vec![vec![0u64; 5]; 4];
        for g in 1..4 {
            for a in 1..5 {
                phi[g][a] = rng.gen_range(0..m);
            }
        }
        let datum = coboundary_datum(base, actor, action, m, phi).unwrap();
        assert!(datum.validate().unwrap().is_empty());
        let spec = equivariantization_spectrum(&datum, &opts()).unwrap();
        assert_eq!(spec.category_type.total_dimension(), 20);
        let report = fixed_point_homomorphism_check(&datum).unwrap();
        assert!(report.exact_identity_holds);
        assert!(report.all_products_cobound);
    }

    #[test]
    fn corrupted_tau_detected() {
        let datum = inversion_datum(3).unwrap();
        let mut bad = datum;
        bad.tau[1][1][1] = 1;
        let violations = bad.validate().unwrap();
        assert!(!violations.is_empty());
    }

    #[test]
    fn fixtures() {
        let (ty, prov) = fixture_type("sl3-q6", None).unwrap();
        assert_eq!(ty.pairs(), &[(1, 3), (2, 6), (3, 1)]);
        assert_eq!(prov.construction, "fixture");
        let delta = ty.prime_graph().unwrap();
        let report = analyze(&delta);
        assert_eq!(report.components, vec![vec![2], vec![3]]);

        let (ty9, _) = fixture_type("ty-center", Some(9)).unwrap();
        assert_eq!(ty9.pairs(), &[(1, 18), (2, 36), (3, 18)]);
        assert_eq!(analyze(&ty9.prime_graph().unwrap()).component_count(), 2);

        let (ty4, _) = fixture_type("ty-center", Some(4)).unwrap();
        assert_eq!(ty4.pairs(), &[(1, 8), (2, 14)]);
        let r4 = analyze(&ty4.prime_graph().unwrap());
        assert_eq!(r4.component_count(), 1);
        assert!(r4.all_complete());

        assert!(fixture_type("ty-center", Some(5)).is_err());
        assert!(fixture_type("nope", None).is_err());
    }

    #[test]
    fn ip_graphs() {
        // trivial action: all orbit sizes 1, empty graph
        let g = symmetric(3).unwrap();
        let action = ActionTable::trivial(&g, 4).unwrap();
        assert_eq!(ip_graph(&action).vertex_count(), 0);

        // ℤ2 inverting ℤ3: orbit sizes {1, 2}: a single vertex
        let z2 = cyclic(2).unwrap();
        let inv = Perm::from_images(vec![0, 2, 1]).unwrap();
        let action = ActionTable::new(&z2, 3, vec![inv]).unwrap();
        let graph = ip_graph(&action);
        assert_eq!(graph.vertices, vec![2]);
        let report = analyze(&graph);
        assert_eq!(report.component_count(), 1);
        assert!(report.max_diameter().unwrap() <= 2);
    }
}
