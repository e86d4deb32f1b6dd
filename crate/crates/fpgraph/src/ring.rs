//! Fusion rings: based rings with nonnegative structure constants, a unit
//! and a duality, carrying the Grothendieck data of a fusion category.
//!
//! The structure constants `N[x][y][z]` record the multiplicity of basis
//! element `z` in the product `x ⊗ y`. Frobenius-Perron dimensions are
//! computed as the Perron eigenvector of the total multiplication matrix
//! and certified in exact integer arithmetic whenever they round to
//! integers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{self, LabeledGraph};
use crate::group::PermGroup;

/// Power-iteration parameters for the Perron eigenvector.
const PERRON_ITERATION_CAP: usize = 10_000;
const PERRON_TOLERANCE: f64 = 1e-12;
/// Rounding window for integrality certification.
const INTEGRALITY_WINDOW: f64 = 1e-6;
/// Relative tolerance for the dimension homomorphism on non-integral rings.
const HOMOMORPHISM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// table[x][y][z] = multiplicity of z in x ⊗ y.
    pub table: Vec<Vec<Vec<u64>>>,
}

/// JSON form: `{"labels": [...], "unit": i, "dual": [...], "N": [[[...]]]}`;
/// `labels` and `dual` may be omitted (duality is then inferred from the
/// unit column).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<usize>>,
    #[serde(rename = "N")]
    pub table: Vec<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Frobenius-Perron dimension vector of a fusion ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimVector {
    pub dims: Vec<f64>,
    /// Present exactly when every dimension certifies as an integer.
    pub exact: Option<Vec<u64>>,
}

impl DimVector {
    pub fn is_integral(&self) -> bool {
        self.exact.is_some()
    }
}

/// Multiset of positive integer dimensions with multiplicities, sorted by
/// dimension — the "type" of an integral fusion category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryType(Vec<(u64, u64)>);

impl CategoryType {
    pub fn from_multiset(dims: &[u64]) -> Result<Self> {
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::Structural("zero dimension in category type".into()));
        }
        let mut sorted = dims.to_vec();
        sorted.sort_unstable();
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for d in sorted {
            match pairs.last_mut() {
                Some((dim, count)) if *dim == d => *count += 1,
                _ => pairs.push((d, 1)),
            }
        }
        Ok(CategoryType(pairs))
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        let mut dims = Vec::new();
        for &(d, n) in pairs {
            if n == 0 {
                return Err(Error::Structural("zero count in category type".into()));
            }
            dims.extend(std::iter::repeat(d).take(n as usize));
        }
        CategoryType::from_multiset(&dims)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.0
    }

    /// Underlying dimension set (no multiplicities).
    pub fn dim_set(&self) -> Vec<u64> {
        self.0.iter().map(|&(d, _)| d).collect()
    }

    /// All dimensions with multiplicity.
    pub fn multiset(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(d, n) in &self.0 {
            out.extend(std::iter::repeat(d).take(n as usize));
        }
        out
    }

    /// Σ n_i d_i²: the Frobenius-Perron dimension of the category.
    pub fn total_dimension(&self) -> u64 {
        self.0.iter().map(|&(d, n)| n * d * d).sum()
    }

    pub fn object_count(&self) -> u64 {
        self.0.iter().map(|&(_, n)| n).sum()
    }

    /// Pointwise product multiset: the type of a Deligne product.
    pub fn product(&self, other: &CategoryType) -> CategoryType {
        let mut dims = Vec::new();
        for &(d1, n1) in &self.0 {
            for &(d2, n2) in &other.0 {
                dims.extend(std::iter::repeat(d1 * d2).take((n1 * n2) as usize));
            }
        }
        CategoryType::from_multiset(&dims).expect("products of positive dims")
    }

    /// Prime graph Δ on the dimension set (1 contributes nothing).
    pub fn prime_graph(&self) -> Result<LabeledGraph> {
        graphs::prime_graph(&self.dim_set())
    }

    /// Common divisor graph Γ on the dimension set minus {1}.
    pub fn divisor_graph(&self) -> LabeledGraph {
        graphs::divisor_graph(&self.dim_set())
    }
}

impl FusionRing {
    pub fn from_spec(spec: RingSpec) -> Result<Self> {
        let rank = spec.table.len();
        if rank == 0 {
            return Err(Error::Structural("empty fusion table".into()));
        }
        for (x, plane) in spec.table.iter().enumerate() {
            if plane.len() != rank {
                return Err(Error::Structural(format!(
                    "table row {x} has {} columns, expected {rank}",
                    plane.len()
                )));
            }
            for (y, fiber) in plane.iter().enumerate() {
                if fiber.len() != rank {
                    return Err(Error::Structural(format!(
                        "table entry [{x}][{y}] has length {}, expected {rank}",
                        fiber.len()
                    )));
                }
            }
        }
        if spec.unit >= rank {
            return Err(Error::Structural(format!(
                "unit index {} out of range",
                spec.unit
            )));
        }
        let labels = match spec.labels {
            Some(l) => {
                if l.len() != rank {
                    return Err(Error::Structural("label count mismatch".into()));
                }
                l
            }
            None => (0..rank).map(|i| format!("x{i}")).collect(),
        };
        let dual = match spec.dual {
            Some(d) => {
                if d.len() != rank || d.iter().any(|&i| i >= rank) {
                    return Err(Error::Structural("dual involution malformed".into()));
                }
                d
            }
            None => {
                // Infer duality: dual(x) is the unique y with N[x][y][unit] = 1.
                let mut dual = vec![usize::MAX; rank];
                for (x, d) in dual.iter_mut().enumerate() {
                    let candidates: Vec<usize> = (0..rank)
                        .filter(|&y| spec.table[x][y][spec.unit] > 0)
                        .collect();
                    if candidates.len() != 1 {
                        return Err(Error::Structural(format!(
                            "cannot infer dual of basis element {x}: {} candidates",
                            candidates.len()
                        )));
                    }
                    *d = candidates[0];
                }
                dual
            }
        };
        Ok(FusionRing {
            labels,
            unit: spec.unit,
            dual,
            table: spec.table,
        })
    }

    pub fn to_spec(&self) -> RingSpec {
        RingSpec {
            labels: Some(self.labels.clone()),
            unit: self.unit,
            dual: Some(self.dual.clone()),
            table: self.table.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn n(&self, x: usize, y: usize, z: usize) -> u64 {
        self.table[x][y][z]
    }

    /// Checks every based-ring axiom, reporting all violations with
    /// witnessing indices.
    pub fn validate(&self) -> ValidationReport {
        let rank = self.rank();
        let unit = self.unit;
        let mut violations: Vec<AxiomViolation> = Vec::new();
        let report = |axiom: &str, witness: Vec<usize>, violations: &mut Vec<AxiomViolation>| {
            violations.push(AxiomViolation {
                axiom: axiom.to_string(),
                witness,
            });
        };

        // Unit law.
        for x in 0..rank {
            for y in 0..rank {
                let expected = u64::from(x == y);
                if self.n(unit, x, y) != expected {
                    report("unit-law-left", vec![x, y], &mut violations);
                }
                if self.n(x, unit, y) != expected {
                    report("unit-law-right", vec![x, y], &mut violations);
                }
            }
        }

        // Duality against the unit column, and involutivity.
        for x in 0..rank {
            if self.dual[self.dual[x]] != x {
                report("duality-involution", vec![x], &mut violations);
            }
            for y in 0..rank {
                let expected = u64::from(y == self.dual[x]);
                if self.n(x, y, unit) != expected {
                    report("duality-unit-column", vec![x, y], &mut violations);
                }
            }
        }

        // Frobenius reciprocity.
        for x in 0..rank {
            for y in 0..rank {
                for z in 0..rank {
                    let n = self.n(x, y, z);
                    if n != self.n(self.dual[x], z, y) || n != self.n(z, self.dual[y], x) {
                        report("frobenius-reciprocity", vec![x, y, z], &mut violations);
                    }
                }
            }
        }

        // Associativity.
        'outer: for x in 0..rank {
            for y in 0..rank {
                for z in 0..rank {
                    for v in 0..rank {
                        let lhs: u64 = (0..rank).map(|w| self.n(x, y, w) * self.n(w, z, v)).sum();
                        let rhs: u64 = (0..rank).map(|w| self.n(y, z, w) * self.n(x, w, v)).sum();
                        if lhs != rhs {
                            report("associativity", vec![x, y, z, v], &mut violations);
                            if violations.len() > 1000 {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }

        ValidationReport { violations }
    }

    /// Frobenius-Perron dimensions: the Perron eigenvector of
    /// M = Σ_X N^X, normalized at the unit, then certified exactly if
    /// integral. M is strictly positive on a valid fusion ring; for
    /// degenerate inputs each support component is iterated separately.
    pub fn fp_dims(&self) -> Result<DimVector> {
        let rank = self.rank();
        let mut m = vec![vec![0f64; rank]; rank];
        for x in 0..rank {
            for (i, row) in m.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    *entry += self.n(x, i, j) as f64;
                }
            }
        }

        // Support components of M (exactly one for a valid ring).
        let mut component = vec![usize::MAX; rank];
        let mut n_components = 0;
        for start in 0..rank {
            if component[start] != usize::MAX {
                continue;
            }
            let id = n_components;
            n_components += 1;
            let mut stack = vec![start];
            component[start] = id;
            while let Some(v) = stack.pop() {
                for w in 0..rank {
                    if component[w] == usize::MAX && (m[v][w] > 0.0 || m[w][v] > 0.0) {
                        component[w] = id;
                        stack.push(w);
                    }
                }
            }
        }

        let mut dims = vec![0f64; rank];
        for comp in 0..n_components {
            let members: Vec<usize> = (0..rank).filter(|&i| component[i] == comp).collect();
            let k = members.len();
            let mut v = vec![1f64 / k as f64; k];
            let mut converged = false;
            for _ in 0..PERRON_ITERATION_CAP {
                let mut next = vec![0f64; k];
                for (a, &ia) in members.iter().enumerate() {
                    for (b, &ib) in members.iter().enumerate() {
                        next[a] += m[ia][ib] * v[b];
                    }
                }
                let norm: f64 = next.iter().sum();
                if norm == 0.0 {
                    return Err(Error::Numerical(
                        "total multiplication matrix is nilpotent".into(),
                    ));
                }
                for x in next.iter_mut() {
                    *x /= norm;
                }
                let delta = next
                    .iter()
                    .zip(&v)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                v = next;
                if delta < PERRON_TOLERANCE {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::Numerical(format!(
                    "Perron iteration did not converge within {PERRON_ITERATION_CAP} steps"
                )));
            }
            // The unit's component is pinned at d[unit] = 1; a foreign
            // component (malformed input) is scaled to minimum entry 1.
            let scale = if members.contains(&self.unit) {
                v[members.iter().position(|&i| i == self.unit).unwrap()]
            } else {
                v.iter().copied().fold(f64::INFINITY, f64::min)
            };
            for (a, &ia) in members.iter().enumerate() {
                dims[ia] = v[a] / scale;
            }
        }

        // Integrality certification: round, then re-verify the homomorphism
        // identity in exact integer arithmetic.
        let rounded: Vec<u64> = dims.iter().map(|d| d.round() as u64).collect();
        let all_near = dims
            .iter()
            .zip(&rounded)
            .all(|(d, &r)| r >= 1 && (d - r as f64).abs() < INTEGRALITY_WINDOW);
        if all_near {
            let mut exact = true;
            'check: for x in 0..rank {
                for y in 0..rank {
                    let lhs = rounded[x] as u128 * rounded[y] as u128;
                    let rhs: u128 = (0..rank)
                        .map(|z| self.n(x, y, z) as u128 * rounded[z] as u128)
                        .sum();
                    if lhs != rhs {
                        exact = false;
                        break 'check;
                    }
                }
            }
            if exact {
                return Ok(DimVector {
                    dims: rounded.iter().map(|&r| r as f64).collect(),
                    exact: Some(rounded),
                });
            }
        }

        // Non-integral: the homomorphism identity must still hold within
        // relative tolerance.
        for x in 0..rank {
            for y in 0..rank {
                let lhs = dims[x] * dims[y];
                let rhs: f64 = (0..rank).map(|z| self.n(x, y, z) as f64 * dims[z]).sum();
                if (lhs - rhs).abs() > HOMOMORPHISM_TOLERANCE * lhs.abs().max(1.0) {
                    return Err(Error::Numerical(format!(
                        "dimension homomorphism fails at ({x}, {y}): {lhs} vs {rhs}"
                    )));
                }
            }
        }
        Ok(DimVector { dims, exact: None })
    }

    /// cd(𝒞) with multiplicities. Defined for integral rings only.
    pub fn category_type(&self) -> Result<CategoryType> {
        let dims = self.fp_dims()?;
        match dims.exact {
            Some(exact) => CategoryType::from_multiset(&exact),
            None => Err(Error::NonIntegral(
                "category type requires integral Frobenius-Perron dimensions".into(),
            )),
        }
    }

    /// Basis indices of the invertible elements: x with x ⊗ x* = 1.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&x| {
                let xd = self.dual[x];
                self.n(x, xd, self.unit) == 1
                    && (0..self.rank()).map(|z| self.n(x, xd, z)).sum::<u64>() == 1
            })
            .collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.invertibles().len() == self.rank()
    }

    /// G[X]: invertible elements s with s ⊗ X = X.
    pub fn stabilizer_group(&self, x: usize) -> Vec<usize> {
        self.invertibles()
            .into_iter()
            .filter(|&s| self.n(s, x, x) == 1)
            .collect()
    }

    /// Basis indices of the adjoint subring: the smallest subset containing
    /// the unit and every constituent of X ⊗ X*, closed under duality and
    /// tensor constituents.
    pub fn adjoint_support(&self) -> Vec<usize> {
        let rank = self.rank();
        let mut in_set = vec![false; rank];
        let mut queue = vec![self.unit];
        in_set[self.unit] = true;
        for x in 0..rank {
            let xd = self.dual[x];
            for z in 0..rank {
                if self.n(x, xd, z) > 0 && !in_set[z] {
                    in_set[z] = true;
                    queue.push(z);
                }
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let d = self.dual[a];
            if !in_set[d] {
                in_set[d] = true;
                queue.push(d);
            }
            for k in 0..queue.len() {
                let b = queue[k];
                for z in 0..rank {
                    if (self.n(a, b, z) > 0 || self.n(b, a, z) > 0) && !in_set[z] {
                        in_set[z] = true;
                        queue.push(z);
                    }
                }
            }
        }
        let mut out: Vec<usize> = (0..rank).filter(|&i| in_set[i]).collect();
        out.sort_unstable();
        out
    }

    /// The adjoint subring as a fusion ring of its own.
    pub fn adjoint_subring(&self) -> FusionRing {
        let support = self.adjoint_support();
        self.restrict_to(&support)
    }

    /// True if every constituent of every X ⊗ X* is invertible.
    pub fn adjoint_is_pointed(&self) -> bool {
        let support = self.adjoint_support();
        let inv: BTreeSet<usize> = self.invertibles().into_iter().collect();
        support.iter().all(|s| inv.contains(s))
    }

    /// Restriction to a tensor-closed support set (indices sorted).
    fn restrict_to(&self, support: &[usize]) -> FusionRing {
        let pos = |i: usize| support.iter().position(|&s| s == i).unwrap();
        let k = support.len();
        let mut table = vec![vec![vec![0u64; k]; k]; k];
        for (a, &ia) in support.iter().enumerate() {
            for (b, &ib) in support.iter().enumerate() {
                for (c, &ic) in support.iter().enumerate() {
                    table[a][b][c] = self.n(ia, ib, ic);
                }
            }
        }
        FusionRing {
            labels: support.iter().map(|&i| self.labels[i].clone()).collect(),
            unit: pos(self.unit),
            dual: support.iter().map(|&i| pos(self.dual[i])).collect(),
            table,
        }
    }

    /// Deligne product: basis pairs, multiplicative structure constants.
    pub fn deligne_product(&self, other: &FusionRing) -> FusionRing {
        let (r1, r2) = (self.rank(), other.rank());
        let rank = r1 * r2;
        let idx = |a: usize, b: usize| a * r2 + b;
        let mut table = vec![vec![vec![0u64; rank]; rank]; rank];
        for x1 in 0..r1 {
            for x2 in 0..r2 {
                for y1 in 0..r1 {
                    for y2 in 0..r2 {
                        for z1 in 0..r1 {
                            let n1 = self.n(x1, y1, z1);
                            if n1 == 0 {
                                continue;
                            }
                            for z2 in 0..r2 {
                                let n2 = other.n(x2, y2, z2);
                                if n2 != 0 {
                                    table[idx(x1, x2)][idx(y1, y2)][idx(z1, z2)] = n1 * n2;
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(rank);
        let mut dual = Vec::with_capacity(rank);
        for a in 0..r1 {
            for b in 0..r2 {
                labels.push(format!("{}*{}", self.labels[a], other.labels[b]));
                dual.push(idx(self.dual[a], other.dual[b]));
            }
        }
        FusionRing {
            labels,
            unit: idx(self.unit, other.unit),
            dual,
            table,
        }
    }
}

// ---- stock rings ---------------------------------------------------------

/// Trivial ring (one basis element).
pub fn trivial_ring() -> FusionRing {
    FusionRing {
        labels: vec!["1".into()],
        unit: 0,
        dual: vec![0],
        table: vec![vec![vec![1]]],
    }
}

/// Group ring of a finite group from its enumeration.
pub fn group_ring(group: &PermGroup) -> Result<FusionRing> {
    let elems = group.elements()?;
    let n = elems.elems.len();
    let mut table = vec![vec![vec![0u64; n]; n]; n];
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            table[x as usize][y as usize][elems.compose(x, y) as usize] = 1;
        }
    }
    Ok(FusionRing {
        labels: (0..n).map(|i| format!("g{i}")).collect(),
        unit: 0,
        dual: (0..n as u32).map(|i| elems.inverse_of(i) as usize).collect(),
        table,
    })
}

/// Fusion ring of Rep G, with structure constants from character inner
/// products.
pub fn rep_ring(group: &PermGroup) -> Result<FusionRing> {
    let table_data = group.character_table()?;
    let classes = group.conjugacy_classes()?;
    let order = group.order()? as f64;
    let r = table_data.degrees.len();
    let mut table = vec![vec![vec![0u64; r]; r]; r];
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                // ⟨χ_x χ_y, χ_z⟩
                let mut ip = num_complex::Complex64::new(0.0, 0.0);
                for c in 0..classes.class_count() {
                    ip += classes.sizes[c] as f64
                        * table_data.values[x][c]
                        * table_data.values[y][c]
                        * table_data.values[z][c].conj();
                }
                let value = ip.re / order;
                let rounded = value.round();
                if (value - rounded).abs() > 1e-6 || ip.im.abs() / order > 1e-6 || rounded < 0.0 {
                    return Err(Error::Numerical(format!(
                        "character product multiplicity {value} not a nonnegative integer"
                    )));
                }
                table[x][y][z] = rounded as u64;
            }
        }
    }
    let unit = (0..r)
        .find(|&x| table_data.degrees[x] == 1 && (0..r).all(|y| table[x][y][y] == 1))
        .ok_or_else(|| Error::Numerical("trivial character not found".into()))?;
    let mut dual = vec![usize::MAX; r];
    for (x, d) in dual.iter_mut().enumerate() {
        let candidates: Vec<usize> = (0..r).filter(|&y| table[x][y][unit] == 1).collect();
        if candidates.len() != 1 {
            return Err(Error::Numerical("conjugate character not unique".into()));
        }
        *d = candidates[0];
    }
    Ok(FusionRing {
        labels: (0..r)
            .map(|i| format!("chi{}[{}]", i, table_data.degrees[i]))
            .collect(),
        unit,
        dual,
        table,
    })
}

/// The Fibonacci ring: 1 and τ with τ ⊗ τ = 1 ⊕ τ.
pub fn fibonacci_ring() -> FusionRing {
    FusionRing {
        labels: vec!["1".into(), "tau".into()],
        unit: 0,
        dual: vec![0, 1],
        table: vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
        ],
    }
}

/// Tambara-Yamagami-type ring over an abelian group: the group elements
/// plus one extra object X with a ⊗ X = X ⊗ a = X and X ⊗ X = Σ_a a.
pub fn tambara_yamagami_ring(group: &PermGroup) -> Result<FusionRing> {
    if !group.is_abelian() {
        return Err(Error::InvalidParameter(
            "Tambara-Yamagami rings need an abelian pointed part".into(),
        ));
    }
    let elems = group.elements()?;
    let n = elems.elems.len();
    let rank = n + 1;
    let x = n; // index of the non-invertible object
    let mut table = vec![vec![vec![0u64; rank]; rank]; rank];
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            table[a as usize][b as usize][elems.compose(a, b) as usize] = 1;
        }
        table[a as usize][x][x] = 1;
        table[x][a as usize][x] = 1;
    }
    for a in 0..n {
        table[x][x][a] = 1;
    }
    let mut labels: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    labels.push("X".into());
    let mut dual: Vec<usize> = (0..n as u32).map(|i| elems.inverse_of(i) as usize).collect();
    dual.push(x);
    Ok(FusionRing {
        labels,
        unit: 0,
        dual,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{cyclic, dihedral, elementary_abelian, symmetric};

    #[test]
    fn z2_group_ring_validates() {
        let ring = group_ring(&cyclic(2).unwrap()).unwrap();
        assert!(ring.validate().is_valid());
        let dims = ring.fp_dims().unwrap();
        assert_eq!(dims.exact, Some(vec![1, 1]));
    }

    #[test]
    fn unit_law_violation_detected() {
        let mut ring = group_ring(&cyclic(2).unwrap()).unwrap();
        ring.table[0][1][1] = 2;
        let report = ring.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == "unit-law-left" && v.witness == vec![1, 1]));
    }

    #[test]
    fn fibonacci_validates_with_golden_ratio() {
        let ring = fibonacci_ring();
        assert!(ring.validate().is_valid());
        let dims = ring.fp_dims().unwrap();
        assert!(dims.exact.is_none());
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((dims.dims[1] - phi).abs() < 1e-9);
        // d² = d + 1 at the returned value
        let d = dims.dims[1];
        assert!((d * d - d - 1.0).abs() < 1e-9);
        assert!(ring.category_type().is_err());
    }

    #[test]
    fn rep_s3_dims_match_character_degrees() {
        let g = symmetric(3).unwrap();
        let ring = rep_ring(&g).unwrap();
        assert!(ring.validate().is_valid());
        let dims = ring.fp_dims().unwrap();
        let mut exact = dims.exact.unwrap();
        exact.sort_unstable();
        assert_eq!(exact, vec![1, 1, 2]);
        let ty = ring.category_type().unwrap();
        assert_eq!(ty.pairs(), &[(1, 2), (2, 1)]);
    }

    #[test]
    fn malformed_table_is_structural() {
        let spec = RingSpec {
            labels: None,
            unit: 0,
            dual: None,
            table: vec![vec![vec![1, 0], vec![0, 1]]],
        };
        assert!(matches!(
            FusionRing::from_spec(spec),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn dual_inference_from_unit_column() {
        let g = cyclic(3).unwrap();
        let full = group_ring(&g).unwrap();
        let spec = RingSpec {
            labels: None,
            unit: 0,
            dual: None,
            table: full.table.clone(),
        };
        let ring = FusionRing::from_spec(spec).unwrap();
        assert_eq!(ring.dual, full.dual);
    }

    #[test]
    fn invertibles_and_stabilizers() {
        let ring = group_ring(&cyclic(4).unwrap()).unwrap();
        assert_eq!(ring.invertibles().len(), 4);
        assert!(ring.is_pointed());

        let fib = fibonacci_ring();
        assert_eq!(fib.invertibles(), vec![0]);
        assert_eq!(fib.stabilizer_group(1), vec![0]);

        // Rep(D4): the 2-dimensional simple has stabilizer of order 4.
        let d4 = dihedral(4).unwrap();
        let ring = rep_ring(&d4).unwrap();
        let exact = ring.fp_dims().unwrap().exact.unwrap();
        let two_dim = (0..ring.rank()).find(|&i| exact[i] == 2).unwrap();
        assert_eq!(ring.stabilizer_group(two_dim).len(), 4);
        assert_eq!(ring.n(two_dim, ring.dual[two_dim], ring.unit), 1);
    }

    #[test]
    fn adjoint_subrings() {
        // Abelian group ring: adjoint is the unit alone.
        let ring = group_ring(&cyclic(6).unwrap()).unwrap();
        assert_eq!(ring.adjoint_support(), vec![0]);

        // Rep(S3): the adjoint subring is everything.
        let ring = rep_ring(&symmetric(3).unwrap()).unwrap();
        assert_eq!(ring.adjoint_support().len(), ring.rank());
        assert!(!ring.adjoint_is_pointed());

        // Tambara-Yamagami type: X ⊗ X* lands in the pointed part.
        let ring = tambara_yamagami_ring(&elementary_abelian(2, 2).unwrap()).unwrap();
        assert!(ring.validate().is_valid());
        assert!(ring.adjoint_is_pointed());
        assert_eq!(ring.adjoint_support(), vec![0, 1, 2, 3]);

        // Idempotence: the adjoint of the adjoint is contained in it.
        let adj = ring.adjoint_subring();
        assert!(adj.adjoint_support().len() <= adj.rank());
        assert!(adj.validate().is_valid());
    }

    #[test]
    fn deligne_products() {
        let s3 = rep_ring(&symmetric(3).unwrap()).unwrap();
        let prod = s3.deligne_product(&trivial_ring());
        assert!(prod.validate().is_valid());
        assert_eq!(prod.category_type().unwrap(), s3.category_type().unwrap());

        let square = s3.deligne_product(&s3);
        assert!(square.validate().is_valid());
        assert_eq!(
            square.category_type().unwrap().pairs(),
            &[(1, 4), (2, 4), (4, 1)]
        );
        // cd is multiplicative on Deligne products.
        let expected = s3
            .category_type()
            .unwrap()
            .product(&s3.category_type().unwrap());
        assert_eq!(square.category_type().unwrap(), expected);

        let fib2 = fibonacci_ring().deligne_product(&fibonacci_ring());
        assert!(fib2.validate().is_valid());
        let dims = fib2.fp_dims().unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut sorted: Vec<f64> = dims.dims.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in sorted.iter().zip([1.0, phi, phi, phi * phi]) {
            assert!((got - want).abs() < 1e-8);
        }
    }

    #[test]
    fn category_type_ordering_and_totals() {
        let ty = CategoryType::from_multiset(&[1, 2, 2, 1, 3]).unwrap();
        assert_eq!(ty.pairs(), &[(1, 2), (2, 2), (3, 1)]);
        assert_eq!(ty.total_dimension(), 2 + 8 + 9);
        assert_eq!(ty.dim_set(), vec![1, 2, 3]);
        assert!(CategoryType::from_multiset(&[0]).is_err());
    }

    #[test]
    fn ring_spec_json_round_trip() {
        let ring = rep_ring(&symmetric(3).unwrap()).unwrap();
        let json = serde_json::to_string(&ring.to_spec()).unwrap();
        assert!(json.contains("\"N\""));
        let back = FusionRing::from_spec(serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, ring);
    }
}
