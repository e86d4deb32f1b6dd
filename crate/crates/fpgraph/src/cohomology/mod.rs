//! Group cohomology with root-of-unity coefficients, encoded additively.
//!
//! A cocycle value `t ∈ ℤ/m` stands for the root of unity `exp(2πi t/m)`.
//! Coefficients of the underlying theory are the full divisible group k* ≅
//! ℚ/ℤ (up to torsion-free parts that finite groups cannot see), so
//! coboundary witnesses may need a finer modulus than the table itself; the
//! solver in [`snf`] accounts for that exactly.

pub mod projective;
mod snf;

pub use projective::{projective_degrees, ProjectiveDegrees, ProjectiveOptions};
pub use snf::CochainWitness;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;

/// 2-cocycle table on a group, with values in ℤ/m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    pub modulus: u64,
    /// table[g][h], indexed by enumeration indices.
    pub table: Vec<Vec<u64>>,
}

/// 3-cocycle table on a group, with values in ℤ/m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle3 {
    pub modulus: u64,
    pub table: Vec<Vec<Vec<u64>>>,
}

/// Sparse JSON form `{"modulus": m, "table": {"g,h": t, ...}}` with group
/// element indices as keys; missing entries are zero. 3-cocycles use
/// triple keys.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocycleSpec {
    pub modulus: u64,
    #[serde(default)]
    pub table: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleViolation {
    pub rule: String,
    pub witness: Vec<usize>,
}

fn parse_key(key: &str, arity: usize, order: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != arity {
        return Err(Error::Parse(format!(
            "cocycle key '{key}' must have {arity} indices"
        )));
    }
    parts
        .iter()
        .map(|p| {
            let i: usize = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index '{p}' in cocycle key")))?;
            if i >= order {
                return Err(Error::Parse(format!(
                    "cocycle key index {i} out of range for group of order {order}"
                )));
            }
            Ok(i)
        })
        .collect()
}

impl Cocycle2 {
    pub fn zero(order: usize, modulus: u64) -> Self {
        Cocycle2 {
            modulus,
            table: vec![vec![0; order]; order],
        }
    }

    pub fn from_spec(spec: &CocycleSpec, order: usize) -> Result<Self> {
        if spec.modulus == 0 {
            return Err(Error::Parse("cocycle modulus must be positive".into()));
        }
        let mut c = Cocycle2::zero(order, spec.modulus);
        for (key, &value) in &spec.table {
            let idx = parse_key(key, 2, order)?;
            c.table[idx[0]][idx[1]] = value % spec.modulus;
        }
        Ok(c)
    }

    pub fn to_spec(&self) -> CocycleSpec {
        let mut table = BTreeMap::new();
        for (g, row) in self.table.iter().enumerate() {
            for (h, &v) in row.iter().enumerate() {
                if v != 0 {
                    table.insert(format!("{g},{h}"), v);
                }
            }
        }
        CocycleSpec {
            modulus: self.modulus,
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    #[inline]
    pub fn value(&self, g: u32, h: u32) -> u64 {
        self.table[g as usize][h as usize]
    }

    /// k·t, entrywise mod m (the k-th power of the cocycle).
    pub fn scale(&self, k: u64) -> Cocycle2 {
        let m = self.modulus;
        Cocycle2 {
            modulus: m,
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&v| v as u128 * k as u128 % m as u128).map(|v| v as u64).collect())
                .collect(),
        }
    }

    /// Rescales values into ℤ/M for a multiple M of the modulus.
    pub fn to_modulus(&self, m: u64) -> Result<Cocycle2> {
        if m % self.modulus != 0 {
            return Err(Error::InvalidParameter(
                "target modulus must be a multiple".into(),
            ));
        }
        let f = m / self.modulus;
        Ok(Cocycle2 {
            modulus: m,
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&v| v * f).collect())
                .collect(),
        })
    }

    /// Pointwise product of cocycles (sum of the additive tables), after
    /// lifting both to the lcm modulus.
    pub fn product(&self, other: &Cocycle2) -> Result<Cocycle2> {
        let m = lcm(self.modulus, other.modulus);
        let a = self.to_modulus(m)?;
        let b = other.to_modulus(m)?;
        Ok(Cocycle2 {
            modulus: m,
            table: a
                .table
                .iter()
                .zip(&b.table)
                .map(|(ra, rb)| ra.iter().zip(rb).map(|(&x, &y)| (x + y) % m).collect())
                .collect(),
        })
    }

    /// Pointwise order of the table in (ℤ/m)^{G×G}: the smallest k with
    /// k·t ≡ 0. The cohomology class order divides it.
    pub fn table_order(&self) -> u64 {
        let m = self.modulus;
        self.table
            .iter()
            .flatten()
            .fold(1u64, |acc, &v| lcm(acc, m / gcd(m, v)))
    }

    /// Checks normalization and the 2-cocycle identity
    /// t(g,h) + t(gh,l) = t(h,l) + t(g,hl) exhaustively.
    pub fn validate(&self, group: &PermGroup) -> Result<Vec<CocycleViolation>> {
        let elems = group.elements()?;
        let n = elems.elems.len();
        if self.order() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(Error::Structural(format!(
                "cocycle table size {} does not match group order {n}",
                self.order()
            )));
        }
        let m = self.modulus;
        let mut violations = Vec::new();
        for g in 0..n {
            if self.table[g][0] != 0 || self.table[0][g] != 0 {
                violations.push(CocycleViolation {
                    rule: "normalization".into(),
                    witness: vec![g],
                });
            }
        }
        for g in 0..n as u32 {
            for h in 0..n as u32 {
                let gh = elems.compose(g, h);
                for l in 0..n as u32 {
                    let hl = elems.compose(h, l);
                    let lhs = (self.value(g, h) + self.value(gh, l)) % m;
                    let rhs = (self.value(h, l) + self.value(g, hl)) % m;
                    if lhs != rhs {
                        violations.push(CocycleViolation {
                            rule: "cocycle-identity".into(),
                            witness: vec![g as usize, h as usize, l as usize],
                        });
                        if violations.len() > 200 {
                            return Ok(violations);
                        }
                    }
                }
            }
        }
        Ok(violations)
    }

    /// Whether the cocycle bounds over k* (≅ ℚ/ℤ): solves
    /// f(g) + f(h) - f(gh) ≡ t(g,h) by Smith-form linear algebra, allowing
    /// the witness modulus to refine the table's.
    pub fn coboundary_witness(&self, group: &PermGroup) -> Result<Option<CochainWitness>> {
        let elems = group.elements()?;
        let n = elems.elems.len();
        if self.is_zero() {
            return Ok(Some(CochainWitness {
                modulus: self.modulus,
                values: vec![0; n],
            }));
        }
        let mut a = Vec::with_capacity(n * n);
        let mut b = Vec::with_capacity(n * n);
        for g in 0..n as u32 {
            for h in 0..n as u32 {
                let mut row = vec![0i128; n];
                row[g as usize] += 1;
                row[h as usize] += 1;
                row[elems.compose(g, h) as usize] -= 1;
                a.push(row);
                b.push(self.value(g, h) as i128);
            }
        }
        snf::solve_over_circle(a, b, self.modulus)
    }

    pub fn is_coboundary(&self, group: &PermGroup) -> Result<bool> {
        Ok(self.coboundary_witness(group)?.is_some())
    }

    /// Order of the cohomology class in H²(G, k*): the smallest k ≥ 1 with
    /// k·t a coboundary. Searches the divisors of the pointwise order.
    pub fn class_order(&self, group: &PermGroup) -> Result<u64> {
        let t_order = self.table_order();
        let mut divisors: Vec<u64> = (1..=t_order).filter(|d| t_order % d == 0).collect();
        divisors.sort_unstable();
        for k in divisors {
            if self.scale(k).is_coboundary(group)? {
                return Ok(k);
            }
        }
        unreachable!("table order always bounds the class order");
    }

    /// The p-part: the power t^e with e ≡ 1 mod the p-part of the order and
    /// e ≡ 0 mod the rest, so the class splits as Π_p (p-part).
    pub fn p_part(&self, p: u64) -> Cocycle2 {
        self.scale(p_part_exponent(self.table_order(), p))
    }
}

impl Cocycle3 {
    pub fn zero(order: usize, modulus: u64) -> Self {
        Cocycle3 {
            modulus,
            table: vec![vec![vec![0; order]; order]; order],
        }
    }

    pub fn from_spec(spec: &CocycleSpec, order: usize) -> Result<Self> {
        if spec.modulus == 0 {
            return Err(Error::Parse("cocycle modulus must be positive".into()));
        }
        let mut c = Cocycle3::zero(order, spec.modulus);
        for (key, &value) in &spec.table {
            let idx = parse_key(key, 3, order)?;
            c.table[idx[0]][idx[1]][idx[2]] = value % spec.modulus;
        }
        Ok(c)
    }

    pub fn to_spec(&self) -> CocycleSpec {
        let mut table = BTreeMap::new();
        for (g, plane) in self.table.iter().enumerate() {
            for (h, row) in plane.iter().enumerate() {
                for (l, &v) in row.iter().enumerate() {
                    if v != 0 {
                        table.insert(format!("{g},{h},{l}"), v);
                    }
                }
            }
        }
        CocycleSpec {
            modulus: self.modulus,
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table
            .iter()
            .all(|p| p.iter().all(|r| r.iter().all(|&v| v == 0)))
    }

    #[inline]
    pub fn value(&self, g: u32, h: u32, l: u32) -> u64 {
        self.table[g as usize][h as usize][l as usize]
    }

    pub fn scale(&self, k: u64) -> Cocycle3 {
        let m = self.modulus;
        Cocycle3 {
            modulus: m,
            table: self
                .table
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|r| {
                            r.iter()
                                .map(|&v| (v as u128 * k as u128 % m as u128) as u64)
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_modulus(&self, m: u64) -> Result<Cocycle3> {
        if m % self.modulus != 0 {
            return Err(Error::InvalidParameter(
                "target modulus must be a multiple".into(),
            ));
        }
        let f = m / self.modulus;
        Ok(Cocycle3 {
            modulus: m,
            table: self
                .table
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|r| r.iter().map(|&v| v * f).collect())
                        .collect()
                })
                .collect(),
        })
    }

    pub fn product(&self, other: &Cocycle3) -> Result<Cocycle3> {
        let m = lcm(self.modulus, other.modulus);
        let a = self.to_modulus(m)?;
        let b = other.to_modulus(m)?;
        let mut out = a.clone();
        for (pa, pb) in out.table.iter_mut().zip(&b.table) {
            for (ra, rb) in pa.iter_mut().zip(pb) {
                for (va, vb) in ra.iter_mut().zip(rb) {
                    *va = (*va + vb) % m;
                }
            }
        }
        Ok(out)
    }

    pub fn table_order(&self) -> u64 {
        let m = self.modulus;
        self.table
            .iter()
            .flatten()
            .flatten()
            .fold(1u64, |acc, &v| lcm(acc, m / gcd(m, v)))
    }

    /// Normalization plus the 3-cocycle identity
    /// w(h,k,l) + w(g,hk,l) + w(g,h,k) = w(gh,k,l) + w(g,h,kl).
    pub fn validate(&self, group: &PermGroup) -> Result<Vec<CocycleViolation>> {
        let elems = group.elements()?;
        let n = elems.elems.len();
        if self.order() != n {
            return Err(Error::Structural(format!(
                "cocycle table size {} does not match group order {n}",
                self.order()
            )));
        }
        let m = self.modulus;
        let mut violations = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if self.table[0][g][h] != 0
                    || self.table[g][0][h] != 0
                    || self.table[g][h][0] != 0
                {
                    violations.push(CocycleViolation {
                        rule: "normalization".into(),
                        witness: vec![g, h],
                    });
                }
            }
        }
        for g in 0..n as u32 {
            for h in 0..n as u32 {
                let gh = elems.compose(g, h);
                for k in 0..n as u32 {
                    let hk = elems.compose(h, k);
                    for l in 0..n as u32 {
                        let kl = elems.compose(k, l);
                        let lhs =
                            (self.value(h, k, l) + self.value(g, hk, l) + self.value(g, h, k)) % m;
                        let rhs = (self.value(gh, k, l) + self.value(g, h, kl)) % m;
                        if lhs != rhs {
                            violations.push(CocycleViolation {
                                rule: "cocycle-identity".into(),
                                witness: vec![g as usize, h as usize, k as usize, l as usize],
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

    /// 3-coboundary test over k*: solves
    /// τ(h,l) - τ(gh,l) + τ(g,hl) - τ(g,h) ≡ w(g,h,l).
    pub fn coboundary_witness(&self, group: &PermGroup) -> Result<Option<CochainWitness>> {
        let elems = group.elements()?;
        let n = elems.elems.len();
        if self.is_zero() {
            return Ok(Some(CochainWitness {
                modulus: self.modulus,
                values: vec![0; n * n],
            }));
        }
        let idx = |g: u32, h: u32| (g as usize) * n + h as usize;
        let mut a = Vec::with_capacity(n * n * n);
        let mut b = Vec::with_capacity(n * n * n);
        for g in 0..n as u32 {
            for h in 0..n as u32 {
                let gh = elems.compose(g, h);
                for l in 0..n as u32 {
                    let hl = elems.compose(h, l);
                    let mut row = vec![0i128; n * n];
                    row[idx(h, l)] += 1;
                    row[idx(gh, l)] -= 1;
                    row[idx(g, hl)] += 1;
                    row[idx(g, h)] -= 1;
                    a.push(row);
                    b.push(self.value(g, h, l) as i128);
                }
            }
        }
        snf::solve_over_circle(a, b, self.modulus)
    }

    pub fn is_coboundary(&self, group: &PermGroup) -> Result<bool> {
        Ok(self.coboundary_witness(group)?.is_some())
    }

    pub fn class_order(&self, group: &PermGroup) -> Result<u64> {
        let t_order = self.table_order();
        let mut divisors: Vec<u64> = (1..=t_order).filter(|d| t_order % d == 0).collect();
        divisors.sort_unstable();
        for k in divisors {
            if self.scale(k).is_coboundary(group)? {
                return Ok(k);
            }
        }
        unreachable!("table order always bounds the class order");
    }

    /// p-part by a CRT exponent on the pointwise table order. The table
    /// order is a multiple of the class order with the same role in the
    /// congruences, so the resulting class is exactly the p-part; this
    /// avoids the large 3-coboundary solves a class-order computation
    /// would need.
    pub fn p_part(&self, p: u64) -> Cocycle3 {
        self.scale(p_part_exponent(self.table_order(), p))
    }
}

/// e with e ≡ 1 (mod p-part of n) and e ≡ 0 (mod the rest of n).
fn p_part_exponent(n: u64, p: u64) -> u64 {
    let mut pk = 1u64;
    let mut rest = n;
    while rest % p == 0 {
        pk *= p;
        rest /= p;
    }
    if pk == 1 {
        return 0; // no p-part: the trivial power
    }
    if rest == 1 {
        return 1;
    }
    // CRT: e = rest · (rest⁻¹ mod pk)
    let inv = mod_inverse(rest % pk, pk);
    rest * inv % (pk * rest)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 by construction
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

// ---- stock cocycles -------------------------------------------------------

/// Residue of each element of a cyclic group built by [`crate::group::families::cyclic`]:
/// the image of point 0.
pub fn cyclic_residues(group: &PermGroup) -> Result<Vec<u64>> {
    let elems = group.elements()?;
    Ok(elems.elems.iter().map(|p| p.apply(0) as u64).collect())
}

/// The standard generator-family of H³ of a cyclic group: the carry
/// cocycle w_k(a,b,c) = k·a·⌊(b+c)/n⌋ on ℤ_n, with values in ℤ/n.
pub fn cyclic_carry_cocycle(group: &PermGroup, k: u64) -> Result<Cocycle3> {
    let res = cyclic_residues(group)?;
    let n = res.len() as u64;
    let mut c = Cocycle3::zero(res.len(), n);
    for (a, &ra) in res.iter().enumerate() {
        for (b, &rb) in res.iter().enumerate() {
            for (l, &rl) in res.iter().enumerate() {
                let carry = (rb + rl) / n;
                c.table[a][b][l] = ra * carry % n * k % n;
            }
        }
    }
    Ok(c)
}

/// Inflation of a cocycle along a surjection given as an index map
/// (certified to be a homomorphism of the enumerations).
pub fn inflate3(
    group: &PermGroup,
    quotient: &PermGroup,
    map: &[u32],
    omega: &Cocycle3,
) -> Result<Cocycle3> {
    let elems = group.elements()?;
    let n = elems.elems.len();
    let q_elems = quotient.elements()?;
    if map.len() != n || omega.order() != q_elems.elems.len() {
        return Err(Error::Structural("inflation shape mismatch".into()));
    }
    for g in 0..n as u32 {
        for h in 0..n as u32 {
            if map[elems.compose(g, h) as usize]
                != q_elems.compose(map[g as usize], map[h as usize])
            {
                return Err(Error::Validation(
                    "index map is not a homomorphism".into(),
                ));
            }
        }
    }
    let mut c = Cocycle3::zero(n, omega.modulus);
    for g in 0..n {
        for h in 0..n {
            for l in 0..n {
                c.table[g][h][l] = omega.table[map[g] as usize][map[h] as usize][map[l] as usize];
            }
        }
    }
    Ok(c)
}

/// Index map onto one factor of a direct product built by
/// [`crate::group::families::direct_product`].
pub fn factor_projection(
    product: &PermGroup,
    factor: &PermGroup,
    offset: usize,
) -> Result<Vec<u32>> {
    let elems = product.elements()?;
    let f_elems = factor.elements()?;
    let deg = factor.degree();
    elems
        .elems
        .iter()
        .map(|p| {
            let images: Vec<u32> = (offset..offset + deg)
                .map(|x| p.apply(x as u32) - offset as u32)
                .collect();
            let perm = crate::group::Perm::from_images(images)?;
            f_elems
                .index_of(&perm)
                .ok_or_else(|| Error::Structural("projection left the factor".into()))
        })
        .collect()
}

/// Coordinates of elementary-abelian ℤ_p^k group elements: the residue on
/// each cyclic block.
pub fn elementary_coordinates(group: &PermGroup, p: u64, k: u32) -> Result<Vec<Vec<u64>>> {
    let elems = group.elements()?;
    if group.degree() != (p as usize) * k as usize {
        return Err(Error::Structural("unexpected degree for ℤ_p^k".into()));
    }
    Ok(elems
        .elems
        .iter()
        .map(|perm| {
            (0..k)
                .map(|i| {
                    let base = (i as u64 * p) as u32;
                    (perm.apply(base) - base) as u64
                })
                .collect()
        })
        .collect())
}

/// The trilinear 3-cocycle on ℤ₂³: w(a,b,c) = a₁ b₂ c₃ (mod 2). Its class
/// is the one whose twisted double is noncommutative.
pub fn trilinear_cocycle_z2_cubed(group: &PermGroup) -> Result<Cocycle3> {
    let coords = elementary_coordinates(group, 2, 3)?;
    let n = coords.len();
    let mut c = Cocycle3::zero(n, 2);
    for a in 0..n {
        for b in 0..n {
            for l in 0..n {
                c.table[a][b][l] = coords[a][0] * coords[b][1] * coords[l][2] % 2;
            }
        }
    }
    Ok(c)
}

/// The standard nontrivial 2-cocycle on ℤ₂×ℤ₂:
/// t((a₁,a₂),(b₁,b₂)) = a₂ b₁ (mod 2).
pub fn heisenberg_cocycle_z2_squared(group: &PermGroup) -> Result<Cocycle2> {
    let coords = elementary_coordinates(group, 2, 2)?;
    let n = coords.len();
    let mut c = Cocycle2::zero(n, 2);
    for a in 0..n {
        for b in 0..n {
            c.table[a][b] = coords[a][1] * coords[b][0] % 2;
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{cyclic, direct_product, elementary_abelian};
    use rand::{Rng, SeedableRng};

    #[test]
    fn zero_tables_are_valid_cocycles() {
        let g = cyclic(4).unwrap();
        let c2 = Cocycle2::zero(4, 8);
        assert!(c2.validate(&g).unwrap().is_empty());
        let c3 = Cocycle3::zero(4, 8);
        assert!(c3.validate(&g).unwrap().is_empty());
    }

    #[test]
    fn random_tables_usually_violate() {
        let g = cyclic(6).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut c = Cocycle2::zero(6, 12);
        for row in c.table.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.gen_range(0..12);
            }
        }
        assert!(!c.validate(&g).unwrap().is_empty());
    }

    #[test]
    fn heisenberg_cocycle_is_valid_and_nontrivial() {
        let g = elementary_abelian(2, 2).unwrap();
        let c = heisenberg_cocycle_z2_squared(&g).unwrap();
        assert!(c.validate(&g).unwrap().is_empty());
        assert!(!c.is_coboundary(&g).unwrap());
        assert_eq!(c.class_order(&g).unwrap(), 2);
    }

    #[test]
    fn coboundaries_round_trip_with_witness() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        let elems = g.elements().unwrap();
        let n = elems.elems.len();
        let m = 12u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let mut f: Vec<u64> = (0..n).map(|_| rng.gen_range(0..m)).collect();
            f[0] = 0;
            let mut c = Cocycle2::zero(n, m);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    let ab = elems.compose(a, b);
                    c.table[a as usize][b as usize] =
                        (f[a as usize] + f[b as usize] + m - f[ab as usize]) % m;
                }
            }
            assert!(c.validate(&g).unwrap().is_empty());
            let witness = c.coboundary_witness(&g).unwrap().expect("df is trivial");
            // d(witness) must equal the lifted table.
            let lift = witness.modulus / m;
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    let ab = elems.compose(a, b);
                    let d = (witness.values[a as usize] + witness.values[b as usize]
                        + witness.modulus
                        - witness.values[ab as usize])
                        % witness.modulus;
                    assert_eq!(d, c.table[a as usize][b as usize] * lift % witness.modulus);
                }
            }
        }
    }

    #[test]
    fn schur_trivial_groups_bound_everything() {
        // H²(ℤ_n, k*) = 1: the θ-style cocycle with t(g,g) = m/2 on ℤ₂ is
        // a coboundary over k* even though no mod-2 witness exists.
        let g = cyclic(2).unwrap();
        let mut c = Cocycle2::zero(2, 2);
        c.table[1][1] = 1;
        assert!(c.validate(&g).unwrap().is_empty());
        let w = c.coboundary_witness(&g).unwrap().expect("H² of ℤ₂ is trivial");
        assert_eq!(w.modulus % 4, 0);
    }

    #[test]
    fn carry_cocycle_validates_and_has_full_order() {
        for n in [2u64, 3, 4, 6] {
            let g = cyclic(n).unwrap();
            let c = cyclic_carry_cocycle(&g, 1).unwrap();
            assert!(c.validate(&g).unwrap().is_empty());
            assert_eq!(c.class_order(&g).unwrap(), n, "order of the generator on ℤ_{n}");
        }
        // Scaled generator: order n / gcd(n, k).
        let g = cyclic(6).unwrap();
        let c = cyclic_carry_cocycle(&g, 2).unwrap();
        assert_eq!(c.class_order(&g).unwrap(), 3);
    }

    #[test]
    fn p_parts_split_the_class() {
        let g = cyclic(6).unwrap();
        let c = cyclic_carry_cocycle(&g, 1).unwrap();
        assert_eq!(c.class_order(&g).unwrap(), 6);
        let c2 = c.p_part(2);
        let c3 = c.p_part(3);
        assert_eq!(c2.class_order(&g).unwrap(), 2);
        assert_eq!(c3.class_order(&g).unwrap(), 3);
        assert_eq!(c.p_part(5).class_order(&g).unwrap(), 1);
        // The parts recompose the class: c ≡ c₂ + c₃ up to coboundary.
        let recomposed = c2.product(&c3).unwrap();
        let m = lcm(recomposed.modulus, c.modulus);
        let diff = recomposed
            .to_modulus(m)
            .unwrap()
            .product(&c.to_modulus(m).unwrap().scale(m - 1))
            .unwrap();
        assert!(diff.is_coboundary(&g).unwrap());
    }

    #[test]
    fn trilinear_cocycle_on_z2_cubed() {
        let g = elementary_abelian(2, 3).unwrap();
        let c = trilinear_cocycle_z2_cubed(&g).unwrap();
        assert!(c.validate(&g).unwrap().is_empty());
        assert!(!c.is_coboundary(&g).unwrap());
    }

    #[test]
    fn inflation_along_product_projection() {
        let z2 = cyclic(2).unwrap();
        let z6 = direct_product(&z2, &cyclic(3).unwrap()).unwrap();
        let proj = factor_projection(&z6, &z2, 0).unwrap();
        let base = cyclic_carry_cocycle(&z2, 1).unwrap();
        let inflated = inflate3(&z6, &z2, &proj, &base).unwrap();
        assert!(inflated.validate(&z6).unwrap().is_empty());
        // Restriction along the section recovers the class: order 2.
        assert_eq!(inflated.class_order(&z6).unwrap(), 2);
    }

    #[test]
    fn cocycle_spec_round_trip() {
        let g = elementary_abelian(2, 2).unwrap();
        let c = heisenberg_cocycle_z2_squared(&g).unwrap();
        let spec = c.to_spec();
        let json = serde_json::to_string(&spec).unwrap();
        let back: CocycleSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(Cocycle2::from_spec(&back, 4).unwrap(), c);
    }
}
