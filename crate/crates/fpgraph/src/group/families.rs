//! Constructors for the standard group families used by the corpus, and the
//! JSON input spec for groups.

use serde::{Deserialize, Serialize};

use super::{num_gcd, Perm, PermGroup};
use crate::error::{Error, Result};

/// ℤ_n as the n-cycle.
pub fn cyclic(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic(0)".into()));
    }
    if n == 1 {
        return PermGroup::new(1, vec![]);
    }
    let cycle = Perm::from_cycles(n as usize, &[(0..n as u32).collect()])?;
    PermGroup::new(n as usize, vec![cycle])
}

/// Dihedral group of order 2n acting on the n-gon (n ≥ 1; n = 1 gives ℤ₂,
/// n = 2 the Klein four-group).
pub fn dihedral(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("dihedral(0)".into()));
    }
    if n == 1 {
        return cyclic(2);
    }
    let n_usize = n as usize;
    let rot = Perm::from_cycles(n_usize, &[(0..n as u32).collect()])?;
    let refl = Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    PermGroup::new(n_usize, vec![rot, refl])
}

/// Symmetric group on n points.
pub fn symmetric(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric(0)".into()));
    }
    if n == 1 {
        return PermGroup::new(1, vec![]);
    }
    let n_usize = n as usize;
    let cycle = Perm::from_cycles(n_usize, &[(0..n as u32).collect()])?;
    let swap = Perm::from_cycles(n_usize, &[vec![0, 1]])?;
    PermGroup::new(n_usize, vec![cycle, swap])
}

/// Alternating group on n points.
pub fn alternating(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("alternating(0)".into()));
    }
    if n <= 2 {
        return PermGroup::new(n as usize, vec![]);
    }
    let n_usize = n as usize;
    let three_cycle = Perm::from_cycles(n_usize, &[vec![0, 1, 2]])?;
    let long = if n % 2 == 1 {
        Perm::from_cycles(n_usize, &[(0..n as u32).collect()])?
    } else {
        Perm::from_cycles(n_usize, &[(1..n as u32).collect()])?
    };
    PermGroup::new(n_usize, vec![three_cycle, long])
}

/// ℤ_n ⋊ ℤ_m with the ℤ_m generator acting by x ↦ kx. Requires
/// gcd(k, n) = 1 and k^m ≡ 1 (mod n). The group acts faithfully on
/// n + m points: ℤ_n by translations-and-scalings on the first block, the
/// complement generator also cycling the second block.
pub fn semidirect_cyclic(n: u64, m: u64, k: u64) -> Result<PermGroup> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("semidirect_cyclic with n or m zero".into()));
    }
    let k = k % n;
    if num_gcd(k, n) != 1 {
        return Err(Error::InvalidParameter(format!(
            "action parameter k = {k} is not a unit mod {n}"
        )));
    }
    // k^m ≡ 1 (mod n)
    let mut pow = 1u64;
    for _ in 0..m {
        pow = pow * k % n;
    }
    if pow != 1 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} does not satisfy k^{m} ≡ 1 (mod {n})"
        )));
    }
    let degree = (n + m) as usize;
    let translate = Perm::from_images(
        (0..degree as u32)
            .map(|i| {
                if (i as u64) < n {
                    ((i as u64 + 1) % n) as u32
                } else {
                    i
                }
            })
            .collect(),
    )?;
    let act = Perm::from_images(
        (0..degree as u32)
            .map(|i| {
                if (i as u64) < n {
                    (i as u64 * k % n) as u32
                } else {
                    (n + ((i as u64 - n) + 1) % m) as u32
                }
            })
            .collect(),
    )?;
    PermGroup::new(degree, vec![translate, act])
}

/// Arithmetic in 𝔽_q for q = 2^e, e ≤ 3, as bit-polynomials. Only the
/// fields needed for the corpus are supported.
struct BinaryField {
    q: u32,
    reduction: u32,
    bits: u32,
}

impl BinaryField {
    fn new(q: u32) -> Result<Self> {
        let (bits, reduction) = match q {
            2 => (1, 0b10),
            4 => (2, 0b111),
            8 => (3, 0b1011),
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "psl2 supports q in {{2, 4, 8}}, got {q}"
                )))
            }
        };
        Ok(BinaryField { q, reduction, bits })
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        // Carry-less product, then reduction by the field polynomial.
        let mut prod = 0u32;
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 != 0 {
                prod ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        while prod >= self.q {
            let d = 31 - prod.leading_zeros();
            prod ^= self.reduction << (d - self.bits);
        }
        prod
    }

    fn inv(&self, a: u32) -> u32 {
        assert!(a != 0);
        // Small field: scan.
        for b in 1..self.q {
            if self.mul(a, b) == 1 {
                return b;
            }
        }
        unreachable!("field inverse");
    }
}

/// PSL(2, q) acting on the projective line (q + 1 points) for q = 2, 4, 8.
/// Point i < q is the affine point i; point q is ∞.
pub fn psl2(q: u32) -> Result<PermGroup> {
    let f = BinaryField::new(q)?;
    let degree = (q + 1) as usize;
    let infty = q;

    // x ↦ x + 1
    let unipotent = Perm::from_images(
        (0..=q).map(|x| if x == infty { infty } else { x ^ 1 }).collect(),
    )?;
    // x ↦ 1/x  (matrix [[0,1],[1,0]], determinant 1 in characteristic 2)
    let weyl = Perm::from_images(
        (0..=q)
            .map(|x| {
                if x == infty {
                    0
                } else if x == 0 {
                    infty
                } else {
                    f.inv(x)
                }
            })
            .collect(),
    )?;
    let mut gens = vec![unipotent, weyl];
    if q > 2 {
        // x ↦ g²x for a generator g of the multiplicative group.
        let g = 2u32; // x is a generator of F_q* for the fields above
        let g2 = f.mul(g, g);
        gens.push(Perm::from_images(
            (0..=q)
                .map(|x| if x == infty { infty } else { f.mul(g2, x) })
                .collect(),
        )?);
    }
    PermGroup::new(degree, gens)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(a.degree() as u32..degree as u32);
        gens.push(Perm::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (0..a.degree() as u32).collect();
        images.extend(g.images().iter().map(|&x| x + a.degree() as u32));
        gens.push(Perm::from_images(images)?);
    }
    PermGroup::new(degree, gens)
}

/// Elementary abelian ℤ_p^k.
pub fn elementary_abelian(p: u64, k: u32) -> Result<PermGroup> {
    let mut g = cyclic(p)?;
    for _ in 1..k {
        g = direct_product(&g, &cyclic(p)?)?;
    }
    Ok(g)
}

/// JSON-facing group description: either raw generators or a named family.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupSpec {
    Raw {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
    Family {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        q: Option<u32>,
    },
}

impl GroupSpec {
    pub fn family(name: &str, n: Option<u64>, m: Option<u64>, k: Option<u64>, q: Option<u32>) -> Self {
        GroupSpec::Family {
            family: name.to_string(),
            n,
            m,
            k,
            q,
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Raw { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|v| Perm::from_images(v.clone()))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(*degree, gens)
            }
            GroupSpec::Family { family, n, m, k, q } => {
                let need = |opt: &Option<u64>, name: &str| -> Result<u64> {
                    opt.ok_or_else(|| {
                        Error::InvalidParameter(format!(
                            "family '{family}' requires parameter '{name}'"
                        ))
                    })
                };
                match family.as_str() {
                    "cyclic" => cyclic(need(n, "n")?),
                    "dihedral" => dihedral(need(n, "n")?),
                    "symmetric" => symmetric(need(n, "n")?),
                    "alternating" => alternating(need(n, "n")?),
                    "semidirect-cyclic" => {
                        semidirect_cyclic(need(n, "n")?, need(m, "m")?, need(k, "k")?)
                    }
                    "elementary-abelian" => {
                        elementary_abelian(need(n, "n")?, need(m, "m")? as u32)
                    }
                    "psl2" => psl2(q.ok_or_else(|| {
                        Error::InvalidParameter("family 'psl2' requires parameter 'q'".into())
                    })?),
                    other => Err(Error::InvalidParameter(format!(
                        "unknown group family '{other}'"
                    ))),
                }
            }
        }
    }

    /// Stable identifier used in verdict records.
    pub fn id(&self) -> String {
        match self {
            GroupSpec::Raw { degree, generators } => {
                format!("raw-deg{degree}-gens{}", generators.len())
            }
            GroupSpec::Family { family, n, m, k, q } => {
                let mut s = family.clone();
                for (tag, v) in [("n", n), ("m", m), ("k", k)] {
                    if let Some(v) = v {
                        s.push_str(&format!("-{tag}{v}"));
                    }
                }
                if let Some(q) = q {
                    s.push_str(&format!("-q{q}"));
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(5).unwrap().order().unwrap(), 5);
        assert_eq!(dihedral(8).unwrap().order().unwrap(), 16);
        assert_eq!(symmetric(5).unwrap().order().unwrap(), 120);
        assert_eq!(alternating(4).unwrap().order().unwrap(), 12);
        assert_eq!(alternating(6).unwrap().order().unwrap(), 360);
        assert_eq!(elementary_abelian(2, 3).unwrap().order().unwrap(), 8);
    }

    #[test]
    fn semidirect_requires_valid_action() {
        assert!(semidirect_cyclic(341, 10, 3).is_err()); // 3^10 ≢ 1 (mod 341)
        assert!(semidirect_cyclic(9, 2, 3).is_err()); // not a unit
        let g = semidirect_cyclic(341, 10, 244).unwrap();
        assert_eq!(g.order().unwrap(), 3410);
        let h = semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(h.order().unwrap(), 21);
    }

    #[test]
    fn psl2_field_sizes() {
        assert_eq!(psl2(2).unwrap().order().unwrap(), 6);
        assert_eq!(psl2(4).unwrap().order().unwrap(), 60);
        assert_eq!(psl2(8).unwrap().order().unwrap(), 504);
        assert!(psl2(3).is_err());
    }

    #[test]
    fn direct_product_order() {
        let a = cyclic(2).unwrap();
        let b = cyclic(9).unwrap();
        let p = direct_product(&a, &b).unwrap();
        assert_eq!(p.order().unwrap(), 18);
        assert!(p.is_abelian());
    }

    #[test]
    fn group_spec_round_trip() {
        let spec = GroupSpec::family("semidirect-cyclic", Some(341), Some(10), Some(244), None);
        let json = serde_json::to_string(&spec).unwrap();
        let back: GroupSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        assert_eq!(back.build().unwrap().order().unwrap(), 3410);

        let raw: GroupSpec =
            serde_json::from_str(r#"{"degree": 3, "generators": [[1, 2, 0]]}"#).unwrap();
        assert_eq!(raw.build().unwrap().order().unwrap(), 3);
    }
}
