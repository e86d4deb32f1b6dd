//! Degrees of irreducible projective representations for an explicit
//! 2-cocycle, by the twisted-group-algebra spectral method: the regular
//! matrix of a random Hermitian central element supported on the α-regular
//! class sums has eigenvalue multiplicities d_i², one cluster per α-regular
//! class. All certifications (Σ d_i² = |G|, block count) are exact; the
//! eigensolver's tolerance only affects retry behavior.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Cocycle2;
use crate::error::{Error, Result};
use crate::group::PermGroup;

#[derive(Debug, Clone, Copy)]
pub struct ProjectiveOptions {
    pub seed: u64,
    /// Largest group order handled by the dense eigensolver; beyond it the
    /// exact fallbacks (ordinary character degrees for a zero table, the
    /// uniform-degree formula for abelian groups) take over.
    pub spectral_cap: u64,
    /// Relative eigenvalue-gap tolerance for clustering.
    pub cluster_tol: f64,
    pub retries: u32,
}

impl Default for ProjectiveOptions {
    fn default() -> Self {
        ProjectiveOptions {
            seed: 0x5eed,
            spectral_cap: 256,
            cluster_tol: 1e-6,
            retries: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveDegrees {
    /// Sorted degree multiset; one entry per α-regular class.
    pub degrees: Vec<u64>,
    pub regular_class_count: usize,
}

impl ProjectiveDegrees {
    pub fn degree_square_sum(&self) -> u64 {
        self.degrees.iter().map(|d| d * d).sum()
    }
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    for c in r.saturating_sub(1)..=r + 1 {
        if c * c == n {
            return Some(c);
        }
    }
    None
}

/// α-regular class ids: classes whose representative g satisfies
/// α(g, h) = α(h, g) for every h in its centralizer.
pub fn regular_classes(group: &PermGroup, alpha: &Cocycle2) -> Result<Vec<usize>> {
    let elems = group.elements()?;
    let classes = group.conjugacy_classes()?;
    let n = elems.elems.len();
    if alpha.order() != n {
        return Err(Error::Structural(
            "cocycle table does not match group order".into(),
        ));
    }
    if alpha.is_zero() {
        return Ok((0..classes.class_count()).collect());
    }
    let mut out = Vec::new();
    for (id, &rep) in classes.reps.iter().enumerate() {
        let mut regular = true;
        for h in 0..n as u32 {
            if elems.compose(h, rep) == elems.compose(rep, h)
                && alpha.value(rep, h) != alpha.value(h, rep)
            {
                regular = false;
                break;
            }
        }
        if regular {
            out.push(id);
        }
    }
    Ok(out)
}

pub fn projective_degrees(
    group: &PermGroup,
    alpha: &Cocycle2,
    opts: &ProjectiveOptions,
) -> Result<ProjectiveDegrees> {
    let elems = group.elements()?;
    let order = elems.order();
    if !alpha.is_zero() {
        let violations = alpha.validate(group)?;
        if !violations.is_empty() {
            return Err(Error::Validation(format!(
                "not a normalized 2-cocycle: {} violations, first {:?}",
                violations.len(),
                violations[0]
            )));
        }
    }
    let regular = regular_classes(group, alpha)?;

    if order <= opts.spectral_cap {
        return spectral_degrees(group, alpha, &regular, opts);
    }
    if alpha.is_zero() {
        // Ordinary character degrees; every class is regular here.
        let table = group.character_table()?;
        let degrees = table.degree_multiset();
        let result = ProjectiveDegrees {
            regular_class_count: regular.len(),
            degrees,
        };
        certify(&result, order)?;
        return Ok(result);
    }
    if group.is_abelian() {
        // All twisted irreducibles of an abelian group share one degree.
        let r = regular.len() as u64;
        let d = isqrt_exact(order / r).filter(|d| d * d * r == order).ok_or_else(|| {
            Error::Numerical(format!(
                "|G|/r = {order}/{r} is not a perfect square"
            ))
        })?;
        let result = ProjectiveDegrees {
            degrees: vec![d; r as usize],
            regular_class_count: r as usize,
        };
        certify(&result, order)?;
        return Ok(result);
    }
    Err(Error::ResourceCap {
        what: "projective degrees (nonabelian, twisted, dense solver)",
        value: order,
        cap: opts.spectral_cap,
    })
}

fn certify(result: &ProjectiveDegrees, order: u64) -> Result<()> {
    if result.degree_square_sum() != order {
        return Err(Error::Numerical(format!(
            "Σ d² = {} but |G| = {order}",
            result.degree_square_sum()
        )));
    }
    if result.degrees.len() != result.regular_class_count {
        return Err(Error::Numerical(
            "irreducible count does not match regular class count".into(),
        ));
    }
    Ok(())
}

fn spectral_degrees(
    group: &PermGroup,
    alpha: &Cocycle2,
    regular: &[usize],
    opts: &ProjectiveOptions,
) -> Result<ProjectiveDegrees> {
    let elems = group.elements()?;
    let classes = group.conjugacy_classes()?;
    let n = elems.elems.len() as usize;
    let m = alpha.modulus;

    // The support must be closed under inverses for the Hermitization.
    for &id in regular {
        if !regular.contains(&(classes.inverse_class[id] as usize)) {
            return Err(Error::Numerical(
                "regular classes not closed under inverses".into(),
            ));
        }
    }

    // Conjugation phases over each regular class: u_s u_x u_s⁻¹ =
    // κ_s(x) u_{sxs⁻¹} with κ_s(x) = t(s,x) + t(sx,s⁻¹) − t(s,s⁻¹).
    // Per α-regular class the phase is path-independent; that is checked,
    // not assumed.
    let gen_idx: Vec<u32> = group
        .generators()
        .iter()
        .map(|g| elems.index_of(g).unwrap())
        .collect();
    let mut class_phase: Vec<Option<u64>> = vec![None; n];
    for &id in regular {
        let rep = classes.reps[id];
        class_phase[rep as usize] = Some(0);
        let mut queue = vec![rep];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let phi = class_phase[x as usize].unwrap();
            for &s in &gen_idx {
                let s_inv = elems.inverse_of(s);
                let sx = elems.compose(s, x);
                let conj = elems.compose(sx, s_inv);
                let kappa =
                    (alpha.value(s, x) + alpha.value(sx, s_inv) + 2 * m - alpha.value(s, s_inv))
                        % m;
                let new_phase = (phi + kappa) % m;
                match class_phase[conj as usize] {
                    None => {
                        class_phase[conj as usize] = Some(new_phase);
                        queue.push(conj);
                    }
                    Some(existing) => {
                        if existing != new_phase {
                            return Err(Error::Numerical(
                                "inconsistent conjugation phase on a regular class".into(),
                            ));
                        }
                    }
                }
            }
        }
    }

    let unit = |t: u64| {
        let angle = 2.0 * std::f64::consts::PI * t as f64 / m as f64;
        Complex64::new(angle.cos(), angle.sin())
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _attempt in 0..=opts.retries {
        // Random central element z₁ on the regular class sums, then
        // Hermitize: z = z₁ + z₁†.
        let mut weight: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); classes.class_count()];
        for &id in regular {
            weight[id] = Complex64::new(rng.gen_range(0.25..1.0), rng.gen_range(0.25..1.0));
        }
        let mut coeff = vec![Complex64::new(0.0, 0.0); n];
        for x in 0..n {
            if let Some(phase) = class_phase[x] {
                let w = weight[classes.class_of[x] as usize];
                coeff[x] += w * unit(phase);
            }
        }
        // Adjoint part: conj(c_{x⁻¹}) · ε(x⁻¹, x)⁻¹ at position x.
        let adjoint: Vec<Complex64> = (0..n as u32)
            .map(|x| {
                let xi = elems.inverse_of(x);
                coeff[xi as usize].conj() * unit((m - alpha.value(xi, x) % m) % m)
            })
            .collect();
        for x in 0..n {
            coeff[x] += adjoint[x];
        }

        // Left-regular matrix of z.
        let mut matrix = vec![Complex64::new(0.0, 0.0); n * n];
        for g in 0..n as u32 {
            if coeff[g as usize].norm_sqr() == 0.0 {
                continue;
            }
            for x in 0..n as u32 {
                let gx = elems.compose(g, x);
                matrix[gx as usize * n + x as usize] += coeff[g as usize] * unit(alpha.value(g, x));
            }
        }

        // Hermitian eigenproblem via the doubled real-symmetric embedding
        // [[A, -B], [B, A]]; every eigenvalue appears twice.
        let dim = 2 * n;
        let mut s = DMatrix::<f64>::zeros(dim, dim);
        for i in 0..n {
            for j in 0..n {
                let v = matrix[i * n + j];
                s[(i, j)] = v.re;
                s[(n + i, n + j)] = v.re;
                s[(i, n + j)] = -v.im;
                s[(n + i, j)] = v.im;
            }
        }
        let eigen = s.symmetric_eigen();
        let mut eigenvalues: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
        eigenvalues.sort_by(|a, b| a.partial_cmp(b).unwrap());

        let width = eigenvalues[dim - 1] - eigenvalues[0];
        let gap = opts.cluster_tol * width.max(1.0);
        let mut cluster_sizes = vec![1usize];
        for w in eigenvalues.windows(2) {
            if w[1] - w[0] > gap {
                cluster_sizes.push(1);
            } else {
                *cluster_sizes.last_mut().unwrap() += 1;
            }
        }

        if cluster_sizes.len() != regular.len() {
            continue; // collision; retry with fresh randomness
        }
        let mut degrees = Vec::with_capacity(cluster_sizes.len());
        let mut ok = true;
        for size in &cluster_sizes {
            if size % 2 != 0 {
                ok = false;
                break;
            }
            match isqrt_exact((size / 2) as u64) {
                Some(d) => degrees.push(d),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        degrees.sort_unstable();
        let result = ProjectiveDegrees {
            degrees,
            regular_class_count: regular.len(),
        };
        if certify(&result, n as u64).is_ok() {
            return Ok(result);
        }
    }
    Err(Error::Numerical(format!(
        "eigenvalue clustering failed after {} retries",
        opts.retries + 1
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::heisenberg_cocycle_z2_squared;
    use crate::group::families::{cyclic, dihedral, elementary_abelian, symmetric};

    #[test]
    fn trivial_cocycle_matches_character_degrees() {
        for g in [
            symmetric(3).unwrap(),
            symmetric(4).unwrap(),
            dihedral(4).unwrap(),
            cyclic(12).unwrap(),
        ] {
            let order = g.order().unwrap();
            let zero = Cocycle2::zero(order as usize, 4);
            let spectral = projective_degrees(&g, &zero, &ProjectiveOptions::default()).unwrap();
            let dixon = g.character_table().unwrap().degree_multiset();
            assert_eq!(spectral.degrees, dixon);
        }
    }

    #[test]
    fn heisenberg_class_forces_degree_two() {
        let g = elementary_abelian(2, 2).unwrap();
        let alpha = heisenberg_cocycle_z2_squared(&g).unwrap();
        let result = projective_degrees(&g, &alpha, &ProjectiveOptions::default()).unwrap();
        assert_eq!(result.degrees, vec![2]);
        assert_eq!(result.regular_class_count, 1);
    }

    #[test]
    fn cyclic_groups_have_no_projective_twisting() {
        // H² of a cyclic group is trivial; any valid cocycle on it gives
        // ordinary (all-one) degrees.
        let g = cyclic(4).unwrap();
        let zero = Cocycle2::zero(4, 8);
        let result = projective_degrees(&g, &zero, &ProjectiveOptions::default()).unwrap();
        assert_eq!(result.degrees, vec![1, 1, 1, 1]);
    }

    #[test]
    fn abelian_fallback_beyond_cap() {
        let g = cyclic(37).unwrap();
        let zero = Cocycle2::zero(37, 2);
        let opts = ProjectiveOptions {
            spectral_cap: 10,
            ..Default::default()
        };
        let result = projective_degrees(&g, &zero, &opts).unwrap();
        // zero table beyond the cap routes to ordinary degrees
        assert_eq!(result.degrees, vec![1; 37]);
    }

    #[test]
    fn nonabelian_dixon_fallback_beyond_cap() {
        let g = symmetric(4).unwrap();
        let zero = Cocycle2::zero(24, 2);
        let opts = ProjectiveOptions {
            spectral_cap: 10,
            ..Default::default()
        };
        let result = projective_degrees(&g, &zero, &opts).unwrap();
        assert_eq!(result.degrees, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn twisted_abelian_beyond_cap_uses_uniform_degrees() {
        // ℤ2 × ℤ2 with the nontrivial cocycle, forced past the cap.
        let g = elementary_abelian(2, 2).unwrap();
        let alpha = heisenberg_cocycle_z2_squared(&g).unwrap();
        let opts = ProjectiveOptions {
            spectral_cap: 2,
            ..Default::default()
        };
        let result = projective_degrees(&g, &alpha, &opts).unwrap();
        assert_eq!(result.degrees, vec![2]);
    }
}
