//! Exact irreducible character degrees and complex character values via the
//! Dixon-Burnside method: the class-algebra structure constants are
//! simultaneously diagonalized over a prime field 𝔽_p with p ≡ 1 (mod
//! exp G) and p > 2√|G|, degrees are recovered exactly from the orthogonality
//! relations, and values are lifted to ℂ through root-of-unity multiplicity
//! counts.

use num_complex::Complex64;

use super::PermGroup;
use crate::error::{Error, Result};

/// Exact degrees plus floating-point character values (rows = irreducibles,
/// columns = conjugacy classes in enumeration order).
pub struct CharacterTable {
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<Complex64>>,
    pub class_sizes: Vec<u64>,
}

impl CharacterTable {
    /// Set of irreducible degrees cd(G), deduplicated and sorted.
    pub fn degree_set(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Degrees with multiplicities, sorted.
    pub fn degree_multiset(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }
}

// ---- modular arithmetic -------------------------------------------------

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn trial_factor(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// Square root mod an odd prime (Tonelli-Shanks). The input must be a
/// quadratic residue.
fn sqrt_mod(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Ok(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Err(Error::Numerical(format!("{a} is not a square mod {p}")));
    }
    if p % 4 == 3 {
        return Ok(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) == 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r)
}

/// Smallest prime p ≡ 1 (mod modulus) with p > lower.
fn find_dixon_prime(modulus: u64, lower: u64) -> Result<u64> {
    let mut p = modulus + 1;
    while p <= lower || !is_prime_u64(p) {
        p = p
            .checked_add(modulus)
            .ok_or_else(|| Error::Numerical("prime search overflow".into()))?;
        if p > 1u64 << 44 {
            return Err(Error::Numerical(format!(
                "no prime ≡ 1 (mod {modulus}) found below 2^44"
            )));
        }
    }
    Ok(p)
}

/// Element of exact multiplicative order `e` in 𝔽_p (requires e | p-1).
fn root_of_unity(e: u64, p: u64) -> u64 {
    let factors = trial_factor(p - 1);
    let mut g = 2u64;
    loop {
        if factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1) {
            break;
        }
        g += 1;
    }
    pow_mod(g, (p - 1) / e, p)
}

// ---- linear algebra over F_p --------------------------------------------

/// Characteristic polynomial coefficients (monic, degree n) of an n×n
/// matrix over 𝔽_p, via Hessenberg reduction.
fn char_poly(matrix: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = matrix.len();
    let mut h: Vec<Vec<u64>> = matrix.to_vec();
    // Reduce to upper Hessenberg form.
    for col in 0..n.saturating_sub(2) {
        // Find a nonzero pivot below the subdiagonal.
        let pivot_row = (col + 1..n).find(|&r| h[r][col] != 0);
        let Some(pivot_row) = pivot_row else { continue };
        if pivot_row != col + 1 {
            h.swap(pivot_row, col + 1);
            for row in h.iter_mut() {
                row.swap(pivot_row, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], p);
        for r in col + 2..n {
            if h[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(h[r][col], inv, p);
            for c in 0..n {
                let sub = mul_mod(factor, h[col + 1][c], p);
                h[r][c] = (h[r][c] + p - sub) % p;
            }
            // Column operation restoring similarity.
            for r2 in 0..n {
                let add = mul_mod(factor, h[r2][r], p);
                h[r2][col + 1] = (h[r2][col + 1] + add) % p;
            }
        }
    }
    // p_0 = 1; p_k = (x - h_kk) p_{k-1} - Σ_{j} h_{j,k} (Π subdiag) p_{j-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        // (x - h[k][k]) * prev
        let mut poly = vec![0u64; prev.len() + 1];
        for (i, &c) in prev.iter().enumerate() {
            poly[i + 1] = (poly[i + 1] + c) % p;
            let sub = mul_mod(h[k][k], c, p);
            poly[i] = (poly[i] + p - sub) % p;
        }
        let mut beta = 1u64;
        for j in (0..k).rev() {
            beta = mul_mod(beta, h[j + 1][j], p);
            if beta == 0 {
                break;
            }
            let coeff = mul_mod(h[j][k], beta, p);
            if coeff == 0 {
                continue;
            }
            for (i, &c) in polys[j].iter().enumerate() {
                let sub = mul_mod(coeff, c, p);
                poly[i] = (poly[i] + p - sub) % p;
            }
        }
        polys.push(poly);
    }
    polys.pop().unwrap()
}

fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = (mul_mod(acc, x, p) + c) % p;
    }
    acc
}

/// All roots in 𝔽_p of a polynomial, found by scanning the field. The
/// fields in play are small by construction of the Dixon prime.
fn poly_roots(poly: &[u64], p: u64) -> Vec<u64> {
    let degree = poly.len().saturating_sub(1);
    let mut roots = Vec::new();
    for x in 0..p {
        if poly_eval(poly, x, p) == 0 {
            roots.push(x);
            if roots.len() == degree {
                break;
            }
        }
    }
    roots
}

/// Basis of the kernel of `m` (rows of the returned matrix).
fn kernel_basis(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a = m.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod(a[row][col], p);
        for c in 0..cols {
            a[row][c] = mul_mod(a[row][c], inv, p);
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..cols {
                    let sub = mul_mod(f, a[row][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![0u64; cols];
        v[fc] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (p - a[r][fc]) % p;
        }
        basis.push(v);
    }
    basis
}

// ---- Dixon-Burnside ------------------------------------------------------

struct ClassConstants {
    /// a[i][j][k]: multiplicity of class k in the product of class sums
    /// i · j.
    a: Vec<Vec<Vec<u64>>>,
}

impl PermGroup {
    fn class_constants(&self) -> Result<ClassConstants> {
        let elems = self.elements()?;
        let classes = self.conjugacy_classes()?;
        let r = classes.class_count();
        // Members per class, for the O(|G| r) count.
        let mut members: Vec<Vec<u32>> = vec![Vec::new(); r];
        for (e, &c) in classes.class_of.iter().enumerate() {
            members[c as usize].push(e as u32);
        }
        let mut a = vec![vec![vec![0u64; r]; r]; r];
        for i in 0..r {
            for k in 0..r {
                let zk = classes.reps[k];
                // a_{ijk} = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}
                for &x in &members[i] {
                    let y = elems.compose(elems.inverse_of(x), zk);
                    let j = classes.class_of[y as usize] as usize;
                    a[i][j][k] += 1;
                }
            }
        }
        Ok(ClassConstants { a })
    }

    /// Character table by the Dixon-Burnside method. The result is cached.
    pub fn character_table(&self) -> Result<&CharacterTable> {
        if let Some(t) = self.chartab.get() {
            return Ok(t);
        }
        let table = self.compute_character_table()?;
        let _ = self.chartab.set(table);
        Ok(self.chartab.get().unwrap())
    }

    fn compute_character_table(&self) -> Result<CharacterTable> {
        let elems = self.elements()?;
        let classes = self.conjugacy_classes()?;
        let order = elems.order();
        let r = classes.class_count();
        let exponent = self.exponent()?;

        let lower = (2.0 * (order as f64).sqrt()).ceil() as u64;
        let p = find_dixon_prime(exponent, lower)?;
        let constants = self.class_constants()?;

        // Multiplication matrices over F_p: column j of m[i] is class-sum i
        // applied to basis vector j.
        let matrices: Vec<Vec<Vec<u64>>> = (0..r)
            .map(|i| {
                let mut m = vec![vec![0u64; r]; r];
                for j in 0..r {
                    for k in 0..r {
                        m[k][j] = constants.a[i][j][k] % p;
                    }
                }
                m
            })
            .collect();

        // Split the class algebra into common eigenlines.
        let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
            .map(|i| {
                let mut v = vec![0u64; r];
                v[i] = 1;
                v
            })
            .collect()];
        for m in &matrices {
            if subspaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let full_roots = poly_roots(&char_poly(m, p), p);
            let mut next = Vec::new();
            for basis in subspaces {
                if basis.len() == 1 {
                    next.push(basis);
                    continue;
                }
                let restricted = restrict(m, &basis, p)?;
                let mut found = 0;
                for &lambda in &full_roots {
                    let mut shifted = restricted.clone();
                    for (d, row) in shifted.iter_mut().enumerate() {
                        row[d] = (row[d] + p - lambda) % p;
                    }
                    let kernel = kernel_basis(&shifted, p);
                    if kernel.is_empty() {
                        continue;
                    }
                    found += kernel.len();
                    // Map kernel coordinates back to ambient vectors.
                    let sub: Vec<Vec<u64>> = kernel
                        .iter()
                        .map(|coeffs| {
                            let mut v = vec![0u64; r];
                            for (t, &c) in coeffs.iter().enumerate() {
                                for (x, &b) in basis[t].iter().enumerate() {
                                    v[x] = (v[x] + mul_mod(c, b, p)) % p;
                                }
                            }
                            v
                        })
                        .collect();
                    next.push(sub);
                    if found == basis.len() {
                        break;
                    }
                }
                if found != basis.len() {
                    return Err(Error::Numerical(
                        "class algebra failed to split into eigenspaces".into(),
                    ));
                }
            }
            subspaces = next;
        }
        if subspaces.len() != r {
            return Err(Error::Numerical(format!(
                "expected {r} common eigenlines, found {}",
                subspaces.len()
            )));
        }

        // Eigenvalue tuples ω_i for each common eigenvector.
        let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(r);
        for line in &subspaces {
            let v = &line[0];
            let c = v.iter().position(|&x| x != 0).expect("nonzero eigenvector");
            let vc_inv = inv_mod(v[c], p);
            let mut omega = Vec::with_capacity(r);
            for m in &matrices {
                let mut dot = 0u64;
                for (x, &vx) in v.iter().enumerate() {
                    dot = (dot + mul_mod(m[c][x], vx, p)) % p;
                }
                omega.push(mul_mod(dot, vc_inv, p));
            }
            omegas.push(omega);
        }

        // Exact degrees from Σ_i ω_i ω_{i*} / n_i = |G| / d².
        let order_mod = order % p;
        let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
        for omega in &omegas {
            let mut sum = 0u64;
            for i in 0..r {
                let istar = classes.inverse_class[i] as usize;
                let term = mul_mod(omega[i], omega[istar], p);
                sum = (sum + mul_mod(term, inv_mod(classes.sizes[i] % p, p), p)) % p;
            }
            let d_sq = mul_mod(order_mod, inv_mod(sum, p), p);
            let root = sqrt_mod(d_sq, p)?;
            let degree = root.min(p - root);
            if degree == 0 || order % degree != 0 {
                return Err(Error::Numerical(format!(
                    "recovered degree {degree} does not divide |G| = {order}"
                )));
            }
            // χ(g_i) ≡ d ω_i / n_i (mod p)
            let values_mod: Vec<u64> = (0..r)
                .map(|i| {
                    mul_mod(
                        mul_mod(degree % p, omega[i], p),
                        inv_mod(classes.sizes[i] % p, p),
                        p,
                    )
                })
                .collect();
            rows.push((degree, values_mod));
        }
        let degree_square_sum: u64 = rows.iter().map(|(d, _)| d * d).sum();
        if degree_square_sum != order {
            return Err(Error::Numerical(format!(
                "Σ d² = {degree_square_sum} but |G| = {order}"
            )));
        }

        // Lift to complex values through root-of-unity multiplicities.
        let zeta = root_of_unity(exponent, p);
        // class_of_power[i][t] = class of reps[i]^t
        let mut class_of_power: Vec<Vec<usize>> = Vec::with_capacity(r);
        let mut rep_orders = Vec::with_capacity(r);
        for i in 0..r {
            let rep = &elems.elems[classes.reps[i] as usize];
            let n = rep.order();
            let mut powers = Vec::with_capacity(n as usize);
            let mut acc = self.identity();
            for _ in 0..n {
                powers.push(classes.class_of[elems.index_of(&acc).unwrap() as usize] as usize);
                acc = rep.compose(&acc);
            }
            rep_orders.push(n);
            class_of_power.push(powers);
        }

        // Precompute ζ_n powers and unit-circle points per class.
        let mut zeta_pows: Vec<Vec<u64>> = Vec::with_capacity(r);
        let mut circle: Vec<Vec<Complex64>> = Vec::with_capacity(r);
        for &n in &rep_orders {
            let zeta_n = pow_mod(zeta, exponent / n, p); // order n
            let mut pows = Vec::with_capacity(n as usize);
            let mut acc = 1u64;
            for _ in 0..n {
                pows.push(acc);
                acc = mul_mod(acc, zeta_n, p);
            }
            zeta_pows.push(pows);
            circle.push(
                (0..n)
                    .map(|j| {
                        let angle = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                        Complex64::new(angle.cos(), angle.sin())
                    })
                    .collect(),
            );
        }

        let mut values = Vec::with_capacity(r);
        for (degree, values_mod) in &rows {
            let mut row = Vec::with_capacity(r);
            for i in 0..r {
                let n = rep_orders[i];
                let n_inv = inv_mod(n % p, p);
                let pows = &zeta_pows[i];
                let mut value = Complex64::new(0.0, 0.0);
                let mut assigned = 0u64;
                for j in 0..n {
                    // multiplicity of the eigenvalue e^{2πi j/n}:
                    // (1/n) Σ_t χ(g^t) ζ_n^{-jt}
                    let mut s = 0u64;
                    for (t, &ct) in class_of_power[i].iter().enumerate() {
                        let neg = (n - (j * t as u64) % n) % n;
                        s = (s + mul_mod(values_mod[ct], pows[neg as usize], p)) % p;
                    }
                    let mult = mul_mod(s, n_inv, p);
                    if mult > *degree {
                        return Err(Error::Numerical(format!(
                            "eigenvalue multiplicity {mult} exceeds degree {degree}"
                        )));
                    }
                    if mult > 0 {
                        value += circle[i][j as usize] * mult as f64;
                        assigned += mult;
                        if assigned == *degree {
                            break;
                        }
                    }
                }
                if assigned != *degree {
                    return Err(Error::Numerical(
                        "eigenvalue multiplicities do not sum to the degree".into(),
                    ));
                }
                row.push(value);
            }
            values.push(row);
        }

        // Deterministic ordering: by degree, then by value row.
        let mut order_idx: Vec<usize> = (0..r).collect();
        order_idx.sort_by(|&x, &y| {
            rows[x]
                .0
                .cmp(&rows[y].0)
                .then_with(|| compare_rows(&values[x], &values[y]))
        });
        let table = CharacterTable {
            degrees: order_idx.iter().map(|&i| rows[i].0).collect(),
            values: order_idx.iter().map(|&i| values[i].clone()).collect(),
            class_sizes: classes.sizes.clone(),
        };
        certify_orthogonality(&table, order)?;
        Ok(table)
    }

    /// Set of irreducible character degrees cd(G).
    pub fn degree_set(&self) -> Result<Vec<u64>> {
        Ok(self.character_table()?.degree_set())
    }
}

fn compare_rows(a: &[Complex64], b: &[Complex64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = x
            .re
            .partial_cmp(&y.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.im.partial_cmp(&y.im).unwrap_or(std::cmp::Ordering::Equal));
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    std::cmp::Ordering::Equal
}

/// Restriction of `m` to the invariant subspace spanned by `basis`.
fn restrict(m: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Result<Vec<Vec<u64>>> {
    let dim = basis.len();
    let n = basis[0].len();
    // Reduced echelon form of the basis for coordinate extraction.
    let mut echelon: Vec<Vec<u64>> = basis.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut change: Vec<Vec<u64>> = (0..dim)
        .map(|i| {
            let mut v = vec![0u64; dim];
            v[i] = 1;
            v
        })
        .collect();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..dim).find(|&r2| echelon[r2][col] != 0) else {
            continue;
        };
        echelon.swap(row, pr);
        change.swap(row, pr);
        let inv = inv_mod(echelon[row][col], p);
        for c in 0..n {
            echelon[row][c] = mul_mod(echelon[row][c], inv, p);
        }
        for c in 0..dim {
            change[row][c] = mul_mod(change[row][c], inv, p);
        }
        for r2 in 0..dim {
            if r2 != row && echelon[r2][col] != 0 {
                let f = echelon[r2][col];
                for c in 0..n {
                    let sub = mul_mod(f, echelon[row][c], p);
                    echelon[r2][c] = (echelon[r2][c] + p - sub) % p;
                }
                for c in 0..dim {
                    let sub = mul_mod(f, change[row][c], p);
                    change[r2][c] = (change[r2][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    if row != dim {
        return Err(Error::Numerical("subspace basis not independent".into()));
    }

    // Column t of the restriction: coordinates of M · basis[t].
    let mut out = vec![vec![0u64; dim]; dim];
    for (t, b) in basis.iter().enumerate() {
        let mut w = vec![0u64; n];
        for (k, wk) in w.iter_mut().enumerate() {
            let mut acc = 0u64;
            for (x, &bx) in b.iter().enumerate() {
                if bx != 0 {
                    acc = (acc + mul_mod(m[k][x], bx, p)) % p;
                }
            }
            *wk = acc;
        }
        // Express w in the echelon basis; coefficients against original
        // basis follow through the change matrix.
        let mut coeffs_echelon = vec![0u64; dim];
        for (s, &pc) in pivots.iter().enumerate() {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            coeffs_echelon[s] = c;
            for x in 0..n {
                let sub = mul_mod(c, echelon[s][x], p);
                w[x] = (w[x] + p - sub) % p;
            }
        }
        if w.iter().any(|&x| x != 0) {
            return Err(Error::Numerical(
                "class matrix does not preserve subspace".into(),
            ));
        }
        // original coeffs: cᵀ · change
        for s in 0..dim {
            let mut acc = 0u64;
            for (e, &ce) in coeffs_echelon.iter().enumerate() {
                acc = (acc + mul_mod(ce, change[e][s], p)) % p;
            }
            out[s][t] = acc;
        }
    }
    Ok(out)
}

fn certify_orthogonality(table: &CharacterTable, order: u64) -> Result<()> {
    let r = table.degrees.len();
    for x in 0..r {
        for y in x..r {
            let mut ip = Complex64::new(0.0, 0.0);
            for c in 0..r {
                ip += table.class_sizes[c] as f64 * table.values[x][c] * table.values[y][c].conj();
            }
            let expected = if x == y { order as f64 } else { 0.0 };
            if (ip.re - expected).abs() > 1e-6 * order as f64 || ip.im.abs() > 1e-6 * order as f64 {
                return Err(Error::Numerical(format!(
                    "row orthogonality violated for characters {x}, {y}: {ip}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::families::{
        alternating, cyclic, dihedral, direct_product, psl2, semidirect_cyclic, symmetric,
    };
    use super::*;

    #[test]
    fn modular_helpers() {
        assert!(is_prime_u64(683));
        assert!(!is_prime_u64(3411));
        assert_eq!(find_dixon_prime(6, 4).unwrap(), 7);
        let s = sqrt_mod(4, 23).unwrap();
        assert_eq!(mul_mod(s, s, 23), 4);
        let z = root_of_unity(6, 7);
        assert_eq!(pow_mod(z, 6, 7), 1);
        assert_ne!(pow_mod(z, 3, 7), 1);
        assert_ne!(pow_mod(z, 2, 7), 1);
    }

    #[test]
    fn char_poly_roots_small() {
        // [[0,1],[1,0]] has char poly x² - 1.
        let p = 13;
        let m = vec![vec![0, 1], vec![1, 0]];
        let poly = char_poly(&m, p);
        assert_eq!(poly, vec![12, 0, 1]);
        let mut roots = poly_roots(&poly, p);
        roots.sort_unstable();
        assert_eq!(roots, vec![1, 12]);
    }

    #[test]
    fn cyclic_degrees_all_one() {
        let g = cyclic(4).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 1, 1, 1]);
        // The generator's column carries all four 4th roots of unity.
        let g = cyclic(4).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.class_count(), 4);
    }

    #[test]
    fn s3_degrees() {
        let g = symmetric(3).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 1, 2]);
    }

    #[test]
    fn s4_degrees() {
        let g = symmetric(4).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn a5_degrees() {
        let g = alternating(5).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn d4_and_q8_shape() {
        let g = dihedral(4).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn psl28_degree_primes() {
        let g = psl2(8).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 7, 7, 7, 7, 8, 9, 9, 9]);
    }

    #[test]
    fn frobenius_3410_degrees() {
        let g = semidirect_cyclic(341, 10, 244).unwrap();
        let table = g.character_table().unwrap();
        let mut expected = vec![1u64; 10];
        expected.extend(std::iter::repeat(10).take(34));
        assert_eq!(table.degree_multiset(), expected);
    }

    #[test]
    fn product_group_degrees_multiply() {
        let g = direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap();
        let table = g.character_table().unwrap();
        assert_eq!(table.degree_multiset(), vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn degrees_divide_order_and_squares_sum() {
        for g in [symmetric(5).unwrap(), alternating(4).unwrap(), dihedral(7).unwrap()] {
            let order = g.order().unwrap();
            let table = g.character_table().unwrap();
            assert_eq!(table.degrees.iter().map(|d| d * d).sum::<u64>(), order);
            assert!(table.degrees.iter().all(|&d| order % d == 0));
        }
    }
}
