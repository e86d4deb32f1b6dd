//! Smith normal form over ℤ and linear solving with values in ℚ/ℤ.
//!
//! The coboundary equations have the shape `A x = b` where `b` takes values
//! in (1/m)ℤ/ℤ. Over the divisible group ℚ/ℤ every equation attached to a
//! nonzero elementary divisor is solvable, so solvability is decided purely
//! by the zero rows of the Smith form; a concrete witness then lives at the
//! finer modulus m · lcm(elementary divisors).

use crate::error::{Error, Result};

const ENTRY_GUARD: i128 = 1 << 100;

/// Diagonalization U A V = D, with only `U b` and `V` retained.
struct Diagonalized {
    diag: Vec<i128>,
    ub: Vec<i128>,
    v: Vec<Vec<i128>>,
}

fn diagonalize(mut a: Vec<Vec<i128>>, mut b: Vec<i128>) -> Result<Diagonalized> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| {
            let mut row = vec![0i128; cols];
            row[i] = 1;
            row
        })
        .collect();

    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero pivot in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0
                    && pivot.is_none_or(|(pr, pc)| a[r][c].abs() < a[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        b.swap(t, pr);
        if pc != t {
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            v.swap(t, pc); // v rows track columns of A
        }

        let mut clean = false;
        while !clean {
            clean = true;
            for r in t + 1..rows {
                if a[r][t] == 0 {
                    continue;
                }
                let q = a[r][t].div_euclid(a[t][t]);
                if q != 0 {
                    for c in t..cols {
                        a[r][c] -= q * a[t][c];
                        guard(a[r][c])?;
                    }
                    b[r] -= q * b[t];
                    guard(b[r])?;
                }
                if a[r][t] != 0 {
                    // Remainder smaller than pivot: swap up and restart.
                    a.swap(t, r);
                    b.swap(t, r);
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c] == 0 {
                    continue;
                }
                let q = a[t][c].div_euclid(a[t][t]);
                if q != 0 {
                    for r in t..rows {
                        a[r][c] -= q * a[r][t];
                        guard(a[r][c])?;
                    }
                    for k in 0..cols {
                        let delta = q * v[t][k];
                        v[c][k] -= delta;
                        guard(v[c][k])?;
                    }
                }
                if a[t][c] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    v.swap(t, c);
                    clean = false;
                }
            }
        }
        t += 1;
    }

    let mut diag = vec![0i128; cols];
    for (i, d) in diag.iter_mut().enumerate().take(rows.min(cols)) {
        *d = a[i][i];
    }
    // Rows below the diagonal block contribute pure consistency conditions.
    let mut ub = b;
    ub.truncate(rows);
    // v currently stores V transposed (rows track columns); transpose back.
    let vt = (0..cols)
        .map(|i| (0..cols).map(|j| v[j][i]).collect())
        .collect();
    Ok(Diagonalized { diag, ub, v: vt })
}

fn guard(x: i128) -> Result<()> {
    if x.abs() > ENTRY_GUARD {
        return Err(Error::Numerical("entry blow-up in Smith reduction".into()));
    }
    Ok(())
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i128(b, a % b)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_i128(a as i128, b as i128) as u64 * b
    }
}

/// Solution of `A x ≡ b` with `b` valued in (1/m)ℤ/ℤ: witness values and
/// the modulus they live at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainWitness {
    pub modulus: u64,
    pub values: Vec<u64>,
}

/// Solves `A x = b` over ℚ/ℤ, where `b` is given by residues mod `m`.
/// Returns `None` when inconsistent (detected on the zero rows of the Smith
/// form — every nonzero elementary divisor is invertible in ℚ/ℤ).
pub fn solve_over_circle(
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    m: u64,
) -> Result<Option<CochainWitness>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let d = diagonalize(a, b)?;

    // Consistency: zero diagonal entries and excess rows must see b ≡ 0
    // (mod m, after the row operations).
    for i in 0..rows {
        let di = if i < cols { d.diag[i] } else { 0 };
        if di == 0 && d.ub[i].rem_euclid(m as i128) != 0 {
            return Ok(None);
        }
    }

    let divisor_lcm = d
        .diag
        .iter()
        .map(|&x| x.unsigned_abs() as u64)
        .filter(|&x| x > 1)
        .fold(1u64, lcm_u64);
    let modulus = m
        .checked_mul(divisor_lcm)
        .ok_or_else(|| Error::Numerical("witness modulus overflow".into()))?;
    let scale = divisor_lcm as i128;

    // y_i = (L / d_i) · (U b)_i  solves  d_i y_i = L b_i  exactly.
    let mut y = vec![0i128; cols];
    for i in 0..cols.min(rows) {
        if d.diag[i] != 0 {
            y[i] = (scale / d.diag[i]) * d.ub[i].rem_euclid(m as i128);
        }
    }
    let mm = modulus as i128;
    let mut values = vec![0u64; cols];
    for (r, value) in values.iter_mut().enumerate() {
        let mut acc: i128 = 0;
        for (c, yc) in y.iter().enumerate() {
            if *yc != 0 && d.v[r][c] != 0 {
                acc = (acc + (d.v[r][c].rem_euclid(mm)) * (yc.rem_euclid(mm))).rem_euclid(mm);
            }
        }
        *value = acc.rem_euclid(mm) as u64;
    }
    Ok(Some(CochainWitness { modulus, values }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_solve_round_trip() {
        // x + y = 1, x - y = 0 over (1/2)ℤ/ℤ: x = y = 1/4.
        let a = vec![vec![1, 1], vec![1, -1]];
        let b = vec![1, 0];
        let w = solve_over_circle(a.clone(), b.clone(), 2).unwrap().unwrap();
        // verify A·x ≡ b·(modulus/2) (mod modulus)
        let lift = w.modulus / 2;
        for (row, rhs) in a.iter().zip(&b) {
            let got: i128 = row
                .iter()
                .zip(&w.values)
                .map(|(&c, &x)| c * x as i128)
                .sum::<i128>()
                .rem_euclid(w.modulus as i128);
            assert_eq!(got as u64, (*rhs as u64 * lift) % w.modulus);
        }
    }

    #[test]
    fn inconsistent_zero_row_detected() {
        // 0·x = 1 (mod 2): no solution in ℚ/ℤ.
        let a = vec![vec![0]];
        let b = vec![1];
        assert!(solve_over_circle(a, b, 2).unwrap().is_none());
    }

    #[test]
    fn divisible_equation_always_solvable() {
        // 2x = 1 (mod 2) has the quarter-turn solution x = 1/4.
        let a = vec![vec![2]];
        let b = vec![1];
        let w = solve_over_circle(a, b, 2).unwrap().unwrap();
        assert_eq!(w.modulus, 4);
        assert_eq!((2 * w.values[0]) % 4, 2 % 4);
    }

    #[test]
    fn rectangular_consistency() {
        // x = 1, x = 0 (mod 3): inconsistent.
        let a = vec![vec![1], vec![1]];
        let b = vec![1, 0];
        assert!(solve_over_circle(a, b, 3).unwrap().is_none());
    }
}
