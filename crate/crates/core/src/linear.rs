//! Linearized polynomials `Σ c_i x^{p^i}` over F_{p^m}. They are F_p-linear,
//! so `L(x) = b` is an m×m linear system over F_p in the coordinate vector of x.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Debug)]
pub struct LinearizedPolynomial {
    field: Field,
    /// coeffs[i] multiplies x^{p^i}
    coeffs: Vec<Elem>,
}

impl LinearizedPolynomial {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Result<Self> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(LinearizedPolynomial {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn eval(&self, x: Elem) -> Result<Elem> {
        let x = self.field.check(x)?;
        Ok(self.field.wrap(self.eval_idx(x)))
    }

    fn eval_idx(&self, x: u32) -> u32 {
        let f = &self.field;
        let mut acc = 0;
        let mut term = x;
        for c in &self.coeffs {
            acc = f.add_idx(acc, f.mul_idx(c.index(), term));
            term = f.frobenius_idx(term, 1);
        }
        acc
    }

    /// Every solution of `L(x) = rhs`, in ascending index order.
    pub fn solve(&self, rhs: Elem) -> Result<Vec<Elem>> {
        let f = &self.field;
        let rhs = f.check(rhs)?;
        let p = f.characteristic();
        let m = f.degree() as usize;

        // columns are the images of the basis vectors x^j (index p^j)
        let columns: Vec<Vec<u32>> = (0..m)
            .map(|j| digits(self.eval_idx(p.pow(j as u32)), p, m))
            .collect();
        let mut rows: Vec<Vec<u32>> = (0..m)
            .map(|i| {
                let mut row: Vec<u32> = columns.iter().map(|c| c[i]).collect();
                row.push(digits(rhs, p, m)[i]);
                row
            })
            .collect();

        let pivots = reduce(&mut rows, p, m);
        // inconsistent if some zero row has a nonzero right-hand side
        if rows.iter().skip(pivots.len()).any(|r| r[m] != 0) {
            return Ok(Vec::new());
        }
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        if free.len() > 16 {
            return Err(Error::Domain(format!(
                "solution space of dimension {} is too large to list",
                free.len()
            )));
        }

        let mut solutions = Vec::new();
        let count = (p as u64).pow(free.len() as u32);
        for combo in 0..count {
            let mut v = vec![0u32; m];
            let mut rest = combo;
            for &c in &free {
                v[c] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            for (r, &pc) in pivots.iter().enumerate() {
                let mut val = rows[r][m] as u64;
                for &c in &free {
                    val += (p - rows[r][c]) as u64 * v[c] as u64;
                }
                v[pc] = (val % p as u64) as u32;
            }
            let idx: u32 = v.iter().rev().fold(0, |acc, &d| acc * p + d);
            solutions.push(f.wrap(idx));
        }
        solutions.sort();
        Ok(solutions)
    }
}

fn digits(mut a: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0; m];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&b| (a as u64 * b as u64) % p as u64 == 1)
        .expect("nonzero residue")
}

/// Reduced row echelon form over F_p on the first `cols` columns. Returns the
/// pivot column of each leading row.
fn reduce(rows: &mut [Vec<u32>], p: u32, cols: usize) -> Vec<usize> {
    let p64 = p as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p) as u64;
        for v in rows[r].iter_mut() {
            *v = (*v as u64 * inv % p64) as u32;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c] as u64;
                for j in 0..rows[i].len() {
                    let sub = factor * rows[r][j] as u64 % p64;
                    rows[i][j] = ((rows[i][j] as u64 + p64 - sub) % p64) as u32;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
