//! Linear algebra over prime fields F_p, sized for class-matrix work:
//! row reduction, kernels, and characteristic polynomials via Hessenberg
//! reduction. Everything is deterministic; no randomized pivoting.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic context for F_p. Assumes p < 2^31 so products fit in u64.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 31), "modulus too large");
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero in F_p");
        self.pow(a, self.p - 2)
    }
}

/// Smallest primitive root modulo the prime p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fp = Fp::new(p);
    let mut factors = Vec::new();
    let mut rest = p - 1;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            factors.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        factors.push(rest);
    }
    'candidates: for g in 2..p {
        for &q in &factors {
            if fp.pow(g, (p - 1) / q) == 1 {
                continue 'candidates;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols);
            data.extend(row);
        }
        FpMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[u64], fp: Fp) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    let m = self.at(r, c);
                    if m != 0 && v[c] != 0 {
                        acc = fp.add(acc, fp.mul(m, v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, fp: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| self.at(r, col) != 0);
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..self.cols {
                    let tmp = self.at(row, c);
                    self.set(row, c, self.at(pr, c));
                    self.set(pr, c, tmp);
                }
            }
            let scale = fp.inv(self.at(row, col));
            for c in 0..self.cols {
                let v = fp.mul(self.at(row, c), scale);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let f = self.at(r, col);
                    for c in 0..self.cols {
                        let v = fp.sub(self.at(r, c), fp.mul(f, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right kernel, canonicalized to reduced row echelon form.
    pub fn kernel_basis(&self, fp: Fp) -> Vec<Vec<u64>> {
        let mut reduced = self.clone();
        let pivots = reduced.rref(fp);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &pc in &pivots {
                v[pc] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![0u64; self.cols];
            vec[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                vec[pc] = fp.sub(0, reduced.at(r, free));
            }
            basis.push(vec);
        }
        canonicalize_basis(basis, fp)
    }
}

/// Canonical (RREF) basis of the row space.
pub fn canonicalize_basis(rows: Vec<Vec<u64>>, fp: Fp) -> Vec<Vec<u64>> {
    if rows.is_empty() {
        return rows;
    }
    let mut mat = FpMatrix::from_rows(rows);
    let pivots = mat.rref(fp);
    (0..pivots.len()).map(|r| mat.row(r).to_vec()).collect()
}

/// Characteristic polynomial det(xI - A), ascending coefficients, monic.
///
/// Reduces to upper Hessenberg form by a similarity transform, then runs the
/// standard leading-principal-minor recurrence.
pub fn charpoly(mat: &FpMatrix, fp: Fp) -> Vec<u64> {
    assert_eq!(mat.rows, mat.cols);
    let v = mat.rows;
    if v == 0 {
        return vec![1];
    }
    let mut h = mat.clone();
    for k in 0..v.saturating_sub(2) {
        let pivot = ((k + 1)..v).find(|&r| h.at(r, k) != 0);
        let Some(pr) = pivot else { continue };
        if pr != k + 1 {
            for c in 0..v {
                let tmp = h.at(k + 1, c);
                h.set(k + 1, c, h.at(pr, c));
                h.set(pr, c, tmp);
            }
            for r in 0..v {
                let tmp = h.at(r, k + 1);
                h.set(r, k + 1, h.at(r, pr));
                h.set(r, pr, tmp);
            }
        }
        let inv_pivot = fp.inv(h.at(k + 1, k));
        for i in (k + 2)..v {
            let f = fp.mul(h.at(i, k), inv_pivot);
            if f == 0 {
                continue;
            }
            // Row op R_i -= f R_{k+1} paired with column op C_{k+1} += f C_i
            // keeps the matrix similar to the original.
            for c in 0..v {
                let val = fp.sub(h.at(i, c), fp.mul(f, h.at(k + 1, c)));
                h.set(i, c, val);
            }
            for r in 0..v {
                let val = fp.add(h.at(r, k + 1), fp.mul(f, h.at(r, i)));
                h.set(r, k + 1, val);
            }
        }
    }

    // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
    //          - sum_{i=1}^{m-1} h[m-1-i][m-1] (prod_{j=m-i}^{m-1} h[j][j-1]) p_{m-1-i}(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=v {
        let diag = h.at(m - 1, m - 1);
        let prev = &polys[m - 1];
        let mut poly = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            poly[i + 1] = fp.add(poly[i + 1], c);
            poly[i] = fp.sub(poly[i], fp.mul(diag, c));
        }
        let mut subdiag_product = 1u64;
        for i in 1..m {
            subdiag_product = fp.mul(subdiag_product, h.at(m - i, m - i - 1));
            if subdiag_product == 0 {
                break;
            }
            let coeff = fp.mul(h.at(m - 1 - i, m - 1), subdiag_product);
            if coeff == 0 {
                continue;
            }
            for (j, &c) in polys[m - 1 - i].iter().enumerate() {
                poly[j] = fp.sub(poly[j], fp.mul(coeff, c));
            }
        }
        polys.push(poly);
    }
    polys.pop().unwrap()
}

pub fn poly_eval(poly: &[u64], x: u64, fp: Fp) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = fp.add(fp.mul(acc, x), c);
    }
    acc
}

/// All roots of the polynomial in F_p, ascending.
pub fn poly_roots(poly: &[u64], fp: Fp) -> Vec<u64> {
    (0..fp.p).filter(|&x| poly_eval(poly, x, fp) == 0).collect()
}

/// The unique nonnegative d <= bound with d^2 = square (mod p), if any.
/// Unique because p > 2 * bound makes d and p - d distinguishable.
pub fn bounded_sqrt(square: u64, bound: u64, fp: Fp) -> Result<u64> {
    for d in 0..=bound {
        if fp.mul(d, d) == square % fp.p {
            return Ok(d);
        }
    }
    Err(Error::Internal(format!(
        "no square root of {square} below {bound} modulo {}",
        fp.p
    )))
}
