//! Square matrices over a [`FiniteField`] and the element classifier.
//!
//! The census needs four things from a matrix: products/powers, a
//! characteristic polynomial, a minimal polynomial, and a packing of the
//! entries into a sortable key. The characteristic polynomial uses the
//! Berkowitz algorithm (division-free, so it works verbatim over any field),
//! and the minimal polynomial is the lcm of the annihilators of the standard
//! basis vectors, each found by reducing the Krylov chain `e, Ae, A²e, …`
//! to its first linear dependence.

use super::field::FiniteField;
use super::poly::FieldPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        Matrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::new(n, vec![0; n * n]);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            entries.extend_from_slice(row);
        }
        Matrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u32) {
        self.entries[row * self.n + col] = value;
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if b != 0 {
                        out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        Matrix { n, entries: out }
    }

    pub fn pow(&self, f: &FiniteField, mut e: u64) -> Matrix {
        let mut result = Matrix::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        result
    }

    /// Matrix-vector product `A·v`.
    pub fn apply(&self, f: &FiniteField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.n);
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = 0;
                for (&a, &x) in self.entries[i * n..(i + 1) * n].iter().zip(v) {
                    acc = f.add(acc, f.mul(a, x));
                }
                acc
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, f: &FiniteField) -> u32 {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pivot = m[col * n + col];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for r in (col + 1)..n {
                let factor = f.mul(m[r * n + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - A)`, monic, low-to-high.
    ///
    /// Berkowitz recurrence: grow the leading principal block one row and
    /// column at a time. With `c` the leading-first coefficient vector for
    /// the m×m block and the new row/column split as
    /// `[[A_m, S], [R, a]]`, the (m+1)×(m+1) coefficients are
    /// `nc[i] = c[i] - a·c[i-1] - Σ_{j ≤ i-2} (R·A_m^{i-j-2}·S)·c[j]`,
    /// out-of-range terms dropped.
    pub fn char_poly(&self, f: &FiniteField) -> FieldPoly {
        let n = self.n;
        let mut c: Vec<u32> = vec![1];
        for r in 1..=n {
            let m = r - 1;
            let a_rr = self.get(m, m);

            // s[t] = R · A_m^t · S for t = 0..r-2
            let mut s = Vec::new();
            if m > 0 {
                let mut v: Vec<u32> = (0..m).map(|row| self.get(row, m)).collect();
                for _ in 0..(r - 1) {
                    let mut dot = 0;
                    for (col, &x) in v.iter().enumerate() {
                        dot = f.add(dot, f.mul(self.get(m, col), x));
                    }
                    s.push(dot);
                    let mut nv = vec![0u32; m];
                    for (row, slot) in nv.iter_mut().enumerate() {
                        let mut acc = 0;
                        for (col, &x) in v.iter().enumerate() {
                            acc = f.add(acc, f.mul(self.get(row, col), x));
                        }
                        *slot = acc;
                    }
                    v = nv;
                }
            }

            let mut nc = vec![0u32; r + 1];
            for (i, slot) in nc.iter_mut().enumerate() {
                let mut val = if i < c.len() { c[i] } else { 0 };
                if i >= 1 {
                    val = f.sub(val, f.mul(a_rr, c[i - 1]));
                }
                if i >= 2 {
                    for j in 0..=(i - 2) {
                        val = f.sub(val, f.mul(s[i - j - 2], c[j]));
                    }
                }
                *slot = val;
            }
            c = nc;
        }
        c.reverse();
        FieldPoly::new(c)
    }

    /// Minimal polynomial: the monic lcm of the annihilators of the standard
    /// basis vectors. For each `e`, the chain `e, Ae, A²e, …` is reduced
    /// against an echelon basis built from the same chain; the first zero
    /// reduction yields the annihilator of `e` through the tracked
    /// combination of monomials.
    pub fn min_poly(&self, f: &FiniteField) -> FieldPoly {
        let n = self.n;
        let mut minp = FieldPoly::one();
        for e in 0..n {
            // echelon basis of the Krylov space of e: (reduced vector with
            // pivot 1, tracking polynomial, pivot column)
            let mut basis: Vec<(Vec<u32>, FieldPoly, usize)> = Vec::new();
            let mut raw: Vec<u32> = vec![0; n];
            raw[e] = 1;
            for d in 0..=n {
                let mut w = raw.clone();
                let mut t = FieldPoly::x_pow(d);
                for (bv, bp, piv) in &basis {
                    let coef = w[*piv];
                    if coef != 0 {
                        for i in 0..n {
                            w[i] = f.sub(w[i], f.mul(coef, bv[i]));
                        }
                        t = t.sub(f, &bp.mul_scalar(f, coef));
                    }
                }
                if w.iter().all(|&x| x == 0) {
                    minp = minp.lcm(f, &t.monic(f));
                    break;
                }
                let piv = w.iter().position(|&x| x != 0).unwrap();
                let inv = f.inv(w[piv]);
                for x in w.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                basis.push((w, t.mul_scalar(f, inv), piv));
                raw = self.apply(f, &raw);
            }
            if minp.degree() == Some(n) {
                break; // already equal to the characteristic polynomial
            }
        }
        minp
    }

    /// Entries packed base-`q` (big-endian, row-major) into a sortable key.
    /// Callers guarantee `q^(n²)` fits in a `u128`.
    pub fn key(&self, q: u64) -> u128 {
        let mut k = 0u128;
        for &e in &self.entries {
            k = k * q as u128 + e as u128;
        }
        k
    }
}

/// Conjugacy-class type of a group element, read off its characteristic and
/// minimal polynomials: regular semisimple means the characteristic
/// polynomial is squarefree; semisimple means the minimal polynomial is;
/// regular means they have equal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_rs: bool,
    pub is_ss: bool,
    pub is_rg: bool,
}

pub fn classify(f: &FiniteField, g: &Matrix) -> Classification {
    let cp = g.char_poly(f);
    if cp.is_squarefree(f) {
        return Classification {
            is_rs: true,
            is_ss: true,
            is_rg: true,
        };
    }
    let mp = g.min_poly(f);
    Classification {
        is_rs: false,
        is_ss: mp.is_squarefree(f),
        is_rg: mp.degree() == cp.degree(),
    }
}
