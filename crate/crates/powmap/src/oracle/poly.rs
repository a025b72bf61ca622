//! Dense univariate polynomials over a [`FiniteField`].
//!
//! Coefficients are field-element indices, stored low-to-high with the
//! leading coefficient nonzero (the zero polynomial is the empty vector).
//! Everything the element classifier needs lives here: ring arithmetic,
//! division, monic gcd, the formal derivative, and the squarefreeness test
//! that is characteristic-`p` safe.

use super::field::FiniteField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPoly {
    coeffs: Vec<u32>,
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    pub fn zero() -> Self {
        FieldPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FieldPoly { coeffs: vec![1] }
    }

    /// The monomial `x^d`.
    pub fn x_pow(d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        FieldPoly { coeffs }
    }

    /// `x - a`.
    pub fn x_minus(f: &FiniteField, a: u32) -> Self {
        FieldPoly::new(vec![f.neg(a), 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    pub fn eval(&self, f: &FiniteField, x: u32) -> u32 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, f: &FiniteField, other: &FieldPoly) -> FieldPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        FieldPoly::new(coeffs)
    }

    pub fn sub(&self, f: &FiniteField, other: &FieldPoly) -> FieldPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        FieldPoly::new(coeffs)
    }

    pub fn mul(&self, f: &FiniteField, other: &FieldPoly) -> FieldPoly {
        if self.is_zero() || other.is_zero() {
            return FieldPoly::zero();
        }
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        FieldPoly::new(coeffs)
    }

    pub fn mul_scalar(&self, f: &FiniteField, s: u32) -> FieldPoly {
        FieldPoly::new(self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    /// Quotient and remainder; panics if `div` is zero.
    pub fn divrem(&self, f: &FiniteField, div: &FieldPoly) -> (FieldPoly, FieldPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let d = div.degree().unwrap();
        if self.degree().is_none_or(|deg| deg < d) {
            return (FieldPoly::zero(), self.clone());
        }
        let lead_inv = f.inv(div.leading().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - d];
        while rem.len() > d {
            let c = f.mul(*rem.last().unwrap(), lead_inv);
            let shift = rem.len() - 1 - d;
            quot[shift] = c;
            if c != 0 {
                for (j, &mj) in div.coeffs.iter().enumerate().take(d) {
                    rem[shift + j] = f.sub(rem[shift + j], f.mul(c, mj));
                }
            }
            rem.pop();
        }
        (FieldPoly::new(quot), FieldPoly::new(rem))
    }

    pub fn rem(&self, f: &FiniteField, div: &FieldPoly) -> FieldPoly {
        self.divrem(f, div).1
    }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, f: &FiniteField) -> FieldPoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lead) => self.mul_scalar(f, f.inv(lead)),
        }
    }

    /// Formal derivative; in characteristic `p` the `x^{ip}` terms vanish.
    pub fn derivative(&self, f: &FiniteField) -> FieldPoly {
        if self.coeffs.len() <= 1 {
            return FieldPoly::zero();
        }
        let p = f.characteristic();
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                // the integer scalar i + 1 as a field element
                let scalar = ((i as u64 + 1) % p) as u32;
                f.mul(c, scalar)
            })
            .collect();
        FieldPoly::new(coeffs)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &FiniteField, other: &FieldPoly) -> FieldPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Monic least common multiple.
    pub fn lcm(&self, f: &FiniteField, other: &FieldPoly) -> FieldPoly {
        if self.is_zero() || other.is_zero() {
            return FieldPoly::zero();
        }
        let g = self.gcd(f, other);
        self.mul(f, other).divrem(f, &g).0.monic(f)
    }

    /// Squarefree over the algebraic closure: `gcd(f, f') = 1`. A vanishing
    /// derivative means `f` is a `p`-th power (of positive degree), hence
    /// not squarefree; nonzero constants are vacuously squarefree.
    pub fn is_squarefree(&self, f: &FiniteField) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative(f);
                if d.is_zero() {
                    return false;
                }
                self.gcd(f, &d).degree() == Some(0)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FiniteField {
        FiniteField::new(5, 1).unwrap()
    }

    /// (x - a)(x - b)... as a product of linear factors.
    fn from_roots(f: &FiniteField, roots: &[u32]) -> FieldPoly {
        roots
            .iter()
            .fold(FieldPoly::one(), |acc, &r| acc.mul(f, &FieldPoly::x_minus(f, r)))
    }

    #[test]
    fn construction_and_shape() {
        let p = FieldPoly::new(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs(), &[1, 2]);
        assert!(FieldPoly::zero().is_zero());
        assert_eq!(FieldPoly::zero().degree(), None);
        assert_eq!(FieldPoly::x_pow(3).degree(), Some(3));
    }

    #[test]
    fn eval_and_roots() {
        let f = f5();
        let p = from_roots(&f, &[1, 3]);
        assert_eq!(p.eval(&f, 1), 0);
        assert_eq!(p.eval(&f, 3), 0);
        assert_ne!(p.eval(&f, 2), 0);
    }

    #[test]
    fn divrem_round_trips() {
        let f = f5();
        // exhaustive over small degree-3 / degree-1..2 pairs
        for a0 in 0..5u32 {
            for a1 in 0..5u32 {
                for a3 in 1..5u32 {
                    let a = FieldPoly::new(vec![a0, a1, 2, a3]);
                    for b0 in 0..5u32 {
                        for b1 in 1..5u32 {
                            let b = FieldPoly::new(vec![b0, b1]);
                            let (q, r) = a.divrem(&f, &b);
                            let back = q.mul(&f, &b).add(&f, &r);
                            assert_eq!(back, a);
                            assert!(r.degree() < b.degree());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = f5();
        let a = from_roots(&f, &[1, 2]);
        let b = from_roots(&f, &[1, 3]);
        assert_eq!(a.gcd(&f, &b), FieldPoly::x_minus(&f, 1));
        assert_eq!(a.gcd(&f, &FieldPoly::zero()), a.monic(&f));
    }

    #[test]
    fn lcm_contains_both() {
        let f = f5();
        let a = from_roots(&f, &[1, 2]);
        let b = from_roots(&f, &[2, 3]);
        let l = a.lcm(&f, &b);
        assert_eq!(l, from_roots(&f, &[1, 2, 3]));
        assert!(l.rem(&f, &a).is_zero());
        assert!(l.rem(&f, &b).is_zero());
    }

    #[test]
    fn derivative_in_characteristic_p() {
        let f = f5();
        // d/dx (x^5 + x) = 1 over F_5
        let p = FieldPoly::x_pow(5).add(&f, &FieldPoly::x_pow(1));
        assert_eq!(p.derivative(&f), FieldPoly::one());
        // x^5 - a = (x - a)^5 has zero derivative and is not squarefree
        let fifth = FieldPoly::x_pow(5).sub(&f, &FieldPoly::new(vec![2]));
        assert!(fifth.derivative(&f).is_zero());
        assert!(!fifth.is_squarefree(&f));
    }

    #[test]
    fn squarefree_detection() {
        let f = f5();
        assert!(from_roots(&f, &[1, 2, 3]).is_squarefree(&f));
        assert!(!from_roots(&f, &[1, 1]).is_squarefree(&f));
        assert!(FieldPoly::one().is_squarefree(&f));
        assert!(!FieldPoly::zero().is_squarefree(&f));

        // squarefree is about the closure: x^2 + 1 over F_3 (irreducible)
        let f3 = FiniteField::new(3, 1).unwrap();
        let p = FieldPoly::new(vec![1, 0, 1]);
        assert!(p.is_squarefree(&f3));
    }

    #[test]
    fn squarefree_in_an_extension_field() {
        // over F_4, x^2 + x + 1 = (x - w)(x - w^2) splits squarefree
        let f4 = FiniteField::new(2, 2).unwrap();
        let p = FieldPoly::new(vec![1, 1, 1]);
        assert!(p.is_squarefree(&f4));
        // (x - w)^2 = x^2 + w^2 (char 2)
        let w = 2u32;
        let sq = FieldPoly::x_minus(&f4, w).mul(&f4, &FieldPoly::x_minus(&f4, w));
        assert!(!sq.is_squarefree(&f4));
    }

    #[test]
    fn monic_normalization() {
        let f = f5();
        let p = FieldPoly::new(vec![2, 4]);
        let m = p.monic(&f);
        assert!(m.is_monic());
        // 4^{-1} = 4 in F_5, so 2 * 4 = 3
        assert_eq!(m.coeffs(), &[3, 1]);
    }
}
