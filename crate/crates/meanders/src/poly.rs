use std::fmt;

/// Laurent polynomial in one variable with exact integer coefficients.
///
/// Stored densely as `coeffs[i]` = coefficient of `A^(lo + i)`, with the
/// invariant that the first and last stored coefficients are nonzero (the zero
/// polynomial stores nothing). Coefficient arithmetic is checked: the state
/// sums and transfer-matrix sweeps this crate runs stay far below `i64` range
/// (coefficients are bounded by `3^n` for an `n`-crossing diagram), and any
/// overflow aborts loudly instead of wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    lo: i32,
    coeffs: Vec<i64>,
}

#[inline]
fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("laurent coefficient overflow")
}

#[inline]
fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("laurent coefficient overflow")
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * A^e`.
    pub fn monomial(e: i32, c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPolynomial { lo: e, coeffs: vec![c] }
        }
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `-A^2 - A^-2`, the Kauffman loop value.
    pub fn loop_value() -> Self {
        Self::from_terms(&[(2, -1), (-2, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo)
        }
    }

    pub fn max_exp(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i32 - 1)
        }
    }

    /// max_exp - min_exp, or 0 for constants and zero.
    pub fn span(&self) -> i32 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn coeff(&self, e: i32) -> i64 {
        if self.is_zero() || e < self.lo || e > self.max_exp().unwrap() {
            0
        } else {
            self.coeffs[(e - self.lo) as usize]
        }
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        if self.is_zero() {
            self.lo = e;
            self.coeffs.push(c);
            return;
        }
        let hi = self.max_exp().unwrap();
        if e < self.lo {
            let mut v = vec![0; (hi - e + 1) as usize];
            v[0] = c;
            for (i, &x) in self.coeffs.iter().enumerate() {
                v[(self.lo - e) as usize + i] = x;
            }
            self.lo = e;
            self.coeffs = v;
        } else if e > hi {
            self.coeffs.resize((e - self.lo + 1) as usize, 0);
            *self.coeffs.last_mut().unwrap() = c;
        } else {
            let i = (e - self.lo) as usize;
            self.coeffs[i] = cadd(self.coeffs[i], c);
        }
        self.trim();
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (i, &c) in other.coeffs.iter().enumerate() {
            if c != 0 {
                self.add_term(other.lo + i as i32, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    /// Multiply in place by `c * A^e`.
    pub fn mul_monomial(&mut self, e: i32, c: i64) {
        if c == 0 {
            *self = Self::zero();
            return;
        }
        self.lo += e;
        if c != 1 {
            for x in &mut self.coeffs {
                *x = cmul(*x, c);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
                }
            }
        }
        let mut r = LaurentPolynomial { lo: self.lo + other.lo, coeffs };
        r.trim();
        r
    }

    /// The image under `A -> A^-1` (bracket of the mirror diagram).
    pub fn negate_exponents(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let hi = self.max_exp().unwrap();
        let mut coeffs: Vec<i64> = self.coeffs.clone();
        coeffs.reverse();
        let mut r = LaurentPolynomial { lo: -hi, coeffs };
        r.trim();
        r
    }

    /// Exact division, panicking on a nonzero remainder (used for the loop
    /// normalization `<D> = total / (-A^2 - A^-2)`, which is always exact).
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let dhi = divisor.max_exp().unwrap();
        let dlead = *divisor.coeffs.last().unwrap();
        while !rem.is_zero() {
            let rhi = rem.max_exp().unwrap();
            let rlead = *rem.coeffs.last().unwrap();
            assert!(rem.coeffs.len() >= divisor.coeffs.len(), "inexact polynomial division");
            assert!(rlead % dlead == 0, "inexact polynomial division");
            let qe = rhi - dhi;
            let qc = rlead / dlead;
            quot.add_term(qe, qc);
            let mut sub = divisor.clone();
            sub.mul_monomial(qe, -qc);
            rem.add_assign(&sub);
        }
        quot
    }

    /// Sorted (exponent, coefficient) pairs, ascending by exponent.
    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.lo + i as i32, c))
            .collect()
    }

    /// Evaluate at `A = exp(i*pi/4)` (a primitive 8th root of unity) in the
    /// Gaussian integers, as `(re, im)` where the value is `re + im*i`.
    /// Exponents must be even, which holds for every bracket polynomial.
    pub fn eval_zeta8(&self) -> (i64, i64) {
        let (mut re, mut im) = (0i64, 0i64);
        for (e, c) in self.terms() {
            assert!(e % 2 == 0, "bracket polynomial with odd exponent");
            // A^2 = i, so A^e = i^(e/2).
            match (e / 2).rem_euclid(4) {
                0 => re = cadd(re, c),
                1 => im = cadd(im, c),
                2 => re = cadd(re, -c),
                3 => im = cadd(im, -c),
                _ => unreachable!(),
            }
        }
        (re, im)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                1 => {
                    if a == 1 {
                        write!(f, "A")?;
                    } else {
                        write!(f, "{a}*A")?;
                    }
                }
                _ => {
                    if a == 1 {
                        write!(f, "A^{e}")?;
                    } else {
                        write!(f, "{a}*A^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_roundtrip() {
        let p = LaurentPolynomial::from_terms(&[(-3, 2), (0, -1), (4, 5)]);
        assert_eq!(p.terms(), vec![(-3, 2), (0, -1), (4, 5)]);
        assert_eq!(p.span(), 7);
        assert_eq!(p.coeff(0), -1);
        assert_eq!(p.coeff(2), 0);
    }

    #[test]
    fn mul_and_div_exact() {
        let d = LaurentPolynomial::loop_value();
        let p = LaurentPolynomial::from_terms(&[(-5, 1), (1, 3), (2, -2)]);
        let q = p.mul(&d);
        assert_eq!(q.div_exact(&d), p);
    }

    #[test]
    fn mirror_is_involution() {
        let p = LaurentPolynomial::from_terms(&[(-7, 1), (-3, -1), (5, -1)]);
        assert_eq!(p.negate_exponents().negate_exponents(), p);
        assert_eq!(p.negate_exponents().terms(), vec![(-5, -1), (3, -1), (7, 1)]);
    }

    #[test]
    fn zeta8_eval() {
        // A^4 = -1, A^8 = 1.
        let p = LaurentPolynomial::from_terms(&[(4, 1)]);
        assert_eq!(p.eval_zeta8(), (-1, 0));
        let q = LaurentPolynomial::from_terms(&[(2, 1), (0, 3)]);
        assert_eq!(q.eval_zeta8(), (3, 1));
    }
}
