//! Dense univariate polynomial algebra over an exact scalar ring.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! empty vector is the zero polynomial. Resultants go through the Sylvester
//! matrix with fraction-free Bareiss elimination so that every intermediate
//! value stays in the coefficient ring.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * X^k.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of X^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Coefficient reversal of the dense degree-d representation: X^d * p(1/X).
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_u32(k as u32))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(T::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact polynomial division; panics if the division is not exact.
    pub fn exact_div_poly(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "non-exact polynomial division");
        q
    }

    /// Euclidean division by a divisor whose leading coefficient divides
    /// every intermediate leading term (always true over a field; used over
    /// rings only where exactness is guaranteed).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.coeffs.last().unwrap().exact_div(&lead);
            let shift = rd - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                let t = rem.coeffs[shift + i].clone() - c.clone() * f.clone();
                rem.coeffs[shift + i] = t;
            }
            rem.normalize();
            q[shift] = f;
        }
        (Poly::new(q), rem)
    }

    /// Remainder modulo `d` (exact field-style reduction).
    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }
}

impl<T: Scalar> std::ops::Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> std::ops::Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> std::ops::Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = coeffs[i + j].clone() + a.clone() * b.clone();
                coeffs[i + j] = t;
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> std::ops::Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

// Polynomials over a scalar ring are themselves scalars; this is what makes
// bivariate resultants (elimination over ring-of-polynomials coefficients)
// come out of the same Bareiss code path.
impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Scalar> std::ops::Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Scalar> std::ops::Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Scalar> std::ops::Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Scalar> std::ops::Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Scalar for Poly<T> {
    fn exact_div(&self, other: &Self) -> Self {
        self.exact_div_poly(other)
    }
    fn from_u32(v: u32) -> Self {
        Poly::constant(T::from_u32(v))
    }
}

impl<T: Scalar> std::fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c:?}"),
                1 => format!("({c:?})*X"),
                _ => format!("({c:?})*X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Convenience constructor from machine integers (ascending degree).
pub fn int_poly(coeffs: &[i64]) -> Poly<BigInt> {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

impl Poly<BigInt> {
    /// Evaluate an integer polynomial at an exact rational point.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        self.map(|c| BigRational::from_integer(c.clone())).eval(x)
    }

    /// Evaluate the homogenization y^d * p(x/y) at an integer point.
    pub fn eval_homogeneous(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let d = match self.degree() {
            None => return BigInt::zero(),
            Some(d) => d,
        };
        let mut acc = BigInt::zero();
        let mut ypow = BigInt::one();
        let mut terms: Vec<BigInt> = Vec::with_capacity(d + 1);
        for c in self.coeffs.iter().rev() {
            terms.push(c * &ypow);
            ypow *= y;
        }
        for t in &terms {
            acc = acc * x + t;
        }
        acc
    }

    /// Remove the integer content (gcd of coefficients), keeping the sign.
    pub fn primitive_part(&self) -> Poly<BigInt> {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.map(|c| c / &g)
    }
}

/// Clear denominators: smallest positive integer multiple with integer
/// coefficients, together with the multiplier used.
pub fn clear_denominators(p: &Poly<BigRational>) -> (Poly<BigInt>, BigInt) {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let q = p.map(|c| {
        let scaled = c * BigRational::from_integer(l.clone());
        debug_assert!(scaled.is_integer());
        scaled.to_integer()
    });
    (q, l)
}

/// Resultant of two nonzero polynomials as the determinant of their
/// Sylvester matrix (fraction-free Bareiss elimination).
///
/// Convention: `resultant(p, q) = lc(p)^deg(q) * prod q(alpha_i)` over the
/// roots of `p`.
pub fn resultant<T: Scalar>(p: &Poly<T>, q: &Poly<T>) -> Result<T> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    if dp == 0 {
        let mut acc = T::one();
        for _ in 0..dq {
            acc = acc * p.coeffs()[0].clone();
        }
        return Ok(acc);
    }
    if dq == 0 {
        let mut acc = T::one();
        for _ in 0..dp {
            acc = acc * q.coeffs()[0].clone();
        }
        return Ok(acc);
    }
    let n = dp + dq;
    let mut m: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for i in 0..dq {
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..dp {
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            m[dq + i][i + j] = c.clone();
        }
    }
    Ok(bareiss_determinant(m))
}

/// Fraction-free determinant; all divisions are exact in the ring.
pub fn bareiss_determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Discriminant `(-1)^(d(d-1)/2) * resultant(p, p') / lc(p)` for deg >= 2.
pub fn discriminant<T: Scalar>(p: &Poly<T>) -> Result<T> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 2 {
        return Err(Error::LowDegree);
    }
    let r = resultant(p, &p.derivative())?;
    let lc = p.leading().unwrap();
    let q = r.exact_div(lc);
    if (d * (d - 1) / 2) % 2 == 1 {
        Ok(-q)
    } else {
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn eval_examples() {
        // f_{-8}(-2) = 0 and constant-term evaluation at 0
        let f8 = int_poly(&[-8, -8, 0, 1]);
        let at = BigRational::from_integer(BigInt::from(-2));
        assert!(f8.eval_rat(&at).is_zero());
        assert_eq!(
            f8.eval_rat(&BigRational::zero()),
            BigRational::from_integer(BigInt::from(-8))
        );
        // (X^3 - 2)(5/4) = -3/64
        let p = int_poly(&[-2, 0, 0, 1]);
        let x = BigRational::new(BigInt::from(5), BigInt::from(4));
        assert_eq!(
            p.eval_rat(&x),
            BigRational::new(BigInt::from(-3), BigInt::from(64))
        );
    }

    #[test]
    fn resultant_linear_case() {
        // Res(X - 2, X - 3) = q(2) = -1
        let p = int_poly(&[-2, 1]);
        let q = int_poly(&[-3, 1]);
        assert_eq!(resultant(&p, &q).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn resultant_rejects_zero() {
        let z: Poly<BigInt> = Poly::zero();
        assert_eq!(
            resultant(&z, &int_poly(&[1, 1])).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn discriminant_examples() {
        // disc(f_m) = -m^2 (4m+27): m = -7 gives 49, m = -3 gives -135
        for (m, want) in [(-7i64, 49i64), (-3, -135)] {
            let f = int_poly(&[m, m, 0, 1]);
            assert_eq!(discriminant(&f).unwrap(), BigInt::from(want));
        }
        assert_eq!(
            discriminant(&int_poly(&[-1, 0, 1])).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            discriminant(&int_poly(&[1, 1])).unwrap_err(),
            Error::LowDegree
        );
    }

    #[test]
    fn discriminant_matches_root_product_form() {
        // disc of (X-a)(X-b)(X-c) equals ((a-b)(b-c)(c-a))^2
        let cases = [(1i64, 2i64, 5i64), (-3, 0, 4), (-7, -2, 9), (2, 2, 3)];
        for (a, b, c) in cases {
            let p = &(&int_poly(&[-a, 1]) * &int_poly(&[-b, 1])) * &int_poly(&[-c, 1]);
            let want = BigInt::from((a - b) * (b - c) * (c - a)).pow(2);
            assert_eq!(discriminant(&p).unwrap(), want);
        }
    }

    #[test]
    fn reverse_examples() {
        let p = int_poly(&[2, 0, 0, 1]); // X^3 + 2
        assert_eq!(p.reverse(), int_poly(&[1, 0, 0, 2]));
        let q = int_poly(&[3, -1, 4]);
        assert_eq!(q.reverse().reverse(), q);
    }

    #[test]
    fn reverse_swaps_reciprocal_roots() {
        let p = int_poly(&[-6, 1, 1]); // (X-2)(X+3)
        let r = p.reverse();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(r.eval_rat(&half).is_zero());
    }

    #[test]
    fn bivariate_resultant_through_poly_scalars() {
        // Res_X(X^2 - Z, X - 3) = 9 - Z, eliminating X over Z-polynomials.
        let z: Poly<BigRational> = Poly::monomial(BigRational::one(), 1);
        let c = |v: i64| Poly::constant(BigRational::from_integer(BigInt::from(v)));
        // p(X) = X^2 - Z: coefficients in ascending X-degree
        let p: Poly<Poly<BigRational>> = Poly::new(vec![-z, c(0), c(1)]);
        let q: Poly<Poly<BigRational>> = Poly::new(vec![c(-3), c(1)]);
        let r = resultant(&p, &q).unwrap();
        let mut expected = Poly::new(vec![
            BigRational::from_integer(BigInt::from(9)),
            -BigRational::one(),
        ]);
        assert_eq!(r, expected);
        expected = r;
        assert_eq!(
            expected.eval(&BigRational::from_integer(BigInt::from(9))),
            BigRational::zero()
        );
    }

    #[test]
    fn division_round_trip() {
        let a = int_poly(&[1, 2, 0, 5, -3, 7]);
        let b = int_poly(&[3, 0, 1]);
        let prod = &a * &b;
        let (q, r) = prod.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, a);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor() {
        // Cross-checked against a small exact gcd on rational polynomials.
        fn gcd_nonconstant(p: &Poly<BigRational>, q: &Poly<BigRational>) -> bool {
            let (mut a, mut b) = (p.clone(), q.clone());
            while !b.is_zero() {
                let r = a.rem(&b);
                a = b;
                b = r;
            }
            a.degree().is_some_and(|d| d > 0)
        }
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 41) as i64 - 20
        };
        for _ in 0..200 {
            let deg_p = 1 + (next().unsigned_abs() as usize) % 4;
            let deg_q = 1 + (next().unsigned_abs() as usize) % 4;
            let mut pc: Vec<i64> = (0..=deg_p).map(|_| next()).collect();
            let mut qc: Vec<i64> = (0..=deg_q).map(|_| next()).collect();
            if pc[deg_p] == 0 {
                pc[deg_p] = 1;
            }
            if qc[deg_q] == 0 {
                qc[deg_q] = 1;
            }
            let p = int_poly(&pc);
            let q = int_poly(&qc);
            let r = resultant(&p, &q).unwrap();
            let pr = p.map(|c| BigRational::from_integer(c.clone()));
            let qr = q.map(|c| BigRational::from_integer(c.clone()));
            assert_eq!(r.is_zero(), gcd_nonconstant(&pr, &qr), "{p:?} {q:?}");
        }
    }

    #[test]
    fn homogeneous_evaluation() {
        let p = int_poly(&[-1, 0, 3, 2]); // 2X^3 + 3X^2 - 1
        let x = BigInt::from(5);
        let y = BigInt::from(3);
        // y^3 * p(x/y) = 2*125 + 3*25*3 - 27
        assert_eq!(p.eval_homogeneous(&x, &y), BigInt::from(250 + 225 - 27));
        assert!(p
            .eval_homogeneous(&BigInt::from(7), &BigInt::zero())
            .abs()
            .eq(&BigInt::from(2 * 343)));
    }
}
