//! Exact integer utilities: factorization, divisor enumeration, perfect
//! power tests, squarefree parts.
//!
//! Trial division handles everything the admissible-lambda machinery needs
//! (the constituents |m| and |4m+27| stay small); a rho fallback with
//! Miller-Rabin covers the larger cofactors that show up in test oracles.

use crate::error::{Error, Result};
use crate::Int;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_BOUND: u64 = 1_000_000;

/// Signed prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i32,
    pub factors: Vec<(Int, u32)>,
}

impl Factorization {
    /// Reconstruct the factored value.
    pub fn value(&self) -> Int {
        let mut v = Int::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    /// Raise to a positive power (multiplies exponents).
    pub fn pow(&self, k: u32) -> Self {
        Factorization {
            sign: if k.is_multiple_of(2) {
                self.sign.abs()
            } else {
                self.sign
            },
            factors: self
                .factors
                .iter()
                .map(|(p, e)| (p.clone(), e * k))
                .collect(),
        }
    }

    /// Product of two factorizations, merging exponents.
    pub fn mul(&self, other: &Self) -> Self {
        let mut map: std::collections::BTreeMap<Int, u32> = std::collections::BTreeMap::new();
        for (p, e) in self.factors.iter().chain(other.factors.iter()) {
            *map.entry(p.clone()).or_insert(0) += e;
        }
        Factorization {
            sign: self.sign * other.sign,
            factors: map.into_iter().collect(),
        }
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<Int> {
        let mut out = vec![Int::one()];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
            let mut pk = Int::one();
            for _ in 0..=*e {
                for d in &out {
                    next.push(d * &pk);
                }
                pk *= p;
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Exact prime factorization of a nonzero integer.
pub fn factorize(v: &Int) -> Result<Factorization> {
    if v.is_zero() {
        return Err(Error::ZeroValue);
    }
    let sign = if v.is_negative() { -1 } else { 1 };
    let mut n = v.abs();
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut push = |p: Int, e: u32, factors: &mut Vec<(Int, u32)>| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            factors.push((p, e));
        }
    };

    for d in std::iter::once(2u64).chain((3..=TRIAL_BOUND).step_by(2)) {
        let dd = Int::from(d);
        if (&dd * &dd) > n {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = n.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            push(dd, e, &mut factors);
        }
        if n.is_one() {
            break;
        }
    }
    if !n.is_one() {
        // cofactor is free of primes up to the trial bound
        factor_large(&n, &mut factors, &mut push)?;
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { sign, factors })
}

fn factor_large(
    n: &Int,
    factors: &mut Vec<(Int, u32)>,
    push: &mut impl FnMut(Int, u32, &mut Vec<(Int, u32)>),
) -> Result<()> {
    let nv = n.to_u128().ok_or(Error::FactorTooLarge)?;
    let mut stack = vec![nv];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime_u128(c) {
            push(Int::from(c), 1, factors);
            continue;
        }
        let f = pollard_rho(c);
        stack.push(f);
        stack.push(c / f);
    }
    Ok(())
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let (Some(a64), Some(b64), Some(m64)) = (
        u64::try_from(a).ok(),
        u64::try_from(b).ok(),
        u64::try_from(m).ok(),
    ) {
        return (a64 as u128) * (b64 as u128) % (m64 as u128);
    }
    // double-and-add; m < 2^127 keeps the additions in range
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin; deterministic for inputs below 2^64, fixed extended base
/// set above that.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    let mut bases: Vec<u128> = vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n >= 1 << 64 {
        // deterministic extra witnesses derived from n
        let mut x = (n as u64) ^ 0x9e37_79b9_7f4a_7c15;
        for _ in 0..16 {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            bases.push(2 + (x as u128) % (n - 3));
        }
    }
    'next: for a in bases {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'next;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let step = |v: u128| (mul_mod(v, v, n) + c) % n;
        let mut count = 0u64;
        while d == 1 {
            x = step(x);
            y = step(step(y));
            let diff = x.abs_diff(y);
            d = gcd_u128(diff, n);
            count += 1;
            if count > 1 << 26 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// All positive lambda with lambda^2 dividing |D|, ascending, straight from
/// the factorization of D.
pub fn square_divisor_roots(f: &Factorization) -> Vec<Int> {
    let halved = Factorization {
        sign: 1,
        factors: f
            .factors
            .iter()
            .filter(|(_, e)| *e >= 2)
            .map(|(p, e)| (p.clone(), e / 2))
            .collect(),
    };
    halved.divisors()
}

/// Square root when `v` is a perfect square of an integer >= 0.
pub fn is_perfect_square(v: &Int) -> Option<Int> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    if &(&r * &r) == v {
        Some(r)
    } else {
        None
    }
}

/// Cube root when `v` is a perfect cube (any sign).
pub fn integer_cube_root(v: &Int) -> Option<Int> {
    let r = v.cbrt();
    if &(&r * &r * &r) == v {
        Some(r)
    } else {
        None
    }
}

/// The unique squarefree s with v = s * t^2, sign preserved.
pub fn squarefree_part(v: &Int) -> Result<Int> {
    let f = factorize(v)?;
    let mut s = Int::from(f.sign);
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            s *= p;
        }
    }
    Ok(s)
}

/// Smallest-prime-factor sieve for bulk factoring of bounded values; the
/// range scanner leans on this instead of per-value trial division.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: usize) -> Self {
        let mut spf: Vec<u32> = (0..=limit as u32).collect();
        let mut i = 2usize;
        while i * i <= limit {
            if spf[i] == i as u32 {
                let mut j = i * i;
                while j <= limit {
                    if spf[j] == j as u32 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        SpfSieve { spf }
    }

    pub fn factor(&self, mut v: u64) -> Vec<(u64, u32)> {
        assert!((v as usize) < self.spf.len());
        let mut out: Vec<(u64, u32)> = Vec::new();
        while v > 1 {
            let p = self.spf[v as usize] as u64;
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }

    /// Signed squarefree part of a small integer.
    pub fn squarefree_part(&self, v: i64) -> i64 {
        assert!(v != 0);
        let mut s: i64 = if v < 0 { -1 } else { 1 };
        for (p, e) in self.factor(v.unsigned_abs()) {
            if e % 2 == 1 {
                s *= p as i64;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_oracle(v: i64) -> Vec<(i64, u32)> {
        let mut n = v.unsigned_abs();
        let mut out = Vec::new();
        let mut d = 2u64;
        while d * d <= n {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d as i64, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n as i64, 1));
        }
        out
    }

    #[test]
    fn factorize_examples() {
        // 52488 = |(-6)^3 (4*(-6)+27)^5| = 2^3 * 3^8
        let f = factorize(&Int::from(52488)).unwrap();
        assert_eq!(f.sign, 1);
        assert_eq!(f.factors, vec![(Int::from(2), 3), (Int::from(3), 8)]);
        let one = factorize(&Int::one()).unwrap();
        assert_eq!(one.sign, 1);
        assert!(one.factors.is_empty());
        let neg = factorize(&Int::from(-343)).unwrap();
        assert_eq!(neg.sign, -1);
        assert_eq!(neg.factors, vec![(Int::from(7), 3)]);
        assert_eq!(factorize(&Int::zero()).unwrap_err(), Error::ZeroValue);
    }

    #[test]
    fn factorize_round_trip_random() {
        let mut state = 0x243f6a8885a308d3u64;
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let v = (state % 2_000_000_000) as i64 - 1_000_000_000;
            if v == 0 {
                continue;
            }
            let f = factorize(&Int::from(v)).unwrap();
            assert_eq!(f.value(), Int::from(v));
            let oracle = trial_division_oracle(v);
            let got: Vec<(i64, u32)> = f
                .factors
                .iter()
                .map(|(p, e)| (i64::try_from(p).unwrap(), *e))
                .collect();
            assert_eq!(got, oracle, "v={v}");
        }
    }

    #[test]
    fn factorize_large_cofactor() {
        // product of two primes beyond the trial bound
        let p = Int::from(1_000_003u64);
        let q = Int::from(15_485_863u64);
        let f = factorize(&(&p * &q)).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn square_divisor_roots_examples() {
        // D for m = -6: 2^3 * 3^8
        let f = factorize(&Int::from(52488)).unwrap();
        let want: Vec<Int> = [1, 2, 3, 6, 9, 18, 27, 54, 81, 162]
            .iter()
            .map(|&v| Int::from(v))
            .collect();
        assert_eq!(square_divisor_roots(&f), want);
        // D for m = -7: |(-7)^3 * (-1)^5| = 343
        let f = factorize(&Int::from(343)).unwrap();
        assert_eq!(square_divisor_roots(&f), vec![Int::one(), Int::from(7)]);
        let f = factorize(&Int::one()).unwrap();
        assert_eq!(square_divisor_roots(&f), vec![Int::one()]);
    }

    #[test]
    fn square_divisor_roots_brute_force() {
        for d in [52488i64, 1600000, 43046721, 720, 997, 1] {
            let f = factorize(&Int::from(d)).unwrap();
            let got = square_divisor_roots(&f);
            let mut brute = Vec::new();
            let mut mu = 1i64;
            while mu * mu <= d {
                if d % (mu * mu) == 0 {
                    brute.push(Int::from(mu));
                }
                mu += 1;
            }
            assert_eq!(got, brute, "d={d}");
            for lam in &got {
                assert!(Int::from(d).is_multiple_of(&(lam * lam)));
            }
        }
    }

    #[test]
    fn perfect_square_and_cube_examples() {
        assert_eq!(is_perfect_square(&Int::from(49)), Some(Int::from(7)));
        assert_eq!(is_perfect_square(&Int::zero()), Some(Int::zero()));
        assert_eq!(is_perfect_square(&Int::from(1300)), None);
        assert_eq!(is_perfect_square(&Int::from(-4)), None);
        assert_eq!(integer_cube_root(&Int::one()), Some(Int::one()));
        assert_eq!(integer_cube_root(&Int::from(-8)), Some(Int::from(-2)));
        assert_eq!(integer_cube_root(&Int::from(50)), None);
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(squarefree_part(&Int::from(5)).unwrap(), Int::from(5));
        assert_eq!(squarefree_part(&Int::from(12)).unwrap(), Int::from(3));
        assert_eq!(squarefree_part(&Int::from(-4)).unwrap(), Int::from(-1));
        // cofactor square reconstructs the value
        for v in [720i64, -24300, 17, -1, 123456] {
            let s = squarefree_part(&Int::from(v)).unwrap();
            let t2 = Int::from(v) / &s;
            assert!(is_perfect_square(&t2).is_some(), "v={v}");
        }
    }

    #[test]
    fn spf_sieve_matches_factorize() {
        let sieve = SpfSieve::new(10_000);
        for v in [2u64, 9, 97, 360, 9999, 1024] {
            let a = sieve.factor(v);
            let b = factorize(&Int::from(v)).unwrap();
            let b64: Vec<(u64, u32)> = b
                .factors
                .iter()
                .map(|(p, e)| (u64::try_from(p).unwrap(), *e))
                .collect();
            assert_eq!(a, b64);
        }
        assert_eq!(sieve.squarefree_part(-300), -3);
    }
}
