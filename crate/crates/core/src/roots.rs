//! Exact integer and rational root extraction for integer polynomials.
//!
//! Integer roots are found by sieving residues modulo a pool of primes and
//! CRT-combining until the modulus exceeds twice an exact root bound; every
//! surviving candidate is verified by exact evaluation. No floating point is
//! involved, so the root set is complete by construction.

use crate::error::{Error, Result};
use crate::exact;
use crate::poly::Poly;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut n = start;
    while primes.len() < count {
        if exact::is_prime_u128(n as u128) {
            primes.push(n);
        }
        n += 2;
    }
    primes
}

/// Large primes used for CRT reconstruction of integer roots.
fn prime_pool() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| primes_from(1009, 96))
}

/// Small primes used only to dismiss rootless polynomials cheaply.
fn screen_primes() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| primes_from(101, 32))
}

/// All roots of `c` modulo `p` by direct scan (the pool primes are small).
fn roots_mod_p(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for x in 0..p {
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = (acc * x + c) % p;
        }
        if acc == 0 {
            out.push(x);
        }
    }
    out
}

/// Cheap sound pre-filter: `false` certifies that `p` has no rational root.
///
/// A rational root x/y (lowest terms) has y dividing the leading
/// coefficient, so modulo any pool prime not dividing the leading
/// coefficient it reduces to a root of p mod p. Scanning a handful of such
/// primes dismisses almost all rootless polynomials without big-integer
/// work; `true` only means the full extraction must run.
pub fn has_rational_root_prefilter(p: &Poly<Int>, tries: usize) -> bool {
    let lead = match p.leading() {
        None => return false,
        Some(l) => l,
    };
    if p.coeff(0).is_zero() {
        return true; // root 0
    }
    let mut used = 0usize;
    for &q in screen_primes() {
        if used >= tries {
            break;
        }
        let qi = Int::from(q);
        if lead.mod_floor(&qi).is_zero() {
            continue;
        }
        let cq: Vec<u64> = p
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&qi).to_u64().unwrap())
            .collect();
        if roots_mod_p(&cq, q).is_empty() {
            return false;
        }
        used += 1;
    }
    true
}

/// Exact bound on the absolute value of any root (Fujiwara-style, rounded
/// outward in integer arithmetic).
fn root_bound(p: &Poly<Int>) -> Int {
    let d = p.degree().unwrap();
    let lead = p.leading().unwrap().abs();
    let mut best = Int::one();
    for (i, c) in p.coeffs().iter().enumerate().take(d) {
        if c.is_zero() {
            continue;
        }
        let ratio = (c.abs() + &lead - 1i64) / &lead;
        let r = ratio.nth_root((d - i) as u32) + 1i64;
        if r > best {
            best = r;
        }
    }
    best * 2i64
}

/// All integer roots of a nonzero integer polynomial, ascending.
pub fn integer_roots(p: &Poly<Int>) -> Vec<Int> {
    assert!(!p.is_zero());
    let mut roots = Vec::new();
    let mut q = p.clone();
    // strip powers of X
    let mut stripped = false;
    while q.coeff(0).is_zero() {
        q = Poly::new(q.coeffs()[1..].to_vec());
        stripped = true;
    }
    if stripped {
        roots.push(Int::zero());
    }
    let d = match q.degree() {
        None | Some(0) => {
            return roots;
        }
        Some(d) => d,
    };
    let q = q.primitive_part();
    if d == 1 {
        let (quot, rem) = (-q.coeff(0)).div_rem(&q.coeff(1));
        if rem.is_zero() {
            roots.push(quot);
        }
        roots.sort();
        return roots;
    }

    // cheap screen: an integer root reduces to a root modulo every prime
    for &sp in screen_primes().iter().take(4) {
        let spi = Int::from(sp);
        let cq: Vec<u64> = q
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&spi).to_u64().unwrap())
            .collect();
        if cq.iter().any(|&c| c != 0) && roots_mod_p(&cq, sp).is_empty() {
            return roots;
        }
    }

    let bound = root_bound(&q);
    let target = &bound * 2i64 + 1i64;
    // (residue, modulus) combinations, refined prime by prime
    let mut combos: Vec<(Int, Int)> = vec![(Int::zero(), Int::one())];
    for &p in prime_pool() {
        let modulus_done = combos.first().is_none_or(|(_, m)| *m >= target);
        if modulus_done {
            break;
        }
        let cp: Vec<u64> = q
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&Int::from(p)).to_u64().unwrap())
            .collect();
        let rp = roots_mod_p(&cp, p);
        if rp.is_empty() {
            return roots;
        }
        let pi = Int::from(p);
        let mut next = Vec::with_capacity(combos.len() * rp.len());
        for (r, m) in &combos {
            let m_mod_p = m.mod_floor(&pi).to_u64().unwrap();
            let inv = mod_inverse_u64(m_mod_p % p, p);
            for &s in &rp {
                let r_mod_p = r.mod_floor(&pi).to_u64().unwrap();
                let k = ((s + p - r_mod_p % p) % p * inv) % p;
                next.push((r + m * Int::from(k), m * &pi));
            }
        }
        combos = next;
        assert!(combos.len() <= 1 << 20, "root sieve blow-up");
    }
    assert!(
        combos.first().is_none_or(|(_, m)| *m >= target),
        "prime pool exhausted before covering the root bound"
    );
    for (r, m) in combos {
        let half = &m >> 1;
        let centered = if r > half { r - &m } else { r };
        if centered.abs() <= bound && q.eval(&centered).is_zero() {
            roots.push(centered);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime and a nonzero mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    ((t.rem_euclid(p as i128)) as u64) % p
}

/// Exactly the rational roots of `p` (no multiplicity), ascending.
///
/// A root x/y in lowest terms has y dividing the leading coefficient, so we
/// enumerate positive divisors y and extract integer roots of the
/// y-specialized homogenization.
pub fn rational_roots(p: &Poly<Int>) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out: Vec<Rat> = Vec::new();
    let mut q = p.clone();
    while q.coeff(0).is_zero() {
        q = Poly::new(q.coeffs()[1..].to_vec());
        if q.is_zero() {
            break;
        }
        if out.is_empty() {
            out.push(Rat::zero());
        }
    }
    let d = match q.degree() {
        None | Some(0) => {
            out.sort();
            return Ok(out);
        }
        Some(d) => d,
    };
    let q = q.primitive_part();
    let lead = q.leading().unwrap().abs();
    let ys = exact::factorize(&lead).expect("nonzero leading").divisors();
    for y in ys {
        let specialized = Poly::new(
            q.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * y.pow((d - i) as u32))
                .collect(),
        );
        for x in integer_roots(&specialized) {
            if x.gcd(&y).is_one() {
                out.push(Rat::new(x, y.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;

    /// Brute-force oracle: try every +-(divisor of constant)/(divisor of
    /// leading) with exact evaluation.
    fn brute_rational_roots(p: &Poly<Int>) -> Vec<Rat> {
        let mut q = p.clone();
        let mut out = Vec::new();
        while q.coeff(0).is_zero() {
            q = Poly::new(q.coeffs()[1..].to_vec());
            if out.is_empty() {
                out.push(Rat::zero());
            }
        }
        if q.degree().is_none_or(|d| d == 0) {
            out.sort();
            return out;
        }
        let c0 = q.coeff(0).abs();
        let lc = q.leading().unwrap().abs();
        let xs = exact::factorize(&c0).unwrap().divisors();
        let ys = exact::factorize(&lc).unwrap().divisors();
        for x in &xs {
            for y in &ys {
                for sgn in [1i64, -1] {
                    let cand = Rat::new(x * Int::from(sgn), y.clone());
                    if q.eval_rat(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn integer_roots_examples() {
        let p = int_poly(&[-6, 11, -6, 1]); // (X-1)(X-2)(X-3)
        assert_eq!(
            integer_roots(&p),
            vec![Int::from(1), Int::from(2), Int::from(3)]
        );
        let q = int_poly(&[0, 0, -4, 1]); // X^2 (X - 4)
        assert_eq!(integer_roots(&q), vec![Int::zero(), Int::from(4)]);
        let none = int_poly(&[1, 0, 1]);
        assert!(integer_roots(&none).is_empty());
    }

    #[test]
    fn integer_roots_match_scan_oracle() {
        let mut state = 0xa5a5a5a5deadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let deg = 2 + (next() % 5) as usize;
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| (next() % 201) as i64 - 100).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            // plant an integer root half the time
            let p = if next() % 2 == 0 {
                let r = (next() % 61) as i64 - 30;
                &int_poly(&coeffs) * &int_poly(&[-r, 1])
            } else {
                int_poly(&coeffs)
            };
            if p.is_zero() {
                continue;
            }
            let got = integer_roots(&p);
            let mut want = Vec::new();
            for x in -4000i64..=4000 {
                if p.eval(&Int::from(x)).is_zero() {
                    want.push(Int::from(x));
                }
            }
            assert_eq!(got, want, "p={p:?}");
        }
    }

    #[test]
    fn rational_roots_examples() {
        // f_{-8} has the single rational root -2
        let f8 = int_poly(&[-8, -8, 0, 1]);
        assert_eq!(
            rational_roots(&f8).unwrap(),
            vec![Rat::from_integer(Int::from(-2))]
        );
        assert!(rational_roots(&int_poly(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&Poly::zero()).unwrap_err(),
            Error::ZeroPolynomial
        );
        // (2X - 3)(X + 5)(3X + 1)
        let p = &(&int_poly(&[-3, 2]) * &int_poly(&[5, 1])) * &int_poly(&[1, 3]);
        let want: Vec<Rat> = vec![
            Rat::from_integer(Int::from(-5)),
            Rat::new(Int::from(-1), Int::from(3)),
            Rat::new(Int::from(3), Int::from(2)),
        ];
        assert_eq!(rational_roots(&p).unwrap(), want);
    }

    #[test]
    fn rational_roots_agree_with_divisor_pair_oracle() {
        let mut state = 0x0123456789abcdefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let deg = 1 + (next() % 4) as usize;
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| (next() % 41) as i64 - 20).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 7;
            }
            let mut p = int_poly(&coeffs);
            if next() % 2 == 0 {
                let num = (next() % 19) as i64 - 9;
                let den = 1 + (next() % 6) as i64;
                p = &p * &int_poly(&[-num, den]);
            }
            if p.is_zero() || p.coeff(0).is_zero() && p.degree() == Some(0) {
                continue;
            }
            assert_eq!(
                rational_roots(&p).unwrap(),
                brute_rational_roots(&p),
                "p={p:?}"
            );
        }
    }

    #[test]
    fn large_coefficient_roots() {
        // (X - 10^12)(X + 3) exercises the multi-prime CRT path
        let big = Int::from(1_000_000_000_000i64);
        let p = &Poly::new(vec![-big.clone(), Int::one()]) * &int_poly(&[3, 1]);
        assert_eq!(integer_roots(&p), vec![Int::from(-3), big]);
    }
}
