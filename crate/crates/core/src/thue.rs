//! Primitive solutions of the cubic Thue equations F_m(x,y) = lambda and the
//! correspondence between solutions and field overlaps.
//!
//! Solution search runs y upward and extracts the integer roots of the
//! resulting cubic in x exactly; completeness therefore holds up to the
//! configured y bound (no rigorous bound on y is implemented -- the search
//! is bound-limited by design).

use crate::cubic::{self, GaloisTag};
use crate::error::{Error, Result};
use crate::exact;
use crate::poly::Poly;
use crate::resolvent;
use crate::roots::integer_roots;
use crate::{int, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A normalized primitive solution (x, y) with its form value lambda.
///
/// Invariants: gcd(x,y) = 1; y > 0, or y = 0 with x = 1; gcd(lambda, y) = 1;
/// lambda = F_m(x, y) exactly. The point (-1, 0) is excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveSolution {
    pub x: Int,
    pub y: Int,
    pub lambda: Int,
}

impl PrimitiveSolution {
    /// Validate and build a solution for parameter m.
    pub fn new(m: &Int, x: Int, y: Int) -> Result<Self> {
        if y.is_negative() {
            return Err(Error::InvalidSolution(format!("y = {y} < 0")));
        }
        if y.is_zero() && !x.is_one() {
            return Err(Error::InvalidSolution(format!("({x}, 0) not normalized")));
        }
        if !x.gcd(&y).is_one() {
            return Err(Error::InvalidSolution(format!("gcd({x}, {y}) > 1")));
        }
        let lambda = cubic::form_value(m, &x, &y);
        debug_assert!(lambda.gcd(&y).is_one());
        Ok(PrimitiveSolution { x, y, lambda })
    }

    /// The rational root x/y of the resolvent, when y > 0.
    pub fn as_root(&self) -> Option<Rat> {
        if self.y.is_zero() {
            None
        } else {
            Some(Rat::new(self.x.clone(), self.y.clone()))
        }
    }
}

/// All positive lambda whose square divides m^3 (4m+27)^5, ascending.
///
/// The factorization is assembled from |m| and |4m+27| separately; the
/// combined value would be large while its constituents stay small.
pub fn lambda_candidates(m: &Int) -> Result<Vec<Int>> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let fm = exact::factorize(m)?.pow(3);
    let fd = exact::factorize(&(m * 4i64 + 27i64))?.pow(5);
    Ok(exact::square_divisor_roots(&fm.mul(&fd)))
}

/// All primitive solutions of F_m(x,y) = lambda with 0 <= y <= y_bound,
/// sorted by (y, x).
pub fn solve_thue(m: &Int, lambda: &Int, y_bound: u64) -> Result<Vec<PrimitiveSolution>> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let mut out = Vec::new();
    // y = 0: x^3 = lambda with x > 0 and gcd(x, 0) = x = 1
    if lambda.is_one() {
        out.push(PrimitiveSolution {
            x: Int::one(),
            y: Int::zero(),
            lambda: Int::one(),
        });
    }
    for yv in 1..=y_bound {
        let y = Int::from(yv);
        let y2 = &y * &y;
        let cubic_in_x = Poly::new(vec![
            -(m * (m * 2i64 + 27i64)) * &y2 * &y - lambda,
            m * -9i64 * &y2,
            m * -2i64 * &y,
            Int::one(),
        ]);
        for x in integer_roots(&cubic_in_x) {
            if x.gcd(&y).is_one() {
                debug_assert_eq!(cubic::form_value(m, &x, &y), *lambda);
                out.push(PrimitiveSolution {
                    x,
                    y: y.clone(),
                    lambda: lambda.clone(),
                });
            }
        }
    }
    out.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    Ok(out)
}

/// The partner parameter n determined by a solution, computed from
/// n = m (x^2 + 9xy - 3my^2)^3 / lambda^2 and cross-checked against the
/// additive form m + m(4m+27) phi_m(x,y) / lambda^2.
pub fn n_from_solution(m: &Int, s: &PrimitiveSolution) -> Rat {
    let (x, y) = (&s.x, &s.y);
    let core = x * x + x * y * 9i64 - m * 3i64 * y * y;
    let num = m * (&core * &core * &core);
    let lam2 = &s.lambda * &s.lambda;
    let n = Rat::new(num, lam2.clone());
    let alt = Rat::from_integer(m.clone()) + Rat::new(m * (m * 4i64 + 27i64) * phi(m, x, y), lam2);
    assert_eq!(n, alt, "the two partner formulas disagree");
    n
}

/// phi_m(x,y) = y (x^2+9xy+27y^2+my^2)(x^3 - m x^2 y - m^2 y^3).
pub fn phi(m: &Int, x: &Int, y: &Int) -> Int {
    let x2 = x * x;
    let y2 = y * y;
    let a = &x2 + x * y * 9i64 + &y2 * 27i64 + m * &y2;
    let b = x * &x2 - m * &x2 * y - m * m * &y2 * y;
    y * a * b
}

/// The solutions mapping a parameter to itself: (1,0) always, the two
/// witness solutions in the cyclic case, and (-4,1) for m = -8.
pub fn self_pair_solutions(m: &Int) -> Result<Vec<PrimitiveSolution>> {
    let class = cubic::classify(m)?;
    let mut out = vec![PrimitiveSolution {
        x: Int::one(),
        y: Int::zero(),
        lambda: Int::one(),
    }];
    match class.tag {
        GaloisTag::S3 => {}
        GaloisTag::C3 => {
            let b = class.c3_witness.expect("C3 carries its witness");
            let s1 = PrimitiveSolution::new(m, &b - 4i64, Int::one())?;
            let s2 = PrimitiveSolution::new(m, -&b - 5i64, Int::one())?;
            let cube = (&b * 2i64 + 1i64).pow(3);
            debug_assert_eq!(s1.lambda, -&cube);
            debug_assert_eq!(s2.lambda, cube);
            out.push(s1);
            out.push(s2);
        }
        GaloisTag::C2 => {
            let s = PrimitiveSolution::new(m, int(-4), Int::one())?;
            debug_assert_eq!(s.lambda, int(-8));
            out.push(s);
        }
    }
    out.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
    for s in &out {
        debug_assert_eq!(n_from_solution(m, s), Rat::from_integer(m.clone()));
    }
    Ok(out)
}

/// Why a partner value is excluded from the field correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Excluded {
    NZero,
    NCritical,
}

impl std::fmt::Display for Excluded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Excluded::NZero => write!(f, "n_zero"),
            Excluded::NCritical => write!(f, "n_critical"),
        }
    }
}

/// One row of the overlap table for a fixed m.
#[derive(Debug, Clone)]
pub struct OverlapRecord {
    pub m: Int,
    pub n: Rat,
    pub solution: PrimitiveSolution,
    pub n_integral: bool,
    pub excluded: Option<Excluded>,
}

/// Every (lambda, solution, n) row for the parameter m with y <= y_bound,
/// sorted by (|lambda|, sign, y, x) with positive lambda first.
///
/// Integer partners other than m itself are re-verified through the
/// resolvent before being emitted.
pub fn enumerate_overlaps(m: &Int, y_bound: u64) -> Result<Vec<OverlapRecord>> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let critical = Rat::new(int(-27), int(4));
    let mut rows = Vec::new();
    for lam_abs in lambda_candidates(m)? {
        for lam in [lam_abs.clone(), -&lam_abs] {
            for sol in solve_thue(m, &lam, y_bound)? {
                let n = n_from_solution(m, &sol);
                let excluded = if n.is_zero() {
                    debug_assert!(resolvent::special_n_zero(m)?.is_some());
                    Some(Excluded::NZero)
                } else if n == critical {
                    debug_assert!(resolvent::special_n_critical(m)?);
                    Some(Excluded::NCritical)
                } else {
                    None
                };
                let n_integral = n.is_integer();
                if n_integral && excluded.is_none() && n.to_integer() != *m {
                    let rep = resolvent::isom_test(m, &n.to_integer())?;
                    assert!(
                        rep.same_field,
                        "thue row (m={m}, n={n}) fails the resolvent test"
                    );
                }
                rows.push(OverlapRecord {
                    m: m.clone(),
                    n,
                    solution: sol,
                    n_integral,
                    excluded,
                });
            }
        }
    }
    rows.sort_by(|a, b| {
        let ka = (
            a.solution.lambda.abs(),
            a.solution.lambda.is_negative(),
            a.solution.y.clone(),
            a.solution.x.clone(),
        );
        let kb = (
            b.solution.lambda.abs(),
            b.solution.lambda.is_negative(),
            b.solution.y.clone(),
            b.solution.x.clone(),
        );
        ka.cmp(&kb)
    });
    Ok(rows)
}

/// Distinct integer partners (including m itself), ascending, excluding the
/// flagged special values.
pub fn integer_overlaps(rows: &[OverlapRecord]) -> Vec<Int> {
    let mut ns: Vec<Int> = rows
        .iter()
        .filter(|r| r.n_integral && r.excluded.is_none())
        .map(|r| r.n.to_integer())
        .collect();
    ns.sort();
    ns.dedup();
    ns
}

/// Count bound: mu * #(integer partners) <= #(primitive solutions found).
pub fn count_bound_check(m: &Int, y_bound: u64) -> Result<bool> {
    let rows = enumerate_overlaps(m, y_bound)?;
    let mu = cubic::classify(m)?.mu() as usize;
    let ints = integer_overlaps(&rows);
    Ok(ints.len() * mu <= rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn sol(m: i64, x: i64, y: i64) -> PrimitiveSolution {
        PrimitiveSolution::new(&int(m), int(x), int(y)).unwrap()
    }

    #[test]
    fn lambda_candidate_examples() {
        let got: Vec<i64> = lambda_candidates(&int(-7))
            .unwrap()
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(got, vec![1, 7]);
        let got: Vec<i64> = lambda_candidates(&int(-8))
            .unwrap()
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(
            got,
            vec![1, 2, 4, 5, 8, 10, 16, 20, 25, 40, 50, 80, 100, 200, 400]
        );
        let got: Vec<i64> = lambda_candidates(&int(-9))
            .unwrap()
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(got, vec![1, 3, 9, 27, 81, 243, 729, 2187, 6561]);
    }

    #[test]
    fn solve_thue_examples() {
        let sols = solve_thue(&int(-10), &int(-5), 10).unwrap();
        assert_eq!(sols, vec![sol(-10, -5, 1)]);
        let sols = solve_thue(&int(-4), &int(-484), 400).unwrap();
        assert!(sols.contains(&sol(-4, -1384, 365)));
        for m in [-7i64, 3, 19] {
            let sols = solve_thue(&int(m), &Int::one(), 0).unwrap();
            assert!(sols.contains(&sol(m, 1, 0)));
        }
        assert_eq!(
            solve_thue(&int(3), &Int::zero(), 5).unwrap_err(),
            Error::ZeroLambda
        );
    }

    #[test]
    fn primitive_solution_invariants() {
        assert!(PrimitiveSolution::new(&int(-6), int(2), int(4)).is_err());
        assert!(PrimitiveSolution::new(&int(-6), int(-1), Int::zero()).is_err());
        assert!(PrimitiveSolution::new(&int(-6), int(3), int(-1)).is_err());
        let s = sol(-6, -4, 1);
        assert_eq!(s.lambda, int(2));
    }

    #[test]
    fn n_from_solution_examples() {
        assert_eq!(
            n_from_solution(&int(-6), &sol(-6, -4, 1)),
            Rat::from_integer(int(12))
        );
        assert_eq!(
            n_from_solution(&int(-10), &sol(-10, -5, 1)),
            Rat::from_integer(int(-400))
        );
        for m in [-9i64, 2, 31] {
            assert_eq!(
                n_from_solution(&int(m), &sol(m, 1, 0)),
                Rat::from_integer(int(m))
            );
        }
    }

    #[test]
    fn self_pairs_examples() {
        let s9 = self_pair_solutions(&int(-9)).unwrap();
        assert_eq!(s9, vec![sol(-9, 1, 0), sol(-9, -6, 1), sol(-9, -3, 1)]);
        assert_eq!(s9[1].lambda, int(27));
        assert_eq!(s9[2].lambda, int(-27));
        let s8 = self_pair_solutions(&int(-8)).unwrap();
        assert_eq!(s8, vec![sol(-8, 1, 0), sol(-8, -4, 1)]);
        assert_eq!(s8[1].lambda, int(-8));
        let s10 = self_pair_solutions(&int(-10)).unwrap();
        assert_eq!(s10, vec![sol(-10, 1, 0)]);
    }

    #[test]
    fn enumerate_examples() {
        // m = -5: integer partners are the self value and 625
        let rows = enumerate_overlaps(&int(-5), 10).unwrap();
        assert_eq!(integer_overlaps(&rows), vec![int(-5), int(625)]);
        // m = 3: self only
        let rows = enumerate_overlaps(&int(3), 10).unwrap();
        assert_eq!(integer_overlaps(&rows), vec![int(3)]);
        // m = -7 at a modest bound already finds all four partners
        let rows = enumerate_overlaps(&int(-7), 10).unwrap();
        assert_eq!(
            integer_overlaps(&rows),
            vec![int(-1588867), int(-189), int(-49), int(-7)]
        );
    }

    #[test]
    fn count_bound_examples() {
        assert!(count_bound_check(&int(-7), 1000).unwrap());
        assert!(count_bound_check(&int(-8), 1000).unwrap());
        assert!(count_bound_check(&int(5), 1000).unwrap());
    }

    #[test]
    fn eq_identity_on_random_triples() {
        // m(x^2+9xy-3my^2)^3 - m F^2 = m(4m+27) phi_m(x,y) as integers
        let mut state = 0x1234_5678_9abc_def0u64;
        for _ in 0..100 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let m = int((state % 401) as i64 - 200);
            let x = int(((state >> 13) % 201) as i64 - 100);
            let y = int(((state >> 29) % 100) as i64 + 1);
            if m.is_zero() {
                continue;
            }
            let core = &x * &x + &x * &y * 9i64 - &m * 3i64 * &y * &y;
            let f = cubic::form_value(&m, &x, &y);
            let lhs = &m * (&core * &core * &core) - &m * (&f * &f);
            let rhs = &m * (&m * 4i64 + 27i64) * phi(&m, &x, &y);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn phi_factorization_at_c3_parameters() {
        // phi factors through (x - (b-4)y)(x + (b+5)y) when m = -b^2-b-7;
        // verified on a grid exceeding the bivariate degree.
        for b in 0i64..=50 {
            let m = int(-b * b - b - 7);
            for x in -4i64..=4 {
                for y in 1i64..=7 {
                    let q = int(b * b + b + 7);
                    let lhs = phi(&m, &int(x), &int(y));
                    let f1 = int(x) - (int(b - 4)) * int(y);
                    let f2 = int(x) + (int(b + 5)) * int(y);
                    let x2 = int(x * x);
                    let f3 = int(x * x * x) + &q * &x2 * int(y) - &q * &q * int(y * y * y);
                    assert_eq!(lhs, int(y) * f1 * f2 * f3, "b={b} x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn multiplicity_per_partner() {
        // C3 parameter: every integer partner is hit by exactly 3 solutions;
        // the C2 parameter by exactly 2.
        let rows = enumerate_overlaps(&int(-9), 100).unwrap();
        for n in integer_overlaps(&rows) {
            let hits = rows
                .iter()
                .filter(|r| r.n_integral && r.excluded.is_none() && r.n.to_integer() == n)
                .count();
            assert_eq!(hits, 3, "n={n}");
        }
        let rows = enumerate_overlaps(&int(-8), 100).unwrap();
        for n in integer_overlaps(&rows) {
            let hits = rows
                .iter()
                .filter(|r| r.n_integral && r.excluded.is_none() && r.n.to_integer() == n)
                .count();
            assert_eq!(hits, 2, "n={n}");
        }
    }
}
