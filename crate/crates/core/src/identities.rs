//! Certificate suite for the divisor condition: the resultant value
//! r_m = Res(g, h) = m^12 (4m+27)^18, the explicit Bezout cofactors p, q
//! with g p + h q = m^3 (4m+27)^5, and the homogenized form of the same
//! identity. Together these force lambda^2 | m^3 (4m+27)^5 for every
//! primitive solution.

use crate::cubic;
use crate::error::{Error, Result};
use crate::poly::{resultant, Poly};
use crate::thue::PrimitiveSolution;
use crate::{int, Int, IntPoly};
use num_integer::Integer;
use num_traits::{One, Zero};

/// g(u) = m (u^2 + 9u - 3m)^3.
pub fn g_poly(m: &Int) -> IntPoly {
    let quad = Poly::new(vec![m * -3i64, int(9), Int::one()]);
    quad.pow(3).scale(m)
}

/// h(u) = F_m(u, 1)^2.
pub fn h_poly(m: &Int) -> IntPoly {
    let f = cubic::big_form_poly(m);
    &f * &f
}

/// The degree-5 cofactor p(u) (leading coefficient -15).
pub fn p_cofactor(m: &Int) -> IntPoly {
    Poly::new(vec![
        -(m * (m * m * m * 28i64 + m * m * 636i64 + m * 3591i64 - 1458i64)),
        -(m * 6i64 * (m * m * 26i64 + m * 339i64 + 162i64)),
        -(m * 3i64 * (m * m * 4i64 + m * 125i64 - 135i64)),
        -(m * m * 48i64 - m * 176i64 + 27i64),
        m * 57i64 + 27i64,
        int(-15),
    ])
}

/// The degree-5 cofactor q(u) (leading coefficient 15m).
pub fn q_cofactor(m: &Int) -> IntPoly {
    Poly::new(vec![
        m * m * m * 67i64 + m * m * 2538i64 + m * 11664i64 + 19683i64,
        m * m * 45i64 - m * 7290i64 - 13122i64,
        -(m * m * 26i64 + m * 1809i64 - 5103i64),
        -(m * 68i64 - 2943i64),
        m * 3i64 + 378i64,
        int(15),
    ])
    .scale(m)
}

/// m^3 (4m+27)^5, the common divisor target.
pub fn divisor_target(m: &Int) -> Int {
    m.pow(3) * (m * 4i64 + 27i64).pow(5)
}

/// Res(g, h) through the full 12x12 Sylvester determinant equals
/// m^12 (4m+27)^18.
pub fn resultant_value_check(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let r = resultant(&g_poly(m), &h_poly(m))?;
    Ok(r == m.pow(12) * (m * 4i64 + 27i64).pow(18))
}

/// g p + h q expands to the constant m^3 (4m+27)^5.
pub fn bezout_identity_check(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let lhs = &(&g_poly(m) * &p_cofactor(m)) + &(&h_poly(m) * &q_cofactor(m));
    Ok(lhs == Poly::constant(divisor_target(m)))
}

/// The homogenized identity G P + F^2 Q = m^3 (4m+27)^5 y^11 at an integer
/// point (G = y^6 g(x/y), P = y^5 p(x/y), Q = y^5 q(x/y)).
pub fn homogenized_identity_check(m: &Int, x: &Int, y: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if y.is_zero() {
        return Err(Error::ZeroY);
    }
    let big_g = g_poly(m).eval_homogeneous(x, y);
    let big_p = p_cofactor(m).eval_homogeneous(x, y);
    let big_q = q_cofactor(m).eval_homogeneous(x, y);
    let f = cubic::form_value(m, x, y);
    let lhs = big_g * big_p + &f * &f * big_q;
    Ok(lhs == divisor_target(m) * y.pow(11))
}

/// lambda^2 divides m^3 (4m+27)^5 for a valid solution.
pub fn divisor_conclusion_check(m: &Int, s: &PrimitiveSolution) -> bool {
    divisor_target(m).is_multiple_of(&(&s.lambda * &s.lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;

    #[test]
    fn g_and_h_match_their_expansions() {
        // expanded coefficient formulas, highest degree first:
        // g: m, 27m, -9(m-27)m, -81m(2m-9), 27(m-27)m^2, 243m^3, -27m^4
        // h: 1, -4m, 2m(2m-9), 2m(16m-27), m^2(8m+189), 18m^2(2m+27),
        //    m^2(2m+27)^2
        for m in [-9i64, -6, 1, 14] {
            let mi = int(m);
            let g_want = Poly::new(vec![
                -mi.pow(4) * 27i64,
                mi.pow(3) * 243i64,
                (&mi - 27i64) * &mi * &mi * 27i64,
                -(&mi * 2i64 - 9i64) * &mi * 81i64,
                -(&mi - 27i64) * &mi * 9i64,
                &mi * 27i64,
                mi.clone(),
            ]);
            assert_eq!(g_poly(&mi), g_want, "m={m}");
            let m2 = &mi * &mi;
            let h_want = Poly::new(vec![
                &m2 * (&mi * 2i64 + 27i64).pow(2),
                &m2 * 18i64 * (&mi * 2i64 + 27i64),
                &m2 * (&mi * 8i64 + 189i64),
                &mi * 2i64 * (&mi * 16i64 - 27i64),
                &mi * 2i64 * (&mi * 2i64 - 9i64),
                &mi * -4i64,
                Int::one(),
            ]);
            assert_eq!(h_poly(&mi), h_want, "m={m}");
        }
    }

    #[test]
    fn cofactors_pinned_at_m_one() {
        // transcription guard: hand-expanded constants at m = 1
        assert_eq!(
            p_cofactor(&Int::one()),
            int_poly(&[-2797, -3162, 18, 101, 84, -15])
        );
        assert_eq!(
            q_cofactor(&Int::one()),
            int_poly(&[33952, -20367, 3268, 2875, 381, 15])
        );
    }

    #[test]
    fn resultant_value_examples() {
        // m = -6: (-6)^12 * 3^18; m = 1: 31^18; m = -7: 7^12
        for m in [-6i64, 1, -7] {
            assert!(resultant_value_check(&int(m)).unwrap(), "m={m}");
        }
        assert_eq!(
            resultant_value_check(&Int::zero()).unwrap_err(),
            Error::ZeroM
        );
    }

    #[test]
    fn bezout_examples() {
        for (m, want) in [(-6i64, -52488i64), (1, 28629151), (-8, 1600000)] {
            let mi = int(m);
            assert!(bezout_identity_check(&mi).unwrap(), "m={m}");
            assert_eq!(divisor_target(&mi), int(want), "m={m}");
        }
    }

    #[test]
    fn homogenized_examples() {
        assert!(homogenized_identity_check(&int(-6), &int(-4), &Int::one()).unwrap());
        assert!(homogenized_identity_check(&int(-4), &int(-1384), &int(365)).unwrap());
        assert!(homogenized_identity_check(&Int::one(), &Int::zero(), &Int::one()).unwrap());
        assert_eq!(
            homogenized_identity_check(&int(3), &int(1), &Int::zero()).unwrap_err(),
            Error::ZeroY
        );
    }

    #[test]
    fn divisor_conclusion_examples() {
        let s = PrimitiveSolution::new(&int(-6), int(-13), int(3)).unwrap();
        assert_eq!(s.lambda, int(-1));
        assert!(divisor_conclusion_check(&int(-6), &s));
        let s = PrimitiveSolution::new(&int(-9), Int::zero(), Int::one()).unwrap();
        assert_eq!(s.lambda, int(81));
        assert!(divisor_conclusion_check(&int(-9), &s));
        let s = PrimitiveSolution::new(&int(-8), int(-34), int(7)).unwrap();
        assert_eq!(s.lambda, int(400));
        assert!(divisor_conclusion_check(&int(-8), &s));
    }
}
