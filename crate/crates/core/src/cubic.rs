//! The specialized cubics f_m(X) = X^3 + mX + m and the binary cubic form
//! F_m(X,Y): Galois classification, total reality, and the Tschirnhausen
//! equivalence of f_m with F_m(X,1).

use crate::error::{Error, Result};
use crate::poly::{resultant, Poly};
use crate::{exact, int, rat_int, Int, IntPoly, Rat, RatPoly};
use num_traits::{One, Zero};

/// f_m(X) = X^3 + mX + m.
pub fn f_poly(m: &Int) -> IntPoly {
    Poly::new(vec![m.clone(), m.clone(), Int::zero(), Int::one()])
}

/// F_m(X,1) = X^3 - 2mX^2 - 9mX - m(2m+27).
pub fn big_form_poly(m: &Int) -> IntPoly {
    Poly::new(vec![
        -(m * (m * 2i64 + 27i64)),
        m * -9i64,
        m * -2i64,
        Int::one(),
    ])
}

/// The binary cubic form F_m(X,Y) = X^3 - 2mX^2Y - 9mXY^2 - m(2m+27)Y^3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCubicForm {
    m: Int,
}

impl BinaryCubicForm {
    pub fn new(m: Int) -> Self {
        BinaryCubicForm { m }
    }

    pub fn value(&self, x: &Int, y: &Int) -> Int {
        form_value(&self.m, x, y)
    }
}

/// Exact value of F_m at an integer point.
pub fn form_value(m: &Int, x: &Int, y: &Int) -> Int {
    let x2 = x * x;
    let y2 = y * y;
    x * &x2 - m * 2i64 * &x2 * y - m * 9i64 * x * &y2 - m * (m * 2i64 + 27i64) * &y2 * y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaloisTag {
    S3,
    C3,
    C2,
}

impl std::fmt::Display for GaloisTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GaloisTag::S3 => write!(f, "S3"),
            GaloisTag::C3 => write!(f, "C3"),
            GaloisTag::C2 => write!(f, "C2"),
        }
    }
}

/// Galois group of f_m over the rationals, with the C3 witness
/// b >= 0 satisfying m = -b^2 - b - 7 when cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisClass {
    pub tag: GaloisTag,
    pub c3_witness: Option<Int>,
}

impl GaloisClass {
    /// Number of rational roots of the resolvent when the fields coincide.
    pub fn mu(&self) -> u32 {
        match self.tag {
            GaloisTag::S3 => 1,
            GaloisTag::C3 => 3,
            GaloisTag::C2 => 2,
        }
    }
}

/// Classify Gal_Q f_m using only integer predicates: m = -8 is the single
/// reducible case, and the group is C3 exactly when -(4m+27) is a perfect
/// (odd) square.
pub fn classify(m: &Int) -> Result<GaloisClass> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if *m == int(-8) {
        return Ok(GaloisClass {
            tag: GaloisTag::C2,
            c3_witness: None,
        });
    }
    let neg_disc_core = -(m * 4i64 + 27i64);
    if let Some(a) = exact::is_perfect_square(&neg_disc_core) {
        // a = 2b + 1 is odd since 4m + 27 is odd
        let b = (&a - 1i64) / 2i64;
        debug_assert_eq!(-(&b * &b) - &b - 7i64, *m);
        return Ok(GaloisClass {
            tag: GaloisTag::C3,
            c3_witness: Some(b),
        });
    }
    Ok(GaloisClass {
        tag: GaloisTag::S3,
        c3_witness: None,
    })
}

/// The splitting field is totally real iff m <= -7.
pub fn is_totally_real(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    Ok(*m <= int(-7))
}

/// Verify both resultant identities tying f_m to F_m(X,1):
/// the forward map 2X^2 - 3X + 2m and its inverse
/// (2Z^2 - (4m+9)Z - 6m) / (4m+27).
pub fn tschirnhausen_check(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let mr = Rat::from_integer(m.clone());
    let c = |v: Rat| -> RatPoly { Poly::constant(v) };

    // Res_X(f_m(X), Z - (2X^2 - 3X + 2m)), eliminating X over Q[Z].
    let fm_outer: Poly<RatPoly> = Poly::new(vec![
        c(mr.clone()),
        c(mr.clone()),
        RatPoly::zero(),
        c(Rat::one()),
    ]);
    let z_minus_map: Poly<RatPoly> = Poly::new(vec![
        Poly::new(vec![-(&mr * rat_int(2)), Rat::one()]), // Z - 2m
        c(rat_int(3)),
        c(rat_int(-2)),
    ]);
    let forward = resultant(&fm_outer, &z_minus_map)?;
    let want_forward = big_form_poly(m).map(|v| Rat::from_integer(v.clone()));
    if forward != want_forward {
        return Ok(false);
    }

    // Res_Z(F_m(Z,1), X - (2Z^2 - (4m+9)Z - 6m)/(4m+27)), eliminating Z over Q[X].
    let den = &mr * rat_int(4) + rat_int(27);
    let big = big_form_poly(m);
    let big_outer: Poly<RatPoly> = Poly::new(
        big.coeffs()
            .iter()
            .map(|v| c(Rat::from_integer(v.clone())))
            .collect(),
    );
    let x_minus_map: Poly<RatPoly> = Poly::new(vec![
        Poly::new(vec![&mr * rat_int(6) / &den, Rat::one()]), // X + 6m/(4m+27)
        c((&mr * rat_int(4) + rat_int(9)) / &den),
        c(rat_int(-2) / &den),
    ]);
    let inverse = resultant(&big_outer, &x_minus_map)?;
    let want_inverse = f_poly(m).map(|v| Rat::from_integer(v.clone()));
    Ok(inverse == want_inverse)
}
