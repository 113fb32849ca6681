//! The sextic resolvent R_{m,n}(X) = m(X^2+9X-3m)^3 - n F_m(X,1)^2 and the
//! field-isomorphism test built on it.
//!
//! Two constructions are kept side by side: the defining difference of products
//! and the expanded coefficient formulas; `build_resolvent` asserts they
//! agree. Decomposition types come from the joint-group table, driven by the
//! Galois classes, the rational-root count, and quadratic-subfield
//! comparison -- the sextic is never factored.

use crate::cubic::{self, GaloisClass, GaloisTag};
use crate::error::{Error, Result};
use crate::exact;
use crate::poly::Poly;
use crate::roots::rational_roots;
use crate::{int, rat_int, Int, IntPoly, Rat, RatPoly};
use num_traits::{One, Zero};

/// R_{m,n} with n admitted rational (the special value -27/4 included).
#[derive(Debug, Clone)]
pub struct ResolventSextic {
    pub m: Int,
    pub n: Rat,
    pub poly: RatPoly,
}

/// Expanded coefficients of R_{m,n}(X), ascending degree, for integer n.
pub fn resolvent_int_poly(m: &Int, n: &Int) -> IntPoly {
    let m2 = m * m;
    Poly::new(vec![
        -(&m2 * (m * m * n * 4i64 + m * m * 27i64 + m * n * 108i64 + n * 729i64)),
        -(&m2 * 9i64 * (m * n * 4i64 - m * 27i64 + n * 54i64)),
        -(&m2 * (m * n * 8i64 - m * 27i64 + n * 189i64 + 729i64)),
        -(m * (m * n * 32i64 + m * 162i64 - n * 54i64 - 729i64)),
        -(m * (m * n * 4i64 + m * 9i64 - n * 18i64 - 243i64)),
        m * (n * 4i64 + 27i64),
        m - n,
    ])
}

/// The defining difference form m(X^2+9X-3m)^3 - n F_m(X,1)^2 over the
/// rationals.
fn resolvent_difference_form(m: &Int, n: &Rat) -> RatPoly {
    let mr = Rat::from_integer(m.clone());
    let quad: RatPoly = Poly::new(vec![-(&mr * rat_int(3)), rat_int(9), Rat::one()]);
    let big = cubic::big_form_poly(m).map(|c| Rat::from_integer(c.clone()));
    let g = quad.pow(3).scale(&mr);
    let h2 = (&big * &big).scale(n);
    &g - &h2
}

/// Build R_{m,n} from both closed forms and require exact agreement.
pub fn build_resolvent(m: &Int, n: &Rat) -> Result<ResolventSextic> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let diff = resolvent_difference_form(m, n);
    // the expanded formulas, specialized over rationals
    let num = n.numer().clone();
    let den = n.denom().clone();
    // R_{m, p/q} = (1/q) * [q*m-part - p*F^2-part]; reuse the integer
    // expansion with n -> p against a q-scaled m-part.
    // R_{m,n} is affine in n, so R(m, p/q) = R(m,0) + (p/q)(R(m,1) - R(m,0))
    let expanded = {
        let at_zero = resolvent_int_poly(m, &Int::zero());
        let slope = &resolvent_int_poly(m, &Int::one()) - &at_zero;
        let g_rat = at_zero.map(|c| Rat::from_integer(c.clone()));
        let s_rat = slope.map(|c| Rat::from_integer(c.clone()));
        &g_rat + &s_rat.scale(&Rat::new(num, den))
    };
    assert_eq!(diff, expanded, "resolvent constructions disagree");
    Ok(ResolventSextic {
        m: m.clone(),
        n: n.clone(),
        poly: diff,
    })
}

/// disc R_{m,n} computed through the Sylvester matrix equals
/// m^10 (4m+27)^15 n^4 (4n+27)^3.
pub fn resolvent_discriminant_check(m: &Int, n: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if n.is_zero() {
        return Err(Error::ZeroN);
    }
    if m == n {
        return Err(Error::EqualParameters);
    }
    let r = resolvent_int_poly(m, n);
    let got = crate::poly::discriminant(&r)?;
    let want = m.pow(10) * (m * 4i64 + 27i64).pow(15) * n.pow(4) * (n * 4i64 + 27i64).pow(3);
    Ok(got == want)
}

/// Joint Galois group of f_m f_n per the decomposition-type table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointGroup {
    S3xS3,
    C3xC3SemiC2,
    S3,
    S3xC3,
    S3xC2,
    C3xC3,
    C3,
    C6,
    C2xC2,
    C2,
}

impl std::fmt::Display for JointGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            JointGroup::S3xS3 => "S3xS3",
            JointGroup::C3xC3SemiC2 => "(C3xC3):C2",
            JointGroup::S3 => "S3",
            JointGroup::S3xC3 => "S3xC3",
            JointGroup::S3xC2 => "S3xC2",
            JointGroup::C3xC3 => "C3xC3",
            JointGroup::C3 => "C3",
            JointGroup::C6 => "C6",
            JointGroup::C2xC2 => "C2xC2",
            JointGroup::C2 => "C2",
        };
        write!(f, "{s}")
    }
}

/// How the two splitting fields meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Intersection {
    Trivial,
    Quadratic,
    ContainsLn,
    Equal,
}

impl std::fmt::Display for Intersection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Intersection::Trivial => "trivial",
            Intersection::Quadratic => "quadratic",
            Intersection::ContainsLn => "contains_Ln",
            Intersection::Equal => "equal",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct IsomReport {
    pub m: Int,
    pub n: Int,
    pub same_field: bool,
    pub roots: Vec<Rat>,
    pub dt: Vec<u32>,
    pub group_pair: (GaloisClass, GaloisClass),
    pub joint_group: JointGroup,
    pub intersection: Intersection,
}

fn group_order(tag: GaloisTag) -> u32 {
    match tag {
        GaloisTag::S3 => 6,
        GaloisTag::C3 => 3,
        GaloisTag::C2 => 2,
    }
}

/// Decomposition-type lookup for the ordered pair (#G_m >= #G_n).
///
/// `quad_eq` compares the quadratic subfields (squarefree parts of
/// -(4m+27)); for the S3/C2 row it means "the S3 field contains Q(sqrt 5)".
/// The (C2, C2) row cannot arise for distinct nonzero integers but is kept
/// for completeness.
pub fn table1_lookup(
    gm: GaloisTag,
    gn: GaloisTag,
    same_field: bool,
    quad_eq: bool,
) -> (Vec<u32>, JointGroup, Intersection) {
    debug_assert!(group_order(gm) >= group_order(gn));
    match (gm, gn) {
        (GaloisTag::S3, GaloisTag::S3) => {
            if same_field {
                (vec![3, 2, 1], JointGroup::S3, Intersection::Equal)
            } else if quad_eq {
                (vec![3, 3], JointGroup::C3xC3SemiC2, Intersection::Quadratic)
            } else {
                (vec![6], JointGroup::S3xS3, Intersection::Trivial)
            }
        }
        (GaloisTag::S3, GaloisTag::C3) => (vec![6], JointGroup::S3xC3, Intersection::Trivial),
        (GaloisTag::S3, GaloisTag::C2) => {
            if quad_eq {
                (vec![3, 3], JointGroup::S3, Intersection::ContainsLn)
            } else {
                (vec![6], JointGroup::S3xC2, Intersection::Trivial)
            }
        }
        (GaloisTag::C3, GaloisTag::C3) => {
            if same_field {
                (vec![3, 1, 1, 1], JointGroup::C3, Intersection::Equal)
            } else {
                (vec![3, 3], JointGroup::C3xC3, Intersection::Trivial)
            }
        }
        (GaloisTag::C3, GaloisTag::C2) => (vec![6], JointGroup::C6, Intersection::Trivial),
        (GaloisTag::C2, GaloisTag::C2) => {
            if same_field {
                (vec![2, 2, 1, 1], JointGroup::C2, Intersection::Equal)
            } else {
                (vec![4, 2], JointGroup::C2xC2, Intersection::Trivial)
            }
        }
        _ => unreachable!("callers order the pair by group size"),
    }
}

/// Decide whether Spl f_m = Spl f_n, with the full joint-group report.
///
/// For m = n the quintic R_{m,m} is used and the answer is trivially yes;
/// n in {0, -27/4} is rejected (see the special-case operations).
pub fn isom_test(m: &Int, n: &Int) -> Result<IsomReport> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if n.is_zero() {
        return Err(Error::ZeroN);
    }
    let gm = cubic::classify(m)?;
    let gn = cubic::classify(n)?;
    if m == n {
        let r = resolvent_int_poly(m, n);
        debug_assert_eq!(r.degree(), Some(5));
        let roots = rational_roots(&r)?;
        debug_assert_eq!(roots.len() as u32, gm.mu() - 1);
        let dt = match gm.tag {
            GaloisTag::S3 => vec![3, 2],
            GaloisTag::C3 => vec![3, 1, 1],
            GaloisTag::C2 => vec![2, 2, 1],
        };
        let joint = match gm.tag {
            GaloisTag::S3 => JointGroup::S3,
            GaloisTag::C3 => JointGroup::C3,
            GaloisTag::C2 => JointGroup::C2,
        };
        return Ok(IsomReport {
            m: m.clone(),
            n: n.clone(),
            same_field: true,
            roots,
            dt,
            group_pair: (gm, gn),
            joint_group: joint,
            intersection: Intersection::Equal,
        });
    }

    let r = resolvent_int_poly(m, n);
    debug_assert_eq!(
        r.map(|c| Rat::from_integer(c.clone())),
        resolvent_difference_form(m, &Rat::from_integer(n.clone()))
    );
    let roots = rational_roots(&r)?;
    let same_field = !roots.is_empty();
    if same_field {
        debug_assert_eq!(roots.len() as u32, gm.mu());
    }

    // order by group size for the table lookup
    let (big, small) = if group_order(gm.tag) >= group_order(gn.tag) {
        (&gm, &gn)
    } else {
        (&gn, &gm)
    };
    let big_param = if std::ptr::eq(big, &gm) { m } else { n };
    let small_param = if std::ptr::eq(big, &gm) { n } else { m };
    let quad_eq = match (big.tag, small.tag) {
        (GaloisTag::S3, GaloisTag::S3) => {
            exact::squarefree_part(&-(big_param * 4i64 + 27i64))?
                == exact::squarefree_part(&-(small_param * 4i64 + 27i64))?
        }
        (GaloisTag::S3, GaloisTag::C2) => {
            exact::squarefree_part(&-(big_param * 4i64 + 27i64))? == int(5)
        }
        _ => false,
    };
    let (dt, joint_group, intersection) = table1_lookup(big.tag, small.tag, same_field, quad_eq);
    Ok(IsomReport {
        m: m.clone(),
        n: n.clone(),
        same_field,
        roots,
        dt,
        group_pair: (gm, gn),
        joint_group,
        intersection,
    })
}

/// Check the displayed factorization of the reversed self-resolvent:
/// X^6 R_{m,m}(1/X) = -m(4m+27) X ((m+27)X^2+9X+1) (m^2 X^3 + mX - 1).
pub fn self_resolvent_factor_check(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let r = resolvent_int_poly(m, m);
    // X^6 R(1/X) for the quintic R: one factor of X times the degree-5 reversal
    let lhs = &Poly::monomial(Int::one(), 1) * &r.reverse();
    let scale = -(m * (m * 4i64 + 27i64));
    let quad = Poly::new(vec![Int::one(), int(9), m + 27i64]);
    let cubicf = Poly::new(vec![-Int::one(), m.clone(), Int::zero(), m * m]);
    let rhs = (&(&Poly::monomial(Int::one(), 1) * &quad) * &cubicf).scale(&scale);
    Ok(lhs == rhs)
}

/// Witness c with m = 3c(c+3), when it exists (then R_{m,0} has a rational
/// root and n = 0 must be excluded from the correspondence).
///
/// Both c and -c-3 solve; the representative with c >= -1 is returned.
pub fn special_n_zero(m: &Int) -> Result<Option<Int>> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if !(m % 3i64).is_zero() {
        return Ok(None);
    }
    let disc = m / 3i64 * 4i64 + 9i64;
    match exact::is_perfect_square(&disc) {
        Some(t) => {
            // t is odd because disc is odd
            let c = (&t - 3i64) / 2i64;
            debug_assert_eq!(&(&c * (&c + 3i64)) * 3i64, *m);
            debug_assert!(c >= int(-1));
            Ok(Some(c))
        }
        None => Ok(None),
    }
}

/// R_{m,-27/4} has a rational root iff m = -8.
pub fn special_n_critical(m: &Int) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    Ok(*m == int(-8))
}

/// The eight integer pairs (m, n) with vanishing resolvent constant term,
/// i.e. 4m^2 n + 27m^2 + 108mn + 729n = 0 with m, n nonzero and n != m.
pub fn constant_term_pairs() -> Vec<(Int, Int)> {
    let mut out = Vec::new();
    let mut divs: Vec<i64> = Vec::new();
    for d in [1i64, 3, 9, 27, 81, 243] {
        divs.push(d);
        divs.push(-d);
    }
    for d in divs {
        // 2m + 27 = d
        let m = int((d - 27) / 2);
        if m.is_zero() {
            continue;
        }
        let num = -(&m * &m) * 27i64;
        let den = int(d * d);
        if !(&num % &den).is_zero() {
            continue;
        }
        let n = num / den;
        if n == m || n.is_zero() {
            continue;
        }
        out.push((m, n));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
