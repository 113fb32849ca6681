//! Matching solutions across the two orientations of a field overlap.
//!
//! A rational root u of R_{m,n} corresponds to a quadratic map
//! eta = c0 + c1*theta + c2*theta^2 carrying the roots of f_m onto the
//! roots of f_n, with u = 3 c1 / c2 and c0 = 2m c2 / 3. Given u the only
//! unknown is the scale t = c2, pinned down exactly as the common rational
//! root of three cubic equations in the quotient ring Q[X]/(f_m). The
//! partner root of R_{n,m} is read off the inverse map. Everything here is
//! exact rational arithmetic.

use crate::cubic;
use crate::error::{Error, Result};
use crate::poly::{clear_denominators, Poly};
use crate::roots::rational_roots;
use crate::{rat_int, Int, Rat, RatPoly};
use num_traits::{One, Zero};

/// A root-carrying quadratic map between two of the specialized cubics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    pub c0: Rat,
    pub c1: Rat,
    pub c2: Rat,
}

impl Transformation {
    fn as_poly(&self) -> RatPoly {
        Poly::new(vec![self.c0.clone(), self.c1.clone(), self.c2.clone()])
    }

    /// The resolvent root this map corresponds to.
    pub fn root(&self) -> Rat {
        assert!(!self.c2.is_zero(), "affine maps only arise for m = n");
        rat_int(3) * &self.c1 / &self.c2
    }
}

fn f_rat_poly(m: &Int) -> RatPoly {
    cubic::f_poly(m).map(|c| Rat::from_integer(c.clone()))
}

/// Recover the transformation attached to a rational root u of R_{m,n}.
pub fn transformation_for_root(m: &Int, n: &Int, u: &Rat) -> Result<Transformation> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    if n.is_zero() {
        return Err(Error::ZeroN);
    }
    let fm = f_rat_poly(m);
    let third = Rat::new(Int::one(), Int::from(3));
    // w = X^2 + (u/3) X + 2m/3; the map is t * w(theta)
    let w: RatPoly = Poly::new(vec![
        Rat::from_integer(m.clone()) * rat_int(2) * &third,
        u * &third,
        Rat::one(),
    ]);
    let w3 = (&(&w * &w) * &w).rem(&fm);
    let nr = Rat::from_integer(n.clone());
    // f_n(t w) = t^3 w^3 + n t w + n = 0 in Q[X]/(f_m): three equations in t
    let eqs: Vec<RatPoly> = (0..3)
        .map(|k| {
            Poly::new(vec![
                if k == 0 { nr.clone() } else { Rat::zero() },
                &nr * w.coeff(k),
                Rat::zero(),
                w3.coeff(k),
            ])
        })
        .collect();
    let mut candidates: Option<Vec<Rat>> = None;
    for eq in &eqs {
        if eq.is_zero() {
            continue;
        }
        let (ip, _) = clear_denominators(eq);
        let roots = rational_roots(&ip)?;
        candidates = Some(match candidates {
            None => roots,
            Some(prev) => prev.into_iter().filter(|t| roots.contains(t)).collect(),
        });
    }
    let ts: Vec<Rat> = candidates
        .unwrap_or_default()
        .into_iter()
        .filter(|t| !t.is_zero())
        .collect();
    if ts.len() != 1 {
        return Err(Error::InvalidSolution(format!(
            "u = {u} is not a resolvent root for (m, n) = ({m}, {n})"
        )));
    }
    let t = ts.into_iter().next().unwrap();
    let tr = Transformation {
        c0: Rat::from_integer(m.clone()) * rat_int(2) * third.clone() * &t,
        c1: u * third * &t,
        c2: t,
    };
    debug_assert!(carries_roots(m, n, &tr));
    Ok(tr)
}

/// Exact check that f_n(map(X)) = 0 mod f_m(X).
pub fn carries_roots(m: &Int, n: &Int, tr: &Transformation) -> bool {
    let fm = f_rat_poly(m);
    let r = tr.as_poly();
    let r2 = (&r * &r).rem(&fm);
    let r3 = (&r2 * &r).rem(&fm);
    let nr = Rat::from_integer(n.clone());
    let composed = &(&r3 + &r.scale(&nr)) + &Poly::constant(nr);
    composed.rem(&fm).is_zero()
}

/// Invert a root-carrying map by solving for theta in the basis
/// 1, eta, eta^2 of Q[X]/(f_m).
pub fn invert_transformation(m: &Int, tr: &Transformation) -> Transformation {
    let fm = f_rat_poly(m);
    let r = tr.as_poly();
    let r2 = (&r * &r).rem(&fm);
    let col = |p: &RatPoly, k: usize| p.coeff(k);
    // columns: coordinates of 1, eta, eta^2
    let a = [
        [Rat::one(), col(&r, 0), col(&r2, 0)],
        [Rat::zero(), col(&r, 1), col(&r2, 1)],
        [Rat::zero(), col(&r, 2), col(&r2, 2)],
    ];
    let rhs = [Rat::zero(), Rat::one(), Rat::zero()];
    let det = det3(&a);
    assert!(!det.is_zero(), "map image must generate the cubic field");
    let mut sol = Vec::with_capacity(3);
    for j in 0..3 {
        let mut aj = a.clone();
        for (i, item) in rhs.iter().enumerate() {
            aj[i][j] = item.clone();
        }
        sol.push(det3(&aj) / &det);
    }
    let inv = Transformation {
        c0: sol[0].clone(),
        c1: sol[1].clone(),
        c2: sol[2].clone(),
    };
    // composing back must give the identity map on Q[X]/(f_m)
    let composed = &(&(&r2.scale(&inv.c2) + &r.scale(&inv.c1)) + &Poly::constant(inv.c0.clone()))
        .rem(&fm)
        - &Poly::monomial(Rat::one(), 1);
    assert!(
        composed.is_zero(),
        "inverse map failed to compose to identity"
    );
    inv
}

/// The root of R_{n,m} paired with the root u of R_{m,n}: the one attached
/// to the inverse transformation.
pub fn partner_root(m: &Int, n: &Int, u: &Rat) -> Result<Rat> {
    let tr = transformation_for_root(m, n, u)?;
    let inv = invert_transformation(m, &tr);
    debug_assert!(carries_roots(n, m, &inv));
    Ok(inv.root())
}

fn det3(a: &[[Rat; 3]; 3]) -> Rat {
    let m = |i: usize, j: usize| &a[i][j];
    m(0, 0) * &(m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * &(m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * &(m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}
