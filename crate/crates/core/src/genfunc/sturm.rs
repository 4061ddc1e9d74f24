//! Real-root counting with Sturm sequences over the integers.
//!
//! Remainders are signed pseudo-remainders scaled by a positive factor and
//! reduced to primitive form, so the sign pattern matches the rational Sturm
//! chain while every coefficient stays an integer.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

/// A positive multiple of the remainder of `a` divided by `b` over `Q`.
fn positive_pseudo_remainder(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let db = b.degree().expect("divisor is nonzero");
    let lb = b.leading().unwrap().clone();
    let scale = lb.abs();
    let sign = BigInt::from(if lb.is_negative() { -1 } else { 1 });
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        // |lb| r - sgn(lb) lr x^(dr - db) b cancels the leading term
        let shift = Polynomial::monomial(&lr * &sign, dr - db);
        r = &r.scale(&scale) - &(&shift * b);
    }
    r
}

/// `p` divided by its (positive) content.
fn reduce(p: Polynomial) -> Polynomial {
    if p.is_zero() {
        return p;
    }
    let g = p.content();
    Polynomial::new(p.into_coeffs().into_iter().map(|c| c / &g).collect())
}

/// `P, P', -rem(P, P'), ...` up to (excluding) the first zero remainder, each
/// term divided by a positive constant.
pub fn sturm_chain(p: &Polynomial) -> Result<Vec<Polynomial>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![reduce(p.clone())];
    let d = reduce(p.derivative());
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = reduce(-positive_pseudo_remainder(&chain[n - 2], &chain[n - 1]));
        if r.is_zero() {
            return Ok(chain);
        }
        chain.push(r);
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn leading_sign(p: &Polynomial) -> i8 {
    if p.leading().is_some_and(Signed::is_negative) {
        -1
    } else {
        1
    }
}

/// Number of distinct real roots of `p`.
pub fn sturm_distinct_real_roots(p: &Polynomial) -> Result<usize> {
    let chain = sturm_chain(p)?;
    let at_pos_inf = sign_changes(chain.iter().map(leading_sign));
    let at_neg_inf = sign_changes(chain.iter().map(|q| {
        let s = leading_sign(q);
        if q.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

/// Primitive gcd with positive leading coefficient.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.degree() < y.degree() {
        core::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = positive_pseudo_remainder(&x, &y).primitive_part();
        x = y;
        y = r;
    }
    x
}

/// Exact quotient `a / b` in `Z[x]`; `None` when `b` does not divide `a`.
pub fn exact_div(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let db = b.degree()?;
    let lb = b.leading().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.degree().map_or(0, |d| d.saturating_sub(db) + 1)];
    while let Some(dr) = r.degree() {
        if dr < db {
            return None;
        }
        let (c, rem) = r.leading().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let term = Polynomial::monomial(c.clone(), dr - db);
        q[dr - db] = c;
        r = &r - &(&term * b);
    }
    Some(Polynomial::new(q))
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn square_free_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative());
    if g.is_zero() {
        // p is constant
        return Ok(p.primitive_part());
    }
    exact_div(&p.primitive_part(), &g)
        .map(|q| q.primitive_part())
        .ok_or(Error::Internal("gcd does not divide the polynomial"))
}

/// True when every complex root of `p` is real. Nonzero constants count as
/// real-rooted.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let q = square_free_part(p)?;
    Ok(sturm_distinct_real_roots(&q)? == q.degree().unwrap_or(0))
}
