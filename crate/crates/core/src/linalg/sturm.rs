//! Exact real-root counting with Sturm sequences.

use num_traits::Zero;

use super::poly::Poly;
use super::rational::{sign, Rational};
use crate::error::{Error, Result};

/// Sturm sequence `p, p', -rem(p, p'), …`, each term rescaled to a primitive
/// integer polynomial by a positive factor.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.primitive_part()];
    let d = p.derivative().primitive_part();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((&Poly::zero() - &r).primitive_part());
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_neg_infinity(p: &Poly) -> i8 {
    let lead = sign(p.leading().expect("nonzero polynomial"));
    if p.degree().unwrap().is_multiple_of(2) {
        lead
    } else {
        -lead
    }
}

/// Number of distinct real roots in `(-∞, 0)`; `p(0)` must be nonzero.
fn distinct_negative_roots(p: &Poly) -> usize {
    let seq = sturm_sequence(p);
    let at_neg_inf = variations(seq.iter().map(sign_at_neg_infinity));
    let at_zero = variations(seq.iter().map(|q| sign(&q.coeff(0))));
    at_neg_inf - at_zero
}

/// Number of distinct real roots strictly inside `(a, b]`.
pub fn distinct_roots_in(p: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let va = variations(seq.iter().map(|q| sign(&q.eval(a))));
    let vb = variations(seq.iter().map(|q| sign(&q.eval(b))));
    Ok(va.saturating_sub(vb))
}

/// Exact number of negative roots of `p`, counted with multiplicity.
///
/// Intended for real-rooted polynomials (characteristic polynomials of
/// symmetric matrices and their factors); for other inputs only real roots
/// are counted.
pub fn count_negative_roots(p: &Poly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // Strip the root at zero.
    let shift = p.ascending().iter().take_while(|c| c.is_zero()).count();
    let mut g = Poly::from_ascending(p.ascending()[shift..].to_vec());
    // A root of multiplicity μ survives in the first μ terms of
    // g, gcd(g, g'), gcd(gcd(g, g'), …).
    let mut total = 0;
    while g.degree().unwrap_or(0) > 0 {
        total += distinct_negative_roots(&g);
        g = g.gcd(&g.derivative());
    }
    Ok(total)
}
