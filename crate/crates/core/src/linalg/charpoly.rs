use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::matrix::RatMatrix;
use super::poly::{CharPoly, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Berkowitz's division-free algorithm on an integer matrix, row-major.
/// Returns `[c_0 = 1, c_1, …, c_n]` with `det(λI − B) = Σ c_k λ^{n−k}`.
fn berkowitz(n: usize, b: &[BigInt]) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let at = |r: usize, c: usize| &b[r * n + c];
    let mut poly = vec![BigInt::one(), -at(0, 0)];
    for r in 1..n {
        // Leading (r+1)×(r+1) block split as [[S, C], [R, a]].
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-at(r, r));
        let mut col: Vec<BigInt> = (0..r).map(|i| at(i, r).clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| at(r, j) * &col[j]).sum();
            toeplitz.push(-rc);
            col = (0..r)
                .map(|i| (0..r).map(|j| at(i, j) * &col[j]).sum())
                .collect();
        }
        poly = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &toeplitz[i - j] * &poly[j]).sum())
            .collect();
    }
    poly
}

/// Exact characteristic polynomial `det(λI − A)`.
pub fn char_poly(a: &RatMatrix) -> CharPoly {
    let n = a.order();
    let (den, ints) = a.scaled_to_integers();
    let coeffs = berkowitz(n, &ints);
    // det(λI − B/D): the coefficient of λ^{n−k} is c_k(B) / D^k.
    let mut scale = BigInt::one();
    let mut desc = Vec::with_capacity(n + 1);
    for c in coeffs {
        desc.push(Rational::new(c, scale.clone()));
        scale *= &den;
    }
    Poly::from_descending(desc)
}

/// Elementary symmetric functions `e_k` of the spectrum, `e_0 = 1`.
pub fn elementary_symmetric(p: &CharPoly) -> Vec<Rational> {
    let n = p.degree().unwrap_or(0);
    (0..=n)
        .map(|k| {
            let c = p.coeff(n - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

/// Exact positive-semidefiniteness of a symmetric matrix.
///
/// A symmetric matrix has a real spectrum, so it is PSD iff every elementary
/// symmetric function of its eigenvalues is nonnegative.
pub fn is_psd_exact(a: &RatMatrix) -> Result<bool> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(psd_from_char_poly(&char_poly(a)))
}

pub fn psd_from_char_poly(p: &CharPoly) -> bool {
    elementary_symmetric(p).iter().all(|e| !e.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    #[test]
    fn small_cases() {
        assert_eq!(
            char_poly(&RatMatrix::zeros(2)),
            Poly::from_descending(vec![int(1), int(0), int(0)])
        );
        let l = RatMatrix::from_i64_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        assert_eq!(
            char_poly(&l),
            Poly::from_descending(vec![int(1), int(-2), int(0)])
        );
        assert_eq!(char_poly(&RatMatrix::zeros(0)), Poly::one());
    }

    #[test]
    fn rational_entries_scale_back() {
        // [[1/2, 1/3], [1/3, 1/4]]: trace 3/4, det 1/8 − 1/9 = 1/72.
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 3), rat(1, 4)]])
            .unwrap();
        assert_eq!(
            char_poly(&m),
            Poly::from_descending(vec![int(1), rat(-3, 4), rat(1, 72)])
        );
    }

    #[test]
    fn third_order_by_hand() {
        // [[2,1,0],[1,2,1],[0,1,2]]: λ³ − 6λ² + 10λ − 4
        let m = RatMatrix::from_i64_rows(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(
            char_poly(&m),
            Poly::from_descending(vec![int(1), int(-6), int(10), int(-4)])
        );
    }

    #[test]
    fn psd_verdicts() {
        assert!(is_psd_exact(&RatMatrix::identity(3)).unwrap());
        let indefinite = RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!is_psd_exact(&indefinite).unwrap());
        let nonsym = RatMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(is_psd_exact(&nonsym), Err(Error::NotSymmetric));
    }
}
