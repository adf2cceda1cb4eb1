use super::matrix::RatMatrix;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Floating eigenvalues of a symmetric matrix, ascending. Values within
/// `tol` of zero are reported as exactly `0.0`.
///
/// For display only; verdicts never depend on these.
pub fn eigenvalues_float(a: &RatMatrix, tol: f64) -> Vec<f64> {
    if a.order() == 0 {
        return Vec::new();
    }
    let eig = nalgebra::SymmetricEigen::new(a.to_f64());
    let mut values: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&v| if v.abs() <= tol { 0.0 } else { v })
        .collect();
    values.sort_by(f64::total_cmp);
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rat;

    #[test]
    fn projector_spectrum() {
        let m = RatMatrix::from_i64_rows(&[vec![1, -1], vec![-1, 1]])
            .unwrap()
            .scale(&rat(1, 2));
        let ev = eigenvalues_float(&m, DEFAULT_TOL);
        assert_eq!(ev.len(), 2);
        assert_eq!(ev[0], 0.0);
        assert!((ev[1] - 1.0).abs() < 1e-12);
    }
}
