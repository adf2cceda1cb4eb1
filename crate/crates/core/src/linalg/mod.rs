//! Exact rational linear algebra for small dense symmetric matrices.
//!
//! Every verdict (PSD or not, number of negative eigenvalues) is decided over
//! the rationals. [`eigenvalues_float`] exists for human-readable reports.

mod charpoly;
mod eigen;
mod matrix;
mod poly;
pub mod rational;
mod sturm;

pub use charpoly::{char_poly, elementary_symmetric, is_psd_exact, psd_from_char_poly};
pub use eigen::{eigenvalues_float, DEFAULT_TOL};
pub use matrix::{kron3, RatMatrix};
pub use poly::{CharPoly, Poly};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use sturm::{count_negative_roots, distinct_roots_in, sturm_sequence};
