use alloc::vec::Vec;

use num_traits::Signed;

use super::Domain;
use crate::linalg::Matrix;
use crate::number::{self, Rational};
use crate::poly::Polynomial;

/// Exact reason a real polynomial is non-negative on a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonnegCertificate {
    /// The polynomial is identically zero.
    Zero,
    /// Every term is a non-negative multiple of a monomial with all
    /// exponents even.
    EvenSquares,
    /// Total degree at most two and the homogenized Gram matrix
    /// `[[c, b/2], [b/2, Q]]` is positive semidefinite.
    PsdQuadratic,
    /// Every coefficient is non-negative (valid on the positive orthant only).
    NonnegativeCoefficients,
}

/// Tries the exact sufficient conditions in order; `None` when none applies.
pub fn certify_nonnegative(g: &Polynomial, domain: Domain) -> Option<NonnegCertificate> {
    if !g.is_real() {
        return None;
    }
    if g.is_zero() {
        return Some(NonnegCertificate::Zero);
    }
    let nonneg = |c: &Rational| !c.is_negative();
    if domain == Domain::PositiveOrthant && g.terms().all(|(_, c)| nonneg(&c.re)) {
        return Some(NonnegCertificate::NonnegativeCoefficients);
    }
    if g.terms().all(|(e, c)| nonneg(&c.re) && e.iter().all(|k| k % 2 == 0)) {
        return Some(NonnegCertificate::EvenSquares);
    }
    if g.total_degree().unwrap_or(0) <= 2 && quadratic_is_psd(g) {
        return Some(NonnegCertificate::PsdQuadratic);
    }
    None
}

fn quadratic_is_psd(g: &Polynomial) -> bool {
    let vars = g.active_variables();
    let k = vars.len();
    let pos = |v: usize| vars.iter().position(|&x| x == v).expect("active") + 1;
    let mut gram = Matrix::zeros(k + 1, k + 1);
    let half = number::rat(1, 2);
    for (exp, c) in g.terms() {
        let c = c.re.clone();
        let support: Vec<(usize, u32)> =
            exp.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v, e)).collect();
        match support.as_slice() {
            [] => gram.set(0, 0, number::real(c)),
            [(v, 1)] => {
                let p = pos(*v);
                gram.set(0, p, number::real(&c * &half));
                gram.set(p, 0, number::real(&c * &half));
            }
            [(v, 2)] => {
                let p = pos(*v);
                gram.set(p, p, number::real(c));
            }
            [(u, 1), (v, 1)] => {
                let (p, q) = (pos(*u), pos(*v));
                gram.set(p, q, number::real(&c * &half));
                gram.set(q, p, number::real(&c * &half));
            }
            _ => return false,
        }
    }
    gram.is_psd_hermitian().unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificates() {
        let sq = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 3)]);
        assert_eq!(certify_nonnegative(&sq, Domain::AllReals), Some(NonnegCertificate::EvenSquares));
        // x^2 + xy + y^2 is positive definite but has an odd monomial
        let q = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(certify_nonnegative(&q, Domain::AllReals), Some(NonnegCertificate::PsdQuadratic));
        // x^2 + 3xy + y^2 is indefinite
        let q = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 3), (&[0, 2], 1)]);
        assert_eq!(certify_nonnegative(&q, Domain::AllReals), None);
        assert_eq!(
            certify_nonnegative(&q, Domain::PositiveOrthant),
            Some(NonnegCertificate::NonnegativeCoefficients)
        );
        // x - 1 + x^2 ... (x + 1/2)^2 + 3/4 is positive: 1 + x + x^2
        let q = Polynomial::from_int_terms(1, &[(&[0], 1), (&[1], 1), (&[2], 1)]);
        assert_eq!(certify_nonnegative(&q, Domain::AllReals), Some(NonnegCertificate::PsdQuadratic));
        // z3 alone is not non-negative on R
        let lin = Polynomial::variable(3, 2);
        assert_eq!(certify_nonnegative(&lin, Domain::AllReals), None);
    }
}
