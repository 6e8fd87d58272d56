use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{Exponent, Polynomial};
use crate::combstruct::k_subsets;
use crate::number::{self, ComplexRational, Rational};
use crate::{Error, Result};

/// The polarization `P(f)`: the symmetric multi-affine lift of `f` with one
/// group of variables `z_{i1}, …, z_{i d_i}` per original variable, where
/// `d_i` is the degree of `f` in `z_i`.
///
/// A monomial `z_i^k` lifts to `e_k(z_{i1}, …, z_{i d_i}) / C(d_i, k)` with
/// `e_k` the elementary symmetric polynomial; products lift factorwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedPolynomial {
    base: Polynomial,
    degrees: Vec<u32>,
    offsets: Vec<usize>,
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

impl Polynomial {
    /// Polarizes a non-zero polynomial.
    pub fn polarize(&self) -> Result<PolarizedPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degrees = self.degree_vector();
        let mut offsets = Vec::with_capacity(self.nvars);
        let mut total = 0usize;
        for &d in &degrees {
            offsets.push(total);
            total += d as usize;
        }
        let mut base = Polynomial::zero(total);
        for (exp, c) in &self.terms {
            let mut denom = BigInt::one();
            for (&d, &k) in degrees.iter().zip(exp) {
                denom *= binomial(d, k);
            }
            let coeff: ComplexRational =
                c * number::real(Rational::new(BigInt::one(), denom));
            // Cartesian product of subset choices, one per variable group.
            let mut partial: Vec<Exponent> = vec![vec![0; total]];
            for (i, (&d, &k)) in degrees.iter().zip(exp).enumerate() {
                let choices = k_subsets(d as usize, k as usize);
                let mut next = Vec::with_capacity(partial.len() * choices.len());
                for e in &partial {
                    for choice in &choices {
                        let mut e = e.clone();
                        for &j in choice {
                            e[offsets[i] + j] = 1;
                        }
                        next.push(e);
                    }
                }
                partial = next;
            }
            for e in partial {
                base.add_term(e, coeff.clone());
            }
        }
        Ok(PolarizedPolynomial { base, degrees, offsets })
    }
}

impl PolarizedPolynomial {
    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Flat index of `z_{ij}` (both 0-based), if the group has that many
    /// members.
    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        (j < *self.degrees.get(i)? as usize).then(|| self.offsets[i] + j)
    }

    /// Group `i` owning flat variable `v`.
    pub fn group_of(&self, v: usize) -> usize {
        (0..self.degrees.len())
            .find(|&i| self.offsets[i] <= v && v < self.offsets[i] + self.degrees[i] as usize)
            .expect("flat variable index out of range")
    }

    /// Substitutes `z_{ij} := z_i`, recovering the source polynomial.
    pub fn collapse(&self) -> Polynomial {
        let target: Vec<usize> = (0..self.base.nvars()).map(|v| self.group_of(v)).collect();
        self.base.embed(self.degrees.len(), &target)
    }

    /// Checks invariance under every adjacent transposition inside each
    /// variable group; these generate the full symmetric group per group.
    pub fn is_group_symmetric(&self) -> bool {
        let n = self.base.nvars();
        for (i, &d) in self.degrees.iter().enumerate() {
            for j in 1..d as usize {
                let a = self.offsets[i] + j - 1;
                let b = a + 1;
                let perm: Vec<usize> = (0..n)
                    .map(|v| if v == a { b } else if v == b { a } else { v })
                    .collect();
                if self.base.embed(n, &perm) != self.base {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_coefficient() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
    }
}
