//! Rayleigh and strongly Rayleigh checks for basis generating polynomials.

use alloc::vec::Vec;

use num_traits::Signed;

use super::falsify::falsify_on_stream;
use super::{certify_nonnegative, rayleigh_difference, Budget, Domain, NonnegCertificate};
use crate::combstruct::Matroid;
use crate::constructors::basis_generating_poly;
use crate::number::Rational;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairStatus {
    /// `Δ_ij ≥ 0` on the whole domain, proved exactly.
    Certified(NonnegCertificate),
    /// `Δ_ij(point) = value < 0`, checked exactly.
    Refuted { point: Vec<Rational>, value: Rational },
    /// Neither proved nor refuted within the budget.
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub status: PairStatus,
    /// Smallest floating-point value seen by the falsifier, if it ran.
    pub lowest_sample: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RayleighReport {
    pub matroid_id: u64,
    pub domain: Domain,
    /// One entry per pair `i < j`, in lexicographic order.
    pub pairs: Vec<PairReport>,
}

impl RayleighReport {
    pub fn is_refuted(&self) -> bool {
        self.pairs.iter().any(|p| matches!(p.status, PairStatus::Refuted { .. }))
    }

    pub fn all_certified(&self) -> bool {
        self.pairs.iter().all(|p| matches!(p.status, PairStatus::Certified(_)))
    }

    /// The first refuted pair.
    pub fn first_refutation(&self) -> Option<&PairReport> {
        self.pairs.iter().find(|p| matches!(p.status, PairStatus::Refuted { .. }))
    }
}

/// Checks `Δ_ij(M(z)) ≥ 0` for every pair `i < j` of ground-set elements,
/// on the positive orthant (Rayleigh) or on all of ℝⁿ (strongly Rayleigh).
///
/// Each pair is first tried against the exact certificates for the domain,
/// then handed to the falsifier on its own random stream.
pub fn matroid_rayleigh_check(
    m: &Matroid,
    domain: Domain,
    budget: &Budget,
    seed: u64,
) -> Result<RayleighReport> {
    let f = basis_generating_poly(m)?;
    let n = m.ground_size();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let delta = rayleigh_difference(&f, i, j)?;
            let report = match certify_nonnegative(&delta, domain) {
                Some(c) => PairReport { i, j, status: PairStatus::Certified(c), lowest_sample: None },
                None => {
                    let stream = (i * n + j) as u64 + 1;
                    let search = falsify_on_stream(&delta, domain, budget, seed, stream)?;
                    let status = match search.witness {
                        Some(w) => {
                            let check = delta.evaluate_rational(&w.point)?;
                            assert!(check.re.is_negative() && check.re == w.value, "Rayleigh witness re-validation");
                            PairStatus::Refuted { point: w.point, value: w.value }
                        }
                        None => PairStatus::Unknown,
                    };
                    PairReport { i, j, status, lowest_sample: search.lowest_sample }
                }
            };
            pairs.push(report);
        }
    }
    Ok(RayleighReport { matroid_id: m.fingerprint(), domain, pairs })
}
