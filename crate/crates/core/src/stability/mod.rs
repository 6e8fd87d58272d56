//! Rayleigh differences, the multi-affine real-stability criterion and
//! stability falsifiers.
//!
//! Verdicts are three-valued. `CertifiedStable` is only returned by an exact
//! decision procedure; `Refuted` always carries a witness that has been
//! re-checked in exact arithmetic; everything else is `Unknown`.

mod certificate;
mod falsify;
mod rayleigh;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

pub use certificate::{certify_nonnegative, NonnegCertificate};
pub use falsify::{falsify_nonnegativity, line_falsify_stability, NegativePoint, NonnegSearch};
pub use rayleigh::{matroid_rayleigh_check, PairReport, PairStatus, RayleighReport};

use crate::combstruct::is_jump_system;
use crate::number::{self, ComplexRational, Rational};
use crate::poly::Polynomial;
use crate::realroot::{hermite_biehler_stable, RealUnivariate};
use crate::{Error, Result};

/// Region on which a polynomial inequality is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    AllReals,
    PositiveOrthant,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::AllReals => "AllReals",
            Domain::PositiveOrthant => "PositiveOrthant",
        }
    }
}

/// Search effort for the falsifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    /// Enumerate the fixed grid before sampling.
    pub grid: bool,
    /// Number of random rational samples.
    pub samples: usize,
    /// Coordinate-descent rounds started from the lowest sample.
    pub descent_iters: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { grid: true, samples: 10_000, descent_iters: 50 }
    }
}

/// Exact procedure behind a `CertifiedStable` verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    UnivariateHb,
    BivariateDeterminant,
    MultiaffineDeltaExact,
    ByConstruction,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::UnivariateHb => "univariate-hb",
            Method::BivariateDeterminant => "bivariate-determinant",
            Method::MultiaffineDeltaExact => "multiaffine-delta-exact",
            Method::ByConstruction => "by-construction",
        }
    }
}

/// Non-negativity certificate for one Rayleigh difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub i: usize,
    pub j: usize,
    pub certificate: NonnegCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `h + i·g` with `g ≪ h`.
    UnivariateHb,
    /// `Δ_12 = a10·a01 − a11·a00 ≥ 0`.
    BivariateDeterminant { delta: Rational },
    /// Every off-diagonal Rayleigh difference has an exact certificate.
    MultiaffineDeltaExact { pairs: Vec<PairCertificate> },
    /// Certified on the polarization, which is stable exactly when `f` is.
    Polarized(Box<Certificate>),
    /// Output of a constructor that is stable by construction.
    ByConstruction { kind: String },
}

impl Certificate {
    pub fn method(&self) -> Method {
        match self {
            Certificate::UnivariateHb => Method::UnivariateHb,
            Certificate::BivariateDeterminant { .. } => Method::BivariateDeterminant,
            Certificate::MultiaffineDeltaExact { .. } => Method::MultiaffineDeltaExact,
            Certificate::Polarized(inner) => inner.method(),
            Certificate::ByConstruction { .. } => Method::ByConstruction,
        }
    }
}

/// A rational point where `Δ_ij(f) < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayleighWitness {
    pub i: usize,
    pub j: usize,
    pub point: Vec<Rational>,
    pub value: Rational,
}

/// A line `base + t·direction` (direction strictly positive) along which `f`
/// restricts to a univariate polynomial that is not stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWitness {
    pub base: Vec<Rational>,
    pub direction: Vec<Rational>,
    /// `f(base + t·direction)` as a polynomial in one variable.
    pub restriction: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Rayleigh(RayleighWitness),
    Line(LineWitness),
    /// `h + i·g` with `g` and `h` not in proper position.
    HermiteBiehler { h: RealUnivariate, g: RealUnivariate },
    /// A witness against the polarization of `f`.
    Polarized(Box<Witness>),
}

impl Witness {
    /// Re-checks the witness against `f` in exact arithmetic.
    pub fn revalidate(&self, f: &Polynomial) -> bool {
        match self {
            Witness::Rayleigh(w) => {
                let Ok(delta) = rayleigh_difference(f, w.i, w.j) else { return false };
                match delta.evaluate_rational(&w.point) {
                    Ok(v) => v.im.is_zero() && v.re == w.value && v.re.is_negative(),
                    Err(_) => false,
                }
            }
            Witness::Line(w) => match f.restrict_line(&w.base, &w.direction) {
                Ok(r) => r == w.restriction && !restriction_is_stable(&r),
                Err(_) => false,
            },
            Witness::HermiteBiehler { h, g } => {
                let Some(active) = f.active_variables().first().copied() else { return false };
                if f.active_variables().len() != 1 {
                    return false;
                }
                let Ok(uni) = f.select_variables(&[active]) else { return false };
                let (Ok(h2), Ok(g2)) = (
                    RealUnivariate::from_polynomial(&uni.real_part()),
                    RealUnivariate::from_polynomial(&uni.imag_part()),
                ) else {
                    return false;
                };
                h2 == *h && g2 == *g && hermite_biehler_stable(h, g) == Ok(false)
            }
            Witness::Polarized(inner) => match f.polarize() {
                Ok(p) => inner.revalidate(p.base()),
                Err(_) => false,
            },
        }
    }
}

/// Why no verdict was reached.
#[derive(Clone, Debug, PartialEq)]
pub struct UnknownReport {
    pub budget: Budget,
    pub seed: u64,
    /// Pairs `(i, j)` whose Rayleigh difference was neither certified nor
    /// refuted.
    pub open_pairs: Vec<(usize, usize)>,
    /// Smallest floating-point value sampled over the open pairs.
    pub lowest_sample: Option<f64>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StabilityVerdict {
    CertifiedStable(Certificate),
    Refuted(Witness),
    Unknown(UnknownReport),
}

impl StabilityVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            StabilityVerdict::CertifiedStable(_) => "CertifiedStable",
            StabilityVerdict::Refuted(_) => "RefutedWithWitness",
            StabilityVerdict::Unknown(_) => "Unknown",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, StabilityVerdict::CertifiedStable(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, StabilityVerdict::Refuted(_))
    }
}

/// `Δ_ij(f) = ∂_i f · ∂_j f − ∂_i ∂_j f · f`.
///
/// For multi-affine `f` the result does not depend on `z_i` or `z_j`; this is
/// asserted.
pub fn rayleigh_difference(f: &Polynomial, i: usize, j: usize) -> Result<Polynomial> {
    if !f.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let fi = f.partial_derivative(i)?;
    let fj = f.partial_derivative(j)?;
    let fij = fi.partial_derivative(j)?;
    let delta = &(&fi * &fj) - &(&fij * f);
    if f.is_multiaffine() {
        assert!(
            !delta.depends_on(i) && !delta.depends_on(j),
            "Rayleigh difference of a multi-affine polynomial depends on z_{i} or z_{j}"
        );
    }
    Ok(delta)
}

/// Decides or searches for a decision on the real stability of a
/// multi-affine polynomial with real coefficients.
///
/// * at most one variable: Hermite–Biehler on the polynomial itself;
/// * two variables: the sign of `a10·a01 − a11·a00`;
/// * otherwise each `Δ_ij` (`i < j`) is tried against the exact certificates
///   and, failing that, handed to the falsifier with its own random stream.
pub fn check_multiaffine_real_stability(
    f: &Polynomial,
    budget: &Budget,
    seed: u64,
) -> Result<StabilityVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_multiaffine() {
        return Err(Error::NotMultiAffine);
    }
    if !f.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let n = f.nvars();
    if n <= 1 {
        let uni = if n == 0 { f.embed(1, &[]) } else { f.clone() };
        return Ok(univariate_verdict(&uni));
    }
    if n == 2 {
        let coeff = |e: [u32; 2]| f.coefficient(&e).map_or_else(Rational::zero, |c| c.re.clone());
        let delta = coeff([1, 0]) * coeff([0, 1]) - coeff([1, 1]) * coeff([0, 0]);
        if !delta.is_negative() {
            return Ok(StabilityVerdict::CertifiedStable(Certificate::BivariateDeterminant { delta }));
        }
        let witness = Witness::Rayleigh(RayleighWitness {
            i: 0,
            j: 1,
            point: alloc::vec![Rational::zero(); 2],
            value: delta,
        });
        return Ok(refuted(f, witness));
    }

    // Diagonal differences are squares of first derivatives.
    let fi = f.partial_derivative(0)?;
    assert_eq!(rayleigh_difference(f, 0, 0)?, &fi * &fi, "diagonal Rayleigh identity");

    let mut certified = Vec::new();
    let mut pending = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let delta = rayleigh_difference(f, i, j)?;
            match certify_nonnegative(&delta, Domain::AllReals) {
                Some(certificate) => certified.push(PairCertificate { i, j, certificate }),
                None => pending.push((i, j, delta)),
            }
        }
    }
    if pending.is_empty() {
        return Ok(StabilityVerdict::CertifiedStable(Certificate::MultiaffineDeltaExact {
            pairs: certified,
        }));
    }
    let mut lowest: Option<f64> = None;
    let mut open_pairs = Vec::new();
    for (i, j, delta) in pending {
        let search = falsify::falsify_on_stream(&delta, Domain::AllReals, budget, seed, pair_stream(n, i, j))?;
        if let Some(w) = search.witness {
            let witness = Witness::Rayleigh(RayleighWitness { i, j, point: w.point, value: w.value });
            return Ok(refuted(f, witness));
        }
        if let Some(v) = search.lowest_sample {
            lowest = Some(lowest.map_or(v, |l: f64| l.min(v)));
        }
        open_pairs.push((i, j));
    }
    Ok(StabilityVerdict::Unknown(UnknownReport {
        budget: *budget,
        seed,
        open_pairs,
        lowest_sample: lowest,
        reason: String::from("no exact certificate and no negative Rayleigh difference found"),
    }))
}

/// Stability check for an arbitrary non-zero polynomial.
///
/// One active variable: Hermite–Biehler (complex coefficients allowed).
/// Multi-affine and real: [`check_multiaffine_real_stability`].
/// Otherwise a seeded line search on `f` and, for real `f`, the multi-affine
/// check on the polarization.
pub fn check_stability(f: &Polynomial, budget: &Budget, seed: u64) -> Result<StabilityVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let active = f.active_variables();
    if active.len() <= 1 {
        let uni = match active.first() {
            Some(&v) => f.select_variables(&[v])?,
            None => f.select_variables(&[])?.embed(1, &[]),
        };
        let verdict = univariate_verdict(&uni);
        if let StabilityVerdict::Refuted(w) = &verdict {
            assert!(w.revalidate(f), "Hermite-Biehler witness failed re-validation");
        }
        return Ok(verdict);
    }
    if f.is_real() && f.is_multiaffine() {
        return check_multiaffine_real_stability(f, budget, seed);
    }
    if let Some(w) = line_falsify_stability(f, budget.samples.min(2_000), seed)? {
        return Ok(refuted(f, Witness::Line(w)));
    }
    if !f.is_real() {
        return Ok(StabilityVerdict::Unknown(UnknownReport {
            budget: *budget,
            seed,
            open_pairs: Vec::new(),
            lowest_sample: None,
            reason: String::from("complex coefficients in several variables: line search found no witness"),
        }));
    }
    let polar = f.polarize()?;
    Ok(match check_multiaffine_real_stability(polar.base(), budget, seed)? {
        StabilityVerdict::CertifiedStable(c) => {
            StabilityVerdict::CertifiedStable(Certificate::Polarized(Box::new(c)))
        }
        StabilityVerdict::Refuted(w) => refuted(f, Witness::Polarized(Box::new(w))),
        unknown => unknown,
    })
}

fn univariate_verdict(uni: &Polynomial) -> StabilityVerdict {
    let h = RealUnivariate::from_polynomial(&uni.real_part()).expect("univariate");
    let g = RealUnivariate::from_polynomial(&uni.imag_part()).expect("univariate");
    match hermite_biehler_stable(&h, &g) {
        Ok(true) => StabilityVerdict::CertifiedStable(Certificate::UnivariateHb),
        _ => StabilityVerdict::Refuted(Witness::HermiteBiehler { h, g }),
    }
}

fn refuted(f: &Polynomial, witness: Witness) -> StabilityVerdict {
    assert!(witness.revalidate(f), "stability witness failed exact re-validation");
    StabilityVerdict::Refuted(witness)
}

/// Random stream id for the pair `i < j` among `n` variables.
fn pair_stream(n: usize, i: usize, j: usize) -> u64 {
    (i * n + j) as u64 + 1
}

/// Whether a one-variable polynomial has no zero in the open upper
/// half-plane. The zero polynomial counts as unstable.
pub fn restriction_is_stable(p: &Polynomial) -> bool {
    if p.is_zero() {
        return false;
    }
    let h = RealUnivariate::from_polynomial(&p.real_part()).expect("univariate");
    let g = RealUnivariate::from_polynomial(&p.imag_part()).expect("univariate");
    hermite_biehler_stable(&h, &g).unwrap_or(false)
}

/// Substitutes `z_k ← i^q · z_k` in every variable.
///
/// With `q = 1` this takes a polynomial stable for the upper half-plane to
/// one that is stable for the right half-plane (a zero `w` of the result has
/// `i·w` a zero of `f`).
pub fn rotate_halfplane(f: &Polynomial, quarter_turns: i64) -> Polynomial {
    let unit = match quarter_turns.rem_euclid(4) {
        0 => number::cint(1, 0),
        1 => number::cint(0, 1),
        2 => number::cint(-1, 0),
        _ => number::cint(0, -1),
    };
    let scales: Vec<ComplexRational> = alloc::vec![unit; f.nvars()];
    f.scale_variables(&scales).expect("one scale per variable")
}

/// Whether the support of `f` is a jump system, which holds for every
/// polynomial with the half-plane property.
pub fn support_theorem_check(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(is_jump_system(&f.support())?.holds())
}

/// Splits `f = h + i·g` and returns `h + α·g` for the first `α` that keeps
/// the support of `f`.
pub fn realify(f: &Polynomial, alphas: &[Rational]) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let h = f.real_part();
    let g = f.imag_part();
    let support = f.support();
    for alpha in alphas {
        let candidate = &h + &g.scale_real(alpha);
        if candidate.support() == support {
            return Ok(candidate);
        }
    }
    Err(Error::RealifyExhausted)
}
