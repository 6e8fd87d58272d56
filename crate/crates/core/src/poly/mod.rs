//! Sparse multivariate polynomials with Gaussian-rational coefficients.
//!
//! A [`Polynomial`] stores a map from dense exponent vectors to non-zero
//! coefficients. The zero polynomial is the empty map. Besides ring
//! arithmetic this module carries the transforms used when reasoning about
//! supports: partial derivatives, the reciprocal `z^κ f(1/z)`, the interval
//! restriction `f_{α,β}`, restriction to a real line, and polarization
//! (see [`polar`]).

mod polar;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};

use crate::combstruct::SupportSet;
use crate::number::{self, c_is_zero, norm_sqr, ComplexRational, Rational};
use crate::{Error, Result};

pub use polar::PolarizedPolynomial;

/// Dense exponent vector `α` of a monomial `z^α`; its length is the number
/// of variables of the owning polynomial.
pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, ComplexRational>,
}

/// Output of [`Polynomial::phase_normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseNormalized {
    /// `f / phase`; every coefficient is a positive rational.
    pub polynomial: Polynomial,
    /// The common phase of `f`. It is the unit `c₀/|c₀|` for the first
    /// coefficient `c₀` when `|c₀|` is rational; otherwise `c₀` itself, so
    /// the phase is `phase / |phase|` and `polynomial` is off by the positive
    /// factor `|c₀|`.
    pub phase: ComplexRational,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, number::cint(1, 0))
    }

    pub fn constant(nvars: usize, c: ComplexRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// `c · z^exp`. The number of variables is `exp.len()`.
    pub fn monomial(exp: Exponent, c: ComplexRational) -> Self {
        let mut p = Polynomial::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The variable `z_i` (0-based). Panics if `i >= nvars`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(exp, number::cint(1, 0))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, ComplexRational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: exp.len() });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn from_real_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        Self::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, number::real(c))))
    }

    /// Shorthand for tests and examples: integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), number::cint(*c, 0))))
            .expect("exponent length must equal nvars")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ComplexRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Option<&ComplexRational> {
        self.terms.get(exp)
    }

    /// Adds `c · z^exp` in place, removing the entry if it cancels.
    pub(crate) fn add_term(&mut self, exp: Exponent, c: ComplexRational) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c_is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot = &*slot + &c;
                if c_is_zero(slot) {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, c: &ComplexRational) -> Self {
        if c_is_zero(c) {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn scale_real(&self, c: &Rational) -> Self {
        self.scale(&number::real(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(number::c_is_real)
    }

    pub fn real_part(&self) -> Self {
        self.map_coefficients(|c| number::real(c.re.clone()))
    }

    pub fn imag_part(&self) -> Self {
        self.map_coefficients(|c| number::real(c.im.clone()))
    }

    pub fn conj(&self) -> Self {
        self.map_coefficients(|c| c.conj())
    }

    fn map_coefficients<F: Fn(&ComplexRational) -> ComplexRational>(&self, f: F) -> Self {
        let mut p = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    fn check_point_len(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: len });
        }
        Ok(())
    }

    /// Floating-point evaluation.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        self.check_point_len(point.len())?;
        let mut sum = Complex64::new(0.0, 0.0);
        for (exp, c) in &self.terms {
            let mut term = Complex64::new(number::to_f64(&c.re), number::to_f64(&c.im));
            for (z, &k) in point.iter().zip(exp) {
                for _ in 0..k {
                    term *= z;
                }
            }
            sum += term;
        }
        Ok(sum)
    }

    /// Exact evaluation at a Gaussian-rational point.
    pub fn evaluate_exact(&self, point: &[ComplexRational]) -> Result<ComplexRational> {
        self.check_point_len(point.len())?;
        let mut sum = number::cint(0, 0);
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (z, &k) in point.iter().zip(exp) {
                for _ in 0..k {
                    term = &term * z;
                }
            }
            sum += term;
        }
        Ok(sum)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate_rational(&self, point: &[Rational]) -> Result<ComplexRational> {
        self.check_point_len(point.len())?;
        let mut sum = number::cint(0, 0);
        for (exp, c) in &self.terms {
            let mut m = Rational::one();
            for (x, &k) in point.iter().zip(exp) {
                for _ in 0..k {
                    m *= x;
                }
            }
            sum += Complex::new(&c.re * &m, &c.im * &m);
        }
        Ok(sum)
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
        }
        Ok(())
    }

    /// Exact `∂f/∂z_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        self.check_var(i)?;
        let mut p = Polynomial::zero(self.nvars);
        for (exp, c) in &self.terms {
            let k = exp[i];
            if k == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[i] -= 1;
            p.add_term(e, c * number::real(number::int(k as i64)));
        }
        Ok(p)
    }

    /// `∂^α f = ∂^{α_1}/∂z_1^{α_1} ⋯ ∂^{α_n}/∂z_n^{α_n} f`.
    pub fn derivative(&self, alpha: &[u32]) -> Result<Self> {
        self.check_point_len(alpha.len())?;
        let mut p = Polynomial::zero(self.nvars);
        'terms: for (exp, c) in &self.terms {
            let mut factor = BigInt::one();
            let mut e = exp.clone();
            for (v, &a) in alpha.iter().enumerate() {
                if e[v] < a {
                    continue 'terms;
                }
                for t in 0..a {
                    factor *= BigInt::from(e[v] - t);
                }
                e[v] -= a;
            }
            p.add_term(e, c * number::real(Rational::from_integer(factor)));
        }
        Ok(p)
    }

    /// `supp(f) = { α : a(α) ≠ 0 }`.
    pub fn support(&self) -> SupportSet {
        SupportSet::from_points_unchecked(
            self.nvars,
            self.terms.keys().map(|e| e.iter().map(|&k| k as i64).collect()),
        )
    }

    /// Largest exponent of each variable; all zeros for the zero polynomial.
    pub fn degree_vector(&self) -> Exponent {
        let mut d = vec![0; self.nvars];
        for exp in self.terms.keys() {
            for (slot, &k) in d.iter_mut().zip(exp) {
                *slot = (*slot).max(k);
            }
        }
        d
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k <= 1))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// Variables that occur with positive exponent in some term.
    pub fn active_variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.depends_on(i)).collect()
    }

    /// `z^κ f(1/z)`: the coefficient of `z^{κ−α}` in the result is `a(α)`.
    pub fn reciprocal(&self, kappa: &[u32]) -> Result<Self> {
        self.check_point_len(kappa.len())?;
        let deg = self.degree_vector();
        if let Some(var) = (0..self.nvars).find(|&v| kappa[v] < deg[v]) {
            return Err(Error::KappaTooSmall { var });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (kappa.iter().zip(e).map(|(k, a)| k - a).collect(), c.clone()))
            .collect();
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    /// The interval restriction `f_{α,β} = ∂^α[z^β g(1/z)]` with
    /// `g = ∂^{κ−β}[z^κ f(1/z)]` and `κ` the degree vector of `f`.
    ///
    /// Only the support is normalized: `supp(f_{α,β})` is
    /// `{γ − α : γ ∈ supp(f) ∩ [α, β]}`, the coefficients carry the constant
    /// factors produced by differentiation.
    pub fn interval_restriction(&self, alpha: &[u32], beta: &[u32]) -> Result<Self> {
        self.check_point_len(alpha.len())?;
        self.check_point_len(beta.len())?;
        let kappa = self.degree_vector();
        for v in 0..self.nvars {
            if alpha[v] > beta[v] {
                return Err(Error::InvalidWindow(format!("alpha > beta in coordinate {v}")));
            }
            if beta[v] > kappa[v] {
                return Err(Error::InvalidWindow(format!(
                    "beta exceeds the degree {} in coordinate {v}",
                    kappa[v]
                )));
            }
        }
        let slack: Vec<u32> = kappa.iter().zip(beta).map(|(k, b)| k - b).collect();
        let g = self.reciprocal(&kappa)?.derivative(&slack)?;
        let result = g.reciprocal(beta)?.derivative(alpha)?;

        let expected = SupportSet::from_points_unchecked(
            self.nvars,
            self.terms
                .keys()
                .filter(|e| (0..self.nvars).all(|v| alpha[v] <= e[v] && e[v] <= beta[v]))
                .map(|e| e.iter().zip(alpha).map(|(&k, &a)| (k - a) as i64).collect()),
        );
        assert_eq!(result.support(), expected, "interval restriction support postcondition");
        Ok(result)
    }

    /// `f(base + t·direction)` as a polynomial in the single variable `t`.
    pub fn restrict_line(&self, base: &[Rational], direction: &[Rational]) -> Result<Self> {
        self.check_point_len(base.len())?;
        self.check_point_len(direction.len())?;
        if let Some(index) = direction.iter().position(|d| !number::is_positive(d)) {
            return Err(Error::NonPositiveDirection { index });
        }
        Ok(self.substitute_lines(base, direction))
    }

    /// `f(base + t·direction)` without the positivity check.
    pub(crate) fn substitute_lines(&self, base: &[Rational], direction: &[Rational]) -> Self {
        let deg = self.degree_vector();
        // powers[v][k] = (base_v + direction_v·t)^k
        let powers: Vec<Vec<Polynomial>> = (0..self.nvars)
            .map(|v| {
                let lin = Polynomial::from_real_terms(
                    1,
                    [(vec![0], base[v].clone()), (vec![1], direction[v].clone())],
                )
                .expect("univariate");
                let mut list = vec![Polynomial::one(1)];
                for k in 0..deg[v] as usize {
                    let next = &list[k] * &lin;
                    list.push(next);
                }
                list
            })
            .collect();
        let mut out = Polynomial::zero(1);
        for (exp, c) in &self.terms {
            let mut term = Polynomial::constant(1, c.clone());
            for (v, &k) in exp.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[v][k as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Substitutes `z_k ← s_k · z_k`.
    pub fn scale_variables(&self, scales: &[ComplexRational]) -> Result<Self> {
        self.check_point_len(scales.len())?;
        Ok(self.map_terms(|exp, c| {
            let mut c = c.clone();
            for (s, &k) in scales.iter().zip(exp) {
                for _ in 0..k {
                    c = &c * s;
                }
            }
            c
        }))
    }

    fn map_terms<F: Fn(&Exponent, &ComplexRational) -> ComplexRational>(&self, f: F) -> Self {
        let mut p = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(e, c));
        }
        p
    }

    /// Sets `z_i := value`, keeping the variable count.
    pub fn specialize(&self, i: usize, value: &ComplexRational) -> Result<Self> {
        self.check_var(i)?;
        let mut p = Polynomial::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut c = c.clone();
            for _ in 0..exp[i] {
                c = &c * value;
            }
            let mut e = exp.clone();
            e[i] = 0;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Keeps only the listed variables, in the listed order. Fails if a
    /// dropped variable occurs in some term.
    pub fn select_variables(&self, keep: &[usize]) -> Result<Self> {
        for &v in keep {
            self.check_var(v)?;
        }
        let mut p = Polynomial::zero(keep.len());
        for (exp, c) in &self.terms {
            let kept: u32 = keep.iter().map(|&v| exp[v]).sum();
            if kept != exp.iter().sum::<u32>() {
                return Err(Error::Precondition(format!(
                    "a dropped variable occurs in the term {exp:?}"
                )));
            }
            p.add_term(keep.iter().map(|&v| exp[v]).collect(), c.clone());
        }
        Ok(p)
    }

    /// Embeds into a larger variable set: variable `v` becomes `target[v]`.
    pub fn embed(&self, nvars: usize, target: &[usize]) -> Self {
        assert_eq!(target.len(), self.nvars);
        let mut p = Polynomial::zero(nvars);
        for (exp, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (v, &k) in exp.iter().enumerate() {
                e[target[v]] += k;
            }
            p.add_term(e, c.clone());
        }
        p
    }

    /// Decides whether all coefficients are positive multiples of a common
    /// unit complex number, without computing any irrational modulus.
    ///
    /// Coefficients `c` and `c₀` share a phase iff `c·conj(c₀)` is a positive
    /// real. Returns `None` for the zero polynomial and when phases differ.
    pub fn phase_normalize(&self) -> Option<PhaseNormalized> {
        let (_, first) = self.terms.iter().next()?;
        let first_conj = first.conj();
        let modulus_sqr = norm_sqr(first);
        for c in self.terms.values() {
            let w = c * &first_conj;
            if !w.im.is_zero() || !number::is_positive(&w.re) {
                return None;
            }
        }
        let phase = match rational_sqrt(&modulus_sqr) {
            Some(m) => Complex::new(&first.re / &m, &first.im / &m),
            None => first.clone(),
        };
        // c / phase = c·conj(phase) / |phase|², real and positive
        let phase_conj = phase.conj();
        let phase_norm = norm_sqr(&phase);
        let polynomial = self.map_coefficients(|c| number::real((c * &phase_conj).re / &phase_norm));
        Some(PhaseNormalized { polynomial, phase })
    }
}

/// Exact square root of a non-negative rational, when it is rational.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.map_coefficients(|c| -c.clone())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (exp, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if c.im.is_zero() {
                write!(f, "{}", number::display_rational(&c.re))?;
            } else {
                write!(
                    f,
                    "({} + {}i)",
                    number::display_rational(&c.re),
                    number::display_rational(&c.im)
                )?;
            }
            for (v, &k) in exp.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*z{}", v + 1)?,
                    _ => write!(f, "*z{}^{}", v + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
