//! Exact univariate real-root analysis over the rationals.
//!
//! Root counting uses Sturm sequences of squarefree parts; isolation is
//! bisection driven by those counts. Intervals are half-open `(lo, hi]`.
//! Comparisons between roots of different polynomials refine both intervals
//! until they separate, or until the gcd of the two polynomials is shown to
//! have a root in the overlap, which proves the roots equal.

use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::number::{self, Rational};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// A real univariate polynomial, coefficients lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealUnivariate {
    coeffs: Vec<Rational>,
}

/// An endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl RealUnivariate {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RealUnivariate { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| number::int(c)).collect())
    }

    pub fn zero() -> Self {
        RealUnivariate { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `z`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `∏ (z − r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::from_ints(&[1]), |acc, r| {
            &acc * &Self::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * number::int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "division by the zero polynomial");
        if self.coeffs.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.coeffs[dlen - 1].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dlen - 1] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's squarefree decomposition: pairs `(q_k, k)` with `q_k` monic,
    /// squarefree, pairwise coprime, of positive degree, and
    /// `p = lc(p) · ∏ q_k^k`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = self.derivative();
        let b = self.gcd(&dp);
        let mut c = self.div_rem(&b).0;
        let mut d = &dp.div_rem(&b).0 - &c.derivative();
        let mut k = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            c = c.div_rem(&a).0;
            d = &d.div_rem(&a).0 - &c.derivative();
            k += 1;
        }
        out
    }

    fn sign_at(&self, at: &Bound) -> i32 {
        let Some(lc) = self.leading() else { return 0 };
        let s = |q: &Rational| if q.is_positive() { 1 } else if q.is_negative() { -1 } else { 0 };
        match at {
            Bound::Finite(x) => s(&self.eval(x)),
            Bound::PosInfinity => s(lc),
            Bound::NegInfinity => {
                if self.coeffs.len() % 2 == 1 {
                    s(lc)
                } else {
                    -s(lc)
                }
            }
        }
    }

    /// Converts a one-variable polynomial with real coefficients.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.nvars() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: p.nvars() });
        }
        if !p.is_real() {
            return Err(Error::NonRealCoefficients);
        }
        let deg = p.degree_vector()[0] as usize;
        let mut coeffs = vec![Rational::zero(); if p.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] = c.re.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_real_terms(
            1,
            self.coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())),
        )
        .expect("univariate")
    }

    /// Strict bound on the absolute value of every root (Cauchy bound + 1).
    fn root_bound(&self) -> Rational {
        let lc = self.leading().expect("non-zero").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(Rational::zero(), |m, x| if x > m { x } else { m });
        max + number::int(2)
    }
}

impl<'a> Add<&'a RealUnivariate> for &'a RealUnivariate {
    type Output = RealUnivariate;
    fn add(self, rhs: &'a RealUnivariate) -> RealUnivariate {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RealUnivariate::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a RealUnivariate> for &'a RealUnivariate {
    type Output = RealUnivariate;
    fn sub(self, rhs: &'a RealUnivariate) -> RealUnivariate {
        self + &(-rhs)
    }
}

impl Neg for &RealUnivariate {
    type Output = RealUnivariate;
    fn neg(self) -> RealUnivariate {
        RealUnivariate::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a RealUnivariate> for &'a RealUnivariate {
    type Output = RealUnivariate;
    fn mul(self, rhs: &'a RealUnivariate) -> RealUnivariate {
        if self.is_zero() || rhs.is_zero() {
            return RealUnivariate::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealUnivariate::new(out)
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Debug)]
struct Sturm {
    seq: Vec<RealUnivariate>,
}

impl Sturm {
    fn new(squarefree: RealUnivariate) -> Self {
        let mut seq = vec![squarefree.clone(), squarefree.derivative()];
        while !seq[seq.len() - 1].is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            seq.push(-&r);
        }
        seq.pop();
        Sturm { seq }
    }

    fn poly(&self) -> &RealUnivariate {
        &self.seq[0]
    }

    fn variations(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.seq {
            let s = p.sign_at(at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    fn count_finite(&self, lo: &Rational, hi: &Rational) -> usize {
        self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RealUnivariate, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ordered = match (lo, hi) {
        (Bound::Finite(a), Bound::Finite(b)) => a < b,
        (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => false,
        _ => true,
    };
    if !ordered {
        return Err(Error::Precondition("sturm_count needs lo < hi".into()));
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    Ok(Sturm::new(p.squarefree_part()).count(lo, hi))
}

/// One real root of a squarefree polynomial located in `(lo, hi]`.
#[derive(Clone, Debug)]
struct RootCell {
    sturm: Rc<Sturm>,
    lo: Rational,
    hi: Rational,
}

impl RootCell {
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / number::int(2);
        if self.sturm.count_finite(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Orders two real algebraic numbers exactly, refining both cells.
fn compare_roots(a: &mut RootCell, b: &mut RootCell) -> Ordering {
    if Rc::ptr_eq(&a.sturm, &b.sturm) && a.lo == b.lo && a.hi == b.hi {
        return Ordering::Equal;
    }
    let common = a.sturm.poly().gcd(b.sturm.poly());
    let common = (common.degree().unwrap_or(0) > 0).then(|| Sturm::new(common));
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if let Some(g) = &common {
            let lo = if a.lo > b.lo { &a.lo } else { &b.lo };
            let hi = if a.hi < b.hi { &a.hi } else { &b.hi };
            if g.count_finite(lo, hi) > 0 {
                return Ordering::Equal;
            }
        }
        a.bisect();
        b.bisect();
    }
}

/// Cells for all real roots of a squarefree polynomial, left to right.
fn isolate_squarefree(sturm: Rc<Sturm>) -> Vec<RootCell> {
    let bound = sturm.poly().root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_finite(&lo, &hi) {
            0 => {}
            1 => out.push(RootCell { sturm: sturm.clone(), lo, hi }),
            _ => {
                let mid = (&lo + &hi) / number::int(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

/// Disjoint isolating intervals `(lo, hi]` for the distinct real roots of a
/// polynomial, left to right, with multiplicities.
#[derive(Clone, Debug)]
pub struct IsolatingIntervals {
    cells: Vec<RootCell>,
    multiplicities: Vec<u32>,
}

impl IsolatingIntervals {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(lo, hi, multiplicity)` for each distinct root.
    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &Rational, u32)> {
        self.cells.iter().zip(&self.multiplicities).map(|(c, &m)| (&c.lo, &c.hi, m))
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Bisects until every interval is at most `width` wide.
    pub fn refine(&mut self, width: &Rational) {
        for cell in &mut self.cells {
            while cell.width() > *width {
                cell.bisect();
            }
        }
    }
}

fn sorted_cells(mut items: Vec<(RootCell, u32)>) -> Vec<(RootCell, u32)> {
    // insertion sort with exact comparisons; roots of coprime factors never
    // compare equal
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 {
            let (left, right) = items.split_at_mut(j);
            if compare_roots(&mut left[j - 1].0, &mut right[0].0) == Ordering::Greater {
                items.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
    for i in 1..items.len() {
        let (left, right) = items.split_at_mut(i);
        compare_roots(&mut left[i - 1].0, &mut right[0].0);
    }
    items
}

pub fn isolate_roots(p: &RealUnivariate) -> Result<IsolatingIntervals> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut items = Vec::new();
    for (factor, k) in p.squarefree_decomposition() {
        let sturm = Rc::new(Sturm::new(factor));
        items.extend(isolate_squarefree(sturm).into_iter().map(|c| (c, k)));
    }
    let items = sorted_cells(items);
    Ok(IsolatingIntervals {
        multiplicities: items.iter().map(|(_, k)| *k).collect(),
        cells: items.into_iter().map(|(c, _)| c).collect(),
    })
}

/// Whether every complex root of `p` is real.
pub fn is_real_rooted(p: &RealUnivariate) -> Result<bool> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) | Some(1) => Ok(true),
        Some(2) => {
            let c = &p.coeffs;
            Ok(!(&c[1] * &c[1] - number::int(4) * &c[0] * &c[2]).is_negative())
        }
        Some(_) => {
            let s = p.squarefree_part();
            let d = s.degree().unwrap_or(0);
            if d == 0 {
                return Ok(true);
            }
            Ok(Sturm::new(s).count(&Bound::NegInfinity, &Bound::PosInfinity) == d)
        }
    }
}

/// `W[g, h] = g'h − gh'`.
pub fn wronskian(g: &RealUnivariate, h: &RealUnivariate) -> RealUnivariate {
    &(&g.derivative() * h) - &(g * &h.derivative())
}

/// All real roots repeated by multiplicity, left to right.
fn roots_with_multiplicity(p: &RealUnivariate) -> Vec<RootCell> {
    let isolated = isolate_roots(p).expect("non-zero");
    let mut out = Vec::new();
    for (cell, &m) in isolated.cells.into_iter().zip(&isolated.multiplicities) {
        for _ in 0..m {
            out.push(cell.clone());
        }
    }
    out
}

/// Checks `first_1 ≤ second_1 ≤ first_2 ≤ second_2 ≤ ⋯`.
fn weaves(first: &mut [RootCell], second: &mut [RootCell]) -> bool {
    if first.len() != second.len() && first.len() != second.len() + 1 {
        return false;
    }
    let total = first.len() + second.len();
    for pos in 0..total - 1 {
        let (a, b) = if pos % 2 == 0 {
            (&mut first[pos / 2], &mut second[pos / 2])
        } else {
            (&mut second[pos / 2], &mut first[pos / 2 + 1])
        };
        if compare_roots(a, b) == Ordering::Greater {
            return false;
        }
    }
    true
}

/// Whether the zeros of `g` and `h` interlace.
///
/// The zero polynomial interlaces every real-rooted polynomial, and any two
/// polynomials of degree at most one interlace. Otherwise the sorted root
/// lists (with multiplicity) must alternate weakly in one of the two orders,
/// which forces the root counts to differ by at most one.
pub fn interlaces(g: &RealUnivariate, h: &RealUnivariate) -> Result<bool> {
    for p in [g, h] {
        if !p.is_zero() && !is_real_rooted(p)? {
            return Err(Error::NotRealRooted);
        }
    }
    if g.is_zero() || h.is_zero() {
        return Ok(true);
    }
    if g.degree() <= Some(1) && h.degree() <= Some(1) {
        return Ok(true);
    }
    let mut rg = roots_with_multiplicity(g);
    let mut rh = roots_with_multiplicity(h);
    if rg.len().abs_diff(rh.len()) > 1 {
        return Ok(false);
    }
    if rg.is_empty() || rh.is_empty() {
        // one side has a single root and the other none
        return Ok(true);
    }
    Ok(weaves(&mut rg, &mut rh) || weaves(&mut rh, &mut rg))
}

/// `W ≤ 0` on all of ℝ: `W ≡ 0`, or a negative leading coefficient and no
/// real root of odd multiplicity.
pub fn is_nonpositive_everywhere(w: &RealUnivariate) -> bool {
    let Some(lc) = w.leading() else { return true };
    if !lc.is_negative() {
        return false;
    }
    w.squarefree_decomposition().into_iter().filter(|(_, k)| k % 2 == 1).all(|(q, _)| {
        Sturm::new(q).count(&Bound::NegInfinity, &Bound::PosInfinity) == 0
    })
}

/// Proper position `g ≪ h`: the zeros interlace and `W[g, h] ≤ 0`.
/// Returns `false` when either argument is non-zero and not real-rooted.
pub fn proper_position(g: &RealUnivariate, h: &RealUnivariate) -> bool {
    for p in [g, h] {
        if !p.is_zero() && !is_real_rooted(p).unwrap_or(false) {
            return false;
        }
    }
    interlaces(g, h).unwrap_or(false) && is_nonpositive_everywhere(&wronskian(g, h))
}

/// Whether `h + i·g` has no root in the open upper half-plane, decided as
/// `g ≪ h`.
pub fn hermite_biehler_stable(h: &RealUnivariate, g: &RealUnivariate) -> Result<bool> {
    if h.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    Ok(proper_position(g, h))
}

#[cfg(test)]
mod tests;
