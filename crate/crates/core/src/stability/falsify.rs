//! Seeded searches for points where a polynomial inequality fails.
//!
//! Sampling is done in floating point; every reported witness is
//! re-evaluated in exact arithmetic before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{restriction_is_stable, Budget, Domain, LineWitness};
use crate::number::{self, Rational};
use crate::poly::Polynomial;
use crate::rng;
use crate::{Error, Result};

/// Grid coordinates tried first on all of ℝ.
const GRID_ALL_REALS: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
/// Grid coordinates tried first on the positive orthant.
const GRID_POSITIVE: [(i64, i64); 3] = [(1, 2), (1, 1), (2, 1)];
/// Largest number of active variables for which the grid is enumerated.
const GRID_MAX_VARS: usize = 8;
/// Random samples are `num/den` with `den ≤ 8` and `|num/den| ≤ 3`.
const SAMPLE_RANGE: i64 = 3;
const SAMPLE_MAX_DEN: i64 = 8;
/// Smallest coordinate-descent step is `2^-12`.
const DESCENT_MIN_STEP_LOG2: u32 = 12;

/// A point where the polynomial is negative, verified exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativePoint {
    pub point: Vec<Rational>,
    pub value: Rational,
}

/// Result of [`falsify_nonnegativity`].
#[derive(Clone, Debug, PartialEq)]
pub struct NonnegSearch {
    pub witness: Option<NegativePoint>,
    /// Smallest floating-point value seen while sampling.
    pub lowest_sample: Option<f64>,
}

/// Compiled floating-point form of a real polynomial over its active
/// variables.
struct FloatPoly {
    terms: Vec<(f64, Vec<(usize, u32)>)>,
}

impl FloatPoly {
    fn new(g: &Polynomial, active: &[usize]) -> Self {
        let terms = g
            .terms()
            .map(|(e, c)| {
                let powers = active
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| e[v] > 0)
                    .map(|(k, &v)| (k, e[v]))
                    .collect();
                (number::to_f64(&c.re), powers)
            })
            .collect();
        FloatPoly { terms }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, powers)| {
                powers.iter().fold(*c, |acc, &(k, e)| {
                    let mut m = acc;
                    for _ in 0..e {
                        m *= x[k];
                    }
                    m
                })
            })
            .sum()
    }
}

struct Search<'a> {
    g: &'a Polynomial,
    active: Vec<usize>,
    float: FloatPoly,
    domain: Domain,
    lowest: Option<f64>,
    best: Option<(Vec<Rational>, f64)>,
}

impl Search<'_> {
    fn full_point(&self, local: &[Rational]) -> Vec<Rational> {
        let filler = match self.domain {
            Domain::AllReals => Rational::zero(),
            Domain::PositiveOrthant => number::int(1),
        };
        let mut p = vec![filler; self.g.nvars()];
        for (k, &v) in self.active.iter().enumerate() {
            p[v] = local[k].clone();
        }
        p
    }

    fn exact(&self, local: &[Rational]) -> Option<NegativePoint> {
        let point = self.full_point(local);
        let value = self.g.evaluate_rational(&point).expect("dimension").re;
        value.is_negative().then_some(NegativePoint { point, value })
    }

    /// Records a sample; returns an exact witness if the sample is negative.
    fn consider(&mut self, local: &[Rational]) -> Option<NegativePoint> {
        let xs: Vec<f64> = local.iter().map(number::to_f64).collect();
        let v = self.float.eval(&xs);
        if !v.is_finite() {
            return None;
        }
        if self.lowest.is_none_or(|l| v < l) {
            self.lowest = Some(v);
            self.best = Some((local.to_vec(), v));
        }
        if v < 0.0 {
            return self.exact(local);
        }
        None
    }
}

/// Searches for a rational point with `g(x) < 0`.
///
/// Order: the fixed grid (when enabled and at most eight variables are
/// active), then `budget.samples` seeded random rationals, then coordinate
/// descent from the lowest sample with dyadic steps. Variables `g` does not
/// depend on are set to 0 (all reals) or 1 (positive orthant).
pub fn falsify_nonnegativity(
    g: &Polynomial,
    domain: Domain,
    budget: &Budget,
    seed: u64,
) -> Result<NonnegSearch> {
    falsify_on_stream(g, domain, budget, seed, 0)
}

pub(crate) fn falsify_on_stream(
    g: &Polynomial,
    domain: Domain,
    budget: &Budget,
    seed: u64,
    stream: u64,
) -> Result<NonnegSearch> {
    if !g.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let active = g.active_variables();
    let k = active.len();
    let mut search = Search {
        g,
        float: FloatPoly::new(g, &active),
        active,
        domain,
        lowest: None,
        best: None,
    };
    let done = |search: &Search, witness: NegativePoint| NonnegSearch {
        witness: Some(witness),
        lowest_sample: search.lowest,
    };

    if k == 0 {
        let witness = search.exact(&[]);
        let value = g.terms().next().map_or(0.0, |(_, c)| number::to_f64(&c.re));
        return Ok(NonnegSearch { witness, lowest_sample: Some(value) });
    }

    if budget.grid && k <= GRID_MAX_VARS {
        let grid: Vec<Rational> = match domain {
            Domain::AllReals => GRID_ALL_REALS.iter().map(|&(n, d)| number::rat(n, d)).collect(),
            Domain::PositiveOrthant => GRID_POSITIVE.iter().map(|&(n, d)| number::rat(n, d)).collect(),
        };
        let mut idx = vec![0usize; k];
        loop {
            let local: Vec<Rational> = idx.iter().map(|&i| grid[i].clone()).collect();
            if let Some(w) = search.consider(&local) {
                return Ok(done(&search, w));
            }
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < grid.len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }

    let mut rng = rng::stream(seed, stream);
    for _ in 0..budget.samples {
        let local: Vec<Rational> = (0..k)
            .map(|_| match domain {
                Domain::AllReals => {
                    rng::rational_in(&mut rng, -SAMPLE_RANGE, SAMPLE_RANGE, SAMPLE_MAX_DEN)
                }
                Domain::PositiveOrthant => {
                    rng::positive_rational(&mut rng, SAMPLE_RANGE, SAMPLE_MAX_DEN)
                }
            })
            .collect();
        if let Some(w) = search.consider(&local) {
            return Ok(done(&search, w));
        }
    }

    if let Some((mut x, mut fx)) = search.best.clone() {
        let mut step = number::rat(1, 2);
        let mut halvings = 0;
        for _ in 0..budget.descent_iters {
            let mut improved = false;
            for c in 0..k {
                for sign in [-1i64, 1] {
                    let mut cand = x.clone();
                    cand[c] = &cand[c] + &step * number::int(sign);
                    if domain == Domain::PositiveOrthant && !cand[c].is_positive() {
                        continue;
                    }
                    let xs: Vec<f64> = cand.iter().map(number::to_f64).collect();
                    let v = search.float.eval(&xs);
                    if v.is_finite() && v < fx {
                        x = cand;
                        fx = v;
                        improved = true;
                        if let Some(w) = search.consider(&x) {
                            return Ok(done(&search, w));
                        }
                    }
                }
            }
            if !improved {
                if halvings == DESCENT_MIN_STEP_LOG2 {
                    break;
                }
                step /= number::int(2);
                halvings += 1;
            }
        }
        if let Some(w) = search.exact(&x) {
            return Ok(done(&search, w));
        }
    }
    Ok(NonnegSearch { witness: None, lowest_sample: search.lowest })
}

/// Stream id used by [`line_falsify_stability`].
const LINE_STREAM: u64 = 0x4c49_4e45;

/// Tries `trials` seeded random lines `base + t·direction` with positive
/// direction and returns the first along which `f` restricts to a
/// polynomial with a zero in the open upper half-plane (for real `f`: a
/// polynomial that is not real-rooted), or to the zero polynomial.
///
/// Bases have coordinates in `[-4, 4]` and directions in `(0, 4]`, all with
/// denominators at most 4.
pub fn line_falsify_stability(f: &Polynomial, trials: usize, seed: u64) -> Result<Option<LineWitness>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    let mut rng = rng::stream(seed, LINE_STREAM);
    for _ in 0..trials {
        let base: Vec<Rational> = (0..n).map(|_| rng::rational_in(&mut rng, -4, 4, 4)).collect();
        let direction: Vec<Rational> = (0..n).map(|_| rng::positive_rational(&mut rng, 4, 4)).collect();
        let restriction = f.substitute_lines(&base, &direction);
        if !restriction_is_stable(&restriction) {
            return Ok(Some(LineWitness { base, direction, restriction }));
        }
    }
    Ok(None)
}
