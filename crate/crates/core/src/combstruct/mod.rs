//! Axiom checkers for jump systems, delta-matroids and matroid basis
//! families, plus set systems read off graphs.
//!
//! All checkers are brute force and return the first violation in
//! lexicographic order of the points involved, so failures are
//! reproducible.

mod graph;
mod matroid;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub use graph::{degree_sequence_system, matching_support, matchings, Edge, WeightedGraph};
pub use matroid::{is_matroid_bases, Matroid, MatroidViolation};
pub(crate) use matroid::k_subsets;

/// Outcome of an axiom check: either the axiom holds or a witness of the
/// first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

/// A finite set of integer points of a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl SupportSet {
    pub fn new<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
            }
            set.insert(p);
        }
        Ok(SupportSet { dim, points: set })
    }

    pub(crate) fn from_points_unchecked<I>(dim: usize, points: I) -> Self
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        SupportSet { dim, points: points.into_iter().collect() }
    }

    /// Indicator vectors of subsets of `0..dim`.
    pub fn from_subsets<I, S>(dim: usize, subsets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        let mut set = BTreeSet::new();
        for s in subsets {
            let mut p = vec![0i64; dim];
            for &e in s.as_ref() {
                if e >= dim {
                    return Err(Error::VariableOutOfRange { index: e, nvars: dim });
                }
                p[e] = 1;
            }
            set.insert(p);
        }
        Ok(SupportSet { dim, points: set })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }

    pub fn is_binary(&self) -> bool {
        self.points.iter().all(|p| p.iter().all(|&x| x == 0 || x == 1))
    }
}

/// The unit steps `σ = ±e_i` that move `alpha` one unit closer to `beta` in
/// ℓ1 distance, sorted lexicographically.
pub fn steps(alpha: &[i64], beta: &[i64]) -> Result<Vec<Vec<i64>>> {
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch { expected: alpha.len(), found: beta.len() });
    }
    let n = alpha.len();
    let mut out: Vec<Vec<i64>> = (0..n)
        .filter(|&i| alpha[i] != beta[i])
        .map(|i| {
            let mut s = vec![0; n];
            s[i] = if beta[i] > alpha[i] { 1 } else { -1 };
            s
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Coordinates along which a step from `alpha` towards `beta` exists, with
/// the step sign, in the lexicographic order of the step vectors `±e_i`
/// (negative steps by increasing `i`, then positive steps by decreasing `i`).
fn step_moves(alpha: &[i64], beta: &[i64]) -> Vec<(usize, i64)> {
    let mut moves: Vec<(usize, i64)> = (0..alpha.len())
        .filter(|&i| alpha[i] != beta[i])
        .map(|i| (i, if beta[i] > alpha[i] { 1 } else { -1 }))
        .collect();
    moves.sort_by_key(|&(i, s)| if s < 0 { (0, i) } else { (1, usize::MAX - i) });
    moves
}

/// A violation of the two-step axiom: `alpha + sigma ∉ F` and no
/// `τ ∈ St(alpha + sigma, beta)` has `alpha + sigma + τ ∈ F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpViolation {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub sigma: Vec<i64>,
}

/// Checks the two-step axiom over all ordered pairs of points.
pub fn is_jump_system(set: &SupportSet) -> Result<Verdict<JumpViolation>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut probe = vec![0i64; set.dim];
    for alpha in set.points() {
        for beta in set.points() {
            for (i, s) in step_moves(alpha, beta) {
                probe.copy_from_slice(alpha);
                probe[i] += s;
                if set.contains(&probe) {
                    continue;
                }
                let repaired = step_moves(&probe.clone(), beta).into_iter().any(|(j, t)| {
                    probe[j] += t;
                    let hit = set.contains(&probe);
                    probe[j] -= t;
                    hit
                });
                if !repaired {
                    let mut sigma = vec![0; set.dim];
                    sigma[i] = s;
                    return Ok(Verdict::Violated(JumpViolation {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        sigma,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// A violation of the symmetric exchange axiom: no `y ∈ A Δ B` has
/// `A Δ {x, y} ∈ F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaViolation {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub x: usize,
}

/// Result of [`check_delta_matroid`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatroidCheck {
    pub exchange: Verdict<DeltaViolation>,
    /// Coordinates of the ambient ground set covered by no member.
    pub unused: Vec<usize>,
}

impl DeltaMatroidCheck {
    /// Symmetric exchange holds and the members cover the ground set.
    pub fn is_delta_matroid(&self) -> bool {
        self.exchange.holds() && self.unused.is_empty()
    }
}

/// Checks the delta-matroid axioms on the ambient ground set `0..dim`.
///
/// The exchange `A Δ {x, y}` with `y = x` means `A Δ {x}`.
pub fn check_delta_matroid(set: &SupportSet) -> Result<DeltaMatroidCheck> {
    if let Some(idx) = set.points().position(|p| p.iter().any(|&x| x != 0 && x != 1)) {
        return Err(Error::NonBinaryPoint(idx));
    }
    let unused = (0..set.dim).filter(|&i| set.points().all(|p| p[i] == 0)).collect();
    let mut probe = vec![0i64; set.dim];
    for a in set.points() {
        for b in set.points() {
            for x in (0..set.dim).filter(|&x| a[x] != b[x]) {
                probe.copy_from_slice(a);
                probe[x] = 1 - probe[x];
                let ok = (0..set.dim).filter(|&y| a[y] != b[y]).any(|y| {
                    if y == x {
                        return set.contains(&probe);
                    }
                    probe[y] = 1 - probe[y];
                    let hit = set.contains(&probe);
                    probe[y] = 1 - probe[y];
                    hit
                });
                if !ok {
                    return Ok(DeltaMatroidCheck {
                        exchange: Verdict::Violated(DeltaViolation {
                            a: a.clone(),
                            b: b.clone(),
                            x,
                        }),
                        unused,
                    });
                }
            }
        }
    }
    Ok(DeltaMatroidCheck { exchange: Verdict::Holds, unused })
}

pub fn is_delta_matroid(set: &SupportSet) -> Result<bool> {
    Ok(check_delta_matroid(set)?.is_delta_matroid())
}

/// A lattice point `γ` with `α ≤ γ ≤ β` for some `α, β ∈ F` but `γ ∉ F`.
///
/// Pairs are scanned in lexicographic order and the box `[α, β]` in
/// lexicographic order, so the witness is deterministic.
pub fn has_internal_zeros(set: &SupportSet) -> Option<Vec<i64>> {
    for alpha in set.points() {
        for beta in set.points() {
            if alpha == beta || !alpha.iter().zip(beta).all(|(a, b)| a <= b) {
                continue;
            }
            let mut gamma = alpha.clone();
            loop {
                if !set.contains(&gamma) {
                    return Some(gamma);
                }
                if !next_in_box(&mut gamma, alpha, beta) {
                    break;
                }
            }
        }
    }
    None
}

/// Advances `gamma` to the lexicographic successor inside `[lo, hi]`.
fn next_in_box(gamma: &mut [i64], lo: &[i64], hi: &[i64]) -> bool {
    for k in (0..gamma.len()).rev() {
        if gamma[k] < hi[k] {
            gamma[k] += 1;
            gamma[k + 1..].copy_from_slice(&lo[k + 1..]);
            return true;
        }
    }
    false
}
