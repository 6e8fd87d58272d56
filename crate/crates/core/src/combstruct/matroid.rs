use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::Verdict;
use crate::{Error, Result};

/// A matroid on `0..ground_size` given by its list of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground_size: usize,
    bases: Vec<Vec<usize>>,
    lookup: BTreeSet<Vec<usize>>,
}

/// First violation found by [`is_matroid_bases`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidViolation {
    /// Two members of different size.
    Cardinality { a: Vec<usize>, b: Vec<usize> },
    /// `x ∈ A ∖ B` admits no `y ∈ B ∖ A` with `A − x + y` a member.
    Exchange { a: Vec<usize>, b: Vec<usize>, x: usize },
}

fn normalize(family: &[Vec<usize>], n: usize) -> Result<BTreeSet<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for set in family {
        let mut s = set.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != set.len() {
            return Err(Error::InvalidMatroid(format!("set {set:?} repeats an element")));
        }
        if let Some(&e) = s.iter().find(|&&e| e >= n) {
            return Err(Error::VariableOutOfRange { index: e, nvars: n });
        }
        out.insert(s);
    }
    Ok(out)
}

/// Checks equicardinality and the basis exchange axiom.
pub fn is_matroid_bases(family: &[Vec<usize>], n: usize) -> Result<Verdict<MatroidViolation>> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let sets = normalize(family, n)?;
    let first = sets.iter().next().expect("non-empty");
    if let Some(other) = sets.iter().find(|s| s.len() != first.len()) {
        return Ok(Verdict::Violated(MatroidViolation::Cardinality {
            a: first.clone(),
            b: other.clone(),
        }));
    }
    let mut probe = Vec::with_capacity(first.len());
    for a in &sets {
        for b in &sets {
            for &x in a.iter().filter(|x| !b.contains(x)) {
                let ok = b.iter().filter(|y| !a.contains(y)).any(|&y| {
                    probe.clear();
                    probe.extend(a.iter().copied().filter(|&e| e != x));
                    probe.push(y);
                    probe.sort_unstable();
                    sets.contains(&probe)
                });
                if !ok {
                    return Ok(Verdict::Violated(MatroidViolation::Exchange {
                        a: a.clone(),
                        b: b.clone(),
                        x,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

impl Matroid {
    /// Validates the basis family before constructing.
    pub fn new(ground_size: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        match is_matroid_bases(&bases, ground_size)? {
            Verdict::Holds => {}
            Verdict::Violated(v) => return Err(Error::InvalidMatroid(format!("{v:?}"))),
        }
        let lookup = normalize(&bases, ground_size)?;
        Ok(Matroid { ground_size, bases: lookup.iter().cloned().collect(), lookup })
    }

    /// `U_{r,n}`: every `r`-subset is a basis.
    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        if rank > n {
            return Err(Error::InvalidMatroid(format!("rank {rank} exceeds ground size {n}")));
        }
        Self::new(n, k_subsets(n, rank))
    }

    /// The free matroid: the whole ground set is the only basis.
    pub fn free(n: usize) -> Self {
        Self::new(n, alloc::vec![(0..n).collect()]).expect("free matroid")
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn rank(&self) -> usize {
        self.bases[0].len()
    }

    /// Bases as sorted element lists, in lexicographic order.
    pub fn bases(&self) -> &[Vec<usize>] {
        &self.bases
    }

    pub fn is_basis(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.lookup.contains(&s)
    }

    /// Deletion `M \ e`, with elements above `e` shifted down by one.
    pub fn delete(&self, e: usize) -> Result<Self> {
        if e >= self.ground_size {
            return Err(Error::VariableOutOfRange { index: e, nvars: self.ground_size });
        }
        let avoiding: Vec<&Vec<usize>> = self.bases.iter().filter(|b| !b.contains(&e)).collect();
        let kept: Vec<Vec<usize>> = if avoiding.is_empty() {
            // e is a coloop: delete equals contract
            self.bases
                .iter()
                .map(|b| b.iter().copied().filter(|&x| x != e).collect())
                .collect()
        } else {
            avoiding.into_iter().cloned().collect()
        };
        let relabeled = kept
            .into_iter()
            .map(|b| b.into_iter().map(|x| if x > e { x - 1 } else { x }).collect())
            .collect();
        Self::new(self.ground_size - 1, relabeled)
    }

    /// FNV-1a fingerprint of `(ground_size, bases)`, used as a report id.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(self.ground_size as u64);
        for b in &self.bases {
            eat(u64::MAX);
            for &x in b {
                eat(x as u64);
            }
        }
        h
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            if n - v < k - current.len() {
                break;
            }
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
