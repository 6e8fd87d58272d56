//! Ruling out a rank-3 matroid as the support of a stable polynomial.
//!
//! If `f = Σ_B a(B) z^B` is stable with support the bases of `M`, every
//! dependent 3-set `{s, i, j}` forces binomial relations
//! `a(s,i,k)·a(s,j,l) = a(s,i,l)·a(s,j,k)` between its coefficients. When
//! these relations connect enough of the coefficients, they force
//! `a(B) = C·Π_{e∈B} v_e` for positive weights `v`, so after rescaling the
//! variables `f` would be a multiple of the basis generating polynomial
//! `M(z)`. A single exact witness that `M(z)` is not stable then shows that
//! no stable polynomial has this support.
//!
//! The coefficient ratios are tracked symbolically: there is no numeric `f`,
//! only the equalities a hypothetical one would have to satisfy.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combstruct::{k_subsets, Matroid};
use crate::constructors::basis_generating_poly;
use crate::linalg::rational_rank;
use crate::number::{self, Rational};
use crate::stability::{
    line_falsify_stability, matroid_rayleigh_check, Budget, Domain, PairStatus, RayleighWitness, Witness,
};
use crate::{Error, Result};

/// Bases are sorted element lists.
pub type Basis = Vec<usize>;

/// `a(P)·a(Q) = a(R)·a(T)` with each side sorted and the smaller side first.
pub type Equation = ([Basis; 2], [Basis; 2]);

/// The Fano plane: all 3-subsets of `0..7` except its seven lines.
pub fn fano() -> Matroid {
    const LINES: [[usize; 3]; 7] =
        [[0, 1, 2], [2, 3, 4], [0, 4, 5], [0, 3, 6], [1, 4, 6], [2, 5, 6], [1, 3, 5]];
    let bases = k_subsets(7, 3)
        .into_iter()
        .filter(|s| !LINES.iter().any(|l| l.as_slice() == s.as_slice()))
        .collect();
    Matroid::new(7, bases).expect("the Fano plane is a matroid")
}

fn set3(a: usize, b: usize, c: usize) -> Basis {
    let mut v = vec![a, b, c];
    v.sort_unstable();
    v
}

fn equation(p: Basis, q: Basis, r: Basis, t: Basis) -> Equation {
    let mut lhs = [p, q];
    let mut rhs = [r, t];
    lhs.sort();
    rhs.sort();
    if rhs < lhs {
        (rhs, lhs)
    } else {
        (lhs, rhs)
    }
}

/// One instance `S = {s}`, `S ∪ {i, j}` dependent, relating
/// `a(S∪{i,k})·a(S∪{j,l}) = a(S∪{i,l})·a(S∪{j,k})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl Relation {
    pub fn equation(&self) -> Equation {
        let Relation { s, i, j, k, l } = *self;
        equation(set3(s, i, k), set3(s, j, l), set3(s, i, l), set3(s, j, k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSystem {
    pub ground_size: usize,
    /// One representative per distinct equation, in enumeration order.
    pub relations: Vec<Relation>,
    pub equations: BTreeSet<Equation>,
    /// Bases occurring in at least one relation.
    pub used_bases: BTreeSet<Basis>,
}

impl RelationSystem {
    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }
}

fn require_rank3(m: &Matroid) -> Result<()> {
    if m.rank() != 3 {
        return Err(Error::WrongRank { expected: 3, found: m.rank() });
    }
    Ok(())
}

/// All relations forced by dependent 3-sets of a rank-3 matroid.
pub fn key_relations(m: &Matroid) -> Result<RelationSystem> {
    require_rank3(m)?;
    let n = m.ground_size();
    let mut out = RelationSystem {
        ground_size: n,
        relations: Vec::new(),
        equations: BTreeSet::new(),
        used_bases: BTreeSet::new(),
    };
    for s in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                if i == s || j == s || m.is_basis(&set3(s, i, j)) {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        if k == l {
                            continue;
                        }
                        let sets = [set3(s, i, k), set3(s, j, l), set3(s, i, l), set3(s, j, k)];
                        if sets.iter().all(|b| b.len() == 3 && distinct(b) && m.is_basis(b)) {
                            let rel = Relation { s, i, j, k, l };
                            if out.equations.insert(rel.equation()) {
                                out.used_bases.extend(sets);
                                out.relations.push(rel);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn distinct(b: &[usize]) -> bool {
    b.windows(2).all(|w| w[0] != w[1])
}

/// `G_xy`: pairs `{i, j}` with `{i,j,x}` and `{i,j,y}` both bases, joined
/// when they intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub x: usize,
    pub y: usize,
    pub vertices: Vec<(usize, usize)>,
    /// Index pairs into `vertices`.
    pub edges: Vec<(usize, usize)>,
    /// Non-empty and connected.
    pub connected: bool,
}

pub fn quotient_graph(m: &Matroid, x: usize, y: usize) -> Result<QuotientGraph> {
    let n = m.ground_size();
    for e in [x, y] {
        if e >= n {
            return Err(Error::VariableOutOfRange { index: e, nvars: n });
        }
    }
    if x == y {
        return Err(Error::SameElement);
    }
    let mut vertices = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (set3(i, j, x), set3(i, j, y));
            if distinct(&a) && distinct(&b) && m.is_basis(&a) && m.is_basis(&b) {
                vertices.push((i, j));
            }
        }
    }
    let mut edges = Vec::new();
    for p in 0..vertices.len() {
        for q in p + 1..vertices.len() {
            let (a, b) = (vertices[p], vertices[q]);
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                edges.push((p, q));
            }
        }
    }
    let connected = !vertices.is_empty() && {
        let mut seen = vec![false; vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(p, q) in &edges {
                let w = if p == v { q } else if q == v { p } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    Ok(QuotientGraph { x, y, vertices, edges, connected })
}

/// `G_xy` for every pair `x < y`.
pub fn all_quotient_graphs(m: &Matroid) -> Result<Vec<QuotientGraph>> {
    let n = m.ground_size();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            out.push(quotient_graph(m, x, y)?);
        }
    }
    Ok(out)
}

/// `λ_xy = a({i,j,x}) / a({i,j,y})` for a representative vertex `{i,j}` of
/// `G_xy`; by consistency the same quotient for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMap {
    pub representatives: BTreeMap<(usize, usize), (usize, usize)>,
    /// Number of quotient-graph edges checked against the relations.
    pub edges_covered: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaConsistency {
    Consistent(LambdaMap),
    /// The edge `{i,j} – {i,k}` of `G_xy` has no relation
    /// `a(i,j,x)·a(i,k,y) = a(i,j,y)·a(i,k,x)`.
    Uncovered { x: usize, y: usize, from: (usize, usize), to: (usize, usize) },
}

/// Checks that every edge of every `G_xy` is backed by a relation, so that
/// the quotient `a(P ∪ x)/a(P ∪ y)` does not depend on the vertex `P`.
/// Every `G_xy` must be connected.
pub fn lambda_consistency(m: &Matroid, relations: &RelationSystem) -> Result<LambdaConsistency> {
    let graphs = all_quotient_graphs(m)?;
    if let Some(g) = graphs.iter().find(|g| !g.connected) {
        return Err(Error::Precondition(format!(
            "quotient graph for ({}, {}) is empty or disconnected",
            g.x, g.y
        )));
    }
    let mut map = LambdaMap { representatives: BTreeMap::new(), edges_covered: 0 };
    for g in &graphs {
        let (x, y) = (g.x, g.y);
        for &(p, q) in &g.edges {
            let (a, b) = (g.vertices[p], g.vertices[q]);
            let shared = if a.0 == b.0 || a.0 == b.1 { a.0 } else { a.1 };
            let j = if a.0 == shared { a.1 } else { a.0 };
            let k = if b.0 == shared { b.1 } else { b.0 };
            let needed =
                equation(set3(shared, j, x), set3(shared, k, y), set3(shared, j, y), set3(shared, k, x));
            if !relations.equations.contains(&needed) {
                return Ok(LambdaConsistency::Uncovered { x, y, from: a, to: b });
            }
            map.edges_covered += 1;
        }
        map.representatives.insert((x, y), g.vertices[0]);
    }
    Ok(LambdaConsistency::Consistent(map))
}

/// How `λ_xz = λ_xy·λ_yz` was established for one unordered triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleProof {
    /// `{i,j}` completes each of `x`, `y`, `z` to a basis.
    CommonPair { triple: [usize; 3], pair: (usize, usize) },
    /// Each of `{x,u,z}`, `{x,y,u}`, `{u,y,z}` has a common pair.
    Routed { triple: [usize; 3], via: usize },
}

/// Symbolic certificate that `a(B) = C·Π_{e∈B} v_e` with `v_e = λ_{e,0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFactorization {
    /// Element whose weight is normalized to 1.
    pub normalization: usize,
    pub triples: Vec<TripleProof>,
    /// Base point of the exchange-graph traversal.
    pub root_basis: Basis,
    /// Exchange-graph edges checked for path independence.
    pub exchange_edges: usize,
    /// Dimension of the solution space of the relations in the unknowns
    /// `log a(B)`.
    pub solution_dimension: usize,
    /// Dimension of the space of vectors `(log C + Σ_{e∈B} log v_e)_B`.
    pub product_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorizationOutcome {
    Factored(WeightFactorization),
    /// No proof of multiplicativity for this triple.
    TripleFailed([usize; 3]),
    /// The bases do not form a connected exchange graph.
    ExchangeDisconnected,
    /// An exchange step disagrees with the weights.
    PathDependent { from: Basis, to: Basis },
    /// The relations leave more freedom than the product form.
    UnderDetermined { solution_dimension: usize, product_dimension: usize },
}

fn common_pair(m: &Matroid, t: [usize; 3]) -> Option<(usize, usize)> {
    let n = m.ground_size();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !t.contains(&i) && !t.contains(&j))
        .find(|&(i, j)| t.iter().all(|&e| m.is_basis(&set3(i, j, e))))
}

/// Proves `λ_xz = λ_xy·λ_yz` for all triples, sets `v_e = λ_{e,0}` and
/// checks along the basis-exchange graph that `a(A)/a(B) = v^A / v^B` for
/// every pair of bases, independently of the path. Finally compares the
/// dimension of the solution space of `relations` (in `log a`) with that of
/// the product form.
pub fn weight_factorization(
    m: &Matroid,
    _lambda: &LambdaMap,
    relations: &RelationSystem,
) -> Result<FactorizationOutcome> {
    require_rank3(m)?;
    let n = m.ground_size();
    let mut triples = Vec::new();
    for t in k_subsets(n, 3) {
        let t = [t[0], t[1], t[2]];
        if let Some(pair) = common_pair(m, t) {
            triples.push(TripleProof::CommonPair { triple: t, pair });
            continue;
        }
        let [x, y, z] = t;
        let via = (0..n).filter(|u| !t.contains(u)).find(|&u| {
            common_pair(m, [x, u, z]).is_some()
                && common_pair(m, [x, y, u]).is_some()
                && common_pair(m, [u, y, z]).is_some()
        });
        match via {
            Some(via) => triples.push(TripleProof::Routed { triple: t, via }),
            None => return Ok(FactorizationOutcome::TripleFailed(t)),
        }
    }

    // exchange graph: potentials phi(B) = exponent vector of v in a(B)/a(B0)
    let bases = m.bases();
    let index: BTreeMap<&Basis, usize> = bases.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let neighbours = |a: &Basis| -> Vec<(usize, usize, usize)> {
        // (basis index, element leaving, element entering)
        let mut out = Vec::new();
        for &x in a {
            for y in 0..n {
                if a.contains(&y) {
                    continue;
                }
                let mut b: Basis = a.iter().copied().filter(|&e| e != x).collect();
                b.push(y);
                b.sort_unstable();
                if let Some(&k) = index.get(&b) {
                    out.push((k, x, y));
                }
            }
        }
        out
    };
    let mut phi: Vec<Option<Vec<i64>>> = vec![None; bases.len()];
    phi[0] = Some(vec![0; n]);
    let mut queue = VecDeque::from([0usize]);
    let mut exchange_edges = 0;
    while let Some(a) = queue.pop_front() {
        let pa = phi[a].clone().expect("visited");
        for (b, x, y) in neighbours(&bases[a]) {
            // a(A)/a(B) = λ_xy = v_x / v_y
            let mut pb = pa.clone();
            pb[x] -= 1;
            pb[y] += 1;
            match &phi[b] {
                None => {
                    phi[b] = Some(pb);
                    queue.push_back(b);
                }
                Some(existing) => {
                    exchange_edges += 1;
                    if *existing != pb {
                        return Ok(FactorizationOutcome::PathDependent {
                            from: bases[a].clone(),
                            to: bases[b].clone(),
                        });
                    }
                }
            }
        }
    }
    if phi.iter().any(Option::is_none) {
        return Ok(FactorizationOutcome::ExchangeDisconnected);
    }
    for (b, p) in bases.iter().zip(&phi) {
        let p = p.as_ref().expect("visited");
        let expected: Vec<i64> = (0..n)
            .map(|e| i64::from(b.contains(&e)) - i64::from(bases[0].contains(&e)))
            .collect();
        if *p != expected {
            return Ok(FactorizationOutcome::PathDependent { from: bases[0].clone(), to: b.clone() });
        }
    }

    let (solution_dimension, product_dimension) = log_linear_dimensions(m, relations);
    if solution_dimension != product_dimension {
        return Ok(FactorizationOutcome::UnderDetermined { solution_dimension, product_dimension });
    }
    Ok(FactorizationOutcome::Factored(WeightFactorization {
        normalization: 0,
        triples,
        root_basis: bases[0].clone(),
        exchange_edges,
        solution_dimension,
        product_dimension,
    }))
}

/// `(nullity of the relation matrix, rank of the basis–element incidence
/// matrix)`. Every product-form vector solves the relations, so equality
/// means the relations force the product form.
fn log_linear_dimensions(m: &Matroid, relations: &RelationSystem) -> (usize, usize) {
    let bases = m.bases();
    let col: BTreeMap<&Basis, usize> = bases.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let rows: Vec<Vec<Rational>> = relations
        .equations
        .iter()
        .map(|([p, q], [r, t])| {
            let mut row = vec![number::int(0); bases.len()];
            for b in [p, q] {
                row[col[b]] += number::int(1);
            }
            for b in [r, t] {
                row[col[b]] -= number::int(1);
            }
            row
        })
        .collect();
    let incidence: Vec<Vec<Rational>> = bases
        .iter()
        .map(|b| (0..m.ground_size()).map(|e| number::int(i64::from(b.contains(&e)))).collect())
        .collect();
    (bases.len() - rational_rank(&rows), rational_rank(&incidence))
}

/// Shortest basis-exchange path from `a` to `b`, both included.
pub fn exchange_path(m: &Matroid, a: &[usize], b: &[usize]) -> Option<Vec<Basis>> {
    if !m.is_basis(a) || !m.is_basis(b) {
        return None;
    }
    let bases = m.bases();
    let start = bases.iter().position(|x| x.as_slice() == a)?;
    let goal = bases.iter().position(|x| x.as_slice() == b)?;
    let mut prev = vec![usize::MAX; bases.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            break;
        }
        for (v, cand) in bases.iter().enumerate() {
            if prev[v] == usize::MAX && cand.iter().filter(|e| bases[u].contains(e)).count() + 1 == cand.len() {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if prev[goal] == usize::MAX {
        return None;
    }
    let mut path = vec![bases[goal].clone()];
    let mut cur = goal;
    while cur != start {
        cur = prev[cur];
        path.push(bases[cur].clone());
    }
    path.reverse();
    Some(path)
}

/// Largest number of random lines tried by [`refute_uniform`].
const UNIFORM_LINE_TRIALS: usize = 1_000;

/// Searches for an exact witness that `M(z) = Σ_B z^B` is not stable: first a
/// point with some `Δ_ij(M)(x) < 0` on ℝⁿ, then a line along which `M(z)` is
/// not real-rooted.
pub fn refute_uniform(m: &Matroid, budget: &Budget, seed: u64) -> Result<Option<Witness>> {
    let f = basis_generating_poly(m)?;
    let report = matroid_rayleigh_check(m, Domain::AllReals, budget, seed)?;
    let witness = if let Some(pair) = report.first_refutation() {
        let PairStatus::Refuted { point, value } = &pair.status else { unreachable!() };
        Some(Witness::Rayleigh(RayleighWitness { i: pair.i, j: pair.j, point: point.clone(), value: value.clone() }))
    } else {
        line_falsify_stability(&f, budget.samples.min(UNIFORM_LINE_TRIALS), seed)?.map(Witness::Line)
    };
    if let Some(w) = &witness {
        assert!(w.revalidate(&f), "uniform-polynomial witness failed re-validation");
    }
    Ok(witness)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionStatus {
    NotHpp,
    Inconclusive,
}

impl ObstructionStatus {
    pub fn name(self) -> &'static str {
        match self {
            ObstructionStatus::NotHpp => "NotHPP",
            ObstructionStatus::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub status: ObstructionStatus,
    pub matroid_id: u64,
    pub steps: Vec<ChainStep>,
    pub relations: Option<RelationSystem>,
    pub quotient_graphs: Vec<QuotientGraph>,
    pub lambda: Option<LambdaMap>,
    pub factorization: Option<WeightFactorization>,
    pub witness: Option<Witness>,
    /// Name of the first failing step.
    pub failure: Option<&'static str>,
}

pub const STEP_RELATIONS: &str = "relations";
pub const STEP_QUOTIENT_GRAPHS: &str = "quotient-graphs";
pub const STEP_LAMBDA: &str = "lambda-consistency";
pub const STEP_FACTORIZATION: &str = "weight-factorization";
pub const STEP_REFUTATION: &str = "uniform-refutation";

/// Runs the whole chain on a rank-3 matroid. `NotHpp` only when every step
/// succeeds and the final witness re-validates.
pub fn hpp_obstruction(m: &Matroid, budget: &Budget, seed: u64) -> Result<ObstructionReport> {
    require_rank3(m)?;
    let mut report = ObstructionReport {
        status: ObstructionStatus::Inconclusive,
        matroid_id: m.fingerprint(),
        steps: Vec::new(),
        relations: None,
        quotient_graphs: Vec::new(),
        lambda: None,
        factorization: None,
        witness: None,
        failure: None,
    };
    fn stop(mut r: ObstructionReport, name: &'static str, detail: String) -> ObstructionReport {
        r.steps.push(ChainStep { name, ok: false, detail });
        r.failure = Some(name);
        r
    }

    let relations = key_relations(m)?;
    if relations.is_empty() {
        return Ok(stop(report, STEP_RELATIONS, "no dependent 3-set forces a relation".into()));
    }
    report.steps.push(ChainStep {
        name: STEP_RELATIONS,
        ok: true,
        detail: format!("{} relations over {} bases", relations.len(), relations.used_bases.len()),
    });
    report.relations = Some(relations.clone());

    let graphs = all_quotient_graphs(m)?;
    let bad = graphs.iter().find(|g| !g.connected).map(|g| (g.x, g.y));
    report.quotient_graphs = graphs;
    if let Some((x, y)) = bad {
        return Ok(stop(report, STEP_QUOTIENT_GRAPHS, format!("G_{x},{y} is empty or disconnected")));
    }
    let count = report.quotient_graphs.len();
    report.steps.push(ChainStep {
        name: STEP_QUOTIENT_GRAPHS,
        ok: true,
        detail: format!("{count} connected quotient graphs"),
    });

    let lambda = match lambda_consistency(m, &relations)? {
        LambdaConsistency::Consistent(map) => map,
        LambdaConsistency::Uncovered { x, y, from, to } => {
            return Ok(stop(
                report,
                STEP_LAMBDA,
                format!("edge {from:?}-{to:?} of G_{x},{y} is not covered by a relation"),
            ));
        }
    };
    report.steps.push(ChainStep {
        name: STEP_LAMBDA,
        ok: true,
        detail: format!("{} quotients, {} edges covered", lambda.representatives.len(), lambda.edges_covered),
    });
    report.lambda = Some(lambda.clone());

    let factorization = match weight_factorization(m, &lambda, &relations)? {
        FactorizationOutcome::Factored(w) => w,
        other => return Ok(stop(report, STEP_FACTORIZATION, format!("{other:?}"))),
    };
    report.steps.push(ChainStep {
        name: STEP_FACTORIZATION,
        ok: true,
        detail: format!(
            "{} triples, {} exchange edges, solution dimension {} = product dimension {}",
            factorization.triples.len(),
            factorization.exchange_edges,
            factorization.solution_dimension,
            factorization.product_dimension
        ),
    });
    report.factorization = Some(factorization);

    match refute_uniform(m, budget, seed)? {
        Some(w) => {
            report.steps.push(ChainStep {
                name: STEP_REFUTATION,
                ok: true,
                detail: String::from("basis generating polynomial is not stable"),
            });
            report.witness = Some(w);
            report.status = ObstructionStatus::NotHpp;
            Ok(report)
        }
        None => Ok(stop(report, STEP_REFUTATION, "no witness within budget".into())),
    }
}

#[cfg(test)]
mod tests;
