//! Polynomials that are stable by construction.
//!
//! Every constructor returns the polynomial together with a
//! [`ConstructionTag`] recording the half-plane it is stable for and the data
//! it was built from.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combstruct::{k_subsets, matchings, Matroid, WeightedGraph};
use crate::linalg::{polynomial_det, Matrix};
use crate::number::{self, norm_sqr, ComplexRational};
use crate::poly::Polynomial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    DetPencil,
    PrincipalMinors,
    Matching,
    Forest,
    SpanningTree,
    DegreeSystem,
    Representable,
    BasisGenerating,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::DetPencil => "det-pencil",
            ConstructionKind::PrincipalMinors => "principal-minors",
            ConstructionKind::Matching => "matching",
            ConstructionKind::Forest => "forest",
            ConstructionKind::SpanningTree => "spanning-tree",
            ConstructionKind::DegreeSystem => "degree",
            ConstructionKind::Representable => "representable",
            ConstructionKind::BasisGenerating => "basis",
        }
    }
}

/// Open half-plane on which the constructed polynomial has no zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfPlane {
    /// `Im z > 0`.
    Upper,
    /// `Re z > 0` (Hurwitz stability).
    Right,
}

impl HalfPlane {
    pub fn name(self) -> &'static str {
        match self {
            HalfPlane::Upper => "upper",
            HalfPlane::Right => "right",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Pencil matrices followed by the constant matrix.
    Pencil { matrices: Vec<Matrix>, constant: Matrix },
    Matrix(Matrix),
    Graph(WeightedGraph),
    /// A graph together with the chosen root vertex.
    RootedGraph { graph: WeightedGraph, root: usize },
    Matroid(Matroid),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTag {
    pub kind: ConstructionKind,
    /// `None` for polynomials that carry no stability guarantee.
    pub half_plane: Option<HalfPlane>,
    pub source: Source,
}

fn guard(what: &'static str, limit: usize, found: usize) -> Result<()> {
    if found > limit {
        return Err(Error::SizeGuard { what, limit, found });
    }
    Ok(())
}

/// Positive semidefiniteness of a Hermitian matrix, decided from the signs
/// of the characteristic polynomial coefficients `E_k` (sums of principal
/// minors).
pub fn psd_check(a: &Matrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("matrix is not square".into()));
    }
    a.is_psd_hermitian()
}

/// `det(z_1 A_1 + ⋯ + z_m A_m + B)` for positive semidefinite `A_k` and
/// Hermitian `B`; real stable.
pub fn det_pencil(pencil: &[Matrix], constant: &Matrix) -> Result<(Polynomial, ConstructionTag)> {
    let n = constant.rows();
    guard("matrix size", 8, n)?;
    if !constant.is_square() {
        return Err(Error::ShapeMismatch("constant matrix is not square".into()));
    }
    if !constant.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    for (k, a) in pencil.iter().enumerate() {
        if a.rows() != n || a.cols() != n {
            return Err(Error::ShapeMismatch(alloc::format!("pencil matrix {k} is not {n}x{n}")));
        }
        if !a.is_hermitian() || !psd_check(a)? {
            return Err(Error::NotPositiveSemidefinite(k));
        }
    }
    let m = pencil.len();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = Polynomial::constant(m, constant.get(i, j).clone());
                    for (k, a) in pencil.iter().enumerate() {
                        p = &p + &Polynomial::variable(m, k).scale(a.get(i, j));
                    }
                    p
                })
                .collect()
        })
        .collect();
    let f = polynomial_det(&entries, m)?;
    assert!(f.is_real(), "determinant of a Hermitian pencil has a non-real coefficient");
    let tag = ConstructionTag {
        kind: ConstructionKind::DetPencil,
        half_plane: Some(HalfPlane::Upper),
        source: Source::Pencil { matrices: pencil.to_vec(), constant: constant.clone() },
    };
    Ok((f, tag))
}

/// `det(I + AZ) = Σ_S det(A[S]) z^S`. Real stable for Hermitian `A`,
/// Hurwitz stable for skew-Hermitian `A`.
pub fn principal_minors_poly(a: &Matrix) -> Result<(Polynomial, ConstructionTag)> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("matrix is not square".into()));
    }
    let n = a.rows();
    guard("matrix size", 12, n)?;
    let half_plane = if a.is_hermitian() {
        HalfPlane::Upper
    } else if a.is_skew_hermitian() {
        HalfPlane::Right
    } else {
        return Err(Error::NotHermitianOrSkew);
    };
    let mut f = Polynomial::zero(n);
    for k in 0..=n {
        for s in k_subsets(n, k) {
            let minor = a.principal_submatrix(&s).det();
            let mut exp = vec![0u32; n];
            for &i in &s {
                exp[i] = 1;
            }
            f.add_term(exp, minor);
        }
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::PrincipalMinors,
        half_plane: Some(half_plane),
        source: Source::Matrix(a.clone()),
    };
    Ok((f, tag))
}

/// `Σ_M Π_{uv ∈ M} λ_uv z_u z_v` over all matchings, the empty one included.
/// Parallel edges are merged by summing weights. Hurwitz stable.
pub fn matching_polynomial(graph: &WeightedGraph) -> Result<(Polynomial, ConstructionTag)> {
    graph.check_nonnegative()?;
    let edges = graph.merged_edges();
    guard("edge count", 24, edges.len())?;
    let n = graph.vertex_count();
    let mut f = Polynomial::zero(n);
    for m in matchings(n, &edges) {
        let mut exp = vec![0u32; n];
        let mut c = number::int(1);
        for idx in m {
            let e = &edges[idx];
            exp[e.u] = 1;
            exp[e.v] = 1;
            c *= &e.weight;
        }
        f.add_term(exp, number::real(c));
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::Matching,
        half_plane: Some(HalfPlane::Right),
        source: Source::Graph(graph.clone()),
    };
    Ok((f, tag))
}

/// Largest edge count for which [`forest_polynomial`] repeats the
/// computation by forest enumeration.
const FOREST_CROSS_CHECK_EDGES: usize = 12;

/// `det(L + Z)` where `L` is the Laplacian with one symbolic weight `w_e`
/// per edge. Variables are `z_0..z_{n-1}` followed by `w_0..w_{m-1}` in edge
/// order; edge weights of the input are not used. Real stable.
pub fn forest_polynomial(graph: &WeightedGraph) -> Result<(Polynomial, ConstructionTag)> {
    let n = graph.vertex_count();
    guard("vertex count", 8, n)?;
    let m = graph.edges().len();
    let nvars = n + m;
    let mut entries = vec![vec![Polynomial::zero(nvars); n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = Polynomial::variable(nvars, i);
    }
    for (k, e) in graph.edges().iter().enumerate() {
        let w = Polynomial::variable(nvars, n + k);
        entries[e.u][e.u] = &entries[e.u][e.u] + &w;
        entries[e.v][e.v] = &entries[e.v][e.v] + &w;
        entries[e.u][e.v] = &entries[e.u][e.v] - &w;
        entries[e.v][e.u] = &entries[e.v][e.u] - &w;
    }
    let f = polynomial_det(&entries, nvars)?;
    if m <= FOREST_CROSS_CHECK_EDGES {
        assert_eq!(f, rooted_forest_expansion(graph)?, "matrix-forest expansion mismatch");
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::Forest,
        half_plane: Some(HalfPlane::Upper),
        source: Source::Graph(graph.clone()),
    };
    Ok((f, tag))
}

/// `Σ_F z^{roots(F)} w^{edges(F)}` over rooted spanning forests, computed by
/// enumerating acyclic edge sets and choosing one root per component. Same
/// variable layout as [`forest_polynomial`].
pub fn rooted_forest_expansion(graph: &WeightedGraph) -> Result<Polynomial> {
    let n = graph.vertex_count();
    let m = graph.edges().len();
    guard("edge count", 20, m)?;
    let nvars = n + m;
    let mut total = Polynomial::zero(nvars);
    for mask in 0u32..(1u32 << m) {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut acyclic = true;
        let mut wexp = vec![0u32; nvars];
        for (k, e) in graph.edges().iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                acyclic = false;
                break;
            }
            parent[a] = b;
            wexp[n + k] = 1;
        }
        if !acyclic {
            continue;
        }
        // product over components of (sum of z_v in the component)
        let mut term = Polynomial::monomial(wexp, number::cint(1, 0));
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut index_of = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if index_of[r] == usize::MAX {
                index_of[r] = components.len();
                components.push(Vec::new());
            }
            components[index_of[r]].push(v);
        }
        for comp in components {
            let mut sum = Polynomial::zero(nvars);
            for v in comp {
                sum = &sum + &Polynomial::variable(nvars, v);
            }
            term = &term * &sum;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `Σ_T w^T` over spanning trees, as `∂f/∂z_root` at `z = 0` for the forest
/// polynomial `f`. Variables are the edge weights `w_0..w_{m-1}`. The result
/// is recomputed from a second root and compared.
pub fn spanning_tree_polynomial(
    graph: &WeightedGraph,
    root: usize,
) -> Result<(Polynomial, ConstructionTag)> {
    let n = graph.vertex_count();
    if root >= n {
        return Err(Error::VariableOutOfRange { index: root, nvars: n });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let (forest, _) = forest_polynomial(graph)?;
    let m = graph.edges().len();
    let from_root = |r: usize| -> Result<Polynomial> {
        let mut p = forest.partial_derivative(r)?;
        for v in 0..n {
            p = p.specialize(v, &ComplexRational::zero())?;
        }
        p.select_variables(&(n..n + m).collect::<Vec<_>>())
    };
    let t = from_root(root)?;
    if n > 1 {
        assert_eq!(t, from_root((root + 1) % n)?, "spanning tree polynomial depends on the root");
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::SpanningTree,
        half_plane: Some(HalfPlane::Upper),
        source: Source::RootedGraph { graph: graph.clone(), root },
    };
    Ok((t, tag))
}

/// `Π_{uv ∈ E} (1 + z_u z_v) = Σ_H z^{D(H)}` over spanning subgraphs; edge
/// weights are not used. Hurwitz stable.
pub fn degree_poly(graph: &WeightedGraph) -> Result<(Polynomial, ConstructionTag)> {
    let m = graph.edges().len();
    guard("edge count", 20, m)?;
    let n = graph.vertex_count();
    let mut f = Polynomial::one(n);
    for e in graph.edges() {
        let mut exp = vec![0u32; n];
        exp[e.u] = 1;
        exp[e.v] = 1;
        let factor = &Polynomial::one(n) + &Polynomial::monomial(exp, number::cint(1, 0));
        f = &f * &factor;
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::DegreeSystem,
        half_plane: Some(HalfPlane::Right),
        source: Source::Graph(graph.clone()),
    };
    Ok((f, tag))
}

/// `det(A Z A*) = Σ_{|S| = r} |det A[S]|² z^S` for an `r × n` matrix `A`.
/// Real stable; identically zero when `A` has rank below `r`.
pub fn representable_matroid_poly(a: &Matrix) -> Result<(Polynomial, ConstructionTag)> {
    let (r, n) = (a.rows(), a.cols());
    if r > n {
        return Err(Error::TooManyRows { rows: r, cols: n });
    }
    guard("column count", 12, n)?;
    let rows: Vec<usize> = (0..r).collect();
    let mut f = Polynomial::zero(n);
    for s in k_subsets(n, r) {
        let d = a.submatrix(&rows, &s).det();
        let mut exp = vec![0u32; n];
        for &i in &s {
            exp[i] = 1;
        }
        f.add_term(exp, number::real(norm_sqr(&d)));
    }
    let tag = ConstructionTag {
        kind: ConstructionKind::Representable,
        half_plane: Some(HalfPlane::Upper),
        source: Source::Matrix(a.clone()),
    };
    Ok((f, tag))
}

/// `M(z) = Σ_B z^B` over the bases of `m`. Carries no stability claim.
pub fn basis_generating_poly(m: &Matroid) -> Result<Polynomial> {
    let n = m.ground_size();
    let mut f = Polynomial::zero(n);
    for b in m.bases() {
        let mut exp = vec![0u32; n];
        for &i in b {
            exp[i] = 1;
        }
        f.add_term(exp, number::cint(1, 0));
    }
    Ok(f)
}

/// Tag for [`basis_generating_poly`] output.
pub fn basis_generating_tag(m: &Matroid) -> ConstructionTag {
    ConstructionTag {
        kind: ConstructionKind::BasisGenerating,
        half_plane: None,
        source: Source::Matroid(m.clone()),
    }
}
