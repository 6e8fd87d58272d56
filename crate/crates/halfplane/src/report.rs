//! JSON renderings of verdicts, witnesses and reports.
//!
//! Variable and element indices are 1-based, matching the input formats.

use halfplane_core::combstruct::{DeltaViolation, JumpViolation, MatroidViolation};
use halfplane_core::constructors::{ConstructionTag, Source};
use halfplane_core::obstruction::{ObstructionReport, TripleProof};
use halfplane_core::realroot::RealUnivariate;
use halfplane_core::stability::{
    Budget, Certificate, NonnegCertificate, PairStatus, RayleighReport, StabilityVerdict, Witness,
};
use serde_json::{json, Value};

use crate::formats::{graph_json, matrix_json, matroid_json, one_based, polynomial_json, rational_json, rationals_json};

pub fn budget_json(b: &Budget) -> Value {
    json!({ "grid": b.grid, "samples": b.samples, "descent_iters": b.descent_iters })
}

fn univariate_json(p: &RealUnivariate) -> Value {
    rationals_json(p.coeffs())
}

pub fn nonneg_json(c: &NonnegCertificate) -> &'static str {
    match c {
        NonnegCertificate::Zero => "zero",
        NonnegCertificate::EvenSquares => "even-squares",
        NonnegCertificate::PsdQuadratic => "psd-quadratic",
        NonnegCertificate::NonnegativeCoefficients => "nonnegative-coefficients",
    }
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Rayleigh(r) => json!({
            "kind": "rayleigh",
            "i": r.i + 1,
            "j": r.j + 1,
            "point": rationals_json(&r.point),
            "value": rational_json(&r.value),
        }),
        Witness::Line(l) => json!({
            "kind": "line",
            "base": rationals_json(&l.base),
            "direction": rationals_json(&l.direction),
            "restriction": polynomial_json(&l.restriction),
        }),
        Witness::HermiteBiehler { h, g } => json!({
            "kind": "hermite-biehler",
            "h": univariate_json(h),
            "g": univariate_json(g),
        }),
        Witness::Polarized(inner) => json!({ "kind": "polarized", "inner": witness_json(inner) }),
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::UnivariateHb => json!({ "kind": "univariate-hb" }),
        Certificate::BivariateDeterminant { delta } => {
            json!({ "kind": "bivariate-determinant", "delta": rational_json(delta) })
        }
        Certificate::MultiaffineDeltaExact { pairs } => json!({
            "kind": "multiaffine-delta-exact",
            "pairs": pairs
                .iter()
                .map(|p| json!({ "i": p.i + 1, "j": p.j + 1, "certificate": nonneg_json(&p.certificate) }))
                .collect::<Vec<_>>(),
        }),
        Certificate::Polarized(inner) => json!({ "kind": "polarized", "inner": certificate_json(inner) }),
        Certificate::ByConstruction { kind } => json!({ "kind": "by-construction", "construction": kind }),
    }
}

pub fn verdict_json(v: &StabilityVerdict) -> Value {
    match v {
        StabilityVerdict::CertifiedStable(c) => json!({
            "status": v.status(),
            "method": c.method().tag(),
            "certificate": certificate_json(c),
        }),
        StabilityVerdict::Refuted(w) => json!({
            "status": v.status(),
            "witness": witness_json(w),
        }),
        StabilityVerdict::Unknown(u) => json!({
            "status": v.status(),
            "reason": u.reason,
            "open_pairs": u.open_pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
            "lowest_sample": u.lowest_sample,
        }),
    }
}

pub fn rayleigh_json(r: &RayleighReport) -> Value {
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|p| {
            let mut v = match &p.status {
                PairStatus::Certified(c) => json!({ "status": "certified", "certificate": nonneg_json(c) }),
                PairStatus::Refuted { point, value } => json!({
                    "status": "refuted",
                    "point": rationals_json(point),
                    "value": rational_json(value),
                }),
                PairStatus::Unknown => json!({ "status": "unknown" }),
            };
            v["i"] = json!(p.i + 1);
            v["j"] = json!(p.j + 1);
            v["lowest_sample"] = json!(p.lowest_sample);
            v
        })
        .collect();
    json!({
        "matroid_id": format!("{:016x}", r.matroid_id),
        "domain": r.domain.name(),
        "refuted": r.is_refuted(),
        "all_certified": r.all_certified(),
        "pairs": pairs,
    })
}

pub fn jump_violation_json(v: &JumpViolation) -> Value {
    json!({ "alpha": v.alpha, "beta": v.beta, "sigma": v.sigma })
}

pub fn delta_violation_json(v: &DeltaViolation) -> Value {
    json!({ "a": v.a, "b": v.b, "x": v.x + 1 })
}

pub fn matroid_violation_json(v: &MatroidViolation) -> Value {
    match v {
        MatroidViolation::Cardinality { a, b } => {
            json!({ "kind": "cardinality", "a": one_based(a), "b": one_based(b) })
        }
        MatroidViolation::Exchange { a, b, x } => {
            json!({ "kind": "exchange", "a": one_based(a), "b": one_based(b), "x": x + 1 })
        }
    }
}

pub fn tag_json(t: &ConstructionTag) -> Value {
    let source = match &t.source {
        Source::Pencil { matrices, constant } => json!({
            "pencil": matrices.iter().map(matrix_json).collect::<Vec<_>>(),
            "constant": matrix_json(constant),
        }),
        Source::Matrix(a) => json!({ "matrix": matrix_json(a) }),
        Source::Graph(g) => json!({ "graph": graph_json(g) }),
        Source::RootedGraph { graph, root } => json!({ "graph": graph_json(graph), "root": root + 1 }),
        Source::Matroid(m) => json!({ "matroid": matroid_json(m) }),
    };
    json!({
        "kind": t.kind.name(),
        "half_plane": t.half_plane.map(|h| h.name()),
        "source": source,
    })
}

fn basis_json(b: &[usize]) -> Value {
    json!(one_based(b))
}

pub fn obstruction_json(r: &ObstructionReport) -> Value {
    let steps: Vec<Value> =
        r.steps.iter().map(|s| json!({ "name": s.name, "ok": s.ok, "detail": s.detail })).collect();
    let relations = r.relations.as_ref().map(|rel| {
        json!({
            "count": rel.len(),
            "used_bases": rel.used_bases.len(),
            "equations": rel
                .equations
                .iter()
                .map(|(l, rr)| json!([[basis_json(&l[0]), basis_json(&l[1])], [basis_json(&rr[0]), basis_json(&rr[1])]]))
                .collect::<Vec<_>>(),
        })
    });
    let graphs: Vec<Value> = r
        .quotient_graphs
        .iter()
        .map(|g| {
            json!({
                "x": g.x + 1,
                "y": g.y + 1,
                "vertices": g.vertices.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
                "edges": g.edges.len(),
                "connected": g.connected,
            })
        })
        .collect();
    let lambda = r.lambda.as_ref().map(|l| {
        json!({
            "edges_covered": l.edges_covered,
            "quotients": l
                .representatives
                .iter()
                .map(|(&(x, y), &(i, j))| json!({ "x": x + 1, "y": y + 1, "via": [i + 1, j + 1] }))
                .collect::<Vec<_>>(),
        })
    });
    let factorization = r.factorization.as_ref().map(|f| {
        json!({
            "normalization": f.normalization + 1,
            "root_basis": basis_json(&f.root_basis),
            "exchange_edges": f.exchange_edges,
            "solution_dimension": f.solution_dimension,
            "product_dimension": f.product_dimension,
            "triples": f
                .triples
                .iter()
                .map(|t| match t {
                    TripleProof::CommonPair { triple, pair } => json!({
                        "triple": basis_json(triple),
                        "pair": [pair.0 + 1, pair.1 + 1],
                    }),
                    TripleProof::Routed { triple, via } => json!({
                        "triple": basis_json(triple),
                        "via": via + 1,
                    }),
                })
                .collect::<Vec<_>>(),
        })
    });
    json!({
        "status": r.status.name(),
        "matroid_id": format!("{:016x}", r.matroid_id),
        "failure": r.failure,
        "steps": steps,
        "relations": relations,
        "quotient_graphs": graphs,
        "lambda": lambda,
        "factorization": factorization,
        "witness": r.witness.as_ref().map(witness_json),
    })
}
