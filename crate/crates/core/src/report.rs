//! Trichotomy reports: class membership, ω, Δ, χ, which degree branch the
//! graph falls in, and any claim that failed to hold on it.

use serde::Serialize;

use crate::clique::omega;
use crate::colorer::{ConstructiveColorer, RepairTrace};
use crate::coloring::{exact_chromatic, Coloring, EXACT_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{is_c5, is_in_class, ForbiddenWitness, Membership};

/// Position of `Δ` relative to `2ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `Δ = 2ω − 1`; only `(Δ, ω) = (5, 3)` occurs in the class.
    WheelCase,
    /// `Δ = 2ω − 2`.
    MiddleCase,
    /// `Δ ≤ 2ω − 3`.
    TheoremCase,
    /// `Δ > 2ω − 1`. Never occurs for an in-class graph.
    AboveBound,
    OutOfClass,
}

impl Branch {
    pub fn of(in_class: bool, n: usize, delta: usize, omega: usize) -> Branch {
        if !in_class {
            return Branch::OutOfClass;
        }
        if crate::colorer::theorem_bound_holds(n, delta, omega) {
            return Branch::TheoremCase;
        }
        match (delta + 2).cmp(&(2 * omega)) {
            std::cmp::Ordering::Equal => Branch::MiddleCase,
            std::cmp::Ordering::Greater if delta + 1 == 2 * omega => Branch::WheelCase,
            std::cmp::Ordering::Greater => Branch::AboveBound,
            std::cmp::Ordering::Less => unreachable!("Δ ≤ 2ω − 3 handled above"),
        }
    }
}

/// A structural claim that failed on the reported graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "snake_case")]
pub enum ClaimViolation {
    /// `Δ > 2ω − 1`, or `Δ = 2ω − 1` with `(Δ, ω) ≠ (5, 3)`.
    Corollary1 { delta: usize, omega: usize },
    /// Wheel branch without `χ = ω + 1` or without an induced W6.
    Corollary2 { chi: usize, omega: usize, w6_found: bool },
    /// Theorem branch with `χ ≠ ω`.
    Theorem { chi: usize, omega: usize },
    /// `χ` outside `[ω, ω + 1]`.
    Result2 { chi: usize, omega: usize },
    /// The constructive colorer could not meet its target.
    Colorer { message: String },
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub membership: Membership,
    pub omega: usize,
    pub delta: usize,
    pub chi: usize,
    /// Optimal coloring found by the exact oracle.
    pub chi_witness: Coloring,
    pub branch: Branch,
    pub w6_witness: Option<VertexSet>,
    /// Constructive coloring, for in-class graphs.
    pub coloring: Option<Coloring>,
    pub trace: Option<RepairTrace>,
    pub violations: Vec<ClaimViolation>,
}

/// Computes every report field for `g` (`n ≤ 64`).
pub fn classify_trichotomy(g: &Graph) -> Result<ClassReport> {
    let n = g.vertex_count();
    if n > EXACT_MAX_VERTICES {
        return Err(Error::ScaleExceeded { n, max: EXACT_MAX_VERTICES });
    }
    let membership = is_in_class(g);
    let omega = omega(g);
    let delta = g.max_degree();
    let (chi, chi_witness) = exact_chromatic(g)?;
    let branch = Branch::of(membership.is_in_class(), n, delta, omega);
    let mut violations = Vec::new();

    let (coloring, trace) = if membership.is_in_class() {
        match ConstructiveColorer::default().color_unchecked(g) {
            Ok((c, t)) => (Some(c), Some(t)),
            Err(e) => {
                violations.push(ClaimViolation::Colorer { message: e.to_string() });
                (None, None)
            }
        }
    } else {
        (None, None)
    };

    let mut w6_witness = None;
    if membership.is_in_class() {
        if matches!(branch, Branch::AboveBound) || (branch == Branch::WheelCase && (delta, omega) != (5, 3)) {
            violations.push(ClaimViolation::Corollary1 { delta, omega });
        }
        if chi < omega || chi > omega + 1 {
            violations.push(ClaimViolation::Result2 { chi, omega });
        }
        match branch {
            Branch::TheoremCase if chi != omega => {
                violations.push(ClaimViolation::Theorem { chi, omega });
            }
            Branch::WheelCase => {
                if chi == omega + 1 {
                    w6_witness = find_induced_w6(g);
                }
                if chi != omega + 1 || w6_witness.is_none() {
                    violations.push(ClaimViolation::Corollary2 { chi, omega, w6_found: w6_witness.is_some() });
                }
            }
            _ => {}
        }
    }

    Ok(ClassReport { membership, omega, delta, chi, chi_witness, branch, w6_witness, coloring, trace, violations })
}

/// Least induced 6-vertex wheel: by hub, then by the rim's 5-subset of the
/// hub's neighborhood. Returns all six vertices.
pub fn find_induced_w6(g: &Graph) -> Option<VertexSet> {
    for hub in g.vertices().filter(|&v| g.degree(v) >= 5) {
        let nbrs = g.neighbors(hub).to_vec();
        let mut pick = [0usize, 1, 2, 3, 4];
        loop {
            let rim: VertexSet = pick.iter().map(|&i| nbrs[i]).collect();
            if is_c5(g, &rim) {
                let mut wheel = rim;
                wheel.insert(hub);
                return Some(wheel);
            }
            if !next_combination(&mut pick, nbrs.len()) {
                break;
            }
        }
    }
    None
}

/// Advances `pick` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Serialize)]
struct ColoringJson<'a> {
    assignment: &'a [u32],
    colors_used: usize,
}

#[derive(Serialize)]
struct WitnessJson {
    kind: &'static str,
    vertices: Vec<usize>,
}

/// Field order here is the on-disk key order.
#[derive(Serialize)]
struct ReportJson<'a> {
    in_class: bool,
    omega: usize,
    delta: usize,
    chi: usize,
    branch: Branch,
    w6_witness: Option<Vec<usize>>,
    coloring: Option<ColoringJson<'a>>,
    witnesses: Vec<WitnessJson>,
    claim_violations: &'a [ClaimViolation],
}

fn witness_json(w: &ForbiddenWitness) -> WitnessJson {
    WitnessJson { kind: w.kind_name(), vertices: w.vertices().iter().map(|v| v + 1).collect() }
}

/// Pretty-printed JSON with a fixed key order. Vertex ids are 1-based, as in
/// the DIMACS input.
pub fn emit_report(report: &ClassReport) -> String {
    let json = ReportJson {
        in_class: report.membership.is_in_class(),
        omega: report.omega,
        delta: report.delta,
        chi: report.chi,
        branch: report.branch,
        w6_witness: report.w6_witness.as_ref().map(|s| s.iter().map(|v| v + 1).collect()),
        coloring: report
            .coloring
            .as_ref()
            .map(|c| ColoringJson { assignment: c.assignment(), colors_used: c.colors_used() }),
        witnesses: report.membership.witness().iter().map(witness_json).collect(),
        claim_violations: &report.violations,
    };
    let mut text = serde_json::to_string_pretty(&json).expect("report is serializable");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{blown_up_odd_cycle, wheel};

    #[test]
    fn wheel_case() {
        let r = classify_trichotomy(&wheel(5).unwrap()).unwrap();
        assert_eq!(r.branch, Branch::WheelCase);
        assert_eq!((r.omega, r.delta, r.chi), (3, 5, 4));
        assert_eq!(r.w6_witness, Some(VertexSet::full(6)));
        assert!(r.violations.is_empty());
        assert_eq!(r.coloring.unwrap().colors_used(), 4);
    }

    #[test]
    fn middle_and_theorem_cases() {
        let r = classify_trichotomy(&blown_up_odd_cycle(2, 2).unwrap()).unwrap();
        assert_eq!(r.branch, Branch::MiddleCase);
        assert_eq!((r.omega, r.delta, r.chi), (3, 4, 4));

        let k4e = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let r = classify_trichotomy(&k4e).unwrap();
        assert_eq!(r.branch, Branch::TheoremCase);
        assert_eq!((r.omega, r.delta, r.chi), (3, 3, 3));
    }

    #[test]
    fn out_of_class() {
        let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = classify_trichotomy(&claw).unwrap();
        assert_eq!(r.branch, Branch::OutOfClass);
        assert!(matches!(r.membership.witness(), Some(ForbiddenWitness::Claw { .. })));
        assert!(r.coloring.is_none());
        let json = emit_report(&r);
        assert!(json.contains("\"in_class\": false"));
        assert!(json.contains("\"kind\": \"claw\""));
    }

    #[test]
    fn branch_arithmetic() {
        assert_eq!(Branch::of(true, 1, 0, 1), Branch::MiddleCase);
        assert_eq!(Branch::of(true, 2, 1, 2), Branch::TheoremCase);
        assert_eq!(Branch::of(true, 5, 2, 2), Branch::MiddleCase);
        assert_eq!(Branch::of(true, 7, 5, 3), Branch::WheelCase);
        assert_eq!(Branch::of(true, 9, 7, 3), Branch::AboveBound);
        assert_eq!(Branch::of(true, 0, 0, 0), Branch::TheoremCase);
        assert_eq!(Branch::of(false, 4, 3, 2), Branch::OutOfClass);
    }

    #[test]
    fn report_json_key_order() {
        let json = emit_report(&classify_trichotomy(&wheel(5).unwrap()).unwrap());
        let keys = ["in_class", "omega", "delta", "chi", "branch", "w6_witness", "coloring", "witnesses"];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"branch\": \"wheel_case\""));
        assert!(json.contains("\"chi\": 4"));
    }

    #[test]
    fn combinations() {
        let mut pick = [0, 1];
        let mut all = vec![pick];
        while next_combination(&mut pick, 4) {
            all.push(pick);
        }
        assert_eq!(all, vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }
}
