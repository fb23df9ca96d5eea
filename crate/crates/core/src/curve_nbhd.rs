//! Curve neighborhoods `Γ_d(X(λ))` read off the moment graph: the Bruhat-maximal
//! vertices reachable from some `u <= λ` by a walk of total degree at most `d`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bruhat::{down_set, maximal, schubert_dim};
use crate::error::{Error, Result};
use crate::moment_graph::{GraphKind, MomentGraph, DEFAULT_SIZE_CAP};
use crate::root_system::{DegreeVector, FlagContext};
use crate::weyl::{CosetRep, Notation};

/// Pareto-minimal used budgets at one vertex.
#[derive(Debug, Clone, Default)]
struct Frontier(Vec<DegreeVector>);

impl Frontier {
    fn dominates(&self, used: &DegreeVector) -> bool {
        self.0.iter().any(|l| l.leq(used))
    }

    /// Inserts `used` unless dominated; drops labels it dominates.
    fn insert(&mut self, used: &DegreeVector) -> bool {
        if self.dominates(used) {
            return false;
        }
        self.0.retain(|l| !used.leq(l));
        self.0.push(used.clone());
        true
    }

    fn contains(&self, used: &DegreeVector) -> bool {
        self.0.contains(used)
    }
}

/// All vertices reachable from `sources` by a walk of degree `<= budget`, sorted.
pub fn reachable(
    g: &MomentGraph,
    sources: &[CosetRep],
    budget: &DegreeVector,
) -> Result<Vec<CosetRep>> {
    let m = g.ctx().m;
    if budget.len() != m {
        return Err(Error::DegreeLength {
            got: budget.len(),
            expected: m,
        });
    }
    let mut labels = vec![Frontier::default(); g.vertices().len()];
    let mut queue = VecDeque::new();
    let zero = DegreeVector::zero(m);
    for s in sources {
        let v = g.require(s)?;
        if labels[v].insert(&zero) {
            queue.push_back((v, zero.clone()));
        }
    }
    while let Some((v, used)) = queue.pop_front() {
        // stale: superseded by a smaller label after being queued
        if !labels[v].contains(&used) {
            continue;
        }
        for e in g.out_edges(v) {
            let next = &used + &e.degree;
            if next.leq(budget) && labels[e.dst].insert(&next) {
                queue.push_back((e.dst, next));
            }
        }
    }
    Ok(labels
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.0.is_empty())
        .map(|(v, _)| g.vertex(v).clone())
        .collect())
}

/// One irreducible component `X(rep)` of a curve neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub rep: CosetRep,
    pub dim: usize,
    pub expected_dimension: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodResult {
    pub ctx: FlagContext,
    pub lambda: CosetRep,
    pub degree: DegreeVector,
    pub components: Vec<Component>,
}

#[derive(Serialize)]
struct ComponentJson {
    dim: usize,
    expected_dimension: bool,
    rep: String,
}

#[derive(Serialize)]
struct NeighborhoodJson {
    components: Vec<ComponentJson>,
    count: usize,
    degree: Vec<u32>,
    lambda: String,
}

impl NeighborhoodResult {
    pub fn reps(&self) -> Vec<CosetRep> {
        self.components.iter().map(|c| c.rep.clone()).collect()
    }

    pub fn to_json(&self, notation: Notation) -> Result<String> {
        let doc = NeighborhoodJson {
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    dim: c.dim,
                    expected_dimension: c.expected_dimension,
                    rep: c.rep.render(&self.ctx, notation),
                })
                .collect(),
            count: self.components.len(),
            degree: self.degree.0.clone(),
            lambda: self.lambda.render(&self.ctx, notation),
        };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }
}

/// `Γ_d(X(λ))` as its list of Bruhat-maximal components, sorted lexicographically.
pub fn gamma(
    g: &MomentGraph,
    lambda: &CosetRep,
    degree: &DegreeVector,
) -> Result<NeighborhoodResult> {
    let ctx = *g.ctx();
    g.require(lambda)?;
    let sources = down_set(lambda, &ctx, g.kind() == GraphKind::Odd);
    let reached = reachable(g, &sources, degree)?;
    let lambda_dim = schubert_dim(lambda, &ctx)?;
    let target = expected_dimension(&ctx, lambda_dim, degree);
    let components = maximal(&reached)
        .into_iter()
        .map(|rep| {
            let dim = schubert_dim(&rep, &ctx)?;
            Ok(Component {
                rep,
                dim,
                expected_dimension: dim as i64 == target,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NeighborhoodResult {
        ctx,
        lambda: lambda.clone(),
        degree: degree.clone(),
        components,
    })
}

/// The components predicted for `Γ_{(1^m)}(pt)`: `(bar(m+1)|2|…|m)` and, for
/// `2 <= j <= m`, `(bar(j)|2|…|j-1|1|j+1|…|m)`.
pub fn expected_components(ctx: &FlagContext) -> Vec<CosetRep> {
    let m = ctx.m as u8;
    let mut out = Vec::with_capacity(ctx.m);
    let mut first = vec![ctx.bar(m + 1)];
    first.extend(2..=m);
    out.push(first);
    for j in 2..=m {
        let mut head: Vec<u8> = (1..=m).collect();
        head[0] = ctx.bar(j);
        head[j as usize - 1] = 1;
        out.push(head);
    }
    out.into_iter()
        .map(|h| CosetRep::new(h, ctx).expect("well-formed head"))
        .collect()
}

/// Total degree of `q^d`.
pub fn q_degree(ctx: &FlagContext, degree: &DegreeVector) -> i64 {
    ctx.q_degrees()
        .iter()
        .zip(&degree.0)
        .map(|(q, d)| (*q as i64) * (*d as i64))
        .sum()
}

/// Dimension a component of `Γ_d(X(λ))` must have to contribute to
/// `τ_Div ⋆ τ_λ`, from `codim Div + codim X(λ) = deg q^d + codim Γ`.
pub fn expected_dimension(ctx: &FlagContext, lambda_dim: usize, degree: &DegreeVector) -> i64 {
    q_degree(ctx, degree) + lambda_dim as i64 - 1
}

/// Whether a component of `Γ_{(1^m)}(pt)` with the given dimension satisfies
/// `codim Div + codim pt = deg q_1⋯q_m + codim Γ`.
pub fn expected_dim_check(ctx: &FlagContext, component_dim: i64) -> bool {
    let dim = ctx.dim_if() as i64;
    let lhs = 1 + dim;
    let rhs = q_degree(ctx, &ctx.ones()) + (dim - component_dim);
    lhs == rhs
}

/// One summand `(τ_Div_i, d) · a_j · q_1⋯q_m · τ_class`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumTerm {
    pub j: usize,
    pub class: CosetRep,
    pub dim: usize,
    pub expected_dimension: bool,
}

impl QuantumTerm {
    pub fn coefficient(&self) -> String {
        format!("(τ_Div_i, d)·a_{}", self.j)
    }
}

/// The `q_1⋯q_m` part of `τ_Div_i ⋆ τ_id`, with symbolic coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumReport {
    pub ctx: FlagContext,
    pub q_degrees: Vec<u32>,
    pub terms: Vec<QuantumTerm>,
}

#[derive(Serialize)]
struct TermJson {
    class: String,
    coefficient: String,
    dim: usize,
    expected_dimension: bool,
    j: usize,
}

#[derive(Serialize)]
struct ReportJson {
    dim_if: usize,
    m: usize,
    monomial: String,
    multiplicity: usize,
    n: usize,
    q_degrees: Vec<u32>,
    terms: Vec<TermJson>,
}

impl QuantumReport {
    pub fn multiplicity(&self) -> usize {
        self.terms.len()
    }

    pub fn monomial(&self) -> String {
        (1..=self.ctx.m).map(|i| format!("q{i}")).collect()
    }

    pub fn render_text(&self, notation: Notation) -> String {
        let c = &self.ctx;
        let mut s = String::new();
        let degs: Vec<String> = self.q_degrees.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{c}: dim {}, deg q = ({})", c.dim_if(), degs.join(","));
        let sum: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("a_{}·τ_({})", t.j, t.class.render(c, notation)))
            .collect();
        let _ = writeln!(
            s,
            "τ_Div_i ⋆ τ_id = (τ_Div_i, d)·{}·({}) + other terms",
            self.monomial(),
            sum.join(" + ")
        );
        let times = if self.multiplicity() == 1 {
            "time"
        } else {
            "times"
        };
        let _ = writeln!(
            s,
            "{} appears {} {times}",
            self.monomial(),
            self.multiplicity()
        );
        let _ = writeln!(s, "{:<6}{:<20}{:>5}  expected-dim", "term", "class", "dim");
        for t in &self.terms {
            let _ = writeln!(
                s,
                "{:<6}{:<20}{:>5}  {}",
                format!("a_{}", t.j),
                t.class.render(c, notation),
                t.dim,
                if t.expected_dimension { "yes" } else { "no" }
            );
        }
        s
    }

    pub fn to_json(&self, notation: Notation) -> Result<String> {
        let doc = ReportJson {
            dim_if: self.ctx.dim_if(),
            m: self.ctx.m,
            monomial: self.monomial(),
            multiplicity: self.multiplicity(),
            n: self.ctx.n,
            q_degrees: self.q_degrees.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    class: t.class.render(&self.ctx, notation),
                    coefficient: t.coefficient(),
                    dim: t.dim,
                    expected_dimension: t.expected_dimension,
                    j: t.j,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn quantum_report(ctx: FlagContext) -> Result<QuantumReport> {
    quantum_report_with_cap(ctx, DEFAULT_SIZE_CAP)
}

/// Computes `Γ_{(1^m)}(pt)` on the odd moment graph and checks it against
/// [`expected_components`]; a mismatch is an error, not a partial report.
pub fn quantum_report_with_cap(ctx: FlagContext, cap: u128) -> Result<QuantumReport> {
    let g = MomentGraph::build_with_cap(ctx, GraphKind::Odd, cap)?;
    let result = gamma(&g, &CosetRep::identity(&ctx), &ctx.ones())?;
    let expected = expected_components(&ctx);
    let mut sorted_expected = expected.clone();
    sorted_expected.sort();
    if result.reps() != sorted_expected {
        let show = |v: &[CosetRep]| {
            v.iter()
                .map(|r| r.render(&ctx, Notation::Bar))
                .collect::<Vec<_>>()
                .join(", ")
        };
        return Err(Error::ComponentMismatch {
            expected: show(&sorted_expected),
            computed: show(&result.reps()),
        });
    }
    let terms = expected
        .into_iter()
        .enumerate()
        .map(|(k, class)| {
            let dim = schubert_dim(&class, &ctx)?;
            Ok(QuantumTerm {
                j: k + 1,
                class,
                dim,
                expected_dimension: expected_dim_check(&ctx, dim as i64),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuantumReport {
        ctx,
        q_degrees: ctx.q_degrees(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, m: usize) -> FlagContext {
        FlagContext::new(n, m).unwrap()
    }

    fn rep(head: &[u8], c: &FlagContext) -> CosetRep {
        CosetRep::new(head.to_vec(), c).unwrap()
    }

    #[test]
    fn zero_budget_reaches_sources() {
        let c = ctx(2, 2);
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        let s = vec![rep(&[2, 1], &c), rep(&[3, 1], &c)];
        assert_eq!(reachable(&g, &s, &c.zero_degree()).unwrap(), s);
    }

    #[test]
    fn small_budget() {
        let c = ctx(2, 2);
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        let id = CosetRep::identity(&c);
        let got = reachable(&g, std::slice::from_ref(&id), &DegreeVector(vec![1, 0])).unwrap();
        assert_eq!(got, vec![id, rep(&[2, 1], &c)]);
    }

    #[test]
    fn reachable_errors() {
        let c = ctx(2, 2);
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        assert!(matches!(
            reachable(&g, &[rep(&[6, 2], &c)], &c.ones()),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            reachable(&g, &[CosetRep::identity(&c)], &DegreeVector(vec![1])),
            Err(Error::DegreeLength { .. })
        ));
        assert!(gamma(&g, &rep(&[6, 2], &c), &c.ones()).is_err());
    }

    #[test]
    fn gamma_examples() {
        let c = ctx(2, 2);
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        let lam = rep(&[3, 1], &c);
        let r = gamma(&g, &lam, &c.zero_degree()).unwrap();
        assert_eq!(r.reps(), vec![lam.clone()]);
        assert_eq!(r.components[0].dim, schubert_dim(&lam, &c).unwrap());

        let r = gamma(&g, &CosetRep::identity(&c), &c.ones()).unwrap();
        assert_eq!(r.reps(), vec![rep(&[4, 2], &c), rep(&[5, 1], &c)]);
        assert!(r
            .components
            .iter()
            .all(|x| x.dim == 4 && x.expected_dimension));

        let c = ctx(5, 3);
        let g = MomentGraph::build(c, GraphKind::Odd).unwrap();
        let r = gamma(&g, &CosetRep::identity(&c), &c.ones()).unwrap();
        let mut want = vec![
            rep(&[9, 2, 3], &c),
            rep(&[11, 1, 3], &c),
            rep(&[10, 2, 1], &c),
        ];
        want.sort();
        assert_eq!(r.reps(), want);
        assert!(r.components.iter().all(|x| x.dim == 10));
    }

    #[test]
    fn expected_component_lists() {
        let c = ctx(3, 1);
        assert_eq!(expected_components(&c), vec![rep(&[c.bar(2)], &c)]);
        let c = ctx(5, 3);
        assert_eq!(
            expected_components(&c),
            vec![
                rep(&[9, 2, 3], &c),
                rep(&[11, 1, 3], &c),
                rep(&[10, 2, 1], &c)
            ]
        );
        let c = ctx(2, 2);
        assert_eq!(
            expected_components(&c),
            vec![rep(&[4, 2], &c), rep(&[5, 1], &c)]
        );
    }

    #[test]
    fn expected_dim_identity() {
        for n in 1..=8 {
            for m in 1..=n {
                let c = ctx(n, m);
                let two_n = 2 * n as i64;
                assert!(expected_dim_check(&c, two_n));
                assert!(!expected_dim_check(&c, two_n - 1));
                assert!(!expected_dim_check(&c, two_n + 1));
                assert_eq!(expected_dimension(&c, 0, &c.ones()), two_n);
            }
        }
    }

    #[test]
    fn reports() {
        let r = quantum_report(ctx(3, 1)).unwrap();
        assert_eq!(r.multiplicity(), 1);
        let r = quantum_report(ctx(5, 3)).unwrap();
        assert_eq!(r.multiplicity(), 3);
        assert!(r.terms.iter().all(|t| t.expected_dimension && t.dim == 10));
        assert_eq!(r.monomial(), "q1q2q3");
        let r = quantum_report(ctx(2, 2)).unwrap();
        assert_eq!(
            r.terms.iter().map(|t| t.dim).collect::<Vec<_>>(),
            vec![4, 4]
        );
        let text = r.render_text(Notation::Bar);
        assert!(text.contains("q1q2 appears 2 times"), "{text}");
        assert!(text.contains("a_1·τ_(b3|2) + a_2·τ_(b2|1)"), "{text}");
    }
}
