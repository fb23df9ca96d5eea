//! Batch checks of the curve-neighborhood structure over a grid of `(n, m)`.
//!
//! Every check is pure; a failing check lists its counterexamples in
//! lexicographic order, smallest first.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::{down_set, precedes, schubert_dim, sorted_prefix};
use crate::curve_nbhd::{expected_components, expected_dim_check, gamma, reachable};
use crate::error::Result;
use crate::moment_graph::{check_size, GraphKind, MomentGraph, DEFAULT_SIZE_CAP};
use crate::root_system::FlagContext;
use crate::weyl::{enumerate_wodd, CosetRep, Notation};

pub const CHECK_NAMES: [&str; 7] = [
    "prefix_intersection",
    "bar_implies_one",
    "containment",
    "component_length",
    "neighborhood",
    "odd_downset",
    "top_dimension",
];

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check_name: &'static str,
    pub ctx: FlagContext,
    pub passed: bool,
    pub witnesses: Vec<CosetRep>,
    pub summary: String,
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(
        name: &'static str,
        ctx: FlagContext,
        mut witnesses: Vec<CosetRep>,
        summary: String,
    ) -> Self {
        witnesses.sort();
        witnesses.dedup();
        CheckReport {
            check_name: name,
            ctx,
            passed: witnesses.is_empty(),
            witnesses,
            summary,
            elapsed: Duration::ZERO,
        }
    }

    /// Equality ignoring the elapsed time.
    pub fn same_outcome(&self, other: &CheckReport) -> bool {
        self.check_name == other.check_name
            && self.ctx == other.ctx
            && self.passed == other.passed
            && self.witnesses == other.witnesses
            && self.summary == other.summary
    }
}

fn timed(f: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// `reachable(odd graph, {id}, (1^m))`, shared by the checks that scan it.
pub struct PointData {
    pub ctx: FlagContext,
    pub graph: MomentGraph,
    pub reached: Vec<CosetRep>,
}

impl PointData {
    pub fn new(ctx: FlagContext, cap: u128) -> Result<Self> {
        let graph = MomentGraph::build_with_cap(ctx, GraphKind::Odd, cap)?;
        let reached = reachable(&graph, &[CosetRep::identity(&ctx)], &ctx.ones())?;
        Ok(PointData {
            ctx,
            graph,
            reached,
        })
    }

    /// Every reachable `v` has `|Λ^k ∩ {1..k}| >= k - 1` for all `k`.
    pub fn prefix_intersection(&self) -> Result<CheckReport> {
        timed(|| {
            let mut bad = Vec::new();
            for v in &self.reached {
                for k in 1..=self.ctx.m {
                    if sorted_prefix(v, k)?.count_at_most(k as u8) + 1 < k {
                        bad.push(v.clone());
                        break;
                    }
                }
            }
            let summary = format!("{} reachable vertices scanned", self.reached.len());
            Ok(CheckReport::new(CHECK_NAMES[0], self.ctx, bad, summary))
        })
    }

    /// Every reachable `v` containing `bar(j)`, `2 <= j <= m`, has `1 ∈ Λ^j`.
    pub fn bar_implies_one(&self) -> Result<CheckReport> {
        timed(|| {
            let c = &self.ctx;
            let mut bad = Vec::new();
            let mut hits = 0;
            for v in &self.reached {
                for j in 2..=c.m {
                    if v.contains(c.bar(j as u8)) {
                        hits += 1;
                        if !sorted_prefix(v, j)?.0.contains(&1) {
                            bad.push(v.clone());
                        }
                    }
                }
            }
            let summary = format!("{hits} barred occurrences checked");
            Ok(CheckReport::new(CHECK_NAMES[1], *c, bad, summary))
        })
    }

    /// Reachable vertices sit below the predicted components.
    pub fn containment(&self) -> Result<CheckReport> {
        timed(|| {
            let c = &self.ctx;
            let expected = expected_components(c);
            let top_bound = c.bar(c.m as u8 + 1);
            let mut bad = Vec::new();
            for v in &self.reached {
                if sorted_prefix(v, c.m)?
                    .last()
                    .is_some_and(|x| x <= top_bound)
                    && !precedes(v, &expected[0])
                {
                    bad.push(v.clone());
                }
                for j in 2..=c.m {
                    if v.contains(c.bar(j as u8)) && !precedes(v, &expected[j - 1]) {
                        bad.push(v.clone());
                    }
                }
            }
            let summary = format!("{} reachable vertices scanned", self.reached.len());
            Ok(CheckReport::new(CHECK_NAMES[2], *c, bad, summary))
        })
    }

    /// `Γ_{(1^m)}(pt)` has exactly the predicted `m` components, each of dimension `2n`.
    pub fn neighborhood(&self) -> Result<CheckReport> {
        timed(|| {
            let c = &self.ctx;
            let result = gamma(&self.graph, &CosetRep::identity(c), &c.ones())?;
            let mut expected = expected_components(c);
            expected.sort();
            let got = result.reps();
            let mut bad: Vec<CosetRep> = got
                .iter()
                .filter(|r| !expected.contains(r))
                .chain(expected.iter().filter(|r| !got.contains(r)))
                .cloned()
                .collect();
            for comp in &result.components {
                if comp.dim != 2 * c.n || !expected_dim_check(c, comp.dim as i64) {
                    bad.push(comp.rep.clone());
                }
            }
            let names: Vec<String> = got.iter().map(|r| r.render(c, Notation::Bar)).collect();
            let summary = format!("{} components: {}", got.len(), names.join(", "));
            Ok(CheckReport::new(CHECK_NAMES[4], *c, bad, summary))
        })
    }
}

pub fn check_prefix_intersection(ctx: FlagContext) -> Result<CheckReport> {
    PointData::new(ctx, DEFAULT_SIZE_CAP)?.prefix_intersection()
}

pub fn check_bar_implies_one(ctx: FlagContext) -> Result<CheckReport> {
    PointData::new(ctx, DEFAULT_SIZE_CAP)?.bar_implies_one()
}

pub fn check_containment(ctx: FlagContext) -> Result<CheckReport> {
    PointData::new(ctx, DEFAULT_SIZE_CAP)?.containment()
}

pub fn check_neighborhood(ctx: FlagContext) -> Result<CheckReport> {
    PointData::new(ctx, DEFAULT_SIZE_CAP)?.neighborhood()
}

/// Each predicted component has length `2n`.
pub fn check_component_length(ctx: FlagContext) -> Result<CheckReport> {
    timed(|| {
        let mut bad = Vec::new();
        for r in expected_components(&ctx) {
            if schubert_dim(&r, &ctx)? != 2 * ctx.n {
                bad.push(r);
            }
        }
        Ok(CheckReport::new(
            CHECK_NAMES[3],
            ctx,
            bad,
            format!("target length {}", 2 * ctx.n),
        ))
    })
}

/// `W^odd` is the Bruhat down-set of `(bar(2)|…|bar(m+1))` in `W^P`.
pub fn check_odd_downset(ctx: FlagContext, cap: u128) -> Result<CheckReport> {
    timed(|| {
        check_size(&ctx, cap)?;
        let below = down_set(&CosetRep::odd_top(&ctx), &ctx, false);
        let odd = enumerate_wodd(&ctx);
        let bad: Vec<CosetRep> = below
            .iter()
            .filter(|r| odd.binary_search(r).is_err())
            .chain(odd.iter().filter(|r| below.binary_search(r).is_err()))
            .cloned()
            .collect();
        Ok(CheckReport::new(
            CHECK_NAMES[5],
            ctx,
            bad,
            format!("|W^odd| = {}", odd.len()),
        ))
    })
}

/// The top class of `W^odd` has length `m(2n - m + 1)`.
pub fn check_top_dimension(ctx: FlagContext) -> Result<CheckReport> {
    timed(|| {
        let top = CosetRep::odd_top(&ctx);
        let len = schubert_dim(&top, &ctx)?;
        let bad = if len == ctx.dim_if() {
            vec![]
        } else {
            vec![top]
        };
        Ok(CheckReport::new(
            CHECK_NAMES[6],
            ctx,
            bad,
            format!("length {len}, formula {}", ctx.dim_if()),
        ))
    })
}

/// All seven checks at one point, in [`CHECK_NAMES`] order.
pub fn run_point(ctx: FlagContext, cap: u128) -> Result<Vec<CheckReport>> {
    let data = PointData::new(ctx, cap)?;
    Ok(vec![
        data.prefix_intersection()?,
        data.bar_implies_one()?,
        data.containment()?,
        check_component_length(ctx)?,
        data.neighborhood()?,
        check_odd_downset(ctx, cap)?,
        check_top_dimension(ctx)?,
    ])
}

/// Every `(n, m)` with `n_min <= n <= n_max` and `1 <= m <= n`.
pub fn grid(n_min: usize, n_max: usize) -> Result<Vec<FlagContext>> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        for m in 1..=n {
            out.push(FlagContext::new(n, m)?);
        }
    }
    Ok(out)
}

/// Runs [`run_point`] over all points concurrently; output order follows `points`.
pub fn run_grid(points: &[FlagContext], cap: u128) -> Result<Vec<CheckReport>> {
    let per_point = points
        .par_iter()
        .map(|&ctx| run_point(ctx, cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

#[derive(Serialize)]
struct ReportJson {
    check_name: &'static str,
    elapsed_ms: f64,
    m: usize,
    n: usize,
    passed: bool,
    summary: String,
    witnesses: Vec<String>,
}

pub fn reports_to_json(reports: &[CheckReport], notation: Notation) -> Result<String> {
    let docs: Vec<ReportJson> = reports
        .iter()
        .map(|r| ReportJson {
            check_name: r.check_name,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            m: r.ctx.m,
            n: r.ctx.n,
            passed: r.passed,
            summary: r.summary.clone(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| w.render(&r.ctx, notation))
                .collect(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&docs)?;
    s.push('\n');
    Ok(s)
}

pub fn reports_to_table(reports: &[CheckReport], notation: Notation) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3} {:>3}  {:<22}{:<6}{:>10}  details",
        "n", "m", "check", "result", "ms"
    );
    for r in reports {
        let mut details = r.summary.clone();
        if let Some(w) = r.witnesses.first() {
            let _ = write!(
                details,
                "; {} witnesses, first {}",
                r.witnesses.len(),
                w.render(&r.ctx, notation)
            );
        }
        let _ = writeln!(
            s,
            "{:>3} {:>3}  {:<22}{:<6}{:>10.2}  {}",
            r.ctx.n,
            r.ctx.m,
            r.check_name,
            if r.passed { "pass" } else { "FAIL" },
            r.elapsed.as_secs_f64() * 1e3,
            details
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(s, "{} checks, {} failed", reports.len(), failed);
    s
}
