//! Degree-labelled moment graphs of `X^ev = IF(1..m; 2n+2)` and of the odd
//! variety `IF(1..m; 2n+1)`, the latter being the subgraph induced on `W^odd`.
//!
//! Every vertex `u` gets one outgoing edge per root `α ∈ R^+ \ R_P^+`, landing
//! at the coset of `u · s_α`. Edges are stored directed; the reverse edge is
//! always present with the same degree, so walks never need to track orientation.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{
    edge_degree, parabolic_complement, root_class, DegreeVector, FlagContext, Root,
};
use crate::weyl::{enumerate_wodd, enumerate_wp, min_rep_unchecked, CosetRep, Notation};

/// Default limit on `|W^P|` before a graph build is refused.
pub const DEFAULT_SIZE_CAP: u128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Even,
    Odd,
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Even => "even",
            GraphKind::Odd => "odd",
        }
    }
}

impl std::str::FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(GraphKind::Even),
            "odd" => Ok(GraphKind::Odd),
            _ => Err(Error::Parse(format!("unknown graph kind {s:?}"))),
        }
    }
}

/// A directed edge between vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub root: Root,
    pub degree: DegreeVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentGraph {
    ctx: FlagContext,
    kind: GraphKind,
    vertices: Vec<CosetRep>,
    index: HashMap<CosetRep, usize>,
    edges: Vec<Edge>,
    /// `edges[offsets[v]..offsets[v+1]]` leave vertex `v`.
    offsets: Vec<usize>,
}

/// Fails when `|W^P|` exceeds `cap`.
pub fn check_size(ctx: &FlagContext, cap: u128) -> Result<()> {
    let size = ctx.wp_size();
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    Ok(())
}

impl MomentGraph {
    pub fn build(ctx: FlagContext, kind: GraphKind) -> Result<Self> {
        Self::build_with_cap(ctx, kind, DEFAULT_SIZE_CAP)
    }

    pub fn build_with_cap(ctx: FlagContext, kind: GraphKind, cap: u128) -> Result<Self> {
        check_size(&ctx, cap)?;
        let vertices = match kind {
            GraphKind::Even => enumerate_wp(&ctx),
            GraphKind::Odd => enumerate_wodd(&ctx),
        };
        let index: HashMap<CosetRep, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let roots: Vec<(Root, DegreeVector)> = parabolic_complement(&ctx)
            .into_iter()
            .map(|r| edge_degree(r, &ctx).map(|d| (r, d)))
            .collect::<Result<_>>()?;

        let per_vertex: Vec<Vec<Edge>> = vertices
            .par_iter()
            .enumerate()
            .map(|(src, u)| {
                let window = min_rep_unchecked(u, &ctx);
                let mut out: Vec<Edge> = roots
                    .iter()
                    .filter_map(|(root, degree)| {
                        let head = window.reflect(*root).head(ctx.m);
                        index.get(&head).map(|&dst| Edge {
                            src,
                            dst,
                            root: *root,
                            degree: degree.clone(),
                        })
                    })
                    .collect();
                out.sort_by_key(|e| (e.dst, e.root));
                out
            })
            .collect();
        Ok(Self::assemble(
            ctx,
            kind,
            vertices,
            index,
            per_vertex.into_iter().flatten().collect(),
        ))
    }

    fn assemble(
        ctx: FlagContext,
        kind: GraphKind,
        vertices: Vec<CosetRep>,
        index: HashMap<CosetRep, usize>,
        edges: Vec<Edge>,
    ) -> Self {
        let mut offsets = vec![0; vertices.len() + 1];
        for e in &edges {
            offsets[e.src + 1] += 1;
        }
        for v in 0..vertices.len() {
            offsets[v + 1] += offsets[v];
        }
        MomentGraph {
            ctx,
            kind,
            vertices,
            index,
            edges,
            offsets,
        }
    }

    pub fn ctx(&self) -> &FlagContext {
        &self.ctx
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertices(&self) -> &[CosetRep] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, i: usize) -> &CosetRep {
        &self.vertices[i]
    }

    pub fn index_of(&self, rep: &CosetRep) -> Option<usize> {
        self.index.get(rep).copied()
    }

    pub fn require(&self, rep: &CosetRep) -> Result<usize> {
        self.index_of(rep)
            .ok_or_else(|| Error::UnknownVertex(rep.render(&self.ctx, Notation::Bar)))
    }

    pub fn out_edges(&self, v: usize) -> &[Edge] {
        &self.edges[self.offsets[v]..self.offsets[v + 1]]
    }

    /// The edge as a free-standing chain step.
    pub fn step(&self, edge: &Edge) -> Step {
        Step {
            src: self.vertices[edge.src].clone(),
            dst: self.vertices[edge.dst].clone(),
            root: edge.root,
            degree: edge.degree.clone(),
        }
    }

    pub fn render(&self, rep: &CosetRep, notation: Notation) -> String {
        rep.render(&self.ctx, notation)
    }

    pub fn to_json(&self, notation: Notation) -> Result<String> {
        let doc = GraphJson {
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    degree: e.degree.0.clone(),
                    dst: self.render(&self.vertices[e.dst], notation),
                    root: RootJson {
                        i: e.root.first(),
                        j: e.root.second(),
                        kind: e.root.kind_name().to_string(),
                    },
                    src: self.render(&self.vertices[e.src], notation),
                })
                .collect(),
            kind: self.kind.name().to_string(),
            m: self.ctx.m,
            n: self.ctx.n,
            vertices: self
                .vertices
                .iter()
                .map(|v| self.render(v, notation))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        Ok(s)
    }

    /// Parses the JSON export. Vertices and edges are taken as given, after validation.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text)?;
        let ctx = FlagContext::new(doc.n, doc.m)?;
        let kind: GraphKind = doc.kind.parse()?;
        let vertices = doc
            .vertices
            .iter()
            .map(|s| CosetRep::parse(s, &ctx))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<CosetRep, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        if index.len() != vertices.len() {
            return Err(Error::Parse("duplicate vertex".into()));
        }
        let lookup = |s: &str| -> Result<usize> {
            let rep = CosetRep::parse(s, &ctx)?;
            index
                .get(&rep)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            let root = Root::from_parts(&e.root.kind, e.root.i, e.root.j)?;
            let degree = edge_degree(root, &ctx)?;
            if degree.0 != e.degree {
                return Err(Error::Parse(format!(
                    "edge {root} carries degree {:?}",
                    e.degree
                )));
            }
            edges.push(Edge {
                src: lookup(&e.src)?,
                dst: lookup(&e.dst)?,
                root,
                degree,
            });
        }
        if edges.windows(2).any(|p| p[0].src > p[1].src) {
            return Err(Error::Parse("edges are not grouped by source".into()));
        }
        Ok(Self::assemble(ctx, kind, vertices, index, edges))
    }

    /// Graphviz rendering: one node per vertex, one undirected edge per
    /// directed edge with `src < dst`.
    pub fn to_dot(&self, notation: Notation) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", self.kind.name());
        let _ = writeln!(s, "  label=\"{}\";", self.ctx);
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", self.render(v, notation));
        }
        for e in self.edges.iter().filter(|e| e.src < e.dst) {
            let _ = writeln!(
                s,
                "  \"{}\" -- \"{}\" [root=\"{}\", degree=\"{}\"];",
                self.render(&self.vertices[e.src], notation),
                self.render(&self.vertices[e.dst], notation),
                e.root,
                e.degree
            );
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    edges: Vec<EdgeJson>,
    kind: String,
    m: usize,
    n: usize,
    vertices: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    degree: Vec<u32>,
    dst: String,
    root: RootJson,
    src: String,
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    i: usize,
    j: Option<usize>,
    kind: String,
}

/// One traversed edge of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub src: CosetRep,
    pub dst: CosetRep,
    pub root: Root,
    pub degree: DegreeVector,
}

/// A walk in the moment graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub start: CosetRep,
    pub steps: Vec<Step>,
}

impl Chain {
    pub fn end(&self) -> &CosetRep {
        self.steps.last().map_or(&self.start, |s| &s.dst)
    }

    pub fn roots(&self) -> Vec<Root> {
        self.steps.iter().map(|s| s.root).collect()
    }
}

/// Sum of the degree labels along the chain.
pub fn chain_degree_direct(chain: &Chain, ctx: &FlagContext) -> Result<DegreeVector> {
    let mut at = &chain.start;
    let mut total = ctx.zero_degree();
    for (k, step) in chain.steps.iter().enumerate() {
        if &step.src != at {
            return Err(Error::NonConsecutiveChain(k));
        }
        if step.degree.len() != ctx.m {
            return Err(Error::DegreeLength {
                got: step.degree.len(),
                expected: ctx.m,
            });
        }
        total = &total + &step.degree;
        at = &step.dst;
    }
    Ok(total)
}

/// Chain degree from the multiset of roots used, via the class counts:
/// `d_i = O_i + D_i` where `O_i` counts roots whose class has a 1 in position
/// `i` and `D_i` is twice the count of roots whose class has a 2 there.
pub fn chain_degree_od(roots: &[Root], ctx: &FlagContext) -> Result<DegreeVector> {
    let classes = roots
        .iter()
        .map(|&r| root_class(r, ctx))
        .collect::<Result<Vec<_>>>()?;
    let m = ctx.m;
    Ok(DegreeVector(
        (1..=m)
            .map(|i| {
                let ones = classes.iter().filter(|c| c.entry(i, m) == 1).count() as u32;
                let twos = classes.iter().filter(|c| c.entry(i, m) == 2).count() as u32;
                ones + 2 * twos
            })
            .collect(),
    ))
}
