//! Brute-force oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use oddflag::bruhat::schubert_dim;
use oddflag::moment_graph::{Edge, MomentGraph};
use oddflag::root_system::{parabolic_complement, DegreeVector, FlagContext};
use oddflag::weyl::{enumerate_wp, min_rep, CosetRep};
use rand::Rng;

/// Bruhat order on `W^P` as the reflexive-transitive closure of the covers
/// `μ ⋖ ν`: `ν` is the coset of `μ·s_α` and `dim ν = dim μ + 1`.
/// Returns the heads and `above[i]` = indices `j` with `heads[i] <= heads[j]`.
pub fn cover_closure(ctx: &FlagContext) -> (Vec<CosetRep>, Vec<BTreeSet<usize>>) {
    let heads = enumerate_wp(ctx);
    let index: HashMap<&CosetRep, usize> = heads.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let dims: Vec<usize> = heads
        .iter()
        .map(|h| schubert_dim(h, ctx).unwrap())
        .collect();
    let roots = parabolic_complement(ctx);
    let covers: Vec<Vec<usize>> = heads
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let w = min_rep(h, ctx).unwrap();
            roots
                .iter()
                .map(|&r| index[&w.reflect(r).head(ctx.m)])
                .filter(|&j| dims[j] == dims[i] + 1)
                .collect()
        })
        .collect();
    let above = (0..heads.len())
        .map(|start| {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &covers[v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            seen
        })
        .collect();
    (heads, above)
}

fn add(a: &DegreeVector, b: &DegreeVector) -> DegreeVector {
    DegreeVector(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

fn fits(a: &DegreeVector, bound: &DegreeVector) -> bool {
    a.0.iter().zip(&bound.0).all(|(x, y)| x <= y)
}

/// Calls `visit` on every walk (as its edge list) from `start` whose total degree
/// fits in `budget`, including the empty walk. Terminates because every edge
/// degree is nonzero.
pub fn for_each_walk<'g>(
    g: &'g MomentGraph,
    start: usize,
    budget: &DegreeVector,
    visit: &mut dyn FnMut(usize, &[&'g Edge]),
) {
    fn go<'g>(
        g: &'g MomentGraph,
        at: usize,
        used: DegreeVector,
        budget: &DegreeVector,
        path: &mut Vec<&'g Edge>,
        visit: &mut dyn FnMut(usize, &[&'g Edge]),
    ) {
        visit(at, path);
        for e in g.out_edges(at) {
            assert!(e.degree.0.iter().any(|&x| x > 0), "zero-degree edge");
            let next = add(&used, &e.degree);
            if fits(&next, budget) {
                path.push(e);
                go(g, e.dst, next, budget, path, visit);
                path.pop();
            }
        }
    }
    let zero = DegreeVector(vec![0; budget.len()]);
    go(g, start, zero, budget, &mut Vec::new(), visit);
}

/// Endpoints of all walks of degree `<= budget` from `sources`.
pub fn brute_force_reachable(
    g: &MomentGraph,
    sources: &[CosetRep],
    budget: &DegreeVector,
) -> Vec<CosetRep> {
    let mut ends = BTreeSet::new();
    for s in sources {
        let start = g.index_of(s).unwrap();
        for_each_walk(g, start, budget, &mut |v, _| {
            ends.insert(g.vertex(v).clone());
        });
    }
    ends.into_iter().collect()
}

/// Every degree vector `d` with `0 <= d <= top`.
pub fn degrees_below(top: &DegreeVector) -> Vec<DegreeVector> {
    let mut out = vec![vec![]];
    for &t in &top.0 {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=t).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(DegreeVector).collect()
}

/// A uniformly random walk of `len` steps from a random vertex.
pub fn random_walk<'g>(
    g: &'g MomentGraph,
    rng: &mut impl Rng,
    len: usize,
) -> (usize, Vec<&'g Edge>) {
    let start = rng.gen_range(0..g.vertices().len());
    let mut at = start;
    let mut steps = Vec::with_capacity(len);
    for _ in 0..len {
        let out = g.out_edges(at);
        if out.is_empty() {
            break;
        }
        let e = &out[rng.gen_range(0..out.len())];
        steps.push(e);
        at = e.dst;
    }
    (start, steps)
}
