//! Signed permutations of `{1, …, 2n+2}` with `bar(v) = 2n + 3 - v`, the
//! hyperoctahedral Weyl group of `C_{n+1}`, and the quotient `W/W_P` indexed
//! by window heads.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::root_system::{roots_of_rank, FlagContext, Root};

/// How barred values are written in heads such as `b3|2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    /// Raw integers, `4|2`.
    Raw,
    /// Bar notation, `b3|2`.
    #[default]
    Bar,
}

impl FromStr for Notation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Notation::Raw),
            "bar" => Ok(Notation::Bar),
            _ => Err(Error::Parse(format!("unknown notation {s:?}"))),
        }
    }
}

fn coord(v: u8, n: usize) -> (usize, bool) {
    let v = v as usize;
    if v <= n + 1 {
        (v, true)
    } else {
        (2 * n + 3 - v, false)
    }
}

/// Checks distinctness and absence of bar-pairs for values in `1..=2n+2`.
fn check_values(values: &[u8], n: usize) -> std::result::Result<(), String> {
    let mut seen = vec![false; n + 2];
    for &v in values {
        if v == 0 || v as usize > 2 * n + 2 {
            return Err(format!("value {v} outside 1..={}", 2 * n + 2));
        }
        let (pair, _) = coord(v, n);
        if seen[pair] {
            return Err(format!(
                "value {v} repeats the pair {{{pair}, bar({pair})}}"
            ));
        }
        seen[pair] = true;
    }
    Ok(())
}

/// A full signed permutation, `entries[k-1] = w(k)` for `k = 1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Window(Vec<u8>);

impl Window {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidWindow(format!(
                "{entries:?} is shorter than 2"
            )));
        }
        check_values(&entries, entries.len() - 1)
            .map_err(|e| Error::InvalidWindow(format!("{entries:?}: {e}")))?;
        Ok(Window(entries))
    }

    pub fn identity(rank: usize) -> Self {
        Window((1..=rank as u8).collect())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// The `n` with `len = n + 1`.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    fn bar(&self, v: u8) -> u8 {
        (2 * self.n() + 3) as u8 - v
    }

    /// The first `m` entries.
    pub fn head(&self, m: usize) -> CosetRep {
        CosetRep(self.0[..m].to_vec())
    }

    /// `w · r`, normalised to a positive root together with its sign.
    pub fn apply_to_root(&self, root: Root) -> SignedRoot {
        let n = self.n();
        let image = |i: usize| coord(self.0[i - 1], n);
        match root {
            Root::Long(i) => {
                let (a, positive) = image(i);
                SignedRoot {
                    root: Root::Long(a),
                    positive,
                }
            }
            Root::Diff(i, j) => {
                let (a, sa) = image(i);
                let (b, sb) = image(j);
                combine(a, sa, b, !sb)
            }
            Root::Sum(i, j) => {
                let (a, sa) = image(i);
                let (b, sb) = image(j);
                combine(a, sa, b, sb)
            }
        }
    }

    /// Coxeter length, counted as the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        roots_of_rank(self.0.len())
            .into_iter()
            .filter(|&r| !self.apply_to_root(r).positive)
            .count()
    }

    /// Right multiplication `w · s_r`.
    pub fn reflect(&self, root: Root) -> Window {
        let mut w = self.0.clone();
        match root {
            Root::Diff(i, j) => w.swap(i - 1, j - 1),
            Root::Sum(i, j) => {
                let (wi, wj) = (self.0[i - 1], self.0[j - 1]);
                w[i - 1] = self.bar(wj);
                w[j - 1] = self.bar(wi);
            }
            Root::Long(i) => w[i - 1] = self.bar(self.0[i - 1]),
        }
        Window(w)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ε_a t_a + ε_b t_b` as a signed positive root.
fn combine(a: usize, ea: bool, b: usize, eb: bool) -> SignedRoot {
    let (a, ea, b, eb) = if a < b {
        (a, ea, b, eb)
    } else {
        (b, eb, a, ea)
    };
    let (root, positive) = match (ea, eb) {
        (true, false) => (Root::Diff(a, b), true),
        (true, true) => (Root::Sum(a, b), true),
        (false, true) => (Root::Diff(a, b), false),
        (false, false) => (Root::Sum(a, b), false),
    };
    SignedRoot { root, positive }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedRoot {
    pub root: Root,
    pub positive: bool,
}

/// An element of `W^P` given by its head `(w(1)|…|w(m))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetRep(Vec<u8>);

impl CosetRep {
    pub fn new(head: Vec<u8>, ctx: &FlagContext) -> Result<Self> {
        if head.len() != ctx.m {
            return Err(Error::InvalidCosetRep(format!(
                "{head:?} has length {}, expected {}",
                head.len(),
                ctx.m
            )));
        }
        check_values(&head, ctx.n).map_err(|e| Error::InvalidCosetRep(format!("{head:?}: {e}")))?;
        Ok(CosetRep(head))
    }

    /// The coset of the identity, `(1|2|…|m)`.
    pub fn identity(ctx: &FlagContext) -> Self {
        CosetRep((1..=ctx.m as u8).collect())
    }

    /// `(bar(2)|bar(3)|…|bar(m+1))`, the top class of `W^odd`.
    pub fn odd_top(ctx: &FlagContext) -> Self {
        CosetRep((2..=ctx.m as u8 + 1).map(|v| ctx.bar(v)).collect())
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u8) -> bool {
        self.0.contains(&v)
    }

    pub fn is_odd(&self, ctx: &FlagContext) -> bool {
        !self.contains(ctx.max_value())
    }

    pub fn render(&self, ctx: &FlagContext, notation: Notation) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&v| match notation {
                Notation::Bar if ctx.is_barred(v) => format!("b{}", ctx.bar(v)),
                _ => v.to_string(),
            })
            .collect();
        parts.join("|")
    }

    /// Parses `a|b|c`; each entry is a raw integer or `b<k>` for `bar(k)`.
    pub fn parse(s: &str, ctx: &FlagContext) -> Result<Self> {
        let head = s
            .split('|')
            .map(|tok| parse_value(tok.trim(), ctx))
            .collect::<Result<Vec<u8>>>()?;
        CosetRep::new(head, ctx)
    }
}

fn parse_value(tok: &str, ctx: &FlagContext) -> Result<u8> {
    let bad = || Error::Parse(format!("bad signed value {tok:?}"));
    if let Some(rest) = tok.strip_prefix('b') {
        let k: usize = rest.parse().map_err(|_| bad())?;
        if k == 0 || k > ctx.rank() {
            return Err(bad());
        }
        Ok(ctx.bar(k as u8))
    } else {
        let v: usize = tok.parse().map_err(|_| bad())?;
        if v == 0 || v > ctx.max_value() as usize {
            return Err(bad());
        }
        Ok(v as u8)
    }
}

/// The minimal-length window of the coset: head followed by the unused pairs'
/// unbarred values in increasing order.
pub fn min_rep(rep: &CosetRep, ctx: &FlagContext) -> Result<Window> {
    let rep = CosetRep::new(rep.0.clone(), ctx)?;
    Ok(min_rep_unchecked(&rep, ctx))
}

pub(crate) fn min_rep_unchecked(rep: &CosetRep, ctx: &FlagContext) -> Window {
    let n = ctx.n;
    let mut used = vec![false; n + 2];
    for &v in &rep.0 {
        used[coord(v, n).0] = true;
    }
    let mut w = rep.0.clone();
    w.extend((1..=n + 1).filter(|&k| !used[k]).map(|k| k as u8));
    Window(w)
}

/// Every head of `W^P`, in lexicographic order.
pub fn enumerate_wp(ctx: &FlagContext) -> Vec<CosetRep> {
    enumerate_heads(ctx, ctx.max_value())
}

/// Heads of `W^P` avoiding the value `bar(1) = 2n+2`, in lexicographic order.
pub fn enumerate_wodd(ctx: &FlagContext) -> Vec<CosetRep> {
    enumerate_heads(ctx, ctx.max_value() - 1)
}

fn enumerate_heads(ctx: &FlagContext, max_value: u8) -> Vec<CosetRep> {
    fn go(
        ctx: &FlagContext,
        max_value: u8,
        used: &mut [bool],
        head: &mut Vec<u8>,
        out: &mut Vec<CosetRep>,
    ) {
        if head.len() == ctx.m {
            out.push(CosetRep(head.clone()));
            return;
        }
        for v in 1..=max_value {
            let pair = coord(v, ctx.n).0;
            if used[pair] {
                continue;
            }
            used[pair] = true;
            head.push(v);
            go(ctx, max_value, used, head, out);
            head.pop();
            used[pair] = false;
        }
    }
    let mut out = Vec::new();
    go(
        ctx,
        max_value,
        &mut vec![false; ctx.n + 2],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// All `2^r r!` signed permutations of rank `r`.
pub fn signed_permutations(rank: usize) -> Vec<Window> {
    let n = rank - 1;
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<u8>::new(), vec![false; n + 2])];
    while let Some((w, used)) = stack.pop() {
        if w.len() == rank {
            out.push(Window(w));
            continue;
        }
        for v in 1..=(2 * n + 2) as u8 {
            let pair = coord(v, n).0;
            if !used[pair] {
                let mut w2 = w.clone();
                w2.push(v);
                let mut u2 = used.clone();
                u2[pair] = true;
                stack.push((w2, u2));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn ctx(n: usize, m: usize) -> FlagContext {
        FlagContext::new(n, m).unwrap()
    }

    fn rep(head: &[u8], c: &FlagContext) -> CosetRep {
        CosetRep::new(head.to_vec(), c).unwrap()
    }

    /// Word length over simple reflections, by breadth-first search.
    fn cayley_lengths(rank: usize) -> HashMap<Window, usize> {
        let simple: Vec<Root> = (1..rank)
            .map(|i| Root::Diff(i, i + 1))
            .chain(std::iter::once(Root::Long(rank)))
            .collect();
        let mut dist = HashMap::new();
        let id = Window::identity(rank);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for &s in &simple {
                let next = w.reflect(s);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn apply_examples() {
        let id = Window::identity(4);
        for r in roots_of_rank(4) {
            assert_eq!(
                id.apply_to_root(r),
                SignedRoot {
                    root: r,
                    positive: true
                }
            );
        }
        let w = Window::new(vec![4, 2]).unwrap();
        assert_eq!(
            w.apply_to_root(Root::Long(1)),
            SignedRoot {
                root: Root::Long(1),
                positive: false
            }
        );
        let w = Window::new(vec![2, 1]).unwrap();
        assert_eq!(
            w.apply_to_root(Root::Diff(1, 2)),
            SignedRoot {
                root: Root::Diff(1, 2),
                positive: false
            }
        );
    }

    #[test]
    fn reflect_examples() {
        let id = Window::identity(4);
        assert_eq!(id.reflect(Root::Diff(1, 2)).entries(), &[2, 1, 3, 4]);
        assert_eq!(id.reflect(Root::Long(1)).entries(), &[8, 2, 3, 4]);
        assert_eq!(id.reflect(Root::Sum(1, 2)).entries(), &[7, 8, 3, 4]);
    }

    #[test]
    fn length_matches_cayley_distance() {
        for rank in 2..=3 {
            let dist = cayley_lengths(rank);
            assert_eq!(dist.len(), (1 << rank) * (1..=rank).product::<usize>());
            for (w, d) in &dist {
                assert_eq!(w.length(), *d, "{w}");
            }
        }
        let dist = cayley_lengths(4);
        for (k, (w, d)) in dist.iter().enumerate() {
            if k % 7 == 0 {
                assert_eq!(w.length(), *d, "{w}");
            }
        }
    }

    #[test]
    fn reflections_change_length() {
        for w in signed_permutations(3) {
            for r in roots_of_rank(3) {
                let v = w.reflect(r);
                assert_ne!(v.length(), w.length());
                assert_eq!(v.reflect(r), w);
            }
        }
    }

    #[test]
    fn min_rep_examples() {
        let c = ctx(5, 3);
        assert_eq!(
            min_rep(&rep(&[1, 11, 3], &c), &c).unwrap().entries(),
            &[1, 11, 3, 4, 5, 6]
        );
        let c = ctx(2, 2);
        assert_eq!(
            min_rep(&rep(&[1, 2], &c), &c).unwrap().entries(),
            &[1, 2, 3]
        );
        assert_eq!(
            min_rep(&rep(&[4, 2], &c), &c).unwrap().entries(),
            &[4, 2, 1]
        );
        assert!(CosetRep::new(vec![2, 5], &c).is_err());
        assert!(CosetRep::new(vec![2, 2], &c).is_err());
    }

    #[test]
    fn min_rep_is_unique_minimum_in_coset() {
        for n in 1..=3 {
            let all = signed_permutations(n + 1);
            for m in 1..=n {
                let c = ctx(n, m);
                let mut best: HashMap<CosetRep, Vec<(usize, Window)>> = HashMap::new();
                for w in &all {
                    best.entry(w.head(m))
                        .or_default()
                        .push((w.length(), w.clone()));
                }
                assert_eq!(best.len() as u128, c.wp_size());
                for (head, mut members) in best {
                    members.sort();
                    assert!(
                        members[0].0 < members[1].0,
                        "minimum not unique for {head:?}"
                    );
                    assert_eq!(min_rep(&head, &c).unwrap(), members[0].1);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let c = ctx(2, 2);
        let wp = enumerate_wp(&c);
        assert_eq!(wp.len(), 24);
        let wodd = enumerate_wodd(&c);
        assert_eq!(wodd.len(), 16);
        let filtered: Vec<_> = wp.iter().filter(|r| !r.contains(6)).cloned().collect();
        assert_eq!(filtered, wodd);
        assert!(wp.windows(2).all(|p| p[0] < p[1]));

        for n in 1..=5 {
            for m in 1..=n {
                assert_eq!(enumerate_wp(&ctx(n, m)).len() as u128, ctx(n, m).wp_size());
            }
        }
    }

    #[test]
    fn odd_membership_example() {
        let c = ctx(5, 3);
        let wodd = enumerate_wodd(&c);
        assert!(wodd.contains(&rep(&[1, 11, 3], &c)));
        assert!(wodd.contains(&rep(&[5, 9, 2], &c)));
        let outside = rep(&[3, 12, 2], &c);
        assert!(!wodd.contains(&outside));
        assert!(!outside.is_odd(&c));
    }

    #[test]
    fn notation_round_trip() {
        let c = ctx(5, 3);
        let r = rep(&[1, 11, 3], &c);
        assert_eq!(r.render(&c, Notation::Bar), "1|b2|3");
        assert_eq!(r.render(&c, Notation::Raw), "1|11|3");
        assert_eq!(CosetRep::parse("1|b2|3", &c).unwrap(), r);
        assert_eq!(CosetRep::parse("1|11|3", &c).unwrap(), r);
        assert!(CosetRep::parse("1|b7|3", &c).is_err());
        assert!(CosetRep::parse("1|x|3", &c).is_err());
        assert!(CosetRep::parse("1|2", &c).is_err());
    }
}
