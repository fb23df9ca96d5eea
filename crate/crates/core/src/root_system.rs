//! Positive roots of type `C_{n+1}`, their coroots in the simple coroot basis,
//! and the degree labels they carry in the moment graph.
//!
//! Simple roots are `α_i = t_i - t_{i+1}` for `i <= n` and `α_{n+1} = 2t_{n+1}`.
//! The parabolic subsystem is spanned by `α_{m+1}, …, α_{n+1}`.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported `n`; keeps every signed value `1..=2n+2` inside a `u8`.
pub const MAX_N: usize = 63;

/// The pair `(n, m)` describing `IF(1, …, m; 2n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagContext {
    pub n: usize,
    pub m: usize,
}

impl FlagContext {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m > n || n > MAX_N {
            return Err(Error::InvalidContext { n, m, max: MAX_N });
        }
        Ok(FlagContext { n, m })
    }

    /// Rank of the ambient root system, `n + 1`.
    pub fn rank(&self) -> usize {
        self.n + 1
    }

    /// Largest signed value, `2n + 2` (which is `bar(1)`).
    pub fn max_value(&self) -> u8 {
        (2 * self.n + 2) as u8
    }

    /// The involution `v ↦ 2n + 3 - v`.
    pub fn bar(&self, v: u8) -> u8 {
        (2 * self.n + 3) as u8 - v
    }

    pub fn is_barred(&self, v: u8) -> bool {
        v as usize > self.n + 1
    }

    /// Complex dimension of `IF`, `m(2n - m + 1)`.
    pub fn dim_if(&self) -> usize {
        self.m * (2 * self.n - self.m + 1)
    }

    /// Degrees of the quantum parameters `q_1, …, q_m`.
    pub fn q_degrees(&self) -> Vec<u32> {
        (1..=self.m)
            .map(|i| {
                if i < self.m {
                    2
                } else {
                    (2 * (self.n - self.m) + 3) as u32
                }
            })
            .collect()
    }

    /// `|W^P| = Π_{k<m} (2n + 2 - 2k)`.
    pub fn wp_size(&self) -> u128 {
        (0..self.m)
            .map(|k| (2 * self.n + 2 - 2 * k) as u128)
            .product()
    }

    /// The degree `(1, …, 1)`.
    pub fn ones(&self) -> DegreeVector {
        DegreeVector(vec![1; self.m])
    }

    pub fn zero_degree(&self) -> DegreeVector {
        DegreeVector::zero(self.m)
    }
}

impl fmt::Display for FlagContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IF(1..{};{})", self.m, 2 * self.n + 1)
    }
}

/// A positive root of `C_{n+1}`, stored by shape and 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `t_i - t_j`, `i < j`
    Diff(usize, usize),
    /// `t_i + t_j`, `i < j`
    Sum(usize, usize),
    /// `2 t_i`
    Long(usize),
}

impl Root {
    /// Whether this is a positive root of the rank-`rank` system.
    pub fn is_valid(&self, rank: usize) -> bool {
        match *self {
            Root::Diff(i, j) | Root::Sum(i, j) => 1 <= i && i < j && j <= rank,
            Root::Long(i) => 1 <= i && i <= rank,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Root::Diff(..) => "diff",
            Root::Sum(..) => "sum",
            Root::Long(_) => "long",
        }
    }

    pub fn first(&self) -> usize {
        match *self {
            Root::Diff(i, _) | Root::Sum(i, _) | Root::Long(i) => i,
        }
    }

    pub fn second(&self) -> Option<usize> {
        match *self {
            Root::Diff(_, j) | Root::Sum(_, j) => Some(j),
            Root::Long(_) => None,
        }
    }

    pub fn from_parts(kind: &str, i: usize, j: Option<usize>) -> Result<Root> {
        let bad = || Error::Parse(format!("bad root {kind}({i},{j:?})"));
        match (kind, j) {
            ("diff", Some(j)) => Ok(Root::Diff(i, j)),
            ("sum", Some(j)) => Ok(Root::Sum(i, j)),
            ("long", None) => Ok(Root::Long(i)),
            _ => Err(bad()),
        }
    }

    /// Coordinates of the coroot in the `t`-basis.
    pub fn coroot_t_coords(&self, rank: usize) -> Vec<i64> {
        let mut t = vec![0; rank];
        match *self {
            Root::Diff(i, j) => {
                t[i - 1] = 1;
                t[j - 1] = -1;
            }
            Root::Sum(i, j) => {
                t[i - 1] = 1;
                t[j - 1] = 1;
            }
            Root::Long(i) => t[i - 1] = 1,
        }
        t
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Root::Diff(i, j) => format!("t{i}-t{j}"),
            Root::Sum(i, j) => format!("t{i}+t{j}"),
            Root::Long(i) => format!("2t{i}"),
        };
        f.pad(&s)
    }
}

/// Coefficients of a coroot on `α_1^∨, …, α_{n+1}^∨`, where
/// `α_k^∨ = t_k - t_{k+1}` for `k <= n` and `α_{n+1}^∨ = t_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorootCoeffs(pub Vec<u32>);

impl CorootCoeffs {
    /// Expands `Σ c_k α_k^∨` back into the `t`-basis.
    pub fn to_t_coords(&self) -> Vec<i64> {
        let rank = self.0.len();
        let mut t = vec![0i64; rank];
        for (k, &c) in self.0.iter().enumerate() {
            let c = c as i64;
            t[k] += c;
            if k + 1 < rank {
                t[k + 1] -= c;
            }
        }
        t
    }
}

/// A degree `d = (d_1, …, d_m)`, ordered componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zero(m: usize) -> Self {
        DegreeVector(vec![0; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`. Vectors of different length are incomparable.
    pub fn leq(&self, other: &DegreeVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Add for &DegreeVector {
    type Output = DegreeVector;

    fn add(self, rhs: &DegreeVector) -> DegreeVector {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        DegreeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// All `(n+1)^2` positive roots: differences, then sums, then long roots.
pub fn positive_roots(ctx: &FlagContext) -> Vec<Root> {
    roots_of_rank(ctx.rank())
}

/// Positive roots of `C_r` for an explicit rank `r`.
pub fn roots_of_rank(r: usize) -> Vec<Root> {
    let pairs = || (1..=r).flat_map(move |i| (i + 1..=r).map(move |j| (i, j)));
    pairs()
        .map(|(i, j)| Root::Diff(i, j))
        .chain(pairs().map(|(i, j)| Root::Sum(i, j)))
        .chain((1..=r).map(Root::Long))
        .collect()
}

pub fn coroot_coeffs(root: Root, ctx: &FlagContext) -> Result<CorootCoeffs> {
    let r = ctx.rank();
    if !root.is_valid(r) {
        return Err(Error::InvalidRoot(root.to_string(), r));
    }
    let mut c = vec![0u32; r];
    match root {
        Root::Diff(i, j) => c[i - 1..j - 1].iter_mut().for_each(|x| *x = 1),
        Root::Sum(i, j) => {
            c[i - 1..j - 1].iter_mut().for_each(|x| *x = 1);
            c[j - 1..].iter_mut().for_each(|x| *x = 2);
        }
        Root::Long(i) => c[i - 1..].iter_mut().for_each(|x| *x = 1),
    }
    Ok(CorootCoeffs(c))
}

/// A root lies in the parabolic subsystem iff its simple-root expansion avoids
/// `α_1, …, α_m`, i.e. iff its smallest index exceeds `m`.
pub fn is_parabolic(root: Root, ctx: &FlagContext) -> bool {
    root.first() > ctx.m
}

pub fn edge_degree(root: Root, ctx: &FlagContext) -> Result<DegreeVector> {
    let c = coroot_coeffs(root, ctx)?;
    if is_parabolic(root, ctx) {
        return Err(Error::ParabolicRoot(root.to_string()));
    }
    Ok(DegreeVector(c.0[..ctx.m].to_vec()))
}

/// `R^+ \ R_P^+`, in the order of [`positive_roots`].
pub fn parabolic_complement(ctx: &FlagContext) -> Vec<Root> {
    positive_roots(ctx)
        .into_iter()
        .filter(|&r| !is_parabolic(r, ctx))
        .collect()
}

/// The three degree classes partitioning `R^+ \ R_P^+`. Each pattern is
/// `0^a` followed by `1^b` and then a tail that is all zeros, absent, or all twos.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    /// `(0^a 1^b 0^c)` with `c >= 1`: `t_i - t_j` with `j <= m`.
    Inner { a: usize, b: usize },
    /// `(0^a 1^{m-a})`: `2t_i`, or `t_i ± t_j` with `j > m`.
    Reaching { a: usize },
    /// `(0^a 1^b 2^c)` with `c >= 1`: `t_i + t_j` with `j <= m`.
    Doubled { a: usize, b: usize },
}

impl RootClass {
    /// Entry at 1-based position `i` of the class pattern.
    pub fn entry(&self, i: usize, m: usize) -> u32 {
        let (a, b, tail) = match *self {
            RootClass::Inner { a, b } => (a, b, 0),
            RootClass::Reaching { a } => (a, m - a, 0),
            RootClass::Doubled { a, b } => (a, b, 2),
        };
        if i <= a {
            0
        } else if i <= a + b {
            1
        } else {
            tail
        }
    }

    pub fn pattern(&self, m: usize) -> DegreeVector {
        DegreeVector((1..=m).map(|i| self.entry(i, m)).collect())
    }
}

pub fn root_class(root: Root, ctx: &FlagContext) -> Result<RootClass> {
    if !root.is_valid(ctx.rank()) {
        return Err(Error::InvalidRoot(root.to_string(), ctx.rank()));
    }
    if is_parabolic(root, ctx) {
        return Err(Error::ParabolicRoot(root.to_string()));
    }
    let m = ctx.m;
    Ok(match root {
        Root::Diff(i, j) if j <= m => RootClass::Inner { a: i - 1, b: j - i },
        Root::Sum(i, j) if j <= m => RootClass::Doubled { a: i - 1, b: j - i },
        _ => RootClass::Reaching {
            a: root.first() - 1,
        },
    })
}

/// The class label of `root`, as a degree vector.
pub fn classify(root: Root, ctx: &FlagContext) -> Result<DegreeVector> {
    Ok(root_class(root, ctx)?.pattern(ctx.m))
}
