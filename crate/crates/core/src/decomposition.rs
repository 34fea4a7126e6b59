//! Minimal primes and codimension of monomial ideals.
//!
//! A monomial prime is generated by a set of variables, and it contains `J`
//! exactly when that set meets the support of every generator. Minimal primes
//! are therefore the minimal transversals of the support hypergraph of
//! `sqrt(J)`, and the codimension is the size of a smallest transversal.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Degree, Monomial, Var};

/// The prime ideal generated by a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct PrimeSupport {
    vars: BTreeSet<Var>,
}

impl PrimeSupport {
    pub fn new(vars: impl IntoIterator<Item = Var>) -> Self {
        PrimeSupport {
            vars: vars.into_iter().collect(),
        }
    }

    pub fn vars(&self) -> &BTreeSet<Var> {
        &self.vars
    }

    pub fn codim(&self) -> usize {
        self.vars.len()
    }

    /// True when the prime contains the monomial `u`.
    pub fn hits(&self, u: &Monomial) -> bool {
        u.support().any(|v| self.vars.contains(&v))
    }

    pub fn contains_ideal(&self, j: &MonomialIdeal) -> bool {
        j.gens().iter().all(|g| self.hits(g))
    }

    /// Rows used by the generating variables (the projection `(k, j) -> k`).
    pub fn rows(&self) -> BTreeSet<u32> {
        self.vars.iter().map(|v| v.row).collect()
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

/// Support hypergraph of `sqrt(J)` over a dense numbering of its variables.
struct Hypergraph {
    vars: Vec<Var>,
    edges: Vec<FixedBitSet>,
}

impl Hypergraph {
    fn of(j: &MonomialIdeal) -> Self {
        let rad = j.radical();
        let vars = rad.support();
        let n = vars.len();
        let edges = rad
            .gens()
            .iter()
            .map(|g| {
                let mut bits = FixedBitSet::with_capacity(n);
                for v in g.support() {
                    bits.insert(vars.binary_search(&v).expect("support variable"));
                }
                bits
            })
            .collect();
        Hypergraph { vars, edges }
    }

    /// Splits the edge set into classes connected through shared variables.
    fn components(&self) -> Vec<Vec<FixedBitSet>> {
        let n = self.vars.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let mut it = e.ones();
            if let Some(first) = it.next() {
                for v in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<FixedBitSet>> = Default::default();
        for e in &self.edges {
            let root = find(&mut parent, e.ones().next().expect("nonempty edge"));
            groups.entry(root).or_default().push(e.clone());
        }
        groups.into_values().collect()
    }
}

/// Minimal primes of `J`.
///
/// The unit ideal has none; the zero ideal has the single prime with no
/// variables.
pub fn minimal_primes(j: &MonomialIdeal) -> Vec<PrimeSupport> {
    if j.is_unit() {
        return Vec::new();
    }
    if j.is_zero() {
        return vec![PrimeSupport::default()];
    }
    let hg = Hypergraph::of(j);
    let n = hg.vars.len();
    let mut edges = hg.edges.clone();
    edges.sort_by_key(|e| e.count_ones(..));

    // Incremental transversal computation, one edge at a time.
    let mut transversals: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n)];
    for e in &edges {
        let mut next: Vec<FixedBitSet> = Vec::with_capacity(transversals.len());
        let mut extended: Vec<FixedBitSet> = Vec::new();
        for t in &transversals {
            if !t.is_disjoint(e) {
                next.push(t.clone());
            } else {
                for v in e.ones() {
                    let mut s = t.clone();
                    s.insert(v);
                    extended.push(s);
                }
            }
        }
        // Kept sets are pairwise incomparable already; a new set survives if
        // no kept set and no other new set sits strictly inside it.
        extended.sort_by_key(|s| s.count_ones(..));
        extended.dedup();
        let mut fresh: Vec<FixedBitSet> = Vec::with_capacity(extended.len());
        for s in extended {
            if next.iter().any(|k| k.is_subset(&s)) || fresh.iter().any(|k| k.is_subset(&s)) {
                continue;
            }
            fresh.push(s);
        }
        next.extend(fresh);
        transversals = next;
    }
    let mut primes: Vec<PrimeSupport> = transversals
        .into_iter()
        .map(|t| PrimeSupport::new(t.ones().map(|i| hg.vars[i])))
        .collect();
    primes.sort();
    primes
}

/// Codimension (height) of `J`: infinity for the unit ideal, 0 for zero.
pub fn codim(j: &MonomialIdeal) -> Degree {
    if j.is_unit() {
        return Degree::Infinity;
    }
    if j.is_zero() {
        return Degree::Finite(0);
    }
    let hg = Hypergraph::of(j);
    let total: usize = hg
        .components()
        .iter()
        .map(|edges| min_transversal_size(edges, hg.vars.len()))
        .sum();
    Degree::Finite(total as u64)
}

fn greedy_cover_size(edges: &[FixedBitSet], n: usize) -> usize {
    let mut remaining: Vec<&FixedBitSet> = edges.iter().collect();
    let mut size = 0;
    while !remaining.is_empty() {
        let mut deg = vec![0usize; n];
        for e in &remaining {
            for v in e.ones() {
                deg[v] += 1;
            }
        }
        let best = (0..n).max_by_key(|&v| deg[v]).expect("nonempty");
        remaining.retain(|e| !e.contains(best));
        size += 1;
    }
    size
}

/// Lower bound: a set of pairwise disjoint edges needs distinct cover vertices.
fn packing_bound(edges: &[FixedBitSet], n: usize) -> usize {
    let mut used = FixedBitSet::with_capacity(n);
    let mut count = 0;
    let mut order: Vec<&FixedBitSet> = edges.iter().collect();
    order.sort_by_key(|e| e.count_ones(..));
    for e in order {
        if e.is_disjoint(&used) {
            used.union_with(e);
            count += 1;
        }
    }
    count
}

fn branch(edges: Vec<FixedBitSet>, n: usize, chosen: usize, best: &mut usize) {
    if edges.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + packing_bound(&edges, n) >= *best {
        return;
    }
    let pivot = edges.iter().min_by_key(|e| e.count_ones(..)).expect("nonempty").clone();
    let mut deg = vec![0usize; n];
    for e in &edges {
        for v in e.ones() {
            deg[v] += 1;
        }
    }
    let mut candidates: Vec<usize> = pivot.ones().collect();
    candidates.sort_by_key(|&v| std::cmp::Reverse(deg[v]));

    // Branch j takes candidates[j] and forbids candidates[..j].
    let mut forbidden = FixedBitSet::with_capacity(n);
    for v in candidates {
        let mut next = Vec::with_capacity(edges.len());
        let mut feasible = true;
        for e in edges.iter().filter(|e| !e.contains(v)) {
            let mut e = e.clone();
            e.difference_with(&forbidden);
            if e.is_clear() {
                feasible = false;
                break;
            }
            next.push(e);
        }
        if feasible {
            branch(next, n, chosen + 1, best);
        }
        forbidden.insert(v);
    }
}

fn min_transversal_size(edges: &[FixedBitSet], n: usize) -> usize {
    let mut best = greedy_cover_size(edges, n);
    branch(edges.to_vec(), n, 0, &mut best);
    best
}

/// Support-size guard for [`codim_bruteforce`].
pub const BRUTEFORCE_VAR_CAP: usize = 20;

/// Codimension by enumerating variable subsets in order of size.
///
/// Test oracle for [`codim`]; refuses ideals with more than
/// [`BRUTEFORCE_VAR_CAP`] support variables.
pub fn codim_bruteforce(j: &MonomialIdeal) -> Result<Degree> {
    if j.is_unit() {
        return Ok(Degree::Infinity);
    }
    let vars = j.support();
    if vars.len() > BRUTEFORCE_VAR_CAP {
        return Err(Error::SizeGuard {
            what: "variable support",
            size: vars.len(),
            cap: BRUTEFORCE_VAR_CAP,
        });
    }
    let masks: Vec<u32> = j
        .gens()
        .iter()
        .map(|g| {
            g.support()
                .map(|v| 1u32 << vars.binary_search(&v).expect("support variable"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let n = vars.len() as u32;
    let hits = |s: u32| masks.iter().all(|&m| m & s != 0);
    if hits(0) {
        return Ok(Degree::Finite(0));
    }
    for size in 1..=n {
        // Gosper's hack walks the subsets of a fixed size in increasing order.
        let mut s: u32 = (1u32 << size) - 1;
        while s < (1u32 << n) {
            if hits(s) {
                return Ok(Degree::Finite(u64::from(size)));
            }
            let low = s & s.wrapping_neg();
            let ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
    }
    unreachable!("the full support meets every generator")
}
