//! Row covers of monomial ideals and the cover numbers of chains.
//!
//! A set of rows `C` covers a monomial when the monomial uses a variable from
//! one of those rows. `gamma_i(J)` is the least size of a row set covering
//! every minimal generator supported strictly right of column `i`; for a
//! chain it is the slope of the eventual codimension. Iterating the e-chain
//! construction and maximizing gives the larger slope `Gamma_i`, and colon
//! chains by the left halves of straddling generators give a second lower
//! bound for the projective dimension.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{e_ideal, ChainSpec, EVector};
use crate::decomposition::minimal_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Degree, Monomial};

/// A generator straddling column `i`, split as `low * high` with
/// `max_col(low) <= i < min_col(high)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitGenerator {
    pub whole: Monomial,
    pub low: Monomial,
    pub high: Monomial,
}

/// The generators of an ideal sorted by position relative to column `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorPartition {
    pub i: u32,
    /// Generators living strictly right of column `i`.
    pub plus: Vec<Monomial>,
    /// Generators meeting both sides of column `i`.
    pub mid: Vec<SplitGenerator>,
    /// Generators living in columns `<= i`.
    pub minus: Vec<Monomial>,
}

pub fn partition_generators(j: &MonomialIdeal, i: u32) -> Result<GeneratorPartition> {
    if j.is_zero() {
        return Err(Error::Degenerate("zero"));
    }
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    let mut part = GeneratorPartition {
        i,
        plus: Vec::new(),
        mid: Vec::new(),
        minus: Vec::new(),
    };
    for g in j.gens() {
        let (lo, hi) = (g.min_col().expect("nonconstant"), g.max_col().expect("nonconstant"));
        if lo > i {
            part.plus.push(g.clone());
        } else if hi <= i {
            part.minus.push(g.clone());
        } else {
            part.mid.push(SplitGenerator {
                whole: g.clone(),
                low: g.restrict(|v| v.col <= i),
                high: g.restrict(|v| v.col > i),
            });
        }
    }
    Ok(part)
}

/// A set of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct CoverSet(pub BTreeSet<u32>);

impl CoverSet {
    pub fn new(rows: impl IntoIterator<Item = u32>) -> Self {
        CoverSet(rows.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn covers(&self, u: &Monomial) -> bool {
        u.support().any(|v| self.0.contains(&v.row))
    }

    /// True when the rows cover every generator of `J` right of column `i`.
    pub fn is_cover_of(&self, j: &MonomialIdeal, i: u32) -> bool {
        j.gens()
            .iter()
            .filter(|g| g.min_col().is_some_and(|c| c > i))
            .all(|g| self.covers(g))
    }
}

impl fmt::Display for CoverSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, k) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub gamma: Degree,
    /// A cover of size `gamma`; absent for the unit ideal.
    pub witness: Option<CoverSet>,
    /// Row projections of the minimal primes of `<G_i^+(J)>`.
    pub family: Vec<CoverSet>,
    /// Inclusion-minimal members of `family`, i.e. the minimal covers.
    pub minimal_covers: Vec<CoverSet>,
}

fn inclusion_minimal(sets: &[CoverSet]) -> Vec<CoverSet> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t != *s && t.0.is_subset(&s.0)))
        .cloned()
        .collect()
}

/// `gamma_i(J)`, read off the minimal primes of `<G_i^+(J)>`.
pub fn gamma(j: &MonomialIdeal, i: u32) -> GammaReport {
    if j.is_unit() {
        return GammaReport {
            gamma: Degree::Infinity,
            witness: None,
            family: Vec::new(),
            minimal_covers: Vec::new(),
        };
    }
    let plus: Vec<Monomial> = j
        .gens()
        .iter()
        .filter(|g| g.min_col().is_some_and(|c| c > i))
        .cloned()
        .collect();
    let plus = MonomialIdeal::from_fitting(j.rows(), j.width(), plus);
    let family: BTreeSet<CoverSet> = minimal_primes(&plus).iter().map(|p| CoverSet(p.rows())).collect();
    let family: Vec<CoverSet> = family.into_iter().collect();
    let witness = family
        .iter()
        .min_by_key(|c| c.len())
        .cloned()
        .expect("a proper ideal has a minimal prime");
    GammaReport {
        gamma: Degree::Finite(witness.len() as u64),
        minimal_covers: inclusion_minimal(&family),
        witness: Some(witness),
        family,
    }
}

/// Minimal `i`-covers by enumerating all row subsets. Test oracle for [`gamma`].
pub fn minimal_covers_bruteforce(j: &MonomialIdeal, i: u32) -> Vec<CoverSet> {
    if j.is_unit() {
        return Vec::new();
    }
    let c = j.rows();
    let covers: Vec<CoverSet> = (0u32..(1 << c))
        .map(|mask| CoverSet::new((0..c).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)))
        .filter(|cs| cs.is_cover_of(j, i))
        .collect();
    let mut minimal = inclusion_minimal(&covers);
    minimal.sort();
    minimal
}

/// `gamma_i(J)` by subset enumeration over the rows.
pub fn gamma_bruteforce(j: &MonomialIdeal, i: u32) -> Degree {
    minimal_covers_bruteforce(j, i)
        .iter()
        .map(|c| Degree::Finite(c.len() as u64))
        .min()
        .unwrap_or(Degree::Infinity)
}

/// `gamma_i` of a chain, evaluated on the seed.
pub fn gamma_chain(spec: &ChainSpec) -> GammaReport {
    gamma(spec.seed(), spec.monoid_index())
}

fn finite_gamma(spec: &ChainSpec) -> u32 {
    gamma_chain(spec)
        .gamma
        .finite()
        .expect("proper chain has a finite cover number") as u32
}

/// Largest exponent of `x[k, col]` among the generators, for each row `k`.
fn column_exponents(j: &MonomialIdeal, col: u32) -> Vec<u32> {
    (1..=j.rows())
        .map(|k| {
            j.gens()
                .iter()
                .map(|g| g.exponent(crate::monomial::Var::new(k, col)))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Representatives of `E(I)`, paired with their e-chains.
///
/// Exponents beyond the largest `x[k,i+1]`-exponent among the generators of
/// `I_{r+1}` repeat earlier ideals, so the search box stops there, and
/// vectors giving an already seen ideal are dropped.
pub fn e_chains(spec: &ChainSpec) -> Vec<(EVector, ChainSpec)> {
    let i = spec.monoid_index();
    let next = spec.generate(spec.seed_index() + 1);
    let caps = column_exponents(&next, i + 1);
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut out = Vec::new();
    for e in EVector::boxed(&caps) {
        let ideal = e_ideal(&next, i, &e);
        if ideal.is_unit() || !seen.insert(ideal) {
            continue;
        }
        let chain = spec.e_chain(&e).expect("e has one entry per row");
        out.push((e, chain));
    }
    out
}

pub fn e_set(spec: &ChainSpec) -> Vec<EVector> {
    e_chains(spec).into_iter().map(|(e, _)| e).collect()
}

/// Per-level maxima of the iterated e-chain construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigGammaReport {
    /// Largest cover number seen over all levels.
    pub value: u32,
    /// `levels[k-1]` is the maximal `gamma_{i+k}` over depth-`k` e-chains.
    pub levels: Vec<u32>,
    pub depth_cap: usize,
    /// First level attaining `value`.
    pub reached_at: usize,
    /// `value == c` or the last two computed levels agree.
    pub stabilized: bool,
    /// The frontier hit [`FRONTIER_CAP`] and some chains were skipped, so
    /// `value` is only a lower bound.
    pub truncated: bool,
}

/// Largest number of distinct chains kept per level of the recursion.
pub const FRONTIER_CAP: usize = 20_000;

pub fn default_depth_cap(rows: u32) -> usize {
    rows as usize + 2
}

fn require_proper(spec: &ChainSpec) -> Result<()> {
    if spec.seed().is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    Ok(())
}

fn run_levels(spec: &ChainSpec, depth: usize, stop_at_rows: bool) -> Result<BigGammaReport> {
    require_proper(spec)?;
    let c = spec.rows();
    let mut frontier: Vec<ChainSpec> = vec![spec.clone()];
    let mut levels = Vec::with_capacity(depth);
    let mut truncated = false;
    for _ in 0..depth {
        let children: Vec<Vec<ChainSpec>> = frontier
            .par_iter()
            .map(|s| e_chains(s).into_iter().map(|(_, ch)| ch).collect())
            .collect();
        let mut seen: HashSet<ChainSpec> = HashSet::new();
        let mut next: Vec<ChainSpec> = Vec::new();
        for ch in children.into_iter().flatten() {
            if seen.contains(&ch) {
                continue;
            }
            if next.len() >= FRONTIER_CAP {
                truncated = true;
                break;
            }
            seen.insert(ch.clone());
            next.push(ch);
        }
        let level = next.par_iter().map(finite_gamma).max().unwrap_or(0);
        levels.push(level);
        frontier = next;
        if stop_at_rows && level == c {
            break;
        }
    }
    let value = levels.iter().copied().max().unwrap_or(0);
    let reached_at = levels.iter().position(|&v| v == value).map_or(0, |p| p + 1);
    let stabilized = value == c || (levels.len() >= 2 && levels[levels.len() - 1] == levels[levels.len() - 2]);
    Ok(BigGammaReport {
        value,
        levels,
        depth_cap: depth,
        reached_at,
        stabilized,
        truncated,
    })
}

/// `gamma_{i+k}^max`: the largest cover number over all depth-`k` e-chains.
pub fn gamma_max_level(spec: &ChainSpec, k: usize) -> Result<u32> {
    if k == 0 {
        return Err(Error::Hypothesis("the level must be at least 1".into()));
    }
    let report = run_levels(spec, k, false)?;
    Ok(report.levels[k - 1])
}

/// Depth-capped `Gamma_i`: the maximum of `gamma_max_level` over `1..=depth_cap`.
///
/// The sequence is nondecreasing and bounded by `c`; the recursion stops early
/// once it reaches `c`.
pub fn big_gamma(spec: &ChainSpec, depth_cap: usize) -> Result<BigGammaReport> {
    if depth_cap == 0 {
        return Err(Error::Hypothesis("the depth cap must be at least 1".into()));
    }
    run_levels(spec, depth_cap, true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VmReport {
    /// `max gamma_i(I : v_M)` over the admissible subsets examined.
    pub slope: u32,
    /// The maximizing subset `M` of straddling generators.
    pub witness: Vec<Monomial>,
    /// `v_M`, the product of the left halves of `M`.
    pub v: Monomial,
    /// All subsets were examined; otherwise `slope` came from a greedy search
    /// and is only a lower bound for the true maximum.
    pub exhaustive: bool,
}

/// Above this many straddling generators the subset search turns greedy.
pub const VM_SUBSET_CAP: usize = 16;

/// Colon-chain lower bound for the projective dimension slope.
///
/// Maximizes `gamma_i(I : v_M)` over subsets `M` of the straddling generators
/// of the seed whose product of left halves `v_M` is not divisible by any
/// generator living in columns `<= i`.
pub fn vm_bound(spec: &ChainSpec) -> Result<VmReport> {
    require_proper(spec)?;
    let base = finite_gamma(spec);
    let mut best = VmReport {
        slope: base,
        witness: Vec::new(),
        v: Monomial::one(),
        exhaustive: true,
    };
    if spec.seed().is_zero() {
        return Ok(best);
    }
    let part = partition_generators(spec.seed(), spec.monoid_index())?;
    let admissible = |v: &Monomial| !part.minus.iter().any(|g| g.divides(v));
    let mut memo: HashMap<Monomial, u32> = HashMap::new();
    let mut score = |v: &Monomial| -> u32 {
        *memo
            .entry(v.clone())
            .or_insert_with(|| finite_gamma(&spec.colon(v).expect("left halves live in columns <= i")))
    };
    let mid = &part.mid;
    if mid.len() <= VM_SUBSET_CAP {
        for mask in 1u32..(1u32 << mid.len()) {
            let members: Vec<&crate::covers::SplitGenerator> =
                (0..mid.len()).filter(|b| mask >> b & 1 == 1).map(|b| &mid[b]).collect();
            let v = members.iter().fold(Monomial::one(), |acc, s| acc.mul(&s.low));
            if !admissible(&v) {
                continue;
            }
            let g = score(&v);
            if g > best.slope {
                best.slope = g;
                best.witness = members.iter().map(|s| s.whole.clone()).collect();
                best.v = v;
            }
        }
        return Ok(best);
    }
    best.exhaustive = false;
    let mut chosen: Vec<usize> = Vec::new();
    let mut v = Monomial::one();
    loop {
        let step = (0..mid.len())
            .filter(|k| !chosen.contains(k))
            .filter_map(|k| {
                let w = v.mul(&mid[k].low);
                admissible(&w).then_some((k, w))
            })
            .map(|(k, w)| {
                let g = score(&w);
                (g, k, w)
            })
            .max_by_key(|&(g, k, _)| (g, std::cmp::Reverse(k)));
        match step {
            Some((g, k, w)) if g >= best.slope => {
                chosen.push(k);
                v = w;
                if g > best.slope || best.witness.is_empty() {
                    best.slope = g;
                    best.witness = chosen.iter().map(|&k| mid[k].whole.clone()).collect();
                    best.v = v.clone();
                }
            }
            _ => break,
        }
    }
    Ok(best)
}

/// `gamma_i` through one step of the e-chain recursion over `{0,1}^c`:
/// the minimum of `gamma_{i+1}(I_e)` over vectors that lower the
/// `q`-invariant and of `c - |e|` over vectors that keep it.
///
/// The recursion is only valid for squarefree chains, so it runs on the
/// radical chain, which has the same `gamma_i`. On a non-squarefree seed
/// such as `x[1,2]^2` (c = 1, i = 1) the vector `e = (1)` keeps `q` while
/// `gamma_i = 1 > c - |e|`.
pub fn gamma_by_e_split(spec: &ChainSpec) -> Result<Degree> {
    require_proper(spec)?;
    let spec = &spec.radical();
    let q = spec.seed().q_invariant()?;
    let next = spec.generate(spec.seed_index() + 1);
    let i = spec.monoid_index();
    let mut best = Degree::Infinity;
    for e in EVector::binary(spec.rows()) {
        let q_e = e_ideal(&next, i, &e).q_invariant()?;
        let candidate = if q_e < q {
            gamma_chain(&spec.e_chain(&e)?).gamma
        } else {
            Degree::Finite(u64::from(spec.rows()) - e.norm())
        };
        best = best.min(candidate);
    }
    Ok(best)
}

/// The first width in `from..=to` at which `value` is the size of some
/// member of the cover family `C_i(I_n)`.
pub fn value_in_cover_family(spec: &ChainSpec, value: u32, from: u32, to: u32) -> Option<u32> {
    (from.max(spec.seed_index())..=to).find(|&n| {
        gamma(&spec.generate(n), spec.monoid_index())
            .family
            .iter()
            .any(|c| c.len() == value as usize)
    })
}
