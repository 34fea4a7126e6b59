//! Multigraded Betti numbers and projective dimension of monomial ideals.
//!
//! `beta_{p,b}(J)` is the reduced homology in degree `p-1` of a simplicial
//! complex attached to `b`. Two complexes compute the same numbers:
//!
//! * the strict-divisor complex: subsets of the generators dividing `b`
//!   whose lcm is a proper divisor of `b`;
//! * the upper Koszul complex: squarefree `F` inside the support of `b`
//!   with `b / x^F` in `J`.
//!
//! Both are unions of simplices, one facet per variable or per generator,
//! and the engine builds whichever has fewer vertices. Only lcm-lattice
//! elements can carry nonzero Betti numbers, so those are the multidegrees
//! examined. Ideals whose generators split into variable-disjoint groups are
//! resolved group by group: projective dimensions of the quotients add and
//! Betti tables multiply.

mod linalg;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::decomposition::codim;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Var};

pub use linalg::{rank, SparseVec};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldChar {
    #[default]
    Rational,
    Prime(u32),
}

impl FieldChar {
    /// `0` selects the rationals; anything else must be a prime below 2^31.
    pub fn new(characteristic: u32) -> Result<Self> {
        match characteristic {
            0 => Ok(FieldChar::Rational),
            p if p < (1 << 31) && is_prime(p) => Ok(FieldChar::Prime(p)),
            p => Err(Error::Hypothesis(format!(
                "field characteristic {p} is not 0 or a prime below 2^31"
            ))),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldChar::Rational => 0,
            FieldChar::Prime(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

impl Serialize for FieldChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.characteristic())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionOptions {
    pub field: FieldChar,
    /// Most generators a variable-connected piece may have.
    pub gen_cap: usize,
    /// Most lcm-lattice elements per piece.
    pub lattice_cap: usize,
    /// Most faces of a single local complex.
    pub face_cap: usize,
    /// Compute every Betti number instead of stopping once the top degree is known.
    pub full_table: bool,
}

pub const DEFAULT_GEN_CAP: usize = 24;

impl Default for ResolutionOptions {
    fn default() -> Self {
        ResolutionOptions {
            field: FieldChar::Rational,
            gen_cap: DEFAULT_GEN_CAP,
            lattice_cap: 1 << 18,
            face_cap: 1 << 22,
            full_table: false,
        }
    }
}

impl ResolutionOptions {
    pub fn with_field(mut self, field: FieldChar) -> Self {
        self.field = field;
        self
    }

    pub fn with_gen_cap(mut self, cap: usize) -> Self {
        self.gen_cap = cap;
        self
    }
}

/// Distinct lcms of subsets of the minimal generators, ordered by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    gens: Vec<Monomial>,
    elements: Vec<Monomial>,
    below: Vec<Vec<usize>>,
}

impl LcmLattice {
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice contains 1")
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Indices into [`generators`](Self::generators) of the generators dividing element `idx`.
    pub fn generators_below(&self, idx: usize) -> &[usize] {
        &self.below[idx]
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

fn check_proper_nonzero(j: &MonomialIdeal) -> Result<()> {
    if j.is_zero() {
        return Err(Error::Degenerate("zero"));
    }
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    Ok(())
}

pub fn lcm_lattice(j: &MonomialIdeal, gen_cap: usize, lattice_cap: usize) -> Result<LcmLattice> {
    check_proper_nonzero(j)?;
    if j.num_gens() > gen_cap {
        return Err(Error::SizeGuard {
            what: "generator set",
            size: j.num_gens(),
            cap: gen_cap,
        });
    }
    let mut seen: HashSet<Monomial> = HashSet::from([Monomial::one()]);
    let mut elements = vec![Monomial::one()];
    for g in j.gens() {
        let fresh: Vec<Monomial> = elements
            .iter()
            .map(|e| e.lcm(g))
            .filter(|m| !seen.contains(m))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        for m in fresh {
            seen.insert(m.clone());
            elements.push(m);
        }
        if elements.len() > lattice_cap {
            return Err(Error::SizeGuard {
                what: "lcm lattice",
                size: elements.len(),
                cap: lattice_cap,
            });
        }
    }
    elements.sort();
    let gens = j.gens().to_vec();
    let below = elements
        .iter()
        .map(|b| (0..gens.len()).filter(|&k| gens[k].divides(b)).collect())
        .collect();
    Ok(LcmLattice { gens, elements, below })
}

/// Ideal-level Betti numbers `beta_{p,a}(J)`; `p = 0` counts generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field: FieldChar,
    #[serde(serialize_with = "serialize_entries")]
    entries: BTreeMap<(u32, Monomial), u64>,
}

fn serialize_entries<S: Serializer>(
    entries: &BTreeMap<(u32, Monomial), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        p: u32,
        degree: &'a Monomial,
        rank: u64,
    }
    s.collect_seq(entries.iter().map(|((p, degree), &rank)| Entry { p: *p, degree, rank }))
}

impl BettiTable {
    fn empty(field: FieldChar) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, p: u32, degree: &Monomial) -> u64 {
        self.entries.get(&(p, degree.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &Monomial, u64)> {
        self.entries.iter().map(|((p, a), &r)| (*p, a, r))
    }

    /// Total Betti number in homological degree `p`.
    pub fn total(&self, p: u32) -> u64 {
        self.entries().filter(|(q, _, _)| *q == p).map(|(_, _, r)| r).sum()
    }

    /// Totals for `p = 0..=top`.
    pub fn totals(&self) -> Vec<u64> {
        match self.top_degree() {
            Some(top) => (0..=top).map(|p| self.total(p)).collect(),
            None => Vec::new(),
        }
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.entries.keys().map(|(p, _)| *p).max()
    }

    /// `pd(R/J)`: one more than the top degree, `0` for the zero ideal.
    pub fn pd_quotient(&self) -> u32 {
        self.top_degree().map_or(0, |p| p + 1)
    }

    /// Table of `J_1 + J_2` for variable-disjoint `J_1`, `J_2`.
    fn tensor(&self, other: &BettiTable) -> BettiTable {
        let quotient = |t: &BettiTable| -> Vec<(u32, Monomial, u64)> {
            std::iter::once((0, Monomial::one(), 1))
                .chain(t.entries().map(|(p, a, r)| (p + 1, a.clone(), r)))
                .collect()
        };
        let mut out = BettiTable::empty(self.field);
        for (p, a, r) in quotient(self) {
            for (q, b, s) in quotient(other) {
                if p + q == 0 {
                    continue;
                }
                *out.entries.entry((p + q - 1, a.mul(&b))).or_insert(0) += r * s;
            }
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "char {}", self.field)?;
        for (p, total) in self.totals().iter().enumerate() {
            writeln!(f, "beta_{p} = {total}")?;
        }
        Ok(())
    }
}

/// Splits `J` into ideals whose generators share no variable across pieces.
pub fn variable_components(j: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let gens = j.gens();
    let mut parent: Vec<usize> = (0..gens.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut owner: HashMap<Var, usize> = HashMap::new();
    for (k, g) in gens.iter().enumerate() {
        for v in g.support() {
            match owner.get(&v) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, k));
                    parent[a] = b;
                }
                None => {
                    owner.insert(v, k);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for (k, g) in gens.iter().enumerate() {
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(g.clone());
    }
    groups
        .into_values()
        .map(|gs| MonomialIdeal::from_fitting(j.rows(), j.width(), gs))
        .collect()
}

/// A union of simplices on at most 64 vertices, stored as facet bitmasks.
struct LocalComplex {
    vertices: usize,
    facets: Vec<u64>,
}

impl LocalComplex {
    /// The smaller of the strict-divisor and upper Koszul complexes of `b`.
    fn for_degree(b: &Monomial, below: &[&Monomial]) -> LocalComplex {
        let vars: Vec<(Var, u32)> = b.entries().to_vec();
        if below.len() <= vars.len() {
            // Vertices are generators; facet per variable: generators not
            // attaining b's exponent there.
            let facets = vars
                .iter()
                .map(|&(v, e)| {
                    below
                        .iter()
                        .enumerate()
                        .filter(|(_, g)| g.exponent(v) < e)
                        .fold(0u64, |m, (k, _)| m | 1 << k)
                })
                .collect();
            LocalComplex {
                vertices: below.len(),
                facets,
            }
        } else {
            // Vertices are variables; facet per generator: variables where it
            // falls short of b.
            let facets = below
                .iter()
                .map(|g| {
                    vars.iter()
                        .enumerate()
                        .filter(|(_, (v, e))| g.exponent(*v) < *e)
                        .fold(0u64, |m, (k, _)| m | 1 << k)
                })
                .collect();
            LocalComplex {
                vertices: vars.len(),
                facets,
            }
        }
    }

    /// Largest `p` for which `beta_p` at this degree can be nonzero.
    fn degree_bound(&self) -> u32 {
        self.vertices.saturating_sub(1) as u32
    }

    fn is_face(&self, s: u64) -> bool {
        self.facets.iter().any(|f| s & !f == 0)
    }

    /// Faces grouped by dimension, `by_dim[d+1]` holding dimension `d`.
    fn faces(&self, cap: usize) -> Result<Faces> {
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); self.vertices + 1];
        let mut count = 0usize;
        if self.facets.is_empty() {
            return Ok(Faces::new(by_dim));
        }
        let mut stack = vec![(0u64, 0usize)];
        while let Some((face, next)) = stack.pop() {
            by_dim[face.count_ones() as usize].push(face);
            count += 1;
            if count > cap {
                return Err(Error::SizeGuard {
                    what: "local complex",
                    size: count,
                    cap,
                });
            }
            for v in next..self.vertices {
                let bigger = face | 1 << v;
                if self.is_face(bigger) {
                    stack.push((bigger, v + 1));
                }
            }
        }
        while by_dim.last().is_some_and(|l| l.is_empty()) {
            by_dim.pop();
        }
        Ok(Faces::new(by_dim))
    }
}

struct Faces {
    by_dim: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
    ranks: HashMap<usize, usize>,
}

impl Faces {
    fn new(mut by_dim: Vec<Vec<u64>>) -> Self {
        for layer in by_dim.iter_mut() {
            layer.sort_unstable();
        }
        let index = by_dim
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(k, &f)| (f, k)).collect())
            .collect();
        Faces {
            by_dim,
            index,
            ranks: HashMap::new(),
        }
    }

    fn count(&self, layer: usize) -> usize {
        self.by_dim.get(layer).map_or(0, Vec::len)
    }

    /// Rank of the boundary from layer `layer` to layer `layer - 1`.
    fn boundary_rank(&mut self, layer: usize, field: FieldChar) -> usize {
        if layer == 0 || layer >= self.by_dim.len() {
            return 0;
        }
        if let Some(&r) = self.ranks.get(&layer) {
            return r;
        }
        let target = &self.index[layer - 1];
        let columns: Vec<SparseVec> = self.by_dim[layer]
            .iter()
            .map(|&face| {
                let mut col: SparseVec = Vec::with_capacity(layer);
                let mut rest = face;
                let mut sign = 1i64;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    col.push((target[&(face & !bit)], sign));
                    sign = -sign;
                    rest &= rest - 1;
                }
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        let r = rank(&columns, field);
        self.ranks.insert(layer, r);
        r
    }

    /// Reduced homology rank in dimension `d >= -1`.
    fn reduced_homology(&mut self, d: i64, field: FieldChar) -> u64 {
        let layer = (d + 1) as usize;
        let f = self.count(layer);
        if f == 0 {
            return 0;
        }
        let out = self.boundary_rank(layer, field);
        let inc = self.boundary_rank(layer + 1, field);
        (f - out - inc) as u64
    }
}

struct Piece {
    lattice: LcmLattice,
}

impl Piece {
    fn new(j: &MonomialIdeal, opts: &ResolutionOptions) -> Result<Piece> {
        Ok(Piece {
            lattice: lcm_lattice(j, opts.gen_cap, opts.lattice_cap)?,
        })
    }

    fn complex(&self, idx: usize) -> LocalComplex {
        let below: Vec<&Monomial> = self
            .lattice
            .generators_below(idx)
            .iter()
            .map(|&k| &self.lattice.gens[k])
            .collect();
        LocalComplex::for_degree(&self.lattice.elements[idx], &below)
    }

    fn betti(&self, opts: &ResolutionOptions) -> Result<BettiTable> {
        type Entries = Vec<((u32, Monomial), u64)>;
        let per_degree: Vec<Result<Entries>> = (1..self.lattice.len())
            .into_par_iter()
            .map(|idx| {
                let complex = self.complex(idx);
                let mut faces = complex.faces(opts.face_cap)?;
                let b = &self.lattice.elements[idx];
                Ok((0..=complex.degree_bound())
                    .filter_map(|p| {
                        let h = faces.reduced_homology(i64::from(p) - 1, opts.field);
                        (h > 0).then(|| ((p, b.clone()), h))
                    })
                    .collect())
            })
            .collect();
        let mut table = BettiTable::empty(opts.field);
        for entries in per_degree {
            table.entries.extend(entries?);
        }
        Ok(table)
    }

    /// Top `p` with `beta_p` nonzero, visiting degrees by decreasing bound
    /// and stopping once no remaining degree can beat the best found.
    fn top_degree(&self, opts: &ResolutionOptions) -> Result<u32> {
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for idx in 1..self.lattice.len() {
            let bound = self.complex(idx).degree_bound();
            groups.entry(bound).or_default().push(idx);
        }
        let mut best = 0u32;
        for (&bound, members) in groups.iter().rev() {
            if bound <= best {
                break;
            }
            let floor = best;
            let found = members
                .par_iter()
                .map(|&idx| -> Result<u32> {
                    let mut faces = self.complex(idx).faces(opts.face_cap)?;
                    for p in (floor + 1..=bound).rev() {
                        if faces.reduced_homology(i64::from(p) - 1, opts.field) > 0 {
                            return Ok(p);
                        }
                    }
                    Ok(floor)
                })
                .try_reduce(|| floor, |a, b| Ok(a.max(b)))?;
            best = best.max(found);
        }
        Ok(best)
    }
}

/// All Betti numbers of `J`.
pub fn betti(j: &MonomialIdeal, opts: &ResolutionOptions) -> Result<BettiTable> {
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    let mut table: Option<BettiTable> = None;
    for part in variable_components(j) {
        let t = Piece::new(&part, opts)?.betti(opts)?;
        table = Some(match table {
            None => t,
            Some(acc) => acc.tensor(&t),
        });
    }
    Ok(table.unwrap_or_else(|| BettiTable::empty(opts.field)))
}

/// `pd(R_n / J)` for a proper ideal; `0` for the zero ideal.
pub fn pd_quotient(j: &MonomialIdeal, opts: &ResolutionOptions) -> Result<u32> {
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    if opts.full_table {
        return Ok(betti(j, opts)?.pd_quotient());
    }
    let mut total = 0;
    for part in variable_components(j) {
        total += 1 + Piece::new(&part, opts)?.top_degree(opts)?;
    }
    Ok(total)
}

/// Ideal-level `pd J = pd(R/J) - 1`, with the unit ideal (a free module) at `0`.
pub fn pd_ideal(j: &MonomialIdeal, opts: &ResolutionOptions) -> Result<u32> {
    if j.is_zero() {
        return Err(Error::Degenerate("zero"));
    }
    if j.is_unit() {
        return Ok(0);
    }
    Ok(pd_quotient(j, opts)? - 1)
}

/// Largest generator count accepted by the Taylor oracle.
pub const TAYLOR_GUARD: usize = 10;

/// Betti numbers from the Taylor complex, one multidegree at a time.
pub fn betti_taylor_oracle(j: &MonomialIdeal, field: FieldChar) -> Result<BettiTable> {
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    let gens = j.gens();
    if gens.len() > TAYLOR_GUARD {
        return Err(Error::SizeGuard {
            what: "Taylor oracle generator set",
            size: gens.len(),
            cap: TAYLOR_GUARD,
        });
    }
    let mut strands: HashMap<Monomial, Vec<u32>> = HashMap::new();
    for mask in 1u32..(1 << gens.len()) {
        let l = (0..gens.len())
            .filter(|k| mask >> k & 1 == 1)
            .fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]));
        strands.entry(l).or_default().push(mask);
    }
    let mut table = BettiTable::empty(field);
    for (a, masks) in strands {
        let top = masks.iter().map(|m| m.count_ones()).max().unwrap_or(0) as usize;
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for m in masks {
            layers[m.count_ones() as usize].push(m);
        }
        let index: Vec<HashMap<u32, usize>> = layers
            .iter()
            .map(|l| l.iter().enumerate().map(|(k, &m)| (m, k)).collect())
            .collect();
        // Boundary from subsets of size s to size s-1, both with lcm a.
        let boundary_rank = |s: usize| -> usize {
            if s < 2 || s > top {
                return 0;
            }
            let cols: Vec<SparseVec> = layers[s]
                .iter()
                .map(|&m| {
                    let mut col = Vec::new();
                    let mut sign = 1i64;
                    for k in 0..gens.len() {
                        if m >> k & 1 == 1 {
                            if let Some(&row) = index[s - 1].get(&(m & !(1 << k))) {
                                col.push((row, sign));
                            }
                            sign = -sign;
                        }
                    }
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            rank(&cols, field)
        };
        for (s, layer) in layers.iter().enumerate().skip(1) {
            let h = layer.len() - boundary_rank(s) - boundary_rank(s + 1);
            if h > 0 {
                table.entries.insert(((s - 1) as u32, a.clone()), h as u64);
            }
        }
    }
    Ok(table)
}

/// `pd(R_n / J)` from the Taylor oracle; requires at most [`TAYLOR_GUARD`] generators.
pub fn pd_taylor_oracle(j: &MonomialIdeal, field: FieldChar) -> Result<u32> {
    Ok(betti_taylor_oracle(j, field)?.pd_quotient())
}

/// Projective dimension, exact or bracketed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PdValue {
    Exact { value: u32 },
    Bounds { lower: u32, upper: u32 },
}

impl PdValue {
    pub fn exact(self) -> Option<u32> {
        match self {
            PdValue::Exact { value } => Some(value),
            PdValue::Bounds { .. } => None,
        }
    }

    pub fn lower(self) -> u32 {
        match self {
            PdValue::Exact { value } => value,
            PdValue::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> u32 {
        match self {
            PdValue::Exact { value } => value,
            PdValue::Bounds { upper, .. } => upper,
        }
    }

    pub fn contains(self, v: u32) -> bool {
        self.lower() <= v && v <= self.upper()
    }
}

impl fmt::Display for PdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdValue::Exact { value } => write!(f, "{value}"),
            PdValue::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// `pd(R_n / J)` per variable-connected piece: exact where the piece fits
/// the caps, otherwise bracketed by its codimension and by the smaller of its
/// variable and generator counts.
pub fn pd_estimate(j: &MonomialIdeal, opts: &ResolutionOptions) -> Result<PdValue> {
    if j.is_unit() {
        return Err(Error::Degenerate("unit"));
    }
    let (mut lower, mut upper, mut exact) = (0u32, 0u32, true);
    for part in variable_components(j) {
        let got = Piece::new(&part, opts).and_then(|p| p.top_degree(opts));
        match got {
            Ok(p) => {
                lower += p + 1;
                upper += p + 1;
            }
            Err(Error::SizeGuard { .. }) => {
                exact = false;
                lower += codim(&part).finite().expect("proper piece") as u32;
                upper += part.num_vars().min(part.num_gens()) as u32;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(if exact {
        PdValue::Exact { value: lower }
    } else {
        PdValue::Bounds { lower, upper }
    })
}
