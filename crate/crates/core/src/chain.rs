//! Inc^i-invariant chains of monomial ideals materialized from a finite seed.
//!
//! A chain is given by its seed ideal `I_r` in width `r`; for `n >= r` the
//! ideal `I_n` is generated by the images of the seed generators under the
//! increasing maps `pi` that fix `1..=i` and satisfy `pi(r) <= n`. Below `r`
//! the chain is zero.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Var};

/// Exponent vector `(e_1, ..., e_c)` selecting the colon `x[1,i+1]^e_1 ... x[c,i+1]^e_c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EVector(pub Vec<u32>);

impl EVector {
    pub fn zero(rows: u32) -> Self {
        EVector(vec![0; rows as usize])
    }

    pub fn norm(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x[1,col]^e_1 * ... * x[c,col]^e_c`.
    pub fn monomial_at(&self, col: u32) -> Monomial {
        Monomial::from_factors(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &e)| (Var::new(k as u32 + 1, col), e)),
        )
    }

    /// All vectors with `0 <= e_k <= caps[k]`, in lexicographic order.
    pub fn boxed(caps: &[u32]) -> Vec<EVector> {
        let mut out = vec![Vec::with_capacity(caps.len())];
        for &cap in caps {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=cap).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(EVector).collect()
    }

    /// The `2^rows` vectors in `{0,1}^rows`.
    pub fn binary(rows: u32) -> Vec<EVector> {
        Self::boxed(&vec![1; rows as usize])
    }
}

impl fmt::Display for EVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// How a chain was obtained, kept for reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Derivation {
    Seed,
    Colon { by: Monomial, from: Box<Derivation> },
    Radical { from: Box<Derivation> },
    EChain { e: EVector, from: Box<Derivation> },
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivation::Seed => f.write_str("seed"),
            Derivation::Colon { by, from } => write!(f, "({from}) : {by}"),
            Derivation::Radical { from } => write!(f, "sqrt({from})"),
            Derivation::EChain { e, from } => write!(f, "({from})_e{e}"),
        }
    }
}

/// Finite description of an Inc^i-invariant chain.
#[derive(Debug, Clone, Serialize)]
pub struct ChainSpec {
    rows: u32,
    monoid_index: u32,
    seed_index: u32,
    seed: MonomialIdeal,
    derivation: Derivation,
}

impl PartialEq for ChainSpec {
    fn eq(&self, other: &Self) -> bool {
        self.identity() == other.identity()
    }
}

impl Eq for ChainSpec {}

impl std::hash::Hash for ChainSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.identity().hash(state)
    }
}

impl ChainSpec {
    /// A chain with seed `<gens>` in width `seed_index`, invariant under Inc^`monoid_index`.
    pub fn new<I>(rows: u32, monoid_index: u32, seed_index: u32, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let seed = MonomialIdeal::minimalize(rows, seed_index, gens)?;
        Self::from_seed(monoid_index, seed, Derivation::Seed)
    }

    pub fn from_seed(monoid_index: u32, seed: MonomialIdeal, derivation: Derivation) -> Result<Self> {
        if seed.rows() == 0 {
            return Err(Error::Hypothesis("a chain needs at least one row".into()));
        }
        if seed.width() == 0 {
            return Err(Error::Hypothesis("the seed index must be at least 1".into()));
        }
        if monoid_index > seed.width() {
            return Err(Error::Hypothesis(format!(
                "monoid index {monoid_index} exceeds the seed index {}",
                seed.width()
            )));
        }
        Ok(ChainSpec {
            rows: seed.rows(),
            monoid_index,
            seed_index: seed.width(),
            seed,
            derivation,
        })
    }

    /// Canonical identity: everything except the derivation record.
    fn identity(&self) -> (u32, u32, u32, &MonomialIdeal) {
        (self.rows, self.monoid_index, self.seed_index, &self.seed)
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn monoid_index(&self) -> u32 {
        self.monoid_index
    }

    pub fn seed_index(&self) -> u32 {
        self.seed_index
    }

    pub fn seed(&self) -> &MonomialIdeal {
        &self.seed
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// `I_n`.
    pub fn generate(&self, n: u32) -> MonomialIdeal {
        if n < self.seed_index {
            return MonomialIdeal::zero(self.rows, n);
        }
        inc_image(&self.seed, self.monoid_index, n)
    }

    /// The chain `(I_n : v)`; `v` must only use columns `<= i`.
    pub fn colon(&self, v: &Monomial) -> Result<ChainSpec> {
        if let Some(col) = v.max_col() {
            if col > self.monoid_index {
                return Err(Error::Hypothesis(format!(
                    "colon monomial {v} uses column {col} > i = {}",
                    self.monoid_index
                )));
            }
        }
        if let Some(row) = v.max_row() {
            if row > self.rows {
                return Err(Error::RowOutOfRange { row, rows: self.rows });
            }
        }
        if v.is_one() {
            return Ok(self.clone());
        }
        Self::from_seed(
            self.monoid_index,
            self.seed.colon(v),
            Derivation::Colon {
                by: v.clone(),
                from: Box::new(self.derivation.clone()),
            },
        )
    }

    /// The chain `(sqrt(I_n))`.
    pub fn radical(&self) -> ChainSpec {
        if self.seed.is_squarefree() {
            return self.clone();
        }
        Self::from_seed(
            self.monoid_index,
            self.seed.radical(),
            Derivation::Radical {
                from: Box::new(self.derivation.clone()),
            },
        )
        .expect("radical keeps the seed shape")
    }

    /// The Inc^(i+1)-invariant chain `<(I_n : x^e at column i+1), x[1,i+1], ..., x[c,i+1]>`,
    /// seeded at width `r + 1`.
    pub fn e_chain(&self, e: &EVector) -> Result<ChainSpec> {
        if e.len() != self.rows as usize {
            return Err(Error::Hypothesis(format!(
                "e-vector {e} has length {} but the ring has {} rows",
                e.len(),
                self.rows
            )));
        }
        let seed = e_ideal(&self.generate(self.seed_index + 1), self.monoid_index, e);
        Self::from_seed(
            self.monoid_index + 1,
            seed,
            Derivation::EChain {
                e: e.clone(),
                from: Box::new(self.derivation.clone()),
            },
        )
    }

    /// Checks `<Inc^i_{n,n+1}(I_n)> = I_{n+1}`.
    pub fn verify_stability(&self, n: u32) -> bool {
        let grown = inc_image(&self.generate(n), self.monoid_index, n + 1);
        grown == self.generate(n + 1)
    }
}

/// `<(J : x^e at column i+1), x[1,i+1], ..., x[c,i+1]>` for an ideal `J`.
pub fn e_ideal(j: &MonomialIdeal, i: u32, e: &EVector) -> MonomialIdeal {
    let col = i + 1;
    j.colon(&e.monomial_at(col))
        .add_vars((1..=j.rows()).map(|k| Var::new(k, col)))
        .expect("column i+1 lies inside the ring")
}

/// The `i`-shift: columns `<= i` stay, larger columns move up by one.
pub fn shift_sigma(i: u32, u: &Monomial) -> Monomial {
    u.map_cols(|j| if j <= i { j } else { j + 1 })
}

/// `<sigma_i(J)>` in width `width(J) + 1`.
pub fn shift_ideal(i: u32, j: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::from_fitting(
        j.rows(),
        j.width() + 1,
        j.gens().iter().map(|g| shift_sigma(i, g)).collect(),
    )
}

/// The orbit `{ pi(u) : pi in Inc^i, pi(m) <= n }` of a monomial of width `m`.
///
/// Only the support columns above `i` move. An assignment `s_1 -> t_1 < ... <
/// s_t -> t_t` extends to an admissible `pi` exactly when the gaps do not
/// shrink (`t_1 >= s_1`, `t_{k+1} - t_k >= s_{k+1} - s_k`) and there is room
/// for the rest of `1..=m` (`n - t_t >= m - s_t`).
pub fn orbit(u: &Monomial, i: u32, m: u32, n: u32) -> Result<Vec<Monomial>> {
    if let Some(col) = u.max_col() {
        if col > m {
            return Err(Error::WidthViolation { column: col, width: m });
        }
    }
    if n < m {
        return Ok(Vec::new());
    }
    let moving: Vec<u32> = u.columns().into_iter().filter(|&j| j > i).collect();
    let mut images: Vec<Monomial> = Vec::new();
    let mut targets: Vec<u32> = Vec::with_capacity(moving.len());
    extend_targets(&moving, i, m, n, &mut targets, &mut |targets| {
        images.push(u.map_cols(|j| match moving.binary_search(&j) {
            Ok(k) => targets[k],
            Err(_) => j,
        }));
    });
    images.sort_unstable();
    images.dedup();
    Ok(images)
}

fn extend_targets(moving: &[u32], i: u32, m: u32, n: u32, targets: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    let k = targets.len();
    if k == moving.len() {
        emit(targets);
        return;
    }
    let (prev_s, prev_t) = if k == 0 {
        (i, i)
    } else {
        (moving[k - 1], targets[k - 1])
    };
    let s = moving[k];
    let lo = prev_t + (s - prev_s);
    // The last moving column must leave room for s+1..=m below n.
    let hi = n - (moving[moving.len() - 1] - s) - (m - moving[moving.len() - 1]);
    for t in lo..=hi {
        targets.push(t);
        extend_targets(moving, i, m, n, targets, emit);
        targets.pop();
    }
}

/// Orbit by enumerating every increasing map `1..=m -> 1..=n` fixing `1..=i`.
///
/// Test oracle for [`orbit`].
pub fn orbit_bruteforce(u: &Monomial, i: u32, m: u32, n: u32) -> Vec<Monomial> {
    let mut images = Vec::new();
    let mut map: Vec<u32> = Vec::with_capacity(m as usize);
    fn rec(u: &Monomial, i: u32, m: u32, n: u32, map: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let j = map.len() as u32 + 1;
        if j > m {
            out.push(u.map_cols(|c| map[c as usize - 1]));
            return;
        }
        if j <= i {
            if j > n {
                return;
            }
            map.push(j);
            rec(u, i, m, n, map, out);
            map.pop();
            return;
        }
        let lo = map.last().map_or(1, |&p| p + 1);
        for t in lo..=n {
            map.push(t);
            rec(u, i, m, n, map, out);
            map.pop();
        }
    }
    rec(u, i, m, n, &mut map, &mut images);
    images.sort_unstable();
    images.dedup();
    images
}

/// `<Inc^i_{m,n}(J)>` in width `n`, where `m` is the width of `J`.
pub fn inc_image(j: &MonomialIdeal, i: u32, n: u32) -> MonomialIdeal {
    let m = j.width();
    let mut cands = Vec::new();
    for g in j.gens() {
        cands.extend(orbit(g, i, m, n).expect("generators fit their ring"));
    }
    MonomialIdeal::from_fitting(j.rows(), n, cands)
}

/// A chain together with a cache of the ideals materialized so far.
#[derive(Debug)]
pub struct Chain {
    spec: ChainSpec,
    cache: RwLock<HashMap<u32, Arc<MonomialIdeal>>>,
}

impl Chain {
    pub fn new(spec: ChainSpec) -> Self {
        Chain {
            spec,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> &ChainSpec {
        &self.spec
    }

    pub fn ideal(&self, n: u32) -> Arc<MonomialIdeal> {
        if let Some(j) = self.cache.read().expect("cache lock").get(&n) {
            return Arc::clone(j);
        }
        let j = Arc::new(self.spec.generate(n));
        let mut cache = self.cache.write().expect("cache lock");
        Arc::clone(cache.entry(n).or_insert(j))
    }
}

impl From<ChainSpec> for Chain {
    fn from(spec: ChainSpec) -> Self {
        Chain::new(spec)
    }
}

/// The chain of the running example: `c = 3`, `i = 1`, seed
/// `<x[1,2]^3, x[1,4]^2*x[2,1], x[2,2]*x[3,3]>` at `r = 4`.
pub fn running_example() -> ChainSpec {
    ChainSpec::new(
        3,
        1,
        4,
        [
            Monomial::from_triples(&[(1, 2, 3)]),
            Monomial::from_triples(&[(1, 4, 2), (2, 1, 1)]),
            Monomial::from_triples(&[(2, 2, 1), (3, 3, 1)]),
        ],
    )
    .expect("valid seed")
}

/// The chain with seed `<x[1,i+1]*x[k,i+2] : k = 1..c>` at width `r >= i + 2`,
/// whose cover number is 1 while its e-chains reach `c`.
pub fn wide_gap_example(rows: u32, i: u32, r: u32) -> Result<ChainSpec> {
    if r < i + 2 {
        return Err(Error::Hypothesis(format!("need r >= i + 2, got r = {r}, i = {i}")));
    }
    ChainSpec::new(
        rows,
        i,
        r,
        (1..=rows).map(|k| Monomial::from_triples(&[(1, i + 1, 1), (k, i + 2, 1)])),
    )
}
