//! Monomial ideals kept as their canonical minimal generating set.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Var};

/// A monomial ideal of `R_width = K[x[k,j] : k <= rows, j <= width]`.
///
/// `gens` is the minimal generating set, sorted by the canonical monomial
/// order, so two equal ideals in the same ring compare equal field by field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    rows: u32,
    width: u32,
    gens: Vec<Monomial>,
}

fn check_fits(rows: u32, width: u32, u: &Monomial) -> Result<()> {
    if let Some(row) = u.max_row() {
        if row > rows || row == 0 {
            return Err(Error::RowOutOfRange { row, rows });
        }
    }
    if let Some(col) = u.max_col() {
        if col > width {
            return Err(Error::WidthViolation { column: col, width });
        }
    }
    Ok(())
}

/// Keeps the divisibility-minimal elements, deduplicated and sorted.
pub(crate) fn minimal_elements(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
    for u in cands {
        if !kept.iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn zero(rows: u32, width: u32) -> Self {
        MonomialIdeal {
            rows,
            width,
            gens: Vec::new(),
        }
    }

    pub fn unit(rows: u32, width: u32) -> Self {
        MonomialIdeal {
            rows,
            width,
            gens: vec![Monomial::one()],
        }
    }

    /// The ideal generated by `candidates`, reduced to its minimal generators.
    pub fn minimalize<I>(rows: u32, width: u32, candidates: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let cands: Vec<Monomial> = candidates.into_iter().collect();
        for u in &cands {
            check_fits(rows, width, u)?;
        }
        Ok(Self::from_fitting(rows, width, cands))
    }

    /// Like [`minimalize`](Self::minimalize) for candidates already known to fit.
    pub(crate) fn from_fitting(rows: u32, width: u32, cands: Vec<Monomial>) -> Self {
        let gens = if cands.iter().any(Monomial::is_one) {
            vec![Monomial::one()]
        } else {
            minimal_elements(cands)
        };
        MonomialIdeal { rows, width, gens }
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Number of variables of the ambient ring.
    pub fn num_vars(&self) -> usize {
        (self.rows as usize) * (self.width as usize)
    }

    /// Variables of the ambient ring, ordered by `(row, column)`.
    pub fn ring_vars(&self) -> Vec<Var> {
        (1..=self.rows)
            .flat_map(|k| (1..=self.width).map(move |j| Var::new(k, j)))
            .collect()
    }

    /// Variables appearing in some generator, sorted.
    pub fn support(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.gens.iter().flat_map(|g| g.support()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// `J : v`, generated by `u / gcd(u, v)` over the generators `u`.
    pub fn colon(&self, v: &Monomial) -> MonomialIdeal {
        let cands = self.gens.iter().map(|u| u.quotient_by(v)).collect();
        Self::from_fitting(self.rows, self.width, cands)
    }

    pub fn radical(&self) -> MonomialIdeal {
        if self.is_squarefree() {
            return self.clone();
        }
        let cands = self.gens.iter().map(Monomial::radical).collect();
        Self::from_fitting(self.rows, self.width, cands)
    }

    /// `J + K` in the ring of the larger width.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.rows != other.rows {
            return Err(Error::RowMismatch {
                left: self.rows,
                right: other.rows,
            });
        }
        let cands = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_fitting(self.rows, self.width.max(other.width), cands))
    }

    /// `J + <vars>`.
    pub fn add_vars(&self, vars: impl IntoIterator<Item = Var>) -> Result<MonomialIdeal> {
        let extra: Vec<Monomial> = vars.into_iter().map(|v| Monomial::var(v.row, v.col)).collect();
        let other = MonomialIdeal::minimalize(self.rows, self.width, extra)?;
        self.sum(&other)
    }

    /// The extension of `J` to a ring of larger width.
    pub fn widen(&self, width: u32) -> MonomialIdeal {
        assert!(width >= self.width, "widen cannot shrink the ring");
        MonomialIdeal {
            rows: self.rows,
            width,
            gens: self.gens.clone(),
        }
    }

    /// Largest degree of a minimal generator.
    pub fn delta(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::UndefinedDelta("zero"));
        }
        if self.is_unit() {
            return Err(Error::UndefinedDelta("unit"));
        }
        Ok(self.gens.iter().map(Monomial::degree).max().unwrap_or(0))
    }

    /// Number of monomials of degree at most `delta(J)` in `R_width` outside `J`.
    ///
    /// Zero for the unit ideal; the zero ideal has no finite count.
    pub fn q_invariant(&self) -> Result<u64> {
        if self.is_unit() {
            return Ok(0);
        }
        if self.is_zero() {
            return Err(Error::InfiniteCount);
        }
        let delta = self.delta()?;
        let vars = self.ring_vars();
        let mut count = 0u64;
        // Monomials are visited as non-decreasing variable sequences; a
        // monomial in J prunes all of its multiples.
        let mut stack: Vec<(usize, Monomial)> = vec![(0, Monomial::one())];
        while let Some((start, u)) = stack.pop() {
            if self.contains(&u) {
                continue;
            }
            count += 1;
            if u.degree() == delta {
                continue;
            }
            for (idx, v) in vars.iter().enumerate().skip(start) {
                stack.push((idx, u.mul(&Monomial::var(v.row, v.col))));
            }
        }
        Ok(count)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}
