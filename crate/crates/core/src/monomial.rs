//! Monomials in the variables `x[k,j]` of a ring with `c` rows and `n` columns.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A variable `x[row, col]`, both indices starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub row: u32,
    pub col: u32,
}

impl Var {
    pub const fn new(row: u32, col: u32) -> Self {
        Var { row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// Nonnegative integer extended by a point at infinity.
///
/// Used for codimension and the cover number, both of which are infinite on
/// the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Finite(u64),
    Infinity,
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Degree::Infinity)
    }

    /// Subtraction that leaves infinity alone and saturates at zero.
    pub fn saturating_sub(self, k: u64) -> Degree {
        match self {
            Degree::Finite(d) => Degree::Finite(d.saturating_sub(k)),
            Degree::Infinity => Degree::Infinity,
        }
    }

    pub fn plus(self, k: u64) -> Degree {
        match self {
            Degree::Finite(d) => Degree::Finite(d + k),
            Degree::Infinity => Degree::Infinity,
        }
    }
}

impl From<u64> for Degree {
    fn from(d: u64) -> Self {
        Degree::Finite(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(d) => s.serialize_u64(*d),
            Degree::Infinity => s.serialize_str("inf"),
        }
    }
}

/// A monomial stored sparsely as `(variable, exponent)` pairs sorted by
/// variable. Exponents are always positive; the empty list is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    entries: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(row: u32, col: u32) -> Self {
        Monomial {
            entries: vec![(Var::new(row, col), 1)],
        }
    }

    /// Builds a monomial from arbitrary factors; repeated variables multiply
    /// and zero exponents are dropped.
    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (Var, u32)>,
    {
        let mut entries: Vec<(Var, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        entries.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { entries: merged }
    }

    /// Shorthand for tests and examples: `&[(row, col, exp)]`.
    pub fn from_triples(triples: &[(u32, u32, u32)]) -> Self {
        Self::from_factors(triples.iter().map(|&(k, j, e)| (Var::new(k, j), e)))
    }

    pub fn entries(&self) -> &[(Var, u32)] {
        &self.entries
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.entries
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn max_exponent(&self) -> u32 {
        self.entries.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    pub fn min_col(&self) -> Option<u32> {
        self.entries.iter().map(|&(v, _)| v.col).min()
    }

    pub fn max_col(&self) -> Option<u32> {
        self.entries.iter().map(|&(v, _)| v.col).max()
    }

    pub fn max_row(&self) -> Option<u32> {
        self.entries.iter().map(|&(v, _)| v.row).max()
    }

    pub fn is_squarefree(&self) -> bool {
        self.entries.iter().all(|&(_, e)| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.entries.len() > other.entries.len() {
            return false;
        }
        let mut rest = other.entries.iter();
        'outer: for &(v, e) in &self.entries {
            for &(w, f) in rest.by_ref() {
                match w.cmp(&v) {
                    Ordering::Less => continue,
                    Ordering::Equal if f >= e => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }

    fn merge_with(&self, other: &Monomial, both: impl Fn(u32, u32) -> u32, keep_one_sided: bool) -> Monomial {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    if keep_one_sided {
                        out.push(a[i]);
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if keep_one_sided {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let e = both(a[i].1, b[j].1);
                    if e > 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if keep_one_sided {
            out.extend_from_slice(&a[i..]);
            out.extend_from_slice(&b[j..]);
        }
        Monomial { entries: out }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max, true)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::min, false)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |x, y| x + y, true)
    }

    /// `self / gcd(self, other)`: the generator of `<self> : other`.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        let entries = self
            .entries
            .iter()
            .filter_map(|&(v, e)| {
                let rest = e.saturating_sub(other.exponent(v));
                (rest > 0).then_some((v, rest))
            })
            .collect();
        Monomial { entries }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.quotient_by(other))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            entries: self.entries.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Product of the variables in the support.
    pub fn radical(&self) -> Monomial {
        Monomial {
            entries: self.entries.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    /// Applies a column map. The map must be strictly increasing on the
    /// support columns for the result to keep the same shape.
    pub fn map_cols(&self, f: impl Fn(u32) -> u32) -> Monomial {
        Self::from_factors(self.entries.iter().map(|&(v, e)| (Var::new(v.row, f(v.col)), e)))
    }

    /// Factors drawn from the selected variables.
    pub fn restrict(&self, keep: impl Fn(Var) -> bool) -> Monomial {
        Monomial {
            entries: self.entries.iter().copied().filter(|&(v, _)| keep(v)).collect(),
        }
    }

    /// Distinct support columns in increasing order.
    pub fn columns(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.entries.iter().map(|&(v, _)| v.col).collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (idx, &(v, e)) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Error from the monomial grammar, carrying a 0-based byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSyntaxError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for MonomialSyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for MonomialSyntaxError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, MonomialSyntaxError> {
        Err(MonomialSyntaxError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, b: u8) -> Result<(), MonomialSyntaxError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{}'", b as char))
        }
    }

    fn int(&mut self) -> Result<u32, MonomialSyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| MonomialSyntaxError {
            offset: start,
            message: "integer out of range".into(),
        })
    }
}

/// Parses `1` or a `*`-separated product of `x[k,j]` / `x[k,j]^e` factors.
pub fn parse_monomial(text: &str) -> Result<Monomial, MonomialSyntaxError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if cur.peek() == Some(b'1') {
        cur.pos += 1;
        if cur.peek().is_some() {
            return cur.fail("unexpected input after '1'");
        }
        return Ok(Monomial::one());
    }
    let mut factors = Vec::new();
    loop {
        cur.expect(b'x')?;
        cur.expect(b'[')?;
        let row_at = cur.pos;
        let row = cur.int()?;
        cur.expect(b',')?;
        let col_at = cur.pos;
        let col = cur.int()?;
        cur.expect(b']')?;
        if row == 0 {
            return Err(MonomialSyntaxError {
                offset: row_at,
                message: "row index must be at least 1".into(),
            });
        }
        if col == 0 {
            return Err(MonomialSyntaxError {
                offset: col_at,
                message: "column index must be at least 1".into(),
            });
        }
        let mut exp = 1;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            let exp_at = cur.pos;
            exp = cur.int()?;
            if exp == 0 {
                return Err(MonomialSyntaxError {
                    offset: exp_at,
                    message: "exponent must be positive".into(),
                });
            }
        }
        factors.push((Var::new(row, col), exp));
        match cur.peek() {
            None => break,
            Some(b'*') => cur.pos += 1,
            Some(_) => return cur.fail("expected '*' or end of monomial"),
        }
    }
    Ok(Monomial::from_factors(factors))
}

impl FromStr for Monomial {
    type Err = MonomialSyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_monomial(s)
    }
}
