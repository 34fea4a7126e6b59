//! Tables of invariants over a range of widths, eventual linear fits, and
//! verdicts comparing observed slopes with the cover numbers.
//!
//! "For `n` large" is read as: the law holds on the longest tabulated suffix
//! and that suffix has at least three steps. Shorter evidence is reported as
//! inconclusive, never as a pass.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{ChainSpec, Derivation};
use crate::covers::{big_gamma, gamma, gamma_chain, partition_generators, vm_bound, BigGammaReport, VmReport};
use crate::decomposition::codim;
use crate::error::{Error, Result};
use crate::monomial::Degree;
use crate::resolution::{pd_estimate, PdValue, ResolutionOptions};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Least number of agreeing steps for a conclusive fit.
pub const CONCLUSIVE_STEPS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainMeta {
    pub rows: u32,
    pub monoid_index: u32,
    pub seed_index: u32,
    pub derivation: Derivation,
}

impl From<&ChainSpec> for ChainMeta {
    fn from(spec: &ChainSpec) -> Self {
        ChainMeta {
            rows: spec.rows(),
            monoid_index: spec.monoid_index(),
            seed_index: spec.seed_index(),
            derivation: spec.derivation().clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantRow {
    pub n: u32,
    pub num_gens: usize,
    pub codim: Degree,
    /// Absent for the unit ideal.
    pub pd: Option<PdValue>,
    pub gamma: Degree,
}

impl InvariantRow {
    pub fn pd_exact(&self) -> Option<u32> {
        self.pd.and_then(PdValue::exact)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantTable {
    pub chain: ChainMeta,
    pub rows: Vec<InvariantRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TableOptions {
    pub resolution: ResolutionOptions,
    /// Skip the projective dimension column.
    pub skip_pd: bool,
}

impl TableOptions {
    pub fn codim_only() -> Self {
        TableOptions {
            skip_pd: true,
            ..Default::default()
        }
    }
}

/// Invariants of `I_n` for `n` in `from..=to`, one row per width.
pub fn invariant_table(spec: &ChainSpec, from: u32, to: u32, opts: &TableOptions) -> Result<InvariantTable> {
    if from == 0 || from > to {
        return Err(Error::Hypothesis(format!("invalid width range {from}..{to}")));
    }
    let rows = (from..=to)
        .into_par_iter()
        .map(|n| -> Result<InvariantRow> {
            let j = spec.generate(n);
            let pd = if opts.skip_pd || j.is_unit() {
                None
            } else {
                Some(pd_estimate(&j, &opts.resolution)?)
            };
            Ok(InvariantRow {
                n,
                num_gens: j.num_gens(),
                codim: codim(&j),
                pd,
                gamma: gamma(&j, spec.monoid_index()).gamma,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantTable {
        chain: spec.into(),
        rows,
    })
}

impl InvariantTable {
    pub fn row(&self, n: u32) -> Option<&InvariantRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn codim_points(&self) -> Vec<(u32, Degree)> {
        self.rows.iter().map(|r| (r.n, r.codim)).collect()
    }

    /// Rows with exact projective dimension.
    pub fn pd_points(&self) -> Vec<(u32, Degree)> {
        self.rows
            .iter()
            .filter_map(|r| r.pd_exact().map(|p| (r.n, Degree::Finite(u64::from(p)))))
            .collect()
    }

    pub fn codim_nondecreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].codim <= w[1].codim)
    }

    /// CSV with header `n,codim,pd_exact,pd_lower,pd_upper,gamma`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "codim", "pd_exact", "pd_lower", "pd_upper", "gamma"])
            .expect("in-memory write");
        for r in &self.rows {
            let (exact, lower, upper) = match r.pd {
                Some(pd) => (
                    pd.exact().map(|v| v.to_string()).unwrap_or_default(),
                    pd.lower().to_string(),
                    pd.upper().to_string(),
                ),
                None => Default::default(),
            };
            w.write_record([
                r.n.to_string(),
                r.codim.to_string(),
                exact,
                lower,
                upper,
                r.gamma.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}

/// `value = slope * n + intercept` for every tabulated `n >= onset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearFit {
    pub slope: i64,
    pub intercept: i64,
    pub onset: u32,
    /// Steps in the agreeing suffix.
    pub steps: usize,
    pub conclusive: bool,
    /// Every input value was infinite; nothing was fitted.
    pub degenerate: bool,
}

impl LinearFit {
    pub fn eval(&self, n: u32) -> i64 {
        self.slope * i64::from(n) + self.intercept
    }
}

impl fmt::Display for LinearFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degenerate {
            return f.write_str("degenerate (all values infinite)");
        }
        write!(
            f,
            "{}*n {} {} for n >= {} ({} steps, {})",
            self.slope,
            if self.intercept < 0 { '-' } else { '+' },
            self.intercept.abs(),
            self.onset,
            self.steps,
            if self.conclusive { "conclusive" } else { "inconclusive" }
        )
    }
}

/// Longest suffix of consecutive widths with constant first differences.
///
/// Infinite values are dropped before fitting; input order is irrelevant.
pub fn fit_linear(points: &[(u32, Degree)]) -> Result<LinearFit> {
    let finite: Vec<(u32, i64)> = points
        .iter()
        .filter_map(|&(n, d)| d.finite().map(|v| (n, v as i64)))
        .collect();
    if finite.is_empty() && !points.is_empty() {
        return Ok(LinearFit {
            slope: 0,
            intercept: 0,
            onset: points.iter().map(|p| p.0).min().unwrap_or(0),
            steps: 0,
            conclusive: false,
            degenerate: true,
        });
    }
    fit_integers(&finite)
}

pub fn fit_integers(points: &[(u32, i64)]) -> Result<LinearFit> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup_by_key(|p| p.0);
    if pts.len() < 2 {
        return Err(Error::Hypothesis("a fit needs at least two points".into()));
    }
    let last = pts.len() - 1;
    if pts[last].0 != pts[last - 1].0 + 1 {
        return Err(Error::Hypothesis("the last two widths are not consecutive".into()));
    }
    let slope = pts[last].1 - pts[last - 1].1;
    let mut start = last - 1;
    while start > 0 && pts[start].0 == pts[start - 1].0 + 1 && pts[start].1 - pts[start - 1].1 == slope {
        start -= 1;
    }
    let steps = last - start;
    let (n0, v0) = pts[start];
    Ok(LinearFit {
        slope,
        intercept: v0 - slope * i64::from(n0),
        onset: n0,
        steps,
        conclusive: steps >= CONCLUSIVE_STEPS,
        degenerate: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CodimReport {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub gamma: Degree,
    pub fit: Option<LinearFit>,
    /// The intercept `D` of the fitted law `codim I_n = gamma * n + D`.
    pub intercept: Option<i64>,
    pub message: String,
    pub table: InvariantTable,
}

fn widths_from_seed(spec: &ChainSpec, from: u32, to: u32) -> usize {
    let lo = from.max(spec.seed_index());
    if to < lo {
        0
    } else {
        (to - lo + 1) as usize
    }
}

/// Checks that the codimension is eventually `gamma_i(I) * n + D`.
pub fn verify_codim_theorem(spec: &ChainSpec, from: u32, to: u32, opts: &TableOptions) -> Result<CodimReport> {
    let table = invariant_table(spec, from, to, opts)?;
    let g = gamma_chain(spec).gamma;
    let mut report = CodimReport {
        schema_version: SCHEMA_VERSION,
        verdict: Verdict::Inconclusive,
        gamma: g,
        fit: None,
        intercept: None,
        message: String::new(),
        table,
    };
    if g.is_infinite() {
        report.verdict = Verdict::Pass;
        report.message = "unit chain: every codimension is infinite".into();
        return Ok(report);
    }
    if widths_from_seed(spec, from, to) < CONCLUSIVE_STEPS + 1 {
        report.message = format!(
            "fewer than {} widths at or above the stability index {}; extend the range",
            CONCLUSIVE_STEPS + 1,
            spec.seed_index()
        );
        return Ok(report);
    }
    let points: Vec<(u32, Degree)> = report
        .table
        .codim_points()
        .into_iter()
        .filter(|p| p.0 >= spec.seed_index())
        .collect();
    let fit = fit_linear(&points)?;
    report.fit = Some(fit);
    let gamma = g.finite().expect("finite") as i64;
    if !fit.conclusive {
        report.message = format!("only {} agreeing steps; extend the range", fit.steps);
    } else if fit.slope == gamma {
        report.verdict = Verdict::Pass;
        report.intercept = Some(fit.intercept);
        report.message = format!("codim I_n = {fit}; slope equals gamma = {gamma}");
    } else {
        report.verdict = Verdict::Fail;
        report.message = format!("codim I_n = {fit}, but gamma = {gamma}");
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SlopeCandidate {
    pub source: &'static str,
    pub slope: u32,
    /// Largest `D` with `pd(R_n/I_n) >= slope * n + D` on all exact rows.
    pub fitted_intercept: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PdBoundsReport {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub candidates: Vec<SlopeCandidate>,
    pub best_slope: u32,
    pub best_source: &'static str,
    pub big_gamma: BigGammaReport,
    pub vm: VmReport,
    pub observed_fit: Option<LinearFit>,
    /// Rows where `codim <= pd <= c*n` fails.
    pub violations: Vec<String>,
    pub message: String,
    pub table: InvariantTable,
}

/// Checks `codim I_n <= pd(R_n/I_n) <= c*n` on every row and that the best
/// lower-bound slope among `gamma_i`, the depth-capped `Gamma_i` and the
/// colon bound does not exceed the observed slope of the projective dimension.
pub fn verify_pd_bounds(
    spec: &ChainSpec,
    from: u32,
    to: u32,
    depth_cap: usize,
    opts: &TableOptions,
) -> Result<PdBoundsReport> {
    let table = invariant_table(
        spec,
        from,
        to,
        &TableOptions {
            skip_pd: false,
            ..*opts
        },
    )?;
    let g = gamma_chain(spec).gamma.finite().ok_or(Error::Degenerate("unit"))? as u32;
    let big = big_gamma(spec, depth_cap)?;
    let vm = vm_bound(spec)?;
    let c = u64::from(spec.rows());

    let mut violations = Vec::new();
    for row in &table.rows {
        let Some(pd) = row.pd else { continue };
        let bound = c * u64::from(row.n);
        if u64::from(pd.lower()) > bound {
            violations.push(format!("n={}: pd {} exceeds c*n = {}", row.n, pd, bound));
        }
        if let (Some(p), Some(cd)) = (pd.exact(), row.codim.finite()) {
            if u64::from(p) < cd {
                violations.push(format!("n={}: pd {} below codim {}", row.n, p, cd));
            }
        }
    }

    let exact: Vec<(u32, i64)> = table
        .rows
        .iter()
        .filter(|r| r.n >= spec.seed_index())
        .filter_map(|r| r.pd_exact().map(|p| (r.n, i64::from(p))))
        .collect();
    let mut candidates: Vec<SlopeCandidate> = [("gamma", g), ("Gamma", big.value), ("vm", vm.slope)]
        .into_iter()
        .map(|(source, slope)| SlopeCandidate {
            source,
            slope,
            fitted_intercept: exact.iter().map(|&(n, p)| p - i64::from(slope) * i64::from(n)).min(),
        })
        .collect();
    candidates.sort_by_key(|cand| std::cmp::Reverse(cand.slope));
    let best = candidates[0].clone();
    candidates.sort_by_key(|cand| match cand.source {
        "gamma" => 0,
        "Gamma" => 1,
        _ => 2,
    });

    let observed_fit = if exact.len() >= 2 {
        fit_integers(&exact).ok()
    } else {
        None
    };
    if let Some(fit) = observed_fit.filter(|f| f.conclusive) {
        violations.extend(bracket_misses(&table, &fit));
    }
    let (verdict, message) = if !violations.is_empty() {
        (Verdict::Fail, format!("{} bound violations", violations.len()))
    } else {
        match observed_fit {
            None => (Verdict::Inconclusive, "not enough exact pd rows".to_string()),
            Some(fit) if !fit.conclusive => (Verdict::Inconclusive, format!("pd fit {fit}; extend the range")),
            Some(fit) if i64::from(best.slope) <= fit.slope => (
                Verdict::Pass,
                format!(
                    "best lower-bound slope {} ({}) <= observed pd slope {}",
                    best.slope, best.source, fit.slope
                ),
            ),
            Some(fit) => (
                Verdict::Fail,
                format!(
                    "lower-bound slope {} ({}) exceeds observed pd slope {}",
                    best.slope, best.source, fit.slope
                ),
            ),
        }
    };
    Ok(PdBoundsReport {
        schema_version: SCHEMA_VERSION,
        verdict,
        best_slope: best.slope,
        best_source: best.source,
        candidates,
        big_gamma: big,
        vm,
        observed_fit,
        violations,
        message,
        table,
    })
}

/// Bounded rows past the fitted tail whose bracket misses the fitted value.
fn bracket_misses(table: &InvariantTable, fit: &LinearFit) -> Vec<String> {
    table
        .rows
        .iter()
        .filter(|r| r.n >= fit.onset)
        .filter_map(|r| match r.pd {
            Some(pd @ PdValue::Bounds { lower, upper }) => {
                let want = fit.eval(r.n);
                (want < i64::from(lower) || want > i64::from(upper))
                    .then(|| format!("n={}: fitted pd {want} outside bounds {pd}", r.n))
            }
            _ => None,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum CmVerdict {
    /// `gamma_i` is below another lower-bound slope, so `R_n/I_n` is not
    /// Cohen-Macaulay for large `n`.
    NecessaryConditionFails,
    NoObstructionFound,
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmVerdict::NecessaryConditionFails => "NECESSARY-CONDITION-FAILS",
            CmVerdict::NoObstructionFound => "NO-OBSTRUCTION-FOUND",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CmReport {
    pub schema_version: u32,
    pub verdict: CmVerdict,
    pub gamma: u32,
    pub big_gamma: BigGammaReport,
    pub vm: VmReport,
    pub message: String,
}

/// A Cohen-Macaulay chain has `pd = codim`, forcing `gamma_i` to equal
/// every lower-bound slope for `pd`. A strictly larger slope rules it out.
pub fn cm_obstruction(spec: &ChainSpec, depth_cap: usize) -> Result<CmReport> {
    let g = gamma_chain(spec).gamma.finite().ok_or(Error::Degenerate("unit"))? as u32;
    let big = big_gamma(spec, depth_cap)?;
    let vm = vm_bound(spec)?;
    let (verdict, message) = if g < big.value || g < vm.slope {
        (
            CmVerdict::NecessaryConditionFails,
            format!("gamma = {g} < max(Gamma = {}, vm = {})", big.value, vm.slope),
        )
    } else {
        (
            CmVerdict::NoObstructionFound,
            format!("gamma = {g} >= Gamma = {} and vm = {}", big.value, vm.slope),
        )
    };
    Ok(CmReport {
        schema_version: SCHEMA_VERSION,
        verdict,
        gamma: g,
        big_gamma: big,
        vm,
        message,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum C1Case {
    /// Every seed generator lives in columns `<= i`; the ideals stop changing.
    FixedGenerators,
    /// Some generator reaches right of column `i`.
    Growing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct C1Report {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub case: Option<C1Case>,
    pub fit: Option<LinearFit>,
    /// `D` with `pd = n - D` on the tail, when that branch holds.
    pub gap: Option<i64>,
    pub message: String,
    pub table: Option<InvariantTable>,
}

/// One row of variables: `pd(R_n/I_n)` is eventually constant or eventually
/// `n - D`. Both are read off a conclusive tail fit with slope `0` or `1`.
pub fn verify_c1_dichotomy(spec: &ChainSpec, from: u32, to: u32, opts: &TableOptions) -> Result<C1Report> {
    let mut report = C1Report {
        schema_version: SCHEMA_VERSION,
        verdict: Verdict::NotApplicable,
        case: None,
        fit: None,
        gap: None,
        message: String::new(),
        table: None,
    };
    if spec.rows() != 1 {
        report.message = format!("needs one row of variables, the chain has {}", spec.rows());
        return Ok(report);
    }
    if spec.seed().is_unit() {
        report.message = "the chain is not proper".into();
        return Ok(report);
    }
    report.case = Some(match partition_generators(spec.seed(), spec.monoid_index()) {
        Ok(p) if p.plus.is_empty() && p.mid.is_empty() => C1Case::FixedGenerators,
        Ok(_) => C1Case::Growing,
        Err(_) => C1Case::FixedGenerators,
    });
    let table = invariant_table(
        spec,
        from,
        to,
        &TableOptions {
            skip_pd: false,
            ..*opts
        },
    )?;
    report.verdict = Verdict::Inconclusive;
    let exact: Vec<(u32, i64)> = table
        .rows
        .iter()
        .filter(|r| r.n >= spec.seed_index())
        .filter_map(|r| r.pd_exact().map(|p| (r.n, i64::from(p))))
        .collect();
    if let Some(&(n, p)) = exact.iter().find(|&&(n, p)| p > i64::from(n)) {
        report.verdict = Verdict::Fail;
        report.message = format!("n={n}: pd {p} exceeds the number of variables");
    } else if exact.len() < 2 {
        report.message = "not enough exact pd rows".into();
    } else {
        let fit = fit_integers(&exact)?;
        report.fit = Some(fit);
        let misses = bracket_misses(&table, &fit);
        if !fit.conclusive {
            report.message = format!("pd fit {fit}; extend the range");
        } else if !misses.is_empty() {
            report.verdict = Verdict::Fail;
            report.message = misses.join("; ");
        } else if fit.slope == 0 {
            report.verdict = Verdict::Pass;
            report.message = format!("pd is constant {} from n = {}", fit.intercept, fit.onset);
        } else if fit.slope == 1 && fit.intercept <= 0 {
            report.verdict = Verdict::Pass;
            report.gap = Some(-fit.intercept);
            report.message = match fit.intercept {
                0 => format!("pd = n from n = {}", fit.onset),
                b => format!("pd = n - {} from n = {}", -b, fit.onset),
            };
        } else {
            report.verdict = Verdict::Fail;
            report.message = format!("pd fit {fit} is neither constant nor n - D");
        }
    }
    report.table = Some(table);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{running_example, wide_gap_example};
    use crate::monomial::Monomial;

    fn pts(v: &[(u32, u64)]) -> Vec<(u32, Degree)> {
        v.iter().map(|&(n, x)| (n, Degree::Finite(x))).collect()
    }

    #[test]
    fn fit_examples() {
        let fit = fit_linear(&pts(&[(4, 3), (5, 6), (6, 8), (7, 10), (8, 12), (9, 14), (10, 16)])).unwrap();
        assert_eq!((fit.slope, fit.intercept, fit.onset, fit.conclusive), (2, -4, 5, true));

        let fit = fit_linear(&pts(&[(3, 7), (4, 7), (5, 7), (6, 7)])).unwrap();
        assert_eq!(fit.slope, 0);
        assert!(fit.conclusive);

        let fit = fit_linear(&pts(&[(1, 1), (2, 3)])).unwrap();
        assert_eq!((fit.slope, fit.onset, fit.conclusive), (2, 1, false));

        let fit = fit_linear(&[(1, Degree::Infinity), (2, Degree::Infinity)]).unwrap();
        assert!(fit.degenerate && !fit.conclusive);
        assert!(fit_linear(&pts(&[(1, 1)])).is_err());
    }

    #[test]
    fn fit_ignores_input_order() {
        let a = pts(&[(4, 3), (5, 6), (6, 8), (7, 10)]);
        let mut b = a.clone();
        b.reverse();
        assert_eq!(fit_linear(&a).unwrap(), fit_linear(&b).unwrap());
    }

    #[test]
    fn table_of_running_example() {
        let t = invariant_table(&running_example(), 4, 7, &TableOptions::default()).unwrap();
        let pd: Vec<u32> = t.rows.iter().map(|r| r.pd_exact().unwrap()).collect();
        assert_eq!(pd, vec![3, 6, 8, 10]);
        assert_eq!(t.rows[0].codim, Degree::Finite(3));
        assert!(t.codim_nondecreasing());
        let csv = t.to_csv();
        assert!(csv.starts_with("n,codim,pd_exact,pd_lower,pd_upper,gamma\n4,3,3,3,3,"));
    }

    #[test]
    fn zero_chain_table() {
        let spec = ChainSpec::new(2, 0, 2, Vec::<Monomial>::new()).unwrap();
        let t = invariant_table(&spec, 1, 4, &TableOptions::default()).unwrap();
        for r in &t.rows {
            assert_eq!(r.codim, Degree::Finite(0));
            assert_eq!(r.pd, Some(PdValue::Exact { value: 0 }));
        }
    }

    #[test]
    fn codim_theorem_examples() {
        let r = verify_codim_theorem(&running_example(), 4, 10, &TableOptions::codim_only()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fit.unwrap().slope, 2);

        let gap = wide_gap_example(3, 1, 3).unwrap();
        let r = verify_codim_theorem(&gap, 3, 9, &TableOptions::codim_only()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fit.unwrap().slope, 1);

        let unit = ChainSpec::new(1, 0, 1, [Monomial::one()]).unwrap();
        let r = verify_codim_theorem(&unit, 1, 5, &TableOptions::codim_only()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let r = verify_codim_theorem(&running_example(), 4, 6, &TableOptions::codim_only()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn pd_bounds_on_running_example() {
        let r = verify_pd_bounds(&running_example(), 4, 7, 3, &TableOptions::default()).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.best_slope, 2);
        assert_eq!(r.observed_fit.unwrap().slope, 2);
        let r = verify_pd_bounds(&running_example(), 4, 8, 3, &TableOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn cm_examples() {
        let gap = wide_gap_example(3, 1, 3).unwrap();
        assert_eq!(
            cm_obstruction(&gap, 5).unwrap().verdict,
            CmVerdict::NecessaryConditionFails
        );
        let principal = ChainSpec::new(1, 1, 2, ["x[1,2]".parse::<Monomial>().unwrap()]).unwrap();
        assert_eq!(
            cm_obstruction(&principal, 3).unwrap().verdict,
            CmVerdict::NoObstructionFound
        );
    }

    #[test]
    fn c1_examples() {
        let spec = ChainSpec::new(1, 1, 2, ["x[1,1]*x[1,2]".parse::<Monomial>().unwrap()]).unwrap();
        let r = verify_c1_dichotomy(&spec, 2, 8, &TableOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.case, Some(C1Case::Growing));

        let fixed = ChainSpec::new(1, 2, 3, ["x[1,1]*x[1,2]".parse::<Monomial>().unwrap()]).unwrap();
        let r = verify_c1_dichotomy(&fixed, 3, 8, &TableOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.case, Some(C1Case::FixedGenerators));
        assert_eq!(r.fit.unwrap().slope, 0);

        let r = verify_c1_dichotomy(&running_example(), 4, 8, &TableOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }
}
