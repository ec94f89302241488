use igraphs::analytic::{
    check_lemma_sums, class_density, density_targets, dirichlet_truncation_check, tuple_density,
    DirichletSeries, Estimate,
};
use igraphs::census::{census_rows, count_I, count_Ic, count_P};
use igraphs::graph::{build_igraph, export, is_connected_tuple, is_gpg_tuple, ExportFormat};
use igraphs::isomorphism::{class_counts, enumerate_classes_with_cap};
use igraphs::numtheory::{scan_sqrt_minus_one, scan_sqrt_one};
use igraphs::{FactorSieve, IGraphSpec};

use crate::config::{DensityMode, RunConfig, VerifySuite};
use crate::output::{Cell, Table};
use crate::CliError;

const LEMMA_SUM_TOLERANCE: f64 = 0.01;
const G1_DIRICHLET_TOLERANCE: f64 = 1e-3;
const DIVISOR_SQUARE_DIRICHLET_TOLERANCE: f64 = 1e-2;

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Validation(e.to_string())
}

pub fn census(config: &RunConfig, sieve: &FactorSieve) -> Result<Table, CliError> {
    let mut table = Table::new(vec!["n", "i", "ic", "p", "ci", "ci_c", "cp"]);
    for row in census_rows(config.max_n, sieve).map_err(compute)? {
        let r = row.record;
        table.push(vec![
            r.n.into(),
            r.i_count.into(),
            r.ic_count.into(),
            r.p_count.into(),
            row.sums.ci.into(),
            row.sums.ci_c.into(),
            row.sums.cp.into(),
        ]);
    }
    Ok(table)
}

/// `10^3, 10^4, ...` up to `max_n`, then `max_n` itself if it is not already listed.
pub fn density_points(max_n: u64) -> Vec<u64> {
    let mut points: Vec<u64> = std::iter::successors(Some(1000u64), |&x| x.checked_mul(10))
        .take_while(|&x| x <= max_n)
        .collect();
    if points.last() != Some(&max_n) {
        points.push(max_n);
    }
    points
}

pub fn density(config: &RunConfig, mode: DensityMode, sieve: &FactorSieve) -> Result<Table, CliError> {
    let mut table = Table::new(vec!["N", "ratio_name", "value", "target", "residual"]);
    for n in density_points(config.max_n) {
        let entries = match mode {
            DensityMode::Tuples => tuple_density(n, sieve),
            DensityMode::Classes => class_density(n, sieve),
        }
        .map_err(compute)?;
        for e in entries {
            table.push(vec![
                n.into(),
                e.name.as_str().into(),
                e.value.into(),
                e.target.into(),
                e.residual.into(),
            ]);
        }
    }
    Ok(table)
}

/// Outcome of a verification suite: one line per check.
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub passed: bool,
}

impl VerifyReport {
    fn new() -> Self {
        VerifyReport {
            lines: Vec::new(),
            passed: true,
        }
    }

    fn check(&mut self, pass: bool, name: &str, detail: String) {
        let tag = if pass { "PASS" } else { "FAIL" };
        self.lines.push(format!("{tag} {name}: {detail}"));
        self.passed &= pass;
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

pub fn verify(config: &RunConfig, suite: VerifySuite, sieve: &FactorSieve) -> Result<VerifyReport, CliError> {
    let mut report = VerifyReport::new();
    match suite {
        VerifySuite::Brute => {
            for (name, pick) in [
                ("I(n) class count vs brute force", 0usize),
                ("I_c(n) connected class count vs brute force", 1),
                ("P(n) generalised Petersen class count vs brute force", 2),
            ] {
                let mut failures = Vec::new();
                for n in 3..=config.brute_cap {
                    let part = enumerate_classes_with_cap(n, config.convention, config.brute_cap)
                        .map_err(compute)?;
                    let c = class_counts(&part);
                    let (brute, formula) = match pick {
                        0 => (c.total, count_I(n, sieve)),
                        1 => (c.connected, count_Ic(n, sieve)),
                        _ => (c.gpg, count_P(n, sieve)),
                    };
                    let formula = formula.map_err(compute)?;
                    if brute != formula {
                        failures.push(format!("n={n} brute={brute} formula={formula}"));
                    }
                }
                let detail = if failures.is_empty() {
                    format!("n in 3..={} ({} convention) all equal", config.brute_cap, config.convention)
                } else {
                    failures.join("; ")
                };
                report.check(failures.is_empty(), name, detail);
            }
        }
        VerifySuite::Sums => {
            for s in check_lemma_sums(config.max_n, sieve).map_err(compute)? {
                report.check(
                    s.residual() < LEMMA_SUM_TOLERANCE,
                    s.name,
                    format!(
                        "N={} exact/main = {} (|ratio - 1| = {:.3e}, tolerance {LEMMA_SUM_TOLERANCE})",
                        config.max_n,
                        s.ratio,
                        s.residual()
                    ),
                );
            }
        }
        VerifySuite::Dirichlet => {
            for (name, series, s, tol) in [
                ("g1 series = zeta(s)^2 zeta(s-1)/zeta(2s)", DirichletSeries::G1, 3.0, G1_DIRICHLET_TOLERANCE),
                ("tau^2 series = zeta(s)^4/zeta(2s)", DirichletSeries::Gu, 2.0, DIVISOR_SQUARE_DIRICHLET_TOLERANCE),
            ] {
                let c = dirichlet_truncation_check(series, s, config.max_n, sieve).map_err(compute)?;
                report.check(
                    c.gap < tol,
                    name,
                    format!(
                        "s={s} terms={} truncated={} closed={} gap={:.3e} (tolerance {tol})",
                        config.max_n, c.lhs, c.rhs, c.gap
                    ),
                );
            }
        }
        VerifySuite::Roots => {
            for (name, formula, scan) in [
                (
                    "r(n) piecewise formula vs scan of x^2 = 1",
                    FactorSieve::count_sqrt_one as fn(&FactorSieve, u64) -> _,
                    scan_sqrt_one as fn(u64) -> u64,
                ),
                (
                    "s(n) closed form vs scan of x^2 = -1",
                    FactorSieve::count_sqrt_minus_one,
                    scan_sqrt_minus_one,
                ),
            ] {
                let mut bad = Vec::new();
                for n in 1..=config.max_n {
                    if formula(sieve, n).map_err(compute)? != scan(n) {
                        bad.push(n);
                    }
                }
                let detail = if bad.is_empty() {
                    format!("n in 1..={} all equal", config.max_n)
                } else {
                    format!("{} mismatches, first at n={:?}", bad.len(), &bad[..bad.len().min(10)])
                };
                report.check(bad.is_empty(), name, detail);
            }
        }
    }
    Ok(report)
}

/// Graph text followed by a comment line carrying the classification.
pub fn graph(n: u64, j: u64, k: u64, format: ExportFormat) -> Result<String, CliError> {
    let spec = IGraphSpec::new(n, j, k).map_err(compute)?;
    let g = build_igraph(&spec);
    let mut out = export(&g, format);
    let comment = match format {
        ExportFormat::EdgeList => "#",
        ExportFormat::Dot => "//",
    };
    out.push_str(&format!(
        "{comment} gpg={} connected={}\n",
        is_gpg_tuple(&spec),
        is_connected_tuple(&spec)
    ));
    Ok(out)
}

pub fn constants() -> Table {
    let t = density_targets();
    let mut table = Table::new(vec!["name", "value", "error", "printed"]);
    let rows: [(&str, Estimate, &str); 11] = [
        ("mirsky_C", t.mirsky_c, "0.3226..."),
        ("zeta2", t.zeta2, "pi^2/6"),
        ("zeta4", t.zeta4, "pi^4/90"),
        ("zeta6", t.zeta6, "pi^6/945"),
        ("gpg_tuple_density", t.gpg_tuple_density, "0.8932..."),
        ("inv_zeta6", t.connected_tuple_density, "0.98295..."),
        ("class_growth", t.class_growth, "5/16"),
        ("gpg_class_density", t.gpg_class_density, "0.55683..."),
        ("inv_zeta2", t.connected_class_density, "0.60793..."),
        ("gpg_among_connected", t.gpg_among_connected, "0.91594..."),
        ("feller_tornier", t.feller_tornier, "(1+C)/2"),
    ];
    for (name, e, printed) in rows {
        table.push(vec![
            name.into(),
            Cell::Text(format!("{:.10}", e.value)),
            Cell::Text(format!("{:.1e}", e.error)),
            printed.into(),
        ]);
    }
    table
}
