//! `verify`: reruns the invariant suites and reports one line per check.

use randic_core::closed_form::{energy_r2, energy_r3};
use randic_core::eigen::{adjacency_energy, randic_spectrum};
use randic_core::extremal::{
    locate_z, remark_b_min, remark_b_star, remark_g, remark_h, sweep_family, theorem4_bounds, theorem5_extremes,
    theorem6_interval, Family,
};
use randic_core::graph::build_caterpillar;
use randic_core::hjoin::caterpillar_randic_spectrum;
use randic_core::{CaterpillarSpec, Graph};

use crate::output::{CheckLine, Inputs, OutputRecord, Results};
use crate::CliError;

pub const DEFAULT_MAX_N: u64 = 40;
const TOLERANCE: f64 = 1e-9;
/// Largest order for which every caterpillar with spine length up to six is enumerated.
const EXHAUSTIVE_ORDER: u64 = 14;

/// `(n, b_min)` pairs checked when `--remark` is given without `--n`.
pub const REMARK_TABLE: [(u64, u64); 9] =
    [(20, 1), (30, 2), (50, 3), (100, 6), (500, 30), (1000, 61), (5000, 303), (10000, 606), (20000, 1213)];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Scope {
    pub oracle_equivalence: bool,
    pub bounds: bool,
    pub monotonicity: bool,
    pub remark: bool,
    pub path_relation: bool,
}

impl Scope {
    pub fn all() -> Self {
        Scope { oracle_equivalence: true, bounds: true, monotonicity: true, remark: true, path_relation: true }
    }

    pub fn is_empty(&self) -> bool {
        *self == Scope::default()
    }

    fn names(&self) -> Vec<String> {
        [
            (self.oracle_equivalence, "oracle-equivalence"),
            (self.bounds, "bounds"),
            (self.monotonicity, "monotonicity"),
            (self.remark, "remark"),
            (self.path_relation, "path-relation"),
        ]
        .into_iter()
        .filter(|(on, _)| *on)
        .map(|(_, name)| name.to_string())
        .collect()
    }
}

fn line(name: &str, passed: bool, detail: String) -> CheckLine {
    CheckLine { name: name.to_string(), passed, detail }
}

/// All caterpillars with spine length `2..=max_r` and order at most `max_order`.
pub fn caterpillars_up_to(max_order: usize, max_r: usize) -> Vec<CaterpillarSpec> {
    fn extend(prefix: &mut Vec<usize>, budget: usize, max_r: usize, out: &mut Vec<CaterpillarSpec>) {
        if prefix.len() >= 2 {
            out.push(CaterpillarSpec::new(prefix.clone()).expect("positive leaf counts"));
        }
        if prefix.len() == max_r {
            return;
        }
        // one spine vertex plus at least one leaf
        for p in 1..budget {
            prefix.push(p);
            extend(prefix, budget - p - 1, max_r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_order, max_r, &mut out);
    out
}

fn oracle_energy(spec: &CaterpillarSpec) -> Result<f64, CliError> {
    Ok(randic_spectrum(&build_caterpillar(spec))?.energy())
}

fn oracle_equivalence(max_n: u64) -> Result<Vec<CheckLine>, CliError> {
    let mut closed = (0usize, 0.0f64);
    let mut reduced = (0usize, 0.0f64);
    let mut compare_reduction = |spec: &CaterpillarSpec| -> Result<(), CliError> {
        let oracle = randic_spectrum(&build_caterpillar(spec))?;
        let diff = caterpillar_randic_spectrum(spec)?.max_abs_diff(&oracle).unwrap_or(f64::INFINITY);
        reduced = (reduced.0 + 1, reduced.1.max(diff));
        Ok(())
    };
    for n in 4..=max_n {
        for p in 1..=n - 3 {
            let spec = CaterpillarSpec::new(vec![p as usize, (n - p - 2) as usize])?;
            closed = (closed.0 + 1, closed.1.max((energy_r2(n, p)? - oracle_energy(&spec)?).abs()));
            compare_reduction(&spec)?;
        }
        for p in 1..n {
            for q in 1..n.saturating_sub(p + 3) {
                let spec = CaterpillarSpec::new(vec![p as usize, (n - p - q - 3) as usize, q as usize])?;
                closed = (closed.0 + 1, closed.1.max((energy_r3(n, p, q)? - oracle_energy(&spec)?).abs()));
                compare_reduction(&spec)?;
            }
        }
    }
    for spec in caterpillars_up_to(max_n.min(EXHAUSTIVE_ORDER) as usize, 6) {
        if spec.spine_len() > 3 {
            compare_reduction(&spec)?;
        }
    }
    Ok(vec![
        line(
            "closed forms vs oracle",
            closed.1 <= TOLERANCE,
            format!("{} caterpillars up to order {max_n}, max |ΔRE| {:.1e}", closed.0, closed.1),
        ),
        line(
            "reduction vs oracle",
            reduced.1 <= TOLERANCE,
            format!("{} caterpillars, max eigenvalue difference {:.1e}", reduced.0, reduced.1),
        ),
    ])
}

fn bounds(max_n: u64) -> Result<Vec<CheckLine>, CliError> {
    let mut bad = Vec::new();
    for n in 4..=max_n {
        let sweep = sweep_family(&Family::double_star(n)?)?;
        let t = theorem4_bounds(n)?;
        let attained = (sweep.max - t.upper).abs() <= 1e-12 * t.upper;
        if sweep.argmax != [t.p_max] || sweep.argmin != [1] || attained != t.upper_attained {
            bad.push(n);
        }
    }
    let mut out = vec![line(
        "double-star extremes",
        bad.is_empty(),
        if bad.is_empty() { format!("4 <= n <= {max_n}") } else { format!("fails at n = {bad:?}") },
    )];

    let mut graphs: Vec<(String, Graph)> = caterpillars_up_to(max_n.min(EXHAUSTIVE_ORDER) as usize, 6)
        .into_iter()
        .map(|s| (s.to_string(), build_caterpillar(&s)))
        .collect();
    for n in 2..=max_n as usize {
        graphs.push((format!("P_{n}"), Graph::path(n)));
        graphs.push((format!("K_{n}"), Graph::complete(n)));
    }
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let s = randic_spectrum(g)?;
        let re = s.energy();
        let rho = s.largest().unwrap_or(0.0);
        if (rho - 1.0).abs() > TOLERANCE || re < 2.0 - TOLERANCE || re > g.order() as f64 + TOLERANCE {
            failures.push(name.clone());
        }
    }
    out.push(line(
        "largest eigenvalue 1 and 2 <= RE <= n",
        failures.is_empty(),
        if failures.is_empty() { format!("{} graphs", graphs.len()) } else { format!("fails for {failures:?}") },
    ));
    Ok(out)
}

fn monotonicity(max_n: u64) -> Result<Vec<CheckLine>, CliError> {
    let mut middle = Vec::new();
    for n in 7..=max_n {
        for b in 1..=n - 6 {
            let f = Family::fixed_middle(n, b)?;
            let sweep = sweep_family(&f)?;
            let e = |p| sweep.energy_at(p).unwrap_or(f64::NAN);
            let rising = (1..(n - b - 3) / 2).all(|p| e(p + 1) >= e(p));
            let mirrored = (1..=n - b - 4).all(|p| (e(p) - e(n - p - b - 3)).abs() <= 1e-12);
            if !rising || !mirrored || theorem5_extremes(n, b).is_err() {
                middle.push((n, b));
            }
        }
    }
    let mut located = Vec::new();
    let mut wide = Vec::new();
    for n in 7..=max_n {
        if theorem6_interval(n)?.len() >= 0.5 {
            wide.push(n);
        }
        let mut families = vec![Family::symmetric(n)?];
        for b in 1..=n - 6 {
            families.push(Family::fixed_end(n, b)?);
        }
        for f in families {
            if let Err(e) = locate_z(&f) {
                located.push(format!("{} n={} b={:?}: {e}", f.name(), n, f.b()));
            }
        }
    }
    let span = format!("7 <= n <= {max_n}");
    Ok(vec![
        line(
            "fixed-middle monotone and mirrored",
            middle.is_empty(),
            if middle.is_empty() { span.clone() } else { format!("fails at (n, b) = {middle:?}") },
        ),
        line(
            "maximizer inside [floor r, ceil s]",
            located.is_empty(),
            if located.is_empty() { span.clone() } else { located.join("; ") },
        ),
        line(
            "symmetric interval shorter than 1/2",
            wide.is_empty(),
            if wide.is_empty() { span } else { format!("fails at n = {wide:?}") },
        ),
    ])
}

fn remark(n: u64) -> Result<CheckLine, CliError> {
    let b_min = remark_b_min(n)?;
    let b_star = remark_b_star(n);
    let from = b_star.ceil().max(1.0) as u64;
    let bound_holds = (from..=n - 6).all(|b| remark_g(n, b) > 0 && remark_h(n, b) < remark_g(n, b) as f64);
    let reference = REMARK_TABLE.iter().find(|(m, _)| *m == n).map(|&(_, b)| b);
    let matches = reference.is_none_or(|b| b == b_min);
    let mut detail = format!("n={n}: b_min={b_min}, b*={b_star:.4}");
    if let Some(b) = reference {
        if b != b_min {
            detail.push_str(&format!(", reference table {b}"));
        }
    }
    if !bound_holds {
        detail.push_str(", g <= h somewhere above b*");
    }
    Ok(line("remark", bound_holds && matches, detail))
}

fn path_relation(max_n: u64) -> Result<CheckLine, CliError> {
    let mut worst = 0.0f64;
    for n in 4..=max_n as usize {
        let re = randic_spectrum(&Graph::path(n))?.energy();
        let e = adjacency_energy(&Graph::path(n - 2))?;
        worst = worst.max((re - 2.0 - 0.5 * e).abs());
    }
    Ok(line("path relation", worst <= 1e-8, format!("4 <= n <= {max_n}, max deviation {worst:.1e}")))
}

pub fn run(scope: Scope, n: Option<u64>, max_n: Option<u64>) -> Result<OutputRecord, CliError> {
    let scope = if scope.is_empty() { Scope::all() } else { scope };
    let limit = max_n.unwrap_or(DEFAULT_MAX_N);
    if limit < 4 {
        return Err(CliError::Usage(format!("--max-n must be at least 4, got {limit}")));
    }
    let mut checks = Vec::new();
    if scope.oracle_equivalence {
        checks.extend(oracle_equivalence(limit)?);
    }
    if scope.bounds {
        checks.extend(bounds(limit)?);
    }
    if scope.monotonicity {
        checks.extend(monotonicity(limit)?);
    }
    if scope.remark {
        match n {
            Some(n) => checks.push(remark(n)?),
            None => {
                for (n, _) in REMARK_TABLE {
                    checks.push(remark(n)?);
                }
            }
        }
    }
    if scope.path_relation {
        checks.push(path_relation(limit)?);
    }
    let passed = checks.iter().all(|c| c.passed);
    let inputs = Inputs { n, max_n, scopes: scope.names(), ..Inputs::default() };
    Ok(OutputRecord::new("verify", inputs, Results::Verify { passed, checks }, "oracle"))
}
