//! `spectrum`, `energy` and `sweep`.

use randic_core::closed_form::{energy_r2, energy_r3, spectrum_r2, spectrum_r3};
use randic_core::eigen::randic_spectrum;
use randic_core::extremal::{family_energy, locate_z, Family};
use randic_core::graph::build_caterpillar;
use randic_core::hjoin::caterpillar_randic_spectrum;
use randic_core::{CaterpillarSpec, Graph, Spectrum};

use crate::formats::{looks_like_spec, parse_caterpillar, parse_edge_list};
use crate::output::{round9, ExtremalRow, FamilyRow, Inputs, OutputRecord, Results};
use crate::{CliError, FamilyKind, Method};

#[derive(Debug, Clone, PartialEq)]
pub enum GraphInput {
    Spec(CaterpillarSpec),
    EdgeList { path: String, graph: Graph },
}

impl GraphInput {
    pub fn label(&self) -> String {
        match self {
            GraphInput::Spec(s) => s.to_string(),
            GraphInput::EdgeList { path, .. } => path.clone(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GraphInput::Spec(s) => s.order(),
            GraphInput::EdgeList { graph, .. } => graph.order(),
        }
    }

    pub fn default_method(&self) -> Method {
        match self {
            GraphInput::Spec(_) => Method::Reduction,
            GraphInput::EdgeList { .. } => Method::Oracle,
        }
    }
}

/// A spec string such as `T(5,6,5)`, or the path of an edge-list file.
pub fn load_input(arg: &str) -> Result<GraphInput, CliError> {
    if looks_like_spec(arg) {
        return Ok(GraphInput::Spec(parse_caterpillar(arg)?));
    }
    let text = std::fs::read_to_string(arg).map_err(|source| CliError::Input { path: arg.to_string(), source })?;
    Ok(GraphInput::EdgeList { path: arg.to_string(), graph: parse_edge_list(&text)? })
}

fn closed_form_spec(input: &GraphInput) -> Result<&CaterpillarSpec, CliError> {
    match input {
        GraphInput::Spec(s) if matches!(s.spine_len(), 2 | 3) => Ok(s),
        GraphInput::Spec(s) => Err(CliError::Method {
            method: "closed-form",
            reason: format!("{s} has spine length {}, closed forms cover 2 and 3", s.spine_len()),
        }),
        GraphInput::EdgeList { .. } => {
            Err(CliError::Method { method: "closed-form", reason: "needs a caterpillar spec".into() })
        }
    }
}

pub fn compute_spectrum(input: &GraphInput, method: Method) -> Result<Spectrum, CliError> {
    match (method, input) {
        (Method::Oracle, GraphInput::Spec(s)) => Ok(randic_spectrum(&build_caterpillar(s))?),
        (Method::Oracle, GraphInput::EdgeList { graph, .. }) => Ok(randic_spectrum(graph)?),
        (Method::Reduction, GraphInput::Spec(s)) => Ok(caterpillar_randic_spectrum(s)?),
        (Method::Reduction, GraphInput::EdgeList { .. }) => {
            Err(CliError::Method { method: "reduction", reason: "needs a caterpillar spec".into() })
        }
        (Method::ClosedForm, _) => {
            let s = closed_form_spec(input)?;
            let (n, p) = (s.order() as u64, s.leaves()[0] as u64);
            let mut values = match s.leaves() {
                [_, _] => spectrum_r2(n, p)?.to_vec(),
                [_, _, q] => spectrum_r3(n, p, *q as u64)?.to_vec(),
                _ => unreachable!("checked spine length"),
            };
            values.resize(s.order(), 0.0);
            Ok(Spectrum::from_values(values))
        }
    }
}

pub fn compute_energy(input: &GraphInput, method: Method) -> Result<f64, CliError> {
    if method == Method::ClosedForm {
        let s = closed_form_spec(input)?;
        let (n, p) = (s.order() as u64, s.leaves()[0] as u64);
        return Ok(match s.leaves() {
            [_, _] => energy_r2(n, p)?,
            [_, _, q] => energy_r3(n, p, *q as u64)?,
            _ => unreachable!("checked spine length"),
        });
    }
    Ok(compute_spectrum(input, method)?.energy())
}

fn graph_inputs(input: &GraphInput) -> Inputs {
    Inputs { graph: Some(input.label()), order: Some(input.order()), ..Inputs::default() }
}

pub fn spectrum(input: &GraphInput, method: Option<Method>) -> Result<OutputRecord, CliError> {
    let method = method.unwrap_or_else(|| input.default_method());
    let spectrum = compute_spectrum(input, method)?.into_values();
    Ok(OutputRecord::new("spectrum", graph_inputs(input), Results::Spectrum { spectrum }, method.as_str()))
}

pub fn energy(input: &GraphInput, method: Option<Method>) -> Result<OutputRecord, CliError> {
    let method = method.unwrap_or_else(|| input.default_method());
    let energy = round9(compute_energy(input, method)?);
    Ok(OutputRecord::new("energy", graph_inputs(input), Results::Energy { energy }, method.as_str()))
}

fn family(kind: FamilyKind, n: u64, b: Option<u64>) -> Result<Family, CliError> {
    let need_b = || b.ok_or_else(|| CliError::Usage(format!("the {} family needs --b", kind.as_str())));
    Ok(match kind {
        FamilyKind::DoubleStar => Family::double_star(n)?,
        FamilyKind::Symmetric => Family::symmetric(n)?,
        FamilyKind::FixedMiddle => Family::fixed_middle(n, need_b()?)?,
        FamilyKind::FixedEnd => Family::fixed_end(n, need_b()?)?,
    })
}

fn extremal_row(f: &Family) -> Result<ExtremalRow, CliError> {
    let report = locate_z(f)?;
    let iv = report.interval.expect("symmetric and fixed-end reports carry an interval");
    let z = report.z;
    let before = z.checked_sub(1).and_then(|p| report.energy_at(p));
    Ok(ExtremalRow {
        n: f.n(),
        b: f.b(),
        r: iv.r,
        s: iv.s,
        z,
        energy_before: before.map(round9),
        energy: round9(report.attained_max),
        energy_after: report.energy_at(z + 1).map(round9),
        extremal_graph: report.extremal_graph().to_string(),
    })
}

/// Extremal table rows for `n..=max_n` (symmetric, fixed-end) or the
/// `(p, RE)` table of a single family member range (double-star, fixed-middle).
pub fn sweep(kind: FamilyKind, n: u64, max_n: Option<u64>, b: Option<u64>) -> Result<OutputRecord, CliError> {
    let last = max_n.unwrap_or(n);
    if last < n {
        return Err(CliError::Usage(format!("--max-n {last} is below --n {n}")));
    }
    let inputs = Inputs { family: Some(kind.as_str().into()), n: Some(n), max_n, b, ..Inputs::default() };
    let results = match kind {
        FamilyKind::Symmetric | FamilyKind::FixedEnd => {
            let rows = (n..=last).map(|m| extremal_row(&family(kind, m, b)?)).collect::<Result<_, _>>()?;
            Results::ExtremalTable { rows }
        }
        FamilyKind::DoubleStar | FamilyKind::FixedMiddle => {
            let mut rows = Vec::new();
            for m in n..=last {
                let f = family(kind, m, b)?;
                for p in f.domain() {
                    rows.push(FamilyRow {
                        p,
                        graph: f.member(p)?.to_string(),
                        energy: round9(family_energy(&f, p)?),
                    });
                }
            }
            Results::FamilyTable { rows }
        }
    };
    Ok(OutputRecord::new("sweep", inputs, results, "closed-form"))
}
