use std::fmt;
use std::io::{self, Write};

use mrbound::numerov::{auto_config, solve_eigenvalue};
use mrbound::reference::{MolecularTable, GRID1, GRID1_ALPHAS, GRID2, GRID3, MOLECULE_ALPHAS};
use mrbound::units::molecule_params;
use mrbound::{
    default_grid, energy_level, enumerate_bound_states, hulthen_wavefunction, radial_wavefunction,
    solve_coefficients, table_energy_ev, ApproxScheme, Case, CentrifugalMode, Error,
    MoleculeRegistry, PotentialParams, QuantumState, RadialFunction, UnitSystem,
};
use rayon::prelude::*;

use crate::args::{
    CompareArgs, Format, NumericMode, PotentialArgs, SpectrumArgs, TableArgs, Units,
    WavefunctionArgs,
};
use crate::output::{
    csv_writer, fixed, write_json, write_report_csv, Report, ReportRow, TableCell, TableDoc,
    WavefunctionDoc, SCHEMA_VERSION,
};

/// Failure classes, one per non-zero exit code.
#[derive(Debug)]
pub enum CliError {
    /// Nothing bound, or some rows failed.
    Empty(String),
    Usage(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Empty(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Empty(m) | CliError::Usage(m) | CliError::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Unbound { .. } => CliError::Empty(msg),
            Error::Quadrature { .. }
            | Error::Overflow(_)
            | Error::NoEigenvalueInBracket { .. }
            | Error::NotConverged { .. } => CliError::Numeric(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Numeric(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Numeric(format!("write failed: {e}"))
    }
}

pub type CmdResult = Result<(), CliError>;

/// Constants and molecules after applying any override files.
pub struct Context {
    pub units: UnitSystem,
    pub molecules: MoleculeRegistry,
}

/// A resolved potential plus the labels echoed into every row.
struct Setup {
    params: PotentialParams,
    scheme: ApproxScheme,
    units: Units,
    molecule: Option<String>,
    inv_b: f64,
}

impl Setup {
    fn from_args(a: &PotentialArgs, ctx: &Context) -> Result<Self, CliError> {
        if !(a.inv_b > 0.0 && a.inv_b.is_finite()) {
            return Err(CliError::Usage(format!(
                "--inv-b must be positive, got {}",
                a.inv_b
            )));
        }
        let b = 1.0 / a.inv_b;
        let coupling = a.coupling.resolve(b);
        let scheme = solve_coefficients(a.scheme, 1.0)?;
        let (params, molecule) = match (a.units, &a.molecule) {
            (Units::Au, None) => (PotentialParams::atomic(coupling, a.alpha, b)?, None),
            (Units::Au, Some(_)) => {
                return Err(CliError::Usage("--molecule needs --units ev".into()));
            }
            (Units::Ev, None) => {
                return Err(CliError::Usage("--units ev needs --molecule".into()));
            }
            (Units::Ev, Some(name)) => {
                let mol = ctx.molecules.get(name)?;
                let p = molecule_params(mol, coupling, a.alpha, b, &ctx.units)?;
                (p, Some(mol.name.clone()))
            }
        };
        Ok(Setup {
            params,
            scheme,
            units: a.units,
            molecule,
            inv_b: a.inv_b,
        })
    }

    fn row(&self, st: QuantumState) -> ReportRow {
        ReportRow {
            state_label: st.label(),
            n: st.n,
            l: st.l,
            inv_b: self.inv_b,
            alpha: self.params.alpha,
            scheme: self.scheme.case.name().to_string(),
            molecule: self.molecule.clone(),
            energy_analytic: None,
            energy_numeric: None,
            delta: None,
            units: self.units.name().to_string(),
            error: None,
        }
    }
}

fn emit_report<W: Write>(
    out: W,
    command: &'static str,
    rows: &[ReportRow],
    units: Units,
    format: Format,
    max_abs_delta: Option<f64>,
) -> CmdResult {
    match format {
        Format::Csv => write_report_csv(out, rows, units)?,
        Format::Json => write_json(
            out,
            &Report {
                schema: "mrbound/report",
                schema_version: SCHEMA_VERSION,
                command,
                units: units.name(),
                rows,
                max_abs_delta,
            },
        )?,
    }
    Ok(())
}

pub fn spectrum<W: Write>(args: &SpectrumArgs, ctx: &Context, out: W) -> CmdResult {
    let setup = Setup::from_args(&args.potential, ctx)?;
    let rows: Vec<ReportRow> = enumerate_bound_states(&setup.params, &setup.scheme, args.l_max)
        .into_iter()
        .map(|(st, sol)| ReportRow {
            energy_analytic: Some(sol.energy),
            ..setup.row(st)
        })
        .collect();
    emit_report(out, "spectrum", &rows, setup.units, args.format, None)?;
    if rows.is_empty() {
        return Err(CliError::Empty(
            "no bound states for these parameters".into(),
        ));
    }
    Ok(())
}

fn numeric_energy(
    p: &PotentialParams,
    st: QuantumState,
    hint: f64,
    mode: CentrifugalMode,
) -> mrbound::Result<f64> {
    let cfg = auto_config(p, st, hint, mode);
    Ok(solve_eigenvalue(p, st, &cfg)?.energy)
}

pub fn compare<W: Write>(args: &CompareArgs, ctx: &Context, out: W) -> CmdResult {
    let setup = Setup::from_args(&args.potential, ctx)?;
    let states: Vec<QuantumState> = match &args.state {
        Some(labels) => {
            let labels: Vec<&String> = labels.iter().filter(|s| !s.trim().is_empty()).collect();
            if labels.is_empty() {
                return Err(CliError::Usage("--state selects no states".into()));
            }
            labels
                .iter()
                .map(|s| s.trim().parse::<QuantumState>())
                .collect::<Result<_, _>>()?
        }
        None => enumerate_bound_states(&setup.params, &setup.scheme, args.l_max)
            .into_iter()
            .map(|(st, _)| st)
            .collect(),
    };
    let mode = match args.numeric {
        NumericMode::Exact => CentrifugalMode::Exact,
        NumericMode::Approximated => CentrifugalMode::Approximated(setup.scheme),
    };
    let rows: Vec<ReportRow> = states
        .par_iter()
        .map(|&st| {
            let mut row = setup.row(st);
            let analytic = match energy_level(&setup.params, st, &setup.scheme) {
                Ok(sol) => sol.energy,
                Err(e) => {
                    row.error = Some(e.to_string());
                    return row;
                }
            };
            row.energy_analytic = Some(analytic);
            match numeric_energy(&setup.params, st, analytic, mode) {
                Ok(e) => {
                    row.energy_numeric = Some(e);
                    row.delta = Some(analytic - e);
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect();
    let max_abs_delta = rows
        .iter()
        .filter_map(|r| r.delta)
        .map(f64::abs)
        .fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))));
    emit_report(
        out,
        "compare",
        &rows,
        setup.units,
        args.format,
        max_abs_delta,
    )?;
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    eprintln!(
        "compared {} state(s), max |delta| = {}, failed {failed}",
        rows.len(),
        max_abs_delta.map_or("n/a".to_string(), |d| format!("{d:.3e}"))
    );
    if rows.is_empty() {
        return Err(CliError::Empty(
            "no bound states for these parameters".into(),
        ));
    }
    if failed > 0 {
        return Err(CliError::Empty(format!("{failed} row(s) failed")));
    }
    Ok(())
}

/// `α ∈ {0, 1}` with `c1 = c2 = 1` goes through the Hulthén form, which is
/// the same function (`c0` only shifts the energy).
fn wavefunction_for(
    setup: &Setup,
    st: QuantumState,
    grid: &[f64],
) -> mrbound::Result<RadialFunction> {
    let p = &setup.params;
    let s = &setup.scheme;
    let hulthen = setup.units == Units::Au
        && (p.alpha == 0.0 || p.alpha == 1.0)
        && s.c1 == 1.0
        && s.c2 == 1.0;
    if hulthen {
        hulthen_wavefunction(p.coupling / (2.0 * p.range), 1.0 / p.range, st, grid)
    } else {
        radial_wavefunction(p, st, s, grid)
    }
}

pub fn wavefunction<W: Write>(args: &WavefunctionArgs, ctx: &Context, mut out: W) -> CmdResult {
    let setup = Setup::from_args(&args.potential, ctx)?;
    let st: QuantumState = args.state.trim().parse()?;
    let sol = energy_level(&setup.params, st, &setup.scheme)?;
    let grid = match args.grid {
        Some(g) => g.points(),
        None => default_grid(setup.params.range, sol.epsilon_prime, 400),
    };
    let f = wavefunction_for(&setup, st, &grid)?;
    let nodes = f.node_count();
    match args.format {
        Format::Csv => {
            writeln!(out, "# state={} n={} l={}", st.label(), st.n, st.l)?;
            writeln!(
                out,
                "# inv_b={} alpha={} scheme={} units={}",
                setup.inv_b,
                setup.params.alpha,
                setup.scheme.case.name(),
                setup.units.name()
            )?;
            writeln!(
                out,
                "# norm={:e} epsilon_prime={:.10} lambda={:.10} nodes={nodes}",
                f.norm_constant, f.epsilon_prime, f.lambda
            )?;
            let mut w = csv_writer(&mut out);
            w.write_record(["r", "R"])?;
            for &(r, v) in &f.samples {
                w.write_record([format!("{r:.10e}"), format!("{v:.10e}")])?;
            }
            w.flush()?;
        }
        Format::Json => write_json(
            out,
            &WavefunctionDoc {
                schema: "mrbound/wavefunction",
                schema_version: SCHEMA_VERSION,
                state_label: st.label(),
                n: st.n,
                l: st.l,
                inv_b: setup.inv_b,
                alpha: setup.params.alpha,
                scheme: setup.scheme.case.name().to_string(),
                units: setup.units.name(),
                norm_constant: f.norm_constant,
                epsilon_prime: f.epsilon_prime,
                lambda: f.lambda,
                nodes,
                samples: &f.samples,
            },
        )?,
    }
    Ok(())
}

fn cell_value(r: mrbound::Result<f64>) -> (Option<f64>, Option<String>) {
    match r {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    }
}

fn alpha_label(alpha: f64, hulthen_column: bool) -> String {
    if hulthen_column {
        "0,1".to_string()
    } else {
        alpha.to_string()
    }
}

fn atomic_cells() -> Result<Vec<TableCell>, CliError> {
    let case1 = solve_coefficients(Case::Case1, 1.0)?;
    let legacy = solve_coefficients(Case::Legacy, 1.0)?;
    let jobs: Vec<(&str, f64, f64)> = GRID1
        .iter()
        .flat_map(|row| GRID1_ALPHAS.iter().map(move |&a| (row.state, row.inv_b, a)))
        .collect();
    let cells = jobs
        .par_iter()
        .map(|&(label, inv_b, alpha)| {
            let st: QuantumState = label.parse().expect("reference labels are valid");
            let b = 1.0 / inv_b;
            let p =
                PotentialParams::atomic(2.0 * b, alpha, b).expect("reference parameters are valid");
            let present = energy_level(&p, st, &case1).map(|s| s.energy);
            let previous = energy_level(&p, st, &legacy).map(|s| s.energy);
            let numeric = present
                .clone()
                .and_then(|hint| numeric_energy(&p, st, hint, CentrifugalMode::Exact));
            [
                ("present", "closed form, case1", present),
                ("previous", "closed form, legacy", previous),
                ("numerov", "Numerov, exact barrier", numeric),
            ]
            .into_iter()
            .map(|(column, method, e)| {
                let (binding_energy, error) = cell_value(e.map(|e| -e));
                TableCell {
                    state_label: st.label(),
                    n: st.n,
                    l: st.l,
                    inv_b,
                    molecule: None,
                    alpha,
                    alpha_label: alpha_label(alpha, false),
                    column: column.to_string(),
                    method: method.to_string(),
                    binding_energy,
                    error,
                }
            })
            .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    Ok(cells)
}

fn molecular_cells(table: &MolecularTable, ctx: &Context) -> Result<Vec<TableCell>, CliError> {
    let scheme = solve_coefficients(Case::Case1, 1.0)?;
    let mut molecules = Vec::new();
    for name in table.molecules {
        molecules.push(ctx.molecules.get(name)?);
    }
    let cells = table
        .rows
        .par_iter()
        .flat_map_iter(|row| {
            let st: QuantumState = row.state.parse().expect("reference labels are valid");
            let molecules = &molecules;
            let scheme = &scheme;
            molecules.iter().flat_map(move |mol| {
                MOLECULE_ALPHAS.iter().enumerate().map(move |(k, &alpha)| {
                    let hulthen_column = k == 0;
                    let (binding_energy, error) = cell_value(table_energy_ev(
                        mol, st, alpha, row.inv_b, scheme, &ctx.units,
                    ));
                    TableCell {
                        state_label: st.label(),
                        n: st.n,
                        l: st.l,
                        inv_b: row.inv_b,
                        molecule: Some(mol.name.clone()),
                        alpha,
                        alpha_label: alpha_label(alpha, hulthen_column),
                        column: format!("alpha={}", alpha_label(alpha, hulthen_column)),
                        method: if hulthen_column {
                            "Hulthén form, case1"
                        } else {
                            "closed form, case1"
                        }
                        .to_string(),
                        binding_energy,
                        error,
                    }
                })
            })
        })
        .collect();
    Ok(cells)
}

/// Wide CSV: one line per grid row, cells in `columns` order.
fn write_table_csv<W: Write>(
    out: W,
    cells: &[TableCell],
    key_columns: &[&str],
    value_columns: usize,
    value_names: &[String],
    decimals: usize,
) -> CmdResult {
    let mut w = csv_writer(out);
    let mut header: Vec<String> = key_columns.iter().map(|s| s.to_string()).collect();
    header.extend(value_names.iter().cloned());
    w.write_record(&header)?;
    for chunk in cells.chunks(value_columns) {
        let first = &chunk[0];
        let mut rec = vec![
            first.state_label.clone(),
            first.n.to_string(),
            first.l.to_string(),
        ];
        rec.push(first.inv_b.to_string());
        if key_columns.contains(&"molecule") {
            rec.push(first.molecule.clone().unwrap_or_default());
        }
        if key_columns.contains(&"alpha") {
            rec.push(first.alpha_label.clone());
        }
        rec.extend(chunk.iter().map(|c| fixed(c.binding_energy, decimals)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn table<W: Write>(args: &TableArgs, ctx: &Context, out: W) -> CmdResult {
    let (cells, units) = match args.which {
        1 => (atomic_cells()?, Units::Au),
        2 => (molecular_cells(&GRID2, ctx)?, Units::Ev),
        3 => (molecular_cells(&GRID3, ctx)?, Units::Ev),
        other => return Err(CliError::Usage(format!("no table {other}"))),
    };
    match args.format {
        Format::Csv if args.which == 1 => write_table_csv(
            out,
            &cells,
            &["state", "n", "l", "inv_b", "alpha"],
            3,
            &["present".into(), "previous".into(), "numerov".into()],
            units.decimals(),
        )?,
        Format::Csv => write_table_csv(
            out,
            &cells,
            &["state", "n", "l", "inv_b", "molecule"],
            MOLECULE_ALPHAS.len(),
            &["alpha_0_1".into(), "alpha_0.75".into(), "alpha_1.5".into()],
            units.decimals(),
        )?,
        Format::Json => write_json(
            out,
            &TableDoc {
                schema: "mrbound/table",
                schema_version: SCHEMA_VERSION,
                table: args.which,
                units: units.name(),
                cells: &cells,
            },
        )?,
    }
    let failed: Vec<&TableCell> = cells.iter().filter(|c| c.error.is_some()).collect();
    if let Some(first) = failed.first() {
        return Err(CliError::Numeric(format!(
            "{} cell(s) failed; first: {} 1/b={} {}: {}",
            failed.len(),
            first.state_label,
            first.inv_b,
            first.column,
            first.error.as_deref().unwrap_or("")
        )));
    }
    Ok(())
}
