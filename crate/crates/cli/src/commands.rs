//! The six subcommands. Each resolves its parameters from flags, the
//! optional config file and built-in defaults (in that precedence), runs
//! the sweep and returns a [`Table`].

use crate::config::{parse_f64_list, uniform_grid, Config};
use crate::table::{Cell, Table};
use crate::{CliError, CommonArgs};
use clap::ValueEnum;
use mqwidth_core::exactspin::{
    coherence_decompose, evolve, phase_cycle_signal, total_sz, ProtocolSpec, SpinSystem,
};
use mqwidth_core::numerics::fit_line;
use mqwidth_core::phenomodel::{
    b2_default_ms2, cluster_size, decoherence_rate_sq, solve_effective_order, steady_state_size,
    ModelParams, A0_ADAMANTANE, A2_ADAMANTANE_MS2, A2_RATE_LINE_MS2, K_RATE_LINE, MS2_TO_US2,
};
use std::path::PathBuf;

const DEFAULT_P_LIST: &str = "0.05,0.1,0.2,0.3,0.5";

/// Cluster size versus pumping time.
#[derive(Debug, clap::Args)]
pub struct Fig2Args {
    /// Growth rate a0, 1/us
    #[arg(long)]
    pub a0: Option<f64>,
    /// Perturbation strength p (scales the growth rate)
    #[arg(long)]
    pub p: Option<f64>,
    /// Largest pumping time, us
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Pumping-time grid step, us
    #[arg(long)]
    pub t_step: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_fig2(args: &Fig2Args) -> Result<Table, CliError> {
    let cfg = Config::load(args.common.config.as_deref())?;
    let a0 = cfg.resolve_f64(args.a0, "a0", "1/us", A0_ADAMANTANE)?;
    let p = cfg.resolve_f64(args.p, "p", "dimensionless", 0.0)?;
    let t_max = cfg.resolve_f64(args.t_max, "t_max", "us", 960.0)?;
    let t_step = cfg.resolve_f64(args.t_step, "t_step", "us", 60.0)?;
    let params = ModelParams::new(a0, 0.0, 0.0, p, 2.0)?;
    let a_p = params.growth_exponent();

    let mut table = Table::new(&["T_us", "K", "log10_K"]);
    for t in uniform_grid(t_max, t_step, "pumping-time grid")? {
        let k = cluster_size(a_p, t)?;
        table.push(vec![Cell::Float(t), Cell::Float(k), Cell::Float(k.log10())]);
    }
    Ok(table)
}

/// Squared decoherence rate versus coherence order.
#[derive(Debug, clap::Args)]
pub struct Fig3Args {
    /// Order-dependent decay constant A^2, (1/ms)^2
    #[arg(long)]
    pub a2_ms2: Option<f64>,
    /// Cluster-size decay constant b^2, (1/ms)^2; default derived from
    /// the rate-line intercept with K = 650
    #[arg(long)]
    pub b2_ms2: Option<f64>,
    /// Cluster size K at the probed pumping time
    #[arg(long)]
    pub k: Option<f64>,
    /// Largest coherence order
    #[arg(long)]
    pub m_max: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_fig3(args: &Fig3Args) -> Result<Table, CliError> {
    let cfg = Config::load(args.common.config.as_deref())?;
    let a2_ms2 = cfg.resolve_f64(args.a2_ms2, "a2_ms2", "(1/ms)^2", A2_RATE_LINE_MS2)?;
    let b2_ms2 = cfg.resolve_f64(args.b2_ms2, "b2_ms2", "(1/ms)^2", b2_default_ms2())?;
    let k = cfg.resolve_f64(args.k, "k", "spins", K_RATE_LINE)?;
    let m_max = cfg.resolve_usize(args.m_max, "m_max", 30)?;
    if !(k >= 1.0) {
        return Err(CliError::Validation(format!(
            "cluster size K must be >= 1, got {k}"
        )));
    }
    let params = ModelParams::from_reference_units(A0_ADAMANTANE, a2_ms2, b2_ms2, 0.0, 2.0)?;

    let mut table = Table::new(&["M", "rate_sq_per_ms2"]);
    for m in 0..=m_max as i64 {
        let rate_ms2 = decoherence_rate_sq(m, k, &params) / MS2_TO_US2;
        table.push(vec![Cell::Int(m), Cell::Float(rate_ms2)]);
    }
    Ok(table)
}

/// Effective cluster size trajectories (long format over lambda, p, y).
#[derive(Debug, clap::Args)]
pub struct Fig4Args {
    /// Growth rate a0, 1/us
    #[arg(long)]
    pub a0: Option<f64>,
    /// Order-dependent decay constant A^2, (1/ms)^2
    #[arg(long)]
    pub a2_ms2: Option<f64>,
    /// Comma-separated perturbation strengths
    #[arg(long)]
    pub p_list: Option<String>,
    /// Largest reduced time y = a_p T
    #[arg(long)]
    pub y_max: Option<f64>,
    /// Reduced-time grid step
    #[arg(long)]
    pub y_step: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_fig4(args: &Fig4Args) -> Result<Table, CliError> {
    let cfg = Config::load(args.common.config.as_deref())?;
    let a0 = cfg.resolve_f64(args.a0, "a0", "1/us", A0_ADAMANTANE)?;
    let a2_ms2 = cfg.resolve_f64(args.a2_ms2, "a2_ms2", "(1/ms)^2", A2_ADAMANTANE_MS2)?;
    let p_text = cfg.resolve_str(args.p_list.as_deref(), "p_list", DEFAULT_P_LIST);
    let p_list = parse_f64_list(&p_text, "p list")?;
    let y_max = cfg.resolve_f64(args.y_max, "y_max", "dimensionless", 30.0)?;
    let y_step = cfg.resolve_f64(args.y_step, "y_step", "dimensionless", 0.5)?;
    let y_grid: Vec<f64> = uniform_grid(y_max, y_step, "y grid")?
        .into_iter()
        .filter(|&y| y > 0.0)
        .collect();
    if y_grid.is_empty() {
        return Err(CliError::Validation(
            "y grid contains no positive points".to_string(),
        ));
    }

    // abscissa is the reduced time y, i.e. T in units of 1/a_p; solver
    // failures are flagged per row and the sweep continues
    let mut table = Table::new(&["lambda", "p", "y", "K_eff", "status"]);
    for lambda in [2.0, 1.0] {
        for &p in &p_list {
            let params = ModelParams::from_reference_units(a0, a2_ms2, 0.0, p, lambda)?;
            let r = params.order_decay_ratio();
            for &y in &y_grid {
                match solve_effective_order(y, r, lambda) {
                    Ok(me) => table.push(vec![
                        Cell::Float(lambda),
                        Cell::Float(p),
                        Cell::Float(y),
                        Cell::Float(me * me),
                        Cell::Text("ok".to_string()),
                    ]),
                    Err(_) => table.push(vec![
                        Cell::Float(lambda),
                        Cell::Float(p),
                        Cell::Float(y),
                        Cell::Empty,
                        Cell::Text("solve_failed".to_string()),
                    ]),
                }
            }
        }
    }
    Ok(table)
}

/// Stabilized cluster size versus perturbation strength.
#[derive(Debug, clap::Args)]
pub struct Fig5Args {
    /// Growth rate a0, 1/us
    #[arg(long)]
    pub a0: Option<f64>,
    /// Order-dependent decay constant A^2, (1/ms)^2
    #[arg(long)]
    pub a2_ms2: Option<f64>,
    /// Comma-separated perturbation strengths
    #[arg(long)]
    pub p_list: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_fig5(args: &Fig5Args) -> Result<Table, CliError> {
    let cfg = Config::load(args.common.config.as_deref())?;
    let a0 = cfg.resolve_f64(args.a0, "a0", "1/us", A0_ADAMANTANE)?;
    let a2_ms2 = cfg.resolve_f64(args.a2_ms2, "a2_ms2", "(1/ms)^2", A2_ADAMANTANE_MS2)?;
    let p_text = cfg.resolve_str(args.p_list.as_deref(), "p_list", DEFAULT_P_LIST);
    let p_list = parse_f64_list(&p_text, "p list")?;

    let mut table = Table::new(&[
        "p",
        "K_eff_at_y10_gauss",
        "K_eff_at_y10_exp",
        "K_eff_at_y30",
        "K_st_law",
    ]);
    for &p in &p_list {
        let params = ModelParams::from_reference_units(a0, a2_ms2, 0.0, p, 2.0)?;
        let r = params.order_decay_ratio();
        let solve = |y: f64, lambda: f64| -> Result<f64, CliError> {
            let me = solve_effective_order(y, r, lambda)?;
            Ok(me * me)
        };
        let k_st = steady_state_size(&params)?;
        table.push(vec![
            Cell::Float(p),
            Cell::Float(solve(10.0, 2.0)?),
            Cell::Float(solve(10.0, 1.0)?),
            Cell::Float(solve(30.0, 2.0)?),
            Cell::Float(k_st),
        ]);
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Topology {
    AllToAll,
    Chain,
    File,
}

/// Exact coherence spectra for a small cluster under the phase-cycled
/// protocol with ideal reversal.
#[derive(Debug, clap::Args)]
pub struct ExactArgs {
    /// Number of spins (2..=12)
    #[arg(long)]
    pub n: Option<usize>,
    /// Coupling topology
    #[arg(long, value_enum)]
    pub topology: Option<Topology>,
    /// Uniform coupling strength b, 1/us (all-to-all and chain)
    #[arg(long)]
    pub b: Option<f64>,
    /// Coupling table file, lines "i j b_ij" (topology = file)
    #[arg(long)]
    pub couplings: Option<PathBuf>,
    /// Perturbation strength p
    #[arg(long)]
    pub p: Option<f64>,
    /// Largest preparation time, us
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Preparation-time grid step, us
    #[arg(long)]
    pub t_step: Option<f64>,
    /// Add a column with the difference between the phase-cycle and
    /// block-decomposition extractions
    #[arg(long)]
    pub compare: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_exact(args: &ExactArgs) -> Result<Table, CliError> {
    let cfg = Config::load(args.common.config.as_deref())?;
    let n = cfg.resolve_usize(args.n, "n", 6)?;
    let b = cfg.resolve_f64(args.b, "b", "1/us", 1.0)?;
    let p = cfg.resolve_f64(args.p, "p", "dimensionless", 0.0)?;
    let t_max = cfg.resolve_f64(args.t_max, "t_max", "us", 2.0)?;
    let t_step = cfg.resolve_f64(args.t_step, "t_step", "us", 0.2)?;
    let topology_cfg = cfg.resolve_str(None, "topology", "all-to-all");
    let topology = match args.topology {
        Some(t) => t,
        None => match topology_cfg.as_str() {
            "all-to-all" => Topology::AllToAll,
            "chain" => Topology::Chain,
            "file" => Topology::File,
            other => {
                return Err(CliError::Validation(format!(
                    "config key 'topology': expected all-to-all, chain or file, got {other}"
                )))
            }
        },
    };

    let system = match topology {
        Topology::AllToAll => SpinSystem::all_to_all(n, b)?,
        Topology::Chain => SpinSystem::chain(n, b)?,
        Topology::File => {
            let path = args
                .couplings
                .clone()
                .or_else(|| cfg.get_str("couplings").map(PathBuf::from))
                .ok_or_else(|| {
                    CliError::Validation(
                        "topology 'file' requires --couplings <path>".to_string(),
                    )
                })?;
            SpinSystem::from_coupling_file(n, &path)?
        }
    };

    let mut columns = vec!["t_us", "M", "g_M", "second_moment_K"];
    if args.compare {
        columns.push("block_delta");
    }
    let mut table = Table::new(&columns);
    let phase_count = ProtocolSpec::default_phase_count(n);
    for t in uniform_grid(t_max, t_step, "preparation-time grid")? {
        let spec = ProtocolSpec::new(p, t, t, phase_count)?;
        let g = phase_cycle_signal(&spec, &system)?;
        let k = g.second_moment();
        let block = if args.compare {
            let heff = mqwidth_core::exactspin::build_effective(&system, p)?;
            let rho = evolve(&total_sz(&system), &heff, t)?;
            Some(coherence_decompose(&rho, &system))
        } else {
            None
        };
        for m in g.orders() {
            let mut row = vec![
                Cell::Float(t),
                Cell::Int(m as i64),
                Cell::Float(g.intensity(m)),
                Cell::Float(k),
            ];
            if let Some(ref blk) = block {
                row.push(Cell::Float((g.intensity(m) - blk.intensity(m)).abs()));
            }
            table.push(row);
        }
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitMode {
    /// Fit ln K against T: the slope recovers the growth rate
    Growth,
    /// Fit ln K against ln p: the slope is the power-law exponent
    Power,
}

/// Least-squares fits of generated or external CSV tables.
#[derive(Debug, clap::Args)]
pub struct FitArgs {
    /// Fit family
    #[arg(long, value_enum)]
    pub mode: FitMode,
    /// Input CSV with a header row
    #[arg(long)]
    pub input: PathBuf,
    /// Abscissa column (default: T_us for growth, p for power)
    #[arg(long)]
    pub x_col: Option<String>,
    /// Ordinate column (default: K for growth, K_st_law for power)
    #[arg(long)]
    pub y_col: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn cmd_fit(args: &FitArgs) -> Result<Table, CliError> {
    let (x_default, y_default) = match args.mode {
        FitMode::Growth => ("T_us", "K"),
        FitMode::Power => ("p", "K_st_law"),
    };
    let x_col = args.x_col.as_deref().unwrap_or(x_default);
    let y_col = args.y_col.as_deref().unwrap_or(y_default);
    let text = std::fs::read_to_string(&args.input).map_err(|e| {
        CliError::Validation(format!("cannot read input {}: {e}", args.input.display()))
    })?;
    let points = read_csv_columns(&text, x_col, y_col)?;

    let transformed: Vec<(f64, f64)> = points
        .iter()
        .map(|&(line, x, y)| {
            if !(y > 0.0) {
                return Err(CliError::Validation(format!(
                    "line {line}: {y_col} = {y} is not positive, cannot take its logarithm"
                )));
            }
            Ok(match args.mode {
                FitMode::Growth => (x, y.ln()),
                FitMode::Power => {
                    if !(x > 0.0) {
                        return Err(CliError::Validation(format!(
                            "line {line}: {x_col} = {x} is not positive, cannot take its logarithm"
                        )));
                    }
                    (x.ln(), y.ln())
                }
            })
        })
        .collect::<Result<_, _>>()?;

    let fit =
        fit_line(&transformed).map_err(|e| CliError::Numerical(format!("fit failed: {e}")))?;
    let mut table = Table::new(&["slope", "intercept", "r_squared"]);
    table.push(vec![
        Cell::Float(fit.slope),
        Cell::Float(fit.intercept),
        Cell::Float(fit.r_squared),
    ]);
    Ok(table)
}

/// Extract two named columns from CSV text; returns (1-based data line
/// number, x, y) triples. Parse failures name the offending line.
fn read_csv_columns(text: &str, x_col: &str, y_col: &str) -> Result<Vec<(usize, f64, f64)>, CliError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| CliError::Validation("input table is empty".to_string()))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let find = |name: &str| {
        columns.iter().position(|c| *c == name).ok_or_else(|| {
            CliError::Validation(format!(
                "input has no column {name:?}; header is {header:?}"
            ))
        })
    };
    let xi = find(x_col)?;
    let yi = find(y_col)?;

    let mut out = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != columns.len() {
            return Err(CliError::Validation(format!(
                "line {}: expected {} fields, got {}",
                idx + 1,
                columns.len(),
                fields.len()
            )));
        }
        let parse = |i: usize, name: &str| {
            fields[i].trim().parse::<f64>().map_err(|_| {
                CliError::Validation(format!(
                    "line {}: column {name:?} is not a number: {:?}",
                    idx + 1,
                    fields[i]
                ))
            })
        };
        out.push((idx + 1, parse(xi, x_col)?, parse(yi, y_col)?));
    }
    if out.is_empty() {
        return Err(CliError::Validation("input table has no data rows".to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_column_reader_reports_line_numbers() {
        let err = read_csv_columns("T_us,K\n0,1\n60,oops\n", "T_us", "K").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = read_csv_columns("T_us,K\n0\n", "T_us", "K").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = read_csv_columns("a,b\n1,2\n", "T_us", "K").unwrap_err();
        assert!(err.to_string().contains("no column"), "{err}");
    }

    #[test]
    fn csv_column_reader_extracts_named_columns() {
        let rows = read_csv_columns("a,b,c\n1,2,3\n4,5,6\n", "c", "a").unwrap();
        assert_eq!(rows, vec![(2, 3.0, 1.0), (3, 6.0, 4.0)]);
    }
}
