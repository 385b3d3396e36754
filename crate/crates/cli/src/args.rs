use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mrbound::Case;

#[derive(Debug, Parser)]
#[command(
    name = "mrbound",
    version,
    about = "Bound states of the Manning–Rosen potential",
    after_help = "Exit codes: 0 success, 1 no bound state or failed rows, 2 usage error, 3 numeric failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Override physical constants (key = value file with `version = 1`).
    #[arg(long, global = true, value_name = "PATH")]
    pub constants_file: Option<PathBuf>,

    /// Add or replace molecules (key = value file with `version = 1`).
    #[arg(long, global = true, value_name = "PATH")]
    pub molecules_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regenerate one of the reference grids.
    Table(TableArgs),
    /// List all bound states up to `--l-max`.
    Spectrum(SpectrumArgs),
    /// Closed-form energies next to the Numerov eigenvalues.
    Compare(CompareArgs),
    /// Sample a normalized radial wavefunction.
    Wavefunction(WavefunctionArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    /// Atomic units, `ħ = μ = 1`, lengths in bohr.
    Au,
    /// eV for a molecule from the registry, lengths in the constants' unit.
    Ev,
}

impl Units {
    pub fn name(self) -> &'static str {
        match self {
            Units::Au => "au",
            Units::Ev => "eV",
        }
    }

    pub fn decimals(self) -> usize {
        match self {
            Units::Au => 7,
            Units::Ev => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NumericMode {
    /// Exact `l(l+1)/r²` barrier.
    Exact,
    /// The same approximated barrier as the closed form.
    Approximated,
}

/// Coupling `A`: a number, or `2b` for twice the numeric range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    Value(f64),
    TwiceRange,
}

impl Coupling {
    pub fn resolve(self, range: f64) -> f64 {
        match self {
            Coupling::Value(a) => a,
            Coupling::TwiceRange => 2.0 * range,
        }
    }
}

impl FromStr for Coupling {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("2b") {
            return Ok(Coupling::TwiceRange);
        }
        match s.trim().parse::<f64>() {
            Ok(a) if a.is_finite() => Ok(Coupling::Value(a)),
            _ => Err(format!("expected a number or `2b`, got `{s}`")),
        }
    }
}

/// `min:max:count` sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    /// Evenly spaced points; a single point sits at `min`.
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.max
                } else {
                    self.min + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, count] = parts[..] else {
            return Err(format!("expected min:max:count, got `{s}`"));
        };
        let min: f64 = min
            .parse()
            .map_err(|_| format!("bad grid minimum `{min}`"))?;
        let max: f64 = max
            .parse()
            .map_err(|_| format!("bad grid maximum `{max}`"))?;
        let count: usize = count
            .parse()
            .map_err(|_| format!("bad grid count `{count}`"))?;
        if !(min > 0.0 && min.is_finite() && max.is_finite()) {
            return Err("grid bounds must be finite with min > 0".into());
        }
        if count == 0 {
            return Err("grid count must be at least 1".into());
        }
        if count > 1 && max <= min {
            return Err("grid max must exceed min".into());
        }
        Ok(GridSpec { min, max, count })
    }
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    /// Shape parameter α.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,

    /// Inverse screening length 1/b.
    #[arg(long = "inv-b")]
    pub inv_b: f64,

    /// Coupling A, or `2b`.
    #[arg(long = "A", default_value = "2b", value_name = "A")]
    pub coupling: Coupling,

    /// Centrifugal approximation: case1, case2, case3 or legacy.
    #[arg(long, default_value = "case1", value_parser = Case::from_str)]
    pub scheme: Case,

    #[arg(long, value_enum, default_value_t = Units::Au)]
    pub units: Units,

    /// Registry name, required with `--units ev`.
    #[arg(long)]
    pub molecule: Option<String>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// 1: atomic units; 2: HCl and CH; 3: LiH and CO.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub which: u8,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,

    #[arg(long = "l-max", default_value_t = 4)]
    pub l_max: u32,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,

    #[arg(long = "l-max", default_value_t = 4)]
    pub l_max: u32,

    /// Barrier used by the Numerov solver.
    #[arg(long, value_enum, default_value_t = NumericMode::Approximated)]
    pub numeric: NumericMode,

    /// Restrict to these states (e.g. `2p,3d`); default is every bound state.
    #[arg(long, value_delimiter = ',')]
    pub state: Option<Vec<String>>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,

    /// State label such as `2p` or `6g`.
    #[arg(long)]
    pub state: String,

    /// Sampling radii `min:max:count`; default is a log grid over the bound region.
    #[arg(long)]
    pub grid: Option<GridSpec>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn coupling_values() {
        assert_eq!("2b".parse::<Coupling>(), Ok(Coupling::TwiceRange));
        assert_eq!("2B".parse::<Coupling>(), Ok(Coupling::TwiceRange));
        assert_eq!("80".parse::<Coupling>(), Ok(Coupling::Value(80.0)));
        assert!("b2".parse::<Coupling>().is_err());
        assert!("inf".parse::<Coupling>().is_err());
        assert_eq!(Coupling::TwiceRange.resolve(40.0), 80.0);
    }

    #[test]
    fn grids() {
        let g: GridSpec = "1:3:5".parse().unwrap();
        assert_eq!(g.points(), vec![1.0, 1.5, 2.0, 2.5, 3.0]);
        let one: GridSpec = "0.5:0.5:1".parse().unwrap();
        assert_eq!(one.points(), vec![0.5]);
        for bad in ["1:2", "0:1:3", "2:1:3", "1:2:0", "a:2:3", "1:2:3:4"] {
            assert!(bad.parse::<GridSpec>().is_err(), "{bad}");
        }
    }
}
