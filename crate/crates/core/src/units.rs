//! Physical constants, the molecule registry and eV conversions.
//!
//! Energies in eV come from running the model with `ħ → ħc` (eV·length) and
//! `μ → μc²` (eV), so `ħ²/2μb²` is directly `(ħc)²/(2μc²b²)`.
//!
//! Both text formats are line-based `key = value` with `#` comments and a
//! mandatory `version = 1` line before any other key.
//!
//! Constants file keys: `hbar_c_ev_angstrom`, `amu_ev`, `length_unit`
//! (`pm`, `angstrom` or `bohr`). Missing keys keep their defaults.
//!
//! Molecule file: every key other than `version` is a molecule name and its
//! value the reduced mass in amu.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::centrifugal::ApproxScheme;
use crate::error::{require_positive, Error, Result};
use crate::potential::PotentialParams;
use crate::spectrum::{energy_level, hulthen_energy, QuantumState};

pub const HARTREE_EV: f64 = 27.211_386_245_988;
pub const BOHR_PM: f64 = 52.917_721_090_3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthUnit {
    Picometer,
    Angstrom,
    Bohr,
}

impl LengthUnit {
    pub fn in_pm(&self) -> f64 {
        match self {
            LengthUnit::Picometer => 1.0,
            LengthUnit::Angstrom => 100.0,
            LengthUnit::Bohr => BOHR_PM,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            LengthUnit::Picometer => "pm",
            LengthUnit::Angstrom => "angstrom",
            LengthUnit::Bohr => "bohr",
        }
    }
}

impl fmt::Display for LengthUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for LengthUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pm" | "picometer" => Ok(LengthUnit::Picometer),
            "a" | "å" | "Å" | "angstrom" => Ok(LengthUnit::Angstrom),
            "bohr" | "a0" => Ok(LengthUnit::Bohr),
            _ => Err(Error::Parse {
                line: 0,
                message: format!("unknown length unit `{s}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    pub hbar_c_ev_angstrom: f64,
    pub amu_ev: f64,
    pub length_unit: LengthUnit,
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self {
            hbar_c_ev_angstrom: 1973.29,
            amu_ev: 9.31494e8,
            length_unit: LengthUnit::Picometer,
        }
    }
}

impl UnitSystem {
    pub fn validate(&self) -> Result<()> {
        require_positive("hbar_c_ev_angstrom", self.hbar_c_ev_angstrom)?;
        require_positive("amu_ev", self.amu_ev)?;
        Ok(())
    }

    /// `ħc` in eV times the active length unit.
    pub fn hbar_c(&self) -> f64 {
        self.hbar_c_ev_angstrom * LengthUnit::Angstrom.in_pm() / self.length_unit.in_pm()
    }

    /// Reads a constants file on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut u = Self::default();
        for (line, key, value) in versioned_pairs(text)? {
            match key {
                "hbar_c_ev_angstrom" => u.hbar_c_ev_angstrom = parse_number(line, value)?,
                "amu_ev" => u.amu_ev = parse_number(line, value)?,
                "length_unit" => {
                    u.length_unit = value.parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("unknown length unit `{value}`"),
                    })?
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown key `{other}`"),
                    })
                }
            }
        }
        u.validate().map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })?;
        Ok(u)
    }
}

fn parse_number(line: usize, value: &str) -> Result<f64> {
    value.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("`{value}` is not a number"),
    })
}

/// `(line, key, value)` triples after the `version = 1` header.
fn versioned_pairs(text: &str) -> Result<Vec<(usize, &str, &str)>> {
    let mut out = Vec::new();
    let mut version_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Parse {
            line,
            message: "expected `key = value`".into(),
        })?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty key or value".into(),
            });
        }
        if !version_seen {
            if key != "version" {
                return Err(Error::Parse {
                    line,
                    message: "first entry must be `version = 1`".into(),
                });
            }
            if value != "1" {
                return Err(Error::Parse {
                    line,
                    message: format!("unsupported version `{value}`"),
                });
            }
            version_seen = true;
            continue;
        }
        out.push((line, key, value));
    }
    if !version_seen {
        return Err(Error::Parse {
            line: 0,
            message: "missing `version = 1`".into(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Molecule {
    pub name: String,
    pub reduced_mass_amu: f64,
}

impl Molecule {
    pub fn new(name: impl Into<String>, reduced_mass_amu: f64) -> Result<Self> {
        require_positive("reduced_mass_amu", reduced_mass_amu)?;
        Ok(Self {
            name: name.into(),
            reduced_mass_amu,
        })
    }

    /// `μc²` in eV.
    pub fn rest_energy_ev(&self, u: &UnitSystem) -> f64 {
        self.reduced_mass_amu * u.amu_ev
    }
}

/// Named molecules; lookups ignore ASCII case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoleculeRegistry {
    molecules: Vec<Molecule>,
}

const BUILTIN: &str = include_str!("../data/molecules.v1.txt");

impl Default for MoleculeRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl MoleculeRegistry {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled molecule file is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut reg = Self {
            molecules: Vec::new(),
        };
        for (line, key, value) in versioned_pairs(text)? {
            let mass = parse_number(line, value)?;
            let m = Molecule::new(key, mass).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if reg.find(key).is_some() {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate molecule `{key}`"),
                });
            }
            reg.molecules.push(m);
        }
        Ok(reg)
    }

    /// Entries from `text` replace or extend this registry.
    pub fn merged_with(&self, text: &str) -> Result<Self> {
        let extra = Self::parse(text)?;
        let mut out = self.clone();
        for m in extra.molecules {
            match out
                .molecules
                .iter_mut()
                .find(|x| x.name.eq_ignore_ascii_case(&m.name))
            {
                Some(slot) => *slot = m,
                None => out.molecules.push(m),
            }
        }
        Ok(out)
    }

    fn find(&self, name: &str) -> Option<&Molecule> {
        self.molecules
            .iter()
            .find(|m| m.name.eq_ignore_ascii_case(name))
    }

    pub fn get(&self, name: &str) -> Result<&Molecule> {
        self.find(name)
            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Molecule> {
        self.molecules.iter()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("version = 1\n");
        for m in &self.molecules {
            s.push_str(&format!("{} = {}\n", m.name, m.reduced_mass_amu));
        }
        s
    }
}

/// `ħ²/(2μb²)` in eV, with `b` in the active length unit.
pub fn energy_scale_ev(mol: &Molecule, b: f64, u: &UnitSystem) -> Result<f64> {
    require_positive("b", b)?;
    u.validate()?;
    let hc = u.hbar_c();
    Ok(hc * hc / (2.0 * mol.rest_energy_ev(u) * b * b))
}

/// Model parameters whose energies come out in eV.
pub fn molecule_params(
    mol: &Molecule,
    coupling: f64,
    alpha: f64,
    b: f64,
    u: &UnitSystem,
) -> Result<PotentialParams> {
    u.validate()?;
    PotentialParams::new(coupling, alpha, b, mol.rest_energy_ev(u), u.hbar_c())
}

/// Binding energy `-E` in eV for the `A = 2b` convention, `b = 1/inv_b`.
///
/// `α ∈ {0, 1}` goes through the Hulthén form.
pub fn table_energy_ev(
    mol: &Molecule,
    st: QuantumState,
    alpha: f64,
    inv_b: f64,
    scheme: &ApproxScheme,
    u: &UnitSystem,
) -> Result<f64> {
    require_positive("inv_b", inv_b)?;
    let b = 1.0 / inv_b;
    let p = molecule_params(mol, 2.0 * b, alpha, b, u)?;
    let e = if alpha == 0.0 || alpha == 1.0 {
        hulthen_energy(&p, st, scheme)?
    } else {
        energy_level(&p, st, scheme)?.energy
    };
    Ok(-e)
}

pub fn au_to_ev(e: f64) -> f64 {
    e * HARTREE_EV
}

pub fn ev_to_au(e: f64) -> f64 {
    e / HARTREE_EV
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrifugal::{solve_coefficients, Case};
    use proptest::prelude::*;

    fn hcl() -> Molecule {
        MoleculeRegistry::builtin().get("HCl").unwrap().clone()
    }

    #[test]
    fn builtin_registry() {
        let reg = MoleculeRegistry::builtin();
        let names: Vec<&str> = reg.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["HCl", "CH", "LiH", "CO"]);
        assert_eq!(reg.get("hcl").unwrap().reduced_mass_amu, 0.9801045);
        assert_eq!(reg.get("CH").unwrap().reduced_mass_amu, 0.929931);
        assert_eq!(reg.get("LiH").unwrap().reduced_mass_amu, 0.8801221);
        assert_eq!(reg.get("CO").unwrap().reduced_mass_amu, 6.8606719);
        assert_eq!(reg.get("NO"), Err(Error::UnknownMolecule("NO".into())));
        assert_eq!(MoleculeRegistry::parse(&reg.to_text()).unwrap(), reg);
    }

    #[test]
    fn registry_parsing() {
        let reg =
            MoleculeRegistry::parse("# c\nversion = 1\nNO = 7.468 # nitric oxide\n\n").unwrap();
        assert_eq!(reg.get("no").unwrap().reduced_mass_amu, 7.468);
        for bad in [
            "NO = 7.4",
            "version = 2\nNO = 7.4",
            "version = 1\nNO = x",
            "version = 1\nNO = -1",
            "version = 1\nNO",
            "version = 1\nNO = 1\nno = 2",
            "",
        ] {
            assert!(
                matches!(MoleculeRegistry::parse(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
        let merged = MoleculeRegistry::builtin()
            .merged_with("version = 1\nCO = 7.0\nNO = 7.468")
            .unwrap();
        assert_eq!(merged.get("CO").unwrap().reduced_mass_amu, 7.0);
        assert_eq!(merged.iter().count(), 5);
    }

    #[test]
    fn constants_parsing() {
        let u =
            UnitSystem::parse("version = 1\namu_ev = 9.31502e8\nlength_unit = angstrom").unwrap();
        assert_eq!(u.amu_ev, 9.31502e8);
        assert_eq!(u.hbar_c_ev_angstrom, 1973.29);
        assert_eq!(u.length_unit, LengthUnit::Angstrom);
        assert!(UnitSystem::parse("version = 1\nspeed = 3").is_err());
        assert!(UnitSystem::parse("version = 1\namu_ev = 0").is_err());
        assert!(UnitSystem::parse("amu_ev = 1").is_err());
        assert_eq!(
            UnitSystem::parse("version = 1").unwrap(),
            UnitSystem::default()
        );
    }

    #[test]
    fn energy_scale() {
        let u = UnitSystem::default();
        let s = energy_scale_ev(&hcl(), 40.0, &u).unwrap();
        let want = 197_329.0f64.powi(2) / (2.0 * 0.9801045 * 9.31494e8 * 1600.0);
        assert!((s - want).abs() < 1e-15 * want);
        assert!((s - 1.3328e-2).abs() < 1e-6);
        let s2 = energy_scale_ev(&hcl(), 80.0, &u).unwrap();
        assert!((s / s2 - 4.0).abs() < 1e-14);
        let co = MoleculeRegistry::builtin().get("CO").unwrap().clone();
        let r = energy_scale_ev(&co, 40.0, &u).unwrap() / s;
        assert!((r - 0.9801045 / 6.8606719).abs() < 1e-14);
        assert!(energy_scale_ev(&hcl(), 0.0, &u).is_err());
    }

    #[test]
    fn length_units_agree() {
        let pm = UnitSystem::default();
        let ang = UnitSystem {
            length_unit: LengthUnit::Angstrom,
            ..pm
        };
        let bohr = UnitSystem {
            length_unit: LengthUnit::Bohr,
            ..pm
        };
        let m = hcl();
        let a = energy_scale_ev(&m, 40.0, &pm).unwrap();
        let b = energy_scale_ev(&m, 0.4, &ang).unwrap();
        let c = energy_scale_ev(&m, 40.0 / BOHR_PM, &bohr).unwrap();
        assert!((a / b - 1.0).abs() < 1e-14);
        assert!((a / c - 1.0).abs() < 1e-14);
        assert_eq!("Å".parse::<LengthUnit>().unwrap(), LengthUnit::Angstrom);
    }

    #[test]
    fn reference_cells() {
        let reg = MoleculeRegistry::builtin();
        let u = UnitSystem::default();
        let s = solve_coefficients(Case::Case1, 1.0).unwrap();
        let st = QuantumState::new(0, 1);
        for (name, alpha, want) in [
            ("HCl", 0.75, 5.14067096),
            ("CO", 0.75, 0.73438794),
            ("LiH", 0.0, 5.35576397),
            ("LiH", 1.0, 5.35576397),
        ] {
            let e = table_energy_ev(reg.get(name).unwrap(), st, alpha, 0.025, &s, &u).unwrap();
            assert!((e / want - 1.0).abs() < 5e-4, "{name} {alpha}: {e}");
        }
        let e = table_energy_ev(&hcl(), st, 0.0, 0.025, &s, &u).unwrap();
        assert!((e / 4.80941188 - 1.0).abs() < 5e-4);
    }

    #[test]
    fn hulthen_columns_use_the_same_numbers() {
        let u = UnitSystem::default();
        let s = solve_coefficients(Case::Case1, 1.0).unwrap();
        for (n, l) in [(0, 1), (1, 2), (0, 4)] {
            let st = QuantumState::new(n, l);
            let h = table_energy_ev(&hcl(), st, 0.0, 0.05, &s, &u).unwrap();
            let p = molecule_params(&hcl(), 40.0, 0.0, 20.0, &u).unwrap();
            let g = -energy_level(&p, st, &s).unwrap().energy;
            assert!((h - g).abs() < 1e-14 * h);
        }
    }

    proptest! {
        #[test]
        fn au_ev_round_trip(e in -1e3f64..1e3) {
            prop_assert!((ev_to_au(au_to_ev(e)) - e).abs() <= 1e-12 * e.abs().max(1e-300));
        }

        #[test]
        fn atomic_and_ev_modes_agree(alpha in 0.55f64..2.0, inv_b in 0.02f64..0.05) {
            // a particle of one electron mass in bohr: eV mode equals a.u. times a hartree
            let electron_amu = 1.0 / 1_822.888_486_209;
            let u = UnitSystem { length_unit: LengthUnit::Bohr, ..UnitSystem::default() };
            let m = Molecule::new("e", electron_amu).unwrap();
            let s = solve_coefficients(Case::Case1, 1.0).unwrap();
            let st = QuantumState::new(0, 1);
            let ev = table_energy_ev(&m, st, alpha, inv_b, &s, &u).unwrap();
            let b = 1.0 / inv_b;
            let au = -energy_level(&PotentialParams::atomic(2.0 * b, alpha, b).unwrap(), st, &s).unwrap().energy;
            // ħc and the amu constant are rounded, so the hartree is reproduced to ~1e-5
            prop_assert!((ev / au_to_ev(au) - 1.0).abs() < 5e-5);
        }
    }
}
