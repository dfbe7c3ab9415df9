//! Flat `key = value` run configuration and state files.

use std::path::{Path, PathBuf};

use super::grid::ZsGrid;
use super::presets::{preset, PRESET_NAMES};
use super::search::Objective;
use crate::algebra::parse_complex;
use crate::channel::QuditState;
use crate::error::{Error, Result};
use crate::overlap::{BeamGeometry, QuadratureSpec};

/// Settings shared by the sweep commands. Every field has a default, so a
/// config file only lists what it changes.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub m: i32,
    /// Preset name or path to a state file.
    pub state: String,
    /// Dimension of the uniform states in probability maps.
    pub d: usize,
    pub zs: ZsGrid,
    pub l_min: i32,
    pub l_max: i32,
    pub geometry: BeamGeometry,
    pub quadrature: QuadratureSpec,
    pub objective: Objective,
    pub out: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            m: -1,
            state: "d3-uniform-base4".into(),
            d: 3,
            zs: ZsGrid::default(),
            l_min: 1,
            l_max: 10,
            geometry: BeamGeometry::default(),
            quadrature: QuadratureSpec::default(),
            objective: Objective::Fidelity,
            out: None,
        }
    }
}

pub const CONFIG_KEYS: [&str; 15] = [
    "m",
    "state",
    "d",
    "zs_min",
    "zs_max",
    "steps",
    "l_min",
    "l_max",
    "w0",
    "z_r",
    "radial_points",
    "radial_cutoff",
    "refinement_tol",
    "objective",
    "out",
];

fn parse_value<T: std::str::FromStr>(key: &str, value: &str, line: usize) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: invalid value '{value}' for '{key}'")))
}

impl SweepConfig {
    /// Apply `key = value` lines on top of the defaults. Blank lines and
    /// `#` comments are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        let (mut w0, mut z_r) = (cfg.geometry.w0(), cfg.geometry.z_r());
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("line {n}: expected 'key = value'")))?;
            match key {
                "m" => cfg.m = parse_value(key, value, n)?,
                "state" => cfg.state = value.to_string(),
                "d" => cfg.d = parse_value(key, value, n)?,
                "zs_min" => cfg.zs.min = parse_value(key, value, n)?,
                "zs_max" => cfg.zs.max = parse_value(key, value, n)?,
                "steps" => cfg.zs.steps = parse_value(key, value, n)?,
                "l_min" => cfg.l_min = parse_value(key, value, n)?,
                "l_max" => cfg.l_max = parse_value(key, value, n)?,
                "w0" => w0 = parse_value(key, value, n)?,
                "z_r" => z_r = parse_value(key, value, n)?,
                "radial_points" => cfg.quadrature.radial_points = parse_value(key, value, n)?,
                "radial_cutoff" => cfg.quadrature.radial_cutoff = parse_value(key, value, n)?,
                "refinement_tol" => cfg.quadrature.refinement_tol = parse_value(key, value, n)?,
                "objective" => cfg.objective = value.parse()?,
                "out" => cfg.out = Some(PathBuf::from(value)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {n}: unknown key '{key}' (known: {})",
                        CONFIG_KEYS.join(", ")
                    )))
                }
            }
        }
        cfg.geometry = BeamGeometry::new(w0, z_r)?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.zs.validate()?;
        self.quadrature.validate()?;
        if self.m == 0 {
            return Err(Error::InvalidInput("drive OAM m must be nonzero".into()));
        }
        if self.d < 2 {
            return Err(Error::InvalidDimension(self.d));
        }
        if self.l_min > self.l_max {
            return Err(Error::InvalidInput(format!(
                "empty l range [{}, {}]",
                self.l_min, self.l_max
            )));
        }
        if !PRESET_NAMES.contains(&self.state.as_str()) && !Path::new(&self.state).is_file() {
            return Err(Error::InvalidInput(format!(
                "state '{}' is neither a preset ({}) nor a readable file",
                self.state,
                PRESET_NAMES.join(", ")
            )));
        }
        Ok(())
    }
}

/// Resolve a preset name, or else read a state file.
pub fn load_state(spec: &str) -> Result<QuditState> {
    if PRESET_NAMES.contains(&spec) {
        return preset(spec);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        Error::InvalidInput(format!(
            "state '{spec}' is not a preset and cannot be read: {e}"
        ))
    })?;
    parse_state(&text)
}

/// State file: a `base = <OAM>` line followed by the amplitudes, one or more
/// `re+imj` tokens per line, which must already be normalized.
pub fn parse_state(text: &str) -> Result<QuditState> {
    let mut base = None;
    let mut amplitudes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            if key.trim() != "base" {
                return Err(Error::Parse(format!(
                    "line {}: unknown key '{}'",
                    i + 1,
                    key.trim()
                )));
            }
            base = Some(parse_value::<i32>("base", value.trim(), i + 1)?);
            continue;
        }
        for token in line.split_whitespace() {
            amplitudes.push(parse_complex(token)?);
        }
    }
    let base = base.ok_or_else(|| Error::Parse("state file has no 'base = ...' line".into()))?;
    QuditState::new(base, amplitudes)
}
