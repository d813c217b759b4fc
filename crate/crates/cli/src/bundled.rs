use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::config::ScenarioConfig;

pub struct Bundled {
    pub name: &'static str,
    pub about: &'static str,
    pub text: &'static str,
}

macro_rules! bundled {
    ($name:literal, $about:literal) => {
        Bundled {
            name: $name,
            about: $about,
            text: include_str!(concat!("../scenarios/", $name, ".json")),
        }
    };
}

pub const BUNDLED: &[Bundled] = &[
    bundled!("fig2_fiber", "dual-mode fiber, source-free spin balance on a 64x64 transverse grid"),
    bundled!("fig3_linescan", "z-axis line just outside the fiber, sampled along z and over one beat period"),
    bundled!("eq14_planewaves", "two co-propagating circular waves at omega and 2 omega against the closed form"),
    bundled!("dirac_free_pair", "two free spinor plane waves, spin/orbital exchange and total continuity"),
    bundled!("belinfante_crosscheck", "dual-mode fiber, symmetrized law against the canonical one"),
    bundled!("convergence_sweep", "finite-difference residuals on the fiber pair with measured convergence order"),
];

pub fn find(name: &str) -> Option<&'static Bundled> {
    BUNDLED.iter().find(|b| b.name == name)
}

/// Reads `arg` as a file path, falling back to a bundled scenario name.
pub fn load(arg: &str) -> Result<ScenarioConfig> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return ScenarioConfig::parse(&text).with_context(|| format!("in {}", path.display()));
    }
    match find(arg) {
        Some(b) => ScenarioConfig::parse(b.text).with_context(|| format!("in bundled scenario {}", b.name)),
        None => bail!("{arg} is neither a readable file nor a bundled scenario (see --list-scenarios)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_scenario_parses_and_names_itself() {
        for b in BUNDLED {
            let c = ScenarioConfig::parse(b.text).unwrap_or_else(|e| panic!("{}: {e:#}", b.name));
            assert_eq!(c.name, b.name);
        }
    }
}
