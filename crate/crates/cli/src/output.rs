//! Files written for a run: one CSV per field-map component, the residual
//! summary and the effective scenario document.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use angmom_core::verify::FieldMap;

use crate::config::ScenarioConfig;
use crate::runner::RunOutput;

pub const OUT_DIR_ENV: &str = "ANGMOM_OUT_DIR";

/// `--out`, then the environment override, then the document, then
/// `angmom-out/<name>`.
pub fn resolve_out_dir(flag: Option<PathBuf>, env: Option<String>, cfg: &ScenarioConfig) -> PathBuf {
    flag.or_else(|| env.filter(|s| !s.is_empty()).map(PathBuf::from))
        .or_else(|| cfg.output_dir.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| Path::new("angmom-out").join(&cfg.name))
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' }).collect()
}

/// Writes one component of `map` as `x,y,z,t,value` rows in grid order.
pub fn write_map_component(map: &FieldMap, comp: usize, w: &mut impl Write) -> std::io::Result<()> {
    let cname = map.basis.component_names()[comp];
    writeln!(w, "x,y,z,t,{}_{} [{}]", map.quantity, cname, map.units)?;
    for (p, v) in map.points.iter().zip(&map.values) {
        writeln!(w, "{:e},{:e},{:e},{:e},{:e}", p[0], p[1], p[2], p[3], v[comp])?;
    }
    Ok(())
}

pub fn map_file_name(map: &FieldMap, comp: usize) -> String {
    format!("{}_{}.csv", sanitize(&map.quantity), map.basis.component_names()[comp])
}

pub fn write_outputs(cfg: &ScenarioConfig, run: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for map in &run.maps {
        for comp in 0..3 {
            let path = dir.join(map_file_name(map, comp));
            let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(f);
            write_map_component(map, comp, &mut w)
                .and_then(|_| w.flush())
                .with_context(|| format!("writing {}", path.display()))?;
            written.push(path);
        }
    }
    let path = dir.join("residuals.json");
    let mut json = serde_json::to_string_pretty(&run.summary)?;
    json.push('\n');
    std::fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?;
    written.push(path);
    let path = dir.join("config.json");
    std::fs::write(&path, cfg.to_json()).with_context(|| format!("writing {}", path.display()))?;
    written.push(path);
    Ok(written)
}
