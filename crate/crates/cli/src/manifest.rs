use crate::gen::{generate, GenCommand};
use anyhow::{Context, Result};
use hyperramsey::rng::GENERATOR_NAME;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

pub const MANIFEST_NAME: &str = "manifest.json";

/// Everything needed to regenerate a run. Serialized with sorted keys;
/// contains no timings, so replays match byte for byte.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub command: String,
    pub generator: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    pub parameters: GenCommand,
    pub replay_hash: String,
    pub seed: u64,
    pub tool: String,
    pub version: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Manifest {
    pub fn new(
        cmd: &GenCommand,
        inputs: BTreeMap<String, String>,
        outputs: BTreeMap<String, String>,
    ) -> Self {
        let mut m = Manifest {
            command: format!("gen {}", cmd.name()),
            generator: GENERATOR_NAME.into(),
            inputs,
            outputs,
            parameters: cmd.clone(),
            replay_hash: String::new(),
            seed: cmd.seed(),
            tool: "hyperramsey".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        };
        m.replay_hash = m.compute_hash();
        m
    }

    /// SHA-256 of the canonical JSON with an empty `replay_hash`.
    pub fn compute_hash(&self) -> String {
        let mut copy = self.clone();
        copy.replay_hash = String::new();
        sha256_hex(copy.to_json().as_bytes())
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("manifest serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("manifest serializes");
        s.push('\n');
        s
    }
}

/// Runs a generator, writes its artifacts and the manifest into the output
/// directory, and returns the manifest.
pub fn run_and_record(cmd: &GenCommand) -> Result<Manifest> {
    let started = std::time::Instant::now();
    let g = generate(cmd)?;
    let dir = cmd.out_dir();
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut outputs = BTreeMap::new();
    for (name, body) in &g.files {
        let path = dir.join(name);
        std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
        outputs.insert(name.clone(), sha256_hex(body.as_bytes()));
    }
    let m = Manifest::new(cmd, g.inputs, outputs);
    std::fs::write(dir.join(MANIFEST_NAME), m.to_json())?;
    eprintln!("generated in {} ms", started.elapsed().as_millis());
    Ok(m)
}

#[derive(Serialize)]
pub struct ReplayOutcome {
    pub identical: bool,
    pub manifest_hash_valid: bool,
    pub outputs: BTreeMap<String, bool>,
    pub replay_hash: String,
}

/// Regenerates the run described by a manifest and compares every output
/// hash. Files are written only when `out` is given.
pub fn replay(path: &Path, out: Option<&Path>) -> Result<ReplayOutcome> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let recorded: Manifest = serde_json::from_str(&text).context("parsing manifest")?;
    let mut cmd = recorded.parameters.clone();
    if let Some(dir) = out {
        cmd.set_out_dir(dir.to_path_buf());
    }
    let g = generate(&cmd)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        for (name, body) in &g.files {
            std::fs::write(dir.join(name), body)?;
        }
    }
    let fresh: BTreeMap<String, String> = g
        .files
        .iter()
        .map(|(k, v)| (k.clone(), sha256_hex(v.as_bytes())))
        .collect();
    let mut outputs = BTreeMap::new();
    for name in recorded.outputs.keys().chain(fresh.keys()) {
        outputs.insert(name.clone(), recorded.outputs.get(name) == fresh.get(name));
    }
    let again = Manifest::new(&cmd, g.inputs, fresh);
    if let Some(dir) = out {
        std::fs::write(dir.join(MANIFEST_NAME), again.to_json())?;
    }
    let manifest_hash_valid = recorded.compute_hash() == recorded.replay_hash;
    Ok(ReplayOutcome {
        identical: manifest_hash_valid
            && outputs.values().all(|&b| b)
            && again.replay_hash == recorded.replay_hash,
        manifest_hash_valid,
        outputs,
        replay_hash: again.replay_hash,
    })
}
