use anyhow::{Context, Result};
use clap::{Args, Subcommand};
use hyperramsey::coloring::{
    build_alt_tight_coloring, build_rainbow_coloring, build_tight_coloring,
    build_two_component_coloring, plant_red_triangles, sample_two_component_aux,
    two_component_from_aux, RainbowOptions,
};
use hyperramsey::format::{self, Meta};
use hyperramsey::trifference::{
    generate_code, suggested_length, TrifferenceCode, DEFAULT_MAX_RETRIES,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Args, Debug, Clone, Default, Serialize, Deserialize)]
pub struct OutDir {
    /// Directory for the artifacts and manifest.json.
    #[arg(long)]
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone, Serialize, Deserialize)]
pub struct CodeParams {
    #[arg(long)]
    pub n: usize,
    /// Word length; defaults to the shortest length at which a random code
    /// is expected to verify.
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_RETRIES)]
    pub retries: usize,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GenCommand {
    /// A random r-trifference code.
    Code {
        #[command(flatten)]
        #[serde(flatten)]
        code: CodeParams,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        #[serde(skip)]
        out: OutDir,
    },
    /// The tight coloring over a code (generated, or read with --code).
    Tight {
        #[command(flatten)]
        #[serde(flatten)]
        code: CodeParams,
        /// Existing code file; --n, --ell and --r are then ignored.
        #[arg(long = "code")]
        code_file: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        #[serde(skip)]
        out: OutDir,
    },
    /// The coordinate-labeled tight coloring.
    AltTight {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        #[serde(skip)]
        out: OutDir,
    },
    /// The rainbow pair coloring on 2^ell vertices.
    Rainbow {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        allow_small_a: bool,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        #[serde(skip)]
        out: OutDir,
    },
    /// The two-component coloring over a rainbow pair coloring.
    TwoComponent {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        allow_small_a: bool,
        /// Attempts at planting red triangles (0 keeps the plain coloring).
        #[arg(long, default_value_t = 0)]
        plant: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        #[serde(skip)]
        out: OutDir,
    },
}

pub struct Generated {
    pub files: BTreeMap<String, String>,
    /// Input files read, with their SHA-256.
    pub inputs: BTreeMap<String, String>,
}

impl GenCommand {
    pub fn name(&self) -> &'static str {
        match self {
            GenCommand::Code { .. } => "code",
            GenCommand::Tight { .. } => "tight",
            GenCommand::AltTight { .. } => "alt-tight",
            GenCommand::Rainbow { .. } => "rainbow",
            GenCommand::TwoComponent { .. } => "two-component",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            GenCommand::Code { seed, .. }
            | GenCommand::Tight { seed, .. }
            | GenCommand::AltTight { seed, .. }
            | GenCommand::Rainbow { seed, .. }
            | GenCommand::TwoComponent { seed, .. } => *seed,
        }
    }

    pub fn out_dir(&self) -> &Path {
        match self {
            GenCommand::Code { out, .. }
            | GenCommand::Tight { out, .. }
            | GenCommand::AltTight { out, .. }
            | GenCommand::Rainbow { out, .. }
            | GenCommand::TwoComponent { out, .. } => &out.out,
        }
    }

    pub fn set_out_dir(&mut self, dir: PathBuf) {
        match self {
            GenCommand::Code { out, .. }
            | GenCommand::Tight { out, .. }
            | GenCommand::AltTight { out, .. }
            | GenCommand::Rainbow { out, .. }
            | GenCommand::TwoComponent { out, .. } => out.out = dir,
        }
    }
}

fn meta(pairs: &[(&str, String)]) -> Meta {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn make_code(p: &CodeParams, seed: u64) -> Result<TrifferenceCode> {
    let ell = p.ell.unwrap_or_else(|| suggested_length(p.n, p.r));
    Ok(generate_code(p.n, ell, p.r, seed, p.retries)?)
}

pub fn generate(cmd: &GenCommand) -> Result<Generated> {
    let mut files = BTreeMap::new();
    let mut inputs = BTreeMap::new();
    let seed = cmd.seed();
    match cmd {
        GenCommand::Code { code, .. } => {
            let c = make_code(code, seed)?;
            files.insert(
                "code.txt".into(),
                format::write_code(&c, &meta(&[("seed", seed.to_string())])),
            );
        }
        GenCommand::Tight {
            code, code_file, ..
        } => {
            let c = match code_file {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    inputs.insert(
                        path.display().to_string(),
                        crate::manifest::sha256_hex(text.as_bytes()),
                    );
                    format::parse_code(&text)?.0
                }
                None => make_code(code, seed)?,
            };
            let (phi, chi) = build_tight_coloring(&c, seed)?;
            let m = meta(&[("kind", "tight".into()), ("seed", seed.to_string())]);
            files.insert(
                "code.txt".into(),
                format::write_code(&c, &meta(&[("seed", seed.to_string())])),
            );
            files.insert("phi.txt".into(), format::write_pair_coloring(&phi, &m));
            files.insert("chi.txt".into(), format::write_triple_coloring(&chi, &m));
        }
        GenCommand::AltTight { n, ell, .. } => {
            let alt = build_alt_tight_coloring(*n, *ell, seed)?;
            let m = meta(&[("kind", "alt-tight".into()), ("seed", seed.to_string())]);
            files.insert("phi.txt".into(), format::write_pair_coloring(&alt.phi, &m));
            files.insert(
                "chi.txt".into(),
                format::write_triple_coloring(&alt.chi, &m),
            );
            let mut s = format!("strings {n} ell={ell}\n");
            for w in &alt.strings {
                s.extend(w.iter().map(|&x| (b'0' + x) as char));
                s.push('\n');
            }
            files.insert("strings.txt".into(), s);
        }
        GenCommand::Rainbow {
            ell,
            a,
            allow_small_a,
            ..
        } => {
            let (phi, _) = build_rainbow_coloring(
                *ell,
                *a,
                seed,
                RainbowOptions {
                    allow_small_a: *allow_small_a,
                },
            )?;
            let m = meta(&[("kind", "rainbow".into()), ("seed", seed.to_string())]);
            files.insert("phi.txt".into(), format::write_pair_coloring(&phi, &m));
        }
        GenCommand::TwoComponent {
            ell,
            a,
            allow_small_a,
            plant,
            ..
        } => {
            let (phi, mut aux) = build_rainbow_coloring(
                *ell,
                *a,
                seed,
                RainbowOptions {
                    allow_small_a: *allow_small_a,
                },
            )?;
            let chi = if *plant == 0 {
                build_two_component_coloring(&phi, &mut aux, seed)?
            } else {
                sample_two_component_aux(&mut aux, phi.num_vertices(), phi.palette().size(), seed);
                plant_red_triangles(&phi, &mut aux, *plant, seed)?;
                two_component_from_aux(&phi, &aux)?
            };
            let m = meta(&[
                ("kind", "two-component".into()),
                ("plant", plant.to_string()),
                ("seed", seed.to_string()),
            ]);
            files.insert("phi.txt".into(), format::write_pair_coloring(&phi, &m));
            files.insert("chi.txt".into(), format::write_triple_coloring(&chi, &m));
        }
    }
    Ok(Generated { files, inputs })
}
