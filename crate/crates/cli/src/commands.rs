use crate::{
    Check, CliqueArgs, CliqueMode, Command, ExtractArgs, ExtractMode, Order, TreeCommand,
    TreeInput, VerifyArgs,
};
use anyhow::{anyhow, bail, Context, Result};
use hyperramsey::coloring::{build_rainbow_coloring, PairColoring, RainbowOptions, TripleColoring};
use hyperramsey::extract::{extract_blue_clique_halving, extract_blue_clique_iterated};
use hyperramsey::format;
use hyperramsey::hypergraph::{iterated_tripartite_edge_table, RecognizeOptions};
use hyperramsey::tree::{
    build_split_tree, classify_good_nodes, good_lca_triple_count, min_score_given_weight, BitOrder,
    Rational, WeightedBinaryTree,
};
use hyperramsey::verify::{
    check_biclique_structure, check_pairwise_unions_iterated, check_phi_constancy,
    check_red_components_tripartite, count_rainbow_triangles, greedy_blue_clique,
    max_blue_clique_exact, sample_subset, CliqueOptions, PairwiseOptions, Report,
};
use hyperramsey::Error;
use serde::Serialize;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

/// 2 for usage and parse errors, 3 for resource guards, 1 otherwise.
pub fn exit_code_for(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<Error>() {
            return match err {
                Error::TooLarge { .. } => 3,
                Error::Parse { .. } | Error::Invalid(_) | Error::Io(_) => 2,
                _ => 1,
            };
        }
        if cause.downcast_ref::<std::io::Error>().is_some()
            || cause.downcast_ref::<serde_json::Error>().is_some()
        {
            return 2;
        }
    }
    2
}

fn status(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_triple(path: &Path) -> Result<TripleColoring> {
    Ok(format::parse_triple_coloring(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?
        .0)
}

fn read_pair(path: &Path) -> Result<PairColoring> {
    Ok(format::parse_pair_coloring(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))?
        .0)
}

fn print_json(v: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::to_value(v).unwrap()).unwrap()
    );
}

pub fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Gen(g) => {
            let m = crate::manifest::run_and_record(&g)?;
            print!("{}", m.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(&args),
        Command::Clique(args) => clique(&args),
        Command::Extract(args) => extract(&args),
        Command::Tree(t) => tree(t),
        Command::TTable { max_s } => {
            if max_s > 60 {
                return Err(Error::TooLarge {
                    size: max_s as usize,
                    limit: 60,
                }
                .into());
            }
            println!("s t(s)");
            for (s, t) in iterated_tripartite_edge_table(max_s).iter().enumerate() {
                println!("{s} {t}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { manifest, out } => {
            let r = crate::manifest::replay(&manifest, out.as_deref())?;
            print_json(&r);
            Ok(status(r.identical))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let report = match args.check {
        Check::RedTripartite => {
            let chi = read_triple(&args.input)?;
            let r = check_red_components_tripartite(&chi);
            let mut rep = Report::new("red-tripartite", &chi.instance_hash())
                .param("num_vertices", chi.num_vertices())
                .stat("red_edges", r.red_edges)
                .stat("components", r.components.len())
                .stat(
                    "largest_component",
                    r.components
                        .iter()
                        .map(|c| c.edges.len())
                        .max()
                        .unwrap_or(0),
                );
            for c in r.violations() {
                rep = rep.violation(serde_json::json!({
                    "component": c.index,
                    "support": c.support,
                    "edges": c.edges,
                }));
            }
            rep
        }
        Check::PhiConstancy => {
            let chi = read_triple(&args.input)?;
            let pairs = args
                .pairs
                .as_deref()
                .ok_or_else(|| Error::Invalid("phi-constancy needs --pairs".into()))?;
            let phi = read_pair(pairs)?;
            let r = check_phi_constancy(&chi, &phi, args.cross_law)?;
            let mut rep = Report::new("phi-constancy", &chi.instance_hash())
                .param("cross_law", args.cross_law)
                .param("num_vertices", chi.num_vertices())
                .stat("components", r.components);
            for v in &r.violations {
                rep = rep.violation(v);
            }
            rep
        }
        Check::PairwiseIterated => {
            let chi = read_triple(&args.input)?;
            let opts = PairwiseOptions {
                max_union_vertices: args.max_union_vertices,
                ..PairwiseOptions::default()
            };
            let r = check_pairwise_unions_iterated(&chi, opts)?;
            let mut rep = Report::new("pairwise-iterated", &chi.instance_hash())
                .param("max_union_vertices", args.max_union_vertices)
                .param("num_vertices", chi.num_vertices())
                .stat("components", r.components)
                .stat("overlapping_unions", r.overlapping.len())
                .stat("disjoint_pairs", r.disjoint_pairs);
            for f in &r.failures {
                rep = rep.violation(f);
            }
            rep
        }
        Check::Biclique => {
            let pc = read_pair(&args.input)?;
            let r = check_biclique_structure(&pc);
            let mut rep = Report::new("biclique", &pair_hash(&pc))
                .param("num_vertices", pc.num_vertices())
                .stat("classes_checked", r.classes_checked);
            for v in &r.violations {
                rep = rep.violation(v);
            }
            rep
        }
        Check::RainbowCount => rainbow_count(args)?,
    };
    let report = Report {
        timing_ms: args.timing.then(|| started.elapsed().as_millis() as u64),
        ..report
    };
    let text = report.render(args.format.into());
    match &args.out {
        Some(p) => std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(status(report.passed()))
}

fn pair_hash(pc: &PairColoring) -> String {
    crate::manifest::sha256_hex(format::write_pair_coloring(pc, &Default::default()).as_bytes())
}

/// Per-sample rainbow triangle counts in random `k`-subsets against the
/// threshold `k^2.5 / 4`. Sample `i` draws its subset from stream
/// `("rainbow-count", i)`.
fn rainbow_count(args: &VerifyArgs) -> Result<Report> {
    let pc = read_pair(&args.input)?;
    let n = pc.num_vertices();
    let k = args.subset_size;
    if k > n {
        bail!(Error::Invalid(format!(
            "subset size {k} exceeds {n} vertices"
        )));
    }
    let threshold = (k as f64).powf(2.5) / 4.0;
    let mut counts = Vec::with_capacity(args.samples as usize);
    let mut failing = Vec::new();
    for i in 0..args.samples {
        let subset = sample_subset(n, k, args.seed, i);
        let c = count_rainbow_triangles(&pc, &subset)?;
        if (c as f64) < threshold {
            failing.push(serde_json::json!({"sample": i, "seed": args.seed, "count": c}));
        }
        counts.push(c);
    }
    let passing = counts.len() - failing.len();
    let fraction = if counts.is_empty() {
        1.0
    } else {
        passing as f64 / counts.len() as f64
    };
    let mut rep = Report::new("rainbow-count", &pair_hash(&pc))
        .param(
            "min_pass_fraction",
            format!("{:.4}", args.min_pass_fraction),
        )
        .param("samples", args.samples)
        .param("seed", args.seed)
        .param("subset_size", k)
        .stat("threshold", format!("{threshold:.4}"))
        .stat("counts", &counts)
        .stat("pass_fraction", format!("{fraction:.4}"))
        .stat("failing_samples", &failing);
    if fraction < args.min_pass_fraction {
        rep = rep.violation(serde_json::json!({
            "pass_fraction": format!("{fraction:.4}"),
            "failing_samples": failing,
        }));
    }
    Ok(rep)
}

fn clique(args: &CliqueArgs) -> Result<ExitCode> {
    let chi = read_triple(&args.input)?;
    let r = match args.mode {
        CliqueMode::Exact => max_blue_clique_exact(
            &chi,
            CliqueOptions {
                max_n: args.max_n,
                size_limit: args.limit,
            },
        )?,
        CliqueMode::Greedy => greedy_blue_clique(&chi, args.restarts, args.seed),
    };
    print_json(&serde_json::json!({
        "instance_hash": chi.instance_hash(),
        "mode": format!("{:?}", args.mode).to_lowercase(),
        "size": r.size,
        "witness": r.witness,
        "exhaustive": r.exhaustive,
    }));
    Ok(ExitCode::SUCCESS)
}

fn extract(args: &ExtractArgs) -> Result<ExitCode> {
    let chi = read_triple(&args.input)?;
    let v = match args.mode {
        ExtractMode::Halving => {
            let r = extract_blue_clique_halving(&chi)?;
            serde_json::json!({
                "instance_hash": chi.instance_hash(),
                "mode": "halving",
                "size": r.clique.len(),
                "clique": r.clique,
                "trace": r.trace,
            })
        }
        ExtractMode::Iterated => {
            let r = extract_blue_clique_iterated(
                &chi,
                RecognizeOptions {
                    max_vertices: args.max_vertices,
                    prefer_balanced: true,
                },
            )?;
            serde_json::json!({
                "instance_hash": chi.instance_hash(),
                "mode": "iterated",
                "size": r.clique.len(),
                "clique": r.clique,
                "trace": r.trace,
                "certificate": r.certificate,
            })
        }
    };
    print_json(&v);
    Ok(ExitCode::SUCCESS)
}

fn load_tree(input: &TreeInput) -> Result<WeightedBinaryTree> {
    let text = match (&input.input, &input.tree) {
        (Some(p), _) => read(p)?,
        (None, Some(t)) => t.clone(),
        (None, None) => return Err(Error::Invalid("give --in or --tree".into()).into()),
    };
    Ok(WeightedBinaryTree::parse_nested(text.trim())?)
}

fn tree(cmd: TreeCommand) -> Result<ExitCode> {
    match cmd {
        TreeCommand::Split {
            set,
            ell,
            order,
            a,
            seed,
        } => {
            let order = match order {
                Order::Lowest => BitOrder::LowestFirst,
                Order::Highest => BitOrder::HighestFirst,
            };
            let st = build_split_tree(&set, ell, order)?;
            match a {
                None => println!("{}", st.render(None)),
                Some(a) => {
                    let (_, aux) = build_rainbow_coloring(
                        ell,
                        a,
                        seed,
                        RainbowOptions {
                            allow_small_a: true,
                        },
                    )?;
                    let colors = aux
                        .vertex_colors
                        .ok_or_else(|| anyhow!("missing level colors"))?;
                    let classes = classify_good_nodes(&st, &colors)?;
                    println!("{}", st.render(Some(&classes)));
                    println!("good_lca_triples {}", good_lca_triple_count(&st, &classes));
                    println!(
                        "total_triples {}",
                        hyperramsey::combin::choose3(set.len() as u64)
                    );
                }
            }
        }
        TreeCommand::RotateToBalance(input) => {
            let mut t = load_tree(&input)?;
            println!("step 0 d_total={} {}", t.d_total(), t.dump());
            let mut step = 0;
            while let Some(imb) = t.find_imbalance() {
                let before = t.d_total();
                t = t.rotate(&imb)?;
                step += 1;
                println!(
                    "step {step} n_x={} n_w={} d_total={}->{} {}",
                    t.n(imb.x),
                    t.n(imb.w),
                    before,
                    t.d_total(),
                    t.dump()
                );
            }
            println!("balanced after {step} rotations");
        }
        TreeCommand::Score { input, weight } => {
            let t = load_tree(&input)?;
            let w: Rational = weight
                .parse()
                .map_err(|_| Error::Invalid(format!("bad weight {weight:?}")))?;
            if w < Rational::from_integer(0) {
                return Err(Error::Invalid("weight must be nonnegative".into()).into());
            }
            let sol = min_score_given_weight(&t, w);
            println!("score {}", sol.score);
            let f = sol
                .assignment
                .iter()
                .map(|(v, f)| (*v, *f))
                .collect::<std::collections::HashMap<_, _>>();
            println!(
                "{}",
                t.render(&|id| Some(format!(
                    "n={} w={} m={} f={}",
                    t.n(id),
                    t.weight(id).unwrap(),
                    t.lca_triples(id),
                    f[&id]
                )))
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
