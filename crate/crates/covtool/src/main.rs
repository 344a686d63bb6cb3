use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use covkit::complex2::format::{covering_from_maps, parse_complex, write_complex};
use covkit::complex2::{fan_triangulate, presentation_complex};
use covkit::fpgroups::{low_index_subgroups, Presentation, SubgroupRecord};
use covkit::graph::format::{parse_graph, write_graph, CoveringMaps};
use covkit::graph::{leighton_common_cover, GraphCovering};
use covkit::papercheck::{run_suite, Status, SuiteConfig};

#[derive(Parser)]
#[command(name = "covtool", version, about = "Coverings of graphs and 2-complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a .graph, .cplx or .pres file.
    Validate { file: PathBuf },
    /// Check that a map between two graphs or complexes is a covering.
    VerifyCover {
        #[arg(long)]
        total: PathBuf,
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Build a finite common cover of two graphs.
    CommonCover {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the presentation complex of a .pres file.
    PresentationComplex {
        presentation: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Fan-triangulate a complex; prints to stdout unless -o is given.
    Triangulate {
        complex: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List conjugacy classes of subgroups of index at most N.
    LowIndex {
        presentation: PathBuf,
        #[arg(short = 'n', long)]
        max_index: usize,
    },
    /// Run the verification suite.
    PaperVerify {
        #[arg(long, default_value_t = 4)]
        max_index: usize,
        #[arg(long, default_value_t = 2)]
        ball_radius: usize,
        #[arg(long, default_value_t = 8)]
        torsion_free_max_index: usize,
        #[arg(long, default_value_t = 5)]
        schreier_max_index: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

fn validate(file: &Path) -> Result<bool> {
    let text = read(file)?;
    match extension(file) {
        "graph" => {
            let g = parse_graph(&text)?;
            let problems = g.validate();
            for p in &problems {
                println!("invalid: {p}");
            }
            if problems.is_empty() {
                println!("ok: graph with {} vertices and {} edges", g.vertex_count(), g.edge_count());
            }
            Ok(problems.is_empty())
        }
        "cplx" => {
            let k = parse_complex(&text)?;
            println!(
                "ok: complex with {} vertices, {} edges and {} faces",
                k.vertex_count(),
                k.edge_count(),
                k.face_count()
            );
            Ok(true)
        }
        "pres" => {
            let p = Presentation::parse(&text)?;
            println!("ok: {} generators and {} relators", p.generator_count(), p.relators().len());
            Ok(true)
        }
        other => bail!("unknown file type `.{other}`; expected .graph, .cplx or .pres"),
    }
}

fn report_verdict(valid: bool, degree: Option<usize>, violations: Vec<String>) -> bool {
    if valid {
        match degree {
            Some(d) => println!("ok: covering of degree {d}"),
            None => println!("ok: covering"),
        }
    }
    for v in violations {
        println!("violation: {v}");
    }
    valid
}

fn verify_cover(total: &Path, base: &Path, map: &Path) -> Result<bool> {
    let maps: CoveringMaps = serde_json::from_str(&read(map)?).context("parsing covering maps")?;
    if extension(total) == "cplx" {
        let (s, t) = (parse_complex(&read(total)?)?, parse_complex(&read(base)?)?);
        let verdict = covering_from_maps(&s, &t, &maps)?.verify()?;
        let violations = verdict.violations.iter().map(ToString::to_string).collect();
        Ok(report_verdict(verdict.is_valid(), verdict.degree, violations))
    } else {
        let (s, t) = (parse_graph(&read(total)?)?, parse_graph(&read(base)?)?);
        let (vmap, dmap) = maps.resolve(&s, &t)?;
        let verdict = GraphCovering::new(s, t, vmap, dmap).verify();
        let violations = verdict.violations.iter().map(ToString::to_string).collect();
        Ok(report_verdict(verdict.is_valid(), verdict.degree, violations))
    }
}

fn common_cover(a: &Path, b: &Path, output: &Path) -> Result<bool> {
    let (ga, gb) = (parse_graph(&read(a)?)?, parse_graph(&read(b)?)?);
    let c = leighton_common_cover(&ga, &gb)?;
    write(output, &write_graph(&c.cover))?;
    for (suffix, leg) in [("to-a", &c.to_a), ("to-b", &c.to_b)] {
        let path = output.with_extension(format!("{suffix}.json"));
        write(&path, &serde_json::to_string_pretty(&CoveringMaps::from_graph_covering(leg))?)?;
    }
    let (n, m) = c.size();
    println!(
        "ok: common cover with {n} vertices and {m} edges, degrees {} and {}",
        c.to_a.verify().degree.unwrap_or(0),
        c.to_b.verify().degree.unwrap_or(0)
    );
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::VerifyCover { total, base, map } => verify_cover(&total, &base, &map),
        Command::CommonCover { a, b, output } => common_cover(&a, &b, &output),
        Command::PresentationComplex { presentation, output } => {
            let p = Presentation::parse(&read(&presentation)?)?;
            write(&output, &write_complex(&presentation_complex(&p)?))?;
            Ok(true)
        }
        Command::Triangulate { complex, output } => {
            let k = parse_complex(&read(&complex)?)?;
            let t = fan_triangulate(&k)?;
            let text = write_complex(&t.complex);
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        Command::LowIndex { presentation, max_index } => {
            let p = Presentation::parse(&read(&presentation)?)?;
            let summaries: Vec<_> = low_index_subgroups(&p, max_index)
                .into_iter()
                .map(|t| SubgroupRecord::analyse(t, None).summary())
                .collect();
            println!("{}", serde_json::to_string_pretty(&summaries)?);
            Ok(true)
        }
        Command::PaperVerify { max_index, ball_radius, torsion_free_max_index, schreier_max_index, report } => {
            let cfg = SuiteConfig {
                max_index,
                ball_radius,
                lemma1_max_index: torsion_free_max_index,
                schreier_max_index,
                output_path: report,
            };
            let r = run_suite(&cfg)?;
            for c in &r.checks {
                if c.status != Status::Pass {
                    println!("{:<13} {}", format!("{:?}", c.status).to_lowercase(), c.check_id);
                }
            }
            println!("pass {} fail {} inconclusive {}", r.summary.pass, r.summary.fail, r.summary.inconclusive);
            if let Some(path) = &cfg.output_path {
                write(path, &r.to_json())?;
            }
            Ok(!r.has_failures())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
