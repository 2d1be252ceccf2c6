use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zero_schur::cartan::{cartan_hecke, cartan_schur, orbit_census, orbits, CartanMatrix};
use zero_schur::compositions::{lambda_bullet_set, strong_compositions, weak_compositions, Composition};
use zero_schur::crystal::build_d;
use zero_schur::export::{action_dot, module_json};
use zero_schur::hecke::{projective_r, simple_f};
use zero_schur::module::AlgModule;
use zero_schur::schur::{build_n, build_p, build_s};
use zero_schur::verify::{run_suite, SUITES};
use zero_schur::Error;

const MAX_ORBIT_R: usize = 10;

#[derive(Parser)]
#[command(name = "zschur", version, about = "Exact computations for 0-Schur algebras, 0-Hecke algebras and U₀(gl_n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format (each command has its own default).
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel library calls.
    #[arg(long, global = true, env = "ZSCHUR_THREADS")]
    threads: Option<usize>,
    /// Seed for randomized intertwiner probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Weak,
    Strong,
    Bullet,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    P,
    S,
    N,
    F,
    R,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Schur,
    Hecke,
}

#[derive(Subcommand)]
enum Command {
    /// List Λ(n,r), Λ⁺(r) or Λ•(n,r).
    Compositions {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        r: usize,
    },
    /// Build a module and dump it as JSON or as a DOT action graph.
    Module {
        #[arg(value_enum, ignore_case = true)]
        kind: ModuleKind,
        /// Weight λ for P, S, N.
        #[arg(long)]
        lambda: Option<Composition>,
        /// Strong composition α for F, R, D.
        #[arg(long)]
        alpha: Option<Composition>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        r: Option<usize>,
    },
    /// Cartan matrix of S₀(n,r) or H_r(0).
    Cartan {
        #[arg(value_enum)]
        which: Which,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        r: usize,
    },
    /// Orbits of ⟨ex, c, η⟩ on Λ⁺(r)².
    Orbits {
        #[arg(short)]
        r: usize,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(short, default_value_t = 3)]
        r: usize,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn emit(common: &Common, text: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn format_or(common: &Common, default: Format, allowed: &[Format]) -> anyhow::Result<Format> {
    let f = common.format.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!(Error::Domain("this command does not support the requested format".into()));
    }
    Ok(f)
}

fn cmd_compositions(common: &Common, kind: Kind, n: Option<usize>, r: usize) -> anyhow::Result<()> {
    let need_n = || n.ok_or_else(|| Error::Domain("-n is required for this kind".into()));
    let list = match kind {
        Kind::Weak => weak_compositions(need_n()?, r),
        Kind::Strong => strong_compositions(r),
        Kind::Bullet => lambda_bullet_set(need_n()?, r),
    };
    let text = match format_or(common, Format::Text, &[Format::Text, Format::Json])? {
        Format::Json => pretty(&json!(list.iter().map(Composition::label).collect::<Vec<_>>())),
        _ => list.iter().map(|c| format!("{}\n", c.label())).collect(),
    };
    emit(common, &text)
}

fn checked_lambda(lambda: Option<Composition>, n: Option<usize>, r: Option<usize>) -> anyhow::Result<Composition> {
    let l = lambda.ok_or_else(|| Error::Domain("--lambda is required".into()))?;
    let n = n.unwrap_or(l.len());
    let r = r.unwrap_or(l.size());
    if n == 0 || !lambda_bullet_set(n, r).contains(&l) {
        bail!(Error::Domain(format!("{l} is not in Λ•({n},{r})")));
    }
    Ok(l)
}

fn checked_alpha(alpha: Option<Composition>, r: Option<usize>) -> anyhow::Result<Composition> {
    let a = alpha.ok_or_else(|| Error::Domain("--alpha is required".into()))?;
    if !a.is_strong() || r.is_some_and(|r| r != a.size()) {
        bail!(Error::Domain(format!("{a} is not a strong composition of the requested size")));
    }
    Ok(a)
}

fn cmd_module(
    common: &Common,
    kind: ModuleKind,
    lambda: Option<Composition>,
    alpha: Option<Composition>,
    n: Option<usize>,
    r: Option<usize>,
) -> anyhow::Result<()> {
    let (m, name): (AlgModule, String) = match kind {
        ModuleKind::P => {
            let l = checked_lambda(lambda, n, r)?;
            (build_p(&l)?, format!("P_{}", l.label()))
        }
        ModuleKind::S => {
            let l = checked_lambda(lambda, n, r)?;
            (build_s(&l)?, format!("S_{}", l.label()))
        }
        ModuleKind::N => {
            let l = checked_lambda(lambda, n, r)?;
            (build_n(&l)?, format!("N_{}", l.label()))
        }
        ModuleKind::F => {
            let a = checked_alpha(alpha, r)?;
            (simple_f(&a)?, format!("F_{}", a.label()))
        }
        ModuleKind::R => {
            let a = checked_alpha(alpha, r)?;
            (projective_r(&a)?, format!("R_{}", a.label()))
        }
        ModuleKind::D => {
            let a = checked_alpha(alpha, r)?;
            let n = n.ok_or_else(|| Error::Domain("-n is required for D".into()))?;
            (build_d(&a, n)?, format!("D_{}", a.label()))
        }
    };
    let text = match format_or(common, Format::Json, &[Format::Json, Format::Dot, Format::Text])? {
        Format::Dot => action_dot(&m, &name),
        Format::Text => {
            let mut s = format!("{name}: dim {}\n", m.dim());
            for l in &m.labels {
                s.push_str(&format!("  {l}\n"));
            }
            s
        }
        _ => {
            let mut v = module_json(&m);
            v["name"] = json!(name);
            v["dim"] = json!(m.dim());
            pretty(&v)
        }
    };
    emit(common, &text)
}

fn matrix_text(c: &CartanMatrix) -> String {
    let labels: Vec<String> = c.index.iter().map(Composition::label).collect();
    let w = labels.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for (l, row) in labels.iter().zip(&c.entries) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        s.push_str(&format!("{l:>w$} | {}\n", cells.join(" ")));
    }
    s
}

fn cmd_cartan(common: &Common, which: Which, n: Option<usize>, r: usize) -> anyhow::Result<()> {
    let c = match which {
        Which::Schur => cartan_schur(n.ok_or_else(|| Error::Domain("-n is required for schur".into()))?, r)?,
        Which::Hecke => cartan_hecke(r)?,
    };
    let text = match format_or(common, Format::Csv, &[Format::Csv, Format::Json, Format::Text])? {
        Format::Json => pretty(&c.to_json()),
        Format::Text => matrix_text(&c),
        _ => c.to_csv(),
    };
    emit(common, &text)
}

fn cmd_orbits(common: &Common, r: usize) -> anyhow::Result<()> {
    if r > MAX_ORBIT_R {
        bail!(Error::Guard(format!("orbit listing needs r ≤ {MAX_ORBIT_R}, got {r}")));
    }
    let os = orbits(r);
    let census = orbit_census(&os);
    let total: usize = os.iter().map(|o| o.size()).sum();
    let text = match format_or(common, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => {
            let mut s = format!("r = {r}: {} orbits, {total} pairs\n", os.len());
            for (size, count) in &census {
                s.push_str(&format!("  size {size}: {count}\n"));
            }
            s
        }
        _ => {
            let pair = |p: &(Composition, Composition)| json!([p.0.label(), p.1.label()]);
            let listing: Vec<_> = os
                .iter()
                .map(|o| {
                    json!({
                        "root": pair(&o.root),
                        "size": o.size(),
                        "members": o.members.iter().map(pair).collect::<Vec<_>>(),
                        "trace": o.trace.iter().map(|t| t.iter().map(|m| m.name()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let census_json: serde_json::Map<String, serde_json::Value> =
                census.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            pretty(&json!({ "r": r, "total": total, "orbit_count": os.len(), "census": census_json, "orbits": listing }))
        }
    };
    emit(common, &text)
}

fn cmd_verify(common: &Common, suite: &str, n: usize, r: usize) -> anyhow::Result<Outcome> {
    if !SUITES.contains(&suite) {
        bail!(Error::Domain(format!("unknown suite {suite:?}; known: {}", SUITES.join(", "))));
    }
    let rep = run_suite(suite, n, r, common.seed)?;
    let text = match format_or(common, Format::Json, &[Format::Json, Format::Text])? {
        Format::Text => rep.to_text(),
        _ => pretty(&rep.to_json()),
    };
    emit(common, &text)?;
    Ok(if rep.pass() { Outcome::Pass } else { Outcome::Fail })
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(t) = cli.common.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("configuring the thread pool")?;
    }
    let c = &cli.common;
    match cli.command {
        Command::Compositions { kind, n, r } => cmd_compositions(c, kind, n, r)?,
        Command::Module { kind, lambda, alpha, n, r } => cmd_module(c, kind, lambda, alpha, n, r)?,
        Command::Cartan { which, n, r } => cmd_cartan(c, which, n, r)?,
        Command::Orbits { r } => cmd_orbits(c, r)?,
        Command::Verify { suite, n, r } => return cmd_verify(c, &suite, n, r),
    }
    Ok(Outcome::Pass)
}

fn exit_code(result: anyhow::Result<Outcome>) -> u8 {
    match result {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Fail) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Internal(_)) => 1,
                _ => 2,
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(exit_code(run(Cli::parse())))
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Scratch(PathBuf);

    impl Scratch {
        fn new(tag: &str) -> Self {
            let dir = std::env::temp_dir().join(format!("zschur-{tag}-{}", std::process::id()));
            fs::create_dir_all(&dir).unwrap();
            Scratch(dir)
        }
    }

    impl Drop for Scratch {
        fn drop(&mut self) {
            let _ = fs::remove_dir_all(&self.0);
        }
    }

    fn invoke(args: &[&str], out: &std::path::Path) -> u8 {
        let mut argv = vec!["zschur"];
        argv.extend_from_slice(args);
        argv.extend_from_slice(&["--out", out.to_str().unwrap()]);
        match Cli::try_parse_from(argv) {
            Ok(cli) => exit_code(run(cli)),
            Err(e) => e.exit_code() as u8,
        }
    }

    fn output(args: &[&str]) -> String {
        let s = Scratch::new("out");
        let path = s.0.join("o");
        assert_eq!(invoke(args, &path), 0, "{args:?}");
        fs::read_to_string(&path).unwrap()
    }

    fn parsed(args: &[&str]) -> serde_json::Value {
        serde_json::from_str(&output(args)).unwrap()
    }

    #[test]
    fn composition_listings() {
        assert_eq!(output(&["compositions", "--kind", "bullet", "-n", "3", "-r", "3"]).lines().count(), 4);
        assert_eq!(output(&["compositions", "--kind", "strong", "-r", "3"]).lines().count(), 4);
        assert_eq!(output(&["compositions", "--kind", "weak", "-n", "2", "-r", "2"]), "0.2\n1.1\n2.0\n");
        assert_eq!(parsed(&["compositions", "--kind", "strong", "-r", "2", "--format", "json"]), json!(["1.1", "2"]));
    }

    #[test]
    fn module_dumps() {
        assert_eq!(parsed(&["module", "D", "--alpha", "2.1", "-n", "3"])["dim"], 4);
        let s = output(&["module", "S", "--lambda", "2.1.0", "-n", "3", "-r", "3", "--format", "dot"]);
        assert_eq!(s.lines().filter(|l| l.contains("[shape=box]")).count(), 4);
        let p = output(&["module", "P", "--lambda", "2.1.0", "--format", "dot"]);
        assert_eq!(p.lines().filter(|l| l.contains("[shape=box]")).count(), 8);
        assert_eq!(parsed(&["module", "R", "--alpha", "2.1"])["dim"], 2);
        assert!(output(&["module", "F", "--alpha", "1.2", "--format", "text"]).starts_with("F_1.2: dim 1"));
    }

    #[test]
    fn cartan_and_orbits() {
        let csv = output(&["cartan", "schur", "-n", "3", "-r", "3", "--format", "csv"]);
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.lines().all(|l| l.split(',').count() == 5));
        assert_eq!(output(&["cartan", "hecke", "-r", "4"]).lines().count(), 9);
        let o = parsed(&["orbits", "-r", "4"]);
        assert_eq!(o["total"], 64);
        let sizes: u64 = o["orbits"].as_array().unwrap().iter().map(|x| x["size"].as_u64().unwrap()).sum();
        assert_eq!(sizes, 64);
    }

    #[test]
    fn verify_exit_codes() {
        for (suite, n, r) in [("simplicity", "3", "3"), ("cartan-restriction", "2", "3"), ("lemma-4.6", "2", "3")] {
            let rep = parsed(&["verify", suite, "-n", n, "-r", r]);
            assert_eq!(rep["suite"], suite);
            assert!(rep["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
        }
        let s = Scratch::new("codes");
        let path = s.0.join("o");
        assert_eq!(invoke(&["verify", "orbit-examples"], &path), 1);
        assert_eq!(invoke(&["verify", "no-such-suite"], &path), 2);
        assert_eq!(invoke(&["module", "P", "--lambda", "0.3", "-n", "2", "-r", "3"], &path), 2);
        assert_eq!(invoke(&["module", "S"], &path), 2);
        assert_eq!(invoke(&["cartan", "hecke", "-r", "9"], &path), 2);
        assert_eq!(invoke(&["orbits", "-r", "4", "--format", "dot"], &path), 2);
        assert_eq!(invoke(&["compositions", "--kind", "sideways", "-r", "2"], &path), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["verify", "socle", "-n", "3", "-r", "3", "--seed", "0"];
        assert_eq!(output(&args), output(&args));
        assert_eq!(output(&["orbits", "-r", "5"]), output(&["orbits", "-r", "5"]));
    }
}
