use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use zero_schur::compositions::{comp, refinements, strong_compositions, Composition};
use zero_schur::crystal::{qr_shapes, qrt_enumerate, tab};
use zero_schur::functors::functor_g;
use zero_schur::hecke::projective_r;
use zero_schur::matrices::NNMatrix;
use zero_schur::schur::{build_s, matrix_label};
use zero_schur::tensor::{descendants_e, descendants_f};
use zero_schur::verify::{run_suite, SuiteReport};

type Outcome = Result<String, String>;

fn zschur(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_zschur")).args(args).output().expect("binary runs");
    assert!(out.status.success(), "zschur {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn dot_graph(text: &str) -> (BTreeSet<String>, BTreeSet<(String, String, String)>) {
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for line in text.lines().map(str::trim) {
        let q: Vec<&str> = line.split('"').collect();
        if line.contains("->") && q.len() >= 6 {
            edges.insert((q[1].to_string(), q[5].to_string(), q[3].to_string()));
        } else if line.ends_with("[shape=box];") && q.len() >= 2 {
            nodes.insert(q[1].to_string());
        }
    }
    (nodes, edges)
}

fn edge_set(edges: &[(&str, &str, &str)]) -> BTreeSet<(String, String, String)> {
    edges.iter().map(|(a, g, b)| (a.to_string(), g.to_string(), b.to_string())).collect()
}

fn strings(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn suites(name: &str, cases: &[(usize, usize)]) -> Outcome {
    let mut checks = 0;
    for &(n, r) in cases {
        let rep: SuiteReport = run_suite(name, n, r, 0).map_err(|e| format!("{name} ({n},{r}): {e}"))?;
        if let Some(c) = rep.failures().next() {
            return Err(format!("{name} ({n},{r}): {} expected {} got {}", c.name, c.expected, c.got));
        }
        checks += rep.checks.len();
    }
    Ok(format!("{name}: {checks} checks"))
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        notes.push(p?);
    }
    Ok(notes.join("; "))
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, want: T, got: T) -> Outcome {
    if want == got {
        Ok(what.to_string())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

const BOTH: &[(usize, usize)] = &[(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)];

fn p_210_graph() -> Outcome {
    let (nodes, edges) = dot_graph(&zschur(&["module", "P", "--lambda", "2.1.0", "-n", "3", "-r", "3", "--format", "dot"]));
    let (a, b, c, d) = ("200|010|000", "100|110|000", "200|000|010", "100|010|100");
    let (e, f, g, h) = ("100|100|010", "100|000|110", "000|200|010", "000|100|110");
    let want = edge_set(&[
        (a, "f1", b),
        (a, "f2", c),
        (b, "f2", d),
        (c, "e2", a),
        (c, "f1", e),
        (d, "e2", b),
        (d, "f2", f),
        (e, "e1", c),
        (e, "e2", b),
        (e, "f1", g),
        (e, "f2", f),
        (f, "e2", d),
        (f, "f1", h),
        (g, "e1", e),
        (g, "f2", h),
        (h, "e1", f),
    ]);
    all(vec![
        expect("8 basis matrices", strings(&[a, b, c, d, e, f, g, h]), nodes),
        expect("16 labeled edges", want, edges),
    ])
}

fn s_210_graph() -> Outcome {
    let (nodes, edges) = dot_graph(&zschur(&["module", "S", "--lambda", "2.1.0", "-n", "3", "-r", "3", "--format", "dot"]));
    let (a, c, e, g) = ("200|010|000", "200|000|010", "100|100|010", "000|200|010");
    let want = edge_set(&[(a, "f2", c), (c, "e2", a), (c, "f1", e), (e, "e1", c), (e, "f1", g), (g, "e1", e)]);
    let blocks = [
        NNMatrix::of(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
        NNMatrix::of(&[&[2, 0, 0], &[0, 0, 0], &[0, 1, 0]]),
        NNMatrix::of(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
        NNMatrix::of(&[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0]]),
    ];
    let labels: BTreeSet<String> = blocks.iter().map(matrix_label).collect();
    let s = build_s(&comp(&[2, 1, 0])).map_err(|e| e.to_string())?;
    all(vec![
        expect("column-block-diagonal", true, blocks.iter().all(NNMatrix::is_column_block_diagonal)),
        expect("basis of S_210", labels.clone(), s.labels.iter().cloned().collect()),
        expect("DOT nodes", labels, nodes),
        expect("4-chain edges", want, edges),
    ])
}

fn bookkeeping() -> Outcome {
    let (sum, count) = zero_schur::schur::dimension_bookkeeping(3, 3).map_err(|e| e.to_string())?;
    all(vec![expect("165 at (3,3)", (165, 165), (sum, count)), suites("bookkeeping", &[(2, 2), (2, 3), (3, 3)])])
}

fn descendants() -> Outcome {
    let w = [1, 3, 4, 3, 1, 4, 2, 4];
    all(vec![
        expect("E_3", vec![vec![1, 3, 4, 3, 1, 3, 2, 4], vec![1, 3, 4, 3, 1, 4, 2, 3]], descendants_e(3, &w)),
        expect("F_3", vec![vec![1, 4, 4, 3, 1, 4, 2, 4]], descendants_f(3, &w)),
    ])
}

fn quasi_ribbon() -> Outcome {
    let w = [1, 5, 3, 2, 1, 6, 7, 6, 7];
    let t = tab(&w, &comp(&[2, 1, 1, 3, 2])).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for r in 1..=5 {
        for n in 1usize..=4 {
            for a in strong_compositions(r) {
                let want = if a.len() <= n { refinements(&a.bullet(n)).len() } else { 0 };
                counts.push((n, a.clone(), want, qrt_enumerate(n, &a).len()));
            }
        }
    }
    let bad: Vec<(usize, Composition, usize, usize)> = counts.into_iter().filter(|x| x.2 != x.3).collect();
    all(vec![
        expect("153216767 tableau", vec![vec![1, 1], vec![2], vec![3], vec![5, 6, 6], vec![7, 7]], t.rows),
        expect("112213312 has no shape", Vec::<Composition>::new(), qr_shapes(&[1, 1, 2, 2, 1, 3, 3, 1, 2])),
        expect("|QRT(n,α)| mismatches", Vec::new(), bad),
    ])
}

fn g_equivalence() -> Outcome {
    let g = functor_g(&projective_r(&comp(&[2, 1])).map_err(|e| e.to_string())?, 3).map_err(|e| e.to_string())?;
    all(vec![suites("thm-4.9", &[(2, 3), (3, 3), (2, 4)]), expect("dim G(R_21) at n = 3", 8, g.dim())])
}

fn cartan() -> Outcome {
    all(vec![
        suites("cartan-restriction", &[(2, 2), (1, 3), (2, 3), (3, 3), (2, 4), (4, 4)]),
        suites("cartan-symmetries", &[(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
        suites("orbit-constancy", &[(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
    ])
}

fn hecke() -> Outcome {
    let upto = |k: usize| (1..=k).map(|r| (1, r)).collect::<Vec<_>>();
    all(vec![
        suites("hecke-foundations", &upto(6)),
        suites("bjorner-wachs", &upto(5)),
        suites("frobenius", &upto(5)),
        suites("twist-table", &upto(4)),
    ])
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "P_210 basis and action graph", Box::new(p_210_graph)),
        (2, "S_210 basis and action chain", Box::new(s_210_graph)),
        (3, "simplicity", Box::new(|| suites("simplicity", BOTH))),
        (4, "radical", Box::new(|| suites("radical", BOTH))),
        (5, "socle", Box::new(|| suites("socle", BOTH))),
        (6, "dimension bookkeeping", Box::new(bookkeeping)),
        (7, "ψ images and relations", Box::new(|| suites("lemma-4.6", &[(2, 2), (2, 3), (3, 3)]))),
        (8, "descendant example", Box::new(descendants)),
        (9, "quasi-ribbon examples", Box::new(quasi_ribbon)),
        (10, "G on simples and projectives", Box::new(g_equivalence)),
        (11, "Cartan suites", Box::new(cartan)),
        (12, "orbit census", Box::new(|| suites("orbit-examples", &[(0, 4)]))),
        (13, "Hecke foundations", Box::new(hecke)),
        (14, "multiplicity bridge", Box::new(|| suites("multiplicity-bridge", &[(2, 3), (2, 4), (3, 3)]))),
    ];
    let mut failed = 0;
    for (k, name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {k:>2} PASS  {name} ({secs:.2}s): {note}"),
            Err(why) => {
                failed += 1;
                println!("criterion {k:>2} FAIL  {name} ({secs:.2}s): {why}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
