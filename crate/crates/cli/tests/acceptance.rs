//! Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fails.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use extri_cli::{cmd_check, cmd_realize, load};
use extri_core::axiomlab::{replay, run_suite, Report, Suite};
use extri_core::karoubi::{f_space, kar_hom_basis};
use extri_core::quiverrep::{ExtSpace, Search};
use extri_core::weakcomp::WeakCompletion;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Plain enumeration over F_p for a single-arrow quiver 0 -> 1, kept apart from the library.
mod brute {
    pub type Mat = Vec<Vec<u32>>;

    pub struct Plain {
        pub dims: [usize; 2],
        pub arrow: Mat,
    }

    fn mul(p: u32, a: &Mat, b: &Mat, rows: usize, inner: usize, cols: usize) -> Mat {
        (0..rows)
            .map(|i| (0..cols).map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum::<u32>() % p).collect())
            .collect()
    }

    fn all(p: u32, rows: usize, cols: usize) -> Vec<Mat> {
        let total = (p as usize).pow((rows * cols) as u32);
        (0..total)
            .map(|mut code| {
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| {
                                let x = (code % p as usize) as u32;
                                code /= p as usize;
                                x
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn log_p(p: u32, n: usize) -> usize {
        let (mut d, mut c) = (0, 1);
        while c < n {
            c *= p as usize;
            d += 1;
        }
        assert_eq!(c, n);
        d
    }

    fn pairs(p: u32, m: &Plain, n: &Plain) -> Vec<(Mat, Mat)> {
        let mut out = Vec::new();
        for f0 in all(p, n.dims[0], m.dims[0]) {
            for f1 in all(p, n.dims[1], m.dims[1]) {
                out.push((f0.clone(), f1));
            }
        }
        out
    }

    fn boundary(p: u32, m: &Plain, n: &Plain, f: &(Mat, Mat)) -> Mat {
        let l = mul(p, &f.1, &m.arrow, n.dims[1], m.dims[1], m.dims[0]);
        let r = mul(p, &n.arrow, &f.0, n.dims[1], n.dims[0], m.dims[0]);
        l.iter().zip(&r).map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect()).collect()
    }

    fn zero(m: &Mat) -> bool {
        m.iter().flatten().all(|&x| x == 0)
    }

    /// Classes `q·β·p` with `β` running over all cocycles `m -> n`.
    pub fn ext(p: u32, m: &Plain, n: &Plain, pm: &[Mat; 2], qn: &[Mat; 2]) -> usize {
        let bounds: std::collections::BTreeSet<Mat> = pairs(p, m, n).iter().map(|f| boundary(p, m, n, f)).collect();
        let mut classes = std::collections::BTreeSet::new();
        for beta in all(p, n.dims[1], m.dims[0]) {
            let moved = mul(p, &mul(p, &qn[1], &beta, n.dims[1], n.dims[1], m.dims[0]), &pm[0], n.dims[1], m.dims[0], m.dims[0]);
            let coset: std::collections::BTreeSet<Mat> = bounds
                .iter()
                .map(|b| moved.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + y) % p).collect()).collect())
                .collect();
            classes.insert(coset);
        }
        log_p(p, classes.len())
    }

    /// Morphisms `σ` with `σ = q·σ·p`.
    pub fn hom(p: u32, m: &Plain, n: &Plain, pm: &[Mat; 2], qn: &[Mat; 2]) -> usize {
        let count = pairs(p, m, n)
            .iter()
            .filter(|f| zero(&boundary(p, m, n, f)))
            .filter(|f| {
                let fv = [&f.0, &f.1];
                (0..2).all(|v| {
                    let moved = mul(p, &mul(p, &qn[v], fv[v], n.dims[v], n.dims[v], m.dims[v]), &pm[v], n.dims[v], m.dims[v], m.dims[v]);
                    &moved == fv[v]
                })
            })
            .count();
        log_p(p, count)
    }
}

fn criterion_1() -> Outcome {
    use brute::Plain;
    let l = load(&fixture("a2_balanced.json")).map_err(|e| e.to_string())?;
    let g = l.object("G").map_err(|e| e.to_string())?;
    let ge = l.kar_object("G", Some("e")).map_err(|e| e.to_string())?;
    let gf = l.kar_object("G", Some("f")).map_err(|e| e.to_string())?;
    let got = [
        ExtSpace::new(g, g).dim(),
        f_space(&ge, &gf).dim(),
        f_space(&gf, &ge).dim(),
        kar_hom_basis(&ge, &ge).len(),
    ];

    let plain = Plain { dims: [1, 1], arrow: vec![vec![0]] };
    let one = [vec![vec![1]], vec![vec![1]]];
    let e = [vec![vec![1]], vec![vec![0]]];
    let f = [vec![vec![0]], vec![vec![1]]];
    let oracle = [
        brute::ext(2, &plain, &plain, &one, &one),
        brute::ext(2, &plain, &plain, &e, &f),
        brute::ext(2, &plain, &plain, &f, &e),
        brute::hom(2, &plain, &plain, &e, &e),
    ];
    const FROZEN: [usize; 4] = [1, 1, 0, 1];
    ensure(oracle == FROZEN, format!("oracle {oracle:?} differs from frozen {FROZEN:?}"))?;
    ensure(got == FROZEN, format!("library {got:?}, expected {FROZEN:?}"))?;
    Ok(format!("E(G,G)={} F(Ge,Gf)={} F(Gf,Ge)={} Hom(Ge,Ge)={}", got[0], got[1], got[2], got[3]))
}

fn check_with(config: &Path, seed: Option<u64>, trials: Option<u64>, suite: Option<&str>, dir: &Path) -> Result<(i32, Report), String> {
    let path = dir.join(format!("report-{}-{}.json", seed.unwrap_or(0), suite.unwrap_or("cfg")));
    let mut sink = Vec::new();
    let code = cmd_check(config, seed, trials, suite, &[], &path, &mut sink).map_err(|e| e.to_string())?;
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let report = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Ok((code, report))
}

fn criterion_2(dir: &Path) -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for seed in [0, 1] {
        let (code, report) = check_with(&fixture("a2_balanced.json"), Some(seed), Some(200), Some("all"), dir)?;
        if let Some(c) = report.checks.iter().find(|c| c.failed > 0) {
            let msg = c.failures.first().map(|f| f.message.as_str()).unwrap_or("");
            return Err(format!("seed {seed}: {} failed {} times: {msg}", c.name, c.failed));
        }
        ensure(code == 0, format!("seed {seed}: exit {code}"))?;
        ensure(report.config.primes == [2, 3], "primes are not {2,3}")?;
        ensure(report.config.quivers.len() == 2, "quivers are not A2, A3")?;
        ensure(report.config.max_vertex_dim == 3, "max dim is not 3")?;
        total += report.passed;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!("{total} trials passed in {:.1}s", elapsed.as_secs_f64()))
}

fn single(report: &Report, name: &str, trials: u64) -> Result<(), String> {
    let c = report.check(name).ok_or(format!("{name} missing"))?;
    if let Some(f) = c.failures.first() {
        return Err(format!("{name} trial {}: {}", f.trial, f.message));
    }
    ensure(c.passed == trials, format!("{name} passed {} of {trials}", c.passed))
}

fn criterion_3(dir: &Path) -> Outcome {
    let (_, report) = check_with(&fixture("a2_balanced.json"), Some(0), Some(100), Some("karoubi"), dir)?;
    single(&report, "karoubi.idempotent_split", 100)?;
    Ok("100 idempotents split with c∘r = σ and r∘c = 1".into())
}

fn criterion_4() -> Outcome {
    let l = load(&fixture("a2_balanced.json")).map_err(|e| e.to_string())?;
    let weak = WeakCompletion::new(l.category.clone());
    let ge = l.kar_object("G", Some("e")).map_err(|e| e.to_string())?;
    let split = weak.splits_in_base(ge.rep(), ge.idem()).map_err(|e| e.to_string())?;
    ensure(matches!(split, Search::NotFound), "(G,e) should not split in the base")?;
    let gg = l.kar_object("GG", Some("e_plus_f")).map_err(|e| e.to_string())?;
    let is_weak = weak.is_weak_object(&gg).map_err(|e| e.to_string())?;
    ensure(is_weak, "(G⊕G, e⊕f) should be a weak object")?;
    Ok("splits_in_base(G,e) = does not split; is_weak_object(G⊕G, e⊕f) = true".into())
}

fn criterion_5(dir: &Path) -> Outcome {
    let (_, karoubi) = check_with(&fixture("a2_balanced.json"), Some(0), Some(100), Some("karoubi"), dir)?;
    single(&karoubi, "karoubi.idem_fill", 100)?;
    let (_, weak) = check_with(&fixture("a2_balanced.json"), Some(0), Some(100), Some("weak"), dir)?;
    single(&weak, "weak.split_idem_fill", 100)?;
    Ok("idem_fill and split_idem_fill exact on 100 instances each".into())
}

fn criterion_6(dir: &Path) -> Outcome {
    let (code, report) = check_with(&fixture("a2_tamper_all.json"), None, None, None, dir)?;
    ensure(code == 1, format!("tampered run exited {code}"))?;
    ensure(report.config.suite == Suite::All, "tampered fixture does not run every suite")?;
    let (mut replayed, mut escaped) = (0, 0);
    for c in &report.checks {
        // degenerate samples (zero objects, zero groups) hide the perturbation, so some trials pass
        ensure(c.failed > 0, format!("{} passed every tampered trial", c.name))?;
        ensure(!c.failures.is_empty(), format!("{} recorded no payload", c.name))?;
        escaped += c.passed;
        for p in &c.failures {
            let again = replay(p).map_err(|e| e.to_string())?;
            ensure(
                again.as_deref() == Some(p.message.as_str()),
                format!("{} trial {} replays as {again:?}", p.check, p.trial),
            )?;
            replayed += 1;
        }
    }
    Ok(format!(
        "{} checks fail when tampered ({escaped} of {} trials escaped on degenerate samples); {replayed} payloads replay identically",
        report.checks.len(),
        report.config.trials * report.checks.len() as u64
    ))
}

fn criterion_7(dir: &Path) -> Outcome {
    let cfg = fixture("a3_balanced.json");
    let mut reports = Vec::new();
    for name in ["a", "b"] {
        let path = dir.join(format!("det-{name}.json"));
        let mut sink = Vec::new();
        cmd_check(&cfg, Some(3), Some(40), Some("all"), &[], &path, &mut sink).map_err(|e| e.to_string())?;
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(reports[0] == reports[1], "reports differ between identical runs")?;

    let direct = extri_core::axiomlab::TrialConfig {
        trials: 40,
        seed: 3,
        ..Default::default()
    };
    ensure(run_suite(&direct).to_json() == run_suite(&direct).to_json(), "in-process reports differ")?;

    let golden = include_str!("golden/realize_a2_ef.json");
    for _ in 0..2 {
        let mut out = Vec::new();
        cmd_realize(&fixture("a2_balanced.json"), "G", "G", &[1], Some("e"), Some("f"), &mut out).map_err(|e| e.to_string())?;
        ensure(out == golden.as_bytes(), "realize output differs from the golden file")?;
    }
    Ok(format!("reports byte-identical ({} bytes); realize matches golden", reports[0].len()))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("derived dimensions on the A2/F_2 fixture", Box::new(criterion_1)),
        ("full suite, seeds 0 and 1, zero failures", Box::new(|| criterion_2(dir.path()))),
        ("idempotent completeness of the completion", Box::new(|| criterion_3(dir.path()))),
        ("base is not idempotent complete", Box::new(criterion_4)),
        ("fill formulas hold exactly", Box::new(|| criterion_5(dir.path()))),
        ("negative controls fail and replay", Box::new(|| criterion_6(dir.path()))),
        ("determinism", Box::new(|| criterion_7(dir.path()))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
