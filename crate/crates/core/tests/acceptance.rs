//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use goodcubic_core::generators::{self, double_bracelet, inflate, insert_diamond, necklace, random_cubic};
use goodcubic_core::oracle::{count_spanning_trees, oracle_decompose, spanning_trees, OracleOutcome};
use goodcubic_core::recognition::unit_partition;
use goodcubic_core::{
    decompose, decompose_with, lemma2_check, reroute_cycle, reroute_frame, verify, DecomposeOptions, Decomposition,
    Edge, EdgeLabel, Graph,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sound(name: &str, g: &Graph) -> Result<Decomposition, String> {
    let d = decompose(g).map_err(|e| format!("{name}: {e}"))?;
    let report = verify(g, &d);
    ensure(report.pass(), || format!("{name}: {:?}", report.failures))?;
    Ok(d)
}

fn soundness_fixtures() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K4".to_string(), generators::k4()),
        ("prism".to_string(), generators::prism()),
    ];
    for k in 2..=10 {
        out.push((format!("N_{k}"), necklace(k).unwrap()));
    }
    let mut seed = 0u64;
    let mut inflations = 0;
    while inflations < 200 {
        let n = 4 + 2 * (seed as usize % 10);
        let g = inflate(&random_cubic(n, seed).unwrap()).unwrap();
        if g.is_connected() {
            out.push((format!("inflate(random_cubic({n}, {seed}))"), g));
            inflations += 1;
        }
        seed += 1;
    }
    for k in 1..=3 {
        for j in 1..=3 {
            out.push((format!("double_bracelet({k},{j})"), double_bracelet(k, j).unwrap()));
        }
    }
    let inflated = inflate(&generators::k4()).unwrap();
    out.push(("diamond between distinct triangles".to_string(), insert_diamond(&inflated, Edge::new(0, 3)).unwrap()));
    out.push(("diamond with a common triangle".to_string(), double_bracelet(1, 2).unwrap()));
    out
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let fixtures = soundness_fixtures();
    for (name, g) in &fixtures {
        sound(name, g)?;
    }
    // the two single-diamond configurations must actually occur
    let steps = |g: &Graph| decompose_with(g, DecomposeOptions::default()).unwrap().steps;
    let inflated = inflate(&generators::k4()).unwrap();
    let distinct = steps(&insert_diamond(&inflated, Edge::new(0, 3)).unwrap());
    ensure(distinct.iter().any(|s| s.name() == "SingleDiamond"), || "no SingleDiamond step".into())?;
    let common = steps(&double_bracelet(1, 1).unwrap());
    ensure(common.iter().any(|s| s.name() == "CutEdge"), || "no CutEdge step".into())?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("{} fixtures in {took:.2?}", fixtures.len()))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (name, g) in common::small_corpus() {
        for seed in 0..3 {
            let g = if seed == 0 { g.clone() } else { common::shuffled(&g, seed) };
            let r = oracle_decompose(&g).map_err(|e| format!("{name}: {e}"))?;
            let OracleOutcome::Found(d) = r.outcome else {
                return Err(format!("oracle found nothing on {name}"));
            };
            ensure(verify(&g, &d).pass(), || format!("{name}: oracle certificate fails"))?;
            sound(name, &g)?;
            checked += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("{checked} labeled graphs with n <= 14 in {took:.2?}"))
}

fn criterion3() -> Outcome {
    for n in 3..=12 {
        let r = oracle_decompose(&generators::cycle(n).unwrap()).map_err(|e| e.to_string())?;
        ensure(r.outcome == OracleOutcome::None, || format!("C_{n} was decomposed"))?;
    }
    Ok("C_3 .. C_12 have no decomposition with nonempty O".into())
}

fn criterion4() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = soundness_fixtures();
    graphs.extend(common::small_corpus().into_iter().map(|(n, g)| (n.to_string(), g)));
    let mut certificates = 0;
    for (name, g) in &graphs {
        if g.n() == 4 {
            continue;
        }
        let p = unit_partition(g).map_err(|e| format!("{name}: {e}"))?;
        let mut ds = vec![sound(name, g)?];
        if g.n() <= 14 {
            if let Some(d) = oracle_decompose(g).unwrap().found() {
                ds.push(d.clone());
            }
        }
        for d in ds {
            let v = lemma2_check(g, &d, &p);
            ensure(v.is_empty(), || format!("{name}: {v:?}"))?;
            certificates += 1;
        }
    }
    Ok(format!("{certificates} certificates without violations"))
}

fn criterion5() -> Outcome {
    let opts = DecomposeOptions {
        verify_each_step: false,
        harvest_reroutes: true,
    };
    let mut instances = Vec::new();
    let mut seed = 0;
    while instances.len() < 150 && seed < 5000 {
        let g = common::random_claw_free(2 + 2 * (seed as usize % 10), (seed as usize / 10) % 6, seed);
        instances.extend(decompose_with(&g, opts).map_err(|e| e.to_string())?.reroutes);
        seed += 1;
    }
    ensure(instances.len() >= 100, || format!("only {} instances", instances.len()))?;
    for (i, inst) in instances.iter().enumerate() {
        let (g, d, e) = (&inst.graph, &inst.decomposition, inst.edge);
        let frame = reroute_frame(g, d, e).map_err(|err| format!("instance {i}: {err}"))?;
        let out = reroute_cycle(g, d, e).map_err(|err| format!("instance {i}: {err}"))?;
        let report = verify(g, &out);
        ensure(report.pass(), || format!("instance {i}: {:?}", report.failures))?;
        ensure(out.get(e) != Some(EdgeLabel::O), || format!("instance {i}: {e} still in O"))?;
        let touched = frame.touched_edges();
        for edge in g.edges() {
            if d.get(edge) != out.get(edge) {
                ensure(touched.binary_search(&edge).is_ok(), || format!("instance {i}: {edge} changed"))?;
            }
        }
    }
    Ok(format!("{} harvested instances", instances.len()))
}

fn criterion6() -> Outcome {
    let k4 = spanning_trees(&generators::k4()).unwrap().count();
    ensure(k4 == 16, || format!("K4 has {k4} trees"))?;
    let prism = generators::prism();
    let enumerated = count_spanning_trees(&prism).unwrap() as i128;
    let det = common::matrix_tree_count(&prism);
    ensure(det == 75 && enumerated == det, || format!("prism: {enumerated} vs {det}"))?;
    ensure(common::matrix_tree_count(&generators::k4()) == 16, || "determinant of K4".into())?;
    Ok(format!("K4 {k4}, prism {enumerated} = det {det}"))
}

fn criterion7() -> Outcome {
    let g = inflate(&random_cubic(10_000, 2024).unwrap()).unwrap();
    ensure(g.is_connected(), || "sample graph is disconnected".into())?;
    let start = Instant::now();
    sound("inflated 30000", &g)?;
    let big = start.elapsed();
    ensure(big < Duration::from_secs(5), || format!("decompose took {big:?}"))?;
    let start = Instant::now();
    let mut slowest = Duration::ZERO;
    for (name, g) in common::small_corpus().into_iter().filter(|(_, g)| g.n() == 14) {
        let t = Instant::now();
        oracle_decompose(&g).map_err(|e| format!("{name}: {e}"))?;
        slowest = slowest.max(t.elapsed());
    }
    let oracle = start.elapsed();
    ensure(oracle < Duration::from_secs(60), || format!("oracle took {oracle:?}"))?;
    Ok(format!("decompose n={} in {big:.2?}; oracle n=14 at most {slowest:.2?}", g.n()))
}

fn render(g: &Graph) -> (String, String) {
    let out = decompose_with(g, DecomposeOptions::default()).unwrap();
    let cert: String = out.decomposition.iter().map(|(e, l)| format!("{e}:{l}\n")).collect();
    let trace: String = out.steps.iter().map(|s| format!("{s}\n")).collect();
    (cert, trace)
}

fn criterion8() -> Outcome {
    let mut graphs: Vec<Graph> = (0..20).map(|s| common::random_claw_free(12, 4, s)).collect();
    graphs.push(inflate(&random_cubic(200, 3).unwrap()).unwrap());
    for (i, g) in graphs.iter().enumerate() {
        ensure(render(g) == render(g), || format!("graph {i} differs between runs"))?;
        let oracle = |g: &Graph| oracle_decompose(g).unwrap();
        if g.n() <= 14 {
            ensure(oracle(g) == oracle(g), || format!("oracle differs on graph {i}"))?;
        }
    }
    Ok(format!("{} graphs rendered identically twice", graphs.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("certificate soundness", criterion1),
        ("oracle agreement", criterion2),
        ("cycles are counterexamples", criterion3),
        ("cycle structure diagnostics", criterion4),
        ("reroute contract", criterion5),
        ("spanning tree counts", criterion6),
        ("performance", criterion7),
        ("determinism", criterion8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
