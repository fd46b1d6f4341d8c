//! Desk-scale acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use oricycle::constructions::{blowup_cycle, extremal_3cycle_vertex, random_min_semidegree};
use oricycle::finders::{
    find_3cycle_through, find_4cycle_through, find_5cycle_through, find_6cycle_through, CycleWitness,
    FinderError, FinderOptions, FinderReport,
};
use oricycle::oracle::{
    enumerate_oriented, ex_di_brute, ex_di_formula, has_closed_walk, has_cycle_exact,
    random_split_experiment, threshold_search, Provenance, SplitExperimentConfig, SplitTarget,
    ThresholdOptions, ThresholdRecord,
};
use oricycle::rng::task_rng;
use oricycle::walks::{closed_walk_of_length, cycle_type, grow_reachable, pattern_to_walk, winding_plan};
use oricycle::walks::{CyclePattern, StopReason, Step, WalkError};
use oricycle::{Budget, Mode, OrientedGraph, SearchOutcome};

const SEED: u64 = 20_091;
const SAMPLES: u64 = 1_000;
const SAMPLE_ORDERS: std::ops::RangeInclusive<usize> = 7..=40;
const MAX_CYCLE_CHECK: Duration = Duration::from_secs(1);
const MAX_FINDER_RUN: Duration = Duration::from_secs(300);
const MAX_DENSITY_RUN: Duration = Duration::from_secs(10);
const MAX_SPLIT_RUN: Duration = Duration::from_secs(120);
const WALK_LENGTHS: std::ops::RangeInclusive<usize> = 2..=10;
const MAX_RANDOM_WALK_ORDER: usize = 12;
const MAX_PATTERN_LEN: usize = 8;
const SPLIT_ORDER: usize = 3000;
const SPLIT_TRIALS: u64 = 10_000;
const SPLIT_MARGIN: f64 = 0.02;
const SPLIT_MAX_FREQUENCY: f64 = 1e-2;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_order(task: u64) -> usize {
    let mut rng = task_rng(SEED, task);
    rng.gen_range(SAMPLE_ORDERS)
}

fn criterion_1() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 7..=15 {
        let g = blowup_cycle(3, n).map_err(|e| e.to_string())?;
        ensure(g.min_semidegree() == n / 3, || format!("n = {n}: semidegree {}", g.min_semidegree()))?;
        for ell in [4, 5] {
            let start = Instant::now();
            let out = has_cycle_exact(&g, ell, None, Budget::unlimited()).map_err(|e| e.to_string())?;
            let took = start.elapsed();
            slowest = slowest.max(took);
            ensure(out.is_absent(), || format!("n = {n}: {ell}-cycle reported ({out:?})"))?;
            ensure(took < MAX_CYCLE_CHECK, || format!("n = {n}, ell = {ell}: took {took:?}"))?;
        }
    }
    Ok(format!("n = 7..15, no 4- or 5-cycle, slowest check {slowest:?}"))
}

type Finder = fn(&OrientedGraph, usize, &FinderOptions) -> Result<FinderReport<CycleWitness>, FinderError>;

fn check_finders(g: &OrientedGraph, finders: &[(usize, Finder)], label: &str) -> Result<usize, String> {
    let opts = FinderOptions { fallback: false, ..FinderOptions::default() };
    let mut calls = 0;
    for &(ell, finder) in finders {
        if ell > g.order() {
            continue;
        }
        for x in 0..g.order() {
            let r = finder(g, x, &opts).map_err(|e| format!("{label}: {e}"))?;
            let w = r.witness.ok_or_else(|| format!("{label}: no {ell}-cycle through {x}: {:?}", r.trace))?;
            w.validate(g).map_err(|e| format!("{label}: bad {ell}-cycle witness {w:?}: {e}"))?;
            ensure(w.len() == ell && w.vertices[0] == x, || format!("{label}: witness {w:?}"))?;
            calls += 1;
        }
    }
    Ok(calls)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let finders: [(usize, Finder); 3] =
        [(4, find_4cycle_through), (5, find_5cycle_through), (6, find_6cycle_through)];
    let mut calls = 0;
    for i in 0..SAMPLES {
        let n = sample_order(i);
        let g = random_min_semidegree(n, n / 3 + 1, SEED + i).map_err(|e| e.to_string())?;
        calls += check_finders(&g, &finders, &format!("sample {i} (n = {n})"))?;
    }
    let mut small = 0;
    for n in 4..=6 {
        for g in enumerate_oriented(n, n / 3 + 1).map_err(|e| e.to_string())? {
            calls += check_finders(&g, &finders, &format!("enumerated n = {n}"))?;
            small += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < MAX_FINDER_RUN, || format!("took {took:?}"))?;
    Ok(format!("{SAMPLES} samples + {small} enumerated graphs, {calls} finder calls, 0 failures, {took:?}"))
}

fn criterion_3() -> Outcome {
    let finders: [(usize, Finder); 1] = [(3, find_3cycle_through)];
    let mut calls = 0;
    let mut skipped = 0;
    for i in 0..SAMPLES {
        let mut n = sample_order(i);
        while (2 * n).div_ceil(5) > (n - 1) / 2 {
            n += 1;
            skipped += 1;
        }
        let d = (2 * n).div_ceil(5);
        let g = random_min_semidegree(n, d, SEED ^ (i << 20)).map_err(|e| e.to_string())?;
        calls += check_finders(&g, &finders, &format!("sample {i} (n = {n})"))?;
    }
    for m in 2..=4 {
        let ex = extremal_3cycle_vertex(m).map_err(|e| e.to_string())?;
        let n = ex.graph.order();
        ensure(n == 5 * m - 1, || format!("m = {m}: order {n}"))?;
        let semi = ex.graph.min_semidegree();
        ensure(semi == 2 * n / 5 && semi == 2 * m - 1, || format!("m = {m}: semidegree {semi}"))?;
        let out = has_cycle_exact(&ex.graph, 3, Some(ex.u), Budget::unlimited()).map_err(|e| e.to_string())?;
        ensure(out.is_absent(), || format!("m = {m}: 3-cycle through u ({out:?})"))?;
    }
    Ok(format!("{calls} finder calls ({skipped} vacuous draws moved up), extremal m = 2..4 certified"))
}

fn random_graph(n: usize, task: u64) -> OrientedGraph {
    let mut rng = task_rng(SEED ^ 0xC4, task);
    if task % 2 == 0 {
        let d = rng.gen_range(0..=(n - 1) / 2);
        return random_min_semidegree(n, d, rng.gen()).expect("d within cap");
    }
    let p: f64 = rng.gen_range(0.05..0.45);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let r: f64 = rng.gen();
            if r < p {
                edges.push((u, v));
            } else if r < 2.0 * p {
                edges.push((v, u));
            }
        }
    }
    OrientedGraph::from_edge_list(n, &edges, Mode::Oriented).expect("oriented by construction")
}

fn check_walks(g: &OrientedGraph, label: &str) -> Result<(), String> {
    for ell in WALK_LENGTHS {
        let expected = has_closed_walk(g, ell).map_err(|e| e.to_string())?;
        let w = closed_walk_of_length(g, ell).map_err(|e| format!("{label}: {e}"))?;
        ensure(w.is_some() == expected, || format!("{label}, ell = {ell}: oracle {expected}, walk {w:?}"))?;
        if let Some(w) = w {
            ensure(w.is_valid_in(g) && w.len() == ell, || format!("{label}, ell = {ell}: invalid {w:?}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut graphs = 0;
    for n in 1..=5 {
        for g in enumerate_oriented(n, 0).map_err(|e| e.to_string())? {
            check_walks(&g, &format!("{g:?}"))?;
            graphs += 1;
        }
    }
    for i in 0..SAMPLES {
        let n = 3 + (i as usize % (MAX_RANDOM_WALK_ORDER - 2));
        check_walks(&random_graph(n, i), &format!("random graph {i}"))?;
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, lengths {WALK_LENGTHS:?}, 0 discrepancies"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for ell in 3..=500 {
        for t in 1..=50 {
            let a = ell / (t + 1);
            let r = ell % (t + 1);
            match winding_plan(ell, t) {
                Ok(p) => {
                    ensure(a >= r, || format!("({ell}, {t}): plan {p:?} although r > a"))?;
                    ensure(p.r * (t + 2) + (p.a - p.r) * (t + 1) == ell && p.r <= p.a, || {
                        format!("({ell}, {t}): plan {p:?}")
                    })?;
                }
                Err(WalkError::NoPlan { .. }) => ensure(a < r, || format!("({ell}, {t}): no plan"))?,
                Err(WalkError::BadParams(_)) => ensure(ell < t + 1, || format!("({ell}, {t}): rejected"))?,
                Err(e) => return Err(format!("({ell}, {t}): {e}")),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs, 0 violations"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let brute = ex_di_brute(3, 4).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let formula = ex_di_formula(3, 4);
    ensure(brute == 8 && formula == 8.0, || format!("brute {brute}, formula {formula}"))?;
    ensure(took < MAX_DENSITY_RUN, || format!("took {took:?}"))?;
    Ok(format!("brute 8 = formula 8, {took:?}"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for len in 3..=MAX_PATTERN_LEN {
        for code in 0u32..1 << len {
            let steps = (0..len).map(|i| if code >> i & 1 == 0 { Step::F } else { Step::B }).collect();
            let p = CyclePattern::new(steps).map_err(|e| e.to_string())?;
            let shape = pattern_to_walk(&p);
            ensure(shape.is_homomorphism_of(&p), || format!("{p}: {shape:?}"))?;
            let t = cycle_type(&p);
            ensure(cycle_type(&p.reversed()) == t, || format!("{p}: reversal changes type"))?;
            for k in 0..len {
                ensure(cycle_type(&p.rotated(k)) == t, || format!("{p}: rotation {k} changes type"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} patterns, 0 violations"))
}

fn criterion_8() -> Outcome {
    let mut summary = Vec::new();
    for n in [20, 40, 100] {
        let g = blowup_cycle(4, n).map_err(|e| e.to_string())?;
        ensure(g.min_semidegree() == n / 4, || format!("n = {n}: semidegree {}", g.min_semidegree()))?;
        let three = has_cycle_exact(&g, 3, None, Budget::unlimited()).map_err(|e| e.to_string())?;
        ensure(three.is_absent(), || format!("n = {n}: 3-cycle ({three:?})"))?;
        for x in 0..n {
            let r = grow_reachable(&g, x, true).map_err(|e| e.to_string())?;
            ensure(matches!(r.stop, StopReason::ExceededHalf { i } if i <= 3), || {
                format!("n = {n}, x = {x}: {:?} sizes {:?}", r.stop, r.sizes())
            })?;
        }
        let diam = g.diameter().ok_or_else(|| format!("n = {n}: not strongly connected"))?;
        ensure(diam <= 6, || format!("n = {n}: diameter {diam}"))?;
        summary.push(format!("n={n} diam={diam}"));
    }
    Ok(summary.join(", "))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let g = blowup_cycle(3, SPLIT_ORDER).map_err(|e| e.to_string())?;
    let cfg = SplitExperimentConfig { trials: SPLIT_TRIALS, target: SplitTarget::Fraction { f: 1.0 / 3.0 - SPLIT_MARGIN } };
    let r = random_split_experiment(&g, &cfg, SEED).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let freq = r.split_failure_frequency.unwrap_or(0.0);
    let detail = format!(
        "{} of {} splits below {:.1} (frequency {freq:.4}, limit {SPLIT_MAX_FREQUENCY}), {took:?}",
        r.split_failures, r.trials, r.target_bound
    );
    ensure(took < MAX_SPLIT_RUN, || format!("took {took:?}"))?;
    ensure(freq < SPLIT_MAX_FREQUENCY, || detail.clone())?;
    Ok(detail)
}

fn threshold_with_jobs(n: usize, jobs: usize) -> Result<ThresholdRecord, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
    pool.install(|| threshold_search(3, n, &ThresholdOptions { seed: SEED, ..ThresholdOptions::default() }))
        .map_err(|e| e.to_string())
}

fn criterion_10() -> Outcome {
    let mut cells = Vec::new();
    for n in 4..=6 {
        let r = threshold_with_jobs(n, 1)?;
        for jobs in [2, 4] {
            let other = threshold_with_jobs(n, jobs)?;
            ensure(other == r, || format!("n = {n}: jobs {jobs} gives {other:?}, jobs 1 gives {r:?}"))?;
        }
        ensure(r.exhaustive && r.lower == r.upper, || format!("n = {n}: {r:?}"))?;
        ensure(r.lower_provenance == Provenance::Exhaustive, || format!("n = {n}: {r:?}"))?;
        let w = r.lower_witness.as_ref().ok_or_else(|| format!("n = {n}: no witness"))?;
        ensure(w.min_semidegree() == r.witness_semidegree && r.lower == r.witness_semidegree + 1, || {
            format!("n = {n}: witness semidegree {}", w.min_semidegree())
        })?;
        let out = has_cycle_exact(w, 3, None, Budget::unlimited()).map_err(|e| e.to_string())?;
        ensure(out.is_absent(), || format!("n = {n}: witness has a 3-cycle"))?;
        for g in enumerate_oriented(n, r.upper).map_err(|e| e.to_string())? {
            let out = has_cycle_exact(&g, 3, None, Budget::unlimited()).map_err(|e| e.to_string())?;
            ensure(matches!(out, SearchOutcome::Found(_)), || format!("n = {n}: {g:?} at upper has no 3-cycle"))?;
        }
        cells.push(format!("n={n}: {}", r.upper));
    }
    Ok(format!("exhaustive thresholds {}, identical for 1/2/4 jobs", cells.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("extremal sharpness for 4- and 5-cycles", criterion_1),
        ("4/5/6-cycle finder completeness", criterion_2),
        ("3-cycle degree bound and its extremal graph", criterion_3),
        ("closed walk witness iff matrix oracle", criterion_4),
        ("winding arithmetic", criterion_5),
        ("digraph density formula at n = 4", criterion_6),
        ("pattern homomorphisms and cycle-type invariance", criterion_7),
        ("reachable-set growth on 4-cycle blow-ups", criterion_8),
        ("random half-split concentration", criterion_9),
        ("exhaustive 3-cycle thresholds", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
