//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints its own PASS/FAIL line; exits non-zero if any fails.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use weakstar::corpus::planar_corpus;
use weakstar::formats::planar_ledger_jsonl;
use weakstar::scan::{self, ScanConfig, Suite};
use weakstar_core::alon_tarsi::at_number;
use weakstar_core::calculus::{certifies, weak_star_degeneracy};
use weakstar_core::colouring::{parameter, solve_list_colouring, Parameter};
use weakstar_core::counterexamples::{build_gadget_h, build_glued_g, check_pair, forcing_report, COPIES};
use weakstar_core::graph::families;
use weakstar_core::planar::{
    check_nice, general_caps, general_certificate, nice_subgraph, planar_caps, planar_certificate, planar_embedding,
    MinorParams,
};
use weakstar_core::Budget;

const SCAN_BUDGET: u64 = weakstar::cli::SCAN_BUDGET;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn scan_clean(suite: Suite, max: usize) -> Check {
    let r = scan::run(suite, &ScanConfig { max, budget: SCAN_BUDGET, deterministic: false }).map_err(|e| e.to_string())?;
    let summary = format!("{} graphs, {} instances", r.graphs, r.instances);
    if r.clean() {
        Ok(summary)
    } else {
        Err(format!("{summary}: {} violations, {} unknown, first {:?}", r.violations.len(), r.unknown.len(),
            r.violations.first().or(r.unknown.first())))
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let e = t.elapsed();
    if e <= limit {
        Ok(e)
    } else {
        Err(format!("{what} took {e:.1?}, limit {limit:?}"))
    }
}

fn counterexample() -> Check {
    let t = Instant::now();
    let h = build_gadget_h().map_err(|e| e.to_string())?;
    if solve_list_colouring(&h.graph, &h.lists).is_some() {
        return Err("H is L-colourable".into());
    }
    let fr = forcing_report(&h);
    if fr.h3_colourings != 0 {
        return Err(format!("forcing chain leaves {} colourings", fr.h3_colourings));
    }
    let th = within(t, Duration::from_secs(5), "H")?;
    let t = Instant::now();
    let g = build_glued_g(&h).map_err(|e| e.to_string())?;
    let refuted = (0..COPIES).into_par_iter().filter(|&i| check_pair(&g, i).refuted()).count();
    let tg = within(t, Duration::from_secs(60), "G42")?;
    if refuted != COPIES {
        return Err(format!("{refuted}/{COPIES} pairs refuted"));
    }
    Ok(format!("H {th:.1?}, G ({} vertices) 42/42 refuted in {tg:.1?}", g.graph.n()))
}

fn degree_choosability() -> Check {
    let t = Instant::now();
    let s = scan_clean(Suite::DegreeChoosability, 6)?;
    within(t, Duration::from_secs(600), "scan").map(|e| format!("{s} in {e:.1?}"))
}

fn spot_values() -> Check {
    let mut b = Budget::new(weakstar_core::DEFAULT_NODE_BUDGET);
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Result<i64, String>, want: i64| match got {
        Ok(v) if v == want => {}
        other => bad.push(format!("{what}: {other:?}, want {want}")),
    };
    for n in 1..=4 {
        expect(format!("wd*(K{n})"), weak_star_degeneracy(&families::complete(n), &mut b).map_err(|e| e.to_string()), n as i64);
    }
    for n in [4, 5] {
        expect(format!("wd*(C{n})"), weak_star_degeneracy(&families::cycle(n), &mut b).map_err(|e| e.to_string()), 3);
    }
    expect("AT(C4)".into(), at_number(&families::cycle(4), &mut b).map_err(|e| e.to_string()), 2);
    expect("AT(C3)".into(), at_number(&families::cycle(3), &mut b).map_err(|e| e.to_string()), 3);
    expect(
        "chi_DPP(C4)".into(),
        parameter(&families::cycle(4), Parameter::ChiDpp, &mut b).map_err(|e| e.to_string()),
        3,
    );
    if bad.is_empty() {
        Ok("9 values".into())
    } else {
        Err(bad.join("; "))
    }
}

fn planar() -> Check {
    let corpus = planar_corpus();
    let results: Vec<Result<(), String>> = corpus
        .par_iter()
        .map(|(name, g)| {
            let t = Instant::now();
            let emb = planar_embedding(g).map_err(|e| format!("{name}: {e}"))?;
            let c = planar_certificate(g, &emb).map_err(|e| format!("{name}: {e}"))?;
            if !certifies(g, &planar_caps(g), &c.ops) {
                return Err(format!("{name}: certificate rejected"));
            }
            if planar_ledger_jsonl(g, &c).lines().any(|l| !l.contains("\"invariants\":\"ok\"")) {
                return Err(format!("{name}: ledger round not clean"));
            }
            within(t, Duration::from_secs(30), name).map(|_| ())
        })
        .collect();
    let errs: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    if errs.is_empty() {
        Ok(format!("{} graphs", corpus.len()))
    } else {
        Err(errs.join("; "))
    }
}

fn general_and_nice() -> Check {
    let params = MinorParams::new(3, 3).map_err(|e| e.to_string())?;
    if params.q != 69_121 || params.k != 6_635_616 {
        return Err(format!("q = {}, k = {}", params.q, params.k));
    }
    let corpus = planar_corpus();
    let errs: Vec<String> = corpus
        .par_iter()
        .filter_map(|(name, g)| {
            let check = || -> Result<(), String> {
                let c = general_certificate(g, &params).map_err(|e| e.to_string())?;
                if !certifies(g, &general_caps(g, &params), &c.ops) {
                    return Err("general certificate rejected".into());
                }
                let emb = planar_embedding(g).map_err(|e| e.to_string())?;
                let anchor = emb.faces()[emb.outer_face()].vertices[0];
                let ns = nice_subgraph(&emb, anchor).map_err(|e| e.to_string())?;
                check_nice(&emb, &ns.vertices, ns.anchor, &ns.edges).map_err(|e| e.to_string())
            };
            check().err().map(|e| format!("{name}: {e}"))
        })
        .collect();
    if errs.is_empty() {
        Ok(format!("{} graphs, q = 69121, k = 6635616, nice subgraphs valid", corpus.len()))
    } else {
        Err(errs.join("; "))
    }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 gadget H and glued G", counterexample),
        ("2 degree-choosability characterisation, n <= 6", degree_choosability),
        ("3 parameter hierarchy, n <= 4", || scan_clean(Suite::Hierarchy, 4)),
        ("4 weak* implies DP-paintable and AT, n <= 4", || scan_clean(Suite::WeakStarTransfer, 4)),
        ("5 coefficient equals Eulerian difference, m <= 8", || scan_clean(Suite::AtIdentity, 8)),
        ("6 spot values", spot_values),
        ("7 planar certificates", planar),
        ("8 general pipeline and nice subgraphs", general_and_nice),
        ("9 certificate splitting, n <= 4", || scan_clean(Suite::Splits, 4)),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{:.1?}]", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{:.1?}]", t.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
