//! Invariant suites over every small connected graph.
//!
//! Each suite checks one family of implications between the exact oracles
//! and reports violations with the graph (graph6) and capacities needed to
//! reproduce them. Graphs are independent, so they are checked on the
//! rayon pool; `deterministic` runs them in order on one thread. Results
//! come back in enumeration order either way.

use rayon::prelude::*;
use serde::Serialize;
use weakstar_core::alon_tarsi::{
    at_number, certificate_to_at_orientation, coefficient, eulerian_diff, eulerian_diff_weighted, is_f_at,
    Orientation,
};
use weakstar_core::blocks::{is_gallai_tree, is_gdp_tree};
use weakstar_core::calculus::{
    certificate_split, certifies, check_split, decide_strict_weak, decide_weak_star, strict_degeneracy,
    strict_weak_degeneracy, weak_star_degeneracy,
};
use weakstar_core::colouring::{is_dp_f_colourable, is_f_choosable, parameter, DpPainter, Parameter};
use weakstar_core::enumerate::{connected_graphs_up_to, graphs_by_edges};
use weakstar_core::{graph6, Budget, CapMap, Decision, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// parameter chain on constant capacities
    Hierarchy,
    /// degree-choosability against Gallai trees; DP and strict weak
    /// degree-degeneracy against GDP trees
    #[value(name = "theorem11")]
    #[serde(rename = "theorem11")]
    DegreeChoosability,
    /// weak* degenerate implies DP-paintable and Alon-Tarsi
    #[value(name = "theorem32")]
    #[serde(rename = "theorem32")]
    WeakStarTransfer,
    /// certificate splitting along g <= f
    Splits,
    /// graph-polynomial coefficients against Eulerian differences; here
    /// the size bound counts edges, not vertices
    AtIdentity,
}

impl Suite {
    /// Largest size bound accepted.
    pub fn max_size(self) -> usize {
        match self {
            Suite::Hierarchy => 5,
            Suite::DegreeChoosability => 6,
            Suite::WeakStarTransfer => 5,
            Suite::Splits => 5,
            Suite::AtIdentity => 9,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("size bound {asked} exceeds the limit {limit} for this suite")]
    TooLarge { asked: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caps: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second: Option<Vec<i64>>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ScanResult {
    pub graphs: usize,
    pub instances: u64,
    pub violations: Vec<Finding>,
    /// instances the node budget could not settle
    pub unknown: Vec<Finding>,
}

impl ScanResult {
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.unknown.is_empty()
    }

    fn absorb(&mut self, other: ScanResult) {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.unknown.extend(other.unknown);
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub max: usize,
    pub budget: u64,
    pub deterministic: bool,
}

pub fn run(suite: Suite, cfg: &ScanConfig) -> Result<ScanResult, ScanError> {
    if cfg.max > suite.max_size() {
        return Err(ScanError::TooLarge { asked: cfg.max, limit: suite.max_size() });
    }
    let graphs: Vec<Graph> = match suite {
        Suite::AtIdentity => graphs_by_edges(cfg.max).into_iter().flatten().collect(),
        _ => connected_graphs_up_to(cfg.max),
    };
    let check = |g: &Graph| -> ScanResult {
        let mut c = Checker { g, budget: cfg.budget, out: ScanResult { graphs: 1, ..Default::default() } };
        match suite {
            Suite::Hierarchy => c.hierarchy(),
            Suite::DegreeChoosability => c.degree_choosability(),
            Suite::WeakStarTransfer => c.weak_star_transfer(),
            Suite::Splits => c.splits(),
            Suite::AtIdentity => c.at_identity(),
        }
        c.out
    };
    let parts: Vec<ScanResult> = if cfg.deterministic {
        graphs.iter().map(check).collect()
    } else {
        graphs.par_iter().map(check).collect()
    };
    let mut total = ScanResult::default();
    for p in parts {
        total.absorb(p);
    }
    Ok(total)
}

/// Every map `v -> lo..=hi`, first coordinate fastest.
pub fn all_caps(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every map `v -> 0..=upper(v)`.
fn all_below(upper: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &u in upper {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=u).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

struct Checker<'a> {
    g: &'a Graph,
    budget: u64,
    out: ScanResult,
}

impl Checker<'_> {
    fn finding(&self, caps: Option<&[i64]>, second: Option<&[i64]>, detail: String) -> Finding {
        Finding {
            graph6: graph6::encode(self.g),
            caps: caps.map(<[i64]>::to_vec),
            second: second.map(<[i64]>::to_vec),
            detail,
        }
    }

    fn violation(&mut self, caps: Option<&[i64]>, second: Option<&[i64]>, detail: String) {
        let f = self.finding(caps, second, detail);
        self.out.violations.push(f);
    }

    fn unknown(&mut self, caps: Option<&[i64]>, detail: String) {
        let f = self.finding(caps, None, detail);
        self.out.unknown.push(f);
    }

    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }

    fn degree_choosability(&mut self) {
        let g = self.g;
        let deg = CapMap::degree(g);
        let d = deg.values();
        let gallai = is_gallai_tree(g).expect("scan graphs are connected");
        self.out.instances += 1;
        match is_f_choosable(g, &deg, &mut self.budget()) {
            Ok(o) if o.holds() == gallai => {
                self.violation(Some(d), None, format!("degree-choosable = {}, Gallai tree = {gallai}", o.holds()))
            }
            Ok(_) => {}
            Err(e) => self.unknown(Some(d), format!("choosability: {e}")),
        }
        if g.n() > 5 {
            return;
        }
        let gdp = is_gdp_tree(g).expect("scan graphs are connected");
        self.out.instances += 1;
        let dp = match is_dp_f_colourable(g, &deg, &mut self.budget()) {
            Ok(o) => o.holds(),
            Err(e) => return self.unknown(Some(d), format!("DP colouring: {e}")),
        };
        let sw = match decide_strict_weak(g, &deg, &mut self.budget()) {
            Decision::Yes(cert) => {
                if !certifies(g, &deg, &cert) {
                    self.violation(Some(d), None, "strict weak certificate does not verify".into());
                }
                true
            }
            Decision::No => false,
            Decision::Unknown(e) => return self.unknown(Some(d), format!("strict weak: {e}")),
        };
        if dp == gdp || sw == gdp {
            self.violation(Some(d), None, format!("DP-degree-colourable = {dp}, strict weak degree-degenerate = {sw}, GDP tree = {gdp}"));
        }
    }

    fn hierarchy(&mut self) {
        let g = self.g;
        self.out.instances += 1;
        let mut b = self.budget();
        let mut vals = Vec::new();
        for p in [Parameter::Ch, Parameter::ChiDp, Parameter::ChiP, Parameter::ChiDpp] {
            match parameter(g, p, &mut b) {
                Ok(v) => vals.push((p.name(), v)),
                Err(e) => return self.unknown(None, format!("{}: {e}", p.name())),
            }
        }
        let wd = match weak_star_degeneracy(g, &mut b) {
            Ok(v) => v,
            Err(e) => return self.unknown(None, format!("wd*: {e}")),
        };
        let swd = match strict_weak_degeneracy(g, &mut b) {
            Ok(v) => v,
            Err(e) => return self.unknown(None, format!("strict weak degeneracy: {e}")),
        };
        let at = match at_number(g, &mut b) {
            Ok(v) => v,
            Err(e) => return self.unknown(None, format!("AT: {e}")),
        };
        let sd = strict_degeneracy(g);
        let (ch, dp, p, dpp) = (vals[0].1, vals[1].1, vals[2].1, vals[3].1);
        let chains: [(&str, &[i64]); 3] = [
            ("ch <= chi_P <= chi_DPP <= wd* <= swd <= sd", &[ch, p, dpp, wd, swd, sd]),
            ("chi_P <= AT <= sd", &[p, at, sd]),
            ("ch <= chi_DP <= chi_DPP", &[ch, dp, dpp]),
        ];
        for (name, xs) in chains {
            if xs.windows(2).any(|w| w[0] > w[1]) {
                self.violation(None, None, format!("{name} fails with values {xs:?}"));
            }
        }
    }

    fn weak_star_transfer(&mut self) {
        let g = self.g;
        let mut painter = match DpPainter::new(g) {
            Ok(p) => p,
            Err(e) => return self.unknown(None, format!("DP painter: {e}")),
        };
        for f in all_caps(g.n(), 1, 4) {
            self.out.instances += 1;
            let cap = CapMap::new(f.clone());
            let cert = match decide_weak_star(g, &cap, &mut self.budget()) {
                Decision::Yes(c) => c,
                Decision::No => continue,
                Decision::Unknown(e) => {
                    self.unknown(Some(&f), format!("weak*: {e}"));
                    continue;
                }
            };
            if !certifies(g, &cap, &cert) {
                self.violation(Some(&f), None, "weak* certificate does not verify".into());
            }
            match painter.decide(&cap, &mut self.budget()) {
                Ok(true) => {}
                Ok(false) => self.violation(Some(&f), None, "weak* degenerate but not DP-paintable".into()),
                Err(e) => self.unknown(Some(&f), format!("DP painting: {e}")),
            }
            match is_f_at(g, &cap, &mut self.budget()) {
                Ok(Some(d)) => {
                    let out = d.out_degrees();
                    if out.iter().zip(&f).any(|(o, k)| o >= k) || eulerian_diff(&d) == 0 {
                        self.violation(Some(&f), None, "returned orientation is not an f-AT orientation".into());
                    }
                }
                Ok(None) => self.violation(Some(&f), None, "weak* degenerate but not f-AT".into()),
                Err(e) => self.unknown(Some(&f), format!("AT: {e}")),
            }
            // the orientation read off the certificate
            match certificate_to_at_orientation(g, &cap, &cert) {
                Ok((d, w)) => {
                    let out = d.out_weights(&w);
                    if out.iter().zip(&f).any(|(o, k)| o >= k) {
                        self.violation(Some(&f), None, "certificate orientation has out-weight >= f".into());
                    }
                    if eulerian_diff_weighted(&d, &w) == Ok(0) {
                        self.violation(Some(&f), None, "certificate orientation has zero weighted difference".into());
                    }
                }
                Err(e) => self.violation(Some(&f), None, format!("certificate orientation: {e}")),
            }
        }
    }

    fn splits(&mut self) {
        let g = self.g;
        for f in all_caps(g.n(), 1, 3) {
            let cap = CapMap::new(f.clone());
            let cert = match decide_weak_star(g, &cap, &mut self.budget()) {
                Decision::Yes(c) => c,
                Decision::No => continue,
                Decision::Unknown(e) => {
                    self.unknown(Some(&f), format!("weak*: {e}"));
                    continue;
                }
            };
            for gv in all_below(&f) {
                self.out.instances += 1;
                let gcap = CapMap::new(gv.clone());
                match certificate_split(g, &cap, &gcap, &cert) {
                    Ok(s) => {
                        let (x_ok, rest_ok) = check_split(g, &cap, &gcap, &s);
                        if !(x_ok && rest_ok) {
                            self.violation(Some(&f), Some(&gv), format!("split sides verify: X {x_ok}, rest {rest_ok}"));
                        }
                    }
                    Err(e) => self.violation(Some(&f), Some(&gv), format!("split failed: {e}")),
                }
            }
        }
    }

    fn at_identity(&mut self) {
        let g = self.g;
        let m = g.m();
        let weighted = m <= 6;
        let weightings: Vec<Vec<i64>> = if weighted { all_caps(m, 1, 3) } else { vec![vec![1; m]] };
        for choice in 0..1u64 << m {
            let d = Orientation::from_choice(g, choice);
            for w in &weightings {
                self.out.instances += 1;
                let w: Vec<u64> = w.iter().map(|&x| x as u64).collect();
                let t: Vec<u64> = d.out_weights(&w).iter().map(|&x| x as u64).collect();
                let lhs = coefficient(g, Some(&w), &t);
                let rhs = eulerian_diff_weighted(&d, &w);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a.abs() == b.abs() => {}
                    (a, b) => {
                        let ws: Vec<i64> = w.iter().map(|&x| x as i64).collect();
                        self.violation(
                            None,
                            Some(&ws),
                            format!("orientation {choice:#b}: coefficient {a:?}, Eulerian difference {b:?}"),
                        )
                    }
                }
            }
        }
    }
}
