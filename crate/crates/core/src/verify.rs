//! Per-graph checks of the regularity bounds and colon identities, plus the
//! JSONL sweep driver.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::sync::Mutex;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::cameron_walker::{classify_cameron_walker, CwKind};
use crate::error::{OrderError, RegularityError};
use crate::even_connection::{colon_graph_unchecked, matching_for};
use crate::graph::{
    bipartition, has_hamiltonian_path_with_cap, induced_matching_number, is_very_well_covered, matching_number,
    pendant_triangles, Graph, Matching, DEFAULT_HAMILTONIAN_CAP,
};
use crate::graph6::parse_graph6_str;
use crate::ideal::{edge_ideal, ideal_equals, Ideal, Monomial};
use crate::order::{check_regcol_bound, count_admissible_orders, find_admissible_order};
use crate::regularity::{HomologyConfig, RegularityOracle};
use crate::report::{reason, CheckId, Report, Summary};

/// Generators examined exhaustively before sampling kicks in.
pub const SAMPLE_THRESHOLD: usize = 200;

/// Orderings are counted only up to this many generators.
const COUNT_LIMIT: usize = 16;

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 256;

type MemoKey = (Vec<u64>, u32);
type DiskKey = (String, usize, u32);

/// Regularity memo shared by all checks, optionally backed by an append-only
/// file of `graph6 \t s \t p \t reg` lines. Unparsable lines are ignored.
#[derive(Default)]
pub struct RegCache {
    memo: Mutex<HashMap<MemoKey, usize>>,
    disk: Option<DiskCache>,
}

struct DiskCache {
    known: Mutex<HashMap<DiskKey, usize>>,
    file: Mutex<File>,
}

impl RegCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_file(path: &Path) -> io::Result<Self> {
        let mut known = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                if let Some((key, reg)) = parse_cache_line(&line?) {
                    known.insert(key, reg);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Self { memo: Mutex::default(), disk: Some(DiskCache { known: Mutex::new(known), file: Mutex::new(file) }) })
    }

    fn lookup_disk(&self, key: &DiskKey) -> Option<usize> {
        self.disk.as_ref()?.known.lock().unwrap().get(key).copied()
    }

    fn store_disk(&self, key: DiskKey, reg: usize) {
        let Some(disk) = &self.disk else { return };
        let line = format!("{}\t{}\t{}\t{}\n", key.0, key.1, key.2, reg);
        if disk.known.lock().unwrap().insert(key, reg).is_none() {
            // advisory only: a failed write just means a colder next run
            let mut file = disk.file.lock().unwrap();
            let _ = file.write_all(line.as_bytes()).and_then(|_| file.flush());
        }
    }

    fn lookup(&self, key: &MemoKey) -> Option<usize> {
        self.memo.lock().unwrap().get(key).copied()
    }

    fn store(&self, key: MemoKey, reg: usize) {
        self.memo.lock().unwrap().insert(key, reg);
    }
}

fn parse_cache_line(line: &str) -> Option<(DiskKey, usize)> {
    let mut parts = line.split('\t');
    let g6 = parts.next().filter(|s| !s.is_empty())?;
    let s = parts.next()?.parse().ok()?;
    let p = parts.next()?.parse().ok()?;
    let reg = parts.next()?.trim_end().parse().ok()?;
    parts.next().is_none().then(|| ((g6.to_string(), s, p), reg))
}

/// A parsed graph with the invariants every check needs.
pub struct Subject {
    pub id: String,
    pub graph: Graph,
    pub matching_number: usize,
    pub max_matching: Matching,
    pub induced_matching_number: usize,
    pub max_induced_matching: Matching,
    /// `powers[s - 1] = I(G)^[s]` for `1 ≤ s ≤ match`.
    powers: Vec<Ideal>,
}

impl Subject {
    pub fn new(id: &str, graph: Graph) -> Self {
        let (nu, max_matching) = matching_number(&graph);
        let (ind, max_induced_matching) = induced_matching_number(&graph);
        let base = edge_ideal(&graph);
        let powers = (1..=nu).map(|s| base.squarefree_power(s).expect("s >= 1")).collect();
        Self {
            id: id.to_string(),
            graph,
            matching_number: nu,
            max_matching,
            induced_matching_number: ind,
            max_induced_matching,
            powers,
        }
    }

    pub fn from_graph6(record: &str) -> Result<Self, crate::error::Graph6Error> {
        Ok(Self::new(record, parse_graph6_str(record)?))
    }

    /// `I(G)^[s]` for `1 ≤ s ≤ match`.
    pub fn power(&self, s: usize) -> &Ideal {
        &self.powers[s - 1]
    }

    fn has_edges(&self) -> bool {
        self.matching_number > 0
    }
}

pub struct Checker {
    config: HomologyConfig,
    seed: u64,
    cache: RegCache,
    hamiltonian_cap: usize,
}

impl Checker {
    pub fn new(config: HomologyConfig, seed: u64, cache: RegCache) -> Self {
        Self { config, seed, cache, hamiltonian_cap: DEFAULT_HAMILTONIAN_CAP }
    }

    pub fn config(&self) -> &HomologyConfig {
        &self.config
    }

    fn cap_check(&self, ideal: &Ideal) -> Result<(), RegularityError> {
        let active = ideal.active_support().count_ones() as usize;
        if active > self.config.vertex_cap() {
            return Err(RegularityError::CapExceeded { active, cap: self.config.vertex_cap() });
        }
        Ok(())
    }

    /// `reg(I(G)^[s])`, consulting both cache layers.
    pub fn power_regularity(&self, subject: &Subject, s: usize) -> Result<usize, RegularityError> {
        let ideal = subject.power(s);
        self.cap_check(ideal)?;
        let disk_key = (subject.id.clone(), s, self.config.prime());
        if let Some(reg) = self.cache.lookup_disk(&disk_key) {
            return Ok(reg);
        }
        let reg = self.regularity_of(ideal)?;
        self.cache.store_disk(disk_key, reg);
        Ok(reg)
    }

    /// All reports for one graph, checks in the given order.
    pub fn run(&self, subject: &Subject, checks: &[CheckId]) -> Vec<Report> {
        checks.iter().flat_map(|&c| self.check(c, subject)).collect()
    }

    pub fn check(&self, check: CheckId, subject: &Subject) -> Vec<Report> {
        match check {
            CheckId::Dagger => self.check_dagger(subject),
            CheckId::DoubleDagger => self.check_ddagger(subject),
            CheckId::Bipartite => self.check_bipartite(subject),
            CheckId::CameronWalker => self.check_cameron_walker(subject),
            CheckId::LowerBound => self.check_lower_bound(subject),
            CheckId::PendantTriangle => self.check_pendant_triangle(subject),
            CheckId::ColonDegree => self.check_colon_degree(subject),
            CheckId::RegCol => self.check_regcol(subject),
            CheckId::Order => self.check_order(subject),
            CheckId::ColonGraph => self.check_colon_graph(subject),
            CheckId::TopLinear => self.check_top_linear(subject),
            CheckId::CwMatching => self.check_cw_matching(subject),
            CheckId::Parse => Vec::new(),
        }
    }

    /// One report per `1 ≤ s ≤ match` comparing `reg(I^[s])` against
    /// `judge(s, reg)`, which returns the bound and whether it holds.
    fn per_power(
        &self,
        subject: &Subject,
        check: CheckId,
        judge: impl Fn(usize, usize) -> (usize, bool),
    ) -> Vec<Report> {
        if !subject.has_edges() {
            return vec![Report::new(&subject.id, check, None).skipped(reason::NO_EDGES)];
        }
        (1..=subject.matching_number)
            .map(|s| {
                let base = Report::new(&subject.id, check, Some(s))
                    .with("match", subject.matching_number)
                    .with("ind_match", subject.induced_matching_number);
                match self.power_regularity(subject, s) {
                    Ok(reg) => {
                        let (bound, holds) = judge(s, reg);
                        let report = base.with("reg", reg).with("bound", bound).holds(holds);
                        if report.is_fail() {
                            report.with_witness(json!({
                                "matching": subject.max_matching,
                                "induced_matching": subject.max_induced_matching,
                                "generators": subject.power(s),
                            }))
                        } else {
                            report
                        }
                    }
                    Err(e) => skip_for(base, &e),
                }
            })
            .collect()
    }

    pub fn check_dagger(&self, subject: &Subject) -> Vec<Report> {
        let nu = subject.matching_number;
        let mut reports = self.per_power(subject, CheckId::Dagger, |s, reg| (nu + s, reg <= nu + s));
        // at the top power the resolution is linear, so the bound is attained
        if let Some(top) = reports.last_mut().filter(|r| r.s == Some(nu) && r.is_pass()) {
            let attained = top.computed["reg"] == json!(2 * nu);
            top.computed.insert("top_linear".into(), attained.into());
            if !attained {
                *top = top.clone().holds(false).with_witness(json!({ "generators": subject.power(nu) }));
            }
        }
        reports
    }

    pub fn check_ddagger(&self, subject: &Subject) -> Vec<Report> {
        let g = &subject.graph;
        let half = g.n() / 2;
        let near_perfect = subject.matching_number == half;
        let vwc = is_very_well_covered(g);
        let hamiltonian = has_hamiltonian_path_with_cap(g, self.hamiltonian_cap).ok();
        // either structural trigger forces a matching of size ⌊n/2⌋
        let triggered = vwc || hamiltonian == Some(true);
        let mut reports = self.per_power(subject, CheckId::DoubleDagger, |s, reg| (s + half, reg <= s + half));
        for r in &mut reports {
            r.computed.insert("near_perfect_matching".into(), near_perfect.into());
            r.computed.insert("very_well_covered".into(), vwc.into());
            r.computed.insert("semi_hamiltonian".into(), hamiltonian.into());
            if triggered && !near_perfect && !r.is_fail() && r.s.is_some() {
                *r = r.clone().holds(false).with_witness(json!({ "matching": subject.max_matching }));
            }
        }
        reports
    }

    pub fn check_bipartite(&self, subject: &Subject) -> Vec<Report> {
        let Some(parts) = bipartition(&subject.graph) else {
            return vec![Report::new(&subject.id, CheckId::Bipartite, None).skipped(reason::NON_BIPARTITE)];
        };
        let side = parts.smaller_side();
        let sides = json!([parts.x.len(), parts.y.len()]);
        let mut reports = self.per_power(subject, CheckId::Bipartite, |s, reg| (side + s, reg <= side + s));
        for r in &mut reports {
            r.computed.insert("sides".into(), sides.clone());
        }
        reports
    }

    pub fn check_cameron_walker(&self, subject: &Subject) -> Vec<Report> {
        let class = classify_cameron_walker(&subject.graph);
        let by_definition = subject.matching_number == subject.induced_matching_number;
        let id = &subject.id;
        if class.is_cameron_walker() != by_definition {
            return vec![Report::new(id, CheckId::CameronWalker, None)
                .with("match", subject.matching_number)
                .with("ind_match", subject.induced_matching_number)
                .with("structural", class.is_cameron_walker())
                .holds(false)
                .with_witness(json!({
                    "matching": subject.max_matching,
                    "induced_matching": subject.max_induced_matching,
                }))];
        }
        if class.kind == CwKind::Edgeless {
            return vec![Report::new(id, CheckId::CameronWalker, None).skipped(reason::NO_EDGES)];
        }
        if !by_definition {
            return vec![Report::new(id, CheckId::CameronWalker, None).skipped(reason::NOT_CAMERON_WALKER)];
        }
        let nu = subject.matching_number;
        let mut reports = self.per_power(subject, CheckId::CameronWalker, |s, reg| (nu + s, reg == nu + s));
        for r in &mut reports {
            let (Some(s), Some(reg)) = (r.s, r.computed.get("reg").and_then(|v| v.as_u64())) else {
                continue;
            };
            // I^[s] is generated in degree 2s
            let linear = reg as usize == 2 * s;
            r.computed.insert("linear".into(), linear.into());
            if linear != (s == nu) && r.is_pass() {
                *r = r.clone().holds(false).with_witness(json!({ "generators": subject.power(s) }));
            }
        }
        reports
    }

    pub fn check_lower_bound(&self, subject: &Subject) -> Vec<Report> {
        let ind = subject.induced_matching_number;
        self.per_power(subject, CheckId::LowerBound, |s, reg| (ind + s, reg >= ind + s))
    }

    pub fn check_top_linear(&self, subject: &Subject) -> Vec<Report> {
        if !subject.has_edges() {
            return vec![Report::new(&subject.id, CheckId::TopLinear, None).skipped(reason::NO_EDGES)];
        }
        let nu = subject.matching_number;
        let base = Report::new(&subject.id, CheckId::TopLinear, Some(nu)).with("match", nu);
        let report = match self.power_regularity(subject, nu) {
            Ok(reg) => base.with("reg", reg).with("bound", 2 * nu).holds(reg == 2 * nu),
            Err(e) => return vec![skip_for(base, &e)],
        };
        if report.is_fail() {
            return vec![report.with_witness(json!({ "generators": subject.power(nu) }))];
        }
        vec![report]
    }

    pub fn check_cw_matching(&self, subject: &Subject) -> Vec<Report> {
        let id = &subject.id;
        let skip = |why| vec![Report::new(id, CheckId::CwMatching, None).skipped(why)];
        if !subject.has_edges() {
            return skip(reason::NO_EDGES);
        }
        if !subject.graph.is_connected() {
            return skip(reason::PRECONDITION);
        }
        let Some(parts) = bipartition(&subject.graph) else { return skip(reason::NON_BIPARTITE) };
        if subject.matching_number != subject.induced_matching_number {
            return skip(reason::NOT_CAMERON_WALKER);
        }
        let side = parts.smaller_side();
        let report = Report::new(id, CheckId::CwMatching, None)
            .with("match", subject.matching_number)
            .with("sides", json!([parts.x.len(), parts.y.len()]))
            .holds(subject.matching_number == side);
        if report.is_fail() {
            return vec![report.with_witness(json!({ "matching": subject.max_matching, "x": parts.x, "y": parts.y }))];
        }
        vec![report]
    }

    pub fn check_pendant_triangle(&self, subject: &Subject) -> Vec<Report> {
        let id = &subject.id;
        let triangles = pendant_triangles(&subject.graph);
        if triangles.is_empty() {
            return vec![Report::new(id, CheckId::PendantTriangle, None).skipped(reason::PRECONDITION)];
        }
        if subject.matching_number < 2 {
            return vec![Report::new(id, CheckId::PendantTriangle, None).skipped(reason::NO_POWER_IN_RANGE)];
        }
        let mut reports = Vec::new();
        for &(x, y, z) in &triangles {
            let rest = edge_ideal(&subject.graph.without_vertices((1 << x) | (1 << y)));
            for s in 2..=subject.matching_number {
                let lhs = subject.power(s).colon(Monomial::from_vars([x, y]));
                let rhs = rest.squarefree_power(s - 1).expect("s - 1 >= 1");
                let report = Report::new(id, CheckId::PendantTriangle, Some(s))
                    .with("triangle", json!([x, y, z]))
                    .with("generators", lhs.len())
                    .holds(ideal_equals(&lhs, &rhs));
                reports.push(if report.is_fail() {
                    report.with_witness(json!({ "colon": lhs, "expected": rhs }))
                } else {
                    report
                });
            }
        }
        reports
    }

    /// Generators of `I^[s]` to examine, sampled when there are too many.
    fn generators_to_examine(&self, subject: &Subject, s: usize) -> Vec<Monomial> {
        let gens = subject.power(s).gens();
        if gens.len() <= SAMPLE_THRESHOLD {
            return gens.to_vec();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ stable_hash(&subject.id) ^ (s as u64).rotate_left(32));
        let mut picked = sample(&mut rng, gens.len(), SAMPLE_THRESHOLD).into_vec();
        picked.sort_unstable();
        picked.into_iter().map(|k| gens[k]).collect()
    }

    /// One report per `s < match`, folding a per-generator test over the
    /// examined generators; `test` returns a witness on failure.
    fn per_generator(
        &self,
        subject: &Subject,
        check: CheckId,
        test: impl Fn(usize, Monomial) -> Option<serde_json::Value>,
    ) -> Vec<Report> {
        if subject.matching_number < 2 {
            return vec![Report::new(&subject.id, check, None).skipped(reason::PRECONDITION)];
        }
        (1..subject.matching_number)
            .map(|s| {
                let examined = self.generators_to_examine(subject, s);
                let failure = examined.iter().find_map(|&u| test(s, u));
                let report = Report::new(&subject.id, check, Some(s))
                    .with("generators", subject.power(s).len())
                    .with("examined", examined.len())
                    .holds(failure.is_none());
                match failure {
                    Some(w) => report.with_witness(w),
                    None => report,
                }
            })
            .collect()
    }

    pub fn check_colon_degree(&self, subject: &Subject) -> Vec<Report> {
        self.per_generator(subject, CheckId::ColonDegree, |s, u| {
            let colon = subject.power(s + 1).colon(u);
            let bad = colon.gens().iter().any(|m| m.degree() != 2);
            bad.then(|| json!({ "u": u, "colon": colon }))
        })
    }

    pub fn check_colon_graph(&self, subject: &Subject) -> Vec<Report> {
        let g = &subject.graph;
        self.per_generator(subject, CheckId::ColonGraph, |s, u| {
            let m = matching_for(g, u).expect("generators of I^[s] are products of s-matchings");
            let h = colon_graph_unchecked(g, &m);
            let colon = subject.power(s + 1).colon(u);
            (!ideal_equals(&h.edge_ideal(), &colon)).then(|| json!({ "matching": m, "colon_graph": h, "colon": colon }))
        })
    }

    pub fn check_regcol(&self, subject: &Subject) -> Vec<Report> {
        if subject.matching_number < 2 {
            return vec![Report::new(&subject.id, CheckId::RegCol, None).skipped(reason::PRECONDITION)];
        }
        (1..subject.matching_number)
            .map(|s| match check_regcol_bound(&subject.graph, &subject.id, s, self) {
                Ok(report) => report,
                Err(OrderError::Regularity(e)) => skip_for(Report::new(&subject.id, CheckId::RegCol, Some(s)), &e),
                Err(e) => Report::new(&subject.id, CheckId::RegCol, Some(s)).error(e.to_string()),
            })
            .collect()
    }

    pub fn check_order(&self, subject: &Subject) -> Vec<Report> {
        if subject.matching_number < 2 {
            return vec![Report::new(&subject.id, CheckId::Order, None).skipped(reason::PRECONDITION)];
        }
        (1..subject.matching_number)
            .map(|s| {
                let base = Report::new(&subject.id, CheckId::Order, Some(s)).with("generators", subject.power(s).len());
                match find_admissible_order(&subject.graph, s) {
                    Ok(cert) => {
                        let base = base.with("ordering", json!(cert.ordering)).holds(true);
                        if subject.power(s).len() <= COUNT_LIMIT {
                            let count = count_admissible_orders(&subject.graph, s).expect("range already checked");
                            base.with("admissible_orderings", count.to_string())
                        } else {
                            base
                        }
                    }
                    Err(OrderError::SearchExhausted { .. }) => base
                        .with("event", reason::THEOREM_VIOLATION)
                        .holds(false)
                        .with_witness(json!({ "generators": subject.power(s) })),
                    Err(e) => base.error(e.to_string()),
                }
            })
            .collect()
    }
}

impl RegularityOracle for Checker {
    fn regularity_of(&self, ideal: &Ideal) -> Result<usize, RegularityError> {
        self.cap_check(ideal)?;
        let key = (ideal.gens().iter().map(|m| m.support()).collect(), self.config.prime());
        if let Some(reg) = self.cache.lookup(&key) {
            return Ok(reg);
        }
        let reg = self.config.regularity(ideal)?;
        self.cache.store(key, reg);
        Ok(reg)
    }
}

fn skip_for(report: Report, e: &RegularityError) -> Report {
    match e {
        RegularityError::CapExceeded { active, .. } => {
            report.with("active_variables", *active).skipped(reason::CAP_EXCEEDED)
        }
        other => report.error(other.to_string()),
    }
}

/// FNV-1a, stable across runs and platforms.
fn stable_hash(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn reports_for_line(line: &str, checks: &[CheckId], checker: &Checker) -> Vec<Report> {
    match Subject::from_graph6(line) {
        Ok(subject) => checker.run(&subject, checks),
        Err(e) => vec![Report::new(line, CheckId::Parse, None).error(e.to_string())],
    }
}

/// Streams reports for every graph6 record in `input`, in input order,
/// followed by a summary line. Blank lines and `>>graph6<<` headers are skipped.
pub fn run_sweep(
    input: impl BufRead,
    mut out: impl Write,
    checks: &[CheckId],
    checker: &Checker,
) -> io::Result<Summary> {
    let mut summary = Summary::default();
    let mut lines = input.lines();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for line in lines.by_ref() {
            let line = line?;
            let record = line.trim().trim_start_matches(">>graph6<<");
            if !record.is_empty() {
                chunk.push(record.to_string());
                if chunk.len() == CHUNK {
                    break;
                }
            }
        }
        if chunk.is_empty() {
            break;
        }
        let batches: Vec<Vec<Report>> = chunk.par_iter().map(|line| reports_for_line(line, checks, checker)).collect();
        for report in batches.iter().flatten() {
            summary.record(report);
            writeln!(out, "{}", report.to_json_line())?;
        }
    }
    writeln!(out, "{}", summary.to_json_line())?;
    out.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn checker() -> Checker {
        Checker::new(HomologyConfig::default(), 0, RegCache::in_memory())
    }

    fn subject(edges: &str) -> Subject {
        let g = Graph::parse_edge_list(edges).unwrap();
        Subject::new(&crate::graph6::to_graph6(&g), g)
    }

    fn regs(reports: &[Report]) -> Vec<(usize, u64, bool)> {
        reports.iter().map(|r| (r.s.unwrap(), r.computed["reg"].as_u64().unwrap(), r.is_pass())).collect()
    }

    #[test]
    fn dagger_examples() {
        let c = checker();
        assert_eq!(regs(&c.check_dagger(&subject("0-1,2-3"))), vec![(1, 3, true), (2, 4, true)]);
        assert_eq!(regs(&c.check_dagger(&subject("0-1,1-2,2-3,3-4,4-0"))), vec![(1, 3, true), (2, 4, true)]);
        assert_eq!(regs(&c.check_dagger(&subject("0-1"))), vec![(1, 2, true)]);
    }

    #[test]
    fn ddagger_and_bipartite_examples() {
        let c = checker();
        let r = c.check_ddagger(&subject("0-1,1-2,2-3,3-4,4-0"));
        assert_eq!(r[0].computed["bound"], json!(3));
        assert!(r.iter().all(Report::is_pass));
        let star = c.check_ddagger(&subject("0-1,0-2,0-3"));
        assert_eq!(regs(&star), vec![(1, 2, true)]);
        let p4 = c.check_bipartite(&subject("0-1,1-2,2-3"));
        assert_eq!(p4[0].computed["bound"], json!(3));
        assert_eq!(regs(&p4), vec![(1, 2, true), (2, 4, true)]);
        let k3 = c.check_bipartite(&subject("0-1,1-2,0-2"));
        assert_eq!(k3[0].verdict, Verdict::Skipped(reason::NON_BIPARTITE.into()));
    }

    #[test]
    fn cameron_walker_examples() {
        let c = checker();
        let k3 = c.check_cameron_walker(&subject("0-1,1-2,0-2"));
        assert_eq!(regs(&k3), vec![(1, 2, true)]);
        assert_eq!(k3[0].computed["linear"], json!(true));
        let two = c.check_cameron_walker(&subject("0-1,2-3"));
        assert_eq!(regs(&two), vec![(1, 3, true), (2, 4, true)]);
        assert_eq!(two[0].computed["linear"], json!(false));
        let p4 = c.check_cameron_walker(&subject("0-1,1-2,2-3"));
        assert_eq!(p4[0].verdict, Verdict::Skipped(reason::NOT_CAMERON_WALKER.into()));
    }

    #[test]
    fn lower_bound_and_top_linear() {
        let c = checker();
        let p5 = c.check_lower_bound(&subject("0-1,1-2,2-3,3-4"));
        assert_eq!(p5[0].computed["reg"], json!(3));
        assert!(p5.iter().all(Report::is_pass));
        assert!(c.check_top_linear(&subject("0-1,1-2,2-3,3-4,4-0"))[0].is_pass());
        let empty = Subject::from_graph6("B?").unwrap();
        assert_eq!(c.check_top_linear(&empty)[0].verdict, Verdict::Skipped(reason::NO_EDGES.into()));
    }

    #[test]
    fn pendant_triangle_examples() {
        let c = checker();
        let k3 = c.check_pendant_triangle(&subject("0-1,1-2,0-2"));
        assert_eq!(k3[0].verdict, Verdict::Skipped(reason::NO_POWER_IN_RANGE.into()));
        let two = c.check_pendant_triangle(&subject("0-1,1-2,0-2,3-4,4-5,3-5"));
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(Report::is_pass));
        let tail = c.check_pendant_triangle(&subject("0-1,1-2,0-2,2-3"));
        assert!(!tail.is_empty() && tail.iter().all(Report::is_pass));
    }

    #[test]
    fn colon_checks_pass_on_small_graphs() {
        let c = checker();
        for edges in ["0-1,1-2,2-3,3-4,4-0", "0-1,1-2,2-3", "0-1,2-3"] {
            let s = subject(edges);
            for check in [CheckId::ColonDegree, CheckId::ColonGraph, CheckId::RegCol, CheckId::Order] {
                let reports = c.check(check, &s);
                assert!(reports.iter().all(Report::is_pass), "{check} on {edges}: {reports:?}");
            }
        }
    }

    #[test]
    fn cap_gives_skips() {
        let c = Checker::new(HomologyConfig::new(2, 3).unwrap(), 0, RegCache::in_memory());
        let r = c.check_dagger(&subject("0-1,2-3"));
        assert!(r.iter().all(|r| r.verdict == Verdict::Skipped(reason::CAP_EXCEEDED.into())));
    }

    #[test]
    fn sweep_orders_and_summarizes() {
        let c = checker();
        let mut out = Vec::new();
        let summary = run_sweep("A_\nnot graph6 !\nBw\n\n".as_bytes(), &mut out, &[CheckId::Dagger], &c).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].contains(r#""graph_id":"A_""#));
        assert!(lines[1].contains(r#""check":"parse","verdict":"error""#));
        assert!(lines[2].contains(r#""graph_id":"Bw""#));
        assert_eq!(summary, Summary { pass: 2, fail: 0, skipped: 0, error: 1 });

        let mut out = Vec::new();
        run_sweep("".as_bytes(), &mut out, &[CheckId::Dagger], &c).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "{\"summary\":{\"pass\":0,\"fail\":0,\"skipped\":0,\"error\":0}}\n"
        );
    }

    #[test]
    fn cache_lines() {
        assert_eq!(parse_cache_line("Bw\t1\t2\t2"), Some((("Bw".into(), 1, 2), 2)));
        assert_eq!(parse_cache_line("Bw\t1\t2"), None);
        assert_eq!(parse_cache_line("Bw\tx\t2\t2"), None);
        assert_eq!(parse_cache_line("\t1\t2\t2"), None);
    }
}
