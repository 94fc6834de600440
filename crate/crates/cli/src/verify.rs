//! Corpus verification: class membership per graph, then every applicable
//! structural property, each under its own timeout.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{mpsc, Arc};
use std::thread;
use std::time::{Duration, Instant};

use holefree_core::checks::{
    check_parent_complete, check_second_spheres, check_short_odd_holes, last_level_chi, max_third_sphere_chi,
    stable_bfs_prefix, ObservationFailure,
};
use holefree_core::coloring::{certified_class_color, four_color_a3_components, ColorMethod};
use holefree_core::exact::chi_value;
use holefree_core::holes::{class_membership, ClassSpec, Family};
use holefree_core::levelling::{stability_kind, validate_levelling, weak_stabilize_with_cap, LevellingError};
use holefree_core::{FourColorOutcome, Graph, StabilityKind};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::io::read_graph;
use crate::report::{
    ChiJson, GraphRecord, MembershipJson, PropertyRecord, Status, Summary, VerifyOptionsJson, VerifyReport,
    WitnessJson, SCHEMA_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    /// Layer-wise 4-colouring of `A3` members.
    A3,
    /// Sphere, last-level and short-odd-hole properties of `G2` members.
    G2,
    /// Weak-stable levellings of `B3` and `B4` members.
    B,
    /// The chromatic bound for 7-hole-free `B2`, `B3`, `B4` members.
    B7hf,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::A3, Suite::G2, Suite::B, Suite::B7hf];

    pub fn name(self) -> &'static str {
        match self {
            Suite::A3 => "a3",
            Suite::G2 => "g2",
            Suite::B => "b",
            Suite::B7hf => "b7hf",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suites: Vec<Suite>,
    pub timeout: Duration,
    pub oracle_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { suites: Suite::ALL.to_vec(), timeout: Duration::from_secs(30), oracle_cap: crate::oracle_cap() }
    }
}

impl VerifyOptions {
    fn to_json(&self) -> VerifyOptionsJson {
        VerifyOptionsJson {
            suites: self.suites.iter().map(|s| s.name().to_string()).collect(),
            timeout_secs: self.timeout.as_secs_f64(),
            oracle_cap: self.oracle_cap,
        }
    }
}

fn spec(family: Family, ell: usize) -> ClassSpec {
    ClassSpec::new(family, ell).expect("ell >= 2")
}

/// Classes whose membership every record reports.
pub fn reported_classes() -> Vec<ClassSpec> {
    vec![
        spec(Family::A, 2),
        spec(Family::A, 3),
        spec(Family::B, 3),
        spec(Family::B, 4),
        spec(Family::B, 2).with_seven_hole_free(true),
        spec(Family::B, 3).with_seven_hole_free(true),
        spec(Family::B, 4).with_seven_hole_free(true),
        spec(Family::G, 2),
    ]
}

/// Every `.g6` file directly inside `dir`, in filename order.
pub fn verify_corpus(dir: &Path, opts: &VerifyOptions) -> std::io::Result<VerifyReport> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "g6") && !path.is_dir() {
            files.push(path);
        }
    }
    files.sort_by_key(|p| p.file_name().map(|f| f.to_os_string()));
    let records: Vec<GraphRecord> = files.par_iter().map(|p| verify_file(p, opts)).collect();
    let summary = Summary::tally(&records);
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        corpus: dir.display().to_string(),
        options: opts.to_json(),
        records,
        summary,
    })
}

pub fn verify_file(path: &Path, opts: &VerifyOptions) -> GraphRecord {
    let name = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    match read_graph(path, None) {
        Ok(g) => verify_graph(&name, &g, opts),
        Err(e) => GraphRecord {
            file: name,
            n: None,
            edges: None,
            error: Some(e.to_string()),
            membership: BTreeMap::new(),
            chi: None,
            properties: Vec::new(),
            millis: 0,
        },
    }
}

/// What a property check produced, before timing is attached.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub reason: Option<String>,
    pub detail: Option<Value>,
    pub witness: Option<Value>,
}

impl Outcome {
    fn pass(detail: Value) -> Self {
        Outcome { status: Status::Pass, reason: None, detail: Some(detail), witness: None }
    }

    fn fail(reason: impl Into<String>, witness: Value) -> Self {
        Outcome { status: Status::Fail, reason: Some(reason.into()), detail: None, witness: Some(witness) }
    }

    fn inconclusive(reason: impl Into<String>, detail: Value) -> Self {
        Outcome { status: Status::Inconclusive, reason: Some(reason.into()), detail: Some(detail), witness: None }
    }
}

/// Runs `f` on its own thread and gives up waiting after `timeout`. A
/// panicking check is reported as a failure carrying the panic message.
pub fn run_with_timeout<F>(timeout: Duration, f: F) -> (Outcome, u64)
where
    F: FnOnce() -> Outcome + Send + 'static,
{
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let handle = thread::spawn(move || {
        let _ = tx.send(f());
    });
    let outcome = match rx.recv_timeout(timeout) {
        Ok(o) => {
            let _ = handle.join();
            o
        }
        Err(mpsc::RecvTimeoutError::Timeout) => Outcome {
            status: Status::Timeout,
            reason: Some(format!("no verdict within {:.1} s", timeout.as_secs_f64())),
            detail: None,
            witness: None,
        },
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            let msg = match handle.join() {
                Err(p) => p
                    .downcast_ref::<&str>()
                    .map(|s| s.to_string())
                    .or_else(|| p.downcast_ref::<String>().cloned())
                    .unwrap_or_else(|| "unknown panic".into()),
                Ok(()) => "check ended without a verdict".into(),
            };
            Outcome::fail("check panicked", json!({ "panic": msg }))
        }
    };
    (outcome, start.elapsed().as_millis() as u64)
}

type Check = Box<dyn FnOnce() -> Outcome + Send>;

struct Planned {
    name: String,
    class: ClassSpec,
    check: Check,
}

pub fn verify_graph(name: &str, g: &Graph, opts: &VerifyOptions) -> GraphRecord {
    let start = Instant::now();
    let g = Arc::new(g.clone());
    let cap = opts.oracle_cap;

    let mut membership = BTreeMap::new();
    let mut member_of: BTreeMap<String, Option<WitnessJson>> = BTreeMap::new();
    for s in reported_classes() {
        let w = class_membership(&g, &s).witness;
        let wj = w.as_ref().map(WitnessJson::from);
        member_of.insert(s.to_string(), wj.clone());
        membership.insert(s.to_string(), MembershipJson { member: w.is_none(), witness: wj });
    }

    let chi = {
        let g = Arc::clone(&g);
        let (o, _) = run_with_timeout(opts.timeout, move || {
            let c = chi_value(&g, &g.vertex_set(), cap);
            Outcome::pass(json!({ "value": c.value, "exact": c.exact }))
        });
        match o.status {
            Status::Pass => o.detail.map(|d| ChiJson {
                value: d["value"].as_u64().unwrap_or(0) as usize,
                exact: d["exact"].as_bool().unwrap_or(false),
            }),
            _ => None,
        }
    };

    let mut planned = Vec::new();
    for suite in &opts.suites {
        plan_suite(*suite, &g, cap, chi, &mut planned);
    }

    let mut properties = Vec::new();
    for p in planned {
        let class = p.class.to_string();
        let witness = match member_of.get(&class) {
            Some(w) => w.clone(),
            None => class_membership(&g, &p.class).witness.as_ref().map(WitnessJson::from),
        };
        let record = match witness {
            Some(w) => PropertyRecord {
                name: p.name,
                class: class.clone(),
                status: Status::Skipped,
                reason: Some(format!("not in {class}: {} {:?}", w.kind, w.cycle)),
                detail: None,
                witness: None,
                millis: 0,
            },
            None => {
                let (o, millis) = run_with_timeout(opts.timeout, p.check);
                PropertyRecord {
                    name: p.name,
                    class,
                    status: o.status,
                    reason: o.reason,
                    detail: o.detail,
                    witness: o.witness,
                    millis,
                }
            }
        };
        properties.push(record);
    }

    GraphRecord {
        file: name.to_string(),
        n: Some(g.n()),
        edges: Some(g.edge_count()),
        error: None,
        membership,
        chi,
        properties,
        millis: start.elapsed().as_millis() as u64,
    }
}

fn plan_suite(suite: Suite, g: &Arc<Graph>, cap: usize, chi: Option<ChiJson>, out: &mut Vec<Planned>) {
    let mut add = |name: &str, class: ClassSpec, f: Box<dyn FnOnce(&Graph) -> Outcome + Send>| {
        let g = Arc::clone(g);
        out.push(Planned { name: name.to_string(), class, check: Box::new(move || f(&g)) });
    };
    let g2 = spec(Family::G, 2);
    match suite {
        Suite::A3 => add("four_color", spec(Family::A, 3), Box::new(four_color)),
        Suite::G2 => {
            add("short_odd_holes", g2, Box::new(short_odd_holes));
            add("second_sphere_bipartite", g2, Box::new(second_spheres));
            add("parent_complete_bipartite", g2, Box::new(parent_complete));
            add("third_sphere_chi_le_7", g2, Box::new(move |g| third_spheres(g, cap)));
            add("last_level_chi_le_104", g2, Box::new(move |g| last_levels(g, cap)));
            add("certified_color_1456", g2, Box::new(move |g| certified_1456(g, chi)));
        }
        Suite::B => {
            for ell in [3, 4] {
                add("weak_stabilize", spec(Family::B, ell), Box::new(move |g| weak_stable(g, ell, cap)));
            }
        }
        Suite::B7hf => {
            for ell in [2, 3, 4] {
                let class = spec(Family::B, ell).with_seven_hole_free(true);
                add("chi_le_12l_plus_8", class, Box::new(move |_| chi_bound(chi, 12 * ell + 8)));
            }
        }
    }
}

fn four_color(g: &Graph) -> Outcome {
    match four_color_a3_components(g) {
        FourColorOutcome::Colored(c) => {
            let in_range = c.colors().iter().all(|x| (1..=4).contains(x));
            if c.is_proper(g) && in_range {
                Outcome::pass(json!({ "colors_used": c.colors_used() }))
            } else {
                Outcome::fail("colouring is not a proper 4-colouring", json!({ "coloring": c.colors() }))
            }
        }
        FourColorOutcome::OddLayer { layer, cycle } => {
            Outcome::fail("a distance layer is not bipartite", json!({ "layer": layer, "odd_cycle": cycle }))
        }
    }
}

fn short_odd_holes(g: &Graph) -> Outcome {
    match check_short_odd_holes(g) {
        Ok(()) => Outcome::pass(json!({ "bipartite": g.is_bipartite_within(&g.vertex_set()) })),
        Err(ObservationFailure::Bipartiteness { bipartite, hole }) => Outcome::fail(
            "bipartiteness disagrees with the presence of a 5- or 7-hole",
            json!({ "bipartite": bipartite, "hole": hole }),
        ),
        Err(ObservationFailure::Attachment { hole, vertex, neighbors }) => Outcome::fail(
            "vertex attaches to a short odd hole in an excluded pattern",
            json!({ "hole": hole, "vertex": vertex, "neighbors": neighbors }),
        ),
    }
}

fn sphere_property(
    g: &Graph,
    what: &str,
    check: fn(&Graph, &holefree_core::Levelling) -> Result<(), holefree_core::checks::OddSphere>,
) -> Outcome {
    for r in 0..g.n() {
        let lv = stable_bfs_prefix(g, r);
        if let Err(e) = check(g, &lv) {
            return Outcome::fail(
                format!("{what} is not bipartite"),
                json!({ "root": r, "levelling": lv.levels(), "z": e.z, "odd_cycle": e.cycle }),
            );
        }
    }
    Outcome::pass(json!({ "roots": g.n() }))
}

fn second_spheres(g: &Graph) -> Outcome {
    sphere_property(g, "second sphere", check_second_spheres)
}

fn parent_complete(g: &Graph) -> Outcome {
    sphere_property(g, "parent-complete part of the third sphere", check_parent_complete)
}

fn third_spheres(g: &Graph, cap: usize) -> Outcome {
    let mut max = 0;
    let mut bounded_only = false;
    for r in 0..g.n() {
        let lv = stable_bfs_prefix(g, r);
        let Some((z, chi)) = max_third_sphere_chi(g, &lv, cap) else { continue };
        max = max.max(chi.value);
        if chi.value > 7 {
            if chi.exact {
                return Outcome::fail(
                    "third sphere needs more than 7 colours",
                    json!({ "root": r, "levelling": lv.levels(), "z": z, "chi": chi.value }),
                );
            }
            bounded_only = true;
        }
    }
    if bounded_only {
        Outcome::inconclusive("a third sphere exceeds the oracle cap", json!({ "max_chi": max }))
    } else {
        Outcome::pass(json!({ "max_chi": max }))
    }
}

fn last_levels(g: &Graph, cap: usize) -> Outcome {
    let mut max = 0;
    let mut above_four = Vec::new();
    let mut bounded_only = false;
    for r in 0..g.n() {
        let lv = stable_bfs_prefix(g, r);
        let chi = last_level_chi(g, &lv, cap);
        max = max.max(chi.value);
        if chi.value > 4 {
            above_four.push(json!({ "root": r, "chi": chi.value, "exact": chi.exact }));
        }
        if chi.value > 104 {
            if chi.exact {
                return Outcome::fail(
                    "last level needs more than 104 colours",
                    json!({ "root": r, "levelling": lv.levels(), "chi": chi.value }),
                );
            }
            bounded_only = true;
        }
    }
    let detail = json!({ "max_chi": max, "above_four": above_four });
    if bounded_only {
        Outcome::inconclusive("a last level exceeds the oracle cap", detail)
    } else {
        Outcome::pass(detail)
    }
}

fn certified_1456(g: &Graph, chi: Option<ChiJson>) -> Outcome {
    let cert = match certified_class_color(g, &spec(Family::G, 2)) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(e.to_string(), json!({ "error": e.to_string() })),
    };
    let method = match cert.method {
        ColorMethod::FourColorA3 => "a3",
        ColorMethod::Dsatur => "dsatur",
    };
    let detail = json!({
        "colors_used": cert.coloring.colors_used(),
        "method": method,
        "bound": cert.bound,
        "within": cert.within,
        "chi": chi,
    });
    if !cert.coloring.is_proper(g) || cert.within != Some(true) {
        return Outcome::fail("certified colouring is not within 1456 colours", detail);
    }
    match chi {
        Some(c) if c.value > 1456 && c.exact => Outcome::fail("chromatic number above 1456", json!({ "chi": c.value })),
        _ => Outcome::pass(detail),
    }
}

fn chi_bound(chi: Option<ChiJson>, bound: usize) -> Outcome {
    match chi {
        None => Outcome {
            status: Status::Timeout,
            reason: Some("chromatic number not available".into()),
            detail: None,
            witness: None,
        },
        Some(c) if c.value <= bound => Outcome::pass(json!({ "chi": c.value, "exact": c.exact, "bound": bound })),
        Some(c) if c.exact => {
            Outcome::fail("chromatic number above the bound", json!({ "chi": c.value, "bound": bound }))
        }
        Some(c) => Outcome::inconclusive("only an upper bound is available", json!({ "chi": c.value, "bound": bound })),
    }
}

fn weak_stable(g: &Graph, ell: usize, cap: usize) -> Outcome {
    let mut full = 0;
    let mut exhausted = Vec::new();
    let mut bounded_only = 0;
    let mut max_in = 0;
    for r in 0..g.n() {
        let lv = g.bfs_layers(r).expect("root in range");
        match weak_stabilize_with_cap(g, &lv, ell, cap) {
            Ok(ws) => {
                max_in = max_in.max(ws.chi_input.value);
                full += ws.alpha.is_some() as usize;
                let shape_ok = validate_levelling(g, ws.levelling.levels()).is_ok()
                    && stability_kind(g, &ws.levelling) != StabilityKind::Plain;
                let exact = ws.chi_input.exact && ws.chi_output.exact;
                if !shape_ok || (exact && !ws.bound_holds(ell)) {
                    return Outcome::fail(
                        "output is not a weak-stable levelling meeting the chromatic bound",
                        json!({
                            "root": r,
                            "input": lv.levels(),
                            "output": ws.levelling.levels(),
                            "chi_input": ws.chi_input.value,
                            "chi_output": ws.chi_output.value,
                        }),
                    );
                }
                bounded_only += !exact as usize;
            }
            Err(LevellingError::LickingExhausted) => exhausted.push(r),
            Err(e) => {
                return Outcome::fail(
                    "construction failed",
                    json!({ "root": r, "input": lv.levels(), "error": e.to_string() }),
                )
            }
        }
    }
    let detail = json!({
        "roots": g.n(),
        "full_constructions": full,
        "licking_exhausted": exhausted,
        "max_chi_input": max_in,
    });
    if !exhausted.is_empty() {
        Outcome::inconclusive("licking search exhausted", detail)
    } else if bounded_only > 0 {
        Outcome::inconclusive("a last level exceeds the oracle cap", detail)
    } else {
        Outcome::pass(detail)
    }
}
