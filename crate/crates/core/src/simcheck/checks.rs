//! The six bounded checks. Each shares one exploration of `S` and one of `T`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::dynamics::{attach, AssemblyTrace, Placement};
use crate::explore::{
    directedness_of_graph, explore_graph, DirectednessVerdict, ExplorationGraph, ExploreConfig,
    ExploreError,
};
use crate::model::{Assembly, TileSystem};

use super::{check_clean_mapping, r_star, SimulationSetup};

/// Differences up to this size are also tried in every order when greedy
/// attachment fails under a diffusion-restricted model.
const MAX_PERMUTED_DIFF: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    RepresentationMonotonic,
    CleanMapping,
    EquivalentProductions,
    Follows,
    Models,
    DirectednessPreservation,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::RepresentationMonotonic,
        CheckKind::CleanMapping,
        CheckKind::EquivalentProductions,
        CheckKind::Follows,
        CheckKind::Models,
        CheckKind::DirectednessPreservation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::RepresentationMonotonic => "monotonic",
            CheckKind::CleanMapping => "clean",
            CheckKind::EquivalentProductions => "productions",
            CheckKind::Follows => "follows",
            CheckKind::Models => "models",
            CheckKind::DirectednessPreservation => "directedness",
        }
    }

    pub fn from_name(s: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSystem {
    Simulator,
    Simulated,
}

impl WitnessSystem {
    pub fn name(self) -> &'static str {
        match self {
            WitnessSystem::Simulator => "simulator",
            WitnessSystem::Simulated => "simulated",
        }
    }
}

/// A replayable counterexample: `trace` is valid in `system` from its seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub system: WitnessSystem,
    pub trace: AssemblyTrace,
    pub detail: String,
}

impl Witness {
    pub fn replay(&self, setup: &SimulationSetup) -> Result<Assembly, crate::dynamics::TraceError> {
        let sys = match self.system {
            WitnessSystem::Simulator => setup.simulator(),
            WitnessSystem::Simulated => setup.simulated(),
        };
        crate::dynamics::run_trace(sys, &self.trace)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    Unknown(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Unknown(_) => "unknown",
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimBounds {
    pub simulator: ExploreConfig,
    pub simulated: ExploreConfig,
}

impl Default for SimBounds {
    fn default() -> Self {
        SimBounds {
            simulator: ExploreConfig::with_max_tiles(64).max_states(200_000),
            simulated: ExploreConfig::with_max_tiles(64).max_states(200_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimCheckReport {
    pub check: CheckKind,
    pub verdict: Verdict,
    pub simulator_states: usize,
    pub simulated_states: usize,
    pub simulator_truncated: bool,
    pub simulated_truncated: bool,
}

struct Ctx<'a> {
    setup: &'a SimulationSetup,
    s: ExplorationGraph,
    t: ExplorationGraph,
    /// `R*` of every simulator state.
    images: Vec<Assembly>,
    /// Simulated-state index of each image, if the image was explored in `T`.
    image_in_t: Vec<Option<usize>>,
    t_bound: usize,
}

impl Ctx<'_> {
    fn s_witness(&self, i: usize, detail: String) -> Verdict {
        Verdict::Fail(Witness {
            system: WitnessSystem::Simulator,
            trace: self.s.trace_to(i),
            detail,
        })
    }

    fn t_witness(&self, i: usize, detail: String) -> Verdict {
        Verdict::Fail(Witness {
            system: WitnessSystem::Simulated,
            trace: self.t.trace_to(i),
            detail,
        })
    }

    fn exhausted(&self, detail: &str) -> Verdict {
        if self.s.truncated || self.t.truncated {
            Verdict::Unknown(format!("no violation within the explored bound; {detail}"))
        } else {
            Verdict::Pass
        }
    }
}

/// Explores both systems once and runs each requested check.
pub fn run_checks(
    setup: &SimulationSetup,
    bounds: SimBounds,
    kinds: &[CheckKind],
) -> Result<Vec<SimCheckReport>, ExploreError> {
    let s = explore_graph(setup.simulator(), bounds.simulator)?;
    let t = explore_graph(setup.simulated(), bounds.simulated)?;
    let images: Vec<Assembly> = s.states.iter().map(|a| r_star(setup, a)).collect();
    let image_in_t = images.iter().map(|a| t.index_of(a)).collect();
    let ctx = Ctx {
        setup,
        s,
        t,
        images,
        image_in_t,
        t_bound: bounds.simulated.max_tiles,
    };
    Ok(kinds
        .iter()
        .map(|&check| {
            let verdict = match check {
                CheckKind::RepresentationMonotonic => monotonic(&ctx),
                CheckKind::CleanMapping => clean(&ctx),
                CheckKind::EquivalentProductions => productions(&ctx),
                CheckKind::Follows => follows(&ctx),
                CheckKind::Models => models(&ctx),
                CheckKind::DirectednessPreservation => directedness(&ctx),
            };
            SimCheckReport {
                check,
                verdict,
                simulator_states: ctx.s.len(),
                simulated_states: ctx.t.len(),
                simulator_truncated: ctx.s.truncated,
                simulated_truncated: ctx.t.truncated,
            }
        })
        .collect())
}

fn monotonic(ctx: &Ctx) -> Verdict {
    let m = ctx.setup.scale();
    for (i, succ) in ctx.s.successors.iter().enumerate() {
        for &(p, j) in succ {
            let b = p.pos.div_floor(m);
            let before = ctx.images[i].get(b);
            if before.is_some() && ctx.images[j].get(b) != before {
                return ctx.s_witness(
                    j,
                    format!("block {b} changed its representation when {p} attached"),
                );
            }
        }
    }
    ctx.exhausted("monotonicity holds on every explored edge")
}

fn clean(ctx: &Ctx) -> Verdict {
    for (i, a) in ctx.s.states.iter().enumerate() {
        if let Some(v) = check_clean_mapping(ctx.setup, a).first() {
            return ctx.s_witness(i, format!("{} at block {}", v.kind, v.block));
        }
    }
    ctx.exhausted("every explored state maps cleanly")
}

fn productions(ctx: &Ctx) -> Verdict {
    if let Verdict::Fail(w) = clean(ctx) {
        return Verdict::Fail(w);
    }
    // T's breadth-first exploration contains every producible up to its size
    // bound, so an image within that bound which T lacks is a real violation.
    for (i, img) in ctx.images.iter().enumerate() {
        if ctx.image_in_t[i].is_none() && img.len() <= ctx.t_bound {
            return ctx.s_witness(i, "image is not producible in the simulated system".into());
        }
        if ctx.s.terminal[i] {
            if let Some(ti) = ctx.image_in_t[i] {
                if !ctx.t.terminal[ti] {
                    return ctx.s_witness(
                        i,
                        "terminal simulator assembly maps to a non-terminal assembly".into(),
                    );
                }
            }
        }
    }
    let covered: BTreeSet<usize> = ctx.image_in_t.iter().flatten().copied().collect();
    let terminal_covered: BTreeSet<usize> = (0..ctx.s.len())
        .filter(|&i| ctx.s.terminal[i])
        .filter_map(|i| ctx.image_in_t[i])
        .collect();
    for ti in 0..ctx.t.len() {
        let missing = !covered.contains(&ti);
        let missing_terminal = ctx.t.terminal[ti] && !terminal_covered.contains(&ti);
        if missing || missing_terminal {
            if ctx.s.truncated {
                return Verdict::Unknown(format!(
                    "simulated state {ti} has no {}preimage within the simulator bound",
                    if missing { "" } else { "terminal " }
                ));
            }
            let what = if missing {
                "no simulator assembly represents it"
            } else {
                "no terminal simulator assembly represents it"
            };
            return ctx.t_witness(ti, what.into());
        }
    }
    ctx.exhausted("productions agree on the explored states")
}

/// Whether `to` is reachable from `from` by attachments under `system`'s rules.
fn reaches(system: &TileSystem, from: &Assembly, to: &Assembly) -> Option<bool> {
    if !from.is_subassembly_of(to) {
        return Some(false);
    }
    let diff: Vec<Placement> = to
        .iter()
        .filter(|(p, _)| !from.contains(*p))
        .map(|(p, t)| Placement::new(p, t))
        .collect();
    // Greedy: in an unrestricted model attachment is monotone, so greedy
    // success is equivalent to reachability.
    let mut a = from.clone();
    let mut left = diff.clone();
    loop {
        let before = left.len();
        left.retain(|&p| match attach(&a, p, system) {
            Ok(b) => {
                a = b;
                false
            }
            Err(_) => true,
        });
        if left.is_empty() {
            return Some(true);
        }
        if left.len() == before {
            break;
        }
    }
    if !system.variant.diffusion_restricted {
        return Some(false);
    }
    if diff.len() > MAX_PERMUTED_DIFF {
        return None;
    }
    fn search(
        system: &TileSystem,
        a: &Assembly,
        left: &[Placement],
        seen: &mut BTreeSet<Vec<Placement>>,
    ) -> bool {
        if left.is_empty() {
            return true;
        }
        if !seen.insert(left.to_vec()) {
            return false;
        }
        for (k, &p) in left.iter().enumerate() {
            if let Ok(b) = attach(a, p, system) {
                let mut rest = left.to_vec();
                rest.remove(k);
                if search(system, &b, &rest, seen) {
                    return true;
                }
            }
        }
        false
    }
    Some(search(system, from, &diff, &mut BTreeSet::new()))
}

fn follows(ctx: &Ctx) -> Verdict {
    let mut undecided = false;
    for (i, succ) in ctx.s.successors.iter().enumerate() {
        for &(p, j) in succ {
            let (a, b) = (&ctx.images[i], &ctx.images[j]);
            if a == b {
                continue;
            }
            match reaches(ctx.setup.simulated(), a, b) {
                Some(true) => {}
                Some(false) => {
                    return ctx.s_witness(j, format!("attaching {p} changes the image in a way the simulated system cannot follow"));
                }
                None => undecided = true,
            }
        }
    }
    if undecided {
        return Verdict::Unknown(
            "some image differences were too large to order exhaustively".into(),
        );
    }
    ctx.exhausted("every explored edge is followed")
}

/// Closed-form check: the largest candidate set satisfying the first clause
/// is built per simulated state, and the second clause is then a coverage
/// test over the preimages.
fn models(ctx: &Ctx) -> Verdict {
    let mut preimages: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, ti) in ctx.image_in_t.iter().enumerate() {
        if let Some(ti) = ti {
            preimages.entry(*ti).or_default().push(i);
        }
    }
    let s_reach: Vec<Vec<usize>> = (0..ctx.s.len()).map(|i| ctx.s.reachable_from(i)).collect();
    for ta in 0..ctx.t.len() {
        let Some(pre) = preimages.get(&ta) else {
            if ctx.s.truncated {
                return Verdict::Unknown(format!(
                    "simulated state {ta} has no preimage within the simulator bound"
                ));
            }
            return ctx.t_witness(
                ta,
                "no simulator assembly represents this producible".into(),
            );
        };
        let t_reach = ctx.t.reachable_from(ta);
        let clause_one = |i: usize| {
            let imgs: BTreeSet<usize> = s_reach[i]
                .iter()
                .filter_map(|&k| ctx.image_in_t[k])
                .collect();
            t_reach.iter().all(|tb| imgs.contains(tb))
        };
        let pi_max: Vec<usize> = pre.iter().copied().filter(|&i| clause_one(i)).collect();
        let reached: BTreeSet<usize> = pi_max
            .iter()
            .flat_map(|&i| s_reach[i].iter().copied())
            .collect();
        if let Some(&bad) = pre.iter().find(|i| !reached.contains(i)) {
            if ctx.s.truncated {
                return Verdict::Unknown(format!(
                    "preimage {bad} of simulated state {ta} is not covered within the simulator bound"
                ));
            }
            let detail = if pi_max.is_empty() {
                "no preimage can reach representatives of every continuation".to_string()
            } else {
                "this preimage is not reachable from any admissible representative".to_string()
            };
            return ctx.s_witness(bad, detail);
        }
    }
    ctx.exhausted("every explored simulated state is modelled")
}

fn directedness(ctx: &Ctx) -> Verdict {
    let vs = directedness_of_graph(&ctx.s);
    let vt = directedness_of_graph(&ctx.t);
    match (&vs, &vt) {
        (DirectednessVerdict::Unknown { .. }, _) | (_, DirectednessVerdict::Unknown { .. }) => {
            Verdict::Unknown(format!("simulator {}, simulated {}", vs.name(), vt.name()))
        }
        _ if vs.name() == vt.name() => Verdict::Pass,
        _ => {
            let detail = format!(
                "simulator is {} but simulated system is {}",
                vs.name(),
                vt.name()
            );
            let (g, which, verdict) = match vs {
                DirectednessVerdict::Undirected { .. } => (&ctx.s, WitnessSystem::Simulator, &vs),
                _ => (&ctx.t, WitnessSystem::Simulated, &vt),
            };
            let DirectednessVerdict::Undirected { witness, .. } = verdict else {
                unreachable!()
            };
            let (a, _) = witness.assemblies();
            let i = g
                .index_of(a)
                .expect("witness assemblies come from the graph");
            Verdict::Fail(Witness {
                system: which,
                trace: g.trace_to(i),
                detail,
            })
        }
    }
}
