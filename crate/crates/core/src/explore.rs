//! Bounded breadth-first exploration of producible assemblies.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::dynamics::{frontier, AssemblyTrace, Placement};
use crate::model::{Assembly, TileSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExploreConfig {
    /// Assemblies of this size are not expanded.
    pub max_tiles: usize,
    /// Cap on distinct states before giving up.
    pub max_states: usize,
    /// Worker threads for level expansion; 1 runs inline, 0 uses rayon's
    /// global pool.
    pub threads: usize,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            max_tiles: 5000,
            max_states: 1_000_000,
            threads: 1,
        }
    }
}

impl ExploreConfig {
    pub fn with_max_tiles(max_tiles: usize) -> Self {
        ExploreConfig {
            max_tiles,
            ..Default::default()
        }
    }

    pub fn threads(self, threads: usize) -> Self {
        ExploreConfig { threads, ..self }
    }

    pub fn max_states(self, max_states: usize) -> Self {
        ExploreConfig { max_states, ..self }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExploreError {
    #[error("state budget exceeded after {visited} states")]
    StateBudgetExceeded { visited: usize },
    #[error("size bound {max_tiles} is smaller than the seed ({seed} tiles)")]
    BoundBelowSeed { max_tiles: usize, seed: usize },
    #[error("failed to start worker pool: {0}")]
    ThreadPool(String),
}

/// The explored portion of the producibility graph.
///
/// States are numbered level by level (a level holds all assemblies of one
/// size) and canonically within a level, so numbering does not depend on the
/// thread count.
#[derive(Clone, Debug)]
pub struct ExplorationGraph {
    pub states: Vec<Assembly>,
    /// Successor edges; empty for terminal and unexpanded states.
    pub successors: Vec<Vec<(Placement, usize)>>,
    /// First-discovered parent of each non-seed state.
    pub parents: Vec<Option<(usize, Placement)>>,
    pub terminal: Vec<bool>,
    pub truncated: bool,
    pub size_bound: usize,
    /// Set when a stop hook ended exploration before closure.
    pub stopped_early: bool,
    index: HashMap<Assembly, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplorationResult {
    pub producibles: BTreeSet<Assembly>,
    pub terminals: BTreeSet<Assembly>,
    pub truncated: bool,
    pub size_bound: usize,
    pub states_visited: usize,
}

impl ExplorationGraph {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, a: &Assembly) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn terminal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.states.len()).filter(|&i| self.terminal[i])
    }

    /// Replayable assembly sequence from the seed to state `i`.
    pub fn trace_to(&self, mut i: usize) -> AssemblyTrace {
        let mut steps = Vec::new();
        while let Some((parent, p)) = self.parents[i] {
            steps.push(p);
            i = parent;
        }
        steps.reverse();
        AssemblyTrace::new(steps)
    }

    /// States reachable from `i` (including `i`) inside the explored graph.
    pub fn reachable_from(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.states.len()];
        let mut stack = vec![i];
        seen[i] = true;
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &(_, w) in &self.successors[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn result(&self) -> ExplorationResult {
        ExplorationResult {
            producibles: self.states.iter().cloned().collect(),
            terminals: self
                .terminal_indices()
                .map(|i| self.states[i].clone())
                .collect(),
            truncated: self.truncated,
            size_bound: self.size_bound,
            states_visited: self.states.len(),
        }
    }
}

pub fn explore_producibles(
    system: &TileSystem,
    config: ExploreConfig,
) -> Result<ExplorationResult, ExploreError> {
    Ok(explore_graph(system, config)?.result())
}

pub fn explore_graph(
    system: &TileSystem,
    config: ExploreConfig,
) -> Result<ExplorationGraph, ExploreError> {
    explore_graph_until(system, config, |_| false)
}

type Expansion = (bool, Vec<(Placement, Assembly)>);

fn expand(system: &TileSystem, a: &Assembly, max_tiles: usize) -> Expansion {
    let f = frontier(a, system);
    let nonempty = !f.is_empty();
    if a.len() >= max_tiles {
        return (nonempty, Vec::new());
    }
    let children = f
        .into_iter()
        .map(|p| {
            let mut c = a.clone();
            c.insert(p.pos, p.tile);
            (p, c)
        })
        .collect();
    (nonempty, children)
}

/// Explores level by level. After each completed level, `stop` sees that
/// level's states and may end exploration early.
pub fn explore_graph_until<F>(
    system: &TileSystem,
    config: ExploreConfig,
    mut stop: F,
) -> Result<ExplorationGraph, ExploreError>
where
    F: FnMut(&[Assembly]) -> bool,
{
    if config.max_tiles < system.seed.len() {
        return Err(ExploreError::BoundBelowSeed {
            max_tiles: config.max_tiles,
            seed: system.seed.len(),
        });
    }
    let pool = match config.threads {
        0 | 1 => None,
        n => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| ExploreError::ThreadPool(e.to_string()))?,
        ),
    };
    let mut g = ExplorationGraph {
        states: vec![system.seed.clone()],
        successors: vec![Vec::new()],
        parents: vec![None],
        terminal: vec![false],
        truncated: false,
        size_bound: config.max_tiles,
        stopped_early: false,
        index: HashMap::from([(system.seed.clone(), 0)]),
    };
    let mut level: Vec<usize> = vec![0];
    while !level.is_empty() {
        let expansions: Vec<Expansion> = {
            let states = &g.states;
            let run = || -> Vec<Expansion> {
                if config.threads == 1 {
                    level
                        .iter()
                        .map(|&i| expand(system, &states[i], config.max_tiles))
                        .collect()
                } else {
                    level
                        .par_iter()
                        .map(|&i| expand(system, &states[i], config.max_tiles))
                        .collect()
                }
            };
            match &pool {
                Some(p) => p.install(run),
                None => run(),
            }
        };
        let mut next: BTreeMap<Assembly, (usize, Placement)> = BTreeMap::new();
        for (&i, (nonempty, children)) in level.iter().zip(&expansions) {
            g.terminal[i] = !nonempty;
            if *nonempty && children.is_empty() {
                g.truncated = true;
            }
            for (p, c) in children {
                next.entry(c.clone()).or_insert((i, *p));
            }
        }
        if g.states.len() + next.len() > config.max_states {
            return Err(ExploreError::StateBudgetExceeded {
                visited: g.states.len() + next.len(),
            });
        }
        let mut new_level = Vec::with_capacity(next.len());
        for (a, parent) in next {
            let idx = g.states.len();
            g.index.insert(a.clone(), idx);
            g.states.push(a);
            g.successors.push(Vec::new());
            g.parents.push(Some(parent));
            g.terminal.push(false);
            new_level.push(idx);
        }
        for (&i, (_, children)) in level.iter().zip(expansions) {
            g.successors[i] = children
                .into_iter()
                .map(|(p, c)| (p, g.index[&c]))
                .collect();
        }
        level = new_level;
        if !level.is_empty() {
            let current: Vec<Assembly> = level.iter().map(|&i| g.states[i].clone()).collect();
            if stop(&current) {
                // The final level is left unexpanded, but its terminal flags
                // are still filled in so that verdicts can cite terminals.
                for &i in &level {
                    g.terminal[i] = frontier(&g.states[i], system).is_empty();
                }
                g.stopped_early = true;
                break;
            }
        }
    }
    Ok(g)
}

/// Why a system was judged undirected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UndirectedWitness {
    /// Two different terminal assemblies.
    Terminals(Assembly, Assembly),
    /// Two producibles with the same domain but a differing tile.
    Conflict(Assembly, Assembly),
}

impl UndirectedWitness {
    pub fn assemblies(&self) -> (&Assembly, &Assembly) {
        match self {
            UndirectedWitness::Terminals(a, b) | UndirectedWitness::Conflict(a, b) => (a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectednessVerdict {
    Directed {
        terminal: Assembly,
    },
    Undirected {
        witness: UndirectedWitness,
        terminals_found: usize,
    },
    Unknown {
        truncated: bool,
        terminals_found: usize,
    },
}

impl DirectednessVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            DirectednessVerdict::Directed { .. } => "directed",
            DirectednessVerdict::Undirected { .. } => "undirected",
            DirectednessVerdict::Unknown { .. } => "unknown",
        }
    }
}

fn shape_conflict(level: &[Assembly]) -> Option<(Assembly, Assembly)> {
    let mut by_shape: HashMap<BTreeSet<crate::geometry::Point>, &Assembly> = HashMap::new();
    for a in level {
        if let Some(prev) = by_shape.insert(a.shape(), a) {
            return Some((prev.clone(), a.clone()));
        }
    }
    None
}

pub fn check_directed(
    system: &TileSystem,
    config: ExploreConfig,
) -> Result<DirectednessVerdict, ExploreError> {
    let mut conflict = None;
    let g = explore_graph_until(system, config, |level| {
        conflict = shape_conflict(level);
        conflict.is_some()
    })?;
    Ok(verdict_from_graph(&g, conflict))
}

fn verdict_from_graph(
    g: &ExplorationGraph,
    conflict: Option<(Assembly, Assembly)>,
) -> DirectednessVerdict {
    let terminals: Vec<usize> = g.terminal_indices().collect();
    if terminals.len() >= 2 {
        return DirectednessVerdict::Undirected {
            witness: UndirectedWitness::Terminals(
                g.states[terminals[0]].clone(),
                g.states[terminals[1]].clone(),
            ),
            terminals_found: terminals.len(),
        };
    }
    if let Some((a, b)) = conflict {
        return DirectednessVerdict::Undirected {
            witness: UndirectedWitness::Conflict(a, b),
            terminals_found: terminals.len(),
        };
    }
    if !g.truncated && terminals.len() == 1 {
        return DirectednessVerdict::Directed {
            terminal: g.states[terminals[0]].clone(),
        };
    }
    DirectednessVerdict::Unknown {
        truncated: g.truncated,
        terminals_found: terminals.len(),
    }
}

/// Directedness verdict of an already explored graph (used when the graph is
/// needed for other checks as well).
pub fn directedness_of_graph(g: &ExplorationGraph) -> DirectednessVerdict {
    let mut conflict = None;
    let mut by_level: BTreeMap<usize, Vec<Assembly>> = BTreeMap::new();
    for a in &g.states {
        by_level.entry(a.len()).or_default().push(a.clone());
    }
    for level in by_level.values() {
        if let Some(c) = shape_conflict(level) {
            conflict = Some(c);
            break;
        }
    }
    verdict_from_graph(g, conflict)
}
