//! Generators for the four counterexample systems, their scenario scripts,
//! and small simulation fixtures.

mod ab;
mod chambers;
mod counters;
mod embed;
pub mod fixtures;
mod rectangle;

pub use ab::undirected_ab;
pub use chambers::{
    chambers, completed_structure_system, max_tunnel_occupancy, scenario_plug_chambers,
    tunnel_cross_section, ChamberLayout,
};
pub use counters::{
    arm_prefix_trace, blocking_counters, column_bottom, counter_layouts, scenario_pump_arm,
    CounterLayout,
};
pub use embed::{embed_2d_in_3d, EmbedError};
pub use rectangle::{rectangle_arms, scenario_seal_rectangle, RectangleParams};

use thiserror::Error;

use crate::dynamics::{frontier, AssemblyTrace, Placement, TraceError};
use crate::model::{Assembly, TileSystem};
use crate::splice::SpliceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no matching window pair along the trace")]
    NoMatchingWindow,
    #[error(transparent)]
    Splice(#[from] SpliceError),
    #[error("scenario trace does not replay: {0}")]
    Trace(#[from] TraceError),
}

impl ScenarioError {
    pub fn kind(&self) -> &'static str {
        match self {
            ScenarioError::InvalidParams(_) => "InvalidParams",
            ScenarioError::NoMatchingWindow => "NoMatchingWindow",
            ScenarioError::Splice(e) => e.kind(),
            ScenarioError::Trace(_) => "InvalidStep",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub name: String,
    /// Number of trace steps replayed to reach this assembly.
    pub step: usize,
    pub assembly: Assembly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioResult {
    pub name: String,
    pub system: TileSystem,
    pub trace: AssemblyTrace,
    pub checkpoints: Vec<Checkpoint>,
    pub assertions: Vec<(String, bool)>,
}

impl ScenarioResult {
    fn new(name: &str, system: TileSystem) -> Self {
        ScenarioResult {
            name: name.into(),
            system,
            trace: AssemblyTrace::default(),
            checkpoints: Vec::new(),
            assertions: Vec::new(),
        }
    }

    fn checkpoint(&mut self, name: &str, assembly: &Assembly) {
        self.checkpoints.push(Checkpoint {
            name: name.into(),
            step: self.trace.len(),
            assembly: assembly.clone(),
        });
    }

    fn assert(&mut self, name: impl Into<String>, value: bool) {
        self.assertions.push((name.into(), value));
    }

    pub fn assertion(&self, name: &str) -> Option<bool> {
        self.assertions
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, v)| v)
    }

    pub fn checkpoint_named(&self, name: &str) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|&(_, v)| v)
    }
}

/// Repeatedly attaches the first frontier placement accepted by `keep`,
/// appending to `trace` and `assembly`, until none is left.
pub(crate) fn grow_where(
    system: &TileSystem,
    assembly: &mut Assembly,
    trace: &mut AssemblyTrace,
    keep: impl Fn(&Placement) -> bool,
    max_steps: usize,
) {
    for _ in 0..max_steps {
        let Some(p) = frontier(assembly, system).into_iter().find(|p| keep(p)) else {
            break;
        };
        assembly.insert(p.pos, p.tile);
        trace.push(p);
    }
}
