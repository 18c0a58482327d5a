//! Tile-assembly engine: the abstract Tile-Assembly Model in two and three
//! dimensions, with and without diffusion restriction, plus window-movie
//! splicing, bounded intrinsic-simulation checks and a few classic
//! counterexample systems.

pub mod binding;
pub mod bounds;
pub mod diffusion;
pub mod dynamics;
pub mod explore;
pub mod geometry;
pub mod io;
pub mod model;
pub mod movie;
pub mod render;
pub mod simcheck;
pub mod splice;
pub mod systems;
pub mod window;

pub use binding::{binding_graph, is_tau_stable, min_cut, BindingGraph};
pub use bounds::{chamber_bounds, pumping_bound};
pub use diffusion::{constrained_regions, is_constrained_location, Enclosure};
pub use dynamics::{
    attach, frontier, greedy_run, random_run, run_trace, AssemblyTrace, AttachError, Placement,
    TraceError,
};
pub use explore::{
    check_directed, explore_graph, explore_producibles, DirectednessVerdict, ExplorationGraph,
    ExplorationResult, ExploreConfig, ExploreError,
};
pub use geometry::{Bounds, Dim, Direction, Point};
pub use model::{
    validate_tile_system, Assembly, Glue, ModelError, ModelVariant, TileId, TileSet, TileSystem,
    TileType, ValidationReport, Violation,
};
pub use movie::{
    bond_forming_submovie, extract_movie, movies_equal, MovieEntry, MovieError, WindowMovie,
};
pub use simcheck::{run_checks, CheckKind, SimBounds, SimCheckReport, SimulationSetup, Verdict};
pub use splice::{
    find_matching_window_pair, pump, splice, PumpOutcome, Repetitions, SpliceError, SpliceMode,
    SpliceOptions, Spliced, Validation,
};
pub use window::{Edge, Window, WindowError};
