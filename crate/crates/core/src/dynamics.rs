//! Frontier, single-tile attachment, traces and seeded random runs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diffusion::Enclosure;
use crate::geometry::Point;
use crate::model::{Assembly, TileId, TileSet, TileSystem};

/// One tile of a given type at one location.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub pos: Point,
    pub tile: TileId,
}

impl Placement {
    pub fn new(pos: Point, tile: TileId) -> Self {
        Placement { pos, tile }
    }

    pub fn translate(self, c: Point) -> Placement {
        Placement {
            pos: self.pos + c,
            tile: self.tile,
        }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->#{}", self.pos, self.tile.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AttachError {
    #[error("location {0} is occupied")]
    Occupied(Point),
    #[error("tile #{} at {pos} binds with strength {strength} < {temperature}", tile.0)]
    InsufficientStrength {
        pos: Point,
        tile: TileId,
        strength: u32,
        temperature: i64,
    },
    #[error("location {0} lies in a constrained region")]
    ConstrainedLocation(Point),
    #[error("unknown tile #{}", .0 .0)]
    UnknownTile(TileId),
    #[error("location {0} is outside the system's dimension")]
    OffLattice(Point),
}

impl AttachError {
    pub fn kind(&self) -> &'static str {
        match self {
            AttachError::Occupied(_) => "Occupied",
            AttachError::InsufficientStrength { .. } => "InsufficientStrength",
            AttachError::ConstrainedLocation(_) => "ConstrainedLocation",
            AttachError::UnknownTile(_) => "UnknownTile",
            AttachError::OffLattice(_) => "OffLattice",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid step {index}: {error}")]
pub struct TraceError {
    pub index: usize,
    pub error: AttachError,
}

/// An assembly sequence: placements replayed in order from the seed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AssemblyTrace {
    pub placements: Vec<Placement>,
}

impl AssemblyTrace {
    pub fn new(placements: Vec<Placement>) -> Self {
        AssemblyTrace { placements }
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn prefix(&self, n: usize) -> AssemblyTrace {
        AssemblyTrace::new(self.placements[..n.min(self.len())].to_vec())
    }

    pub fn push(&mut self, p: Placement) {
        self.placements.push(p);
    }
}

impl From<Vec<Placement>> for AssemblyTrace {
    fn from(placements: Vec<Placement>) -> Self {
        AssemblyTrace { placements }
    }
}

/// Sum of strengths of positive glues on `tile` that match occupied neighbours.
pub fn binding_strength(assembly: &Assembly, tiles: &TileSet, pos: Point, tile: TileId) -> u32 {
    let tt = tiles.tile(tile);
    let mut sum = 0;
    for &d in tiles.dim().directions() {
        if let Some(n) = assembly.get(pos.step(d)) {
            let g = tt.glue(d);
            if g.binds(tiles.tile(n).glue(d.opposite())) {
                sum += g.strength;
            }
        }
    }
    sum
}

/// Empty locations adjacent to the assembly, in canonical order.
pub fn perimeter(assembly: &Assembly) -> BTreeSet<Point> {
    let dim = assembly.dim();
    let mut out = BTreeSet::new();
    for p in assembly.points() {
        for &d in dim.directions() {
            let q = p.step(d);
            if !assembly.contains(q) {
                out.insert(q);
            }
        }
    }
    out
}

/// Placements that can attach to `assembly` in one step, ordered by location
/// and then tile id.
pub fn frontier(assembly: &Assembly, system: &TileSystem) -> Vec<Placement> {
    let enclosure = system
        .variant
        .diffusion_restricted
        .then(|| Enclosure::of(assembly));
    let mut out = Vec::new();
    for q in perimeter(assembly) {
        if enclosure.as_ref().is_some_and(|e| e.is_constrained(q)) {
            continue;
        }
        out.extend(
            frontier_at(assembly, system, q)
                .into_iter()
                .map(|t| Placement::new(q, t)),
        );
    }
    out
}

/// Tile types that can attach at the empty location `q`, ignoring diffusion.
pub fn frontier_at(assembly: &Assembly, system: &TileSystem, q: Point) -> Vec<TileId> {
    let tiles = &*system.tiles;
    let mut sums: BTreeMap<TileId, u32> = BTreeMap::new();
    for &d in tiles.dim().directions() {
        let Some(n) = assembly.get(q.step(d)) else {
            continue;
        };
        let g = tiles.tile(n).glue(d.opposite());
        if g.strength == 0 {
            continue;
        }
        for &t in tiles.with_glue(d, g) {
            *sums.entry(t).or_insert(0) += g.strength;
        }
    }
    sums.into_iter()
        .filter(|&(_, s)| s as i64 >= system.temperature)
        .map(|(t, _)| t)
        .collect()
}

fn check_attach(assembly: &Assembly, p: Placement, system: &TileSystem) -> Result<(), AttachError> {
    if !system.tiles.contains(p.tile) {
        return Err(AttachError::UnknownTile(p.tile));
    }
    if !system.dim().contains(p.pos) {
        return Err(AttachError::OffLattice(p.pos));
    }
    if assembly.contains(p.pos) {
        return Err(AttachError::Occupied(p.pos));
    }
    let strength = binding_strength(assembly, &system.tiles, p.pos, p.tile);
    if (strength as i64) < system.temperature {
        return Err(AttachError::InsufficientStrength {
            pos: p.pos,
            tile: p.tile,
            strength,
            temperature: system.temperature,
        });
    }
    if system.variant.diffusion_restricted && Enclosure::of(assembly).is_constrained(p.pos) {
        return Err(AttachError::ConstrainedLocation(p.pos));
    }
    Ok(())
}

/// Returns `assembly` plus `p`; the input is left unchanged.
pub fn attach(
    assembly: &Assembly,
    p: Placement,
    system: &TileSystem,
) -> Result<Assembly, AttachError> {
    check_attach(assembly, p, system)?;
    let mut out = assembly.clone();
    out.insert(p.pos, p.tile);
    Ok(out)
}

/// In-place variant of [`attach`]; on error the assembly is untouched.
pub fn attach_mut(
    assembly: &mut Assembly,
    p: Placement,
    system: &TileSystem,
) -> Result<(), AttachError> {
    check_attach(assembly, p, system)?;
    assembly.insert(p.pos, p.tile);
    Ok(())
}

pub fn run_trace(system: &TileSystem, trace: &AssemblyTrace) -> Result<Assembly, TraceError> {
    let mut a = system.seed.clone();
    for (index, &p) in trace.placements.iter().enumerate() {
        attach_mut(&mut a, p, system).map_err(|error| TraceError { index, error })?;
    }
    Ok(a)
}

/// Replays as many steps as are valid and returns the assembly together with
/// the first failure, if any.
pub fn run_trace_lenient(
    system: &TileSystem,
    trace: &AssemblyTrace,
) -> (Assembly, Option<TraceError>) {
    let mut a = system.seed.clone();
    for (index, &p) in trace.placements.iter().enumerate() {
        if let Err(error) = attach_mut(&mut a, p, system) {
            return (a, Some(TraceError { index, error }));
        }
    }
    (a, None)
}

/// Samples one assembly sequence. Each step draws uniformly from the
/// canonically ordered frontier using `ChaCha8Rng::seed_from_u64(rng_seed)`.
pub fn random_run(system: &TileSystem, rng_seed: u64, max_steps: usize) -> AssemblyTrace {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut a = system.seed.clone();
    let mut trace = AssemblyTrace::default();
    for _ in 0..max_steps {
        let f = frontier(&a, system);
        if f.is_empty() {
            break;
        }
        let p = f[rng.random_range(0..f.len())];
        a.insert(p.pos, p.tile);
        trace.push(p);
    }
    trace
}

/// Grows by always taking the first frontier placement until the frontier is
/// empty or `max_steps` is reached.
pub fn greedy_run(system: &TileSystem, max_steps: usize) -> AssemblyTrace {
    let mut a = system.seed.clone();
    let mut trace = AssemblyTrace::default();
    for _ in 0..max_steps {
        let Some(&p) = frontier(&a, system).first() else {
            break;
        };
        a.insert(p.pos, p.tile);
        trace.push(p);
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Dim, Direction::*};
    use crate::model::{ModelVariant, TileType};

    fn ab() -> TileSystem {
        let ts = TileSet::new(
            Dim::Two,
            vec![
                TileType::new("S").glue_on(N, "a", 1),
                TileType::new("A").glue_on(S, "a", 1),
                TileType::new("B").glue_on(S, "a", 1),
            ],
        );
        TileSystem::new(
            "ab",
            ts,
            Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0)),
            1,
            ModelVariant::ATAM,
        )
    }

    #[test]
    fn ab_frontier_has_two_options() {
        let s = ab();
        let f = frontier(&s.seed, &s);
        assert_eq!(
            f,
            vec![
                Placement::new(Point::xy(0, 1), TileId(1)),
                Placement::new(Point::xy(0, 1), TileId(2))
            ]
        );
    }

    #[test]
    fn attach_errors() {
        let s = ab();
        let err = attach(&s.seed, Placement::new(Point::ORIGIN, TileId(1)), &s).unwrap_err();
        assert_eq!(err, AttachError::Occupied(Point::ORIGIN));
        let err = attach(&s.seed, Placement::new(Point::xy(1, 0), TileId(1)), &s).unwrap_err();
        assert_eq!(err.kind(), "InsufficientStrength");
        let err = attach(&s.seed, Placement::new(Point::xy(0, 1), TileId(9)), &s).unwrap_err();
        assert_eq!(err.kind(), "UnknownTile");
        let ok = attach(&s.seed, Placement::new(Point::xy(0, 1), TileId(1)), &s).unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(s.seed.len(), 1);
    }

    #[test]
    fn run_trace_reports_index() {
        let s = ab();
        assert_eq!(run_trace(&s, &AssemblyTrace::default()).unwrap(), s.seed);
        let t = AssemblyTrace::new(vec![
            Placement::new(Point::xy(0, 1), TileId(1)),
            Placement::new(Point::xy(0, 1), TileId(2)),
        ]);
        let e = run_trace(&s, &t).unwrap_err();
        assert_eq!(e.index, 1);
    }

    #[test]
    fn random_run_is_deterministic() {
        let s = ab();
        assert!(random_run(&s, 3, 0).is_empty());
        for seed in 0..20 {
            let t = random_run(&s, seed, 10);
            assert_eq!(t.len(), 1);
            assert_eq!(t, random_run(&s, seed, 10));
        }
    }

    #[test]
    fn cooperation_needs_two_weak_glues() {
        let ts = TileSet::new(
            Dim::Two,
            vec![
                TileType::new("corner")
                    .glue_on(N, "v", 2)
                    .glue_on(E, "h", 2),
                TileType::new("up").glue_on(S, "v", 2).glue_on(E, "x", 1),
                TileType::new("right").glue_on(W, "h", 2).glue_on(N, "y", 1),
                TileType::new("fill").glue_on(W, "x", 1).glue_on(S, "y", 1),
            ],
        );
        let s = TileSystem::new(
            "coop",
            ts,
            Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0)),
            2,
            ModelVariant::ATAM,
        );
        let a = run_trace(
            &s,
            &AssemblyTrace::new(vec![Placement::new(Point::xy(0, 1), TileId(1))]),
        )
        .unwrap();
        assert!(frontier(&a, &s).iter().all(|p| p.pos != Point::xy(1, 1)));
        let a = attach(&a, Placement::new(Point::xy(1, 0), TileId(2)), &s).unwrap();
        assert!(frontier(&a, &s).contains(&Placement::new(Point::xy(1, 1), TileId(3))));
    }
}
