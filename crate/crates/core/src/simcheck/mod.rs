//! Macrotile representation functions and bounded checks of the intrinsic
//! simulation definitions.

mod checks;

pub use checks::{
    run_checks, CheckKind, SimBounds, SimCheckReport, Verdict, Witness, WitnessSystem,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::geometry::{Dim, Point};
use crate::model::{Assembly, TileId, TileSystem};

/// The contents of one `m × m (× m)` block, keyed by offset within the block.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MBlock {
    pub cells: BTreeMap<Point, TileId>,
}

impl MBlock {
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn contains_pattern(&self, pattern: &[(Point, TileId)]) -> bool {
        pattern.iter().all(|(p, t)| self.cells.get(p) == Some(t))
    }
}

/// One resolver rule: if every `(offset, tile)` of `pattern` is present in a
/// block, the block represents `output`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub pattern: Vec<(Point, TileId)>,
    pub output: TileId,
}

/// An ordered rule list; the first matching rule wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolver {
    pub scale: i32,
    pub rules: Vec<Rule>,
}

pub fn eval_r(resolver: &Resolver, block: &MBlock) -> Option<TileId> {
    if block.is_empty() {
        return None;
    }
    resolver
        .rules
        .iter()
        .find(|r| block.contains_pattern(&r.pattern))
        .map(|r| r.output)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetupError {
    #[error("scale must be positive, got {0}")]
    NonPositiveScale(i32),
    #[error("resolver scale {resolver} differs from setup scale {setup}")]
    ScaleMismatch { resolver: i32, setup: i32 },
    #[error("simulator is {simulator}D but simulated system is {simulated}D; embed the simulated system first")]
    DimensionMismatch { simulator: u32, simulated: u32 },
    #[error("rule {0} has an empty pattern")]
    EmptyPattern(usize),
    #[error("rule {rule} uses offset {offset} outside the block")]
    OffsetOutOfRange { rule: usize, offset: Point },
    #[error("rule {rule} refers to unknown simulator tile #{}", tile.0)]
    UnknownSimulatorTile { rule: usize, tile: TileId },
    #[error("rule {rule} outputs unknown simulated tile #{}", tile.0)]
    UnknownSimulatedTile { rule: usize, tile: TileId },
}

/// Simulator `S`, simulated system `T`, scale and resolver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationSetup {
    simulator: TileSystem,
    simulated: TileSystem,
    resolver: Resolver,
}

impl SimulationSetup {
    pub fn new(
        simulator: TileSystem,
        simulated: TileSystem,
        scale: i32,
        resolver: Resolver,
    ) -> Result<Self, SetupError> {
        if scale <= 0 {
            return Err(SetupError::NonPositiveScale(scale));
        }
        if resolver.scale != scale {
            return Err(SetupError::ScaleMismatch {
                resolver: resolver.scale,
                setup: scale,
            });
        }
        if simulator.dim() != simulated.dim() {
            return Err(SetupError::DimensionMismatch {
                simulator: simulator.dim().number(),
                simulated: simulated.dim().number(),
            });
        }
        let dim = simulator.dim();
        let in_block = |p: Point| {
            let ok = |v: i32| (0..scale).contains(&v);
            ok(p.x) && ok(p.y) && if dim == Dim::Two { p.z == 0 } else { ok(p.z) }
        };
        for (i, r) in resolver.rules.iter().enumerate() {
            if r.pattern.is_empty() {
                return Err(SetupError::EmptyPattern(i));
            }
            for &(p, t) in &r.pattern {
                if !in_block(p) {
                    return Err(SetupError::OffsetOutOfRange { rule: i, offset: p });
                }
                if !simulator.tiles.contains(t) {
                    return Err(SetupError::UnknownSimulatorTile { rule: i, tile: t });
                }
            }
            if !simulated.tiles.contains(r.output) {
                return Err(SetupError::UnknownSimulatedTile {
                    rule: i,
                    tile: r.output,
                });
            }
        }
        Ok(SimulationSetup {
            simulator,
            simulated,
            resolver,
        })
    }

    /// Scale 1, one rule per simulator tile type mapping it to the
    /// simulated tile type of the same id.
    pub fn identity(system: &TileSystem) -> Self {
        let rules = system
            .tiles
            .ids()
            .map(|t| Rule {
                pattern: vec![(Point::ORIGIN, t)],
                output: t,
            })
            .collect();
        SimulationSetup::new(
            system.clone(),
            system.clone(),
            1,
            Resolver { scale: 1, rules },
        )
        .expect("identity resolver is well formed")
    }

    pub fn simulator(&self) -> &TileSystem {
        &self.simulator
    }

    pub fn simulated(&self) -> &TileSystem {
        &self.simulated
    }

    pub fn scale(&self) -> i32 {
        self.resolver.scale
    }

    pub fn resolver(&self) -> &Resolver {
        &self.resolver
    }

    /// The non-empty blocks of `assembly`, keyed by block coordinate.
    pub fn blocks(&self, assembly: &Assembly) -> BTreeMap<Point, MBlock> {
        let m = self.scale();
        let mut out: BTreeMap<Point, MBlock> = BTreeMap::new();
        for (p, t) in assembly.iter() {
            let b = p.div_floor(m);
            out.entry(b).or_default().cells.insert(p - b.scale(m), t);
        }
        out
    }

    pub fn block_at(&self, assembly: &Assembly, block: Point) -> MBlock {
        let m = self.scale();
        let origin = block.scale(m);
        let dz = if assembly.dim() == Dim::Three { m } else { 1 };
        let mut cells = BTreeMap::new();
        for z in 0..dz {
            for y in 0..m {
                for x in 0..m {
                    let off = Point::new(x, y, z);
                    if let Some(t) = assembly.get(origin + off) {
                        cells.insert(off, t);
                    }
                }
            }
        }
        MBlock { cells }
    }
}

/// Lifts the resolver to a whole assembly; unresolved blocks are empty space.
pub fn r_star(setup: &SimulationSetup, assembly: &Assembly) -> Assembly {
    Assembly::from_placements(
        setup.simulated.dim(),
        setup
            .blocks(assembly)
            .into_iter()
            .filter_map(|(b, block)| eval_r(&setup.resolver, &block).map(|t| (b, t))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FuzzKind {
    /// Only diagonally adjacent to a resolved block.
    DiagonalFuzz,
    /// Not adjacent to any resolved block at all.
    DistantFuzz,
}

impl fmt::Display for FuzzKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FuzzKind::DiagonalFuzz => "DiagonalFuzz",
            FuzzKind::DistantFuzz => "DistantFuzz",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzViolation {
    pub block: Point,
    pub kind: FuzzKind,
}

/// Non-empty unresolved blocks that are not axis-adjacent to a resolved
/// block. Assemblies with at most one non-empty block pass vacuously.
pub fn check_clean_mapping(setup: &SimulationSetup, assembly: &Assembly) -> Vec<FuzzViolation> {
    let blocks = setup.blocks(assembly);
    if blocks.len() <= 1 {
        return Vec::new();
    }
    let image = r_star(setup, assembly);
    let dim = setup.simulator.dim();
    let mut out = Vec::new();
    for b in blocks.keys() {
        if image.contains(*b) {
            continue;
        }
        if dim.directions().iter().any(|&d| image.contains(b.step(d))) {
            continue;
        }
        let dz = if dim == Dim::Three { 1 } else { 0 };
        let diagonal = (-1..=1).any(|x| {
            (-1..=1).any(|y| (-dz..=dz).any(|z| image.contains(*b + Point::new(x, y, z))))
        });
        out.push(FuzzViolation {
            block: *b,
            kind: if diagonal {
                FuzzKind::DiagonalFuzz
            } else {
                FuzzKind::DistantFuzz
            },
        });
    }
    out
}
