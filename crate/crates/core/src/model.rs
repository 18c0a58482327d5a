//! Glues, tile types, assemblies and tile systems.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::binding;
use crate::geometry::{Bounds, Dim, Direction, Point};

/// A glue label with a binding strength. The null glue is `("", 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Glue {
    pub label: String,
    pub strength: u32,
}

impl Glue {
    pub fn new(label: impl Into<String>, strength: u32) -> Self {
        Glue {
            label: label.into(),
            strength,
        }
    }

    pub fn null() -> Self {
        Glue::default()
    }

    pub fn is_null(&self) -> bool {
        self.label.is_empty() && self.strength == 0
    }

    /// Two abutting glues bind iff they are equal and have positive strength.
    pub fn binds(&self, other: &Glue) -> bool {
        self.strength > 0 && self == other
    }
}

impl fmt::Display for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.label, self.strength)
    }
}

/// Index of a tile type inside its [`TileSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TileId(pub u32);

impl TileId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileType {
    pub id: String,
    pub label: String,
    glues: [Glue; 6],
}

impl TileType {
    /// A tile with every side null.
    pub fn new(id: impl Into<String>) -> Self {
        let id = id.into();
        TileType {
            label: id.clone(),
            id,
            glues: Default::default(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_glue(mut self, d: Direction, glue: Glue) -> Self {
        self.glues[d.index()] = glue;
        self
    }

    /// Shorthand for `with_glue(d, Glue::new(label, strength))`.
    pub fn glue_on(self, d: Direction, label: &str, strength: u32) -> Self {
        self.with_glue(d, Glue::new(label, strength))
    }

    pub fn set_glue(&mut self, d: Direction, glue: Glue) {
        self.glues[d.index()] = glue;
    }

    pub fn glue(&self, d: Direction) -> &Glue {
        &self.glues[d.index()]
    }

    pub fn glues(&self) -> impl Iterator<Item = (Direction, &Glue)> {
        Direction::ALL
            .into_iter()
            .map(move |d| (d, &self.glues[d.index()]))
    }
}

/// A finite set of tile types of one dimension, with a glue index used by the
/// frontier computation.
#[derive(Clone, Debug)]
pub struct TileSet {
    dim: Dim,
    tiles: Vec<TileType>,
    by_id: HashMap<String, TileId>,
    by_glue: HashMap<(Direction, Glue), Vec<TileId>>,
}

impl PartialEq for TileSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.tiles == other.tiles
    }
}

impl Eq for TileSet {}

impl TileSet {
    /// Builds the set. Duplicate ids are kept (lookups resolve to the first
    /// occurrence) so that validation can report them.
    pub fn new(dim: Dim, tiles: Vec<TileType>) -> Self {
        let mut by_id = HashMap::new();
        let mut by_glue: HashMap<(Direction, Glue), Vec<TileId>> = HashMap::new();
        for (i, t) in tiles.iter().enumerate() {
            let id = TileId(i as u32);
            by_id.entry(t.id.clone()).or_insert(id);
            for &d in dim.directions() {
                let g = t.glue(d);
                if g.strength > 0 {
                    by_glue.entry((d, g.clone())).or_default().push(id);
                }
            }
        }
        TileSet {
            dim,
            tiles,
            by_id,
            by_glue,
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> &[TileType] {
        &self.tiles
    }

    pub fn ids(&self) -> impl Iterator<Item = TileId> {
        (0..self.tiles.len() as u32).map(TileId)
    }

    pub fn get(&self, id: TileId) -> Option<&TileType> {
        self.tiles.get(id.index())
    }

    /// Panics on an unknown id; callers validate ids first.
    pub fn tile(&self, id: TileId) -> &TileType {
        &self.tiles[id.index()]
    }

    pub fn lookup(&self, id: &str) -> Option<TileId> {
        self.by_id.get(id).copied()
    }

    pub fn contains(&self, id: TileId) -> bool {
        id.index() < self.tiles.len()
    }

    /// Tile types carrying exactly `glue` (positive strength) on side `d`.
    pub fn with_glue(&self, d: Direction, glue: &Glue) -> &[TileId] {
        // Building the key clones the label; the index is small enough that
        // this is not the bottleneck of frontier computation.
        self.by_glue
            .get(&(d, glue.clone()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn duplicate_ids(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut dups = BTreeSet::new();
        for t in &self.tiles {
            if !seen.insert(t.id.as_str()) {
                dups.insert(t.id.clone());
            }
        }
        dups.into_iter().collect()
    }
}

/// A partial map from lattice points to tile types.
///
/// The type is used both for configurations and for assemblies; connectivity
/// is checked with [`Assembly::is_connected`] rather than enforced on every
/// insertion. The `BTreeMap` keeps placements in canonical coordinate order,
/// so derived `Eq`, `Ord` and `Hash` are canonical.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assembly {
    dim: Dim,
    tiles: BTreeMap<Point, TileId>,
}

impl Assembly {
    pub fn empty(dim: Dim) -> Self {
        Assembly {
            dim,
            tiles: BTreeMap::new(),
        }
    }

    pub fn singleton(dim: Dim, p: Point, t: TileId) -> Self {
        let mut a = Assembly::empty(dim);
        a.tiles.insert(p, t);
        a
    }

    pub fn from_placements<I: IntoIterator<Item = (Point, TileId)>>(dim: Dim, it: I) -> Self {
        Assembly {
            dim,
            tiles: it.into_iter().collect(),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, p: Point) -> Option<TileId> {
        self.tiles.get(&p).copied()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.tiles.contains_key(&p)
    }

    /// Raw insertion without any attachment check.
    pub fn insert(&mut self, p: Point, t: TileId) -> Option<TileId> {
        self.tiles.insert(p, t)
    }

    pub fn remove(&mut self, p: Point) -> Option<TileId> {
        self.tiles.remove(&p)
    }

    /// Placements in canonical (coordinate) order.
    pub fn iter(&self) -> impl Iterator<Item = (Point, TileId)> + '_ {
        self.tiles.iter().map(|(&p, &t)| (p, t))
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.tiles.keys().copied()
    }

    pub fn shape(&self) -> BTreeSet<Point> {
        self.tiles.keys().copied().collect()
    }

    pub fn bounds(&self) -> Option<Bounds> {
        Bounds::of(self.points())
    }

    pub fn translate(&self, c: Point) -> Assembly {
        Assembly::from_placements(self.dim, self.iter().map(|(p, t)| (p + c, t)))
    }

    /// Restriction to the points accepted by `keep`.
    pub fn restrict<F: Fn(Point) -> bool>(&self, keep: F) -> Assembly {
        Assembly::from_placements(self.dim, self.iter().filter(|&(p, _)| keep(p)))
    }

    /// Union; on overlap the placement from `other` wins.
    pub fn union(&self, other: &Assembly) -> Assembly {
        let mut out = self.clone();
        for (p, t) in other.iter() {
            out.tiles.insert(p, t);
        }
        out
    }

    pub fn is_subassembly_of(&self, other: &Assembly) -> bool {
        self.dim == other.dim
            && self.len() <= other.len()
            && self.iter().all(|(p, t)| other.get(p) == Some(t))
    }

    /// Connectivity of the domain in the lattice graph (ignores glues).
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.points().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for &d in self.dim.directions() {
                let q = p.step(d);
                if self.contains(q) && seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
        seen.len() == self.len()
    }
}

/// Free function form of [`Assembly::is_subassembly_of`].
pub fn is_subassembly(a: &Assembly, b: &Assembly) -> bool {
    a.is_subassembly_of(b)
}

/// Free function form of [`Assembly::shape`].
pub fn shape(a: &Assembly) -> BTreeSet<Point> {
    a.shape()
}

/// Dimension plus diffusion restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelVariant {
    pub dim: Dim,
    pub diffusion_restricted: bool,
}

impl ModelVariant {
    pub const ATAM: ModelVariant = ModelVariant {
        dim: Dim::Two,
        diffusion_restricted: false,
    };
    pub const PATAM: ModelVariant = ModelVariant {
        dim: Dim::Two,
        diffusion_restricted: true,
    };
    pub const ATAM3D: ModelVariant = ModelVariant {
        dim: Dim::Three,
        diffusion_restricted: false,
    };
    pub const SATAM: ModelVariant = ModelVariant {
        dim: Dim::Three,
        diffusion_restricted: true,
    };

    pub const ALL: [ModelVariant; 4] = [Self::ATAM, Self::PATAM, Self::ATAM3D, Self::SATAM];

    pub fn name(self) -> &'static str {
        match (self.dim, self.diffusion_restricted) {
            (Dim::Two, false) => "aTAM",
            (Dim::Two, true) => "PaTAM",
            (Dim::Three, false) => "3DaTAM",
            (Dim::Three, true) => "SaTAM",
        }
    }

    pub fn from_name(s: &str) -> Option<ModelVariant> {
        Self::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
    }

    /// The same dimension without the diffusion restriction.
    pub fn unrestricted(self) -> ModelVariant {
        ModelVariant {
            dim: self.dim,
            diffusion_restricted: false,
        }
    }

    pub fn with_diffusion(self, on: bool) -> ModelVariant {
        ModelVariant {
            dim: self.dim,
            diffusion_restricted: on,
        }
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown tile id {0:?} in assembly")]
    UnknownTileInAssembly(TileId),
    #[error("assembly dimension does not match tile set dimension")]
    DimensionMismatch,
}

/// A tile set, seed assembly, temperature and model variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSystem {
    pub name: String,
    pub tiles: Arc<TileSet>,
    pub seed: Assembly,
    pub temperature: i64,
    pub variant: ModelVariant,
}

impl TileSystem {
    pub fn new(
        name: impl Into<String>,
        tiles: TileSet,
        seed: Assembly,
        temperature: i64,
        variant: ModelVariant,
    ) -> Self {
        TileSystem {
            name: name.into(),
            tiles: Arc::new(tiles),
            seed,
            temperature,
            variant,
        }
    }

    pub fn dim(&self) -> Dim {
        self.variant.dim
    }

    /// The same system under a different model variant of equal dimension.
    pub fn with_variant(&self, variant: ModelVariant) -> TileSystem {
        TileSystem {
            variant,
            ..self.clone()
        }
    }

    pub fn tile(&self, id: TileId) -> &TileType {
        self.tiles.tile(id)
    }

    pub fn lookup(&self, id: &str) -> Option<TileId> {
        self.tiles.lookup(id)
    }

    /// Looks up a tile id that the caller knows to exist.
    pub fn id(&self, id: &str) -> TileId {
        self.tiles
            .lookup(id)
            .unwrap_or_else(|| panic!("no tile type {id:?} in system {:?}", self.name))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UnknownTileInSeed { pos: Point, tile: String },
    DuplicateTileId(String),
    SeedUnstable { min_cut: u64, temperature: i64 },
    SeedDisconnected,
    NegativeTemperature(i64),
    EmptySeed,
    DimensionMismatch { detail: String },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::UnknownTileInSeed { .. } => "UnknownTileInSeed",
            Violation::DuplicateTileId(_) => "DuplicateTileId",
            Violation::SeedUnstable { .. } => "SeedUnstable",
            Violation::SeedDisconnected => "SeedDisconnected",
            Violation::NegativeTemperature(_) => "NegativeTemperature",
            Violation::EmptySeed => "EmptySeed",
            Violation::DimensionMismatch { .. } => "DimensionMismatch",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownTileInSeed { pos, tile } => {
                write!(f, "seed tile {tile:?} at {pos} is not in the tile set")
            }
            Violation::DuplicateTileId(id) => write!(f, "tile id {id:?} appears more than once"),
            Violation::SeedUnstable {
                min_cut,
                temperature,
            } => {
                write!(
                    f,
                    "seed min cut {min_cut} is below temperature {temperature}"
                )
            }
            Violation::SeedDisconnected => write!(f, "seed is not connected"),
            Violation::NegativeTemperature(t) => write!(f, "temperature {t} is not positive"),
            Violation::EmptySeed => write!(f, "seed is empty"),
            Violation::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

pub fn validate_tile_system(system: &TileSystem) -> ValidationReport {
    let mut violations = Vec::new();
    let ts = &system.tiles;
    for id in ts.duplicate_ids() {
        violations.push(Violation::DuplicateTileId(id));
    }
    if system.temperature <= 0 {
        violations.push(Violation::NegativeTemperature(system.temperature));
    }
    if ts.dim() != system.variant.dim || system.seed.dim() != system.variant.dim {
        violations.push(Violation::DimensionMismatch {
            detail: format!(
                "variant {} with {}D tile set and {}D seed",
                system.variant,
                ts.dim().number(),
                system.seed.dim().number()
            ),
        });
    }
    if ts.dim() == Dim::Two {
        for t in ts.tiles() {
            if !t.glue(Direction::U).is_null() || !t.glue(Direction::D).is_null() {
                violations.push(Violation::DimensionMismatch {
                    detail: format!("planar tile {:?} has a vertical glue", t.id),
                });
            }
        }
    }
    let mut unknown = false;
    for (p, t) in system.seed.iter() {
        if !ts.contains(t) {
            unknown = true;
            violations.push(Violation::UnknownTileInSeed {
                pos: p,
                tile: format!("#{}", t.0),
            });
        }
        if !system.variant.dim.contains(p) {
            violations.push(Violation::DimensionMismatch {
                detail: format!("seed point {p} is off the plane"),
            });
        }
    }
    if system.seed.is_empty() {
        violations.push(Violation::EmptySeed);
    } else if !system.seed.is_connected() {
        violations.push(Violation::SeedDisconnected);
    } else if !unknown && system.temperature > 0 {
        if let Ok(g) = binding::binding_graph(&system.seed, ts) {
            if let Some(cut) = binding::min_cut(&g) {
                if (cut as i64) < system.temperature {
                    violations.push(Violation::SeedUnstable {
                        min_cut: cut,
                        temperature: system.temperature,
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}
