//! Versioned JSON documents for systems, traces, simulation setups, windows
//! and movies.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::{AssemblyTrace, Placement};
use crate::geometry::{Dim, Direction, Point};
use crate::model::{
    validate_tile_system, Assembly, Glue, ModelVariant, TileId, TileSet, TileSystem, TileType,
    ValidationReport, Violation,
};
use crate::movie::{MovieEntry, WindowMovie};
use crate::simcheck::{Resolver, Rule, SetupError, SimulationSetup};
use crate::window::{Edge, Window, WindowError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    SchemaVersionUnsupported(u64),
    #[error("unknown tile id {0:?}")]
    UnknownTile(String),
    #[error("position {pos:?} does not fit a {dim}D document")]
    BadPosition { pos: Vec<i32>, dim: u32 },
    #[error("unsupported dimension {0}")]
    BadDimension(u32),
    #[error(transparent)]
    Setup(#[from] SetupError),
    #[error(transparent)]
    Window(#[from] WindowError),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl IoError {
    pub fn kind(&self) -> &'static str {
        match self {
            IoError::Parse { .. } => "ParseError",
            IoError::SchemaVersionUnsupported(_) => "SchemaVersionUnsupported",
            IoError::UnknownTile(_) => "UnknownTile",
            IoError::BadPosition { .. } => "BadPosition",
            IoError::BadDimension(_) => "BadDimension",
            IoError::Setup(_) => "InvalidSetup",
            IoError::Window(_) => "InvalidWindow",
            IoError::File { .. } => "FileError",
        }
    }
}

fn parse_error(e: serde_json::Error) -> IoError {
    IoError::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

/// Parses `text`, rejecting any `format` other than [`FORMAT_VERSION`] before
/// the schema itself is checked.
fn parse_versioned<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, IoError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    if let Some(v) = value.get("format").and_then(|v| v.as_u64()) {
        if v != u64::from(FORMAT_VERSION) {
            return Err(IoError::SchemaVersionUnsupported(v));
        }
    }
    serde_json::from_str(text).map_err(parse_error)
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn read_file(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_owned(),
        source,
    })
}

fn version() -> u32 {
    FORMAT_VERSION
}

// ---------------------------------------------------------------- positions

pub fn pos_to_vec(p: Point, dim: Dim) -> Vec<i32> {
    p.coords(dim)
}

pub fn vec_to_pos(v: &[i32], dim: Dim) -> Result<Point, IoError> {
    match (dim, v) {
        (Dim::Two, [x, y]) => Ok(Point::xy(*x, *y)),
        (Dim::Three, [x, y, z]) => Ok(Point::new(*x, *y, *z)),
        _ => Err(IoError::BadPosition {
            pos: v.to_vec(),
            dim: dim.number(),
        }),
    }
}

fn dim_of(n: u32) -> Result<Dim, IoError> {
    Dim::from_number(n).ok_or(IoError::BadDimension(n))
}

// ---------------------------------------------------------------- systems

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlueDoc {
    pub label: String,
    pub strength: u32,
}

/// Glues keyed by direction letter; null glues are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluesDoc {
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<GlueDoc>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<GlueDoc>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<GlueDoc>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub w: Option<GlueDoc>,
    #[serde(rename = "U", default, skip_serializing_if = "Option::is_none")]
    pub u: Option<GlueDoc>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<GlueDoc>,
}

impl GluesDoc {
    fn slot(&mut self, d: Direction) -> &mut Option<GlueDoc> {
        match d {
            Direction::N => &mut self.n,
            Direction::S => &mut self.s,
            Direction::E => &mut self.e,
            Direction::W => &mut self.w,
            Direction::U => &mut self.u,
            Direction::D => &mut self.d,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileTypeDoc {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub glues: GluesDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub pos: Vec<i32>,
    pub tile: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct SystemDocument {
    #[serde(default = "version")]
    pub format: u32,
    pub name: String,
    pub dimension: u32,
    pub temperature: i64,
    #[serde(default)]
    pub diffusion_restricted: bool,
    pub tile_types: Vec<TileTypeDoc>,
    pub seed: Vec<PlacementDoc>,
}

impl SystemDocument {
    pub fn from_system(s: &TileSystem) -> Self {
        let dim = s.dim();
        let tile_types = s
            .tiles
            .tiles()
            .iter()
            .map(|t| {
                let mut glues = GluesDoc::default();
                for (d, g) in t.glues() {
                    if !g.is_null() {
                        *glues.slot(d) = Some(GlueDoc {
                            label: g.label.clone(),
                            strength: g.strength,
                        });
                    }
                }
                TileTypeDoc {
                    id: t.id.clone(),
                    label: (t.label != t.id).then(|| t.label.clone()),
                    glues,
                }
            })
            .collect();
        SystemDocument {
            format: FORMAT_VERSION,
            name: s.name.clone(),
            dimension: dim.number(),
            temperature: s.temperature,
            diffusion_restricted: s.variant.diffusion_restricted,
            tile_types,
            seed: assembly_placements(&s.seed, &s.tiles),
        }
    }

    fn tile_set(&self) -> Result<TileSet, IoError> {
        let dim = dim_of(self.dimension)?;
        let tiles = self
            .tile_types
            .iter()
            .map(|t| {
                let mut tt = TileType::new(t.id.clone());
                if let Some(l) = &t.label {
                    tt = tt.with_label(l.clone());
                }
                let mut g = t.glues.clone();
                for d in Direction::ALL {
                    if let Some(gd) = g.slot(d).take() {
                        tt.set_glue(d, Glue::new(gd.label, gd.strength));
                    }
                }
                tt
            })
            .collect();
        Ok(TileSet::new(dim, tiles))
    }

    /// Builds the system; seed tiles must name known tile types.
    pub fn to_system(&self) -> Result<TileSystem, IoError> {
        let tiles = self.tile_set()?;
        let dim = tiles.dim();
        let mut seed = Assembly::empty(dim);
        for p in &self.seed {
            let id = tiles
                .lookup(&p.tile)
                .ok_or_else(|| IoError::UnknownTile(p.tile.clone()))?;
            seed.insert(vec_to_pos(&p.pos, dim)?, id);
        }
        let variant = ModelVariant {
            dim,
            diffusion_restricted: self.diffusion_restricted,
        };
        Ok(TileSystem::new(
            self.name.clone(),
            tiles,
            seed,
            self.temperature,
            variant,
        ))
    }
}

pub fn assembly_placements(a: &Assembly, tiles: &TileSet) -> Vec<PlacementDoc> {
    a.iter()
        .map(|(p, t)| PlacementDoc {
            pos: pos_to_vec(p, a.dim()),
            tile: tiles.tile(t).id.clone(),
        })
        .collect()
}

pub fn placement_doc(p: Placement, tiles: &TileSet) -> PlacementDoc {
    PlacementDoc {
        pos: pos_to_vec(p.pos, tiles.dim()),
        tile: tiles.tile(p.tile).id.clone(),
    }
}

pub fn placement_from_doc(d: &PlacementDoc, tiles: &TileSet) -> Result<Placement, IoError> {
    let tile = tiles
        .lookup(&d.tile)
        .ok_or_else(|| IoError::UnknownTile(d.tile.clone()))?;
    Ok(Placement::new(vec_to_pos(&d.pos, tiles.dim())?, tile))
}

pub fn parse_system(text: &str) -> Result<SystemDocument, IoError> {
    parse_versioned(text)
}

pub fn serialize_system(doc: &SystemDocument) -> String {
    to_pretty(doc)
}

/// Validation of a parsed document: seed tiles naming unknown types are
/// reported, and the rest of the system is validated as usual.
pub fn validate_document(doc: &SystemDocument) -> Result<ValidationReport, IoError> {
    let tiles = doc.tile_set()?;
    let dim = tiles.dim();
    let mut unknown = Vec::new();
    let mut known = SystemDocument {
        seed: Vec::new(),
        ..doc.clone()
    };
    for p in &doc.seed {
        if tiles.lookup(&p.tile).is_some() {
            known.seed.push(p.clone());
        } else {
            unknown.push(Violation::UnknownTileInSeed {
                pos: vec_to_pos(&p.pos, dim)?,
                tile: p.tile.clone(),
            });
        }
    }
    let mut report = validate_tile_system(&known.to_system()?);
    if !unknown.is_empty() {
        report.violations.retain(|v| v.kind() != "EmptySeed");
        unknown.extend(report.violations);
        report.violations = unknown;
    }
    Ok(report)
}

pub fn read_system(path: &Path) -> Result<TileSystem, IoError> {
    parse_system(&read_file(path)?)?.to_system()
}

// ---------------------------------------------------------------- traces

/// A system given either by path (relative to the referring document) or
/// inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemRef {
    Path { path: String },
    Inline(Box<SystemDocument>),
}

impl SystemRef {
    pub fn resolve(&self, base: Option<&Path>) -> Result<TileSystem, IoError> {
        match self {
            SystemRef::Inline(doc) => doc.to_system(),
            SystemRef::Path { path } => {
                let p = Path::new(path);
                let full = match base {
                    Some(b) if p.is_relative() => b.join(p),
                    _ => p.to_owned(),
                };
                read_system(&full)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct RngDoc {
    pub seed: u64,
    pub max_steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    #[serde(default = "version")]
    pub format: u32,
    pub system: SystemRef,
    pub placements: Vec<PlacementDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rng: Option<RngDoc>,
}

impl TraceDocument {
    pub fn inline(system: &TileSystem, trace: &AssemblyTrace, rng: Option<RngDoc>) -> Self {
        TraceDocument {
            format: FORMAT_VERSION,
            system: SystemRef::Inline(Box::new(SystemDocument::from_system(system))),
            placements: trace
                .placements
                .iter()
                .map(|&p| placement_doc(p, &system.tiles))
                .collect(),
            rng,
        }
    }

    pub fn trace_for(&self, system: &TileSystem) -> Result<AssemblyTrace, IoError> {
        self.placements
            .iter()
            .map(|p| placement_from_doc(p, &system.tiles))
            .collect::<Result<Vec<_>, _>>()
            .map(AssemblyTrace::new)
    }

    pub fn resolve(&self, base: Option<&Path>) -> Result<(TileSystem, AssemblyTrace), IoError> {
        let s = self.system.resolve(base)?;
        let t = self.trace_for(&s)?;
        Ok((s, t))
    }
}

pub fn parse_trace(text: &str) -> Result<TraceDocument, IoError> {
    parse_versioned(text)
}

pub fn serialize_trace(doc: &TraceDocument) -> String {
    to_pretty(doc)
}

pub fn read_trace(path: &Path) -> Result<(TileSystem, AssemblyTrace), IoError> {
    parse_trace(&read_file(path)?)?.resolve(path.parent())
}

// ---------------------------------------------------------------- setups

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleDoc {
    pub pattern: Vec<PlacementDoc>,
    pub output: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetupDocument {
    #[serde(default = "version")]
    pub format: u32,
    pub simulator: SystemRef,
    pub simulated: SystemRef,
    pub scale: i32,
    pub rules: Vec<RuleDoc>,
}

impl SetupDocument {
    pub fn from_setup(setup: &SimulationSetup) -> Self {
        let (s, t) = (setup.simulator(), setup.simulated());
        SetupDocument {
            format: FORMAT_VERSION,
            simulator: SystemRef::Inline(Box::new(SystemDocument::from_system(s))),
            simulated: SystemRef::Inline(Box::new(SystemDocument::from_system(t))),
            scale: setup.scale(),
            rules: setup
                .resolver()
                .rules
                .iter()
                .map(|r| RuleDoc {
                    pattern: r
                        .pattern
                        .iter()
                        .map(|&(p, id)| placement_doc(Placement::new(p, id), &s.tiles))
                        .collect(),
                    output: t.tile(r.output).id.clone(),
                })
                .collect(),
        }
    }

    pub fn resolve(&self, base: Option<&Path>) -> Result<SimulationSetup, IoError> {
        let s = self.simulator.resolve(base)?;
        let t = self.simulated.resolve(base)?;
        let rules = self
            .rules
            .iter()
            .map(|r| {
                let pattern = r
                    .pattern
                    .iter()
                    .map(|p| placement_from_doc(p, &s.tiles).map(|pl| (pl.pos, pl.tile)))
                    .collect::<Result<Vec<_>, _>>()?;
                let output = t
                    .lookup(&r.output)
                    .ok_or_else(|| IoError::UnknownTile(r.output.clone()))?;
                Ok(Rule { pattern, output })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        Ok(SimulationSetup::new(
            s,
            t,
            self.scale,
            Resolver {
                scale: self.scale,
                rules,
            },
        )?)
    }
}

pub fn parse_setup(text: &str) -> Result<SetupDocument, IoError> {
    parse_versioned(text)
}

pub fn serialize_setup(doc: &SetupDocument) -> String {
    to_pretty(doc)
}

pub fn read_setup(path: &Path) -> Result<SimulationSetup, IoError> {
    parse_setup(&read_file(path)?)?.resolve(path.parent())
}

// ---------------------------------------------------------------- windows and movies

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxDoc {
    pub min: Vec<i32>,
    pub max: Vec<i32>,
}

/// Either `{"box": {"min": .., "max": ..}}` or `{"edges": [[p, q], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub enum WindowDoc {
    Box(BoxDoc),
    Edges(Vec<[Vec<i32>; 2]>),
}

impl WindowDoc {
    pub fn from_window(w: &Window) -> Self {
        let dim = w.dim();
        match w.box_corners() {
            Some((min, max)) => WindowDoc::Box(BoxDoc {
                min: pos_to_vec(min, dim),
                max: pos_to_vec(max, dim),
            }),
            None => WindowDoc::Edges(
                w.edges()
                    .into_iter()
                    .map(|e| [pos_to_vec(e.0, dim), pos_to_vec(e.1, dim)])
                    .collect(),
            ),
        }
    }

    pub fn to_window(&self, dim: Dim) -> Result<Window, IoError> {
        Ok(match self {
            WindowDoc::Box(b) => {
                Window::boxed(dim, vec_to_pos(&b.min, dim)?, vec_to_pos(&b.max, dim)?)?
            }
            WindowDoc::Edges(es) => {
                let edges = es
                    .iter()
                    .map(|[p, q]| Ok(Edge::new(vec_to_pos(p, dim)?, vec_to_pos(q, dim)?)))
                    .collect::<Result<Vec<_>, IoError>>()?;
                Window::explicit(dim, edges)?
            }
        })
    }
}

pub fn parse_window(text: &str, dim: Dim) -> Result<Window, IoError> {
    let doc: WindowDoc = serde_json::from_str(text).map_err(parse_error)?;
    doc.to_window(dim)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MovieEntryDoc {
    pub from: Vec<i32>,
    pub to: Vec<i32>,
    pub glue: GlueDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MovieDocument {
    #[serde(default = "version")]
    pub format: u32,
    pub anchor: Vec<i32>,
    pub entries: Vec<MovieEntryDoc>,
}

impl MovieDocument {
    pub fn from_movie(m: &WindowMovie, dim: Dim) -> Self {
        MovieDocument {
            format: FORMAT_VERSION,
            anchor: pos_to_vec(m.anchor, dim),
            entries: m
                .entries
                .iter()
                .map(|e| MovieEntryDoc {
                    from: pos_to_vec(e.from, dim),
                    to: pos_to_vec(e.to, dim),
                    glue: GlueDoc {
                        label: e.glue.label.clone(),
                        strength: e.glue.strength,
                    },
                })
                .collect(),
        }
    }

    pub fn to_movie(&self, dim: Dim) -> Result<WindowMovie, IoError> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(MovieEntry {
                    from: vec_to_pos(&e.from, dim)?,
                    to: vec_to_pos(&e.to, dim)?,
                    glue: Glue::new(e.glue.label.clone(), e.glue.strength),
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        Ok(WindowMovie {
            entries,
            anchor: vec_to_pos(&self.anchor, dim)?,
        })
    }
}

pub fn parse_movie(text: &str) -> Result<MovieDocument, IoError> {
    parse_versioned(text)
}

pub fn serialize_movie(doc: &MovieDocument) -> String {
    to_pretty(doc)
}

/// Plain assembly listing used by command output and the HTTP API.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblyDocument {
    pub dimension: u32,
    pub tiles: Vec<PlacementDoc>,
}

impl AssemblyDocument {
    pub fn from_assembly(a: &Assembly, tiles: &TileSet) -> Self {
        AssemblyDocument {
            dimension: a.dim().number(),
            tiles: assembly_placements(a, tiles),
        }
    }

    pub fn to_assembly(&self, tiles: &TileSet) -> Result<Assembly, IoError> {
        let dim = dim_of(self.dimension)?;
        let mut a = Assembly::empty(dim);
        for p in &self.tiles {
            let pl = placement_from_doc(p, tiles)?;
            a.insert(pl.pos, pl.tile);
        }
        Ok(a)
    }
}

/// Id of a tile type inside `tiles`; convenience for callers holding raw ids.
pub fn tile_name(tiles: &TileSet, id: TileId) -> &str {
    &tiles.tile(id).id
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{fixtures, undirected_ab};

    #[test]
    fn system_round_trip() {
        let s = undirected_ab(ModelVariant::PATAM);
        let doc = SystemDocument::from_system(&s);
        assert_eq!(doc.tile_types.len(), 3);
        let text = serialize_system(&doc);
        let back = parse_system(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(serialize_system(&back), text);
        assert_eq!(back.to_system().unwrap(), s);
    }

    #[test]
    fn missing_temperature_is_a_parse_error() {
        let text = r#"{"format": 1, "name": "x", "dimension": 2,
            "tileTypes": [], "seed": []}"#;
        assert!(matches!(parse_system(text), Err(IoError::Parse { .. })));
    }

    #[test]
    fn unknown_fields_and_versions_are_rejected() {
        let s = serialize_system(&SystemDocument::from_system(&undirected_ab(
            ModelVariant::ATAM,
        )));
        let extra = s.replacen("\"name\"", "\"colour\": 1,\n  \"name\"", 1);
        match parse_system(&extra) {
            Err(IoError::Parse { line, .. }) => assert!(line >= 2),
            other => panic!("{other:?}"),
        }
        let v2 = s.replacen("\"format\": 1", "\"format\": 2", 1);
        assert!(matches!(
            parse_system(&v2),
            Err(IoError::SchemaVersionUnsupported(2))
        ));
    }

    #[test]
    fn unknown_seed_tile_is_reported() {
        let mut doc = SystemDocument::from_system(&undirected_ab(ModelVariant::ATAM));
        doc.seed[0].tile = "nope".into();
        let r = validate_document(&doc).unwrap();
        assert!(r.has("UnknownTileInSeed"));
        assert!(matches!(doc.to_system(), Err(IoError::UnknownTile(_))));
    }

    #[test]
    fn setup_and_trace_round_trip() {
        let setup = fixtures::non_monotone();
        let doc = SetupDocument::from_setup(&setup);
        let back = parse_setup(&serialize_setup(&doc)).unwrap();
        assert_eq!(back.resolve(None).unwrap(), setup);

        let s = undirected_ab(ModelVariant::ATAM);
        let t = AssemblyTrace::new(vec![Placement::new(Point::xy(0, 1), s.id("B"))]);
        let doc = TraceDocument::inline(
            &s,
            &t,
            Some(RngDoc {
                seed: 7,
                max_steps: 1,
            }),
        );
        let (s2, t2) = parse_trace(&serialize_trace(&doc))
            .unwrap()
            .resolve(None)
            .unwrap();
        assert_eq!((s2, t2), (s, t));
    }

    #[test]
    fn trace_with_system_path() {
        let dir = std::env::temp_dir().join(format!("tilework-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let s = undirected_ab(ModelVariant::ATAM);
        std::fs::write(
            dir.join("ab.json"),
            serialize_system(&SystemDocument::from_system(&s)),
        )
        .unwrap();
        let text = r#"{"format": 1, "system": {"path": "ab.json"}, "placements": [{"pos": [0, 1], "tile": "A"}]}"#;
        std::fs::write(dir.join("t.json"), text).unwrap();
        let (s2, t) = read_trace(&dir.join("t.json")).unwrap();
        assert_eq!(s2, s);
        assert_eq!(t.len(), 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn window_documents() {
        let w = parse_window(r#"{"box": {"min": [1, 0], "max": [2, 0]}}"#, Dim::Two).unwrap();
        assert_eq!(
            WindowDoc::from_window(&w),
            WindowDoc::Box(BoxDoc {
                min: vec![1, 0],
                max: vec![2, 0]
            })
        );
        let edges = WindowDoc::from_window(&Window::explicit(Dim::Two, w.edges()).unwrap());
        assert_eq!(edges.to_window(Dim::Two).unwrap().edges(), w.edges());
        assert!(matches!(
            parse_window(r#"{"box": {"min": [1], "max": [2, 0]}}"#, Dim::Two),
            Err(IoError::BadPosition { .. })
        ));
    }
}
