//! Simulation setups used to calibrate the checker: two identity setups that
//! must pass everything, and five broken setups that each trip one targeted
//! property.

use crate::geometry::{Dim, Direction::*, Point};
use crate::model::{Assembly, ModelVariant, TileId, TileSet, TileSystem, TileType};
use crate::simcheck::{CheckKind, Resolver, Rule, SimulationSetup};

use super::undirected_ab;

fn system(name: &str, tiles: Vec<TileType>, seed_at: Point) -> TileSystem {
    let ts = TileSet::new(Dim::Two, tiles);
    TileSystem::new(
        name,
        ts,
        Assembly::singleton(Dim::Two, seed_at, TileId(0)),
        1,
        ModelVariant::ATAM,
    )
}

fn one(pos: Point, tile: TileId, output: TileId) -> Rule {
    Rule {
        pattern: vec![(pos, tile)],
        output,
    }
}

fn setup(s: TileSystem, t: TileSystem, scale: i32, rules: Vec<Rule>) -> SimulationSetup {
    SimulationSetup::new(s, t, scale, Resolver { scale, rules })
        .expect("fixture setup is well formed")
}

/// Seed with two-tile arms to the east and to the north.
pub fn five_tile_directed() -> TileSystem {
    system(
        "five-tile",
        vec![
            TileType::new("seed")
                .glue_on(E, "e1", 1)
                .glue_on(N, "n1", 1),
            TileType::new("E1").glue_on(W, "e1", 1).glue_on(E, "e2", 1),
            TileType::new("E2").glue_on(W, "e2", 1),
            TileType::new("N1").glue_on(S, "n1", 1).glue_on(N, "n2", 1),
            TileType::new("N2").glue_on(S, "n2", 1),
        ],
        Point::ORIGIN,
    )
}

pub fn identity_ab() -> SimulationSetup {
    SimulationSetup::identity(&undirected_ab(ModelVariant::ATAM))
}

pub fn identity_five_tile() -> SimulationSetup {
    SimulationSetup::identity(&five_tile_directed())
}

/// The simulator grows a tile diagonal to the only resolved block.
pub fn diagonal_fuzz() -> SimulationSetup {
    let t = system("lonely", vec![TileType::new("X")], Point::ORIGIN);
    let s = system(
        "fuzzy",
        vec![
            TileType::new("X'").glue_on(E, "f", 1),
            TileType::new("F1").glue_on(W, "f", 1).glue_on(N, "g", 1),
            TileType::new("F2").glue_on(S, "g", 1),
        ],
        Point::ORIGIN,
    );
    setup(s, t, 1, vec![one(Point::ORIGIN, TileId(0), TileId(0))])
}

/// A resolved block is later re-read as a different tile.
pub fn non_monotone() -> SimulationSetup {
    let t = undirected_ab(ModelVariant::ATAM);
    let s = system(
        "fickle",
        vec![
            TileType::new("S'").glue_on(N, "p", 1),
            TileType::new("P").glue_on(S, "p", 1).glue_on(E, "q", 1),
            TileType::new("Q").glue_on(W, "q", 1),
            TileType::new("Z").glue_on(W, "q", 1),
        ],
        Point::xy(0, 1),
    );
    let (sp, p, q) = (TileId(0), TileId(1), TileId(2));
    let (ts, ta, tb) = (TileId(0), TileId(1), TileId(2));
    let rules = vec![
        one(Point::xy(0, 1), sp, ts),
        Rule {
            pattern: vec![(Point::xy(0, 0), p), (Point::xy(1, 0), q)],
            output: tb,
        },
        one(Point::xy(0, 0), p, ta),
    ];
    setup(s, t, 2, rules)
}

/// The resolver has no rule for the `B` tile, so `B`'s terminal assembly is
/// never represented.
pub fn missing_terminal_image() -> SimulationSetup {
    let ab = undirected_ab(ModelVariant::ATAM);
    let rules = vec![
        one(Point::ORIGIN, TileId(0), TileId(0)),
        one(Point::ORIGIN, TileId(1), TileId(1)),
    ];
    setup(ab.clone(), ab, 1, rules)
}

/// The simulator can also grow an `A` tile east of the seed, which the
/// simulated system never produces.
pub fn extra_production() -> SimulationSetup {
    let t = undirected_ab(ModelVariant::ATAM);
    let s = system(
        "extra",
        vec![
            TileType::new("S").glue_on(N, "a", 1).glue_on(E, "x", 1),
            TileType::new("A").glue_on(S, "a", 1),
            TileType::new("B").glue_on(S, "a", 1),
            TileType::new("Ae").glue_on(W, "x", 1),
        ],
        Point::ORIGIN,
    );
    let mut rules: Vec<Rule> = (0..3)
        .map(|i| one(Point::ORIGIN, TileId(i), TileId(i)))
        .collect();
    rules.push(one(Point::ORIGIN, TileId(3), TileId(1)));
    setup(s, t, 1, rules)
}

/// An undirected simulator whose both branches map to the single outcome of
/// a directed system.
pub fn directedness_breaking() -> SimulationSetup {
    let t = system(
        "directed-a",
        vec![
            TileType::new("S").glue_on(N, "a", 1),
            TileType::new("A").glue_on(S, "a", 1),
        ],
        Point::ORIGIN,
    );
    let s = undirected_ab(ModelVariant::ATAM);
    let rules = vec![
        one(Point::ORIGIN, TileId(0), TileId(0)),
        one(Point::ORIGIN, TileId(1), TileId(1)),
        one(Point::ORIGIN, TileId(2), TileId(1)),
    ];
    setup(s, t, 1, rules)
}

/// A broken fixture with the checks it is built to fail. The remaining
/// checks are expected to pass.
pub struct BrokenFixture {
    pub name: &'static str,
    pub setup: SimulationSetup,
    pub failing: &'static [CheckKind],
}

pub fn broken_fixtures() -> Vec<BrokenFixture> {
    use CheckKind::*;
    vec![
        BrokenFixture {
            name: "diagonal-fuzz",
            setup: diagonal_fuzz(),
            failing: &[CleanMapping, EquivalentProductions],
        },
        BrokenFixture {
            name: "non-monotone",
            setup: non_monotone(),
            failing: &[RepresentationMonotonic, Follows],
        },
        BrokenFixture {
            name: "missing-terminal-image",
            setup: missing_terminal_image(),
            failing: &[EquivalentProductions, Models],
        },
        BrokenFixture {
            name: "extra-production",
            setup: extra_production(),
            failing: &[EquivalentProductions, Follows],
        },
        BrokenFixture {
            name: "directedness-breaking",
            setup: directedness_breaking(),
            failing: &[DirectednessPreservation],
        },
    ]
}
