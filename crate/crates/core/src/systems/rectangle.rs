//! A planar rectangle whose west wall spawns eastward arms every 4 rows.
//!
//! Wall lengths are chosen nondeterministically by corner tiles. Once the
//! west wall closes onto the seed, the interior is sealed.

use crate::dynamics::{attach_mut, frontier, AssemblyTrace, Placement, TraceError};
use crate::geometry::{Dim, Direction::*, Point};
use crate::model::{Assembly, ModelVariant, TileId, TileSet, TileSystem, TileType};
use crate::splice::find_matching_window_pair;
use crate::window::Window;

use super::{ScenarioError, ScenarioResult};

pub const ARM_SPACING: i32 = 4;

pub fn rectangle_arms() -> TileSystem {
    let tiles = TileSet::new(
        Dim::Two,
        vec![
            TileType::new("seed").glue_on(E, "s", 1),
            TileType::new("SW").glue_on(W, "s", 1).glue_on(E, "s", 1),
            TileType::new("SE").glue_on(W, "s", 1).glue_on(N, "e", 1),
            TileType::new("EW").glue_on(S, "e", 1).glue_on(N, "e", 1),
            TileType::new("NE").glue_on(S, "e", 1).glue_on(W, "n", 1),
            TileType::new("NW").glue_on(E, "n", 1).glue_on(W, "n", 1),
            TileType::new("NWc").glue_on(E, "n", 1).glue_on(S, "w1", 1),
            TileType::new("W1").glue_on(N, "w1", 1).glue_on(S, "w2", 1),
            TileType::new("W2").glue_on(N, "w2", 1).glue_on(S, "w3", 1),
            TileType::new("W3").glue_on(N, "w3", 1).glue_on(S, "w0", 1),
            TileType::new("W0")
                .glue_on(N, "w0", 1)
                .glue_on(S, "w1", 1)
                .glue_on(E, "a", 1),
            TileType::new("AR").glue_on(W, "a", 1).glue_on(E, "a", 1),
        ],
    );
    let seed = Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0));
    TileSystem::new("rectangle-arms", tiles, seed, 1, ModelVariant::PATAM)
}

/// Scenario geometry. The interior spans `x = 1..=north_length` and
/// `y = 1..=east_length()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RectangleParams {
    pub north_length: i32,
    pub arm_count: i32,
}

impl Default for RectangleParams {
    fn default() -> Self {
        RectangleParams {
            north_length: 6,
            arm_count: 2,
        }
    }
}

impl RectangleParams {
    /// Interior height: the bottom arm sits on row 3, so two free rows stay
    /// below it until the west wall closes.
    pub fn east_length(&self) -> i32 {
        ARM_SPACING * self.arm_count + 2
    }

    pub fn arm_rows(&self) -> Vec<i32> {
        let h = self.east_length();
        (0..self.arm_count)
            .map(|i| h - 3 - ARM_SPACING * i)
            .collect()
    }

    pub fn in_interior(&self, p: Point) -> bool {
        (1..=self.north_length).contains(&p.x) && (1..=self.east_length()).contains(&p.y)
    }
}

/// West wall tile type at row `y` for a wall whose top row is `h`.
fn west_wall_tile(s: &TileSystem, h: i32, y: i32) -> TileId {
    s.id(["W1", "W2", "W3", "W0"][((h - y) % ARM_SPACING) as usize])
}

/// The full sealing sequence: frame, west wall down to the bottom arm,
/// the top arm one tile short of the east wall, the bottom arm all the way,
/// and finally the last two west-wall tiles.
pub fn seal_trace(s: &TileSystem, p: RectangleParams) -> AssemblyTrace {
    let (wd, h) = (p.north_length, p.east_length());
    let mut steps = Vec::new();
    let mut put = |x: i32, y: i32, t: &str| steps.push(Placement::new(Point::xy(x, y), s.id(t)));
    for x in 1..=wd {
        put(x, 0, "SW");
    }
    put(wd + 1, 0, "SE");
    for y in 1..=h {
        put(wd + 1, y, "EW");
    }
    put(wd + 1, h + 1, "NE");
    for x in (1..=wd).rev() {
        put(x, h + 1, "NW");
    }
    put(0, h + 1, "NWc");
    let rows = p.arm_rows();
    let bottom = *rows.last().expect("at least one arm");
    let mut steps: Vec<Placement> = steps;
    for y in (bottom..=h).rev() {
        steps.push(Placement::new(Point::xy(0, y), west_wall_tile(s, h, y)));
    }
    for &r in &rows[..rows.len() - 1] {
        let len = if r == rows[0] { wd - 1 } else { wd };
        steps.extend((1..=len).map(|x| Placement::new(Point::xy(x, r), s.id("AR"))));
    }
    steps.extend((1..=wd).map(|x| Placement::new(Point::xy(x, bottom), s.id("AR"))));
    for y in (1..bottom).rev() {
        steps.push(Placement::new(Point::xy(0, y), west_wall_tile(s, h, y)));
    }
    AssemblyTrace::new(steps)
}

fn interior_frontier(a: &Assembly, s: &TileSystem, p: RectangleParams) -> Vec<Placement> {
    frontier(a, s)
        .into_iter()
        .filter(|pl| p.in_interior(pl.pos))
        .collect()
}

pub fn scenario_seal_rectangle(p: RectangleParams) -> Result<ScenarioResult, ScenarioError> {
    if p.north_length < 2 || p.arm_count < 2 {
        return Err(ScenarioError::InvalidParams(
            "need north_length >= 2 and arm_count >= 2".into(),
        ));
    }
    let s = rectangle_arms();
    let atam = s.with_variant(ModelVariant::ATAM);
    let trace = seal_trace(&s, p);
    let mut out = ScenarioResult::new("seal-rectangle", s.clone());
    let mut a = s.seed.clone();
    let bottom = *p.arm_rows().last().expect("arm_count >= 1");
    for (index, &pl) in trace.placements.iter().enumerate() {
        attach_mut(&mut a, pl, &s).map_err(|error| TraceError { index, error })?;
        out.trace.push(pl);
        if pl.pos == Point::xy(p.north_length, bottom) {
            out.checkpoint("bottom-arm-complete", &a);
        }
    }
    out.checkpoint("sealed", &a);

    let sealed_frontier = interior_frontier(&a, &s, p);
    out.assert("interiorFrontierEmpty", sealed_frontier.is_empty());
    out.assert("terminal", frontier(&a, &s).is_empty());
    out.assert(
        "atamInteriorFrontierNonEmpty",
        !interior_frontier(&a, &atam, p).is_empty(),
    );

    // The top arm's missing tile can no longer be placed.
    let blocked = Placement::new(Point::xy(p.north_length, p.arm_rows()[0]), s.id("AR"));
    let mut extended = out.trace.clone();
    extended.push(blocked);
    let err = crate::dynamics::run_trace(&s, &extended).err();
    out.assert(
        "appendedInteriorStepInvalid",
        matches!(&err, Some(e) if e.index == out.trace.len() && e.error.kind() == "ConstrainedLocation"),
    );
    out.assert(
        "atamAcceptsAppendedStep",
        crate::dynamics::run_trace(&atam, &extended).is_ok(),
    );

    // The bottom arm repeats column by column.
    let template =
        Window::boxed(Dim::Two, Point::xy(1, bottom), Point::xy(1, bottom)).expect("non-empty box");
    let translations: Vec<Point> = (0..p.north_length).map(|x| Point::xy(x, 0)).collect();
    let pair = find_matching_window_pair(&s, &out.trace, &template, &translations)?;
    out.assert("bottomArmPumpable", pair.is_some());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explore::{check_directed, explore_graph, DirectednessVerdict, ExploreConfig};
    use crate::model::validate_tile_system;

    #[test]
    fn generator_is_valid_and_undirected() {
        let s = rectangle_arms();
        assert!(validate_tile_system(&s).is_ok());
        let v = check_directed(&s, ExploreConfig::with_max_tiles(6).max_states(100_000)).unwrap();
        assert!(matches!(v, DirectednessVerdict::Undirected { .. }), "{v:?}");
    }

    #[test]
    fn arms_start_every_fourth_row() {
        let p = RectangleParams {
            north_length: 3,
            arm_count: 3,
        };
        assert_eq!(p.arm_rows(), vec![11, 7, 3]);
        let s = rectangle_arms();
        let a = crate::dynamics::run_trace(&s, &seal_trace(&s, p)).unwrap();
        let spawners: Vec<i32> = a
            .iter()
            .filter(|&(_, t)| t == s.id("W0"))
            .map(|(q, _)| q.y)
            .collect();
        assert_eq!(spawners, vec![3, 7, 11]);
    }

    #[test]
    fn seal_scenario_assertions_hold() {
        let r = scenario_seal_rectangle(RectangleParams::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.assertions);
    }

    #[test]
    fn walls_use_one_tile_type_each() {
        let s = rectangle_arms();
        let g = explore_graph(&s, ExploreConfig::with_max_tiles(12).max_states(200_000)).unwrap();
        let (sw, se) = (s.id("SW"), s.id("SE"));
        let east = [s.id("EW"), s.id("NE")];
        for a in &g.states {
            for (q, t) in a.iter().filter(|(q, _)| q.y == 0 && q.x > 0) {
                assert!(t == sw || t == se);
                if t == se {
                    assert!(a
                        .iter()
                        .filter(|(r, _)| r.x == q.x && r.y > 0)
                        .all(|(_, u)| east.contains(&u)));
                }
            }
        }
    }
}
