//! Two hollow 3D chambers joined by a tunnel, each with a pillar growing
//! from the centre of its base. The outer chamber's ceiling has a one-tile
//! hole that its own pillar eventually plugs.
//!
//! The rigid structure is hard-coded: one unique tile type per point, bound
//! along a spanning tree with unique strength-2 glues.

use std::collections::{BTreeMap, BTreeSet};

use crate::dynamics::{attach_mut, frontier, AssemblyTrace, Placement, TraceError};
use crate::explore::{explore_graph, ExploreConfig, ExploreError};
use crate::geometry::{Dim, Direction, Point};
use crate::model::{Assembly, Glue, ModelVariant, TileId, TileSet, TileSystem, TileType};

use super::{ScenarioError, ScenarioResult};

pub const BASE: i32 = 9;
/// Gap between the chambers, spanned by the tunnel.
pub const TUNNEL_LENGTH: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberLayout {
    /// Interior height of both chambers.
    pub height: i32,
}

impl ChamberLayout {
    pub fn outer_x(&self) -> i32 {
        0
    }

    pub fn inner_x(&self) -> i32 {
        BASE + TUNNEL_LENGTH
    }

    pub fn ceiling_z(&self) -> i32 {
        self.height + 1
    }

    pub fn outer_pillar_base(&self) -> Point {
        Point::new(BASE / 2, BASE / 2, 0)
    }

    pub fn inner_pillar_base(&self) -> Point {
        Point::new(self.inner_x() + BASE / 2, BASE / 2, 0)
    }

    pub fn ceiling_hole(&self) -> Point {
        Point::new(BASE / 2, BASE / 2, self.ceiling_z())
    }

    /// x-coordinate of the tunnel's central cross-section.
    pub fn tunnel_centre_x(&self) -> i32 {
        BASE + TUNNEL_LENGTH / 2
    }

    fn chamber_points(&self, x0: i32, hole: bool, out: &mut BTreeSet<Point>) {
        let last = BASE - 1;
        for x in 0..BASE {
            for y in 0..BASE {
                out.insert(Point::new(x0 + x, y, 0));
                out.insert(Point::new(x0 + x, y, self.ceiling_z()));
                let rim = x == 0 || y == 0 || x == last || y == last;
                if rim {
                    for z in 1..=self.height {
                        out.insert(Point::new(x0 + x, y, z));
                    }
                }
            }
        }
        if hole {
            out.remove(&self.ceiling_hole());
        }
    }

    /// Every point of the rigid structure (pillars excluded).
    pub fn structure_points(&self) -> BTreeSet<Point> {
        let mut pts = BTreeSet::new();
        self.chamber_points(self.outer_x(), true, &mut pts);
        self.chamber_points(self.inner_x(), false, &mut pts);
        let mid = BASE / 2;
        for x in BASE..self.inner_x() {
            for y in mid - 1..=mid + 1 {
                for z in 1..=3 {
                    if (y, z) != (mid, 2) {
                        pts.insert(Point::new(x, y, z));
                    }
                }
            }
        }
        pts.remove(&Point::new(BASE - 1, mid, 2));
        pts.remove(&Point::new(self.inner_x(), mid, 2));
        pts
    }

    /// Structure points in spanning-tree order from the seed at the origin,
    /// each with its tree parent.
    fn spanning_tree(&self) -> Vec<(Point, Option<Point>)> {
        let pts = self.structure_points();
        let mut seen = BTreeSet::from([Point::ORIGIN]);
        let mut order = vec![(Point::ORIGIN, None)];
        let mut stack = vec![Point::ORIGIN];
        while let Some(&p) = stack.last() {
            let next = Direction::ALL
                .iter()
                .map(|&d| p.step(d))
                .find(|q| pts.contains(q) && !seen.contains(q));
            match next {
                Some(q) => {
                    seen.insert(q);
                    order.push((q, Some(p)));
                    stack.push(q);
                }
                None => {
                    stack.pop();
                }
            }
        }
        debug_assert_eq!(order.len(), pts.len());
        order
    }
}

/// Builds the system and the structure's tree-order trace.
fn build(h: i32) -> (TileSystem, AssemblyTrace) {
    let layout = ChamberLayout { height: h };
    let tree = layout.spanning_tree();
    let index: BTreeMap<Point, usize> =
        tree.iter().enumerate().map(|(i, (p, _))| (*p, i)).collect();
    let mut tiles: Vec<TileType> = tree
        .iter()
        .map(|(p, _)| TileType::new(format!("T{}_{}_{}", p.x, p.y, p.z)))
        .collect();
    for (i, (p, parent)) in tree.iter().enumerate() {
        if let Some(q) = parent {
            let d = q.direction_to(*p).expect("tree edges join neighbours");
            let glue = Glue::new(format!("t{i}"), 2);
            tiles[index[q]].set_glue(d, glue.clone());
            tiles[i].set_glue(d.opposite(), glue);
        }
    }
    for base in [layout.outer_pillar_base(), layout.inner_pillar_base()] {
        tiles[index[&base]].set_glue(Direction::U, Glue::new("pillar", 2));
    }
    tiles.push(
        TileType::new("pillar")
            .glue_on(Direction::D, "pillar", 2)
            .glue_on(Direction::U, "pillar", 2),
    );
    let ts = TileSet::new(Dim::Three, tiles);
    let seed = Assembly::singleton(Dim::Three, Point::ORIGIN, TileId(0));
    let trace = AssemblyTrace::new(
        tree.iter()
            .enumerate()
            .skip(1)
            .map(|(i, (p, _))| Placement::new(*p, TileId(i as u32)))
            .collect(),
    );
    (
        TileSystem::new(format!("chambers-{h}"), ts, seed, 2, ModelVariant::SATAM),
        trace,
    )
}

pub fn chambers(h: i32) -> TileSystem {
    build(h.max(3)).0
}

/// Tiles in the tunnel's central cross-section.
pub fn tunnel_cross_section(a: &Assembly, layout: ChamberLayout) -> usize {
    let x = layout.tunnel_centre_x();
    let mid = BASE / 2;
    a.points()
        .filter(|p| p.x == x && (mid - 1..=mid + 1).contains(&p.y) && (1..=3).contains(&p.z))
        .count()
}

fn base_count(a: &Assembly, x0: i32) -> usize {
    a.points()
        .filter(|p| p.z == 0 && (x0..x0 + BASE).contains(&p.x) && (0..BASE).contains(&p.y))
        .count()
}

/// The system regrown from the finished structure, so that exploration only
/// covers pillar growth.
pub fn completed_structure_system(h: i32) -> TileSystem {
    let (s, trace) = build(h);
    let mut seed = s.seed.clone();
    for p in &trace.placements {
        seed.insert(p.pos, p.tile);
    }
    TileSystem {
        seed,
        name: format!("{}-built", s.name),
        ..s
    }
}

/// Tunnel occupancy over a bounded exploration from the seed and over an
/// exploration of the pillar growth on the completed structure.
pub fn max_tunnel_occupancy(
    h: i32,
    from_seed: ExploreConfig,
    from_structure: ExploreConfig,
) -> Result<usize, ExploreError> {
    let layout = ChamberLayout { height: h };
    let g1 = explore_graph(&chambers(h), from_seed)?;
    let g2 = explore_graph(&completed_structure_system(h), from_structure)?;
    Ok(g1
        .states
        .iter()
        .chain(&g2.states)
        .map(|a| tunnel_cross_section(a, layout))
        .max()
        .unwrap_or(0))
}

fn extendable_at(a: &Assembly, s: &TileSystem, q: Point) -> bool {
    frontier(a, s).iter().any(|p| p.pos == q)
}

pub fn scenario_plug_chambers(h: i32) -> Result<ScenarioResult, ScenarioError> {
    if h < 4 {
        return Err(ScenarioError::InvalidParams(
            "interior height must be at least 4".into(),
        ));
    }
    let layout = ChamberLayout { height: h };
    let (s, structure) = build(h);
    let unrestricted = s.with_variant(ModelVariant::ATAM3D);
    let pillar = s.id("pillar");
    let mut out = ScenarioResult::new("plug-chambers", s.clone());
    let mut a = s.seed.clone();
    let mut max_tunnel = 0;
    let mut step =
        |out: &mut ScenarioResult, a: &mut Assembly, p: Placement| -> Result<(), ScenarioError> {
            let index = out.trace.len();
            attach_mut(a, p, &s).map_err(|error| TraceError { index, error })?;
            out.trace.push(p);
            max_tunnel = max_tunnel.max(tunnel_cross_section(a, layout));
            Ok(())
        };
    for &p in &structure.placements {
        step(&mut out, &mut a, p)?;
    }
    out.checkpoint("structure", &a);
    let inner = layout.inner_pillar_base();
    let outer = layout.outer_pillar_base();
    for z in 1..=2 {
        step(
            &mut out,
            &mut a,
            Placement::new(inner + Point::new(0, 0, z), pillar),
        )?;
    }
    for z in 1..h {
        step(
            &mut out,
            &mut a,
            Placement::new(outer + Point::new(0, 0, z), pillar),
        )?;
    }
    let inner_top = inner + Point::new(0, 0, 3);
    out.checkpoint("before-plug", &a);
    out.assert("prePlugExtendableSaTAM", extendable_at(&a, &s, inner_top));
    out.assert(
        "prePlugExtendable3DaTAM",
        extendable_at(&a, &unrestricted, inner_top),
    );
    for z in h..=h + 1 {
        step(
            &mut out,
            &mut a,
            Placement::new(outer + Point::new(0, 0, z), pillar),
        )?;
    }
    out.checkpoint("plugged", &a);
    out.assert(
        "innerPillarFrontierEmpty",
        !extendable_at(&a, &s, inner_top),
    );
    out.assert(
        "innerPillarFrontierNonEmpty3DaTAM",
        extendable_at(&a, &unrestricted, inner_top),
    );
    out.assert(
        "outerBase81",
        base_count(&a, layout.outer_x()) == (BASE * BASE) as usize,
    );
    out.assert(
        "innerBase81",
        base_count(&a, layout.inner_x()) == (BASE * BASE) as usize,
    );
    out.assert("tunnelOccupancyAtMost8", max_tunnel <= 8);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffusion::constrained_regions;
    use crate::model::validate_tile_system;

    #[test]
    fn structure_is_connected_and_valid() {
        let layout = ChamberLayout { height: 4 };
        assert_eq!(
            layout.spanning_tree().len(),
            layout.structure_points().len()
        );
        let s = chambers(4);
        assert!(validate_tile_system(&s).is_ok());
    }

    #[test]
    fn structure_has_no_enclosure_until_plugged() {
        let h = 4;
        let built = completed_structure_system(h);
        assert!(constrained_regions(&built.seed).is_empty());
        let layout = ChamberLayout { height: h };
        let mut plugged = built.seed.clone();
        for z in 1..=h + 1 {
            plugged.insert(
                layout.outer_pillar_base() + Point::new(0, 0, z),
                built.id("pillar"),
            );
        }
        let regions = constrained_regions(&plugged);
        assert_eq!(regions.len(), 1);
        assert!(regions[0].contains(&(layout.inner_pillar_base() + Point::new(0, 0, 1))));
    }

    #[test]
    fn plug_scenario_holds() {
        let r = scenario_plug_chambers(5).unwrap();
        assert!(r.all_passed(), "{:?}", r.assertions);
    }

    #[test]
    fn tunnel_never_exceeds_ring() {
        let cfg = ExploreConfig::with_max_tiles(12).max_states(100_000);
        let built = ExploreConfig::with_max_tiles(chambers_size(4) + 8).max_states(100_000);
        assert_eq!(max_tunnel_occupancy(4, cfg, built).unwrap(), 8);
    }

    fn chambers_size(h: i32) -> usize {
        completed_structure_system(h).seed.len()
    }
}
