//! Upward binary counters of growing height, each followed by a cap row, a
//! westward arm and a single-tile-type downward column that crashes into
//! the planter row.
//!
//! The planter row at `y = 0` is hard-coded: one unique tile per column,
//! emitting the start glues of every counter. Counter `i` counts `n = 8 + i`
//! rows with a zig-zag increment/return pattern (LSB west).

use crate::dynamics::{frontier, run_trace, AssemblyTrace};
use crate::geometry::{Dim, Direction::*, Point};
use crate::model::{Assembly, ModelVariant, TileId, TileSet, TileSystem, TileType};
use crate::splice::{find_matching_window_pair, pump, Repetitions, SpliceOptions};
use crate::window::Window;

use super::{grow_where, ScenarioError, ScenarioResult};

pub const FIRST_HEIGHT: i32 = 8;
const FIRST_X0: i32 = 6;
const COUNTER_GAP: i32 = 8;
/// The arm runs this many tiles west of the counter's left column.
pub const ARM_LENGTH: i32 = 4;

/// Placement of one counter and its arm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CounterLayout {
    /// Rows the counter occupies above the planter.
    pub height: i32,
    /// Left column; bits occupy `x0 + 1 ..= x0 + width`.
    pub x0: i32,
    pub width: i32,
    /// Start value encoded by the planter.
    pub start: u32,
}

impl CounterLayout {
    pub fn right(&self) -> i32 {
        self.x0 + self.width + 1
    }

    /// Column of the downward arm.
    pub fn arm_x(&self) -> i32 {
        self.x0 - ARM_LENGTH
    }

    pub fn cap_row(&self) -> i32 {
        self.height + 1
    }

    pub fn red_site(&self) -> Point {
        Point::xy(self.x0 - 1, 1)
    }

    fn in_body(&self, p: Point) -> bool {
        (self.x0..=self.right()).contains(&p.x) && (1..=self.cap_row()).contains(&p.y)
    }

    fn in_arm(&self, p: Point) -> bool {
        p.y == self.cap_row() && (self.arm_x()..self.x0).contains(&p.x)
    }
}

fn width_for(k: usize) -> i32 {
    let n_max = FIRST_HEIGHT as u32 + k as u32 - 1;
    let increments = n_max.div_ceil(2);
    let mut w = 3;
    while (1u32 << w) < increments {
        w += 1;
    }
    w
}

pub fn counter_layouts(k: usize) -> Vec<CounterLayout> {
    let width = width_for(k);
    let mut x0 = FIRST_X0;
    (0..k)
        .map(|i| {
            let height = FIRST_HEIGHT + i as i32;
            let increments = (height as u32).div_ceil(2);
            let l = CounterLayout {
                height,
                x0,
                width,
                start: (1u32 << width) - increments,
            };
            x0 += width + COUNTER_GAP;
            l
        })
        .collect()
}

fn bit(b: u32) -> String {
    format!("b{b}")
}

fn counter_tiles() -> Vec<TileType> {
    let mut v = vec![
        TileType::new("Linc")
            .glue_on(S, "linc", 2)
            .glue_on(N, "lcol", 1)
            .glue_on(E, "c1", 1)
            .glue_on(W, "red", 1),
        TileType::new("turn")
            .glue_on(W, "c0", 1)
            .glue_on(S, "ecol", 1)
            .glue_on(N, "rret", 2),
        TileType::new("overflow")
            .glue_on(W, "c1", 1)
            .glue_on(S, "ecol", 1)
            .glue_on(N, "cap", 2),
        TileType::new("Rret")
            .glue_on(S, "rret", 2)
            .glue_on(W, "ret", 1)
            .glue_on(N, "ecol", 1),
        TileType::new("Lret")
            .glue_on(E, "ret", 1)
            .glue_on(S, "lcol", 1)
            .glue_on(N, "linc", 2)
            .glue_on(W, "red", 1),
        TileType::new("red")
            .glue_on(E, "red", 1)
            .glue_on(S, "redsite", 1),
        TileType::new("capE")
            .glue_on(S, "cap", 2)
            .glue_on(W, "capc", 1),
        TileType::new("cap")
            .glue_on(E, "capc", 1)
            .glue_on(S, "b0", 1)
            .glue_on(W, "capc", 1),
        TileType::new("capL")
            .glue_on(E, "capc", 1)
            .glue_on(S, "lcol", 1)
            .glue_on(W, "arm1", 2),
    ];
    for b in 0..2u32 {
        for c in 0..2u32 {
            v.push(
                TileType::new(format!("inc{b}{c}"))
                    .glue_on(S, &bit(b), 1)
                    .glue_on(W, &format!("c{c}"), 1)
                    .glue_on(N, &bit(b ^ c), 1)
                    .glue_on(E, &format!("c{}", b & c), 1),
            );
        }
        v.push(
            TileType::new(format!("copy{b}"))
                .glue_on(E, "ret", 1)
                .glue_on(S, &bit(b), 1)
                .glue_on(N, &bit(b), 1)
                .glue_on(W, "ret", 1),
        );
    }
    for i in 1..ARM_LENGTH {
        v.push(
            TileType::new(format!("arm{i}"))
                .glue_on(E, &format!("arm{i}"), 2)
                .glue_on(W, &format!("arm{}", i + 1), 2),
        );
    }
    v.push(
        TileType::new(format!("arm{ARM_LENGTH}"))
            .glue_on(E, &format!("arm{ARM_LENGTH}"), 2)
            .glue_on(S, "down", 2),
    );
    // One tile type for the whole column, identical glues on north and south.
    v.push(
        TileType::new("down")
            .glue_on(N, "down", 2)
            .glue_on(S, "down", 2),
    );
    v
}

/// North glue of the planter tile in column `x`.
fn planter_glue(layouts: &[CounterLayout], x: i32) -> Option<(String, u32)> {
    for l in layouts {
        let odd = l.height % 2 == 1;
        if x == l.x0 - 1 {
            return Some(("redsite".into(), 1));
        }
        if x == l.x0 {
            return Some(if odd {
                ("linc".into(), 2)
            } else {
                ("lcol".into(), 1)
            });
        }
        if (l.x0 + 1..=l.x0 + l.width).contains(&x) {
            return Some((bit((l.start >> (x - l.x0 - 1)) & 1), 1));
        }
        if x == l.right() {
            return Some(if odd {
                ("ecol".into(), 1)
            } else {
                ("rret".into(), 2)
            });
        }
    }
    None
}

/// `k` counters of heights `8 ..= 8 + k - 1` at temperature 2.
pub fn blocking_counters(k: usize) -> TileSystem {
    let k = k.max(1);
    let layouts = counter_layouts(k);
    let last = layouts.last().expect("k >= 1").right();
    let mut tiles = Vec::new();
    for x in 0..=last {
        let mut t = TileType::new(format!("P{x}"));
        if x > 0 {
            t = t.glue_on(W, &format!("pl{x}"), 2);
        }
        if x < last {
            t = t.glue_on(E, &format!("pl{}", x + 1), 2);
        }
        if let Some((g, s)) = planter_glue(&layouts, x) {
            t = t.glue_on(N, &g, s);
        }
        tiles.push(t);
    }
    tiles.extend(counter_tiles());
    let ts = TileSet::new(Dim::Two, tiles);
    let seed = Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0));
    TileSystem::new(
        format!("blocking-counters-{k}"),
        ts,
        seed,
        2,
        ModelVariant::ATAM,
    )
}

/// Lowest occupied row of a counter's downward column, if any.
pub fn column_bottom(a: &Assembly, s: &TileSystem, l: &CounterLayout) -> Option<i32> {
    let down = s.id("down");
    a.iter()
        .filter(|&(p, t)| p.x == l.arm_x() && t == down)
        .map(|(p, _)| p.y)
        .min()
}

/// Grows the planter, then counter `index` with its cap and arm, then the
/// first `prefix` tiles of its downward column.
pub fn arm_prefix_trace(s: &TileSystem, l: &CounterLayout, prefix: usize) -> AssemblyTrace {
    let mut a = s.seed.clone();
    let mut t = AssemblyTrace::default();
    grow_where(s, &mut a, &mut t, |p| p.pos.y == 0, usize::MAX);
    grow_where(
        s,
        &mut a,
        &mut t,
        |p| l.in_body(p.pos) || l.in_arm(p.pos),
        usize::MAX,
    );
    grow_where(
        s,
        &mut a,
        &mut t,
        |p| p.pos.x == l.arm_x() && p.pos.y < l.cap_row(),
        prefix,
    );
    t
}

/// Pumps the downward arm of each counter from a `prefix`-tile start and
/// compares the pumped crash row with direct simulation.
pub fn scenario_pump_arm(k: usize, prefix: usize) -> Result<ScenarioResult, ScenarioError> {
    if k == 0 {
        return Err(ScenarioError::InvalidParams("k must be at least 1".into()));
    }
    let s = blocking_counters(k);
    let layouts = counter_layouts(k);
    let mut out = ScenarioResult::new("pump-arm", s.clone());

    // Direct simulation to the terminal assembly.
    let mut direct = s.seed.clone();
    let mut direct_trace = AssemblyTrace::default();
    grow_where(&s, &mut direct, &mut direct_trace, |_| true, usize::MAX);
    out.assert("directTerminal", frontier(&direct, &s).is_empty());
    out.checkpoint("direct-terminal", &direct);

    for l in &layouts {
        let n = l.height;
        let trace = arm_prefix_trace(&s, l, prefix);
        let tip = l.cap_row() - prefix as i32;
        let template = Window::boxed(
            Dim::Two,
            Point::xy(l.arm_x(), tip - 1),
            Point::xy(l.arm_x(), tip + 1),
        )
        .expect("non-empty box");
        let translations: Vec<Point> = (0..4).map(|d| Point::xy(0, -d)).collect();
        let Some((w1, w2, c)) = find_matching_window_pair(&s, &trace, &template, &translations)?
        else {
            return Err(ScenarioError::NoMatchingWindow);
        };
        let pumped = pump(
            &s,
            &trace,
            &w1,
            &w2,
            c,
            Repetitions::UntilBlocked {
                max_iterations: 4 * n as usize,
            },
            SpliceOptions::default(),
        )?;
        run_trace(&s, &pumped.trace)?;
        out.checkpoint(&format!("pumped-n{n}"), &pumped.assembly);
        let pumped_bottom = column_bottom(&pumped.assembly, &s, l);
        let direct_bottom = column_bottom(&direct, &s, l);
        out.assert(format!("pumpBlocked[n={n}]"), pumped.blocked);
        out.assert(
            format!("pumpedCrashEqualsDirect[n={n}]"),
            pumped_bottom.is_some() && pumped_bottom == direct_bottom,
        );
        out.assert(
            format!("crashAbovePlanter[n={n}]"),
            direct_bottom == Some(1),
        );
        let height = (1..)
            .take_while(|&y| direct.contains(Point::xy(l.x0, y)) && y <= n)
            .count() as i32;
        out.assert(
            format!("counterHeight[n={n}]"),
            height == n && direct.get(Point::xy(l.x0, n + 1)) == Some(s.id("capL")),
        );
        out.assert(
            format!("redTilePlaced[n={n}]"),
            direct.get(l.red_site()) == Some(s.id("red")),
        );
        out.trace = pumped.trace;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explore::{check_directed, DirectednessVerdict, ExploreConfig};
    use crate::model::validate_tile_system;

    #[test]
    fn layouts_fit_heights() {
        let ls = counter_layouts(3);
        assert_eq!(ls[0].width, 3);
        assert_eq!(
            ls.iter().map(|l| l.start).collect::<Vec<_>>(),
            vec![4, 3, 3]
        );
        assert!(ls[1].arm_x() > ls[0].right() + 1);
        assert_eq!(width_for(9), 3);
        assert_eq!(width_for(10), 4);
    }

    #[test]
    fn single_counter_crashes_above_planter() {
        let s = blocking_counters(1);
        assert!(validate_tile_system(&s).is_ok());
        let l = counter_layouts(1)[0];
        let t = crate::dynamics::greedy_run(&s, 10_000);
        let a = run_trace(&s, &t).unwrap();
        assert!(frontier(&a, &s).is_empty());
        assert_eq!(column_bottom(&a, &s, &l), Some(1));
        assert_eq!(a.get(l.red_site()), Some(s.id("red")));
        for y in 1..=8 {
            assert!(a.contains(Point::xy(l.x0, y)));
        }
        assert_eq!(a.get(Point::xy(l.x0, 9)), Some(s.id("capL")));
    }

    #[test]
    fn single_counter_is_directed() {
        let s = blocking_counters(1);
        let size = run_trace(&s, &crate::dynamics::greedy_run(&s, 10_000))
            .unwrap()
            .len();
        let v = check_directed(
            &s,
            ExploreConfig::with_max_tiles(size + 1).max_states(2_000_000),
        )
        .unwrap();
        assert!(
            matches!(v, DirectednessVerdict::Directed { .. }),
            "{}",
            v.name()
        );
    }

    #[test]
    fn short_prefix_has_no_matching_window() {
        assert_eq!(
            scenario_pump_arm(1, 1).unwrap_err(),
            ScenarioError::NoMatchingWindow
        );
    }

    #[test]
    fn pumped_arm_matches_direct_run() {
        let r = scenario_pump_arm(3, 3).unwrap();
        assert!(r.all_passed(), "{:?}", r.assertions);
    }
}
