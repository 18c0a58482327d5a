//! Window movies: the ordered glues presented across a window.

use std::fmt;

use thiserror::Error;

use crate::dynamics::{attach_mut, AssemblyTrace, TraceError};
use crate::geometry::Point;
use crate::model::{Assembly, Glue, TileId, TileSet, TileSystem};
use crate::window::{Window, WindowError};

/// A glue presented by the tile at `from` across the window edge `{from, to}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MovieEntry {
    pub from: Point,
    pub to: Point,
    pub glue: Glue,
}

impl fmt::Display for MovieEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {}", self.from, self.to, self.glue)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindowMovie {
    pub entries: Vec<MovieEntry>,
    pub anchor: Point,
}

impl WindowMovie {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MovieError {
    #[error("trace does not replay: {0}")]
    InvalidTrace(#[from] TraceError),
    #[error(transparent)]
    Window(#[from] WindowError),
}

/// Entries contributed by one tile sitting at `pos`, in direction order.
fn entries_for(
    tiles: &TileSet,
    window: &Window,
    pos: Point,
    tile: TileId,
    out: &mut Vec<MovieEntry>,
) {
    let tt = tiles.tile(tile);
    for &d in tiles.dim().directions() {
        let to = pos.step(d);
        let g = tt.glue(d);
        if g.strength > 0 && window.crosses(pos, to) {
            out.push(MovieEntry {
                from: pos,
                to,
                glue: g.clone(),
            });
        }
    }
}

/// Seed tiles contribute first, in canonical point order, followed by one
/// contiguous group per placement in trace order.
pub fn extract_movie(
    system: &TileSystem,
    trace: &AssemblyTrace,
    window: &Window,
) -> Result<WindowMovie, MovieError> {
    let mut entries = Vec::new();
    for (p, t) in system.seed.iter() {
        entries_for(&system.tiles, window, p, t, &mut entries);
    }
    let mut a = system.seed.clone();
    for (index, &pl) in trace.placements.iter().enumerate() {
        attach_mut(&mut a, pl, system).map_err(|error| TraceError { index, error })?;
        entries_for(&system.tiles, window, pl.pos, pl.tile, &mut entries);
    }
    Ok(WindowMovie {
        entries,
        anchor: window.anchor(),
    })
}

/// True iff `m2` shifted by `-c` is entry-for-entry identical to `m1`.
pub fn movies_equal(m1: &WindowMovie, m2: &WindowMovie, c: Point) -> bool {
    m1.entries.len() == m2.entries.len()
        && m1
            .entries
            .iter()
            .zip(&m2.entries)
            .all(|(a, b)| a.from == b.from - c && a.to == b.to - c && a.glue == b.glue)
}

/// Keeps the entries whose edge carries a bond in `final_assembly`.
pub fn bond_forming_submovie(
    movie: &WindowMovie,
    final_assembly: &Assembly,
    tiles: &TileSet,
) -> WindowMovie {
    let entries = movie
        .entries
        .iter()
        .filter(|e| {
            let (Some(a), Some(b)) = (final_assembly.get(e.from), final_assembly.get(e.to)) else {
                return false;
            };
            let Some(d) = e.from.direction_to(e.to) else {
                return false;
            };
            tiles
                .tile(a)
                .glue(d)
                .binds(tiles.tile(b).glue(d.opposite()))
        })
        .cloned()
        .collect();
    WindowMovie {
        entries,
        anchor: movie.anchor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Placement;
    use crate::geometry::{Dim, Direction::*};
    use crate::model::{ModelVariant, TileType};

    fn sys() -> TileSystem {
        let ts = TileSet::new(
            Dim::Two,
            vec![
                TileType::new("seed").glue_on(E, "a", 1),
                TileType::new("corner")
                    .glue_on(W, "a", 1)
                    .glue_on(E, "b", 1)
                    .glue_on(N, "c", 1),
                TileType::new("dangle")
                    .glue_on(W, "b", 1)
                    .glue_on(E, "z", 1),
            ],
        );
        TileSystem::new(
            "m",
            ts,
            Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0)),
            1,
            ModelVariant::ATAM,
        )
    }

    #[test]
    fn entries_follow_direction_order() {
        let s = sys();
        let w = Window::boxed(Dim::Two, Point::xy(2, 0), Point::xy(5, 0)).unwrap();
        let w2 = Window::boxed(Dim::Two, Point::xy(1, 1), Point::xy(4, 4)).unwrap();
        let t = AssemblyTrace::new(vec![Placement::new(Point::xy(1, 0), TileId(1))]);
        let m = extract_movie(&s, &t, &w).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.entries[0].to, Point::xy(2, 0));
        let m2 = extract_movie(&s, &t, &w2).unwrap();
        assert_eq!(m2.len(), 1);
        assert_eq!(m2.entries[0].glue, Glue::new("c", 1));
        // Box around the corner tile: the seed's east glue, then the corner's W, N, E glues.
        let w3 = Window::boxed(Dim::Two, Point::xy(1, 0), Point::xy(1, 0)).unwrap();
        let m3 = extract_movie(&s, &t, &w3).unwrap();
        let dirs: Vec<_> = m3
            .entries
            .iter()
            .map(|e| e.from.direction_to(e.to))
            .collect();
        assert_eq!(dirs, vec![Some(E), Some(W), Some(N), Some(E)]);
    }

    #[test]
    fn bond_forming_filters_dangling_glues() {
        let s = sys();
        let t = AssemblyTrace::new(vec![
            Placement::new(Point::xy(1, 0), TileId(1)),
            Placement::new(Point::xy(2, 0), TileId(2)),
        ]);
        let final_a = crate::dynamics::run_trace(&s, &t).unwrap();
        let w = Window::boxed(Dim::Two, Point::xy(2, 0), Point::xy(2, 0)).unwrap();
        let m = extract_movie(&s, &t, &w).unwrap();
        // corner east glue into the box, dangle west glue back, dangle east glue out
        assert_eq!(m.len(), 3);
        let b = bond_forming_submovie(&m, &final_a, &s.tiles);
        assert_eq!(b.len(), 2);
        assert!(movies_equal(&m, &m, Point::ORIGIN));
        assert!(!movies_equal(&m, &b, Point::ORIGIN));
    }
}
