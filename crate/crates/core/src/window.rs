//! Windows: edge cuts of the lattice graph separating an inner region from
//! the rest of the lattice.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::geometry::{Bounds, Dim, Point};
use crate::model::Assembly;

/// An unordered lattice edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Point, pub Point);

impl Edge {
    pub fn new(p: Point, q: Point) -> Self {
        if p <= q {
            Edge(p, q)
        } else {
            Edge(q, p)
        }
    }

    pub fn translate(self, c: Point) -> Edge {
        Edge(self.0 + c, self.1 + c)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindowError {
    #[error("window edge {0:?} does not join adjacent points")]
    NotAdjacent(Edge),
    #[error("window splits the lattice into {0} regions instead of 2")]
    NotACut(usize),
    #[error("window box has min {min} above max {max}")]
    EmptyBox { min: Point, max: Point },
    #[error("the seed lies on both sides of the window")]
    SeedStraddles,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Shape {
    Box {
        min: Point,
        max: Point,
    },
    Explicit {
        edges: BTreeSet<Edge>,
        inside: BTreeSet<Point>,
    },
}

/// A cut set whose removal leaves a finite inner region and an infinite
/// outer region.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    dim: Dim,
    shape: Shape,
}

impl Window {
    /// The boundary of the closed box `[min, max]`; the box is the inner region.
    pub fn boxed(dim: Dim, min: Point, max: Point) -> Result<Window, WindowError> {
        if min.x > max.x || min.y > max.y || min.z > max.z {
            return Err(WindowError::EmptyBox { min, max });
        }
        let (min, max) = match dim {
            Dim::Two => (Point::xy(min.x, min.y), Point::xy(max.x, max.y)),
            Dim::Three => (min, max),
        };
        Ok(Window {
            dim,
            shape: Shape::Box { min, max },
        })
    }

    /// An explicit edge set. It must split the lattice into exactly two
    /// regions, checked by flood fill over the inflated bounding box.
    pub fn explicit(
        dim: Dim,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Window, WindowError> {
        let edges: BTreeSet<Edge> = edges.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        for e in &edges {
            if !e.0.is_adjacent(e.1) || !dim.contains(e.0) || !dim.contains(e.1) {
                return Err(WindowError::NotAdjacent(*e));
            }
        }
        let Some(b) = Bounds::of(edges.iter().flat_map(|e| [e.0, e.1])) else {
            return Err(WindowError::NotACut(1));
        };
        let b = b.inflate(1, dim);
        let mut label = vec![usize::MAX; b.volume()];
        let mut touches = Vec::new();
        for start in b.points() {
            if label[b.index_of(start)] != usize::MAX {
                continue;
            }
            let id = touches.len();
            let mut on_boundary = false;
            label[b.index_of(start)] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                on_boundary |= b.on_boundary(p, dim);
                for &d in dim.directions() {
                    let q = p.step(d);
                    if !b.contains(q) || edges.contains(&Edge::new(p, q)) {
                        continue;
                    }
                    let j = b.index_of(q);
                    if label[j] == usize::MAX {
                        label[j] = id;
                        queue.push_back(q);
                    }
                }
            }
            touches.push(on_boundary);
        }
        // Every component touching the inflated boundary is part of the one
        // infinite outer region.
        let inner: Vec<usize> = (0..touches.len()).filter(|&i| !touches[i]).collect();
        let regions = inner.len() + usize::from(touches.iter().any(|&t| t));
        if regions != 2 {
            return Err(WindowError::NotACut(regions));
        }
        let inside = b
            .points()
            .filter(|&p| label[b.index_of(p)] == inner[0])
            .collect();
        Ok(Window {
            dim,
            shape: Shape::Explicit { edges, inside },
        })
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn box_corners(&self) -> Option<(Point, Point)> {
        match &self.shape {
            Shape::Box { min, max } => Some((*min, *max)),
            Shape::Explicit { .. } => None,
        }
    }

    /// Membership in the finite inner region.
    pub fn inside(&self, p: Point) -> bool {
        match &self.shape {
            Shape::Box { min, max } => Bounds {
                min: *min,
                max: *max,
            }
            .contains(p),
            Shape::Explicit { inside, .. } => inside.contains(&p),
        }
    }

    /// True iff `{p, q}` is an edge of the cut.
    pub fn crosses(&self, p: Point, q: Point) -> bool {
        match &self.shape {
            Shape::Box { .. } => p.is_adjacent(q) && self.inside(p) != self.inside(q),
            Shape::Explicit { edges, .. } => edges.contains(&Edge::new(p, q)),
        }
    }

    pub fn translate(&self, c: Point) -> Window {
        let shape = match &self.shape {
            Shape::Box { min, max } => Shape::Box {
                min: *min + c,
                max: *max + c,
            },
            Shape::Explicit { edges, inside } => Shape::Explicit {
                edges: edges.iter().map(|e| e.translate(c)).collect(),
                inside: inside.iter().map(|&p| p + c).collect(),
            },
        };
        Window {
            dim: self.dim,
            shape,
        }
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        match &self.shape {
            Shape::Explicit { edges, .. } => edges.clone(),
            Shape::Box { min, max } => {
                let mut out = BTreeSet::new();
                for p in (Bounds {
                    min: *min,
                    max: *max,
                })
                .points()
                {
                    for &d in self.dim.directions() {
                        let q = p.step(d);
                        if !self.inside(q) {
                            out.insert(Edge::new(p, q));
                        }
                    }
                }
                out
            }
        }
    }

    /// Smallest endpoint of any window edge.
    pub fn anchor(&self) -> Point {
        match &self.shape {
            Shape::Box { min, .. } => *min - Point::new(1, 0, 0),
            Shape::Explicit { edges, .. } => edges.iter().next().map(|e| e.0).unwrap_or_default(),
        }
    }

    /// Which side of the window the seed lies on (`true` = inside).
    pub fn seed_side(&self, seed: &Assembly) -> Result<bool, WindowError> {
        let mut sides = seed.points().map(|p| self.inside(p));
        let first = sides.next().unwrap_or(false);
        if sides.any(|s| s != first) {
            return Err(WindowError::SeedStraddles);
        }
        Ok(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_edges_in_two_dimensions() {
        let w = Window::boxed(Dim::Two, Point::xy(0, 0), Point::xy(1, 0)).unwrap();
        assert_eq!(w.edges().len(), 6);
        assert!(w.crosses(Point::xy(1, 0), Point::xy(2, 0)));
        assert!(!w.crosses(Point::xy(0, 0), Point::xy(1, 0)));
        assert_eq!(w.anchor(), Point::xy(-1, 0));
    }

    #[test]
    fn explicit_box_boundary_matches_box() {
        let b = Window::boxed(Dim::Two, Point::xy(2, 2), Point::xy(3, 4)).unwrap();
        let e = Window::explicit(Dim::Two, b.edges()).unwrap();
        for x in 0..6 {
            for y in 0..7 {
                assert_eq!(b.inside(Point::xy(x, y)), e.inside(Point::xy(x, y)));
            }
        }
        let t = e.translate(Point::xy(1, 1));
        assert!(t.inside(Point::xy(4, 5)));
    }

    #[test]
    fn partial_boundary_is_rejected() {
        let b = Window::boxed(Dim::Two, Point::xy(0, 0), Point::xy(0, 0)).unwrap();
        let edges: Vec<Edge> = b.edges().into_iter().skip(1).collect();
        assert_eq!(
            Window::explicit(Dim::Two, edges),
            Err(WindowError::NotACut(1))
        );
    }

    #[test]
    fn two_boxes_make_three_regions() {
        let a = Window::boxed(Dim::Two, Point::xy(0, 0), Point::xy(0, 0)).unwrap();
        let b = a.translate(Point::xy(3, 0));
        let edges = a.edges().into_iter().chain(b.edges());
        assert_eq!(
            Window::explicit(Dim::Two, edges),
            Err(WindowError::NotACut(3))
        );
    }
}
