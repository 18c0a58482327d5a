//! Constrained regions: finite components of the lattice complement.

use std::collections::{BTreeSet, VecDeque};

use crate::geometry::{Bounds, Dim, Point};
use crate::model::Assembly;

/// Dense labelling of the empty cells inside the bounding box inflated by 1.
///
/// Cells reachable from the inflated boundary without crossing a tile are the
/// outside; every other empty cell lies in a constrained region.
#[derive(Clone, Debug)]
pub struct Enclosure {
    dim: Dim,
    bounds: Option<Bounds>,
    occupied: Vec<bool>,
    outside: Vec<bool>,
}

impl Enclosure {
    pub fn of(assembly: &Assembly) -> Self {
        let dim = assembly.dim();
        let Some(b) = assembly.bounds() else {
            return Enclosure {
                dim,
                bounds: None,
                occupied: vec![],
                outside: vec![],
            };
        };
        let b = b.inflate(1, dim);
        let mut occupied = vec![false; b.volume()];
        for p in assembly.points() {
            occupied[b.index_of(p)] = true;
        }
        let mut outside = vec![false; b.volume()];
        let mut queue = VecDeque::new();
        for (i, p) in b.points().enumerate() {
            if b.on_boundary(p, dim) && !occupied[i] {
                outside[i] = true;
                queue.push_back(p);
            }
        }
        while let Some(p) = queue.pop_front() {
            for &d in dim.directions() {
                let q = p.step(d);
                if !b.contains(q) {
                    continue;
                }
                let j = b.index_of(q);
                if !occupied[j] && !outside[j] {
                    outside[j] = true;
                    queue.push_back(q);
                }
            }
        }
        Enclosure {
            dim,
            bounds: Some(b),
            occupied,
            outside,
        }
    }

    /// True iff `p` is empty and not connected to the outside.
    pub fn is_constrained(&self, p: Point) -> bool {
        match self.bounds {
            Some(b) if b.contains(p) => {
                let i = b.index_of(p);
                !self.occupied[i] && !self.outside[i]
            }
            _ => false,
        }
    }

    pub fn constrained_points(&self) -> BTreeSet<Point> {
        let Some(b) = self.bounds else {
            return BTreeSet::new();
        };
        b.points()
            .enumerate()
            .filter(|&(i, _)| !self.occupied[i] && !self.outside[i])
            .map(|(_, p)| p)
            .collect()
    }

    /// The constrained cells split into connected components, ordered by
    /// their smallest point.
    pub fn regions(&self) -> Vec<BTreeSet<Point>> {
        let mut remaining = self.constrained_points();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                for &d in self.dim.directions() {
                    let q = p.step(d);
                    if remaining.remove(&q) {
                        comp.insert(q);
                        queue.push_back(q);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

pub fn constrained_regions(assembly: &Assembly) -> Vec<BTreeSet<Point>> {
    Enclosure::of(assembly).regions()
}

pub fn is_constrained_location(assembly: &Assembly, p: Point) -> bool {
    Enclosure::of(assembly).is_constrained(p)
}
