//! Lattice points, axis directions and dimensions.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A point of Z^3. Planar systems keep `z == 0`.
///
/// The derived order is lexicographic on `(x, y, z)`, which is the canonical
/// placement order used for hashing and serialization.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0, z: 0 };

    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Point { x, y, z }
    }

    pub const fn xy(x: i32, y: i32) -> Self {
        Point { x, y, z: 0 }
    }

    pub fn step(self, d: Direction) -> Point {
        self + d.offset()
    }

    pub fn scale(self, k: i32) -> Point {
        Point::new(self.x * k, self.y * k, self.z * k)
    }

    pub fn is_adjacent(self, other: Point) -> bool {
        let d = other - self;
        d.x.abs() + d.y.abs() + d.z.abs() == 1
    }

    /// Direction from `self` to an adjacent `other`.
    pub fn direction_to(self, other: Point) -> Option<Direction> {
        Direction::from_offset(other - self)
    }

    /// Floor division of each coordinate, used to map a point to its macrotile block.
    pub fn div_floor(self, m: i32) -> Point {
        Point::new(
            self.x.div_euclid(m),
            self.y.div_euclid(m),
            self.z.div_euclid(m),
        )
    }

    pub fn coords(self, dim: Dim) -> Vec<i32> {
        match dim {
            Dim::Two => vec![self.x, self.y],
            Dim::Three => vec![self.x, self.y, self.z],
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Lattice dimension of a tile set or system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn from_number(n: u32) -> Option<Dim> {
        match n {
            2 => Some(Dim::Two),
            3 => Some(Dim::Three),
            _ => None,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    /// Directions of this dimension in their canonical order.
    pub fn directions(self) -> &'static [Direction] {
        match self {
            Dim::Two => &PLANAR,
            Dim::Three => &Direction::ALL,
        }
    }

    pub fn contains(self, p: Point) -> bool {
        self == Dim::Three || p.z == 0
    }
}

const PLANAR: [Direction; 4] = [Direction::W, Direction::S, Direction::N, Direction::E];

/// Axis unit vector. Declaration order matches the lexicographic order of the
/// unit vectors: (-1,0,0) < (0,-1,0) < (0,0,-1) < (0,0,1) < (0,1,0) < (1,0,0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    W,
    S,
    D,
    U,
    N,
    E,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::W,
        Direction::S,
        Direction::D,
        Direction::U,
        Direction::N,
        Direction::E,
    ];

    pub fn offset(self) -> Point {
        match self {
            Direction::W => Point::new(-1, 0, 0),
            Direction::S => Point::new(0, -1, 0),
            Direction::D => Point::new(0, 0, -1),
            Direction::U => Point::new(0, 0, 1),
            Direction::N => Point::new(0, 1, 0),
            Direction::E => Point::new(1, 0, 0),
        }
    }

    pub fn from_offset(p: Point) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.offset() == p)
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::W => Direction::E,
            Direction::S => Direction::N,
            Direction::D => Direction::U,
            Direction::U => Direction::D,
            Direction::N => Direction::S,
            Direction::E => Direction::W,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Direction::W => 'W',
            Direction::S => 'S',
            Direction::D => 'D',
            Direction::U => 'U',
            Direction::N => 'N',
            Direction::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.letter() == c)
    }

    pub fn is_planar(self) -> bool {
        !matches!(self, Direction::U | Direction::D)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Closed axis-aligned box of lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub min: Point,
    pub max: Point,
}

impl Bounds {
    pub fn of<I: IntoIterator<Item = Point>>(points: I) -> Option<Bounds> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut b = Bounds {
            min: first,
            max: first,
        };
        for p in it {
            b.min = Point::new(b.min.x.min(p.x), b.min.y.min(p.y), b.min.z.min(p.z));
            b.max = Point::new(b.max.x.max(p.x), b.max.y.max(p.y), b.max.z.max(p.z));
        }
        Some(b)
    }

    /// Grow by `k` in every direction of `dim`.
    pub fn inflate(self, k: i32, dim: Dim) -> Bounds {
        let dz = if dim == Dim::Three { k } else { 0 };
        Bounds {
            min: self.min - Point::new(k, k, dz),
            max: self.max + Point::new(k, k, dz),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        (self.min.x..=self.max.x).contains(&p.x)
            && (self.min.y..=self.max.y).contains(&p.y)
            && (self.min.z..=self.max.z).contains(&p.z)
    }

    pub fn on_boundary(&self, p: Point, dim: Dim) -> bool {
        p.x == self.min.x
            || p.x == self.max.x
            || p.y == self.min.y
            || p.y == self.max.y
            || (dim == Dim::Three && (p.z == self.min.z || p.z == self.max.z))
    }

    pub fn extent(&self) -> Point {
        self.max - self.min + Point::new(1, 1, 1)
    }

    pub fn volume(&self) -> usize {
        let e = self.extent();
        e.x as usize * e.y as usize * e.z as usize
    }

    /// Dense index of a contained point (x fastest).
    pub fn index_of(&self, p: Point) -> usize {
        let e = self.extent();
        let q = p - self.min;
        (q.x as usize) + (e.x as usize) * ((q.y as usize) + (e.y as usize) * (q.z as usize))
    }

    pub fn point_at(&self, i: usize) -> Point {
        let e = self.extent();
        let (ex, ey) = (e.x as usize, e.y as usize);
        Point::new(
            (i % ex) as i32,
            ((i / ex) % ey) as i32,
            (i / (ex * ey)) as i32,
        ) + self.min
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.volume()).map(move |i| self.point_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_order_is_lexicographic_on_offsets() {
        let offsets: Vec<_> = Direction::ALL
            .iter()
            .map(|d| {
                let p = d.offset();
                (p.x, p.y, p.z)
            })
            .collect();
        let mut sorted = offsets.clone();
        sorted.sort();
        assert_eq!(offsets, sorted);
    }

    #[test]
    fn opposite_cancels() {
        for d in Direction::ALL {
            assert_eq!(d.offset() + d.opposite().offset(), Point::ORIGIN);
            assert_eq!(d.opposite().opposite(), d);
        }
    }

    #[test]
    fn bounds_dense_index_roundtrip() {
        let b = Bounds {
            min: Point::new(-2, 3, -1),
            max: Point::new(1, 5, 2),
        };
        for (i, p) in b.points().enumerate() {
            assert!(b.contains(p));
            assert_eq!(b.index_of(p), i);
        }
        assert_eq!(b.points().count(), 4 * 3 * 4);
    }

    #[test]
    fn floor_division_handles_negatives() {
        assert_eq!(Point::xy(-1, 3).div_floor(2), Point::xy(-1, 1));
        assert_eq!(Point::xy(-2, -3).div_floor(2), Point::xy(-1, -2));
    }
}
