//! Independent oracles and random instance generators shared by the
//! integration tests. Nothing here calls the routines it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tilework::{
    Assembly, Dim, Direction, Glue, ModelVariant, Point, TileId, TileSet, TileSystem, TileType,
    Window,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn neighbours(p: Point, dim: Dim) -> Vec<Point> {
    dim.directions().iter().map(|&d| p.step(d)).collect()
}

/// Total strength of matching glues between every pair of abutting tiles,
/// read straight off the tile types.
pub fn bond_list(a: &Assembly, tiles: &TileSet) -> Vec<(Point, Point, u32)> {
    let mut out = Vec::new();
    for (p, t) in a.iter() {
        for &d in a.dim().directions() {
            let q = p.step(d);
            if q <= p {
                continue;
            }
            let Some(u) = a.get(q) else { continue };
            let g = tiles.tile(t).glue(d);
            let h = tiles.tile(u).glue(d.opposite());
            if g.strength > 0 && g.label == h.label && g.strength == h.strength {
                out.push((p, q, g.strength));
            }
        }
    }
    out
}

/// Minimum cut weight over all 2^(n-1) - 1 bipartitions, or `None` for a
/// single tile.
pub fn brute_force_min_cut(a: &Assembly, tiles: &TileSet) -> Option<u64> {
    let pts: Vec<Point> = a.points().collect();
    let n = pts.len();
    if n < 2 {
        return None;
    }
    assert!(n <= 20, "brute force is exponential");
    let bonds = bond_list(a, tiles);
    let idx = |p: Point| pts.iter().position(|&q| q == p).unwrap();
    let bonds: Vec<(usize, usize, u64)> = bonds
        .into_iter()
        .map(|(p, q, w)| (idx(p), idx(q), w as u64))
        .collect();
    let mut best = u64::MAX;
    // Point 0 always on side 0; a non-zero mask puts at least one of the
    // remaining points on side 1.
    for mask in 1u32..(1 << (n - 1)) {
        let side = |i: usize| i > 0 && (mask >> (i - 1)) & 1 == 1;
        let w: u64 = bonds
            .iter()
            .filter(|&&(i, j, _)| side(i) != side(j))
            .map(|&(_, _, w)| w)
            .sum();
        best = best.min(w);
    }
    Some(best)
}

pub fn brute_force_stable(a: &Assembly, tiles: &TileSet, tau: i64) -> bool {
    brute_force_min_cut(a, tiles).is_none_or(|c| c as i64 >= tau)
}

/// Constrained regions by escape test: every empty neighbour of a tile seeds a
/// flood through empty cells, and the flood escapes if it leaves the tight
/// bounding box.
pub fn flood_fill_regions(a: &Assembly) -> BTreeSet<BTreeSet<Point>> {
    let dim = a.dim();
    let pts: HashSet<Point> = a.points().collect();
    if pts.is_empty() {
        return BTreeSet::new();
    }
    let lo = Point::new(
        pts.iter().map(|p| p.x).min().unwrap(),
        pts.iter().map(|p| p.y).min().unwrap(),
        pts.iter().map(|p| p.z).min().unwrap(),
    );
    let hi = Point::new(
        pts.iter().map(|p| p.x).max().unwrap(),
        pts.iter().map(|p| p.y).max().unwrap(),
        pts.iter().map(|p| p.z).max().unwrap(),
    );
    let inside = |p: Point| {
        p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z
    };
    let mut done: HashSet<Point> = HashSet::new();
    let mut out = BTreeSet::new();
    for &p in &pts {
        for q in neighbours(p, dim) {
            if pts.contains(&q) || done.contains(&q) {
                continue;
            }
            let mut comp = BTreeSet::from([q]);
            let mut stack = vec![q];
            let mut escaped = !inside(q);
            while let Some(r) = stack.pop() {
                for s in neighbours(r, dim) {
                    if pts.contains(&s) || comp.contains(&s) {
                        continue;
                    }
                    if !inside(s) {
                        escaped = true;
                        continue;
                    }
                    comp.insert(s);
                    stack.push(s);
                }
            }
            done.extend(comp.iter().copied());
            if !escaped {
                out.insert(comp);
            }
        }
    }
    out
}

/// Random connected shape of `n` points grown from the origin.
pub fn random_shape(r: &mut impl Rng, dim: Dim, n: usize) -> Vec<Point> {
    let mut shape = vec![Point::ORIGIN];
    let mut set: HashSet<Point> = shape.iter().copied().collect();
    while shape.len() < n {
        let p = *shape.choose(r).unwrap();
        let d = *dim.directions().choose(r).unwrap();
        let q = p.step(d);
        if set.insert(q) {
            shape.push(q);
        }
    }
    shape
}

/// Random glue from a three-label alphabet; the null glue with some
/// probability.
fn random_glue(r: &mut impl Rng) -> Glue {
    if r.random_bool(0.25) {
        Glue::null()
    } else {
        Glue::new(["a", "b", "c"][r.random_range(0..3)], r.random_range(1..=2))
    }
}

/// A connected assembly of `n` tiles, each of its own type. Each abutting
/// pair matches with probability `p_match`; other sides get random glues.
pub fn random_glued_assembly(
    r: &mut impl Rng,
    dim: Dim,
    n: usize,
    p_match: f64,
) -> (Assembly, TileSet) {
    let shape = random_shape(r, dim, n);
    let mut types: Vec<TileType> = (0..n).map(|i| TileType::new(format!("t{i}"))).collect();
    for t in &mut types {
        for &d in dim.directions() {
            t.set_glue(d, random_glue(r));
        }
    }
    for (i, &p) in shape.iter().enumerate() {
        for &d in dim.directions() {
            if let Some(j) = shape.iter().position(|&q| q == p.step(d)) {
                if j > i && r.random_bool(p_match) {
                    let g = Glue::new(["a", "b", "c"][r.random_range(0..3)], r.random_range(1..=2));
                    types[i].set_glue(d, g.clone());
                    types[j].set_glue(d.opposite(), g);
                }
            }
        }
    }
    let a = Assembly::from_placements(
        dim,
        shape
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, TileId(i as u32))),
    );
    (a, TileSet::new(dim, types))
}

/// Random scatter of up to `n` tiles in a small box, mixed with box
/// outlines so that enclosures are common.
pub fn random_enclosing_assembly(r: &mut impl Rng, dim: Dim, n: usize) -> Assembly {
    let side = if dim == Dim::Two { 12 } else { 6 };
    let mut a = Assembly::empty(dim);
    let z_range = if dim == Dim::Two { 0..1 } else { 0..side };
    let outlines = r.random_range(0..3);
    for _ in 0..outlines {
        let lo = Point::new(
            r.random_range(0..side - 2),
            r.random_range(0..side - 2),
            if dim == Dim::Two {
                0
            } else {
                r.random_range(0..side - 2)
            },
        );
        let ext = Point::new(
            r.random_range(2..5),
            r.random_range(2..5),
            if dim == Dim::Two {
                0
            } else {
                r.random_range(2..4)
            },
        );
        let hi = lo + ext;
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                for z in lo.z..=hi.z {
                    let p = Point::new(x, y, z);
                    let on_face = x == lo.x
                        || x == hi.x
                        || y == lo.y
                        || y == hi.y
                        || (dim == Dim::Three && (z == lo.z || z == hi.z));
                    if on_face && a.len() < n && !r.random_bool(0.04) {
                        a.insert(p, TileId(0));
                    }
                }
            }
        }
    }
    let extra = r.random_range(0..=n.saturating_sub(a.len()));
    for _ in 0..extra {
        let p = Point::new(
            r.random_range(0..side),
            r.random_range(0..side),
            r.random_range(z_range.clone()),
        );
        a.insert(p, TileId(0));
    }
    a
}

/// A ribbon growing east from the origin with period `period`, decorated by
/// columns of random length. At temperature 2 a second row cooperates with
/// the first, so attachment order varies between runs.
pub struct Ribbon {
    pub system: TileSystem,
    pub period: i32,
}

pub fn random_ribbon(r: &mut impl Rng, dim: Dim, diffusion: bool) -> Ribbon {
    let period = r.random_range(1..=3);
    let cooperative = r.random_bool(0.5);
    let tau: i64 = if cooperative { 2 } else { 1 };
    let chain = if cooperative { 2 } else { 1 };
    let row_glue = |i: i32| format!("r{}", i % period);
    let mut tiles = vec![TileType::new("seed").glue_on(Direction::E, &row_glue(1), chain)];
    for i in 0..period {
        tiles.push(
            TileType::new(format!("R{i}"))
                .glue_on(Direction::W, &row_glue(i), chain)
                .glue_on(Direction::E, &row_glue(i + 1), chain),
        );
    }
    let mut side_dirs = vec![Direction::S];
    if dim == Dim::Three {
        side_dirs.push(Direction::U);
    }
    if cooperative {
        // Second row: a starter above the seed, then cooperative tiles that
        // need both the row below and their western neighbour.
        tiles[0].set_glue(Direction::N, Glue::new("up", 2));
        tiles.push(
            TileType::new("T-start")
                .glue_on(Direction::S, "up", 2)
                .glue_on(Direction::E, &format!("v{}", 1 % period), 1),
        );
        for i in 0..period {
            tiles[1 + i as usize].set_glue(Direction::N, Glue::new(format!("u{i}"), 1));
            tiles.push(
                TileType::new(format!("T{i}"))
                    .glue_on(Direction::S, &format!("u{i}"), 1)
                    .glue_on(Direction::W, &format!("v{i}"), 1)
                    .glue_on(Direction::E, &format!("v{}", (i + 1) % period), 1),
            );
        }
    } else {
        side_dirs.push(Direction::N);
    }
    for i in 0..period {
        for &d in &side_dirs {
            if !r.random_bool(0.6) {
                continue;
            }
            let len = r.random_range(1..=3);
            let label = |k: usize| format!("b{i}{}{k}", d.letter());
            tiles[1 + i as usize].set_glue(d, Glue::new(label(0), chain));
            for k in 0..len {
                let mut t = TileType::new(format!("B{i}{}{k}", d.letter())).glue_on(
                    d.opposite(),
                    &label(k),
                    chain,
                );
                if k + 1 < len {
                    t.set_glue(d, Glue::new(label(k + 1), chain));
                }
                tiles.push(t);
            }
        }
    }
    let ts = TileSet::new(dim, tiles);
    let seed = Assembly::singleton(dim, Point::ORIGIN, TileId(0));
    let variant = ModelVariant {
        dim,
        diffusion_restricted: diffusion,
    };
    Ribbon {
        system: TileSystem::new("ribbon", ts, seed, tau, variant),
        period,
    }
}

/// A random box window strictly east of the seed column.
pub fn random_box(r: &mut impl Rng, dim: Dim, x_max: i32) -> Window {
    let x0 = r.random_range(1..=x_max.max(1));
    let w = r.random_range(0..=2);
    let y0 = r.random_range(-3..=0);
    let h = r.random_range(0..=4);
    let (z0, d) = if dim == Dim::Three {
        (r.random_range(-1..=0), r.random_range(0..=2))
    } else {
        (0, 0)
    };
    Window::boxed(
        dim,
        Point::new(x0, y0, z0),
        Point::new(x0 + w, y0 + h, z0 + d),
    )
    .unwrap()
}

/// `α_L ∪ (β_R − c)` computed from box membership alone; the seed lies
/// outside both boxes.
pub fn oracle_splice(
    alpha: &Assembly,
    beta: &Assembly,
    lo: Point,
    hi: Point,
    c: Point,
) -> Assembly {
    let in_box = |p: Point, lo: Point, hi: Point| {
        p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z
    };
    let mut out = Assembly::empty(alpha.dim());
    for (p, t) in alpha.iter() {
        if !in_box(p, lo, hi) {
            out.insert(p, t);
        }
    }
    for (p, t) in beta.iter() {
        if in_box(p, lo + c, hi + c) {
            out.insert(p - c, t);
        }
    }
    out
}

/// `β_L′ ∪ α_R` with `β_L′ = β_L − c`.
pub fn oracle_symmetric(
    alpha: &Assembly,
    beta: &Assembly,
    lo: Point,
    hi: Point,
    c: Point,
) -> Assembly {
    let in_box = |p: Point, lo: Point, hi: Point| {
        p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z
    };
    let mut out = Assembly::empty(alpha.dim());
    for (p, t) in beta.iter() {
        if !in_box(p, lo + c, hi + c) {
            out.insert(p - c, t);
        }
    }
    for (p, t) in alpha.iter() {
        if in_box(p, lo, hi) {
            out.insert(p, t);
        }
    }
    out
}

/// Every (location, tile type) attachable to `a`, by exhaustive search over
/// empty neighbours and tile types. Diffusion restriction uses
/// [`flood_fill_regions`].
pub fn brute_frontier(a: &Assembly, s: &TileSystem) -> BTreeSet<(Point, TileId)> {
    let dim = s.dim();
    let constrained: HashSet<Point> = if s.variant.diffusion_restricted {
        flood_fill_regions(a).into_iter().flatten().collect()
    } else {
        HashSet::new()
    };
    let mut out = BTreeSet::new();
    let empty: BTreeSet<Point> = a
        .points()
        .flat_map(|p| neighbours(p, dim))
        .filter(|q| !a.contains(*q))
        .collect();
    for q in empty {
        if constrained.contains(&q) {
            continue;
        }
        for t in s.tiles.ids() {
            let strength: u32 = dim
                .directions()
                .iter()
                .filter_map(|&d| {
                    let u = a.get(q.step(d))?;
                    let g = s.tiles.tile(t).glue(d);
                    let h = s.tiles.tile(u).glue(d.opposite());
                    (g.strength > 0 && g.label == h.label && g.strength == h.strength)
                        .then_some(g.strength)
                })
                .sum();
            if strength as i64 >= s.temperature {
                out.insert((q, t));
            }
        }
    }
    out
}

/// Producibles, terminals and truncation by depth-first search with the
/// brute-force frontier; assemblies of `max_tiles` tiles are not expanded.
pub fn dfs_explore(
    s: &TileSystem,
    max_tiles: usize,
) -> (BTreeSet<Assembly>, BTreeSet<Assembly>, bool) {
    let mut seen = BTreeSet::from([s.seed.clone()]);
    let mut terminals = BTreeSet::new();
    let mut truncated = false;
    let mut stack = vec![s.seed.clone()];
    while let Some(a) = stack.pop() {
        let f = brute_frontier(&a, s);
        if f.is_empty() {
            terminals.insert(a.clone());
            continue;
        }
        if a.len() >= max_tiles {
            truncated = true;
            continue;
        }
        // Reverse order, to differ from the engine's canonical order.
        for (q, t) in f.into_iter().rev() {
            let mut b = a.clone();
            b.insert(q, t);
            if seen.insert(b.clone()) {
                stack.push(b);
            }
        }
    }
    (seen, terminals, truncated)
}
