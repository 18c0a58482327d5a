//! Property tests for the engine invariants, each against an independent
//! oracle from `common`.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use tilework::systems::{self, RectangleParams};
use tilework::{
    binding_graph, constrained_regions, explore_graph, explore_producibles, extract_movie,
    find_matching_window_pair, frontier, is_tau_stable, pump, random_run, run_trace, splice,
    Assembly, AssemblyTrace, Dim, ExploreConfig, ModelVariant, Point, Repetitions, SpliceOptions,
    TileSystem,
};

fn frontier_set(a: &Assembly, s: &TileSystem) -> BTreeSet<(Point, tilework::TileId)> {
    frontier(a, s)
        .into_iter()
        .map(|p| (p.pos, p.tile))
        .collect()
}

/// Systems with enough variety for frontier and stability checks.
fn pick_system(r: &mut impl Rng) -> TileSystem {
    match r.random_range(0..6) {
        0 => systems::rectangle_arms(),
        1 => systems::rectangle_arms().with_variant(ModelVariant::ATAM),
        2 => systems::blocking_counters(1),
        3 => systems::chambers(3),
        4 => random_ribbon(r, Dim::Two, true).system,
        _ => random_ribbon(r, Dim::Three, false).system,
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn binding_graph_is_symmetric_and_matches_glues(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = if r.random_bool(0.5) { Dim::Two } else { Dim::Three };
        let n = r.random_range(1..=14);
        let (a, tiles) = random_glued_assembly(&mut r, dim, n, 0.6);
        let g = binding_graph(&a, &tiles).unwrap();
        let bonds = bond_list(&a, &tiles);
        prop_assert_eq!(g.edges.len(), bonds.len());
        for (p, q, w) in bonds {
            prop_assert_eq!(g.weight_between(p, q), Some(w));
            prop_assert_eq!(g.weight_between(q, p), Some(w));
        }
    }

    #[test]
    fn tau_stability_matches_brute_force(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = if r.random_bool(0.5) { Dim::Two } else { Dim::Three };
        let n = r.random_range(1..=10);
        let (a, tiles) = random_glued_assembly(&mut r, dim, n, 0.8);
        for tau in 1..=4 {
            prop_assert_eq!(is_tau_stable(&a, &tiles, tau).unwrap(), brute_force_stable(&a, &tiles, tau));
        }
    }

    #[test]
    fn grown_assemblies_are_stable(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = pick_system(&mut r);
        let t = random_run(&s, r.random(), 40);
        let mut a = s.seed.clone();
        for p in &t.placements {
            a.insert(p.pos, p.tile);
            prop_assert!(is_tau_stable(&a, &s.tiles, s.temperature).unwrap());
        }
    }

    #[test]
    fn frontier_is_sound_and_complete(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = pick_system(&mut r);
        let t = random_run(&s, r.random(), r.random_range(0..50));
        let a = run_trace(&s, &t).unwrap();
        prop_assert_eq!(frontier_set(&a, &s), brute_frontier(&a, &s));
        for p in frontier(&a, &s) {
            let b = tilework::attach(&a, p, &s).unwrap();
            prop_assert!(is_tau_stable(&b, &s.tiles, s.temperature).unwrap());
        }
    }

    #[test]
    fn constrained_regions_match_flood_fill(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = if r.random_bool(0.7) { Dim::Two } else { Dim::Three };
        let a = random_enclosing_assembly(&mut r, dim, 120);
        let got: BTreeSet<BTreeSet<Point>> = constrained_regions(&a).into_iter().collect();
        prop_assert_eq!(got, flood_fill_regions(&a));
        // Translation moves regions rigidly.
        let c = Point::new(r.random_range(-5..5), r.random_range(-5..5), if dim == Dim::Three { 3 } else { 0 });
        let moved: BTreeSet<BTreeSet<Point>> = constrained_regions(&a.translate(c))
            .into_iter()
            .map(|reg| reg.into_iter().map(|p| p - c).collect())
            .collect();
        prop_assert_eq!(moved, flood_fill_regions(&a));
    }

    #[test]
    fn sealed_locations_stay_sealed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = if r.random_bool(0.5) { systems::rectangle_arms() } else { systems::rectangle_arms().with_variant(ModelVariant::ATAM) };
        let t = random_run(&s, r.random(), 80);
        let mut a = s.seed.clone();
        let mut sealed: BTreeSet<Point> = BTreeSet::new();
        for p in &t.placements {
            a.insert(p.pos, p.tile);
            let now: BTreeSet<Point> = constrained_regions(&a).into_iter().flatten().collect();
            for q in &sealed {
                prop_assert!(now.contains(q) || a.contains(*q), "{} reopened", q);
            }
            sealed = now;
        }
    }

    #[test]
    fn movie_of_prefix_is_prefix_of_movie(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dim = if r.random_bool(0.7) { Dim::Two } else { Dim::Three };
        let s = random_ribbon(&mut r, dim, false).system;
        let t = random_run(&s, r.random(), 30);
        let w = random_box(&mut r, dim, 6);
        let full = extract_movie(&s, &t, &w).unwrap();
        let k = r.random_range(0..=t.len());
        let part = extract_movie(&s, &t.prefix(k), &w).unwrap();
        prop_assert!(part.entries.len() <= full.entries.len());
        prop_assert_eq!(&full.entries[..part.entries.len()], &part.entries[..]);
    }

    #[test]
    fn pumping_is_iterated_splicing(seed in any::<u64>(), n in 1usize..4) {
        let mut r = rng(seed);
        let ribbon = random_ribbon(&mut r, Dim::Two, false);
        let s = &ribbon.system;
        let t = random_run(s, r.random(), 30);
        let x_max = run_trace(s, &t).unwrap().points().map(|p| p.x).max().unwrap();
        let template = random_box(&mut r, Dim::Two, x_max / 2);
        let shifts: Vec<Point> = (0..4).map(|k| Point::xy(k * ribbon.period, 0)).collect();
        let Some((w1, w2, c)) = find_matching_window_pair(s, &t, &template, &shifts).unwrap() else {
            return Ok(());
        };
        let pumped = match pump(s, &t, &w1, &w2, c, Repetitions::Count(n), SpliceOptions::default()) {
            Ok(p) => p,
            // Only pumps that complete every iteration are compared.
            Err(_) => return Ok(()),
        };
        let alpha = run_trace(s, &t).unwrap();
        let (lo2, hi2) = w2.box_corners().unwrap();
        let mut trace: AssemblyTrace = t.clone();
        let mut expected = alpha.clone();
        for k in 1..=n as i32 {
            let wa = w2.translate(c.scale(k - 1));
            trace = splice(s, &trace, &t, &wa, c.scale(-k), SpliceOptions::default()).unwrap().trace;
            expected = oracle_splice(&expected, &alpha, lo2 + c.scale(k - 1), hi2 + c.scale(k - 1), c.scale(-k));
        }
        prop_assert_eq!(&pumped.trace, &trace);
        prop_assert_eq!(&pumped.assembly, &expected);
    }

    #[test]
    fn exploration_matches_depth_first_search(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (s, bound) = match r.random_range(0..4) {
            0 => (systems::rectangle_arms(), 8),
            1 => (systems::undirected_ab(ModelVariant::ALL[r.random_range(0..4)]), 5),
            2 => (systems::blocking_counters(1), 12),
            _ => (random_ribbon(&mut r, Dim::Two, true).system, 8),
        };
        let threads = [1, 2, 3, 0][r.random_range(0..4)];
        let got = explore_producibles(&s, ExploreConfig::with_max_tiles(bound).threads(threads)).unwrap();
        let (producibles, terminals, truncated) = dfs_explore(&s, bound);
        prop_assert_eq!(&got.producibles, &producibles);
        prop_assert_eq!(&got.terminals, &terminals);
        prop_assert_eq!(got.truncated, truncated);
        prop_assert!(got.terminals.is_subset(&got.producibles));
    }
}

#[test]
fn subassembly_is_a_partial_order() {
    let s = systems::rectangle_arms();
    let t = random_run(&s, 5, 30);
    let mut fixtures: Vec<Assembly> = (0..=t.len())
        .step_by(3)
        .map(|k| run_trace(&s, &t.prefix(k)).unwrap())
        .collect();
    fixtures.push(run_trace(&s, &random_run(&s, 6, 20)).unwrap());
    fixtures.push(Assembly::singleton(Dim::Two, Point::xy(9, 9), s.id("AR")));
    for a in &fixtures {
        assert!(a.is_subassembly_of(a));
        for b in &fixtures {
            if a.is_subassembly_of(b) && b.is_subassembly_of(a) {
                assert_eq!(a, b);
            }
            for c in &fixtures {
                if a.is_subassembly_of(b) && b.is_subassembly_of(c) {
                    assert!(a.is_subassembly_of(c));
                }
            }
        }
    }
}

#[test]
fn diffusion_restricted_exploration_never_fills_a_sealed_cell() {
    // Small rectangles seal within the bound; replay every discovered state.
    let s = systems::rectangle_arms();
    let g = explore_graph(&s, ExploreConfig::with_max_tiles(11)).unwrap();
    let mut sealed_states = 0;
    for i in 0..g.states.len() {
        let t = g.trace_to(i);
        let mut a = s.seed.clone();
        for p in &t.placements {
            assert!(!flood_fill_regions(&a)
                .into_iter()
                .flatten()
                .any(|q| q == p.pos));
            a.insert(p.pos, p.tile);
        }
        assert_eq!(a, g.states[i]);
        sealed_states += usize::from(!constrained_regions(&a).is_empty());
    }
    assert!(sealed_states > 0, "bound too small to seal any rectangle");
}

#[test]
fn seal_scenario_frontier_matches_brute_force_at_every_step() {
    let r = systems::scenario_seal_rectangle(RectangleParams::default()).unwrap();
    for variant in [ModelVariant::PATAM, ModelVariant::ATAM] {
        let s = r.system.with_variant(variant);
        for k in 0..=r.trace.len() {
            let a = run_trace(&s, &r.trace.prefix(k)).unwrap();
            assert_eq!(
                frontier_set(&a, &s),
                brute_frontier(&a, &s),
                "{} step {k}",
                variant.name()
            );
        }
    }
}
