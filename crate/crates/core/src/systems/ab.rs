//! The smallest undirected system: one seed, two competing tiles.

use crate::geometry::{Direction, Point};
use crate::model::{Assembly, ModelVariant, TileId, TileSet, TileSystem, TileType};

pub fn undirected_ab(variant: ModelVariant) -> TileSystem {
    let tiles = TileSet::new(
        variant.dim,
        vec![
            TileType::new("S").glue_on(Direction::N, "a", 1),
            TileType::new("A").glue_on(Direction::S, "a", 1),
            TileType::new("B").glue_on(Direction::S, "a", 1),
        ],
    );
    let seed = Assembly::singleton(variant.dim, Point::ORIGIN, TileId(0));
    TileSystem::new("undirected-ab", tiles, seed, 1, variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explore::{check_directed, explore_producibles, DirectednessVerdict, ExploreConfig};
    use crate::model::validate_tile_system;

    #[test]
    fn two_terminals_in_every_variant() {
        for v in ModelVariant::ALL {
            let s = undirected_ab(v);
            assert!(validate_tile_system(&s).is_ok());
            let r = explore_producibles(&s, ExploreConfig::with_max_tiles(10)).unwrap();
            assert_eq!(
                (r.producibles.len(), r.terminals.len(), r.truncated),
                (3, 2, false)
            );
            let verdict = check_directed(&s, ExploreConfig::with_max_tiles(10)).unwrap();
            assert!(matches!(
                verdict,
                DirectednessVerdict::Undirected {
                    terminals_found: 2,
                    ..
                }
            ));
        }
    }
}
