//! Lifting a 2D system into the z = 0 plane of 3D space.

use thiserror::Error;

use crate::geometry::Dim;
use crate::model::{Assembly, ModelVariant, TileSet, TileSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("system {0:?} is not two-dimensional")]
    NotTwoDimensional(String),
}

/// Every tile keeps null glues on U and D. `diffusion` overrides the
/// diffusion flag; `None` keeps the original one.
pub fn embed_2d_in_3d(
    system: &TileSystem,
    diffusion: Option<bool>,
) -> Result<TileSystem, EmbedError> {
    if system.dim() != Dim::Two {
        return Err(EmbedError::NotTwoDimensional(system.name.clone()));
    }
    let tiles = TileSet::new(Dim::Three, system.tiles.tiles().to_vec());
    let seed = Assembly::from_placements(Dim::Three, system.seed.iter());
    let variant = ModelVariant {
        dim: Dim::Three,
        diffusion_restricted: diffusion.unwrap_or(system.variant.diffusion_restricted),
    };
    Ok(TileSystem::new(
        format!("{}-3d", system.name),
        tiles,
        seed,
        system.temperature,
        variant,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffusion::constrained_regions;
    use crate::dynamics::frontier;
    use crate::explore::{explore_graph, explore_producibles, ExploreConfig};
    use crate::systems::{rectangle_arms, undirected_ab};

    #[test]
    fn ab_keeps_two_terminals() {
        let s = embed_2d_in_3d(&undirected_ab(ModelVariant::ATAM), None).unwrap();
        assert_eq!(s.variant, ModelVariant::ATAM3D);
        let r = explore_producibles(&s, ExploreConfig::with_max_tiles(5)).unwrap();
        assert_eq!(r.terminals.len(), 2);
        assert_eq!(
            embed_2d_in_3d(&s, None),
            Err(EmbedError::NotTwoDimensional(s.name.clone()))
        );
    }

    #[test]
    fn planar_assemblies_never_constrain_and_frontiers_agree() {
        let flat = rectangle_arms();
        let lifted = embed_2d_in_3d(&flat, Some(true)).unwrap();
        let cfg = ExploreConfig::with_max_tiles(9).max_states(50_000);
        let g2 = explore_graph(&flat.with_variant(ModelVariant::ATAM), cfg).unwrap();
        let g3 = explore_graph(&lifted, cfg).unwrap();
        assert_eq!(g2.len(), g3.len());
        for a in &g3.states {
            assert!(constrained_regions(a).is_empty());
            let flat_a = Assembly::from_placements(Dim::Two, a.iter());
            assert_eq!(
                frontier(a, &lifted).len(),
                frontier(&flat_a, &flat.with_variant(ModelVariant::ATAM)).len()
            );
        }
    }
}
