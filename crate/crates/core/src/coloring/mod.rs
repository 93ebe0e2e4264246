//! Pair and triple colorings and the constructions built on them.

mod alt;
mod pair;
mod rainbow;
mod tight;
mod triple;
mod two_component;

pub use alt::{build_alt_tight_coloring, AltTightColoring};
pub use pair::{PairColoring, Palette};
pub use rainbow::{
    build_rainbow_coloring, rainbow_color, two_adic_valuation, RainbowOptions, VertexColors,
    MIN_RAINBOW_A,
};
pub use tight::build_tight_coloring;
pub use triple::TripleColoring;
pub use two_component::{
    build_two_component_coloring, plant_red_triangles, sample_two_component_aux,
    two_component_from_aux, AuxiliaryFunctions,
};
