//! Koszul complexes and their homology, `Tor` over the base ring by two
//! independent methods, and depth / codepth.

pub mod complex;
pub mod depth;
pub mod tor;

pub use complex::{complex_homology, koszul_homology, HomologyResult, KoszulComplex};
pub use depth::{codepth, depth_at_irrelevant, Codepth, Depth};
pub use tor::{
    free_resolution, minimalize, tor_diagonal, tor_diagonal_all, tor_resolution,
    tor_resolution_all, TorMethod, TorResult,
};
