//! Computational laboratory for random interlacements on `Z^d`, `d >= 3`.
//!
//! The crate is organized around six subsystems:
//!
//! - [`lattice`]: exact integer geometry (points, `ℓ∞` spheres, frames,
//!   sticks, the scale ladder `L_n = L_0 · 6^n`, and path types),
//! - [`green`]: a dual-backend oracle for the simple-random-walk Green
//!   function with per-entry error certificates,
//! - [`walk`]: a seeded random-walk engine with exact long-range jumps
//!   (cube exits and slab exits) used by every Monte Carlo estimator,
//! - [`potential`]: discrete capacity, equilibrium measures, and hitting
//!   bounds computed from the Green table,
//! - [`interlace`]: the constructive local sampler for an interlacement
//!   restricted to a finite window, with coupling across intensity levels,
//! - [`renorm`]: proper embeddings of dyadic trees, counting, extraction
//!   from crossing paths, and the capacity/escape estimates built on them,
//! - [`experiments`]: crossing-probability experiments, planar duality
//!   audits, threshold bound reports, and the reproducible suite runner.

pub mod config;
pub mod experiments;
pub mod green;
pub mod interlace;
pub mod lattice;
pub mod potential;
pub mod renorm;
pub mod walk;

pub use lattice::{Point, ScaleLadder};

/// Initializes the global rayon pool, honoring `INTERLACE_THREADS`.
///
/// Safe to call more than once; only the first call takes effect.
pub fn init_threads() {
    use std::sync::Once;
    static ONCE: Once = Once::new();
    ONCE.call_once(|| {
        let threads = std::env::var("INTERLACE_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0);
        if let Some(n) = threads {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    });
}
