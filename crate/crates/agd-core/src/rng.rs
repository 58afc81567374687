//! Seed derivation and Gaussian field sampling.
//!
//! Every random quantity in the crate is drawn from a ChaCha8 stream keyed by
//! an explicit seed, and sub-stages derive their own seeds from a root via
//! [`derive_seed`]. Parallel and serial executions therefore agree bit for
//! bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::image::ImageTensor;

/// SplitMix64 finalizer; full-period bijective mixer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from `(root, counter, tag)`.
///
/// The tag is hashed byte-wise (FNV-1a) so that distinct stage names never
/// collide for the same counter.
pub fn derive_seed(root: u64, counter: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in tag.as_bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(root ^ splitmix64(counter ^ splitmix64(h)))
}

pub fn stream(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard-normal image drawn from `rng`.
pub fn gaussian_image(height: usize, width: usize, rng: &mut ChaCha8Rng) -> ImageTensor {
    ImageTensor::from_fn(height, width, |_, _| rng.sample(StandardNormal))
}

/// Uniform draw in `[lo, hi]`.
pub fn uniform(lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(lo..=hi)
}
