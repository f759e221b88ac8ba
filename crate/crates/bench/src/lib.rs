//! Fixed inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tricent_core::{datasets, generate, Graph};

/// Named benchmark graphs: karate plus seeded random graphs roughly the
/// size and density of the larger comparison networks.
pub fn graphs() -> Vec<(&'static str, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    vec![
        ("karate", datasets::karate_club()),
        ("gnp-112", generate::connected_gnp(112, 0.065, &mut rng)),
        ("gnp-332", generate::connected_gnp(332, 0.038, &mut rng)),
    ]
}
