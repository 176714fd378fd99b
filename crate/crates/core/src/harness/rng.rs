use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 64-bit FNV-1a.
fn fnv1a(key: &str) -> u64 {
    key.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Generator for one trial: keyed by the run seed and the suite name, with
/// the trial index as the ChaCha stream. Trials are independent of the
/// order in which they run.
pub fn trial_rng(seed: u64, key: &str, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(key));
    rng.set_stream(trial);
    rng
}
