//! Deterministic seeded formula generation for test corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::formula::Formula;
use crate::selem::SElem;

/// Shape parameters for [`generate`].
#[derive(Debug, Clone)]
pub struct GenConfig {
    /// Upper bound on the symbol length of the result (at least 1).
    pub size_budget: u64,
    /// Number of literal pairs to draw from: names `a`, `b`, ... (at most 26).
    pub literal_pool: usize,
    /// Whether `top` / `bot` may appear as leaves.
    pub allow_topbot: bool,
}

impl GenConfig {
    pub fn new(size_budget: u64, literal_pool: usize, allow_topbot: bool) -> Self {
        GenConfig {
            size_budget,
            literal_pool,
            allow_topbot,
        }
    }
}

/// Generate a formula, fully determined by `seed` and the configuration.
///
/// The result's symbol length never exceeds `size_budget`. The ChaCha stream
/// behind the draws is stable across platforms, so a given `(seed, config)`
/// names the same formula everywhere.
///
/// # Panics
///
/// Panics if `size_budget` is 0 or `literal_pool` is 0 or above 26.
pub fn generate(seed: u64, cfg: &GenConfig) -> Formula {
    assert!(cfg.size_budget >= 1, "size budget must be positive");
    assert!(
        (1..=26).contains(&cfg.literal_pool),
        "literal pool must be between 1 and 26"
    );
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    gen_node(&mut rng, cfg, cfg.size_budget)
}

fn gen_leaf(rng: &mut ChaCha20Rng, cfg: &GenConfig) -> Formula {
    if cfg.allow_topbot && rng.gen_range(0..8) == 0 {
        return if rng.gen::<bool>() {
            Formula::top()
        } else {
            Formula::bot()
        };
    }
    let idx = rng.gen_range(0..cfg.literal_pool) as u8;
    let name = ((b'a' + idx) as char).to_string();
    Formula::Atom(SElem::Lit {
        name,
        complemented: rng.gen::<bool>(),
    })
}

fn gen_node(rng: &mut ChaCha20Rng, cfg: &GenConfig, budget: u64) -> Formula {
    if budget <= 1 {
        return gen_leaf(rng, cfg);
    }
    if budget == 2 {
        // Only a leaf or a negation fits.
        return if rng.gen_range(0..3) == 0 {
            Formula::not(gen_leaf(rng, cfg))
        } else {
            gen_leaf(rng, cfg)
        };
    }
    match rng.gen_range(0..20) {
        0..=2 => gen_leaf(rng, cfg),
        3..=5 => Formula::not(gen_node(rng, cfg, budget - 1)),
        n => {
            let left_budget = rng.gen_range(1..=budget - 2);
            let l = gen_node(rng, cfg, left_budget);
            let r = gen_node(rng, cfg, budget - 1 - left_budget);
            match n {
                6..=9 => Formula::and(l, r),
                10..=13 => Formula::or(l, r),
                _ => Formula::gtr(l, r),
            }
        }
    }
}
