use glc_decider::{
    satisfiable, valid_paper_strict, valid_sound, valid_sound_counted,
};
use glc_formula_core::{
    chain_from_elems, generate, gtr_path_depth, max_object_level, Formula, GenConfig, SElem,
};
use glc_reducer::{normalize, Strategy};
use glc_semantics::{brute_sat, brute_valid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Every formula of the exact given length over the fixed leaf set.
fn formulas_of_len(n: usize, memo: &mut Vec<Vec<Formula>>) -> Vec<Formula> {
    if let Some(cached) = memo.get(n) {
        if !cached.is_empty() || n == 0 {
            return cached.clone();
        }
    }
    while memo.len() <= n {
        memo.push(Vec::new());
    }
    let out: Vec<Formula> = if n == 0 {
        Vec::new()
    } else if n == 1 {
        vec![
            Formula::lit("a"),
            Formula::comp("a"),
            Formula::lit("b"),
            Formula::comp("b"),
            Formula::top(),
            Formula::bot(),
        ]
    } else {
        let mut out: Vec<Formula> = formulas_of_len(n - 1, memo)
            .into_iter()
            .map(Formula::not)
            .collect();
        for left_len in 1..n - 1 {
            let right_len = n - 1 - left_len;
            for l in formulas_of_len(left_len, memo) {
                for r in formulas_of_len(right_len, memo) {
                    out.push(Formula::and(l.clone(), r.clone()));
                    out.push(Formula::or(l.clone(), r.clone()));
                    out.push(Formula::gtr(l.clone(), r.clone()));
                }
            }
        }
        out
    };
    memo[n] = out.clone();
    out
}

#[test]
fn sound_mode_matches_the_oracle_on_the_exhaustive_small_corpus() {
    let mut memo = Vec::new();
    let mut total = 0usize;
    for n in 1..=5 {
        for f in formulas_of_len(n, &mut memo) {
            total += 1;
            assert_eq!(
                valid_sound(&f),
                brute_valid(&f),
                "validity disagreement on {f:?}"
            );
            assert_eq!(
                satisfiable(&f),
                brute_sat(&f),
                "satisfiability disagreement on {f:?}"
            );
        }
    }
    assert!(total > 4000, "corpus unexpectedly small: {total}");
}

#[test]
fn sound_mode_matches_the_oracle_on_generated_formulas() {
    let cfg = GenConfig::new(12, 3, true);
    let mut used = 0u32;
    let mut seed = 0u64;
    while used < 300 {
        let f = generate(seed, &cfg);
        seed += 1;
        if gtr_path_depth(&f) > 3 {
            continue;
        }
        used += 1;
        assert_eq!(valid_sound(&f), brute_valid(&f), "validity disagreement on {f:?}");
        assert_eq!(satisfiable(&f), brute_sat(&f), "satisfiability disagreement on {f:?}");
    }
}

fn random_chain(rng: &mut ChaCha20Rng) -> Formula {
    let names = ["a", "b", "c"];
    let len = rng.gen_range(2..=4usize);
    let elems: Vec<SElem> = (0..len)
        .map(|_| {
            let name = names[rng.gen_range(0..names.len())];
            if rng.gen_bool(0.5) {
                SElem::comp(name)
            } else {
                SElem::lit(name)
            }
        })
        .collect();
    chain_from_elems(&elems)
}

#[test]
fn verbatim_mode_agrees_on_chains_and_conjunctions_of_chains() {
    for seed in 0..200u64 {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut f = random_chain(&mut rng);
        for _ in 0..rng.gen_range(0..=2usize) {
            f = Formula::and(f, random_chain(&mut rng));
        }
        assert_eq!(
            valid_paper_strict(&f),
            brute_valid(&f),
            "seed {seed}: verbatim mode diverged on a conjunction of chains {f:?}"
        );
    }
}

#[test]
fn recursion_depth_always_spans_the_normalized_levels() {
    let cfg = GenConfig::new(10, 2, true);
    for seed in 0..150u64 {
        let f = generate(seed, &cfg);
        let n = normalize(&f, &Strategy::LeftmostInnermost);
        let levels = max_object_level(&n).unwrap() + 1;
        let d = valid_sound_counted(&f, 24).unwrap();
        assert_eq!(d.stats.levels, levels, "seed {seed}");
        assert!(
            d.stats.max_level_entered <= d.stats.levels,
            "seed {seed}: entered past the final level"
        );
        assert!(d.stats.max_level_entered >= 1, "seed {seed}");
    }
}
