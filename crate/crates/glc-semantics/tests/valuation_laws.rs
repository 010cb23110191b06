use glc_formula_core::{chain_from_elems, generate, Dir, Formula, GenConfig, SElem};
use glc_reducer::{normalize, recursive_reduce, Strategy};
use glc_semantics::{evaluate, frame_space, value_equal, Frame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

const BUDGET: u32 = 20;

fn lit(name: &str) -> Formula {
    Formula::lit(name)
}

/// Every path to a node of `f`, in preorder.
fn all_paths(f: &Formula) -> Vec<Vec<Dir>> {
    let mut out = vec![vec![]];
    match f {
        Formula::Atom(_) => {}
        Formula::Not(c) => {
            for mut p in all_paths(c) {
                p.insert(0, Dir::Child);
                out.push(p);
            }
        }
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
            for mut p in all_paths(l) {
                p.insert(0, Dir::Left);
                out.push(p);
            }
            for mut p in all_paths(r) {
                p.insert(0, Dir::Right);
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn boolean_algebra_laws_hold_for_generated_instances() {
    type Law = fn(Formula, Formula, Formula) -> (Formula, Formula);
    let laws: &[(&str, Law)] = &[
        ("commute and", |a, b, _| {
            (Formula::and(a.clone(), b.clone()), Formula::and(b, a))
        }),
        ("commute or", |a, b, _| {
            (Formula::or(a.clone(), b.clone()), Formula::or(b, a))
        }),
        ("associate and", |a, b, c| {
            (
                Formula::and(a.clone(), Formula::and(b.clone(), c.clone())),
                Formula::and(Formula::and(a, b), c),
            )
        }),
        ("associate or", |a, b, c| {
            (
                Formula::or(a.clone(), Formula::or(b.clone(), c.clone())),
                Formula::or(Formula::or(a, b), c),
            )
        }),
        ("distribute and over or", |a, b, c| {
            (
                Formula::and(a.clone(), Formula::or(b.clone(), c.clone())),
                Formula::or(Formula::and(a.clone(), b), Formula::and(a, c)),
            )
        }),
        ("distribute or over and", |a, b, c| {
            (
                Formula::or(a.clone(), Formula::and(b.clone(), c.clone())),
                Formula::and(Formula::or(a.clone(), b), Formula::or(a, c)),
            )
        }),
        ("idempotent and", |a, _, _| (Formula::and(a.clone(), a.clone()), a)),
        ("idempotent or", |a, _, _| (Formula::or(a.clone(), a.clone()), a)),
        ("absorb and-or", |a, b, _| {
            (Formula::and(a.clone(), Formula::or(a.clone(), b)), a)
        }),
        ("absorb or-and", |a, b, _| {
            (Formula::or(a.clone(), Formula::and(a.clone(), b)), a)
        }),
        ("annihilate and", |a, _, _| {
            (Formula::and(a, Formula::bot()), Formula::bot())
        }),
        ("annihilate or", |a, _, _| {
            (Formula::or(a, Formula::top()), Formula::top())
        }),
        ("identity and", |a, _, _| (Formula::and(a.clone(), Formula::top()), a)),
        ("identity or", |a, _, _| (Formula::or(a.clone(), Formula::bot()), a)),
        ("complement and", |a, _, _| {
            (Formula::and(a.clone(), Formula::not(a)), Formula::bot())
        }),
        ("complement or", |a, _, _| {
            (Formula::or(a.clone(), Formula::not(a)), Formula::top())
        }),
        ("double negation", |a, _, _| (Formula::not(Formula::not(a.clone())), a)),
        ("dualize and", |a, b, _| {
            (
                Formula::not(Formula::and(a.clone(), b.clone())),
                Formula::or(Formula::not(a), Formula::not(b)),
            )
        }),
        ("dualize or", |a, b, _| {
            (
                Formula::not(Formula::or(a.clone(), b.clone())),
                Formula::and(Formula::not(a), Formula::not(b)),
            )
        }),
    ];
    let cfg = GenConfig::new(5, 2, true);
    for seed in 0..200u64 {
        let (name, law) = laws[(seed as usize) % laws.len()];
        let a = generate(1000 + seed * 3, &cfg);
        let b = generate(1001 + seed * 3, &cfg);
        let c = generate(1002 + seed * 3, &cfg);
        let (lhs, rhs) = law(a, b, c);
        assert_eq!(
            value_equal(&lhs, &rhs, BUDGET),
            Ok(true),
            "law '{name}' failed at seed {seed}"
        );
    }
}

#[test]
fn rewrite_templates_preserve_value_in_random_contexts() {
    // Each template pair, dropped at the same position of a shared host
    // formula, must leave the value unchanged on every frame of the joint
    // space: the rewrite relation refines valuation equality.
    type Pair = fn(Formula, Formula, Formula, SElem) -> (Formula, Formula);
    let pairs: &[Pair] = &[
        // Compound heads and tails split into junction structure.
        |a, b, c, _| {
            (
                Formula::gtr(Formula::and(a.clone(), b.clone()), c.clone()),
                Formula::and(Formula::gtr(a, c.clone()), Formula::gtr(b, c)),
            )
        },
        |a, b, c, _| {
            (
                Formula::gtr(Formula::or(a.clone(), b.clone()), c.clone()),
                Formula::or(Formula::gtr(a, c.clone()), Formula::gtr(b, c)),
            )
        },
        |a, b, c, _| {
            (
                Formula::gtr(a.clone(), Formula::and(b.clone(), c.clone())),
                Formula::and(Formula::gtr(a.clone(), b), Formula::gtr(a, c)),
            )
        },
        |a, b, c, _| {
            (
                Formula::gtr(a.clone(), Formula::or(b.clone(), c.clone())),
                Formula::or(Formula::gtr(a.clone(), b), Formula::gtr(a, c)),
            )
        },
        // Nested attribution flattens to a guarded chain.
        |a, b, c, _| {
            (
                Formula::gtr(Formula::gtr(a.clone(), b.clone()), c.clone()),
                Formula::and(
                    Formula::gtr(a.clone(), c.clone()),
                    Formula::or(
                        Formula::gtr(a.clone(), b.clone()),
                        Formula::gtr(a, Formula::gtr(b, c)),
                    ),
                ),
            )
        },
        // Negation pushes inward.
        |_, _, _, s| {
            (
                Formula::not(Formula::atom(s.clone())),
                Formula::atom(s.complement()),
            )
        },
        |a, b, _, _| {
            (
                Formula::not(Formula::and(a.clone(), b.clone())),
                Formula::or(Formula::not(a), Formula::not(b)),
            )
        },
        |a, b, _, _| {
            (
                Formula::not(Formula::or(a.clone(), b.clone())),
                Formula::and(Formula::not(a), Formula::not(b)),
            )
        },
        |_, b, _, s| {
            (
                Formula::not(Formula::gtr(Formula::atom(s.clone()), b.clone())),
                Formula::or(
                    Formula::atom(s.complement()),
                    Formula::gtr(Formula::atom(s), Formula::not(b)),
                ),
            )
        },
        // Junction idempotence, commutativity, associativity.
        |a, _, _, _| (Formula::or(a.clone(), a.clone()), a),
        |a, _, _, _| (Formula::and(a.clone(), a.clone()), a),
        |a, b, _, _| (Formula::and(a.clone(), b.clone()), Formula::and(b, a)),
        |a, b, _, _| (Formula::or(a.clone(), b.clone()), Formula::or(b, a)),
        |a, b, c, _| {
            (
                Formula::and(a.clone(), Formula::and(b.clone(), c.clone())),
                Formula::and(Formula::and(a, b), c),
            )
        },
        |a, b, c, _| {
            (
                Formula::or(a.clone(), Formula::or(b.clone(), c.clone())),
                Formula::or(Formula::or(a, b), c),
            )
        },
    ];
    assert_eq!(pairs.len(), 15);
    let filler = GenConfig::new(3, 2, true);
    let host_cfg = GenConfig::new(5, 2, false);
    for (i, pair) in pairs.iter().enumerate() {
        for seed in 0..30u64 {
            let base = 10_000 + (i as u64) * 1000 + seed * 4;
            let a = generate(base, &filler);
            let b = generate(base + 1, &filler);
            let c = generate(base + 2, &filler);
            let s = if seed % 4 < 2 {
                SElem::lit(if seed % 2 == 0 { "a" } else { "b" })
            } else {
                SElem::comp(if seed % 2 == 0 { "a" } else { "b" })
            };
            let (lhs, rhs) = pair(a, b, c, s);
            let host = generate(base + 3, &host_cfg);
            let spots = all_paths(&host);
            let at = &spots[(seed as usize * 7 + i) % spots.len()];
            let f1 = host.replace_at(at, lhs).unwrap();
            let f2 = host.replace_at(at, rhs).unwrap();
            assert_eq!(
                value_equal(&f1, &f2, BUDGET),
                Ok(true),
                "template {i} failed at seed {seed}"
            );
        }
    }
}

#[test]
fn chains_and_their_one_pass_negations_are_complementary() {
    let names = ["a", "b", "c"];
    for seed in 0..100u64 {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
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
        let chain = chain_from_elems(&elems);
        let negated = recursive_reduce(&chain).expect("a chain is already expanded");
        for fr in frame_space(&chain) {
            let v = evaluate(&fr, &chain).unwrap();
            let w = evaluate(&fr, &negated).unwrap();
            assert_ne!(
                (v, w),
                (1, 1),
                "seed {seed}: chain and its negation both held"
            );
            assert_eq!(v ^ w, 1, "seed {seed}: values must complement each other");
        }
    }
}

#[test]
fn extra_pairs_and_levels_never_change_values() {
    let cfg = GenConfig::new(6, 2, true);
    for seed in 0..60u64 {
        let f = generate(seed, &cfg);
        let n = normalize(&f, &Strategy::LeftmostInnermost);
        let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0xD1CE);
        for fr in frame_space(&n) {
            let baseline = evaluate(&fr, &n).unwrap();
            let mut levels = fr.levels().to_vec();
            for m in levels.iter_mut() {
                m.insert("zz".to_string(), rng.gen_bool(0.5));
            }
            let mut extra = levels.last().cloned().unwrap_or_default();
            for bit in extra.values_mut() {
                *bit = rng.gen_bool(0.5);
            }
            levels.push(extra);
            let widened = Frame::new(levels);
            assert_eq!(
                evaluate(&widened, &n).unwrap(),
                baseline,
                "seed {seed}: widening the frame changed the value"
            );
        }
    }
}

#[test]
fn rewrite_strategies_agree_on_values() {
    let cfg = GenConfig::new(10, 2, true);
    for seed in 0..30u64 {
        let f = generate(seed, &cfg);
        let reference = normalize(&f, &Strategy::LeftmostInnermost);
        for k in 0..3u64 {
            let other = normalize(&f, &Strategy::SeededRandom(seed * 10 + k));
            assert_eq!(
                value_equal(&reference, &other, BUDGET),
                Ok(true),
                "seed {seed}, strategy {k}: values diverged"
            );
        }
    }
}
