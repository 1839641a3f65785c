//! End-to-end acceptance checks. Runs as a plain binary so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use indforest::exact3::{exact3_supertree, Exact3Options};
use indforest::forest::random::{random_forest_with, random_tree, random_tree_max_degree, rng_from_seed, ComponentProfile};
use indforest::forest::{find_induced_backtracking, Forest, SearchBudget};
use indforest::generators::{gen_prop1, gen_thm1, gen_tightness, ThreeDmInstance, ThreePartitionInstance, TightnessParams};
use indforest::greedy::{greedy_bound, greedy_supertree};
use indforest::oracle::{
    oracle_all_min_superforests, oracle_max_common_subtree, oracle_max_subforest,
    oracle_min_superforest, HostClass, OracleBudget,
};
use indforest::pairwise::{mcs_trees, supertree2};
use indforest::ptas::{
    build_catalog, ptas_subforest, strip_to_bounded, that_set, verify_realizer, PtasOptions,
};
use indforest::{contains_induced, Error};
use num_rational::Ratio;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn check(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

/// Inputs whose minimum superforest was found by the oracle, kept for the
/// connectedness criterion.
#[derive(Default)]
struct Solved {
    tree_sets: Vec<Vec<Forest>>,
}

fn oracle_budget() -> OracleBudget {
    OracleBudget {
        max_host_order: 16,
        ..OracleBudget::default()
    }
}

fn skipped(e: &Error) -> bool {
    e.is_budget()
}

fn tree(rng: &mut ChaCha8Rng, max: usize) -> Forest {
    let n = rng.gen_range(1..=max);
    random_tree(rng, n)
}

fn c1_supertree_identity() -> Outcome {
    let mut rng = rng_from_seed(1);
    let mut bad = 0;
    let pairs = 500;
    for _ in 0..pairs {
        let (t1, t2) = (tree(&mut rng, 60), tree(&mut rng, 60));
        let mcs = mcs_trees(&t1, &t2).unwrap();
        let st = supertree2(&t1, &t2).unwrap();
        let ok = st.tree.order() == t1.order() + t2.order() - mcs.size
            && st.tree.is_tree()
            && st.embed1.verify(&t1, &st.tree)
            && st.embed2.verify(&t2, &st.tree)
            && mcs.embed1.verify(&mcs.common, &t1)
            && mcs.embed2.verify(&mcs.common, &t2);
        bad += usize::from(!ok);
    }
    Outcome::check(bad == 0, format!("{pairs} pairs, {bad} mismatches"))
}

fn c2_pairwise_oracle(solved: &mut Solved) -> Outcome {
    let mut rng = rng_from_seed(2);
    let (mut done, mut skip, mut bad) = (0, 0, 0);
    let mut attempts = 0;
    while done < 300 && attempts < 900 {
        attempts += 1;
        let (t1, t2) = (tree(&mut rng, 8), tree(&mut rng, 8));
        let pair = vec![t1.clone(), t2.clone()];
        let sup = match oracle_min_superforest(&pair, &oracle_budget()) {
            Ok(r) => r,
            Err(e) if skipped(&e) => {
                skip += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let sub = oracle_max_common_subtree(&pair, &oracle_budget()).unwrap();
        let st = supertree2(&t1, &t2).unwrap();
        let mcs = mcs_trees(&t1, &t2).unwrap();
        bad += usize::from(st.tree.order() != sup.order || mcs.size != sub.order);
        solved.tree_sets.push(pair);
        done += 1;
    }
    Outcome::check(
        done >= 300 && bad == 0,
        format!("{done} pairs, {bad} mismatches, {skip} skipped"),
    )
}

fn c3_greedy_guarantee() -> Outcome {
    let mut rng = rng_from_seed(3);
    let (mut done, mut skip, mut bad) = (0, 0, 0);
    let mut attempts = 0;
    while done < 200 && attempts < 600 {
        attempts += 1;
        let k = rng.gen_range(2..=4);
        let trees: Vec<Forest> = (0..k).map(|_| tree(&mut rng, 7)).collect();
        let opt = match oracle_min_superforest(&trees, &oracle_budget()) {
            Ok(r) => r.order,
            Err(e) if skipped(&e) => {
                skip += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let (g, _) = greedy_supertree(&trees).unwrap();
        let mut ok = g.verify(&trees)
            && Ratio::from_integer(g.order() as u64) <= greedy_bound(k) * opt as u64
            && g.order() >= opt;
        if k == 2 {
            ok &= g.order() == supertree2(&trees[0], &trees[1]).unwrap().tree.order();
        }
        bad += usize::from(!ok);
        done += 1;
    }
    Outcome::check(
        done >= 200 && bad == 0,
        format!("{done} sets, {bad} violations, {skip} skipped"),
    )
}

fn c4_tightness() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (a, floor) in [(100usize, Ratio::new(400u64, 320)), (1000, Ratio::new(4000, 3020))] {
        let fam = gen_tightness(TightnessParams { a, b: 2, c: 1 }).unwrap();
        let inputs = fam.inputs();
        let known = &fam.known_supertree.tree;
        let verified = inputs
            .iter()
            .all(|t| contains_induced(t, known).unwrap().is_some());
        let (g, trace) = greedy_supertree(&inputs).unwrap();
        let ratio = Ratio::new(g.order() as u64, known.order() as u64);
        let this = verified
            && g.verify(&inputs)
            && known.order() == 3 * a + 3 * 2 + 2 + 12
            && trace.per_rotation_orders.iter().all(|&o| o >= 4 * a)
            && ratio >= floor;
        ok &= this;
        parts.push(format!(
            "a={a}: greedy {} / known {} = {:.4}",
            g.order(),
            known.order(),
            g.order() as f64 / known.order() as f64
        ));
    }
    Outcome::check(ok, parts.join(", "))
}

fn c5_exact3(solved: &mut Solved) -> Outcome {
    let mut rng = rng_from_seed(5);
    let (mut done, mut skip, mut bad) = (0, 0, 0);
    let mut attempts = 0;
    while done < 200 && attempts < 600 {
        attempts += 1;
        let trees: Vec<Forest> = (0..3)
            .map(|_| {
                let n = rng.gen_range(1..=8);
                random_tree_max_degree(&mut rng, n, 3)
            })
            .collect();
        let opt = match oracle_min_superforest(&trees, &oracle_budget()) {
            Ok(r) => r.order,
            Err(e) if skipped(&e) => {
                skip += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let ex = exact3_supertree(&trees[0], &trees[1], &trees[2], &Exact3Options::default())
            .unwrap();
        let (g, _) = greedy_supertree(&trees).unwrap();
        let ok = ex.order == opt && ex.supertree.verify(&trees) && ex.order <= g.order();
        bad += usize::from(!ok);
        solved.tree_sets.push(trees);
        done += 1;
    }
    Outcome::check(
        done >= 200 && bad == 0,
        format!("{done} triples, {bad} mismatches, {skip} skipped"),
    )
}

fn c6_that_set() -> Outcome {
    let mut rng = rng_from_seed(6);
    let catalogs = [build_catalog(2).unwrap(), build_catalog(3).unwrap()];
    let mut bad = 0;
    let mut vectors = 0;
    for i in 0..200 {
        let n = rng.gen_range(0..=10);
        let k = rng.gen_range(1..=3);
        let f = random_forest_with(&mut rng, n, &ComponentProfile::Components(k));
        let cat = &catalogs[i % 2];
        let got = that_set(&f, cat).unwrap();
        let mut brute: Vec<Vec<u32>> = (0u32..1 << n)
            .filter_map(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                cat.census(&f.induced(&vs))
            })
            .collect();
        brute.sort();
        brute.dedup();
        let mut mine: Vec<Vec<u32>> = got.vectors().map(|v| v.t.clone()).collect();
        mine.sort();
        let realizers_ok = got
            .vectors()
            .all(|v| verify_realizer(&f, cat, v, &got.realizer(v).unwrap()));
        vectors += mine.len();
        bad += usize::from(mine != brute || !realizers_ok);
    }
    Outcome::check(
        bad == 0,
        format!("200 forests, {vectors} vectors, {bad} mismatches"),
    )
}

fn c7_ptas() -> Outcome {
    let mut rng = rng_from_seed(7);
    let (mut done, mut skip, mut bad) = (0, 0, 0);
    let mut attempts = 0;
    while done < 100 && attempts < 400 {
        attempts += 1;
        let k = rng.gen_range(1..=3);
        let total = rng.gen_range(k..=12);
        let mut sizes = vec![1; k];
        for _ in k..total {
            sizes[rng.gen_range(0..k)] += 1;
        }
        let forests: Vec<Forest> = sizes
            .iter()
            .map(|&n| {
                let comps = rng.gen_range(1..=3);
                random_forest_with(&mut rng, n, &ComponentProfile::Components(comps))
            })
            .collect();
        let delta = rng.gen_range(2..=4);
        let opt = match oracle_max_subforest(&forests, &OracleBudget::default()) {
            Ok(r) => r.order,
            Err(e) if skipped(&e) => {
                skip += 1;
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        let opts = PtasOptions {
            delta: Some(delta),
            ..Default::default()
        };
        let r = ptas_subforest(&forests, 1.0, &opts).unwrap();
        let bounded = r.forest.components().iter().all(|c| c.order() <= delta);
        let embedded = forests.iter().zip(&r.embeddings).all(|(f, e)| {
            e.verify(&r.forest, f)
                && find_induced_backtracking(&r.forest, f, SearchBudget::default())
                    .unwrap()
                    .is_some()
        });
        let ok = bounded
            && embedded
            && r.order == r.forest.order()
            && r.order <= opt
            && r.order * delta >= (delta - 2) * opt;
        bad += usize::from(!ok);
        done += 1;
    }
    Outcome::check(
        done >= 100 && bad == 0,
        format!("{done} instances, {bad} violations, {skip} skipped"),
    )
}

fn c8_strip() -> Outcome {
    let mut rng = rng_from_seed(8);
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(0..=40);
        let k = rng.gen_range(1..=4);
        let f = random_forest_with(&mut rng, n, &ComponentProfile::Components(k));
        let delta = rng.gen_range(1..=6);
        let s = strip_to_bounded(&f, delta);
        let ok = s.removed.len() * delta <= n
            && s.residual.components().iter().all(|c| c.order() <= delta)
            && s.residual.order() + s.removed.len() == n
            && s.residual == f.induced(&s.kept);
        bad += usize::from(!ok);
    }
    Outcome::check(bad == 0, format!("200 forests, {bad} violations"))
}

fn c9_reduction_constants() -> Outcome {
    let inst = ThreeDmInstance {
        q: 4,
        triples: vec![
            (0, 0, 0),
            (1, 1, 1),
            (2, 2, 2),
            (3, 3, 3),
            (0, 1, 2),
            (1, 2, 3),
            (2, 3, 0),
            (3, 0, 1),
            (0, 2, 3),
        ],
    };
    let g = gen_thm1(&inst, Some(&[0, 1, 2, 3])).unwrap();
    let w = g.witness.as_ref().unwrap();
    let thm1 = g.ty.order() == 169
        && g.tz.order() == 169
        && w.order() == 173
        && [&g.tx, &g.ty, &g.tz]
            .iter()
            .all(|t| contains_induced(t, w).unwrap().is_some());

    let pair = gen_prop1(&ThreePartitionInstance {
        values: vec![2, 2, 3, 2, 2, 3],
    })
    .unwrap();
    let contained = contains_induced(&pair.f1, &pair.f2).unwrap().is_some();
    let max_sub = oracle_max_subforest(&[pair.t1.clone(), pair.t2.clone()], &OracleBudget::default())
        .unwrap()
        .order;
    let prop1 = contained && max_sub == 14 && max_sub == pair.t1.order() - 1;
    Outcome::check(
        thm1 && prop1,
        format!(
            "n(Ty)={} n(Tz)={} witness={}; F1 in F2: {contained}; max subforest {max_sub}",
            g.ty.order(),
            g.tz.order(),
            w.order()
        ),
    )
}

fn c10_connected(solved: &Solved) -> Outcome {
    // Re-solve with arbitrary forests as candidate hosts and collect every
    // minimum; all of them must be trees.
    let budget = OracleBudget {
        max_host_order: 10,
        ..OracleBudget::default()
    };
    let (mut checked, mut skip, mut bad) = (0, 0, 0);
    for inputs in &solved.tree_sets {
        let tree_mode = oracle_min_superforest(inputs, &oracle_budget()).unwrap();
        bad += usize::from(!tree_mode.forest.is_tree());
        match oracle_all_min_superforests(inputs, &budget, HostClass::Forests) {
            Ok((n, all)) => {
                checked += 1;
                bad += usize::from(n != tree_mode.order || !all.iter().all(Forest::is_tree));
            }
            Err(e) if skipped(&e) => skip += 1,
            Err(e) => panic!("{e}"),
        }
    }
    Outcome::check(
        bad == 0 && checked > 0,
        format!(
            "{} instances, {checked} re-solved over all forests, {bad} violations, {skip} over host limit",
            solved.tree_sets.len()
        ),
    )
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Outcome::check(false, format!("panicked: {msg}"))
    });
    println!(
        "criterion {id:>2} {name:<31} {} ({}; {:.1}s)",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.detail,
        start.elapsed().as_secs_f64()
    );
    outcome.passed
}

fn main() {
    let mut solved = Solved::default();
    let results = [
        run(1, "supertree identity", c1_supertree_identity),
        run(2, "pairwise vs oracle", || c2_pairwise_oracle(&mut solved)),
        run(3, "greedy guarantee", c3_greedy_guarantee),
        run(4, "greedy tightness", c4_tightness),
        run(5, "exact three trees", || c5_exact3(&mut solved)),
        run(6, "census sets", c6_that_set),
        run(7, "ptas guarantee", c7_ptas),
        run(8, "strip contract", c8_strip),
        run(9, "reduction constants", c9_reduction_constants),
        run(10, "minimum superforests connected", || c10_connected(&solved)),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
