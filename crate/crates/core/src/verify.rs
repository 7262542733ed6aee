//! Seeded randomized property suites.
//!
//! Trial `t` of a run with base seed `s` draws its instance from
//! `ChaCha8Rng::seed_from_u64(s + t)` (wrapping), using `rand` 0.8 range
//! sampling. A failing trial is therefore reproduced by a run with
//! `--seed <trial seed> --trials 1`, and the instance stream for a seed never
//! depends on how trials are scheduled across threads.

use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::families::{build_ch_canonical, build_ch_member, build_h, ChSpec, HSpec};
use crate::formulas::{f_recursive, g_closed_form};
use crate::graph::Multigraph;
use crate::sandpile::{group_order, groups_isomorphic, sandpile_group, spanning_tree_count_bruteforce};
use crate::Int;

/// Largest edge multiplicity and attachment count in random `H_i` specs.
pub const H_MAX_MULTIPLICITY: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `S(H_i)` does not depend on `i`.
    AttachmentInvariance,
    /// `F_n = G_n`.
    ClosedForm,
    /// `S(Ch_n(a))` is cyclic of order `F_n(a)`, shared by all class members.
    ChainGroup,
    /// Determinant order equals the enumerated spanning-tree count.
    MatrixTree,
}

/// Size limits for random instances. The meaning of each field depends on
/// the theorem:
///
/// | theorem              | `max_len`              | `max_value`                 |
/// |----------------------|------------------------|-----------------------------|
/// | AttachmentInvariance | cycle length `n`       | vertices of `F` and of `G`  |
/// | ClosedForm           | arity `n`              | largest argument            |
/// | ChainGroup           | number of cycles       | largest cycle length        |
/// | MatrixTree           | vertices               | total edge multiplicity     |
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_len: usize,
    pub max_value: u64,
}

impl Bounds {
    pub fn default_for(theorem: Theorem) -> Bounds {
        let (max_len, max_value) = match theorem {
            Theorem::AttachmentInvariance => (8, 4),
            Theorem::ClosedForm => (8, 20),
            Theorem::ChainGroup => (5, 6),
            Theorem::MatrixTree => (7, 14),
        };
        Bounds { max_len, max_value }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub passed: usize,
    pub failed: usize,
    /// Trial seeds of the failing trials, in trial order.
    pub failure_seeds: Vec<u64>,
}

impl Outcome {
    pub fn trials(&self) -> usize {
        self.passed + self.failed
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0
    }
}

pub fn trial_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs `trials` seeded trials in parallel; results are reported in trial
/// order.
pub fn run(theorem: Theorem, trials: usize, seed: u64, bounds: Bounds) -> Outcome {
    let results: Vec<(u64, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let trial_seed = seed.wrapping_add(t as u64);
            let mut rng = trial_rng(trial_seed);
            (trial_seed, run_trial(theorem, &mut rng, bounds))
        })
        .collect();
    let mut outcome = Outcome::default();
    for (trial_seed, ok) in results {
        if ok {
            outcome.passed += 1;
        } else {
            outcome.failed += 1;
            outcome.failure_seeds.push(trial_seed);
        }
    }
    outcome
}

fn run_trial(theorem: Theorem, rng: &mut ChaCha8Rng, bounds: Bounds) -> bool {
    let verdict = match theorem {
        Theorem::AttachmentInvariance => check_attachment_invariance(&random_hspec(rng, bounds)),
        Theorem::ClosedForm => {
            let x = random_args(rng, bounds.max_len, 1, bounds.max_value);
            Ok(check_closed_form(&x))
        }
        Theorem::ChainGroup => {
            let a = random_args(rng, bounds.max_len, 2, bounds.max_value.max(2));
            let plan = random_plan(rng, &a);
            check_chain_group(&a, &plan)
        }
        Theorem::MatrixTree => check_matrix_tree(&random_connected_multigraph(rng, bounds.max_len, bounds.max_value)),
    };
    verdict.unwrap_or(false)
}

/// Multigraph on `n` vertices where each pair gets multiplicity `0..=max_mult`
/// with equal probability. May be disconnected.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, max_mult: u64) -> Multigraph {
    let mut g = Multigraph::new(n).expect("n >= 1");
    for u in 1..=n {
        for v in u + 1..=n {
            let m = rng.gen_range(0..=max_mult);
            g.insert_edges(u, v, m).expect("valid pair");
        }
    }
    g
}

/// Random connected multigraph: `2..=max_vertices` vertices, a random
/// spanning tree, then extra random edges while the total multiplicity stays
/// within `max_total`.
pub fn random_connected_multigraph<R: Rng>(rng: &mut R, max_vertices: usize, max_total: u64) -> Multigraph {
    let cap = max_vertices.min(max_total as usize + 1).max(2);
    let n = rng.gen_range(2..=cap);
    let mut g = Multigraph::new(n).expect("n >= 2");
    for v in 2..=n {
        let parent = rng.gen_range(1..v);
        g.insert_edges(v, parent, 1).expect("valid pair");
    }
    let extra = rng.gen_range(0..=max_total.saturating_sub(n as u64 - 1));
    for _ in 0..extra {
        let u = rng.gen_range(1..=n);
        let mut v = rng.gen_range(1..n);
        if v >= u {
            v += 1;
        }
        g.insert_edges(u, v, 1).expect("valid pair");
    }
    g
}

/// Random `H` spec with attachment index 0 whose result is connected. `F`
/// and `G` have up to `bounds.max_value` vertices, edge multiplicities and
/// attachment counts are at most [`H_MAX_MULTIPLICITY`].
pub fn random_hspec<R: Rng>(rng: &mut R, bounds: Bounds) -> HSpec {
    let max_part = bounds.max_value as usize;
    loop {
        let cycle_len = rng.gen_range(3..=bounds.max_len.max(3));
        let r = rng.gen_range(0..=max_part);
        let s = rng.gen_range(0..=max_part);
        let mut part = |size: usize| -> (Option<Multigraph>, Vec<u64>, Vec<u64>) {
            if size == 0 {
                return (None, vec![], vec![]);
            }
            let g = random_multigraph(rng, size, H_MAX_MULTIPLICITY);
            let a = (0..size).map(|_| rng.gen_range(0..=H_MAX_MULTIPLICITY)).collect();
            let b = (0..size).map(|_| rng.gen_range(0..=H_MAX_MULTIPLICITY)).collect();
            (Some(g), a, b)
        };
        let (f_graph, f1, f2) = part(r);
        let (g_graph, g1, g2) = part(s);
        let spec = HSpec {
            f_graph,
            g_graph,
            cycle_len,
            f1,
            f2,
            g1,
            g2,
            attach: 0,
        };
        if build_h(&spec).is_ok() {
            return spec;
        }
    }
}

/// Between 1 and `max_len` values drawn uniformly from `lo..=hi`.
pub fn random_args<R: Rng>(rng: &mut R, max_len: usize, lo: u64, hi: u64) -> Vec<u64> {
    let n = rng.gen_range(1..=max_len.max(1));
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// A uniformly random valid attachment plan for cycle lengths `a`.
pub fn random_plan<R: Rng>(rng: &mut R, a: &[u64]) -> Vec<usize> {
    a.iter()
        .take(a.len().saturating_sub(1))
        .map(|&prev| rng.gen_range(1..prev as usize))
        .collect()
}

/// Sandpile groups of `H_i` agree for every `i` in `0..=n-2`.
pub fn check_attachment_invariance(spec: &HSpec) -> Result<bool> {
    let reference = sandpile_group(&build_h(&spec.with_attach(0))?)?;
    for i in 1..=spec.cycle_len - 2 {
        let other = sandpile_group(&build_h(&spec.with_attach(i))?)?;
        if !groups_isomorphic(&reference, &other) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_closed_form(x: &[u64]) -> bool {
    let x: Vec<Int> = x.iter().map(|&v| Int::from(v)).collect();
    matches!((f_recursive(&x), g_closed_form(&x)), (Ok(f), Ok(g)) if f == g)
}

/// The hub graph's group is cyclic of order `F_n(a)` and equals the group
/// of the member built with `plan`.
pub fn check_chain_group(a: &[u64], plan: &[usize]) -> Result<bool> {
    let hub = sandpile_group(&build_ch_canonical(a)?)?;
    let member = sandpile_group(&build_ch_member(&ChSpec::new(a.to_vec(), plan.to_vec())?)?)?;
    let args: Vec<Int> = a.iter().map(|&v| Int::from(v)).collect();
    let f = f_recursive(&args)?;
    Ok(hub.is_cyclic() && *hub.order() == f && groups_isomorphic(&hub, &member))
}

/// Determinant order, brute-force tree count and factor product agree.
pub fn check_matrix_tree(g: &Multigraph) -> Result<bool> {
    let order = group_order(g)?;
    let trees = spanning_tree_count_bruteforce(g)?;
    let group = sandpile_group(g)?;
    let product: Int = group.invariant_factors().iter().fold(Int::one(), |acc, d| acc * d);
    Ok(order == trees && order == product)
}
