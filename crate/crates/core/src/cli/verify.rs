//! Cross-checks a tree engine against the exhaustive oracle on random trees.

use std::io::{self, Write};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{gen_path, gen_star, random_tree_with, Graph};
use crate::oracle::w2_oracle;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub tree: Graph,
    pub engine: BigUint,
    pub oracle: BigUint,
}

/// For every `n` in `2..=max_n`, checks `samples` random trees plus `P_n` and
/// `K_{1,n-1}`. Stops at the first disagreement and returns it.
pub fn run_verify<E>(cfg: VerifyConfig, mut engine: E, out: &mut dyn Write) -> Result<Option<Mismatch>>
where
    E: FnMut(&Graph) -> Result<BigUint>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 2..=cfg.max_n {
        let mut trees = Vec::with_capacity(cfg.samples + 2);
        for _ in 0..cfg.samples {
            trees.push(random_tree_with(n, &mut rng)?);
        }
        trees.push(gen_path(n)?);
        trees.push(gen_star(n - 1)?);

        for tree in &trees {
            let fast = engine(tree)?;
            let slow = w2_oracle(tree)?;
            if fast != slow {
                report(out, n, tree, &fast, &slow)?;
                return Ok(Some(Mismatch {
                    tree: tree.clone(),
                    engine: fast,
                    oracle: slow,
                }));
            }
        }
        writeln!(out, "n={n} trees={} ok", trees.len())?;
    }
    Ok(None)
}

fn report(out: &mut dyn Write, n: usize, tree: &Graph, fast: &BigUint, slow: &BigUint) -> io::Result<()> {
    writeln!(out, "n={n} MISMATCH tree engine {fast}, oracle {slow}; reproducer:")?;
    write!(out, "{}", tree.to_edge_list())
}
