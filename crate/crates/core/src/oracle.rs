//! Exhaustive ground truth: dominating sets, domatic partitions and the
//! domatic polynomial of arbitrary graphs, by brute force over vertex
//! bitmasks. Exponential; meant for graphs of a dozen or so vertices.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::DomaticPolynomial;

/// Hard limit imposed by the 64-bit vertex masks.
pub const MASK_LIMIT: usize = 64;

fn closed_neighborhoods(g: &Graph) -> Result<Vec<u64>> {
    if g.order() > MASK_LIMIT {
        return Err(Error::arg(format!(
            "exhaustive oracle supports at most {MASK_LIMIT} vertices, got {}",
            g.order()
        )));
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn reach(closed: &[u64], set: u64) -> u64 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        out |= closed[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    out
}

/// Whether `set` dominates `g`, i.e. `N[set] = V`.
pub fn is_dominating(g: &Graph, set: &[usize]) -> Result<bool> {
    for &v in set {
        g.check_vertex(v)?;
    }
    let closed = closed_neighborhoods(g)?;
    let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
    Ok(reach(&closed, mask) == full_mask(g.order()))
}

/// A minimum dominating set, found by trying all subsets in increasing size
/// (and, within a size, increasing mask order).
pub fn minimum_dominating_set(g: &Graph) -> Result<Vec<usize>> {
    let closed = closed_neighborhoods(g)?;
    let n = g.order();
    let full = full_mask(n);
    for k in 1..=n {
        // Gosper's hack over the k-subsets of an n-set.
        let mut s: u64 = full_mask(k);
        loop {
            if reach(&closed, s) == full {
                return Ok((0..n).filter(|&v| s >> v & 1 == 1).collect());
            }
            let c = s & s.wrapping_neg();
            let r = s.wrapping_add(c);
            if r == 0 || r & !full != 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
            if s & !full != 0 {
                break;
            }
        }
    }
    unreachable!("V itself dominates any graph with n >= 1")
}

/// Domination number γ(G).
pub fn gamma(g: &Graph) -> Result<usize> {
    minimum_dominating_set(g).map(|s| s.len())
}

/// Restricted-growth enumeration of set partitions with at most `max_blocks`
/// blocks, each required to dominate. A branch is cut as soon as some block,
/// even if it received every still-unassigned vertex, could not dominate.
struct Enumerator {
    n: usize,
    closed: Vec<u64>,
    /// `future[v]` = N[{v, .., n-1}]
    future: Vec<u64>,
    full: u64,
    max_blocks: usize,
    min_blocks: usize,
    counts: Vec<u128>,
}

impl Enumerator {
    fn new(g: &Graph, min_blocks: usize, max_blocks: usize) -> Result<Self> {
        let closed = closed_neighborhoods(g)?;
        let n = g.order();
        let mut future = vec![0u64; n + 1];
        for v in (0..n).rev() {
            future[v] = future[v + 1] | closed[v];
        }
        Ok(Enumerator {
            n,
            closed,
            future,
            full: full_mask(n),
            max_blocks,
            min_blocks,
            counts: vec![0; max_blocks + 1],
        })
    }

    fn run(mut self) -> Vec<u128> {
        if self.max_blocks > 0 {
            let mut reaches = Vec::with_capacity(self.max_blocks);
            self.assign(0, &mut reaches);
        }
        self.counts
    }

    /// `reaches[b]` is N[block b] for the blocks opened so far.
    fn assign(&mut self, v: usize, reaches: &mut Vec<u64>) {
        if v == self.n {
            self.counts[reaches.len()] += 1;
            return;
        }
        if reaches.len() + (self.n - v) < self.min_blocks {
            return;
        }
        let later = self.future[v + 1];
        let closed_v = self.closed[v];
        for b in 0..reaches.len() {
            let saved = reaches[b];
            reaches[b] |= closed_v;
            if reaches.iter().all(|&r| r | later == self.full) {
                self.assign(v + 1, reaches);
            }
            reaches[b] = saved;
        }
        if reaches.len() < self.max_blocks {
            reaches.push(closed_v);
            if reaches.iter().all(|&r| r | later == self.full) {
                self.assign(v + 1, reaches);
            }
            reaches.pop();
        }
    }
}

/// dp(G,i): the number of partitions of V into exactly `i` nonempty,
/// unlabeled dominating blocks.
pub fn dp_count(g: &Graph, i: usize) -> Result<BigUint> {
    if i == 0 || i > g.order() {
        return Err(Error::arg(format!("block count {i} outside [1, {}]", g.order())));
    }
    let counts = Enumerator::new(g, i, i)?.run();
    Ok(BigUint::from(counts[i]))
}

/// `[dp(G,1), .., dp(G,max_blocks)]` from a single enumeration.
pub fn dp_counts(g: &Graph, max_blocks: usize) -> Result<Vec<BigUint>> {
    let max_blocks = max_blocks.min(g.order());
    let counts = Enumerator::new(g, 1, max_blocks)?.run();
    Ok(counts[1..].iter().map(|&c| BigUint::from(c)).collect())
}

/// Weak 2-colorings up to swapping the two colors, i.e. dp(G,2). Zero for a
/// single vertex.
pub fn w2_oracle(g: &Graph) -> Result<BigUint> {
    if g.order() < 2 {
        return Ok(BigUint::zero());
    }
    dp_count(g, 2)
}

/// d(G): the largest `i` with dp(G,i) > 0, searched downward from
/// `min(δ+1, n)`.
pub fn domatic_number(g: &Graph) -> Result<usize> {
    let upper = (g.min_degree() + 1).min(g.order());
    for i in (2..=upper).rev() {
        if !dp_count(g, i)?.is_zero() {
            return Ok(i);
        }
    }
    Ok(1)
}

/// DP(G,x) with coefficients dp(G,i) for `i = 1..=δ+1`.
pub fn domatic_polynomial_oracle(g: &Graph) -> Result<DomaticPolynomial> {
    Ok(DomaticPolynomial::from_counts(dp_counts(g, g.min_degree() + 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_path, gen_star, parse_edge_list};

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn domination_examples() {
        let p3 = gen_path(3).unwrap();
        assert!(is_dominating(&p3, &[1]).unwrap());
        assert!(!is_dominating(&p3, &[0]).unwrap());
        assert!(!is_dominating(&p3, &[]).unwrap());
        assert!(is_dominating(&gen_cycle(4).unwrap(), &[0, 2]).unwrap());
        assert!(is_dominating(&p3, &[5]).is_err());
    }

    #[test]
    fn gamma_examples() {
        for n in 1..=6 {
            assert_eq!(gamma(&gen_complete(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(gamma(&gen_path(4).unwrap()).unwrap(), 2);
        assert_eq!(gamma(&gen_cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(gamma(&gen_path(7).unwrap()).unwrap(), 3);
        assert_eq!(gamma(&parse_edge_list("3 0").unwrap()).unwrap(), 3);
    }

    #[test]
    fn dp_examples() {
        for g in [
            gen_path(1).unwrap(),
            gen_cycle(5).unwrap(),
            parse_edge_list("3 0").unwrap(),
        ] {
            assert_eq!(dp_count(&g, 1).unwrap(), big(1));
        }
        assert_eq!(dp_count(&gen_cycle(4).unwrap(), 2).unwrap(), big(3));
        let k3 = gen_complete(3).unwrap();
        assert_eq!(dp_count(&k3, 2).unwrap(), big(3));
        assert_eq!(dp_count(&k3, 3).unwrap(), big(1));
        assert!(dp_count(&k3, 0).is_err());
        assert!(dp_count(&k3, 4).is_err());
    }

    #[test]
    fn w2_examples() {
        assert_eq!(w2_oracle(&gen_path(2).unwrap()).unwrap(), big(1));
        assert_eq!(w2_oracle(&gen_path(3).unwrap()).unwrap(), big(1));
        for r in 1..=4 {
            assert_eq!(w2_oracle(&gen_star(r).unwrap()).unwrap(), big(1));
        }
        assert_eq!(w2_oracle(&gen_path(1).unwrap()).unwrap(), big(0));
    }

    #[test]
    fn domatic_number_examples() {
        assert_eq!(domatic_number(&gen_complete(4).unwrap()).unwrap(), 4);
        assert_eq!(domatic_number(&gen_cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(domatic_number(&gen_path(1).unwrap()).unwrap(), 1);
        assert_eq!(domatic_number(&gen_star(5).unwrap()).unwrap(), 2);
        // C_6 splits into three dominating pairs {i, i+3}
        assert_eq!(domatic_number(&gen_cycle(6).unwrap()).unwrap(), 3);
    }

    #[test]
    fn polynomial_examples() {
        let isolated = parse_edge_list("4 2\n0 1\n1 2").unwrap();
        assert_eq!(domatic_polynomial_oracle(&isolated).unwrap().to_string(), "x");
        assert_eq!(
            domatic_polynomial_oracle(&gen_path(4).unwrap()).unwrap().to_string(),
            "x + 2x^2"
        );
        assert_eq!(
            domatic_polynomial_oracle(&gen_complete(3).unwrap())
                .unwrap()
                .to_string(),
            "x + 3x^2 + x^3"
        );
    }

    #[test]
    fn counts_agree_between_modes() {
        let g = gen_cycle(6).unwrap();
        let all = dp_counts(&g, 6).unwrap();
        for i in 1..=6 {
            assert_eq!(all[i - 1], dp_count(&g, i).unwrap(), "i = {i}");
        }
    }

    #[test]
    fn rejects_oversized_graphs() {
        assert!(dp_count(&gen_path(65).unwrap(), 2).is_err());
    }
}
