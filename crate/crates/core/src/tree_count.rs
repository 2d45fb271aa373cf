//! Weak 2-coloring counts of trees by leaf-stripping recursion.
//!
//! For a support vertex `y` whose non-leaf neighbors are `w_1..w_k`:
//!
//! ```text
//! w2(T) = w2(T_y^{-1}) + w2(T'_y^{-2})
//! ```
//!
//! where `T_y^{-1}` drops the leaves of `y` and `T'_y^{-2}` identifies the
//! `w_i` and drops `y` with its leaves. The identity is exact when `k = 1`
//! (a quasi-star vertex); for `k >= 2` the merged vertex only needs one
//! differently colored neighbor where each `w_i` needed its own, and the sum
//! overcounts. Every tree that is not a star has a quasi-star vertex (the
//! second vertex of any longest path), so the counter only ever splits on
//! quasi-star vertices. Stars are the base case with `w2 = 1`, `K_1` has
//! `w2 = 0`.
//!
//! Subproblems are memoized on their canonical tree code.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{bouquet_and_strip, strip_leaves, tree_code_unchecked, Graph, MinusTwo, Reduced, TreeCode};
use crate::polynomial::DomaticPolynomial;

/// Which quasi-star vertex to split on when several exist. All rules give the
/// same count; they differ in how many distinct subtrees the memo sees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionRule {
    /// First quasi-star vertex in a heavy-child-first post-order of the input
    /// tree rooted at its center. Keeps the memo small on large trees.
    #[default]
    PostOrder,
    LowestId,
    HighestId,
    /// Most leaves, ties to the lowest id.
    MostLeaves,
}

/// A subtree together with the input-tree id of each of its vertices.
struct State {
    graph: Graph,
    origin: Vec<usize>,
}

impl State {
    fn follow(&self, reduced: Reduced) -> State {
        let mut origin = vec![0; reduced.graph.order()];
        for (old, new) in reduced.map.iter().enumerate() {
            if let Some(new) = *new {
                origin[new] = self.origin[old];
            }
        }
        State {
            graph: reduced.graph,
            origin,
        }
    }
}

enum Task {
    Visit(State),
    Combine(TreeCode),
}

#[derive(Debug, Default)]
pub struct TreeCounter {
    rule: SelectionRule,
    memo: HashMap<TreeCode, BigUint>,
    splits: usize,
}

impl TreeCounter {
    pub fn new(rule: SelectionRule) -> Self {
        TreeCounter {
            rule,
            ..Default::default()
        }
    }

    /// Number of memoized subtrees.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Number of reduction steps performed so far (memo misses).
    pub fn splits(&self) -> usize {
        self.splits
    }

    pub fn w2(&mut self, t: &Graph) -> Result<BigUint> {
        if !t.is_tree() {
            return Err(Error::NotATree);
        }
        let rank = match self.rule {
            SelectionRule::PostOrder => Some(post_order_rank(t)),
            _ => None,
        };

        let root = State {
            graph: t.clone(),
            origin: (0..t.order()).collect(),
        };
        let mut tasks = vec![Task::Visit(root)];
        let mut values: Vec<BigUint> = Vec::new();
        while let Some(task) = tasks.pop() {
            match task {
                Task::Visit(state) => {
                    let g = &state.graph;
                    if g.order() == 1 {
                        values.push(BigUint::zero());
                        continue;
                    }
                    if g.is_star() {
                        values.push(BigUint::one());
                        continue;
                    }
                    let code = tree_code_unchecked(g);
                    if let Some(hit) = self.memo.get(&code) {
                        values.push(hit.clone());
                        continue;
                    }
                    let y = select_quasi_star(&state, self.rule, rank.as_deref())
                        .expect("every non-star tree has a quasi-star vertex");
                    let leaves: Vec<usize> = g.neighbors(y).iter().copied().filter(|&v| g.is_leaf(v)).collect();
                    let keep_y = state.follow(strip_leaves(g, &leaves));
                    let drop_y = match bouquet_and_strip(g, y, &leaves)? {
                        MinusTwo::Reduced(r) => state.follow(r),
                        MinusTwo::Star => unreachable!("star trees are handled above"),
                    };
                    self.splits += 1;
                    tasks.push(Task::Combine(code));
                    tasks.push(Task::Visit(drop_y));
                    tasks.push(Task::Visit(keep_y));
                }
                Task::Combine(code) => {
                    let a = values.pop().expect("two operands per combine");
                    let b = values.pop().expect("two operands per combine");
                    let sum = a + b;
                    self.memo.insert(code, sum.clone());
                    values.push(sum);
                }
            }
        }
        Ok(values.pop().expect("one result"))
    }
}

fn select_quasi_star(state: &State, rule: SelectionRule, rank: Option<&[usize]>) -> Option<usize> {
    let g = &state.graph;
    let candidates = (0..g.order()).filter_map(|v| {
        let mut leaves = 0;
        let mut internal = 0;
        for &w in g.neighbors(v) {
            if g.is_leaf(w) {
                leaves += 1;
            } else {
                internal += 1;
            }
        }
        (leaves > 0 && internal == 1).then_some((v, leaves))
    });
    match rule {
        SelectionRule::PostOrder => {
            let rank = rank.expect("post-order rule carries ranks");
            candidates.min_by_key(|&(v, _)| rank[state.origin[v]]).map(|(v, _)| v)
        }
        SelectionRule::LowestId => candidates.map(|(v, _)| v).next(),
        SelectionRule::HighestId => candidates.map(|(v, _)| v).next_back(),
        SelectionRule::MostLeaves => candidates
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .map(|(v, _)| v),
    }
}

/// Post-order position of every vertex of `t`, rooted at a center, visiting
/// larger child subtrees first.
fn post_order_rank(t: &Graph) -> Vec<usize> {
    let n = t.order();
    // any vertex of minimum eccentricity works; peel leaves to find one
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = 0;
    while removed + layer.len() < n {
        removed += layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    let root = *layer.iter().min().expect("the last peeled layer holds the center");

    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if v != root {
            size[parent[v]] += size[v];
        }
    }

    let mut rank = vec![0; n];
    let mut next_rank = 0;
    let children = |u: usize| {
        let mut kids: Vec<usize> = t
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| parent[v] == u && v != root)
            .collect();
        kids.sort_by(|&a, &b| size[b].cmp(&size[a]).then(a.cmp(&b)));
        kids
    };
    let mut stack = vec![(root, children(root), 0usize)];
    while let Some((u, kids, next)) = stack.last_mut() {
        if let Some(&c) = kids.get(*next) {
            *next += 1;
            let grandkids = children(c);
            stack.push((c, grandkids, 0));
        } else {
            rank[*u] = next_rank;
            next_rank += 1;
            stack.pop();
        }
    }
    rank
}

/// w2(T) with a fresh memo and the default selection rule.
pub fn w2_tree(t: &Graph) -> Result<BigUint> {
    TreeCounter::default().w2(t)
}

/// w2(P_n) by the two-term recurrence seeded with w2(P_2) = w2(P_3) = 1.
pub fn w2_path_closed(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::arg("closed path form needs n >= 2"));
    }
    // (w2(P_{k-1}), w2(P_k)) starting at k = 3
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for _ in 4..=n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// w2(G ∘ K̄_r) = 2^(n-1) for a base graph of order `n`, for every `r >= 1`.
pub fn w2_corona_closed(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::arg("corona base graph needs at least one vertex"));
    }
    Ok(BigUint::one() << (n - 1))
}

/// DP(T,x) = x + w2(T) x^2, or just `x` for a single vertex.
pub fn dp_tree_polynomial(t: &Graph) -> Result<DomaticPolynomial> {
    let w2 = w2_tree(t)?;
    DomaticPolynomial::from_terms([(1, BigUint::one()), (2, w2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona, gen_cycle, gen_path, gen_star, reduce_bouquet_minus2, reduce_minus1};
    use crate::oracle::w2_oracle;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn paths() {
        let expect = [0, 1, 1, 2, 3, 5];
        for (n, &e) in (1..=6).zip(&expect) {
            assert_eq!(w2_tree(&gen_path(n).unwrap()).unwrap(), big(e), "P_{n}");
        }
    }

    #[test]
    fn stars_and_coronas() {
        assert_eq!(w2_tree(&gen_star(5).unwrap()).unwrap(), big(1));
        assert_eq!(w2_tree(&corona(&gen_path(3).unwrap(), 1).unwrap()).unwrap(), big(4));
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(w2_tree(&gen_cycle(5).unwrap()), Err(Error::NotATree));
        assert_eq!(dp_tree_polynomial(&gen_cycle(5).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(w2_path_closed(2).unwrap(), big(1));
        assert_eq!(w2_path_closed(3).unwrap(), big(1));
        assert_eq!(w2_path_closed(9).unwrap(), big(21));
        assert_eq!(w2_path_closed(10).unwrap(), big(34));
        assert_eq!(w2_path_closed(10).unwrap(), w2_oracle(&gen_path(10).unwrap()).unwrap());
        assert!(w2_path_closed(1).is_err());
        assert_eq!(w2_corona_closed(1).unwrap(), big(1));
        assert_eq!(w2_corona_closed(4).unwrap(), big(8));
        assert!(w2_corona_closed(0).is_err());
        assert_eq!(
            w2_corona_closed(3).unwrap(),
            w2_oracle(&corona(&gen_path(3).unwrap(), 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn path_closed_form_past_64_bits() {
        // F(100) = 354224848179261915075 and w2(P_n) = F(n-1)
        assert_eq!(w2_path_closed(101).unwrap().to_string(), "354224848179261915075");
    }

    #[test]
    fn tree_polynomials() {
        assert_eq!(
            dp_tree_polynomial(&gen_path(4).unwrap()).unwrap().to_string(),
            "x + 2x^2"
        );
        assert_eq!(
            dp_tree_polynomial(&gen_star(7).unwrap()).unwrap().to_string(),
            "x + x^2"
        );
        assert_eq!(dp_tree_polynomial(&gen_path(1).unwrap()).unwrap().to_string(), "x");
    }

    #[test]
    fn bouquet_step_overcounts_with_two_internal_neighbors() {
        // y = 0 with leaf 7 and legs 0-1-2-3, 0-4-5-6
        let t = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7)]).unwrap();
        let keep = reduce_minus1(&t, 0).unwrap().graph;
        let MinusTwo::Reduced(drop) = reduce_bouquet_minus2(&t, 0).unwrap() else {
            panic!("not a star");
        };
        assert_eq!(w2_oracle(&t).unwrap(), big(9));
        assert_eq!(w2_oracle(&keep).unwrap(), big(8));
        assert_eq!(w2_oracle(&drop.graph).unwrap(), big(3));
        assert_eq!(w2_tree(&t).unwrap(), big(9));
    }

    #[test]
    fn memo_is_reused_across_calls() {
        let mut counter = TreeCounter::default();
        counter.w2(&gen_path(40).unwrap()).unwrap();
        let splits = counter.splits();
        assert!(splits < 40, "path recursion should be linear, got {splits}");
        counter.w2(&gen_path(40).unwrap()).unwrap();
        assert_eq!(counter.splits(), splits);
    }

    #[test]
    fn post_order_rank_is_a_permutation() {
        let t = crate::graph::random_tree(50, 3).unwrap();
        let mut rank = post_order_rank(&t);
        rank.sort_unstable();
        assert_eq!(rank, (0..50).collect::<Vec<_>>());
        assert_eq!(post_order_rank(&gen_path(1).unwrap()), [0]);
    }
}
