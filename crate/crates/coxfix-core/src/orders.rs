//! Bruhat and weak orders, plus finite poset machinery (intervals,
//! grading, Möbius function, Eulerian test) shared by the theorem suites.

use std::collections::{HashMap, HashSet};

use crate::error::{CoxError, Result};
use crate::system::{CoxeterSystem, Element, Side};

/// Bruhat comparison by the descent-lifting recursion, memoized per
/// system. Agrees with [`bruhat_leq_subword`] on all inputs; the subword
/// route is kept as an independent oracle.
pub fn bruhat_leq(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
    if u == v || u == sys.identity() {
        return true;
    }
    if sys.length(u) >= sys.length(v) {
        return false;
    }
    if let Some(&r) = sys.bruhat_memo.read().unwrap().get(&(u.0, v.0)) {
        return r;
    }
    // lift through the smallest left descent of v
    let s = sys.descents(v, Side::Left)[0];
    let sv = sys.left_mul(s, v).unwrap();
    let r = if sys.has_descent(u, Side::Left, s) {
        let su = sys.left_mul(s, u).unwrap();
        bruhat_leq(sys, su, sv)
    } else {
        bruhat_leq(sys, u, sv)
    };
    sys.bruhat_memo.write().unwrap().insert((u.0, v.0), r);
    r
}

/// Subword test: true iff some subword of the canonical reduced word of
/// `v` canonicalizes to `u`. Implemented as a sweep of prefix-reachable
/// products, which covers subwords of every length.
pub fn bruhat_leq_subword(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
    let word = sys.canonical_word(v);
    let mut reach: HashSet<Element> = HashSet::from([sys.identity()]);
    for &s in &word {
        let extended: Vec<Element> = reach
            .iter()
            .map(|&x| sys.right_mul(x, s).unwrap())
            .collect();
        reach.extend(extended);
    }
    reach.contains(&u)
}

/// Brute-force variant of the subword test enumerating position subsets;
/// exponential, used to validate the sweep above on tiny inputs.
pub fn bruhat_leq_subword_bruteforce(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
    use itertools::Itertools;
    let word = sys.canonical_word(v);
    let k = sys.length(u) as usize;
    if k > word.len() {
        return false;
    }
    (0..word.len()).combinations(k).any(|ix| {
        let sub: Vec<u8> = ix.iter().map(|&i| word[i]).collect();
        sys.element_of_word(&sub).unwrap() == u
    })
}

/// Right weak order: u <= v iff length(u) + length(u^-1 v) = length(v).
pub fn weak_leq(sys: &CoxeterSystem, u: Element, v: Element) -> bool {
    let q = sys.multiply(sys.inverse(u), v);
    sys.length(u) + sys.length(q) == sys.length(v)
}

/// Explicit finite poset over interned elements.
#[derive(Debug, Clone)]
pub struct Poset {
    keys: Vec<Element>,
    pos: HashMap<Element, usize>,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Materializes the order on `keys` and validates the partial-order
    /// axioms. Transitivity is checked in full for small posets and on
    /// sampled triples for larger ones.
    pub fn from_leq(
        keys: Vec<Element>,
        mut leq_fn: impl FnMut(Element, Element) -> bool,
    ) -> Result<Self> {
        let n = keys.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = i == j || leq_fn(keys[i], keys[j]);
            }
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(CoxError::Precondition("leq not reflexive".into()));
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(CoxError::Precondition(format!(
                        "leq not antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        let check_triple = |i: usize, j: usize, k: usize| -> bool {
            !(leq[i * n + j] && leq[j * n + k]) || leq[i * n + k]
        };
        if n <= 220 {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + j] {
                        for k in 0..n {
                            if !check_triple(i, j, k) {
                                return Err(CoxError::Precondition(format!(
                                    "leq not transitive at ({i},{j},{k})"
                                )));
                            }
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..20_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let i = (state >> 33) as usize % n;
                let j = (state >> 17) as usize % n;
                let k = state as usize % n;
                if !check_triple(i, j, k) {
                    return Err(CoxError::Precondition(format!(
                        "leq not transitive at ({i},{j},{k})"
                    )));
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            'pair: for j in 0..n {
                if i == j || !leq[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if k != i && k != j && leq[i * n + k] && leq[k * n + j] {
                        continue 'pair;
                    }
                }
                covers.push((i, j));
            }
        }
        covers.sort_unstable();
        let pos = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        Ok(Poset {
            keys,
            pos,
            leq,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[Element] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> Element {
        self.keys[i]
    }

    pub fn index_of(&self, k: Element) -> Option<usize> {
        self.pos.get(&k).copied()
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.keys.len() + j]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Restriction to a subset of positions, preserving order.
    pub fn restrict(&self, subset: &[usize]) -> Poset {
        let keys: Vec<Element> = subset.iter().map(|&i| self.keys[i]).collect();
        Poset::from_leq(keys, |a, b| self.leq_idx(self.pos[&a], self.pos[&b]))
            .expect("restriction of a partial order")
    }

    /// Length of the longest chain, or None for the empty poset.
    pub fn height(&self) -> Option<u32> {
        if self.keys.is_empty() {
            return None;
        }
        let order = self.linear_extension();
        let n = self.keys.len();
        let mut h = vec![0u32; n];
        let mut best = 0;
        for &j in &order {
            for &i in &order {
                if i != j && self.leq_idx(i, j) {
                    h[j] = h[j].max(h[i] + 1);
                }
                if i == j {
                    break;
                }
            }
            best = best.max(h[j]);
        }
        Some(best)
    }

    /// Indices sorted compatibly with the order (smaller first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.keys.len();
        let mut below = vec![0usize; n];
        for (i, b) in below.iter_mut().enumerate() {
            *b = (0..n).filter(|&j| j != i && self.leq_idx(j, i)).count();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| below[i]);
        order
    }
}

/// Induced subposet: keys of `poset` satisfying the predicate, order
/// restricted.
pub fn induced_subposet(poset: &Poset, mut pred: impl FnMut(Element) -> bool) -> Poset {
    let subset: Vec<usize> = (0..poset.len()).filter(|&i| pred(poset.key(i))).collect();
    poset.restrict(&subset)
}

/// A bounded interval [u, v] inside some order.
#[derive(Debug, Clone)]
pub struct Interval {
    pub poset: Poset,
    pub bottom: usize,
    pub top: usize,
}

/// Builds the interval [u, v] from a universe that contains it.
pub fn build_interval(
    universe: &[Element],
    mut leq: impl FnMut(Element, Element) -> bool,
    u: Element,
    v: Element,
) -> Result<Interval> {
    if !leq(u, v) && u != v {
        return Err(CoxError::EmptyInterval(format!(
            "{u:?} and {v:?} are not comparable"
        )));
    }
    let members: Vec<Element> = universe
        .iter()
        .copied()
        .filter(|&x| (x == u || leq(u, x)) && (x == v || leq(x, v)))
        .collect();
    let poset = Poset::from_leq(members, leq)?;
    let bottom = poset.index_of(u).ok_or_else(|| {
        CoxError::Precondition("universe does not contain the interval bottom".into())
    })?;
    let top = poset.index_of(v).ok_or_else(|| {
        CoxError::Precondition("universe does not contain the interval top".into())
    })?;
    Ok(Interval { poset, bottom, top })
}

impl Interval {
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Positions of the proper part (everything except the endpoints).
    pub fn open_indices(&self) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&i| i != self.bottom && i != self.top)
            .collect()
    }

    pub fn open_poset(&self) -> Poset {
        self.poset.restrict(&self.open_indices())
    }

    /// Longest-chain length from bottom to top.
    pub fn length(&self) -> u32 {
        self.poset.height().unwrap_or(0)
    }

    /// The subinterval [p, q] of this interval.
    pub fn subinterval(&self, p: usize, q: usize) -> Interval {
        let members: Vec<usize> = (0..self.poset.len())
            .filter(|&x| self.poset.leq_idx(p, x) && self.poset.leq_idx(x, q))
            .collect();
        let poset = self.poset.restrict(&members);
        let bottom = poset.index_of(self.poset.key(p)).unwrap();
        let top = poset.index_of(self.poset.key(q)).unwrap();
        Interval { poset, bottom, top }
    }

    /// One line per cover, `u < v` with canonical words, sorted.
    pub fn dump_covers(&self, sys: &CoxeterSystem) -> String {
        let mut lines: Vec<String> = self
            .poset
            .covers()
            .iter()
            .map(|&(a, b)| {
                format!(
                    "{} < {}",
                    sys.format(self.poset.key(a)),
                    sys.format(self.poset.key(b))
                )
            })
            .collect();
        lines.sort();
        lines.join("\n")
    }
}

/// Full Möbius table of a poset.
pub struct MobiusTable {
    n: usize,
    mu: Vec<i64>,
}

impl MobiusTable {
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.mu[i * self.n + j]
    }
}

pub fn mobius(poset: &Poset) -> MobiusTable {
    let n = poset.len();
    let order = poset.linear_extension();
    let mut mu = vec![0i64; n * n];
    for &x in &order {
        mu[x * n + x] = 1;
        for &y in &order {
            if y == x || !poset.leq_idx(x, y) {
                continue;
            }
            let mut acc = 0i64;
            for &z in &order {
                if z == y {
                    break;
                }
                if poset.leq_idx(x, z) && poset.leq_idx(z, y) && z != y {
                    acc += mu[x * n + z];
                }
            }
            mu[x * n + y] = -acc;
        }
    }
    MobiusTable { n, mu }
}

/// Outcome of the grading test: ranks on success, two maximal chains of
/// different lengths otherwise.
pub enum GradedOutcome {
    Graded(Vec<u32>),
    NotGraded {
        short_chain: Vec<usize>,
        long_chain: Vec<usize>,
    },
}

impl GradedOutcome {
    pub fn is_graded(&self) -> bool {
        matches!(self, GradedOutcome::Graded(_))
    }

    pub fn ranks(&self) -> Option<&[u32]> {
        match self {
            GradedOutcome::Graded(r) => Some(r),
            GradedOutcome::NotGraded { .. } => None,
        }
    }
}

/// Tests whether all maximal chains of the interval have equal length.
pub fn is_graded(interval: &Interval) -> GradedOutcome {
    let p = &interval.poset;
    let n = p.len();
    let order = p.linear_extension();
    // longest path from bottom along covers
    let mut rank = vec![0u32; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in p.covers() {
        up[a].push(b);
    }
    for &j in &order {
        for &(a, b) in p.covers() {
            if b == j && rank[a] + 1 > rank[j] {
                rank[j] = rank[a] + 1;
                pred[j] = Some(a);
            }
        }
    }
    for &(a, b) in p.covers() {
        if rank[b] != rank[a] + 1 {
            // witness: two bottom-to-top chains of different lengths
            let mut down_a = chain_down(&pred, a);
            down_a.push(b);
            let tail = chain_up(&up, b, interval.top);
            let mut long_chain = chain_down(&pred, b);
            long_chain.extend(&tail);
            down_a.extend(&tail);
            return GradedOutcome::NotGraded {
                short_chain: down_a,
                long_chain,
            };
        }
    }
    GradedOutcome::Graded(rank)
}

fn chain_down(pred: &[Option<usize>], mut x: usize) -> Vec<usize> {
    let mut out = vec![x];
    while let Some(p) = pred[x] {
        out.push(p);
        x = p;
    }
    out.reverse();
    out
}

fn chain_up(up: &[Vec<usize>], mut x: usize, top: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while x != top {
        let next = up[x][0];
        out.push(next);
        x = next;
    }
    out
}

/// Eulerian test: mu(p, q) = (-1)^(rank difference) for all pairs.
/// Errors if the interval is not graded.
pub fn is_eulerian(interval: &Interval) -> Result<bool> {
    let ranks = match is_graded(interval) {
        GradedOutcome::Graded(r) => r,
        GradedOutcome::NotGraded { .. } => {
            return Err(CoxError::Precondition(
                "is_eulerian requires a graded interval".into(),
            ))
        }
    };
    let mu = mobius(&interval.poset);
    let n = interval.poset.len();
    for i in 0..n {
        for j in 0..n {
            if interval.poset.leq_idx(i, j) {
                let expect = if (ranks[j] - ranks[i]) % 2 == 0 {
                    1
                } else {
                    -1
                };
                if mu.get(i, j) != expect {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::perm;
    use crate::system::CoxeterSystem;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::new(catalog(name).unwrap())
    }

    #[test]
    fn bruhat_examples() {
        let a2 = sys("A2");
        let e = a2.identity();
        let s1 = a2.element_of_word(&[0]).unwrap();
        let s2 = a2.element_of_word(&[1]).unwrap();
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        assert!(bruhat_leq(&a2, e, w0));
        assert!(bruhat_leq(&a2, e, s1));
        assert!(!bruhat_leq(&a2, s1, s2));
        assert!(!bruhat_leq(&a2, s2, s1));
        // subword examples
        let s21 = a2.element_of_word(&[1, 0]).unwrap();
        assert!(bruhat_leq_subword(&a2, s1, s21));
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        assert!(!bruhat_leq_subword(&a2, w0, s12));
        let b2 = sys("B2");
        let u = b2.element_of_word(&[0, 1]).unwrap();
        let v = b2.element_of_word(&[0, 1, 0, 1]).unwrap();
        assert!(bruhat_leq_subword(&b2, u, v));
    }

    #[test]
    fn subword_sweep_matches_bruteforce_on_b2() {
        let b2 = sys("B2");
        let all = b2.full_group().unwrap();
        for u in all.iter() {
            for v in all.iter() {
                assert_eq!(
                    bruhat_leq_subword(&b2, u, v),
                    bruhat_leq_subword_bruteforce(&b2, u, v),
                );
            }
        }
    }

    #[test]
    fn recursion_equals_subword_on_small_groups() {
        for name in [
            "A1", "A2", "B2", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
        ] {
            let g = sys(name);
            let all = g.full_group().unwrap();
            for u in all.iter() {
                for v in all.iter() {
                    assert_eq!(
                        bruhat_leq(&g, u, v),
                        bruhat_leq_subword(&g, u, v),
                        "{name}: ({}, {})",
                        g.format(u),
                        g.format(v)
                    );
                }
            }
        }
    }

    #[test]
    fn recursion_equals_subword_and_perm_model_on_a3() {
        let a3 = sys("A3");
        let all = a3.full_group().unwrap();
        assert_eq!(all.len(), 24);
        for u in all.iter() {
            let pu = perm::from_word(4, &a3.canonical_word(u));
            for v in all.iter() {
                let pv = perm::from_word(4, &a3.canonical_word(v));
                let by_recursion = bruhat_leq(&a3, u, v);
                assert_eq!(by_recursion, bruhat_leq_subword(&a3, u, v));
                assert_eq!(by_recursion, perm::bruhat_leq(&pu, &pv));
            }
        }
    }

    #[test]
    fn weak_order_examples_and_refinement() {
        let a2 = sys("A2");
        let all = a2.full_group().unwrap();
        let s1 = a2.element_of_word(&[0]).unwrap();
        let s2 = a2.element_of_word(&[1]).unwrap();
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        assert!(weak_leq(&a2, s1, s12));
        assert!(!weak_leq(&a2, s2, s12));
        for u in all.iter() {
            assert!(weak_leq(&a2, a2.identity(), u));
            for v in all.iter() {
                if weak_leq(&a2, u, v) {
                    assert!(bruhat_leq(&a2, u, v), "weak must refine Bruhat");
                }
            }
        }
    }

    #[test]
    fn deodhar_lifting_property_holds_on_a3_and_b2() {
        for name in ["A3", "B2"] {
            let g = sys(name);
            let all = g.full_group().unwrap();
            for s in 0..g.rank() as u8 {
                for u1 in all.iter() {
                    if !g.has_descent(u1, Side::Left, s) {
                        continue;
                    }
                    for u2 in all.iter() {
                        if !g.has_descent(u2, Side::Left, s) {
                            continue;
                        }
                        let su1 = g.left_mul(s, u1).unwrap();
                        let su2 = g.left_mul(s, u2).unwrap();
                        let a = bruhat_leq(&g, u1, u2);
                        let b = bruhat_leq(&g, su1, u2);
                        let c = bruhat_leq(&g, su1, su2);
                        assert!(a == b && b == c, "{name}: lifting equivalences failed");
                    }
                }
            }
        }
    }

    #[test]
    fn interval_construction() {
        let a2 = sys("A2");
        let all = a2.full_group().unwrap();
        let e = a2.identity();
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        let leq = |u, v| bruhat_leq(&a2, u, v);
        let iv = build_interval(&all.elements, leq, e, w0).unwrap();
        assert_eq!(iv.len(), 6);
        assert_eq!(iv.poset.covers().len(), 8);
        assert_eq!(iv.length(), 3);

        let single = build_interval(&all.elements, leq, e, e).unwrap();
        assert_eq!(single.len(), 1);

        let s1 = a2.element_of_word(&[0]).unwrap();
        let s2 = a2.element_of_word(&[1]).unwrap();
        assert!(matches!(
            build_interval(&all.elements, leq, s1, s2),
            Err(CoxError::EmptyInterval(_))
        ));
    }

    #[test]
    fn interval_dump_golden() {
        let a2 = sys("A2");
        let all = a2.full_group().unwrap();
        let e = a2.identity();
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        let iv = build_interval(&all.elements, |u, v| bruhat_leq(&a2, u, v), e, w0).unwrap();
        let expected = "\
1 < 1-2
1 < 2-1
1-2 < 1-2-1
2 < 1-2
2 < 2-1
2-1 < 1-2-1
e < 1
e < 2";
        assert_eq!(iv.dump_covers(&a2), expected);
    }

    #[test]
    fn mobius_values() {
        let a2 = sys("A2");
        let all = a2.full_group().unwrap();
        let e = a2.identity();
        let leq = |u, v| bruhat_leq(&a2, u, v);
        // single cover: mu = -1
        let s1 = a2.element_of_word(&[0]).unwrap();
        let iv = build_interval(&all.elements, leq, e, s1).unwrap();
        let mu = mobius(&iv.poset);
        assert_eq!(mu.get(iv.bottom, iv.top), -1);
        // diamond [e, s1 s2 ... ]: interval [e, 12] has middle {1, 2}
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        let iv = build_interval(&all.elements, leq, e, s12).unwrap();
        assert_eq!(iv.len(), 4);
        let mu = mobius(&iv.poset);
        assert_eq!(mu.get(iv.bottom, iv.top), 1);
        // full S3 interval: mu = -1
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        let iv = build_interval(&all.elements, leq, e, w0).unwrap();
        let mu = mobius(&iv.poset);
        assert_eq!(mu.get(iv.bottom, iv.top), -1);
    }

    #[test]
    fn grading_and_eulerian() {
        let a3 = sys("A3");
        let all = a3.full_group().unwrap();
        let e = a3.identity();
        let w0 = a3.element_of_word(&[0, 1, 0, 2, 1, 0]).unwrap();
        let leq = |u, v| bruhat_leq(&a3, u, v);
        let iv = build_interval(&all.elements, leq, e, w0).unwrap();
        match is_graded(&iv) {
            GradedOutcome::Graded(ranks) => {
                for (i, &r) in ranks.iter().enumerate() {
                    assert_eq!(r, a3.length(iv.poset.key(i)));
                }
            }
            GradedOutcome::NotGraded { .. } => panic!("Br(S4) must be graded"),
        }
        assert!(is_eulerian(&iv).unwrap(), "Br(S4) must be Eulerian");
    }

    #[test]
    fn non_graded_fixture_yields_witness() {
        // custom leq on five opaque keys: bottom < a < top, bottom < b < c < top
        let a3 = sys("A3");
        let ball = a3.ball(2).unwrap();
        let keys: Vec<Element> = ball.elements[..5].to_vec();
        let rel = |i: usize, j: usize| {
            matches!(
                (i, j),
                (0, 1) | (0, 4) | (1, 4) | (0, 2) | (2, 3) | (3, 4) | (0, 3) | (2, 4)
            )
        };
        let k = keys.clone();
        let iv = build_interval(
            &keys,
            |a, b| {
                let i = k.iter().position(|&x| x == a).unwrap();
                let j = k.iter().position(|&x| x == b).unwrap();
                rel(i, j)
            },
            keys[0],
            keys[4],
        )
        .unwrap();
        match is_graded(&iv) {
            GradedOutcome::Graded(_) => panic!("fixture is not graded"),
            GradedOutcome::NotGraded {
                short_chain,
                long_chain,
            } => {
                assert_ne!(short_chain.len(), long_chain.len());
            }
        }
        assert!(is_eulerian(&iv).is_err());
    }

    #[test]
    fn eulerian_rejects_three_chain() {
        let a2 = sys("A2");
        let s1 = a2.element_of_word(&[0]).unwrap();
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        let keys = vec![a2.identity(), s1, s12];
        let iv = build_interval(&keys, |u, v| weak_leq(&a2, u, v), a2.identity(), s12).unwrap();
        assert_eq!(iv.len(), 3);
        assert!(!is_eulerian(&iv).unwrap());
    }

    #[test]
    fn induced_subposet_involutions_of_s3() {
        let a2 = sys("A2");
        let all = a2.full_group().unwrap();
        let poset = Poset::from_leq(all.elements.clone(), |u, v| bruhat_leq(&a2, u, v)).unwrap();
        let invol = induced_subposet(&poset, |x| a2.multiply(x, x) == a2.identity());
        assert_eq!(invol.len(), 4);
        let all_poset = induced_subposet(&poset, |_| true);
        assert_eq!(all_poset.len(), 6);
        let empty = induced_subposet(&poset, |_| false);
        assert!(empty.is_empty());
    }
}
