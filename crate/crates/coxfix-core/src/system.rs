//! Coxeter systems: interned elements, the word problem, length,
//! descents, balls, parabolic longest elements and absolute length.
//!
//! Elements are interned per system; the canonical form of an element is
//! the lexicographically least reduced word of its braid class, obtained
//! by closure under braid moves (Tits). Every reduced word seen while
//! interning is indexed globally, so products reduce to hash lookups
//! after warm-up.

use std::collections::{HashMap, HashSet};
use std::sync::RwLock;

use crate::error::{CoxError, Result};
use crate::matrix::CoxeterMatrix;
use crate::word::{braid_closure, pack_word, validate_word, Word, PACK_MAX_LEN, PACK_MAX_RANK};

/// Interned handle; equal handles within one system mean equal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub(crate) u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

const NONE: u32 = u32::MAX;

/// Enumeration never chases words longer than this; the longest element
/// of any finite catalog group is far shorter (E8 has 120), while an
/// infinite parabolic would otherwise intern unbounded words before the
/// node cap triggers.
const MAX_ENUM_LENGTH: u32 = 512;

struct ElemData {
    canonical: Box<[u8]>,
    rdesc: u32,
    ldesc: u32,
    /// per right descent, one reduced word ending with it
    rwitness: Vec<(u8, Box<[u8]>)>,
    lwitness: Vec<(u8, Box<[u8]>)>,
    inverse: u32,
}

struct Registry {
    packable: bool,
    packed: HashMap<u128, u32>,
    long: HashMap<Box<[u8]>, u32>,
    elems: Vec<ElemData>,
    right: Vec<Vec<u32>>,
    left: Vec<Vec<u32>>,
}

impl Registry {
    fn new(rank: usize) -> Self {
        let mut reg = Registry {
            packable: rank <= PACK_MAX_RANK,
            packed: HashMap::new(),
            long: HashMap::new(),
            elems: Vec::new(),
            right: Vec::new(),
            left: Vec::new(),
        };
        reg.elems.push(ElemData {
            canonical: Box::new([]),
            rdesc: 0,
            ldesc: 0,
            rwitness: Vec::new(),
            lwitness: Vec::new(),
            inverse: 0,
        });
        reg.right.push(vec![NONE; rank]);
        reg.left.push(vec![NONE; rank]);
        reg.index_word(&[], 0);
        reg
    }

    fn index_word(&mut self, word: &[u8], id: u32) {
        if self.packable {
            if let Some(k) = pack_word(word) {
                self.packed.insert(k, id);
                return;
            }
        }
        self.long.insert(word.into(), id);
    }

    fn lookup_word(&self, word: &[u8]) -> Option<u32> {
        if self.packable && word.len() <= PACK_MAX_LEN {
            return self.packed.get(&pack_word(word).unwrap()).copied();
        }
        self.long.get(word).copied()
    }

    /// Interns a word known to be reduced and returns its element.
    fn intern_reduced(&mut self, matrix: &CoxeterMatrix, word: &[u8]) -> u32 {
        if let Some(id) = self.lookup_word(word) {
            return id;
        }
        let rank = matrix.rank();
        let class = braid_closure(matrix, word);
        let id = self.elems.len() as u32;
        let mut canonical: &Word = &class[0];
        let mut rdesc = 0u32;
        let mut ldesc = 0u32;
        let mut rwitness: Vec<(u8, Box<[u8]>)> = Vec::new();
        let mut lwitness: Vec<(u8, Box<[u8]>)> = Vec::new();
        for w in &class {
            if w < canonical {
                canonical = w;
            }
            let first = w[0];
            let last = *w.last().unwrap();
            if rdesc & (1 << last) == 0 {
                rdesc |= 1 << last;
                rwitness.push((last, w.as_slice().into()));
            }
            if ldesc & (1 << first) == 0 {
                ldesc |= 1 << first;
                lwitness.push((first, w.as_slice().into()));
            }
        }
        let canonical: Box<[u8]> = canonical.as_slice().into();
        self.elems.push(ElemData {
            canonical,
            rdesc,
            ldesc,
            rwitness,
            lwitness,
            inverse: NONE,
        });
        self.right.push(vec![NONE; rank]);
        self.left.push(vec![NONE; rank]);
        for w in class {
            self.index_word(&w, id);
        }
        id
    }

    fn right_mul(&mut self, matrix: &CoxeterMatrix, x: u32, s: u8) -> u32 {
        let cached = self.right[x as usize][s as usize];
        if cached != NONE {
            return cached;
        }
        let d = &self.elems[x as usize];
        let z = if d.rdesc & (1 << s) != 0 {
            let w = d
                .rwitness
                .iter()
                .find(|(g, _)| *g == s)
                .map(|(_, w)| w.clone())
                .unwrap();
            self.intern_reduced(matrix, &w[..w.len() - 1])
        } else {
            let mut w = d.canonical.to_vec();
            w.push(s);
            self.intern_reduced(matrix, &w)
        };
        self.right[x as usize][s as usize] = z;
        self.right[z as usize][s as usize] = x;
        z
    }

    fn left_mul(&mut self, matrix: &CoxeterMatrix, s: u8, x: u32) -> u32 {
        let cached = self.left[x as usize][s as usize];
        if cached != NONE {
            return cached;
        }
        let d = &self.elems[x as usize];
        let z = if d.ldesc & (1 << s) != 0 {
            let w = d
                .lwitness
                .iter()
                .find(|(g, _)| *g == s)
                .map(|(_, w)| w.clone())
                .unwrap();
            self.intern_reduced(matrix, &w[1..])
        } else {
            let mut w = Vec::with_capacity(d.canonical.len() + 1);
            w.push(s);
            w.extend_from_slice(&d.canonical);
            self.intern_reduced(matrix, &w)
        };
        self.left[x as usize][s as usize] = z;
        self.left[z as usize][s as usize] = x;
        z
    }

    fn inverse(&mut self, matrix: &CoxeterMatrix, x: u32) -> u32 {
        let cached = self.elems[x as usize].inverse;
        if cached != NONE {
            return cached;
        }
        let mut w = self.elems[x as usize].canonical.to_vec();
        w.reverse();
        let z = self.intern_reduced(matrix, &w);
        self.elems[x as usize].inverse = z;
        self.elems[z as usize].inverse = x;
        z
    }

    fn mul_word(&mut self, matrix: &CoxeterMatrix, start: u32, word: &[u8]) -> u32 {
        let mut cur = start;
        for &s in word {
            cur = self.right_mul(matrix, cur, s);
        }
        cur
    }
}

/// A Coxeter system (W, S) with an intern table of elements.
///
/// All methods take `&self`; memoization is synchronized internally, so a
/// constructed system can be queried from multiple threads.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    ball_cap: usize,
    reg: RwLock<Registry>,
    pub(crate) bruhat_memo: RwLock<HashMap<(u32, u32), bool>>,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let rank = matrix.rank();
        CoxeterSystem {
            matrix,
            ball_cap: 1_000_000,
            reg: RwLock::new(Registry::new(rank)),
            bruhat_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn with_ball_cap(matrix: CoxeterMatrix, cap: usize) -> Self {
        let mut sys = Self::new(matrix);
        sys.ball_cap = cap;
        sys
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    /// Canonicalizes an arbitrary word (not necessarily reduced).
    pub fn element_of_word(&self, word: &[u8]) -> Result<Element> {
        validate_word(&self.matrix, word)?;
        if let Some(id) = self.try_fold_cached(word) {
            return Ok(Element(id));
        }
        let mut g = self.reg.write().unwrap();
        Ok(Element(g.mul_word(&self.matrix, 0, word)))
    }

    /// Read-only fast path: succeeds when every step is memoized.
    fn try_fold_cached(&self, word: &[u8]) -> Option<u32> {
        let g = self.reg.read().unwrap();
        let mut cur = 0u32;
        for &s in word {
            let z = g.right[cur as usize][s as usize];
            if z == NONE {
                return None;
            }
            cur = z;
        }
        Some(cur)
    }

    pub fn canonical_word(&self, x: Element) -> Word {
        self.reg.read().unwrap().elems[x.0 as usize]
            .canonical
            .to_vec()
    }

    pub fn length(&self, x: Element) -> u32 {
        self.reg.read().unwrap().elems[x.0 as usize].canonical.len() as u32
    }

    pub fn format(&self, x: Element) -> String {
        crate::word::format_word(&self.canonical_word(x))
    }

    /// True iff the word is a reduced expression.
    pub fn is_reduced(&self, word: &[u8]) -> Result<bool> {
        let e = self.element_of_word(word)?;
        Ok(self.length(e) as usize == word.len())
    }

    pub fn multiply(&self, x: Element, y: Element) -> Element {
        let yw = self.canonical_word(y);
        if let Some(id) = self.try_fold_from(x.0, &yw) {
            return Element(id);
        }
        let mut g = self.reg.write().unwrap();
        Element(g.mul_word(&self.matrix, x.0, &yw))
    }

    fn try_fold_from(&self, start: u32, word: &[u8]) -> Option<u32> {
        let g = self.reg.read().unwrap();
        let mut cur = start;
        for &s in word {
            let z = g.right[cur as usize][s as usize];
            if z == NONE {
                return None;
            }
            cur = z;
        }
        Some(cur)
    }

    pub fn inverse(&self, x: Element) -> Element {
        {
            let g = self.reg.read().unwrap();
            let c = g.elems[x.0 as usize].inverse;
            if c != NONE {
                return Element(c);
            }
        }
        let mut g = self.reg.write().unwrap();
        Element(g.inverse(&self.matrix, x.0))
    }

    pub fn right_mul(&self, x: Element, s: u8) -> Result<Element> {
        validate_word(&self.matrix, &[s])?;
        {
            let g = self.reg.read().unwrap();
            let z = g.right[x.0 as usize][s as usize];
            if z != NONE {
                return Ok(Element(z));
            }
        }
        let mut g = self.reg.write().unwrap();
        Ok(Element(g.right_mul(&self.matrix, x.0, s)))
    }

    pub fn left_mul(&self, s: u8, x: Element) -> Result<Element> {
        validate_word(&self.matrix, &[s])?;
        {
            let g = self.reg.read().unwrap();
            let z = g.left[x.0 as usize][s as usize];
            if z != NONE {
                return Ok(Element(z));
            }
        }
        let mut g = self.reg.write().unwrap();
        Ok(Element(g.left_mul(&self.matrix, s, x.0)))
    }

    pub fn generator(&self, s: u8) -> Result<Element> {
        self.element_of_word(&[s])
    }

    /// Descent set on the requested side, as sorted generator indices.
    pub fn descents(&self, x: Element, side: Side) -> Vec<u8> {
        let g = self.reg.read().unwrap();
        let mask = match side {
            Side::Right => g.elems[x.0 as usize].rdesc,
            Side::Left => g.elems[x.0 as usize].ldesc,
        };
        (0..self.rank() as u8)
            .filter(|s| mask & (1 << s) != 0)
            .collect()
    }

    pub fn has_descent(&self, x: Element, side: Side, s: u8) -> bool {
        let g = self.reg.read().unwrap();
        let mask = match side {
            Side::Right => g.elems[x.0 as usize].rdesc,
            Side::Left => g.elems[x.0 as usize].ldesc,
        };
        mask & (1 << s) != 0
    }

    /// The full braid class of the canonical word, i.e. all reduced words.
    pub fn reduced_words(&self, x: Element) -> Vec<Word> {
        let w = self.canonical_word(x);
        let mut class = braid_closure(&self.matrix, &w);
        class.sort();
        class
    }

    /// Applies a generator relabeling letterwise and re-canonicalizes.
    /// The permutation must preserve the Coxeter matrix; this is checked
    /// by [`crate::twisted::GraphAutomorphism`], not here.
    pub fn apply_letter_perm(&self, perm: &[u8], x: Element) -> Element {
        let w: Word = self
            .canonical_word(x)
            .iter()
            .map(|&s| perm[s as usize])
            .collect();
        {
            let g = self.reg.read().unwrap();
            if let Some(id) = g.lookup_word(&w) {
                return Element(id);
            }
        }
        let mut g = self.reg.write().unwrap();
        Element(g.intern_reduced(&self.matrix, &w))
    }

    /// Elements of length at most `radius`, sorted by (length, word).
    pub fn ball(&self, radius: u32) -> Result<Ball> {
        self.ball_with_cap(radius, self.ball_cap)
    }

    pub fn ball_with_cap(&self, radius: u32, cap: usize) -> Result<Ball> {
        let mut g = self.reg.write().unwrap();
        let mut layers: Vec<Vec<u32>> = vec![vec![0]];
        let mut seen: HashSet<u32> = HashSet::from([0]);
        let mut complete = false;
        for len in 1..=radius {
            let mut next: Vec<u32> = Vec::new();
            let prev = layers.last().unwrap().clone();
            for x in prev {
                for s in 0..self.rank() as u8 {
                    let z = g.right_mul(&self.matrix, x, s);
                    if g.elems[z as usize].canonical.len() as u32 == len && seen.insert(z) {
                        next.push(z);
                    }
                }
            }
            if next.is_empty() {
                complete = true;
                break;
            }
            if seen.len() > cap {
                return Err(CoxError::Resource(format!(
                    "ball of radius {radius} exceeds cap {cap}"
                )));
            }
            layers.push(next);
        }
        let mut elements: Vec<Element> = seen.iter().map(|&id| Element(id)).collect();
        elements.sort_by(|a, b| {
            let (ga, gb) = (
                &g.elems[a.0 as usize].canonical,
                &g.elems[b.0 as usize].canonical,
            );
            ga.len().cmp(&gb.len()).then_with(|| ga.cmp(gb))
        });
        Ok(Ball {
            index: elements.iter().copied().collect(),
            elements,
            radius,
            complete,
        })
    }

    /// Enumerates the whole group; errors if a cap is hit first.
    pub fn full_group(&self) -> Result<Ball> {
        let mut b = self.ball(MAX_ENUM_LENGTH)?;
        if !b.complete {
            return Err(CoxError::Resource(format!(
                "group enumeration did not close within length {MAX_ENUM_LENGTH}; \
                 infinite or too large"
            )));
        }
        b.complete = true;
        Ok(b)
    }

    /// Longest element of the standard parabolic W_J. Finiteness is
    /// decided by enumeration with a node cap; exceeding the cap reports
    /// an infinite (or too large) parabolic instead of truncating.
    pub fn longest_element(&self, j: &[usize]) -> Result<Element> {
        for &s in j {
            if s >= self.rank() {
                return Err(CoxError::InvalidLetter {
                    letter: s,
                    rank: self.rank(),
                });
            }
        }
        let mut g = self.reg.write().unwrap();
        let mut seen: HashSet<u32> = HashSet::from([0]);
        let mut frontier = vec![0u32];
        let mut best = 0u32;
        let mut depth = 0u32;
        while !frontier.is_empty() {
            depth += 1;
            if depth > MAX_ENUM_LENGTH {
                return Err(CoxError::InfiniteParabolic(j.to_vec()));
            }
            let mut next = Vec::new();
            for x in frontier {
                for &s in j {
                    let z = g.right_mul(&self.matrix, x, s as u8);
                    if seen.insert(z) {
                        if g.elems[z as usize].canonical.len()
                            > g.elems[best as usize].canonical.len()
                        {
                            best = z;
                        }
                        next.push(z);
                    }
                }
            }
            if seen.len() > self.ball_cap {
                return Err(CoxError::InfiniteParabolic(j.to_vec()));
            }
            frontier = next;
        }
        let w0 = best;
        let maxlen = g.elems[w0 as usize].canonical.len();
        let tied = seen
            .iter()
            .filter(|&&x| g.elems[x as usize].canonical.len() == maxlen)
            .count();
        if tied != 1 {
            return Err(CoxError::Internal(format!(
                "parabolic {j:?} has {tied} elements of maximal length"
            )));
        }
        for &s in j {
            if g.elems[w0 as usize].rdesc & (1 << s) == 0 {
                return Err(CoxError::Internal(format!(
                    "w0({j:?}) lacks right descent {s}"
                )));
            }
        }
        Ok(Element(w0))
    }

    pub fn ball_cap(&self) -> usize {
        self.ball_cap
    }

    /// Number of distinct elements interned so far.
    pub fn interned_count(&self) -> usize {
        self.reg.read().unwrap().elems.len()
    }
}

/// A length-ball of elements; `complete` means the whole group.
pub struct Ball {
    pub elements: Vec<Element>,
    pub radius: u32,
    pub complete: bool,
    index: HashSet<Element>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.index.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements.iter().copied()
    }
}

/// All reflections (conjugates of generators) of length within the ball,
/// sorted. For a complete ball this is the full reflection set T.
pub fn reflections(sys: &CoxeterSystem, ball: &Ball) -> Vec<Element> {
    let mut out: HashSet<Element> = HashSet::new();
    for u in ball.iter() {
        if !ball.complete && 2 * sys.length(u) + 1 > ball.radius {
            continue;
        }
        let ui = sys.inverse(u);
        for s in 0..sys.rank() as u8 {
            let us = sys.right_mul(u, s).unwrap();
            let t = sys.multiply(us, ui);
            if ball.complete || sys.length(t) <= ball.radius {
                out.insert(t);
            }
        }
    }
    let mut v: Vec<Element> = out.into_iter().collect();
    v.sort_by_key(|&t| (sys.length(t), sys.canonical_word(t)));
    v
}

/// Minimum number of reflections multiplying to `x`, by breadth-first
/// search over reflection products. The ball must be the whole group or
/// have radius at least 2*length(x).
pub fn absolute_length(sys: &CoxeterSystem, x: Element, ball: &Ball) -> Result<u32> {
    let lx = sys.length(x);
    if !ball.complete && ball.radius < 2 * lx {
        return Err(CoxError::Resource(format!(
            "absolute_length needs a ball of radius >= {}, have {}",
            2 * lx,
            ball.radius
        )));
    }
    if x == sys.identity() {
        return Ok(0);
    }
    let refl: Vec<Element> = reflections(sys, ball)
        .into_iter()
        .filter(|&t| sys.length(t) < 2 * lx.max(1))
        .collect();
    let mut seen: HashSet<Element> = HashSet::from([sys.identity()]);
    let mut frontier = vec![sys.identity()];
    let mut depth = 0u32;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for y in frontier {
            for &t in &refl {
                let z = sys.multiply(y, t);
                if z == x {
                    return Ok(depth);
                }
                if sys.length(z) <= 2 * lx && ball.contains(z) && seen.insert(z) {
                    next.push(z);
                }
            }
        }
        frontier = next;
        if depth > lx {
            break;
        }
    }
    Err(CoxError::Internal(format!(
        "no reflection factorization of {} within depth {}",
        sys.format(x),
        lx
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::perm;

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::new(catalog(name).unwrap())
    }

    #[test]
    fn canonicalize_examples() {
        let a2 = sys("A2");
        let w = a2.element_of_word(&[0, 1, 0]).unwrap();
        assert_eq!(a2.canonical_word(w), vec![0, 1, 0]);
        assert_eq!(a2.element_of_word(&[1, 0, 1]).unwrap(), w);
        assert_eq!(a2.element_of_word(&[0, 0]).unwrap(), a2.identity());
        assert_eq!(a2.element_of_word(&[]).unwrap(), a2.identity());
        // idempotent on canonical words
        assert_eq!(a2.element_of_word(&a2.canonical_word(w)).unwrap(), w);
        assert!(matches!(
            a2.element_of_word(&[7]),
            Err(CoxError::InvalidLetter { .. })
        ));
    }

    #[test]
    fn is_reduced_examples() {
        let a2 = sys("A2");
        assert!(a2.is_reduced(&[0, 1, 0]).unwrap());
        let a1a1 = sys("I2(2)");
        assert!(!a1a1.is_reduced(&[0, 1, 0]).unwrap());
        let a3 = sys("A3");
        assert!(a3.is_reduced(&[0, 1, 2, 0]).unwrap());
    }

    #[test]
    fn multiply_and_invert() {
        let a2 = sys("A2");
        let s1 = a2.generator(0).unwrap();
        assert_eq!(a2.multiply(s1, s1), a2.identity());
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        let s21 = a2.element_of_word(&[1, 0]).unwrap();
        assert_eq!(a2.multiply(s12, s21), a2.identity());
        assert_eq!(a2.inverse(s12), s21);
        assert_eq!(a2.inverse(a2.identity()), a2.identity());
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        assert_eq!(a2.inverse(w0), w0);
        assert_eq!(a2.multiply(s1, s21), w0);
    }

    #[test]
    fn reduced_word_sets() {
        let a2 = sys("A2");
        assert_eq!(a2.reduced_words(a2.identity()), vec![Vec::<u8>::new()]);
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        assert_eq!(a2.reduced_words(w0), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let a3 = sys("A3");
        let w0 = a3.element_of_word(&[0, 1, 0, 2, 1, 0]).unwrap();
        let words = a3.reduced_words(w0);
        assert_eq!(words.len(), 16);
        // all reduced words use the same generator support
        for w in &words {
            let mut support: Vec<u8> = w.clone();
            support.sort_unstable();
            support.dedup();
            assert_eq!(support, vec![0, 1, 2]);
        }
    }

    #[test]
    fn balls_and_completeness() {
        let a2 = sys("A2");
        assert_eq!(a2.ball(0).unwrap().len(), 1);
        let b = a2.ball(3).unwrap();
        assert_eq!(b.len(), 6);
        let aff = sys("affA2");
        let b2 = aff.ball(2).unwrap();
        assert_eq!(b2.len(), 10);
        assert!(!b2.complete);
        assert!(a2.full_group().unwrap().complete);
        assert!(matches!(
            CoxeterSystem::with_ball_cap(catalog("affA2").unwrap(), 50).ball(20),
            Err(CoxError::Resource(_))
        ));
    }

    #[test]
    fn longest_elements() {
        let a2 = sys("A2");
        assert_eq!(a2.longest_element(&[0]).unwrap(), a2.generator(0).unwrap());
        let w0 = a2.longest_element(&[0, 1]).unwrap();
        assert_eq!(a2.canonical_word(w0), vec![0, 1, 0]);
        assert_eq!(a2.multiply(w0, w0), a2.identity());
        let inf = sys("I2(inf)");
        assert!(matches!(
            inf.longest_element(&[0, 1]),
            Err(CoxError::InfiniteParabolic(_))
        ));
        assert_eq!(inf.longest_element(&[]).unwrap(), inf.identity());
    }

    #[test]
    fn descent_sets() {
        let a2 = sys("A2");
        assert!(a2.descents(a2.identity(), Side::Left).is_empty());
        let w0 = a2.element_of_word(&[0, 1, 0]).unwrap();
        assert_eq!(a2.descents(w0, Side::Left), vec![0, 1]);
        assert_eq!(a2.descents(w0, Side::Right), vec![0, 1]);
        let s12 = a2.element_of_word(&[0, 1]).unwrap();
        assert_eq!(a2.descents(s12, Side::Right), vec![1]);
        assert_eq!(a2.descents(s12, Side::Left), vec![0]);
    }

    #[test]
    fn absolute_length_examples() {
        let a3 = sys("A3");
        let ball = a3.full_group().unwrap();
        assert_eq!(absolute_length(&a3, a3.identity(), &ball).unwrap(), 0);
        for t in reflections(&a3, &ball) {
            assert_eq!(absolute_length(&a3, t, &ball).unwrap(), 1);
        }
        let s1s3 = a3.element_of_word(&[0, 2]).unwrap();
        assert_eq!(absolute_length(&a3, s1s3, &ball).unwrap(), 2);
        // S4 has 6 reflections
        assert_eq!(reflections(&a3, &ball).len(), 6);
    }

    #[test]
    fn absolute_length_needs_a_large_enough_ball() {
        let aff = sys("affA2");
        let ball = aff.ball(3).unwrap();
        let w = aff.element_of_word(&[0, 1]).unwrap();
        assert!(matches!(
            absolute_length(&aff, w, &ball),
            Err(CoxError::Resource(_))
        ));
        let ball = aff.ball(4).unwrap();
        assert_eq!(absolute_length(&aff, w, &ball).unwrap(), 2);
    }

    #[test]
    fn deletion_property_on_all_short_words() {
        for name in ["A2", "B2"] {
            let g = sys(name);
            let mut words: Vec<Vec<u8>> = vec![vec![]];
            for _ in 0..5 {
                words = words
                    .iter()
                    .flat_map(|w| {
                        (0..2u8).map(move |s| {
                            let mut v = w.clone();
                            v.push(s);
                            v
                        })
                    })
                    .collect();
            }
            for w in words {
                if g.is_reduced(&w).unwrap() {
                    continue;
                }
                let target = g.element_of_word(&w).unwrap();
                let mut witnessed = false;
                'outer: for i in 0..w.len() {
                    for j in (i + 1)..w.len() {
                        let shorter: Vec<u8> = w
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, &s)| s)
                            .collect();
                        if g.element_of_word(&shorter).unwrap() == target {
                            witnessed = true;
                            break 'outer;
                        }
                    }
                }
                assert!(witnessed, "{name}: deletion property failed on {w:?}");
            }
        }
    }

    #[test]
    fn exchange_property_on_a3() {
        let a3 = sys("A3");
        let all = a3.full_group().unwrap();
        for w in all.iter() {
            let word = a3.canonical_word(w);
            for s in a3.descents(w, Side::Right) {
                let ws = a3.right_mul(w, s).unwrap();
                let witnessed = (0..word.len()).any(|i| {
                    let shorter: Vec<u8> = word
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i)
                        .map(|(_, &t)| t)
                        .collect();
                    a3.element_of_word(&shorter).unwrap() == ws
                });
                assert!(witnessed, "exchange failed at {} s{}", a3.format(w), s + 1);
            }
        }
    }

    #[test]
    fn strong_exchange_spot_check_on_a3() {
        let a3 = sys("A3");
        let ball = a3.full_group().unwrap();
        let refl = reflections(&a3, &ball);
        for w in ball.iter() {
            for &t in &refl {
                let wt = a3.multiply(w, t);
                if a3.length(wt) >= a3.length(w) {
                    continue;
                }
                for word in a3.reduced_words(w) {
                    let witnessed = (0..word.len()).any(|i| {
                        let shorter: Vec<u8> = word
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i)
                            .map(|(_, &s)| s)
                            .collect();
                        a3.element_of_word(&shorter).unwrap() == wt
                    });
                    assert!(witnessed, "strong exchange failed");
                }
            }
        }
    }

    #[test]
    fn permutation_model_agreement_on_a4() {
        let a4 = sys("A4");
        let all = a4.full_group().unwrap();
        assert_eq!(all.len(), 120);
        for w in all.iter() {
            let p = perm::from_word(5, &a4.canonical_word(w));
            assert_eq!(a4.length(w), perm::inversions(&p));
            assert_eq!(
                perm::from_word(5, &a4.canonical_word(a4.inverse(w))),
                perm::invert(&p)
            );
            assert_eq!(a4.descents(w, Side::Right), perm::right_descents(&p));
            assert_eq!(a4.descents(w, Side::Left), perm::left_descents(&p));
        }
        // products agree on a layer of pairs
        let shorts: Vec<Element> = all.iter().filter(|&x| a4.length(x) <= 3).collect();
        for &x in &shorts {
            let px = perm::from_word(5, &a4.canonical_word(x));
            for &y in &shorts {
                let py = perm::from_word(5, &a4.canonical_word(y));
                let lhs = perm::from_word(5, &a4.canonical_word(a4.multiply(x, y)));
                assert_eq!(lhs, perm::compose(&px, &py));
            }
        }
    }

    #[test]
    fn product_length_bounds() {
        let b2 = sys("B2");
        let all = b2.full_group().unwrap();
        for x in all.iter() {
            for y in all.iter() {
                let xy = b2.multiply(x, y);
                let (lx, ly, lxy) = (b2.length(x), b2.length(y), b2.length(xy));
                assert!(lxy <= lx + ly);
                assert_eq!(lxy % 2, (lx + ly) % 2);
            }
        }
    }
}
