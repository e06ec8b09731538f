//! Twisted involutions, twisted identities, the twisted absolute length
//! and the verification sweeps for their structural lemmas.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{CoxError, Result};
use crate::orders::{bruhat_leq, build_interval, is_graded, GradedOutcome, Interval};
use crate::system::{Ball, CoxeterSystem, Element};

/// A relabeling of the generators that preserves the Coxeter matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAutomorphism {
    perm: Vec<u8>,
}

impl GraphAutomorphism {
    pub fn new(sys_matrix: &crate::matrix::CoxeterMatrix, perm: Vec<u8>) -> Result<Self> {
        let rank = sys_matrix.rank();
        if perm.len() != rank {
            return Err(CoxError::Precondition(format!(
                "permutation has {} entries, rank is {rank}",
                perm.len()
            )));
        }
        let mut seen = vec![false; rank];
        for &p in &perm {
            if p as usize >= rank || seen[p as usize] {
                return Err(CoxError::Precondition("not a permutation".into()));
            }
            seen[p as usize] = true;
        }
        for i in 0..rank {
            for j in 0..rank {
                if sys_matrix.bond(perm[i] as usize, perm[j] as usize) != sys_matrix.bond(i, j) {
                    return Err(CoxError::Precondition(format!(
                        "permutation does not preserve the Coxeter matrix at ({i},{j})"
                    )));
                }
            }
        }
        Ok(GraphAutomorphism { perm })
    }

    pub fn identity(rank: usize) -> Self {
        GraphAutomorphism {
            perm: (0..rank as u8).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_involution(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &p)| self.perm[p as usize] as usize == i)
    }

    pub fn apply_gen(&self, s: u8) -> u8 {
        self.perm[s as usize]
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    /// self after other.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: other.perm.iter().map(|&s| self.perm[s as usize]).collect(),
        }
    }
}

/// Image of an element under the induced group automorphism.
pub fn apply_auto(sys: &CoxeterSystem, theta: &GraphAutomorphism, x: Element) -> Element {
    sys.apply_letter_perm(theta.perm(), x)
}

/// Twisted involutions within the ball: w with theta(w) = w^-1.
pub fn twisted_involutions(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
) -> Vec<Element> {
    ball.iter()
        .filter(|&w| apply_auto(sys, theta, w) == sys.inverse(w))
        .collect()
}

/// Twisted identities materialized within a radius. Membership queries
/// outside the radius are unsound, so the radius is carried along and
/// checked by consumers. Carries a memo of twisted absolute lengths.
pub struct TwistedIdentities {
    pub set: HashSet<Element>,
    /// u32::MAX when the ball was the whole group
    pub radius: u32,
    cache: std::sync::RwLock<std::collections::HashMap<Element, u32>>,
}

/// Sweeping w over the ball is complete within the radius: every
/// twisted identity of length 2k factors through a witness of length k
/// (the halving lemma, verified separately by `verify_halving_lemma`).
pub fn twisted_identities(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
) -> TwistedIdentities {
    let mut set = HashSet::new();
    for w in ball.iter() {
        let x = sys.multiply(w, apply_auto(sys, theta, sys.inverse(w)));
        if ball.complete || sys.length(x) <= ball.radius {
            set.insert(x);
        }
    }
    TwistedIdentities {
        set,
        radius: if ball.complete { u32::MAX } else { ball.radius },
        cache: Default::default(),
    }
}

/// Minimum number of letters to delete from `word` so that the product
/// of the remainder is a twisted identity. The remainder need not be
/// reduced.
fn deletion_minimum(sys: &CoxeterSystem, word: &[u8], iota: &TwistedIdentities) -> u32 {
    let k = word.len();
    for l in 0..=k {
        for deleted in (0..k).combinations(l) {
            let mut remainder: Vec<u8> = Vec::with_capacity(k - l);
            let mut di = deleted.iter().peekable();
            for (i, &s) in word.iter().enumerate() {
                if di.peek() == Some(&&i) {
                    di.next();
                } else {
                    remainder.push(s);
                }
            }
            let product = sys.element_of_word(&remainder).unwrap();
            if iota.set.contains(&product) {
                return l as u32;
            }
        }
    }
    unreachable!("the empty remainder is always a twisted identity")
}

/// Twisted absolute length of `w`, computed on the canonical reduced
/// word (the value is word-independent; see `verify_welldefined_ltheta`).
pub fn twisted_absolute_length(
    sys: &CoxeterSystem,
    w: Element,
    iota: &TwistedIdentities,
) -> Result<u32> {
    if sys.length(w) > iota.radius {
        return Err(CoxError::Resource(format!(
            "twisted identities materialized to radius {}, element has length {}",
            iota.radius,
            sys.length(w)
        )));
    }
    if let Some(&l) = iota.cache.read().unwrap().get(&w) {
        return Ok(l);
    }
    let l = deletion_minimum(sys, &sys.canonical_word(w), iota);
    iota.cache.write().unwrap().insert(w, l);
    Ok(l)
}

/// Outcome of one verification sweep.
#[derive(Debug, Clone)]
pub struct Verification {
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Verification {
    fn pass(checked: usize) -> Self {
        Verification {
            pass: true,
            checked,
            witness: None,
        }
    }

    fn fail(checked: usize, witness: String) -> Self {
        Verification {
            pass: false,
            checked,
            witness: Some(witness),
        }
    }
}

/// Checks that the deletion minimum agrees across every reduced word of
/// `w`.
pub fn verify_welldefined_ltheta(
    sys: &CoxeterSystem,
    w: Element,
    iota: &TwistedIdentities,
) -> Result<Verification> {
    let reference = twisted_absolute_length(sys, w, iota)?;
    let words = sys.reduced_words(w);
    let checked = words.len();
    for word in words {
        let l = deletion_minimum(sys, &word, iota);
        if l != reference {
            return Ok(Verification::fail(
                checked,
                format!(
                    "word {} gives {l}, canonical gives {reference}",
                    crate::word::format_word(&word)
                ),
            ));
        }
    }
    Ok(Verification::pass(checked))
}

/// Rotation closure: for every twisted identity with reduced word
/// s1...sk, the element s2...sk theta(s1) is again a twisted identity.
pub fn verify_rotation_lemma(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
) -> Result<Verification> {
    let iota = twisted_identities(sys, theta, ball);
    let mut members: Vec<Element> = iota.set.iter().copied().collect();
    members.sort_by_key(|&x| (sys.length(x), sys.canonical_word(x)));
    let mut checked = 0;
    for u in members {
        for word in sys.reduced_words(u) {
            if word.is_empty() {
                continue;
            }
            let mut rotated: Vec<u8> = word[1..].to_vec();
            rotated.push(theta.apply_gen(word[0]));
            let x = sys.element_of_word(&rotated).unwrap();
            checked += 1;
            if !iota.set.contains(&x) {
                return Ok(Verification::fail(
                    checked,
                    format!(
                        "rotation of {} leaves iota at {}",
                        crate::word::format_word(&word),
                        sys.format(x)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass(checked))
}

/// Halving: every twisted identity w factors as x theta(x^-1) with
/// length(w) = 2 length(x); found by search over the half-length layer.
pub fn verify_halving_lemma(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
) -> Result<Verification> {
    let iota = twisted_identities(sys, theta, ball);
    let mut members: Vec<Element> = iota.set.iter().copied().collect();
    members.sort_by_key(|&x| (sys.length(x), sys.canonical_word(x)));
    let mut checked = 0;
    for w in members {
        checked += 1;
        let lw = sys.length(w);
        if !lw.is_multiple_of(2) {
            return Ok(Verification::fail(
                checked,
                format!("twisted identity {} has odd length", sys.format(w)),
            ));
        }
        let found = ball.iter().any(|x| {
            sys.length(x) == lw / 2 && sys.multiply(x, apply_auto(sys, theta, sys.inverse(x))) == w
        });
        if !found {
            return Ok(Verification::fail(
                checked,
                format!("no halving witness for {}", sys.format(w)),
            ));
        }
    }
    Ok(Verification::pass(checked))
}

/// For every twisted involution with a reduced word s1...s_{k-1} theta(s1),
/// the middle s2...s_{k-1} has the same twisted absolute length.
pub fn verify_length_lemma(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
) -> Result<Verification> {
    let iota = twisted_identities(sys, theta, ball);
    let mut checked = 0;
    for w in twisted_involutions(sys, theta, ball) {
        let lt_w = twisted_absolute_length(sys, w, &iota)?;
        for word in sys.reduced_words(w) {
            let k = word.len();
            if k < 2 || word[k - 1] != theta.apply_gen(word[0]) {
                continue;
            }
            let v = sys.element_of_word(&word[1..k - 1]).unwrap();
            let lt_v = twisted_absolute_length(sys, v, &iota)?;
            checked += 1;
            if lt_v != lt_w {
                return Ok(Verification::fail(
                    checked,
                    format!(
                        "ltheta({}) = {lt_v} but ltheta({}) = {lt_w}",
                        sys.format(v),
                        sys.format(w)
                    ),
                ));
            }
        }
    }
    Ok(Verification::pass(checked))
}

/// Interval of Br(I(theta)): twisted involutions between u and v with the
/// restricted Bruhat order.
pub fn build_twisted_bruhat(
    sys: &CoxeterSystem,
    theta: &GraphAutomorphism,
    ball: &Ball,
    u: Element,
    v: Element,
) -> Result<Interval> {
    for x in [u, v] {
        if apply_auto(sys, theta, x) != sys.inverse(x) {
            return Err(CoxError::Precondition(format!(
                "{} is not a twisted involution",
                sys.format(x)
            )));
        }
    }
    let members = twisted_involutions(sys, theta, ball);
    build_interval(&members, |a, b| bruhat_leq(sys, a, b), u, v)
}

/// Rank formula: poset rank equals (length + twisted absolute length)/2
/// offset from the interval bottom.
pub fn verify_rank_theorem(
    sys: &CoxeterSystem,
    interval: &Interval,
    iota: &TwistedIdentities,
) -> Result<Verification> {
    let ranks = match is_graded(interval) {
        GradedOutcome::Graded(r) => r,
        GradedOutcome::NotGraded {
            short_chain,
            long_chain,
        } => {
            return Ok(Verification::fail(
                0,
                format!(
                    "not graded: chains of lengths {} and {}",
                    short_chain.len() - 1,
                    long_chain.len() - 1
                ),
            ))
        }
    };
    let bottom = interval.poset.key(interval.bottom);
    let base = sys.length(bottom) + twisted_absolute_length(sys, bottom, iota)?;
    let mut checked = 0;
    for (i, &rank) in ranks.iter().enumerate() {
        let w = interval.poset.key(i);
        let value = sys.length(w) + twisted_absolute_length(sys, w, iota)?;
        checked += 1;
        if 2 * rank != value - base {
            return Ok(Verification::fail(
                checked,
                format!(
                    "rank({}) = {} but (l + ltheta)/2 offset = {}",
                    sys.format(w),
                    rank,
                    (value - base) as f64 / 2.0
                ),
            ));
        }
    }
    Ok(Verification::pass(checked))
}

/// Every given twisted Bruhat interval is Gorenstein* over GF(2):
/// graded, Eulerian, and top-dimensional sphere in every subinterval.
pub fn verify_gorenstein_theorem(
    sys: &CoxeterSystem,
    intervals: &[Interval],
    face_cap: usize,
) -> Result<Verification> {
    use crate::orders::is_eulerian;
    use crate::topology::is_gorenstein_star_z2;
    let mut checked = 0;
    for iv in intervals {
        checked += 1;
        let gor = is_gorenstein_star_z2(iv, face_cap)?;
        if !gor.pass {
            return Ok(Verification::fail(
                checked,
                format!(
                    "[{}, {}]: {}",
                    sys.format(iv.poset.key(iv.bottom)),
                    sys.format(iv.poset.key(iv.top)),
                    gor.reason.unwrap_or_default()
                ),
            ));
        }
        if !is_eulerian(iv)? {
            return Ok(Verification::fail(
                checked,
                format!(
                    "[{}, {}] is not Eulerian",
                    sys.format(iv.poset.key(iv.bottom)),
                    sys.format(iv.poset.key(iv.top))
                ),
            ));
        }
    }
    Ok(Verification::pass(checked))
}
