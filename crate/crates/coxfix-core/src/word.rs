//! Words in the generators and braid-move rewriting.

use std::collections::HashSet;

use crate::error::{CoxError, Result};
use crate::matrix::{Bond, CoxeterMatrix};

/// A word is a sequence of 0-based generator indices.
pub type Word = Vec<u8>;

pub fn validate_word(matrix: &CoxeterMatrix, word: &[u8]) -> Result<()> {
    for &s in word {
        if s as usize >= matrix.rank() {
            return Err(CoxError::InvalidLetter {
                letter: s as usize,
                rank: matrix.rank(),
            });
        }
    }
    Ok(())
}

/// Renders a word as hyphen-joined 1-based indices, `e` for the empty word.
pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|&s| (s as usize + 1).to_string())
        .collect::<Vec<_>>()
        .join("-")
}

/// Parses the `format_word` rendering.
pub fn parse_word(text: &str) -> Result<Word> {
    if text == "e" {
        return Ok(Vec::new());
    }
    text.split('-')
        .map(|t| {
            let v: usize = t.parse().map_err(|_| CoxError::Parse {
                line: 0,
                msg: format!("bad letter `{t}`"),
            })?;
            if v == 0 || v > 255 {
                return Err(CoxError::Parse {
                    line: 0,
                    msg: format!("letter {v} out of range"),
                });
            }
            Ok((v - 1) as u8)
        })
        .collect()
}

/// Compact key for short words over small ranks: 4 bits per letter,
/// length in the top byte. Covers the hot path; longer words fall back
/// to boxed slices.
pub const PACK_MAX_LEN: usize = 28;
pub const PACK_MAX_RANK: usize = 16;

pub fn pack_word(word: &[u8]) -> Option<u128> {
    if word.len() > PACK_MAX_LEN {
        return None;
    }
    let mut k: u128 = (word.len() as u128) << 120;
    for (i, &s) in word.iter().enumerate() {
        debug_assert!((s as usize) < PACK_MAX_RANK);
        k |= (s as u128 + 1) << (4 * i);
    }
    Some(k)
}

/// Applies every braid move available at some position of `word`,
/// invoking `emit` with each rewritten word.
fn for_each_braid_move(matrix: &CoxeterMatrix, word: &[u8], mut emit: impl FnMut(Word)) {
    let len = word.len();
    for p in 0..len.saturating_sub(1) {
        let (a, b) = (word[p], word[p + 1]);
        if a == b {
            continue;
        }
        let m = match matrix.bond(a as usize, b as usize) {
            Bond::Finite(m) => m as usize,
            Bond::Infinite => continue,
        };
        if p + m > len {
            continue;
        }
        let alternating = (0..m).all(|i| word[p + i] == if i % 2 == 0 { a } else { b });
        if !alternating {
            continue;
        }
        let mut w = word.to_vec();
        for i in 0..m {
            w[p + i] = if i % 2 == 0 { b } else { a };
        }
        emit(w);
    }
}

/// All words reachable from a reduced word by braid moves. By Tits'
/// theorem this is exactly the set of reduced words of the element.
/// The caller must pass a reduced word.
pub fn braid_closure(matrix: &CoxeterMatrix, word: &[u8]) -> Vec<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: Vec<Word> = vec![word.to_vec()];
    seen.insert(word.to_vec());
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head].clone();
        head += 1;
        for_each_braid_move(matrix, &w, |v| {
            debug_assert!(!has_adjacent_equal(&v), "closure of a non-reduced word");
            if seen.insert(v.clone()) {
                queue.push(v);
            }
        });
    }
    queue
}

pub fn has_adjacent_equal(word: &[u8]) -> bool {
    word.windows(2).any(|w| w[0] == w[1])
}

/// Independent depth-first enumeration of a braid class, used to
/// cross-check the BFS closure in tests.
pub fn braid_closure_dfs(matrix: &CoxeterMatrix, word: &[u8]) -> HashSet<Word> {
    fn go(matrix: &CoxeterMatrix, w: &[u8], seen: &mut HashSet<Word>) {
        let mut nexts = Vec::new();
        for_each_braid_move(matrix, w, |v| nexts.push(v));
        for v in nexts {
            if seen.insert(v.clone()) {
                go(matrix, &v, seen);
            }
        }
    }
    let mut seen = HashSet::new();
    seen.insert(word.to_vec());
    go(matrix, word, &mut seen);
    seen
}
