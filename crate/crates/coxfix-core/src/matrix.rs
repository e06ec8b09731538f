//! Coxeter matrices: bond orders m(s,t) with `inf` entries allowed.

use std::fmt;

use crate::error::{CoxError, Result};

/// Largest rank the engine accepts. Words are packed 4 bits per letter in
/// hot paths, so ranks above 16 take a slower fallback; 32 is the hard cap
/// because descent sets live in a `u32`.
pub const MAX_RANK: usize = 32;

/// Order of the product of two distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix of bond orders; diagonal 1, off-diagonal >= 2 or `inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    bonds: Vec<Bond>,
}

impl CoxeterMatrix {
    /// Builds and validates a matrix from row-major entries.
    pub fn new(rank: usize, entries: Vec<Bond>) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(CoxError::Precondition(format!(
                "rank must be in 1..={MAX_RANK}, got {rank}"
            )));
        }
        if entries.len() != rank * rank {
            return Err(CoxError::Precondition(format!(
                "expected {} entries, got {}",
                rank * rank,
                entries.len()
            )));
        }
        let m = CoxeterMatrix {
            rank,
            bonds: entries,
        };
        for i in 0..rank {
            if m.bond(i, i) != Bond::Finite(1) {
                return Err(CoxError::Precondition(format!("m[{i}][{i}] must be 1")));
            }
            for j in 0..rank {
                if i != j {
                    if m.bond(i, j) != m.bond(j, i) {
                        return Err(CoxError::Precondition(format!(
                            "asymmetric entry at ({i},{j})"
                        )));
                    }
                    if let Bond::Finite(v) = m.bond(i, j) {
                        if v < 2 {
                            return Err(CoxError::Precondition(format!(
                                "off-diagonal m[{i}][{j}] = {v} < 2"
                            )));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from a closure giving the upper triangle (i < j).
    pub fn from_fn(rank: usize, f: impl Fn(usize, usize) -> Bond) -> Result<Self> {
        let mut entries = vec![Bond::Finite(1); rank * rank];
        for i in 0..rank {
            for j in (i + 1)..rank {
                let b = f(i, j);
                entries[i * rank + j] = b;
                entries[j * rank + i] = b;
            }
        }
        Self::new(rank, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.bonds[i * self.rank + j]
    }

    /// Parses the text format: line 1 `rank n`, then n rows of n entries,
    /// `inf` for an infinite bond.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (lineno, header) = lines.next().ok_or_else(|| CoxError::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let mut parts = header.split_whitespace();
        let (kw, n) = (parts.next(), parts.next());
        if kw != Some("rank") {
            return Err(CoxError::Parse {
                line: lineno + 1,
                msg: "expected `rank n` header".into(),
            });
        }
        let rank: usize = n
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| CoxError::Parse {
                line: lineno + 1,
                msg: "bad rank value".into(),
            })?;
        let mut entries = Vec::with_capacity(rank * rank);
        let mut rows = 0;
        for (lineno, line) in lines {
            let mut row = Vec::with_capacity(rank);
            for tok in line.split_whitespace() {
                let b = if tok == "inf" {
                    Bond::Infinite
                } else {
                    Bond::Finite(tok.parse().map_err(|_| CoxError::Parse {
                        line: lineno + 1,
                        msg: format!("bad entry `{tok}`"),
                    })?)
                };
                row.push(b);
            }
            if row.len() != rank {
                return Err(CoxError::Parse {
                    line: lineno + 1,
                    msg: format!("expected {rank} entries, got {}", row.len()),
                });
            }
            entries.extend(row);
            rows += 1;
        }
        if rows != rank {
            return Err(CoxError::Parse {
                line: 0,
                msg: format!("expected {rank} rows, got {rows}"),
            });
        }
        Self::new(rank, entries).map_err(|e| CoxError::Parse {
            line: 0,
            msg: e.to_string(),
        })
    }

    /// Renders the text format accepted by [`CoxeterMatrix::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank)
                .map(|j| self.bond(i, j).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Lexicographically least row-major form over simultaneous row/column
    /// permutations. Two matrices describe the same labelled-graph-iso class
    /// iff their canonical forms are equal.
    pub fn canonical_form(&self) -> CoxeterMatrix {
        fn key(b: Bond) -> u64 {
            match b {
                Bond::Finite(m) => m as u64,
                Bond::Infinite => u64::MAX,
            }
        }
        let n = self.rank;
        let mut best: Option<Vec<Bond>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let cand: Vec<Bond> = (0..n * n)
                .map(|k| self.bond(perm[k / n], perm[k % n]))
                .collect();
            let better = match &best {
                None => true,
                Some(b) => cand.iter().map(|&x| key(x)).lt(b.iter().map(|&x| key(x))),
            };
            if better {
                best = Some(cand);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        CoxeterMatrix {
            rank: n,
            bonds: best.unwrap(),
        }
    }

    pub fn is_isomorphic(&self, other: &CoxeterMatrix) -> bool {
        self.rank == other.rank && self.canonical_form() == other.canonical_form()
    }

    /// Restriction to a generator subset, reindexed in the given order.
    pub fn submatrix(&self, subset: &[usize]) -> Result<CoxeterMatrix> {
        Self::from_fn(subset.len(), |i, j| self.bond(subset[i], subset[j]))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let text = "rank 2\n1 3\n3 1\n";
        let m = CoxeterMatrix::parse(text).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bond(0, 1), Bond::Finite(3));
        assert_eq!(m.to_text(), text);
    }

    #[test]
    fn parse_inf_entry() {
        let m = CoxeterMatrix::parse("rank 2\n1 inf\ninf 1\n").unwrap();
        assert_eq!(m.bond(0, 1), Bond::Infinite);
    }

    #[test]
    fn parse_rejects_bad_diagonal() {
        let err = CoxeterMatrix::parse("rank 2\n2 3\n3 1\n").unwrap_err();
        assert!(matches!(err, CoxError::Parse { .. }), "{err}");
    }

    #[test]
    fn parse_rejects_asymmetry() {
        assert!(CoxeterMatrix::parse("rank 2\n1 3\n4 1\n").is_err());
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = CoxeterMatrix::parse("rank 2\n1 3\n3 x\n").unwrap_err();
        match err {
            CoxError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn canonical_form_detects_relabeling() {
        // B3 with the 4-bond at (0,1) vs at (1,2).
        let a = CoxeterMatrix::from_fn(3, |i, j| {
            Bond::Finite(match (i, j) {
                (0, 1) => 4,
                (1, 2) => 3,
                _ => 2,
            })
        })
        .unwrap();
        let b = CoxeterMatrix::from_fn(3, |i, j| {
            Bond::Finite(match (i, j) {
                (0, 1) => 3,
                (1, 2) => 4,
                _ => 2,
            })
        })
        .unwrap();
        assert!(a.is_isomorphic(&b));
        assert_ne!(a, b);
        let c =
            CoxeterMatrix::from_fn(3, |i, j| Bond::Finite(if j == i + 1 { 3 } else { 2 })).unwrap();
        assert!(!a.is_isomorphic(&c));
    }
}
