//! Built-in Coxeter types and their standard data.
//!
//! Diagram numbering is fixed so that `perm=` automorphism specs are
//! unambiguous:
//!
//! * `A<n>`    — path 1-2-...-n, all bonds 3.
//! * `B<n>`    — path 1-2-...-n with the 4-bond between 1 and 2.
//! * `D<n>`    — path 1-2-...-(n-1); node n attached to node n-2
//!   (branch node n-2; short legs n-1 and n).
//! * `E6`      — path 1-2-3-4-5; node 6 attached to node 3.
//! * `F4`      — path 1-2-3-4 with the 4-bond between 2 and 3.
//! * `H3`,`H4` — path with the 5-bond between 1 and 2.
//! * `I2(m)`   — two generators, bond m; `I2(inf)` for the infinite dihedral.
//! * `affA<n>` — affine A: cycle 1-2-...-(n+1)-1, all bonds 3 (rank n+1).

use crate::error::{CoxError, Result};
use crate::matrix::{Bond, CoxeterMatrix};

pub fn catalog(name: &str) -> Result<CoxeterMatrix> {
    let unknown = || CoxError::UnknownCatalog(name.to_string());
    if let Some(rest) = name.strip_prefix("affA") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n < 1 {
            return Err(unknown());
        }
        if n == 1 {
            // the affine A1 "cycle" degenerates to a single infinite bond
            return CoxeterMatrix::from_fn(2, |_, _| Bond::Infinite);
        }
        let rank = n + 1;
        return CoxeterMatrix::from_fn(rank, |i, j| {
            if j == i + 1 || (i == 0 && j == rank - 1) {
                Bond::Finite(3)
            } else {
                Bond::Finite(2)
            }
        });
    }
    if let Some(rest) = name.strip_prefix("I2(") {
        let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
        let bond = if inner == "inf" {
            Bond::Infinite
        } else {
            let m: u32 = inner.parse().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            Bond::Finite(m)
        };
        return CoxeterMatrix::from_fn(2, |_, _| bond);
    }
    match name.split_at(1) {
        ("A", n) if n.parse::<usize>().is_ok() => {
            let n: usize = n.parse().unwrap();
            if n < 1 {
                return Err(unknown());
            }
            CoxeterMatrix::from_fn(n, |i, j| Bond::Finite(if j == i + 1 { 3 } else { 2 }))
        }
        ("B", n) if n.parse::<usize>().is_ok() => {
            let n: usize = n.parse().unwrap();
            if n < 2 {
                return Err(unknown());
            }
            CoxeterMatrix::from_fn(n, |i, j| {
                Bond::Finite(match (i, j) {
                    (0, 1) => 4,
                    _ if j == i + 1 => 3,
                    _ => 2,
                })
            })
        }
        ("D", n) if n.parse::<usize>().is_ok() => {
            let n: usize = n.parse().unwrap();
            if n < 4 {
                return Err(unknown());
            }
            CoxeterMatrix::from_fn(n, |i, j| {
                let adjacent = (j == i + 1 && j < n - 1) || (i == n - 3 && j == n - 1);
                Bond::Finite(if adjacent { 3 } else { 2 })
            })
        }
        ("E", "6") => CoxeterMatrix::from_fn(6, |i, j| {
            let adjacent = (j == i + 1 && j <= 4) || (i == 2 && j == 5);
            Bond::Finite(if adjacent { 3 } else { 2 })
        }),
        ("F", "4") => CoxeterMatrix::from_fn(4, |i, j| {
            Bond::Finite(match (i, j) {
                (1, 2) => 4,
                _ if j == i + 1 => 3,
                _ => 2,
            })
        }),
        ("H", "3") | ("H", "4") => {
            let n = if name == "H3" { 3 } else { 4 };
            CoxeterMatrix::from_fn(n, |i, j| {
                Bond::Finite(match (i, j) {
                    (0, 1) => 5,
                    _ if j == i + 1 => 3,
                    _ => 2,
                })
            })
        }
        _ => Err(unknown()),
    }
}

/// One-line descriptions for `coxfix catalog`.
pub fn catalog_listing() -> Vec<(&'static str, &'static str)> {
    vec![
        ("A<n>", "path 1-2-...-n, all bonds 3"),
        ("B<n>", "path 1-2-...-n, 4-bond between 1 and 2"),
        ("D<n>", "path 1-2-...-(n-1), node n attached to node n-2"),
        ("E6", "path 1-2-3-4-5, node 6 attached to node 3"),
        ("F4", "path 1-2-3-4, 4-bond between 2 and 3"),
        ("H3", "path 1-2-3, 5-bond between 1 and 2"),
        ("H4", "path 1-2-3-4, 5-bond between 1 and 2"),
        (
            "I2(<m>)",
            "dihedral, bond m; I2(inf) for the infinite dihedral",
        ),
        ("affA<n>", "affine A: cycle 1-2-...-(n+1), all bonds 3"),
    ]
}

/// Finite irreducible types supported by the exponent catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleType {
    pub fn name(&self) -> String {
        match self {
            IrreducibleType::A(n) => format!("A{n}"),
            IrreducibleType::B(n) => format!("B{n}"),
            IrreducibleType::D(n) => format!("D{n}"),
            IrreducibleType::E6 => "E6".into(),
            IrreducibleType::E7 => "E7".into(),
            IrreducibleType::E8 => "E8".into(),
            IrreducibleType::F4 => "F4".into(),
            IrreducibleType::H3 => "H3".into(),
            IrreducibleType::H4 => "H4".into(),
            IrreducibleType::I2(m) => format!("I2({m})"),
        }
    }

    /// Standard exponent multiset, sorted ascending.
    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = match self {
            IrreducibleType::A(n) => (1..=*n as u32).collect(),
            IrreducibleType::B(n) => (0..*n as u32).map(|i| 2 * i + 1).collect(),
            IrreducibleType::D(n) => {
                let mut v: Vec<u32> = (0..(*n as u32) - 1).map(|i| 2 * i + 1).collect();
                v.push(*n as u32 - 1);
                v
            }
            IrreducibleType::E6 => vec![1, 4, 5, 7, 8, 11],
            IrreducibleType::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            IrreducibleType::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            IrreducibleType::F4 => vec![1, 5, 7, 11],
            IrreducibleType::H3 => vec![1, 5, 9],
            IrreducibleType::H4 => vec![1, 11, 19, 29],
            IrreducibleType::I2(m) => vec![1, m - 1],
        };
        e.sort_unstable();
        e
    }

    pub fn matrix(&self) -> CoxeterMatrix {
        match self {
            IrreducibleType::E7 | IrreducibleType::E8 => {
                let n = if *self == IrreducibleType::E7 { 7 } else { 8 };
                CoxeterMatrix::from_fn(n, |i, j| {
                    let adjacent = (j == i + 1 && j <= n - 2) || (i == 2 && j == n - 1);
                    Bond::Finite(if adjacent { 3 } else { 2 })
                })
                .unwrap()
            }
            other => catalog(&other.name()).unwrap(),
        }
    }
}

/// All supported finite irreducible types whose exponent multiset equals
/// `exps`. Each abstract isomorphism class is listed once, so the low
/// dihedral coincidences I2(3)=A2, I2(4)=B2 and I2(6)=G2 appear under
/// their A/B names and as `I2(6)` respectively.
pub fn types_with_exponents(exps: &[u32]) -> Vec<IrreducibleType> {
    let mut sorted = exps.to_vec();
    sorted.sort_unstable();
    let rank = sorted.len();
    let mut candidates: Vec<IrreducibleType> = Vec::new();
    if rank >= 1 {
        candidates.push(IrreducibleType::A(rank));
    }
    if rank >= 2 {
        candidates.push(IrreducibleType::B(rank));
    }
    if rank >= 4 {
        candidates.push(IrreducibleType::D(rank));
    }
    match rank {
        2 => {
            // I2(m) for m >= 5; m = 3, 4 coincide with A2, B2 above
            if let &[1, m1] = sorted.as_slice() {
                if m1 + 1 >= 5 && m1 + 1 != 3 && m1 + 1 != 4 {
                    candidates.push(IrreducibleType::I2(m1 + 1));
                }
            }
        }
        3 => candidates.push(IrreducibleType::H3),
        4 => {
            candidates.push(IrreducibleType::F4);
            candidates.push(IrreducibleType::H4);
        }
        6 => candidates.push(IrreducibleType::E6),
        7 => candidates.push(IrreducibleType::E7),
        8 => candidates.push(IrreducibleType::E8),
        _ => {}
    }
    candidates.retain(|t| t.exponents() == sorted);
    candidates
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_matrix_per_numbering() {
        let m = catalog("B3").unwrap();
        assert_eq!(m.bond(0, 1), Bond::Finite(4));
        assert_eq!(m.bond(1, 2), Bond::Finite(3));
        assert_eq!(m.bond(0, 2), Bond::Finite(2));
    }

    #[test]
    fn dihedral_and_affine() {
        assert_eq!(catalog("I2(7)").unwrap().bond(0, 1), Bond::Finite(7));
        assert_eq!(catalog("I2(inf)").unwrap().bond(0, 1), Bond::Infinite);
        let aff = catalog("affA2").unwrap();
        assert_eq!(aff.rank(), 3);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(aff.bond(i, j), Bond::Finite(3));
                }
            }
        }
    }

    #[test]
    fn d4_has_central_node() {
        let m = catalog("D4").unwrap();
        // chain 1-2-3 with 4 attached to 2 (0-based: center is 1)
        for outer in [0, 2, 3] {
            assert_eq!(m.bond(outer, 1), Bond::Finite(3));
        }
        assert_eq!(m.bond(0, 2), Bond::Finite(2));
        assert_eq!(m.bond(0, 3), Bond::Finite(2));
        assert_eq!(m.bond(2, 3), Bond::Finite(2));
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(catalog("Z9").is_err());
        assert!(catalog("D3").is_err());
        assert!(catalog("I2(1)").is_err());
    }

    #[test]
    fn exponent_lookup_is_unambiguous_on_used_cases() {
        assert_eq!(types_with_exponents(&[1, 3]), vec![IrreducibleType::B(2)]);
        assert_eq!(types_with_exponents(&[1]), vec![IrreducibleType::A(1)]);
        assert_eq!(
            types_with_exponents(&[1, 3, 5]),
            vec![IrreducibleType::B(3)]
        );
        assert_eq!(types_with_exponents(&[1, 5]), vec![IrreducibleType::I2(6)]);
        assert_eq!(types_with_exponents(&[1, 5, 9]), vec![IrreducibleType::H3]);
        assert_eq!(
            types_with_exponents(&[1, 3, 3, 5]),
            vec![IrreducibleType::D(4)]
        );
    }
}
