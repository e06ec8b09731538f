//! Property tests for the word engine and the homology kernel.

use proptest::prelude::*;

use coxfix_core::catalog::catalog;
use coxfix_core::orders::{bruhat_leq, weak_leq, Poset};
use coxfix_core::system::{CoxeterSystem, Side};
use coxfix_core::topology::ComplexZ2;
use coxfix_core::word::braid_closure;

fn small_system(ix: usize) -> (&'static str, CoxeterSystem) {
    let names = ["A2", "A3", "B2", "I2(5)", "I2(inf)", "affA2"];
    let name = names[ix % names.len()];
    (name, CoxeterSystem::new(catalog(name).unwrap()))
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<u8>)> {
    (0usize..6, prop::collection::vec(0u8..3, 0..9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalization_properties((ix, raw) in word_strategy()) {
        let (_, sys) = small_system(ix);
        let word: Vec<u8> = raw.into_iter().map(|s| s % sys.rank() as u8).collect();
        let x = sys.element_of_word(&word).unwrap();
        let canon = sys.canonical_word(x);
        // idempotent, reduced, and length-consistent
        prop_assert_eq!(sys.element_of_word(&canon).unwrap(), x);
        prop_assert!(sys.is_reduced(&canon).unwrap());
        prop_assert_eq!(sys.length(x) as usize, canon.len());
        prop_assert_eq!(sys.is_reduced(&word).unwrap(), canon.len() == word.len());
        prop_assert_eq!(sys.length(x) % 2, (word.len() % 2) as u32);
        // every member of the braid class canonicalizes to the same element
        for w in braid_closure(sys.matrix(), &canon) {
            prop_assert_eq!(sys.element_of_word(&w).unwrap(), x);
        }
        // inverse is involutive and length-preserving
        let xi = sys.inverse(x);
        prop_assert_eq!(sys.inverse(xi), x);
        prop_assert_eq!(sys.length(xi), sys.length(x));
        prop_assert_eq!(sys.multiply(x, xi), sys.identity());
    }

    #[test]
    fn product_and_descent_properties((ix, raw) in word_strategy(), split in 0usize..9) {
        let (_, sys) = small_system(ix);
        let word: Vec<u8> = raw.into_iter().map(|s| s % sys.rank() as u8).collect();
        let cut = split.min(word.len());
        let x = sys.element_of_word(&word[..cut]).unwrap();
        let y = sys.element_of_word(&word[cut..]).unwrap();
        let xy = sys.multiply(x, y);
        prop_assert!(sys.length(xy) <= sys.length(x) + sys.length(y));
        prop_assert_eq!(sys.length(xy) % 2, (sys.length(x) + sys.length(y)) % 2);
        // s is a right descent iff right-multiplying shortens
        for s in 0..sys.rank() as u8 {
            let shorter = sys.length(sys.right_mul(xy, s).unwrap()) < sys.length(xy);
            prop_assert_eq!(shorter, sys.descents(xy, Side::Right).contains(&s));
        }
    }

    #[test]
    fn weak_refines_bruhat((ix, raw) in word_strategy(), other in prop::collection::vec(0u8..3, 0..9)) {
        let (_, sys) = small_system(ix);
        let u = sys.element_of_word(&raw.iter().map(|s| s % sys.rank() as u8).collect::<Vec<_>>()).unwrap();
        let v = sys.element_of_word(&other.iter().map(|s| s % sys.rank() as u8).collect::<Vec<_>>()).unwrap();
        if weak_leq(&sys, u, v) {
            prop_assert!(bruhat_leq(&sys, u, v));
        }
    }

    #[test]
    fn boundary_squared_and_euler(edges in prop::collection::vec(any::<bool>(), 21)) {
        // random poset on 7 points: random upper-triangular relation,
        // transitively closed
        let n = 7usize;
        let mut leq = vec![false; n * n];
        let mut k = 0;
        for i in 0..n {
            leq[i * n + i] = true;
            for j in (i + 1)..n {
                leq[i * n + j] = edges[k];
                k += 1;
            }
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + m] && leq[m * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        let sys = CoxeterSystem::new(catalog("A3").unwrap());
        let keys: Vec<_> = sys.ball(2).unwrap().elements[..n].to_vec();
        let k2 = keys.clone();
        let poset = Poset::from_leq(keys, move |a, b| {
            let i = k2.iter().position(|&x| x == a).unwrap();
            let j = k2.iter().position(|&x| x == b).unwrap();
            leq[i * n + j]
        }).unwrap();
        let complex = ComplexZ2::order_complex(&poset, 1_000_000).unwrap();
        prop_assert!(complex.boundary_squared_is_zero());
        prop_assert_eq!(complex.reduced_euler(), complex.betti().euler());
    }
}
