//! Independent permutation model for type A, used to cross-check the
//! word engine. S_{n+1} acts on 1..=n+1; the generator with index i is
//! the adjacent transposition (i+1, i+2). Nothing here touches the braid
//! machinery.

/// A permutation as its image tuple: `p[i]` is the image of i+1.
pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (1..=n as u8).collect()
}

pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut p = identity(n);
    for &s in word {
        p.swap(s as usize, s as usize + 1);
    }
    p
}

pub fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a*b)(x) = a(b(x))
    b.iter().map(|&x| a[x as usize - 1]).collect()
}

pub fn invert(p: &Perm) -> Perm {
    let mut q = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize - 1] = i as u8 + 1;
    }
    q
}

pub fn inversions(p: &Perm) -> u32 {
    let n = p.len();
    let mut c = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn right_descents(p: &Perm) -> Vec<u8> {
    (0..p.len() as u8 - 1)
        .filter(|&s| p[s as usize] > p[s as usize + 1])
        .collect()
}

pub fn left_descents(p: &Perm) -> Vec<u8> {
    right_descents(&invert(p))
}

/// Ehresmann's tableau criterion for Bruhat order on S_n.
pub fn bruhat_leq(u: &Perm, v: &Perm) -> bool {
    let n = u.len();
    for i in 1..n {
        let mut su: Vec<u8> = u[..i].to_vec();
        let mut sv: Vec<u8> = v[..i].to_vec();
        su.sort_unstable();
        sv.sort_unstable();
        if su.iter().zip(&sv).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

pub fn all_elements(n: usize) -> Vec<Perm> {
    let mut out = vec![identity(n)];
    let mut head = 0;
    let mut seen: std::collections::HashSet<Perm> = out.iter().cloned().collect();
    while head < out.len() {
        let p = out[head].clone();
        head += 1;
        for s in 0..n - 1 {
            let mut q = p.clone();
            q.swap(s, s + 1);
            if seen.insert(q.clone()) {
                out.push(q);
            }
        }
    }
    out
}
