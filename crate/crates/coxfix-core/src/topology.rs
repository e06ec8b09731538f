//! Order complexes and simplicial homology over GF(2).
//!
//! Homology is reduced: the augmented chain complex includes the empty
//! face, so the empty complex has a single unit of homology in dimension
//! -1 and sphere checks are uniform down to S^{-1}.

use std::collections::HashMap;

use crate::error::{CoxError, Result};
use crate::orders::{is_graded, mobius, GradedOutcome, Interval, Poset};
use crate::system::Element;

/// Default guardrail on the number of faces of one order complex.
pub const DEFAULT_FACE_CAP: usize = 2_000_000;

/// Finite simplicial complex with GF(2) boundary data. `faces[k]` holds
/// the k-dimensional faces as sorted vertex lists; the empty face is
/// implicit.
pub struct ComplexZ2 {
    vertex_count: usize,
    faces: Vec<Vec<Box<[u32]>>>,
}

impl ComplexZ2 {
    /// Order complex: vertices are the poset's positions, k-faces its
    /// (k+1)-chains. Fails with a resource error beyond `face_cap` faces.
    pub fn order_complex(poset: &Poset, face_cap: usize) -> Result<ComplexZ2> {
        let n = poset.len();
        let order = poset.linear_extension();
        // strict comparability, topologically sorted
        let mut above: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (oi, &i) in order.iter().enumerate() {
            for &j in &order[oi + 1..] {
                if i != j && poset.leq_idx(i, j) {
                    above[i].push(j as u32);
                }
            }
        }
        let mut faces: Vec<Vec<Box<[u32]>>> = Vec::new();
        let mut count = 0usize;
        let mut chain: Vec<u32> = Vec::new();
        fn extend(
            v: u32,
            above: &[Vec<u32>],
            chain: &mut Vec<u32>,
            faces: &mut Vec<Vec<Box<[u32]>>>,
            count: &mut usize,
            cap: usize,
        ) -> Result<()> {
            chain.push(v);
            let dim = chain.len() - 1;
            if faces.len() <= dim {
                faces.push(Vec::new());
            }
            faces[dim].push(chain.as_slice().into());
            *count += 1;
            if *count > cap {
                return Err(CoxError::Resource(format!(
                    "order complex exceeds face cap {cap}"
                )));
            }
            for &w in &above[v as usize] {
                extend(w, above, chain, faces, count, cap)?;
            }
            chain.pop();
            Ok(())
        }
        for &i in &order {
            extend(
                i as u32, &above, &mut chain, &mut faces, &mut count, face_cap,
            )?;
        }
        for dim_faces in &mut faces {
            dim_faces.sort();
        }
        Ok(ComplexZ2 {
            vertex_count: n,
            faces,
        })
    }

    /// Builds a complex from its facet list, closing under subsets.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<u32>]) -> ComplexZ2 {
        use itertools::Itertools;
        let mut by_dim: Vec<std::collections::BTreeSet<Box<[u32]>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            for size in 1..=f.len() {
                for sub in f.iter().copied().combinations(size) {
                    let d = size - 1;
                    while by_dim.len() <= d {
                        by_dim.push(Default::default());
                    }
                    by_dim[d].insert(sub.into());
                }
            }
        }
        ComplexZ2 {
            vertex_count,
            faces: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }

    /// Top dimension; -1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    pub fn face_count(&self, dim: usize) -> usize {
        self.faces.get(dim).map_or(0, Vec::len)
    }

    pub fn total_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Boundary matrix of dimension k as sparse columns over indices of
    /// (k-1)-faces. k = 0 maps vertices to the empty face (row 0).
    fn boundary_columns(&self, k: usize) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![0]; self.face_count(0)];
        }
        let lower = &self.faces[k - 1];
        let index: HashMap<&[u32], u32> = lower
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_ref(), i as u32))
            .collect();
        self.faces[k]
            .iter()
            .map(|f| {
                let mut col: Vec<u32> = (0..f.len())
                    .map(|omit| {
                        let sub: Vec<u32> = f
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != omit)
                            .map(|(_, &v)| v)
                            .collect();
                        index[sub.as_slice()]
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }

    /// Reduced Betti numbers over GF(2).
    pub fn betti(&self) -> HomologyProfile {
        let top = self.faces.len(); // number of face dimensions >= 0
        let mut ranks = vec![0usize; top + 1]; // ranks[k] = rank of boundary_k
        for (k, r) in ranks.iter_mut().enumerate().take(top) {
            *r = gf2_rank(self.boundary_columns(k));
        }
        let mut betti = Vec::with_capacity(top + 1);
        // dimension -1: one empty face, boundary_{-1} = 0
        betti.push((1 - ranks.first().copied().unwrap_or(0)) as u64);
        for k in 0..top {
            let f = self.face_count(k);
            betti.push((f - ranks[k] - ranks[k + 1]) as u64);
        }
        HomologyProfile { betti }
    }

    /// Checks boundary-of-boundary vanishing over GF(2), for tests.
    pub fn boundary_squared_is_zero(&self) -> bool {
        for k in 1..self.faces.len() {
            let cols_k = self.boundary_columns(k);
            let cols_km1 = self.boundary_columns(k - 1);
            for col in cols_k {
                let mut acc: Vec<u32> = Vec::new();
                for &r in &col {
                    acc = xor_merge(&acc, &cols_km1[r as usize]);
                }
                if !acc.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced Euler characteristic from face counts (includes the empty
    /// face with sign -1).
    pub fn reduced_euler(&self) -> i64 {
        let mut chi: i64 = -1;
        for (k, fs) in self.faces.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            chi += sign * fs.len() as i64;
        }
        chi
    }
}

/// Reduced Betti numbers indexed from dimension -1 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    betti: Vec<u64>,
}

impl HomologyProfile {
    pub fn reduced_betti(&self, dim: i64) -> u64 {
        let idx = dim + 1;
        if idx < 0 {
            return 0;
        }
        self.betti.get(idx as usize).copied().unwrap_or(0)
    }

    pub fn max_dim(&self) -> i64 {
        self.betti.len() as i64 - 2
    }

    /// Comma-joined entries starting at dimension -1.
    pub fn format(&self) -> String {
        self.betti
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Alternating sum, equal to the reduced Euler characteristic.
    pub fn euler(&self) -> i64 {
        let mut chi = 0i64;
        for (i, &b) in self.betti.iter().enumerate() {
            // index 0 is dimension -1
            let sign = if i % 2 == 0 { -1 } else { 1 };
            chi += sign * b as i64;
        }
        chi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereExpectation {
    Exactly(i64),
    Any,
}

/// True iff the profile is that of S^r (a single 1), with r matching the
/// expectation. Returns the achieved r.
pub fn is_homology_sphere_z2(
    profile: &HomologyProfile,
    expected: SphereExpectation,
) -> (bool, Option<i64>) {
    let mut r = None;
    for (i, &b) in profile.betti.iter().enumerate() {
        match (b, r) {
            (0, _) => {}
            (1, None) => r = Some(i as i64 - 1),
            _ => return (false, None),
        }
    }
    let Some(r) = r else { return (false, None) };
    match expected {
        SphereExpectation::Any => (true, Some(r)),
        SphereExpectation::Exactly(want) => (r == want, Some(r)),
    }
}

fn xor_merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Rank of a GF(2) matrix given as sparse sorted columns; Gaussian
/// elimination keyed on each column's largest row index.
pub fn gf2_rank(columns: Vec<Vec<u32>>) -> usize {
    let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut rank = 0;
    for mut col in columns {
        while let Some(&low) = col.last() {
            match pivots.get(&low) {
                Some(p) => col = xor_merge(&col, p),
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Why a complex fails to be a pseudomanifold, with a witness face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudoFailure {
    NotPure { facet: Vec<u32> },
    NotThin { face: Vec<u32>, in_facets: usize },
    NotStronglyConnected,
}

/// Pure + thin + strongly connected.
pub fn is_pseudomanifold(complex: &ComplexZ2) -> Result<std::result::Result<(), PseudoFailure>> {
    if complex.faces.is_empty() {
        return Err(CoxError::Precondition(
            "pseudomanifold test needs a nonempty complex".into(),
        ));
    }
    let top = complex.faces.len() - 1;
    // pure: no facet below top dimension
    for d in 0..top {
        let mut contained: std::collections::HashSet<&[u32]> = Default::default();
        let uppers = &complex.faces[d + 1];
        let mut subs: Vec<Vec<u32>> = Vec::new();
        for f in uppers {
            for omit in 0..f.len() {
                let sub: Vec<u32> = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                subs.push(sub);
            }
        }
        for s in &subs {
            contained.insert(s.as_slice());
        }
        for f in &complex.faces[d] {
            if !contained.contains(f.as_ref()) {
                return Ok(Err(PseudoFailure::NotPure { facet: f.to_vec() }));
            }
        }
    }
    // thin: every (top-1)-face in exactly two facets; for top = 0 the
    // ridge is the empty face, shared by all vertices
    let facets = &complex.faces[top];
    if top == 0 {
        if facets.len() != 2 {
            return Ok(Err(PseudoFailure::NotThin {
                face: vec![],
                in_facets: facets.len(),
            }));
        }
        return Ok(Ok(()));
    }
    let mut ridge_count: HashMap<Box<[u32]>, Vec<usize>> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for omit in 0..f.len() {
            let sub: Vec<u32> = f
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != omit)
                .map(|(_, &v)| v)
                .collect();
            ridge_count.entry(sub.into()).or_default().push(fi);
        }
    }
    for (ridge, fs) in &ridge_count {
        if fs.len() != 2 {
            return Ok(Err(PseudoFailure::NotThin {
                face: ridge.to_vec(),
                in_facets: fs.len(),
            }));
        }
    }
    // strong connectivity via union-find over facets
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for fs in ridge_count.values() {
        let r0 = find(&mut parent, fs[0]);
        for &f in &fs[1..] {
            let r = find(&mut parent, f);
            parent[r] = r0;
        }
    }
    let root = find(&mut parent, 0);
    for i in 1..facets.len() {
        if find(&mut parent, i) != root {
            return Ok(Err(PseudoFailure::NotStronglyConnected));
        }
    }
    Ok(Ok(()))
}

/// Gorenstein* over GF(2): graded, and every subinterval's open order
/// complex is a homology sphere of top dimension.
pub fn is_gorenstein_star_z2(interval: &Interval, face_cap: usize) -> Result<GorensteinOutcome> {
    let ranks = match is_graded(interval) {
        GradedOutcome::Graded(r) => r,
        GradedOutcome::NotGraded { .. } => {
            return Ok(GorensteinOutcome::fail("not graded", None));
        }
    };
    let p = &interval.poset;
    for i in 0..p.len() {
        for j in 0..p.len() {
            // single-point subintervals carry no sphere condition
            if i == j || !p.leq_idx(i, j) {
                continue;
            }
            let open: Vec<usize> = (0..p.len())
                .filter(|&x| x != i && x != j && p.leq_idx(i, x) && p.leq_idx(x, j))
                .collect();
            let complex = ComplexZ2::order_complex(&p.restrict(&open), face_cap)?;
            let expected = ranks[j] as i64 - ranks[i] as i64 - 2;
            let (ok, _) =
                is_homology_sphere_z2(&complex.betti(), SphereExpectation::Exactly(expected));
            if !ok {
                return Ok(GorensteinOutcome::fail(
                    "subinterval not a top-dimensional sphere",
                    Some((p.key(i), p.key(j))),
                ));
            }
        }
    }
    Ok(GorensteinOutcome::pass())
}

#[derive(Debug, Clone)]
pub struct GorensteinOutcome {
    pub pass: bool,
    pub reason: Option<String>,
    pub witness: Option<(Element, Element)>,
}

impl GorensteinOutcome {
    fn pass() -> Self {
        GorensteinOutcome {
            pass: true,
            reason: None,
            witness: None,
        }
    }

    fn fail(reason: &str, witness: Option<(Element, Element)>) -> Self {
        GorensteinOutcome {
            pass: false,
            reason: Some(reason.into()),
            witness,
        }
    }
}

/// Result of the fixed-point sphere verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithOutcome {
    pub pass: bool,
    pub fixed_point_count: usize,
    /// achieved sphere dimension of the fixed subcomplex
    pub r: Option<i64>,
    /// top dimension of the ambient open complex
    pub n: i64,
}

/// Verifies the fixed-point sphere property for an involutive poset
/// automorphism `nu` of the interval.
///
/// Preconditions are enforced: `nu` must be a self-inverse order
/// automorphism. The sphere hypothesis "setwise-fixed chains are fixed
/// pointwise" holds automatically when `nu` preserves the grading, which
/// is checked; a rank-shuffling automorphism is rejected rather than
/// barycentrically subdivided.
pub fn smith_fixed_check(
    interval: &Interval,
    nu: impl Fn(Element) -> Element,
    face_cap: usize,
) -> Result<SmithOutcome> {
    let p = &interval.poset;
    let n_el = p.len();
    let mut image = Vec::with_capacity(n_el);
    for i in 0..n_el {
        let img = nu(p.key(i));
        let Some(j) = p.index_of(img) else {
            return Err(CoxError::Precondition(format!(
                "nu does not preserve the interval at position {i}"
            )));
        };
        image.push(j);
    }
    for i in 0..n_el {
        if image[image[i]] != i {
            return Err(CoxError::Precondition(format!(
                "nu is not an involution at position {i}"
            )));
        }
        for j in 0..n_el {
            if p.leq_idx(i, j) != p.leq_idx(image[i], image[j]) {
                return Err(CoxError::Precondition(format!(
                    "nu is not order-preserving at pair ({i},{j})"
                )));
            }
        }
    }
    let ranks = match is_graded(interval) {
        GradedOutcome::Graded(r) => r,
        GradedOutcome::NotGraded { .. } => {
            return Err(CoxError::Precondition(
                "smith check requires a graded interval".into(),
            ))
        }
    };
    for i in 0..n_el {
        if ranks[image[i]] != ranks[i] {
            return Err(CoxError::Precondition(format!(
                "nu does not preserve rank at position {i}; fixed simplices may move"
            )));
        }
    }
    let fixed: Vec<usize> = (0..n_el).filter(|&i| image[i] == i).collect();
    debug_assert!(fixed.contains(&interval.bottom) && fixed.contains(&interval.top));
    let open_fixed: Vec<usize> = fixed
        .iter()
        .copied()
        .filter(|&i| i != interval.bottom && i != interval.top)
        .collect();
    let complex = ComplexZ2::order_complex(&p.restrict(&open_fixed), face_cap)?;
    let n = interval.length() as i64 - 2;
    let (is_sphere, r) = is_homology_sphere_z2(&complex.betti(), SphereExpectation::Any);
    let pass = is_sphere && r.is_some_and(|r| r >= -1 && r <= n);
    Ok(SmithOutcome {
        pass,
        fixed_point_count: fixed.len(),
        r,
        n,
    })
}

/// Ph. Hall consistency: the Möbius value of the interval equals the
/// reduced Euler characteristic of its open order complex, computed both
/// from face counts and from GF(2) Betti numbers.
pub fn euler_mobius_consistent(interval: &Interval, face_cap: usize) -> Result<bool> {
    let complex = ComplexZ2::order_complex(&interval.open_poset(), face_cap)?;
    let mu = mobius(&interval.poset).get(interval.bottom, interval.top);
    let by_faces = complex.reduced_euler();
    let by_betti = complex.betti().euler();
    Ok(mu == by_faces && by_faces == by_betti)
}

/// `interval <u> <v> dim <n> betti <b-1,b0,...>` report line.
pub fn homology_report_line(
    sys: &crate::system::CoxeterSystem,
    u: Element,
    v: Element,
    complex_dim: i64,
    profile: &HomologyProfile,
) -> String {
    format!(
        "interval {} {} dim {} betti {}",
        sys.format(u),
        sys.format(v),
        complex_dim,
        profile.format()
    )
}
