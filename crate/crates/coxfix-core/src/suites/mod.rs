//! Named verification suites. Each suite sweeps one result over a
//! configured group and reports one PASS/FAIL line per check; suites are
//! deterministic for a fixed configuration.

mod report;

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::catalog;
use crate::error::{CoxError, Result};
use crate::exec;
use crate::folding::{
    fold, verify_bruhat_iso, verify_chain_transport, verify_crisp_lemma, verify_fixed_subgroup,
    verify_length_steps, verify_w0_theorem, verify_weak_iso, AutomorphismGroup,
};
use crate::matrix::CoxeterMatrix;
use crate::orders::{bruhat_leq, bruhat_leq_subword, build_interval, is_eulerian, Interval};
use crate::system::{absolute_length, Ball, CoxeterSystem, Element};
use crate::topology::{
    homology_report_line, is_gorenstein_star_z2, is_homology_sphere_z2, smith_fixed_check,
    ComplexZ2, SphereExpectation, DEFAULT_FACE_CAP,
};
use crate::twisted::{
    apply_auto, twisted_absolute_length, twisted_identities, twisted_involutions,
    verify_halving_lemma, verify_length_lemma, verify_rank_theorem, verify_rotation_lemma,
    verify_welldefined_ltheta, GraphAutomorphism,
};

pub use report::{CheckLine, Report};

/// Canonical suite names, one per verified result.
pub const SUITE_NAMES: &[&str] = &[
    "bw-spheres",
    "twisted-gorenstein",
    "rank-formula",
    "ltheta-dyer",
    "twisted-lemmas",
    "smith",
    "fold-matrices",
    "fold-weak",
    "fold-bruhat",
    "w0-theorem",
    "deodhar-oracle",
];

/// Configuration shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub group_label: String,
    pub matrix: CoxeterMatrix,
    /// 0-based generator permutations defining the automorphism (group)
    pub perms: Vec<Vec<u8>>,
    /// twisted suites: theta = id (true) or the first perm (false)
    pub theta_id: bool,
    /// ball radius; None enumerates the whole group
    pub radius: Option<u32>,
    /// cap on interval length (longest chain) in twisted sweeps
    pub max_interval: Option<u32>,
    /// cap on length(top) when the ball is a truncation
    pub max_top_length: Option<u32>,
    pub face_cap: usize,
    pub ball_cap: usize,
    pub order_cap: u32,
    /// 0 = exhaustive; otherwise the number of sampled checks
    pub samples: usize,
    pub seed: u64,
    pub extended: bool,
    pub expect: Option<String>,
}

impl SuiteConfig {
    pub fn new(group_label: impl Into<String>, matrix: CoxeterMatrix) -> Self {
        SuiteConfig {
            group_label: group_label.into(),
            matrix,
            perms: Vec::new(),
            theta_id: true,
            radius: None,
            max_interval: None,
            max_top_length: None,
            face_cap: DEFAULT_FACE_CAP,
            ball_cap: 1_000_000,
            order_cap: 128,
            samples: 0,
            seed: 2023,
            extended: false,
            expect: None,
        }
    }

    pub fn for_catalog(name: &str) -> Result<Self> {
        Ok(Self::new(name, catalog(name)?))
    }

    fn theta(&self) -> Result<GraphAutomorphism> {
        if self.theta_id {
            return Ok(GraphAutomorphism::identity(self.matrix.rank()));
        }
        let perm = self.perms.first().ok_or_else(|| {
            CoxError::Precondition("theta=perm requires a --perm specification".into())
        })?;
        let theta = GraphAutomorphism::new(&self.matrix, perm.clone())?;
        if !theta.is_involution() {
            return Err(CoxError::Precondition(
                "theta must be an involutive automorphism".into(),
            ));
        }
        Ok(theta)
    }

    fn theta_label(&self) -> String {
        if self.theta_id {
            "id".into()
        } else {
            match self.perms.first() {
                Some(p) => format!(
                    "perm={}",
                    p.iter()
                        .map(|&s| (s + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                None => "perm=?".into(),
            }
        }
    }

    fn params_label(&self) -> String {
        let mut parts = Vec::new();
        if self.theta_id {
            for p in &self.perms {
                parts.push(format!(
                    "perm={}",
                    p.iter()
                        .map(|&s| (s + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            }
        }
        if let Some(r) = self.radius {
            parts.push(format!("L={r}"));
        }
        if let Some(m) = self.max_interval {
            parts.push(format!("max-interval={m}"));
        }
        if let Some(m) = self.max_top_length {
            parts.push(format!("max-top={m}"));
        }
        if self.samples > 0 {
            parts.push(format!("samples={}", self.samples));
            parts.push(format!("seed={}", self.seed));
        }
        if parts.is_empty() {
            "-".into()
        } else {
            parts.join(",")
        }
    }

    fn system(&self) -> CoxeterSystem {
        CoxeterSystem::with_ball_cap(self.matrix.clone(), self.ball_cap)
    }

    fn ball(&self, sys: &CoxeterSystem) -> Result<Ball> {
        match self.radius {
            Some(r) => sys.ball(r),
            None => sys.full_group(),
        }
    }

    fn line(&self, suite: &str, check_id: String, pass: bool, witness: String) -> CheckLine {
        CheckLine {
            suite: suite.into(),
            group: self.group_label.clone(),
            theta: self.theta_label(),
            params: self.params_label(),
            check_id,
            pass,
            witness,
        }
    }

    fn automorphism_group(&self) -> Result<AutomorphismGroup> {
        let gens = self
            .perms
            .iter()
            .map(|p| GraphAutomorphism::new(&self.matrix, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(CoxError::Precondition(
                "folding suites require at least one --perm".into(),
            ));
        }
        AutomorphismGroup::generate(self.matrix.rank(), &gens)
    }
}

/// Runs a named suite. `bruhat-sphere` is accepted as an alias of
/// `bw-spheres`.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    let canonical = match name {
        "bruhat-sphere" => "bw-spheres",
        other => other,
    };
    let start = Instant::now();
    let checks = match canonical {
        "bw-spheres" => bw_spheres(config)?,
        "twisted-gorenstein" => twisted_gorenstein(config)?,
        "rank-formula" => rank_formula(config)?,
        "ltheta-dyer" => ltheta_dyer(config)?,
        "twisted-lemmas" => twisted_lemmas(config)?,
        "smith" => smith_suite(config)?,
        "fold-matrices" => fold_matrices(config)?,
        "fold-weak" => fold_order_iso(config, false)?,
        "fold-bruhat" => fold_order_iso(config, true)?,
        "w0-theorem" => w0_theorem(config)?,
        "deodhar-oracle" => deodhar_oracle(config)?,
        other => return Err(CoxError::UnknownSuite(other.into())),
    };
    Ok(Report {
        suite: canonical.into(),
        group: config.group_label.clone(),
        config_echo: format!(
            "group={} theta={} {}",
            config.group_label,
            config.theta_label(),
            config.params_label()
        ),
        checks,
        wall: start.elapsed(),
    })
}

/// Bruhat comparability matrix over a ball, memo warm-up included.
fn bruhat_matrix(sys: &CoxeterSystem, elements: &[Element]) -> Vec<bool> {
    let n = elements.len();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = i == j || bruhat_leq(sys, elements[i], elements[j]);
        }
    }
    leq
}

struct IntervalSweep<'a> {
    sys: &'a CoxeterSystem,
    elements: &'a [Element],
    index: HashMap<Element, usize>,
    leq: Vec<bool>,
}

impl<'a> IntervalSweep<'a> {
    fn new(sys: &'a CoxeterSystem, elements: &'a [Element]) -> Self {
        let leq = bruhat_matrix(sys, elements);
        let index = elements.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        IntervalSweep {
            sys,
            elements,
            index,
            leq,
        }
    }

    fn n(&self) -> usize {
        self.elements.len()
    }

    fn leq_pos(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    fn leq_el(&self, a: Element, b: Element) -> bool {
        self.leq_pos(self.index[&a], self.index[&b])
    }

    /// Strictly increasing comparable pairs, subject to caps; positions.
    fn strict_pairs(
        &self,
        truncated: bool,
        radius: u32,
        max_top_length: Option<u32>,
        max_length_diff: Option<u32>,
    ) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            let lu = self.sys.length(self.elements[i]);
            for j in 0..self.n() {
                let lv = self.sys.length(self.elements[j]);
                if lv <= lu || !self.leq_pos(i, j) {
                    continue;
                }
                if truncated && lv > max_top_length.unwrap_or(radius).min(radius) {
                    continue;
                }
                if let Some(cap) = max_length_diff {
                    if lv - lu > cap {
                        continue;
                    }
                }
                out.push((i, j));
            }
        }
        out
    }

    fn interval(&self, i: usize, j: usize) -> Result<Interval> {
        let members: Vec<Element> = (0..self.n())
            .filter(|&k| self.leq_pos(i, k) && self.leq_pos(k, j))
            .map(|k| self.elements[k])
            .collect();
        build_interval(
            &members,
            |a, b| self.leq_el(a, b),
            self.elements[i],
            self.elements[j],
        )
    }
}

fn sample_pairs(mut pairs: Vec<(usize, usize)>, samples: usize, seed: u64) -> Vec<(usize, usize)> {
    if samples == 0 || pairs.len() <= samples {
        return pairs;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(samples);
    pairs.sort_unstable();
    pairs
}

/// Every (or a sample of the) Bruhat interval has an open order complex
/// with the GF(2) Betti profile of the top-dimensional sphere.
fn bw_spheres(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let sys = config.system();
    let ball = config.ball(&sys)?;
    let sweep = IntervalSweep::new(&sys, &ball.elements);
    let pairs = sweep.strict_pairs(
        !ball.complete,
        ball.radius,
        config.max_top_length,
        config.max_interval,
    );
    let pairs = sample_pairs(pairs, config.samples, config.seed);
    let results = exec::map_collect(&pairs, |&(i, j)| -> Result<CheckLine> {
        let (u, v) = (sweep.elements[i], sweep.elements[j]);
        let interval = sweep.interval(i, j)?;
        let complex = ComplexZ2::order_complex(&interval.open_poset(), config.face_cap)?;
        let profile = complex.betti();
        let expected = sys.length(v) as i64 - sys.length(u) as i64 - 2;
        let (pass, _) = is_homology_sphere_z2(&profile, SphereExpectation::Exactly(expected));
        let witness = homology_report_line(&sys, u, v, complex.dim(), &profile);
        Ok(config.line(
            "bw-spheres",
            format!("sphere:{}:{}", sys.format(u), sys.format(v)),
            pass,
            witness,
        ))
    });
    results.into_iter().collect()
}

struct TwistedContext {
    sys: CoxeterSystem,
    ball: Ball,
    theta: GraphAutomorphism,
    members: Vec<Element>,
}

fn twisted_context(config: &SuiteConfig) -> Result<TwistedContext> {
    let sys = config.system();
    let ball = config.ball(&sys)?;
    let theta = config.theta()?;
    let members = twisted_involutions(&sys, &theta, &ball);
    Ok(TwistedContext {
        sys,
        ball,
        theta,
        members,
    })
}

/// Intervals of the twisted Bruhat order, subject to the configured caps.
fn twisted_intervals(
    ctx: &TwistedContext,
    config: &SuiteConfig,
) -> Result<Vec<(Element, Element, Interval)>> {
    let sweep = IntervalSweep::new(&ctx.sys, &ctx.members);
    let pairs = sweep.strict_pairs(
        !ctx.ball.complete,
        ctx.ball.radius,
        config.max_top_length,
        None,
    );
    let built = exec::map_collect(
        &pairs,
        |&(i, j)| -> Result<Option<(Element, Element, Interval)>> {
            let iv = sweep.interval(i, j)?;
            if let Some(cap) = config.max_interval {
                if iv.length() > cap {
                    return Ok(None);
                }
            }
            Ok(Some((sweep.elements[i], sweep.elements[j], iv)))
        },
    );
    let mut out = Vec::new();
    for r in built {
        if let Some(t) = r? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Every interval of the twisted Bruhat order is graded, Eulerian and a
/// top-dimensional GF(2) homology sphere in every subinterval.
fn twisted_gorenstein(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let ctx = twisted_context(config)?;
    let intervals = twisted_intervals(&ctx, config)?;
    let results = exec::map_collect(&intervals, |(u, v, iv)| -> Result<CheckLine> {
        let gor = is_gorenstein_star_z2(iv, config.face_cap)?;
        let eulerian = gor.pass && is_eulerian(iv)?;
        let pass = gor.pass && eulerian;
        let witness = if pass {
            format!("length={} size={}", iv.length(), iv.len())
        } else if !gor.pass {
            gor.reason.unwrap_or_default()
        } else {
            "not Eulerian".into()
        };
        Ok(config.line(
            "twisted-gorenstein",
            format!("gorenstein:{}:{}", ctx.sys.format(*u), ctx.sys.format(*v)),
            pass,
            witness,
        ))
    });
    results.into_iter().collect()
}

/// Poset rank in the twisted Bruhat order equals
/// (length + twisted absolute length)/2, offset from the interval bottom.
fn rank_formula(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let ctx = twisted_context(config)?;
    let iota = twisted_identities(&ctx.sys, &ctx.theta, &ctx.ball);
    // warm the ltheta memo sequentially so parallel workers only read
    for &w in &ctx.members {
        twisted_absolute_length(&ctx.sys, w, &iota)?;
    }
    let intervals = twisted_intervals(&ctx, config)?;
    let results = exec::map_collect(&intervals, |(u, v, iv)| -> Result<CheckLine> {
        let verdict = verify_rank_theorem(&ctx.sys, iv, &iota)?;
        Ok(config.line(
            "rank-formula",
            format!("rank:{}:{}", ctx.sys.format(*u), ctx.sys.format(*v)),
            verdict.pass,
            verdict
                .witness
                .unwrap_or_else(|| format!("elements={}", verdict.checked)),
        ))
    });
    results.into_iter().collect()
}

/// Twisted absolute length at theta = id equals the reflection-BFS
/// absolute length, elementwise.
fn ltheta_dyer(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    if !config.theta_id {
        return Err(CoxError::Precondition(
            "ltheta-dyer is a theta = id comparison".into(),
        ));
    }
    let sys = config.system();
    let ball = config.ball(&sys)?;
    let theta = GraphAutomorphism::identity(sys.rank());
    let iota = twisted_identities(&sys, &theta, &ball);
    let elements: Vec<Element> = ball
        .iter()
        .filter(|&w| ball.complete || 2 * sys.length(w) <= ball.radius)
        .collect();
    // reflections and inverses are memoized on first use; warm them here
    let _ = crate::system::reflections(&sys, &ball);
    let results = exec::map_collect(&elements, |&w| -> Result<CheckLine> {
        let lt = twisted_absolute_length(&sys, w, &iota)?;
        let ab = absolute_length(&sys, w, &ball)?;
        Ok(config.line(
            "ltheta-dyer",
            format!("dyer:{}", sys.format(w)),
            lt == ab,
            format!("ltheta={lt} lprime={ab}"),
        ))
    });
    results.into_iter().collect()
}

/// Rotation, halving, length lemma and well-definedness of the twisted
/// absolute length, exhaustively within the ball.
fn twisted_lemmas(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let ctx = twisted_context(config)?;
    let iota = twisted_identities(&ctx.sys, &ctx.theta, &ctx.ball);
    let mut checks = Vec::new();
    let rot = verify_rotation_lemma(&ctx.sys, &ctx.theta, &ctx.ball)?;
    checks.push(
        config.line(
            "twisted-lemmas",
            "rotation".into(),
            rot.pass,
            rot.witness
                .unwrap_or_else(|| format!("checked={}", rot.checked)),
        ),
    );
    let halv = verify_halving_lemma(&ctx.sys, &ctx.theta, &ctx.ball)?;
    checks.push(
        config.line(
            "twisted-lemmas",
            "halving".into(),
            halv.pass,
            halv.witness
                .unwrap_or_else(|| format!("checked={}", halv.checked)),
        ),
    );
    let len = verify_length_lemma(&ctx.sys, &ctx.theta, &ctx.ball)?;
    checks.push(
        config.line(
            "twisted-lemmas",
            "length".into(),
            len.pass,
            len.witness
                .unwrap_or_else(|| format!("checked={}", len.checked)),
        ),
    );
    let wd = exec::map_collect(
        &ctx.members,
        |&w| -> Result<(bool, usize, Option<String>)> {
            let v = verify_welldefined_ltheta(&ctx.sys, w, &iota)?;
            Ok((v.pass, v.checked, v.witness))
        },
    );
    let mut pass = true;
    let mut checked = 0;
    let mut witness = None;
    for r in wd {
        let (p, c, w) = r?;
        checked += c;
        if !p && pass {
            pass = false;
            witness = w;
        }
    }
    checks.push(config.line(
        "twisted-lemmas",
        "well-defined".into(),
        pass,
        witness.unwrap_or_else(|| format!("checked={checked}")),
    ));
    Ok(checks)
}

/// For every twisted involution w, the fixed subcomplex of inversion
/// composed with theta acting on [e, w] is a GF(2) homology r-sphere,
/// and the fixed subposet is exactly the twisted interval.
fn smith_suite(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let ctx = twisted_context(config)?;
    let sweep = IntervalSweep::new(&ctx.sys, &ctx.ball.elements);
    // inverses and automorphism images are memo warm here
    for x in ctx.ball.iter() {
        let _ = ctx.sys.inverse(x);
        let _ = apply_auto(&ctx.sys, &ctx.theta, x);
    }
    let member_set: std::collections::HashSet<Element> = ctx.members.iter().copied().collect();
    let tops: Vec<Element> = ctx
        .members
        .iter()
        .copied()
        .filter(|&w| {
            w != ctx.sys.identity()
                && (ctx.ball.complete
                    || ctx.sys.length(w)
                        <= config
                            .max_top_length
                            .unwrap_or(ctx.ball.radius)
                            .min(ctx.ball.radius))
        })
        .collect();
    let results = exec::map_collect(&tops, |&w| -> Result<CheckLine> {
        let i = sweep.index[&ctx.sys.identity()];
        let j = sweep.index[&w];
        let ambient = sweep.interval(i, j)?;
        let nu = |x: Element| ctx.sys.inverse(apply_auto(&ctx.sys, &ctx.theta, x));
        let out = smith_fixed_check(&ambient, nu, config.face_cap)?;
        // fixed points of inv . theta are exactly the twisted involutions
        let twisted_count = ambient
            .poset
            .keys()
            .iter()
            .filter(|k| member_set.contains(k))
            .count();
        let pass = out.pass && out.fixed_point_count == twisted_count;
        let witness = format!(
            "r={} n={} fixed={}",
            out.r.map_or("none".into(), |r| r.to_string()),
            out.n,
            out.fixed_point_count
        );
        Ok(config.line(
            "smith",
            format!("smith:{}", ctx.sys.format(w)),
            pass,
            witness,
        ))
    });
    results.into_iter().collect()
}

fn render_matrix(m: &CoxeterMatrix) -> String {
    (0..m.rank())
        .map(|i| {
            (0..m.rank())
                .map(|j| m.bond(i, j).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn render_orbits(orbits: &[Vec<u8>]) -> String {
    orbits
        .iter()
        .map(|o| {
            format!(
                "{{{}}}",
                o.iter()
                    .map(|&s| (s + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Computes the folded Coxeter matrix and compares it against the
/// expected catalog type when one is given.
fn fold_matrices(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    if config.group_label == "E6" && !config.extended {
        return Err(CoxError::Resource(
            "folding E6 is gated behind --extended".into(),
        ));
    }
    let sys = config.system();
    let group = config.automorphism_group()?;
    let folded = fold(&sys, &group, config.order_cap)?;
    let mut checks = Vec::new();
    checks.push(config.line(
        "fold-matrices",
        "orbits".into(),
        true,
        render_orbits(&folded.orbits),
    ));
    match &config.expect {
        Some(name) => {
            let expected = catalog(name)?;
            let pass = folded.tilde_matrix.is_isomorphic(&expected);
            checks.push(config.line(
                "fold-matrices",
                format!("fold-matrix:{name}"),
                pass,
                render_matrix(&folded.tilde_matrix),
            ));
        }
        None => {
            checks.push(config.line(
                "fold-matrices",
                "fold-matrix".into(),
                true,
                render_matrix(&folded.tilde_matrix),
            ));
        }
    }
    Ok(checks)
}

/// Weak (or Bruhat) order isomorphism between the folded system and the
/// induced order on the fixed subgroup, with the supporting lemmas.
fn fold_order_iso(config: &SuiteConfig, bruhat: bool) -> Result<Vec<CheckLine>> {
    let suite = if bruhat { "fold-bruhat" } else { "fold-weak" };
    let sys = config.system();
    let group = config.automorphism_group()?;
    let folded = fold(&sys, &group, config.order_cap)?;
    let mut checks = Vec::new();
    let crisp = verify_crisp_lemma(&sys, &folded)?;
    checks.push(
        config.line(
            suite,
            "crisp".into(),
            crisp.pass,
            crisp
                .witness
                .unwrap_or_else(|| format!("checked={}", crisp.checked)),
        ),
    );
    let fixed = verify_fixed_subgroup(&sys, &group, &folded)?;
    checks.push(
        config.line(
            suite,
            "fixed-subgroup".into(),
            fixed.pass,
            fixed
                .witness
                .unwrap_or_else(|| format!("checked={}", fixed.checked)),
        ),
    );
    if bruhat {
        let iso = verify_bruhat_iso(&sys, &folded)?;
        checks.push(
            config.line(
                suite,
                "bruhat-iso".into(),
                iso.pass,
                iso.witness
                    .unwrap_or_else(|| format!("pairs={}", iso.checked)),
            ),
        );
        let steps = verify_length_steps(&sys, &group, &folded)?;
        checks.push(
            config.line(
                suite,
                "length-steps".into(),
                steps.pass,
                steps
                    .witness
                    .unwrap_or_else(|| format!("checked={}", steps.checked)),
            ),
        );
    } else {
        let iso = verify_weak_iso(&sys, &folded)?;
        checks.push(
            config.line(
                suite,
                "weak-iso".into(),
                iso.pass,
                iso.witness
                    .unwrap_or_else(|| format!("pairs={}", iso.checked)),
            ),
        );
        let transport = verify_chain_transport(&sys, &group, &folded)?;
        checks.push(
            config.line(
                suite,
                "chain-transport".into(),
                transport.pass,
                transport
                    .witness
                    .unwrap_or_else(|| format!("checked={}", transport.checked)),
            ),
        );
    }
    Ok(checks)
}

/// The w0-conjugation theorem: identify the odd-exponent type and verify
/// the induced order isomorphisms.
fn w0_theorem(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let sys = config.system();
    let report = verify_w0_theorem(&sys)?;
    let mut checks = Vec::new();
    checks.push(
        config.line(
            "w0-theorem",
            "exponents".into(),
            true,
            report
                .exponents
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
    );
    checks.push(config.line(
        "w0-theorem",
        format!("wminus:{}", report.wminus.name()),
        report.matrix_matches,
        format!(
            "odd-exponents={}",
            report
                .odd_exponents
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
    ));
    if report.conjugation_trivial {
        checks.push(config.line(
            "w0-theorem",
            "trivial-map".into(),
            true,
            "w0 conjugation fixes every generator".into(),
        ));
    } else {
        let weak = report.weak_iso.as_ref().unwrap();
        checks.push(
            config.line(
                "w0-theorem",
                "weak-iso".into(),
                weak.pass,
                weak.witness
                    .clone()
                    .unwrap_or_else(|| format!("pairs={}", weak.checked)),
            ),
        );
        let bruhat = report.bruhat_iso.as_ref().unwrap();
        checks.push(
            config.line(
                "w0-theorem",
                "bruhat-iso".into(),
                bruhat.pass,
                bruhat
                    .witness
                    .clone()
                    .unwrap_or_else(|| format!("pairs={}", bruhat.checked)),
            ),
        );
    }
    Ok(checks)
}

/// The production Bruhat recursion agrees with the subword oracle, on
/// all pairs or on a seeded sample.
fn deodhar_oracle(config: &SuiteConfig) -> Result<Vec<CheckLine>> {
    let sys = config.system();
    let ball = config.ball(&sys)?;
    let n = ball.len();
    let pairs: Vec<(usize, usize)> = if config.samples == 0 {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        (0..config.samples)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect()
    };
    let results = exec::map_collect(&pairs, |&(i, j)| {
        let (u, v) = (ball.elements[i], ball.elements[j]);
        let recursive = bruhat_leq(&sys, u, v);
        let subword = bruhat_leq_subword(&sys, u, v);
        (recursive == subword, u, v)
    });
    let mut pass = true;
    let mut witness = format!("pairs={}", pairs.len());
    for (ok, u, v) in results {
        if !ok {
            pass = false;
            witness = format!("mismatch at ({}, {})", sys.format(u), sys.format(v));
            break;
        }
    }
    Ok(vec![config.line(
        "deodhar-oracle",
        "agreement".into(),
        pass,
        witness,
    )])
}
