use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::rng::trial_rng;
use super::{sample, Bound, CheckResult, RankRow, Suite, SuiteReport, VerificationConfig};
use crate::dirac::{boost_or_rotate_state, dirac_residual, lepton_spectrum, Label};
use crate::group::{
    build_transform, catalog, g2_automorphism, g2_families, BlockType, G2Class, GeneratorFamily,
    InnerAutomorphism,
};
use crate::jordan::{
    eigenvalues, op2_membership, spectral_decompose, transition_probability, CayleySpinor,
    HermitianMatrix3, SpectralPath,
};
use crate::lie::{naive_span, subgroup_dimensions, triality_check, TangentCache, MIN_GAP};
use crate::octonion::{associator, Octonion, Unit};

const FIXED_PARAMS: [f64; 6] = [0.1, -0.1, 0.7, -0.7, 2.3, -2.3];

/// Running statistics for one property.
struct Stat {
    name: &'static str,
    bound: Bound,
    tol: f64,
    count: usize,
    max: f64,
    min: f64,
    sum: f64,
    witness: Option<String>,
}

impl Stat {
    fn new(name: &'static str, bound: Bound, tol: f64) -> Self {
        Stat {
            name,
            bound,
            tol,
            count: 0,
            max: f64::NEG_INFINITY,
            min: f64::INFINITY,
            sum: 0.0,
            witness: None,
        }
    }

    fn at_most(name: &'static str, tol: f64) -> Self {
        Self::new(name, Bound::AtMost, tol)
    }

    fn push(&mut self, r: f64) {
        self.push_with(r, || None);
    }

    /// Records `r`; `witness` describes it if it becomes the extreme value
    /// that decides the check.
    fn push_with(&mut self, r: f64, witness: impl FnOnce() -> Option<String>) {
        self.count += 1;
        self.sum += r;
        let decisive = match self.bound {
            Bound::AtMost | Bound::SomeAbove => r.is_nan() || r > self.max,
            Bound::AllAbove => r.is_nan() || r < self.min,
        };
        if !self.max.is_nan() && !self.min.is_nan() && decisive {
            if let Some(w) = witness() {
                self.witness = Some(w);
            }
        }
        if r.is_nan() {
            self.max = f64::NAN;
            self.min = f64::NAN;
        } else if !self.max.is_nan() {
            self.max = self.max.max(r);
            self.min = self.min.min(r);
        }
    }

    fn finish(self) -> CheckResult {
        let passed = self.count > 0
            && match self.bound {
                Bound::AtMost => self.max <= self.tol,
                Bound::AllAbove => self.min > self.tol,
                Bound::SomeAbove => self.max > self.tol,
            };
        let finite = |x: f64| if x.is_finite() { x } else { f64::NAN };
        CheckResult {
            name: self.name.to_string(),
            bound: self.bound,
            tolerance: self.tol,
            count: self.count,
            max: finite(self.max),
            min: finite(self.min),
            mean: if self.count > 0 { self.sum / self.count as f64 } else { f64::NAN },
            passed,
            witness: self.witness,
        }
    }
}

struct Ctx<'a> {
    config: &'a VerificationConfig,
    suite: Suite,
}

impl Ctx<'_> {
    fn rng(&self, property: &str, trial: usize) -> ChaCha8Rng {
        trial_rng(
            self.config.seed,
            &format!("{}/{property}", self.suite.name()),
            trial as u64,
        )
    }

    fn tol(&self, name: &str) -> f64 {
        self.config.tol(name)
    }

    fn trials(&self) -> usize {
        self.config.trials.max(1)
    }

    fn tenth(&self) -> usize {
        (self.config.trials / 10).max(10)
    }
}

pub fn run_suite(suite: Suite, config: &VerificationConfig) -> SuiteReport {
    let ctx = Ctx { config, suite };
    let (stats, ranks) = match suite {
        Suite::Octonion => (octonion(&ctx), vec![]),
        Suite::Jordan => (jordan(&ctx), vec![]),
        Suite::E6 => (e6(&ctx), vec![]),
        Suite::TraceIdentity => (trace_identity(&ctx), vec![]),
        Suite::InnerAutomorphism => (inner(&ctx), vec![]),
        Suite::Spectral => (spectral(&ctx), vec![]),
        Suite::G2 => (g2(&ctx), vec![]),
        Suite::Dirac => (dirac(&ctx), vec![]),
        Suite::Dims => dims(),
    };
    let checks: Vec<CheckResult> = stats.into_iter().map(Stat::finish).collect();
    SuiteReport {
        name: suite.name().to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
        ranks,
    }
}

fn octonion(ctx: &Ctx) -> Vec<Stat> {
    let mut anchored = Stat::at_most("anchored_products", 0.0);
    let u = |x: Unit| Octonion::<f64>::unit(x);
    let cases = [
        (u(Unit::I).mul(&u(Unit::J)), u(Unit::K)),
        (u(Unit::K).mul(&u(Unit::L)), u(Unit::KL)),
        (u(Unit::L).mul(&u(Unit::KL)), u(Unit::K)),
        (u(Unit::KL).mul(&u(Unit::K)), u(Unit::L)),
        (u(Unit::I).mul(&u(Unit::J)).mul(&u(Unit::L)), u(Unit::KL)),
        (u(Unit::I).mul(&u(Unit::J).mul(&u(Unit::L))), -u(Unit::KL)),
    ];
    for (got, want) in cases {
        anchored.push((got - want).max_abs());
    }
    for a in Unit::ALL {
        for b in Unit::ALL {
            let ab = u(a).mul(&u(b));
            let want = if a == b { -Octonion::one() } else { -u(b).mul(&u(a)) };
            anchored.push((ab - want).max_abs());
        }
    }

    let mut composition = Stat::at_most("composition", ctx.tol("composition"));
    let mut inverse = Stat::at_most("inverse", ctx.tol("composition"));
    for t in 0..10 * ctx.trials() {
        let mut rng = ctx.rng("composition", t);
        let (a, b) = (sample::octonion(&mut rng), sample::octonion(&mut rng));
        let (na, nb) = (a.norm(), b.norm());
        composition.push((a.mul(&b).norm() - na * nb).abs() / (na * nb).max(f64::MIN_POSITIVE));
        if t % 10 == 0 {
            let inv = a.inverse().expect("random octonion is nonzero");
            let r = (a.mul(&inv) - Octonion::one()).max_abs().max((inv.mul(&a) - Octonion::one()).max_abs());
            inverse.push(r);
        }
    }

    let mut alternativity = Stat::at_most("alternativity", ctx.tol("alternativity"));
    let mut antisymmetry = Stat::at_most("associator_antisymmetry", ctx.tol("antisymmetry"));
    let mut quaternionic = Stat::at_most("quaternionic_associator", ctx.tol("antisymmetry"));
    for t in 0..ctx.trials() {
        let mut rng = ctx.rng("associator", t);
        let (a, b, c) = (sample::octonion(&mut rng), sample::octonion(&mut rng), sample::octonion(&mut rng));
        alternativity.push(associator(&a, &a, &b).max_abs().max(associator(&a, &b, &b).max_abs()));
        let base = associator(&a, &b, &c);
        let perms = [
            (associator(&b, &c, &a), base),
            (associator(&c, &a, &b), base),
            (associator(&b, &a, &c), -base),
            (associator(&a, &c, &b), -base),
            (associator(&c, &b, &a), -base),
            (associator(&a.conj(), &b, &c), -base),
            (associator(&a, &b.conj(), &c), -base),
            (associator(&a, &b, &c.conj()), -base),
        ];
        antisymmetry.push(perms.iter().map(|(x, y)| (*x - *y).max_abs()).fold(0.0, f64::max));
        let (p, q, r) = (sample::quaternion(&mut rng), sample::quaternion(&mut rng), sample::quaternion(&mut rng));
        quaternionic.push(associator(&p, &q, &r).max_abs());
    }
    vec![anchored, composition, inverse, alternativity, antisymmetry, quaternionic]
}

fn jordan(ctx: &Ctx) -> Vec<Stat> {
    let mut identity = Stat::at_most("jordan_identity", ctx.tol("jordan_identity"));
    let mut power = Stat::at_most("power_associativity", ctx.tol("jordan_identity"));
    let mut sigma = Stat::at_most("sigma_formulas", ctx.tol("sigma"));
    let mut ch = Stat::at_most("cayley_hamilton", ctx.tol("cayley_hamilton"));
    for t in 0..ctx.trials() {
        let mut rng = ctx.rng("pairs", t);
        let a = sample::hermitian(&mut rng);
        let b = sample::hermitian(&mut rng);
        let (na, nb) = (a.norm(), b.norm());
        let a2 = a.square();
        let lhs = a.jordan(&b).jordan(&a2);
        let rhs = a.jordan(&b.jordan(&a2));
        identity.push((lhs - rhs).norm() / (na * na * nb));
        power.push((a2.square() - a.jordan(&a.jordan(&a2))).norm() / na.powi(4));
        sigma.push((a.sigma() - a.sigma_from_adjugate()).abs() / (na * na));
        let (tr, s, d) = a.invariants();
        match eigenvalues(&a) {
            Ok(l) => {
                let e1 = l[0] + l[1] + l[2];
                let e2 = l[0] * l[1] + l[0] * l[2] + l[1] * l[2];
                let e3 = l[0] * l[1] * l[2];
                let r = ((e1 - tr).abs() / na)
                    .max((e2 - s).abs() / (na * na))
                    .max((e3 - d).abs() / na.powi(3));
                ch.push(r);
            }
            Err(_) => ch.push(f64::INFINITY),
        }
    }
    vec![identity, power, sigma, ch]
}

/// Matrices with 3, 2 and 1 nonzero eigenvalues.
fn rank_representatives(rng: &mut ChaCha8Rng) -> [(usize, HermitianMatrix3<f64>); 3] {
    let f = sample::frame(rng);
    let mut lam = || {
        let m = rng.random_range(0.5..=2.0);
        if rng.random::<bool>() {
            m
        } else {
            -m
        }
    };
    let (l1, l2, l3) = (lam(), lam(), lam());
    [
        (3, f[0].scale(l1) + f[1].scale(l2) + f[2].scale(l3)),
        (2, f[0].scale(l1) + f[1].scale(l2)),
        (1, f[0].scale(l1)),
    ]
}

fn e6(ctx: &Ctx) -> Vec<Stat> {
    let cat = catalog();
    let mut det = Stat::at_most("det_preserved", ctx.tol("det"));
    let mut trace = Stat::at_most("rotations_preserve_trace", ctx.tol("trace"));
    let mut boost_trace = Stat::new("boosts_move_trace", Bound::SomeAbove, 1e-3);
    let mut sigma_zero = Stat::at_most("sigma_zero_preserved", ctx.tol("sigma_zero"));
    let mut counts = Stat::at_most("eigenvalue_count_preserved", 0.0);
    let mut closure = Stat::at_most("composition_preserves_det", ctx.tol("det"));

    let mut draws: Vec<(GeneratorFamily, f64)> = Vec::new();
    for f in &cat {
        draws.extend(FIXED_PARAMS.map(|p| (*f, p)));
    }
    for t in 0..ctx.tenth() {
        let mut rng = ctx.rng("draw", t);
        draws.push((cat[rng.random_range(0..cat.len())], rng.random_range(-2.5..=2.5)));
    }

    for (t, (f, p)) in draws.iter().enumerate() {
        let mut rng = ctx.rng("triple", t);
        let x = sample::hermitian(&mut rng);
        let g = build_transform(f, *p);
        let Ok(y) = g.apply(&x) else {
            det.push(f64::INFINITY);
            continue;
        };
        let d = x.det();
        det.push_with((y.det() - d).abs() / d.abs().max(1.0), || Some(format!("{f} at {p}")));
        let dt = (y.trace() - x.trace()).abs();
        if f.is_boost() {
            boost_trace.push_with(dt, || Some(format!("{f} at {p}")));
        } else {
            trace.push_with(dt / x.norm().max(1.0), || Some(format!("{f} at {p}")));
        }

        let psi = sample::cayley_spinor(&mut rng);
        let v = psi.outer().scale(rng.random_range(0.5..=2.0));
        match g.apply(&v) {
            Ok(w) => sigma_zero.push_with(w.sigma().abs(), || Some(format!("{f} at {p}"))),
            Err(_) => sigma_zero.push(f64::INFINITY),
        }

        for (rank, rep) in rank_representatives(&mut rng) {
            let before = rep.nonzero_eigenvalue_count(1e-9);
            let after = g.apply(&rep).map(|m| m.nonzero_eigenvalue_count(1e-9));
            let r = match after {
                Ok(a) => (a as f64 - rank as f64).abs().max((before as f64 - rank as f64).abs()),
                Err(_) => f64::INFINITY,
            };
            counts.push_with(r, || Some(format!("{f} at {p}, rank {rank}")));
        }

        let (f2, p2) = draws[rng.random_range(0..draws.len())];
        let z = g.apply(&x).and_then(|y| build_transform(&f2, p2).apply(&y));
        match z {
            Ok(z) => closure.push((z.det() - d).abs() / d.abs().max(1.0)),
            Err(_) => closure.push(f64::INFINITY),
        }
    }
    vec![det, trace, boost_trace, sigma_zero, counts, closure]
}

fn quaternionic_spinor(rng: &mut ChaCha8Rng) -> CayleySpinor<f64> {
    CayleySpinor::new([0; 3].map(|_| sample::quaternion(rng))).normalized()
}

fn trace_identity(ctx: &Ctx) -> Vec<Stat> {
    let mut quaternionic = Stat::at_most("quaternionic_equality", ctx.tol("trace_identity"));
    let mut octonionic = Stat::new(
        "octonionic_discrepancy",
        Bound::SomeAbove,
        ctx.tol("trace_identity_witness"),
    );
    for t in 0..ctx.tenth() {
        let mut rng = ctx.rng("quaternionic", t);
        let (v, w) = (quaternionic_spinor(&mut rng), quaternionic_spinor(&mut rng));
        quaternionic.push((transition_probability(&v, &w) - v.inner(&w).norm_sq()).abs());

        let mut rng = ctx.rng("octonionic", t);
        let (v, w) = (sample::cayley_spinor(&mut rng), sample::cayley_spinor(&mut rng));
        let d = (transition_probability(&v, &w) - v.inner(&w).norm_sq()).abs();
        octonionic.push_with(d, || Some(format!("trial {t}: v = {:?}, w = {:?}", v.components.map(|c| c.coeffs), w.components.map(|c| c.coeffs))));
    }
    vec![quaternionic, octonionic]
}

fn inner(ctx: &Ctx) -> Vec<Stat> {
    let mut valid = Stat::at_most("sixth_roots_are_automorphisms", ctx.tol("inner"));
    let mut invalid = Stat::new("eighth_root_violates", Bound::AllAbove, ctx.tol("inner_violation"));
    let mut zero = Stat::at_most("zero_conjugator_rejected", 0.0);
    zero.push(if InnerAutomorphism::new(Octonion::<f64>::zero()).is_err() { 0.0 } else { 1.0 });

    let mut directions: Vec<(String, Octonion<f64>)> =
        Unit::ALL.iter().map(|u| (u.symbol().to_string(), Octonion::unit(*u))).collect();
    for t in 0..(ctx.trials() / 100).max(10) {
        let mut rng = ctx.rng("direction", t);
        directions.push((format!("random #{t}"), sample::unit_imaginary(&mut rng)));
    }
    for (name, s) in &directions {
        for n in 0..6 {
            let g = InnerAutomorphism::sixth_root(n, s).expect("unit imaginary");
            let w = g.witness();
            valid.push_with(w.residual, || Some(format!("n = {n}, ŝ = {name}: x = {}, y = {}", w.x, w.y)));
        }
        let a = Octonion::exp_unit(s, std::f64::consts::FRAC_PI_4).expect("unit imaginary");
        let w = InnerAutomorphism::new(a).expect("nonzero").witness();
        invalid.push_with(w.residual, || {
            Some(format!("a = e^(π{name}/4): x = {}, y = {}, residual {:.6}", w.x, w.y, w.residual))
        });
    }
    vec![valid, invalid, zero]
}

/// Eigenvalues in `[−5, 5]`, descending, at least `gap` apart.
fn separated_eigenvalues(rng: &mut ChaCha8Rng, gap: f64) -> [f64; 3] {
    loop {
        let mut l: [f64; 3] = std::array::from_fn(|_| rng.random_range(-5.0..=5.0));
        l.sort_by(|a, b| b.total_cmp(a));
        if l[0] - l[1] >= gap && l[1] - l[2] >= gap {
            return l;
        }
    }
}

fn spectral(ctx: &Ctx) -> Vec<Stat> {
    let tol = ctx.tol("spectral");
    let mut eig = Stat::at_most("eigenvalues_recovered", tol);
    let mut res = Stat::at_most("frame_residuals", tol);
    let mut frame = Stat::at_most("idempotents_recovered", tol);
    let mut assoc = Stat::at_most("idempotent_associator", 1e-10);
    let mut paths = Stat::at_most("path_mismatches", 0.0);
    let mut doublet = Stat::at_most("doublet_residuals", tol);
    let mut triple = Stat::at_most("triple_residuals", tol);

    for t in 0..ctx.tenth() {
        let mut rng = ctx.rng("frame", t);
        let v = sample::frame(&mut rng);
        let l = separated_eigenvalues(&mut rng, 0.5);
        let a = v[0].scale(l[0]) + v[1].scale(l[1]) + v[2].scale(l[2]);
        let scale = a.norm();
        let Ok(d) = spectral_decompose(&a) else {
            eig.push(f64::INFINITY);
            continue;
        };
        let got = d.eigenvalues();
        eig.push((0..3).map(|i| (got[i] - l[i]).abs()).fold(0.0, f64::max) / scale);
        res.push(d.residuals(&a).max() / scale);
        let vs = d.idempotents();
        frame.push((0..3).map(|i| (vs[i] - v[i]).norm()).fold(0.0, f64::max));
        for p in &vs {
            assoc.push(op2_membership(p, 1e-8).associator);
        }
        paths.push(if d.path == SpectralPath::Distinct { 0.0 } else { 1.0 });
    }

    for t in 0..(ctx.tenth() / 10).max(5) {
        let mut rng = ctx.rng("degenerate", t);
        let v = sample::frame(&mut rng);
        let l = separated_eigenvalues(&mut rng, 0.5);
        // doublet on top, doublet at the bottom, and a triple
        let cases = [
            (v[0].scale(l[0]) + v[1].scale(l[0]) + v[2].scale(l[2]), [l[0], l[0], l[2]], SpectralPath::Doublet),
            (v[0].scale(l[0]) + v[1].scale(l[2]) + v[2].scale(l[2]), [l[0], l[2], l[2]], SpectralPath::Doublet),
            ((v[0] + v[1] + v[2]).scale(l[1]), [l[1]; 3], SpectralPath::Triple),
        ];
        for (a, want, path) in cases {
            let scale = a.norm();
            let Ok(d) = spectral_decompose(&a) else {
                paths.push(1.0);
                continue;
            };
            let got = d.eigenvalues();
            let r = (0..3)
                .map(|i| (got[i] - want[i]).abs())
                .fold(d.residuals(&a).max(), f64::max)
                / scale;
            match path {
                SpectralPath::Triple => triple.push(r),
                _ => doublet.push(r),
            }
            paths.push(if d.path == path { 0.0 } else { 1.0 });
        }
    }
    vec![eig, res, frame, assoc, paths, doublet, triple]
}

fn g2(ctx: &Ctx) -> Vec<Stat> {
    let tol = ctx.tol("automorphism");
    let mut hom = Stat::at_most("homomorphism", tol);
    let mut fixes_target = Stat::at_most("fixes_target", tol);
    let mut fixes_l = Stat::at_most("classes_1_3_fix_l", tol);
    let mut moves_l = Stat::new("class_2_moves_l", Bound::AllAbove, 1e-3);
    let l = Octonion::unit(Unit::L);
    for (i, f) in g2_families().iter().enumerate() {
        let GeneratorFamily::G2 { class, target } = *f else {
            unreachable!("G2 families only")
        };
        let mut alphas = FIXED_PARAMS.to_vec();
        for t in 0..(ctx.trials() / 100).max(5) {
            alphas.push(ctx.rng("alpha", i * 1_000_000 + t).random_range(-3.0..=3.0));
        }
        for (k, &alpha) in alphas.iter().enumerate() {
            let g = g2_automorphism(class, target, alpha);
            hom.push_with(g.homomorphism_residual(), || Some(format!("{f} at {alpha}")));
            let u = Octonion::unit(target);
            fixes_target.push((g.apply(&u) - u).norm());
            let moved = (g.apply(&l) - l).norm();
            match class {
                G2Class::Two if k < FIXED_PARAMS.len() => moves_l.push_with(moved, || Some(format!("{f} at {alpha}"))),
                G2Class::Two => {}
                _ => fixes_l.push_with(moved, || Some(format!("{f} at {alpha}"))),
            }
        }
    }
    vec![hom, fixes_target, fixes_l, moves_l]
}

fn dirac(ctx: &Ctx) -> Vec<Stat> {
    let tol = ctx.tol("dirac");
    let mut equation = Stat::at_most("dirac_equation", tol);
    let mut massless = Stat::at_most("det_p", tol);
    let mut star = Stat::at_most("star_blocks", tol);
    let mut plane = Stat::at_most("normalized_state_in_cayley_plane", tol);
    let mut compat = Stat::at_most("compatibility", ctx.tol("compatibility"));
    let mut moved = Stat::at_most("transformed_states_solve", ctx.tol("compatibility"));
    let mut census = Stat::at_most("generation_census", 0.0);

    let states = lepton_spectrum::<f64>();
    let mut gens: Vec<_> = states.iter().filter_map(|s| s.generation).collect();
    gens.sort_by_key(|g| *g as u8);
    gens.dedup();
    let sterile = states.iter().filter(|s| s.label == Label::Sterile).count();
    census.push((gens.len() as f64 - 3.0).abs() + (sterile as f64 - 1.0).abs() + (states.len() as f64 - 16.0).abs());

    for s in &states {
        let b = s.block();
        let (r, det) = dirac_residual(&b.p, &b.psi);
        let who = || Some(s.tag());
        equation.push_with(r, who);
        massless.push_with(det.abs(), who);
        star.push_with(b.star_blocks().max_abs(), who);
        let m = b.to_matrix();
        let mem = op2_membership(&m.scale(1.0 / m.trace()), tol);
        plane.push_with(mem.idempotency.max(mem.adjugate).max(mem.trace), who);
    }

    let type_i: Vec<_> = catalog()
        .into_iter()
        .filter(|f| {
            matches!(
                f,
                GeneratorFamily::Rotation { block: BlockType::I, .. } | GeneratorFamily::Boost { block: BlockType::I, .. }
            )
        })
        .collect();
    for (i, f) in type_i.iter().enumerate() {
        for t in 0..10 {
            let p = ctx.rng("param", i * 10 + t).random_range(-2.5..=2.5);
            for s in &states {
                match boost_or_rotate_state(s, f, p) {
                    Ok((next, r)) => {
                        compat.push_with(r, || Some(format!("{f} at {p} on {}", s.tag())));
                        let b = next.block();
                        let (res, det) = dirac_residual(&b.p, &b.psi);
                        let scale = b.p.trace().max(1.0);
                        moved.push(res.max(det.abs()) / scale.powf(1.5));
                    }
                    Err(_) => compat.push(f64::INFINITY),
                }
            }
        }
    }
    vec![equation, massless, star, plane, compat, moved, census]
}

fn dims() -> (Vec<Stat>, Vec<RankRow>) {
    let mut mismatches = Stat::at_most("rank_mismatches", 0.0);
    let mut gaps = Stat::new("spectral_gap", Bound::AllAbove, MIN_GAP);
    let cache = match TangentCache::<f64>::build() {
        Ok(c) => c,
        Err(e) => {
            mismatches.push_with(f64::INFINITY, || Some(e.to_string()));
            return (vec![mismatches, gaps], vec![]);
        }
    };
    let mut checks = subgroup_dimensions(&cache).unwrap_or_default();
    checks.extend(triality_check(&cache));
    checks.extend(naive_span(&cache));
    let rows: Vec<RankRow> = checks
        .iter()
        .map(|c| RankRow {
            subset: c.report.name.clone(),
            rank: c.report.rank,
            expected: c.expected,
            gap: c.report.gap,
            conclusive: c.report.conclusive,
        })
        .collect();
    if rows.len() != 9 {
        mismatches.push_with(f64::INFINITY, || Some("missing subsets".into()));
    }
    for r in &rows {
        let who = || Some(r.subset.clone());
        mismatches.push_with((r.rank as f64 - r.expected as f64).abs(), who);
        gaps.push_with(r.gap, who);
    }
    (vec![mismatches, gaps], rows)
}
