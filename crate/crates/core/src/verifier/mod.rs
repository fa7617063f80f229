//! Seeded Monte-Carlo checks of the closed-form moment-map identities.
//!
//! Each property draws its samples from its own RNG stream (see
//! [`sample_rng`]), so a report depends only on the seed, the property and
//! the sample count. Properties whose preconditions fail (a critical ray, a
//! non-generic representation, a missing `ν`) are reported as skipped with
//! the machine-readable error code instead of aborting the suite.

mod rank;
mod sampling;

pub use rank::{field_of, fundamental_fields, numeric_rank};
pub use sampling::{
    mtnu_residual, sample_mtnu, sample_rng, sample_unit, sample_unit_vector,
    sample_weighted_sphere, MAX_RESAMPLES,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dh_classifier::mu_k_weights;
use crate::error::{Error, Result};
use crate::moment_eval::{
    act, conjugate_diag, equivariance_residual, eta_moment_scalar, exp_antidiag,
    exp_antidiag_series, phi_block, phi_rep, upsilon, weighted_moment, Hermitian2, LieElement,
    ProjVector,
};
use crate::orbit_geometry::{moment_polytope, psi_transverse, RayDir, Verdict};
use crate::rep_model::{IndexPair, RepDescriptor};

/// Residual bound for central differences at the default step.
pub const FD_TOL: f64 = 1e-6;
/// Accepted range of `residual(2h) / residual(h)` for a second-order scheme.
pub const FD_RATIO_RANGE: (f64, f64) = (3.5, 4.5);
/// Residuals below this are dominated by rounding and skip the ratio test.
pub const FD_RATIO_FLOOR: f64 = 1e-10;
/// Terms of the exponential series used as the oracle for `exp_antidiag`.
pub const EXP_SERIES_TERMS: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol_alg: f64,
    pub tol_eig: f64,
    pub fd_step: f64,
    pub rank_rel_tol: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 1000,
            seed: 0,
            tol_alg: 1e-12,
            tol_eig: 1e-9,
            fd_step: 1e-4,
            rank_rel_tol: 1e-8,
        }
    }
}

impl SampleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::OutOfRange("samples must be positive".into()));
        }
        let tols = [self.tol_alg, self.tol_eig, self.fd_step, self.rank_rel_tol];
        if tols.iter().any(|t| !t.is_finite() || *t <= 0.0) {
            return Err(Error::OutOfRange(
                "tolerances and step must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Skip {
    pub code: &'static str,
    pub message: String,
}

impl From<Error> for Skip {
    fn from(e: Error) -> Self {
        Skip {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: &'static str,
    pub pass: bool,
    pub samples: usize,
    pub max_residual: Option<f64>,
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<Skip>,
}

impl PropertyReport {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    /// Failed on evidence, as opposed to skipped.
    pub fn is_failure(&self) -> bool {
        !self.pass && self.skipped.is_none()
    }
}

/// The suite's properties, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    PsdTrace,
    HullContainment,
    TraceFormula,
    Equivariance,
    ExpOracle,
    Conjugation,
    MtnuMembership,
    TorusLocalFreeness,
    GroupLocalFreeness,
    NormBound,
    UpsilonEquivariance,
    WeightedMomentHomogeneity,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::PsdTrace,
        Property::HullContainment,
        Property::TraceFormula,
        Property::Equivariance,
        Property::ExpOracle,
        Property::Conjugation,
        Property::MtnuMembership,
        Property::TorusLocalFreeness,
        Property::GroupLocalFreeness,
        Property::NormBound,
        Property::UpsilonEquivariance,
        Property::WeightedMomentHomogeneity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::PsdTrace => "psd_trace",
            Property::HullContainment => "hull_containment",
            Property::TraceFormula => "trace_formula",
            Property::Equivariance => "equivariance",
            Property::ExpOracle => "exp_oracle",
            Property::Conjugation => "conjugation",
            Property::MtnuMembership => "mtnu_membership",
            Property::TorusLocalFreeness => "torus_local_freeness",
            Property::GroupLocalFreeness => "group_local_freeness",
            Property::NormBound => "norm_bound",
            Property::UpsilonEquivariance => "upsilon_equivariance",
            Property::WeightedMomentHomogeneity => "weighted_moment_homogeneity",
        }
    }

    /// RNG stream id; stable across releases.
    pub fn stream(&self) -> u64 {
        Property::ALL
            .iter()
            .position(|p| p == self)
            .expect("listed") as u64
            + 1
    }

    pub fn needs_nu(&self) -> bool {
        matches!(
            self,
            Property::MtnuMembership
                | Property::TorusLocalFreeness
                | Property::GroupLocalFreeness
                | Property::NormBound
        )
    }
}

/// Running maximum of a residual with the input that produced it.
struct Worst {
    residual: f64,
    witness: Option<Value>,
    samples: usize,
    violations: usize,
}

impl Worst {
    fn new() -> Self {
        Worst {
            residual: 0.0,
            witness: None,
            samples: 0,
            violations: 0,
        }
    }

    fn record(&mut self, residual: f64, ok: bool, witness: impl FnOnce() -> Value) {
        self.samples += 1;
        if !ok {
            self.violations += 1;
        }
        // NaN counts as worst
        if residual.is_nan() || residual > self.residual || self.witness.is_none() {
            self.residual = if residual.is_nan() {
                f64::INFINITY
            } else {
                residual
            };
            self.witness = Some(witness());
        }
    }

    fn finish(self, property: Property) -> PropertyReport {
        PropertyReport {
            property: property.name(),
            pass: self.violations == 0 && self.samples > 0,
            samples: self.samples,
            max_residual: Some(self.residual),
            witness: self.witness,
            skipped: None,
        }
    }
}

struct Ctx<'a> {
    rep: &'a RepDescriptor,
    nu: Option<RayDir>,
    cfg: &'a SampleConfig,
}

impl Ctx<'_> {
    fn rng(&self, p: Property, i: usize) -> rand_chacha::ChaCha8Rng {
        sample_rng(self.cfg.seed, p.stream(), i as u64)
    }

    fn nu(&self) -> Result<RayDir> {
        self.nu
            .ok_or_else(|| Error::Malformed("property needs --nu".into()))
    }

    /// `ν`, required to be a transverse ray meeting the image.
    fn transverse_nu(&self) -> Result<RayDir> {
        let nu = self.nu()?;
        match psi_transverse(self.rep, &nu)? {
            Verdict::Transverse => Ok(nu),
            Verdict::Critical(w) => Err(Error::CriticalRay(w)),
            Verdict::MissesImage => Err(Error::OutsideImage),
        }
    }
}

fn vec_json(z: &ProjVector) -> Value {
    serde_json::to_value(z).expect("vector serializes")
}

fn c_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn mat_json(m: &nalgebra::Matrix2<Complex64>) -> Value {
    json!([
        [c_json(m[(0, 0)]), c_json(m[(0, 1)])],
        [c_json(m[(1, 0)]), c_json(m[(1, 1)])]
    ])
}

/// Uniformly random direction in `u(2)`, unit Frobenius norm.
fn random_lie<R: Rng + ?Sized>(rng: &mut R) -> LieElement {
    let h = Hermitian2::new(
        rng.sample(rand_distr::StandardNormal),
        rng.sample(rand_distr::StandardNormal),
        Complex64::new(
            rng.sample(rand_distr::StandardNormal),
            rng.sample(rand_distr::StandardNormal),
        ),
    );
    LieElement::from_hermitian(&h.scale(1.0 / h.frobenius()))
}

fn random_disk<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
}

fn psd_trace(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::PsdTrace;
    if ctx.rep.summands().iter().all(|s| s.k == 0) {
        return Err(Error::OutOfRange("no summand with k >= 1".into()));
    }
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let z = sample_unit_vector(ctx.rep, &mut ctx.rng(p, i));
        for (s, zb) in ctx.rep.summands().iter().zip(z.blocks()) {
            if s.k == 0 || zb.iter().all(|c| c.norm_sqr() == 0.0) {
                continue;
            }
            let h = phi_block(s.k as usize, s.l, zb)?.sub(&Hermitian2::scalar(s.l as f64));
            let trace_err = (h.trace() - s.k as f64).abs();
            let psd_err = (-h.eigenvalues().0).max(0.0);
            let ok = trace_err <= ctx.cfg.tol_alg && psd_err <= ctx.cfg.tol_eig;
            worst.record(
                trace_err.max(psd_err),
                ok,
                || json!({ "z": vec_json(&z), "k": s.k, "l": s.l }),
            );
        }
    }
    Ok(worst.finish(p))
}

fn hull_containment(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::HullContainment;
    let poly = moment_polytope(ctx.rep)?;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let z = sample_unit_vector(ctx.rep, &mut ctx.rng(p, i));
        let h = phi_rep(ctx.rep, &z)?;
        let d = poly
            .distance_to(h.eigenvalues())
            .max(poly.distance_to(h.diagonal()));
        worst.record(d, d <= ctx.cfg.tol_eig, || json!({ "z": vec_json(&z) }));
    }
    Ok(worst.finish(p))
}

fn trace_formula(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::TraceFormula;
    let never_zero = ctx.rep.moment_never_zero();
    let min_abs = ctx
        .rep
        .summands()
        .iter()
        .map(|s| s.trace_weight().abs())
        .min()
        .unwrap_or(0) as f64;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let z = sample_unit_vector(ctx.rep, &mut ctx.rng(p, i));
        let h = phi_rep(ctx.rep, &z)?;
        let total = z.norm_sqr();
        let want: f64 = ctx
            .rep
            .summands()
            .iter()
            .zip(z.blocks())
            .map(|(s, b)| {
                s.trace_weight() as f64 * b.iter().map(|c| c.norm_sqr()).sum::<f64>() / total
            })
            .sum();
        let err = (h.trace() - want).abs();
        let bounded_away = !never_zero || h.trace().abs() >= min_abs - ctx.cfg.tol_alg;
        worst.record(
            err,
            err <= ctx.cfg.tol_alg && bounded_away,
            || json!({ "z": vec_json(&z) }),
        );
    }
    Ok(worst.finish(p))
}

fn equivariance(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::Equivariance;
    let h = ctx.cfg.fd_step;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let mut rng = ctx.rng(p, i);
        let z = sample_unit_vector(ctx.rep, &mut rng);
        let alpha = random_lie(&mut rng);
        let r1 = equivariance_residual(ctx.rep, &z, &alpha, h)?;
        let r2 = equivariance_residual(ctx.rep, &z, &alpha, 2.0 * h)?;
        let ratio = r2 / r1;
        let ratio_ok =
            r1 <= FD_RATIO_FLOOR || (FD_RATIO_RANGE.0..=FD_RATIO_RANGE.1).contains(&ratio);
        worst.record(
            r1,
            r1 <= FD_TOL && ratio_ok,
            || json!({ "z": vec_json(&z), "alpha": mat_json(alpha.matrix()), "ratio": ratio }),
        );
    }
    Ok(worst.finish(p))
}

fn max_entry_diff(a: &nalgebra::Matrix2<Complex64>, b: &nalgebra::Matrix2<Complex64>) -> f64 {
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn exp_oracle(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::ExpOracle;
    let mut worst = Worst::new();
    let i2 = nalgebra::Matrix2::<Complex64>::identity();
    let swap = nalgebra::Matrix2::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, 0.0),
    );
    for (z, want) in [
        (Complex64::new(0.0, 0.0), i2),
        (Complex64::new(PI / 2.0, 0.0), swap),
    ] {
        let err = max_entry_diff(&exp_antidiag(z), &want);
        worst.record(err, err <= 1e-15, || json!({ "anchor": c_json(z) }));
    }
    for i in 0..ctx.cfg.samples {
        let z = random_disk(&mut ctx.rng(p, i), PI);
        let g = exp_antidiag(z);
        let err = max_entry_diff(&g, &exp_antidiag_series(z, EXP_SERIES_TERMS));
        let unit = max_entry_diff(&(g * g.adjoint()), &i2);
        let det = (g.determinant() - 1.0).norm();
        let r = err.max(unit).max(det);
        worst.record(r, r <= ctx.cfg.tol_alg, || json!({ "z": c_json(z) }));
    }
    Ok(worst.finish(p))
}

fn conjugation(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::Conjugation;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let mut rng = ctx.rng(p, i);
        let z = random_disk(&mut rng, PI);
        let nu = (rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let h = conjugate_diag(z, nu);
        let (co, si) = (z.norm().cos(), z.norm().sin());
        let r = [
            (h.trace() - (nu.0 + nu.1)).abs(),
            (h.det() - nu.0 * nu.1).abs(),
            (h.h12.norm() - ((nu.0 - nu.1) * co * si).abs()).abs(),
            ((nu.0 + nu.1) * (nu.0 - h.h11) - eta_moment_scalar(nu, 1.0, z)).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        worst.record(
            r,
            r <= ctx.cfg.tol_alg,
            || json!({ "z": c_json(z), "nu": [nu.0, nu.1] }),
        );
    }
    Ok(worst.finish(p))
}

/// Distance of `(x, y)` from the line `R·ν`, and whether it points along `+ν`.
fn ray_offset(psi: (f64, f64), nu: &RayDir) -> (f64, bool) {
    let (nx, ny) = (nu.x() as f64, nu.y() as f64);
    let len = nx.hypot(ny);
    (
        (psi.0 * ny - psi.1 * nx).abs() / len,
        psi.0 * nx + psi.1 * ny > 0.0,
    )
}

fn mtnu_membership(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::MtnuMembership;
    let nu = ctx.transverse_nu()?;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let z = sample_mtnu(ctx.rep, &nu, &mut ctx.rng(p, i))?;
        let level = mtnu_residual(ctx.rep, &nu, &z);
        let (off, forward) = ray_offset(phi_rep(ctx.rep, &z)?.diagonal(), &nu);
        let ok = level <= ctx.cfg.tol_alg && off <= ctx.cfg.tol_eig && forward;
        worst.record(level.max(off), ok, || json!({ "z": vec_json(&z) }));
    }
    Ok(worst.finish(p))
}

fn torus_local_freeness(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::TorusLocalFreeness;
    let nu = ctx.transverse_nu()?;
    let tol = ctx.cfg.rank_rel_tol;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let z = sample_mtnu(ctx.rep, &nu, &mut ctx.rng(p, i))?;
        let [_, _, rho, gamma] = fundamental_fields(ctx.rep, &z);
        let rank = numeric_rank(&[rho, gamma], tol);
        worst.record(
            (2 - rank) as f64,
            rank == 2,
            || json!({ "z": vec_json(&z), "torus_rank": rank }),
        );
    }
    for idx in ctx.rep.index_set() {
        let z = ProjVector::basis(ctx.rep, idx);
        let fields = fundamental_fields(ctx.rep, &z);
        let rank = numeric_rank(&fields, tol);
        worst.record(
            rank.saturating_sub(3) as f64,
            rank <= 3,
            || json!({ "basis": idx, "rank": rank }),
        );
    }
    Ok(worst.finish(p))
}

/// The point `z_0 = sqrt(λ/k)·e^{iθ0}`, `z_k = sqrt((k-λ)/k)·e^{iθk}` of a
/// single summand, whose moment value is `diag(λ + l, k - λ + l)`.
pub fn diagonal_point(rep: &RepDescriptor, nu: &RayDir, phases: (f64, f64)) -> Result<ProjVector> {
    let [s] = rep.summands() else {
        return Err(Error::OutOfRange("needs a single summand".into()));
    };
    let k = s.k as f64;
    if s.k < 2 {
        return Err(Error::OutOfRange("needs k >= 2".into()));
    }
    if nu.x() == nu.y() {
        return Err(Error::DiagonalRay);
    }
    let (n1, n2) = (nu.x() as f64, nu.y() as f64);
    let lambda = s.trace_weight() as f64 * n1 / (n1 + n2) - s.l as f64;
    if !(0.0..=k).contains(&lambda) {
        return Err(Error::OutsideImage);
    }
    let mut coords = vec![Complex64::new(0.0, 0.0); s.dim()];
    coords[0] = Complex64::from_polar((lambda / k).sqrt(), phases.0);
    coords[s.k as usize] = Complex64::from_polar(((k - lambda) / k).sqrt(), phases.1);
    ProjVector::from_flat(rep, &coords)
}

fn group_local_freeness(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::GroupLocalFreeness;
    let nu = ctx.transverse_nu()?;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let mut rng = ctx.rng(p, i);
        let phases = (
            rng.random_range(0.0..2.0 * PI),
            rng.random_range(0.0..2.0 * PI),
        );
        let z = diagonal_point(ctx.rep, &nu, phases)?;
        let h = phi_rep(ctx.rep, &z)?;
        let (off, forward) = ray_offset(h.diagonal(), &nu);
        let off = off.max(h.h12.norm());
        let rank = numeric_rank(&fundamental_fields(ctx.rep, &z), ctx.cfg.rank_rel_tol);
        let ok = off <= ctx.cfg.tol_eig && forward && rank == 4;
        worst.record(off, ok, || json!({ "z": vec_json(&z), "rank": rank }));
    }
    Ok(worst.finish(p))
}

fn norm_bound(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::NormBound;
    let nu = ctx.nu()?;
    let [s] = ctx.rep.summands() else {
        return Err(Error::OutOfRange("needs a single summand".into()));
    };
    if !(nu.y() > 0 && nu.x() >= 2 * (s.k as i64 - 1) * nu.y()) {
        return Err(Error::OutOfRange("needs nu1 >= 2 (k-1) nu2 > 0".into()));
    }
    let weights: Vec<f64> = mu_k_weights(s.k, &nu)?
        .into_iter()
        .map(|w| w as f64)
        .collect();
    let bound = 2.0 / nu.x() as f64;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let v = sample_weighted_sphere(&weights, &mut ctx.rng(p, i));
        let norm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        let sphere: f64 = weights.iter().zip(&v).map(|(w, c)| w * c.norm_sqr()).sum();
        let excess = (norm2 - bound).max(0.0);
        let ok = excess <= ctx.cfg.tol_alg && (sphere - 1.0).abs() <= ctx.cfg.tol_alg;
        worst.record(
            excess.max((sphere - 1.0).abs()),
            ok,
            || json!({ "v": v.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>() }),
        );
    }
    Ok(worst.finish(p))
}

fn upsilon_equivariance(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::UpsilonEquivariance;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let mut rng = ctx.rng(p, i);
        let z = sample_unit_vector(ctx.rep, &mut rng);
        let (t1, t2) = (
            rng.random_range(0.0..2.0 * PI),
            rng.random_range(0.0..2.0 * PI),
        );
        let gen = LieElement::rho()
            .scale(t1)
            .add(&LieElement::gamma().scale(t2));
        // Υ at D(θ)^{-1}·Z equals e^{-i(θ1-θ2)} Υ(Z)
        let moved = act(ctx.rep, &gen, -1.0, &z);
        let lhs = upsilon(ctx.rep, &moved)?;
        let rhs = Complex64::from_polar(1.0, -(t1 - t2)) * upsilon(ctx.rep, &z)?;
        let r = (lhs - rhs).norm();
        worst.record(
            r,
            r <= ctx.cfg.tol_eig,
            || json!({ "z": vec_json(&z), "theta": [t1, t2] }),
        );
    }
    Ok(worst.finish(p))
}

fn weighted_moment_homogeneity(ctx: &Ctx) -> Result<PropertyReport> {
    let p = Property::WeightedMomentHomogeneity;
    let mut worst = Worst::new();
    for i in 0..ctx.cfg.samples {
        let mut rng = ctx.rng(p, i);
        let n = rng.random_range(1..=6usize);
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(1..=20) as f64).collect();
        let d: Vec<f64> = (0..n).map(|_| rng.random_range(1..=20) as f64).collect();
        let z = sample_unit(n, &mut rng);
        let base = weighted_moment(&a, &d, &z)?;
        let (lo, hi) = a
            .iter()
            .fold((f64::INFINITY, 0.0f64), |(l, h), &x| (l.min(x), h.max(x)));
        let mut r = (lo - base).max(base - hi).max(0.0);
        for s in [2.0, 3.0] {
            let ds: Vec<f64> = d.iter().map(|x| s * x).collect();
            r = r.max((weighted_moment(&a, &ds, &z)? - base).abs() / base.abs());
        }
        worst.record(r, r <= ctx.cfg.tol_alg, || json!({ "a": a, "d": d }));
    }
    Ok(worst.finish(p))
}

fn run_property(ctx: &Ctx, p: Property) -> PropertyReport {
    let out = match p {
        Property::PsdTrace => psd_trace(ctx),
        Property::HullContainment => hull_containment(ctx),
        Property::TraceFormula => trace_formula(ctx),
        Property::Equivariance => equivariance(ctx),
        Property::ExpOracle => exp_oracle(ctx),
        Property::Conjugation => conjugation(ctx),
        Property::MtnuMembership => mtnu_membership(ctx),
        Property::TorusLocalFreeness => torus_local_freeness(ctx),
        Property::GroupLocalFreeness => group_local_freeness(ctx),
        Property::NormBound => norm_bound(ctx),
        Property::UpsilonEquivariance => upsilon_equivariance(ctx),
        Property::WeightedMomentHomogeneity => weighted_moment_homogeneity(ctx),
    };
    out.unwrap_or_else(|e| PropertyReport {
        property: p.name(),
        pass: false,
        samples: 0,
        max_residual: None,
        witness: None,
        skipped: Some(e.into()),
    })
}

/// Run one property.
pub fn run_one(
    rep: &RepDescriptor,
    nu: Option<RayDir>,
    cfg: &SampleConfig,
    p: Property,
) -> Result<PropertyReport> {
    cfg.validate()?;
    Ok(run_property(&Ctx { rep, nu, cfg }, p))
}

/// Run every property in [`Property::ALL`] order.
pub fn run_suite(
    rep: &RepDescriptor,
    nu: Option<RayDir>,
    cfg: &SampleConfig,
) -> Result<Vec<PropertyReport>> {
    cfg.validate()?;
    let ctx = Ctx { rep, nu, cfg };
    Ok(Property::ALL
        .iter()
        .map(|&p| run_property(&ctx, p))
        .collect())
}

/// Basis vectors of the coordinates witnessing a critical ray.
pub fn witness_vectors(rep: &RepDescriptor, witnesses: &[IndexPair]) -> Vec<ProjVector> {
    witnesses
        .iter()
        .map(|&idx| ProjVector::basis(rep, idx))
        .collect()
}
