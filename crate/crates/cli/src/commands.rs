use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use simploid::budget::Budget;
use simploid::dga::json::{dga_from_str, element_to_json};
use simploid::dga::rational::from_text;
use simploid::dga::{
    is_mc, quasi_invertible_solve, tensor_dga, CochainAlgebra, CochainShape, DGAlgebra, Element, QuasiInverse,
};
use simploid::expansion::json::{cert_from_str, cert_to_string};
use simploid::expansion::{
    cert_cylinder, cert_horn, cert_prism_horn, cert_prism_horn_tilde, cert_spine, cert_spine_thick, cert_thick_boundary,
    cert_thick_horn, cert_thick_inner_horn, search_expansion, verify_certificate, ExpansionCertificate,
};
use simploid::nerve::json::{nerve_from_str, nerve_to_value};
use simploid::nerve::sample::{random_quasi_invertible_edge, random_strict_point};
use simploid::nerve::{
    catalan_lift, delta_check, filler_space, inner_horn_fill, nerve_check, psi, psi_inverse, smoothness_identities,
    EdgeWithQuasiInverse, Matrix2U, NervePoint, UAlgebra,
};
use simploid::set_model::json::{morphism_from_str, sobj_from_str};
use simploid::set_model::{
    check_fibration, check_hypercover, check_k_category, check_k_groupoid, check_we_cat, check_we_direct,
    check_we_path, ConditionReport, Morphism, Tso,
};
use simploid::simplicial::thick_simplex;
use simploid::{Error, Result};

use crate::builtins;
use crate::report::{LemmaTag, Report, ReportBuilder, RunConfig};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expansion certificates: build, replay and search.
    Expansion {
        #[command(subcommand)]
        cmd: ExpansionCmd,
    },
    /// Horn-filling, hypercover and weak-equivalence conditions in finite sets.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// The Maurer–Cartan nerve of a differential graded algebra.
    Nerve {
        #[command(subcommand)]
        cmd: NerveCmd,
    },
    /// A named battery of checks.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
    },
    /// Print a built-in object, map or algebra as an input file.
    Export {
        #[command(subcommand)]
        cmd: ExportCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExpansionCmd {
    /// Build a certificate with a closed-form constructor and replay it.
    Certify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Write the certificate (exp.v1) to this path.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Replay a certificate file.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Search for a filtration of a shape's inclusion.
    Search {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ShapeArgs {
    #[arg(value_enum)]
    pub shape: Shape,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `Δᵐ×∂Δⁿ ∪ Λᵐᵢ×Δⁿ ↪ Δᵐ×Δⁿ` (uses m, n, i).
    PrismHorn,
    /// `∂Δᵐ×Δⁿ ∪ Δᵐ×Λⁿⱼ ↪ Δᵐ×Δⁿ` (uses m, n and i as j).
    PrismHornTilde,
    /// `Λⁿᵢ ↪ Δⁿ`.
    Horn,
    /// `Λⁿᵢ ↪ 𝚫ⁿ` through the thick horn, inner.
    ThickInnerHorn,
    /// `𝚲ⁿᵢ ↪ 𝚫ⁿ`.
    ThickHorn,
    /// `Δⁿ×𝚫¹` over its ends.
    Cylinder,
    /// `∂𝚫ⁿ ↪ 𝚫ⁿ`.
    ThickBoundary,
    /// `Sp(n) ↪ Δⁿ`.
    Spine,
    /// `Sp(n) ↪ 𝚫ⁿ`.
    ThickSpine,
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// All horns fill, uniquely above dimension k
    Kgroupoid(ObjectArgs),
    /// Inner horns fill, uniquely above dimension k, and thick edges cover
    Kcategory(ObjectArgs),
    /// Relative horn-matching maps are surjective
    Fibration(MapArgs),
    /// Relative boundary-matching maps are surjective
    Hypercover(MapArgs),
    /// Weak equivalence by the chosen criterion
    We {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, value_enum, default_value_t = Via::Path)]
        via: Via,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    /// Path-space factorization.
    Path,
    /// Relative boundary-matching maps.
    Direct,
    /// Join criterion with thick edges.
    Cat,
}

#[derive(Args, Debug)]
pub struct ObjectArgs {
    /// A simplicial object file (sobj.v1).
    #[arg(long, conflicts_with = "object")]
    pub input: Option<PathBuf>,
    /// A built-in object.
    #[arg(long)]
    pub object: Option<String>,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    /// A morphism file (omap.v1).
    #[arg(long, conflicts_with = "map")]
    pub input: Option<PathBuf>,
    /// A built-in map.
    #[arg(long)]
    pub map: Option<String>,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// An algebra file (dga.v1).
    #[arg(long)]
    pub dga: Option<PathBuf>,
    /// A built-in algebra, used without --dga.
    #[arg(long, default_value = "m2")]
    pub algebra: String,
}

#[derive(Subcommand, Debug)]
pub enum NerveCmd {
    /// Check the Maurer–Cartan equations of a point (nerve.v1).
    Check {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        point: PathBuf,
    },
    /// Fill an inner horn at `μ_{0…n} = x`.
    Fill {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// `0` or comma-separated coordinates of x in degree 1-n.
        #[arg(long, default_value = "0")]
        x: String,
        /// Horn data (nerve.v1); sampled from the seed when absent.
        #[arg(long)]
        horn: Option<PathBuf>,
    },
    /// Lift a quasi-invertible edge to the thick nerve.
    Lift {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// An edge (nerve.v1 with n = 1); sampled from the seed when absent.
        #[arg(long)]
        edge: Option<PathBuf>,
    },
    /// Check the matrix model of cochains on the thick interval on a basis.
    Psi {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        max_degree: i32,
    },
    /// Check the smoothness identities at sampled lifted points.
    Identities {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Expansions,
    SetModel,
    Nerve,
}

#[derive(Subcommand, Debug)]
pub enum ExportCmd {
    Object { name: String },
    Map { spec: String },
    Dga { name: String },
}

/// Settings shared by every command.
pub struct Context {
    pub config: RunConfig,
    pub budget: Budget,
}

impl Context {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed)
    }

    fn check_budget(&self, trace: &str) -> Result<()> {
        if self.budget.expired() {
            return Err(Error::Timeout { elapsed_ms: self.budget.elapsed_ms(), trace: trace.into() });
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

/// A report, or raw file text from `export`.
pub enum Outcome {
    Report(Box<Report>),
    Raw(String),
}

pub fn run(cmd: &Command, ctx: &Context) -> Result<Outcome> {
    let report = match cmd {
        Command::Expansion { cmd } => expansion(cmd, ctx)?,
        Command::Check { cmd } => check(cmd, ctx)?,
        Command::Nerve { cmd } => nerve(cmd, ctx)?,
        Command::Suite { name } => suite(*name, ctx)?,
        Command::Export { cmd } => return export(cmd, ctx).map(Outcome::Raw),
    };
    Ok(Outcome::Report(Box::new(report.finish(ctx.config.clone()))))
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

/// Parameters echoed into the report configuration.
pub fn params(cmd: &Command) -> (String, Vec<String>, BTreeMap<String, String>) {
    let mut p = BTreeMap::new();
    let mut inputs = Vec::new();
    let mut put = |k: &str, v: String| {
        p.insert(k.to_string(), v);
    };
    let shape = |s: &ShapeArgs, put: &mut dyn FnMut(&str, String)| {
        put("shape", value_name(s.shape));
        put("m", s.m.to_string());
        put("n", s.n.to_string());
        put("i", s.i.to_string());
    };
    let alg = |a: &AlgebraArgs, inputs: &mut Vec<String>, put: &mut dyn FnMut(&str, String)| match &a.dga {
        Some(path) => inputs.push(path.display().to_string()),
        None => put("algebra", a.algebra.clone()),
    };
    let object = |o: &ObjectArgs, inputs: &mut Vec<String>, put: &mut dyn FnMut(&str, String)| {
        if let Some(path) = &o.input {
            inputs.push(path.display().to_string());
        }
        if let Some(name) = &o.object {
            put("object", name.clone());
        }
    };
    let map = |m: &MapArgs, inputs: &mut Vec<String>, put: &mut dyn FnMut(&str, String)| {
        if let Some(path) = &m.input {
            inputs.push(path.display().to_string());
        }
        if let Some(spec) = &m.map {
            put("map", spec.clone());
        }
    };
    let name = match cmd {
        Command::Expansion { cmd } => match cmd {
            ExpansionCmd::Certify { shape: s, save } => {
                shape(s, &mut put);
                if let Some(path) = save {
                    put("save", path.display().to_string());
                }
                "expansion certify"
            }
            ExpansionCmd::Verify { input } => {
                inputs.push(input.display().to_string());
                "expansion verify"
            }
            ExpansionCmd::Search { shape: s } => {
                shape(s, &mut put);
                "expansion search"
            }
        },
        Command::Check { cmd } => match cmd {
            CheckCmd::Kgroupoid(o) => {
                object(o, &mut inputs, &mut put);
                "check kgroupoid"
            }
            CheckCmd::Kcategory(o) => {
                object(o, &mut inputs, &mut put);
                "check kcategory"
            }
            CheckCmd::Fibration(m) => {
                map(m, &mut inputs, &mut put);
                "check fibration"
            }
            CheckCmd::Hypercover(m) => {
                map(m, &mut inputs, &mut put);
                "check hypercover"
            }
            CheckCmd::We { map: m, via } => {
                map(m, &mut inputs, &mut put);
                put("via", value_name(*via));
                "check we"
            }
        },
        Command::Nerve { cmd } => match cmd {
            NerveCmd::Check { alg: a, point } => {
                alg(a, &mut inputs, &mut put);
                inputs.push(point.display().to_string());
                "nerve check"
            }
            NerveCmd::Fill { alg: a, n, i, x, horn } => {
                alg(a, &mut inputs, &mut put);
                put("n", n.to_string());
                put("i", i.to_string());
                put("x", x.clone());
                if let Some(path) = horn {
                    inputs.push(path.display().to_string());
                }
                "nerve fill"
            }
            NerveCmd::Lift { alg: a, edge } => {
                alg(a, &mut inputs, &mut put);
                if let Some(path) = edge {
                    inputs.push(path.display().to_string());
                }
                "nerve lift"
            }
            NerveCmd::Psi { alg: a, max_degree } => {
                alg(a, &mut inputs, &mut put);
                put("max_degree", max_degree.to_string());
                "nerve psi"
            }
            NerveCmd::Identities { alg: a } => {
                alg(a, &mut inputs, &mut put);
                "nerve identities"
            }
        },
        Command::Suite { name } => {
            put("name", value_name(*name));
            "suite"
        }
        Command::Export { cmd } => {
            match cmd {
                ExportCmd::Object { name } => put("object", name.clone()),
                ExportCmd::Map { spec } => put("map", spec.clone()),
                ExportCmd::Dga { name } => put("algebra", name.clone()),
            }
            "export"
        }
    };
    (name.to_string(), inputs, p)
}

fn certificate(s: &ShapeArgs, trunc: usize) -> Result<(LemmaTag, ExpansionCertificate)> {
    let (m, n, i) = (s.m, s.n, s.i);
    Ok(match s.shape {
        Shape::PrismHorn => (LemmaTag::PrismExpansion, cert_prism_horn(m, n, i)?),
        Shape::PrismHornTilde => (LemmaTag::PrismExpansionTilde, cert_prism_horn_tilde(m, n, i)?),
        Shape::Horn => (LemmaTag::HornExpansion, cert_horn(n, i)?),
        Shape::ThickInnerHorn => (LemmaTag::ThickInnerHornExpansion, cert_thick_inner_horn(n, i, trunc)?),
        Shape::ThickHorn => (LemmaTag::ThickHornExpansion, cert_thick_horn(n, i, trunc)?),
        Shape::Cylinder => (LemmaTag::CylinderExpansion, cert_cylinder(n, trunc)?),
        Shape::ThickBoundary => (LemmaTag::ThickBoundaryExpansion, cert_thick_boundary(n, trunc)?),
        Shape::Spine => (LemmaTag::SpineExpansion, cert_spine(n)?),
        Shape::ThickSpine => (LemmaTag::ThickSpineExpansion, cert_spine_thick(n, trunc)?),
    })
}

fn replay_case(b: &mut ReportBuilder, name: &str, cert: &ExpansionCertificate) -> Result<()> {
    let r = verify_certificate(cert)?;
    let kind = if r.inner { "inner " } else { "" };
    b.case(
        name,
        r.valid,
        format!("{kind}{}-expansion, {} cells attached, complete to dimension {}", r.grade, r.attached_count, r.complete_to_dim),
    );
    Ok(())
}

fn expansion(cmd: &ExpansionCmd, ctx: &Context) -> Result<ReportBuilder> {
    let trunc = ctx.config.trunc;
    match cmd {
        ExpansionCmd::Certify { shape, save } => {
            let (tag, cert) = certificate(shape, trunc)?;
            let mut b = ReportBuilder::new(tag);
            replay_case(&mut b, "certificate replays by pushouts", &cert)?;
            if let Some(path) = save {
                std::fs::write(path, cert_to_string(&cert) + "\n")
                    .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
            }
            Ok(b)
        }
        ExpansionCmd::Verify { input } => {
            let cert = cert_from_str(&read(input)?)?;
            let mut b = ReportBuilder::new(LemmaTag::CertificateReplay);
            replay_case(&mut b, "certificate replays by pushouts", &cert)?;
            Ok(b)
        }
        ExpansionCmd::Search { shape } => {
            let (_, cert) = certificate(shape, trunc)?;
            let mut b = ReportBuilder::new(LemmaTag::ExpansionSearch);
            match search_expansion(&cert.base, cert.inner, cert.m, &ctx.budget)? {
                Some(found) => {
                    replay_case(&mut b, "searched certificate replays", &found)?;
                    b.case("agrees with the closed-form constructor", true, format!("{} steps", found.steps.len()));
                }
                None => {
                    b.case("search finds a filtration", false, "exhaustive search found none");
                }
            }
            Ok(b)
        }
    }
}

fn load_object(o: &ObjectArgs, depth: usize) -> Result<Tso> {
    match (&o.input, &o.object) {
        (Some(path), _) => sobj_from_str(&read(path)?),
        (None, Some(name)) => builtins::object(name, depth),
        (None, None) => Err(Error::InvalidArgument(format!("give --input or --object ({})", builtins::OBJECTS))),
    }
}

fn load_map(m: &MapArgs, depth: usize) -> Result<Morphism> {
    match (&m.input, &m.map) {
        (Some(path), _) => morphism_from_str(&read(path)?),
        (None, Some(spec)) => builtins::map(spec, depth),
        (None, None) => Err(Error::InvalidArgument(format!("give --input or --map ({})", builtins::MAPS))),
    }
}

fn condition_cases(b: &mut ReportBuilder, r: &ConditionReport) {
    for c in &r.cases {
        let i = c.i.map(|i| format!(" i={i}")).unwrap_or_default();
        let kind = if c.require_bijective { "bijection" } else { "surjection" };
        b.case(
            format!("{} n={}{i}", c.case, c.n),
            c.holds,
            format!("{} -> {} elements, needs a {kind}", c.source_size, c.target_size),
        );
    }
}

fn check(cmd: &CheckCmd, ctx: &Context) -> Result<ReportBuilder> {
    let (k, depth) = (ctx.config.k, ctx.config.depth);
    let (tag, report) = match cmd {
        CheckCmd::Kgroupoid(o) => (LemmaTag::KGroupoid, check_k_groupoid(&load_object(o, depth)?, k, depth)?),
        CheckCmd::Kcategory(o) => (LemmaTag::KCategory, check_k_category(&load_object(o, depth)?, k, depth)?),
        CheckCmd::Fibration(m) => (LemmaTag::Fibration, check_fibration(&load_map(m, depth)?, depth)?),
        CheckCmd::Hypercover(m) => (LemmaTag::Hypercover, check_hypercover(&load_map(m, depth)?, depth)?),
        CheckCmd::We { map, via } => {
            let f = load_map(map, depth)?;
            match via {
                Via::Path => (LemmaTag::WeakEquivalencePath, check_we_path(&f, depth)?),
                Via::Direct => (LemmaTag::WeakEquivalenceDirect, check_we_direct(&f, depth)?),
                Via::Cat => (LemmaTag::WeakEquivalenceJoin, check_we_cat(&f, depth)?),
            }
        }
    };
    let mut b = ReportBuilder::new(tag);
    condition_cases(&mut b, &report);
    Ok(b)
}

fn load_algebra(a: &AlgebraArgs) -> Result<DGAlgebra> {
    match &a.dga {
        Some(path) => dga_from_str(&read(path)?),
        None => builtins::algebra(&a.algebra),
    }
}

fn parse_element(a: &DGAlgebra, degree: i32, text: &str) -> Result<Element> {
    if text.trim() == "0" {
        return Ok(Element::zero());
    }
    let coords = text.split(',').map(|t| from_text(t.trim())).collect::<Result<Vec<_>>>()?;
    if coords.len() != a.dim(degree) {
        return Err(Error::InvalidArgument(format!(
            "x needs {} coordinates in degree {degree}, found {}",
            a.dim(degree),
            coords.len()
        )));
    }
    Ok(Element::homogeneous(degree, coords))
}

fn matrix_to_json(m: &Matrix2U) -> Value {
    let mut out = serde_json::Map::new();
    for i in 0..2 {
        for j in 0..2 {
            let coeffs: Vec<Value> = m.entry(i, j).iter().map(element_to_json).collect();
            out.insert(format!("{i}{j}"), Value::Array(coeffs));
        }
    }
    json!({ "degree": m.degree(), "entries": out })
}

fn thick_interval(a: &DGAlgebra, top: usize) -> Result<CochainAlgebra> {
    tensor_dga(&CochainShape::new(&thick_simplex(1, top), top), a)
}

/// Lifts an edge and records the checks on the lift.
fn lift_cases(b: &mut ReportBuilder, a: &DGAlgebra, edge: &EdgeWithQuasiInverse, label: &str) -> Result<Option<Matrix2U>> {
    let u = UAlgebra::new(a);
    let lift = match catalan_lift(a, edge) {
        Ok(l) => l,
        Err(e) => {
            b.case(format!("{label}lift exists"), false, e.to_string());
            return Ok(None);
        }
    };
    b.case(format!("{label}dβ + [α, β] = 1"), true, format!("{:?}", lift.source).to_lowercase());
    b.case(format!("{label}da + a² = u·1"), u.thick_edge_check(&lift.a), format!("{} series terms", lift.terms));
    let c = thick_interval(a, (1 - a.lo()).max(1) as usize)?;
    let x = psi_inverse(&c, &lift.a.sub(&u.a0())?)?;
    let restricts = is_mc(&c.algebra, &x)?
        && c.component_by_word(&x, &[0]) == edge.mu0
        && c.component_by_word(&x, &[1]) == edge.mu1
        && c.component_by_word(&x, &[0, 1]) == edge.mu01;
    b.case(format!("{label}lift restricts to the edge"), restricts, "");
    Ok(Some(lift.a))
}

fn edge_from_point(a: &DGAlgebra, p: &NervePoint) -> Result<Option<EdgeWithQuasiInverse>> {
    if p.dim() != 1 {
        return Err(Error::InvalidArgument(format!("an edge has dimension 1, found {}", p.dim())));
    }
    let (mu0, mu1, mu01) = (p.component(&[0]), p.component(&[1]), p.component(&[0, 1]));
    Ok(match quasi_invertible_solve(a, &mu0, &mu1, &mu01)? {
        QuasiInverse::Witness { g, h, k } => Some(EdgeWithQuasiInverse { mu0, mu1, mu01, g, h, k }),
        QuasiInverse::Infeasible { .. } => None,
    })
}

fn fill_cases(b: &mut ReportBuilder, a: &DGAlgebra, n: usize, i: usize, horn: &NervePoint, x: &Element) -> Result<NervePoint> {
    let p = inner_horn_fill(a, n, i, horn, x)?;
    b.case("filled point satisfies the Maurer–Cartan equations", nerve_check(a, &p)?.is_point, "");
    let space = filler_space(a, n, i, horn)?;
    b.case(
        "filler space has dimension dim A^{1-n}",
        space.exists && space.dimension == space.expected_dimension,
        format!("dimension {}, expected {}", space.dimension, space.expected_dimension),
    );
    if n == 2 {
        let (mu0, mu2) = (p.component(&[0]), p.component(&[2]));
        let expected = &(&(&a.d(x) + &a.mul(&mu0, x)) + &a.mul(x, &mu2)) + &(&a.mul(&p.f(a, 0, 1), &p.f(a, 1, 2)) - &a.one());
        b.case("μ02 = dx + μ0x + xμ2 + f01f12 - 1", p.component(&[0, 2]) == expected, "");
    }
    Ok(p)
}

fn psi_cases(b: &mut ReportBuilder, a: &DGAlgebra, max_degree: i32, label: &str) -> Result<()> {
    let top = (2 * max_degree + 1 - a.lo()).max(1) as usize;
    let c = thick_interval(a, top)?;
    let u = UAlgebra::new(a);
    let basis: Vec<(i32, Element)> =
        c.algebra.basis_elements().into_iter().filter(|(t, _, _)| *t <= max_degree).map(|(t, _, x)| (t, x)).collect();
    let images: Vec<Matrix2U> = basis.iter().map(|(t, x)| psi(&c, x, *t)).collect::<Result<_>>()?;
    let mut inverse_ok = true;
    let mut delta_ok = true;
    for ((t, x), px) in basis.iter().zip(&images) {
        inverse_ok &= px.in_va() && psi_inverse(&c, px)? == *x;
        delta_ok &= delta_check(&c, x, *t)?;
    }
    let mut mult = 0;
    let mut mult_ok = true;
    for ((t, x), px) in basis.iter().zip(&images) {
        for ((s, y), py) in basis.iter().zip(&images) {
            mult += 1;
            mult_ok &= psi(&c, &c.algebra.mul(x, y), t + s)? == u.mul(px, py);
        }
    }
    let dims_ok = (a.lo()..=max_degree).all(|t| u.va_basis(t).len() == c.algebra.dim(t));
    let n = basis.len();
    b.case(format!("{label}ψ lands in 𝕍A and ψ⁻¹ψ = 1"), inverse_ok, format!("{n} basis elements"));
    b.case(format!("{label}ψ(δx) = dψ(x) + [a₀, ψ(x)]"), delta_ok, format!("{n} basis elements"));
    b.case(format!("{label}ψ(xy) = ψ(x)ψ(y)"), mult_ok, format!("{mult} pairs"));
    b.case(format!("{label}dim 𝕍A^t = dim (C(𝚫¹)⊗A)^t"), dims_ok, format!("degrees {}..={max_degree}", a.lo()));
    Ok(())
}

fn identity_cases(b: &mut ReportBuilder, a: &DGAlgebra, ctx: &Context, label: &str) -> Result<()> {
    let mut rng = ctx.rng();
    let mut sampled = 0;
    for k in 0..ctx.config.sample {
        ctx.check_budget(&format!("smoothness identities at point {k}"))?;
        let Some(edge) = random_quasi_invertible_edge(a, &mut rng, 50)? else { continue };
        let Ok(lift) = catalan_lift(a, &edge) else {
            b.case(format!("{label}point {k}: lift exists"), false, "");
            continue;
        };
        sampled += 1;
        let r = smoothness_identities(a, &lift.a, a.lo()..=2);
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        let detail = match r.first_failure() {
            Some(f) => format!("{} fails at {}", f.name, f.failure.clone().unwrap_or_default()),
            None => format!("{} identities, {cases} cases", r.checks.len()),
        };
        b.case(format!("{label}point {k}: smoothness identities"), r.holds, detail);
    }
    b.case(format!("{label}quasi-invertible points sampled"), sampled > 0, format!("{sampled} of {}", ctx.config.sample));
    Ok(())
}

fn nerve(cmd: &NerveCmd, ctx: &Context) -> Result<ReportBuilder> {
    match cmd {
        NerveCmd::Check { alg, point } => {
            let a = load_algebra(alg)?;
            let p = nerve_from_str(&a, &read(point)?)?;
            let r = nerve_check(&a, &p)?;
            let mut b = ReportBuilder::new(LemmaTag::MaurerCartanNerve);
            for (t, res) in &r.residuals {
                b.case(format!("residual at {t:?}"), res.is_zero(), if res.is_zero() { String::new() } else { a.format(res) });
            }
            Ok(b)
        }
        NerveCmd::Fill { alg, n, i, x, horn } => {
            let a = load_algebra(alg)?;
            let (n, i) = (*n, *i);
            let horn = match horn {
                Some(path) => nerve_from_str(&a, &read(path)?)?,
                None => {
                    let mut p = random_strict_point(&a, n, &mut ctx.rng())?;
                    let mut missing: Vec<usize> = (0..=n).collect();
                    if i <= n {
                        missing.remove(i);
                    }
                    p.set((0..=n).collect(), Element::zero());
                    p.set(missing, Element::zero());
                    p
                }
            };
            let x = parse_element(&a, 1 - n as i32, x)?;
            let mut b = ReportBuilder::new(LemmaTag::InnerHornFilling);
            let p = fill_cases(&mut b, &a, n, i, &horn, &x)?;
            b.data(nerve_to_value(&p));
            Ok(b)
        }
        NerveCmd::Lift { alg, edge } => {
            let a = load_algebra(alg)?;
            let mut b = ReportBuilder::new(LemmaTag::QuasiInverseLift);
            let edge = match edge {
                Some(path) => edge_from_point(&a, &nerve_from_str(&a, &read(path)?)?)?,
                None => random_quasi_invertible_edge(&a, &mut ctx.rng(), 50)?,
            };
            let Some(edge) = edge else {
                b.case("edge is quasi-invertible", false, "no witnesses g, h, k");
                return Ok(b);
            };
            b.case("edge is quasi-invertible", true, "");
            if let Some(m) = lift_cases(&mut b, &a, &edge, "")? {
                b.data(matrix_to_json(&m));
            }
            Ok(b)
        }
        NerveCmd::Psi { alg, max_degree } => {
            let a = load_algebra(alg)?;
            let mut b = ReportBuilder::new(LemmaTag::MatrixModel);
            psi_cases(&mut b, &a, *max_degree, "")?;
            Ok(b)
        }
        NerveCmd::Identities { alg } => {
            let a = load_algebra(alg)?;
            let mut b = ReportBuilder::new(LemmaTag::SmoothnessHomotopy);
            identity_cases(&mut b, &a, ctx, "")?;
            Ok(b)
        }
    }
}

fn suite(name: SuiteName, ctx: &Context) -> Result<ReportBuilder> {
    match name {
        SuiteName::Expansions => suite_expansions(ctx),
        SuiteName::SetModel => suite_set_model(ctx),
        SuiteName::Nerve => suite_nerve(ctx),
    }
}

fn suite_expansions(ctx: &Context) -> Result<ReportBuilder> {
    let trunc = ctx.config.trunc;
    let mut b = ReportBuilder::new(LemmaTag::ExpansionSuite);
    let mut shapes: Vec<ShapeArgs> = Vec::new();
    let at = |shape, m, n, i| ShapeArgs { shape, m, n, i };
    for m in 1..=3 {
        for n in 0..=4 - m {
            for i in 0..=m {
                shapes.push(at(Shape::PrismHorn, m, n, i));
            }
            for j in 0..=n {
                if n >= 1 {
                    shapes.push(at(Shape::PrismHornTilde, m, n, j));
                }
            }
        }
    }
    for n in 1..=4 {
        for i in 0..=n {
            shapes.push(at(Shape::Horn, 1, n, i));
        }
        shapes.push(at(Shape::Spine, 1, n, 0));
    }
    for n in 1..=2 {
        for i in 0..=n {
            if 0 < i && i < n {
                shapes.push(at(Shape::ThickInnerHorn, 1, n, i));
            }
            if n > 1 {
                shapes.push(at(Shape::ThickHorn, 1, n, i));
            }
        }
        shapes.push(at(Shape::ThickBoundary, 1, n, 0));
        shapes.push(at(Shape::ThickSpine, 1, n, 0));
    }
    for n in 0..=1 {
        shapes.push(at(Shape::Cylinder, 1, n, 0));
    }
    for s in &shapes {
        let name = format!("{} m={} n={} i={} trunc={trunc}", value_name(s.shape), s.m, s.n, s.i);
        ctx.check_budget(&name)?;
        let (_, cert) = certificate(s, trunc)?;
        replay_case(&mut b, &name, &cert)?;
    }
    Ok(b)
}

fn suite_set_model(ctx: &Context) -> Result<ReportBuilder> {
    let depth = ctx.config.depth;
    let k = ctx.config.k;
    let mut b = ReportBuilder::new(LemmaTag::SetModelSuite);
    for (name, groupoid, category) in
        [("z2", true, true), ("z3", true, true), ("idempotent", false, true), ("poset", false, true)]
    {
        ctx.check_budget(name)?;
        let x = builtins::object(name, depth)?;
        let g = check_k_groupoid(&x, k, depth)?.holds;
        let c = check_k_category(&x, k, depth)?.holds;
        b.case(format!("{name}: {k}-groupoid verdict"), g == groupoid, format!("{g}"));
        b.case(format!("{name}: {k}-category verdict"), c == category, format!("{c}"));
    }
    let maps = ["id:z2", "id:poset", "vertex:z2", "vertex:poset", "terminal:z2", "terminal:poset", "quotient:z4-z2"];
    for spec in maps {
        ctx.check_budget(spec)?;
        let f = builtins::map(spec, depth)?;
        let path = check_we_path(&f, depth)?.holds;
        let direct = check_we_direct(&f, depth)?.holds;
        b.case(format!("{spec}: path and direct criteria agree"), path == direct, format!("{path}"));
    }
    for spec in ["projection:z2xz2", "terminal:z2", "quotient:z4-z2"] {
        ctx.check_budget(spec)?;
        let f = builtins::map(spec, depth)?;
        let fib = check_fibration(&f, depth)?.holds;
        b.case(format!("{spec}: fibration"), fib, "");
    }
    Ok(b)
}

fn suite_nerve(ctx: &Context) -> Result<ReportBuilder> {
    let mut b = ReportBuilder::new(LemmaTag::NerveSuite);
    let m2 = builtins::algebra("m2")?;
    let mut rng = ctx.rng();
    for k in 0..ctx.config.sample {
        ctx.check_budget("matrix horn fills")?;
        let horn = {
            let mut p = random_strict_point(&m2, 2, &mut rng)?;
            p.set(vec![0, 1, 2], Element::zero());
            p.set(vec![0, 2], Element::zero());
            p
        };
        let mut sub = ReportBuilder::new(LemmaTag::InnerHornFilling);
        let p = fill_cases(&mut sub, &m2, 2, 1, &horn, &Element::zero())?;
        let composite = p.f(&m2, 0, 2) == m2.mul(&p.f(&m2, 0, 1), &p.f(&m2, 1, 2));
        b.case(format!("m2 horn {k}: f02 = f01 f12"), composite, "");
    }
    for name in ["end-zero", "end-identity"] {
        let a = builtins::algebra(name)?;
        for n in 3..=4 {
            ctx.check_budget(&format!("{name} unique fillers"))?;
            let mut p = simploid::nerve::sample::random_point(&a, n, &mut rng)?;
            p.set((0..=n).collect(), Element::zero());
            p.set((0..=n).filter(|&v| v != 1).collect(), Element::zero());
            let space = filler_space(&a, n, 1, &p)?;
            b.case(
                format!("{name}: fillers of Λ^{n}_1 are unique"),
                space.exists && space.dimension == 0,
                format!("dimension {}", space.dimension),
            );
        }
        ctx.check_budget(&format!("{name} ψ"))?;
        psi_cases(&mut b, &a, 2, &format!("{name}: "))?;
        if let Some(edge) = random_quasi_invertible_edge(&a, &mut ctx.rng(), 50)? {
            lift_cases(&mut b, &a, &edge, &format!("{name}: "))?;
        }
        identity_cases(&mut b, &a, ctx, &format!("{name}: "))?;
    }
    Ok(b)
}

fn export(cmd: &ExportCmd, ctx: &Context) -> Result<String> {
    use simploid::dga::json::dga_to_string;
    use simploid::set_model::json::{morphism_to_string, sobj_to_string};
    Ok(match cmd {
        ExportCmd::Object { name } => sobj_to_string(&builtins::object(name, ctx.config.depth)?),
        ExportCmd::Map { spec } => morphism_to_string(&builtins::map(spec, ctx.config.depth)?),
        ExportCmd::Dga { name } => dga_to_string(&builtins::algebra(name)?),
    } + "\n")
}
