//! The `zk` command line: request types, dispatch and report rendering.
//!
//! Exit codes: 0 on success, 2 when the input cannot be read, parsed or
//! validated (`Parse`, `VertexOutOfRange`, `GhostVertex`, `TooManyVertices`,
//! `InvalidDenominator`), 3 for every other error (a precondition such as
//! `NotElliptic` failed). The error name is printed on standard error.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::{GhostPolicy, SimplicialComplex};
use crate::decomposition::{
    hilton_milnor_bound, is_product_of_simplices_polytope, join_decompose, moment_angle_type,
    wedge_retract_witness, JoinDecomposition, SphereProduct,
};
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::nonface::{census, classify, MAX_CENSUS_M};
use crate::series::{
    bigint_json, face_ring_series, free_loop_cp_infty_power_series, free_loop_dj_upper_series,
    free_loop_zk_series, hochschild_growth_verdict, loop_dj_series, loop_zk_series, zk_series,
    GrowthKind, RationalFunction, Series,
};

#[derive(Debug, Clone, Parser)]
#[command(name = "zk", version, about = "Rational homotopy of moment-angle complexes")]
pub struct Request {
    #[command(subcommand)]
    pub command: Command,

    /// Input JSON file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Accept vertices that lie in no facet (classification then refuses the complex).
    #[arg(long, global = true)]
    pub allow_ghost_vertices: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Elliptic or hyperbolic, with the free loop space growth of Z_K.
    Classify,
    /// Join decomposition of an elliptic complex.
    Decompose {
        /// Assert that K is a polytopal sphere and report whether its polytope is a product of simplices.
        #[arg(long)]
        assert_polytopal_sphere: bool,
    },
    /// Hilbert–Poincaré series of a space built from K.
    Series {
        #[arg(long, value_enum)]
        space: Space,
        /// Also print the coefficients of t^0..t^N.
        #[arg(long, value_name = "N")]
        expand: Option<usize>,
    },
    /// Wedge-retract witness of a hyperbolic complex.
    Witness,
    /// Every labeled complex on M vertices, one JSON record per line.
    Census {
        m: usize,
        #[arg(long, default_value_t = MAX_CENSUS_M)]
        max_census_m: usize,
    },
    /// Power-series coefficients of a rational function {"num": [...], "den": [...]}.
    Expand {
        #[arg(long, value_name = "N", default_value_t = 10)]
        expand: usize,
    },
    /// Check 2(k+r+t)-1 < 4(2k+3t+r-1)-1.
    BoundCheck { k: u64, t: u64, r: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Z_K
    Zk,
    /// ΩZ_K
    OmegaZk,
    /// LZ_K
    LoopZk,
    /// DJ(K), the face ring
    Dj,
    /// ΩDJ(K)
    OmegaDj,
    /// Upper bound for LDJ(K)
    LoopDjBound,
    /// L(CP^∞)^m
    LoopCpPower,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::Zk => "zk",
            Space::OmegaZk => "omega-zk",
            Space::LoopZk => "loop-zk",
            Space::Dj => "dj",
            Space::OmegaDj => "omega-dj",
            Space::LoopDjBound => "loop-dj-bound",
            Space::LoopCpPower => "loop-cp-power",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl Request {
    fn needs_input(&self) -> bool {
        !matches!(self.command, Command::Census { .. } | Command::BoundCheck { .. })
    }

    fn ghost_policy(&self) -> GhostPolicy {
        if self.allow_ghost_vertices {
            GhostPolicy::Allow
        } else {
            GhostPolicy::Reject
        }
    }
}

/// Reads the request's input (file or standard input) and runs it.
pub fn run(request: &Request) -> Report {
    let input = if request.needs_input() {
        match read_input(&request.input) {
            Ok(text) => text,
            Err(e) => return failure(&e),
        }
    } else {
        String::new()
    };
    run_with_input(request, &input)
}

/// Runs a request against already loaded input text.
pub fn run_with_input(request: &Request, input: &str) -> Report {
    match dispatch(request, input) {
        Ok(stdout) => Report { stdout, stderr: String::new(), exit_code: 0 },
        Err(e) => failure(&e),
    }
}

pub fn exit_code(error: &Error) -> i32 {
    if error.is_input_error() {
        2
    } else {
        3
    }
}

fn failure(error: &Error) -> Report {
    Report {
        stdout: String::new(),
        stderr: format!("error: {}: {}\n", error.name(), error),
        exit_code: exit_code(error),
    }
}

fn read_input(source: &str) -> Result<String> {
    let mut text = String::new();
    let outcome = if source == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(source).map(|t| text = t)
    };
    outcome.map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
    Ok(text)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization is infallible")
}

fn dispatch(request: &Request, input: &str) -> Result<String> {
    let json = request.format == Format::Json;
    let complex = || SimplicialComplex::from_json(input, request.ghost_policy());
    let mut out = String::new();
    match &request.command {
        Command::Classify => classify_report(&complex()?, json, &mut out)?,
        Command::Decompose { assert_polytopal_sphere } => {
            let k = complex()?;
            let d = join_decompose(&k)?;
            let product = if *assert_polytopal_sphere {
                Some(is_product_of_simplices_polytope(&k, true)?)
            } else {
                None
            };
            decompose_report(&d, product, json, &mut out);
        }
        Command::Series { space, expand } => {
            let k = complex()?;
            let series = series_for(*space, &k)?;
            series_report(*space, &series, *expand, json, &mut out);
        }
        Command::Witness => {
            let w = wedge_retract_witness(&complex()?)?;
            if json {
                writeln!(out, "{}", to_json(&w)).unwrap();
            } else {
                let (a, b) = w.sphere_dims;
                writeln!(out, "S^{a} ∨ S^{b} is a rational retract of Z_K").unwrap();
                writeln!(out, "I = {}, J = {}, k = {}, t = {}, r = {}", w.i, w.j, w.k, w.t, w.r).unwrap();
                writeln!(out, "top cell {} < {}", w.bound.lhs, w.bound.rhs).unwrap();
            }
        }
        Command::Census { m, max_census_m } => {
            let cap = *max_census_m;
            if cap > MAX_CENSUS_M {
                return Err(Error::CensusTooLarge { requested: cap, max: MAX_CENSUS_M });
            }
            if *m > cap {
                return Err(Error::CensusTooLarge { requested: *m, max: cap });
            }
            for entry in census(*m)? {
                writeln!(out, "{}", to_json(&entry)).unwrap();
            }
        }
        Command::Expand { expand } => {
            let f = RationalFunction::from_json(input)?;
            let coeffs = f.expand(*expand);
            if json {
                writeln!(out, "{}", coefficients_json(&coeffs)).unwrap();
            } else {
                writeln!(out, "{f}").unwrap();
                writeln!(out, "{}", coefficients_text(&coeffs)).unwrap();
            }
        }
        Command::BoundCheck { k, t, r } => {
            let b = hilton_milnor_bound(*k, *t, *r)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    lhs: u64,
                    rhs: u64,
                    ok: bool,
                }
                writeln!(out, "{}", to_json(&Out { lhs: b.lhs, rhs: b.rhs, ok: b.ok })).unwrap();
            } else {
                let rel = if b.ok { "<" } else { ">=" };
                writeln!(out, "2(k+r+t)-1 = {} {rel} {} = 4(2k+3t+r-1)-1", b.lhs, b.rhs).unwrap();
                writeln!(out, "{}", if b.ok { "ok" } else { "fails" }).unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct ClassifyJson {
    verdict: &'static str,
    minimal_non_faces: Vec<FaceSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersecting_pair: Option<(FaceSet, FaceSet)>,
    moment_angle: Option<SphereProduct>,
    free_loop_growth: GrowthKind,
    loop_dj_growth: &'static str,
}

fn classify_report(k: &SimplicialComplex, json: bool, out: &mut String) -> Result<()> {
    let verdict = classify(k)?;
    let hochschild = hochschild_growth_verdict(k)?;
    let free_loop_growth = hochschild.free_loop_zk_growth();
    let moment_angle = if verdict.is_elliptic() { Some(moment_angle_type(k)?) } else { None };
    if json {
        let report = ClassifyJson {
            verdict: verdict.kind.as_str(),
            minimal_non_faces: verdict.profile.mnfs().to_vec(),
            intersecting_pair: verdict.profile.intersecting_sets(),
            moment_angle,
            free_loop_growth,
            loop_dj_growth: hochschild.dj_growth().map_or("undetermined", GrowthKind::as_str),
        };
        writeln!(out, "{}", to_json(&report)).unwrap();
        return Ok(());
    }
    match &moment_angle {
        Some(sp) => writeln!(out, "elliptic; Z_K ≃ {sp}; L Z_K growth: {free_loop_growth}").unwrap(),
        None => {
            let w = wedge_retract_witness(k)?;
            let (a, b) = w.sphere_dims;
            writeln!(
                out,
                "hyperbolic; {}; S^{a} ∨ S^{b} is a rational retract of Z_K; L Z_K growth: {free_loop_growth}",
                verdict.reason()
            )
            .unwrap()
        }
    }
    Ok(())
}

fn decompose_report(d: &JoinDecomposition, product: Option<bool>, json: bool, out: &mut String) {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            decomposition: &'a JoinDecomposition,
            #[serde(skip_serializing_if = "Option::is_none")]
            product_of_simplices: Option<bool>,
        }
        writeln!(out, "{}", to_json(&Out { decomposition: d, product_of_simplices: product })).unwrap();
        return;
    }
    let mut factors = Vec::new();
    if !d.simplex_vertices.is_empty() {
        factors.push(format!("Δ{}", d.simplex_vertices));
    }
    factors.extend(d.boundary_factors.iter().map(|f| format!("∂Δ{f}")));
    let rhs = if factors.is_empty() { "∅".to_string() } else { factors.join(" * ") };
    writeln!(out, "K = {rhs}").unwrap();
    if let Some(p) = product {
        writeln!(out, "P(K) is a product of simplices: {}", if p { "yes" } else { "no" }).unwrap();
    }
}

pub fn series_for(space: Space, k: &SimplicialComplex) -> Result<Series> {
    Ok(match space {
        Space::Zk => zk_series(&moment_angle_type(k)?),
        Space::OmegaZk => loop_zk_series(&moment_angle_type(k)?),
        Space::LoopZk => free_loop_zk_series(&moment_angle_type(k)?),
        Space::Dj => face_ring_series(k),
        Space::OmegaDj => loop_dj_series(k)?,
        Space::LoopDjBound => free_loop_dj_upper_series(k)?,
        Space::LoopCpPower => free_loop_cp_infty_power_series(k.m()),
    })
}

fn series_report(space: Space, series: &Series, expand: Option<usize>, json: bool, out: &mut String) {
    let coeffs = expand.map(|n| series.expand(n));
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            space: &'static str,
            series: &'a RationalFunction,
            #[serde(skip_serializing_if = "Option::is_none")]
            expansion: Option<serde_json::Value>,
        }
        let expansion = coeffs.as_deref().map(coefficients_value);
        writeln!(out, "{}", to_json(&Out { space: space.name(), series: series.rational(), expansion })).unwrap();
        return;
    }
    writeln!(out, "{series}").unwrap();
    if let Some(c) = coeffs {
        writeln!(out, "{}", coefficients_text(&c)).unwrap();
    }
}

fn coefficients_value(coeffs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(coeffs.iter().map(|c| serde_json::Value::Number(bigint_json::to_number(c))).collect())
}

fn coefficients_json(coeffs: &[BigInt]) -> String {
    to_json(&coefficients_value(coeffs))
}

fn coefficients_text(coeffs: &[BigInt]) -> String {
    coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_POINTS: &str = r#"{"m":2,"facets":[[1],[2]]}"#;
    const Q: &str = r#"{"m":3,"facets":[[1,2],[3]]}"#;

    fn request(args: &[&str]) -> Request {
        Request::try_parse_from(std::iter::once("zk").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn classify_two_points() {
        let r = run_with_input(&request(&["classify"]), TWO_POINTS);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.stdout, "elliptic; Z_K ≃ S^3; L Z_K growth: sub-exponential\n");
    }

    #[test]
    fn classify_json() {
        let r = run_with_input(&request(&["classify", "--format", "json"]), Q);
        assert_eq!(
            r.stdout.trim(),
            r#"{"verdict":"hyperbolic","minimal_non_faces":[[1,3],[2,3]],"intersecting_pair":[[1,3],[2,3]],"moment_angle":null,"free_loop_growth":"exponential","loop_dj_growth":"undetermined"}"#
        );
    }

    #[test]
    fn witness_json() {
        let r = run_with_input(&request(&["witness", "--format", "json"]), Q);
        assert_eq!(r.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["spheres"], serde_json::json!([3, 3]));
    }

    #[test]
    fn series_loop_zk() {
        let r = run_with_input(&request(&["series", "--space", "loop-zk", "--expand", "7"]), TWO_POINTS);
        assert_eq!(r.stdout, "(1+t^3)/(1-t^2)\n1,0,1,1,1,1,1,1\n");
        let r = run_with_input(
            &request(&["series", "--space", "loop-zk", "--expand", "3", "--format", "json"]),
            TWO_POINTS,
        );
        assert_eq!(
            r.stdout.trim(),
            r#"{"space":"loop-zk","series":{"num":[1,-1,1],"den":[1,-1]},"expansion":[1,0,1,1]}"#
        );
    }

    #[test]
    fn error_exit_codes() {
        let r = run_with_input(&request(&["witness"]), TWO_POINTS);
        assert_eq!(r.exit_code, 3);
        assert!(r.stderr.starts_with("error: NotHyperbolic"));
        let r = run_with_input(&request(&["decompose"]), Q);
        assert_eq!(r.exit_code, 3);
        assert!(r.stderr.starts_with("error: NotElliptic"));
        let r = run_with_input(&request(&["classify"]), "{");
        assert_eq!(r.exit_code, 2);
        let r = run_with_input(&request(&["classify"]), r#"{"m":2,"facets":[[1]]}"#);
        assert_eq!((r.exit_code, r.stderr.starts_with("error: GhostVertex")), (2, true));
        let r = run_with_input(&request(&["classify", "--allow-ghost-vertices"]), r#"{"m":2,"facets":[[1]]}"#);
        assert_eq!(r.exit_code, 3);
        assert!(r.stderr.starts_with("error: NotSimplyConnectedAssumptionViolated"));
        let r = run_with_input(&request(&["census", "6"]), "");
        assert_eq!((r.exit_code, r.stderr.starts_with("error: CensusTooLarge")), (3, true));
        let r = run_with_input(&request(&["census", "3", "--max-census-m", "2"]), "");
        assert_eq!(r.exit_code, 3);
        let r = run_with_input(&request(&["bound-check", "0", "1", "1"]), "");
        assert_eq!(r.exit_code, 3);
        let r = run_with_input(&request(&["expand"]), r#"{"num":[1],"den":[2]}"#);
        assert_eq!(r.exit_code, 2);
    }

    #[test]
    fn every_error_has_one_exit_code() {
        let samples = [
            Error::VertexOutOfRange { vertex: 0, m: 1 },
            Error::GhostVertex(1),
            Error::TooManyVertices { requested: 65, max: 64 },
            Error::EmptyIndexSet,
            Error::BoundaryOfPoint,
            Error::NotSimplyConnectedAssumptionViolated,
            Error::NotElliptic(String::new(), String::new()),
            Error::NotHyperbolic,
            Error::ReconstructionMismatch,
            Error::WitnessCheckFailed(""),
            Error::CensusTooLarge { requested: 6, max: 5 },
            Error::ParameterOutOfRange(String::new()),
            Error::AssertionRequired,
            Error::InexactDivision,
            Error::InvalidDenominator,
            Error::BoundaryRootUnresolved,
            Error::Parse(String::new()),
        ];
        for e in &samples {
            assert!(matches!(exit_code(e), 2 | 3), "{}", e.name());
        }
    }

    #[test]
    fn decompose_text_and_json() {
        let square = r#"{"m":4,"facets":[[1,2],[2,3],[3,4],[1,4]]}"#;
        let r = run_with_input(&request(&["decompose"]), square);
        assert_eq!(r.stdout, "K = ∂Δ{1,3} * ∂Δ{2,4}\n");
        let r = run_with_input(&request(&["decompose", "--format", "json", "--assert-polytopal-sphere"]), square);
        assert_eq!(r.stdout.trim(), r#"{"simplex":[],"boundaries":[[1,3],[2,4]],"product_of_simplices":true}"#);
    }

    #[test]
    fn bound_check_and_expand() {
        let r = run_with_input(&request(&["bound-check", "1", "1", "1", "--format", "json"]), "");
        assert_eq!(r.stdout.trim(), r#"{"lhs":5,"rhs":19,"ok":true}"#);
        let r = run_with_input(&request(&["expand", "--expand", "6", "--format", "json"]), r#"{"num":[1],"den":[1,-1,-1]}"#);
        assert_eq!(r.stdout.trim(), "[1,1,2,3,5,8,13]");
    }
}
