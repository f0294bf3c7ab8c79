//! The `irrep` command line: one JSON document per invocation on stdout.

mod cache;
mod codec;

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irrep_core::altrep::{alt_matrix_element, associator, split_basis, AltBranch, AltIrrepLabel, BranchVector};
use irrep_core::gelfand::{enumerate_patterns, gl_action, gl_action_general, gl_algebra_element, gt_dimension, so_action, GlGenerator};
use irrep_core::hadamard::{overlap, p_zero, simulate_estimate, Part, PlanSpec, ShotPlan};
use irrep_core::linalg::{CVector, ONE, ZERO};
use irrep_core::liegroup::{
    adjacency_reduce, group_rep_so, group_rep_u, log_unitary_2x2, norm_profile, su_canonical_weight, two_level_decompose,
    weyl_character_so, weyl_character_u, weyl_dimension, TwoLevelFactor,
};
use irrep_core::perm::hard_instance;
use irrep_core::sampling::shard_rng;
use irrep_core::schar::{estimate_normalized_character, exact_character_roichman, roichman_f, roichman_weight, RoichmanContext};
use irrep_core::symrep::{exact_character, matrix_element, rep_adjacent, rep_permutation, SymIrrep};
use irrep_core::tableaux::{enumerate_syt, hook_walk_sample, StandardTableau};
use irrep_core::IrrepError;
use num_complex::Complex64;
use serde_json::{json, Value};

pub use cache::CACHE_ENV;

/// Library operation → the subcommand exposing it.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("compose", "perm-compose"),
    ("bubblesort_decompose", "perm-bubblesort"),
    ("cycle_type", "perm-cycle-type"),
    ("stats", "perm-stats"),
    ("hard_instance", "hard-instance"),
    ("enumerate_syt", "syt-enumerate"),
    ("hook_walk_sample", "syt-sample"),
    ("conjugate_diagram", "conjugate"),
    ("conjugate_tableau", "conjugate"),
    ("axial_distance", "axial-distance"),
    ("typewriter_data", "typewriter"),
    ("rep_adjacent", "sym-generator"),
    ("rep_permutation", "sym-rep"),
    ("matrix_element", "sym-element"),
    ("exact_character", "sym-char-exact"),
    ("associator", "associator"),
    ("split_basis", "alt-split"),
    ("alt_matrix_element", "alt-element"),
    ("roichman_f", "roichman-f"),
    ("roichman_weight", "roichman-weight"),
    ("exact_character_roichman", "sym-char-roichman"),
    ("estimate_normalized_character", "sym-char-estimate"),
    ("enumerate_patterns", "gt-patterns"),
    ("gl_action", "gl-action"),
    ("gl_action_general", "gl-generator"),
    ("gl_algebra_element", "gl-algebra"),
    ("so_action", "so-action"),
    ("gt_dimension", "gt-dim"),
    ("log_unitary_2x2", "log-unitary"),
    ("two_level_decompose", "two-level"),
    ("adjacency_reduce", "adjacency-reduce"),
    ("group_rep_u", "u-rep"),
    ("group_rep_so", "so-rep"),
    ("su_canonical_weight", "su-canonical"),
    ("weyl_character_u", "weyl-char"),
    ("weyl_character_so", "weyl-char"),
    ("weyl_dimension", "weyl-dim"),
    ("norm_profile", "norm-profile"),
    ("overlap", "hadamard-overlap"),
    ("p_zero", "hadamard-p0"),
    ("simulate_estimate", "hadamard-estimate"),
];

#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Usage(String),
    /// Well-formed input rejected by the library; exit code 1.
    Domain(IrrepError),
}

impl From<IrrepError> for CliError {
    fn from(e: IrrepError) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Domain(e) => e.to_string(),
        }
    }
}

type Parsed<T> = std::result::Result<T, CliError>;

macro_rules! list_type {
    ($name:ident, $item:ty, $parse:path) => {
        #[derive(Debug, Clone)]
        pub struct $name(pub Vec<$item>);

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                $parse(s).map($name)
            }
        }
    };
}

list_type!(Naturals, usize, codec::usize_list);
list_type!(Reals, f64, codec::f64_list);

#[derive(Parser, Debug)]
#[command(name = "irrep", version, about = "Representations of S_n, A_n, U(n), SU(n) and SO(n)")]
pub struct Cli {
    /// Sampling workers; results do not depend on this value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct TableauArg {
    /// Tableau as row JSON, e.g. "[[1,3],[2]]".
    #[arg(long, conflicts_with = "word")]
    tableau: Option<String>,
    /// Tableau as a row-reading word, cut into rows by --shape.
    #[arg(long)]
    word: Option<Naturals>,
}

#[derive(Args, Debug)]
struct WeightArg {
    /// Entries such as "2,1,0" or "0.5,0.5", or weight JSON.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, default_value = "gl")]
    group: String,
}

impl WeightArg {
    fn parse(&self) -> Parsed<irrep_core::gelfand::GTWeight> {
        codec::weight(&self.weight, &self.group)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GeneratorKind {
    /// E_{p-1,p}
    Raise,
    /// E_{p,p-1}
    Lower,
    /// E_{p,p}
    Diagonal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Composition p∘q, (p∘q)(i) = p(q(i)).
    PermCompose {
        #[arg(long)]
        p: Naturals,
        #[arg(long)]
        q: Naturals,
    },
    /// Adjacent-transposition word of a permutation.
    PermBubblesort {
        #[arg(long)]
        perm: Naturals,
    },
    PermCycleType {
        #[arg(long)]
        perm: Naturals,
    },
    PermStats {
        #[arg(long)]
        perm: Naturals,
    },
    /// The transposition (1 n).
    HardInstance {
        #[arg(long)]
        n: usize,
    },
    SytEnumerate {
        #[arg(long)]
        shape: Naturals,
    },
    /// Uniform standard tableaux by the hook walk.
    SytSample {
        #[arg(long)]
        shape: Naturals,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Conjugate of a diagram (--shape) or of a tableau (--tableau).
    Conjugate {
        #[arg(long, required_unless_present = "tableau", conflicts_with = "tableau")]
        shape: Option<Naturals>,
        #[arg(long)]
        tableau: Option<String>,
    },
    AxialDistance {
        #[command(flatten)]
        tableau: TableauArg,
        #[arg(long)]
        shape: Option<Naturals>,
        #[arg(long)]
        i: usize,
    },
    Typewriter {
        #[command(flatten)]
        tableau: TableauArg,
        #[arg(long)]
        shape: Option<Naturals>,
    },
    /// Sparse matrix of an adjacent transposition σ_i.
    SymGenerator {
        #[arg(long)]
        shape: Naturals,
        #[arg(long)]
        i: usize,
    },
    SymRep {
        #[arg(long)]
        shape: Naturals,
        #[arg(long)]
        perm: Naturals,
    },
    /// Matrix element between two standard tableaux.
    SymElement {
        #[arg(long)]
        shape: Naturals,
        #[arg(long)]
        perm: Naturals,
        #[arg(long, conflicts_with = "row_word")]
        row: Option<String>,
        #[arg(long)]
        row_word: Option<Naturals>,
        #[arg(long, conflicts_with = "col_word")]
        col: Option<String>,
        #[arg(long)]
        col_word: Option<Naturals>,
    },
    /// Character by trace, at a permutation or a cycle type.
    SymCharExact {
        #[arg(long)]
        shape: Naturals,
        #[arg(long, required_unless_present = "mu", conflicts_with = "mu")]
        perm: Option<Naturals>,
        #[arg(long)]
        mu: Option<Naturals>,
    },
    Associator {
        #[arg(long)]
        shape: Naturals,
    },
    AltSplit {
        #[arg(long)]
        shape: Naturals,
    },
    AltElement {
        #[arg(long)]
        shape: Naturals,
        #[arg(long, default_value = "whole")]
        branch: String,
        #[arg(long)]
        perm: Naturals,
        /// Zero-based basis index.
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    RoichmanF {
        #[arg(long)]
        mu: Naturals,
        #[arg(long)]
        i: usize,
        #[command(flatten)]
        tableau: TableauArg,
        #[arg(long)]
        shape: Option<Naturals>,
    },
    RoichmanWeight {
        #[arg(long)]
        mu: Naturals,
        #[command(flatten)]
        tableau: TableauArg,
        #[arg(long)]
        shape: Option<Naturals>,
    },
    /// Character by summing tableau weights.
    SymCharRoichman {
        #[arg(long)]
        shape: Naturals,
        #[arg(long)]
        mu: Naturals,
    },
    /// Monte Carlo estimate of the normalized character.
    SymCharEstimate {
        #[arg(long)]
        shape: Naturals,
        #[arg(long)]
        mu: Naturals,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    GtPatterns {
        #[command(flatten)]
        weight: WeightArg,
    },
    GtDim {
        #[command(flatten)]
        weight: WeightArg,
    },
    GlAction {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_enum)]
        generator: GeneratorKind,
        #[arg(long)]
        p: usize,
    },
    /// Action of E_ij, one-based.
    GlGenerator {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    GlAlgebra {
        #[command(flatten)]
        weight: WeightArg,
        /// n×n matrix supported on an adjacent 2×2 block.
        #[arg(long)]
        h: String,
    },
    /// Action of I_{q+1,q}.
    SoAction {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        q: usize,
    },
    LogUnitary {
        #[arg(long)]
        unitary: String,
    },
    TwoLevel {
        #[arg(long)]
        unitary: String,
    },
    AdjacencyReduce {
        #[arg(long)]
        block: String,
        /// One-based indices i < j.
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    URep {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        unitary: String,
    },
    SoRep {
        /// Entries for SO(n), n taken from the matrix.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        orthogonal: String,
    },
    SuCanonical {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    WeylChar {
        #[command(flatten)]
        weight: WeightArg,
        /// Eigenvalues as [[re, im], ...].
        #[arg(long, conflicts_with = "angles")]
        eigs: Option<String>,
        /// Eigenphases for u, rotation angles for so.
        #[arg(long, allow_hyphen_values = true)]
        angles: Option<Reals>,
    },
    WeylDim {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    NormProfile {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long)]
        h: String,
    },
    HadamardOverlap {
        #[arg(long)]
        unitary: String,
        #[arg(long)]
        state: String,
    },
    HadamardP0 {
        #[arg(long, allow_hyphen_values = true)]
        value: f64,
    },
    /// Simulated Hadamard test on a matrix or on ρ_λ(π).
    HadamardEstimate {
        #[arg(long, conflicts_with_all = ["shape", "perm"])]
        unitary: Option<String>,
        #[arg(long, requires = "perm")]
        shape: Option<Naturals>,
        #[arg(long)]
        perm: Option<Naturals>,
        #[arg(long, conflicts_with = "basis_index")]
        state: Option<String>,
        /// Zero-based basis vector used as the state.
        #[arg(long)]
        basis_index: Option<usize>,
        /// Plan JSON {epsilon, delta, part, seed}.
        #[arg(long, conflicts_with_all = ["eps", "delta", "part", "seed"])]
        plan: Option<String>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        part: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn shape_opt(shape: &Option<Naturals>) -> Parsed<Option<irrep_core::tableaux::YoungDiagram>> {
    shape.as_ref().map(|s| codec::shape(&s.0)).transpose()
}

fn read_tableau(arg: &TableauArg, shape: &Option<Naturals>) -> Parsed<StandardTableau> {
    codec::tableau(arg.tableau.as_deref(), arg.word.as_ref().map(|w| w.0.as_slice()), shape_opt(shape)?.as_ref())
}

fn factors_json(factors: &[TwoLevelFactor]) -> Value {
    Value::Array(
        factors
            .iter()
            .map(|f| json!({ "i": f.i + 1, "j": f.j + 1, "block": codec::encode_matrix(&f.block) }))
            .collect(),
    )
}

fn branch_json(vectors: &[BranchVector]) -> Value {
    Value::Array(
        vectors
            .iter()
            .map(|v| Value::Array(v.terms.iter().map(|&(i, c)| json!([i, codec::encode_complex(c)])).collect()))
            .collect(),
    )
}

fn big_number(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |small| json!(small))
}

fn execute(cli: Cli) -> Parsed<Value> {
    let threads = cli.threads;
    Ok(match cli.command {
        Command::PermCompose { p, q } => {
            json!({ "perm": codec::permutation(&p.0)?.compose(&codec::permutation(&q.0)?)? })
        }
        Command::PermBubblesort { perm } => json!({ "word": codec::permutation(&perm.0)?.bubblesort_decompose() }),
        Command::PermCycleType { perm } => json!({ "cycle_type": codec::permutation(&perm.0)?.cycle_type() }),
        Command::PermStats { perm } => json!(codec::permutation(&perm.0)?.stats()),
        Command::HardInstance { n } => json!({ "n": n, "perm": hard_instance(n)? }),
        Command::SytEnumerate { shape } => {
            let shape = codec::shape(&shape.0)?;
            cache::cached(&format!("syt-enumerate|{:?}", shape.rows()), || {
                let tableaux = enumerate_syt(&shape)?;
                Ok::<_, CliError>(json!({ "shape": shape, "count": tableaux.len(), "tableaux": tableaux }))
            })?
        }
        Command::SytSample { shape, count, seed } => {
            let shape = codec::shape(&shape.0)?;
            let mut rng = shard_rng(seed, 0);
            let samples: Vec<StandardTableau> = (0..count).map(|_| hook_walk_sample(&shape, &mut rng)).collect();
            json!({ "shape": shape, "seed": seed, "samples": samples })
        }
        Command::Conjugate { shape, tableau } => match (shape, tableau) {
            (Some(shape), _) => json!({ "shape": codec::shape(&shape.0)?.conjugate() }),
            (None, Some(t)) => json!({ "tableau": codec::tableau(Some(&t), None, None)?.conjugate() }),
            (None, None) => return Err(CliError::Usage("give --shape or --tableau".into())),
        },
        Command::AxialDistance { tableau, shape, i } => json!({ "tau": read_tableau(&tableau, &shape)?.axial_distance(i)? }),
        Command::Typewriter { tableau, shape } => json!(read_tableau(&tableau, &shape)?.typewriter_data()),
        Command::SymGenerator { shape, i } => codec::encode_sparse(&rep_adjacent(&codec::shape(&shape.0)?, i)?),
        Command::SymRep { shape, perm } => {
            let rho = rep_permutation(&codec::shape(&shape.0)?, &codec::permutation(&perm.0)?)?;
            json!({ "dim": rho.dim(), "matrix": codec::encode_matrix(rho.matrix()) })
        }
        Command::SymElement { shape, perm, row, row_word, col, col_word } => {
            let shape = codec::shape(&shape.0)?;
            let row = codec::tableau(row.as_deref(), row_word.as_ref().map(|w| w.0.as_slice()), Some(&shape))?;
            let col = codec::tableau(col.as_deref(), col_word.as_ref().map(|w| w.0.as_slice()), Some(&shape))?;
            json!({ "value": matrix_element(&shape, &codec::permutation(&perm.0)?, &row, &col)? })
        }
        Command::SymCharExact { shape, perm, mu } => {
            let p = match (perm, mu) {
                (Some(perm), _) => codec::permutation(&perm.0)?,
                (None, Some(mu)) => codec::cycle_type(&mu.0)?.representative(),
                (None, None) => return Err(CliError::Usage("give --perm or --mu".into())),
            };
            json!({ "character": exact_character(&codec::shape(&shape.0)?, &p)?.round() })
        }
        Command::Associator { shape } => {
            let shape = codec::shape(&shape.0)?;
            let irrep = SymIrrep::new(&shape)?;
            let s = associator(&shape)?;
            let pairs: Vec<Value> = s
                .pairs()
                .iter()
                .map(|p| {
                    json!({
                        "first": irrep.basis()[p.first],
                        "second": irrep.basis()[p.second],
                        "alpha": codec::encode_complex(p.alpha),
                    })
                })
                .collect();
            json!({ "shape": shape, "half_gap": s.half_gap(), "pairs": pairs, "operator": codec::encode_sparse(s.operator()) })
        }
        Command::AltSplit { shape } => {
            let split = split_basis(&codec::shape(&shape.0)?)?;
            json!({
                "dim_plus": split.plus.len(),
                "dim_minus": split.minus.len(),
                "plus": branch_json(&split.plus),
                "minus": branch_json(&split.minus),
            })
        }
        Command::AltElement { shape, branch, perm, row, col } => {
            let branch = AltBranch::from_str(&branch).map_err(|e| CliError::Usage(e.to_string()))?;
            let label = AltIrrepLabel::new(codec::shape(&shape.0)?, branch)?;
            json!({ "value": codec::encode_complex(alt_matrix_element(&label, &codec::permutation(&perm.0)?, row, col)?) })
        }
        Command::RoichmanF { mu, i, tableau, shape } => {
            let ctx = RoichmanContext::new(codec::cycle_type(&mu.0)?);
            json!({ "f": roichman_f(&ctx, i, &read_tableau(&tableau, &shape)?)? })
        }
        Command::RoichmanWeight { mu, tableau, shape } => {
            let ctx = RoichmanContext::new(codec::cycle_type(&mu.0)?);
            json!({ "weight": roichman_weight(&ctx, &read_tableau(&tableau, &shape)?)? })
        }
        Command::SymCharRoichman { shape, mu } => {
            json!({ "character": exact_character_roichman(&codec::shape(&shape.0)?, &codec::cycle_type(&mu.0)?)? })
        }
        Command::SymCharEstimate { shape, mu, eps, delta, seed } => {
            let report =
                estimate_normalized_character(&codec::shape(&shape.0)?, &codec::cycle_type(&mu.0)?, eps, delta, seed, threads)?;
            json!(report)
        }
        Command::GtPatterns { weight } => {
            let weight = weight.parse()?;
            cache::cached(&format!("gt-patterns|{}", json!(weight)), || {
                let patterns: Vec<Value> = enumerate_patterns(&weight)?
                    .iter()
                    .map(|m| {
                        Value::Array(m.twice_rows().iter().map(|row| row.iter().map(|&e| codec::encode_half(e)).collect()).collect())
                    })
                    .collect();
                Ok::<_, CliError>(json!({ "weight": weight, "dimension": patterns.len(), "patterns": patterns }))
            })?
        }
        Command::GtDim { weight } => json!({ "dimension": gt_dimension(&weight.parse()?)? }),
        Command::GlAction { weight, generator, p } => {
            let generator = match generator {
                GeneratorKind::Raise => GlGenerator::Raise(p),
                GeneratorKind::Lower => GlGenerator::Lower(p),
                GeneratorKind::Diagonal => GlGenerator::Diagonal(p),
            };
            codec::encode_sparse(&gl_action(&weight.parse()?, generator)?)
        }
        Command::GlGenerator { weight, i, j } => codec::encode_sparse(&gl_action_general(&weight.parse()?, i, j)?),
        Command::GlAlgebra { weight, h } => codec::encode_sparse(&gl_algebra_element(&weight.parse()?, &codec::matrix(&h)?)?),
        Command::SoAction { weight, q } => codec::encode_sparse(&so_action(&weight.parse()?, q)?),
        Command::LogUnitary { unitary } => json!({ "h": codec::encode_matrix(&log_unitary_2x2(&codec::matrix(&unitary)?)?) }),
        Command::TwoLevel { unitary } => {
            let u = codec::matrix(&unitary)?;
            json!({ "n": u.nrows(), "factors": factors_json(&two_level_decompose(&u)?) })
        }
        Command::AdjacencyReduce { block, i, j } => {
            if i == 0 || j == 0 {
                return Err(CliError::Usage("indices are one-based".into()));
            }
            let factor = TwoLevelFactor::new(codec::matrix(&block)?, i - 1, j - 1)?;
            json!({ "factors": factors_json(&adjacency_reduce(&factor)) })
        }
        Command::URep { weight, unitary } => {
            let a = group_rep_u(&weight.parse()?, &codec::matrix(&unitary)?)?;
            json!({ "dim": a.dim(), "matrix": codec::encode_matrix(a.matrix()) })
        }
        Command::SoRep { weight, orthogonal } => {
            let g = codec::real_matrix(&orthogonal)?;
            let a = group_rep_so(&codec::so_weight(&weight, g.nrows())?, &g)?;
            json!({ "dim": a.dim(), "matrix": codec::encode_matrix(a.matrix()) })
        }
        Command::SuCanonical { weight } => {
            let (canonical, shift) = su_canonical_weight(&codec::integer_weight(&weight)?)?;
            json!({ "canonical": canonical, "shift": shift })
        }
        Command::WeylChar { weight, eigs, angles } => {
            let w = weight.parse()?;
            let chi = match w.group() {
                irrep_core::gelfand::GroupTag::Gl => {
                    let eigenvalues = match (eigs, angles) {
                        (Some(e), _) => codec::complex_list(&e)?,
                        (None, Some(a)) => a.0.iter().map(|&t| Complex64::from_polar(1.0, t)).collect(),
                        (None, None) => return Err(CliError::Usage("give --eigs or --angles".into())),
                    };
                    let integers = w.integer_entries().expect("gl weights are integral");
                    weyl_character_u(&integers, &eigenvalues)?
                }
                _ => {
                    let angles = angles.ok_or_else(|| CliError::Usage("so characters take --angles".into()))?;
                    weyl_character_so(&w, &angles.0)?
                }
            };
            json!({ "character": codec::encode_complex(chi) })
        }
        Command::WeylDim { weight } => json!({ "dimension": big_number(weyl_dimension(&codec::integer_weight(&weight)?)?) }),
        Command::NormProfile { weight, h } => json!({ "profile": norm_profile(&weight.parse()?, &codec::matrix(&h)?)? }),
        Command::HadamardOverlap { unitary, state } => {
            json!({ "overlap": codec::encode_complex(overlap(&codec::matrix(&unitary)?, &codec::vector(&state)?)?) })
        }
        Command::HadamardP0 { value } => json!({ "p_zero": p_zero(value)? }),
        Command::HadamardEstimate { unitary, shape, perm, state, basis_index, plan, eps, delta, part, seed } => {
            let settings = match plan {
                Some(text) => serde_json::from_value::<PlanSpec>(codec::json_input(&text)?)
                    .map_err(|e| CliError::Usage(format!("plan: {e}")))?,
                None => PlanSpec {
                    epsilon: eps.ok_or_else(|| CliError::Usage("give --plan or --eps".into()))?,
                    delta: delta.ok_or_else(|| CliError::Usage("give --plan or --delta".into()))?,
                    part: part.as_deref().map(Part::from_str).transpose()?.unwrap_or(Part::Real),
                    seed: seed.unwrap_or(0),
                },
            };
            let shot_plan = ShotPlan::new(settings.epsilon, settings.delta, settings.part)?;
            let u = match (unitary, shape, perm) {
                (Some(text), _, _) => codec::matrix(&text)?,
                (None, Some(shape), Some(perm)) => {
                    rep_permutation(&codec::shape(&shape.0)?, &codec::permutation(&perm.0)?)?.into_matrix()
                }
                _ => return Err(CliError::Usage("give --unitary or --shape with --perm".into())),
            };
            let psi = match (state, basis_index) {
                (Some(text), _) => codec::vector(&text)?,
                (None, index) => {
                    let index = index.unwrap_or(0);
                    if index >= u.nrows() {
                        return Err(IrrepError::OutOfRange {
                            what: "basis index",
                            value: index as i64,
                            range: format!("[0, {})", u.nrows()),
                        }
                        .into());
                    }
                    let mut v = CVector::from_element(u.nrows(), ZERO);
                    v[index] = ONE;
                    v
                }
            };
            let estimate = simulate_estimate(&u, &psi, &shot_plan, settings.seed, threads)?;
            json!({
                "estimate": estimate.estimate,
                "stderr": estimate.stderr,
                "shots": estimate.shots,
                "seed": estimate.seed,
                "epsilon": settings.epsilon,
                "delta": settings.delta,
                "part": settings.part,
            })
        }
    })
}

fn error_json(message: &str) -> String {
    json!({ "error": message }).to_string()
}

/// Parses `argv` (program name first) and returns the exit code and stdout text.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, error_json(e.to_string().trim())),
            };
        }
    };
    if cli.threads == 0 {
        return (2, error_json("--threads must be at least 1"));
    }
    match execute(cli) {
        Ok(value) => (0, value.to_string()),
        Err(e) => {
            log::debug!("command failed: {e:?}");
            (e.exit_code(), error_json(&e.message()))
        }
    }
}

/// Names of all subcommands known to the parser.
pub fn subcommand_names() -> Vec<String> {
    use clap::CommandFactory;
    Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect()
}
