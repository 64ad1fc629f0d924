use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use mseg_core::enumerate::{enumerate_mult, enumerate_mult_ap, multisegments_up_to_degree};
use mseg_core::finite_gl::{count_by_scusp, is_quotient_label, st_equals_l, st_is_cuspidal, subquotient_filter, FiniteCuspidal};
use mseg_core::partition::{e_regular_partitions, partitions};
use mseg_core::segment::linked_on_tower;
use mseg_core::{Cardinal, Characteristic, Multisegment, Partition, Tower};
use mseg_hecke::bridge::linkage_bridge;
use mseg_hecke::central::central_character;
use mseg_hecke::eigen::one_dim_sub_quot;
use mseg_hecke::induce::{induce, standard_module};
use mseg_hecke::meataxe::meataxe;
use mseg_hecke::module::z_equals_l;
use mseg_hecke::relations::check_relations;
use mseg_hecke::{char_l, char_z, Character, HeckeModule, Matrix, PrimeField};

use crate::dsl::{parse_multisegment, parse_segment, parse_tower};
use crate::CliError;

type Output = Result<Value, CliError>;

#[derive(Debug, Parser)]
#[command(name = "mseg", version, about = "Multisegment calculus and affine Hecke algebra computations")]
pub struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TowerArg {
    /// Tower literal such as `tower(o0=1, l=2)`; `l=0` is characteristic 0.
    #[arg(long)]
    tower: String,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    /// Support written as a multisegment, e.g. `5*[0,0]@sc`; only its points count.
    #[arg(long, required_unless_present = "max_degree", conflicts_with = "max_degree")]
    support: Option<String>,
    /// Every multisegment of degree at most this bound instead of a fixed support.
    #[arg(long)]
    max_degree: Option<u64>,
    /// Keep only aperiodic multisegments.
    #[arg(long)]
    ap: bool,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Prime characteristic of the coefficient field.
    #[arg(long)]
    p: u64,
    /// Hecke parameter, reduced modulo `p`.
    #[arg(long, allow_hyphen_values = true)]
    xi: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form of a multisegment.
    Normalize {
        #[command(flatten)]
        tower: TowerArg,
        multisegment: String,
    },
    /// All classification data of a multisegment in one document.
    Analyze {
        #[command(flatten)]
        tower: TowerArg,
        multisegment: String,
    },
    /// Supercuspidal expansion.
    Sc {
        #[command(flatten)]
        tower: TowerArg,
        multisegment: String,
    },
    /// Aperiodic representative of the supercuspidal expansion.
    Ap {
        #[command(flatten)]
        tower: TowerArg,
        multisegment: String,
    },
    /// The partition of degrees of the derived sequence.
    Mu {
        #[command(flatten)]
        tower: TowerArg,
        multisegment: String,
    },
    /// Whether two segments are linked.
    Linked {
        #[command(flatten)]
        tower: TowerArg,
        first: String,
        second: String,
    },
    /// Whether two multisegments have the same supercuspidal expansion.
    ClassifyEqual {
        #[command(flatten)]
        tower: TowerArg,
        first: String,
        second: String,
    },
    /// List multisegments with a given support or bounded degree.
    Enum {
        #[command(flatten)]
        tower: TowerArg,
        #[command(flatten)]
        support: SupportArgs,
    },
    /// Count multisegments with a given support or bounded degree.
    Count {
        #[command(flatten)]
        tower: TowerArg,
        #[command(flatten)]
        support: SupportArgs,
    },
    /// Partitions of `n` in which no part repeats `e` or more times.
    RegularPartitions {
        #[arg(long)]
        n: u64,
        /// A positive integer or `inf`.
        #[arg(long, value_parser = parse_cardinal)]
        e: Cardinal,
        /// Include the partitions themselves, not only their number.
        #[arg(long)]
        list: bool,
    },
    /// Affine Hecke algebra computations over a prime field.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Labels for finite general linear groups.
    #[command(subcommand)]
    Finite(FiniteCommand),
}

#[derive(Debug, Subcommand)]
pub enum HeckeCommand {
    /// Verify the defining relations and the multiplication rule.
    CheckRelations {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
        /// Randomized commutation instances.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One-dimensional submodules and quotients of the standard module of `[a,b]`.
    StandardModule {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the generator matrices.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Induce from one-dimensional factors and test irreducibility.
    Induce {
        /// Composition `n_1,n_2,...`; defaults to the factor ranks.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
        /// Factors separated by `;`, each `Z[a,b]` or `L[a,b]` with an optional twist `*z`.
        #[arg(long)]
        chars: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Linkage of two segments on the parameter line against irreducibility of the induced module.
    Bridge {
        /// `a,b`
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        seg1: (i64, i64),
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        seg2: (i64, i64),
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FiniteCommand {
    /// Whether the Steinberg-type label of size `n` is cuspidal.
    StCuspidal {
        #[arg(long, value_parser = parse_cardinal)]
        e: Cardinal,
        /// Characteristic, 0 allowed.
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: u64,
    },
    /// Shapes admitted as subquotients for the shape `mu`.
    Subquotients {
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u64>,
        #[arg(long, value_parser = parse_cardinal)]
        e: Cardinal,
        #[arg(long)]
        l: u64,
    },
    /// Number of labels with supercuspidal support of size `n`.
    CountScusp {
        #[arg(long)]
        n: u64,
    },
}

fn parse_cardinal(s: &str) -> Result<Cardinal, String> {
    match s.trim() {
        "inf" => Ok(Cardinal::Infinite),
        t => t
            .parse::<u64>()
            .map(Cardinal::Finite)
            .map_err(|_| format!("expected a positive integer or 'inf', found '{t}'")),
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 'a,b', found '{s}'"))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("'{t}' is not an integer"));
    Ok((num(a)?, num(b)?))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn tower_of(arg: &TowerArg) -> Result<Tower, CliError> {
    Ok(parse_tower(&arg.tower)?)
}

#[derive(Serialize)]
struct Analysis {
    tower: String,
    input: String,
    sc: String,
    ap: String,
    mu: Vec<u64>,
    cusp: String,
    scusp: String,
}

fn analysis(tower: &Tower, input: &str, m: &Multisegment) -> Result<Analysis, CliError> {
    let keys = m.classification_keys();
    Ok(Analysis {
        tower: tower.to_string(),
        input: input.trim().to_string(),
        sc: keys.z_key.to_string(),
        ap: keys.z_key.ap()?.to_string(),
        mu: if m.is_zero() { vec![] } else { m.mu_partition()?.parts().to_vec() },
        cusp: keys.cusp.to_string(),
        scusp: keys.scusp.to_string(),
    })
}

pub fn dispatch(command: Command) -> Output {
    match command {
        Command::Normalize { tower, multisegment } => {
            let t = tower_of(&tower)?;
            let m = parse_multisegment(&multisegment, &t)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "input": multisegment.trim(),
                "normalized": m.to_string(),
                "degree": m.degree(),
            }))
        }
        Command::Analyze { tower, multisegment } => {
            let t = tower_of(&tower)?;
            let m = parse_multisegment(&multisegment, &t)?;
            Ok(to_value(&analysis(&t, &multisegment, &m)?))
        }
        Command::Sc { tower, multisegment } => {
            let t = tower_of(&tower)?;
            let m = parse_multisegment(&multisegment, &t)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "input": multisegment.trim(),
                "sc": m.sc().to_string(),
            }))
        }
        Command::Ap { tower, multisegment } => {
            let t = tower_of(&tower)?;
            let m = parse_multisegment(&multisegment, &t)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "input": multisegment.trim(),
                "ap": m.sc().ap()?.to_string(),
            }))
        }
        Command::Mu { tower, multisegment } => {
            let t = tower_of(&tower)?;
            let m = parse_multisegment(&multisegment, &t)?;
            let mu = m.mu_partition()?;
            let degrees = m.segment_degrees();
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "input": multisegment.trim(),
                "mu": mu.parts(),
                "conjugate": mu.conjugate().parts(),
                "segment_degrees": degrees.parts(),
            }))
        }
        Command::Linked { tower, first, second } => {
            let t = tower_of(&tower)?;
            let a = parse_segment(&first, &t)?;
            let b = parse_segment(&second, &t)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "first": a.to_string(),
                "second": b.to_string(),
                "linked": linked_on_tower(&t, &a, &b),
            }))
        }
        Command::ClassifyEqual { tower, first, second } => {
            let t = tower_of(&tower)?;
            let a = parse_multisegment(&first, &t)?;
            let b = parse_multisegment(&second, &t)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "first": a.to_string(),
                "second": b.to_string(),
                "equal": a.classify_equal(&b),
            }))
        }
        Command::Enum { tower, support } => {
            let (t, label, list) = enumerate(&tower, &support)?;
            let items: Vec<String> = list.iter().map(Multisegment::to_string).collect();
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "support": label,
                "ap": support.ap,
                "count": items.len(),
                "multisegments": items,
            }))
        }
        Command::Count { tower, support } => {
            let (t, label, list) = enumerate(&tower, &support)?;
            Ok(serde_json::json!({
                "tower": t.to_string(),
                "support": label,
                "ap": support.ap,
                "count": list.len(),
            }))
        }
        Command::RegularPartitions { n, e, list } => {
            if e == Cardinal::Finite(0) {
                return Err(CliError::Domain("e must be positive".into()));
            }
            let parts = e_regular_partitions(n, e);
            let mut doc = serde_json::json!({"n": n, "e": e.to_string(), "count": parts.len()});
            if list {
                doc["partitions"] = parts.iter().map(|p| Value::from(p.to_string())).collect();
            }
            Ok(doc)
        }
        Command::Hecke(cmd) => hecke(cmd),
        Command::Finite(cmd) => finite(cmd),
    }
}

fn enumerate(tower: &TowerArg, args: &SupportArgs) -> Result<(Tower, String, Vec<Multisegment>), CliError> {
    let t = tower_of(tower)?;
    let (label, mut list) = match (&args.support, args.max_degree) {
        (Some(text), _) => {
            let support = parse_multisegment(text, &t)?.support();
            let list = if args.ap { enumerate_mult_ap(&t, &support)? } else { enumerate_mult(&t, &support)? };
            (support.to_string(), list)
        }
        (None, Some(d)) => (format!("degree <= {d}"), multisegments_up_to_degree(&t, d)?),
        (None, None) => return Err(CliError::Parse("either --support or --max-degree is required".into())),
    };
    if args.ap && args.support.is_none() {
        list.retain(Multisegment::is_aperiodic);
    }
    Ok((t, label, list))
}

fn field_of(args: &FieldArgs) -> Result<(PrimeField, u64), CliError> {
    let f = PrimeField::new(args.p)?;
    let xi = f.elem(args.xi);
    if xi == 0 {
        return Err(CliError::Domain("xi must be nonzero modulo p".into()));
    }
    Ok((f, xi))
}

fn matrices(m: &HeckeModule) -> Value {
    let flat = |g: &Matrix| -> Vec<u64> { g.to_rows().concat() };
    serde_json::json!({
        "dim": m.dim(),
        "s": (1..m.rank()).map(|i| flat(m.s(i))).collect::<Vec<_>>(),
        "x": (1..=m.rank()).map(|j| flat(m.x(j))).collect::<Vec<_>>(),
    })
}

fn character_list(list: &[(Character, usize)]) -> Value {
    list.iter()
        .map(|(c, k)| serde_json::json!({"s": c.s, "x": c.x, "multiplicity": k}))
        .collect()
}

fn central_or_null(m: &HeckeModule) -> Value {
    central_character(m).map_or(Value::Null, |c| to_value(&c))
}

/// One factor of `--chars`: `Z[a,b]` or `L[a,b]`, optionally `*z`.
fn parse_factor(text: &str, f: PrimeField, xi: u64) -> Result<(String, Character), CliError> {
    let bad = || CliError::Parse(format!("factor '{text}': expected Z[a,b] or L[a,b], optionally followed by *z"));
    let t = text.trim();
    let kind = t.chars().next().ok_or_else(bad)?;
    let rest = &t[kind.len_utf8()..];
    let (body, twist) = match rest.split_once('*') {
        Some((body, z)) => (body, z.trim().parse::<i64>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let inner = body.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
    let (a, b) = parse_pair(inner).map_err(|_| bad())?;
    let z = f.elem(twist);
    if z == 0 {
        return Err(CliError::Domain(format!("factor '{t}': twist must be nonzero modulo p")));
    }
    let chi = match kind {
        'Z' | 'z' => char_z(f, xi, a, b, z)?,
        'L' | 'l' => char_l(f, xi, a, b, z)?,
        _ => return Err(bad()),
    };
    Ok((t.to_string(), chi))
}

fn hecke(cmd: HeckeCommand) -> Output {
    match cmd {
        HeckeCommand::CheckRelations { n, field, trials, seed } => {
            let (f, xi) = field_of(&field)?;
            if n == 0 {
                return Err(CliError::Domain("n must be positive".into()));
            }
            let report = check_relations(n, f, xi, trials, seed)?;
            let mut doc = to_value(&report);
            doc["all_passed"] = report.all_passed().into();
            Ok(doc)
        }
        HeckeCommand::StandardModule { a, b, field, seed, dump_matrices } => {
            let (f, xi) = field_of(&field)?;
            let m = standard_module(f, xi, a, b)?;
            let found = one_dim_sub_quot(&m);
            let z = char_z(f, xi, a, b, 1)?;
            let l = char_l(f, xi, a, b, 1)?;
            let only = |list: &[(Character, usize)], want: &Character| {
                list.len() == 1 && list[0].1 == 1 && list[0].0 == *want
            };
            let mut doc = serde_json::json!({
                "p": f.p(),
                "xi": xi,
                "segment": [a, b],
                "dim": m.dim(),
                "z": to_value(&z),
                "l": to_value(&l),
                "submodules": character_list(&found.submodules),
                "quotients": character_list(&found.quotients),
                "unique_submodule_is_z": only(&found.submodules, &z),
                "unique_quotient_is_l": only(&found.quotients, &l),
                "z_equals_l": z_equals_l(f, xi, m.rank()),
                "irreducible": meataxe(&m, seed).irreducible,
            });
            if dump_matrices {
                doc["matrices"] = matrices(&m);
            }
            Ok(doc)
        }
        HeckeCommand::Induce { alpha, chars, field, seed, dump_matrices } => {
            let (f, xi) = field_of(&field)?;
            let factors = chars
                .split(';')
                .map(|t| parse_factor(t, f, xi))
                .collect::<Result<Vec<_>, _>>()?;
            let modules = factors
                .iter()
                .map(|(_, c)| c.to_module(f, xi))
                .collect::<Result<Vec<_>, _>>()?;
            let alpha = alpha.unwrap_or_else(|| modules.iter().map(HeckeModule::rank).collect());
            let m = induce(&alpha, &modules)?;
            let verdict = meataxe(&m, seed);
            let mut doc = serde_json::json!({
                "p": f.p(),
                "xi": xi,
                "alpha": alpha,
                "factors": factors.iter().map(|(t, _)| t.clone()).collect::<Vec<_>>(),
                "dim": m.dim(),
                "irreducible": verdict.irreducible,
                "certificate": to_value(&verdict.certificate),
                "burnside": verdict.burnside,
                "central_character": central_or_null(&m),
            });
            if dump_matrices {
                doc["matrices"] = matrices(&m);
            }
            Ok(doc)
        }
        HeckeCommand::Bridge { seg1, seg2, field, seed } => {
            let (f, xi) = field_of(&field)?;
            let report = linkage_bridge(f, xi, seg1, seg2, seed)?;
            let mut doc = to_value(&report);
            doc["p"] = f.p().into();
            doc["xi"] = xi.into();
            doc["consistent"] = report.consistent().into();
            Ok(doc)
        }
    }
}

fn finite(cmd: FiniteCommand) -> Output {
    match cmd {
        FiniteCommand::StCuspidal { e, l, n } => {
            let sigma = FiniteCuspidal::new("sigma", e, Characteristic::new(l)?)?;
            Ok(serde_json::json!({
                "e": e.to_string(),
                "l": l,
                "n": n,
                "cuspidal": st_is_cuspidal(&sigma, n),
                "equals_l": st_equals_l(&sigma, n),
            }))
        }
        FiniteCommand::Subquotients { mu, e, l } => {
            let sigma = FiniteCuspidal::new("sigma", e, Characteristic::new(l)?)?;
            let mu = Partition::new(mu)?;
            let filter = subquotient_filter(&mu);
            let admitted: Vec<Value> = partitions(mu.total())
                .into_iter()
                .filter(|nu| filter.admits(nu))
                .map(|nu| serde_json::json!({"shape": nu.to_string(), "multiplicity_one": filter.multiplicity_one(&nu)}))
                .collect();
            Ok(serde_json::json!({
                "mu": mu.to_string(),
                "e": e.to_string(),
                "l": l,
                "quotient": is_quotient_label(&mu, &sigma),
                "subquotients": admitted,
            }))
        }
        FiniteCommand::CountScusp { n } => Ok(serde_json::json!({"n": n, "count": count_by_scusp(n)})),
    }
}
