//! Command-line front end. `run` parses arguments, dispatches, and returns the exit code:
//! 0 for the expected outcome, 1 for a surprise (a non-unit where a unit was asked for,
//! a non-trivial unit, a unique product, a failing golden check), 2 for usage errors.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::chains::{build_vtable, chain_orbits, minimal_chains, recursive_minimal_chains, Chain};
use crate::coeff_ring::Field;
use crate::dihedral::{decompose, length_alg, DihedralWord, Letter, Quotient};
use crate::error::{Error, Result};
use crate::gamma::{AlgebraElement, GroupElement};
use crate::matrix_rep::{is_unit, try_invert};
use crate::parse::{parse_element, parse_factors, parse_group_element};
use crate::search::{promislow_check, promislow_set, unique_product_check, unit_scan, SearchSpace};
use crate::selftest::selftest;
use crate::splitting::{coeff_gcd, coefficient_table, expand, SplitForm};

#[derive(Debug, Parser)]
#[command(name = "fours", version, about = "Exact computations in the group algebra of the Passman fours group")]
pub struct Cli {
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, env = "FOURS_FIELD", default_value = "q", value_parser = parse_field)]
    pub field: Field,
    /// Normal subgroup N_i used for lengths and decompositions.
    #[arg(long, global = true, default_value = "1", value_parser = parse_quotient)]
    pub quotient: Quotient,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for chain enumeration and search (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply elements left to right.
    Mul {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Determinant of η(α) in canonical form, with the unit verdict.
    Det {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Unit verdict by the determinant criterion.
    IsUnit {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Inverse of a unit; exits 1 on a non-unit.
    Invert {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Length of an element with respect to the chosen quotient.
    Length {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Write a group element as `n | w` with n in N_i and w an alternating word.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Expand a product of `(alpha; beta; x|y)` factors and tabulate its word coefficients.
    ExpandFactors {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// Consistent chains.
    #[command(subcommand)]
    Chains(ChainsCommand),
    /// Verify the Promislow set computations.
    Promislow,
    /// Look for a uniquely represented product in A·A, A read from a file.
    UniqueProduct { file: std::path::PathBuf },
    /// Bounded exhaustive unit search over a finite field.
    Search(SearchArgs),
    /// Run the golden checks.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum ChainsCommand {
    /// Inclusion-minimal consistent chains by exhaustive search.
    Enumerate {
        n: usize,
        #[arg(value_parser = parse_letter)]
        start: Letter,
        /// Largest chain size examined (default n).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Minimal chains by the recursive construction.
    Recursive {
        n: usize,
        #[arg(value_parser = parse_letter)]
        start: Letter,
    },
    /// Orbits of the minimal chains for both start letters.
    Orbits { n: usize },
    /// The symbolic coefficient table V_{n,γ}.
    Table {
        n: usize,
        #[arg(value_parser = parse_letter)]
        start: Letter,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Use all alternating words up to this length.
    #[arg(long, default_value_t = 1)]
    pub max_word_len: usize,
    /// Explicit comma-separated word list, e.g. `1,x`; overrides --max-word-len.
    #[arg(long, value_delimiter = ',')]
    pub words: Option<Vec<String>>,
    /// Exponent box for a and b, written `lo..hi` (inclusive).
    #[arg(long, default_value = "0..1", value_parser = parse_box, allow_hyphen_values = true)]
    pub exp_box: (i64, i64),
    /// Largest support size.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Refuse to start if the candidate count exceeds this.
    #[arg(long, default_value_t = SearchSpace::DEFAULT_BUDGET)]
    pub budget: u128,
    /// Seed for the evaluation points of the determinant filter.
    #[arg(long)]
    pub seed: Option<u64>,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_quotient(s: &str) -> std::result::Result<Quotient, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_letter(s: &str) -> std::result::Result<Letter, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_box(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad bound {lo:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad bound {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty box {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// What a subcommand produced: text lines, the JSON mirror, and whether the outcome was
/// the expected one.
struct Outcome {
    text: Vec<String>,
    json: Value,
    expected: bool,
}

impl Outcome {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Outcome { text, json, expected: true }
    }
}

/// Runs the CLI on `args` (including the program name), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Error::Usage(format!("cannot start {n} workers: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json value"))
            } else {
                o.text.iter().try_for_each(|l| writeln!(out, "{l}"))
            };
            if written.is_err() {
                return 2;
            }
            if o.expected {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let field = cli.field;
    let q = cli.quotient;
    let elem = |s: &str| parse_element(s, field);
    match &cli.command {
        Command::Mul { elements } => {
            let mut acc = AlgebraElement::one(field);
            for e in elements {
                acc = &acc * &elem(e)?;
            }
            Ok(Outcome::ok(vec![acc.to_string()], json!({ "product": acc.to_string() })))
        }
        Command::Det { element } => {
            let v = is_unit(&elem(element)?);
            Ok(Outcome::ok(
                vec![format!("det = {}", v.det), format!("unit: {}", v.is_unit)],
                json!({ "det": v.det.to_string(), "is_unit": v.is_unit }),
            ))
        }
        Command::IsUnit { element } => {
            let v = is_unit(&elem(element)?);
            Ok(Outcome::ok(
                vec![v.is_unit.to_string()],
                json!({ "is_unit": v.is_unit, "det": v.det.to_string() }),
            ))
        }
        Command::Invert { element } => match try_invert(&elem(element)?) {
            Ok(inv) => Ok(Outcome::ok(vec![inv.to_string()], json!({ "inverse": inv.to_string() }))),
            Err(Error::NotAUnit { det }) => Ok(Outcome {
                text: vec![format!("not a unit: det = {det}")],
                json: json!({ "inverse": null, "det": det }),
                expected: false,
            }),
            Err(e) => Err(e),
        },
        Command::Length { element } => {
            let l = length_alg(&elem(element)?, q);
            Ok(Outcome::ok(
                vec![l.to_string()],
                json!({ "quotient": q.to_string(), "length": l.to_string() }),
            ))
        }
        Command::Decompose { element } => {
            let g = parse_group_element(element)?;
            let (n, w) = decompose(&g, q);
            Ok(Outcome::ok(
                vec![format!("{n} | {w}")],
                json!({ "quotient": q.to_string(), "n": n.to_string(), "word": w.to_string() }),
            ))
        }
        Command::ExpandFactors { factors } => expand_factors(&factors.join(" "), field),
        Command::Chains(c) => chains(c),
        Command::Promislow => Ok(promislow()),
        Command::UniqueProduct { file } => unique_product(file),
        Command::Search(args) => search(args, field),
        Command::Selftest => {
            let r = selftest();
            let text = r
                .items
                .iter()
                .map(|i| {
                    let verdict = if i.passed { "pass" } else { "FAIL" };
                    format!("{verdict} {} [{}] {}", i.name, i.field, i.detail)
                })
                .collect();
            Ok(Outcome {
                text,
                json: serde_json::to_value(&r).expect("serializable"),
                expected: r.passed(),
            })
        }
    }
}

fn expand_factors(text: &str, field: Field) -> Result<Outcome> {
    let form = SplitForm::new(parse_factors(text, field)?)?;
    let product = expand(&form);
    let mut table: Vec<(DihedralWord, String)> =
        coefficient_table(&form).into_iter().map(|(w, p)| (w, p.to_string())).collect();
    table.sort_by(|(a, _), (b, _)| b.cmp(a));
    let gcd = if product.is_zero() { None } else { Some(coeff_gcd(&product)?) };
    let unit = is_unit(&product).is_unit;
    let mut text = vec![format!("product = {product}")];
    text.extend(table.iter().map(|(w, p)| format!("{w}: {p}")));
    text.push(format!("gcd = {}", gcd.as_ref().map_or("-".into(), |g| g.to_string())));
    text.push(format!("unit: {unit}"));
    let json = json!({
        "product": product.to_string(),
        "coefficients": table.iter().map(|(w, p)| json!({ "word": w.to_string(), "coefficient": p })).collect::<Vec<_>>(),
        "gcd": gcd.map(|g| g.to_string()),
        "is_unit": unit,
    });
    Ok(Outcome::ok(text, json))
}

fn chain_lines(set: &BTreeSet<Chain>) -> Vec<String> {
    set.iter().map(Chain::to_string).collect()
}

fn chains(c: &ChainsCommand) -> Result<Outcome> {
    match c {
        ChainsCommand::Enumerate { n, start, bound } => {
            let v = build_vtable(*n, *start)?;
            let set = minimal_chains(&v, bound.unwrap_or(*n))?;
            let lines = chain_lines(&set);
            Ok(Outcome::ok(lines.clone(), json!({ "n": n, "start": start.to_string(), "chains": lines })))
        }
        ChainsCommand::Recursive { n, start } => {
            let set = recursive_minimal_chains(*n, *start)?;
            let lines = chain_lines(&set);
            Ok(Outcome::ok(lines.clone(), json!({ "n": n, "start": start.to_string(), "chains": lines })))
        }
        ChainsCommand::Orbits { n } => {
            let mut all = BTreeSet::new();
            for start in [Letter::X, Letter::Y] {
                all.extend(minimal_chains(&build_vtable(*n, start)?, *n)?);
            }
            let orbits = chain_orbits(&all, *n);
            let mut text = Vec::new();
            for (i, o) in orbits.iter().enumerate() {
                text.push(format!("orbit {} ({} chains)", i + 1, o.len()));
                text.extend(o.iter().map(|c| format!("  {c}")));
            }
            let json = json!({ "n": n, "orbits": orbits.iter().map(chain_lines).collect::<Vec<_>>() });
            Ok(Outcome::ok(text, json))
        }
        ChainsCommand::Table { n, start } => {
            let v = build_vtable(*n, *start)?;
            let text: Vec<String> = v.to_string().lines().map(str::to_owned).collect();
            Ok(Outcome::ok(text.clone(), json!({ "n": n, "start": start.to_string(), "rows": text })))
        }
    }
}

fn promislow() -> Outcome {
    let r = promislow_check();
    let p = promislow_set();
    let unique = unique_product_check(&p, &p);
    let mut text: Vec<String> = r
        .entries
        .iter()
        .map(|e| format!("{} -> {} (length {})", e.element, e.image, e.length))
        .collect();
    text.push(format!("image matches: {}", r.image_matches));
    text.push(format!("max length: {}", r.max_length));
    text.push(format!("length 3 exactly on c-cosets of y: {}", r.length_three_are_cy));
    text.push(match &unique {
        None => format!("unique product in P·P: none ({} pairs)", p.len() * p.len()),
        Some((x, y, g)) => format!("unique product in P·P: {x} * {y} = {g}"),
    });
    let json = json!({
        "report": serde_json::to_value(&r).expect("serializable"),
        "unique_product": unique.map(|(x, y, g)| json!({ "x": x.to_string(), "y": y.to_string(), "product": g.to_string() })),
    });
    Outcome {
        text,
        json,
        expected: r.passed() && unique.is_none(),
    }
}

fn unique_product(path: &std::path::Path) -> Result<Outcome> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    let set: BTreeSet<GroupElement> = src
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_group_element)
        .collect::<Result<_>>()?;
    let found = unique_product_check(&set, &set);
    let pairs = set.len() * set.len();
    Ok(match found {
        None => Outcome::ok(
            vec![format!("no unique product among {pairs} pairs")],
            json!({ "pairs": pairs, "unique_product": null }),
        ),
        Some((x, y, g)) => Outcome {
            text: vec![format!("unique product: {x} * {y} = {g}")],
            json: json!({ "pairs": pairs, "unique_product": { "x": x.to_string(), "y": y.to_string(), "product": g.to_string() } }),
            expected: false,
        },
    })
}

fn search(args: &SearchArgs, field: Field) -> Result<Outcome> {
    let mut space = match &args.words {
        Some(ws) => {
            let words = ws.iter().map(|w| w.trim().parse()).collect::<Result<Vec<DihedralWord>>>()?;
            SearchSpace::new(field, words, args.exp_box)
        }
        None => SearchSpace::words_up_to(field, args.max_word_len, args.exp_box),
    }
    .with_budget(args.budget);
    if let Some(c) = args.cap {
        space = space.with_cap(c);
    }
    if let Some(s) = args.seed {
        space.seed = s;
    }
    let r = unit_scan(&space)?;
    let mut text = vec![
        format!("basis size: {}", r.basis_size),
        format!("candidates: {}", r.candidate_count),
        format!("tested: {}", r.tested),
        format!("filter survivors: {}", r.filter_survivors),
        format!("units: {}", r.units.len()),
        format!("non-trivial units: {}", r.nontrivial_units.len()),
    ];
    text.extend(r.nontrivial_units.iter().map(|u| format!("  {u}")));
    Ok(Outcome {
        text,
        json: serde_json::to_value(&r).expect("serializable"),
        expected: r.only_trivial_units(),
    })
}
