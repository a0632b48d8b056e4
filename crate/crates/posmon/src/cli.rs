//! Command-line front end; every subcommand is a thin adapter over one
//! library call.
//!
//! Exit codes: 0 on success, 1 on input or validation problems, 2 when a
//! computation was aborted by a budget or search bound.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Duration;

use crate::cache::CountCache;
use crate::counting::{
    self, count_uniform, uniform_descriptor, CountOptions, Table1Options, TableCell,
};
use crate::error::{CountError, StructureError};
use crate::json::{self, FormatError};
use crate::matroid::{check_a1, check_a2, check_p, subset_label, Matroid};
use crate::monoid::{self, MonotoneFunction};
use crate::poset::Poset;
use crate::structure;

const USAGE: &str = "\
usage: posmon [--format text|json|tsv] <subcommand> [args]

subcommands:
  irreducibles <poset.json>                 list irreducible upper sets
  decompose <poset.json> --function v,v,..  near-chain canonical form
  presentation <poset.json>                 defining relations of the monoid
  groebner <poset.json>                     Groebner basis of the toric ideal
  cone <poset.json>                         extremal rays and facets
  gorenstein <poset|matroid|--uniform k,n>  level function test
  type <poset|matroid|--uniform k,n>        Cohen-Macaulay type
  primes <poset|matroid|--uniform k,n>      prime irreducible elements
  validate-matroid <matroid.json>           rank axiom check
  check-axioms <matroid.json> <mult.json>   divisibility, molecule, positivity
  slice <mult.json> -p <prime>              exponent slice at a prime
  count --uniform k,n [--budget T] [--threads N] [--no-cache]
  table1 --max-n N [--budget T per cell] [--threads N] [--stretch] [--no-cache]
  sweep --n N                               all rank tables on N elements
";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Tsv,
}

enum Failure {
    /// Bad usage or bad input data; exit 1.
    Input(String),
    /// Computation aborted by a budget or bound; exit 2.
    Aborted(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Aborted(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Aborted(m) => m,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Failure {
        Failure::Input(e.0)
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Failure {
        match e {
            CountError::BudgetExceeded { .. } => Failure::Aborted(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Failure {
        match e {
            StructureError::SearchBoundExceeded { .. } => Failure::Aborted(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args) {
        Ok(text) => {
            if write!(out, "{text}").is_err() {
                return 1;
            }
            0
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message());
            failure.code()
        }
    }
}

struct Args {
    format: Format,
    positionals: Vec<String>,
    flags: Vec<(String, Option<String>)>,
}

impl Args {
    fn parse(tokens: &[String]) -> Result<Args, Failure> {
        let mut format = Format::Text;
        let mut positionals = Vec::new();
        let mut flags = Vec::new();
        let mut queue: VecDeque<&String> = tokens.iter().collect();
        while let Some(tok) = queue.pop_front() {
            match tok.as_str() {
                "--format" => {
                    let value = queue
                        .pop_front()
                        .ok_or_else(|| input("--format needs a value"))?;
                    format = match value.as_str() {
                        "text" => Format::Text,
                        "json" => Format::Json,
                        "tsv" => Format::Tsv,
                        other => return Err(input(format!("unknown format `{other}`"))),
                    };
                }
                "--no-cache" | "--stretch" => flags.push((tok.clone(), None)),
                "--function" | "--uniform" | "--budget" | "--threads" | "--max-n" | "--n"
                | "-p" => {
                    let value = queue
                        .pop_front()
                        .ok_or_else(|| input(format!("{tok} needs a value")))?;
                    flags.push((tok.clone(), Some(value.clone())));
                }
                other if other.starts_with('-') => {
                    return Err(input(format!("unknown flag `{other}`")));
                }
                _ => positionals.push(tok.clone()),
            }
        }
        Ok(Args {
            format,
            positionals,
            flags,
        })
    }

    fn flag(&self, name: &str) -> Option<&str> {
        self.flags
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.as_deref())
    }

    fn has(&self, name: &str) -> bool {
        self.flags.iter().any(|(n, _)| n == name)
    }

    fn positional(&self, i: usize, what: &str) -> Result<&str, Failure> {
        self.positionals
            .get(i)
            .map(|s| s.as_str())
            .ok_or_else(|| input(format!("missing {what}")))
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read `{path}`: {e}")))
}

fn parse_uniform(spec: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(input(format!("--uniform expects `k,n`, got `{spec}`")));
    }
    let k = parts[0]
        .trim()
        .parse()
        .map_err(|_| input(format!("bad rank `{}`", parts[0])))?;
    let n = parts[1]
        .trim()
        .parse()
        .map_err(|_| input(format!("bad ground-set size `{}`", parts[1])))?;
    Ok((k, n))
}

fn parse_budget(spec: &str) -> Result<Duration, Failure> {
    let spec = spec.trim();
    let (digits, unit) = spec
        .find(|c: char| !c.is_ascii_digit())
        .map(|i| spec.split_at(i))
        .unwrap_or((spec, "s"));
    let value: u64 = digits
        .parse()
        .map_err(|_| input(format!("bad duration `{spec}`")))?;
    match unit {
        "ms" => Ok(Duration::from_millis(value)),
        "s" => Ok(Duration::from_secs(value)),
        "m" => Ok(Duration::from_secs(value * 60)),
        "h" => Ok(Duration::from_secs(value * 3600)),
        other => Err(input(format!("unknown duration unit `{other}`"))),
    }
}

/// Loads a poset either from a poset JSON file, a matroid JSON file (routed
/// through its induced poset on subsets), or `--uniform k,n`.
fn poset_input(args: &Args) -> Result<Poset, Failure> {
    if let Some(spec) = args.flag("--uniform") {
        let (k, n) = parse_uniform(spec)?;
        let m = Matroid::uniform(k, n).map_err(|e| input(e.to_string()))?;
        return m.slice_poset().map_err(|e| input(e.to_string()));
    }
    let path = args.positional(0, "input file")?;
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| input(format!("`{path}` is not valid JSON: {e}")))?;
    if value.get("type").is_some() {
        let matroid = json::parse_matroid(&text)?;
        if !matroid.is_valid() {
            let first = &matroid.validate()[0];
            return Err(input(format!("`{path}` is not a matroid: {first}")));
        }
        matroid.slice_poset().map_err(|e| input(e.to_string()))
    } else {
        Ok(json::parse_poset(&text)?)
    }
}

fn count_options(args: &Args) -> Result<CountOptions, Failure> {
    let mut opts = CountOptions::default();
    if let Some(t) = args.flag("--threads") {
        opts.threads = t
            .parse()
            .map_err(|_| input(format!("bad thread count `{t}`")))?;
    }
    if let Some(b) = args.flag("--budget") {
        opts.budget = Some(parse_budget(b)?);
    }
    Ok(opts)
}

fn dispatch(args: &[String]) -> Result<String, Failure> {
    // Flags may appear before or after the subcommand; the first positional
    // token is the subcommand.
    let mut rest = Args::parse(args)?;
    if rest.positionals.is_empty() {
        return Err(input(USAGE.trim_end()));
    }
    let command = rest.positionals.remove(0);
    match command.as_str() {
        "irreducibles" => cmd_irreducibles(&rest),
        "decompose" => cmd_decompose(&rest),
        "presentation" => cmd_presentation(&rest),
        "groebner" => cmd_groebner(&rest),
        "cone" => cmd_cone(&rest),
        "gorenstein" => cmd_gorenstein(&rest),
        "type" => cmd_type(&rest),
        "primes" => cmd_primes(&rest),
        "validate-matroid" => cmd_validate_matroid(&rest),
        "check-axioms" => cmd_check_axioms(&rest),
        "slice" => cmd_slice(&rest),
        "count" => cmd_count(&rest),
        "table1" => cmd_table1(&rest),
        "sweep" => cmd_sweep(&rest),
        "help" | "--help" | "-h" => Ok(USAGE.to_owned()),
        other => Err(input(format!("unknown subcommand `{other}`\n\n{USAGE}"))),
    }
}

fn set_line(set: &crate::poset::UpperSet) -> String {
    set.to_string()
}

fn cmd_irreducibles(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let irr = poset.enumerate_irreducible_upper_sets();
    Ok(match args.format {
        Format::Json => json::to_json(&json::IrreduciblesDto::new(&irr)) + "\n",
        Format::Tsv => {
            let mut s = String::from("members\n");
            for set in &irr {
                let _ = writeln!(s, "{}", set.member_labels().join(","));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for set in &irr {
                let _ = writeln!(s, "{}", set_line(set));
            }
            let _ = writeln!(s, "count: {}", irr.len());
            s
        }
    })
}

fn cmd_decompose(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let literal = args
        .flag("--function")
        .ok_or_else(|| input("decompose needs --function v,v,... in element order"))?;
    let values: Vec<u64> = literal
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| input(format!("bad value `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != poset.len() {
        return Err(input(format!(
            "function has {} values but the poset has {} elements",
            values.len(),
            poset.len()
        )));
    }
    let f = MonotoneFunction::new(&poset, values).map_err(|e| input(e.to_string()))?;
    let nc = f.near_chain_decomposition();
    Ok(match args.format {
        Format::Json => json::to_json(&json::ExprDto::from_expr(nc.expr())) + "\n",
        Format::Tsv => {
            let mut s = String::from("coefficient\tmembers\n");
            for (set, c) in nc.terms() {
                let _ = writeln!(s, "{c}\t{}", set.member_labels().join(","));
            }
            s
        }
        Format::Text => format!("{nc}\n"),
    })
}

fn cmd_presentation(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let relations = monoid::presentation(&poset);
    Ok(match args.format {
        Format::Json => {
            let dto = json::PresentationDto {
                relations: relations
                    .iter()
                    .map(|(l, r)| (json::ExprDto::from_expr(l), json::ExprDto::from_expr(r)))
                    .collect(),
            };
            json::to_json(&dto) + "\n"
        }
        Format::Tsv => {
            let mut s = String::from("lhs\trhs\n");
            for (l, r) in &relations {
                let _ = writeln!(s, "{l}\t{r}");
            }
            s
        }
        Format::Text => json::presentation_text(&relations),
    })
}

fn cmd_groebner(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let basis = monoid::groebner_basis(&poset);
    Ok(match args.format {
        Format::Json => json::to_json(&json::GroebnerDto::new(&poset, &basis)) + "\n",
        Format::Tsv => {
            let mut s = String::from("binomial\n");
            for b in &basis {
                let _ = writeln!(s, "{b}");
            }
            s
        }
        Format::Text => json::groebner_text(&poset, &basis),
    })
}

fn cmd_cone(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let cone = structure::cone_description(&poset);
    Ok(match args.format {
        Format::Json | Format::Tsv => json::to_json(&json::ConeDto::from_cone(&cone)) + "\n",
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "rays:");
            for ray in cone.ray_vectors() {
                let strs: Vec<String> = ray.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "  ({})", strs.join(","));
            }
            let _ = writeln!(s, "facets:");
            for facet in cone.facets() {
                match *facet {
                    structure::Facet::Nonneg { x } => {
                        let _ = writeln!(s, "  f({}) >= 0", poset.label(x));
                    }
                    structure::Facet::Cover { x, y } => {
                        let _ = writeln!(s, "  f({}) <= f({})", poset.label(x), poset.label(y));
                    }
                }
            }
            s
        }
    })
}

fn cmd_gorenstein(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let level = structure::level_function(&poset);
    Ok(match args.format {
        Format::Json => {
            let dto = json::GorensteinDto {
                gorenstein: level.is_some(),
                level: level.map(|l| l.values().to_vec()),
            };
            json::to_json(&dto) + "\n"
        }
        Format::Tsv | Format::Text => match level {
            Some(l) => {
                let strs: Vec<String> = l.values().iter().map(|v| v.to_string()).collect();
                format!("gorenstein: true\nlevel: {}\n", strs.join(","))
            }
            None => "gorenstein: false\n".to_owned(),
        },
    })
}

fn cmd_type(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let gens = structure::interior_minimal_generators(&poset)?;
    Ok(match args.format {
        Format::Json => {
            let dto = json::TypeDto {
                cm_type: gens.len() as u64,
                interior: json::InteriorDto::from_generators(&gens),
            };
            json::to_json(&dto) + "\n"
        }
        Format::Tsv | Format::Text => format!("{}\n", gens.len()),
    })
}

fn cmd_primes(args: &Args) -> Result<String, Failure> {
    let poset = poset_input(args)?;
    let primes = structure::primes(&poset);
    Ok(match args.format {
        Format::Json => json::to_json(&json::IrreduciblesDto::new(&primes)) + "\n",
        Format::Tsv => {
            let mut s = String::from("members\n");
            for set in &primes {
                let _ = writeln!(s, "{}", set.member_labels().join(","));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for set in &primes {
                let _ = writeln!(s, "{}", set_line(set));
            }
            let _ = writeln!(s, "count: {}", primes.len());
            s
        }
    })
}

fn cmd_validate_matroid(args: &Args) -> Result<String, Failure> {
    let path = args.positional(0, "matroid file")?;
    let matroid = json::parse_matroid(&read_file(path)?)?;
    let violations = matroid.validate();
    if violations.is_empty() {
        Ok(match args.format {
            Format::Json => "{\n  \"valid\": true,\n  \"violations\": []\n}\n".to_owned(),
            _ => "ok\n".to_owned(),
        })
    } else {
        Err(input(format!("not a matroid: {}", violations[0])))
    }
}

fn cmd_check_axioms(args: &Args) -> Result<String, Failure> {
    let matroid = json::parse_matroid(&read_file(args.positional(0, "matroid file")?)?)?;
    if !matroid.is_valid() {
        return Err(input(format!("not a matroid: {}", matroid.validate()[0])));
    }
    let mult = json::parse_multiplicity(&read_file(args.positional(1, "multiplicity file")?)?)?;
    let a1 = check_a1(&matroid, &mult).map_err(|e| input(e.to_string()))?;
    let a2 = check_a2(&matroid, &mult).map_err(|e| input(e.to_string()))?;
    let p = check_p(&matroid, &mult).map_err(|e| input(e.to_string()))?;
    Ok(match args.format {
        Format::Json => format!(
            "{{\n  \"a1\": {a1},\n  \"a2\": {a2},\n  \"p\": {p}\n}}\n"
        ),
        _ => format!("A1: {a1}\nA2: {a2}\nP: {p}\n"),
    })
}

fn cmd_slice(args: &Args) -> Result<String, Failure> {
    let mult = json::parse_multiplicity(&read_file(args.positional(0, "multiplicity file")?)?)?;
    let p: u64 = args
        .flag("-p")
        .ok_or_else(|| input("slice needs -p <prime>"))?
        .parse()
        .map_err(|_| input("bad prime"))?;
    let slice = mult.p_slice(p).map_err(|e| input(e.to_string()))?;
    Ok(match args.format {
        Format::Json => json::to_json(&json::SliceDto::from_slice(&slice)) + "\n",
        Format::Tsv => {
            let mut s = String::from("subset\texponent\n");
            for mask in 0..1u32 << slice.n() {
                let _ = writeln!(s, "{}\t{}", subset_label(mask), slice.value(mask));
            }
            s
        }
        Format::Text => {
            let mut s = format!("p: {p}\n");
            for mask in 0..1u32 << slice.n() {
                let _ = writeln!(s, "{{{}}}: {}", subset_label(mask), slice.value(mask));
            }
            s
        }
    })
}

fn cmd_count(args: &Args) -> Result<String, Failure> {
    let spec = args
        .flag("--uniform")
        .ok_or_else(|| input("count needs --uniform k,n"))?;
    let (k, n) = parse_uniform(spec)?;
    let opts = count_options(args)?;
    let descriptor = uniform_descriptor(k, n);

    let use_cache = !args.has("--no-cache");
    let mut cache = use_cache.then(|| CountCache::open(&CountCache::default_dir()));
    let result = match cache.as_ref().and_then(|c| c.get(&descriptor)) {
        Some(hit) => hit,
        None => {
            let fresh = count_uniform(k, n, &opts)?;
            if let Some(cache) = cache.as_mut() {
                cache.put(&fresh);
                let _ = cache.save();
            }
            fresh
        }
    };

    Ok(match args.format {
        Format::Json => json::to_json(&json::CountDto::from_result(&result)) + "\n",
        Format::Tsv => format!(
            "{}\n{}\n",
            json::COUNT_TSV_HEADER,
            json::count_tsv_row(n, Some(k), &TableCell::Exact(result))
        ),
        Format::Text => format!("{}\n", result.count),
    })
}

fn cmd_table1(args: &Args) -> Result<String, Failure> {
    let max_n: usize = args
        .flag("--max-n")
        .ok_or_else(|| input("table1 needs --max-n N"))?
        .parse()
        .map_err(|_| input("bad --max-n"))?;
    if max_n > 6 {
        return Err(input("table1 supports --max-n up to 6"));
    }
    let opts = Table1Options {
        count: count_options(args)?,
        stretch: args.has("--stretch"),
    };
    let use_cache = !args.has("--no-cache");
    let cache = std::cell::RefCell::new(
        use_cache.then(|| CountCache::open(&CountCache::default_dir())),
    );
    let table = counting::table1_with(
        max_n,
        &opts,
        |k, n| {
            cache
                .borrow()
                .as_ref()
                .and_then(|c| c.get(&uniform_descriptor(k, n)))
        },
        |result| {
            if let Some(cache) = cache.borrow_mut().as_mut() {
                cache.put(result);
            }
        },
    )?;
    if let Some(cache) = cache.borrow().as_ref() {
        let _ = cache.save();
    }

    Ok(match args.format {
        Format::Json => json::to_json(&json::Table1Dto::from_table(&table)) + "\n",
        Format::Tsv => json::table1_tsv(&table),
        Format::Text => {
            let mut s = String::new();
            for row in &table.rows {
                let cells: Vec<String> = row
                    .cells
                    .iter()
                    .map(|c| match c {
                        TableCell::Exact(r) => r.count.to_string(),
                        TableCell::Dual { count, .. } => count.to_string(),
                        TableCell::Timeout { .. } => "timeout".to_owned(),
                        TableCell::Skipped { .. } => "skipped".to_owned(),
                    })
                    .collect();
                let _ = writeln!(s, "n={}: {}", row.n, cells.join(" "));
            }
            s
        }
    })
}

fn cmd_sweep(args: &Args) -> Result<String, Failure> {
    let n: usize = args
        .flag("--n")
        .ok_or_else(|| input("sweep needs --n N"))?
        .parse()
        .map_err(|_| input("bad --n"))?;
    let report = counting::conjecture_sweep(n)?;
    Ok(match args.format {
        Format::Json => json::to_json(&json::SweepDto::from_report(&report)) + "\n",
        Format::Tsv => {
            let mut s = String::from("rank\tmatroids\tmax_count\tuniform_count\tattains\n");
            for row in &report.per_rank {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    row.rank, row.matroids, row.max_count, row.uniform_count, row.uniform_attains_max
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "matroids on {} elements: {}\n",
                report.n, report.matroid_count
            );
            s.push_str(
                "counting irreducible upper sets of each induced divisibility order\n",
            );
            for row in &report.per_rank {
                let _ = writeln!(
                    s,
                    "rank {}: {} matroids, max {}, uniform {}, uniform attains max: {}",
                    row.rank, row.matroids, row.max_count, row.uniform_count, row.uniform_attains_max
                );
            }
            let _ = writeln!(
                s,
                "global max {} vs half-rank uniform {}: attained {}",
                report.global_max,
                report.half_rank_uniform_count,
                report.global_attained_by_half_rank_uniform
            );
            s
        }
    })
}
