//! External file formats: poset, matroid and multiplicity inputs, plus the
//! JSON, TSV and text renderings of every computation result.
//!
//! JSON output uses a stable key order throughout. Multiplicity values are
//! accepted as numbers or decimal strings and always emitted as strings so
//! that arbitrary-precision entries survive.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::counting::{CountResult, SweepReport, Table1, TableCell};
use crate::matroid::{subset_label, Matroid, MultiplicityFunction, SlicedMultiplicity};
use crate::monoid::{variable_name, BinomialRelation, FormalExpr};
use crate::poset::{Poset, UpperSet};
use crate::structure::{ConeDescription, Facet, InteriorGenerators};

/// A formatting or schema problem in an input file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct FormatError(pub String);

fn bad<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

// ---------------------------------------------------------------------------
// Poset input

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetDto {
    pub elements: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl PosetDto {
    pub fn to_poset(&self) -> Result<Poset, FormatError> {
        Poset::from_relations(&self.elements, &self.relations)
            .map_err(|e| FormatError(e.to_string()))
    }
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    let dto: PosetDto =
        serde_json::from_str(text).map_err(|e| FormatError(format!("invalid poset JSON: {e}")))?;
    dto.to_poset()
}

// ---------------------------------------------------------------------------
// Matroid input

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatroidDto {
    Uniform { r: usize, n: usize },
    RankTable { n: usize, ranks: BTreeMap<String, u8> },
}

impl MatroidDto {
    pub fn to_matroid(&self) -> Result<Matroid, FormatError> {
        match self {
            MatroidDto::Uniform { r, n } => {
                Matroid::uniform(*r, *n).map_err(|e| FormatError(e.to_string()))
            }
            MatroidDto::RankTable { n, ranks } => {
                let table = subset_table(*n, ranks, |&r| Ok(r))?;
                Matroid::from_rank_table(*n, table).map_err(|e| FormatError(e.to_string()))
            }
        }
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid, FormatError> {
    let dto: MatroidDto = serde_json::from_str(text)
        .map_err(|e| FormatError(format!("invalid matroid JSON: {e}")))?;
    dto.to_matroid()
}

/// Interprets a subset key like "" or "acd" over ground set size `n`.
fn subset_mask(key: &str, n: usize) -> Result<u32, FormatError> {
    let mut mask = 0u32;
    for ch in key.chars() {
        let e = (ch as i32) - ('a' as i32);
        if !(0..n as i32).contains(&e) {
            return bad(format!("subset key `{key}`: element `{ch}` outside ground set"));
        }
        let bit = 1u32 << e;
        if mask & bit != 0 {
            return bad(format!("subset key `{key}` repeats element `{ch}`"));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Builds a full 2^n table from keyed values, demanding every subset once.
fn subset_table<V, T>(
    n: usize,
    values: &BTreeMap<String, V>,
    convert: impl Fn(&V) -> Result<T, FormatError>,
) -> Result<Vec<T>, FormatError> {
    if n > 6 {
        return bad(format!("ground set of size {n} too large (need n <= 6)"));
    }
    let mut out: Vec<Option<T>> = (0..1usize << n).map(|_| None).collect();
    for (key, value) in values {
        let mask = subset_mask(key, n)? as usize;
        if out[mask].is_some() {
            return bad(format!("subset `{key}` listed twice"));
        }
        out[mask] = Some(convert(value)?);
    }
    out.into_iter()
        .enumerate()
        .map(|(mask, slot)| match slot {
            Some(v) => Ok(v),
            None => bad(format!("missing subset `{}`", subset_label(mask as u32))),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Multiplicity input and output

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicityDto {
    pub n: usize,
    pub values: BTreeMap<String, serde_json::Value>,
}

impl MultiplicityDto {
    pub fn to_multiplicity(&self) -> Result<MultiplicityFunction, FormatError> {
        let table = subset_table(self.n, &self.values, |v| match v {
            serde_json::Value::String(s) => s
                .parse::<BigUint>()
                .map_err(|_| FormatError(format!("`{s}` is not a decimal integer"))),
            serde_json::Value::Number(num) => match num.as_u64() {
                Some(u) => Ok(BigUint::from(u)),
                None => bad(format!("`{num}` is not a nonnegative integer")),
            },
            other => bad(format!("multiplicity value `{other}` must be an integer or string")),
        })?;
        MultiplicityFunction::new(self.n, table).map_err(|e| FormatError(e.to_string()))
    }

    pub fn from_multiplicity(m: &MultiplicityFunction) -> MultiplicityDto {
        let values = (0..1u32 << m.n())
            .map(|mask| {
                (
                    subset_label(mask),
                    serde_json::Value::String(m.value(mask).to_string()),
                )
            })
            .collect();
        MultiplicityDto { n: m.n(), values }
    }
}

pub fn parse_multiplicity(text: &str) -> Result<MultiplicityFunction, FormatError> {
    let dto: MultiplicityDto = serde_json::from_str(text)
        .map_err(|e| FormatError(format!("invalid multiplicity JSON: {e}")))?;
    dto.to_multiplicity()
}

#[derive(Debug, Clone, Serialize)]
pub struct SliceDto {
    pub n: usize,
    pub p: u64,
    pub values: BTreeMap<String, u32>,
}

impl SliceDto {
    pub fn from_slice(s: &SlicedMultiplicity) -> SliceDto {
        SliceDto {
            n: s.n(),
            p: s.prime(),
            values: (0..1u32 << s.n())
                .map(|mask| (subset_label(mask), s.value(mask)))
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Result renderings

fn set_members(set: &UpperSet) -> Vec<String> {
    set.member_labels().iter().map(|s| s.to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreduciblesDto {
    pub count: usize,
    pub irreducibles: Vec<Vec<String>>,
}

impl IrreduciblesDto {
    pub fn new(sets: &[UpperSet]) -> IrreduciblesDto {
        IrreduciblesDto {
            count: sets.len(),
            irreducibles: sets.iter().map(set_members).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExprDto {
    pub terms: Vec<ExprTermDto>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExprTermDto {
    pub set: Vec<String>,
    pub coefficient: u64,
}

impl ExprDto {
    pub fn from_expr(expr: &FormalExpr) -> ExprDto {
        ExprDto {
            terms: expr
                .terms()
                .map(|(set, coefficient)| ExprTermDto {
                    set: set_members(set),
                    coefficient,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationDto {
    pub relations: Vec<(ExprDto, ExprDto)>,
}

pub fn presentation_text(relations: &[(FormalExpr, FormalExpr)]) -> String {
    let mut out = String::new();
    for (lhs, rhs) in relations {
        let _ = writeln!(out, "{lhs} = {rhs}");
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerDto {
    pub term_order: TermOrderDto,
    pub generators: Vec<String>,
    pub binomials: Vec<BinomialDto>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermOrderDto {
    pub degree: String,
    pub tie_break: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BinomialDto {
    pub lhs: [String; 2],
    pub rhs: Vec<String>,
}

impl GroebnerDto {
    pub fn new(poset: &Poset, basis: &[BinomialRelation]) -> GroebnerDto {
        GroebnerDto {
            term_order: TermOrderDto {
                degree: "cardinality".to_owned(),
                tie_break: "revlex over the listed generator order".to_owned(),
            },
            generators: poset
                .enumerate_irreducible_upper_sets()
                .iter()
                .map(variable_name)
                .collect(),
            binomials: basis
                .iter()
                .map(|b| BinomialDto {
                    lhs: [variable_name(&b.lhs.0), variable_name(&b.lhs.1)],
                    rhs: b.rhs.iter().map(variable_name).collect(),
                })
                .collect(),
        }
    }
}

/// One relation per line, preceded by header lines fixing the term order and
/// the generator order.
pub fn groebner_text(poset: &Poset, basis: &[BinomialRelation]) -> String {
    let generators: Vec<String> = poset
        .enumerate_irreducible_upper_sets()
        .iter()
        .map(variable_name)
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "# term order: degree = cardinality, ties = revlex over the generator order below");
    let _ = writeln!(out, "# generators: {}", generators.join(" "));
    for b in basis {
        let _ = writeln!(out, "{b}");
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeDto {
    pub rays: Vec<Vec<u64>>,
    pub facets: Vec<FacetDto>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FacetDto {
    Nonneg { x: String },
    Cover { x: String, y: String },
}

impl ConeDto {
    pub fn from_cone(cone: &ConeDescription) -> ConeDto {
        let poset = cone.poset();
        ConeDto {
            rays: cone.ray_vectors(),
            facets: cone
                .facets()
                .iter()
                .map(|f| match *f {
                    Facet::Nonneg { x } => FacetDto::Nonneg {
                        x: poset.label(x).to_owned(),
                    },
                    Facet::Cover { x, y } => FacetDto::Cover {
                        x: poset.label(x).to_owned(),
                        y: poset.label(y).to_owned(),
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InteriorDto {
    pub elements: Vec<String>,
    pub generators: Vec<Vec<u64>>,
}

impl InteriorDto {
    pub fn from_generators(gens: &InteriorGenerators) -> InteriorDto {
        InteriorDto {
            elements: gens.poset().labels().to_vec(),
            generators: gens
                .generators()
                .iter()
                .map(|g| g.values().to_vec())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeDto {
    pub cm_type: u64,
    pub interior: InteriorDto,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinDto {
    pub gorenstein: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountDto {
    pub descriptor: String,
    pub count: String,
    pub millis: u64,
    pub method: String,
}

impl CountDto {
    pub fn from_result(r: &CountResult) -> CountDto {
        CountDto {
            descriptor: r.descriptor.clone(),
            count: r.count.to_string(),
            millis: r.elapsed.as_millis() as u64,
            method: r.method.clone(),
        }
    }
}

pub const COUNT_TSV_HEADER: &str = "n\tk\tcount\tmillis\tmethod";

/// TSV row for a uniform-matroid count; `k` is empty for plain posets.
pub fn count_tsv_row(n: impl ToString, k: Option<usize>, cell: &TableCell) -> String {
    let (count, millis, method) = match cell {
        TableCell::Exact(r) => (
            r.count.to_string(),
            r.elapsed.as_millis().to_string(),
            r.method.clone(),
        ),
        TableCell::Dual { of_k, count } => {
            (count.to_string(), "0".to_owned(), format!("dual-of-k={of_k}"))
        }
        TableCell::Timeout { millis } => ("timeout".to_owned(), millis.to_string(), "-".to_owned()),
        TableCell::Skipped { reason } => ("skipped".to_owned(), "0".to_owned(), reason.clone()),
    };
    format!(
        "{}\t{}\t{}\t{}\t{}",
        n.to_string(),
        k.map_or(String::new(), |k| k.to_string()),
        count,
        millis,
        method
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Dto {
    pub rows: Vec<Table1RowDto>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1RowDto {
    pub n: usize,
    pub cells: Vec<TableCellDto>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TableCellDto {
    Exact { k: usize, count: String, millis: u64, method: String },
    Dual { k: usize, of_k: usize, count: String },
    Timeout { k: usize, millis: u64 },
    Skipped { k: usize, reason: String },
}

impl Table1Dto {
    pub fn from_table(t: &Table1) -> Table1Dto {
        Table1Dto {
            rows: t
                .rows
                .iter()
                .map(|row| Table1RowDto {
                    n: row.n,
                    cells: row
                        .cells
                        .iter()
                        .enumerate()
                        .map(|(k, cell)| match cell {
                            TableCell::Exact(r) => TableCellDto::Exact {
                                k,
                                count: r.count.to_string(),
                                millis: r.elapsed.as_millis() as u64,
                                method: r.method.clone(),
                            },
                            TableCell::Dual { of_k, count } => TableCellDto::Dual {
                                k,
                                of_k: *of_k,
                                count: count.to_string(),
                            },
                            TableCell::Timeout { millis } => TableCellDto::Timeout {
                                k,
                                millis: *millis,
                            },
                            TableCell::Skipped { reason } => TableCellDto::Skipped {
                                k,
                                reason: reason.clone(),
                            },
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn table1_tsv(t: &Table1) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{COUNT_TSV_HEADER}");
    for row in &t.rows {
        for (k, cell) in row.cells.iter().enumerate() {
            let _ = writeln!(out, "{}", count_tsv_row(row.n, Some(k), cell));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepDto {
    pub n: usize,
    pub matroid_count: usize,
    pub per_rank: Vec<SweepRankDto>,
    pub global_max: String,
    pub half_rank_uniform_count: String,
    pub global_attained_by_half_rank_uniform: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRankDto {
    pub rank: usize,
    pub matroids: usize,
    pub max_count: String,
    pub uniform_count: String,
    pub uniform_attains_max: bool,
}

impl SweepDto {
    pub fn from_report(r: &SweepReport) -> SweepDto {
        SweepDto {
            n: r.n,
            matroid_count: r.matroid_count,
            per_rank: r
                .per_rank
                .iter()
                .map(|row| SweepRankDto {
                    rank: row.rank,
                    matroids: row.matroids,
                    max_count: row.max_count.to_string(),
                    uniform_count: row.uniform_count.to_string(),
                    uniform_attains_max: row.uniform_attains_max,
                })
                .collect(),
            global_max: r.global_max.to_string(),
            half_rank_uniform_count: r.half_rank_uniform_count.to_string(),
            global_attained_by_half_rank_uniform: r.global_attained_by_half_rank_uniform,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}
