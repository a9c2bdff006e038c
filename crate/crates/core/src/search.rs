//! Exhaustive search for permutations of the form `x + γ Tr_{q^n/q}(x^k)` and
//! for permutation trinomials with Niho exponents.
//!
//! The unit of work is one (field decomposition, coset-canonical k) pair with
//! the γ loop inside it. `Tr(x^k)` does not depend on γ, so it is tabulated
//! once per unit and each candidate costs one multiply and one add per point
//! until the first collision.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    niho_trinomial, trace_family_condition, trace_family_k, ExampleId, NihoParams,
};
use crate::field::{is_prime, Elem, Field};
use crate::perm::PermChecker;
use crate::poly::{FieldMap, MapDescriptor, MapShape, TraceMap};
use crate::views::Domain;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "FFPERM_JOBS";

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest field order q^n searched (inclusive).
    pub max_order: u64,
    pub jobs: usize,
    /// Restrict to these (p, j, n) decompositions.
    pub fields: Option<Vec<(u32, u32, u32)>>,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub early_abort: bool,
}

impl SearchConfig {
    pub fn new(max_order: u64) -> Self {
        SearchConfig {
            max_order,
            jobs: default_jobs(),
            fields: None,
            out: None,
            csv: None,
            early_abort: true,
        }
    }
}

pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldKey {
    pub p: u32,
    /// q = p^j
    pub j: u32,
    /// extension degree over F_q
    pub n: u32,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub field: FieldKey,
    /// smallest member of the coset {k q^i mod (q^n − 1)}
    pub k: u64,
    pub k_coset: Vec<u64>,
    pub gamma: u32,
    pub is_pp: bool,
    pub family_tag: Option<String>,
}

impl SearchRecord {
    pub fn q(&self) -> u64 {
        (self.field.p as u64).pow(self.field.j)
    }

    pub fn to_csv_row(&self) -> String {
        let coset: Vec<String> = self.k_coset.iter().map(u64::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.field.p,
            self.field.j,
            self.field.n,
            self.k,
            coset.join(";"),
            self.gamma,
            self.is_pp,
            self.family_tag.as_deref().unwrap_or("")
        )
    }
}

pub const CSV_HEADER: &str = "p,j,n,k,k_coset,gamma,is_pp,family_tag";

/// Minimal element of `{k q^i mod (q^n − 1)}` and the sorted coset.
pub fn canonical_k(k: u64, q: u64, n: u32) -> (u64, Vec<u64>) {
    let modulus = q.pow(n) - 1;
    let mut coset = BTreeSet::new();
    let mut e = k % modulus;
    for _ in 0..n {
        coset.insert(e);
        e = ((e as u128 * q as u128) % modulus as u128) as u64;
    }
    let coset: Vec<u64> = coset.into_iter().collect();
    (coset[0], coset)
}

/// Odd-characteristic decompositions (p, j, n) with n ≥ 2 and p^{jn} ≤ bound,
/// sorted by (p, j, n).
pub fn decompositions(max_order: u64) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let mut p = 3u64;
    while p * p <= max_order {
        if is_prime(p) {
            let mut m = 2u32;
            while p.checked_pow(m).is_some_and(|o| o <= max_order) {
                for j in 1..m {
                    if m % j == 0 {
                        out.push((p as u32, j, m / j));
                    }
                }
                m += 1;
            }
        }
        p += 2;
    }
    out.sort();
    out
}

/// Which known explanation covers a found permutation, if any.
pub fn family_tag(p: u32, j: u32, n: u32, k: u64, field: &Field, gamma: Elem) -> Result<String> {
    let q = (p as u64).pow(j);
    let canon = canonical_k(k, q, n).0;
    for id in ExampleId::ALL {
        let spec = id.spec();
        if (spec.p, spec.base_degree, spec.n) == (p, j, n)
            && spec.ks.iter().any(|&ek| canonical_k(ek, q, n).0 == canon)
            && id.holds(field, gamma)?
        {
            return Ok(format!("example-{id}"));
        }
    }
    if p == 3
        && n == 2
        && j >= 2
        && canonical_k(trace_family_k(j), q, n).0 == canon
        && trace_family_condition(field, q, gamma)?
    {
        return Ok("trace-theorem".into());
    }
    let m = field.degree();
    if (0..m).any(|i| canonical_k((p as u64).pow(i), q, n).0 == canon) {
        return Ok("linear".into());
    }
    Ok("novel".into())
}

/// `x + γ T(x)` with `T = Tr(x^k)` tabulated.
struct TabulatedTrace<'a> {
    field: &'a Field,
    trace: &'a [u32],
    base_degree: u32,
    k: u64,
    gamma: u32,
}

impl FieldMap for TabulatedTrace<'_> {
    fn field(&self) -> &Field {
        self.field
    }
    fn eval(&self, x: Elem) -> Result<Elem> {
        let i = self.field.check(x)?;
        self.field.elem(self.eval_index(i)?)
    }
    fn eval_index(&self, x: u32) -> Result<u32> {
        let f = self.field;
        Ok(f.add_idx(x, f.mul_idx(self.gamma, self.trace[x as usize])))
    }
    fn descriptor(&self) -> MapDescriptor {
        MapDescriptor {
            field: self.field.descriptor(),
            shape: MapShape::Trace {
                base_degree: self.base_degree,
                n: self.field.degree() / self.base_degree,
                k: self.k,
                gamma: self.gamma,
            },
        }
    }
}

struct Unit<'a> {
    field: &'a Field,
    key: &'a FieldKey,
    k: u64,
    coset: Vec<u64>,
}

fn run_unit(unit: &Unit<'_>, early_abort: bool) -> Result<Vec<SearchRecord>> {
    let f = unit.field;
    let key = unit.key;
    let probe = TraceMap::new(f, key.j, unit.k, f.one())?;
    let trace: Vec<u32> = (0..f.order()).map(|x| probe.trace_part(x)).collect();
    let mut checker = PermChecker::new();
    let mut records = Vec::new();
    for gamma in 1..f.order() {
        let map = TabulatedTrace {
            field: f,
            trace: &trace,
            base_degree: key.j,
            k: unit.k,
            gamma,
        };
        let pp = if early_abort {
            checker.is_bijection(&map, Domain::Field(f))?
        } else {
            checker.is_bijection_exhaustive(&map, Domain::Field(f))?
        };
        if pp {
            let tag = family_tag(key.p, key.j, key.n, unit.k, f, f.elem(gamma)?)?;
            records.push(SearchRecord {
                field: key.clone(),
                k: unit.k,
                k_coset: unit.coset.clone(),
                gamma,
                is_pp: true,
                family_tag: Some(tag),
            });
        }
    }
    Ok(records)
}

/// Summary of a finished search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub decompositions: usize,
    pub units: usize,
    pub records: usize,
}

/// Runs the trace-form search, handing records to `sink` in canonical
/// (p, j, n, k, γ) order regardless of the worker count. γ = 0 is skipped:
/// the map is then the identity.
pub fn search_trace_pps(
    cfg: &SearchConfig,
    mut sink: impl FnMut(&SearchRecord) -> Result<()>,
) -> Result<SearchSummary> {
    if cfg.max_order > crate::field::ORDER_CAP {
        return Err(Error::OrderTooLarge {
            p: cfg.max_order,
            m: 1,
            cap: crate::field::ORDER_CAP,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let mut summary = SearchSummary::default();
    let mut field_cache: Option<Field> = None;
    for (p, j, n) in decompositions(cfg.max_order) {
        if let Some(filter) = &cfg.fields {
            if !filter.contains(&(p, j, n)) {
                continue;
            }
        }
        let field = match field_cache.take() {
            Some(f) if f.characteristic() == p && f.degree() == j * n => f,
            _ => Field::new(p, j * n)?,
        };
        let key = FieldKey {
            p,
            j,
            n,
            modulus: field.modulus().to_vec(),
        };
        let q = (p as u64).pow(j);
        let units: Vec<Unit<'_>> = (1..field.order() as u64 - 1)
            .filter_map(|k| {
                let (min, coset) = canonical_k(k, q, n);
                (min == k).then_some(Unit {
                    field: &field,
                    key: &key,
                    k,
                    coset,
                })
            })
            .collect();
        summary.decompositions += 1;
        summary.units += units.len();
        let results: Vec<Result<Vec<SearchRecord>>> = pool.install(|| {
            units
                .par_iter()
                .map(|u| run_unit(u, cfg.early_abort))
                .collect()
        });
        for batch in results {
            for record in batch? {
                summary.records += 1;
                sink(&record)?;
            }
        }
        field_cache = Some(field);
    }
    Ok(summary)
}

/// Runs the search and writes JSON lines to `cfg.out` (and CSV to `cfg.csv`)
/// when set. Returns every record.
pub fn run_trace_search(cfg: &SearchConfig) -> Result<(SearchSummary, Vec<SearchRecord>)> {
    let mut json = cfg
        .out
        .as_ref()
        .map(|p| File::create(p).map(BufWriter::new))
        .transpose()?;
    let mut csv = cfg
        .csv
        .as_ref()
        .map(|p| File::create(p).map(BufWriter::new))
        .transpose()?;
    if let Some(w) = csv.as_mut() {
        writeln!(w, "{CSV_HEADER}")?;
    }
    let mut all = Vec::new();
    let summary = search_trace_pps(cfg, |r| {
        if let Some(w) = json.as_mut() {
            serde_json::to_writer(&mut *w, r).map_err(std::io::Error::from)?;
            writeln!(w)?;
        }
        if let Some(w) = csv.as_mut() {
            writeln!(w, "{}", r.to_csv_row())?;
        }
        all.push(r.clone());
        Ok(())
    })?;
    if let Some(mut w) = json {
        w.flush()?;
    }
    if let Some(mut w) = csv {
        w.flush()?;
    }
    Ok((summary, all))
}

pub fn read_json_lines(path: &Path) -> Result<Vec<SearchRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(std::io::Error::from)?);
    }
    Ok(out)
}

/// Rebuilds the record's map from scratch and re-checks it.
pub fn reverify(record: &SearchRecord) -> Result<bool> {
    let key = &record.field;
    let field = Field::new(key.p, key.j * key.n)?;
    if field.modulus() != key.modulus.as_slice() {
        return Err(Error::Domain(format!(
            "modulus mismatch for p = {}, m = {}",
            key.p,
            key.j * key.n
        )));
    }
    let map = TraceMap::new(&field, key.j, record.k, field.elem(record.gamma)?)?;
    PermChecker::new().is_bijection(&map, Domain::Field(&field))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NihoRecord {
    #[serde(flatten)]
    pub params: NihoParams,
    pub exponents: (u64, u64),
    pub is_pp: bool,
    pub family_tag: Option<String>,
}

/// Every Niho trinomial over F_{5^{2k}} that permutes the field, one
/// orientation per unordered pair of terms: (s, λ₁) ≤ (t, λ₂).
pub fn search_niho(k: u32, cfg: &SearchConfig) -> Result<Vec<NihoRecord>> {
    let order = 5u64.pow(2 * k);
    if order > cfg.max_order {
        return Err(Error::Hypothesis(format!(
            "F_5^{} has order {order} above the bound {}",
            2 * k,
            cfg.max_order
        )));
    }
    let field = Field::new(5, 2 * k)?;
    let candidates: Vec<NihoParams> = NihoParams::enumerate(k)
        .filter(|p| (p.s, p.lambda1) <= (p.t, p.lambda2))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    let results: Vec<Result<Option<NihoRecord>>> = pool.install(|| {
        candidates
            .par_iter()
            .map_init(PermChecker::new, |checker, params| {
                let poly = niho_trinomial(&field, params)?;
                if !checker.is_bijection(&poly, Domain::Field(&field))? {
                    return Ok(None);
                }
                let trivial = poly.terms() == [(1, field.one())];
                Ok(Some(NihoRecord {
                    params: *params,
                    exponents: params.exponents(),
                    is_pp: true,
                    family_tag: trivial.then(|| "trivial".to_string()),
                }))
            })
            .collect()
    });
    results.into_iter().filter_map(Result::transpose).collect()
}
