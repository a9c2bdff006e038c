//! Command-line front end. Exit codes: 0 when every requested verdict holds,
//! 1 when a verification fails, 2 for usage errors and refused hypotheses.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::families::{conj1_map, conj2_map, example_map, ExampleId, TraceFamily};
use crate::field::Field;
use crate::lemmas::{run_lemma_suite, LemmaSet};
use crate::perm::{is_permutation, permutes_subset, PermChecker, PermReport};
use crate::poly::FieldMap;
use crate::search::{run_trace_search, search_niho, SearchConfig, JOBS_ENV};
use crate::views::{mu_view, omega_split, Domain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ffperm",
    version,
    about = "Verify and search permutation polynomials over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a family or lemma set and report verdicts
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive searches
    #[command(subcommand)]
    Search(Search),
    /// Show the structure of a subgroup view
    #[command(subcommand)]
    Decompose(Decompose),
}

#[derive(Args, Debug)]
struct Common {
    /// Write JSON lines to this file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// x((x²−x+2)/(x²+x+2))² over F_{5^k}, k odd
    Conj1 {
        #[arg(long)]
        k: u32,
        /// Build the map even when the hypothesis on k fails
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        common: Common,
    },
    /// −x((x²−2)/(x²+2))² on μ_{q+1}, q = 5^k, k even
    Conj2 {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        common: Common,
    },
    /// x + γ Tr(x^k) over F_{q²}, q = 3^r
    Trace {
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        common: Common,
    },
    /// One of the sporadic trace-form examples 5.1 to 5.5
    Example {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        common: Common,
    },
    /// Structural lemma suite (--k for the rational maps, --r for the trace family)
    Lemmas {
        #[arg(long, conflicts_with = "r", required_unless_present = "r")]
        k: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum Search {
    /// All x + γ Tr_{q^n/q}(x^k) permutations with q^n up to a bound
    Trace {
        /// Largest field order q^n to visit (inclusive)
        #[arg(long)]
        max_order: u64,
        /// Worker threads; results do not depend on it
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
        /// Write one JSON record per permutation
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Evaluate every point even after a collision
        #[arg(long)]
        no_early_abort: bool,
        /// Restrict to decompositions given as p,j,n (repeatable)
        #[arg(long = "field", value_parser = parse_triple)]
        fields: Vec<(u32, u32, u32)>,
    },
    /// Niho trinomials x + λ₁x^{s(5^k−1)+1} + λ₂x^{t(5^k−1)+1} over F_{5^{2k}}
    Niho {
        #[arg(long)]
        k: u32,
        #[arg(long, env = JOBS_ENV)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Decompose {
    /// μ_{q+1} in F_{q²} with q = 5^k and its Ω₊/Ω₋ halves
    Mu {
        #[arg(long)]
        k: u32,
    },
}

fn parse_triple(s: &str) -> std::result::Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    match parts.as_slice() {
        [p, j, n] => Ok((*p, *j, *n)),
        _ => Err(format!("expected p,j,n, got {s:?}")),
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: Option<BufWriter<File>>,
}

impl Output<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn json<T: serde::Serialize>(&mut self, value: &T) -> Result<()> {
        if let Some(w) = self.json.as_mut() {
            serde_json::to_writer(&mut *w, value).map_err(std::io::Error::from)?;
            writeln!(w)?;
        }
        Ok(())
    }

    fn report(&mut self, label: &str, r: &PermReport) -> Result<()> {
        let witness = match (r.witness, r.escape) {
            (Some((a, b)), _) => format!("  collision #{a} #{b}"),
            (None, Some(x)) => format!("  escape #{x}"),
            _ => String::new(),
        };
        self.line(format!(
            "{label}: {}  ({} evaluations, {:.1} ms){witness}",
            r.is_pp, r.evals, r.ms
        ))?;
        self.json(r)
    }
}

/// Runs the CLI on `args` (including the program name). Human output goes to
/// `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(e @ Error::Hypothesis(_)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn force_hint(e: Error) -> Error {
    match e {
        Error::Hypothesis(msg) => {
            Error::Hypothesis(format!("{msg} (pass --force to build the map anyway)"))
        }
        e => e,
    }
}

fn open_json(path: &Option<PathBuf>) -> Result<Option<BufWriter<File>>> {
    Ok(path
        .as_ref()
        .map(File::create)
        .transpose()?
        .map(BufWriter::new))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Verify(v) => verify(v, out),
        Command::Search(s) => search(s, out),
        Command::Decompose(Decompose::Mu { k }) => decompose_mu(k, out),
    }
}

fn verify(v: Verify, out: &mut dyn Write) -> Result<bool> {
    let ok = match v {
        Verify::Conj1 { k, force, common } => {
            let map = conj1_map(k, force).map_err(force_hint)?;
            let mut o = Output {
                out,
                json: open_json(&common.out)?,
            };
            let f = map.field().clone();
            o.line(format!("map: x((x^2-x+2)/(x^2+x+2))^2, k = {k}"))?;
            if map.certified_on().is_none() {
                o.line("denominator vanishes somewhere on the field; not pole-free")?;
                return Ok(false);
            }
            let r = is_permutation(&map, &f)?;
            o.report(&format!("PP over F_{}", f.order()), &r)?;
            r.is_pp
        }
        Verify::Conj2 { k, force, common } => {
            let (map, mu) = conj2_map(k, force).map_err(force_hint)?;
            let mut o = Output {
                out,
                json: open_json(&common.out)?,
            };
            o.line(format!(
                "map: -x((x^2-2)/(x^2+2))^2 on mu_{} in F_{}",
                mu.len(),
                mu.field().order()
            ))?;
            if map.certified_on().is_none() {
                o.line("denominator vanishes on mu; not pole-free")?;
                return Ok(false);
            }
            let r = permutes_subset(&map, &mu)?;
            o.line(format!("closure on mu_{}: {}", mu.len(), r.closed))?;
            o.line(format!(
                "injective on mu_{}: {}",
                mu.len(),
                r.injective == Some(true)
            ))?;
            o.report(&format!("bijective on mu_{}", mu.len()), &r)?;
            r.is_pp
        }
        Verify::Trace { r, common } => {
            let mut o = Output {
                out,
                json: open_json(&common.out)?,
            };
            let report = run_lemma_suite(LemmaSet::TraceFamily { r })?;
            let fam = TraceFamily::new(r)?;
            o.line(format!("family: q = {}, n = 2, k = {}", fam.q(), fam.k()))?;
            o.line(report.to_string().trim_end())?;
            o.json(&report)?;
            report.all_pass()
        }
        Verify::Example { id, common } => {
            let id: ExampleId = id.parse()?;
            let spec = id.spec();
            let mut o = Output {
                out,
                json: open_json(&common.out)?,
            };
            let maps = example_map(id)?;
            o.line(format!(
                "example {id}: q = {}, n = {}, k = {:?}, {} ({} combinations)",
                spec.q(),
                spec.n,
                spec.ks,
                spec.condition,
                maps.len()
            ))?;
            if maps.is_empty() {
                o.line("no admissible gamma")?;
                return Ok(false);
            }
            let mut all = true;
            let mut checker = PermChecker::new();
            for map in &maps {
                let r = checker.is_permutation(map, Domain::Field(map.field()))?;
                o.report(
                    &format!("k = {:>4}, gamma = #{:<5} PP", map.k(), map.gamma().index()),
                    &r,
                )?;
                all &= r.is_pp;
            }
            all
        }
        Verify::Lemmas { k, r, common } => {
            let set = match (k, r) {
                (Some(k), None) => LemmaSet::for_k(k),
                (None, Some(r)) => LemmaSet::TraceFamily { r },
                _ => return Err(Error::Hypothesis("give exactly one of --k and --r".into())),
            };
            let mut o = Output {
                out,
                json: open_json(&common.out)?,
            };
            let report = run_lemma_suite(set)?;
            o.line(report.to_string().trim_end())?;
            o.json(&report)?;
            report.all_pass()
        }
    };
    Ok(ok)
}

fn search(s: Search, out: &mut dyn Write) -> Result<bool> {
    match s {
        Search::Trace {
            max_order,
            jobs,
            out: path,
            csv,
            no_early_abort,
            fields,
        } => {
            let mut cfg = SearchConfig::new(max_order);
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            cfg.out = path;
            cfg.csv = csv;
            cfg.early_abort = !no_early_abort;
            cfg.fields = (!fields.is_empty()).then_some(fields);
            let start = Instant::now();
            let (summary, records) = run_trace_search(&cfg)?;
            writeln!(
                out,
                "# x + gamma*Tr(x^k), q^n <= {max_order}; gamma = 0 skipped (identity)"
            )?;
            writeln!(
                out,
                "{:>3} {:>2} {:>2} {:>6} {:>6}  tag",
                "p", "j", "n", "k", "gamma"
            )?;
            for r in &records {
                writeln!(
                    out,
                    "{:>3} {:>2} {:>2} {:>6} {:>6}  {}",
                    r.field.p,
                    r.field.j,
                    r.field.n,
                    r.k,
                    r.gamma,
                    r.family_tag.as_deref().unwrap_or("-")
                )?;
            }
            writeln!(
                out,
                "# {} decompositions, {} exponent cosets, {} permutations, {:.1} s",
                summary.decompositions,
                summary.units,
                summary.records,
                start.elapsed().as_secs_f64()
            )?;
            Ok(true)
        }
        Search::Niho { k, jobs, out: path } => {
            let mut cfg = SearchConfig::new(5u64.pow(2 * k));
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            let rows = search_niho(k, &cfg)?;
            let mut o = Output {
                out,
                json: open_json(&path)?,
            };
            o.line(format!(
                "# Niho trinomials over F_{} that permute the field",
                5u64.pow(2 * k)
            ))?;
            for row in &rows {
                let p = &row.params;
                o.line(format!(
                    "s = {:>3}, t = {:>3}, l1 = {:>2}, l2 = {:>2}  exponents {:?}  {}",
                    p.s,
                    p.t,
                    p.lambda1,
                    p.lambda2,
                    row.exponents,
                    row.family_tag.as_deref().unwrap_or("")
                ))?;
                o.json(row)?;
            }
            o.line(format!("# {} rows", rows.len()))?;
            Ok(true)
        }
    }
}

fn decompose_mu(k: u32, out: &mut dyn Write) -> Result<bool> {
    if k == 0 {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    let field = Field::new(5, 2 * k)?;
    let q = 5u64.pow(k);
    let mu = mu_view(&field, q)?;
    let split = omega_split(&mu)?;
    let conj_inverse = mu
        .iter()
        .all(|x| field.mul_idx(field.frobenius_idx(x.index(), k), x.index()) == 1);
    for view in [&mu, &split.plus, &split.minus] {
        let d = view.descriptor();
        writeln!(
            out,
            "{:<12} size {:>6}  first {:?}",
            d.kind, d.size, d.first
        )?;
    }
    writeln!(out, "disjoint: {}", split.disjoint)?;
    writeln!(out, "covers mu: {}", split.covers)?;
    writeln!(out, "conjugate = inverse on mu: {conj_inverse}")?;
    Ok(split.is_partition() && conj_inverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ffperm").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn conj1_k3_passes() {
        let (code, out, _) = run_capture(&["verify", "conj1", "--k", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("PP over F_125: true"), "{out}");
    }

    #[test]
    fn conj1_even_k_is_refused() {
        let (code, _, err) = run_capture(&["verify", "conj1", "--k", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("must be odd"));
        // forced, the denominator has roots in F_25
        let (code, out, _) = run_capture(&["verify", "conj1", "--k", "2", "--force"]);
        assert_eq!(code, 1, "{out}");
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, err) = run_capture(&["verify", "conj1", "--bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn lemmas_need_one_parameter() {
        let (code, _, _) = run_capture(&["verify", "lemmas"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["verify", "lemmas", "--k", "1", "--r", "2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn decompose_mu_k2() {
        let (code, out, _) = run_capture(&["decompose", "mu", "--k", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("size     26"), "{out}");
    }
}
