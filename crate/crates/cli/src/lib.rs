//! The `relroots` command line.

pub mod cache;
pub mod certfile;
pub mod checks;
pub mod output;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use relroots::grading::{commutator_support, verify_certificate, DEFAULT_SUPPORT_BOUND};
use relroots::{
    build_root_system, catalog, catalog_entry, core_definitional, core_formula, core_sufficient,
    enumerate_borel_subsets, is_regular, CatalogEntry, GammaLabel, RelativeRootSystem, Root, Series, Strategy,
};

use cache::Cache;
use certfile::CertificateFile;
use output::Record;

/// Bad input on the command line; exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(UsageError(msg.into()).into())
}

#[derive(Parser, Debug)]
#[command(name = "relroots", version, about = "Relative root systems, Borel subsets and strong gradings")]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct EntryArgs {
    /// A catalog name, or a series and rank such as `A 4`.
    #[arg(required = true, num_args = 1..=2)]
    entry: Vec<String>,
    /// trivial, flip or triality.
    #[arg(long, default_value = "trivial")]
    gamma: String,
    /// `all` or 1-based nodes such as `1,3`.
    #[arg(long = "J", default_value = "all")]
    j: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the roots of an irreducible system.
    Build { series: String, rank: usize },
    /// The relative system with fibers and classification.
    Project(EntryArgs),
    /// Enumerate the Borel subsets.
    Borel {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long, default_value = "projection")]
        strategy: String,
    },
    /// Core of one Borel subset.
    Core {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long)]
        borel: usize,
        /// definitional, sufficient, formula or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Regularity of the relative system.
    Regular(EntryArgs),
    /// Commutator support of two relative roots.
    Support {
        #[command(flatten)]
        entry: EntryArgs,
        /// Coordinates such as `1,0`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = DEFAULT_SUPPORT_BOUND)]
        bound: u32,
    },
    /// Produce a strong-grading certificate.
    Certify {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Neither read nor write the certificate cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Check a certificate file.
    Verify { file: PathBuf },
    /// List the built-in entries.
    Catalog,
    /// Run the cross-validation suite.
    Selftest,
}

fn parse_entry(a: &EntryArgs) -> anyhow::Result<CatalogEntry> {
    if let [name] = a.entry.as_slice() {
        return match catalog_entry(name) {
            Some(e) => Ok(e),
            None => usage(format!("unknown catalog entry {name:?}; see `relroots catalog`")),
        };
    }
    let series: Series = a.entry[0].parse().map_err(|e| UsageError(format!("{e}")))?;
    let rank: usize = a.entry[1].parse().map_err(|_| UsageError(format!("bad rank {:?}", a.entry[1])))?;
    let gamma: GammaLabel = a.gamma.parse().map_err(|e| UsageError(format!("{e}")))?;
    let j = if a.j == "all" {
        None
    } else {
        let nodes = a
            .j
            .split(',')
            .map(|s| s.trim().parse::<usize>().ok().filter(|&n| n >= 1).map(|n| n - 1))
            .collect::<Option<Vec<_>>>();
        match nodes {
            Some(mut n) => {
                n.sort_unstable();
                n.dedup();
                Some(n)
            }
            None => return usage(format!("bad node list {:?}", a.j)),
        }
    };
    let name = format!("{series}{rank}");
    Ok(CatalogEntry { name, series, rank, gamma, j })
}

fn resolve(a: &EntryArgs) -> anyhow::Result<(CatalogEntry, RelativeRootSystem)> {
    let e = parse_entry(a)?;
    let rel = e.resolve().map_err(input_error)?;
    Ok((e, rel))
}

/// Errors caused by the requested datum rather than by the mathematics.
fn input_error(e: relroots::Error) -> anyhow::Error {
    use relroots::Error::*;
    match e {
        InvalidArgument(_) | UnsupportedType { .. } | DatumInvalid { .. } | NotAGroup(_) | NotARelativeRoot(_)
        | ExhaustiveCap { .. } | BudgetExceeded { .. } => UsageError(e.to_string()).into(),
        other => other.into(),
    }
}

fn parse_root(s: &str) -> anyhow::Result<Root> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let coords = t.split(',').map(|c| c.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>();
    match coords {
        Ok(c) if !c.is_empty() => Ok(Root::new(c)),
        _ => usage(format!("bad root {s:?}")),
    }
}

fn coords(roots: impl IntoIterator<Item = impl AsRef<[i64]>>) -> Vec<Vec<i64>> {
    roots.into_iter().map(|r| r.as_ref().to_vec()).collect()
}

fn nodes_1based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|a| a + 1).collect()
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let json = cli.json;
    let mut rec = Record::new();
    let code = match &cli.command {
        Command::Build { series, rank } => {
            let s: Series = series.parse().map_err(|e| UsageError(format!("{e}")))?;
            let sys = build_root_system(s, *rank).map_err(input_error)?;
            rec.put("system", sys.label())
                .put("rank", sys.rank())
                .put("roots", sys.len())
                .put("positive", sys.positive_roots().count())
                .put("simple", coords(sys.simple_system().iter().map(|&i| sys.root(i).coords())))
                .put("list", coords(sys.roots().iter().map(|r| r.coords())));
            0
        }
        Command::Project(a) => {
            let (e, rel) = resolve(a)?;
            project_record(&mut rec, &e, &rel);
            0
        }
        Command::Borel { entry, strategy } => {
            let (e, rel) = resolve(entry)?;
            let s: Strategy = strategy.parse().map_err(|e| UsageError(format!("{e}")))?;
            let fam = enumerate_borel_subsets(&rel, s).map_err(input_error)?;
            rec.put("entry", &e.name).put("strategy", strategy).put("count", fam.len());
            for (i, b) in fam.iter().enumerate() {
                rec.put(format!("borel[{i}].positive"), coords(b.positive.iter().map(|r| rel.root(r).coords())));
                let w: Vec<String> = b.witness.coords().iter().map(|x| x.to_string()).collect();
                rec.put(format!("borel[{i}].witness"), w);
            }
            0
        }
        Command::Core { entry, borel, method } => {
            let (e, rel) = resolve(entry)?;
            let fam = enumerate_borel_subsets(&rel, Strategy::Projection).map_err(input_error)?;
            let Some(b) = fam.get(*borel) else {
                return usage(format!("Borel subset {borel} out of range (0..{})", fam.len()));
            };
            let show = |m: &relroots::RootSet| coords(m.iter().map(|r| rel.root(r).coords()));
            rec.put("entry", &e.name).put("borel", borel);
            let mut results = Vec::new();
            let wanted = |m: &str| method == "all" || method == m;
            if !["all", "definitional", "sufficient", "formula"].contains(&method.as_str()) {
                return usage(format!("unknown method {method:?}"));
            }
            if wanted("definitional") {
                results.push(("definitional", core_definitional(&rel, b, &fam)?.members));
            }
            if wanted("sufficient") {
                results.push(("sufficient", core_sufficient(&rel, b)?.members));
            }
            if wanted("formula") {
                results.push(("formula", core_formula(&rel, b, *borel)?.members));
            }
            for (name, m) in &results {
                rec.put(*name, show(m));
            }
            let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
            rec.put("agree", agree);
            i32::from(!agree)
        }
        Command::Regular(a) => {
            let (e, rel) = resolve(a)?;
            let reg = is_regular(&rel);
            rec.put("entry", &e.name)
                .put("type", rel.type_label())
                .put("regular", reg.regular)
                .put("min_component_rank", reg.min_component_rank);
            if let Some(w) = reg.witness {
                rec.put("witness", rel.root(w).coords());
            }
            i32::from(!reg.regular)
        }
        Command::Support { entry, alpha, beta, bound } => {
            let (e, rel) = resolve(entry)?;
            let (a, b) = (parse_root(alpha)?, parse_root(beta)?);
            if a.dim() != rel.rank() || b.dim() != rel.rank() {
                return usage(format!("roots must have {} coordinates", rel.rank()));
            }
            let s = commutator_support(&rel, &a, &b, *bound).map_err(input_error)?;
            rec.put("entry", &e.name).put("alpha", a.coords()).put("beta", b.coords()).put("terms", s.terms.len());
            for (i, j, r) in &s.terms {
                rec.put(format!("term[{i},{j}]"), r.coords());
            }
            0
        }
        Command::Certify { entry, out: path, no_cache } => {
            let (e, rel) = resolve(entry)?;
            let file = certify_cached(&e, &rel, !*no_cache)?;
            let text = file.to_json();
            match path {
                Some(p) => {
                    std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
                    rec.put("entry", &e.name)
                        .put("borel", file.body.borel.len())
                        .put("delegations", file.body.delegations.len())
                        .put("digest", &file.digest)
                        .put("written", p.display().to_string());
                }
                None => {
                    out.write_all(text.as_bytes())?;
                    return Ok(0);
                }
            }
            0
        }
        Command::Verify { file } => {
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => return usage(format!("cannot read {}: {e}", file.display())),
            };
            let (valid, reason) = verify_text(&text);
            rec.put("valid", valid);
            if let Some(r) = reason {
                rec.put("reason", r);
            }
            i32::from(!valid)
        }
        Command::Catalog => {
            for e in catalog() {
                let label = e.resolve().map(|r| r.type_label()).unwrap_or_else(|err| format!("error: {err}"));
                rec.put(&e.name, format!("{} type={label}", e.spec_string()));
            }
            0
        }
        Command::Selftest => {
            let outcomes = checks::selftest();
            for o in &outcomes {
                let status = if o.passed { "pass" } else { "FAIL" };
                rec.put(&o.name, format!("{status} {}", o.detail));
            }
            i32::from(outcomes.iter().any(|o| !o.passed))
        }
    };
    rec.write(json, out)?;
    Ok(code)
}

fn project_record(rec: &mut Record, e: &CatalogEntry, rel: &RelativeRootSystem) {
    let gamma: Vec<String> = rel.datum().gamma().elements().iter().map(|s| s.to_string()).collect();
    rec.put("entry", &e.name)
        .put("ambient", rel.ambient().label())
        .put("J", nodes_1based(rel.datum().j()))
        .put("gamma", gamma)
        .put("rank", rel.rank())
        .put("roots", rel.len())
        .put("type", rel.type_label())
        .put("simple", coords(rel.simple_images().iter().map(|&i| rel.root(i).coords())))
        .put("zero_fiber", rel.zero_fiber().len());
    for (i, r) in rel.roots().iter().enumerate() {
        rec.put(format!("root{r}"), format!("fiber={}", rel.fiber_at(i).len()));
    }
    for (i, c) in rel.components().iter().enumerate() {
        let kind = c.kind.map_or_else(|| format!("?{}", c.rank()), |t| t.to_string());
        rec.put(
            format!("component[{i}]"),
            serde_json::json!({"coordinates": c.coordinates, "type": kind, "meets_g2": c.meets_g2}),
        );
    }
}

fn certify_cached(e: &CatalogEntry, rel: &RelativeRootSystem, use_cache: bool) -> anyhow::Result<CertificateFile> {
    let fp = certfile::fingerprint(rel);
    let cache = if use_cache { cache::default_dir().map(Cache::new) } else { None };
    if let Some(file) = cache.as_ref().and_then(|c| c.load(e, &fp)) {
        return Ok(file);
    }
    let fam = enumerate_borel_subsets(rel, Strategy::Projection).map_err(input_error)?;
    let body = relroots::certify_strong(rel, &fam)?;
    let file = CertificateFile::new(e.clone(), rel, body);
    if let Some(c) = &cache {
        // A cache that cannot be written only costs time.
        let _ = c.store(&file);
    }
    Ok(file)
}

/// Full check of a certificate file: digest, root-order fingerprint and
/// the mathematical replay.
pub fn verify_text(text: &str) -> (bool, Option<String>) {
    let r = (|| {
        let file = CertificateFile::parse(text)?;
        let rel = file.header.entry.resolve()?;
        if file.header.fingerprint != certfile::fingerprint(&rel) {
            return Err(anyhow!("root-order fingerprint differs"));
        }
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection)?;
        verify_certificate(&file.body, &rel, &fam).map_err(|r| anyhow!("rejected at {r}"))
    })();
    match r {
        Ok(()) => (true, None),
        Err(e) => (false, Some(format!("{e:#}"))),
    }
}
