use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bruhat_cells::conjugacy::{catalog_j, compute_m, m_of_j, run_checks, Search};
use bruhat_cells::coxeter::WeylGroup;
use bruhat_cells::oracle::{empirical_wc, validate_predictions};
use bruhat_cells::partitions::cycle_type;
use bruhat_cells::perm::Perm;
use bruhat_cells::report::{CheckKind, Report};
use bruhat_cells::sl_criteria::{
    class_in_wc, decide_involution_cell, l_of, m_c, necessary_condition, nu_tilde_star, r_of,
    symmetric_group, JordanClass,
};
use bruhat_cells::{Error, Result};

/// Largest `n + 1` drawn by `hasse` without `--allow-large`.
const HASSE_LIMIT: usize = 6;

#[derive(Parser)]
#[command(
    version,
    about = "Conjugacy classes against Bruhat cells: Weyl group checks and SL(n) criteria"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Lift the size guards.
    #[arg(long, global = true)]
    allow_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChecks {
    Sound,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog subsets and the maximal set of a Weyl group.
    Catalog {
        #[arg(long = "type")]
        ty: String,
    },
    /// Run verification suites on a Weyl group.
    Verify {
        #[arg(long = "type")]
        ty: String,
        /// Comma-separated suite names, or `all`: m-classification, m-prime,
        /// min-twisted, coxeter-bound, phi, ascent, sim, conjugate-j.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
    },
    /// Cell verdicts for a Jordan class and a permutation.
    Query {
        /// Jordan class as JSON.
        class: PathBuf,
        /// Permutation in cycle notation, e.g. "(1 2)(3 4)".
        perm: String,
    },
    /// Hasse diagram of the elements below `m_C`, as DOT.
    Hasse {
        class: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Decompose a class over F_q and compare with the predictions.
    Oracle {
        class: PathBuf,
        #[arg(long)]
        q: u32,
        /// `all` also makes the complete checks count toward the exit code.
        #[arg(long, value_enum, default_value_t = OracleChecks::Sound)]
        checks: OracleChecks,
    },
}

fn load_class(path: &Path) -> Result<JordanClass> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn group_for(ty: &str, allow_large: bool, what: &str) -> Result<WeylGroup> {
    let g = WeylGroup::from_type_str(ty)?.with_allow_large(allow_large);
    g.check_guard(what)?;
    Ok(g)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn cmd_catalog(ty: &str, format: Format, allow_large: bool) -> Result<String> {
    let g = group_for(ty, allow_large, "catalog")?;
    let catalog = catalog_j(g.cartan_type());
    let m = compute_m(&g, Search::auto(&g))?;
    let mut images = Vec::new();
    for e in &catalog {
        images.push(g.format_element(&m_of_j(&g, e.nodes)?));
    }
    if format == Format::Json {
        let entries: Vec<_> = catalog
            .iter()
            .zip(&images)
            .map(|(e, img)| json!({ "name": e.name, "nodes": e.nodes, "element": img }))
            .collect();
        return Ok(pretty(&json!({
            "type": g.cartan_type().to_string(),
            "catalog": entries,
            "maximal": m.members,
        })));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {} catalog entries",
        g.cartan_type(),
        catalog.len()
    );
    for (e, img) in catalog.iter().zip(&images) {
        let _ = writeln!(out, "  {:<8} {:<16} {img}", e.name, e.nodes.to_string());
    }
    let _ = writeln!(out, "maximal set: {} elements", m.len());
    for x in &m.members {
        let _ = writeln!(
            out,
            "  {}  length {} class size {} fixes {}",
            x.formatted, x.length, x.class_size, x.fixed
        );
    }
    Ok(out)
}

fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => r.to_text(),
        Format::Json => r.to_json(),
    }
}

fn cmd_verify(
    ty: &str,
    checks: &[String],
    format: Format,
    allow_large: bool,
) -> Result<(String, bool)> {
    let g = group_for(ty, allow_large, "verify")?;
    let r = run_checks(&g, checks)?;
    Ok((render_report(&r, format), r.all_passed()))
}

fn cmd_query(path: &Path, perm: &str, format: Format) -> Result<String> {
    let c = load_class(path)?;
    let w = Perm::parse(perm, c.n_plus_1())?;
    let lambda = cycle_type(&w);
    let whole_class = class_in_wc(&c, &lambda)?;
    let involution = w.is_involution();
    let cell = if involution {
        Some(decide_involution_cell(&c, &w)?)
    } else {
        None
    };
    let necessary = necessary_condition(&c, &w)?;
    if format == Format::Json {
        return Ok(pretty(&json!({
            "class": c,
            "r": r_of(&c),
            "l": l_of(&c),
            "nu_tilde_star": nu_tilde_star(&c).to_string(),
            "m_c": m_c(&c).perm(),
            "w": w,
            "l2": w.l2(),
            "involution": involution,
            "meets_cell": cell,
            "necessary_condition": necessary,
            "cycle_type": lambda.to_string(),
            "class_inside_wc": whole_class,
        })));
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "class {c}");
    let _ = writeln!(out, "r(C) = {}", r_of(&c));
    let _ = writeln!(out, "l(C) = {}", l_of(&c));
    let _ = writeln!(out, "nu*(C) = {}", nu_tilde_star(&c));
    let _ = writeln!(out, "m_C = {}", m_c(&c).perm());
    let _ = writeln!(out, "w = {w}, l2 = {}", w.l2());
    match cell {
        Some(b) => {
            let _ = writeln!(out, "involution: C meets BwB: {}", yes_no(b));
        }
        None => {
            let verdict = if necessary {
                "holds (inconclusive)"
            } else {
                "fails, C misses BwB"
            };
            let _ = writeln!(
                out,
                "not an involution: necessary condition l2 <= r(C) {verdict}"
            );
        }
    }
    let _ = writeln!(
        out,
        "class of cycle type {lambda} inside W_C: {}",
        yes_no(whole_class)
    );
    Ok(out)
}

fn cmd_hasse(path: &Path, format: Format, allow_large: bool) -> Result<String> {
    let c = load_class(path)?;
    let n = c.n_plus_1();
    if n > HASSE_LIMIT && !allow_large {
        return Err(Error::GuardExceeded {
            what: format!("Hasse diagram in S_{n}"),
            size: (1..=n as u64).product(),
            limit: (1..=HASSE_LIMIT as u64).product(),
        });
    }
    let g = symmetric_group(n)?;
    let top = g.from_permutation(m_c(&c).perm())?;
    let mut nodes = Vec::new();
    for p in Perm::all(n) {
        let x = g.from_permutation(&p)?;
        if g.bruhat_leq(&x, &top)? {
            nodes.push((g.length(&x), p, x));
        }
    }
    nodes.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut covers = Vec::new();
    for (i, (lu, _, u)) in nodes.iter().enumerate() {
        for (j, (lw, _, w)) in nodes.iter().enumerate() {
            if *lw == lu + 1 && g.bruhat_leq(u, w)? {
                covers.push((i, j));
            }
        }
    }
    if format == Format::Json {
        let labels: Vec<String> = nodes.iter().map(|x| x.1.to_string()).collect();
        return Ok(pretty(
            &json!({ "class": c, "nodes": labels, "covers": covers }),
        ));
    }
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, (_, p, _)) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{p}\"];");
    }
    for (i, j) in covers {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    Ok(out)
}

fn list(perms: &[&Perm]) -> String {
    perms
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_oracle(
    path: &Path,
    q: u32,
    checks: OracleChecks,
    format: Format,
    allow_large: bool,
) -> Result<(String, bool)> {
    let c = load_class(path)?;
    let table = empirical_wc(&c, q, allow_large)?;
    let mut report = validate_predictions(&table)?;
    if checks == OracleChecks::Sound {
        report.records.retain(|r| r.kind != CheckKind::Complete);
    }
    let passed = report.all_passed();
    if format == Format::Json {
        return Ok((
            pretty(&json!({ "table": table, "m_c": m_c(&c).perm(), "report": report })),
            passed,
        ));
    }
    let mut out = String::new();
    let _ = writeln!(out, "class {c} over F_{q}: {} elements", table.class_size);
    let wc: Vec<&Perm> = table.wc.iter().collect();
    let wc_minus: Vec<&Perm> = table.wc_minus.iter().collect();
    let _ = writeln!(out, "W_C   ({}): {}", wc.len(), list(&wc));
    let _ = writeln!(out, "W_C^- ({}): {}", wc_minus.len(), list(&wc_minus));
    match &table.bruhat_max {
        Some(m) => {
            let _ = writeln!(out, "bruhat max: {m}");
        }
        None => {
            let maximal: Vec<&Perm> = table.maximal.iter().collect();
            let _ = writeln!(out, "bruhat max: none, maximal elements {}", list(&maximal));
        }
    }
    let _ = writeln!(out, "m_C: {}", m_c(&c).perm());
    out.push_str(&report.to_text());
    Ok((out, passed))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let (format, large) = (cli.format, cli.allow_large);
    match cli.command {
        Command::Catalog { ty } => cmd_catalog(&ty, format, large).map(|s| (s, true)),
        Command::Verify { ty, checks } => cmd_verify(&ty, &checks, format, large),
        Command::Query { class, perm } => cmd_query(&class, &perm, format).map(|s| (s, true)),
        Command::Hasse { class, out } => {
            let dot = cmd_hasse(&class, format, large)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, dot)
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Ok((String::new(), true))
                }
                None => Ok((dot, true)),
            }
        }
        Command::Oracle { class, q, checks } => cmd_oracle(&class, q, checks, format, large),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if !out.is_empty() && !out.ends_with('\n') {
                println!();
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
