//! Command-line interface.
//!
//! Every command produces a [`Report`] holding both renderings and the exit
//! code, so text and JSON output always agree on the verdict.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use illoc_core::hyper::nonstandard_at;
use illoc_core::matrix_m::{check_matrix_properties, eval_m, truth_table, AtomValuation2, TautologyM};
use illoc_core::matrix_mb::{self, eval_mb, render_unfolded, unfold_cyclic, unfold_formula, MbSpace, Program};
use illoc_core::opposition::{self, mb_counterexample, square_for_force, Counterexample, OppositionReport, Space};
use illoc_core::search::DEFAULT_BUDGET;
use illoc_core::syntax::{detect_cycles, parse, print, print_document, ActDefinitions, Document, Formula};
use illoc_core::{AlgebraSpec, Element, Error, HyperValue, MbMode, MbValuation, ParseError};
use serde_json::{json, Value as Json};

use crate::json::{
    assignment_to_json, counterexample_to_json, report_to_json, truth_to_json, DocumentJson, HyperJson, ValuationJson,
};
use crate::parallel;

#[derive(Debug, Parser)]
#[command(name = "illoc", version, about = "Evaluate and check formulas of illocutionary logic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,

    /// Maximum number of evaluator calls for one search.
    #[arg(long, global = true, env = "ILLOC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// Worker threads for searches (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Matrix {
    /// The four-valued matrix.
    M,
    /// The matrix over `*B`.
    Mb,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Matrix to use; defaults to `mb` when a mode, valuation or generator is given, else `m`.
    #[arg(long, value_enum)]
    pub matrix: Option<Matrix>,

    /// Atoms of the finite Boolean algebra, comma separated.
    #[arg(long, default_value = "a,b")]
    pub atoms: String,

    /// Valuation mode for `*B` [free, pointwise, connective; default pointwise].
    #[arg(long)]
    pub mode: Option<MbMode>,

    /// Also consider valuations where some act takes a standard value.
    #[arg(long)]
    pub include_inadmissible: bool,

    /// File with act definitions.
    #[arg(long)]
    pub defs: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    /// Formula text.
    #[arg(required_unless_present = "file")]
    pub formula: Option<String>,

    /// Read the formula (and act definitions) from a file.
    #[arg(long, conflicts_with = "formula")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula under one valuation.
    Eval {
        #[command(flatten)]
        input: FormulaArgs,
        #[command(flatten)]
        space: SpaceArgs,
        /// Valuation JSON file for `*B`.
        #[arg(long)]
        valuation: Option<PathBuf>,
        /// Atom value, e.g. `p=1` (matrix m) or `p=a,b` (matrix mb).
        #[arg(long = "assign", value_name = "ATOM=VALUE")]
        assign: Vec<String>,
    },
    /// Print the value of a formula under every valuation.
    Table {
        #[command(flatten)]
        input: FormulaArgs,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Check whether a formula is a tautology.
    Taut {
        #[command(flatten)]
        input: FormulaArgs,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Check the matrix properties (1)-(7).
    CheckMatrix,
    /// Report the square of opposition for a force.
    Square {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "f")]
        force: String,
        #[arg(long, default_value = "p")]
        atom: String,
        /// Single generator, e.g. `on_true=a;on_false=`; all generators when absent.
        #[arg(long)]
        gen: Option<String>,
    },
    /// Check whether one formula entails another.
    Entail {
        left: String,
        right: String,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Evaluate a finite unfolding of a cyclic act.
    Unfold {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        act: String,
        #[arg(long, default_value_t = 4)]
        steps: usize,
        /// Value standing for the truncated remainder, e.g. `standard:0`.
        #[arg(long, default_value = "standard:0")]
        seed: String,
        /// Valuation JSON file; missing entries default to bottom for atoms
        /// and the first nonstandard value for acts.
        #[arg(long)]
        valuation: Option<PathBuf>,
    },
    /// Print a formula file in canonical form.
    Fmt {
        #[command(flatten)]
        input: FormulaArgs,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse { source: String, text: String, error: ParseError },
    Core(Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Core(Error::BudgetExceeded { .. }) => 4,
            CliError::Core(_) | CliError::Input(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Core(Error::BudgetExceeded { .. }) => "budget",
            CliError::Core(_) | CliError::Input(_) => "semantic",
        }
    }

    pub fn to_json(&self) -> Json {
        let mut j = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Parse { error, .. } = self {
            j["line"] = json!(error.line);
            j["column"] = json!(error.column);
            j["offset"] = json!(error.offset);
        }
        json!({ "error": j })
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { source, text, error } => {
                writeln!(f, "{source}:{error}")?;
                if let Some(line) = text.lines().nth(error.line.saturating_sub(1)) {
                    writeln!(f, "  {line}")?;
                    write!(f, "  {}^", " ".repeat(error.column.saturating_sub(1)))?;
                }
                Ok(())
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// Result of a command.
#[derive(Debug)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Json,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Json => serde_json::to_string_pretty(&self.json).expect("plain data") + "\n",
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Ctx { budget: cli.budget, jobs: cli.jobs.unwrap_or_else(parallel::default_jobs) };
    match &cli.command {
        Command::Eval { input, space, valuation, assign } => ctx.eval(input, space, valuation.as_deref(), assign),
        Command::Table { input, space } => ctx.table(input, space),
        Command::Taut { input, space } => ctx.taut(input, space),
        Command::CheckMatrix => Ok(check_matrix()),
        Command::Square { space, force, atom, gen } => ctx.square(space, force, atom, gen.as_deref()),
        Command::Entail { left, right, space } => ctx.entail(left, right, space),
        Command::Unfold { space, act, steps, seed, valuation } => {
            ctx.unfold(space, act, *steps, seed, valuation.as_deref())
        }
        Command::Fmt { input } => fmt(input),
    }
}

struct Ctx {
    budget: u64,
    jobs: usize,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_doc(source: &str, text: &str) -> Result<Document, CliError> {
    parse(text).map_err(|error| CliError::Parse { source: source.into(), text: text.into(), error })
}

/// Identifiers naming a definition become act references.
fn resolve(f: &Formula, defs: &ActDefinitions) -> Formula {
    match f {
        Formula::Atom(n) if defs.contains(n) => Formula::act_ref(n.clone()),
        Formula::Atom(_) | Formula::ActRef(_) => f.clone(),
        Formula::Not(x) => Formula::not(resolve(x, defs)),
        Formula::And(l, r) => Formula::and(resolve(l, defs), resolve(r, defs)),
        Formula::Or(l, r) => Formula::or(resolve(l, defs), resolve(r, defs)),
        Formula::Implies(l, r) => Formula::implies(resolve(l, defs), resolve(r, defs)),
        Formula::Force(n, x) => Formula::force(n.clone(), resolve(x, defs)),
    }
}

fn load_defs(path: Option<&Path>) -> Result<ActDefinitions, CliError> {
    match path {
        None => Ok(ActDefinitions::new()),
        Some(p) => {
            let text = read(p)?;
            Ok(parse_doc(&p.display().to_string(), &text)?.definitions)
        }
    }
}

fn merge(mut defs: ActDefinitions, more: ActDefinitions) -> Result<ActDefinitions, CliError> {
    for (n, b) in more.iter() {
        defs.insert(n, b.clone())?;
    }
    let resolved: Vec<(String, Formula)> = defs.iter().map(|(n, b)| (n.to_string(), resolve(b, &defs))).collect();
    let mut out = ActDefinitions::new();
    for (n, b) in resolved {
        out.insert(n, b)?;
    }
    out.validate()?;
    Ok(out)
}

/// A formula given inline or by file, with its definitions.
fn load_text(source: &str, text: &str, defs_path: Option<&Path>) -> Result<(ActDefinitions, Formula), CliError> {
    let doc = parse_doc(source, text)?;
    let defs = merge(load_defs(defs_path)?, doc.definitions)?;
    let f = doc.formula.ok_or_else(|| CliError::Input(format!("{source}: no formula")))?;
    let f = resolve(&f, &defs);
    defs.check_refs(&f)?;
    Ok((defs, f))
}

fn load(input: &FormulaArgs, defs_path: Option<&Path>) -> Result<(ActDefinitions, Formula), CliError> {
    match (&input.formula, &input.file) {
        (Some(text), _) => load_text("<formula>", text, defs_path),
        (None, Some(p)) => load_text(&p.display().to_string(), &read(p)?, defs_path),
        (None, None) => Err(CliError::Input("no formula given".into())),
    }
}

fn algebra(space: &SpaceArgs) -> Result<AlgebraSpec, CliError> {
    let atoms: Vec<&str> = space.atoms.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(AlgebraSpec::new(atoms)?)
}

fn matrix(space: &SpaceArgs, implied_mb: bool) -> Matrix {
    space.matrix.unwrap_or(if implied_mb || space.mode.is_some() { Matrix::Mb } else { Matrix::M })
}

fn mode(space: &SpaceArgs) -> MbMode {
    space.mode.unwrap_or(MbMode::Pointwise)
}

fn opposition_space(space: &SpaceArgs, implied_mb: bool) -> Result<Space, CliError> {
    Ok(match matrix(space, implied_mb) {
        Matrix::M => Space::M,
        Matrix::Mb => {
            Space::Mb { algebra: algebra(space)?, mode: mode(space), admissible_only: !space.include_inadmissible }
        }
    })
}

fn element_arg(alg: &AlgebraSpec, s: &str) -> Result<Element, CliError> {
    let s = s.trim();
    let s = s.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(s);
    match s {
        "0" => return Ok(alg.bottom()),
        "1" => return Ok(alg.top()),
        _ => {}
    }
    let names: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    Ok(alg.element(names)?)
}

/// Parses `standard:X`, `on_true=X;on_false=Y`, `*X`, `<X,Y>` or hyper JSON.
pub fn hyper_arg(alg: &AlgebraSpec, s: &str) -> Result<HyperValue, CliError> {
    let s = s.trim();
    if s.starts_with('{') {
        let j: HyperJson = serde_json::from_str(s).map_err(|e| CliError::Input(format!("hyper value: {e}")))?;
        return Ok(j.to_value(alg)?);
    }
    if let Some(x) = s.strip_prefix("standard:").or_else(|| s.strip_prefix('*')) {
        return Ok(HyperValue::standard(element_arg(alg, x)?));
    }
    if let Some(inner) = s.strip_prefix('<').and_then(|x| x.strip_suffix('>')) {
        let split =
            inner.find("},").ok_or_else(|| CliError::Input(format!("hyper value {s:?}: expected <{{..}},{{..}}>")))?;
        let (t, f) = (&inner[..=split], &inner[split + 2..]);
        return Ok(HyperValue::new(element_arg(alg, t)?, element_arg(alg, f)?)?);
    }
    let mut on_true = None;
    let mut on_false = None;
    for part in s.split(';') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("hyper value {s:?}: expected key=value pairs")))?;
        match k.trim() {
            "on_true" => on_true = Some(element_arg(alg, v)?),
            "on_false" => on_false = Some(element_arg(alg, v)?),
            other => return Err(CliError::Input(format!("hyper value: unknown key {other:?}"))),
        }
    }
    match (on_true, on_false) {
        (Some(t), Some(f)) => Ok(HyperValue::new(t, f)?),
        _ => Err(CliError::Input(format!("hyper value {s:?}: needs on_true and on_false"))),
    }
}

fn load_valuation(path: &Path) -> Result<MbValuation, CliError> {
    let text = read(path)?;
    let j: ValuationJson =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(j.to_valuation()?)
}

fn hyper_json(alg: &AlgebraSpec, h: HyperValue) -> Json {
    serde_json::to_value(HyperJson::from_value(alg, h)).expect("plain data")
}

fn render_mb_valuation(v: &MbValuation) -> String {
    let alg = &v.algebra;
    let mut parts = Vec::new();
    for (a, e) in &v.atom_values {
        parts.push(format!("{a}={}", alg.render(*e)));
    }
    for (k, h) in &v.act_values {
        parts.push(format!("{k}={}", h.render(alg)));
    }
    for (f, m) in &v.generators {
        for (a, h) in m {
            parts.push(format!("[{f}]{a}={}", h.render(alg)));
        }
    }
    for (f, h) in &v.signatures {
        parts.push(format!("[{f}]={}", h.render(alg)));
    }
    parts.join(", ")
}

fn render_valuation(v: &opposition::Valuation) -> String {
    match v {
        opposition::Valuation::M(e) => e.to_string(),
        opposition::Valuation::Mb(v) => render_mb_valuation(v),
    }
}

fn render_value(alg: Option<&AlgebraSpec>, v: opposition::Value) -> String {
    match v {
        opposition::Value::M(t) => t.to_string(),
        opposition::Value::Mb(h) => h.render(alg.expect("*B values need their algebra")),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

impl Ctx {
    fn eval(
        &self,
        input: &FormulaArgs,
        space: &SpaceArgs,
        valuation: Option<&Path>,
        assign: &[String],
    ) -> Result<Report, CliError> {
        let (defs, f) = load(input, space.defs.as_deref())?;
        let printed = print(&f);
        let mut pairs = Vec::new();
        for a in assign {
            let (k, v) =
                a.split_once('=').ok_or_else(|| CliError::Input(format!("--assign {a:?}: expected ATOM=VALUE")))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        match matrix(space, valuation.is_some()) {
            Matrix::M => {
                let mut e = AtomValuation2::new();
                for (k, v) in &pairs {
                    let b = match v.as_str() {
                        "1" | "true" => true,
                        "0" | "false" => false,
                        _ => return Err(CliError::Input(format!("--assign {k}={v}: expected 0 or 1"))),
                    };
                    e = e.with(k, b);
                }
                let v = eval_m(&f, &e, &defs)?;
                let class = v.classify();
                Ok(Report {
                    code: 0,
                    text: format!("{v} {class}\n"),
                    json: json!({
                        "formula": printed,
                        "matrix": "m",
                        "valuation": assignment_to_json(&e),
                        "value": truth_to_json(v),
                        "classification": class.as_str(),
                    }),
                })
            }
            Matrix::Mb => {
                let mut val = match valuation {
                    Some(p) => load_valuation(p)?,
                    None => MbValuation::new(algebra(space)?, mode(space)),
                };
                if let Some(m) = space.mode {
                    if m != val.mode {
                        return Err(CliError::Input(format!("--mode {m} conflicts with valuation mode {}", val.mode)));
                    }
                }
                for (k, v) in &pairs {
                    let e = element_arg(&val.algebra, v)?;
                    val = val.atom(k, e);
                }
                let out = eval_mb(&f, &val, &defs)?;
                let alg = &val.algebra;
                let mut text = format!(
                    "{} {}{}\n",
                    out.value.render(alg),
                    if out.value.is_standard() { "standard" } else { "nonstandard" },
                    if out.admissible { "" } else { " (inadmissible)" }
                );
                for (k, h) in &out.subvalues {
                    let _ = writeln!(text, "  {k} = {}", h.render(alg));
                }
                Ok(Report {
                    code: 0,
                    text,
                    json: json!({
                        "formula": printed,
                        "matrix": "mb",
                        "mode": val.mode.as_str(),
                        "value": hyper_json(alg, out.value),
                        "standard": out.value.is_standard(),
                        "admissible": out.admissible,
                        "subvalues": out.subvalues.iter().map(|(k, h)| (k.clone(), hyper_json(alg, *h))).collect::<BTreeMap<_, _>>(),
                    }),
                })
            }
        }
    }

    fn table(&self, input: &FormulaArgs, space: &SpaceArgs) -> Result<Report, CliError> {
        let (defs, f) = load(input, space.defs.as_deref())?;
        let printed = print(&f);
        match matrix(space, false) {
            Matrix::M => {
                let rows = truth_table(&f, &defs)?;
                let mut text = String::new();
                let mut jrows = Vec::new();
                for (e, v) in &rows {
                    let _ = writeln!(text, "{:<w$}  {v}", e.to_string(), w = rows[0].0.to_string().len());
                    jrows.push(json!({ "valuation": assignment_to_json(e), "value": truth_to_json(*v) }));
                }
                Ok(Report { code: 0, text, json: json!({ "formula": printed, "matrix": "m", "rows": jrows }) })
            }
            Matrix::Mb => {
                let alg = algebra(space)?;
                let mut program = Program::new(mode(space));
                let t = program.add_with_defs(&f, &defs)?;
                let space_mb = MbSpace::new(program, alg.clone())?;
                let needed = space_mb.len() as u128 * space_mb.program().term_count() as u128;
                if needed > self.budget as u128 {
                    return Err(Error::BudgetExceeded { needed, budget: self.budget }.into());
                }
                let mut text = String::new();
                let mut jrows = Vec::new();
                for i in 0..space_mb.len() {
                    let slots = space_mb.slots(i);
                    let (v, admissible) = space_mb.program().eval(t, &slots)?;
                    if !admissible && !space.include_inadmissible {
                        continue;
                    }
                    let val = space_mb.valuation(i);
                    let flag = if admissible { "" } else { "  (inadmissible)" };
                    let _ = writeln!(text, "{}  =>  {}{flag}", render_mb_valuation(&val), v.render(&alg));
                    jrows.push(json!({
                        "valuation": ValuationJson::from_valuation(&val),
                        "value": hyper_json(&alg, v),
                        "admissible": admissible,
                    }));
                }
                Ok(Report {
                    code: 0,
                    text,
                    json: json!({ "formula": printed, "matrix": "mb", "mode": mode(space).as_str(), "rows": jrows }),
                })
            }
        }
    }

    fn taut(&self, input: &FormulaArgs, space: &SpaceArgs) -> Result<Report, CliError> {
        let (defs, f) = load(input, space.defs.as_deref())?;
        let printed = print(&f);
        let (mode_name, witness, wjson, value, vjson) = match matrix(space, false) {
            Matrix::M => {
                let probe = TautologyM::new(&f, &defs)?;
                let hit = parallel::search(&probe, self.budget, self.jobs)?;
                match hit {
                    None => (Json::Null, None, Json::Null, None, Json::Null),
                    Some((_, (e, v))) => {
                        (Json::Null, Some(e.to_string()), assignment_to_json(&e), Some(v.to_string()), truth_to_json(v))
                    }
                }
            }
            Matrix::Mb => {
                let alg = algebra(space)?;
                let m = mode(space);
                let s = matrix_mb::tautology_search(&f, &defs, &alg, m, !space.include_inadmissible)?;
                match parallel::search(&s, self.budget, self.jobs)? {
                    None => (json!(m.as_str()), None, Json::Null, None, Json::Null),
                    Some((_, hit)) => (
                        json!(m.as_str()),
                        Some(render_mb_valuation(&hit.valuation)),
                        serde_json::to_value(ValuationJson::from_valuation(&hit.valuation)).expect("plain data"),
                        Some(hit.values[0].render(&alg)),
                        hyper_json(&alg, hit.values[0]),
                    ),
                }
            }
        };
        let refuted = witness.is_some();
        let mut text = String::from(if refuted { "refuted\n" } else { "tautology\n" });
        if let (Some(w), Some(v)) = (witness, value) {
            let _ = writeln!(text, "witness: {w}\nvalue: {v}");
        }
        Ok(Report {
            code: i32::from(refuted),
            text,
            json: json!({
                "formula": printed,
                "matrix": if mode_name.is_null() { "m" } else { "mb" },
                "mode": mode_name,
                "status": if refuted { "refuted" } else { "tautology" },
                "witness": wjson,
                "value": vjson,
            }),
        })
    }

    fn square(&self, space: &SpaceArgs, force: &str, atom: &str, gen: Option<&str>) -> Result<Report, CliError> {
        let sp = opposition_space(space, gen.is_some())?;
        let alg = match &sp {
            Space::Mb { algebra, .. } => Some(algebra.clone()),
            Space::M => None,
        };
        let generator = match (gen, &alg) {
            (Some(g), Some(a)) => Some(hyper_arg(a, g)?),
            (Some(_), None) => return Err(CliError::Input("--gen applies to matrix mb".into())),
            (None, _) => None,
        };
        let r = square_for_force(force, atom, &sp, generator, self.budget)?;
        let text = render_square(alg.as_ref(), force, atom, &r);
        let mut j = report_to_json(alg.as_ref(), force, atom, &r);
        j["force"] = json!(force);
        j["atom"] = json!(atom);
        j["matrix"] = json!(if alg.is_some() { "mb" } else { "m" });
        if let Some(g) = generator {
            j["generator"] = hyper_json(alg.as_ref().expect("mb"), g);
        }
        Ok(Report { code: i32::from(!r.square_holds), text, json: j })
    }

    fn entail(&self, left: &str, right: &str, space: &SpaceArgs) -> Result<Report, CliError> {
        let defs = load_defs(space.defs.as_deref())?;
        let defs = merge(defs, ActDefinitions::new())?;
        let one = |src: &str, text: &str| -> Result<Formula, CliError> {
            let doc = parse_doc(src, text)?;
            if !doc.definitions.is_empty() {
                return Err(CliError::Input(format!("{src}: definitions belong in --defs")));
            }
            let f = resolve(&doc.formula.ok_or_else(|| CliError::Input(format!("{src}: no formula")))?, &defs);
            defs.check_refs(&f)?;
            Ok(f)
        };
        let (l, r) = (one("<left>", left)?, one("<right>", right)?);
        let sp = opposition_space(space, false)?;
        let (alg, witness): (Option<AlgebraSpec>, Option<Counterexample>) = match &sp {
            Space::M => {
                let p = opposition::EntailM::new(&l, &r, &defs)?;
                (None, parallel::search(&p, self.budget, self.jobs)?.map(|(_, c)| c))
            }
            Space::Mb { algebra, mode, admissible_only } => {
                let p = opposition::entail_search_mb(&l, &r, &defs, algebra, *mode, *admissible_only)?;
                (
                    Some(algebra.clone()),
                    parallel::search(&p, self.budget, self.jobs)?.map(|(_, h)| mb_counterexample(h)),
                )
            }
        };
        let holds = witness.is_none();
        let mut text = String::from(if holds { "holds\n" } else { "fails\n" });
        if let Some(c) = &witness {
            let _ = writeln!(
                text,
                "witness: {}\nleft: {}\nright: {}",
                render_valuation(&c.valuation),
                render_value(alg.as_ref(), c.left),
                render_value(alg.as_ref(), c.right)
            );
        }
        Ok(Report {
            code: i32::from(!holds),
            text,
            json: json!({
                "left": print(&l),
                "right": print(&r),
                "matrix": if alg.is_some() { "mb" } else { "m" },
                "mode": match &sp { Space::Mb { mode, .. } => json!(mode.as_str()), Space::M => Json::Null },
                "holds": holds,
                "witness": witness.as_ref().map(|c| counterexample_to_json(alg.as_ref(), c)),
            }),
        })
    }

    fn unfold(
        &self,
        space: &SpaceArgs,
        act: &str,
        steps: usize,
        seed: &str,
        valuation: Option<&Path>,
    ) -> Result<Report, CliError> {
        if space.matrix == Some(Matrix::M) {
            return Err(CliError::Input("unfold evaluates over *B; use --matrix mb".into()));
        }
        let defs = merge(load_defs(space.defs.as_deref())?, ActDefinitions::new())?;
        let mut val = match valuation {
            Some(p) => load_valuation(p)?,
            None => MbValuation::new(algebra(space)?, mode(space)),
        };
        let alg = val.algebra.clone();
        let seed = hyper_arg(&alg, seed)?;
        let unfolded = unfold_formula(&defs, act, steps)?;
        let mut program = Program::new(val.mode);
        program.add(&unfolded)?;
        let filler = nonstandard_at(&alg, 0);
        for a in program.atom_names() {
            if !val.atom_values.contains_key(a) {
                val = val.atom(a, alg.bottom());
            }
        }
        for k in program.act_keys() {
            if !val.act_values.contains_key(k) {
                val = val.act(k, filler);
            }
        }
        for (f, a) in program.generator_keys() {
            if val.generators.get(f).and_then(|m| m.get(a)).is_none() {
                val = val.generator(f, a, filler);
            }
        }
        for f in program.signature_keys() {
            if !val.signatures.contains_key(f) {
                val = val.signature(f, filler);
            }
        }
        let value = unfold_cyclic(&defs, act, steps, seed, &val)?;
        let cycles: Vec<Vec<String>> =
            detect_cycles(&defs)?.into_iter().map(|c| c.into_iter().map(String::from).collect()).collect();
        let rendered = render_unfolded(&unfolded);
        let mut text = String::new();
        for c in &cycles {
            let _ = writeln!(text, "cycle: {}", c.join(" -> "));
        }
        let _ = writeln!(text, "unfolded ({steps} steps): {rendered}");
        let _ = writeln!(text, "seed: {}", seed.render(&alg));
        let _ = writeln!(text, "value: {}", value.render(&alg));
        Ok(Report {
            code: 0,
            text,
            json: json!({
                "act": act,
                "steps": steps,
                "cycles": cycles,
                "unfolded": rendered,
                "seed": hyper_json(&alg, seed),
                "value": hyper_json(&alg, value),
                "valuation": ValuationJson::from_valuation(&val),
            }),
        })
    }
}

fn check_matrix() -> Report {
    let props = check_matrix_properties();
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &props {
        let _ = writeln!(
            text,
            "{} ({}) {}  [{}/{}]",
            if p.holds() { "PASS" } else { "FAIL" },
            p.number,
            p.statement,
            p.checked - p.violations.len(),
            p.checked
        );
        rows.push(json!({
            "property": p.number,
            "statement": p.statement,
            "holds": p.holds(),
            "checked": p.checked,
            "violations": p.violations.len(),
        }));
    }
    let ok = props.iter().all(|p| p.holds());
    Report { code: i32::from(!ok), text, json: json!({ "properties": rows, "holds": ok }) }
}

fn render_square(alg: Option<&AlgebraSpec>, force: &str, atom: &str, r: &OppositionReport) -> String {
    let act = format!("[{force}]({atom})");
    let act_neg = format!("[{force}](~{atom})");
    let neg_act = format!("~{act}");
    let neg_act_neg = format!("~{act_neg}");
    let mut out = String::new();
    let edges = [
        ("contrary", format!("{act} / {act_neg}"), &r.contrary),
        ("contradictory", format!("{act} / {neg_act}, {act_neg} / {neg_act_neg}"), &r.contradictory),
        ("subcontrary", format!("{neg_act_neg} / {neg_act}"), &r.subcontrary),
        ("subaltern", format!("{act} => {neg_act_neg}"), &r.subaltern_left),
        ("subaltern", format!("{act_neg} => {neg_act}"), &r.subaltern_right),
    ];
    for (name, corners, rel) in edges {
        let _ = write!(out, "{} {name:<14} {corners}", mark(rel.holds));
        if let Some(w) = &rel.witness {
            let _ = write!(out, "  (fails at {})", render_valuation(w));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{} {:<14} {act_neg} <= {neg_act}", mark(r.square_holds), "criterion");
    for (n, law) in [("(8)", &r.laws.tertium_non_datur), ("(9)", &r.laws.law_of_contrary)] {
        let vals: Vec<String> = law.values.iter().map(|v| render_value(alg, *v)).collect();
        let _ = writeln!(
            out,
            "law {n}: values {}; designated everywhere: {}",
            vals.join(" "),
            if law.designated_everywhere { "yes" } else { "no" }
        );
    }
    let _ = writeln!(out, "holds={}", r.square_holds);
    out
}

fn fmt(input: &FormulaArgs) -> Result<Report, CliError> {
    let (source, text) = match (&input.formula, &input.file) {
        (Some(t), _) => ("<formula>".to_string(), t.clone()),
        (None, Some(p)) => (p.display().to_string(), read(p)?),
        (None, None) => return Err(CliError::Input("no formula given".into())),
    };
    let doc = parse_doc(&source, &text)?;
    Ok(Report {
        code: 0,
        text: print_document(&doc),
        json: serde_json::to_value(DocumentJson::from(&doc)).expect("plain data"),
    })
}
