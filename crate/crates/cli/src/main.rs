use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use c2webs::ladders::{
    basis_check, cellularity_check, double_ladders, light_ladder, triangularity_check, LadderChoice, LadderEvals,
};
use c2webs::report::Report;
use c2webs::ring::{AnyField, CoeffRing, FieldSpec, SymbolicA};
use c2webs::selftest;
use c2webs::webs::{from_json, parse_text, relation_suite, to_json, to_text, Diagram, Evaluator};
use c2webs::weights::{e_by_lambda, enumerate_e, enumerate_e_lambda, hom_dim, Weight, WeightSeq, Word};
use c2webs::with_field;

#[derive(Parser)]
#[command(name = "c2webs", version, about = "Exact computations with type C2 webs and their double ladder bases")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Coefficient field.
    #[arg(long, global = true, value_enum, default_value = "Qq")]
    field: FieldKind,
    /// Characteristic for --field Fp.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Value of q for numeric fields (an integer mod p, or a rational).
    #[arg(long, global = true)]
    q: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldKind {
    #[value(name = "Qq")]
    Qq,
    #[value(name = "QQ")]
    Rationals,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Subcommand)]
enum Verb {
    /// Dimension of Hom(V(w), V(u)).
    Homdim { w: Word, u: Word },
    /// Dominant weight subsequences of w, optionally ending at --lambda.
    Enumerate {
        w: Word,
        #[arg(long)]
        lambda: Option<Weight>,
    },
    /// The light ladder of w for a dominant weight subsequence, e.g. `21 0,1 1,-1`.
    /// Write a weight with a negative first entry as `(-1,1)`.
    Lightladder {
        w: Word,
        #[arg(required = true)]
        mus: Vec<Weight>,
    },
    /// The double ladders V(w) -> V(u), optionally one cell.
    Doubleladders {
        w: Word,
        u: Word,
        #[arg(long)]
        lambda: Option<Weight>,
    },
    /// Evaluate a diagram given as slice text ("Id1 Cap2 | Cup1 Id1") or a JSON file.
    Eval {
        diagram: Option<String>,
        #[arg(long, conflicts_with = "diagram")]
        file: Option<PathBuf>,
    },
    /// Evaluate both sides of every defining relation.
    CheckRelations,
    /// Triangularity of the light ladders of w ending at --lambda.
    Triangularity {
        w: Word,
        #[arg(long)]
        lambda: Weight,
    },
    /// Rank of the double ladders V(w) -> V(u) against the Hom dimension.
    BasisCheck { w: Word, u: Word },
    /// Cell filtration check with random morphisms (seed from WEBS_SEED).
    Cellularity {
        w: Word,
        u: Word,
        #[arg(long)]
        lambda: Weight,
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Run every acceptance criterion.
    Selftest,
}

/// Result of one verb: human text, machine JSON, and whether every check passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn info(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }

    fn report(r: Report, mut text: String) -> Self {
        let _ = writeln!(text, "{}", if r.verdict { "PASS" } else { "FAIL" });
        for w in &r.witnesses {
            let _ = writeln!(text, "  {w}");
        }
        Output { ok: r.verdict, json: serde_json::to_value(&r).unwrap(), text }
    }
}

/// Bad input of any kind; exits with status 2.
struct Failure(String);

impl From<c2webs::Error> for Failure {
    fn from(e: c2webs::Error) -> Self {
        Failure(e.to_string())
    }
}

fn field_spec(cli: &Cli) -> Result<FieldSpec, Failure> {
    let need_q = || cli.q.clone().ok_or_else(|| Failure("--q is required for numeric fields".into()));
    let spec = match cli.field {
        FieldKind::Qq => FieldSpec::SymbolicQq,
        FieldKind::Rationals => FieldSpec::Rationals { q: need_q()? },
        FieldKind::Fp => {
            let p = cli.p.ok_or_else(|| Failure("--p is required for --field Fp".into()))?;
            let q = need_q()?.parse().map_err(|_| Failure("--q must be an integer for --field Fp".into()))?;
            FieldSpec::PrimeField { p, q }
        }
    };
    spec.validate().map_err(|e| Failure(e.to_string()))?;
    Ok(spec)
}

fn build_field(spec: &FieldSpec) -> Result<AnyField, Failure> {
    spec.build().map_err(|e| Failure(e.to_string()))
}

fn seq_list(seqs: &[WeightSeq]) -> String {
    seqs.iter().map(|s| format!("{s}\n")).collect()
}

fn diagram_out(d: &Diagram) -> Value {
    json!({"source": d.source.to_string(), "target": d.target.to_string(), "text": to_text(d), "diagram": to_json(d)})
}

fn eval_over<K: CoeffRing>(ring: K, d: &Diagram) -> Output {
    let ev = Evaluator::new(ring);
    let m = ev.eval(d);
    let mut text = format!("{} -> {}, {} x {} over {}\n", d.source, d.target, m.target.dim(), m.source.dim(), ev.ring.describe());
    let mut entries = Vec::new();
    for (row, col, x) in m.labelled_entries() {
        let x = ev.ring.render(&x);
        let _ = writeln!(text, "{row} <- {col}: {x}");
        entries.push(json!({"row": row, "col": col, "value": x}));
    }
    Output::info(text, json!({"source": d.source.to_string(), "target": d.target.to_string(), "ring": ev.ring.describe(), "entries": entries}))
}

/// Binds `$ev` to cached ladder evaluations over the field of `$spec`; over
/// Q(q) the ladders are evaluated over A and embedded.
macro_rules! with_evals {
    ($spec:expr, $ev:ident => $body:expr) => {
        match build_field($spec)? {
            AnyField::Symbolic(k) => {
                let $ev = LadderEvals::through_a(k);
                $body
            }
            AnyField::Rational(k) => {
                let $ev = LadderEvals::direct(k);
                $body
            }
            AnyField::Prime(k) => {
                let $ev = LadderEvals::direct(k);
                $body
            }
        }
    };
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let choice = LadderChoice::new();
    Ok(match &cli.verb {
        Verb::Homdim { w, u } => {
            let n = hom_dim(w, u);
            Output::info(format!("{n}\n"), json!({"w": w.to_string(), "u": u.to_string(), "hom_dim": n}))
        }
        Verb::Enumerate { w, lambda } => {
            let seqs = match lambda {
                Some(l) => enumerate_e_lambda(w, *l),
                None => enumerate_e(w),
            };
            Output::info(seq_list(&seqs), json!({"w": w.to_string(), "lambda": lambda, "sequences": seqs}))
        }
        Verb::Lightladder { w, mus } => {
            let mus = WeightSeq(mus.clone());
            let d = light_ladder(w, &mus)?;
            Output::info(format!("{} -> {}\n{}\n", d.source, d.target, to_text(&d)), diagram_out(&d))
        }
        Verb::Doubleladders { w, u, lambda } => {
            let dls = double_ladders(w, u, *lambda, &choice)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for dl in &dls {
                let _ = writeln!(text, "{} {} {}: {}", dl.lambda, dl.bottom, dl.top, to_text(&dl.diagram));
                items.push(json!({"lambda": dl.lambda, "bottom": dl.bottom, "top": dl.top, "diagram": to_json(&dl.diagram)}));
            }
            Output::info(text, json!({"w": w.to_string(), "u": u.to_string(), "double_ladders": items}))
        }
        Verb::Eval { diagram, file } => {
            let d = match (diagram, file) {
                (Some(s), None) => parse_text(s).map_err(|e| Failure(e.to_string()))?,
                (None, Some(path)) => {
                    let raw = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    let v: Value = serde_json::from_str(&raw).map_err(|e| Failure(e.to_string()))?;
                    from_json(v.get("diagram").unwrap_or(&v)).map_err(|e| Failure(e.to_string()))?
                }
                _ => return Err(Failure("give a diagram or --file".into())),
            };
            let spec = field_spec(cli)?;
            match spec {
                FieldSpec::SymbolicQq => eval_over(SymbolicA, &d),
                _ => with_field!(build_field(&spec)?, k => eval_over(k, &d)),
            }
        }
        Verb::CheckRelations => {
            let spec = field_spec(cli)?;
            let outcomes = match spec {
                FieldSpec::SymbolicQq => relation_suite(SymbolicA),
                _ => with_field!(build_field(&spec)?, k => relation_suite(k)),
            };
            let mut r = Report::new("relations", json!({"field": spec}));
            let mut text = String::new();
            for o in &outcomes {
                let _ = writeln!(text, "{} {}", if o.passed { "ok  " } else { "FAIL" }, o.name);
                if let Some(w) = &o.witness {
                    r.fail(format!("{}: {w}", o.name));
                }
            }
            Output::report(r, text)
        }
        Verb::Triangularity { w, lambda } => {
            let spec = field_spec(cli)?;
            let (report, text) = match spec {
                FieldSpec::SymbolicQq => triangularity_text(SymbolicA, &choice, w, *lambda)?,
                _ => with_field!(build_field(&spec)?, k => triangularity_text(k, &choice, w, *lambda)?),
            };
            Output::report(report, text)
        }
        Verb::BasisCheck { w, u } => {
            let spec = field_spec(cli)?;
            let r = with_evals!(&spec, ev => basis_check(&ev, &choice, w, u)?);
            let text = format!("rank {} of {} ({})\n", r.params["rank"], r.params["hom_dim"], r.params["field"].as_str().unwrap_or(""));
            Output::report(r, text)
        }
        Verb::Cellularity { w, u, lambda, samples } => {
            let spec = field_spec(cli)?;
            let seed = selftest::seed_from_env();
            let r = with_evals!(&spec, ev => cellularity_check(&ev, &choice, w, u, *lambda, seed, *samples)?);
            Output::report(r, format!("seed {seed}\n"))
        }
        Verb::Selftest => {
            let outcomes = selftest::run_all(selftest::seed_from_env());
            let text = outcomes.iter().map(|o| format!("{}\n", o.line())).collect();
            let ok = outcomes.iter().all(|o| o.passed());
            Output { text, json: json!({"criteria": outcomes, "verdict": ok}), ok }
        }
    })
}

fn triangularity_text<K: CoeffRing>(
    ring: K,
    choice: &LadderChoice,
    w: &Word,
    lam: Weight,
) -> Result<(Report, String), Failure> {
    if !e_by_lambda(w).contains_key(&lam) {
        return Err(Failure(format!("no dominant weight subsequence of {w} ends at {lam}")));
    }
    let ev = Evaluator::new(ring);
    let t = triangularity_check(&ev, choice, w, lam)?;
    let mut text = String::new();
    for (mu, row) in t.labels.iter().zip(&t.matrix) {
        let cells: Vec<String> = row.iter().map(|x| ev.ring.render(x)).collect();
        let _ = writeln!(text, "{mu}: {}", cells.join("  "));
    }
    let mut report = t.report;
    report.params["matrix"] = json!(t.matrix.iter().map(|r| r.iter().map(|x| ev.ring.render(x)).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok((report, text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let out = match run(&cli) {
        Ok(o) => o,
        Err(Failure(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
    };
    let body = if cli.json { format!("{}\n", serde_json::to_string_pretty(&out.json).unwrap()) } else { out.text };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
