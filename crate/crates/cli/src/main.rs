//! `ver4plus`: batch front end for the ver4plus library.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use ver4plus::delta::{det_representative, Algebra, EndAlgebra, ExpansionOrder, Matrix, VarTable};
use ver4plus::functors::{
    additive_catalog, enumerate_simple_functors, evaluate, exact_catalog, is_discerning,
    is_discerning_bruteforce, is_faithful, is_faithful_bruteforce, svec_discerning, svec_faithful,
    EvalResult, Indecomposable,
};
use ver4plus::mullineux::{m_reflect_with, m_rim, oracle_width};
use ver4plus::{FunctorLabel, Partition, ReflectionTable, Ver4Object, Weight};

const SCHEMA: &str = "ver4plus/1";

const RAW_TABLE_NOTE: &str = "raw reflection table in use: R(0|T3) = -2|ξT1 does not preserve degree \
(3 vs -1); the corrected entry is -2|χξT1";

#[derive(Parser, Debug)]
#[command(name = "ver4plus", version, about = "Polynomial functors and twisted algebra in characteristic 2")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the reflection table with the uncorrected R(0|T3) entry.
    #[arg(long, global = true)]
    raw_table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the simple polynomial functors of a degree.
    Classify {
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate D_{λ|μ} on m𝟙 + nP.
    Eval {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long)]
        object: Ver4Object,
    },
    /// Whether every simple functor of a degree is nonzero on the object.
    Discerning {
        #[arg(long)]
        object: Ver4Object,
        #[arg(long)]
        degree: usize,
        /// Also enumerate all simple functors.
        #[arg(long)]
        brute: bool,
    },
    /// Whether the symmetric group acts faithfully on the tensor power.
    Faithful {
        #[arg(long)]
        object: Ver4Object,
        #[arg(long)]
        degree: usize,
        /// Also enumerate all 2-restricted partitions.
        #[arg(long)]
        brute: bool,
    },
    /// The label sequence M(λ) of a 2-restricted partition.
    Mset {
        #[arg(long)]
        lambda: Partition,
        /// Also compute it by a chain of odd reflections.
        #[arg(long)]
        oracle: bool,
    },
    /// Apply the odd reflection R_{i,j} to a weight (1-indexed).
    Reflect {
        #[arg(long)]
        weight: Weight,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Additive or exact polynomial functors of a degree.
    Catalog {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        kind: CatalogKind,
    },
    /// Faithful and discerning super vector spaces in odd characteristic.
    Svec {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum)]
        kind: SvecKind,
    },
    /// A basis of the primitive elements of a degree in the coordinate algebra of End(X).
    Primitives {
        #[arg(long)]
        object: Ver4Object,
        #[arg(long)]
        degree: u32,
    },
    /// Two determinant representatives of a matrix in GL(2P).
    DetDemo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CatalogKind {
    Additive,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SvecKind {
    Faithful,
    Discerning,
}

/// The serialized result of one invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub schema: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub errata: Vec<String>,
}

impl CommandResult {
    fn new(command: &str) -> Self {
        CommandResult {
            schema: SCHEMA.into(),
            command: command.into(),
            inputs: Map::new(),
            outputs: Map::new(),
            errata: Vec::new(),
        }
    }

    fn input(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(k.into(), v.into());
        self
    }

    fn output(&mut self, k: &str, v: impl Into<Value>) {
        self.outputs.insert(k.into(), v.into());
    }
}

type Outcome = Result<CommandResult, ver4plus::Error>;

fn table(raw: bool) -> ReflectionTable {
    if raw {
        ReflectionTable::printed()
    } else {
        ReflectionTable::corrected()
    }
}

fn weight_json(w: &Weight) -> Value {
    json!({ "text": w.to_string(), "pretty": w.pretty() })
}

fn labels_json(f: &[FunctorLabel]) -> Value {
    f.iter().map(ToString::to_string).collect()
}

fn indecomposable_json(i: &Indecomposable) -> Value {
    let layers: Vec<Value> = i.layers.iter().map(|l| labels_json(l)).collect();
    json!({ "name": i.name, "layers": layers })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Classify { degree } => {
            let mut r = CommandResult::new("classify").input("degree", *degree);
            let all = enumerate_simple_functors(*degree);
            r.output("count", all.len());
            r.output("functors", labels_json(&all));
            Ok(r)
        }
        Command::Eval { lambda, mu, object } => {
            let mut r = CommandResult::new("eval")
                .input("lambda", lambda.to_string())
                .input("mu", mu.to_string())
                .input("object", object.to_string());
            match evaluate(&FunctorLabel::new(lambda.clone(), mu.clone()), *object) {
                EvalResult::Zero => r.output("result", "zero"),
                EvalResult::Simple(w) => {
                    r.output("result", "simple");
                    r.output("weight", weight_json(&w));
                }
            }
            Ok(r)
        }
        Command::Discerning { object, degree, brute } => {
            let mut r = CommandResult::new("discerning")
                .input("object", object.to_string())
                .input("degree", *degree);
            let closed = is_discerning(*object, *degree);
            r.output("closed_form", closed);
            if *brute {
                let b = is_discerning_bruteforce(*object, *degree);
                r.output("brute_force", b);
                r.output("agree", b == closed);
            }
            Ok(r)
        }
        Command::Faithful { object, degree, brute } => {
            let mut r = CommandResult::new("faithful")
                .input("object", object.to_string())
                .input("degree", *degree);
            let closed = is_faithful(*object, *degree);
            r.output("closed_form", closed);
            if *brute {
                let b = is_faithful_bruteforce(*object, *degree);
                r.output("brute_force", b);
                r.output("agree", b == closed);
            }
            Ok(r)
        }
        Command::Mset { lambda, oracle } => {
            let mut r = CommandResult::new("mset").input("lambda", lambda.to_string());
            let m = m_rim(lambda)?;
            r.output("rim", json!({ "text": m.to_string(), "pretty": m.pretty() }));
            if *oracle {
                let n = oracle_width(lambda);
                r.output("width", n);
                match m_reflect_with(lambda, &table(cli.raw_table), n) {
                    Ok(o) => {
                        r.output("oracle", json!({ "text": o.to_string(), "pretty": o.pretty() }));
                        r.output("equal", o == m);
                    }
                    Err(e) if cli.raw_table => {
                        r.output("oracle", Value::Null);
                        r.output("oracle_error", e.to_string());
                        r.output("equal", false);
                    }
                    Err(e) => return Err(e),
                }
                if cli.raw_table && r.outputs["equal"] == Value::Bool(false) {
                    r.errata.push(RAW_TABLE_NOTE.into());
                }
            }
            Ok(r)
        }
        Command::Reflect { weight, i, j } => {
            let mut r = CommandResult::new("reflect")
                .input("weight", weight.to_string())
                .input("i", *i)
                .input("j", *j);
            let out = table(cli.raw_table).reflect_weight(weight, *i, *j)?;
            if cli.raw_table && out != ReflectionTable::corrected().reflect_weight(weight, *i, *j)? {
                r.errata.push(RAW_TABLE_NOTE.into());
            }
            r.output("degree_in", weight.degree());
            r.output("degree_out", out.degree());
            r.output("weight", weight_json(&out));
            Ok(r)
        }
        Command::Catalog { degree, kind } => {
            if *degree == 0 {
                return Err(ver4plus::Error::ZeroDegree(0));
            }
            let mut r = CommandResult::new("catalog").input("degree", *degree);
            match kind {
                CatalogKind::Additive => {
                    let cat = additive_catalog(*degree);
                    r.inputs.insert("kind".into(), "additive".into());
                    r.output("simples", labels_json(&cat.simples));
                    let ind: Vec<Value> = cat.indecomposables.iter().map(indecomposable_json).collect();
                    r.output("indecomposables", ind);
                }
                CatalogKind::Exact => {
                    r.inputs.insert("kind".into(), "exact".into());
                    let ind: Vec<Value> = exact_catalog(*degree).iter().map(indecomposable_json).collect();
                    r.output("indecomposables", ind);
                }
            }
            Ok(r)
        }
        Command::Svec { m, n, p, degree, kind } => {
            let (name, value) = match kind {
                SvecKind::Faithful => ("faithful", svec_faithful(*m, *n, *p, *degree)?),
                SvecKind::Discerning => ("discerning", svec_discerning(*m, *n, *p, *degree)?),
            };
            let mut r = CommandResult::new("svec")
                .input("m", *m)
                .input("n", *n)
                .input("p", *p)
                .input("degree", *degree)
                .input("kind", name);
            r.output(name, value);
            Ok(r)
        }
        Command::Primitives { object, degree } => {
            let end = EndAlgebra::new(object.m, object.n)?;
            let basis = end.primitives(*degree)?;
            let mut r = CommandResult::new("primitives")
                .input("object", object.to_string())
                .input("degree", *degree);
            r.output("dimension", basis.len());
            r.output("basis", basis.iter().map(ToString::to_string).collect::<Vec<_>>());
            Ok(r)
        }
        Command::DetDemo => det_demo(),
    }
}

fn det_demo() -> Outcome {
    let alg = Algebra::new(VarTable::twisting(&["a", "b", "c", "d"])?);
    let rows = [
        vec!["a", "b", "a'", "b'"],
        vec!["c", "d", "c'", "d'"],
        vec!["0", "0", "a", "b"],
        vec!["0", "0", "c", "d"],
    ];
    let m = Matrix::parse(&alg, &rows)?;
    let first = det_representative(&m, &ExpansionOrder::Rows(vec![0, 1, 2, 3]))?;
    let second = det_representative(&m, &ExpansionOrder::Rows(vec![0, 1, 3, 2]))?;
    let diff = &first + &second;
    let stated = &alg.parse("a'*d'")? * &alg.parse("a*d + b*c")?;
    let mut r = CommandResult::new("det-demo");
    let matrix: Vec<Value> = m.to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    r.inputs.insert("matrix".into(), matrix.into());
    r.output("rows_0123", json!({ "det": first.to_string(), "delta": first.delta().to_string() }));
    r.output("rows_0132", json!({ "det": second.to_string(), "delta": second.delta().to_string() }));
    r.output("difference", diff.to_string());
    r.output("difference_in_delta_ideal", diff.in_delta_ideal());
    if diff != stated {
        r.errata.push(format!(
            "the difference of the two representatives is {diff}, not a'd'(ad+bc) = {stated}; \
             (ad+bc)(da+bc) would give a'd'(ad+bc)"
        ));
    }
    Ok(r)
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(render_value).collect::<Vec<_>>().join(", ")),
        Value::Object(o) if o.contains_key("pretty") => render_value(&o["pretty"]),
        Value::Object(o) if o.contains_key("layers") => {
            let layers = o["layers"].as_array().map(|l| l.iter().map(render_value).collect::<Vec<_>>());
            format!("{}: {}", render_value(&o["name"]), layers.unwrap_or_default().join(" / "))
        }
        Value::Object(o) => o.iter().map(|(k, x)| format!("{k}={}", render_value(x))).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn render_map(out: &mut String, map: &Map<String, Value>) {
    for (k, v) in map {
        match v {
            Value::Array(items) if !items.is_empty() => {
                out.push_str(&format!("{k}:\n"));
                for x in items {
                    out.push_str(&format!("  {}\n", render_value(x)));
                }
            }
            _ => out.push_str(&format!("{k}: {}\n", render_value(v))),
        }
    }
}

fn render_text(r: &CommandResult) -> String {
    let mut out = String::new();
    render_map(&mut out, &r.inputs);
    render_map(&mut out, &r.outputs);
    for e in &r.errata {
        out.push_str(&format!("note: {e}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(r) if cli.json => {
            println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
            ExitCode::SUCCESS
        }
        Ok(r) => {
            print!("{}", render_text(&r));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
