//! `zonopark`: command-line front end for `zonotope-parking`.
//!
//! Output is JSON lines (default) or TSV on stdout; diagnostics go to
//! stderr. Exit codes: 0 success, 1 verification failure, 2 usage or parse
//! error, 3 non-admissible `τ`.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Number, Value};

use zonotope_parking::exact::parse_rational;
use zonotope_parking::tilting::{color_histogram, tilting_weights_with};
use zonotope_parking::treecount::contracted_count_closed_form;
use zonotope_parking::{
    build_graph, contract, enumerate_dyck_paths, enumerate_parking_functions, fuss_catalan,
    regular_orbit_count_mobius, spanning_tree_count, verify, EpsRational, Error, ParkingBijection,
    SetPartition, TauConvention, ZonotopeSpec,
};

#[derive(Parser)]
#[command(
    name = "zonopark",
    version,
    about = "Lattice points, parking functions and tilting tables"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct MN {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice points of the zonotope, lexicographic, then a count.
    Enumerate {
        #[command(flatten)]
        mn: MN,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Dominant weights for a grid value `t`, grouped by color.
    Tilting {
        #[command(flatten)]
        mn: MN,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = "printed")]
        convention: String,
    },
    /// Run the invariant sweep; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
    },
    /// All (m,n)-parking functions.
    Parking {
        #[command(flatten)]
        mn: MN,
    },
    /// All (m,n)-Dyck paths.
    Dyck {
        #[command(flatten)]
        mn: MN,
    },
    /// The Fuss-Catalan number A_n(m,1).
    Catalan {
        #[command(flatten)]
        mn: MN,
    },
    /// Lattice point and parking function pairs with the same class.
    Bijection {
        #[command(flatten)]
        mn: MN,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Spanning trees of G(m,n), or of G(m,n)/partition.
    Trees {
        #[command(flatten)]
        mn: MN,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Regular orbit count by Möbius inversion over set partitions.
    MobiusCount {
        #[command(flatten)]
        mn: MN,
    },
}

#[derive(Serialize)]
struct Record {
    kind: &'static str,
    m: u32,
    n: usize,
    tau: Option<String>,
    payload: Value,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::NotAdmissible { .. }) {
            3
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

struct Out<W: Write> {
    w: W,
    format: Format,
}

impl<W: Write> Out<W> {
    fn emit(&mut self, record: Record) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.w, &record)?;
                writeln!(self.w)
            }
            Format::Tsv => writeln!(
                self.w,
                "{}\t{}\t{}\t{}\t{}",
                record.kind,
                record.m,
                record.n,
                record.tau.as_deref().unwrap_or("-"),
                tsv_payload(&record.payload)
            ),
        }
    }
}

fn tsv_payload(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().any(Value::is_array) => {
            items.iter().map(tsv_inner).collect::<Vec<_>>().join("\t")
        }
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", tsv_inner(v)))
            .collect::<Vec<_>>()
            .join("\t"),
        other => tsv_inner(other),
    }
}

fn tsv_inner(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().any(Value::is_array) => {
            items.iter().map(tsv_inner).collect::<Vec<_>>().join(";")
        }
        Value::Array(items) => items.iter().map(tsv_inner).collect::<Vec<_>>().join(","),
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn big(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

fn parse_tau(text: &str) -> Result<EpsRational, Failure> {
    Ok(text.parse()?)
}

fn admissible_spec(m: u32, n: usize, tau: &str) -> Result<ZonotopeSpec, Failure> {
    let spec = ZonotopeSpec::new(m, n, parse_tau(tau)?)?;
    if !spec.is_admissible() {
        return Err(Error::NotAdmissible {
            m,
            n,
            tau: spec.tau().to_string(),
        }
        .into());
    }
    Ok(spec)
}

fn check_mn(m: u32, n: usize) -> Result<(), Failure> {
    if m == 0 || n == 0 {
        return Err(
            Error::InvalidParameters(format!("need m >= 1 and n >= 1, got m={m} n={n}")).into(),
        );
    }
    Ok(())
}

fn run<W: Write>(command: Command, out: &mut Out<W>) -> Result<bool, Failure> {
    match command {
        Command::Enumerate {
            mn: MN { m, n },
            tau,
        } => {
            let spec = admissible_spec(m, n, &tau)?;
            let tau = Some(spec.tau().to_string());
            let points = spec.lattice_points();
            for x in &points {
                out.emit(Record {
                    kind: "point",
                    m,
                    n,
                    tau: tau.clone(),
                    payload: json!(x.coords()),
                })?;
            }
            out.emit(Record {
                kind: "summary",
                m,
                n,
                tau,
                payload: json!({ "count": points.len() }),
            })?;
        }
        Command::Tilting {
            mn: MN { m, n },
            t,
            convention,
        } => {
            let t = parse_rational(&t)?;
            let convention: TauConvention = convention.parse()?;
            let table = tilting_weights_with(m, n, &t, convention)?;
            let tau = Some(table.tau.to_string());
            for w in &table.weights {
                out.emit(Record {
                    kind: "weight",
                    m,
                    n,
                    tau: tau.clone(),
                    payload: json!(w.coords()),
                })?;
            }
            let histogram: Vec<[i64; 2]> = color_histogram(&table)
                .into_iter()
                .map(|(c, k)| [c, k as i64])
                .collect();
            let payload = json!({
                "t": t.to_string(),
                "count": table.len(),
                "u": big(&table.color_offset()),
                "histogram": histogram,
            });
            out.emit(Record {
                kind: "summary",
                m,
                n,
                tau,
                payload,
            })?;
        }
        Command::Verify { max_n, max_m } => {
            check_mn(max_m, max_n)?;
            let report = verify::run(max_n, max_m);
            let mut ok = true;
            for r in &report {
                ok &= r.passed();
                eprintln!("{r}");
                let payload = json!({
                    "check": r.name,
                    "passed": r.passed(),
                    "detail": r.failure.clone().unwrap_or_default(),
                });
                out.emit(Record {
                    kind: "check",
                    m: max_m,
                    n: max_n,
                    tau: None,
                    payload,
                })?;
            }
            return Ok(ok);
        }
        Command::Parking { mn: MN { m, n } } => {
            check_mn(m, n)?;
            let all = enumerate_parking_functions(m, n);
            for a in &all {
                out.emit(Record {
                    kind: "parking",
                    m,
                    n,
                    tau: None,
                    payload: json!(a.values()),
                })?;
            }
            out.emit(Record {
                kind: "summary",
                m,
                n,
                tau: None,
                payload: json!({ "count": all.len() }),
            })?;
        }
        Command::Dyck { mn: MN { m, n } } => {
            check_mn(m, n)?;
            let all = enumerate_dyck_paths(m, n);
            for d in &all {
                out.emit(Record {
                    kind: "dyck",
                    m,
                    n,
                    tau: None,
                    payload: json!(d.values()),
                })?;
            }
            out.emit(Record {
                kind: "summary",
                m,
                n,
                tau: None,
                payload: json!({ "count": all.len() }),
            })?;
        }
        Command::Catalan { mn: MN { m, n } } => {
            check_mn(m, n)?;
            out.emit(Record {
                kind: "catalan",
                m,
                n,
                tau: None,
                payload: big(&fuss_catalan(m, n)),
            })?;
        }
        Command::Bijection {
            mn: MN { m, n },
            tau,
        } => {
            let spec = admissible_spec(m, n, &tau)?;
            let tau = Some(spec.tau().to_string());
            let pairs = ParkingBijection::new(&spec)?.pairs();
            for (x, a) in &pairs {
                let payload = json!([x.coords(), a.values()]);
                out.emit(Record {
                    kind: "pair",
                    m,
                    n,
                    tau: tau.clone(),
                    payload,
                })?;
            }
            out.emit(Record {
                kind: "summary",
                m,
                n,
                tau,
                payload: json!({ "count": pairs.len() }),
            })?;
        }
        Command::Trees {
            mn: MN { m, n },
            partition,
        } => {
            check_mn(m, n)?;
            let g = build_graph(m, n);
            let payload = match partition {
                None => json!({ "count": big(&spanning_tree_count(&g)) }),
                Some(text) => {
                    let p: SetPartition = text.parse()?;
                    let count = spanning_tree_count(&contract(&g, &p)?);
                    json!({
                        "partition": p.to_string(),
                        "count": big(&count),
                        "closed_form": big(&contracted_count_closed_form(m, n, &p)),
                    })
                }
            };
            out.emit(Record {
                kind: "trees",
                m,
                n,
                tau: None,
                payload,
            })?;
        }
        Command::MobiusCount { mn: MN { m, n } } => {
            check_mn(m, n)?;
            let count = regular_orbit_count_mobius(m, n)?;
            out.emit(Record {
                kind: "mobius-count",
                m,
                n,
                tau: None,
                payload: big(&count),
            })?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = Out {
        w: BufWriter::new(stdout.lock()),
        format: cli.format,
    };
    let result = run(cli.command, &mut out).and_then(|ok| {
        out.w.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let _ = out.w.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
