use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use contact_index::contact::validate;
use contact_index::lefschetz::ScanRow;
use contact_index::models::{cp_twistor, parse_fixture, projectivized_cotangent, to_fixture_json};
use contact_index::oracle::{cp_model, holomorphic_euler};
use contact_index::region::{grid_ascii, grid_csv, region_grid};
use contact_index::{
    certificate, equivariant_index, scan, BundleSpec, ContactFixedData, EquivariantIndex, Error,
    Variant,
};

#[derive(Parser)]
#[command(
    name = "contact-index",
    version,
    about = "Exact equivariant indices on complex contact manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Ext,
    Sym,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Ext => Variant::Exterior,
            VariantArg::Sym => Variant::Sym,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridFormat {
    Csv,
    Ascii,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
}

impl SpecArgs {
    fn spec(&self) -> BundleSpec {
        BundleSpec {
            variant: self.variant.into(),
            p: self.p,
            k: self.k,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check fixture data against the contact identities; prints a JSON report.
    Validate { file: PathBuf },
    /// Equivariant index of one bundle.
    Index {
        file: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
    /// Index, classification and certificate verdict over a (p, k) window.
    Scan {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ext")]
        variant: VariantArg,
        /// Largest p (default: 2n for ext, n for sym).
        #[arg(long)]
        pmax: Option<i64>,
        /// Smallest k (default: -n-2).
        #[arg(long, allow_hyphen_values = true)]
        kmin: Option<i64>,
        /// Largest k (default: n+2).
        #[arg(long, allow_hyphen_values = true)]
        kmax: Option<i64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Per-term limit report at z = 0 and z = infinity.
    Certificate {
        file: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Rigidity and vanishing region as a grid.
    Region {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "ext")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: GridFormat,
    },
    /// Generate fixed-point data for a model family.
    Model {
        #[command(subcommand)]
        family: ModelFamily,
    },
    /// Characteristic-class value of the Euler characteristic on CP^{2n+1}.
    Oracle {
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Subcommand)]
enum ModelFamily {
    /// CP^{2n+1} as the twistor space of HP^n.
    CpTwistor(ModelArgs),
    /// Projectivized cotangent bundle of CP^m.
    Cotangent(ModelArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Comma-separated integer weights.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    weights: Vec<i64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn read_data(path: &PathBuf) -> Result<ContactFixedData, Error> {
    parse_fixture(&std::fs::read_to_string(path)?)
}

fn index_json(idx: &EquivariantIndex) -> Value {
    let laurent: Map<String, Value> = idx
        .laurent
        .terms()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    json!({
        "classification": idx.classification.name(),
        "laurent": laurent,
        "value": idx.value().map(|v| v.to_string()),
    })
}

fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("p,k,region,classification,value,chi,verdict,error\n");
    for r in rows {
        let region = r.region.map_or("", |s| s.as_str());
        match &r.result {
            Ok(cell) => {
                let value = cell
                    .index
                    .value()
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},",
                    r.p,
                    r.k,
                    region,
                    cell.index.classification.name(),
                    value,
                    cell.index.at_one(),
                    cell.verdict.name()
                )
                .unwrap();
            }
            Err(e) => {
                writeln!(out, "{},{},{},,,,,\"{}\"", r.p, r.k, region, e).unwrap();
            }
        }
    }
    out
}

fn scan_json(rows: &[ScanRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                let mut obj = json!({
                    "p": r.p,
                    "k": r.k,
                    "region": r.region.map(|s| s.as_str()),
                });
                let map = obj.as_object_mut().unwrap();
                match &r.result {
                    Ok(cell) => {
                        map.insert("index".into(), index_json(&cell.index));
                        map.insert("chi".into(), Value::String(cell.index.at_one().to_string()));
                        map.insert("verdict".into(), Value::from(cell.verdict.name()));
                    }
                    Err(e) => {
                        map.insert("error".into(), Value::String(e.to_string()));
                    }
                }
                obj
            })
            .collect(),
    )
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { file } => {
            let text = std::fs::read_to_string(&file)?;
            let data: ContactFixedData =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let report = validate(&data);
            let out = json!({ "valid": report.is_valid(), "violations": report.violations });
            println!("{}", pretty(&out));
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Index { file, spec, format } => {
            let data = read_data(&file)?;
            let idx = equivariant_index(&data, &spec.spec())?;
            match format {
                TableFormat::Json => {
                    println!("{}", serde_json::to_string(&index_json(&idx)).unwrap())
                }
                TableFormat::Csv => {
                    let mut out = String::from("exponent,coefficient\n");
                    for (e, c) in idx.laurent.terms() {
                        writeln!(out, "{e},{c}").unwrap();
                    }
                    print!("{out}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            file,
            variant,
            pmax,
            kmin,
            kmax,
            format,
        } => {
            let data = read_data(&file)?;
            let n = data.n;
            let variant: Variant = variant.into();
            let pmax = pmax.unwrap_or(match variant {
                Variant::Exterior => 2 * n,
                Variant::Sym => n,
            });
            let kmin = kmin.unwrap_or(-n - 2);
            let kmax = kmax.unwrap_or(n + 2);
            let rows = scan(&data, 0..=pmax, kmin..=kmax, variant)?;
            match format {
                TableFormat::Csv => print!("{}", scan_csv(&rows)),
                TableFormat::Json => println!("{}", pretty(&scan_json(&rows))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certificate { file, spec } => {
            let data = read_data(&file)?;
            let cert = certificate(&data, &spec.spec())?;
            let v = serde_json::to_value(&cert).expect("certificate serializes");
            println!("{}", pretty(&v));
            Ok(ExitCode::SUCCESS)
        }
        Command::Region { n, variant, format } => {
            let cells = region_grid(n, variant.into())?;
            match format {
                GridFormat::Csv => print!("{}", grid_csv(&cells)),
                GridFormat::Ascii => print!("{}", grid_ascii(&cells)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Model { family } => {
            let (data, args) = match family {
                ModelFamily::CpTwistor(a) => (cp_twistor(&a.weights)?, a),
                ModelFamily::Cotangent(a) => (projectivized_cotangent(&a.weights)?, a),
            };
            let text = to_fixture_json(&data);
            match args.output {
                Some(path) => std::fs::write(path, text + "\n")?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { n, spec } => {
            let model = cp_model(n)?;
            let value = holomorphic_euler(&model, &spec.spec())?;
            println!("{}", json!({ "value": value.to_string() }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::ValidationFailed(report)) => {
            eprintln!("error: input failed validation");
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
