use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hitchin_core::algebra::{generic_discriminant, rat, Rational};
use hitchin_core::cover::{
    classify_family, discriminant_family, multiplicity_audit, riemann_hurwitz, simple_branching,
    CoverError, FamilySpec, SpectralFamily,
};
use hitchin_core::picard::{
    derive_hodge_hat, derive_strata_classes, identity_suite, phi_variants, BaseClass, BaseSymbol,
    IdentityCheck,
};
use hitchin_core::strata::{
    decompose_discriminant, DecompositionRecord, StrataError, LEADING_CONSTANT,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hitchin",
    version,
    about = "Discriminants, spectral covers and their classes"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant of the generic monic polynomial, or W(z) of a family
    Discr {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        n: Option<usize>,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Split the degree-n discriminant into R0, R1, S and verify
    Decompose {
        #[arg(long)]
        n: usize,
        /// Compare against a stored decomposition record
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Classify every zero of W for a family file
    Classify {
        file: PathBuf,
        /// Also print the multiplicity audit
        #[arg(long)]
        audit: bool,
        /// Compare the records against a stored machine-format output
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Genus of an n-sheeted cover of a genus-g curve
    Genus {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        g: BigInt,
        /// Total branching number; simple branching when omitted
        #[arg(long)]
        b: Option<BigInt>,
    },
    /// Classes of the discriminant strata and the Hodge class of the cover
    Classes {
        #[arg(long, requires = "g")]
        n: Option<i64>,
        #[arg(long, requires = "n")]
        g: Option<i64>,
        /// Check every derivation against its closed form
        #[arg(long)]
        verify: bool,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verification(_) => 2,
        }
    }
}

impl From<CoverError> for Failure {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::CriteriaDisagree(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

/// What a command prints: human text, and the value behind `--format machine`.
struct Report {
    human: String,
    machine: Value,
    code: u8,
}

impl Report {
    fn ok(human: String, machine: Value) -> Self {
        Report {
            human,
            machine,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = match cli.command {
        Command::Discr { n, family } => cmd_discr(n, family.as_deref()),
        Command::Decompose { n, check } => cmd_decompose(n, check.as_deref()),
        Command::Classify { file, audit, check } => cmd_classify(&file, audit, check.as_deref()),
        Command::Genus { n, g, b } => cmd_genus(n, g, b),
        Command::Classes { n, g, verify } => cmd_classes(n.zip(g), verify),
    };
    match out {
        Ok(report) => {
            match cli.format {
                Format::Human => print!("{}", report.human),
                Format::Machine => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.machine).expect("json value")
                ),
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<SpectralFamily, Failure> {
    let spec: FamilySpec = load_json(path)?;
    Ok(SpectralFamily::from_spec(&spec)?)
}

fn cmd_discr(n: Option<usize>, family: Option<&Path>) -> Outcome {
    if let Some(path) = family {
        let fam = load_family(path)?;
        let w = discriminant_family(&fam).display("z");
        return Ok(Report::ok(
            format!("{w}\n"),
            json!({ "family": fam.spec(), "W": w }),
        ));
    }
    let n = n.expect("clap requires n or family");
    if n == 0 {
        return Err(Failure::Input("degree must be at least 1".into()));
    }
    let d = generic_discriminant(n).to_string();
    Ok(Report::ok(
        format!("{d}\n"),
        json!({ "n": n, "discriminant": d }),
    ))
}

fn cmd_decompose(n: usize, check: Option<&Path>) -> Outcome {
    let stored: Option<DecompositionRecord> = check.map(load_json).transpose()?;
    let dec = decompose_discriminant(n).map_err(|e| match e {
        StrataError::DegreeTooSmall(_) => Failure::Input(e.to_string()),
        _ => Failure::Verification(e.to_string()),
    })?;
    let rec = dec.record();
    if let Some(stored) = stored {
        if stored.n != n {
            return Err(Failure::Verification(format!(
                "stored record is for n = {}, not {n}",
                stored.n
            )));
        }
        let theirs = stored
            .parse()
            .map_err(|e| Failure::Input(format!("stored record: {e}")))?;
        let ours = (dec.r0.clone(), dec.r1.clone(), dec.s.clone());
        for (name, a, b) in [
            ("R0", &ours.0, &theirs.0),
            ("R1", &ours.1, &theirs.1),
            ("S", &ours.2, &theirs.2),
        ] {
            if a != b {
                return Err(Failure::Verification(format!(
                    "{name} differs from the stored record: computed {a}, stored {b}"
                )));
            }
        }
    }
    let human = format!(
        "n = {}\nR0 = {}\nR1 = {}\nS = {}\nleading constant = {}\nverified: true\n",
        rec.n, rec.r0, rec.r1, rec.s, LEADING_CONSTANT
    );
    let mut machine = serde_json::to_value(&rec).expect("record serializes");
    machine["verified"] = json!(true);
    machine["leading_constant"] = json!(LEADING_CONSTANT);
    Ok(Report::ok(human, machine))
}

fn cmd_classify(path: &Path, audit: bool, check: Option<&Path>) -> Outcome {
    let fam = load_family(path)?;
    let stored: Option<Value> = check.map(load_json).transpose()?;
    let records = classify_family(&fam)?;
    if let Some(stored) = stored {
        let ours = serde_json::to_value(&records).expect("records serialize");
        if stored.get("records") != Some(&ours) {
            return Err(Failure::Verification(
                "records differ from the stored output".into(),
            ));
        }
    }
    let w = discriminant_family(&fam);
    let mut human = format!("W(z) = {}\n", w.display("z"));
    for r in &records {
        let profile: Vec<String> = r.profile.iter().map(usize::to_string).collect();
        let fired: Vec<String> = r
            .fired
            .iter()
            .map(|p| {
                serde_json::to_value(p)
                    .expect("predicate")
                    .as_str()
                    .unwrap_or("")
                    .to_string()
            })
            .collect();
        human.push_str(&format!(
            "{} = 0: {:?}, ord {}, profile ({})",
            r.locus.display("z"),
            r.tag,
            r.w_multiplicity,
            profile.join(",")
        ));
        if !fired.is_empty() {
            human.push_str(&format!(" [{}]", fired.join(", ")));
        }
        human.push('\n');
    }
    let mut machine = json!({
        "family": fam.spec(),
        "W": w.display("z"),
        "records": records,
    });
    if let Some(expected) = fam.expected_zero_count() {
        human.push_str(&format!("zeros of W on the closed base: {expected}\n"));
        machine["expected_zero_count"] = json!(expected.to_string());
    }
    if audit {
        let report = multiplicity_audit(&fam)?;
        human.push_str(&format!(
            "audit: boundary {}, maxwell {}, caustic {}, weighted {}, order sum {} of {}{}\n",
            report.boundary_points,
            report.maxwell_points,
            report.caustic_points,
            report.weighted_total,
            report.order_sum,
            report.w_degree,
            if report.is_clean() {
                ""
            } else {
                " (NOT CLEAN)"
            }
        ));
        machine["audit"] = serde_json::to_value(&report).expect("audit serializes");
        machine["audit"]["clean"] = json!(report.is_clean());
    }
    Ok(Report::ok(human, machine))
}

fn cmd_genus(n: BigInt, g: BigInt, b: Option<BigInt>) -> Outcome {
    let b = b.unwrap_or_else(|| simple_branching(n.clone(), g.clone()));
    let genus = riemann_hurwitz(n.clone(), g.clone(), b.clone())?;
    Ok(Report::ok(
        format!("{genus}\n"),
        json!({ "n": n.to_string(), "g": g.to_string(), "b": b.to_string(), "genus": genus.to_string() }),
    ))
}

fn class_json(c: &BaseClass) -> Value {
    let mut m = serde_json::Map::new();
    for sym in [BaseSymbol::Lambda, BaseSymbol::Delta, BaseSymbol::Phi] {
        m.insert(sym.key().into(), json!(c.coord(sym).to_string()));
    }
    if !c.coord(BaseSymbol::LambdaHat).is_zero() {
        m.insert(
            BaseSymbol::LambdaHat.key().into(),
            json!(c.coord(BaseSymbol::LambdaHat).to_string()),
        );
    }
    Value::Object(m)
}

fn check_json(c: &IdentityCheck) -> Value {
    json!({
        "name": c.name,
        "equal": c.report.equal,
        "diff": class_json(&c.report.diff_class()),
    })
}

fn cmd_classes(at: Option<(i64, i64)>, verify: bool) -> Outcome {
    let s = derive_strata_classes();
    let table: Vec<(&str, BaseClass)> = vec![
        ("Db", s.db.clone()),
        ("Dm", s.dm.clone()),
        ("Dc", s.dc.clone()),
        ("DW", s.dw.clone()),
        ("lambda_hat", derive_hodge_hat()),
    ];
    let table: Vec<(&str, BaseClass)> = match at {
        Some((n, g)) => {
            let (n, g): (Rational, Rational) = (rat(n, 1), rat(g, 1));
            table
                .into_iter()
                .map(|(k, c)| (k, c.specialize(&n, &g)))
                .collect()
        }
        None => table,
    };
    let mut human = String::new();
    if let Some((n, g)) = at {
        human.push_str(&format!("n = {n}, g = {g}\n"));
    }
    let mut classes = serde_json::Map::new();
    for (k, c) in &table {
        human.push_str(&format!("{k} = {c}\n"));
        classes.insert((*k).into(), class_json(c));
    }
    let mut machine = json!({ "classes": classes });
    if let Some((n, g)) = at {
        machine["n"] = json!(n);
        machine["g"] = json!(g);
    }
    let mut code = 0;
    if verify {
        let suite = identity_suite();
        let notes = phi_variants();
        human.push('\n');
        for c in &suite {
            if c.report.equal {
                human.push_str(&format!("ok       {}\n", c.name));
            } else {
                human.push_str(&format!("MISMATCH {}: {}\n", c.name, c.report));
                code = 2;
            }
        }
        for c in &notes {
            human.push_str(&format!(
                "note: {} with +4(g-1)φ differs from the derived class by {}\n",
                c.name,
                c.report.diff_class()
            ));
        }
        machine["verify"] = json!({
            "ok": code == 0,
            "checks": suite.iter().map(check_json).collect::<Vec<_>>(),
            "variants": notes.iter().map(check_json).collect::<Vec<_>>(),
        });
    }
    Ok(Report {
        human,
        machine,
        code,
    })
}
