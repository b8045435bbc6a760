//! Command-line front end. Every command produces a [`CommandResult`] whose
//! `result` field is the library value's own `Display` output.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::arrangements::{
    is_generic, lattice_from_arrangement, tutte_eval, HyperplaneArrangement,
};
use crate::enumeration::{
    count_0coned, count_dconed, count_generic, dconed_dim, dconed_terms, dim_generic,
    incidence_class, naive_dconed_count, zeuthen_transfer, CharNumberTable, CurveSpec, Family,
};
use crate::error::{Error, Result};
use crate::incidence::{
    jacobian_rank, moduli_dimension_estimate, pappus_realization, virtual_dimension, IncidenceSpec,
    Realization,
};
use crate::schubert::{schubert_degree, GrassmannianSpec};
use crate::textio::{format_rational, parse_rational};

#[derive(Debug, Parser)]
#[command(
    name = "arrcount",
    version,
    about = "Exact enumerative geometry of hyperplane arrangements"
)]
pub struct Cli {
    /// Emit one JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of arrangements through D general points.
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// Characteristic numbers N(p, D - p).
    Charnum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Number of point conditions; omit to print the whole table.
        #[arg(long)]
        p: Option<usize>,
        /// Number of lines (pencil family only).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Count tangent to curves of given degree and class.
    Zeuthen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        points: usize,
        /// Comma-separated `degree:class` pairs.
        #[arg(long, default_value = "")]
        curves: String,
    },
    Schubert {
        #[command(subcommand)]
        op: SchubertOp,
    },
    /// Multivariate Tutte polynomial of an arrangement file.
    Tutte {
        #[arg(long)]
        arrangement: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        xs: String,
    },
    /// Virtual and (with a realization) actual dimension of an incidence correspondence.
    Dim {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        realization: Option<PathBuf>,
    },
    Class {
        #[command(subcommand)]
        op: ClassOp,
    },
    /// Write the built-in Pappus configuration as spec and realization files.
    Pappus {
        #[arg(long)]
        spec_out: PathBuf,
        #[arg(long)]
        realization_out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountKind {
    Generic {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    ZeroConed {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    DConed {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        /// Report the single-configuration undercount instead.
        #[arg(long)]
        naive: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchubertOp {
    /// Degree of sigma_0^s0 sigma_1^s1 sigma_11^s2 ... on G(d, n).
    Degree {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClassOp {
    /// Class of the line/marked-point incidence variety.
    Incidence {
        #[arg(long)]
        k: usize,
        /// Monomial such as `x1*x2*x3*y12*y13*y23`.
        #[arg(long)]
        coefficient: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Generic3,
    Generic4,
    Braid,
    Pencil,
}

impl FamilyArg {
    fn resolve(self, k: Option<usize>) -> Result<Family> {
        Ok(match self {
            FamilyArg::Generic3 => Family::GenericLines(3),
            FamilyArg::Generic4 => Family::GenericLines(4),
            FamilyArg::Braid => Family::Braid,
            FamilyArg::Pencil => Family::Pencil(k.ok_or_else(|| {
                Error::InvalidInput("--k is required for the pencil family".into())
            })?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub result: String,
    pub details: Vec<(String, String)>,
    pub provenance: String,
}

impl CommandResult {
    fn new(command: &str, result: impl ToString, provenance: impl Into<String>) -> Self {
        CommandResult {
            command: command.to_string(),
            result: result.to_string(),
            details: Vec::new(),
            provenance: provenance.into(),
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.push((key.to_string(), value.to_string()));
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nresult: {}\n", self.command, self.result);
        for (k, v) in &self.details {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("provenance: {}\n", self.provenance));
        out
    }

    pub fn to_json(&self) -> String {
        let details: serde_json::Map<String, serde_json::Value> = self
            .details
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        serde_json::json!({
            "command": self.command,
            "result": self.result,
            "details": details,
            "provenance": self.provenance,
        })
        .to_string()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn parse_list<T>(text: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse(t.trim())).collect()
}

/// Renders a table as `N(0),N(1),...`.
fn table_row(table: &CharNumberTable) -> String {
    let values: Vec<String> = table.entries().iter().map(|v| v.to_string()).collect();
    values.join(",")
}

pub fn execute(cli: &Cli, invocation: &str) -> Result<CommandResult> {
    let cmd = invocation;
    match &cli.command {
        Command::Count { kind } => match *kind {
            CountKind::Generic { k, n } => {
                Ok(
                    CommandResult::new(cmd, count_generic(k, n)?, "(kn)! / (k! (n!)^k)")
                        .with("dimension", dim_generic(k, n)?),
                )
            }
            CountKind::ZeroConed { k, n } => Ok(CommandResult::new(
                cmd,
                count_0coned(k, n)?,
                "(kn+n-k)! / ((n!)^(n+1) (k-n)! ((n-1)!)^(k-n))",
            )
            .with("dimension", k * n + n - k)),
            CountKind::DConed { d, k, n, naive } => {
                let dim = dconed_dim(d, k, n)?;
                if naive {
                    return Ok(CommandResult::new(
                        cmd,
                        naive_dconed_count(d, k, n)?,
                        "C(k, n-d) D! / ((n!)^(n-d) ((n-d-1)!)^(k-n+d)) / k!",
                    )
                    .with("dimension", dim)
                    .with("full_count", count_dconed(d, k, n)?));
                }
                let mut out = CommandResult::new(
                    cmd,
                    count_dconed(d, k, n)?,
                    "sum over s in Gamma of deg(sigma^s) multinomial(k; s) multinomial(D; (n-d-1+i)^s_i) / k!",
                )
                .with("dimension", dim);
                for term in dconed_terms(d, k, n)? {
                    let s: Vec<String> = term.s.iter().map(|v| v.to_string()).collect();
                    out = out.with(
                        &format!("term({})", s.join(",")),
                        format!(
                            "{} * {} * {}",
                            term.schubert_degree, term.labelings, term.point_distributions
                        ),
                    );
                }
                Ok(out)
            }
        },
        Command::Charnum { family, p, k } => {
            let family = family.resolve(*k)?;
            let table = CharNumberTable::for_family(family)?;
            let provenance = match family {
                Family::GenericLines(_) => {
                    "deg([M] (sum x)^p (sum y)^(2k-p)) minus coincident-line configurations, / k!"
                }
                Family::Braid => "N_4(8-p, p) by projective duality",
                Family::Pencil(_) => "3 C(k+2,4), C(k+1,2), 1 at p = k+2, k+1, k",
            };
            let out = match p {
                Some(p) => CommandResult::new(cmd, table.entry(*p)?, provenance).with("p", p),
                None => CommandResult::new(cmd, table_row(&table), provenance),
            };
            Ok(out.with("family", family).with("dimension", table.dim()))
        }
        Command::Zeuthen {
            family,
            k,
            points,
            curves,
        } => {
            let table = CharNumberTable::for_family(family.resolve(*k)?)?;
            let curves = parse_list(curves, |t| t.parse::<CurveSpec>())?;
            Ok(CommandResult::new(
                cmd,
                zeuthen_transfer(&table, *points, &curves)?,
                "expand mu^p prod(m_i mu + n_i nu), replace mu^j nu^(D-j) by N(j, D-j)",
            )
            .with("family", table.family())
            .with("dimension", table.dim()))
        }
        Command::Schubert {
            op: SchubertOp::Degree { d, n, s },
        } => {
            let g = GrassmannianSpec::new(*d, *n)?;
            let s = parse_list(s, |t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad exponent `{t}`")))
            })?;
            Ok(CommandResult::new(
                cmd,
                schubert_degree(g, &s)?,
                "iterated dual Pieri rule, coefficient of the point class",
            )
            .with("grassmannian_dim", g.dim()))
        }
        Command::Tutte { arrangement, q, xs } => {
            let a = HyperplaneArrangement::parse(&read(arrangement)?)?;
            let lattice = lattice_from_arrangement(&a)?;
            let rational = |t: &str| parse_rational(t).map_err(Error::InvalidInput);
            let q = rational(q)?;
            let xs: Vec<BigRational> = parse_list(xs, rational)?;
            let value = tutte_eval(&lattice, &q, &xs)?;
            Ok(CommandResult::new(
                cmd,
                format_rational(&value),
                "sum over subsets B of q^(-rk B) prod_{j in B} x_j",
            )
            .with("hyperplanes", a.len())
            .with("flats", lattice.flats().len())
            .with("generic", is_generic(&a)))
        }
        Command::Dim { spec, realization } => {
            let spec = IncidenceSpec::parse(&read(spec)?)?;
            let virt = virtual_dimension(&spec);
            match realization {
                None => Ok(CommandResult::new(cmd, virt, "n (k + l) - |incidences|")
                    .with("virtual_dimension", virt)),
                Some(path) => {
                    let r = Realization::parse(&read(path)?)?;
                    let rank = jacobian_rank(&spec, &r)?;
                    let actual = moduli_dimension_estimate(&spec, &r)?;
                    Ok(CommandResult::new(
                        cmd,
                        actual,
                        "n (k + l) - rank of the incidence Jacobian at the realization (local dimension; upper bound at singular points)",
                    )
                    .with("virtual_dimension", virt)
                    .with("jacobian_rank", rank)
                    .with("actual_dimension", actual))
                }
            }
        }
        Command::Class {
            op: ClassOp::Incidence { k, coefficient },
        } => {
            let (ring, class) = incidence_class(*k)?;
            let provenance = "prod_{i<j} (x_i + y_ij)(x_j + y_ij)";
            match coefficient {
                Some(m) => {
                    let mono = ring.parse_monomial(m)?;
                    Ok(
                        CommandResult::new(cmd, class.coefficient_of(&mono)?, provenance)
                            .with("monomial", mono.display(&ring)),
                    )
                }
                None => Ok(CommandResult::new(cmd, &class, provenance).with("terms", class.len())),
            }
        }
        Command::Pappus {
            spec_out,
            realization_out,
        } => {
            let (spec, r) = pappus_realization();
            write(spec_out, &spec.to_string())?;
            write(realization_out, &r.to_string())?;
            Ok(
                CommandResult::new(cmd, spec.incidences().len(), "two-transversal construction")
                    .with("spec", spec_out.display())
                    .with("realization", realization_out.display()),
            )
        }
    }
}
