//! Command-line interface: argument definitions, target resolution, and the
//! text renderings of the reports. JSON output serializes the same report
//! structures, so both forms carry identical numeric content.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog::Catalog;
use crate::constructors;
use crate::engine::FiniteGroup;
use crate::error::{Error, Result};
use crate::report::{
    self, CollideReport, CompareReport, ResolvedTarget, SpectrumReport,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "grouptype",
    version,
    about = "Exact order-type and exponent-type computations for finite groups"
)]
pub struct Cli {
    /// Data directory holding the catalog's .grp files and
    /// fingerprints.json (default: $GROUPTYPE_DATA, then ./data)
    #[arg(long, global = true, value_name = "DIR")]
    pub data: Option<PathBuf>,

    /// Emit the report as pretty-printed JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Load the seven-group catalog and check the headline identity: the
    /// products of the two factor lists share an order type while only the
    /// left list is solvable
    Verify,
    /// Print the order and exponent spectra of one target
    Spectrum {
        /// Target: builtin (c<n>, d<n>, q<n>, a<n>, pgl2_<p>), catalog
        /// label (s1..s7), a .grp file path, or a '*'-joined product
        target: String,
    },
    /// Compare the product exponent types of two target lists
    Compare {
        #[arg(long, num_args = 1.., required = true, value_name = "TARGET")]
        left: Vec<String>,
        #[arg(long, num_args = 1.., required = true, value_name = "TARGET")]
        right: Vec<String>,
    },
    /// Group targets by exponent-type fingerprint and report collisions
    Collide {
        #[arg(required = true, num_args = 2.., value_name = "TARGET")]
        targets: Vec<String>,
    },
}

/// Resolves target names into groups, loading the catalog lazily on first
/// use of an s1..s7 label so purely builtin invocations never touch disk.
pub struct TargetResolver {
    data_dir: PathBuf,
    catalog: Option<Catalog>,
    pub warnings: Vec<String>,
}

impl TargetResolver {
    pub fn new(data_dir: &Path) -> TargetResolver {
        TargetResolver {
            data_dir: data_dir.to_path_buf(),
            catalog: None,
            warnings: Vec::new(),
        }
    }

    fn catalog(&mut self) -> Result<&Catalog> {
        if self.catalog.is_none() {
            let catalog = Catalog::load(&self.data_dir)?;
            self.warnings.extend(catalog.warnings.iter().cloned());
            self.catalog = Some(catalog);
        }
        Ok(self.catalog.as_ref().unwrap())
    }

    fn resolve_single(&mut self, name: &str) -> Result<FiniteGroup> {
        if crate::catalog::ENTRIES.iter().any(|e| e.label == name) {
            let name = name.to_string();
            return Ok(self.catalog()?.get(&name).unwrap().clone());
        }
        if name.ends_with(".grp") || name.contains('/') {
            let (group, warnings) = constructors::from_generator_file(Path::new(name))?;
            self.warnings.extend(warnings);
            return Ok(group);
        }
        if let Some(p) = name.strip_prefix("pgl2_") {
            if let Ok(p) = p.parse::<u64>() {
                return constructors::pgl2(p);
            }
        }
        let unknown = || Error::UnknownTarget {
            name: name.to_string(),
        };
        let (kind, digits) = name.split_at(1.min(name.len()));
        let n: u64 = digits.parse().map_err(|_| unknown())?;
        match kind {
            "c" => constructors::cyclic(n),
            "d" => constructors::dihedral(n),
            "q" => constructors::generalized_quaternion(n),
            "a" => constructors::alternating(n),
            _ => Err(unknown()),
        }
    }

    /// Resolves one target, which may be a '*'-joined formal product.
    pub fn resolve(&mut self, name: &str) -> Result<ResolvedTarget> {
        let mut factors = Vec::new();
        for part in name.split('*') {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::UnknownTarget {
                    name: name.to_string(),
                });
            }
            factors.push(self.resolve_single(part)?);
        }
        Ok(ResolvedTarget {
            name: name.to_string(),
            factors,
        })
    }

    pub fn resolve_all(&mut self, names: &[String]) -> Result<Vec<ResolvedTarget>> {
        names.iter().map(|n| self.resolve(n)).collect()
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn factor_line(f: &crate::report::FactorReport) -> String {
    let id = match f.id {
        Some(id) => format!("({}, {})", id.order, id.index),
        None => "-".to_string(),
    };
    format!(
        "{:<6} {:>9}  {:>8}  {:<8}  {}",
        f.label,
        f.order,
        f.exponent,
        yn(f.solvable),
        id
    )
}

fn row_table(rows: &[crate::report::DivisorRow]) -> String {
    let mut out = String::from(" divisor          left         right  equal\n");
    for r in rows {
        out.push_str(&format!(
            "{:>8}  {:>12}  {:>12}  {}\n",
            r.divisor,
            r.left_product,
            r.right_product,
            yn(r.equal)
        ));
    }
    out
}

pub fn render_verify(r: &VerificationReport) -> String {
    let mut out = String::new();
    let names = |fs: &[crate::report::FactorReport]| {
        fs.iter()
            .map(|f| f.label.clone())
            .collect::<Vec<_>>()
            .join(" * ")
    };
    out.push_str("catalog verification\n");
    out.push_str(&format!("left  = {}\n", names(&r.left_factors)));
    out.push_str(&format!("right = {}\n\n", names(&r.right_factors)));
    out.push_str("factor     order  exponent  solvable  id\n");
    for f in r.left_factors.iter().chain(&r.right_factors) {
        out.push_str(&factor_line(f));
        out.push('\n');
    }
    out.push('\n');
    out.push_str(&format!(
        "left  product: order {}, exponent {}\n",
        r.left_order, r.left_exponent
    ));
    out.push_str(&format!(
        "right product: order {}, exponent {}\n\n",
        r.right_order, r.right_exponent
    ));
    out.push_str(&row_table(&r.per_divisor));
    out.push('\n');
    out.push_str(&format!("spectra equal:      {}\n", yn(r.spectra_equal)));
    if let Some(d) = r.first_unequal_divisor {
        out.push_str(&format!("first unequal divisor: {d}\n"));
    }
    out.push_str(&format!("left all solvable:  {}\n", yn(r.left_solvable)));
    out.push_str(&format!("right all solvable: {}\n", yn(r.right_solvable)));
    out.push_str(&format!(
        "conclusion (equal order types): {}\n",
        yn(r.conclusion)
    ));
    out.push_str(&format!(
        "verdict: {}\n",
        if r.theorem_holds() { "PASS" } else { "FAIL" }
    ));
    out
}

pub fn render_spectrum(r: &SpectrumReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("target: {}\n", r.target));
    out.push_str(&format!("order: {}\n", r.order));
    out.push_str(&format!("exponent: {}\n", r.exponent));
    out.push_str(&format!("solvable: {}\n\n", yn(r.solvable)));
    out.push_str("factor     order  exponent  solvable  id\n");
    for f in &r.factors {
        out.push_str(&factor_line(f));
        out.push('\n');
    }
    out.push('\n');
    out.push_str(" divisor     #order=d      #x^d=1\n");
    for ((d, o), e) in r
        .order_type
        .divisors
        .iter()
        .zip(&r.order_type.counts)
        .zip(&r.exponent_type.counts)
    {
        out.push_str(&format!("{:>8}  {:>11}  {:>10}\n", d, o, e));
    }
    out.push('\n');
    out.push_str(&format!("fingerprint: {}\n", r.fingerprint));
    out.push_str(&format!("fingerprint_hex: {}\n", r.fingerprint_hex));
    out
}

pub fn render_compare(r: &CompareReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "left  = {} (order {}, exponent {}, solvable {})\n",
        r.left.targets.join(" "),
        r.left.order,
        r.left.exponent,
        yn(r.left.solvable)
    ));
    out.push_str(&format!(
        "right = {} (order {}, exponent {}, solvable {})\n\n",
        r.right.targets.join(" "),
        r.right.order,
        r.right.exponent,
        yn(r.right.solvable)
    ));
    out.push_str(&row_table(&r.per_divisor));
    out.push('\n');
    out.push_str(&format!("spectra equal: {}\n", yn(r.spectra_equal)));
    if let Some(d) = r.first_unequal_divisor {
        out.push_str(&format!("first unequal divisor: {d}\n"));
    }
    out
}

pub fn render_collide(r: &CollideReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("targets: {}\n", r.targets.join(" ")));
    if r.classes.is_empty() {
        out.push_str(&format!(
            "no fingerprint collisions among {} targets\n",
            r.targets.len()
        ));
        return out;
    }
    for (i, class) in r.classes.iter().enumerate() {
        out.push_str(&format!(
            "\ncollision class {}: fingerprint {}\n",
            i + 1,
            class.fingerprint
        ));
        for m in &class.members {
            out.push_str(&format!(
                "  {:<24} order {:>12}  solvable {}\n",
                m.target, m.order, yn(m.solvable)
            ));
        }
        out.push_str(&format!(
            "  mixed solvability: {}\n",
            yn(class.mixed_solvability)
        ));
    }
    out
}

fn emit<T: serde::Serialize>(value: &T, text: String, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        print!("{text}");
    }
}

/// Runs a parsed command line; returns the process exit code. Mathematical
/// check failures (unequal spectra, failed verification) yield 1; data and
/// usage errors surface as `Err` and map to 2 or 3 via `Error::exit_code`.
pub fn run(cli: Cli) -> Result<i32> {
    let data_dir = cli
        .data
        .clone()
        .or_else(|| std::env::var_os("GROUPTYPE_DATA").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"));

    match &cli.command {
        Command::Verify => {
            let catalog = Catalog::load(&data_dir)?;
            for w in &catalog.warnings {
                eprintln!("warning: {w}");
            }
            let rep = report::verify(&catalog)?;
            emit(&rep, render_verify(&rep), cli.json);
            Ok(if rep.theorem_holds() { 0 } else { 1 })
        }
        Command::Spectrum { target } => {
            let mut resolver = TargetResolver::new(&data_dir);
            let resolved = resolver.resolve(target)?;
            for w in &resolver.warnings {
                eprintln!("warning: {w}");
            }
            let rep = report::spectrum(&resolved)?;
            emit(&rep, render_spectrum(&rep), cli.json);
            Ok(0)
        }
        Command::Compare { left, right } => {
            let mut resolver = TargetResolver::new(&data_dir);
            let left = resolver.resolve_all(left)?;
            let right = resolver.resolve_all(right)?;
            for w in &resolver.warnings {
                eprintln!("warning: {w}");
            }
            let rep = report::compare(&left, &right)?;
            emit(&rep, render_compare(&rep), cli.json);
            Ok(if rep.spectra_equal { 0 } else { 1 })
        }
        Command::Collide { targets } => {
            let mut resolver = TargetResolver::new(&data_dir);
            let resolved = resolver.resolve_all(targets)?;
            for w in &resolver.warnings {
                eprintln!("warning: {w}");
            }
            let rep = report::collide(&resolved)?;
            emit(&rep, render_collide(&rep), cli.json);
            Ok(0)
        }
    }
}
