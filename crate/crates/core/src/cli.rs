//! Command line front end.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::gf::prime_power;
use crate::algebra::{FieldSpec, LaurentSeries};
use crate::charzero;
use crate::error::{Error, Result};
use crate::eval::{default_prec, EvalBudget, ValueFamily, DEFAULT_MAX_BRUTEFORCE};
use crate::indices::{Index, IndexPoly, ProductKind};
use crate::reduction::{Family, DEFAULT_CAP};
use crate::report::{Report, Status};
use crate::suites::{Session, DEFAULT_SEED};
use crate::witness::{find_dependence, DependenceProblem};

pub const BUDGET_ENV: &str = "FFMZV_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "ffmzv", version, about = "Multiple zeta values and their dagger variants over F_q[T]")]
pub struct Cli {
    #[command(flatten)]
    pub config: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Field order q (a prime power)
    #[arg(long = "q", global = true)]
    pub q: Option<u32>,
    /// Characteristic, as an alternative to --q
    #[arg(long = "p", global = true)]
    pub p: Option<u32>,
    /// Extension degree, used with --p
    #[arg(long = "e", global = true)]
    pub e: Option<u32>,
    /// Irreducible modulus over F_p as "c0,c1,...,1"
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Precision N: coefficients through T^-N
    #[arg(long, global = true)]
    pub prec: Option<i64>,
    #[arg(long, global = true, default_value_t = 4)]
    pub max_weight: u32,
    #[arg(long, global = true, default_value_t = 4)]
    pub max_d: u32,
    #[arg(long, global = true, default_value_t = 2)]
    pub deg_bound: u32,
    /// Brute-force budget for power sums (overridden by FFMZV_BUDGET)
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Step cap for reduction to the Thakur basis
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Write the JSON report to this path ("-" for stdout)
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a value family at an index
    Eval {
        #[arg(long, default_value = "zeta")]
        family: String,
        #[arg(long)]
        index: String,
    },
    /// Multiply two indices
    Product {
        #[arg(long, value_enum, default_value = "harmonic")]
        kind: KindArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Express a value in the Thakur basis
    Reduce {
        #[arg(long, default_value = "li")]
        family: String,
        #[arg(long)]
        index: String,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Number of random pairs for the product suite
        #[arg(long, default_value_t = 50)]
        pairs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Matrix of the involution on the quotient at one weight
    Iota {
        #[arg(long)]
        weight: u32,
        /// Comma-separated: involution, nontrivial
        #[arg(long, default_value = "involution")]
        check: String,
    },
    /// Compare iota(class of zeta(s)) with the class of zeta-dagger(s)
    Conjecture {
        #[arg(long)]
        index: Option<String>,
    },
    /// Search for F_q[T]-linear relations among values
    Depend {
        #[arg(long, default_value = "li")]
        family: String,
        /// Semicolon-separated indices, e.g. "(2);(1,1)"
        #[arg(long)]
        indices: String,
    },
    /// Real multiple zeta values
    Charzero {
        #[arg(long, value_enum, default_value = "duality")]
        check: CharzeroArg,
        #[arg(long)]
        index: Option<String>,
        #[arg(long, default_value_t = charzero::DEFAULT_TERMS)]
        terms: u64,
        #[arg(long, default_value_t = charzero::DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Harmonic,
    Qshuffle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Fundamental,
    Powersum,
    Products,
    Prodsum,
    Dagger,
    Kernel,
    Theorem,
    Prop41,
    Prop42,
    Keylemma,
    Nontrivial,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharzeroArg {
    Duality,
    Prodsum,
    Example45,
}

fn parse_index(src: &str) -> Result<Index> {
    Index::from_str(src.trim())
}

fn parse_modulus(src: &str) -> Result<Vec<u32>> {
    src.split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad modulus coefficient '{c}'"))))
        .collect()
}

impl GlobalArgs {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        let modulus = self.modulus.as_deref().map(parse_modulus).transpose()?;
        let (p, e) = match (self.q, self.p) {
            (Some(q), None) => prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?,
            (None, Some(p)) => (p, self.e.unwrap_or(1)),
            (Some(q), Some(p)) => {
                let (pp, e) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
                if pp != p {
                    return Err(Error::InvalidField(format!("q = {q} is not a power of p = {p}")));
                }
                (p, e)
            }
            (None, None) => (2, self.e.unwrap_or(1)),
        };
        FieldSpec::new(p, e, modulus)
    }

    /// Budget from FFMZV_BUDGET, then --budget, then the default.
    pub fn max_bruteforce(&self) -> Result<u64> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{BUDGET_ENV}='{v}' is not an integer"))),
            Err(_) => Ok(self.budget.unwrap_or(DEFAULT_MAX_BRUTEFORCE)),
        }
    }

    fn session(&self, prec: i64) -> Result<Session> {
        let spec = self.field_spec()?;
        let max_bruteforce = self.max_bruteforce()?;
        if max_bruteforce < spec.q() as u64 {
            return Err(Error::InvalidInput(format!("budget {max_bruteforce} is below q = {}", spec.q())));
        }
        Ok(Session::new(spec, EvalBudget { prec, max_bruteforce }, self.cap))
    }
}

fn run_suite(s: &Session, suite: SuiteArg, g: &GlobalArgs, pairs: usize, seed: u64) -> Result<Report> {
    let w = g.max_weight;
    Ok(match suite {
        SuiteArg::Fundamental => s.fundamental(g.max_d)?,
        SuiteArg::Powersum => s.powersum(g.max_d)?,
        SuiteArg::Products => s.products(w, pairs, seed)?,
        SuiteArg::Prodsum => s.prodsum(w, 4)?,
        SuiteArg::Dagger => s.dagger(w, 4)?,
        SuiteArg::Kernel => s.kernel(w),
        SuiteArg::Theorem => s.theorem(w)?,
        SuiteArg::Prop41 => s.prop41(w)?,
        SuiteArg::Prop42 => s.prop42(w)?,
        SuiteArg::Keylemma => s.keylemma(w)?,
        SuiteArg::Nontrivial => s.nontrivial()?,
        SuiteArg::All => {
            let mut all = Report::new("all").param("q", s.q()).param("max_weight", w);
            for one in [
                SuiteArg::Fundamental,
                SuiteArg::Powersum,
                SuiteArg::Products,
                SuiteArg::Prodsum,
                SuiteArg::Dagger,
                SuiteArg::Kernel,
                SuiteArg::Theorem,
                SuiteArg::Prop41,
                SuiteArg::Prop42,
                SuiteArg::Keylemma,
                SuiteArg::Nontrivial,
            ] {
                all.absorb(run_suite(s, one, g, pairs, seed)?);
            }
            all.finish()
        }
    })
}

fn execute(cli: &Cli) -> Result<Report> {
    let g = &cli.config;
    match &cli.command {
        Command::Eval { family, index } => {
            let fam = ValueFamily::from_str(family)?;
            let s = parse_index(index)?;
            let prec = g.prec.unwrap_or(default_prec(s.weight()));
            let sess = g.session(prec)?;
            let v = sess.evaluator.eval_index(fam, &s, prec)?;
            let mut rep = Report::new("eval").param("q", sess.q()).param("family", fam.name()).param("prec", prec);
            rep.push(format!("{fam}{s}"), Status::Observation, v.format(&sess.field));
            Ok(rep.finish())
        }
        Command::Product { kind, left, right } => {
            let (a, b) = (parse_index(left)?, parse_index(right)?);
            let sess = g.session(g.prec.unwrap_or(40))?;
            let kind = match kind {
                KindArg::Harmonic => ProductKind::Harmonic,
                KindArg::Qshuffle => ProductKind::QShuffle,
            };
            let p = sess.algebra().product(&IndexPoly::from_index(a.clone()), &IndexPoly::from_index(b.clone()), kind);
            let mut rep = Report::new("product").param("q", sess.q()).param("kind", format!("{kind:?}").to_lowercase());
            rep.push(format!("{a} * {b}"), Status::Observation, p.format(&sess.field));
            Ok(rep.finish())
        }
        Command::Reduce { family, index } => {
            let fam = Family::from_str(family)?;
            let s = parse_index(index)?;
            let prec = g.prec.unwrap_or(default_prec(s.weight()));
            let sess = g.session(prec)?;
            let r = sess.reducer.reduce_index(fam, &s)?;
            let lhs = sess.evaluator.eval_index(fam.value(), &s, prec)?;
            let rhs = sess.evaluator.eval(fam.value(), &r, prec)?;
            let mut rep = Report::new("reduce").param("q", sess.q()).param("family", fam.name()).param("prec", prec);
            let verdict = if lhs.eq_to_common_prec(&rhs) { "values agree" } else { "VALUES DIFFER" };
            rep.check(s.to_string(), lhs.eq_to_common_prec(&rhs), format!("{} [{verdict} through T^-{prec}]", r.format(&sess.field)));
            Ok(rep.finish())
        }
        Command::Verify { suite, pairs, seed } => {
            let sess = g.session(g.prec.unwrap_or(default_prec(g.max_weight)))?;
            run_suite(&sess, *suite, g, *pairs, *seed)
        }
        Command::Iota { weight, check } => {
            let sess = g.session(g.prec.unwrap_or(40))?;
            let k = &*sess.field;
            let m = sess.reducer.iota_matrix(*weight)?;
            let mut rep = Report::new("iota").param("q", sess.q()).param("weight", *weight).param("dim", m.dim());
            rep.push("matrix", Status::Observation, m.format(k));
            for c in check.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                match c {
                    "involution" => rep.check("iota^2 = 1", m.square(k).is_identity(), "exact matrix square"),
                    "nontrivial" => {
                        if m.is_identity() {
                            rep.push("iota != 1", Status::Observation, "identity at this weight");
                        } else {
                            rep.check("iota != 1", true, "non-identity matrix");
                        }
                    }
                    other => return Err(Error::Parse(format!("unknown iota check '{other}'"))),
                }
            }
            Ok(rep.finish())
        }
        Command::Conjecture { index } => {
            let sess = g.session(g.prec.unwrap_or(40))?;
            match index {
                Some(src) => sess.reducer.check_conjecture(&parse_index(src)?),
                None => sess.conjecture(g.max_weight),
            }
        }
        Command::Depend { family, indices } => {
            let fam = ValueFamily::from_str(family)?;
            let idx: Vec<Index> = indices.split(';').map(parse_index).collect::<Result<_>>()?;
            let prec = g.prec.unwrap_or(30);
            let sess = g.session(prec + g.deg_bound as i64)?;
            let k = &*sess.field;
            let values: Vec<LaurentSeries> = idx
                .iter()
                .map(|s| sess.evaluator.eval_index(fam, s, prec + g.deg_bound as i64))
                .collect::<Result<_>>()?;
            let dep = find_dependence(&DependenceProblem { values, deg_bound: g.deg_bound }, k)?;
            let labels: Vec<String> = idx.iter().map(Index::to_string).collect();
            let mut rep = Report::new("depend")
                .param("q", sess.q())
                .param("family", fam.name())
                .param("values", labels.join(";"))
                .param("deg_bound", g.deg_bound)
                .param("precision", dep.precision);
            if let Some(w) = &dep.warning {
                rep.push("precision", Status::Observation, w.clone());
            }
            if dep.kernel.is_empty() {
                rep.push("kernel", Status::Observation, "no relation found");
            }
            for (i, t) in dep.kernel.iter().enumerate() {
                let cells: Vec<String> = t.iter().map(|a| a.format(k)).collect();
                rep.push(format!("candidate {i}"), Status::Observation, format!("({})", cells.join(", ")));
            }
            Ok(rep.finish())
        }
        Command::Charzero { check, index, terms, tol } => {
            if tol.is_nan() || *tol < 0.0 {
                return Err(Error::InvalidInput(format!("tolerance {tol} must be non-negative")));
            }
            charzero_report(*check, index.as_deref(), *terms, *tol)
        }
    }
}

fn charzero_report(check: CharzeroArg, index: Option<&str>, terms: u64, tol: f64) -> Result<Report> {
    match check {
            CharzeroArg::Duality => {
                let corpus = match index {
                    Some(src) => vec![parse_index(src)?],
                    None => charzero::default_corpus(),
                };
                charzero::check_duality(&corpus, terms, tol)
            }
            CharzeroArg::Prodsum => {
                let s = parse_index(index.unwrap_or("(2,3)"))?;
                charzero::check_prodsum0(&s, terms, tol)
            }
            CharzeroArg::Example45 => charzero::example45_report(terms, tol),
    }
}

fn emit(rep: &Report, json: Option<&PathBuf>) -> std::io::Result<()> {
    match json {
        Some(p) if p.as_os_str() == "-" => println!("{}", rep.to_json()),
        Some(p) => {
            std::fs::write(p, rep.to_json() + "\n")?;
            print!("{}", rep.to_table());
        }
        None => print!("{}", rep.to_table()),
    }
    Ok(())
}

/// Runs the tool on `argv` and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = execute(&cli);
    if let Ok(rep) = &result {
        if let Err(e) = emit(rep, cli.config.json.as_ref()) {
            eprintln!("error: cannot write report: {e}");
            return 3;
        }
    }
    if let Err(e) = &result {
        eprintln!("error[{}]: {e}", e.name());
    }
    exit_code(&result)
}

/// 0 when nothing failed, 1 on a failed case, 2 on bad input, 3 otherwise.
pub fn exit_code(result: &Result<Report>) -> i32 {
    match result {
        Ok(rep) if rep.passed() => 0,
        Ok(_) => 1,
        Err(e) if e.is_usage() => 2,
        Err(_) => 3,
    }
}
