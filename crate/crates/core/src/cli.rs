//! The `wardbinom` command line: `seq`, `table` and `verify`.
//!
//! Exit codes: 0 ok, 2 parse error, 3 degenerate recurrence, 4 oracle
//! mismatch, 5 identity failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::binomials::{binomial_quotient, mixed_quotient, multinomial_quotient};
use crate::error::Error;
use crate::oracle::{oracle_binomial, oracle_mixed, oracle_multinomial, OracleResult};
use crate::ring::{Fraction, Polynomial, RingElement};
use crate::sequences::{LucasPair, RecurrenceParams, SequenceHandle};
use crate::verify::{default_maxn, default_sweep, run_selector, ReportRecord, Selector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_ORACLE_MISMATCH: i32 = 4;
pub const EXIT_IDENTITY_FAILURE: i32 = 5;

const DEFAULT_MAXN: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "wardbinom", version, about = "Exact generalized binomial coefficients of second-order recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print H_0..H_maxn, one value per line.
    Seq(Options),
    /// Print the coefficient triangle for 0 <= k <= n <= maxn.
    Table(Options),
    /// Evaluate identities and report every cell.
    Verify(Options),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    U,
    V,
    H,
    Mixed,
    Multinomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Tex,
}

#[derive(Args, Debug)]
struct Options {
    #[arg(long, value_enum, default_value = "u")]
    family: Family,
    /// Recurrence coefficient s, e.g. `1`, `x+1`, `3/2*x^2-1`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "big_p")]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "big_q")]
    t: Option<String>,
    /// H_0 (family h only).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// H_1 (family h only).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// P in H_{n+2} = P*H_{n+1} - Q*H_n (same as --s).
    #[arg(long = "P", id = "big_p", allow_hyphen_values = true)]
    p: Option<String>,
    /// Q in H_{n+2} = P*H_{n+1} - Q*H_n (same as --t with the sign flipped).
    #[arg(long = "Q", id = "big_q", allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long)]
    maxn: Option<usize>,
    /// Identity labels: eq7, eq8, eq9, eq12, eq14, eq14-paper, eq14-derived, eq15, thm1-equiv.
    #[arg(long, value_delimiter = ',')]
    identity: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Recompute every table cell by brute force and abort on mismatch.
    #[arg(long)]
    oracle: bool,
    /// Parts of a multinomial coefficient, e.g. `1,1,2`.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateRecurrence => EXIT_DEGENERATE,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (e.g. `| head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::new(EXIT_OK, "");
        }
        Failure::new(1, e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Seq(opts) => run_seq(opts, out),
        Command::Table(opts) => run_table(opts, out),
        Command::Verify(opts) => run_verify(opts, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn literal(text: &str) -> Result<RingElement, Failure> {
    text.parse().map_err(Failure::from)
}

/// `(s, t)` from `--s/--t` or `--P/--Q`; `None` when neither is given.
fn coefficients(opts: &Options) -> Result<Option<(RingElement, RingElement)>, Failure> {
    let s = match (&opts.s, &opts.p) {
        (Some(s), _) | (None, Some(s)) => Some(literal(s)?),
        (None, None) => None,
    };
    let t = match (&opts.t, &opts.q) {
        (Some(t), _) => Some(literal(t)?),
        (None, Some(q)) => Some(-literal(q)?),
        (None, None) => None,
    };
    match (s, t) {
        (Some(s), Some(t)) => Ok(Some((s, t))),
        (None, None) => Ok(None),
        _ => Err(Failure::new(EXIT_PARSE, "give both s and t (or both P and Q)")),
    }
}

fn sequence_params(opts: &Options) -> Result<RecurrenceParams<RingElement>, Failure> {
    let (s, t) = coefficients(opts)?.unwrap_or_else(|| (RingElement::one(), RingElement::one()));
    let params = match opts.family {
        Family::U | Family::Multinomial => RecurrenceParams::lucas_u(s, t)?,
        Family::V => RecurrenceParams::lucas_v(s, t)?,
        Family::H => {
            let a = opts.a.as_deref().map(literal).transpose()?.unwrap_or_else(RingElement::zero);
            let b = opts.b.as_deref().map(literal).transpose()?.unwrap_or_else(RingElement::one);
            RecurrenceParams::new(s, t, a, b)?
        }
        Family::Mixed => RecurrenceParams::lucas_v(s, t)?,
    };
    Ok(params)
}

fn family_symbol(family: Family) -> &'static str {
    match family {
        Family::U | Family::Multinomial => "U",
        Family::V => "V",
        Family::H => "H",
        Family::Mixed => r"\langle\cdot\rangle/\{\cdot\}",
    }
}

fn run_seq(opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    if matches!(opts.family, Family::Mixed | Family::Multinomial) {
        return Err(Failure::new(EXIT_PARSE, "seq supports the u, v and h families"));
    }
    let h = SequenceHandle::new(sequence_params(opts)?);
    let terms = h.terms(opts.maxn.unwrap_or(DEFAULT_MAXN));
    match opts.format {
        Format::Csv => {
            for v in &terms {
                writeln!(out, "{v}")?;
            }
        }
        Format::Json => {
            let values: Vec<String> = terms.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", serde_json::to_string(&values).expect("strings serialize"))?;
        }
        Format::Tex => {
            let name = family_symbol(opts.family);
            for (n, v) in terms.iter().enumerate() {
                writeln!(out, "{name}_{{{n}}} = {} \\\\", to_tex(v))?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// One rendered table entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Value(RingElement),
    /// The quotient does not lie in the ring.
    Fraction(RingElement, RingElement),
    ZeroTerm(usize),
}

impl Cell {
    fn from_quotient(q: Result<Fraction<RingElement>, Error>) -> Result<Self, Error> {
        match q {
            Ok(f) => Ok(match f.reduce() {
                Ok(v) => Cell::Value(v),
                Err(_) => Cell::Fraction(f.numerator().clone(), f.denominator().clone()),
            }),
            Err(Error::ZeroTerm { index }) => Ok(Cell::ZeroTerm(index)),
            Err(e) => Err(e),
        }
    }

    fn matches_oracle(&self, oracle: &Result<OracleResult<RingElement>, Error>) -> bool {
        match (self, oracle) {
            (Cell::ZeroTerm(_), Err(Error::ZeroTerm { .. })) => true,
            (Cell::Value(v), Ok(o)) => o.reduced.as_ref() == Some(v),
            (Cell::Fraction(n, d), Ok(o)) => {
                o.reduced.is_none() && (n.clone() * o.denominator.clone() - o.numerator.clone() * d.clone()).is_zero()
            }
            _ => false,
        }
    }

    pub fn csv(&self) -> String {
        match self {
            Cell::Value(v) => v.to_string(),
            Cell::Fraction(n, d) => format!("({n})/({d})"),
            Cell::ZeroTerm(_) => "ZERO-TERM".to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Value(v) => json!(v.to_string()),
            Cell::Fraction(n, d) => json!({ "num": n.to_string(), "den": d.to_string() }),
            Cell::ZeroTerm(i) => json!({ "zero_term": i }),
        }
    }

    fn tex(&self) -> String {
        match self {
            Cell::Value(v) => to_tex(v),
            Cell::Fraction(n, d) => format!(r"\frac{{{}}}{{{}}}", to_tex(n), to_tex(d)),
            Cell::ZeroTerm(_) => r"\text{undefined}".to_string(),
        }
    }
}

/// Rows `n = 0..=maxn` of cells `k = 0..=n` for a binomial-type family.
fn triangle(
    family: Family,
    params: &RecurrenceParams<RingElement>,
    maxn: usize,
    with_oracle: bool,
) -> Result<Vec<Vec<Cell>>, Failure> {
    let seq = SequenceHandle::new(params.clone());
    let pair = LucasPair::new(params.s.clone(), params.t.clone())?;
    let mut rows = Vec::with_capacity(maxn + 1);
    for n in 0..=maxn {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let cell = match family {
                Family::Mixed => Cell::from_quotient(mixed_quotient(&pair, n - k, k))?,
                _ => Cell::from_quotient(binomial_quotient(&seq, n, k))?,
            };
            if with_oracle {
                let expected = match family {
                    Family::Mixed => oracle_mixed(&params.s, &params.t, n - k, k),
                    _ => oracle_binomial(&seq, n, k),
                };
                if !cell.matches_oracle(&expected) {
                    return Err(Failure::new(
                        EXIT_ORACLE_MISMATCH,
                        format!("oracle mismatch at n={n} k={k}: {}", cell.csv()),
                    ));
                }
            }
            row.push(cell);
        }
        rows.push(row);
    }
    Ok(rows)
}

fn run_table(opts: &Options, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = sequence_params(opts)?;
    if opts.family == Family::Multinomial {
        return run_multinomial(opts, &params, out);
    }
    let maxn = opts.maxn.unwrap_or(DEFAULT_MAXN);
    let rows = triangle(opts.family, &params, maxn, opts.oracle)?;
    match opts.format {
        Format::Csv => {
            for row in &rows {
                let line: Vec<String> = row.iter().map(Cell::csv).collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        Format::Json => {
            let doc = json!({
                "family": format!("{:?}", opts.family).to_lowercase(),
                "s": params.s.to_string(),
                "t": params.t.to_string(),
                "a": params.a.to_string(),
                "b": params.b.to_string(),
                "rows": rows.iter().map(|row| row.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"))?;
        }
        Format::Tex => {
            let sub = family_symbol(opts.family);
            for (n, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(k, cell)| {
                        let top = match opts.family {
                            Family::Mixed => format!(r"\binom{{{n}}}{{{},{k}}}", n - k),
                            _ => format!(r"\binom{{{n}}}{{{k}}}"),
                        };
                        format!("{top}_{{{sub}}} = {}", cell.tex())
                    })
                    .collect();
                writeln!(out, "{} \\\\", cells.join(r",\quad "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_multinomial(opts: &Options, params: &RecurrenceParams<RingElement>, out: &mut dyn Write) -> Result<i32, Failure> {
    if opts.parts.is_empty() {
        return Err(Failure::new(EXIT_PARSE, "the multinomial family needs --parts"));
    }
    let h = SequenceHandle::new(params.clone());
    let cell = Cell::from_quotient(multinomial_quotient(&h, &opts.parts))?;
    if opts.oracle && !cell.matches_oracle(&oracle_multinomial(&h, &opts.parts)) {
        return Err(Failure::new(EXIT_ORACLE_MISMATCH, format!("oracle mismatch: {}", cell.csv())));
    }
    let parts: Vec<String> = opts.parts.iter().map(ToString::to_string).collect();
    match opts.format {
        Format::Csv => writeln!(out, "{}", cell.csv())?,
        Format::Json => writeln!(out, "{}", json!({ "parts": opts.parts, "value": cell.json() }))?,
        Format::Tex => {
            let n: usize = opts.parts.iter().sum();
            writeln!(out, r"\binom{{{n}}}{{{}}}_{{U}} = {}", parts.join(","), cell.tex())?
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(opts: &Options, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let selectors = if opts.identity.is_empty() {
        Selector::DEFAULT.to_vec()
    } else {
        opts.identity
            .iter()
            .map(|l| Selector::parse(l))
            .collect::<Result<Vec<_>, _>>()?
    };
    let sweep = match coefficients(opts)? {
        Some((s, t)) => {
            let pair = LucasPair::new(s, t)?;
            let maxn = opts.maxn.unwrap_or_else(|| default_maxn(&pair));
            vec![(pair, maxn)]
        }
        None => default_sweep()
            .into_iter()
            .map(|(p, n)| (p, opts.maxn.unwrap_or(n)))
            .collect(),
    };
    for (pair, _) in &sweep {
        if pair.discriminant().is_zero() {
            writeln!(err, "warning: s={} t={} has a repeated characteristic root", pair.s(), pair.t())?;
        }
    }

    let outcomes: Vec<_> = selectors.iter().map(|&sel| run_selector(sel, &sweep)).collect();
    let records: Vec<ReportRecord> = outcomes
        .iter()
        .flat_map(|o| o.reports.iter().map(ReportRecord::from))
        .collect();
    let notes: Vec<&String> = outcomes.iter().flat_map(|o| &o.notes).collect();
    let passed = outcomes.iter().all(|o| o.passed);

    match opts.format {
        Format::Csv => {
            writeln!(out, "{}", ReportRecord::CSV_HEADER)?;
            for rec in &records {
                writeln!(out, "{}", rec.to_csv())?;
            }
            for note in &notes {
                writeln!(out, "# {note}")?;
            }
        }
        Format::Json => {
            let doc = json!({ "records": records, "summary": notes, "passed": passed });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("records serialize"))?;
        }
        Format::Tex => {
            for rec in &records {
                let side = |v: &Option<String>| v.as_deref().map_or("-".to_string(), tex_literal);
                writeln!(
                    out,
                    r"\text{{{}}}\ (s,t)=({},{}),\ r={},\ s={}:\quad {} \;\text{{vs}}\; {} \quad \text{{{}}} \\",
                    rec.identity,
                    tex_literal(&rec.s),
                    tex_literal(&rec.t),
                    rec.r,
                    rec.sidx,
                    side(&rec.lhs),
                    side(&rec.rhs),
                    rec.status
                )?;
            }
            for note in &notes {
                writeln!(out, "% {note}")?;
            }
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_IDENTITY_FAILURE })
}

fn tex_literal(text: &str) -> String {
    match text.parse::<RingElement>() {
        Ok(v) => to_tex(&v),
        Err(_) => {
            // a non-reduced "(num)/(den)" cell
            match text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).and_then(|t| t.split_once(")/(")) {
                Some((n, d)) => format!(r"\frac{{{}}}{{{}}}", tex_literal(n), tex_literal(d)),
                None => text.to_string(),
            }
        }
    }
}

fn rational_tex(q: &num_rational::BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!(r"{sign}\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}

fn polynomial_tex(p: &Polynomial<num_rational::BigRational>) -> String {
    let mut s = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let mag = c.abs();
        if deg == 0 || !mag.is_one() {
            s.push_str(&rational_tex(&mag));
        }
        match deg {
            0 => {}
            1 => s.push('x'),
            _ => s.push_str(&format!("x^{{{deg}}}")),
        }
    }
    s
}

/// TeX rendering: `\frac{3}{2}x^{2}-1`.
pub fn to_tex(v: &RingElement) -> String {
    match v {
        RingElement::Integer(n) => n.to_string(),
        RingElement::Rational(q) => rational_tex(q),
        RingElement::Polynomial(p) => polynomial_tex(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("wardbinom").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tex_rendering() {
        let v: RingElement = "3/2*x^2-1".parse().unwrap();
        assert_eq!(to_tex(&v), r"\frac{3}{2}x^{2}-1");
        assert_eq!(to_tex(&"-5/6".parse().unwrap()), r"-\frac{5}{6}");
        assert_eq!(to_tex(&"x^10-x".parse().unwrap()), "x^{10}-x");
        assert_eq!(tex_literal("(x^2+1)/(x+1)"), r"\frac{x^{2}+1}{x+1}");
    }

    #[test]
    fn parse_errors_exit_2() {
        assert_eq!(run_capture(&["seq", "--s", "1+", "--t", "1"]).0, EXIT_PARSE);
        assert_eq!(run_capture(&["seq", "--s", "1"]).0, EXIT_PARSE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_PARSE);
        assert_eq!(run_capture(&["seq", "--s", "1", "--P", "1", "--t", "1"]).0, EXIT_PARSE);
        assert_eq!(run_capture(&["verify", "--identity", "eq99"]).0, EXIT_PARSE);
    }

    #[test]
    fn zero_t_exits_3() {
        assert_eq!(run_capture(&["seq", "--s", "1", "--t", "0"]).0, EXIT_DEGENERATE);
        assert_eq!(run_capture(&["verify", "--s", "1", "--t", "0"]).0, EXIT_DEGENERATE);
    }

    #[test]
    fn pq_flags_flip_the_sign() {
        let (_, via_pq, _) = run_capture(&["seq", "--P", "3", "--Q", "2", "--maxn", "5"]);
        let (_, via_st, _) = run_capture(&["seq", "--s", "3", "--t", "-2", "--maxn", "5"]);
        assert_eq!(via_pq, via_st);
        assert_eq!(via_st, "0\n1\n3\n7\n15\n31\n");
    }
}
