//! Command-line front end.
//!
//! Expressions combine basis elements such as `F[0,2,1]`, `A[0,0,3]`,
//! `K[1,0,2]`, `At[1,0,2]`, `S[2,3,1]`, `Fq[2]` and `Sch[2,1]`, monomials
//! `x^(3,1,1,0,0)` or `x2^3`, integers, and operator words like
//! `pi~[1,2,4,3]` applied to the factor that follows. Factors multiply with
//! `*` or juxtaposition; terms combine with `+` and `-`. A trailing
//! `--vars n` inside the expression fixes the number of variables.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::basis::{self, BasisFamily, GesselMethod, Method};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::expansion::{expand_fatom, expand_key, expand_slide, BasisExpansion};
use crate::operator::{apply_sequence, OperatorKind};
use crate::permutation::Permutation;
use crate::polynomial::{Polynomial, PolynomialRecord};
use crate::product::{fatom_product, fundamental_shuffle_set, shuffle_set, slide_product, slide_times_fatom, Shuffle};
use crate::verify::{run_suite, Bounds};

pub const EXIT_OK: i32 = 0;
/// Some verification check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Operator,
    Combinatorial,
    ThetaSum,
    /// Every construction the family has, compared against each other.
    Both,
}

/// Target of `expand`: a basis, or plain monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Monomial,
    Fatom,
    Slide,
    Key,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// `F[a] * F[b]` by shuffle sets.
    Slide,
    /// `F[a] * A[b]` by fundamental shuffle sets.
    SlideFatom,
    /// `A[a] * A[b]` by signed multiset partitions.
    Fatom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShuffleKind {
    Plain,
    Fundamental,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "fundamental", version, about = "Fundamental slide and fundamental atom polynomials")]
pub struct Query {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print one basis element as a polynomial.
    Basis {
        #[arg(value_parser = BasisFamily::from_str)]
        family: BasisFamily,
        /// Composition, partition or one-line permutation, e.g. 0,2,1.
        #[arg(value_parser = Composition::from_str)]
        index: Composition,
        /// Number of variables (required for gessel).
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Evaluate an expression and expand it in a basis.
    Expand {
        #[arg(long = "in", value_enum)]
        target: Target,
        expr: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Multiply two basis elements with a combinatorial rule.
    Multiply {
        #[arg(long, value_enum)]
        rule: Rule,
        expr: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// List the shuffle set or fundamental shuffle set of two compositions.
    Shuffles {
        #[arg(long, value_enum)]
        kind: ShuffleKind,
        #[arg(value_parser = Composition::from_str)]
        a: Composition,
        #[arg(value_parser = Composition::from_str)]
        b: Composition,
    },
    /// Run the identity checks.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 50)]
        random: usize,
    },
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl Query {
    /// Arguments that parse back to this query, program name first.
    pub fn to_args(&self) -> Vec<String> {
        let mut v = vec!["fundamental".to_string(), "--output".to_string(), value_name(&self.output)];
        let mut push = |s: &str| v.push(s.to_string());
        match &self.command {
            Command::Basis { family, index, vars, method } => {
                push("basis");
                push(family.name());
                push(&index.to_string());
                if let Some(n) = vars {
                    push("--vars");
                    push(&n.to_string());
                }
                if let Some(m) = method {
                    push("--method");
                    push(&value_name(m));
                }
            }
            Command::Expand { target, expr, vars } => {
                push("expand");
                push("--in");
                push(&value_name(target));
                push(expr);
                if let Some(n) = vars {
                    push("--vars");
                    push(&n.to_string());
                }
            }
            Command::Multiply { rule, expr, vars } => {
                push("multiply");
                push("--rule");
                push(&value_name(rule));
                push(expr);
                if let Some(n) = vars {
                    push("--vars");
                    push(&n.to_string());
                }
            }
            Command::Shuffles { kind, a, b } => {
                push("shuffles");
                push("--kind");
                push(&value_name(kind));
                push(&a.to_string());
                push(&b.to_string());
            }
            Command::Verify { max_weight, max_length, only, random } => {
                push("verify");
                push("--max-weight");
                push(&max_weight.to_string());
                push("--max-length");
                push(&max_length.to_string());
                if !only.is_empty() {
                    push("--only");
                    push(&only.join(","));
                }
                push("--random");
                push(&random.to_string());
            }
        }
        v
    }
}

/// Parses and executes `args` (program name first). Returns the exit code
/// and the text to print: standard output on success, an error message
/// otherwise.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let query = match Query::try_parse_from(args) {
        Ok(q) => q,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match execute(&query) {
        Ok((code, out)) => (code, out),
        Err(e @ Error::Parse { .. }) => (EXIT_PARSE, format!("error: {e}\n")),
        Err(e) => (EXIT_DOMAIN, format!("error: {e}\n")),
    }
}

fn render<T: Serialize>(output: Output, value: &T, text: impl FnOnce() -> String) -> String {
    match output {
        Output::Json => serde_json::to_string(value).expect("records serialize") + "\n",
        Output::Text => text() + "\n",
    }
}

fn render_polynomial(output: Output, p: &Polynomial) -> String {
    render(output, &p.to_record(), || p.to_string())
}

fn render_expansion(output: Output, e: &BasisExpansion) -> String {
    render(output, &e.to_record(), || e.to_string())
}

#[derive(Serialize)]
struct ShuffleRecord {
    word: String,
    des: Composition,
    des_a: Composition,
    des_b: Composition,
}

/// Executes a parsed query.
pub fn execute(q: &Query) -> Result<(i32, String)> {
    let out = match &q.command {
        Command::Basis { family, index, vars, method: Some(MethodArg::Both) } => {
            return compare_methods(q.output, *family, index, *vars);
        }
        Command::Basis { family, index, vars, method } => {
            render_polynomial(q.output, &basis_element(*family, index, *vars, *method)?)
        }
        Command::Expand { target, expr, vars } => {
            let parsed = parse_expression(expr)?;
            let n = merge_vars(*vars, parsed.vars)?;
            let p = parsed.expr.evaluate(parsed.expr.nvars(n)?)?;
            match target {
                Target::Monomial => render_polynomial(q.output, &p),
                Target::Fatom => render_expansion(q.output, &expand_fatom(&p)),
                Target::Slide => render_expansion(q.output, &expand_slide(&p)),
                Target::Key => render_expansion(q.output, &expand_key(&p)),
            }
        }
        Command::Multiply { rule, expr, vars } => {
            let parsed = parse_expression(expr)?;
            let n = parsed.expr.nvars(merge_vars(*vars, parsed.vars)?)?;
            let (want_left, want_right) = match rule {
                Rule::Slide => (BasisFamily::Slide, BasisFamily::Slide),
                Rule::SlideFatom => (BasisFamily::Slide, BasisFamily::Fatom),
                Rule::Fatom => (BasisFamily::Fatom, BasisFamily::Fatom),
            };
            let (a, b) = match &parsed.expr {
                Expr::Mul(x, y) => match (x.as_ref(), y.as_ref()) {
                    (Expr::Basis { family: f, index: a, .. }, Expr::Basis { family: g, index: b, .. })
                        if *f == want_left && *g == want_right =>
                    {
                        (Composition::with_len(a.clone(), n)?, Composition::with_len(b.clone(), n)?)
                    }
                    _ => return Err(rule_mismatch(want_left, want_right)),
                },
                _ => return Err(rule_mismatch(want_left, want_right)),
            };
            let e = match rule {
                Rule::Slide => slide_product(&a, &b)?,
                Rule::SlideFatom => slide_times_fatom(&a, &b)?,
                Rule::Fatom => fatom_product(&a, &b)?,
            };
            render_expansion(q.output, &e)
        }
        Command::Shuffles { kind, a, b } => {
            let set = match kind {
                ShuffleKind::Plain => shuffle_set(a, b)?,
                ShuffleKind::Fundamental => fundamental_shuffle_set(a, b)?,
            };
            let word = |s: &Shuffle| match kind {
                ShuffleKind::Plain => s.runs_string(),
                ShuffleKind::Fundamental => s.blocks_string(),
            };
            let records: Vec<ShuffleRecord> = set
                .iter()
                .map(|s| ShuffleRecord { word: word(s), des: s.des(), des_a: s.des_a(), des_b: s.des_b() })
                .collect();
            render(q.output, &records, || {
                let lines: Vec<String> = records.iter().map(|r| format!("{}  Des=({})", r.word, r.des)).collect();
                lines.join("\n")
            })
        }
        Command::Verify { max_weight, max_length, only, random } => {
            let bounds = Bounds { max_weight: *max_weight, max_length: *max_length, random_instances: *random };
            let report = run_suite(bounds, if only.is_empty() { None } else { Some(only) })?;
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            return Ok((code, render(q.output, &report, || report.to_string())));
        }
    };
    Ok((EXIT_OK, out))
}

fn rule_mismatch(left: BasisFamily, right: BasisFamily) -> Error {
    Error::Usage(format!("this rule multiplies {}[..] * {}[..]", left.symbol(), right.symbol()))
}

fn merge_vars(flag: Option<usize>, inline: Option<usize>) -> Result<Option<usize>> {
    match (flag, inline) {
        (Some(x), Some(y)) if x != y => Err(Error::Usage(format!("conflicting variable counts {x} and {y}"))),
        (x, y) => Ok(x.or(y)),
    }
}

#[derive(Serialize)]
struct MethodRecord {
    method: String,
    polynomial: PolynomialRecord,
}

#[derive(Serialize)]
struct ComparisonRecord {
    agree: bool,
    methods: Vec<MethodRecord>,
    /// Each method minus the first.
    differences: Vec<PolynomialRecord>,
}

fn compare_methods(output: Output, family: BasisFamily, index: &Composition, vars: Option<usize>) -> Result<(i32, String)> {
    let methods: &[MethodArg] = match family {
        BasisFamily::Slide | BasisFamily::Fatom => &[MethodArg::Operator, MethodArg::Combinatorial],
        BasisFamily::Gessel => &[MethodArg::Combinatorial, MethodArg::Operator, MethodArg::ThetaSum],
        _ => return Err(Error::Usage(format!("{} has a single construction", family.name()))),
    };
    let polys = methods
        .iter()
        .map(|&m| basis_element(family, index, vars, Some(m)))
        .collect::<Result<Vec<_>>>()?;
    let differences = polys[1..].iter().map(|p| p.sub(&polys[0])).collect::<Result<Vec<_>>>()?;
    let agree = differences.iter().all(Polynomial::is_zero);
    let record = ComparisonRecord {
        agree,
        methods: methods
            .iter()
            .zip(&polys)
            .map(|(m, p)| MethodRecord { method: value_name(m), polynomial: p.to_record() })
            .collect(),
        differences: differences.iter().map(Polynomial::to_record).collect(),
    };
    let text = || {
        let mut lines: Vec<String> = methods.iter().zip(&polys).map(|(m, p)| format!("{}: {p}", value_name(m))).collect();
        for (m, d) in methods[1..].iter().zip(&differences) {
            lines.push(format!("{} - {}: {d}", value_name(m), value_name(&methods[0])));
        }
        lines.join("\n")
    };
    let code = if agree { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((code, render(output, &record, text)))
}

fn basis_element(family: BasisFamily, index: &Composition, vars: Option<usize>, method: Option<MethodArg>) -> Result<Polynomial> {
    let n = vars.unwrap_or(index.len());
    let padded = || Composition::with_len(index.parts().to_vec(), n);
    let plain = |m: Option<MethodArg>| match m {
        None | Some(MethodArg::Combinatorial) => Ok(Method::Combinatorial),
        Some(MethodArg::Operator) => Ok(Method::Operator),
        Some(MethodArg::ThetaSum) => Err(Error::Usage("theta-sum applies only to gessel".into())),
        Some(MethodArg::Both) => unreachable!("handled by compare_methods"),
    };
    match family {
        BasisFamily::Slide => Ok(basis::slide(&padded()?, plain(method)?)),
        BasisFamily::Fatom => Ok(basis::fatom(&padded()?, plain(method)?)),
        BasisFamily::Key => Ok(basis::key(&padded()?)),
        BasisFamily::Atom => Ok(basis::atom(&padded()?)),
        BasisFamily::Schur => basis::schur(&padded()?),
        BasisFamily::Schubert => {
            let w = permutation_of(index)?;
            basis::schubert(&w).embed(n.max(w.size()))
        }
        BasisFamily::Gessel => {
            let n = vars.ok_or_else(|| Error::Usage("gessel needs --vars".into()))?;
            let m = match method {
                None | Some(MethodArg::Combinatorial) => GesselMethod::Combinatorial,
                Some(MethodArg::Operator) => GesselMethod::Operator,
                Some(MethodArg::ThetaSum) => GesselMethod::ThetaSum,
                Some(MethodArg::Both) => unreachable!("handled by compare_methods"),
            };
            basis::gessel(index, n, m)
        }
    }
}

fn permutation_of(index: &Composition) -> Result<Permutation> {
    Permutation::new(index.parts().iter().map(|&v| v as usize).collect())
}

// ----- expressions -----

/// A parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Basis { family: BasisFamily, index: Vec<u32>, column: usize },
    /// `x^(e₁,…,e_k)`.
    Monomial(Vec<u32>),
    /// `x_i^e`, 1-based `i`.
    Var { index: usize, exponent: u32 },
    Op { kind: OperatorKind, word: Vec<usize>, arg: Box<Expr>, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// An expression with the variable count given inside it, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedExpression {
    pub expr: Expr,
    pub vars: Option<usize>,
}

impl Expr {
    /// The variable count: `vars` when given, else the longest index.
    pub fn nvars(&self, vars: Option<usize>) -> Result<usize> {
        if let Some(n) = vars {
            return Ok(n);
        }
        let mut n = 0;
        let mut gessel = None;
        self.visit(&mut |e| match e {
            Expr::Basis { family: BasisFamily::Gessel, column, .. } => gessel = gessel.or(Some(*column)),
            Expr::Basis { index, .. } | Expr::Monomial(index) => n = n.max(index.len()),
            Expr::Var { index, .. } => n = n.max(*index),
            Expr::Op { word, .. } => n = n.max(word.iter().max().map_or(0, |m| m + 1)),
            _ => {}
        });
        match gessel {
            Some(col) => Err(Error::Usage(format!("Fq at column {col} needs --vars"))),
            None => Ok(n.max(1)),
        }
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Op { arg, .. } | Expr::Neg(arg) => arg.visit(f),
            Expr::Add(x, y) | Expr::Mul(x, y) => {
                x.visit(f);
                y.visit(f);
            }
            _ => {}
        }
    }

    /// Evaluates in `n` variables.
    pub fn evaluate(&self, n: usize) -> Result<Polynomial> {
        match self {
            Expr::Int(c) => Ok(Polynomial::one(n).scale(c)),
            Expr::Basis { family, index, .. } => {
                let index = Composition::new(index.clone());
                let vars = if *family == BasisFamily::Schubert { None } else { Some(n) };
                basis_element(*family, &index, vars, None)?.embed(n)
            }
            Expr::Monomial(e) => Ok(Polynomial::monomial(&Composition::with_len(e.clone(), n)?)),
            Expr::Var { index, exponent } => {
                if *index == 0 || *index > n {
                    return Err(Error::IndexOutOfRange { index: *index, max: n });
                }
                let mut e = vec![0; n];
                e[index - 1] = *exponent;
                Ok(Polynomial::monomial(&Composition::new(e)))
            }
            Expr::Op { kind, word, arg, .. } => apply_sequence(*kind, word, &arg.evaluate(n)?),
            Expr::Neg(x) => Ok(x.evaluate(n)?.negate()),
            Expr::Add(x, y) => x.evaluate(n)?.add(&y.evaluate(n)?),
            Expr::Mul(x, y) => x.evaluate(n)?.multiply(&y.evaluate(n)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Vars,
    End,
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse().map_err(|_| Error::parse(col, "integer too large"))?;
            out.push((Tok::Int(v), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '~' {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            let start = i + 2;
            i = start;
            while i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '-') {
                i += 1;
            }
            let flag: String = chars[start..i].iter().collect();
            if flag != "vars" {
                return Err(Error::parse(col, format!("unknown option --{flag}")));
            }
            out.push((Tok::Vars, col));
        } else if "[](),*+-^".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::parse(col, format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct ExprParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: Option<usize>,
}

/// Parses an expression; see the module documentation for the grammar.
pub fn parse_expression(s: &str) -> Result<ParsedExpression> {
    let mut p = ExprParser { toks: tokenize(s)?, pos: 0, vars: None };
    p.skip_vars()?;
    let expr = p.sum()?;
    p.skip_vars()?;
    match p.peek() {
        Tok::End => Ok(ParsedExpression { expr, vars: p.vars }),
        t => Err(Error::parse(p.col(), format!("unexpected {}", describe(&t)))),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("{s:?}"),
        Tok::Int(v) => format!("integer {v}"),
        Tok::Sym(c) => format!("{c:?}"),
        Tok::Vars => "--vars".into(),
        Tok::End => "end of input".into(),
    }
}

impl ExprParser {
    fn peek(&self) -> Tok {
        self.toks[self.pos].0.clone()
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.bump() {
            (Tok::Sym(d), _) if d == c => Ok(()),
            (t, col) => Err(Error::parse(col, format!("expected '{c}', found {}", describe(&t)))),
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.bump() {
            (Tok::Int(v), _) => Ok(v),
            (t, col) => Err(Error::parse(col, format!("expected an integer, found {}", describe(&t)))),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let col = self.col();
        u32::try_from(self.int()?).map_err(|_| Error::parse(col, "integer too large"))
    }

    fn skip_vars(&mut self) -> Result<()> {
        while self.peek() == Tok::Vars {
            self.bump();
            let col = self.col();
            let n = self.int()? as usize;
            if self.vars.is_some_and(|m| m != n) {
                return Err(Error::parse(col, "--vars given twice"));
            }
            self.vars = Some(n);
        }
        Ok(())
    }

    /// `[a,b,…]` or `(a,b,…)`, possibly empty.
    fn list(&mut self, open: char) -> Result<Vec<u32>> {
        let close = if open == '[' { ']' } else { ')' };
        self.expect(open)?;
        let mut out = Vec::new();
        if self.peek() == Tok::Sym(close) {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(self.small()?);
            match self.bump() {
                (Tok::Sym(','), _) => {}
                (Tok::Sym(c), _) if c == close => return Ok(out),
                (t, col) => return Err(Error::parse(col, format!("expected ',' or '{close}', found {}", describe(&t)))),
            }
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(Expr::Neg(Box::new(self.product()?))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(t: &Tok) -> bool {
        matches!(t, Tok::Ident(_) | Tok::Int(_) | Tok::Sym('(') | Tok::Sym('-'))
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                t if Self::starts_factor(&t) && t != Tok::Sym('-') => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let (tok, col) = self.bump();
        match tok {
            Tok::Sym('-') => Ok(Expr::Neg(Box::new(self.factor()?))),
            Tok::Sym('(') => {
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Int(v) => Ok(Expr::Int(BigInt::from(v))),
            Tok::Ident(name) if name == "x" => match self.peek() {
                Tok::Sym('^') => {
                    self.bump();
                    Ok(Expr::Monomial(self.list('(')?))
                }
                Tok::Int(_) => {
                    let index = self.int()? as usize;
                    let exponent = if self.peek() == Tok::Sym('^') {
                        self.bump();
                        self.small()?
                    } else {
                        1
                    };
                    Ok(Expr::Var { index, exponent })
                }
                t => Err(Error::parse(self.col(), format!("expected '^' or a variable number, found {}", describe(&t)))),
            },
            Tok::Ident(name) => {
                if let Some(family) = BasisFamily::from_symbol(&name) {
                    let index = self.list('[')?;
                    Ok(Expr::Basis { family, index, column: col })
                } else if let Ok(kind) = OperatorKind::from_str(&name) {
                    let word = self.list('[')?.into_iter().map(|i| i as usize).collect();
                    let arg = self.factor()?;
                    Ok(Expr::Op { kind, word, arg: Box::new(arg), column: col })
                } else {
                    Err(Error::parse(col, format!("unknown name {name:?}")))
                }
            }
            t => Err(Error::parse(col, format!("unexpected {}", describe(&t)))),
        }
    }
}
