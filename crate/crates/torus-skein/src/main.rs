//! Command-line front end over the torus skein algebra library.
//!
//! Elements are written in the expression grammar documented in the
//! README (`T(p,q)`, `P(d;p,q)`, `JW(n;p,q)`, `e(p,q)`, `a(n)`, Laurent
//! polynomial coefficients in `t`). Results print as canonical text or
//! JSON; coefficients can optionally be evaluated at a complex t or at
//! the root of unity exp(i*pi/(2r)).
//!
//! Exit codes: 0 on success, 2 on parse/usage errors, 3 on domain
//! errors (non-symmetric unembed input, non-primitive curve classes,
//! bad gluing matrices, undefined idempotents, and the like).

use std::f64::consts::PI;
use std::io::Read;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use torus_skein::error::Error;
use torus_skein::expr::{self, Expr, Kind, Value};
use torus_skein::format::{
    lens_json, lens_text, nc_json, nc_text, skein_json, skein_text, solid_json, solid_text,
    CoeffMode,
};
use torus_skein::jones_wenzl;
use torus_skein::lens::GluingMatrix;
use torus_skein::skein::{intersection_number, SkeinElement};
use torus_skein::solid_torus;

#[derive(Parser)]
#[command(
    name = "torus-skein",
    version,
    about = "Exact arithmetic in the Kauffman bracket skein algebra of the torus",
    after_help = "Element arguments accept '-' to read the expression from stdin."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Evaluate output coefficients at this value of t: a complex
    /// literal like "1", "0.5-0.25i", "i", or "root:r" for
    /// exp(i*pi/(2r)).
    #[arg(long, global = true, value_name = "T")]
    eval_at_t: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Skein,
    Nc,
    Solid,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Skein => Kind::Skein,
            KindArg::Nc => Kind::Nc,
            KindArg::Solid => Kind::Solid,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements of the same kind.
    Mul {
        #[arg(long, value_enum, default_value_t = KindArg::Skein)]
        kind: KindArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Embed a skein element into the noncommutative torus.
    Embed {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Recover the skein element represented by a symmetric
    /// noncommutative-torus element.
    Unembed {
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Project a skein element of the torus to the solid-torus module.
    Pi {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Act by a skein element on a solid-torus element.
    Act {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Operations in the skein module of a lens space.
    Lens {
        /// Gluing matrix columns a,b,p,q with determinant aq - bp = -1.
        #[arg(long, value_name = "A,B,P,Q", allow_hyphen_values = true)]
        matrix: String,
        #[command(subcommand)]
        op: LensOp,
    },
    /// Expand the n-th Jones-Wenzl idempotent threaded along the
    /// primitive curve (p, q).
    JwExpand {
        n: u64,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Maximal geometric intersection number between the curves of two
    /// skein elements.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Parse an expression and print its normal form.
    Eval {
        #[arg(long, value_enum, default_value_t = KindArg::Skein)]
        kind: KindArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand)]
enum LensOp {
    /// Reduce a solid-torus element to the spanning set
    /// {1 (x) a^k : k <= floor(p/2)}.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
}

enum EvalAt {
    Exact,
    Complex(Complex64),
    Root { r: u64, t: Complex64 },
}

impl EvalAt {
    fn mode(&self) -> CoeffMode {
        match self {
            EvalAt::Exact => CoeffMode::Exact,
            EvalAt::Complex(z) => CoeffMode::At(*z),
            EvalAt::Root { t, .. } => CoeffMode::At(*t),
        }
    }

    /// The root-of-unity guard: threaded idempotents JW(n;p,q) are
    /// defined at t = exp(i*pi/(2r)) only for n <= r - 2.
    fn check_jw(&self, indices: &[u64]) -> Result<(), Error> {
        if let EvalAt::Root { r, .. } = self {
            for &n in indices {
                jones_wenzl::check_defined_at_root(n, *r)?;
            }
        }
        Ok(())
    }
}

fn parse_eval_at(arg: Option<&str>) -> Result<EvalAt, Error> {
    let Some(s) = arg else {
        return Ok(EvalAt::Exact);
    };
    let s = s.trim();
    if let Some(r) = s.strip_prefix("root:") {
        let r: u64 = r
            .parse()
            .map_err(|_| syntax(format!("invalid root order '{r}' in --eval-at-t")))?;
        if r == 0 {
            return Err(syntax("root order must be at least 1".to_string()));
        }
        let t = Complex64::from_polar(1.0, PI / (2 * r) as f64);
        return Ok(EvalAt::Root { r, t });
    }
    parse_complex(s)
        .map(EvalAt::Complex)
        .ok_or_else(|| syntax(format!("invalid complex number '{s}' in --eval-at-t")))
}

/// Complex literals: "2", "-0.5", "i", "-i", "2i", "1+2i", "1-i",
/// including exponent notation in either part.
fn parse_complex(s: &str) -> Option<Complex64> {
    let body = match s.strip_suffix('i') {
        None => return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0)),
        Some(body) => body,
    };
    // split before the sign of the imaginary part, ignoring a leading
    // sign and exponent signs as in "1.5e-3"
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| {
            (c == '+' || c == '-')
                && i > 0
                && !matches!(body.as_bytes()[i - 1], b'e' | b'E')
        })
        .map(|(i, _)| i);
    let (re_str, im_str) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() { 0.0 } else { re_str.parse::<f64>().ok()? };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => im_str.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re, im))
}

fn syntax(message: String) -> Error {
    Error::Syntax { column: 1, message }
}

/// Resolves element arguments, where "-" means "read from stdin".
struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn new() -> Self {
        Inputs { stdin_used: false }
    }

    fn get(&mut self, arg: &str) -> Result<String, Error> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(syntax("stdin may only be used for one argument".to_string()));
        }
        self.stdin_used = true;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| syntax(format!("failed to read stdin: {e}")))?;
        Ok(buf)
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => println!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(if e.is_syntax() { 2 } else { 3 });
        }
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let eval_at = parse_eval_at(cli.eval_at_t.as_deref())?;
    let mode = eval_at.mode();
    let mut inputs = Inputs::new();

    match &cli.command {
        Command::Mul { kind, a, b } => {
            let kind = Kind::from(*kind);
            let (ea, eb) = (
                parse_guarded(&inputs.get(a)?, kind, &eval_at)?,
                parse_guarded(&inputs.get(b)?, kind, &eval_at)?,
            );
            let out = match (ea.eval(kind)?, eb.eval(kind)?) {
                (Value::Skein(x), Value::Skein(y)) => Value::Skein(&x * &y),
                (Value::Nc(x), Value::Nc(y)) => Value::Nc(&x * &y),
                (Value::Solid(x), Value::Solid(y)) => Value::Solid(&x * &y),
                _ => unreachable!("both sides parsed against the same kind"),
            };
            render(&out, cli.format, mode)
        }
        Command::Embed { a } => {
            let v = eval_skein(&inputs.get(a)?, &eval_at)?;
            let n = v.embed();
            match cli.format {
                Format::Text => nc_text(&n, mode),
                Format::Json => Ok(nc_json(&n, mode)?.to_string()),
            }
        }
        Command::Unembed { n } => {
            let e = parse_guarded(&inputs.get(n)?, Kind::Nc, &eval_at)?;
            let Value::Nc(v) = e.eval(Kind::Nc)? else {
                unreachable!("parsed against the nc kind")
            };
            let s = SkeinElement::from_symmetric(&v)?;
            render(&Value::Skein(s), cli.format, mode)
        }
        Command::Pi { a } => {
            let v = eval_skein(&inputs.get(a)?, &eval_at)?;
            render(&Value::Solid(solid_torus::project(&v)), cli.format, mode)
        }
        Command::Act { a, u } => {
            let v = eval_skein(&inputs.get(a)?, &eval_at)?;
            let w = eval_solid(&inputs.get(u)?, &eval_at)?;
            render(&Value::Solid(solid_torus::act(&v, &w)), cli.format, mode)
        }
        Command::Lens { matrix, op } => {
            let m = parse_matrix(matrix)?;
            match op {
                LensOp::Reduce { u } => {
                    let w = eval_solid(&inputs.get(u)?, &eval_at)?;
                    let reduced = m.reduce(&w);
                    match cli.format {
                        Format::Text => lens_text(&reduced, mode),
                        Format::Json => Ok(lens_json(&reduced, mode)?.to_string()),
                    }
                }
            }
        }
        Command::JwExpand { n, p, q } => {
            eval_at.check_jw(&[*n])?;
            let e = jones_wenzl::expansion(*n, *p, *q)?;
            render(&Value::Skein(e), cli.format, mode)
        }
        Command::Intersect { a, b } => {
            let x = eval_skein(&inputs.get(a)?, &eval_at)?;
            let y = eval_skein(&inputs.get(b)?, &eval_at)?;
            Ok(intersection_number(&x, &y).to_string())
        }
        Command::Eval { kind, a } => {
            let kind = Kind::from(*kind);
            let e = parse_guarded(&inputs.get(a)?, kind, &eval_at)?;
            render(&e.eval(kind)?, cli.format, mode)
        }
    }
}

fn parse_guarded(text: &str, kind: Kind, eval_at: &EvalAt) -> Result<Expr, Error> {
    let e = expr::parse(text, kind)?;
    eval_at.check_jw(&e.jw_indices())?;
    Ok(e)
}

fn eval_skein(text: &str, eval_at: &EvalAt) -> Result<SkeinElement, Error> {
    match parse_guarded(text, Kind::Skein, eval_at)?.eval(Kind::Skein)? {
        Value::Skein(e) => Ok(e),
        _ => unreachable!("parsed against the skein kind"),
    }
}

fn eval_solid(text: &str, eval_at: &EvalAt) -> Result<torus_skein::SolidTorusElement, Error> {
    match parse_guarded(text, Kind::Solid, eval_at)?.eval(Kind::Solid)? {
        Value::Solid(e) => Ok(e),
        _ => unreachable!("parsed against the solid kind"),
    }
}

fn parse_matrix(s: &str) -> Result<GluingMatrix, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(syntax("--matrix expects four comma-separated integers a,b,p,q".to_string()));
    }
    let mut vals = [0i64; 4];
    for (i, part) in parts.iter().enumerate() {
        vals[i] = part
            .parse()
            .map_err(|_| syntax(format!("invalid matrix entry '{part}'")))?;
    }
    GluingMatrix::new(vals[0], vals[1], vals[2], vals[3])
}

fn render(v: &Value, format: Format, mode: CoeffMode) -> Result<String, Error> {
    match (v, format) {
        (Value::Skein(e), Format::Text) => skein_text(e, mode),
        (Value::Skein(e), Format::Json) => Ok(skein_json(e, mode)?.to_string()),
        (Value::Nc(e), Format::Text) => nc_text(e, mode),
        (Value::Nc(e), Format::Json) => Ok(nc_json(e, mode)?.to_string()),
        (Value::Solid(e), Format::Text) => solid_text(e, mode),
        (Value::Solid(e), Format::Json) => Ok(solid_json(e, mode)?.to_string()),
    }
}
