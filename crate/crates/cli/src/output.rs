//! JSON and CSV emission. Every real number is written with 17 significant
//! digits; non-finite values become `null` (JSON) or empty (CSV).

use std::io::{self, Write};

use besselsum::sweep::SweepRow;
use besselsum::{EvalResult, Error, SumParams};
use serde::Serialize;
use serde_json::ser::Formatter;

/// Compact JSON with round-trip exact doubles.
struct Sci;

impl Formatter for Sci {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sci);
    value.serialize(&mut ser).expect("serializing an in-memory value");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

pub fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        String::new()
    }
}

#[derive(Serialize)]
pub struct ResultJson {
    pub value: f64,
    pub error_estimate: f64,
    pub terms_used: usize,
    pub method: String,
    pub convergence_class: String,
    pub certified: bool,
}

impl From<&EvalResult> for ResultJson {
    fn from(r: &EvalResult) -> Self {
        Self {
            value: r.value,
            error_estimate: r.error_estimate,
            terms_used: r.terms_used,
            method: r.method.to_string(),
            convergence_class: r.convergence.to_string(),
            certified: r.certified,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorJson {
    pub error: &'static str,
    pub detail: String,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        Self { error: e.kind(), detail: e.to_string() }
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "nu",
    "p",
    "a",
    "x",
    "mu",
    "kind",
    "method",
    "value",
    "error_estimate",
    "terms_used",
    "convergence_class",
];

/// One sweep row as a JSON line; the key set is the same for error rows.
#[derive(Serialize)]
struct RowJson {
    nu: f64,
    p: f64,
    a: f64,
    x: f64,
    mu: Option<f64>,
    kind: String,
    method: String,
    value: Option<f64>,
    error_estimate: Option<f64>,
    terms_used: Option<usize>,
    convergence_class: Option<String>,
    detail: Option<String>,
}

fn params_cells(p: &SumParams) -> [String; 4] {
    [num(p.nu), num(p.p), num(p.a), num(p.x)]
}

pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let p = &row.params;
        let [nu, pp, a, x] = params_cells(p);
        let mu = p.mu.map(num).unwrap_or_default();
        let kind = p.kind.to_string();
        match &row.outcome {
            Ok(r) => w.write_record([
                nu,
                pp,
                a,
                x,
                mu,
                kind,
                r.method.to_string(),
                num(r.value),
                num(r.error_estimate),
                r.terms_used.to_string(),
                r.convergence.to_string(),
            ])?,
            Err(e) => w.write_record([
                nu,
                pp,
                a,
                x,
                mu,
                kind,
                "error".to_string(),
                String::new(),
                String::new(),
                String::new(),
                format!("{}: {}", e.kind(), e),
            ])?,
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_json_lines<W: Write>(mut out: W, rows: &[SweepRow]) -> io::Result<()> {
    for row in rows {
        let p = &row.params;
        let base = RowJson {
            nu: p.nu,
            p: p.p,
            a: p.a,
            x: p.x,
            mu: p.mu,
            kind: p.kind.to_string(),
            method: String::new(),
            value: None,
            error_estimate: None,
            terms_used: None,
            convergence_class: None,
            detail: None,
        };
        let line = match &row.outcome {
            Ok(r) => RowJson {
                method: r.method.to_string(),
                value: Some(r.value),
                error_estimate: Some(r.error_estimate),
                terms_used: Some(r.terms_used),
                convergence_class: Some(r.convergence.to_string()),
                ..base
            },
            Err(e) => RowJson { method: "error".into(), detail: Some(format!("{}: {}", e.kind(), e)), ..base },
        };
        writeln!(out, "{}", to_json(&line))?;
    }
    Ok(())
}
