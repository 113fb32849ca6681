//! Output serialization: JSON lines, CSV, and human tables.
//!
//! Exact integers are rendered as decimal strings in the machine formats;
//! several table values exceed double precision, so they are never emitted
//! as native JSON numbers. Rationals render as "p/q" in lowest terms.

use crate::scan::ScanRecord;
use serde_json::{json, Value};
use splitcubic_core::cubic::GaloisClass;
use splitcubic_core::resolvent::IsomReport;
use splitcubic_core::thue::{Excluded, OverlapRecord, PrimitiveSolution};
use splitcubic_core::{Int, Rat};
use std::io::{self, Write};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "json" | "json_lines" | "jsonl" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (pretty|json|csv)")),
        }
    }
}

pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((p, q)) => Some(Rat::new(Int::from_str(p).ok()?, Int::from_str(q).ok()?)),
        None => Some(Rat::from_integer(Int::from_str(s).ok()?)),
    }
}

/// A uniformly renderable row.
pub trait Record {
    fn json(&self) -> Value;
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
    fn pretty_header() -> Option<&'static str> {
        None
    }
    fn pretty_row(&self) -> String;
}

pub fn write_records<R: Record>(out: &mut dyn Write, format: Format, rows: &[R]) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", r.json())?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", R::csv_header())?;
            for r in rows {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Pretty => {
            if let Some(h) = R::pretty_header() {
                writeln!(out, "{h}")?;
            }
            for r in rows {
                writeln!(out, "{}", r.pretty_row())?;
            }
        }
    }
    Ok(())
}

fn excluded_str(e: Option<Excluded>) -> &'static str {
    match e {
        None => "",
        Some(Excluded::NZero) => "n_zero",
        Some(Excluded::NCritical) => "n_critical",
    }
}

impl Record for OverlapRecord {
    fn json(&self) -> Value {
        json!({
            "m": self.m.to_string(),
            "lambda": self.solution.lambda.to_string(),
            "x": self.solution.x.to_string(),
            "y": self.solution.y.to_string(),
            "n": rat_str(&self.n),
            "n_integral": self.n_integral,
            "excluded": match self.excluded {
                None => Value::Null,
                Some(e) => Value::String(e.to_string()),
            },
        })
    }

    fn csv_header() -> &'static str {
        "m,lambda,x,y,n,n_integral,excluded"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.m,
            self.solution.lambda,
            self.solution.x,
            self.solution.y,
            rat_str(&self.n),
            self.n_integral,
            excluded_str(self.excluded)
        )
    }

    fn pretty_header() -> Option<&'static str> {
        Some("       m |          lambda | (x, y)            | n")
    }

    fn pretty_row(&self) -> String {
        let n = if self.excluded.is_some() {
            format!("[ {} ]", rat_str(&self.n))
        } else {
            rat_str(&self.n)
        };
        format!(
            "{:>8} | {:>15} | {:<17} | {}",
            self.m.to_string(),
            self.solution.lambda.to_string(),
            format!("({}, {})", self.solution.x, self.solution.y),
            n
        )
    }
}

impl Record for ScanRecord {
    fn json(&self) -> Value {
        json!({
            "m": self.m.to_string(),
            "n": self.n.to_string(),
            "x": self.x.to_string(),
            "y": self.y.to_string(),
            "lambda": self.lambda.to_string(),
            "x2": self.x2.to_string(),
            "y2": self.y2.to_string(),
            "lambda2": self.lambda2.to_string(),
        })
    }

    fn csv_header() -> &'static str {
        "m,n,x,y,lambda,x2,y2,lambda2"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.m, self.n, self.x, self.y, self.lambda, self.x2, self.y2, self.lambda2
        )
    }

    fn pretty_header() -> Option<&'static str> {
        Some("       m |          n | (x, y)       |          lambda | (x2, y2)     | lambda2")
    }

    fn pretty_row(&self) -> String {
        format!(
            "{:>8} | {:>10} | {:<12} | {:>15} | {:<12} | {}",
            self.m.to_string(),
            self.n.to_string(),
            format!("({}, {})", self.x, self.y),
            self.lambda.to_string(),
            format!("({}, {})", self.x2, self.y2),
            self.lambda2
        )
    }
}

/// classify output row.
pub struct ClassifyReport {
    pub m: Int,
    pub class: GaloisClass,
    pub disc_f: Int,
    pub disc_big_form: Int,
    pub totally_real: bool,
}

impl Record for ClassifyReport {
    fn json(&self) -> Value {
        json!({
            "m": self.m.to_string(),
            "group": self.class.tag.to_string(),
            "mu": self.class.mu(),
            "c3_witness": self.class.c3_witness.as_ref().map(|b| b.to_string()),
            "disc_f": self.disc_f.to_string(),
            "disc_form": self.disc_big_form.to_string(),
            "totally_real": self.totally_real,
        })
    }

    fn csv_header() -> &'static str {
        "m,group,mu,c3_witness,disc_f,disc_form,totally_real"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.m,
            self.class.tag,
            self.class.mu(),
            self.class
                .c3_witness
                .as_ref()
                .map(|b| b.to_string())
                .unwrap_or_default(),
            self.disc_f,
            self.disc_big_form,
            self.totally_real
        )
    }

    fn pretty_row(&self) -> String {
        let witness = match &self.class.c3_witness {
            Some(b) => format!(", b = {b}"),
            None => String::new(),
        };
        let quad = if self.class.tag == splitcubic_core::cubic::GaloisTag::C2 {
            ", splitting field Q(sqrt 5)"
        } else {
            ""
        };
        format!(
            "m = {}: group {}{witness}, mu = {}{quad}\n  disc f_m = {}\n  disc F_m(X,1) = {}\n  {}",
            self.m,
            self.class.tag,
            self.class.mu(),
            self.disc_f,
            self.disc_big_form,
            if self.totally_real {
                "totally real"
            } else {
                "totally imaginary"
            }
        )
    }
}

impl Record for IsomReport {
    fn json(&self) -> Value {
        json!({
            "m": self.m.to_string(),
            "n": self.n.to_string(),
            "same_field": self.same_field,
            "roots": self.roots.iter().map(rat_str).collect::<Vec<_>>(),
            "dt": self.dt,
            "group_m": self.group_pair.0.tag.to_string(),
            "group_n": self.group_pair.1.tag.to_string(),
            "joint_group": self.joint_group.to_string(),
            "intersection": self.intersection.to_string(),
        })
    }

    fn csv_header() -> &'static str {
        "m,n,same_field,roots,dt,group_m,group_n,joint_group,intersection"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.same_field,
            self.roots.iter().map(rat_str).collect::<Vec<_>>().join(";"),
            self.dt
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            self.group_pair.0.tag,
            self.group_pair.1.tag,
            self.joint_group,
            self.intersection
        )
    }

    fn pretty_row(&self) -> String {
        let verdict = if self.same_field {
            "same splitting field"
        } else {
            "different splitting fields"
        };
        let roots = if self.roots.is_empty() {
            "none".to_string()
        } else {
            self.roots
                .iter()
                .map(rat_str)
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "(m, n) = ({}, {}): {verdict}\n  resolvent roots: {roots}\n  DT = ({}), joint group {}, intersection {}",
            self.m,
            self.n,
            self.dt.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","),
            self.joint_group,
            self.intersection
        )
    }
}

/// self-pairs output row.
pub struct SelfPairRow {
    pub m: Int,
    pub solution: PrimitiveSolution,
}

impl Record for SelfPairRow {
    fn json(&self) -> Value {
        json!({
            "m": self.m.to_string(),
            "x": self.solution.x.to_string(),
            "y": self.solution.y.to_string(),
            "lambda": self.solution.lambda.to_string(),
        })
    }

    fn csv_header() -> &'static str {
        "m,x,y,lambda"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.m, self.solution.x, self.solution.y, self.solution.lambda
        )
    }

    fn pretty_header() -> Option<&'static str> {
        Some("       m | (x, y)            | lambda")
    }

    fn pretty_row(&self) -> String {
        format!(
            "{:>8} | {:<17} | {}",
            self.m.to_string(),
            format!("({}, {})", self.solution.x, self.solution.y),
            self.solution.lambda
        )
    }
}
