//! Rendered tables: generator images under `Ψ` and `θ⁺`, the generators themselves, the
//! good-basis octonion products and the commutator structure constants.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::chevalley::{identify_oplus_gen, nilpotent, roots, spin_gen, structure_constant, Group, Root};
use crate::error::{Error, Result};
use crate::octonion::{multiplication_table, GoodBasis};
use crate::quadtriple::chi;
use crate::ring::Ring;
use crate::scalar::{Rational, Scalar};
use crate::triality::{psi_table, theta_plus_table};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Psi,
    ThetaPlus,
    Generators,
    OctonionMult,
    StructureConstants,
}

impl TableKind {
    pub const ALL: [TableKind; 5] = [
        TableKind::Psi,
        TableKind::ThetaPlus,
        TableKind::Generators,
        TableKind::OctonionMult,
        TableKind::StructureConstants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Psi => "psi",
            TableKind::ThetaPlus => "theta_plus",
            TableKind::Generators => "generators",
            TableKind::OctonionMult => "octonion_mult",
            TableKind::StructureConstants => "structure_constants",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown table `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Markdown,
    Latex,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(TableFormat::Json),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "latex" | "tex" => Ok(TableFormat::Latex),
            other => Err(Error::Parse(format!("unknown table format `{other}`"))),
        }
    }
}

/// JSON row. `sign` holds one entry per output: the sign in front of the parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub input: String,
    pub output_first: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_second: Option<String>,
    pub sign: Vec<i8>,
}

/// A table in both its data form (`rows`) and its display form (`columns`, `cells`).
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub kind: TableKind,
    pub rows: Vec<TableRow>,
    pub columns: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

fn param(s: i8, p: &str) -> String {
    if s > 0 {
        p.to_string()
    } else {
        format!("-{p}")
    }
}

fn gen(prefix: char, r: &Root, s: i8, p: &str) -> String {
    format!("{prefix}[{r}]({})", param(s, p))
}

fn sign_char(s: i8) -> String {
    if s > 0 { "+" } else { "-" }.to_string()
}

fn psi() -> Result<Table> {
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for r in psi_table()? {
        let input = gen('X', &r.input, 1, "t");
        let first = gen('x', &r.output_first, r.sign_first, "t");
        let second = gen('x', &r.output_second, r.sign_second, "t");
        cells.push(vec![input.clone(), "first".into(), first.clone(), sign_char(r.sign_first)]);
        cells.push(vec![input.clone(), "second".into(), second.clone(), sign_char(r.sign_second)]);
        rows.push(TableRow {
            input,
            output_first: first,
            output_second: Some(second),
            sign: vec![r.sign_first, r.sign_second],
        });
    }
    Ok(Table {
        kind: TableKind::Psi,
        rows,
        columns: ["input", "factor", "image", "sign"].map(String::from).to_vec(),
        cells,
    })
}

fn theta_plus() -> Table {
    let map = theta_plus_table();
    let rows: Vec<TableRow> = roots(4)
        .iter()
        .map(|a| {
            let (b, s) = map.get(a);
            TableRow { input: gen('x', a, 1, "t"), output_first: gen('x', &b, s, "t"), output_second: None, sign: vec![s] }
        })
        .collect();
    let cells = rows.iter().map(|r| vec![r.input.clone(), r.output_first.clone(), sign_char(r.sign[0])]).collect();
    Table { kind: TableKind::ThetaPlus, rows, columns: ["input", "theta+", "sign"].map(String::from).to_vec(), cells }
}

/// `I + t(E_ij − E_kl)` for the unipotent `x_α(t)`.
fn matrix_expression(alpha: &Root) -> Result<String> {
    let n = nilpotent::<Rational>(alpha, 4)?;
    let mut terms = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let c = n.get(i, j);
            if !c.is_zero() {
                let e = format!("E{}{}", i + 1, j + 1);
                terms.push(if c.is_negative() { format!("- {e}") } else { format!("+ {e}") });
            }
        }
    }
    let body = terms.join(" ");
    let body = body.strip_prefix("+ ").map(String::from).unwrap_or_else(|| format!("-{}", &body[2..]));
    Ok(format!("I + t({body})"))
}

fn generators() -> Result<Table> {
    let t = Scalar::var("t");
    let mut rows = Vec::new();
    for r in roots(4) {
        let x = spin_gen(&r, &t, 4)?;
        let (image, p) = identify_oplus_gen(&chi(&x)?)
            .ok_or_else(|| Error::Internal(format!("chi(X[{r}](t)) is not a root element")))?;
        let s = if p == t {
            1
        } else if p == t.negate() {
            -1
        } else {
            return Err(Error::Internal(format!("chi(X[{r}](t)) has parameter {p}")));
        };
        if image != r {
            return Err(Error::Internal(format!("chi(X[{r}](t)) lands in root {image}")));
        }
        rows.push(TableRow {
            input: gen('X', &r, 1, "t"),
            output_first: x.to_string(),
            output_second: Some(matrix_expression(&r)?),
            sign: vec![1, s],
        });
    }
    let cells = rows
        .iter()
        .map(|r| vec![r.input.clone(), r.output_first.clone(), r.output_second.clone().unwrap_or_default()])
        .collect();
    Ok(Table {
        kind: TableKind::Generators,
        rows,
        columns: ["root element", "spin", "vector representation"].map(String::from).to_vec(),
        cells,
    })
}

fn octonion_mult() -> Table {
    let names: Vec<&str> = GoodBasis::printed().elements().iter().map(|(n, _)| *n).collect();
    let products = multiplication_table();
    let mut rows = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            let p = &products[i][j];
            let sign = match p.as_str() {
                "0" => vec![],
                s if s.starts_with('-') => vec![-1],
                _ => vec![1],
            };
            rows.push(TableRow { input: format!("{a}*{b}"), output_first: p.clone(), output_second: None, sign });
        }
    }
    let mut columns = vec!["*".to_string()];
    columns.extend(names.iter().map(|n| n.to_string()));
    let cells = names
        .iter()
        .zip(&products)
        .map(|(n, row)| std::iter::once(n.to_string()).chain(row.iter().cloned()).collect())
        .collect();
    Table { kind: TableKind::OctonionMult, rows, columns, cells }
}

fn structure_constants() -> Result<Table> {
    let mut rows = Vec::new();
    for a in roots(4) {
        for b in roots(4) {
            if let (Some(sum), Some(n)) = (a.add(&b, 4), structure_constant(&a, &b, 4, Group::Oplus)?) {
                let s = if n > 0 { 1 } else { -1 };
                rows.push(TableRow {
                    input: format!("[x[{a}](s), x[{b}](t)]"),
                    output_first: gen('x', &sum, s, "st"),
                    output_second: None,
                    sign: vec![s],
                });
            }
        }
    }
    let cells = rows.iter().map(|r| vec![r.input.clone(), r.output_first.clone(), sign_char(r.sign[0])]).collect();
    Ok(Table {
        kind: TableKind::StructureConstants,
        rows,
        columns: ["commutator", "value", "N"].map(String::from).to_vec(),
        cells,
    })
}

pub fn build_table(kind: TableKind) -> Result<Table> {
    match kind {
        TableKind::Psi => psi(),
        TableKind::ThetaPlus => Ok(theta_plus()),
        TableKind::Generators => generators(),
        TableKind::OctonionMult => Ok(octonion_mult()),
        TableKind::StructureConstants => structure_constants(),
    }
}

impl Table {
    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Json => serde_json::to_string_pretty(&self.rows).expect("rows serialise") + "\n",
            TableFormat::Markdown => self.to_markdown(),
            TableFormat::Latex => self.to_latex(),
        }
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", self.columns.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.columns.len()));
        for row in &self.cells {
            let _ = writeln!(out, "| {} |", row.iter().map(|c| format!("`{c}`")).collect::<Vec<_>>().join(" | "));
        }
        out
    }

    fn to_latex(&self) -> String {
        let esc = |s: &str| s.replace('_', "\\_").replace('*', "\\ast ");
        let mut out = String::new();
        let _ = writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(self.columns.len()));
        let _ = writeln!(out, "{} \\\\", self.columns.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" & "));
        let _ = writeln!(out, "\\hline");
        for row in &self.cells {
            let line: Vec<String> = row.iter().map(|c| format!("\\texttt{{{}}}", esc(c))).collect();
            let _ = writeln!(out, "{} \\\\", line.join(" & "));
        }
        let _ = writeln!(out, "\\end{{tabular}}");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(build_table(TableKind::Psi).unwrap().cells.len(), 48);
        assert_eq!(build_table(TableKind::Psi).unwrap().rows.len(), 24);
        assert_eq!(build_table(TableKind::ThetaPlus).unwrap().rows.len(), 24);
        assert_eq!(build_table(TableKind::Generators).unwrap().rows.len(), 24);
        assert_eq!(build_table(TableKind::OctonionMult).unwrap().cells.len(), 8);
    }

    #[test]
    fn psi_first_row_layout() {
        let t = build_table(TableKind::Psi).unwrap();
        let row = t.rows.iter().find(|r| r.input == "X[e1-e2](t)").unwrap();
        assert_eq!(row.output_first, "x[e3+e4](-t)");
        assert_eq!(row.output_second.as_deref(), Some("x[-e1-e2](t)"));
        assert_eq!(row.sign, vec![-1, 1]);
    }

    #[test]
    fn generator_matrix_expression() {
        assert_eq!(matrix_expression(&"e1-e2".parse().unwrap()).unwrap(), "I + t(E12 - E78)");
        assert_eq!(matrix_expression(&"e1+e2".parse().unwrap()).unwrap(), "I + t(E17 - E28)");
    }

    #[test]
    fn rendering_is_deterministic() {
        for kind in TableKind::ALL {
            let t = build_table(kind).unwrap();
            for f in [TableFormat::Json, TableFormat::Markdown, TableFormat::Latex] {
                assert_eq!(t.render(f), build_table(kind).unwrap().render(f));
            }
        }
        assert!("nosuch".parse::<TableKind>().is_err());
    }

    #[test]
    fn structure_constants_are_units() {
        let t = build_table(TableKind::StructureConstants).unwrap();
        assert!(!t.rows.is_empty());
        assert!(t.rows.iter().all(|r| r.sign.len() == 1));
    }
}
