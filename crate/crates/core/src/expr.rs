//! Element expressions: `X[e1-e2](t) * W[e3-e4](1)`, `psi(...)`, `chi(...)`, `theta+(...)`.
//!
//! Capital `X`, `W`, `H` build spin elements; lowercase `x`, `w`, `h` build matrices. Letters
//! `v1..vn`, `w1..wn` are Clifford generators (`wi` is `vi*`).

use serde::Serialize;
use serde_json::json;

use crate::chevalley::{identify_oplus_gen, oplus_gen, oplus_h, oplus_w, spin_gen, spin_h, spin_w, Root};
use crate::clifford::{v, vstar, CliffordElement};
use crate::error::{Error, Result};
use crate::exterior::psi_apply;
use crate::matrix::Matrix;
use crate::quadtriple::chi;
use crate::scalar::Scalar;
use crate::triality::{theta_minus_via_psi, theta_plus_via_psi, theta_via_phi};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Spin(CliffordElement<Scalar>),
    Matrix(Matrix<Scalar>),
    Pair(Matrix<Scalar>, Matrix<Scalar>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    rank: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{c}` at offset {}", self.pos)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(Error::Parse(format!("expected a name at offset {}", self.pos)));
        }
        let mut name = self.rest()[..len].to_string();
        self.pos += len;
        // `theta+` and `theta-` carry their sign in the name.
        let r = self.rest();
        if name == "theta" && (r.starts_with("+(") || r.starts_with("-(")) {
            name.push_str(&r[..1]);
            self.pos += 1;
        }
        Ok(name)
    }

    /// Text up to the matching closing delimiter.
    fn delimited(&mut self, open: char, close: char) -> Result<&'a str> {
        self.expect(open)?;
        let start = self.pos;
        let mut depth = 1;
        for (i, c) in self.rest().char_indices() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    let body = &self.src[start..start + i];
                    self.pos = start + i + 1;
                    return Ok(body);
                }
            }
        }
        Err(Error::Parse(format!("unbalanced `{open}`")))
    }

    fn factor(&mut self) -> Result<Value> {
        if self.eat('(') {
            let v = self.expr_product()?;
            self.expect(')')?;
            return Ok(v);
        }
        let name = self.ident()?;
        self.skip_ws();
        if self.rest().starts_with('[') {
            let root: Root = self.delimited('[', ']')?.trim().parse()?;
            let p: Scalar = self.delimited('(', ')')?.parse()?;
            return self.generator(&name, &root, &p);
        }
        if self.rest().starts_with('(') {
            return Err(Error::Parse(format!("unknown function `{name}`")));
        }
        self.letter(&name)
    }

    fn generator(&self, name: &str, root: &Root, p: &Scalar) -> Result<Value> {
        let n = self.rank;
        Ok(match name {
            "X" => Value::Spin(spin_gen(root, p, n)?),
            "W" => Value::Spin(spin_w(root, p, n)?),
            "H" => Value::Spin(spin_h(root, p, n)?),
            "x" => Value::Matrix(oplus_gen(root, p, n)?),
            "w" => Value::Matrix(oplus_w(root, p, n)?),
            "h" => Value::Matrix(oplus_h(root, p, n)?),
            other => return Err(Error::Parse(format!("unknown generator `{other}`"))),
        })
    }

    fn letter(&self, name: &str) -> Result<Value> {
        let n = self.rank;
        let (head, tail) = name.split_at(1);
        let i: usize = tail.parse().map_err(|_| Error::Parse(format!("unknown name `{name}`")))?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("letter `{name}` out of range for rank {n}")));
        }
        let k = match head {
            "v" => v(n, i),
            "w" => vstar(n, i),
            _ => return Err(Error::Parse(format!("unknown name `{name}`"))),
        };
        Ok(Value::Spin(CliffordElement::letter(n, k)))
    }
}

fn multiply(a: Value, b: Value) -> Result<Value> {
    match (a, b) {
        (Value::Spin(x), Value::Spin(y)) => {
            if x.rank() != y.rank() {
                return Err(Error::RankMismatch { expected: x.rank(), found: y.rank() });
            }
            Ok(Value::Spin(x.mul(&y)))
        }
        (Value::Matrix(x), Value::Matrix(y)) => Ok(Value::Matrix(x.mul(&y))),
        (Value::Pair(a1, b1), Value::Pair(a2, b2)) => Ok(Value::Pair(a1.mul(&a2), b1.mul(&b2))),
        _ => Err(Error::Domain("cannot multiply values of different kinds".into())),
    }
}

fn domain(what: &str, e: Error) -> Error {
    match e {
        Error::Parse(_) | Error::UnknownRoot(_) | Error::Internal(_) => e,
        other => Error::Domain(format!("{what}: {other}")),
    }
}

fn apply_function(name: &str, arg: Value) -> Result<Value> {
    let as_matrix = |arg: Value| -> Result<Matrix<Scalar>> {
        match arg {
            Value::Matrix(m) => Ok(m),
            Value::Spin(a) => chi(&a).map_err(|e| domain("chi", e)),
            Value::Pair(..) => Err(Error::Domain(format!("{name} expects a group element"))),
        }
    };
    match name {
        "chi" => match arg {
            Value::Spin(a) => Ok(Value::Matrix(chi(&a).map_err(|e| domain("chi", e))?)),
            _ => Err(Error::Domain("chi expects a Clifford element".into())),
        },
        "psi" => match arg {
            Value::Spin(a) => {
                let (p, q) = psi_apply(&a).map_err(|e| domain("psi", e))?;
                Ok(Value::Pair(p, q))
            }
            _ => Err(Error::Domain("psi expects an even Clifford element".into())),
        },
        "theta+" => Ok(Value::Matrix(theta_plus_via_psi(&as_matrix(arg)?).map_err(|e| domain("theta+", e))?)),
        "theta-" => Ok(Value::Matrix(theta_minus_via_psi(&as_matrix(arg)?).map_err(|e| domain("theta-", e))?)),
        "theta" => Ok(Value::Matrix(theta_via_phi(&as_matrix(arg)?))),
        other => Err(Error::Parse(format!("unknown function `{other}`"))),
    }
}

impl<'a> Parser<'a> {
    fn call_or_factor(&mut self) -> Result<Value> {
        self.skip_ws();
        let save = self.pos;
        if let Ok(name) = self.ident() {
            if matches!(name.as_str(), "chi" | "psi" | "theta+" | "theta-" | "theta") {
                self.expect('(')?;
                let arg = self.expr_product()?;
                self.expect(')')?;
                return apply_function(&name, arg);
            }
        }
        self.pos = save;
        self.factor()
    }

    fn expr_product(&mut self) -> Result<Value> {
        let mut acc = self.call_or_factor()?;
        while self.eat('*') {
            let rhs = self.call_or_factor()?;
            acc = multiply(acc, rhs)?;
        }
        Ok(acc)
    }
}

/// Parses and evaluates an expression at the given rank.
pub fn evaluate(src: &str, rank: usize) -> Result<Value> {
    let mut p = Parser { src, pos: 0, rank };
    let v = p.expr_product()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(Error::Parse(format!("unexpected trailing input `{}`", p.rest())));
    }
    Ok(v)
}

/// Names a matrix as `I`, `±x[α](p)` or `diag(...)` when it has one of these shapes.
pub fn recognize_matrix(m: &Matrix<Scalar>) -> Option<String> {
    if m.is_identity() {
        return Some("I".into());
    }
    if m.neg().is_identity() {
        return Some("-I".into());
    }
    if let Some((r, p)) = identify_oplus_gen(m) {
        return Some(format!("x[{r}]({p})"));
    }
    if let Some((r, p)) = identify_oplus_gen(&m.neg()) {
        return Some(format!("-x[{r}]({p})"));
    }
    let d = m.rows();
    let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || m.get(i, j).is_zero()));
    diagonal.then(|| format!("diag({})", (0..d).map(|i| m.get(i, i).to_string()).collect::<Vec<_>>().join(", ")))
}

fn render_matrix(m: &Matrix<Scalar>) -> String {
    recognize_matrix(m).unwrap_or_else(|| m.to_string())
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Spin(_) => "clifford",
            Value::Matrix(_) => "matrix",
            Value::Pair(..) => "pair",
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Spin(a) => a.to_string(),
            Value::Matrix(m) => render_matrix(m),
            Value::Pair(a, b) => format!("({}, {})", render_matrix(a), render_matrix(b)),
        }
    }
}

#[derive(Serialize)]
struct EvalReport<'a> {
    expr: &'a str,
    kind: &'static str,
    rendering: String,
    value: serde_json::Value,
}

/// JSON rendering: the short form plus the full element or matrices.
pub fn to_json(expr: &str, v: &Value) -> String {
    let value = match v {
        Value::Spin(a) => serde_json::to_value(a),
        Value::Matrix(m) => serde_json::to_value(m),
        Value::Pair(a, b) => Ok(json!({ "first": a, "second": b })),
    }
    .expect("values serialise");
    serde_json::to_string_pretty(&EvalReport { expr, kind: v.kind(), rendering: v.render(), value })
        .expect("report serialises")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Result<String> {
        evaluate(s, 4).map(|v| v.render())
    }

    #[test]
    fn psi_of_generator() {
        assert_eq!(eval("psi(X[e1-e2](t))").unwrap(), "(x[e3+e4](-t), x[-e1-e2](t))");
    }

    #[test]
    fn additivity_example() {
        let v = evaluate("X[e1-e2](t) * X[e1-e2](s)", 4).unwrap();
        let expected = evaluate("X[e1-e2](s + t)", 4).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn chi_of_letter_is_a_domain_error() {
        assert!(matches!(evaluate("chi(v1)", 4), Err(Error::Domain(_))));
        assert_eq!(eval("chi(X[e1-e2](t))").unwrap(), "x[e1-e2](t)");
    }

    #[test]
    fn theta_plus_of_generator() {
        assert_eq!(eval("theta+(x[e3+e4](2))").unwrap(), "x[-e1-e2](-2)");
        assert_eq!(eval("theta+(X[e2-e3](t))").unwrap(), "x[e2-e3](t)");
    }

    #[test]
    fn parse_errors_exit_two() {
        for bad in ["X[e1-e2](t", "X[e1-e9](t)", "foo(v1)", "v1 v2", "q1", "X[e1-e2](t) *", "", "theta+(x[e1-e2](1)"] {
            let e = evaluate(bad, 4).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}: {e}");
        }
    }

    #[test]
    fn torus_and_weyl() {
        assert_eq!(eval("h[e1-e2](t)").unwrap(), "diag(t, t^-1, 1, 1, 1, 1, t, t^-1)");
        assert_eq!(eval("chi(H[e3-e4](-1) * H[e3+e4](-1))").unwrap(), "I");
        assert!(eval("W[e3-e4](1) * W[e3-e4](1)").is_ok());
    }
}
