//! Evaluating element expressions with the same grammar as the command-line `eval`.

use triality::expr::evaluate;

fn main() {
    for src in [
        "psi(X[e1-e2](t))",
        "X[e1-e2](t) * X[e1-e2](s)",
        "chi(W[e3-e4](1))",
        "theta+(x[e3+e4](2))",
        "chi(H[e3-e4](-1) * H[e3+e4](-1))",
        "chi(v1)",
    ] {
        match evaluate(src, 4) {
            Ok(v) => println!("{src:<36} = {}", v.render()),
            Err(e) => println!("{src:<36} ! {e}"),
        }
    }
}
