//! Exact Laurent-polynomial scalars: arithmetic, parsing and evaluation.

use std::collections::HashMap;

use triality::{Rational, Ring, Scalar};

fn main() -> triality::Result<()> {
    let t = Scalar::var("t");
    let tinv = t.try_inverse().expect("t is a unit");

    let p = Scalar::one().plus(&t).times(&Scalar::one().minus(&t));
    println!("(1+t)(1-t) = {p}");
    println!("t * t^-1   = {}", t.times(&tinv));
    println!("t^-1 + t   = {}", tinv.plus(&t));

    let q: Scalar = "2/3*t*s^-2 - 5".parse()?;
    println!("parsed     = {q}");

    let mut vals = HashMap::new();
    vals.insert("t".to_string(), Rational::new(1, 2));
    vals.insert("s".to_string(), Rational::from(3));
    println!("q(t=1/2, s=3) = {}", q.eval(&vals)?);

    match tinv.eval(&HashMap::from([("t".to_string(), Rational::zero())])) {
        Err(e) => println!("t^-1 at t=0: {e}"),
        Ok(v) => println!("unexpected value {v}"),
    }
    Ok(())
}
