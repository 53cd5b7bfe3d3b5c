//! The hyperbolic Clifford algebra: normal-ordered products, reversal and the even center.

use triality::chevalley::spin_gen;
use triality::clifford::{center_of_even_basis, central_idempotent, v, vstar};
use triality::{CliffordElement, Rational, Scalar};

type C = CliffordElement<Scalar>;

fn main() -> triality::Result<()> {
    let n = 4;
    let v1 = C::letter(n, v(n, 1));
    let w1 = C::letter(n, vstar(n, 1));
    println!("v1 v1        = {}", v1.mul(&v1));
    println!("v1 v1*       = {}", v1.mul(&w1));
    println!("rev(v1 v1*)  = {}", v1.mul(&w1).reverse());

    let x: C = C::parse(n, "1 + t*v1*w2")?;
    println!("x            = {x}");
    println!("x^-1         = {}", x.unitary_inverse()?);
    println!("X[e1-e2](t)  = {}", spin_gen(&"e1-e2".parse()?, &Scalar::var("t"), n)?);

    let center = center_of_even_basis(n);
    println!("dim Z(C0)    = {}", center.len());
    let z = central_idempotent(n)?;
    println!("z            = {z}");
    println!("z^2 == z     : {}", z.mul(&z) == z);

    let odd = CliffordElement::<Rational>::one(n).add(&CliffordElement::letter(n, 0));
    println!("1 + v1 unitary? {:?}", odd.unitary_inverse().err());
    Ok(())
}
