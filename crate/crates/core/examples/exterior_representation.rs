//! The representation on the exterior algebra and the isomorphism of the even part with
//! two copies of 8x8 matrices.

use triality::chevalley::{oplus_gen, spin_gen};
use triality::exterior::{b_wedge, even_signed_basis, odd_signed_basis, phi_apply, phi_is_bijective, psi_apply, psi_inverse, ExtElement};
use triality::{CliffordElement, Matrix, Rational, Scalar};

fn gram(basis: [(u16, i8); 8]) -> Matrix<Rational> {
    let e = |(s, c): (u16, i8)| ExtElement::basis(4, s, Rational::from(c as i64));
    Matrix::from_fn(8, 8, |i, j| b_wedge(&e(basis[i]), &e(basis[j])))
}

fn main() -> triality::Result<()> {
    let v1 = CliffordElement::<Rational>::letter(4, 0);
    let m = phi_apply(&v1);
    println!("Phi(v1) is {}x{}, squares to zero: {}", m.rows(), m.cols(), m.mul(&m).is_zero());
    println!("Phi bijective at n = 4: {}", phi_is_bijective(4));

    println!("Gram of the even ordered basis:\n{}", gram(even_signed_basis()));
    println!("Gram of the odd ordered basis:\n{}", gram(odd_signed_basis()));

    let t = Scalar::var("t");
    let (a, b) = psi_apply(&spin_gen(&"e1-e2".parse()?, &t, 4)?)?;
    println!("Psi(X[e1-e2](t)) first  == x[e3+e4](-t): {}", a == oplus_gen(&"e3+e4".parse()?, &t.neg_ref(), 4)?);
    println!("Psi(X[e1-e2](t)) second == x[-e1-e2](t): {}", b == oplus_gen(&"-e1-e2".parse()?, &t, 4)?);

    let z = psi_inverse(&Matrix::<Rational>::identity(8), &Matrix::zeros(8, 8));
    println!("Psi^-1(I, 0) = {z}");
    Ok(())
}
