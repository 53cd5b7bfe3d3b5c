//! The improper isometry phi, the outer automorphism theta it induces, and the factor switch.

use triality::chevalley::spin_gen;
use triality::exterior::psi_apply;
use triality::quadtriple::{induced_clifford_auto, is_proper};
use triality::triality::{improper_phi, theta_table, theta_via_phi};
use triality::Rational;

fn main() -> triality::Result<()> {
    let phi = improper_phi::<Rational>();
    println!("phi proper: {}", is_proper(&phi)?);

    let theta = theta_table()?;
    for r in ["e1-e2", "e2-e3", "e3-e4", "e3+e4"] {
        let (b, s) = theta.get(&r.parse()?);
        println!("theta(x[{r}](t)) = x[{b}]({}t)", if s > 0 { "" } else { "-" });
    }

    let x = spin_gen(&"e1-e3".parse()?, &Rational::one(), 4)?;
    let (l1, l2) = psi_apply(&induced_clifford_auto(&phi, &x)?)?;
    let (a, b) = psi_apply(&x)?;
    println!("Psi(C(phi) x) = (theta(b), theta(a)): {}", l1 == theta_via_phi(&b) && l2 == theta_via_phi(&a));
    Ok(())
}
