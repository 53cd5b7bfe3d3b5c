//! The images of the spin generators under Psi and the order-three automorphism they define.

use triality::chevalley::oplus_gen;
use triality::quadtriple::pgo_equal;
use triality::tables::{build_table, TableFormat, TableKind};
use triality::triality::{theta_plus_table, theta_plus_via_psi};
use triality::{Rational, Ring};

fn main() -> triality::Result<()> {
    print!("{}", build_table(TableKind::Psi)?.render(TableFormat::Markdown));

    let tp = theta_plus_table();
    let cube = tp.compose(&tp).compose(&tp);
    println!("theta+ has order three on signed roots: {}", cube == triality::triality::SignedRootMap::identity());

    let alpha = "e3+e4".parse()?;
    let got = theta_plus_via_psi(&oplus_gen::<Rational>(&alpha, &Rational::from(2), 4)?)?;
    let (beta, s) = tp.get(&alpha);
    let expected = oplus_gen(&beta, &Rational::from(2).scale_i64(s as i64), 4)?;
    println!("theta+(x[{alpha}](2)) = x[{beta}]({}) via Psi: {}", 2 * s as i64, pgo_equal(&got, &expected));
    Ok(())
}
