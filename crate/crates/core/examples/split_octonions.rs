//! Split octonions by doubling, the para-Cayley product, and the Clifford map they induce.

use triality::octonion::{alpha0_apply, minimal_sign_fix, table_matches, GoodBasis, Octonion};
use triality::tables::{build_table, TableFormat, TableKind};
use triality::{CliffordElement, Rational, Ring};

fn main() -> triality::Result<()> {
    let x = Octonion::symbolic("x");
    let y = Octonion::symbolic("y");
    let lhs = x.para_mul(&y).norm();
    let rhs = x.norm().times(&y.norm());
    println!("n(x*y) = n(x) n(y) symbolically: {}", lhs == rhs);

    print!("{}", build_table(TableKind::OctonionMult)?.render(TableFormat::Markdown));

    let printed = GoodBasis::printed().ordered();
    println!("printed basis hyperbolic: {}, table rows matched: {}/48", printed.is_hyperbolic(), table_matches(&printed));
    for fix in minimal_sign_fix(&printed) {
        println!("minimal sign fix flips entries {:?} and matches {} rows", fix.flipped, fix.table_rows);
    }
    let corrected = GoodBasis::corrected().ordered();
    println!("corrected basis hyperbolic: {}, rows matched: {}/48", corrected.is_hyperbolic(), table_matches(&corrected));

    let e = CliffordElement::<Rational>::word(4, &[0, 6]);
    let (a, b) = alpha0_apply(&e)?;
    println!("alpha0(e1 u2):\n{a}\n{b}");
    Ok(())
}
