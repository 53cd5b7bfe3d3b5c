//! Chevalley generators of Spin8 and O8+, the vector representation, and commutators.

use triality::chevalley::{kernel_chi_enumerate, roots, spin_gen, spin_h, spin_w, structure_constant, Group};
use triality::quadtriple::{chi, is_orthogonal, is_proper};
use triality::tables::{build_table, TableFormat, TableKind};
use triality::{Ring, Scalar};

fn main() -> triality::Result<()> {
    let t = Scalar::var("t");
    for r in roots(4).iter().take(4) {
        let x = spin_gen(r, &t, 4)?;
        let m = chi(&x)?;
        println!("X[{r}](t) = {x}   chi orthogonal: {}, proper: {}", is_orthogonal(&m), is_proper(&m)?);
    }

    let a = "e1-e2".parse()?;
    let b = "e2-e3".parse()?;
    println!("N(e1-e2, e2-e3) = {:?}", structure_constant(&a, &b, 4, Group::Oplus)?);

    let w = spin_w(&a, &t, 4)?;
    println!("W[e1-e2](t)^2 == H[e1-e2](-1): {}", w.mul(&w) == spin_h(&a, &Scalar::one().negate(), 4)?);

    for k in kernel_chi_enumerate()? {
        println!("kernel of chi contains {k}");
    }
    print!("{}", build_table(TableKind::Generators)?.render(TableFormat::Markdown));
    Ok(())
}
