//! Twisted split triples, the rotation and switch functors, and the trialitarian condition.

use triality::chevalley::Root;
use triality::exterior::psi_map;
use triality::triples::{build_triple, sample_words, split_trialg_condition, theta_plus_triple, theta_triple, SplitTriple, TwistData};
use triality::Rational;

fn main() -> triality::Result<()> {
    let split = SplitTriple::split();
    println!("split object fixed by Theta+: {}", theta_plus_triple(&split).alpha == split.alpha);

    let words = sample_words(7, 3);
    let twist = TwistData::from_words(&words[0], &words[1], &words[2]);
    let tr = build_triple(twist)?;
    println!("twisted alpha differs from Psi: {}", tr.alpha != *psi_map());

    let once = theta_plus_triple(&tr);
    let thrice = theta_plus_triple(&theta_plus_triple(&once));
    println!("(Theta+)^3 = id: {}", thrice.alpha == tr.alpha);
    println!("Theta^2 = id: {}", theta_triple(&theta_triple(&tr)).alpha == tr.alpha);

    let twice = theta_plus_triple(&once);
    println!("(alpha, Theta+ alpha, Theta+^2 alpha) trialitarian: {}", split_trialg_condition(&tr, &once, &twice));

    let g: Root = "e1-e2".parse()?;
    let single = build_triple(TwistData::from_words(&[(g, Rational::from(1))], &[], &[]))?;
    println!("twist (x[e1-e2](1), I, I) moves alpha off Psi: {}", single.alpha != *psi_map());
    Ok(())
}
