// Betti and Hodge realizations of the moduli class, the Hodge diamond, and
// the level of each weight.

use motive_forge::realizations::hodge_diamond;
use motive_forge::{betti, hn_closed, hodge, level_per_weight, n0_odd, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for g in 2..=3 {
        let x = n0_odd(g)?;
        let p = betti(&x);
        out.push_str(&format!("g={g} Poincaré {}  (closed form agrees: {})\n", p.render("t", ""), p == hn_closed(g)?));
        out.push_str(&format!("     Hodge {}\n", hodge(&x)));
        out.push_str(&format!("     levels {:?}\n", level_per_weight(&x)));
    }
    let x = n0_odd(2)?;
    for h in hodge_diamond(&x) {
        out.push_str(&format!("h^{{{},{}}} = {}\n", h.p, h.q, h.h));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
