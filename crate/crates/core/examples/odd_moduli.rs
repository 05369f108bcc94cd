// Moduli of pairs along the flip chain and the class of stable rank-two
// bundles of odd degree, computed by the chain and by the closed form.

use motive_forge::moduli::{n0_odd_chain, n0_odd_closed, odd_degree, omega};
use motive_forge::{pair_moduli, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let g = 2;
    let d = odd_degree(g);
    for i in 0..=omega(d) {
        out.push_str(&format!("M_{i}({d}) = {}\n", pair_moduli(g, d, i)?));
    }
    for g in 2..=4 {
        let chain = n0_odd_chain(g, odd_degree(g))?;
        let closed = n0_odd_closed(g)?;
        out.push_str(&format!("g={g}: N0 = {chain}\n      routes agree: {}\n", chain == closed));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
