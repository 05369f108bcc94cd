// Symmetric powers of a curve: the motivic class, the graded-rank generating
// function, and the enumeration oracle, which must all agree.

use motive_forge::realizations::betti;
use motive_forge::{sym_power_bruteforce, sym_power_curve, sym_power_ranks, GradedRanks, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let g = 2;
    let b = GradedRanks::curve(g);
    for n in 0..=4 {
        let class = sym_power_curve(g, n)?;
        let ranks = sym_power_ranks(&b, n).to_laurent();
        let brute = sym_power_bruteforce(&b, n)?.to_laurent();
        out.push_str(&format!("C^({n}) = {class}\n"));
        out.push_str(&format!("   ranks {}  agree: {}\n", ranks.render("t", ""), betti(&class) == ranks && brute == ranks));
    }
    // Any graded space works, e.g. P^1 × P^1.
    let quadric = GradedRanks::new([(0, 1u32), (2, 2), (4, 1)]);
    out.push_str(&format!("S^2(P1×P1): {}\n", sym_power_ranks(&quadric, 2).to_laurent().render("t", "")));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
