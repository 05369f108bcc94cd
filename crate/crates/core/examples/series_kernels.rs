// Truncated power series with motive coefficients and the three-exponent
// coefficient function in both evaluation modes.

use motive_forge::{big_f, binomial_series, geometric, FMode, Result};

pub fn run_example() -> Result<String> {
    let g = 1;
    let mut out = String::new();
    let kernel = binomial_series(g, 4)?.series_mul(&geometric(0, g, 4))?.series_mul(&geometric(1, g, 4))?;
    for (n, c) in kernel.coeffs().iter().enumerate() {
        out.push_str(&format!("T^{n}: {c}\n"));
    }
    for exps in [(0, 1, 2), (0, -1, 2), (-2, 1, 2)] {
        let s = big_f(exps.0, exps.1, exps.2, g, FMode::Series)?;
        let c = big_f(exps.0, exps.1, exps.2, g, FMode::Closed)?;
        out.push_str(&format!("F{exps:?} = {s} (modes agree: {})\n", s == c));
    }
    if let Err(e) = big_f(0, 0, 1, g, FMode::Closed) {
        out.push_str(&format!("F(0, 0, 1): {e}\n"));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
