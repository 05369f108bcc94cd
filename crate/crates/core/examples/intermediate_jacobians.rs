// Isogeny types of the intermediate jacobians of the moduli space, read off
// the odd-weight parts of its class.

use motive_forge::{closed_multiplicities, decompose, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let g = 6;
    for i in 1..=g {
        let d = decompose(g, i)?;
        let parts: Vec<String> = d.factors.iter().map(|(a, m)| format!("(J^{a} Jac C)^{m}")).collect();
        out.push_str(&format!("J^{i} ~ {}", if parts.is_empty() { "0".into() } else { parts.join(" x ") }));
        out.push_str(&format!("   closed form agrees: {}\n", d.factors == closed_multiplicities(i)));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
