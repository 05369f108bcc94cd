// Arithmetic with classes in the λ-module: canonical forms, duality, Tate
// twists, weights, and the binomial identity that drives everything else.

use motive_forge::{lambda_binomial, LaurentInt, MotiveClass, Result};

pub fn run_example() -> Result<String> {
    let g = 2;
    let mut out = String::new();

    // λ3 is not canonical in genus 2; it folds to λ1·L.
    let x = MotiveClass::canonicalize([(0, LaurentInt::from_dense(0, &[1, 0, 1])), (3, LaurentInt::one())], g)?;
    out.push_str(&format!("x          = {x}\n"));
    out.push_str(&format!("rank(x)    = {}\n", x.rank()));
    out.push_str(&format!("dual(x)    = {}\n", x.dual()));
    out.push_str(&format!("x(1)       = {}\n", x.tate_twist(1)));
    for w in x.weights() {
        out.push_str(&format!("W_{w}(x)     = {}\n", x.weight_part(w).class));
    }

    let p = LaurentInt::from_dense(0, &[1, 1]);
    let y = x.scalar_mul(&p);
    out.push_str(&format!("(1+L)·x    = {}\n", y.to_grouped_string()));
    out.push_str(&format!("back       = {}\n", y.exact_divide(&p)?));

    let jac = lambda_binomial(0, 0, g)?;
    let swapped = lambda_binomial(1, 0, g)?.tate_twist(g as i64);
    out.push_str(&format!("Σλ_a       = {jac}\n"));
    out.push_str(&format!("symmetric  = {}\n", jac == swapped));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
