//! Characteristic polynomials, critical exponents, and how they behave under
//! the 2-sum of a matroid with itself.
//!
//! Run with `cargo run --release --example charpoly_two_sum`.

use matroid_hc::catalog::build;
use matroid_hc::charpoly::{characteristic_polynomial, critical_exponent, critical_exponent_two_sum_lemma};

fn main() -> matroid_hc::Result<()> {
    for (spec, q) in [("pg:3,2", 2), ("graph:K4", 2), ("graph:K5", 2), ("pg:3,3", 3), ("ag:2,3", 3)] {
        let m = build(spec)?.matroid;
        let chi = characteristic_polynomial(&m)?;
        println!("{spec:<9} chi = {chi}, c over GF({q}) = {}", critical_exponent(&m, q)?);
    }
    println!();
    println!(
        "{:<12} {:>2} {:>5} {:>5} {:>5} {:>7}  c(M+M)=c(M\\z)  =max(c(M),c(M/z))",
        "M", "q", "c(M)", "c(M/z)", "c(M\\z)", "c(M+M)"
    );
    // U(2,4) is not binary: the equality with c(M\z) needs M representable over GF(q)
    for (spec, q) in
        [("uniform:2,3", 2), ("graph:K4", 2), ("pg:3,2", 2), ("uniform:2,4", 3), ("uniform:2,4", 2)]
    {
        let m = build(spec)?.matroid;
        let rep = critical_exponent_two_sum_lemma(&m, 0, q)?;
        assert!(rep.identity_holds);
        println!(
            "{spec:<12} {q:>2} {:>5} {:>6} {:>6} {:>7}  {:<14} {}",
            rep.c_matroid.to_string(),
            rep.c_contraction.to_string(),
            rep.c_deletion.to_string(),
            rep.c_two_sum.to_string(),
            rep.lemma_holds,
            rep.max_formula_holds
        );
    }
    Ok(())
}
