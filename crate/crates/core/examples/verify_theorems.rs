//! Every closed-form `hc` value checked against the exact engine on its
//! default parameter range.
//!
//! Run with `cargo run --release --example verify_theorems`.

use matroid_hc::theorems::{default_instances, verify_instance, TheoremId, VerifyOptions};

fn main() -> matroid_hc::Result<()> {
    let opts = VerifyOptions { samples: 20, ..VerifyOptions::default() };
    for id in TheoremId::ALL {
        let mut matched = 0;
        let mut rows = Vec::new();
        for (inst, p) in default_instances(id)? {
            let rep = verify_instance(id, &inst, p, &opts)?;
            matched += usize::from(rep.matched == Some(true));
            rows.push(rep);
        }
        println!("{:<20} {}/{} match  {}", id.name(), matched, rows.len(), id.statement());
        for rep in rows.iter().filter(|r| r.matched != Some(true)) {
            let oracle = rep.oracle.as_deref().unwrap_or("inconclusive");
            println!("    {} predicted {} oracle {oracle}", rep.params, rep.predicted);
        }
    }
    Ok(())
}
