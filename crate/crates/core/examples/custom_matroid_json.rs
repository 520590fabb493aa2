//! Matroids from the JSON exchange format, in circuit and in linear form, and
//! export of any matroid back to circuit form.
//!
//! Run with `cargo run --release --example custom_matroid_json`.

use matroid_hc::catalog::build;
use matroid_hc::hc::{hc, SearchConfig};
use matroid_hc::hypergraph::{bases_view, circuits_view};
use matroid_hc::matroid::MatroidExchange;

fn main() -> matroid_hc::Result<()> {
    // the seven nonzero 0/1 vectors over GF(3): the Fano plane with one line broken
    let linear = r#"{"kind": "linear", "field": 3,
        "matrix": [[1,0,0,1,1,0,1],[0,1,0,1,0,1,1],[0,0,1,0,1,1,1]]}"#;
    // K4 minus an edge: two triangles sharing edge 2
    let diamond = r#"{"n": 5, "kind": "circuits", "circuits": [[0,1,2],[2,3,4],[0,1,3,4]]}"#;
    for (name, text) in [("non-Fano", linear), ("K4 minus an edge", diamond)] {
        let m = MatroidExchange::parse(text)?;
        let cfg = SearchConfig::default();
        println!(
            "{name}: n={} r={} paving={} circuits={} hc(C)={} hc(B)={}",
            m.n(),
            m.rank(),
            m.is_paving(),
            m.circuits().len(),
            hc(&circuits_view(&m)?, &cfg)?.value,
            hc(&bases_view(&m)?, &cfg)?.value
        );
    }
    let k4 = build("graph:K4")?.matroid;
    println!(
        "M(K4) as JSON: {}",
        serde_json::to_string(&MatroidExchange::from_matroid(&k4)).expect("serializable")
    );
    Ok(())
}
