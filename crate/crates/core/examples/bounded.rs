//! The bounded polynomial P_0(z; M) against partitions with bounded parts.
//!
//! cargo run --example bounded

use cmpp::qseries::bounded_p0_series;
use cmpp::verify::{verify, BoundSemantics, VerifyFamily, VerifyRequest};

fn main() -> cmpp::Result<()> {
    println!("P_0(z; 5), l = 1:");
    for e in bounded_p0_series(1, 5, 20, 3)?.entries() {
        println!("  z^{} q^{}: {}", e.z, e.q, e.c);
    }
    for ell in 1..=2 {
        for m in 0..=8 {
            let line: Vec<String> = [BoundSemantics::AtMost, BoundSemantics::BelowBound]
                .into_iter()
                .map(|s| {
                    let r = verify(&VerifyRequest::new(VerifyFamily::BoundedP0, ell, 0, 40).with_bound(m, s))?;
                    Ok(format!("{s:?}: {}", if r.pass { "match" } else { "differs" }))
                })
                .collect::<cmpp::Result<_>>()?;
            println!("l={ell} M={m}: {}", line.join(", "));
        }
    }
    Ok(())
}
