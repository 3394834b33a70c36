//! Series against enumeration over a grid of identities, plus a negative control.
//!
//! CMPP_THREADS=4 cargo run --release --example verify_identities

use cmpp::verify::{verify, verify_grid, VerifyFamily, VerifyRequest};

fn main() -> cmpp::Result<()> {
    let mut requests = Vec::new();
    for family in [VerifyFamily::Main, VerifyFamily::Star, VerifyFamily::Starstar] {
        for ell in 1..=3 {
            for i in 0..=ell {
                requests.push(VerifyRequest::new(family, ell, i, 20));
            }
        }
    }
    for (req, report) in verify_grid(&requests)? {
        println!(
            "{:>8} l={} i={}: {} ({} coefficients)",
            req.family,
            req.ell,
            req.index,
            if report.pass { "match" } else { "MISMATCH" },
            report.cells.len()
        );
    }
    let control = verify(&VerifyRequest::new(VerifyFamily::Main, 2, 1, 20).with_offset(1))?;
    println!("perturbed linear form: {} mismatching coefficients", control.mismatches().count());
    Ok(())
}
