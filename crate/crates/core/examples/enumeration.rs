//! All labelled realizations of a small sequence, and the strong form of the
//! extension check: is there a realization whose top δ vertices carry a
//! perfect matching?

use degmatch::enumeration::{
    enumerate_realizations, nu_bar_sequence, strong_extension_check, EnumerationCaps,
};
use degmatch::DegreeSequence;

fn main() -> degmatch::Result<()> {
    let d: DegreeSequence = std::env::args().nth(1).unwrap_or_else(|| "3,2,2,2,1".into()).parse()?;
    let caps = EnumerationCaps::default();
    let mut count = 0;
    for g in enumerate_realizations(&d, caps)? {
        count += 1;
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}{v}")).collect();
        println!("{:>3}: {}", count, edges.join(" "));
    }
    println!("{count} labelled realizations of ({d})");
    if count == 0 {
        return Ok(());
    }
    println!("ν̄(d) = {}", nu_bar_sequence(&d, caps)?);
    for delta in (2..=d.len()).step_by(2) {
        println!(
            "top {delta} vertices matchable in some realization: {}",
            strong_extension_check(&d, delta, caps)?
        );
    }
    Ok(())
}
