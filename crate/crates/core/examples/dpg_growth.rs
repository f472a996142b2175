//! Degree-preserving growth from a triangle, printed as CSV.
//!
//! ```text
//! cargo run --example dpg_growth -- 25 3
//! ```
//! The optional arguments are the number of steps and the RNG seed.

use degmatch::dpg::{grow, replay, DeltaPolicy, GrowthConfig, MatchingPolicy};
use degmatch::families::cycle;

fn main() -> degmatch::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("numeric argument"));
    let steps = args.next().unwrap_or(20) as usize;
    let seed = args.next().unwrap_or(0);

    let g0 = cycle(3)?;
    let config =
        GrowthConfig::new(DeltaPolicy::RandomFeasible).with_matching(MatchingPolicy::MaxDegreeCovering);
    let trace = grow(&g0, steps, config, seed);
    print!("{}", trace.to_csv());

    let last = trace.steps.last().map(|s| s.resulting_degree_sequence.to_string()).unwrap_or_default();
    eprintln!("final degree sequence: {last}");
    assert_eq!(replay(&g0, &trace)?, trace.final_graph);
    Ok(())
}
