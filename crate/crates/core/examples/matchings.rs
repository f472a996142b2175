//! Maximum, seeded greedy and minimum maximal matchings on one graph.

use degmatch::families::windmill;
use degmatch::matching::{greedy_maximal_matching, max_matching, min_maximal_matching, verify_matching};

fn main() -> degmatch::Result<()> {
    let g = windmill(4, 3)?;
    println!("friendship graph Wd(4,3): n={}, m={}", g.vertex_count(), g.edge_count());

    let max = max_matching(&g);
    println!("maximum matching ({}): {:?}", max.len(), max.edges());

    let min = min_maximal_matching(&g)?;
    println!("smallest maximal matching ({}): {:?}", min.len(), min.edges());

    for seed in 0..5 {
        let m = greedy_maximal_matching(&g, seed);
        assert!(verify_matching(&g, m.edges(), true));
        println!("greedy, seed {seed} ({}): {:?}", m.len(), m.edges());
    }
    Ok(())
}
