//! Every built-in graph family, with its degree sequence and matching number.

use degmatch::families::{make_family, Family};
use degmatch::matching::matching_number;

fn main() -> degmatch::Result<()> {
    let all = [
        Family::HalfGraph { n: 8 },
        Family::Windmill { t: 3, l: 4 },
        Family::Complete { n: 5 },
        Family::Cycle { n: 7 },
        Family::Path { n: 6 },
        Family::RegularCirculant { n: 10, r: 3 },
        Family::CompleteBipartite { a: 2, b: 5 },
        Family::DisjointTriangles { k: 3 },
        Family::DisjointCliques { k: 2, l: 4 },
    ];
    for f in all {
        let g = make_family(f)?;
        println!(
            "{:<40} n={:<3} m={:<3} ν={:<3} d=({})",
            serde_json::to_string(&f).expect("family serializes"),
            g.vertex_count(),
            g.edge_count(),
            matching_number(&g),
            g.degree_sequence()
        );
    }
    println!("\nedge list of the half-graph on 6 vertices:");
    print!("{}", make_family(Family::HalfGraph { n: 6 })?.to_edge_list());
    Ok(())
}
