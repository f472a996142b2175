//! Degree-sequence lower bounds next to the exact matching numbers for the
//! standard example families.

use degmatch::bounds::bound_report;
use degmatch::families::{make_family, Family};
use degmatch::matching::{matching_number, min_maximal_matching};

fn main() -> degmatch::Result<()> {
    let families = [
        Family::RegularCirculant { n: 12, r: 3 },
        Family::RegularCirculant { n: 15, r: 4 },
        Family::HalfGraph { n: 12 },
        Family::Windmill { t: 5, l: 3 },
        Family::Windmill { t: 3, l: 5 },
        Family::DisjointTriangles { k: 4 },
        Family::CompleteBipartite { a: 3, b: 9 },
    ];
    println!(
        "{:<34} {:>3} {:>3} | {:>3} {:>3} {:>5} {:>7} {:>5} | {:>3} {:>3}",
        "graph", "n", "m", "k*", "ℓ*", "noP3", "vizing", "posa", "ν̄", "ν"
    );
    for f in families {
        let g = make_family(f)?;
        let r = bound_report(&g.degree_sequence())?;
        println!(
            "{:<34} {:>3} {:>3} | {:>3} {:>3} {:>5} {:>7} {:>5} | {:>3} {:>3}",
            format!("{f:?}"),
            r.n,
            r.m,
            r.k_star,
            r.ell_star,
            r.no_p3,
            format!("{}/{}", r.vizing_num, r.vizing_den),
            r.posa,
            min_maximal_matching(&g)?.len(),
            matching_number(&g),
        );
    }
    Ok(())
}
