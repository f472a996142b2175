//! Largest matching any realization can have: closed form, binary search on
//! the augmented sequence, and brute force over all realizations.

use degmatch::enumeration::{nu_star_brute, EnumerationCaps};
use degmatch::graphicality::{delta_star, extension_feasible, nu_star_formula};
use degmatch::DegreeSequence;

fn main() -> degmatch::Result<()> {
    let examples = ["2,2,2,2,2,2", "3,3,2,2,2,2", "5,1,1,1,1,1", "4,3,3,2,2,1,1", "3,3,3,3,3,3,1,1"];
    println!("{:<18} {:>8} {:>8} {:>8}", "sequence", "formula", "δ*/2", "brute");
    for text in examples {
        let d: DegreeSequence = text.parse()?;
        let brute = nu_star_brute(&d, EnumerationCaps::complete(d.len()))?;
        println!("{:<18} {:>8} {:>8} {:>8}", text, nu_star_formula(&d)?, delta_star(&d)? / 2, brute);
    }

    let d: DegreeSequence = "5,1,1,1,1,1".parse()?;
    println!("\nwhich d ∘ δ are graphic for d = ({d})?");
    for delta in (2..=d.len()).step_by(2) {
        println!("  δ = {delta}: {}", extension_feasible(&d, delta)?);
    }
    Ok(())
}
