//! Decide graphicality three ways and print a realization.
//!
//! ```text
//! cargo run --example graphicality -- 4,3,3,2,2,1,1
//! ```

use degmatch::graphicality::{is_graphic_eg, is_graphic_hh, realize_hh};
use degmatch::DegreeSequence;

fn main() -> degmatch::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["3,3,1,1".into(), "3,3,2,2,2".into(), "4,3,3,2,2,1,1".into(), "5,5,4,1,1,1,1".into()]
    } else {
        inputs
    };
    for text in inputs {
        let d: DegreeSequence = text.parse()?;
        let v = is_graphic_eg(&d);
        println!("d = ({d})");
        println!(
            "  Erdős–Gallai: {}",
            if v.is_graphic {
                "graphic".to_string()
            } else {
                match v.failing_k {
                    Some(k) => format!("fails at k={k}"),
                    None => "odd degree sum".to_string(),
                }
            }
        );
        println!("  Havel–Hakimi: {}", is_graphic_hh(&d));
        if v.is_graphic {
            let g = realize_hh(&d)?;
            let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            println!("  realization: {}", edges.join(" "));
        }
    }
    Ok(())
}
