//! Compare the smallest maximal matching of each graphic sequence with the
//! ℓ* and k* bounds, and write the table as CSV to stdout.
//!
//! ```text
//! cargo run --release --example conjecture_scan -- 6 > scan.csv
//! ```

use degmatch::enumeration::{conjecture_csv, conjecture_scan, EnumerationCaps};

fn main() -> degmatch::Result<()> {
    let n_max: usize = std::env::args().nth(1).map(|a| a.parse().expect("n_max")).unwrap_or(5);
    let rows = conjecture_scan(n_max, EnumerationCaps::complete(n_max))?;
    print!("{}", conjecture_csv(&rows));
    let equal = rows.iter().filter(|r| r.equal).count();
    eprintln!("{} graphic sequences with n <= {n_max}; ν̄ = ℓ* on {equal}", rows.len());
    Ok(())
}
