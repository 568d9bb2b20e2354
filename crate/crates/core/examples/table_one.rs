// Independent set counts of the n x n grid with their two root estimates.

use hardsquare::bounds::TABLE_CSV_HEADER;
use hardsquare::table_one;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    println!("{TABLE_CSV_HEADER}");
    for row in table_one(max_n)? {
        println!("{}", row.csv());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
