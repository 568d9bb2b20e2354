// Exact independent set counts for square grids.
//
// ```text
// cargo run --release --example count_grid
// ```

use hardsquare::{bivs_count, ivs_count};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>2}  {:>24}  {:>24}", "n", "IVS", "BIVS");
    for n in 1..=8 {
        let ivs = ivs_count(n, n)?;
        let bivs = bivs_count(n, n)?;
        println!("{n:>2}  {ivs:>24}  {bivs:>24}");
    }

    // Rectangles need not be square; the transfer width is the first argument.
    let wide = ivs_count(12, 30)?;
    let tall = ivs_count(30, 12);
    println!("12x30: {wide}");
    // A 30-column transfer is refused by the default caps.
    assert!(tall.is_err_and(|e| e.is_cap()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
