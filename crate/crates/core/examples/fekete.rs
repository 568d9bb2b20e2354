// Sub- and super-multiplicativity of the counts.
//
// Splitting a grid into two parts gives `a(s+t) <= a(s) a(t)`, and
// gluing two parts along an empty line gives `a(s) a(t) <= a(s+t+1)`.

use hardsquare::{fekete_sandwich, Axis, Mode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (first, second) in [(1, 1), (2, 3), (4, 4)] {
        println!(
            "{}",
            fekete_sandwich(Mode::Ivs, Axis::Rows, first, second, 5)?
        );
    }
    for (first, second) in [(1, 2), (3, 3)] {
        println!(
            "{}",
            fekete_sandwich(Mode::Bivs, Axis::Cols, first, second, 3)?
        );
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
