// Rigorous brackets on the growth constants.
//
// For any grid, `count^(1/((m+1)(n+1))) <= constant <= count^(1/(mn))`.
// The hard square constant is about 1.5030480824753322.
//
// ```text
// cargo run --release --example growth_bounds -- 9 100
// ```

use hardsquare::{bracket, Mode};

const HARD_SQUARE: &str = "1.5030480824753322";

fn show(mode: Mode, m: usize, n: usize) -> Result<(), Box<dyn std::error::Error>> {
    let b = bracket(mode, m, n)?;
    println!(
        "{mode} {m}x{n}: {} <= constant <= {}  ({} digits in count)",
        b.lower.round_half_even(6),
        b.upper.round_half_even(6),
        b.count.to_string().len()
    );
    if mode == Mode::Ivs {
        assert!(b.contains(HARD_SQUARE)?);
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=8 {
        show(Mode::Ivs, n, n)?;
    }
    show(Mode::Ivs, 12, 60)?;
    show(Mode::Bivs, 6, 30)?;
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let result = match args[..] {
        [m, n] => show(Mode::Bivs, m, n),
        _ => run_example(),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
