// Transfer results against exhaustive enumeration.

use hardsquare::oracle::{brute_bivs, brute_ivs, brute_mosaics};
use hardsquare::{bivs_genfunc, ivs_genfunc, GenFunc, Mode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            assert_eq!(ivs_genfunc(m, n)?, brute_ivs(m, n)?, "IVS {m}x{n}");
            checked += 1;
            if m * n <= 9 {
                assert_eq!(bivs_genfunc(m, n)?, brute_bivs(m, n)?, "BIVS {m}x{n}");
                checked += 1;
            }
        }
    }
    let tiles = brute_mosaics(Mode::Ivs, 3, 3)?;
    assert_eq!(tiles, GenFunc::Ivs(ivs_genfunc(3, 3)?));
    println!("{checked} grids agree with brute force");
    println!("3x3 mosaics: {tiles}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
