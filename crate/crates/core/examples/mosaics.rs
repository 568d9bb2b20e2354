// Tile mosaics and their boundary states.
//
// A mosaic is written top row first. IVS tiles are `T1` (empty, weight 1),
// `T2` (vertex, weight z) and `T3` (empty, directly below a vertex).

use hardsquare::grid::Side;
use hardsquare::{Mode, Mosaic};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = Mosaic::parse(Mode::Ivs, "T1 T3 T1 T1\nT2 T1 T1 T1\nT3 T2 T1 T2")?;
    println!("{m}");
    println!("bottom {}", m.read_state(Side::Bottom));
    println!("top    {}", m.read_state(Side::Top));
    println!("left   {}", m.read_state(Side::Left));
    println!("right  {}", m.read_state(Side::Right));
    println!("suitably adjacent: {}", m.is_suitably_adjacent());
    println!("IVS mosaic (top trivial): {}", m.is_ivs_mosaic());

    // A T3 asks for a vertex above it; adding that row clears the top state.
    let closed = Mosaic::parse(
        Mode::Ivs,
        "T1 T2 T1 T1\nT1 T3 T1 T1\nT2 T1 T1 T1\nT3 T2 T1 T2",
    )?;
    assert!(closed.is_ivs_mosaic());
    println!("weight of closed mosaic: {}", closed.weight());

    let b = Mosaic::parse(Mode::Bivs, "T1 T6\nT4 T3")?;
    assert!(b.is_ivs_mosaic());
    println!("BIVS mosaic weight: {}", b.weight());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
