// Generating functions by independent set size.
//
// `P(z)` counts independent sets by size, `Q(x, y)` counts ordered pairs
// of independent sets (white, black) with no white vertex next to a black
// one. Setting `y = 0` in `Q` recovers `P`.

use hardsquare::ivs::ivs_genfunc_with;
use hardsquare::Caps;
use hardsquare::{bivs_genfunc, ivs_genfunc, ivs_genfunc_alt, Form};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = ivs_genfunc(3, 3)?;
    println!("P_3x3(z)   = {p}");
    println!("P_3x3(1)   = {}", p.eval_ones());
    println!("degree     = {:?}", p.degree());

    // Three constructions of the same polynomial.
    let corner = ivs_genfunc_with(3, 3, Form::CornerEntry, &Caps::default())?;
    let alt = ivs_genfunc_alt(3, 3)?;
    assert_eq!(p, corner);
    assert_eq!(p, alt);

    let q = bivs_genfunc(2, 2)?;
    println!("Q_2x2(x,y) = {q}");
    println!("Q_2x2(1,1) = {}", q.eval_ones());
    assert_eq!(q.project_y_zero(), ivs_genfunc(2, 2)?);
    assert_eq!(q.swap_xy(), q);

    println!("JSON       = {}", serde_json::to_string(&p)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
