// The state matrices behind the transfer engine.
//
// Entry `(i, j)` is the weight of the single row of tiles whose bottom
// bar state is `i` and top bar state is `j`. The matrix for width `m` is
// built three ways: by block recursion, as the sum of a family of bar
// matrices, and entry by entry from the closed compatibility rule.

use hardsquare::bivs::{bivs_closed_form_matrix, bivs_theorem_matrix};
use hardsquare::grid::row_compatible;
use hardsquare::ivs::{ivs_bar_triple, ivs_closed_form_matrix, ivs_theorem_matrix};
use hardsquare::{BarState, Mode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = ivs_theorem_matrix(2)?;
    println!("IVS width 2:\n{t:?}");
    assert_eq!(t, ivs_bar_triple(2)?.sum());
    assert_eq!(t, ivs_closed_form_matrix(2)?);

    let b = bivs_theorem_matrix(1)?;
    println!("BIVS width 1:\n{b:?}");
    assert_eq!(b, bivs_closed_form_matrix(1)?);

    // States are read right to left, so "10" is column 0 = 0, column 1 = 1.
    let s = BarState::parse(Mode::Ivs, "10")?;
    println!(
        "state {s} has index {} (columns {:?})",
        s.index(),
        s.columns()
    );
    for j in 1..=4 {
        let u = BarState::from_index(Mode::Ivs, 2, j)?;
        println!("  {s} under {u}: {}", row_compatible(&s, &u));
    }

    let sparsity = ivs_theorem_matrix(8)?;
    println!(
        "IVS width 8: {} of {} entries nonzero",
        sparsity.nonzero_count(),
        sparsity.dim() * sparsity.dim()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
