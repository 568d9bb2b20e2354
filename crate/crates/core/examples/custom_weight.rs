// Plugging a custom semiring into the transfer engine.
//
// Counts independent sets modulo a prime without big integers, and
// cross-checks against the exact count.

use hardsquare::ivs::ivs_transfer;
use hardsquare::poly::{GridWeight, Semiring};
use hardsquare::{ivs_count, Form};

const P: u64 = 1_000_000_007;

#[derive(Clone, Copy, Debug, PartialEq)]
struct ModP(u64);

impl Semiring for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.0 = (self.0 + rhs.0) % P;
    }
}

impl GridWeight for ModP {
    fn times_z(&mut self) {}
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [6, 10, 14] {
        let ModP(r) = ivs_transfer::<ModP>(n, n, Form::ColumnSum);
        let exact = ivs_count(n, n)?;
        let expected: u64 = (exact.as_biguint() % P).try_into()?;
        assert_eq!(r, expected);
        println!("sigma({n}x{n}) mod {P} = {r}");
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
