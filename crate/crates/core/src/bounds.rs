//! Rigorous brackets for the hard square constant `eta` and the bipartite
//! hard square constant `kappa`.
//!
//! For every grid size,
//!
//! ```text
//! count(m, n)^(1/((m+1)(n+1)))  <=  constant  <=  count(m, n)^(1/(mn))
//! ```
//!
//! where `count` is `sigma` (IVS) or `beta` (BIVS). The roots are computed
//! exactly as truncated fixed-point decimals with integer arithmetic only,
//! so printed digits are never the product of floating-point rounding.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Pow;
use serde::Serialize;

use crate::bivs::bivs_count_with;
use crate::ivs::ivs_count_with;
use crate::{check_dims, Caps, Error, Mode, Natural, Result};

/// Fractional digits carried by [`nth_root`].
pub const ROOT_DIGITS: u32 = 30;

/// A nonnegative real `t` known as `floor(t * 10^digits)`, plus a flag for
/// whether that floor is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDecimal {
    scaled: BigUint,
    digits: u32,
    exact: bool,
}

fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

fn split_decimal(q: &BigUint, places: u32) -> String {
    if places == 0 {
        return q.to_string();
    }
    let (int, frac) = q.div_rem(&pow10(places));
    format!("{int}.{frac:0>width$}", width = places as usize)
}

impl FixedDecimal {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// True if the value is exactly `scaled / 10^digits`.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Decimal string truncated (rounded toward zero) to `places` digits.
    pub fn truncate(&self, places: u32) -> String {
        assert!(places <= self.digits, "not enough digits carried");
        split_decimal(&(&self.scaled / pow10(self.digits - places)), places)
    }

    /// Decimal string rounded half-to-even to `places` digits.
    pub fn round_half_even(&self, places: u32) -> String {
        assert!(places < self.digits, "not enough digits carried");
        let unit = pow10(self.digits - places);
        let (mut q, rem) = self.scaled.div_rem(&unit);
        let half = &unit / 2u32;
        let round_up = match rem.cmp(&half) {
            Ordering::Greater => true,
            Ordering::Less => false,
            // A dropped tail beyond the carried digits pushes past the tie.
            Ordering::Equal => !self.exact || q.is_odd(),
        };
        if round_up {
            q += 1u32;
        }
        split_decimal(&q, places)
    }

    pub fn to_f64(&self) -> f64 {
        self.truncate(self.digits).parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for FixedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) if (p as u32) < self.digits => f.write_str(&self.round_half_even(p as u32)),
            _ => f.write_str(&self.truncate(self.digits)),
        }
    }
}

impl Serialize for FixedDecimal {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `count^(1/r)` to [`ROOT_DIGITS`] fractional digits.
///
/// # Panics
/// If `r == 0`.
pub fn nth_root(count: &Natural, r: u32) -> FixedDecimal {
    nth_root_digits(count, r, ROOT_DIGITS)
}

/// `count^(1/r)` to `digits` fractional digits, truncated.
pub fn nth_root_digits(count: &Natural, r: u32, digits: u32) -> FixedDecimal {
    assert!(r > 0, "root order must be positive");
    let shifted = count.as_biguint() * pow10(digits * r);
    let scaled = shifted.nth_root(r);
    let exact = Pow::pow(&scaled, r) == shifted;
    FixedDecimal {
        scaled,
        digits,
        exact,
    }
}

/// A decimal literal `num / 10^scale`, parsed exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalLiteral {
    num: BigUint,
    scale: u32,
}

impl FromStr for DecimalLiteral {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if int.is_empty() || !all_digits(int) || !all_digits(frac) {
            return Err(Error::Parse(format!("not a decimal literal: {s:?}")));
        }
        let num =
            BigUint::from_str(&format!("{int}{frac}")).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(DecimalLiteral {
            num,
            scale: frac.len() as u32,
        })
    }
}

impl DecimalLiteral {
    /// Compares `count^(1/r)` with this literal exactly, via
    /// `count * 10^(scale r)` against `num^r`.
    pub fn cmp_root(&self, count: &Natural, r: u32) -> Ordering {
        let lhs = count.as_biguint() * pow10(self.scale * r);
        lhs.cmp(&Pow::pow(&self.num, r))
    }
}

fn count(mode: Mode, m: usize, n: usize, caps: &Caps) -> Result<Natural> {
    match mode {
        Mode::Ivs => ivs_count_with(m, n, caps),
        Mode::Bivs => bivs_count_with(m, n, caps),
    }
}

/// Count of a grid using the narrower side as bar width; the grid graph is
/// symmetric under transposition.
fn count_narrow(mode: Mode, m: usize, n: usize, caps: &Caps) -> Result<Natural> {
    count(mode, m.min(n), m.max(n), caps)
}

fn root_order(a: usize, b: usize) -> Result<u32> {
    a.checked_mul(b)
        .and_then(|r| u32::try_from(r).ok())
        .ok_or(Error::CapExceeded {
            what: "root order",
            value: a.saturating_mul(b),
            cap: u32::MAX as usize,
        })
}

/// Lower and upper bound on the growth constant from one grid size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthBracket {
    pub mode: Mode,
    pub m: usize,
    pub n: usize,
    pub count: Natural,
    /// `count^(1/((m+1)(n+1)))`.
    pub lower: FixedDecimal,
    /// `count^(1/(mn))`.
    pub upper: FixedDecimal,
}

impl GrowthBracket {
    pub fn lower_order(&self) -> u32 {
        ((self.m + 1) * (self.n + 1)) as u32
    }

    pub fn upper_order(&self) -> u32 {
        (self.m * self.n) as u32
    }

    /// Exact test of `lower <= value <= upper` for a decimal literal.
    pub fn contains(&self, value: &str) -> Result<bool> {
        let lit: DecimalLiteral = value.parse()?;
        Ok(
            lit.cmp_root(&self.count, self.lower_order()) != Ordering::Greater
                && lit.cmp_root(&self.count, self.upper_order()) != Ordering::Less,
        )
    }
}

/// The bracket from the `m x n` grid, with the transfer width taken as `m`.
pub fn bracket(mode: Mode, m: usize, n: usize) -> Result<GrowthBracket> {
    bracket_with(mode, m, n, &Caps::default())
}

pub fn bracket_with(mode: Mode, m: usize, n: usize, caps: &Caps) -> Result<GrowthBracket> {
    check_dims(m, n)?;
    let upper_order = root_order(m, n)?;
    let lower_order = root_order(m + 1, n + 1)?;
    let count = count(mode, m, n, caps)?;
    let lower = nth_root(&count, lower_order);
    let upper = nth_root(&count, upper_order);
    if lower.scaled > upper.scaled {
        return Err(Error::Inconsistent(format!(
            "lower bound {lower} exceeds upper bound {upper} for {m}x{n}"
        )));
    }
    // Three tiles per site bound every IVS count by 3^(mn).
    if mode == Mode::Ivs && upper.scaled > BigUint::from(3u32) * pow10(upper.digits) {
        return Err(Error::Inconsistent(format!(
            "IVS upper bound {upper} exceeds 3"
        )));
    }
    Ok(GrowthBracket {
        mode,
        m,
        n,
        count,
        lower,
        upper,
    })
}

/// Which grid dimension a Fekete sandwich splits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    /// Split the first dimension: `a(m1+m2, n) <= a(m1, n) a(m2, n) <= a(m1+m2+1, n)`.
    Rows,
    /// Split the second dimension: `a(m, n1+n2) <= a(m, n1) a(m, n2) <= a(m, n1+n2+1)`.
    Cols,
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rows" => Ok(Axis::Rows),
            "cols" => Ok(Axis::Cols),
            _ => Err(Error::Parse(format!("unknown axis {s:?}"))),
        }
    }
}

/// The three counts of a verified sub/super-multiplicative sandwich.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeketeWitness {
    pub mode: Mode,
    pub axis: Axis,
    pub first: usize,
    pub second: usize,
    pub fixed: usize,
    /// `a` of the joined grid, split sizes summed.
    pub joined: Natural,
    /// Product of the two parts.
    pub product: Natural,
    /// `a` of the joined grid with one extra separating line.
    pub padded: Natural,
}

impl fmt::Display for FeketeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, k) = (self.first + self.second, self.fixed);
        let dims = |t: usize| match self.axis {
            Axis::Rows => format!("{t}x{k}"),
            Axis::Cols => format!("{k}x{t}"),
        };
        write!(
            f,
            "{} {:?} {}+{}: a({}) = {} <= {} <= {} = a({})",
            self.mode,
            self.axis,
            self.first,
            self.second,
            dims(s),
            self.joined,
            self.product,
            self.padded,
            dims(s + 1)
        )
    }
}

/// Computes and checks both inequalities of one sandwich.
///
/// A violation can only come from a bug in the engines and is reported as
/// [`Error::Inconsistent`].
pub fn fekete_sandwich(
    mode: Mode,
    axis: Axis,
    first: usize,
    second: usize,
    fixed: usize,
) -> Result<FeketeWitness> {
    fekete_sandwich_with(mode, axis, first, second, fixed, &Caps::default())
}

pub fn fekete_sandwich_with(
    mode: Mode,
    axis: Axis,
    first: usize,
    second: usize,
    fixed: usize,
    caps: &Caps,
) -> Result<FeketeWitness> {
    if first == 0 || second == 0 || fixed == 0 {
        return Err(Error::EmptyGrid {
            m: first.min(second),
            n: fixed,
        });
    }
    let a = |t: usize| match axis {
        Axis::Rows => count_narrow(mode, t, fixed, caps),
        Axis::Cols => count_narrow(mode, fixed, t, caps),
    };
    let joined = a(first + second)?;
    let product = &a(first)? * &a(second)?;
    let padded = a(first + second + 1)?;
    let witness = FeketeWitness {
        mode,
        axis,
        first,
        second,
        fixed,
        joined,
        product,
        padded,
    };
    if witness.joined > witness.product || witness.product > witness.padded {
        return Err(Error::Inconsistent(format!("sandwich violated: {witness}")));
    }
    Ok(witness)
}

/// One row of the square-grid table: `sigma(G_nxn)` with its `1/n^2` and
/// `1/(n+1)^2` roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub sigma: Natural,
    pub root_n2: FixedDecimal,
    pub root_n1sq: FixedDecimal,
}

impl TableRow {
    /// `n,sigma,root_n2,root_n1sq` with the roots rounded to 3 decimals.
    pub fn csv(&self) -> String {
        format!(
            "{},{},{:.3},{:.3}",
            self.n, self.sigma, self.root_n2, self.root_n1sq
        )
    }
}

pub const TABLE_CSV_HEADER: &str = "n,sigma,root_n2,root_n1sq";

/// Rows `1..=max_n` of the square-grid table.
pub fn table_one(max_n: usize) -> Result<Vec<TableRow>> {
    table_one_with(max_n, &Caps::default())
}

pub fn table_one_with(max_n: usize, caps: &Caps) -> Result<Vec<TableRow>> {
    check_dims(max_n, max_n)?;
    crate::check_cap("IVS count width", max_n, caps.ivs_count)?;
    (1..=max_n)
        .map(|n| {
            let b = bracket_with(Mode::Ivs, n, n, caps)?;
            Ok(TableRow {
                n,
                sigma: b.count,
                root_n2: b.upper,
                root_n1sq: b.lower,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(s: &str) -> Natural {
        s.parse().unwrap()
    }

    #[test]
    fn root_examples() {
        let r = nth_root(&nat("1234"), 16);
        assert!(r.truncate(5).starts_with("1.5602"), "{r}");
        assert_eq!(r.round_half_even(3), "1.560");
        assert_eq!(nth_root(&Natural::one(), 7).round_half_even(3), "1.000");
        assert!(nth_root(&Natural::one(), 7).is_exact());
        assert_eq!(nth_root(&nat("55447"), 25).round_half_even(3), "1.548");
        assert_eq!(nth_root(&nat("2"), 1).truncate(3), "2.000");
        assert_eq!(nth_root(&nat("2"), 4).round_half_even(3), "1.189");
    }

    #[test]
    fn half_even_ties() {
        // 2.25 = 5.0625^(1/2) exactly; a tie at one decimal rounds to even.
        let r = nth_root_digits(&nat("50625"), 2, 8);
        assert_eq!(r.truncate(8), "225.00000000");
        let tie = FixedDecimal {
            scaled: BigUint::from(2250u32),
            digits: 3,
            exact: true,
        };
        assert_eq!(tie.round_half_even(1), "2.2");
        let inexact = FixedDecimal {
            exact: false,
            ..tie.clone()
        };
        assert_eq!(inexact.round_half_even(1), "2.3");
        let odd = FixedDecimal {
            scaled: BigUint::from(2350u32),
            digits: 3,
            exact: true,
        };
        assert_eq!(odd.round_half_even(1), "2.4");
    }

    #[test]
    fn roots_of_perfect_powers() {
        for k in [1u64, 2, 3, 10, 999, 123_456, 1_000_000] {
            for r in [1u32, 2, 5, 17, 64] {
                let c = Natural::from(k).pow(r);
                let root = nth_root(&c, r);
                assert!(root.is_exact());
                assert_eq!(root.truncate(0), k.to_string());
                let rel = (root.to_f64() - k as f64).abs() / k as f64;
                assert!(rel < 1e-12);
            }
        }
    }

    #[test]
    fn literal_comparison() {
        let lit: DecimalLiteral = "1.5030480824753322".parse().unwrap();
        assert_eq!(lit.cmp_root(&nat("1234"), 16), Ordering::Greater);
        assert_eq!(lit.cmp_root(&nat("1234"), 25), Ordering::Less);
        let two: DecimalLiteral = "2".parse().unwrap();
        assert_eq!(two.cmp_root(&nat("4"), 2), Ordering::Equal);
        assert!("1.2.3".parse::<DecimalLiteral>().is_err());
        assert!("-1".parse::<DecimalLiteral>().is_err());
    }

    #[test]
    fn bracket_examples() {
        let b = bracket(Mode::Ivs, 4, 4).unwrap();
        assert_eq!(b.count, nat("1234"));
        assert_eq!(format!("{:.3}", b.lower), "1.329");
        assert_eq!(format!("{:.3}", b.upper), "1.560");
        let b = bracket(Mode::Ivs, 1, 1).unwrap();
        assert_eq!(format!("{:.3}", b.upper), "2.000");
        assert_eq!(format!("{:.3}", b.lower), "1.189");
        assert!(b.contains("1.5030480824753322").unwrap());
        assert!(!b.contains("2.5").unwrap());
    }

    #[test]
    fn sandwich_examples() {
        let w = fekete_sandwich(Mode::Ivs, Axis::Rows, 1, 1, 2).unwrap();
        assert_eq!((w.joined.to_u64(), w.product.to_u64()), (Some(7), Some(9)));
        assert_eq!(w.padded, ivs_count_with(3, 2, &Caps::default()).unwrap());
        let w = fekete_sandwich(Mode::Ivs, Axis::Cols, 1, 1, 1).unwrap();
        assert_eq!(
            (w.joined.to_u64(), w.product.to_u64(), w.padded.to_u64()),
            (Some(3), Some(4), Some(5))
        );
        let w = fekete_sandwich(Mode::Bivs, Axis::Rows, 1, 1, 1).unwrap();
        assert_eq!((w.joined.to_u64(), w.product.to_u64()), (Some(7), Some(9)));
        assert!(fekete_sandwich(Mode::Ivs, Axis::Rows, 0, 1, 1).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = table_one(6).unwrap();
        assert_eq!(rows[5].csv(), "6,5598861,1.540,1.373");
        assert_eq!(rows[0].csv(), "1,2,2.000,1.189");
        assert!(table_one(0).is_err());
    }

    #[test]
    fn upper_bounds_shrink_along_diagonal() {
        let rows = table_one(12).unwrap();
        for pair in rows.windows(2) {
            assert!(
                pair[1].root_n2.scaled <= pair[0].root_n2.scaled,
                "n={}",
                pair[1].n
            );
            assert!(
                pair[1].root_n1sq.scaled >= pair[0].root_n1sq.scaled,
                "n={}",
                pair[1].n
            );
        }
    }
}
