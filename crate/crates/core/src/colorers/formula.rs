//! Explicit cyclic interval colorings of `S_{a,b,c}` and `M_{a,b,c}`.
//!
//! Colors follow the edge order of [`gen_s`](crate::families::gen_s) and
//! [`gen_m`](crate::families::gen_m).

use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};

fn check(a: usize, b: usize, c: usize) -> Result<()> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::InvalidParameter("a, b, c must be >= 1".into()));
    }
    Ok(())
}

/// Palette `max(a+b+c, 4)`. The formulas can exceed `a+b+c`; such colors are
/// reduced modulo `t` (so `u3 z_c` gets 1, and `u2 v2` wraps when `c = 1`).
pub fn color_s(a: usize, b: usize, c: usize) -> Result<EdgeColoring> {
    check(a, b, c)?;
    let t = (a + b + c).max(4);
    let wrap = |x: usize| ((x - 1) % t + 1) as u32;
    let mut colors: Vec<u32> = [a + 2, a + 1, a + b + 2, a + b + 1, 2, 1].into_iter().map(wrap).collect();
    for i in 1..=a {
        colors.extend([wrap(i), wrap(i + 1)]);
    }
    for j in 1..=b {
        colors.extend([wrap(a + j), wrap(a + 1 + j)]);
    }
    for k in 1..=c {
        colors.extend([wrap(a + b + k), wrap(a + b + 1 + k)]);
    }
    EdgeColoring::new(t as u32, colors)
}

/// Palette `a+b+c+1`.
pub fn color_m(a: usize, b: usize, c: usize) -> Result<EdgeColoring> {
    check(a, b, c)?;
    let t = a + b + c + 1;
    let mut colors = Vec::with_capacity(3 * (t - 1));
    for i in 1..=a {
        let hub = if i == 1 { t } else { i - 1 };
        colors.extend([hub, i, i + 1]);
    }
    for j in 1..=b {
        colors.extend([a - 1 + j, a + 1 + j, a + j]);
    }
    for k in 1..=c {
        colors.extend([a + b - 1 + k, a + b + k, a + b + 1 + k]);
    }
    EdgeColoring::new(t as u32, colors.into_iter().map(|x| x as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{cyclic_deficiency_report, interval_deficiency_report};
    use crate::families::{gen_m, gen_s};

    #[test]
    fn s111_is_an_interval_coloring() {
        let g = gen_s(1, 1, 1).unwrap();
        let c = color_s(1, 1, 1).unwrap();
        assert_eq!(c.t(), 4);
        assert_eq!(c.colors_used().len(), 4);
        assert_eq!(interval_deficiency_report(&g, &c).unwrap().total, 0);
    }

    #[test]
    fn small_parameters() {
        for (a, b, c) in [(2, 2, 2), (2, 1, 1), (1, 1, 2), (3, 1, 1), (7, 7, 7)] {
            let g = gen_s(a, b, c).unwrap();
            let col = color_s(a, b, c).unwrap();
            assert_eq!(cyclic_deficiency_report(&g, &col).unwrap().total, 0, "S {a} {b} {c}");
            let g = gen_m(a, b, c).unwrap();
            let col = color_m(a, b, c).unwrap();
            assert_eq!(col.colors_used().len(), a + b + c + 1);
            assert_eq!(cyclic_deficiency_report(&g, &col).unwrap().total, 0, "M {a} {b} {c}");
        }
        assert!(color_s(0, 1, 1).is_err());
    }
}
