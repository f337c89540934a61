//! Structure constants of the Schrödinger-Virasoro algebra and of W(2,2).
//!
//! Only the "leading" ordered pairs carry a rule; every other ordered pair is
//! obtained by antisymmetry, so `[g,h] = -[h,g]` holds by construction.

use crate::error::Result;
use crate::generator::{same_algebra, Algebra, Family, Generator};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// `(m³ - m)/12` when `m + n = 0`, otherwise zero.
fn central_term(m: i64, n: i64) -> Scalar {
    if m + n != 0 {
        return Scalar::zero();
    }
    Scalar::ratio(m * m * m - m, 12)
}

fn sv_rule(g: &Generator, h: &Generator) -> Option<LinComb<Generator>> {
    use Family::*;
    let (m, n) = (g.index, h.index);
    let out = match (g.family, h.family) {
        (L, L) => {
            let mut v = LinComb::single(Generator::l(m + n), Scalar::int(n - m));
            v.add_term(Generator::c(), central_term(m, n));
            v
        }
        // [L_m, Y_{n+1/2}] = (n + (1-m)/2) Y_{m+n+1/2}
        (L, Y) => LinComb::single(Generator::y(m + n), Scalar::ratio(2 * n + 1 - m, 2)),
        // [Y_{m+1/2}, Y_{n+1/2}] = (n-m) M_{m+n+1}
        (Y, Y) => LinComb::single(Generator::m(m + n + 1), Scalar::int(n - m)),
        (L, M) => LinComb::single(Generator::m(m + n), Scalar::int(n)),
        _ => return None,
    };
    Some(out)
}

fn w22_rule(g: &Generator, h: &Generator) -> Option<LinComb<Generator>> {
    use Family::*;
    let (m, n) = (g.index, h.index);
    let lead = match (g.family, h.family) {
        (L, L) => Generator::wl(m + n),
        (L, W) => Generator::w(m + n),
        _ => return None,
    };
    let mut v = LinComb::single(lead, Scalar::int(n - m));
    v.add_term(Generator::cw(), central_term(m, n));
    Some(v)
}

fn apply_rules(
    g: &Generator,
    h: &Generator,
    rule: fn(&Generator, &Generator) -> Option<LinComb<Generator>>,
) -> LinComb<Generator> {
    if let Some(v) = rule(g, h) {
        return v;
    }
    if let Some(v) = rule(h, g) {
        return v.scaled(&Scalar::int(-1));
    }
    LinComb::new()
}

/// The Lie bracket of two Schrödinger-Virasoro generators.
pub fn sv_bracket(g: &Generator, h: &Generator) -> Result<LinComb<Generator>> {
    same_algebra(g, h)?;
    debug_assert_eq!(g.algebra, Algebra::Sv);
    Ok(apply_rules(g, h, sv_rule))
}

/// The Lie bracket of two W(2,2) generators.
pub fn w22_bracket(g: &Generator, h: &Generator) -> Result<LinComb<Generator>> {
    same_algebra(g, h)?;
    debug_assert_eq!(g.algebra, Algebra::W22);
    Ok(apply_rules(g, h, w22_rule))
}

/// Dispatch on the operands' algebra tag.
pub fn bracket(g: &Generator, h: &Generator) -> Result<LinComb<Generator>> {
    same_algebra(g, h)?;
    match g.algebra {
        Algebra::Sv => sv_bracket(g, h),
        Algebra::W22 => w22_bracket(g, h),
    }
}

/// Bracket of two elements, extended bilinearly.
pub fn bracket_elements(x: &LinComb<Generator>, y: &LinComb<Generator>) -> Result<LinComb<Generator>> {
    let mut out = LinComb::new();
    for (g, a) in x {
        for (h, b) in y {
            out.add_scaled(&bracket(g, h)?, &(a * b));
        }
    }
    Ok(out)
}
