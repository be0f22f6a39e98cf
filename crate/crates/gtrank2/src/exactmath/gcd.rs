/*! Multivariate polynomial gcd over the rationals.

The recursion is the classical primitive-PRS construction: view both
polynomials as univariate in the highest active symbol with polynomial
coefficients in the remaining ones, split each into content times
primitive part (the content being the recursive gcd of the
coefficients), run a pseudo-remainder sequence on the primitive parts,
and multiply back. The coefficient expressions in this crate are tiny
(a handful of symbols, degrees in the low tens), so no subresultant or
modular refinements are needed.

Results are normalized monic in graded-lex leading coefficient, which
makes `gcd(f, g)` canonical and lets [`poly_div_exact`] assert exact
divisibility loudly.
*/

use super::poly::Poly;
use super::sym::Symbol;
use num::One;

/// Canonical (monic leading coefficient) gcd; `gcd(0, g) = monic(g)`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    let raw = gcd_rec(f, g);
    make_monic(&raw)
}

/// lcm normalized like the gcd; zero when either input is zero.
pub fn poly_lcm(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero();
    }
    let d = poly_gcd(f, g);
    let q = poly_div_exact(f, &d);
    make_monic(&(&q * g))
}

/// Exact quotient `f / d`. Panics if `d` does not divide `f`; callers
/// only divide by established divisors (gcds, cleared denominators).
pub fn poly_div_exact(f: &Poly, d: &Poly) -> Poly {
    assert!(!d.is_zero(), "exact division by zero polynomial");
    let (q, r) = divmod(f, d);
    assert!(r.is_zero(), "exact division left a remainder");
    q
}

fn make_monic(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    p.div_scalar(&p.leading_coeff())
}

fn gcd_rec(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one();
    }
    // Recurse on the highest symbol active in either polynomial. If
    // only one of them involves it, the gcd divides the other's
    // coefficient content.
    let top = highest_symbol(f, g);
    let fu = f.coeffs_in(top);
    let gu = g.coeffs_in(top);
    if fu.len() == 1 {
        return gcd_many(std::iter::once(f.clone()).chain(gu));
    }
    if gu.len() == 1 {
        return gcd_many(std::iter::once(g.clone()).chain(fu));
    }

    let f_cont = gcd_many(fu.iter().cloned());
    let g_cont = gcd_many(gu.iter().cloned());
    let f_pp = Poly::from_coeffs_in(
        top,
        &fu.iter()
            .map(|c| poly_div_exact(c, &f_cont))
            .collect::<Vec<_>>(),
    );
    let g_pp = Poly::from_coeffs_in(
        top,
        &gu.iter()
            .map(|c| poly_div_exact(c, &g_cont))
            .collect::<Vec<_>>(),
    );

    // Primitive PRS in `top`.
    let (mut a, mut b) = if f_pp.degree_in(top) >= g_pp.degree_in(top) {
        (f_pp, g_pp)
    } else {
        (g_pp, f_pp)
    };
    loop {
        let r = pseudo_rem(&a, &b, top);
        if r.is_zero() {
            break;
        }
        // Strip content to keep the sequence primitive.
        let rc = r.coeffs_in(top);
        let cont = gcd_many(rc.iter().cloned());
        let prim = Poly::from_coeffs_in(
            top,
            &rc.iter()
                .map(|c| poly_div_exact(c, &cont))
                .collect::<Vec<_>>(),
        );
        a = b;
        b = prim;
        if b.degree_in(top) == 0 {
            // Primitive parts are coprime in `top`.
            return gcd_rec(&f_cont, &g_cont);
        }
    }
    let b_cont = gcd_many(b.coeffs_in(top).iter().cloned());
    let b_pp = Poly::from_coeffs_in(
        top,
        &b.coeffs_in(top)
            .iter()
            .map(|c| poly_div_exact(c, &b_cont))
            .collect::<Vec<_>>(),
    );
    &gcd_rec(&f_cont, &g_cont) * &b_pp
}

fn gcd_many(polys: impl IntoIterator<Item = Poly>) -> Poly {
    let mut acc = Poly::zero();
    for p in polys {
        acc = gcd_rec(&acc, &p);
        if acc.is_constant() && !acc.is_zero() {
            return Poly::one();
        }
    }
    if acc.is_zero() {
        acc
    } else {
        make_monic(&acc)
    }
}

fn highest_symbol(f: &Poly, g: &Poly) -> Symbol {
    f.active_symbols()
        .into_iter()
        .chain(g.active_symbols())
        .max()
        .expect("nonconstant polynomial with no active symbols")
}

/// Pseudo-remainder of `a` by `b` in `s`: the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` under univariate division, which
/// stays polynomial in the remaining symbols.
fn pseudo_rem(a: &Poly, b: &Poly, s: Symbol) -> Poly {
    let db = b.degree_in(s) as i64;
    let bu = b.coeffs_in(s);
    let lc_b = bu.last().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(s) as i64;
        if dr < db {
            break;
        }
        let ru = r.coeffs_in(s);
        let lc_r = ru.last().unwrap().clone();
        // r := lc_b * r - lc_r * x^(dr-db) * b
        let mut shift = Poly::zero();
        let mut mono = super::poly::Mono::unit();
        mono.0[s.index()] = (dr - db) as super::poly::Exp;
        shift.add_term(mono, num::BigRational::one());
        r = &(&r * &lc_b) - &(&(&shift * &lc_r) * b);
    }
    r
}

/// Division attempt by repeated graded-lex leading-term cancellation.
/// When `d` divides `f` exactly this terminates with zero remainder;
/// otherwise it stops at the first leading term `d` cannot cancel,
/// which is all [`poly_div_exact`] needs to detect inexactness.
fn divmod(f: &Poly, d: &Poly) -> (Poly, Poly) {
    let (lm_d, lc_d) = match d.leading_term() {
        Some((m, c)) => (*m, c.clone()),
        None => panic!("division by zero polynomial"),
    };
    let mut q = Poly::zero();
    let mut r = f.clone();
    while let Some((lm_r, lc_r)) = r.leading_term() {
        let Some(m) = lm_r.div(&lm_d) else { break };
        let c = lc_r.clone() / lc_d.clone();
        let mut step = Poly::zero();
        step.add_term(m, c);
        q = &q + &step;
        r = &r - &(&step * d);
    }
    (q, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat_int, Rational};
    use proptest::prelude::*;

    fn sym(s: Symbol) -> Poly {
        Poly::symbol(s)
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let x = sym(Symbol::H1);
        let y = sym(Symbol::H2);
        let f = &(&x + &y) * &(&x - &y);
        let g = &(&x + &y) * &(&x + &Poly::int(1));
        let d = poly_gcd(&f, &g);
        assert_eq!(d, &x + &y);
    }

    #[test]
    fn div_exact_inverts_multiplication() {
        let x = sym(Symbol::I);
        let y = sym(Symbol::K);
        let f = &(&(&x * &x) + &y) * &(&y + &Poly::int(3));
        assert_eq!(poly_div_exact(&f, &(&y + &Poly::int(3))), &(&x * &x) + &y);
    }

    #[test]
    fn lcm_times_gcd_matches_product_up_to_scale() {
        let x = sym(Symbol::J);
        let f = &x * &(&x + &Poly::int(1));
        let g = &(&x + &Poly::int(1)) * &(&x + &Poly::int(2));
        let l = poly_lcm(&f, &g);
        let d = poly_gcd(&f, &g);
        assert_eq!(&l * &d, &f * &g);
    }

    // ===== Randomized gcd properties =====

    fn arb_small_poly() -> impl Strategy<Value = Poly> {
        // Sparse polynomials in (h1, h2) with coefficients in -3..=3.
        proptest::collection::vec(((0u16..3), (0u16..3), (-3i64..=3)), 0..4).prop_map(|ts| {
            let mut p = Poly::zero();
            for (e1, e2, c) in ts {
                let mut m = super::super::poly::Mono::unit();
                m.0[Symbol::H1.index()] = e1;
                m.0[Symbol::H2.index()] = e2;
                p.add_term(m, rat_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn gcd_divides_both(f in arb_small_poly(), g in arb_small_poly()) {
            let d = poly_gcd(&f, &g);
            if !d.is_zero() {
                let (_, r1) = super::divmod(&f, &d);
                let (_, r2) = super::divmod(&g, &d);
                prop_assert!(r1.is_zero());
                prop_assert!(r2.is_zero());
            }
        }
    }

    proptest! {
        #[test]
        fn common_factor_is_detected(f in arb_small_poly(), g in arb_small_poly(), h in arb_small_poly()) {
            prop_assume!(!h.is_zero() && !h.is_constant());
            prop_assume!(!f.is_zero() || !g.is_zero());
            // h must divide the gcd of f*h and g*h.
            let d = poly_gcd(&(&f * &h), &(&g * &h));
            let (_, rem) = super::divmod(&d, &h);
            prop_assert!(rem.is_zero(), "h does not divide gcd: d={d}, h={h}");
        }
    }

    #[test]
    fn monic_normalization_is_canonical() {
        let x = sym(Symbol::H1);
        let f = (&x + &Poly::int(1)).scale(&Rational::new(6.into(), 5.into()));
        let g = (&x + &Poly::int(1)).scale(&rat_int(-7));
        assert_eq!(poly_gcd(&f, &g), &x + &Poly::int(1));
    }
}
