//! The characteristic-class oracle against explicit formal roots.

use std::sync::Arc;

use proptest::prelude::*;

use contact_index::algebra::series::{euler_log_coefficients, Series};
use contact_index::oracle::{
    ch_from_chern, ch_lambda, cp_model, holomorphic_euler, todd_of, BundleClassData,
};
use contact_index::{BundleSpec, Rat, TruncElt, TruncRing, Variant};

/// `Q[y_1..y_r]` truncated in total degree `cap`.
fn roots_ring(r: usize, cap: u32) -> Arc<TruncRing> {
    TruncRing::with_cap(
        (1..=r).map(|i| format!("y{i}")).collect(),
        vec![cap; r],
        cap,
    )
}

fn elementary(ys: &[TruncElt], i: usize) -> TruncElt {
    let ring = ys[0].ring();
    let mut e = vec![TruncElt::one(ring)];
    for y in ys {
        let mut next = e.clone();
        for j in 1..e.len() + 1 {
            let add = &e[j - 1] * y;
            if j < next.len() {
                next[j] = &next[j] + &add;
            } else {
                next.push(add);
            }
        }
        e = next;
    }
    e.get(i).cloned().unwrap_or_else(|| TruncElt::zero(ring))
}

/// Polynomial `Σ c_j y^j` in one element.
fn eval(coeffs: &Series, y: &TruncElt) -> TruncElt {
    let mut out = TruncElt::zero(y.ring());
    let mut power = TruncElt::one(y.ring());
    for j in 0..coeffs.len() {
        out = &out + &power.scale(&coeffs.coeff(j));
        power = &power * y;
    }
    out
}

fn factorial(n: usize) -> Rat {
    (1..=n as i64).map(Rat::from_int).product()
}

fn exp_series(s: i64, len: usize) -> Series {
    Series(
        (0..len)
            .map(|j| Rat::from_int(s.pow(j as u32)) / factorial(j))
            .collect(),
    )
}

fn subsets(r: usize, p: usize, with_repeats: bool) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        r: usize,
        p: usize,
        rep: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            go(if rep { i } else { i + 1 }, r, p, rep, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, p, with_repeats, &mut Vec::new(), &mut out);
    out
}

/// Generators scaled by small integers so the roots are not all alike.
fn roots(r: usize, cap: u32, scales: &[i64]) -> Vec<TruncElt> {
    let ring = roots_ring(r, cap);
    (0..r)
        .map(|i| TruncElt::generator(&ring, i).scale(&Rat::from_int(scales[i])))
        .collect()
}

fn bundle(ys: &[TruncElt]) -> BundleClassData {
    let ring = ys[0].ring().clone();
    BundleClassData::new(&ring, (1..=ys.len()).map(|i| elementary(ys, i)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chern_character_matches_roots(r in 1usize..=3, scales in prop::collection::vec(-3i64..=3, 3)) {
        let cap = 4;
        let ys = roots(r, cap, &scales);
        let e = exp_series(1, cap as usize + 1);
        let expected = ys.iter().fold(TruncElt::zero(ys[0].ring()), |acc, y| &acc + &eval(&e, y));
        prop_assert_eq!(ch_from_chern(&bundle(&ys)), expected);
    }

    #[test]
    fn lambda_and_sym_match_roots(r in 1usize..=3, p in 0usize..=3, scales in prop::collection::vec(-3i64..=3, 3)) {
        let cap = 4;
        let ys = roots(r, cap, &scales);
        let b = bundle(&ys);
        let e = exp_series(-1, cap as usize + 1);
        let duals: Vec<TruncElt> = ys.iter().map(|y| eval(&e, y)).collect();
        for (variant, rep) in [(Variant::Exterior, false), (Variant::Sym, true)] {
            if variant == Variant::Exterior && p > r {
                prop_assert!(ch_lambda(&b, p, variant).is_err());
                continue;
            }
            let expected = subsets(r, p, rep).iter().fold(TruncElt::zero(&b.ring), |acc, s| {
                let term = s.iter().fold(TruncElt::one(&b.ring), |t, &i| &t * &duals[i]);
                &acc + &term
            });
            prop_assert_eq!(ch_lambda(&b, p, variant).unwrap(), expected);
        }
    }

    #[test]
    fn todd_matches_roots(r in 1usize..=3, scales in prop::collection::vec(-3i64..=3, 3)) {
        let cap = 4;
        let ys = roots(r, cap, &scales);
        // y / (1 - e^{-y}) = 1 / Σ (-1)^j y^j / (j+1)!
        let len = cap as usize + 1;
        let q = Series((0..len).map(|j| Rat::from_int(if j % 2 == 0 { 1 } else { -1 }) / factorial(j + 1)).collect());
        let td = q.inverse();
        let expected = ys.iter().fold(TruncElt::one(ys[0].ring()), |acc, y| &acc * &eval(&td, y));
        prop_assert_eq!(todd_of(&bundle(&ys)), expected);
    }

    #[test]
    fn alternating_exterior_sum(rank in 1usize..=3, dim in 1u32..=5, cs in prop::collection::vec(-4i64..=4, 3)) {
        // Σ (-1)^p ch ∧^p b* = c_r · Π (1 - e^{-y})/y
        let ring = TruncRing::single("x", dim);
        let chern: Vec<TruncElt> = (0..rank)
            .map(|i| TruncElt::monomial(&ring, vec![i as u32 + 1], Rat::from_int(cs[i])))
            .collect();
        let b = BundleClassData::new(&ring, chern);
        let lhs = (0..=rank).fold(TruncElt::zero(&ring), |acc, p| {
            let t = ch_lambda(&b, p, Variant::Exterior).unwrap();
            if p % 2 == 0 { &acc + &t } else { &acc - &t }
        });
        let s = euler_log_coefficients(dim as usize + 1);
        let sums = b.power_sums();
        let exponent = sums.iter().enumerate().skip(1)
            .fold(TruncElt::zero(&ring), |acc, (j, pj)| &acc + &pj.scale(&s.coeff(j)));
        let rhs = &b.chern[rank - 1] * &exponent.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn line_bundles_on_cp7() {
    // L = O(2), so χ(CP^7, L^{-k}) = binom(7 - 2k, 7)
    let model = cp_model(3).unwrap();
    for k in -1..=3 {
        let x = 7 - 2 * k;
        let expected = (0..7).fold(Rat::one(), |acc, i| acc * Rat::new(x - i, i + 1));
        let got = holomorphic_euler(&model, &BundleSpec::exterior(0, k)).unwrap();
        assert_eq!(got, expected, "k={k}");
    }
}
