//! Closed forms against direct counts on the constructed families.

use num_bigint::BigInt;
use setfam::bounds::{
    binom, d2r_gap, d2r_layer_counts, d_even_overflow, d_odd5_upper_count, katona_bound, overflow_bound,
};
use setfam::constructions::{construct, Construction};
use setfam::search::{overflow_even_of, overflow_odd_of};

#[test]
fn d_even_overflow_matches_enumeration() {
    for n in 4..=14usize {
        for d in 2..=n / 2 {
            let f = construct(&Construction::DEven { n, d }).unwrap();
            assert!(f.is_u_union(2 * d));
            let direct = BigInt::from(f.iter().filter(|m| m.cardinality() > d).count());
            assert_eq!(d_even_overflow(n as i64, d as i64).unwrap(), direct, "n={n} d={d}");
            if 2 * d < n {
                assert_eq!(overflow_even_of(&f, d).unwrap(), direct);
            }
        }
    }
}

#[test]
fn d2r_layers_match_enumeration() {
    for n in 6..=14usize {
        for r in 3..=n / 2 {
            let f = construct(&Construction::D2r { n, r }).unwrap();
            assert!(f.is_u_union(2 * r));
            let profile = f.layer_profile();
            let layer = |s: usize| BigInt::from(profile.get(s).copied().unwrap_or(0));
            let counts = d2r_layer_counts(n as i64, r as i64).unwrap();
            for (i, c) in counts.iter().enumerate() {
                assert_eq!(*c, layer(r + i), "n={n} r={r} layer {}", r + i);
            }
            assert_eq!(layer(r + 4), BigInt::from(0));
            let upper: BigInt = (r..=n).map(layer).sum();
            assert_eq!(d2r_gap(n as i64, r as i64).unwrap(), upper - binom(n as i64, r as i64));
        }
    }
}

#[test]
fn d_odd5_upper_layers_match_enumeration() {
    for n in 5..=14usize {
        for r in 2..=(n - 1) / 2 {
            let f = construct(&Construction::DOdd5 { n, r }).unwrap();
            assert!(f.is_u_union(2 * r + 1));
            let direct = BigInt::from(f.iter().filter(|m| m.cardinality() > r).count());
            assert_eq!(d_odd5_upper_count(n as i64, r as i64).unwrap(), direct, "n={n} r={r}");
        }
    }
}

#[test]
fn named_overflows() {
    let b = construct(&Construction::BFamily { n: 6, d: 2 }).unwrap();
    assert_eq!(overflow_even_of(&b, 2).unwrap(), binom(4, 1));
    let g = construct(&Construction::GFamily { n: 8, d: 2 }).unwrap();
    let (v, x) = overflow_odd_of(&g, 2).unwrap();
    assert_eq!(v, binom(5, 1) * 2);
    assert_eq!(x, 1);
    let k = construct(&Construction::Katona { n: 8, u: 4 }).unwrap();
    assert_eq!(overflow_even_of(&k, 2).unwrap(), BigInt::from(0));
    assert_eq!(BigInt::from(k.len()), katona_bound(8, 4).unwrap());
    assert_eq!(overflow_bound(10, 6).unwrap().value(), &binom(8, 2));
}
