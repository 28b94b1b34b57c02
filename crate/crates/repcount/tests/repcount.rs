use std::fs;

use rug::Integer;
use su3_repcount::*;

fn ints(v: &[u64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

#[test]
fn published_initial_values() {
    let want = ints(&[1, 1, 1, 3, 3, 3, 8, 8, 9, 17, 19, 21, 35, 39]);
    assert_eq!(expand_r(13).coeffs, want);
    for n in [13, 14, 50, 200] {
        assert_eq!(expand_r(n).coeffs[..14], want[..], "N = {n}");
    }
    assert_eq!(expand_r(0).coeffs, ints(&[1]));
}

#[test]
fn small_multiplicities() {
    assert_eq!(multiplicities(1).unwrap().get(1), 1);
    assert_eq!(multiplicities(3).unwrap().get(3), 2);
    let a = multiplicities(10).unwrap();
    // 1 = d(1,1), 3 = d(1,2), 6 = d(1,3), 8 = d(2,2), 10 = d(1,4)
    assert_eq!(a.a, vec![0, 1, 0, 2, 0, 0, 2, 0, 1, 0, 2]);
    assert!(multiplicities(0).is_err());
}

// Multiplicities from an unbounded scan of all ordered pairs.
#[test]
fn multiplicities_against_a_plain_scan() {
    let n = 2000usize;
    let mut want = vec![0u32; n + 1];
    for j in 1..=n as u64 {
        for k in 1..=n as u64 {
            let d = j * k * (j + k) / 2;
            if d <= n as u64 {
                want[d as usize] += 1;
            }
        }
    }
    assert_eq!(multiplicities(n).unwrap().a, want);
}

/// Multisets of irreducibles of total dimension n, by depth-first search
/// over the irreducibles sorted by dimension.
fn brute_force(n: u64) -> u64 {
    let mut dims = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            let d = dimension(j, k);
            if d <= n {
                dims.push(d);
            }
        }
    }
    dims.sort_unstable();
    fn go(dims: &[u64], start: usize, left: u64) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in start..dims.len() {
            if dims[i] > left {
                break;
            }
            total += go(dims, i, left - dims[i]);
        }
        total
    }
    go(&dims, 0, n)
}

#[test]
fn dp_matches_exhaustive_enumeration() {
    let r = expand_r(60);
    for n in 0..=60 {
        assert_eq!(r.coeffs[n as usize], brute_force(n), "n = {n}");
    }
}

#[test]
fn factor_order_is_irrelevant() {
    assert_eq!(expand_r_ordered(3000, FactorOrder::Ascending), expand_r_ordered(3000, FactorOrder::Descending));
}

// Σ_{m ≤ N} a_m ≈ c N^{2/3}; the ratio climbs and settles.
#[test]
fn irreducible_count_grows_like_two_thirds_power() {
    let ratios: Vec<f64> = [1_000usize, 10_000, 100_000]
        .iter()
        .map(|&n| multiplicities(n).unwrap().total() as f64 / (n as f64).powf(2.0 / 3.0))
        .collect();
    assert!(ratios[0] < ratios[1] && ratios[1] < ratios[2], "{ratios:?}");
    assert!((ratios[2] - ratios[1]) / ratios[2] < 0.1, "{ratios:?}");
    // Σ a_m m^{-s} = 2^s ω(s), so the poles at 2/3 and 1/2 give
    // (3/2) 2^{2/3} Res_{2/3} ω N^{2/3} + 2^{3/2} ζ(1/2) N^{1/2}
    let g13 = 2.678_938_534_707_747_6_f64;
    let zeta_half = -1.460_354_508_809_586_8_f64;
    let c1 = 1.5 * 2f64.powf(2.0 / 3.0) * g13.powi(3) / (2.0 * std::f64::consts::PI * 3f64.sqrt());
    let c2 = 2f64.powf(1.5) * zeta_half;
    for (r, n) in ratios.iter().zip([1e3f64, 1e4, 1e5]) {
        let predicted = c1 + c2 * n.powf(-1.0 / 6.0);
        assert!((r - predicted).abs() < 0.02 * predicted, "N = {n}: {r} vs {predicted}");
    }
}

#[test]
fn cache_round_trip_and_hit() {
    let dir = tempfile::tempdir().unwrap();
    let s = load_or_compute(100, dir.path()).unwrap();
    assert_eq!(s, expand_r(100));
    let path = cache_path(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("su3-rcount v1 N=100\n0\t1\n1\t1\n2\t1\n3\t3\n"));
    // a hit leaves the file untouched and truncates
    let before = fs::metadata(&path).unwrap().modified().unwrap();
    let t = load_or_compute(50, dir.path()).unwrap();
    assert_eq!(t, expand_r(50));
    assert_eq!(fs::metadata(&path).unwrap().modified().unwrap(), before);
    assert_eq!(fs::read_to_string(&path).unwrap(), text);
    // a miss extends the cache
    let u = load_or_compute(150, dir.path()).unwrap();
    assert_eq!(u.n(), 150);
    assert_eq!(load_cached(dir.path()).unwrap().unwrap().n(), 150);
}

#[test]
fn corrupt_caches_are_rejected_with_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let path = cache_path(dir.path());
    let cases: [(&str, usize); 5] = [
        ("su3-rcount v2 N=2\n0\t1\n1\t1\n2\t1\n", 0),
        ("su3-rcount v1 N=2\n0\t1\n1\t1\n3\t1\n", 26),
        ("su3-rcount v1 N=2\n0\t1\n1\tx\n2\t1\n", 24),
        ("su3-rcount v1 N=3\n0\t1\n1\t1\n2\t1\n", 30),
        ("su3-rcount v1 N=1\n0\t1\n1 1\n", 22),
    ];
    for (text, want) in cases {
        fs::write(&path, text).unwrap();
        match load_or_compute(2, dir.path()) {
            Err(RepcountError::CacheCorrupt { offset, .. }) => assert_eq!(offset, want, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn digit_count() {
    assert_eq!(decimal_digits(&Integer::from(39)), 2);
    assert_eq!(decimal_digits(&Integer::from(1000)), 4);
    assert_eq!(decimal_digits(&Integer::new()), 1);
}

#[test]
fn sparse_support_matches_dense_table() {
    let dense = multiplicities(50_000).unwrap();
    let sparse = dimension_support(50_000);
    let from_dense: Vec<(u64, u32)> = dense.support().map(|(m, c)| (m as u64, c)).collect();
    assert_eq!(sparse, from_dense);
}
