//! Exact order statistics over small integer multisets.

use num_rational::Ratio;

/// Exact non-negative rational.
pub type Fraction = Ratio<u64>;

/// Median of an already sorted slice; the two middle values are averaged
/// when the length is even.
pub fn median_sorted(sorted: &[u64]) -> Option<Fraction> {
    let len = sorted.len();
    if len == 0 {
        return None;
    }
    let mid = len / 2;
    Some(if len % 2 == 1 {
        Fraction::from_integer(sorted[mid])
    } else {
        Fraction::new(sorted[mid - 1] + sorted[mid], 2)
    })
}

/// Median of the multiset in which value `j + 1` occurs `counts[j]` times.
pub fn median_of_histogram(counts: &[u64]) -> Option<Fraction> {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return None;
    }
    let nth = |k: u64| -> u64 {
        let mut seen = 0;
        for (j, &c) in counts.iter().enumerate() {
            seen += c;
            if seen > k {
                return j as u64 + 1;
            }
        }
        unreachable!("k < total")
    };
    Some(if total % 2 == 1 {
        Fraction::from_integer(nth(total / 2))
    } else {
        Fraction::new(nth(total / 2 - 1) + nth(total / 2), 2)
    })
}

pub fn to_f64(x: Fraction) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
