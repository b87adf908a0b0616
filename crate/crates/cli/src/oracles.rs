//! Classical partition counts, computed by direct recurrences.

/// Partitions of `m` into parts from `allowed`, each used any number of times.
fn unrestricted(max: usize, allowed: impl Fn(usize) -> bool) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for part in (1..=max).filter(|&p| allowed(p)) {
        for m in part..=max {
            c[m] += c[m - part];
        }
    }
    c
}

/// `p(0), ..., p(max)`.
pub fn partition_numbers(max: usize) -> Vec<u64> {
    unrestricted(max, |_| true)
}

/// Partitions of `m` with no part divisible by `n`.
pub fn regular_partitions(n: usize, max: usize) -> Vec<u64> {
    unrestricted(max, |p| p % n != 0)
}

/// Partitions of `m` into distinct parts not congruent to ±1 mod 6.
pub fn capparelli_d(max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for part in (1..=max).filter(|p| p % 6 != 1 && p % 6 != 5) {
        for m in (part..=max).rev() {
            c[m] += c[m - part];
        }
    }
    c
}

/// Partitions of `m` into parts greater than 1 where consecutive parts
/// differ by at least 2, and by at least 4 unless their sum is divisible by 3.
pub fn capparelli_c(max: usize) -> Vec<u64> {
    fn rec(last: usize, left: usize, base: usize, out: &mut [u64]) {
        // `last` is the smallest part so far; the next one is smaller
        for p in 2..=left.min(last.saturating_sub(2)) {
            let gap = last - p;
            if gap >= 4 || (gap >= 2 && (last + p) % 3 == 0) {
                out[base + p] += 1;
                rec(p, left - p, base + p, out);
            }
        }
    }
    let mut out = vec![0u64; max + 1];
    out[0] = 1;
    for first in 2..=max {
        out[first] += 1;
        rec(first, max - first, first, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(partition_numbers(9), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(regular_partitions(3, 10), [1, 1, 2, 2, 4, 5, 7, 9, 13, 16, 22]);
        assert_eq!(regular_partitions(2, 8), [1, 1, 1, 2, 2, 3, 4, 5, 6]);
        // distinct parts from {2, 3, 4, 6, 8, 9, 10, ...}
        assert_eq!(capparelli_d(10), [1, 0, 1, 1, 1, 1, 2, 1, 2, 3, 3]);
        assert_eq!(capparelli_c(40), capparelli_d(40));
    }
}
