//! `n^2`-coloured Frobenius partitions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use crate::colour::{Colour, MAX_N};
use crate::error::{Error, Result};
use crate::qseries::Monomial;
use crate::sequence::{reduce, ColourSequence};

/// One entry of a row: a non-negative value and a symbol index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub value: u32,
    pub index: u8,
}

impl Entry {
    pub const fn new(value: u32, index: u8) -> Entry {
        Entry { value, index }
    }

    /// At equal values `a_{n-1} < ... < a_0`.
    fn top_key(self) -> (u32, Reverse<u8>) {
        (self.value, Reverse(self.index))
    }

    /// At equal values `b_0 < ... < b_{n-1}`.
    fn bottom_key(self) -> (u32, u8) {
        (self.value, self.index)
    }
}

/// A two-rowed array with strictly decreasing coloured rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FrobeniusPartition {
    top: Vec<Entry>,
    bottom: Vec<Entry>,
}

impl FrobeniusPartition {
    pub fn new(top: Vec<Entry>, bottom: Vec<Entry>) -> Result<FrobeniusPartition> {
        if top.len() != bottom.len() {
            return Err(Error::LengthMismatch { expected: top.len(), actual: bottom.len() });
        }
        for j in 1..top.len() {
            if top[j - 1].top_key() <= top[j].top_key() || bottom[j - 1].bottom_key() <= bottom[j].bottom_key() {
                return Err(Error::NotAFrobeniusSymbol { index: j });
            }
        }
        Ok(FrobeniusPartition { top, bottom })
    }

    pub fn empty() -> FrobeniusPartition {
        FrobeniusPartition::default()
    }

    pub fn top(&self) -> &[Entry] {
        &self.top
    }

    pub fn bottom(&self) -> &[Entry] {
        &self.bottom
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// `s + Σ λ_i + Σ μ_i`.
    pub fn weight(&self) -> u64 {
        weight_of(&self.top, &self.bottom)
    }

    /// `(c(λ_1)c(μ_1), ..., c(λ_s)c(μ_s))`.
    pub fn colours(&self) -> ColourSequence {
        ColourSequence::new(self.top.iter().zip(&self.bottom).map(|(t, b)| Colour::new(t.index, b.index)).collect())
            .expect("no sentinel")
    }

    /// Checks that all symbol indices are below `n`.
    pub fn check(&self, n: usize) -> Result<()> {
        for (t, b) in self.top.iter().zip(&self.bottom) {
            Colour::new(t.index, b.index).check(n)?;
        }
        Ok(())
    }
}

fn weight_of(top: &[Entry], bottom: &[Entry]) -> u64 {
    top.len() as u64 + top.iter().chain(bottom).map(|e| e.value as u64).sum::<u64>()
}

impl fmt::Display for FrobeniusPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |f: &mut fmt::Formatter<'_>, r: &[Entry], sym: char| -> fmt::Result {
            for (j, e) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}{sym}{}", e.value, e.index)?;
            }
            Ok(())
        };
        f.write_str("(")?;
        row(f, &self.top, 'a')?;
        f.write_str(" | ")?;
        row(f, &self.bottom, 'b')?;
        f.write_str(")")
    }
}

fn parse_row(s: &str, sym: char) -> Result<Vec<Entry>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (v, i) = tok.split_once(sym).ok_or_else(|| Error::Parse(format!("bad entry {tok:?}")))?;
            let value = v.parse().map_err(|_| Error::Parse(format!("bad value in {tok:?}")))?;
            let index: u8 = i.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
            if index as usize >= MAX_N {
                return Err(Error::Parse(format!("index too large in {tok:?}")));
            }
            Ok(Entry { value, index })
        })
        .collect()
}

impl FromStr for FrobeniusPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<FrobeniusPartition> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (top | bottom), got {s:?}")))?;
        let (t, b) = inner.split_once('|').ok_or_else(|| Error::Parse(format!("missing '|' in {s:?}")))?;
        FrobeniusPartition::new(parse_row(t, 'a')?, parse_row(b, 'b')?)
    }
}

/// The reduction of the colour sequence.
pub fn frob_kernel(f: &FrobeniusPartition) -> ColourSequence {
    reduce(&f.colours())
}

/// The symbol of least weight with colour sequence `c`.
pub fn minimal_frobenius(c: &ColourSequence) -> Result<FrobeniusPartition> {
    let s = c.len();
    let mut top = vec![Entry::new(0, 0); s];
    let mut bottom = vec![Entry::new(0, 0); s];
    for j in (0..s).rev() {
        let (a, b) = c[j].indices()?;
        let (tv, bv) = if j + 1 < s {
            let (a2, b2) = c[j + 1].indices()?;
            (top[j + 1].value + (a >= a2) as u32, bottom[j + 1].value + (b <= b2) as u32)
        } else {
            (0, 0)
        };
        top[j] = Entry::new(tv, a);
        bottom[j] = Entry::new(bv, b);
    }
    FrobeniusPartition::new(top, bottom)
}

/// Symbol counts of a Frobenius partition.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FrobStatistics {
    pub weight: u64,
    /// Occurrences of `a_i`.
    pub u: Vec<usize>,
    /// Occurrences of `b_i`.
    pub v: Vec<usize>,
    /// Occurrences of `a_i` in bound columns.
    pub bound_u: Vec<usize>,
    /// Occurrences of `b_i` in bound columns.
    pub bound_v: Vec<usize>,
}

pub fn frob_statistics(f: &FrobeniusPartition, n: usize) -> Result<FrobStatistics> {
    f.check(n)?;
    let mut st = FrobStatistics {
        weight: f.weight(),
        u: vec![0; n],
        v: vec![0; n],
        bound_u: vec![0; n],
        bound_v: vec![0; n],
    };
    for (t, b) in f.top.iter().zip(&f.bottom) {
        st.u[t.index as usize] += 1;
        st.v[b.index as usize] += 1;
        if t.index != b.index {
            st.bound_u[t.index as usize] += 1;
            st.bound_v[b.index as usize] += 1;
        }
    }
    Ok(st)
}

/// `∏ a_i b_k` over the bound colours `a_i b_k`, with `a_i` as variable `i`
/// and `b_k` as variable `n + k`.
pub fn bound_monomial(colours: impl IntoIterator<Item = Colour>, n: usize) -> Monomial {
    colours.into_iter().fold(Monomial::ONE, |m, c| match c {
        Colour::Bound(i, k) => m.mul(Monomial::var(i as usize, 1)).mul(Monomial::var(n + k as usize, 1)),
        _ => m,
    })
}

/// All strictly decreasing rows, grouped by length and value sum.
struct Rows {
    // rows[len][sum] lists rows of that length and value sum
    rows: Vec<Vec<Vec<Vec<Entry>>>>,
}

fn rows(n: usize, max_len: usize, max_sum: u32, top: bool) -> Rows {
    let mut out = Rows { rows: vec![vec![Vec::new(); max_sum as usize + 1]; max_len + 1] };
    // tokens in increasing order; key = value * n + rank
    let token = |key: u32| -> Entry {
        let (value, rank) = (key / n as u32, (key % n as u32) as u8);
        let index = if top { n as u8 - 1 - rank } else { rank };
        Entry::new(value, index)
    };
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        stack: &mut Vec<u32>,
        below: u32,
        sum: u32,
        n: u32,
        max_len: usize,
        max_sum: u32,
        out: &mut Rows,
        token: &dyn Fn(u32) -> Entry,
    ) {
        out.rows[stack.len()][sum as usize].push(stack.iter().rev().map(|&k| token(k)).collect());
        if stack.len() == max_len {
            return;
        }
        let mut key = below;
        loop {
            let v = key / n;
            if sum + v > max_sum {
                break;
            }
            stack.push(key);
            rec(stack, key + 1, sum + v, n, max_len, max_sum, out, token);
            stack.pop();
            key += 1;
        }
    }
    rec(&mut stack, 0, 0, n as u32, max_len, max_sum, &mut out, &token);
    out
}

/// Visits every symbol of weight at most `max_weight` exactly once, ordered
/// by number of columns, then by the top row's value sum.
pub fn for_each_frobenius<F: FnMut(&[Entry], &[Entry])>(n: usize, max_weight: u64, mut f: F) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidN(n));
    }
    let w = max_weight as usize;
    // s columns need weight at least s + 2 * (0 + ... ) ≥ s
    let max_len = w;
    let max_sum = w as u32;
    let top = rows(n, max_len, max_sum, true);
    let bottom = rows(n, max_len, max_sum, false);
    for s in 0..=max_len {
        for ts in 0..=w - s {
            for t in &top.rows[s][ts] {
                for bs in 0..=(w - s - ts) {
                    for b in &bottom.rows[s][bs] {
                        f(t, b);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Every symbol of weight at most `max_weight`, in the order of
/// [`for_each_frobenius`].
pub fn enumerate_frobenius(n: usize, max_weight: u64) -> Result<Vec<FrobeniusPartition>> {
    let mut out = Vec::new();
    for_each_frobenius(n, max_weight, |t, b| out.push(FrobeniusPartition { top: t.to_vec(), bottom: b.to_vec() }))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::Metric;
    use crate::partition::minimal_weight;

    #[test]
    fn weight_18_example() {
        let f: FrobeniusPartition = "(3a1,2a0,0a1,0a2 | 4b2,4b0,1b0,0b1)".parse().unwrap();
        assert_eq!(f.weight(), 18);
        assert_eq!(f.colours().to_string(), "a1b2,a0b0,a1b0,a2b1");
        let st = frob_statistics(&f, 3).unwrap();
        assert_eq!(st.u, [1, 2, 1]);
        assert_eq!(st.v, [2, 1, 1]);
        assert_eq!(st.bound_u, [0, 2, 1]);
        assert_eq!(st.bound_v, [1, 1, 1]);
        assert_eq!(f.to_string(), "(3a1,2a0,0a1,0a2 | 4b2,4b0,1b0,0b1)");
    }

    #[test]
    fn row_orders() {
        // 0_{a1} < 0_{a0} and 0_{b0} < 0_{b1}
        assert!("(0a0,0a1 | 1b0,0b0)".parse::<FrobeniusPartition>().is_ok());
        assert!("(0a1,0a0 | 1b0,0b0)".parse::<FrobeniusPartition>().is_err());
        assert!("(1a0,0a0 | 0b1,0b0)".parse::<FrobeniusPartition>().is_ok());
        assert!("(1a0,0a0 | 0b0,0b1)".parse::<FrobeniusPartition>().is_err());
    }

    #[test]
    fn empty_symbol() {
        let list = enumerate_frobenius(2, 0).unwrap();
        assert_eq!(list, [FrobeniusPartition::empty()]);
        let st = frob_statistics(&FrobeniusPartition::empty(), 2).unwrap();
        assert_eq!(st.weight, 0);
        assert_eq!(st.u, [0, 0]);
        let one: FrobeniusPartition = "(0a0 | 0b0)".parse().unwrap();
        let st = frob_statistics(&one, 1).unwrap();
        assert_eq!((st.weight, st.bound_u.clone(), st.bound_v.clone()), (1, vec![0], vec![0]));
    }

    #[test]
    fn durfee_counts() {
        let mut counts = [0u32; 13];
        for_each_frobenius(1, 12, |t, b| counts[weight_of(t, b) as usize] += 1).unwrap();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn minimal_single_column() {
        let c: ColourSequence = "a1b2".parse().unwrap();
        let f = minimal_frobenius(&c).unwrap();
        assert_eq!(f.to_string(), "(0a1 | 0b2)");
        assert_eq!(f.weight(), minimal_weight(&c, Metric::DeltaPrime).unwrap());
    }
}
