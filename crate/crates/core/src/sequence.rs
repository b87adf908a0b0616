//! Colour sequences: reduction to kernels, maximal primary subsequences,
//! insertion sites and the reconstruction `S(n_1, ..., n_{s+t})`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::colour::{Colour, Metric};
use crate::error::{Error, Result};

/// A finite sequence of real (non-sentinel) colours.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ColourSequence(Vec<Colour>);

impl ColourSequence {
    pub fn new(items: Vec<Colour>) -> Result<ColourSequence> {
        if items.iter().any(|c| c.is_sentinel()) {
            return Err(Error::UnexpectedSentinel);
        }
        Ok(ColourSequence(items))
    }

    pub fn empty() -> ColourSequence {
        ColourSequence(Vec::new())
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Colour> {
        self.0
    }

    /// Checks every colour against `n`.
    pub fn check(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|c| c.check(n))
    }

    /// Whether no reduction rule applies.
    pub fn is_reduced(&self) -> bool {
        first_removable(&self.0).is_none()
    }
}

impl Deref for ColourSequence {
    type Target = [Colour];

    fn deref(&self) -> &[Colour] {
        &self.0
    }
}

impl fmt::Display for ColourSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ColourSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColourSequence> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ColourSequence::empty());
        }
        let items = s.split(',').map(str::parse).collect::<Result<Vec<Colour>>>()?;
        ColourSequence::new(items)
    }
}

/// Which element of an adjacent pair a reduction rule removes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Removal {
    Second,
    First,
}

/// Rule 1: `(a_k b_l, a_l b_l)` loses its second colour.
/// Rule 2: `(a_k b_k, a_k b_l)` loses its first colour.
#[inline]
fn removal(c1: Colour, c2: Colour) -> Option<Removal> {
    if c2.is_free() && c1.b() == c2.a() {
        Some(Removal::Second)
    } else if c1.is_free() && c1.a() == c2.a() {
        Some(Removal::First)
    } else {
        None
    }
}

fn first_removable(items: &[Colour]) -> Option<usize> {
    items.windows(2).position(|w| removal(w[0], w[1]).is_some())
}

/// The reduction of `c`: the two removal rules applied until neither applies.
pub fn reduce(c: &ColourSequence) -> ColourSequence {
    let mut stack: Vec<Colour> = Vec::with_capacity(c.len());
    'next: for &x in c.iter() {
        while let Some(&top) = stack.last() {
            match removal(top, x) {
                Some(Removal::Second) => continue 'next,
                Some(Removal::First) => {
                    stack.pop();
                }
                None => break,
            }
        }
        stack.push(x);
    }
    ColourSequence(stack)
}

/// Every reduced sequence over `n` colour indices of length at most
/// `max_len`, shortest first.
pub fn reduced_sequences(n: usize, max_len: usize) -> Vec<ColourSequence> {
    let colours = crate::colour::all_colours(n);
    let mut layer: Vec<Vec<Colour>> = alloc::vec![Vec::new()];
    let mut out: Vec<ColourSequence> = alloc::vec![ColourSequence::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &c in &colours {
                if s.last().map_or(true, |&l| removal(l, c).is_none()) {
                    let mut t = s.clone();
                    t.push(c);
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned().map(ColourSequence));
        layer = next;
    }
    out
}

/// `(a_i b_k, a_k b_l)` with both colours bound.
#[inline]
pub fn is_primary_pair(c1: Colour, c2: Colour) -> bool {
    c1.is_bound() && c2.is_bound() && c1.b() == c2.a()
}

/// Where a free colour can be inserted into a kernel.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SitePosition {
    /// Immediately to the left of the kernel colour with this (0-based) index.
    Left(usize),
    /// Immediately to the right of the kernel colour with this (0-based) index.
    Right(usize),
}

/// How an insertion at a site changes the minimal partition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SiteClass {
    /// A repeated free colour or the interior of a primary pair.
    Neutral,
    /// Secondary insertion of type 0.
    Type0,
    /// Secondary insertion of type 1.
    Type1,
}

/// One insertion site `j` together with its free colour `f_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Site {
    pub position: SitePosition,
    pub colour: Colour,
    pub class: SiteClass,
    /// Index (0-based) of the maximal primary subsequence the site borders.
    pub owner: Option<usize>,
}

impl Site {
    /// Number of kernel colours to the left of the inserted colour.
    pub fn colours_to_the_left(&self) -> usize {
        match self.position {
            SitePosition::Left(i) => i,
            SitePosition::Right(i) => i + 1,
        }
    }
}

/// A reduced sequence with its maximal primary subsequences and its
/// `s + t` insertion sites in left-to-right order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelStructure {
    kernel: ColourSequence,
    spans: Vec<(usize, usize)>,
    sites: Vec<Site>,
}

impl KernelStructure {
    pub fn kernel(&self) -> &ColourSequence {
        &self.kernel
    }

    pub fn s(&self) -> usize {
        self.kernel.len()
    }

    pub fn t(&self) -> usize {
        self.spans.len()
    }

    /// 0-based inclusive index ranges of the maximal primary subsequences.
    pub fn spans(&self) -> &[(usize, usize)] {
        &self.spans
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// Number of sites of the given class.
    pub fn count(&self, class: SiteClass) -> usize {
        self.sites.iter().filter(|s| s.class == class).count()
    }

    /// `|T_0^u|` for every subsequence `u`.
    pub fn type0_per_span(&self) -> Vec<usize> {
        let mut v = alloc::vec![0; self.t()];
        for s in &self.sites {
            if let (SiteClass::Type0, Some(u)) = (s.class, s.owner) {
                v[u] += 1;
            }
        }
        v
    }
}

fn boundary_difference(metric: Metric, c1: Colour, c2: Colour) -> Result<u8> {
    if c1.is_sentinel() || c2.is_sentinel() {
        return Ok(1);
    }
    metric.eval(c1, c2)
}

/// Change in the minimal partition when `f` is inserted between `prev` and
/// `next` (either may be the sentinel): `d(prev, f) + d(f, next) − d(prev, next)`.
pub fn insertion_difference(metric: Metric, prev: Colour, f: Colour, next: Colour) -> Result<i32> {
    Ok(boundary_difference(metric, prev, f)? as i32 + boundary_difference(metric, f, next)? as i32
        - boundary_difference(metric, prev, next)? as i32)
}

/// Insertion-site structure of a reduced sequence under `Δ`.
pub fn kernel_structure(s: &ColourSequence) -> Result<KernelStructure> {
    kernel_structure_with(s, Metric::Delta)
}

/// Insertion-site structure of a reduced sequence, classifying secondary
/// sites with `metric`.
pub fn kernel_structure_with(s: &ColourSequence, metric: Metric) -> Result<KernelStructure> {
    if let Some(index) = first_removable(s) {
        return Err(Error::NotReduced { index });
    }
    let items = s.as_slice();
    let len = items.len();
    let mut spans = Vec::new();
    let mut i = 0;
    while i < len {
        if items[i].is_bound() {
            let start = i;
            while i + 1 < len && is_primary_pair(items[i], items[i + 1]) {
                i += 1;
            }
            spans.push((start, i));
        }
        i += 1;
    }
    let at = |i: isize| -> Colour {
        if i < 0 || i as usize >= len {
            Colour::Sentinel
        } else {
            items[i as usize]
        }
    };
    let classify = |prev: Colour, f: Colour, next: Colour| -> Result<SiteClass> {
        match insertion_difference(metric, prev, f, next)? {
            0 => Ok(SiteClass::Type0),
            1 => Ok(SiteClass::Type1),
            _ => Err(Error::InvalidArgument("secondary insertion outside {0, 1}")),
        }
    };
    let mut sites = Vec::with_capacity(len + spans.len());
    let mut span_iter = spans.iter().enumerate().peekable();
    let mut current: Option<(usize, usize, usize)> = None;
    for (i, &c) in items.iter().enumerate() {
        if let Some(&(u, &(start, end))) = span_iter.peek() {
            if start == i {
                span_iter.next();
                current = Some((u, start, end));
                let (k, _) = c.indices()?;
                let f = Colour::Free(k);
                sites.push(Site {
                    position: SitePosition::Left(i),
                    colour: f,
                    class: classify(at(i as isize - 1), f, c)?,
                    owner: Some(u),
                });
            }
        }
        let (_, l) = c.indices()?;
        let f = Colour::Free(l);
        let site = match current {
            Some((u, _, end)) if end == i => {
                current = None;
                Site {
                    position: SitePosition::Right(i),
                    colour: f,
                    class: classify(c, f, at(i as isize + 1))?,
                    owner: Some(u),
                }
            }
            _ => Site { position: SitePosition::Right(i), colour: f, class: SiteClass::Neutral, owner: None },
        };
        sites.push(site);
    }
    Ok(KernelStructure { kernel: s.clone(), spans, sites })
}

/// `S(n_1, ..., n_{s+t})`: inserts `f_j` `counts[j]` times at every site `j`.
pub fn insert(ks: &KernelStructure, counts: &[usize]) -> Result<ColourSequence> {
    if counts.len() != ks.sites.len() {
        return Err(Error::LengthMismatch { expected: ks.sites.len(), actual: counts.len() });
    }
    let total: usize = counts.iter().sum();
    let mut out = Vec::with_capacity(ks.s() + total);
    let mut j = 0;
    for (i, &c) in ks.kernel.iter().enumerate() {
        if let Some(site) = ks.sites.get(j) {
            if site.position == SitePosition::Left(i) {
                out.extend(core::iter::repeat(site.colour).take(counts[j]));
                j += 1;
            }
        }
        out.push(c);
        let site = &ks.sites[j];
        debug_assert_eq!(site.position, SitePosition::Right(i));
        out.extend(core::iter::repeat(site.colour).take(counts[j]));
        j += 1;
    }
    Ok(ColourSequence(out))
}

/// The kernel of `c` and the unique counts vector with `insert(kernel, counts) = c`.
///
/// Copies of a free colour that could belong either to the right site of
/// one kernel colour or the left site of the next are counted at the right
/// site. Under the site numbering of [`kernel_structure`] such an overlap
/// never occurs, so the matching below is unambiguous.
pub fn decompose(c: &ColourSequence) -> Result<(KernelStructure, Vec<usize>)> {
    let s = reduce(c);
    let ks = kernel_structure(&s)?;
    let mut counts = alloc::vec![0usize; ks.sites.len()];
    let items = c.as_slice();
    let mut p = 0;
    let mut j = 0;
    let take_run = |p: &mut usize, f: Colour| -> usize {
        let start = *p;
        while *p < items.len() && items[*p] == f {
            *p += 1;
        }
        *p - start
    };
    for (i, &k) in ks.kernel.iter().enumerate() {
        if j < ks.sites.len() && ks.sites[j].position == SitePosition::Left(i) {
            counts[j] = take_run(&mut p, ks.sites[j].colour);
            j += 1;
        }
        if items.get(p) != Some(&k) {
            return Err(Error::Parse(format!("cannot match kernel colour {k} at position {}", p + 1)));
        }
        p += 1;
        counts[j] = take_run(&mut p, ks.sites[j].colour);
        j += 1;
    }
    if p != items.len() {
        return Err(Error::Parse(format!("unmatched colour at position {}", p + 1)));
    }
    Ok((ks, counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> ColourSequence {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_example() {
        let c = seq("a1b1,a1b2,a2b2,a3b3,a3b1,a1b3,a3b3,a3b3,a3b2,a1b1");
        assert_eq!(reduce(&c), seq("a1b2,a3b1,a1b3,a3b2,a1b1"));
        assert_eq!(reduce(&seq("a1b1,a1b1")), seq("a1b1"));
        let s = seq("a1b2,a3b1,a1b3,a3b2,a1b1");
        assert_eq!(reduce(&s), s);
    }

    #[test]
    fn spans_example() {
        let ks = kernel_structure(&seq("a1b2,a2b3,a2b2,a1b4,a3b2,a2b1,a3b3,a2b2")).unwrap();
        assert_eq!(ks.t(), 3);
        assert_eq!(ks.spans(), &[(0, 1), (3, 3), (4, 5)]);
        assert_eq!(ks.sites().len(), 11);
    }

    #[test]
    fn singleton_bound() {
        let ks = kernel_structure(&seq("a1b0")).unwrap();
        assert_eq!((ks.s(), ks.t()), (1, 1));
        let cols: Vec<_> = ks.sites().iter().map(|s| s.colour).collect();
        assert_eq!(cols, vec![Colour::Free(1), Colour::Free(0)]);
    }

    #[test]
    fn left_insertion_example() {
        // a2b2 inserted between a0b1 and a2b0 is type 1
        let d = insertion_difference(Metric::Delta, seq("a0b1")[0], Colour::Free(2), seq("a2b0")[0]);
        assert_eq!(d.unwrap(), 1);
    }

    #[test]
    fn insert_example() {
        let s = seq("a1b2,a3b1,a2b2,a4b3,a3b2");
        let ks = kernel_structure(&s).unwrap();
        assert_eq!(ks.sites().len(), 8);
        let c = insert(&ks, &[2, 1, 3, 0, 1, 0, 0, 0]).unwrap();
        let expected = seq("a1b1,a1b1,a1b2,a2b2,a3b3,a3b3,a3b3,a3b1,a2b2,a2b2,a4b3,a3b2");
        assert_eq!(c, expected);
        let (ks2, counts) = decompose(&expected).unwrap();
        assert_eq!(ks2.kernel(), &s);
        assert_eq!(counts, vec![2, 1, 3, 0, 1, 0, 0, 0]);
        assert_eq!(insert(&ks, &[0; 8]).unwrap(), s);
        assert!(insert(&ks, &[0; 7]).is_err());
    }

    #[test]
    fn kernel_structure_rejects_unreduced() {
        assert_eq!(kernel_structure(&seq("a1b2,a2b2")), Err(Error::NotReduced { index: 0 }));
    }
}
