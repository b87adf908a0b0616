//! The bijection `Φ: P_n → C_n(δ, γ) × P^0` and its inverse.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::colour::{Colour, DeltaGammaTable};
use crate::error::{Error, Result};
use crate::partition::{forbidden_centre, membership_violation, ColouredPartition, MembershipSpec, Part};

/// `(μ, ν)` with `μ ∈ C_n(δ, γ)` and `ν ∈ P^0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PartitionPair {
    pub mu: ColouredPartition,
    pub nu: ColouredPartition,
}

fn require(p: &ColouredPartition, spec: &MembershipSpec, what: &str) -> Result<()> {
    match membership_violation(p, spec)? {
        None => Ok(()),
        Some(v) => Err(Error::NotMember(format!("{what} {p}: {v}"))),
    }
}

fn nu_from_sizes(mut sizes: Vec<u32>) -> ColouredPartition {
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    ColouredPartition::new(sizes.into_iter().map(|s| Part::new(s, Colour::Free(0))).collect()).expect("sorted")
}

/// Free parts of `mu` that are centres of forbidden patterns.
fn forbidden_centres(mu: &[Part], table: &DeltaGammaTable) -> Vec<usize> {
    (0..mu.len())
        .filter(|&j| {
            let left = j.checked_sub(1).map(|k| mu[k]);
            forbidden_centre(left, mu[j], mu.get(j + 1).copied(), table).is_some()
        })
        .collect()
}

/// `Φ(λ)`.
pub fn phi(lambda: &ColouredPartition, table: &DeltaGammaTable) -> Result<PartitionPair> {
    require(lambda, &MembershipSpec::Pn(table.n()), "not in P_n:")?;
    let mut nu = Vec::new();
    // step 1
    let mut mu: Vec<Part> = Vec::with_capacity(lambda.len());
    for &p in lambda.parts() {
        if p.colour == Colour::Free(0) {
            nu.push(p.size);
        } else {
            mu.push(p);
        }
    }
    // step 2
    let mut mu2: Vec<Part> = Vec::with_capacity(mu.len());
    for p in mu {
        if p.colour.is_free() && mu2.last() == Some(&p) {
            nu.push(p.size);
        } else {
            mu2.push(p);
        }
    }
    // step 3
    loop {
        let centres = forbidden_centres(&mu2, table);
        if centres.is_empty() {
            break;
        }
        let mut drop = vec![false; mu2.len()];
        for j in centres {
            drop[j] = true;
            nu.push(mu2[j].size);
        }
        let mut k = 0;
        mu2.retain(|_| {
            k += 1;
            !drop[k - 1]
        });
    }
    Ok(PartitionPair { mu: ColouredPartition::new(mu2).expect("sub-partition"), nu: nu_from_sizes(nu) })
}

fn table_gamma(table: &DeltaGammaTable, c1: Colour, c2: Colour) -> Result<u8> {
    table.gamma(c1, c2).ok_or_else(|| Error::InvalidTable(format!("gamma({c1}, {c2}) is undefined")))
}

fn table_delta(table: &DeltaGammaTable, c: Colour) -> Result<u8> {
    table.delta(c).ok_or_else(|| Error::InvalidTable(format!("delta({c}) is undefined")))
}

/// Where the first `p_{a0b0}` of `ν` goes when `μ` has only bound parts of
/// size `p`, at indices `from..=to`.
fn inverse_step3(mu: &[Part], from: usize, to: usize, table: &DeltaGammaTable) -> Result<(Colour, Slot)> {
    let idx = |c: Colour| c.indices().expect("not the sentinel");
    for j in from..to {
        let ((k1, l1), (k2, l2)) = (idx(mu[j].colour), idx(mu[j + 1].colour));
        if k1 < l1 && k2 > l2 {
            return Ok((Colour::Free(table_gamma(table, mu[j].colour, mu[j + 1].colour)?), Slot::After(j)));
        }
    }
    let p = mu[from].size;
    if (from..=to).all(|j| {
        let (k, l) = idx(mu[j].colour);
        k > l
    }) {
        let c2 = mu[from].colour;
        let i = match from.checked_sub(1).map(|k| mu[k]) {
            Some(left) if left.size == p + 1 => {
                let (k1, l1) = idx(left.colour);
                if k1 <= l1 {
                    table_delta(table, c2)?
                } else {
                    table_gamma(table, left.colour, c2)?
                }
            }
            _ => table_delta(table, c2)?,
        };
        return Ok((Colour::Free(i), Slot::Before(from)));
    }
    if (from..=to).all(|j| {
        let (k, l) = idx(mu[j].colour);
        k < l
    }) {
        let c1 = mu[to].colour;
        let i = match mu.get(to + 1) {
            Some(right) if right.size + 1 == p => {
                let (k2, l2) = idx(right.colour);
                if k2 >= l2 {
                    table_delta(table, c1)?
                } else {
                    table_gamma(table, c1, right.colour)?
                }
            }
            _ => table_delta(table, c1)?,
        };
        return Ok((Colour::Free(i), Slot::After(to)));
    }
    Err(Error::NotMember(format!("parts of size {p} do not form an admissible run")))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Before(usize),
    After(usize),
}

/// `Φ^{-1}(μ, ν)`.
pub fn phi_inverse(pair: &PartitionPair, table: &DeltaGammaTable) -> Result<ColouredPartition> {
    require(&pair.mu, &MembershipSpec::Cn(table.clone()), "not in C_n:")?;
    require(&pair.nu, &MembershipSpec::P0, "not in P^0:")?;
    let mu = pair.mu.parts();
    let nu = pair.nu.parts();
    let mut before: Vec<Vec<Part>> = vec![Vec::new(); mu.len()];
    let mut after: Vec<Vec<Part>> = vec![Vec::new(); mu.len()];
    let mut plain: Vec<u32> = Vec::new();
    let mut k = 0;
    while k < nu.len() {
        let p = nu[k].size;
        let mut r = 0;
        while k < nu.len() && nu[k].size == p {
            r += 1;
            k += 1;
        }
        let Some(from) = mu.iter().position(|q| q.size == p) else {
            plain.extend(core::iter::repeat(p).take(r));
            continue;
        };
        let to = from + mu[from..].iter().take_while(|q| q.size == p).count() - 1;
        let (colour, slot) = match (from..=to).find(|&j| mu[j].colour.is_free()) {
            // inverse of step 2
            Some(j) => (mu[j].colour, Slot::After(j)),
            None => inverse_step3(mu, from, to, table)?,
        };
        let copies = core::iter::repeat(Part::new(p, colour)).take(r);
        match slot {
            Slot::Before(j) => before[j].extend(copies),
            Slot::After(j) => after[j].extend(copies),
        }
    }
    // inverse of step 1: the remaining sizes do not occur in μ
    let mut out = Vec::with_capacity(mu.len() + nu.len());
    let mut plain = plain.into_iter().peekable();
    for (j, &q) in mu.iter().enumerate() {
        while let Some(&s) = plain.peek() {
            if s < q.size {
                break;
            }
            out.push(Part::new(s, Colour::Free(0)));
            plain.next();
        }
        out.extend_from_slice(&before[j]);
        out.push(q);
        out.extend_from_slice(&after[j]);
    }
    out.extend(plain.map(|s| Part::new(s, Colour::Free(0))));
    let lambda = ColouredPartition::new(out)?;
    require(&lambda, &MembershipSpec::Pn(table.n()), "inverse produced a non-member")?;
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{builtin_delta_gamma, Variant};

    fn part(s: &str) -> ColouredPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let t = builtin_delta_gamma(Variant::MeurmanPrimc, 3).unwrap();
        let lambda = part(
            "8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+3[a1b0]\
             +2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]",
        );
        let pair = phi(&lambda, &t).unwrap();
        assert_eq!(pair.mu, part("8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0]"));
        assert_eq!(
            pair.nu,
            part("6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+2[a0b0]+1[a0b0]")
        );
        assert_eq!(phi_inverse(&pair, &t).unwrap(), lambda);
    }

    #[test]
    fn trivial_cases() {
        let t = builtin_delta_gamma(Variant::MeurmanPrimc, 3).unwrap();
        let nu = part("3[a0b0]+3[a0b0]+1[a0b0]");
        let pair = phi(&nu, &t).unwrap();
        assert_eq!(pair, PartitionPair { mu: ColouredPartition::empty(), nu: nu.clone() });
        assert_eq!(phi_inverse(&pair, &t).unwrap(), nu);
        let mu = part("8[a1b1]+6[a0b2]+5[a0b1]");
        assert_eq!(phi(&mu, &t).unwrap().nu, ColouredPartition::empty());
    }

    #[test]
    fn rejects_non_members() {
        let t = builtin_delta_gamma(Variant::MeurmanPrimc, 3).unwrap();
        assert!(phi(&part("2[a1b0]+2[a0b1]"), &t).is_err());
        let bad = PartitionPair { mu: part("3[a1b0]+2[a2b2]+2[a2b0]"), nu: ColouredPartition::empty() };
        assert!(phi_inverse(&bad, &t).is_err());
    }
}
