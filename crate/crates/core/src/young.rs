//! Partitions, diagram statistics, and chains of nested shapes.
//!
//! Boxes are addressed 1-based as (row, col). For a box x = (r, c) of
//! the diagram of lambda:
//!
//! - arm   a(x)  = lambda_r - c          (boxes to the right)
//! - leg   l(x)  = lambda'_c - r         (boxes below)
//! - coarm a'(x) = c - 1, coleg l'(x) = r - 1
//! - weight chi(x) = q^(c-1) * t^(r-1)
//!
//! The hook products collected by [`hook_products`] are
//!
//! - h  = prod (1 - q^a t^(l+1)),  h' = prod (1 - q^(a+1) t^l)
//! - g  = prod (1 - q^a t^(-l-1)) (1 - q^(-a-1) t^l),  g~ = g with t -> 1/t
//! - w  = prod (q^a - t^(l+1)) (t^l - q^(a+1))
//! - n(lambda) = sum (r-1) lambda_r = sum of colegs
//! - B = sum chi(x),  Pi = prod over chi(x) != 1 of (1 - chi(x))

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{Laurent, Mono};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("box ({0}, {1}) lies outside the diagram")]
    BoxOutsideDiagram(u32, u32),
    #[error("partition {0} is not contained in {1}")]
    NotContained(String, String),
    #[error("parts must be positive and weakly decreasing: {0}")]
    InvalidPartition(String),
}

/// An integer partition, stored as its positive parts in weakly
/// decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validate and build; trailing zeros are stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, YoungError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(YoungError::InvalidPartition(format!("{:?}", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Shorthand for tests and tables; panics on invalid input.
    pub fn of(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The r-th part, 1-based; zero beyond the last row.
    pub fn part(&self, r: u32) -> u32 {
        if r == 0 {
            return 0;
        }
        self.0.get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let rows = self.0.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// All boxes as 1-based (row, col), row-major.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (r, &p) in self.0.iter().enumerate() {
            for c in 1..=p {
                out.push((r as u32 + 1, c));
            }
        }
        out
    }

    /// Containment of diagrams, row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i as u32 + 1) >= p)
    }

    /// n(lambda) = sum (r-1) lambda_r.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Partial-sum vector padded to |lambda| entries; lexicographic
    /// comparison of these keys refines the dominance order.
    pub fn dominance_key(&self) -> Vec<u32> {
        let n = self.size() as usize;
        let mut sums = Vec::with_capacity(n);
        let mut acc = 0;
        for i in 0..n {
            acc += self.part(i as u32 + 1);
            sums.push(acc);
        }
        sums
    }

    /// All partitions of n, first part largest first.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                prefix.push(next);
                rec(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Boxes whose removal leaves a partition: the last box of each row
    /// that is strictly longer than the next row.
    pub fn removable_boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            let below = self.0.get(i + 1).copied().unwrap_or(0);
            if p > below {
                out.push((i as u32 + 1, p));
            }
        }
        out
    }

    /// Remove the last box of row r (1-based); the caller guarantees the
    /// result is a partition.
    pub fn remove_box(&self, r: u32) -> Partition {
        let mut parts = self.0.clone();
        parts[r as usize - 1] -= 1;
        Partition::new(parts).expect("removal preserves partition shape")
    }

    /// Boxes whose addition gives a partition.
    pub fn addable_boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let here = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { u32::MAX } else { self.0[i - 1] };
            if here < above {
                out.push((i as u32 + 1, here + 1));
            }
        }
        out
    }

    /// Add a box at the end of row r (1-based), extending by a new row if
    /// needed; the caller guarantees the result is a partition.
    pub fn add_box(&self, r: u32) -> Partition {
        let mut parts = self.0.clone();
        if (r as usize) > parts.len() {
            parts.push(1);
        } else {
            parts[r as usize - 1] += 1;
        }
        Partition::new(parts).expect("addition preserves partition shape")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = YoungError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| YoungError::InvalidPartition(s.to_string()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| YoungError::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Arm, leg, coarm, coleg, and weight of one box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxStats {
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
    pub chi: Mono,
}

/// Statistics of the box (row, col), 1-based.
pub fn box_stats(shape: &Partition, cell: (u32, u32)) -> Result<BoxStats, YoungError> {
    let (r, c) = cell;
    if r == 0 || c == 0 || shape.part(r) < c {
        return Err(YoungError::BoxOutsideDiagram(r, c));
    }
    let col_len = shape.parts().iter().filter(|&&p| p >= c).count() as u32;
    Ok(BoxStats {
        arm: shape.part(r) - c,
        leg: col_len - r,
        coarm: c - 1,
        coleg: r - 1,
        chi: Mono::qt(c as i32 - 1, r as i32 - 1),
    })
}

/// The hook products and diagram sums listed in the module docs,
/// computed in one pass over the boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookProducts {
    pub h: Laurent,
    pub h_prime: Laurent,
    pub g: Laurent,
    pub g_tilde: Laurent,
    pub w: Laurent,
    pub n_stat: u64,
    pub pi: Laurent,
    pub b: Laurent,
}

pub fn hook_products(shape: &Partition) -> HookProducts {
    let mut h = Laurent::one();
    let mut h_prime = Laurent::one();
    let mut g = Laurent::one();
    let mut g_tilde = Laurent::one();
    let mut w = Laurent::one();
    let mut pi = Laurent::one();
    let mut b = Laurent::zero();
    for cell in shape.cells() {
        let s = box_stats(shape, cell).expect("cell of own diagram");
        let (a, l) = (s.arm as i32, s.leg as i32);
        let term = |eq: i32, et: i32| &Laurent::one() - &Laurent::mono(Mono::qt(eq, et));
        h = &h * &term(a, l + 1);
        h_prime = &h_prime * &term(a + 1, l);
        g = &g * &(&term(a, -l - 1) * &term(-a - 1, l));
        g_tilde = &g_tilde * &(&term(a, l + 1) * &term(-a - 1, -l));
        let wf = &(&Laurent::mono(Mono::q(a)) - &Laurent::mono(Mono::t(l + 1)))
            * &(&Laurent::mono(Mono::t(l)) - &Laurent::mono(Mono::q(a + 1)));
        w = &w * &wf;
        b += &Laurent::mono(s.chi);
        if !s.chi.is_one() {
            pi = &pi * &(&Laurent::one() - &Laurent::mono(s.chi));
        }
    }
    HookProducts {
        h,
        h_prime,
        g,
        g_tilde,
        w,
        n_stat: shape.n_stat(),
        pi,
        b,
    }
}

/// The diagonal monomial q^(n(lambda')) t^(n(lambda)).
pub fn nabla_eigenvalue(shape: &Partition) -> Mono {
    Mono::qt(
        shape.conjugate().n_stat() as i32,
        shape.n_stat() as i32,
    )
}

/// A chain of nested partitions growing one box at a time, recorded
/// together with the weight chi of each added box.
///
/// The chain runs from the inner shape to the outer shape in addition
/// order; [`Tableau::removal_weights`] reverses it for formulas that
/// consume boxes from the outside in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    chain: Vec<Partition>,
    weights: Vec<Mono>,
}

impl Tableau {
    /// Number of boxes added along the chain.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The outer shape.
    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain is never empty")
    }

    /// The inner shape the chain starts from.
    pub fn base(&self) -> &Partition {
        self.chain.first().expect("chain is never empty")
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Weights chi of the added boxes, in addition order.
    pub fn weights(&self) -> &[Mono] {
        &self.weights
    }

    /// Weights in removal order: entry 0 is the box removed first when
    /// shrinking the outer shape back to the inner one, which is the box
    /// added last.
    pub fn removal_weights(&self) -> Vec<Mono> {
        self.weights.iter().rev().copied().collect()
    }
}

/// All chains of partitions from `inner` to `outer` adding one box per
/// step. With `inner` empty these are exactly the standard Young
/// tableaux of shape `outer`.
pub fn enumerate_tableaux(
    inner: &Partition,
    outer: &Partition,
) -> Result<Vec<Tableau>, YoungError> {
    if !outer.contains(inner) {
        return Err(YoungError::NotContained(
            inner.to_string(),
            outer.to_string(),
        ));
    }
    let mut out = Vec::new();
    let mut chain = vec![inner.clone()];
    let mut weights = Vec::new();
    fn rec(
        outer: &Partition,
        chain: &mut Vec<Partition>,
        weights: &mut Vec<Mono>,
        out: &mut Vec<Tableau>,
    ) {
        let current = chain.last().unwrap().clone();
        if &current == outer {
            out.push(Tableau {
                chain: chain.clone(),
                weights: weights.clone(),
            });
            return;
        }
        for (r, c) in current.addable_boxes() {
            if outer.part(r) >= c {
                chain.push(current.add_box(r));
                weights.push(Mono::qt(c as i32 - 1, r as i32 - 1));
                rec(outer, chain, weights, out);
                chain.pop();
                weights.pop();
            }
        }
    }
    rec(outer, &mut chain, &mut weights, &mut out);
    Ok(out)
}

/// Number of standard Young tableaux by the hook length formula, as an
/// independent check on chain enumeration.
pub fn tableaux_count_by_hooks(shape: &Partition) -> u64 {
    let n = shape.size() as u64;
    let mut numer: u128 = 1;
    for k in 1..=n {
        numer *= k as u128;
    }
    let mut hooks: u128 = 1;
    for cell in shape.cells() {
        let s = box_stats(shape, cell).expect("cell of own diagram");
        hooks *= (s.arm + s.leg + 1) as u128;
    }
    (numer / hooks) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_laurent, Substitution};

    #[test]
    fn constructor_validates() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0]).unwrap(), Partition::of(&[3, 1]));
        assert_eq!(Partition::empty().size(), 0);
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=8 {
            for p in Partition::all(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), p.size());
            }
        }
        assert_eq!(Partition::of(&[4, 2, 1]).conjugate(), Partition::of(&[3, 2, 1, 1]));
    }

    #[test]
    fn text_and_json_roundtrip() {
        let p = Partition::of(&[4, 3, 1]);
        assert_eq!(p.to_string(), "[4,3,1]");
        assert_eq!("[4,3,1]".parse::<Partition>().unwrap(), p);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,3]".parse::<Partition>().is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[4,3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn box_stats_on_a_small_shape() {
        let p = Partition::of(&[3, 2]);
        let s = box_stats(&p, (1, 1)).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm, s.coleg), (2, 1, 0, 0));
        assert!(s.chi.is_one());
        let s = box_stats(&p, (2, 2)).unwrap();
        assert_eq!((s.arm, s.leg), (0, 0));
        assert_eq!(s.chi, Mono::qt(1, 1));
        assert_eq!(
            box_stats(&p, (2, 3)),
            Err(YoungError::BoxOutsideDiagram(2, 3))
        );
    }

    #[test]
    fn hook_products_on_single_box_and_column() {
        let hp = hook_products(&Partition::of(&[1]));
        assert_eq!(hp.h, parse_laurent("1 - t").unwrap());
        assert_eq!(hp.h_prime, parse_laurent("1 - q").unwrap());
        assert_eq!(hp.g, parse_laurent("1 - q^-1 - t^-1 + q^-1*t^-1").unwrap());
        assert_eq!(hp.b, Laurent::one());
        assert_eq!(hp.pi, Laurent::one());
        let hp2 = hook_products(&Partition::of(&[2]));
        assert_eq!(hp2.b, parse_laurent("1 + q").unwrap());
        assert_eq!(hp2.pi, parse_laurent("1 - q").unwrap());
        assert_eq!(hp2.n_stat, 0);
        assert_eq!(hook_products(&Partition::of(&[1, 1])).n_stat, 1);
    }

    #[test]
    fn transpose_swaps_the_hook_products() {
        for n in 0..=6 {
            for p in Partition::all(n) {
                let hp = hook_products(&p);
                let hp_t = hook_products(&p.conjugate());
                let swapped = hp.h_prime.substitute(Substitution::SwapQT).unwrap();
                assert_eq!(hp_t.h, swapped, "shape {}", p);
                let g_swapped = hp.g.substitute(Substitution::SwapQT).unwrap();
                assert_eq!(hp_t.g, g_swapped, "shape {}", p);
            }
        }
    }

    #[test]
    fn coleg_sum_equals_n_stat() {
        for n in 0..=8 {
            for p in Partition::all(n) {
                let coleg_sum: u64 = p
                    .cells()
                    .iter()
                    .map(|&cell| box_stats(&p, cell).unwrap().coleg as u64)
                    .sum();
                assert_eq!(coleg_sum, p.n_stat());
                let leg_sum: u64 = p
                    .cells()
                    .iter()
                    .map(|&cell| box_stats(&p, cell).unwrap().leg as u64)
                    .sum();
                assert_eq!(leg_sum, p.n_stat());
                let arm_sum: u64 = p
                    .cells()
                    .iter()
                    .map(|&cell| box_stats(&p, cell).unwrap().arm as u64)
                    .sum();
                assert_eq!(arm_sum, p.conjugate().n_stat());
            }
        }
    }

    #[test]
    fn nabla_eigenvalue_examples() {
        assert_eq!(nabla_eigenvalue(&Partition::of(&[2])), Mono::q(1));
        assert_eq!(nabla_eigenvalue(&Partition::of(&[1, 1])), Mono::t(1));
        assert_eq!(nabla_eigenvalue(&Partition::of(&[1])), Mono::ONE);
    }

    #[test]
    fn chain_counts_match_the_hook_length_formula() {
        let mut squares_total = Vec::new();
        for n in 1..=7u32 {
            let mut total: u64 = 0;
            for p in Partition::all(n) {
                let chains = enumerate_tableaux(&Partition::empty(), &p).unwrap();
                assert_eq!(chains.len() as u64, tableaux_count_by_hooks(&p), "shape {}", p);
                for t in &chains {
                    assert_eq!(t.len(), n as usize);
                    assert_eq!(t.shape(), &p);
                    assert_eq!(t.base(), &Partition::empty());
                }
                total += (chains.len() as u64).pow(2);
            }
            squares_total.push(total);
        }
        // sum over shapes of (#SYT)^2 = n!
        assert_eq!(squares_total, vec![1, 2, 6, 24, 120, 720, 5040]);
    }

    #[test]
    fn skew_chains_and_containment_errors() {
        let inner = Partition::of(&[2, 1]);
        let outer = Partition::of(&[3, 2]);
        let chains = enumerate_tableaux(&inner, &outer).unwrap();
        assert_eq!(chains.len(), 2);
        for t in &chains {
            let removal = t.removal_weights();
            let mut addition = removal.clone();
            addition.reverse();
            assert_eq!(addition, t.weights());
        }
        assert!(enumerate_tableaux(&outer, &inner).is_err());
    }

    #[test]
    fn removable_and_addable_boxes_are_consistent() {
        for n in 0..=6 {
            for p in Partition::all(n) {
                for (r, _) in p.removable_boxes() {
                    let smaller = p.remove_box(r);
                    assert_eq!(smaller.size() + 1, p.size());
                    assert!(p.contains(&smaller));
                    assert!(smaller.addable_boxes().iter().any(|&(rr, _)| rr == r));
                }
                for (r, c) in p.addable_boxes() {
                    let bigger = p.add_box(r);
                    assert_eq!(bigger.part(r), c);
                    assert!(bigger.contains(&p));
                }
            }
        }
    }
}
