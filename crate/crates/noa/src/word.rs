//! Generators, normally ordered monomials, the free-generation basis, and
//! graded characters.
//!
//! A generator symbol is `∂^d W^{2i}` (with `W^2 = L`). Canonical monomials
//! are right-nested Wick words whose factors are sorted by generator weight
//! ascending and, within a weight, by derivative order nonincreasing.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// `∂^deriv` of the weight-`weight` strong generator (weight even, >= 2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenSym {
    /// Conformal weight of the underlying generator: 2 for L, 2i for W^{2i}.
    pub weight: u32,
    /// Number of derivatives applied.
    pub deriv: u32,
}

impl GenSym {
    pub fn base(weight: u32) -> GenSym {
        assert!(weight >= 2 && weight % 2 == 0, "generator weight must be even");
        GenSym { weight, deriv: 0 }
    }

    pub fn d(self, extra: u32) -> GenSym {
        GenSym {
            weight: self.weight,
            deriv: self.deriv + extra,
        }
    }

    pub fn eff_weight(self) -> u32 {
        self.weight + self.deriv
    }

    /// Canonical factor order: generator weight ascending, derivative order
    /// nonincreasing within equal weight.
    pub fn factor_cmp(self, other: GenSym) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(other.deriv.cmp(&self.deriv))
    }
}

impl fmt::Debug for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deriv > 0 {
            write!(f, "d{}", self.deriv)?;
        }
        if self.weight == 2 {
            write!(f, "L")
        } else {
            write!(f, "W{}", self.weight)
        }
    }
}

/// Canonical normally ordered monomial; the empty word is the vacuum.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[GenSym; 4]>);

impl Monomial {
    pub fn vacuum() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn single(g: GenSym) -> Monomial {
        Monomial(SmallVec::from_slice(&[g]))
    }

    /// Builds from a factor list that must already be in canonical order.
    pub fn from_canonical(factors: Vec<GenSym>) -> Monomial {
        let m = Monomial(SmallVec::from_vec(factors));
        assert!(m.is_canonical(), "factors not in canonical order: {m}");
        m
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[GenSym] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|g| g.eff_weight()).sum()
    }

    pub fn total_deriv(&self) -> u32 {
        self.0.iter().map(|g| g.deriv).sum()
    }

    pub fn is_canonical(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0].factor_cmp(w[1]) != Ordering::Greater)
    }

    pub fn first(&self) -> Option<GenSym> {
        self.0.first().copied()
    }

    /// Splits off the first factor; only valid on non-vacuum monomials.
    pub fn split_first(&self) -> (GenSym, Monomial) {
        let g = self.0[0];
        (g, Monomial(SmallVec::from_slice(&self.0[1..])))
    }

    /// Prepends a factor that is <= the current head in canonical order.
    pub fn prepend(&self, g: GenSym) -> Monomial {
        debug_assert!(
            self.first().is_none_or(|h| g.factor_cmp(h) != Ordering::Greater),
            "prepend would break canonical order"
        );
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(g);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Largest generator weight appearing among the factors.
    pub fn max_gen_weight(&self) -> u32 {
        self.0.iter().map(|g| g.weight).max().unwrap_or(0)
    }

    /// Raises the derivative order of factor `i` by one, returning the raw
    /// (possibly non-canonical) word.
    pub fn raise_deriv(&self, i: usize) -> Vec<GenSym> {
        let mut v: Vec<GenSym> = self.0.to_vec();
        v[i] = v[i].d(1);
        v
    }

    /// Listing order for bases: more factors first, fewer total derivatives
    /// first, then lexicographic on the factor sequence. Matches the way
    /// low-weight spaces are usually displayed.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then(self.total_deriv().cmp(&other.total_deriv()))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(other.0.iter()) {
                    match a.factor_cmp(*b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.display_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vacuum() {
            return write!(f, "1");
        }
        write!(f, ":")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ":")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All canonical monomials of the given weight, optionally restricted to
/// generators of weight <= `gen_cap`, in listing order.
pub fn basis(weight: u32, gen_cap: Option<u32>) -> Vec<Monomial> {
    let cap = gen_cap.unwrap_or(weight.max(2));
    let mut out = Vec::new();
    let mut current: Vec<GenSym> = Vec::new();
    fn rec(
        budget: u32,
        min_factor: Option<GenSym>,
        cap: u32,
        current: &mut Vec<GenSym>,
        out: &mut Vec<Monomial>,
    ) {
        if budget == 0 {
            out.push(Monomial(SmallVec::from_slice(current)));
            return;
        }
        let mut w = 2;
        while w <= budget.min(cap) {
            for d in 0..=(budget - w) {
                let g = GenSym { weight: w, deriv: d };
                if let Some(m) = min_factor {
                    if m.factor_cmp(g) == Ordering::Greater {
                        continue;
                    }
                }
                current.push(g);
                rec(budget - g.eff_weight(), Some(g), cap, current, out);
                current.pop();
            }
            w += 2;
        }
    }
    rec(weight, None, cap, &mut current, &mut out);
    out.sort();
    out
}

/// Coefficients of prod_i prod_{k>=0} 1/(1 - q^(d_i + k)) through `max_weight`,
/// for the given strong generator weights.
pub fn character(max_weight: u32, generator_weights: &[u32]) -> Vec<u64> {
    let n = max_weight as usize;
    let mut series = vec![0u64; n + 1];
    series[0] = 1;
    for &d in generator_weights {
        for m in d..=max_weight {
            // multiply by 1/(1-q^m): one letter of weight m (= d + k)
            let m = m as usize;
            for j in m..=n {
                series[j] += series[j - m];
            }
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens_up_to(w: u32) -> Vec<u32> {
        (1..=w / 2).map(|i| 2 * i).collect()
    }

    #[test]
    fn weight4_basis() {
        let b = basis(4, None);
        assert_eq!(b.len(), 3);
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert!(names.contains(&":L L:".to_string()));
        assert!(names.contains(&":W4:".to_string()));
        assert!(names.contains(&":d2L:".to_string()));
    }

    #[test]
    fn weight6_basis_matches_display_order() {
        let b = basis(6, None);
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            names,
            vec![":L L L:", ":L W4:", ":d2L L:", ":d1L d1L:", ":W6:", ":d2W4:", ":d4L:"]
        );
    }

    #[test]
    fn basis_counts_match_character_to_16() {
        let ch = character(16, &gens_up_to(16));
        for w in 0..=16u32 {
            assert_eq!(
                basis(w, None).len() as u64,
                ch[w as usize],
                "mismatch at weight {w}"
            );
        }
        // restricted generator caps (type C truncations)
        for cap in [4u32, 6, 8] {
            let ch = character(16, &gens_up_to(cap));
            for w in 0..=16u32 {
                assert_eq!(
                    basis(w, Some(cap)).len() as u64,
                    ch[w as usize],
                    "mismatch at weight {w} cap {cap}"
                );
            }
        }
    }

    #[test]
    fn weight6_count_is_seven() {
        assert_eq!(basis(6, None).len(), 7);
        assert_eq!(character(6, &[2, 4, 6])[6], 7);
    }

    #[test]
    fn canonical_checks() {
        let l = GenSym::base(2);
        let dl = l.d(1);
        let w4 = GenSym::base(4);
        assert!(Monomial::from_canonical(vec![dl, l, w4]).is_canonical());
        let bad = Monomial(SmallVec::from_vec(vec![l, dl]));
        assert!(!bad.is_canonical());
    }
}
