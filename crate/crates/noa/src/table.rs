//! The table of generator-pair products W^{2i}_(k) W^{2j}.

use crate::state::State;
use crate::word::GenSym;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoaError {
    /// A needed generator-pair product is not in the table.
    Budget { a: u32, b: u32 },
    /// Serialized table failed validation; the offending entry is named.
    Invalid { detail: String },
}

impl std::fmt::Display for NoaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoaError::Budget { a, b } => write!(
                f,
                "table budget exceeded: product of W{a} with W{b} (total weight {}) not available",
                a + b
            ),
            NoaError::Invalid { detail } => write!(f, "invalid table: {detail}"),
        }
    }
}

impl std::error::Error for NoaError {}

pub type NoaResult<T> = Result<T, NoaError>;

/// All products a_(k)b for stored ordered pairs (wt a <= wt b, derivatives
/// zero). Index k runs over 0..(wt a + wt b); entries beyond vanish.
#[derive(Clone)]
pub struct OpeTable<E> {
    entries: BTreeMap<(u32, u32), Vec<State<E>>>,
}

impl<E: Clone + PartialEq> OpeTable<E> {
    pub fn new() -> OpeTable<E> {
        OpeTable {
            entries: BTreeMap::new(),
        }
    }

    /// Largest pair total weight present (0 when empty).
    pub fn max_total_weight(&self) -> u32 {
        self.entries.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn has_pair(&self, a: u32, b: u32) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.entries.contains_key(&key)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.keys().copied()
    }

    /// Inserts the full product list for an ordered pair.
    pub fn insert_pair(&mut self, a: u32, b: u32, products: Vec<State<E>>) {
        assert!(a <= b, "pairs are stored with weights ascending");
        assert_eq!(
            products.len(),
            (a + b) as usize,
            "need one entry per product index 0..wt(a)+wt(b)"
        );
        for (k, s) in products.iter().enumerate() {
            assert_eq!(
                s.weight(),
                a + b - k as u32 - 1,
                "entry W{a}_({k})W{b} has wrong weight"
            );
        }
        self.entries.insert((a, b), products);
    }

    /// Direct stored lookup: a_(k)b with wt a <= wt b. Out-of-range k gives
    /// a zero state of the right weight.
    pub fn stored(&self, a: u32, k: i64, b: u32) -> NoaResult<State<E>> {
        debug_assert!(a <= b);
        let list = self
            .entries
            .get(&(a, b))
            .ok_or(NoaError::Budget { a, b })?;
        if k < 0 || k >= list.len() as i64 {
            let w = a as i64 + b as i64 - k - 1;
            assert!(w >= 0, "negative-weight product should have been shortcut");
            return Ok(State::zero(w as u32));
        }
        Ok(list[k as usize].clone())
    }

    pub fn entry_list(&self, a: u32, b: u32) -> Option<&Vec<State<E>>> {
        self.entries.get(&(a, b))
    }

    pub fn entry_list_mut(&mut self, a: u32, b: u32) -> Option<&mut Vec<State<E>>> {
        self.entries.get_mut(&(a, b))
    }

    /// Rewrites every coefficient in place (used when applying solved
    /// unknowns or specializing parameters).
    pub fn map_coeffs_into<E2, K2>(
        &self,
        f2: &K2,
        mut func: impl FnMut(&E) -> E2,
    ) -> OpeTable<E2>
    where
        E2: Clone + PartialEq,
        K2: exactalg::Field<Elem = E2>,
    {
        let mut out = OpeTable::new();
        for (&(a, b), list) in &self.entries {
            let mapped = list.iter().map(|s| s.map_coeffs(f2, &mut func)).collect();
            out.entries.insert((a, b), mapped);
        }
        out
    }

    /// Generator weights known to the table (from stored pairs).
    pub fn generator_weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self
            .entries
            .keys()
            .flat_map(|&(a, b)| [a, b])
            .collect();
        ws.sort();
        ws.dedup();
        ws
    }
}

impl<E: Clone + PartialEq> Default for OpeTable<E> {
    fn default() -> Self {
        Self::new()
    }
}

/// Ordered pair key for a generator pair, weights ascending.
pub fn pair_key(a: GenSym, b: GenSym) -> (u32, u32) {
    if a.weight <= b.weight {
        (a.weight, b.weight)
    } else {
        (b.weight, a.weight)
    }
}
