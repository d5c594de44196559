//! Weight-homogeneous linear combinations of canonical monomials.

use crate::word::Monomial;
use exactalg::Field;
use std::collections::BTreeMap;
use std::fmt;

/// A weight-homogeneous element: finite map monomial -> coefficient with no
/// zeros stored. The weight is carried even when the map is empty.
#[derive(Clone, PartialEq)]
pub struct State<E> {
    weight: u32,
    terms: BTreeMap<Monomial, E>,
}

impl<E: Clone + PartialEq> State<E> {
    pub fn zero(weight: u32) -> State<E> {
        State {
            weight,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial<K: Field<Elem = E>>(f: &K, m: Monomial) -> State<E> {
        let mut s = State::zero(m.weight());
        s.terms.insert(m, f.one());
        s
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&E> {
        self.terms.get(m)
    }

    /// The coefficient of the vacuum, i.e. the scalar part of a weight-0 state.
    pub fn vacuum_coeff<K: Field<Elem = E>>(&self, f: &K) -> E {
        self.terms
            .get(&Monomial::vacuum())
            .cloned()
            .unwrap_or_else(|| f.zero())
    }

    pub fn add_term<K: Field<Elem = E>>(&mut self, f: &K, m: Monomial, c: E) {
        if f.is_zero(&c) {
            return;
        }
        debug_assert_eq!(m.weight(), self.weight, "weight-inhomogeneous insertion");
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = f.add(e.get(), &c);
                if f.is_zero(&v) {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled<K: Field<Elem = E>>(&mut self, f: &K, other: &State<E>, c: &E) {
        if f.is_zero(c) {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(f, m.clone(), f.mul(v, c));
        }
    }

    pub fn add_state<K: Field<Elem = E>>(&mut self, f: &K, other: &State<E>) {
        for (m, v) in &other.terms {
            self.add_term(f, m.clone(), v.clone());
        }
    }

    pub fn sub_state<K: Field<Elem = E>>(&mut self, f: &K, other: &State<E>) {
        for (m, v) in &other.terms {
            self.add_term(f, m.clone(), f.neg(v));
        }
    }

    pub fn scale<K: Field<Elem = E>>(&self, f: &K, c: &E) -> State<E> {
        let mut out = State::zero(self.weight);
        out.add_scaled(f, self, c);
        out
    }

    pub fn scale_rat<K: Field<Elem = E>>(&self, f: &K, r: &exactalg::Rat) -> State<E> {
        if r.is_zero() {
            return State::zero(self.weight);
        }
        let mut out = State::zero(self.weight);
        for (m, v) in &self.terms {
            out.add_term(f, m.clone(), f.mul_rat(v, r));
        }
        out
    }

    pub fn neg<K: Field<Elem = E>>(&self, f: &K) -> State<E> {
        let mut out = State::zero(self.weight);
        for (m, v) in &self.terms {
            out.add_term(f, m.clone(), f.neg(v));
        }
        out
    }

    /// Applies a coefficient map, re-pruning zeros (the map may send nonzero
    /// to zero, e.g. under specialization).
    pub fn map_coeffs<E2: Clone + PartialEq, K2: Field<Elem = E2>>(
        &self,
        f2: &K2,
        mut func: impl FnMut(&E) -> E2,
    ) -> State<E2> {
        let mut out = State::zero(self.weight);
        for (m, v) in &self.terms {
            out.add_term(f2, m.clone(), func(v));
        }
        out
    }
}

impl<E: fmt::Display + Clone + PartialEq> fmt::Display for State<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

impl<E: fmt::Display + Clone + PartialEq> fmt::Debug for State<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
