//! The OPE calculus: n-th products of arbitrary composite states computed
//! from the generator-pair table.
//!
//! Everything reduces to four mutually recursive primitives:
//!  * `gen_gen`    -- generator-generator products, by table lookup, the
//!                    derivative rule, and skew-symmetry flips;
//!  * `wick`       -- normal ordering a generator onto a canonical monomial,
//!                    swapping out-of-order factors with commutator
//!                    corrections;
//!  * `gen_prod`   -- a generator mode acting on a monomial: the
//!                    noncommutative Wick formula for k >= 0, Wick products
//!                    for k <= -1;
//!  * `comp_prod`  -- a composite monomial acting on a monomial, via the
//!                    mode expansion of :a b:.
//!
//! All four are memoized on structural keys (coefficients never enter keys),
//! so the caches stay valid while table coefficients are frozen.

use crate::state::State;
use crate::table::{NoaError, NoaResult, OpeTable};
use crate::word::{basis, GenSym, Monomial};
use exactalg::{Field, Rat};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct Algebra<K: Field> {
    pub field: K,
    table: OpeTable<K::Elem>,
    gen_cache: Mutex<HashMap<(GenSym, i64, Monomial), Arc<State<K::Elem>>>>,
    comp_cache: Mutex<HashMap<(Monomial, i64, Monomial), Arc<State<K::Elem>>>>,
    wick_cache: Mutex<HashMap<(GenSym, Monomial), Arc<State<K::Elem>>>>,
    flip_cache: Mutex<HashMap<(u32, i64, u32), Arc<State<K::Elem>>>>,
}

impl<K: Field> Algebra<K> {
    pub fn new(field: K, table: OpeTable<K::Elem>) -> Self {
        Algebra {
            field,
            table,
            gen_cache: Mutex::new(HashMap::new()),
            comp_cache: Mutex::new(HashMap::new()),
            wick_cache: Mutex::new(HashMap::new()),
            flip_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn table(&self) -> &OpeTable<K::Elem> {
        &self.table
    }

    /// Replaces the table and drops every cache (the old memo values are
    /// stale the moment any entry changes).
    pub fn replace_table(&mut self, table: OpeTable<K::Elem>) {
        self.table = table;
        self.gen_cache.lock().unwrap().clear();
        self.comp_cache.lock().unwrap().clear();
        self.wick_cache.lock().unwrap().clear();
        self.flip_cache.lock().unwrap().clear();
    }

    fn f(&self) -> &K {
        &self.field
    }

    // ---- generator-generator products ------------------------------------

    /// a_(k) b for arbitrary generator symbols (with derivatives), k >= 0.
    pub fn gen_gen(&self, a: GenSym, k: i64, b: GenSym) -> NoaResult<State<K::Elem>> {
        debug_assert!(k >= 0);
        let out_weight = a.eff_weight() as i64 + b.eff_weight() as i64 - k - 1;
        if out_weight < 0 {
            return Ok(State::zero(0));
        }
        // strip derivatives off the left: (d^d a)_(k) = (-1)^d k(k-1)...(k-d+1) a_(k-d)
        if a.deriv > 0 {
            let mut scale = Rat::one();
            for t in 0..a.deriv as i64 {
                scale = scale * Rat::from_int(k - t);
            }
            if a.deriv % 2 == 1 {
                scale = -scale;
            }
            if scale.is_zero() {
                return Ok(State::zero(out_weight as u32));
            }
            let inner = self.gen_gen(GenSym::base(a.weight), k - a.deriv as i64, b)?;
            return Ok(inner.scale_rat(self.f(), &scale));
        }
        // strip derivatives off the right: a_(k)(d x) = d(a_(k)x) + k a_(k-1)x
        if b.deriv > 0 {
            let lower = GenSym {
                weight: b.weight,
                deriv: b.deriv - 1,
            };
            let mut out = State::zero(out_weight as u32);
            let first = self.gen_gen(a, k, lower)?;
            out.add_state(self.f(), &self.state_derivative(&first)?);
            if k != 0 {
                let second = self.gen_gen(a, k - 1, lower)?;
                out.add_state(self.f(), &second.scale_rat(self.f(), &Rat::from_int(k)));
            }
            return Ok(out);
        }
        // both underived: direct or flipped table lookup
        if a.weight <= b.weight {
            self.table.stored(a.weight, k, b.weight)
        } else {
            self.flipped(a.weight, k, b.weight)
        }
    }

    /// b_(k) a from the stored a_(*) b via skew-symmetry:
    /// b_(k)a = sum_j (-1)^(k+1+j) (1/j!) d^j (a_(k+j) b).
    fn flipped(&self, bw: u32, k: i64, aw: u32) -> NoaResult<State<K::Elem>> {
        debug_assert!(aw < bw && k >= 0);
        if let Some(hit) = self.flip_cache.lock().unwrap().get(&(bw, k, aw)) {
            return Ok((**hit).clone());
        }
        let out_weight = (aw + bw) as i64 - k - 1;
        if out_weight < 0 {
            return Ok(State::zero(0));
        }
        let mut out = State::zero(out_weight as u32);
        let mut jfact = Rat::one();
        for j in 0..=((aw + bw) as i64 - 1 - k).max(0) {
            if j > 0 {
                jfact = jfact * Rat::from_int(j);
            }
            let base = self.table.stored(aw, k + j, bw)?;
            if base.is_zero() {
                continue;
            }
            let mut term = base;
            for _ in 0..j {
                term = self.state_derivative(&term)?;
            }
            let mut c = Rat::one() / jfact.clone();
            if (k + 1 + j) % 2 != 0 {
                c = -c;
            }
            out.add_state(self.f(), &term.scale_rat(self.f(), &c));
        }
        self.flip_cache
            .lock()
            .unwrap()
            .insert((bw, k, aw), Arc::new(out.clone()));
        Ok(out)
    }

    // ---- normal ordering -------------------------------------------------

    /// :g m: as a canonical state. Out-of-order heads are commuted through
    /// with [a_(-1), b_(-1)] = sum_i (-1)^i (a_(i)b)_(-2-i).
    pub fn wick(&self, g: GenSym, m: &Monomial) -> NoaResult<State<K::Elem>> {
        if m.is_vacuum() {
            return Ok(State::monomial(self.f(), Monomial::single(g)));
        }
        let head = m.first().unwrap();
        if g.factor_cmp(head) != std::cmp::Ordering::Greater {
            return Ok(State::monomial(self.f(), m.prepend(g)));
        }
        let key = (g, m.clone());
        if let Some(hit) = self.wick_cache.lock().unwrap().get(&key) {
            return Ok((**hit).clone());
        }
        let (b, y) = m.split_first();
        let out_weight = g.eff_weight() + m.weight();
        let mut out = State::zero(out_weight);
        // b_(-1) (g_(-1) y)
        let inner = self.wick(g, &y)?;
        for (mono, c) in inner.terms() {
            let w = self.wick(b, mono)?;
            out.add_scaled(self.f(), &w, c);
        }
        // commutator corrections
        let imax = g.eff_weight() as i64 + b.eff_weight() as i64 - 1;
        for i in 0..=imax {
            let gb = self.gen_gen(g, i, b)?;
            if gb.is_zero() {
                continue;
            }
            for (mono, c) in gb.terms() {
                let t = self.comp_prod(mono, -2 - i, &y)?;
                let c = if i % 2 == 0 {
                    c.clone()
                } else {
                    self.f().neg(c)
                };
                out.add_scaled(self.f(), &t, &c);
            }
        }
        self.wick_cache
            .lock()
            .unwrap()
            .insert(key, Arc::new(out.clone()));
        Ok(out)
    }

    // ---- generator modes on monomials -------------------------------------

    /// g_(k) m for any integer k.
    pub fn gen_prod(&self, g: GenSym, k: i64, m: &Monomial) -> NoaResult<State<K::Elem>> {
        let out_weight = g.eff_weight() as i64 + m.weight() as i64 - k - 1;
        if out_weight < 0 {
            return Ok(State::zero(0));
        }
        let out_weight = out_weight as u32;
        // derivative rule on the acting generator
        if g.deriv > 0 {
            let mut scale = Rat::one();
            for t in 0..g.deriv as i64 {
                scale = scale * Rat::from_int(k - t);
            }
            if g.deriv % 2 == 1 {
                scale = -scale;
            }
            if scale.is_zero() {
                return Ok(State::zero(out_weight));
            }
            let inner = self.gen_prod(GenSym::base(g.weight), k - g.deriv as i64, m)?;
            return Ok(inner.scale_rat(self.f(), &scale));
        }
        if m.is_vacuum() {
            // a_(k)1 = 0 for k >= 0; a_(-1-j)1 = (1/j!) d^j a
            if k >= 0 {
                return Ok(State::zero(out_weight));
            }
            let j = (-1 - k) as u32;
            let mut f = Rat::one();
            for t in 1..=j as i64 {
                f = f * Rat::from_int(t);
            }
            let s = State::monomial(self.f(), Monomial::single(g.d(j)));
            return Ok(s.scale_rat(self.f(), &f.recip()));
        }
        if k < 0 {
            // n! a_(-n-1)x = :(d^n a) x:
            let j = (-1 - k) as u32;
            let mut f = Rat::one();
            for t in 1..=j as i64 {
                f = f * Rat::from_int(t);
            }
            let w = self.wick(g.d(j), m)?;
            return Ok(w.scale_rat(self.f(), &f.recip()));
        }
        if m.len() == 1 {
            return self.gen_gen(g, k, m.first().unwrap());
        }
        let key = (g, k, m.clone());
        if let Some(hit) = self.gen_cache.lock().unwrap().get(&key) {
            return Ok((**hit).clone());
        }
        // noncommutative Wick formula on m = :b y:
        let (b, y) = m.split_first();
        let mut out = State::zero(out_weight);
        // :(g_(k) b) y:
        let gb = self.gen_gen(g, k, b)?;
        for (mono, c) in gb.terms() {
            let t = self.comp_prod(mono, -1, &y)?;
            out.add_scaled(self.f(), &t, c);
        }
        // :b (g_(k) y):
        let gy = self.gen_prod(g, k, &y)?;
        for (mono, c) in gy.terms() {
            let t = self.wick(b, mono)?;
            out.add_scaled(self.f(), &t, c);
        }
        // sum_{i=1}^{k} C(k,i) (g_(k-i) b)_(i-1) y
        let mut binom = Rat::one();
        for i in 1..=k {
            binom = binom * Rat::from_int(k - i + 1) / Rat::from_int(i);
            let gb = self.gen_gen(g, k - i, b)?;
            if gb.is_zero() {
                continue;
            }
            for (mono, c) in gb.terms() {
                let t = self.comp_prod(mono, i - 1, &y)?;
                out.add_scaled(self.f(), &t, &self.f().mul_rat(c, &binom));
            }
        }
        self.gen_cache
            .lock()
            .unwrap()
            .insert(key, Arc::new(out.clone()));
        Ok(out)
    }

    // ---- composite modes on monomials --------------------------------------

    /// m1_(k) m2 for canonical monomials, any integer k, via the mode
    /// expansion (:a y:)_(k) = sum_i a_(-1-i) y_(k+i) + sum_i y_(k-1-i) a_(i).
    pub fn comp_prod(&self, m1: &Monomial, k: i64, m2: &Monomial) -> NoaResult<State<K::Elem>> {
        let out_weight = m1.weight() as i64 + m2.weight() as i64 - k - 1;
        if out_weight < 0 {
            return Ok(State::zero(0));
        }
        let out_weight = out_weight as u32;
        if m1.is_vacuum() {
            return Ok(if k == -1 {
                State::monomial(self.f(), m2.clone())
            } else {
                State::zero(out_weight)
            });
        }
        if m1.len() == 1 {
            return self.gen_prod(m1.first().unwrap(), k, m2);
        }
        let key = (m1.clone(), k, m2.clone());
        if let Some(hit) = self.comp_cache.lock().unwrap().get(&key) {
            return Ok((**hit).clone());
        }
        let (a, y) = m1.split_first();
        let mut out = State::zero(out_weight);
        // sum_{i>=0} a_(-1-i) (y_(k+i) m2)
        let imax = y.weight() as i64 + m2.weight() as i64 - 1 - k;
        for i in 0..=imax.max(-1) {
            let inner = self.comp_prod(&y, k + i, m2)?;
            if inner.is_zero() {
                continue;
            }
            for (mono, c) in inner.terms() {
                let t = self.gen_prod(a, -1 - i, mono)?;
                out.add_scaled(self.f(), &t, c);
            }
        }
        // sum_{i>=0} y_(k-1-i) (a_(i) m2)
        let imax = a.eff_weight() as i64 + m2.weight() as i64 - 1;
        for i in 0..=imax {
            let inner = self.gen_prod(a, i, m2)?;
            if inner.is_zero() {
                continue;
            }
            for (mono, c) in inner.terms() {
                let t = self.comp_prod(&y, k - 1 - i, mono)?;
                out.add_scaled(self.f(), &t, c);
            }
        }
        self.comp_cache
            .lock()
            .unwrap()
            .insert(key, Arc::new(out.clone()));
        Ok(out)
    }

    // ---- state-level operations --------------------------------------------

    /// u_(k) v extended bilinearly.
    pub fn product(
        &self,
        u: &State<K::Elem>,
        k: i64,
        v: &State<K::Elem>,
    ) -> NoaResult<State<K::Elem>> {
        let out_weight = u.weight() as i64 + v.weight() as i64 - k - 1;
        let mut out = State::zero(out_weight.max(0) as u32);
        if out_weight < 0 {
            return Ok(out);
        }
        for (m1, c1) in u.terms() {
            for (m2, c2) in v.terms() {
                let t = self.comp_prod(m1, k, m2)?;
                out.add_scaled(self.f(), &t, &self.f().mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// d applied to a state: raise one derivative per factor, recanonicalize.
    pub fn state_derivative(&self, s: &State<K::Elem>) -> NoaResult<State<K::Elem>> {
        let mut out = State::zero(s.weight() + 1);
        for (m, c) in s.terms() {
            for i in 0..m.len() {
                let word = m.raise_deriv(i);
                let t = self.reorder(&word)?;
                out.add_scaled(self.f(), &t, c);
            }
        }
        Ok(out)
    }

    /// Canonicalizes an arbitrary word read as a right-nested Wick product.
    pub fn reorder(&self, word: &[GenSym]) -> NoaResult<State<K::Elem>> {
        let weight: u32 = word.iter().map(|g| g.eff_weight()).sum();
        match word.split_last() {
            None => {
                let mut s = State::zero(0);
                s.add_term(self.f(), Monomial::vacuum(), self.f().one());
                Ok(s)
            }
            Some((&last, init)) => {
                let mut acc = State::monomial(self.f(), Monomial::single(last));
                for &g in init.iter().rev() {
                    let mut next = State::zero(acc.weight() + g.eff_weight());
                    for (mono, c) in acc.terms() {
                        let w = self.wick(g, mono)?;
                        next.add_scaled(self.f(), &w, c);
                    }
                    acc = next;
                }
                debug_assert_eq!(acc.weight(), weight);
                Ok(acc)
            }
        }
    }

    // ---- identities as checks ----------------------------------------------

    /// Checks a_(n)b = sum_p (-1)^(p+1) (b_(p)a)_(n-p-1) 1 for all n >= 0.
    pub fn skew_check(&self, a: GenSym, b: GenSym) -> NoaResult<bool> {
        debug_assert!(a.deriv == 0 && b.deriv == 0);
        for n in 0..(a.weight + b.weight) as i64 {
            let lhs = self.gen_gen(a, n, b)?;
            let mut rhs = State::zero(lhs.weight());
            let mut jfact = Rat::one();
            for j in 0..=((a.weight + b.weight) as i64 - 1 - n) {
                if j > 0 {
                    jfact = jfact * Rat::from_int(j);
                }
                let base = self.gen_gen(b, n + j, a)?;
                if base.is_zero() {
                    continue;
                }
                let mut term = base;
                for _ in 0..j {
                    term = self.state_derivative(&term)?;
                }
                let mut c = Rat::one() / jfact.clone();
                if (n + 1 + j) % 2 != 0 {
                    c = -c;
                }
                rhs.add_state(self.f(), &term.scale_rat(self.f(), &c));
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The Jacobi residue a_(r)(b_(s)x) - b_(s)(a_(r)x)
    /// - sum_i C(r,i) (a_(i)b)_(r+s-i) x; identically zero in a consistent
    /// OPE algebra.
    pub fn jacobi_residue(
        &self,
        a: GenSym,
        b: GenSym,
        x: GenSym,
        r: i64,
        s: i64,
    ) -> NoaResult<State<K::Elem>> {
        debug_assert!(r >= 0 && s >= 0);
        let total = a.eff_weight() + b.eff_weight() + x.eff_weight();
        let out_weight = total as i64 - r - s - 2;
        if out_weight < 0 {
            return Ok(State::zero(0));
        }
        let mut out = State::zero(out_weight as u32);
        let bx = self.gen_gen(b, s, x)?;
        for (mono, c) in bx.terms() {
            let t = self.gen_prod(a, r, mono)?;
            out.add_scaled(self.f(), &t, c);
        }
        let ax = self.gen_gen(a, r, x)?;
        for (mono, c) in ax.terms() {
            let t = self.gen_prod(b, s, mono)?;
            out.add_scaled(self.f(), &t, &self.f().neg(c));
        }
        let mut binom = Rat::one();
        for i in 0..=r {
            if i > 0 {
                binom = binom * Rat::from_int(r - i + 1) / Rat::from_int(i);
            }
            let ab = self.gen_gen(a, i, b)?;
            if ab.is_zero() {
                continue;
            }
            for (mono, c) in ab.terms() {
                let t = self.comp_prod(mono, r + s - i, &Monomial::single(x))?;
                let coeff = self.f().mul_rat(c, &binom);
                out.add_scaled(self.f(), &t, &self.f().neg(&coeff));
            }
        }
        Ok(out)
    }

    /// Number of cached product values (for diagnostics).
    pub fn cache_sizes(&self) -> (usize, usize, usize, usize) {
        (
            self.gen_cache.lock().unwrap().len(),
            self.comp_cache.lock().unwrap().len(),
            self.wick_cache.lock().unwrap().len(),
            self.flip_cache.lock().unwrap().len(),
        )
    }
}

/// Weight-homogeneity check over a whole table; names the offending entry.
pub fn validate_table<E: Clone + PartialEq>(table: &OpeTable<E>) -> NoaResult<()> {
    for (a, b) in table.pairs().collect::<Vec<_>>() {
        let list = table.entry_list(a, b).unwrap();
        for (k, s) in list.iter().enumerate() {
            let expect = a + b - k as u32 - 1;
            if s.weight() != expect {
                return Err(NoaError::Invalid {
                    detail: format!("entry W{a}_({k})W{b} has weight {} (expected {expect})", s.weight()),
                });
            }
            for (m, _) in s.terms() {
                if m.weight() != expect {
                    return Err(NoaError::Invalid {
                        detail: format!(
                            "entry W{a}_({k})W{b}: monomial {m} has weight {} (expected {expect})",
                            m.weight()
                        ),
                    });
                }
                if !m.is_canonical() {
                    return Err(NoaError::Invalid {
                        detail: format!("entry W{a}_({k})W{b}: monomial {m} not canonical"),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Convenience: the full basis of a weight space as monomial states.
pub fn basis_states<K: Field>(f: &K, weight: u32, cap: Option<u32>) -> Vec<State<K::Elem>> {
    basis(weight, cap)
        .into_iter()
        .map(|m| State::monomial(f, m))
        .collect()
}
