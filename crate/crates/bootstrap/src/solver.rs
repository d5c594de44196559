//! Greedy triangular elimination of ansatz unknowns from polynomial
//! constraints, with a worklist for constraints that are not yet usable.
//!
//! A constraint is usable when some pool unknown occurs linearly with a
//! coefficient free of all unknowns (and preferably free of the named
//! parameters, so they never end up in denominators unnecessarily).
//!
//! Solution right-hand sides are reduced lazily: a value recorded early may
//! mention unknowns solved later, and `reduce` chases those chains on use.
//! Pivoting always happens on fully reduced constraints, so the chains form
//! a DAG in solve order and chasing terminates.

use crate::vars::{is_pool_var, pool_vars, VAR_LAMBDA};
use exactalg::{MPoly, RatFunc};
use std::collections::BTreeMap;


pub struct Solver {
    /// Solved unknowns (right-hand sides may mention later-solved unknowns).
    pub solutions: BTreeMap<usize, RatFunc>,
    /// Constraints seen but not yet resolvable into a pivot.
    pub pending: Vec<MPoly>,
    /// Nonzero constraints that involve no pool unknowns at all.
    pub residuals: Vec<MPoly>,
    /// (variable, source label) in the order unknowns were eliminated.
    pub elimination_log: Vec<(usize, String)>,
    /// Variables the solver must not pivot on (free parameters).
    pub frozen: Vec<usize>,
}

impl Solver {
    pub fn new(frozen: Vec<usize>) -> Solver {
        Solver {
            solutions: BTreeMap::new(),
            pending: Vec::new(),
            residuals: Vec::new(),
            elimination_log: Vec::new(),
            frozen,
        }
    }

    /// Reduces a polynomial by the solution map (constraints are = 0
    /// relations, so denominators are cleared rather than tracked).
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let mut cur = p.clone();
        loop {
            let used: Vec<usize> = pool_vars(&cur)
                .into_iter()
                .filter(|v| self.solutions.contains_key(v))
                .collect();
            if used.is_empty() {
                return cur;
            }
            for v in used {
                let rhs = &self.solutions[&v];
                cur = cur.subst_one_frac(v, rhs.num(), rhs.den());
            }
        }
    }

    /// Fully reduces a rational function through the solution map.
    pub fn reduce_ratfunc(&self, rf: &RatFunc) -> RatFunc {
        let mut cur = rf.clone();
        loop {
            let used: Vec<usize> = pool_vars(cur.num())
                .into_iter()
                .chain(pool_vars(cur.den()))
                .filter(|v| self.solutions.contains_key(v))
                .collect();
            if used.is_empty() {
                return cur;
            }
            for v in used {
                let rhs = self.solutions[&v].clone();
                cur = cur.subst_one_frac(v, rhs.num(), rhs.den());
            }
        }
    }

    /// Feeds one constraint: reduce, then pivot or park.
    pub fn push(&mut self, p: MPoly, source: &str) {
        let p = self.reduce(&p);
        if p.is_zero() {
            return;
        }
        if !self.try_pivot(p.clone(), source) {
            self.classify(p);
        }
    }

    fn classify(&mut self, p: MPoly) {
        if pool_vars(&p).is_empty() {
            self.residuals.push(p);
        } else {
            self.pending.push(p);
        }
    }

    /// Attempts to eliminate one unknown from the (already reduced) `p`.
    fn try_pivot(&mut self, p: MPoly, source: &str) -> bool {
        let candidates = pool_vars(&p);
        if candidates.is_empty() {
            return false;
        }
        // prefer pivots whose coefficient is free of every parameter, then
        // those free of pool unknowns; deterministic by variable index
        let mut fallback: Option<(usize, MPoly, MPoly)> = None;
        for v in candidates {
            if self.frozen.contains(&v) || p.degree_in(v) != 1 {
                continue;
            }
            let coeffs = p.coeffs_in(v);
            let a = coeffs[1].clone();
            let b = coeffs[0].clone();
            let avars = crate::vars::param_vars(&a);
            if avars.iter().any(|&w| is_pool_var(w)) {
                continue;
            }
            if avars.is_empty() || avars.iter().all(|&w| w == VAR_LAMBDA) {
                self.record(v, &a, &b, source);
                return true;
            }
            if fallback.is_none() {
                fallback = Some((v, a, b));
            }
        }
        if let Some((v, a, b)) = fallback {
            self.record(v, &a, &b, source);
            return true;
        }
        false
    }

    fn record(&mut self, v: usize, a: &MPoly, b: &MPoly, source: &str) {
        // v = -b/a; b never mentions an already-solved unknown because the
        // constraint was reduced first
        let value = RatFunc::new(b.neg(), a.clone());
        // keep every stored right-hand side free of v
        for rhs in self.solutions.values_mut() {
            if rhs.num().uses_var(v) || rhs.den().uses_var(v) {
                *rhs = rhs.subst_one_frac(v, value.num(), value.den());
            }
        }
        self.solutions.insert(v, value);
        self.elimination_log.push((v, source.to_string()));
    }

    /// Re-examines pending constraints until no further progress.
    pub fn drain(&mut self) {
        loop {
            let mut progressed = false;
            let work = std::mem::take(&mut self.pending);
            for q in work {
                let q = self.reduce(&q);
                if q.is_zero() {
                    continue;
                }
                if self.try_pivot(q.clone(), "worklist") {
                    progressed = true;
                } else {
                    self.classify(q);
                }
            }
            if !progressed {
                break;
            }
        }
    }

    /// Final sweep: drain, then reduce residuals by the full solution map.
    pub fn finalize(&mut self) {
        self.drain();
        let res = std::mem::take(&mut self.residuals);
        for q in res {
            let q = self.reduce(&q);
            if !q.is_zero() {
                let q = q.primitive();
                if !self.residuals.contains(&q) {
                    self.residuals.push(q);
                }
            }
        }
    }

    /// Pool unknowns still unsolved among the given set.
    pub fn unsolved<'a>(&self, vars: impl Iterator<Item = &'a usize>) -> Vec<usize> {
        vars.filter(|v| !self.solutions.contains_key(v))
            .copied()
            .collect()
    }
}
