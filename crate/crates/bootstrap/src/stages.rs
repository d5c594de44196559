//! Staged construction: ansatz entries for each new pair total weight,
//! skew-symmetry self-constraints, Jacobi imposition in lexicographic
//! (triple, r, s) order, and the inductive extension that determines higher
//! pairs from a small subset of identities.

use crate::solver::Solver;
use crate::vars::{self, pool_vars, VarOrigin, VAR_A3, VAR_A7, VAR_D28, VAR_E};
use crate::{BootResult, Bootstrap, BootstrapError};
use exactalg::{Field, MPoly, Rat, RatFunc};
use noa::{basis, GenSym, Monomial, State};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct StageReport {
    pub stage: u32,
    /// Residual constraints among (c, a3, a7, d28, e) after elimination.
    pub residuals: Vec<MPoly>,
    /// Named parameters that actually occur in the solved entries.
    pub free_parameters: Vec<String>,
    /// Imposed identities, in order.
    pub imposed: Vec<String>,
    /// Identities whose constraints eliminated at least one unknown.
    pub forcing: Vec<String>,
    pub unknowns_created: usize,
}

#[derive(Debug, Clone)]
pub struct ExtendReport {
    pub pair_weight: u32,
    pub imposed: Vec<String>,
    pub forcing: Vec<String>,
    /// Residues that did not vanish (null-field witnesses); expected empty.
    pub null_witnesses: Vec<String>,
    pub unknowns_created: usize,
}

/// Generator-pair weights introduced at pair total weight `w`.
fn pairs_of_weight(w: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut a = 2;
    while a <= w - a {
        out.push((a, w - a));
        a += 2;
    }
    out
}

/// Jacobi triple multisets (a <= b <= x) of total weight `n`.
fn triples_of_weight(n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let mut a = 2;
    while 3 * a <= n {
        let mut b = a;
        while a + 2 * b <= n {
            let x = n - a - b;
            if x >= b {
                out.push((a, b, x));
            }
            b += 2;
        }
        a += 2;
    }
    out
}

impl Bootstrap {
    /// Installs ansatz entries for every pair of the given total weight.
    /// Fixed entries: L_(0) = d, L_(1) = grading, W4_(1) = the next tower
    /// generator. Returns the variables created.
    fn install_ansatz(&mut self, pair_weight: u32) -> Vec<usize> {
        let field = self.field();
        let ctx = self.ctx.clone();
        let mut created = Vec::new();
        let new_gen = pair_weight - 2;
        let mut table = self.alg.table().clone();
        for (a, b) in pairs_of_weight(pair_weight) {
            let mut products = Vec::new();
            for k in 0..(a + b) as i64 {
                let w = (a + b) as i64 - k - 1;
                let w = w as u32;
                // fixed entries
                if a == 2 && k == 0 {
                    let mut s = State::zero(w);
                    s.add_term(&field, Monomial::single(GenSym::base(b).d(1)), field.one());
                    products.push(s);
                    continue;
                }
                if a == 2 && k == 1 {
                    let mut s = State::zero(w);
                    s.add_term(&field, Monomial::single(GenSym::base(b)), field.from_int(b as i64));
                    products.push(s);
                    continue;
                }
                if a == 4 && k == 1 {
                    // tower definition W^{a+b-2} = W4_(1) W^b
                    let mut s = State::zero(w);
                    s.add_term(&field, Monomial::single(GenSym::base(new_gen)), field.one());
                    products.push(s);
                    continue;
                }
                let mut s = State::zero(w);
                for m in basis(w, Some(new_gen)) {
                    // named parameters live at their defining slots
                    let named = named_slot(a, b, k, &m);
                    let v = self.vars.alloc(
                        VarOrigin {
                            pair: (a, b),
                            k,
                            monomial: m.clone(),
                        },
                        named,
                    );
                    created.push(v);
                    s.add_term(&field, m, RatFunc::from_poly(MPoly::var(&ctx, v)));
                }
                products.push(s);
            }
            table.insert_pair(a, b, products);
        }
        self.alg.replace_table(table);
        created
    }

    /// Imposes skew-symmetry self-constraints for the equal pairs of the
    /// given weight, then all Jacobi identities of the listed triples, in
    /// order, eliminating unknowns greedily.
    fn impose(
        &mut self,
        solver: &mut Solver,
        pair_weight: u32,
        triples: &[(u32, u32, u32)],
        imposed: &mut Vec<String>,
        forcing: &mut Vec<String>,
    ) -> BootResult<()> {
        let field = self.field();
        // self-skew for the equal pair (w/2, w/2), if present
        if pair_weight % 4 == 0 {
            let half = pair_weight / 2;
            if self.alg.table().has_pair(half, half) {
                let g = GenSym::base(half);
                for n in 0..pair_weight as i64 {
                    let label = format!("skew W{half}_({n})W{half}");
                    let lhs = self.alg.gen_gen(g, n, g)?;
                    let mut rhs = State::zero(lhs.weight());
                    let mut jfact = Rat::one();
                    for j in 0..=(pair_weight as i64 - 1 - n) {
                        if j > 0 {
                            jfact = jfact * Rat::from_int(j);
                        }
                        let base = self.alg.gen_gen(g, n + j, g)?;
                        if base.is_zero() {
                            continue;
                        }
                        let mut term = base;
                        for _ in 0..j {
                            term = self.alg.state_derivative(&term)?;
                        }
                        let mut coeff = Rat::one() / jfact.clone();
                        if (n + 1 + j) % 2 != 0 {
                            coeff = -coeff;
                        }
                        rhs.add_state(&field, &term.scale_rat(&field, &coeff));
                    }
                    let mut diff = lhs;
                    diff.sub_state(&field, &rhs);
                    let before = solver.solutions.len();
                    for (_, c) in diff.terms() {
                        solver.push(c.num().clone(), &label);
                    }
                    solver.drain();
                    imposed.push(label.clone());
                    if solver.solutions.len() > before {
                        forcing.push(label);
                    }
                }
            }
        }
        // Jacobi identities
        for &(a, b, x) in triples {
            let (ga, gb, gx) = (GenSym::base(a), GenSym::base(b), GenSym::base(x));
            let total = (a + b + x) as i64;
            // top poles first: this mirrors the downward induction on the
            // product index and keeps solution chains shallow
            for t in (0..=(total - 2)).rev() {
                for r in 0..=t {
                    let s = t - r;
                    let label = format!("jacobi (W{a},W{b},W{x}) r={r} s={s}");
                    let t0 = std::time::Instant::now();
                    let res = self.alg.jacobi_residue(ga, gb, gx, r, s)?;
                    let t_res = t0.elapsed();
                    if res.is_zero() {
                        if self.verbose && t_res.as_millis() > 200 {
                            eprintln!("  {label}: residue 0 in {t_res:?}");
                        }
                        continue;
                    }
                    let before = solver.solutions.len();
                    for (_, c) in res.terms() {
                        solver.push(c.num().clone(), &label);
                    }
                    imposed.push(label.clone());
                    if solver.solutions.len() > before {
                        forcing.push(label.clone());
                    }
                    if self.verbose {
                        eprintln!(
                            "  {label}: {} terms, {} solved total, residue {t_res:?}, solve {:?}",
                            res.len(),
                            solver.solutions.len(),
                            t0.elapsed() - t_res
                        );
                    }
                    solver.drain();
                }
            }
        }
        solver.drain();
        Ok(())
    }

    /// Rewrites the table through the solver's solution map.
    fn apply_solutions(&mut self, solver: &Solver) {
        let field = self.field();
        let table = self
            .alg
            .table()
            .map_coeffs_into(&field, |c| solver.reduce_ratfunc(c));
        self.alg.replace_table(table);
    }

    /// One full stage: ansatz for pairs of weight `total_weight - 2`, then
    /// all Jacobi triples of the stage weight.
    pub fn solve_stage(&mut self, total_weight: u32) -> BootResult<StageReport> {
        let pair_weight = total_weight - 2;
        assert_eq!(
            pair_weight,
            self.solved_pair_weight + 2,
            "stages must be run in order"
        );
        let created = self.install_ansatz(pair_weight);
        let frozen = vec![VAR_A3, VAR_A7, VAR_D28, VAR_E];
        let mut solver = Solver::new(frozen);
        let mut imposed = Vec::new();
        let mut forcing = Vec::new();
        let triples = triples_of_weight(total_weight);
        self.impose(&mut solver, pair_weight, &triples, &mut imposed, &mut forcing)?;
        solver.finalize();

        let unsolved: Vec<usize> = solver
            .unsolved(created.iter())
            .into_iter()
            .filter(|v| !solver.frozen.contains(v))
            .collect();
        if !unsolved.is_empty() {
            return Err(BootstrapError::Underdetermined {
                stage: total_weight,
                unsolved: unsolved
                    .iter()
                    .map(|v| self.vars.describe(&self.ctx, *v))
                    .collect(),
            });
        }
        self.apply_solutions(&solver);
        self.solved_pair_weight = pair_weight;

        // verification sweep: all residues must vanish modulo the residual
        // family (nonzero ones reappear as residual constraints)
        let mut residuals = solver.residuals.clone();
        let field = self.field();
        for &(a, b, x) in &triples {
            let (ga, gb, gx) = (GenSym::base(a), GenSym::base(b), GenSym::base(x));
            let total = (a + b + x) as i64;
            for r in 0..=(total - 2) {
                for s in 0..=(total - 2 - r) {
                    let res = self.alg.jacobi_residue(ga, gb, gx, r, s)?;
                    for (_, cf) in res.terms() {
                        let p = cf.num().primitive();
                        if !p.is_zero() && !residuals.contains(&p) {
                            residuals.push(p);
                        }
                    }
                }
            }
        }
        let _ = field;
        for r in &residuals {
            if !pool_vars(r).is_empty() {
                return Err(BootstrapError::Inconsistent {
                    stage: total_weight,
                    detail: format!("residual still contains ansatz unknowns: {r}"),
                });
            }
        }

        let free = self.named_params_in_table();
        let report = StageReport {
            stage: total_weight,
            residuals,
            free_parameters: free,
            imposed,
            forcing,
            unknowns_created: created.len(),
        };
        self.note(format!(
            "stage {total_weight}: {} unknowns, {} identities imposed, {} residual constraints",
            report.unknowns_created,
            report.imposed.len(),
            report.residuals.len()
        ));
        Ok(report)
    }

    /// Raises the table to pair weight `target` using the inductive subset
    /// of Jacobi identities (falling back to further triples of the same
    /// weight if the subset leaves anything undetermined).
    pub fn extend_inductive(&mut self, target: u32) -> BootResult<ExtendReport> {
        assert_eq!(target, self.solved_pair_weight + 2, "extend in order");
        let created = self.install_ansatz(target);
        let frozen = if self.lambda_substituted {
            vec![]
        } else {
            vec![VAR_A3, VAR_A7, VAR_D28, VAR_E]
        };
        let mut solver = Solver::new(frozen);
        let mut imposed = Vec::new();
        let mut forcing = Vec::new();

        // the determining identities: (L, W4, W^{target-4}) and
        // (W4, W^{2i}, W^{target-2-2i})
        let mut subset = vec![(2, 4, target - 4)];
        let mut a = 4;
        while 4 + a + a <= target + 2 {
            subset.push((4, a, target - 2 - a));
            a += 2;
        }
        self.impose(&mut solver, target, &subset, &mut imposed, &mut forcing)?;
        solver.finalize();

        // fall back to remaining triples if needed
        let open = |s: &Solver| -> Vec<usize> {
            s.unsolved(created.iter())
                .into_iter()
                .filter(|v| !s.frozen.contains(v))
                .collect()
        };
        if !open(&solver).is_empty() {
            let rest: Vec<(u32, u32, u32)> = triples_of_weight(target + 2)
                .into_iter()
                .filter(|t| !subset.contains(t))
                .collect();
            for t in rest {
                self.impose(&mut solver, target, &[t], &mut imposed, &mut forcing)?;
                solver.finalize();
                if open(&solver).is_empty() {
                    break;
                }
            }
        }
        let unsolved = open(&solver);
        if !unsolved.is_empty() {
            return Err(BootstrapError::Underdetermined {
                stage: target + 2,
                unsolved: unsolved
                    .iter()
                    .map(|v| self.vars.describe(&self.ctx, *v))
                    .collect(),
            });
        }
        let null_witnesses: Vec<String> = solver
            .residuals
            .iter()
            .map(|r| format!("{r}"))
            .collect();
        self.apply_solutions(&solver);
        self.solved_pair_weight = target;
        self.note(format!(
            "extend to pair weight {target}: {} unknowns, {} identities",
            created.len(),
            imposed.len()
        ));
        Ok(ExtendReport {
            pair_weight: target,
            imposed,
            forcing,
            null_witnesses,
            unknowns_created: created.len(),
        })
    }

    /// Named parameters still appearing anywhere in the table.
    pub fn named_params_in_table(&self) -> Vec<String> {
        let mut seen = [false; 4];
        for (a, b) in self.alg.table().pairs().collect::<Vec<_>>() {
            for s in self.alg.table().entry_list(a, b).unwrap() {
                for (_, c) in s.terms() {
                    for p in [c.num(), c.den()] {
                        for v in vars::param_vars(p) {
                            if (VAR_A3..=VAR_E).contains(&v) {
                                seen[v - VAR_A3] = true;
                            }
                        }
                    }
                }
            }
        }
        ["a3", "a7", "d28", "e"]
            .iter()
            .zip(seen)
            .filter(|&(_, s)| s)
            .map(|(n, _)| n.to_string())
            .collect()
    }

    /// Reads the coefficient a_{2i,2j} of W^{2i+2j-2} in W^{2i}_(1)W^{2j}.
    pub fn coeff_a(&self, i2: u32, j2: u32) -> BootResult<RatFunc> {
        let s = self
            .alg
            .gen_gen(GenSym::base(i2), 1, GenSym::base(j2))?;
        let target = Monomial::single(GenSym::base(i2 + j2 - 2));
        Ok(s.coeff(&target)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.ctx)))
    }

    /// Reads the coefficient b_{2i,2j} of dW^{2i+2j-2} in W^{2i}_(0)W^{2j}.
    pub fn coeff_b(&self, i2: u32, j2: u32) -> BootResult<RatFunc> {
        let s = self
            .alg
            .gen_gen(GenSym::base(i2), 0, GenSym::base(j2))?;
        let target = Monomial::single(GenSym::base(i2 + j2 - 2).d(1));
        Ok(s.coeff(&target)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.ctx)))
    }
}

/// Which entry slot defines a named parameter: a3 and a7 in L(z)W6(w),
/// d28 in W4(z)W6(w), e in W6(z)W6(w).
fn named_slot(a: u32, b: u32, k: i64, m: &Monomial) -> Option<usize> {
    let l = GenSym::base(2);
    let w4 = GenSym::base(4);
    if (a, b) == (2, 6) && k == 3 && *m == Monomial::single(w4) {
        return Some(VAR_A3);
    }
    if (a, b) == (2, 6) && k == 2 && *m == Monomial::from_canonical(vec![l.d(1), l]) {
        return Some(VAR_A7);
    }
    if (a, b) == (4, 6)
        && k == 0
        && *m == Monomial::from_canonical(vec![l, GenSym::base(6).d(1)])
    {
        return Some(VAR_D28);
    }
    if (a, b) == (6, 6)
        && k == 0
        && *m == Monomial::from_canonical(vec![l, GenSym::base(8).d(1)])
    {
        return Some(VAR_E);
    }
    None
}
