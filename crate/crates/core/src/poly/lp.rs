//! Exact rational linear programming.
//!
//! A dense two-phase simplex with Bland's rule on free variables (split as
//! `x = x⁺ − x⁻`). Strict inequalities are decided by maximizing a common
//! slack `t ≤ 1` with `expr − t ≥ rhs`; the system is strictly feasible iff
//! the optimum is positive.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::vector::{to_rat, Rat, RatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Gt,
    Le,
    Lt,
    Eq,
}

impl Relation {
    fn is_strict(self) -> bool {
        matches!(self, Relation::Gt | Relation::Lt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub normal: RatVec,
    pub relation: Relation,
    pub rhs: Rat,
}

impl LinearConstraint {
    pub fn new(normal: RatVec, relation: Relation, rhs: Rat) -> Self {
        Self {
            normal,
            relation,
            rhs,
        }
    }

    /// `normal · x (relation) 0` for an integer normal.
    pub fn homogeneous(normal: &[BigInt], relation: Relation) -> Self {
        Self::new(to_rat(normal), relation, Rat::zero())
    }

    pub fn is_satisfied(&self, x: &[Rat]) -> bool {
        let lhs = super::vector::dot_rat(&self.normal, x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Gt => lhs > self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, point: RatVec },
    Infeasible,
    Unbounded,
}

/// Decides feasibility of a mixed weak/strict system and returns a witness.
pub fn lp_feasible(constraints: &[LinearConstraint], dim: usize) -> Option<RatVec> {
    let strict = constraints.iter().any(|c| c.relation.is_strict());
    if !strict {
        let zero = vec![Rat::zero(); dim];
        return match maximize(&zero, constraints, dim) {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        };
    }
    // variables (x, t)
    let mut lifted = Vec::with_capacity(constraints.len() + 1);
    for c in constraints {
        let mut normal = c.normal.clone();
        let (rel, tcoef) = match c.relation {
            Relation::Gt => (Relation::Ge, -Rat::one()),
            Relation::Lt => (Relation::Le, Rat::one()),
            r => (r, Rat::zero()),
        };
        normal.push(tcoef);
        lifted.push(LinearConstraint::new(normal, rel, c.rhs.clone()));
    }
    let mut cap = vec![Rat::zero(); dim + 1];
    cap[dim] = Rat::one();
    lifted.push(LinearConstraint::new(cap.clone(), Relation::Le, Rat::one()));
    match maximize(&cap, &lifted, dim + 1) {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(dim);
            debug_assert!(constraints.iter().all(|c| c.is_satisfied(&point)));
            Some(point)
        }
        _ => None,
    }
}

/// Maximizes `objective · x` subject to weak constraints (strict relations
/// are treated as weak here).
pub fn maximize(objective: &[Rat], constraints: &[LinearConstraint], dim: usize) -> LpOutcome {
    // standard form columns: x⁺ (dim), x⁻ (dim), one slack per inequality
    let n_ineq = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let ncols = 2 * dim + n_ineq;
    let mut rows: Vec<RatVec> = Vec::with_capacity(constraints.len());
    let mut slack = 2 * dim;
    for c in constraints {
        let mut row = vec![Rat::zero(); ncols + 1];
        for j in 0..dim {
            row[j] = c.normal[j].clone();
            row[dim + j] = -c.normal[j].clone();
        }
        match c.relation {
            Relation::Ge | Relation::Gt => {
                row[slack] = -Rat::one();
                slack += 1;
            }
            Relation::Le | Relation::Lt => {
                row[slack] = Rat::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[ncols] = c.rhs.clone();
        if row[ncols].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        rows.push(row);
    }
    // minimize −objective
    let mut cost = vec![Rat::zero(); ncols];
    for j in 0..dim {
        cost[j] = -objective[j].clone();
        cost[dim + j] = objective[j].clone();
    }
    match Simplex::solve(rows, ncols, &cost) {
        SimplexResult::Infeasible => LpOutcome::Infeasible,
        SimplexResult::Unbounded => LpOutcome::Unbounded,
        SimplexResult::Optimal(y) => {
            let point: RatVec = (0..dim).map(|j| &y[j] - &y[dim + j]).collect();
            let value = super::vector::dot_rat(objective, &point);
            LpOutcome::Optimal { value, point }
        }
    }
}

enum SimplexResult {
    Optimal(RatVec),
    Infeasible,
    Unbounded,
}

struct Simplex {
    /// m rows of width `width + 1` (last entry is the right-hand side)
    tab: Vec<RatVec>,
    basis: Vec<usize>,
    width: usize,
}

impl Simplex {
    /// min cost·y, rows·y = rhs, y ≥ 0, rhs ≥ 0.
    fn solve(rows: Vec<RatVec>, ncols: usize, cost: &[Rat]) -> SimplexResult {
        let m = rows.len();
        let width = ncols + m;
        let mut tab = Vec::with_capacity(m);
        for (i, r) in rows.into_iter().enumerate() {
            let mut row = vec![Rat::zero(); width + 1];
            row[..ncols].clone_from_slice(&r[..ncols]);
            row[ncols + i] = Rat::one();
            row[width] = r[ncols].clone();
            tab.push(row);
        }
        let mut s = Simplex {
            tab,
            basis: (ncols..ncols + m).collect(),
            width,
        };

        let mut phase1 = vec![Rat::zero(); width];
        for c in phase1.iter_mut().skip(ncols) {
            *c = Rat::one();
        }
        if !s.run(&phase1, width) {
            unreachable!("phase one is bounded below by zero");
        }
        if s.objective(&phase1).is_positive() {
            return SimplexResult::Infeasible;
        }
        // drive artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < s.tab.len() {
            if s.basis[i] >= ncols {
                match (0..ncols).find(|&j| !s.tab[i][j].is_zero()) {
                    Some(j) => s.pivot(i, j),
                    None => {
                        s.tab.remove(i);
                        s.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        let mut phase2 = cost.to_vec();
        phase2.resize(width, Rat::zero());
        if !s.run(&phase2, ncols) {
            return SimplexResult::Unbounded;
        }
        let mut y = vec![Rat::zero(); ncols];
        for (i, &b) in s.basis.iter().enumerate() {
            if b < ncols {
                y[b] = s.tab[i][s.width].clone();
            }
        }
        SimplexResult::Optimal(y)
    }

    fn objective(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .enumerate()
            .fold(Rat::zero(), |acc, (i, &b)| acc + &cost[b] * &self.tab[i][self.width])
    }

    /// Bland's rule over columns `< allowed`. Returns false when unbounded.
    fn run(&mut self, cost: &[Rat], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = self
                    .basis
                    .iter()
                    .enumerate()
                    .fold(cost[j].clone(), |acc, (i, &b)| acc - &cost[b] * &self.tab[i][j]);
                reduced.is_negative()
            });
            let Some(j) = entering else { return true };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.tab.len() {
                let a = &self.tab[i][j];
                if a.is_positive() {
                    let ratio = &self.tab[i][self.width] / a;
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((i, _)) = leave else { return false };
            self.pivot(i, j);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.tab[r][c].recip();
        for x in self.tab[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.tab[r].clone();
        for (i, row) in self.tab.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &k * p;
                }
            }
        }
        self.basis[r] = c;
    }
}

/// Whether `target` is a nonnegative rational combination of `generators`.
pub fn in_cone_of(generators: &[Vec<BigInt>], target: &[Rat]) -> bool {
    let dim = generators.len();
    let n = target.len();
    let mut cons = Vec::with_capacity(n + dim);
    for row in 0..n {
        let normal: RatVec = generators
            .iter()
            .map(|g| Rat::from_integer(g[row].clone()))
            .collect();
        cons.push(LinearConstraint::new(normal, Relation::Eq, target[row].clone()));
    }
    for j in 0..dim {
        let mut e = vec![Rat::zero(); dim];
        e[j] = Rat::one();
        cons.push(LinearConstraint::new(e, Relation::Ge, Rat::zero()));
    }
    lp_feasible(&cons, dim).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vector::{rat, rat_vec};

    fn c(normal: &[i64], relation: Relation, rhs: i64) -> LinearConstraint {
        LinearConstraint::new(rat_vec(normal), relation, rat(rhs, 1))
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let cons = [c(&[1], Relation::Ge, 0), c(&[1], Relation::Le, -1)];
        assert!(lp_feasible(&cons, 1).is_none());
    }

    #[test]
    fn strict_positive_has_witness() {
        let cons = [c(&[1], Relation::Gt, 0)];
        let w = lp_feasible(&cons, 1).unwrap();
        assert_eq!(w, vec![rat(1, 1)]);
    }

    #[test]
    fn strict_pair_with_empty_interior() {
        let cons = [c(&[1], Relation::Gt, 0), c(&[1], Relation::Le, 0)];
        assert!(lp_feasible(&cons, 1).is_none());
        let weak = [c(&[1], Relation::Ge, 0), c(&[1], Relation::Le, 0)];
        assert_eq!(lp_feasible(&weak, 1).unwrap(), vec![rat(0, 1)]);
    }

    #[test]
    fn maximize_on_triangle() {
        // x + y <= 4, x <= 3, y >= 0, x >= 0; max 2x + y = 7 at (3,1)
        let cons = [
            c(&[1, 1], Relation::Le, 4),
            c(&[1, 0], Relation::Le, 3),
            c(&[0, 1], Relation::Ge, 0),
            c(&[1, 0], Relation::Ge, 0),
        ];
        match maximize(&rat_vec(&[2, 1]), &cons, 2) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(7, 1));
                assert_eq!(point, rat_vec(&[3, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            maximize(&rat_vec(&[1, 0]), &cons[2..], 2),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn redundant_equalities() {
        let cons = [
            c(&[1, 1], Relation::Eq, 2),
            c(&[2, 2], Relation::Eq, 4),
            c(&[1, -1], Relation::Gt, 0),
        ];
        let w = lp_feasible(&cons, 2).unwrap();
        assert!(cons.iter().all(|k| k.is_satisfied(&w)));
    }

    #[test]
    fn cone_membership_by_lp() {
        let gens = vec![
            crate::poly::vector::int_vec(&[1, 0]),
            crate::poly::vector::int_vec(&[1, 1]),
        ];
        assert!(in_cone_of(&gens, &rat_vec(&[2, 1])));
        assert!(!in_cone_of(&gens, &rat_vec(&[0, 1])));
    }
}
