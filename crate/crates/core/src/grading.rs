//! The rank-one grading group `H = <h_1, ..., h_t | e_1 h_1 = ... = e_t h_t>`.
//!
//! Elements are coefficient vectors over the generators. Their canonical
//! form is the unique representative `a_1 h_1 + ... + a_t h_t` with
//! `0 <= a_i < e_i` for `i >= 2`; `a_1` is unconstrained.
//!
//! With no weights (`t = 0`) the group is `Z`, generated by a single free
//! generator that plays the role of `z`.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, solve_integer_linear, IntMatrix, SmithDecomposition};

#[derive(Clone, Debug)]
pub struct GradingGroup {
    weights: Vec<i64>,
    relations: IntMatrix,
    snf: SmithDecomposition,
    phi_values: Vec<i64>,
}

impl GradingGroup {
    pub fn new(weights: &[i64]) -> Result<Self> {
        if let Some(&bad) = weights.iter().find(|&&e| e < 2) {
            return Err(Error::Weight(bad));
        }
        let t = weights.len();
        // rows e_i h_i - e_{i+1} h_{i+1}
        let mut relations = IntMatrix::zeros(t.saturating_sub(1), t);
        for i in 0..t.saturating_sub(1) {
            relations[(i, i)] = BigInt::from(weights[i]);
            relations[(i, i + 1)] = BigInt::from(-weights[i + 1]);
        }
        let snf = smith_normal_form(&relations);

        let phi_values = if t == 0 {
            vec![1]
        } else {
            let lcm = weights.iter().fold(1i64, |acc, &e| acc.lcm(&e));
            let quotients: Vec<i64> = weights.iter().map(|&e| lcm / e).collect();
            let g = quotients.iter().fold(0i64, |acc, &q| acc.gcd(&q));
            quotients.iter().map(|&q| q / g).collect()
        };

        Ok(Self {
            weights: weights.to_vec(),
            relations,
            snf,
            phi_values,
        })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of weighted generators `t`.
    pub fn t(&self) -> usize {
        self.weights.len()
    }

    /// Length of coefficient vectors: `t`, or 1 for the unweighted group `Z`.
    pub fn generator_count(&self) -> usize {
        self.t().max(1)
    }

    pub fn relation_matrix(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.snf
    }

    pub fn free_rank(&self) -> usize {
        if self.t() == 0 {
            1
        } else {
            self.t() - self.snf.rank()
        }
    }

    /// Invariant factors of the torsion subgroup `G` (those different from 1).
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.snf.nonunit_factors()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion_factors().iter().product()
    }

    /// `phi(h_i)` for every generator.
    pub fn phi_values(&self) -> &[i64] {
        &self.phi_values
    }

    pub fn zero(&self) -> GroupElement {
        self.element_unchecked(vec![0; self.generator_count()])
    }

    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        let n = self.generator_count();
        if i >= n {
            return Err(Error::Index {
                index: i,
                lo: 0,
                hi: n - 1,
            });
        }
        let mut c = vec![0; n];
        c[i] = 1;
        Ok(self.element_unchecked(c))
    }

    /// `z = h_1 + ... + h_t`.
    pub fn z(&self) -> GroupElement {
        self.element_unchecked(vec![1; self.generator_count()])
    }

    pub fn element(&self, coeffs: &[i64]) -> Result<GroupElement> {
        if coeffs.len() != self.generator_count() {
            return Err(Error::Shape(format!(
                "element has {} coefficients, group has {} generators",
                coeffs.len(),
                self.generator_count()
            )));
        }
        Ok(self.element_unchecked(coeffs.to_vec()))
    }

    fn element_unchecked(&self, coeffs: Vec<i64>) -> GroupElement {
        let canonical = self.canonical_coords(&coeffs);
        GroupElement { coeffs, canonical }
    }

    fn canonical_coords(&self, b: &[i64]) -> Vec<i64> {
        if self.t() <= 1 {
            return b.to_vec();
        }
        let e = &self.weights;
        let mut a = b.to_vec();
        let mut shift = 0;
        for i in 1..e.len() {
            a[i] = b[i].rem_euclid(e[i]);
            shift += (b[i] - a[i]) / e[i];
        }
        a[0] = b[0] + e[0] * shift;
        a
    }

    /// Canonical coordinates of `g`.
    pub fn canonical_form(&self, g: &GroupElement) -> Vec<i64> {
        g.canonical.clone()
    }

    pub fn phi(&self, g: &GroupElement) -> i64 {
        g.coeffs
            .iter()
            .zip(&self.phi_values)
            .map(|(a, p)| a * p)
            .sum()
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let c = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        self.element_unchecked(c)
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.element_unchecked(a.coeffs.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: i64, a: &GroupElement) -> GroupElement {
        self.element_unchecked(a.coeffs.iter().map(|x| k * x).collect())
    }

    /// Whether a coefficient vector lies in the relation lattice, decided by
    /// integer linear solving rather than through the canonical form.
    pub fn in_relation_lattice(&self, coeffs: &[i64]) -> Result<bool> {
        if coeffs.len() != self.generator_count() {
            return Err(Error::Shape("coefficient vector of wrong length".into()));
        }
        if self.t() <= 1 {
            return Ok(coeffs.iter().all(|&c| c == 0));
        }
        let rhs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let sol = solve_integer_linear(&self.relations.transpose(), &rhs)?;
        Ok(sol.particular.is_some())
    }

    /// Coordinates in `Z ⊕ Z/d_1 ⊕ ...`: the free coordinate first, then
    /// one residue per nonunit invariant factor.
    pub fn structure_coordinates(&self, g: &GroupElement) -> (BigInt, Vec<BigInt>) {
        if self.t() <= 1 {
            return (BigInt::from(g.coeffs[0]), Vec::new());
        }
        // u R v = D  =>  v^T R^T u^T = D^T, so v^T sends the relation
        // lattice onto the span of d_i e_i
        let x: Vec<BigInt> = g.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let y = self.snf.v.transpose().mul_vec(&x).expect("sizes agree");
        let mut torsion = Vec::new();
        for (yi, di) in y.iter().zip(&self.snf.d) {
            if !di.is_one() && !di.is_zero() {
                torsion.push(yi.mod_floor(di));
            }
        }
        let free = y[self.snf.rank()..].to_vec();
        debug_assert_eq!(free.len(), 1);
        (free[0].clone(), torsion)
    }

    /// All canonical elements `h` with `lo <= phi(h) <= hi`, ordered by
    /// `phi` and then by coordinates.
    pub fn elements_in_phi_range(&self, lo: i64, hi: i64) -> Vec<GroupElement> {
        let mut out = Vec::new();
        let n = self.generator_count();
        let bounded: Vec<i64> = if self.t() <= 1 {
            Vec::new()
        } else {
            self.weights[1..].to_vec()
        };
        let phi1 = self.phi_values[0];
        let mut tail = vec![0i64; bounded.len()];
        loop {
            let rest: i64 = tail
                .iter()
                .zip(&self.phi_values[1..])
                .map(|(a, p)| a * p)
                .sum();
            let a1_lo = Integer::div_ceil(&(lo - rest), &phi1);
            let a1_hi = Integer::div_floor(&(hi - rest), &phi1);
            for a1 in a1_lo..=a1_hi {
                let mut c = Vec::with_capacity(n);
                c.push(a1);
                c.extend_from_slice(&tail);
                out.push(self.element_unchecked(c));
            }
            // odometer over 0 <= a_i < e_i
            let mut k = 0;
            loop {
                if k == tail.len() {
                    out.sort_by(|a, b| {
                        self.phi(a)
                            .cmp(&self.phi(b))
                            .then_with(|| a.canonical.cmp(&b.canonical))
                    });
                    return out;
                }
                tail[k] += 1;
                if tail[k] < bounded[k] {
                    break;
                }
                tail[k] = 0;
                k += 1;
            }
        }
    }

    /// Human-readable structure, e.g. `Z ⊕ Z/2 ⊕ Z/2`.
    pub fn structure_label(&self) -> String {
        let mut s = String::from("Z");
        for d in self.torsion_factors() {
            s.push_str(&format!(" ⊕ Z/{d}"));
        }
        s
    }
}

/// An element of `H`; equality is equality of canonical forms.
#[derive(Clone, Debug)]
pub struct GroupElement {
    coeffs: Vec<i64>,
    canonical: Vec<i64>,
}

impl GroupElement {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn is_zero(&self) -> bool {
        self.canonical.iter().all(|&c| c == 0)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical.serialize(s)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .canonical
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| match a {
                1 => format!("h{}", i + 1),
                -1 => format!("-h{}", i + 1),
                _ => format!("{a}h{}", i + 1),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Converts an order of a torsion factor list to `u64` for reporting.
pub fn factors_u64(factors: &[BigInt]) -> Vec<u64> {
    factors
        .iter()
        .map(|d| d.to_u64().unwrap_or(u64::MAX))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_of_small_groups() {
        let h = GradingGroup::new(&[2, 3]).unwrap();
        assert_eq!(h.free_rank(), 1);
        assert!(h.torsion_factors().is_empty());
        assert_eq!(h.structure_label(), "Z");

        let h = GradingGroup::new(&[2, 2]).unwrap();
        assert_eq!(h.free_rank(), 1);
        assert_eq!(h.torsion_factors(), vec![BigInt::from(2)]);

        let h = GradingGroup::new(&[2, 2, 2]).unwrap();
        assert_eq!(h.torsion_factors(), vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(h.torsion_order(), BigInt::from(4));
        assert_eq!(h.structure_label(), "Z ⊕ Z/2 ⊕ Z/2");
    }

    #[test]
    fn rejects_small_weights() {
        assert_eq!(GradingGroup::new(&[2, 1]).unwrap_err(), Error::Weight(1));
        assert!(GradingGroup::new(&[0]).is_err());
    }

    #[test]
    fn degenerate_groups() {
        let h = GradingGroup::new(&[]).unwrap();
        assert_eq!(h.free_rank(), 1);
        assert_eq!(h.phi(&h.z()), 1);
        let h = GradingGroup::new(&[5]).unwrap();
        assert_eq!(h.free_rank(), 1);
        assert_eq!(h.phi_values(), &[1]);
        assert_eq!(h.z(), h.generator(0).unwrap());
    }

    #[test]
    fn canonical_forms() {
        let h = GradingGroup::new(&[2, 2]).unwrap();
        let g = h.element(&[0, 2]).unwrap();
        assert_eq!(h.canonical_form(&g), vec![2, 0]);

        let h = GradingGroup::new(&[2, 3]).unwrap();
        let g = h.element(&[1, -1]).unwrap();
        assert_eq!(h.canonical_form(&g), vec![-1, 2]);

        for w in [vec![2, 3], vec![2, 2, 2], vec![3, 4, 5, 2]] {
            let h = GradingGroup::new(&w).unwrap();
            assert_eq!(h.canonical_form(&h.zero()), vec![0; w.len()]);
        }
    }

    #[test]
    fn phi_values() {
        let h = GradingGroup::new(&[2, 3]).unwrap();
        assert_eq!(h.phi_values(), &[3, 2]);
        assert_eq!(h.phi(&h.z()), 5);
        let h = GradingGroup::new(&[2, 2]).unwrap();
        assert_eq!(h.phi_values(), &[1, 1]);
        assert_eq!(h.phi(&h.zero()), 0);
    }

    #[test]
    fn torsion_is_killed_by_phi() {
        let h = GradingGroup::new(&[2, 2]).unwrap();
        let torsion = h.element(&[1, -1]).unwrap();
        assert!(!torsion.is_zero());
        assert_eq!(h.phi(&torsion), 0);
        assert!(h.add(&torsion, &torsion).is_zero());
    }

    #[test]
    fn enumeration_by_phi() {
        let h = GradingGroup::new(&[2, 2, 2]).unwrap();
        let all = h.elements_in_phi_range(0, 0);
        // phi = 0 part is the torsion subgroup
        assert_eq!(all.len(), 4);
        let all = h.elements_in_phi_range(0, 3);
        assert_eq!(all.len(), 16);
        assert!(all.windows(2).all(|w| h.phi(&w[0]) <= h.phi(&w[1])));
    }

    #[test]
    fn display() {
        let h = GradingGroup::new(&[2, 3]).unwrap();
        assert_eq!(h.element(&[1, -1]).unwrap().to_string(), "-h1 + 2h2");
        assert_eq!(h.zero().to_string(), "0");
    }
}
