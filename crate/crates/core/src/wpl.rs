//! The graded coordinate ring of a weighted projective line and the
//! graded ring built from sections of a sheaf of hereditary orders, with
//! their Hilbert functions over the grading group `H`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{GradingGroup, GroupElement};
use crate::linalg::{FpMatrix, PrimeField};
use crate::p1::Point;

/// Checks `λ_3, ..., λ_t`: empty for `t <= 2`, otherwise nonzero, pairwise
/// distinct, `λ_3 = 1`.
pub fn validate_lambda(t: usize, lambda: &[BigRational]) -> Result<()> {
    let want = t.saturating_sub(2);
    if lambda.len() != want {
        return Err(Error::Lambda(format!(
            "{t} weights need {want} parameters, got {}",
            lambda.len()
        )));
    }
    if let Some(first) = lambda.first() {
        if !first.is_one() {
            return Err(Error::Lambda(format!("λ3 must be 1, got {first}")));
        }
    }
    for (k, l) in lambda.iter().enumerate() {
        if l.is_zero() {
            return Err(Error::Lambda("parameters must be nonzero".into()));
        }
        if lambda[..k].contains(l) {
            return Err(Error::Lambda(format!("parameter {l} repeated")));
        }
    }
    Ok(())
}

/// A Möbius transformation `z -> (a z + b) / (c z + d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mobius {
    #[serde(serialize_with = "ser_rationals")]
    pub matrix: [BigRational; 4],
}

fn ser_rationals<S: serde::Serializer>(
    m: &[BigRational; 4],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = m.iter().map(|x| x.to_string()).collect();
    v.serialize(s)
}

impl Mobius {
    pub fn identity() -> Self {
        let (o, z) = (BigRational::one(), BigRational::zero());
        Self {
            matrix: [o.clone(), z.clone(), z, o],
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let [a, b, c, d] = &self.matrix;
        let (num, den) = match p {
            Point::Infinity => (a.clone(), c.clone()),
            Point::Finite(x) => (a * x + b, c * x + d),
        };
        if den.is_zero() {
            Point::Infinity
        } else {
            Point::Finite(num / den)
        }
    }
}

/// Homogeneous coordinates `(a : b)` with `z = a / b`.
fn homogeneous(p: &Point) -> (BigRational, BigRational) {
    match p {
        Point::Infinity => (BigRational::one(), BigRational::zero()),
        Point::Finite(x) => (x.clone(), BigRational::one()),
    }
}

fn bracket(p: &(BigRational, BigRational), q: &(BigRational, BigRational)) -> BigRational {
    &p.0 * &q.1 - &q.0 * &p.1
}

/// Parameters read off from the ramification points, together with the
/// coordinate change used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaFromPoints {
    pub transform: Mobius,
    pub normalized: Vec<Point>,
    #[serde(serialize_with = "ser_vec_rational")]
    pub lambda: Vec<BigRational>,
}

fn ser_vec_rational<S: serde::Serializer>(
    v: &[BigRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    v.serialize(s)
}

/// Moves `x_1, x_2, x_3` to `inf, 0, 1` and returns `λ_i = x_i` for
/// `i >= 3` in the new coordinate. With fewer than three points no
/// relation exists and `λ` is empty.
pub fn lambda_from_points(points: &[Point]) -> Result<LambdaFromPoints> {
    for (k, p) in points.iter().enumerate() {
        if points[..k].contains(p) {
            return Err(Error::Spec(format!("point {p} repeated")));
        }
    }
    if points.len() < 3 {
        return Ok(LambdaFromPoints {
            transform: Mobius::identity(),
            normalized: points.to_vec(),
            lambda: Vec::new(),
        });
    }
    let (x1, x2, x3) = (
        homogeneous(&points[0]),
        homogeneous(&points[1]),
        homogeneous(&points[2]),
    );
    // cross-ratio z -> [z,x2][x3,x1] / ([z,x1][x3,x2])
    let k1 = bracket(&x3, &x1);
    let k2 = bracket(&x3, &x2);
    let transform = Mobius {
        matrix: [&k1 * &x2.1, -(&k1 * &x2.0), &k2 * &x1.1, -(&k2 * &x1.0)],
    };
    let normalized: Vec<Point> = points.iter().map(|p| transform.apply(p)).collect();
    let lambda = normalized[2..]
        .iter()
        .map(|p| match p {
            Point::Finite(x) => Ok(x.clone()),
            Point::Infinity => Err(Error::Lambda("normalization sent a point to inf".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    validate_lambda(points.len(), &lambda)?;
    Ok(LambdaFromPoints {
        transform,
        normalized,
        lambda,
    })
}

/// Admissible parameters drawn from a seeded generator: `λ_3 = 1`, the
/// others distinct rationals outside `{0, 1}`.
pub fn random_lambda(t: usize, rng: &mut impl Rng) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::new();
    if t < 3 {
        return out;
    }
    out.push(BigRational::one());
    while out.len() < t - 2 {
        let num: i64 = rng.gen_range(-999..=999);
        let den: i64 = rng.gen_range(1..=97);
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        if !x.is_zero() && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A generator of the graded ring and its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variable {
    pub name: String,
    pub degree: Vec<i64>,
    pub phi: i64,
}

/// The ring `k[u_1, ..., u_t] / (u_i^{e_i} - u_2^{e_2} + λ_i u_1^{e_1})`
/// graded by `H`, `deg u_i = h_i`.
///
/// For `t = 1` the ring is `k[u_1, v]` with `deg v = e_1 h_1`; for `t = 0`
/// it is `k[x, y]` with both variables in degree `z`.
#[derive(Clone, Debug)]
pub struct GradedRingSpec {
    group: GradingGroup,
    lambda: Vec<BigRational>,
    variables: Vec<Variable>,
}

impl GradedRingSpec {
    pub fn new(weights: &[i64], lambda: Vec<BigRational>) -> Result<Self> {
        let group = GradingGroup::new(weights)?;
        validate_lambda(weights.len(), &lambda)?;
        let phi = group.phi_values().to_vec();
        let variables = match weights.len() {
            0 => ["x", "y"]
                .iter()
                .map(|n| Variable {
                    name: n.to_string(),
                    degree: vec![1],
                    phi: phi[0],
                })
                .collect(),
            1 => vec![
                Variable {
                    name: "u1".into(),
                    degree: vec![1],
                    phi: phi[0],
                },
                Variable {
                    name: "v".into(),
                    degree: vec![weights[0]],
                    phi: phi[0] * weights[0],
                },
            ],
            t => (0..t)
                .map(|i| {
                    let mut degree = vec![0; t];
                    degree[i] = 1;
                    Variable {
                        name: format!("u{}", i + 1),
                        degree,
                        phi: phi[i],
                    }
                })
                .collect(),
        };
        Ok(Self {
            group,
            lambda,
            variables,
        })
    }

    /// Parameters from points via [`lambda_from_points`].
    pub fn from_points(weights: &[i64], points: &[Point]) -> Result<Self> {
        if points.len() != weights.len() {
            return Err(Error::Spec(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        Self::new(weights, lambda_from_points(points)?.lambda)
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn weights(&self) -> &[i64] {
        self.group.weights()
    }

    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    /// Normal monomials: exponent of `u_i` below `e_i` for `i >= 3`.
    fn exponent_caps(&self) -> Vec<Option<i64>> {
        let w = self.weights();
        (0..self.variables.len())
            .map(|k| {
                if w.len() >= 3 && k >= 2 {
                    Some(w[k])
                } else {
                    None
                }
            })
            .collect()
    }

    /// All exponent vectors of degree `h`, optionally capped per variable.
    fn monomials(&self, h: &GroupElement, caps: &[Option<i64>]) -> Vec<Vec<i64>> {
        let target = self.group.phi(h);
        let mut out = Vec::new();
        if target < 0 {
            return out;
        }
        let mut current = vec![0i64; self.variables.len()];
        self.enumerate(0, target, caps, &mut current, h, &mut out);
        out
    }

    fn enumerate(
        &self,
        k: usize,
        remaining: i64,
        caps: &[Option<i64>],
        current: &mut Vec<i64>,
        h: &GroupElement,
        out: &mut Vec<Vec<i64>>,
    ) {
        if k == self.variables.len() {
            if remaining == 0 && &self.degree_of(current) == h {
                out.push(current.clone());
            }
            return;
        }
        let var = &self.variables[k];
        let mut max = remaining / var.phi;
        if let Some(c) = caps[k] {
            max = max.min(c - 1);
        }
        for a in 0..=max {
            current[k] = a;
            self.enumerate(k + 1, remaining - a * var.phi, caps, current, h, out);
        }
        current[k] = 0;
    }

    fn degree_of(&self, exps: &[i64]) -> GroupElement {
        let mut coeffs = vec![0i64; self.group.generator_count()];
        for (a, v) in exps.iter().zip(&self.variables) {
            for (c, d) in coeffs.iter_mut().zip(&v.degree) {
                *c += a * d;
            }
        }
        self.group
            .element(&coeffs)
            .expect("degree has the right length")
    }

    /// Relations `u_i^{e_i} - u_2^{e_2} + λ_i u_1^{e_1}` as sparse
    /// polynomials `(exponents, coefficient)`.
    fn relations(&self) -> Vec<Vec<(Vec<i64>, BigRational)>> {
        let w = self.weights();
        let t = w.len();
        let pure = |i: usize| {
            let mut v = vec![0i64; t];
            v[i] = w[i];
            v
        };
        (2..t)
            .map(|i| {
                vec![
                    (pure(i), BigRational::one()),
                    (pure(1), -BigRational::one()),
                    (pure(0), self.lambda[i - 2].clone()),
                ]
            })
            .collect()
    }

    /// Degree of every relation: `e_1 h_1`.
    fn relation_degree(&self) -> GroupElement {
        let mut c = vec![0i64; self.group.generator_count()];
        c[0] = self.weights()[0];
        self.group.element(&c).expect("valid length")
    }
}

/// `dim R_h` counted by normal monomials.
pub fn hilbert_wpl(spec: &GradedRingSpec, h: &GroupElement) -> usize {
    let caps = spec.exponent_caps();
    spec.monomials(h, &caps).len()
}

/// `dim R_h` with no normal-form assumption: all monomials of degree `h`
/// modulo the span of every relation multiple `m * r`, by rank over `F_p`.
/// Fails when `phi(h)` exceeds `bound`.
pub fn oracle_hilbert(
    spec: &GradedRingSpec,
    h: &GroupElement,
    field: PrimeField,
    bound: i64,
) -> Result<usize> {
    let phi = spec.group.phi(h);
    if phi > bound {
        return Err(Error::Bound { phi, bound });
    }
    let free = vec![None; spec.variables.len()];
    let monos = spec.monomials(h, &free);
    let relations = spec.relations();
    if monos.is_empty() || relations.is_empty() {
        return Ok(monos.len());
    }
    let index: HashMap<&[i64], usize> = monos
        .iter()
        .enumerate()
        .map(|(k, m)| (m.as_slice(), k))
        .collect();
    let rest = spec.group.add(h, &spec.group.neg(&spec.relation_degree()));
    let multipliers = spec.monomials(&rest, &free);
    let mut rows = Vec::with_capacity(multipliers.len() * relations.len());
    for m in &multipliers {
        for rel in &relations {
            let mut row = vec![0u64; monos.len()];
            for (exp, coeff) in rel {
                let prod: Vec<i64> = m.iter().zip(exp).map(|(a, b)| a + b).collect();
                let col = index[prod.as_slice()];
                row[col] = field.add(row[col], field.reduce_rational(coeff)?);
            }
            rows.push(row);
        }
    }
    let rank = FpMatrix::from_row_vecs(monos.len(), &rows, field).rank();
    Ok(monos.len() - rank)
}

/// Dimension of the degree-`h` piece of the order-side ring, the space of
/// global sections of `O(Σ ⌊p_i / e_i⌋ x_i)` for any `p ∈ N^t` with
/// `Σ p_i h_i = h`. Every such `p` gives the same divisor degree; this is
/// checked, and a disagreement is reported as an error.
pub fn hilbert_order_side(group: &GradingGroup, h: &GroupElement) -> Result<usize> {
    let e = group.weights();
    let phi = group.phi(h);
    if phi < 0 {
        return Ok(0);
    }
    match e.len() {
        // the ordinary projective line
        0 => return Ok((h.canonical()[0] + 1).max(0) as usize),
        1 => {
            let p = h.canonical()[0];
            return Ok(Integer::div_floor(&p, &e[0]) as usize + 1);
        }
        _ => {}
    }
    let phis = group.phi_values();
    let mut value: Option<i64> = None;
    let mut p = vec![0i64; e.len()];
    let mut conflict = None;
    order_side_walk(group, h, phis, 0, phi, &mut p, &mut value, &mut conflict);
    if let Some((a, b)) = conflict {
        return Err(Error::Spec(format!(
            "order-side divisor degree not constant on degree {h}: {a} vs {b}"
        )));
    }
    Ok(value.map_or(0, |d| (d + 1).max(0) as usize))
}

#[allow(clippy::too_many_arguments)]
fn order_side_walk(
    group: &GradingGroup,
    h: &GroupElement,
    phis: &[i64],
    k: usize,
    remaining: i64,
    p: &mut Vec<i64>,
    value: &mut Option<i64>,
    conflict: &mut Option<(i64, i64)>,
) {
    if conflict.is_some() {
        return;
    }
    if k == p.len() {
        if remaining != 0 {
            return;
        }
        let g = group.element(p).expect("valid length");
        if &g != h {
            return;
        }
        let e = group.weights();
        let d: i64 = p.iter().zip(e).map(|(a, ei)| a.div_floor(ei)).sum();
        match *value {
            None => *value = Some(d),
            Some(v) if v != d => *conflict = Some((v, d)),
            _ => {}
        }
        return;
    }
    for a in 0..=remaining / phis[k] {
        p[k] = a;
        order_side_walk(
            group,
            h,
            phis,
            k + 1,
            remaining - a * phis[k],
            p,
            value,
            conflict,
        );
    }
    p[k] = 0;
}

/// One degree of a Hilbert comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: Vec<i64>,
    pub phi: i64,
    pub dim_wpl: usize,
    pub dim_order: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_oracle: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub weights: Vec<i64>,
    #[serde(serialize_with = "ser_vec_rational")]
    pub lambda: Vec<BigRational>,
    pub max_phi: i64,
    pub rows: Vec<HilbertRow>,
    pub first_mismatch: Option<HilbertRow>,
}

impl HilbertReport {
    pub fn all_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the two Hilbert functions for every canonical `h` with
/// `0 <= phi(h) <= max_phi`. With `oracle` set, each row also records the
/// rank-based dimension and a disagreement with it counts as a mismatch.
pub fn verify_hilbert_match(
    spec: &GradedRingSpec,
    max_phi: i64,
    oracle: Option<PrimeField>,
) -> Result<HilbertReport> {
    if max_phi < 1 {
        return Err(Error::Bound {
            phi: max_phi,
            bound: 1,
        });
    }
    let mut rows = Vec::new();
    let mut first_mismatch = None;
    for h in spec.group.elements_in_phi_range(0, max_phi) {
        let dim_wpl = hilbert_wpl(spec, &h);
        let dim_order = hilbert_order_side(&spec.group, &h)?;
        let dim_oracle = match oracle {
            Some(f) => Some(oracle_hilbert(spec, &h, f, max_phi)?),
            None => None,
        };
        let matches = dim_wpl == dim_order && dim_oracle.is_none_or(|d| d == dim_wpl);
        let row = HilbertRow {
            degree: h.canonical().to_vec(),
            phi: spec.group.phi(&h),
            dim_wpl,
            dim_order,
            matches,
            dim_oracle,
        };
        if !matches && first_mismatch.is_none() {
            first_mismatch = Some(row.clone());
        }
        rows.push(row);
    }
    Ok(HilbertReport {
        weights: spec.weights().to_vec(),
        lambda: spec.lambda.clone(),
        max_phi,
        rows,
        first_mismatch,
    })
}

/// Rational parsing for `λ` given on the command line: `5`, `-3/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Lambda(format!("cannot parse {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn pts(s: &[&str]) -> Vec<Point> {
        s.iter().map(|p| p.parse().unwrap()).collect()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            lambda_from_points(&pts(&["inf", "0", "1"])).unwrap().lambda,
            [q(1)]
        );
        assert_eq!(
            lambda_from_points(&pts(&["inf", "0", "1", "5"]))
                .unwrap()
                .lambda,
            [q(1), q(5)]
        );
        let swapped = lambda_from_points(&pts(&["0", "inf", "1"])).unwrap();
        assert_eq!(swapped.lambda, [q(1)]);
        assert_eq!(swapped.normalized, pts(&["inf", "0", "1"]));
        assert_eq!(
            swapped.transform.apply(&"2".parse().unwrap()),
            Point::Finite(BigRational::new(1.into(), 2.into()))
        );
        assert!(lambda_from_points(&pts(&["0", "1"]))
            .unwrap()
            .lambda
            .is_empty());
    }

    #[test]
    fn lambda_validation() {
        assert!(validate_lambda(3, &[q(2)]).is_err());
        assert!(validate_lambda(4, &[q(1), q(1)]).is_err());
        assert!(validate_lambda(4, &[q(1), q(0)]).is_err());
        assert!(validate_lambda(2, &[q(1)]).is_err());
        assert!(validate_lambda(4, &[q(1), q(7)]).is_ok());
    }

    #[test]
    fn wpl_examples() {
        let spec = GradedRingSpec::new(&[2, 2, 2], vec![q(1)]).unwrap();
        let g = spec.group();
        let h1 = g.generator(0).unwrap();
        let two_h1 = g.scale(2, &h1);
        assert_eq!(hilbert_wpl(&spec, &h1), 1);
        assert_eq!(hilbert_wpl(&spec, &two_h1), 2);
        assert_eq!(hilbert_wpl(&spec, &g.zero()), 1);
        assert_eq!(hilbert_wpl(&spec, &g.neg(&h1)), 0);
        let f = PrimeField::default();
        assert_eq!(oracle_hilbert(&spec, &two_h1, f, 12).unwrap(), 2);
        assert_eq!(oracle_hilbert(&spec, &g.zero(), f, 12).unwrap(), 1);
        assert_eq!(hilbert_order_side(g, &h1).unwrap(), 1);
        assert_eq!(hilbert_order_side(g, &two_h1).unwrap(), 2);
        assert!(oracle_hilbert(&spec, &g.scale(20, &h1), f, 12).is_err());
    }

    #[test]
    fn order_side_trivial() {
        let g = GradingGroup::new(&[2, 3]).unwrap();
        assert_eq!(hilbert_order_side(&g, &g.zero()).unwrap(), 1);
    }

    #[test]
    fn oracle_matches_on_237() {
        let spec = GradedRingSpec::new(&[2, 3, 7], vec![q(1)]).unwrap();
        let z = spec.group().z();
        let f = PrimeField::default();
        assert_eq!(
            oracle_hilbert(&spec, &z, f, 100).unwrap(),
            hilbert_wpl(&spec, &z)
        );
    }

    #[test]
    fn degenerate_branches() {
        let spec = GradedRingSpec::new(&[], vec![]).unwrap();
        let r = verify_hilbert_match(&spec, 5, None).unwrap();
        let dims: Vec<usize> = r.rows.iter().map(|r| r.dim_wpl).collect();
        assert_eq!(dims, [1, 2, 3, 4, 5, 6]);
        assert!(r.all_match());

        let spec = GradedRingSpec::new(&[3], vec![]).unwrap();
        let r = verify_hilbert_match(&spec, 12, Some(PrimeField::default())).unwrap();
        assert!(r.all_match());
        for row in &r.rows {
            assert_eq!(row.dim_order as i64, row.degree[0] / 3 + 1);
        }
    }

    #[test]
    fn full_match_222() {
        let spec = GradedRingSpec::from_points(&[2, 2, 2], &pts(&["inf", "0", "1"])).unwrap();
        let r = verify_hilbert_match(&spec, 12, Some(PrimeField::default())).unwrap();
        assert!(r.all_match(), "{:?}", r.first_mismatch);
    }

    #[test]
    fn random_lambda_admissible() {
        let mut rng = seeded_rng(7);
        for t in 0..6 {
            let l = random_lambda(t, &mut rng);
            validate_lambda(t, &l).unwrap();
        }
    }
}
